//! Boards, positions and residual masks.
//!
//! Vertices are dense ids `0..n`. A residual board (the graph with some
//! vertices already visited) is always a `(Position, VertexMask)` pair; the
//! graph itself is never copied during search.

mod io;
mod mask;

use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::sync::Arc;

pub use io::{
    parse_directed, parse_graph, parse_position, serialize_directed, serialize_edgelist,
    serialize_graph, serialize_position, Format, Location, ParseError, ParsedPosition,
};
pub use mask::VertexMask;

/// Largest supported board.
pub const MAX_VERTICES: usize = 1 << 20;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for {vertex_count} vertices")]
    OutOfRange { vertex: usize, vertex_count: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("adjacency is not symmetric at {0}-{1}")]
    Asymmetric(usize, usize),
    #[error("graph has {0} vertices, limit is {MAX_VERTICES}")]
    TooLarge(usize),
}

/// Undirected simple graph with sorted adjacency lists.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct Graph {
    adjacency: Vec<Vec<usize>>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("vertices", &self.vertex_count())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

impl Graph {
    /// Graph with `n` isolated vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            adjacency: vec![Vec::new(); n],
        }
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n > MAX_VERTICES {
            return Err(GraphError::TooLarge(n));
        }
        let mut adjacency = vec![Vec::new(); n];
        let mut seen = BTreeSet::new();
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::OutOfRange {
                        vertex: w,
                        vertex_count: n,
                    });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            let key = (u.min(v), u.max(v));
            if !seen.insert(key) {
                return Err(GraphError::DuplicateEdge(key.0, key.1));
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        let g = Graph { adjacency };
        debug_assert!(g.check_invariants().is_ok());
        Ok(g)
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.vertex_count() && self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    /// Neighbors of `v` that are not removed in `mask`.
    pub fn live_neighbors<'a>(
        &'a self,
        v: usize,
        mask: &'a VertexMask,
    ) -> impl Iterator<Item = usize> + 'a {
        self.adjacency[v].iter().copied().filter(move |&w| !mask.contains(w))
    }

    pub fn live_degree(&self, v: usize, mask: &VertexMask) -> usize {
        self.live_neighbors(v, mask).count()
    }

    /// O(V + E) check of simplicity, symmetry and range.
    pub fn check_invariants(&self) -> Result<(), GraphError> {
        let n = self.vertex_count();
        for (u, list) in self.adjacency.iter().enumerate() {
            for pair in list.windows(2) {
                if pair[0] >= pair[1] {
                    return Err(GraphError::DuplicateEdge(u.min(pair[0]), u.max(pair[0])));
                }
            }
            for &v in list {
                if v >= n {
                    return Err(GraphError::OutOfRange {
                        vertex: v,
                        vertex_count: n,
                    });
                }
                if v == u {
                    return Err(GraphError::SelfLoop(u));
                }
                if self.adjacency[v].binary_search(&u).is_err() {
                    return Err(GraphError::Asymmetric(u, v));
                }
            }
        }
        Ok(())
    }

    /// Two-coloring of the graph, if one exists. Isolated vertices get side 0.
    pub fn bipartition(&self) -> Option<Vec<u8>> {
        let n = self.vertex_count();
        let mut side = vec![u8::MAX; n];
        let mut queue = VecDeque::new();
        for start in 0..n {
            if side[start] != u8::MAX {
                continue;
            }
            side[start] = 0;
            queue.push_back(start);
            while let Some(u) = queue.pop_front() {
                for &v in self.neighbors(u) {
                    if side[v] == u8::MAX {
                        side[v] = 1 - side[u];
                        queue.push_back(v);
                    } else if side[v] == side[u] {
                        return None;
                    }
                }
            }
        }
        Some(side)
    }

    /// Vertices reachable from `start` through live vertices (including `start`).
    pub fn live_component(&self, start: usize, mask: &VertexMask) -> Vec<usize> {
        let mut seen = vec![false; self.vertex_count()];
        let mut out = vec![start];
        seen[start] = true;
        let mut i = 0;
        while i < out.len() {
            let u = out[i];
            i += 1;
            for v in self.live_neighbors(u, mask) {
                if !seen[v] {
                    seen[v] = true;
                    out.push(v);
                }
            }
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.vertex_count() == 0
            || self.live_component(0, &VertexMask::new(self.vertex_count())).len()
                == self.vertex_count()
    }
}

/// Incremental builder used by the constructions and reductions.
#[derive(Debug, Default, Clone)]
pub struct GraphBuilder {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
}

impl GraphBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_vertices(n: usize) -> Self {
        GraphBuilder {
            vertex_count: n,
            edges: Vec::new(),
        }
    }

    pub fn add_vertex(&mut self) -> usize {
        self.vertex_count += 1;
        self.vertex_count - 1
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        self.edges.push((u, v));
    }

    /// Copies `g` into the builder, returning the id offset of its vertex 0.
    pub fn add_graph(&mut self, g: &Graph) -> usize {
        let offset = self.vertex_count;
        self.vertex_count += g.vertex_count();
        self.edges
            .extend(g.edges().map(|(u, v)| (u + offset, v + offset)));
        offset
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn build(self) -> Result<Graph, GraphError> {
        Graph::from_edges(self.vertex_count, self.edges)
    }
}

/// An Undirected Geography position: a board and the token vertex.
#[derive(Clone, PartialEq, Eq)]
pub struct Position {
    graph: Arc<Graph>,
    token: usize,
}

impl fmt::Debug for Position {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Position")
            .field("graph", &*self.graph)
            .field("token", &self.token)
            .finish()
    }
}

impl Position {
    pub fn new(graph: impl Into<Arc<Graph>>, token: usize) -> Result<Self, GraphError> {
        let graph = graph.into();
        if token >= graph.vertex_count() {
            return Err(GraphError::OutOfRange {
                vertex: token,
                vertex_count: graph.vertex_count(),
            });
        }
        Ok(Position { graph, token })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn shared_graph(&self) -> &Arc<Graph> {
        &self.graph
    }

    pub fn token(&self) -> usize {
        self.token
    }

    /// Same board, token moved to `v` (no validity check beyond range).
    pub fn with_token(&self, v: usize) -> Self {
        assert!(v < self.graph.vertex_count(), "token {v} out of range");
        Position {
            graph: Arc::clone(&self.graph),
            token: v,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.graph.vertex_count()
    }

    /// Empty removal mask sized for this board.
    pub fn fresh_mask(&self) -> VertexMask {
        VertexMask::new(self.graph.vertex_count())
    }
}

/// Live neighbors of the token, ascending. Empty means the mover has lost.
pub fn neighbors_alive(p: &Position, mask: &VertexMask) -> Vec<usize> {
    debug_assert!(!mask.contains(p.token()), "token vertex is removed");
    p.graph().live_neighbors(p.token(), mask).collect()
}

/// Directed graph for Generalized Geography inputs.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct DirectedGraph {
    out: Vec<Vec<usize>>,
}

impl fmt::Debug for DirectedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("DirectedGraph")
            .field("vertices", &self.vertex_count())
            .field("arcs", &self.arcs().collect::<Vec<_>>())
            .finish()
    }
}

impl DirectedGraph {
    pub fn from_arcs<I>(n: usize, arcs: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n > MAX_VERTICES {
            return Err(GraphError::TooLarge(n));
        }
        let mut out = vec![Vec::new(); n];
        for (u, v) in arcs {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::OutOfRange {
                        vertex: w,
                        vertex_count: n,
                    });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            out[u].push(v);
        }
        for (u, list) in out.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                return Err(GraphError::DuplicateEdge(u, w[0]));
            }
        }
        Ok(DirectedGraph { out })
    }

    pub fn vertex_count(&self) -> usize {
        self.out.len()
    }

    pub fn arc_count(&self) -> usize {
        self.out.iter().map(Vec::len).sum()
    }

    pub fn successors(&self, v: usize) -> &[usize] {
        &self.out[v]
    }

    /// Arcs `(tail, head)` in lexicographic order.
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.out
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().map(move |&v| (u, v)))
    }

    /// Underlying undirected graph (antiparallel arcs collapse to one edge).
    pub fn underlying(&self) -> Graph {
        let edges: BTreeSet<(usize, usize)> =
            self.arcs().map(|(u, v)| (u.min(v), u.max(v))).collect();
        Graph::from_edges(self.vertex_count(), edges).expect("arcs are validated")
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DirectedPosition {
    graph: Arc<DirectedGraph>,
    token: usize,
}

impl DirectedPosition {
    pub fn new(graph: impl Into<Arc<DirectedGraph>>, token: usize) -> Result<Self, GraphError> {
        let graph = graph.into();
        if token >= graph.vertex_count() {
            return Err(GraphError::OutOfRange {
                vertex: token,
                vertex_count: graph.vertex_count(),
            });
        }
        Ok(DirectedPosition { graph, token })
    }

    pub fn graph(&self) -> &DirectedGraph {
        &self.graph
    }

    pub fn token(&self) -> usize {
        self.token
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path3() -> Position {
        Position::new(Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap(), 1).unwrap()
    }

    #[test]
    fn neighbors_of_middle_vertex() {
        let p = path3();
        assert_eq!(neighbors_alive(&p, &p.fresh_mask()), vec![0, 2]);
        let mut mask = p.fresh_mask();
        mask.insert(0);
        assert_eq!(neighbors_alive(&p, &mask), vec![2]);
    }

    #[test]
    fn isolated_token_is_terminal() {
        let p = Position::new(Graph::empty(1), 0).unwrap();
        assert!(neighbors_alive(&p, &p.fresh_mask()).is_empty());
    }

    #[test]
    fn rejects_bad_edges() {
        assert_eq!(
            Graph::from_edges(2, [(0, 0)]),
            Err(GraphError::SelfLoop(0))
        );
        assert_eq!(
            Graph::from_edges(2, [(0, 1), (1, 0)]),
            Err(GraphError::DuplicateEdge(0, 1))
        );
        assert!(matches!(
            Graph::from_edges(2, [(0, 2)]),
            Err(GraphError::OutOfRange { vertex: 2, .. })
        ));
        assert!(Position::new(Graph::empty(2), 2).is_err());
    }

    #[test]
    fn bipartition_detects_odd_cycles() {
        let tri = Graph::from_edges(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        assert!(tri.bipartition().is_none());
        let sq = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
        assert_eq!(sq.bipartition().unwrap(), vec![0, 1, 0, 1]);
    }

    #[test]
    fn directed_rejects_duplicates_but_allows_antiparallel() {
        assert!(DirectedGraph::from_arcs(2, [(0, 1), (1, 0)]).is_ok());
        assert!(DirectedGraph::from_arcs(2, [(0, 1), (0, 1)]).is_err());
        let d = DirectedGraph::from_arcs(2, [(0, 1), (1, 0)]).unwrap();
        assert_eq!(d.underlying().edge_count(), 1);
    }
}
