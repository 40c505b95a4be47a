//! Transformations between Geography rulesets and value-shaping gadgets.

mod directed;
mod uno;

pub use directed::{solve_directed, DirectedSolver};
pub use uno::{label_for_uno, playability_graph, uno_from_labeling, UnoLabeling};

use crate::constructor::attach_value_gadgets;
use crate::graph::{DirectedPosition, Graph, GraphBuilder, Position};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ReductionError {
    #[error("invalid value range: {0}")]
    InvalidRange(String),
    #[error("graph is not bipartite")]
    NotBipartite,
    #[error("no color/rank labeling: {0}")]
    LabelingConflict(String),
}

/// Vertex ids of one directed-edge gadget. `x` and `y` are the arc's
/// original endpoints.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct ArcGadget {
    pub x: usize,
    pub a: usize,
    pub a0: usize,
    pub b: usize,
    pub c: usize,
    pub c0: usize,
    pub f: usize,
    pub d: usize,
    pub d0: usize,
    pub y: usize,
}

impl ArcGadget {
    /// The ten gadget edges.
    pub fn edges(&self) -> [(usize, usize); 10] {
        [
            (self.x, self.a),
            (self.a, self.a0),
            (self.a, self.b),
            (self.b, self.c),
            (self.c, self.c0),
            (self.b, self.f),
            (self.c, self.d),
            (self.d, self.d0),
            (self.f, self.d),
            (self.d, self.y),
        ]
    }
}

/// Where [`gg_to_ug`] put everything.
#[derive(Debug, Clone, Default, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct GadgetMap {
    /// Number of original vertices; they keep ids `0..original_count`.
    pub original_count: usize,
    /// Pendant leaf of each original vertex.
    pub singletons: Vec<usize>,
    /// One gadget per arc, in arc order.
    pub arcs: Vec<ArcGadget>,
}

/// Undirected position whose value is `*` when the directed position is a
/// loss for the mover and at least `*2` otherwise.
///
/// Vertex order: originals, then one singleton per original, then per arc
/// `a, a0, b, c, c0, f, d, d0`.
pub fn gg_to_ug(dp: &DirectedPosition) -> (Position, GadgetMap) {
    let dg = dp.graph();
    let n = dg.vertex_count();
    let mut b = GraphBuilder::with_vertices(n);
    let mut map = GadgetMap {
        original_count: n,
        ..GadgetMap::default()
    };
    for v in 0..n {
        let v0 = b.add_vertex();
        b.add_edge(v, v0);
        map.singletons.push(v0);
    }
    for (x, y) in dg.arcs() {
        let mut next = || b.add_vertex();
        let g = ArcGadget {
            x,
            a: next(),
            a0: next(),
            b: next(),
            c: next(),
            c0: next(),
            f: next(),
            d: next(),
            d0: next(),
            y,
        };
        for (u, v) in g.edges() {
            b.add_edge(u, v);
        }
        map.arcs.push(g);
    }
    let graph = b.build().expect("gadgets are vertex-disjoint");
    let p = Position::new(graph, dp.token()).expect("token is an original vertex");
    (p, map)
}

/// Prepends `start - start2 - s` with a pendant leaf on each of `start` and
/// `start2`. The new token `start` is `*` iff the old position was `*`, and
/// `*2` otherwise.
///
/// Vertex order: old board, then `start, start0, start2, start20`.
pub fn add_prelude(p: &Position) -> Position {
    let mut b = GraphBuilder::new();
    b.add_graph(p.graph());
    let start = b.add_vertex();
    let start0 = b.add_vertex();
    let start2 = b.add_vertex();
    let start20 = b.add_vertex();
    b.add_edge(start, start0);
    b.add_edge(start, start2);
    b.add_edge(start2, start20);
    b.add_edge(start2, p.token());
    Position::new(b.build().expect("prelude is fresh"), start).expect("start exists")
}

/// Extends a position of value `*(from_k - 1)` or `*from_k` to one of value
/// `*(to_k - 1)` or `*to_k`, preserving which of the two it is.
///
/// Chain vertex `v_i` (`from_k < i <= to_k`) gets value gadgets
/// `0, *, ..., *(i - 2)` and an edge to `v_{i-1}`; `v_{from_k}` is the input
/// token.
pub fn shift_nimber_chain(p: &Position, from_k: u32, to_k: u32) -> Result<Position, ReductionError> {
    if from_k < 2 || to_k < from_k {
        return Err(ReductionError::InvalidRange(format!(
            "need 2 <= from ({from_k}) <= to ({to_k})"
        )));
    }
    let mut graph: Graph = p.graph().clone();
    let mut prev = p.token();
    for i in from_k + 1..=to_k {
        let mut b = GraphBuilder::new();
        b.add_graph(&graph);
        let vi = b.add_vertex();
        b.add_edge(vi, prev);
        let with_vertex = b.build().expect("chain vertex is fresh");
        let values: Vec<u32> = (0..=i - 2).collect();
        graph = attach_value_gadgets(&with_vertex, vi, &values).0;
        prev = vi;
    }
    Ok(Position::new(graph, prev).expect("chain end exists"))
}

/// A position of value `*target_p` if `p` is `*k`, and `*k` if `p` is
/// `*(k - 1)`.
///
/// The new token `v_p` has value gadgets `0..*(k - 1)` and
/// `*(k + 1)..*(target_p - 1)`, plus an edge to the old token.
pub fn build_separation_instance(
    p: &Position,
    k: u32,
    target_p: u32,
) -> Result<Position, ReductionError> {
    if k < 2 || target_p <= k {
        return Err(ReductionError::InvalidRange(format!(
            "need 2 <= k ({k}) < target ({target_p})"
        )));
    }
    let mut b = GraphBuilder::new();
    b.add_graph(p.graph());
    let vp = b.add_vertex();
    b.add_edge(vp, p.token());
    let with_vertex = b.build().expect("new vertex is fresh");
    let values: Vec<u32> = (0..k).chain(k + 1..target_p).collect();
    let (graph, _) = attach_value_gadgets(&with_vertex, vp, &values);
    Ok(Position::new(graph, vp).expect("new token exists"))
}
