//! Positions with a prescribed Grundy value.
//!
//! Values up to 3 (or a configurable cap) come from the exponential tree
//! family `t(k)`, whose root has one child `t(j)` for every `j < k`. Larger
//! values use the quadratic rank construction: a clique of rank vertices
//! `N_4..N_n`, each with a grounding vertex `R_i`, a `*3` tree, and for
//! `i >= 5` the `M_i` (`*`) and `P_i` (`*2`) gadgets whose chains hang off
//! every lower-rank `R_j`.

mod lemmas;

pub use lemmas::{verify_lemma, Expectation, Lemma, LemmaCheck, LemmaReport};

use crate::graph::{Graph, GraphBuilder, Position};
use std::fmt;

/// Largest tree value built unless the caller raises it.
pub const DEFAULT_TREE_CAP: u32 = 10;

/// Role of a vertex in a construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub enum Label {
    N(u32),
    R(u32),
    M(u32),
    P(u32),
    /// Leaf hanging off `M_i`.
    MZero(u32),
    /// Leaf hanging off `P_i`.
    PZero(u32),
    /// Chain vertex `M_{i,k}` with part 0..=3 for `a..d`.
    MPart(u32, u32, u8),
    /// Chain vertex `P_{i,k}` with part 0..=5 for `a..f`.
    PPart(u32, u32, u8),
    /// Root of an attached tree `t(v)`.
    TreeRoot(u32),
    TreeNode,
    Singleton,
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let part = |p: u8| (b'a' + p) as char;
        match *self {
            Label::N(i) => write!(f, "N{i}"),
            Label::R(i) => write!(f, "R{i}"),
            Label::M(i) => write!(f, "M{i}"),
            Label::P(i) => write!(f, "P{i}"),
            Label::MZero(i) => write!(f, "M{i}_0"),
            Label::PZero(i) => write!(f, "P{i}_0"),
            Label::MPart(i, k, p) => write!(f, "M{i},{k}{}", part(p)),
            Label::PPart(i, k, p) => write!(f, "P{i},{k}{}", part(p)),
            Label::TreeRoot(v) => write!(f, "T{v}"),
            Label::TreeNode => f.write_str("t"),
            Label::Singleton => f.write_str("S"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ConstructError {
    #[error("tree for *{requested} needs 2^{requested} vertices; cap is *{cap}")]
    CapExceeded { requested: u32, cap: u32 },
}

/// A constructed position with one label per vertex.
#[derive(Debug, Clone)]
pub struct LabeledConstruction {
    pub position: Position,
    pub labels: Vec<Label>,
    /// The value the construction targets.
    pub target: u32,
}

impl LabeledConstruction {
    pub fn vertex_of(&self, label: Label) -> Option<usize> {
        self.labels.iter().position(|&l| l == label)
    }

    /// Rank vertices `N_4..N_n` in rank order, paired with their rank.
    pub fn ranks(&self) -> Vec<(u32, usize)> {
        let mut out: Vec<(u32, usize)> = self
            .labels
            .iter()
            .enumerate()
            .filter_map(|(v, l)| match *l {
                Label::N(i) => Some((i, v)),
                _ => None,
            })
            .collect();
        out.sort_unstable();
        out
    }
}

struct Builder {
    graph: GraphBuilder,
    labels: Vec<Label>,
}

impl Builder {
    fn new() -> Self {
        Builder {
            graph: GraphBuilder::new(),
            labels: Vec::new(),
        }
    }

    fn vertex(&mut self, label: Label) -> usize {
        self.labels.push(label);
        self.graph.add_vertex()
    }

    fn edge(&mut self, u: usize, v: usize) {
        self.graph.add_edge(u, v);
    }

    /// Adds `t(k)` and returns its root.
    fn tree(&mut self, k: u32) -> usize {
        let root = self.vertex(Label::TreeRoot(k));
        self.subtree_children(root, k);
        root
    }

    fn subtree_children(&mut self, root: usize, k: u32) {
        for j in (0..k).rev() {
            let child = self.vertex(Label::TreeNode);
            self.edge(root, child);
            self.subtree_children(child, j);
        }
    }

    /// Adds `t(k)` and joins its root to `to`.
    fn attach_tree(&mut self, to: usize, k: u32) {
        let root = self.tree(k);
        self.edge(to, root);
    }

    fn finish(self, token: usize, target: u32) -> LabeledConstruction {
        let graph = self.graph.build().expect("constructions are simple graphs");
        LabeledConstruction {
            position: Position::new(graph, token).expect("token is a built vertex"),
            labels: self.labels,
            target,
        }
    }
}

/// The tree `t(n)` with `2^n` vertices, token at its root.
pub fn build_tree_nimber(n: u32) -> Result<LabeledConstruction, ConstructError> {
    build_tree_nimber_capped(n, DEFAULT_TREE_CAP)
}

pub fn build_tree_nimber_capped(n: u32, cap: u32) -> Result<LabeledConstruction, ConstructError> {
    if n > cap {
        return Err(ConstructError::CapExceeded { requested: n, cap });
    }
    let mut b = Builder::new();
    let root = b.tree(n);
    Ok(b.finish(root, n))
}

/// A position of value `*n` with `O(n^2)` vertices, token at `N_n`.
///
/// Beyond the listed steps of the generation algorithm, this also adds the
/// edges `N_4 R_4`, `N_i M_i`, `N_i P_i` and a `*3` tree on `N_4`, all of
/// which the rank argument relies on.
pub fn build_nimber_position(n: u32) -> LabeledConstruction {
    if n <= 3 {
        return build_tree_nimber(n).expect("values up to 3 are under any cap");
    }
    let mut b = Builder::new();
    let mut rank = vec![usize::MAX; n as usize + 1];
    let mut ground = vec![usize::MAX; n as usize + 1];
    rank[4] = b.vertex(Label::N(4));
    ground[4] = b.vertex(Label::R(4));
    b.edge(rank[4], ground[4]);
    for i in 5..=n {
        let iu = i as usize;
        let ni = b.vertex(Label::N(i));
        let mi = b.vertex(Label::M(i));
        let pi = b.vertex(Label::P(i));
        let ri = b.vertex(Label::R(i));
        let m0 = b.vertex(Label::MZero(i));
        let p0 = b.vertex(Label::PZero(i));
        rank[iu] = ni;
        ground[iu] = ri;
        b.edge(ni, ri);
        b.edge(mi, m0);
        b.edge(pi, p0);
        b.attach_tree(ni, 3);
        for j in 4..i {
            let p: Vec<usize> = (0..6).map(|q| b.vertex(Label::PPart(i, j, q))).collect();
            let m: Vec<usize> = (0..4).map(|q| b.vertex(Label::MPart(i, j, q))).collect();
            let rj = ground[j as usize];
            b.edge(pi, p[0]);
            b.edge(p[0], p[1]);
            b.edge(p[0], p[2]);
            b.edge(p[2], p[3]);
            b.edge(p[2], p[4]);
            b.edge(p[4], p[5]);
            b.edge(p[5], rj);
            b.edge(ni, rank[j as usize]);
            b.edge(mi, m[0]);
            b.edge(m[0], m[1]);
            b.edge(m[0], m[2]);
            b.edge(m[2], m[3]);
            b.edge(m[3], rj);
        }
        b.attach_tree(mi, 2);
        b.attach_tree(pi, 1);
        b.edge(ni, mi);
        b.edge(ni, pi);
    }
    b.attach_tree(rank[4], 1);
    b.attach_tree(rank[4], 2);
    b.attach_tree(rank[4], 3);
    b.finish(rank[n as usize], n)
}

/// Vertex and edge counts of [`build_nimber_position`]`(n)`.
pub fn census(n: u32) -> (usize, usize) {
    if n <= 3 {
        let v = 1usize << n;
        return (v, v - 1);
    }
    let k = (n - 4) as usize;
    let pairs = k * (k + 1) / 2;
    (16 + 20 * k + 10 * pairs, 15 + 19 * k + 13 * pairs)
}

/// Disjoint union of `g` and `t(k)` for each listed `k`, with the given
/// vertex joined to each tree root. Used by the chain constructions.
pub(crate) fn attach_value_gadgets(g: &Graph, at: usize, values: &[u32]) -> (Graph, Vec<usize>) {
    let mut b = GraphBuilder::new();
    b.add_graph(g);
    let mut roots = Vec::with_capacity(values.len());
    for &k in values {
        let gadget = build_nimber_position(k);
        let offset = b.add_graph(gadget.position.graph());
        let root = offset + gadget.position.token();
        b.add_edge(at, root);
        roots.push(root);
    }
    (b.build().expect("gadgets are disjoint"), roots)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tree_sizes() {
        for k in 0..=8 {
            let t = build_tree_nimber(k).unwrap();
            assert_eq!(t.position.vertex_count(), 1 << k);
            assert_eq!(t.position.graph().degree(t.position.token()), k as usize);
        }
        assert_eq!(
            build_tree_nimber(11).unwrap_err(),
            ConstructError::CapExceeded { requested: 11, cap: 10 }
        );
    }

    #[test]
    fn census_matches_build() {
        for n in 0..=20 {
            let c = build_nimber_position(n);
            let g = c.position.graph();
            assert_eq!((g.vertex_count(), g.edge_count()), census(n), "n = {n}");
        }
        assert_eq!(census(4), (16, 15));
        assert_eq!(census(5), (46, 47));
        assert_eq!(census(6), (86, 92));
    }

    #[test]
    fn labels_are_unique_where_required() {
        let c = build_nimber_position(7);
        for i in 4..=7 {
            assert!(c.vertex_of(Label::N(i)).is_some());
            assert!(c.vertex_of(Label::R(i)).is_some());
        }
        assert!(c.vertex_of(Label::M(4)).is_none());
        assert_eq!(c.position.token(), c.vertex_of(Label::N(7)).unwrap());
        let ranks = c.ranks();
        for (a, &(_, u)) in ranks.iter().enumerate() {
            for &(_, v) in &ranks[a + 1..] {
                assert!(c.position.graph().has_edge(u, v));
            }
        }
        assert_eq!(Label::PPart(5, 4, 5).to_string(), "P5,4f");
    }
}
