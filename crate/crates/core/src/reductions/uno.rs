//! Color/rank labelings of reduced boards, turning them into Uno hands.
//!
//! The labeled board `H` is the reduction output with `b - f` and `f - d`
//! each subdivided once. `H` has no 4-cycles, so every group of vertices
//! sharing a color (or rank) is a star: a center on one side and some of its
//! neighbors on the other. Each vertex sits in exactly two groups, one color
//! and one rank. Inside a gadget the stars are forced once we know which
//! endpoint joins the gadget's own star as a leaf; an original vertex also
//! needs a star of its own to reach its singleton, so it can be such a leaf
//! for at most one gadget.

use super::{GadgetMap, ReductionError};
use crate::graph::{Graph, GraphBuilder, Position};
use crate::variants::{uno_playability, Card, SwapUnoState};
use std::collections::VecDeque;

/// A color/rank pair per vertex of the subdivided board.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnoLabeling {
    /// The subdivided board, token unchanged.
    pub board: Position,
    /// Bipartition side per vertex.
    pub side: Vec<u8>,
    /// `(a, b)` per vertex: color and rank.
    pub labels: Vec<(u32, u32)>,
}

impl UnoLabeling {
    /// Cross-side pairs are adjacent exactly when they share a label.
    pub fn check(&self) -> Result<(), (usize, usize)> {
        let g = self.board.graph();
        let n = g.vertex_count();
        for u in 0..n {
            for v in u + 1..n {
                if self.side[u] == self.side[v] {
                    continue;
                }
                let (au, bu) = self.labels[u];
                let (av, bv) = self.labels[v];
                if g.has_edge(u, v) != (au == av || bu == bv) {
                    return Err((u, v));
                }
            }
        }
        Ok(())
    }
}

fn conflict(msg: impl Into<String>) -> ReductionError {
    ReductionError::LabelingConflict(msg.into())
}

/// Labels the subdivided image of a reduction so that it is a Uno
/// playability graph.
pub fn label_for_uno(p: &Position, gmap: &GadgetMap) -> Result<UnoLabeling, ReductionError> {
    check_image(p.graph(), gmap)?;
    let (h, subdivisions) = subdivide(p.graph(), gmap);
    let side = h.bipartition().ok_or(ReductionError::NotBipartite)?;
    let leaf_end = assign_leaf_endpoints(gmap)?;

    // stars[s] = (center, leaves); original vertex v owns star v
    let mut stars: Vec<(usize, Vec<usize>)> =
        gmap.singletons.iter().enumerate().map(|(v, &leaf)| (v, vec![leaf])).collect();
    for ((g, &(s1, s2)), &leaf) in gmap.arcs.iter().zip(&subdivisions).zip(&leaf_end) {
        let f_star = (g.f, vec![s1, s2]);
        if leaf == g.x {
            // x hangs off a's star; the chain is centered toward y
            stars.push((g.a, vec![g.x, g.a0]));
            stars.push((g.b, vec![g.a, s1]));
            stars.push((g.c, vec![g.b, g.c0]));
            stars.push((g.d, vec![g.c, s2, g.d0]));
            stars[g.y].1.push(g.d);
        } else {
            stars[g.x].1.push(g.a);
            stars.push((g.a, vec![g.a0, g.b]));
            stars.push((g.b, vec![g.c, s1]));
            stars.push((g.c, vec![g.c0, g.d]));
            stars.push((g.d, vec![s2, g.d0, g.y]));
        }
        stars.push(f_star);
    }

    let n = h.vertex_count();
    let mut member_of: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (s, (center, leaves)) in stars.iter().enumerate() {
        member_of[*center].push(s);
        for &l in leaves {
            member_of[l].push(s);
        }
    }
    if let Some(v) = (0..n).find(|&v| member_of[v].len() > 2) {
        return Err(conflict(format!("vertex {v} needs more than two shared labels")));
    }

    // two stars through one vertex must use different attributes
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); stars.len()];
    for m in &member_of {
        if let [s, t] = m[..] {
            adj[s].push(t);
            adj[t].push(s);
        }
    }
    let mut kind = vec![u8::MAX; stars.len()];
    for root in 0..stars.len() {
        if kind[root] != u8::MAX {
            continue;
        }
        kind[root] = 0;
        let mut queue = VecDeque::from([root]);
        while let Some(s) = queue.pop_front() {
            for &t in &adj[s] {
                if kind[t] == u8::MAX {
                    kind[t] = 1 - kind[s];
                    queue.push_back(t);
                } else if kind[t] == kind[s] {
                    return Err(conflict("stars cannot be split into colors and ranks"));
                }
            }
        }
    }

    let mut fresh = stars.len() as u32;
    let mut labels = Vec::with_capacity(n);
    for m in &member_of {
        let mut pair = [None, None];
        for &s in m {
            pair[kind[s] as usize] = Some(s as u32);
        }
        let mut take = |x: Option<u32>| {
            x.unwrap_or_else(|| {
                fresh += 1;
                fresh - 1
            })
        };
        let a = take(pair[0]);
        let b = take(pair[1]);
        labels.push((a, b));
    }
    let board = Position::new(h, p.token()).expect("token kept");
    let labeling = UnoLabeling { board, side, labels };
    labeling
        .check()
        .map_err(|(u, v)| conflict(format!("labels disagree with adjacency at {u}-{v}")))?;
    Ok(labeling)
}

/// The board must be exactly the reduction image described by `gmap`.
fn check_image(g: &Graph, gmap: &GadgetMap) -> Result<(), ReductionError> {
    let n0 = gmap.original_count;
    let vertices = 2 * n0 + 8 * gmap.arcs.len();
    let edges = n0 + 10 * gmap.arcs.len();
    if g.vertex_count() != vertices || g.edge_count() != edges || gmap.singletons.len() != n0 {
        return Err(conflict("board is not the reduction image of the gadget map"));
    }
    let expected = (0..n0)
        .map(|v| (v, gmap.singletons[v]))
        .chain(gmap.arcs.iter().flat_map(|a| a.edges()));
    for (u, v) in expected {
        if u >= vertices || v >= vertices || !g.has_edge(u, v) {
            return Err(conflict(format!("missing gadget edge {u}-{v}")));
        }
    }
    Ok(())
}

/// Copies the board, replacing `b - f` and `f - d` of every gadget by paths
/// through new vertices appended in arc order.
fn subdivide(g: &Graph, gmap: &GadgetMap) -> (Graph, Vec<(usize, usize)>) {
    let mut b = GraphBuilder::with_vertices(g.vertex_count());
    let skip: std::collections::HashSet<(usize, usize)> = gmap
        .arcs
        .iter()
        .flat_map(|a| [(a.b.min(a.f), a.b.max(a.f)), (a.f.min(a.d), a.f.max(a.d))])
        .collect();
    for (u, v) in g.edges() {
        if !skip.contains(&(u, v)) {
            b.add_edge(u, v);
        }
    }
    let mut subdivisions = Vec::with_capacity(gmap.arcs.len());
    for a in &gmap.arcs {
        let s1 = b.add_vertex();
        let s2 = b.add_vertex();
        b.add_edge(a.b, s1);
        b.add_edge(s1, a.f);
        b.add_edge(a.f, s2);
        b.add_edge(s2, a.d);
        subdivisions.push((s1, s2));
    }
    (b.build().expect("subdivision keeps the graph simple"), subdivisions)
}

/// Picks for every arc an endpoint that joins the gadget as a leaf, no
/// endpoint used twice. Exists iff no connected piece of the arc graph has
/// more arcs than vertices.
fn assign_leaf_endpoints(gmap: &GadgetMap) -> Result<Vec<usize>, ReductionError> {
    let m = gmap.arcs.len();
    let mut owner: Vec<Option<usize>> = vec![None; gmap.original_count];
    let mut chosen = vec![usize::MAX; m];
    for arc in 0..m {
        let mut seen = vec![false; gmap.original_count];
        if !augment(arc, gmap, &mut owner, &mut chosen, &mut seen) {
            return Err(conflict(format!(
                "arc {} -> {} has no free endpoint: a connected piece of the input has more arcs than vertices",
                gmap.arcs[arc].x, gmap.arcs[arc].y
            )));
        }
    }
    Ok(chosen)
}

fn augment(
    arc: usize,
    gmap: &GadgetMap,
    owner: &mut [Option<usize>],
    chosen: &mut [usize],
    seen: &mut [bool],
) -> bool {
    let g = gmap.arcs[arc];
    for v in [g.x, g.y] {
        if seen[v] {
            continue;
        }
        seen[v] = true;
        if owner[v].is_none_or(|other| augment(other, gmap, owner, chosen, seen)) {
            owner[v] = Some(arc);
            chosen[arc] = v;
            return true;
        }
    }
    false
}

/// Hands from a labeling: the mover holds the side opposite the token, the
/// token's card is on the pile, and every other card on the token's side is
/// in the opponent's hand. Cards keep vertex order.
pub fn uno_from_labeling(l: &UnoLabeling) -> SwapUnoState {
    let t = l.board.token();
    let card = |v: usize| Card {
        color: l.labels[v].0,
        rank: l.labels[v].1,
    };
    let n = l.board.vertex_count();
    let mine = (0..n).filter(|&v| l.side[v] != l.side[t]).map(card).collect();
    let theirs = (0..n).filter(|&v| v != t && l.side[v] == l.side[t]).map(card).collect();
    SwapUnoState {
        hands: [mine, theirs],
        top: Some(card(t)),
        swap_used: false,
    }
}

/// The playability graph of a Uno position, as an undirected board whose
/// token is the pile.
pub fn playability_graph(u: &SwapUnoState) -> Position {
    uno_playability(u)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{DirectedGraph, DirectedPosition};
    use crate::reductions::gg_to_ug;

    fn image(n: usize, arcs: &[(usize, usize)]) -> (Position, GadgetMap) {
        gg_to_ug(&DirectedPosition::new(DirectedGraph::from_arcs(n, arcs.iter().copied()).unwrap(), 0).unwrap())
    }

    /// Maps the playability graph back through the hand layout and compares
    /// edge sets with the labeled board.
    fn round_trips(l: &UnoLabeling) -> bool {
        let u = uno_from_labeling(l);
        let pg = playability_graph(&u);
        let t = l.board.token();
        let n = l.board.vertex_count();
        let order: Vec<usize> = std::iter::once(t)
            .chain((0..n).filter(|&v| l.side[v] != l.side[t]))
            .chain((0..n).filter(|&v| v != t && l.side[v] == l.side[t]))
            .collect();
        let mut back: Vec<(usize, usize)> = pg
            .graph()
            .edges()
            .map(|(i, j)| (order[i].min(order[j]), order[i].max(order[j])))
            .collect();
        back.sort_unstable();
        back == l.board.graph().edges().collect::<Vec<_>>()
    }

    #[test]
    fn single_arc_and_path() {
        for arcs in [&[(0, 1)][..], &[(0, 1), (1, 2)], &[(0, 1), (1, 0)], &[]] {
            let n = 3;
            let (p, map) = image(n, arcs);
            let l = label_for_uno(&p, &map).unwrap();
            assert_eq!(l.board.vertex_count(), p.vertex_count() + 2 * arcs.len());
            assert!(l.check().is_ok());
            assert!(round_trips(&l));
        }
    }

    #[test]
    fn k4_is_outside_the_image() {
        let k4 = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let p = Position::new(k4, 0).unwrap();
        assert!(matches!(
            label_for_uno(&p, &GadgetMap::default()),
            Err(ReductionError::LabelingConflict(_))
        ));
    }

    #[test]
    fn odd_cycles_are_not_bipartite() {
        let (p, map) = image(3, &[(0, 1), (1, 2), (2, 0)]);
        assert_eq!(label_for_uno(&p, &map), Err(ReductionError::NotBipartite));
    }

    #[test]
    fn too_many_arcs_for_the_vertices() {
        let (p, map) = image(3, &[(0, 1), (1, 0), (1, 2), (2, 1)]);
        assert!(matches!(label_for_uno(&p, &map), Err(ReductionError::LabelingConflict(_))));
    }
}
