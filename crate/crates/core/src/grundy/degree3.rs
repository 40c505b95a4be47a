//! Polynomial Grundy values on boards of maximum degree 3.
//!
//! Every non-root node of a degree-3 game tree has at most two options, so its
//! value is fixed by the outcome classes of its children: two Fuzzy children
//! give 0, two Zero children give `*`, and one of each gives `*(3 - x)` where
//! `x` is the Fuzzy child's value. Only that Fuzzy child is explored, which
//! makes the search a single path of winnability queries.

use super::nimber::{mex, Nimber};
use crate::graph::{Graph, Position, VertexMask};
use crate::matching::winning_partner;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Degree3Error {
    #[error("vertex {vertex} has degree {degree}; at most 3 is supported")]
    DegreeViolation { vertex: usize, degree: usize },
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, serde::Serialize)]
pub struct Degree3Stats {
    /// Matching-based winnability queries issued.
    pub winnability_calls: usize,
}

pub fn grundy_degree3(p: &Position) -> Result<Nimber, Degree3Error> {
    grundy_degree3_with_stats(p).map(|(v, _)| v)
}

pub fn grundy_degree3_with_stats(p: &Position) -> Result<(Nimber, Degree3Stats), Degree3Error> {
    grundy_degree3_masked(p.graph(), &p.fresh_mask(), p.token())
}

/// Degree-3 value of the residual board `(graph, removed, token)`. Only live
/// degrees are checked.
pub fn grundy_degree3_masked(
    graph: &Graph,
    removed: &VertexMask,
    token: usize,
) -> Result<(Nimber, Degree3Stats), Degree3Error> {
    for v in 0..graph.vertex_count() {
        if removed.contains(v) {
            continue;
        }
        let degree = graph.live_degree(v, removed);
        if degree > 3 {
            return Err(Degree3Error::DegreeViolation { vertex: v, degree });
        }
    }
    let mut walk = Walk { graph, calls: 0 };
    let after = removed.with(token);
    let children: Vec<usize> = graph.live_neighbors(token, &after).collect();
    let value = if children.len() <= 2 {
        walk.value(removed.clone(), token, None)
    } else {
        let values: Vec<Nimber> = children
            .iter()
            .map(|&c| walk.value(after.clone(), c, None))
            .collect();
        mex(values)
    };
    let stats = Degree3Stats {
        winnability_calls: walk.calls,
    };
    Ok((value, stats))
}

struct Walk<'a> {
    graph: &'a Graph,
    calls: usize,
}

impl Walk<'_> {
    /// Whether the token at `v` (with `removed` gone) is a loss for the mover.
    fn is_zero(&mut self, removed: &VertexMask, v: usize) -> bool {
        if self.graph.live_degree(v, removed) == 0 {
            return true;
        }
        self.calls += 1;
        winning_partner(self.graph, removed, v).is_none()
    }

    /// Value of a node with at most two options. `known_fuzzy` carries an
    /// outcome class the caller has already established.
    fn value(&mut self, mut removed: VertexMask, mut token: usize, mut known_fuzzy: Option<bool>) -> Nimber {
        let mut flips = 0usize;
        let base = loop {
            let after = removed.with(token);
            let mut children: Vec<usize> = self.graph.live_neighbors(token, &after).collect();
            // terminal children are Zero for free, so test them first
            children.sort_by_key(|&c| (self.graph.live_degree(c, &after) > 0, c));
            match children[..] {
                [] => break 0,
                [c] => {
                    let fuzzy = known_fuzzy.unwrap_or_else(|| self.is_zero(&after, c));
                    break u32::from(fuzzy);
                }
                [c1, c2] => {
                    if known_fuzzy == Some(false) {
                        break 0;
                    }
                    let z1 = self.is_zero(&after, c1);
                    // a Fuzzy node needs a Zero child
                    let z2 = if known_fuzzy == Some(true) && !z1 {
                        true
                    } else {
                        self.is_zero(&after, c2)
                    };
                    match (z1, z2) {
                        (false, false) => break 0,
                        (true, true) => break 1,
                        (true, false) => token = c2,
                        (false, true) => token = c1,
                    }
                    removed = after;
                    known_fuzzy = Some(true);
                    flips += 1;
                }
                _ => unreachable!("non-root node with more than two options"),
            }
        };
        let mut v = base;
        for _ in 0..flips {
            assert!(
                v == 1 || v == 2,
                "Fuzzy child of a mixed node has value {v}, outside {{1, 2}}"
            );
            v = 3 - v;
        }
        Nimber(v)
    }
}
