//! Branch-and-bound Grundy evaluation for boards of any degree.
//!
//! Nodes with at most two options are resolved through winnability queries
//! and recurse into at most one child; wider nodes branch on every option.

use super::exact::UgState;
use super::game::{SolveBudget, SolveError};
use super::nimber::{mex, Nimber};
use crate::graph::{Graph, Position, VertexMask};
use crate::matching::winning_partner;
use std::collections::HashMap;
use std::time::Instant;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BabConfig {
    /// Option counts above this are reported as high-degree nodes.
    pub delta: usize,
    pub budget: Option<SolveBudget>,
}

impl Default for BabConfig {
    fn default() -> Self {
        BabConfig {
            delta: 3,
            budget: None,
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, serde::Serialize)]
pub struct BabStats {
    pub winnability_calls: usize,
    /// Distinct positions evaluated.
    pub nodes: usize,
    /// Nodes with between 3 and `delta` options.
    pub moderate_nodes: usize,
    /// Nodes with more than `delta` options.
    pub high_nodes: usize,
}

pub fn grundy_bab(p: &Position, config: BabConfig) -> Result<Nimber, SolveError> {
    grundy_bab_with_stats(p, &p.fresh_mask(), config).map(|(v, _)| v)
}

pub fn grundy_bab_with_stats(
    p: &Position,
    mask: &VertexMask,
    config: BabConfig,
) -> Result<(Nimber, BabStats), SolveError> {
    let mut search = Search {
        graph: p.graph(),
        config,
        memo: HashMap::new(),
        stats: BabStats::default(),
        started: Instant::now(),
    };
    let v = search.value(mask.clone(), p.token())?;
    search.stats.nodes = search.memo.len();
    Ok((v, search.stats))
}

struct Search<'a> {
    graph: &'a Graph,
    config: BabConfig,
    memo: HashMap<UgState, Nimber>,
    stats: BabStats,
    started: Instant,
}

impl Search<'_> {
    fn is_zero(&mut self, removed: &VertexMask, v: usize) -> bool {
        if self.graph.live_degree(v, removed) == 0 {
            return true;
        }
        self.stats.winnability_calls += 1;
        winning_partner(self.graph, removed, v).is_none()
    }

    fn check_budget(&self) -> Result<(), SolveError> {
        let Some(b) = self.config.budget else {
            return Ok(());
        };
        let elapsed = self.started.elapsed().as_millis() as u64;
        if self.memo.len() as u64 >= b.max_states || elapsed > b.max_millis {
            return Err(SolveError::BudgetExceeded {
                states: self.memo.len() as u64,
                elapsed_ms: elapsed,
            });
        }
        Ok(())
    }

    fn value(&mut self, removed: VertexMask, token: usize) -> Result<Nimber, SolveError> {
        let key = UgState { removed, token };
        if let Some(&v) = self.memo.get(&key) {
            return Ok(v);
        }
        self.check_budget()?;
        let after = key.removed.with(token);
        let mut children: Vec<usize> = self.graph.live_neighbors(token, &after).collect();
        let v = match children.len() {
            0 => Nimber(0),
            1 => Nimber(u32::from(self.is_zero(&after, children[0]))),
            2 => {
                children.sort_by_key(|&c| (self.graph.live_degree(c, &after) > 0, c));
                let z1 = self.is_zero(&after, children[0]);
                let z2 = self.is_zero(&after, children[1]);
                match (z1, z2) {
                    (false, false) => Nimber(0),
                    (true, true) => Nimber(1),
                    _ => {
                        let fuzzy = if z1 { children[1] } else { children[0] };
                        // options are {0, x} with x nonzero
                        let x = self.value(after.clone(), fuzzy)?;
                        Nimber(if x.0 == 1 { 2 } else { 1 })
                    }
                }
            }
            k => {
                if k > self.config.delta {
                    self.stats.high_nodes += 1;
                } else {
                    self.stats.moderate_nodes += 1;
                }
                let mut values = Vec::with_capacity(k);
                for c in children {
                    values.push(self.value(after.clone(), c)?);
                }
                mex(values)
            }
        };
        self.memo.insert(key, v);
        Ok(v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn star_center_is_star() {
        let g = Graph::from_edges(6, (1..6).map(|v| (0, v))).unwrap();
        let p = Position::new(g, 0).unwrap();
        let (v, stats) = grundy_bab_with_stats(&p, &p.fresh_mask(), BabConfig::default()).unwrap();
        assert_eq!(v, Nimber(1));
        assert_eq!(stats.high_nodes, 1);
    }

    #[test]
    fn budget_is_reported() {
        let n = 12;
        let edges: Vec<_> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        let p = Position::new(Graph::from_edges(n, edges).unwrap(), 0).unwrap();
        let config = BabConfig {
            budget: Some(SolveBudget::states(20)),
            ..BabConfig::default()
        };
        assert!(grundy_bab(&p, config).is_err());
    }
}
