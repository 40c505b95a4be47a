//! Exhaustive checks of the rank construction's local claims.

use super::{Label, LabeledConstruction};
use crate::graph::VertexMask;
use crate::grundy::{ug_solver, Nimber, SolveBudget, SolveError, UgState};
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Lemma {
    /// Moving `N_k -> R_k` reaches a 0 position.
    Grounded,
    /// Moving `R_p -> N_p` reaches a 0 position.
    RToN,
    /// Entering `M_k` from `N_k` is `*`, or `*3` once a lower rank is gone.
    SkipStar2,
    /// Entering `P_k` from `N_k` is `*2`, or `*3` once a lower rank is gone.
    SkipStar,
    /// `N_k` with only higher ranks removed is at least `*4`.
    Not1Or2,
    /// Below a removed rank, rank vertices alternate between `*` and `*2`.
    Parity,
}

impl Lemma {
    pub const ALL: [Lemma; 6] = [
        Lemma::Grounded,
        Lemma::RToN,
        Lemma::SkipStar2,
        Lemma::SkipStar,
        Lemma::Not1Or2,
        Lemma::Parity,
    ];
}

impl fmt::Display for Lemma {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Lemma::Grounded => "grounded",
            Lemma::RToN => "r_to_n",
            Lemma::SkipStar2 => "skip_star2",
            Lemma::SkipStar => "skip_star",
            Lemma::Not1Or2 => "not_1_or_2",
            Lemma::Parity => "parity",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Expectation {
    Exactly(u32),
    AtLeast(u32),
}

impl Expectation {
    fn holds(self, v: Nimber) -> bool {
        match self {
            Expectation::Exactly(e) => v.0 == e,
            Expectation::AtLeast(e) => v.0 >= e,
        }
    }
}

#[derive(Debug, Clone, serde::Serialize)]
pub struct LemmaCheck {
    /// Labels of removed vertices.
    pub removed: Vec<String>,
    pub token: String,
    pub expected: Expectation,
    pub actual: u32,
    pub passed: bool,
}

#[derive(Debug, Clone, serde::Serialize)]
pub struct LemmaReport {
    pub lemma: Lemma,
    pub checks: Vec<LemmaCheck>,
}

impl LemmaReport {
    /// True when every check passed; an empty report passes vacuously.
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

/// Enumerates every residual position the lemma quantifies over and solves
/// each one exactly.
pub fn verify_lemma(
    c: &LabeledConstruction,
    lemma: Lemma,
    budget: SolveBudget,
) -> Result<LemmaReport, SolveError> {
    let graph = c.position.graph();
    let ranks = c.ranks();
    let mut solver = ug_solver(graph, budget);
    let mut checks = Vec::new();
    let mut check = |removed: Vec<usize>, token: usize, expected: Expectation| {
        let state = UgState {
            removed: VertexMask::from_removed(graph.vertex_count(), removed.iter().copied()),
            token,
        };
        let actual = solver.grundy(&state)?;
        checks.push(LemmaCheck {
            removed: removed.iter().map(|&v| c.labels[v].to_string()).collect(),
            token: c.labels[token].to_string(),
            expected,
            actual: actual.0,
            passed: expected.holds(actual),
        });
        Ok::<(), SolveError>(())
    };
    let find = |l: Label| c.vertex_of(l);

    match lemma {
        Lemma::Grounded | Lemma::RToN => {
            for &(k, nk) in &ranks {
                let rk = find(Label::R(k)).expect("every rank is grounded");
                let others: Vec<(u32, usize)> = ranks.iter().copied().filter(|&(i, _)| i != k).collect();
                for subset in subsets(&others) {
                    for extra in gadget_removals(c, &subset) {
                        let mut removed: Vec<usize> = subset.iter().map(|&(_, v)| v).collect();
                        removed.extend(extra);
                        if lemma == Lemma::Grounded {
                            removed.push(nk);
                            check(removed, rk, Expectation::Exactly(0))?;
                        } else {
                            removed.push(rk);
                            check(removed, nk, Expectation::Exactly(0))?;
                        }
                    }
                }
            }
        }
        Lemma::SkipStar2 | Lemma::SkipStar => {
            for &(k, nk) in ranks.iter().filter(|&&(k, _)| k >= 5) {
                let (target, intact, broken) = if lemma == Lemma::SkipStar2 {
                    (find(Label::M(k)), 1, 3)
                } else {
                    (find(Label::P(k)), 2, 3)
                };
                let target = target.expect("ranks from 5 carry both gadgets");
                let others: Vec<(u32, usize)> = ranks.iter().copied().filter(|&(i, _)| i != k).collect();
                for subset in subsets(&others) {
                    let lower_gone = subset.iter().any(|&(i, _)| i < k);
                    let mut removed: Vec<usize> = subset.iter().map(|&(_, v)| v).collect();
                    removed.push(nk);
                    let want = if lower_gone { broken } else { intact };
                    check(removed, target, Expectation::Exactly(want))?;
                }
            }
        }
        Lemma::Not1Or2 => {
            for &(k, nk) in &ranks {
                let higher: Vec<(u32, usize)> = ranks.iter().copied().filter(|&(i, _)| i > k).collect();
                for subset in subsets(&higher) {
                    let removed = subset.iter().map(|&(_, v)| v).collect();
                    check(removed, nk, Expectation::AtLeast(4))?;
                }
            }
        }
        Lemma::Parity => {
            for &(k, nk) in &ranks {
                let others: Vec<(u32, usize)> = ranks.iter().copied().filter(|&(i, _)| i != k).collect();
                for subset in subsets(&others) {
                    let Some(j) = subset.iter().map(|&(i, _)| i).min() else {
                        continue;
                    };
                    if j >= k {
                        continue;
                    }
                    let remaining = ranks
                        .iter()
                        .filter(|&&(p, _)| p > j && !subset.iter().any(|&(i, _)| i == p))
                        .count();
                    let want = if remaining % 2 == 1 { 1 } else { 2 };
                    let removed = subset.iter().map(|&(_, v)| v).collect();
                    check(removed, nk, Expectation::Exactly(want))?;
                }
            }
        }
    }
    Ok(LemmaReport { lemma, checks })
}

fn subsets<T: Copy>(items: &[T]) -> Vec<Vec<T>> {
    (0u64..1 << items.len())
        .map(|bits| {
            (0..items.len())
                .filter(|i| bits >> i & 1 == 1)
                .map(|i| items[i])
                .collect()
        })
        .collect()
}

/// For each removed rank `N_i`, optionally also drop its `M_i` or `P_i`
/// vertex, as a play line through that gadget would.
fn gadget_removals(c: &LabeledConstruction, removed_ranks: &[(u32, usize)]) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for &(i, _) in removed_ranks {
        let options: Vec<Option<usize>> = [None, c.vertex_of(Label::M(i)), c.vertex_of(Label::P(i))]
            .into_iter()
            .enumerate()
            .filter(|&(idx, v)| idx == 0 || v.is_some())
            .map(|(_, v)| v)
            .collect();
        out = out
            .into_iter()
            .flat_map(|base| {
                options.iter().map(move |o| {
                    let mut next = base.clone();
                    next.extend(o.iter().copied());
                    next
                })
            })
            .collect();
    }
    out
}
