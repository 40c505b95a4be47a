//! Rulesets built on Undirected Geography: sums, passes, several tokens and
//! Swap Uno, all solvable through one option interface.

mod json;
mod state;

pub use json::{parse_variant, variant_to_json, EnvelopeError, VariantSpec};
pub use state::{
    Card, IllegalMove, MultiTokenState, SwapUnoState, UgComponent, VariantMove, VariantState,
};

use crate::graph::{Graph, GraphBuilder, Position};
use crate::grundy::{
    exact_grundy, grundy_degree3_masked, solve_game, ImpartialGame, Nimber, SolveBudget,
    SolveError,
};
use crate::matching::winning_partner;
use std::sync::Arc;

/// Every variant under one option enumerator.
#[derive(Debug, Clone, Copy, Default)]
pub struct VariantGame;

impl ImpartialGame for VariantGame {
    type State = VariantState;

    fn options(&self, s: &VariantState) -> Vec<VariantState> {
        s.options()
    }
}

/// Exact Grundy value by search over the variant's own options.
pub fn variant_grundy(s: &VariantState, budget: SolveBudget) -> Result<Nimber, SolveError> {
    solve_game(VariantGame, s, budget)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SolveMethod {
    /// Winnability from maximum matchings only.
    Matching,
    /// Matching winnability plus the degree-3 value.
    MatchingDegree3,
    /// Nim-sum of degree-3 component values.
    Degree3Components,
    /// Budgeted exact search.
    Exact,
    /// Outcome depends on a value that was not affordable.
    NeedsNimber,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub struct FastSolve {
    pub winnable: Option<bool>,
    pub value: Option<Nimber>,
    pub method: SolveMethod,
}

impl FastSolve {
    fn valued(value: Nimber, method: SolveMethod) -> Self {
        FastSolve {
            winnable: Some(!value.is_zero()),
            value: Some(value),
            method,
        }
    }

    fn needs_nimber() -> Self {
        FastSolve {
            winnable: None,
            value: None,
            method: SolveMethod::NeedsNimber,
        }
    }
}

fn component_winnable(c: &UgComponent) -> bool {
    winning_partner(&c.graph, &c.removed, c.token).is_some()
}

/// Value of one component by the cheapest exact route, if affordable.
fn component_value(c: &UgComponent, budget: SolveBudget) -> Option<(Nimber, SolveMethod)> {
    if c.max_live_degree() <= 3 {
        let (v, _) = grundy_degree3_masked(&c.graph, &c.removed, c.token).ok()?;
        return Some((v, SolveMethod::Degree3Components));
    }
    exact_grundy(&c.position(), &c.removed, budget)
        .ok()
        .map(|v| (v, SolveMethod::Exact))
}

/// Outcome (and value where cheap) by the fastest sound method.
///
/// Plain games and even pass pools need only matchings. Odd pass pools,
/// sums and Swap Uno need component values; those come from the degree-3
/// algorithm or a budgeted exact search, and the result is `NeedsNimber`
/// when neither is available.
pub fn fast_variant_solve(s: &VariantState, budget: SolveBudget) -> FastSolve {
    match s {
        VariantState::Plain(c) => plain(c),
        VariantState::Pass { game, passes } if passes % 2 == 0 => plain(game),
        VariantState::Pass { game, .. } => match component_value(game, budget) {
            Some((v, method)) => FastSolve::valued(v ^ Nimber(1), method),
            None => FastSolve::needs_nimber(),
        },
        VariantState::Sum(parts) => {
            let mut total = Nimber(0);
            let mut method = SolveMethod::Degree3Components;
            for c in parts {
                let Some((v, m)) = component_value(c, budget) else {
                    return FastSolve::needs_nimber();
                };
                if m == SolveMethod::Exact {
                    method = SolveMethod::Exact;
                }
                total = total ^ v;
            }
            FastSolve::valued(total, method)
        }
        VariantState::MultiToken(_) => match variant_grundy(s, budget) {
            Ok(v) => FastSolve::valued(v, SolveMethod::Exact),
            Err(_) => FastSolve::needs_nimber(),
        },
        VariantState::SwapUno(u) => fast_variant_solve(&swap_uno_to_ug(u), budget),
    }
}

fn plain(c: &UgComponent) -> FastSolve {
    let winnable = component_winnable(c);
    if c.max_live_degree() <= 3 {
        if let Ok((v, _)) = grundy_degree3_masked(&c.graph, &c.removed, c.token) {
            return FastSolve {
                winnable: Some(winnable),
                value: Some(v),
                method: SolveMethod::MatchingDegree3,
            };
        }
    }
    FastSolve {
        winnable: Some(winnable),
        value: None,
        method: SolveMethod::Matching,
    }
}

/// Playability graph of a Uno position. Vertex 0 is the pile (the top card,
/// or for a free opening a vertex joined to every card of the mover), then
/// the mover's cards, then the opponent's, in hand order.
pub fn uno_playability(u: &SwapUnoState) -> Position {
    let [mine, theirs] = &u.hands;
    let mut b = GraphBuilder::with_vertices(1 + mine.len() + theirs.len());
    for (i, &c) in mine.iter().enumerate() {
        if u.top.is_none_or(|t| t.matches(c)) {
            b.add_edge(0, 1 + i);
        }
        for (j, &d) in theirs.iter().enumerate() {
            if c.matches(d) {
                b.add_edge(1 + i, 1 + mine.len() + j);
            }
        }
    }
    Position::new(b.build().expect("card pairs are distinct"), 0).expect("pile vertex exists")
}

/// Swap Uno as Undirected Geography: the playability graph, plus a
/// single-edge `*` component while the swap is still available.
pub fn swap_uno_to_ug(u: &SwapUnoState) -> VariantState {
    let board = UgComponent::new(&uno_playability(u));
    if u.swap_used {
        VariantState::Plain(board)
    } else {
        let edge = Graph::from_edges(2, [(0, 1)]).expect("single edge");
        let star = UgComponent::new(&Position::new(Arc::new(edge), 0).expect("vertex 0"));
        VariantState::Sum(vec![board, star])
    }
}
