//! Exact Grundy values of Undirected Geography positions.

use super::game::{ExactSolver, ImpartialGame, SolveBudget, SolveError};
use super::nimber::Nimber;
use crate::graph::{Graph, Position, VertexMask};

/// A residual Undirected Geography position: removed vertices plus token.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct UgState {
    pub removed: VertexMask,
    pub token: usize,
}

/// Undirected Geography on a fixed board, as an [`ImpartialGame`].
#[derive(Debug, Clone, Copy)]
pub struct UgGame<'a> {
    graph: &'a Graph,
}

impl<'a> UgGame<'a> {
    pub fn new(graph: &'a Graph) -> Self {
        UgGame { graph }
    }
}

impl ImpartialGame for UgGame<'_> {
    type State = UgState;

    fn options(&self, s: &UgState) -> Vec<UgState> {
        let removed = s.removed.with(s.token);
        self.graph
            .live_neighbors(s.token, &removed)
            .map(|v| UgState {
                removed: removed.clone(),
                token: v,
            })
            .collect()
    }
}

/// Exact Grundy value of `(p, mask)` by memoized depth-first search.
pub fn exact_grundy(
    p: &Position,
    mask: &VertexMask,
    budget: SolveBudget,
) -> Result<Nimber, SolveError> {
    let start = UgState {
        removed: mask.clone(),
        token: p.token(),
    };
    ExactSolver::new(UgGame::new(p.graph()), budget).grundy(&start)
}

/// Solver that keeps its table across many positions on one board.
pub fn ug_solver(graph: &Graph, budget: SolveBudget) -> ExactSolver<UgGame<'_>> {
    ExactSolver::new(UgGame::new(graph), budget)
}
