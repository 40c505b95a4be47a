//! Generalized Geography by plain game-tree search.

use crate::graph::{DirectedGraph, DirectedPosition, VertexMask};
use std::collections::HashMap;

/// Memoized win/loss search over directed vertex Geography.
pub struct DirectedSolver<'a> {
    graph: &'a DirectedGraph,
    memo: HashMap<(VertexMask, usize), bool>,
}

impl<'a> DirectedSolver<'a> {
    pub fn new(graph: &'a DirectedGraph) -> Self {
        DirectedSolver {
            graph,
            memo: HashMap::new(),
        }
    }

    /// Whether the mover wins with the token on `token` and `removed` gone.
    pub fn mover_wins(&mut self, removed: &VertexMask, token: usize) -> bool {
        let key = (removed.clone(), token);
        if let Some(&w) = self.memo.get(&key) {
            return w;
        }
        let after = removed.with(token);
        let graph = self.graph;
        let win = graph
            .successors(token)
            .iter()
            .filter(|&&v| !after.contains(v))
            .any(|&v| !self.mover_wins(&after, v));
        self.memo.insert(key, win);
        win
    }
}

/// True iff the player to move wins the directed position.
pub fn solve_directed(p: &DirectedPosition) -> bool {
    DirectedSolver::new(p.graph()).mover_wins(&VertexMask::new(p.graph().vertex_count()), p.token())
}
