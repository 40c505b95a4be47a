//! Generic impartial-game interface and the memoized exact solver.

use super::nimber::{mex, Nimber};
use std::collections::HashMap;
use std::hash::Hash;
use std::time::{Duration, Instant};

/// An impartial ruleset given by its option enumerator.
///
/// Implementations must describe a finite, acyclic game.
pub trait ImpartialGame {
    type State: Clone + Eq + Hash;

    fn options(&self, state: &Self::State) -> Vec<Self::State>;
}

/// A ruleset that can also answer "is the player to move winning?".
pub trait WinnabilityOracle: ImpartialGame {
    fn is_winnable(&self, state: &Self::State) -> bool;
}

/// Limits for exponential searches.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct SolveBudget {
    /// Maximum number of distinct positions evaluated.
    pub max_states: u64,
    /// Wall-clock limit in milliseconds.
    pub max_millis: u64,
}

impl Default for SolveBudget {
    fn default() -> Self {
        SolveBudget {
            max_states: 20_000_000,
            max_millis: 120_000,
        }
    }
}

impl SolveBudget {
    pub fn states(max_states: u64) -> Self {
        SolveBudget {
            max_states,
            ..Self::default()
        }
    }

    pub fn unlimited() -> Self {
        SolveBudget {
            max_states: u64::MAX,
            max_millis: u64::MAX,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SolveError {
    #[error("search budget exceeded after {states} states ({elapsed_ms} ms)")]
    BudgetExceeded { states: u64, elapsed_ms: u64 },
}

struct Frame<S> {
    state: S,
    children: Vec<S>,
    next: usize,
    values: Vec<Nimber>,
}

/// Depth-first Grundy evaluation with a transposition table that survives
/// between queries on the same game.
pub struct ExactSolver<G: ImpartialGame> {
    game: G,
    budget: SolveBudget,
    memo: HashMap<G::State, Nimber>,
}

impl<G: ImpartialGame> ExactSolver<G> {
    pub fn new(game: G, budget: SolveBudget) -> Self {
        ExactSolver {
            game,
            budget,
            memo: HashMap::new(),
        }
    }

    pub fn game(&self) -> &G {
        &self.game
    }

    /// Distinct positions evaluated so far.
    pub fn states(&self) -> u64 {
        self.memo.len() as u64
    }

    pub fn grundy(&mut self, start: &G::State) -> Result<Nimber, SolveError> {
        if let Some(&v) = self.memo.get(start) {
            return Ok(v);
        }
        let started = Instant::now();
        let limit = Duration::from_millis(self.budget.max_millis);
        let mut expansions: u64 = 0;
        let mut stack = vec![self.frame(start.clone())];
        loop {
            let top = stack.last_mut().expect("stack is non-empty");
            if top.next < top.children.len() {
                let child = &top.children[top.next];
                if let Some(&v) = self.memo.get(child) {
                    top.values.push(v);
                    top.next += 1;
                    continue;
                }
                let child = child.clone();
                expansions += 1;
                let states = self.memo.len() as u64 + stack.len() as u64;
                if states >= self.budget.max_states
                    || (expansions.is_multiple_of(4096) && started.elapsed() > limit)
                {
                    return Err(SolveError::BudgetExceeded {
                        states,
                        elapsed_ms: started.elapsed().as_millis() as u64,
                    });
                }
                stack.push(self.frame(child));
            } else {
                let done = stack.pop().expect("stack is non-empty");
                let value = mex(done.values);
                self.memo.insert(done.state, value);
                match stack.last_mut() {
                    Some(parent) => {
                        parent.values.push(value);
                        parent.next += 1;
                    }
                    None => return Ok(value),
                }
            }
        }
    }

    fn frame(&self, state: G::State) -> Frame<G::State> {
        let children = self.game.options(&state);
        Frame {
            values: Vec::with_capacity(children.len()),
            state,
            children,
            next: 0,
        }
    }
}

/// One-shot exact Grundy value of `start` under `game`.
pub fn solve_game<G: ImpartialGame>(
    game: G,
    start: &G::State,
    budget: SolveBudget,
) -> Result<Nimber, SolveError> {
    ExactSolver::new(game, budget).grundy(start)
}
