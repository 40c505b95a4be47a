//! Nimber algebra and Grundy-value solvers.

mod bab;
mod degree2;
mod degree3;
mod exact;
mod game;
mod nimber;

pub use bab::{grundy_bab, grundy_bab_with_stats, BabConfig, BabStats};
pub use degree2::{
    abstract_degree2_reduction, abstract_degree2_with_calls, CallbackContractViolation,
    CallbackGame,
};
pub use degree3::{
    grundy_degree3, grundy_degree3_masked, grundy_degree3_with_stats, Degree3Error, Degree3Stats,
};
pub use exact::{exact_grundy, ug_solver, UgGame, UgState};
pub use game::{solve_game, ExactSolver, ImpartialGame, SolveBudget, SolveError, WinnabilityOracle};
pub use nimber::{mex, nim_sum, Nimber};
