//! Undirected Geography: matching-based winnability, Grundy-value solvers,
//! nimber constructions and reductions between Geography variants.

pub mod constructor;
pub mod graph;
pub mod grundy;
pub mod matching;
pub mod reductions;
pub mod service;
pub mod variants;
pub mod verify;
