//! Grundy values of degree-2 impartial games from a winnability oracle.

use super::game::{ImpartialGame, WinnabilityOracle};
use super::nimber::Nimber;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CallbackContractViolation {
    #[error("position at depth {depth} has {options} options; a degree-2 game allows at most 2")]
    TooManyOptions { depth: usize, options: usize },
    #[error("oracle reports a win at depth {depth} but no option is a loss")]
    NoZeroChild { depth: usize },
    #[error("value {value} reached below a mixed node; expected * or *2")]
    OutOfRange { value: u32 },
}

/// Grundy value of `start` using only winnability queries plus a walk down
/// the unique Fuzzy child of each mixed node.
pub fn abstract_degree2_reduction<G: WinnabilityOracle>(
    game: &G,
    start: &G::State,
) -> Result<Nimber, CallbackContractViolation> {
    abstract_degree2_with_calls(game, start).map(|(v, _)| v)
}

/// As [`abstract_degree2_reduction`], also returning the number of oracle calls.
pub fn abstract_degree2_with_calls<G: WinnabilityOracle>(
    game: &G,
    start: &G::State,
) -> Result<(Nimber, usize), CallbackContractViolation> {
    let mut calls = 1;
    if !game.is_winnable(start) {
        // a Zero position has value 0 regardless of its options
        let options = game.options(start).len();
        if options > 2 {
            return Err(CallbackContractViolation::TooManyOptions { depth: 0, options });
        }
        return Ok((Nimber(0), calls));
    }
    let mut state = start.clone();
    let mut depth = 0;
    let base = loop {
        let options = game.options(&state);
        if options.len() > 2 {
            return Err(CallbackContractViolation::TooManyOptions {
                depth,
                options: options.len(),
            });
        }
        let zero: Vec<bool> = options
            .iter()
            .map(|o| {
                calls += 1;
                !game.is_winnable(o)
            })
            .collect();
        match zero[..] {
            [] | [false] | [false, false] => {
                return Err(CallbackContractViolation::NoZeroChild { depth })
            }
            [true] | [true, true] => break 1u32,
            [true, false] | [false, true] => {
                let fuzzy = usize::from(zero[0]);
                state = options[fuzzy].clone();
                depth += 1;
            }
            _ => unreachable!(),
        }
    };
    let mut v = base;
    for _ in 0..depth {
        if v != 1 && v != 2 {
            return Err(CallbackContractViolation::OutOfRange { value: v });
        }
        v = 3 - v;
    }
    Ok((Nimber(v), calls))
}

/// Adapts a pair of closures to [`WinnabilityOracle`].
pub struct CallbackGame<S, O, W> {
    options: O,
    winnable: W,
    _state: std::marker::PhantomData<fn(&S)>,
}

impl<S, O, W> CallbackGame<S, O, W> {
    pub fn new(options: O, winnable: W) -> Self {
        CallbackGame {
            options,
            winnable,
            _state: std::marker::PhantomData,
        }
    }
}

impl<S, O, W> ImpartialGame for CallbackGame<S, O, W>
where
    S: Clone + Eq + std::hash::Hash,
    O: Fn(&S) -> Vec<S>,
    W: Fn(&S) -> bool,
{
    type State = S;

    fn options(&self, s: &S) -> Vec<S> {
        (self.options)(s)
    }
}

impl<S, O, W> WinnabilityOracle for CallbackGame<S, O, W>
where
    S: Clone + Eq + std::hash::Hash,
    O: Fn(&S) -> Vec<S>,
    W: Fn(&S) -> bool,
{
    fn is_winnable(&self, s: &S) -> bool {
        (self.winnable)(s)
    }
}
