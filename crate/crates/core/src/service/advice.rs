use crate::grundy::SolveBudget;
use crate::matching::winning_move;
use crate::variants::{fast_variant_solve, VariantMove, VariantState};
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum AdviceQuality {
    /// Backed by a complete analysis of the position.
    Exact,
    /// Some option could not be evaluated within budget.
    Heuristic,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum AdviceReason {
    WinningMove,
    NoWinningMove,
    NeedsNimber,
    Terminal,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Advice {
    pub mv: Option<VariantMove>,
    pub reason: AdviceReason,
    pub quality: AdviceQuality,
}

impl Advice {
    fn exact(mv: Option<VariantMove>, reason: AdviceReason) -> Self {
        Advice {
            mv,
            reason,
            quality: AdviceQuality::Exact,
        }
    }
}

/// A move to a position the opponent loses, when one exists and every
/// option could be classified.
pub fn advise(state: &VariantState, budget: SolveBudget) -> Advice {
    if state.is_terminal() {
        return Advice::exact(None, AdviceReason::Terminal);
    }
    if let VariantState::Plain(c) = state {
        return match winning_move(&c.position(), &c.removed) {
            Some(to) => Advice::exact(Some(VariantMove::Traverse { to }), AdviceReason::WinningMove),
            None => Advice::exact(None, AdviceReason::NoWinningMove),
        };
    }
    let mut unknown = false;
    for mv in state.legal_moves() {
        let child = state.apply(mv).expect("listed moves are legal");
        match fast_variant_solve(&child, budget).winnable {
            Some(false) => return Advice::exact(Some(mv), AdviceReason::WinningMove),
            Some(true) => {}
            None => unknown = true,
        }
    }
    if unknown {
        Advice {
            mv: None,
            reason: AdviceReason::NeedsNimber,
            quality: AdviceQuality::Heuristic,
        }
    } else {
        Advice::exact(None, AdviceReason::NoWinningMove)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{Graph, Position};
    use crate::grundy::SolveBudget;
    use crate::variants::{variant_grundy, UgComponent};

    fn component(n: usize, edges: &[(usize, usize)], token: usize) -> UgComponent {
        UgComponent::new(&Position::new(Graph::from_edges(n, edges.iter().copied()).unwrap(), token).unwrap())
    }

    #[test]
    fn losing_position_has_no_hint() {
        let s = VariantState::Plain(component(2, &[(0, 1)], 0));
        let s = s.apply(VariantMove::Traverse { to: 1 }).unwrap();
        assert_eq!(advise(&s, SolveBudget::default()).reason, AdviceReason::Terminal);
        let star3 = VariantState::Plain(component(4, &[(0, 1), (1, 2), (1, 3)], 0));
        let a = advise(&star3, SolveBudget::default());
        assert_eq!(a.reason, AdviceReason::NoWinningMove);
        assert_eq!(a.mv, None);
    }

    #[test]
    fn sum_hint_reaches_zero() {
        let s = VariantState::Sum(vec![component(2, &[(0, 1)], 0), component(3, &[(0, 1), (1, 2)], 0)]);
        let a = advise(&s, SolveBudget::default());
        let child = s.apply(a.mv.unwrap()).unwrap();
        assert!(variant_grundy(&child, SolveBudget::default()).unwrap().is_zero());
    }

    #[test]
    fn unaffordable_options_are_flagged() {
        let k6: Vec<(usize, usize)> = (0..6).flat_map(|u| (u + 1..6).map(move |v| (u, v))).collect();
        let s = VariantState::Sum(vec![component(6, &k6, 0), component(2, &[(0, 1)], 0)]);
        let a = advise(&s, SolveBudget::states(0));
        assert_eq!(a.reason, AdviceReason::NeedsNimber);
        assert_eq!(a.quality, AdviceQuality::Heuristic);
        let a = advise(&s, SolveBudget::default());
        assert_eq!(a, Advice::exact(None, AdviceReason::NoWinningMove));
    }
}
