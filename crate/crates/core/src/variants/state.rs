use crate::graph::{Graph, Position, VertexMask};
use std::hash::{Hash, Hasher};
use std::sync::Arc;

/// A residual Undirected Geography game: board, removed vertices, token.
#[derive(Debug, Clone)]
pub struct UgComponent {
    pub graph: Arc<Graph>,
    pub removed: VertexMask,
    pub token: usize,
}

impl UgComponent {
    pub fn new(p: &Position) -> Self {
        UgComponent {
            graph: Arc::clone(p.shared_graph()),
            removed: p.fresh_mask(),
            token: p.token(),
        }
    }

    pub fn with_mask(p: &Position, removed: VertexMask) -> Self {
        UgComponent {
            removed,
            ..Self::new(p)
        }
    }

    pub fn position(&self) -> Position {
        Position::new(Arc::clone(&self.graph), self.token).expect("token in range")
    }

    /// Vertices the token may move to.
    pub fn moves(&self) -> Vec<usize> {
        let after = self.removed.with(self.token);
        self.graph.live_neighbors(self.token, &after).collect()
    }

    pub fn advance(&self, to: usize) -> UgComponent {
        UgComponent {
            graph: Arc::clone(&self.graph),
            removed: self.removed.with(self.token),
            token: to,
        }
    }

    /// Live degree bound used to pick the degree-3 solver.
    pub fn max_live_degree(&self) -> usize {
        (0..self.graph.vertex_count())
            .filter(|&v| !self.removed.contains(v))
            .map(|v| self.graph.live_degree(v, &self.removed))
            .max()
            .unwrap_or(0)
    }

    pub fn live_vertex_count(&self) -> usize {
        self.graph.vertex_count() - self.removed.count()
    }
}

impl PartialEq for UgComponent {
    fn eq(&self, other: &Self) -> bool {
        self.token == other.token
            && self.removed == other.removed
            && (Arc::ptr_eq(&self.graph, &other.graph) || self.graph == other.graph)
    }
}

impl Eq for UgComponent {}

impl Hash for UgComponent {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.removed.hash(state);
        self.token.hash(state);
    }
}

/// Several tokens on one board; each move advances one token to an adjacent
/// unoccupied vertex and removes the vertex it left.
#[derive(Debug, Clone)]
pub struct MultiTokenState {
    pub graph: Arc<Graph>,
    pub tokens: Vec<usize>,
    pub removed: VertexMask,
}

impl MultiTokenState {
    pub fn moves(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (i, &t) in self.tokens.iter().enumerate() {
            for v in self.graph.live_neighbors(t, &self.removed) {
                if !self.tokens.contains(&v) {
                    out.push((i, v));
                }
            }
        }
        out
    }

    pub fn advance(&self, index: usize, to: usize) -> MultiTokenState {
        let mut tokens = self.tokens.clone();
        let from = std::mem::replace(&mut tokens[index], to);
        MultiTokenState {
            graph: Arc::clone(&self.graph),
            tokens,
            removed: self.removed.with(from),
        }
    }
}

impl PartialEq for MultiTokenState {
    fn eq(&self, other: &Self) -> bool {
        self.tokens == other.tokens
            && self.removed == other.removed
            && (Arc::ptr_eq(&self.graph, &other.graph) || self.graph == other.graph)
    }
}

impl Eq for MultiTokenState {}

impl Hash for MultiTokenState {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.removed.hash(state);
        self.tokens.hash(state);
    }
}

#[derive(
    Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize, serde::Deserialize,
)]
pub struct Card {
    pub color: u32,
    pub rank: u32,
}

impl Card {
    pub fn matches(self, other: Card) -> bool {
        self.color == other.color || self.rank == other.rank
    }
}

/// Swap Uno from the mover's side: `hands[0]` belongs to the player to move.
#[derive(Debug, Clone, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub struct SwapUnoState {
    pub hands: [Vec<Card>; 2],
    /// Card on the pile; `None` is a free opening where any card may lead.
    pub top: Option<Card>,
    pub swap_used: bool,
}

impl SwapUnoState {
    /// Distinct playable cards from the mover's hand.
    pub fn playable(&self) -> Vec<Card> {
        let mut cards: Vec<Card> = self.hands[0]
            .iter()
            .copied()
            .filter(|&c| self.top.is_none_or(|t| t.matches(c)))
            .collect();
        cards.sort_unstable();
        cards.dedup();
        cards
    }

    pub fn play(&self, card: Card) -> Option<SwapUnoState> {
        if self.top.is_some_and(|t| !t.matches(card)) {
            return None;
        }
        let at = self.hands[0].iter().position(|&c| c == card)?;
        let mut mine = self.hands[0].clone();
        mine.remove(at);
        Some(SwapUnoState {
            hands: [self.hands[1].clone(), mine],
            top: Some(card),
            swap_used: self.swap_used,
        })
    }

    /// Exchanging hands and passing the turn leaves the mover facing the
    /// same hand as before, so only the flag changes.
    pub fn swap(&self) -> Option<SwapUnoState> {
        (!self.swap_used).then(|| SwapUnoState {
            swap_used: true,
            ..self.clone()
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum VariantState {
    Plain(UgComponent),
    Sum(Vec<UgComponent>),
    /// `passes` is the shared pool left for both players.
    Pass { game: UgComponent, passes: u32 },
    MultiToken(MultiTokenState),
    SwapUno(SwapUnoState),
}

/// One move in any variant.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum VariantMove {
    Traverse { to: usize },
    MultiTraverse { token_index: usize, to: usize },
    Pass,
    Swap,
    ComponentMove { component_index: usize, to: usize },
    UnoPlay { card: Card },
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("illegal move {mv:?}: {reason}")]
pub struct IllegalMove {
    pub mv: VariantMove,
    pub reason: String,
}

impl VariantState {
    pub fn kind(&self) -> &'static str {
        match self {
            VariantState::Plain(_) => "plain",
            VariantState::Sum(_) => "sum",
            VariantState::Pass { .. } => "pass",
            VariantState::MultiToken(_) => "multitoken",
            VariantState::SwapUno(_) => "swapuno",
        }
    }

    pub fn legal_moves(&self) -> Vec<VariantMove> {
        match self {
            VariantState::Plain(c) => c.moves().into_iter().map(|to| VariantMove::Traverse { to }).collect(),
            VariantState::Sum(parts) => parts
                .iter()
                .enumerate()
                .flat_map(|(i, c)| {
                    c.moves().into_iter().map(move |to| VariantMove::ComponentMove {
                        component_index: i,
                        to,
                    })
                })
                .collect(),
            VariantState::Pass { game, passes } => {
                let mut out: Vec<VariantMove> =
                    game.moves().into_iter().map(|to| VariantMove::Traverse { to }).collect();
                if *passes > 0 {
                    out.push(VariantMove::Pass);
                }
                out
            }
            VariantState::MultiToken(m) => m
                .moves()
                .into_iter()
                .map(|(token_index, to)| VariantMove::MultiTraverse { token_index, to })
                .collect(),
            VariantState::SwapUno(u) => {
                let mut out: Vec<VariantMove> =
                    u.playable().into_iter().map(|card| VariantMove::UnoPlay { card }).collect();
                if !u.swap_used {
                    out.push(VariantMove::Swap);
                }
                out
            }
        }
    }

    pub fn apply(&self, mv: VariantMove) -> Result<VariantState, IllegalMove> {
        let illegal = |reason: &str| IllegalMove {
            mv,
            reason: reason.to_string(),
        };
        let next = match (self, mv) {
            (VariantState::Plain(c), VariantMove::Traverse { to }) if c.moves().contains(&to) => {
                VariantState::Plain(c.advance(to))
            }
            (VariantState::Sum(parts), VariantMove::ComponentMove { component_index, to })
                if parts.get(component_index).is_some_and(|c| c.moves().contains(&to)) =>
            {
                let mut parts = parts.clone();
                parts[component_index] = parts[component_index].advance(to);
                VariantState::Sum(parts)
            }
            (VariantState::Pass { game, passes }, VariantMove::Traverse { to }) if game.moves().contains(&to) => {
                VariantState::Pass {
                    game: game.advance(to),
                    passes: *passes,
                }
            }
            (VariantState::Pass { game, passes }, VariantMove::Pass) if *passes > 0 => VariantState::Pass {
                game: game.clone(),
                passes: passes - 1,
            },
            (VariantState::MultiToken(m), VariantMove::MultiTraverse { token_index, to })
                if m.moves().contains(&(token_index, to)) =>
            {
                VariantState::MultiToken(m.advance(token_index, to))
            }
            (VariantState::SwapUno(u), VariantMove::UnoPlay { card }) => {
                VariantState::SwapUno(u.play(card).ok_or_else(|| illegal("card not playable"))?)
            }
            (VariantState::SwapUno(u), VariantMove::Swap) => {
                VariantState::SwapUno(u.swap().ok_or_else(|| illegal("swap already used"))?)
            }
            _ => return Err(illegal("not a legal move in this position")),
        };
        Ok(next)
    }

    pub fn options(&self) -> Vec<VariantState> {
        let mut out: Vec<VariantState> = Vec::new();
        for mv in self.legal_moves() {
            let next = self.apply(mv).expect("listed moves are legal");
            if !out.contains(&next) {
                out.push(next);
            }
        }
        out
    }

    pub fn is_terminal(&self) -> bool {
        self.legal_moves().is_empty()
    }
}
