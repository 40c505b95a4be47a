use super::Session;
use crate::variants::{Card, UgComponent, VariantMove, VariantState};
use chrono::{DateTime, Utc};
use serde::Serialize;

/// One Geography board with its removed vertices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComponentView {
    pub vertices: usize,
    pub edges: Vec<[usize; 2]>,
    pub token: usize,
    pub removed: Vec<usize>,
}

impl From<&UgComponent> for ComponentView {
    fn from(c: &UgComponent) -> Self {
        ComponentView {
            vertices: c.graph.vertex_count(),
            edges: c.graph.edges().map(|(u, v)| [u, v]).collect(),
            token: c.token,
            removed: c.removed.iter().collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum BoardView {
    Plain(ComponentView),
    Sum {
        components: Vec<ComponentView>,
    },
    Pass {
        #[serde(flatten)]
        board: ComponentView,
        passes: u32,
    },
    MultiToken {
        vertices: usize,
        edges: Vec<[usize; 2]>,
        tokens: Vec<usize>,
        removed: Vec<usize>,
    },
    /// `hands[p]` is the hand player `p` holds now.
    SwapUno {
        hands: [Vec<Card>; 2],
        top: Option<Card>,
        swap_used: bool,
    },
}

#[derive(Debug, Clone, Serialize)]
pub struct GameView {
    pub id: String,
    pub variant: &'static str,
    pub created_at: DateTime<Utc>,
    pub to_move: u8,
    pub ai_players: Vec<u8>,
    pub history: Vec<VariantMove>,
    pub terminal: bool,
    /// Set once the game is over: the player who made the last move.
    pub winner: Option<u8>,
    pub legal_moves: Vec<VariantMove>,
    pub board: BoardView,
}

impl GameView {
    pub(super) fn of(s: &Session) -> GameView {
        let state = s.state();
        let to_move = s.to_move();
        let terminal = state.is_terminal();
        GameView {
            id: s.id().to_string(),
            variant: state.kind(),
            created_at: s.record().created_at,
            to_move,
            ai_players: s.record().ai_players.clone(),
            history: s.record().history.clone(),
            terminal,
            winner: terminal.then_some(1 - to_move),
            legal_moves: state.legal_moves(),
            board: board(state, to_move),
        }
    }
}

fn board(state: &VariantState, to_move: u8) -> BoardView {
    match state {
        VariantState::Plain(c) => BoardView::Plain(c.into()),
        VariantState::Sum(parts) => BoardView::Sum {
            components: parts.iter().map(ComponentView::from).collect(),
        },
        VariantState::Pass { game, passes } => BoardView::Pass {
            board: game.into(),
            passes: *passes,
        },
        VariantState::MultiToken(m) => BoardView::MultiToken {
            vertices: m.graph.vertex_count(),
            edges: m.graph.edges().map(|(u, v)| [u, v]).collect(),
            tokens: m.tokens.clone(),
            removed: m.removed.iter().collect(),
        },
        VariantState::SwapUno(u) => {
            // the engine keeps the mover's hand first
            let mut hands = u.hands.clone();
            if to_move == 1 {
                hands.swap(0, 1);
            }
            BoardView::SwapUno {
                hands,
                top: u.top,
                swap_used: u.swap_used,
            }
        }
    }
}
