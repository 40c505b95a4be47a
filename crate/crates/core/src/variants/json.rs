//! The variant JSON envelope: `{"variant": "...", ...fields}`.

use super::state::{Card, MultiTokenState, SwapUnoState, UgComponent, VariantState};
use crate::graph::{parse_position, serialize_position, Format, Graph, ParseError, VertexMask};
use serde::{Deserialize, Serialize};
use std::sync::Arc;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "variant", rename_all = "lowercase", deny_unknown_fields)]
pub enum VariantSpec {
    Plain {
        graph: serde_json::Value,
    },
    Sum {
        components: Vec<serde_json::Value>,
    },
    Pass {
        graph: serde_json::Value,
        passes: u32,
    },
    Multitoken {
        vertices: usize,
        edges: Vec<[usize; 2]>,
        tokens: Vec<usize>,
    },
    Swapuno {
        hands: [Vec<Card>; 2],
        #[serde(default)]
        top: Option<Card>,
        #[serde(default)]
        swap_used: bool,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EnvelopeError {
    #[error("malformed variant: {0}")]
    Malformed(String),
    #[error("board {index}: {source}")]
    Board { index: usize, source: ParseError },
    #[error("invalid variant: {0}")]
    Invalid(String),
}

/// Upper limit on simultaneous tokens.
pub const MAX_TOKENS: usize = 8;

fn board(index: usize, value: &serde_json::Value) -> Result<UgComponent, EnvelopeError> {
    let text = serde_json::to_vec(value).expect("values serialize");
    parse_position(&text, Format::Json)
        .map(|p| UgComponent::new(&p))
        .map_err(|source| EnvelopeError::Board { index, source })
}

pub fn parse_variant(text: &[u8]) -> Result<VariantState, EnvelopeError> {
    let spec: VariantSpec =
        serde_json::from_slice(text).map_err(|e| EnvelopeError::Malformed(e.to_string()))?;
    VariantState::try_from(spec)
}

impl TryFrom<VariantSpec> for VariantState {
    type Error = EnvelopeError;

    fn try_from(spec: VariantSpec) -> Result<Self, EnvelopeError> {
        Ok(match spec {
            VariantSpec::Plain { graph } => VariantState::Plain(board(0, &graph)?),
            VariantSpec::Sum { components } => VariantState::Sum(
                components
                    .iter()
                    .enumerate()
                    .map(|(i, c)| board(i, c))
                    .collect::<Result<_, _>>()?,
            ),
            VariantSpec::Pass { graph, passes } => VariantState::Pass {
                game: board(0, &graph)?,
                passes,
            },
            VariantSpec::Multitoken {
                vertices,
                edges,
                tokens,
            } => {
                let graph = Graph::from_edges(vertices, edges.iter().map(|&[u, v]| (u, v)))
                    .map_err(|e| EnvelopeError::Invalid(e.to_string()))?;
                if tokens.is_empty() || tokens.len() > MAX_TOKENS {
                    return Err(EnvelopeError::Invalid(format!(
                        "need 1 to {MAX_TOKENS} tokens, got {}",
                        tokens.len()
                    )));
                }
                for (i, &t) in tokens.iter().enumerate() {
                    if t >= vertices {
                        return Err(EnvelopeError::Invalid(format!("token {t} out of range")));
                    }
                    if tokens[..i].contains(&t) {
                        return Err(EnvelopeError::Invalid(format!("two tokens on vertex {t}")));
                    }
                }
                VariantState::MultiToken(MultiTokenState {
                    graph: Arc::new(graph),
                    tokens,
                    removed: VertexMask::new(vertices),
                })
            }
            VariantSpec::Swapuno {
                hands,
                top,
                swap_used,
            } => VariantState::SwapUno(SwapUnoState {
                hands,
                top,
                swap_used,
            }),
        })
    }
}

fn board_value(c: &UgComponent) -> serde_json::Value {
    serde_json::from_str(&serialize_position(&c.position())).expect("canonical JSON parses")
}

/// Envelope for a state. Removed vertices are not part of the envelope, so
/// this describes the board as if play started here with nothing removed.
pub fn variant_to_json(s: &VariantState) -> VariantSpec {
    match s {
        VariantState::Plain(c) => VariantSpec::Plain { graph: board_value(c) },
        VariantState::Sum(parts) => VariantSpec::Sum {
            components: parts.iter().map(board_value).collect(),
        },
        VariantState::Pass { game, passes } => VariantSpec::Pass {
            graph: board_value(game),
            passes: *passes,
        },
        VariantState::MultiToken(m) => VariantSpec::Multitoken {
            vertices: m.graph.vertex_count(),
            edges: m.graph.edges().map(|(u, v)| [u, v]).collect(),
            tokens: m.tokens.clone(),
        },
        VariantState::SwapUno(u) => VariantSpec::Swapuno {
            hands: u.hands.clone(),
            top: u.top,
            swap_used: u.swap_used,
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_each_variant() {
        let plain = br#"{"variant":"plain","graph":{"vertices":2,"edges":[[0,1]],"token":0}}"#;
        assert!(matches!(parse_variant(plain).unwrap(), VariantState::Plain(_)));
        let sum = br#"{"variant":"sum","components":[{"vertices":1,"edges":[],"token":0},{"vertices":2,"edges":[[0,1]],"token":1}]}"#;
        assert!(matches!(parse_variant(sum).unwrap(), VariantState::Sum(ref p) if p.len() == 2));
        let pass = br#"{"variant":"pass","graph":{"vertices":2,"edges":[[0,1]],"token":0},"passes":3}"#;
        assert!(matches!(parse_variant(pass).unwrap(), VariantState::Pass { passes: 3, .. }));
        let multi = br#"{"variant":"multitoken","vertices":3,"edges":[[0,1],[1,2]],"tokens":[0,2]}"#;
        assert!(matches!(parse_variant(multi).unwrap(), VariantState::MultiToken(_)));
        let uno = br#"{"variant":"swapuno","hands":[[{"color":1,"rank":2}],[]]}"#;
        assert!(matches!(parse_variant(uno).unwrap(), VariantState::SwapUno(_)));
    }

    #[test]
    fn rejects_bad_envelopes() {
        assert!(matches!(parse_variant(b"{\"variant\":\"chess\"}"), Err(EnvelopeError::Malformed(_))));
        let bad_board = br#"{"variant":"plain","graph":{"vertices":2,"edges":[[0,5]],"token":0}}"#;
        assert!(matches!(parse_variant(bad_board), Err(EnvelopeError::Board { index: 0, .. })));
        let clash = br#"{"variant":"multitoken","vertices":3,"edges":[],"tokens":[1,1]}"#;
        assert!(matches!(parse_variant(clash), Err(EnvelopeError::Invalid(_))));
    }

    #[test]
    fn round_trip() {
        let text = br#"{"variant":"pass","graph":{"vertices":3,"edges":[[0,1],[1,2]],"token":1},"passes":2}"#;
        let s = parse_variant(text).unwrap();
        let again = VariantState::try_from(variant_to_json(&s)).unwrap();
        assert_eq!(s, again);
    }
}
