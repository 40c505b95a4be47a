//! Game sessions, move advice and the HTTP front end.
//!
//! [`Store`] holds every session and is shared by the HTTP handlers and the
//! terminal `play` loop, so both surfaces run the same code.

mod advice;
mod http;
mod view;

pub use advice::{advise, Advice, AdviceQuality, AdviceReason};
pub use http::{router, serve, ServeConfig};
pub use view::{BoardView, ComponentView, GameView};

use crate::grundy::SolveBudget;
use crate::variants::{variant_to_json, VariantMove, VariantSpec, VariantState};
use chrono::{DateTime, Utc};
use rand::seq::SliceRandom;
use serde::{Deserialize, Serialize};
use std::collections::HashMap;
use std::path::{Path, PathBuf};
use std::sync::{Arc, Mutex, RwLock};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ServiceError {
    #[error("malformed request: {0}")]
    Malformed(String),
    #[error("invalid game: {0}")]
    Invalid(String),
    #[error("illegal move: {0}")]
    Illegal(String),
    #[error("unknown game {0}")]
    NotFound(String),
}

impl ServiceError {
    pub fn status(&self) -> u16 {
        match self {
            ServiceError::Malformed(_) => 400,
            ServiceError::NotFound(_) => 404,
            ServiceError::Illegal(_) => 409,
            ServiceError::Invalid(_) => 422,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            ServiceError::Malformed(_) => "malformed",
            ServiceError::NotFound(_) => "not_found",
            ServiceError::Illegal(_) => "illegal_move",
            ServiceError::Invalid(_) => "invalid",
        }
    }
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CreateRequest {
    pub game: serde_json::Value,
    #[serde(default)]
    pub ai_players: Vec<u8>,
}

/// A move made by an AI player, with how much the choice can be trusted.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AiMove {
    pub player: u8,
    #[serde(rename = "move")]
    pub mv: VariantMove,
    pub advice_quality: AdviceQuality,
}

#[derive(Debug, Clone, Serialize)]
pub struct MoveResponse {
    pub game: GameView,
    pub ai_moves: Vec<AiMove>,
}

#[derive(Debug, Clone, Serialize)]
pub struct HintResponse {
    #[serde(rename = "move")]
    pub mv: Option<VariantMove>,
    pub reason: AdviceReason,
    pub advice_quality: AdviceQuality,
}

/// Everything needed to rebuild a session: the opening envelope and the
/// moves played since.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SessionRecord {
    pub id: String,
    pub created_at: DateTime<Utc>,
    pub game: VariantSpec,
    pub ai_players: Vec<u8>,
    pub history: Vec<VariantMove>,
}

#[derive(Debug, Clone)]
pub struct Session {
    record: SessionRecord,
    state: VariantState,
}

impl Session {
    pub fn new(game: VariantState, ai_players: Vec<u8>) -> Result<Session, ServiceError> {
        if let Some(p) = ai_players.iter().find(|&&p| p > 1) {
            return Err(ServiceError::Invalid(format!("player {p} does not exist")));
        }
        let mut ai_players = ai_players;
        ai_players.sort_unstable();
        ai_players.dedup();
        Ok(Session {
            record: SessionRecord {
                id: uuid::Uuid::new_v4().to_string(),
                created_at: Utc::now(),
                game: variant_to_json(&game),
                ai_players,
                history: Vec::new(),
            },
            state: game,
        })
    }

    /// Rebuilds a session by replaying its history from the opening.
    pub fn replay(record: SessionRecord) -> Result<Session, ServiceError> {
        let mut state =
            VariantState::try_from(record.game.clone()).map_err(|e| ServiceError::Invalid(e.to_string()))?;
        for &mv in &record.history {
            state = state.apply(mv).map_err(|e| ServiceError::Illegal(e.to_string()))?;
        }
        Ok(Session { record, state })
    }

    pub fn id(&self) -> &str {
        &self.record.id
    }

    pub fn record(&self) -> &SessionRecord {
        &self.record
    }

    pub fn state(&self) -> &VariantState {
        &self.state
    }

    pub fn to_move(&self) -> u8 {
        (self.record.history.len() % 2) as u8
    }

    pub fn is_ai_turn(&self) -> bool {
        !self.state.is_terminal() && self.record.ai_players.contains(&self.to_move())
    }

    pub fn apply(&mut self, mv: VariantMove) -> Result<(), ServiceError> {
        self.state = self.state.apply(mv).map_err(|e| ServiceError::Illegal(e.to_string()))?;
        self.record.history.push(mv);
        Ok(())
    }

    pub fn view(&self) -> GameView {
        GameView::of(self)
    }
}

#[derive(Debug, Clone)]
pub struct StoreConfig {
    pub snapshot_dir: Option<PathBuf>,
    /// Budget for each AI or hint evaluation.
    pub budget: SolveBudget,
}

impl Default for StoreConfig {
    fn default() -> Self {
        StoreConfig {
            snapshot_dir: None,
            budget: SolveBudget {
                max_states: 2_000_000,
                max_millis: 10_000,
            },
        }
    }
}

/// In-memory session table. Each session has its own lock; solver work runs
/// on cloned states with no lock held.
pub struct Store {
    sessions: RwLock<HashMap<String, Arc<Mutex<Session>>>>,
    config: StoreConfig,
}

impl Store {
    pub fn new(config: StoreConfig) -> Store {
        Store {
            sessions: RwLock::new(HashMap::new()),
            config,
        }
    }

    pub fn config(&self) -> &StoreConfig {
        &self.config
    }

    pub fn len(&self) -> usize {
        self.sessions.read().expect("session table poisoned").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Loads every `*.json` record in the snapshot directory. Records that
    /// no longer replay are skipped with a warning.
    pub fn load_snapshots(&self) -> std::io::Result<usize> {
        let Some(dir) = &self.config.snapshot_dir else {
            return Ok(0);
        };
        std::fs::create_dir_all(dir)?;
        let mut loaded = 0;
        for entry in std::fs::read_dir(dir)? {
            let path = entry?.path();
            if path.extension().is_none_or(|e| e != "json") {
                continue;
            }
            let restored = std::fs::read(&path)
                .map_err(|e| e.to_string())
                .and_then(|text| serde_json::from_slice::<SessionRecord>(&text).map_err(|e| e.to_string()))
                .and_then(|record| Session::replay(record).map_err(|e| e.to_string()));
            match restored {
                Ok(session) => {
                    self.insert(session);
                    loaded += 1;
                }
                Err(e) => tracing::warn!(path = %path.display(), "skipping snapshot: {e}"),
            }
        }
        Ok(loaded)
    }

    fn insert(&self, session: Session) -> Arc<Mutex<Session>> {
        let id = session.id().to_string();
        let handle = Arc::new(Mutex::new(session));
        self.sessions
            .write()
            .expect("session table poisoned")
            .insert(id, handle.clone());
        handle
    }

    fn lookup(&self, id: &str) -> Result<Arc<Mutex<Session>>, ServiceError> {
        self.sessions
            .read()
            .expect("session table poisoned")
            .get(id)
            .cloned()
            .ok_or_else(|| ServiceError::NotFound(id.to_string()))
    }

    pub fn create(&self, body: &[u8]) -> Result<MoveResponse, ServiceError> {
        let req: CreateRequest =
            serde_json::from_slice(body).map_err(|e| ServiceError::Malformed(e.to_string()))?;
        let spec: VariantSpec =
            serde_json::from_value(req.game).map_err(|e| ServiceError::Malformed(e.to_string()))?;
        let state = VariantState::try_from(spec).map_err(|e| ServiceError::Invalid(e.to_string()))?;
        self.create_session(state, req.ai_players)
    }

    pub fn create_session(&self, game: VariantState, ai_players: Vec<u8>) -> Result<MoveResponse, ServiceError> {
        let session = Session::new(game, ai_players)?;
        self.persist(&session);
        let handle = self.insert(session);
        let ai_moves = self.run_ai(&handle);
        let game = handle.lock().expect("session poisoned").view();
        Ok(MoveResponse { game, ai_moves })
    }

    pub fn get(&self, id: &str) -> Result<GameView, ServiceError> {
        Ok(self.lookup(id)?.lock().expect("session poisoned").view())
    }

    pub fn record(&self, id: &str) -> Result<SessionRecord, ServiceError> {
        Ok(self.lookup(id)?.lock().expect("session poisoned").record().clone())
    }

    pub fn apply_move_json(&self, id: &str, body: &[u8]) -> Result<MoveResponse, ServiceError> {
        let handle = self.lookup(id)?;
        let mv: VariantMove = serde_json::from_slice(body).map_err(|e| ServiceError::Malformed(e.to_string()))?;
        self.play(&handle, mv)
    }

    pub fn apply_move(&self, id: &str, mv: VariantMove) -> Result<MoveResponse, ServiceError> {
        let handle = self.lookup(id)?;
        self.play(&handle, mv)
    }

    fn play(&self, handle: &Arc<Mutex<Session>>, mv: VariantMove) -> Result<MoveResponse, ServiceError> {
        {
            let mut session = handle.lock().expect("session poisoned");
            if session.state().is_terminal() {
                return Err(ServiceError::Illegal("the game is over".into()));
            }
            session.apply(mv)?;
            self.persist(&session);
        }
        let ai_moves = self.run_ai(handle);
        let game = handle.lock().expect("session poisoned").view();
        Ok(MoveResponse { game, ai_moves })
    }

    /// Plays AI turns until a human is to move or the game ends. A reply is
    /// dropped if another request moved first.
    fn run_ai(&self, handle: &Arc<Mutex<Session>>) -> Vec<AiMove> {
        let mut made = Vec::new();
        loop {
            let (state, ply, player) = {
                let session = handle.lock().expect("session poisoned");
                if !session.is_ai_turn() {
                    return made;
                }
                (session.state().clone(), session.record().history.len(), session.to_move())
            };
            let advice = advise(&state, self.config.budget);
            let mv = match advice.mv {
                Some(mv) => mv,
                None => *state
                    .legal_moves()
                    .choose(&mut rand::thread_rng())
                    .expect("AI turns have a legal move"),
            };
            let mut session = handle.lock().expect("session poisoned");
            if session.record().history.len() != ply {
                return made;
            }
            session.apply(mv).expect("AI moves come from the legal move list");
            self.persist(&session);
            made.push(AiMove {
                player,
                mv,
                advice_quality: advice.quality,
            });
        }
    }

    pub fn hint(&self, id: &str) -> Result<HintResponse, ServiceError> {
        let state = self.lookup(id)?.lock().expect("session poisoned").state().clone();
        let advice = advise(&state, self.config.budget);
        Ok(HintResponse {
            mv: advice.mv,
            reason: advice.reason,
            advice_quality: advice.quality,
        })
    }

    fn persist(&self, session: &Session) {
        if let Some(dir) = &self.config.snapshot_dir {
            if let Err(e) = write_snapshot(dir, session.record()) {
                tracing::warn!(id = session.id(), "snapshot failed: {e}");
            }
        }
    }
}

fn write_snapshot(dir: &Path, record: &SessionRecord) -> std::io::Result<()> {
    std::fs::create_dir_all(dir)?;
    let tmp = dir.join(format!("{}.json.tmp", record.id));
    std::fs::write(&tmp, serde_json::to_vec_pretty(record)?)?;
    std::fs::rename(tmp, dir.join(format!("{}.json", record.id)))
}
