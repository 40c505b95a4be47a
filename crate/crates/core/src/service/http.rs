use super::{ServiceError, Store};
use axum::body::Bytes;
use axum::extract::{Path, State};
use axum::http::{HeaderValue, Method, StatusCode};
use axum::response::{IntoResponse, Response};
use axum::routing::{get, post};
use axum::{Json, Router};
use serde::Serialize;
use serde_json::json;
use std::net::SocketAddr;
use std::sync::Arc;
use tower_http::cors::{AllowOrigin, CorsLayer};

#[derive(Debug, Clone)]
pub struct ServeConfig {
    pub port: u16,
    /// Origin allowed by CORS; `*` allows any.
    pub cors_origin: Option<String>,
}

impl IntoResponse for ServiceError {
    fn into_response(self) -> Response {
        let status = StatusCode::from_u16(self.status()).expect("service statuses are valid");
        let body = json!({ "error": self.kind(), "message": self.to_string() });
        (status, Json(body)).into_response()
    }
}

async fn blocking<T, F>(store: Arc<Store>, f: F) -> Result<Json<T>, ServiceError>
where
    T: Serialize + Send + 'static,
    F: FnOnce(&Store) -> Result<T, ServiceError> + Send + 'static,
{
    tokio::task::spawn_blocking(move || f(&store))
        .await
        .expect("handler task panicked")
        .map(Json)
}

async fn create(State(store): State<Arc<Store>>, body: Bytes) -> Response {
    match blocking(store, move |s| s.create(&body)).await {
        Ok(created) => (StatusCode::CREATED, created).into_response(),
        Err(e) => e.into_response(),
    }
}

async fn show(State(store): State<Arc<Store>>, Path(id): Path<String>) -> Response {
    blocking(store, move |s| s.get(&id)).await.into_response()
}

async fn play(State(store): State<Arc<Store>>, Path(id): Path<String>, body: Bytes) -> Response {
    blocking(store, move |s| s.apply_move_json(&id, &body))
        .await
        .into_response()
}

async fn hint(State(store): State<Arc<Store>>, Path(id): Path<String>) -> Response {
    blocking(store, move |s| s.hint(&id)).await.into_response()
}

async fn health(State(store): State<Arc<Store>>) -> Json<serde_json::Value> {
    Json(json!({ "status": "ok", "sessions": store.len() }))
}

pub fn router(store: Arc<Store>, cors_origin: Option<&str>) -> Router {
    let routes = Router::new()
        .route("/api/games", post(create))
        .route("/api/games/{id}", get(show))
        .route("/api/games/{id}/moves", post(play))
        .route("/api/games/{id}/hint", get(hint))
        .route("/api/health", get(health))
        .with_state(store);
    match cors_origin {
        None => routes,
        Some(origin) => {
            let allow = if origin == "*" {
                AllowOrigin::any()
            } else {
                match HeaderValue::from_str(origin) {
                    Ok(v) => AllowOrigin::exact(v),
                    Err(_) => {
                        tracing::warn!(origin, "ignoring unusable CORS origin");
                        return routes;
                    }
                }
            };
            routes.layer(
                CorsLayer::new()
                    .allow_origin(allow)
                    .allow_methods([Method::GET, Method::POST])
                    .allow_headers([axum::http::header::CONTENT_TYPE]),
            )
        }
    }
}

pub async fn serve(store: Arc<Store>, config: ServeConfig) -> std::io::Result<()> {
    let app = router(store, config.cors_origin.as_deref());
    let addr = SocketAddr::from(([0, 0, 0, 0], config.port));
    let listener = tokio::net::TcpListener::bind(addr).await?;
    tracing::info!("listening on {}", listener.local_addr()?);
    axum::serve(listener, app)
        .with_graceful_shutdown(async {
            let _ = tokio::signal::ctrl_c().await;
        })
        .await
}
