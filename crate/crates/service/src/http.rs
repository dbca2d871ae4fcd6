//! HTTP JSON API over [`WhatIf`].

use std::net::SocketAddr;
use std::sync::Arc;

use axum::extract::{Path, Query, State};
use axum::http::{header, StatusCode};
use axum::response::{IntoResponse, Response};
use axum::routing::{get, post};
use axum::{Json, Router};
use serde::Deserialize;

use crate::error::{Result, ServiceError};
use crate::service::WhatIf;

type Shared = Arc<WhatIf>;

impl IntoResponse for ServiceError {
    fn into_response(self) -> Response {
        let status = match &self {
            ServiceError::NotFound(_) => StatusCode::NOT_FOUND,
            ServiceError::Conflict(_) => StatusCode::CONFLICT,
            ServiceError::Core(argsched_core::Error::Json(_)) => StatusCode::BAD_REQUEST,
            ServiceError::Invalid(_) | ServiceError::Core(_) => StatusCode::UNPROCESSABLE_ENTITY,
            ServiceError::Storage(_) => StatusCode::INTERNAL_SERVER_ERROR,
        };
        let body = serde_json::json!({ "error": self.to_string() });
        (status, Json(body)).into_response()
    }
}

fn json_text(status: StatusCode, text: String) -> Response {
    (status, [(header::CONTENT_TYPE, "application/json")], text).into_response()
}

/// Core computations can take a while under large budgets; keep them off the async workers.
async fn blocking<T, F>(f: F) -> Result<T>
where
    T: Send + 'static,
    F: FnOnce() -> Result<T> + Send + 'static,
{
    tokio::task::spawn_blocking(f)
        .await
        .map_err(|e| ServiceError::Storage(format!("worker failed: {e}")))?
}

#[derive(Deserialize)]
struct CreateQuery {
    solver: Option<String>,
}

async fn create(
    State(app): State<Shared>,
    Query(q): Query<CreateQuery>,
    body: String,
) -> Result<Response> {
    let solver = q.solver.as_deref().map(str::parse).transpose()?;
    let doc = blocking(move || app.create_session(&body, solver)).await?;
    Ok(json_text(StatusCode::CREATED, doc))
}

async fn show(State(app): State<Shared>, Path(id): Path<String>) -> Result<Response> {
    let doc = blocking(move || app.session(&id)).await?;
    Ok(json_text(StatusCode::OK, doc))
}

async fn propose(
    State(app): State<Shared>,
    Path(id): Path<String>,
    body: String,
) -> Result<Response> {
    let report = blocking(move || app.propose(&id, &body)).await?;
    Ok(Json(report).into_response())
}

async fn disturb(
    State(app): State<Shared>,
    Path(id): Path<String>,
    body: String,
) -> Result<Response> {
    let report = blocking(move || app.disturb(&id, &body)).await?;
    Ok(Json(report).into_response())
}

async fn af(
    State(app): State<Shared>,
    Path((id, kind)): Path<(String, String)>,
) -> Result<Response> {
    let af = blocking(move || app.af(&id, &kind)).await?;
    Ok(Json(af).into_response())
}

async fn export(State(app): State<Shared>, Path(id): Path<String>) -> Result<Response> {
    let disposition = format!("attachment; filename=\"{id}.json\"");
    let doc = blocking(move || app.export(&id)).await?;
    let headers = [
        (header::CONTENT_TYPE, "application/json".to_string()),
        (header::CONTENT_DISPOSITION, disposition),
    ];
    Ok((headers, doc).into_response())
}

async fn import(State(app): State<Shared>, body: String) -> Result<Response> {
    let doc = blocking(move || {
        let id = app.import(&body)?;
        app.session(&id)
    })
    .await?;
    Ok(json_text(StatusCode::CREATED, doc))
}

pub fn router(app: WhatIf) -> Router {
    Router::new()
        .route("/sessions", post(create))
        .route("/sessions/{id}", get(show))
        .route("/sessions/{id}/propose", post(propose))
        .route("/sessions/{id}/disturbances", post(disturb))
        .route("/sessions/{id}/af/{kind}", get(af))
        .route("/sessions/{id}/export", get(export))
        .route("/import", post(import))
        .with_state(Arc::new(app))
}

pub async fn serve(app: WhatIf, addr: SocketAddr) -> std::io::Result<()> {
    let listener = tokio::net::TcpListener::bind(addr).await?;
    axum::serve(listener, router(app)).await
}
