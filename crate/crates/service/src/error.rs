use axum::http::StatusCode;
use axum::response::{IntoResponse, Response};
use axum::Json;
use serde_json::json;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ServiceError {
    #[error("unknown session {0}")]
    NotFound(String),
    #[error("{0}")]
    Conflict(String),
    #[error("{0}")]
    BadRequest(String),
}

impl ServiceError {
    pub fn status(&self) -> StatusCode {
        match self {
            ServiceError::NotFound(_) => StatusCode::NOT_FOUND,
            ServiceError::Conflict(_) => StatusCode::CONFLICT,
            ServiceError::BadRequest(_) => StatusCode::BAD_REQUEST,
        }
    }
}

impl From<kostant::Error> for ServiceError {
    fn from(e: kostant::Error) -> Self {
        match e {
            kostant::Error::IllegalMove { .. } | kostant::Error::GroupTooLarge(_) => {
                ServiceError::Conflict(e.to_string())
            }
            other => ServiceError::BadRequest(other.to_string()),
        }
    }
}

impl IntoResponse for ServiceError {
    fn into_response(self) -> Response {
        let body = json!({
            "schema": kostant::report::SCHEMA,
            "error": self.to_string(),
            "status": self.status().as_u16(),
        });
        (self.status(), Json(body)).into_response()
    }
}
