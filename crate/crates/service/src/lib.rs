//! HTTP/JSON session service for playing the game interactively.
//!
//! Routes:
//! `POST /sessions`, `GET /sessions/{id}`, `POST /sessions/{id}/moves`,
//! `POST /sessions/{id}/undo`, `GET /sessions/{id}/views/{word|inversions|tableau|dfa}`.

pub mod error;
pub mod session;

use std::collections::HashMap;
use std::net::SocketAddr;
use std::path::{Path, PathBuf};
use std::sync::{Arc, Mutex, RwLock};

use axum::extract::{Path as UrlPath, State};
use axum::http::StatusCode;
use axum::routing::{get, post};
use axum::{Json, Router};
use serde::Deserialize;
use serde_json::{json, Value};
use tower_http::cors::{Any, CorsLayer};

pub use error::ServiceError;
pub use session::{Session, SessionRecord, SessionSpec};

type Shared = Arc<Mutex<Session>>;

/// Sessions keyed by id; each one locked on its own.
#[derive(Default)]
pub struct Store {
    sessions: RwLock<HashMap<String, Shared>>,
}

impl Store {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn create(&self, spec: SessionSpec) -> Result<Shared, ServiceError> {
        let id = uuid::Uuid::new_v4().simple().to_string();
        let session = Arc::new(Mutex::new(Session::new(id.clone(), spec)?));
        self.sessions
            .write()
            .expect("session map lock")
            .insert(id, session.clone());
        Ok(session)
    }

    pub fn get(&self, id: &str) -> Result<Shared, ServiceError> {
        self.sessions
            .read()
            .expect("session map lock")
            .get(id)
            .cloned()
            .ok_or_else(|| ServiceError::NotFound(id.to_string()))
    }

    pub fn len(&self) -> usize {
        self.sessions.read().expect("session map lock").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn records(&self) -> Vec<SessionRecord> {
        let map = self.sessions.read().expect("session map lock");
        let mut out: Vec<SessionRecord> = map
            .values()
            .map(|s| s.lock().expect("session lock").record())
            .collect();
        out.sort_by(|a, b| a.id.cmp(&b.id));
        out
    }

    pub fn restore(records: Vec<SessionRecord>) -> Result<Self, ServiceError> {
        let store = Store::new();
        {
            let mut map = store.sessions.write().expect("session map lock");
            for r in records {
                let s = Session::restore(r)?;
                map.insert(s.id.clone(), Arc::new(Mutex::new(s)));
            }
        }
        Ok(store)
    }

    pub fn save(&self, path: &Path) -> std::io::Result<()> {
        let body = json!({ "schema": kostant::report::SCHEMA, "sessions": self.records() });
        std::fs::write(path, serde_json::to_string_pretty(&body)?)
    }

    pub fn load(path: &Path) -> std::io::Result<Self> {
        #[derive(Deserialize)]
        struct Snapshot {
            sessions: Vec<SessionRecord>,
        }
        let text = std::fs::read_to_string(path)?;
        let snap: Snapshot = serde_json::from_str(&text)?;
        Store::restore(snap.sessions).map_err(|e| std::io::Error::other(e.to_string()))
    }
}

fn tagged(kind: &str, body: Value) -> Json<Value> {
    let report = kostant::report::Report::new(kind, &body).expect("json values serialize");
    Json(report.to_value())
}

fn parse_body<T: serde::de::DeserializeOwned>(body: Value) -> Result<T, ServiceError> {
    serde_json::from_value(body).map_err(|e| ServiceError::BadRequest(e.to_string()))
}

async fn create_session(
    State(store): State<Arc<Store>>,
    Json(body): Json<Value>,
) -> Result<(StatusCode, Json<Value>), ServiceError> {
    let spec: SessionSpec = parse_body(body)?;
    let session = store.create(spec)?;
    let view = session.lock().expect("session lock").state_view()?;
    Ok((StatusCode::CREATED, tagged("session", view)))
}

async fn get_session(
    State(store): State<Arc<Store>>,
    UrlPath(id): UrlPath<String>,
) -> Result<Json<Value>, ServiceError> {
    let session = store.get(&id)?;
    let view = session.lock().expect("session lock").state_view()?;
    Ok(tagged("session", view))
}

#[derive(Deserialize)]
struct MoveBody {
    vertex: usize,
}

async fn post_move(
    State(store): State<Arc<Store>>,
    UrlPath(id): UrlPath<String>,
    Json(body): Json<Value>,
) -> Result<Json<Value>, ServiceError> {
    let MoveBody { vertex } = parse_body(body)?;
    let session = store.get(&id)?;
    let mut s = session.lock().expect("session lock");
    s.fire(vertex)?;
    Ok(tagged("session", s.state_view()?))
}

async fn post_undo(
    State(store): State<Arc<Store>>,
    UrlPath(id): UrlPath<String>,
) -> Result<Json<Value>, ServiceError> {
    let session = store.get(&id)?;
    let mut s = session.lock().expect("session lock");
    s.undo()?;
    Ok(tagged("session", s.state_view()?))
}

async fn get_view(
    State(store): State<Arc<Store>>,
    UrlPath((id, view)): UrlPath<(String, String)>,
) -> Result<Json<Value>, ServiceError> {
    let session = store.get(&id)?;
    let s = session.lock().expect("session lock");
    let body = match view.as_str() {
        "word" => s.word_view()?,
        "inversions" => s.inversions_view()?,
        "tableau" => s.tableau_view()?,
        "dfa" => s.dfa_view()?,
        other => return Err(ServiceError::NotFound(format!("{id}/views/{other}"))),
    };
    Ok(tagged(&view, body))
}

pub fn router(store: Arc<Store>) -> Router {
    let cors = CorsLayer::new()
        .allow_origin(Any)
        .allow_methods(Any)
        .allow_headers(Any);
    Router::new()
        .route("/sessions", post(create_session))
        .route("/sessions/{id}", get(get_session))
        .route("/sessions/{id}/moves", post(post_move))
        .route("/sessions/{id}/undo", post(post_undo))
        .route("/sessions/{id}/views/{view}", get(get_view))
        .layer(cors)
        .with_state(store)
}

#[derive(Debug, Clone)]
pub struct ServeOptions {
    pub addr: SocketAddr,
    /// Sessions are loaded from here at start (if present) and written back
    /// on shutdown.
    pub snapshot: Option<PathBuf>,
}

pub async fn serve(opts: ServeOptions) -> std::io::Result<()> {
    let store = match &opts.snapshot {
        Some(p) if p.exists() => Store::load(p)?,
        _ => Store::new(),
    };
    let store = Arc::new(store);
    let listener = tokio::net::TcpListener::bind(opts.addr).await?;
    axum::serve(listener, router(store.clone()))
        .with_graceful_shutdown(async {
            let _ = tokio::signal::ctrl_c().await;
        })
        .await?;
    if let Some(p) = &opts.snapshot {
        store.save(p)?;
    }
    Ok(())
}

/// Run [`serve`] on a fresh multi-threaded runtime.
pub fn serve_blocking(opts: ServeOptions) -> std::io::Result<()> {
    tokio::runtime::Builder::new_multi_thread()
        .enable_all()
        .build()?
        .block_on(serve(opts))
}
