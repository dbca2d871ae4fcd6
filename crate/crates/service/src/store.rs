//! Sessions kept in memory and, optionally, one JSON file per session on disk.

use std::collections::HashMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::sync::{Arc, Mutex, MutexGuard};

use crate::error::{Result, ServiceError};
use crate::session::{parse_session, valid_id, Session};

type Slot = Arc<Mutex<Session>>;

/// Each session sits behind its own mutex, so calls on one session are serialized
/// while calls on different sessions run independently.
#[derive(Debug, Default)]
pub struct SessionStore {
    dir: Option<PathBuf>,
    slots: Mutex<HashMap<String, Slot>>,
}

fn lock<T>(m: &Mutex<T>) -> MutexGuard<'_, T> {
    // A panic in one request must not wedge the session for everyone else.
    m.lock().unwrap_or_else(|poisoned| poisoned.into_inner())
}

impl SessionStore {
    pub fn in_memory() -> Self {
        SessionStore::default()
    }

    /// Persists under `dir`, creating it if needed. Existing files load lazily.
    pub fn open(dir: impl Into<PathBuf>) -> Result<Self> {
        let dir = dir.into();
        fs::create_dir_all(&dir)?;
        Ok(SessionStore {
            dir: Some(dir),
            slots: Mutex::default(),
        })
    }

    pub fn dir(&self) -> Option<&Path> {
        self.dir.as_deref()
    }

    fn path(&self, id: &str) -> Option<PathBuf> {
        self.dir.as_ref().map(|d| d.join(format!("{id}.json")))
    }

    fn persist(&self, session: &Session) -> Result<()> {
        let Some(path) = self.path(session.id()) else {
            return Ok(());
        };
        let tmp = path.with_extension("json.tmp");
        fs::write(&tmp, session.to_json())?;
        fs::rename(&tmp, &path)?;
        Ok(())
    }

    /// Adds a new session; fails if the id is taken in memory or on disk.
    pub fn insert(&self, session: Session) -> Result<()> {
        let mut slots = lock(&self.slots);
        let id = session.id().to_string();
        if slots.contains_key(&id) || self.path(&id).is_some_and(|p| p.exists()) {
            return Err(ServiceError::Conflict(id));
        }
        self.persist(&session)?;
        slots.insert(id, Arc::new(Mutex::new(session)));
        Ok(())
    }

    fn slot(&self, id: &str) -> Result<Slot> {
        if !valid_id(id) {
            return Err(ServiceError::NotFound(id.to_string()));
        }
        let mut slots = lock(&self.slots);
        if let Some(slot) = slots.get(id) {
            return Ok(slot.clone());
        }
        let path = self
            .path(id)
            .filter(|p| p.exists())
            .ok_or_else(|| ServiceError::NotFound(id.to_string()))?;
        let session = parse_session(&fs::read_to_string(&path)?)
            .map_err(|e| ServiceError::Storage(format!("{}: {e}", path.display())))?;
        if session.id() != id {
            return Err(ServiceError::Storage(format!(
                "{} holds session {}",
                path.display(),
                session.id()
            )));
        }
        let slot = Arc::new(Mutex::new(session));
        slots.insert(id.to_string(), slot.clone());
        Ok(slot)
    }

    pub fn read<T>(&self, id: &str, f: impl FnOnce(&Session) -> Result<T>) -> Result<T> {
        let slot = self.slot(id)?;
        let session = lock(&slot);
        f(&session)
    }

    /// Runs `f` under the session's lock and persists the result when `f` succeeds.
    pub fn update<T>(&self, id: &str, f: impl FnOnce(&mut Session) -> Result<T>) -> Result<T> {
        let slot = self.slot(id)?;
        let mut session = lock(&slot);
        let out = f(&mut session)?;
        self.persist(&session)?;
        Ok(out)
    }
}
