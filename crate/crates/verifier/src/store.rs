//! Content-addressed result files.
//!
//! A report is stored under the first 16 hex digits of the SHA-256 of the
//! resolved task together with the primes and capacity it was run with, so
//! the same request maps to the same file.

use std::path::{Path, PathBuf};

use serde_json::json;
use sha2::{Digest, Sha256};

use crate::config::Config;
use crate::report::{Report, Task};
use crate::{VerifierError, RESULTS_ENV};

pub fn key(task: &Task, cfg: &Config) -> String {
    let blob = json!({ "task": task, "primes": cfg.primes, "max_nonzeros": cfg.max_nonzeros });
    let digest = Sha256::digest(blob.to_string().as_bytes());
    hex::encode(&digest[..8])
}

pub struct Store {
    dir: PathBuf,
}

impl Store {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        Store { dir: dir.into() }
    }

    /// The store named by the environment, if set.
    pub fn from_env() -> Option<Self> {
        std::env::var_os(RESULTS_ENV).filter(|v| !v.is_empty()).map(Store::new)
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn path(&self, task: &Task, cfg: &Config) -> PathBuf {
        self.dir.join(format!("{}.json", key(task, cfg)))
    }

    pub fn load(&self, task: &Task, cfg: &Config) -> Option<Report> {
        let text = std::fs::read_to_string(self.path(task, cfg)).ok()?;
        let report: Report = serde_json::from_str(&text).ok()?;
        (report.task == *task).then_some(report)
    }

    pub fn save(&self, report: &Report, cfg: &Config) -> Result<PathBuf, VerifierError> {
        std::fs::create_dir_all(&self.dir)?;
        let path = self.path(&report.task, cfg);
        let tmp = path.with_extension("json.tmp");
        std::fs::write(&tmp, serde_json::to_string_pretty(report)?)?;
        std::fs::rename(&tmp, &path)?;
        Ok(path)
    }
}
