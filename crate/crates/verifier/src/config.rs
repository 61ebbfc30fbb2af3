//! `key = value` configuration: capacity caps, primes and run defaults.
//!
//! ```text
//! # comments start with '#'
//! max_nonzeros = 2000000
//! primes = 2147483647, 2147483629, 2147483587
//! rank = modular
//! seed = 7
//! workers = 4
//! timings = true
//! ```

use std::path::Path;

use minorel_core::linalg::{RankConfig, RankMethod, DEFAULT_MAX_NONZEROS};
use minorel_core::scalar::PRIMES;
use serde::{Deserialize, Serialize};

use crate::VerifierError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Config {
    pub max_nonzeros: usize,
    pub primes: Vec<u64>,
    pub rank: RankMethod,
    pub seed: u64,
    pub workers: usize,
    /// Record wall-clock timings; off makes reports byte-reproducible.
    pub timings: bool,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            max_nonzeros: DEFAULT_MAX_NONZEROS,
            primes: PRIMES.to_vec(),
            rank: RankMethod::Modular,
            seed: 0,
            workers: std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1),
            timings: true,
        }
    }
}

impl Config {
    pub fn parse(text: &str) -> Result<Self, VerifierError> {
        let mut cfg = Config::default();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let bad = |why: String| VerifierError::Config(format!("line {}: {why}", lineno + 1));
            let (key, value) = line.split_once('=').ok_or_else(|| bad(format!("expected key = value, got `{line}`")))?;
            let (key, value) = (key.trim(), value.trim());
            let num = |v: &str| v.parse::<u64>().map_err(|e| bad(format!("{key}: {e}")));
            match key {
                "max_nonzeros" => cfg.max_nonzeros = num(value)? as usize,
                "seed" => cfg.seed = num(value)?,
                "workers" => cfg.workers = (num(value)? as usize).max(1),
                "rank" => cfg.rank = value.parse().map_err(|e| bad(format!("{e}")))?,
                "timings" => {
                    cfg.timings = value.parse().map_err(|_| bad(format!("timings: expected true or false, got `{value}`")))?
                }
                "primes" => {
                    let ps = value.split(',').map(|p| num(p.trim())).collect::<Result<Vec<_>, _>>()?;
                    if let Some(p) = ps.iter().find(|p| !PRIMES.contains(p)) {
                        return Err(bad(format!("prime {p} is not in the supported list {PRIMES:?}")));
                    }
                    if ps.len() < 2 {
                        return Err(bad("at least two primes are needed".into()));
                    }
                    cfg.primes = ps;
                }
                _ => return Err(bad(format!("unknown key `{key}`"))),
            }
        }
        Ok(cfg)
    }

    pub fn load(path: &Path) -> Result<Self, VerifierError> {
        let text = std::fs::read_to_string(path).map_err(|e| VerifierError::Config(format!("{}: {e}", path.display())))?;
        Self::parse(&text)
    }

    pub fn rank_config(&self, method: RankMethod, seed: u64) -> RankConfig {
        RankConfig { method, seed, max_nonzeros: self.max_nonzeros, primes: self.primes.clone() }
    }
}
