//! Run configuration: plain-text key=value files overridden by CLI flags.
//!
//! Every report embeds the resolved configuration, and identical
//! configurations produce identical numeric output.

use std::path::{Path, PathBuf};

use serde::Serialize;

use crate::error::{Error, Result};

pub const CACHE_DIR_ENV: &str = "SONINE_CACHE_DIR";

#[derive(Debug, Clone, Serialize)]
pub struct RunConfig {
    /// Zero table height for Σ_ρ checks.
    pub zero_height: f64,
    /// Möbius truncation for the Ramanujan left side.
    pub n_moebius: u64,
    /// Critical-line cutoff for Mellin sampling.
    pub t_cut: f64,
    /// Support [a, A] of the default bump.
    pub support_lo: f64,
    pub support_hi: f64,
    /// Basis size and collocation count for the Hermite construction.
    pub hermite_basis: usize,
    pub hermite_points: usize,
    /// Window height for the zero-density report.
    pub density_height: f64,
    /// Support of the bump used by the zero-density report; a wider log
    /// width puts the desk-scale count comfortably inside the ratio window.
    pub density_support_lo: f64,
    pub density_support_hi: f64,
    /// Ramanujan scale parameters checked by `ramanujan` and `all`.
    pub ramanujan_a: Vec<f64>,
    /// Seed for randomized sample points.
    pub seed: u64,
    /// Directory for JSON/CSV reports.
    pub out_dir: PathBuf,
    /// Zero-table cache directory (SONINE_CACHE_DIR overrides).
    pub cache_dir: Option<PathBuf>,
    /// Optional pre-computed zero table to ingest instead of recomputing.
    pub zero_table: Option<PathBuf>,
    /// Worker-thread cap for parallel sections (0 = library default).
    pub jobs: usize,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            zero_height: 100.0,
            n_moebius: 10_000_000,
            t_cut: 60.0,
            support_lo: 0.5,
            support_hi: 2.0,
            hermite_basis: 24,
            hermite_points: 8,
            density_height: 100.0,
            density_support_lo: 0.4,
            density_support_hi: 2.5,
            ramanujan_a: vec![1.0, 2.0, 5.0],
            seed: 1,
            out_dir: PathBuf::from("reports"),
            cache_dir: None,
            zero_table: None,
            jobs: 0,
        }
    }
}

impl RunConfig {
    /// Parses a key=value file; '#' starts a comment, blank lines ignored.
    pub fn from_file(path: &Path) -> Result<Self> {
        let mut config = RunConfig::default();
        let text = std::fs::read_to_string(path)?;
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line.split_once('=').ok_or_else(|| Error::Config(format!(
                "line {}: expected key=value, got {raw:?}",
                lineno + 1
            )))?;
            config.set(key.trim(), value.trim())?;
        }
        Ok(config)
    }

    pub fn set(&mut self, key: &str, value: &str) -> Result<()> {
        let bad = |e: &dyn std::fmt::Display| Error::Config(format!("{key}: {e}"));
        match key {
            "zero_height" => self.zero_height = value.parse().map_err(|e| bad(&e))?,
            "n_moebius" => self.n_moebius = value.parse().map_err(|e| bad(&e))?,
            "t_cut" => self.t_cut = value.parse().map_err(|e| bad(&e))?,
            "support_lo" => self.support_lo = value.parse().map_err(|e| bad(&e))?,
            "support_hi" => self.support_hi = value.parse().map_err(|e| bad(&e))?,
            "hermite_basis" => self.hermite_basis = value.parse().map_err(|e| bad(&e))?,
            "hermite_points" => self.hermite_points = value.parse().map_err(|e| bad(&e))?,
            "density_height" => self.density_height = value.parse().map_err(|e| bad(&e))?,
            "density_support_lo" => self.density_support_lo = value.parse().map_err(|e| bad(&e))?,
            "density_support_hi" => self.density_support_hi = value.parse().map_err(|e| bad(&e))?,
            "ramanujan_a" => {
                self.ramanujan_a = value
                    .split(',')
                    .map(|v| v.trim().parse::<f64>())
                    .collect::<std::result::Result<Vec<_>, _>>()
                    .map_err(|e| bad(&e))?;
            }
            "seed" => self.seed = value.parse().map_err(|e| bad(&e))?,
            "out_dir" => self.out_dir = PathBuf::from(value),
            "cache_dir" => self.cache_dir = Some(PathBuf::from(value)),
            "zero_table" => self.zero_table = Some(PathBuf::from(value)),
            "jobs" => self.jobs = value.parse().map_err(|e| bad(&e))?,
            other => return Err(Error::Config(format!("unknown key {other:?}"))),
        }
        Ok(())
    }

    /// Cache directory with the environment override applied.
    pub fn resolved_cache_dir(&self) -> Option<PathBuf> {
        std::env::var_os(CACHE_DIR_ENV)
            .map(PathBuf::from)
            .or_else(|| self.cache_dir.clone())
    }

    pub fn as_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("config serialization")
    }
}
