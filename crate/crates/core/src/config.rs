//! `key = value` configuration. The file named by `AWNEV_CONFIG` is read
//! first; command-line flags override it.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::nevanlinna::DEFAULT_THETA_POINTS;
use crate::qcore::roots::DEFAULT_CLUSTER_TOL;
use crate::qcore::scalar::{fmt_q, parse_q, qr, serde_q};
use crate::qcore::Q;

pub const CONFIG_ENV: &str = "AWNEV_CONFIG";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Json,
    Csv,
    Table,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Config {
    #[serde(with = "serde_q")]
    pub s: Q,
    pub theta_points: usize,
    pub cluster_tol: f64,
    pub slack: f64,
    pub relation_degree: Option<usize>,
    /// `None` lets each command pick its natural format.
    pub format: Option<OutputFormat>,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            s: qr(1, 2),
            theta_points: DEFAULT_THETA_POINTS,
            cluster_tol: DEFAULT_CLUSTER_TOL,
            slack: 0.05,
            relation_degree: None,
            format: None,
        }
    }
}

fn bad(key: &str, value: &str) -> Error {
    Error::InvalidParameter(format!("config: bad value {value:?} for {key}"))
}

impl Config {
    /// Applies `key = value` lines on top of `self`. Blank lines and `#`
    /// comments are ignored; unknown keys are errors.
    pub fn apply_str(mut self, text: &str) -> Result<Self> {
        for (no, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap().trim();
            if line.is_empty() {
                continue;
            }
            let (k, v) = line
                .split_once('=')
                .ok_or_else(|| Error::InvalidParameter(format!("config line {}: expected key = value", no + 1)))?;
            let (k, v) = (k.trim(), v.trim());
            match k {
                "s" => self.s = parse_q(v)?,
                "theta_points" => self.theta_points = v.parse().map_err(|_| bad(k, v))?,
                "cluster_tol" => self.cluster_tol = v.parse().map_err(|_| bad(k, v))?,
                "slack" => self.slack = v.parse().map_err(|_| bad(k, v))?,
                "relation_degree" => self.relation_degree = Some(v.parse().map_err(|_| bad(k, v))?),
                "format" => {
                    self.format = Some(match v {
                        "json" => OutputFormat::Json,
                        "csv" => OutputFormat::Csv,
                        "table" => OutputFormat::Table,
                        _ => return Err(bad(k, v)),
                    })
                }
                _ => return Err(Error::InvalidParameter(format!("config: unknown key {k:?}"))),
            }
        }
        self.validate()?;
        Ok(self)
    }

    pub fn load(path: &Path) -> Result<Self> {
        Config::default().apply_str(&std::fs::read_to_string(path)?)
    }

    /// Defaults, overlaid with the file named by `AWNEV_CONFIG` if set.
    pub fn from_env() -> Result<Self> {
        match std::env::var_os(CONFIG_ENV) {
            Some(p) => Config::load(Path::new(&p)),
            None => Ok(Config::default()),
        }
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.s > Q::from_integer(0.into()) && self.s < Q::from_integer(1.into())) {
            return Err(Error::InvalidParameter(format!("s = {} must lie in (0, 1)", fmt_q(&self.s))));
        }
        if self.theta_points < 64 {
            return Err(Error::InvalidParameter("theta_points must be at least 64".into()));
        }
        if !(self.slack > 0.0 && self.slack < 1.0) {
            return Err(Error::InvalidParameter("slack must lie in (0, 1)".into()));
        }
        if !(self.cluster_tol > 0.0) {
            return Err(Error::InvalidParameter("cluster_tol must be positive".into()));
        }
        Ok(())
    }
}
