use std::fs;
use std::path::{Path, PathBuf};

use anyhow::Context;
use sadik_core::linspace;
use serde::Deserialize;

use crate::UsageError;

/// `t_min:t_max:n_points`, or a single point.
#[derive(Debug, Clone, Copy, PartialEq, Deserialize)]
pub struct GridSpec {
    pub t_min: f64,
    pub t_max: f64,
    pub n_points: usize,
}

impl GridSpec {
    pub fn parse(s: &str) -> Result<Self, UsageError> {
        let bad = || UsageError(format!("bad grid '{s}', expected a:b:n or a single value"));
        let parts: Vec<&str> = s.split(':').map(str::trim).collect();
        let num = |x: &str| x.parse::<f64>().map_err(|_| bad());
        match parts.as_slice() {
            [x] => {
                let x = num(x)?;
                Ok(GridSpec {
                    t_min: x,
                    t_max: x,
                    n_points: 1,
                })
            }
            [a, b, n] => {
                let g = GridSpec {
                    t_min: num(a)?,
                    t_max: num(b)?,
                    n_points: n.parse().map_err(|_| bad())?,
                };
                g.validate()?;
                Ok(g)
            }
            _ => Err(bad()),
        }
    }

    pub fn validate(&self) -> Result<(), UsageError> {
        if !self.t_min.is_finite() || !self.t_max.is_finite() {
            return Err(UsageError("grid bounds must be finite".into()));
        }
        if self.n_points == 1 && self.t_min == self.t_max {
            return Ok(());
        }
        if self.n_points < 2 {
            return Err(UsageError(format!(
                "grid needs at least 2 points, got {}",
                self.n_points
            )));
        }
        if !(self.t_min < self.t_max) {
            return Err(UsageError(format!(
                "grid needs t_min < t_max, got {} and {}",
                self.t_min, self.t_max
            )));
        }
        Ok(())
    }

    pub fn points(&self) -> Vec<f64> {
        linspace(self.t_min, self.t_max, self.n_points)
    }
}

/// Parameters read from `--config`. Any field may be omitted; flags win.
#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    pub alpha: Option<f64>,
    pub beta: Option<f64>,
    pub gamma: Option<f64>,
    pub b: Option<f64>,
    pub r: Option<f64>,
    pub d: Option<f64>,
    pub y0: Option<f64>,
    pub grid: Option<GridSpec>,
    pub tol: Option<f64>,
    pub out: Option<PathBuf>,
}

impl RunConfig {
    pub fn load(path: Option<&Path>) -> anyhow::Result<Self> {
        let Some(path) = path else {
            return Ok(Self::default());
        };
        let text = fs::read_to_string(path)
            .with_context(|| format!("reading config {}", path.display()))?;
        let cfg: RunConfig = serde_json::from_str(&text)
            .map_err(|e| UsageError(format!("config {}: {e}", path.display())))?;
        if let Some(g) = &cfg.grid {
            g.validate()?;
        }
        Ok(cfg)
    }
}

/// Flag value, else config value, else a usage error naming both.
pub fn required(flag: Option<f64>, file: Option<f64>, name: &str) -> Result<f64, UsageError> {
    flag.or(file)
        .ok_or_else(|| UsageError(format!("--{name} is required (or \"{name}\" in --config)")))
}

pub fn tolerance(flag: Option<f64>, file: Option<f64>, default: f64) -> Result<f64, UsageError> {
    let tol = flag.or(file).unwrap_or(default);
    if !(tol > 0.0) || !tol.is_finite() {
        return Err(UsageError(format!("tolerance must be positive, got {tol}")));
    }
    Ok(tol)
}

pub fn grid(
    flag: Option<&str>,
    file: Option<GridSpec>,
    default: Option<&str>,
    name: &str,
) -> Result<Vec<f64>, UsageError> {
    let spec = match (flag, file, default) {
        (Some(s), _, _) => GridSpec::parse(s)?,
        (None, Some(g), _) => g,
        (None, None, Some(d)) => GridSpec::parse(d)?,
        (None, None, None) => {
            return Err(UsageError(format!(
                "--{name} is required (or \"grid\" in --config)"
            )))
        }
    };
    Ok(spec.points())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_syntax() {
        assert_eq!(
            GridSpec::parse("2:5:4").unwrap().points(),
            vec![2.0, 3.0, 4.0, 5.0]
        );
        assert_eq!(GridSpec::parse("2").unwrap().points(), vec![2.0]);
        assert!(GridSpec::parse("5:2:4").is_err());
        assert!(GridSpec::parse("0:1:1").is_err());
        assert!(GridSpec::parse("0:1").is_err());
        assert!(GridSpec::parse("a:1:3").is_err());
    }

    #[test]
    fn flags_override_file() {
        assert_eq!(required(Some(1.0), Some(2.0), "alpha").unwrap(), 1.0);
        assert_eq!(required(None, Some(2.0), "alpha").unwrap(), 2.0);
        assert!(required(None, None, "alpha").is_err());
        assert!(tolerance(Some(0.0), None, 1e-6).is_err());
    }
}
