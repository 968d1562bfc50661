//! JSON run configuration.
//!
//! ```json
//! {
//!   "blocks": [
//!     {"kind": "pt2", "r": 1.0, "theta": 0.5, "s": 1.2},
//!     {"kind": "level", "a": -0.5}
//!   ],
//!   "beta": 2.0,
//!   "cfrac_depth": 11,
//!   "tol": 1e-12
//! }
//! ```
//!
//! Angles are radians.

use serde::Deserialize;
use thiserror::Error;

use crate::model::{Block, HamiltonianSpec, PTBlock, RealLevel};

pub const DEFAULT_BETA: f64 = 2.0;
pub const DEFAULT_CFRAC_DEPTH: usize = 11;
pub const DEFAULT_TOL: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ConfigError {
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("invalid value for {field}: {message}")]
    Validation { field: String, message: String },
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub spec: HamiltonianSpec,
    pub beta: f64,
    pub cfrac_depth: usize,
    pub tol: f64,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawConfig {
    blocks: Vec<RawBlock>,
    beta: Option<f64>,
    cfrac_depth: Option<usize>,
    tol: Option<f64>,
}

#[derive(Debug, Deserialize)]
#[serde(tag = "kind", deny_unknown_fields)]
enum RawBlock {
    #[serde(rename = "pt2")]
    Pt2 { r: f64, theta: f64, s: f64 },
    #[serde(rename = "level")]
    Level { a: f64 },
}

fn invalid(field: impl Into<String>, message: impl Into<String>) -> ConfigError {
    ConfigError::Validation {
        field: field.into(),
        message: message.into(),
    }
}

fn finite(field: String, value: f64) -> Result<f64, ConfigError> {
    if value.is_finite() {
        Ok(value)
    } else {
        Err(invalid(field, format!("must be finite, got {value}")))
    }
}

pub fn validate_tol(tol: f64) -> Result<f64, ConfigError> {
    if tol.is_finite() && tol > 0.0 {
        Ok(tol)
    } else {
        Err(invalid("tol", format!("must be > 0, got {tol}")))
    }
}

pub fn parse_config(text: &str) -> Result<RunConfig, ConfigError> {
    let raw: RawConfig = serde_json::from_str(text).map_err(|e| ConfigError::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;

    if raw.blocks.is_empty() {
        return Err(invalid("blocks", "must contain at least one block"));
    }
    let mut blocks = Vec::with_capacity(raw.blocks.len());
    for (i, b) in raw.blocks.into_iter().enumerate() {
        let block: Block = match b {
            RawBlock::Pt2 { r, theta, s } => {
                let r = finite(format!("blocks[{i}].r"), r)?;
                let theta = finite(format!("blocks[{i}].theta"), theta)?;
                let s = finite(format!("blocks[{i}].s"), s)?;
                if s <= 0.0 {
                    return Err(invalid(
                        format!("blocks[{i}].s"),
                        format!("must be > 0, got {s}"),
                    ));
                }
                if r < 0.0 {
                    return Err(invalid(
                        format!("blocks[{i}].r"),
                        format!("must be >= 0, got {r}"),
                    ));
                }
                PTBlock::new(r, theta, s)
                    .map_err(|e| invalid(format!("blocks[{i}]"), e.to_string()))?
                    .into()
            }
            RawBlock::Level { a } => {
                let a = finite(format!("blocks[{i}].a"), a)?;
                RealLevel::new(a)
                    .map_err(|e| invalid(format!("blocks[{i}]"), e.to_string()))?
                    .into()
            }
        };
        blocks.push(block);
    }

    let beta = finite("beta".into(), raw.beta.unwrap_or(DEFAULT_BETA))?;
    let cfrac_depth = raw.cfrac_depth.unwrap_or(DEFAULT_CFRAC_DEPTH);
    if cfrac_depth == 0 {
        return Err(invalid("cfrac_depth", "must be >= 1"));
    }
    let tol = validate_tol(raw.tol.unwrap_or(DEFAULT_TOL))?;

    Ok(RunConfig {
        spec: HamiltonianSpec::new(blocks).expect("blocks checked nonempty"),
        beta,
        cfrac_depth,
        tol,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_block() {
        let cfg = parse_config(r#"{"blocks":[{"kind":"pt2","r":1,"theta":0.5,"s":2}]}"#).unwrap();
        assert_eq!(cfg.spec.dimension(), 2);
        assert_eq!(cfg.beta, DEFAULT_BETA);
        assert_eq!(cfg.cfrac_depth, DEFAULT_CFRAC_DEPTH);
        assert_eq!(cfg.tol, DEFAULT_TOL);
    }

    #[test]
    fn five_dimensional_layout_keeps_order() {
        let text = r#"{
            "blocks": [
                {"kind": "pt2", "r": 1.0, "theta": 0.2, "s": 1.0},
                {"kind": "pt2", "r": 0.5, "theta": -0.4, "s": 0.8},
                {"kind": "level", "a": 3.0}
            ],
            "beta": 3.5, "cfrac_depth": 4, "tol": 1e-10
        }"#;
        let cfg = parse_config(text).unwrap();
        assert_eq!(cfg.spec.dimension(), 5);
        assert_eq!(cfg.spec.block_offsets(), vec![(0, 2), (2, 2), (4, 1)]);
        assert!(matches!(cfg.spec.blocks()[2], Block::Level(_)));
        assert_eq!((cfg.beta, cfg.cfrac_depth, cfg.tol), (3.5, 4, 1e-10));
    }

    #[test]
    fn zero_coupling_is_rejected() {
        let err =
            parse_config(r#"{"blocks":[{"kind":"pt2","r":1,"theta":0.5,"s":0}]}"#).unwrap_err();
        assert!(matches!(err, ConfigError::Validation { ref field, .. } if field == "blocks[0].s"));
    }

    #[test]
    fn parse_errors_carry_position() {
        let err = parse_config("{\n  \"blocks\": [\n    {\"kind\": \"pt2\", \"r\": }\n  ]\n}")
            .unwrap_err();
        match err {
            ConfigError::Parse { line, .. } => assert_eq!(line, 3),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(
            parse_config(r#"{"blocks":[{"kind":"cubic","a":1}]}"#),
            Err(ConfigError::Parse { .. })
        ));
        assert!(matches!(
            parse_config(r#"{"blocks":[{"kind":"level","a":1}],"gamma":1}"#),
            Err(ConfigError::Parse { .. })
        ));
    }

    #[test]
    fn other_validation() {
        assert!(matches!(
            parse_config(r#"{"blocks":[]}"#),
            Err(ConfigError::Validation { .. })
        ));
        assert!(matches!(
            parse_config(r#"{"blocks":[{"kind":"level","a":1}],"tol":0}"#),
            Err(ConfigError::Validation { .. })
        ));
        assert!(matches!(
            parse_config(r#"{"blocks":[{"kind":"level","a":1}],"cfrac_depth":0}"#),
            Err(ConfigError::Validation { .. })
        ));
        assert!(matches!(
            parse_config(r#"{"blocks":[{"kind":"pt2","r":-1,"theta":0,"s":1}]}"#),
            Err(ConfigError::Validation { .. })
        ));
    }
}
