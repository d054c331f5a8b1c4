//! JSON scene files.
//!
//! ```json
//! {
//!   "norm": {"kind": "linf"},
//!   "A": [["0","0"],["1","0"],["1","1"],["0","1"]],
//!   "B": [[["2","0"],["3","0"],["3","1"],["2","1"]]],
//!   "r": "3/2",
//!   "r_range": ["1","2"],
//!   "epsilon": "1/4"
//! }
//! ```
//!
//! Numbers are strings `"p/q"` or `"p"`; JSON numbers and decimals are
//! rejected. Polygons may be listed in either orientation and are written
//! back canonically, so load → save is idempotent.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::error::GeomError;
use crate::geom::{ConvexPolygon, Point};
use crate::norm::{euclidean_approx, PolyhedralNorm};
use crate::scalar::{self, Scalar};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SceneNorm {
    Linf,
    L1,
    Ball(ConvexPolygon),
    /// Evaluated with the inner (inscribed) polygon of the sandwich.
    EuclideanApprox(u32),
}

impl SceneNorm {
    pub fn resolve(&self) -> Result<PolyhedralNorm, GeomError> {
        match self {
            SceneNorm::Linf => Ok(PolyhedralNorm::linf()),
            SceneNorm::L1 => Ok(PolyhedralNorm::l1()),
            SceneNorm::Ball(ball) => PolyhedralNorm::new(ball.clone()),
            SceneNorm::EuclideanApprox(k) => Ok(euclidean_approx(*k)?.inner),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SceneFile {
    pub norm: SceneNorm,
    pub a: ConvexPolygon,
    pub b_parts: Vec<ConvexPolygon>,
    pub r: Option<Scalar>,
    pub r_range: Option<(Scalar, Scalar)>,
    pub epsilon: Option<Scalar>,
    pub label: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SceneError {
    #[error("malformed scene at `{path}`: {message}")]
    Json { path: String, message: String },
    #[error("`{key}`: expected a rational string like \"p/q\", got {text:?}")]
    Numeral { key: String, text: String },
    #[error("`{key}`: {source}")]
    Geometry { key: String, source: GeomError },
    #[error("`{key}`: {message}")]
    Invalid { key: String, message: String },
}

type Pair = [String; 2];

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawScene {
    norm: RawNorm,
    #[serde(rename = "A")]
    a: Vec<Pair>,
    #[serde(rename = "B")]
    b: Vec<Vec<Pair>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    r: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    r_range: Option<Pair>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    epsilon: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    label: Option<String>,
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
enum RawNorm {
    Linf,
    L1,
    Ball { ball: Vec<Pair> },
    EuclideanApprox { k: u32 },
}

fn num(key: impl fmt::Display, text: &str) -> Result<Scalar, SceneError> {
    scalar::parse(text).ok_or_else(|| SceneError::Numeral {
        key: key.to_string(),
        text: text.to_string(),
    })
}

fn polygon(key: &str, pairs: &[Pair]) -> Result<ConvexPolygon, SceneError> {
    let pts = pairs
        .iter()
        .enumerate()
        .map(|(i, [x, y])| {
            Ok(Point::new(
                num(format_args!("{key}[{i}][0]"), x)?,
                num(format_args!("{key}[{i}][1]"), y)?,
            ))
        })
        .collect::<Result<Vec<_>, SceneError>>()?;
    ConvexPolygon::from_vertices(&pts).map_err(|source| SceneError::Geometry {
        key: key.to_string(),
        source,
    })
}

fn pairs(p: &ConvexPolygon) -> Vec<Pair> {
    p.vertices()
        .iter()
        .map(|v| [v.x.to_string(), v.y.to_string()])
        .collect()
}

impl SceneFile {
    pub fn from_json(text: &str) -> Result<SceneFile, SceneError> {
        let de = &mut serde_json::Deserializer::from_str(text);
        let raw: RawScene = serde_path_to_error::deserialize(de).map_err(|e| SceneError::Json {
            path: e.path().to_string(),
            message: e.inner().to_string(),
        })?;
        let norm = match raw.norm {
            RawNorm::Linf => SceneNorm::Linf,
            RawNorm::L1 => SceneNorm::L1,
            RawNorm::Ball { ball } => {
                let ball = polygon("norm.ball", &ball)?;
                PolyhedralNorm::new(ball.clone()).map_err(|source| SceneError::Geometry {
                    key: "norm.ball".into(),
                    source,
                })?;
                SceneNorm::Ball(ball)
            }
            RawNorm::EuclideanApprox { k } => {
                euclidean_approx(k).map_err(|source| SceneError::Geometry {
                    key: "norm.k".into(),
                    source,
                })?;
                SceneNorm::EuclideanApprox(k)
            }
        };
        let a = polygon("A", &raw.a)?;
        if raw.b.is_empty() {
            return Err(SceneError::Invalid {
                key: "B".into(),
                message: "at least one part required".into(),
            });
        }
        let b_parts = raw
            .b
            .iter()
            .enumerate()
            .map(|(i, part)| polygon(&format!("B[{i}]"), part))
            .collect::<Result<Vec<_>, _>>()?;
        let r = raw.r.as_deref().map(|t| num("r", t)).transpose()?;
        let r_range = match &raw.r_range {
            Some([lo, hi]) => {
                let (lo, hi) = (num("r_range[0]", lo)?, num("r_range[1]", hi)?);
                if hi <= lo {
                    return Err(SceneError::Invalid {
                        key: "r_range".into(),
                        message: "must be increasing".into(),
                    });
                }
                Some((lo, hi))
            }
            None => None,
        };
        let epsilon = raw
            .epsilon
            .as_deref()
            .map(|t| num("epsilon", t))
            .transpose()?;
        Ok(SceneFile {
            norm,
            a,
            b_parts,
            r,
            r_range,
            epsilon,
            label: raw.label,
        })
    }

    pub fn load(path: &std::path::Path) -> Result<SceneFile, SceneError> {
        let text = std::fs::read_to_string(path).map_err(|e| SceneError::Json {
            path: path.display().to_string(),
            message: e.to_string(),
        })?;
        SceneFile::from_json(&text)
    }

    /// Canonical pretty-printed JSON with a trailing newline.
    pub fn to_json(&self) -> String {
        let norm = match &self.norm {
            SceneNorm::Linf => RawNorm::Linf,
            SceneNorm::L1 => RawNorm::L1,
            SceneNorm::Ball(ball) => RawNorm::Ball { ball: pairs(ball) },
            SceneNorm::EuclideanApprox(k) => RawNorm::EuclideanApprox { k: *k },
        };
        let raw = RawScene {
            norm,
            a: pairs(&self.a),
            b: self.b_parts.iter().map(pairs).collect(),
            r: self.r.as_ref().map(|r| r.to_string()),
            r_range: self
                .r_range
                .as_ref()
                .map(|(lo, hi)| [lo.to_string(), hi.to_string()]),
            epsilon: self.epsilon.as_ref().map(|e| e.to_string()),
            label: self.label.clone(),
        };
        let mut out = serde_json::to_string_pretty(&raw).expect("plain data");
        out.push('\n');
        out
    }

    /// The convex set `B` when the scene has a single part.
    pub fn convex_b(&self) -> Option<&ConvexPolygon> {
        match self.b_parts.as_slice() {
            [b] => Some(b),
            _ => None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const WORKED: &str = r#"{
        "norm": {"kind": "linf"},
        "A": [["0","0"],["0","1"],["1","1"],["1","0"]],
        "B": [[["2","0"],["3","0"],["3","1"],["2","1"]]],
        "r": "6/4",
        "epsilon": "1/4"
    }"#;

    #[test]
    fn loads_and_canonicalizes() {
        let s = SceneFile::from_json(WORKED).unwrap();
        assert_eq!(
            s.a,
            ConvexPolygon::rect(
                scalar::int(0),
                scalar::int(0),
                scalar::int(1),
                scalar::int(1)
            )
        );
        assert_eq!(s.r, Some(scalar::ratio(3, 2)));
        assert!(s.to_json().contains("\"3/2\""));
    }

    #[test]
    fn save_is_a_fixed_point() {
        let first = SceneFile::from_json(WORKED).unwrap().to_json();
        let second = SceneFile::from_json(&first).unwrap().to_json();
        assert_eq!(first, second);
    }

    #[test]
    fn rejects_decimal_numerals() {
        let bad = WORKED.replace("\"6/4\"", "\"1.5\"");
        match SceneFile::from_json(&bad) {
            Err(SceneError::Numeral { key, .. }) => assert_eq!(key, "r"),
            other => panic!("unexpected {other:?}"),
        }
        let bad = WORKED.replace("[\"3\",\"0\"]", "[\"3\",0]");
        match SceneFile::from_json(&bad) {
            Err(SceneError::Json { path, .. }) => assert!(path.starts_with("B[0][1]"), "{path}"),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn rejects_non_convex_part() {
        let bad = WORKED.replace(
            r#"[["2","0"],["3","0"],["3","1"],["2","1"]]"#,
            r#"[["2","0"],["4","0"],["3","1"],["2","4"]]"#,
        );
        match SceneFile::from_json(&bad) {
            Err(SceneError::Geometry { key, source }) => {
                assert_eq!(key, "B[0]");
                assert_eq!(source, GeomError::NonConvex);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn norm_variants() {
        let ball = WORKED.replace(
            r#"{"kind": "linf"}"#,
            r#"{"kind": "ball", "ball": [["2","0"],["0","1"],["-2","0"],["0","-1"]]}"#,
        );
        let s = SceneFile::from_json(&ball).unwrap();
        assert!(matches!(s.norm, SceneNorm::Ball(_)));
        let tri = WORKED.replace(
            r#"{"kind": "linf"}"#,
            r#"{"kind": "ball", "ball": [["1","0"],["0","1"],["0","0"]]}"#,
        );
        assert!(matches!(
            SceneFile::from_json(&tri),
            Err(SceneError::Geometry {
                source: GeomError::NotSymmetric,
                ..
            })
        ));
        let eu = WORKED.replace(
            r#"{"kind": "linf"}"#,
            r#"{"kind": "euclidean_approx", "k": 4}"#,
        );
        let s = SceneFile::from_json(&eu).unwrap();
        assert_eq!(s.norm.resolve().unwrap().unit_ball().len(), 8);
        let small = WORKED.replace(
            r#"{"kind": "linf"}"#,
            r#"{"kind": "euclidean_approx", "k": 2}"#,
        );
        assert!(SceneFile::from_json(&small).is_err());
    }
}
