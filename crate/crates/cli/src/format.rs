//! JSON configuration and construction files.
//!
//! A configuration is `{"n": 3, "points": [[1,1,1], ...]}` with positive
//! integer coordinates and an optional `"labels"` list. Coordinates need not
//! be canonical; loading relabels each direction to `1..=r_i`.

use std::fmt::Write as _;
use std::path::Path;

use acmpts_core::construct::{DirectionForm, LayerPosition, LiaisonInput};
use acmpts_core::grid::{canonicalize_with_map, LevelMap};
use acmpts_core::{GridPoint, PointSet};
use anyhow::{bail, Context, Result};
use serde::Deserialize;

#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConfigurationFile {
    pub n: usize,
    pub points: Vec<Vec<i64>>,
    #[serde(default)]
    pub labels: Option<Vec<String>>,
}

/// A parsed configuration with the relabeling back to file coordinates.
#[derive(Debug, Clone)]
pub struct Configuration {
    pub file: ConfigurationFile,
    pub set: PointSet,
    pub levels: LevelMap,
}

impl Configuration {
    /// Renders a canonical point in the file's own coordinates.
    pub fn display_point(&self, p: &GridPoint) -> String {
        match self.levels.point_to_raw(p) {
            Some(raw) => tuple(&raw),
            None => p.to_string(),
        }
    }

    /// Maps file coordinates to a canonical point of the grid.
    pub fn point_from_raw(&self, raw: &[i64]) -> Result<GridPoint> {
        if raw.len() != self.set.n() {
            bail!("DimensionMismatch: expected {} coordinates, found {}", self.set.n(), raw.len());
        }
        let coords = raw
            .iter()
            .enumerate()
            .map(|(i, &v)| {
                self.levels
                    .to_level(i, v)
                    .with_context(|| format!("coordinate {v} is not a level of direction {}", i + 1))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(GridPoint::new(coords))
    }
}

pub fn tuple<T: std::fmt::Display>(coords: &[T]) -> String {
    let inner: Vec<String> = coords.iter().map(ToString::to_string).collect();
    format!("({})", inner.join(","))
}

pub fn parse_configuration(text: &str) -> Result<Configuration> {
    let file: ConfigurationFile = serde_json::from_str(text).context("invalid configuration JSON")?;
    if file.n == 0 {
        bail!("n must be at least 1");
    }
    if let Some(bad) = file.points.iter().find(|p| p.len() != file.n) {
        bail!("DimensionMismatch: expected {} coordinates, found {}", file.n, bad.len());
    }
    if file.points.iter().flatten().any(|&c| c < 1) {
        bail!("coordinates must be positive integers");
    }
    if let Some(labels) = &file.labels {
        if labels.len() != file.points.len() {
            bail!("labels must match points one to one");
        }
    }
    let (set, levels) = canonicalize_with_map(&file.points).map_err(anyhow::Error::msg)?;
    Ok(Configuration { file, set, levels })
}

pub fn load_configuration(path: &Path) -> Result<Configuration> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_configuration(&text).with_context(|| format!("parsing {}", path.display()))
}

/// Canonical text form: one point per line, lexicographic.
pub fn serialize_configuration(set: &PointSet) -> String {
    let mut out = String::new();
    writeln!(out, "{{").unwrap();
    writeln!(out, "  \"n\": {},", set.n()).unwrap();
    if set.is_empty() {
        writeln!(out, "  \"points\": []").unwrap();
    } else {
        writeln!(out, "  \"points\": [").unwrap();
        let rows: Vec<String> = set
            .iter()
            .map(|p| {
                let c: Vec<String> = p.coords().iter().map(ToString::to_string).collect();
                format!("    [{}]", c.join(", "))
            })
            .collect();
        writeln!(out, "{}", rows.join(",\n")).unwrap();
        writeln!(out, "  ]").unwrap();
    }
    writeln!(out, "}}").unwrap();
    out
}

/// Comma-separated integers, e.g. `3,3,3`.
pub fn parse_tuple(text: &str) -> Result<Vec<i64>> {
    text.split(',')
        .map(|part| {
            part.trim()
                .parse::<i64>()
                .with_context(|| format!("`{part}` is not an integer"))
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FormSpec {
    /// 1-based direction.
    pub direction: usize,
    pub support: Vec<u32>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum PositionSpec {
    #[default]
    After,
    Before,
}

/// Input of `acmpts construct`.
#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
#[serde(tag = "mode", rename_all = "lowercase", deny_unknown_fields)]
pub enum ConstructionConfig {
    /// Summand `k` pairs with form `k`.
    Liaison {
        n: usize,
        summands: Vec<Vec<Vec<u32>>>,
        forms: Vec<FormSpec>,
        #[serde(default, rename = "box")]
        check_box: Option<Vec<i64>>,
    },
    Layer {
        n: usize,
        points: Vec<Vec<i64>>,
        /// 1-based direction.
        direction: usize,
        #[serde(default)]
        position: PositionSpec,
    },
}

pub fn parse_construction(text: &str) -> Result<ConstructionConfig> {
    serde_json::from_str(text).context("invalid construction JSON")
}

impl ConstructionConfig {
    pub fn liaison_input(n: usize, summands: &[Vec<Vec<u32>>], forms: &[FormSpec]) -> Result<LiaisonInput> {
        let forms = forms
            .iter()
            .map(|f| {
                if f.direction == 0 || f.direction > n {
                    bail!("BadDirection: direction {} is not valid for n = {n}", f.direction);
                }
                Ok(DirectionForm::new(f.direction - 1, f.support.iter().copied()))
            })
            .collect::<Result<Vec<_>>>()?;
        let summands = summands
            .iter()
            .map(|s| s.iter().map(|p| GridPoint::new(p.clone())).collect())
            .collect();
        Ok(LiaisonInput { n, summands, forms })
    }
}

impl From<PositionSpec> for LayerPosition {
    fn from(p: PositionSpec) -> Self {
        match p {
            PositionSpec::After => LayerPosition::After,
            PositionSpec::Before => LayerPosition::Before,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_and_relabels() {
        let c = parse_configuration(r#"{"n": 2, "points": [[2, 5], [7, 5]]}"#).unwrap();
        assert_eq!(c.set.dims(), &[2, 1]);
        assert_eq!(c.display_point(&GridPoint::from([2, 1])), "(7,5)");
        assert_eq!(c.point_from_raw(&[2, 5]).unwrap(), GridPoint::from([1, 1]));
        assert!(c.point_from_raw(&[3, 5]).is_err());
    }

    #[test]
    fn rejects_bad_input() {
        assert!(parse_configuration(r#"{"n": 2, "points": []}"#).is_err());
        assert!(parse_configuration(r#"{"n": 2, "points": [[1, 2, 3]]}"#).is_err());
        assert!(parse_configuration(r#"{"n": 1, "points": [[0]]}"#).is_err());
        assert!(parse_configuration(r#"{"n": 1, "points": [[1]], "extra": 3}"#).is_err());
        assert!(parse_configuration("not json").is_err());
    }

    #[test]
    fn serialization_round_trips() {
        let text = "{\n  \"n\": 2,\n  \"points\": [\n    [1, 1],\n    [2, 2]\n  ]\n}\n";
        let c = parse_configuration(text).unwrap();
        assert_eq!(serialize_configuration(&c.set), text);
    }

    #[test]
    fn construction_modes() {
        let liaison = parse_construction(
            r#"{"mode": "liaison", "n": 2, "summands": [[[1, 1]], [[2, 2]]],
                "forms": [{"direction": 1, "support": [2]}, {"direction": 2, "support": [1]}]}"#,
        )
        .unwrap();
        assert!(matches!(liaison, ConstructionConfig::Liaison { n: 2, .. }));
        let layer = parse_construction(r#"{"mode": "layer", "n": 2, "points": [[1, 1]], "direction": 1}"#).unwrap();
        assert!(matches!(layer, ConstructionConfig::Layer { position: PositionSpec::After, .. }));
        assert!(parse_construction(r#"{"mode": "glue"}"#).is_err());
    }

    #[test]
    fn tuples() {
        assert_eq!(parse_tuple("3, 3,3").unwrap(), vec![3, 3, 3]);
        assert!(parse_tuple("3,x").is_err());
    }
}
