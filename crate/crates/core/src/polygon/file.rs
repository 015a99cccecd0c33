//! JSON group files.
//!
//! ```json
//! { "name": "modular", "d": 2, "precision_bits": 256,
//!   "letters": [ { "label": "a", "inverse": "A", "generator_halfplane": ["1","2","0","1"] }, … ],
//!   "cusps": [ { "A": ["1","0","0","1"], "mu": "1" } ],
//!   "coset_representatives": [ ["0","-1","1","0"], … ] }
//! ```
//!
//! Numbers are decimal strings so no precision is lost in transit. The order
//! of `letters` only matters through its first entry, which anchors `o = 0`.
//! `coset_representatives` is optional.

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use super::{GroupData, LabelledPolygon};
use crate::error::{Error, Result};
use crate::moebius::RealMoebius;
use crate::numeric::{Precision, Real, DEFAULT_BITS};

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupFile {
    pub name: String,
    pub d: usize,
    pub letters: Vec<LetterEntry>,
    pub cusps: Vec<CuspEntry>,
    #[serde(default = "default_bits")]
    pub precision_bits: u32,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub coset_representatives: Vec<[String; 4]>,
}

fn default_bits() -> u32 {
    DEFAULT_BITS
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LetterEntry {
    pub label: String,
    pub inverse: String,
    pub generator_halfplane: [String; 4],
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CuspEntry {
    #[serde(rename = "A")]
    pub a: [String; 4],
    pub mu: String,
}

fn matrix(entries: &[String; 4], bits: u32, field: &str) -> Result<RealMoebius> {
    let mut v = Vec::with_capacity(4);
    for (i, s) in entries.iter().enumerate() {
        let x = Real::parse(s, bits)
            .map_err(|e| Error::parse(format!("{field}[{i}]"), e.to_string()))?;
        v.push(x);
    }
    let [a, b, c, d]: [Real; 4] = v.try_into().expect("four entries");
    Ok(RealMoebius::new(a, b, c, d))
}

fn entries(m: &RealMoebius) -> [String; 4] {
    m.coefficients().map(|x| x.to_decimal_full())
}

impl GroupFile {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| {
            Error::parse(format!("line {} column {}", e.line(), e.column()), e.to_string())
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("group file serialises")
    }

    /// Decodes into group data at the file's precision, unless overridden.
    pub fn to_data(&self, precision: Option<Precision>) -> Result<GroupData> {
        let precision = precision.unwrap_or_else(|| Precision::new(self.precision_bits));
        let bits = precision.bits;
        if self.letters.len() != 2 * self.d {
            return Err(Error::parse(
                "letters",
                format!("d = {} requires {} letters, found {}", self.d, 2 * self.d, self.letters.len()),
            ));
        }
        let labels: Vec<String> = self.letters.iter().map(|l| l.label.clone()).collect();
        let mut inverse = Vec::with_capacity(labels.len());
        for (i, l) in self.letters.iter().enumerate() {
            let j = labels.iter().position(|x| *x == l.inverse).ok_or_else(|| {
                Error::parse(format!("letters[{i}].inverse"), format!("unknown label {:?}", l.inverse))
            })?;
            inverse.push(j);
        }
        // reject a broken involution here, before any geometry
        super::Alphabet::new(labels.clone(), inverse.clone())?;
        let generators = self
            .letters
            .iter()
            .enumerate()
            .map(|(i, l)| matrix(&l.generator_halfplane, bits, &format!("letters[{i}].generator_halfplane")))
            .collect::<Result<Vec<_>>>()?;
        let cusps = self
            .cusps
            .iter()
            .enumerate()
            .map(|(k, c)| {
                let a = matrix(&c.a, bits, &format!("cusps[{k}].A"))?;
                let mu = Real::parse(&c.mu, bits)
                    .map_err(|e| Error::parse(format!("cusps[{k}].mu"), e.to_string()))?;
                Ok((a, mu))
            })
            .collect::<Result<Vec<_>>>()?;
        let cosets = self
            .coset_representatives
            .iter()
            .enumerate()
            .map(|(i, m)| matrix(m, bits, &format!("coset_representatives[{i}]")))
            .collect::<Result<Vec<_>>>()?;
        Ok(GroupData {
            name: self.name.clone(),
            precision,
            labels,
            inverse,
            generators,
            cusps,
            cosets,
        })
    }

    pub fn from_data(data: &GroupData) -> Self {
        GroupFile {
            name: data.name.clone(),
            d: data.labels.len() / 2,
            letters: data
                .labels
                .iter()
                .enumerate()
                .map(|(i, l)| LetterEntry {
                    label: l.clone(),
                    inverse: data.labels[data.inverse[i]].clone(),
                    generator_halfplane: entries(&data.generators[i]),
                })
                .collect(),
            cusps: data
                .cusps
                .iter()
                .map(|(a, mu)| CuspEntry { a: entries(a), mu: mu.to_decimal_full() })
                .collect(),
            precision_bits: data.precision.bits,
            coset_representatives: data.cosets.iter().map(entries).collect(),
        }
    }
}

/// Reads, validates and builds a group. `precision` overrides the file's
/// `precision_bits`.
pub fn load_group(path: impl AsRef<Path>, precision: Option<Precision>) -> Result<LabelledPolygon> {
    let text = fs::read_to_string(path.as_ref())?;
    let file = GroupFile::from_json(&text)?;
    LabelledPolygon::new(file.to_data(precision)?)
}

pub fn save_group(polygon: &LabelledPolygon, path: impl AsRef<Path>) -> Result<()> {
    let mut text = GroupFile::from_data(polygon.data()).to_json();
    text.push('\n');
    fs::write(path.as_ref(), text)?;
    Ok(())
}

/// Where a group comes from, so it can be rebuilt at another precision.
#[derive(Clone, Debug)]
pub enum GroupSource {
    Modular,
    GoldenOctagon,
    File(Box<GroupFile>),
}

impl GroupSource {
    /// `modular`, `golden-octagon`, or a path to a group file.
    pub fn parse(spec: &str) -> Result<Self> {
        match spec {
            "modular" => Ok(GroupSource::Modular),
            "golden-octagon" => Ok(GroupSource::GoldenOctagon),
            path => {
                let text = fs::read_to_string(path)?;
                Ok(GroupSource::File(Box::new(GroupFile::from_json(&text)?)))
            }
        }
    }

    /// Raw data; `None` means the file's own precision (or the default).
    pub fn data(&self, precision: Option<Precision>) -> Result<GroupData> {
        match self {
            GroupSource::Modular => Ok(super::modular_data(precision.unwrap_or_default())),
            GroupSource::GoldenOctagon => Ok(super::golden_octagon_data(precision.unwrap_or_default())),
            GroupSource::File(f) => f.to_data(precision),
        }
    }

    pub fn build(&self, precision: Option<Precision>) -> Result<LabelledPolygon> {
        LabelledPolygon::new(self.data(precision)?)
    }

    pub fn is_modular(&self) -> bool {
        matches!(self, GroupSource::Modular)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polygon::presets::modular_data;
    use crate::polygon::preset_modular;

    #[test]
    fn roundtrip_preserves_generators() {
        let p = preset_modular(Precision::default());
        let dir = std::env::temp_dir().join(format!("bsl-roundtrip-{}", std::process::id()));
        fs::create_dir_all(&dir).unwrap();
        let path = dir.join("modular.json");
        save_group(&p, &path).unwrap();
        let q = load_group(&path, None).unwrap();
        for a in p.letters() {
            assert!(p.generator(a).approx_eq(q.generator(a), &p.tau()));
        }
        assert_eq!(q.data().cosets.len(), 5);
        fs::remove_dir_all(dir).ok();
    }

    #[test]
    fn bad_determinant_is_a_validation_error() {
        let mut file = GroupFile::from_data(&modular_data(Precision::default()));
        // det 0.9
        file.letters[0].generator_halfplane = ["0.9".into(), "2".into(), "0".into(), "1".into()];
        let data = file.to_data(None).unwrap();
        match LabelledPolygon::new(data) {
            Err(Error::Validation(report)) => assert!(!report.check("determinant").unwrap().passed),
            other => panic!("expected validation error, got {other:?}"),
        }
    }

    #[test]
    fn broken_involution_is_a_parse_error() {
        let mut file = GroupFile::from_data(&modular_data(Precision::default()));
        file.letters[0].inverse = "b".into();
        assert!(matches!(file.to_data(None), Err(Error::Parse { .. })));
    }

    #[test]
    fn malformed_json_reports_position() {
        let e = GroupFile::from_json("{\n \"name\": 3 }").unwrap_err();
        assert!(e.to_string().contains("line 2"), "{e}");
        let e = GroupFile::from_json(r#"{"name":"x","d":2,"letters":[],"cusps":[]}"#)
            .unwrap()
            .to_data(None)
            .unwrap_err();
        assert!(e.to_string().contains("letters"));
    }
}
