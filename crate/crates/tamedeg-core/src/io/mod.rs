//! Run configuration, versioned run files, and JSON/DOT emitters. All
//! output is ASCII and depends only on its inputs.

use crate::bloc::{Calibration, ClassificationRun};
use crate::catalog::ModuleSum;
use crate::degen::DeformationPoset;
use crate::error::{Error, Result};
use crate::quiver::Quiver;
use serde::{Deserialize, Serialize};
use std::fmt::Write as _;

/// Version written into every run file; readers reject any other.
pub const RUN_FILE_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "kind")]
pub enum QuiverSpec {
    /// A named type such as `E~6` oriented toward `sink` (1-based).
    Named { ty: String, sink: usize, source: Option<usize> },
    /// 1-based arrow list.
    Arrows { vertices: usize, arrows: Vec<(usize, usize)> },
}

impl QuiverSpec {
    pub fn resolve(&self) -> Result<Quiver> {
        match self {
            QuiverSpec::Named { ty, sink, source } => Quiver::by_name(ty, *sink, *source),
            QuiverSpec::Arrows { vertices, arrows } => {
                if arrows.iter().any(|&(s, t)| s == 0 || t == 0) {
                    return Err(Error::Parse("vertices are 1-based".into()));
                }
                Quiver::new(*vertices, arrows.iter().map(|&(s, t)| (s - 1, t - 1)).collect())
            }
        }
    }
}

/// Enumeration bounds; all positive.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Caps {
    /// Largest total dimension of a single module.
    pub max_dim: u32,
    /// Largest `k` in a target `tau^k I(v)`.
    pub max_shift: u32,
    /// Largest regular length of a target.
    pub max_len: u32,
    /// Largest number of deformations enumerated for one target.
    pub max_elements: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps { max_dim: 24, max_shift: 8, max_len: 24, max_elements: 2_000_000 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunConfig {
    pub quiver: QuiverSpec,
    pub caps: Caps,
}

impl RunConfig {
    /// The resolved quiver, after checking every cap is positive.
    pub fn validate(&self) -> Result<Quiver> {
        let c = &self.caps;
        if c.max_dim == 0 || c.max_len == 0 || c.max_elements == 0 {
            return Err(Error::Precondition("caps must be positive".into()));
        }
        self.quiver.resolve()
    }
}

/// A classification run with the configuration and table calibration that
/// produced it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunFile {
    pub version: u32,
    pub config: RunConfig,
    pub calibration: Option<Calibration>,
    pub run: ClassificationRun,
}

impl RunFile {
    pub fn new(config: RunConfig, calibration: Option<Calibration>, run: ClassificationRun) -> Self {
        RunFile { version: RUN_FILE_VERSION, config, calibration, run }
    }
}

fn to_json<T: Serialize>(x: &T) -> String {
    let mut s = serde_json::to_string_pretty(x).expect("plain data serializes");
    s.push('\n');
    s
}

pub fn emit_json(run: &RunFile) -> String {
    to_json(run)
}

pub fn parse_run(text: &str) -> Result<RunFile> {
    let r: RunFile = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    if r.version != RUN_FILE_VERSION {
        return Err(Error::Parse(format!("run file version {} is not {RUN_FILE_VERSION}", r.version)));
    }
    Ok(r)
}

#[derive(Serialize, Deserialize)]
struct PosetElement {
    summands: Vec<String>,
    codim: i64,
}

#[derive(Serialize, Deserialize)]
struct PosetJson {
    target: String,
    elements: Vec<PosetElement>,
    covers: Vec<[usize; 2]>,
}

fn summand_texts(m: &ModuleSum) -> Vec<String> {
    m.iter().flat_map(|(x, c)| std::iter::repeat_n(x.to_text(), c as usize)).collect()
}

/// `{target, elements: [{summands, codim}], covers: [[lower, upper]]}`.
pub fn poset_json(p: &DeformationPoset) -> String {
    to_json(&PosetJson {
        target: p.target.to_text(),
        elements: p.elements.iter().zip(&p.codims).map(|(m, &codim)| PosetElement { summands: summand_texts(m), codim }).collect(),
        covers: p.covers.iter().map(|&(a, b)| [a, b]).collect(),
    })
}

pub fn parse_poset(text: &str) -> Result<DeformationPoset> {
    let j: PosetJson = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    let mut elements = Vec::with_capacity(j.elements.len());
    for e in &j.elements {
        elements.push(if e.summands.is_empty() { ModuleSum::zero() } else { ModuleSum::parse(&e.summands.join("+"))? });
    }
    if j.covers.iter().flatten().any(|&i| i >= elements.len()) {
        return Err(Error::Parse("cover index out of range".into()));
    }
    Ok(DeformationPoset {
        target: ModuleSum::parse(&j.target)?,
        codims: j.elements.iter().map(|e| e.codim).collect(),
        elements,
        covers: j.covers.iter().map(|c| (c[0], c[1])).collect(),
    })
}

/// One node per element labelled by its text form, rows ranked by codim
/// with the target on top, one edge per cover. `bold[i]` styles node `i`.
pub fn emit_dot(p: &DeformationPoset, bold: &[bool]) -> String {
    let mut s = String::from("digraph deformations {\n  rankdir=BT;\n  node [shape=box, fontname=\"Helvetica\"];\n");
    for (i, m) in p.elements.iter().enumerate() {
        let style = if bold.get(i).copied().unwrap_or(false) { ", style=bold" } else { "" };
        let _ = writeln!(s, "  n{i} [label=\"{}\", codim={}{style}];", m.to_text(), p.codims[i]);
    }
    let mut ranks: Vec<i64> = p.codims.clone();
    ranks.sort_unstable();
    ranks.dedup();
    for r in ranks {
        let ids: Vec<String> = (0..p.elements.len()).filter(|&i| p.codims[i] == r).map(|i| format!("n{i}")).collect();
        let _ = writeln!(s, "  {{ rank=same; {}; }}", ids.join("; "));
    }
    for &(a, b) in &p.covers {
        let _ = writeln!(s, "  n{a} -> n{b};");
    }
    s.push_str("}\n");
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{Catalog, Indec};
    use crate::tube::TubeCat;

    fn small_poset() -> DeformationPoset {
        let t = TubeCat::new(2).unwrap();
        let n = ModuleSum::from_counts([(t.module(0, 2), 1), (t.module(1, 1), 1)]);
        t.deformation_poset(&n, 1000).unwrap()
    }

    #[test]
    fn poset_json_round_trips() {
        let p = small_poset();
        let q = parse_poset(&poset_json(&p)).unwrap();
        assert_eq!((q.target, q.elements, q.codims, q.covers), (p.target, p.elements, p.codims, p.covers));
    }

    #[test]
    fn dot_has_one_node_per_element_and_edge_per_cover() {
        let p = small_poset();
        let bold = vec![true; p.elements.len()];
        let d = emit_dot(&p, &bold);
        assert_eq!(d.matches(" [label=").count(), p.elements.len());
        assert_eq!(d.matches(" -> ").count(), p.covers.len());
        assert_eq!(d.matches("style=bold").count(), p.elements.len());
        assert!(d.is_ascii());
    }

    #[test]
    fn run_file_round_trips_and_checks_version() {
        let config = RunConfig {
            quiver: QuiverSpec::Named { ty: "E~6".into(), sink: 3, source: None },
            caps: Caps::default(),
        };
        let cat = Catalog::new(config.validate().unwrap()).unwrap();
        let run = cat.classify_run(&Indec::preproj(2, 0), &[Indec::preinj(2, 1)], None).unwrap();
        let f = RunFile::new(config, None, run);
        let text = emit_json(&f);
        assert_eq!(parse_run(&text).unwrap(), f);
        assert!(parse_run(&text.replace("\"version\": 1", "\"version\": 2")).is_err());
    }

    #[test]
    fn zero_caps_are_rejected() {
        let mut c = RunConfig { quiver: QuiverSpec::Arrows { vertices: 2, arrows: vec![(1, 2)] }, caps: Caps::default() };
        assert!(c.validate().is_ok());
        c.caps.max_dim = 0;
        assert!(c.validate().is_err());
    }
}
