//! Correspondence between computed tube labels and printed table labels.
//!
//! A printed label `Sj(l)` in table tube `k` denotes a module of length `l`
//! in computed tube `tube_map[k-1]`; its socle (or top, per `convention`) is
//! `E_{(j - 1 + rotation[k-1]) mod p}`. Both label systems satisfy
//! `tau E_i = E_{i-1}`, so one rotation per tube suffices.

use crate::catalog::{Catalog, Indec, ModuleSum, TubeId};
use crate::error::{Error, Result};
use crate::quiver::Quiver;
use crate::degen::TubeFilter;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// Which end of a tube module the printed index names.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TubeLabel {
    Socle,
    Top,
}

/// One printed row: a bloc `M < P(sink) + tau^shift I(vertex)` in `tube`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GoldenRow {
    pub ty: String,
    /// 1-based vertex labels.
    pub sink: usize,
    pub shift: u32,
    pub vertex: usize,
    /// 1-based table tube.
    pub tube: usize,
    /// `(label j, length l)` per summand, with repetitions.
    pub summands: Vec<(u32, u32)>,
}

const TABLE: &str = include_str!("../../data/single_tube_blocs.txt");

impl GoldenRow {
    pub fn all() -> Vec<GoldenRow> {
        TABLE.lines().filter(|l| !l.trim().is_empty() && !l.starts_with('#')).map(|l| Self::parse(l).expect("table row")).collect()
    }

    pub fn parse(line: &str) -> Result<GoldenRow> {
        let f: Vec<&str> = line.split_whitespace().collect();
        let bad = || Error::Parse(format!("bad table row {line:?}"));
        let [ty, sink, shift, vertex, tube, summ] = f.as_slice() else { return Err(bad()) };
        let num = |s: &str| s.parse::<usize>().map_err(|_| bad());
        let mut summands = Vec::new();
        for t in summ.split('+') {
            let t = t.strip_prefix('S').ok_or_else(bad)?;
            let (j, l) = t.strip_suffix(')').and_then(|t| t.split_once('(')).ok_or_else(bad)?;
            summands.push((num(j)? as u32, num(l)? as u32));
        }
        Ok(GoldenRow {
            ty: ty.to_string(),
            sink: num(sink)?,
            shift: num(shift)? as u32,
            vertex: num(vertex)?,
            tube: num(tube)?,
            summands,
        })
    }

    pub fn quiver(&self) -> Result<Quiver> {
        Quiver::by_name(&self.ty, self.sink, None)
    }

    pub fn u(&self) -> Indec {
        Indec::preproj(self.sink - 1, 0)
    }

    pub fn v(&self) -> Indec {
        Indec::preinj(self.vertex - 1, self.shift)
    }

    /// The printed bloc, e.g. `S_1(1)+S_2(2)`, with primes for tubes 2, 3.
    pub fn label(&self) -> String {
        let primes = "'".repeat(self.tube - 1);
        self.summands.iter().map(|(j, l)| format!("S_{j}{primes}({l})")).collect::<Vec<_>>().join("+")
    }
}

/// Calibration for one quiver: table tube `k` is computed tube
/// `tube_map[k-1]` rotated by `rotation[k-1]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Calibration {
    pub ty: String,
    pub sink: usize,
    pub convention: TubeLabel,
    pub tube_map: Vec<u8>,
    pub rotation: Vec<u32>,
}

impl Calibration {
    /// The printed summand `Sj(l)` of table tube `k` as a computed module.
    pub fn module(&self, cat: &Catalog, k: usize, j: u32, l: u32) -> Result<Indec> {
        let t = *self.tube_map.get(k - 1).ok_or_else(|| Error::Precondition(format!("no table tube {k}")))?;
        let p = cat.period(TubeId::NonHom(t));
        let e = (j + p - 1 + self.rotation[k - 1]) % p;
        let s = match self.convention {
            TubeLabel::Socle => e,
            TubeLabel::Top => (e + p * l - (l - 1)) % p,
        };
        Ok(Indec::reg(t as usize, s as usize, l))
    }

    pub fn row_module(&self, cat: &Catalog, row: &GoldenRow) -> Result<ModuleSum> {
        let mut m = ModuleSum::zero();
        for &(j, l) in &row.summands {
            m.add(self.module(cat, row.tube, j, l)?, 1);
        }
        Ok(m)
    }

    /// Printed label of a computed tube module, if its tube is in the table.
    pub fn label(&self, cat: &Catalog, x: &Indec) -> Option<String> {
        let Indec::Reg { tube: TubeId::NonHom(t), s, l } = *x else { return None };
        let k = self.tube_map.iter().position(|&u| u == t)?;
        let p = cat.period(TubeId::NonHom(t));
        let e = match self.convention {
            TubeLabel::Socle => s as u32,
            TubeLabel::Top => (s as u32 + l - 1) % p,
        };
        let j = (e + 2 * p - self.rotation[k]) % p + 1;
        Some(format!("S_{j}{}({l})", "'".repeat(k)))
    }

    pub fn sum_label(&self, cat: &Catalog, m: &ModuleSum) -> Option<String> {
        let mut parts = Vec::new();
        for (x, c) in m.iter() {
            let s = self.label(cat, x)?;
            parts.extend(std::iter::repeat_n(s, c as usize));
        }
        parts.sort();
        Some(parts.join("+"))
    }

    /// Every calibration whose tube map respects periods.
    pub fn candidates(cat: &Catalog, ty: &str, sink: usize) -> Vec<Calibration> {
        let periods: Vec<u32> = (0..cat.tubes().len()).map(|t| cat.period(TubeId::NonHom(t as u8))).collect();
        let mut maps = Vec::new();
        permutations(&(0..periods.len() as u8).collect::<Vec<_>>(), &mut Vec::new(), &mut maps);
        // Table tubes are listed by descending period, like computed ones.
        maps.retain(|m: &Vec<u8>| m.iter().enumerate().all(|(k, &t)| periods[t as usize] == periods[k]));
        let mut out = Vec::new();
        for convention in [TubeLabel::Socle, TubeLabel::Top] {
            for map in &maps {
                let mut rots = vec![Vec::new()];
                for &t in map {
                    rots = rots
                        .into_iter()
                        .flat_map(|r: Vec<u32>| {
                            (0..periods[t as usize]).map(move |x| {
                                let mut r = r.clone();
                                r.push(x);
                                r
                            })
                        })
                        .collect();
                }
                for rotation in rots {
                    out.push(Calibration { ty: ty.into(), sink, convention, tube_map: map.clone(), rotation });
                }
            }
        }
        out
    }
}

/// One-tube blocs of `P(sink) + V` for every target and tube the rows need.
pub type BlocTable = BTreeMap<(Indec, u8), Vec<ModuleSum>>;

impl Calibration {
    /// Blocs needed to test any candidate against `rows`, which must share a
    /// quiver.
    pub fn bloc_table(cat: &Catalog, rows: &[&GoldenRow]) -> Result<BlocTable> {
        use rayon::prelude::*;
        let mut keys = Vec::new();
        for r in rows {
            let want = cat.period(TubeId::NonHom(r.tube as u8 - 1));
            for t in 0..cat.tubes().len() as u8 {
                if cat.period(TubeId::NonHom(t)) == want {
                    keys.push((r.u(), r.v(), t));
                }
            }
        }
        keys.sort();
        keys.dedup();
        keys.par_iter()
            .map(|&(u, v, t)| {
                let b = cat.classify(&u, &v, TubeFilter::Only(TubeId::NonHom(t)))?;
                Ok(((v, t), b.into_iter().map(|b| b.m).collect()))
            })
            .collect()
    }

    /// Whether the computed blocs of `row` in its mapped tube are exactly the
    /// printed one.
    pub fn reproduces(&self, cat: &Catalog, table: &BlocTable, row: &GoldenRow) -> Result<bool> {
        let t = self.tube_map[row.tube - 1];
        let want = self.row_module(cat, row)?;
        Ok(table.get(&(row.v(), t)).is_some_and(|b| b.len() == 1 && b[0] == want))
    }

    /// Every candidate that reproduces all `rows`.
    pub fn fit(cat: &Catalog, rows: &[&GoldenRow]) -> Result<Vec<Calibration>> {
        let Some(first) = rows.first() else { return Ok(Vec::new()) };
        let table = Self::bloc_table(cat, rows)?;
        let mut out = Vec::new();
        for c in Self::candidates(cat, &first.ty, first.sink) {
            let mut ok = true;
            for r in rows {
                if !c.reproduces(cat, &table, r)? {
                    ok = false;
                    break;
                }
            }
            if ok {
                out.push(c);
            }
        }
        Ok(out)
    }
}

fn permutations(rest: &[u8], cur: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
    if rest.is_empty() {
        out.push(cur.clone());
        return;
    }
    for i in 0..rest.len() {
        let mut r = rest.to_vec();
        let x = r.remove(i);
        cur.push(x);
        permutations(&r, cur, out);
        cur.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_parses() {
        let rows = GoldenRow::all();
        assert_eq!(rows.len(), 97);
        assert_eq!(rows.iter().filter(|r| r.ty == "E~6").count(), 8);
        let r = &rows[0];
        assert_eq!((r.sink, r.shift, r.vertex, r.tube), (3, 0, 3, 1));
        assert_eq!(r.label(), "S_3(1)+S_4(1)");
    }

    #[test]
    fn labels_invert_modules() {
        let cat = Catalog::new(Quiver::by_name("E~7", 2, None).unwrap()).unwrap();
        for c in Calibration::candidates(&cat, "E~7", 2).iter().take(40) {
            for k in 1..=3 {
                for j in 1..=2 {
                    for l in 1..=5 {
                        let x = c.module(&cat, k, j, l).unwrap();
                        let want = format!("S_{j}{}({l})", "'".repeat(k - 1));
                        assert_eq!(c.label(&cat, &x).unwrap(), want);
                    }
                }
            }
        }
    }
}
