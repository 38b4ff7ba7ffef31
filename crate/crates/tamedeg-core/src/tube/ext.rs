//! Middle terms of extensions between two modules of one tube.
//!
//! With `U` of length `k` and `V` of length `l`, let `W` be the shortest
//! module with top `Top V` and socle `tau^- Top U`; its length is `r`. The
//! nonsplit middle terms of `0 -> U -> M -> V -> 0` are
//! `E_{Soc U}(k + r + mp) + E_{Soc V}(l - r - mp)` for `m` in
//! `S = { m >= 0 : l >= r + mp > l - k }`, and `m -> M` reverses the order.

use super::cat::TubeCat;
use crate::catalog::{Indec, ModuleSum};
use crate::error::Result;
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtensionPoset {
    pub u: Indec,
    pub v: Indec,
    pub r: u32,
    /// `S(V,U)` in increasing order.
    pub s_set: Vec<u32>,
    /// Middle terms indexed like `s_set`; `middle[0]` is the largest.
    pub middle: Vec<ModuleSum>,
    /// Codimension of `middle[0]` below `U + V`, when `S` is non-empty.
    pub min_codim: Option<i64>,
}

impl ExtensionPoset {
    /// The middle term closest to `U + V`.
    pub fn minimal(&self) -> Option<&ModuleSum> {
        self.middle.first()
    }
}

/// Conversion between socle coordinates `E_s(l)` and top coordinates
/// `S_t[l]` (top `t`, length `l`), 0-based.
pub fn top_coords(t: &TubeCat, x: &Indec) -> (u32, u32) {
    (t.top(x), t.len(x))
}

pub fn from_top_coords(t: &TubeCat, top: u32, l: u32) -> Indec {
    let p = t.period();
    t.module((top + p * l - (l - 1)) % p, l)
}

impl TubeCat {
    /// Nonsplit middle terms of extensions with submodule `U` and quotient `V`.
    pub fn extension_poset(&self, u: &Indec, v: &Indec) -> Result<ExtensionPoset> {
        self.validate(&ModuleSum::from_counts([(*u, 1), (*v, 1)]))?;
        let p = self.period();
        let (tu, k) = top_coords(self, u);
        let (tv, l) = top_coords(self, v);
        let r = (tv + 2 * p - tu - 1) % p + 1;
        let s_set: Vec<u32> = (0..).take_while(|m| r + m * p <= l).filter(|m| r + m * p + k > l).collect();
        let middle: Vec<ModuleSum> = s_set
            .iter()
            .map(|m| {
                // S[0] = 0 is dropped.
                let w = r + m * p;
                let mut sum = ModuleSum::single(from_top_coords(self, tv, k + w));
                if l > w {
                    sum.add(from_top_coords(self, tu, l - w), 1);
                }
                sum
            })
            .collect();
        let min_codim = (!s_set.is_empty()).then(|| {
            let two = (k >= l && tu == tv) || (k < l && self.socle(u) == self.socle(v));
            if two {
                2
            } else {
                1
            }
        });
        Ok(ExtensionPoset { u: *u, v: *v, r, s_set, middle, min_codim })
    }

    /// `M` is `U + V` or a middle term of an extension between them in
    /// either direction.
    pub fn is_extension_regular_pair(&self, m: &ModuleSum, u: &Indec, v: &Indec) -> Result<bool> {
        let n = ModuleSum::from_counts([(*u, 1), (*v, 1)]);
        if *m == n {
            return Ok(true);
        }
        Ok(self.extension_poset(u, v)?.middle.contains(m) || self.extension_poset(v, u)?.middle.contains(m))
    }
}
