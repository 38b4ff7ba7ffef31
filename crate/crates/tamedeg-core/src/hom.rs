//! `[X,Y] = dim Hom(X,Y)` and `[X,Y]^1 = dim Ext(X,Y)` by rules.

use crate::catalog::{Catalog, Indec, ModuleSum};
use parking_lot::RwLock;
use std::collections::HashMap;

impl Catalog {
    pub fn hom(&self, x: &Indec, y: &Indec) -> i64 {
        use Indec::*;
        match (*x, *y) {
            (Preinj { .. }, Preproj { .. } | Reg { .. }) | (Reg { .. }, Preproj { .. }) => 0,
            (Reg { tube: t1, .. }, Reg { tube: t2, .. }) if t1 != t2 => 0,
            (Reg { .. }, Reg { .. }) => self.tube_hom(x, y),
            (Preproj { v: i, k: a }, Preproj { v: j, k: b }) => {
                let (i, j) = (i as usize, j as usize);
                if a <= b {
                    self.preproj_dim(j, b - a)[i]
                } else {
                    let x1 = self.preproj_dim(i, a - b);
                    self.num().euler_form(&x1, &self.num().proj[j]) + self.preproj_dim(i, a - b - 1)[j]
                }
            }
            (Preinj { v: i, k: a }, Preinj { v: j, k: b }) => {
                let (i, j) = (i as usize, j as usize);
                if b <= a {
                    self.preinj_dim(i, a - b)[j]
                } else {
                    let y1 = self.preinj_dim(j, b - a);
                    self.num().euler_form(&self.num().inj[i], &y1) + self.preinj_dim(j, b - a - 1)[i]
                }
            }
            _ => self.num().euler_form(&self.dim(x), &self.dim(y)),
        }
    }

    /// `min(l_{Top X}(Y), l_{Soc Y}(X))` for modules in one tube.
    fn tube_hom(&self, x: &Indec, y: &Indec) -> i64 {
        let top_x = self.top(x).expect("regular");
        let soc_y = self.socle(y).expect("regular");
        self.factor_count(y, top_x).min(self.factor_count(x, soc_y)) as i64
    }

    pub fn ext(&self, x: &Indec, y: &Indec) -> i64 {
        match self.tau(x) {
            Ok(tx) => self.hom(y, &tx),
            Err(_) => 0,
        }
    }

    pub fn hom_sum(&self, m: &ModuleSum, n: &ModuleSum) -> i64 {
        m.iter()
            .map(|(x, a)| n.iter().map(|(y, b)| (a * b) as i64 * self.hom(x, y)).sum::<i64>())
            .sum()
    }

    pub fn ext_sum(&self, m: &ModuleSum, n: &ModuleSum) -> i64 {
        m.iter()
            .map(|(x, a)| n.iter().map(|(y, b)| (a * b) as i64 * self.ext(x, y)).sum::<i64>())
            .sum()
    }

    /// `[M, X]` for an indecomposable `X`.
    pub fn hom_into(&self, m: &ModuleSum, x: &Indec) -> i64 {
        m.iter().map(|(y, a)| a as i64 * self.hom(y, x)).sum()
    }

    /// `[X, M]` for an indecomposable `X`.
    pub fn hom_from(&self, x: &Indec, m: &ModuleSum) -> i64 {
        m.iter().map(|(y, a)| a as i64 * self.hom(x, y)).sum()
    }
}

/// Memoized hom/ext values; safe under concurrent lookups.
pub struct HomTable<'a> {
    cat: &'a Catalog,
    memo: RwLock<HashMap<(Indec, Indec), (i64, i64)>>,
}

impl<'a> HomTable<'a> {
    pub fn new(cat: &'a Catalog) -> Self {
        HomTable { cat, memo: RwLock::new(HashMap::new()) }
    }

    /// `(hom, ext)` for the pair.
    pub fn get(&self, x: &Indec, y: &Indec) -> (i64, i64) {
        if let Some(v) = self.memo.read().get(&(*x, *y)) {
            return *v;
        }
        let v = (self.cat.hom(x, y), self.cat.ext(x, y));
        self.memo.write().insert((*x, *y), v);
        v
    }

    pub fn hom(&self, x: &Indec, y: &Indec) -> i64 {
        self.get(x, y).0
    }

    pub fn ext(&self, x: &Indec, y: &Indec) -> i64 {
        self.get(x, y).1
    }

    pub fn len(&self) -> usize {
        self.memo.read().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}
