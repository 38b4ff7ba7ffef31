//! A standalone tube of period `p`: nilpotent representations of the
//! oriented cycle with `p` vertices. Modules are `ModuleSum`s whose summands
//! all lie in tube 1; `E_s(l)` has socle `E_s` and top `E_{s+l-1}`.

use crate::catalog::{Indec, ModuleSum, TubeId};
use crate::degen::{DeformationPoset, Poset};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TubeCat {
    p: u32,
}

impl TubeCat {
    pub fn new(p: u32) -> Result<Self> {
        if p == 0 {
            return Err(Error::Precondition("tube period must be positive".into()));
        }
        Ok(TubeCat { p })
    }

    pub fn period(&self) -> u32 {
        self.p
    }

    /// `E_s(l)` with 0-based socle index.
    pub fn module(&self, s: u32, l: u32) -> Indec {
        Indec::reg(0, (s % self.p) as usize, l)
    }

    fn parts(&self, x: &Indec) -> Result<(u32, u32)> {
        match *x {
            Indec::Reg { tube: TubeId::NonHom(0), s, l } if (s as u32) < self.p && l > 0 => Ok((s as u32, l)),
            _ => Err(Error::Precondition(format!("{x} is not a module of this tube"))),
        }
    }

    fn sl(&self, x: &Indec) -> (u32, u32) {
        self.parts(x).expect("tube module")
    }

    pub fn validate(&self, m: &ModuleSum) -> Result<()> {
        m.iter().try_for_each(|(x, _)| self.parts(x).map(|_| ()))
    }

    pub fn socle(&self, x: &Indec) -> u32 {
        self.sl(x).0
    }

    pub fn top(&self, x: &Indec) -> u32 {
        let (s, l) = self.sl(x);
        (s + l - 1) % self.p
    }

    pub fn len(&self, x: &Indec) -> u32 {
        self.sl(x).1
    }

    /// `l_e(x)`: composition factors of `x` isomorphic to `E_e`.
    pub fn count(&self, x: &Indec, e: u32) -> u32 {
        let (s, l) = self.sl(x);
        (0..l).filter(|i| (s + i) % self.p == e).count() as u32
    }

    pub fn dim(&self, m: &ModuleSum) -> Vec<u32> {
        let mut d = vec![0; self.p as usize];
        for (x, c) in m.iter() {
            for e in 0..self.p {
                d[e as usize] += c * self.count(x, e);
            }
        }
        d
    }

    pub fn tau(&self, x: &Indec) -> Indec {
        let (s, l) = self.sl(x);
        self.module(s + self.p - 1, l)
    }

    pub fn hom(&self, x: &Indec, y: &Indec) -> i64 {
        self.count(y, self.top(x)).min(self.count(x, self.socle(y))) as i64
    }

    pub fn ext(&self, x: &Indec, y: &Indec) -> i64 {
        self.hom(y, &self.tau(x))
    }

    pub fn hom_sum(&self, m: &ModuleSum, n: &ModuleSum) -> i64 {
        m.iter().map(|(x, a)| n.iter().map(|(y, b)| (a * b) as i64 * self.hom(x, y)).sum::<i64>()).sum()
    }

    fn hom_into(&self, m: &ModuleSum, x: &Indec) -> i64 {
        m.iter().map(|(y, c)| c as i64 * self.hom(y, x)).sum()
    }

    fn hom_from(&self, x: &Indec, m: &ModuleSum) -> i64 {
        m.iter().map(|(y, c)| c as i64 * self.hom(x, y)).sum()
    }

    /// All tube modules of length at most `maxlen`.
    pub fn modules_up_to(&self, maxlen: u32) -> Vec<Indec> {
        let mut v: Vec<Indec> = (0..self.p).flat_map(|s| (1..=maxlen).map(move |l| (s, l))).map(|(s, l)| self.module(s, l)).collect();
        v.sort();
        v
    }

    fn tests_for(&self, sums: &[&ModuleSum]) -> Vec<Indec> {
        let maxlen = sums.iter().flat_map(|m| m.iter().map(|(x, _)| self.len(x))).max().unwrap_or(0);
        self.modules_up_to(maxlen + self.p)
    }

    /// `M <= N`: `[M,X] <= [N,X]` and `[X,M] <= [X,N]` for every tube module
    /// `X` up to the longest length plus `p`; both have the same dimension.
    pub fn leq(&self, m: &ModuleSum, n: &ModuleSum) -> Result<bool> {
        self.validate(m)?;
        self.validate(n)?;
        if self.dim(m) != self.dim(n) {
            return Err(Error::Precondition(format!("{m} and {n} have different dimension vectors")));
        }
        Ok(self
            .tests_for(&[m, n])
            .iter()
            .all(|x| self.hom_into(m, x) <= self.hom_into(n, x) && self.hom_from(x, m) <= self.hom_from(x, n)))
    }

    pub fn codim(&self, n: &ModuleSum, m: &ModuleSum) -> i64 {
        self.hom_sum(n, n) - self.hom_sum(m, m)
    }

    /// Every multiset of tube modules with dimension vector `d`, in
    /// canonical order.
    pub fn decompositions(&self, d: &[u32]) -> Vec<ModuleSum> {
        let total: u32 = d.iter().sum();
        let items = self.modules_up_to(total);
        let mut out = Vec::new();
        let mut rem = d.to_vec();
        let mut cur = Vec::new();
        self.decomp(&items, 0, &mut rem, &mut cur, &mut |_| true, &mut out);
        out
    }

    #[allow(clippy::too_many_arguments)]
    fn decomp(
        &self,
        items: &[Indec],
        start: usize,
        rem: &mut Vec<u32>,
        cur: &mut Vec<Indec>,
        ok: &mut dyn FnMut(&[Indec]) -> bool,
        out: &mut Vec<ModuleSum>,
    ) {
        if rem.iter().all(|&r| r == 0) {
            out.push(ModuleSum::from_counts(cur.iter().map(|&x| (x, 1))));
            return;
        }
        for i in start..items.len() {
            let x = items[i];
            let fits = (0..self.p).all(|e| self.count(&x, e) <= rem[e as usize]);
            if !fits {
                continue;
            }
            cur.push(x);
            if ok(cur) {
                for e in 0..self.p {
                    rem[e as usize] -= self.count(&x, e);
                }
                self.decomp(items, i, rem, cur, ok, out);
                for e in 0..self.p {
                    rem[e as usize] += self.count(&x, e);
                }
            }
            cur.pop();
        }
    }

    /// All `M <= N` with the order and cover edges.
    pub fn deformation_poset(&self, n: &ModuleSum, cap: usize) -> Result<DeformationPoset> {
        self.validate(n)?;
        let d = self.dim(n);
        let total: u32 = d.iter().sum();
        let items = self.modules_up_to(total);
        let tests = self.tests_for(&[&ModuleSum::from_counts(items.iter().map(|&x| (x, 1)))]);
        let ub_cov: Vec<i64> = tests.iter().map(|t| self.hom_into(n, t)).collect();
        let ub_con: Vec<i64> = tests.iter().map(|t| self.hom_from(t, n)).collect();
        let mut bounded = |cur: &[Indec]| {
            let m = ModuleSum::from_counts(cur.iter().map(|&x| (x, 1)));
            tests
                .iter()
                .enumerate()
                .all(|(i, t)| self.hom_into(&m, t) <= ub_cov[i] && self.hom_from(t, &m) <= ub_con[i])
        };
        let mut elements = Vec::new();
        let mut rem = d.clone();
        self.decomp(&items, 0, &mut rem, &mut Vec::new(), &mut bounded, &mut elements);
        let mut keep = Vec::new();
        for m in elements {
            if self.leq(&m, n)? {
                keep.push(m);
            }
            if keep.len() > cap {
                return Err(Error::Cap(format!("more than {cap} deformations of {n}")));
            }
        }
        let elements = keep;
        let poset = Poset::from_relation(elements.len(), |i, j| self.leq(&elements[i], &elements[j]).unwrap_or(false))?;
        let top = elements.iter().position(|m| m == n).expect("target is a deformation of itself");
        if poset.maximum() != Some(top) {
            return Err(Error::Internal(format!("{n} is not the maximum of its deformations")));
        }
        let hn = self.hom_sum(n, n);
        let codims = elements.iter().map(|m| hn - self.hom_sum(m, m)).collect();
        Ok(DeformationPoset { target: n.clone(), elements, codims, covers: poset.covers().to_vec() })
    }
}
