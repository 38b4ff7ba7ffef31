//! The degeneration order `M <= N` iff `[M,X] <= [N,X]` for all `X`,
//! decided on a finite test set, plus codimension and the finite tests for
//! targets `U + V`.

mod enumerate;
mod minimal;
mod poset;

pub use enumerate::{Enumerator, HomMode, TubeFilter};
pub(crate) use minimal::maximal_indices;
pub use minimal::{canonical_fresh, leq_up_to_fresh, Comparator, DegenPair, Signature};
pub use poset::{DeformationPoset, Poset};

use crate::catalog::{Catalog, Indec, ModuleSum, TubeId};
use crate::dim;
use crate::error::{Error, Result};
use std::collections::BTreeSet;

impl Catalog {
    fn check_dims(&self, m: &ModuleSum, n: &ModuleSum) -> Result<()> {
        self.validate_sum(m)?;
        self.validate_sum(n)?;
        if self.sum_dim(m) != self.sum_dim(n) {
            return Err(Error::Precondition(format!(
                "dimension vectors differ: {} vs {}",
                dim::fmt(&self.sum_dim(m)),
                dim::fmt(&self.sum_dim(n))
            )));
        }
        Ok(())
    }

    /// Homogeneous slots used by the given sums, and one unused slot.
    pub fn slots_with_fresh<'a>(&self, sums: impl IntoIterator<Item = &'a ModuleSum>) -> (Vec<u32>, u32) {
        let mut used = BTreeSet::new();
        for m in sums {
            for t in m.tubes() {
                if let TubeId::Hom(h) = t {
                    used.insert(h);
                }
            }
        }
        let fresh = used.iter().next_back().map_or(1, |m| m + 1);
        (used.into_iter().collect(), fresh)
    }

    /// The finite test set used by `leq`: windows of radius
    /// `factor * 2(p(Q)+d(Q))` around the preprojective and preinjective
    /// summands, all regular simples, tube modules up to the longest
    /// occurring length plus `factor * p(Q)` in every touched tube, and
    /// homogeneous modules up to the same length in every used slot and one
    /// fresh slot.
    pub fn test_set(&self, m: &ModuleSum, n: &ModuleSum, factor: u32) -> Vec<Indec> {
        self.test_set_many(&[m, n], factor)
    }

    /// `test_set` for a whole family of modules at once.
    pub fn test_set_many(&self, sums: &[&ModuleSum], factor: u32) -> Vec<Indec> {
        if !self.is_extended() {
            return self.all_dynkin();
        }
        let w = factor * self.base_window();
        let mut set = BTreeSet::new();
        let mut touched = vec![false; self.tubes().len()];
        let mut maxlen = 0;
        for s in sums {
            for (x, _) in s.iter() {
                match *x {
                    Indec::Preproj { .. } => set.extend(self.window(x, w, true).iter().copied()),
                    Indec::Preinj { .. } => set.extend(self.window(x, w, false).iter().copied()),
                    Indec::Reg { tube, l, .. } => {
                        if let TubeId::NonHom(t) = tube {
                            touched[t as usize] = true;
                        }
                        maxlen = maxlen.max(l);
                    }
                }
            }
        }
        let top = maxlen + factor * self.coxeter_period();
        for (t, tube) in self.tubes().iter().enumerate() {
            let len = if touched[t] { top } else { 1 };
            for s in 0..tube.period {
                for l in 1..=len {
                    set.insert(Indec::reg(t, s as usize, l));
                }
            }
        }
        let (slots, fresh) = self.slots_with_fresh(sums.iter().copied());
        for h in slots.into_iter().chain([fresh]) {
            for l in 1..=top {
                set.insert(Indec::hom(h, l));
            }
        }
        set.into_iter().collect()
    }

    /// `M <= N` on the default window.
    pub fn leq(&self, m: &ModuleSum, n: &ModuleSum) -> Result<bool> {
        self.leq_window(m, n, 1)
    }

    /// `M <= N` with the window scaled by `factor`; both `[M,X] <= [N,X]`
    /// and `[X,M] <= [X,N]` are required on the test set.
    pub fn leq_window(&self, m: &ModuleSum, n: &ModuleSum, factor: u32) -> Result<bool> {
        self.check_dims(m, n)?;
        if m == n {
            return Ok(true);
        }
        Ok(self.leq_on(m, n, &self.test_set(m, n, factor)))
    }

    pub(crate) fn leq_on(&self, m: &ModuleSum, n: &ModuleSum, tests: &[Indec]) -> bool {
        tests.iter().all(|x| self.hom_into(m, x) <= self.hom_into(n, x) && self.hom_from(x, m) <= self.hom_from(x, n))
    }

    /// `[N,N] - [M,M]` for a proper degeneration `M < N`.
    pub fn codim(&self, n: &ModuleSum, m: &ModuleSum) -> Result<i64> {
        if m == n || !self.leq(m, n)? {
            return Err(Error::Precondition(format!("{m} is not a proper deformation of {n}")));
        }
        Ok(self.hom_sum(n, n) - self.hom_sum(m, m))
    }

    fn uv_preconditions(&self, m: &ModuleSum, u: &Indec, v: &Indec) -> Result<ModuleSum> {
        let n = ModuleSum::from_counts([(*u, 1), (*v, 1)]);
        self.check_dims(m, &n)?;
        Ok(n)
    }

    /// Regular simples `E` relevant to `M`: all non-homogeneous simples and
    /// `H(1)` in every homogeneous slot of `M` plus a fresh one.
    fn regular_simples_for(&self, m: &ModuleSum) -> Vec<Indec> {
        let mut out: Vec<Indec> = (0..self.tubes().len())
            .flat_map(|t| (0..self.tubes()[t].period).map(move |s| Indec::reg(t, s as usize, 1)))
            .collect();
        let (slots, fresh) = self.slots_with_fresh([m]);
        out.extend(slots.into_iter().chain([fresh]).map(|h| Indec::hom(h, 1)));
        out
    }

    /// The three conditions of the finite degeneration test for a target
    /// `U + V` with `U` preprojective and `V` preinjective.
    pub fn degeneration_test_uv(&self, m: &ModuleSum, u: &Indec, v: &Indec) -> Result<bool> {
        if !self.is_extended() || !u.is_preproj() || !v.is_preinj() {
            return Err(Error::Precondition("needs U preprojective and V preinjective".into()));
        }
        if self.uv_preconditions(m, u, v)? == *m {
            return Ok(true);
        }
        let w = self.base_window();
        let mp = m.preproj_part();
        let mi = m.preinj_part();
        for (x, _) in mp.iter() {
            for t in self.window(x, w, true).iter() {
                if self.hom(u, t) < self.hom_into(&mp, t) {
                    return Ok(false);
                }
            }
        }
        for (x, _) in mi.iter() {
            for t in self.window(x, w, false).iter() {
                if self.hom(t, v) < self.hom_from(t, &mi) {
                    return Ok(false);
                }
            }
        }
        if self.defect(v) - self.sum_defect(&mi) <= 0 {
            return Ok(false);
        }
        Ok(self.regular_simples_for(m).iter().all(|e| self.hom(u, e) >= self.hom_into(m, e)))
    }

    /// Finite test for `M` inside one tube: equal dimension vectors and
    /// `[U,E] >= [M,E]` for the regular simples of that tube.
    pub fn regular_degeneration_test(&self, m: &ModuleSum, u: &Indec, v: &Indec) -> Result<bool> {
        let tubes = m.tubes();
        if tubes.len() != 1 || m.iter().any(|(x, _)| !x.is_regular()) {
            return Err(Error::Precondition(format!("{m} does not lie in one tube")));
        }
        if self.sum_dim(m) != dim::add(&self.dim(u), &self.dim(v)) {
            return Ok(false);
        }
        let simples: Vec<Indec> = match tubes[0] {
            TubeId::NonHom(t) => {
                (0..self.tubes()[t as usize].period).map(|s| Indec::reg(t as usize, s as usize, 1)).collect()
            }
            TubeId::Hom(h) => vec![Indec::hom(h, 1)],
        };
        Ok(simples.iter().all(|e| self.hom(u, e) >= self.hom_into(m, e)))
    }
}
