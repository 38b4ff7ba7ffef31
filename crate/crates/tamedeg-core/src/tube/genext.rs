//! Generic extensions by the regular simples of one tube, socle reduction
//! of blocs and the periodic shift.

use super::cat::TubeCat;
use super::ext::ExtensionPoset;
use crate::catalog::{Catalog, Indec, ModuleSum, TubeId};
use crate::dim::{self, Dim};
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// Where a bloc came from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "kind")]
pub enum Provenance {
    Direct,
    ReducedFrom { u: Indec, v: Indec, m: ModuleSum },
    PeriodicImageOf { u: Indec, v: Indec, m: ModuleSum },
}

/// A degeneration `M < U + V` with `M` disjoint from `U + V`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlocRecord {
    pub u: Indec,
    pub v: Indec,
    pub m: ModuleSum,
    pub codim: i64,
    pub provenance: Provenance,
}

impl BlocRecord {
    pub fn direct(u: Indec, v: Indec, m: ModuleSum, codim: i64) -> Self {
        BlocRecord { u, v, m, codim, provenance: Provenance::Direct }
    }

    pub fn target(&self) -> ModuleSum {
        ModuleSum::from_counts([(self.u, 1), (self.v, 1)])
    }
}

impl Catalog {
    /// Regular simples of a tube, by socle index.
    pub fn tube_simples(&self, mu: TubeId) -> Vec<Indec> {
        match mu {
            TubeId::NonHom(t) => (0..self.period(mu)).map(|s| Indec::reg(t as usize, s as usize, 1)).collect(),
            TubeId::Hom(h) => vec![Indec::hom(h, 1)],
        }
    }

    fn tube_cat_of(&self, x: &Indec) -> Result<(TubeId, TubeCat, Indec)> {
        match *x {
            Indec::Reg { tube, s, l } => {
                let t = TubeCat::new(self.period(tube))?;
                Ok((tube, t, t.module(s as u32, l)))
            }
            _ => Err(Error::Precondition(format!("{x} is not regular"))),
        }
    }

    fn from_tube_cat(mu: TubeId, y: &Indec) -> Indec {
        match (*y, mu) {
            (Indec::Reg { s, l, .. }, TubeId::NonHom(t)) => Indec::reg(t as usize, s as usize, l),
            (Indec::Reg { l, .. }, TubeId::Hom(h)) => Indec::hom(h, l),
            _ => unreachable!("tube modules are regular"),
        }
    }

    /// Middle terms of `0 -> U -> M -> V -> 0` for `U`, `V` in one tube.
    pub fn extension_poset(&self, u: &Indec, v: &Indec) -> Result<ExtensionPoset> {
        let (mu, t, tu) = self.tube_cat_of(u)?;
        let (nu, _, tv) = self.tube_cat_of(v)?;
        if mu != nu {
            return Err(Error::Incomparable);
        }
        let mut e = t.extension_poset(&tu, &tv)?;
        e.u = *u;
        e.v = *v;
        e.middle = e.middle.iter().map(|m| m.map(|y| Self::from_tube_cat(mu, y))).collect();
        Ok(e)
    }

    pub fn is_extension_regular_pair(&self, m: &ModuleSum, u: &Indec, v: &Indec) -> Result<bool> {
        let n = ModuleSum::from_counts([(*u, 1), (*v, 1)]);
        if self.sum_dim(m) != self.sum_dim(&n) {
            return Err(Error::Precondition(format!("{m} and {n} have different dimension vectors")));
        }
        if *m == n {
            return Ok(true);
        }
        Ok(self.extension_poset(u, v)?.middle.contains(m) || self.extension_poset(v, u)?.middle.contains(m))
    }

    fn preinj_with_dim(&self, d: &[i64]) -> Result<Indec> {
        match self.find_real(d) {
            Some(x) if x.is_preinj() => Ok(x),
            _ => Err(Error::NoIndec(dim::fmt(d))),
        }
    }

    /// `e(X)`: middle term of the universal extension of `X` by the simples
    /// of `mu`.
    pub fn generic_extension_e(&self, x: &Indec, mu: TubeId) -> Result<Indec> {
        self.validate(x)?;
        match *x {
            Indec::Reg { tube, s, l } if tube == mu => {
                let p = self.period(mu);
                Ok(match mu {
                    TubeId::NonHom(t) => Indec::reg(t as usize, ((s as u32 + p - 1) % p) as usize, l + 1),
                    TubeId::Hom(h) => Indec::hom(h, l + 1),
                })
            }
            Indec::Preinj { .. } => {
                let mut d: Dim = self.dim(x);
                for e in self.tube_simples(mu) {
                    dim::add_assign(&mut d, &self.dim(&e), self.ext(x, &e));
                }
                self.preinj_with_dim(&d)
            }
            _ => Ok(*x),
        }
    }

    /// `e^n(X)`.
    pub fn generic_extension_pow(&self, x: &Indec, mu: TubeId, n: u32) -> Result<Indec> {
        (0..n).try_fold(*x, |y, _| self.generic_extension_e(&y, mu))
    }

    /// `e` applied summandwise, valid by additivity of universal extensions.
    pub fn generic_extension_sum(&self, m: &ModuleSum, mu: TubeId, n: u32) -> Result<ModuleSum> {
        let mut out = ModuleSum::zero();
        for (x, c) in m.iter() {
            out.add(self.generic_extension_pow(x, mu, n)?, c);
        }
        Ok(out)
    }

    /// The preinjective `V'` with `dim V' = dim V - sum_i [E_i,V] dim E_i`,
    /// the generic quotient of `V` by its socle in `mu`.
    pub fn socle_quotient_v(&self, v: &Indec, mu: TubeId) -> Result<Indec> {
        if !v.is_preinj() {
            return Err(Error::Precondition(format!("{v} is not preinjective")));
        }
        let mut d: Dim = self.dim(v);
        for e in self.tube_simples(mu) {
            dim::add_assign(&mut d, &self.dim(&e), -self.hom(&e, v));
        }
        if !dim::is_nonneg(&d) || dim::is_zero(&d) {
            return Err(Error::Precondition(format!("{v} is not larger than its socle in the tube")));
        }
        self.preinj_with_dim(&d)
    }

    /// `Q < U + V'` obtained by removing the regular socle of `M`.
    pub fn reduce_bloc_by_socle(&self, b: &BlocRecord) -> Result<BlocRecord> {
        let tubes = b.m.tubes();
        let [mu] = tubes.as_slice() else {
            return Err(Error::Precondition(format!("{} does not lie in one tube", b.m)));
        };
        if b.m.iter().any(|(x, _)| !x.is_regular()) {
            return Err(Error::Precondition(format!("{} is not regular", b.m)));
        }
        if b.m.count() as i64 != self.defect(&b.v) {
            return Err(Error::Precondition(format!("{} does not have {} summands", b.m, self.defect(&b.v))));
        }
        if b.m.iter().all(|(x, _)| x.reg_len() == Some(1)) {
            return Err(Error::Precondition(format!("{} is regular semisimple", b.m)));
        }
        let p = self.period(*mu);
        let mut q = ModuleSum::zero();
        for (x, c) in b.m.iter() {
            if let Indec::Reg { tube, s, l } = *x {
                if l > 1 {
                    let y = match tube {
                        TubeId::NonHom(t) => Indec::reg(t as usize, ((s as u32 + 1) % p) as usize, l - 1),
                        TubeId::Hom(h) => Indec::hom(h, l - 1),
                    };
                    q.add(y, c);
                }
            }
        }
        let v2 = self.socle_quotient_v(&b.v, *mu)?;
        let n2 = ModuleSum::from_counts([(b.u, 1), (v2, 1)]);
        Ok(BlocRecord {
            u: b.u,
            v: v2,
            codim: self.hom_sum(&n2, &n2) - self.hom_sum(&q, &q),
            m: q,
            provenance: Provenance::ReducedFrom { u: b.u, v: b.v, m: b.m.clone() },
        })
    }

    /// `M_P + M_R + R + M_I < U + V` maps to
    /// `M_P + M_R + e^{eps p}(R) + tau^{p(Q)} M_I < U + tau^{p(Q)} V`, where `R`
    /// is the part of `M` in `mu`. For a homogeneous `mu` not met by `M`,
    /// `e^{eps p}(R)` is replaced by `E^{eps d}` with `d = ∂V - ∂M_I`.
    pub fn periodic_shift(&self, b: &BlocRecord, mu: TubeId) -> Result<BlocRecord> {
        if !b.u.is_preproj() || !b.v.is_preinj() {
            return Err(Error::Precondition("U must be preprojective and V preinjective".into()));
        }
        let eps = self.num().epsilon.ok_or(Error::NotExtended)?;
        let mp = b.m.preproj_part();
        let mi = b.m.preinj_part();
        let r = b.m.filter(|x| x.tube() == Some(mu));
        let mr = b.m.filter(|x| x.is_regular() && x.tube() != Some(mu));
        let d = self.sum_defect(&mp) - self.defect(&b.u);
        if d <= 0 || d != self.defect(&b.v) - self.sum_defect(&mi) {
            return Err(Error::Precondition("defects of the bloc do not balance".into()));
        }
        let pq = self.coxeter_period() as i64;
        let shifted_r = if r.is_zero() {
            if !matches!(mu, TubeId::Hom(_)) || (mp.is_zero() && mr.is_zero() && mi.is_zero()) {
                return Err(Error::Precondition(format!("{} has no summand in the tube", b.m)));
            }
            let TubeId::Hom(h) = mu else { unreachable!() };
            ModuleSum::from_counts([(Indec::hom(h, 1), (eps * d) as u32)])
        } else {
            let mpr = mp.plus(&r);
            for e in self.tube_simples(mu) {
                if self.hom(&b.u, &e) != self.hom_into(&mpr, &e) {
                    return Err(Error::Precondition(format!("[U,{e}] differs from [M_P + R,{e}]")));
                }
            }
            self.generic_extension_sum(&r, mu, eps as u32 * self.period(mu))?
        };
        let mut mi2 = ModuleSum::zero();
        for (x, c) in mi.iter() {
            mi2.add(self.tau_pow(x, pq)?, c);
        }
        let v2 = self.tau_pow(&b.v, pq)?;
        let m2 = mp.plus(&mr).plus(&shifted_r).plus(&mi2);
        let n2 = ModuleSum::from_counts([(b.u, 1), (v2, 1)]);
        if self.sum_dim(&m2) != self.sum_dim(&n2) {
            return Err(Error::Internal("periodic shift changed the dimension balance".into()));
        }
        Ok(BlocRecord {
            u: b.u,
            v: v2,
            codim: self.hom_sum(&n2, &n2) - self.hom_sum(&m2, &m2),
            m: m2,
            provenance: Provenance::PeriodicImageOf { u: b.u, v: b.v, m: b.m.clone() },
        })
    }

    /// A non-homogeneous tube meeting `M` whose simples satisfy the hom
    /// condition of the periodic shift.
    pub fn shift_tube(&self, b: &BlocRecord) -> Option<TubeId> {
        let mpart = b.m.preproj_part();
        b.m.tubes().into_iter().filter(|t| matches!(t, TubeId::NonHom(_))).find(|&mu| {
            let mpr = mpart.plus(&b.m.filter(|x| x.tube() == Some(mu)));
            self.tube_simples(mu).iter().all(|e| self.hom(&b.u, e) == self.hom_into(&mpr, e))
        })
    }
}
