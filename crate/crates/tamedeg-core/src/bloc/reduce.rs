//! Reductions of a bloc to a smaller one with the same or a controlled
//! codimension.

use crate::catalog::{Catalog, Indec, ModuleSum};
use crate::dim;
use crate::error::{Error, Result};
use crate::tube::BlocRecord;
use serde::{Deserialize, Serialize};

/// A bloc together with the smaller bloc it reduces to.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReducedBloc {
    pub original: BlocRecord,
    pub reduced: BlocRecord,
    /// The new target summand `C`.
    pub c: Indec,
    /// `codim(original) - codim(reduced)` predicted from hom and ext data.
    pub delta: i64,
    /// Whether `reduced` is again a minimal degeneration.
    pub minimal: bool,
    /// Set when several candidates for `C` were consistent.
    pub ambiguous: bool,
}

impl Catalog {
    /// `x ≼ y`: preprojectives before regulars before preinjectives, paths
    /// inside the preprojective and preinjective components, and any two
    /// modules of one tube.
    pub fn precedes(&self, x: &Indec, y: &Indec) -> Result<bool> {
        let rank = |z: &Indec| if z.is_preproj() { 0 } else if z.is_regular() { 1 } else { 2 };
        Ok(match rank(x).cmp(&rank(y)) {
            std::cmp::Ordering::Less => true,
            std::cmp::Ordering::Greater => false,
            std::cmp::Ordering::Equal if x.is_regular() => x.tube() == y.tube(),
            std::cmp::Ordering::Equal => self.path_distance(x, y)?.is_some(),
        })
    }

    /// Whether `M1 + M2` is directed: no summand of `M2` precedes a regular
    /// summand of `M1` or properly precedes another summand of `M1`.
    pub fn is_directed(&self, m1: &ModuleSum, m2: &ModuleSum) -> Result<bool> {
        for (x, _) in m2.iter() {
            for (y, _) in m1.iter() {
                if (y.is_regular() || x != y) && self.precedes(x, y)? {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Splits `M < U + V` with `M = M1 + M2` directed and disjoint into
    /// `M1 < U + C`, where `dim C = dim M1 - dim U`.
    pub fn reduce_directed(&self, b: &BlocRecord, m1: &ModuleSum, m2: &ModuleSum) -> Result<ReducedBloc> {
        if !(matches!(b.u, Indec::Preproj { k: 0, .. }) && dim::total(&self.dim(&b.u)) == 1) {
            return Err(Error::Precondition(format!("{} is not simple projective", b.u)));
        }
        if m1.is_zero() || m2.is_zero() || m1.plus(m2) != b.m {
            return Err(Error::Precondition(format!("{m1} and {m2} do not split {}", b.m)));
        }
        if !m1.disjoint(m2) || !self.is_directed(m1, m2)? {
            return Err(Error::Precondition(format!("{m1} + {m2} is not directed and disjoint")));
        }
        let dc = dim::sub(&self.sum_dim(m1), &self.dim(&b.u));
        if !dim::is_positive(&dc) {
            return Err(Error::Precondition(format!("dim M1 - dim U = {} is not positive", dim::fmt(&dc))));
        }
        let (c, ambiguous) = self.pick_c(&dc, &b.u, m1)?;
        let v = &b.v;
        let vs = ModuleSum::single(*v);
        let delta = self.hom(v, v) - self.hom(&c, &c) - self.hom_sum(&vs, m2) + self.ext_sum(&vs, m2)
            - self.ext_sum(m2, m2)
            - self.hom_sum(m2, m1);
        let n2 = ModuleSum::from_counts([(b.u, 1), (c, 1)]);
        let reduced = BlocRecord {
            u: b.u,
            v: c,
            codim: self.hom_sum(&n2, &n2) - self.hom_sum(m1, m1),
            m: m1.clone(),
            provenance: crate::tube::Provenance::ReducedFrom { u: b.u, v: b.v, m: b.m.clone() },
        };
        let minimal = self.is_minimal(m1, &n2)?;
        Ok(ReducedBloc { original: b.clone(), reduced, c, delta, minimal, ambiguous })
    }

    /// An indecomposable of dimension `d` with `M1 <= U + C`; real roots have
    /// one candidate.
    fn pick_c(&self, d: &[i64], u: &Indec, m1: &ModuleSum) -> Result<(Indec, bool)> {
        if let Some(c) = self.find_real(d) {
            return Ok((c, false));
        }
        let (_, fresh) = self.slots_with_fresh([m1]);
        let mut ok = Vec::new();
        for c in self.find_all(d, &[fresh]) {
            if self.leq(m1, &ModuleSum::from_counts([(*u, 1), (c, 1)]))? {
                ok.push(c);
            }
        }
        match ok.as_slice() {
            [] => Err(Error::NoIndec(dim::fmt(d))),
            [c] => Ok((*c, false)),
            [c, ..] => Ok((*c, true)),
        }
    }

    /// For regular `V` and `M = M_P + R` with `R` the part of `M` in the tube
    /// of `V`: `M_P < U + V/R` with equal codimension.
    pub fn reduce_regular_target(&self, b: &BlocRecord) -> Result<ReducedBloc> {
        let Some(mu) = b.v.tube() else {
            return Err(Error::Precondition(format!("{} is not regular", b.v)));
        };
        let mp = b.m.preproj_part();
        let r = b.m.filter(|x| x.tube() == Some(mu));
        if mp.plus(&r) != b.m {
            return Err(Error::Precondition(format!("{} is not M_P + R", b.m)));
        }
        let c = match (r.items(), b.v) {
            ([], _) => b.v,
            ([(Indec::Reg { s: rs, l: rl, .. }, 1)], Indec::Reg { tube, s, l }) if *rs == s && *rl < l => {
                let top = match tube {
                    crate::catalog::TubeId::NonHom(_) => ((s as u32 + rl) % self.period(mu)) as u16,
                    crate::catalog::TubeId::Hom(_) => 0,
                };
                Indec::Reg { tube, s: top, l: l - rl }
            }
            _ => return Err(Error::Precondition(format!("{r} is not a proper submodule of {}", b.v))),
        };
        let n2 = ModuleSum::from_counts([(b.u, 1), (c, 1)]);
        let reduced = BlocRecord {
            u: b.u,
            v: c,
            codim: self.hom_sum(&n2, &n2) - self.hom_sum(&mp, &mp),
            m: mp.clone(),
            provenance: crate::tube::Provenance::ReducedFrom { u: b.u, v: b.v, m: b.m.clone() },
        };
        let minimal = self.is_minimal(&mp, &n2)?;
        Ok(ReducedBloc { delta: b.codim - reduced.codim, original: b.clone(), reduced, c, minimal, ambiguous: false })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::degen::TubeFilter;
    use crate::quiver::Quiver;

    #[test]
    fn precedence_follows_components() {
        let c = Catalog::new(Quiver::extended_e6(3).unwrap()).unwrap();
        let p = Indec::preproj(0, 0);
        let r = Indec::reg(0, 0, 2);
        let i = Indec::preinj(0, 0);
        assert!(c.precedes(&p, &r).unwrap() && c.precedes(&r, &i).unwrap() && c.precedes(&p, &i).unwrap());
        assert!(!c.precedes(&i, &p).unwrap());
        assert!(c.precedes(&Indec::reg(0, 1, 1), &r).unwrap());
        assert!(!c.precedes(&Indec::reg(1, 0, 1), &r).unwrap());
    }

    #[test]
    fn regular_target_keeps_codimension() {
        let c = Catalog::new(Quiver::by_name("A~3", 1, Some(3)).unwrap()).unwrap();
        let u = Indec::preproj(0, 0);
        let mut seen = 0;
        for t in 0..c.tubes().len() {
            let p = c.period(crate::catalog::TubeId::NonHom(t as u8));
            for l in 1..=p + 1 {
                for s in 0..p as usize {
                    let v = Indec::reg(t, s, l);
                    for b in c.classify(&u, &v, TubeFilter::Any).unwrap() {
                        if !b.m.preinj_part().is_zero() {
                            continue;
                        }
                        if b.m.regular_part().iter().any(|(x, _)| x.tube() != v.tube()) {
                            continue;
                        }
                        let Ok(r) = c.reduce_regular_target(&b) else { continue };
                        seen += 1;
                        assert_eq!(r.reduced.codim, b.codim, "{b:?}");
                        assert!(dim::le(&c.dim(&r.c), c.delta()));
                        assert_eq!(b.codim, 1 + c.ext(&r.c, &r.c), "{b:?}");
                    }
                }
            }
        }
        assert!(seen > 0);
    }
}
