//! Reductions that are stated without proof and validated on single
//! examples only. Nothing in the classification path calls into here.

use crate::catalog::{Catalog, Indec, ModuleSum, TubeId};
use crate::dim::{self, Dim};
use crate::error::{Error, Result};
use crate::tube::{BlocRecord, Provenance};

impl Catalog {
    /// Socle reduction by a partial socle `E' = sum_{j in J} E_j^{n_j}` of a
    /// preinjective `V`, for one-tube regular `M`.
    ///
    /// Requires `n_j = [E_j, M] = [E_j, V]` for `j` in `J` and
    /// `q(dim V - dim E') = 1`. Summands of `M` with socle in `J` lose their
    /// socle; the others are kept. `V'` is the preinjective of dimension
    /// `dim V - dim E'`.
    pub fn reduce_bloc_by_partial_socle(&self, b: &BlocRecord, socles: &[u32]) -> Result<BlocRecord> {
        let tubes = b.m.tubes();
        let [mu @ TubeId::NonHom(t)] = tubes.as_slice() else {
            return Err(Error::Precondition(format!("{} does not lie in one non-homogeneous tube", b.m)));
        };
        if !b.v.is_preinj() || b.m.iter().any(|(x, _)| !x.is_regular()) {
            return Err(Error::Precondition("V must be preinjective and M regular".into()));
        }
        let p = self.period(*mu);
        if socles.is_empty() || socles.iter().any(|&j| j >= p) {
            return Err(Error::Precondition(format!("socle indices must be nonempty and below {p}")));
        }
        let mut d: Dim = self.dim(&b.v);
        for &j in socles {
            let e = Indec::reg(*t as usize, j as usize, 1);
            let n = self.hom(&e, &b.v);
            if n != self.hom_into_from(&e, &b.m) {
                return Err(Error::Precondition(format!("[{e}, M] differs from [{e}, V]")));
            }
            dim::add_assign(&mut d, &self.dim(&e), -n);
        }
        if self.num().tits_form(&d) != 1 {
            return Err(Error::Precondition(format!("{} is not a real root", dim::fmt(&d))));
        }
        let v2 = match self.find_real(&d) {
            Some(x) if x.is_preinj() => x,
            _ => return Err(Error::NoIndec(dim::fmt(&d))),
        };
        let mut q = ModuleSum::zero();
        for (x, c) in b.m.iter() {
            let Indec::Reg { s, l, .. } = *x else { unreachable!("M is regular") };
            if !socles.contains(&u32::from(s)) {
                q.add(*x, c);
            } else if l > 1 {
                q.add(Indec::reg(*t as usize, ((u32::from(s) + 1) % p) as usize, l - 1), c);
            }
        }
        let n2 = ModuleSum::from_counts([(b.u, 1), (v2, 1)]);
        Ok(BlocRecord {
            u: b.u,
            v: v2,
            codim: self.hom_sum(&n2, &n2) - self.hom_sum(&q, &q),
            m: q,
            provenance: Provenance::ReducedFrom { u: b.u, v: b.v, m: b.m.clone() },
        })
    }

    fn hom_into_from(&self, e: &Indec, m: &ModuleSum) -> i64 {
        m.iter().map(|(x, c)| self.hom(e, x) * i64::from(c)).sum()
    }
}

#[cfg(test)]
mod tests {
    use crate::bloc::{Calibration, GoldenRow};
    use crate::catalog::{Catalog, Indec};
    use crate::degen::TubeFilter;
    use crate::tube::BlocRecord;

    /// `S1(1)+S2(2) < P(2)+tau^2 I(2)` reduces by `E' = S2` to
    /// `S1(1)+S3(1) < P(2)+tau^2 I(6)`, again minimal, for `E~6` with sink 2.
    #[test]
    fn e6_partial_socle_example() {
        let all = GoldenRow::all();
        let rows: Vec<&GoldenRow> = all.iter().filter(|r| r.ty == "E~6" && r.sink == 2).collect();
        let row = |v: usize| *rows.iter().find(|r| r.tube == 1 && r.shift == 2 && r.vertex == v).unwrap();
        let (from, to) = (row(2), row(6));
        let cat = Catalog::new(from.quiver().unwrap()).unwrap();
        let cal = Calibration::fit(&cat, &rows).unwrap().remove(0);
        let m = cal.row_module(&cat, from).unwrap();
        let b = cat.classify(&from.u(), &from.v(), TubeFilter::Any).unwrap().into_iter().find(|b| b.m == m).unwrap();
        let Indec::Reg { s, .. } = cal.module(&cat, 1, 2, 1).unwrap() else { unreachable!() };
        let r: BlocRecord = cat.reduce_bloc_by_partial_socle(&b, &[u32::from(s)]).unwrap();
        assert_eq!(r.v, Indec::preinj(5, 2));
        assert_eq!(r.m, cal.row_module(&cat, to).unwrap());
        assert!(cat.is_minimal(&r.m, &r.target()).unwrap());
        assert!(cat.classify(&r.u, &r.v, TubeFilter::Any).unwrap().iter().any(|c| c.m == r.m && c.codim == r.codim));
    }

    #[test]
    fn unbalanced_socles_are_rejected() {
        let rows: Vec<GoldenRow> = GoldenRow::all().into_iter().filter(|r| r.ty == "E~6" && r.sink == 2).collect();
        let cat = Catalog::new(rows[0].quiver().unwrap()).unwrap();
        let b = cat.classify(&rows[0].u(), &rows[0].v(), TubeFilter::Any).unwrap();
        let b = b.iter().find(|b| b.m.iter().all(|(x, _)| x.is_regular()) && b.m.tubes().len() == 1).unwrap();
        assert!(cat.reduce_bloc_by_partial_socle(b, &[99]).is_err());
    }
}
