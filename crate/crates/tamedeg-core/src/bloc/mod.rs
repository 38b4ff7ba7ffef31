//! Enumeration of building blocs `M < U + V`, their reductions and audits.

mod audit;
mod calib;
mod reduce;

pub use audit::{AuditReport, CheckSummary, Violation, CHECKS};
pub use calib::{Calibration, GoldenRow, TubeLabel};
pub use reduce::ReducedBloc;

use crate::catalog::{Catalog, Indec, ModuleSum, TubeId};
use crate::degen::{Comparator, Enumerator, TubeFilter};
use crate::error::{Error, Result};
use crate::tube::BlocRecord;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

/// Blocs for one `U` and a family of targets `V`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationRun {
    pub quiver: String,
    pub u: Indec,
    pub targets: Vec<Indec>,
    /// `None` for all blocs, otherwise the tube every `M` lies in.
    pub tube: Option<TubeId>,
    pub blocs: Vec<BlocRecord>,
}

impl Catalog {
    /// All building blocs `M < U + V`: minimal, disjoint from `U + V`, and
    /// inside `filter`.
    pub fn classify(&self, u: &Indec, v: &Indec, filter: TubeFilter) -> Result<Vec<BlocRecord>> {
        let n = ModuleSum::from_counts([(*u, 1), (*v, 1)]);
        self.validate_sum(&n)?;
        let lower: Vec<ModuleSum> = match filter {
            TubeFilter::Only(TubeId::NonHom(t)) => self.one_tube_covers(&n, u, v, t)?,
            _ => self.minimal_degenerations(&n, filter)?.into_iter().map(|d| d.lower).collect(),
        };
        let hn = self.hom_sum(&n, &n);
        let mut out: Vec<BlocRecord> = lower
            .into_iter()
            .filter(|m| m.disjoint(&n))
            .map(|m| {
                let codim = hn - self.hom_sum(&m, &m);
                BlocRecord::direct(*u, *v, m, codim)
            })
            .collect();
        out.sort_by(|a, b| a.m.cmp(&b.m));
        Ok(out)
    }

    /// Covers of `N` lying in the non-homogeneous tube `t`. They are maximal
    /// among the one-tube deformations; those of codimension 1 are covers
    /// outright, the others are checked against the whole interval.
    fn one_tube_covers(&self, n: &ModuleSum, u: &Indec, v: &Indec, t: u8) -> Result<Vec<ModuleSum>> {
        let mu = TubeId::NonHom(t);
        let family: Vec<ModuleSum> = Enumerator::new(self, n.clone())
            .filter(TubeFilter::Only(mu))
            .run(&|m| m != n && self.regular_degeneration_test(m, u, v).unwrap_or(false))?;
        if family.is_empty() {
            return Ok(Vec::new());
        }
        let c = Comparator::new(self, n, &family, 1);
        let sigs: Vec<_> = family.par_iter().map(|m| c.signature(m)).collect();
        let keys: Vec<i64> = family.par_iter().map(|m| self.hom_sum(m, m)).collect();
        let hn = self.hom_sum(n, n);
        let mut out = Vec::new();
        for i in crate::degen::maximal_indices(&c, &sigs, &keys) {
            if hn - keys[i] == 1 || self.is_minimal(&family[i], n)? {
                out.push(family[i].clone());
            }
        }
        Ok(out)
    }

    /// Blocs for every target in `targets`, in parallel.
    pub fn classify_run(&self, u: &Indec, targets: &[Indec], tube: Option<TubeId>) -> Result<ClassificationRun> {
        let filter = tube.map_or(TubeFilter::Any, TubeFilter::Only);
        let per: Vec<Result<Vec<BlocRecord>>> = targets.par_iter().map(|v| self.classify(u, v, filter)).collect();
        let mut blocs = Vec::new();
        for r in per {
            blocs.extend(r?);
        }
        Ok(ClassificationRun { quiver: self.quiver().to_text(), u: *u, targets: targets.to_vec(), tube, blocs })
    }

    /// `tau^k I(v)` for all `v` and `0 <= k <= max_shift`.
    pub fn preinjective_targets(&self, max_shift: u32) -> Result<Vec<Indec>> {
        if !self.is_extended() {
            return Err(Error::NotExtended);
        }
        Ok((0..=max_shift).flat_map(|k| (0..self.n()).map(move |v| Indec::preinj(v, k))).collect())
    }
}
