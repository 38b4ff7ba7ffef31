//! Extensions of a regular `V` with `dim V = delta` by a simple projective.

use crate::catalog::{Catalog, Indec, ModuleSum};
use crate::degen::TubeFilter;
use crate::error::{Error, Result};

/// Deformations `M` of `U + V` with `M_R != 0` or `M <= M'` for a
/// preprojective cover `M'` of `U + V`.
#[derive(Clone, Debug)]
pub struct ExtensionSetK {
    pub u: Indec,
    pub v: Indec,
    pub preprojective_covers: Vec<ModuleSum>,
}

impl ExtensionSetK {
    pub fn new(cat: &Catalog, u: &Indec, v: &Indec) -> Result<Self> {
        let simple_projective = matches!(*u, Indec::Preproj { k: 0, .. }) && crate::dim::total(&cat.dim(u)) == 1;
        if !simple_projective {
            return Err(Error::Precondition(format!("{u} is not simple projective")));
        }
        let tube = v.tube().filter(|_| !v.is_homogeneous());
        if tube.is_none_or(|t| cat.period(t) < 2) || cat.dim(v) != *cat.delta() {
            return Err(Error::Precondition(format!("{v} is not regular of dimension delta in a tube of period at least 2")));
        }
        let n = ModuleSum::from_counts([(*u, 1), (*v, 1)]);
        let preprojective_covers = cat
            .minimal_degenerations(&n, TubeFilter::Any)?
            .into_iter()
            .map(|d| d.lower)
            .filter(|m| m.iter().all(|(x, _)| x.is_preproj()))
            .collect();
        Ok(ExtensionSetK { u: *u, v: *v, preprojective_covers })
    }

    /// Membership for a deformation `M` of `U + V`; the split sum belongs.
    pub fn contains(&self, cat: &Catalog, m: &ModuleSum) -> Result<bool> {
        if !m.regular_part().is_zero() {
            return Ok(true);
        }
        for c in &self.preprojective_covers {
            if cat.leq(m, c)? {
                return Ok(true);
            }
        }
        Ok(false)
    }
}
