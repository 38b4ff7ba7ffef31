//! Comparison of deformations up to relabeling of fresh homogeneous slots,
//! and minimal degenerations.
//!
//! A fresh slot stands for a generic homogeneous tube not used by the
//! target. `M <= L` holds as types if some injective assignment of the fresh
//! slots of `M` to fresh slots of `L` or to unused tubes makes `M <= L` hold
//! for the resulting modules.

use super::enumerate::{Enumerator, HomMode, TubeFilter};
use super::poset::Poset;
use crate::catalog::{Catalog, Indec, ModuleSum, TubeId};
use crate::error::Result;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

/// A degeneration `lower < upper` with codimension `[upper,upper] - [lower,lower]`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DegenPair {
    pub lower: ModuleSum,
    pub upper: ModuleSum,
    pub codim: i64,
}

/// Precomputed comparison data for a family of modules sharing a target.
pub struct Comparator<'a> {
    cat: &'a Catalog,
    fresh_from: u32,
    generic: u32,
    tests: Vec<Indec>,
}

/// Hom counts of one module against the common tests, plus its fresh slots.
#[derive(Clone, Debug)]
pub struct Signature {
    fixed: Vec<i32>,
    alpha: i64,
    beta: i64,
    fresh: Vec<Vec<u32>>,
}

impl<'a> Comparator<'a> {
    /// Slots used by `target` are fixed; every larger slot label is fresh.
    pub fn new(cat: &'a Catalog, target: &ModuleSum, family: &[ModuleSum], factor: u32) -> Self {
        let (_, fresh_from) = cat.slots_with_fresh([target]);
        let refs: Vec<&ModuleSum> = family.iter().chain([target]).collect();
        let (_, generic) = cat.slots_with_fresh(refs.iter().copied());
        let tests = cat
            .test_set_many(&refs, factor)
            .into_iter()
            .filter(|x| match x.tube() {
                Some(TubeId::Hom(h)) => h < fresh_from || h == generic,
                _ => true,
            })
            .collect();
        Comparator { cat, fresh_from, generic, tests }
    }

    pub fn signature(&self, m: &ModuleSum) -> Signature {
        let cat = self.cat;
        let mut fixed: Vec<i32> = self.tests.iter().map(|t| cat.hom_into(m, t) as i32).collect();
        fixed.extend(self.tests.iter().map(|t| cat.hom_from(t, m) as i32));
        let g = Indec::hom(self.generic, 1);
        let mut fresh: Vec<(u32, Vec<u32>)> = Vec::new();
        for (x, c) in m.iter() {
            if let Indec::Reg { tube: TubeId::Hom(h), l, .. } = *x {
                if h >= self.fresh_from {
                    match fresh.iter_mut().find(|p| p.0 == h) {
                        Some(p) => p.1.extend(std::iter::repeat_n(l, c as usize)),
                        None => fresh.push((h, vec![l; c as usize])),
                    }
                }
            }
        }
        let fresh = fresh
            .into_iter()
            .map(|(_, mut p)| {
                p.sort_by(|a, b| b.cmp(a));
                p
            })
            .collect();
        Signature { fixed, alpha: cat.hom_into(m, &g), beta: cat.hom_from(&g, m), fresh }
    }

    /// `M <= L` as types.
    pub fn le(&self, m: &Signature, l: &Signature) -> bool {
        if m.fixed.iter().zip(&l.fixed).any(|(a, b)| a > b) {
            return false;
        }
        let mut used = vec![false; l.fresh.len()];
        assign(m, l, 0, &mut used)
    }
}

fn slot_le(m: &Signature, pm: &[u32], l: &Signature, pl: &[u32]) -> bool {
    let top = pm.iter().chain(pl).copied().max().unwrap_or(0) + 1;
    (1..=top).all(|h| {
        let s = |p: &[u32]| p.iter().map(|&x| x.min(h) as i64).sum::<i64>();
        let h64 = h as i64;
        h64 * m.alpha + s(pm) <= h64 * l.alpha + s(pl) && h64 * m.beta + s(pm) <= h64 * l.beta + s(pl)
    })
}

fn assign(m: &Signature, l: &Signature, i: usize, used: &mut [bool]) -> bool {
    if i == m.fresh.len() {
        return (0..l.fresh.len()).all(|j| used[j] || slot_le(m, &[], l, &l.fresh[j]));
    }
    if slot_le(m, &m.fresh[i], l, &[]) && assign(m, l, i + 1, used) {
        return true;
    }
    for j in 0..l.fresh.len() {
        if !used[j] && slot_le(m, &m.fresh[i], l, &l.fresh[j]) {
            used[j] = true;
            let ok = assign(m, l, i + 1, used);
            used[j] = false;
            if ok {
                return true;
            }
        }
    }
    false
}

/// `M <= L` up to relabeling of fresh slots beyond those of `target`.
pub fn leq_up_to_fresh(cat: &Catalog, target: &ModuleSum, m: &ModuleSum, l: &ModuleSum) -> bool {
    let fam = [m.clone(), l.clone()];
    let c = Comparator::new(cat, target, &fam, 1);
    c.le(&c.signature(m), &c.signature(l))
}

/// Relabels the fresh slots of `m` (those not used by `target`)
/// consecutively in the canonical order of their partitions.
pub fn canonical_fresh(cat: &Catalog, target: &ModuleSum, m: &ModuleSum) -> ModuleSum {
    let (_, fresh_from) = cat.slots_with_fresh([target]);
    let mut slots: Vec<(u32, Vec<u32>)> = Vec::new();
    let mut rest = ModuleSum::zero();
    for (x, c) in m.iter() {
        match *x {
            Indec::Reg { tube: TubeId::Hom(h), l, .. } if h >= fresh_from => {
                match slots.iter_mut().find(|p| p.0 == h) {
                    Some(p) => p.1.extend(std::iter::repeat_n(l, c as usize)),
                    None => slots.push((h, vec![l; c as usize])),
                }
            }
            _ => rest.add(*x, c),
        }
    }
    let mut parts: Vec<Vec<u32>> = slots
        .into_iter()
        .map(|(_, mut p)| {
            p.sort_by(|a, b| b.cmp(a));
            p
        })
        .collect();
    parts.sort_by(|a, b| b.cmp(a));
    for (k, p) in parts.iter().enumerate() {
        for &l in p {
            rest.add(Indec::hom(fresh_from + k as u32, l), 1);
        }
    }
    rest
}

/// Indices of the maximal elements among `sigs`. `keys` must be strictly
/// monotone along the order, as `[M,M]` is.
pub(crate) fn maximal_indices(c: &Comparator<'_>, sigs: &[Signature], keys: &[i64]) -> Vec<usize> {
    let mut order: Vec<usize> = (0..sigs.len()).collect();
    order.sort_by_key(|&i| std::cmp::Reverse(keys[i]));
    let mut maximal: Vec<usize> = Vec::new();
    let mut k = 0;
    while k < order.len() {
        let mut e = k;
        while e < order.len() && keys[order[e]] == keys[order[k]] {
            e += 1;
        }
        let fresh: Vec<usize> = order[k..e]
            .par_iter()
            .copied()
            .filter(|&i| !maximal.iter().any(|&j| c.le(&sigs[i], &sigs[j])))
            .collect();
        maximal.extend(fresh);
        k = e;
    }
    maximal.sort_unstable();
    maximal
}

impl Catalog {
    /// Minimal degenerations `M < N`, optionally restricted to one tube.
    /// Covers of `N` are the maximal proper deformations, so only maximal
    /// homogeneous configurations are enumerated. For `N = U + V` with `U`,
    /// `V` indecomposable every cover is the middle term of an extension of
    /// one by the other, which bounds `M` from below as well.
    pub fn minimal_degenerations(&self, n: &ModuleSum, filter: TubeFilter) -> Result<Vec<DegenPair>> {
        self.minimal_degenerations_with(n, filter, &|_| true)
    }

    /// As `minimal_degenerations`, searching only among candidates accepted
    /// by `candidates`, which must contain every cover of `N`.
    pub fn minimal_degenerations_with(
        &self,
        n: &ModuleSum,
        filter: TubeFilter,
        candidates: &(dyn Fn(&ModuleSum) -> bool + Sync),
    ) -> Result<Vec<DegenPair>> {
        let all = self.cover_candidates(n, candidates)?;
        let c = Comparator::new(self, n, &all, 1);
        let sigs: Vec<Signature> = all.par_iter().map(|m| c.signature(m)).collect();
        let keys: Vec<i64> = all.par_iter().map(|m| self.hom_sum(m, m)).collect();
        let hn = self.hom_sum(n, n);
        let mut out: Vec<DegenPair> = maximal_indices(&c, &sigs, &keys)
            .into_iter()
            .filter(|&i| match filter {
                TubeFilter::Any => true,
                TubeFilter::Only(t) => all[i].iter().all(|(x, _)| x.tube() == Some(t)),
            })
            .map(|i| DegenPair { lower: all[i].clone(), upper: n.clone(), codim: hn - keys[i] })
            .collect();
        out.sort();
        Ok(out)
    }

    /// Proper deformations of `N` containing all covers: maximal homogeneous
    /// configurations only, and extension middle terms when `N` has two
    /// indecomposable summands.
    pub fn cover_candidates(
        &self,
        n: &ModuleSum,
        candidates: &(dyn Fn(&ModuleSum) -> bool + Sync),
    ) -> Result<Vec<ModuleSum>> {
        let mut en = Enumerator::new(self, n.clone()).hom_mode(HomMode::Maximal);
        let s = n.summands();
        if s.len() == 2 {
            let (u, v) = (ModuleSum::single(s[0]), ModuleSum::single(s[1]));
            en = en.lower_bounds(vec![(v.clone(), u.clone()), (u, v)]);
        }
        en.run(&|m| m != n && candidates(m))
    }

    /// Whether `M < N` is a minimal degeneration, by checking that no
    /// enumerated deformation lies strictly between.
    pub fn is_minimal(&self, m: &ModuleSum, n: &ModuleSum) -> Result<bool> {
        if m == n || !self.leq(m, n)? {
            return Ok(false);
        }
        let above = Enumerator::new(self, n.clone()).hom_mode(HomMode::Maximal).run(&|x| x != n && x != m)?;
        let mut fam = above.clone();
        fam.push(m.clone());
        let c = Comparator::new(self, n, &fam, 1);
        let sm = c.signature(m);
        Ok(!above.par_iter().any(|x| {
            let sx = c.signature(x);
            c.le(&sm, &sx) && !c.le(&sx, &sm)
        }))
    }
}

/// Poset of `family` under the type order.
pub(crate) fn type_poset(c: &Comparator<'_>, family: &[ModuleSum]) -> Result<Poset> {
    let sigs: Vec<Signature> = family.par_iter().map(|m| c.signature(m)).collect();
    Poset::from_relation(family.len(), |i, j| c.le(&sigs[i], &sigs[j]))
}
