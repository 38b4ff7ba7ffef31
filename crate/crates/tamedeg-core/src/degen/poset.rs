//! Finite posets by transitive reduction, and deformation posets.

use super::enumerate::{Enumerator, TubeFilter};
use super::minimal::{type_poset, Comparator};
use crate::catalog::{Catalog, ModuleSum};
use crate::error::{Error, Result};
use fixedbitset::FixedBitSet;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

/// A partial order on `0..len` with strict up-sets and cover edges
/// `[lower, upper]`.
#[derive(Clone, Debug)]
pub struct Poset {
    above: Vec<FixedBitSet>,
    covers: Vec<(usize, usize)>,
}

impl Poset {
    /// Builds the poset from a reflexive relation, verifying antisymmetry
    /// and transitivity exhaustively.
    pub fn from_relation(len: usize, le: impl Fn(usize, usize) -> bool + Sync) -> Result<Self> {
        let above: Vec<FixedBitSet> = (0..len)
            .into_par_iter()
            .map(|i| {
                let mut b = FixedBitSet::with_capacity(len);
                for j in 0..len {
                    if i != j && le(i, j) {
                        b.insert(j);
                    }
                }
                b
            })
            .collect();
        for i in 0..len {
            for j in above[i].ones() {
                if above[j].contains(i) {
                    return Err(Error::Internal(format!("elements {i} and {j} are equivalent")));
                }
                if !above[j].is_subset(&above[i]) {
                    return Err(Error::Internal(format!("relation not transitive at {i} < {j}")));
                }
            }
        }
        let covers = (0..len)
            .into_par_iter()
            .flat_map_iter(|i| {
                let above = &above;
                above[i]
                    .ones()
                    .filter(move |&j| !above[i].ones().any(|k| k != j && above[k].contains(j)))
                    .map(move |j| (i, j))
            })
            .collect();
        Ok(Poset { above, covers })
    }

    pub fn len(&self) -> usize {
        self.above.len()
    }

    pub fn is_empty(&self) -> bool {
        self.above.is_empty()
    }

    /// Strict order `i < j`.
    pub fn lt(&self, i: usize, j: usize) -> bool {
        self.above[i].contains(j)
    }

    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn maximal(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.above[i].is_clear()).collect()
    }

    pub fn minimal(&self) -> Vec<usize> {
        (0..self.len()).filter(|&j| !(0..self.len()).any(|i| self.lt(i, j))).collect()
    }

    /// The unique maximum, if any.
    pub fn maximum(&self) -> Option<usize> {
        let m = self.maximal();
        (m.len() == 1 && (0..self.len()).all(|i| i == m[0] || self.lt(i, m[0]))).then(|| m[0])
    }
}

/// All deformations of a target with their codimensions and cover edges.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct DeformationPoset {
    pub target: ModuleSum,
    pub elements: Vec<ModuleSum>,
    pub codims: Vec<i64>,
    /// Cover edges `[lower, upper]` as indices into `elements`.
    pub covers: Vec<(usize, usize)>,
}

impl DeformationPoset {
    pub fn top(&self) -> usize {
        self.elements.iter().position(|m| *m == self.target).expect("target is an element")
    }

    /// Elements covered by the target.
    pub fn minimal_below_top(&self) -> Vec<&ModuleSum> {
        let t = self.top();
        self.covers.iter().filter(|c| c.1 == t).map(|c| &self.elements[c.0]).collect()
    }

    pub fn index_of(&self, m: &ModuleSum) -> Option<usize> {
        self.elements.iter().position(|e| e == m)
    }
}

impl Catalog {
    /// Every `M <= N` passing `candidate` (the target always included), with
    /// the order checked to be partial and `N` its maximum.
    pub fn deformation_poset(
        &self,
        n: &ModuleSum,
        filter: TubeFilter,
        candidate: &(dyn Fn(&ModuleSum) -> bool + Sync),
        cap: usize,
    ) -> Result<DeformationPoset> {
        let mut elements = Enumerator::new(self, n.clone()).filter(filter).cap(cap).run(&|m| candidate(m))?;
        if !elements.contains(n) {
            elements.push(n.clone());
            elements.sort();
        }
        let c = Comparator::new(self, n, &elements, 1);
        let poset = type_poset(&c, &elements)?;
        let top = elements.iter().position(|m| m == n).expect("target present");
        if poset.maximum() != Some(top) {
            return Err(Error::Internal(format!("{n} is not the maximum of its deformations")));
        }
        let hn = self.hom_sum(n, n);
        let codims = elements.iter().map(|m| hn - self.hom_sum(m, m)).collect();
        Ok(DeformationPoset { target: n.clone(), elements, codims, covers: poset.covers().to_vec() })
    }
}
