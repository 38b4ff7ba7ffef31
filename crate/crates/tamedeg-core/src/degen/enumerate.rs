//! Knapsack enumeration of the deformations `M <= N` of a fixed target.
//!
//! Non-homogeneous summands are chosen by depth-first search over the roots
//! below `dim N`, pruned by the hom bounds `[M,X] <= [N,X]`, `[X,M] <= [X,N]`
//! on a fixed test set. A remainder `n * delta` is filled by homogeneous
//! configurations: one partition per homogeneous slot. Slots not used by `N`
//! are fresh; fresh slots get consecutive labels after the slots of `N`,
//! ordered by their partitions, so every configuration has one canonical
//! representative.

use crate::catalog::{Catalog, Indec, ModuleSum, TubeId};
use crate::dim::{self, Dim};
use crate::error::{Error, Result};

/// Restriction of the candidate summands.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TubeFilter {
    Any,
    /// Every summand in the given tube; `Hom(_)` means one homogeneous slot.
    Only(TubeId),
}

/// Which homogeneous configurations are produced.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HomMode {
    All,
    /// Per fresh slot only the partition with the most (and most balanced)
    /// parts the bounds allow. Every other configuration lies below one of
    /// these, so maximal elements and covers are unaffected.
    Maximal,
}

pub struct Enumerator<'a> {
    cat: &'a Catalog,
    target: ModuleSum,
    filter: TubeFilter,
    hom_mode: HomMode,
    lower: Vec<(ModuleSum, ModuleSum)>,
    cap: usize,
}

/// A partition as non-increasing parts.
type Partition = Vec<u32>;

/// Slot label used to probe homogeneous tubes touched by nobody.
const PROBE_SLOT: u32 = 1 << 30;

struct Search<'a, 'b> {
    en: &'b Enumerator<'a>,
    items: Vec<Indec>,
    dims: Vec<Dim>,
    /// Non-homogeneous tests followed by probe-slot tests `H(1..=top)`.
    tests: Vec<Indec>,
    top: u32,
    cov: Vec<Vec<i32>>,
    con: Vec<Vec<i32>>,
    ub_cov: Vec<i32>,
    ub_con: Vec<i32>,
    /// `[H(1),X]` and `[X,H(1)]` per test; homogeneous contributions to
    /// non-homogeneous tests depend only on the total length.
    h_cov: Vec<i32>,
    h_con: Vec<i32>,
    lower: Vec<(Vec<i32>, Vec<i32>)>,
    sum_cov: Vec<i32>,
    sum_con: Vec<i32>,
    chosen: Vec<usize>,
    accept: &'b dyn Fn(&ModuleSum) -> bool,
    out: Vec<ModuleSum>,
    hom_allowed: bool,
}

impl<'a> Enumerator<'a> {
    pub fn new(cat: &'a Catalog, target: ModuleSum) -> Self {
        Enumerator {
            cat,
            target,
            filter: TubeFilter::Any,
            hom_mode: HomMode::All,
            lower: Vec::new(),
            cap: 2_000_000,
        }
    }

    pub fn filter(mut self, f: TubeFilter) -> Self {
        self.filter = f;
        self
    }

    pub fn hom_mode(mut self, m: HomMode) -> Self {
        self.hom_mode = m;
        self
    }

    pub fn cap(mut self, cap: usize) -> Self {
        self.cap = cap;
        self
    }

    /// Additionally requires, for one of the given pairs `(A, B)`,
    /// `[A,X] <= [M,X]` and `[X,B] <= [X,M]` on every test module `X`.
    pub fn lower_bounds(mut self, alternatives: Vec<(ModuleSum, ModuleSum)>) -> Self {
        self.lower = alternatives;
        self
    }

    pub fn target(&self) -> &ModuleSum {
        &self.target
    }

    /// All `M <= N` (including `N` when it passes the filters) accepted by
    /// `accept`, in lexicographic order of their canonical encodings.
    ///
    /// The order is decided on the union of the test sets of all candidate
    /// summands, a superset of the test set of each single pair.
    pub fn run(&self, accept: &dyn Fn(&ModuleSum) -> bool) -> Result<Vec<ModuleSum>> {
        let cat = self.cat;
        cat.validate_sum(&self.target)?;
        let bound = cat.sum_dim(&self.target);
        let items: Vec<Indec> = cat
            .roots_up_to(&bound)
            .into_iter()
            .filter(|x| !x.is_homogeneous())
            .filter(|x| match self.filter {
                TubeFilter::Any => true,
                TubeFilter::Only(t) => x.tube() == Some(t) && !matches!(t, TubeId::Hom(_)),
            })
            .collect();
        let hom_allowed = cat.is_extended()
            && match self.filter {
                TubeFilter::Any => true,
                TubeFilter::Only(t) => matches!(t, TubeId::Hom(_)),
            };
        let everything = self.target.plus(&ModuleSum::from_counts(items.iter().map(|&x| (x, 1))));
        let mut tests: Vec<Indec> =
            cat.test_set_many(&[&everything], 1).into_iter().filter(|x| !x.is_homogeneous()).collect();
        let top = everything.iter().filter_map(|(x, _)| x.reg_len()).max().unwrap_or(0)
            + if cat.is_extended() { cat.coxeter_period() } else { 0 };
        if cat.is_extended() {
            tests.extend((1..=top).map(|l| Indec::hom(PROBE_SLOT, l)));
        }
        let probe = Indec::hom(PROBE_SLOT, 1);
        let row = |f: &dyn Fn(&Indec) -> i64| -> Vec<i32> { tests.iter().map(|t| f(t) as i32).collect() };
        let nonhom = |t: &Indec, v: i64| if t.is_homogeneous() { 0 } else { v };
        let s = Search {
            en: self,
            dims: items.iter().map(|x| cat.dim(x)).collect(),
            cov: items.iter().map(|x| row(&|t| cat.hom(x, t))).collect(),
            con: items.iter().map(|x| row(&|t| cat.hom(t, x))).collect(),
            ub_cov: row(&|t| cat.hom_into(&self.target, t)),
            ub_con: row(&|t| cat.hom_from(t, &self.target)),
            h_cov: row(&|t| nonhom(t, cat.hom(&probe, t))),
            h_con: row(&|t| nonhom(t, cat.hom(t, &probe))),
            lower: self
                .lower
                .iter()
                .map(|(a, b)| (row(&|t| cat.hom_into(a, t)), row(&|t| cat.hom_from(t, b))))
                .collect(),
            sum_cov: vec![0; tests.len()],
            sum_con: vec![0; tests.len()],
            items,
            tests,
            top,
            chosen: Vec::new(),
            accept,
            out: Vec::new(),
            hom_allowed,
        };
        let mut s = s;
        s.dfs(0, bound)?;
        let mut out = s.out;
        out.sort();
        out.dedup();
        Ok(out)
    }
}

impl Search<'_, '_> {
    fn dfs(&mut self, start: usize, rem: Dim) -> Result<()> {
        if dim::is_zero(&rem) {
            return self.leaf(0);
        }
        if self.hom_allowed {
            if let Some(n) = dim::multiple_of(&rem, self.en.cat.delta()) {
                if n > 0 {
                    self.leaf(n as u32)?;
                }
            }
        }
        for i in start..self.items.len() {
            if !dim::le(&self.dims[i], &rem) || !self.fits(i) {
                continue;
            }
            self.push(i, 1);
            self.chosen.push(i);
            let next = dim::sub(&rem, &self.dims[i]);
            let r = self.dfs(i, next);
            self.chosen.pop();
            self.push(i, -1);
            r?;
        }
        Ok(())
    }

    fn fits(&self, i: usize) -> bool {
        let (c, d) = (&self.cov[i], &self.con[i]);
        (0..c.len()).all(|t| self.sum_cov[t] + c[t] <= self.ub_cov[t] && self.sum_con[t] + d[t] <= self.ub_con[t])
    }

    fn push(&mut self, i: usize, sign: i32) {
        for t in 0..self.sum_cov.len() {
            self.sum_cov[t] += sign * self.cov[i][t];
            self.sum_con[t] += sign * self.con[i][t];
        }
    }

    /// Non-homogeneous tests with a homogeneous part of total length `n`.
    fn vector_ok(&self, n: i32) -> (bool, Vec<bool>) {
        let len = self.tests.len();
        let cov = |t: usize| self.sum_cov[t] + n * self.h_cov[t];
        let con = |t: usize| self.sum_con[t] + n * self.h_con[t];
        let mut upper = true;
        for t in 0..len {
            if !self.tests[t].is_homogeneous() && (cov(t) > self.ub_cov[t] || con(t) > self.ub_con[t]) {
                upper = false;
            }
        }
        let alts = self
            .lower
            .iter()
            .map(|(a, b)| (0..len).all(|t| self.tests[t].is_homogeneous() || (a[t] <= cov(t) && b[t] <= con(t))))
            .collect();
        (upper, alts)
    }

    /// Tests in homogeneous tubes: every slot of `M` or `N`, and one unused.
    fn hom_ok(&self, m: &ModuleSum, alts: &[bool]) -> bool {
        let cat = self.en.cat;
        let (slots, fresh) = cat.slots_with_fresh([m, &self.en.target]);
        let mut lower_ok = alts.to_vec();
        for h in slots.into_iter().chain([fresh]) {
            for l in 1..=self.top {
                let x = Indec::hom(h, l);
                let (c, d) = (cat.hom_into(m, &x), cat.hom_from(&x, m));
                if c > cat.hom_into(&self.en.target, &x) || d > cat.hom_from(&x, &self.en.target) {
                    return false;
                }
                for (k, (a, b)) in self.en.lower.iter().enumerate() {
                    if lower_ok[k] && (cat.hom_into(a, &x) > c || cat.hom_from(&x, b) > d) {
                        lower_ok[k] = false;
                    }
                }
            }
        }
        self.en.lower.is_empty() || lower_ok.iter().any(|&b| b)
    }

    fn leaf(&mut self, n: u32) -> Result<()> {
        let (upper, alts) = self.vector_ok(n as i32);
        if !upper || !(self.en.lower.is_empty() || alts.iter().any(|&b| b)) {
            return Ok(());
        }
        let base = ModuleSum::from_counts(self.chosen.iter().map(|&i| (self.items[i], 1)));
        let configs = if n == 0 { vec![ModuleSum::zero()] } else { self.en.hom_configs(&base, n) };
        for h in configs {
            let m = base.plus(&h);
            if (!self.en.cat.is_extended() || self.hom_ok(&m, &alts)) && (self.accept)(&m) {
                self.out.push(m);
                if self.out.len() > self.en.cap {
                    return Err(Error::Cap(format!(
                        "more than {} deformations of {}",
                        self.en.cap, self.en.target
                    )));
                }
            }
        }
        Ok(())
    }
}

impl Enumerator<'_> {
    /// Largest `l` at which homogeneous bounds are checked.
    fn hom_horizon(&self, n: u32) -> u32 {
        let own = self.target.iter().filter_map(|(x, _)| if x.is_homogeneous() { x.reg_len() } else { None });
        n + own.max().unwrap_or(0) + 1
    }

    /// Budget `min([N,H(l)] - [A,H(l)], [H(l),N] - [H(l),A])` for `l = 1..=horizon`.
    fn budget(&self, a: &ModuleSum, slot: u32, horizon: u32) -> Vec<i64> {
        let cat = self.cat;
        (1..=horizon)
            .map(|l| {
                let h = Indec::hom(slot, l);
                let cov = cat.hom_into(&self.target, &h) - cat.hom_into(a, &h);
                let con = cat.hom_from(&h, &self.target) - cat.hom_from(&h, a);
                cov.min(con)
            })
            .collect()
    }

    /// Homogeneous configurations of total size `n` compatible with `A`.
    fn hom_configs(&self, a: &ModuleSum, n: u32) -> Vec<ModuleSum> {
        let (fixed, fresh0) = self.cat.slots_with_fresh([&self.target]);
        let horizon = self.hom_horizon(n);
        let fresh_budget = self.budget(a, fresh0, horizon);
        if let TubeFilter::Only(TubeId::Hom(_)) = self.filter {
            let mut out = Vec::new();
            for &slot in &fixed {
                for p in partitions(n, &self.budget(a, slot, horizon)) {
                    out.push(place(&[(slot, p)]));
                }
            }
            for p in self.fresh_partitions(n, &fresh_budget) {
                out.push(place(&[(fresh0, p)]));
            }
            return out;
        }
        let fixed_opts: Vec<Vec<Partition>> = fixed
            .iter()
            .map(|&slot| {
                let b = self.budget(a, slot, horizon);
                (0..=n).flat_map(|m| partitions(m, &b)).collect()
            })
            .collect();
        let fresh_opts: Vec<Partition> = {
            let mut v: Vec<Partition> = (1..=n).flat_map(|m| self.fresh_partitions(m, &fresh_budget)).collect();
            v.sort_by(|x, y| y.cmp(x));
            v
        };
        let mut out = Vec::new();
        let mut pick = Vec::new();
        fixed_product(&fixed_opts, 0, n, &mut pick, &mut |picked, left| {
            let mut fresh = Vec::new();
            fresh_multisets(&fresh_opts, 0, left, &mut fresh, &mut |parts| {
                let mut slots: Vec<(u32, Partition)> =
                    fixed.iter().copied().zip(picked.iter().cloned()).filter(|(_, p)| !p.is_empty()).collect();
                for (k, p) in parts.iter().enumerate() {
                    slots.push((fresh0 + k as u32, (*p).clone()));
                }
                out.push(place(&slots));
            });
        });
        out
    }

    fn fresh_partitions(&self, m: u32, budget: &[i64]) -> Vec<Partition> {
        match self.hom_mode {
            HomMode::All => partitions(m, budget),
            HomMode::Maximal => {
                let d = budget[0].clamp(0, m as i64) as u32;
                if d == 0 {
                    return Vec::new();
                }
                let p: Partition = (0..d).map(|j| m / d + u32::from(j < m % d)).collect();
                if admissible(&p, budget) {
                    vec![p]
                } else {
                    Vec::new()
                }
            }
        }
    }
}

fn place(slots: &[(u32, Partition)]) -> ModuleSum {
    ModuleSum::from_counts(slots.iter().flat_map(|(s, p)| p.iter().map(move |&l| (Indec::hom(*s, l), 1))))
}

/// `sum_j min(l, p_j) <= budget[l-1]` for every checked `l`.
fn admissible(p: &[u32], budget: &[i64]) -> bool {
    budget
        .iter()
        .enumerate()
        .all(|(i, &b)| p.iter().map(|&x| x.min(i as u32 + 1) as i64).sum::<i64>() <= b)
}

/// Partitions of `m` satisfying the budget, in decreasing lexicographic order.
fn partitions(m: u32, budget: &[i64]) -> Vec<Partition> {
    fn go(m: u32, max: u32, cur: &mut Partition, budget: &[i64], out: &mut Vec<Partition>) {
        if !admissible(cur, budget) {
            return;
        }
        if m == 0 {
            out.push(cur.clone());
            return;
        }
        for part in (1..=max.min(m)).rev() {
            cur.push(part);
            go(m - part, part, cur, budget, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(m, m, &mut Vec::new(), budget, &mut out);
    out
}

fn fixed_product(
    opts: &[Vec<Partition>],
    i: usize,
    left: u32,
    pick: &mut Vec<Partition>,
    f: &mut dyn FnMut(&[Partition], u32),
) {
    if i == opts.len() {
        f(pick, left);
        return;
    }
    for p in &opts[i] {
        let s: u32 = p.iter().sum();
        if s <= left {
            pick.push(p.clone());
            fixed_product(opts, i + 1, left - s, pick, f);
            pick.pop();
        }
    }
}

/// Non-increasing (in `opts` order) selections with total size `left`.
fn fresh_multisets<'p>(
    opts: &'p [Partition],
    start: usize,
    left: u32,
    cur: &mut Vec<&'p Partition>,
    f: &mut dyn FnMut(&[&'p Partition]),
) {
    if left == 0 {
        f(cur);
        return;
    }
    for i in start..opts.len() {
        let s: u32 = opts[i].iter().sum();
        if s <= left {
            cur.push(&opts[i]);
            fresh_multisets(opts, i, left - s, cur, f);
            cur.pop();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partitions_respect_budget() {
        assert_eq!(partitions(4, &[10; 5]).len(), 5);
        assert_eq!(partitions(4, &[2, 4, 6, 8, 10]), vec![vec![4], vec![3, 1], vec![2, 2]]);
    }
}
