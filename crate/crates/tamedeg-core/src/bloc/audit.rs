//! Consistency checks over computed blocs. Each check has an applicability
//! condition; a bloc outside it is skipped, not passed.

use super::ClassificationRun;
use crate::catalog::{Catalog, Indec, ModuleSum, TubeId};
use crate::dim;
use crate::error::{Error, Result};
use crate::tube::{BlocRecord, Provenance};
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub check: String,
    pub u: Indec,
    pub v: Indec,
    pub m: ModuleSum,
    pub detail: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckSummary {
    pub name: String,
    pub applicable: usize,
    pub violations: Vec<Violation>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuditReport {
    pub checks: Vec<CheckSummary>,
}

impl AuditReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.violations.is_empty())
    }

    pub fn violations(&self) -> impl Iterator<Item = &Violation> {
        self.checks.iter().flat_map(|c| c.violations.iter())
    }

    pub fn check(&self, name: &str) -> Option<&CheckSummary> {
        self.checks.iter().find(|c| c.name == name)
    }

    fn record(&mut self, name: &str, b: &BlocRecord, outcome: Option<std::result::Result<(), String>>) {
        let idx = match self.checks.iter().position(|c| c.name == name) {
            Some(i) => i,
            None => {
                self.checks.push(CheckSummary { name: name.into(), ..Default::default() });
                self.checks.len() - 1
            }
        };
        let Some(outcome) = outcome else { return };
        let c = &mut self.checks[idx];
        c.applicable += 1;
        if let Err(detail) = outcome {
            c.violations.push(Violation { check: name.into(), u: b.u, v: b.v, m: b.m.clone(), detail });
        }
    }
}

/// Names of the checks run by `audit_blocs`, in report order.
pub const CHECKS: &[&str] = &[
    "disjoint",
    "codim-one-or-two",
    "codim-one-preproj-preinj",
    "minimal",
    "defect-balance",
    "multiplicity",
    "near-ends",
    "hom-spread",
    "summand-count",
    "length-spread",
    "few-summands-codim-one",
    "top-only",
];

fn ensure(ok: bool, detail: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(detail())
    }
}

impl Catalog {
    fn is_simple_projective(&self, x: &Indec) -> bool {
        matches!(*x, Indec::Preproj { k: 0, .. }) && dim::total(&self.dim(x)) == 1
    }

    /// The non-homogeneous tube containing every summand of `m`, if any.
    fn single_tube(m: &ModuleSum) -> Option<TubeId> {
        match m.tubes().as_slice() {
            [t @ TubeId::NonHom(_)] if m.iter().all(|(x, _)| x.is_regular()) => Some(*t),
            _ => None,
        }
    }

    /// Runs every check of `CHECKS` on `blocs`. Minimality is re-verified
    /// only when `verify_minimal` is set, since it enumerates the interval.
    pub fn audit_blocs(&self, blocs: &[BlocRecord], verify_minimal: bool) -> Result<AuditReport> {
        if !self.is_extended() {
            return Err(Error::NotExtended);
        }
        let mut rep = AuditReport::default();
        for b in blocs {
            let n = ModuleSum::from_counts([(b.u, 1), (b.v, 1)]);
            let pp = b.u.is_preproj() && b.v.is_preinj();
            rep.record("disjoint", b, Some(ensure(b.m.disjoint(&n), || "M shares a summand with U + V".into())));
            rep.record("codim-one-or-two", b, Some(ensure((1..=2).contains(&b.codim), || format!("codim {}", b.codim))));
            rep.record("codim-one-preproj-preinj", b, pp.then(|| ensure(b.codim == 1, || format!("codim {}", b.codim))));
            let minimal = if verify_minimal {
                Some(ensure(self.is_minimal(&b.m, &n)?, || "an intermediate deformation exists".into()))
            } else {
                None
            };
            rep.record("minimal", b, minimal);
            rep.record("defect-balance", b, (self.is_simple_projective(&b.u) && b.v.is_preinj()).then(|| self.check_defects(b)));
            rep.record("multiplicity", b, self.check_multiplicity(b)?);
            rep.record("near-ends", b, self.check_near_ends(b)?);
            rep.record("hom-spread", b, Some(self.check_hom_spread(b)));
            let one = Self::single_tube(&b.m).filter(|_| pp);
            rep.record("summand-count", b, one.map(|_| self.check_summand_count(b)));
            rep.record("length-spread", b, one.map(|t| self.check_length_spread(b, t)));
            rep.record(
                "few-summands-codim-one",
                b,
                one.filter(|_| (b.m.count() as i64) < self.defect(&b.v))
                    .map(|_| ensure(b.codim == 1, || format!("codim {} with {} summands", b.codim, b.m.count()))),
            );
            rep.record("top-only", b, one.map(|t| self.check_top_only(b, t)));
        }
        for name in CHECKS {
            if rep.check(name).is_none() {
                rep.checks.push(CheckSummary { name: (*name).into(), ..Default::default() });
            }
        }
        Ok(rep)
    }

    /// `∂ M_P > ∂ U` and `∂ M_I < ∂ V`.
    fn check_defects(&self, b: &BlocRecord) -> std::result::Result<(), String> {
        let (dp, du) = (self.sum_defect(&b.m.preproj_part()), self.defect(&b.u));
        let (di, dv) = (self.sum_defect(&b.m.preinj_part()), self.defect(&b.v));
        ensure(dp > du && di < dv, || format!("∂M_P={dp} ∂U={du} ∂M_I={di} ∂V={dv}"))
    }

    /// For preprojective `M` and `U` simple projective, a repeated summand
    /// `X` occurs twice, has defect -1, and the summands up to `X` plus one
    /// copy of `X` have dimension `delta + dim U`.
    fn check_multiplicity(&self, b: &BlocRecord) -> Result<Option<std::result::Result<(), String>>> {
        if !self.is_simple_projective(&b.u) || b.m.iter().any(|(x, _)| !x.is_preproj()) {
            return Ok(None);
        }
        let Some((x, n)) = b.m.iter().find(|(_, c)| *c >= 2).map(|(x, c)| (*x, c)) else {
            return Ok(None);
        };
        let mut below = ModuleSum::single(x);
        for (y, c) in b.m.iter() {
            if *y != x && self.precedes(y, &x)? {
                below.add(*y, c);
            }
        }
        let want = dim::add(self.delta(), &self.dim(&b.u));
        let got = self.sum_dim(&below);
        Ok(Some(ensure(n == 2 && self.defect(&x) == -1 && got == want, || {
            format!("{x} has multiplicity {n}, defect {}, dim {} vs {}", self.defect(&x), dim::fmt(&got), dim::fmt(&want))
        })))
    }

    /// Preprojective summands lie within `4p(Q) + d(Q)` of a preprojective
    /// `U`, and preinjective ones within that distance before a
    /// preinjective `V`.
    fn check_near_ends(&self, b: &BlocRecord) -> Result<Option<std::result::Result<(), String>>> {
        let bound = 4 * self.coxeter_period() + self.num().diameter;
        let mut any = false;
        for (x, _) in b.m.iter() {
            let d = if x.is_preproj() && b.u.is_preproj() {
                self.path_distance(&b.u, x)?
            } else if x.is_preinj() && b.v.is_preinj() {
                self.path_distance(x, &b.v)?
            } else {
                continue;
            };
            any = true;
            if d.is_some_and(|d| d >= bound) {
                return Ok(Some(Err(format!("{x} at distance {} >= {bound}", d.unwrap_or(0)))));
            }
        }
        Ok(any.then_some(Ok(())))
    }

    /// `[X, E]` varies by at most one over the simples `E` of a tube of
    /// period at least 2, for `X = U` and every preprojective summand;
    /// dually `[E, X]` for `V` and the preinjective summands.
    fn check_hom_spread(&self, b: &BlocRecord) -> std::result::Result<(), String> {
        let mut pre: Vec<Indec> = b.m.preproj_part().summands();
        let mut post: Vec<Indec> = b.m.preinj_part().summands();
        if b.u.is_preproj() {
            pre.push(b.u);
        }
        if b.v.is_preinj() {
            post.push(b.v);
        }
        for t in 0..self.tubes().len() as u8 {
            let mu = TubeId::NonHom(t);
            if self.period(mu) < 2 {
                continue;
            }
            let simples = self.tube_simples(mu);
            let spread = |f: &dyn Fn(&Indec) -> i64| {
                let vals: Vec<i64> = simples.iter().map(f).collect();
                vals.iter().max().unwrap_or(&0) - vals.iter().min().unwrap_or(&0)
            };
            for x in &pre {
                let s = spread(&|e| self.hom(x, e));
                ensure(s <= 1, || format!("[{x}, E] spreads by {s} in tube {}", t + 1))?;
            }
            for x in &post {
                let s = spread(&|e| self.hom(e, x));
                ensure(s <= 1, || format!("[E, {x}] spreads by {s} in tube {}", t + 1))?;
            }
        }
        Ok(())
    }

    fn check_summand_count(&self, b: &BlocRecord) -> std::result::Result<(), String> {
        let s = b.m.count() as i64;
        let (du, dv) = (self.defect(&b.u), self.defect(&b.v));
        ensure(s <= dv && s <= -du, || format!("{s} summands, ∂U={du} ∂V={dv}"))
    }

    fn check_length_spread(&self, b: &BlocRecord, t: TubeId) -> std::result::Result<(), String> {
        let lens: Vec<u32> = b.m.iter().filter_map(|(x, _)| x.reg_len()).collect();
        let spread = lens.iter().max().unwrap_or(&0) - lens.iter().min().unwrap_or(&0);
        ensure(spread <= self.period(t), || format!("lengths spread by {spread}"))
    }

    /// A simple `E` with `[U, E] > [M, E]` occurs in `M` only as a regular
    /// top, and then every summand has length at most `p`.
    fn check_top_only(&self, b: &BlocRecord, t: TubeId) -> std::result::Result<(), String> {
        let p = self.period(t);
        for (e_idx, e) in self.tube_simples(t).iter().enumerate() {
            if self.hom(&b.u, e) <= self.hom_into(&b.m, e) {
                continue;
            }
            for (y, _) in b.m.iter() {
                let tops = u32::from(self.top(y) == Some(e_idx as u32));
                ensure(self.factor_count(y, e_idx as u32) == tops, || format!("E{} inside {y}", e_idx + 1))?;
                ensure(y.reg_len().is_some_and(|l| l <= p), || format!("{y} longer than {p}"))?;
            }
        }
        Ok(())
    }

    /// Number of maximal elements among the deformations of `U + V` in the
    /// tube `mu` that pass the regular degeneration test.
    pub fn one_tube_maxima(&self, u: &Indec, v: &Indec, mu: TubeId) -> Result<usize> {
        use crate::degen::{Comparator, Enumerator, TubeFilter};
        let n = ModuleSum::from_counts([(*u, 1), (*v, 1)]);
        let family = Enumerator::new(self, n.clone())
            .filter(TubeFilter::Only(mu))
            .run(&|m| m != &n && self.regular_degeneration_test(m, u, v).unwrap_or(false))?;
        if family.is_empty() {
            return Ok(0);
        }
        let c = Comparator::new(self, &n, &family, 1);
        let sigs: Vec<_> = family.iter().map(|m| c.signature(m)).collect();
        let keys: Vec<i64> = family.iter().map(|m| self.hom_sum(m, m)).collect();
        Ok(crate::degen::maximal_indices(&c, &sigs, &keys).len())
    }

    /// Periodic images of the blocs of `run` up to `tau^max_shift`-targets.
    /// The run must contain the targets `tau^k I(v)` for `k < p(Q)` so that
    /// every orbit is represented.
    pub fn periodic_closure(&self, run: &ClassificationRun, max_shift: u32) -> Result<Vec<BlocRecord>> {
        let pq = self.coxeter_period();
        let covered = |k: u32| (0..self.n()).all(|v| run.targets.contains(&Indec::preinj(v, k)));
        if !(0..pq).all(covered) {
            return Err(Error::Precondition(format!("the run does not contain every tau^k I(v) with k < {pq}")));
        }
        let mut out: Vec<BlocRecord> = run.blocs.clone();
        let mut frontier: Vec<BlocRecord> = run.blocs.iter().filter(|b| b.v.is_preinj()).cloned().collect();
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for b in &frontier {
                let Indec::Preinj { k, .. } = b.v else { continue };
                if k + pq > max_shift {
                    continue;
                }
                let Some(mu) = self.shift_tube(b) else { continue };
                let mut s = self.periodic_shift(b, mu)?;
                s.provenance = Provenance::PeriodicImageOf { u: b.u, v: b.v, m: b.m.clone() };
                if !out.iter().any(|o| o.v == s.v && o.m == s.m) {
                    out.push(s.clone());
                    next.push(s);
                }
            }
            frontier = next;
        }
        out.sort_by(|a, b| (a.v, &a.m).cmp(&(b.v, &b.m)));
        Ok(out)
    }
}
