//! Acceptance checks shared by the acceptance harness and the integration
//! tests. Each returns a one-line summary on success and a description of
//! the first disagreement on failure.

#![allow(dead_code)]

use std::collections::BTreeSet;
use tamedeg_core::tube::TubeCat;
use tamedeg_core::{Catalog, Indec, ModuleSum, Quiver};
use tamedeg_oracle::cycle::{self, TubeSum, Uni};
use tamedeg_oracle::rep::{ext_dim, hom_dim};
use tamedeg_oracle::strings::{band_modules, string_modules};
use tamedeg_oracle::Rep;

pub type Check = Result<String, String>;

pub fn to_tube_sum(t: &TubeCat, m: &ModuleSum) -> TubeSum {
    let mut out: TubeSum = m.iter().flat_map(|(x, c)| std::iter::repeat_n((t.socle(x), t.len(x)), c as usize)).collect();
    out.sort_unstable();
    out
}

pub fn from_tube_sum(t: &TubeCat, m: &[Uni]) -> ModuleSum {
    let mut out = ModuleSum::zero();
    for &(s, l) in m {
        out.add(t.module(s, l), 1);
    }
    out
}

/// Tube hom and ext against the intertwiner solver on `E_s(l)`, `l <= maxlen`.
pub fn tube_homs(max_p: u32, maxlen: u32) -> Check {
    let mut pairs = 0;
    for p in 1..=max_p {
        let t = TubeCat::new(p).map_err(|e| e.to_string())?;
        let mods: Vec<Uni> = (1..=maxlen).flat_map(|l| (0..p).map(move |s| (s, l))).collect();
        let reps: Vec<Rep> = mods.iter().map(|&u| cycle::uniserial_rep(p, u)).collect();
        for (i, &a) in mods.iter().enumerate() {
            for (j, &b) in mods.iter().enumerate() {
                let (x, y) = (t.module(a.0, a.1), t.module(b.0, b.1));
                let (h, e) = (hom_dim(&reps[i], &reps[j]) as i64, ext_dim(&reps[i], &reps[j]));
                if t.hom(&x, &y) != h || t.ext(&x, &y) != e {
                    return Err(format!("p={p} {x} {y}: hom {} vs {h}, ext {} vs {e}", t.hom(&x, &y), t.ext(&x, &y)));
                }
                pairs += 1;
            }
        }
    }
    Ok(format!("{pairs} tube pairs agree"))
}

/// Oracle modules of a line or cycle quiver matched with catalog modules.
/// Real roots are unique; a string of dimension `m delta` is matched by its
/// homs to and from the real-root modules, and the band with parameter
/// `lambda` is the homogeneous module in slot `lambda`.
fn matched_modules(cat: &Catalog, max_dim: usize) -> Result<Vec<(Indec, Rep)>, String> {
    let n = cat.n();
    let arrows = cat.quiver().arrows().to_vec();
    let mut reals = Vec::new();
    let mut imag = Vec::new();
    for r in string_modules(n, &arrows, max_dim) {
        let d: Vec<i64> = r.dims.iter().map(|&x| x as i64).collect();
        match cat.find_real(&d) {
            Some(x) => reals.push((x, r)),
            None if cat.is_extended() => imag.push((d, r)),
            None => return Err(format!("no indecomposable of dimension {d:?}")),
        }
    }
    let mut out = reals.clone();
    for (d, r) in imag {
        // A tube of period 1 at a string parameter is homogeneous; it gets
        // its own slot.
        let m = tamedeg_core::dim::multiple_of(&d, cat.delta()).ok_or("string of imaginary non-delta dimension")?;
        let mut cands: Vec<Indec> = cat.find_regular(&d);
        cands.push(Indec::hom(3, m as u32));
        let cands: Vec<Indec> = cands
            .into_iter()
            .filter(|c| reals.iter().all(|(y, ry)| cat.hom(c, y) == hom_dim(&r, ry) as i64 && cat.hom(y, c) == hom_dim(ry, &r) as i64))
            .collect();
        match cands.as_slice() {
            [c] => out.push((*c, r)),
            _ => return Err(format!("string of dimension {d:?} matches {cands:?}")),
        }
    }
    if cat.is_extended() {
        let m = max_dim / cat.delta().iter().sum::<i64>() as usize;
        for lambda in [1, 2] {
            for (l, r) in band_modules(n, &arrows, m, lambda).into_iter().enumerate() {
                out.push((Indec::hom(lambda as u32, l as u32 + 1), r));
            }
        }
    }
    Ok(out)
}

/// Hom and ext of all indecomposable pairs against the intertwiner solver.
pub fn quiver_homs(cat: &Catalog, max_dim: usize) -> Check {
    let mods = matched_modules(cat, max_dim)?;
    let distinct: BTreeSet<Indec> = mods.iter().map(|m| m.0).collect();
    if distinct.len() != mods.len() {
        return Err("two oracle modules matched the same catalog module".into());
    }
    for (x, rx) in &mods {
        for (y, ry) in &mods {
            let (h, e) = (hom_dim(rx, ry) as i64, ext_dim(rx, ry));
            if cat.hom(x, y) != h || cat.ext(x, y) != e {
                return Err(format!("{x} {y}: hom {} vs {h}, ext {} vs {e}", cat.hom(x, y), cat.ext(x, y)));
            }
        }
    }
    Ok(format!("{} modules, {} pairs agree", mods.len(), mods.len() * mods.len()))
}

/// Extension middle terms and the codimension formula against GF(2)
/// enumeration of extension classes.
pub fn extension_posets(max_p: u32, maxlen: u32) -> Check {
    let mut pairs = 0;
    for p in 1..=max_p {
        let t = TubeCat::new(p).map_err(|e| e.to_string())?;
        let tests: Vec<Indec> = (1..=2 * maxlen + p).flat_map(|l| (0..p).map(move |s| (s, l))).map(|(s, l)| t.module(s, l)).collect();
        let below = |a: &ModuleSum, b: &ModuleSum| tests.iter().all(|x| t.hom_sum(&ModuleSum::single(*x), a) <= t.hom_sum(&ModuleSum::single(*x), b));
        for su in 0..p {
            for k in 1..=maxlen {
                for sv in 0..p {
                    for l in 1..=maxlen {
                        let (u, v) = (t.module(su, k), t.module(sv, l));
                        let e = t.extension_poset(&u, &v).map_err(|e| e.to_string())?;
                        let want = cycle::middle_terms(p, (su, k), (sv, l));
                        let got: BTreeSet<TubeSum> = e.middle.iter().map(|m| to_tube_sum(&t, m)).collect();
                        if got != want || got.len() != e.middle.len() {
                            return Err(format!("p={p} E({v},{u}): {got:?} vs {want:?}"));
                        }
                        let n = ModuleSum::from_counts([(u, 1), (v, 1)]);
                        let mut chain = vec![&n];
                        chain.extend(e.middle.iter());
                        if let Some(w) = chain.windows(2).find(|w| !below(w[1], w[0]) || below(w[0], w[1])) {
                            return Err(format!("p={p} E({v},{u}): {} is not below {}", w[1], w[0]));
                        }
                        if let Some(m) = e.minimal() {
                            let codim = t.hom_sum(&n, &n) - t.hom_sum(m, m);
                            if Some(codim) != e.min_codim {
                                return Err(format!("p={p} E({v},{u}): codim {codim} vs formula {:?}", e.min_codim));
                            }
                        }
                        pairs += 1;
                    }
                }
            }
        }
    }
    Ok(format!("{pairs} ordered pairs agree"))
}

/// The tube-only deformation poset of `E_1(10) + E_3(10)` for `p = 4`.
pub fn figure_poset() -> Check {
    let t = TubeCat::new(4).map_err(|e| e.to_string())?;
    let (u, v) = (t.module(0, 10), t.module(2, 10));
    let n = ModuleSum::from_counts([(u, 1), (v, 1)]);
    let dp = t.deformation_poset(&n, 100_000).map_err(|e| e.to_string())?;
    let oracle = cycle::deformations(4, &[(0, 10), (2, 10)]);
    let ours: Vec<TubeSum> = dp.elements.iter().map(|m| to_tube_sum(&t, m)).collect();
    let a: BTreeSet<&TubeSum> = ours.iter().collect();
    let b: BTreeSet<&TubeSum> = oracle.elements.iter().collect();
    if a != b {
        return Err(format!("{} elements vs oracle {}", a.len(), b.len()));
    }
    let ce: BTreeSet<(&TubeSum, &TubeSum)> = dp.covers.iter().map(|&(i, j)| (&ours[i], &ours[j])).collect();
    let co: BTreeSet<(&TubeSum, &TubeSum)> = oracle.covers.iter().map(|&(i, j)| (&oracle.elements[i], &oracle.elements[j])).collect();
    if ce != co {
        return Err(format!("{} covers vs oracle {}", ce.len(), co.len()));
    }
    let mut bold = BTreeSet::new();
    for m in &dp.elements {
        if *m != n && t.is_extension_regular_pair(m, &u, &v).map_err(|e| e.to_string())? {
            bold.insert(to_tube_sum(&t, m));
        }
    }
    let mut want = cycle::middle_terms(4, (0, 10), (2, 10));
    want.extend(cycle::middle_terms(4, (2, 10), (0, 10)));
    if bold != want || bold.len() != 6 {
        return Err(format!("bold set {bold:?} vs {want:?}"));
    }
    Ok(format!("{} elements, {} covers, {} bold", a.len(), ce.len(), bold.len()))
}

pub fn catalog(name: &str, sink: usize, source: Option<usize>) -> Catalog {
    Catalog::new(Quiver::by_name(name, sink, source).expect("quiver")).expect("catalog")
}

use rayon::prelude::*;
use std::collections::BTreeMap;
use tamedeg_core::bloc::{Calibration, GoldenRow};
use tamedeg_core::degen::{canonical_fresh, TubeFilter};
use tamedeg_core::dim::{self, Dim};
use tamedeg_core::tube::BlocRecord;
use tamedeg_core::TubeId;

/// Table rows grouped by quiver.
pub fn golden_groups() -> BTreeMap<(String, usize), Vec<GoldenRow>> {
    let mut g: BTreeMap<(String, usize), Vec<GoldenRow>> = BTreeMap::new();
    for r in GoldenRow::all() {
        g.entry((r.ty.clone(), r.sink)).or_default().push(r);
    }
    g
}

/// Every table row of type `ty`, after fitting one calibration per quiver,
/// is exactly the set of computed one-tube blocs of its target and tube.
pub fn golden_table(ty: &str) -> Check {
    let mut rows = 0;
    let mut fits = Vec::new();
    for ((t, sink), group) in golden_groups() {
        if t != ty {
            continue;
        }
        let cat = catalog(&t, sink, None);
        let refs: Vec<&GoldenRow> = group.iter().collect();
        let found = Calibration::fit(&cat, &refs).map_err(|e| e.to_string())?;
        let Some(c) = found.first() else {
            let table = Calibration::bloc_table(&cat, &refs).map_err(|e| e.to_string())?;
            let missing: Vec<String> = refs
                .iter()
                .filter(|r| !table.iter().any(|((v, _), b)| *v == r.v() && b.len() == 1 && b[0].count() as usize == r.summands.len()))
                .map(|r| format!("P({}) tau^{} I({}) tube {}", r.sink, r.shift, r.vertex, r.tube))
                .collect();
            return Err(format!("{t} sink {sink}: no calibration reproduces the rows; unmatched {missing:?}"));
        };
        fits.push(format!("P({sink}):{}", found.len()));
        // The row's own label round-trips through the fitted calibration.
        for r in &group {
            let m = c.row_module(&cat, r).map_err(|e| e.to_string())?;
            if c.sum_label(&cat, &m).as_deref() != Some(sorted_label(&r.label()).as_str()) {
                return Err(format!("label of {} does not round-trip", r.label()));
            }
        }
        rows += group.len();
    }
    if rows == 0 {
        return Err(format!("no rows for {ty}"));
    }
    Ok(format!("{rows} rows reproduced; consistent calibrations per sink {}", fits.join(" ")))
}

fn sorted_label(l: &str) -> String {
    let mut parts: Vec<&str> = l.split('+').collect();
    parts.sort_unstable();
    parts.join("+")
}

/// Targets for the codimension audit: `U = P(u)` for every vertex, and `V`
/// preinjective up to `tau^{p(Q)+2}`, regular up to length twice the period
/// (two homogeneous lengths), or preprojective up to `tau^-2`.
pub fn audit_run(cat: &Catalog) -> Result<Vec<BlocRecord>, String> {
    let k = cat.coxeter_period() + 2;
    let pre = cat.preinjective_targets(k).map_err(|e| e.to_string())?;
    let mut regs = vec![Indec::hom(1, 1), Indec::hom(1, 2)];
    for t in 0..cat.tubes().len() {
        let p = cat.period(TubeId::NonHom(t as u8));
        for s in 0..p {
            for l in 1..=2 * p {
                regs.push(Indec::reg(t, s as usize, l));
            }
        }
    }
    let mut blocs = Vec::new();
    for u in 0..cat.n() {
        let u = Indec::preproj(u, 0);
        let pp: Vec<Indec> = (0..cat.n()).flat_map(|v| (0..=2).map(move |k| Indec::preproj(v, k))).filter(|v| *v != u).collect();
        for targets in [&pre, &regs, &pp] {
            blocs.extend(cat.classify_run(&u, targets, None).map_err(|e| e.to_string())?.blocs);
        }
    }
    Ok(blocs)
}

/// Codimension one or two everywhere, and one for preprojective `U` with
/// preinjective `V`.
pub fn theorem_audit(cat: &Catalog, blocs: &[BlocRecord]) -> Check {
    let rep = cat.audit_blocs(blocs, false).map_err(|e| e.to_string())?;
    for name in ["disjoint", "codim-one-or-two", "codim-one-preproj-preinj"] {
        let c = rep.check(name).ok_or("missing check")?;
        if let Some(v) = c.violations.first() {
            return Err(format!("{name}: {} < {} + {}: {}", v.m, v.u, v.v, v.detail));
        }
    }
    let pp = rep.check("codim-one-preproj-preinj").map_or(0, |c| c.applicable);
    Ok(format!("{} blocs, {pp} with U preprojective and V preinjective", blocs.len()))
}

pub fn structure_audit(cat: &Catalog, blocs: &[BlocRecord]) -> Check {
    let rep = cat.audit_blocs(blocs, false).map_err(|e| e.to_string())?;
    let names = ["defect-balance", "near-ends", "length-spread", "few-summands-codim-one", "hom-spread", "summand-count", "top-only", "multiplicity"];
    let mut out = Vec::new();
    for name in names {
        let c = rep.check(name).ok_or("missing check")?;
        if let Some(v) = c.violations.first() {
            return Err(format!("{name}: {} < {} + {}: {}", v.m, v.u, v.v, v.detail));
        }
        out.push(format!("{name} {}", c.applicable));
    }
    Ok(out.join(", "))
}

fn partitions(n: u32, max: u32) -> Vec<Vec<u32>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for k in (1..=n.min(max)).rev() {
        for mut p in partitions(n - k, k) {
            p.insert(0, k);
            out.push(p);
        }
    }
    out
}

/// Homogeneous configurations of total length `n`: multisets of nonempty
/// partitions, one per slot.
fn hom_configs(n: u32) -> Vec<Vec<Vec<u32>>> {
    fn go(n: u32, bound: Option<&Vec<u32>>, cur: &mut Vec<Vec<u32>>, out: &mut Vec<Vec<Vec<u32>>>) {
        if n == 0 {
            out.push(cur.clone());
            return;
        }
        for k in 1..=n {
            for p in partitions(k, k) {
                if bound.is_some_and(|b| (b.iter().sum::<u32>(), b) < (k, &p)) {
                    continue;
                }
                cur.push(p.clone());
                go(n - k, Some(&p), cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(n, None, &mut Vec::new(), &mut out);
    out
}

/// Every decomposition of `d` into indecomposables; homogeneous parts use
/// slots `1, 2, ...`.
pub fn all_decompositions(cat: &Catalog, d: &[i64]) -> Vec<ModuleSum> {
    let items: Vec<Indec> = cat.roots_up_to(d).into_iter().filter(|x| !x.is_homogeneous()).collect();
    let dims: Vec<Dim> = items.iter().map(|x| cat.dim(x)).collect();
    fn go(cat: &Catalog, items: &[Indec], dims: &[Dim], start: usize, rem: Dim, cur: &mut Vec<Indec>, out: &mut Vec<ModuleSum>) {
        let base = |cur: &[Indec]| ModuleSum::from_counts(cur.iter().map(|x| (*x, 1)));
        if dim::is_zero(&rem) {
            out.push(base(cur));
            return;
        }
        if let Some(n) = dim::multiple_of(&rem, cat.delta()).filter(|&n| n > 0) {
            for conf in hom_configs(n as u32) {
                let mut m = base(cur);
                for (slot, p) in conf.iter().enumerate() {
                    for &l in p {
                        m.add(Indec::hom(slot as u32 + 1, l), 1);
                    }
                }
                out.push(m);
            }
        }
        for i in start..items.len() {
            if dim::le(&dims[i], &rem) {
                cur.push(items[i]);
                go(cat, items, dims, i, dim::sub(&rem, &dims[i]), cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(cat, &items, &dims, 0, d.iter().copied().collect(), &mut Vec::new(), &mut out);
    out
}

/// The finite degeneration test, `leq` on a 4x window and the one-tube test
/// agree on every decomposition of `dim(U + V)` for the table targets.
pub fn degeneration_tests(ty: &str) -> Check {
    let mut seen = BTreeSet::new();
    let (mut cands, mut degs) = (0, 0);
    for ((t, sink), group) in golden_groups() {
        if t != ty {
            continue;
        }
        let cat = catalog(&t, sink, None);
        for r in group {
            let (u, v) = (r.u(), r.v());
            if !seen.insert((sink, v)) {
                continue;
            }
            let n = ModuleSum::from_counts([(u, 1), (v, 1)]);
            let all = all_decompositions(&cat, &cat.sum_dim(&n));
            let bad = all.par_iter().find_map_any(|m| {
                let a = cat.degeneration_test_uv(m, &u, &v).map_err(|e| e.to_string());
                let b = cat.leq_window(m, &n, 4).map_err(|e| e.to_string());
                let one = m.tubes().len() == 1 && m.iter().all(|(x, _)| x.is_regular());
                let c = if one { Some(cat.regular_degeneration_test(m, &u, &v).map_err(|e| e.to_string())) } else { None };
                match (a, b, c) {
                    (Ok(a), Ok(b), None) if a == b => None,
                    (Ok(a), Ok(b), Some(Ok(c))) if a == b && b == c => None,
                    other => Some(format!("{m} < {u} + {v}: {other:?}")),
                }
            });
            if let Some(b) = bad {
                return Err(b);
            }
            cands += all.len();
            degs += all.iter().filter(|m| cat.leq_window(m, &n, 4).unwrap_or(false)).count();
        }
    }
    Ok(format!("{} targets, {cands} decompositions, {degs} degenerations, all tests agree", seen.len()))
}

/// `periodic_shift` of the blocs of sampled rows equals direct
/// classification of `U + tau^{p(Q)} V` in the same tube.
pub fn periodicity(sample: usize) -> Check {
    let rows = GoldenRow::all();
    let step = rows.len() / sample;
    let mut n = 0;
    for r in rows.iter().step_by(step).take(sample) {
        let cat = catalog(&r.ty, r.sink, None);
        let mut shifted_any = false;
        for t in 0..cat.tubes().len() as u8 {
            let mu = TubeId::NonHom(t);
            for b in cat.classify(&r.u(), &r.v(), TubeFilter::Only(mu)).map_err(|e| e.to_string())? {
                let s = cat.periodic_shift(&b, mu).map_err(|e| format!("{} < {} + {}: {e}", b.m, b.u, b.v))?;
                let direct = cat.classify(&r.u(), &s.v, TubeFilter::Only(mu)).map_err(|e| e.to_string())?;
                let want: Vec<&ModuleSum> = direct.iter().map(|d| &d.m).collect();
                let all_shifted: Vec<ModuleSum> = cat
                    .classify(&r.u(), &r.v(), TubeFilter::Only(mu))
                    .map_err(|e| e.to_string())?
                    .iter()
                    .map(|b| cat.periodic_shift(b, mu).map(|s| s.m))
                    .collect::<Result<_, _>>()
                    .map_err(|e| e.to_string())?;
                if want.len() != all_shifted.len() || !all_shifted.iter().all(|m| want.contains(&m)) {
                    return Err(format!("{} tube {}: shifted {all_shifted:?} vs direct {want:?}", s.v, t + 1));
                }
                if direct.iter().any(|d| d.m == s.m && d.codim != s.codim) {
                    return Err(format!("{}: codimension changed", s.m));
                }
                shifted_any = true;
                n += 1;
            }
        }
        if !shifted_any {
            return Err(format!("row {} has no bloc to shift", r.label()));
        }
    }
    Ok(format!("{n} blocs from {sample} rows shift onto direct classification"))
}

/// For `-∂U = ∂V = 1` the blocs are the sums of regular indecomposables from
/// pairwise different tubes with `[U, Top M_i] = 1`, and all are minimal.
pub fn defect_one(cat: &Catalog, max_shift: u32) -> Check {
    let mut pairs = 0;
    let mut total = 0;
    for v0 in 0..cat.n() {
        for k in 0..=max_shift {
            let u = Indec::preproj(v0, k);
            if cat.defect(&u) != -1 {
                continue;
            }
            for w in 0..cat.n() {
                for j in 0..=max_shift {
                    let v = Indec::preinj(w, j);
                    if cat.defect(&v) != 1 {
                        continue;
                    }
                    let n = ModuleSum::from_counts([(u, 1), (v, 1)]);
                    let want = closed_form(cat, &u, &cat.sum_dim(&n));
                    let got: BTreeSet<ModuleSum> = cat
                        .classify(&u, &v, TubeFilter::Any)
                        .map_err(|e| e.to_string())?
                        .into_iter()
                        .map(|b| canonical_fresh(cat, &n, &b.m))
                        .collect();
                    let want: BTreeSet<ModuleSum> = want.iter().map(|m| canonical_fresh(cat, &n, m)).collect();
                    if got != want {
                        return Err(format!("{u} + {v}: classify {got:?} vs closed form {want:?}"));
                    }
                    for m in &want {
                        if !cat.leq(m, &n).map_err(|e| e.to_string())? || !cat.is_minimal(m, &n).map_err(|e| e.to_string())? {
                            return Err(format!("{m} < {u} + {v} is not a minimal degeneration"));
                        }
                    }
                    pairs += 1;
                    total += want.len();
                }
            }
        }
    }
    if pairs == 0 {
        return Err("no pairs with defects -1 and 1".into());
    }
    Ok(format!("{pairs} pairs, {total} blocs, all minimal"))
}

/// Sums of regular indecomposables of dimension `d` from pairwise different
/// tubes with `[U, Top M_i] = 1`; homogeneous summands get distinct slots.
fn closed_form(cat: &Catalog, u: &Indec, d: &[i64]) -> Vec<ModuleSum> {
    let mut per_tube: Vec<Vec<Option<Indec>>> = Vec::new();
    for t in 0..cat.tubes().len() {
        let p = cat.period(TubeId::NonHom(t as u8));
        let mut opts = vec![None];
        let maxl = (dim::total(d) as u32) + p;
        for s in 0..p {
            for l in 1..=maxl {
                let x = Indec::reg(t, s as usize, l);
                let top = cat.top(&x).expect("tube module");
                let e = Indec::reg(t, top as usize, 1);
                if cat.hom(u, &e) == 1 && dim::le(&cat.dim(&x), d) {
                    opts.push(Some(x));
                }
            }
        }
        per_tube.push(opts);
    }
    let mut out = Vec::new();
    let mut choice: Vec<Option<Indec>> = Vec::new();
    fn go(cat: &Catalog, u: &Indec, d: &[i64], per: &[Vec<Option<Indec>>], choice: &mut Vec<Option<Indec>>, out: &mut Vec<ModuleSum>) {
        if choice.len() == per.len() {
            let m = ModuleSum::from_counts(choice.iter().flatten().map(|x| (*x, 1)));
            let rem = dim::sub(d, &cat.sum_dim(&m));
            if dim::is_zero(&rem) {
                out.push(m);
            } else if let Some(n) = dim::multiple_of(&rem, cat.delta()).filter(|&n| n > 0) {
                if cat.hom(u, &Indec::hom(1, 1)) == 1 {
                    for p in partitions(n as u32, n as u32) {
                        let mut mm = m.clone();
                        for (i, &l) in p.iter().enumerate() {
                            mm.add(Indec::hom(i as u32 + 1, l), 1);
                        }
                        out.push(mm);
                    }
                }
            }
            return;
        }
        for o in per[choice.len()].clone() {
            choice.push(o);
            go(cat, u, d, per, choice, out);
            choice.pop();
        }
    }
    go(cat, u, d, &per_tube, &mut choice, &mut out);
    out
}
