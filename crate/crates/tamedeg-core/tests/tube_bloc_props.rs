//! Tube combinatorics and building-bloc invariants.

mod common;

use proptest::prelude::*;
use tamedeg_core::degen::TubeFilter;
use tamedeg_core::tube::{BlocRecord, TubeCat};
use tamedeg_core::{Catalog, Indec, ModuleSum, TubeId};

proptest! {
    #[test]
    fn extension_posets_are_decreasing_chains(p in 1u32..6, s1 in 0u32..6, k in 1u32..14, s2 in 0u32..6, l in 1u32..14) {
        let t = TubeCat::new(p).unwrap();
        let (u, v) = (t.module(s1 % p, k), t.module(s2 % p, l));
        let n = ModuleSum::from_counts([(u, 1), (v, 1)]);
        let e = t.extension_poset(&u, &v).unwrap();
        prop_assert!((1..=p).contains(&e.r));
        prop_assert_eq!(e.middle.len(), e.s_set.len());
        for w in e.middle.windows(2) {
            prop_assert!(t.leq(&w[1], &w[0]).unwrap() && w[0] != w[1]);
        }
        for m in &e.middle {
            prop_assert!(t.leq(m, &n).unwrap() && *m != n);
        }
        if let Some(m) = e.minimal() {
            prop_assert_eq!(Some(t.codim(&n, m)), e.min_codim);
        }
    }
}

fn runs(cat: &Catalog, u: Indec, max_shift: u32) -> Vec<BlocRecord> {
    let targets = cat.preinjective_targets(max_shift).unwrap();
    cat.classify_run(&u, &targets, None).unwrap().blocs
}

fn one_tube(b: &BlocRecord) -> Option<TubeId> {
    match b.m.tubes().as_slice() {
        [t] if b.m.iter().all(|(x, _)| x.is_regular()) => Some(*t),
        _ => None,
    }
}

/// One-tube blocs where every `[U,E_i]` counts the summands with top `E_i`,
/// all of one length per top, have codimension one.
#[test]
fn equal_lengths_per_top_give_codimension_one() {
    let cat = common::catalog("E~6", 3, None);
    let mut seen = 0;
    for b in runs(&cat, Indec::preproj(2, 0), 4) {
        let Some(mu @ TubeId::NonHom(_)) = one_tube(&b) else { continue };
        let simples = cat.tube_simples(mu);
        let ok = (0..simples.len() as u32).all(|i| {
            let tops: Vec<u32> = b.m.iter().filter(|(x, _)| cat.top(x) == Some(i)).flat_map(|(x, c)| std::iter::repeat_n(x.reg_len().unwrap(), c as usize)).collect();
            cat.hom(&b.u, &simples[i as usize]) == tops.len() as i64 && tops.windows(2).all(|w| w[0] == w[1])
        });
        if ok {
            seen += 1;
            assert_eq!(b.codim, 1, "{} < {} + {}", b.m, b.u, b.v);
        }
    }
    assert!(seen > 0);
}

/// Homogeneous blocs of codimension one are `R^{∂V}` for one indecomposable `R`.
#[test]
fn homogeneous_codimension_one_blocs_are_powers() {
    let mut seen = 0;
    for (name, sink, shift) in [("A~3", 1, 3), ("D~5", 3, 4), ("E~6", 3, 6)] {
        let cat = common::catalog(name, sink, None);
        let u = Indec::preproj(sink - 1, 0);
        for v in cat.preinjective_targets(shift).unwrap() {
            for b in cat.classify(&u, &v, TubeFilter::Only(TubeId::Hom(1))).unwrap() {
                if b.codim == 1 {
                    seen += 1;
                    assert!(matches!(b.m.items(), [(_, c)] if *c as i64 == cat.defect(&v)), "{} < {u} + {v}", b.m);
                }
            }
        }
    }
    assert!(seen > 0);
}

/// Socle reduction of a one-tube bloc with `∂V` summands is a bloc found by
/// direct classification, and every one-tube bloc with fewer summands
/// arises this way.
#[test]
fn socle_reduction_is_closed_and_onto() {
    let (mut reduced, mut small) = (0, 0);
    for (name, sink) in [("A~3", 1), ("D~5", 3), ("E~6", 1), ("E~6", 3)] {
        let cat = common::catalog(name, sink, None);
        let (r, s) = socle_reduction_in(&cat, Indec::preproj(sink - 1, 0), 5);
        reduced += r;
        small += s;
    }
    assert!(reduced > 0 && small > 0, "{reduced} {small}");
}

fn socle_reduction_in(cat: &Catalog, u: Indec, max_shift: u32) -> (usize, usize) {
    let blocs = runs(cat, u, max_shift);
    let direct = |b: &BlocRecord| blocs.iter().any(|c| c.v == b.v && c.m == b.m && c.codim == b.codim);
    let mut images = Vec::new();
    for b in &blocs {
        if one_tube(b).is_none() || b.m.count() as i64 != cat.defect(&b.v) {
            continue;
        }
        let Ok(r) = cat.reduce_bloc_by_socle(b) else { continue };
        assert!(direct(&r), "{} < {} + {} reduces to {} < {}", b.m, b.u, b.v, r.m, r.v);
        images.push((r.v, r.m));
    }
    let mut small = 0;
    for b in &blocs {
        let Indec::Preinj { k, .. } = b.v else { continue };
        if k + 3 > max_shift || one_tube(b).is_none() || b.m.count() as i64 >= cat.defect(&b.v) {
            continue;
        }
        small += 1;
        assert!(images.contains(&(b.v, b.m.clone())), "{} < {} + {} has no preimage", b.m, b.u, b.v);
    }
    (images.len(), small)
}

/// Splitting a preprojective-preinjective bloc along a directed
/// decomposition changes the codimension by the predicted amount.
#[test]
fn directed_reduction_predicts_codimension() {
    let cat = common::catalog("E~6", 3, None);
    let mut checked = 0;
    for b in runs(&cat, Indec::preproj(2, 0), 2) {
        let parts = b.m.summands();
        for mask in 1..(1u32 << parts.len()) - 1 {
            let pick = |bit: bool| ModuleSum::from_counts(parts.iter().enumerate().filter(|(i, _)| (mask >> i & 1 == 1) == bit).map(|(_, x)| (*x, b.m.multiplicity(x))));
            let (m1, m2) = (pick(true), pick(false));
            let Ok(r) = cat.reduce_directed(&b, &m1, &m2) else { continue };
            checked += 1;
            assert_eq!(b.codim, r.reduced.codim + r.delta, "{} = {m1} + {m2}", b.m);
        }
    }
    assert!(checked > 0);
}
