//! Hom and ext invariants on random pairs of indecomposables.

use proptest::prelude::*;
use std::sync::OnceLock;
use tamedeg_core::{dim, Catalog, HomTable, Indec, ModuleSum, Quiver, TubeId};

const QUIVERS: &[(&str, usize)] = &[("A~3", 1), ("D~5", 3), ("E~6", 3), ("E~7", 4), ("E~8", 1)];

fn catalogs() -> &'static [Catalog] {
    static C: OnceLock<Vec<Catalog>> = OnceLock::new();
    C.get_or_init(|| QUIVERS.iter().map(|&(n, s)| Catalog::new(Quiver::by_name(n, s, None).unwrap()).unwrap()).collect())
}

fn indec(q: usize) -> impl Strategy<Value = Indec> {
    let cat = &catalogs()[q];
    let (n, tubes) = (cat.n(), cat.tubes().len());
    prop_oneof![
        (0..n, 0u32..8).prop_map(|(v, k)| Indec::preproj(v, k)),
        (0..n, 0u32..8).prop_map(|(v, k)| Indec::preinj(v, k)),
        (0..tubes, 0usize..8, 1u32..12).prop_map(move |(t, s, l)| {
            let p = catalogs()[q].period(TubeId::NonHom(t as u8)) as usize;
            Indec::reg(t, s % p, l)
        }),
        (1u32..3, 1u32..5).prop_map(|(h, l)| Indec::hom(h, l)),
    ]
}

fn pair() -> impl Strategy<Value = (usize, Indec, Indec)> {
    (0..QUIVERS.len()).prop_flat_map(|q| (Just(q), indec(q), indec(q)))
}

proptest! {
    #[test]
    fn hom_minus_ext_is_the_euler_form((q, x, y) in pair()) {
        let cat = &catalogs()[q];
        prop_assert!(cat.hom(&x, &y) >= 0 && cat.ext(&x, &y) >= 0);
        prop_assert_eq!(cat.hom(&x, &y) - cat.ext(&x, &y), cat.num().euler_form(&cat.dim(&x), &cat.dim(&y)));
    }

    #[test]
    fn ext_is_hom_into_the_translate((q, x, y) in pair()) {
        let cat = &catalogs()[q];
        if let Ok(tx) = cat.tau(&x) {
            prop_assert_eq!(cat.ext(&x, &y), cat.hom(&y, &tx));
        }
    }

    #[test]
    fn homs_go_forward_between_components((q, x, y) in pair()) {
        let cat = &catalogs()[q];
        let backward = (!x.is_preproj() && y.is_preproj()) || (x.is_preinj() && !y.is_preinj());
        let other_tubes = x.is_regular() && y.is_regular() && x.tube() != y.tube();
        if backward || other_tubes {
            prop_assert_eq!(cat.hom(&x, &y), 0);
        }
    }

    #[test]
    fn memo_table_agrees((q, x, y) in pair()) {
        let cat = &catalogs()[q];
        let t = HomTable::new(cat);
        for _ in 0..2 {
            prop_assert_eq!(t.get(&x, &y), (cat.hom(&x, &y), cat.ext(&x, &y)));
        }
    }

    /// `[M,X] - [N,X] = [tau^- X, M] - [tau^- X, N]` for `M = Y + Z` and `N`
    /// the semisimple module of the same dimension.
    #[test]
    fn auslander_reiten_relation((q, x, y) in pair(), z in 0u32..6) {
        let cat = &catalogs()[q];
        let Ok(tx) = cat.tau_inv(&x) else { return Ok(()) };
        let m = ModuleSum::from_counts([(y, 1), (Indec::preproj(z as usize % cat.n(), z), 1)]);
        let d = cat.sum_dim(&m);
        let n = ModuleSum::from_counts((0..cat.n()).map(|v| (cat.find_real(&dim::unit(cat.n(), v)).unwrap(), d[v] as u32)).filter(|e| e.1 > 0));
        prop_assert_eq!(cat.hom_into(&m, &x) - cat.hom_into(&n, &x), cat.hom_from(&tx, &m) - cat.hom_from(&tx, &n));
    }
}

/// Preprojectives `U'` with `dim U' <= 3 delta` have `[U',E]` spreading by at
/// most one over the simples of a tube of period at least 2, and at most 3.
#[test]
fn preprojective_homs_into_simples_are_balanced() {
    for cat in catalogs() {
        let bound = dim::scale(cat.delta(), 3);
        for v in 0..cat.n() {
            for k in 0.. {
                let u = Indec::preproj(v, k);
                if !dim::le(&cat.dim(&u), &bound) {
                    break;
                }
                for t in 0..cat.tubes().len() as u8 {
                    let mu = TubeId::NonHom(t);
                    if cat.period(mu) < 2 {
                        continue;
                    }
                    let h: Vec<i64> = cat.tube_simples(mu).iter().map(|e| cat.hom(&u, e)).collect();
                    let (lo, hi) = (h.iter().min().unwrap(), h.iter().max().unwrap());
                    assert!(hi - lo <= 1 && *hi <= 3, "{u} tube {}: {h:?}", t + 1);
                }
            }
        }
    }
}
