//! Numerical and catalog invariants over a family of extended Dynkin quivers.

use proptest::prelude::*;
use std::collections::HashSet;
use std::sync::OnceLock;
use tamedeg_core::{dim, Catalog, Indec, Quiver, TubeId};

const QUIVERS: &[(&str, usize)] = &[("A~2", 1), ("A~3", 2), ("D~4", 5), ("D~5", 3), ("E~6", 3), ("E~7", 4), ("D~8", 3), ("E~8", 1)];

fn catalogs() -> &'static [Catalog] {
    static C: OnceLock<Vec<Catalog>> = OnceLock::new();
    C.get_or_init(|| QUIVERS.iter().map(|&(n, s)| Catalog::new(Quiver::by_name(n, s, None).unwrap()).unwrap()).collect())
}

/// An indecomposable of `cat` chosen from three seeds.
fn pick(cat: &Catalog, kind: u8, a: usize, b: u32) -> Indec {
    let v = a % cat.n();
    match kind % 4 {
        0 => Indec::preproj(v, b % 6),
        1 => Indec::preinj(v, b % 6),
        2 => {
            let t = a % cat.tubes().len();
            let p = cat.period(TubeId::NonHom(t as u8));
            Indec::reg(t, a % p as usize, 1 + b % (2 * p + 2))
        }
        _ => Indec::hom(1, 1 + b % 3),
    }
}

#[test]
fn tube_periods_fill_the_rank() {
    for (cat, (name, _)) in catalogs().iter().zip(QUIVERS) {
        let s: u32 = cat.tubes().iter().map(|t| t.period - 1).sum();
        assert_eq!(s as usize, cat.n() - 2, "{name}");
    }
}

#[test]
fn preprojective_dimension_vectors_are_distinct() {
    for cat in catalogs() {
        let mut seen = HashSet::new();
        for v in 0..cat.n() {
            for k in 0..=3 * cat.coxeter_period() {
                assert!(seen.insert(cat.dim(&Indec::preproj(v, k))), "{v} {k}");
            }
        }
    }
}

proptest! {
    #[test]
    fn euler_form_is_bilinear(q in 0..QUIVERS.len(), x in prop::collection::vec(-5i64..6, 9), y in prop::collection::vec(-5i64..6, 9), z in prop::collection::vec(-5i64..6, 9), a in -3i64..4, b in -3i64..4) {
        let num = catalogs()[q].num();
        let n = catalogs()[q].n();
        let (x, y, z) = (&x[..n], &y[..n], &z[..n]);
        let comb = dim::add(&dim::scale(x, a), &dim::scale(y, b));
        prop_assert_eq!(num.euler_form(&comb, z), a * num.euler_form(x, z) + b * num.euler_form(y, z));
        prop_assert_eq!(num.euler_form(z, &comb), a * num.euler_form(z, x) + b * num.euler_form(z, y));
        prop_assert_eq!(num.tits_form(x), num.euler_form(x, x));
    }

    #[test]
    fn defect_is_coxeter_invariant(q in 0..QUIVERS.len(), x in prop::collection::vec(-5i64..6, 9)) {
        let num = catalogs()[q].num();
        let x = &x[..catalogs()[q].n()];
        prop_assert_eq!(num.defect(&num.c(x)), num.defect(x));
        prop_assert!(num.c_inv(&num.c(x)).iter().eq(x.iter()));
    }

    #[test]
    fn defect_sign_matches_component(q in 0..QUIVERS.len(), kind in 0u8..4, a in 0usize..64, b in 0u32..64) {
        let cat = &catalogs()[q];
        let x = pick(cat, kind, a, b);
        let d = cat.defect(&x);
        prop_assert_eq!(d.signum(), if x.is_preproj() { -1 } else if x.is_preinj() { 1 } else { 0 });
        if dim::multiple_of(&cat.dim(&x), cat.delta()).is_none() {
            prop_assert_eq!(cat.find_real(&cat.dim(&x)), Some(x));
        }
    }

    #[test]
    fn tau_has_the_tube_period(q in 0..QUIVERS.len(), a in 0usize..64, b in 0u32..64, m in 1u32..4) {
        let cat = &catalogs()[q];
        let x = pick(cat, 2, a, b);
        let p = cat.period(x.tube().unwrap());
        prop_assert_eq!(cat.tau_pow(&x, p as i64).unwrap(), x);
        prop_assert_eq!(cat.tau_pow(&cat.tau_pow(&x, -3).unwrap(), 3).unwrap(), x);
        let Indec::Reg { tube, s, .. } = x else { unreachable!() };
        let y = Indec::Reg { tube, s, l: p * m };
        prop_assert_eq!(cat.dim(&y), dim::scale(cat.delta(), m as i64));
    }

    #[test]
    fn coxeter_drift_on_preinjectives(q in 0..QUIVERS.len(), a in 0usize..64, b in 0u32..64) {
        let cat = &catalogs()[q];
        let x = pick(cat, 1, a, b);
        let p = cat.coxeter_period() as i64;
        let eps = cat.num().epsilon.unwrap();
        let shifted = cat.dim(&cat.tau_pow(&x, p).unwrap());
        prop_assert_eq!(shifted, dim::add(&cat.dim(&x), &dim::scale(cat.delta(), eps * cat.defect(&x))));
    }

    #[test]
    fn text_form_round_trips(q in 0..QUIVERS.len(), kind in 0u8..4, a in 0usize..64, b in 0u32..64) {
        let x = pick(&catalogs()[q], kind, a, b);
        prop_assert_eq!(tamedeg_core::catalog::parse_indec(&x.to_text()).unwrap(), x);
        prop_assert_eq!(tamedeg_core::catalog::parse_indec(&x.display()).unwrap(), x);
    }
}
