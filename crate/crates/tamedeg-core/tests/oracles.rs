mod common;

use common::*;

#[test]
fn tube_hom_matches_intertwiners() {
    tube_homs(3, 6).unwrap();
}

#[test]
fn a3_hom_matches_intertwiners() {
    for sink in 1..=3 {
        quiver_homs(&catalog("A3", sink, None), 6).unwrap();
    }
}

#[test]
fn a2_tilde_hom_matches_intertwiners() {
    quiver_homs(&catalog("A~2", 1, None), 24).unwrap();
}

#[test]
fn extension_middle_terms_match_gf2_enumeration() {
    extension_posets(3, 5).unwrap();
}
