//! Jacobi catalog: Jacobi equations at both levels, vielbein pushes,
//! Poissonization against the printed column, and the recorded errata.

use jacobi_core::jacobi::table1::{table1_catalog, Column};
use jacobi_core::jacobi::{
    automorphism_act, check_algebra_jacobi, check_algebra_jacobi_tensor, check_group_jacobi, find_equivalence,
    push_to_group, EquivalenceSearch,
};
use jacobi_core::liealgebra::catalog_vielbein;
use jacobi_core::poisson::{check_poisson, poissonize, PoissonBivector};

#[test]
fn entry_counts() {
    let t = table1_catalog();
    let names: Vec<&str> = t.iter().map(|r| r.algebra.name()).collect();
    assert_eq!(names, ["II", "III", "IV", "VI0", "VII0"]);
    assert_eq!(t.iter().map(|r| r.entries.len()).sum::<usize>(), 22);
}

#[test]
fn general_families_satisfy_algebra_equations() {
    for row in table1_catalog() {
        assert!(check_algebra_jacobi(&row.general).passed(), "{}", row.algebra.name());
        assert!(check_algebra_jacobi_tensor(&row.general).passed(), "{}", row.algebra.name());
    }
}

#[test]
fn entries_satisfy_both_levels_and_push_consistently() {
    for row in table1_catalog() {
        let v = catalog_vielbein(row.algebra.name()).unwrap();
        for e in &row.entries {
            assert!(check_algebra_jacobi(&e.algebra_level).passed(), "{}", e.label());
            assert!(check_group_jacobi(&e.group()).unwrap().passed(), "{}", e.label());
            assert_eq!(push_to_group(&e.algebra_level, &v).unwrap(), e.group(), "{}", e.label());
        }
    }
}

#[test]
fn poissonization_matches_printed_column() {
    let mut corrected = Vec::new();
    for row in table1_catalog() {
        for e in &row.entries {
            let p = poissonize(&e.group()).unwrap();
            assert!(check_poisson(&p).unwrap().passed(), "{}", e.label());
            assert_eq!(p.field(), &e.poisson(), "{}", e.label());
            if p.field() != &e.poisson_printed {
                corrected.push(e.label());
            }
        }
    }
    assert_eq!(corrected, ["IV #2", "VII0 #6"]);
}

#[test]
fn printed_errata_are_inconsistent() {
    let t = table1_catalog();
    let find = |label: &str| {
        t.iter()
            .flat_map(|r| r.entries.iter())
            .find(|e| e.label() == label)
            .unwrap()
            .clone()
    };
    // the printed IV #2 Poisson column is not a Poisson structure
    let iv2 = find("IV #2");
    let printed = PoissonBivector::new(iv2.poisson_printed.clone()).unwrap();
    assert!(!check_poisson(&printed).unwrap().passed());
    // the printed group E of IV #3 and IV #4 fails the group equations
    for label in ["IV #3", "IV #4"] {
        let e = find(label);
        assert!(e.errata.iter().any(|x| x.column == Column::GroupE));
        assert!(!check_group_jacobi(&e.group_printed()).unwrap().passed(), "{label}");
    }
    // the printed VII0 #6 column lacks the dx^ds term of the row's own E
    let vii6 = find("VII0 #6");
    assert_ne!(poissonize(&vii6.group()).unwrap().field(), &vii6.poisson_printed);
}

#[test]
fn representatives_are_automorphism_images() {
    for row in table1_catalog() {
        let first = &row.entries[0].algebra_level;
        for e in &row.entries[1..] {
            let EquivalenceSearch::Found(a) = find_equivalence(first, &e.algebra_level, 2).unwrap()
            else {
                panic!("no automorphism within bound for {}", e.label());
            };
            let image = automorphism_act(first, &a).unwrap();
            assert_eq!(image.lambda(), e.algebra_level.lambda());
            assert_eq!(image.e(), e.algebra_level.e());
        }
    }
}
