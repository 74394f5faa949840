//! Bi-Hamiltonian compatibility of the Poissonized families, and incompatible
//! Poissonizations of diffeomorphic Jacobi structures.

use jacobi_core::geometry::schouten;
use jacobi_core::jacobi::table1::table1_catalog;
use jacobi_core::poisson::families::{bihamiltonian_families, CompatibleFamily};
use jacobi_core::poisson::witness::{family_polarization, find_incompatibility_witness};
use jacobi_core::poisson::{compat_pair, poissonize};

#[test]
fn families_are_pairwise_compatible() {
    let fams = bihamiltonian_families().unwrap();
    let sizes: Vec<usize> = fams.iter().map(|f| f.members.len()).collect();
    assert_eq!(sizes, [4, 4, 4, 4, 6]);
    let mut checked = 0;
    for f in &fams {
        let m = f.check().unwrap();
        checked += m.pairs().count();
        assert!(m.passed(), "{}", f.algebra);
    }
    assert_eq!(checked, fams.iter().map(CompatibleFamily::pair_count).sum::<usize>());
    assert_eq!(checked, 61);
}

#[test]
fn whole_families_polarize() {
    for row in table1_catalog() {
        assert!(family_polarization(&row).unwrap().passed(), "{}", row.algebra.name());
    }
}

#[test]
fn structures_from_different_rows_are_not_compatible() {
    let t = table1_catalog();
    let p = poissonize(&t[0].entries[0].group()).unwrap();
    // II and III live on different groups; their coordinate charts coincide
    let q = poissonize(&t[1].entries[0].group()).unwrap();
    assert!(!compat_pair(&p, &q).unwrap().passed());
}

#[test]
fn witness_has_nonzero_lambda_s_mu_component() {
    let w = find_incompatibility_witness().unwrap().expect("witness");
    let s = w.p1.chart().dim() - 1;
    assert_ne!(w.lambda, s);
    assert_ne!(w.mu, s);
    assert!(!w.value.is_zero());
    let br = schouten(w.p1.field(), w.p2.field()).unwrap();
    assert_eq!(br.component(&[w.lambda, s, w.mu]), w.value);
    assert!(w.describe().contains(",s,"));
}
