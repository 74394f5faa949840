//! The five worked systems: non-degeneracy, Darboux maps, symmetry
//! functions, Hamiltonians and invariants.

use jacobi_core::error::Error;
use jacobi_core::integrable::examples::{worked_system, worked_systems};
use jacobi_core::integrable::{
    build_system, canonical_poisson, check_structure_constants, equations_of_motion,
    involution_check, momentum_substitute, table2_catalog, table2_realization,
};
use jacobi_core::poisson::{poissonize, verify_darboux};
use jacobi_core::sampling::DEFAULT_SEED;
use jacobi_core::symexpr::{parse_scalar, Context, Scalar};

fn group(t: &str) -> Scalar {
    parse_scalar(t, &Context::with_coordinates(&["x", "y", "z", "s"])).unwrap()
}

#[test]
fn poissonizations_are_nondegenerate() {
    for w in worked_systems() {
        let pf = poissonize(&w.entry.group()).unwrap().pfaffian().unwrap();
        assert!(!pf.is_zero(), "{}", w.label);
        if w.label == "3.1" {
            assert_eq!(pf, group("exp(-2*s)"));
        }
    }
}

#[test]
fn darboux_maps_are_canonical() {
    for w in worked_systems() {
        let p = poissonize(&w.entry.group()).unwrap();
        let r = verify_darboux(&w.darboux, &p, DEFAULT_SEED).unwrap();
        assert!(r.passed(), "{}: {}", w.label, r.brackets);
        let printed_ok = verify_darboux(&w.printed_darboux, &p, DEFAULT_SEED).unwrap().passed();
        assert_eq!(printed_ok, w.erratum.is_none(), "{}", w.label);
    }
}

#[test]
fn momenta_close_on_the_canonical_chart() {
    let p = canonical_poisson();
    for r in table2_catalog() {
        let s = momentum_substitute(&r);
        let res = check_structure_constants(r.algebra(), &s, &p).unwrap();
        assert!(res.passed(), "{}: {res}", r.algebra().name());
    }
}

#[test]
fn systems_reproduce_hamiltonians_and_invariants() {
    for w in worked_systems() {
        let sys = w.build(DEFAULT_SEED).unwrap();
        assert!(check_structure_constants(&sys.algebra, &sys.symmetries, &sys.poisson)
            .unwrap()
            .passed());
        assert_eq!(sys.symmetries, w.symmetries, "{}", w.label);
        assert_eq!(sys.hamiltonian, w.printed_hamiltonian, "{}", w.label);
        let (k, inv) = sys.invariant.clone().expect("invariant");
        assert_eq!(k, w.printed_invariant, "{}", w.label);
        assert!(sys.poisson.bracket(&sys.hamiltonian, &inv).unwrap().is_zero());
        let report = involution_check(&sys, DEFAULT_SEED).unwrap();
        assert!(report.passed(), "{}", w.label);
        assert_eq!(report.ranks, [2, 2, 2]);
    }
    let h = |label: &str| worked_system(label).unwrap().printed_hamiltonian;
    assert_eq!(h("3.1"), group("-y*exp(s)"));
    assert_eq!(h("3.2"), group("-s"));
    assert_eq!(h("3.4"), group("-cosh(z)*exp(s)"));
}

#[test]
fn printed_brackets_hold() {
    for w in worked_systems() {
        let sys = w.build(DEFAULT_SEED).unwrap();
        for (i, j, rhs) in &w.printed_brackets {
            let got = sys.poisson.bracket(&sys.symmetries[i - 1], &sys.symmetries[j - 1]).unwrap();
            assert_eq!(&got, rhs, "{} {{S{i},S{j}}}", w.label);
        }
    }
    // {S1,S2} = {S1,S3} = −(S2 + S3) for III
    let sys = worked_system("3.2").unwrap().build(DEFAULT_SEED).unwrap();
    let s = &sys.symmetries;
    let rhs = -(&s[1] + &s[2]);
    assert_eq!(sys.poisson.bracket(&s[0], &s[1]).unwrap(), rhs);
    assert_eq!(sys.poisson.bracket(&s[0], &s[2]).unwrap(), rhs);
}

#[test]
fn flows_conserve_invariants() {
    for w in worked_systems() {
        let sys = w.build(DEFAULT_SEED).unwrap();
        let eom = equations_of_motion(&sys).unwrap();
        let (_, inv) = sys.invariant.clone().unwrap();
        for f in [&sys.hamiltonian, &inv] {
            let rate: Scalar = eom
                .iter()
                .map(|(c, v)| v * &f.differentiate(c).unwrap())
                .sum();
            assert!(rate.is_zero(), "{}", w.label);
        }
    }
}

#[test]
fn build_rejects_bad_inputs() {
    let w = worked_system("3.2").unwrap();
    let iii = table2_realization("III").unwrap();
    let err = build_system(&w.entry.group(), &w.printed_darboux, &iii, 2, DEFAULT_SEED);
    assert!(matches!(err, Err(Error::Darboux(_))));
    // a canonical map transports any realization: III symmetries on the II group
    let ii = worked_system("3.1").unwrap();
    assert!(build_system(&ii.entry.group(), &ii.darboux, &iii, 1, DEFAULT_SEED).is_ok());
    let err = build_system(&ii.entry.group(), &ii.darboux, &iii, 4, DEFAULT_SEED);
    assert!(matches!(err, Err(Error::IndexOutOfRange(4))));
}
