//! Constant Poisson structures on II⊕ℝ: the generated `E = 0` constraints,
//! their automorphism covariance, the class-(1) normal form, and the twelve
//! group-level representatives.

use jacobi_core::liealgebra::{automorphism_families, catalog_algebra};
use jacobi_core::poisson::table3::{
    find_representative_equivalences, table3_catalog, table3_compat_matrix,
};
use jacobi_core::poisson::{
    check_poisson, class1_automorphism, class1_representative, constraints_hold,
    generate_constant_constraints, pfaffian4, poisson_automorphism_act, rational_determinant,
    Class1Params, ConstantPoissonAnsatz,
};
use jacobi_core::sampling::{
    random_antisymmetric, random_automorphism, random_nonzero_rational, random_rational, rng,
    DEFAULT_SEED,
};
use jacobi_core::symexpr::{integer, Rational};
use num_traits::{One, Zero};
use rand_chacha::ChaCha8Rng;

const SAMPLES: usize = 100;

fn ansatz() -> ConstantPoissonAnsatz {
    ConstantPoissonAnsatz::new(catalog_algebra("II+R").unwrap())
}

fn random_constant(r: &mut ChaCha8Rng, p23: Rational) -> Vec<Vec<Rational>> {
    let mut m = random_antisymmetric(r, 4);
    m[2][1] = -p23.clone();
    m[1][2] = p23;
    m
}

#[test]
fn constraints_cut_out_p23_zero() {
    let a = ansatz();
    let cs = generate_constant_constraints(&a);
    assert!(!cs.is_empty());
    let mut r = rng(DEFAULT_SEED);
    for _ in 0..SAMPLES {
        let m = random_constant(&mut r, Rational::zero());
        assert!(constraints_hold(&a, &cs, &m).unwrap());
        let p23 = random_nonzero_rational(&mut r);
        let m = random_constant(&mut r, p23);
        assert!(!constraints_hold(&a, &cs, &m).unwrap());
    }
}

#[test]
fn constraints_are_automorphism_covariant() {
    let g = catalog_algebra("II+R").unwrap();
    let a = ansatz();
    let cs = generate_constant_constraints(&a);
    let mut r = rng(DEFAULT_SEED ^ 1);
    for _ in 0..SAMPLES {
        let p = random_constant(&mut r, Rational::zero());
        let aut = random_automorphism(&mut r, &g, &automorphism_families("II+R")[0]);
        let image = poisson_automorphism_act(&g, &p, &aut).unwrap();
        assert!(constraints_hold(&a, &cs, &image).unwrap());
        assert_eq!(pfaffian4(&image), rational_determinant(&aut) * pfaffian4(&p));
    }
}

#[test]
fn class1_normal_form_at_random_parameters() {
    let g = catalog_algebra("II+R").unwrap();
    let mut r = rng(DEFAULT_SEED ^ 2);
    let mut done = 0;
    while done < 3 {
        let p = random_constant(&mut r, Rational::zero());
        let f = Class1Params {
            a21: random_rational(&mut r),
            a24: random_rational(&mut r),
            a31: random_rational(&mut r),
            a32: random_nonzero_rational(&mut r),
        };
        let Ok(aut) = class1_automorphism(&p, &f) else {
            continue;
        };
        let image = poisson_automorphism_act(&g, &p, &aut).unwrap();
        assert_eq!(image, class1_representative());
        let d = &p[0][1] * &p[2][3] - &p[0][2] * &p[1][3];
        assert_eq!(rational_determinant(&aut), Rational::one() / d);
        done += 1;
    }
}

#[test]
fn representatives_are_poisson_and_nondegenerate() {
    let reps = table3_catalog();
    assert_eq!(reps.len(), 12);
    for e in &reps {
        assert_eq!(e.pushed().unwrap(), e.group_printed, "P'{}", e.index);
        assert!(check_poisson(&e.group()).unwrap().passed(), "P'{}", e.index);
        assert!(!e.group().pfaffian().unwrap().is_zero(), "P'{}", e.index);
        assert!(e.algebra_level[1][2].is_zero());
    }
    // P'6 = dx^dy + dz^ds
    assert_eq!(pfaffian4(&reps[5].algebra_level), integer(1));
}

#[test]
fn representatives_compatibility_matrix() {
    let m = table3_compat_matrix().unwrap();
    assert_eq!(m.size(), 12);
    assert_eq!(m.pairs().count(), 78);
    assert!(m.passed());
}

#[test]
fn representatives_share_one_orbit() {
    let eq = find_representative_equivalences(1).unwrap();
    assert_eq!(eq.len(), 11);
    assert!(eq.iter().all(|e| e.from == 1));
}
