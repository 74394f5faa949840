//! The twelve class representatives of non-degenerate constant Poisson
//! structures on II⊕ℝ (`p23 = 0`) and their group-level forms on the chart
//! `(x, y, z, s)`, stored as printed.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use super::{
    compat_matrix, poisson_automorphism_act, push_constant, rational_mul, rational_transpose,
    CompatMatrix, PoissonBivector,
};
use crate::error::Result;
use crate::geometry::{parse_components, Chart, MultivectorField};
use crate::liealgebra::{
    automorphism_families, catalog_algebra, catalog_vielbein,
};
use crate::symexpr::{integer, Context, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Table3Entry {
    pub index: usize,
    /// Constant matrix on `X1..X4`.
    pub algebra_level: Vec<Vec<Rational>>,
    pub group_printed: MultivectorField,
}

impl Table3Entry {
    /// Push of the algebra-level matrix through the II⊕ℝ vielbein.
    pub fn pushed(&self) -> Result<MultivectorField> {
        push_constant(&self.algebra_level, &catalog_vielbein("II+R")?)
    }

    pub fn group(&self) -> PoissonBivector {
        PoissonBivector::new(self.group_printed.clone()).expect("grade 2")
    }
}

const ROWS: &[(&str, &str)] = &[
    ("x,y: 1; z,s: 1; y,s: 1; x,s: 1", "x,y: 1; x,s: 1 - z; y,s: 1; z,s: 1"),
    ("x,y: 1; z,s: 1; x,z: 1", "x,y: 1; z,s: 1; x,z: 1"),
    ("x,y: 1; z,s: 1; y,s: 1", "x,y: 1; z,s: 1; y,s: 1; x,s: -z"),
    ("x,y: 1; z,s: 1; x,s: 1", "x,y: 1; z,s: 1; x,s: 1"),
    ("x,y: 1; z,s: 1; x,z: 1; x,s: 1", "x,y: 1; z,s: 1; x,z: 1; x,s: 1"),
    ("x,y: 1; z,s: 1", "x,y: 1; z,s: 1"),
    ("x,z: 1; y,s: 1", "x,z: 1; y,s: 1; x,s: -z"),
    ("x,y: 1; x,z: 1; y,s: 1", "x,y: 1; x,z: 1; y,s: 1; x,s: -z"),
    ("z,s: 1; x,z: 1; y,s: 1", "z,s: 1; x,z: 1; y,s: 1; x,s: -z"),
    ("x,z: 1; y,s: 1; x,s: 1", "x,z: 1; y,s: 1; x,s: 1 - z"),
    ("x,y: 1; x,z: 1; y,s: 1; x,s: 1", "x,y: 1; x,z: 1; y,s: 1; x,s: 1 - z"),
    ("z,s: 1; x,z: 1; y,s: 1; x,s: 1", "z,s: 1; x,z: 1; y,s: 1; x,s: 1 - z"),
];

pub fn table3_catalog() -> Vec<Table3Entry> {
    let names = ["x", "y", "z", "s"];
    let ctx = Context::with_coordinates(&names);
    let chart = Chart::from_names(&names).expect("chart");
    ROWS.iter()
        .enumerate()
        .map(|(i, (alg, grp))| {
            let alg = parse_components(alg, &chart, &ctx, 2).expect("catalog data");
            let algebra_level = alg
                .to_matrix()
                .expect("bivector")
                .iter()
                .map(|row| row.iter().map(|e| e.as_constant().expect("constant")).collect())
                .collect();
            Table3Entry {
                index: i + 1,
                algebra_level,
                group_printed: parse_components(grp, &chart, &ctx, 2).expect("catalog data"),
            }
        })
        .collect()
}

/// Pairwise compatibility of the twelve group-level structures.
pub fn table3_compat_matrix() -> Result<CompatMatrix> {
    let list: Vec<PoissonBivector> = table3_catalog().iter().map(Table3Entry::group).collect();
    compat_matrix(&list)
}

/// An automorphism `A` with `AᵗP′_from A = P′_to`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepresentativeEquivalence {
    pub from: usize,
    pub to: usize,
    pub automorphism: Vec<Vec<Rational>>,
}

/// Scans the II⊕ℝ automorphism family with integer parameters in
/// `[-bound, bound]` for maps sending `P′_1` to each other representative,
/// stopping once every target is reached. A missing target does not prove
/// inequivalence.
pub fn find_representative_equivalences(bound: i64) -> Result<Vec<RepresentativeEquivalence>> {
    let g = catalog_algebra("II+R").expect("catalog algebra");
    let reps = table3_catalog();
    let source = &reps[0];
    let mut found: BTreeMap<usize, Vec<Vec<Rational>>> = BTreeMap::new();
    let width = (2 * bound + 1) as usize;
    'families: for fam in automorphism_families("II+R") {
        let total = width.pow(fam.params.len() as u32);
        for code in 0..total {
            let mut rest = code;
            let values: BTreeMap<_, _> = fam
                .params
                .iter()
                .map(|p| {
                    let digit = (rest % width) as i64 - bound;
                    rest /= width;
                    (p.clone(), integer(digit))
                })
                .collect();
            // cheap singularity filter; witnesses are re-verified below
            let det = fam.determinant.instantiate(&values)?;
            if det.is_zero() {
                continue;
            }
            let a: Vec<Vec<Rational>> = fam
                .matrix
                .iter()
                .map(|row| {
                    row.iter()
                        .map(|e| e.instantiate(&values).map(|v| v.as_constant().expect("integer")))
                        .collect::<Result<_>>()
                })
                .collect::<Result<_>>()?;
            let image = rational_mul(&rational_mul(&rational_transpose(&a), &source.algebra_level), &a);
            if let Some(to) = reps[1..].iter().find(|r| r.algebra_level == image) {
                found.entry(to.index).or_insert(a);
                if found.len() == reps.len() - 1 {
                    break 'families;
                }
            }
        }
    }
    found
        .into_iter()
        .map(|(to, automorphism)| {
            poisson_automorphism_act(&g, &source.algebra_level, &automorphism)?;
            Ok(RepresentativeEquivalence {
                from: source.index,
                to,
                automorphism,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poisson::{check_poisson, pfaffian4};
    use num_traits::Zero;

    #[test]
    fn pushes_match_printed_forms() {
        for e in table3_catalog() {
            assert_eq!(e.pushed().unwrap(), e.group_printed, "P'{}", e.index);
            assert!(check_poisson(&e.group()).unwrap().passed());
            assert!(!e.group().pfaffian().unwrap().is_zero());
            assert!(!pfaffian4(&e.algebra_level).is_zero());
            assert!(e.algebra_level[1][2].is_zero());
        }
    }

    #[test]
    fn representatives_compatible_and_one_orbit() {
        assert!(table3_compat_matrix().unwrap().passed());
        let g = catalog_algebra("II+R").unwrap();
        let reps = table3_catalog();
        let eq = find_representative_equivalences(1).unwrap();
        assert_eq!(eq.iter().map(|e| e.to).collect::<Vec<_>>(), (2..=12).collect::<Vec<_>>());
        for e in &eq {
            let image =
                poisson_automorphism_act(&g, &reps[0].algebra_level, &e.automorphism).unwrap();
            assert_eq!(image, reps[e.to - 1].algebra_level);
        }
    }
}
