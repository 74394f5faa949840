//! Jacobi structures `(Λ, E)` on a Lie algebra (constant matrices) and on the
//! group (fields), the equations they satisfy, the push between the two
//! levels, and equivalence under automorphisms.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::geometry::{schouten, wedge, Chart, MultivectorField};
use crate::liealgebra::{
    automorphism_families, check_automorphism, instantiate_automorphism, LieAlgebraDef, Vielbein,
};
use crate::matrix::{self, Matrix};
use crate::residual::Residuals;
use crate::symexpr::{integer, Rational, Scalar, Symbol};

/// `Λ = ½ Λ^{ab} X_a ∧ X_b`, `E = E^a X_a` with coordinate-free entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraJacobi {
    algebra: LieAlgebraDef,
    lambda: Matrix,
    e: Vec<Scalar>,
}

impl AlgebraJacobi {
    pub fn new(algebra: LieAlgebraDef, lambda: Matrix, e: Vec<Scalar>) -> Result<Self> {
        let n = algebra.dim();
        if lambda.len() != n || lambda.iter().any(|r| r.len() != n) || e.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: lambda.len().max(e.len()),
            });
        }
        for i in 0..n {
            for j in i..n {
                if lambda[i][j] != -&lambda[j][i] {
                    return Err(Error::NotAntisymmetric(i, j));
                }
            }
        }
        if let Some(bad) = lambda
            .iter()
            .flatten()
            .chain(e.iter())
            .find(|c| !c.is_coordinate_free())
        {
            return Err(Error::InvalidChart(format!(
                "algebra-level entry `{bad}` depends on a coordinate"
            )));
        }
        Ok(AlgebraJacobi { algebra, lambda, e })
    }

    /// From upper-triangular entries `(a, b, Λ^{ab})`, 0-based.
    pub fn from_entries(
        algebra: LieAlgebraDef,
        entries: &[(usize, usize, Scalar)],
        e: Vec<Scalar>,
    ) -> Result<Self> {
        let n = algebra.dim();
        let mut m = matrix::zeros(n);
        for (a, b, c) in entries {
            if *a >= n || *b >= n {
                return Err(Error::IndexOutOfRange((*a).max(*b)));
            }
            m[*a][*b] += c.clone();
            m[*b][*a] -= c.clone();
        }
        AlgebraJacobi::new(algebra, m, e)
    }

    pub fn algebra(&self) -> &LieAlgebraDef {
        &self.algebra
    }

    pub fn lambda(&self) -> &Matrix {
        &self.lambda
    }

    pub fn e(&self) -> &[Scalar] {
        &self.e
    }

    /// Replaces parameters by rational values.
    pub fn instantiate(&self, values: &BTreeMap<Symbol, Rational>) -> Result<AlgebraJacobi> {
        let lambda = self
            .lambda
            .iter()
            .map(|r| r.iter().map(|c| c.instantiate(values)).collect())
            .collect::<Result<_>>()?;
        let e = self
            .e
            .iter()
            .map(|c| c.instantiate(values))
            .collect::<Result<_>>()?;
        Ok(AlgebraJacobi {
            algebra: self.algebra.clone(),
            lambda,
            e,
        })
    }
}

/// Group-level bivector and vector field on a common chart.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupJacobi {
    lambda: MultivectorField,
    e: MultivectorField,
}

impl GroupJacobi {
    pub fn new(lambda: MultivectorField, e: MultivectorField) -> Result<Self> {
        lambda.require_grade(2)?;
        e.require_grade(1)?;
        if lambda.chart() != e.chart() {
            return Err(Error::ChartMismatch);
        }
        Ok(GroupJacobi { lambda, e })
    }

    pub fn chart(&self) -> &Chart {
        self.lambda.chart()
    }

    pub fn lambda(&self) -> &MultivectorField {
        &self.lambda
    }

    pub fn e(&self) -> &MultivectorField {
        &self.e
    }
}

/// Matrix form of the algebra-level equations:
/// `−(Λ^{ce} χ_cᵗΛ + Λ𝒴^eΛ + (Λχ_b)Λ^{be} + E^eΛ)_{fh} + E^fΛ^{eh} + Λ^{fe}E^h`
/// for every `(e, f, h)`, and `Σ_a (Λχ_a − (Λχ_a)ᵗ) E^a`.
pub fn check_algebra_jacobi(j: &AlgebraJacobi) -> Residuals {
    let n = j.algebra.dim();
    let reps = j.algebra.adjoint_reps();
    let lam = &j.lambda;
    let chi: Vec<Matrix> = (0..n).map(|a| reps.chi_matrix(a)).collect();
    let lam_chi: Vec<Matrix> = chi.iter().map(|c| matrix::mul(lam, c)).collect();
    let chit_lam: Vec<Matrix> = chi
        .iter()
        .map(|c| matrix::mul(&matrix::transpose(c), lam))
        .collect();
    let mut out = Residuals::new();
    for e in 0..n {
        let mut m = matrix::mul(&matrix::mul(lam, &reps.y_matrix(e)), lam);
        for c in 0..n {
            if !lam[c][e].is_zero() {
                let both = matrix::add(&chit_lam[c], &lam_chi[c]);
                m = matrix::add(&m, &matrix::scale(&both, &lam[c][e]));
            }
        }
        m = matrix::add(&m, &matrix::scale(lam, &j.e[e]));
        for f in 0..n {
            for h in 0..n {
                let r = -&m[f][h] + &j.e[f] * &lam[e][h] + &lam[f][e] * &j.e[h];
                out.push(format!("jacobi[e={},f={},h={}]", e + 1, f + 1, h + 1), r);
            }
        }
    }
    let mut reeb = matrix::zeros(n);
    for a in 0..n {
        if j.e[a].is_zero() {
            continue;
        }
        let anti = matrix::add(
            &lam_chi[a],
            &matrix::scale(&matrix::transpose(&lam_chi[a]), &Scalar::int(-1)),
        );
        reeb = matrix::add(&reeb, &matrix::scale(&anti, &j.e[a]));
    }
    for (d, row) in reeb.iter().enumerate() {
        for (e, v) in row.iter().enumerate() {
            out.push(format!("reeb[{},{}]", d + 1, e + 1), v.clone());
        }
    }
    out
}

/// Tensor form of the same equations, written with structure constants.
pub fn check_algebra_jacobi_tensor(j: &AlgebraJacobi) -> Residuals {
    let g = &j.algebra;
    let n = g.dim();
    let lam = &j.lambda;
    let ev = &j.e;
    let f = |a: usize, b: usize, c: usize| g.structure_constant(a, b, c);
    let mut out = Residuals::new();
    for e in 0..n {
        for ff in 0..n {
            for h in 0..n {
                let mut r = &ev[ff] * &lam[e][h] + &ev[e] * &lam[h][ff] + &ev[h] * &lam[ff][e];
                for b in 0..n {
                    for c in 0..n {
                        let k1 = f(b, c, ff);
                        if !num_traits::Zero::is_zero(&k1) {
                            r += (&lam[h][b] * &lam[c][e]).scale(&k1);
                        }
                        let k2 = f(b, c, e);
                        if !num_traits::Zero::is_zero(&k2) {
                            r += (&lam[h][b] * &lam[ff][c]).scale(&k2);
                        }
                        let k3 = f(b, c, h);
                        if !num_traits::Zero::is_zero(&k3) {
                            r += (&lam[e][b] * &lam[c][ff]).scale(&k3);
                        }
                    }
                }
                out.push(format!("tensor[e={},f={},h={}]", e + 1, ff + 1, h + 1), r);
            }
        }
    }
    for d in 0..n {
        for e in 0..n {
            let mut r = Scalar::zero();
            for a in 0..n {
                if ev[a].is_zero() {
                    continue;
                }
                for c in 0..n {
                    let k1 = f(a, c, d);
                    if !num_traits::Zero::is_zero(&k1) {
                        r += (&ev[a] * &lam[c][e]).scale(&k1);
                    }
                    let k2 = f(a, c, e);
                    if !num_traits::Zero::is_zero(&k2) {
                        r += (&ev[a] * &lam[d][c]).scale(&k2);
                    }
                }
            }
            out.push(format!("tensor_reeb[{},{}]", d + 1, e + 1), r);
        }
    }
    out
}

/// `[Λ,Λ] − 2E∧Λ` and `[E,Λ]`, component by component.
pub fn check_group_jacobi(j: &GroupJacobi) -> Result<Residuals> {
    let ll = schouten(&j.lambda, &j.lambda)?;
    let el = wedge(&j.e, &j.lambda)?.scale(&Scalar::int(2));
    let first = ll.sub(&el)?;
    let second = schouten(&j.e, &j.lambda)?;
    let chart = j.chart();
    let name = |idx: &[usize]| {
        idx.iter()
            .map(|&i| String::from(chart.coord(i).name()))
            .collect::<Vec<_>>()
            .join(",")
    };
    let mut out = Residuals::new();
    for (idx, c) in first.components() {
        out.push(format!("[L,L]-2E^L({})", name(idx)), c.clone());
    }
    for (idx, c) in second.components() {
        out.push(format!("[E,L]({})", name(idx)), c.clone());
    }
    Ok(out)
}

/// `𝚲^{μν} = e_a^μ e_b^ν Λ^{ab}`, `𝐄^μ = e_a^μ E^a`.
pub fn push_to_group(j: &AlgebraJacobi, v: &Vielbein) -> Result<GroupJacobi> {
    let n = j.algebra.dim();
    if v.dim() != n {
        return Err(Error::VielbeinMismatch(format!(
            "vielbein of dimension {} for algebra {} of dimension {n}",
            v.dim(),
            j.algebra.name()
        )));
    }
    let fr = v.frame();
    let lam = matrix::mul(&matrix::mul(&matrix::transpose(fr), &j.lambda), fr);
    let e: Vec<Scalar> = (0..n)
        .map(|mu| (0..n).map(|a| &fr[a][mu] * &j.e[a]).sum())
        .collect();
    GroupJacobi::new(
        MultivectorField::bivector_from_matrix(v.chart(), &lam)?,
        MultivectorField::vector(v.chart(), e)?,
    )
}

/// `Λ′ = AᵗΛA`, `E′^e = E^b A_b^e` for an automorphism `A` (rows are images).
pub fn automorphism_act(j: &AlgebraJacobi, a: &[Vec<Rational>]) -> Result<AlgebraJacobi> {
    check_automorphism(&j.algebra, a)?;
    let am = matrix::from_rational(a);
    let lambda = matrix::mul(&matrix::mul(&matrix::transpose(&am), &j.lambda), &am);
    let n = j.algebra.dim();
    let e = (0..n)
        .map(|col| (0..n).map(|b| &j.e[b] * &am[b][col]).sum())
        .collect();
    Ok(AlgebraJacobi {
        algebra: j.algebra.clone(),
        lambda,
        e,
    })
}

/// Outcome of the bounded equivalence search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EquivalenceSearch {
    Found(Vec<Vec<Rational>>),
    NotFoundWithinBound(i64),
}

/// Searches the catalog automorphism families with integer parameters in
/// `[-bound, bound]` for `A` with `A·from = to`. A miss says nothing about
/// inequivalence.
pub fn find_equivalence(
    from: &AlgebraJacobi,
    to: &AlgebraJacobi,
    bound: i64,
) -> Result<EquivalenceSearch> {
    let g = &from.algebra;
    for fam in automorphism_families(g.name()) {
        let k = fam.params.len();
        let width = (2 * bound + 1) as usize;
        let total = width.checked_pow(k as u32).unwrap_or(usize::MAX);
        for code in 0..total {
            let mut rest = code;
            let mut values = BTreeMap::new();
            for p in &fam.params {
                let digit = (rest % width) as i64 - bound;
                rest /= width;
                values.insert(p.clone(), integer(digit));
            }
            let Ok(a) = instantiate_automorphism(g, &fam, &values) else {
                continue;
            };
            let image = automorphism_act(from, &a)?;
            if image.lambda == to.lambda && image.e == to.e {
                return Ok(EquivalenceSearch::Found(a));
            }
        }
    }
    Ok(EquivalenceSearch::NotFoundWithinBound(bound))
}

pub mod table1;

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liealgebra::{catalog_algebra, catalog_vielbein};
    use crate::symexpr::{parse_scalar, Context};

    fn ii_rep(entries: &[(usize, usize)]) -> AlgebraJacobi {
        AlgebraJacobi::from_entries(
            catalog_algebra("II").unwrap(),
            &entries
                .iter()
                .map(|&(a, b)| (a, b, Scalar::one()))
                .collect::<Vec<_>>(),
            vec![Scalar::int(-1), Scalar::zero(), Scalar::zero()],
        )
        .unwrap()
    }

    #[test]
    fn ii_general_family_symbolic() {
        let mut ctx = Context::new();
        let l: Vec<Scalar> = ["l12", "l13", "l23"]
            .iter()
            .map(|n| Scalar::var(&ctx.parameter(n).unwrap()))
            .collect();
        let j = AlgebraJacobi::from_entries(
            catalog_algebra("II").unwrap(),
            &[(0, 1, l[0].clone()), (0, 2, l[1].clone()), (1, 2, l[2].clone())],
            vec![-l[2].clone(), Scalar::zero(), Scalar::zero()],
        )
        .unwrap();
        assert!(check_algebra_jacobi(&j).passed());
        assert!(check_algebra_jacobi_tensor(&j).passed());
    }

    #[test]
    fn reeb_field_is_forced() {
        let mut j = ii_rep(&[(1, 2)]);
        j.e = vec![Scalar::zero(); 3];
        assert!(!check_algebra_jacobi(&j).passed());
        assert!(!check_algebra_jacobi_tensor(&j).passed());
        let zero = AlgebraJacobi::new(
            catalog_algebra("II").unwrap(),
            matrix::zeros(3),
            vec![Scalar::zero(); 3],
        )
        .unwrap();
        assert!(check_algebra_jacobi(&zero).passed());
    }

    #[test]
    fn push_ii_rep() {
        let g = push_to_group(&ii_rep(&[(1, 2)]), &catalog_vielbein("II").unwrap()).unwrap();
        let ctx = Context::with_coordinates(&["x", "y", "z"]);
        assert_eq!(g.lambda().component(&[0, 2]), parse_scalar("-z", &ctx).unwrap());
        assert_eq!(g.lambda().component(&[1, 2]), Scalar::one());
        assert_eq!(g.lambda().components().count(), 2);
        assert_eq!(g.e().component(&[0]), Scalar::int(-1));
        assert!(check_group_jacobi(&g).unwrap().passed());

        let flipped = GroupJacobi::new(g.lambda().clone(), g.e().scale(&Scalar::int(-1))).unwrap();
        assert!(!check_group_jacobi(&flipped).unwrap().passed());
    }

    #[test]
    fn identity_vielbein_keeps_components() {
        let j = ii_rep(&[(0, 1), (1, 2)]);
        let ch = Chart::from_names(&["x", "y", "z"]).unwrap();
        let g = push_to_group(&j, &Vielbein::identity(&ch)).unwrap();
        assert_eq!(g.lambda().to_matrix().unwrap(), *j.lambda());
    }

    #[test]
    fn coordinate_dependent_entries_rejected() {
        let ctx = Context::with_coordinates(&["z"]);
        let err = AlgebraJacobi::from_entries(
            catalog_algebra("II").unwrap(),
            &[(1, 2, parse_scalar("z", &ctx).unwrap())],
            vec![Scalar::zero(); 3],
        );
        assert!(matches!(err, Err(Error::InvalidChart(_))));
    }

    #[test]
    fn automorphism_identity_and_search() {
        let a = ii_rep(&[(1, 2)]);
        let id: Vec<Vec<Rational>> = (0..3)
            .map(|i| (0..3).map(|j| integer(i64::from(i == j))).collect())
            .collect();
        assert_eq!(automorphism_act(&a, &id).unwrap(), a);
        let b = ii_rep(&[(0, 2), (1, 2)]);
        match find_equivalence(&a, &b, 1).unwrap() {
            EquivalenceSearch::Found(m) => {
                let image = automorphism_act(&a, &m).unwrap();
                assert_eq!(image, b);
            }
            other => panic!("{other:?}"),
        }
    }
}
