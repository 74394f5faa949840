//! Poissonization of group-level Jacobi structures, Poisson and compatibility
//! checks, Darboux verification, and constant Poisson structures on a Lie
//! algebra under automorphisms.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::geometry::{pfaffian, poisson_bracket, schouten, Chart, MultivectorField};
use crate::jacobi::{check_algebra_jacobi, AlgebraJacobi, GroupJacobi};
use crate::liealgebra::{check_automorphism, LieAlgebraDef, Vielbein};
use crate::matrix::{self, Matrix};
use crate::residual::Residuals;
use crate::sampling::{chart_points, jacobian_ranks};
use crate::symexpr::{Rational, Scalar, Symbol};

pub mod families;
pub mod table3;
pub mod witness;

/// Grade-2 field on a chart that normally includes `s`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PoissonBivector {
    field: MultivectorField,
}

impl PoissonBivector {
    pub fn new(field: MultivectorField) -> Result<Self> {
        field.require_grade(2)?;
        Ok(PoissonBivector { field })
    }

    pub fn chart(&self) -> &Chart {
        self.field.chart()
    }

    pub fn field(&self) -> &MultivectorField {
        &self.field
    }

    pub fn bracket(&self, f: &Scalar, g: &Scalar) -> Result<Scalar> {
        poisson_bracket(f, g, &self.field)
    }

    pub fn pfaffian(&self) -> Result<Scalar> {
        pfaffian(&self.field)
    }
}

/// `P = e^{-s}(Λ + ∂s∧E)`: `P^{μν} = e^{-s}Λ^{μν}`, `P^{sμ} = e^{-s}E^μ`.
pub fn poissonize(j: &GroupJacobi) -> Result<PoissonBivector> {
    let s = Symbol::coordinate("s");
    let base = j.chart();
    if base.contains(&s) {
        return Err(Error::ChartHasCoordinate(String::from("s")));
    }
    let chart = base.extended(s.clone())?;
    let n = base.dim();
    let factor = Scalar::exp(&s, -1);
    let mut comps = Vec::new();
    for (idx, c) in j.lambda().components() {
        comps.push((idx.clone(), c * &factor));
    }
    for (idx, c) in j.e().components() {
        comps.push((vec![n, idx[0]], c * &factor));
    }
    PoissonBivector::new(MultivectorField::from_components(&chart, 2, comps)?)
}

fn index_label(chart: &Chart, idx: &[usize]) -> String {
    idx.iter()
        .map(|&i| String::from(chart.coord(i).name()))
        .collect::<Vec<_>>()
        .join(",")
}

fn bracket_residuals(tag: &str, field: &MultivectorField) -> Residuals {
    let mut out = Residuals::new();
    for (idx, c) in field.components() {
        out.push(format!("{tag}({})", index_label(field.chart(), idx)), c.clone());
    }
    out
}

/// Components of `[P,P]`.
pub fn check_poisson(p: &PoissonBivector) -> Result<Residuals> {
    Ok(bracket_residuals("[P,P]", &schouten(&p.field, &p.field)?))
}

/// Components of `[P,Q]`.
pub fn compat_pair(p: &PoissonBivector, q: &PoissonBivector) -> Result<Residuals> {
    if p.chart() != q.chart() {
        return Err(Error::ChartMismatch);
    }
    Ok(bracket_residuals("[P,Q]", &schouten(&p.field, &q.field)?))
}

/// Upper triangle of the symmetric matrix of `[P_i, P_j]`, diagonal included.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompatMatrix {
    entries: Vec<Vec<Residuals>>,
}

impl CompatMatrix {
    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, i: usize, j: usize) -> &Residuals {
        let (a, b) = if i <= j { (i, j) } else { (j, i) };
        &self.entries[a][b - a]
    }

    /// `(i, j, residuals)` for `i ≤ j`.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize, &Residuals)> {
        self.entries
            .iter()
            .enumerate()
            .flat_map(|(i, row)| row.iter().enumerate().map(move |(k, r)| (i, i + k, r)))
    }

    pub fn passed(&self) -> bool {
        self.pairs().all(|(_, _, r)| r.passed())
    }
}

pub fn compat_matrix(list: &[PoissonBivector]) -> Result<CompatMatrix> {
    let mut entries = Vec::with_capacity(list.len());
    for i in 0..list.len() {
        let mut row = Vec::with_capacity(list.len() - i);
        for j in i..list.len() {
            row.push(compat_pair(&list[i], &list[j])?);
        }
        entries.push(row);
    }
    Ok(CompatMatrix { entries })
}

/// Candidate canonical coordinates `(q_1..q_n, p_1..p_n)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DarbouxMap {
    pub qs: Vec<Scalar>,
    pub ps: Vec<Scalar>,
}

impl DarbouxMap {
    pub fn new(qs: Vec<Scalar>, ps: Vec<Scalar>) -> Self {
        DarbouxMap { qs, ps }
    }

    pub fn functions(&self) -> Vec<Scalar> {
        self.qs.iter().chain(&self.ps).cloned().collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DarbouxReport {
    pub brackets: Residuals,
    /// Jacobian rank of `(q, p)` at each sampled point.
    pub ranks: Vec<usize>,
    pub expected_rank: usize,
}

impl DarbouxReport {
    pub fn passed(&self) -> bool {
        self.brackets.passed() && self.ranks.iter().all(|&r| r == self.expected_rank)
    }
}

/// Canonical brackets exactly, then the Jacobian rank at three seeded points.
pub fn verify_darboux(m: &DarbouxMap, p: &PoissonBivector, seed: u64) -> Result<DarbouxReport> {
    let dim = p.chart().dim();
    if m.qs.len() != m.ps.len() || m.qs.len() + m.ps.len() != dim {
        return Err(Error::WrongFunctionCount {
            expected: dim,
            found: m.qs.len() + m.ps.len(),
        });
    }
    let n = m.qs.len();
    let mut brackets = Residuals::new();
    for i in 0..n {
        for j in i + 1..n {
            brackets.push(format!("{{q{},q{}}}", i + 1, j + 1), p.bracket(&m.qs[i], &m.qs[j])?);
            brackets.push(format!("{{p{},p{}}}", i + 1, j + 1), p.bracket(&m.ps[i], &m.ps[j])?);
        }
        for j in 0..n {
            let delta = if i == j { Scalar::one() } else { Scalar::zero() };
            let label = if i == j {
                format!("{{q{},p{}}}-1", i + 1, j + 1)
            } else {
                format!("{{q{},p{}}}", i + 1, j + 1)
            };
            brackets.push(label, p.bracket(&m.qs[i], &m.ps[j])? - delta);
        }
    }
    let points = chart_points(p.chart(), 3, seed);
    let ranks = jacobian_ranks(&m.functions(), p.chart(), &points)?;
    Ok(DarbouxReport {
        brackets,
        ranks,
        expected_rank: dim,
    })
}

/// Constant antisymmetric bivector with one parameter `p_ij` per `i < j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstantPoissonAnsatz {
    algebra: LieAlgebraDef,
    params: Vec<Symbol>,
    entries: Matrix,
}

impl ConstantPoissonAnsatz {
    pub fn new(algebra: LieAlgebraDef) -> Self {
        let n = algebra.dim();
        let mut entries = matrix::zeros(n);
        let mut params = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let p = Symbol::parameter(&format!("p{}{}", i + 1, j + 1));
                entries[i][j] = Scalar::var(&p);
                entries[j][i] = -Scalar::var(&p);
                params.push(p);
            }
        }
        ConstantPoissonAnsatz {
            algebra,
            params,
            entries,
        }
    }

    pub fn algebra(&self) -> &LieAlgebraDef {
        &self.algebra
    }

    pub fn params(&self) -> &[Symbol] {
        &self.params
    }

    /// `p_ij` for 0-based `i < j`.
    pub fn param(&self, i: usize, j: usize) -> &Symbol {
        let n = self.algebra.dim();
        let offset: usize = (0..i).map(|r| n - 1 - r).sum();
        &self.params[offset + j - i - 1]
    }

    pub fn entries(&self) -> &Matrix {
        &self.entries
    }

    pub fn instantiate(&self, values: &BTreeMap<Symbol, Rational>) -> Result<Vec<Vec<Rational>>> {
        self.entries
            .iter()
            .map(|row| {
                row.iter()
                    .map(|e| {
                        let v = e.instantiate(values)?;
                        v.as_constant().ok_or(Error::NotRational(format!("{v}")))
                    })
                    .collect()
            })
            .collect()
    }

    /// Values assigning the upper triangle of `m`.
    pub fn assignment(&self, m: &[Vec<Rational>]) -> BTreeMap<Symbol, Rational> {
        let n = self.algebra.dim();
        let mut out = BTreeMap::new();
        for i in 0..n {
            for j in i + 1..n {
                out.insert(self.param(i, j).clone(), m[i][j].clone());
            }
        }
        out
    }
}

/// Distinct nonzero entries (up to sign) of the algebra-level equation with
/// `E = 0`: `P^{ce}(χ_cᵗP) + P𝒴^eP + (Pχ_b)P^{be} = 0`.
pub fn generate_constant_constraints(a: &ConstantPoissonAnsatz) -> Vec<Scalar> {
    let n = a.algebra.dim();
    let j = AlgebraJacobi::new(a.algebra.clone(), a.entries.clone(), vec![Scalar::zero(); n])
        .expect("parameter entries are coordinate-free");
    let mut out: Vec<Scalar> = Vec::new();
    for r in check_algebra_jacobi(&j).iter() {
        let neg = -r.value.clone();
        if !out.iter().any(|c| *c == r.value || *c == neg) {
            out.push(r.value.clone());
        }
    }
    out
}

/// Evaluates every constraint at a rational matrix.
pub fn constraints_hold(
    a: &ConstantPoissonAnsatz,
    constraints: &[Scalar],
    m: &[Vec<Rational>],
) -> Result<bool> {
    let values = a.assignment(m);
    for c in constraints {
        if !c.instantiate(&values)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

fn rational_mul(a: &[Vec<Rational>], b: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let n = a.len();
    let m = b.first().map_or(0, Vec::len);
    (0..n)
        .map(|i| {
            (0..m)
                .map(|j| {
                    (0..b.len()).fold(Rational::zero(), |acc, k| acc + &a[i][k] * &b[k][j])
                })
                .collect()
        })
        .collect()
}

fn rational_transpose(a: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let n = a.first().map_or(0, Vec::len);
    (0..n).map(|j| a.iter().map(|r| r[j].clone()).collect()).collect()
}

/// `P′ = AᵗPA` for an automorphism `A` of `g` (rows are images).
pub fn poisson_automorphism_act(
    g: &LieAlgebraDef,
    p: &[Vec<Rational>],
    a: &[Vec<Rational>],
) -> Result<Vec<Vec<Rational>>> {
    check_automorphism(g, a)?;
    Ok(rational_mul(&rational_mul(&rational_transpose(a), p), a))
}

pub fn rational_determinant(a: &[Vec<Rational>]) -> Rational {
    matrix::determinant(&matrix::from_rational(a))
        .as_constant()
        .expect("constant matrix")
}

/// Pfaffian of a constant 4×4 antisymmetric matrix.
pub fn pfaffian4(p: &[Vec<Rational>]) -> Rational {
    &p[0][1] * &p[2][3] - &p[0][2] * &p[1][3] + &p[0][3] * &p[1][2]
}

/// Free parameters of the class-(1) normalizing automorphism.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Class1Params {
    pub a21: Rational,
    pub a24: Rational,
    pub a31: Rational,
    pub a32: Rational,
}

/// Automorphism of II⊕ℝ taking a constant Poisson structure with `p23 = 0`,
/// `p24 ≠ 0` and `p12 p34 − p13 p24 ≠ 0` to
/// `∂x∧∂y + ∂z∧∂s + ∂y∧∂s + ∂x∧∂s`.
pub fn class1_automorphism(p: &[Vec<Rational>], f: &Class1Params) -> Result<Vec<Vec<Rational>>> {
    let (p12, p13, p14, p24, p34) = (&p[0][1], &p[0][2], &p[0][3], &p[1][3], &p[2][3]);
    let d = p12 * p34 - p13 * p24;
    if d.is_zero() || p24.is_zero() || f.a32.is_zero() {
        return Err(Error::NotInvertible(String::from(
            "class (1) needs p24, a32 and p12*p34 - p13*p24 nonzero",
        )));
    }
    let a32 = &f.a32;
    let a32_2 = a32 * a32;
    let a32_3 = &a32_2 * a32;
    let zero = Rational::zero();
    let a11 = -(p24 / (a32 * &d));
    let a22 = (-(&a32_3 * p12 * p34 * p34) + &a32_3 * p13 * p24 * p34 + p24 * p24)
        / (p24 * &a32_2 * &d);
    let a23 = p24 / (&a32_2 * &d);
    let a34 = -(((&d * (&f.a21 * p24 + &f.a31 * p34)) * &a32_2 - a32 * p14 * p24 - p24 * p24)
        * a32)
        / (p24 * p24);
    let a41 = -(p12 / (a32 * &d));
    let a44 = &a32_2 * &d / (p24 * p24);
    Ok(vec![
        vec![a11, zero.clone(), zero.clone(), zero.clone()],
        vec![f.a21.clone(), a22, a23, f.a24.clone()],
        vec![f.a31.clone(), a32.clone(), zero.clone(), a34],
        vec![a41, zero.clone(), zero, a44],
    ])
}

/// Constant bivector `p12, p13, p14, p23, p24, p34` as a 4×4 matrix.
pub fn constant_matrix4(upper: [i64; 6]) -> Vec<Vec<Rational>> {
    let mut m = vec![vec![Rational::zero(); 4]; 4];
    let pairs = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
    for ((i, j), v) in pairs.into_iter().zip(upper) {
        m[i][j] = Rational::from_integer(v.into());
        m[j][i] = -m[i][j].clone();
    }
    m
}

/// Class-(1) target `(p12, p34, p13, p24, p14) = (1, 1, 0, 1, 1)`.
pub fn class1_representative() -> Vec<Vec<Rational>> {
    constant_matrix4([1, 0, 1, 0, 1, 1])
}

/// Constant algebra-level bivector pushed to the group: `Fᵀ P F`.
pub fn push_constant(p: &[Vec<Rational>], v: &Vielbein) -> Result<MultivectorField> {
    let fr = v.frame();
    if fr.len() != p.len() {
        return Err(Error::DimensionMismatch {
            expected: fr.len(),
            found: p.len(),
        });
    }
    let m = matrix::mul(&matrix::mul(&matrix::transpose(fr), &matrix::from_rational(p)), fr);
    MultivectorField::bivector_from_matrix(v.chart(), &m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::jacobi::table1::table1_catalog;
    use crate::liealgebra::catalog_algebra;
    use num_traits::One;
    use crate::symexpr::{parse_scalar, rational, Context};

    fn ctx() -> Context {
        Context::with_coordinates(&["x", "y", "z", "s"])
    }

    #[test]
    fn poissonize_ii_first_entry() {
        let row = &table1_catalog()[0];
        let p = poissonize(&row.entries[0].group()).unwrap();
        let c = ctx();
        assert_eq!(p.field().component(&[0, 2]), parse_scalar("-z*exp(-s)", &c).unwrap());
        assert_eq!(p.field().component(&[0, 3]), parse_scalar("exp(-s)", &c).unwrap());
        assert_eq!(p.field().component(&[1, 2]), parse_scalar("exp(-s)", &c).unwrap());
        assert_eq!(p.field().components().count(), 3);
        assert_eq!(p.pfaffian().unwrap(), parse_scalar("exp(-2*s)", &c).unwrap());
        assert!(check_poisson(&p).unwrap().passed());
    }

    #[test]
    fn poissonize_rejects_s() {
        let chart = Chart::from_names(&["x", "s"]).unwrap();
        let j = GroupJacobi::new(
            MultivectorField::zero(&chart, 2).unwrap(),
            MultivectorField::zero(&chart, 1).unwrap(),
        )
        .unwrap();
        assert!(matches!(poissonize(&j), Err(Error::ChartHasCoordinate(_))));
    }

    #[test]
    fn perturbed_poisson_fails() {
        let c = ctx();
        let chart = Chart::from_names(&["x", "y", "z", "s"]).unwrap();
        let p = MultivectorField::bivector(
            &chart,
            &[
                (0, 2, parse_scalar("-z*exp(-s)", &c).unwrap()),
                (0, 3, parse_scalar("exp(s)", &c).unwrap()),
                (1, 2, parse_scalar("exp(-s)", &c).unwrap()),
            ],
        )
        .unwrap();
        assert!(!check_poisson(&PoissonBivector::new(p).unwrap()).unwrap().passed());
    }

    #[test]
    fn darboux_identity_and_count() {
        let c = ctx();
        let chart = Chart::from_names(&["x", "y", "z", "s"]).unwrap();
        let p = PoissonBivector::new(
            MultivectorField::bivector(&chart, &[(0, 2, Scalar::one()), (1, 3, Scalar::one())])
                .unwrap(),
        )
        .unwrap();
        let v = |t| parse_scalar(t, &c).unwrap();
        let m = DarbouxMap::new(vec![v("x"), v("y")], vec![v("z"), v("s")]);
        assert!(verify_darboux(&m, &p, 1).unwrap().passed());
        let short = DarbouxMap::new(vec![v("x")], vec![v("z")]);
        assert!(matches!(
            verify_darboux(&short, &p, 1),
            Err(Error::WrongFunctionCount { .. })
        ));
        let degenerate = DarbouxMap::new(vec![v("x"), v("y")], vec![v("z"), v("z")]);
        assert!(!verify_darboux(&degenerate, &p, 1).unwrap().passed());
    }

    #[test]
    fn ii_plus_r_constraints() {
        let ans = ConstantPoissonAnsatz::new(catalog_algebra("II+R").unwrap());
        let cons = generate_constant_constraints(&ans);
        assert!(!cons.is_empty());
        let p23 = ans.param(1, 2).clone();
        let mut zero = BTreeMap::new();
        zero.insert(p23.clone(), Rational::zero());
        for c in &cons {
            assert!(c.instantiate(&zero).unwrap().is_zero(), "{c}");
            assert!(c.symbols().contains(&p23));
        }
        let abelian = ConstantPoissonAnsatz::new(LieAlgebraDef::abelian(4));
        assert!(generate_constant_constraints(&abelian).is_empty());
    }

    #[test]
    fn class1_maps_to_representative() {
        let g = catalog_algebra("II+R").unwrap();
        let p = constant_matrix4([2, 3, -1, 0, 5, 7]);
        let f = Class1Params {
            a21: rational(1, 2),
            a24: rational(-3, 1),
            a31: rational(2, 3),
            a32: rational(3, 2),
        };
        let a = class1_automorphism(&p, &f).unwrap();
        let image = poisson_automorphism_act(&g, &p, &a).unwrap();
        assert_eq!(image, class1_representative());
        let d = &p[0][1] * &p[2][3] - &p[0][2] * &p[1][3];
        assert_eq!(rational_determinant(&a), Rational::one() / d);
        assert_eq!(pfaffian4(&image), rational_determinant(&a) * pfaffian4(&p));
    }

    #[test]
    fn identity_action() {
        let g = catalog_algebra("II+R").unwrap();
        let p = constant_matrix4([1, 2, 3, 0, 4, 5]);
        let id: Vec<Vec<Rational>> = (0..4)
            .map(|i| (0..4).map(|j| if i == j { Rational::one() } else { Rational::zero() }).collect())
            .collect();
        assert_eq!(poisson_automorphism_act(&g, &p, &id).unwrap(), p);
    }
}
