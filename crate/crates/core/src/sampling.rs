//! Seeded random rational points and numeric Jacobian ranks.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::geometry::Chart;
use crate::liealgebra::{instantiate_automorphism, AutomorphismFamily, LieAlgebraDef};
use crate::symexpr::{rational, Rational, Scalar, Symbol};

pub const DEFAULT_SEED: u64 = 0x5eed_2024;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Rational with numerator in `[-9, 9]` and denominator in `[1, 5]`.
pub fn random_rational<R: Rng>(rng: &mut R) -> Rational {
    rational(rng.gen_range(-9..=9), rng.gen_range(1..=5))
}

pub fn random_nonzero_rational<R: Rng>(rng: &mut R) -> Rational {
    loop {
        let r = random_rational(rng);
        if r != Rational::from_integer(0.into()) {
            return r;
        }
    }
}

pub fn random_point<R: Rng>(rng: &mut R, symbols: &[Symbol]) -> BTreeMap<Symbol, Rational> {
    symbols
        .iter()
        .map(|s| (s.clone(), random_rational(rng)))
        .collect()
}

/// Random antisymmetric `n×n` rational matrix.
pub fn random_antisymmetric<R: Rng>(rng: &mut R, n: usize) -> Vec<Vec<Rational>> {
    let mut m = alloc::vec![alloc::vec![Rational::from_integer(0.into()); n]; n];
    for i in 0..n {
        for j in i + 1..n {
            m[i][j] = random_rational(rng);
            m[j][i] = -m[i][j].clone();
        }
    }
    m
}

/// Instantiates `fam` at random rational parameters until the result is an
/// automorphism of `g`.
pub fn random_automorphism<R: Rng>(
    rng: &mut R,
    g: &LieAlgebraDef,
    fam: &AutomorphismFamily,
) -> Vec<Vec<Rational>> {
    loop {
        let values = random_point(rng, &fam.params);
        if let Ok(a) = instantiate_automorphism(g, fam, &values) {
            return a;
        }
    }
}

/// Rank of a floating-point matrix by elimination with partial pivoting;
/// pivots below `1e-9` of the largest entry count as zero.
pub fn numeric_rank(mut m: Vec<Vec<f64>>) -> usize {
    let scale = m
        .iter()
        .flatten()
        .fold(0.0f64, |acc, v| if v.abs() > acc { v.abs() } else { acc });
    if scale == 0.0 || !scale.is_finite() {
        return 0;
    }
    let tol = scale * 1e-9;
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..m.len()).max_by(|&a, &b| {
            m[a][col].abs().partial_cmp(&m[b][col].abs()).expect("finite")
        }) else {
            break;
        };
        if m[pivot][col].abs() <= tol {
            continue;
        }
        m.swap(rank, pivot);
        for r in rank + 1..m.len() {
            let f = m[r][col] / m[rank][col];
            for c in col..cols {
                m[r][c] -= f * m[rank][c];
            }
        }
        rank += 1;
    }
    rank
}

/// Rank of the Jacobian `∂f_i/∂x^μ` at each point, evaluated in floating point.
pub fn jacobian_ranks(
    funcs: &[Scalar],
    chart: &Chart,
    points: &[BTreeMap<Symbol, Rational>],
) -> Result<Vec<usize>> {
    let grads = funcs
        .iter()
        .map(|f| {
            chart
                .coords()
                .iter()
                .map(|c| f.differentiate(c))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    points
        .iter()
        .map(|pt| {
            let rows = grads
                .iter()
                .map(|g| g.iter().map(|d| d.evaluate_f64_at(pt)).collect::<Result<Vec<_>>>())
                .collect::<Result<Vec<_>>>()?;
            Ok(numeric_rank(rows))
        })
        .collect()
}

/// `count` seeded random points over the chart coordinates.
pub fn chart_points(chart: &Chart, count: usize, seed: u64) -> Vec<BTreeMap<Symbol, Rational>> {
    let mut r = rng(seed);
    (0..count).map(|_| random_point(&mut r, chart.coords())).collect()
}
