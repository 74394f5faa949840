//! Dense square matrices over [`Scalar`].

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::symexpr::{Rational, Scalar};

pub type Matrix = Vec<Vec<Scalar>>;

pub fn zeros(n: usize) -> Matrix {
    vec![vec![Scalar::zero(); n]; n]
}

pub fn identity(n: usize) -> Matrix {
    let mut m = zeros(n);
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = Scalar::one();
    }
    m
}

pub fn from_rational(m: &[Vec<Rational>]) -> Matrix {
    m.iter()
        .map(|r| r.iter().map(|c| Scalar::constant(c.clone())).collect())
        .collect()
}

pub fn transpose(m: &[Vec<Scalar>]) -> Matrix {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    (0..cols)
        .map(|j| (0..rows).map(|i| m[i][j].clone()).collect())
        .collect()
}

pub fn mul(a: &[Vec<Scalar>], b: &[Vec<Scalar>]) -> Matrix {
    let inner = b.len();
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| {
                    (0..inner)
                        .filter(|&k| !row[k].is_zero() && !b[k][j].is_zero())
                        .map(|k| &row[k] * &b[k][j])
                        .sum()
                })
                .collect()
        })
        .collect()
}

pub fn add(a: &[Vec<Scalar>], b: &[Vec<Scalar>]) -> Matrix {
    a.iter()
        .zip(b)
        .map(|(ra, rb)| ra.iter().zip(rb).map(|(x, y)| x + y).collect())
        .collect()
}

pub fn scale(a: &[Vec<Scalar>], f: &Scalar) -> Matrix {
    a.iter()
        .map(|r| r.iter().map(|x| x * f).collect())
        .collect()
}

pub fn is_zero(a: &[Vec<Scalar>]) -> bool {
    a.iter().all(|r| r.iter().all(Scalar::is_zero))
}

/// Determinant by cofactor expansion along the first row.
pub fn determinant(m: &[Vec<Scalar>]) -> Scalar {
    let cols: Vec<usize> = (0..m.len()).collect();
    det_rec(m, 0, &cols)
}

fn det_rec(m: &[Vec<Scalar>], row: usize, cols: &[usize]) -> Scalar {
    if cols.is_empty() {
        return Scalar::one();
    }
    let mut out = Scalar::zero();
    for (k, &c) in cols.iter().enumerate() {
        if m[row][c].is_zero() {
            continue;
        }
        let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
        let term = &m[row][c] * &det_rec(m, row + 1, &rest);
        if k % 2 == 0 {
            out += term;
        } else {
            out -= term;
        }
    }
    out
}

fn minor(m: &[Vec<Scalar>], skip_row: usize, skip_col: usize) -> Matrix {
    m.iter()
        .enumerate()
        .filter(|(i, _)| *i != skip_row)
        .map(|(_, r)| {
            r.iter()
                .enumerate()
                .filter(|(j, _)| *j != skip_col)
                .map(|(_, x)| x.clone())
                .collect()
        })
        .collect()
}

/// Exact inverse as adjugate over determinant; the determinant must be a unit
/// of the ring (a nonzero constant times an exponential).
pub fn inverse(m: &[Vec<Scalar>]) -> Result<Matrix> {
    let n = m.len();
    let det = determinant(m);
    if det.is_zero() {
        return Err(Error::NotInvertible(alloc::string::String::from(
            "determinant is zero",
        )));
    }
    let inv_det = det
        .try_inverse()
        .map_err(|_| Error::NotInvertible(alloc::format!("determinant {det} is not a unit")))?;
    let mut out = zeros(n);
    for i in 0..n {
        for j in 0..n {
            let c = determinant(&minor(m, j, i));
            let c = if (i + j) % 2 == 0 { c } else { -c };
            out[i][j] = &c * &inv_det;
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symexpr::{parse_scalar, Context};

    fn m(ctx: &Context, rows: &[&[&str]]) -> Matrix {
        rows.iter()
            .map(|r| r.iter().map(|t| parse_scalar(t, ctx).unwrap()).collect())
            .collect()
    }

    #[test]
    fn hyperbolic_rotation_inverse() {
        let ctx = Context::with_coordinates(&["z"]);
        let a = m(&ctx, &[&["cosh(z)", "-sinh(z)"], &["-sinh(z)", "cosh(z)"]]);
        assert_eq!(determinant(&a), Scalar::one());
        let inv = inverse(&a).unwrap();
        assert_eq!(mul(&a, &inv), identity(2));
        assert_eq!(inv, m(&ctx, &[&["cosh(z)", "sinh(z)"], &["sinh(z)", "cosh(z)"]]));
    }

    #[test]
    fn non_unit_determinant_rejected() {
        let ctx = Context::with_coordinates(&["z"]);
        let a = m(&ctx, &[&["z", "0"], &["0", "1"]]);
        assert!(matches!(inverse(&a), Err(Error::NotInvertible(_))));
        let s = m(&ctx, &[&["1", "1"], &["1", "1"]]);
        assert!(matches!(inverse(&s), Err(Error::NotInvertible(_))));
    }

    #[test]
    fn products() {
        let ctx = Context::with_coordinates(&["z"]);
        let a = m(&ctx, &[&["1", "z"], &["0", "1"]]);
        let b = m(&ctx, &[&["1", "-z"], &["0", "1"]]);
        assert_eq!(mul(&a, &b), identity(2));
        assert_eq!(transpose(&a), m(&ctx, &[&["1", "0"], &["z", "1"]]));
        assert_eq!(determinant(&identity(4)), Scalar::one());
    }
}
