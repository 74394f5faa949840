//! Lie algebras by structure constants, their adjoint representations,
//! automorphism families, and vielbeins on the corresponding groups.
//!
//! Generators are 0-based internally and printed as `X1, X2, …`. An
//! automorphism matrix lists images by row: `φ(X_a) = Σ_e A[a][e] X_e`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::geometry::{lie_bracket, Chart, MultivectorField};
use crate::matrix::{self, Matrix};
use crate::residual::Residuals;
use crate::symexpr::{integer, parse_scalar, Context, Rational, Scalar, Symbol};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieAlgebraDef {
    name: String,
    dim: usize,
    // (a, b, c) with a < b
    f: BTreeMap<(usize, usize, usize), Rational>,
}

impl LieAlgebraDef {
    /// `brackets` lists `[X_a, X_b] = Σ c X_k` as `(a, b, [(k, c)])`, 0-based.
    /// Fails on a repeated or out-of-range pair, or when the Jacobi identity fails.
    pub fn new(
        name: &str,
        dim: usize,
        brackets: &[(usize, usize, Vec<(usize, Rational)>)],
    ) -> Result<Self> {
        let mut f = BTreeMap::new();
        let mut seen = Vec::new();
        for (a, b, rhs) in brackets {
            let (a, b) = (*a, *b);
            if a == b || a >= dim || b >= dim || seen.contains(&(a.min(b), a.max(b))) {
                return Err(Error::DuplicateBracket(a + 1, b + 1));
            }
            seen.push((a.min(b), a.max(b)));
            for (k, c) in rhs {
                if *k >= dim {
                    return Err(Error::IndexOutOfRange(*k));
                }
                if c.is_zero() {
                    continue;
                }
                let (key, val) = if a < b {
                    ((a, b, *k), c.clone())
                } else {
                    ((b, a, *k), -c.clone())
                };
                *f.entry(key).or_insert_with(Rational::zero) += val;
            }
        }
        f.retain(|_, v| !v.is_zero());
        let g = LieAlgebraDef {
            name: name.to_string(),
            dim,
            f,
        };
        g.check_jacobi_identity()?;
        Ok(g)
    }

    fn from_table(name: &str, dim: usize, table: &[(usize, usize, &[(usize, i64)])]) -> Self {
        let brackets: Vec<_> = table
            .iter()
            .map(|(a, b, rhs)| {
                (
                    a - 1,
                    b - 1,
                    rhs.iter().map(|(k, c)| (k - 1, integer(*c))).collect(),
                )
            })
            .collect();
        LieAlgebraDef::new(name, dim, &brackets).expect("catalog algebra")
    }

    pub fn abelian(dim: usize) -> Self {
        LieAlgebraDef {
            name: format!("R{dim}"),
            dim,
            f: BTreeMap::new(),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// `f_{ab}^c` for any ordering of `a, b`.
    pub fn structure_constant(&self, a: usize, b: usize, c: usize) -> Rational {
        use core::cmp::Ordering;
        match a.cmp(&b) {
            Ordering::Equal => Rational::zero(),
            Ordering::Less => self.f.get(&(a, b, c)).cloned().unwrap_or_else(Rational::zero),
            Ordering::Greater => -self.f.get(&(b, a, c)).cloned().unwrap_or_else(Rational::zero),
        }
    }

    /// Nonzero `f_{ab}^c` with `a < b`.
    pub fn nonzero_constants(&self) -> impl Iterator<Item = (usize, usize, usize, &Rational)> {
        self.f.iter().map(|(&(a, b, c), v)| (a, b, c, v))
    }

    pub fn is_abelian(&self) -> bool {
        self.f.is_empty()
    }

    /// `Σ f_{ab}^d f_{dc}^e` + cyclic in `(a, b, c)` must vanish for all `a, b, c, e`.
    pub fn check_jacobi_identity(&self) -> Result<()> {
        let n = self.dim;
        for a in 0..n {
            for b in a + 1..n {
                for c in b + 1..n {
                    for e in 0..n {
                        let mut sum = Rational::zero();
                        for d in 0..n {
                            sum += self.structure_constant(a, b, d) * self.structure_constant(d, c, e);
                            sum += self.structure_constant(b, c, d) * self.structure_constant(d, a, e);
                            sum += self.structure_constant(c, a, d) * self.structure_constant(d, b, e);
                        }
                        if !sum.is_zero() {
                            return Err(Error::JacobiIdentity(format!(
                                "X{}, X{}, X{} (component X{})",
                                a + 1,
                                b + 1,
                                c + 1,
                                e + 1
                            )));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// The algebra with one more generator, central.
    pub fn plus_r(&self) -> LieAlgebraDef {
        LieAlgebraDef {
            name: format!("{}+R", self.name),
            dim: self.dim + 1,
            f: self.f.clone(),
        }
    }

    pub fn adjoint_reps(&self) -> AdjointReps {
        adjoint_reps(self)
    }

    /// Bracket `[u, v]` of two coefficient vectors over the generators.
    pub fn bracket<T>(&self, u: &[T], v: &[T]) -> Vec<Scalar>
    where
        T: Clone + Into<Scalar>,
    {
        let mut out = vec![Scalar::zero(); self.dim];
        for (&(a, b, c), f) in &self.f {
            let (ua, ub): (Scalar, Scalar) = (u[a].clone().into(), u[b].clone().into());
            let (va, vb): (Scalar, Scalar) = (v[a].clone().into(), v[b].clone().into());
            let coeff = &ua * &vb - &ub * &va;
            if !coeff.is_zero() {
                out[c] += coeff.scale(f);
            }
        }
        out
    }
}

/// `(χ_a)_b^c = −f_{ab}^c` and `(𝒴^c)_{ab} = −f_{ab}^c`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdjointReps {
    pub chi: Vec<Vec<Vec<Rational>>>,
    pub yrep: Vec<Vec<Vec<Rational>>>,
}

impl AdjointReps {
    pub fn chi_matrix(&self, a: usize) -> Matrix {
        matrix::from_rational(&self.chi[a])
    }

    pub fn y_matrix(&self, c: usize) -> Matrix {
        matrix::from_rational(&self.yrep[c])
    }
}

pub fn adjoint_reps(g: &LieAlgebraDef) -> AdjointReps {
    let n = g.dim;
    let mut chi = vec![vec![vec![Rational::zero(); n]; n]; n];
    let mut yrep = vec![vec![vec![Rational::zero(); n]; n]; n];
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let f = g.structure_constant(a, b, c);
                chi[a][b][c] = -f.clone();
                yrep[c][a][b] = -f;
            }
        }
    }
    AdjointReps { chi, yrep }
}

/// II, III, IV, VI₀, VII₀ and II⊕ℝ.
pub fn register_catalog() -> Vec<LieAlgebraDef> {
    let ii = LieAlgebraDef::from_table("II", 3, &[(2, 3, &[(1, 1)])]);
    let iii = LieAlgebraDef::from_table(
        "III",
        3,
        &[(1, 2, &[(2, -1), (3, -1)]), (1, 3, &[(2, -1), (3, -1)])],
    );
    let iv = LieAlgebraDef::from_table("IV", 3, &[(1, 2, &[(2, -1), (3, 1)]), (1, 3, &[(3, -1)])]);
    let vi0 = LieAlgebraDef::from_table("VI0", 3, &[(1, 3, &[(2, 1)]), (2, 3, &[(1, 1)])]);
    let vii0 = LieAlgebraDef::from_table("VII0", 3, &[(1, 3, &[(2, -1)]), (2, 3, &[(1, 1)])]);
    let ii_r = ii.plus_r();
    vec![ii, iii, iv, vi0, vii0, ii_r]
}

pub fn catalog_algebra(name: &str) -> Option<LieAlgebraDef> {
    register_catalog().into_iter().find(|g| g.name == name)
}

/// Frame `ê_a = e_a^μ ∂_μ` (`frame[a][μ]`) together with its dual coframe
/// `θ^a = e^a_μ dx^μ` (`coframe[a][μ]`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Vielbein {
    chart: Chart,
    frame: Matrix,
    coframe: Matrix,
}

impl Vielbein {
    pub fn from_frame(chart: &Chart, frame: Matrix) -> Result<Self> {
        check_square(chart, &frame)?;
        let inv = matrix::inverse(&frame).map_err(|_| Error::SingularVielbein)?;
        Ok(Vielbein {
            chart: chart.clone(),
            coframe: matrix::transpose(&inv),
            frame,
        })
    }

    pub fn from_coframe(chart: &Chart, coframe: Matrix) -> Result<Self> {
        check_square(chart, &coframe)?;
        let inv = matrix::inverse(&coframe).map_err(|_| Error::SingularVielbein)?;
        Ok(Vielbein {
            chart: chart.clone(),
            frame: matrix::transpose(&inv),
            coframe,
        })
    }

    pub fn identity(chart: &Chart) -> Self {
        let n = chart.dim();
        Vielbein {
            chart: chart.clone(),
            frame: matrix::identity(n),
            coframe: matrix::identity(n),
        }
    }

    pub fn chart(&self) -> &Chart {
        &self.chart
    }

    pub fn dim(&self) -> usize {
        self.chart.dim()
    }

    /// `e_a^μ`, rows indexed by `a`.
    pub fn frame(&self) -> &Matrix {
        &self.frame
    }

    /// `e^a_μ`, rows indexed by `a`.
    pub fn coframe(&self) -> &Matrix {
        &self.coframe
    }

    /// Nonzero entries of `Σ_a e^a_μ e_a^ν − δ_μ^ν`.
    pub fn check_inverse(&self) -> Residuals {
        let prod = matrix::mul(&matrix::transpose(&self.coframe), &self.frame);
        let mut out = Residuals::new();
        for (mu, row) in prod.iter().enumerate() {
            for (nu, v) in row.iter().enumerate() {
                let expected = if mu == nu { Scalar::one() } else { Scalar::zero() };
                out.push(format!("(e.e_inv)[{mu}][{nu}]"), v - &expected);
            }
        }
        out
    }

    /// Extends by one coordinate whose frame vector is the new coordinate direction.
    pub fn extended(&self, sym: Symbol) -> Result<Vielbein> {
        let chart = self.chart.extended(sym)?;
        let pad = |m: &Matrix| {
            let n = m.len();
            let mut out: Matrix = m
                .iter()
                .map(|r| {
                    let mut r = r.clone();
                    r.push(Scalar::zero());
                    r
                })
                .collect();
            let mut last = vec![Scalar::zero(); n + 1];
            last[n] = Scalar::one();
            out.push(last);
            out
        };
        Ok(Vielbein {
            chart,
            frame: pad(&self.frame),
            coframe: pad(&self.coframe),
        })
    }
}

fn check_square(chart: &Chart, m: &Matrix) -> Result<()> {
    let n = chart.dim();
    if m.len() != n || m.iter().any(|r| r.len() != n) {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: m.len(),
        });
    }
    Ok(())
}

pub fn frame_fields(v: &Vielbein) -> Vec<MultivectorField> {
    v.frame
        .iter()
        .map(|row| MultivectorField::vector(&v.chart, row.clone()).expect("square vielbein"))
        .collect()
}

/// Residuals `f̂_{ab}^c − f_{ab}^c` with
/// `f̂_{ab}^c = e^c_ν (e_a^μ ∂_μ e_b^ν − e_b^μ ∂_μ e_a^ν)`.
pub fn maurer_cartan_check(v: &Vielbein, g: &LieAlgebraDef) -> Result<Residuals> {
    if v.dim() != g.dim() {
        return Err(Error::DimensionMismatch {
            expected: g.dim(),
            found: v.dim(),
        });
    }
    let mut out = v.check_inverse();
    let fields = frame_fields(v);
    let n = g.dim();
    for a in 0..n {
        for b in a + 1..n {
            let br = lie_bracket(&fields[a], &fields[b])?.to_vec()?;
            for c in 0..n {
                let fhat: Scalar = (0..n).map(|nu| &v.coframe[c][nu] * &br[nu]).sum();
                let expected = Scalar::constant(g.structure_constant(a, b, c));
                out.push(
                    format!("f[X{},X{}]^X{}", a + 1, b + 1, c + 1),
                    fhat - expected,
                );
            }
        }
    }
    Ok(out)
}

fn frame_matrix(ctx: &Context, rows: &[&[&str]]) -> Matrix {
    rows.iter()
        .map(|r| {
            r.iter()
                .map(|t| parse_scalar(t, ctx).expect("catalog entry"))
                .collect()
        })
        .collect()
}

/// Vielbein for `g = e^{xX₁} e^{yX₂} e^{zX₃}` (plus `e^{sX₄}` for II⊕ℝ).
pub fn catalog_vielbein(name: &str) -> Result<Vielbein> {
    let ctx = Context::with_coordinates(&["x", "y", "z", "s"]);
    let chart = Chart::from_names(&["x", "y", "z"])?;
    let rows: &[&[&str]] = match name {
        "II" | "II+R" => &[&["1", "0", "0"], &["-z", "1", "0"], &["0", "0", "1"]],
        "III" => &[&["1", "y + z", "y + z"], &["0", "1", "0"], &["0", "0", "1"]],
        "IV" => &[&["1", "y", "z - y"], &["0", "1", "0"], &["0", "0", "1"]],
        "VI0" => &[
            &["cosh(z)", "-sinh(z)", "0"],
            &["-sinh(z)", "cosh(z)", "0"],
            &["0", "0", "1"],
        ],
        "VII0" => &[
            &["cos(z)", "sin(z)", "0"],
            &["-sin(z)", "cos(z)", "0"],
            &["0", "0", "1"],
        ],
        _ => return Err(Error::InvalidChart(format!("no vielbein for `{name}`"))),
    };
    let v = Vielbein::from_frame(&chart, frame_matrix(&ctx, rows))?;
    if name == "II+R" {
        v.extended(Symbol::coordinate("s"))
    } else {
        Ok(v)
    }
}

/// Parameterized automorphisms; the determinant must not vanish.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AutomorphismFamily {
    pub algebra: String,
    pub label: String,
    pub matrix: Matrix,
    pub params: Vec<Symbol>,
    pub determinant: Scalar,
}

impl AutomorphismFamily {
    fn new(algebra: &str, label: &str, names: &[&str], rows: &[&[&str]]) -> Self {
        let mut ctx = Context::new();
        let params: Vec<Symbol> = names
            .iter()
            .map(|n| ctx.parameter(n).expect("fresh parameter"))
            .collect();
        let m = frame_matrix(&ctx, rows);
        AutomorphismFamily {
            algebra: algebra.to_string(),
            label: label.to_string(),
            determinant: matrix::determinant(&m),
            matrix: m,
            params,
        }
    }
}

/// Automorphism families of the catalog algebras (one per connected component
/// of the shown form).
pub fn automorphism_families(name: &str) -> Vec<AutomorphismFamily> {
    let f = AutomorphismFamily::new;
    match name {
        "II" => vec![f(
            "II",
            "general",
            &["a21", "a22", "a23", "a31", "a32", "a33"],
            &[
                &["a22*a33 - a23*a32", "0", "0"],
                &["a21", "a22", "a23"],
                &["a31", "a32", "a33"],
            ],
        )],
        "III" => vec![f(
            "III",
            "general",
            &["a12", "a13", "a22", "a23"],
            &[&["1", "a12", "a13"], &["0", "a22", "a23"], &["0", "a23", "a22"]],
        )],
        "IV" => vec![f(
            "IV",
            "general",
            &["a12", "a13", "a22", "a23"],
            &[&["1", "a12", "a13"], &["0", "a22", "a23"], &["0", "0", "a22"]],
        )],
        "VI0" => vec![
            f(
                "VI0",
                "X3 -> X3",
                &["a11", "a12", "a31", "a32"],
                &[&["a11", "a12", "0"], &["a12", "a11", "0"], &["a31", "a32", "1"]],
            ),
            f(
                "VI0",
                "X3 -> -X3",
                &["a11", "a12", "a31", "a32"],
                &[&["a11", "a12", "0"], &["-a12", "-a11", "0"], &["a31", "a32", "-1"]],
            ),
        ],
        "VII0" => vec![
            f(
                "VII0",
                "X3 -> X3",
                &["a11", "a12", "a31", "a32"],
                &[&["a11", "a12", "0"], &["-a12", "a11", "0"], &["a31", "a32", "1"]],
            ),
            f(
                "VII0",
                "X3 -> -X3",
                &["a11", "a12", "a31", "a32"],
                &[&["a11", "a12", "0"], &["a12", "-a11", "0"], &["a31", "a32", "-1"]],
            ),
        ],
        "II+R" => vec![f(
            "II+R",
            "general",
            &[
                "a21", "a22", "a23", "a24", "a31", "a32", "a33", "a34", "a41", "a44",
            ],
            &[
                &["a22*a33 - a23*a32", "0", "0", "0"],
                &["a21", "a22", "a23", "a24"],
                &["a31", "a32", "a33", "a34"],
                &["a41", "0", "0", "a44"],
            ],
        )],
        _ => Vec::new(),
    }
}

/// Checks `f_{ab}^c A_c^d = A_a^e A_b^g f_{eg}^d` and `det A ≠ 0`.
pub fn check_automorphism(g: &LieAlgebraDef, a: &[Vec<Rational>]) -> Result<()> {
    let n = g.dim();
    if a.len() != n || a.iter().any(|r| r.len() != n) {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: a.len(),
        });
    }
    for i in 0..n {
        for j in i + 1..n {
            let image_of_bracket: Vec<Rational> = (0..n)
                .map(|d| {
                    (0..n)
                        .map(|c| g.structure_constant(i, j, c) * &a[c][d])
                        .fold(Rational::zero(), |acc, x| acc + x)
                })
                .collect();
            let bracket_of_images = g.bracket(&a[i], &a[j]);
            for d in 0..n {
                if bracket_of_images[d] != Scalar::constant(image_of_bracket[d].clone()) {
                    return Err(Error::NotAutomorphism(format!(
                        "[X{}, X{}] not preserved (component X{})",
                        i + 1,
                        j + 1,
                        d + 1
                    )));
                }
            }
        }
    }
    if matrix::determinant(&matrix::from_rational(a)).is_zero() {
        return Err(Error::SingularAutomorphism);
    }
    Ok(())
}

/// Instantiates every parameter of the family and verifies the result.
pub fn instantiate_automorphism(
    g: &LieAlgebraDef,
    fam: &AutomorphismFamily,
    values: &BTreeMap<Symbol, Rational>,
) -> Result<Vec<Vec<Rational>>> {
    let mut out = Vec::with_capacity(fam.matrix.len());
    for row in &fam.matrix {
        let mut r = Vec::with_capacity(row.len());
        for entry in row {
            let v = entry.instantiate(values)?;
            r.push(v.as_constant().ok_or_else(|| {
                let missing = v.symbols().into_iter().next().expect("non-constant");
                Error::Unassigned(missing)
            })?);
        }
        out.push(r);
    }
    check_automorphism(g, &out)?;
    Ok(out)
}
