//! Multivector fields on a coordinate chart and the brackets built from them.
//!
//! Components are stored sparsely over strictly increasing index tuples; every
//! reordering goes through [`sort_indices`], the only place permutation signs
//! are computed.
//!
//! The Schouten–Nijenhuis bracket follows the convention
//! `[X₁∧…∧X_p, Y₁∧…∧Y_q] = (−1)^{p+1} Σᵢⱼ (−1)^{i+j} [Xᵢ,Yⱼ] ∧ X₁…X̂ᵢ…X_p ∧ Y₁…Ŷⱼ…Y_q`.
//! On vector fields it is the Lie bracket, `[E, Λ]` is the Lie derivative `L_E Λ`,
//! and for bivectors it is symmetric with
//! `[Λ,Λ]^{ijk} = −2 (Λ^{iρ}∂_ρΛ^{jk} + Λ^{jρ}∂_ρΛ^{ki} + Λ^{kρ}∂_ρΛ^{ij})`,
//! the scale under which a Jacobi pair satisfies `[Λ,Λ] = 2 E∧Λ`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::symexpr::{integer, parse_scalar, Context, Scalar, Symbol};

/// Ordered chart coordinates; the order fixes component indexing.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Chart {
    coords: Vec<Symbol>,
}

impl Chart {
    pub fn new(coords: Vec<Symbol>) -> Result<Self> {
        for (i, c) in coords.iter().enumerate() {
            if !c.is_coordinate() {
                return Err(Error::InvalidChart(format!("`{c}` is a parameter")));
            }
            if coords[..i].contains(c) {
                return Err(Error::InvalidChart(format!("`{c}` repeated")));
            }
        }
        Ok(Chart { coords })
    }

    pub fn from_names(names: &[&str]) -> Result<Self> {
        Chart::new(names.iter().map(|n| Symbol::coordinate(n)).collect())
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[Symbol] {
        &self.coords
    }

    pub fn coord(&self, i: usize) -> &Symbol {
        &self.coords[i]
    }

    pub fn index_of(&self, sym: &Symbol) -> Option<usize> {
        self.coords.iter().position(|c| c == sym)
    }

    pub fn contains(&self, sym: &Symbol) -> bool {
        self.index_of(sym).is_some()
    }

    /// Chart with one more coordinate appended.
    pub fn extended(&self, sym: Symbol) -> Result<Chart> {
        if self.contains(&sym) {
            return Err(Error::ChartHasCoordinate(sym.name().to_string()));
        }
        let mut coords = self.coords.clone();
        coords.push(sym);
        Chart::new(coords)
    }
}

/// Sorts an index tuple, returning the permutation sign, or `None` when an
/// index repeats (the antisymmetric component vanishes).
pub fn sort_indices(idx: &[usize]) -> Option<(i64, Vec<usize>)> {
    let mut v = idx.to_vec();
    let mut sign = 1;
    // insertion sort; tuples have length ≤ 6
    for i in 1..v.len() {
        let mut j = i;
        while j > 0 && v[j - 1] > v[j] {
            v.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
    }
    if v.windows(2).any(|w| w[0] == w[1]) {
        None
    } else {
        Some((sign, v))
    }
}

/// Grade-`p` antisymmetric contravariant field `Σ_{μ₁<…<μ_p} A^{μ₁…μ_p} ∂_{μ₁}∧…∧∂_{μ_p}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultivectorField {
    chart: Chart,
    grade: usize,
    comps: BTreeMap<Vec<usize>, Scalar>,
}

impl MultivectorField {
    pub fn zero(chart: &Chart, grade: usize) -> Result<Self> {
        if grade > chart.dim() {
            return Err(Error::GradeOverflow {
                grade,
                dim: chart.dim(),
            });
        }
        Ok(MultivectorField {
            chart: chart.clone(),
            grade,
            comps: BTreeMap::new(),
        })
    }

    pub fn function(chart: &Chart, f: Scalar) -> Self {
        let mut m = MultivectorField::zero(chart, 0).expect("grade 0");
        m.add_component(&[], f).expect("empty tuple");
        m
    }

    /// Builds a field from (possibly unordered) index tuples; repeated entries accumulate.
    pub fn from_components<I>(chart: &Chart, grade: usize, comps: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<usize>, Scalar)>,
    {
        let mut m = MultivectorField::zero(chart, grade)?;
        for (idx, v) in comps {
            if idx.len() != grade {
                return Err(Error::WrongGrade {
                    expected: grade,
                    found: idx.len(),
                });
            }
            m.add_component(&idx, v)?;
        }
        Ok(m)
    }

    pub fn vector(chart: &Chart, comps: Vec<Scalar>) -> Result<Self> {
        if comps.len() != chart.dim() {
            return Err(Error::DimensionMismatch {
                expected: chart.dim(),
                found: comps.len(),
            });
        }
        MultivectorField::from_components(
            chart,
            1,
            comps.into_iter().enumerate().map(|(i, c)| (vec![i], c)),
        )
    }

    /// Bivector `Σ_{i<j} m[i][j] ∂ᵢ∧∂ⱼ` from a full antisymmetric matrix.
    pub fn bivector_from_matrix(chart: &Chart, m: &[Vec<Scalar>]) -> Result<Self> {
        let n = chart.dim();
        if m.len() != n || m.iter().any(|r| r.len() != n) {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: m.len(),
            });
        }
        let mut out = MultivectorField::zero(chart, 2)?;
        for i in 0..n {
            if !m[i][i].is_zero() {
                return Err(Error::NotAntisymmetric(i, i));
            }
            for j in i + 1..n {
                if m[j][i] != -&m[i][j] {
                    return Err(Error::NotAntisymmetric(i, j));
                }
                out.add_component(&[i, j], m[i][j].clone())?;
            }
        }
        Ok(out)
    }

    /// Bivector `Σ c ∂ᵢ∧∂ⱼ` from a list of `(i, j, c)`.
    pub fn bivector(chart: &Chart, entries: &[(usize, usize, Scalar)]) -> Result<Self> {
        MultivectorField::from_components(
            chart,
            2,
            entries.iter().map(|(i, j, c)| (vec![*i, *j], c.clone())),
        )
    }

    pub fn chart(&self) -> &Chart {
        &self.chart
    }

    pub fn grade(&self) -> usize {
        self.grade
    }

    pub fn dim(&self) -> usize {
        self.chart.dim()
    }

    /// Nonzero components over increasing tuples, in lexicographic order.
    pub fn components(&self) -> impl Iterator<Item = (&Vec<usize>, &Scalar)> {
        self.comps.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.comps.is_empty()
    }

    fn add_component(&mut self, idx: &[usize], v: Scalar) -> Result<()> {
        if let Some(&bad) = idx.iter().find(|&&i| i >= self.dim()) {
            return Err(Error::IndexOutOfRange(bad));
        }
        let Some((sign, sorted)) = sort_indices(idx) else {
            return Ok(());
        };
        if v.is_zero() {
            return Ok(());
        }
        let v = if sign < 0 { -v } else { v };
        let entry = self.comps.entry(sorted).or_default();
        *entry += v;
        if entry.is_zero() {
            self.comps.retain(|_, c| !c.is_zero());
        }
        Ok(())
    }

    /// Component for any index order, with the antisymmetric sign applied.
    pub fn component(&self, idx: &[usize]) -> Scalar {
        match sort_indices(idx) {
            None => Scalar::zero(),
            Some((sign, sorted)) => match self.comps.get(&sorted) {
                None => Scalar::zero(),
                Some(c) if sign < 0 => -c,
                Some(c) => c.clone(),
            },
        }
    }

    /// Full antisymmetric component matrix of a bivector.
    pub fn to_matrix(&self) -> Result<Vec<Vec<Scalar>>> {
        self.require_grade(2)?;
        let n = self.dim();
        let mut m = vec![vec![Scalar::zero(); n]; n];
        for (idx, c) in &self.comps {
            m[idx[0]][idx[1]] = c.clone();
            m[idx[1]][idx[0]] = -c;
        }
        Ok(m)
    }

    /// Vector components `(X^0, …, X^{n−1})`.
    pub fn to_vec(&self) -> Result<Vec<Scalar>> {
        self.require_grade(1)?;
        Ok((0..self.dim()).map(|i| self.component(&[i])).collect())
    }

    pub(crate) fn require_grade(&self, grade: usize) -> Result<()> {
        if self.grade == grade {
            Ok(())
        } else {
            Err(Error::WrongGrade {
                expected: grade,
                found: self.grade,
            })
        }
    }

    fn require_same_chart(&self, other: &MultivectorField) -> Result<()> {
        if self.chart == other.chart {
            Ok(())
        } else {
            Err(Error::ChartMismatch)
        }
    }

    pub fn add(&self, other: &MultivectorField) -> Result<MultivectorField> {
        self.require_same_chart(other)?;
        other.require_grade(self.grade)?;
        let mut out = self.clone();
        for (idx, c) in &other.comps {
            out.add_component(idx, c.clone())?;
        }
        Ok(out)
    }

    pub fn sub(&self, other: &MultivectorField) -> Result<MultivectorField> {
        self.add(&other.scale(&Scalar::int(-1)))
    }

    /// Multiplies every component by a function.
    pub fn scale(&self, f: &Scalar) -> MultivectorField {
        let comps = self
            .comps
            .iter()
            .map(|(k, c)| (k.clone(), c * f))
            .filter(|(_, c)| !c.is_zero())
            .collect();
        MultivectorField {
            chart: self.chart.clone(),
            grade: self.grade,
            comps,
        }
    }

    /// Applies `f` to every component.
    pub fn try_map<F>(&self, mut f: F) -> Result<MultivectorField>
    where
        F: FnMut(&Scalar) -> Result<Scalar>,
    {
        let mut comps = BTreeMap::new();
        for (k, c) in &self.comps {
            let v = f(c)?;
            if !v.is_zero() {
                comps.insert(k.clone(), v);
            }
        }
        Ok(MultivectorField {
            chart: self.chart.clone(),
            grade: self.grade,
            comps,
        })
    }

    /// Componentwise partial derivative `∂_μ A`.
    pub fn partial(&self, mu: usize) -> Result<MultivectorField> {
        let v = self.chart.coord(mu).clone();
        self.try_map(|c| c.differentiate(&v))
    }

    /// `X(f) = X^μ ∂_μ f` for a vector field.
    pub fn apply(&self, f: &Scalar) -> Result<Scalar> {
        self.require_grade(1)?;
        let mut out = Scalar::zero();
        for (idx, c) in &self.comps {
            out += c * &f.differentiate(self.chart.coord(idx[0]))?;
        }
        Ok(out)
    }

    /// Right derivative with respect to the odd generator `ξ_μ`: removes `∂_μ`
    /// after moving it to the last slot.
    fn right_derivative(&self, mu: usize) -> MultivectorField {
        let p = self.grade;
        let mut comps = BTreeMap::new();
        for (idx, c) in &self.comps {
            if let Some(k) = idx.iter().position(|&i| i == mu) {
                let mut rest = idx.clone();
                rest.remove(k);
                let sign = if (p - 1 - k) % 2 == 0 { 1 } else { -1 };
                comps.insert(rest, c.scale(&integer(sign)));
            }
        }
        MultivectorField {
            chart: self.chart.clone(),
            grade: p - 1,
            comps,
        }
    }

    /// Report notation: `(c) dx^dz + …`.
    pub fn display(&self) -> String {
        if self.comps.is_empty() {
            return String::from("0");
        }
        let parts: Vec<String> = self
            .comps
            .iter()
            .map(|(idx, c)| {
                if idx.is_empty() {
                    return c.to_string();
                }
                let basis: Vec<String> = idx
                    .iter()
                    .map(|&i| format!("d{}", self.chart.coord(i)))
                    .collect();
                format!("({c}) {}", basis.join("^"))
            })
            .collect();
        parts.join(" + ")
    }
}

impl fmt::Display for MultivectorField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display())
    }
}

/// Parses `"x,z: expr; y: expr"` into components over `chart`; repeated
/// index sets add up.
pub fn parse_components(
    text: &str,
    chart: &Chart,
    ctx: &Context,
    grade: usize,
) -> Result<MultivectorField> {
    let mut comps = Vec::new();
    for item in text.split(';').map(str::trim).filter(|s| !s.is_empty()) {
        let (idx, expr) = item
            .split_once(':')
            .ok_or_else(|| Error::InvalidChart(format!("missing `:` in `{item}`")))?;
        let idx = idx
            .split(',')
            .map(|n| {
                let sym = ctx
                    .get(n.trim())
                    .ok_or_else(|| Error::InvalidChart(format!("unknown coordinate `{}`", n.trim())))?;
                chart
                    .index_of(sym)
                    .ok_or_else(|| Error::InvalidChart(format!("`{sym}` not in chart")))
            })
            .collect::<Result<Vec<_>>>()?;
        comps.push((idx, parse_scalar(expr.trim(), ctx)?));
    }
    MultivectorField::from_components(chart, grade, comps)
}


/// Exterior product; `wedge(A,B) = (−1)^{pq} wedge(B,A)`.
pub fn wedge(a: &MultivectorField, b: &MultivectorField) -> Result<MultivectorField> {
    a.require_same_chart(b)?;
    let mut out = MultivectorField::zero(&a.chart, a.grade + b.grade)?;
    for (ia, ca) in &a.comps {
        for (ib, cb) in &b.comps {
            let mut idx = ia.clone();
            idx.extend_from_slice(ib);
            out.add_component(&idx, ca * cb)?;
        }
    }
    Ok(out)
}

/// Unnormalized super-formalism bracket
/// `Σ_μ (A ←∂_{ξ_μ}) ∧ ∂_μ B − (−1)^{(p−1)(q−1)} (B ←∂_{ξ_μ}) ∧ ∂_μ A`.
fn super_bracket(a: &MultivectorField, b: &MultivectorField) -> Result<MultivectorField> {
    let (p, q) = (a.grade, b.grade);
    let n = a.dim();
    let grade = p + q - 1;
    if grade > n {
        return MultivectorField::zero(&a.chart, 0).map(|mut z| {
            z.grade = grade;
            z
        });
    }
    let mut out = MultivectorField::zero(&a.chart, grade)?;
    let second_sign = if ((p - 1) * (q - 1)) % 2 == 0 { -1 } else { 1 };
    for mu in 0..n {
        let da = a.right_derivative(mu);
        if !da.is_zero() {
            out = out.add(&wedge(&da, &b.partial(mu)?)?)?;
        }
        let db = b.right_derivative(mu);
        if !db.is_zero() {
            let t = wedge(&db, &a.partial(mu)?)?;
            out = out.add(&t.scale(&Scalar::int(second_sign)))?;
        }
    }
    Ok(out)
}

/// Schouten–Nijenhuis bracket of a grade-`p` and a grade-`q` field (`p, q ≥ 1`).
pub fn schouten(a: &MultivectorField, b: &MultivectorField) -> Result<MultivectorField> {
    a.require_same_chart(b)?;
    if a.grade == 0 || b.grade == 0 {
        return Err(Error::GradeZero);
    }
    let s = super_bracket(a, b)?;
    Ok(if a.grade % 2 == 0 {
        s.scale(&Scalar::int(-1))
    } else {
        s
    })
}

/// Push-forward `φ_*T` by a diffeomorphism given through its components
/// `phi[μ](x)` and those of its inverse: `(φ_*T)^{μ…}(p) = ∂_αφ^μ ⋯ T^{α…}(φ⁻¹(p))`.
pub fn pushforward(
    t: &MultivectorField,
    phi: &[Scalar],
    phi_inv: &[Scalar],
) -> Result<MultivectorField> {
    let chart = &t.chart;
    let n = chart.dim();
    if phi.len() != n || phi_inv.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: phi.len().min(phi_inv.len()),
        });
    }
    let back: BTreeMap<Symbol, Scalar> = chart
        .coords()
        .iter()
        .cloned()
        .zip(phi_inv.iter().cloned())
        .collect();
    let jac = phi
        .iter()
        .map(|f| chart.coords().iter().map(|c| f.differentiate(c)).collect())
        .collect::<Result<Vec<Vec<Scalar>>>>()?;
    let g = t.grade;
    let mut comps = Vec::new();
    for (idx, c) in &t.comps {
        let c = c.substitute(&back)?;
        // every ordered target tuple; from_components folds them with signs
        for code in 0..n.pow(g as u32) {
            let mut rest = code;
            let mut target = Vec::with_capacity(g);
            let mut coef = c.clone();
            for &a in idx {
                let mu = rest % n;
                rest /= n;
                coef = &coef * &jac[mu][a].substitute(&back)?;
                target.push(mu);
            }
            if !coef.is_zero() {
                comps.push((target, coef));
            }
        }
    }
    MultivectorField::from_components(chart, g, comps)
}

/// Lie bracket of vector fields.
pub fn lie_bracket(x: &MultivectorField, y: &MultivectorField) -> Result<MultivectorField> {
    x.require_grade(1)?;
    y.require_grade(1)?;
    schouten(x, y)
}

/// `{f, g} = P^{μν} ∂_μ f ∂_ν g`.
pub fn poisson_bracket(f: &Scalar, g: &Scalar, p: &MultivectorField) -> Result<Scalar> {
    p.require_grade(2)?;
    let chart = p.chart();
    let df: Vec<Scalar> = chart
        .coords()
        .iter()
        .map(|c| f.differentiate(c))
        .collect::<Result<_>>()?;
    let dg: Vec<Scalar> = chart
        .coords()
        .iter()
        .map(|c| g.differentiate(c))
        .collect::<Result<_>>()?;
    let mut out = Scalar::zero();
    for (idx, c) in p.components() {
        let (i, j) = (idx[0], idx[1]);
        let t = &df[i] * &dg[j] - &df[j] * &dg[i];
        if !t.is_zero() {
            out += c * &t;
        }
    }
    Ok(out)
}

/// `{f, g}_{Λ,E} = Λ(df, dg) + f E(g) − g E(f)`.
pub fn jacobi_bracket(
    f: &Scalar,
    g: &Scalar,
    lambda: &MultivectorField,
    e: &MultivectorField,
) -> Result<Scalar> {
    lambda.require_same_chart(e)?;
    e.require_grade(1)?;
    Ok(poisson_bracket(f, g, lambda)? + f * &e.apply(g)? - g * &e.apply(f)?)
}

/// `X_H` with `X_H^μ = P^{μν} ∂_ν H`, so that `X_H(f) = {f, H}`.
pub fn hamiltonian_vector_field(h: &Scalar, p: &MultivectorField) -> Result<MultivectorField> {
    let m = p.to_matrix()?;
    let chart = p.chart();
    let dh: Vec<Scalar> = chart
        .coords()
        .iter()
        .map(|c| h.differentiate(c))
        .collect::<Result<_>>()?;
    let comps = (0..chart.dim())
        .map(|mu| {
            (0..chart.dim())
                .filter(|&nu| !m[mu][nu].is_zero() && !dh[nu].is_zero())
                .map(|nu| &m[mu][nu] * &dh[nu])
                .sum()
        })
        .collect();
    MultivectorField::vector(chart, comps)
}

/// Pfaffian of an antisymmetric matrix by expansion along the first row.
pub fn pfaffian_matrix(m: &[Vec<Scalar>]) -> Result<Scalar> {
    let n = m.len();
    if n % 2 == 1 {
        return Err(Error::OddDimension(n));
    }
    let idx: Vec<usize> = (0..n).collect();
    Ok(pfaffian_rec(m, &idx))
}

fn pfaffian_rec(m: &[Vec<Scalar>], idx: &[usize]) -> Scalar {
    if idx.is_empty() {
        return Scalar::one();
    }
    let first = idx[0];
    let mut out = Scalar::zero();
    for (k, &j) in idx.iter().enumerate().skip(1) {
        if m[first][j].is_zero() {
            continue;
        }
        let rest: Vec<usize> = idx
            .iter()
            .copied()
            .filter(|&i| i != first && i != j)
            .collect();
        let term = &m[first][j] * &pfaffian_rec(m, &rest);
        // (−1)^{k+1} with k the 0-based position of j
        if k % 2 == 1 {
            out += term;
        } else {
            out -= term;
        }
    }
    out
}

/// Pfaffian of a bivector on an even-dimensional chart; zero iff degenerate.
pub fn pfaffian(p: &MultivectorField) -> Result<Scalar> {
    pfaffian_matrix(&p.to_matrix()?)
}
