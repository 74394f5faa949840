//! Exact scalar functions on a chart.
//!
//! A [`Scalar`] is a finite sum of terms `c · ∏ xᵢ^nᵢ · exp(Σ kⱼ sⱼ) · ∏ trig(m·zₗ)` with
//! rational `c`, non-negative integer powers, integer exponent multiples and at most one
//! harmonic factor per argument symbol. Hyperbolic functions are expanded into
//! exponentials on construction and products of harmonics are reduced by the
//! product-to-sum identities, so every value has exactly one representation and
//! equality is structural.

mod eval;
mod parse;
mod print;

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Pow, Signed, Zero};

use crate::error::{Error, Result};

pub use parse::parse_scalar;

pub type Rational = num_rational::BigRational;

/// Builds an exact rational `num/den`.
pub fn rational(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn integer(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SymbolKind {
    /// A chart coordinate; may be differentiated against.
    Coordinate,
    /// A constant parameter; every chart derivative of it vanishes.
    Parameter,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Symbol {
    name: Arc<str>,
    kind: SymbolKind,
}

impl Symbol {
    pub fn coordinate(name: &str) -> Self {
        Symbol {
            name: Arc::from(name),
            kind: SymbolKind::Coordinate,
        }
    }

    pub fn parameter(name: &str) -> Self {
        Symbol {
            name: Arc::from(name),
            kind: SymbolKind::Parameter,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn kind(&self) -> SymbolKind {
        self.kind
    }

    pub fn is_coordinate(&self) -> bool {
        self.kind == SymbolKind::Coordinate
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)
    }
}

/// Symbol table used by the parser. Names are unique; a name keeps the kind it
/// was first declared with.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Context {
    symbols: BTreeMap<String, Symbol>,
}

impl Context {
    pub fn new() -> Self {
        Self::default()
    }

    /// Context with the given chart coordinates declared.
    pub fn with_coordinates(names: &[&str]) -> Self {
        let mut ctx = Context::new();
        for name in names {
            ctx.coordinate(name).expect("fresh context");
        }
        ctx
    }

    pub fn coordinate(&mut self, name: &str) -> Result<Symbol> {
        self.declare(Symbol::coordinate(name))
    }

    pub fn parameter(&mut self, name: &str) -> Result<Symbol> {
        self.declare(Symbol::parameter(name))
    }

    pub fn declare(&mut self, symbol: Symbol) -> Result<Symbol> {
        match self.symbols.get(symbol.name()) {
            Some(existing) if existing.kind != symbol.kind => {
                Err(Error::SymbolKindClash(symbol.name().to_string()))
            }
            Some(existing) => Ok(existing.clone()),
            None => {
                self.symbols
                    .insert(symbol.name().to_string(), symbol.clone());
                Ok(symbol)
            }
        }
    }

    pub fn get(&self, name: &str) -> Option<&Symbol> {
        self.symbols.get(name)
    }

    pub fn symbols(&self) -> impl Iterator<Item = &Symbol> {
        self.symbols.values()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Trig {
    Cos,
    Sin,
}

/// `sin(freq·z)` or `cos(freq·z)` with `freq ≥ 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Harmonic {
    pub trig: Trig,
    pub freq: u32,
}

/// Normalizes `trig(k·z)` for an arbitrary integer `k`. `None` means the factor is zero.
fn normalize_harmonic(trig: Trig, k: i64) -> Option<(i64, Option<Harmonic>)> {
    let freq = u32::try_from(k.unsigned_abs()).expect("harmonic frequency fits in u32");
    match (trig, k.signum()) {
        (Trig::Cos, 0) => Some((1, None)),
        (Trig::Sin, 0) => None,
        (Trig::Cos, _) => Some((1, Some(Harmonic { trig, freq }))),
        (Trig::Sin, s) => Some((s, Some(Harmonic { trig, freq }))),
    }
}

/// Product-to-sum reduction of two harmonics in the same argument.
fn harmonic_product(a: Harmonic, b: Harmonic) -> Vec<(Rational, Option<Harmonic>)> {
    let (m, n) = (i64::from(a.freq), i64::from(b.freq));
    // (trig, frequency, sign) pairs, each with weight 1/2
    let parts: [(Trig, i64, i64); 2] = match (a.trig, b.trig) {
        (Trig::Cos, Trig::Cos) => [(Trig::Cos, m - n, 1), (Trig::Cos, m + n, 1)],
        (Trig::Sin, Trig::Sin) => [(Trig::Cos, m - n, 1), (Trig::Cos, m + n, -1)],
        (Trig::Sin, Trig::Cos) => [(Trig::Sin, m + n, 1), (Trig::Sin, m - n, 1)],
        (Trig::Cos, Trig::Sin) => [(Trig::Sin, m + n, 1), (Trig::Sin, m - n, -1)],
    };
    let mut out: Vec<(Rational, Option<Harmonic>)> = Vec::new();
    for (trig, k, sign) in parts {
        if let Some((s, h)) = normalize_harmonic(trig, k) {
            let c = rational(sign * s, 2);
            match out.iter_mut().find(|(_, existing)| *existing == h) {
                Some((acc, _)) => *acc += c,
                None => out.push((c, h)),
            }
        }
    }
    out.retain(|(c, _)| !c.is_zero());
    out
}

/// The non-coefficient part of a term. Keys are totally ordered: first by the
/// polynomial powers, then the exponential arguments, then the harmonics.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TermKey {
    pub powers: BTreeMap<Symbol, u32>,
    pub exps: BTreeMap<Symbol, i64>,
    pub harmonics: BTreeMap<Symbol, Harmonic>,
}

impl TermKey {
    pub fn is_one(&self) -> bool {
        self.powers.is_empty() && self.exps.is_empty() && self.harmonics.is_empty()
    }

    fn symbols(&self) -> impl Iterator<Item = &Symbol> {
        self.powers
            .keys()
            .chain(self.exps.keys())
            .chain(self.harmonics.keys())
    }

    fn product(&self, other: &TermKey) -> Vec<(Rational, TermKey)> {
        let mut powers = self.powers.clone();
        for (s, n) in &other.powers {
            *powers.entry(s.clone()).or_insert(0) += n;
        }
        let mut exps = self.exps.clone();
        for (s, k) in &other.exps {
            let e = exps.entry(s.clone()).or_insert(0);
            *e += k;
            if *e == 0 {
                exps.remove(s);
            }
        }
        let mut partial: Vec<(Rational, BTreeMap<Symbol, Harmonic>)> =
            vec![(Rational::one(), BTreeMap::new())];
        let syms: BTreeSet<&Symbol> = self
            .harmonics
            .keys()
            .chain(other.harmonics.keys())
            .collect();
        for sym in syms {
            match (self.harmonics.get(sym), other.harmonics.get(sym)) {
                (Some(&h), None) | (None, Some(&h)) => {
                    for (_, map) in partial.iter_mut() {
                        map.insert(sym.clone(), h);
                    }
                }
                (Some(&a), Some(&b)) => {
                    let pieces = harmonic_product(a, b);
                    let mut next = Vec::with_capacity(partial.len() * pieces.len());
                    for (c, map) in &partial {
                        for (pc, h) in &pieces {
                            let mut m = map.clone();
                            if let Some(h) = h {
                                m.insert(sym.clone(), *h);
                            }
                            next.push((c * pc, m));
                        }
                    }
                    partial = next;
                }
                (None, None) => unreachable!(),
            }
        }
        partial
            .into_iter()
            .map(|(c, harmonics)| {
                (
                    c,
                    TermKey {
                        powers: powers.clone(),
                        exps: exps.clone(),
                        harmonics,
                    },
                )
            })
            .collect()
    }
}

/// Exact scalar function in canonical form. The zero scalar has no terms.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Scalar {
    terms: BTreeMap<TermKey, Rational>,
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar::default()
    }

    pub fn one() -> Self {
        Scalar::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Scalar::monomial(c, TermKey::default())
    }

    pub fn int(n: i64) -> Self {
        Scalar::constant(integer(n))
    }

    pub fn ratio(num: i64, den: i64) -> Self {
        Scalar::constant(rational(num, den))
    }

    pub fn monomial(c: Rational, key: TermKey) -> Self {
        let mut s = Scalar::zero();
        s.add_term(key, c);
        s
    }

    pub fn var(sym: &Symbol) -> Self {
        let mut key = TermKey::default();
        key.powers.insert(sym.clone(), 1);
        Scalar::monomial(Rational::one(), key)
    }

    /// `exp(k·sym)`.
    pub fn exp(sym: &Symbol, k: i64) -> Self {
        Scalar::exp_linear(&[(sym.clone(), k)])
    }

    /// `exp(Σ kᵢ·symᵢ)`.
    pub fn exp_linear(args: &[(Symbol, i64)]) -> Self {
        let mut key = TermKey::default();
        for (s, k) in args {
            let e = key.exps.entry(s.clone()).or_insert(0);
            *e += k;
            if *e == 0 {
                key.exps.remove(s);
            }
        }
        Scalar::monomial(Rational::one(), key)
    }

    pub fn sin(sym: &Symbol, k: i64) -> Self {
        Scalar::harmonic(Trig::Sin, sym, k)
    }

    pub fn cos(sym: &Symbol, k: i64) -> Self {
        Scalar::harmonic(Trig::Cos, sym, k)
    }

    fn harmonic(trig: Trig, sym: &Symbol, k: i64) -> Self {
        match normalize_harmonic(trig, k) {
            None => Scalar::zero(),
            Some((sign, h)) => {
                let mut key = TermKey::default();
                if let Some(h) = h {
                    key.harmonics.insert(sym.clone(), h);
                }
                Scalar::monomial(integer(sign), key)
            }
        }
    }

    /// `sinh(k·sym) = (e^{k·sym} − e^{−k·sym})/2`.
    pub fn sinh(sym: &Symbol, k: i64) -> Self {
        (Scalar::exp(sym, k) - Scalar::exp(sym, -k)).scale(&rational(1, 2))
    }

    /// `cosh(k·sym) = (e^{k·sym} + e^{−k·sym})/2`.
    pub fn cosh(sym: &Symbol, k: i64) -> Self {
        (Scalar::exp(sym, k) + Scalar::exp(sym, -k)).scale(&rational(1, 2))
    }

    fn add_term(&mut self, key: TermKey, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            alloc::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            alloc::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Terms in canonical order.
    pub fn terms(&self) -> impl Iterator<Item = (&TermKey, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// `equals(a, b) ⇔ is_zero(a − b)`; with canonical forms this is structural.
    pub fn equals(&self, other: &Scalar) -> bool {
        self == other
    }

    /// The value if this scalar has no symbols.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => {
                let (k, c) = self.terms.iter().next().expect("one term");
                k.is_one().then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn symbols(&self) -> BTreeSet<Symbol> {
        self.terms
            .keys()
            .flat_map(|k| k.symbols().cloned())
            .collect()
    }

    /// True when no chart coordinate occurs.
    pub fn is_coordinate_free(&self) -> bool {
        self.symbols().iter().all(|s| !s.is_coordinate())
    }

    pub fn scale(&self, c: &Rational) -> Scalar {
        if c.is_zero() {
            return Scalar::zero();
        }
        Scalar {
            terms: self
                .terms
                .iter()
                .map(|(k, v)| (k.clone(), v * c))
                .collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Scalar {
        let mut acc = Scalar::one();
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Partial derivative with respect to a chart coordinate.
    pub fn differentiate(&self, v: &Symbol) -> Result<Scalar> {
        if !v.is_coordinate() {
            return Err(Error::ParameterDerivative(v.clone()));
        }
        let mut out = Scalar::zero();
        for (key, c) in &self.terms {
            if let Some(&n) = key.powers.get(v) {
                let mut k = key.clone();
                if n == 1 {
                    k.powers.remove(v);
                } else {
                    k.powers.insert(v.clone(), n - 1);
                }
                out.add_term(k, c * integer(i64::from(n)));
            }
            if let Some(&e) = key.exps.get(v) {
                out.add_term(key.clone(), c * integer(e));
            }
            if let Some(h) = key.harmonics.get(v) {
                let mut k = key.clone();
                let freq = integer(i64::from(h.freq));
                let (trig, sign) = match h.trig {
                    Trig::Sin => (Trig::Cos, Rational::one()),
                    Trig::Cos => (Trig::Sin, -Rational::one()),
                };
                k.harmonics.insert(
                    v.clone(),
                    Harmonic {
                        trig,
                        freq: h.freq,
                    },
                );
                out.add_term(k, c * freq * sign);
            }
        }
        Ok(out)
    }

    /// Multiplicative inverse of a unit `c·exp(Σ kᵢ sᵢ)`.
    pub fn try_inverse(&self) -> Result<Scalar> {
        if self.terms.len() == 1 {
            let (key, c) = self.terms.iter().next().expect("one term");
            if key.powers.is_empty() && key.harmonics.is_empty() {
                let mut inv = TermKey::default();
                inv.exps = key.exps.iter().map(|(s, k)| (s.clone(), -k)).collect();
                return Ok(Scalar::monomial(c.recip(), inv));
            }
        }
        Err(Error::NotInvertible(self.to_string()))
    }

    /// Replaces symbols by scalars.
    ///
    /// Polynomial occurrences accept any replacement. A symbol inside an
    /// exponential may be replaced by an integer combination of symbols (or 0);
    /// inside a harmonic only by `±symbol` or 0.
    pub fn substitute(&self, map: &BTreeMap<Symbol, Scalar>) -> Result<Scalar> {
        let mut out = Scalar::zero();
        for (key, c) in &self.terms {
            let mut rest = TermKey::default();
            let mut factor = Scalar::constant(c.clone());
            for (s, n) in &key.powers {
                match map.get(s) {
                    Some(r) => factor = &factor * &r.pow(*n),
                    None => {
                        rest.powers.insert(s.clone(), *n);
                    }
                }
            }
            for (s, k) in &key.exps {
                match map.get(s) {
                    Some(r) => {
                        let lin = r
                            .as_integer_linear()
                            .ok_or_else(|| Error::TranscendentalSubstitution(s.clone()))?;
                        let args: Vec<(Symbol, i64)> =
                            lin.into_iter().map(|(t, m)| (t, m * k)).collect();
                        factor = &factor * &Scalar::exp_linear(&args);
                    }
                    None => {
                        rest.exps.insert(s.clone(), *k);
                    }
                }
            }
            for (s, h) in &key.harmonics {
                match map.get(s) {
                    Some(r) => {
                        let lin = r
                            .as_integer_linear()
                            .ok_or_else(|| Error::TranscendentalSubstitution(s.clone()))?;
                        let f = i64::from(h.freq);
                        let replaced = match lin.as_slice() {
                            [] => Scalar::harmonic(h.trig, s, 0),
                            [(t, m)] if m.abs() == 1 => Scalar::harmonic(h.trig, t, m * f),
                            _ => return Err(Error::TranscendentalSubstitution(s.clone())),
                        };
                        factor = &factor * &replaced;
                    }
                    None => {
                        rest.harmonics.insert(s.clone(), *h);
                    }
                }
            }
            out += &(&factor * &Scalar::monomial(Rational::one(), rest));
        }
        Ok(out)
    }

    /// Substitutes rational values for symbols that occur polynomially.
    pub fn instantiate(&self, values: &BTreeMap<Symbol, Rational>) -> Result<Scalar> {
        let transcendental = self.terms.keys().any(|k| {
            k.exps.keys().chain(k.harmonics.keys()).any(|s| values.contains_key(s))
        });
        if !transcendental {
            // polynomial in the assigned symbols: fold values into coefficients
            let mut out = Scalar::zero();
            for (key, c) in &self.terms {
                let mut c = c.clone();
                let mut key = key.clone();
                key.powers.retain(|s, n| match values.get(s) {
                    Some(v) => {
                        c *= Pow::pow(v, *n);
                        false
                    }
                    None => true,
                });
                out.add_term(key, c);
            }
            return Ok(out);
        }
        let map: BTreeMap<Symbol, Scalar> = values
            .iter()
            .map(|(s, v)| (s.clone(), Scalar::constant(v.clone())))
            .collect();
        self.substitute(&map)
    }

    /// Returns `[(sym, k)]` when this scalar is `Σ k·sym` with integer `k` and no constant.
    pub(crate) fn as_integer_linear(&self) -> Option<Vec<(Symbol, i64)>> {
        let mut out = Vec::new();
        for (key, c) in &self.terms {
            if !key.exps.is_empty() || !key.harmonics.is_empty() || key.powers.len() != 1 {
                return None;
            }
            let (s, n) = key.powers.iter().next().expect("one power");
            if *n != 1 || !c.is_integer() {
                return None;
            }
            let k = i64::try_from(c.to_integer()).ok()?;
            out.push((s.clone(), k));
        }
        Some(out)
    }

    fn mul_ref(&self, other: &Scalar) -> Scalar {
        let mut out = Scalar::zero();
        for (ka, ca) in &self.terms {
            for (kb, cb) in &other.terms {
                let c = ca * cb;
                for (pc, key) in ka.product(kb) {
                    out.add_term(key, &c * pc);
                }
            }
        }
        out
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::int(n)
    }
}

impl From<Rational> for Scalar {
    fn from(c: Rational) -> Self {
        Scalar::constant(c)
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        for (k, c) in &rhs.terms {
            self.add_term(k.clone(), c.clone());
        }
    }
}

impl AddAssign for Scalar {
    fn add_assign(&mut self, rhs: Scalar) {
        for (k, c) in rhs.terms {
            self.add_term(k, c);
        }
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        for (k, c) in &rhs.terms {
            self.add_term(k.clone(), -c.clone());
        }
    }
}

impl SubAssign for Scalar {
    fn sub_assign(&mut self, rhs: Scalar) {
        for (k, c) in rhs.terms {
            self.add_term(k, -c);
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            terms: self.terms.iter().map(|(k, c)| (k.clone(), -c)).collect(),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(mut self) -> Scalar {
        for c in self.terms.values_mut() {
            *c = -core::mem::take(c);
        }
        self
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $body:expr) => {
        impl $tr<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                let f: fn(&Scalar, &Scalar) -> Scalar = $body;
                f(self, rhs)
            }
        }
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                (&self).$method(rhs)
            }
        }
        impl $tr<Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                self.$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a, b| {
    let mut out = a.clone();
    out += b;
    out
});
forward_binop!(Sub, sub, |a, b| {
    let mut out = a.clone();
    out -= b;
    out
});
forward_binop!(Mul, mul, |a, b| a.mul_ref(b));

impl core::iter::Sum for Scalar {
    fn sum<I: Iterator<Item = Scalar>>(iter: I) -> Scalar {
        let mut acc = Scalar::zero();
        for s in iter {
            acc += s;
        }
        acc
    }
}

/// Free-function form of [`Scalar::is_zero`].
pub fn is_zero(f: &Scalar) -> bool {
    f.is_zero()
}

/// Free-function form of [`Scalar::equals`].
pub fn equals(a: &Scalar, b: &Scalar) -> bool {
    a.equals(b)
}

pub fn add(a: &Scalar, b: &Scalar) -> Scalar {
    a + b
}

pub fn mul(a: &Scalar, b: &Scalar) -> Scalar {
    a * b
}

pub fn differentiate(f: &Scalar, v: &Symbol) -> Result<Scalar> {
    f.differentiate(v)
}

pub use eval::{evaluate, evaluate_f64};

#[cfg(test)]
mod tests {
    use super::*;

    fn syms() -> (Symbol, Symbol, Symbol) {
        (
            Symbol::coordinate("s"),
            Symbol::coordinate("z"),
            Symbol::coordinate("x"),
        )
    }

    #[test]
    fn cos_squared_reduces() {
        let (_, z, _) = syms();
        let c = Scalar::cos(&z, 1);
        let expected = Scalar::ratio(1, 2) + Scalar::cos(&z, 2).scale(&rational(1, 2));
        assert_eq!(&c * &c, expected);
    }

    #[test]
    fn exponent_cancellation() {
        let (s, z, _) = syms();
        let lhs = &(&Scalar::exp(&s, -1) * &Scalar::cosh(&z, 1)) * &Scalar::exp(&s, 1);
        let expected = (Scalar::exp(&z, 1) + Scalar::exp(&z, -1)).scale(&rational(1, 2));
        assert_eq!(lhs, expected);
    }

    #[test]
    fn hyperbolic_identity() {
        let (_, z, _) = syms();
        let ch = Scalar::cosh(&z, 1);
        let sh = Scalar::sinh(&z, 1);
        assert_eq!(&ch * &ch - &sh * &sh, Scalar::one());
        assert!((&sh * &sh - &ch * &ch + Scalar::one()).is_zero());
    }

    #[test]
    fn sin_cos_product() {
        let (_, z, _) = syms();
        let lhs = Scalar::sin(&z, 1) * Scalar::cos(&z, 1);
        assert!(lhs.equals(&Scalar::sin(&z, 2).scale(&rational(1, 2))));
    }

    #[test]
    fn sin_squared_plus_cos_squared() {
        let (_, z, _) = syms();
        let s = Scalar::sin(&z, 3);
        let c = Scalar::cos(&z, 3);
        assert_eq!(&s * &s + &c * &c, Scalar::one());
    }

    #[test]
    fn derivatives() {
        let (s, z, _) = syms();
        assert_eq!(
            Scalar::exp(&s, -1).differentiate(&s).unwrap(),
            -Scalar::exp(&s, -1)
        );
        let f = -(Scalar::var(&z) * Scalar::exp(&s, -1));
        assert_eq!(f.differentiate(&z).unwrap(), -Scalar::exp(&s, -1));
        assert_eq!(
            Scalar::cos(&z, 2).differentiate(&z).unwrap(),
            Scalar::sin(&z, 2).scale(&integer(-2))
        );
    }

    #[test]
    fn parameter_derivative_rejected() {
        let p = Symbol::parameter("p12");
        let f = Scalar::var(&p);
        assert!(matches!(
            f.differentiate(&p),
            Err(Error::ParameterDerivative(_))
        ));
        let x = Symbol::coordinate("x");
        assert!(f.differentiate(&x).unwrap().is_zero());
    }

    #[test]
    fn negative_frequencies_normalize() {
        let (_, z, _) = syms();
        assert_eq!(Scalar::sin(&z, -2), -Scalar::sin(&z, 2));
        assert_eq!(Scalar::cos(&z, -2), Scalar::cos(&z, 2));
        assert!(Scalar::sin(&z, 0).is_zero());
        assert_eq!(Scalar::cos(&z, 0), Scalar::one());
    }

    #[test]
    fn inverse_of_units() {
        let (s, _, _) = syms();
        let u = Scalar::exp(&s, 2).scale(&integer(3));
        let inv = u.try_inverse().unwrap();
        assert_eq!(&u * &inv, Scalar::one());
        assert!(Scalar::var(&s).try_inverse().is_err());
    }

    #[test]
    fn substitution_into_exponent() {
        let (s, z, x) = syms();
        let f = Scalar::var(&x) * Scalar::exp(&s, 2);
        let mut map = BTreeMap::new();
        map.insert(s.clone(), -Scalar::var(&z));
        map.insert(x.clone(), Scalar::int(3));
        assert_eq!(
            f.substitute(&map).unwrap(),
            Scalar::exp(&z, -2).scale(&integer(3))
        );
        let mut bad = BTreeMap::new();
        bad.insert(s.clone(), Scalar::ratio(1, 2));
        assert!(f.substitute(&bad).is_err());
    }
}
