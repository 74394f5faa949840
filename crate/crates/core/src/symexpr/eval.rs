use alloc::collections::BTreeMap;
use alloc::string::ToString;

use num_traits::{ToPrimitive, Zero};

use super::{Rational, Scalar, Symbol, Trig};
use crate::error::{Error, Result};

/// Exact evaluation at a rational point.
///
/// Every symbol of `f` must be assigned. Exponential and harmonic factors are
/// exact only where their argument vanishes; any other transcendental value is
/// reported as [`Error::NotRational`] and has to go through [`evaluate_f64`].
pub fn evaluate(f: &Scalar, point: &BTreeMap<Symbol, Rational>) -> Result<Rational> {
    let mut total = Rational::zero();
    for (key, c) in f.terms() {
        let mut value = c.clone();
        for (s, n) in &key.powers {
            let v = point.get(s).ok_or_else(|| Error::Unassigned(s.clone()))?;
            value *= num_traits::pow(v.clone(), *n as usize);
        }
        let mut exponent = Rational::zero();
        for (s, k) in &key.exps {
            let v = point.get(s).ok_or_else(|| Error::Unassigned(s.clone()))?;
            exponent += v * super::integer(*k);
        }
        if !exponent.is_zero() {
            return Err(Error::NotRational(f.to_string()));
        }
        for (s, h) in &key.harmonics {
            let v = point.get(s).ok_or_else(|| Error::Unassigned(s.clone()))?;
            if !v.is_zero() {
                return Err(Error::NotRational(f.to_string()));
            }
            if h.trig == Trig::Sin {
                value = Rational::zero();
            }
        }
        total += value;
    }
    Ok(total)
}

pub(crate) fn rational_to_f64(c: &Rational) -> f64 {
    c.to_f64().unwrap_or_else(|| {
        c.numer().to_f64().unwrap_or(f64::NAN) / c.denom().to_f64().unwrap_or(f64::NAN)
    })
}

/// Double-precision evaluation (about 15 significant digits for well-conditioned sums).
pub fn evaluate_f64(f: &Scalar, point: &BTreeMap<Symbol, f64>) -> Result<f64> {
    let mut total = 0.0;
    for (key, c) in f.terms() {
        let mut value = rational_to_f64(c);
        for (s, n) in &key.powers {
            let v = point.get(s).ok_or_else(|| Error::Unassigned(s.clone()))?;
            value *= libm::pow(*v, f64::from(*n));
        }
        let mut exponent = 0.0;
        for (s, k) in &key.exps {
            let v = point.get(s).ok_or_else(|| Error::Unassigned(s.clone()))?;
            exponent += v * (*k as f64);
        }
        value *= libm::exp(exponent);
        for (s, h) in &key.harmonics {
            let v = point.get(s).ok_or_else(|| Error::Unassigned(s.clone()))?;
            let arg = f64::from(h.freq) * v;
            value *= match h.trig {
                Trig::Sin => libm::sin(arg),
                Trig::Cos => libm::cos(arg),
            };
        }
        total += value;
    }
    Ok(total)
}

impl Scalar {
    /// Convenience wrapper around [`evaluate`].
    pub fn evaluate(&self, point: &BTreeMap<Symbol, Rational>) -> Result<Rational> {
        evaluate(self, point)
    }

    pub fn evaluate_f64(&self, point: &BTreeMap<Symbol, f64>) -> Result<f64> {
        evaluate_f64(self, point)
    }

    /// Evaluates at a rational point in floating point.
    pub fn evaluate_f64_at(&self, point: &BTreeMap<Symbol, Rational>) -> Result<f64> {
        let p: BTreeMap<Symbol, f64> = point
            .iter()
            .map(|(s, v)| (s.clone(), rational_to_f64(v)))
            .collect();
        evaluate_f64(self, &p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symexpr::{integer, parse_scalar, Context};

    #[test]
    fn exact_point() {
        let ctx = Context::with_coordinates(&["z", "s"]);
        let f = parse_scalar("z*exp(s)", &ctx).unwrap();
        let mut p = BTreeMap::new();
        p.insert(Symbol::coordinate("z"), integer(2));
        p.insert(Symbol::coordinate("s"), integer(0));
        assert_eq!(evaluate(&f, &p).unwrap(), integer(2));
        p.insert(Symbol::coordinate("s"), integer(1));
        assert!(matches!(evaluate(&f, &p), Err(Error::NotRational(_))));
        p.remove(&Symbol::coordinate("z"));
        assert!(matches!(evaluate(&f, &p), Err(Error::Unassigned(_))));
    }

    #[test]
    fn parameter_point() {
        let mut ctx = Context::new();
        for p in ["p12", "p34", "p13", "p24"] {
            ctx.parameter(p).unwrap();
        }
        let f = parse_scalar("p12*p34 - p13*p24", &ctx).unwrap();
        let mut p = BTreeMap::new();
        for (n, v) in [("p12", 1), ("p34", 1), ("p13", 0), ("p24", 1)] {
            p.insert(Symbol::parameter(n), integer(v));
        }
        assert_eq!(evaluate(&f, &p).unwrap(), integer(1));
    }

    #[test]
    fn float_identity() {
        let ctx = Context::with_coordinates(&["z"]);
        let f = parse_scalar("cosh(z)^2 - sinh(z)^2", &ctx).unwrap();
        // canonical form already collapsed to 1; evaluate the unexpanded pieces too
        let ch = parse_scalar("cosh(z)", &ctx).unwrap();
        let sh = parse_scalar("sinh(z)", &ctx).unwrap();
        let mut p = BTreeMap::new();
        p.insert(Symbol::coordinate("z"), 1.0);
        let v = ch.evaluate_f64(&p).unwrap().powi(2) - sh.evaluate_f64(&p).unwrap().powi(2);
        assert!((v - 1.0).abs() < 1e-12);
        assert!((f.evaluate_f64(&p).unwrap() - 1.0).abs() < 1e-12);
    }
}
