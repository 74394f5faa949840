use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::{self, Write};

use num_traits::{One, Signed};

use super::{Harmonic, Rational, Scalar, TermKey, Trig};

fn write_rational(out: &mut String, c: &Rational) {
    if c.is_integer() {
        let _ = write!(out, "{}", c.numer());
    } else {
        let _ = write!(out, "{}/{}", c.numer(), c.denom());
    }
}

fn linear_arg(args: &[(&str, i64)]) -> String {
    let mut out = String::new();
    for (i, (name, k)) in args.iter().enumerate() {
        let mag = k.unsigned_abs();
        if i == 0 {
            if *k < 0 {
                out.push('-');
            }
        } else if *k < 0 {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        if mag != 1 {
            let _ = write!(out, "{mag}*");
        }
        out.push_str(name);
    }
    out
}

fn factors(key: &TermKey) -> Vec<String> {
    let mut out = Vec::new();
    for (s, n) in &key.powers {
        if *n == 1 {
            out.push(String::from(s.name()));
        } else {
            let mut f = String::from(s.name());
            let _ = write!(f, "^{n}");
            out.push(f);
        }
    }
    if !key.exps.is_empty() {
        let args: Vec<(&str, i64)> = key.exps.iter().map(|(s, k)| (s.name(), *k)).collect();
        let mut f = String::from("exp(");
        f.push_str(&linear_arg(&args));
        f.push(')');
        out.push(f);
    }
    for (s, Harmonic { trig, freq }) in &key.harmonics {
        let name = match trig {
            Trig::Sin => "sin",
            Trig::Cos => "cos",
        };
        let freq = i64::from(*freq);
        let mut f = String::from(name);
        f.push('(');
        f.push_str(&linear_arg(&[(s.name(), freq)]));
        f.push(')');
        out.push(f);
    }
    out
}

impl fmt::Display for Scalar {
    /// Emits the expression grammar accepted by [`super::parse_scalar`], terms in
    /// canonical order.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut out = String::new();
        for (i, (key, c)) in self.terms().enumerate() {
            let negative = c.is_negative();
            if i == 0 {
                if negative {
                    out.push('-');
                }
            } else if negative {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let mag = c.abs();
            let fs = factors(key);
            if fs.is_empty() {
                write_rational(&mut out, &mag);
            } else {
                if !mag.is_one() {
                    write_rational(&mut out, &mag);
                    out.push('*');
                }
                out.push_str(&fs.join("*"));
            }
        }
        f.write_str(&out)
    }
}
