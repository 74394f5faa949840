//! Labelled nonzero residuals produced by verification routines.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::symexpr::Scalar;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Residual {
    pub label: String,
    pub value: Scalar,
}

/// Collection of nonzero residuals; empty means the check passed.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Residuals {
    entries: Vec<Residual>,
}

impl Residuals {
    pub fn new() -> Self {
        Residuals::default()
    }

    /// Records `value` under `label` unless it is zero.
    pub fn push(&mut self, label: impl Into<String>, value: Scalar) {
        if !value.is_zero() {
            self.entries.push(Residual {
                label: label.into(),
                value,
            });
        }
    }

    pub fn extend(&mut self, other: Residuals) {
        self.entries.extend(other.entries);
    }

    pub fn passed(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Residual> {
        self.entries.iter()
    }
}

impl fmt::Display for Residuals {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, r) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str("; ")?;
            }
            write!(f, "{} = {}", r.label, r.value)?;
        }
        Ok(())
    }
}
