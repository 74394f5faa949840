//! Compatibility of Poissonizations of equivalent Jacobi structures.
//!
//! Inside each catalog row the solutions form the linear family
//! `(Λ(l), E(l))`, so the equations hold for `l + l′` as well and
//! `[P(l), P(l′)] = 0`: automorphism images never give an incompatible pair
//! there. [`family_polarization`] checks this symbolically. Incompatible pairs
//! do appear for structures related by a diffeomorphism that is not a group
//! automorphism; [`find_incompatibility_witness`] searches coordinate shears.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::{compat_pair, poissonize, PoissonBivector};
use crate::error::{Error, Result};
use crate::geometry::{pushforward, schouten};
use crate::jacobi::table1::{table1_catalog, Table1Row};
use crate::jacobi::{check_group_jacobi, push_to_group, GroupJacobi};
use crate::liealgebra::catalog_vielbein;
use crate::residual::Residuals;
use crate::symexpr::{Scalar, Symbol};

/// `[P(l), P(m)]` for the Poissonized group-level general family of a row,
/// with `m12, m13, m23` a second copy of the parameters.
pub fn family_polarization(row: &Table1Row) -> Result<Residuals> {
    let v = catalog_vielbein(row.algebra.name())?;
    let first = poissonize(&push_to_group(&row.general, &v)?)?;
    let rename: BTreeMap<Symbol, Scalar> = ["12", "13", "23"]
        .iter()
        .map(|k| {
            (
                Symbol::parameter(&format!("l{k}")),
                Scalar::var(&Symbol::parameter(&format!("m{k}"))),
            )
        })
        .collect();
    let second = PoissonBivector::new(first.field().try_map(|c| c.substitute(&rename))?)?;
    compat_pair(&first, &second)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IncompatibilityWitness {
    /// Catalog entry of the first structure, e.g. `"VI0 #1"`.
    pub source: String,
    /// Components of the diffeomorphism relating the two structures.
    pub diffeomorphism: Vec<Scalar>,
    pub p1: PoissonBivector,
    pub p2: PoissonBivector,
    /// Chart indices `(λ, μ)`; the component is `[P1,P2]^{λ s μ}`.
    pub lambda: usize,
    pub mu: usize,
    pub value: Scalar,
}

impl IncompatibilityWitness {
    pub fn describe(&self) -> String {
        let ch = self.p1.chart();
        let phi = self
            .diffeomorphism
            .iter()
            .map(|c| format!("{c}"))
            .collect::<Vec<_>>()
            .join(", ");
        format!(
            "{} pushed by ({}): [P1,P2]^({},s,{}) = {}",
            self.source,
            phi,
            ch.coord(self.lambda).name(),
            ch.coord(self.mu).name(),
            self.value
        )
    }
}

/// `x_i ↦ x_i + x_j` for `i ≠ j` together with its inverse.
fn shears(coords: &[Symbol]) -> Vec<(Vec<Scalar>, Vec<Scalar>)> {
    let n = coords.len();
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            let id: Vec<Scalar> = coords.iter().map(Scalar::var).collect();
            let mut fwd = id.clone();
            let mut inv = id;
            fwd[i] = &fwd[i] + &Scalar::var(&coords[j]);
            inv[i] = &inv[i] - &Scalar::var(&coords[j]);
            out.push((fwd, inv));
        }
    }
    out
}

/// First catalog entry and coordinate shear whose Poissonizations have a
/// nonzero `(λ, s, μ)` component of `[P1, P2]`.
pub fn find_incompatibility_witness() -> Result<Option<IncompatibilityWitness>> {
    for row in table1_catalog() {
        for entry in &row.entries {
            let j = entry.group();
            let p1 = poissonize(&j)?;
            let s = p1.chart().dim() - 1;
            for (fwd, inv) in shears(j.chart().coords()) {
                let pushed = pushforward(j.lambda(), &fwd, &inv)
                    .and_then(|l| Ok((l, pushforward(j.e(), &fwd, &inv)?)));
                let (lambda, e) = match pushed {
                    Ok(pair) => pair,
                    Err(Error::TranscendentalSubstitution(_)) => continue,
                    Err(err) => return Err(err),
                };
                let j2 = GroupJacobi::new(lambda, e)?;
                if !check_group_jacobi(&j2)?.passed() {
                    return Err(Error::NotJacobi(format!(
                        "push-forward of {} is not Jacobi",
                        entry.label()
                    )));
                }
                let p2 = poissonize(&j2)?;
                let br = schouten(p1.field(), p2.field())?;
                let hit = br
                    .components()
                    .find(|(idx, _)| idx[2] == s)
                    .map(|(idx, c)| (idx.clone(), c.clone()));
                if let Some((idx, c)) = hit {
                    // [..]^{λ s μ} = −[..]^{λ μ s}
                    return Ok(Some(IncompatibilityWitness {
                        source: entry.label(),
                        diffeomorphism: fwd,
                        lambda: idx[0],
                        mu: idx[1],
                        value: -c,
                        p1,
                        p2,
                    }));
                }
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn families_polarize() {
        for row in table1_catalog() {
            let r = family_polarization(&row).unwrap();
            assert!(r.passed(), "{}: {r}", row.algebra.name());
        }
    }

    #[test]
    fn witness_exists_and_is_genuine() {
        let w = find_incompatibility_witness().unwrap().expect("witness");
        let s = w.p1.chart().dim() - 1;
        let br = schouten(w.p1.field(), w.p2.field()).unwrap();
        assert_eq!(br.component(&[w.lambda, s, w.mu]), w.value);
        assert!(!w.value.is_zero());
        println!("{}", w.describe());
    }
}
