//! Families of mutually compatible Poisson structures on `G × ℝ`: the
//! Poissonizations of every catalog entry of one algebra.

use alloc::string::String;
use alloc::vec::Vec;

use super::{compat_matrix, poissonize, CompatMatrix, PoissonBivector};
use crate::error::Result;
use crate::jacobi::table1::table1_catalog;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompatibleFamily {
    pub algebra: String,
    pub members: Vec<PoissonBivector>,
}

impl CompatibleFamily {
    pub fn check(&self) -> Result<CompatMatrix> {
        compat_matrix(&self.members)
    }

    /// Number of unordered pairs, self-pairs included.
    pub fn pair_count(&self) -> usize {
        let n = self.members.len();
        n * (n + 1) / 2
    }
}

pub fn bihamiltonian_families() -> Result<Vec<CompatibleFamily>> {
    table1_catalog()
        .into_iter()
        .map(|row| {
            Ok(CompatibleFamily {
                algebra: String::from(row.algebra.name()),
                members: row
                    .entries
                    .iter()
                    .map(|e| poissonize(&e.group()))
                    .collect::<Result<_>>()?,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn families_are_compatible() {
        let fams = bihamiltonian_families().unwrap();
        let sizes: Vec<usize> = fams.iter().map(|f| f.members.len()).collect();
        assert_eq!(sizes, [4, 4, 4, 4, 6]);
        assert_eq!(fams.iter().map(CompatibleFamily::pair_count).sum::<usize>(), 61);
        for f in &fams {
            assert!(f.check().unwrap().passed(), "{}", f.algebra);
        }
    }
}
