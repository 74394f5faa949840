//! The five worked integrable systems: a catalog Jacobi structure, a Darboux map of
//! its Poissonization, the catalog realization, and the printed symmetry
//! functions, Hamiltonian and invariant.

use alloc::string::String;
use alloc::vec::Vec;

use super::{build_system, table2_realization, HamiltonianSystem};
use crate::error::Result;
use crate::jacobi::table1::{table1_catalog, Table1Entry};
use crate::poisson::DarbouxMap;
use crate::symexpr::{parse_scalar, Context, Scalar};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WorkedSystem {
    pub label: &'static str,
    pub algebra: &'static str,
    pub entry: Table1Entry,
    /// Darboux map used for the build (printed map unless corrected).
    pub darboux: DarbouxMap,
    pub printed_darboux: DarbouxMap,
    pub h_index: usize,
    /// Expected symmetry functions for [`Self::darboux`].
    pub symmetries: Vec<Scalar>,
    pub printed_symmetries: Vec<Scalar>,
    pub printed_hamiltonian: Scalar,
    /// 1-based index of the printed second invariant.
    pub printed_invariant: usize,
    /// Printed brackets `(i, j, rhs)` among the symmetries.
    pub printed_brackets: Vec<(usize, usize, Scalar)>,
    pub erratum: Option<&'static str>,
}

impl WorkedSystem {
    pub fn build(&self, seed: u64) -> Result<HamiltonianSystem> {
        let r = table2_realization(self.algebra).expect("catalog realization");
        build_system(&self.entry.group(), &self.darboux, &r, self.h_index, seed)
    }

    pub fn describe(&self) -> String {
        alloc::format!("{} ({} #{})", self.label, self.algebra, self.entry.index)
    }
}

struct Spec {
    label: &'static str,
    algebra: &'static str,
    entry: usize,
    darboux: [&'static str; 4],
    symmetries: [&'static str; 3],
    h_index: usize,
    invariant: usize,
    brackets: &'static [(usize, usize, &'static str)],
    /// Corrected Darboux map and symmetries with a note.
    correction: Option<([&'static str; 4], [&'static str; 3], &'static str)>,
}

const SPECS: &[Spec] = &[
    Spec {
        label: "3.1",
        algebra: "II",
        entry: 1,
        darboux: ["x", "y", "exp(s)", "z*exp(s)"],
        symmetries: ["-exp(s)", "-z*exp(s)", "-y*exp(s)"],
        h_index: 3,
        invariant: 1,
        brackets: &[(2, 3, "-exp(s)")],
        correction: None,
    },
    Spec {
        label: "3.2",
        algebra: "III",
        entry: 1,
        darboux: ["-exp(s)*y", "x", "s", "z*exp(s)"],
        symmetries: ["(exp(s)*y - x)*(s + z*exp(s))", "-s", "-z*exp(s)"],
        h_index: 2,
        invariant: 3,
        brackets: &[(1, 2, "s + (y + z)*exp(s)"), (1, 3, "s + (y + z)*exp(s)")],
        correction: Some((
            ["-exp(s)*y", "x", "s", "(y + z)*exp(s)"],
            ["(exp(s)*y - x)*(s + (y + z)*exp(s))", "-s", "-(y + z)*exp(s)"],
            "printed p2 = z*exp(s) gives {p1,p2} = -1; p2 = (y + z)*exp(s) is canonical, and S1, S3 follow",
        )),
    },
    Spec {
        label: "3.3",
        algebra: "IV",
        entry: 1,
        darboux: ["x", "y", "(y - z)*exp(s)", "exp(s)"],
        symmetries: [
            "x*(y - 1)*(y - z)*exp(s) + y^2*exp(s)",
            "(-y + z)*exp(s)",
            "y*(-y + z)*exp(s)",
        ],
        h_index: 2,
        invariant: 3,
        brackets: &[],
        correction: Some((
            ["x + s", "y", "(y - z)*exp(s)", "exp(s)"],
            [
                "(x + s)*(y - 1)*(y - z)*exp(s) + y^2*exp(s)",
                "(-y + z)*exp(s)",
                "y*(-y + z)*exp(s)",
            ],
            "printed q1 = x gives {q1,q2} = exp(-s); q1 = x + s is canonical, and S1 follows",
        )),
    },
    Spec {
        label: "3.4",
        algebra: "VI0",
        entry: 2,
        darboux: ["x", "y", "cosh(z)*exp(s)", "sinh(z)*exp(s)"],
        symmetries: [
            "-cosh(z)*exp(s)",
            "-sinh(z)*exp(s)",
            "-y*cosh(z)*exp(s) - x*sinh(z)*exp(s)",
        ],
        h_index: 1,
        invariant: 2,
        brackets: &[(1, 3, "-sinh(z)*exp(s)"), (2, 3, "-cosh(z)*exp(s)")],
        correction: None,
    },
    Spec {
        label: "3.5",
        algebra: "VII0",
        entry: 1,
        darboux: ["x", "y", "cos(z)*exp(s)", "sin(z)*exp(s)"],
        symmetries: [
            "-cos(z)*exp(s)",
            "-exp(s)*sin(z)",
            "-y*cos(z)*exp(s) + x*exp(s)*sin(z)",
        ],
        h_index: 1,
        invariant: 2,
        brackets: &[(1, 3, "exp(s)*sin(z)"), (2, 3, "-cos(z)*exp(s)")],
        correction: None,
    },
];

pub fn worked_systems() -> Vec<WorkedSystem> {
    let ctx = Context::with_coordinates(&["x", "y", "z", "s"]);
    let parse = |t: &str| parse_scalar(t, &ctx).expect("catalog expression");
    let table = table1_catalog();
    SPECS
        .iter()
        .map(|s| {
            let row = table
                .iter()
                .find(|r| r.algebra.name() == s.algebra)
                .expect("catalog row");
            let map = |d: &[&str; 4]| {
                let f: Vec<Scalar> = d.iter().map(|t| parse(t)).collect();
                DarbouxMap::new(f[..2].to_vec(), f[2..].to_vec())
            };
            let printed_darboux = map(&s.darboux);
            let printed_symmetries: Vec<Scalar> = s.symmetries.iter().map(|t| parse(t)).collect();
            let (darboux, symmetries, erratum) = match &s.correction {
                Some((d, sym, note)) => (
                    map(d),
                    sym.iter().map(|t| parse(t)).collect::<Vec<_>>(),
                    Some(*note),
                ),
                None => (printed_darboux.clone(), printed_symmetries.clone(), None),
            };
            WorkedSystem {
                label: s.label,
                algebra: s.algebra,
                entry: row.entries[s.entry - 1].clone(),
                darboux,
                printed_darboux,
                h_index: s.h_index,
                printed_hamiltonian: printed_symmetries[s.h_index - 1].clone(),
                symmetries,
                printed_symmetries,
                printed_invariant: s.invariant,
                printed_brackets: s
                    .brackets
                    .iter()
                    .map(|(i, j, t)| (*i, *j, parse(t)))
                    .collect(),
                erratum,
            }
        })
        .collect()
}

pub fn worked_system(label: &str) -> Option<WorkedSystem> {
    worked_systems().into_iter().find(|w| w.label == label)
}
