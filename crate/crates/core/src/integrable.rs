//! Hamiltonian systems on `G × ℝ` built from a realization of the Lie algebra
//! by vector fields on `ℝ²` and a Darboux map of the Poissonized structure.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::geometry::{hamiltonian_vector_field, lie_bracket, Chart, MultivectorField};
use crate::jacobi::GroupJacobi;
use crate::liealgebra::{catalog_algebra, LieAlgebraDef};
use crate::poisson::{poissonize, verify_darboux, DarbouxMap, PoissonBivector};
use crate::residual::Residuals;
use crate::sampling::{chart_points, jacobian_ranks};
use crate::symexpr::{parse_scalar, Context, Scalar, Symbol};

pub mod examples;

/// Generators `X_i = c_i^k(q₁,q₂) ∂_{q_k}` obeying the algebra's commutators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Realization {
    algebra: LieAlgebraDef,
    generators: Vec<MultivectorField>,
}

impl Realization {
    pub fn new(algebra: LieAlgebraDef, generators: Vec<MultivectorField>) -> Result<Self> {
        if generators.len() != algebra.dim() {
            return Err(Error::WrongFunctionCount {
                expected: algebra.dim(),
                found: generators.len(),
            });
        }
        let chart = generators[0].chart().clone();
        for g in &generators {
            g.require_grade(1)?;
            if *g.chart() != chart {
                return Err(Error::ChartMismatch);
            }
        }
        let n = algebra.dim();
        for i in 0..n {
            for j in i + 1..n {
                let mut rhs = MultivectorField::zero(&chart, 1)?;
                for (a, b, k, c) in algebra.nonzero_constants() {
                    if (a, b) == (i, j) {
                        rhs = rhs.add(&generators[k].scale(&Scalar::constant(c.clone())))?;
                    }
                }
                if lie_bracket(&generators[i], &generators[j])? != rhs {
                    return Err(Error::Realization(format!(
                        "[X{}, X{}] does not match the structure constants",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        Ok(Realization {
            algebra,
            generators,
        })
    }

    /// Parses operators such as `-q1*(q2 - 1)*d1 - q2^2*d2`, where `d_k`
    /// stands for `∂/∂q_k`.
    pub fn parse(algebra: LieAlgebraDef, operators: &[&str]) -> Result<Self> {
        let chart = Chart::from_names(&["q1", "q2"])?;
        let mut ctx = Context::with_coordinates(&["q1", "q2"]);
        let ds = [ctx.coordinate("d1")?, ctx.coordinate("d2")?];
        let zero: BTreeMap<Symbol, Scalar> =
            ds.iter().map(|d| (d.clone(), Scalar::zero())).collect();
        let mut gens = Vec::new();
        for (i, text) in operators.iter().enumerate() {
            let op = parse_scalar(text, &ctx)?;
            let mut comps = Vec::new();
            for d in &ds {
                let c = op.differentiate(d)?;
                if c.symbols().iter().any(|s| ds.contains(s)) {
                    return Err(Error::Realization(format!("X{} is not first order", i + 1)));
                }
                comps.push(c);
            }
            if !op.substitute(&zero)?.is_zero() {
                return Err(Error::Realization(format!("X{} has a zeroth-order term", i + 1)));
            }
            gens.push(MultivectorField::vector(&chart, comps)?);
        }
        Realization::new(algebra, gens)
    }

    pub fn algebra(&self) -> &LieAlgebraDef {
        &self.algebra
    }

    pub fn generators(&self) -> &[MultivectorField] {
        &self.generators
    }
}

/// Realizations of II, III, IV, VI₀ and VII₀ on `ℝ²`.
pub fn table2_catalog() -> Vec<Realization> {
    let rows: [(&str, [&str; 3]); 5] = [
        ("II", ["d1", "d2", "q2*d1"]),
        ("III", ["(q1 + q2)*(d1 + d2)", "d1", "d2"]),
        ("IV", ["-q1*(q2 - 1)*d1 - q2^2*d2", "d1", "q2*d1"]),
        ("VI0", ["d1", "d2", "q2*d1 + q1*d2"]),
        ("VII0", ["d1", "d2", "q2*d1 - q1*d2"]),
    ];
    rows.iter()
        .map(|(name, ops)| {
            Realization::parse(catalog_algebra(name).expect("catalog algebra"), ops)
                .expect("catalog realization")
        })
        .collect()
}

pub fn table2_realization(name: &str) -> Option<Realization> {
    table2_catalog().into_iter().find(|r| r.algebra.name() == name)
}

/// Phase-space chart `(q1, q2, p1, p2)`.
pub fn phase_chart() -> Chart {
    Chart::from_names(&["q1", "q2", "p1", "p2"]).expect("chart")
}

/// Canonical bivector with `{q_i, p_i} = 1` on [`phase_chart`].
pub fn canonical_poisson() -> PoissonBivector {
    let chart = phase_chart();
    PoissonBivector::new(
        MultivectorField::bivector(&chart, &[(0, 2, Scalar::one()), (1, 3, Scalar::one())])
            .expect("bivector"),
    )
    .expect("grade 2")
}

/// `c(q)∂_{q_k} ↦ −c(q) p_k`, on [`phase_chart`].
pub fn momentum_substitute(r: &Realization) -> Vec<Scalar> {
    let chart = phase_chart();
    r.generators
        .iter()
        .map(|x| {
            let mut s = Scalar::zero();
            for (idx, c) in x.components() {
                s -= c * &Scalar::var(chart.coord(2 + idx[0]));
            }
            s
        })
        .collect()
}

/// Residuals of `{S_i, S_j} − f_{ij}^k S_k` under `p`.
pub fn check_structure_constants(
    g: &LieAlgebraDef,
    s: &[Scalar],
    p: &PoissonBivector,
) -> Result<Residuals> {
    let n = g.dim();
    let mut out = Residuals::new();
    for i in 0..n {
        for j in i + 1..n {
            let mut expected = Scalar::zero();
            for k in 0..n {
                expected += &s[k].scale(&g.structure_constant(i, j, k));
            }
            out.push(
                format!("{{S{},S{}}}", i + 1, j + 1),
                p.bracket(&s[i], &s[j])? - expected,
            );
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HamiltonianSystem {
    pub algebra: LieAlgebraDef,
    pub poisson: PoissonBivector,
    pub darboux: DarbouxMap,
    pub symmetries: Vec<Scalar>,
    /// 1-based index of the symmetry used as Hamiltonian.
    pub h_index: usize,
    pub hamiltonian: Scalar,
    /// `(k, S_k)` with `{H, S_k} = 0` and `(H, S_k)` independent, `k` 1-based.
    pub invariant: Option<(usize, Scalar)>,
}

/// Transports the momentum realization through the Darboux map and checks
/// the structure constants under the Poissonized bracket.
pub fn build_system(
    j: &GroupJacobi,
    m: &DarbouxMap,
    r: &Realization,
    h_index: usize,
    seed: u64,
) -> Result<HamiltonianSystem> {
    let n = r.algebra.dim();
    if h_index == 0 || h_index > n {
        return Err(Error::IndexOutOfRange(h_index));
    }
    let p = poissonize(j)?;
    let report = verify_darboux(m, &p, seed)?;
    if !report.passed() {
        return Err(Error::Darboux(format!(
            "{}; ranks {:?}",
            report.brackets, report.ranks
        )));
    }
    let phase = phase_chart();
    let mut subst = BTreeMap::new();
    for (k, f) in m.functions().into_iter().enumerate() {
        subst.insert(phase.coord(k).clone(), f);
    }
    let symmetries = momentum_substitute(r)
        .iter()
        .map(|s| s.substitute(&subst))
        .collect::<Result<Vec<_>>>()?;
    if let Some(bad) = check_structure_constants(&r.algebra, &symmetries, &p)?.iter().next() {
        let (i, jx) = parse_pair(&bad.label);
        return Err(Error::StructureConstants(i, jx));
    }
    let hamiltonian = symmetries[h_index - 1].clone();
    let points = chart_points(p.chart(), 3, seed);
    let mut invariant = None;
    for (k, sk) in symmetries.iter().enumerate() {
        if k + 1 == h_index || !p.bracket(&hamiltonian, sk)?.is_zero() {
            continue;
        }
        let ranks = jacobian_ranks(&[hamiltonian.clone(), sk.clone()], p.chart(), &points)?;
        if ranks.iter().all(|&rk| rk == 2) {
            invariant = Some((k + 1, sk.clone()));
            break;
        }
    }
    Ok(HamiltonianSystem {
        algebra: r.algebra.clone(),
        poisson: p,
        darboux: m.clone(),
        symmetries,
        h_index,
        hamiltonian,
        invariant,
    })
}

fn parse_pair(label: &str) -> (usize, usize) {
    let digits: Vec<usize> = label
        .split(|c: char| !c.is_ascii_digit())
        .filter_map(|t| t.parse().ok())
        .collect();
    (digits[0], digits[1])
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvolutionReport {
    pub brackets: Residuals,
    /// Jacobian rank of `(H, invariant)` at each sampled point.
    pub ranks: Vec<usize>,
}

impl InvolutionReport {
    pub fn passed(&self) -> bool {
        self.brackets.passed() && !self.ranks.is_empty() && self.ranks.iter().all(|&r| r == 2)
    }
}

/// `{H, H}` and `{H, I}` exactly, plus the rank of `d(H, I)` at three points.
pub fn involution_check(sys: &HamiltonianSystem, seed: u64) -> Result<InvolutionReport> {
    let p = &sys.poisson;
    let h = &sys.hamiltonian;
    let mut brackets = Residuals::new();
    brackets.push("{H,H}", p.bracket(h, h)?);
    let mut ranks = Vec::new();
    if let Some((k, inv)) = &sys.invariant {
        brackets.push(format!("{{H,S{k}}}"), p.bracket(h, inv)?);
        let points = chart_points(p.chart(), 3, seed);
        ranks = jacobian_ranks(&[h.clone(), inv.clone()], p.chart(), &points)?;
    }
    Ok(InvolutionReport { brackets, ranks })
}

/// `ẋ^μ = P^{μν} ∂_ν H` for each chart coordinate.
pub fn equations_of_motion(sys: &HamiltonianSystem) -> Result<Vec<(Symbol, Scalar)>> {
    let x = hamiltonian_vector_field(&sys.hamiltonian, sys.poisson.field())?;
    let chart = sys.poisson.chart();
    Ok((0..chart.dim())
        .map(|mu| (chart.coord(mu).clone(), x.component(&[mu])))
        .collect())
}
