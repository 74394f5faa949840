//! Command pipelines. Each returns a [`Report`]; checks that fail become FAIL
//! records, and only malformed input or unusable data becomes an error.

use jacobi_core::integrable::examples::worked_system;
use jacobi_core::integrable::{
    build_system, equations_of_motion, involution_check, table2_realization, HamiltonianSystem,
};
use jacobi_core::jacobi::{check_algebra_jacobi, check_algebra_jacobi_tensor, check_group_jacobi};
use jacobi_core::liealgebra::{catalog_algebra, maurer_cartan_check};
use jacobi_core::poisson::families::bihamiltonian_families;
use jacobi_core::poisson::table3::{
    find_representative_equivalences, table3_catalog, table3_compat_matrix,
};
use jacobi_core::poisson::{
    check_poisson, class1_automorphism, class1_representative, compat_pair, constraints_hold,
    generate_constant_constraints, poisson_automorphism_act, poissonize, verify_darboux,
    Class1Params, ConstantPoissonAnsatz, PoissonBivector,
};
use jacobi_core::residual::Residuals;
use jacobi_core::sampling::{
    random_antisymmetric, random_nonzero_rational, random_rational, rng,
};
use jacobi_core::symexpr::{integer, Rational};
use jacobi_core::Error;

use crate::error::ToolError;
use crate::report::Report;
use crate::structure::{JacobiData, StructureFile};

type Result<T> = std::result::Result<T, ToolError>;

fn missing(f: &StructureFile, section: &'static str) -> ToolError {
    ToolError::MissingSection {
        file: f.name.clone(),
        section,
    }
}

/// Runs every check the file's sections allow.
pub fn cmd_check(f: &StructureFile, seed: u64) -> Result<Report> {
    let mut r = Report::new();
    let t = f.name.as_str();
    if let Some(g) = &f.algebra {
        r.verdict("algebra", format!("{t} ({})", g.name()), true, Vec::new());
        if let Some(v) = &f.vielbein {
            r.residuals("maurer-cartan", t, &maurer_cartan_check(v, g)?);
        }
    }
    if let Some(JacobiData::Algebra(a)) = &f.jacobi {
        r.residuals("jacobi-matrix", t, &check_algebra_jacobi(a));
        r.residuals("jacobi-tensor", t, &check_algebra_jacobi_tensor(a));
    }
    if let Some(j) = f.group_jacobi()? {
        r.residuals("jacobi", t, &check_group_jacobi(&j)?);
    }
    if let Some(p) = f.poisson_structure()? {
        poisson_records(&mut r, f, &p)?;
        if let Some(m) = &f.darboux {
            darboux_record(&mut r, t, m, &p, seed)?;
        }
    }
    if let Some(real) = &f.realization {
        r.verdict("realization", format!("{t} ({})", real.algebra().name()), true, Vec::new());
    }
    Ok(r)
}

fn poisson_records(r: &mut Report, f: &StructureFile, p: &PoissonBivector) -> Result<()> {
    let t = f.name.as_str();
    r.residuals("poisson", t, &check_poisson(p)?);
    if p.chart().dim() % 2 == 0 {
        let pf = p.pfaffian()?;
        r.verdict("pfaffian", t, !pf.is_zero(), vec!["pfaffian = 0".into()]);
    }
    let explicit = f.poisson.as_ref().is_some_and(|d| d.bivector.is_some());
    if explicit {
        if let Some(j) = f.group_jacobi()? {
            let computed = poissonize(&j)?;
            let mut diff = Residuals::new();
            for (idx, c) in computed.field().sub(p.field())?.components() {
                let names: Vec<&str> = idx.iter().map(|&i| p.chart().coord(i).name()).collect();
                diff.push(format!("P^({})", names.join(",")), c.clone());
            }
            r.residuals("poissonize-match", t, &diff);
        }
    }
    Ok(())
}

fn darboux_record(
    r: &mut Report,
    t: &str,
    m: &jacobi_core::poisson::DarbouxMap,
    p: &PoissonBivector,
    seed: u64,
) -> Result<bool> {
    let d = verify_darboux(m, p, seed)?;
    let mut detail: Vec<String> = d.brackets.iter().map(|x| format!("{} = {}", x.label, x.value)).collect();
    if d.ranks.iter().any(|&k| k != d.expected_rank) {
        detail.push(format!("ranks {:?}, expected {}", d.ranks, d.expected_rank));
    }
    r.verdict("darboux", t, d.passed(), detail);
    Ok(d.passed())
}

/// Poissonizes the group-level Jacobi pair and echoes `P` and its Pfaffian.
pub fn cmd_poissonize(f: &StructureFile) -> Result<Report> {
    let mut r = Report::new();
    let t = f.name.as_str();
    let j = f.group_jacobi()?.ok_or_else(|| missing(f, "jacobi"))?;
    r.residuals("jacobi", t, &check_group_jacobi(&j)?);
    let computed = poissonize(&j)?;
    // An explicit [poisson] bivector is checked and compared with `computed`.
    let p = f.poisson_structure()?.unwrap_or_else(|| computed.clone());
    poisson_records(&mut r, f, &p)?;
    r.echo("P", t, computed.field());
    r.echo("pfaffian", t, computed.pfaffian()?);
    Ok(r)
}

pub fn cmd_darboux(f: &StructureFile, seed: u64) -> Result<Report> {
    let mut r = Report::new();
    let m = f.darboux.as_ref().ok_or_else(|| missing(f, "darboux"))?;
    let p = f.poisson_structure()?.ok_or_else(|| missing(f, "poisson"))?;
    darboux_record(&mut r, &f.name, m, &p, seed)?;
    Ok(r)
}

/// Builds the integrable system with `S_hamiltonian` as Hamiltonian. The
/// realization defaults to the catalog one for the file's algebra.
pub fn cmd_system(f: &StructureFile, hamiltonian: usize, seed: u64) -> Result<Report> {
    let mut r = Report::new();
    let t = f.name.as_str();
    let j = f.group_jacobi()?.ok_or_else(|| missing(f, "jacobi"))?;
    let m = f.darboux.as_ref().ok_or_else(|| missing(f, "darboux"))?;
    let real = match (&f.realization, &f.algebra) {
        (Some(real), _) => real.clone(),
        (None, Some(g)) => table2_realization(g.name()).ok_or_else(|| missing(f, "realization"))?,
        (None, None) => return Err(missing(f, "realization")),
    };
    r.residuals("jacobi", t, &check_group_jacobi(&j)?);
    let p = poissonize(&j)?;
    if !darboux_record(&mut r, t, m, &p, seed)? {
        return Ok(r);
    }
    let sys = match build_system(&j, m, &real, hamiltonian, seed) {
        Ok(sys) => sys,
        Err(Error::StructureConstants(a, b)) => {
            r.verdict(
                "structure-constants",
                t,
                false,
                vec![format!("pair (S{a}, S{b}) does not reproduce the algebra")],
            );
            return Ok(r);
        }
        Err(e) => return Err(e.into()),
    };
    r.verdict("structure-constants", t, true, Vec::new());
    system_records(&mut r, t, &sys, seed)?;
    Ok(r)
}

fn system_records(r: &mut Report, t: &str, sys: &HamiltonianSystem, seed: u64) -> Result<()> {
    let inv = involution_check(sys, seed)?;
    let mut detail: Vec<String> = inv.brackets.iter().map(|x| format!("{} = {}", x.label, x.value)).collect();
    if sys.invariant.is_none() {
        detail.push("no independent invariant among the symmetries".into());
    } else if !inv.passed() {
        detail.push(format!("ranks {:?}", inv.ranks));
    }
    r.verdict("involution", t, inv.passed(), detail);
    for (k, s) in sys.symmetries.iter().enumerate() {
        r.echo("symmetry", format!("S{}", k + 1), s);
    }
    r.echo("hamiltonian", format!("H = S{}", sys.h_index), &sys.hamiltonian);
    if let Some((k, s)) = &sys.invariant {
        r.echo("invariant", format!("S{k}"), s);
    }
    for (c, v) in equations_of_motion(sys)? {
        r.echo("motion", format!("d{c}/dt"), v);
    }
    Ok(())
}

/// Pairwise compatibility `[P_i, P_j] = 0` for `i ≤ j`.
pub fn cmd_compat(files: &[StructureFile]) -> Result<Report> {
    let ps = files
        .iter()
        .map(|f| f.poisson_structure()?.ok_or_else(|| missing(f, "poisson")))
        .collect::<Result<Vec<_>>>()?;
    let mut r = Report::new();
    for i in 0..ps.len() {
        for j in i..ps.len() {
            let target = format!("{} ~ {}", files[i].name, files[j].name);
            r.residuals("compat", target, &compat_pair(&ps[i], &ps[j])?);
        }
    }
    Ok(r)
}

/// Constant Poisson structures on II⊕ℝ: constraint set, class (1) normal
/// form, the twelve representatives, their compatibility and orbits.
pub fn cmd_classify_ii_r(seed: u64) -> Result<Report> {
    let mut r = Report::new();
    let g = catalog_algebra("II+R").expect("catalog algebra");
    let a = ConstantPoissonAnsatz::new(g.clone());
    let cs = generate_constant_constraints(&a);
    for (k, c) in cs.iter().enumerate() {
        r.echo("constraint", format!("C{}", k + 1), c);
    }
    let mut rng = rng(seed);
    let sample = |p23: Rational, rng: &mut _| {
        let mut m = random_antisymmetric(rng, 4);
        m[2][1] = -p23.clone();
        m[1][2] = p23;
        m
    };
    let (mut inside, mut outside) = (0, 0);
    for _ in 0..100 {
        if constraints_hold(&a, &cs, &sample(integer(0), &mut rng))? {
            inside += 1;
        }
        let p23 = random_nonzero_rational(&mut rng);
        if !constraints_hold(&a, &cs, &sample(p23, &mut rng))? {
            outside += 1;
        }
    }
    r.verdict(
        "constraints",
        "p23 = 0 solves, p23 != 0 fails",
        inside == 100 && outside == 100,
        vec![format!("{inside}/100 solutions accepted, {outside}/100 non-solutions rejected")],
    );

    let mut done = 0;
    let mut class1_ok = true;
    while done < 3 {
        let p = sample(integer(0), &mut rng);
        let f = Class1Params {
            a21: random_rational(&mut rng),
            a24: random_rational(&mut rng),
            a31: random_rational(&mut rng),
            a32: random_nonzero_rational(&mut rng),
        };
        let Ok(aut) = class1_automorphism(&p, &f) else {
            continue;
        };
        class1_ok &= poisson_automorphism_act(&g, &p, &aut)? == class1_representative();
        done += 1;
    }
    r.verdict("class-1", "3 random solutions", class1_ok, vec!["image differs from the normal form".into()]);

    let reps = table3_catalog();
    for e in &reps {
        let target = format!("P'{}", e.index);
        let pushed = e.pushed()?;
        r.verdict("push-match", target.as_str(), pushed == e.group_printed, vec![format!("pushed {pushed}")]);
        let p = e.group();
        r.residuals("poisson", target.as_str(), &check_poisson(&p)?);
        r.verdict("pfaffian", target.as_str(), !p.pfaffian()?.is_zero(), vec!["pfaffian = 0".into()]);
    }
    let m = table3_compat_matrix()?;
    let bad: Vec<String> = m
        .pairs()
        .filter(|(_, _, res)| !res.passed())
        .map(|(i, j, res)| format!("P'{} ~ P'{}: {res}", i + 1, j + 1))
        .collect();
    r.verdict("compat-matrix", format!("{} pairs", m.pairs().count()), bad.is_empty(), bad);
    for w in find_representative_equivalences(1)? {
        r.echo("orbit", format!("P'{} -> P'{}", w.from, w.to), rational_matrix(&w.automorphism));
    }
    Ok(r)
}

fn rational_matrix(m: &[Vec<Rational>]) -> String {
    let rows: Vec<String> = m
        .iter()
        .map(|row| {
            let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
            format!("[{}]", cells.join(", "))
        })
        .collect();
    format!("[{}]", rows.join(", "))
}

/// Reproduces a worked example: `3.1`..`3.5`, `4.1`..`4.5` or `appendix`.
pub fn cmd_catalog(example: &str, seed: u64) -> Result<Report> {
    if example == "appendix" {
        return cmd_classify_ii_r(seed);
    }
    if let Some(w) = worked_system(example) {
        let mut r = Report::new();
        let t = w.describe();
        let j = w.entry.group();
        r.residuals("jacobi", t.as_str(), &check_group_jacobi(&j)?);
        let p = poissonize(&j)?;
        r.verdict("poissonize-match", t.as_str(), p.field() == &w.entry.poisson(), vec![format!("got {}", p.field())]);
        r.verdict("pfaffian", t.as_str(), !p.pfaffian()?.is_zero(), vec!["pfaffian = 0".into()]);
        if let Some(note) = w.erratum {
            r.echo("erratum", t.as_str(), note);
        }
        darboux_record(&mut r, &t, &w.darboux, &p, seed)?;
        let sys = w.build(seed)?;
        r.verdict("structure-constants", t.as_str(), true, Vec::new());
        system_records(&mut r, &t, &sys, seed)?;
        return Ok(r);
    }
    let family = ["4.1", "4.2", "4.3", "4.4", "4.5"]
        .iter()
        .position(|&l| l == example)
        .ok_or_else(|| ToolError::UnknownExample(example.to_string()))?;
    let fam = bihamiltonian_families()?.swap_remove(family);
    let mut r = Report::new();
    for (i, j, res) in fam.check()?.pairs() {
        r.residuals("compat", format!("{0} #{1} ~ {0} #{2}", fam.algebra, i + 1, j + 1), res);
    }
    Ok(r)
}
