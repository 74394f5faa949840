//! Structure-definition files.
//!
//! An INI-like text format: `[section]` headers, `key = value` lines, `#`
//! comments. Values use the expression grammar of `jacobi_core::symexpr`.
//!
//! ```text
//! [algebra]
//! name = II                      # catalog algebra, or give dim + brackets
//! dim = 3
//! bracket = [X2, X3] -> X1
//!
//! [vielbein]                     # optional for catalog algebras
//! chart = x, y, z
//! e1 = 1, 0, 0                   # frame row e_1^mu
//!
//! [jacobi]
//! level = group                  # or algebra (generators X1..Xn)
//! lambda = x,z: -z; y,z: 1       # components, or a matrix [[..], [..]]
//! E = x: -1                      # components, or a vector [.., ..]
//! params = l12, l13              # optional free parameters
//!
//! [poisson]
//! plus_r = true                  # chart is the jacobi chart plus s
//! P = x,z: -z*exp(-s); x,s: exp(-s); y,z: exp(-s)
//!
//! [darboux]
//! q1 = x
//! p1 = exp(s)
//!
//! [realization]
//! X3 = q2*d1                     # d_k stands for the derivative in q_k
//! ```

use std::collections::BTreeMap;
use std::path::Path;

use jacobi_core::geometry::{parse_components, Chart, MultivectorField};
use jacobi_core::integrable::Realization;
use jacobi_core::jacobi::{push_to_group, AlgebraJacobi, GroupJacobi};
use jacobi_core::liealgebra::{catalog_algebra, catalog_vielbein, LieAlgebraDef, Vielbein};
use jacobi_core::matrix::Matrix;
use jacobi_core::poisson::{poissonize, DarbouxMap, PoissonBivector};
use jacobi_core::symexpr::{parse_scalar, Context, Rational, Scalar, Symbol};

use crate::error::ToolError;

const SECTIONS: &[&str] = &["algebra", "vielbein", "jacobi", "poisson", "darboux", "realization"];
const DEFAULT_CHART: &[&str] = &["x", "y", "z"];

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum JacobiData {
    Algebra(AlgebraJacobi),
    Group(GroupJacobi),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PoissonData {
    pub plus_r: bool,
    /// Explicitly given bivector, if any.
    pub bivector: Option<PoissonBivector>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureFile {
    pub name: String,
    pub algebra: Option<LieAlgebraDef>,
    pub vielbein: Option<Vielbein>,
    pub jacobi: Option<JacobiData>,
    pub poisson: Option<PoissonData>,
    pub darboux: Option<DarbouxMap>,
    pub realization: Option<Realization>,
}

#[derive(Debug)]
struct Entry {
    line: usize,
    key: String,
    value: String,
}

struct Parser<'a> {
    file: &'a str,
    sections: BTreeMap<String, Vec<Entry>>,
    header_lines: BTreeMap<String, usize>,
}

impl StructureFile {
    pub fn read(path: &Path) -> Result<Self, ToolError> {
        let file = path.display().to_string();
        let text = std::fs::read_to_string(path).map_err(|source| ToolError::Io {
            file: file.clone(),
            source,
        })?;
        Self::parse(&file, &text)
    }

    /// `file` only labels error messages and the structure.
    pub fn parse(file: &str, text: &str) -> Result<Self, ToolError> {
        let p = Parser::split(file, text)?;
        let algebra = p.algebra()?;
        let vielbein = p.vielbein(algebra.as_ref())?;
        let jacobi = p.jacobi(algebra.as_ref(), vielbein.as_ref())?;
        let jacobi_chart = match &jacobi {
            Some(JacobiData::Group(g)) => Some(g.chart().clone()),
            Some(JacobiData::Algebra(_)) => vielbein.as_ref().map(|v| v.chart().clone()),
            None => None,
        };
        let poisson = p.poisson(jacobi_chart.as_ref())?;
        let poisson_chart = match (&poisson, &jacobi_chart) {
            (Some(PoissonData { bivector: Some(b), .. }), _) => Some(b.chart().clone()),
            (_, Some(c)) => Some(c.extended(Symbol::coordinate("s"))?),
            _ => None,
        };
        let darboux = p.darboux(poisson_chart.as_ref())?;
        let realization = p.realization(algebra.as_ref())?;
        let name = Path::new(file)
            .file_stem()
            .map_or_else(|| file.to_string(), |s| s.to_string_lossy().into_owned());
        Ok(StructureFile {
            name,
            algebra,
            vielbein,
            jacobi,
            poisson,
            darboux,
            realization,
        })
    }

    /// Group-level pair, pushing an algebra-level pair through the vielbein.
    pub fn group_jacobi(&self) -> Result<Option<GroupJacobi>, ToolError> {
        match &self.jacobi {
            Some(JacobiData::Group(g)) => Ok(Some(g.clone())),
            Some(JacobiData::Algebra(a)) => match &self.vielbein {
                Some(v) => Ok(Some(push_to_group(a, v)?)),
                None => Ok(None),
            },
            None => Ok(None),
        }
    }

    /// The explicit `[poisson]` bivector, else the Poissonization of the
    /// group-level Jacobi pair.
    pub fn poisson_structure(&self) -> Result<Option<PoissonBivector>, ToolError> {
        if let Some(PoissonData { bivector: Some(b), .. }) = &self.poisson {
            return Ok(Some(b.clone()));
        }
        match self.group_jacobi()? {
            Some(g) => Ok(Some(poissonize(&g)?)),
            None => Ok(None),
        }
    }
}

impl<'a> Parser<'a> {
    fn split(file: &'a str, text: &str) -> Result<Self, ToolError> {
        let mut sections: BTreeMap<String, Vec<Entry>> = BTreeMap::new();
        let mut header_lines = BTreeMap::new();
        let mut current: Option<String> = None;
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let err = |message: String| ToolError::Parse {
                file: file.to_string(),
                line,
                message,
            };
            if let Some(name) = content.strip_prefix('[').and_then(|c| c.strip_suffix(']')) {
                let name = name.trim().to_string();
                if !SECTIONS.contains(&name.as_str()) {
                    return Err(err(format!("unknown section [{name}]")));
                }
                if header_lines.insert(name.clone(), line).is_some() {
                    return Err(err(format!("section [{name}] repeated")));
                }
                sections.entry(name.clone()).or_default();
                current = Some(name);
                continue;
            }
            let Some(section) = &current else {
                return Err(err("key outside of any section".into()));
            };
            let (key, value) = content
                .split_once('=')
                .ok_or_else(|| err(format!("expected `key = value`, found `{content}`")))?;
            let key = key.trim().to_string();
            let entries = sections.get_mut(section).expect("section exists");
            if key != "bracket" && entries.iter().any(|e| e.key == key) {
                return Err(err(format!("key `{key}` repeated in [{section}]")));
            }
            entries.push(Entry {
                line,
                key,
                value: value.trim().to_string(),
            });
        }
        Ok(Parser {
            file,
            sections,
            header_lines,
        })
    }

    fn error(&self, line: usize, message: impl std::fmt::Display) -> ToolError {
        ToolError::Parse {
            file: self.file.to_string(),
            line,
            message: message.to_string(),
        }
    }

    fn section(&self, name: &str) -> Option<&[Entry]> {
        self.sections.get(name).map(Vec::as_slice)
    }

    fn get<'s>(&'s self, section: &str, key: &str) -> Option<&'s Entry> {
        self.section(section)?.iter().find(|e| e.key == key)
    }

    fn header(&self, section: &str) -> usize {
        self.header_lines.get(section).copied().unwrap_or(0)
    }

    fn reject_unknown(&self, section: &str, allowed: &[&str]) -> Result<(), ToolError> {
        for e in self.section(section).unwrap_or_default() {
            let ok = allowed.contains(&e.key.as_str())
                || (section == "vielbein" && e.key.starts_with('e'))
                || (section == "realization" && e.key.starts_with('X'));
            if !ok {
                return Err(self.error(e.line, format!("unknown key `{}` in [{section}]", e.key)));
            }
        }
        Ok(())
    }

    fn names(value: &str) -> Vec<String> {
        value
            .split(',')
            .map(|s| s.trim().to_string())
            .filter(|s| !s.is_empty())
            .collect()
    }

    fn chart(&self, section: &str, default: &[&str]) -> Result<(Chart, Context), ToolError> {
        let names: Vec<String> = match self.get(section, "chart") {
            Some(e) => Self::names(&e.value),
            None => default.iter().map(|s| s.to_string()).collect(),
        };
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        let line = self.get(section, "chart").map_or(self.header(section), |e| e.line);
        let chart = Chart::from_names(&refs).map_err(|e| self.error(line, e))?;
        Ok((chart, Context::with_coordinates(&refs)))
    }

    fn scalar(&self, e: &Entry, text: &str, ctx: &Context) -> Result<Scalar, ToolError> {
        parse_scalar(text, ctx).map_err(|err| self.error(e.line, err))
    }

    fn algebra(&self) -> Result<Option<LieAlgebraDef>, ToolError> {
        let Some(entries) = self.section("algebra") else {
            return Ok(None);
        };
        self.reject_unknown("algebra", &["name", "dim", "bracket"])?;
        let name = self.get("algebra", "name").map_or("custom", |e| e.value.as_str());
        let brackets: Vec<&Entry> = entries.iter().filter(|e| e.key == "bracket").collect();
        if brackets.is_empty() {
            return catalog_algebra(name)
                .map(Some)
                .ok_or_else(|| self.error(self.header("algebra"), format!("`{name}` is not a catalog algebra; give dim and brackets")));
        }
        let dim_entry = self
            .get("algebra", "dim")
            .ok_or_else(|| self.error(self.header("algebra"), "custom algebra needs `dim`"))?;
        let dim: usize = dim_entry
            .value
            .parse()
            .map_err(|_| self.error(dim_entry.line, "`dim` must be a positive integer"))?;
        let gens: Vec<String> = (1..=dim).map(|k| format!("X{k}")).collect();
        let refs: Vec<&str> = gens.iter().map(String::as_str).collect();
        let ctx = Context::with_coordinates(&refs);
        let mut table = Vec::new();
        for e in brackets {
            // [Xa, Xb] -> c1*X1 + ...
            let (lhs, rhs) = e
                .value
                .split_once("->")
                .ok_or_else(|| self.error(e.line, "expected `[Xa, Xb] -> combination`"))?;
            let inner = lhs
                .trim()
                .strip_prefix('[')
                .and_then(|l| l.strip_suffix(']'))
                .ok_or_else(|| self.error(e.line, "left side must be `[Xa, Xb]`"))?;
            let pair: Vec<usize> = Self::names(inner)
                .iter()
                .map(|n| refs.iter().position(|g| g == n))
                .collect::<Option<_>>()
                .ok_or_else(|| self.error(e.line, format!("unknown generator in `{inner}`")))?;
            if pair.len() != 2 {
                return Err(self.error(e.line, "a bracket takes two generators"));
            }
            let combo = self.scalar(e, rhs.trim(), &ctx)?;
            let mut terms = Vec::new();
            let mut rest = combo.clone();
            for (k, name) in refs.iter().enumerate() {
                let g = ctx.get(name).expect("declared generator");
                let c = combo.differentiate(g)?;
                let c: Rational = c
                    .as_constant()
                    .ok_or_else(|| self.error(e.line, "right side must be linear in the generators"))?;
                rest -= Scalar::var(g) * Scalar::constant(c.clone());
                terms.push((k, c));
            }
            if !rest.is_zero() {
                return Err(self.error(e.line, "right side must be a combination of generators"));
            }
            table.push((pair[0], pair[1], terms));
        }
        LieAlgebraDef::new(name, dim, &table)
            .map(Some)
            .map_err(|err| self.error(self.header("algebra"), err))
    }

    fn vielbein(&self, algebra: Option<&LieAlgebraDef>) -> Result<Option<Vielbein>, ToolError> {
        if self.section("vielbein").is_none() {
            return Ok(algebra.and_then(|g| catalog_vielbein(g.name()).ok()));
        }
        self.reject_unknown("vielbein", &["chart"])?;
        let (chart, ctx) = self.chart("vielbein", DEFAULT_CHART)?;
        let mut frame: Matrix = Vec::new();
        for a in 1..=chart.dim() {
            let key = format!("e{a}");
            let e = self
                .get("vielbein", &key)
                .ok_or_else(|| self.error(self.header("vielbein"), format!("missing frame row `{key}`")))?;
            let row = self.vector(e, &e.value, &ctx)?;
            if row.len() != chart.dim() {
                return Err(self.error(e.line, format!("`{key}` needs {} entries", chart.dim())));
            }
            frame.push(row);
        }
        Vielbein::from_frame(&chart, frame)
            .map(Some)
            .map_err(|err| self.error(self.header("vielbein"), err))
    }

    /// `a, b, c` or `[a, b, c]`.
    fn vector(&self, e: &Entry, text: &str, ctx: &Context) -> Result<Vec<Scalar>, ToolError> {
        let body = text.trim();
        let body = body
            .strip_prefix('[')
            .and_then(|b| b.strip_suffix(']'))
            .unwrap_or(body);
        body.split(',').map(|t| self.scalar(e, t.trim(), ctx)).collect()
    }

    /// `[[a, b], [c, d]]`.
    fn matrix(&self, e: &Entry, ctx: &Context) -> Result<Matrix, ToolError> {
        let body = e
            .value
            .trim()
            .strip_prefix('[')
            .and_then(|b| b.strip_suffix(']'))
            .ok_or_else(|| self.error(e.line, "matrix must be written [[..], [..]]"))?;
        let mut rows = Vec::new();
        let mut rest = body;
        while let Some(start) = rest.find('[') {
            let end = rest[start..]
                .find(']')
                .ok_or_else(|| self.error(e.line, "unclosed matrix row"))?;
            rows.push(self.vector(e, &rest[start + 1..start + end], ctx)?);
            rest = &rest[start + end + 1..];
        }
        Ok(rows)
    }

    fn field(
        &self,
        e: &Entry,
        chart: &Chart,
        ctx: &Context,
        grade: usize,
    ) -> Result<MultivectorField, ToolError> {
        let v = e.value.trim();
        let field = if v.starts_with("[[") {
            MultivectorField::bivector_from_matrix(chart, &self.matrix(e, ctx)?)
        } else if v.starts_with('[') {
            MultivectorField::vector(chart, self.vector(e, v, ctx)?)
        } else {
            parse_components(v, chart, ctx, grade)
        };
        let field = field.map_err(|err| self.error(e.line, err))?;
        if field.grade() != grade {
            return Err(self.error(e.line, format!("expected a grade-{grade} field")));
        }
        Ok(field)
    }

    fn declare_params(&self, section: &str, ctx: &mut Context) -> Result<(), ToolError> {
        if let Some(e) = self.get(section, "params") {
            for n in Self::names(&e.value) {
                ctx.parameter(&n).map_err(|err| self.error(e.line, err))?;
            }
        }
        Ok(())
    }

    fn jacobi(
        &self,
        algebra: Option<&LieAlgebraDef>,
        vielbein: Option<&Vielbein>,
    ) -> Result<Option<JacobiData>, ToolError> {
        if self.section("jacobi").is_none() {
            return Ok(None);
        }
        self.reject_unknown("jacobi", &["level", "chart", "lambda", "E", "params"])?;
        let header = self.header("jacobi");
        let need = |key: &str| {
            self.get("jacobi", key)
                .ok_or_else(|| self.error(header, format!("[jacobi] needs `{key}`")))
        };
        let (lambda_e, e_e) = (need("lambda")?, need("E")?);
        let level = self.get("jacobi", "level").map_or("algebra", |e| e.value.as_str());
        match level {
            "group" => {
                let default: Vec<&str> = match vielbein {
                    Some(v) => v.chart().coords().iter().map(Symbol::name).collect(),
                    None => DEFAULT_CHART.to_vec(),
                };
                let (chart, mut ctx) = self.chart("jacobi", &default)?;
                self.declare_params("jacobi", &mut ctx)?;
                let lambda = self.field(lambda_e, &chart, &ctx, 2)?;
                let e = self.field(e_e, &chart, &ctx, 1)?;
                Ok(Some(JacobiData::Group(
                    GroupJacobi::new(lambda, e).map_err(|err| self.error(header, err))?,
                )))
            }
            "algebra" => {
                let g = algebra.ok_or(ToolError::MissingSection {
                    file: self.file.to_string(),
                    section: "algebra",
                })?;
                let gens: Vec<String> = (1..=g.dim()).map(|k| format!("X{k}")).collect();
                let refs: Vec<&str> = gens.iter().map(String::as_str).collect();
                let chart = Chart::from_names(&refs)?;
                let mut ctx = Context::with_coordinates(&refs);
                self.declare_params("jacobi", &mut ctx)?;
                let lambda = self.field(lambda_e, &chart, &ctx, 2)?.to_matrix()?;
                let e = self.field(e_e, &chart, &ctx, 1)?.to_vec()?;
                if lambda.iter().flatten().chain(&e).any(|c| c.symbols().iter().any(Symbol::is_coordinate)) {
                    return Err(self.error(header, "algebra-level entries must be constants or parameters"));
                }
                Ok(Some(JacobiData::Algebra(
                    AlgebraJacobi::new(g.clone(), lambda, e).map_err(|err| self.error(header, err))?,
                )))
            }
            other => Err(self.error(
                self.get("jacobi", "level").map_or(header, |e| e.line),
                format!("level must be `algebra` or `group`, found `{other}`"),
            )),
        }
    }

    fn poisson(&self, jacobi_chart: Option<&Chart>) -> Result<Option<PoissonData>, ToolError> {
        if self.section("poisson").is_none() {
            return Ok(None);
        }
        self.reject_unknown("poisson", &["plus_r", "chart", "P"])?;
        let plus_r = match self.get("poisson", "plus_r") {
            Some(e) => match e.value.as_str() {
                "true" => true,
                "false" => false,
                _ => return Err(self.error(e.line, "`plus_r` must be true or false")),
            },
            None => false,
        };
        let Some(p) = self.get("poisson", "P") else {
            return Ok(Some(PoissonData { plus_r, bivector: None }));
        };
        let (chart, ctx) = if self.get("poisson", "chart").is_some() {
            self.chart("poisson", &[])?
        } else {
            let base: Vec<String> = match jacobi_chart {
                Some(c) => c.coords().iter().map(|s| s.name().to_string()).collect(),
                None => DEFAULT_CHART.iter().map(|s| s.to_string()).collect(),
            };
            let mut names = base;
            if plus_r {
                names.push("s".into());
            }
            let refs: Vec<&str> = names.iter().map(String::as_str).collect();
            let chart = Chart::from_names(&refs).map_err(|err| self.error(p.line, err))?;
            (chart, Context::with_coordinates(&refs))
        };
        let field = self.field(p, &chart, &ctx, 2)?;
        Ok(Some(PoissonData {
            plus_r,
            bivector: Some(PoissonBivector::new(field)?),
        }))
    }

    fn darboux(&self, chart: Option<&Chart>) -> Result<Option<DarbouxMap>, ToolError> {
        if self.section("darboux").is_none() {
            return Ok(None);
        }
        let header = self.header("darboux");
        let chart = chart.ok_or_else(|| self.error(header, "[darboux] needs a [jacobi] or [poisson] chart"))?;
        let n = chart.dim() / 2;
        let allowed: Vec<String> = (1..=n).flat_map(|k| [format!("q{k}"), format!("p{k}")]).collect();
        let allowed_refs: Vec<&str> = allowed.iter().map(String::as_str).collect();
        self.reject_unknown("darboux", &allowed_refs)?;
        let names: Vec<&str> = chart.coords().iter().map(Symbol::name).collect();
        let ctx = Context::with_coordinates(&names);
        let read = |prefix: char| -> Result<Vec<Scalar>, ToolError> {
            (1..=n)
                .map(|k| {
                    let key = format!("{prefix}{k}");
                    let e = self
                        .get("darboux", &key)
                        .ok_or_else(|| self.error(header, format!("missing `{key}`")))?;
                    self.scalar(e, &e.value, &ctx)
                })
                .collect()
        };
        Ok(Some(DarbouxMap::new(read('q')?, read('p')?)))
    }

    fn realization(&self, algebra: Option<&LieAlgebraDef>) -> Result<Option<Realization>, ToolError> {
        if self.section("realization").is_none() {
            return Ok(None);
        }
        let header = self.header("realization");
        let g = algebra.ok_or(ToolError::MissingSection {
            file: self.file.to_string(),
            section: "algebra",
        })?;
        self.reject_unknown("realization", &[])?;
        let ops: Vec<&str> = (1..=g.dim())
            .map(|k| {
                self.get("realization", &format!("X{k}"))
                    .map(|e| e.value.as_str())
                    .ok_or_else(|| self.error(header, format!("missing `X{k}`")))
            })
            .collect::<Result<_, _>>()?;
        Realization::parse(g.clone(), &ops)
            .map(Some)
            .map_err(|err| self.error(header, err))
    }
}
