//! Ordered check records with text and tab-separated renderings.

use std::fmt::Write;

use jacobi_core::residual::Residuals;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    /// Echoed value, not a check.
    Info,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Info => "INFO",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    /// `check<TAB>target<TAB>status<TAB>residual`, one record per line.
    Machine,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Record {
    pub check: String,
    pub target: String,
    pub status: Status,
    /// Residuals of a failed check, or the echoed value.
    pub detail: Vec<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    records: Vec<Record>,
}

impl Report {
    pub fn new() -> Self {
        Report::default()
    }

    pub fn records(&self) -> &[Record] {
        &self.records
    }

    pub fn verdict(&mut self, check: &str, target: impl Into<String>, ok: bool, detail: Vec<String>) {
        self.records.push(Record {
            check: check.to_string(),
            target: target.into(),
            status: if ok { Status::Pass } else { Status::Fail },
            detail: if ok { Vec::new() } else { detail },
        });
    }

    /// PASS iff `r` is empty; otherwise FAIL with each residual.
    pub fn residuals(&mut self, check: &str, target: impl Into<String>, r: &Residuals) {
        let detail = r.iter().map(|x| format!("{} = {}", x.label, x.value)).collect();
        self.verdict(check, target, r.passed(), detail);
    }

    pub fn echo(&mut self, check: &str, target: impl Into<String>, value: impl ToString) {
        self.records.push(Record {
            check: check.to_string(),
            target: target.into(),
            status: Status::Info,
            detail: vec![value.to_string()],
        });
    }

    pub fn extend(&mut self, other: Report) {
        self.records.extend(other.records);
    }

    pub fn count(&self, status: Status) -> usize {
        self.records.iter().filter(|r| r.status == status).count()
    }

    pub fn passed(&self) -> bool {
        self.count(Status::Fail) == 0
    }

    pub fn render(&self, format: Format) -> String {
        let mut out = String::new();
        match format {
            Format::Text => {
                let cw = self.records.iter().map(|r| r.check.len()).max().unwrap_or(0);
                let tw = self.records.iter().map(|r| r.target.len()).max().unwrap_or(0);
                for r in &self.records {
                    let line = format!(
                        "{}  {:cw$}  {:tw$}  {}",
                        r.status.as_str(),
                        r.check,
                        r.target,
                        r.detail.join("; ")
                    );
                    let _ = writeln!(out, "{}", line.trim_end());
                }
                let _ = writeln!(
                    out,
                    "{} passed, {} failed",
                    self.count(Status::Pass),
                    self.count(Status::Fail)
                );
            }
            Format::Machine => {
                for r in &self.records {
                    let detail = if r.detail.is_empty() {
                        "-".to_string()
                    } else {
                        r.detail.join("; ")
                    };
                    let _ = writeln!(out, "{}\t{}\t{}\t{}", r.check, r.target, r.status.as_str(), detail);
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use jacobi_core::symexpr::Scalar;

    #[test]
    fn machine_lines() {
        let mut r = Report::new();
        r.verdict("jacobi", "II #1", true, vec!["ignored".into()]);
        let mut res = Residuals::new();
        res.push("[P,P](x,y,z)", Scalar::int(2));
        r.residuals("poisson", "P", &res);
        r.echo("hamiltonian", "H", "-y*exp(s)");
        assert_eq!(
            r.render(Format::Machine),
            "jacobi\tII #1\tPASS\t-\npoisson\tP\tFAIL\t[P,P](x,y,z) = 2\nhamiltonian\tH\tINFO\t-y*exp(s)\n"
        );
        assert!(!r.passed());
        assert!(r.render(Format::Text).ends_with("1 passed, 1 failed\n"));
    }
}
