//! Claims, their statuses and the report document emitted by the CLI.

use std::fmt::Write as _;

use serde::Serialize;

use crate::algebra::{decimal, Rat};
use crate::polyalg::RatInterval;

/// Decimal digits used when rendering rationals.
pub const DECIMAL_DIGITS: usize = 12;

/// A rational as `{num, den, decimal}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RationalValue {
    pub num: String,
    pub den: String,
    pub decimal: String,
}

impl From<&Rat> for RationalValue {
    fn from(r: &Rat) -> Self {
        Self {
            num: r.numer().to_string(),
            den: r.denom().to_string(),
            decimal: decimal(r, DECIMAL_DIGITS),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    /// Established in exact arithmetic.
    Certified,
    /// Holds at every point of a finite grid.
    GridPassed,
    /// Not contradicted by seeded sampling.
    OracleConsistent,
    Failed,
}

impl Status {
    pub fn label(&self) -> &'static str {
        match self {
            Status::Certified => "certified",
            Status::GridPassed => "grid-passed",
            Status::OracleConsistent => "oracle-consistent",
            Status::Failed => "failed",
        }
    }

    /// `ok` if the check passed, `Failed` otherwise.
    pub fn unless(ok: bool, status: Status) -> Status {
        if ok {
            status
        } else {
            Status::Failed
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Computed {
    Exact { value: RationalValue },
    Enclosure { lo: RationalValue, hi: RationalValue, width: String },
    Real { value: f64 },
    Flag { value: bool },
    Text { value: String },
}

impl Computed {
    pub fn exact(r: &Rat) -> Self {
        Computed::Exact { value: r.into() }
    }

    pub fn enclosure(iv: &RatInterval) -> Self {
        Computed::Enclosure {
            lo: iv.lo().into(),
            hi: iv.hi().into(),
            width: decimal(&iv.width(), DECIMAL_DIGITS + 3),
        }
    }

    pub fn render(&self) -> String {
        match self {
            Computed::Exact { value } => format!("{}/{} ({})", value.num, value.den, value.decimal),
            Computed::Enclosure { lo, hi, .. } => format!("[{}, {}]", lo.decimal, hi.decimal),
            Computed::Real { value } if *value != 0.0 && value.abs() < 1e-3 => format!("{value:.6e}"),
            Computed::Real { value } => format!("{value:.12}"),
            Computed::Flag { value } => value.to_string(),
            Computed::Text { value } => value.clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Claim {
    pub id: String,
    /// What is being checked, in words.
    pub statement: String,
    /// The quoted value, if any.
    pub expected: Option<String>,
    pub computed: Computed,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    /// Only recorded when timings are requested, so that reports stay
    /// reproducible byte for byte.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub runtime_ms: Option<u64>,
}

impl Claim {
    pub fn new(id: impl Into<String>, statement: impl Into<String>, computed: Computed, status: Status) -> Self {
        Self {
            id: id.into(),
            statement: statement.into(),
            expected: None,
            computed,
            status,
            witness: None,
            note: None,
            runtime_ms: None,
        }
    }

    pub fn expected(mut self, v: impl Into<String>) -> Self {
        self.expected = Some(v.into());
        self
    }

    pub fn witness(mut self, v: impl Into<String>) -> Self {
        self.witness = Some(v.into());
        self
    }

    pub fn note(mut self, v: impl Into<String>) -> Self {
        self.note = Some(v.into());
        self
    }
}

/// Settings echoed into every report.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Header {
    pub tool: String,
    pub version: String,
    pub command: String,
    #[serde(serialize_with = "ordered_map")]
    pub settings: Vec<(String, String)>,
}

fn ordered_map<S: serde::Serializer>(pairs: &[(String, String)], s: S) -> Result<S::Ok, S::Error> {
    s.collect_map(pairs.iter().map(|(k, v)| (k, v)))
}

/// A free-form table attached to a report (e.g. series coefficients).
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Table {
    pub title: String,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerificationReport {
    pub header: Header,
    pub claims: Vec<Claim>,
    pub notes: Vec<String>,
    pub tables: Vec<Table>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.claims.iter().all(|c| c.status != Status::Failed)
    }

    pub fn failed(&self) -> Vec<&Claim> {
        self.claims.iter().filter(|c| c.status == Status::Failed).collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{} {}: {}", self.header.tool, self.header.version, self.header.command);
        for (k, v) in &self.header.settings {
            let _ = writeln!(out, "  {k} = {v}");
        }
        out.push('\n');
        let rows: Vec<[String; 4]> = self
            .claims
            .iter()
            .map(|c| {
                [
                    c.id.clone(),
                    c.status.label().to_string(),
                    c.computed.render(),
                    c.expected.clone().unwrap_or_else(|| "-".into()),
                ]
            })
            .collect();
        let head = ["claim", "status", "computed", "expected"].map(String::from);
        let mut width = head.clone().map(|h| h.chars().count());
        for r in &rows {
            for (w, cell) in width.iter_mut().zip(r) {
                *w = (*w).max(cell.chars().count());
            }
        }
        for r in std::iter::once(&head).chain(&rows) {
            let line: Vec<String> = r.iter().zip(width).map(|(c, w)| format!("{c:<w$}")).collect();
            let _ = writeln!(out, "{}", line.join("  ").trim_end());
        }
        for t in &self.tables {
            let _ = writeln!(out, "\n{}", t.title);
            let _ = writeln!(out, "{}", t.columns.join("\t"));
            for r in &t.rows {
                let _ = writeln!(out, "{}", r.join("\t"));
            }
        }
        if !self.notes.is_empty() {
            out.push_str("\nnotes:\n");
            for n in &self.notes {
                let _ = writeln!(out, "  - {n}");
            }
        }
        let _ = writeln!(
            out,
            "\n{} claims, {} failed",
            self.claims.len(),
            self.failed().len()
        );
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    fn report(status: Status) -> VerificationReport {
        VerificationReport {
            header: Header {
                tool: "hankelcert".into(),
                version: "0".into(),
                command: "test".into(),
                settings: vec![("seed".into(), "0".into())],
            },
            claims: vec![Claim::new("a", "a holds", Computed::exact(&rat(1, 36)), status).expected("1/36")],
            notes: vec!["n".into()],
            tables: vec![],
        }
    }

    #[test]
    fn rationals_serialize_with_a_decimal() {
        let v = serde_json::to_value(RationalValue::from(&rat(-1, 36))).unwrap();
        assert_eq!(v["num"], "-1");
        assert_eq!(v["den"], "36");
        assert_eq!(v["decimal"], "-2.77777777778e-2");
    }

    #[test]
    fn failed_claims_fail_the_report() {
        assert!(report(Status::Certified).passed());
        assert!(!report(Status::Failed).passed());
    }

    #[test]
    fn json_omits_runtime_unless_set() {
        let j = report(Status::GridPassed).to_json();
        assert!(!j.contains("runtime_ms"));
        assert!(j.contains("\"grid-passed\""));
        assert!(j.contains("\"seed\": \"0\""));
    }

    #[test]
    fn text_is_aligned() {
        let t = report(Status::Certified).to_text();
        assert!(t.contains("claim  status     computed"));
        assert!(t.contains("1 claims, 0 failed"));
    }
}
