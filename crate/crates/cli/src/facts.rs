//! The fact manifest and its runner.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use so5_core::{Error, Result};

use crate::predicates::{evaluate, PREDICATES};
use crate::{Settings, EXIT_BUDGET, EXIT_FACT_FAILURE};

/// The manifest shipped with the tool.
pub const BUILTIN_MANIFEST: &str = include_str!("../facts.toml");

pub const REPORT_SCHEMA: &str = "so5-fact-report/1";

const PROVENANCES: &[&str] = &["cited", "derived", "trivial"];

#[derive(Clone, Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct Fact {
    pub id: String,
    /// Where the claim is made.
    pub citation: String,
    /// The claim in words.
    pub claim: String,
    pub predicate: String,
    #[serde(default)]
    pub args: toml::Table,
    pub expected: toml::Value,
    pub provenance: String,
    /// Present when the check also rests on an external result not recomputed here.
    #[serde(default)]
    pub trusted: Option<String>,
}

#[derive(Deserialize)]
struct Manifest {
    fact: Vec<Fact>,
}

pub fn parse_manifest(text: &str) -> Result<Vec<Fact>> {
    let m: Manifest = toml::from_str(text).map_err(|e| Error::Parse {
        pos: e.span().map_or(0, |s| s.start),
        msg: e.message().to_string(),
    })?;
    let mut ids = BTreeSet::new();
    for f in &m.fact {
        if !ids.insert(f.id.clone()) {
            return Err(Error::arg(format!("duplicate fact id {:?}", f.id)));
        }
        if f.citation.trim().is_empty() || f.claim.trim().is_empty() {
            return Err(Error::arg(format!("fact {:?} has no citation", f.id)));
        }
        if !PROVENANCES.contains(&f.provenance.as_str()) {
            return Err(Error::arg(format!(
                "fact {:?}: provenance must be one of {PROVENANCES:?}",
                f.id
            )));
        }
        if !PREDICATES.contains(&f.predicate.as_str()) {
            return Err(Error::arg(format!("fact {:?}: unknown predicate {:?}", f.id, f.predicate)));
        }
    }
    Ok(m.fact)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    /// Budget exhausted before a verdict.
    Inconclusive,
    /// The computed part passed; the full claim also needs a trusted external result.
    TrustedInput,
}

impl Status {
    pub fn label(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Inconclusive => "INCONCLUSIVE",
            Status::TrustedInput => "TRUSTED",
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct FactResult {
    pub id: String,
    pub citation: String,
    pub claim: String,
    pub provenance: String,
    pub predicate: String,
    pub args: Value,
    pub expected: Value,
    pub observed: Value,
    pub detail: Value,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

pub fn run_fact(f: &Fact, s: &Settings) -> FactResult {
    let args = serde_json::to_value(&f.args).expect("toml tables are json");
    let expected = serde_json::to_value(&f.expected).expect("toml values are json");
    let (observed, detail, status, note) = match evaluate(&f.predicate, &args, s) {
        Ok((obs, detail)) => {
            let status = match (obs == expected, &f.trusted) {
                (false, _) => Status::Fail,
                (true, None) => Status::Pass,
                (true, Some(_)) => Status::TrustedInput,
            };
            let note = match status {
                Status::TrustedInput => f.trusted.clone().map(|t| format!("verified as lower bound / trusted input: {t}")),
                Status::Fail if f.provenance == "cited" => {
                    Some("computed value disagrees with the cited claim".into())
                }
                _ => None,
            };
            (obs, detail, status, note)
        }
        Err(e) if e.is_budget() => (Value::Null, Value::Null, Status::Inconclusive, Some(e.to_string())),
        Err(e) => (Value::Null, Value::Null, Status::Fail, Some(format!("error: {e}"))),
    };
    FactResult {
        id: f.id.clone(),
        citation: f.citation.clone(),
        claim: f.claim.clone(),
        provenance: f.provenance.clone(),
        predicate: f.predicate.clone(),
        args,
        expected,
        observed,
        detail,
        status,
        note,
    }
}

#[derive(Clone, Debug)]
pub struct Report {
    /// Sorted by fact id.
    pub results: Vec<FactResult>,
}

impl Report {
    pub fn count(&self, s: Status) -> usize {
        self.results.iter().filter(|r| r.status == s).count()
    }

    pub fn exit_code(&self) -> i32 {
        if self.count(Status::Fail) > 0 {
            EXIT_FACT_FAILURE
        } else if self.count(Status::Inconclusive) > 0 {
            EXIT_BUDGET
        } else {
            0
        }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "schema": REPORT_SCHEMA,
            "tool_version": env!("CARGO_PKG_VERSION"),
            "facts": self.results,
            "summary": {
                "total": self.results.len(),
                "pass": self.count(Status::Pass),
                "fail": self.count(Status::Fail),
                "inconclusive": self.count(Status::Inconclusive),
                "trusted_input": self.count(Status::TrustedInput),
            },
        })
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for r in &self.results {
            let _ = writeln!(out, "{:<12} {}  [{}] {}", r.status.label(), r.id, r.citation, r.claim);
            if r.status != Status::Pass {
                let _ = writeln!(out, "{:<12}   expected {}  observed {}", "", r.expected, r.observed);
                if let Some(n) = &r.note {
                    let _ = writeln!(out, "{:<12}   {n}", "");
                }
            }
        }
        let _ = writeln!(
            out,
            "\n{} facts: {} pass, {} fail, {} inconclusive, {} trusted-input",
            self.results.len(),
            self.count(Status::Pass),
            self.count(Status::Fail),
            self.count(Status::Inconclusive),
            self.count(Status::TrustedInput),
        );
        out
    }
}

/// Runs the facts whose id matches `filter` (a glob) on up to `jobs` threads.
pub fn run_suite(facts: &[Fact], filter: Option<&str>, jobs: usize, s: &Settings) -> Result<Report> {
    let pattern = filter
        .map(glob::Pattern::new)
        .transpose()
        .map_err(|e| Error::arg(format!("bad filter: {e}")))?;
    let chosen: Vec<&Fact> = facts
        .iter()
        .filter(|f| pattern.as_ref().is_none_or(|p| p.matches(&f.id)))
        .collect();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| Error::Unsupported(e.to_string()))?;
    let mut results: Vec<FactResult> = pool.install(|| chosen.par_iter().map(|f| run_fact(f, s)).collect());
    results.sort_by(|a, b| a.id.cmp(&b.id));
    Ok(Report { results })
}
