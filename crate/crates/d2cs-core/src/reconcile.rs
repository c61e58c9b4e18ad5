//! Reconciliation: pair each published formula value with the brute-force
//! oracle on the generated instance, and audit the literal maximal-D2CS
//! pseudocode against the closed-neighborhood reference. Mismatches are
//! findings to report, not failures.

use serde::{Deserialize, Serialize};

use crate::generators::FamilySpec;
use crate::graph::Graph;
use crate::{catalog, generators, oracle, schordal};

pub const SCHEMA: &str = "d2cs/1";

pub const FORMULA_CHECK: &str = "formula-vs-oracle";
pub const SCHORDAL_CHECK: &str = "paper-vs-reference";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    #[serde(rename = "MATCH")]
    Match,
    #[serde(rename = "MISMATCH")]
    Mismatch,
    #[serde(rename = "SKIPPED")]
    Skipped,
}

/// Sets present on only one side of a paper-vs-reference mismatch.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MismatchWitness {
    pub paper_only: Vec<Vec<usize>>,
    pub reference_only: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReconcileEntry {
    pub family: String,
    pub params: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub check: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub formula_value: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle_value: Option<String>,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<MismatchWitness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub notes: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReconcileReport {
    pub schema: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub generated_at: Option<String>,
    pub entries: Vec<ReconcileEntry>,
}

impl ReconcileReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(text: &str) -> Result<ReconcileReport, String> {
        serde_json::from_str(text).map_err(|e| e.to_string())
    }

    pub fn mismatches(&self) -> usize {
        self.entries
            .iter()
            .filter(|e| e.verdict == Verdict::Mismatch)
            .count()
    }
}

/// One unit of reconciliation work.
#[derive(Clone, Debug)]
pub enum Check {
    /// Evaluate the family's formula and compare with the oracle count.
    Formula(FamilySpec),
    /// Run the literal pseudocode and the reference enumerator on a known
    /// strongly chordal instance and compare the families.
    SchordalAudit {
        family: String,
        params: Vec<String>,
        graph: Graph,
    },
}

pub fn run(checks: &[Check], limit: usize, timestamps: bool) -> ReconcileReport {
    let entries = checks
        .iter()
        .map(|check| match check {
            Check::Formula(spec) => formula_entry(spec, limit),
            Check::SchordalAudit {
                family,
                params,
                graph,
            } => schordal_entry(family, params, graph, limit),
        })
        .collect();
    ReconcileReport {
        schema: SCHEMA.to_string(),
        generated_at: timestamps.then(|| {
            let now = std::time::SystemTime::now()
                .duration_since(std::time::UNIX_EPOCH)
                .expect("clock after 1970");
            now.as_secs().to_string()
        }),
        entries,
    }
}

fn formula_entry(spec: &FamilySpec, limit: usize) -> ReconcileEntry {
    let mut entry = ReconcileEntry {
        family: spec.family_name().to_string(),
        params: spec.params(),
        seed: spec.seed(),
        check: FORMULA_CHECK.to_string(),
        formula_value: None,
        oracle_value: None,
        verdict: Verdict::Skipped,
        reason: None,
        witness: None,
        notes: None,
    };
    let formula = match spec.formula_count() {
        Ok(v) => {
            if v.disputed {
                entry.notes = Some("formula is disputed: it ignores the instance shape".into());
            }
            entry.formula_value = Some(v.value.to_string());
            v.value
        }
        Err(e) => {
            entry.reason = Some(e.to_string());
            return entry;
        }
    };
    let graph = match spec.generate() {
        Ok(g) => g,
        Err(e) => {
            entry.reason = Some(e.to_string());
            return entry;
        }
    };
    match oracle::oracle_count_limited(&graph, false, limit) {
        Ok(result) => {
            entry.oracle_value = Some(result.total.to_string());
            entry.verdict = if result.total == formula {
                Verdict::Match
            } else {
                Verdict::Mismatch
            };
        }
        Err(e) => {
            entry.reason = Some(e.to_string());
        }
    }
    entry
}

fn schordal_entry(family: &str, params: &[String], g: &Graph, limit: usize) -> ReconcileEntry {
    let mut entry = ReconcileEntry {
        family: family.to_string(),
        params: params.to_vec(),
        seed: None,
        check: SCHORDAL_CHECK.to_string(),
        formula_value: None,
        oracle_value: None,
        verdict: Verdict::Skipped,
        reason: None,
        witness: None,
        notes: None,
    };
    if g.n() == 1 {
        entry.reason =
            Some("paper algorithm is undefined on a single vertex (N(1) is empty)".into());
        return entry;
    }
    let Some(ordering) = schordal::find_seo(g) else {
        entry.reason = Some("instance is not strongly chordal".into());
        return entry;
    };
    let run = match schordal::maximal_d2cs_paper(g, &ordering) {
        Ok(run) => run,
        Err(e) => {
            entry.reason = Some(e.to_string());
            return entry;
        }
    };
    let reference = match schordal::maximal_d2cs_reference(g) {
        Ok(r) => r,
        Err(e) => {
            entry.reason = Some(e.to_string());
            return entry;
        }
    };
    let mut paper = run.deduped();
    paper.sort_by(|a, b| a.cmp_canonical(b));

    entry.verdict = if paper == reference {
        Verdict::Match
    } else {
        Verdict::Mismatch
    };
    if entry.verdict == Verdict::Mismatch {
        entry.witness = Some(MismatchWitness {
            paper_only: paper
                .iter()
                .filter(|s| !reference.contains(s))
                .map(|s| s.to_vec())
                .collect(),
            reference_only: reference
                .iter()
                .filter(|s| !paper.contains(s))
                .map(|s| s.to_vec())
                .collect(),
        });
    }

    let oracle_note = if g.n() <= limit {
        match oracle::oracle_maximal_limited(g, limit) {
            Ok(maximal) => format!("reference==oracle_maximal: {}", maximal == reference),
            Err(e) => format!("oracle_maximal failed: {e}"),
        }
    } else {
        format!("oracle_maximal skipped (n={} above limit {limit})", g.n())
    };
    let mut notes = format!(
        "paper printed {} sets ({} after dedup); {}",
        run.printed.len(),
        paper.len(),
        oracle_note
    );
    for note in &run.notes {
        notes.push_str("; ");
        notes.push_str(note);
    }
    entry.notes = Some(notes);
    entry
}

/// The formula families whose published counts are expected to hold.
pub fn default_formula_checks() -> Vec<Check> {
    let mut out = Vec::new();
    for n in 1..=12 {
        out.push(Check::Formula(FamilySpec::Star { n }));
    }
    for n in 1..=12 {
        out.push(Check::Formula(FamilySpec::Complete { n }));
    }
    for n in 1..=10 {
        out.push(Check::Formula(FamilySpec::Empty { n }));
    }
    for n in 1..=8 {
        out.push(Check::Formula(FamilySpec::Ladder { n }));
    }
    for k in 0..=4 {
        out.push(Check::Formula(FamilySpec::BinomialTree { k }));
    }
    for k in 1..=4u64 {
        for r in 1..=3u64 {
            if k * (r + 1) <= 16 {
                out.push(Check::Formula(FamilySpec::Split { k, r }));
            }
        }
    }
    for (k, h) in [(2, 1), (2, 2), (3, 1), (3, 2), (2, 3)] {
        out.push(Check::Formula(FamilySpec::KaryTree { k, h }));
    }
    out
}

/// The disputed families: recorded for the findings they produce.
pub fn default_findings_checks() -> Vec<Check> {
    let mut out = Vec::new();
    for n in 2..=8 {
        out.push(Check::Formula(FamilySpec::FibonacciTree { n }));
    }
    for n in 0..=6 {
        out.push(Check::Formula(FamilySpec::BinaryFibonacciTree { n }));
    }
    for k in 1..=3u64 {
        for n in k + 1..=10 {
            out.push(Check::Formula(FamilySpec::KTree { n, k }));
        }
    }
    out
}

/// The strongly chordal audit instances: the tree catalog, complete graphs
/// and small split graphs.
pub fn default_schordal_checks() -> Vec<Check> {
    let mut out = Vec::new();
    for (name, graph) in catalog::tree_catalog(10) {
        out.push(Check::SchordalAudit {
            family: "tree-catalog".into(),
            params: vec![name],
            graph,
        });
    }
    for n in 1..=8u64 {
        out.push(Check::SchordalAudit {
            family: "complete".into(),
            params: vec![n.to_string()],
            graph: generators::gen_complete(n).expect("valid params"),
        });
    }
    for k in 1..=3u64 {
        for r in 1..=2u64 {
            out.push(Check::SchordalAudit {
                family: "split".into(),
                params: vec![k.to_string(), r.to_string()],
                graph: generators::gen_split_graph(k, r).expect("valid params"),
            });
        }
    }
    out
}

pub fn default_suite() -> Vec<Check> {
    let mut out = default_formula_checks();
    out.extend(default_findings_checks());
    out.extend(default_schordal_checks());
    out
}

/// Structural validation of a report against the d2cs/1 schema rules.
pub fn validate_report(report: &ReconcileReport) -> Result<(), String> {
    if report.schema != SCHEMA {
        return Err(format!(
            "schema is '{}', expected '{SCHEMA}'",
            report.schema
        ));
    }
    for (i, e) in report.entries.iter().enumerate() {
        let at = format!("entry {i} ({}/{:?})", e.family, e.params);
        if e.family.is_empty() {
            return Err(format!("{at}: empty family"));
        }
        if e.check != FORMULA_CHECK && e.check != SCHORDAL_CHECK {
            return Err(format!("{at}: unknown check '{}'", e.check));
        }
        match e.verdict {
            Verdict::Skipped => {
                if e.reason.is_none() {
                    return Err(format!("{at}: SKIPPED without a reason"));
                }
            }
            Verdict::Match | Verdict::Mismatch => {
                if e.check == FORMULA_CHECK {
                    let (Some(f), Some(o)) = (&e.formula_value, &e.oracle_value) else {
                        return Err(format!("{at}: formula check without both values"));
                    };
                    let agree = f == o;
                    if agree != (e.verdict == Verdict::Match) {
                        return Err(format!("{at}: verdict contradicts the values"));
                    }
                } else if e.verdict == Verdict::Mismatch && e.witness.is_none() {
                    return Err(format!("{at}: schordal mismatch without witness sets"));
                }
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn formula_entries_match_and_mismatch() {
        let checks = vec![
            Check::Formula(FamilySpec::Star { n: 3 }),
            Check::Formula(FamilySpec::KTree { n: 3, k: 1 }),
            Check::Formula(FamilySpec::KaryTree { k: 1, h: 3 }),
        ];
        let report = run(&checks, oracle::DEFAULT_LIMIT, false);
        assert_eq!(report.entries.len(), 3);

        let star = &report.entries[0];
        assert_eq!(star.verdict, Verdict::Match);
        assert_eq!(star.formula_value.as_deref(), Some("12"));
        assert_eq!(star.oracle_value.as_deref(), Some("12"));

        let ktree = &report.entries[1];
        assert_eq!(ktree.verdict, Verdict::Mismatch);
        assert_eq!(ktree.formula_value.as_deref(), Some("8"));
        assert_eq!(ktree.oracle_value.as_deref(), Some("7"));
        assert!(ktree.notes.as_deref().unwrap().contains("disputed"));

        let singular = &report.entries[2];
        assert_eq!(singular.verdict, Verdict::Skipped);
        assert!(singular.reason.as_deref().unwrap().contains("singular"));

        validate_report(&report).unwrap();
    }

    #[test]
    fn oversized_instances_are_skipped_not_aborted() {
        let checks = vec![Check::Formula(FamilySpec::Complete { n: 30 })];
        let report = run(&checks, oracle::DEFAULT_LIMIT, false);
        let e = &report.entries[0];
        assert_eq!(e.verdict, Verdict::Skipped);
        assert!(e.reason.as_deref().unwrap().contains("limit"));
        assert!(e.formula_value.is_some()); // the formula side still evaluated
        validate_report(&report).unwrap();
    }

    #[test]
    fn schordal_audit_entries() {
        let checks = vec![
            Check::SchordalAudit {
                family: "complete".into(),
                params: vec!["4".into()],
                graph: generators::gen_complete(4).unwrap(),
            },
            Check::SchordalAudit {
                family: "complete".into(),
                params: vec!["1".into()],
                graph: generators::gen_complete(1).unwrap(),
            },
        ];
        let report = run(&checks, oracle::DEFAULT_LIMIT, false);
        assert_eq!(report.entries[0].verdict, Verdict::Match);
        assert!(report.entries[0]
            .notes
            .as_deref()
            .unwrap()
            .contains("reference==oracle_maximal: true"));
        assert_eq!(report.entries[1].verdict, Verdict::Skipped);
        validate_report(&report).unwrap();
    }

    #[test]
    fn report_json_is_deterministic_and_round_trips() {
        let checks = vec![
            Check::Formula(FamilySpec::BinomialTree { k: 2 }),
            Check::Formula(FamilySpec::FibonacciTree { n: 4 }),
        ];
        let a = run(&checks, oracle::DEFAULT_LIMIT, false).to_json();
        let b = run(&checks, oracle::DEFAULT_LIMIT, false).to_json();
        assert_eq!(a, b);
        let parsed = ReconcileReport::from_json(&a).unwrap();
        assert_eq!(parsed.entries.len(), 2);
        assert!(a.contains("\"schema\": \"d2cs/1\""));
    }

    #[test]
    fn every_requested_check_appears_exactly_once() {
        let checks = default_formula_checks();
        let report = run(&checks, oracle::DEFAULT_LIMIT, false);
        assert_eq!(report.entries.len(), checks.len());
    }

    #[test]
    fn validation_catches_bad_reports() {
        let mut report = run(
            &[Check::Formula(FamilySpec::Star { n: 2 })],
            oracle::DEFAULT_LIMIT,
            false,
        );
        report.schema = "bogus".into();
        assert!(validate_report(&report).is_err());

        let mut report = run(
            &[Check::Formula(FamilySpec::Star { n: 2 })],
            oracle::DEFAULT_LIMIT,
            false,
        );
        report.entries[0].verdict = Verdict::Mismatch;
        assert!(validate_report(&report).is_err());
    }
}
