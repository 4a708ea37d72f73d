//! Verification reports: aggregate counts plus per-case records.

use serde::Serialize;

/// One recorded case (violation, equality case, or ambiguous comparison).
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CaseRecord {
    pub claim: String,
    pub graph6: String,
    /// Measured quantity (usually a spectral radius or a toughness value).
    pub measured: f64,
    /// The threshold it was compared against.
    pub threshold: f64,
    pub verdict: String,
    pub details: String,
}

impl CaseRecord {
    /// Machine record: claim-id, graph6, measured, threshold, verdict.
    pub fn tsv_line(&self) -> String {
        format!(
            "{}\t{}\t{:.10}\t{:.10}\t{}",
            self.claim, self.graph6, self.measured, self.threshold, self.verdict
        )
    }
}

/// Per-graph outcome produced by a claim check.
#[derive(Clone, Debug, PartialEq)]
pub struct Outcome {
    /// Did the graph satisfy the claim's hypotheses?
    pub hypothesis: bool,
    pub status: Status,
    /// Was the graph actually tested against the threshold (as opposed to a
    /// vacuous below-threshold confirmation)?
    pub tested: bool,
    pub equality: Vec<CaseRecord>,
    pub violations: Vec<CaseRecord>,
    pub ambiguous: Vec<CaseRecord>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Confirmed,
    Violation,
    Ambiguous,
}

impl Outcome {
    pub fn filtered() -> Outcome {
        Outcome {
            hypothesis: false,
            status: Status::Confirmed,
            tested: false,
            equality: Vec::new(),
            violations: Vec::new(),
            ambiguous: Vec::new(),
        }
    }

    pub fn confirmed(tested: bool) -> Outcome {
        Outcome {
            hypothesis: true,
            status: Status::Confirmed,
            tested,
            equality: Vec::new(),
            violations: Vec::new(),
            ambiguous: Vec::new(),
        }
    }
}

/// Aggregate result of running one claim over a stream or sample set.
///
/// Counting invariant: `confirmations + violations + ambiguous` equals
/// `hypothesis_satisfying` (below-threshold graphs count as vacuous
/// confirmations). Content is independent of processing order and worker
/// count; nothing time-dependent is stored.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerificationReport {
    pub claim: String,
    pub notes: Vec<String>,
    pub graphs_examined: u64,
    pub hypothesis_satisfying: u64,
    pub tested_above_threshold: u64,
    pub confirmations: u64,
    pub violations: Vec<CaseRecord>,
    pub equality_cases: Vec<CaseRecord>,
    pub ambiguous: Vec<CaseRecord>,
    /// No graph satisfied the hypotheses; the run proves nothing.
    pub vacuous: bool,
}

impl VerificationReport {
    pub fn new(claim: impl Into<String>, notes: Vec<String>) -> VerificationReport {
        VerificationReport {
            claim: claim.into(),
            notes,
            graphs_examined: 0,
            hypothesis_satisfying: 0,
            tested_above_threshold: 0,
            confirmations: 0,
            violations: Vec::new(),
            equality_cases: Vec::new(),
            ambiguous: Vec::new(),
            vacuous: true,
        }
    }

    pub fn absorb(&mut self, outcome: Outcome) {
        self.graphs_examined += 1;
        if !outcome.hypothesis {
            return;
        }
        // claims emit exactly one violation/ambiguous record per violating or
        // ambiguous graph, so list lengths double as graph counts
        debug_assert_eq!(
            outcome.status == Status::Violation,
            outcome.violations.len() == 1
        );
        debug_assert_eq!(
            outcome.status == Status::Ambiguous,
            outcome.ambiguous.len() == 1
        );
        self.hypothesis_satisfying += 1;
        self.vacuous = false;
        if outcome.tested {
            self.tested_above_threshold += 1;
        }
        if outcome.status == Status::Confirmed {
            self.confirmations += 1;
        }
        self.equality_cases.extend(outcome.equality);
        self.violations.extend(outcome.violations);
        self.ambiguous.extend(outcome.ambiguous);
    }

    pub fn merge(&mut self, other: VerificationReport) {
        self.graphs_examined += other.graphs_examined;
        self.hypothesis_satisfying += other.hypothesis_satisfying;
        self.tested_above_threshold += other.tested_above_threshold;
        self.confirmations += other.confirmations;
        self.violations.extend(other.violations);
        self.equality_cases.extend(other.equality_cases);
        self.ambiguous.extend(other.ambiguous);
        self.vacuous = self.hypothesis_satisfying == 0;
    }

    pub fn is_confirmed(&self) -> bool {
        self.violations.is_empty()
    }

    /// 0 = clean, 1 = violations found.
    pub fn exit_code(&self) -> i32 {
        i32::from(!self.violations.is_empty())
    }

    pub fn verdict_line(&self) -> String {
        if !self.violations.is_empty() {
            format!("VIOLATED ({} violations)", self.violations.len())
        } else if self.vacuous {
            "VACUOUS (no graph satisfied the hypotheses)".to_string()
        } else if !self.ambiguous.is_empty() {
            format!("CONFIRMED ({} numerically ambiguous)", self.ambiguous.len())
        } else {
            "CONFIRMED".to_string()
        }
    }

    /// All records in a stable order for machine output.
    pub fn records(&self) -> impl Iterator<Item = &CaseRecord> {
        self.violations
            .iter()
            .chain(self.equality_cases.iter())
            .chain(self.ambiguous.iter())
    }
}

impl std::fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "claim {}", self.claim)?;
        for note in &self.notes {
            writeln!(f, "# {note}")?;
        }
        for v in &self.violations {
            writeln!(f, "violation: {} [{}]", v.tsv_line(), v.details)?;
        }
        for e in &self.equality_cases {
            writeln!(f, "equality: {} [{}]", e.tsv_line(), e.details)?;
        }
        for a in &self.ambiguous {
            writeln!(f, "ambiguous: {} [{}]", a.tsv_line(), a.details)?;
        }
        writeln!(
            f,
            "summary: examined={} hypothesis-satisfying={} tested={} confirmations={} \
             equality={} ambiguous={} violations={}",
            self.graphs_examined,
            self.hypothesis_satisfying,
            self.tested_above_threshold,
            self.confirmations,
            self.equality_cases.len(),
            self.ambiguous.len(),
            self.violations.len()
        )?;
        write!(f, "verdict: {}", self.verdict_line())
    }
}
