//! Verification suites: machine-checked re-certification of every finite
//! numerical fact used by the degree-sequence cycle and path bounds, plus
//! property tests of the universally quantified inequalities on bounded
//! ranges.
//!
//! Each suite produces a [`VerificationReport`]: a list of [`Claim`]s, each
//! a mathematical statement together with a certified outcome.
//!
//! * [`Outcome::Certified`] — the statement was established, either by
//!   interval arithmetic with a certified sign or by exact arithmetic in ℚ
//!   or ℚ(ρ). Strict inequalities carry a certified margin interval.
//! * [`Outcome::Failed`] — the statement's *negation* was certified. This is
//!   what a genuine counterexample (or an injected fault) produces.
//! * [`Outcome::Undecided`] — the precision ceiling was reached without a
//!   certified sign. Forced, for example, by capping precision at 8 bits.
//!
//! Claims are always phrased so that the expected outcome is `Certified`.
//! Where a source derivation contains an error, the claim states the fact
//! that is actually true (and is certified as such); the discrepancy is
//! surfaced separately as a [`Flag`] so it cannot be mistaken for a clean
//! reproduction.

use std::fmt::Write as _;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::bounds;
use crate::cert::{self, CertReal, Tri};
use crate::{map_tasks, Mode};

pub mod funnelweight;
pub mod graph_theorems;
pub mod inequalities;
pub mod lcases;
pub mod monotonicity;
pub mod wellbehaved;

/// Schema version of the JSON report format.
pub const SCHEMA_VERSION: &str = "1";

/// Identifier of the pseudo-random generator used for sampled instances.
pub const RNG_ALGORITHM: &str = "chacha12";

/// The margin normalization documented in every report header: which side
/// of each inequality is subtracted from which.
pub const MARGIN_CONVENTION: &str = "margin is the certified interval for \
(favoured side) − (other side) of the claim's inequality, so a positive \
lower endpoint certifies the claim; claims that reproduce a failure report \
the violation margin max(LHS − RHS) over the violated displayed conditions";

/// Result of certifying a single claim.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Outcome {
    Certified,
    Failed,
    Undecided,
}

impl std::fmt::Display for Outcome {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Outcome::Certified => "CERTIFIED",
            Outcome::Failed => "FAILED",
            Outcome::Undecided => "UNDECIDED",
        })
    }
}

/// Decimal renderings of a margin interval's endpoints (lower endpoint
/// rounded down, upper rounded up, 12 significant digits).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MarginBounds {
    pub lo: String,
    pub hi: String,
}

impl MarginBounds {
    fn of(margin: &CertReal) -> MarginBounds {
        let (lo, hi) = margin.decimal_bounds(12);
        MarginBounds { lo, hi }
    }

    fn exact_zero() -> MarginBounds {
        MarginBounds {
            lo: "0".to_string(),
            hi: "0".to_string(),
        }
    }
}

/// One certified statement.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Claim {
    /// Stable kebab-case identifier, unique within a suite.
    pub id: String,
    /// The mathematical statement being certified, in plain text.
    pub statement: String,
    /// The statement's anchor: a lemma/equation label such as `l:cases` or
    /// `e:t1`, or `plumbing` for self-checks of the artifact itself.
    pub anchor: String,
    pub outcome: Outcome,
    /// Certified margin interval, when the claim is an inequality.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub margin: Option<MarginBounds>,
    /// Working precision (bits) at which the outcome was reached.
    pub prec_used: u32,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub note: Option<String>,
    /// Identifies the offending instance when the outcome is not
    /// `Certified` (or the extremal instance of an aggregated claim).
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<String>,
}

impl Claim {
    fn new(id: &str, statement: impl Into<String>, anchor: &str) -> Claim {
        Claim {
            id: id.to_string(),
            statement: statement.into(),
            anchor: anchor.to_string(),
            outcome: Outcome::Undecided,
            margin: None,
            prec_used: 0,
            note: None,
            witness: None,
        }
    }

    fn with_note(mut self, note: impl Into<String>) -> Claim {
        self.note = Some(note.into());
        self
    }
}

/// A discrepancy between the certified facts and a source derivation,
/// attached to the report alongside the claims that establish it.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Flag {
    pub id: String,
    pub detail: String,
}

/// Machine-readable result of one suite (or of the full aggregated run).
///
/// Serialization is byte-stable for fixed (suite, parameters, seed,
/// precision): field order is fixed, decimal renderings use directed
/// rounding, and `elapsed_ms` is omitted unless explicitly populated.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct VerificationReport {
    pub schema_version: String,
    pub suite: String,
    pub prec: u32,
    pub max_prec: u32,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub rng_algorithm: Option<String>,
    pub margin_convention: String,
    pub claims: Vec<Claim>,
    pub flags: Vec<Flag>,
    pub certified: usize,
    pub failed: usize,
    pub undecided: usize,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub elapsed_ms: Option<u128>,
}

impl VerificationReport {
    fn new(suite: &str, cfg: &SuiteConfig, seeded: bool) -> VerificationReport {
        VerificationReport {
            schema_version: SCHEMA_VERSION.to_string(),
            suite: suite.to_string(),
            prec: cfg.prec,
            max_prec: cfg.max_prec,
            seed: seeded.then_some(cfg.seed),
            rng_algorithm: seeded.then(|| RNG_ALGORITHM.to_string()),
            margin_convention: MARGIN_CONVENTION.to_string(),
            claims: Vec::new(),
            flags: Vec::new(),
            certified: 0,
            failed: 0,
            undecided: 0,
            elapsed_ms: None,
        }
    }

    fn push(&mut self, claim: Claim) {
        match claim.outcome {
            Outcome::Certified => self.certified += 1,
            Outcome::Failed => self.failed += 1,
            Outcome::Undecided => self.undecided += 1,
        }
        self.claims.push(claim);
    }

    fn flag(&mut self, id: &str, detail: impl Into<String>) {
        self.flags.push(Flag {
            id: id.to_string(),
            detail: detail.into(),
        });
    }

    /// Worst outcome over all claims: `Failed` dominates `Undecided`
    /// dominates `Certified`.
    pub fn overall(&self) -> Outcome {
        if self.failed > 0 {
            Outcome::Failed
        } else if self.undecided > 0 {
            Outcome::Undecided
        } else {
            Outcome::Certified
        }
    }

    /// Pretty-printed JSON with a trailing newline.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    /// Human-readable mirror of the JSON report.
    pub fn text_summary(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "suite: {}", self.suite);
        let _ = writeln!(
            out,
            "precision: {} bits (escalation limit {})",
            self.prec, self.max_prec
        );
        if let Some(seed) = self.seed {
            let _ = writeln!(
                out,
                "seed: {seed} ({})",
                self.rng_algorithm.as_deref().unwrap_or("unspecified")
            );
        }
        let _ = writeln!(out, "margins: {}", self.margin_convention);
        let _ = writeln!(out, "claims:");
        for c in &self.claims {
            let _ = write!(out, "  [{}] {}: {}", c.outcome, c.id, c.statement);
            let _ = write!(out, "  (anchor {}", c.anchor);
            if let Some(m) = &c.margin {
                let _ = write!(out, "; margin [{}, {}]", m.lo, m.hi);
            }
            let _ = writeln!(out, "; prec {})", c.prec_used);
            if let Some(n) = &c.note {
                let _ = writeln!(out, "      note: {n}");
            }
            if let Some(w) = &c.witness {
                let _ = writeln!(out, "      witness: {w}");
            }
        }
        if !self.flags.is_empty() {
            let _ = writeln!(out, "flags:");
            for f in &self.flags {
                let _ = writeln!(out, "  [FLAG] {}: {}", f.id, f.detail);
            }
        }
        if let Some(ms) = self.elapsed_ms {
            let _ = writeln!(out, "elapsed: {ms} ms");
        }
        let _ = writeln!(
            out,
            "summary: {} claims — {} certified, {} failed, {} undecided",
            self.claims.len(),
            self.certified,
            self.failed,
            self.undecided
        );
        out
    }
}

/// Fault injection points, used to demonstrate that the suites detect a
/// corrupted constant rather than rubber-stamping whatever they are fed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Fault {
    /// Multiply α(3) by 1 + 10⁻⁶ everywhere the suites evaluate it.
    PerturbAlpha3,
}

/// Parameters shared by all suites.
#[derive(Debug, Clone)]
pub struct SuiteConfig {
    /// Starting working precision in bits.
    pub prec: u32,
    /// Precision ceiling for escalation; an undecided sign at this
    /// precision is reported as `Undecided`.
    pub max_prec: u32,
    /// Seed for sampled instances.
    pub seed: u64,
    /// Grid length for the sequence-monotonicity claims (≥ 6).
    pub k_max: u32,
    /// Funnel-weight table length (≥ 9).
    pub l_max: u32,
    /// Exhaustive census ceiling for the simple-graph theorem (≤ 7).
    pub graph_n_max: usize,
    pub multigraph_samples: usize,
    pub tree_samples: usize,
    pub matrix_samples: usize,
    pub tuple_samples: usize,
    pub mode: Mode,
    pub fault: Option<Fault>,
}

impl Default for SuiteConfig {
    fn default() -> SuiteConfig {
        SuiteConfig {
            prec: cert::DEFAULT_PREC,
            max_prec: cert::MAX_PREC,
            seed: 1,
            k_max: 64,
            l_max: 40,
            graph_n_max: 6,
            multigraph_samples: 1000,
            tree_samples: 200,
            matrix_samples: 500,
            tuple_samples: 10_000,
            mode: Mode::Parallel,
            fault: None,
        }
    }
}

impl SuiteConfig {
    /// α(k), routed through the fault-injection hook. All suite evaluations
    /// of α (and of a(k) = α(k)·b(k)) go through this accessor so that an
    /// injected perturbation propagates to every claim that depends on it.
    pub fn alpha(&self, k: u32, prec: u32) -> CertReal {
        let a = bounds::eval_alpha(k, prec);
        if self.fault == Some(Fault::PerturbAlpha3) && k == 3 {
            let eps = BigRational::new(BigInt::from(1_000_001), BigInt::from(1_000_000));
            return a.mul(&CertReal::from_rational(&eps, prec));
        }
        a
    }

    /// a(k) = α(k)·b(k), through the same hook as [`SuiteConfig::alpha`].
    pub fn a(&self, k: u32, prec: u32) -> CertReal {
        self.alpha(k, prec).mul(&bounds::eval_b(k, prec))
    }

    fn start_prec(&self) -> u32 {
        self.prec.max(cert::MIN_PREC)
    }
}

/// Result of an escalating sign decision.
pub(crate) struct Decision {
    pub tri: Tri,
    pub margin: CertReal,
    pub prec: u32,
}

/// Evaluate `margin_at` with doubling precision until its sign is certified
/// or the ceiling is reached.
pub(crate) fn decide_sign(cfg: &SuiteConfig, mut margin_at: impl FnMut(u32) -> CertReal) -> Decision {
    let mut prec = cfg.start_prec();
    loop {
        let margin = margin_at(prec);
        let tri = margin.sign_positive();
        if !tri.is_undecided() || prec >= cfg.max_prec {
            return Decision { tri, margin, prec };
        }
        prec = (prec.saturating_mul(2)).min(cfg.max_prec);
    }
}

/// Certify a strict inequality whose margin (favoured − other side) is
/// expected to be positive.
pub(crate) fn claim_positive(
    cfg: &SuiteConfig,
    id: &str,
    statement: impl Into<String>,
    anchor: &str,
    margin_at: impl FnMut(u32) -> CertReal,
) -> Claim {
    let d = decide_sign(cfg, margin_at);
    let mut claim = Claim::new(id, statement, anchor);
    claim.margin = Some(MarginBounds::of(&d.margin));
    claim.prec_used = d.prec;
    claim.outcome = match d.tri {
        Tri::True => Outcome::Certified,
        Tri::False => {
            claim.witness = Some("margin certified negative".to_string());
            Outcome::Failed
        }
        Tri::Undecided => Outcome::Undecided,
    };
    claim
}

/// Certify an exact identity established in ℚ or ℚ(ρ). `holds` must come
/// from exact arithmetic; the claim records a point margin of zero.
pub(crate) fn claim_exact(
    id: &str,
    statement: impl Into<String>,
    anchor: &str,
    holds: bool,
    note: impl Into<String>,
) -> Claim {
    let mut claim = Claim::new(id, statement, anchor);
    claim.margin = Some(MarginBounds::exact_zero());
    claim.prec_used = 0;
    claim.note = Some(note.into());
    claim.outcome = if holds {
        Outcome::Certified
    } else {
        claim.witness = Some("exact arithmetic refutes the identity".to_string());
        Outcome::Failed
    };
    claim
}

/// Certify a logically derived statement (no new arithmetic): the premises
/// named in `note` were certified by other claims in the same report.
pub(crate) fn claim_derived(
    id: &str,
    statement: impl Into<String>,
    anchor: &str,
    holds: bool,
    note: impl Into<String>,
) -> Claim {
    let mut claim = Claim::new(id, statement, anchor).with_note(note);
    claim.prec_used = 0;
    claim.outcome = if holds {
        Outcome::Certified
    } else {
        Outcome::Failed
    };
    claim
}

/// Decide whether an interval-evaluated quantity is consistent with being
/// exactly zero: certified when the interval contains 0 and is narrower
/// than 2^(−prec/2) (at the configured starting precision), failed when the
/// interval certifiably excludes 0.
pub(crate) fn decide_consistency(
    cfg: &SuiteConfig,
    mut value_at: impl FnMut(u32) -> CertReal,
) -> Decision {
    let tol = {
        let shift = cfg.start_prec() / 2;
        BigRational::new(BigInt::one(), BigInt::one() << shift)
    };
    let zero = BigRational::zero();
    let mut prec = cfg.start_prec();
    loop {
        let value = value_at(prec);
        if !value.contains_rational(&zero) {
            return Decision {
                tri: Tri::False,
                margin: value,
                prec,
            };
        }
        if value.width() <= tol {
            return Decision {
                tri: Tri::True,
                margin: value,
                prec,
            };
        }
        if prec >= cfg.max_prec {
            return Decision {
                tri: Tri::Undecided,
                margin: value,
                prec,
            };
        }
        prec = (prec.saturating_mul(2)).min(cfg.max_prec);
    }
}

/// Outcome of certifying one instance of an aggregated (grid or sampled)
/// claim.
pub(crate) struct InstanceResult {
    pub label: String,
    pub tri: Tri,
    pub margin: CertReal,
    pub prec: u32,
}

/// Certify every instance of a family of strict inequalities, in parallel
/// when the configuration requests it, merging deterministically in input
/// order.
pub(crate) fn certify_instances<F>(cfg: &SuiteConfig, instances: Vec<(String, F)>) -> Vec<InstanceResult>
where
    F: Fn(u32) -> CertReal + Send,
{
    map_tasks(cfg.mode, instances, |(label, margin_at)| {
        let mut f = margin_at;
        let d = decide_sign(cfg, &mut f);
        InstanceResult {
            label,
            tri: d.tri,
            margin: d.margin,
            prec: d.prec,
        }
    })
}

/// Fold per-instance results into a single aggregated claim: certified only
/// when every instance is, with the minimal-margin instance recorded as the
/// claim's margin and witness.
pub(crate) fn grid_claim(
    id: &str,
    statement: impl Into<String>,
    anchor: &str,
    results: &[InstanceResult],
) -> Claim {
    let mut claim = Claim::new(id, statement, anchor);
    let failures: Vec<&InstanceResult> = results.iter().filter(|r| r.tri == Tri::False).collect();
    let undecided: Vec<&InstanceResult> = results.iter().filter(|r| r.tri.is_undecided()).collect();
    if let Some(first) = failures.first() {
        let (lo, hi) = first.margin.decimal_bounds(12);
        claim.outcome = Outcome::Failed;
        claim.margin = Some(MarginBounds::of(&first.margin));
        claim.prec_used = first.prec;
        claim.witness = Some(format!(
            "{} (margin [{lo}, {hi}]); {} failing instance(s) of {}",
            first.label,
            failures.len(),
            results.len()
        ));
        return claim;
    }
    if let Some(first) = undecided.first() {
        claim.outcome = Outcome::Undecided;
        claim.margin = Some(MarginBounds::of(&first.margin));
        claim.prec_used = first.prec;
        claim.witness = Some(format!(
            "{}; {} undecided instance(s) of {}",
            first.label,
            undecided.len(),
            results.len()
        ));
        return claim;
    }
    let worst = results
        .iter()
        .min_by(|a, b| a.margin.lo_rational().cmp(&b.margin.lo_rational()));
    claim.outcome = Outcome::Certified;
    if let Some(w) = worst {
        claim.margin = Some(MarginBounds::of(&w.margin));
        claim.prec_used = w.prec;
        claim.note = Some(format!(
            "{} instances; minimum margin at {}",
            results.len(),
            w.label
        ));
    } else {
        claim.note = Some("no instances in range".to_string());
    }
    claim
}

/// The named suites.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SuiteName {
    Monotonicity,
    Funnelweight,
    Wellbehaved,
    Lcases,
    Inequalities,
    GraphTheorems,
}

impl SuiteName {
    pub const ALL: [SuiteName; 6] = [
        SuiteName::Monotonicity,
        SuiteName::Funnelweight,
        SuiteName::Wellbehaved,
        SuiteName::Lcases,
        SuiteName::Inequalities,
        SuiteName::GraphTheorems,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SuiteName::Monotonicity => "monotonicity",
            SuiteName::Funnelweight => "funnelweight",
            SuiteName::Wellbehaved => "wellbehaved",
            SuiteName::Lcases => "lcases",
            SuiteName::Inequalities => "inequalities",
            SuiteName::GraphTheorems => "graph-theorems",
        }
    }

    pub fn run(self, cfg: &SuiteConfig) -> VerificationReport {
        match self {
            SuiteName::Monotonicity => monotonicity::run(cfg),
            SuiteName::Funnelweight => funnelweight::run(cfg),
            SuiteName::Wellbehaved => wellbehaved::run(cfg),
            SuiteName::Lcases => lcases::run(cfg),
            SuiteName::Inequalities => inequalities::run(cfg),
            SuiteName::GraphTheorems => graph_theorems::run(cfg),
        }
    }
}

impl std::fmt::Display for SuiteName {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SuiteName {
    type Err = String;

    fn from_str(s: &str) -> Result<SuiteName, String> {
        SuiteName::ALL
            .iter()
            .copied()
            .find(|n| n.name() == s)
            .ok_or_else(|| {
                format!(
                    "unknown suite `{s}` (expected one of: monotonicity, funnelweight, \
                     wellbehaved, lcases, inequalities, graph-theorems, all)"
                )
            })
    }
}

/// Run every suite and merge the results into one report with claim ids
/// prefixed by their suite and flags de-duplicated by id.
pub fn run_full_certification(cfg: &SuiteConfig) -> VerificationReport {
    let mut full = VerificationReport::new("full", cfg, true);
    for suite in SuiteName::ALL {
        let report = suite.run(cfg);
        for mut claim in report.claims {
            claim.id = format!("{}/{}", suite.name(), claim.id);
            full.push(claim);
        }
        for flag in report.flags {
            if !full.flags.iter().any(|f| f.id == flag.id) {
                full.flags.push(flag);
            }
        }
    }
    full
}
