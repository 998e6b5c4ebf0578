//! Exhaustive sweeps: every selected identity over every partition up to a
//! size bound, plus the degree-indexed symmetric-function checks.
//!
//! Work is a flat list of units built in a fixed order and evaluated on a
//! worker pool. Results are collected back in list order, so the report does
//! not depend on the number of workers. With `fail_fast`, workers stop
//! picking up new units once any unit has failed.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::str::FromStr;
use std::sync::atomic::{AtomicBool, Ordering};
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;

use crate::error::{Error, Result};
use crate::outcome::{CheckId, IdentityId, SchurCheck, Side, VerificationOutcome};
use crate::partition::{enumerate_partitions, Partition};
use crate::shifted::{Fault, IdentityChecker, DEFAULT_MAX_N};
use crate::symfunc::{
    check_monomial_1_6, check_recurrences_3, check_theorem_1_2, DEFAULT_ORACLE_BOUND,
    DEFAULT_THEOREM_BOUND,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Jobs {
    #[default]
    Auto,
    Fixed(usize),
}

impl FromStr for Jobs {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s == "auto" {
            return Ok(Jobs::Auto);
        }
        match s.parse::<usize>() {
            Ok(k) if k > 0 => Ok(Jobs::Fixed(k)),
            _ => Err(Error::InvalidConfig(format!(
                "jobs must be a positive integer or \"auto\", got {s:?}"
            ))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum OutputFormat {
    #[default]
    Json,
    Csv,
    Text,
}

impl OutputFormat {
    pub fn name(self) -> &'static str {
        match self {
            OutputFormat::Json => "json",
            OutputFormat::Csv => "csv",
            OutputFormat::Text => "text",
        }
    }
}

impl FromStr for OutputFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(OutputFormat::Json),
            "csv" => Ok(OutputFormat::Csv),
            "text" => Ok(OutputFormat::Text),
            other => Err(Error::UnknownFormat(other.to_string())),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub enum Selection {
    #[default]
    All,
    Only(BTreeSet<IdentityId>),
}

impl Selection {
    /// Selected identities in catalog order.
    pub fn identities(&self) -> Vec<IdentityId> {
        match self {
            Selection::All => IdentityId::ALL.to_vec(),
            Selection::Only(set) => IdentityId::ALL
                .into_iter()
                .filter(|id| set.contains(id))
                .collect(),
        }
    }
}

impl FromStr for Selection {
    type Err = Error;

    /// `all` or a comma-separated list of identity names.
    fn from_str(s: &str) -> Result<Self> {
        if s.eq_ignore_ascii_case("all") {
            return Ok(Selection::All);
        }
        let ids = s
            .split(',')
            .map(|t| t.trim().parse())
            .collect::<Result<BTreeSet<IdentityId>>>()?;
        Ok(Selection::Only(ids))
    }
}

#[derive(Clone, Debug)]
pub struct SweepConfig {
    pub max_n_identities: usize,
    pub max_n_theorem_1_2: usize,
    pub max_n_oracles: usize,
    pub identities: Selection,
    pub jobs: Jobs,
    pub format: OutputFormat,
    pub fail_fast: bool,
    /// Keep both sides of passing outcomes as well as failing ones.
    pub capture_witnesses: bool,
    /// Test hook: corrupt one hook length or g-factor for the whole sweep.
    pub fault: Option<Fault>,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            max_n_identities: DEFAULT_MAX_N,
            max_n_theorem_1_2: DEFAULT_THEOREM_BOUND,
            max_n_oracles: DEFAULT_ORACLE_BOUND,
            identities: Selection::All,
            jobs: Jobs::Auto,
            format: OutputFormat::Json,
            fail_fast: false,
            capture_witnesses: false,
            fault: None,
        }
    }
}

impl SweepConfig {
    /// Sets the identity bound, lowering the oracle bound to match if needed.
    pub fn with_max_n(mut self, max_n: usize) -> Self {
        self.max_n_identities = max_n;
        self.max_n_oracles = self.max_n_oracles.min(max_n);
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.max_n_identities == 0 {
            return Err(Error::InvalidConfig("identity bound must be positive".into()));
        }
        if self.max_n_oracles > self.max_n_identities {
            return Err(Error::InvalidConfig(format!(
                "oracle bound {} exceeds identity bound {}",
                self.max_n_oracles, self.max_n_identities
            )));
        }
        if let Jobs::Fixed(0) = self.jobs {
            return Err(Error::InvalidConfig("jobs must be positive".into()));
        }
        if let Some(fault) = &self.fault {
            fault.validate()?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Counts {
    pub checked: usize,
    pub passed: usize,
    pub failed: usize,
}

impl Counts {
    fn record(&mut self, passed: bool) {
        self.checked += 1;
        if passed {
            self.passed += 1;
        } else {
            self.failed += 1;
        }
    }
}

#[derive(Clone, Debug)]
pub struct IdentitySummary {
    pub identity: IdentityId,
    pub counts: Counts,
    /// `(n, counts)` for every `n` that produced an outcome, increasing.
    pub by_n: Vec<(usize, Counts)>,
    pub failures: Vec<VerificationOutcome>,
    /// Passing outcomes with their witnesses, when capture was enabled.
    pub witnesses: Vec<VerificationOutcome>,
}

#[derive(Clone, Debug)]
pub struct SweepReport {
    pub config: SweepConfig,
    pub identities: Vec<IdentitySummary>,
    pub theorem_1_2: Vec<VerificationOutcome>,
    pub totals: Counts,
    /// True when fail-fast stopped the sweep before every unit ran.
    pub cancelled: bool,
    pub wall_time: Duration,
    pub workers: usize,
}

impl SweepReport {
    pub fn all_passed(&self) -> bool {
        self.totals.failed == 0
    }

    pub fn summary(&self, id: IdentityId) -> Option<&IdentitySummary> {
        self.identities.iter().find(|s| s.identity == id)
    }

    pub fn failures(&self) -> impl Iterator<Item = &VerificationOutcome> {
        self.identities
            .iter()
            .flat_map(|s| s.failures.iter())
            .chain(self.theorem_1_2.iter().filter(|o| !o.passed()))
    }
}

enum Unit<'a> {
    Identity {
        id: IdentityId,
        lambda: &'a Partition,
    },
    Schur {
        check: SchurCheck,
        n: usize,
    },
}

fn error_outcome(check: CheckId, lambda: Option<&Partition>, n: usize, err: Error) -> VerificationOutcome {
    VerificationOutcome {
        check,
        partition: lambda.cloned(),
        n,
        corner_index: None,
        status: crate::outcome::Status::Fail,
        witness: Some(crate::outcome::Witness {
            lhs: Side::Invalid(err.to_string()),
            rhs: Side::Invalid(String::new()),
        }),
        elapsed: Duration::ZERO,
    }
}

impl Unit<'_> {
    fn run(&self, checker: &IdentityChecker, config: &SweepConfig) -> Vec<VerificationOutcome> {
        match *self {
            Unit::Identity { id, lambda } => checker.check(id, lambda).unwrap_or_else(|e| {
                vec![error_outcome(CheckId::Identity(id), Some(lambda), lambda.size(), e)]
            }),
            Unit::Schur { check, n } => {
                let result = match check {
                    SchurCheck::Generating => {
                        check_theorem_1_2(n, config.max_n_theorem_1_2).map(|o| vec![o])
                    }
                    SchurCheck::RightRecurrence => check_recurrences_3(n, config.max_n_theorem_1_2)
                        .map(|mut v| vec![v.swap_remove(0)]),
                    SchurCheck::LeftRecurrence => {
                        check_recurrences_3(n, config.max_n_theorem_1_2).map(|mut v| v.split_off(1))
                    }
                    SchurCheck::MonomialCrossCheck => {
                        check_monomial_1_6(n, config.max_n_oracles).map(|o| vec![o])
                    }
                };
                result.unwrap_or_else(|e| vec![error_outcome(CheckId::Schur(check), None, n, e)])
            }
        }
    }
}

/// Runs the configured sweep.
pub fn run_sweep(config: &SweepConfig) -> Result<SweepReport> {
    config.validate()?;
    let start = Instant::now();
    let shapes: Vec<Vec<Partition>> = (0..=config.max_n_identities)
        .map(enumerate_partitions)
        .collect();
    let selected = config.identities.identities();

    let mut units = Vec::new();
    for &id in &selected {
        for lambda in shapes.iter().skip(1).flatten() {
            units.push(Unit::Identity { id, lambda });
        }
    }
    for n in 0..=config.max_n_theorem_1_2 {
        units.push(Unit::Schur {
            check: SchurCheck::Generating,
            n,
        });
    }
    for check in [SchurCheck::RightRecurrence, SchurCheck::LeftRecurrence] {
        for n in 1..=config.max_n_theorem_1_2 {
            units.push(Unit::Schur { check, n });
        }
    }
    for n in 0..=config.max_n_oracles {
        units.push(Unit::Schur {
            check: SchurCheck::MonomialCrossCheck,
            n,
        });
    }

    let checker = IdentityChecker::new()
        .with_max_n(config.max_n_identities)
        .with_witnesses(config.capture_witnesses)
        .with_fault(config.fault.clone());
    let stop = AtomicBool::new(false);
    let run_unit = |unit: &Unit| -> Option<Vec<VerificationOutcome>> {
        if config.fail_fast && stop.load(Ordering::Relaxed) {
            return None;
        }
        let out = unit.run(&checker, config);
        if config.fail_fast && out.iter().any(|o| !o.passed()) {
            stop.store(true, Ordering::Relaxed);
        }
        Some(out)
    };

    let workers = match config.jobs {
        Jobs::Auto => rayon::current_num_threads(),
        Jobs::Fixed(k) => k,
    };
    let results: Vec<Option<Vec<VerificationOutcome>>> = if workers == 1 {
        units.iter().map(run_unit).collect()
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(workers)
            .build()
            .map_err(|e| Error::InvalidConfig(format!("cannot start worker pool: {e}")))?;
        pool.install(|| units.par_iter().map(run_unit).collect())
    };

    let cancelled = results.iter().any(Option::is_none);
    let mut summaries: Vec<IdentitySummary> = selected
        .iter()
        .map(|&identity| IdentitySummary {
            identity,
            counts: Counts::default(),
            by_n: Vec::new(),
            failures: Vec::new(),
            witnesses: Vec::new(),
        })
        .collect();
    let mut theorem_1_2 = Vec::new();
    let mut totals = Counts::default();
    for outcome in results.into_iter().flatten().flatten() {
        totals.record(outcome.passed());
        match outcome.check {
            CheckId::Identity(id) => {
                let summary = summaries
                    .iter_mut()
                    .find(|s| s.identity == id)
                    .expect("outcomes only come from selected identities");
                summary.counts.record(outcome.passed());
                match summary.by_n.last_mut() {
                    Some((n, counts)) if *n == outcome.n => counts.record(outcome.passed()),
                    _ => {
                        let mut counts = Counts::default();
                        counts.record(outcome.passed());
                        summary.by_n.push((outcome.n, counts));
                    }
                }
                if !outcome.passed() {
                    summary.failures.push(outcome);
                } else if outcome.witness.is_some() {
                    summary.witnesses.push(outcome);
                }
            }
            CheckId::Schur(_) => theorem_1_2.push(outcome),
        }
    }

    Ok(SweepReport {
        config: config.clone(),
        identities: summaries,
        theorem_1_2,
        totals,
        cancelled,
        wall_time: start.elapsed(),
        workers,
    })
}

#[derive(Serialize)]
struct FailureRecord<'a> {
    identity: CheckId,
    partition: Option<&'a Partition>,
    corner_index: Option<usize>,
    lhs: String,
    rhs: String,
}

impl<'a> From<&'a VerificationOutcome> for FailureRecord<'a> {
    fn from(o: &'a VerificationOutcome) -> Self {
        let (lhs, rhs) = o
            .witness
            .as_ref()
            .map(|w| (w.lhs.serialize(), w.rhs.serialize()))
            .unwrap_or_default();
        FailureRecord {
            identity: o.check,
            partition: o.partition.as_ref(),
            corner_index: o.corner_index,
            lhs,
            rhs,
        }
    }
}

#[derive(Serialize)]
struct SchurRecord {
    identity: CheckId,
    n: usize,
    status: crate::outcome::Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    lhs: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    rhs: Option<String>,
}

fn fault_label(fault: &Fault) -> String {
    match fault {
        Fault::Hook {
            partition,
            cell,
            delta,
        } => format!("hook {partition} {cell} {delta:+}"),
        Fault::GFactor {
            partition,
            index,
            delta,
        } => format!("g-factor {partition} #{index} {delta:+}"),
    }
}

fn report_json(report: &SweepReport) -> serde_json::Value {
    let config = &report.config;
    let selected: Vec<&str> = config
        .identities
        .identities()
        .into_iter()
        .map(IdentityId::name)
        .collect();
    let mut identities = serde_json::Map::new();
    for s in &report.identities {
        let by_n: Vec<_> = s
            .by_n
            .iter()
            .map(|(n, c)| json!({"n": n, "checked": c.checked, "passed": c.passed, "failed": c.failed}))
            .collect();
        let failures: Vec<FailureRecord> = s.failures.iter().map(FailureRecord::from).collect();
        let mut entry = json!({
            "checked": s.counts.checked,
            "passed": s.counts.passed,
            "failed": s.counts.failed,
            "by_n": by_n,
            "failures": failures,
        });
        if config.capture_witnesses {
            let witnesses: Vec<FailureRecord> = s.witnesses.iter().map(FailureRecord::from).collect();
            entry["witnesses"] = json!(witnesses);
        }
        identities.insert(s.identity.name().to_string(), entry);
    }
    let theorem: Vec<SchurRecord> = report
        .theorem_1_2
        .iter()
        .map(|o| SchurRecord {
            identity: o.check,
            n: o.n,
            status: o.status,
            lhs: o.witness.as_ref().map(|w| w.lhs.serialize()),
            rhs: o.witness.as_ref().map(|w| w.rhs.serialize()),
        })
        .collect();
    json!({
        "config": {
            "max_n": config.max_n_identities,
            "max_n_theorem_1_2": config.max_n_theorem_1_2,
            "max_n_oracles": config.max_n_oracles,
            "identities": selected,
            "fail_fast": config.fail_fast,
            "capture_witnesses": config.capture_witnesses,
            "fault": config.fault.as_ref().map(fault_label),
        },
        "identities": identities,
        "theorem_1_2": theorem,
        "totals": {
            "checked": report.totals.checked,
            "passed": report.totals.passed,
            "failed": report.totals.failed,
            "cancelled": report.cancelled,
        },
        "timing": {
            "wall_ms": report.wall_time.as_millis() as u64,
            "workers": report.workers,
        },
    })
}

/// Renders a report. Output is a pure function of the report.
pub fn render_report(report: &SweepReport, format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => {
            let mut s = serde_json::to_string_pretty(&report_json(report))
                .expect("report JSON is built from plain values");
            s.push('\n');
            s
        }
        OutputFormat::Csv => render_csv(report),
        OutputFormat::Text => render_text(report),
    }
}

/// [`render_report`] with the format given by name.
pub fn render_report_named(report: &SweepReport, format: &str) -> Result<String> {
    Ok(render_report(report, format.parse()?))
}

fn render_csv(report: &SweepReport) -> String {
    let mut out = String::from("identity,n,checked,passed,failed\n");
    for s in &report.identities {
        for (n, c) in &s.by_n {
            let _ = writeln!(out, "{},{n},{},{},{}", s.identity, c.checked, c.passed, c.failed);
        }
    }
    for o in &report.theorem_1_2 {
        let passed = usize::from(o.passed());
        let _ = writeln!(out, "{},{},1,{passed},{}", o.check, o.n, 1 - passed);
    }
    out
}

fn render_text(report: &SweepReport) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "partitions of size 1..={}; schur checks to n={}; oracles to n={}",
        report.config.max_n_identities,
        report.config.max_n_theorem_1_2,
        report.config.max_n_oracles
    );
    let _ = writeln!(out, "{:<18} {:>9} {:>9} {:>9}", "identity", "checked", "passed", "failed");
    for s in &report.identities {
        let c = s.counts;
        let _ = writeln!(
            out,
            "{:<18} {:>9} {:>9} {:>9}",
            s.identity.name(),
            c.checked,
            c.passed,
            c.failed
        );
    }
    for check in SchurCheck::ALL {
        let mut c = Counts::default();
        for o in report.theorem_1_2.iter().filter(|o| o.check == CheckId::Schur(check)) {
            c.record(o.passed());
        }
        if c.checked > 0 {
            let _ = writeln!(
                out,
                "{:<18} {:>9} {:>9} {:>9}",
                check.name(),
                c.checked,
                c.passed,
                c.failed
            );
        }
    }
    let t = report.totals;
    let _ = writeln!(
        out,
        "{:<18} {:>9} {:>9} {:>9}",
        "total", t.checked, t.passed, t.failed
    );
    for o in report.failures().take(20) {
        let _ = writeln!(out, "FAIL {o}");
    }
    if report.cancelled {
        let _ = writeln!(out, "sweep stopped early (fail-fast)");
    }
    let _ = writeln!(
        out,
        "wall time {:.3}s, workers: {}",
        report.wall_time.as_secs_f64(),
        report.workers
    );
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::Cell;

    fn small(max_n: usize) -> SweepConfig {
        SweepConfig {
            max_n_theorem_1_2: 3,
            ..SweepConfig::default()
        }
        .with_max_n(max_n)
    }

    #[test]
    fn single_box_sweep() {
        let report = run_sweep(&small(1)).unwrap();
        assert!(report.all_passed());
        for s in &report.identities {
            assert_eq!(s.counts.checked, 1, "{}", s.identity);
            assert_eq!(s.counts.passed, 1);
        }
    }

    #[test]
    fn config_validation() {
        let bad = SweepConfig {
            max_n_identities: 4,
            max_n_oracles: 5,
            ..SweepConfig::default()
        };
        assert!(run_sweep(&bad).is_err());
        assert!(SweepConfig::default().with_max_n(0).validate().is_err());
        assert!("0".parse::<Jobs>().is_err());
        assert_eq!("3".parse::<Jobs>().unwrap(), Jobs::Fixed(3));
        assert!(matches!("xml".parse::<OutputFormat>(), Err(Error::UnknownFormat(_))));
    }

    #[test]
    fn selection_parsing() {
        assert_eq!("all".parse::<Selection>().unwrap(), Selection::All);
        let sel: Selection = "COR_4_4,THM_1_1".parse().unwrap();
        assert_eq!(
            sel.identities(),
            vec![IdentityId::DifferenceExpansion, IdentityId::HookRatioSum]
        );
        assert!("NOPE".parse::<Selection>().is_err());
    }

    #[test]
    fn counts_add_up() {
        let report = run_sweep(&small(6)).unwrap();
        for s in &report.identities {
            assert_eq!(s.counts.checked, s.counts.passed + s.failures.len());
            let by_n: usize = s.by_n.iter().map(|(_, c)| c.checked).sum();
            assert_eq!(by_n, s.counts.checked);
        }
    }

    #[test]
    fn worker_count_does_not_change_report() {
        let one = SweepConfig {
            jobs: Jobs::Fixed(1),
            ..small(6)
        };
        let four = SweepConfig {
            jobs: Jobs::Fixed(4),
            ..small(6)
        };
        let strip = |r: &SweepReport| {
            let mut v = report_json(r);
            v.as_object_mut().unwrap().remove("timing");
            v
        };
        assert_eq!(strip(&run_sweep(&one).unwrap()), strip(&run_sweep(&four).unwrap()));
    }

    #[test]
    fn injected_fault_is_reported() {
        let config = SweepConfig {
            fault: Some(Fault::Hook {
                partition: Partition::new(vec![3, 1]).unwrap(),
                cell: Cell::new(1, 2),
                delta: 1,
            }),
            ..small(5)
        };
        let report = run_sweep(&config).unwrap();
        assert!(!report.all_passed());
        let json = report_json(&report);
        let failures = json["identities"]["REC_1_3"]["failures"].as_array().unwrap();
        assert!(!failures.is_empty());
        let f = &failures[0];
        assert_eq!(f["partition"], "3,1");
        assert!(f["lhs"].as_str().is_some() && f["rhs"].as_str().is_some());
        assert!(f.get("corner_index").is_some());
    }

    #[test]
    fn fail_fast_stops_early() {
        let config = SweepConfig {
            fail_fast: true,
            jobs: Jobs::Fixed(1),
            fault: Some(Fault::GFactor {
                partition: Partition::new(vec![1]).unwrap(),
                index: 1,
                delta: 2,
            }),
            ..small(6)
        };
        let report = run_sweep(&config).unwrap();
        assert!(report.cancelled);
        assert!(!report.all_passed());
    }

    #[test]
    fn renders_all_formats() {
        let report = run_sweep(&small(2)).unwrap();
        let json: serde_json::Value =
            serde_json::from_str(&render_report(&report, OutputFormat::Json)).unwrap();
        for key in ["config", "identities", "theorem_1_2", "totals", "timing"] {
            assert!(json.get(key).is_some(), "{key}");
        }
        let csv = render_report(&report, OutputFormat::Csv);
        assert!(csv.starts_with("identity,n,checked,passed,failed\n"));
        assert!(csv.contains("THM_1_1,2,2,2,0\n"));
        let text = render_report(&report, OutputFormat::Text);
        assert!(text.contains("THM_1_1"));
        assert!(render_report_named(&report, "yaml").is_err());
    }

    #[test]
    fn empty_sweep_renders_zero_totals() {
        let config = SweepConfig {
            identities: Selection::Only(BTreeSet::new()),
            max_n_theorem_1_2: 0,
            ..small(1)
        };
        let mut report = run_sweep(&config).unwrap();
        report.theorem_1_2.clear();
        report.totals = Counts::default();
        let json: serde_json::Value =
            serde_json::from_str(&render_report(&report, OutputFormat::Json)).unwrap();
        assert_eq!(json["totals"]["checked"], 0);
        assert_eq!(json["identities"], json!({}));
    }
}
