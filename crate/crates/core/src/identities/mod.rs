//! Registry of the verified identities as LHS/RHS evaluator pairs with
//! sampling domains and singularity guards, plus the generic verifier that
//! produces evaluation records in numeric, exact, and finite-difference
//! modes.

mod catalog;
mod exact_eval;
mod fd;
mod numeric;

pub use catalog::build_registry;
pub use exact_eval::ExactOutcome;
pub use fd::FdEval;
pub use numeric::{
    binomial_w1_parts, worst_guard, NumericEvaluation, NumericParts, PowerConvention,
};

/// Evaluate an identity exactly, returning every verified side pair.
pub fn exact_evaluate(spec: &IdentitySpec, asg: &Assignment) -> ExactOutcome {
    exact_eval::evaluate(spec.kind, asg)
}

/// Evaluate a finite-difference spec, exposing both analytic right-side
/// forms where the identity provides two.
pub fn fd_evaluate(
    spec: &IdentitySpec,
    asg: &Assignment,
) -> Result<FdEval, crate::specfun::SpecFunError> {
    match spec.kind {
        EvalKind::Fd(kind) => fd::evaluate(kind, asg),
        _ => Err(crate::specfun::SpecFunError::Domain(
            "not a finite-difference spec".into(),
        )),
    }
}

/// Evaluate an identity numerically, returning the raw summation parts.
pub fn numeric_evaluate(
    spec: &IdentitySpec,
    asg: &Assignment,
    convention: PowerConvention,
) -> Result<NumericEvaluation, crate::specfun::SpecFunError> {
    numeric::evaluate(spec.kind, asg, convention)
}

use crate::check::{self, CONDITION_CAP};
use crate::exact::{format_rational, rational_to_f64, ExactError};
use crate::rng::SplitMix64;
use crate::specfun::ComplexScalar;
use num_rational::BigRational;
use num_traits::Signed;
use serde::{Deserialize, Serialize};

/// Verification mode.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    Numeric,
    Exact,
    Fd,
}

impl Mode {
    pub fn name(self) -> &'static str {
        match self {
            Mode::Numeric => "numeric",
            Mode::Exact => "exact",
            Mode::Fd => "fd",
        }
    }
}

/// Outcome of one verified sample.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    SkippedSingular,
    SkippedIllConditioned,
    SkippedNotExactCapable,
}

impl Status {
    pub fn is_skip(self) -> bool {
        matches!(
            self,
            Status::SkippedSingular
                | Status::SkippedIllConditioned
                | Status::SkippedNotExactCapable
        )
    }
}

/// How many the four telescoped binomial families there are.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    F1,
    F2,
    F3,
    F4,
}

/// Exponent placement within a family: the plain difference identity or one
/// of the two harmonic-weighted derivatives.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Variant {
    General,
    HarmonicA,
    HarmonicB,
}

/// Which of the two unit-exponent harmonic reductions.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum W1Sub {
    A,
    B,
}

/// Finite-difference specs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FdKind {
    /// d/dx of a falling-product power equals a harmonic-weighted multiple.
    ProductLog,
    /// d/dx of a generalized harmonic number lowers into the next order.
    HarmonicOrder,
    /// d/dx of a binomial power is a harmonic-weighted multiple.
    BinomialPower,
}

/// Dispatch tag from a registry entry to its evaluators.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EvalKind {
    Family(Family, Variant),
    W1(Family, W1Sub),
    /// Traditional-harmonic identities, numbered 1..=4.
    Trad(u8),
    /// Squared-binomial sum and its first-moment companion, swept together.
    PairSquares,
    /// Alternating cubed-binomial sum and its weighted companion.
    PairDixon,
    Fd(FdKind),
}

/// Assertion class of a registry entry.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Validity {
    /// Holds for all sampled complex exponents under the factored power
    /// convention.
    ProvedGeneral,
    /// Asserted for integer exponents only.
    IntegerExponentOnly,
    /// Observed, not asserted.
    Open,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SymKind {
    Integer,
    NonNegInteger,
    Complex,
}

/// Affine bound `base + sum(coeff * value-of-symbol)` over previously drawn
/// symbols.
#[derive(Clone, Copy, Debug)]
pub struct Bound {
    pub base: i64,
    pub terms: &'static [(&'static str, i64)],
}

impl Bound {
    pub const fn constant(base: i64) -> Self {
        Self { base, terms: &[] }
    }

    fn eval(&self, asg: &Assignment) -> i64 {
        let mut v = self.base;
        for &(name, coeff) in self.terms {
            v += coeff
                * asg
                    .int(name)
                    .unwrap_or_else(|| panic!("bound references undrawn symbol {name}"));
        }
        v
    }
}

#[derive(Clone, Copy, Debug)]
pub struct SymbolSpec {
    pub name: &'static str,
    pub kind: SymKind,
    /// Sampling rectangle (re lo, re hi, im lo, im hi) for complex symbols
    /// in numeric and finite-difference modes.
    pub rect: Option<[f64; 4]>,
    /// Integer sampling bounds; for complex symbols these drive exact-mode
    /// draws.
    pub int_lo: Bound,
    pub int_hi: Bound,
}

/// One registered identity.
#[derive(Debug)]
pub struct IdentitySpec {
    pub id: &'static str,
    pub aliases: &'static [&'static str],
    pub summary: &'static str,
    pub formula: &'static str,
    pub symbols: &'static [SymbolSpec],
    /// Human-readable guard descriptions; the evaluated guard set lives with
    /// the evaluators.
    pub guards: &'static [&'static str],
    pub modes: &'static [Mode],
    pub validity: Validity,
    pub kind: EvalKind,
}

impl IdentitySpec {
    pub fn supports(&self, mode: Mode) -> bool {
        self.modes.contains(&mode)
    }

    pub fn matches(&self, selector: &str) -> bool {
        self.id == selector
            || self.aliases.contains(&selector)
            || self
                .id
                .strip_prefix(selector)
                .is_some_and(|rest| rest.starts_with('_'))
    }

    /// Exhaustive n-sweeps apply to specs whose only symbol is n.
    pub fn single_n(&self) -> bool {
        self.symbols.len() == 1 && self.symbols[0].name == "n"
    }
}

/// Resolve a selector against the registry.
pub fn find(selector: &str) -> Option<&'static IdentitySpec> {
    build_registry().iter().find(|s| s.matches(selector))
}

/// A sampled symbol value.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Value {
    Int(i64),
    Complex(ComplexScalar),
}

impl Value {
    pub fn as_c64(&self) -> ComplexScalar {
        match *self {
            Value::Int(i) => ComplexScalar::new(i as f64, 0.0),
            Value::Complex(z) => z,
        }
    }

    pub fn as_int(&self) -> Option<i64> {
        match *self {
            Value::Int(i) => Some(i),
            Value::Complex(_) => None,
        }
    }
}

/// Symbol-to-value map in declaration order.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Assignment {
    entries: Vec<(&'static str, Value)>,
}

impl Assignment {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, name: &'static str, value: Value) {
        self.entries.push((name, value));
    }

    pub fn get(&self, name: &str) -> Option<Value> {
        self.entries
            .iter()
            .find(|(n, _)| *n == name)
            .map(|(_, v)| *v)
    }

    pub fn int(&self, name: &str) -> Option<i64> {
        self.get(name).and_then(|v| v.as_int())
    }

    /// Complex view of a symbol; integers widen.
    pub fn c(&self, name: &str) -> ComplexScalar {
        self.get(name)
            .unwrap_or_else(|| panic!("missing symbol {name}"))
            .as_c64()
    }

    /// Integer view; panics if the symbol was drawn complex.
    pub fn i(&self, name: &str) -> i64 {
        self.int(name)
            .unwrap_or_else(|| panic!("symbol {name} is not integer-valued"))
    }

    pub fn entries(&self) -> &[(&'static str, Value)] {
        &self.entries
    }
}

/// Wire representation of assignment and side values.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ValueRepr {
    Int { int: i64 },
    Complex { re: f64, im: f64 },
    Rational { rational: String },
}

impl ValueRepr {
    pub fn complex(z: ComplexScalar) -> Self {
        ValueRepr::Complex { re: z.re, im: z.im }
    }

    pub fn rational(q: &BigRational) -> Self {
        ValueRepr::Rational {
            rational: format_rational(q),
        }
    }

    pub fn of_value(v: &Value) -> Self {
        match v {
            Value::Int(i) => ValueRepr::Int { int: *i },
            Value::Complex(z) => ValueRepr::complex(*z),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AssignmentEntry {
    pub symbol: String,
    pub value: ValueRepr,
}

/// One verification sample.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EvalRecord {
    pub id: String,
    pub sample: u64,
    pub mode: Mode,
    pub status: Status,
    pub assignment: Vec<AssignmentEntry>,
    pub lhs: Option<ValueRepr>,
    pub rhs: Option<ValueRepr>,
    pub abs_err: Option<f64>,
    pub rel_err: Option<f64>,
    pub condition: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub note: Option<String>,
}

impl EvalRecord {
    fn skeleton(spec: &IdentitySpec, mode: Mode, asg: &Assignment) -> Self {
        EvalRecord {
            id: spec.id.to_string(),
            sample: 0,
            mode,
            status: Status::SkippedSingular,
            assignment: asg
                .entries()
                .iter()
                .map(|(n, v)| AssignmentEntry {
                    symbol: n.to_string(),
                    value: ValueRepr::of_value(v),
                })
                .collect(),
            lhs: None,
            rhs: None,
            abs_err: None,
            rel_err: None,
            condition: None,
            note: None,
        }
    }
}

/// Aggregate of one identity sweep.
#[derive(Clone, Debug, Serialize)]
pub struct SweepReport {
    pub id: String,
    pub mode: Mode,
    pub seed: u64,
    pub tolerance: f64,
    pub requested: u64,
    pub evaluated: u64,
    pub passed: u64,
    pub failed: u64,
    pub skipped_singular: u64,
    pub skipped_ill_conditioned: u64,
    pub skipped_not_exact_capable: u64,
    pub max_rel_err: f64,
    pub worst_fail: Option<EvalRecord>,
}

impl SweepReport {
    pub fn skipped(&self) -> u64 {
        self.skipped_singular + self.skipped_ill_conditioned + self.skipped_not_exact_capable
    }
}

/// Per-symbol domain override.
#[derive(Clone, Debug, PartialEq)]
pub enum DomainOverride {
    Int(i64, i64),
    Complex(f64, f64, f64, f64),
}

/// Sweep configuration; the same config always reproduces the same records.
#[derive(Clone, Debug)]
pub struct SweepConfig {
    pub samples: u64,
    pub seed: u64,
    pub tolerance: f64,
    pub mode: Mode,
    pub convention: PowerConvention,
    /// Exhaustive n = 0..=N enumeration for single-symbol specs.
    pub exhaustive_n: Option<u64>,
    pub overrides: Vec<(String, DomainOverride)>,
}

impl Default for SweepConfig {
    fn default() -> Self {
        Self {
            samples: 1000,
            seed: 0,
            tolerance: 1e-8,
            mode: Mode::Numeric,
            convention: PowerConvention::Factored,
            exhaustive_n: None,
            overrides: Vec::new(),
        }
    }
}

/// Why a draw was not evaluated.
#[derive(Clone, Debug, PartialEq)]
pub enum SkipReason {
    Singular(String),
}

fn guard_threshold(mode: Mode) -> f64 {
    match mode {
        Mode::Fd => 1e-3,
        _ => 1e-6,
    }
}

fn effective_int_bounds(
    sym: &SymbolSpec,
    asg: &Assignment,
    overrides: &[(String, DomainOverride)],
) -> (i64, i64) {
    for (name, ov) in overrides {
        if name == sym.name {
            if let DomainOverride::Int(lo, hi) = ov {
                return (*lo, *hi);
            }
        }
    }
    (sym.int_lo.eval(asg), sym.int_hi.eval(asg))
}

fn effective_rect(sym: &SymbolSpec, overrides: &[(String, DomainOverride)]) -> [f64; 4] {
    for (name, ov) in overrides {
        if name == sym.name {
            if let DomainOverride::Complex(a, b, c, d) = ov {
                return [*a, *b, *c, *d];
            }
        }
    }
    sym.rect.unwrap_or([-5.0, 5.0, -5.0, 5.0])
}

/// Draw one assignment for a spec. Integer symbols come from their affine
/// ranges; complex symbols come from their rectangles in numeric/fd modes and
/// from their integer ranges in exact mode. Guards are then evaluated: any
/// guard magnitude below the mode threshold (or a gamma argument that close
/// to a nonpositive integer) skips the draw as singular.
pub fn sample_assignment(
    spec: &IdentitySpec,
    mode: Mode,
    rng: &mut SplitMix64,
    overrides: &[(String, DomainOverride)],
) -> Result<Assignment, SkipReason> {
    let mut asg = Assignment::new();
    for sym in spec.symbols {
        let value = match (sym.kind, mode) {
            (SymKind::Complex, Mode::Numeric) | (SymKind::Complex, Mode::Fd) => {
                let r = effective_rect(sym, overrides);
                Value::Complex(ComplexScalar::new(
                    rng.range_f64(r[0], r[1]),
                    rng.range_f64(r[2], r[3]),
                ))
            }
            _ => {
                let (mut lo, mut hi) = effective_int_bounds(sym, &asg, overrides);
                if sym.kind == SymKind::NonNegInteger {
                    lo = lo.max(0);
                    hi = hi.max(lo);
                }
                if lo > hi {
                    hi = lo;
                }
                Value::Int(rng.range_i64(lo, hi))
            }
        };
        asg.push(sym.name, value);
    }
    let threshold = guard_threshold(mode);
    if let Some((name, magnitude)) = numeric::worst_guard(spec.kind, &asg) {
        if magnitude < threshold {
            return Err(SkipReason::Singular(format!(
                "guard {name} has magnitude {magnitude:.3e}"
            )));
        }
    }
    Ok(asg)
}

/// Verify one instance with the factored power convention.
pub fn verify_instance(
    spec: &IdentitySpec,
    asg: &Assignment,
    mode: Mode,
    tolerance: f64,
) -> EvalRecord {
    verify_instance_with(spec, asg, mode, tolerance, PowerConvention::Factored)
}

/// Verify one instance under an explicit power convention.
pub fn verify_instance_with(
    spec: &IdentitySpec,
    asg: &Assignment,
    mode: Mode,
    tolerance: f64,
    convention: PowerConvention,
) -> EvalRecord {
    let mut rec = EvalRecord::skeleton(spec, mode, asg);
    match mode {
        Mode::Numeric => verify_numeric(spec, asg, tolerance, convention, &mut rec),
        Mode::Exact => verify_exact(spec, asg, &mut rec),
        Mode::Fd => verify_fd(spec, asg, tolerance, &mut rec),
    }
    rec
}

fn record_comparison(
    rec: &mut EvalRecord,
    lhs: ComplexScalar,
    rhs: ComplexScalar,
    cmp: check::Comparison,
    tolerance: f64,
) {
    rec.lhs = Some(ValueRepr::complex(lhs));
    rec.rhs = Some(ValueRepr::complex(rhs));
    rec.abs_err = Some(cmp.abs_err);
    rec.rel_err = Some(cmp.rel_err);
    rec.condition = Some(cmp.condition);
    rec.status = if cmp.ill_conditioned {
        Status::SkippedIllConditioned
    } else if cmp.rel_err <= tolerance {
        Status::Pass
    } else {
        Status::Fail
    };
}

fn verify_numeric(
    spec: &IdentitySpec,
    asg: &Assignment,
    tolerance: f64,
    convention: PowerConvention,
    rec: &mut EvalRecord,
) {
    match numeric::evaluate(spec.kind, asg, convention) {
        Err(e) => {
            rec.status = Status::SkippedSingular;
            rec.note = Some(e.to_string());
        }
        Ok(eval) => {
            let mut picked: Option<(ComplexScalar, ComplexScalar, check::Comparison)> = None;
            for parts in eval.parts() {
                let lhs = parts.lhs();
                let rhs = parts.rhs;
                if !check::is_finite(lhs) || !check::is_finite(rhs) {
                    rec.status = Status::SkippedSingular;
                    rec.note = Some("non-finite evaluation".into());
                    return;
                }
                let cmp = check::compare(lhs, rhs, parts.gross(), CONDITION_CAP);
                let worse = match &picked {
                    None => true,
                    Some((_, _, prev)) => {
                        cmp.ill_conditioned && !prev.ill_conditioned || cmp.rel_err > prev.rel_err
                    }
                };
                if worse {
                    picked = Some((lhs, rhs, cmp));
                }
            }
            let (lhs, rhs, cmp) = picked.expect("numeric evaluation produced no parts");
            record_comparison(rec, lhs, rhs, cmp, tolerance);
        }
    }
}

fn verify_exact(spec: &IdentitySpec, asg: &Assignment, rec: &mut EvalRecord) {
    match exact_eval::evaluate(spec.kind, asg) {
        exact_eval::ExactOutcome::NotCapable(msg) => {
            rec.status = Status::SkippedNotExactCapable;
            rec.note = Some(msg);
        }
        exact_eval::ExactOutcome::Singular(msg) => {
            rec.status = Status::SkippedSingular;
            rec.note = Some(msg);
        }
        exact_eval::ExactOutcome::Value(sides) => {
            // report the worse of the (possibly paired) equalities
            let mut worst: Option<(&BigRational, &BigRational)> = None;
            let mut all_equal = true;
            for (l, r) in &sides {
                let equal = l == r;
                all_equal &= equal;
                if worst.is_none() || !equal {
                    worst = Some((l, r));
                }
                if !equal {
                    break;
                }
            }
            let (l, r) = worst.expect("exact evaluation produced no sides");
            let diff = (l - r).abs();
            rec.lhs = Some(ValueRepr::rational(l));
            rec.rhs = Some(ValueRepr::rational(r));
            rec.abs_err = Some(rational_to_f64(&diff));
            rec.rel_err = Some(if all_equal { 0.0 } else { f64::INFINITY });
            rec.condition = Some(1.0);
            rec.status = if all_equal {
                Status::Pass
            } else {
                Status::Fail
            };
        }
    }
}

fn verify_fd(spec: &IdentitySpec, asg: &Assignment, tolerance: f64, rec: &mut EvalRecord) {
    let kind = match spec.kind {
        EvalKind::Fd(k) => k,
        _ => {
            rec.status = Status::SkippedSingular;
            rec.note = Some("finite-difference mode unsupported for this identity".into());
            return;
        }
    };
    match fd::evaluate(kind, asg) {
        Err(e) => {
            rec.status = Status::SkippedSingular;
            rec.note = Some(e.to_string());
        }
        Ok(ev) => {
            if !check::is_finite(ev.fd) || !check::is_finite(ev.analytic) {
                rec.status = Status::SkippedSingular;
                rec.note = Some("non-finite evaluation".into());
                return;
            }
            let cmp = fd::compare(&ev);
            record_comparison(rec, ev.fd, ev.analytic, cmp, tolerance);
        }
    }
}

/// Evaluate the summation side(s) in reversed index order and compare with
/// the forward order; a pure reordering of the same terms, checked at 1e-12.
pub fn reversal_check(spec: &IdentitySpec, asg: &Assignment) -> EvalRecord {
    const REVERSAL_TOL: f64 = 1e-12;
    let mut rec = EvalRecord::skeleton(spec, Mode::Numeric, asg);
    match numeric::evaluate(spec.kind, asg, PowerConvention::Factored) {
        Err(e) => {
            rec.status = Status::SkippedSingular;
            rec.note = Some(e.to_string());
        }
        Ok(eval) => {
            let mut worst: Option<(ComplexScalar, ComplexScalar, check::Comparison)> = None;
            for parts in eval.parts() {
                let fwd = parts.lhs();
                let rev = parts.lhs_reversed();
                if !check::is_finite(fwd) || !check::is_finite(rev) {
                    rec.status = Status::SkippedSingular;
                    rec.note = Some("non-finite evaluation".into());
                    return rec;
                }
                let cmp = check::compare(fwd, rev, parts.gross(), CONDITION_CAP);
                if worst.is_none() || cmp.rel_err > worst.as_ref().unwrap().2.rel_err {
                    worst = Some((fwd, rev, cmp));
                }
            }
            let (fwd, rev, cmp) = worst.expect("no summation side");
            record_comparison(&mut rec, fwd, rev, cmp, REVERSAL_TOL);
            rec.note = Some("reversal".into());
        }
    }
    rec
}

/// Exact evaluation of one side of an identity at an integer assignment.
pub fn eval_exact(
    spec: &IdentitySpec,
    side: Side,
    asg: &Assignment,
) -> Result<BigRational, ExactError> {
    match exact_eval::evaluate(spec.kind, asg) {
        exact_eval::ExactOutcome::Value(sides) => {
            let (l, r) = &sides[0];
            Ok(match side {
                Side::Lhs => l.clone(),
                Side::Rhs => r.clone(),
            })
        }
        exact_eval::ExactOutcome::NotCapable(msg) => Err(ExactError::NotExactlyEvaluable(msg)),
        exact_eval::ExactOutcome::Singular(msg) => Err(ExactError::DivisionByZero(msg)),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Lhs,
    Rhs,
}

fn run_one(spec: &IdentitySpec, cfg: &SweepConfig, index: u64) -> EvalRecord {
    let asg = if cfg.exhaustive_n.is_some() && spec.single_n() {
        let mut a = Assignment::new();
        a.push("n", Value::Int(index as i64));
        Ok(a)
    } else {
        let mut rng = SplitMix64::for_sample(cfg.seed, spec.id, index);
        sample_assignment(spec, cfg.mode, &mut rng, &cfg.overrides)
    };
    let mut rec = match asg {
        Ok(asg) => verify_instance_with(spec, &asg, cfg.mode, cfg.tolerance, cfg.convention),
        Err(SkipReason::Singular(note)) => {
            let mut rec = EvalRecord::skeleton(spec, cfg.mode, &Assignment::new());
            rec.status = Status::SkippedSingular;
            rec.note = Some(note);
            rec
        }
    };
    rec.sample = index;
    rec
}

fn aggregate(
    spec: &IdentitySpec,
    cfg: &SweepConfig,
    records: Vec<EvalRecord>,
) -> (SweepReport, Vec<EvalRecord>) {
    let mut report = SweepReport {
        id: spec.id.to_string(),
        mode: cfg.mode,
        seed: cfg.seed,
        tolerance: cfg.tolerance,
        requested: records.len() as u64,
        evaluated: 0,
        passed: 0,
        failed: 0,
        skipped_singular: 0,
        skipped_ill_conditioned: 0,
        skipped_not_exact_capable: 0,
        max_rel_err: 0.0,
        worst_fail: None,
    };
    for rec in &records {
        match rec.status {
            Status::Pass => {
                report.evaluated += 1;
                report.passed += 1;
                if let Some(rel) = rec.rel_err {
                    if rel > report.max_rel_err {
                        report.max_rel_err = rel;
                    }
                }
            }
            Status::Fail => {
                report.evaluated += 1;
                report.failed += 1;
                let worse = match &report.worst_fail {
                    None => true,
                    Some(prev) => {
                        rec.rel_err.unwrap_or(f64::INFINITY) > prev.rel_err.unwrap_or(f64::INFINITY)
                    }
                };
                if worse {
                    report.worst_fail = Some(rec.clone());
                }
            }
            Status::SkippedSingular => report.skipped_singular += 1,
            Status::SkippedIllConditioned => report.skipped_ill_conditioned += 1,
            Status::SkippedNotExactCapable => report.skipped_not_exact_capable += 1,
        }
    }
    (report, records)
}

fn sample_count(spec: &IdentitySpec, cfg: &SweepConfig) -> u64 {
    match cfg.exhaustive_n {
        Some(n) if spec.single_n() => n + 1,
        _ => cfg.samples,
    }
}

/// Run a sweep sequentially. Always available; the parallel [`sweep`] must
/// produce byte-identical records.
pub fn sweep_sequential(spec: &IdentitySpec, cfg: &SweepConfig) -> (SweepReport, Vec<EvalRecord>) {
    let total = sample_count(spec, cfg);
    let records: Vec<EvalRecord> = (0..total).map(|i| run_one(spec, cfg, i)).collect();
    aggregate(spec, cfg, records)
}

/// Run a sweep, data-parallel over samples when the `parallel` feature is
/// enabled. Records are ordered by sample index regardless of scheduling.
pub fn sweep(spec: &IdentitySpec, cfg: &SweepConfig) -> (SweepReport, Vec<EvalRecord>) {
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        let total = sample_count(spec, cfg);
        let records: Vec<EvalRecord> = (0..total)
            .into_par_iter()
            .map(|i| run_one(spec, cfg, i))
            .collect();
        aggregate(spec, cfg, records)
    }
    #[cfg(not(feature = "parallel"))]
    {
        sweep_sequential(spec, cfg)
    }
}
