//! Dilated floor functions, their commutator, and the exhaustive
//! one-period scan used as ground truth.

use std::fmt;

use num_bigint::BigInt;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactnum::{PosRat, Rat};

/// A pair of negative rational dilations `(α, β)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DilationPair {
    alpha: Rat,
    beta: Rat,
}

impl DilationPair {
    pub fn new(alpha: Rat, beta: Rat) -> Result<Self> {
        if !alpha.is_negative() || !beta.is_negative() {
            return Err(Error::Quadrant {
                alpha: Box::new(alpha),
                beta: Box::new(beta),
            });
        }
        Ok(DilationPair { alpha, beta })
    }

    pub fn alpha(&self) -> &Rat {
        &self.alpha
    }

    pub fn beta(&self) -> &Rat {
        &self.beta
    }
}

impl fmt::Display for DilationPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.alpha, self.beta)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Procedure {
    Oracle,
    StrictRounding,
    Torus,
    Classification,
}

/// Outcome of a nonnegativity decision.
///
/// `holds` is true exactly when there is no counterexample and the minimum
/// commutator value is nonnegative. For members the minimum is always 0,
/// attained at `x = 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub holds: bool,
    pub counterexample: Option<Rat>,
    pub min_value: BigInt,
    pub argmin: Rat,
    pub procedure: Procedure,
}

impl Verdict {
    /// Verdict for a pair known to satisfy the relation.
    pub fn member(procedure: Procedure) -> Self {
        Verdict {
            holds: true,
            counterexample: None,
            min_value: BigInt::from(0),
            argmin: Rat::zero(),
            procedure,
        }
    }
}

/// `⌊a·x⌋`.
pub fn dilated_floor(a: &Rat, x: &Rat) -> BigInt {
    (a * x).floor()
}

/// The four intermediate values and the commutator at one `x`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceRow {
    pub x: Rat,
    pub floor_beta_x: BigInt,
    pub alpha_floor_beta_x: BigInt,
    pub floor_alpha_x: BigInt,
    pub beta_floor_alpha_x: BigInt,
    pub commutator: BigInt,
}

pub fn trace_row(pair: &DilationPair, x: &Rat) -> TraceRow {
    let floor_beta_x = dilated_floor(&pair.beta, x);
    let alpha_floor_beta_x = dilated_floor(&pair.alpha, &Rat::from_int(floor_beta_x.clone()));
    let floor_alpha_x = dilated_floor(&pair.alpha, x);
    let beta_floor_alpha_x = dilated_floor(&pair.beta, &Rat::from_int(floor_alpha_x.clone()));
    let commutator = &alpha_floor_beta_x - &beta_floor_alpha_x;
    TraceRow {
        x: x.clone(),
        floor_beta_x,
        alpha_floor_beta_x,
        floor_alpha_x,
        beta_floor_alpha_x,
        commutator,
    }
}

/// `⌊α⌊βx⌋⌋ − ⌊β⌊αx⌋⌋`.
pub fn commutator_at(pair: &DilationPair, x: &Rat) -> BigInt {
    trace_row(pair, x).commutator
}

/// A period `T = den(α)·den(β)` of the commutator. `αT`, `βT` and `αβT`
/// are all integers, which is enough for `g(x + T) = g(x)`.
pub fn fundamental_period(pair: &DilationPair) -> PosRat {
    let t = pair.alpha.denom() * pair.beta.denom();
    PosRat::new(Rat::from_int(t)).expect("denominators are positive")
}

/// Multiples of `1/|a|` in `[0, period)`.
fn jumps(a: &Rat, period: &Rat) -> Vec<Rat> {
    let step = a.abs().recip().expect("nonzero dilation");
    let count = (period / &step).ceil();
    let mut out = Vec::new();
    let mut k = BigInt::from(0);
    while k < count {
        out.push(&step * Rat::from_int(k.clone()));
        k += 1;
    }
    out
}

/// All points of `[0, T)` where `αx` or `βx` is an integer, sorted and
/// deduplicated. The commutator is constant between consecutive entries.
pub fn breakpoints(pair: &DilationPair) -> Vec<Rat> {
    let period = fundamental_period(pair).into_inner();
    let mut points = jumps(&pair.alpha, &period);
    points.extend(jumps(&pair.beta, &period));
    points.sort();
    points.dedup();
    points
}

/// Every breakpoint of one period in increasing order, followed by the
/// midpoint of each open interval between consecutive breakpoints. Breakpoints
/// come first so a violation at a breakpoint is reported ahead of one inside
/// an interval.
pub fn sample_points(pair: &DilationPair) -> Vec<Rat> {
    let period = fundamental_period(pair).into_inner();
    let points = breakpoints(pair);
    let mut samples = points.clone();
    for (i, b) in points.iter().enumerate() {
        let next = points.get(i + 1).unwrap_or(&period);
        samples.push(b.midpoint(next));
    }
    samples
}

/// Minimum commutator value over one period and the first sample attaining it.
pub fn commutator_min(pair: &DilationPair) -> (BigInt, Rat) {
    let mut best: Option<(BigInt, Rat)> = None;
    for x in sample_points(pair) {
        let value = commutator_at(pair, &x);
        if best.as_ref().is_none_or(|(b, _)| value < *b) {
            best = Some((value, x));
        }
    }
    best.expect("breakpoints always contain 0")
}

/// Decides `[f_α, f_β](x) ≥ 0` for all real `x` by evaluating the
/// commutator on every breakpoint and interval midpoint of one period.
pub fn verify_nonneg(pair: &DilationPair) -> Verdict {
    let mut counterexample = None;
    let mut best: Option<(BigInt, Rat)> = None;
    for x in sample_points(pair) {
        let value = commutator_at(pair, &x);
        if counterexample.is_none() && value < BigInt::from(0) {
            counterexample = Some(x.clone());
        }
        if best.as_ref().is_none_or(|(b, _)| value < *b) {
            best = Some((value, x));
        }
    }
    let (min_value, argmin) = best.expect("breakpoints always contain 0");
    Verdict {
        holds: counterexample.is_none(),
        counterexample,
        min_value,
        argmin,
        procedure: Procedure::Oracle,
    }
}

/// Trace rows for every sample of one period, in order.
pub fn period_trace(pair: &DilationPair) -> Vec<TraceRow> {
    let mut samples = sample_points(pair);
    samples.sort();
    samples.iter().map(|x| trace_row(pair, x)).collect()
}
