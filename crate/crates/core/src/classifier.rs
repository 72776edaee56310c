//! Membership in the solution set `S` for negative dilations by explicit
//! witnesses.
//!
//! A pair `(α, β)` with `α, β < 0` satisfies `⌊α⌊βx⌋⌋ ≥ ⌊β⌊αx⌋⌋` for all
//! real `x` exactly when one of three families contains it:
//!
//! * case (i): `mαβ − nβ = −α` for integers `m ≥ 0`, `n ≥ 1`;
//! * case (ii): `α = −q/p` in lowest terms and `−1/p ≤ β < 0`;
//! * case (iii*): `α = −q/p` and
//!   `β = −(1/p)·(1 + (m/p + n/q − 1)/r)⁻¹` for `m ≥ 0`, `n ≥ 1`, `r ≥ 1`.
//!
//! Every rational member appears in (iii*); the sporadic points are the
//! (iii*) members on no case-(i) curve and no case-(ii) segment.

use num_integer::Integer;
use serde::Serialize;

use crate::commutator::{verify_nonneg, DilationPair, Procedure, Verdict};
use crate::error::{Error, Result};
use crate::exactnum::{lowest_terms_neg_u64, to_u64, PosRat, Rat};
use crate::geometry::hyperbola_witness;

/// The coordinate systems the solution set is drawn in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Frame {
    /// `(α, β)`, both negative.
    Ab,
    /// `(α', β') = (−α, −β)`.
    Primed,
    /// `(μ', ν') = (−1/β, α/β)`.
    Muv,
    /// `(σ', τ') = (−β, β/α)`.
    SigmaTau,
}

impl Frame {
    pub const ALL: [Frame; 4] = [Frame::Ab, Frame::Primed, Frame::Muv, Frame::SigmaTau];

    pub fn name(self) -> &'static str {
        match self {
            Frame::Ab => "ab",
            Frame::Primed => "primed",
            Frame::Muv => "muv",
            Frame::SigmaTau => "sigmatau",
        }
    }

    pub fn axis_labels(self) -> (&'static str, &'static str) {
        match self {
            Frame::Ab => ("α", "β"),
            Frame::Primed => ("α' = −α", "β' = −β"),
            Frame::Muv => ("μ' = 1/β'", "ν' = α'/β'"),
            Frame::SigmaTau => ("σ' = −β", "τ' = α/β"),
        }
    }

    /// Coordinates of `(α, β)` in this frame.
    pub fn from_ab(self, alpha: &Rat, beta: &Rat) -> Result<(Rat, Rat)> {
        Ok(match self {
            Frame::Ab => (alpha.clone(), beta.clone()),
            Frame::Primed => (-alpha, -beta),
            Frame::Muv => (-beta.recip()?, alpha.checked_div(beta)?),
            Frame::SigmaTau => (-beta, beta.checked_div(alpha)?),
        })
    }

    /// Inverse of [`Frame::from_ab`]. Fails for points that do not map into
    /// the negative quadrant.
    pub fn to_ab(self, x: &Rat, y: &Rat) -> Result<(Rat, Rat)> {
        let (alpha, beta) = match self {
            Frame::Ab => (x.clone(), y.clone()),
            Frame::Primed => (-x, -y),
            Frame::Muv => (-y.checked_div(x)?, -x.recip()?),
            Frame::SigmaTau => (-x.checked_div(y)?, -x),
        };
        if !alpha.is_negative() || !beta.is_negative() {
            return Err(Error::Quadrant {
                alpha: Box::new(alpha),
                beta: Box::new(beta),
            });
        }
        Ok((alpha, beta))
    }
}

impl std::str::FromStr for Frame {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Frame::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::Parameter(format!("unknown frame `{s}` (expected ab, primed, muv or sigmatau)")))
    }
}

/// One point expressed in all four coordinate frames.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Frames {
    pub ab: (Rat, Rat),
    pub primed: (Rat, Rat),
    pub muv: (Rat, Rat),
    pub sigmatau: (Rat, Rat),
}

pub fn to_frames(alpha: &Rat, beta: &Rat) -> Result<Frames> {
    DilationPair::new(alpha.clone(), beta.clone())?;
    Ok(Frames {
        ab: Frame::Ab.from_ab(alpha, beta)?,
        primed: Frame::Primed.from_ab(alpha, beta)?,
        muv: Frame::Muv.from_ab(alpha, beta)?,
        sigmatau: Frame::SigmaTau.from_ab(alpha, beta)?,
    })
}

/// Recovers `(α, β)` from the `(μ', ν')` frame, the one every decision
/// criterion is phrased in.
pub fn from_frames(frames: &Frames) -> Result<(Rat, Rat)> {
    Frame::Muv.to_ab(&frames.muv.0, &frames.muv.1)
}

/// Proof that a pair belongs to `S`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Witness {
    CaseI { m: u64, n: u64 },
    CaseII { p: u64, q: u64 },
    CaseIIIStar { p: u64, q: u64, m: u64, n: u64, r: u64 },
}

impl Witness {
    pub fn case_name(&self) -> &'static str {
        match self {
            Witness::CaseI { .. } => "i",
            Witness::CaseII { .. } => "ii",
            Witness::CaseIIIStar { .. } => "iii*",
        }
    }

    /// Checks the defining identity of the witness against `(α, β)`.
    pub fn certifies(&self, alpha: &Rat, beta: &Rat) -> bool {
        match *self {
            Witness::CaseI { m, n } => {
                n >= 1 && Rat::from(m as i64) * alpha * beta - Rat::from(n as i64) * beta == -alpha
            }
            Witness::CaseII { p, q } => {
                p >= 1
                    && q >= 1
                    && *alpha == -Rat::frac(q as i64, p as i64)
                    && p.gcd(&q) == 1
                    && *beta >= -Rat::frac(1, p as i64)
                    && beta.is_negative()
            }
            Witness::CaseIIIStar { p, q, m, n, r } => {
                *alpha == -Rat::frac(q as i64, p as i64) && beta_from_params(p, q, m, n, r).is_ok_and(|b| b == *beta)
            }
        }
    }
}

/// Flat JSON shape `{case, p, q, m, n, r}`, with absent fields as `null`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WitnessRecord {
    pub case: &'static str,
    pub p: Option<u64>,
    pub q: Option<u64>,
    pub m: Option<u64>,
    pub n: Option<u64>,
    pub r: Option<u64>,
}

impl From<&Witness> for WitnessRecord {
    fn from(w: &Witness) -> Self {
        let case = w.case_name();
        match *w {
            Witness::CaseI { m, n } => WitnessRecord {
                case,
                p: None,
                q: None,
                m: Some(m),
                n: Some(n),
                r: None,
            },
            Witness::CaseII { p, q } => WitnessRecord {
                case,
                p: Some(p),
                q: Some(q),
                m: None,
                n: None,
                r: None,
            },
            Witness::CaseIIIStar { p, q, m, n, r } => WitnessRecord {
                case,
                p: Some(p),
                q: Some(q),
                m: Some(m),
                n: Some(n),
                r: Some(r),
            },
        }
    }
}

impl Serialize for Witness {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        WitnessRecord::from(self).serialize(serializer)
    }
}

/// Search state for a case-(iii*) witness on the line `α = −q/p`.
///
/// `λ = −1/(pβ)` and, for each trial `r`, `ℓ = 1 + r(λ − 1)` must equal
/// `m/p + n/q`. When `λ < 1`, `ℓ ≥ 1/q` bounds `r` by `r_max`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CaseIIIStarSearch {
    pub p: u64,
    pub q: u64,
    pub lambda: Rat,
    pub r_max: Option<u64>,
}

impl CaseIIIStarSearch {
    pub fn new(alpha: &Rat, beta: &Rat) -> Result<Self> {
        let (p, q) = lowest_terms_neg_u64(alpha)?;
        let lambda = -(Rat::from(p as i64) * beta).recip()?;
        let one = Rat::one();
        let r_max = if lambda < one {
            let bound = (&one - Rat::frac(1, q as i64)) / (&one - &lambda);
            Some(to_u64(&bound.floor())?)
        } else {
            None
        };
        Ok(CaseIIIStarSearch { p, q, lambda, r_max })
    }

    pub fn ell(&self, r: u64) -> Rat {
        Rat::one() + Rat::from(r as i64) * (&self.lambda - Rat::one())
    }
}

/// Case-(i) witness with the least `n`, via the hyperbola `m/μ' + n/ν' = 1`.
pub fn case_i_witness(alpha: &Rat, beta: &Rat) -> Result<Option<Witness>> {
    let frames = to_frames(alpha, beta)?;
    let mu = PosRat::new(frames.muv.0)?;
    let nu = PosRat::new(frames.muv.1)?;
    match hyperbola_witness(&mu, &nu) {
        Some((m, n)) => Ok(Some(Witness::CaseI {
            m: to_u64(&m)?,
            n: to_u64(&n)?,
        })),
        None => Ok(None),
    }
}

pub fn case_ii_witness(alpha: &Rat, beta: &Rat) -> Result<Option<Witness>> {
    DilationPair::new(alpha.clone(), beta.clone())?;
    let (p, q) = lowest_terms_neg_u64(alpha)?;
    let threshold = -Rat::frac(1, p as i64);
    Ok((*beta >= threshold).then_some(Witness::CaseII { p, q }))
}

/// Writes `total = m·q + n·p` with `m ≥ 0`, `n ≥ 1`, choosing the least `n`.
pub fn semigroup_representable(total: u64, p: u64, q: u64) -> Result<Option<(u64, u64)>> {
    if p == 0 || q == 0 || p.gcd(&q) != 1 {
        return Err(Error::Parameter(format!(
            "p = {p} and q = {q} must be coprime positive integers"
        )));
    }
    Ok((1..=total / p).find_map(|n| {
        let rest = total - n * p;
        rest.is_multiple_of(q).then(|| (rest / q, n))
    }))
}

/// Least-`r`, then least-`n`, case-(iii*) witness.
pub fn case_iii_star_witness(alpha: &Rat, beta: &Rat) -> Result<Option<Witness>> {
    DilationPair::new(alpha.clone(), beta.clone())?;
    let search = CaseIIIStarSearch::new(alpha, beta)?;
    let (p, q) = (search.p, search.q);
    let pq = Rat::from((p * q) as i64);
    let try_r = |r: u64| -> Result<Option<Witness>> {
        let total = &pq * search.ell(r);
        let Some(total) = total.to_integer() else {
            return Ok(None);
        };
        if total < num_bigint::BigInt::from(0) {
            return Ok(None);
        }
        let total = to_u64(&total)?;
        Ok(semigroup_representable(total, p, q)?.map(|(m, n)| Witness::CaseIIIStar { p, q, m, n, r }))
    };

    match search.r_max {
        Some(r_max) => {
            for r in 1..=r_max {
                if let Some(w) = try_r(r)? {
                    return Ok(Some(w));
                }
            }
            Ok(None)
        }
        None => {
            // λ ≥ 1: choose r clearing the denominator of pq(λ − 1), so that
            // pqℓ is an integer ≥ pq and therefore representable with n ≥ 1.
            let excess = &pq * (&search.lambda - Rat::one());
            let r = if excess.is_zero() { 1 } else { to_u64(excess.denom())? };
            let found = try_r(r)?;
            debug_assert!(found.is_some(), "pqℓ ≥ pq is always representable");
            Ok(found)
        }
    }
}

/// `β = −(1/p)·(1 + (m/p + n/q − 1)/r)⁻¹`.
pub fn beta_from_params(p: u64, q: u64, m: u64, n: u64, r: u64) -> Result<Rat> {
    if p == 0 || q == 0 || p.gcd(&q) != 1 {
        return Err(Error::Parameter(format!(
            "p = {p} and q = {q} must be coprime positive integers"
        )));
    }
    if n == 0 {
        return Err(Error::Parameter("n must be at least 1".into()));
    }
    if r == 0 {
        return Err(Error::Parameter("r must be at least 1".into()));
    }
    let ell = Rat::frac(m as i64, p as i64) + Rat::frac(n as i64, q as i64);
    let inner = Rat::one() + (ell - Rat::one()) / Rat::from(r as i64);
    if !inner.is_positive() {
        return Err(Error::Parameter(format!(
            "degenerate parameters p={p} q={q} m={m} n={n} r={r}"
        )));
    }
    Ok(-(Rat::from(p as i64) * inner).recip()?)
}

/// Membership decided by witness search, plus every witness found.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decision {
    pub verdict: Verdict,
    pub witnesses: Vec<Witness>,
}

impl Decision {
    pub fn kind(&self) -> Kind {
        let has = |case: &str| self.witnesses.iter().any(|w| w.case_name() == case);
        if has("ii") {
            Kind::CaseIISegment
        } else if has("i") {
            Kind::CaseICurve
        } else if self.verdict.holds {
            Kind::Sporadic
        } else {
            Kind::NotInS
        }
    }
}

/// Runs all three witness searches. The pair is in `S` iff any succeeds.
///
/// For non-members the exhaustive period scan supplies the counterexample;
/// if that scan finds none the two procedures disagree and an
/// [`Error::Inconsistent`] is returned.
pub fn decide(alpha: &Rat, beta: &Rat) -> Result<Decision> {
    let pair = DilationPair::new(alpha.clone(), beta.clone())?;
    let witnesses: Vec<Witness> = [
        case_i_witness(alpha, beta)?,
        case_ii_witness(alpha, beta)?,
        case_iii_star_witness(alpha, beta)?,
    ]
    .into_iter()
    .flatten()
    .collect();

    let verdict = if witnesses.is_empty() {
        let oracle = verify_nonneg(&pair);
        if oracle.holds {
            return Err(Error::Inconsistent {
                alpha: Box::new(alpha.clone()),
                beta: Box::new(beta.clone()),
                detail: "no witness found but the period scan found no counterexample".into(),
            });
        }
        Verdict {
            procedure: Procedure::Classification,
            ..oracle
        }
    } else {
        Verdict::member(Procedure::Classification)
    };
    Ok(Decision { verdict, witnesses })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Kind {
    CaseICurve,
    CaseIISegment,
    Sporadic,
    NotInS,
}

pub fn kind_of(alpha: &Rat, beta: &Rat) -> Result<Kind> {
    let in_ii = case_ii_witness(alpha, beta)?.is_some();
    if in_ii {
        return Ok(Kind::CaseIISegment);
    }
    if case_i_witness(alpha, beta)?.is_some() {
        return Ok(Kind::CaseICurve);
    }
    if case_iii_star_witness(alpha, beta)?.is_some() {
        return Ok(Kind::Sporadic);
    }
    Ok(Kind::NotInS)
}

/// The three sufficient conditions stated directly in `(μ', ν')`
/// coordinates:
///
/// * `m/μ' + n/ν' = 1` with `m ≥ 0`, `n ≥ 1`;
/// * `μ'/p = ν'/q ≥ 1` with `p, q` coprime;
/// * `μ'/p = ν'/q = 1 + (m/p + n/q − 1)/r`.
pub fn sufficiency_muv(mu: &PosRat, nu: &PosRat) -> Result<bool> {
    if hyperbola_witness(mu, nu).is_some() {
        return Ok(true);
    }
    // ν'/μ' = α' = q/p in lowest terms
    let ratio = nu.get() / mu.get();
    let p = to_u64(ratio.denom())?;
    let q = to_u64(ratio.numer())?;
    let lambda = mu.get() / Rat::from(p as i64);
    if lambda >= Rat::one() {
        return Ok(true);
    }
    let pq = Rat::from((p * q) as i64);
    let r_max = (Rat::one() - Rat::frac(1, q as i64)) / (Rat::one() - &lambda);
    let r_max = to_u64(&r_max.floor())?;
    for r in 1..=r_max {
        let ell = Rat::one() + Rat::from(r as i64) * (&lambda - Rat::one());
        if let Some(total) = (&pq * ell).to_integer() {
            if total >= num_bigint::BigInt::from(0) {
                let total = to_u64(&total)?;
                if semigroup_representable(total, p, q)?.is_some() {
                    return Ok(true);
                }
            }
        }
    }
    Ok(false)
}
