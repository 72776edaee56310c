//! Maps of the negative quadrant that carry `S` into itself.
//!
//! Membership preservation is checked by the test suite; the maps here only
//! transform points.

use crate::error::{Error, Result};
use crate::exactnum::Rat;

/// The linear fractional map `Φ_p^r(β) = rβ / ((1 − r)pβ + 1)`.
///
/// Fixes `0` and `−1/p`, and satisfies `Φ_p^r ∘ Φ_p^s = Φ_p^{rs}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PhiMap {
    p: u64,
    r: u64,
}

impl PhiMap {
    pub fn new(p: u64, r: u64) -> Result<Self> {
        if p == 0 || r == 0 {
            return Err(Error::Parameter(format!("Φ needs p, r ≥ 1 (got p = {p}, r = {r})")));
        }
        Ok(PhiMap { p, r })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn r(&self) -> u64 {
        self.r
    }

    pub fn apply(&self, beta: &Rat) -> Result<Rat> {
        phi(self, beta)
    }
}

pub fn phi(map: &PhiMap, beta: &Rat) -> Result<Rat> {
    let p = Rat::from(map.p as i64);
    let r = Rat::from(map.r as i64);
    let den = (Rat::one() - &r) * p * beta + Rat::one();
    (r * beta).checked_div(&den)
}

/// `Ψ_p^r(μ') = (μ' − p)/r + p`, the conjugate of `Φ_p^r` under
/// `μ' ↦ −1/μ'`.
pub fn psi(p: u64, r: u64, mu: &Rat) -> Result<Rat> {
    if p == 0 || r == 0 {
        return Err(Error::Parameter(format!("Ψ needs p, r ≥ 1 (got p = {p}, r = {r})")));
    }
    let p = Rat::from(p as i64);
    Ok((mu - &p) / Rat::from(r as i64) + p)
}

/// `(mα, β)`.
pub fn scale_alpha_symmetry(alpha: &Rat, beta: &Rat, m: u64) -> Result<(Rat, Rat)> {
    if m == 0 {
        return Err(Error::Parameter("m must be at least 1".into()));
    }
    Ok((Rat::from(m as i64) * alpha, beta.clone()))
}

/// `(α/m, β/m)`.
pub fn scale_both_symmetry(alpha: &Rat, beta: &Rat, m: u64) -> Result<(Rat, Rat)> {
    if m == 0 {
        return Err(Error::Parameter("m must be at least 1".into()));
    }
    let m = Rat::from(m as i64);
    Ok((alpha / &m, beta / &m))
}

/// `Φ_p^r(β₀)` for each `r`, with repeats dropped (first occurrence kept).
pub fn phi_orbit(p: u64, beta0: &Rat, r_values: &[u64]) -> Result<Vec<Rat>> {
    let mut out: Vec<Rat> = Vec::new();
    for &r in r_values {
        let image = PhiMap::new(p, r)?.apply(beta0)?;
        if !out.contains(&image) {
            out.push(image);
        }
    }
    Ok(out)
}
