//! Enumeration of the solution set inside a finite window: case-(i)
//! curves, case-(ii) segments and sporadic points, in any of the four
//! coordinate frames.

mod svg;

pub use svg::render_svg;

use num_integer::Integer;
use serde::Serialize;

use crate::classifier::{beta_from_params, decide, kind_of, Frame, Kind, Witness};
use crate::error::{Error, Result};
use crate::exactnum::Rat;
use crate::geometry::PlanePoint;

/// A finite viewport with sweep bounds.
///
/// `max_denominator` bounds `p, q` for segments and sporadic lines and sets
/// the curve sampling density; `max_index` bounds `m, n, r`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AtlasWindow {
    pub frame: Frame,
    pub xmin: Rat,
    pub xmax: Rat,
    pub ymin: Rat,
    pub ymax: Rat,
    pub max_denominator: u64,
    pub max_index: u64,
}

impl AtlasWindow {
    pub fn new(
        frame: Frame,
        (xmin, xmax): (Rat, Rat),
        (ymin, ymax): (Rat, Rat),
        max_denominator: u64,
        max_index: u64,
    ) -> Result<Self> {
        if xmin >= xmax || ymin >= ymax {
            return Err(Error::Parameter("window bounds must satisfy min < max".into()));
        }
        if max_denominator == 0 || max_index == 0 {
            return Err(Error::Parameter("max-den and max-index must be positive".into()));
        }
        let in_quadrant = match frame {
            Frame::Ab => !xmax.is_positive() && !ymax.is_positive(),
            _ => !xmin.is_negative() && !ymin.is_negative(),
        };
        if !in_quadrant {
            return Err(Error::Parameter(format!(
                "window must lie in the {} quadrant for the {} frame",
                if frame == Frame::Ab {
                    "closed negative"
                } else {
                    "closed positive"
                },
                frame.name()
            )));
        }
        Ok(AtlasWindow {
            frame,
            xmin,
            xmax,
            ymin,
            ymax,
            max_denominator,
            max_index,
        })
    }

    /// The `(α', β')` viewport `[0, 8/5] × [0, 6/5]` with bounds 8.
    pub fn figure_one() -> Self {
        AtlasWindow::new(
            Frame::Primed,
            (Rat::zero(), Rat::frac(8, 5)),
            (Rat::zero(), Rat::frac(6, 5)),
            8,
            8,
        )
        .expect("valid window")
    }

    pub fn contains(&self, p: &PlanePoint) -> bool {
        self.xmin <= p.x && p.x <= self.xmax && self.ymin <= p.y && p.y <= self.ymax
    }

    /// `(α, β)` expressed in this window's frame.
    pub fn project(&self, alpha: &Rat, beta: &Rat) -> Result<PlanePoint> {
        let (x, y) = self.frame.from_ab(alpha, beta)?;
        Ok(PlanePoint::new(x, y))
    }

    /// Curve abscissae per window width: a power of two, so raising
    /// `max_denominator` only refines the grid.
    fn subdivisions(&self) -> u64 {
        (64 * self.max_denominator).next_power_of_two()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind")]
pub enum FeatureKind {
    CurveCaseI {
        m: u64,
        n: u64,
    },
    SegmentCaseII {
        p: u64,
        q: u64,
    },
    SporadicPoint {
        alpha: Rat,
        beta: Rat,
        witnesses: Vec<Witness>,
    },
}

/// One family member drawn in window coordinates.
///
/// Segments are two-point polylines whose second point is excluded from
/// the set when `open_end` is true (the `β = 0` end).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SolutionFeature {
    #[serde(flatten)]
    pub kind: FeatureKind,
    pub geometry: Vec<PlanePoint>,
    pub open_end: bool,
}

impl SolutionFeature {
    /// Geometry points that belong to `S` (all but an open end).
    pub fn member_points(&self) -> &[PlanePoint] {
        if self.open_end {
            &self.geometry[..self.geometry.len() - 1]
        } else {
            &self.geometry
        }
    }
}

/// Ordinate of the case-(i) locus `mαβ − nβ = −α` above abscissa `x`,
/// when defined.
fn case_i_ordinate(frame: Frame, m: u64, n: u64, x: &Rat) -> Option<Rat> {
    let (m, n) = (Rat::from(m as i64), Rat::from(n as i64));
    let y = match frame {
        Frame::Ab => x.checked_div(&(&n - &m * x)).ok()?,
        Frame::Primed => x.checked_div(&(&n + &m * x)).ok()?,
        Frame::Muv => (&n * x).checked_div(&(x - &m)).ok()?,
        Frame::SigmaTau => (Rat::one() - &m * x) / &n,
    };
    Some(y)
}

pub fn enumerate_case_i(window: &AtlasWindow) -> Vec<SolutionFeature> {
    let steps = window.subdivisions();
    let width = &window.xmax - &window.xmin;
    let abscissae: Vec<Rat> = (0..=steps)
        .map(|k| &window.xmin + &width * Rat::frac(k as i64, steps as i64))
        .collect();

    let mut features = Vec::new();
    for m in 0..=window.max_index {
        for n in 1..=window.max_index {
            let geometry: Vec<PlanePoint> = abscissae
                .iter()
                .filter_map(|x| {
                    let y = case_i_ordinate(window.frame, m, n, x)?;
                    // reject points outside the negative quadrant
                    window.frame.to_ab(x, &y).ok()?;
                    let p = PlanePoint::new(x.clone(), y);
                    window.contains(&p).then_some(p)
                })
                .collect();
            if !geometry.is_empty() {
                features.push(SolutionFeature {
                    kind: FeatureKind::CurveCaseI { m, n },
                    geometry,
                    open_end: false,
                });
            }
        }
    }
    features
}

/// Parameter interval `[lo, hi]` of `start + s·dir` lying inside the window,
/// intersected with `s ∈ [0, s_max]` (`None` for a ray).
fn clip_line(
    window: &AtlasWindow,
    start: &PlanePoint,
    dir: &PlanePoint,
    s_max: Option<&Rat>,
) -> Option<(Rat, Option<Rat>)> {
    let mut lo = Rat::zero();
    let mut hi = s_max.cloned();
    for (origin, delta, min, max) in [
        (&start.x, &dir.x, &window.xmin, &window.xmax),
        (&start.y, &dir.y, &window.ymin, &window.ymax),
    ] {
        if delta.is_zero() {
            if origin < min || origin > max {
                return None;
            }
            continue;
        }
        let a = (min - origin) / delta;
        let b = (max - origin) / delta;
        let (enter, exit) = if a <= b { (a, b) } else { (b, a) };
        if enter > lo {
            lo = enter;
        }
        hi = Some(match hi {
            Some(h) if h < exit => h,
            _ => exit,
        });
    }
    match &hi {
        Some(h) if *h < lo => None,
        _ => Some((lo, hi)),
    }
}

pub fn enumerate_case_ii(window: &AtlasWindow) -> Vec<SolutionFeature> {
    let mut features = Vec::new();
    let d = window.max_denominator;
    for p in 1..=d {
        for q in 1..=d {
            if p.gcd(&q) != 1 {
                continue;
            }
            if let Some(feature) = case_ii_segment(window, p, q) {
                features.push(feature);
            }
        }
    }
    features
}

fn case_ii_segment(window: &AtlasWindow, p: u64, q: u64) -> Option<SolutionFeature> {
    let alpha = -Rat::frac(q as i64, p as i64);
    let beta_end = -Rat::frac(1, p as i64);
    // closed end at β = −1/p; the locus runs toward β → 0
    let start = window.project(&alpha, &beta_end).ok()?;
    let (dir, s_max) = match window.frame {
        Frame::Ab | Frame::Primed | Frame::SigmaTau => {
            let end = match window.frame {
                Frame::SigmaTau => PlanePoint::new(Rat::zero(), Rat::zero()),
                Frame::Ab => PlanePoint::new(alpha.clone(), Rat::zero()),
                _ => PlanePoint::new(-&alpha, Rat::zero()),
            };
            (PlanePoint::new(&end.x - &start.x, &end.y - &start.y), Some(Rat::one()))
        }
        // μ' = 1/β' grows without bound along ν' = (q/p)μ'
        Frame::Muv => (PlanePoint::new(Rat::one(), Rat::frac(q as i64, p as i64)), None),
    };
    let (lo, hi) = clip_line(window, &start, &dir, s_max.as_ref())?;
    let at = |s: &Rat| PlanePoint::new(&start.x + s * &dir.x, &start.y + s * &dir.y);
    let hi = hi?;
    let open_end = s_max.as_ref() == Some(&hi);
    let far = at(&hi);
    if open_end && lo == *s_max.as_ref().unwrap() {
        // only the excluded endpoint is visible
        return None;
    }
    Some(SolutionFeature {
        kind: FeatureKind::SegmentCaseII { p, q },
        geometry: vec![at(&lo), far],
        open_end,
    })
}

/// Sporadic points on the line `α = −q/p` from the sweep
/// `m, n ≤ max_index`, `m/p + n/q < 1`, `2 ≤ r ≤ max_index`, sorted by `β`
/// descending. No window filtering.
pub fn sporadic_points(p: u64, q: u64, max_index: u64) -> Result<Vec<(Rat, Vec<Witness>)>> {
    if p == 0 || q == 0 || p.gcd(&q) != 1 {
        return Err(Error::Parameter(format!(
            "p = {p} and q = {q} must be coprime positive integers"
        )));
    }
    let alpha = -Rat::frac(q as i64, p as i64);
    let mut betas = Vec::new();
    for m in 0..=max_index {
        for n in 1..=max_index {
            // m/p + n/q < 1
            if m * q + n * p >= p * q {
                continue;
            }
            for r in 2..=max_index {
                betas.push(beta_from_params(p, q, m, n, r)?);
            }
        }
    }
    betas.sort();
    betas.dedup();
    betas.reverse();

    let mut out = Vec::new();
    for beta in betas {
        if kind_of(&alpha, &beta)? == Kind::Sporadic {
            let witnesses = decide(&alpha, &beta)?.witnesses;
            out.push((beta, witnesses));
        }
    }
    Ok(out)
}

pub fn enumerate_sporadic(p: u64, q: u64, window: &AtlasWindow) -> Result<Vec<SolutionFeature>> {
    let alpha = -Rat::frac(q as i64, p as i64);
    let mut features = Vec::new();
    for (beta, witnesses) in sporadic_points(p, q, window.max_index)? {
        let point = window.project(&alpha, &beta)?;
        if window.contains(&point) {
            features.push(SolutionFeature {
                kind: FeatureKind::SporadicPoint {
                    alpha: alpha.clone(),
                    beta,
                    witnesses,
                },
                geometry: vec![point],
                open_end: false,
            });
        }
    }
    Ok(features)
}

/// `β(p, q, m, n, r)` for `r = 1..=r_max`: increases strictly toward `−1/p`.
pub fn limit_sequence(p: u64, q: u64, m: u64, n: u64, r_max: u64) -> Result<Vec<Rat>> {
    if m * q + n * p >= p * q {
        return Err(Error::Parameter("limit sequences need m/p + n/q < 1".into()));
    }
    (1..=r_max).map(|r| beta_from_params(p, q, m, n, r)).collect()
}

/// Every feature in the window: curves, then segments, then sporadic points
/// for each coprime `p, q ≤ max_denominator`.
pub fn build_atlas(window: &AtlasWindow) -> Result<Vec<SolutionFeature>> {
    let mut features = enumerate_case_i(window);
    features.extend(enumerate_case_ii(window));
    let d = window.max_denominator;
    for p in 1..=d {
        for q in 1..=d {
            if p.gcd(&q) == 1 {
                features.extend(enumerate_sporadic(p, q, window)?);
            }
        }
    }
    Ok(features)
}
