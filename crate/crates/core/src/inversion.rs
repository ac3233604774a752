//! Quantitative Stieltjes–Perron inversion: Poisson-smoothed interval masses,
//! the two-sided mass bracket with margin `2y/(πδ)`, the Cauchy-smoothed
//! measure `μ^y`, and Lévy-distance bounds from Cauchy-transform data.

use std::cell::Cell;
use std::f64::consts::PI;
use std::fmt;
use std::sync::Arc;

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::measure::AtomicMeasure;
use crate::quadrature::{integrate, QuadResult};
use crate::transform::{eval_g, ComplexPoint};

/// Requested absolute accuracy of [`smoothed_mass_quadrature`].
pub const QUAD_TOL: f64 = 1e-10;
const MAX_INTERVALS: usize = 200_000;

/// `P(C > u)` for a standard Cauchy variable, accurate in the right tail.
fn cauchy_upper(u: f64) -> f64 {
    1.0f64.atan2(u) / PI
}

/// `P(C < u)`, accurate in the left tail.
fn cauchy_lower(u: f64) -> f64 {
    1.0f64.atan2(-u) / PI
}

/// Mass that the Cauchy kernel of scale `y` centred at `t` puts on `[a, b]`.
fn kernel_mass(t: f64, a: f64, b: f64, y: f64) -> f64 {
    let (ua, ub) = ((a - t) / y, (b - t) / y);
    if t <= a {
        cauchy_upper(ua) - cauchy_upper(ub)
    } else if t >= b {
        cauchy_lower(ub) - cauchy_lower(ua)
    } else {
        1.0 - cauchy_lower(ua) - cauchy_upper(ub)
    }
}

fn check_interval(a: f64, b: f64, y: f64) -> Result<()> {
    if a.is_nan() || b.is_nan() || a >= b {
        return Err(Error::InvalidArgument(format!("need a < b, got a = {a}, b = {b}")));
    }
    if a == f64::INFINITY || b == f64::NEG_INFINITY {
        return Err(Error::InvalidArgument("empty interval at infinity".into()));
    }
    if !(y > 0.0 && y.is_finite()) {
        return Err(Error::InvalidArgument(format!("need y > 0, got {y}")));
    }
    Ok(())
}

/// `-(1/π)∫_a^b Im G_μ(x+iy) dx` in closed form:
/// `Σ wⱼ (1/π)[arctan((b−tⱼ)/y) − arctan((a−tⱼ)/y)]`. Endpoints may be infinite.
pub fn poisson_smoothed_mass(mu: &AtomicMeasure, a: f64, b: f64, y: f64) -> Result<f64> {
    check_interval(a, b, y)?;
    Ok(mu.atoms().iter().map(|at| at.w * kernel_mass(at.t, a, b, y)).sum())
}

/// Mass and second absolute moment of the measure behind a transform,
/// used to certify truncation of infinite integration ranges.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TailData {
    pub mass: f64,
    pub second_moment: f64,
}

impl TailData {
    /// Constant `c` with `−Im G(x+iy)/π ≤ c/x²` for every `x ≠ 0`.
    ///
    /// Atoms with `|t| ≤ |x|/2` contribute at most `4y/x²` each unit of mass;
    /// the rest has mass at most `4 m₂/x²` and kernel at most `1/y`.
    fn envelope(&self, y: f64) -> f64 {
        (4.0 * y * self.mass + 4.0 * self.second_moment / y) / PI
    }
}

type TransformFn = dyn Fn(Complex64) -> Complex64 + Send + Sync;

/// Black-box Cauchy transform `z ↦ G(z)` on the upper half-plane.
#[derive(Clone)]
pub struct TransformEvaluator {
    g: Arc<TransformFn>,
    tail: Option<TailData>,
    hints: Vec<f64>,
}

impl fmt::Debug for TransformEvaluator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("TransformEvaluator")
            .field("tail", &self.tail)
            .field("hints", &self.hints)
            .finish_non_exhaustive()
    }
}

impl TransformEvaluator {
    pub fn new(g: impl Fn(Complex64) -> Complex64 + Send + Sync + 'static) -> Self {
        TransformEvaluator { g: Arc::new(g), tail: None, hints: Vec::new() }
    }

    pub fn with_tail(mut self, tail: TailData) -> Self {
        self.tail = Some(tail);
        self
    }

    /// Locations where `Im G` may peak; quadrature seeds its partition there.
    pub fn with_hints(mut self, hints: Vec<f64>) -> Self {
        self.hints = hints;
        self
    }

    pub fn from_measure(mu: &AtomicMeasure) -> Self {
        let m = mu.clone();
        let tail = TailData { mass: mu.total_mass(), second_moment: mu.abs_moment(2) };
        TransformEvaluator::new(move |z| {
            let z = ComplexPoint { x: z.re, y: z.im };
            eval_g(&m, z)
        })
        .with_tail(tail)
        .with_hints(mu.locations().collect())
    }

    pub fn eval(&self, z: Complex64) -> Complex64 {
        (self.g)(z)
    }

    pub fn tail(&self) -> Option<TailData> {
        self.tail
    }
}

/// Quadrature partition: peak-resolving points around each hint, geometric
/// points out to the truncation radius, clipped to `[lo, hi]`.
fn partition(hints: &[f64], y: f64, lo: f64, hi: f64) -> Vec<f64> {
    let mut pts = vec![lo, hi, 0.0];
    let mut reach = 1.0_f64;
    for &h in hints {
        reach = reach.max(h.abs() + 1.0);
        pts.push(h);
        let mut d = y;
        for _ in 0..6 {
            pts.push(h - d);
            pts.push(h + d);
            d *= 4.0;
        }
    }
    let mut r = reach;
    while r < lo.abs().max(hi.abs()) {
        pts.push(r);
        pts.push(-r);
        r *= 2.0;
    }
    pts.retain(|&p| p >= lo && p <= hi);
    pts.sort_by(f64::total_cmp);
    pts.dedup();
    pts
}

/// Finite integration range plus the certified mass discarded outside it.
fn truncate(a: f64, b: f64, y: f64, tail: Option<TailData>, tol: f64) -> Result<(f64, f64, f64)> {
    if a.is_finite() && b.is_finite() {
        return Ok((a, b, 0.0));
    }
    let Some(tail) = tail else {
        return Err(Error::Unsupported("infinite endpoint needs tail-bound data".into()));
    };
    let c = tail.envelope(y);
    // Each infinite side discards at most c/X ≤ tol/8.
    let x_cut = (8.0 * c / tol).max(1.0);
    let mut discarded = 0.0;
    let lo = if a.is_finite() { a } else {
        discarded += c / x_cut;
        -x_cut
    };
    let hi = if b.is_finite() { b } else {
        discarded += c / x_cut;
        x_cut
    };
    Ok((lo, hi, discarded))
}

/// Smoothed mass and its certified error (quadrature estimate plus
/// truncated tail).
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SmoothedMass {
    pub value: f64,
    pub quad_error: f64,
}

/// `-(1/π)∫_a^b Im G(x+iy) dx` by adaptive quadrature, with infinite tails
/// truncated where the second-moment envelope certifies the discarded part
/// is below `QUAD_TOL/4`.
pub fn smoothed_mass_quadrature(g: &TransformEvaluator, a: f64, b: f64, y: f64) -> Result<SmoothedMass> {
    check_interval(a, b, y)?;
    let (lo, hi, discarded) = truncate(a, b, y, g.tail, QUAD_TOL)?;
    if lo >= hi {
        return Ok(SmoothedMass { value: 0.0, quad_error: discarded });
    }
    let worst_positive = Cell::new(0.0_f64);
    let integrand = |x: f64| {
        let v = g.eval(Complex64::new(x, y));
        if v.im > worst_positive.get() {
            worst_positive.set(v.im);
        }
        -v.im / PI
    };
    let r: QuadResult = integrate(integrand, &partition(&g.hints, y, lo, hi), 0.75 * QUAD_TOL, MAX_INTERVALS)?;
    if worst_positive.get() > 1e-12 {
        return Err(Error::NotAMeasureTransform(format!(
            "Im G reached {} > 0 on the line Im z = {y}",
            worst_positive.get()
        )));
    }
    Ok(SmoothedMass { value: r.value, quad_error: r.error + discarded })
}

/// Two-sided certificate for interval masses at smoothing scale `y`:
/// `μ((a+δ, b−δ]) ≤ inner_upper` and `μ((a−δ, b+δ]) ≥ outer_lower`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MassBracket {
    pub smoothed_integral: f64,
    /// `2y/(πδ)`.
    pub margin: f64,
    pub inner_upper: f64,
    pub outer_lower: f64,
    pub a: f64,
    pub b: f64,
    pub y: f64,
    pub delta: f64,
    /// Numerical error of `smoothed_integral` (zero for the closed form).
    pub quad_error: f64,
}

/// Interval masses tested against a bracket.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BracketCheck {
    pub inner_mass: f64,
    pub outer_mass: f64,
    /// `inner_upper − μ((a+δ, b−δ])`, non-negative when the bound holds.
    pub inner_slack: f64,
    /// `μ((a−δ, b+δ]) − outer_lower`, non-negative when the bound holds.
    pub outer_slack: f64,
}

impl MassBracket {
    fn build(integral: f64, quad_error: f64, a: f64, b: f64, y: f64, delta: f64) -> Self {
        let margin = 2.0 * y / (PI * delta);
        MassBracket {
            smoothed_integral: integral,
            margin,
            inner_upper: integral + margin,
            outer_lower: integral - margin,
            a,
            b,
            y,
            delta,
            quad_error,
        }
    }

    /// `(a+δ, b−δ]`; infinite endpoints stay infinite.
    pub fn inner_interval(&self) -> (f64, f64) {
        (self.a + self.delta, self.b - self.delta)
    }

    /// `(a−δ, b+δ]`.
    pub fn outer_interval(&self) -> (f64, f64) {
        (self.a - self.delta, self.b + self.delta)
    }

    pub fn check(&self, mu: &AtomicMeasure) -> BracketCheck {
        let (ia, ib) = self.inner_interval();
        let (oa, ob) = self.outer_interval();
        let inner_mass = mu.mass_half_open(ia, ib);
        let outer_mass = mu.mass_half_open(oa, ob);
        BracketCheck {
            inner_mass,
            outer_mass,
            inner_slack: self.inner_upper - inner_mass,
            outer_slack: outer_mass - self.outer_lower,
        }
    }
}

#[derive(Serialize)]
struct BracketJson {
    a: Option<f64>,
    b: Option<f64>,
    y: f64,
    delta: f64,
    integral: f64,
    margin: f64,
    inner_upper: f64,
    outer_lower: f64,
}

impl Serialize for MassBracket {
    /// Infinite endpoints serialize as `null`.
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        BracketJson {
            a: self.a.is_finite().then_some(self.a),
            b: self.b.is_finite().then_some(self.b),
            y: self.y,
            delta: self.delta,
            integral: self.smoothed_integral,
            margin: self.margin,
            inner_upper: self.inner_upper,
            outer_lower: self.outer_lower,
        }
        .serialize(s)
    }
}

fn check_delta(a: f64, b: f64, delta: f64) -> Result<()> {
    if !(delta > 0.0 && delta.is_finite()) {
        return Err(Error::InvalidArgument(format!("need δ > 0, got {delta}")));
    }
    if a.is_finite() && b.is_finite() && delta >= 0.5 * (b - a) {
        return Err(Error::InvalidArgument(format!("need δ < (b − a)/2 = {}, got {delta}", 0.5 * (b - a))));
    }
    Ok(())
}

/// Mass bracket for an atomic measure, with the smoothed integral in closed form.
pub fn theorem2_bracket(mu: &AtomicMeasure, a: f64, b: f64, y: f64, delta: f64) -> Result<MassBracket> {
    check_interval(a, b, y)?;
    check_delta(a, b, delta)?;
    let integral = poisson_smoothed_mass(mu, a, b, y)?;
    Ok(MassBracket::build(integral, 0.0, a, b, y, delta))
}

/// Mass bracket from a black-box transform, integral by quadrature.
pub fn theorem2_bracket_transform(
    g: &TransformEvaluator,
    a: f64,
    b: f64,
    y: f64,
    delta: f64,
) -> Result<MassBracket> {
    check_interval(a, b, y)?;
    check_delta(a, b, delta)?;
    let m = smoothed_mass_quadrature(g, a, b, y)?;
    Ok(MassBracket::build(m.value, m.quad_error, a, b, y, delta))
}

/// `√(2y/π)`, the Lévy distance bound between `μ` and `μ^y = μ * C_y`.
pub fn levy_smoothing_bound(y: f64) -> f64 {
    (2.0 * y / PI).sqrt()
}

/// The Cauchy-smoothed measure `μ^y` with density `−(1/π) Im G_μ(x+iy)`.
#[derive(Debug, Clone)]
pub struct SmoothedMeasure {
    mu: AtomicMeasure,
    y: f64,
}

pub fn smoothed_measure(mu: &AtomicMeasure, y: f64) -> Result<SmoothedMeasure> {
    if !(y > 0.0 && y.is_finite()) {
        return Err(Error::InvalidArgument(format!("need y > 0, got {y}")));
    }
    Ok(SmoothedMeasure { mu: mu.clone(), y })
}

impl SmoothedMeasure {
    pub fn y(&self) -> f64 {
        self.y
    }

    pub fn density(&self, x: f64) -> f64 {
        -eval_g(&self.mu, ComplexPoint { x, y: self.y }).im / PI
    }

    pub fn cdf(&self, x: f64) -> f64 {
        if x == f64::NEG_INFINITY {
            return 0.0;
        }
        poisson_smoothed_mass(&self.mu, f64::NEG_INFINITY, x, self.y).expect("valid half-line")
    }

    /// Smallest `x` (to bisection precision) with `cdf(x) ≥ p`, for `p ∈ (0, mass)`.
    pub fn quantile(&self, p: f64) -> f64 {
        let (mut lo, mut hi) = (-1.0_f64, 1.0_f64);
        while self.cdf(lo) > p {
            lo *= 2.0;
        }
        while self.cdf(hi) < p {
            hi *= 2.0;
        }
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if mid <= lo || mid >= hi {
                break;
            }
            if self.cdf(mid) < p {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        hi
    }

    /// Atomic approximation with `n` equal atoms at the mid-quantiles
    /// `(i − ½)/n`; its Kolmogorov (hence Lévy) distance to `μ^y` is at most `1/n`.
    pub fn discretize(&self, n: usize) -> Result<AtomicMeasure> {
        let mass = self.mu.total_mass();
        let w = mass / n as f64;
        AtomicMeasure::new((0..n).map(|i| (self.quantile(mass * (i as f64 + 0.5) / n as f64), w)))
    }
}

/// `√(8y/π) + (1/π)∫|Im G_μ − Im G_ν| dx` with its pieces.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CauchyLevyBound {
    /// Sum of the smoothing term, the integral, and its certified error.
    pub bound: f64,
    pub smoothing_term: f64,
    pub integral: f64,
    pub quad_error: f64,
}

/// Upper bound on `d_lev(μ, ν)` from the Cauchy transforms on the line `Im z = y`.
pub fn levy_cauchy_bound(mu: &AtomicMeasure, nu: &AtomicMeasure, y: f64) -> Result<CauchyLevyBound> {
    mu.require_probability()?;
    nu.require_probability()?;
    if !(y > 0.0 && y.is_finite()) {
        return Err(Error::InvalidArgument(format!("need y > 0, got {y}")));
    }
    let smoothing_term = (8.0 * y / PI).sqrt();
    if mu == nu {
        return Ok(CauchyLevyBound { bound: smoothing_term, smoothing_term, integral: 0.0, quad_error: 0.0 });
    }
    let tol = 1e-9;
    let tail = TailData {
        mass: mu.total_mass() + nu.total_mass(),
        second_moment: mu.abs_moment(2) + nu.abs_moment(2),
    };
    let (lo, hi, discarded) = truncate(f64::NEG_INFINITY, f64::INFINITY, y, Some(tail), tol)?;
    let hints: Vec<f64> = mu.locations().chain(nu.locations()).collect();
    let integrand = |x: f64| {
        let z = ComplexPoint { x, y };
        (eval_g(mu, z).im - eval_g(nu, z).im).abs() / PI
    };
    let r = integrate(integrand, &partition(&hints, y, lo, hi), 0.75 * tol, MAX_INTERVALS)?;
    let quad_error = r.error + discarded;
    Ok(CauchyLevyBound { bound: smoothing_term + r.value + quad_error, smoothing_term, integral: r.value, quad_error })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::measure::levy_distance;

    const ARCTAN10: f64 = 1.471_127_674_303_734_7;

    #[test]
    fn closed_form_examples() {
        let d0 = AtomicMeasure::delta(0.0);
        let v = poisson_smoothed_mass(&d0, -1.0, 1.0, 0.1).unwrap();
        assert!((v - 2.0 / PI * ARCTAN10).abs() < 1e-15);
        assert!((v - 0.936549).abs() < 1e-6);

        let mu = AtomicMeasure::new([(-0.3, 0.25), (2.0, 0.75)]).unwrap();
        assert_eq!(poisson_smoothed_mass(&mu, f64::NEG_INFINITY, f64::INFINITY, 0.7).unwrap(), 1.0);

        let b = AtomicMeasure::bernoulli();
        let c = 0.6;
        let half = 0.5 * kernel_mass(1.0, -c, c, 0.2);
        let v = poisson_smoothed_mass(&b, -c, c, 0.2).unwrap();
        assert!((v - 2.0 * half).abs() < 1e-15);

        assert!(poisson_smoothed_mass(&b, 1.0, 1.0, 0.1).is_err());
        assert!(poisson_smoothed_mass(&b, 0.0, 1.0, 0.0).is_err());
    }

    #[test]
    fn far_tails_keep_relative_accuracy() {
        // Atom far to the right of [a, b]: mass ≈ y(b−a)/(π d²) with no cancellation.
        let v = kernel_mass(1e6, -1.0, 1.0, 1e-3);
        let want = 1e-3 * 2.0 / (PI * 1e12);
        assert!(((v - want) / want).abs() < 1e-5, "{v} vs {want}");
        let v = kernel_mass(-1e6, -1.0, 1.0, 1e-3);
        assert!(((v - want) / want).abs() < 1e-5);
    }

    #[test]
    fn quadrature_examples() {
        let d0 = AtomicMeasure::delta(0.0);
        let g = TransformEvaluator::from_measure(&d0);
        let r = smoothed_mass_quadrature(&g, -1.0, 1.0, 0.1).unwrap();
        assert!((r.value - 2.0 / PI * ARCTAN10).abs() < 1e-9);
        assert!(r.quad_error <= QUAD_TOL);

        let zero = TransformEvaluator::new(|_| Complex64::new(0.0, 0.0))
            .with_tail(TailData { mass: 0.0, second_moment: 0.0 });
        assert_eq!(smoothed_mass_quadrature(&zero, f64::NEG_INFINITY, 3.0, 0.1).unwrap().value, 0.0);

        let mu = AtomicMeasure::new([(-1.2, 0.3), (0.4, 0.5), (2.5, 0.2)]).unwrap();
        let g = TransformEvaluator::from_measure(&mu);
        for &(a, b, y) in &[(f64::NEG_INFINITY, 0.0, 0.05), (-0.5, f64::INFINITY, 0.01), (f64::NEG_INFINITY, f64::INFINITY, 0.3)] {
            let q = smoothed_mass_quadrature(&g, a, b, y).unwrap();
            let c = poisson_smoothed_mass(&mu, a, b, y).unwrap();
            assert!((q.value - c).abs() < 1e-9, "[{a}, {b}] y={y}: {} vs {c}", q.value);
        }
    }

    #[test]
    fn quadrature_needs_tail_data_for_infinite_ranges() {
        let g = TransformEvaluator::new(|z| z.inv());
        assert!(matches!(smoothed_mass_quadrature(&g, f64::NEG_INFINITY, 0.0, 0.1), Err(Error::Unsupported(_))));
        assert!(smoothed_mass_quadrature(&g, -1.0, 1.0, 0.1).is_ok());
    }

    #[test]
    fn quadrature_rejects_non_nevanlinna_input() {
        let g = TransformEvaluator::new(|z| -z.inv());
        assert!(matches!(smoothed_mass_quadrature(&g, -1.0, 1.0, 0.1), Err(Error::NotAMeasureTransform(_))));
    }

    #[test]
    fn bracket_example() {
        let d0 = AtomicMeasure::delta(0.0);
        let br = theorem2_bracket(&d0, -1.0, 1.0, 0.1, 0.5).unwrap();
        assert!((br.margin - 0.127324).abs() < 1e-6);
        assert!((br.inner_upper - 1.063873).abs() < 1e-6);
        assert!((br.outer_lower - 0.809225).abs() < 1e-6);
        let c = br.check(&d0);
        assert_eq!((c.inner_mass, c.outer_mass), (1.0, 1.0));
        assert!(c.inner_slack >= 0.0 && c.outer_slack >= 0.0);

        assert!(theorem2_bracket(&d0, -1.0, 1.0, 0.1, 1.0).is_err());
        assert!(theorem2_bracket(&d0, -1.0, 1.0, 0.1, 0.0).is_err());
        assert!(theorem2_bracket(&d0, f64::NEG_INFINITY, 1.0, 0.1, 5.0).is_ok());
    }

    #[test]
    fn bracket_recovers_mass_as_y_vanishes() {
        let b = AtomicMeasure::bernoulli();
        let y: f64 = 1e-8;
        let br = theorem2_bracket(&b, -2.0, 0.0, y, y.sqrt()).unwrap();
        assert!((br.smoothed_integral - 0.5).abs() < 1e-3);
        assert!(br.margin < 1e-3);
    }

    #[test]
    fn bracket_serializes_infinite_endpoints_as_null() {
        let br = theorem2_bracket(&AtomicMeasure::bernoulli(), f64::NEG_INFINITY, 0.0, 0.1, 0.3).unwrap();
        let v: serde_json::Value = serde_json::to_value(br).unwrap();
        assert!(v["a"].is_null());
        assert_eq!(v["b"], 0.0);
        for key in ["y", "delta", "integral", "margin", "inner_upper", "outer_lower"] {
            assert!(v[key].is_number(), "{key}");
        }
    }

    #[test]
    fn smoothing_bound_values() {
        assert!((levy_smoothing_bound(0.02) - 0.112838).abs() < 1e-6);
        assert!(levy_smoothing_bound(1e-16) < 1e-7);
        // δ = √(2y/π) turns the margin 2y/(πδ) into the same number.
        let y = 0.013;
        let d = levy_smoothing_bound(y);
        assert!((2.0 * y / (PI * d) - d).abs() < 1e-15);
    }

    #[test]
    fn smoothed_measure_cdf_and_density() {
        let b = AtomicMeasure::bernoulli();
        let s = smoothed_measure(&b, 0.1).unwrap();
        assert!((s.cdf(0.0) - 0.5).abs() < 1e-15);
        assert!(s.cdf(-50.0) < 2e-3 && s.cdf(50.0) > 1.0 - 2e-3);
        let q = s.quantile(0.25);
        assert!((s.cdf(q) - 0.25).abs() < 1e-12);
        let want = 0.5 * 0.1 / PI * (1.0 / (1.0 + 0.01) + 1.0 / (9.0 + 0.01)) / 0.1 * 0.1 / 0.1;
        let got = s.density(0.0);
        let direct = (0.5 / PI) * (0.1 / (1.0 + 0.01)) * 2.0;
        assert!((got - direct).abs() < 1e-15, "{got} {direct} {want}");
    }

    #[test]
    fn cauchy_bound_examples() {
        let b = AtomicMeasure::bernoulli();
        let r = levy_cauchy_bound(&b, &b, 1e-3).unwrap();
        assert_eq!(r.bound, (8e-3 / PI).sqrt());

        let nu = AtomicMeasure::new([(-1.02, 0.5), (0.99, 0.5)]).unwrap();
        let r = levy_cauchy_bound(&b, &nu, 1e-3).unwrap();
        assert!(r.bound >= levy_distance(&b, &nu).unwrap());

        let perturbed = AtomicMeasure::new([(-1.02, 0.45), (0.3, 0.1), (0.99, 0.45)]).unwrap();
        let r2 = levy_cauchy_bound(&b, &perturbed, 1e-3).unwrap();
        assert!(r2.integral > r.integral);
    }
}
