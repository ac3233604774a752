//! Finite atomic measures, their CDFs, and the Lévy distance.

use std::borrow::Cow;
use std::cmp::Ordering;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{self, Q};

/// Atoms closer than this are merged by [`AtomicMeasure::new`].
pub const MERGE_TOL: f64 = 1e-14;
/// Allowed deviation of the total mass from 1 for a probability measure.
pub const PROBABILITY_TOL: f64 = 1e-12;
/// Allowed deviation from `m1 = 0`, `m2 = 1` when the data is not exact.
pub const STANDARDIZATION_TOL: f64 = 1e-10;
/// Absolute tolerance of the Lévy distance bisection.
pub const LEVY_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Atom {
    pub t: f64,
    pub w: f64,
}

/// A finite non-negative measure `Σ wⱼ δ_{tⱼ}`.
///
/// Locations are strictly increasing and weights strictly positive. The atom
/// list may be empty (the zero measure). When the measure was built from
/// rationals, the exact data is kept alongside the `f64` view so transform
/// algebra can run without rounding.
#[derive(Debug, Clone, Default)]
pub struct AtomicMeasure {
    atoms: Vec<Atom>,
    exact: Option<Vec<(Q, Q)>>,
}

#[derive(Serialize, Deserialize)]
struct MeasureJson {
    atoms: Vec<Atom>,
}

impl AtomicMeasure {
    /// Builds a measure from `(location, weight)` pairs in any order, merging
    /// locations closer than [`MERGE_TOL`].
    pub fn new(pairs: impl IntoIterator<Item = (f64, f64)>) -> Result<Self> {
        let mut atoms: Vec<Atom> = pairs.into_iter().map(|(t, w)| Atom { t, w }).collect();
        for a in &atoms {
            if !a.t.is_finite() || !a.w.is_finite() {
                return Err(Error::InvalidMeasure(format!("non-finite atom ({}, {})", a.t, a.w)));
            }
            if a.w <= 0.0 {
                return Err(Error::InvalidMeasure(format!("non-positive weight {} at {}", a.w, a.t)));
            }
        }
        atoms.sort_by(|a, b| a.t.total_cmp(&b.t));
        let mut merged: Vec<Atom> = Vec::with_capacity(atoms.len());
        for a in atoms {
            match merged.last_mut() {
                Some(last) if a.t - last.t < MERGE_TOL => last.w += a.w,
                _ => merged.push(a),
            }
        }
        Ok(AtomicMeasure { atoms: merged, exact: None })
    }

    /// Builds a measure from exact rational data. Equal locations are merged.
    pub fn from_rationals(pairs: impl IntoIterator<Item = (Q, Q)>) -> Result<Self> {
        let mut pairs: Vec<(Q, Q)> = pairs.into_iter().collect();
        if let Some((t, w)) = pairs.iter().find(|(_, w)| !w.is_positive()) {
            return Err(Error::InvalidMeasure(format!("non-positive weight {w} at {t}")));
        }
        pairs.sort_by(|a, b| a.0.cmp(&b.0));
        let mut merged: Vec<(Q, Q)> = Vec::with_capacity(pairs.len());
        for (t, w) in pairs {
            match merged.last_mut() {
                Some(last) if last.0 == t => last.1 += w,
                _ => merged.push((t, w)),
            }
        }
        let atoms: Vec<Atom> = merged
            .iter()
            .map(|(t, w)| Atom { t: exact::to_f64(t), w: exact::to_f64(w) })
            .collect();
        if atoms.windows(2).any(|p| p[0].t >= p[1].t) {
            return Err(Error::InvalidMeasure(
                "distinct rational locations collapse in double precision".into(),
            ));
        }
        Ok(AtomicMeasure { atoms, exact: Some(merged) })
    }

    pub fn zero() -> Self {
        AtomicMeasure::default()
    }

    pub fn delta(t: f64) -> Self {
        AtomicMeasure::from_rationals([(exact::from_f64_decimal(t), Q::one())]).expect("valid point mass")
    }

    /// The symmetric Bernoulli law `½δ₋₁ + ½δ₁`.
    pub fn bernoulli() -> Self {
        AtomicMeasure::from_rationals([(exact::int(-1), exact::frac(1, 2)), (exact::int(1), exact::frac(1, 2))])
            .expect("valid Bernoulli")
    }

    /// The two-atom law with mean 0 and variance 1 putting mass `p` on the
    /// negative atom `-√((1-p)/p)`.
    pub fn standard_two_atom(p: f64) -> Result<Self> {
        if !(p > 0.0 && p < 1.0) {
            return Err(Error::InvalidArgument(format!("two-atom weight must lie in (0,1), got {p}")));
        }
        let a = -((1.0 - p) / p).sqrt();
        let b = (p / (1.0 - p)).sqrt();
        // Keep exactness when the atoms are short decimals (p = 0.8 gives -0.5 and 2).
        let qp = exact::from_f64_decimal(p);
        for digits in [15usize, 12, 9, 6, 3] {
            let qa = exact::from_f64_decimal(format!("{a:.*e}", digits - 1).parse().expect("float"));
            let qb = exact::from_f64_decimal(format!("{b:.*e}", digits - 1).parse().expect("float"));
            if &qp * &qa + (Q::one() - &qp) * &qb == Q::zero() && -(&qa * &qb) == Q::one() {
                return AtomicMeasure::from_rationals([(qa, qp.clone()), (qb, Q::one() - qp)]);
            }
        }
        AtomicMeasure::new([(a, p), (b, 1.0 - p)])
    }

    /// Mean-0, variance-1 probability measure on `locations`: the first
    /// `locations.len() - 3` weights are given, the last three are solved for.
    pub fn standardized_on(locations: &[Q], leading_weights: &[Q]) -> Result<Self> {
        if locations.len() < 3 || leading_weights.len() + 3 != locations.len() {
            return Err(Error::InvalidArgument(
                "need at least three locations and exactly three free weights".into(),
            ));
        }
        let split = leading_weights.len();
        let (s0, s1, s2) = locations[..split].iter().zip(leading_weights).fold(
            (Q::zero(), Q::zero(), Q::zero()),
            |(a, b, c), (t, w)| (a + w, b + w * t, c + w * t * t),
        );
        let rhs = [Q::one() - s0, -s1, Q::one() - s2];
        let (a, b, c) = (&locations[split], &locations[split + 1], &locations[split + 2]);
        // Vandermonde system; Cramer's rule via Lagrange basis at a, b, c.
        let solve = |p: &Q, q: &Q, r: &Q| -> Q {
            // weight at p: ∑ rhs_k · coeff_k of the Lagrange polynomial (x-q)(x-r)/((p-q)(p-r))
            let denom = (p - q) * (p - r);
            (&rhs[0] * (q * r) - &rhs[1] * (q + r) + &rhs[2]) / denom
        };
        let weights = [solve(a, b, c), solve(b, a, c), solve(c, a, b)];
        let pairs = locations[..split]
            .iter()
            .cloned()
            .zip(leading_weights.iter().cloned())
            .chain([a, b, c].into_iter().cloned().zip(weights));
        AtomicMeasure::from_rationals(pairs)
    }

    pub fn atoms(&self) -> &[Atom] {
        &self.atoms
    }

    pub fn len(&self) -> usize {
        self.atoms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.atoms.is_empty()
    }

    pub fn locations(&self) -> impl Iterator<Item = f64> + '_ {
        self.atoms.iter().map(|a| a.t)
    }

    pub fn is_exact(&self) -> bool {
        self.exact.is_some()
    }

    /// Exact atom data: the stored rationals, or the decimal reading of the
    /// `f64` atoms when the measure was built from floats.
    pub fn exact_atoms(&self) -> Cow<'_, [(Q, Q)]> {
        match &self.exact {
            Some(e) => Cow::Borrowed(e),
            None => Cow::Owned(
                self.atoms
                    .iter()
                    .map(|a| (exact::from_f64_decimal(a.t), exact::from_f64_decimal(a.w)))
                    .collect(),
            ),
        }
    }

    pub fn total_mass(&self) -> f64 {
        self.atoms.iter().map(|a| a.w).sum()
    }

    pub fn moment(&self, k: u32) -> f64 {
        self.atoms.iter().map(|a| a.w * a.t.powi(k as i32)).sum()
    }

    /// `Σ wⱼ |tⱼ|ᵏ`.
    pub fn abs_moment(&self, k: u32) -> f64 {
        self.atoms.iter().map(|a| a.w * a.t.abs().powi(k as i32)).sum()
    }

    /// `Σ wⱼ tⱼᵏ` over [`Self::exact_atoms`].
    pub fn moment_exact(&self, k: u32) -> Q {
        self.exact_atoms().iter().map(|(t, w)| w * exact::pow(t, k)).fold(Q::zero(), |acc, x| acc + x)
    }

    pub fn is_probability(&self) -> bool {
        match &self.exact {
            Some(e) if e.iter().map(|(_, w)| w.clone()).fold(Q::zero(), |a, b| a + b).is_one() => true,
            _ => (self.total_mass() - 1.0).abs() <= PROBABILITY_TOL,
        }
    }

    pub fn require_probability(&self) -> Result<()> {
        if self.is_probability() {
            Ok(())
        } else {
            Err(Error::InvalidMeasure(format!("total mass {} is not 1", self.total_mass())))
        }
    }

    /// Checks `m₀ = 1`, `m₁ = 0`, `m₂ = 1`. Returns `true` when these hold
    /// exactly in [`Self::exact_atoms`] and `false` when they only hold to
    /// [`STANDARDIZATION_TOL`].
    pub fn require_standardized(&self) -> Result<bool> {
        self.require_probability()
            .map_err(|e| Error::Hypothesis(e.to_string()))?;
        let atoms = self.exact_atoms();
        let m0: Q = atoms.iter().map(|(_, w)| w.clone()).fold(Q::zero(), |a, b| a + b);
        if m0.is_one() && self.moment_exact(1).is_zero() && self.moment_exact(2).is_one() {
            return Ok(true);
        }
        let (m1, m2) = (self.moment(1), self.moment(2));
        if m1.abs() > STANDARDIZATION_TOL || (m2 - 1.0).abs() > STANDARDIZATION_TOL {
            return Err(Error::Hypothesis(format!("need mean 0 and variance 1, got m1 = {m1}, m2 = {m2}")));
        }
        Ok(false)
    }

    /// `D_a μ`: atoms moved to `a·tⱼ`, weights unchanged.
    pub fn dilate(&self, a: f64) -> Result<Self> {
        if !(a > 0.0 && a.is_finite()) {
            return Err(Error::InvalidArgument(format!("dilation factor must be positive, got {a}")));
        }
        if a == 1.0 {
            return Ok(self.clone());
        }
        AtomicMeasure::new(self.atoms.iter().map(|x| (a * x.t, x.w)))
    }

    /// Dilation by an exact rational factor; keeps the measure exact.
    pub fn dilate_exact(&self, a: &Q) -> Result<Self> {
        if !a.is_positive() {
            return Err(Error::InvalidArgument(format!("dilation factor must be positive, got {a}")));
        }
        AtomicMeasure::from_rationals(self.exact_atoms().iter().map(|(t, w)| (t * a, w.clone())))
    }

    pub fn cdf(&self) -> Cdf {
        let mut cumulative = Vec::with_capacity(self.atoms.len());
        let mut acc = 0.0;
        for a in &self.atoms {
            acc += a.w;
            cumulative.push(acc);
        }
        Cdf { locations: self.atoms.iter().map(|a| a.t).collect(), cumulative }
    }

    /// `μ((a, b])` with `a`, `b` possibly infinite.
    pub fn mass_half_open(&self, a: f64, b: f64) -> f64 {
        self.atoms.iter().filter(|x| x.t > a && x.t <= b).map(|x| x.w).sum()
    }

    /// Atom-wise comparison: same atom count, locations and weights within `tol`.
    pub fn approx_eq(&self, other: &AtomicMeasure, tol: f64) -> bool {
        self.len() == other.len()
            && self
                .atoms
                .iter()
                .zip(&other.atoms)
                .all(|(a, b)| (a.t - b.t).abs() <= tol && (a.w - b.w).abs() <= tol)
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        let parsed: MeasureJson = serde_json::from_str(s)?;
        if let Some(p) = parsed.atoms.windows(2).find(|p| p[0].t >= p[1].t) {
            return Err(Error::InvalidMeasure(format!(
                "locations must be strictly increasing ({} then {})",
                p[0].t, p[1].t
            )));
        }
        let m = AtomicMeasure::new(parsed.atoms.iter().map(|a| (a.t, a.w)))?;
        if m.len() != parsed.atoms.len() {
            return Err(Error::InvalidMeasure("locations closer than the merge tolerance".into()));
        }
        // Decimal input is exact input.
        let exact: Vec<(Q, Q)> = m.exact_atoms().into_owned();
        Ok(AtomicMeasure { atoms: m.atoms, exact: Some(exact) })
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string(&MeasureJson { atoms: self.atoms.clone() }).expect("finite atoms serialize")
    }
}

impl PartialEq for AtomicMeasure {
    fn eq(&self, other: &Self) -> bool {
        self.atoms == other.atoms
    }
}

/// Step CDF of an atomic measure.
#[derive(Debug, Clone)]
pub struct Cdf {
    locations: Vec<f64>,
    cumulative: Vec<f64>,
}

impl Cdf {
    fn mass_up_to(&self, count: usize) -> f64 {
        if count == 0 {
            0.0
        } else {
            self.cumulative[count - 1]
        }
    }

    /// `μ((-∞, x])`.
    pub fn value(&self, x: f64) -> f64 {
        self.mass_up_to(self.locations.partition_point(|&t| t <= x))
    }

    /// `μ((-∞, x))`.
    pub fn left_limit(&self, x: f64) -> f64 {
        self.mass_up_to(self.locations.partition_point(|&t| t < x))
    }

    pub fn total(&self) -> f64 {
        self.cumulative.last().copied().unwrap_or(0.0)
    }

    /// `μ((-∞, x])` for the measure translated by `shift`. Comparisons use
    /// the same rounded `t + shift` that produced the probe points, so a probe
    /// placed on a shifted atom is classified consistently.
    fn shifted_value(&self, x: f64, shift: f64) -> f64 {
        self.mass_up_to(self.locations.partition_point(|&t| t + shift <= x))
    }

    fn shifted_left_limit(&self, x: f64, shift: f64) -> f64 {
        self.mass_up_to(self.locations.partition_point(|&t| t + shift < x))
    }
}

/// Whether `F(x-ε) - ε ≤ G(x) ≤ F(x+ε) + ε` holds for all real `x`, where `F`
/// is the CDF of `mu` and `G` that of `nu`.
///
/// All three functions are step functions, so it is enough to compare their
/// right values and left limits at every jump of `G`, `F(·-ε)` and `F(·+ε)`.
pub fn levy_feasible(mu: &Cdf, nu: &Cdf, eps: f64) -> bool {
    let probes = nu
        .locations
        .iter()
        .copied()
        .chain(mu.locations.iter().map(|&t| t + eps))
        .chain(mu.locations.iter().map(|&t| t - eps));
    for x in probes {
        let g = nu.value(x);
        if mu.shifted_value(x, eps) - eps > g || g > mu.shifted_value(x, -eps) + eps {
            return false;
        }
        let g = nu.left_limit(x);
        if mu.shifted_left_limit(x, eps) - eps > g || g > mu.shifted_left_limit(x, -eps) + eps {
            return false;
        }
    }
    true
}

/// Lévy distance between two probability measures, by bisection of the
/// feasible ε on `[0, 1]` to [`LEVY_TOL`].
pub fn levy_distance(mu: &AtomicMeasure, nu: &AtomicMeasure) -> Result<f64> {
    mu.require_probability()?;
    nu.require_probability()?;
    let (f, g) = (mu.cdf(), nu.cdf());
    if levy_feasible(&f, &g, 0.0) {
        return Ok(0.0);
    }
    let (mut lo, mut hi) = (0.0_f64, 1.0_f64);
    while hi - lo > LEVY_TOL {
        let mid = 0.5 * (lo + hi);
        if levy_feasible(&f, &g, mid) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Ok(hi)
}

/// Outcome of the concentration search around `±1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Concentration {
    /// Every `ε ∈ (eps_star, 1)` satisfies `μ((-1-ε,-1+ε) ∪ (1-ε,1+ε)) ≥ 1-ε`,
    /// giving `d_lev(μ, 𝐛) ≤ prop1_bound = 3.5·eps_star`.
    Concentrated { eps_star: f64, prop1_bound: f64 },
    NotConcentrated,
}

impl Concentration {
    pub fn bound(&self) -> Option<f64> {
        match self {
            Concentration::Concentrated { prop1_bound, .. } => Some(*prop1_bound),
            Concentration::NotConcentrated => None,
        }
    }
}

/// Smallest `ε` for which `μ` puts mass at least `1-ε` within `ε` of `±1`.
///
/// The open-neighbourhood mass is a step function of `ε` that jumps just
/// after each atom's distance to `{-1, 1}`, so the infimum is either such a
/// distance or the level `1 - mass` on one of the flat pieces.
pub fn bernoulli_concentration(mu: &AtomicMeasure) -> Result<Concentration> {
    mu.require_standardized()?;
    let mut dist: Vec<(f64, f64)> = mu
        .atoms()
        .iter()
        .map(|a| ((a.t - 1.0).abs().min((a.t + 1.0).abs()), a.w))
        .collect();
    dist.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap_or(Ordering::Equal));

    let mut best = f64::INFINITY;
    // Piece i: ε in (d_i, d_{i+1}] holds the first i+1 atoms (by distance).
    // Before the first jump nothing is captured and ε ≥ 1 would be needed.
    let mut captured = 0.0;
    for (i, &(d, w)) in dist.iter().enumerate() {
        captured += w;
        let next = dist.get(i + 1).map_or(f64::INFINITY, |x| x.0);
        if next <= d {
            continue;
        }
        let candidate = d.max(1.0 - captured);
        if candidate <= next {
            best = best.min(candidate);
            break;
        }
    }
    if best < 1.0 {
        let eps_star = best.max(0.0);
        Ok(Concentration::Concentrated { eps_star, prop1_bound: 3.5 * eps_star })
    } else {
        Ok(Concentration::NotConcentrated)
    }
}
