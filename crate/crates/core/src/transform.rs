//! Cauchy and F-transforms of atomic measures, measure recovery from a
//! rational transform, the pointwise transform bounds, and extraction of the
//! continued-fraction data `(α, ω)` with `F_μ(z) = z − 1/(z − α − G_ω(z))`.

use num_complex::Complex64;
use num_traits::{One, Signed};

use crate::error::{Error, Result};
use crate::exact::{self, Q};
use crate::measure::AtomicMeasure;
use crate::poly::{Polynomial, RationalFn};
use crate::roots::real_roots;

/// Tolerance on the projected-away coefficients when the input only
/// satisfies `m₁ = 0`, `m₂ = 1` approximately.
const PROJECTION_TOL: f64 = 1e-8;
/// Residues this small relative to the total mass come from a pole and a
/// zero that cancel mathematically but not in rounded input data.
const SPURIOUS_RESIDUE_TOL: f64 = 1e-15;
/// Relative tolerance of the representation reconstruction check.
pub const RECONSTRUCTION_TOL: f64 = 1e-10;

/// A point `x + iy` of the open upper half-plane.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComplexPoint {
    pub x: f64,
    pub y: f64,
}

impl ComplexPoint {
    pub fn new(x: f64, y: f64) -> Result<Self> {
        if !x.is_finite() || !y.is_finite() || y <= 0.0 {
            return Err(Error::InvalidArgument(format!("need a point with y > 0, got {x} + {y}i")));
        }
        Ok(ComplexPoint { x, y })
    }

    pub fn z(&self) -> Complex64 {
        Complex64::new(self.x, self.y)
    }

    pub fn scaled(&self, s: f64) -> Self {
        ComplexPoint { x: self.x * s, y: self.y * s }
    }
}

/// `G_μ(z) = Σ wⱼ / (z − tⱼ)` as an exact rational function.
///
/// The zero measure gives the zero function; callers can tell it apart with
/// [`RationalFn::is_zero`].
pub fn rational_g(mu: &AtomicMeasure) -> RationalFn {
    if mu.is_empty() {
        return RationalFn::zero();
    }
    let atoms = mu.exact_atoms();
    let linear: Vec<Polynomial> = atoms
        .iter()
        .map(|(t, _)| Polynomial::new(vec![-t.clone(), Q::one()]))
        .collect();
    let den = linear.iter().fold(Polynomial::constant(Q::one()), |acc, l| &acc * l);
    let mut num = Polynomial::zero();
    for (j, (_, w)) in atoms.iter().enumerate() {
        let others = linear
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != j)
            .fold(Polynomial::constant(w.clone()), |acc, (_, l)| &acc * l);
        num = &num + &others;
    }
    // Distinct atoms with positive weights never share a factor.
    RationalFn::new_coprime(num, den)
}

/// `F_μ = 1/G_μ` as an exact rational function.
pub fn rational_f(mu: &AtomicMeasure) -> Result<RationalFn> {
    if mu.is_empty() {
        return Err(Error::InvalidMeasure("the zero measure has no F-transform".into()));
    }
    rational_g(mu).recip()
}

/// `G_μ(z)` by direct summation.
pub fn eval_g(mu: &AtomicMeasure, z: ComplexPoint) -> Complex64 {
    let z = z.z();
    mu.atoms().iter().map(|a| a.w / (z - a.t)).sum()
}

/// `F_μ(z) = 1/G_μ(z)`.
pub fn eval_f(mu: &AtomicMeasure, z: ComplexPoint) -> Result<Complex64> {
    let g = eval_g(mu, z);
    if g.norm() == 0.0 {
        return Err(Error::Degenerate(format!("G vanishes at {} + {}i", z.x, z.y)));
    }
    Ok(g.inv())
}

/// Recovers the measure whose Cauchy transform is `g`: atoms at the poles,
/// weights equal to the residues. Near-zero residues are dropped.
pub fn recover_from_cauchy(g: &RationalFn) -> Result<AtomicMeasure> {
    if g.is_zero() {
        return Ok(AtomicMeasure::zero());
    }
    let (poly, _) = g.polynomial_part();
    if !poly.is_zero() {
        return Err(Error::NotAMeasureTransform("Cauchy transform must vanish at infinity".into()));
    }
    let poles = real_roots(g.den())?;
    let dden = g.den().derivative();
    let mass = exact::to_f64(&g.cauchy_moments(1)[0]);
    let mut atoms = Vec::with_capacity(poles.len());
    let mut pruned = 0;
    for x in poles {
        let w = g.num().eval_at_f64_exact(x) / dden.eval_at_f64_exact(x);
        if w.abs() <= SPURIOUS_RESIDUE_TOL * mass.abs() {
            pruned += 1;
            continue;
        }
        if w <= 0.0 || !w.is_finite() {
            return Err(Error::NotAMeasureTransform(format!("non-positive residue {w} at {x}")));
        }
        atoms.push((x, w));
    }
    let m = AtomicMeasure::new(atoms)?;
    if m.len() + pruned != g.den().degree().unwrap_or(0) {
        return Err(Error::NotAMeasureTransform("repeated pole".into()));
    }
    Ok(m)
}

/// Recovers `μ` from `F_μ = num/den` with `deg num = deg den + 1`.
///
/// Atoms sit at the real zeros of `num`; the weight at `x` is the residue of
/// `1/F` there, `den(x)/num'(x)`.
pub fn recover_measure(f: &RationalFn) -> Result<AtomicMeasure> {
    let (dn, dd) = (f.num().degree(), f.den().degree());
    match (dn, dd) {
        (Some(n), Some(d)) if n == d + 1 => {}
        _ => {
            return Err(Error::NotAMeasureTransform(format!(
                "F must grow like z at infinity (numerator degree {dn:?}, denominator degree {dd:?})"
            )))
        }
    }
    if !f.num().leading().is_positive() {
        return Err(Error::NotAMeasureTransform("F must have positive leading coefficient".into()));
    }
    let g = f.recip()?;
    let mu = recover_from_cauchy(&g)?;
    let encoded = exact::to_f64(&g.cauchy_moments(1)[0]);
    if (mu.total_mass() - encoded).abs() > 1e-9 * encoded.max(1.0) {
        return Err(Error::NotAMeasureTransform(format!(
            "recovered mass {} disagrees with encoded mass {encoded}",
            mu.total_mass()
        )));
    }
    Ok(mu)
}

/// `μ(ℝ)/y`, the trivial bound on `|G_μ(x+iy)|`.
pub fn bound_trivial(mu: &AtomicMeasure, z: ComplexPoint) -> f64 {
    mu.total_mass() / z.y
}

/// `2μ(ℝ)/|x| + 2ⁱ ∫|t|ⁱ dμ / (y|x|ⁱ)`, valid for every `x ≠ 0`.
pub fn bound_prop2(mu: &AtomicMeasure, z: ComplexPoint, i: u32) -> Result<f64> {
    if z.x == 0.0 {
        return Err(Error::InvalidArgument("the moment bound needs x ≠ 0".into()));
    }
    let ax = z.x.abs();
    Ok(2.0 * mu.total_mass() / ax + 2f64.powi(i as i32) * mu.abs_moment(i) / (z.y * ax.powi(i as i32)))
}

/// Exact by-products of a representation extracted from exact data.
#[derive(Debug, Clone, PartialEq)]
pub struct ExactRepr {
    pub alpha: Q,
    pub omega_mass: Q,
    pub omega_m2: Q,
}

/// `F_μ(z) = z − 1/(z − α − G_ω(z))`, with `K = max{ω(ℝ), m₂(ω)}`.
#[derive(Debug, Clone)]
pub struct ReprData {
    pub alpha: f64,
    pub omega: AtomicMeasure,
    pub k: f64,
    /// The probability measure with `G_ν = z − F_μ`.
    pub nu: AtomicMeasure,
    /// Present when the input satisfied the hypotheses exactly.
    pub exact: Option<ExactRepr>,
}

impl ReprData {
    /// `z − 1/(z − α − G_ω(z))`.
    pub fn eval_f(&self, z: ComplexPoint) -> Result<Complex64> {
        let w = z.z() - self.alpha - eval_g(&self.omega, z);
        if w.norm() == 0.0 {
            return Err(Error::Degenerate("z − α − G_ω(z) vanishes".into()));
        }
        Ok(z.z() - w.inv())
    }
}

/// Drops a polynomial part that should vanish. In exact mode it must be
/// identically zero; otherwise its coefficients must be below `PROJECTION_TOL`.
fn project_proper(r: &RationalFn, exact_mode: bool, what: &str) -> Result<RationalFn> {
    let (poly, proper) = r.polynomial_part();
    if poly.is_zero() {
        return Ok(proper);
    }
    let worst = poly.coeffs().iter().map(exact::abs_f64).fold(0.0, f64::max);
    if exact_mode || worst > PROJECTION_TOL {
        return Err(Error::Representation(format!("{what} has a polynomial part of size {worst}")));
    }
    Ok(proper)
}

fn check_points(mu: &AtomicMeasure) -> Vec<ComplexPoint> {
    let scale = 1.0 + mu.locations().fold(0.0_f64, |m, t| m.max(t.abs()));
    (0..20)
        .map(|j| {
            let s = j as f64;
            let x = scale * 1.5 * (0.37 * s + 0.11).sin();
            let y = scale * 10f64.powf(-1.5 + 0.13 * s);
            ComplexPoint { x, y }
        })
        .collect()
}

/// Extracts `(α, ω, K)` for a probability measure with `m₁ = 0`, `m₂ = 1`.
///
/// Runs the two-level continued fraction in exact arithmetic:
/// `G_ν = z − F_μ`, `α = m₁(ν)`, `G_ω = z − α − F_ν`. When the moment
/// hypotheses hold exactly, `α = m₃(μ)` and `ω(ℝ) = m₄ − m₃² − 1` are checked
/// exactly; otherwise the vanishing polynomial parts are projected away and
/// the identities are checked to 1e-9.
pub fn extract_representation(mu: &AtomicMeasure) -> Result<ReprData> {
    let exact_mode = mu.require_standardized()?;
    if mu.len() < 2 {
        return Err(Error::Hypothesis("need at least two atoms".into()));
    }
    let f_mu = rational_f(mu)?;
    let mut g_nu = project_proper(&(&RationalFn::z() - &f_mu), exact_mode, "z − F_μ")?;
    let nu_mass = g_nu.cauchy_moments(1).remove(0);
    if !nu_mass.is_one() {
        if exact_mode {
            return Err(Error::Representation(format!("ν has mass {nu_mass}")));
        }
        g_nu = g_nu.scale(&nu_mass.recip());
    }
    let nu = recover_from_cauchy(&g_nu)
        .map_err(|e| Error::Representation(format!("recovering ν: {e}")))?;
    let alpha_q = g_nu.cauchy_moments(2).remove(1);

    let f_nu = g_nu.recip()?;
    let shifted = &RationalFn::from_polynomial(Polynomial::new(vec![-alpha_q.clone(), Q::one()])) - &f_nu;
    let g_omega = project_proper(&shifted, exact_mode, "z − α − F_ν")?;
    let omega = recover_from_cauchy(&g_omega)
        .map_err(|e| Error::Representation(format!("recovering ω: {e}")))?;
    let om = g_omega.cauchy_moments(3);
    let (omega_mass, omega_m2) = (om[0].clone(), om[2].clone());

    let m3 = mu.moment_exact(3);
    let m4 = mu.moment_exact(4);
    let expected_mass = &m4 - &m3 * &m3 - Q::one();
    if exact_mode {
        if alpha_q != m3 || omega_mass != expected_mass {
            return Err(Error::Representation(format!(
                "moment identities fail: α = {alpha_q} vs m3 = {m3}, ω(ℝ) = {omega_mass} vs {expected_mass}"
            )));
        }
    } else {
        let da = exact::abs_f64(&(&alpha_q - &m3));
        let dm = exact::abs_f64(&(&omega_mass - &expected_mass));
        if da > 1e-9 || dm > 1e-9 {
            return Err(Error::Representation(format!("moment identities off by {da:e}, {dm:e}")));
        }
    }

    let alpha = exact::to_f64(&alpha_q);
    let k = exact::to_f64(&omega_mass).max(exact::to_f64(&omega_m2)).max(0.0);
    let repr = ReprData {
        alpha,
        omega,
        k,
        nu,
        exact: exact_mode.then_some(ExactRepr { alpha: alpha_q, omega_mass, omega_m2 }),
    };

    for z in check_points(mu) {
        let direct = eval_f(mu, z)?;
        let via = repr.eval_f(z)?;
        if (direct - via).norm() > RECONSTRUCTION_TOL * direct.norm().max(1.0) {
            return Err(Error::Representation(format!(
                "reconstruction mismatch at {} + {}i: {direct} vs {via}",
                z.x, z.y
            )));
        }
    }
    Ok(repr)
}
