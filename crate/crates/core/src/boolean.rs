//! Boolean convolution, Boolean powers, the CLT normalization `μ_n`, and
//! the `W_n` evaluator of `F_{μ_n}`.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::exact;
use crate::measure::AtomicMeasure;
use crate::poly::RationalFn;
use crate::transform::{eval_g, rational_f, recover_measure, ComplexPoint, ReprData};

fn internal(e: Error) -> Error {
    match e {
        Error::NotAMeasureTransform(m) => {
            Error::Degenerate(format!("Boolean convolution left the set of measures: {m}"))
        }
        other => other,
    }
}

/// `μ ⊎ ν` through `F_{μ⊎ν} = F_μ + F_ν − z`.
pub fn boolean_convolve(mu: &AtomicMeasure, nu: &AtomicMeasure) -> Result<AtomicMeasure> {
    mu.require_probability()?;
    nu.require_probability()?;
    let f = &(&rational_f(mu)? + &rational_f(nu)?) - &RationalFn::z();
    recover_measure(&f).map_err(internal)
}

/// `μ^{⊎n}` through `F = (1 − n)z + nF_μ`, in one root-finding pass.
pub fn boolean_power(mu: &AtomicMeasure, n: u64) -> Result<AtomicMeasure> {
    if n == 0 {
        return Err(Error::InvalidArgument("Boolean power needs n ≥ 1".into()));
    }
    mu.require_probability()?;
    if n == 1 {
        return Ok(mu.clone());
    }
    let z = RationalFn::z();
    let kernel = &z - &rational_f(mu)?;
    let f = &z - &kernel.scale(&exact::int(n as i64));
    let out = recover_measure(&f).map_err(internal)?;
    if out.len() != mu.len() {
        return Err(Error::Degenerate(format!(
            "Boolean power changed the atom count from {} to {}",
            mu.len(),
            out.len()
        )));
    }
    Ok(out)
}

/// `μ_n = D_{1/√n} μ^{⊎n}` for a standardized `μ`.
pub fn clt_normalize(mu: &AtomicMeasure, n: u64) -> Result<AtomicMeasure> {
    mu.require_standardized()?;
    if n == 1 {
        return Ok(mu.clone());
    }
    boolean_power(mu, n)?.dilate(1.0 / (n as f64).sqrt())
}

/// `W_n(z) = z − α/√n − G_ω(√n z)/√n`.
pub fn w_n(repr: &ReprData, n: u64, z: ComplexPoint) -> Complex64 {
    let s = (n as f64).sqrt();
    z.z() - repr.alpha / s - eval_g(&repr.omega, z.scaled(s)) / s
}

/// `F_{μ_n}(z) = z − 1/W_n(z)`, evaluated from the representation data alone.
pub fn eval_f_mu_n(repr: &ReprData, n: u64, z: ComplexPoint) -> Result<Complex64> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be positive".into()));
    }
    let w = w_n(repr, n, z);
    if w.norm() == 0.0 {
        return Err(Error::Degenerate(format!("W_n vanishes at {} + {}i", z.x, z.y)));
    }
    Ok(z.z() - w.inv())
}
