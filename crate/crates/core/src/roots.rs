//! Real roots of polynomials whose roots are known to be real and simple.

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::poly::Polynomial;

/// A root is accepted as real when `|Im| ≤ REAL_ROOT_TOL·(1 + |Re|)`.
pub const REAL_ROOT_TOL: f64 = 1e-9;
const NEWTON_MAX_STEPS: usize = 50;

fn horner(c: &[f64], z: Complex64) -> (Complex64, Complex64) {
    let mut p = Complex64::new(0.0, 0.0);
    let mut dp = Complex64::new(0.0, 0.0);
    for &a in c.iter().rev() {
        dp = dp * z + p;
        p = p * z + a;
    }
    (p, dp)
}

/// Eigenvalues of the companion matrix of `p`, seeds for polishing.
fn companion_roots(monic: &[f64]) -> Vec<Complex64> {
    let d = monic.len() - 1;
    if d == 1 {
        return vec![Complex64::new(-monic[0], 0.0)];
    }
    let mut m = DMatrix::<f64>::zeros(d, d);
    for i in 1..d {
        m[(i, i - 1)] = 1.0;
    }
    for i in 0..d {
        m[(i, d - 1)] = -monic[i];
    }
    m.complex_eigenvalues().iter().copied().collect()
}

fn newton_polish(c: &[f64], mut z: Complex64) -> Complex64 {
    for _ in 0..NEWTON_MAX_STEPS {
        let (p, dp) = horner(c, z);
        if p.norm() == 0.0 || dp.norm() == 0.0 {
            break;
        }
        let step = p / dp;
        z -= step;
        if step.norm() <= 4.0 * f64::EPSILON * z.norm().max(f64::MIN_POSITIVE) {
            break;
        }
    }
    z
}

/// All roots of `p`, sorted ascending, when they are all real.
///
/// Companion-matrix eigenvalues seed a complex Newton iteration; accepted
/// roots then get two Newton corrections with `p` and `p'` evaluated exactly
/// at the current iterate.
pub fn real_roots(p: &Polynomial) -> Result<Vec<f64>> {
    let Some(d) = p.degree() else {
        return Err(Error::Degenerate("roots of the zero polynomial".into()));
    };
    if d == 0 {
        return Ok(Vec::new());
    }
    let monic = p.monic();
    let c = monic.to_f64_coeffs();
    let dp = monic.derivative();
    let mut roots = Vec::with_capacity(d);
    for seed in companion_roots(&c) {
        let z = newton_polish(&c, seed);
        if !z.re.is_finite() || z.im.abs() > REAL_ROOT_TOL * (1.0 + z.re.abs()) {
            return Err(Error::NotAMeasureTransform(format!("non-real root {} {:+}i", z.re, z.im)));
        }
        let mut x = z.re;
        for _ in 0..2 {
            let der = dp.eval_at_f64_exact(x);
            if der == 0.0 {
                break;
            }
            let step = monic.eval_at_f64_exact(x) / der;
            if !step.is_finite() || step == 0.0 {
                break;
            }
            x -= step;
        }
        roots.push(x);
    }
    roots.sort_by(f64::total_cmp);
    Ok(roots)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{from_f64_decimal, int};

    #[test]
    fn quadratic_roots() {
        // z² - 1.5z - 2 has roots (1.5 ± √10.25)/2
        let p = Polynomial::new(vec![int(-2), from_f64_decimal(-1.5), int(1)]);
        let r = real_roots(&p).unwrap();
        let s = 10.25_f64.sqrt();
        assert!((r[0] - (1.5 - s) / 2.0).abs() < 1e-15);
        assert!((r[1] - (1.5 + s) / 2.0).abs() < 1e-15);
    }

    #[test]
    fn rejects_complex_roots() {
        let p = Polynomial::new(vec![int(1), int(0), int(1)]);
        assert!(matches!(real_roots(&p), Err(Error::NotAMeasureTransform(_))));
    }

    #[test]
    fn close_roots_are_separated() {
        let pts: Vec<_> = [-1.0 - 1e-6, -1.0 + 1e-6, 0.5, 1.0 - 1e-6, 1.0 + 1e-6]
            .iter()
            .map(|&x| from_f64_decimal(x))
            .collect();
        let r = real_roots(&Polynomial::from_roots(&pts)).unwrap();
        for (got, want) in r.iter().zip([-1.0 - 1e-6, -1.0 + 1e-6, 0.5, 1.0 - 1e-6, 1.0 + 1e-6]) {
            assert!((got - want).abs() < 1e-14, "{got} vs {want}");
        }
    }

    #[test]
    fn constant_has_no_roots() {
        assert!(real_roots(&Polynomial::constant(int(3))).unwrap().is_empty());
        assert!(real_roots(&Polynomial::zero()).is_err());
    }
}
