//! Exact polynomial and rational-function algebra over `BigRational`.
//!
//! Cauchy and F-transforms of atomic measures are rational functions, so
//! Boolean convolution reduces to a handful of exact operations followed by
//! one root-finding pass.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;
use num_traits::{One, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exact::{self, Q};

/// Polynomial with exact rational coefficients, ascending degree.
/// The highest stored coefficient is nonzero (empty for the zero polynomial).
#[derive(Clone, PartialEq, Eq, Default)]
pub struct Polynomial {
    coeffs: Vec<Q>,
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        write!(f, "Polynomial[{}]", terms.join(", "))
    }
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<Q>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn constant(c: Q) -> Self {
        Polynomial::new(vec![c])
    }

    /// The identity polynomial `z`.
    pub fn z() -> Self {
        Polynomial::new(vec![Q::zero(), Q::one()])
    }

    /// `∏ (z - rⱼ)`.
    pub fn from_roots<'a>(roots: impl IntoIterator<Item = &'a Q>) -> Self {
        roots.into_iter().fold(Polynomial::constant(Q::one()), |acc, r| {
            &acc * &Polynomial::new(vec![-r.clone(), Q::one()])
        })
    }

    pub fn coeffs(&self) -> &[Q] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Q {
        self.coeffs.last().cloned().unwrap_or_else(Q::zero)
    }

    pub fn coeff(&self, k: usize) -> Q {
        self.coeffs.get(k).cloned().unwrap_or_else(Q::zero)
    }

    pub fn scale(&self, c: &Q) -> Self {
        Polynomial::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn monic(&self) -> Self {
        match self.coeffs.last() {
            Some(lc) => self.scale(&lc.recip()),
            None => Polynomial::zero(),
        }
    }

    pub fn derivative(&self) -> Self {
        Polynomial::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * exact::int(k as i64))
                .collect(),
        )
    }

    /// Euclidean division `self = q·divisor + r` with `deg r < deg divisor`.
    pub fn div_rem(&self, divisor: &Polynomial) -> (Polynomial, Polynomial) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let lc_inv = divisor.leading().recip();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Q::zero(); self.coeffs.len().saturating_sub(dd)];
        while rem.len() > dd && !rem.is_empty() {
            let shift = rem.len() - 1 - dd;
            let factor = rem.last().expect("non-empty") * &lc_inv;
            if !factor.is_zero() {
                for (k, d) in divisor.coeffs.iter().enumerate() {
                    rem[shift + k] -= &factor * d;
                }
                quot[shift] = factor;
            }
            rem.pop();
        }
        (Polynomial::new(quot), Polynomial::new(rem))
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Polynomial) -> Polynomial {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r.monic();
        }
        a.monic()
    }

    pub fn to_f64_coeffs(&self) -> Vec<f64> {
        self.coeffs.iter().map(exact::to_f64).collect()
    }

    pub fn eval_complex(&self, z: Complex64) -> Complex64 {
        self.to_f64_coeffs()
            .iter()
            .rev()
            .fold(Complex64::new(0.0, 0.0), |acc, &c| acc * z + c)
    }

    /// Value at the exact binary value of `x`, rounded once at the end.
    pub fn eval_at_f64_exact(&self, x: f64) -> f64 {
        let qx = Q::from_float(x).expect("finite evaluation point");
        let v = self.coeffs.iter().rev().fold(Q::zero(), |acc, c| acc * &qx + c);
        exact::to_f64(&v)
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![Q::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Polynomial::new(out)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

/// `num / den` in lowest terms with a monic denominator.
#[derive(Clone, PartialEq, Eq)]
pub struct RationalFn {
    num: Polynomial,
    den: Polynomial,
}

impl fmt::Debug for RationalFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?}) / ({:?})", self.num, self.den)
    }
}

impl RationalFn {
    pub fn new(num: Polynomial, den: Polynomial) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::Degenerate("rational function with zero denominator".into()));
        }
        if num.is_zero() {
            return Ok(RationalFn::zero());
        }
        let g = num.gcd(&den);
        let (num, den) = if g.degree() == Some(0) {
            (num, den)
        } else {
            (num.div_rem(&g).0, den.div_rem(&g).0)
        };
        let lc_inv = den.leading().recip();
        Ok(RationalFn { num: num.scale(&lc_inv), den: den.scale(&lc_inv) })
    }

    /// Builds `num / den` when the caller guarantees coprimality (skips the gcd).
    pub(crate) fn new_coprime(num: Polynomial, den: Polynomial) -> Self {
        let lc_inv = den.leading().recip();
        RationalFn { num: num.scale(&lc_inv), den: den.scale(&lc_inv) }
    }

    pub fn zero() -> Self {
        RationalFn { num: Polynomial::zero(), den: Polynomial::constant(Q::one()) }
    }

    pub fn from_polynomial(p: Polynomial) -> Self {
        RationalFn { num: p, den: Polynomial::constant(Q::one()) }
    }

    /// The identity map `z`.
    pub fn z() -> Self {
        RationalFn::from_polynomial(Polynomial::z())
    }

    pub fn num(&self) -> &Polynomial {
        &self.num
    }

    pub fn den(&self) -> &Polynomial {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn recip(&self) -> Result<Self> {
        if self.num.is_zero() {
            return Err(Error::Degenerate("reciprocal of the zero rational function".into()));
        }
        Ok(RationalFn::new_coprime(self.den.clone(), self.num.clone()))
    }

    pub fn scale(&self, c: &Q) -> Self {
        if c.is_zero() {
            return RationalFn::zero();
        }
        RationalFn { num: self.num.scale(c), den: self.den.clone() }
    }

    /// Splits `self = p + r` with `p` a polynomial and `r` proper.
    pub fn polynomial_part(&self) -> (Polynomial, RationalFn) {
        let (q, r) = self.num.div_rem(&self.den);
        let proper = if r.is_zero() { RationalFn::zero() } else { RationalFn::new_coprime(r, self.den.clone()) };
        (q, proper)
    }

    /// Moments `m₀, m₁, …` of the measure whose Cauchy transform is `self`,
    /// read off the expansion `Σ mⱼ z^{-j-1}` at infinity. Requires `self`
    /// to be proper.
    pub fn cauchy_moments(&self, count: usize) -> Vec<Q> {
        if self.num.is_zero() {
            return vec![Q::zero(); count];
        }
        let d = self.den.degree().expect("nonzero denominator");
        assert!(self.num.degree().unwrap_or(0) < d, "cauchy_moments needs a proper fraction");
        // In w = 1/z: den = z^d q(w), num = z^{d-1} p(w), G = w p(w)/q(w).
        let q: Vec<Q> = (0..=d).map(|i| self.den.coeff(d - i)).collect();
        let p: Vec<Q> = (0..d).map(|i| self.num.coeff(d - 1 - i)).collect();
        let mut m: Vec<Q> = Vec::with_capacity(count);
        for j in 0..count {
            let mut acc = p.get(j).cloned().unwrap_or_else(Q::zero);
            for i in 1..=j.min(d) {
                acc -= &q[i] * &m[j - i];
            }
            m.push(acc / &q[0]);
        }
        m
    }

    pub fn eval(&self, z: Complex64) -> Complex64 {
        self.num.eval_complex(z) / self.den.eval_complex(z)
    }
}

impl Add for &RationalFn {
    type Output = RationalFn;
    fn add(self, rhs: &RationalFn) -> RationalFn {
        if self.den == rhs.den {
            return RationalFn::new(&self.num + &rhs.num, self.den.clone()).expect("nonzero denominator");
        }
        RationalFn::new(&(&self.num * &rhs.den) + &(&rhs.num * &self.den), &self.den * &rhs.den)
            .expect("nonzero denominator")
    }
}

impl Sub for &RationalFn {
    type Output = RationalFn;
    fn sub(self, rhs: &RationalFn) -> RationalFn {
        self + &rhs.scale(&-Q::one())
    }
}

impl Mul for &RationalFn {
    type Output = RationalFn;
    fn mul(self, rhs: &RationalFn) -> RationalFn {
        RationalFn::new(&self.num * &rhs.num, &self.den * &rhs.den).expect("nonzero denominator")
    }
}

impl Serialize for RationalFn {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("RationalFn", 2)?;
        s.serialize_field("num", &self.num.to_f64_coeffs())?;
        s.serialize_field("den", &self.den.to_f64_coeffs())?;
        s.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{frac, int};

    fn poly(c: &[i64]) -> Polynomial {
        Polynomial::new(c.iter().map(|&x| int(x)).collect())
    }

    #[test]
    fn trims_and_reports_degree() {
        assert_eq!(poly(&[1, 2, 0, 0]).degree(), Some(1));
        assert_eq!(poly(&[0, 0]).degree(), None);
        assert!(Polynomial::zero().is_zero());
    }

    #[test]
    fn division_and_gcd() {
        // (z^2 - 1) = (z - 1)(z + 1)
        let (q, r) = poly(&[-1, 0, 1]).div_rem(&poly(&[-1, 1]));
        assert_eq!(q, poly(&[1, 1]));
        assert!(r.is_zero());
        let g = poly(&[-1, 0, 1]).gcd(&poly(&[1, 2, 1]));
        assert_eq!(g, poly(&[1, 1]));
        let g = poly(&[1, 0, 1]).gcd(&poly(&[-1, 1]));
        assert_eq!(g, poly(&[1]));
    }

    #[test]
    fn rational_reduces_and_normalizes() {
        let r = RationalFn::new(poly(&[-2, 0, 2]), poly(&[2, 2])).unwrap();
        assert_eq!(r.num(), &poly(&[-1, 1]));
        assert_eq!(r.den(), &poly(&[1]));
        assert!(RationalFn::new(poly(&[1]), Polynomial::zero()).is_err());
        assert!(RationalFn::zero().recip().is_err());
    }

    #[test]
    fn sum_of_reciprocals() {
        // ½/(z+1) + ½/(z-1) = z/(z²-1)
        let a = RationalFn::new(Polynomial::constant(frac(1, 2)), poly(&[1, 1])).unwrap();
        let b = RationalFn::new(Polynomial::constant(frac(1, 2)), poly(&[-1, 1])).unwrap();
        let s = &a + &b;
        assert_eq!(s.num(), &poly(&[0, 1]));
        assert_eq!(s.den(), &poly(&[-1, 0, 1]));
        let back = &s - &b;
        assert_eq!(back, a);
    }

    #[test]
    fn moments_from_expansion() {
        // z/(z²-1) = 1/z + 1/z³ + … : moments 1, 0, 1, 0
        let g = RationalFn::new(poly(&[0, 1]), poly(&[-1, 0, 1])).unwrap();
        assert_eq!(g.cauchy_moments(4), vec![int(1), int(0), int(1), int(0)]);
    }

    #[test]
    fn polynomial_part_split() {
        // (z² - 1)/z = z - 1/z
        let f = RationalFn::new(poly(&[-1, 0, 1]), poly(&[0, 1])).unwrap();
        let (p, r) = f.polynomial_part();
        assert_eq!(p, poly(&[0, 1]));
        assert_eq!(r, RationalFn::new(poly(&[-1]), poly(&[0, 1])).unwrap());
    }

    #[test]
    fn exact_evaluation_is_accurate() {
        // (z - 1)^2 near its double root: Horner in f64 would lose everything.
        let p = poly(&[1, -2, 1]);
        let x = 1.0 + 1e-9;
        let v = p.eval_at_f64_exact(x);
        assert!((v - 1e-18).abs() < 1e-24);
    }

    #[test]
    fn serializes_as_float_arrays() {
        let g = RationalFn::new(poly(&[0, 1]), poly(&[-1, 0, 1])).unwrap();
        assert_eq!(serde_json::to_string(&g).unwrap(), r#"{"num":[0.0,1.0],"den":[-1.0,0.0,1.0]}"#);
    }
}
