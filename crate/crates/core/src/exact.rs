//! Helpers for moving between `f64` and exact rationals.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub type Q = BigRational;

/// Rational with the value of the shortest decimal that round-trips to `x`.
///
/// `0.8` becomes `4/5` rather than the binary expansion of the nearest
/// double, so decimal input data keeps its intended exact value.
pub fn from_f64_decimal(x: f64) -> Q {
    assert!(x.is_finite(), "non-finite value {x}");
    if x == 0.0 {
        return Q::zero();
    }
    let s = format!("{x:e}");
    let (mantissa, exp) = s.split_once('e').expect("LowerExp always has an exponent");
    let mut exp: i64 = exp.parse().expect("valid exponent");
    let negative = mantissa.starts_with('-');
    let mantissa = mantissa.trim_start_matches('-');
    let digits: String = match mantissa.split_once('.') {
        Some((int, frac)) => {
            exp -= frac.len() as i64;
            format!("{int}{frac}")
        }
        None => mantissa.to_string(),
    };
    let mut numer: BigInt = digits.parse().expect("decimal digits");
    if negative {
        numer = -numer;
    }
    let ten = BigInt::from(10u8);
    if exp >= 0 {
        Q::from_integer(numer * num_traits::pow(ten, exp as usize))
    } else {
        Q::new(numer, num_traits::pow(ten, (-exp) as usize))
    }
}

pub fn to_f64(q: &Q) -> f64 {
    q.to_f64().unwrap_or_else(|| {
        // Ratio::to_f64 can give up on huge numerators and denominators.
        let n = q.numer().to_f64().unwrap_or(f64::NAN);
        let d = q.denom().to_f64().unwrap_or(f64::NAN);
        n / d
    })
}

pub fn int(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn frac(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

pub fn pow(q: &Q, k: u32) -> Q {
    let mut acc = Q::one();
    for _ in 0..k {
        acc *= q;
    }
    acc
}

/// `|q|` as f64, used for relative-size tests on projected coefficients.
pub fn abs_f64(q: &Q) -> f64 {
    to_f64(&q.abs())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn decimal_conversion_keeps_short_decimals() {
        assert_eq!(from_f64_decimal(0.8), frac(4, 5));
        assert_eq!(from_f64_decimal(-0.5), frac(-1, 2));
        assert_eq!(from_f64_decimal(2.0), int(2));
        assert_eq!(from_f64_decimal(1.5e-7), frac(15, 100_000_000));
        assert_eq!(from_f64_decimal(0.8) + from_f64_decimal(0.2), int(1));
    }

    #[test]
    fn decimal_conversion_round_trips() {
        for &x in &[std::f64::consts::SQRT_2, 1e-300, -123456.789, 6.02e23] {
            assert_eq!(to_f64(&from_f64_decimal(x)), x);
        }
    }
}
