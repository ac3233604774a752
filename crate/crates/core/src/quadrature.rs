//! Globally adaptive Gauss–Kronrod (7/15) quadrature over a seeded partition.
#![allow(clippy::excessive_precision)]

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use crate::error::{Error, Result};

const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_329,
    0.949_107_912_342_758_524_526_189_684_047_851,
    0.864_864_423_359_769_072_789_712_788_640_926,
    0.741_531_185_599_394_439_863_864_773_280_788,
    0.586_087_235_467_691_130_294_144_845_693_013,
    0.405_845_151_377_397_166_906_606_412_076_961,
    0.207_784_955_007_898_467_600_689_403_773_245,
    0.000_000_000_000_000_000_000_000_000_000_000,
];
const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_970,
    0.063_092_092_629_978_553_290_700_663_189_204,
    0.104_790_010_322_250_183_839_876_322_541_518,
    0.140_653_259_715_525_918_745_189_590_510_238,
    0.169_004_726_639_267_902_826_583_426_598_550,
    0.190_350_578_064_785_409_913_256_402_421_014,
    0.204_432_940_075_298_892_414_161_999_234_649,
    0.209_482_141_084_727_828_012_999_174_891_714,
];
const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_082,
    0.279_705_391_489_276_667_901_467_771_423_780,
    0.381_830_050_505_118_944_950_369_775_488_975,
    0.417_959_183_673_469_387_755_102_040_816_327,
];

/// Kronrod estimate and `|K15 − G7|` on `[a, b]`.
fn gk15<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> (f64, f64) {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let fc = f(c);
    let mut kron = fc * WGK[7];
    let mut gauss = fc * WG[3];
    for j in 0..7 {
        let x = h * XGK[j];
        let s = f(c - x) + f(c + x);
        kron += WGK[j] * s;
        if j % 2 == 1 {
            gauss += WG[j / 2] * s;
        }
    }
    (kron * h, ((kron - gauss) * h).abs())
}

#[derive(Debug, Clone, Copy)]
pub struct QuadResult {
    pub value: f64,
    /// Sum of per-interval `|K15 − G7|` estimates.
    pub error: f64,
    pub intervals: usize,
}

struct Piece {
    a: f64,
    b: f64,
    value: f64,
    error: f64,
}

impl PartialEq for Piece {
    fn eq(&self, other: &Self) -> bool {
        self.error == other.error
    }
}
impl Eq for Piece {}
impl PartialOrd for Piece {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Piece {
    fn cmp(&self, other: &Self) -> Ordering {
        self.error.total_cmp(&other.error)
    }
}

/// Integrates `f` over `[points[0], points[last]]`, starting from the
/// partition given by `points` (sorted, finite) and bisecting the interval
/// with the largest error estimate until the total estimate is below `tol`.
pub fn integrate<F: Fn(f64) -> f64>(f: F, points: &[f64], tol: f64, max_intervals: usize) -> Result<QuadResult> {
    if points.len() < 2 {
        return Ok(QuadResult { value: 0.0, error: 0.0, intervals: 0 });
    }
    if points.iter().any(|p| !p.is_finite()) || points.windows(2).any(|w| w[0] > w[1]) {
        return Err(Error::InvalidArgument("quadrature partition must be finite and sorted".into()));
    }
    let mut heap = BinaryHeap::new();
    let mut settled = (0.0, 0.0);
    let (mut value, mut error) = (0.0, 0.0);
    for w in points.windows(2) {
        if w[1] > w[0] {
            let (v, e) = gk15(&f, w[0], w[1]);
            value += v;
            error += e;
            heap.push(Piece { a: w[0], b: w[1], value: v, error: e });
        }
    }
    let mut count = heap.len();
    while error > tol && error.is_finite() {
        let Some(worst) = heap.pop() else { break };
        let mid = 0.5 * (worst.a + worst.b);
        if mid <= worst.a || mid >= worst.b || worst.b - worst.a <= 1e-14 * worst.a.abs().max(worst.b.abs()) {
            // Cannot split further in double precision; keep its estimate.
            settled.0 += worst.value;
            settled.1 += worst.error;
            continue;
        }
        if count >= max_intervals {
            heap.push(worst);
            break;
        }
        let (v1, e1) = gk15(&f, worst.a, mid);
        let (v2, e2) = gk15(&f, mid, worst.b);
        heap.push(Piece { a: worst.a, b: mid, value: v1, error: e1 });
        heap.push(Piece { a: mid, b: worst.b, value: v2, error: e2 });
        count += 1;
        value += v1 + v2 - worst.value;
        error += e1 + e2 - worst.error;
        if count % 256 == 0 || error <= tol {
            // Re-sum to avoid drift in the running totals.
            value = settled.0 + heap.iter().map(|p| p.value).sum::<f64>();
            error = settled.1 + heap.iter().map(|p| p.error).sum::<f64>();
        }
    }
    if !value.is_finite() || !error.is_finite() {
        return Err(Error::Degenerate("non-finite integrand values in quadrature".into()));
    }
    if error > tol {
        return Err(Error::QuadratureBudget { partial: value, error, intervals: count });
    }
    Ok(QuadResult { value, error, intervals: count })
}
