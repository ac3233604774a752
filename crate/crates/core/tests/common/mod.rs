#![allow(dead_code)]

use boolean_clt::exact::Q;
use boolean_clt::AtomicMeasure;
use num_bigint::BigInt;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand::SeedableRng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn q(p: i64, d: i64) -> Q {
    Q::new(BigInt::from(p), BigInt::from(d))
}

pub fn two_atom() -> AtomicMeasure {
    AtomicMeasure::standard_two_atom(0.8).unwrap()
}

pub fn three_atom() -> AtomicMeasure {
    let s = std::f64::consts::SQRT_2;
    AtomicMeasure::new([(-s, 0.25), (0.0, 0.5), (s, 0.25)]).unwrap()
}

/// Probability measure with `1..=max_atoms` atoms at distinct rationals `p/q`
/// in `[-3, 3]` (`q ≤ 12`) and rational weights.
pub fn random_rational_measure(rng: &mut ChaCha8Rng, max_atoms: usize) -> AtomicMeasure {
    let k = rng.gen_range(1..=max_atoms);
    let mut locs: Vec<Q> = Vec::new();
    while locs.len() < k {
        let d = rng.gen_range(1..=12);
        let t = q(rng.gen_range(-3 * d..=3 * d), d);
        if !locs.contains(&t) {
            locs.push(t);
        }
    }
    let raw: Vec<i64> = (0..k).map(|_| rng.gen_range(1..=50)).collect();
    let total: i64 = raw.iter().sum();
    AtomicMeasure::from_rationals(locs.into_iter().zip(raw.iter().map(|&w| q(w, total)))).unwrap()
}

/// Probability measure with float atoms in `[-spread, spread]`.
pub fn random_float_measure(rng: &mut ChaCha8Rng, max_atoms: usize, spread: f64) -> AtomicMeasure {
    let k = rng.gen_range(1..=max_atoms);
    let raw: Vec<f64> = (0..k).map(|_| rng.gen_range(0.05..1.0)).collect();
    let total: f64 = raw.iter().sum();
    AtomicMeasure::new(raw.iter().map(|w| (rng.gen_range(-spread..spread), w / total))).unwrap()
}

/// Mean-zero, unit-variance rational measure with `2..=6` atoms.
pub fn random_standardized(rng: &mut ChaCha8Rng) -> AtomicMeasure {
    loop {
        let k = rng.gen_range(2..=6);
        if k == 2 {
            // Atoms -1/b and b with weights b²/(1+b²) and 1/(1+b²).
            let b = q(rng.gen_range(1..=30), rng.gen_range(1..=10));
            let b2 = &b * &b;
            let one = q(1, 1);
            let den = &one + &b2;
            let pairs = [(-(&one / &b), &b2 / &den), (b, &one / &den)];
            return AtomicMeasure::from_rationals(pairs).unwrap();
        }
        let mut locs: Vec<Q> = Vec::new();
        while locs.len() < k {
            let d = rng.gen_range(1..=8);
            let t = q(rng.gen_range(-4 * d..=4 * d), d);
            if !locs.contains(&t) {
                locs.push(t);
            }
        }
        let lead: Vec<Q> = (0..k - 3).map(|_| q(rng.gen_range(1..=20), 200)).collect();
        if let Ok(mu) = AtomicMeasure::standardized_on(&locs, &lead) {
            if mu.len() == k {
                return mu;
            }
        }
    }
}

/// Measure on the integer grid: locations in units of `1e-4` and weights in
/// units of `1e-4` summing to `10_000`.
#[derive(Debug, Clone)]
pub struct GridMeasure {
    pub atoms: Vec<(i64, i64)>,
}

impl GridMeasure {
    pub fn random(rng: &mut ChaCha8Rng, max_atoms: usize, span: i64) -> Self {
        let k = rng.gen_range(1..=max_atoms);
        let mut locs: Vec<i64> = Vec::new();
        while locs.len() < k {
            let t = rng.gen_range(-span..=span);
            if !locs.contains(&t) {
                locs.push(t);
            }
        }
        locs.sort();
        let mut cuts: Vec<i64> = (0..k - 1).map(|_| rng.gen_range(1..10_000)).collect();
        cuts.sort();
        cuts.dedup();
        while cuts.len() < k - 1 {
            let c = rng.gen_range(1..10_000);
            if !cuts.contains(&c) {
                cuts.push(c);
                cuts.sort();
            }
        }
        let mut prev = 0;
        let mut atoms = Vec::new();
        for (i, t) in locs.into_iter().enumerate() {
            let next = if i + 1 < k { cuts[i] } else { 10_000 };
            atoms.push((t, next - prev));
            prev = next;
        }
        GridMeasure { atoms }
    }

    pub fn to_measure(&self) -> AtomicMeasure {
        AtomicMeasure::from_rationals(self.atoms.iter().map(|&(t, w)| (q(t, 10_000), q(w, 10_000)))).unwrap()
    }

    fn cdf_table(&self, lo: i64, hi: i64) -> Vec<i64> {
        let mut out = Vec::with_capacity((hi - lo + 1) as usize);
        let mut acc = 0;
        let mut it = self.atoms.iter().peekable();
        for t in lo..=hi {
            while let Some(&&(s, w)) = it.peek() {
                if s <= t {
                    acc += w;
                    it.next();
                } else {
                    break;
                }
            }
            out.push(acc);
        }
        out
    }
}

/// Lévy distance in units of `1e-4` by scanning every grid point against the
/// sandwich definition. Both CDFs are constant on `[t, t+1)` for integer `t`,
/// so the scan over integers is exhaustive, and every breakpoint of the
/// feasibility condition lies on the grid.
pub fn grid_levy(mu: &GridMeasure, nu: &GridMeasure) -> i64 {
    let span = mu.atoms.iter().chain(&nu.atoms).map(|a| a.0.abs()).max().unwrap();
    let pad = 10_001;
    let (lo, hi) = (-span - 2 * pad, span + 2 * pad);
    let fm = mu.cdf_table(lo, hi);
    let fn_ = nu.cdf_table(lo, hi);
    let at = |f: &[i64], t: i64| f[(t.clamp(lo, hi) - lo) as usize];
    let feasible = |k: i64| {
        (lo + pad..=hi - pad).all(|t| at(&fm, t - k) - k <= at(&fn_, t) && at(&fn_, t) <= at(&fm, t + k) + k)
    };
    let (mut a, mut b) = (-1i64, 10_000i64);
    while b - a > 1 {
        let m = (a + b) / 2;
        if feasible(m) {
            b = m;
        } else {
            a = m;
        }
    }
    b
}
