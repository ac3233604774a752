//! Explicit constants of the Boolean Berry–Esseen bound, the tail/middle
//! integral checks at `y = 1/n`, and the rate experiment over a grid of `n`.

use std::f64::consts::PI;

use rayon::prelude::*;
use serde::Serialize;

use crate::boolean::clt_normalize;
use crate::error::{Error, Result};
use crate::inversion::poisson_smoothed_mass;
use crate::measure::{levy_distance, AtomicMeasure};
use crate::transform::{extract_representation, ReprData};

const POINT_THREE_SQUARED: f64 = 0.09;

/// Constants `C` and `n_min` derived from `(α, K)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ConstantLedger {
    pub alpha: f64,
    #[serde(rename = "K")]
    pub k: f64,
    /// `max{5, |α|+2, 4(K+1)², 1 + (30K+1)/0.3²}`; `C` must exceed it.
    #[serde(skip)]
    pub c_floor: f64,
    #[serde(rename = "C")]
    pub c: f64,
    pub n_min: u64,
}

impl ConstantLedger {
    /// Smoothing height used at sample size `n`.
    pub fn y(&self, n: u64) -> f64 {
        1.0 / n as f64
    }

    /// `3.5 (C + 2)/√n`.
    pub fn theorem1_bound(&self, n: u64) -> f64 {
        3.5 * (self.c + 2.0) / (n as f64).sqrt()
    }
}

fn c_floor(alpha: f64, k: f64) -> f64 {
    [5.0, alpha.abs() + 2.0, 4.0 * (k + 1.0).powi(2), 1.0 + (30.0 * k + 1.0) / POINT_THREE_SQUARED]
        .into_iter()
        .fold(f64::NEG_INFINITY, f64::max)
}

fn n_threshold(alpha: f64, k: f64, c: f64) -> u64 {
    let m = (400.0 * alpha * alpha).max(600.0 * k).max(16.0 * c * c);
    m.ceil() as u64 + 1
}

/// `C = c_floor + 1` and `n_min = ⌈max{400α², 600K, 16C²}⌉ + 1`.
pub fn paper_constants(repr: &ReprData) -> ConstantLedger {
    let floor = c_floor(repr.alpha, repr.k);
    let c = floor + 1.0;
    ConstantLedger { alpha: repr.alpha, k: repr.k, c_floor: floor, c, n_min: n_threshold(repr.alpha, repr.k, c) }
}

/// Like [`paper_constants`] but with a caller-chosen `C`, which must be
/// strictly above the floor.
pub fn paper_constants_with_c(repr: &ReprData, c_override: Option<f64>) -> Result<ConstantLedger> {
    let mut ledger = paper_constants(repr);
    if let Some(c) = c_override {
        if c <= ledger.c_floor || !c.is_finite() {
            return Err(Error::InvalidArgument(format!("C must exceed {}, got {c}", ledger.c_floor)));
        }
        ledger.c = c;
        ledger.n_min = n_threshold(ledger.alpha, ledger.k, c);
    }
    Ok(ledger)
}

/// Smoothed masses of `μ_n` over the two tails and the middle interval.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct LemmaChecks {
    pub n: u64,
    /// Over `(−∞, −1 − C/√n]`.
    pub i_a1: f64,
    /// Over `[1 + C/√n, ∞)`.
    pub i_a2: f64,
    /// Over `[−1 + C/√n, 1 − C/√n]`.
    pub i_mid: f64,
    /// `1/(π√n)`.
    pub tail_bound: f64,
    /// `2C/(3√n) + 6/(π√n)`.
    pub mid_bound: f64,
    pub pass: bool,
}

const LEMMA_SLACK: f64 = 1e-12;

/// Evaluates the three smoothed integrals of `μ_n` at `y = 1/n` in closed
/// form and compares them with `1/(π√n)` (tails) and `2C/(3√n) + 6/(π√n)`
/// (middle).
pub fn lemma_integral_checks(mu: &AtomicMeasure, n: u64, ledger: &ConstantLedger) -> Result<LemmaChecks> {
    if n <= ledger.n_min {
        return Err(Error::Precondition(format!("n = {n} must exceed n_min = {}", ledger.n_min)));
    }
    let mu_n = clt_normalize(mu, n)?;
    lemma_checks_for(&mu_n, n, ledger)
}

fn lemma_checks_for(mu_n: &AtomicMeasure, n: u64, ledger: &ConstantLedger) -> Result<LemmaChecks> {
    let s = (n as f64).sqrt();
    let y = ledger.y(n);
    let cut = ledger.c / s;
    let i_a1 = poisson_smoothed_mass(mu_n, f64::NEG_INFINITY, -1.0 - cut, y)?;
    let i_a2 = poisson_smoothed_mass(mu_n, 1.0 + cut, f64::INFINITY, y)?;
    let i_mid = poisson_smoothed_mass(mu_n, -1.0 + cut, 1.0 - cut, y)?;
    let tail_bound = 1.0 / (PI * s);
    let mid_bound = 2.0 * ledger.c / (3.0 * s) + 6.0 / (PI * s);
    let pass = i_a1 <= tail_bound + LEMMA_SLACK && i_a2 <= tail_bound + LEMMA_SLACK && i_mid <= mid_bound + LEMMA_SLACK;
    Ok(LemmaChecks { n, i_a1, i_a2, i_mid, tail_bound, mid_bound, pass })
}

/// Mass of `μ_n` outside `(−1−ε, −1+ε) ∪ (1−ε, 1+ε)` with `ε = (C+2)/√n`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EpsilonAssembly {
    pub eps: f64,
    pub outside_mass: f64,
    /// `outside_mass < eps`.
    pub holds: bool,
}

pub fn epsilon_assembly(mu_n: &AtomicMeasure, n: u64, ledger: &ConstantLedger) -> EpsilonAssembly {
    let eps = (ledger.c + 2.0) / (n as f64).sqrt();
    let inside: f64 = mu_n
        .atoms()
        .iter()
        .filter(|a| (a.t + 1.0).abs() < eps || (a.t - 1.0).abs() < eps)
        .map(|a| a.w)
        .sum();
    let outside_mass = (mu_n.total_mass() - inside).max(0.0);
    EpsilonAssembly { eps, outside_mass, holds: outside_mass < eps }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CltRow {
    pub n: u64,
    pub d_lev: f64,
    pub thm1_bound: f64,
    pub sqrt_n_dlev: f64,
}

/// Which rows the log-log slope was fitted on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FitScope {
    /// Rows with `n > n_min`, where the bound is claimed.
    AboveNMin,
    /// Fewer than four rows exceed `n_min`; every row with `d_lev > 0` was used.
    AllRows,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum RateFit {
    Fitted { slope: f64, stderr: f64, rows_used: usize, scope: FitScope },
    /// Every `d_lev` is zero: `μ` is already the Bernoulli fixed point.
    DegenerateFixedPoint,
    /// Not enough rows with `d_lev > 0`.
    Insufficient,
}

impl RateFit {
    pub fn slope(&self) -> Option<f64> {
        match self {
            RateFit::Fitted { slope, .. } => Some(*slope),
            _ => None,
        }
    }

    pub fn stderr(&self) -> Option<f64> {
        match self {
            RateFit::Fitted { stderr, .. } => Some(*stderr),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CltReport {
    pub ledger: ConstantLedger,
    pub rows: Vec<CltRow>,
    pub fit: RateFit,
}

impl CltReport {
    pub fn rows_above_n_min(&self) -> impl Iterator<Item = &CltRow> {
        self.rows.iter().filter(move |r| r.n > self.ledger.n_min)
    }
}

/// Ordinary least squares of `log d_lev` on `log n`; returns `(slope, stderr)`.
pub fn rate_fit(rows: &[CltRow]) -> Result<(f64, f64)> {
    let pts: Vec<(f64, f64)> = rows
        .iter()
        .filter(|r| r.d_lev > 0.0)
        .map(|r| ((r.n as f64).ln(), r.d_lev.ln()))
        .collect();
    if rows.iter().all(|r| r.d_lev == 0.0) {
        return Err(Error::DegenerateFit("every d_lev is zero".into()));
    }
    if pts.len() < 4 {
        return Err(Error::DegenerateFit(format!("need at least 4 rows with d_lev > 0, got {}", pts.len())));
    }
    let m = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / m;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / m;
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let slope = sxy / sxx;
    let intercept = my - slope * mx;
    let ssr: f64 = pts.iter().map(|p| (p.1 - intercept - slope * p.0).powi(2)).sum();
    let stderr = (ssr / (m - 2.0) / sxx).sqrt();
    Ok((slope, stderr))
}

/// Computes `μ_n` exactly for every `n` in `n_list`, its Lévy distance to
/// `𝐛`, and the bound `3.5(C+2)/√n`; fits the decay rate.
pub fn theorem1_experiment(mu: &AtomicMeasure, n_list: &[u64], c_override: Option<f64>) -> Result<CltReport> {
    if n_list.is_empty() || n_list[0] == 0 || n_list.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::InvalidArgument("n list must be positive and strictly increasing".into()));
    }
    let repr = extract_representation(mu)?;
    let ledger = paper_constants_with_c(&repr, c_override)?;
    let target = AtomicMeasure::bernoulli();
    let rows: Vec<CltRow> = n_list
        .par_iter()
        .map(|&n| {
            let mu_n = clt_normalize(mu, n)?;
            let d_lev = levy_distance(&mu_n, &target)?;
            Ok(CltRow { n, d_lev, thm1_bound: ledger.theorem1_bound(n), sqrt_n_dlev: (n as f64).sqrt() * d_lev })
        })
        .collect::<Result<_>>()?;

    let fit = if rows.iter().all(|r| r.d_lev == 0.0) {
        RateFit::DegenerateFixedPoint
    } else {
        let above: Vec<CltRow> = rows.iter().filter(|r| r.n > ledger.n_min && r.d_lev > 0.0).copied().collect();
        let (subset, scope) =
            if above.len() >= 4 { (above, FitScope::AboveNMin) } else { (rows.clone(), FitScope::AllRows) };
        match rate_fit(&subset) {
            Ok((slope, stderr)) => RateFit::Fitted {
                slope,
                stderr,
                rows_used: subset.iter().filter(|r| r.d_lev > 0.0).count(),
                scope,
            },
            Err(_) => RateFit::Insufficient,
        }
    };
    Ok(CltReport { ledger, rows, fit })
}

/// `n = start, start·ratio, …` up to and including `end`.
pub fn geometric_grid(start: u64, end: u64, ratio: u64) -> Result<Vec<u64>> {
    if start == 0 || ratio < 2 || end < start {
        return Err(Error::InvalidArgument(format!(
            "need 0 < start ≤ end and ratio ≥ 2 (got {start}, {end}, {ratio})"
        )));
    }
    let mut out = vec![start];
    while let Some(next) = out.last().and_then(|n| n.checked_mul(ratio)).filter(|&n| n <= end) {
        out.push(next);
    }
    Ok(out)
}

/// Convenience: representation and constants in one call.
pub fn constants_for(mu: &AtomicMeasure) -> Result<ConstantLedger> {
    Ok(paper_constants(&extract_representation(mu)?))
}
