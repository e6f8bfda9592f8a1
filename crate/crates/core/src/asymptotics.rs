//! Main term, empirical error E(x, a), and least-squares estimation of the
//! secondary constants c₁, c₂.
//!
//! The main term is (6/π²)·x·log log x with natural logarithms; the error is
//! E(x, a) = S(x, a) − main. The secondary constants come from fitting the
//! normalized errors E(x, a)/x against the model c₁ + c₂·li(x)/x by ordinary
//! least squares.

use crate::floor_sums::{sum_phi_floor_primes_naive, Algorithm, SumQuery};
use crate::sieves::SieveTables;
use crate::special_values::{li, AsymptoticConstants};
use crate::Error;

/// Exact sum, main term, and error for one (x, a).
#[derive(Debug, Clone, Copy)]
pub struct SumBreakdown {
    pub x: u64,
    pub a: i64,
    pub exact: i64,
    pub main: f64,
    pub error: f64,
    pub normalized_error: f64,
}

/// Which error model the least-squares fit uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorModel {
    /// normalized_error ≈ c₁ (c₂ forced to zero)
    Constant,
    /// normalized_error ≈ c₁ + c₂·li(x)/x
    ConstantPlusLi,
}

/// Result of fitting the secondary constants.
#[derive(Debug, Clone)]
pub struct FitReport {
    pub c1_hat: f64,
    pub c2_hat: f64,
    /// √(Σ residual²) over the sample points.
    pub residual_norm: f64,
    pub sample_points: Vec<(u64, f64)>,
}

impl FitReport {
    /// A trivial report with c₁ = c₂ = 0, under which the refined
    /// prediction reduces to the bare main term.
    pub fn zero() -> Self {
        FitReport {
            c1_hat: 0.0,
            c2_hat: 0.0,
            residual_norm: 0.0,
            sample_points: Vec::new(),
        }
    }
}

/// (6/π²)·x·log log x, natural logs. Rejects x < 3, where log log x is
/// non-positive or undefined.
pub fn main_term(x: u64, constants: &AsymptoticConstants) -> Result<f64, Error> {
    if x < 3 {
        return Err(Error::MainTermDomain(x));
    }
    let xf = x as f64;
    Ok(constants.c0 * xf * xf.ln().ln())
}

/// Exact S(x, a) together with the main term and E(x, a) = exact − main.
pub fn error_term(
    x: u64,
    a: i64,
    tables: &SieveTables,
    constants: &AsymptoticConstants,
) -> Result<SumBreakdown, Error> {
    let main = main_term(x, constants)?;
    let exact = sum_phi_floor_primes_naive(
        &SumQuery {
            x,
            shift: a,
            algorithm: Algorithm::Naive,
        },
        tables,
    )?
    .value;
    let error = exact as f64 - main;
    Ok(SumBreakdown {
        x,
        a,
        exact,
        main,
        error,
        normalized_error: error / x as f64,
    })
}

/// Least-squares fit of the normalized errors over `xs` (strictly
/// increasing, each ≥ 3, at least 3 points) against the chosen model.
pub fn fit_error_model(
    xs: &[u64],
    a: i64,
    tables: &SieveTables,
    constants: &AsymptoticConstants,
    model: ErrorModel,
) -> Result<FitReport, Error> {
    if xs.len() < 3 {
        return Err(Error::FitTooFewPoints {
            needed: 3,
            got: xs.len(),
        });
    }
    if xs.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::FitNotIncreasing);
    }
    let mut points = Vec::with_capacity(xs.len());
    let mut regressors = Vec::with_capacity(xs.len());
    for &x in xs {
        let b = error_term(x, a, tables, constants)?;
        points.push((x, b.normalized_error));
        let r = match model {
            ErrorModel::Constant => 0.0,
            ErrorModel::ConstantPlusLi => li(x as f64)? / x as f64,
        };
        regressors.push(r);
    }

    let (c1, c2) = match model {
        ErrorModel::Constant => {
            let mean = points.iter().map(|&(_, y)| y).sum::<f64>() / points.len() as f64;
            (mean, 0.0)
        }
        ErrorModel::ConstantPlusLi => {
            // 2×2 normal equations for y = c1 + c2·r
            let n = points.len() as f64;
            let sr: f64 = regressors.iter().sum();
            let srr: f64 = regressors.iter().map(|r| r * r).sum();
            let sy: f64 = points.iter().map(|&(_, y)| y).sum();
            let sry: f64 = regressors
                .iter()
                .zip(points.iter())
                .map(|(r, &(_, y))| r * y)
                .sum();
            let det = n * srr - sr * sr;
            if det.abs() < 1e-14 * n * srr.max(1.0) {
                return Err(Error::DegenerateFit);
            }
            let c2 = (n * sry - sr * sy) / det;
            let c1 = (sy - c2 * sr) / n;
            (c1, c2)
        }
    };

    let residual_norm = points
        .iter()
        .zip(regressors.iter())
        .map(|(&(_, y), r)| {
            let d = y - c1 - c2 * r;
            d * d
        })
        .sum::<f64>()
        .sqrt();

    Ok(FitReport {
        c1_hat: c1,
        c2_hat: c2,
        residual_norm,
        sample_points: points,
    })
}

/// Two-parameter fit (the default model).
pub fn fit_c1(
    xs: &[u64],
    a: i64,
    tables: &SieveTables,
    constants: &AsymptoticConstants,
) -> Result<FitReport, Error> {
    fit_error_model(xs, a, tables, constants, ErrorModel::ConstantPlusLi)
}

/// Refined prediction c₀·x·log log x + c1_hat·x + c2_hat·li(x).
pub fn main_term_refined(
    x: u64,
    constants: &AsymptoticConstants,
    fit: &FitReport,
) -> Result<f64, Error> {
    let bare = main_term(x, constants)?;
    Ok(bare + fit.c1_hat * x as f64 + fit.c2_hat * li(x as f64)?)
}
