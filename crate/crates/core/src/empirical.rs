//! Truncated evaluation of the attenuated signed prime sum
//!
//! ```text
//! S(x, alpha) = sum_{p > 2} (-1)^((p - 1) / 2) exp(-(x p)^alpha)
//! ```
//!
//! in plain double precision. This is an illustration, not a certificate.

use rayon::prelude::*;
use thiserror::Error;

/// `x` values swept by default, decreasing.
pub const DEFAULT_X_GRID: [f64; 5] = [0.2, 0.1, 0.05, 0.02, 0.01];
pub const DEFAULT_CUTOFF: u64 = 1_000_000;
/// Largest acceptable bound on the neglected primes.
pub const MAX_TRUNCATION: f64 = 1e-12;
pub const CSV_HEADER: &str = "x,alpha,cutoff,value,truncation_bound";

#[derive(Debug, Error, PartialEq)]
pub enum EmpiricalError {
    #[error("invalid argument: {0}")]
    Domain(String),
    #[error("cutoff {cutoff} too small at x = {x}, alpha = {alpha}: truncation bound {bound:e}")]
    Truncation { x: f64, alpha: f64, cutoff: u64, bound: f64 },
}

/// The odd primes up to a limit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimeTable {
    limit: u64,
    primes: Vec<u64>,
}

impl PrimeTable {
    pub fn limit(&self) -> u64 {
        self.limit
    }

    pub fn primes(&self) -> &[u64] {
        &self.primes
    }

    /// `p mod 4` for each prime, in order.
    pub fn residues(&self) -> impl Iterator<Item = u8> + '_ {
        self.primes.iter().map(|p| (p % 4) as u8)
    }

    /// `#{p = 3 mod 4} - #{p = 1 mod 4}`.
    pub fn residue_excess(&self) -> i64 {
        self.residues().map(|r| if r == 3 { 1 } else { -1 }).sum()
    }
}

/// Odd primes `<= n` by a sieve over odd numbers.
pub fn sieve(n: u64) -> Result<PrimeTable, EmpiricalError> {
    if n < 3 {
        return Err(EmpiricalError::Domain(format!("sieve limit {n} must be at least 3")));
    }
    let n_usize = usize::try_from(n).map_err(|_| EmpiricalError::Domain(format!("sieve limit {n} too large")))?;
    // index i stands for 2i + 1
    let mut composite = vec![false; n_usize / 2 + 1];
    let mut i = 1;
    while (2 * i + 1) * (2 * i + 1) <= n_usize {
        if !composite[i] {
            let p = 2 * i + 1;
            let mut j = p * p / 2;
            while j < composite.len() {
                composite[j] = true;
                j += p;
            }
        }
        i += 1;
    }
    let primes = (1..composite.len())
        .filter(|&i| !composite[i] && 2 * i < n_usize)
        .map(|i| (2 * i + 1) as u64)
        .collect();
    Ok(PrimeTable { limit: n, primes })
}

#[derive(Debug, Clone, PartialEq)]
pub struct SumSample {
    pub x: f64,
    pub alpha: f64,
    pub cutoff: u64,
    pub value: f64,
    pub truncation_bound: f64,
}

impl SumSample {
    pub fn to_csv_row(&self) -> String {
        format!(
            "{},{},{},{:.16e},{:.16e}",
            self.x, self.alpha, self.cutoff, self.value, self.truncation_bound
        )
    }
}

/// Upper bound for `sum_{n > cutoff} exp(-(x n)^alpha)`, via
/// `int_N^inf exp(-(x t)^alpha) dt = Gamma(1/alpha, (xN)^alpha) / (x alpha)` and
/// `Gamma(s, y) <= y^(s-1) e^-y` for `s <= 1`, `<= 2 y^(s-1) e^-y` for
/// `y >= 2(s - 1)`.
pub fn truncation_bound(x: f64, alpha: f64, cutoff: u64) -> f64 {
    let s = alpha.recip();
    let y = (x * cutoff as f64).powf(alpha);
    let factor: f64 = if s <= 1.0 {
        1.0
    } else if y >= 2.0 * (s - 1.0) {
        2.0
    } else {
        return f64::INFINITY;
    };
    let ln_bound = factor.ln() + (s - 1.0) * y.ln() - y - (x * alpha).ln();
    ln_bound.exp().max(f64::MIN_POSITIVE)
}

pub fn chebyshev_sum(x: f64, alpha: f64, table: &PrimeTable) -> Result<SumSample, EmpiricalError> {
    if !(x.is_finite() && x > 0.0 && alpha.is_finite() && alpha > 0.0) {
        return Err(EmpiricalError::Domain(format!("x = {x} and alpha = {alpha} must be positive")));
    }
    let bound = truncation_bound(x, alpha, table.limit);
    if bound.is_nan() || bound >= MAX_TRUNCATION {
        return Err(EmpiricalError::Truncation {
            x,
            alpha,
            cutoff: table.limit,
            bound,
        });
    }
    // Neumaier summation in increasing p
    let (mut sum, mut comp) = (0.0f64, 0.0f64);
    for &p in &table.primes {
        let term = (-(x * p as f64).powf(alpha)).exp();
        if term == 0.0 {
            break;
        }
        let term = if p % 4 == 3 { -term } else { term };
        let t = sum + term;
        comp += if sum.abs() >= term.abs() { (sum - t) + term } else { (term - t) + sum };
        sum = t;
    }
    Ok(SumSample {
        x,
        alpha,
        cutoff: table.limit,
        value: sum + comp,
        truncation_bound: bound,
    })
}

/// One sample per grid point, in grid order.
pub fn sweep(x_grid: &[f64], alpha: f64, table: &PrimeTable) -> Result<Vec<SumSample>, EmpiricalError> {
    if x_grid.windows(2).any(|w| w[1] >= w[0]) {
        return Err(EmpiricalError::Domain("x grid must be strictly decreasing".into()));
    }
    x_grid.par_iter().map(|&x| chebyshev_sum(x, alpha, table)).collect::<Vec<_>>().into_iter().collect()
}

pub fn to_csv(samples: &[SumSample]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for s in samples {
        out.push_str(&s.to_csv_row());
        out.push('\n');
    }
    out
}
