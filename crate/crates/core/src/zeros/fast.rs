//! Double-precision evaluation of `Z(t)` for scanning and bracketing.
//!
//! Nothing here is rigorous; every zero located with it is certified
//! afterwards with enclosures.

use num_complex::Complex64;
use std::f64::consts::PI;

use crate::special::bernoulli::bernoulli;

const EM_ORDER: usize = 20;
const STIRLING_TERMS: usize = 8;
const STIRLING_RADIUS: f64 = 10.0;

#[derive(Debug, Clone)]
struct Shift {
    a: f64,
    ln: Vec<f64>,
    inv_sqrt: Vec<f64>,
}

impl Shift {
    fn new(a: f64, n: usize) -> Self {
        let ln: Vec<f64> = (0..n).map(|k| (k as f64 + a).ln()).collect();
        let inv_sqrt = (0..n).map(|k| (k as f64 + a).sqrt().recip()).collect();
        Self { a, ln, inv_sqrt }
    }

    /// `(k + a)^(-1/2 - it)`
    fn term(&self, k: usize, t: f64) -> Complex64 {
        let (ln, w) = match (self.ln.get(k), self.inv_sqrt.get(k)) {
            (Some(&l), Some(&w)) => (l, w),
            _ => {
                let b = k as f64 + self.a;
                (b.ln(), b.sqrt().recip())
            }
        };
        let (s, c) = (t * ln).sin_cos();
        Complex64::new(w * c, -w * s)
    }
}

/// Tabulated evaluator of `Z(t)` in double precision.
#[derive(Debug, Clone)]
pub struct FastRotated {
    quarter: Shift,
    three_quarters: Shift,
    em: Vec<f64>,
    stirling: Vec<f64>,
}

fn direct_terms(t: f64) -> usize {
    (t / 2.0).ceil().max(30.0) as usize
}

impl FastRotated {
    /// Tables sized for `0 <= t <= max_t`; larger `t` still works, only slower.
    pub fn new(max_t: f64) -> Self {
        let n = direct_terms(max_t.max(0.0)) + 1;
        let mut em = Vec::with_capacity(EM_ORDER);
        let mut fact = rug::Integer::from(1);
        for j in 1..=EM_ORDER as u32 {
            fact *= (2 * j - 1) * (2 * j);
            em.push(rug::Rational::from(bernoulli(2 * j as usize) / &fact).to_f64());
        }
        let stirling = (1..=STIRLING_TERMS)
            .map(|k| {
                let d = (2 * k * (2 * k - 1)) as u32;
                rug::Rational::from(bernoulli(2 * k) / d).to_f64()
            })
            .collect();
        Self {
            quarter: Shift::new(0.25, n),
            three_quarters: Shift::new(0.75, n),
            em,
            stirling,
        }
    }

    fn hurwitz(&self, shift: &Shift, t: f64) -> Complex64 {
        let n = direct_terms(t);
        let s = Complex64::new(0.5, t);
        let mut direct = Complex64::new(0.0, 0.0);
        for k in 0..n {
            direct += shift.term(k, t);
        }
        let x = n as f64 + shift.a;
        let x_neg_s = shift.term(n, t);
        let integral = x_neg_s * x / (s - 1.0);
        let half = x_neg_s * 0.5;
        let x_inv2 = 1.0 / (x * x);
        let mut q = s / x;
        let mut corr = q * self.em[0];
        for j in 2..=EM_ORDER {
            let k = (2 * j) as f64;
            q = q * (s + (k - 3.0)) * (s + (k - 2.0)) * x_inv2;
            corr += q * self.em[j - 1];
        }
        direct + integral + half + corr * x_neg_s
    }

    /// `Im ln Gamma(z)` up to a multiple of `2 pi`.
    fn im_log_gamma(&self, z: Complex64) -> f64 {
        let shift = if z.norm() < STIRLING_RADIUS {
            (STIRLING_RADIUS - z.re).ceil().max(0.0) as usize
        } else {
            0
        };
        let w = z + shift as f64;
        let mut lg = (w - 0.5) * w.ln() - w + 0.5 * (2.0 * PI).ln();
        let w_inv = w.inv();
        let w_inv2 = w_inv * w_inv;
        let mut p = w_inv;
        for c in &self.stirling {
            lg += p * *c;
            p *= w_inv2;
        }
        let mut im = lg.im;
        for j in 0..shift {
            im -= (z + j as f64).arg();
        }
        im
    }

    pub fn phase(&self, t: f64) -> f64 {
        let z = Complex64::new(0.75, t / 2.0);
        0.5 * t * (4.0 / PI).ln() + self.im_log_gamma(z) - t * 4f64.ln()
    }

    /// `Z(t)` for `t >= 0`.
    pub fn eval(&self, t: f64) -> f64 {
        let diff = self.hurwitz(&self.quarter, t) - self.hurwitz(&self.three_quarters, t);
        let (s, c) = self.phase(t).sin_cos();
        0.5 * (c * diff.re - s * diff.im)
    }

    /// Bisects a sign change of `Z` on `[a, b]` down to about `tol`.
    pub fn bisect(&self, mut a: f64, mut b: f64, tol: f64) -> f64 {
        let mut fa = self.eval(a);
        for _ in 0..200 {
            let m = 0.5 * (a + b);
            if b - a <= tol || m <= a || m >= b {
                break;
            }
            let fm = self.eval(m);
            if fm == 0.0 {
                return m;
            }
            if (fm < 0.0) == (fa < 0.0) {
                a = m;
                fa = fm;
            } else {
                b = m;
            }
        }
        0.5 * (a + b)
    }
}
