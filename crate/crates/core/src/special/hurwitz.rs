//! Hurwitz zeta by Euler–Maclaurin summation.
//!
//! With `f(t) = (a + t)^-s` and `x = N + a`,
//!
//! ```text
//! zeta(s, a) = sum_{k<N} f(k) + x^(1-s) / (s - 1) + f(N) / 2
//!            + sum_{j=1}^{M} B_2j / (2j)! (s)_(2j-1) x^(-s-2j+1) + R,
//! |R| <= |B_2M| / (2M)! |(s)_2M| x^(1 - sigma - 2M) / (sigma + 2M - 1),
//! ```
//!
//! where `(s)_n` is the rising factorial. The bound uses
//! `|B_2M(t - floor t)| <= |B_2M|`.

use rug::Rational;

use super::bernoulli::bernoulli;
use super::SpecialError;
use crate::enclosure::{ComplexEnclosure, Enclosure};

type Result<T> = std::result::Result<T, SpecialError>;

/// `s` closer than this to 1 is rejected as a pole.
pub const POLE_MARGIN: f64 = 1e-3;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EulerMaclaurinParams {
    /// Length `N` of the direct sum; `None` uses `max(50, ceil(2 |Im s|))`.
    pub direct_terms: Option<usize>,
    /// Number `M` of Bernoulli corrections.
    pub bernoulli_order: usize,
}

impl Default for EulerMaclaurinParams {
    fn default() -> Self {
        Self {
            direct_terms: None,
            bernoulli_order: 12,
        }
    }
}

impl EulerMaclaurinParams {
    pub fn direct_terms_for(&self, s: &ComplexEnclosure) -> usize {
        self.direct_terms
            .unwrap_or_else(|| (2.0 * s.im.mag().to_f64()).ceil().max(50.0) as usize)
    }

    /// `B_2, B_4, ..., B_2M`.
    pub fn bernoulli_table(&self) -> Vec<&'static Rational> {
        (1..=self.bernoulli_order).map(|j| bernoulli(2 * j)).collect()
    }
}

fn factorial(n: u32) -> Rational {
    Rational::from(rug::Integer::factorial(n))
}

/// `base^-s` as `exp(-s ln base)` with `ln base` given.
fn power_from_ln(neg_s: &ComplexEnclosure, ln_base: &Enclosure) -> Result<ComplexEnclosure> {
    Ok(neg_s.scale(ln_base).exp()?)
}

/// Encloses `zeta(s, a)` for `a > 0`, `s` away from 1.
pub fn hurwitz_zeta(s: &ComplexEnclosure, a: &Enclosure, params: &EulerMaclaurinParams) -> Result<ComplexEnclosure> {
    let p = s.prec().max(a.prec());
    if !a.is_positive() {
        return Err(SpecialError::Domain("hurwitz_zeta needs a > 0".into()));
    }
    let dist = s.re.add_int(-1).mig().to_f64().max(s.im.mig().to_f64());
    if dist < POLE_MARGIN {
        return Err(SpecialError::Pole(format!("s = {:?} + i{:?} is within {POLE_MARGIN} of 1", s.re, s.im)));
    }
    let m = params.bernoulli_order;
    if m == 0 {
        return Err(SpecialError::Domain("bernoulli_order must be positive".into()));
    }
    let n = params.direct_terms_for(s);
    let sigma_lo = Enclosure::from_float(p, s.re.lo());
    let tail_exponent = sigma_lo.add_int(2 * m as i64 - 1);
    if !tail_exponent.is_positive() {
        return Err(SpecialError::Precision(format!(
            "remainder integral diverges: sigma + 2M - 1 <= 0 for M = {m}"
        )));
    }

    let neg_s = -s;
    let mut direct = ComplexEnclosure::real(Enclosure::zero(p));
    for k in 0..n {
        let base = a.add_int(k as i64);
        direct = &direct + &power_from_ln(&neg_s, &base.ln()?)?;
    }

    let x = a.add_int(n as i64);
    let ln_x = x.ln()?;
    let x_neg_s = power_from_ln(&neg_s, &ln_x)?;
    let s_minus_one = s.add_real(&Enclosure::from_int(p, -1));
    let integral = x_neg_s.scale(&x).div(&s_minus_one)?;
    let half = x_neg_s.scale(&Enclosure::ratio(p, 1, 2));

    // q_j = (s)_(2j-1) x^(-(2j-1))
    let x_inv = x.recip()?;
    let x_inv2 = x_inv.sqr();
    let mut q = s.scale(&x_inv);
    let mut corrections = ComplexEnclosure::real(Enclosure::zero(p));
    for j in 1..=m {
        if j > 1 {
            let k = (2 * j) as i64;
            let f1 = s.add_real(&Enclosure::from_int(p, k - 3));
            let f2 = s.add_real(&Enclosure::from_int(p, k - 2));
            q = (&(&q * &f1) * &f2).scale(&x_inv2);
        }
        let c = bernoulli(2 * j) / factorial(2 * j as u32);
        corrections = &corrections + &q.scale(&Enclosure::from_rational(p, &c));
    }
    let corrections = &corrections * &x_neg_s;

    // |(s)_2M| <= prod |s + i|
    let mut poch = Enclosure::one(p);
    for i in 0..(2 * m) as i64 {
        poch = &poch * &s.add_real(&Enclosure::from_int(p, i)).abs()?;
    }
    let coeff = Enclosure::from_rational(p, &(bernoulli(2 * m) / factorial(2 * m as u32))).abs();
    let decay = (&(-&tail_exponent) * &ln_x).exp()?;
    let r = (&(&coeff * &poch) * &decay).div(&tail_exponent)?;
    if !r.hi().is_finite() {
        return Err(SpecialError::Precision("Euler-Maclaurin remainder is not finite".into()));
    }
    let disk = Enclosure::symmetric(p, r.hi());

    let total = &(&(&direct + &integral) + &half) + &corrections;
    Ok(ComplexEnclosure::new(&total.re + &disk, &total.im + &disk))
}
