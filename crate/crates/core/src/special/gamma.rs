//! log Gamma by the shifted Stirling series with Olver's remainder bound.
//!
//! For `Re w > 0` and `m >= 1` the remainder after `m - 1` Bernoulli
//! correction terms satisfies
//!
//! ```text
//! |R_m(w)| <= |B_2m| / (2m (2m - 1) |w|^(2m - 1)) * sec^(2m)(arg(w) / 2),
//! ```
//!
//! and `sec^2(arg(w) / 2) = 2|w| / (|w| + Re w) <= 2`. With no correction terms
//! this is the classical `theta / (6|w|)`, `|theta| <= 1`.

use rug::Rational;

use super::bernoulli::{bernoulli, ln_abs_bernoulli, MAX_INDEX};
use super::SpecialError;
use crate::enclosure::{ComplexEnclosure, Enclosure};

type Result<T> = std::result::Result<T, SpecialError>;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StirlingParams {
    /// Recurrence steps `Gamma(z) = Gamma(z + n) / (z (z+1) ... (z+n-1))`
    /// taken before the series. `None` picks the smallest `n` reaching
    /// `min_radius`.
    pub shift_count: Option<u32>,
    pub min_radius: f64,
    /// Cap on the number of Bernoulli correction terms. Zero keeps only the
    /// `(z - 1/2) log z - z + log(2 pi) / 2` part.
    pub max_terms: usize,
}

impl StirlingParams {
    /// Radius and term cap reaching roughly `2^-(prec + 8)` on vertical lines.
    pub fn for_precision(prec: u32) -> Self {
        let bits = f64::from(prec) + 10.0;
        // the optimal truncation error decays like exp(-sqrt(2) pi R)
        let radius = (bits * std::f64::consts::LN_2 / (std::f64::consts::SQRT_2 * std::f64::consts::PI)).ceil() + 2.0;
        Self {
            shift_count: None,
            min_radius: radius.max(8.0),
            max_terms: (MAX_INDEX / 2) - 1,
        }
    }

    /// The bare first-order formula with its `1 / (6|z|)` error term.
    pub fn first_order() -> Self {
        Self {
            shift_count: None,
            min_radius: 8.0,
            max_terms: 0,
        }
    }

    pub fn with_shift(self, n: u32) -> Self {
        Self {
            shift_count: Some(n),
            ..self
        }
    }

    fn shift_for(&self, re: f64, im_min: f64) -> u32 {
        if let Some(n) = self.shift_count {
            return n;
        }
        let mut n = 0u32;
        while re + f64::from(n) < 0.5 || (re + f64::from(n)).hypot(im_min) < self.min_radius {
            n += 1;
        }
        n
    }
}

fn rational(prec: u32, q: &Rational) -> Enclosure {
    Enclosure::from_rational(prec, q)
}

/// `(w - 1/2) log w - w + log(2 pi) / 2` for `Re w > 0`.
pub fn stirling_principal(w: &ComplexEnclosure) -> Result<ComplexEnclosure> {
    let p = w.prec();
    if !w.re.is_positive() {
        return Err(SpecialError::Domain("Stirling series needs Re w > 0".into()));
    }
    let ln_w = w.ln()?;
    let half = Enclosure::ratio(p, 1, 2);
    let ln_two_pi = Enclosure::pi(p).mul_int(2).ln()?;
    let a = &w.add_real(&-&half) * &ln_w;
    Ok((&a - w).add_real(&ln_two_pi.div_int(2)))
}

/// Upper bound on the remainder after `m - 1` correction terms (`m >= 1`).
fn remainder_bound(w: &ComplexEnclosure, abs_w: &Enclosure, m: usize) -> Result<Enclosure> {
    let p = w.prec();
    let b = rational(p, bernoulli(2 * m)).abs();
    let denom = (2 * m * (2 * m - 1)) as i64;
    let sec2 = abs_w.mul_int(2).div(&(abs_w + &w.re))?;
    let wpow = Enclosure::point(p, 1.0).div(&abs_w.powi((2 * m - 1) as i32)?)?;
    let r = &(&b.div_int(denom) * &wpow) * &sec2.powi(m as i32)?;
    Ok(Enclosure::from_float(p, r.hi()))
}

fn choose_terms(w: &ComplexEnclosure, prec: u32, max_terms: usize) -> usize {
    let abs_w = w.re.mid_f64().hypot(w.im.mid_f64());
    let ln_sec2 = (2.0 * abs_w / (abs_w + w.re.mid_f64())).ln();
    let target = -(f64::from(prec) + 8.0) * std::f64::consts::LN_2;
    let est = |m: usize| {
        let mf = m as f64;
        ln_abs_bernoulli(2 * m) - (2.0 * mf * (2.0 * mf - 1.0)).ln() - (2.0 * mf - 1.0) * abs_w.ln() + mf * ln_sec2
    };
    let mut best = (0usize, est(1));
    for used in 1..=max_terms {
        let e = est(used + 1);
        if e < best.1 {
            best = (used, e);
        } else if e > best.1 + 5.0 {
            break;
        }
        if e < target {
            break;
        }
    }
    best.0
}

/// Asymptotic series plus the rigorous remainder disk, for `Re w > 0`.
pub fn stirling_series(w: &ComplexEnclosure, max_terms: usize) -> Result<ComplexEnclosure> {
    let p = w.prec();
    let mut sum = stirling_principal(w)?;
    let used = choose_terms(w, p, max_terms);
    if used > 0 {
        let u = w.recip()?;
        let u2 = &u * &u;
        let mut upow = u;
        for k in 1..=used {
            let c = rational(p, bernoulli(2 * k)).div_int((2 * k * (2 * k - 1)) as i64);
            sum = &sum + &upow.scale(&c);
            if k < used {
                upow = &upow * &u2;
            }
        }
    }
    let abs_w = w.abs()?;
    let r = remainder_bound(w, &abs_w, used + 1)?;
    let disk = Enclosure::symmetric(p, r.hi());
    Ok(ComplexEnclosure::new(&sum.re + &disk, &sum.im + &disk))
}

fn check_pole(z: &ComplexEnclosure) -> Result<()> {
    if z.re.lo() > &0 || !z.im.contains_zero() {
        return Ok(());
    }
    // some non-positive integer k with re.lo <= k <= re.hi
    let first = z.re.lo().clone().ceil();
    if first <= 0 && &first <= z.re.hi() {
        return Err(SpecialError::Pole(format!("log_gamma argument {:?} encloses a non-positive integer", z.re)));
    }
    Ok(())
}

/// Encloses a branch of `log Gamma(z)`.
///
/// The real part is `log |Gamma(z)|`. The imaginary part is correct modulo
/// `2 pi`, which is all that `exp` of the result needs.
pub fn log_gamma(z: &ComplexEnclosure, params: &StirlingParams) -> Result<ComplexEnclosure> {
    check_pole(z)?;
    let n = params.shift_for(z.re.lo_f64(), z.im.mig().to_f64());
    let mut w = z.clone();
    let mut product: Option<ComplexEnclosure> = None;
    for _ in 0..n {
        product = Some(match product {
            None => w.clone(),
            Some(acc) => &acc * &w,
        });
        w = w.add_real(&Enclosure::one(w.prec()));
    }
    if !w.re.is_positive() {
        return Err(SpecialError::Domain(format!(
            "after {n} shifts Re z = {:?} is still not positive",
            w.re
        )));
    }
    let series = stirling_series(&w, params.max_terms)?;
    match product {
        None => Ok(series),
        Some(prod) => Ok(&series - &prod.ln()?),
    }
}

/// `|Gamma(a + i t)|` for `a > 0`.
///
/// A wide `t` is handled in centered form: the value at the midpoint times
/// `exp([-L r, L r])`, where `r` is the radius of `t` and
/// `L = pi / 2 + min(1 / |t|, 1 / (2a))` bounds
/// `|d/dt log |Gamma(a + i t)|| = |Im psi(a + i t)| = |sum_k t / ((k + a)^2 + t^2)|`.
pub fn gamma_abs_vertical(a: &Enclosure, t: &Enclosure) -> Result<Enclosure> {
    if !a.is_positive() {
        return Err(SpecialError::Domain("gamma_abs_vertical needs a > 0".into()));
    }
    let p = a.prec().max(t.prec());
    let at_point = |t: &Enclosure| -> Result<Enclosure> {
        let z = ComplexEnclosure::new(a.clone(), t.clone());
        Ok(log_gamma(&z, &StirlingParams::for_precision(p))?.re.exp()?)
    };
    if t.is_point() {
        return at_point(t);
    }
    let (mid, rad) = t.mid_rad();
    let centre = at_point(&Enclosure::from_float(p, &mid))?;
    let a_lo = Enclosure::from_float(p, a.lo());
    let inv = match t.mig() {
        m if m > 0 => Enclosure::from_float(p, &m).recip()?.hi().clone().min(a_lo.mul_int(2).recip()?.hi()),
        _ => a_lo.mul_int(2).recip()?.hi().clone(),
    };
    let slope = &Enclosure::pi(p).div_int(2) + &Enclosure::from_float(p, &inv);
    let spread = (&slope * &Enclosure::from_float(p, &rad)).hi().clone();
    let factor = Enclosure::symmetric(p, &spread).exp()?;
    Ok(&centre * &factor)
}

/// `Gamma(x)` for real `x > 0`.
pub fn gamma_real(x: &Enclosure) -> Result<Enclosure> {
    if !x.is_positive() {
        return Err(SpecialError::Domain("gamma_real needs x > 0".into()));
    }
    let params = StirlingParams::for_precision(x.prec());
    Ok(log_gamma(&ComplexEnclosure::real(x.clone()), &params)?.re.exp()?)
}

/// The closed-form majorant
///
/// ```text
/// |Gamma(1/(2 alpha) + i gamma / alpha)|
///     <= sqrt(2 pi) (sqrt(gamma^2 + 1/4) / alpha)^(1/(2 alpha) - 1/2)
///        * exp(-pi gamma / (2 alpha) + alpha / (6 sqrt(gamma^2 + 1/4)))
/// ```
///
/// obtained from the first-order Stirling formula and `atan x < x`.
pub fn anderson_bound(alpha: &Enclosure, gamma: &Enclosure) -> Result<Enclosure> {
    if !alpha.is_positive() {
        return Err(SpecialError::Domain("anderson_bound needs alpha > 0".into()));
    }
    if gamma.lo() < &0 {
        return Err(SpecialError::Domain("anderson_bound needs gamma >= 0".into()));
    }
    let p = alpha.prec().max(gamma.prec());
    let quarter = Enclosure::ratio(p, 1, 4);
    let half = Enclosure::ratio(p, 1, 2);
    let pi = Enclosure::pi(p);
    let root = (&gamma.sqr() + &quarter).sqrt()?;
    let modulus = root.div(alpha)?;
    let exponent = &alpha.mul_int(2).recip()? - &half;
    let power = modulus.pow(&exponent)?;
    let decay = (&pi * gamma).div(&alpha.mul_int(2))?;
    let correction = alpha.div(&root.mul_int(6))?;
    let prefactor = pi.mul_int(2).sqrt()?;
    Ok(&(&prefactor * &power) * &(&correction - &decay).exp()?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rug::float::Constant;
    use rug::Float;

    const P: u32 = 128;

    fn real(x: f64) -> ComplexEnclosure {
        ComplexEnclosure::from_f64(P, x, 0.0)
    }

    #[test]
    fn log_gamma_one_is_zero() {
        let r = log_gamma(&real(1.0), &StirlingParams::for_precision(P)).unwrap();
        assert!(r.re.contains_f64(0.0));
        assert!(r.re.width() < 1e-35);
        assert!(r.im.contains_f64(0.0));
    }

    #[test]
    fn log_gamma_half() {
        let r = log_gamma(&real(0.5), &StirlingParams::for_precision(P)).unwrap();
        let oracle = Float::with_val(300, Constant::Pi).sqrt().ln();
        assert!(r.re.contains(&oracle));
        assert!(r.re.width() < 1e-35);
    }

    #[test]
    fn poles_rejected() {
        let p = StirlingParams::for_precision(P);
        assert!(matches!(log_gamma(&real(0.0), &p), Err(SpecialError::Pole(_))));
        assert!(matches!(log_gamma(&real(-3.0), &p), Err(SpecialError::Pole(_))));
        let near = ComplexEnclosure::new(Enclosure::from_f64(P, -2.5, -1.5).unwrap(), Enclosure::zero(P));
        assert!(matches!(log_gamma(&near, &p), Err(SpecialError::Pole(_))));
    }

    #[test]
    fn left_half_plane_by_recurrence() {
        // Gamma(-1/2) = -2 sqrt(pi)
        let r = log_gamma(&real(-0.5), &StirlingParams::for_precision(P)).unwrap();
        let oracle = (Float::with_val(300, Constant::Pi).sqrt() * 2u32).ln();
        assert!(r.re.contains(&oracle));
    }

    #[test]
    fn gamma_real_matches_mpfr() {
        for x in [0.02450448, 0.3, 1.5, 7.25, 33.0] {
            let g = gamma_real(&Enclosure::point(P, x)).unwrap();
            let oracle = Float::with_val(300, x).gamma();
            assert!(g.contains(&oracle), "x = {x}: {g:?}");
            assert!(g.width() < oracle.clone() * 1e-34f64);
        }
    }

    #[test]
    fn reflection_on_critical_line() {
        // |Gamma(1/2 + it)|^2 = pi / cosh(pi t)
        for t in [0.0, 1.0, 0.5, 5.0, 20.0] {
            let g = gamma_abs_vertical(&Enclosure::ratio(P, 1, 2), &Enclosure::point(P, t)).unwrap();
            let pi = Float::with_val(300, Constant::Pi);
            let oracle = (pi.clone() / (pi * t).cosh()).sqrt();
            assert!(g.contains(&oracle), "t = {t}");
        }
    }

    #[test]
    fn first_order_error_term() {
        // with no correction terms the remainder is at most 1/(6|w|)
        let w = ComplexEnclosure::from_f64(P, 10.0, 0.0);
        let s = stirling_series(&w, 0).unwrap();
        let principal = stirling_principal(&w).unwrap();
        let spread = (&s.re - &principal.re).width();
        assert!(spread <= 2.0 / 60.0 + 1e-30);
        let oracle = Float::with_val(300, 10).ln_abs_gamma().0;
        assert!(s.re.contains(&oracle));
    }

    #[test]
    fn shift_counts_agree() {
        let a = Enclosure::ratio(P, 1, 8);
        let t = Enclosure::point(P, 1.505);
        let z = ComplexEnclosure::new(a, t);
        let base = StirlingParams::for_precision(P);
        let auto = log_gamma(&z, &base).unwrap();
        for n in [20u32, 23, 30, 33] {
            let r = log_gamma(&z, &base.with_shift(n)).unwrap();
            assert!(r.re.overlaps(&auto.re), "shift {n}");
        }
    }

    #[test]
    fn anderson_closed_form_at_gamma_zero() {
        // alpha = 2, gamma = 0: sqrt(2 pi) (1/4)^(-1/4) e^(2/3)
        let b = anderson_bound(&Enclosure::point(P, 2.0), &Enclosure::zero(P)).unwrap();
        let w = 300;
        let oracle = (Float::with_val(w, Constant::Pi) * 2u32).sqrt()
            * Float::with_val(w, 2).sqrt()
            * (Float::with_val(w, 2) / 3u32).exp();
        assert!(b.contains(&oracle));
        assert!((oracle.to_f64() - 6.904537403214245).abs() < 1e-12);
    }

    #[test]
    fn anderson_dominates_gamma_at_first_zero() {
        let alpha = Enclosure::point(P, 4.0);
        let gamma = Enclosure::parse(P, "6.0209").unwrap();
        let bound = anderson_bound(&alpha, &gamma).unwrap();
        let exact = gamma_abs_vertical(&Enclosure::ratio(P, 1, 8), &gamma.div_int(4)).unwrap();
        assert!(bound.hi() >= exact.lo());
        // mpmath: |Gamma(1/8 + 1.505225 i)| = 0.2028000501850857691718526930196369283294
        let oracle = Float::with_val(200, Float::parse("0.2028000501850857691718526930196369283294").unwrap());
        assert!((exact.mid() - oracle).abs() < 1e-36);
    }

    #[test]
    fn anderson_rejects_bad_alpha() {
        assert!(anderson_bound(&Enclosure::zero(P), &Enclosure::one(P)).is_err());
        assert!(anderson_bound(&Enclosure::point(P, -1.0), &Enclosure::one(P)).is_err());
    }

    #[test]
    fn wide_vertical_argument_stays_tight() {
        let a = Enclosure::ratio(P, 1, 40);
        let r = Float::with_val(P, 1e-8);
        for t0 in [0.3, 2.0, 10.0, 55.0] {
            let t = Enclosure::point(P, t0).inflate(&r);
            let wide = gamma_abs_vertical(&a, &t).unwrap();
            let lo = gamma_abs_vertical(&a, &Enclosure::from_float(P, t.lo())).unwrap();
            let hi = gamma_abs_vertical(&a, &Enclosure::from_float(P, t.hi())).unwrap();
            assert!(lo.is_subset_of(&wide) && hi.is_subset_of(&wide), "t = {t0}");
            let limit = wide.mid() * 2.0f64 * (std::f64::consts::FRAC_PI_2 + 1.0 / t0) * 1e-8 * 1.01;
            assert!(wide.width() < limit, "t = {t0}");
        }
    }
}
