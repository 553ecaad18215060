//! Bounds for sums over the zeros above `T1`.
//!
//! With `N(T) = (T / 2 pi) ln(2T / (pi e)) + Q(T)` and `|Q(T)| <= theta1 ln T`
//! for `T >= T1`, partial summation gives, for positive decreasing `phi`,
//!
//! ```text
//! sum_{gamma > T1} phi(gamma) <= (1 / 2 pi) int_T1^inf phi(t) ln(2t / pi) dt
//!                               + theta1 (2 phi(T1) ln T1 + int_T1^inf phi(t) / t dt).
//! ```

use crate::enclosure::Enclosure;

use super::AdmissibilityError;

type Result<T> = std::result::Result<T, AdmissibilityError>;

fn check_height(t1: f64) -> Result<()> {
    if !(t1.is_finite() && t1 > 1.0) {
        return Err(AdmissibilityError::Domain(format!("T1 = {t1} must exceed 1")));
    }
    Ok(())
}

/// `((C1 / 2) ln 4T1 + C2 / 2) / ln T1`, the smallest `theta1` with
/// `(C1 / 2) ln 4T + C2 / 2 <= theta1 ln T` for all `T >= T1`.
pub fn theta1(t1: f64, c1: f64, c2: f64, prec: u32) -> Result<Enclosure> {
    check_height(t1)?;
    if !(c1 >= 0.0 && c2 >= 0.0 && c1.is_finite() && c2.is_finite()) {
        return Err(AdmissibilityError::Domain("C1 and C2 must be non-negative".into()));
    }
    let t = Enclosure::point(prec, t1);
    let num = &(&Enclosure::point(prec, c1) * &t.mul_int(4).ln()?) + &Enclosure::point(prec, c2);
    Ok(num.div_int(2).div(&t.ln()?)?)
}

/// Upper bound for `2 sum_{gamma > T1} |Gamma(1/(2 alpha) + i gamma / alpha)|`.
///
/// Each summand is at most the closed-form majorant of
/// [`anderson_bound`](crate::special::anderson_bound), which for `t >= T1` is
/// at most `A exp(-c' (t - T1))` with
///
/// ```text
/// A  = sqrt(2 pi) (R / alpha)^e exp(alpha / (6R) - pi T1 / (2 alpha)),
/// R  = sqrt(T1^2 + 1/4),  e = 1/(2 alpha) - 1/2,
/// c' = pi / (2 alpha) - max(e, 0) / T1.
/// ```
///
/// Partial summation then gives
///
/// ```text
/// 2A [ (1 / (2 pi c')) (ln(2 T1 / pi) + 1 / (c' T1)) + theta1 (2 ln T1 + 1 / (c' T1)) ].
/// ```
///
/// When `alpha >= 1` and `2 alpha <= pi T1` this is at most
/// [`tail_closed_form`].
pub fn tail_bound(alpha: &Enclosure, t1: f64, theta1: &Enclosure) -> Result<Enclosure> {
    check_height(t1)?;
    if !alpha.is_positive() {
        return Err(AdmissibilityError::Domain("alpha must be positive".into()));
    }
    if theta1.lo() < &0 {
        return Err(AdmissibilityError::Domain("theta1 must be non-negative".into()));
    }
    let p = alpha.prec();
    let t = Enclosure::point(p, t1);
    let pi = Enclosure::pi(p);
    let c = pi.div(&alpha.mul_int(2))?;
    let e = &alpha.mul_int(2).recip()? - &Enclosure::ratio(p, 1, 2);
    let c_eff = if e.hi() > &0 {
        let e_pos = Enclosure::new(e.lo().clone().max(&rug::Float::new(p)), e.hi().clone())?;
        &c - &e_pos.div(&t)?
    } else {
        c.clone()
    };
    if !c_eff.is_positive() {
        return Err(AdmissibilityError::Domain(format!(
            "majorant is not decreasing beyond T1 = {t1} at this alpha"
        )));
    }
    let prefactor = prefactor(alpha, &t)?;
    let inv_ct = (&c_eff * &t).recip()?;
    let main = &(&t.mul_int(2).div(&pi)?.ln()? + &inv_ct) * &(&pi.mul_int(2) * &c_eff).recip()?;
    let err = theta1 * &(&t.ln()?.mul_int(2) + &inv_ct);
    Ok((&prefactor * &(&main + &err)).mul_int(2))
}

/// `sqrt(2 pi) (R / alpha)^e exp(alpha / (6R) - pi T1 / (2 alpha))`.
fn prefactor(alpha: &Enclosure, t: &Enclosure) -> Result<Enclosure> {
    let p = alpha.prec();
    let pi = Enclosure::pi(p);
    let r = (&t.sqr() + &Enclosure::ratio(p, 1, 4)).sqrt()?;
    let e = &alpha.mul_int(2).recip()? - &Enclosure::ratio(p, 1, 2);
    let power = r.div(alpha)?.pow(&e)?;
    let expo = &alpha.div(&r.mul_int(6))? - &(&pi * t).div(&alpha.mul_int(2))?;
    Ok(&(&pi.mul_int(2).sqrt()? * &power) * &expo.exp()?)
}

/// The tail bound in its compact form
///
/// ```text
/// 2A [ (alpha / pi^2) ln(2 T1 e / pi) + theta1 ln(T1^2 e) ],
/// ```
///
/// valid when `alpha >= 1` and `2 alpha <= pi T1`; `None` otherwise.
pub fn tail_closed_form(alpha: &Enclosure, t1: f64, theta1: &Enclosure) -> Result<Option<Enclosure>> {
    check_height(t1)?;
    let p = alpha.prec();
    let t = Enclosure::point(p, t1);
    let pi = Enclosure::pi(p);
    if alpha.lo() < &1 || alpha.mul_int(2).hi() > (&pi * &t).lo() {
        return Ok(None);
    }
    let one = Enclosure::one(p);
    let a = (&(&t.mul_int(2).div(&pi)?.ln()? + &one) * alpha).div(&pi.sqr())?;
    let b = theta1 * &(&t.ln()?.mul_int(2) + &one);
    Ok(Some((&prefactor(alpha, &t)? * &(&a + &b)).mul_int(2)))
}

/// Upper bound for `sum_{gamma > T1} gamma^-2`:
/// `(ln(2 T1 / pi) + 1) / (2 pi T1) + theta1 (2 ln T1 + 1/2) / T1^2`.
pub fn inverse_square_tail(t1: f64, theta1: &Enclosure) -> Result<Enclosure> {
    check_height(t1)?;
    let p = theta1.prec();
    let t = Enclosure::point(p, t1);
    let pi = Enclosure::pi(p);
    let main = (&t.mul_int(2).div(&pi)?.ln()? + &Enclosure::one(p)).div(&(&pi.mul_int(2) * &t))?;
    let err = (theta1 * &(&t.ln()?.mul_int(2) + &Enclosure::ratio(p, 1, 2))).div(&t.sqr())?;
    Ok(&main + &err)
}

#[cfg(test)]
#[allow(clippy::excessive_precision)]
mod tests {
    use super::*;
    use crate::special::anderson_bound;

    const P: u32 = 128;

    fn th(t1: f64) -> Enclosure {
        theta1(t1, 0.315, 6.445, P).unwrap()
    }

    #[test]
    fn theta1_values() {
        let t = th(1127.0);
        assert!((t.mid_f64() - 0.6471).abs() < 5e-5, "{t}");
        let ln = Enclosure::point(P, 1127.0).ln().unwrap();
        let lhs = &(&t * &ln) - &(&Enclosure::point(P, 0.1575) * &Enclosure::point(P, 4508.0).ln().unwrap());
        assert!((&lhs - &Enclosure::point(P, 3.2225)).contains_f64(0.0));
        assert!(theta1(1127.0, 0.0, 0.0, P).unwrap().contains_f64(0.0));
        assert!(theta1(1.0, 0.315, 6.445, P).is_err());
    }

    #[test]
    fn tail_at_knife_edge() {
        let a = Enclosure::parse(P, "20.40442").unwrap();
        let tail = tail_bound(&a, 1127.0, &th(1127.0)).unwrap();
        assert!(tail.is_positive());
        let closed = tail_closed_form(&a, 1127.0, &th(1127.0)).unwrap().unwrap();
        // mpmath: 3.9677469891315944367994069449e-37
        assert!((closed.mid_f64() / 3.9677469891315944e-37 - 1.0).abs() < 1e-14);
        assert!(tail.hi() <= closed.lo());
        // mpmath: 2 |Gamma(1/(2 alpha) + i gamma / alpha)| summed over the
        // zeros in (1127, 1240] is 2.1476864543702669e-37
        assert!(tail.lo() > &2.1476864543702669e-37);
    }

    #[test]
    fn tail_small_alpha_is_tiny_but_positive() {
        let t = tail_bound(&Enclosure::one(P), 1127.0, &th(1127.0)).unwrap();
        assert!(t.is_positive());
        assert!(t.hi() < &1e-300);
        let t = tail_bound(&Enclosure::point(P, 0.3), 1127.0, &th(1127.0)).unwrap();
        assert!(t.is_positive());
        assert!(tail_closed_form(&Enclosure::point(P, 0.3), 1127.0, &th(1127.0)).unwrap().is_none());
    }

    #[test]
    fn theta_term_counts() {
        let a = Enclosure::point(P, 10.0);
        let with = tail_bound(&a, 1127.0, &th(1127.0)).unwrap();
        let without = tail_bound(&a, 1127.0, &Enclosure::zero(P)).unwrap();
        assert!(with.lo() > without.hi());
    }

    #[test]
    fn tail_dominates_first_majorant() {
        // the first summand beyond T1 alone must not exceed the whole bound
        let a = Enclosure::point(P, 20.0);
        let t1 = 50.0;
        let tail = tail_bound(&a, t1, &th(t1)).unwrap();
        let one = anderson_bound(&a, &Enclosure::point(P, t1)).unwrap().mul_int(2);
        assert!(one.hi() < tail.lo());
    }

    #[test]
    fn inverse_square_tail_values() {
        let t = inverse_square_tail(1127.0, &th(1127.0)).unwrap();
        assert!(t.is_positive() && t.hi() < &2e-3);
        let t6 = inverse_square_tail(6.0, &th(6.0)).unwrap();
        assert!(t6.is_positive() && t6.hi().is_finite());
    }
}
