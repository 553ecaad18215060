//! The real rotation `Z(t)` of the completed `L(s, chi_4)` on the critical line.
//!
//! With `s = 1/2 + it`, the completed function
//! `(4/pi)^(s/2) Gamma((s+1)/2) 4^-s [zeta(s, 1/4) - zeta(s, 3/4)]` is real.
//! Dividing out the modulus of its prefactor leaves
//!
//! ```text
//! Z(t) = Re( e^(i phi(t)) (zeta(s, 1/4) - zeta(s, 3/4)) / 2 ),
//! phi(t) = (t/2) ln(4/pi) + Im ln Gamma(3/4 + it/2) - t ln 4,
//! ```
//!
//! a positive multiple of the completed value with the same sign and zeros,
//! and `Z(0) = L(1/2, chi_4)`.

use crate::enclosure::{ComplexEnclosure, Enclosure};
use crate::special::{hurwitz_zeta, log_gamma, EulerMaclaurinParams, StirlingParams};

use super::ZeroError;

/// Certified sign of `Z(t)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Positive,
    Negative,
}

fn phase(t: &Enclosure) -> Result<Enclosure, ZeroError> {
    let p = t.prec();
    let z = ComplexEnclosure::new(Enclosure::ratio(p, 3, 4), t.div_int(2));
    let lg = log_gamma(&z, &StirlingParams::for_precision(p))?;
    let four = Enclosure::from_int(p, 4);
    let ln_four = four.ln()?;
    let ln_four_over_pi = four.div(&Enclosure::pi(p))?.ln()?;
    Ok(&(&(t * &ln_four_over_pi).div_int(2) + &lg.im) - &(t * &ln_four))
}

/// `e^(i phi(t)) (zeta(s, 1/4) - zeta(s, 3/4)) / 2` before taking the real part.
/// Its imaginary part encloses zero.
pub fn rotated_l_complex(t: &Enclosure) -> Result<ComplexEnclosure, ZeroError> {
    if t.lo() < &0 {
        return Err(ZeroError::Domain("rotated_l needs t >= 0".into()));
    }
    let p = t.prec();
    let s = ComplexEnclosure::new(Enclosure::ratio(p, 1, 2), t.clone());
    let params = EulerMaclaurinParams::default();
    let z1 = hurwitz_zeta(&s, &Enclosure::ratio(p, 1, 4), &params)?;
    let z3 = hurwitz_zeta(&s, &Enclosure::ratio(p, 3, 4), &params)?;
    let diff = (&z1 - &z3).scale(&Enclosure::ratio(p, 1, 2));
    let (sin, cos) = phase(t)?.sin_cos();
    Ok(&ComplexEnclosure::new(cos, sin) * &diff)
}

/// Encloses `Z(t)`.
pub fn rotated_l(t: &Enclosure) -> Result<Enclosure, ZeroError> {
    Ok(rotated_l_complex(t)?.re)
}

/// The sign of `Z(t)`, or `Undecided` when the enclosure straddles zero.
pub fn rotated_sign(t: &Enclosure) -> Result<Sign, ZeroError> {
    let z = rotated_l(t)?;
    if z.is_positive() {
        Ok(Sign::Positive)
    } else if z.is_negative() {
        Ok(Sign::Negative)
    } else {
        Err(ZeroError::Undecided {
            lo: t.lo_f64(),
            hi: t.hi_f64(),
            detail: format!("Z(t) = {z:?} straddles zero"),
        })
    }
}
