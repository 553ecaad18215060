//! Closed real intervals with outward-rounded endpoints.
//!
//! Every [`Enclosure`] holds two MPFR floats `lo <= hi` and every operation
//! returns an interval containing the exact image of its inputs. Lower
//! endpoints are always rounded toward `-inf`, upper endpoints toward `+inf`.
//! Transcendentals either evaluate a monotone function at both endpoints with
//! directed rounding, or (for `sin`/`cos`) use a midpoint-radius form with the
//! Lipschitz constant 1.
//!
//! Endpoints are finite by construction. Operations that could leave the
//! finite reals (division through zero, `ln` of a non-positive number, an
//! overflowing `exp`) return an [`EnclosureError`] instead.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use rug::float::{Constant, Round};
use rug::ops::AssignRound;
use rug::{Float, Rational};

/// Default working precision in bits.
pub const DEFAULT_PRECISION: u32 = 128;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum EnclosureError {
    #[error("division by an enclosure containing zero")]
    DivisionByZeroInterval,
    #[error("{op}: argument outside the domain ({detail})")]
    Domain { op: &'static str, detail: String },
    #[error("{0} produced a non-finite endpoint")]
    NonFinite(&'static str),
    #[error("lower endpoint exceeds upper endpoint")]
    Inverted,
    #[error("cannot parse {0:?} as a decimal number")]
    Parse(String),
}

type Result<T> = std::result::Result<T, EnclosureError>;

/// Outcome of comparing two enclosures.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Comparison {
    CertainlyLess,
    CertainlyGreater,
    Undecided,
}

impl Comparison {
    pub fn reversed(self) -> Self {
        match self {
            Comparison::CertainlyLess => Comparison::CertainlyGreater,
            Comparison::CertainlyGreater => Comparison::CertainlyLess,
            Comparison::Undecided => Comparison::Undecided,
        }
    }
}

/// Binary operations accepted by [`arith`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// Elementary functions accepted by [`elem`].
#[derive(Debug, Clone, PartialEq)]
pub enum ElemFn {
    Exp,
    Ln,
    Sqrt,
    Pow(Enclosure),
    Atan,
    Cosh,
    Sin,
    Cos,
}

pub fn arith(a: &Enclosure, b: &Enclosure, op: ArithOp) -> Result<Enclosure> {
    match op {
        ArithOp::Add => Ok(a + b),
        ArithOp::Sub => Ok(a - b),
        ArithOp::Mul => Ok(a * b),
        ArithOp::Div => a.div(b),
    }
}

pub fn elem(a: &Enclosure, f: &ElemFn) -> Result<Enclosure> {
    match f {
        ElemFn::Exp => a.exp(),
        ElemFn::Ln => a.ln(),
        ElemFn::Sqrt => a.sqrt(),
        ElemFn::Pow(e) => a.pow(e),
        ElemFn::Atan => Ok(a.atan()),
        ElemFn::Cosh => a.cosh(),
        ElemFn::Sin => Ok(a.sin()),
        ElemFn::Cos => Ok(a.cos()),
    }
}

/// `CertainlyLess` iff `a.hi < b.lo`, `CertainlyGreater` iff `a.lo > b.hi`.
pub fn compare(a: &Enclosure, b: &Enclosure) -> Comparison {
    a.compare(b)
}

/// `digits` significant decimals of `x` rounded in direction `round`, in
/// positional notation unless the exponent is far from zero.
pub fn decimal_string(x: &Float, digits: usize, round: Round) -> String {
    if !x.is_finite() {
        return x.to_string();
    }
    if x.is_zero() {
        return "0".into();
    }
    let (neg, mut s, exp) = x.to_sign_string_exp_round(10, Some(digits), round);
    let exp = exp.unwrap_or(0);
    let body = if !(-6..=30).contains(&exp) {
        let (head, tail) = s.split_at(1);
        let tail = tail.trim_end_matches('0');
        let mant = if tail.is_empty() { head.to_string() } else { format!("{head}.{tail}") };
        format!("{mant}e{}", exp - 1)
    } else if exp <= 0 {
        format!("0.{}{}", "0".repeat((-exp) as usize), s)
    } else if exp as usize >= s.len() {
        s.push_str(&"0".repeat(exp as usize - s.len()));
        s
    } else {
        s.insert(exp as usize, '.');
        s
    };
    if neg {
        format!("-{body}")
    } else {
        body
    }
}

fn rounded<T>(prec: u32, val: T, round: Round) -> Float
where
    Float: AssignRound<T, Round = Round, Ordering = Ordering>,
{
    Float::with_val_round(prec, val, round).0
}

fn apply(x: &Float, prec: u32, round: Round, f: impl FnOnce(&mut Float, Round) -> Ordering) -> Float {
    // copy exactly, then let MPFR round the result to `prec`
    let mut y = Float::with_val(x.prec().max(prec), x);
    f(&mut y, round);
    if y.prec() != prec {
        y.set_prec_round(prec, round);
    }
    y
}

fn min_of(mut xs: Vec<Float>) -> Float {
    let mut best = xs.pop().expect("non-empty");
    for x in xs {
        if x < best {
            best = x;
        }
    }
    best
}

fn max_of(mut xs: Vec<Float>) -> Float {
    let mut best = xs.pop().expect("non-empty");
    for x in xs {
        if x > best {
            best = x;
        }
    }
    best
}

/// A closed interval `[lo, hi]` guaranteed to contain some exact real.
#[derive(Clone, PartialEq)]
pub struct Enclosure {
    lo: Float,
    hi: Float,
}

impl fmt::Debug for Enclosure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo_string(20), self.hi_string(20))
    }
}

impl fmt::Display for Enclosure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo_string(20), self.hi_string(20))
    }
}

impl Enclosure {
    pub fn new(lo: Float, hi: Float) -> Result<Self> {
        if !lo.is_finite() || !hi.is_finite() {
            return Err(EnclosureError::NonFinite("Enclosure::new"));
        }
        if lo > hi {
            return Err(EnclosureError::Inverted);
        }
        Ok(Self { lo, hi })
    }

    fn checked(lo: Float, hi: Float, op: &'static str) -> Result<Self> {
        if !lo.is_finite() || !hi.is_finite() {
            return Err(EnclosureError::NonFinite(op));
        }
        debug_assert!(lo <= hi, "{op} inverted an enclosure");
        Ok(Self { lo, hi })
    }

    /// The degenerate interval `[x, x]`, widened outward if `prec < 53`.
    ///
    /// Panics on non-finite `x`.
    pub fn point(prec: u32, x: f64) -> Self {
        assert!(x.is_finite(), "Enclosure::point needs a finite value");
        Self {
            lo: rounded(prec, x, Round::Down),
            hi: rounded(prec, x, Round::Up),
        }
    }

    pub fn from_f64(prec: u32, lo: f64, hi: f64) -> Result<Self> {
        if !lo.is_finite() || !hi.is_finite() {
            return Err(EnclosureError::NonFinite("Enclosure::from_f64"));
        }
        Self::new(rounded(prec, lo, Round::Down), rounded(prec, hi, Round::Up))
    }

    pub fn from_int(prec: u32, n: i64) -> Self {
        Self {
            lo: rounded(prec, n, Round::Down),
            hi: rounded(prec, n, Round::Up),
        }
    }

    /// Outward rounding of an arbitrary-precision float to `prec` bits.
    pub fn from_float(prec: u32, x: &Float) -> Self {
        assert!(x.is_finite(), "Enclosure::from_float needs a finite value");
        Self {
            lo: rounded(prec, x, Round::Down),
            hi: rounded(prec, x, Round::Up),
        }
    }

    pub fn from_rational(prec: u32, q: &Rational) -> Self {
        Self {
            lo: rounded(prec, q, Round::Down),
            hi: rounded(prec, q, Round::Up),
        }
    }

    pub fn ratio(prec: u32, num: i64, den: i64) -> Self {
        Self::from_rational(prec, &Rational::from((num, den)))
    }

    /// Encloses the exact value of a decimal literal such as `"20.40442"`.
    pub fn parse(prec: u32, s: &str) -> Result<Self> {
        let parsed = Float::parse(s.trim()).map_err(|_| EnclosureError::Parse(s.to_owned()))?;
        let lo = rounded(prec, parsed, Round::Down);
        let parsed = Float::parse(s.trim()).map_err(|_| EnclosureError::Parse(s.to_owned()))?;
        let hi = rounded(prec, parsed, Round::Up);
        Self::new(lo, hi)
    }

    pub fn zero(prec: u32) -> Self {
        Self::from_int(prec, 0)
    }

    pub fn one(prec: u32) -> Self {
        Self::from_int(prec, 1)
    }

    pub fn pi(prec: u32) -> Self {
        Self {
            lo: rounded(prec, Constant::Pi, Round::Down),
            hi: rounded(prec, Constant::Pi, Round::Up),
        }
    }

    pub fn lo(&self) -> &Float {
        &self.lo
    }

    pub fn hi(&self) -> &Float {
        &self.hi
    }

    pub fn prec(&self) -> u32 {
        self.lo.prec().max(self.hi.prec())
    }

    fn prec_with(&self, other: &Self) -> u32 {
        self.prec().max(other.prec())
    }

    /// Upper bound on `hi - lo`.
    pub fn width(&self) -> Float {
        rounded(self.prec(), &self.hi - &self.lo, Round::Up)
    }

    pub fn mid(&self) -> Float {
        let p = self.prec();
        let mut m = rounded(p + 1, &self.lo + &self.hi, Round::Nearest);
        m /= 2;
        m.set_prec_round(p, Round::Nearest);
        m
    }

    pub fn mid_f64(&self) -> f64 {
        self.mid().to_f64()
    }

    /// Returns `(m, r)` with `[lo, hi] ⊆ [m - r, m + r]`.
    pub fn mid_rad(&self) -> (Float, Float) {
        let p = self.prec();
        let m = self.mid();
        let a = rounded(p, &self.hi - &m, Round::Up);
        let b = rounded(p, &m - &self.lo, Round::Up);
        (m, if a > b { a } else { b })
    }

    pub fn lo_f64(&self) -> f64 {
        self.lo.to_f64_round(Round::Down)
    }

    pub fn hi_f64(&self) -> f64 {
        self.hi.to_f64_round(Round::Up)
    }

    /// Lower endpoint printed with `digits` significant decimals, rounded down.
    pub fn lo_string(&self, digits: usize) -> String {
        decimal_string(&self.lo, digits, Round::Down)
    }

    /// Upper endpoint printed with `digits` significant decimals, rounded up.
    pub fn hi_string(&self, digits: usize) -> String {
        decimal_string(&self.hi, digits, Round::Up)
    }

    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }

    pub fn contains(&self, x: &Float) -> bool {
        self.lo <= *x && *x <= self.hi
    }

    pub fn contains_f64(&self, x: f64) -> bool {
        self.lo <= x && self.hi >= x
    }

    pub fn contains_zero(&self) -> bool {
        self.lo <= 0 && self.hi >= 0
    }

    pub fn is_subset_of(&self, other: &Self) -> bool {
        other.lo <= self.lo && self.hi <= other.hi
    }

    pub fn overlaps(&self, other: &Self) -> bool {
        self.lo <= other.hi && other.lo <= self.hi
    }

    pub fn is_positive(&self) -> bool {
        self.lo > 0
    }

    pub fn is_negative(&self) -> bool {
        self.hi < 0
    }

    pub fn compare(&self, other: &Self) -> Comparison {
        if self.hi < other.lo {
            Comparison::CertainlyLess
        } else if self.lo > other.hi {
            Comparison::CertainlyGreater
        } else {
            Comparison::Undecided
        }
    }

    pub fn hull(&self, other: &Self) -> Self {
        let p = self.prec_with(other);
        let lo = if self.lo < other.lo { &self.lo } else { &other.lo };
        let hi = if self.hi > other.hi { &self.hi } else { &other.hi };
        Self {
            lo: rounded(p, lo, Round::Down),
            hi: rounded(p, hi, Round::Up),
        }
    }

    /// `[lo - r, hi + r]` for a non-negative radius `r`.
    pub fn inflate(&self, r: &Float) -> Self {
        debug_assert!(*r >= 0);
        let p = self.prec();
        Self {
            lo: rounded(p, &self.lo - r, Round::Down),
            hi: rounded(p, &self.hi + r, Round::Up),
        }
    }

    /// The symmetric interval `[-r, r]`.
    pub fn symmetric(prec: u32, r: &Float) -> Self {
        let r = rounded(prec, r, Round::Up).abs();
        Self { lo: -r.clone(), hi: r }
    }

    /// Upper bound on `|x|` over the interval.
    pub fn mag(&self) -> Float {
        let a = Float::with_val(self.lo.prec(), self.lo.abs_ref());
        let b = Float::with_val(self.hi.prec(), self.hi.abs_ref());
        if a > b {
            a
        } else {
            b
        }
    }

    /// Lower bound on `|x|` over the interval.
    pub fn mig(&self) -> Float {
        if self.contains_zero() {
            Float::new(self.prec())
        } else {
            let a = Float::with_val(self.lo.prec(), self.lo.abs_ref());
            let b = Float::with_val(self.hi.prec(), self.hi.abs_ref());
            if a < b {
                a
            } else {
                b
            }
        }
    }

    pub fn abs(&self) -> Self {
        if self.lo >= 0 {
            self.clone()
        } else if self.hi <= 0 {
            -self
        } else {
            Self {
                lo: Float::new(self.prec()),
                hi: self.mag(),
            }
        }
    }

    pub fn sqr(&self) -> Self {
        let p = self.prec();
        let a = self.abs();
        Self {
            lo: rounded(p, a.lo.square_ref(), Round::Down),
            hi: rounded(p, a.hi.square_ref(), Round::Up),
        }
    }

    pub fn recip(&self) -> Result<Self> {
        if self.contains_zero() {
            return Err(EnclosureError::DivisionByZeroInterval);
        }
        let p = self.prec();
        Self::checked(
            rounded(p, 1 / &self.hi, Round::Down),
            rounded(p, 1 / &self.lo, Round::Up),
            "recip",
        )
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        if other.contains_zero() {
            return Err(EnclosureError::DivisionByZeroInterval);
        }
        let p = self.prec_with(other);
        let pairs = [
            (&self.lo, &other.lo),
            (&self.lo, &other.hi),
            (&self.hi, &other.lo),
            (&self.hi, &other.hi),
        ];
        let lo = min_of(pairs.iter().map(|(a, b)| rounded(p, *a / *b, Round::Down)).collect());
        let hi = max_of(pairs.iter().map(|(a, b)| rounded(p, *a / *b, Round::Up)).collect());
        Self::checked(lo, hi, "div")
    }

    pub fn mul_int(&self, n: i64) -> Self {
        self * &Self::from_int(self.prec(), n)
    }

    pub fn div_int(&self, n: i64) -> Self {
        assert!(n != 0, "division by integer zero");
        let p = self.prec();
        let (lo, hi) = if n > 0 { (&self.lo, &self.hi) } else { (&self.hi, &self.lo) };
        Self {
            lo: rounded(p, lo / n, Round::Down),
            hi: rounded(p, hi / n, Round::Up),
        }
    }

    pub fn add_int(&self, n: i64) -> Self {
        let p = self.prec();
        Self {
            lo: rounded(p, &self.lo + n, Round::Down),
            hi: rounded(p, &self.hi + n, Round::Up),
        }
    }

    pub fn exp(&self) -> Result<Self> {
        let p = self.prec();
        Self::checked(
            apply(&self.lo, p, Round::Down, |x, r| x.exp_round(r)),
            apply(&self.hi, p, Round::Up, |x, r| x.exp_round(r)),
            "exp",
        )
    }

    pub fn ln(&self) -> Result<Self> {
        if self.lo <= 0 {
            return Err(EnclosureError::Domain {
                op: "ln",
                detail: format!("lower endpoint {} is not positive", self.lo_string(10)),
            });
        }
        let p = self.prec();
        Self::checked(
            apply(&self.lo, p, Round::Down, |x, r| x.ln_round(r)),
            apply(&self.hi, p, Round::Up, |x, r| x.ln_round(r)),
            "ln",
        )
    }

    pub fn sqrt(&self) -> Result<Self> {
        if self.lo < 0 {
            return Err(EnclosureError::Domain {
                op: "sqrt",
                detail: format!("lower endpoint {} is negative", self.lo_string(10)),
            });
        }
        let p = self.prec();
        Self::checked(
            apply(&self.lo, p, Round::Down, |x, r| x.sqrt_round(r)),
            apply(&self.hi, p, Round::Up, |x, r| x.sqrt_round(r)),
            "sqrt",
        )
    }

    /// `self^e` for a positive base, via `exp(e ln self)`. A degenerate
    /// integer exponent also accepts bases touching zero or negative values.
    pub fn pow(&self, e: &Self) -> Result<Self> {
        if self.lo > 0 {
            return (e * &self.ln()?).exp();
        }
        if e.is_point() && e.lo.is_integer() {
            if let Some(n) = e.lo.to_i32_saturating().filter(|n| n.unsigned_abs() < 1 << 20) {
                return self.powi(n);
            }
        }
        Err(EnclosureError::Domain {
            op: "pow",
            detail: "non-integer exponent needs a positive base".into(),
        })
    }

    pub fn powi(&self, n: i32) -> Result<Self> {
        if n < 0 {
            return self.powi(-n)?.recip();
        }
        let mut result = Self::one(self.prec());
        let mut base = self.clone();
        let mut k = n as u32;
        // squaring keeps even powers non-negative
        while k > 0 {
            if k & 1 == 1 {
                result = &result * &base;
            }
            k >>= 1;
            if k > 0 {
                base = base.sqr();
            }
        }
        Ok(result)
    }

    pub fn atan(&self) -> Self {
        let p = self.prec();
        Self {
            lo: apply(&self.lo, p, Round::Down, |x, r| x.atan_round(r)),
            hi: apply(&self.hi, p, Round::Up, |x, r| x.atan_round(r)),
        }
    }

    pub fn cosh(&self) -> Result<Self> {
        let p = self.prec();
        let cosh = |x: &Float, r| apply(x, p, r, |y, r| y.cosh_round(r));
        let (lo, hi) = if self.contains_zero() {
            (Float::with_val(p, 1), cosh(&self.mag(), Round::Up))
        } else if self.lo > 0 {
            (cosh(&self.lo, Round::Down), cosh(&self.hi, Round::Up))
        } else {
            (cosh(&self.hi, Round::Down), cosh(&self.lo, Round::Up))
        };
        Self::checked(lo, hi, "cosh")
    }

    /// Encloses `(sin x, cos x)` from the midpoint value and the radius.
    pub fn sin_cos(&self) -> (Self, Self) {
        let p = self.prec();
        let (m, r) = self.mid_rad();
        let unit = Self {
            lo: Float::with_val(p, -1),
            hi: Float::with_val(p, 1),
        };
        if r >= 3 {
            return (unit.clone(), unit);
        }
        let mut s_lo = m.clone();
        let mut c_lo = Float::new(p);
        s_lo.sin_cos_round(&mut c_lo, Round::Down);
        let mut s_hi = m;
        let mut c_hi = Float::new(p);
        s_hi.sin_cos_round(&mut c_hi, Round::Up);
        let clamp = |lo: Float, hi: Float| {
            let lo = rounded(p, lo - &r, Round::Down);
            let hi = rounded(p, hi + &r, Round::Up);
            Self {
                lo: if lo < -1 { Float::with_val(p, -1) } else { lo },
                hi: if hi > 1 { Float::with_val(p, 1) } else { hi },
            }
        };
        (clamp(s_lo, s_hi), clamp(c_lo, c_hi))
    }

    pub fn sin(&self) -> Self {
        self.sin_cos().0
    }

    pub fn cos(&self) -> Self {
        self.sin_cos().1
    }
}

impl Neg for &Enclosure {
    type Output = Enclosure;
    fn neg(self) -> Enclosure {
        Enclosure {
            lo: Float::with_val(self.hi.prec(), -&self.hi),
            hi: Float::with_val(self.lo.prec(), -&self.lo),
        }
    }
}

impl Neg for Enclosure {
    type Output = Enclosure;
    fn neg(self) -> Enclosure {
        Enclosure {
            lo: -self.hi,
            hi: -self.lo,
        }
    }
}

impl Add for &Enclosure {
    type Output = Enclosure;
    fn add(self, other: &Enclosure) -> Enclosure {
        let p = self.prec_with(other);
        Enclosure {
            lo: rounded(p, &self.lo + &other.lo, Round::Down),
            hi: rounded(p, &self.hi + &other.hi, Round::Up),
        }
    }
}

impl Sub for &Enclosure {
    type Output = Enclosure;
    fn sub(self, other: &Enclosure) -> Enclosure {
        let p = self.prec_with(other);
        Enclosure {
            lo: rounded(p, &self.lo - &other.hi, Round::Down),
            hi: rounded(p, &self.hi - &other.lo, Round::Up),
        }
    }
}

impl Mul for &Enclosure {
    type Output = Enclosure;
    fn mul(self, other: &Enclosure) -> Enclosure {
        let p = self.prec_with(other);
        if self.lo >= 0 && other.lo >= 0 {
            return Enclosure {
                lo: rounded(p, &self.lo * &other.lo, Round::Down),
                hi: rounded(p, &self.hi * &other.hi, Round::Up),
            };
        }
        let pairs = [
            (&self.lo, &other.lo),
            (&self.lo, &other.hi),
            (&self.hi, &other.lo),
            (&self.hi, &other.hi),
        ];
        Enclosure {
            lo: min_of(pairs.iter().map(|(a, b)| rounded(p, *a * *b, Round::Down)).collect()),
            hi: max_of(pairs.iter().map(|(a, b)| rounded(p, *a * *b, Round::Up)).collect()),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr for Enclosure {
            type Output = Enclosure;
            fn $method(self, other: Enclosure) -> Enclosure {
                (&self).$method(&other)
            }
        }
        impl $tr<&Enclosure> for Enclosure {
            type Output = Enclosure;
            fn $method(self, other: &Enclosure) -> Enclosure {
                (&self).$method(other)
            }
        }
        impl $tr<Enclosure> for &Enclosure {
            type Output = Enclosure;
            fn $method(self, other: Enclosure) -> Enclosure {
                self.$method(&other)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

/// A complex number enclosed by a rectangle.
#[derive(Clone, PartialEq, Debug)]
pub struct ComplexEnclosure {
    pub re: Enclosure,
    pub im: Enclosure,
}

impl ComplexEnclosure {
    pub fn new(re: Enclosure, im: Enclosure) -> Self {
        Self { re, im }
    }

    pub fn real(re: Enclosure) -> Self {
        let p = re.prec();
        Self { re, im: Enclosure::zero(p) }
    }

    pub fn from_f64(prec: u32, re: f64, im: f64) -> Self {
        Self {
            re: Enclosure::point(prec, re),
            im: Enclosure::point(prec, im),
        }
    }

    pub fn prec(&self) -> u32 {
        self.re.prec().max(self.im.prec())
    }

    pub fn conj(&self) -> Self {
        Self {
            re: self.re.clone(),
            im: -&self.im,
        }
    }

    pub fn scale(&self, k: &Enclosure) -> Self {
        Self {
            re: &self.re * k,
            im: &self.im * k,
        }
    }

    pub fn add_real(&self, x: &Enclosure) -> Self {
        Self {
            re: &self.re + x,
            im: self.im.clone(),
        }
    }

    /// `|z|^2`.
    pub fn norm_sqr(&self) -> Enclosure {
        &self.re.sqr() + &self.im.sqr()
    }

    pub fn abs(&self) -> Result<Enclosure> {
        self.norm_sqr().sqrt()
    }

    pub fn recip(&self) -> Result<Self> {
        let n = self.norm_sqr();
        Ok(Self {
            re: self.re.div(&n)?,
            im: (-&self.im).div(&n)?,
        })
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        Ok(self * &other.recip()?)
    }

    /// `exp(z) = e^re (cos im + i sin im)`.
    pub fn exp(&self) -> Result<Self> {
        let m = self.re.exp()?;
        let (s, c) = self.im.sin_cos();
        Ok(Self { re: &m * &c, im: &m * &s })
    }

    /// An enclosure of `arg z`. This is the principal value unless the
    /// rectangle lies in the left half-plane across the negative real axis,
    /// where values near `pi` are returned instead.
    pub fn arg(&self) -> Result<Enclosure> {
        let p = self.prec();
        let half_pi = Enclosure::pi(p).div_int(2);
        if self.re.is_positive() {
            Ok(self.im.div(&self.re)?.atan())
        } else if self.im.is_positive() {
            Ok(&half_pi - &self.re.div(&self.im)?.atan())
        } else if self.im.is_negative() {
            Ok(-(&half_pi + &self.re.div(&self.im)?.atan()))
        } else if self.re.is_negative() {
            Ok(&Enclosure::pi(p) + &self.im.div(&self.re)?.atan())
        } else {
            Err(EnclosureError::Domain {
                op: "arg",
                detail: "rectangle contains the origin".into(),
            })
        }
    }

    /// `ln|z| + i arg z` with the branch choice of [`ComplexEnclosure::arg`].
    pub fn ln(&self) -> Result<Self> {
        let re = self.norm_sqr().ln()?.div_int(2);
        Ok(Self { re, im: self.arg()? })
    }

    pub fn contains(&self, re: &Float, im: &Float) -> bool {
        self.re.contains(re) && self.im.contains(im)
    }
}

impl Add for &ComplexEnclosure {
    type Output = ComplexEnclosure;
    fn add(self, other: &ComplexEnclosure) -> ComplexEnclosure {
        ComplexEnclosure {
            re: &self.re + &other.re,
            im: &self.im + &other.im,
        }
    }
}

impl Sub for &ComplexEnclosure {
    type Output = ComplexEnclosure;
    fn sub(self, other: &ComplexEnclosure) -> ComplexEnclosure {
        ComplexEnclosure {
            re: &self.re - &other.re,
            im: &self.im - &other.im,
        }
    }
}

impl Mul for &ComplexEnclosure {
    type Output = ComplexEnclosure;
    fn mul(self, other: &ComplexEnclosure) -> ComplexEnclosure {
        ComplexEnclosure {
            re: &(&self.re * &other.re) - &(&self.im * &other.im),
            im: &(&self.re * &other.im) + &(&self.im * &other.re),
        }
    }
}

impl Neg for &ComplexEnclosure {
    type Output = ComplexEnclosure;
    fn neg(self) -> ComplexEnclosure {
        ComplexEnclosure {
            re: -&self.re,
            im: -&self.im,
        }
    }
}
