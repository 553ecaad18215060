//! Exact Bernoulli numbers.

use std::sync::OnceLock;

use rug::{Integer, Rational};

/// Largest index held in the table.
pub const MAX_INDEX: usize = 240;

static TABLE: OnceLock<Vec<Rational>> = OnceLock::new();

fn build() -> Vec<Rational> {
    // B_m = -1/(m+1) * sum_{k<m} C(m+1, k) B_k
    let mut b: Vec<Rational> = Vec::with_capacity(MAX_INDEX + 1);
    b.push(Rational::from(1));
    for m in 1..=MAX_INDEX {
        if m > 1 && m % 2 == 1 {
            b.push(Rational::new());
            continue;
        }
        let mut acc = Rational::new();
        let mut binom = Integer::from(1);
        for (k, bk) in b.iter().enumerate() {
            if k > 0 {
                binom *= (m + 1 - (k - 1)) as u32;
                binom /= k as u32;
            }
            if *bk != 0 {
                acc += Rational::from(&binom * bk);
            }
        }
        acc /= -((m + 1) as i64);
        b.push(acc);
    }
    b
}

/// `B_n` with the convention `B_1 = -1/2`. Panics above [`MAX_INDEX`].
pub fn bernoulli(n: usize) -> &'static Rational {
    assert!(n <= MAX_INDEX, "Bernoulli table holds indices up to {MAX_INDEX}");
    &TABLE.get_or_init(build)[n]
}

/// `ln |B_n|` as a double, for choosing truncation orders.
pub(crate) fn ln_abs_bernoulli(n: usize) -> f64 {
    let b = bernoulli(n);
    let num = b.numer().to_f64().abs().ln();
    let den = b.denom().to_f64().ln();
    if num.is_finite() && den.is_finite() {
        num - den
    } else {
        // fall back to Integer bit lengths for very large values
        let nb = b.numer().significant_bits() as f64;
        let db = b.denom().significant_bits() as f64;
        (nb - db) * std::f64::consts::LN_2
    }
}
