//! Certified numerics for the mod-4 Chebyshev bias.
//!
//! The crate locates and certifies zeros of `L(s, chi_4)` on the critical
//! line, encloses the Gamma sums over those zeros together with an explicit
//! tail bound, and decides for which exponents `alpha` the attenuated signed
//! prime sum is forced to `-inf` under GRH for `chi_4`.

pub mod admissibility;
pub mod cli;
pub mod empirical;
pub mod enclosure;
pub mod special;
pub mod zeros;
