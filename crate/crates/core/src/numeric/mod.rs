//! Exact and high-precision numerical building blocks.

pub mod gamma;
pub mod gamma_product;
pub mod hp;
pub mod hyper;
pub mod quad;

pub use gamma::{gamma, gamma_shift_ratio, log_gamma, pochhammer, pochhammer_hp, rgamma};
pub use gamma_product::GammaProduct;
pub use hp::{working_bits, HpComplex};
pub use hyper::{hyp_pfq_unit, hyp_pfq_unit_exact, hyp_pfq_unit_with, SeriesOptions, SeriesResult};
pub use quad::{quad_imaginary_axis, quad_imaginary_axis_multi, QuadOptions, QuadResult};
pub use rug::Rational;

/// Parses "p/q" or an integer into an exact rational.
pub fn parse_rational(s: &str) -> crate::error::Result<Rational> {
    let t = s.trim();
    t.parse::<Rational>()
        .map_err(|e| crate::error::Error::Parse(format!("'{t}' is not a rational: {e}")))
}

/// Formats a rational as "p/q" (or "p" for integers).
pub fn format_rational(q: &Rational) -> String {
    q.to_string()
}
