//! Non-symmetric Wilson polynomials and their identities.

pub mod checks;
pub mod family;
pub mod identities;

pub use checks::{verify_family, verify_polynomials};
pub use family::{
    evaluation_at_minus_x0, gamma_val, neg_label, neg_one_minus_label, nonsymmetric_wilson,
    nonsymmetric_wilson_rodriguez, renormalized_e, spectral_point, symmetric_p, symmetric_value_at_x0,
    t1_coefficient_b, SpectralPoint, WilsonFamily,
};
pub use identities::{
    apply_l_difference, apply_l_explicit, check_dual_variable_action, check_duality, check_recurrence,
    check_weyl_character, symmetric_e_4f3, symmetric_e_4f3_hp, symmetric_e_4f3_poly, DualPair,
};
