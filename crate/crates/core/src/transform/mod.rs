//! Weights, bilinear forms and the polynomial Fourier transform pair.

pub mod forms;
pub mod checks;
pub mod pair;
pub mod spectral;
pub mod weights;

pub use forms::{bilinear_form, integrate_against_weight, weight_quad_options, FormMethod};
pub use pair::{even_part, forward_f, inverse_g, norm_ratio, SpectralTransform};
pub use spectral::{
    reflect_index_one, reflect_index_zero, spectral_action, spectral_index, spectral_point_value, FiniteSpectralFunction,
    Scale, ScaledPoly, SpectralOp,
};
pub use weights::{
    full_weight_product, inner_one_product, plus_weight_product, relative_weight_w, weight_delta, Variant, WeightTable,
};
pub use checks::{
    plancherel_check, plancherel_exact, symmetric_transform_suite, plancherel_numeric, quadrature_orthogonality, verify_transform, verify_transform_variant,
};
