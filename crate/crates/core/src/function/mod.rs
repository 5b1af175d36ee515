//! The Gaussian, the Wilson function and the non-polynomial Fourier transform.

pub mod gaussian;
pub mod phi;
pub mod frak;
pub mod integrals;
pub mod checks;

pub use checks::verify_wilson_function;
pub use frak::{calf_plus_exact, calf_transform, symmetric_calf_plus, ChiGenerator, FrakMethod, FrakTransform, GaussianPoly};
pub use gaussian::{gaussian_g, GaussianSpec, MeromorphicValue, Twist};
pub use integrals::KernelQuad;
pub use phi::{kernel_e_frak, phi_lambda, wilson_function_e, wilson_function_e_plus};
