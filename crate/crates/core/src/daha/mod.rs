//! The polynomial representation of the degenerate double affine Hecke algebra.

pub mod ops;
pub mod params;
pub mod poly;
pub mod verify;

pub use ops::{
    apply_c, apply_d, apply_intertwiner, apply_t, apply_u, apply_weyl, apply_y, Action, Node, PerturbedRep, PolyRep,
    Sign, Weyl,
};
pub use params::ParamSet;
pub use poly::Poly;
pub use verify::{verify_action, verify_relations};
