//! Space-building recipes: extended Minkowski planes, split null extensions,
//! polarized spaces, Clifford quaternions and the KD / ABCD doublings.

mod doubling;
mod extension;
mod quaternion;

pub use doubling::{abcd_double, kd_double, unarion, DoublingParams};
pub use extension::{
    check_ba, minkowski_extension, polarized_space, split_null_extension, RightModuleAction,
};
pub use quaternion::{clifford_quaternion, clifford_quaternion_algebra};

use crate::binary2d::BinaryForm;
use crate::error::Result;
use crate::linalg;
use crate::ring::Ring;
use crate::spherical::BinaryAlgebra;

/// The homotope of a binary form's canonical product at `e₁`.
pub fn binarion<R: Ring>(form: &BinaryForm<R>) -> Result<BinaryAlgebra<R>> {
    let e = linalg::basis_vec(&form.ring, 2, 0);
    Ok(form
        .to_algebra()
        .homotope(&e)?
        .with_label(format!(
            "binarion({},{},{})",
            form.ring.format_elem(&form.alpha),
            form.ring.format_elem(&form.beta),
            form.ring.format_elem(&form.gamma)
        )))
}
