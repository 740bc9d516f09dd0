//! Exact construction and verification of group spherical spaces, Moufang
//! spherical spaces, composition algebras and their finite sphere loops over
//! ℤ, ℤ/n and ℚ.
//!
//! ```
//! use sphere::binary2d::BinaryForm;
//! use sphere::ring::Zmod;
//! use sphere::spherical::{IdentityId, Strategy};
//!
//! let form = BinaryForm::from_ints(Zmod::new(5).unwrap(), 1, 1, 2);
//! let alg = form.to_algebra();
//! let report = alg.verify(IdentityId::PA, &Strategy::ExhaustiveBasis).unwrap();
//! assert!(report.holds());
//! ```

pub mod binary2d;
pub mod cli;
pub mod constructions;
pub mod error;
pub mod io;
pub mod linalg;
pub mod loops;
pub mod moufang_double;
pub mod quadratic;
pub mod ring;
pub mod spherical;

pub use error::{Error, Result};
