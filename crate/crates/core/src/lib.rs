//! SL₃-extensions of unimodular 2×2 matrices over exact commutative rings.
//!
//! A unimodular `A ∈ M₂(R)` is *extendable* when it is the upper-left block of some
//! `A⁺ ∈ SL₃(R)`, and *simply extendable* when `A⁺` can be chosen with `(3,3)` entry 0.
//!
//! ```
//! use sl3ext::extension::{simply_extend, DEFAULT_BOUND};
//! use sl3ext::{Mat2, Ring};
//!
//! let z = Ring::integers();
//! let a = Mat2::from_ints(&z, [[15, 6], [10, 14]]);
//! let out = simply_extend(&a, DEFAULT_BOUND).unwrap();
//! let ext = out.extension().unwrap();
//! assert_eq!(ext.det(), z.one());
//! assert_eq!(ext.theta(), a);
//! ```

pub mod arith;
pub mod classification;
pub mod enumeration;
pub mod error;
pub mod extension;
pub mod json;
pub mod lattice;
pub mod matrix;
pub mod ring;

pub use error::{Error, Result};
pub use extension::{extend, simply_extend, Certificate, ExtensionOutcome};
pub use matrix::{Mat2, Mat3};
pub use ring::{Elem, Ring, RingDescriptor};
