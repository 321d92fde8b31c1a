//! Floating-point scalar abstraction.
//!
//! Every numerical kernel in this crate is generic over [`Scalar`], which is
//! implemented for `f32` and `f64`. Concrete aliases for the common `f64`
//! instantiations live at the crate root.

use std::fmt;

/// Floating-point scalar usable by mesh geometry, fields and solvers.
pub trait Scalar:
    num_traits::Float
    + num_traits::NumAssign
    + fmt::Debug
    + fmt::Display
    + fmt::LowerExp
    + Send
    + Sync
    + 'static
{
    /// Convert an `f64` constant into this scalar type.
    fn of(v: f64) -> Self {
        num_traits::NumCast::from(v).expect("constant not representable in scalar type")
    }

    /// Convert a count into this scalar type.
    fn of_usize(v: usize) -> Self {
        num_traits::NumCast::from(v).expect("count not representable in scalar type")
    }
}

impl Scalar for f32 {}
impl Scalar for f64 {}

/// Tiny positive sentinel guarding divisions by near-zero geometric lengths.
///
/// Underflows to 0 in `f32`, which keeps the `> ROOTVSMALL` guard meaningful
/// for both precisions.
pub const ROOTVSMALL: f64 = 1e-150;
