//! Exact apolarity toolkit.
//!
//! Computes Macaulay dual generators of Artinian reductions of projective
//! varieties, decides whether the resulting forms are Fermat up to a change
//! of coordinates, builds example varieties (Veronese images, complete
//! intersections, rational normal scrolls and divisors on them) and does the
//! integer divisor-class arithmetic of rational normal scrolls.
//!
//! Everything is exact: coefficients are arbitrary-precision rationals and
//! linear algebra is fraction-free.

pub mod apolar;
pub mod artinian;
pub mod cli;
pub mod error;
pub mod geomzoo;
pub mod gradedideal;
pub mod linalg;
pub mod mpoly;
pub mod scrollcalc;

pub use error::{Error, Result};
