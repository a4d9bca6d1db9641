//! Schur multipliers and second cohomology of finite groups, with a
//! verification lab for central products.

pub mod abelian;
pub mod catalog;
pub mod cohomology;
pub mod error;
pub mod group;
pub mod homology;
pub mod lab;
pub mod modular;
pub mod spec;
pub mod subgroup;

pub use error::{Error, Result};
