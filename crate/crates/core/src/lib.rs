//! Pin lifting criteria, twisted characters and Stiefel-Whitney classes for
//! orthogonal representations of O(n), SO(n), GL(n,R) and compact G0 x| C2.

pub mod error;
pub mod folding;
pub mod rational;
pub mod repcalc;
pub mod rootsys;
pub mod spincheck;
pub mod swclass;
pub mod validate;

pub use error::{Error, Result};
pub use rational::{Q, QVec};
