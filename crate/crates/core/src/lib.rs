//! Exact computations with triple covers of the projective plane whose
//! branch curve is a sextic.

pub mod classify;
pub mod cover;
pub mod error;
pub mod etamap;
pub mod polyparse;
pub mod polyring;
pub mod torus;

pub use error::{Error, Result};
