//! Modelling and estimation for electromagnetic vector-sensor arrays.
//!
//! The crate covers the full chain from array response modelling to joint
//! 2-D direction-of-arrival + 2-D polarisation estimation:
//!
//! * [`array`] — steering vectors, polarisation vectors and joint (Kronecker)
//!   steering vectors for linear/planar arrays of tripoles or crossed-dipoles;
//! * [`signal`] — seeded snapshot simulation and sample/ideal covariance matrices;
//! * [`music`] — Hermitian eigendecomposition into signal/noise subspaces, the
//!   4-D MUSIC spectrum, the dimension-reduced 2-D DOA + 2-D polarisation
//!   estimators and grid peak search;
//! * [`crb`] — Fisher information and Cramér-Rao bounds for the unconditional
//!   (stochastic-signal) model;
//! * [`ambiguity`] — steering-vector parallelism analysis: the crossed-dipole
//!   parallel-partner construction, grid certification that a tripole array has
//!   no off-source parallel steering vector, and the linear-polarisation case
//!   taxonomy.
//!
//! Angles are radians everywhere inside the crate; degrees appear only at
//! external interfaces (grid axes, estimates, reports).

pub mod ambiguity;
pub mod array;
pub mod crb;
pub mod music;
pub mod signal;

mod error;

pub use error::{Error, Result};

/// Complex sample type used throughout.
pub type C64 = num_complex::Complex<f64>;
