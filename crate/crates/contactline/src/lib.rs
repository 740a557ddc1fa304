//! One-dimensional quantum point interactions with a U(2) parameter space.
//!
//! A single contact interaction at the origin of a line is fixed by a 2x2
//! unitary matrix. This crate provides the algebra of that parameter space
//! (transfer-matrix and eigenvalue/axis charts, the strong/weak coupling
//! duality map), stationary scattering for distinguishable and identical
//! particles, and box spectra together with spectral-flow tracking around
//! loops of interaction parameters. A small CLI (`contactline`) exposes the
//! same operations as CSV/JSON/SVG emitters.

pub mod mat2;
pub mod u2_algebra;
pub mod scattering;
mod roots;
pub mod spectral;
pub mod cli;
