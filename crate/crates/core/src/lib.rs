//! Exact enumeration and numerical identity checks for the three-coloring model and the
//! six-vertex model with domain wall boundary conditions.

pub mod color;
pub mod coloring;
pub mod error;
pub mod numeric;
pub mod report;
pub mod rng;
pub mod sixvertex;
pub mod spectral;
pub mod theta;
pub mod verify;
pub mod ybe;

pub use color::Color;
pub use error::{Error, Result};
pub use spectral::{Side, Sign, SpectralAssignment};
pub use theta::{EllipticParams, SeriesConfig};
