//! Polarization toolkit for removing wrinkled transparent film from
//! industrial images.
//!
//! The pipeline runs desk-scale end to end: decode a polarization-mosaic
//! raw frame into four analyzer channels, derive Stokes parameters and the
//! highlight-minimizing location prior, and feed both into small trainable
//! reconstruction networks. A physically consistent simulator generates the
//! paired data, and an evaluation harness covers PSNR/SSIM, k-fold
//! cross-validation and ablation runs.
//!
//! Start with the runnable programs under `examples/`, one per capability.

pub mod error;
pub mod field;

pub use error::{Error, Result};
pub use field::Field;
