//! Flat bands of periodic graph operators.
//!
//! A periodic graph is a finite quotient with offset-labelled edges
//! ([`graph::PeriodicGraph`]). From it the crate builds the Floquet symbol and
//! its characteristic polynomial exactly, decides which energies are flat
//! bands, synthesizes compactly supported eigenvectors, classifies single-cell
//! flat bands, builds graphs with or without flat bands, and studies how the
//! potential controls flatness.

pub mod bands;
pub mod catalog;
pub mod cli;
pub mod eigvec;
pub mod error;
pub mod finite;
pub mod floquet;
pub mod generators;
pub mod graph;
pub mod io;
pub mod perturbation;
pub mod screen;
pub mod singlecell;
pub mod symmetry;

pub use error::FlatBandError;
pub use floquet::{char_poly, detect_flat_bands, detect_flat_bands_with, floquet_symbol, CharPoly, DetectOptions, FlatBand, FlatBandReport, FloquetSymbol};
pub use graph::{EdgeSpec, Offset, PeriodicGraph, ValidationReport};
