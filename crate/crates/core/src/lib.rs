//! Analysis of groups generated by two positive multi-twists.
//!
//! The input is the intersection pattern of two multi-curves `A` and `B`
//! (a bipartite configuration graph, optionally with an embedding). From it
//! the crate computes the spectral radius `mu` that determines the affine
//! representation, classifies the graph into recessive / critical / dominant
//! families, evaluates words in the two parabolic generators, and cross-checks
//! the answers against the Coxeter-group, homology and Penner-track pictures.

#![allow(clippy::needless_range_loop)]

pub mod classify;
pub mod config;
pub mod coxeter;
pub mod error;
pub mod fixtures;
pub mod flatstruct;
pub mod fuchsian;
pub mod numthy;
pub mod penner;
pub mod spectral;
pub mod sweep;

pub use config::{ConfigurationGraph, Curve, EmbeddedConfiguration, IntersectionMatrix};
pub use error::{Error, Result};
pub use numthy::IntPolynomial;
