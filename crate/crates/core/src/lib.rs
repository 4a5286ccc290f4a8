//! Exact solvers and verifiers for orthogonal fold & cut and its companion
//! problems.
//!
//! Fold a rectangle flat using only creases parallel to its edges, then make
//! one straight cut: which sets of marked segments can be severed exactly?
//! This crate decides that question — and the simpler 1D point, 1D signed,
//! 1D interval, and fold & punch variants — with exact rational arithmetic
//! throughout. Each solver builds the canonical crease pattern for its
//! instance and verifies it by simulating the folded state; a failing
//! canonical pattern is a proof of unsolvability.
//!
//! The problem kinds share a document-level interface: [`registry::Registry`]
//! maps the kind names used in the JSON formats to solver strategies, which
//! is how the CLI dispatches.

pub mod foldcut;
pub mod foldmap;
pub mod formats;
pub mod geometry;
pub mod oned;
pub mod punch;
pub mod rational;
pub mod registry;
pub mod svg;

pub use rational::Rational;
