//! Covering radii of planar convex bodies with respect to the integer lattice.
//!
//! A convex body `K` in the plane has the *lattice point covering property*
//! when every rigid placement of `K` (any rotation followed by any
//! translation) contains a point of `Z^2`. This crate computes the covering
//! radius `c(K) = min { t > 0 : tK + Z^2 = R^2 }` of polygonal bodies, decides
//! the covering property over all rotations, and evaluates the closed-form
//! thresholds known for regular polygons, ellipses, triangles and
//! parallelograms.
//!
//! The modules split along the mathematical toolchain:
//!
//! * [`geom`]: validated strictly convex polygons, gauge evaluation,
//!   containment, symmetry detection.
//! * [`steiner`]: Steiner symmetrization about the x-axis, which preserves
//!   vertical chords and area, plus the closed-form symmetrization of rotated
//!   regular polygons with an even number of sides.
//! * [`lattice`]: covering radii against `Z^2`. Exact corner reading for
//!   doubly symmetric bodies, a grid-search deep-hole oracle for the general
//!   origin-symmetric case, covering certificates, counterexample witnesses,
//!   and rotation sweeps.
//! * [`criteria`]: closed-form covering criteria (ellipsoid, triangle,
//!   parallelogram), the minimal covering scales of the regular polygon
//!   families, and grid verification of the supporting inequalities.
//!
//! The crate is `no_std`-compatible (with `alloc`); enable the `libm` feature
//! instead of the default `std` to build without the standard library.

#![cfg_attr(not(feature = "std"), no_std)]
#![deny(unsafe_code)]

extern crate alloc;

pub mod criteria;
mod error;
pub mod geom;
pub mod lattice;
mod math;
pub mod steiner;

pub use error::Error;
