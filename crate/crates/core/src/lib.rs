//! Homomorphisms of 2-edge-colored and signed graphs.
//!
//! [`sgraph`] holds the graph type and switching; [`gf`] is finite-field
//! arithmetic for the Paley-type targets built in [`constructions`];
//! [`analysis`] checks structural properties of targets; [`hom`] searches,
//! verifies and constructs homomorphisms; [`enumerate`] generates small
//! graphs for exhaustive checks; [`reference`] has brute-force versions of
//! the searches for cross-checking.

// index loops over adjacency matrices read better than zipped iterators
#![allow(clippy::needless_range_loop)]

mod bits;

pub mod analysis;
pub mod constructions;
pub mod enumerate;
pub mod gf;
pub mod hom;
pub mod reference;
pub mod sgraph;

pub use hom::{Homomorphism, Mode};
pub use sgraph::{Sign, SignedGraph, SwitchSet};
