//! Decorated graphs, filtrations, automorphisms, canonical forms and enumeration.

pub mod automorphism;
pub mod canonical;
pub mod decorated;
pub mod enumerate;
pub mod io;
pub mod lattice;
pub mod marked;

pub use automorphism::{automorphism_group, Automorphism};
pub use canonical::{canonical_form, CanonicalForm, CanonicalLabel};
pub use decorated::{DecoratedGraph, HalfEdge, Vertex, VertexId};
pub use enumerate::{enumerate, enumerate_graphs, EnumerationBounds};
pub use lattice::{Charge, ChargeLattice};
pub use marked::MarkedGraph;
