//! Nice multi-curve homology: generators, relations from isotopies and the
//! MultiLink homomorphism.

pub mod generator;
pub mod multilink;
pub mod point_chain;
pub mod relation;

pub use generator::{generator_from_json, generator_to_json, GeneratorJson, NiceGenerator};
pub use multilink::{multilink, multilink_chain, multilink_of, multilink_track};
pub use point_chain::PointChain;
pub use relation::{hnul_element, verify_chain_map, ChainMapReport, HnulElement, HnulTerm};
