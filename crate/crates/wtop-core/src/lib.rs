//! Computation engine for the topos of finite M-sets.
//!
//! Everything here is exhaustive finite mathematics at desk scale: monoids of
//! order up to around five, actions on carriers of comparable size. The crate
//! builds the subobject classifier of right ideals, weak Lawvere-Tierney
//! topologies on it, the closure operators they induce, the lattice of all
//! weak topologies on a given classifier, and the separated and sheaf
//! reflections of the objects they act on. All functions are pure and all
//! enumeration orders are canonical, so results are reproducible
//! byte-for-byte.

pub mod error;
pub mod exponential;
pub mod lattice;
pub mod laws;
pub mod monoid;
pub mod mset;
pub mod omega;
pub mod reflection;
pub mod topology;

pub use error::{Error, Result};
pub use exponential::{exponential, singleton_map, Exponential};
pub use lattice::{enumerate_weak_topologies, TopologyClass};
pub use laws::{run_all, LawConfig, LawReport};
pub use omega::Omega;
pub use topology::WeakTopology;
pub use monoid::{enumerate_monoids, ElemSet, Monoid};
pub use mset::{
    congruence_generated, enumerate_msets, enumerate_sub_msets, equalizer, hom_set,
    image_factorization, product, quotient, Congruence, MMap, MSet, Product, SubMSet,
};

/// Resource guards for the operations whose cost can blow up: exponential
/// objects and the enumeration of all weak topologies. Every bound errs on
/// the side of refusing work rather than running unbounded.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Guard {
    /// Cap on `|M| * |X|` when building an exponential with base `X`.
    pub max_exponential_cells: usize,
    /// Cap on attempted assignments while enumerating exponential elements.
    pub max_exponential_assignments: usize,
    /// Cap on `|Omega|` when enumerating all weak topologies on it.
    pub max_omega: usize,
}

impl Default for Guard {
    fn default() -> Self {
        Guard {
            max_exponential_cells: 12,
            max_exponential_assignments: 1_000_000,
            max_omega: 8,
        }
    }
}
