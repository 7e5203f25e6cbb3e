//! One error type for the whole crate.
//!
//! Validation failures carry the first witness found (a triple, an element,
//! an index) so callers can report exactly where a structure breaks.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    // Monoid table validation.
    #[error("multiplication table has {got} entries, expected {expected}")]
    TableSize { expected: usize, got: usize },
    #[error("table entry at ({row}, {col}) is {value}, out of range for order {order}")]
    TableEntryRange {
        row: usize,
        col: usize,
        value: usize,
        order: usize,
    },
    #[error("identity index {index} is out of range for order {order}")]
    IdentityRange { index: usize, order: usize },
    #[error("element {identity} is not a two-sided identity (fails on {witness})")]
    NotIdentity { identity: usize, witness: usize },
    #[error("multiplication is not associative at ({a}, {b}, {c})")]
    NotAssociative { a: usize, b: usize, c: usize },
    #[error("subset is not a left ideal: {m} * {a} falls outside")]
    NotLeftIdeal { m: usize, a: usize },
    #[error("element {m} is not central (does not commute with {witness})")]
    NotCentral { m: usize, witness: usize },
    #[error("subset universe has size {got}, expected {expected}")]
    UniverseSize { expected: usize, got: usize },

    // M-set and map validation.
    #[error("action table has {got} entries, expected {expected}")]
    ActionTableSize { expected: usize, got: usize },
    #[error("action entry for ({x}, {m}) is {value}, out of range for carrier size {size}")]
    ActionEntryRange {
        x: usize,
        m: usize,
        value: usize,
        size: usize,
    },
    #[error("identity must act trivially but moves {x}")]
    ActionIdentity { x: usize },
    #[error("action is not compatible with multiplication at ({x}, {m}, {n})")]
    ActionAssociativity { x: usize, m: usize, n: usize },
    #[error("operands live over different monoids")]
    MonoidMismatch,
    #[error("map table has {got} entries, expected {expected}")]
    MapTableSize { expected: usize, got: usize },
    #[error("map sends {x} to {value}, out of range for target size {size}")]
    MapEntryRange { x: usize, value: usize, size: usize },
    #[error("map is not equivariant at ({x}, {m})")]
    NotEquivariant { x: usize, m: usize },
    #[error("subset is not closed under the action: {x} * {m} falls outside")]
    NotActionClosed { x: usize, m: usize },
    #[error("membership vector has {got} entries, expected {expected}")]
    CarrierSize { expected: usize, got: usize },
    #[error("partition has {got} entries, expected {expected}")]
    PartitionSize { expected: usize, got: usize },
    #[error("partition is not equivariant: {x} ~ {y} but their images under {m} are separated")]
    CongruenceNotEquivariant { x: usize, y: usize, m: usize },
    #[error("objects do not match (sources, targets, or ambients differ)")]
    ObjectMismatch,

    // Topology validation.
    #[error("topology table has {got} entries, expected {expected}")]
    TopologyTableSize { expected: usize, got: usize },
    #[error("topology entry for ideal {index} is {value}, out of range for omega of size {size}")]
    TopologyEntryRange {
        index: usize,
        value: usize,
        size: usize,
    },
    #[error("table does not preserve the top element")]
    NotTopPreserving,
    #[error("table is not equivariant at ideal {k} under {m}")]
    TopologyNotEquivariant { k: usize, m: usize },
    #[error("table is not monotone on the pair ({a}, {b})")]
    NotMonotone { a: usize, b: usize },
    #[error("ideal index {index} is out of range for omega of size {size}")]
    OmegaIndexRange { index: usize, size: usize },
    #[error("ideal {index} is not a global element of omega")]
    NotGlobalElement { index: usize },
    #[error("topologies live over different omegas")]
    OmegaMismatch,

    // Guards.
    #[error("exponential base needs {cells} cells, over the limit {limit}")]
    ExponentialCells { cells: usize, limit: usize },
    #[error("exponential enumeration aborted after {limit} assignments")]
    ExponentialAssignments { limit: usize },
    #[error("omega has {size} elements, over the enumeration guard {limit}")]
    OmegaGuard { size: usize, limit: usize },

    // Preconditions of the reflection constructions.
    #[error("topology is not productive")]
    NotProductive,
    #[error("object is not separated")]
    NotSeparated,
    #[error("closure of the diagonal is not itself closed")]
    NotInCj,
    #[error("internal consistency check failed: {0}")]
    TheoremViolated(String),
}

impl Error {
    /// True for errors raised by a resource guard rather than bad input.
    pub fn is_guard(&self) -> bool {
        matches!(
            self,
            Error::ExponentialCells { .. }
                | Error::ExponentialAssignments { .. }
                | Error::OmegaGuard { .. }
        )
    }
}
