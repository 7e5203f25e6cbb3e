//! The ordered algebra of all weak topologies on a fixed classifier:
//! enumeration, pointwise lattice operations, composition, residuals,
//! Heyting implication, and the idempotent reflection.
//!
//! Residuals and implication filter the full enumeration instead of doing
//! algebra — definitionally correct, and cheap because the classifier is
//! tiny. The enumeration itself is gated by `Guard::max_omega`.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::omega::Omega;
use crate::topology::WeakTopology;
use crate::Guard;

/// Which slice of the enumeration to keep.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TopologyClass {
    /// Every weak topology.
    All,
    /// Those commuting with binary meets.
    Productive,
    /// The idempotent ones (Lawvere-Tierney topologies).
    Topology,
}

/// All weak topologies on the classifier, tables in lexicographic order.
pub fn enumerate_weak_topologies(
    omega: &Arc<Omega>,
    class: TopologyClass,
    guard: &Guard,
) -> Result<Vec<WeakTopology>> {
    if omega.size() > guard.max_omega {
        return Err(Error::OmegaGuard {
            size: omega.size(),
            limit: guard.max_omega,
        });
    }
    let mut tables = Vec::new();
    let mut partial: Vec<Option<usize>> = vec![None; omega.size()];
    // Truth is pinned; everything else is searched with inflation and
    // monotonicity pruning (inflation is implied, so pruning loses nothing).
    let mut seed_trail = Vec::new();
    if propagate(omega, &mut partial, omega.top(), omega.top(), &mut seed_trail) {
        search(omega, &mut partial, &mut tables);
    }
    let all: Vec<WeakTopology> = tables
        .into_iter()
        .map(|table| {
            WeakTopology::new(omega, table).expect("the search only emits weak topologies")
        })
        .collect();
    Ok(match class {
        TopologyClass::All => all,
        TopologyClass::Productive => all.into_iter().filter(|j| j.is_productive()).collect(),
        TopologyClass::Topology => all.into_iter().filter(|j| j.is_idempotent()).collect(),
    })
}

fn search(omega: &Omega, partial: &mut Vec<Option<usize>>, out: &mut Vec<Vec<usize>>) {
    let Some(first) = partial.iter().position(Option::is_none) else {
        out.push(partial.iter().map(|v| v.unwrap()).collect());
        return;
    };
    for value in 0..omega.size() {
        let mut trail = Vec::new();
        if propagate(omega, partial, first, value, &mut trail) {
            search(omega, partial, out);
        }
        for cell in trail {
            partial[cell] = None;
        }
    }
}

// Assign j(first) = value, close under equivariance, and reject anything
// that already violates inflation or monotonicity against assigned cells.
fn propagate(
    omega: &Omega,
    partial: &mut [Option<usize>],
    first: usize,
    value: usize,
    trail: &mut Vec<usize>,
) -> bool {
    let mut stack = vec![(first, value)];
    while let Some((k, v)) = stack.pop() {
        match partial[k] {
            Some(existing) => {
                if existing != v {
                    return false;
                }
            }
            None => {
                if !omega.leq(k, v) {
                    return false;
                }
                for (other, slot) in partial.iter().enumerate() {
                    let Some(w) = *slot else { continue };
                    if omega.leq(k, other) && !omega.leq(v, w) {
                        return false;
                    }
                    if omega.leq(other, k) && !omega.leq(w, v) {
                        return false;
                    }
                }
                partial[k] = Some(v);
                trail.push(k);
                for m in omega.monoid().elements() {
                    stack.push((omega.act(k, m), omega.act(v, m)));
                }
            }
        }
    }
    true
}

/// Pointwise order on tables.
pub fn leq(j: &WeakTopology, k: &WeakTopology) -> bool {
    assert_eq!(j.omega(), k.omega(), "comparison needs one classifier");
    j.table()
        .iter()
        .zip(k.table())
        .all(|(&a, &b)| j.omega().leq(a, b))
}

/// Pointwise intersection; stays a weak topology.
pub fn meet(j: &WeakTopology, k: &WeakTopology) -> WeakTopology {
    assert_eq!(j.omega(), k.omega(), "meet needs one classifier");
    let table = j
        .table()
        .iter()
        .zip(k.table())
        .map(|(&a, &b)| j.omega().meet(a, b))
        .collect();
    WeakTopology::new(j.omega(), table).expect("pointwise meets of weak topologies are weak topologies")
}

/// Pointwise union; stays a weak topology.
pub fn join(j: &WeakTopology, k: &WeakTopology) -> WeakTopology {
    assert_eq!(j.omega(), k.omega(), "join needs one classifier");
    let table = j
        .table()
        .iter()
        .zip(k.table())
        .map(|(&a, &b)| j.omega().join(a, b))
        .collect();
    WeakTopology::new(j.omega(), table).expect("pointwise joins of weak topologies are weak topologies")
}

/// `j` after `k`: apply `k` first. Stays a weak topology; productive when
/// both factors are.
pub fn compose(j: &WeakTopology, k: &WeakTopology) -> WeakTopology {
    assert_eq!(j.omega(), k.omega(), "composition needs one classifier");
    let table = k.table().iter().map(|&v| j.apply(v)).collect();
    WeakTopology::new(j.omega(), table).expect("composites of weak topologies are weak topologies")
}

/// `j \ k`: the meet of every `j'` with `j` after `j'` at least `k`.
pub fn left_residual(j: &WeakTopology, k: &WeakTopology, guard: &Guard) -> Result<WeakTopology> {
    assert_eq!(j.omega(), k.omega(), "residuals need one classifier");
    let candidates = enumerate_weak_topologies(j.omega(), TopologyClass::All, guard)?;
    Ok(meet_over(
        j.omega(),
        candidates.iter().filter(|jp| leq(k, &compose(j, jp))),
    ))
}

/// `k / j`: the meet of every `j'` with `j'` after `j` at least `k`.
pub fn right_residual(k: &WeakTopology, j: &WeakTopology, guard: &Guard) -> Result<WeakTopology> {
    assert_eq!(j.omega(), k.omega(), "residuals need one classifier");
    let candidates = enumerate_weak_topologies(j.omega(), TopologyClass::All, guard)?;
    Ok(meet_over(
        j.omega(),
        candidates.iter().filter(|jp| leq(k, &compose(jp, j))),
    ))
}

/// `j1 => j2`: the join of every `j` with `j` meet `j1` below `j2`.
pub fn heyting_implication(
    j1: &WeakTopology,
    j2: &WeakTopology,
    guard: &Guard,
) -> Result<WeakTopology> {
    assert_eq!(j1.omega(), j2.omega(), "implication needs one classifier");
    let candidates = enumerate_weak_topologies(j1.omega(), TopologyClass::All, guard)?;
    let mut out = WeakTopology::identity(j1.omega());
    for j in &candidates {
        if leq(&meet(j, j1), j2) {
            out = join(&out, j);
        }
    }
    Ok(out)
}

/// The least idempotent topology above `j`: iterate composition with `j`
/// until the whole table stabilizes.
pub fn topological_reflection(j: &WeakTopology) -> WeakTopology {
    let mut current = j.clone();
    loop {
        let next = compose(j, &current);
        if next.table() == current.table() {
            debug_assert!(current.is_idempotent());
            return current;
        }
        current = next;
    }
}

fn meet_over<'a>(
    omega: &Arc<Omega>,
    candidates: impl Iterator<Item = &'a WeakTopology>,
) -> WeakTopology {
    let mut out = WeakTopology::const_top(omega);
    for j in candidates {
        out = meet(&out, j);
    }
    out
}
