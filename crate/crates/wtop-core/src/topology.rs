//! Weak Lawvere-Tierney topologies: equivariant, truth-preserving, monotone
//! endomaps of the classifier, plus the closure operators they induce.
//!
//! Inflation (`K` inside `j(K)`) is not checked separately: over a monoid
//! action it already follows from equivariance and truth-preservation,
//! because `m in K` forces `K * m` to be the full ideal, hence so is
//! `j(K) * m = j(K * m)`, which puts `m` back in `j(K)`. A debug assertion
//! keeps that derivation honest.

use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};
use crate::monoid::ElemSet;
use crate::mset::{diagonal, kernel_pair, MMap, MSet, SubMSet};
use crate::omega::Omega;

#[derive(Clone)]
pub struct WeakTopology {
    omega: Arc<Omega>,
    table: Vec<usize>,
    productive: OnceLock<bool>,
    idempotent: OnceLock<bool>,
}

impl fmt::Debug for WeakTopology {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("WeakTopology")
            .field("table", &self.table)
            .finish()
    }
}

impl PartialEq for WeakTopology {
    fn eq(&self, other: &Self) -> bool {
        self.omega == other.omega && self.table == other.table
    }
}

impl Eq for WeakTopology {}

impl WeakTopology {
    /// Validates, reporting the first violated condition: size, range,
    /// truth-preservation, equivariance, monotonicity.
    pub fn new(omega: &Arc<Omega>, table: Vec<usize>) -> Result<Self> {
        let size = omega.size();
        if table.len() != size {
            return Err(Error::TopologyTableSize {
                expected: size,
                got: table.len(),
            });
        }
        for (index, &value) in table.iter().enumerate() {
            if value >= size {
                return Err(Error::TopologyEntryRange { index, value, size });
            }
        }
        if table[omega.top()] != omega.top() {
            return Err(Error::NotTopPreserving);
        }
        for k in 0..size {
            for m in omega.monoid().elements() {
                if table[omega.act(k, m)] != omega.act(table[k], m) {
                    return Err(Error::TopologyNotEquivariant { k, m });
                }
            }
        }
        for a in 0..size {
            for b in 0..size {
                if omega.leq(a, b) && !omega.leq(table[a], table[b]) {
                    return Err(Error::NotMonotone { a, b });
                }
            }
        }
        debug_assert!(
            (0..size).all(|k| omega.leq(k, table[k])),
            "equivariance and truth-preservation must already force inflation"
        );
        Ok(WeakTopology {
            omega: Arc::clone(omega),
            table,
            productive: OnceLock::new(),
            idempotent: OnceLock::new(),
        })
    }

    pub fn identity(omega: &Arc<Omega>) -> WeakTopology {
        WeakTopology::new(omega, (0..omega.size()).collect())
            .expect("the identity endomap is a weak topology")
    }

    pub fn const_top(omega: &Arc<Omega>) -> WeakTopology {
        WeakTopology::new(omega, vec![omega.top(); omega.size()])
            .expect("the constant-truth endomap is a weak topology")
    }

    pub fn omega(&self) -> &Arc<Omega> {
        &self.omega
    }

    pub fn table(&self) -> &[usize] {
        &self.table
    }

    pub fn apply(&self, k: usize) -> usize {
        self.table[k]
    }

    /// Whether `j(j(K)) = j(K)` throughout; cached after first use.
    pub fn is_idempotent(&self) -> bool {
        *self
            .idempotent
            .get_or_init(|| (0..self.table.len()).all(|k| self.table[self.table[k]] == self.table[k]))
    }

    /// Whether `j` commutes with binary meets; cached after first use.
    pub fn is_productive(&self) -> bool {
        *self.productive.get_or_init(|| {
            let n = self.table.len();
            (0..n).all(|a| {
                (0..n).all(|b| {
                    self.table[self.omega.meet(a, b)]
                        == self.omega.meet(self.table[a], self.table[b])
                })
            })
        })
    }

    /// The closure of a sub-M-set: points whose membership character is
    /// sent to truth.
    pub fn closure(&self, sub: &SubMSet) -> SubMSet {
        let character = self.omega.char_map(sub);
        let member = character
            .table()
            .iter()
            .map(|&k| self.table[k] == self.omega.top())
            .collect();
        SubMSet::new(sub.ambient().clone(), member).expect("closures are action-closed")
    }

    pub fn is_dense(&self, sub: &SubMSet) -> bool {
        self.closure(sub).is_full()
    }

    pub fn is_closed(&self, sub: &SubMSet) -> bool {
        &self.closure(sub) == sub
    }

    /// Fixed points of `j`: the classifier of closed subobjects.
    pub fn omega_j(&self) -> SubMSet {
        let member = (0..self.table.len()).map(|k| self.table[k] == k).collect();
        SubMSet::new(self.omega.object().clone(), member)
            .expect("fixed points of an equivariant endomap are action-closed")
    }

    /// Points where `j` has stabilized: `j(j(K)) = j(K)`.
    pub fn l_j(&self) -> SubMSet {
        let member = (0..self.table.len())
            .map(|k| self.table[self.table[k]] == self.table[k])
            .collect();
        SubMSet::new(self.omega.object().clone(), member)
            .expect("stabilized points are action-closed")
    }

    /// The image of `j` as a subobject of the classifier.
    pub fn im_j(&self) -> SubMSet {
        let mut member = vec![false; self.table.len()];
        for &v in &self.table {
            member[v] = true;
        }
        SubMSet::new(self.omega.object().clone(), member)
            .expect("images of equivariant endomaps are action-closed")
    }

    /// Image dense, and the diagonal dense in the kernel pair.
    pub fn is_bidense(&self, f: &MMap) -> bool {
        if !self.is_dense(&f.image()) {
            return false;
        }
        let (_, kp) = kernel_pair(f);
        let (_, diag) = diagonal(f.source());
        debug_assert!(diag.is_subset_of(&kp));
        self.is_dense(&diag.relative_to(&kp))
    }

    /// Intersection of all dense subobjects, if it is itself dense.
    /// `None` is a genuine outcome: it witnesses non-principality at `e`.
    pub fn least_dense_subobject(&self, e: &MSet) -> Option<SubMSet> {
        let mut meet = SubMSet::full(e);
        for sub in crate::mset::enumerate_sub_msets(e) {
            if self.is_dense(&sub) {
                meet = meet.intersect(&sub);
            }
        }
        self.is_dense(&meet).then_some(meet)
    }

    /// Least dense subobject of `sub` as an object, embedded back in the
    /// ambient; adjoint to closure where defined.
    pub fn interior(&self, sub: &SubMSet) -> Option<SubMSet> {
        let embedded = sub.as_mset();
        let least = self.least_dense_subobject(&embedded.object)?;
        let image: Vec<usize> = least
            .indices()
            .into_iter()
            .map(|i| embedded.include.apply(i))
            .collect();
        Some(
            SubMSet::from_indices(sub.ambient(), &image)
                .expect("embedding a closed subset along an inclusion stays closed"),
        )
    }
}

/// `j^I(K) = {m : mI is inside K}`, a weak topology for any left ideal `I`.
pub fn weak_ideal_topology(omega: &Arc<Omega>, ideal: &ElemSet) -> Result<WeakTopology> {
    let monoid = omega.monoid();
    monoid.require_left_ideal(ideal)?;
    let table = (0..omega.size())
        .map(|k| {
            let mut moved = ElemSet::empty(monoid.order());
            for m in monoid.elements() {
                if ideal.iter().all(|n| omega.ideal(k).contains(monoid.mul(m, n))) {
                    moved.insert(m);
                }
            }
            omega
                .index_of(&moved)
                .expect("ideal topologies land on ideals")
        })
        .collect();
    WeakTopology::new(omega, table)
}

/// The topology induced by a central element: `K` goes to `{n : nm in K}`.
pub fn central_element_topology(omega: &Arc<Omega>, m: usize) -> Result<WeakTopology> {
    let monoid = omega.monoid();
    monoid.require_central(m)?;
    let table = (0..omega.size())
        .map(|k| {
            let mut moved = ElemSet::empty(monoid.order());
            for n in monoid.elements() {
                if omega.ideal(k).contains(monoid.mul(n, m)) {
                    moved.insert(n);
                }
            }
            omega
                .index_of(&moved)
                .expect("central translations land on ideals")
        })
        .collect();
    WeakTopology::new(omega, table)
}

/// `u or -` for a global element `u`; always idempotent.
pub fn open_topology(omega: &Arc<Omega>, u: usize) -> Result<WeakTopology> {
    omega.require_global(u)?;
    let table = (0..omega.size()).map(|k| omega.join(u, k)).collect();
    WeakTopology::new(omega, table)
}

/// `u => -` for a global element `u`; always idempotent.
pub fn closed_topology(omega: &Arc<Omega>, u: usize) -> Result<WeakTopology> {
    omega.require_global(u)?;
    let table = (0..omega.size()).map(|k| omega.heyting(u, k)).collect();
    WeakTopology::new(omega, table)
}

/// Double negation; always idempotent.
pub fn double_negation(omega: &Arc<Omega>) -> WeakTopology {
    let table = (0..omega.size())
        .map(|k| omega.negation(omega.negation(k)))
        .collect();
    WeakTopology::new(omega, table).expect("double negation is a weak topology")
}

/// The covering family of a left ideal: every right ideal containing it.
pub fn weak_grothendieck(omega: &Arc<Omega>, ideal: &ElemSet) -> Result<Vec<ElemSet>> {
    omega.monoid().require_left_ideal(ideal)?;
    Ok(omega
        .ideals()
        .iter()
        .filter(|k| ideal.is_subset_of(k))
        .cloned()
        .collect())
}

/// Direct closure formula for ideal topologies: `{b : for all n in I,
/// b * n is in A}`. Independent of the character-based path, kept as a
/// cross-check oracle.
pub fn ideal_closure_direct(ideal: &ElemSet, sub: &SubMSet) -> SubMSet {
    let e = sub.ambient();
    let member = e
        .elements()
        .map(|b| ideal.iter().all(|n| sub.contains(e.act(b, n))))
        .collect();
    SubMSet::new(e.clone(), member).expect("the direct closure is action-closed")
}
