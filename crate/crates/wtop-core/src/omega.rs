//! The subobject classifier of finite M-sets.
//!
//! Its points are the right ideals of the monoid, acted on by
//! `K * m = {n : mn in K}`, with truth the full ideal. The classifying
//! map of a sub-M-set `A` sends `x` to `{m : x * m in A}`.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::monoid::{ElemSet, Monoid};
use crate::mset::{product, MMap, MSet, Product, SubMSet};

/// The classifier, with its ideals in canonical order (size, then members),
/// so indices into `ideals` double as carrier points of `object`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Omega {
    monoid: Arc<Monoid>,
    object: MSet,
    ideals: Vec<ElemSet>,
    bottom: usize,
    top: usize,
}

impl Omega {
    pub fn new(monoid: &Arc<Monoid>) -> Omega {
        let ideals = monoid.right_ideals();
        let order = monoid.order();
        let size = ideals.len();
        let mut act = Vec::with_capacity(size * order);
        for ideal in &ideals {
            for m in 0..order {
                let moved = ideal_act(monoid, ideal, m);
                let index = ideals
                    .binary_search(&moved)
                    .expect("the action permutes nothing outside the ideal list");
                act.push(index);
            }
        }
        let object = MSet::new(monoid, size, act).expect("the classifier action is valid");
        let bottom = ideals
            .binary_search(&ElemSet::empty(order))
            .expect("the empty ideal is always present");
        let top = ideals
            .binary_search(&ElemSet::full(order))
            .expect("the full ideal is always present");
        Omega {
            monoid: Arc::clone(monoid),
            object,
            ideals,
            bottom,
            top,
        }
    }

    pub fn monoid(&self) -> &Arc<Monoid> {
        &self.monoid
    }

    pub fn object(&self) -> &MSet {
        &self.object
    }

    pub fn size(&self) -> usize {
        self.ideals.len()
    }

    pub fn ideal(&self, index: usize) -> &ElemSet {
        &self.ideals[index]
    }

    pub fn ideals(&self) -> &[ElemSet] {
        &self.ideals
    }

    pub fn index_of(&self, ideal: &ElemSet) -> Option<usize> {
        self.ideals.binary_search(ideal).ok()
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn act(&self, index: usize, m: usize) -> usize {
        self.object.act(index, m)
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.ideals[a].is_subset_of(&self.ideals[b])
    }

    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.index_of(&self.ideals[a].intersect(&self.ideals[b]))
            .expect("ideals are closed under intersection")
    }

    pub fn join(&self, a: usize, b: usize) -> usize {
        self.index_of(&self.ideals[a].union(&self.ideals[b]))
            .expect("ideals are closed under union")
    }

    /// `a => b` is `{m : a * m is a subset of b * m}`.
    pub fn heyting(&self, a: usize, b: usize) -> usize {
        let mut out = ElemSet::empty(self.monoid.order());
        for m in self.monoid.elements() {
            if self.leq(self.act(a, m), self.act(b, m)) {
                out.insert(m);
            }
        }
        self.index_of(&out)
            .expect("implication lands on an ideal")
    }

    pub fn negation(&self, a: usize) -> usize {
        self.heyting(a, self.bottom)
    }

    /// Points fixed by the whole action; always exactly bottom and top.
    pub fn global_elements(&self) -> Vec<usize> {
        self.object.fixed_points()
    }

    pub fn require_global(&self, index: usize) -> Result<()> {
        if index >= self.size() {
            return Err(Error::OmegaIndexRange {
                index,
                size: self.size(),
            });
        }
        if self.monoid.elements().any(|m| self.act(index, m) != index) {
            return Err(Error::NotGlobalElement { index });
        }
        Ok(())
    }

    /// The point of truth, as a map from the terminal object.
    pub fn true_arrow(&self) -> MMap {
        let terminal = MSet::terminal(&self.monoid);
        MMap::new(terminal, self.object.clone(), vec![self.top])
            .expect("truth is a fixed point")
    }

    /// The classifying map of a sub-M-set of `E`.
    pub fn char_map(&self, sub: &SubMSet) -> MMap {
        let e = sub.ambient();
        assert_eq!(e.monoid(), &self.monoid, "characters live over one monoid");
        let table = e
            .elements()
            .map(|x| {
                let mut ideal = ElemSet::empty(self.monoid.order());
                for m in self.monoid.elements() {
                    if sub.contains(e.act(x, m)) {
                        ideal.insert(m);
                    }
                }
                self.index_of(&ideal).expect("characters land on ideals")
            })
            .collect();
        MMap::new(e.clone(), self.object.clone(), table).expect("characters are equivariant")
    }

    /// The sub-M-set classified by a map into the classifier.
    pub fn subobject_from_char(&self, f: &MMap) -> Result<SubMSet> {
        if f.target() != &self.object {
            return Err(Error::OmegaMismatch);
        }
        let member = f.table().iter().map(|&v| v == self.top).collect();
        Ok(SubMSet::new(f.source().clone(), member)
            .expect("preimages of truth are action-closed"))
    }

    /// `E * E -> Omega` sending `(a, b)` to `{m : a * m = b * m}`.
    pub fn delta_map(&self, e: &MSet) -> (Product, MMap) {
        assert_eq!(e.monoid(), &self.monoid, "delta lives over one monoid");
        let p = product(e, e).expect("a square always exists");
        let table = (0..p.object().size())
            .map(|pt| {
                let (a, b) = p.unpair(pt);
                self.index_of(&self.equality_ideal(e, a, b))
                    .expect("equality characters land on ideals")
            })
            .collect();
        let map = MMap::new(p.object().clone(), self.object.clone(), table)
            .expect("equality characters are equivariant");
        (p, map)
    }

    /// `{m : a * m = b * m}` for two points of `e`.
    pub fn equality_ideal(&self, e: &MSet, a: usize, b: usize) -> ElemSet {
        let mut ideal = ElemSet::empty(self.monoid.order());
        for m in self.monoid.elements() {
            if e.act(a, m) == e.act(b, m) {
                ideal.insert(m);
            }
        }
        ideal
    }

    pub fn meet_arrow(&self) -> (Product, MMap) {
        self.binary_arrow(|a, b| self.meet(a, b))
    }

    pub fn join_arrow(&self) -> (Product, MMap) {
        self.binary_arrow(|a, b| self.join(a, b))
    }

    pub fn heyting_arrow(&self) -> (Product, MMap) {
        self.binary_arrow(|a, b| self.heyting(a, b))
    }

    pub fn negation_arrow(&self) -> MMap {
        let table = (0..self.size()).map(|a| self.negation(a)).collect();
        MMap::new(self.object.clone(), self.object.clone(), table)
            .expect("negation is equivariant")
    }

    fn binary_arrow(&self, op: impl Fn(usize, usize) -> usize) -> (Product, MMap) {
        let p = product(&self.object, &self.object).expect("a square always exists");
        let table = (0..p.object().size())
            .map(|pt| {
                let (a, b) = p.unpair(pt);
                op(a, b)
            })
            .collect();
        let map = MMap::new(p.object().clone(), self.object.clone(), table)
            .expect("lattice operations are equivariant");
        (p, map)
    }
}

fn ideal_act(monoid: &Monoid, ideal: &ElemSet, m: usize) -> ElemSet {
    let mut out = ElemSet::empty(monoid.order());
    for n in monoid.elements() {
        if ideal.contains(monoid.mul(m, n)) {
            out.insert(n);
        }
    }
    out
}
