//! Finite right M-sets and their category: equivariant maps, sub-M-sets,
//! congruences, products, equalizers, images, and quotients.
//!
//! The action is on the right throughout: `act(x, m)` is `x * m`, and the
//! regular act is the monoid acting on itself by right multiplication.
//! Product carriers are paired row-major: `(x, y)` becomes `x * |Y| + y`.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::monoid::Monoid;

/// A finite right action of a monoid on a carrier `0..size`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MSet {
    monoid: Arc<Monoid>,
    size: usize,
    act: Vec<usize>,
}

impl fmt::Debug for MSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("MSet")
            .field("size", &self.size)
            .field("act", &self.act)
            .finish()
    }
}

impl MSet {
    /// Validates the action table. Row-major: entry `x * order + m` is `x * m`.
    pub fn new(monoid: &Arc<Monoid>, size: usize, act: Vec<usize>) -> Result<Self> {
        let order = monoid.order();
        if act.len() != size * order {
            return Err(Error::ActionTableSize {
                expected: size * order,
                got: act.len(),
            });
        }
        for x in 0..size {
            for m in 0..order {
                let value = act[x * order + m];
                if value >= size {
                    return Err(Error::ActionEntryRange { x, m, value, size });
                }
            }
        }
        let e = monoid.identity();
        for x in 0..size {
            if act[x * order + e] != x {
                return Err(Error::ActionIdentity { x });
            }
        }
        for x in 0..size {
            for m in 0..order {
                for n in 0..order {
                    let via_product = act[x * order + monoid.mul(m, n)];
                    let stepwise = act[act[x * order + m] * order + n];
                    if via_product != stepwise {
                        return Err(Error::ActionAssociativity { x, m, n });
                    }
                }
            }
        }
        Ok(MSet {
            monoid: Arc::clone(monoid),
            size,
            act,
        })
    }

    pub fn monoid(&self) -> &Arc<Monoid> {
        &self.monoid
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn act(&self, x: usize, m: usize) -> usize {
        self.act[x * self.monoid.order() + m]
    }

    pub fn elements(&self) -> impl Iterator<Item = usize> {
        0..self.size
    }

    /// The monoid acting on itself by right multiplication.
    pub fn regular(monoid: &Arc<Monoid>) -> MSet {
        let order = monoid.order();
        let mut act = vec![0; order * order];
        for x in 0..order {
            for m in 0..order {
                act[x * order + m] = monoid.mul(x, m);
            }
        }
        MSet::new(monoid, order, act).expect("the regular act is valid")
    }

    /// One point, fixed by everything.
    pub fn terminal(monoid: &Arc<Monoid>) -> MSet {
        MSet::trivial(monoid, 1)
    }

    pub fn empty(monoid: &Arc<Monoid>) -> MSet {
        MSet::new(monoid, 0, Vec::new()).expect("the empty act is valid")
    }

    /// `size` points, all fixed.
    pub fn trivial(monoid: &Arc<Monoid>, size: usize) -> MSet {
        let order = monoid.order();
        let mut act = vec![0; size * order];
        for x in 0..size {
            for m in 0..order {
                act[x * order + m] = x;
            }
        }
        MSet::new(monoid, size, act).expect("a trivial act is valid")
    }

    pub fn fixed_points(&self) -> Vec<usize> {
        self.elements()
            .filter(|&x| self.monoid.elements().all(|m| self.act(x, m) == x))
            .collect()
    }

    /// Smallest sub-M-set containing the seeds.
    pub fn generated_sub(&self, seeds: &[usize]) -> SubMSet {
        let mut member = vec![false; self.size];
        let mut stack: Vec<usize> = seeds.to_vec();
        while let Some(x) = stack.pop() {
            if member[x] {
                continue;
            }
            member[x] = true;
            for m in self.monoid.elements() {
                stack.push(self.act(x, m));
            }
        }
        SubMSet::new(self.clone(), member).expect("orbit closures are action-closed")
    }

    /// Acting by a fixed element as a map; equivariant exactly when `m`
    /// commutes with everything, so validation rejects non-central `m`.
    pub fn act_map(&self, m: usize) -> Result<MMap> {
        let table = self.elements().map(|x| self.act(x, m)).collect();
        MMap::new(self.clone(), self.clone(), table)
    }
}

/// An equivariant map between two M-sets over the same monoid.
#[derive(Clone, PartialEq, Eq)]
pub struct MMap {
    source: MSet,
    target: MSet,
    table: Vec<usize>,
}

impl fmt::Debug for MMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("MMap").field("table", &self.table).finish()
    }
}

impl MMap {
    pub fn new(source: MSet, target: MSet, table: Vec<usize>) -> Result<Self> {
        if source.monoid() != target.monoid() {
            return Err(Error::MonoidMismatch);
        }
        if table.len() != source.size() {
            return Err(Error::MapTableSize {
                expected: source.size(),
                got: table.len(),
            });
        }
        for (x, &value) in table.iter().enumerate() {
            if value >= target.size() {
                return Err(Error::MapEntryRange {
                    x,
                    value,
                    size: target.size(),
                });
            }
        }
        for x in source.elements() {
            for m in source.monoid().elements() {
                if table[source.act(x, m)] != target.act(table[x], m) {
                    return Err(Error::NotEquivariant { x, m });
                }
            }
        }
        Ok(MMap {
            source,
            target,
            table,
        })
    }

    pub fn identity(object: &MSet) -> MMap {
        MMap {
            source: object.clone(),
            target: object.clone(),
            table: object.elements().collect(),
        }
    }

    /// The unique map to the terminal object.
    pub fn to_terminal(object: &MSet) -> MMap {
        let terminal = MSet::terminal(object.monoid());
        MMap::new(object.clone(), terminal, vec![0; object.size()])
            .expect("the terminal map is equivariant")
    }

    pub fn source(&self) -> &MSet {
        &self.source
    }

    pub fn target(&self) -> &MSet {
        &self.target
    }

    pub fn table(&self) -> &[usize] {
        &self.table
    }

    pub fn apply(&self, x: usize) -> usize {
        self.table[x]
    }

    /// `outer` after `inner`.
    pub fn compose(outer: &MMap, inner: &MMap) -> Result<MMap> {
        if inner.target != outer.source {
            return Err(Error::ObjectMismatch);
        }
        Ok(MMap {
            source: inner.source.clone(),
            target: outer.target.clone(),
            table: inner.table.iter().map(|&x| outer.table[x]).collect(),
        })
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = vec![false; self.target.size()];
        for &v in &self.table {
            if seen[v] {
                return false;
            }
            seen[v] = true;
        }
        true
    }

    pub fn is_surjective(&self) -> bool {
        let mut seen = vec![false; self.target.size()];
        for &v in &self.table {
            seen[v] = true;
        }
        seen.into_iter().all(|b| b)
    }

    pub fn image(&self) -> SubMSet {
        let mut member = vec![false; self.target.size()];
        for &v in &self.table {
            member[v] = true;
        }
        SubMSet::new(self.target.clone(), member).expect("images are action-closed")
    }

    pub fn preimage(&self, sub: &SubMSet) -> SubMSet {
        assert_eq!(sub.ambient(), &self.target, "preimage needs a sub of the target");
        let member = self.table.iter().map(|&v| sub.contains(v)).collect();
        SubMSet::new(self.source.clone(), member).expect("preimages are action-closed")
    }

    /// Restrict the target to a sub-M-set containing the image.
    pub fn corestrict(&self, sub: &SubMSet) -> Option<MMap> {
        assert_eq!(sub.ambient(), &self.target, "corestriction needs a sub of the target");
        let indices = sub.indices();
        let object = sub.as_mset().object;
        let mut table = Vec::with_capacity(self.table.len());
        for &v in &self.table {
            table.push(indices.iter().position(|&i| i == v)?);
        }
        Some(MMap {
            source: self.source.clone(),
            target: object,
            table,
        })
    }

    pub fn agrees_with_on(&self, other: &MMap, indices: &[usize]) -> bool {
        indices.iter().all(|&x| self.table[x] == other.table[x])
    }
}

/// An action-closed subset of an M-set.
#[derive(Clone, PartialEq, Eq)]
pub struct SubMSet {
    ambient: MSet,
    member: Vec<bool>,
}

impl fmt::Debug for SubMSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SubMSet{:?}", self.indices())
    }
}

/// A sub-M-set materialized as an object of its own, with its inclusion.
#[derive(Clone, Debug)]
pub struct SubObject {
    pub object: MSet,
    pub include: MMap,
}

impl SubMSet {
    pub fn new(ambient: MSet, member: Vec<bool>) -> Result<Self> {
        if member.len() != ambient.size() {
            return Err(Error::CarrierSize {
                expected: ambient.size(),
                got: member.len(),
            });
        }
        for x in ambient.elements() {
            if member[x] {
                for m in ambient.monoid().elements() {
                    if !member[ambient.act(x, m)] {
                        return Err(Error::NotActionClosed { x, m });
                    }
                }
            }
        }
        Ok(SubMSet { ambient, member })
    }

    pub fn empty(ambient: &MSet) -> SubMSet {
        SubMSet {
            ambient: ambient.clone(),
            member: vec![false; ambient.size()],
        }
    }

    pub fn full(ambient: &MSet) -> SubMSet {
        SubMSet {
            ambient: ambient.clone(),
            member: vec![true; ambient.size()],
        }
    }

    pub fn from_indices(ambient: &MSet, indices: &[usize]) -> Result<SubMSet> {
        let mut member = vec![false; ambient.size()];
        for &i in indices {
            member[i] = true;
        }
        SubMSet::new(ambient.clone(), member)
    }

    pub fn ambient(&self) -> &MSet {
        &self.ambient
    }

    pub fn contains(&self, x: usize) -> bool {
        self.member[x]
    }

    pub fn size(&self) -> usize {
        self.member.iter().filter(|&&b| b).count()
    }

    pub fn is_full(&self) -> bool {
        self.member.iter().all(|&b| b)
    }

    pub fn indices(&self) -> Vec<usize> {
        (0..self.member.len()).filter(|&i| self.member[i]).collect()
    }

    pub fn union(&self, other: &SubMSet) -> SubMSet {
        assert_eq!(self.ambient, other.ambient, "union needs one ambient object");
        SubMSet {
            ambient: self.ambient.clone(),
            member: self
                .member
                .iter()
                .zip(&other.member)
                .map(|(&a, &b)| a || b)
                .collect(),
        }
    }

    pub fn intersect(&self, other: &SubMSet) -> SubMSet {
        assert_eq!(self.ambient, other.ambient, "intersection needs one ambient object");
        SubMSet {
            ambient: self.ambient.clone(),
            member: self
                .member
                .iter()
                .zip(&other.member)
                .map(|(&a, &b)| a && b)
                .collect(),
        }
    }

    pub fn is_subset_of(&self, other: &SubMSet) -> bool {
        assert_eq!(self.ambient, other.ambient, "comparison needs one ambient object");
        self.member
            .iter()
            .zip(&other.member)
            .all(|(&a, &b)| !a || b)
    }

    /// The subset as a standalone M-set, carrier ordered by ambient index.
    pub fn as_mset(&self) -> SubObject {
        let indices = self.indices();
        let order = self.ambient.monoid().order();
        let mut act = Vec::with_capacity(indices.len() * order);
        for &x in &indices {
            for m in 0..order {
                let y = self.ambient.act(x, m);
                let pos = indices
                    .binary_search(&y)
                    .expect("sub-M-sets are action-closed");
                act.push(pos);
            }
        }
        let object = MSet::new(self.ambient.monoid(), indices.len(), act)
            .expect("restricting an action keeps it valid");
        let include = MMap::new(object.clone(), self.ambient.clone(), indices)
            .expect("inclusions are equivariant");
        SubObject { object, include }
    }

    /// Re-express this subset relative to a larger one containing it.
    pub fn relative_to(&self, larger: &SubMSet) -> SubMSet {
        assert!(self.is_subset_of(larger), "relative_to needs a containing subset");
        let obj = larger.as_mset().object;
        let member = larger.indices().iter().map(|&i| self.contains(i)).collect();
        SubMSet::new(obj, member).expect("inclusion of closed subsets restricts")
    }
}

/// An equivariant partition of an M-set, classes numbered by first occurrence.
#[derive(Clone, PartialEq, Eq)]
pub struct Congruence {
    ambient: MSet,
    class_of: Vec<usize>,
    class_count: usize,
}

impl fmt::Debug for Congruence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Congruence{:?}", self.classes())
    }
}

impl Congruence {
    pub fn new(ambient: MSet, class_of: Vec<usize>) -> Result<Self> {
        if class_of.len() != ambient.size() {
            return Err(Error::PartitionSize {
                expected: ambient.size(),
                got: class_of.len(),
            });
        }
        let (class_of, class_count) = normalize_classes(&class_of);
        for x in ambient.elements() {
            for y in (x + 1)..ambient.size() {
                if class_of[x] != class_of[y] {
                    continue;
                }
                for m in ambient.monoid().elements() {
                    if class_of[ambient.act(x, m)] != class_of[ambient.act(y, m)] {
                        return Err(Error::CongruenceNotEquivariant { x, y, m });
                    }
                }
            }
        }
        Ok(Congruence {
            ambient,
            class_of,
            class_count,
        })
    }

    pub fn discrete(ambient: &MSet) -> Congruence {
        Congruence {
            ambient: ambient.clone(),
            class_of: ambient.elements().collect(),
            class_count: ambient.size(),
        }
    }

    pub fn indiscrete(ambient: &MSet) -> Congruence {
        let size = ambient.size();
        Congruence {
            ambient: ambient.clone(),
            class_of: vec![0; size],
            class_count: if size == 0 { 0 } else { 1 },
        }
    }

    pub fn ambient(&self) -> &MSet {
        &self.ambient
    }

    pub fn class_of(&self, x: usize) -> usize {
        self.class_of[x]
    }

    pub fn class_count(&self) -> usize {
        self.class_count
    }

    pub fn related(&self, x: usize, y: usize) -> bool {
        self.class_of[x] == self.class_of[y]
    }

    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.class_count];
        for (x, &c) in self.class_of.iter().enumerate() {
            out[c].push(x);
        }
        out
    }
}

fn normalize_classes(raw: &[usize]) -> (Vec<usize>, usize) {
    let mut renumber: Vec<Option<usize>> = vec![None; raw.len()];
    let mut next = 0;
    let mut out = Vec::with_capacity(raw.len());
    for &c in raw {
        let id = match renumber[c] {
            Some(id) => id,
            None => {
                renumber[c] = Some(next);
                next += 1;
                next - 1
            }
        };
        out.push(id);
    }
    (out, next)
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let ra = self.find(a);
        let rb = self.find(b);
        if ra == rb {
            return false;
        }
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.parent[hi] = lo;
        true
    }
}

/// Least congruence identifying every seed pair: union-find, then each merge
/// propagates the pair's images under every monoid element to a fixpoint.
pub fn congruence_generated(object: &MSet, pairs: &[(usize, usize)]) -> Congruence {
    let mut uf = UnionFind::new(object.size());
    let mut work: Vec<(usize, usize)> = pairs.to_vec();
    while let Some((a, b)) = work.pop() {
        if uf.union(a, b) {
            for m in object.monoid().elements() {
                work.push((object.act(a, m), object.act(b, m)));
            }
        }
    }
    let class_of: Vec<usize> = object.elements().map(|x| uf.find(x)).collect();
    Congruence::new(object.clone(), class_of).expect("generated partitions are equivariant")
}

/// Quotient by a congruence, with the projection.
pub fn quotient(object: &MSet, congruence: &Congruence) -> (MSet, MMap) {
    assert_eq!(congruence.ambient(), object, "congruence must partition the object");
    let order = object.monoid().order();
    let classes = congruence.classes();
    let mut act = Vec::with_capacity(classes.len() * order);
    for class in &classes {
        let representative = class[0];
        for m in 0..order {
            act.push(congruence.class_of(object.act(representative, m)));
        }
    }
    let q = MSet::new(object.monoid(), classes.len(), act)
        .expect("quotient actions are well-defined for congruences");
    let projection = MMap::new(
        object.clone(),
        q.clone(),
        object.elements().map(|x| congruence.class_of(x)).collect(),
    )
    .expect("quotient projections are equivariant");
    (q, projection)
}

/// A binary product with its projections and the row-major pairing.
#[derive(Clone, Debug)]
pub struct Product {
    object: MSet,
    left: MSet,
    right: MSet,
}

impl Product {
    pub fn object(&self) -> &MSet {
        &self.object
    }

    pub fn left(&self) -> &MSet {
        &self.left
    }

    pub fn right(&self) -> &MSet {
        &self.right
    }

    pub fn pair(&self, x: usize, y: usize) -> usize {
        x * self.right.size() + y
    }

    pub fn unpair(&self, p: usize) -> (usize, usize) {
        (p / self.right.size(), p % self.right.size())
    }

    pub fn proj_left(&self) -> MMap {
        let table = (0..self.object.size()).map(|p| self.unpair(p).0).collect();
        MMap::new(self.object.clone(), self.left.clone(), table)
            .expect("projections are equivariant")
    }

    pub fn proj_right(&self) -> MMap {
        let table = (0..self.object.size()).map(|p| self.unpair(p).1).collect();
        MMap::new(self.object.clone(), self.right.clone(), table)
            .expect("projections are equivariant")
    }

    /// The map `(f, g): Z -> X * Y` induced by `f: Z -> X` and `g: Z -> Y`.
    pub fn tuple(&self, f: &MMap, g: &MMap) -> Result<MMap> {
        if f.source() != g.source() || f.target() != &self.left || g.target() != &self.right {
            return Err(Error::ObjectMismatch);
        }
        let table = f
            .table()
            .iter()
            .zip(g.table())
            .map(|(&x, &y)| self.pair(x, y))
            .collect();
        MMap::new(f.source().clone(), self.object.clone(), table)
    }
}

pub fn product(x: &MSet, y: &MSet) -> Result<Product> {
    if x.monoid() != y.monoid() {
        return Err(Error::MonoidMismatch);
    }
    let order = x.monoid().order();
    let size = x.size() * y.size();
    let mut act = Vec::with_capacity(size * order);
    for a in x.elements() {
        for b in y.elements() {
            for m in 0..order {
                act.push(x.act(a, m) * y.size() + y.act(b, m));
            }
        }
    }
    let object = MSet::new(x.monoid(), size, act).expect("product actions are valid");
    Ok(Product {
        object,
        left: x.clone(),
        right: y.clone(),
    })
}

/// The diagonal of `E * E` as a subobject.
pub fn diagonal(e: &MSet) -> (Product, SubMSet) {
    let p = product(e, e).expect("an object always multiplies with itself");
    let mut member = vec![false; p.object().size()];
    for a in e.elements() {
        member[p.pair(a, a)] = true;
    }
    let sub = SubMSet::new(p.object().clone(), member).expect("diagonals are action-closed");
    (p, sub)
}

/// The graph of `f` inside `source * target`.
pub fn graph(f: &MMap) -> (Product, SubMSet) {
    let p = product(f.source(), f.target()).expect("graph lives over one monoid");
    let mut member = vec![false; p.object().size()];
    for x in f.source().elements() {
        member[p.pair(x, f.apply(x))] = true;
    }
    let sub = SubMSet::new(p.object().clone(), member).expect("graphs are action-closed");
    (p, sub)
}

/// Equalizer of a parallel pair, as a subobject of the common source.
pub fn equalizer(f: &MMap, g: &MMap) -> Result<SubMSet> {
    if f.source() != g.source() || f.target() != g.target() {
        return Err(Error::ObjectMismatch);
    }
    let member = f
        .table()
        .iter()
        .zip(g.table())
        .map(|(&a, &b)| a == b)
        .collect();
    Ok(SubMSet::new(f.source().clone(), member).expect("equalizers are action-closed"))
}

/// Kernel pair of `f` as a subobject of `source * source`.
pub fn kernel_pair(f: &MMap) -> (Product, SubMSet) {
    let p = product(f.source(), f.source()).expect("kernel pair lives over one monoid");
    let mut member = vec![false; p.object().size()];
    for a in f.source().elements() {
        for b in f.source().elements() {
            if f.apply(a) == f.apply(b) {
                member[p.pair(a, b)] = true;
            }
        }
    }
    let sub = SubMSet::new(p.object().clone(), member).expect("kernel pairs are action-closed");
    (p, sub)
}

/// Epi-mono factorization of a map through its image.
#[derive(Clone, Debug)]
pub struct ImageFactorization {
    pub epi: MMap,
    pub include: MMap,
    pub image: SubMSet,
}

pub fn image_factorization(f: &MMap) -> ImageFactorization {
    let image = f.image();
    let embedded = image.as_mset();
    let epi = f
        .corestrict(&image)
        .expect("a map corestricts onto its image");
    ImageFactorization {
        epi,
        include: embedded.include,
        image,
    }
}

/// All action-closed subsets in canonical order (size, then membership).
pub fn enumerate_sub_msets(e: &MSet) -> Vec<SubMSet> {
    let n = e.size();
    assert!(n < 64, "subset enumeration is for desk-scale objects");
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << n) {
        let member: Vec<bool> = (0..n).map(|i| mask & (1 << i) != 0).collect();
        if let Ok(sub) = SubMSet::new(e.clone(), member) {
            out.push(sub);
        }
    }
    out.sort_by_key(|s| (s.size(), s.member.clone()));
    out
}

/// All congruences, via restricted-growth strings filtered for equivariance.
pub fn enumerate_congruences(e: &MSet) -> Vec<Congruence> {
    let n = e.size();
    let mut out = Vec::new();
    if n == 0 {
        out.push(Congruence::discrete(e));
        return out;
    }
    let mut labels = vec![0usize; n];
    loop {
        if let Ok(c) = Congruence::new(e.clone(), labels.clone()) {
            out.push(c);
        }
        // Advance the restricted-growth string: labels[i] <= max(prefix) + 1.
        let mut i = n - 1;
        loop {
            if i == 0 {
                return out;
            }
            let cap = labels[..i].iter().max().copied().unwrap_or(0) + 1;
            if labels[i] < cap {
                labels[i] += 1;
                for l in labels.iter_mut().skip(i + 1) {
                    *l = 0;
                }
                break;
            }
            i -= 1;
        }
    }
}

/// Every action table on carriers `0..=max_size`, in a deterministic order.
/// Intended for small scans; the table space is `size^(size * (order - 1))`.
pub fn enumerate_msets(monoid: &Arc<Monoid>, max_size: usize) -> Vec<MSet> {
    let order = monoid.order();
    let e = monoid.identity();
    let mut out = Vec::new();
    for size in 0..=max_size {
        if size == 0 {
            out.push(MSet::empty(monoid));
            continue;
        }
        let free: Vec<usize> = (0..order).filter(|&m| m != e).collect();
        let cells = size * free.len();
        let mut digits = vec![0usize; cells];
        loop {
            let mut act = vec![0usize; size * order];
            for x in 0..size {
                act[x * order + e] = x;
                for (k, &m) in free.iter().enumerate() {
                    act[x * order + m] = digits[x * free.len() + k];
                }
            }
            if let Ok(ms) = MSet::new(monoid, size, act) {
                out.push(ms);
            }
            // Odometer increment.
            let mut i = 0;
            loop {
                if i == cells {
                    break;
                }
                digits[i] += 1;
                if digits[i] < size {
                    break;
                }
                digits[i] = 0;
                i += 1;
            }
            if i == cells {
                break;
            }
        }
    }
    out
}

/// All equivariant maps from `x` to `y`, in lexicographic table order.
pub fn hom_set(x: &MSet, y: &MSet) -> Vec<MMap> {
    assert_eq!(x.monoid(), y.monoid(), "hom-sets live over one monoid");
    let mut out = Vec::new();
    let mut table: Vec<Option<usize>> = vec![None; x.size()];
    search_maps(x, y, &mut table, &mut out);
    out
}

fn search_maps(x: &MSet, y: &MSet, table: &mut Vec<Option<usize>>, out: &mut Vec<MMap>) {
    let Some(first) = table.iter().position(Option::is_none) else {
        let map = MMap {
            source: x.clone(),
            target: y.clone(),
            table: table.iter().map(|v| v.unwrap()).collect(),
        };
        out.push(map);
        return;
    };
    for value in 0..y.size() {
        let mut trail = Vec::new();
        if propagate_assignment(x, y, table, first, value, &mut trail) {
            search_maps(x, y, table, out);
        }
        for cell in trail {
            table[cell] = None;
        }
    }
}

// Assign f(first) = value and close under equivariance; false on conflict.
fn propagate_assignment(
    x: &MSet,
    y: &MSet,
    table: &mut [Option<usize>],
    first: usize,
    value: usize,
    trail: &mut Vec<usize>,
) -> bool {
    let mut stack = vec![(first, value)];
    while let Some((a, b)) = stack.pop() {
        match table[a] {
            Some(existing) => {
                if existing != b {
                    return false;
                }
            }
            None => {
                table[a] = Some(b);
                trail.push(a);
                for m in x.monoid().elements() {
                    stack.push((x.act(a, m), y.act(b, m)));
                }
            }
        }
    }
    true
}
