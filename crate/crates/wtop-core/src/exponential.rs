//! Exponential objects `Y^X`.
//!
//! A point of `Y^X` is an equivariant map `g` from the product of the
//! regular act with `X` to `Y`, acted on by `(g * m)(n, x) = g(mn, x)`.
//! Evaluation plugs in the identity: `ev(g, x) = g(1, x)`. Element tables
//! are stored in lexicographic order, so index lookups binary-search.
//!
//! Exponentials are the one construction here whose size can explode, so
//! building one is gated by [`Guard`]: first on the cell count `|M| * |X|`,
//! then on the number of cell assignments the search is allowed to try.

use crate::error::{Error, Result};
use crate::mset::{product, MMap, MSet, Product};
use crate::omega::Omega;
use crate::Guard;

#[derive(Debug, Clone)]
pub struct Exponential {
    object: MSet,
    base: MSet,
    target: MSet,
    /// One table per point; cell `n * |X| + x` holds `g(n, x)`.
    elements: Vec<Vec<usize>>,
}

pub fn exponential(base: &MSet, target: &MSet, guard: &Guard) -> Result<Exponential> {
    if base.monoid() != target.monoid() {
        return Err(Error::MonoidMismatch);
    }
    let monoid = base.monoid();
    let order = monoid.order();
    let cells = order * base.size();
    if cells > guard.max_exponential_cells {
        return Err(Error::ExponentialCells {
            cells,
            limit: guard.max_exponential_cells,
        });
    }
    let regular = MSet::regular(monoid);
    let p = product(&regular, base).expect("the function domain always exists");
    let elements = guarded_hom_tables(p.object(), target, guard.max_exponential_assignments)?;

    let size = elements.len();
    let mut act = Vec::with_capacity(size * order);
    for table in &elements {
        for m in 0..order {
            let mut moved = Vec::with_capacity(table.len());
            for n in 0..order {
                for x in 0..base.size() {
                    moved.push(table[monoid.mul(m, n) * base.size() + x]);
                }
            }
            let index = elements
                .binary_search(&moved)
                .expect("the action stays inside the element list");
            act.push(index);
        }
    }
    let object = MSet::new(monoid, size, act).expect("the exponential action is valid");
    Ok(Exponential {
        object,
        base: base.clone(),
        target: target.clone(),
        elements,
    })
}

impl Exponential {
    pub fn object(&self) -> &MSet {
        &self.object
    }

    pub fn base(&self) -> &MSet {
        &self.base
    }

    pub fn target(&self) -> &MSet {
        &self.target
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn element_table(&self, index: usize) -> &[usize] {
        &self.elements[index]
    }

    pub fn element_index(&self, table: &[usize]) -> Option<usize> {
        self.elements
            .binary_search_by(|probe| probe.as_slice().cmp(table))
            .ok()
    }

    /// `g(n, x)` for the point with the given index.
    pub fn value(&self, index: usize, n: usize, x: usize) -> usize {
        self.elements[index][n * self.base.size() + x]
    }

    /// `ev(g, x) = g(1, x)`.
    pub fn ev(&self, index: usize, x: usize) -> usize {
        self.value(index, self.object.monoid().identity(), x)
    }

    pub fn evaluation_map(&self) -> (Product, MMap) {
        let p = product(&self.object, &self.base).expect("evaluation domain exists");
        let table = (0..p.object().size())
            .map(|pt| {
                let (g, x) = p.unpair(pt);
                self.ev(g, x)
            })
            .collect();
        let map = MMap::new(p.object().clone(), self.target.clone(), table)
            .expect("evaluation is equivariant");
        (p, map)
    }

    /// Currying: turn `f: Z * X -> Y` into `Z -> Y^X`, where `zx` is the
    /// product `f` was defined on.
    pub fn transpose(&self, zx: &Product, f: &MMap) -> Result<MMap> {
        if zx.right() != &self.base || f.source() != zx.object() || f.target() != &self.target {
            return Err(Error::ObjectMismatch);
        }
        let z = zx.left();
        let order = self.object.monoid().order();
        let mut table = Vec::with_capacity(z.size());
        for a in z.elements() {
            let mut curried = Vec::with_capacity(order * self.base.size());
            for n in 0..order {
                for x in self.base.elements() {
                    curried.push(f.apply(zx.pair(z.act(a, n), x)));
                }
            }
            let index = self
                .element_index(&curried)
                .expect("curried maps are equivariant, hence present");
            table.push(index);
        }
        MMap::new(z.clone(), self.object.clone(), table)
    }
}

/// The exponential `Omega^E` together with the singleton map `E -> Omega^E`
/// currying the equality character on `E * E`.
pub fn singleton_map(omega: &Omega, e: &MSet, guard: &Guard) -> Result<(Exponential, MMap)> {
    let exp = exponential(e, omega.object(), guard)?;
    let (square, delta) = omega.delta_map(e);
    let map = exp.transpose(&square, &delta)?;
    Ok((exp, map))
}

/// All equivariant tables from `x` to `y` in lexicographic order, counting
/// every attempted cell assignment against `limit`.
fn guarded_hom_tables(x: &MSet, y: &MSet, limit: usize) -> Result<Vec<Vec<usize>>> {
    struct Search<'a> {
        x: &'a MSet,
        y: &'a MSet,
        used: usize,
        limit: usize,
        out: Vec<Vec<usize>>,
    }

    impl Search<'_> {
        fn run(&mut self, table: &mut Vec<Option<usize>>) -> Result<()> {
            let Some(first) = table.iter().position(Option::is_none) else {
                self.out.push(table.iter().map(|v| v.unwrap()).collect());
                return Ok(());
            };
            for value in 0..self.y.size() {
                let mut trail = Vec::new();
                let ok = self.assign(table, first, value, &mut trail)?;
                if ok {
                    self.run(table)?;
                }
                for cell in trail {
                    table[cell] = None;
                }
            }
            Ok(())
        }

        // Set table[first] = value and close under equivariance.
        fn assign(
            &mut self,
            table: &mut [Option<usize>],
            first: usize,
            value: usize,
            trail: &mut Vec<usize>,
        ) -> Result<bool> {
            let mut stack = vec![(first, value)];
            while let Some((a, b)) = stack.pop() {
                match table[a] {
                    Some(existing) => {
                        if existing != b {
                            return Ok(false);
                        }
                    }
                    None => {
                        self.used += 1;
                        if self.used > self.limit {
                            return Err(Error::ExponentialAssignments { limit: self.limit });
                        }
                        table[a] = Some(b);
                        trail.push(a);
                        for m in self.x.monoid().elements() {
                            stack.push((self.x.act(a, m), self.y.act(b, m)));
                        }
                    }
                }
            }
            Ok(true)
        }
    }

    let mut search = Search {
        x,
        y,
        used: 0,
        limit,
        out: Vec::new(),
    };
    let mut table: Vec<Option<usize>> = vec![None; x.size()];
    search.run(&mut table)?;
    Ok(search.out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monoid::Monoid;
    use crate::mset::enumerate_sub_msets;
    use crate::mset::hom_set;
    use std::sync::Arc;

    fn m3() -> Arc<Monoid> {
        Arc::new(Monoid::zero_semigroup_with_identity(2))
    }

    fn guard() -> Guard {
        Guard::default()
    }

    #[test]
    fn power_of_the_terminal_recovers_the_target() {
        let m = m3();
        let one = MSet::terminal(&m);
        let reg = MSet::regular(&m);
        let exp = exponential(&one, &reg, &guard()).unwrap();
        assert_eq!(exp.len(), reg.size());
        // Evaluation at the unique base point is an isomorphism.
        let table: Vec<usize> = (0..exp.len()).map(|g| exp.ev(g, 0)).collect();
        let eval = MMap::new(exp.object().clone(), reg.clone(), table).unwrap();
        assert!(eval.is_injective());
        assert!(eval.is_surjective());
    }

    #[test]
    fn trivial_monoid_exponentials_count_all_functions() {
        let m = Arc::new(Monoid::trivial());
        let x = MSet::trivial(&m, 3);
        let y = MSet::trivial(&m, 2);
        let exp = exponential(&x, &y, &guard()).unwrap();
        assert_eq!(exp.len(), 8);
        let none = exponential(&x, &MSet::empty(&m), &guard()).unwrap();
        assert!(none.is_empty());
        let unit = exponential(&MSet::empty(&m), &y, &guard()).unwrap();
        assert_eq!(unit.len(), 1);
    }

    #[test]
    fn classifier_power_counts_subobjects_of_the_square() {
        let m = m3();
        let omega = Omega::new(&m);
        let reg = MSet::regular(&m);
        let exp = exponential(&reg, omega.object(), &guard()).unwrap();
        let square = crate::mset::product(&reg, &reg).unwrap();
        assert_eq!(exp.len(), enumerate_sub_msets(square.object()).len());
    }

    #[test]
    fn transpose_is_the_currying_bijection() {
        let m = m3();
        let reg = MSet::regular(&m);
        let one = MSet::terminal(&m);
        let exp = exponential(&reg, &reg, &guard()).unwrap();
        let zx = product(&one, &reg).unwrap();
        let maps = hom_set(zx.object(), &reg);
        let mut seen = Vec::new();
        for f in &maps {
            let lambda = exp.transpose(&zx, f).unwrap();
            // Round-trip through evaluation recovers the original map.
            for z in one.elements() {
                for x in reg.elements() {
                    assert_eq!(exp.ev(lambda.apply(z), x), f.apply(zx.pair(z, x)));
                }
            }
            seen.push(lambda.table().to_vec());
        }
        seen.sort();
        seen.dedup();
        assert_eq!(seen.len(), maps.len());
        assert_eq!(seen.len(), hom_set(&one, exp.object()).len());
    }

    #[test]
    fn singleton_of_the_zero_element_is_its_equality_row() {
        let m = m3();
        let omega = Omega::new(&m);
        let reg = MSet::regular(&m);
        let (exp, sing) = singleton_map(&omega, &reg, &guard()).unwrap();
        assert!(MMap::new(reg.clone(), exp.object().clone(), sing.table().to_vec()).is_ok());
        // The zero element absorbs, so its curried table repeats one row:
        // how long each other element agrees with zero.
        let g = sing.apply(1);
        assert_eq!(exp.element_table(g), &[1, 3, 2, 1, 3, 2, 1, 3, 2]);
        // Singleton maps are injective.
        assert!(sing.is_injective());
    }

    #[test]
    fn guards_refuse_oversized_requests() {
        let m = m3();
        let reg = MSet::regular(&m);
        let tight = Guard {
            max_exponential_cells: 8,
            ..Guard::default()
        };
        assert_eq!(
            exponential(&reg, &reg, &tight).unwrap_err(),
            Error::ExponentialCells { cells: 9, limit: 8 }
        );
        let starved = Guard {
            max_exponential_assignments: 4,
            ..Guard::default()
        };
        assert!(matches!(
            exponential(&reg, &reg, &starved).unwrap_err(),
            Error::ExponentialAssignments { .. }
        ));
    }
}
