//! Cross-module invariants: facts that tie the classifier, the closure
//! operators, the lattice, and the reflections together. Everything is
//! checked exhaustively at desk scale; the property tests at the bottom
//! fuzz the validators against naive reference implementations.

use std::sync::Arc;

use proptest::prelude::*;
use wtop_core::lattice::{compose, enumerate_weak_topologies, join, TopologyClass};
use wtop_core::mset::graph;
use wtop_core::reflection::{
    default_check_family, definitional_separated_check, definitional_sheaf_check, gamma_hat,
    in_c_j, is_separated, is_sheaf, sep_reflect_iterative, separated_reflection,
    sheaf_intersection_check,
};
use wtop_core::topology::weak_ideal_topology;
use wtop_core::{
    enumerate_msets, enumerate_sub_msets, equalizer, hom_set, ElemSet, Error, Guard, MMap, MSet,
    Monoid, Omega, SubMSet, WeakTopology,
};

fn m3() -> Arc<Monoid> {
    Arc::new(Monoid::zero_semigroup_with_identity(2))
}

fn m3_topologies() -> (Arc<Omega>, Vec<WeakTopology>) {
    let omega = Arc::new(Omega::new(&m3()));
    let all = enumerate_weak_topologies(&omega, TopologyClass::All, &Guard::default()).unwrap();
    (omega, all)
}

/// The topology is recovered from its own closure of truth: classifying
/// the closure of the point `{top}` inside the classifier gives back the
/// table of `j`. Checked for every weak topology on every monoid of order
/// at most three.
#[test]
fn truth_characterizes_the_topology() {
    for m in wtop_core::enumerate_monoids(3, true) {
        let m = Arc::new(m);
        let omega = Arc::new(Omega::new(&m));
        let truth = SubMSet::from_indices(omega.object(), &[omega.top()]).unwrap();
        for j in enumerate_weak_topologies(&omega, TopologyClass::All, &Guard::default()).unwrap()
        {
            let closed_truth = j.closure(&truth);
            let classify = omega.char_map(&closed_truth);
            assert_eq!(classify.table(), j.table(), "table {:?}", j.table());
        }
    }
}

/// Closure commutes with preimages along every equivariant map: pulling
/// back the closure is closing the pullback.
#[test]
fn closure_commutes_with_preimages() {
    let (_, topologies) = m3_topologies();
    let objects = enumerate_msets(&m3(), 3);
    for x in &objects {
        for y in &objects {
            for f in hom_set(x, y) {
                for j in &topologies {
                    for sub in enumerate_sub_msets(y) {
                        assert_eq!(
                            f.preimage(&j.closure(&sub)),
                            j.closure(&f.preimage(&sub))
                        );
                    }
                }
            }
        }
    }
}

/// Closure operators compose the same way the topologies do: the closure
/// for `compose(j, k)` is the `j`-closure of the `k`-closure.
#[test]
fn closure_operators_compose() {
    let (_, topologies) = m3_topologies();
    let objects = enumerate_msets(&m3(), 3);
    for j in &topologies {
        for k in &topologies {
            let composite = compose(j, k);
            for e in &objects {
                for sub in enumerate_sub_msets(e) {
                    assert_eq!(composite.closure(&sub), j.closure(&k.closure(&sub)));
                }
            }
        }
    }
}

/// Maps into a separated object have closed graphs and closed equalizers;
/// the identity graph of a non-separated object is not closed.
#[test]
fn separated_targets_have_closed_graphs_and_equalizers() {
    let (_, topologies) = m3_topologies();
    let objects = enumerate_msets(&m3(), 3);
    for j in &topologies {
        for f_object in objects.iter().filter(|e| is_separated(j, e)) {
            for e in &objects {
                let maps = hom_set(e, f_object);
                for f in &maps {
                    let (_, graph_sub) = graph(f);
                    assert_eq!(j.closure(&graph_sub), graph_sub);
                    for g in &maps {
                        let eq = equalizer(f, g).unwrap();
                        assert_eq!(j.closure(&eq), eq);
                    }
                }
            }
        }
    }

    // The regular act under the maximal-ideal topology: its identity graph
    // is the diagonal, and the diagonal is not closed.
    let omega = Arc::new(Omega::new(&m3()));
    let j = weak_ideal_topology(&omega, &ElemSet::from_indices(3, &[1, 2])).unwrap();
    let regular = MSet::regular(&m3());
    let (_, diagonal) = graph(&MMap::identity(&regular));
    assert!(!is_separated(&j, &regular));
    assert_ne!(j.closure(&diagonal), diagonal);
}

/// The searched definitional checks agree with the certified criteria on
/// every object of size at most three: the default family of dense
/// inclusions is rich enough to falsify everything false at this scale.
#[test]
fn definitional_checks_agree_with_certificates() {
    let (_, topologies) = m3_topologies();
    let objects = enumerate_msets(&m3(), 3);
    for j in &topologies {
        for e in &objects {
            let family = default_check_family(j, e);
            assert_eq!(
                definitional_separated_check(j, e, &family).holds,
                is_separated(j, e),
                "separated disagreement at table {:?} on size {}",
                j.table(),
                e.size()
            );
            assert_eq!(
                definitional_sheaf_check(j, e, &family).holds,
                is_sheaf(j, e, &Guard::default()).unwrap(),
                "sheaf disagreement at table {:?} on size {}",
                j.table(),
                e.size()
            );
        }
    }
}

/// Density of a subobject is the same as bidensity of its inclusion map.
#[test]
fn dense_subobjects_are_the_bidense_inclusions() {
    let (_, topologies) = m3_topologies();
    let objects = enumerate_msets(&m3(), 3);
    for j in &topologies {
        for e in &objects {
            for sub in enumerate_sub_msets(e) {
                let include = sub.as_mset().include;
                assert_eq!(j.is_dense(&sub), j.is_bidense(&include));
            }
        }
    }
}

/// On objects with closed double-diagonal, the one-step quotient and the
/// iterated reflection give the same separated quotient.
#[test]
fn iterative_reflection_matches_the_quotient() {
    let (_, topologies) = m3_topologies();
    let objects = enumerate_msets(&m3(), 3);
    for j in &topologies {
        for e in &objects {
            let (iterated, iterated_unit) = sep_reflect_iterative(j, e).unwrap();
            assert!(is_separated(j, &iterated));
            assert!(iterated_unit.is_surjective());
            if in_c_j(j, e) {
                let (quotient, unit) = separated_reflection(j, e).unwrap();
                assert!(is_separated(j, &quotient));
                assert_eq!(quotient.size(), iterated.size());
                assert!(unit.is_surjective());
            }
            if is_separated(j, e) {
                assert_eq!(iterated.size(), e.size());
            }
        }
    }
}

/// The singleton transpose out of a separated object is injective.
#[test]
fn gamma_hat_is_injective_on_separated_objects() {
    let (_, topologies) = m3_topologies();
    let objects = enumerate_msets(&m3(), 3);
    for j in topologies.iter().filter(|j| j.is_productive()) {
        for e in objects.iter().filter(|e| is_separated(j, e)) {
            let hat = gamma_hat(j, e, &Guard::default()).unwrap();
            assert!(hat.map.is_injective());
        }
    }
}

/// The order-four diamond semilattice carries a weak topology that is not
/// productive: the join of the two incomparable principal ideal topologies.
/// Everything that requires productivity refuses it honestly.
#[test]
fn a_non_productive_weak_topology_exists() {
    // Commutative idempotent monoid on {1, a, b, 0} with ab = 0.
    let mult = vec![0, 1, 2, 3, 1, 1, 3, 3, 2, 3, 2, 3, 3, 3, 3, 3];
    let diamond = Arc::new(Monoid::new(4, mult, 0).unwrap());
    let omega = Arc::new(Omega::new(&diamond));
    assert_eq!(omega.size(), 6);

    let guard = Guard::default();
    let all = enumerate_weak_topologies(&omega, TopologyClass::All, &guard).unwrap();
    let productive =
        enumerate_weak_topologies(&omega, TopologyClass::Productive, &guard).unwrap();
    assert!(
        productive.len() < all.len(),
        "{} productive out of {}",
        productive.len(),
        all.len()
    );

    let j_a = weak_ideal_topology(&omega, &ElemSet::from_indices(4, &[1, 3])).unwrap();
    let j_b = weak_ideal_topology(&omega, &ElemSet::from_indices(4, &[2, 3])).unwrap();
    assert!(j_a.is_productive() && j_b.is_productive());
    let joined = join(&j_a, &j_b);
    assert!(!joined.is_productive());

    // A concrete meet the join fails to preserve.
    let witness = (0..omega.size())
        .flat_map(|x| (0..omega.size()).map(move |y| (x, y)))
        .find(|&(x, y)| {
            joined.apply(omega.meet(x, y)) != omega.meet(joined.apply(x), joined.apply(y))
        });
    assert!(witness.is_some());

    let terminal = MSet::terminal(&diamond);
    assert!(matches!(
        is_sheaf(&joined, &terminal, &guard),
        Err(Error::NotProductive)
    ));
    assert!(matches!(
        sheaf_intersection_check(&joined, &j_a, 2, &guard),
        Err(Error::NotProductive)
    ));
}

/// Separatedness passes to finite products, subobjects, and equalizers;
/// sheafhood passes to products small enough for the guard.
#[test]
fn separated_and_sheaf_closure_properties() {
    let (_, topologies) = m3_topologies();
    let objects = enumerate_msets(&m3(), 3);
    let guard = Guard::default();
    for j in &topologies {
        let separated: Vec<&MSet> = objects.iter().filter(|e| is_separated(j, e)).collect();
        for e in &separated {
            // Subobjects of a separated object are separated.
            for sub in enumerate_sub_msets(e) {
                assert!(is_separated(j, &sub.as_mset().object));
            }
            for f_object in &separated {
                let p = wtop_core::product(e, f_object).unwrap();
                assert!(is_separated(j, p.object()));
                // Equalizers of maps between separated objects are separated.
                for f in hom_set(e, f_object) {
                    for g in hom_set(e, f_object) {
                        let eq = equalizer(&f, &g).unwrap();
                        assert!(is_separated(j, &eq.as_mset().object));
                    }
                }
                // Sheaves are closed under products within the guard.
                if p.object().size() <= 4
                    && is_sheaf(j, e, &guard).unwrap()
                    && is_sheaf(j, f_object, &guard).unwrap()
                {
                    assert!(is_sheaf(j, p.object(), &guard).unwrap());
                }
            }
        }
    }
}

/// For a dense subobject B of A, restriction along the inclusion is an
/// injection hom(A, C) -> hom(B, C) whenever C is separated.
#[test]
fn restriction_to_dense_subobjects_is_injective() {
    let (_, topologies) = m3_topologies();
    let objects = enumerate_msets(&m3(), 3);
    for j in &topologies {
        let separated: Vec<&MSet> = objects.iter().filter(|e| is_separated(j, e)).collect();
        for a in &objects {
            for b in enumerate_sub_msets(a).into_iter().filter(|b| j.is_dense(b)) {
                let dense_indices = b.indices();
                for c in &separated {
                    let maps = hom_set(a, c);
                    for (i, f) in maps.iter().enumerate() {
                        for g in &maps[i + 1..] {
                            assert!(
                                !f.agrees_with_on(g, &dense_indices),
                                "distinct maps agree on a dense subobject of a separated target"
                            );
                        }
                    }
                }
            }
        }
    }
}

/// The graph of the identity is the diagonal, so its closedness is exactly
/// separatedness.
#[test]
fn identity_graph_closed_iff_separated() {
    let (_, topologies) = m3_topologies();
    let objects = enumerate_msets(&m3(), 3);
    for j in &topologies {
        for e in &objects {
            let (_, diag) = graph(&MMap::identity(e));
            assert_eq!(j.closure(&diag) == diag, is_separated(j, e));
        }
    }
}

/// The kernel pair of the sheafification composite is the closed diagonal.
#[test]
fn sheafify_composite_kernel_pair_is_the_closed_diagonal() {
    let (_, topologies) = m3_topologies();
    let objects = enumerate_msets(&m3(), 3);
    let guard = Guard::default();
    for j in topologies.iter().filter(|j| j.is_productive()) {
        for e in objects.iter().filter(|e| in_c_j(j, e)) {
            let (_, i_e) = wtop_core::reflection::sheafify_cj(j, e, &guard).unwrap();
            let (_, kp) = wtop_core::mset::kernel_pair(&i_e);
            let report = wtop_core::reflection::diagonal_closure_report(j, e);
            assert_eq!(kp, report.delta_bar);
        }
    }
}

/// For idempotent topologies the singleton transpose factors through the
/// retraction onto the fixed points: gamma-hat is "apply j, then locate in
/// the fixed-point object" composed with the plain singleton map.
#[test]
fn gamma_hat_factors_through_the_retraction_when_idempotent() {
    let (omega, topologies) = m3_topologies();
    let objects = enumerate_msets(&m3(), 3);
    let guard = Guard::default();
    for j in topologies.iter().filter(|j| j.is_idempotent()) {
        for e in objects.iter().filter(|e| is_separated(j, e)) {
            let hat = gamma_hat(j, e, &guard).unwrap();
            let (full_exp, singleton) = wtop_core::singleton_map(&omega, e, &guard).unwrap();
            let fixed = hat.omega_j.include.table().to_vec();
            let retract: Vec<usize> = (0..omega.size())
                .map(|k| {
                    fixed
                        .iter()
                        .position(|&v| v == j.apply(k))
                        .expect("j lands in its fixed points")
                })
                .collect();
            for x in e.elements() {
                let plain = full_exp.element_table(singleton.apply(x));
                let retracted: Vec<usize> = plain.iter().map(|&v| retract[v]).collect();
                let expected = hat
                    .exponential
                    .element_index(&retracted)
                    .expect("the retracted table is equivariant");
                assert_eq!(hat.map.apply(x), expected);
            }
        }
    }
}

/// Validators against naive reference checks, on randomized inputs.
mod validator_properties {
    use super::*;

    fn reference_monoid_check(order: usize, mult: &[usize], identity: usize) -> bool {
        let at = |a: usize, b: usize| mult[a * order + b];
        (0..order).all(|a| at(identity, a) == a && at(a, identity) == a)
            && (0..order).all(|a| {
                (0..order).all(|b| (0..order).all(|c| at(at(a, b), c) == at(a, at(b, c))))
            })
    }

    fn reference_topology_check(omega: &Omega, table: &[usize]) -> bool {
        let order = omega.monoid().order();
        table[omega.top()] == omega.top()
            && (0..omega.size()).all(|k| {
                (0..order).all(|m| omega.act(table[k], m) == table[omega.act(k, m)])
            })
            && (0..omega.size()).all(|a| {
                (0..omega.size()).all(|b| {
                    !omega.leq(a, b) || omega.leq(table[a], table[b])
                })
            })
    }

    proptest! {
        #[test]
        fn monoid_validator_matches_reference(
            mult in proptest::collection::vec(0usize..3, 9),
            identity in 0usize..3,
        ) {
            let valid = Monoid::new(3, mult.clone(), identity).is_ok();
            prop_assert_eq!(valid, reference_monoid_check(3, &mult, identity));
        }

        #[test]
        fn topology_validator_matches_reference(
            table in proptest::collection::vec(0usize..4, 4),
        ) {
            let omega = Arc::new(Omega::new(&m3()));
            let valid = WeakTopology::new(&omega, table.clone()).is_ok();
            prop_assert_eq!(valid, reference_topology_check(&omega, &table));
        }

        #[test]
        fn closure_is_inflationary_and_monotone(
            members in proptest::collection::vec(proptest::bool::ANY, 3),
            extra in 0usize..3,
            which in 0usize..4,
        ) {
            let (_, topologies) = m3_topologies();
            let j = &topologies[which];
            let regular = MSet::regular(&m3());
            let indices: Vec<usize> =
                (0..3).filter(|&i| members[i]).collect();
            if let Ok(sub) = SubMSet::from_indices(&regular, &indices) {
                let bar = j.closure(&sub);
                prop_assert!(sub.is_subset_of(&bar));
                let mut larger = indices.clone();
                if !larger.contains(&extra) {
                    larger.push(extra);
                }
                if let Ok(sup) = SubMSet::from_indices(&regular, &larger) {
                    prop_assert!(bar.is_subset_of(&j.closure(&sup)));
                }
            }
        }
    }
}
