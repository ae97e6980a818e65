use super::*;

fn all_monoids_up_to(n: usize) -> Vec<FiniteMonoid> {
    (1..=n).flat_map(|k| enumerate_monoids(k).unwrap()).collect()
}

/// Not commutative: left zeros `1` and `2` over the unit `0`.
fn left_zero_monoid() -> FiniteMonoid {
    FiniteMonoid::new(3, 0, vec![vec![0, 1, 2], vec![1, 1, 1], vec![2, 2, 2]]).unwrap()
}

#[test]
fn trivial_monoid_gives_identities_on_y() {
    let lm = left_linear_monoid(&FiniteMonoid::trivial()).unwrap();
    assert_eq!(lm.carrier(), &Polynomial::y());
    for f in [&lm.mu, &lm.nu, &lm.delta, &lm.gamma] {
        assert!(f.is_identity(), "{f}");
    }
    let rc = right_linear_comonoid(&FiniteMonoid::trivial()).unwrap();
    for f in [&rc.mu, &rc.nu, &rc.delta, &rc.gamma] {
        assert!(f.is_identity(), "{f}");
    }
}

#[test]
fn cyclic_coincidence_at_y() {
    // At the only cyclic duality the structures induced from either side agree.
    let one = FiniteSet::new(1);
    let lm = left_linear_monoid(&FiniteMonoid::trivial()).unwrap();
    let rm = right_linear_monoid(&one).unwrap();
    assert_eq!((&lm.delta, &lm.gamma), (&rm.delta, &rm.gamma));
    let lc = left_linear_comonoid(&one).unwrap();
    let rc = right_linear_comonoid(&FiniteMonoid::trivial()).unwrap();
    assert_eq!((&lc.mu, &lc.nu), (&rc.mu, &rc.nu));
}

#[test]
fn concrete_tables() {
    let z2 = FiniteMonoid::cyclic(2).unwrap();
    let lm = left_linear_monoid(&z2).unwrap();
    assert_eq!(lm.mu.on_positions, vec![0, 1, 1, 0]);
    assert_eq!(lm.nu.on_positions, vec![0]);
    assert_eq!(lm.delta.dom, Polynomial::representable(2));
    assert_eq!(lm.delta.on_directions, vec![vec![0, 1, 1, 0]]);
    let rm = right_linear_monoid(&FiniteSet::new(2)).unwrap();
    assert_eq!(rm.mu.on_directions, vec![vec![0, 3]]);
    assert_eq!(rm.delta.on_positions, vec![0, 3]);
    let z3 = FiniteMonoid::cyclic(3).unwrap();
    let rc = right_linear_comonoid(&z3).unwrap();
    assert_eq!(rc.delta.on_directions, vec![vec![0, 1, 2, 1, 2, 0, 2, 0, 1]]);
    assert_eq!(rc.gamma.on_directions, vec![vec![0]]);
    assert_eq!(rc.mu.on_positions, vec![0, 1, 2, 1, 2, 0, 2, 0, 1]);
}

#[test]
fn diagonal_structures_pass_for_small_sets() {
    for n in 0..=4 {
        let a = FiniteSet::new(n);
        let r = right_linear_monoid(&a).unwrap().verify().unwrap();
        assert!(r.pass, "{}", r.summary());
        let r = left_linear_comonoid(&a).unwrap().verify().unwrap();
        assert!(r.pass, "{}", r.summary());
    }
}

#[test]
fn every_small_monoid_gives_both_linear_bialgebras() {
    for mon in all_monoids_up_to(3) {
        for side in [Side::Left, Side::Right] {
            let r = verify_linear_bialgebra(&mon, side).unwrap();
            assert!(r.pass, "{:?} {side}: {}", mon.table(), r.summary());
        }
    }
}

#[test]
fn induced_structures_transport_the_opposite_monoid() {
    let mut noncommutative = 0;
    for mon in all_monoids_up_to(3) {
        let op = mon.opposite();
        let lm = left_linear_monoid(&mon).unwrap();
        assert_eq!((lm.delta, lm.gamma), tensor_comonoid_on_representable(&op).unwrap());
        let rc = right_linear_comonoid(&mon).unwrap();
        assert_eq!((rc.mu, rc.nu), tensor_monoid_on_linear(&op).unwrap());
        if !mon.is_commutative() {
            noncommutative += 1;
            assert_ne!(
                tensor_comonoid_on_representable(&mon).unwrap(),
                tensor_comonoid_on_representable(&op).unwrap()
            );
        }
        let a = FiniteSet::new(mon.order());
        let rm = right_linear_monoid(&a).unwrap();
        assert_eq!((rm.delta, rm.gamma), tensor_comonoid_on_linear(&a).unwrap());
        let lc = left_linear_comonoid(&a).unwrap();
        assert_eq!((lc.mu, lc.nu), tensor_monoid_on_representable(&a).unwrap());
    }
    assert!(noncommutative > 0);
    assert!(!left_zero_monoid().is_commutative());
}

#[test]
fn transported_monoid_is_the_image_under_linear_functor() {
    // The image of `M × M → M` under `A ↦ Ay`, precomposed with the comparison
    // `My ⊗ My ≅ (M × M)y`, which is the identity under the pairing order.
    let mon = left_zero_monoid();
    let (mu, _) = tensor_monoid_on_linear(&mon).unwrap();
    let cmp = monoidal::tensor_map(
        &PolyMap::identity(&Polynomial::linear(3)),
        &PolyMap::identity(&Polynomial::linear(3)),
    )
    .unwrap();
    assert!(cmp.is_identity());
    for (k, &v) in mu.on_positions.iter().enumerate() {
        assert_eq!(v, mon.mul(k / 3, k % 3));
    }
}

#[test]
fn wrong_comultiplication_breaks_the_bialgebra_rule() {
    let z2 = FiniteMonoid::cyclic(2).unwrap();
    let (mu, nu) = tensor_monoid_on_linear(&z2).unwrap();
    let (_, gamma) = tensor_comonoid_on_linear(&FiniteSet::new(2)).unwrap();
    // a ↦ (a, 1 - a) instead of the diagonal.
    let delta = PolyMap::new(
        Polynomial::linear(2),
        Polynomial::linear(4),
        vec![1, 2],
        vec![vec![0]; 2],
    )
    .unwrap();
    let r = check_bialgebra(&Polynomial::linear(2), &mu, &nu, &delta, &gamma).unwrap();
    assert!(!r.pass);
    assert_eq!(r.failed.as_deref(), Some("(i) unit then comultiplication"));
    assert!(!r.parts[3].pass);
    assert!(r.parts[3].counterexample.is_some());
}

#[test]
fn mismatched_carriers_are_rejected() {
    let (mu, nu) = tensor_monoid_on_linear(&FiniteMonoid::cyclic(2).unwrap()).unwrap();
    let (delta, gamma) = tensor_comonoid_on_linear(&FiniteSet::new(3)).unwrap();
    assert!(matches!(
        check_bialgebra(&Polynomial::linear(2), &mu, &nu, &delta, &gamma),
        Err(PolyError::DomainMismatch(_))
    ));
}

#[test]
fn broken_monoid_maps_fail_their_laws() {
    // Left projection on 2y: associative, but `e` is not a left unit.
    let mu = PolyMap::new(
        Polynomial::linear(4),
        Polynomial::linear(2),
        vec![0, 0, 1, 1],
        vec![vec![0]; 4],
    )
    .unwrap();
    let nu = PolyMap::new(Polynomial::y(), Polynomial::linear(2), vec![0], vec![vec![0]]).unwrap();
    let r = monoid_laws(Product::Tensor, &Polynomial::linear(2), &mu, &nu).unwrap();
    assert!(!r.pass);
    assert_eq!(r.failed.as_deref(), Some("left unit"));
    assert!(r.parts[0].pass);
}
