use std::sync::Arc;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use u3d4::d4::{solve_signs, verify_relations, SignAssignment, D4};
use u3d4::gf::Tower;

#[test]
fn sign_search_and_cross_derivation() {
    let t = std::time::Instant::now();
    let search = solve_signs().unwrap();
    eprintln!(
        "sign search: {:?} in {:?}",
        (search.associative.len(), &search.reproducing),
        t.elapsed()
    );
    assert_eq!(search.orbit_count, 6);
    assert_eq!(search.candidates, 64);
    assert!(search.associative.contains(&0));
    assert_eq!(search.reproducing, vec![0]);
    assert_eq!(search.chosen, SignAssignment::all_plus());
    for q in [2, 3] {
        let r = verify_relations(q, &search);
        eprintln!("{r}");
        assert!(r.all_passed(), "{r}");
    }
    eprintln!("total {:?}", t.elapsed());
}

#[test]
fn triality_and_associativity_over_gf8() {
    let d4 = D4::new(
        Arc::new(Tower::for_q(2).unwrap()),
        SignAssignment::all_plus(),
    );
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for _ in 0..10_000 {
        let (a, b, c) = (
            d4.random(&mut rng),
            d4.random(&mut rng),
            d4.random(&mut rng),
        );
        let ab = d4.multiply(&a, &b);
        assert_eq!(d4.multiply(&ab, &c), d4.multiply(&a, &d4.multiply(&b, &c)));
        assert_eq!(
            d4.triality(&ab),
            d4.multiply(&d4.triality(&a), &d4.triality(&b))
        );
        assert_eq!(d4.triality(&d4.triality(&d4.triality(&a))), a);
    }
}

#[test]
fn wrong_signs_break_associativity_in_characteristic_three() {
    let tw = Arc::new(Tower::for_q(3).unwrap());
    let mut bad = 0;
    for bits in 0..64 {
        let d4 = D4::new(Arc::clone(&tw), SignAssignment::from_orbit_bits(bits));
        if !u3d4::d4::is_associative(&d4, &[u3d4::gf::Fe(1), u3d4::gf::Fe(2)]) {
            bad += 1;
        }
    }
    assert_eq!(bad, 48);
}
