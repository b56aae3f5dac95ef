use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use u3d4::gf::Fe;
use u3d4::group::collect::multiply_by_collection;
use u3d4::group::{
    center, conjugacy_census, exponent, Group, Level, Subgroup, UElem, DEFAULT_CENSUS_BUDGET,
    NONTRIVIAL_PAIRS,
};

fn k_u(q: i64) -> i64 {
    if q % 2 == 0 {
        2 * q.pow(5) + 5 * q.pow(4) - 4 * q.pow(3) - q * q - 4 * q + 3
    } else {
        2 * q.pow(5) + 2 * q.pow(4) - q.pow(3) - q * q - q
    }
}

#[test]
fn associativity_random_triples() {
    for q in [2, 3, 4] {
        let g = Group::for_q(q, Level::Full).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(100 + q as u64);
        for _ in 0..10_000 {
            let (a, b, c) = (g.random(&mut rng), g.random(&mut rng), g.random(&mut rng));
            assert_eq!(
                g.multiply(&g.multiply(&a, &b), &c),
                g.multiply(&a, &g.multiply(&b, &c))
            );
        }
    }
}

#[test]
fn associativity_exhaustive_on_a_subset() {
    let g = Group::for_q(2, Level::Full).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let s: Vec<UElem> = (0..32).map(|_| g.random(&mut rng)).collect();
    for a in &s {
        for b in &s {
            let ab = g.multiply(a, b);
            assert_eq!(ab, multiply_by_collection(&g, a, b));
            for c in &s {
                assert_eq!(g.multiply(&ab, c), g.multiply(a, &g.multiply(b, c)));
            }
        }
    }
}

fn check_commutator_support(g: &Group, samples: Option<usize>) {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for i in 1..=6 {
        for j in i + 1..=6 {
            let (fi, fj) = (g.coord_field(i), g.coord_field(j));
            let pairs: Vec<(Fe, Fe)> = match samples {
                None => fi
                    .elements()
                    .flat_map(|t| fj.elements().map(move |u| (t, u)))
                    .collect(),
                Some(n) => (0..n)
                    .map(|_| {
                        let t = g.random(&mut rng).coord(i);
                        let u = g.random(&mut rng).coord(j);
                        (t, u)
                    })
                    .collect(),
            };
            for (t, u) in pairs {
                let c = g.commutator(&g.root(i, t), &g.root(j, u));
                if !NONTRIVIAL_PAIRS.contains(&(i, j)) {
                    assert!(c.is_identity(), "[y{i}, y{j}] should vanish");
                }
                assert!(c.support().iter().all(|&k| k > j));
            }
        }
    }
}

#[test]
fn commutator_support() {
    check_commutator_support(&Group::for_q(2, Level::Full).unwrap(), None);
    check_commutator_support(&Group::for_q(3, Level::Full).unwrap(), Some(2000));
    check_commutator_support(&Group::for_q(4, Level::Full).unwrap(), Some(2000));
}

#[test]
fn relation_coordinates() {
    for q in [2, 3, 4] {
        let g = Group::for_q(q, Level::Full).unwrap();
        let tw = g.tower();
        let (b, e) = (tw.base(), tw.ext());
        for t in e.elements() {
            for u in e.elements().step_by(if q == 4 { 3 } else { 1 }) {
                let tr = e.add(
                    e.add(e.mul(t, tw.bar(u)), e.mul(tw.bar(t), tw.bar2(u))),
                    e.mul(tw.bar2(t), u),
                );
                let tr = tw.project(tr).unwrap();
                let c24 = g.commutator(&g.root(2, t), &g.root(4, u));
                assert_eq!(c24, g.root(5, tr));
                let c34 = g.commutator(&g.root(3, t), &g.root(4, u));
                assert_eq!(c34, g.root(6, tr));
                let c23 = g.commutator(&g.root(2, t), &g.root(3, u));
                assert_eq!(
                    c23.coord(4),
                    e.add(e.mul(t, tw.bar(u)), e.mul(tw.bar(t), u))
                );
            }
        }
        for t in b.elements() {
            for u in e.elements() {
                let c12 = g.commutator(&g.root(1, t), &g.root(2, u));
                assert_eq!(c12.coord(3), e.mul(tw.embed(t), u));
            }
            for u in b.elements() {
                assert_eq!(
                    g.commutator(&g.root(1, t), &g.root(5, u)),
                    g.root(6, b.mul(t, u))
                );
            }
        }
    }
}

#[test]
fn conjugation_preserves_order() {
    let g = Group::for_q(3, Level::Full).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..500 {
        let (x, y) = (g.random(&mut rng), g.random(&mut rng));
        assert_eq!(g.element_order(&g.conjugate(&x, &y)), g.element_order(&x));
    }
}

#[test]
fn center_chain() {
    for q in [2, 3] {
        let full = Group::for_q(q, Level::Full).unwrap();
        let expected: [&[usize]; 4] = [&[6], &[5, 6], &[4, 5, 6], &[3, 4, 5, 6]];
        for (level, coords) in Level::ALL.into_iter().zip(expected) {
            let g = full.at_level(level);
            let z = center(&g, DEFAULT_CENSUS_BUDGET).unwrap();
            assert_eq!(z, Subgroup::coordinates(&g, coords), "q={q} {level}");
        }
        let ab = full.at_level(Level::Abelianization);
        assert_eq!(
            center(&ab, DEFAULT_CENSUS_BUDGET).unwrap(),
            Subgroup::whole(&ab)
        );
        assert_eq!(ab.order(), (q as u64).pow(4));
    }
    let g = Group::for_q(2, Level::Full).unwrap();
    let z = center(&g, DEFAULT_CENSUS_BUDGET).unwrap().elements();
    assert_eq!(z.len(), 2);
    assert!(z.iter().all(|x| x.support().iter().all(|&i| i == 6)));
    // Z(U/Y6) = Y5Y6/Y6: order q in the quotient, q^2 for the preimage in U
    let g3 = Group::for_q(3, Level::ModY6).unwrap();
    let z3 = center(&g3, DEFAULT_CENSUS_BUDGET).unwrap().order();
    assert_eq!(z3, 3);
    assert_eq!(z3 * 3, 9);
    let g2 = Group::for_q(2, Level::ModY4Y5Y6).unwrap();
    assert_eq!(center(&g2, DEFAULT_CENSUS_BUDGET).unwrap().order(), 8);
}

#[test]
fn class_numbers_q2_q3() {
    for q in [2, 3] {
        let g = Group::for_q(q, Level::Full).unwrap();
        let cd = conjugacy_census(&g, DEFAULT_CENSUS_BUDGET).unwrap();
        assert_eq!(cd.len() as i64, k_u(q as i64));
        assert_eq!(cd.sizes.iter().sum::<u64>(), g.order());
        let p = g.tower().p() as u64;
        for &s in &cd.sizes {
            let mut s = s;
            while s % p == 0 {
                s /= p;
            }
            assert_eq!(s, 1);
        }
        let again = conjugacy_census(&g, DEFAULT_CENSUS_BUDGET).unwrap();
        assert_eq!(again.reps, cd.reps);
    }
}

#[test]
fn exponent_q2() {
    let g = Group::for_q(2, Level::Full).unwrap();
    assert_eq!(exponent(&g, DEFAULT_CENSUS_BUDGET).unwrap(), 8);
}

#[test]
#[ignore = "q = 4 census; covered by the acceptance target"]
fn class_number_q4() {
    let g = Group::for_q(4, Level::Full).unwrap();
    let t = std::time::Instant::now();
    let cd = conjugacy_census(&g, DEFAULT_CENSUS_BUDGET).unwrap();
    eprintln!("q=4 census: {} classes in {:?}", cd.len(), t.elapsed());
    assert_eq!(cd.len() as i64, k_u(4));
}
