//! Brute-force structural checks: the center chain and associativity.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::report::{Check, Report};

use super::census::center;
use super::subgroup::Subgroup;
use super::{Group, GroupError, Level};

/// Z(U/Yₖ…Y₆) for each quotient, compared with the expected tail
/// Yⱼ…Y₆, plus `triples` random associativity tests (seeded).
pub fn structure_checks(
    group: &Group,
    budget: u64,
    triples: usize,
    seed: u64,
) -> Result<Report, GroupError> {
    let q = group.q();
    let full = group.at_level(Level::Full);
    let mut rep = Report::new(format!("group structure, q = {q}"));
    let expected: [(Level, &[usize]); 5] = [
        (Level::Full, &[6]),
        (Level::ModY6, &[5, 6]),
        (Level::ModY5Y6, &[4, 5, 6]),
        (Level::ModY4Y5Y6, &[3, 4, 5, 6]),
        (Level::Abelianization, &[1, 2]),
    ];
    for (level, coords) in expected {
        let g = full.at_level(level);
        let z = center(&g, budget)?;
        let want = Subgroup::coordinates(&g, coords);
        let names: Vec<String> = coords.iter().map(|i| format!("Y{i}")).collect();
        rep.check(
            &format!("group/center-{level}"),
            &format!(
                "the center of the {level} quotient is the image of {}",
                names.join("")
            ),
            z == want,
            format!("order {}", z.order()),
        );
    }
    rep.push(associativity_check(&full, triples, seed));
    Ok(rep)
}

/// `triples` random triples (seeded) checked for (ab)c = a(bc).
pub fn associativity_check(group: &Group, triples: usize, seed: u64) -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let bad = (0..triples).find(|_| {
        let (a, b, c) = (
            group.random(&mut rng),
            group.random(&mut rng),
            group.random(&mut rng),
        );
        group.multiply(&group.multiply(&a, &b), &c) != group.multiply(&a, &group.multiply(&b, &c))
    });
    Check::new(
        "group/associativity",
        "random triples associate",
        bad.is_none(),
        match bad {
            None => format!("{triples} triples, seed {seed}"),
            Some(k) => format!("triple {k} fails"),
        },
    )
}
