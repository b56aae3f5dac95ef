//! The defining commutator relations of U.
//!
//! With ū = ρ(u) = u^q, N the norm and Tr the trace from GF(q³) to GF(q):
//!
//! ```text
//! [y₁(t), y₂(u)] = y₃(tu) y₄(−tuū) y₅(t·N(u)) y₆(t²·N(u))
//! [y₂(t), y₃(u)] = y₄(tū + t̄u) y₅(−Tr(t t̄ ρ²(u))) y₆(−Tr(t ū ρ²(u)))
//! [y₂(t), y₄(u)] = y₅(Tr(tū))
//! [y₃(t), y₄(u)] = y₆(Tr(tū))
//! [y₁(t), y₅(u)] = y₆(tu)
//! ```
//!
//! and every other pair of root subgroups commutes. Commutators are
//! `[a, b] = a⁻¹b⁻¹ab`.

use crate::gf::{Fe, Tower};

use super::collect::Letter;

/// Pairs (i, j), i < j, whose root subgroups do not commute.
pub const NONTRIVIAL_PAIRS: [(usize, usize); 5] = [(1, 2), (2, 3), (2, 4), (3, 4), (1, 5)];

/// The normal-form word of [yᵢ(t), yⱼ(u)] for i < j, with zero letters
/// omitted. `t` and `u` are in the fields of coordinates i and j.
pub fn relation(tower: &Tower, i: usize, j: usize, t: Fe, u: Fe) -> Vec<Letter> {
    assert!(
        1 <= i && i < j && j <= 6,
        "relation needs 1 <= i < j <= 6, got ({i}, {j})"
    );
    let (b, e) = (tower.base(), tower.ext());
    let word: Vec<Letter> = match (i, j) {
        (1, 2) => {
            let tu = e.mul(tower.embed(t), u);
            let n = tower.norm(u);
            vec![
                Letter::new(3, tu),
                Letter::new(4, e.neg(e.mul(tu, tower.bar(u)))),
                Letter::new(5, b.mul(t, n)),
                Letter::new(6, b.mul(b.mul(t, t), n)),
            ]
        }
        (2, 3) => {
            let y4 = e.add(e.mul(t, tower.bar(u)), e.mul(tower.bar(t), u));
            let y5 = tower.trace(e.mul(e.mul(t, tower.bar(t)), tower.bar2(u)));
            let y6 = tower.trace(e.mul(e.mul(t, tower.bar(u)), tower.bar2(u)));
            vec![
                Letter::new(4, y4),
                Letter::new(5, b.neg(y5)),
                Letter::new(6, b.neg(y6)),
            ]
        }
        (2, 4) => vec![Letter::new(5, tower.trace(e.mul(t, tower.bar(u))))],
        (3, 4) => vec![Letter::new(6, tower.trace(e.mul(t, tower.bar(u))))],
        (1, 5) => vec![Letter::new(6, b.mul(t, u))],
        _ => Vec::new(),
    };
    word.into_iter().filter(|l| !l.value.is_zero()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn higher_letters_and_base_values() {
        for q in [2, 3, 4] {
            let tw = Tower::for_q(q).unwrap();
            for &(i, j) in &NONTRIVIAL_PAIRS {
                let ti = if super::super::is_ext_coord(i) {
                    tw.ext()
                } else {
                    tw.base()
                };
                let tj = if super::super::is_ext_coord(j) {
                    tw.ext()
                } else {
                    tw.base()
                };
                for t in ti.elements() {
                    for u in tj.elements() {
                        let w = relation(&tw, i, j, t, u);
                        assert!(w.windows(2).all(|p| p[0].index < p[1].index));
                        assert!(w.iter().all(|l| l.index > j));
                        if t.is_zero() || u.is_zero() {
                            assert!(w.is_empty());
                        }
                    }
                }
            }
        }
    }
}
