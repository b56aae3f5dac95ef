//! Generic collection: rewrites an arbitrary word in root elements into
//! normal form by adjacent swaps, using
//! `yⱼ(u)yᵢ(t) = yᵢ(t)yⱼ(u)[yᵢ(t), yⱼ(u)]⁻¹` for i < j.
//!
//! This is the slow reference path; [`super::Group::multiply`] must agree
//! with it.

use serde::Serialize;

use crate::gf::Fe;

use super::{relation, Group, UElem};

/// The root element y_index(value); `value` lives in the coordinate's field.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Letter {
    pub index: usize,
    pub value: Fe,
}

impl Letter {
    pub fn new(index: usize, value: Fe) -> Self {
        Letter { index, value }
    }
}

/// Letters of the normal form of `g`, zero coordinates omitted.
pub fn word_of(g: &UElem) -> Vec<Letter> {
    (1..=6)
        .filter(|&i| !g.coord(i).is_zero())
        .map(|i| Letter::new(i, g.coord(i)))
        .collect()
}

fn inverse_word(group: &Group, w: &[Letter]) -> Vec<Letter> {
    w.iter()
        .rev()
        .map(|l| Letter::new(l.index, group.coord_field(l.index).neg(l.value)))
        .collect()
}

/// Normal form of the product of `word` in `group` (letters above the
/// group's level are dropped).
pub fn collect(group: &Group, word: &[Letter]) -> UElem {
    let n = group.ncoords();
    let mut w: Vec<Letter> = word
        .iter()
        .copied()
        .filter(|l| l.index <= n && !l.value.is_zero())
        .collect();
    let mut k = 0;
    while k + 1 < w.len() {
        let (a, b) = (w[k], w[k + 1]);
        if a.index < b.index {
            k += 1;
            continue;
        }
        if a.index == b.index {
            let v = group.coord_field(a.index).add(a.value, b.value);
            if v.is_zero() {
                w.drain(k..k + 2);
            } else {
                w[k].value = v;
                w.remove(k + 1);
            }
        } else {
            // y_a(s) y_b(t) with a > b: emit y_b(t) y_a(s) [y_b(t), y_a(s)]^-1
            let corr: Vec<Letter> = inverse_word(
                group,
                &relation(group.tower(), b.index, a.index, b.value, a.value),
            )
            .into_iter()
            .filter(|l| l.index <= n)
            .collect();
            w[k] = b;
            w[k + 1] = a;
            w.splice(k + 2..k + 2, corr);
        }
        k = k.saturating_sub(1);
    }
    let mut c = [Fe::ZERO; 6];
    for l in w {
        c[l.index - 1] = l.value;
    }
    UElem(c)
}

/// gh computed by collection of the concatenated normal forms.
pub fn multiply_by_collection(group: &Group, g: &UElem, h: &UElem) -> UElem {
    let mut w = word_of(g);
    w.extend(word_of(h));
    collect(group, &w)
}

#[cfg(test)]
mod tests {
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    use super::*;
    use crate::group::{Level, NONTRIVIAL_PAIRS};

    #[test]
    fn closed_form_matches_collection() {
        for q in [2, 3, 4, 5, 8] {
            let full = Group::for_q(q, Level::Full).unwrap();
            let mut rng = ChaCha8Rng::seed_from_u64(q as u64);
            for level in Level::ALL {
                let g = full.at_level(level);
                for _ in 0..2000 {
                    let (x, y) = (g.random(&mut rng), g.random(&mut rng));
                    assert_eq!(
                        g.multiply(&x, &y),
                        multiply_by_collection(&g, &x, &y),
                        "q={q} {level}"
                    );
                }
            }
        }
    }

    #[test]
    fn commutator_of_roots_is_the_relation() {
        for q in [2, 3] {
            let g = Group::for_q(q, Level::Full).unwrap();
            for i in 1..=6 {
                for j in i + 1..=6 {
                    for t in g.coord_field(i).elements() {
                        for u in g.coord_field(j).elements() {
                            let c = g.commutator(&g.root(i, t), &g.root(j, u));
                            let want = collect(&g, &relation(g.tower(), i, j, t, u));
                            assert_eq!(c, want);
                            if !NONTRIVIAL_PAIRS.contains(&(i, j)) {
                                assert!(c.is_identity());
                            }
                        }
                    }
                }
            }
        }
    }
}
