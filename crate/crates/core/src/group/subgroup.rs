//! Subgroups that are products of additive subgroups of the coordinates:
//! {g : tᵢ(g) ∈ Aᵢ for all i}. Every subgroup used in the character
//! constructions (coordinate subgroups, inertia groups such as H·{1, y₂(t₀)})
//! has this shape.

use std::collections::HashSet;

use crate::gf::{Fe, Field};

use super::{Group, UElem};

/// A GF(p)-subspace of a coordinate field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    basis: Vec<Fe>,
    members: Vec<Fe>,
    mask: Vec<bool>,
}

impl Subspace {
    pub fn zero(field: &Field) -> Self {
        Subspace::span(field, &[])
    }

    pub fn full(field: &Field) -> Self {
        Subspace::span(field, &field.basis())
    }

    /// GF(p)-span of `gens`; the basis keeps the generators that were not
    /// already in the span of the earlier ones.
    pub fn span(field: &Field, gens: &[Fe]) -> Self {
        let p = field.characteristic();
        let mut members = vec![Fe::ZERO];
        let mut mask = vec![false; field.size() as usize];
        mask[0] = true;
        let mut basis = Vec::new();
        for &g in gens {
            if mask[g.idx()] {
                continue;
            }
            basis.push(g);
            let old = members.clone();
            for c in 1..p {
                let cg = field.mul(Fe(c), g);
                for &m in &old {
                    let x = field.add(m, cg);
                    mask[x.idx()] = true;
                    members.push(x);
                }
            }
        }
        members.sort();
        Subspace {
            basis,
            members,
            mask,
        }
    }

    #[inline]
    pub fn contains(&self, x: Fe) -> bool {
        self.mask.get(x.idx()).copied().unwrap_or(false)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.members.len() == self.mask.len()
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Fe] {
        &self.basis
    }

    /// Members in increasing order.
    pub fn members(&self) -> &[Fe] {
        &self.members
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.basis.iter().all(|&b| other.contains(b))
    }
}

/// {g : tᵢ(g) ∈ Aᵢ} for subspaces A₁, …, A_n of the coordinate fields.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subgroup {
    spaces: Vec<Subspace>,
}

impl Subgroup {
    pub fn trivial(group: &Group) -> Self {
        Subgroup {
            spaces: (1..=group.ncoords())
                .map(|i| Subspace::zero(group.coord_field(i)))
                .collect(),
        }
    }

    pub fn whole(group: &Group) -> Self {
        Subgroup {
            spaces: (1..=group.ncoords())
                .map(|i| Subspace::full(group.coord_field(i)))
                .collect(),
        }
    }

    /// The product of the full root subgroups Yᵢ, i ∈ `coords` (1-based;
    /// indices above the level are ignored).
    pub fn coordinates(group: &Group, coords: &[usize]) -> Self {
        let mut s = Subgroup::trivial(group);
        for &i in coords {
            if i <= group.ncoords() {
                s.spaces[i - 1] = Subspace::full(group.coord_field(i));
            }
        }
        s
    }

    /// Replaces Aᵢ.
    pub fn with_space(mut self, i: usize, space: Subspace) -> Self {
        self.spaces[i - 1] = space;
        self
    }

    pub fn space(&self, i: usize) -> &Subspace {
        &self.spaces[i - 1]
    }

    pub fn ncoords(&self) -> usize {
        self.spaces.len()
    }

    /// 1-based coordinates with Aᵢ the whole field.
    pub fn full_coordinates(&self) -> Vec<usize> {
        (1..=self.ncoords())
            .filter(|&i| self.space(i).is_full())
            .collect()
    }

    #[inline]
    pub fn contains(&self, g: &UElem) -> bool {
        self.spaces
            .iter()
            .zip(g.0.iter())
            .all(|(s, &x)| s.contains(x))
            && g.0[self.spaces.len()..].iter().all(|x| x.is_zero())
    }

    pub fn order(&self) -> u64 {
        self.spaces.iter().map(|s| s.len() as u64).product()
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.spaces
            .iter()
            .zip(&other.spaces)
            .all(|(a, b)| a.is_subspace_of(b))
    }

    /// Members in canonical order.
    pub fn elements(&self) -> Vec<UElem> {
        let mut out = vec![UElem::IDENTITY];
        for (k, s) in self.spaces.iter().enumerate() {
            let mut next = Vec::with_capacity(out.len() * s.len());
            for g in &out {
                for &x in s.members() {
                    let mut h = *g;
                    h.0[k] = x;
                    next.push(h);
                }
            }
            out = next;
        }
        out
    }

    /// yᵢ(b) for b running over a GF(p)-basis of each Aᵢ.
    pub fn generators(&self) -> Vec<UElem> {
        let mut out = Vec::new();
        for (k, s) in self.spaces.iter().enumerate() {
            for &b in s.basis() {
                let mut c = [Fe::ZERO; 6];
                c[k] = b;
                out.push(UElem(c));
            }
        }
        out
    }

    /// Closure under multiplication: every commutator [yᵢ(t), yⱼ(u)] with
    /// t ∈ Aᵢ, u ∈ Aⱼ must lie in the set. Collection of any word in letters
    /// from the Aᵢ then only produces such letters.
    pub fn is_closed(&self, group: &Group) -> bool {
        let n = self.ncoords();
        for i in 1..=n {
            for j in i + 1..=n {
                for &t in self.space(i).members() {
                    for &u in self.space(j).members() {
                        let c = group.commutator(&group.root(i, t), &group.root(j, u));
                        if !self.contains(&c) {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    /// Normality in `group`: conjugates of the subgroup's generators by the
    /// group's generators stay inside.
    pub fn is_normal_in(&self, group: &Group) -> bool {
        let gens = group.generators();
        self.generators()
            .iter()
            .all(|s| gens.iter().all(|x| self.contains(&group.conjugate(s, x))))
    }

    /// The coordinate-product subgroup with exactly the given elements, if
    /// the set has that shape.
    pub fn from_elements(group: &Group, elems: &[UElem]) -> Option<Subgroup> {
        let mut spaces = Vec::new();
        for i in 1..=group.ncoords() {
            let vals: HashSet<Fe> = elems.iter().map(|g| g.coord(i)).collect();
            let mut vals: Vec<Fe> = vals.into_iter().collect();
            vals.sort();
            let s = Subspace::span(group.coord_field(i), &vals);
            if s.len() != vals.len() {
                return None;
            }
            spaces.push(s);
        }
        let s = Subgroup { spaces };
        (s.order() == elems.len() as u64 && elems.iter().all(|g| s.contains(g))).then_some(s)
    }
}

/// The subgroup generated by `gens`, by closure under right multiplication.
pub fn generated_by(group: &Group, gens: &[UElem]) -> Vec<UElem> {
    let mut seen: HashSet<UElem> = HashSet::from([UElem::IDENTITY]);
    let mut stack = vec![UElem::IDENTITY];
    while let Some(x) = stack.pop() {
        for g in gens {
            let y = group.multiply(&x, g);
            if seen.insert(y) {
                stack.push(y);
            }
        }
    }
    let mut out: Vec<UElem> = seen.into_iter().collect();
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::Level;

    #[test]
    fn spans() {
        let g = Group::for_q(4, Level::Full).unwrap();
        let e = g.tower().ext();
        let s = Subspace::span(e, &[Fe(5), Fe(5), Fe(7)]);
        assert_eq!(s.len(), 4);
        assert_eq!(s.dim(), 2);
        assert!(s.contains(Fe(2)));
        assert!(Subspace::full(e).is_full());
        assert_eq!(Subspace::zero(e).members(), &[Fe::ZERO]);
    }

    #[test]
    fn coordinate_subgroups_match_generated_closure() {
        let g = Group::for_q(2, Level::Full).unwrap();
        let cases: [&[usize]; 5] = [
            &[6],
            &[5, 6],
            &[2, 4, 5, 6],
            &[1, 3, 4, 5, 6],
            &[3, 4, 5, 6],
        ];
        for coords in cases {
            let s = Subgroup::coordinates(&g, coords);
            assert!(s.is_closed(&g), "{coords:?}");
            assert_eq!(s.is_normal_in(&g), coords != [2, 4, 5, 6], "{coords:?}");
            assert_eq!(
                generated_by(&g, &s.generators()),
                s.elements(),
                "{coords:?}"
            );
        }
        let y1y2 = Subgroup::coordinates(&g, &[1, 2]);
        assert!(!y1y2.is_closed(&g));
    }

    #[test]
    fn level_generators_generate() {
        for level in Level::ALL {
            let g = Group::for_q(2, level).unwrap();
            assert_eq!(
                generated_by(&g, &g.generators()).len() as u64,
                g.order(),
                "{level}"
            );
        }
        let g = Group::for_q(3, Level::ModY5Y6).unwrap();
        assert_eq!(generated_by(&g, &g.generators()).len() as u64, g.order());
    }

    #[test]
    fn from_elements_roundtrip() {
        let g = Group::for_q(2, Level::ModY5Y6).unwrap();
        let s = Subgroup::coordinates(&g, &[1, 3, 4]);
        assert_eq!(Subgroup::from_elements(&g, &s.elements()), Some(s));
        assert_eq!(Subgroup::from_elements(&g, &[g.root(2, Fe(3))]), None);
    }
}
