//! Linear characters of coordinate-product subgroups.
//!
//! A linear character λ of K = {g : tᵢ(g) ∈ Aᵢ} is recorded by witnesses
//! cᵢ with λ(g) = ζ_p^(Σ AbsTrᵢ(cᵢ·tᵢ(g))), where AbsTrᵢ is the absolute
//! trace of the coordinate's own field (GF(q) for Y₁, Y₅, Y₆, GF(q³) for
//! Y₂, Y₃, Y₄). Every linear character has this form, since it restricts
//! to an additive character on each coordinate and g is the product of its
//! coordinate letters; witnesses are unique only up to the annihilator of
//! Aᵢ, so characters are compared by [`LinChar::key`].

use serde::Serialize;

use crate::gf::{Fe, Field};
use crate::group::{Group, Subgroup, Subspace, UElem};

use super::CharError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize)]
pub struct LinChar {
    pub witnesses: [Fe; 6],
}

/// Per-coordinate exponent tables of a linear character, for fast
/// evaluation.
#[derive(Debug, Clone)]
pub struct ValueTables {
    p: u32,
    tabs: Vec<Vec<u8>>,
}

impl ValueTables {
    #[inline]
    pub fn exponent(&self, g: &UElem) -> u32 {
        let s: u32 = self
            .tabs
            .iter()
            .zip(g.0.iter())
            .map(|(t, x)| t[x.idx()] as u32)
            .sum();
        s % self.p
    }
}

impl LinChar {
    pub fn new(witnesses: [Fe; 6]) -> Self {
        LinChar { witnesses }
    }

    pub fn trivial() -> Self {
        LinChar::default()
    }

    pub fn witness(&self, i: usize) -> Fe {
        self.witnesses[i - 1]
    }

    /// Exponent e with λ(g) = ζ_p^e.
    pub fn exponent(&self, group: &Group, g: &UElem) -> u32 {
        let p = group.tower().p();
        (1..=group.ncoords())
            .map(|i| {
                let f = group.coord_field(i);
                f.abs_trace(f.mul(self.witness(i), g.coord(i)))
            })
            .sum::<u32>()
            % p
    }

    pub fn tables(&self, group: &Group) -> ValueTables {
        let tabs = (1..=group.ncoords())
            .map(|i| {
                let f = group.coord_field(i);
                let c = self.witness(i);
                f.elements()
                    .map(|x| f.abs_trace(f.mul(c, x)) as u8)
                    .collect()
            })
            .collect();
        ValueTables {
            p: group.tower().p(),
            tabs,
        }
    }

    /// Exponents on the generators of `domain`; equal keys mean equal
    /// characters of `domain`.
    pub fn key(&self, group: &Group, domain: &Subgroup) -> Vec<u8> {
        domain
            .generators()
            .iter()
            .map(|g| self.exponent(group, g) as u8)
            .collect()
    }

    /// Whether the witnesses define a homomorphism on `domain`: λ must
    /// vanish on every commutator [yᵢ(t), yⱼ(u)] with t ∈ Aᵢ, u ∈ Aⱼ.
    pub fn is_homomorphism(&self, group: &Group, domain: &Subgroup) -> bool {
        let n = domain.ncoords();
        for i in 1..=n {
            for j in i + 1..=n {
                for &t in domain.space(i).members() {
                    for &u in domain.space(j).members() {
                        let c = group.commutator(&group.root(i, t), &group.root(j, u));
                        if self.exponent(group, &c) != 0 {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    /// λ^x with λ^x(h) = λ(x h x⁻¹), as a character of `domain` (which x
    /// must normalize).
    pub fn conjugate(&self, group: &Group, domain: &Subgroup, x: &UElem) -> LinChar {
        let x_inv = group.inverse(x);
        let mut w = [Fe::ZERO; 6];
        for i in 1..=domain.ncoords() {
            let space = domain.space(i);
            if space.is_zero() {
                continue;
            }
            let exps: Vec<u32> = space
                .basis()
                .iter()
                .map(|&b| {
                    let h = group.root(i, b);
                    self.exponent(group, &group.multiply(&group.multiply(x, &h), &x_inv))
                })
                .collect();
            w[i - 1] = witness_for(group.coord_field(i), space.basis(), &exps)
                .expect("the trace form is nondegenerate");
        }
        LinChar { witnesses: w }
    }

    /// Witnesses reduced to a canonical choice for `domain` (the least
    /// field element with the same exponents on each Aᵢ).
    pub fn canonical(&self, group: &Group, domain: &Subgroup) -> LinChar {
        let mut w = [Fe::ZERO; 6];
        for i in 1..=domain.ncoords() {
            let space = domain.space(i);
            if space.is_zero() {
                continue;
            }
            let f = group.coord_field(i);
            let exps: Vec<u32> = space
                .basis()
                .iter()
                .map(|&b| f.abs_trace(f.mul(self.witness(i), b)))
                .collect();
            w[i - 1] = witness_for(f, space.basis(), &exps).expect("a witness exists");
        }
        LinChar { witnesses: w }
    }
}

/// The least c ∈ `field` with AbsTr(c·bₖ) = expsₖ for every k.
pub fn witness_for(field: &Field, basis: &[Fe], exps: &[u32]) -> Option<Fe> {
    field.elements().find(|&c| {
        basis
            .iter()
            .zip(exps)
            .all(|(&b, &e)| field.abs_trace(field.mul(c, b)) == e)
    })
}

/// Basis of a complement of `inner` inside `outer`, taken greedily from the
/// basis of `outer` and then the field basis.
pub fn complement_basis(field: &Field, inner: &Subspace, outer: &Subspace) -> Vec<Fe> {
    let mut gens: Vec<Fe> = inner.basis().to_vec();
    let mut out = Vec::new();
    for &b in outer.basis() {
        let s = Subspace::span(field, &gens);
        if !s.contains(b) {
            gens.push(b);
            out.push(b);
        }
    }
    out
}

/// Right transversal of `k` in `group`: the elements whose coordinates lie
/// in a complement of each Aᵢ. Distinct elements give distinct cosets Kx,
/// because coordinate i of x′x⁻¹ is the difference of the i-th coordinates
/// once the lower coordinates agree.
pub fn transversal(group: &Group, k: &Subgroup) -> Vec<UElem> {
    let mut out = vec![UElem::IDENTITY];
    for i in 1..=group.ncoords() {
        let f = group.coord_field(i);
        let comp = Subspace::span(f, &complement_basis(f, k.space(i), &Subspace::full(f)));
        let mut next = Vec::with_capacity(out.len() * comp.len());
        for g in &out {
            for &v in comp.members() {
                let mut h = *g;
                h.0[i - 1] = v;
                next.push(h);
            }
        }
        out = next;
    }
    out
}

/// I_G(λ) = {x ∈ T : λ^x = λ}·H for a linear character λ of a normal
/// coordinate-product subgroup `h` whose coordinates are each full or zero.
pub fn inertia(group: &Group, lambda: &LinChar, h: &Subgroup) -> Result<Subgroup, CharError> {
    let key = lambda.key(group, h);
    let stab: Vec<UElem> = transversal(group, h)
        .into_iter()
        .filter(|x| lambda.conjugate(group, h, x).key(group, h) == key)
        .collect();
    let mut out = h.clone();
    for i in 1..=group.ncoords() {
        let vals: Vec<Fe> = stab.iter().map(|x| x.coord(i)).collect();
        let span = Subspace::span(group.coord_field(i), &vals);
        if !span.is_zero() {
            if !h.space(i).is_zero() {
                return Err(CharError::UnsupportedInertia);
            }
            out = out.with_space(i, span);
        }
    }
    if out.order() != h.order() * stab.len() as u64 {
        return Err(CharError::UnsupportedInertia);
    }
    Ok(out)
}

/// All linear characters of `k` restricting to λ on `h` ≤ `k`.
pub fn extend(
    group: &Group,
    lambda: &LinChar,
    h: &Subgroup,
    k: &Subgroup,
) -> Result<Vec<LinChar>, CharError> {
    if !h.is_subgroup_of(k) {
        return Err(CharError::NotASubgroup);
    }
    let p = group.tower().p();
    // per coordinate: a basis of A_i(k) extending one of A_i(h), and the
    // exponents λ prescribes on the A_i(h) part
    let mut per_coord: Vec<(usize, Vec<Fe>, Vec<u32>, usize)> = Vec::new();
    for i in 1..=k.ncoords() {
        let f = group.coord_field(i);
        let inner = h.space(i);
        let extra = complement_basis(f, inner, k.space(i));
        let mut basis = inner.basis().to_vec();
        basis.extend(&extra);
        let fixed: Vec<u32> = inner
            .basis()
            .iter()
            .map(|&b| f.abs_trace(f.mul(lambda.witness(i), b)))
            .collect();
        per_coord.push((i, basis, fixed, extra.len()));
    }
    let free: usize = per_coord.iter().map(|c| c.3).sum();
    let mut out = Vec::new();
    for code in 0..(p as u64).pow(free as u32) {
        let mut digits = crate::gf::poly::digits(code, p, free).into_iter();
        let mut w = [Fe::ZERO; 6];
        for (i, basis, fixed, n_extra) in &per_coord {
            let mut exps = fixed.clone();
            exps.extend(digits.by_ref().take(*n_extra));
            if basis.is_empty() {
                continue;
            }
            w[i - 1] = witness_for(group.coord_field(*i), basis, &exps)
                .expect("the trace form is nondegenerate");
        }
        let cand = LinChar { witnesses: w };
        if cand.is_homomorphism(group, k) {
            out.push(cand);
        }
    }
    if out.is_empty() {
        return Err(CharError::NotExtendable);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::Level;

    #[test]
    fn transversal_is_a_right_transversal() {
        let g = Group::for_q(2, Level::ModY5Y6).unwrap();
        let k = Subgroup::coordinates(&g, &[1, 3, 4]);
        let t = transversal(&g, &k);
        assert_eq!(t.len() as u64 * k.order(), g.order());
        for a in &t {
            for b in &t {
                let d = g.multiply(b, &g.inverse(a));
                assert_eq!(k.contains(&d), a == b);
            }
        }
    }

    #[test]
    fn conjugation_and_inertia() {
        let g = Group::for_q(2, Level::ModY6).unwrap();
        let h = Subgroup::coordinates(&g, &[1, 3, 4, 5]);
        assert!(h.is_normal_in(&g) && h.is_closed(&g));
        let triv = LinChar::trivial();
        assert_eq!(inertia(&g, &triv, &h).unwrap(), Subgroup::whole(&g));
        let mut w = [Fe::ZERO; 6];
        w[4] = Fe::ONE;
        let lam = LinChar::new(w);
        assert!(lam.is_homomorphism(&g, &h));
        assert_eq!(inertia(&g, &lam, &h).unwrap(), h);
        // λ^x restricted to a central coordinate is unchanged
        let x = g.root(2, Fe(3));
        assert_eq!(lam.conjugate(&g, &h, &x).witness(5), Fe::ONE);
    }

    #[test]
    fn extension_counts() {
        let g = Group::for_q(2, Level::ModY5Y6).unwrap();
        let k = Subgroup::coordinates(&g, &[3, 4]);
        let lam = LinChar::new([Fe(0), Fe(0), Fe(1), Fe(5), Fe(0), Fe(0)]);
        assert_eq!(
            extend(&g, &lam, &k, &k).unwrap(),
            vec![lam.canonical(&g, &k)]
        );
        let whole_y1 = Subgroup::coordinates(&g, &[1, 3, 4]);
        assert_eq!(extend(&g, &lam, &k, &whole_y1).unwrap().len(), 2);
        // Y2 does not centralize Y3Y4 modulo the kernel of a generic λ
        let y234 = Subgroup::coordinates(&g, &[2, 3, 4]);
        assert!(y234.is_closed(&g));
        assert_eq!(extend(&g, &lam, &k, &y234), Err(CharError::NotExtendable));
    }
}
