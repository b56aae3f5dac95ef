//! The additive subsets of GF(q) and GF(q³) that control the inertia
//! computations: the images 𝕋_a of `x ↦ x^p − a^(p−1)x`, the trace images
//! 𝔸_t, and the images 𝔹_t of the GF(q)-linear map `f_t(u) = t^q u + t u^q`.
//!
//! Everything here is materialized by enumeration; the fields involved have
//! at most a few thousand elements.

use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;

use serde::Serialize;
use thiserror::Error;

use crate::gf::{add_char, Fe, Field, Tower};
use crate::report::Report;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldSetError {
    #[error("operation requires even q, got q = {0}")]
    OddCharacteristic(u32),
    #[error("no t with B_t inside the given kernel")]
    NoT0,
}

/// A subset of a field, kept as a sorted list of members.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct SubsetOfField {
    pub field_order: u32,
    pub members: Vec<Fe>,
}

impl SubsetOfField {
    pub fn from_iter(field: &Field, it: impl IntoIterator<Item = Fe>) -> Self {
        let set: BTreeSet<Fe> = it.into_iter().collect();
        SubsetOfField {
            field_order: field.size(),
            members: set.into_iter().collect(),
        }
    }

    pub fn whole(field: &Field) -> Self {
        Self::from_iter(field, field.elements())
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, x: Fe) -> bool {
        self.members.binary_search(&x).is_ok()
    }

    pub fn is_subset_of(&self, other: &SubsetOfField) -> bool {
        self.members.iter().all(|&x| other.contains(x))
    }

    pub fn intersection_len(&self, other: &SubsetOfField) -> usize {
        self.members.iter().filter(|&&x| other.contains(x)).count()
    }

    /// Closed under addition and negation, and contains zero.
    pub fn is_additive_subgroup(&self, field: &Field) -> bool {
        self.contains(Fe::ZERO)
            && self.members.iter().all(|&x| {
                self.contains(field.neg(x))
                    && self.members.iter().all(|&y| self.contains(field.add(x, y)))
            })
    }

    /// `{s·x : x ∈ self}`.
    pub fn scaled(&self, field: &Field, s: Fe) -> SubsetOfField {
        Self::from_iter(field, self.members.iter().map(|&x| field.mul(s, x)))
    }
}

/// 𝕋_a = {x^p − a^(p−1)x : x ∈ GF(q)}, a subset of GF(q).
pub fn t_set(tower: &Tower, a: Fe) -> SubsetOfField {
    let f = tower.base();
    let p = f.characteristic() as u64;
    let ap = f.pow(a, p - 1);
    SubsetOfField::from_iter(f, f.elements().map(|x| f.sub(f.pow(x, p), f.mul(ap, x))))
}

/// 𝔸_t = {t·ρ(u) + ρ(t)·ρ²(u) + ρ²(t)·u : u ∈ GF(q³)}, a subset of GF(q³).
pub fn a_set(tower: &Tower, t: Fe) -> SubsetOfField {
    let e = tower.ext();
    SubsetOfField::from_iter(
        e,
        e.elements().map(|u| {
            let a = e.mul(t, tower.bar(u));
            let b = e.mul(tower.bar(t), tower.bar2(u));
            let c = e.mul(tower.bar2(t), u);
            e.add(e.add(a, b), c)
        }),
    )
}

/// The GF(q)-linear map `u ↦ t^q u + t u^q` on GF(q³).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct FqLinearMap {
    pub t: Fe,
}

impl FqLinearMap {
    #[inline]
    pub fn apply(&self, tower: &Tower, u: Fe) -> Fe {
        let e = tower.ext();
        e.add(e.mul(tower.bar(self.t), u), e.mul(self.t, tower.bar(u)))
    }

    pub fn kernel(&self, tower: &Tower) -> SubsetOfField {
        let e = tower.ext();
        SubsetOfField::from_iter(e, e.elements().filter(|&u| self.apply(tower, u).is_zero()))
    }

    pub fn image(&self, tower: &Tower) -> SubsetOfField {
        let e = tower.ext();
        SubsetOfField::from_iter(e, e.elements().map(|u| self.apply(tower, u)))
    }
}

/// 𝔹_t = im(f_t).
pub fn b_set(tower: &Tower, t: Fe) -> SubsetOfField {
    FqLinearMap { t }.image(tower)
}

/// Kernel of the additive character φ_c of `field`, by enumeration.
pub fn char_kernel(field: &Field, c: Fe) -> SubsetOfField {
    SubsetOfField::from_iter(
        field,
        field.elements().filter(|&x| add_char(field, c, x).is_one()),
    )
}

/// All nonzero `t` with 𝔹_t ⊆ `kernel`, in increasing order. Even q only.
pub fn t0_solutions(tower: &Tower, kernel: &SubsetOfField) -> Result<Vec<Fe>, FieldSetError> {
    if !tower.is_even() {
        return Err(FieldSetError::OddCharacteristic(tower.q()));
    }
    // f_t is additive, so its image lies in the kernel iff the images of a
    // GF(p)-basis do
    let e = tower.ext();
    let basis = e.basis();
    Ok(e.elements()
        .skip(1)
        .filter(|&t| {
            let f = FqLinearMap { t };
            basis.iter().all(|&u| kernel.contains(f.apply(tower, u)))
        })
        .collect())
}

/// The smallest nonzero `t₀` with 𝔹_{t₀} inside the hyperplane `kernel`
/// (typically `ker φ_{c₄}`). Such `t₀` is unique up to GF(q)^×.
pub fn find_t0(tower: &Tower, kernel: &SubsetOfField) -> Result<Fe, FieldSetError> {
    t0_solutions(tower, kernel)?
        .first()
        .copied()
        .ok_or(FieldSetError::NoT0)
}

/// [`find_t0`] for `ker φ_{c₄}`.
pub fn find_t0_for_char(tower: &Tower, c4: Fe) -> Result<Fe, FieldSetError> {
    find_t0(tower, &char_kernel(tower.ext(), c4))
}

/// `{r·t : r ∈ GF(q)}` inside GF(q³).
pub fn fq_line(tower: &Tower, t: Fe) -> SubsetOfField {
    let e = tower.ext();
    SubsetOfField::from_iter(e, tower.subfield().iter().map(|&r| e.mul(r, t)))
}

/// Index-p subgroups of GF(p^n), as kernels of nonzero coordinate
/// functionals `x ↦ Σ w_k x_k`; independent of the trace characters.
fn coordinate_hyperplanes(field: &Field) -> BTreeSet<SubsetOfField> {
    let p = field.characteristic();
    let n = field.degree() as usize;
    let coeffs: Vec<Vec<u32>> = field.elements().map(|x| field.coeffs(x)).collect();
    (1..field.size())
        .map(|w| {
            let w = field.coeffs(Fe(w));
            SubsetOfField::from_iter(
                field,
                field.elements().filter(|x| {
                    let c = &coeffs[x.idx()];
                    (0..n).map(|k| w[k] * c[k]).sum::<u32>() % p == 0
                }),
            )
        })
        .collect()
}

/// Product `Π_{c ∈ GF(p)} (x − c·a)` expanded over GF(q), little-endian.
fn product_of_translates(f: &Field, a: Fe) -> Vec<Fe> {
    let mut acc = vec![Fe::ONE];
    for c in 0..f.characteristic() {
        let root = f.mul(Fe(c), a);
        let mut next = vec![Fe::ZERO; acc.len() + 1];
        for (k, &coef) in acc.iter().enumerate() {
            next[k + 1] = f.add(next[k + 1], coef);
            next[k] = f.sub(next[k], f.mul(root, coef));
        }
        acc = next;
    }
    acc
}

fn fmt_failures(v: &[String]) -> String {
    if v.is_empty() {
        String::new()
    } else {
        let shown: Vec<_> = v.iter().take(4).cloned().collect();
        format!("{} failures, e.g. {}", v.len(), shown.join("; "))
    }
}

/// Exhaustively checks every claim about 𝕋_a, 𝔸_t and 𝔹_t for this q.
/// Claims specific to even q are skipped for odd q, and vice versa.
pub fn verify_field_lemmas(tower: &Tower) -> Report {
    let q = tower.q();
    let (base, ext) = (tower.base(), tower.ext());
    let p = base.characteristic();
    let mut report = Report::new(format!("field sets, q = {q}"));

    let nonzero_base: Vec<Fe> = base.elements().skip(1).collect();
    let t_sets: Vec<SubsetOfField> = base.elements().map(|a| t_set(tower, a)).collect();

    // x^p − a^(p−1)x = Π (x − ca)
    let mut bad = Vec::new();
    for a in base.elements() {
        let mut lhs = vec![Fe::ZERO; p as usize + 1];
        lhs[p as usize] = Fe::ONE;
        lhs[1] = base.neg(base.pow(a, p as u64 - 1));
        if product_of_translates(base, a) != lhs {
            bad.push(format!("a={:?}", base.coeffs(a)));
        }
    }
    report.check(
        "t-set/factorization",
        "x^p - a^(p-1)x factors as the product of (x - ca) over c in GF(p)",
        bad.is_empty(),
        fmt_failures(&bad),
    );

    let mut bad = Vec::new();
    if t_sets[0] != SubsetOfField::whole(base) {
        bad.push("T_0 != GF(q)".to_owned());
    }
    for &a in &nonzero_base {
        let t = &t_sets[a.idx()];
        if !t.is_additive_subgroup(base) || t.len() * p as usize != q as usize {
            bad.push(format!("a={:?} |T_a|={}", base.coeffs(a), t.len()));
        }
    }
    report.check(
        "t-set/index-p",
        "T_0 = GF(q) and T_a is an additive subgroup of index p for a != 0",
        bad.is_empty(),
        fmt_failures(&bad),
    );

    let mut bad = Vec::new();
    for &a in &nonzero_base {
        for &y in &nonzero_base {
            let lhs = t_sets[a.idx()].scaled(base, base.pow(y, p as u64));
            if lhs != t_sets[base.mul(a, y).idx()] {
                bad.push(format!("a={:?} y={:?}", base.coeffs(a), base.coeffs(y)));
            }
        }
    }
    report.check(
        "t-set/scaling",
        "y^p T_a = T_(ay) for a, y != 0",
        bad.is_empty(),
        fmt_failures(&bad),
    );

    let ker_phi = char_kernel(base, Fe::ONE);
    let prime_units: Vec<Fe> = (1..p).map(Fe).collect();
    let mut bad = Vec::new();
    for &a in &nonzero_base {
        let good_b: Vec<Fe> = nonzero_base
            .iter()
            .copied()
            .filter(|&b| t_sets[a.idx()].scaled(base, b) == ker_phi)
            .collect();
        let Some(&b) = good_b.first() else {
            bad.push(format!("a={:?}: no b", base.coeffs(a)));
            continue;
        };
        for &c in &nonzero_base {
            let works = t_sets[a.idx()].scaled(base, base.mul(c, b)) == ker_phi;
            if works != prime_units.contains(&c) {
                bad.push(format!("a={:?} c={:?}", base.coeffs(a), base.coeffs(c)));
            }
        }
    }
    report.check(
        "t-set/kernel-match",
        "some b scales T_a onto ker(phi), and cb does so iff c in GF(p)^x",
        bad.is_empty(),
        fmt_failures(&bad),
    );

    let t_family: BTreeSet<SubsetOfField> = nonzero_base
        .iter()
        .map(|a| t_sets[a.idx()].clone())
        .collect();
    let ker_family: BTreeSet<SubsetOfField> =
        nonzero_base.iter().map(|&a| char_kernel(base, a)).collect();
    let hyperplanes = coordinate_hyperplanes(base);
    let expected = ((q - 1) / (p - 1)) as usize;
    report.check(
        "t-set/all-hyperplanes",
        "{T_a} = {ker(phi_a)} = all index-p subgroups of GF(q)",
        t_family == ker_family && ker_family == hyperplanes && hyperplanes.len() == expected,
        format!(
            "{} distinct T_a, {} hyperplanes",
            t_family.len(),
            hyperplanes.len()
        ),
    );

    let subfield = SubsetOfField::from_iter(ext, tower.subfield().iter().copied());
    let mut bad = Vec::new();
    if a_set(tower, Fe::ZERO).members != vec![Fe::ZERO] {
        bad.push("A_0 != {0}".to_owned());
    }
    bad.extend(
        ext.elements()
            .skip(1)
            .collect::<Vec<_>>()
            .par_iter()
            .filter(|&&t| a_set(tower, t) != subfield)
            .map(|t| format!("t={:?}", ext.coeffs(*t)))
            .collect::<Vec<_>>(),
    );
    report.check(
        "a-set/equals-subfield",
        "A_t = GF(q) for t != 0",
        bad.is_empty(),
        fmt_failures(&bad),
    );

    let nonzero_ext: Vec<Fe> = ext.elements().skip(1).collect();
    let fq_units: Vec<Fe> = tower.subfield().iter().copied().skip(1).collect();
    let b0_ok = b_set(tower, Fe::ZERO).members == vec![Fe::ZERO];

    if !tower.is_even() {
        // for odd q the sets are not kept: each image is checked and dropped
        let bad: Vec<String> = nonzero_ext
            .par_iter()
            .filter(|&&t| b_set(tower, t).len() != ext.size() as usize)
            .map(|t| format!("t={:?}", ext.coeffs(*t)))
            .collect();
        report.check(
            "b-set/fq-stable",
            "x B_t = B_t for x in GF(q)^x",
            b0_ok && bad.is_empty(),
            "odd q: full field",
        );
        report.check(
            "b-set/full-field-odd",
            "odd q: B_t = GF(q^3) for t != 0",
            bad.is_empty(),
            fmt_failures(&bad),
        );
        return report;
    }

    let b_sets: Vec<SubsetOfField> = ext
        .elements()
        .collect::<Vec<_>>()
        .par_iter()
        .map(|&t| b_set(tower, t))
        .collect();
    let mut bad = Vec::new();
    if !b0_ok {
        bad.push("B_0 != {0}".to_owned());
    }
    for &t in &nonzero_ext {
        if fq_units
            .iter()
            .any(|&x| b_sets[t.idx()].scaled(ext, x) != b_sets[t.idx()])
        {
            bad.push(format!("t={:?}", ext.coeffs(t)));
        }
    }
    report.check(
        "b-set/fq-stable",
        "x B_t = B_t for x in GF(q)^x",
        bad.is_empty(),
        fmt_failures(&bad),
    );

    let q2 = (q * q) as usize;
    let mut bad = Vec::new();
    for &t in &nonzero_ext {
        let ker = FqLinearMap { t }.kernel(tower);
        let b = &b_sets[t.idx()];
        if ker != fq_line(tower, t) || b.len() != q2 || !b.is_additive_subgroup(ext) {
            bad.push(format!("t={:?}", ext.coeffs(t)));
        }
    }
    report.check(
        "b-set/kernel-even",
        "even q: ker(f_t) = t GF(q) and B_t is an additive subgroup of order q^2",
        bad.is_empty(),
        fmt_failures(&bad),
    );

    let b1 = &b_sets[1];
    let ker1 = FqLinearMap { t: Fe::ONE }.kernel(tower);
    let direct = ker1 == subfield
        && subfield.intersection_len(b1) == 1
        && subfield.len() * b1.len() == ext.size() as usize;
    report.check(
        "b-set/direct-sum",
        "even q: ker(f_1) = GF(q) and GF(q^3) = GF(q) + B_1 (direct)",
        direct,
        format!("|ker f_1| = {}, |B_1| = {}", ker1.len(), b1.len()),
    );

    let bad: Vec<String> = nonzero_ext
        .iter()
        .filter(|&&t| b1.scaled(ext, ext.pow(t, q as u64 + 1)) != b_sets[t.idx()])
        .map(|t| format!("t={:?}", ext.coeffs(*t)))
        .collect();
    report.check(
        "b-set/scaling",
        "even q: B_t = t^(q+1) B_1",
        bad.is_empty(),
        fmt_failures(&bad),
    );

    // t ↦ B_t should be constant exactly on the cosets t GF(q)^x, hitting
    // q^2+q+1 distinct subspaces that pairwise meet in q elements
    let lines: Vec<SubsetOfField> = ext.elements().map(|t| fq_line(tower, t)).collect();
    let mut fibres: BTreeMap<&SubsetOfField, Vec<Fe>> = BTreeMap::new();
    for &t in &nonzero_ext {
        fibres.entry(&b_sets[t.idx()]).or_default().push(t);
    }
    let n_hyperplanes = (q * q + q + 1) as usize;
    let mut bad = Vec::new();
    if fibres.len() != n_hyperplanes {
        bad.push(format!("{} distinct B_t", fibres.len()));
    }
    for ts in fibres.values() {
        if ts.len() != fq_units.len() || !ts.iter().all(|&t| lines[ts[0].idx()].contains(t)) {
            bad.push(format!(
                "fibre of t={:?} is not a GF(q)^x coset",
                ext.coeffs(ts[0])
            ));
        }
    }
    let distinct: Vec<&SubsetOfField> = fibres.keys().copied().collect();
    for (i, b) in distinct.iter().enumerate() {
        for c in &distinct[i + 1..] {
            let meet = b.intersection_len(c);
            if meet != q as usize {
                bad.push(format!("two B_t meet in {meet} elements"));
            }
        }
    }
    report.check(
        "b-set/hyperplanes",
        "even q: {B_t} is the GF(q)-hyperplane set; |B_t & B_r| = q iff t not in r GF(q)",
        bad.is_empty(),
        if bad.is_empty() {
            format!("{} hyperplanes", distinct.len())
        } else {
            fmt_failures(&bad)
        },
    );

    let mut bad = Vec::new();
    for &c in &nonzero_ext {
        let ker = char_kernel(ext, c);
        match t0_solutions(tower, &ker) {
            Ok(sols) => {
                let coset_ok = sols.len() == (q - 1) as usize
                    && sols.iter().all(|&t| lines[sols[0].idx()].contains(t));
                if !coset_ok {
                    bad.push(format!("c={:?}: {} solutions", ext.coeffs(c), sols.len()));
                }
            }
            Err(e) => bad.push(e.to_string()),
        }
    }
    report.check(
        "b-set/unique-t0",
        "even q: for every nonzero c, B_t lies in ker(phi_c) for exactly one coset t GF(q)^x",
        bad.is_empty(),
        fmt_failures(&bad),
    );

    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    #[ignore = "enumerates GF(16^3) and GF(27^3); run with --ignored"]
    fn larger_reports_pass() {
        for q in [16, 25, 27] {
            let r = verify_field_lemmas(&Tower::for_q(q).unwrap());
            assert!(r.all_passed(), "{r}");
        }
    }

    #[test]
    fn t_sets() {
        let tw = Tower::for_q(4).unwrap();
        assert_eq!(t_set(&tw, Fe::ZERO), SubsetOfField::whole(tw.base()));
        let t1 = t_set(&tw, Fe::ONE);
        assert_eq!(t1.len(), 2);
        assert!(t1.is_additive_subgroup(tw.base()));
        for q in [2, 3, 5] {
            let tw = Tower::for_q(q).unwrap();
            for a in tw.base().elements().skip(1) {
                assert_eq!(t_set(&tw, a).members, vec![Fe::ZERO]);
            }
        }
    }

    #[test]
    fn a_sets() {
        let tw = Tower::for_q(2).unwrap();
        assert_eq!(a_set(&tw, Fe::ZERO).members, vec![Fe::ZERO]);
        assert_eq!(a_set(&tw, Fe::ONE).members, vec![Fe::ZERO, Fe::ONE]);
        let tw = Tower::for_q(3).unwrap();
        for t in tw.ext().elements().skip(1) {
            assert_eq!(a_set(&tw, t).len(), 3);
        }
    }

    #[test]
    fn b_sets() {
        let tw = Tower::for_q(3).unwrap();
        assert_eq!(b_set(&tw, Fe::ZERO).members, vec![Fe::ZERO]);
        assert_eq!(b_set(&tw, Fe::ONE).len(), 27);
        let tw = Tower::for_q(2).unwrap();
        let b1 = b_set(&tw, Fe::ONE);
        assert_eq!(b1.len(), 4);
        assert!(b1.is_additive_subgroup(tw.ext()));
        assert!(!b1.contains(Fe::ONE));
    }

    #[test]
    fn t0_exists_and_is_unique_up_to_scalars() {
        let tw = Tower::for_q(2).unwrap();
        for c in tw.ext().elements().skip(1) {
            let sols = t0_solutions(&tw, &char_kernel(tw.ext(), c)).unwrap();
            assert_eq!(sols.len(), 1);
        }
        let tw = Tower::for_q(4).unwrap();
        let e = tw.ext();
        for c in e.elements().skip(1) {
            let t0 = find_t0_for_char(&tw, c).unwrap();
            // the same kernel is hit by every GF(q)^x multiple of t0
            let sols = t0_solutions(&tw, &char_kernel(e, c)).unwrap();
            assert_eq!(sols.len(), 3);
            assert!(sols.iter().all(|&t| fq_line(&tw, t0).contains(t)));
        }
        assert_eq!(
            find_t0_for_char(&Tower::for_q(3).unwrap(), Fe::ONE),
            Err(FieldSetError::OddCharacteristic(3))
        );
    }

    #[test]
    fn small_reports_pass() {
        for q in [2, 3, 4] {
            let r = verify_field_lemmas(&Tower::for_q(q).unwrap());
            assert!(r.all_passed(), "{r}");
        }
        let r4 = verify_field_lemmas(&Tower::for_q(4).unwrap());
        assert!(r4
            .get("b-set/hyperplanes")
            .unwrap()
            .detail
            .contains("21 hyperplanes"));
        for q in [5, 8, 9] {
            let r = verify_field_lemmas(&Tower::for_q(q).unwrap());
            assert!(r.all_passed(), "{r}");
        }
        let r3 = verify_field_lemmas(&Tower::for_q(3).unwrap());
        assert!(r3.get("b-set/full-field-odd").is_some());
        assert!(r3.get("b-set/unique-t0").is_none());
    }
}
