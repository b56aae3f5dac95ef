//! Independent re-derivation of the relations of U from the Chevalley group
//! of type D₄: the maximal unipotent subgroup UD₄(q³) with its twelve
//! positive root subgroups, the triality automorphism τ, the field
//! automorphism ρ, and the σ = τρ fixed root elements y₁ … y₆.

use std::sync::Arc;

use rand::Rng;
use serde::Serialize;
use thiserror::Error;

use crate::gf::{Fe, Tower};
use crate::group::{Group, Level, UElem, NONTRIVIAL_PAIRS};
use crate::report::Report;

/// Positive roots α₁ … α₁₂ as coefficient vectors on the simple roots
/// (α₁, α₂, α₃, α₄), with α₁ the central node of the Dynkin diagram.
pub const ROOTS: [[i32; 4]; 12] = [
    [1, 0, 0, 0],
    [0, 1, 0, 0],
    [0, 0, 1, 0],
    [0, 0, 0, 1],
    [1, 1, 0, 0],
    [1, 0, 1, 0],
    [1, 0, 0, 1],
    [1, 1, 1, 0],
    [1, 0, 1, 1],
    [1, 1, 0, 1],
    [1, 1, 1, 1],
    [2, 1, 1, 1],
];

/// The nontrivial commutators [xᵢ(t), xⱼ(u)] = x_k(±tu), as (i, j, k).
pub const STRUCTURE_PAIRS: [(usize, usize, usize); 16] = [
    (1, 2, 5),
    (1, 3, 6),
    (1, 4, 7),
    (1, 11, 12),
    (2, 6, 8),
    (2, 7, 10),
    (2, 9, 11),
    (3, 5, 8),
    (3, 7, 9),
    (3, 10, 11),
    (4, 5, 10),
    (4, 6, 9),
    (4, 8, 11),
    (5, 9, 12),
    (6, 10, 12),
    (7, 8, 12),
];

/// Root orbits under γ, as index lists; orbit k carries the y_(k+1) root
/// element.
pub const ROOT_ORBITS: [&[usize]; 6] = [&[1], &[2, 3, 4], &[5, 6, 7], &[8, 9, 10], &[11], &[12]];

/// Euclidean coordinates of the simple roots (α₁, α₂, α₃, α₄) in the usual
/// realization of D₄ in ℝ⁴.
const SIMPLE_EUCLIDEAN: [[i32; 4]; 4] = [[0, 1, -1, 0], [1, -1, 0, 0], [0, 0, 1, -1], [0, 0, 1, 1]];

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum D4Error {
    #[error(
        "no sign assignment is triality-invariant, associative and reproduces the relations of U"
    )]
    NoConsistentSigns,
}

/// The triality permutation γ = (2,3,4)(5,6,7)(8,9,10) on root indices.
pub fn gamma(i: usize) -> usize {
    match i {
        2 => 3,
        3 => 4,
        4 => 2,
        5 => 6,
        6 => 7,
        7 => 5,
        8 => 9,
        9 => 10,
        10 => 8,
        other => other,
    }
}

/// Height (sum of simple-root coefficients) of αᵢ.
pub fn height(i: usize) -> i32 {
    ROOTS[i - 1].iter().sum()
}

/// Euclidean coordinates of αᵢ.
pub fn euclidean(i: usize) -> [i32; 4] {
    let mut v = [0; 4];
    for (c, s) in ROOTS[i - 1].iter().zip(SIMPLE_EUCLIDEAN.iter()) {
        for k in 0..4 {
            v[k] += c * s[k];
        }
    }
    v
}

/// Index of the positive root αᵢ + αⱼ, if it is one.
pub fn root_sum(i: usize, j: usize) -> Option<usize> {
    let s: Vec<i32> = (0..4).map(|k| ROOTS[i - 1][k] + ROOTS[j - 1][k]).collect();
    ROOTS.iter().position(|r| r[..] == s[..]).map(|k| k + 1)
}

/// γ-orbits on [`STRUCTURE_PAIRS`], as lists of positions in that array,
/// ordered by first member.
pub fn pair_orbits() -> Vec<Vec<usize>> {
    let pos = |i: usize, j: usize| {
        STRUCTURE_PAIRS
            .iter()
            .position(|&(a, b, _)| (a, b) == (i, j))
    };
    let mut seen = [false; 16];
    let mut orbits = Vec::new();
    for start in 0..16 {
        if seen[start] {
            continue;
        }
        let mut orbit = vec![start];
        seen[start] = true;
        let (mut i, mut j, _) = STRUCTURE_PAIRS[start];
        loop {
            let (gi, gj) = (gamma(i), gamma(j));
            let (gi, gj) = if gi < gj { (gi, gj) } else { (gj, gi) };
            let k = pos(gi, gj).expect("structure pairs are closed under triality");
            if seen[k] {
                break;
            }
            seen[k] = true;
            orbit.push(k);
            (i, j) = (gi, gj);
        }
        orbits.push(orbit);
    }
    orbits
}

/// Structure constants N = ±1 for the sixteen pairs of [`STRUCTURE_PAIRS`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct SignAssignment {
    pub signs: [i8; 16],
}

impl SignAssignment {
    pub fn all_plus() -> Self {
        SignAssignment { signs: [1; 16] }
    }

    /// The γ-invariant assignment with orbit k negated iff bit k is set
    /// (orbits as in [`pair_orbits`]).
    pub fn from_orbit_bits(bits: u32) -> Self {
        let mut signs = [1; 16];
        for (k, orbit) in pair_orbits().iter().enumerate() {
            if bits >> k & 1 == 1 {
                for &pos in orbit {
                    signs[pos] = -1;
                }
            }
        }
        SignAssignment { signs }
    }

    pub fn is_gamma_invariant(&self) -> bool {
        pair_orbits()
            .iter()
            .all(|o| o.iter().all(|&k| self.signs[k] == self.signs[o[0]]))
    }

    /// Negated orbits packed as in [`SignAssignment::from_orbit_bits`];
    /// `None` if not γ-invariant.
    pub fn orbit_bits(&self) -> Option<u32> {
        self.is_gamma_invariant().then(|| {
            pair_orbits()
                .iter()
                .enumerate()
                .filter(|(_, o)| self.signs[o[0]] < 0)
                .map(|(k, _)| 1 << k)
                .sum()
        })
    }

    fn sign_of(&self, i: usize, j: usize) -> Option<(usize, i8)> {
        STRUCTURE_PAIRS
            .iter()
            .position(|&(a, b, _)| (a, b) == (i, j))
            .map(|pos| (STRUCTURE_PAIRS[pos].2, self.signs[pos]))
    }
}

/// x₁(t₁)⋯x₁₂(t₁₂) with every tᵢ ∈ GF(q³).
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct D4Elem(pub [Fe; 12]);

impl D4Elem {
    pub fn is_identity(&self) -> bool {
        self.0.iter().all(|x| x.is_zero())
    }

    pub fn coord(&self, i: usize) -> Fe {
        self.0[i - 1]
    }
}

/// UD₄(q³) over the top field of a tower, for a fixed sign choice.
#[derive(Clone, Debug)]
pub struct D4 {
    tower: Arc<Tower>,
    signs: SignAssignment,
}

impl D4 {
    pub fn new(tower: Arc<Tower>, signs: SignAssignment) -> Self {
        D4 { tower, signs }
    }

    pub fn tower(&self) -> &Tower {
        &self.tower
    }

    pub fn signs(&self) -> SignAssignment {
        self.signs
    }

    pub fn order(&self) -> u128 {
        (self.tower.ext().size() as u128).pow(12)
    }

    pub fn root(&self, i: usize, t: Fe) -> D4Elem {
        let mut c = [Fe::ZERO; 12];
        c[i - 1] = t;
        D4Elem(c)
    }

    pub fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> D4Elem {
        let n = self.tower.ext().size();
        let mut c = [Fe::ZERO; 12];
        for x in &mut c {
            *x = Fe(rng.gen_range(0..n));
        }
        D4Elem(c)
    }

    /// Normal form of a word of root elements, by adjacent swaps using
    /// xⱼ(u)xᵢ(t) = xᵢ(t)xⱼ(u)x_k(−N·tu) for i < j.
    pub fn collect(&self, word: &[(usize, Fe)]) -> D4Elem {
        let e = self.tower.ext();
        let mut w: Vec<(usize, Fe)> = word.iter().copied().filter(|l| !l.1.is_zero()).collect();
        let mut k = 0;
        while k + 1 < w.len() {
            let ((a, s), (b, t)) = (w[k], w[k + 1]);
            if a < b {
                k += 1;
                continue;
            }
            if a == b {
                let v = e.add(s, t);
                if v.is_zero() {
                    w.drain(k..k + 2);
                } else {
                    w[k].1 = v;
                    w.remove(k + 1);
                }
            } else {
                w[k] = (b, t);
                w[k + 1] = (a, s);
                if let Some((idx, sign)) = self.signs.sign_of(b, a) {
                    let tu = e.mul(t, s);
                    let v = if sign > 0 { e.neg(tu) } else { tu };
                    w.insert(k + 2, (idx, v));
                }
            }
            k = k.saturating_sub(1);
        }
        let mut c = [Fe::ZERO; 12];
        for (i, v) in w {
            c[i - 1] = v;
        }
        D4Elem(c)
    }

    fn word(g: &D4Elem) -> impl Iterator<Item = (usize, Fe)> + '_ {
        (1..=12).map(|i| (i, g.coord(i))).filter(|l| !l.1.is_zero())
    }

    pub fn multiply(&self, g: &D4Elem, h: &D4Elem) -> D4Elem {
        let w: Vec<(usize, Fe)> = D4::word(g).chain(D4::word(h)).collect();
        self.collect(&w)
    }

    pub fn inverse(&self, g: &D4Elem) -> D4Elem {
        let e = self.tower.ext();
        let w: Vec<(usize, Fe)> = D4::word(g)
            .map(|(i, v)| (i, e.neg(v)))
            .collect::<Vec<_>>()
            .into_iter()
            .rev()
            .collect();
        self.collect(&w)
    }

    /// g⁻¹h⁻¹gh.
    pub fn commutator(&self, g: &D4Elem, h: &D4Elem) -> D4Elem {
        let w: Vec<(usize, Fe)> = D4::word(&self.inverse(g))
            .chain(D4::word(&self.inverse(h)))
            .chain(D4::word(g))
            .chain(D4::word(h))
            .collect();
        self.collect(&w)
    }

    /// τ: xᵢ(t) ↦ x_{iγ}(t). Root subgroups within one γ-orbit commute, so
    /// permuting coordinates gives the normal form directly.
    pub fn triality(&self, g: &D4Elem) -> D4Elem {
        let mut c = [Fe::ZERO; 12];
        for i in 1..=12 {
            c[gamma(i) - 1] = g.coord(i);
        }
        D4Elem(c)
    }

    /// ρ applied to every coordinate.
    pub fn rho(&self, g: &D4Elem) -> D4Elem {
        D4Elem(g.0.map(|t| self.tower.bar(t)))
    }

    /// σ = τρ.
    pub fn sigma(&self, g: &D4Elem) -> D4Elem {
        self.triality(&self.rho(g))
    }

    /// The σ-fixed root element yₖ(t): t ∈ GF(q) (base encoding) for
    /// k ∈ {1, 5, 6}, t ∈ GF(q³) for k ∈ {2, 3, 4}.
    pub fn y(&self, k: usize, t: Fe) -> D4Elem {
        let orbit = ROOT_ORBITS[k - 1];
        let mut c = [Fe::ZERO; 12];
        if orbit.len() == 1 {
            c[orbit[0] - 1] = self.tower.embed(t);
        } else {
            c[orbit[0] - 1] = t;
            c[orbit[1] - 1] = self.tower.bar(t);
            c[orbit[2] - 1] = self.tower.bar2(t);
        }
        D4Elem(c)
    }

    /// The y-word y₁(a₁)⋯y₆(a₆) as a D₄ element.
    pub fn embed_u(&self, g: &UElem) -> D4Elem {
        let mut c = [Fe::ZERO; 12];
        for k in 1..=6 {
            let y = self.y(k, g.coord(k));
            for (ci, &yi) in c.iter_mut().zip(&y.0) {
                if !yi.is_zero() {
                    *ci = yi;
                }
            }
        }
        D4Elem(c)
    }

    /// Reads a σ-fixed element back as y₁(a₁)⋯y₆(a₆); `None` if the
    /// coordinates are not of that shape.
    pub fn read_y(&self, g: &D4Elem) -> Option<UElem> {
        let tw = &self.tower;
        let mut a = [Fe::ZERO; 6];
        for (k, orbit) in ROOT_ORBITS.iter().enumerate() {
            let t = g.coord(orbit[0]);
            if orbit.len() == 1 {
                a[k] = tw.project(t)?;
            } else {
                if g.coord(orbit[1]) != tw.bar(t) || g.coord(orbit[2]) != tw.bar2(t) {
                    return None;
                }
                a[k] = t;
            }
        }
        Some(UElem(a))
    }
}

/// Associativity of collection on all triples of root elements xᵢ(a),
/// xⱼ(b), x_k(c) with a, b, c ranging over `values`.
pub fn is_associative(d4: &D4, values: &[Fe]) -> bool {
    let roots: Vec<D4Elem> = (1..=12)
        .flat_map(|i| values.iter().map(move |&v| (i, v)))
        .map(|(i, v)| d4.root(i, v))
        .collect();
    roots.iter().all(|a| {
        roots.iter().all(|b| {
            let ab = d4.multiply(a, b);
            roots
                .iter()
                .all(|c| d4.multiply(&ab, c) == d4.multiply(a, &d4.multiply(b, c)))
        })
    })
}

/// One pair (i, j) of the derived table.
#[derive(Debug, Clone, Serialize)]
pub struct DerivedPair {
    pub i: usize,
    pub j: usize,
    /// Whether some derived commutator was nontrivial.
    pub nontrivial: bool,
    /// Number of (t, u) evaluated.
    pub evaluated: usize,
    /// (t, u) where the D₄ commutator was not a y-word.
    pub not_fixed: usize,
    /// Mismatching (t, u, derived, defining), coordinates as coefficient vectors.
    pub mismatches: Vec<PairMismatch>,
    /// First few derived commutators with t, u ≠ 0.
    pub samples: Vec<PairSample>,
}

#[derive(Debug, Clone, Serialize)]
pub struct PairMismatch {
    pub t: Vec<u32>,
    pub u: Vec<u32>,
    pub coordinate: usize,
    pub derived: Vec<u32>,
    pub defining: Vec<u32>,
}

#[derive(Debug, Clone, Serialize)]
pub struct PairSample {
    pub t: Vec<u32>,
    pub u: Vec<u32>,
    pub commutator: Vec<Vec<u32>>,
}

/// The relations of U as derived from D₄ at one q.
#[derive(Debug, Clone, Serialize)]
pub struct DerivedRelations {
    pub q: u32,
    pub signs: SignAssignment,
    pub pairs: Vec<DerivedPair>,
}

impl DerivedRelations {
    pub fn matches(&self) -> bool {
        self.pairs
            .iter()
            .all(|p| p.mismatches.is_empty() && p.not_fixed == 0)
    }

    pub fn nontrivial_pairs(&self) -> Vec<(usize, usize)> {
        self.pairs
            .iter()
            .filter(|p| p.nontrivial)
            .map(|p| (p.i, p.j))
            .collect()
    }
}

/// Computes [yᵢ(t), yⱼ(u)] inside UD₄(q³) for every i < j and every t, u,
/// and compares with the commutators in `group` (which must be the full U).
/// With `stop_early`, stops at the first mismatch.
pub fn sigma_fixed_relations(
    group: &Group,
    signs: SignAssignment,
    stop_early: bool,
) -> DerivedRelations {
    let d4 = D4::new(Arc::clone(group.tower_arc()), signs);
    let mut pairs = Vec::new();
    'outer: for i in 1..=6 {
        for j in i + 1..=6 {
            let mut dp = DerivedPair {
                i,
                j,
                nontrivial: false,
                evaluated: 0,
                not_fixed: 0,
                mismatches: Vec::new(),
                samples: Vec::new(),
            };
            for t in group.coord_field(i).elements() {
                for u in group.coord_field(j).elements() {
                    dp.evaluated += 1;
                    let c = d4.commutator(&d4.y(i, t), &d4.y(j, u));
                    if !c.is_identity() {
                        dp.nontrivial = true;
                    }
                    let Some(derived) = d4.read_y(&c) else {
                        dp.not_fixed += 1;
                        continue;
                    };
                    let defining = group.commutator(&group.root(i, t), &group.root(j, u));
                    if dp.samples.len() < 3 && !t.is_zero() && !u.is_zero() {
                        dp.samples.push(PairSample {
                            t: group.coord_field(i).coeffs(t),
                            u: group.coord_field(j).coeffs(u),
                            commutator: group.coeff_vectors(&derived),
                        });
                    }
                    for k in 1..=6 {
                        if derived.coord(k) != defining.coord(k) {
                            let f = group.coord_field(k);
                            dp.mismatches.push(PairMismatch {
                                t: group.coord_field(i).coeffs(t),
                                u: group.coord_field(j).coeffs(u),
                                coordinate: k,
                                derived: f.coeffs(derived.coord(k)),
                                defining: f.coeffs(defining.coord(k)),
                            });
                        }
                    }
                    if stop_early && (!dp.mismatches.is_empty() || dp.not_fixed > 0) {
                        pairs.push(dp);
                        break 'outer;
                    }
                }
            }
            pairs.push(dp);
        }
    }
    DerivedRelations {
        q: group.q(),
        signs,
        pairs,
    }
}

/// Result of the search over γ-invariant sign assignments.
#[derive(Debug, Clone, Serialize)]
pub struct SignSearch {
    /// Number of γ-orbits on the sixteen structure pairs.
    pub orbit_count: usize,
    /// Number of γ-invariant candidates (2^orbit_count).
    pub candidates: usize,
    /// Candidates (orbit bits) whose collection is associative over GF(27).
    pub associative: Vec<u32>,
    /// Associative candidates whose σ-fixed relations equal those of U at
    /// q = 2 and q = 3.
    pub reproducing: Vec<u32>,
    /// The reproducing assignment with the smallest orbit bits.
    pub chosen: SignAssignment,
}

/// Searches all γ-invariant sign assignments for those that give an
/// associative collection (tested in characteristic 3, where signs matter)
/// and reproduce the relations of U at q = 2 and q = 3.
pub fn solve_signs() -> Result<SignSearch, D4Error> {
    let t2 = Arc::new(Tower::for_q(2).expect("q = 2 tower"));
    let t3 = Arc::new(Tower::for_q(3).expect("q = 3 tower"));
    let u2 = Group::new(Arc::clone(&t2), Level::Full).expect("q = 2 group");
    let u3 = Group::new(Arc::clone(&t3), Level::Full).expect("q = 3 group");
    let orbit_count = pair_orbits().len();
    let candidates = 1usize << orbit_count;
    // the nonzero elements of the prime field GF(3) inside GF(27)
    let values = [Fe(1), Fe(2)];
    let associative: Vec<u32> = (0..candidates as u32)
        .filter(|&bits| {
            is_associative(
                &D4::new(Arc::clone(&t3), SignAssignment::from_orbit_bits(bits)),
                &values,
            )
        })
        .collect();
    let reproducing: Vec<u32> = associative
        .iter()
        .copied()
        .filter(|&bits| {
            let s = SignAssignment::from_orbit_bits(bits);
            sigma_fixed_relations(&u2, s, true).matches()
                && sigma_fixed_relations(&u3, s, true).matches()
        })
        .collect();
    let chosen = reproducing
        .iter()
        .min()
        .map(|&b| SignAssignment::from_orbit_bits(b))
        .ok_or(D4Error::NoConsistentSigns)?;
    Ok(SignSearch {
        orbit_count,
        candidates,
        associative,
        reproducing,
        chosen,
    })
}

/// All structural checks of the D₄ model at `q` (2 or 3 are practical),
/// under the signs found by [`solve_signs`].
pub fn verify_relations(q: u32, search: &SignSearch) -> Report {
    let mut report = Report::new(format!("D4 cross-derivation, q = {q}"));
    let tower = Arc::new(Tower::for_q(q).expect("supported q"));
    let u = Group::new(Arc::clone(&tower), Level::Full).expect("supported q");
    let d4 = D4::new(Arc::clone(&tower), search.chosen);

    report.check(
        "d4/table-closure",
        "the structure pairs are exactly the pairs of positive roots whose sum is a root",
        (1..=12)
            .flat_map(|i| (i + 1..=12).map(move |j| (i, j)))
            .all(|(i, j)| root_sum(i, j) == d4.signs().sign_of(i, j).map(|s| s.0)),
        "16 pairs",
    );

    let heights_ok = (1..=12).all(|i| {
        let e = euclidean(i);
        e.iter().map(|x| x * x).sum::<i32>() == 2
    });
    let p = |k: usize| -> [i32; 4] {
        let orbit = ROOT_ORBITS[k - 1];
        let mut v = [0; 4];
        for &i in orbit {
            let e = euclidean(i);
            for c in 0..4 {
                v[c] += e[c] * 3 / orbit.len() as i32;
            }
        }
        v
    };
    let lin = |a: i32, b: i32| -> [i32; 4] {
        let (p1, p2) = (p(1), p(2));
        [0, 1, 2, 3].map(|c| a * p1[c] + b * p2[c])
    };
    let averages_ok =
        p(3) == lin(1, 1) && p(4) == lin(1, 2) && p(5) == lin(1, 3) && p(6) == lin(2, 3);
    report.check(
        "d4/orbit-averages",
        "orbit averages P_i satisfy P3 = P1+P2, P4 = P1+2P2, P5 = P1+3P2, P6 = 2P1+3P2",
        heights_ok && averages_ok,
        "integer identities on 3*P_i",
    );

    report.check(
        "d4/sign-search",
        "some triality-invariant sign assignment is associative and reproduces the relations of U",
        !search.reproducing.is_empty(),
        format!(
            "{} orbits, {} candidates, {} associative over GF(27), {} reproducing; chosen orbit bits {:?}",
            search.orbit_count,
            search.candidates,
            search.associative.len(),
            search.reproducing.len(),
            search.chosen.orbit_bits()
        ),
    );

    let mut rng = <rand_chacha::ChaCha8Rng as rand::SeedableRng>::seed_from_u64(q as u64);
    let samples = 2000;
    let mut assoc = true;
    let mut hom = true;
    let mut sigma3 = true;
    for _ in 0..samples {
        let (a, b, c) = (
            d4.random(&mut rng),
            d4.random(&mut rng),
            d4.random(&mut rng),
        );
        let ab = d4.multiply(&a, &b);
        assoc &= d4.multiply(&ab, &c) == d4.multiply(&a, &d4.multiply(&b, &c));
        hom &= d4.triality(&ab) == d4.multiply(&d4.triality(&a), &d4.triality(&b));
        hom &= d4.sigma(&ab) == d4.multiply(&d4.sigma(&a), &d4.sigma(&b));
        sigma3 &= d4.sigma(&d4.sigma(&d4.sigma(&a))) == a;
    }
    report.check(
        "d4/associative",
        "random triples associate in UD4(q^3)",
        assoc,
        format!("{samples} triples"),
    );
    report.check(
        "d4/triality-hom",
        "tau and sigma are homomorphisms of UD4(q^3)",
        hom,
        format!("{samples} pairs"),
    );
    report.check(
        "d4/sigma-order",
        "sigma^3 = 1",
        sigma3,
        format!("{samples} elements"),
    );

    // σ-fixed elements supported on one orbit block are exactly the y_k(t)
    let e = tower.ext();
    let mut fixed_ok = true;
    if e.size() <= 27 {
        for (k, orbit) in ROOT_ORBITS.iter().enumerate() {
            let n = orbit.len() as u32;
            let mut count = 0u64;
            for code in 0..e.size().pow(n) {
                let mut c = [Fe::ZERO; 12];
                let mut x = code;
                for &i in orbit.iter() {
                    c[i - 1] = Fe(x % e.size());
                    x /= e.size();
                }
                let g = D4Elem(c);
                if d4.sigma(&g) == g {
                    count += 1;
                    fixed_ok &= d4
                        .read_y(&g)
                        .is_some_and(|y| d4.y(k + 1, y.coord(k + 1)) == g);
                }
            }
            let want = if n == 1 { q as u64 } else { e.size() as u64 };
            fixed_ok &= count == want;
        }
    }
    report.check(
        "d4/fixed-points",
        "sigma-fixed elements of each root orbit block are the y_k(t)",
        fixed_ok,
        "enumerated per orbit block",
    );

    let derived = sigma_fixed_relations(&u, search.chosen, false);
    let mismatches: usize = derived
        .pairs
        .iter()
        .map(|p| p.mismatches.len() + p.not_fixed)
        .sum();
    report.check(
        "d4/relations-match",
        "sigma-fixed commutators [y_i(t), y_j(u)] equal the defining relations of U coordinate by coordinate",
        derived.matches(),
        format!(
            "{} commutators evaluated, {mismatches} mismatches",
            derived.pairs.iter().map(|p| p.evaluated).sum::<usize>()
        ),
    );
    report.check(
        "d4/nontrivial-pairs",
        "exactly the pairs (1,2), (2,3), (2,4), (3,4), (1,5) fail to commute",
        {
            let mut got = derived.nontrivial_pairs();
            got.sort();
            let mut want = NONTRIVIAL_PAIRS.to_vec();
            want.sort();
            got == want
        },
        format!("{:?}", derived.nontrivial_pairs()),
    );

    if q == 2 {
        let gens: Vec<D4Elem> = u.generators().iter().map(|g| d4.embed_u(g)).collect();
        let mut seen = std::collections::HashSet::from([D4Elem::default()]);
        let mut stack = vec![D4Elem::default()];
        while let Some(x) = stack.pop() {
            for g in &gens {
                let y = d4.multiply(&x, g);
                if seen.insert(y) {
                    stack.push(y);
                }
            }
        }
        report.check(
            "d4/generated-order",
            "the subgroup of UD4(q^3) generated by the y_i has order q^12",
            seen.len() as u64 == u.order(),
            format!("{} elements", seen.len()),
        );
    }
    report
}
