//! The group U of order q¹² and its quotients by the tail of the central
//! series, as normal-form words y₁(t₁)y₂(t₂)y₃(t₃)y₄(t₄)y₅(t₅)y₆(t₆).
//!
//! Multiplication uses closed-form right-multiplication by one root
//! element at a time. [`collect`] holds the generic rewriting procedure the
//! closed forms are tested against.

pub mod census;
pub mod collect;
pub mod relations;
pub mod structure;
pub mod subgroup;

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use rand::Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::gf::{Fe, Field, FieldError, Tower};

pub use census::{center, conjugacy_census, exponent, ClassData, DEFAULT_CENSUS_BUDGET};
pub use collect::{collect, Letter};
pub use relations::{relation, NONTRIVIAL_PAIRS};
pub use structure::{associativity_check, structure_checks};
pub use subgroup::{Subgroup, Subspace};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error("q = {0} is outside the supported range (prime power with q <= 16)")]
    UnsupportedQ(u32),
    #[error("group of order {order} exceeds the enumeration budget of {budget} elements")]
    Budget { order: u64, budget: u64 },
    #[error("coordinate {index} holds {value}, outside a field of size {size}")]
    BadCoordinate { index: usize, value: u32, size: u32 },
    #[error("coordinate {index} is nonzero but the quotient keeps only {kept} coordinates")]
    BeyondLevel { index: usize, kept: usize },
    #[error("unknown level {0:?}")]
    UnknownLevel(String),
    #[error("center is not a product of coordinate subgroups")]
    CenterNotCoordinate,
}

/// Which quotient of U: the full group or U modulo a tail Yₖ⋯Y₆.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum Level {
    Full,
    ModY6,
    ModY5Y6,
    ModY4Y5Y6,
    /// U/Y₃Y₄Y₅Y₆, abelian of order q⁴.
    Abelianization,
}

impl Level {
    pub const ALL: [Level; 5] = [
        Level::Full,
        Level::ModY6,
        Level::ModY5Y6,
        Level::ModY4Y5Y6,
        Level::Abelianization,
    ];

    /// Number of surviving coordinates: Y₁ … Y_n with n = `ncoords`.
    pub fn ncoords(self) -> usize {
        match self {
            Level::Full => 6,
            Level::ModY6 => 5,
            Level::ModY5Y6 => 4,
            Level::ModY4Y5Y6 => 3,
            Level::Abelianization => 2,
        }
    }

    pub fn from_ncoords(n: usize) -> Option<Level> {
        Level::ALL.into_iter().find(|l| l.ncoords() == n)
    }

    pub fn name(self) -> &'static str {
        match self {
            Level::Full => "full",
            Level::ModY6 => "modY6",
            Level::ModY5Y6 => "modY5Y6",
            Level::ModY4Y5Y6 => "modY4Y5Y6",
            Level::Abelianization => "abelianization",
        }
    }
}

impl fmt::Display for Level {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Level {
    type Err = GroupError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Level::ALL
            .into_iter()
            .find(|l| l.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| GroupError::UnknownLevel(s.to_owned()))
    }
}

/// Whether coordinate `i` (1-based) lives in GF(q³) rather than GF(q).
#[inline]
pub fn is_ext_coord(i: usize) -> bool {
    (2..=4).contains(&i)
}

/// Normal-form coordinates (t₁, …, t₆). Coordinates 1, 5, 6 are elements of
/// GF(q), coordinates 2, 3, 4 elements of GF(q³), each in the integer
/// encoding of its own field. Coordinates cut off by a quotient are zero.
///
/// The derived order is lexicographic in (t₁, …, t₆) and agrees with the
/// order of [`Group::pack`].
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct UElem(pub [Fe; 6]);

impl UElem {
    pub const IDENTITY: UElem = UElem([Fe::ZERO; 6]);

    /// Coordinate `i`, 1-based.
    #[inline]
    pub fn coord(&self, i: usize) -> Fe {
        self.0[i - 1]
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().all(|c| c.is_zero())
    }

    /// Coordinates above `ncoords` set to zero.
    pub fn truncated(mut self, ncoords: usize) -> UElem {
        for c in &mut self.0[ncoords..] {
            *c = Fe::ZERO;
        }
        self
    }

    /// 1-based indices of the nonzero coordinates.
    pub fn support(&self) -> Vec<usize> {
        (1..=6).filter(|&i| !self.coord(i).is_zero()).collect()
    }
}

/// U (or one of its quotients) over a fixed tower GF(q³)/GF(q).
#[derive(Clone, Debug)]
pub struct Group {
    tower: Arc<Tower>,
    level: Level,
    radix: [u64; 6],
}

impl Group {
    pub fn new(tower: Arc<Tower>, level: Level) -> Result<Self, GroupError> {
        let q = tower.q();
        if q > 16 {
            return Err(GroupError::UnsupportedQ(q));
        }
        let (q, q3) = (q as u64, tower.ext().size() as u64);
        Ok(Group {
            tower,
            level,
            radix: [q, q3, q3, q3, q, q],
        })
    }

    pub fn for_q(q: u32, level: Level) -> Result<Self, GroupError> {
        Group::new(Arc::new(Tower::for_q(q)?), level)
    }

    /// The same tower at another level.
    pub fn at_level(&self, level: Level) -> Group {
        Group {
            tower: Arc::clone(&self.tower),
            level,
            radix: self.radix,
        }
    }

    pub fn tower(&self) -> &Tower {
        &self.tower
    }

    pub fn tower_arc(&self) -> &Arc<Tower> {
        &self.tower
    }

    pub fn q(&self) -> u32 {
        self.tower.q()
    }

    pub fn level(&self) -> Level {
        self.level
    }

    pub fn ncoords(&self) -> usize {
        self.level.ncoords()
    }

    /// Field of coordinate `i` (1-based).
    pub fn coord_field(&self, i: usize) -> &Field {
        if is_ext_coord(i) {
            self.tower.ext()
        } else {
            self.tower.base()
        }
    }

    pub fn coord_size(&self, i: usize) -> u32 {
        self.radix[i - 1] as u32
    }

    /// |G|, at most 2⁴⁸ for the supported q.
    pub fn order(&self) -> u64 {
        self.radix[..self.ncoords()].iter().product()
    }

    pub fn identity(&self) -> UElem {
        UElem::IDENTITY
    }

    /// The root element yᵢ(t), truncated to this level.
    pub fn root(&self, i: usize, t: Fe) -> UElem {
        let mut c = [Fe::ZERO; 6];
        if i <= self.ncoords() {
            c[i - 1] = t;
        }
        UElem(c)
    }

    /// Validates coordinate ranges and the level cut-off.
    pub fn check(&self, g: &UElem) -> Result<(), GroupError> {
        for i in 1..=6 {
            let v = g.coord(i);
            if v.0 >= self.coord_size(i) {
                return Err(GroupError::BadCoordinate {
                    index: i,
                    value: v.0,
                    size: self.coord_size(i),
                });
            }
            if i > self.ncoords() && !v.is_zero() {
                return Err(GroupError::BeyondLevel {
                    index: i,
                    kept: self.ncoords(),
                });
            }
        }
        Ok(())
    }

    /// Image of an element of U (or a finer quotient) in this quotient.
    pub fn project(&self, g: &UElem) -> UElem {
        g.truncated(self.ncoords())
    }

    /// Mixed-radix index of `g`: t₁ is the most significant digit, with
    /// radix q for t₁, t₅, t₆ and q³ for t₂, t₃, t₄; coordinates cut off by
    /// the level are omitted. For p = 2 every radix is a power of two and
    /// this is plain bit-field packing, 3m bits per GF(q³) coordinate and m
    /// bits per GF(q) coordinate.
    #[inline]
    pub fn pack(&self, g: &UElem) -> u64 {
        let n = self.ncoords();
        (0..n).fold(0u64, |acc, k| acc * self.radix[k] + g.0[k].0 as u64)
    }

    #[inline]
    pub fn unpack(&self, mut code: u64) -> UElem {
        let mut c = [Fe::ZERO; 6];
        for k in (0..self.ncoords()).rev() {
            c[k] = Fe((code % self.radix[k]) as u32);
            code /= self.radix[k];
        }
        UElem(c)
    }

    /// All elements in canonical order.
    pub fn elements(&self) -> impl Iterator<Item = UElem> + '_ {
        (0..self.order()).map(move |k| self.unpack(k))
    }

    pub fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> UElem {
        let mut c = [Fe::ZERO; 6];
        for (ck, &r) in c.iter_mut().zip(&self.radix[..self.ncoords()]) {
            *ck = Fe(rng.gen_range(0..r as u32));
        }
        UElem(c)
    }

    /// yᵢ(b) for every coordinate i of this level and every GF(p)-basis
    /// element b of its field.
    pub fn coordinate_generators(&self) -> Vec<UElem> {
        (1..=self.ncoords())
            .flat_map(|i| self.coord_field(i).basis().into_iter().map(move |b| (i, b)))
            .map(|(i, b)| self.root(i, b))
            .collect()
    }

    /// y₁(b) and y₂(b) over GF(p)-bases: these generate every level.
    pub fn generators(&self) -> Vec<UElem> {
        self.coordinate_generators()
            .into_iter()
            .filter(|g| g.coord(1) != Fe::ZERO || g.coord(2) != Fe::ZERO)
            .collect()
    }

    /// g·y₁(s).
    #[inline]
    fn mul_y1(&self, a: &mut [Fe; 6], s: Fe) {
        if s.is_zero() {
            return;
        }
        let (tw, b, e) = (&*self.tower, self.tower.base(), self.tower.ext());
        let n = self.ncoords();
        a[0] = b.add(a[0], s);
        if n < 3 || a[1].is_zero() && (n < 6 || a[4].is_zero()) {
            return;
        }
        let a2 = a[1];
        let c3 = e.mul(tw.embed(s), a2);
        let c4 = e.neg(e.mul(c3, tw.bar(a2)));
        if n >= 6 {
            let nm = tw.norm(a2);
            let c6 = b.mul(b.mul(s, s), nm);
            let rc4 = tw.bar(c4);
            let corr = b.sub(tw.trace(e.mul(a[2], rc4)), tw.trace(e.mul(c3, rc4)));
            a[5] = b.add(b.sub(b.sub(a[5], b.mul(s, a[4])), c6), corr);
        }
        if n >= 5 {
            a[4] = b.sub(a[4], b.mul(s, tw.norm(a2)));
        }
        if n >= 4 {
            a[3] = e.sub(a[3], c4);
        }
        a[2] = e.sub(a[2], c3);
    }

    /// g·y₂(s).
    #[inline]
    fn mul_y2(&self, a: &mut [Fe; 6], s: Fe) {
        if s.is_zero() {
            return;
        }
        let (tw, b, e) = (&*self.tower, self.tower.base(), self.tower.ext());
        let n = self.ncoords();
        a[1] = e.add(a[1], s);
        if n < 4 {
            return;
        }
        let a3 = a[2];
        let (ra3, r2a3) = (tw.bar(a3), tw.bar2(a3));
        if n >= 6 {
            let c = b.neg(tw.trace(e.mul(e.mul(s, ra3), r2a3)));
            a[5] = b.sub(a[5], c);
        }
        if n >= 5 {
            let bb = b.neg(tw.trace(e.mul(e.mul(s, tw.bar(s)), r2a3)));
            let d = tw.trace(e.mul(s, tw.bar(a[3])));
            a[4] = b.sub(b.sub(a[4], bb), d);
        }
        let big_a = e.add(e.mul(s, ra3), e.mul(tw.bar(s), a3));
        a[3] = e.sub(a[3], big_a);
    }

    /// g·y₃(s).
    #[inline]
    fn mul_y3(&self, a: &mut [Fe; 6], s: Fe) {
        let (tw, b, e) = (&*self.tower, self.tower.base(), self.tower.ext());
        a[2] = e.add(a[2], s);
        if self.ncoords() >= 6 && !s.is_zero() {
            a[5] = b.sub(a[5], tw.trace(e.mul(s, tw.bar(a[3]))));
        }
    }

    /// g·yᵢ(s) for a single root element.
    #[inline]
    pub fn mul_root_in_place(&self, a: &mut [Fe; 6], i: usize, s: Fe) {
        if i > self.ncoords() {
            return;
        }
        match i {
            1 => self.mul_y1(a, s),
            2 => self.mul_y2(a, s),
            3 => self.mul_y3(a, s),
            _ => {
                let f = self.coord_field(i);
                a[i - 1] = f.add(a[i - 1], s);
            }
        }
    }

    /// gh, for g and h in normal form at this level.
    #[inline]
    pub fn multiply(&self, g: &UElem, h: &UElem) -> UElem {
        let mut a = g.0;
        for i in 1..=self.ncoords() {
            self.mul_root_in_place(&mut a, i, h.0[i - 1]);
        }
        UElem(a)
    }

    /// [`Group::multiply`] with both arguments validated first.
    pub fn try_multiply(&self, g: &UElem, h: &UElem) -> Result<UElem, GroupError> {
        self.check(g)?;
        self.check(h)?;
        Ok(self.multiply(g, h))
    }

    /// y₆(−t₆)⋯y₁(−t₁).
    #[inline]
    pub fn inverse(&self, g: &UElem) -> UElem {
        let mut a = [Fe::ZERO; 6];
        for i in (1..=self.ncoords()).rev() {
            let f = self.coord_field(i);
            self.mul_root_in_place(&mut a, i, f.neg(g.0[i - 1]));
        }
        UElem(a)
    }

    /// x⁻¹gx.
    #[inline]
    pub fn conjugate(&self, g: &UElem, x: &UElem) -> UElem {
        self.multiply(&self.multiply(&self.inverse(x), g), x)
    }

    /// g⁻¹h⁻¹gh.
    pub fn commutator(&self, g: &UElem, h: &UElem) -> UElem {
        let gh = self.multiply(g, h);
        let hg = self.multiply(h, g);
        self.multiply(&self.inverse(&hg), &gh)
    }

    pub fn pow(&self, g: &UElem, mut e: u64) -> UElem {
        let (mut base, mut acc) = (*g, UElem::IDENTITY);
        while e > 0 {
            if e & 1 == 1 {
                acc = self.multiply(&acc, &base);
            }
            base = self.multiply(&base, &base);
            e >>= 1;
        }
        acc
    }

    /// Order of `g`, by repeated multiplication.
    pub fn element_order(&self, g: &UElem) -> u64 {
        let mut x = *g;
        let mut k = 1;
        while !x.is_identity() {
            x = self.multiply(&x, g);
            k += 1;
        }
        k
    }

    /// Coordinates rendered as little-endian coefficient vectors over GF(p).
    pub fn coeff_vectors(&self, g: &UElem) -> Vec<Vec<u32>> {
        (1..=self.ncoords())
            .map(|i| self.coord_field(i).coeffs(g.coord(i)))
            .collect()
    }
}
