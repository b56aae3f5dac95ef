use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use super::poly;
use super::FieldError;

/// Fields up to this size get full addition and multiplication tables.
const TABLE_LIMIT: u32 = 1024;

/// Field element encoded as the integer `sum c_k p^k` of its coefficient
/// vector `(c_0, c_1, ...)` over GF(p) with respect to the field modulus.
///
/// The encoding only has meaning together with a [`Field`].
#[derive(
    Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize,
)]
pub struct Fe(pub u32);

impl Fe {
    pub const ZERO: Fe = Fe(0);
    pub const ONE: Fe = Fe(1);

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn idx(self) -> usize {
        self.0 as usize
    }
}

/// Describes GF(p^(m·d)) where `d = degree_over_base` is 1 for GF(q) and 3
/// for GF(q³).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FieldDesc {
    pub p: u32,
    pub m: u32,
    pub degree_over_base: u32,
    /// Monic irreducible modulus over GF(p), little-endian.
    pub modulus: Vec<u32>,
}

impl FieldDesc {
    /// Descriptor using the canonical modulus.
    pub fn canonical(p: u32, m: u32, degree_over_base: u32) -> Result<Self, FieldError> {
        if !poly::is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        if m == 0 || !(degree_over_base == 1 || degree_over_base == 3) {
            return Err(FieldError::BadDegree {
                m,
                degree_over_base,
            });
        }
        Ok(FieldDesc {
            p,
            m,
            degree_over_base,
            modulus: poly::canonical_modulus(p, m * degree_over_base),
        })
    }

    /// Degree over the prime field.
    pub fn degree(&self) -> u32 {
        self.m * self.degree_over_base
    }

    pub fn order(&self) -> u64 {
        (self.p as u64).pow(self.degree())
    }
}

/// A finite field GF(p^n) with lookup tables for fast arithmetic.
pub struct Field {
    desc: FieldDesc,
    p: u32,
    n: u32,
    size: u32,
    neg: Vec<u32>,
    log: Vec<u32>,
    exp: Vec<u32>,
    add_tab: Option<Vec<u16>>,
    mul_tab: Option<Vec<u16>>,
    abs_trace: Vec<u8>,
}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Field")
            .field("p", &self.p)
            .field("n", &self.n)
            .field("modulus", &self.desc.modulus)
            .finish()
    }
}

impl Field {
    pub fn new(desc: FieldDesc) -> Result<Self, FieldError> {
        let p = desc.p;
        let n = desc.degree();
        if !poly::is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        if desc.modulus.len() != n as usize + 1
            || desc.modulus[n as usize] != 1
            || !poly::is_irreducible(&desc.modulus, p)
        {
            return Err(FieldError::BadModulus(desc.modulus.clone()));
        }
        let order = desc.order();
        if order > u32::MAX as u64 / 2 {
            return Err(FieldError::TooLarge(order));
        }
        let size = order as u32;

        let encode = |d: &[u32]| d.iter().rev().fold(0u32, |acc, &c| acc * p + c);
        let slow_mul = |a: u32, b: u32| -> u32 {
            let prod = poly::mul(
                &poly::digits(a as u64, p, n as usize),
                &poly::digits(b as u64, p, n as usize),
                p,
            );
            let mut r = poly::rem(&prod, &desc.modulus, p);
            r.resize(n as usize, 0);
            encode(&r)
        };

        // Smallest primitive element drives the log/exp tables.
        let mut exp = Vec::with_capacity(2 * (size as usize - 1));
        if size == 2 {
            exp.push(1);
        } else {
            for g in 2..size {
                exp.clear();
                let mut x = 1u32;
                loop {
                    exp.push(x);
                    x = slow_mul(x, g);
                    if x == 1 || exp.len() >= size as usize - 1 {
                        break;
                    }
                }
                if x == 1 && exp.len() == size as usize - 1 {
                    break;
                }
            }
        }
        debug_assert_eq!(exp.len(), size as usize - 1);
        let mut log = vec![0u32; size as usize];
        for (k, &x) in exp.iter().enumerate() {
            log[x as usize] = k as u32;
        }
        let cycle = exp.clone();
        exp.extend_from_slice(&cycle);

        let neg = (0..size)
            .map(|a| {
                let d: Vec<u32> = poly::digits(a as u64, p, n as usize)
                    .into_iter()
                    .map(|c| (p - c) % p)
                    .collect();
                encode(&d)
            })
            .collect();

        let mut field = Field {
            desc,
            p,
            n,
            size,
            neg,
            log,
            exp,
            add_tab: None,
            mul_tab: None,
            abs_trace: Vec::new(),
        };
        if size <= TABLE_LIMIT {
            let s = size as usize;
            let mut add_tab = vec![0u16; s * s];
            let mut mul_tab = vec![0u16; s * s];
            for a in 0..size {
                for b in 0..size {
                    add_tab[a as usize * s + b as usize] = field.add_digits(Fe(a), Fe(b)).0 as u16;
                    mul_tab[a as usize * s + b as usize] = field.mul_log(Fe(a), Fe(b)).0 as u16;
                }
            }
            field.add_tab = Some(add_tab);
            field.mul_tab = Some(mul_tab);
        }
        field.abs_trace = (0..size)
            .map(|a| {
                let mut x = Fe(a);
                let mut acc = Fe::ZERO;
                for _ in 0..n {
                    acc = field.add(acc, x);
                    x = field.pow(x, p as u64);
                }
                debug_assert!(acc.0 < p, "absolute trace outside the prime field");
                acc.0 as u8
            })
            .collect();
        Ok(field)
    }

    /// GF(p^n) with the canonical modulus, viewed as a base field (`m = n`).
    pub fn canonical(p: u32, n: u32) -> Result<Self, FieldError> {
        Field::new(FieldDesc::canonical(p, n, 1)?)
    }

    pub fn desc(&self) -> &FieldDesc {
        &self.desc
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    /// Degree over GF(p).
    pub fn degree(&self) -> u32 {
        self.n
    }

    pub fn size(&self) -> u32 {
        self.size
    }

    pub fn elements(&self) -> impl Iterator<Item = Fe> {
        (0..self.size).map(Fe)
    }

    /// Additive basis over GF(p): the monomials `1, x, x^2, ...`.
    pub fn basis(&self) -> Vec<Fe> {
        (0..self.n).map(|k| Fe(self.p.pow(k))).collect()
    }

    pub fn coeffs(&self, a: Fe) -> Vec<u32> {
        poly::digits(a.0 as u64, self.p, self.n as usize)
    }

    pub fn from_coeffs(&self, coeffs: &[u32]) -> Result<Fe, FieldError> {
        if coeffs.len() > self.n as usize || coeffs.iter().any(|&c| c >= self.p) {
            return Err(FieldError::BadCoefficients(coeffs.to_vec()));
        }
        Ok(Fe(coeffs.iter().rev().fold(0, |acc, &c| acc * self.p + c)))
    }

    /// Element of the prime subfield with value `c mod p`.
    pub fn from_int(&self, c: i64) -> Fe {
        Fe(c.rem_euclid(self.p as i64) as u32)
    }

    fn add_digits(&self, a: Fe, b: Fe) -> Fe {
        let (mut x, mut y) = (a.0, b.0);
        let (mut out, mut place) = (0u32, 1u32);
        while x > 0 || y > 0 {
            out += (x % self.p + y % self.p) % self.p * place;
            x /= self.p;
            y /= self.p;
            place *= self.p;
        }
        Fe(out)
    }

    #[inline]
    fn mul_log(&self, a: Fe, b: Fe) -> Fe {
        if a.is_zero() || b.is_zero() {
            return Fe::ZERO;
        }
        Fe(self.exp[(self.log[a.idx()] + self.log[b.idx()]) as usize])
    }

    #[inline]
    pub fn add(&self, a: Fe, b: Fe) -> Fe {
        if self.p == 2 {
            return Fe(a.0 ^ b.0);
        }
        match &self.add_tab {
            Some(t) => Fe(t[a.idx() * self.size as usize + b.idx()] as u32),
            None => self.add_digits(a, b),
        }
    }

    #[inline]
    pub fn neg(&self, a: Fe) -> Fe {
        Fe(self.neg[a.idx()])
    }

    #[inline]
    pub fn sub(&self, a: Fe, b: Fe) -> Fe {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Fe, b: Fe) -> Fe {
        match &self.mul_tab {
            Some(t) => Fe(t[a.idx() * self.size as usize + b.idx()] as u32),
            None => self.mul_log(a, b),
        }
    }

    pub fn try_inv(&self, a: Fe) -> Option<Fe> {
        if a.is_zero() {
            return None;
        }
        let order = self.size - 1;
        Some(Fe(self.exp[((order - self.log[a.idx()]) % order) as usize]))
    }

    /// Multiplicative inverse; panics on zero.
    pub fn inv(&self, a: Fe) -> Fe {
        self.try_inv(a).expect("zero has no inverse")
    }

    pub fn pow(&self, a: Fe, e: u64) -> Fe {
        if e == 0 {
            return Fe::ONE;
        }
        if a.is_zero() {
            return Fe::ZERO;
        }
        let order = (self.size - 1) as u64;
        Fe(self.exp[((self.log[a.idx()] as u64 * (e % order)) % order) as usize])
    }

    /// Absolute trace to GF(p), as an integer in `0..p`.
    #[inline]
    pub fn abs_trace(&self, a: Fe) -> u32 {
        self.abs_trace[a.idx()] as u32
    }

    /// Multiplicative order of a nonzero element.
    pub fn mult_order(&self, a: Fe) -> u64 {
        let order = (self.size - 1) as u64;
        let l = self.log[a.idx()] as u64;
        order / gcd(order, l)
    }

    /// Wraps `a` together with this field.
    pub fn elem(&self, a: Fe) -> FieldElem<'_> {
        debug_assert!(a.0 < self.size);
        FieldElem {
            field: self,
            value: a,
        }
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// A field element carrying its field, for the checked public API.
///
/// Arithmetic operators panic when the operands live in different fields;
/// [`FieldElem::same_field`] can be used to test first.
#[derive(Clone, Copy)]
pub struct FieldElem<'f> {
    pub field: &'f Field,
    pub value: Fe,
}

impl FieldElem<'_> {
    pub fn coeffs(&self) -> Vec<u32> {
        self.field.coeffs(self.value)
    }

    pub fn desc(&self) -> &FieldDesc {
        self.field.desc()
    }

    pub fn same_field(&self, other: &FieldElem<'_>) -> bool {
        std::ptr::eq(self.field, other.field) || self.field.desc() == other.field.desc()
    }

    pub fn is_zero(&self) -> bool {
        self.value.is_zero()
    }

    pub fn inv(&self) -> Option<Self> {
        self.field.try_inv(self.value).map(|v| self.field.elem(v))
    }

    pub fn pow(&self, e: u64) -> Self {
        self.field.elem(self.field.pow(self.value, e))
    }
}

impl PartialEq for FieldElem<'_> {
    fn eq(&self, other: &Self) -> bool {
        self.same_field(other) && self.value == other.value
    }
}

impl Eq for FieldElem<'_> {}

impl fmt::Debug for FieldElem<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.coeffs())
    }
}

impl Serialize for FieldElem<'_> {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.coeffs().serialize(s)
    }
}

macro_rules! binop {
    ($tr:ident, $method:ident) => {
        impl<'f> $tr for FieldElem<'f> {
            type Output = FieldElem<'f>;

            fn $method(self, rhs: Self) -> Self::Output {
                assert!(self.same_field(&rhs), "field descriptor mismatch");
                self.field.elem(self.field.$method(self.value, rhs.value))
            }
        }
    };
}

binop!(Add, add);
binop!(Sub, sub);
binop!(Mul, mul);

impl<'f> Neg for FieldElem<'f> {
    type Output = FieldElem<'f>;

    fn neg(self) -> Self::Output {
        self.field.elem(self.field.neg(self.value))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn small_fields() -> &'static [Field] {
        static FIELDS: std::sync::OnceLock<Vec<Field>> = std::sync::OnceLock::new();
        FIELDS.get_or_init(|| {
            [
                (2, 1),
                (2, 2),
                (2, 3),
                (2, 4),
                (2, 6),
                (2, 9),
                (2, 12),
                (3, 1),
                (3, 2),
                (3, 3),
                (3, 6),
                (5, 1),
                (5, 3),
                (7, 3),
            ]
            .into_iter()
            .map(|(p, n)| Field::canonical(p, n).unwrap())
            .collect()
        })
    }

    #[test]
    fn table_and_log_paths_agree() {
        let f = Field::canonical(3, 3).unwrap();
        for a in f.elements() {
            for b in f.elements() {
                assert_eq!(f.mul(a, b), f.mul_log(a, b));
                assert_eq!(f.add(a, b), f.add_digits(a, b));
            }
        }
    }

    #[test]
    fn inverses_and_orders() {
        for f in small_fields().iter().take(12) {
            for a in f.elements().skip(1) {
                assert_eq!(f.mul(a, f.inv(a)), Fe::ONE);
                assert_eq!(f.pow(a, f.mult_order(a)), Fe::ONE);
            }
            assert_eq!(f.try_inv(Fe::ZERO), None);
            let prim = f
                .elements()
                .skip(1)
                .filter(|&a| f.mult_order(a) == (f.size() - 1) as u64)
                .count();
            assert!(prim > 0);
        }
    }

    #[test]
    fn coefficient_roundtrip() {
        let f = Field::canonical(3, 2).unwrap();
        for a in f.elements() {
            assert_eq!(f.from_coeffs(&f.coeffs(a)).unwrap(), a);
        }
        assert!(f.from_coeffs(&[3]).is_err());
    }

    #[test]
    fn checked_operators() {
        let f = Field::canonical(2, 3).unwrap();
        let g = Field::canonical(3, 1).unwrap();
        let x = f.elem(Fe(2));
        assert_eq!((x * x).value, f.mul(Fe(2), Fe(2)));
        assert_eq!((x - x).value, Fe::ZERO);
        let y = g.elem(Fe(1));
        assert!(!x.same_field(&y));
        assert!(std::panic::catch_unwind(|| x + y).is_err());
    }

    proptest! {
        #[test]
        fn field_axioms(fi in 0usize..14, a in any::<u32>(), b in any::<u32>(), c in any::<u32>()) {
            let fields = small_fields();
            let f = &fields[fi];
            let (a, b, c) = (Fe(a % f.size()), Fe(b % f.size()), Fe(c % f.size()));
            prop_assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
            prop_assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
            prop_assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
            prop_assert_eq!(f.add(a, b), f.add(b, a));
            prop_assert_eq!(f.mul(a, b), f.mul(b, a));
            prop_assert_eq!(f.add(a, f.neg(a)), Fe::ZERO);
            prop_assert_eq!(f.sub(f.add(a, b), b), a);
            prop_assert_eq!(f.abs_trace(f.add(a, b)), (f.abs_trace(a) + f.abs_trace(b)) % f.characteristic());
        }
    }
}
