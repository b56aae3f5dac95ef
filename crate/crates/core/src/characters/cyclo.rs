//! Exact values in ℤ[ζ_p] for p ≤ 5.
//!
//! A value is Σ c_k ζ^k over k < p, normalized with c_(p−1) = 0 using
//! 1 + ζ + ⋯ + ζ^(p−1) = 0, which makes the representation unique.

use std::fmt;
use std::ops::{Add, Mul};

use serde::Serialize;

pub const MAX_P: usize = 5;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CycloValue {
    p: u8,
    c: [i64; MAX_P],
}

impl CycloValue {
    pub fn zero(p: u32) -> Self {
        assert!((2..=MAX_P as u32).contains(&p), "p = {p} outside 2..=5");
        CycloValue {
            p: p as u8,
            c: [0; MAX_P],
        }
    }

    pub fn int(p: u32, n: i64) -> Self {
        let mut v = CycloValue::zero(p);
        v.c[0] = n;
        v.normalized()
    }

    /// ζ^e.
    pub fn root(p: u32, e: u32) -> Self {
        let mut v = CycloValue::zero(p);
        v.c[(e % p) as usize] = 1;
        v.normalized()
    }

    /// Σ counts[k] ζ^k.
    pub fn from_counts(p: u32, counts: &[i64]) -> Self {
        let mut v = CycloValue::zero(p);
        for (k, &n) in counts.iter().enumerate() {
            v.c[k % p as usize] += n;
        }
        v.normalized()
    }

    fn normalized(mut self) -> Self {
        let p = self.p as usize;
        let top = self.c[p - 1];
        if top != 0 {
            for x in &mut self.c[..p] {
                *x -= top;
            }
        }
        self
    }

    pub fn p(&self) -> u32 {
        self.p as u32
    }

    /// Coefficients on 1, ζ, …, ζ^(p−2).
    pub fn coeffs(&self) -> &[i64] {
        &self.c[..self.p as usize - 1]
    }

    pub fn scale(self, n: i64) -> Self {
        let mut v = self;
        for x in &mut v.c {
            *x *= n;
        }
        v
    }

    /// Complex conjugate: ζ ↦ ζ⁻¹.
    pub fn conj(self) -> Self {
        let p = self.p as usize;
        let mut v = CycloValue::zero(self.p as u32);
        for k in 0..p {
            v.c[(p - k) % p] = self.c[k];
        }
        v.normalized()
    }

    pub fn as_integer(&self) -> Option<i64> {
        self.c[1..].iter().all(|&x| x == 0).then_some(self.c[0])
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(|&x| x == 0)
    }

    pub fn to_complex(&self) -> (f64, f64) {
        let p = self.p as f64;
        self.c[..self.p as usize]
            .iter()
            .enumerate()
            .fold((0.0, 0.0), |(re, im), (k, &x)| {
                let a = std::f64::consts::TAU * k as f64 / p;
                (re + x as f64 * a.cos(), im + x as f64 * a.sin())
            })
    }
}

impl Add for CycloValue {
    type Output = Self;

    fn add(self, o: Self) -> Self {
        debug_assert_eq!(self.p, o.p);
        let mut v = self;
        for k in 0..MAX_P {
            v.c[k] += o.c[k];
        }
        v
    }
}

impl Mul for CycloValue {
    type Output = Self;

    fn mul(self, o: Self) -> Self {
        debug_assert_eq!(self.p, o.p);
        let p = self.p as usize;
        let mut v = CycloValue::zero(self.p as u32);
        for i in 0..p {
            if self.c[i] == 0 {
                continue;
            }
            for j in 0..p {
                v.c[(i + j) % p] += self.c[i] * o.c[j];
            }
        }
        v.normalized()
    }
}

impl fmt::Debug for CycloValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for CycloValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(n) = self.as_integer() {
            return write!(f, "{n}");
        }
        let mut first = true;
        for (k, &x) in self.coeffs().iter().enumerate() {
            if x == 0 {
                continue;
            }
            if !first {
                f.write_str(if x > 0 { " + " } else { " - " })?;
            } else if x < 0 {
                f.write_str("-")?;
            }
            first = false;
            let a = x.abs();
            match (k, a) {
                (0, _) => write!(f, "{a}")?,
                (1, 1) => f.write_str("z")?,
                (1, _) => write!(f, "{a}z")?,
                (_, 1) => write!(f, "z^{k}")?,
                _ => write!(f, "{a}z^{k}")?,
            }
        }
        Ok(())
    }
}

impl Serialize for CycloValue {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.coeffs())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn cyclotomic_identity() {
        for p in [2, 3, 5] {
            let s = (0..p).fold(CycloValue::zero(p), |acc, e| acc + CycloValue::root(p, e));
            assert!(s.is_zero());
            let z = CycloValue::root(p, 1);
            assert_eq!(z * z.conj(), CycloValue::int(p, 1));
        }
        assert_eq!(CycloValue::root(2, 1), CycloValue::int(2, -1));
    }

    #[test]
    fn complex_rendering() {
        let (re, im) = CycloValue::root(3, 1).to_complex();
        assert!((re + 0.5).abs() < 1e-12 && (im - 3f64.sqrt() / 2.0).abs() < 1e-12);
        assert_eq!(CycloValue::from_counts(3, &[2, 1, 0]).to_string(), "2 + z");
    }

    proptest! {
        #[test]
        fn ring_laws(p in prop::sample::select(vec![2u32, 3, 5]),
                     a in prop::collection::vec(-9i64..9, 5),
                     b in prop::collection::vec(-9i64..9, 5),
                     c in prop::collection::vec(-9i64..9, 5)) {
            let (a, b, c) = (CycloValue::from_counts(p, &a), CycloValue::from_counts(p, &b), CycloValue::from_counts(p, &c));
            prop_assert_eq!(a * b, b * a);
            prop_assert_eq!(a * (b + c), a * b + a * c);
            prop_assert_eq!(a * b * c, a * (b * c));
            prop_assert_eq!((a * b).conj(), a.conj() * b.conj());
            let (x, y) = (a * b).to_complex();
            let ((ar, ai), (br, bi)) = (a.to_complex(), b.to_complex());
            prop_assert!((x - (ar * br - ai * bi)).abs() < 1e-6 && (y - (ar * bi + ai * br)).abs() < 1e-6);
        }
    }
}
