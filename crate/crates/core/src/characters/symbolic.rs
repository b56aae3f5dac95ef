//! Integer polynomials in q, used to check the family counts and degrees
//! as identities rather than at sample values.

use std::fmt;
use std::ops::{Add, Mul, Sub};

use crate::report::Report;

use super::Family;

/// A polynomial in q with integer coefficients, lowest degree first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntPoly(Vec<i64>);

impl IntPoly {
    pub fn new(mut coeffs: Vec<i64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        IntPoly(coeffs)
    }

    pub fn constant(c: i64) -> Self {
        IntPoly::new(vec![c])
    }

    /// q^k.
    pub fn monomial(k: usize) -> Self {
        let mut c = vec![0; k + 1];
        c[k] = 1;
        IntPoly(c)
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.0
    }

    pub fn eval(&self, q: i64) -> i64 {
        self.0.iter().rev().fold(0, |acc, &c| acc * q + c)
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, o: &IntPoly) -> IntPoly {
        let n = self.0.len().max(o.0.len());
        IntPoly::new(
            (0..n)
                .map(|i| self.0.get(i).unwrap_or(&0) + o.0.get(i).unwrap_or(&0))
                .collect(),
        )
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, o: &IntPoly) -> IntPoly {
        self + &(&IntPoly::constant(-1) * o)
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, o: &IntPoly) -> IntPoly {
        if self.0.is_empty() || o.0.is_empty() {
            return IntPoly::new(Vec::new());
        }
        let mut c = vec![0; self.0.len() + o.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in o.0.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        IntPoly::new(c)
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, &c) in self.0.iter().enumerate().rev().filter(|(_, &c)| c != 0) {
            let sign = if c < 0 {
                "-"
            } else if first {
                ""
            } else {
                "+"
            };
            if !first {
                f.write_str(" ")?;
            }
            let a = c.abs();
            match (k, a) {
                (0, _) => write!(f, "{sign}{a}")?,
                (1, 1) => write!(f, "{sign}q")?,
                (1, _) => write!(f, "{sign}{a}q")?,
                (_, 1) => write!(f, "{sign}q^{k}")?,
                _ => write!(f, "{sign}{a}q^{k}")?,
            }
            first = false;
        }
        Ok(())
    }
}

/// k(U) as a polynomial in q, for even or odd q.
pub fn class_number_polynomial(even: bool) -> IntPoly {
    if even {
        IntPoly::new(vec![3, -4, -1, -4, 5, 2])
    } else {
        IntPoly::new(vec![0, -1, -1, -1, 2, 2])
    }
}

/// k(U) at a concrete q.
pub fn class_number(q: u32) -> u64 {
    class_number_polynomial(q.is_multiple_of(2)).eval(q as i64) as u64
}

fn q() -> IntPoly {
    IntPoly::monomial(1)
}

/// Number of characters in a family, as a polynomial in q.
pub fn count_polynomial(family: Family) -> IntPoly {
    let one = IntPoly::constant(1);
    let qm1 = &q() - &one;
    let q3m1 = &IntPoly::monomial(3) - &one;
    match family {
        Family::F6 => &qm1 * &IntPoly::monomial(3),
        Family::F5 => &qm1 * &IntPoly::monomial(4),
        Family::F4Odd => &q3m1 * &q(),
        Family::F4EvenFull => q3m1,
        Family::F4EvenHalf => &(&IntPoly::constant(4) * &q3m1) * &qm1,
        Family::F3 => &q3m1 * &IntPoly::monomial(2),
        Family::Flin => IntPoly::monomial(4),
    }
}

/// Twice the degree of the family's characters, as a polynomial in q
/// (doubling keeps the degree q³/2 integral).
pub fn double_degree_polynomial(family: Family) -> IntPoly {
    let two = IntPoly::constant(2);
    match family {
        Family::F6 => &two * &IntPoly::monomial(4),
        Family::F5 | Family::F4Odd | Family::F4EvenFull => &two * &IntPoly::monomial(3),
        Family::F4EvenHalf => IntPoly::monomial(3),
        Family::F3 => &two * &q(),
        Family::Flin => two,
    }
}

fn families(even: bool) -> Vec<Family> {
    Family::ALL
        .into_iter()
        .filter(|f| match f {
            Family::F4Odd => !even,
            Family::F4EvenFull | Family::F4EvenHalf => even,
            _ => true,
        })
        .collect()
}

/// Σ count and 4·Σ count·degree² over the families of one parity.
pub fn family_sums(even: bool) -> (IntPoly, IntPoly) {
    let mut count = IntPoly::new(Vec::new());
    let mut squares = IntPoly::new(Vec::new());
    for f in families(even) {
        let c = count_polynomial(f);
        let d = double_degree_polynomial(f);
        squares = &squares + &(&c * &(&d * &d));
        count = &count + &c;
    }
    (count, squares)
}

/// The two identities for both parities, plus agreement of the
/// polynomials with the tabulated counts for q up to 32.
pub fn symbolic_identities() -> Report {
    let mut rep = Report::new("symbolic identities in q");
    for (even, name) in [(false, "odd"), (true, "even")] {
        let (count, squares) = family_sums(even);
        let target = &IntPoly::constant(4) * &IntPoly::monomial(12);
        rep.check(
            &format!("symbolic/{name}-count"),
            "the family counts sum to k(U)",
            count == class_number_polynomial(even),
            format!("sum = {count}"),
        );
        rep.check(
            &format!("symbolic/{name}-degree-squares"),
            "the sum of count times degree squared is q^12",
            squares == target,
            format!("4 x sum = {squares}"),
        );
    }
    let prime_powers = [2u32, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27, 32];
    let mismatch = prime_powers.iter().find_map(|&qv| {
        Family::for_q(qv).into_iter().find_map(|f| {
            let poly = count_polynomial(f).eval(qv as i64) as u64;
            let deg = double_degree_polynomial(f).eval(qv as i64) as u64;
            (poly != f.expected_count(qv as u64) || deg != 2 * f.expected_degree(qv as u64))
                .then_some((qv, f))
        })
    });
    rep.check(
        "symbolic/tabulated",
        "the polynomials agree with the tabulated counts and degrees",
        mismatch.is_none(),
        match mismatch {
            None => format!("q in {prime_powers:?}"),
            Some((qv, f)) => format!("q = {qv}, family {f}"),
        },
    );
    rep
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identities_hold() {
        let rep = symbolic_identities();
        assert!(rep.all_passed(), "{rep}");
    }

    #[test]
    fn class_numbers() {
        assert_eq!(class_number(2), 103);
        assert_eq!(class_number(3), 609);
        assert_eq!(class_number(4), 3043);
    }

    #[test]
    fn display_and_arithmetic() {
        let p = &IntPoly::monomial(2) - &IntPoly::constant(1);
        assert_eq!(p.to_string(), "q^2 -1");
        assert_eq!((&p * &p).eval(3), 64);
        assert_eq!(&p - &p, IntPoly::new(vec![]));
    }
}
