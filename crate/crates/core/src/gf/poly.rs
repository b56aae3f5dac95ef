//! Dense polynomials over a prime field, stored little-endian.

/// Returns true when `n` is prime.
pub fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Splits `q` as `p^m` with `p` prime, if possible.
pub fn prime_power(q: u32) -> Option<(u32, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q.is_multiple_of(*d))?;
    let (mut rest, mut m) = (q, 0);
    while rest % p == 0 {
        rest /= p;
        m += 1;
    }
    (rest == 1).then_some((p, m))
}

fn trim(poly: &mut Vec<u32>) {
    while poly.len() > 1 && *poly.last().unwrap() == 0 {
        poly.pop();
    }
}

fn degree(poly: &[u32]) -> Option<usize> {
    poly.iter().rposition(|&c| c != 0)
}

fn inv_mod_p(a: u32, p: u32) -> u32 {
    // Fermat; p is tiny.
    let mut r = 1u64;
    for _ in 0..p - 2 {
        r = r * a as u64 % p as u64;
    }
    r as u32
}

/// Remainder of `f` modulo `g` over GF(p). `g` must be nonzero.
pub fn rem(f: &[u32], g: &[u32], p: u32) -> Vec<u32> {
    let dg = degree(g).expect("division by the zero polynomial");
    let lead_inv = inv_mod_p(g[dg], p);
    let mut r = f.to_vec();
    trim(&mut r);
    while let Some(dr) = degree(&r) {
        if dr < dg {
            break;
        }
        let c = r[dr] * lead_inv % p;
        let shift = dr - dg;
        for (k, &gk) in g[..=dg].iter().enumerate() {
            r[shift + k] = (r[shift + k] + p * p - c * gk % p) % p;
        }
        trim(&mut r);
    }
    if degree(&r).is_none() {
        r.clear();
        r.push(0);
    }
    r
}

/// Product of two polynomials over GF(p).
pub fn mul(f: &[u32], g: &[u32], p: u32) -> Vec<u32> {
    let mut out = vec![0u32; f.len() + g.len() - 1];
    for (i, &a) in f.iter().enumerate() {
        if a == 0 {
            continue;
        }
        for (j, &b) in g.iter().enumerate() {
            out[i + j] = (out[i + j] + a * b) % p;
        }
    }
    trim(&mut out);
    out
}

/// Decodes the integer `code` into `len` base-`p` digits, least significant first.
pub fn digits(mut code: u64, p: u32, len: usize) -> Vec<u32> {
    (0..len)
        .map(|_| {
            let d = (code % p as u64) as u32;
            code /= p as u64;
            d
        })
        .collect()
}

/// Irreducibility by trial division with every monic polynomial of degree at
/// most half the degree of `f`.
pub fn is_irreducible(f: &[u32], p: u32) -> bool {
    let Some(d) = degree(f) else { return false };
    if d == 0 {
        return false;
    }
    for dg in 1..=d / 2 {
        for tail in 0..(p as u64).pow(dg as u32) {
            let mut g = digits(tail, p, dg);
            g.push(1);
            if degree(&rem(f, &g, p)).is_none() {
                return false;
            }
        }
    }
    true
}

/// The canonical monic irreducible polynomial of the given degree over GF(p).
///
/// Candidates are ordered by the integer `sum c_k p^k` of their non-leading
/// coefficients and the first irreducible one is returned, so the choice is
/// reproducible. The result is little-endian with a trailing leading `1`.
pub fn canonical_modulus(p: u32, degree: u32) -> Vec<u32> {
    assert!(is_prime(p), "{p} is not prime");
    assert!(degree >= 1, "degree must be positive");
    let len = degree as usize;
    (0..(p as u64).pow(degree))
        .map(|tail| {
            let mut f = digits(tail, p, len);
            f.push(1);
            f
        })
        .find(|f| is_irreducible(f, p))
        .expect("an irreducible polynomial of every degree exists")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_powers() {
        assert_eq!(prime_power(2), Some((2, 1)));
        assert_eq!(prime_power(8), Some((2, 3)));
        assert_eq!(prime_power(9), Some((3, 2)));
        assert_eq!(prime_power(25), Some((5, 2)));
        assert_eq!(prime_power(12), None);
        assert_eq!(prime_power(1), None);
    }

    #[test]
    fn degree_one_is_x() {
        assert_eq!(canonical_modulus(2, 1), vec![0, 1]);
        assert_eq!(canonical_modulus(3, 1), vec![0, 1]);
    }

    /// Root oracle: a cubic is irreducible iff it has no root in GF(p).
    fn cubic_has_root(f: &[u32], p: u32) -> bool {
        (0..p).any(|x| {
            let v = f.iter().rev().fold(0u32, |acc, &c| (acc * x + c) % p);
            v == 0
        })
    }

    #[test]
    fn canonical_cubics() {
        for p in [2u32, 3, 5] {
            let f = canonical_modulus(p, 3);
            assert_eq!(f.len(), 4);
            assert!(!cubic_has_root(&f, p));
            // every candidate ordered before it has a root
            let code = f[..3]
                .iter()
                .rev()
                .fold(0u64, |a, &c| a * p as u64 + c as u64);
            for tail in 0..code {
                let mut g = digits(tail, p, 3);
                g.push(1);
                assert!(cubic_has_root(&g, p), "{g:?} skipped over GF({p})");
            }
        }
        assert_eq!(canonical_modulus(2, 3), vec![1, 1, 0, 1]);
    }

    #[test]
    fn reducible_detected() {
        // (x^2 + x + 1)^2 over GF(2)
        assert!(!is_irreducible(&[1, 0, 1, 0, 1], 2));
        assert!(is_irreducible(&[1, 1, 0, 0, 1], 2));
    }
}
