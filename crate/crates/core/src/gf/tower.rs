use super::field::{Fe, Field, FieldDesc, FieldElem};
use super::poly;
use super::FieldError;

/// The extension GF(q³)/GF(q) with the Frobenius `t ↦ t^q` and the
/// relative trace and norm, all tabulated.
///
/// GF(q³) is built directly as a degree-3m extension of GF(p); GF(q) is
/// embedded by sending its generator to the smallest root of its modulus.
#[derive(Debug)]
pub struct Tower {
    q: u32,
    base: Field,
    ext: Field,
    embed: Vec<Fe>,
    project: Vec<u32>,
    frob: Vec<Fe>,
    frob2: Vec<Fe>,
    trace: Vec<Fe>,
    norm: Vec<Fe>,
}

const NOT_IN_BASE: u32 = u32::MAX;

impl Tower {
    pub fn new(p: u32, m: u32) -> Result<Self, FieldError> {
        let base = Field::new(FieldDesc::canonical(p, m, 1)?)?;
        let ext = Field::new(FieldDesc::canonical(p, m, 3)?)?;
        let q = base.size();

        let modulus = &base.desc().modulus;
        let eval = |x: Fe| {
            modulus
                .iter()
                .rev()
                .fold(Fe::ZERO, |acc, &c| ext.add(ext.mul(acc, x), Fe(c)))
        };
        let root = ext
            .elements()
            .find(|&x| eval(x).is_zero())
            .ok_or(FieldError::NoEmbedding)?;
        let embed: Vec<Fe> = base
            .elements()
            .map(|a| {
                base.coeffs(a)
                    .iter()
                    .enumerate()
                    .fold(Fe::ZERO, |acc, (k, &c)| {
                        ext.add(acc, ext.mul(Fe(c), ext.pow(root, k as u64)))
                    })
            })
            .collect();

        let frob: Vec<Fe> = ext.elements().map(|t| ext.pow(t, q as u64)).collect();
        let frob2: Vec<Fe> = ext.elements().map(|t| frob[frob[t.idx()].idx()]).collect();
        let mut project = vec![NOT_IN_BASE; ext.size() as usize];
        for a in base.elements() {
            let e = embed[a.idx()];
            if project[e.idx()] != NOT_IN_BASE || frob[e.idx()] != e {
                return Err(FieldError::NoEmbedding);
            }
            project[e.idx()] = a.0;
        }
        // ring homomorphism
        for a in base.elements() {
            for b in base.elements() {
                let (ea, eb) = (embed[a.idx()], embed[b.idx()]);
                if embed[base.add(a, b).idx()] != ext.add(ea, eb)
                    || embed[base.mul(a, b).idx()] != ext.mul(ea, eb)
                {
                    return Err(FieldError::NoEmbedding);
                }
            }
        }

        let to_base = |e: Fe| Fe(project[e.idx()]);
        let trace = ext
            .elements()
            .map(|t| to_base(ext.add(ext.add(t, frob[t.idx()]), frob2[t.idx()])))
            .collect();
        let norm = ext
            .elements()
            .map(|t| to_base(ext.mul(ext.mul(t, frob[t.idx()]), frob2[t.idx()])))
            .collect();

        Ok(Tower {
            q,
            base,
            ext,
            embed,
            project,
            frob,
            frob2,
            trace,
            norm,
        })
    }

    /// Tower for a prime power `q`.
    pub fn for_q(q: u32) -> Result<Self, FieldError> {
        let (p, m) = poly::prime_power(q).ok_or(FieldError::NotPrimePower(q))?;
        Tower::new(p, m)
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn p(&self) -> u32 {
        self.base.characteristic()
    }

    pub fn m(&self) -> u32 {
        self.base.degree()
    }

    pub fn is_even(&self) -> bool {
        self.p() == 2
    }

    /// GF(q).
    pub fn base(&self) -> &Field {
        &self.base
    }

    /// GF(q³).
    pub fn ext(&self) -> &Field {
        &self.ext
    }

    #[inline]
    pub fn embed(&self, a: Fe) -> Fe {
        self.embed[a.idx()]
    }

    /// Preimage in GF(q) of a ρ-fixed element of GF(q³).
    #[inline]
    pub fn project(&self, t: Fe) -> Option<Fe> {
        let a = self.project[t.idx()];
        (a != NOT_IN_BASE).then_some(Fe(a))
    }

    /// ρ(t) = t^q.
    #[inline]
    pub fn bar(&self, t: Fe) -> Fe {
        self.frob[t.idx()]
    }

    /// ρ²(t) = t^(q²).
    #[inline]
    pub fn bar2(&self, t: Fe) -> Fe {
        self.frob2[t.idx()]
    }

    /// t + ρ(t) + ρ²(t), as an element of GF(q).
    #[inline]
    pub fn trace(&self, t: Fe) -> Fe {
        self.trace[t.idx()]
    }

    /// t·ρ(t)·ρ²(t), as an element of GF(q).
    #[inline]
    pub fn norm(&self, t: Fe) -> Fe {
        self.norm[t.idx()]
    }

    /// The embedded copy of GF(q) inside GF(q³), in base order.
    pub fn subfield(&self) -> &[Fe] {
        &self.embed
    }

    /// Checked Frobenius on a GF(q³) element.
    pub fn frobenius<'f>(&'f self, t: FieldElem<'_>) -> Result<FieldElem<'f>, FieldError> {
        if t.desc() != self.ext.desc() {
            return Err(FieldError::DescriptorMismatch);
        }
        Ok(self.ext.elem(self.bar(t.value)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn frobenius_order_three_and_fixed_field() {
        for q in [2, 3, 4, 5, 8, 9] {
            let tw = Tower::for_q(q).unwrap();
            let ext = tw.ext();
            let fixed: Vec<Fe> = ext.elements().filter(|&t| tw.bar(t) == t).collect();
            assert_eq!(fixed.len(), q as usize);
            let mut embedded = tw.subfield().to_vec();
            embedded.sort();
            assert_eq!(fixed, embedded);
            for t in ext.elements() {
                assert_eq!(tw.bar(tw.bar(tw.bar(t))), t);
                assert_eq!(tw.bar(t), ext.pow(t, q as u64));
            }
            assert_eq!(tw.bar(Fe::ZERO), Fe::ZERO);
        }
    }

    #[test]
    fn frobenius_is_squaring_in_gf8() {
        let tw = Tower::for_q(2).unwrap();
        let ext = tw.ext();
        // the generator x of GF(8) has encoding 2
        let g = Fe(2);
        assert_eq!(tw.bar(g), ext.mul(g, g));
        let checked = tw.frobenius(ext.elem(g)).unwrap();
        assert_eq!(checked.value, ext.mul(g, g));
        assert_eq!(
            tw.frobenius(tw.base().elem(Fe::ONE)).unwrap_err(),
            FieldError::DescriptorMismatch
        );
    }

    #[test]
    fn relative_trace_is_linear_and_onto() {
        for q in [2, 3, 4, 8] {
            let tw = Tower::for_q(q).unwrap();
            let (base, ext) = (tw.base(), tw.ext());
            let mut hit = vec![false; q as usize];
            for u in ext.elements() {
                hit[tw.trace(u).idx()] = true;
                for a in base.elements() {
                    let au = ext.mul(tw.embed(a), u);
                    assert_eq!(tw.trace(au), base.mul(a, tw.trace(u)));
                }
                for v in ext.elements().step_by(7) {
                    assert_eq!(tw.trace(ext.add(u, v)), base.add(tw.trace(u), tw.trace(v)));
                }
            }
            assert!(hit.into_iter().all(|h| h));
        }
    }

    #[test]
    fn norm_is_multiplicative() {
        let tw = Tower::for_q(3).unwrap();
        let ext = tw.ext();
        for u in ext.elements() {
            for v in ext.elements() {
                assert_eq!(
                    tw.norm(ext.mul(u, v)),
                    tw.base().mul(tw.norm(u), tw.norm(v))
                );
            }
        }
    }
}
