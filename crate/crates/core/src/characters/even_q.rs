//! Structure checks behind the even-q half of family F4, computed in
//! Ū = U/Y₅Y₆ for a fixed nonzero c₄.
//!
//! Notation: μ = μ(c₃, c₄) is the character of Y₃Y₄ with witnesses c₃, c₄;
//! λ = λ(c₁, c₃, c₄) extends it to H = Y₁Y₃Y₄; St₂ is the stabilizer of μ in
//! Y₂; I₃ = {c₄t₀^q(r⁻¹y + r) : r ∈ GF(q)^×, y ∈ 𝔹₁}; St is the stabilizer
//! of λ in Y₂; θ is an extension of μ to K = Y₃Y₄St₂ and S₁ its stabilizer
//! in Y₁.

use std::collections::{BTreeSet, HashSet};

use rayon::prelude::*;

use crate::field_sets::{b_set, find_t0_for_char, fq_line};
use crate::gf::Fe;
use crate::group::{Group, Level, Subgroup, Subspace, UElem};
use crate::report::Report;

use super::cyclo::CycloValue;
use super::induce::InductionPlan;
use super::linchar::{extend, LinChar};
use super::{CharContext, CharError};

/// Whether λ^x = λ on `domain`, tested on the domain's generators.
fn fixes(g: &Group, lambda: &LinChar, letters: &[UElem], x: &UElem) -> bool {
    let xi = g.inverse(x);
    letters
        .iter()
        .all(|b| lambda.exponent(g, &g.multiply(&g.multiply(x, b), &xi)) == lambda.exponent(g, b))
}

fn chi(c1: Fe, c3: Fe, c4: Fe) -> LinChar {
    LinChar::new([c1, Fe::ZERO, c3, c4, Fe::ZERO, Fe::ZERO])
}

/// All checks for one nonzero c₄. Requires even q.
pub fn even_q_structure_checks(ctx: &CharContext, c4: Fe) -> Result<Report, CharError> {
    let q = ctx.q();
    if q % 2 == 1 {
        return Err(CharError::OddQ(q));
    }
    let g = ctx.group(Level::ModY5Y6);
    let classes = ctx.classes(Level::ModY5Y6)?;
    let tw = g.tower();
    let e = tw.ext();
    let (qu, q3) = (q as usize, (q as usize).pow(3));
    let mut rep = Report::new(format!("even-q structure, q = {q}, c4 = {}", c4.0));

    let y34 = Subgroup::coordinates(&g, &[3, 4]);
    let y2: Vec<Fe> = e.elements().collect();

    // image[c3][a] = c₃-witness of μ(c₃)^{y₂(a)}
    let image: Vec<Vec<Fe>> = e
        .elements()
        .collect::<Vec<_>>()
        .par_iter()
        .map(|&c3| {
            y2.iter()
                .map(|&a| {
                    chi(Fe::ZERO, c3, c4)
                        .conjugate(&g, &y34, &g.root(2, a))
                        .canonical(&g, &y34)
                        .witness(3)
                })
                .collect()
        })
        .collect();
    let orbits: BTreeSet<BTreeSet<Fe>> = image
        .iter()
        .map(|row| row.iter().copied().collect())
        .collect();
    let sizes: BTreeSet<usize> = orbits.iter().map(|o| o.len()).collect();
    rep.check(
        "even-q/y3-orbits",
        "Y2 has q orbits of size q^2 on the characters of Y3 (with c4 fixed)",
        orbits.len() == qu && sizes == BTreeSet::from([qu * qu]),
        format!("{} orbits, sizes {:?}", orbits.len(), sizes),
    );

    let t0 = find_t0_for_char(tw, c4)?;
    let line: BTreeSet<Fe> = fq_line(tw, t0).members.into_iter().collect();
    let st2_all_equal = image.iter().enumerate().all(|(c3, row)| {
        let stab: BTreeSet<Fe> = y2
            .iter()
            .zip(row)
            .filter(|(_, &w)| w.0 as usize == c3)
            .map(|(&a, _)| a)
            .collect();
        stab == line
    });
    rep.check(
        "even-q/st2",
        "the stabilizer of every mu in Y2 is {y2(r t0) : r in GF(q)}",
        st2_all_equal,
        format!("t0 = {}", t0.0),
    );

    let b1 = b_set(tw, Fe::ONE);
    let t0q = tw.bar(t0);
    let mut i3 = BTreeSet::new();
    for &r in tw.subfield().iter().filter(|r| !r.is_zero()) {
        for &y in &b1.members {
            i3.insert(e.mul(e.mul(c4, t0q), e.add(e.mul(e.inv(r), y), r)));
        }
    }
    rep.check(
        "even-q/i3-size",
        "|I3| = (q-1) q^2",
        i3.len() == (qu - 1) * qu * qu,
        format!("|I3| = {}", i3.len()),
    );

    let h = Subgroup::coordinates(&g, &[1, 3, 4]);
    let h_letters = h.generators();
    let base: Vec<Fe> = tw.subfield().to_vec();
    let c1s: Vec<Fe> = tw.base().elements().collect();
    let stab_of = |c1: Fe, c3: Fe| -> Vec<Fe> {
        y2.iter()
            .copied()
            .filter(|&a| fixes(&g, &chi(c1, c3, c4), &h_letters, &g.root(2, a)))
            .collect()
    };
    let bad_stabs: Vec<(u32, u32, usize)> = e
        .elements()
        .collect::<Vec<_>>()
        .par_iter()
        .flat_map_iter(|&c3| {
            let want = if i3.contains(&c3) { 2 } else { 1 };
            c1s.iter()
                .filter_map(move |&c1| {
                    let n = stab_of(c1, c3).len();
                    (n != want).then_some((c1.0, c3.0, n))
                })
                .collect::<Vec<_>>()
        })
        .collect();
    rep.check(
        "even-q/stabilizers",
        "Stab_Y2(lambda) has order 2 when c3 lies in I3 and is trivial otherwise",
        bad_stabs.is_empty(),
        match bad_stabs.first() {
            None => format!("{} characters of H", q3 * qu),
            Some((c1, c3, n)) => format!("c1 = {c1}, c3 = {c3}: order {n}"),
        },
    );

    // one I₃-orbit per r₀ ∈ GF(q)^×, represented by c₃ = c₄t₀^q r₀
    let k = y34.clone().with_space(
        2,
        Subspace::span(e, &line.iter().copied().collect::<Vec<_>>()),
    );
    let mut theta_counts_ok = true;
    let mut s1_ok = true;
    let mut gamma_ok = true;
    let mut four_ok = true;
    let mut pair_ii_ok = true;
    let mut pair_iii_ok = true;
    let mut distinct_counts = Vec::new();
    let identity = classes.class_of(&g, &UElem::IDENTITY);
    let r0s: Vec<Fe> = base.iter().copied().filter(|r| !r.is_zero()).collect();
    for &r0 in &r0s {
        let c3 = e.mul(e.mul(c4, t0q), r0);
        let mu = chi(Fe::ZERO, c3, c4);

        let thetas = extend(&g, &mu, &y34, &k)?;
        theta_counts_ok &= thetas.len() == qu;
        let k_letters = k.generators();
        let mut gammas: Vec<(LinChar, Subgroup)> = Vec::new();
        for th in &thetas {
            let s1: Vec<Fe> = tw
                .base()
                .elements()
                .filter(|&t| fixes(&g, th, &k_letters, &g.root(1, t)))
                .collect();
            s1_ok &= s1.len() == 2;
            let k2 = k.clone().with_space(1, Subspace::span(tw.base(), &s1));
            match extend(&g, th, &k, &k2) {
                Ok(ext) => {
                    gamma_ok &= ext.len() == 2;
                    gammas.extend(ext.into_iter().map(|x| (x, k2.clone())));
                }
                Err(CharError::NotExtendable) => gamma_ok = false,
                Err(err) => return Err(err),
            }
        }

        // extensions η of every λ(c₁, c₃, c₄) to HSt, induced to Ū
        let mut etas: Vec<(LinChar, Subgroup)> = Vec::new();
        for &c1 in &c1s {
            let lam = chi(c1, c3, c4);
            let st = stab_of(c1, c3);
            let k1 = h.clone().with_space(2, Subspace::span(e, &st));
            etas.extend(
                extend(&g, &lam, &h, &k1)?
                    .into_iter()
                    .map(|x| (x, k1.clone())),
            );
        }
        let mut plans: Vec<InductionPlan> = Vec::new();
        let mut induce = |lam: &LinChar, sub: &Subgroup| -> Vec<CycloValue> {
            let pos = match plans.iter().position(|p| p.subgroup() == sub) {
                Some(i) => i,
                None => {
                    plans.push(InductionPlan::new(&g, classes, sub));
                    plans.len() - 1
                }
            };
            plans[pos].induce(&g, lam)
        };
        let eta_vals: Vec<Vec<CycloValue>> = etas.iter().map(|(x, s)| induce(x, s)).collect();
        let distinct: HashSet<&Vec<CycloValue>> = eta_vals.iter().collect();
        let degree_ok = eta_vals
            .iter()
            .all(|v| v[identity].as_integer() == Some((q3 / 2) as i64));
        four_ok &= distinct.len() == 4 && degree_ok;
        distinct_counts.push(distinct.len());

        if q == 2 {
            // restrictions to St = {1, y₂(r₀t₀)} and S₁ decide equality
            let st_elem = g.root(2, e.mul(r0, t0));
            let sig = |x: &LinChar, s1: &Subgroup| -> (u32, u32) {
                let s1_gen = s1
                    .space(1)
                    .basis()
                    .first()
                    .map(|&t| g.root(1, t))
                    .unwrap_or(UElem::IDENTITY);
                (x.exponent(&g, &st_elem), x.exponent(&g, &s1_gen))
            };
            let s1_sub = gammas
                .first()
                .map(|(_, k2)| k2.clone())
                .unwrap_or_else(|| k.clone());
            let gamma_vals: Vec<Vec<CycloValue>> =
                gammas.iter().map(|(x, s)| induce(x, s)).collect();
            for ((eta, _), ev) in etas.iter().zip(&eta_vals) {
                for ((gamma, k2), gv) in gammas.iter().zip(&gamma_vals) {
                    pair_ii_ok &= (ev == gv) == (sig(eta, k2) == sig(gamma, k2));
                }
                for ((eta2, _), ev2) in etas.iter().zip(&eta_vals) {
                    pair_iii_ok &= (ev == ev2) == (sig(eta, &s1_sub) == sig(eta2, &s1_sub));
                }
            }
        }
    }
    rep.check(
        "even-q/theta-extensions",
        "mu extends to K = Y3 Y4 St2 in exactly q ways",
        theta_counts_ok,
        format!("{} I3-orbits", r0s.len()),
    );
    rep.check(
        "even-q/s1",
        "every extension theta has a stabilizer S1 of order 2 in Y1",
        s1_ok,
        "",
    );
    rep.check(
        "even-q/gamma",
        "theta extends to K S1 in exactly 2 ways",
        gamma_ok,
        "",
    );
    rep.check(
        "even-q/four-characters",
        "each I3-orbit yields exactly 4 distinct induced characters of degree q^3/2",
        four_ok,
        format!("distinct counts {:?}", distinct_counts),
    );
    if q == 2 {
        rep.check(
            "even-q/eta-gamma",
            "eta and gamma induce the same character iff they agree on St and S1",
            pair_ii_ok,
            "",
        );
        rep.check(
            "even-q/eta-eta",
            "two extensions eta induce the same character iff they agree on St and S1",
            pair_iii_ok,
            "",
        );
    }
    Ok(rep)
}

/// [`even_q_structure_checks`] for every nonzero c₄, folded into one check
/// per id.
pub fn even_q_suite(ctx: &CharContext) -> Result<Report, CharError> {
    let g = ctx.group(Level::ModY5Y6);
    ctx.classes(Level::ModY5Y6)?;
    let reports: Vec<Report> = g
        .tower()
        .ext()
        .elements()
        .skip(1)
        .collect::<Vec<_>>()
        .par_iter()
        .map(|&c4| even_q_structure_checks(ctx, c4))
        .collect::<Result<_, _>>()?;
    let mut out = Report::new(format!("even-q structure, q = {}, all nonzero c4", ctx.q()));
    let first = &reports[0];
    for c in &first.checks {
        let failing: Vec<String> = reports
            .iter()
            .filter(|r| r.get(&c.id).is_none_or(|x| !x.passed))
            .map(|r| r.subject.clone())
            .collect();
        let detail = match failing.first() {
            None => format!("{} values of c4", reports.len()),
            Some(s) => format!(
                "{} failing, first: {s}: {}",
                failing.len(),
                reports
                    .iter()
                    .find(|r| &r.subject == s)
                    .and_then(|r| r.get(&c.id))
                    .map(|x| x.detail.clone())
                    .unwrap_or_default()
            ),
        };
        out.check(&c.id, &c.description, failing.is_empty(), detail);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::DEFAULT_CENSUS_BUDGET;

    #[test]
    fn q2_every_c4() {
        let ctx = CharContext::new(2, DEFAULT_CENSUS_BUDGET).unwrap();
        let rep = even_q_suite(&ctx).unwrap();
        assert!(rep.all_passed(), "{rep}");
        assert_eq!(rep.checks.len(), 10);
    }

    #[test]
    fn odd_q_is_refused() {
        let ctx = CharContext::new(3, DEFAULT_CENSUS_BUDGET).unwrap();
        assert_eq!(
            even_q_structure_checks(&ctx, Fe::ONE).unwrap_err(),
            CharError::OddQ(3)
        );
    }
}
