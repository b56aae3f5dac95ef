//! Construction of the character families.
//!
//! Each family is built in a quotient Ḡ of U from a coordinate subgroup H.
//! A linear character λ of H is stored as its exponent vector on the
//! GF(p)-basis letters yᵢ(bₖ) of H; conjugation by x acts linearly on these
//! vectors, so orbits are found by breadth-first search over integer codes.
//! For normal H each orbit gives the characters Ind(λ̃) for the extensions
//! λ̃ of λ to its inertia group. For F6 the subgroup Y₂Y₄Y₅Y₆ is not normal
//! in U; orbits are taken under its normalizer and the inductions are
//! deduplicated by value.

use std::collections::HashSet;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::gf::Fe;
use crate::group::{ClassData, Group, Subgroup, UElem};

use super::cyclo::CycloValue;
use super::induce::InductionPlan;
use super::linchar::{extend, inertia, witness_for, LinChar};
use super::{CharContext, CharError, CharParams, CharRow, Family};

/// Outcome of building one family: the rows and how they compare with the
/// expected count and degree.
#[derive(Debug, Clone)]
pub struct FamilyBuild {
    pub rows: Vec<CharRow>,
    pub report: FamilyReport,
}

#[derive(Debug, Clone, Serialize)]
pub struct FamilyReport {
    pub family: Family,
    pub q: u32,
    pub expected_count: u64,
    pub count: u64,
    pub expected_degree: u64,
    /// Degrees seen that differ from the expected one.
    pub wrong_degrees: Vec<u64>,
    /// Wall-clock build time; not serialized, so output stays reproducible.
    #[serde(skip)]
    pub seconds: f64,
}

impl FamilyReport {
    pub fn passed(&self) -> bool {
        self.count == self.expected_count && self.wrong_degrees.is_empty()
    }
}

impl FamilyBuild {
    /// The rows, or an error naming the family if the count or a degree
    /// is off.
    pub fn into_checked(self) -> Result<Vec<CharRow>, CharError> {
        if self.report.passed() {
            Ok(self.rows)
        } else {
            Err(CharError::FamilyMismatch {
                family: self.report.family,
                built: self.rows.len(),
                expected: self.report.expected_count,
            })
        }
    }
}

/// The five constructions; F4 yields all three F4 tags at once.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Construction {
    F6,
    F5,
    F4,
    F3,
    Lin,
}

impl Construction {
    fn of(f: Family) -> Self {
        match f {
            Family::F6 => Construction::F6,
            Family::F5 => Construction::F5,
            Family::F4Odd | Family::F4EvenFull | Family::F4EvenHalf => Construction::F4,
            Family::F3 => Construction::F3,
            Family::Flin => Construction::Lin,
        }
    }

    fn representative(self) -> Family {
        match self {
            Construction::F6 => Family::F6,
            Construction::F5 => Family::F5,
            Construction::F4 => Family::F4Odd,
            Construction::F3 => Family::F3,
            Construction::Lin => Family::Flin,
        }
    }

    fn subgroup_coords(self) -> &'static [usize] {
        match self {
            Construction::F6 => &[2, 4, 5, 6],
            Construction::F5 => &[1, 3, 4, 5],
            Construction::F4 => &[1, 3, 4],
            Construction::F3 => &[2, 3],
            Construction::Lin => &[1, 2],
        }
    }
}

/// Exponent-vector coordinates for linear characters of a coordinate
/// subgroup whose spaces are all full or zero.
struct ExpSpace {
    p: u32,
    coords: Vec<usize>,
    dims: Vec<usize>,
    d: usize,
}

impl ExpSpace {
    fn new(group: &Group, h: &Subgroup) -> Self {
        let coords: Vec<usize> = (1..=group.ncoords())
            .filter(|&i| !h.space(i).is_zero())
            .collect();
        assert!(
            coords.iter().all(|&i| h.space(i).is_full()),
            "coordinate spaces must be full"
        );
        let dims: Vec<usize> = coords
            .iter()
            .map(|&i| group.coord_field(i).degree() as usize)
            .collect();
        ExpSpace {
            p: group.tower().p(),
            d: dims.iter().sum(),
            coords,
            dims,
        }
    }

    fn size(&self) -> u64 {
        (self.p as u64).pow(self.d as u32)
    }

    /// Basis letters yᵢ(bₖ) in exponent-vector order.
    fn letters(&self, group: &Group) -> Vec<UElem> {
        self.coords
            .iter()
            .flat_map(|&i| {
                group
                    .coord_field(i)
                    .basis()
                    .into_iter()
                    .map(move |b| (i, b))
            })
            .map(|(i, b)| group.root(i, b))
            .collect()
    }

    /// GF(p)-coordinates of h ∈ H in the letter basis.
    fn coords_of(&self, group: &Group, h: &UElem) -> Vec<u32> {
        self.coords
            .iter()
            .flat_map(|&i| group.coord_field(i).coeffs(h.coord(i)))
            .collect()
    }

    /// First letter most significant.
    fn encode(&self, e: &[u32]) -> u64 {
        e.iter()
            .fold(0u64, |acc, &x| acc * self.p as u64 + x as u64)
    }

    fn decode(&self, mut code: u64) -> Vec<u32> {
        let mut e = vec![0u32; self.d];
        for slot in e.iter_mut().rev() {
            *slot = (code % self.p as u64) as u32;
            code /= self.p as u64;
        }
        e
    }

    /// Range of the exponent vector belonging to coordinate `i`.
    fn range(&self, i: usize) -> Option<std::ops::Range<usize>> {
        let pos = self.coords.iter().position(|&c| c == i)?;
        let start: usize = self.dims[..pos].iter().sum();
        Some(start..start + self.dims[pos])
    }

    fn to_linchar(&self, group: &Group, e: &[u32]) -> LinChar {
        let mut w = [Fe::ZERO; 6];
        for &i in &self.coords {
            let f = group.coord_field(i);
            let r = self.range(i).expect("own coordinate");
            w[i - 1] = witness_for(f, &f.basis(), &e[r]).expect("the trace form is nondegenerate");
        }
        LinChar::new(w)
    }
}

/// Matrix of λ ↦ λ^x on exponent vectors: row k holds the letter
/// coordinates of x·yₖ·x⁻¹.
fn action_matrix(group: &Group, space: &ExpSpace, letters: &[UElem], x: &UElem) -> Vec<Vec<u32>> {
    let x_inv = group.inverse(x);
    letters
        .iter()
        .map(|b| space.coords_of(group, &group.multiply(&group.multiply(x, b), &x_inv)))
        .collect()
}

fn normalizes(group: &Group, h: &Subgroup, letters: &[UElem], x: &UElem) -> bool {
    let x_inv = group.inverse(x);
    letters
        .iter()
        .all(|b| h.contains(&group.multiply(&group.multiply(x, b), &x_inv)))
}

/// Orbit representatives (least code) and orbit sizes among the exponent
/// vectors accepted by `valid`.
fn orbit_reps(
    space: &ExpSpace,
    mats: &[Vec<Vec<u32>>],
    valid: impl Fn(&[u32]) -> bool,
) -> Vec<(Vec<u32>, u64)> {
    let p = space.p;
    let n = space.size() as usize;
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    let mut queue = Vec::new();
    for code in 0..n as u64 {
        if seen[code as usize] {
            continue;
        }
        let e = space.decode(code);
        if !valid(&e) {
            continue;
        }
        seen[code as usize] = true;
        queue.clear();
        queue.push(e.clone());
        let mut size = 0u64;
        while let Some(v) = queue.pop() {
            size += 1;
            for m in mats {
                let w: Vec<u32> = m
                    .iter()
                    .map(|row| row.iter().zip(&v).map(|(&a, &b)| a * b).sum::<u32>() % p)
                    .collect();
                let c = space.encode(&w) as usize;
                if !seen[c] {
                    seen[c] = true;
                    queue.push(w);
                }
            }
        }
        out.push((e, size));
    }
    out
}

/// Basis coefficient vectors of each nonzero coordinate space.
pub(crate) fn describe(group: &Group, s: &Subgroup) -> Vec<(usize, Vec<Vec<u32>>)> {
    (1..=s.ncoords())
        .filter(|&i| !s.space(i).is_zero())
        .map(|i| {
            let f = group.coord_field(i);
            (i, s.space(i).basis().iter().map(|&b| f.coeffs(b)).collect())
        })
        .collect()
}

fn witness_vectors(group: &Group, lambda: &LinChar, s: &Subgroup) -> Vec<Vec<u32>> {
    (1..=group.ncoords())
        .map(|i| {
            if s.space(i).is_zero() {
                Vec::new()
            } else {
                group.coord_field(i).coeffs(lambda.witness(i))
            }
        })
        .collect()
}

struct Pending {
    lambda: LinChar,
    orbit_size: u64,
    inertia: Subgroup,
    extension: LinChar,
}

fn tag_for(c: Construction, q: u64, degree: u64) -> Family {
    match c {
        Construction::F4 if q % 2 == 1 => Family::F4Odd,
        Construction::F4 if degree == q.pow(3) => Family::F4EvenFull,
        Construction::F4 => Family::F4EvenHalf,
        other => other.representative(),
    }
}

fn construct(ctx: &CharContext, c: Construction) -> Result<Vec<CharRow>, CharError> {
    let level = c.representative().level();
    let group = ctx.group(level);
    let classes: &ClassData = ctx.classes(level)?;
    let inflate = ctx.inflation_map(level)?;
    let q = ctx.q() as u64;

    let h = Subgroup::coordinates(&group, c.subgroup_coords());
    let space = ExpSpace::new(&group, &h);
    let letters = space.letters(&group);
    let normal = h.is_normal_in(&group);
    let actors: Vec<UElem> = group
        .coordinate_generators()
        .into_iter()
        .filter(|x| !h.contains(x) && normalizes(&group, &h, &letters, x))
        .collect();
    let mats: Vec<_> = actors
        .iter()
        .map(|x| action_matrix(&group, &space, &letters, x))
        .collect();

    let top = c
        .representative()
        .top_coordinate()
        .and_then(|i| space.range(i));
    let y5 = if c == Construction::F6 {
        space.range(5)
    } else {
        None
    };
    let reps = orbit_reps(&space, &mats, |e| {
        top.as_ref()
            .is_none_or(|r| e[r.clone()].iter().any(|&x| x != 0))
            && y5
                .as_ref()
                .is_none_or(|r| e[r.clone()].iter().all(|&x| x == 0))
    });

    let index = group.order() / h.order();
    let pending: Vec<Vec<Pending>> = reps
        .par_iter()
        .map(|(e, orbit_size)| {
            let lambda = space.to_linchar(&group, e);
            if !normal || *orbit_size == index {
                return Ok(vec![Pending {
                    lambda,
                    orbit_size: *orbit_size,
                    inertia: h.clone(),
                    extension: lambda,
                }]);
            }
            let i = inertia(&group, &lambda, &h)?;
            if i.order() / h.order() != index / orbit_size {
                return Err(CharError::UnsupportedInertia);
            }
            Ok(extend(&group, &lambda, &h, &i)?
                .into_iter()
                .map(|ext| Pending {
                    lambda,
                    orbit_size: *orbit_size,
                    inertia: i.clone(),
                    extension: ext,
                })
                .collect())
        })
        .collect::<Result<_, CharError>>()?;
    let pending: Vec<Pending> = pending.into_iter().flatten().collect();

    let mut subgroups: Vec<Subgroup> = Vec::new();
    for pd in &pending {
        if !subgroups.contains(&pd.inertia) {
            subgroups.push(pd.inertia.clone());
        }
    }
    let plans: Vec<InductionPlan> = subgroups
        .par_iter()
        .map(|k| InductionPlan::new(&group, classes, k))
        .collect();
    let plan_of = |k: &Subgroup| &plans[subgroups.iter().position(|s| s == k).expect("planned")];

    let identity = classes.class_of(&group, &UElem::IDENTITY);
    let induced: Vec<Vec<CycloValue>> = pending
        .par_iter()
        .map(|pd| plan_of(&pd.inertia).induce(&group, &pd.extension))
        .collect();

    let mut seen: HashSet<Vec<CycloValue>> = HashSet::new();
    let mut rows = Vec::new();
    for (pd, values) in pending.into_iter().zip(induced) {
        if !seen.insert(values.clone()) {
            continue;
        }
        let degree = values[identity].as_integer().expect("degrees are integers") as u64;
        rows.push(CharRow {
            family: tag_for(c, q, degree),
            degree,
            params: CharParams {
                level,
                subgroup: describe(&group, &h),
                witnesses: witness_vectors(&group, &pd.lambda, &h),
                inertia: describe(&group, &pd.inertia),
                extension: witness_vectors(&group, &pd.extension, &pd.inertia),
                orbit_size: pd.orbit_size,
            },
            values: inflate.iter().map(|&k| values[k]).collect(),
        });
    }
    Ok(rows)
}

fn report_for(ctx: &CharContext, family: Family, rows: &[CharRow], seconds: f64) -> FamilyReport {
    let q = ctx.q() as u64;
    let expected_degree = family.expected_degree(q);
    let mut wrong: Vec<u64> = rows
        .iter()
        .map(|r| r.degree)
        .filter(|&d| d != expected_degree)
        .collect();
    wrong.sort_unstable();
    wrong.dedup();
    FamilyReport {
        family,
        q: ctx.q(),
        expected_count: family.expected_count(q),
        count: rows.len() as u64,
        expected_degree,
        wrong_degrees: wrong,
        seconds,
    }
}

/// Builds one family. Absent families (F4odd for even q, the even F4 tags
/// for odd q) are an error.
pub fn build_family(ctx: &CharContext, family: Family) -> Result<FamilyBuild, CharError> {
    if !family.exists_for(ctx.q()) {
        return Err(CharError::FamilyAbsent { family, q: ctx.q() });
    }
    let start = Instant::now();
    let rows: Vec<CharRow> = construct(ctx, Construction::of(family))?
        .into_iter()
        .filter(|r| r.family == family)
        .collect();
    let report = report_for(ctx, family, &rows, start.elapsed().as_secs_f64());
    Ok(FamilyBuild { rows, report })
}

/// Builds every family present for this q, in the order of [`Family::ALL`].
pub fn build_all(ctx: &CharContext) -> Result<Vec<FamilyBuild>, CharError> {
    let mut out = Vec::new();
    for c in [
        Construction::F6,
        Construction::F5,
        Construction::F4,
        Construction::F3,
        Construction::Lin,
    ] {
        let start = Instant::now();
        let rows = construct(ctx, c)?;
        let seconds = start.elapsed().as_secs_f64();
        for family in Family::for_q(ctx.q())
            .into_iter()
            .filter(|&f| Construction::of(f) == c)
        {
            let mine: Vec<CharRow> = rows
                .iter()
                .filter(|r| r.family == family)
                .cloned()
                .collect();
            let report = report_for(ctx, family, &mine, seconds);
            out.push(FamilyBuild { rows: mine, report });
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{Level, DEFAULT_CENSUS_BUDGET};

    #[test]
    fn exponent_codes_round_trip() {
        let g = Group::for_q(3, Level::ModY6).unwrap();
        let h = Subgroup::coordinates(&g, &[1, 3, 4, 5]);
        let s = ExpSpace::new(&g, &h);
        assert_eq!(s.d, 8);
        for code in [0u64, 1, 77, 6560] {
            assert_eq!(s.encode(&s.decode(code)), code);
        }
        assert_eq!(s.range(3), Some(1..4));
    }

    #[test]
    fn action_matrix_matches_conjugation() {
        let g = Group::for_q(2, Level::ModY6).unwrap();
        let h = Subgroup::coordinates(&g, &[1, 3, 4, 5]);
        let s = ExpSpace::new(&g, &h);
        let letters = s.letters(&g);
        let x = g.root(2, Fe(5));
        let m = action_matrix(&g, &s, &letters, &x);
        for code in [3u64, 100, 255] {
            let e = s.decode(code);
            let lam = s.to_linchar(&g, &e);
            let moved: Vec<u32> = m
                .iter()
                .map(|row| row.iter().zip(&e).map(|(a, b)| a * b).sum::<u32>() % 2)
                .collect();
            assert_eq!(
                s.to_linchar(&g, &moved),
                lam.conjugate(&g, &h, &x).canonical(&g, &h)
            );
        }
    }

    #[test]
    fn q2_family_counts() {
        let ctx = CharContext::new(2, DEFAULT_CENSUS_BUDGET).unwrap();
        let builds = build_all(&ctx).unwrap();
        let counts: Vec<(Family, u64)> = builds
            .iter()
            .map(|b| (b.report.family, b.report.count))
            .collect();
        assert_eq!(
            counts,
            vec![
                (Family::F6, 8),
                (Family::F5, 16),
                (Family::F4EvenFull, 7),
                (Family::F4EvenHalf, 28),
                (Family::F3, 28),
                (Family::Flin, 16)
            ]
        );
        assert!(builds.iter().all(|b| b.report.passed()));
    }

    #[test]
    fn absent_family_is_an_error() {
        let ctx = CharContext::new(2, DEFAULT_CENSUS_BUDGET).unwrap();
        assert!(matches!(
            build_family(&ctx, Family::F4Odd),
            Err(CharError::FamilyAbsent { .. })
        ));
    }
}
