//! Checks on an assembled character table: counts, degrees, orthogonality,
//! kernels and restrictions to the central root subgroups.

use std::collections::HashSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::group::{Group, Level};
use crate::report::Report;

use super::cyclo::CycloValue;
use super::symbolic::{class_number, symbolic_identities};
use super::table::CharacterTable;
use super::{CharContext, CharError, CharRow, Family};

/// Tolerance for the floating-point inner products before rounding.
pub const FLOAT_TOLERANCE: f64 = 1e-6;

/// Which pairs of rows enter the Gram-matrix check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum GramMode {
    Full,
    Sampled { pairs: usize, seed: u64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct VerifyOptions {
    pub gram: GramMode,
    /// Column orthogonality over all pairs of classes.
    pub columns: bool,
}

impl VerifyOptions {
    /// Full Gram matrix and column sums at q = 2; 500 seeded random pairs
    /// otherwise.
    pub fn for_q(q: u32) -> Self {
        if q == 2 {
            VerifyOptions {
                gram: GramMode::Full,
                columns: true,
            }
        } else {
            VerifyOptions {
                gram: GramMode::Sampled {
                    pairs: 500,
                    seed: 0x5eed,
                },
                columns: false,
            }
        }
    }
}

/// ⟨a, b⟩·|G| computed exactly, and ⟨a, b⟩ in floating point.
fn inner(sizes: &[u64], order: u64, a: &[CycloValue], b: &[CycloValue]) -> (CycloValue, f64, f64) {
    let p = a[0].p();
    let mut exact = CycloValue::zero(p);
    let (mut re, mut im) = (0.0, 0.0);
    for ((&s, x), y) in sizes.iter().zip(a).zip(b) {
        let prod = *x * y.conj();
        exact = exact + prod.scale(s as i64);
        let (pr, pi) = prod.to_complex();
        re += s as f64 * pr;
        im += s as f64 * pi;
    }
    (exact, re / order as f64, im / order as f64)
}

/// Whether ⟨a, b⟩ = δ both exactly and within [`FLOAT_TOLERANCE`].
fn orthonormal_pair(
    sizes: &[u64],
    order: u64,
    a: &[CycloValue],
    b: &[CycloValue],
    same: bool,
) -> bool {
    let (exact, re, im) = inner(sizes, order, a, b);
    let want = if same { 1.0 } else { 0.0 };
    exact.as_integer() == Some(if same { order as i64 } else { 0 })
        && (re - want).abs() < FLOAT_TOLERANCE
        && im.abs() < FLOAT_TOLERANCE
}

/// Class indices of yⱼ(t) for every coordinate j and every t.
fn root_classes(ctx: &CharContext) -> Result<Vec<Vec<usize>>, CharError> {
    let g = ctx.group(Level::Full);
    let classes = ctx.classes(Level::Full)?;
    Ok((1..=6)
        .map(|j| {
            g.coord_field(j)
                .elements()
                .map(|t| classes.class_of(&g, &g.root(j, t)))
                .collect()
        })
        .collect())
}

/// First problem with the kernel of a row: Yⱼ ⊆ ker χ above the family's
/// top coordinate and Y_top ⊄ ker χ (Y₃Y₄Y₅Y₆ ⊆ ker χ for linear rows).
fn kernel_problem(row: &CharRow, roots: &[Vec<usize>]) -> Option<String> {
    let deg = CycloValue::int(row.values[0].p(), row.degree as i64);
    let in_kernel = |j: usize| roots[j - 1].iter().all(|&k| row.values[k] == deg);
    let (top, above) = match row.family.top_coordinate() {
        Some(i) => (Some(i), i + 1),
        None => (None, 3),
    };
    if let Some(j) = (above..=6).find(|&j| !in_kernel(j)) {
        return Some(format!("Y{j} is not in the kernel"));
    }
    match top {
        Some(i) if in_kernel(i) => Some(format!("Y{i} is in the kernel")),
        None if row.degree != 1 => Some(format!("linear row has degree {}", row.degree)),
        _ => None,
    }
}

/// First problem with χ|Y_top = χ(1)·λ for a nontrivial linear λ of Y_top.
fn restriction_problem(row: &CharRow, roots: &[Vec<usize>], group: &Group) -> Option<String> {
    let i = row.family.top_coordinate()?;
    let p = row.values[0].p();
    let f = group.coord_field(i);
    let mut exps = Vec::with_capacity(f.size() as usize);
    for (t, &k) in f.elements().zip(&roots[i - 1]) {
        let v = row.values[k];
        match (0..p).find(|&e| CycloValue::root(p, e).scale(row.degree as i64) == v) {
            Some(e) => exps.push(e),
            None => {
                return Some(format!(
                    "value at y{i}({}) is not a multiple of a root of unity",
                    t.0
                ))
            }
        }
    }
    for a in f.elements() {
        for b in f.basis() {
            if exps[f.add(a, b).idx()] != (exps[a.idx()] + exps[b.idx()]) % p {
                return Some(format!("restriction to Y{i} is not a character"));
            }
        }
    }
    if exps.iter().all(|&e| e == 0) {
        return Some(format!("restriction to Y{i} is trivial"));
    }
    None
}

fn first_failure(
    items: impl IntoIterator<Item = Option<String>>,
    total: usize,
    what: &str,
) -> (bool, String) {
    let fails: Vec<String> = items.into_iter().flatten().collect();
    match fails.first() {
        None => (true, format!("{total} {what}")),
        Some(f) => (false, format!("{} failures, first: {f}", fails.len())),
    }
}

/// Every check on `table`, which should hold all families.
pub fn verify_table(
    ctx: &CharContext,
    table: &CharacterTable,
    opts: VerifyOptions,
) -> Result<Report, CharError> {
    let q = table.q as u64;
    let n = table.rows.len();
    let classes = ctx.classes(Level::Full)?;
    let order = table.group_order();
    let sizes = &table.class_sizes;
    let rows = &table.rows;
    let mut rep = Report::new(format!("character table, q = {q}"));

    let failing: Vec<String> = table
        .reports
        .iter()
        .filter(|r| !r.passed())
        .map(|r| format!("{} ({} of {})", r.family, r.count, r.expected_count))
        .collect();
    rep.check(
        "table/families",
        "every family has the expected number of characters, all of the expected degree",
        failing.is_empty() && table.reports.len() == Family::for_q(table.q).len(),
        if failing.is_empty() {
            table
                .reports
                .iter()
                .map(|r| format!("{}: {} x {}", r.family, r.count, r.expected_degree))
                .collect::<Vec<_>>()
                .join(", ")
        } else {
            format!("failing: {}", failing.join(", "))
        },
    );
    rep.check(
        "table/count-census",
        "the number of characters equals the number of classes",
        n == classes.len(),
        format!("{n} characters, {} classes", classes.len()),
    );
    let k_poly = class_number(table.q);
    rep.check(
        "table/count-polynomial",
        "the number of characters equals the class-number polynomial",
        n as u64 == k_poly,
        format!("{n} characters, polynomial gives {k_poly}"),
    );
    let squares: u128 = rows.iter().map(|r| (r.degree as u128).pow(2)).sum();
    rep.check(
        "table/degree-squares",
        "the squared degrees sum to q^12",
        squares == (q as u128).pow(12),
        format!("sum = {squares}"),
    );
    let identity = classes.class_of(&ctx.group(Level::Full), &crate::group::UElem::IDENTITY);
    let (ok, detail) = first_failure(
        rows.iter().enumerate().map(|(k, r)| {
            (r.values[identity].as_integer() != Some(r.degree as i64)
                || !order.is_multiple_of(r.degree))
            .then(|| format!("row {k} ({})", r.family))
        }),
        n,
        "rows",
    );
    rep.check(
        "table/degrees",
        "the value at the identity is the degree, which divides |U|",
        ok,
        detail,
    );

    let mut seen = HashSet::new();
    let dup = rows.iter().position(|r| !seen.insert(&r.values));
    rep.check(
        "table/distinct",
        "the rows are pairwise distinct",
        dup.is_none(),
        dup.map_or_else(
            || format!("{n} rows"),
            |k| format!("row {k} repeats an earlier row"),
        ),
    );

    let norms: Vec<Option<String>> = rows
        .par_iter()
        .enumerate()
        .map(|(k, r)| {
            (!orthonormal_pair(sizes, order, &r.values, &r.values, true))
                .then(|| format!("row {k} ({})", r.family))
        })
        .collect();
    let (ok, detail) = first_failure(norms, n, "norms");
    rep.check("table/norms", "every row has norm 1", ok, detail);

    let pairs: Vec<(usize, usize)> = match opts.gram {
        GramMode::Full => (0..n).flat_map(|a| (a..n).map(move |b| (a, b))).collect(),
        GramMode::Sampled { pairs, seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            (0..pairs)
                .map(|_| (rng.gen_range(0..n), rng.gen_range(0..n)))
                .collect()
        }
    };
    let gram: Vec<Option<String>> = pairs
        .par_iter()
        .map(|&(a, b)| {
            (!orthonormal_pair(sizes, order, &rows[a].values, &rows[b].values, a == b))
                .then(|| format!("rows {a}, {b}"))
        })
        .collect();
    let (ok, detail) = first_failure(gram, pairs.len(), "pairs");
    let what = match opts.gram {
        GramMode::Full => "the full Gram matrix is the identity".to_owned(),
        GramMode::Sampled { pairs, seed } => {
            format!("{pairs} random pairs (seed {seed}) are orthonormal")
        }
    };
    rep.check("table/orthogonality", &what, ok, detail);

    let roots = root_classes(ctx)?;
    let (ok, detail) = first_failure(
        rows.iter().enumerate().map(|(k, r)| {
            kernel_problem(r, &roots).map(|e| format!("row {k} ({}): {e}", r.family))
        }),
        n,
        "rows",
    );
    rep.check(
        "table/kernels",
        "each row has the root subgroups above its family's top coordinate in its kernel, and not the top one",
        ok,
        detail,
    );

    let full = ctx.group(Level::Full);
    let (ok, detail) = first_failure(
        rows.iter().enumerate().map(|(k, r)| {
            restriction_problem(r, &roots, &full).map(|e| format!("row {k} ({}): {e}", r.family))
        }),
        n,
        "rows",
    );
    rep.check(
        "table/top-restriction",
        "on the top root subgroup each nonlinear row is its degree times a nontrivial linear character",
        ok,
        detail,
    );

    if opts.columns {
        let m = classes.len();
        let cols: Vec<Option<String>> = (0..m)
            .into_par_iter()
            .flat_map_iter(|a| {
                (a..m).map(move |b| {
                    let p = table.p;
                    let s = rows.iter().fold(CycloValue::zero(p), |acc, r| {
                        acc + r.values[a] * r.values[b].conj()
                    });
                    let want = if a == b { (order / sizes[a]) as i64 } else { 0 };
                    (s.as_integer() != Some(want)).then(|| format!("classes {a}, {b}"))
                })
            })
            .collect();
        let (ok, detail) = first_failure(cols, m * (m + 1) / 2, "class pairs");
        rep.check(
            "table/column-orthogonality",
            "column sums give the centralizer orders and vanish off the diagonal",
            ok,
            detail,
        );
    }

    rep.extend(symbolic_identities());
    Ok(rep)
}
