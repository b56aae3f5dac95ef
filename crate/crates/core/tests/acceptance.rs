//! Acceptance suite: eight criteria, one PASS/FAIL line each. Runs without
//! the libtest harness so the lines are always printed; exits nonzero if
//! any criterion fails.

use std::error::Error;
use std::process::ExitCode;
use std::sync::Arc;
use std::time::{Duration, Instant};

use u3d4::characters::{
    build_table, class_number, even_q_suite, symbolic_identities, verify_table, CharContext,
    Family, GramMode, VerifyOptions,
};
use u3d4::d4::{solve_signs, verify_relations};
use u3d4::field_sets::verify_field_lemmas;
use u3d4::gf::Tower;
use u3d4::group::{
    associativity_check, conjugacy_census, structure_checks, Group, Level, DEFAULT_CENSUS_BUDGET,
};
use u3d4::report::Report;

struct Outcome {
    passed: bool,
    detail: String,
}

type Criterion = fn() -> Result<Outcome, Box<dyn Error>>;
type FamilyShape = (Family, usize, u64);

fn failures(rep: &Report) -> Vec<String> {
    rep.failures()
        .map(|c| format!("{} ({})", c.id, c.detail))
        .collect()
}

fn check_ids(rep: &Report, ids: &[&str]) -> bool {
    ids.iter().all(|id| rep.get(id).is_some_and(|c| c.passed))
}

/// Criterion 1: Census class numbers 103, 609, 3043 within 1 s, 30 s, 10 min.
fn class_numbers() -> Result<Outcome, Box<dyn Error>> {
    let mut ok = true;
    let mut parts = Vec::new();
    for (q, limit) in [
        (2, Duration::from_secs(1)),
        (3, Duration::from_secs(30)),
        (4, Duration::from_secs(600)),
    ] {
        let start = Instant::now();
        let g = Group::for_q(q, Level::Full)?;
        let k = conjugacy_census(&g, DEFAULT_CENSUS_BUDGET)?.len() as u64;
        let t = start.elapsed();
        ok &= k == class_number(q) && t < limit;
        parts.push(format!("q={q}: {k} classes in {:.2}s", t.as_secs_f64()));
    }
    Ok(Outcome {
        passed: ok,
        detail: parts.join("; "),
    })
}

/// Criterion 2: Family counts and degrees at q = 2 and 3.
fn counts_and_degrees() -> Result<Outcome, Box<dyn Error>> {
    let expected: [(u32, &[FamilyShape]); 2] = [
        (
            2,
            &[
                (Family::F6, 8, 16),
                (Family::F5, 16, 8),
                (Family::F4EvenFull, 7, 8),
                (Family::F4EvenHalf, 28, 4),
                (Family::F3, 28, 2),
                (Family::Flin, 16, 1),
            ],
        ),
        (
            3,
            &[
                (Family::F6, 54, 81),
                (Family::F5, 162, 27),
                (Family::F4Odd, 78, 27),
                (Family::F3, 234, 3),
                (Family::Flin, 81, 1),
            ],
        ),
    ];
    let mut ok = true;
    let mut parts = Vec::new();
    for (q, fams) in expected {
        let ctx = CharContext::new(q, DEFAULT_CENSUS_BUDGET)?;
        let table = build_table(&ctx)?;
        let got: Vec<(Family, usize, Vec<u64>)> = table
            .reports
            .iter()
            .map(|r| {
                let mut degs: Vec<u64> = table
                    .rows
                    .iter()
                    .filter(|x| x.family == r.family)
                    .map(|x| x.degree)
                    .collect();
                degs.dedup();
                (r.family, r.count as usize, degs)
            })
            .collect();
        let want: Vec<(Family, usize, Vec<u64>)> =
            fams.iter().map(|&(f, n, d)| (f, n, vec![d])).collect();
        ok &= got == want;
        parts.push(format!(
            "q={q}: {}",
            got.iter()
                .map(|(f, n, d)| format!("{n}x{d:?} {f}"))
                .collect::<Vec<_>>()
                .join(", ")
        ));
    }
    Ok(Outcome {
        passed: ok,
        detail: parts.join("; "),
    })
}

/// Criterion 3: Σ χ(1)² = q¹² and the number of characters equals the class count.
fn completeness() -> Result<Outcome, Box<dyn Error>> {
    let mut ok = true;
    let mut parts = Vec::new();
    for q in [2u32, 3] {
        let ctx = CharContext::new(q, DEFAULT_CENSUS_BUDGET)?;
        let table = build_table(&ctx)?;
        let squares: u64 = table.rows.iter().map(|r| r.degree * r.degree).sum();
        let classes = ctx.classes(Level::Full)?.len();
        ok &= squares == (q as u64).pow(12) && table.rows.len() == classes;
        parts.push(format!(
            "q={q}: sum of squares {squares}, {} characters, {classes} classes",
            table.rows.len()
        ));
    }
    let sym = symbolic_identities();
    ok &= sym.all_passed();
    parts.push(format!(
        "symbolic identities {}",
        if sym.all_passed() { "hold" } else { "fail" }
    ));
    Ok(Outcome {
        passed: ok,
        detail: parts.join("; "),
    })
}

/// Criterion 4: Full Gram matrix at q = 2, 500 seeded pairs at q = 3, tolerance 1e-6.
fn orthogonality() -> Result<Outcome, Box<dyn Error>> {
    let mut ok = true;
    let mut parts = Vec::new();
    for (q, gram) in [
        (2u32, GramMode::Full),
        (
            3,
            GramMode::Sampled {
                pairs: 500,
                seed: 0x5eed,
            },
        ),
    ] {
        let ctx = CharContext::new(q, DEFAULT_CENSUS_BUDGET)?;
        let table = build_table(&ctx)?;
        let rep = verify_table(
            &ctx,
            &table,
            VerifyOptions {
                gram,
                columns: q == 2,
            },
        )?;
        let ids: &[&str] = if q == 2 {
            &[
                "table/norms",
                "table/orthogonality",
                "table/column-orthogonality",
            ]
        } else {
            &["table/norms", "table/orthogonality"]
        };
        ok &= check_ids(&rep, ids);
        parts.push(format!(
            "q={q}: {}",
            rep.get("table/orthogonality")
                .map(|c| c.detail.clone())
                .unwrap_or_default()
        ));
        if !rep.all_passed() {
            parts.push(format!("failures {:?}", failures(&rep)));
        }
    }
    Ok(Outcome {
        passed: ok,
        detail: parts.join("; "),
    })
}

/// Criterion 5: Field lemma suite for q in {2, 3, 4, 5, 8, 9} within a minute.
fn field_lemmas() -> Result<Outcome, Box<dyn Error>> {
    let start = Instant::now();
    let mut bad = Vec::new();
    let mut checks = 0;
    for q in [2u32, 3, 4, 5, 8, 9] {
        let tower = Tower::for_q(q)?;
        let rep = verify_field_lemmas(&tower);
        checks += rep.checks.len();
        bad.extend(failures(&rep).into_iter().map(|f| format!("q={q} {f}")));
    }
    let t = start.elapsed();
    Ok(Outcome {
        passed: bad.is_empty() && t < Duration::from_secs(60),
        detail: format!(
            "{checks} checks in {:.2}s{}",
            t.as_secs_f64(),
            if bad.is_empty() {
                String::new()
            } else {
                format!(", failing {bad:?}")
            }
        ),
    })
}

/// Criterion 6: Even-q structure at q = 2 and 4 for every nonzero c₄.
fn even_q_structure() -> Result<Outcome, Box<dyn Error>> {
    let mut ok = true;
    let mut parts = Vec::new();
    for q in [2u32, 4] {
        let ctx = CharContext::new(q, DEFAULT_CENSUS_BUDGET)?;
        let rep = even_q_suite(&ctx)?;
        ok &= rep.all_passed();
        parts.push(format!(
            "q={q}: {}/{} checks",
            rep.checks.len() - failures(&rep).len(),
            rep.checks.len()
        ));
        if !rep.all_passed() {
            parts.push(format!("failures {:?}", failures(&rep)));
        }
    }
    Ok(Outcome {
        passed: ok,
        detail: parts.join("; "),
    })
}

/// Criterion 7: A triality-invariant sign assignment reproduces the relations
/// at q = 2 and 3, within a minute.
fn cross_derivation() -> Result<Outcome, Box<dyn Error>> {
    let start = Instant::now();
    let search = solve_signs()?;
    let mut bad = Vec::new();
    for q in [2u32, 3] {
        bad.extend(
            failures(&verify_relations(q, &search))
                .into_iter()
                .map(|f| format!("q={q} {f}")),
        );
    }
    let t = start.elapsed();
    Ok(Outcome {
        passed: !search.reproducing.is_empty() && bad.is_empty() && t < Duration::from_secs(60),
        detail: format!(
            "{} associative of {}, reproducing {:?}, {:.2}s{}",
            search.associative.len(),
            search.candidates,
            search.reproducing,
            t.as_secs_f64(),
            if bad.is_empty() {
                String::new()
            } else {
                format!(", failing {bad:?}")
            }
        ),
    })
}

/// Criterion 8: Center chain at q = 2 and 3; 10⁴ associativity triples at q = 2, 3, 4.
fn structural_invariants() -> Result<Outcome, Box<dyn Error>> {
    let mut bad = Vec::new();
    for q in [2u32, 3, 4] {
        let tower = Arc::new(Tower::for_q(q)?);
        let g = Group::new(tower, Level::Full)?;
        if q == 4 {
            let c = associativity_check(&g, 10_000, 404);
            if !c.passed {
                bad.push(format!("q=4 {} ({})", c.id, c.detail));
            }
            continue;
        }
        let rep = structure_checks(&g, DEFAULT_CENSUS_BUDGET, 10_000, 400 + q as u64)?;
        bad.extend(failures(&rep).into_iter().map(|f| format!("q={q} {f}")));
    }
    Ok(Outcome {
        passed: bad.is_empty(),
        detail: if bad.is_empty() {
            "centers at q=2,3; 10000 triples at q=2,3,4".into()
        } else {
            format!("failing {bad:?}")
        },
    })
}

fn main() -> ExitCode {
    let criteria: [(&str, Criterion); 8] = [
        ("1 class numbers", class_numbers),
        ("2 character counts and degrees", counts_and_degrees),
        ("3 completeness", completeness),
        ("4 orthogonality", orthogonality),
        ("5 field lemmas", field_lemmas),
        ("6 even-q structure", even_q_structure),
        ("7 cross-derivation", cross_derivation),
        ("8 structural invariants", structural_invariants),
    ];
    let mut all = true;
    for (name, f) in criteria {
        let start = Instant::now();
        let (passed, detail) = match f() {
            Ok(o) => (o.passed, o.detail),
            Err(e) => (false, format!("error: {e}")),
        };
        all &= passed;
        println!(
            "[{}] criterion {name}: {detail} [{:.1}s]",
            if passed { "PASS" } else { "FAIL" },
            start.elapsed().as_secs_f64()
        );
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
