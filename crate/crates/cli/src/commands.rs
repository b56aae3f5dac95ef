//! The subcommands.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::Path;
use std::sync::Arc;

use thiserror::Error;
use u3d4::characters::{
    build_partial_table, build_table, class_number, even_q_suite, verify_table, CharContext,
    CharError, CharacterTable, Family, TableExport, VerifyOptions,
};
use u3d4::d4::{solve_signs, verify_relations, D4Error};
use u3d4::field_sets::verify_field_lemmas;
use u3d4::gf::poly::prime_power;
use u3d4::gf::{FieldError, Tower};
use u3d4::group::{conjugacy_census, structure_checks, ClassData, Group, GroupError, Level};
use u3d4::report::Report;

use crate::output::{Format, Outcome};
use crate::{Cli, Command};

/// Random associativity triples in `verify-all`.
const ASSOCIATIVITY_TRIPLES: usize = 10_000;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Char(#[from] CharError),
    #[error(transparent)]
    D4(#[from] D4Error),
    #[error(transparent)]
    Io(#[from] io::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Group(GroupError::Budget { .. })
            | CliError::Char(CharError::Group(GroupError::Budget { .. })) => 3,
            CliError::Usage(_)
            | CliError::Field(_)
            | CliError::Group(GroupError::UnsupportedQ(_))
            | CliError::Char(
                CharError::UnsupportedCharacteristic(_)
                | CharError::UnknownFamily(_)
                | CharError::FamilyAbsent { .. },
            ) => 2,
            _ => 1,
        }
    }
}

/// Group-level paths take prime powers q ≤ 16 with p ∈ {2, 3, 5}.
fn check_q(q: u32) -> Result<(), CliError> {
    match prime_power(q) {
        Some((p, _)) if q <= 16 && p <= 5 => Ok(()),
        _ => Err(CliError::Usage(format!(
            "q = {q}: expected a prime power q <= 16 with p in {{2, 3, 5}}"
        ))),
    }
}

pub fn run(cli: &Cli) -> Result<bool, CliError> {
    let outcome = match &cli.command {
        Command::FieldLemmas { q, p, m } => {
            let tower = match (q, p, m) {
                (Some(q), _, _) => Tower::for_q(*q)?,
                (None, Some(p), Some(m)) => Tower::new(*p, *m)?,
                _ => return Err(CliError::Usage("give --q or both --p and --m".into())),
            };
            field_lemmas(&tower)
        }
        Command::Census { q, level } => {
            check_q(*q)?;
            census(*q, *level, cli.budget)?
        }
        Command::Characters {
            q,
            family,
            verify,
            export,
        } => {
            check_q(*q)?;
            characters(
                *q,
                family.as_deref(),
                *verify,
                export.as_deref(),
                cli.format,
                cli.budget,
            )?
        }
        Command::DeriveRelations { q } => derive_relations(*q)?,
        Command::VerifyAll { q } => {
            check_q(*q)?;
            verify_all(*q, cli.budget)?
        }
    };
    let stdout = io::stdout();
    let mut out = stdout.lock();
    outcome.write(cli.format, &mut out)?;
    out.flush()?;
    Ok(outcome.passed())
}

fn field_lemmas(tower: &Tower) -> Outcome {
    let mut o = Outcome::new("field-lemmas", tower.q());
    o.reports.push(verify_field_lemmas(tower));
    o
}

fn census_report(group: &Group, cd: &ClassData) -> (Report, usize) {
    let q = group.q();
    let level = group.level();
    let p = group.tower().p() as u64;
    let mut rep = Report::new(format!("conjugacy classes, q = {q}, level {level}"));
    rep.check(
        "census/class-equation",
        "the class sizes sum to the group order",
        cd.sizes.iter().sum::<u64>() == group.order(),
        format!("order {}", group.order()),
    );
    let is_p_power = |mut s: u64| {
        while s.is_multiple_of(p) {
            s /= p;
        }
        s == 1
    };
    rep.check(
        "census/p-power-sizes",
        "every class size is a power of p",
        cd.sizes.iter().all(|&s| is_p_power(s)),
        format!("{} classes", cd.len()),
    );
    if level == Level::Full {
        let k = class_number(q);
        rep.check(
            "census/class-number",
            "the number of classes matches the class-number polynomial",
            cd.len() as u64 == k,
            format!("{} classes, polynomial gives {k}", cd.len()),
        );
    }
    (rep, cd.len())
}

fn census(q: u32, level: Level, budget: u64) -> Result<Outcome, CliError> {
    let group = Group::for_q(q, level)?;
    let mut o = Outcome::new("census", q);
    let (rep, n) = census_report(&group, &conjugacy_census(&group, budget)?);
    o.reports.push(rep);
    o.summary
        .push(format!("q = {q}, level {level}: {n} classes"));
    o.set("level", level);
    o.set("classes", n);
    Ok(o)
}

fn family_report(table: &CharacterTable) -> Report {
    let mut rep = Report::new(format!("character families, q = {}", table.q));
    for r in &table.reports {
        rep.check(
            &format!("family/{}", r.family),
            "the family has the expected number of characters of the expected degree",
            r.passed(),
            format!(
                "{} of {} built, degree {}",
                r.count, r.expected_count, r.expected_degree
            ),
        );
    }
    rep
}

fn write_export(path: &Path, format: Format, export: &TableExport) -> Result<(), CliError> {
    let mut w = BufWriter::new(File::create(path)?);
    if format == Format::Csv {
        let (header, records) = export.csv_records();
        let mut c = csv::Writer::from_writer(w);
        c.write_record(&header)?;
        for r in records {
            c.write_record(&r)?;
        }
        c.flush()?;
    } else {
        serde_json::to_writer(&mut w, export)?;
        writeln!(w)?;
        w.flush()?;
    }
    Ok(())
}

fn characters(
    q: u32,
    family: Option<&str>,
    verify: bool,
    export: Option<&Path>,
    format: Format,
    budget: u64,
) -> Result<Outcome, CliError> {
    let ctx = CharContext::new(q, budget)?;
    let table = match family {
        Some(tag) => build_partial_table(&ctx, &[tag.parse::<Family>()?])?,
        None => build_table(&ctx)?,
    };
    let mut o = Outcome::new("characters", q);
    o.reports.push(family_report(&table));
    if verify {
        o.reports
            .push(verify_table(&ctx, &table, VerifyOptions::for_q(q))?);
        if q.is_multiple_of(2) {
            o.reports.push(even_q_suite(&ctx)?);
        }
    }
    if let Some(path) = export {
        write_export(
            path,
            format,
            &TableExport::new(&ctx.group(Level::Full), &table),
        )?;
        o.summary
            .push(format!("table written to {}", path.display()));
        o.set("export", path.display().to_string());
    }
    o.summary.push(format!("{} characters", table.rows.len()));
    o.set("characters", table.rows.len());
    o.set("families", &table.reports);
    Ok(o)
}

fn derive_relations(q: u32) -> Result<Outcome, CliError> {
    if !matches!(q, 2 | 3) {
        return Err(CliError::Usage(format!(
            "relations are derived at q = 2 or 3, not {q}"
        )));
    }
    let search = solve_signs()?;
    let mut o = Outcome::new("derive-relations", q);
    o.reports.push(verify_relations(q, &search));
    o.summary.push(format!(
        "{} of {} sign assignments associative, reproducing: {:?}",
        search.associative.len(),
        search.candidates,
        search.reproducing
    ));
    o.set("sign_search", &search);
    Ok(o)
}

fn verify_all(q: u32, budget: u64) -> Result<Outcome, CliError> {
    let tower = Arc::new(Tower::for_q(q)?);
    let full = Group::new(Arc::clone(&tower), Level::Full)?;
    let mut o = Outcome::new("verify-all", q);
    o.reports.push(verify_field_lemmas(&tower));
    o.reports.push(structure_checks(
        &full,
        budget,
        ASSOCIATIVITY_TRIPLES,
        q as u64,
    )?);
    let ctx = CharContext::from_group(&full, budget)?;
    let (census, classes) = census_report(&full, ctx.classes(Level::Full)?);
    o.reports.push(census);
    let search = solve_signs()?;
    for dq in [2, 3] {
        o.reports.push(verify_relations(dq, &search));
    }
    let table = build_table(&ctx)?;
    o.reports.push(family_report(&table));
    o.reports
        .push(verify_table(&ctx, &table, VerifyOptions::for_q(q))?);
    if q.is_multiple_of(2) {
        o.reports.push(even_q_suite(&ctx)?);
    }
    o.summary.push(format!(
        "{classes} classes, {} characters",
        table.rows.len()
    ));
    o.set("classes", classes);
    o.set("characters", table.rows.len());
    Ok(o)
}
