//! The assembled character table of U.

use serde::Serialize;

use crate::group::{Level, UElem};

use super::families::{build_all, build_family, FamilyReport};
use super::{CharContext, CharError, CharRow, Family};

/// Rows of irreducible characters over the conjugacy classes of U.
#[derive(Debug, Clone, Serialize)]
pub struct CharacterTable {
    pub q: u32,
    pub p: u32,
    #[serde(skip)]
    pub class_reps: Vec<UElem>,
    pub class_sizes: Vec<u64>,
    pub rows: Vec<CharRow>,
    pub reports: Vec<FamilyReport>,
}

impl CharacterTable {
    pub fn group_order(&self) -> u64 {
        self.class_sizes.iter().sum()
    }

    pub fn families_passed(&self) -> bool {
        self.reports.iter().all(|r| r.passed())
    }
}

/// Builds every family and assembles the table.
pub fn build_table(ctx: &CharContext) -> Result<CharacterTable, CharError> {
    let builds = build_all(ctx)?;
    assemble(ctx, builds.into_iter().map(|b| (b.rows, b.report)))
}

/// Builds only the listed families.
pub fn build_partial_table(
    ctx: &CharContext,
    families: &[Family],
) -> Result<CharacterTable, CharError> {
    let mut parts = Vec::new();
    for &f in families {
        let b = build_family(ctx, f)?;
        parts.push((b.rows, b.report));
    }
    assemble(ctx, parts)
}

fn assemble(
    ctx: &CharContext,
    parts: impl IntoIterator<Item = (Vec<CharRow>, FamilyReport)>,
) -> Result<CharacterTable, CharError> {
    let classes = ctx.classes(Level::Full)?;
    let mut rows = Vec::new();
    let mut reports = Vec::new();
    for (r, rep) in parts {
        rows.extend(r);
        reports.push(rep);
    }
    Ok(CharacterTable {
        q: ctx.q(),
        p: ctx.p(),
        class_reps: classes.reps.clone(),
        class_sizes: classes.sizes.clone(),
        rows,
        reports,
    })
}
