//! Serializable forms of a character table for JSON and CSV output.

use serde::Serialize;

use crate::group::Group;
use crate::report::SCHEMA_VERSION;

use super::cyclo::CycloValue;
use super::families::FamilyReport;
use super::table::CharacterTable;
use super::{CharParams, Family};

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Complex {
    pub re: f64,
    pub im: f64,
}

impl Complex {
    /// Rounded to 12 decimals, with negative zero cleared, so that equal
    /// values print identically.
    pub fn of(v: &CycloValue) -> Self {
        let clean = |x: f64| {
            let r = (x * 1e12).round() / 1e12;
            if r == 0.0 {
                0.0
            } else {
                r
            }
        };
        let (re, im) = v.to_complex();
        Complex {
            re: clean(re),
            im: clean(im),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ClassExport {
    pub rep: Vec<Vec<u32>>,
    pub size: u64,
}

#[derive(Debug, Clone, Serialize)]
pub struct CharacterExport {
    pub family: Family,
    pub degree: u64,
    pub params: CharParams,
    pub values: Vec<Complex>,
    /// Coefficients of each value in the basis 1, ζ, …, ζ^(p−2) of ℤ[ζ_p].
    pub exact: Vec<Vec<i64>>,
}

#[derive(Debug, Clone, Serialize)]
pub struct TableExport {
    pub schema_version: u32,
    pub q: u32,
    pub p: u32,
    pub classes: Vec<ClassExport>,
    pub families: Vec<FamilyReport>,
    pub characters: Vec<CharacterExport>,
}

impl TableExport {
    pub fn new(group: &Group, table: &CharacterTable) -> Self {
        let p = table.p as usize;
        TableExport {
            schema_version: SCHEMA_VERSION,
            q: table.q,
            p: table.p,
            classes: table
                .class_reps
                .iter()
                .zip(&table.class_sizes)
                .map(|(r, &size)| ClassExport {
                    rep: group.coeff_vectors(r),
                    size,
                })
                .collect(),
            families: table.reports.clone(),
            characters: table
                .rows
                .iter()
                .map(|row| CharacterExport {
                    family: row.family,
                    degree: row.degree,
                    params: row.params.clone(),
                    values: row.values.iter().map(Complex::of).collect(),
                    exact: row
                        .values
                        .iter()
                        .map(|v| v.coeffs()[..p - 1].to_vec())
                        .collect(),
                })
                .collect(),
        }
    }

    /// Header and one record per character: family, degree, parameters as
    /// JSON, then the values as `re+imi`.
    pub fn csv_records(&self) -> (Vec<String>, Vec<Vec<String>>) {
        let mut header = vec![
            "family".to_owned(),
            "degree".to_owned(),
            "params".to_owned(),
        ];
        header.extend((0..self.classes.len()).map(|k| format!("class_{k}")));
        let records = self
            .characters
            .iter()
            .map(|c| {
                let mut rec = vec![
                    c.family.to_string(),
                    c.degree.to_string(),
                    serde_json::to_string(&c.params).expect("parameters serialize"),
                ];
                rec.extend(c.values.iter().map(|v| format!("{}{:+}i", v.re, v.im)));
                rec
            })
            .collect();
        (header, records)
    }
}
