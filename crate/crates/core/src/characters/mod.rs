//! Irreducible characters of U, built family by family from linear
//! characters of coordinate subgroups by inertia, extension and induction,
//! then inflated from the relevant quotient to U.

pub mod cyclo;
pub mod even_q;
pub mod export;
pub mod families;
pub mod induce;
pub mod linchar;
pub mod symbolic;
pub mod table;
pub mod verify;

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::group::{conjugacy_census, ClassData, Group, GroupError, Level};

pub use cyclo::CycloValue;
pub use even_q::{even_q_structure_checks, even_q_suite};
pub use export::TableExport;
pub use families::{build_all, build_family, FamilyBuild, FamilyReport};
pub use induce::{induce, InductionPlan};
pub use linchar::{extend, inertia, LinChar};
pub use symbolic::{class_number, symbolic_identities};
pub use table::{build_partial_table, build_table, CharacterTable};
pub use verify::{verify_table, GramMode, VerifyOptions};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CharError {
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error("inertia group is not a coordinate-product overgroup of the subgroup")]
    UnsupportedInertia,
    #[error("the character does not extend: the target group's commutators leave its kernel")]
    NotExtendable,
    #[error("the domain is not contained in the target subgroup")]
    NotASubgroup,
    #[error("family {family} does not exist for q = {q}")]
    FamilyAbsent { family: Family, q: u32 },
    #[error("family {family}: built {built} characters, expected {expected}")]
    FamilyMismatch {
        family: Family,
        built: usize,
        expected: u64,
    },
    #[error("characters need p <= 5, got p = {0}")]
    UnsupportedCharacteristic(u32),
    #[error(transparent)]
    FieldSet(#[from] crate::field_sets::FieldSetError),
    #[error("this check needs even q, got q = {0}")]
    OddQ(u32),
    #[error("unknown family {0:?}")]
    UnknownFamily(String),
}

/// The character families, split so that each tag has a single degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    F6,
    F5,
    F4Odd,
    /// Even q, degree q³.
    F4EvenFull,
    /// Even q, degree q³/2.
    F4EvenHalf,
    F3,
    Flin,
}

impl Family {
    pub const ALL: [Family; 7] = [
        Family::F6,
        Family::F5,
        Family::F4Odd,
        Family::F4EvenFull,
        Family::F4EvenHalf,
        Family::F3,
        Family::Flin,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            Family::F6 => "F6",
            Family::F5 => "F5",
            Family::F4Odd => "F4odd",
            Family::F4EvenFull => "F4even-q3",
            Family::F4EvenHalf => "F4even-q3/2",
            Family::F3 => "F3",
            Family::Flin => "Flin",
        }
    }

    /// Families present for this q.
    pub fn for_q(q: u32) -> Vec<Family> {
        Family::ALL
            .into_iter()
            .filter(|f| f.exists_for(q))
            .collect()
    }

    pub fn exists_for(self, q: u32) -> bool {
        match self {
            Family::F4Odd => q % 2 == 1,
            Family::F4EvenFull | Family::F4EvenHalf => q.is_multiple_of(2),
            _ => true,
        }
    }

    /// The quotient in which the family is built.
    pub fn level(self) -> Level {
        match self {
            Family::F6 => Level::Full,
            Family::F5 => Level::ModY6,
            Family::F4Odd | Family::F4EvenFull | Family::F4EvenHalf => Level::ModY5Y6,
            Family::F3 => Level::ModY4Y5Y6,
            Family::Flin => Level::Abelianization,
        }
    }

    /// Highest root subgroup not in the kernel (`None` for linear
    /// characters, whose kernels contain Y₃Y₄Y₅Y₆).
    pub fn top_coordinate(self) -> Option<usize> {
        match self {
            Family::F6 => Some(6),
            Family::F5 => Some(5),
            Family::F4Odd | Family::F4EvenFull | Family::F4EvenHalf => Some(4),
            Family::F3 => Some(3),
            Family::Flin => None,
        }
    }

    pub fn expected_count(self, q: u64) -> u64 {
        if !self.exists_for(q as u32) {
            return 0;
        }
        match self {
            Family::F6 => (q - 1) * q.pow(3),
            Family::F5 => (q - 1) * q.pow(4),
            Family::F4Odd => (q.pow(3) - 1) * q,
            Family::F4EvenFull => q.pow(3) - 1,
            Family::F4EvenHalf => 4 * (q.pow(3) - 1) * (q - 1),
            Family::F3 => (q.pow(3) - 1) * q * q,
            Family::Flin => q.pow(4),
        }
    }

    pub fn expected_degree(self, q: u64) -> u64 {
        match self {
            Family::F6 => q.pow(4),
            Family::F5 | Family::F4Odd | Family::F4EvenFull => q.pow(3),
            Family::F4EvenHalf => q.pow(3) / 2,
            Family::F3 => q,
            Family::Flin => 1,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Family {
    type Err = CharError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Family::ALL
            .into_iter()
            .find(|f| f.tag().eq_ignore_ascii_case(s))
            .ok_or_else(|| CharError::UnknownFamily(s.to_owned()))
    }
}

impl Serialize for Family {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.tag())
    }
}

/// Subgroup and linear character that produced a row, with coordinates as
/// coefficient vectors over GF(p).
#[derive(Debug, Clone, Serialize)]
pub struct CharParams {
    pub level: Level,
    /// Subgroup H of the construction, as (coordinate, GF(p)-basis of Aᵢ).
    pub subgroup: Vec<(usize, Vec<Vec<u32>>)>,
    /// Witnesses (c₁, …) of λ on H.
    pub witnesses: Vec<Vec<u32>>,
    /// Inertia group of λ (equal to H unless an extension step was needed).
    pub inertia: Vec<(usize, Vec<Vec<u32>>)>,
    /// Witnesses of the extension of λ to the inertia group that was induced.
    pub extension: Vec<Vec<u32>>,
    /// Size of the orbit of λ under the quotient (1 for the direct
    /// induction used for F6).
    pub orbit_size: u64,
}

/// One irreducible character of U.
#[derive(Debug, Clone, Serialize)]
pub struct CharRow {
    pub family: Family,
    pub degree: u64,
    pub params: CharParams,
    /// Values on the conjugacy classes of U, in census order.
    pub values: Vec<CycloValue>,
}

/// Shared state for building characters at one q: the group and lazily
/// computed class data for each level.
pub struct CharContext {
    full: Group,
    budget: u64,
    censuses: [OnceLock<Result<ClassData, GroupError>>; 5],
}

impl CharContext {
    pub fn new(q: u32, budget: u64) -> Result<Self, CharError> {
        let full = Group::for_q(q, Level::Full)?;
        let p = full.tower().p();
        if p > cyclo::MAX_P as u32 {
            return Err(CharError::UnsupportedCharacteristic(p));
        }
        Ok(CharContext {
            full,
            budget,
            censuses: Default::default(),
        })
    }

    pub fn from_group(group: &Group, budget: u64) -> Result<Self, CharError> {
        let p = group.tower().p();
        if p > cyclo::MAX_P as u32 {
            return Err(CharError::UnsupportedCharacteristic(p));
        }
        Ok(CharContext {
            full: group.at_level(Level::Full),
            budget,
            censuses: Default::default(),
        })
    }

    pub fn q(&self) -> u32 {
        self.full.q()
    }

    pub fn p(&self) -> u32 {
        self.full.tower().p()
    }

    pub fn group(&self, level: Level) -> Group {
        self.full.at_level(level)
    }

    fn slot(level: Level) -> usize {
        Level::ALL
            .iter()
            .position(|&l| l == level)
            .expect("listed level")
    }

    /// Class data of the quotient at `level`, computed on first use.
    pub fn classes(&self, level: Level) -> Result<&ClassData, CharError> {
        self.censuses[Self::slot(level)]
            .get_or_init(|| conjugacy_census(&self.group(level), self.budget))
            .as_ref()
            .map_err(|e| CharError::Group(e.clone()))
    }

    /// For each class of U, its class in the quotient at `level`.
    pub fn inflation_map(&self, level: Level) -> Result<Vec<usize>, CharError> {
        let full = self.classes(Level::Full)?;
        let quot = self.classes(level)?;
        let g = self.group(level);
        Ok(full
            .reps
            .iter()
            .map(|r| quot.class_of(&g, &g.project(r)))
            .collect())
    }
}
