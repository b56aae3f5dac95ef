//! The Sylow p-subgroup U of the Steinberg triality group ³D₄(q³): exact
//! field arithmetic, a collection-based model of U and its quotients,
//! conjugacy class census, and construction of all irreducible characters
//! by induction from linear characters.

pub mod characters;
pub mod d4;
pub mod field_sets;
pub mod gf;
pub mod group;
pub mod report;
