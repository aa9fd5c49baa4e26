//! Construction procedures: ovals B1 and B2, the four encompassing-circle
//! cases, the major-axis/radii oval family, and the Serlio/Clavius
//! comparison ovals. Every construction returns its result together with a
//! [`ConstructionTrace`] of all auxiliary objects, labeled with the
//! traditional diagram letters.

mod b1;
mod b2;
mod classic;
mod encircle;
mod family;

pub use b1::{b1_feasible, construct_oval_b1};
pub use b2::{construct_oval_b2, construct_oval_b2_angle_variant};
pub use classic::{construct_classic_oval, ClassicKind};
pub use encircle::{
    encircle_adjacent, encircle_overlapping, encircle_separate_family, encircle_separate_single,
    validate_encompassing, CaseTag, EncompassingResult,
};
pub use family::{b2_family_equivalence, oval_from_major_axis_and_radii};
