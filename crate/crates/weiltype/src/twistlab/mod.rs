//! Twist classes, quotient L-polynomial factorizations, and the
//! maximal/minimal classification of the genus-3 Artin-Schreier family,
//! small elliptic automorphism groups, and the degree-s Fermat curve.

use thiserror::Error;

use crate::curves::CurveError;
use crate::finitefield::FieldError;
use crate::intpoly::PolyError;
use crate::weilclass::ClassError;

mod census;
mod chi;
mod elliptic;
mod fermat;
mod genus3;
mod group;
mod lambda;

pub use census::{census_elliptic, CensusGroup, CensusRecord};
pub use chi::{chi_factor, twist_chi_negate, ChiFactorData};
pub use elliptic::elliptic_type;
pub use fermat::{fermat_mixed, FermatEvidence};
pub use genus3::{
    e_vector_table_as34, genus3_report, genus3_type, pair_from_beta, Genus3Report,
};
pub use lambda::{lambda_multiset, TwistRecord};

pub use group::{
    as34_index, build_as34_group, frobenius_classes, As34Group, FiniteGroupWithFrobenius,
    FrobeniusClassDecomposition, TwistClass,
};

#[derive(Debug, Error)]
pub enum TwistError {
    /// The supplied Frobenius map is not a group automorphism.
    #[error("frobenius map is not a group automorphism")]
    NotAutomorphism,
    /// A polynomial division that the covering structure guarantees to be
    /// exact left a remainder; the inputs are inconsistent.
    #[error("L-polynomial quotient is not exact")]
    NonExactDivision,
    /// No assignment of twist eigenvalues matches the two root multisets.
    #[error("no valid root matching exists")]
    NoValidMatching,
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
    /// A point count that should meet the upper Weil bound does not.
    #[error("curve is not maximal over the requested field")]
    NotMaximal,
    #[error("field of size {q} exceeds the supported enumeration range")]
    FieldTooLarge { q: u64 },
    #[error(transparent)]
    Curve(#[from] CurveError),
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Class(#[from] ClassError),
}
