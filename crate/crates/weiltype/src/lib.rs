//! Supersingularity analysis of curves and abelian varieties over finite
//! fields: L-polynomials, normalized Weil numbers, and the classification
//! of a variety and all of its twists as fully maximal, fully minimal, or
//! mixed.
//!
//! The crate is organized bottom-up:
//!
//! * [`finitefield`]: exact F_{p^r} arithmetic with pinned moduli.
//! * [`poly`] / [`quad`]: exact polynomial and Q(sqrt p) arithmetic.
//! * [`intpoly`]: L-polynomial algebra (point counts, Graeffe-type root
//!   powering, normalized Weil number orders, periods and parities).
//! * [`curves`]: concrete curve families and point counting.
//! * [`weilclass`]: the classification rules and the embedded elliptic and
//!   abelian-surface data tables.
//! * [`twistlab`]: twist machinery (Frobenius conjugacy classes, quotient
//!   analysis of a genus-3 family, the Fermat quartic argument, and a
//!   census of supersingular elliptic curves).

pub mod curves;
pub mod finitefield;
pub mod intpoly;
pub mod poly;
pub mod quad;
pub mod twistlab;
pub mod weilclass;

use thiserror::Error;

/// Aggregate error type for library consumers (the CLI maps these to exit
/// codes: domain errors are reported normally, internal inconsistencies
/// become a distinct failure class).
#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Field(#[from] finitefield::FieldError),
    #[error(transparent)]
    Poly(#[from] intpoly::PolyError),
    #[error(transparent)]
    Curve(#[from] curves::CurveError),
    #[error(transparent)]
    Class(#[from] weilclass::ClassError),
    #[error(transparent)]
    Twist(#[from] twistlab::TwistError),
}

impl Error {
    /// True for errors that indicate a broken internal invariant rather
    /// than an unsupported or out-of-domain request.
    pub fn is_internal(&self) -> bool {
        match self {
            Error::Twist(twistlab::TwistError::NonExactDivision) => true,
            Error::Twist(twistlab::TwistError::NoValidMatching) => true,
            Error::Twist(twistlab::TwistError::NotMaximal) => true,
            _ => false,
        }
    }
}
