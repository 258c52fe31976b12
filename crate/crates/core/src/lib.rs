//! Exact construction of monogenic, ambigenic and contragenic polynomial
//! bases on the unit ball `B^3`, their `L2(B^3)` inner products, the Bergman
//! projection onto `Vec M`, and the monogenic + antimonogenic + contragenic
//! decomposition of harmonic polynomial fields.
//!
//! Every coefficient is an arbitrary-precision rational; integrals over the
//! ball come out as exact multiples of `pi` ([`PiRational`]).

pub mod ambigenic;
pub mod basis;
pub mod bergman;
pub mod checks;
pub mod decomposition;
pub mod error;
pub mod exact;
pub mod field;
pub mod harmonic;
pub mod io;
pub mod linalg;
pub mod monogenic;
pub mod par;
pub mod quadrature;
pub mod report;

pub use error::{Error, Result};
pub use exact::{PiRational, Rational, TriPoly, TsPoly};
pub use field::{QuatField, VecField};
pub use par::Exec;
