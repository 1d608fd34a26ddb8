//! Exact polynomial algebra for a 3x3 determinantal identity and the
//! completion of unimodular rows it yields.
//!
//! A row `(a, b, c)` over a commutative ring is *unimodular* when its entries
//! generate the unit ideal, and *completable* when it is the first column of
//! an invertible matrix. If `z^2 + bz + ac` has roots `alpha, beta` in the
//! ring, one fixed polynomial matrix, evaluated at `a, -alpha, -beta, c`
//! together with eight parameters, gives a completion of determinant 1.
//!
//! The crate is organised bottom-up:
//!
//! * [`poly`]: sparse polynomials over `Z` with big-integer coefficients,
//!   rings, and substitution homomorphisms.
//! * [`parse`]: the expression grammar used by the CLI and the catalog.
//! * [`linalg`]: polynomial matrices and their exact determinant.
//! * [`ringmaps`]: membership in `(ad - bc)` through the Segre substitution,
//!   and explicit ideal-membership certificates.
//! * [`catalog`]: every identity behind the construction, as named checks.
//! * [`completion`]: the integer pipeline from `(a, b, c)` to a matrix.
//!
//! ```
//! use completion_kit::catalog;
//!
//! let report = catalog::verify_main_identity();
//! assert!(report.passed);
//! assert!(report.residual.is_zero());
//! ```

pub mod catalog;
pub mod completion;
mod error;
pub mod linalg;
pub mod parse;
pub mod poly;
pub mod ringmaps;

pub use error::{Error, Result};
pub use linalg::PolyMatrix;
pub use parse::parse;
pub use poly::{Homomorphism, Monomial, Polynomial, Ring, RingSpec};
pub use ringmaps::{check_certificate, MembershipCertificate, SegreContext};

// The guide's code blocks run as doc-tests through these modules.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/polynomials.md")]
    mod polynomials {}
    #[doc = include_str!("../../../book/src/determinants.md")]
    mod determinants {}
    #[doc = include_str!("../../../book/src/segre.md")]
    mod segre {}
    #[doc = include_str!("../../../book/src/catalog.md")]
    mod catalog {}
    #[doc = include_str!("../../../book/src/completion.md")]
    mod completion {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
