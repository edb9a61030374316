//! Exact-arithmetic weak bialgebras and weak Hopf algebras: axiom
//! verification over the rationals, prime fields and cyclotomic extensions,
//! weak distributive laws with weak inverses and comonoidality checks, and
//! the wreath ("double crossed") product construction with synthesized
//! antipodes. The `weakhopf` binary drives everything from JSON spec files.
//!
//! ```
//! use weakhopf::{gallery, wreath, Field};
//!
//! // the triangular-matrix law: its wreath product is the matrix
//! // weak Hopf algebra
//! let law = gallery::blown_up_nothing_law(2, &Field::rationals()).unwrap();
//! let mut w = wreath::build_wreath(&law).unwrap();
//! assert_eq!(w.product.dim(), 4);
//! assert!(wreath::wreath_consistency_suite(&w).all_pass());
//!
//! // the product is a weak Hopf algebra even though the factors are not
//! let hopf = w.product.solve_antipode();
//! assert!(matches!(hopf, weakhopf::wha::AntipodeSolution::Found { .. }));
//! ```

pub mod cli;
pub mod gallery;
pub mod linalg;
pub mod report;
pub mod scalar;
pub mod specfile;
pub mod wdl;
pub mod wha;
pub mod wreath;

pub use scalar::{Field, FieldError, Rat, Scalar, ScalarError};
