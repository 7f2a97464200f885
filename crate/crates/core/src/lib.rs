//! Exact computations with invariant weights on finite direct products of
//! finite chain rings.
//!
//! The crate builds the principal-ideal lattice of a product ring, its
//! Möbius function, the convolution and correlation algebra of functions on
//! the ring, and decides a sufficient condition under which every linear
//! isometry of a given weight extends to a monomial transformation. A
//! brute-force [`oracle`] checks the extension property directly on small
//! codes.
//!
//! ```
//! use chainweights::{criterion::criterion_check, weights::homogeneous, ProductRing};
//!
//! let ring: ProductRing = "Z4".parse().unwrap();
//! let report = criterion_check(&homogeneous(&ring));
//! assert!(report.pass);
//! ```

pub mod conv;
pub mod criterion;
pub mod error;
pub mod linalg;
pub mod mobius;
pub mod notation;
pub mod oracle;
pub mod ring;
pub mod scalar;
pub mod weightfile;
pub mod weights;

pub use error::{Error, Result};
pub use ring::{ChainKind, ChainRingSpec, Element, IdealExponent, ProductRing};
pub use scalar::Scalar;
