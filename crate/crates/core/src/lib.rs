//! Automorphism component groups of Inoue surfaces of type S(+) and S(-),
//! computed exactly from real quadratic field data.
//!
//! The pipeline is: validate the surface parameters ([`gamma::SurfaceParams`]),
//! find the units that stabilise the lattice ([`units`]), enumerate the finite
//! metabelian group H ([`autq::build_h`]), filter it by the membership
//! conditions and classify the result ([`autq::compute_q`]). Every answer can
//! be cross-checked against a brute-force normalizer test
//! ([`autq::normalizer_oracle`]).

pub mod autq;
pub mod error;
pub mod exactnum;
pub mod gamma;
pub mod lattice;
pub mod presets;
pub mod qfield;
pub mod units;

pub use error::{Error, Result};
pub use exactnum::{QuadComplex, QuadReal, Rational};
pub use qfield::{chi, FieldDescriptor, FieldElement, SurfaceType};
