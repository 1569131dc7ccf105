//! Exact computational algebra for Khovanov-Lauda-Rouquier (quiver Hecke)
//! algebras attached to Borcherds-Cartan data.
//!
//! The crate is organized in layers:
//!
//! - [`qarith`]: the scalar field `Q(q)` of rational functions in one
//!   variable `q` with arbitrary-precision rational coefficients, together
//!   with the valuation at `q = 0` and the bar involution `q -> q^-1`.
//! - [`cartan`]: validated Borcherds-Cartan data, the symmetric bilinear
//!   form, quantum integers/binomials for real and imaginary indices, and
//!   sequence/weight bookkeeping.
//! - [`klr`]: the KLR algebra `R(alpha)` realized through its faithful
//!   polynomial representation: generators, normal forms over the basis
//!   `tau_w x^t 1_i`, gradings, relation and Serre verifiers, divided-power
//!   idempotents and graded dimensions of blocks.
//! - [`qalgebra`]: the negative half of the quantum algebra as the radical
//!   quotient of the free algebra under the twisted bilinear pairing, boson
//!   operators, Kashiwara operators, the crystal lattice and `B(infinity)`,
//!   lower/upper global bases and perfect-basis checks.
//! - [`kzero`]: the Grothendieck-group shadow: divided-power projective
//!   symbols, induction/restriction, the qdim pairing and the
//!   categorification cross-checks.
//! - [`crystal`]: abstract crystals, tensor products, elementary crystals,
//!   morphism checks and the recognition-theorem construction of
//!   `B(lambda)`.
//!
//! Everything is exact: no floating point is used anywhere.

pub mod cartan;
pub mod crystal;
pub mod kzero;
pub mod klr;
pub mod qalgebra;
pub mod qarith;
pub mod report;

pub use cartan::{BorcherdsCartanDatum, IndexSequence, RootVector, WeightVector};
pub use qarith::{QLaurent, QRat};
pub use report::{Report, ReportLine};
