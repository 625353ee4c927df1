//! Exact Clifford algebra engine for the mod-8 periodicity of real Clifford
//! algebras.
//!
//! The crate covers:
//!
//! * [`blade`], [`algebra`], [`multivector`]: exact arithmetic in Cl(p,q) and
//!   its complexification, generic over the coefficient type.
//! * [`classify`]: the eightfold classification, primitive idempotents,
//!   division rings and minimal left ideals, each checked by brute force.
//! * [`brauer_wall`]: the Z8 walk over Cl(0,q), spinorial chessboards, the
//!   mod-4 periodicity of idempotent groups.
//! * [`tensor_iso`]: isomorphism certificates (graded and ordinary tensor
//!   products, even subalgebras, quaternionic factorizations).
//! * [`spin_reps`]: the `tau_{l,l'}` catalogue of SL(2,C) and its field
//!   structure along the walk.
//! * [`spinor`]: floating-point 2-spinors, twistors and qubits.
//! * [`render`] and [`verify`]: text/JSON/CSV renderers and verification
//!   reports used by the command-line tool.

pub mod algebra;
pub mod blade;
pub mod brauer_wall;
pub mod classify;
pub mod error;
pub mod linalg;
pub mod multivector;
pub mod render;
pub mod scalar;
pub mod spin_reps;
pub mod spinor;
pub mod tensor_iso;
pub mod verify;

pub use algebra::{BasisAlgebra, Element};
pub use blade::{Blade, ScalarField, Signature};
pub use error::{Error, Result};
pub use multivector::{Involution, Multivector};
pub use scalar::{ratio, ComplexScalar, Gaussian, Rational, RealScalar, Scalar, Sign};

/// Multivector with exact rational coefficients.
pub type RationalMultivector = Multivector<Rational>;
/// Multivector of a complexified algebra with Gaussian-rational coefficients.
pub type GaussianMultivector = Multivector<Gaussian>;
/// Floating-point multivector.
pub type Multivector64 = Multivector<f64>;
pub type Multivector32 = Multivector<f32>;


/// Double-precision numeric layer.
pub type FourVector64 = spinor::FourVector<f64>;
pub type Herm2x64 = spinor::Herm2<f64>;
pub type TwoSpinor64 = spinor::TwoSpinor<f64>;
pub type Twistor64 = spinor::Twistor<f64>;
pub type DensityMatrix64 = spinor::DensityMatrix<f64>;
pub type BlochVector64 = spinor::BlochVector<f64>;
