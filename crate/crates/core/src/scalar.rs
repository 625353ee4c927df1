//! Coefficient types.
//!
//! Everything in the algebra layer is generic over [`Scalar`]. Exact work uses
//! [`Rational`] (arbitrary precision) or [`Gaussian`] (pairs of rationals for the
//! complexified algebras); `f32`/`f64` and their complex counterparts are also
//! accepted for quick numerical experiments.

use std::fmt;
use std::ops::Neg;

use num_bigint::BigInt;
use num_complex::Complex;
use num_rational::{BigRational, Rational64};
use num_traits::{Num, Signed};

/// Exact rational coefficient.
pub type Rational = BigRational;

/// Exact Gaussian-rational coefficient, `a + b i` with rational `a`, `b`.
pub type Gaussian = Complex<BigRational>;

/// A coefficient field for multivectors.
///
/// Division must be exact for exact types; rank computations rely on it.
pub trait Scalar:
    Clone + PartialEq + fmt::Debug + Num + Neg<Output = Self> + Send + Sync + 'static
{
    fn from_i64(v: i64) -> Self;

    fn from_ratio(num: i64, den: i64) -> Self {
        Self::from_i64(num) / Self::from_i64(den)
    }

    fn half() -> Self {
        Self::from_ratio(1, 2)
    }

    /// Zero test used by elimination. Exact types use `is_zero`.
    fn is_negligible(&self) -> bool {
        self.is_zero()
    }

    /// Short human-readable form for renderers and JSON certificates.
    fn render(&self) -> String;
}

/// Scalars that contain an imaginary unit.
pub trait ComplexScalar: Scalar {
    type Real: Scalar;

    fn i() -> Self;
    fn conj(&self) -> Self;
    fn from_real(re: Self::Real) -> Self;
}

/// Real scalars with a complexification.
pub trait RealScalar: Scalar {
    type Complexified: ComplexScalar<Real = Self>;
}

impl Scalar for BigRational {
    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }

    fn render(&self) -> String {
        self.to_string()
    }
}

impl Scalar for Rational64 {
    fn from_i64(v: i64) -> Self {
        Rational64::from_integer(v)
    }

    fn render(&self) -> String {
        self.to_string()
    }
}

macro_rules! impl_float_scalar {
    ($t:ty, $eps:expr) => {
        impl Scalar for $t {
            fn from_i64(v: i64) -> Self {
                v as $t
            }

            fn is_negligible(&self) -> bool {
                self.abs() <= $eps
            }

            fn render(&self) -> String {
                format!("{}", self)
            }
        }
    };
}

impl_float_scalar!(f32, 1e-5);
impl_float_scalar!(f64, 1e-12);

impl<T> Scalar for Complex<T>
where
    T: Scalar + Signed,
{
    fn from_i64(v: i64) -> Self {
        Complex::new(T::from_i64(v), T::zero())
    }

    fn is_negligible(&self) -> bool {
        self.re.is_negligible() && self.im.is_negligible()
    }

    fn render(&self) -> String {
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => self.re.render(),
            (true, false) => format!("{}i", self.im.render()),
            (false, false) if self.im.is_negative() => {
                format!("({}-{}i)", self.re.render(), self.im.abs().render())
            }
            (false, false) => format!("({}+{}i)", self.re.render(), self.im.render()),
        }
    }
}

impl<T> ComplexScalar for Complex<T>
where
    T: Scalar + Signed,
{
    type Real = T;

    fn i() -> Self {
        Complex::new(T::zero(), T::one())
    }

    fn conj(&self) -> Self {
        Complex::new(self.re.clone(), -self.im.clone())
    }

    fn from_real(re: T) -> Self {
        Complex::new(re, T::zero())
    }
}

impl RealScalar for BigRational {
    type Complexified = Complex<BigRational>;
}

impl RealScalar for Rational64 {
    type Complexified = Complex<Rational64>;
}

impl RealScalar for f32 {
    type Complexified = Complex<f32>;
}

impl RealScalar for f64 {
    type Complexified = Complex<f64>;
}

/// Shorthand for an exact rational `num/den`.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::from_ratio(num, den)
}

/// Sign of a product of basis elements.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn from_negated(neg: bool) -> Self {
        if neg {
            Sign::Minus
        } else {
            Sign::Plus
        }
    }

    pub fn is_minus(self) -> bool {
        self == Sign::Minus
    }

    pub fn to_i8(self) -> i8 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn apply<T: Scalar>(self, x: T) -> T {
        match self {
            Sign::Plus => x,
            Sign::Minus => -x,
        }
    }
}

impl std::ops::Mul for Sign {
    type Output = Sign;

    fn mul(self, rhs: Sign) -> Sign {
        Sign::from_negated(self != rhs)
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}
