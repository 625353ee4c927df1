//! Sparse elements of algebras with a multiplicative basis.
//!
//! Both Clifford algebras and (graded or ordinary) tensor products of Clifford
//! algebras have a basis, indexed by bit masks, that is closed under
//! multiplication up to sign. [`Element`] stores a sparse coefficient map over
//! such a basis and multiplies by bilinear extension.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::blade::Signature;
use crate::error::{Error, Result};
use crate::scalar::{RealScalar, Scalar, Sign};

/// An algebra whose basis elements multiply to signed basis elements.
pub trait BasisAlgebra: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync {
    /// Number of generating bits in a basis mask.
    fn mask_bits(&self) -> u32;

    fn basis_mul(&self, a: u64, b: u64) -> (Sign, u64);

    fn dimension(&self) -> usize {
        1usize << self.mask_bits()
    }

    /// Parity of a basis element under the natural Z2-grading.
    fn basis_parity(&self, mask: u64) -> u32 {
        mask.count_ones() % 2
    }

    /// Human-readable name of a basis element.
    fn basis_name(&self, mask: u64) -> String {
        format!("[{mask:#b}]")
    }
}

impl BasisAlgebra for Signature {
    fn mask_bits(&self) -> u32 {
        self.n()
    }

    #[inline]
    fn basis_mul(&self, a: u64, b: u64) -> (Sign, u64) {
        self.mul_masks(a, b)
    }

    fn basis_name(&self, mask: u64) -> String {
        crate::blade::Blade::from_mask(mask).to_string()
    }
}

/// Finite linear combination of basis elements. Zero coefficients are never
/// stored.
#[derive(Clone, PartialEq)]
pub struct Element<T, A> {
    alg: A,
    terms: BTreeMap<u64, T>,
}

impl<T: Scalar, A: BasisAlgebra> Element<T, A> {
    pub fn zero(alg: A) -> Self {
        Element {
            alg,
            terms: BTreeMap::new(),
        }
    }

    pub fn scalar(alg: A, c: T) -> Self {
        Self::basis(alg, 0, c)
    }

    pub fn one(alg: A) -> Self {
        Self::scalar(alg, T::one())
    }

    pub fn basis(alg: A, mask: u64, c: T) -> Self {
        let mut e = Self::zero(alg);
        e.add_term(mask, c);
        e
    }

    pub fn from_terms(alg: A, terms: impl IntoIterator<Item = (u64, T)>) -> Self {
        let mut e = Self::zero(alg);
        for (m, c) in terms {
            e.add_term(m, c);
        }
        e
    }

    pub fn algebra(&self) -> &A {
        &self.alg
    }

    pub fn terms(&self) -> impl Iterator<Item = (u64, &T)> + '_ {
        self.terms.iter().map(|(m, c)| (*m, c))
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, mask: u64) -> T {
        self.terms.get(&mask).cloned().unwrap_or_else(T::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// `Some(c)` when the element is `c` times the unit.
    pub fn as_scalar(&self) -> Option<T> {
        match self.terms.len() {
            0 => Some(T::zero()),
            1 => self.terms.get(&0).cloned(),
            _ => None,
        }
    }

    pub fn add_term(&mut self, mask: u64, c: T) {
        if c.is_negligible() {
            return;
        }
        match self.terms.get_mut(&mask) {
            Some(v) => {
                *v = v.clone() + c;
                if v.is_negligible() {
                    self.terms.remove(&mask);
                }
            }
            None => {
                self.terms.insert(mask, c);
            }
        }
    }

    pub fn scale(&self, c: &T) -> Self {
        Self::from_terms(
            self.alg.clone(),
            self.terms.iter().map(|(m, v)| (*m, v.clone() * c.clone())),
        )
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.alg != other.alg {
            return Err(Error::AlgebraMismatch {
                left: self.alg.to_string(),
                right: other.alg.to_string(),
            });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, -c.clone());
        }
        Ok(out)
    }

    /// Bilinear product. Fails when the operands live in different algebras.
    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let mut acc: BTreeMap<u64, T> = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let (s, m) = self.alg.basis_mul(*ma, *mb);
                let c = s.apply(ca.clone() * cb.clone());
                match acc.get_mut(&m) {
                    Some(v) => *v = v.clone() + c,
                    None => {
                        acc.insert(m, c);
                    }
                }
            }
        }
        acc.retain(|_, v| !v.is_negligible());
        Ok(Element {
            alg: self.alg.clone(),
            terms: acc,
        })
    }

    /// `xy - yx`.
    pub fn commutator(&self, other: &Self) -> Result<Self> {
        self.try_mul(other)?.try_sub(&other.try_mul(self)?)
    }

    /// `xy + yx`.
    pub fn anticommutator(&self, other: &Self) -> Result<Self> {
        self.try_mul(other)?.try_add(&other.try_mul(self)?)
    }

    pub fn commutes_with(&self, other: &Self) -> bool {
        self.commutator(other).map(|c| c.is_zero()).unwrap_or(false)
    }

    pub fn anticommutes_with(&self, other: &Self) -> bool {
        self.anticommutator(other)
            .map(|c| c.is_zero())
            .unwrap_or(false)
    }

    pub fn square(&self) -> Self {
        self.try_mul(self).expect("same algebra")
    }

    /// Terms with even Z2-degree.
    pub fn even_part(&self) -> Self {
        self.filter(|alg, m| alg.basis_parity(m) == 0)
    }

    pub fn odd_part(&self) -> Self {
        self.filter(|alg, m| alg.basis_parity(m) == 1)
    }

    pub fn is_even(&self) -> bool {
        self.terms.keys().all(|m| self.alg.basis_parity(*m) == 0)
    }

    pub fn is_odd(&self) -> bool {
        self.terms.keys().all(|m| self.alg.basis_parity(*m) == 1)
    }

    pub fn filter(&self, keep: impl Fn(&A, u64) -> bool) -> Self {
        Element {
            alg: self.alg.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| keep(&self.alg, **m))
                .map(|(m, c)| (*m, c.clone()))
                .collect(),
        }
    }

    /// Coefficient map, for rank computations.
    pub fn to_sparse(&self) -> BTreeMap<u64, T> {
        self.terms.clone()
    }

    pub fn map_coefficients<U: Scalar>(&self, f: impl Fn(&T) -> U) -> Element<U, A> {
        Element::from_terms(self.alg.clone(), self.terms.iter().map(|(m, c)| (*m, f(c))))
    }

    /// Product of a sequence, the unit for an empty sequence.
    pub fn product<'a>(alg: A, factors: impl IntoIterator<Item = &'a Self>) -> Result<Self>
    where
        T: 'a,
        A: 'a,
    {
        factors
            .into_iter()
            .try_fold(Self::one(alg), |acc, f| acc.try_mul(f))
    }
}

impl<T: RealScalar, A: BasisAlgebra> Element<T, A> {
    /// The same element over the complexified field.
    pub fn complexify(&self) -> Element<T::Complexified, A> {
        use crate::scalar::ComplexScalar;
        self.map_coefficients(|c| T::Complexified::from_real(c.clone()))
    }
}

impl<T: Scalar, A: BasisAlgebra> fmt::Debug for Element<T, A> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} in {}", self.render_with(|m| self.alg.basis_name(m)), self.alg)
    }
}

impl<T: Scalar, A: BasisAlgebra> Element<T, A> {
    /// Text form `c1*b1 + c2*b2 ...` using `name` for basis masks.
    pub fn render_with(&self, name: impl Fn(u64) -> String) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        self.terms
            .iter()
            .map(|(m, c)| {
                if *m == 0 {
                    c.render()
                } else if c.is_one() {
                    name(*m)
                } else {
                    format!("{}*{}", c.render(), name(*m))
                }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

impl<T: Scalar, A: BasisAlgebra> Neg for Element<T, A> {
    type Output = Self;

    fn neg(self) -> Self {
        Element {
            alg: self.alg,
            terms: self.terms.into_iter().map(|(m, c)| (m, -c)).collect(),
        }
    }
}

impl<T: Scalar, A: BasisAlgebra> Neg for &Element<T, A> {
    type Output = Element<T, A>;

    fn neg(self) -> Element<T, A> {
        -self.clone()
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $inner:ident) => {
        impl<T: Scalar, A: BasisAlgebra> $tr<&Element<T, A>> for &Element<T, A> {
            type Output = Element<T, A>;

            /// Panics when the operands live in different algebras; use the
            /// `try_` form to get an error instead.
            fn $method(self, rhs: &Element<T, A>) -> Element<T, A> {
                self.$inner(rhs).expect("operands must share an algebra")
            }
        }

        impl<T: Scalar, A: BasisAlgebra> $tr for Element<T, A> {
            type Output = Element<T, A>;

            fn $method(self, rhs: Element<T, A>) -> Element<T, A> {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, try_add);
forward_binop!(Sub, sub, try_sub);
forward_binop!(Mul, mul, try_mul);
