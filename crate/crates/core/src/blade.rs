//! Signatures and basis blades of Cl(p,q).
//!
//! Generators are numbered `1..=p+q`; the first `p` square to `+1`, the rest to
//! `-1`. Generator `e_i` is bit `i-1` of a blade mask.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::Sign;

/// Largest generator count a `u64` mask can address.
pub const MAX_GENERATORS: u32 = 63;

/// Ground field of the algebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ScalarField {
    Real,
    Complexified,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Signature {
    pub p: u32,
    pub q: u32,
    pub scalars: ScalarField,
}

impl Signature {
    pub fn new(p: u32, q: u32) -> Self {
        Signature {
            p,
            q,
            scalars: ScalarField::Real,
        }
    }

    pub fn complexified(p: u32, q: u32) -> Self {
        Signature {
            p,
            q,
            scalars: ScalarField::Complexified,
        }
    }

    /// Same `(p, q)` over the other ground field.
    pub fn with_scalars(self, scalars: ScalarField) -> Self {
        Signature { scalars, ..self }
    }

    pub fn n(&self) -> u32 {
        self.p + self.q
    }

    /// Real (or complex) dimension `2^(p+q)`.
    pub fn dimension(&self) -> usize {
        1usize << self.n()
    }

    pub fn full_mask(&self) -> u64 {
        low_bits(self.n())
    }

    /// Bits of the generators squaring to `-1`.
    pub fn negative_mask(&self) -> u64 {
        low_bits(self.n()) & !low_bits(self.p)
    }

    pub fn check_mask(&self, mask: u64) -> Result<()> {
        if mask & !self.full_mask() != 0 {
            Err(Error::IndexOutOfRange { sig: *self, mask })
        } else {
            Ok(())
        }
    }

    pub fn ensure_supported(&self) -> Result<()> {
        if self.n() > MAX_GENERATORS {
            Err(Error::TooManyGenerators {
                p: self.p,
                q: self.q,
                n: self.n(),
                max: MAX_GENERATORS,
            })
        } else {
            Ok(())
        }
    }

    /// Square of generator `e_i` (1-based).
    pub fn generator_square(&self, i: u32) -> Sign {
        Sign::from_negated(i > self.p)
    }

    /// Product of two basis blades, unchecked. Returns the sign and the mask.
    #[inline]
    pub fn mul_masks(&self, a: u64, b: u64) -> (Sign, u64) {
        let neg = reorder_parity(a, b) ^ ((a & b & self.negative_mask()).count_ones() & 1 == 1);
        (Sign::from_negated(neg), a ^ b)
    }

    /// Product of two basis blades with range checks.
    pub fn blade_product(&self, a: Blade, b: Blade) -> Result<(Sign, Blade)> {
        self.check_mask(a.mask)?;
        self.check_mask(b.mask)?;
        let (s, m) = self.mul_masks(a.mask, b.mask);
        Ok((s, Blade::from_mask(m)))
    }

    /// Square of a basis blade (always a sign times the unit).
    pub fn blade_square(&self, mask: u64) -> Sign {
        self.mul_masks(mask, mask).0
    }

    /// All blades in `(grade, mask)` order.
    pub fn blades(&self) -> Vec<Blade> {
        let mut out: Vec<Blade> = (0..=self.full_mask()).map(Blade::from_mask).collect();
        out.sort_by_key(|b| (b.grade(), b.mask));
        out
    }

    /// `(p - q) mod 8`, the type of the algebra.
    pub fn type_mod8(&self) -> u8 {
        (self.p as i64 - self.q as i64).rem_euclid(8) as u8
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.scalars {
            ScalarField::Real => write!(f, "Cl({},{})", self.p, self.q),
            ScalarField::Complexified => write!(f, "C⊗Cl({},{})", self.p, self.q),
        }
    }
}

/// A basis element `e_{i1 i2 ... ik}` with ascending indices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Blade {
    pub mask: u64,
}

impl Blade {
    pub const UNIT: Blade = Blade { mask: 0 };

    pub fn from_mask(mask: u64) -> Self {
        Blade { mask }
    }

    /// Blade from 1-based generator indices in any order. Repeats cancel
    /// pairwise; the sign of the reordering is discarded, so pass ascending
    /// distinct indices when the sign matters.
    pub fn from_indices(indices: &[u32]) -> Self {
        Blade {
            mask: indices.iter().fold(0, |m, &i| m ^ (1u64 << (i - 1))),
        }
    }

    pub fn generator(i: u32) -> Self {
        Blade { mask: 1u64 << (i - 1) }
    }

    pub fn grade(&self) -> u32 {
        self.mask.count_ones()
    }

    pub fn is_even(&self) -> bool {
        self.grade() % 2 == 0
    }

    /// 1-based generator indices in ascending order.
    pub fn indices(&self) -> Vec<u32> {
        (0..64).filter(|b| self.mask >> b & 1 == 1).map(|b| b + 1).collect()
    }
}

impl fmt::Display for Blade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.mask == 0 {
            return f.write_str("1");
        }
        let idx = self.indices();
        if idx.iter().all(|&i| i < 10) {
            write!(f, "e")?;
            for i in idx {
                write!(f, "{i}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = idx.iter().map(|i| i.to_string()).collect();
            write!(f, "e[{}]", parts.join(","))
        }
    }
}

pub(crate) fn low_bits(n: u32) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Parity of the number of transpositions needed to sort the concatenation
/// `a b` of two ascending index lists.
#[inline]
pub(crate) fn reorder_parity(a: u64, b: u64) -> bool {
    let mut swaps = 0u32;
    let mut s = a >> 1;
    while s != 0 {
        swaps += (s & b).count_ones();
        s >>= 1;
    }
    swaps & 1 == 1
}
