//! Multivectors of Cl(p,q): involutions, grading, the volume element.

use std::fmt;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::algebra::Element;
use crate::blade::{Blade, ScalarField, Signature};
use crate::error::Result;
use crate::scalar::{ComplexScalar, RealScalar, Scalar, Sign};

/// Element of Cl(p,q) (or of its complexification) with coefficients in `T`.
pub type Multivector<T> = Element<T, Signature>;

/// The fundamental (anti)automorphisms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Involution {
    /// `A -> A*`, grade `k` picks up `(-1)^k`.
    GradeInvolution,
    /// `A -> ~A`, grade `k` picks up `(-1)^(k(k-1)/2)`.
    Reversion,
    /// Composition of the two.
    Conjugation,
}

impl Involution {
    pub fn sign_for_grade(self, k: u32) -> Sign {
        let grade = k % 2 == 1;
        let rev = (k * k.saturating_sub(1) / 2) % 2 == 1;
        Sign::from_negated(match self {
            Involution::GradeInvolution => grade,
            Involution::Reversion => rev,
            Involution::Conjugation => grade ^ rev,
        })
    }
}

impl<T: Scalar> Multivector<T> {
    pub fn blade(sig: Signature, b: Blade, c: T) -> Self {
        Self::basis(sig, b.mask, c)
    }

    /// Generator `e_i`, 1-based.
    pub fn generator(sig: Signature, i: u32) -> Self {
        Self::basis(sig, Blade::generator(i).mask, T::one())
    }

    /// Unit blade from ascending 1-based indices.
    pub fn unit_blade(sig: Signature, indices: &[u32]) -> Self {
        Self::basis(sig, Blade::from_indices(indices).mask, T::one())
    }

    pub fn signature(&self) -> Signature {
        *self.algebra()
    }

    pub fn involute(&self, kind: Involution) -> Self {
        Self::from_terms(
            self.signature(),
            self.terms()
                .map(|(m, c)| (m, kind.sign_for_grade(m.count_ones()).apply(c.clone()))),
        )
    }

    pub fn reversion(&self) -> Self {
        self.involute(Involution::Reversion)
    }

    pub fn grade_involution(&self) -> Self {
        self.involute(Involution::GradeInvolution)
    }

    pub fn grade_part(&self, k: u32) -> Self {
        self.filter(|_, m| m.count_ones() == k)
    }

    /// Product with a single basis blade on the right, `self * c e_B`.
    pub fn mul_blade_right(&self, b: Blade, c: &T) -> Self {
        let sig = self.signature();
        Self::from_terms(
            sig,
            self.terms().map(|(m, x)| {
                let (s, r) = sig.mul_masks(m, b.mask);
                (r, s.apply(x.clone() * c.clone()))
            }),
        )
    }

    /// Product with a single basis blade on the left, `c e_B * self`.
    pub fn mul_blade_left(&self, b: Blade, c: &T) -> Self {
        let sig = self.signature();
        Self::from_terms(
            sig,
            self.terms().map(|(m, x)| {
                let (s, r) = sig.mul_masks(b.mask, m);
                (r, s.apply(c.clone() * x.clone()))
            }),
        )
    }

    /// Random element with `terms` entries, small integer numerators and
    /// denominators in `{1, 2, 4}`.
    pub fn random<R: Rng + ?Sized>(sig: Signature, rng: &mut R, terms: usize) -> Self {
        let full = sig.full_mask();
        Self::from_terms(
            sig,
            (0..terms).map(|_| {
                let m = if full == 0 { 0 } else { rng.gen_range(0..=full) };
                let num = rng.gen_range(-4i64..=4);
                let den = [1i64, 2, 4][rng.gen_range(0..3)];
                (m, T::from_ratio(num, den))
            }),
        )
    }
}

impl<T: RealScalar> Multivector<T> {
    /// The same element of the complexified algebra.
    pub fn complexified(&self) -> Multivector<T::Complexified> {
        let sig = self.signature().with_scalars(ScalarField::Complexified);
        Multivector::from_terms(
            sig,
            self.terms().map(|(m, c)| (m, T::Complexified::from_real(c.clone()))),
        )
    }
}

/// Product of two multivectors of the same signature.
pub fn mv_mul<T: Scalar>(x: &Multivector<T>, y: &Multivector<T>) -> Result<Multivector<T>> {
    x.try_mul(y)
}

pub fn involute<T: Scalar>(x: &Multivector<T>, kind: Involution) -> Multivector<T> {
    x.involute(kind)
}

/// `omega = e_1 e_2 ... e_{p+q}`.
pub fn volume_element<T: Scalar>(sig: Signature) -> Multivector<T> {
    Multivector::basis(sig, sig.full_mask(), T::one())
}

/// Square of the volume element, computed by blade multiplication.
pub fn omega_square(sig: Signature) -> Sign {
    sig.blade_square(sig.full_mask())
}

/// The `2^(p+q-1)` even blades (just the unit for `p+q = 0`).
pub fn even_subalgebra_basis(sig: Signature) -> Vec<Blade> {
    sig.blades().into_iter().filter(Blade::is_even).collect()
}

pub fn even_part<T: Scalar>(x: &Multivector<T>) -> Multivector<T> {
    x.even_part()
}

pub fn is_even<T: Scalar>(x: &Multivector<T>) -> bool {
    x.is_even()
}

impl<T: Scalar> fmt::Display for Multivector<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render_with(|m| Blade::from_mask(m).to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{ratio, Rational};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    type Mv = Multivector<Rational>;

    fn e(sig: Signature, idx: &[u32]) -> Mv {
        Mv::unit_blade(sig, idx)
    }

    fn one(sig: Signature) -> Mv {
        Mv::one(sig)
    }

    #[test]
    fn annihilating_pair() {
        let sig = Signature::new(1, 0);
        let a = one(sig) + e(sig, &[1]);
        let b = one(sig) - e(sig, &[1]);
        assert!(mv_mul(&a, &b).unwrap().is_zero());
    }

    #[test]
    fn half_sum_is_idempotent() {
        let sig = Signature::new(1, 0);
        let f = (one(sig) + e(sig, &[1])).scale(&ratio(1, 2));
        assert_eq!(mv_mul(&f, &f).unwrap(), f);
    }

    #[test]
    fn phi_psi_product_in_cl13() {
        // e1 e2 e3 e1 e2 e4 = e2 e3 e2 e4   (e1 moves left twice, e1^2 = 1)
        //                   = -e2 e2 e3 e4 = e34   (e2^2 = -1)
        let sig = Signature::new(1, 3);
        let prod = mv_mul(&e(sig, &[1, 2, 3]), &e(sig, &[1, 2, 4])).unwrap();
        assert_eq!(prod, e(sig, &[3, 4]));
    }

    #[test]
    fn involution_examples() {
        let sig = Signature::new(3, 0);
        assert_eq!(
            involute(&e(sig, &[1, 2]), Involution::GradeInvolution),
            e(sig, &[1, 2])
        );
        assert_eq!(involute(&e(sig, &[1, 2, 3]), Involution::Reversion), -e(sig, &[1, 2, 3]));
        let x = one(sig) + e(sig, &[1]) + e(sig, &[1, 2]);
        let expect = one(sig) - e(sig, &[1]) - e(sig, &[1, 2]);
        assert_eq!(involute(&x, Involution::Conjugation), expect);
    }

    #[test]
    fn involutions_have_order_two() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let sig = Signature::new(2, 3);
        for _ in 0..20 {
            let x = Mv::random(sig, &mut rng, 10);
            for k in [
                Involution::GradeInvolution,
                Involution::Reversion,
                Involution::Conjugation,
            ] {
                assert_eq!(x.involute(k).involute(k), x);
            }
        }
    }

    #[test]
    fn omega_square_examples() {
        assert_eq!(omega_square(Signature::new(0, 4)), Sign::Plus);
        assert_eq!(omega_square(Signature::new(1, 3)), Sign::Minus);
        assert_eq!(omega_square(Signature::new(0, 3)), Sign::Plus);
        let w: Mv = volume_element(Signature::new(0, 3));
        assert_eq!(w, e(Signature::new(0, 3), &[1, 2, 3]));
    }

    #[test]
    fn omega_square_follows_mod8_rule_for_even_n() {
        for n in (0..=12u32).step_by(2) {
            for p in 0..=n {
                let sig = Signature::new(p, n - p);
                let expected = match sig.type_mod8() {
                    0 | 4 => Sign::Plus,
                    2 | 6 => Sign::Minus,
                    _ => unreachable!("even n gives even p-q"),
                };
                assert_eq!(omega_square(sig), expected, "{sig}");
            }
        }
    }

    #[test]
    fn even_part_and_basis() {
        let sig = Signature::new(2, 1);
        let x = one(sig) + e(sig, &[1]) + e(sig, &[1, 2]);
        assert_eq!(even_part(&x), one(sig) + e(sig, &[1, 2]));
        assert_eq!(even_subalgebra_basis(Signature::new(1, 3)).len(), 8);
        assert!(!is_even(&x));
    }

    #[test]
    fn dirac_hestenes_element_is_even() {
        // a0 + a01 e01 + ... + a0123 e0123, restated with e0 -> e1.
        let sig = Signature::new(1, 3);
        let blades: [&[u32]; 8] = [&[], &[1, 2], &[1, 3], &[1, 4], &[2, 3], &[2, 4], &[3, 4], &[1, 2, 3, 4]];
        let mut phi = Mv::zero(sig);
        for (i, b) in blades.iter().enumerate() {
            phi = phi + e(sig, b).scale(&ratio(i as i64 + 1, 3));
        }
        assert!(is_even(&phi));
    }

    #[test]
    fn display_uses_blade_names() {
        let sig = Signature::new(2, 0);
        let x = one(sig).scale(&ratio(1, 2)) + e(sig, &[1, 2]).scale(&ratio(-1, 1));
        assert_eq!(x.to_string(), "1/2 + -1*e12");
    }
}
