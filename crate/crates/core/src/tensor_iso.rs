//! Isomorphism certificates between Clifford algebras.
//!
//! A family of elements satisfying the Clifford relations of `Cl(p,q)` and
//! generating a subalgebra of dimension `2^(p+q)` is an isomorphic image of
//! `Cl(p,q)`. Every check here produces such a [`GeneratorMap`].

use std::fmt;

use num_traits::One;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::algebra::{BasisAlgebra, Element};
use crate::blade::{low_bits, Blade, ScalarField, Signature, MAX_GENERATORS};
use crate::classify::{algebra_type, AlgebraClass, DivisionRing};
use crate::error::{Error, Result};
use crate::linalg::SpanBasis;
use crate::multivector::{omega_square, volume_element, Multivector};
use crate::scalar::{ComplexScalar, Gaussian, Rational, Scalar, Sign};
use crate::{GaussianMultivector, RationalMultivector};

/// Largest total generator count accepted by the exact checks.
pub const MAX_CHECK_GENERATORS: u32 = 10;

/// Tensor product of Clifford algebras, graded or ordinary. Factor `j`
/// occupies a contiguous range of mask bits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TensorAlgebra {
    factors: Vec<Signature>,
    offsets: Vec<u32>,
    graded: bool,
    scalars: ScalarField,
}

impl TensorAlgebra {
    fn new(factors: Vec<Signature>, graded: bool, scalars: ScalarField) -> Result<Self> {
        let mut offsets = Vec::with_capacity(factors.len());
        let mut total = 0u32;
        for f in &factors {
            offsets.push(total);
            total += f.n();
        }
        if total > MAX_GENERATORS {
            return Err(Error::Precondition(format!(
                "tensor product has {total} generators; at most {MAX_GENERATORS} are supported"
            )));
        }
        let factors = factors
            .into_iter()
            .map(|f| f.with_scalars(ScalarField::Real))
            .collect();
        Ok(TensorAlgebra {
            factors,
            offsets,
            graded,
            scalars,
        })
    }

    /// `A (x)^ B (x)^ ...` with the Koszul sign rule.
    pub fn graded(factors: Vec<Signature>) -> Result<Self> {
        Self::new(factors, true, ScalarField::Real)
    }

    pub fn ordinary(factors: Vec<Signature>) -> Result<Self> {
        Self::new(factors, false, ScalarField::Real)
    }

    pub fn with_scalars(mut self, scalars: ScalarField) -> Self {
        self.scalars = scalars;
        self
    }

    pub fn factors(&self) -> &[Signature] {
        &self.factors
    }

    pub fn is_graded(&self) -> bool {
        self.graded
    }

    fn part(&self, j: usize, mask: u64) -> u64 {
        (mask >> self.offsets[j]) & low_bits(self.factors[j].n())
    }

    /// Mask of the basis element `1 (x) ... (x) b (x) ... (x) 1` with `b` in slot `j`.
    pub fn embed(&self, j: usize, mask: u64) -> u64 {
        mask << self.offsets[j]
    }

    /// Mask of `b_0 (x) b_1 (x) ...`.
    pub fn join(&self, parts: &[u64]) -> u64 {
        parts
            .iter()
            .enumerate()
            .fold(0, |acc, (j, m)| acc | self.embed(j, *m))
    }

    /// Pure tensor `x_0 (x) x_1 (x) ...` of factor elements.
    pub fn pure_tensor<T: Scalar>(&self, parts: &[Multivector<T>]) -> Element<T, TensorAlgebra> {
        let mut terms: Vec<(u64, T)> = vec![(0, T::one())];
        for (j, x) in parts.iter().enumerate() {
            terms = terms
                .iter()
                .flat_map(|(m, c)| {
                    x.terms()
                        .map(move |(b, d)| (m | self.embed(j, b), c.clone() * d.clone()))
                })
                .collect();
        }
        Element::from_terms(self.clone(), terms)
    }
}

impl BasisAlgebra for TensorAlgebra {
    fn mask_bits(&self) -> u32 {
        self.factors.iter().map(Signature::n).sum()
    }

    fn basis_mul(&self, a: u64, b: u64) -> (Sign, u64) {
        let mut neg = false;
        let mut out = 0u64;
        // Parity of the right factors already moved past.
        let mut b_before = 0u32;
        for (j, f) in self.factors.iter().enumerate() {
            let (aj, bj) = (self.part(j, a), self.part(j, b));
            let (s, m) = f.mul_masks(aj, bj);
            neg ^= s.is_minus();
            if self.graded {
                neg ^= (b_before & aj.count_ones() & 1) == 1;
                b_before ^= bj.count_ones() & 1;
            }
            out |= self.embed(j, m);
        }
        (Sign::from_negated(neg), out)
    }

    fn basis_name(&self, mask: u64) -> String {
        (0..self.factors.len())
            .map(|j| Blade::from_mask(self.part(j, mask)).to_string())
            .collect::<Vec<_>>()
            .join("⊗")
    }
}

impl fmt::Display for TensorAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.graded { "⊗̂" } else { "⊗" };
        let body = self
            .factors
            .iter()
            .map(Signature::to_string)
            .collect::<Vec<_>>()
            .join(sep);
        match self.scalars {
            ScalarField::Real => f.write_str(&body),
            ScalarField::Complexified => write!(f, "C⊗({body})"),
        }
    }
}

/// Images of the generators of `source` inside `target`, with the checked
/// relations and rank.
#[derive(Clone, PartialEq)]
pub struct GeneratorMap<T, A> {
    pub source: Signature,
    pub target: A,
    pub images: Vec<Element<T, A>>,
    pub rank: usize,
}

impl<T: Scalar, A: BasisAlgebra> fmt::Debug for GeneratorMap<T, A> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GeneratorMap")
            .field("source", &self.source)
            .field("target", &self.target)
            .field("images", &self.images)
            .field("rank", &self.rank)
            .finish()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SparseTerm {
    pub basis: String,
    pub coef: String,
}

/// Audit form of a [`GeneratorMap`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub source: String,
    pub target: String,
    pub squares: Vec<i8>,
    pub rank: usize,
    pub dimension: usize,
    pub images: Vec<Vec<SparseTerm>>,
}

impl<T: Scalar, A: BasisAlgebra> GeneratorMap<T, A> {
    pub fn is_full_rank(&self) -> bool {
        self.rank == self.source.dimension()
    }

    pub fn certificate(&self) -> Certificate {
        Certificate {
            source: self.source.to_string(),
            target: self.target.to_string(),
            squares: (1..=self.source.n())
                .map(|i| self.source.generator_square(i).to_i8())
                .collect(),
            rank: self.rank,
            dimension: self.source.dimension(),
            images: self
                .images
                .iter()
                .map(|x| {
                    x.terms()
                        .map(|(m, c)| SparseTerm {
                            basis: self.target.basis_name(m),
                            coef: c.render(),
                        })
                        .collect()
                })
                .collect(),
        }
    }
}

/// Ordered products `g_{i1} g_{i2} ...` (ascending) of all subsets.
pub fn monomials<T: Scalar, A: BasisAlgebra>(target: &A, images: &[Element<T, A>]) -> Result<Vec<Element<T, A>>> {
    let n = images.len();
    let mut out: Vec<Element<T, A>> = Vec::with_capacity(1 << n);
    out.push(Element::one(target.clone()));
    for mask in 1usize..(1 << n) {
        let h = usize::BITS - 1 - mask.leading_zeros();
        let prev = &out[mask ^ (1 << h)];
        let next = prev.try_mul(&images[h as usize])?;
        out.push(next);
    }
    Ok(out)
}

fn span_rank<T: Scalar, A: BasisAlgebra>(elements: &[Element<T, A>]) -> usize {
    let mut basis = SpanBasis::new();
    for e in elements {
        basis.insert(e.to_sparse());
    }
    basis.rank()
}

/// Checks the Clifford relations of `source` on `images` and the rank of the
/// generated subalgebra.
pub fn certify<T: Scalar, A: BasisAlgebra>(
    source: Signature,
    target: A,
    images: Vec<Element<T, A>>,
) -> Result<GeneratorMap<T, A>> {
    if images.len() != source.n() as usize {
        return Err(Error::CertificateFailed(format!(
            "{} images for the {} generators of {source}",
            images.len(),
            source.n()
        )));
    }
    for (i, g) in images.iter().enumerate() {
        if *g.algebra() != target {
            return Err(Error::AlgebraMismatch {
                left: g.algebra().to_string(),
                right: target.to_string(),
            });
        }
        let want = source.generator_square(i as u32 + 1).apply(T::one());
        if g.square() != Element::scalar(target.clone(), want) {
            return Err(Error::CertificateFailed(format!(
                "image of e{} in {target} does not square to {}",
                i + 1,
                source.generator_square(i as u32 + 1)
            )));
        }
    }
    for i in 0..images.len() {
        for j in (i + 1)..images.len() {
            if !images[i].anticommutes_with(&images[j]) {
                return Err(Error::CertificateFailed(format!(
                    "images of e{} and e{} in {target} do not anticommute",
                    i + 1,
                    j + 1
                )));
            }
        }
    }
    let rank = span_rank(&monomials(&target, &images)?);
    if rank != source.dimension() {
        return Err(Error::CertificateFailed(format!(
            "images generate a subalgebra of dimension {rank} in {target}, expected {}",
            source.dimension()
        )));
    }
    Ok(GeneratorMap {
        source,
        target,
        images,
        rank,
    })
}

/// Sorts images so the ones squaring to `+1` come first and reads off the
/// signature they span.
fn positive_first<T: Scalar, A: BasisAlgebra>(images: Vec<Element<T, A>>) -> Result<(Vec<Element<T, A>>, u32, u32)> {
    let mut pos = Vec::new();
    let mut neg = Vec::new();
    for g in images {
        let sq = g.square().as_scalar();
        match sq {
            Some(c) if c == T::one() => pos.push(g),
            Some(c) if c == -T::one() => neg.push(g),
            _ => {
                return Err(Error::CertificateFailed(format!(
                    "image {g:?} does not square to a unit scalar"
                )))
            }
        }
    }
    let (p, q) = (pos.len() as u32, neg.len() as u32);
    pos.extend(neg);
    Ok((pos, p, q))
}

fn check_size(total: u32) -> Result<()> {
    if total > MAX_CHECK_GENERATORS {
        return Err(Error::Precondition(format!(
            "{total} generators exceed the exact-check limit {MAX_CHECK_GENERATORS}"
        )));
    }
    Ok(())
}

fn tensor_generator<T: Scalar>(alg: &TensorAlgebra, j: usize, i: u32) -> Element<T, TensorAlgebra> {
    Element::basis(alg.clone(), alg.embed(j, Blade::generator(i).mask), T::one())
}

/// `Cl(p,q) (x)^ Cl(p',q') ~ Cl(p+p', q+q')` via `e_i -> e_i (x) 1`, `e'_j -> 1 (x) e'_j`.
pub fn graded_tensor_check(a: Signature, b: Signature) -> Result<GeneratorMap<Rational, TensorAlgebra>> {
    check_size(a.n() + b.n())?;
    let alg = TensorAlgebra::graded(vec![a, b])?;
    let gens = |j: usize, range: std::ops::RangeInclusive<u32>| {
        let alg = &alg;
        range.map(move |i| tensor_generator::<Rational>(alg, j, i)).collect::<Vec<_>>()
    };
    let mut images = gens(0, 1..=a.p);
    images.extend(gens(1, 1..=b.p));
    images.extend(gens(0, a.p + 1..=a.n()));
    images.extend(gens(1, b.p + 1..=b.n()));
    certify(Signature::new(a.p + b.p, a.q + b.q), alg, images)
}

#[derive(Debug, Clone, PartialEq)]
pub struct KaroubiCertificate {
    /// `omega^2 = +1` in the first factor.
    pub positive: bool,
    pub map: GeneratorMap<Rational, TensorAlgebra>,
}

/// Ordinary tensor product with the sign twist `e'_j -> omega (x) e'_j`.
/// Yields `Cl(Q + Q')` when the first factor is positive and `Cl(Q - Q')`
/// otherwise.
pub fn karoubi_check(a: Signature, b: Signature) -> Result<KaroubiCertificate> {
    if a.n() % 2 != 0 {
        return Err(Error::Precondition(format!("{a} has odd dimension")));
    }
    check_size(a.n() + b.n())?;
    let positive = omega_square(a) == Sign::Plus;
    let alg = TensorAlgebra::ordinary(vec![a, b])?;
    let omega = alg.embed(0, a.full_mask());
    let mut images: Vec<Element<Rational, TensorAlgebra>> =
        (1..=a.n()).map(|i| tensor_generator(&alg, 0, i)).collect();
    images.extend(
        (1..=b.n()).map(|j| Element::basis(alg.clone(), omega | alg.embed(1, Blade::generator(j).mask), Rational::one())),
    );
    let (images, p, q) = positive_first(images)?;
    let expected = if positive {
        (a.p + b.p, a.q + b.q)
    } else {
        (a.p + b.q, a.q + b.p)
    };
    if (p, q) != expected {
        return Err(Error::CertificateFailed(format!(
            "twisted images span Cl({p},{q}), expected Cl({},{})",
            expected.0, expected.1
        )));
    }
    Ok(KaroubiCertificate {
        positive,
        map: certify(Signature::new(p, q), alg, images)?,
    })
}

/// `C_2 (x) ... (x) C_2 ~ C_{2m}` over the complexified engine, using
/// `i omega` (square `+1`) to make every factor positive.
pub fn complex_tensor_check(m: u32) -> Result<GeneratorMap<Gaussian, TensorAlgebra>> {
    if !(1..=4).contains(&m) {
        return Err(Error::Precondition(format!("m must be in 1..=4, got {m}")));
    }
    let c2 = Signature::new(2, 0);
    let alg = TensorAlgebra::ordinary(vec![c2; m as usize])?.with_scalars(ScalarField::Complexified);
    let mut images = Vec::new();
    for j in 0..m as usize {
        let prefix: u64 = (0..j).map(|s| alg.embed(s, 0b11)).fold(0, |a, b| a | b);
        let coef = (0..j).fold(Gaussian::one(), |c, _| c * Gaussian::i());
        for a in 1..=2 {
            images.push(Element::basis(
                alg.clone(),
                prefix | alg.embed(j, Blade::generator(a).mask),
                coef.clone(),
            ));
        }
    }
    certify(Signature::complexified(2 * m, 0), alg, images)
}

/// Which fixed generator builds the even-subalgebra images.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum EvenIsoRoute {
    /// `g_i = e_i e_1`, giving `Cl(q, p-1)`.
    ViaFirst,
    /// `g_i = e_i e_n`, giving `Cl(p, q-1)` when `e_n^2 = -1`.
    ViaLast,
}

#[derive(Debug, Clone, PartialEq)]
pub struct EvenIsoCertificate {
    pub sig: Signature,
    pub route: EvenIsoRoute,
    pub target: AlgebraClass,
    pub map: GeneratorMap<Rational, Signature>,
}

/// `Cl+(p,q) ~ Cl(q, p-1)` for `p >= 1`, otherwise `Cl+(0,q) ~ Cl(0, q-1)`.
pub fn even_iso_check(p: u32, q: u32) -> Result<EvenIsoCertificate> {
    let route = if p >= 1 {
        EvenIsoRoute::ViaFirst
    } else {
        EvenIsoRoute::ViaLast
    };
    even_iso_check_via(p, q, route)
}

pub fn even_iso_check_via(p: u32, q: u32, route: EvenIsoRoute) -> Result<EvenIsoCertificate> {
    let sig = Signature::new(p, q);
    let n = sig.n();
    if n == 0 {
        return Err(Error::Precondition("Cl(0,0) has no generators".into()));
    }
    check_size(n)?;
    let fixed = match route {
        EvenIsoRoute::ViaFirst => 1,
        EvenIsoRoute::ViaLast => n,
    };
    let f = RationalMultivector::generator(sig, fixed);
    let images: Vec<RationalMultivector> = (1..=n)
        .filter(|&i| i != fixed)
        .map(|i| RationalMultivector::generator(sig, i).try_mul(&f))
        .collect::<Result<_>>()?;
    let (images, tp, tq) = positive_first(images)?;
    debug_assert!(images.iter().all(|g| g.is_even()));
    let map = certify(Signature::new(tp, tq), sig, images)?;
    Ok(EvenIsoCertificate {
        sig,
        route,
        target: algebra_type(tp, tq),
        map,
    })
}

/// Which of the three four-dimensional algebras `{1, phi, psi, phi psi}` spans.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum QuaternionType {
    /// `phi^2 = psi^2 = -1`, Cl(0,2).
    Quaternion,
    /// Squares of opposite sign, Cl(1,1).
    AntiQuaternion,
    /// `phi^2 = psi^2 = +1`, Cl(2,0).
    PseudoQuaternion,
}

impl QuaternionType {
    pub fn from_squares(phi_sq: Sign, psi_sq: Sign) -> Self {
        match (phi_sq, psi_sq) {
            (Sign::Minus, Sign::Minus) => QuaternionType::Quaternion,
            (Sign::Plus, Sign::Plus) => QuaternionType::PseudoQuaternion,
            _ => QuaternionType::AntiQuaternion,
        }
    }

    pub fn signature(self) -> Signature {
        match self {
            QuaternionType::Quaternion => Signature::new(0, 2),
            QuaternionType::AntiQuaternion => Signature::new(1, 1),
            QuaternionType::PseudoQuaternion => Signature::new(2, 0),
        }
    }
}

/// Sub-signature of the first `k` generators of `sig`.
pub fn leading_signature(sig: Signature, k: u32) -> Signature {
    let p = sig.p.min(k);
    Signature::new(p, k - p).with_scalars(sig.scalars)
}

/// `A = A0 + A1 phi + A2 psi + A3 phi psi` with `A_k` in the base algebra.
#[derive(Debug, Clone, PartialEq)]
pub struct PhiPsiFactorization {
    pub target: Signature,
    pub base: Signature,
    pub m: u32,
    pub phi: RationalMultivector,
    pub psi: RationalMultivector,
    pub phi_sq: Sign,
    pub psi_sq: Sign,
    pub kind: QuaternionType,
    /// Ranks of `base`, `base phi`, `base psi`, `base phi psi`.
    pub component_ranks: [usize; 4],
    pub total_rank: usize,
}

impl PhiPsiFactorization {
    /// `[1, phi, psi, phi psi]`.
    pub fn units(&self) -> [RationalMultivector; 4] {
        let one = RationalMultivector::one(self.target);
        let pp = self.phi.try_mul(&self.psi).expect("same signature");
        [one, self.phi.clone(), self.psi.clone(), pp]
    }

    /// Components `A_0 .. A_3`, embedded in the target algebra.
    pub fn decompose(&self, x: &RationalMultivector) -> Result<[RationalMultivector; 4]> {
        if x.signature() != self.target {
            return Err(Error::AlgebraMismatch {
                left: x.signature().to_string(),
                right: self.target.to_string(),
            });
        }
        let units = self.units();
        let inverses: Vec<RationalMultivector> = units
            .iter()
            .map(|u| u.scale(&u.square().as_scalar().expect("units square to +-1")))
            .collect();
        let shift = 2 * self.m;
        let mut parts: [RationalMultivector; 4] = std::array::from_fn(|_| RationalMultivector::zero(self.target));
        for (mask, c) in x.terms() {
            let slot = (mask >> shift) as usize;
            let blade = RationalMultivector::basis(self.target, mask, c.clone());
            let comp = blade.try_mul(&inverses[slot])?;
            parts[slot] = parts[slot].try_add(&comp)?;
        }
        Ok(parts)
    }

    pub fn recompose(&self, parts: &[RationalMultivector; 4]) -> Result<RationalMultivector> {
        let units = self.units();
        let mut out = RationalMultivector::zero(self.target);
        for (a, u) in parts.iter().zip(units.iter()) {
            out = out.try_add(&a.try_mul(u)?)?;
        }
        Ok(out)
    }
}

/// Builds `phi = e_1..e_2m e_{2m+1}` and `psi = e_1..e_2m e_{2m+2}` over the
/// base algebra of the first `2m` generators.
pub fn phi_psi_factorization(target: Signature, base: Signature) -> Result<PhiPsiFactorization> {
    if base.n() % 2 != 0 || target.n() != base.n() + 2 {
        return Err(Error::Precondition(format!(
            "{target} is not a two-generator extension of an even-dimensional {base}"
        )));
    }
    check_size(target.n())?;
    let expected_base = leading_signature(target, base.n());
    if base.with_scalars(target.scalars) != expected_base {
        return Err(Error::AlgebraMismatch {
            left: base.to_string(),
            right: expected_base.to_string(),
        });
    }
    let m = base.n() / 2;
    let e_base = low_bits(2 * m);
    let phi = RationalMultivector::basis(target, e_base | 1 << (2 * m), Rational::one());
    let psi = RationalMultivector::basis(target, e_base | 1 << (2 * m + 1), Rational::one());
    for i in 1..=2 * m {
        let ei = RationalMultivector::generator(target, i);
        if !phi.commutes_with(&ei) || !psi.commutes_with(&ei) {
            return Err(Error::CertificateFailed(format!("phi or psi fails to commute with e{i}")));
        }
    }
    let sq = |x: &RationalMultivector| target.blade_square(x.terms().next().expect("nonzero").0);
    let (phi_sq, psi_sq) = (sq(&phi), sq(&psi));
    let mut fac = PhiPsiFactorization {
        target,
        base: expected_base,
        m,
        phi,
        psi,
        phi_sq,
        psi_sq,
        kind: QuaternionType::from_squares(phi_sq, psi_sq),
        component_ranks: [0; 4],
        total_rank: 0,
    };
    let units = fac.units();
    let base_blades: Vec<RationalMultivector> = (0..=e_base)
        .map(|mask| RationalMultivector::basis(target, mask, Rational::one()))
        .collect();
    let mut all = SpanBasis::new();
    for (k, u) in units.iter().enumerate() {
        let piece: Vec<RationalMultivector> = base_blades
            .iter()
            .map(|b| b.try_mul(u))
            .collect::<Result<_>>()?;
        fac.component_ranks[k] = span_rank(&piece);
        for v in piece {
            all.insert(v.to_sparse());
        }
    }
    fac.total_rank = all.rank();
    if fac.total_rank != target.dimension() {
        return Err(Error::CertificateFailed(format!(
            "decomposition spans {} of {}",
            fac.total_rank,
            target.dimension()
        )));
    }
    Ok(fac)
}

/// 2x2 matrix over the complexified base algebra.
#[derive(Debug, Clone, PartialEq)]
pub struct BlockMatrix {
    pub entries: [[GaussianMultivector; 2]; 2],
}

impl BlockMatrix {
    pub fn mul(&self, other: &BlockMatrix) -> Result<BlockMatrix> {
        let e = |i: usize, j: usize| -> Result<GaussianMultivector> {
            self.entries[i][0]
                .try_mul(&other.entries[0][j])?
                .try_add(&self.entries[i][1].try_mul(&other.entries[1][j])?)
        };
        Ok(BlockMatrix {
            entries: [[e(0, 0)?, e(0, 1)?], [e(1, 0)?, e(1, 1)?]],
        })
    }

    /// Entries as scalars when every entry is a multiple of the unit.
    pub fn as_scalar_matrix(&self) -> Option<[[Gaussian; 2]; 2]> {
        let s = |i: usize, j: usize| self.entries[i][j].as_scalar();
        Some([[s(0, 0)?, s(0, 1)?], [s(1, 0)?, s(1, 1)?]])
    }
}

/// `[[A0 - i A3, -A1 + i A2], [A1 + i A2, A0 + i A3]]`.
pub fn to_block_matrix(fac: &PhiPsiFactorization, x: &RationalMultivector) -> Result<BlockMatrix> {
    let base = fac.base.with_scalars(ScalarField::Complexified);
    let parts = fac.decompose(x)?;
    let lift = |a: &RationalMultivector| -> Result<GaussianMultivector> {
        for (mask, _) in a.terms() {
            base.check_mask(mask)?;
        }
        Ok(GaussianMultivector::from_terms(
            base,
            a.terms().map(|(mk, c)| (mk, Gaussian::from_real(c.clone()))),
        ))
    };
    let [a0, a1, a2, a3] = [lift(&parts[0])?, lift(&parts[1])?, lift(&parts[2])?, lift(&parts[3])?];
    let i = Gaussian::i();
    let ia2 = a2.scale(&i);
    let ia3 = a3.scale(&i);
    Ok(BlockMatrix {
        entries: [
            [a0.try_sub(&ia3)?, ia2.try_sub(&a1)?],
            [a1.try_add(&ia2)?, a0.try_add(&ia3)?],
        ],
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct BlockMatrixReport {
    pub factorization: PhiPsiFactorization,
    pub seed: u64,
    pub samples: usize,
    pub failures: usize,
}

impl BlockMatrixReport {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

pub const BLOCK_SAMPLE_SEED: u64 = 0x5eed_b10c;

/// Checks `M(xy) = M(x) M(y)` on seeded random pairs for the quaternionic
/// factorization of Cl(p,q).
pub fn block_matrix_form(p: u32, q: u32) -> Result<BlockMatrixReport> {
    block_matrix_form_sampled(p, q, BLOCK_SAMPLE_SEED, 100)
}

pub fn block_matrix_form_sampled(p: u32, q: u32, seed: u64, samples: usize) -> Result<BlockMatrixReport> {
    let target = Signature::new(p, q);
    if target.n() < 2 {
        return Err(Error::Precondition(format!("{target} has fewer than two generators")));
    }
    let fac = phi_psi_factorization(target, leading_signature(target, target.n() - 2))?;
    if fac.kind != QuaternionType::Quaternion {
        return Err(Error::Precondition(format!(
            "{target} factorizes as {:?}, not quaternionic",
            fac.kind
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failures = 0;
    for _ in 0..samples {
        let x = RationalMultivector::random(target, &mut rng, 6);
        let y = RationalMultivector::random(target, &mut rng, 6);
        let lhs = to_block_matrix(&fac, &x.try_mul(&y)?)?;
        let rhs = to_block_matrix(&fac, &x)?.mul(&to_block_matrix(&fac, &y)?)?;
        if lhs != rhs {
            failures += 1;
        }
    }
    Ok(BlockMatrixReport {
        factorization: fac,
        seed,
        samples,
        failures,
    })
}

/// Real algebra `Cl(p,q)` with central `omega`, `omega^2 = -1`, presented as
/// the complexification of `Cl(tp, tq)`, `tp + tq = p + q - 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexFormCertificate {
    pub sig: Signature,
    pub map: GeneratorMap<Rational, Signature>,
    /// Rank of the monomials together with their `omega` multiples.
    pub real_rank: usize,
}

pub fn complex_form_check(sig: Signature, tp: u32, tq: u32) -> Result<ComplexFormCertificate> {
    let n = sig.n();
    if n % 2 == 0 || omega_square(sig) != Sign::Minus || tp + tq + 1 != n {
        return Err(Error::Precondition(format!(
            "{sig} has no central complex unit presenting it as C⊗Cl({tp},{tq})"
        )));
    }
    check_size(n)?;
    let omega: RationalMultivector = volume_element(sig);
    let images: Vec<RationalMultivector> = (1..n)
        .map(|j| {
            let e = RationalMultivector::generator(sig, j);
            let want_plus = j <= tp;
            if (sig.generator_square(j) == Sign::Plus) == want_plus {
                Ok(e)
            } else {
                e.try_mul(&omega)
            }
        })
        .collect::<Result<_>>()?;
    let map = certify(Signature::new(tp, tq), sig, images)?;
    let monos = monomials(&sig, &map.images)?;
    let mut with_omega = monos.clone();
    for x in &monos {
        with_omega.push(x.try_mul(&omega)?);
    }
    let real_rank = span_rank(&with_omega);
    if real_rank != sig.dimension() {
        return Err(Error::CertificateFailed(format!(
            "complex span has real dimension {real_rank} in {sig}"
        )));
    }
    Ok(ComplexFormCertificate { sig, map, real_rank })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainLink {
    pub statement: String,
    pub holds: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainReport {
    pub links: Vec<ChainLink>,
}

impl ChainReport {
    pub fn passed(&self) -> bool {
        self.links.iter().all(|l| l.holds)
    }
}

fn link<T>(statement: &str, r: Result<T>, detail: impl FnOnce(&T) -> String) -> ChainLink {
    match r {
        Ok(v) => ChainLink {
            statement: statement.to_string(),
            holds: true,
            detail: detail(&v),
        },
        Err(e) => ChainLink {
            statement: statement.to_string(),
            holds: false,
            detail: e.to_string(),
        },
    }
}

/// `Cl+(2,4) ~ Cl(4,1) ~ C_4 ~ C⊗Cl(1,3)`, `Cl(1,3) ~ Cl(1,1) ⊗ Cl(0,2)`.
pub fn spin24_chain() -> ChainReport {
    let mut links = Vec::new();
    links.push(link(
        "Cl+(2,4) ≅ Cl(4,1)",
        even_iso_check(2, 4).and_then(|c| {
            if (c.target.p, c.target.q) == (4, 1) {
                Ok(c)
            } else {
                Err(Error::CertificateFailed(format!("target is Cl({},{})", c.target.p, c.target.q)))
            }
        }),
        |c| format!("rank {} via e_i e_1", c.map.rank),
    ));
    let class = algebra_type(4, 1);
    let complex = class.ring == DivisionRing::C
        && class.omega_central
        && class.omega_sq == Sign::Minus;
    links.push(ChainLink {
        statement: "Cl(4,1) ≅ C4".into(),
        holds: complex,
        detail: format!(
            "type {}, ring {}, central omega^2 = {}1",
            class.type_mod8, class.ring, class.omega_sq
        ),
    });
    links.push(link("C2⊗C2 ≅ C4", complex_tensor_check(2), |m| format!("complex rank {}", m.rank)));
    links.push(link(
        "Cl(4,1) ≅ C⊗Cl(1,3)",
        complex_form_check(Signature::new(4, 1), 1, 3),
        |c| format!("rank {} over C, {} over R", c.map.rank, c.real_rank),
    ));
    links.push(link(
        "Cl(1,3) ≅ Cl(1,1)⊗Cl(0,2)",
        karoubi_check(Signature::new(1, 1), Signature::new(0, 2)).and_then(|c| {
            if c.map.source == Signature::new(1, 3) {
                Ok(c)
            } else {
                Err(Error::CertificateFailed(format!("source is {}", c.map.source)))
            }
        }),
        |c| format!("rank {}, omega^2 = +1", c.map.rank),
    ));
    ChainReport { links }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graded_sign_rule() {
        let alg = TensorAlgebra::graded(vec![Signature::new(1, 0), Signature::new(1, 0)]).unwrap();
        let e1 = alg.embed(0, 1);
        let f1 = alg.embed(1, 1);
        // (1 (x) f)(e (x) 1) = - e (x) f
        assert_eq!(alg.basis_mul(f1, e1), (Sign::Minus, e1 | f1));
        assert_eq!(alg.basis_mul(e1, f1), (Sign::Plus, e1 | f1));
        let ord = TensorAlgebra::ordinary(vec![Signature::new(1, 0), Signature::new(1, 0)]).unwrap();
        assert_eq!(ord.basis_mul(f1, e1), (Sign::Plus, e1 | f1));
    }

    #[test]
    fn graded_examples() {
        let m = graded_tensor_check(Signature::new(0, 1), Signature::new(0, 1)).unwrap();
        assert_eq!(m.source, Signature::new(0, 2));
        let m = graded_tensor_check(Signature::new(1, 1), Signature::new(1, 1)).unwrap();
        assert_eq!((m.source, m.rank), (Signature::new(2, 2), 16));
        let m = graded_tensor_check(Signature::new(1, 0), Signature::new(0, 3)).unwrap();
        assert_eq!((m.source, m.rank), (Signature::new(1, 3), 16));
    }

    #[test]
    fn ordinary_product_is_not_clifford() {
        // Mixed generators commute in the ordinary product.
        let alg = TensorAlgebra::ordinary(vec![Signature::new(0, 1), Signature::new(0, 1)]).unwrap();
        let images = vec![tensor_generator::<Rational>(&alg, 0, 1), tensor_generator(&alg, 1, 1)];
        assert!(certify(Signature::new(0, 2), alg, images).is_err());
    }

    #[test]
    fn karoubi_examples() {
        let c = karoubi_check(Signature::new(1, 1), Signature::new(0, 2)).unwrap();
        assert!(c.positive);
        assert_eq!(c.map.source, Signature::new(1, 3));
        let c = karoubi_check(Signature::new(1, 1), Signature::new(2, 0)).unwrap();
        assert_eq!(c.map.source, Signature::new(3, 1));
        let c = karoubi_check(Signature::new(0, 2), Signature::new(1, 1)).unwrap();
        assert!(!c.positive);
        assert_eq!(c.map.source, Signature::new(1, 3));
        assert!(karoubi_check(Signature::new(1, 0), Signature::new(1, 0)).is_err());
    }

    #[test]
    fn complex_tensor_examples() {
        for m in 1..=3 {
            let map = complex_tensor_check(m).unwrap();
            assert_eq!(map.rank, 1 << (2 * m));
        }
        assert!(complex_tensor_check(0).is_err());
        assert!(complex_tensor_check(5).is_err());
    }

    #[test]
    fn even_iso_examples() {
        let c = even_iso_check(1, 3).unwrap();
        assert_eq!((c.target.p, c.target.q), (3, 0));
        let c = even_iso_check(4, 1).unwrap();
        assert_eq!((c.target.p, c.target.q), (1, 3));
        let c = even_iso_check(2, 4).unwrap();
        assert_eq!((c.target.p, c.target.q), (4, 1));
        let c = even_iso_check_via(1, 3, EvenIsoRoute::ViaLast).unwrap();
        assert_eq!((c.target.p, c.target.q), (1, 2));
        assert!(even_iso_check(0, 0).is_err());
    }

    #[test]
    fn phi_psi_cases() {
        let f = phi_psi_factorization(Signature::new(1, 3), Signature::new(1, 1)).unwrap();
        assert_eq!(f.kind, QuaternionType::Quaternion);
        assert_eq!(f.phi, RationalMultivector::unit_blade(Signature::new(1, 3), &[1, 2, 3]));
        assert_eq!(f.psi, RationalMultivector::unit_blade(Signature::new(1, 3), &[1, 2, 4]));
        assert_eq!(f.component_ranks, [4; 4]);

        let f = phi_psi_factorization(Signature::new(5, 1), Signature::new(4, 0)).unwrap();
        assert_eq!((f.phi_sq, f.psi_sq), (Sign::Plus, Sign::Minus));
        assert_eq!(f.kind, QuaternionType::AntiQuaternion);

        let f = phi_psi_factorization(Signature::new(2, 2), Signature::new(2, 0)).unwrap();
        assert_eq!(f.kind, QuaternionType::PseudoQuaternion);

        assert!(phi_psi_factorization(Signature::new(1, 3), Signature::new(0, 2)).is_err());
        assert!(phi_psi_factorization(Signature::new(1, 2), Signature::new(1, 0)).is_err());
    }

    #[test]
    fn decomposition_round_trip() {
        let f = phi_psi_factorization(Signature::new(1, 3), Signature::new(1, 1)).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..20 {
            let x = RationalMultivector::random(f.target, &mut rng, 8);
            let parts = f.decompose(&x).unwrap();
            for a in &parts {
                assert!(a.terms().all(|(m, _)| m < 4));
            }
            assert_eq!(f.recompose(&parts).unwrap(), x);
        }
    }

    #[test]
    fn block_matrix_units() {
        let sig = Signature::new(1, 3);
        let f = phi_psi_factorization(sig, Signature::new(1, 1)).unwrap();
        let one = to_block_matrix(&f, &RationalMultivector::one(sig)).unwrap();
        let z = Gaussian::from_i64(0);
        let u = Gaussian::from_i64(1);
        assert_eq!(one.as_scalar_matrix().unwrap(), [[u.clone(), z.clone()], [z.clone(), u.clone()]]);
        let phi = to_block_matrix(&f, &f.phi).unwrap();
        assert_eq!(phi.as_scalar_matrix().unwrap(), [[z.clone(), -u.clone()], [u.clone(), z.clone()]]);
        let psi = to_block_matrix(&f, &f.psi).unwrap();
        let i = Gaussian::i();
        assert_eq!(psi.as_scalar_matrix().unwrap(), [[z.clone(), i.clone()], [i, z]]);
    }

    #[test]
    fn block_matrix_homomorphism() {
        let r = block_matrix_form(1, 3).unwrap();
        assert_eq!(r.samples, 100);
        assert!(r.passed());
        assert!(block_matrix_form(2, 2).is_err());
    }

    #[test]
    fn spin24() {
        let r = spin24_chain();
        assert_eq!(r.links.len(), 5);
        assert!(r.passed(), "{r:?}");
    }

    #[test]
    fn certificate_json() {
        let m = graded_tensor_check(Signature::new(0, 1), Signature::new(0, 1)).unwrap();
        let c = m.certificate();
        assert_eq!(c.squares, vec![-1, -1]);
        assert_eq!(c.images[0][0].basis, "e1⊗1");
        assert_eq!(c.images[1][0].basis, "1⊗e1");
        let json = serde_json::to_string(&c).unwrap();
        assert!(json.contains("\"rank\":4"));
    }
}
