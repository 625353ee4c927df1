//! The eightfold classification of real Clifford algebras.
//!
//! [`algebra_type`] reads the classification off `(p - q) mod 8`. The remaining
//! operations rebuild the same facts from the blade engine: a primitive
//! idempotent `f` with `k = q - r_{q-p}` factors, the division ring `f Cl f`
//! by exact rank, and the minimal left ideal `Cl f`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::blade::{Blade, Signature};
use crate::error::{Error, Result};
use crate::linalg::SpanBasis;
use crate::multivector::{omega_square, volume_element, Multivector};
use num_traits::One;

use crate::scalar::{Gaussian, Rational, Scalar, Sign};
use crate::RationalMultivector;

/// Division ring `K` with `Cl ≅ Mat(K)` or `Mat(K) ⊕ Mat(K)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum DivisionRing {
    R,
    C,
    H,
    #[serde(rename = "R+R")]
    RR,
    #[serde(rename = "H+H")]
    HH,
}

impl DivisionRing {
    pub fn from_type(type_mod8: u8) -> Self {
        match type_mod8 % 8 {
            0 | 2 => DivisionRing::R,
            3 | 7 => DivisionRing::C,
            4 | 6 => DivisionRing::H,
            1 => DivisionRing::RR,
            _ => DivisionRing::HH,
        }
    }

    /// Real dimension of one copy of the underlying division ring.
    pub fn base_dim(self) -> usize {
        match self {
            DivisionRing::R | DivisionRing::RR => 1,
            DivisionRing::C => 2,
            DivisionRing::H | DivisionRing::HH => 4,
        }
    }

    pub fn is_double(self) -> bool {
        matches!(self, DivisionRing::RR | DivisionRing::HH)
    }

    /// The single ring underlying a double ring (identity otherwise).
    pub fn base(self) -> DivisionRing {
        match self {
            DivisionRing::RR => DivisionRing::R,
            DivisionRing::HH => DivisionRing::H,
            r => r,
        }
    }

    pub fn doubled(self) -> Option<DivisionRing> {
        match self {
            DivisionRing::R => Some(DivisionRing::RR),
            DivisionRing::H => Some(DivisionRing::HH),
            _ => None,
        }
    }

    /// ASCII label, also used in JSON and CSV.
    pub fn label(self) -> &'static str {
        match self {
            DivisionRing::R => "R",
            DivisionRing::C => "C",
            DivisionRing::H => "H",
            DivisionRing::RR => "R+R",
            DivisionRing::HH => "H+H",
        }
    }
}

impl fmt::Display for DivisionRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DivisionRing::R => "R",
            DivisionRing::C => "C",
            DivisionRing::H => "H",
            DivisionRing::RR => "R⊕R",
            DivisionRing::HH => "H⊕H",
        })
    }
}

/// Classification record of Cl(p,q).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AlgebraClass {
    pub p: u32,
    pub q: u32,
    pub type_mod8: u8,
    pub ring: DivisionRing,
    pub simple: bool,
    /// `m` in `Cl ≅ Mat_{2^m}(K)` (per simple component).
    pub matrix_log2: u32,
    /// Square of `e_1 ... e_{p+q}`.
    pub omega_sq: Sign,
    /// `p + q` odd, so `omega` is central.
    pub omega_central: bool,
}

impl AlgebraClass {
    pub fn signature(&self) -> Signature {
        Signature::new(self.p, self.q)
    }

    pub fn n(&self) -> u32 {
        self.p + self.q
    }

    /// `2^m`, when it fits in a `u64`.
    pub fn matrix_rank(&self) -> Option<u64> {
        1u64.checked_shl(self.matrix_log2)
    }

    pub fn is_even_dimensional(&self) -> bool {
        self.n() % 2 == 0
    }
}

/// Radon–Hurwitz number `r_i` for any integer `i`.
pub fn radon_hurwitz(i: i64) -> i64 {
    const BASE: [i64; 8] = [0, 1, 2, 2, 3, 3, 3, 3];
    BASE[i.rem_euclid(8) as usize] + 4 * i.div_euclid(8)
}

/// Number of idempotent factors `k = q - r_{q-p}`.
pub fn idempotent_count(p: u32, q: u32) -> i64 {
    q as i64 - radon_hurwitz(q as i64 - p as i64)
}

/// Square of the volume element. Blade multiplication when the mask fits,
/// otherwise the closed form `(-1)^(n(n-1)/2 + q)`.
fn omega_square_any(p: u32, q: u32) -> Sign {
    let sig = Signature::new(p, q);
    if sig.n() <= crate::blade::MAX_GENERATORS {
        omega_square(sig)
    } else {
        let n = sig.n() as u64;
        Sign::from_negated((n * (n - 1) / 2 + q as u64) % 2 == 1)
    }
}

/// Classification of Cl(p,q) from the mod-8 rules.
pub fn algebra_type(p: u32, q: u32) -> AlgebraClass {
    let type_mod8 = (p as i64 - q as i64).rem_euclid(8) as u8;
    let ring = DivisionRing::from_type(type_mod8);
    let n = p + q;
    let double = ring.is_double() as u32;
    let k_log = ring.base_dim().trailing_zeros();
    AlgebraClass {
        p,
        q,
        type_mod8,
        ring,
        simple: !ring.is_double(),
        matrix_log2: (n - k_log - double) / 2,
        omega_sq: omega_square_any(p, q),
        omega_central: n % 2 == 1,
    }
}

/// A primitive idempotent `f = prod (1 + e_a)/2` and its generating blades.
#[derive(Debug, Clone, PartialEq)]
pub struct IdempotentData {
    pub sig: Signature,
    pub f: RationalMultivector,
    pub generators: Vec<Blade>,
    pub k: usize,
    /// Order `2^(k+1)` of the idempotent group `T_{p,q}(f)`.
    pub group_order: u64,
}

/// XOR basis over GF(2), for independence of blade masks.
#[derive(Default, Clone)]
struct MaskBasis {
    rows: Vec<u64>,
}

impl MaskBasis {
    fn reduce(&self, mut m: u64) -> u64 {
        for r in &self.rows {
            m = m.min(m ^ r);
        }
        m
    }

    fn insert(&mut self, m: u64) -> bool {
        let r = self.reduce(m);
        if r == 0 {
            return false;
        }
        self.rows.push(r);
        self.rows.sort_unstable_by(|a, b| b.cmp(a));
        true
    }
}

fn blades_commute(sig: &Signature, a: u64, b: u64) -> bool {
    sig.mul_masks(a, b).0 == sig.mul_masks(b, a).0
}

/// Depth-first search in `(grade, mask)` order; the first branch explored is
/// the greedy choice.
fn search_generators(
    sig: &Signature,
    candidates: &[u64],
    start: usize,
    chosen: &mut Vec<u64>,
    span: &MaskBasis,
    k: usize,
    budget: &mut usize,
) -> bool {
    if chosen.len() == k {
        return true;
    }
    for idx in start..candidates.len() {
        if candidates.len() - idx < k - chosen.len() || *budget == 0 {
            return false;
        }
        *budget -= 1;
        let c = candidates[idx];
        if !chosen.iter().all(|&g| blades_commute(sig, g, c)) {
            continue;
        }
        let mut next = span.clone();
        if !next.insert(c) {
            continue;
        }
        chosen.push(c);
        if search_generators(sig, candidates, idx + 1, chosen, &next, k, budget) {
            return true;
        }
        chosen.pop();
    }
    false
}

/// Primitive idempotent of Cl(p,q) built from `k = q - r_{q-p}` pairwise
/// commuting, independent basis blades squaring to `+1`.
pub fn primitive_idempotent(p: u32, q: u32) -> Result<IdempotentData> {
    let sig = Signature::new(p, q);
    if sig.n() > 16 {
        return Err(Error::Precondition(format!(
            "idempotent search is limited to p+q <= 16, got {sig}"
        )));
    }
    let k = idempotent_count(p, q);
    if k < 0 {
        return Err(Error::IdempotentSearchFailed {
            sig,
            wanted: 0,
            found: 0,
        });
    }
    let k = k as usize;
    let candidates: Vec<u64> = sig
        .blades()
        .into_iter()
        .filter(|b| b.mask != 0 && sig.blade_square(b.mask) == Sign::Plus)
        .map(|b| b.mask)
        .collect();
    let mut chosen = Vec::with_capacity(k);
    let mut budget = 1_000_000usize;
    if !search_generators(&sig, &candidates, 0, &mut chosen, &MaskBasis::default(), k, &mut budget) {
        return Err(Error::IdempotentSearchFailed {
            sig,
            wanted: k,
            found: chosen.len(),
        });
    }

    let half = Rational::half();
    let mut f = RationalMultivector::one(sig);
    for &g in &chosen {
        let factor = RationalMultivector::from_terms(sig, [(0, half.clone()), (g, half.clone())]);
        f = f.try_mul(&factor)?;
    }
    if f.square() != f {
        return Err(Error::CertificateFailed(format!("f^2 != f in {sig}")));
    }
    // Subset products of the generators: 2^k distinct blades.
    let mut group: Vec<u64> = vec![0];
    for &g in &chosen {
        let more: Vec<u64> = group.iter().map(|m| m ^ g).collect();
        group.extend(more);
    }
    group.sort_unstable();
    group.dedup();
    if group.len() != 1 << k {
        return Err(Error::CertificateFailed(format!(
            "sign group of {sig} has order {} instead of 2^{k}",
            group.len()
        )));
    }

    Ok(IdempotentData {
        sig,
        f,
        generators: chosen.into_iter().map(Blade::from_mask).collect(),
        k,
        group_order: 1u64 << (k + 1),
    })
}

/// The central idempotents `(1 ± omega)/2` of a semisimple algebra.
pub fn central_idempotents(sig: Signature) -> Option<(RationalMultivector, RationalMultivector)> {
    if sig.n() % 2 == 0 || omega_square(sig) != Sign::Plus {
        return None;
    }
    let half = Rational::half();
    let w: RationalMultivector = volume_element(sig);
    let one = RationalMultivector::one(sig);
    let plus = (&one + &w).scale(&half);
    let minus = (&one - &w).scale(&half);
    Some((plus, minus))
}

/// `omega` when it is central with `omega^2 = -1`, i.e. a complex unit of the
/// real algebra (types 3 and 7).
pub fn complex_unit(sig: Signature) -> Option<RationalMultivector> {
    (sig.n() % 2 == 1 && omega_square(sig) == Sign::Minus).then(|| volume_element(sig))
}

/// Result of brute-force ring identification.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RingReport {
    pub p: u32,
    pub q: u32,
    /// Real dimension of `f Cl f`.
    pub dim_fkf: usize,
    pub ring: DivisionRing,
}

fn span_dimension(vectors: impl Iterator<Item = RationalMultivector>) -> usize {
    let mut basis = SpanBasis::new();
    for v in vectors {
        basis.insert(v.to_sparse());
    }
    basis.rank()
}

fn corner_dimension(f: &RationalMultivector) -> usize {
    let sig = f.signature();
    let one = Rational::one();
    span_dimension(
        sig.blades()
            .into_iter()
            .map(|b| f.mul_blade_right(b, &one).try_mul(f).expect("same signature")),
    )
}

/// Identifies `K = f Cl f` by the exact dimension of its span. For the
/// semisimple types the idempotent is first placed in one simple component and
/// its image under the grade involution in the other.
pub fn division_ring_of(p: u32, q: u32) -> Result<RingReport> {
    let data = primitive_idempotent(p, q)?;
    let sig = data.sig;
    let dim = corner_dimension(&data.f);
    let single = match dim {
        1 => DivisionRing::R,
        2 => DivisionRing::C,
        4 => DivisionRing::H,
        _ => return Err(Error::UnexpectedRingDimension { sig, dim }),
    };
    let ring = match central_idempotents(sig) {
        None => single,
        Some((plus, minus)) => {
            let f = &data.f;
            let in_plus = f.try_mul(&plus)?;
            let in_minus = f.try_mul(&minus)?;
            let one_sided = (in_plus == *f && in_minus.is_zero()) || (in_minus == *f && in_plus.is_zero());
            if !one_sided {
                return Err(Error::CertificateFailed(format!(
                    "primitive idempotent of {sig} straddles both simple components"
                )));
            }
            let other = f.grade_involution();
            if other.try_mul(f)? != RationalMultivector::zero(sig) || corner_dimension(&other) != dim {
                return Err(Error::CertificateFailed(format!(
                    "simple components of {sig} do not match"
                )));
            }
            single.doubled().ok_or(Error::UnexpectedRingDimension { sig, dim })?
        }
    };
    Ok(RingReport {
        p,
        q,
        dim_fkf: dim,
        ring,
    })
}

/// Basis of the minimal left ideal `Cl f`, extracted from `{ b f }`.
pub fn minimal_left_ideal(p: u32, q: u32) -> Result<(Vec<RationalMultivector>, usize)> {
    let data = primitive_idempotent(p, q)?;
    let sig = data.sig;
    let one = Rational::one();
    let mut span = SpanBasis::new();
    let mut basis = Vec::new();
    for b in sig.blades() {
        let v = data.f.mul_blade_left(b, &one);
        if span.insert(v.to_sparse()) {
            basis.push(v);
        }
    }
    let dim = basis.len();
    Ok((basis, dim))
}

/// The idempotent `(1 + e1)/2 (1 + i e23)/2` of the complexified Cl(1,3),
/// with the timelike generator numbered first.
pub fn dirac_idempotent() -> Multivector<Gaussian> {
    let sig = Signature::complexified(1, 3);
    let half = Gaussian::half();
    let one = Multivector::<Gaussian>::one(sig);
    let e1 = Multivector::<Gaussian>::generator(sig, 1);
    let ie23 = Multivector::<Gaussian>::unit_blade(sig, &[2, 3]).scale(&Gaussian::i());
    (&one + &e1).scale(&half).try_mul(&(&one + &ie23).scale(&half)).expect("same signature")
}

/// Dirac spinor `Phi = phi (1 + e1)/2 (1 + i e23)/2` of an even element `phi` of Cl(1,3).
pub fn dirac_from_hestenes(phi: &RationalMultivector) -> Result<Multivector<Gaussian>> {
    let sig = phi.signature();
    if (sig.p, sig.q) != (1, 3) {
        return Err(Error::AlgebraMismatch {
            left: sig.to_string(),
            right: "Cl(1,3)".to_string(),
        });
    }
    if !phi.is_even() {
        return Err(Error::NotEven);
    }
    phi.complexified().try_mul(&dirac_idempotent())
}
