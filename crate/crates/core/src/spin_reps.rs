//! Finite-dimensional representations `tau_{l,l'}` of SL(2,C), their spin
//! chains, and the real/quaternionic labels induced by the Brauer–Wall walk.

use std::fmt;

use serde::{Deserialize, Serialize, Serializer};

use crate::blade::Signature;
use crate::brauer_wall::BWState;
use crate::classify::{algebra_type, DivisionRing};
use crate::error::{Error, Result};
use crate::linalg::SpanBasis;
use crate::multivector::{omega_square, volume_element};
use crate::scalar::{Gaussian, Scalar, Sign};
use crate::GaussianMultivector;

/// Non-negative half-integer, stored as twice its value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct HalfInt(pub u32);

impl HalfInt {
    pub fn from_twice(twice: u32) -> Self {
        HalfInt(twice)
    }

    pub fn twice(self) -> u32 {
        self.0
    }

    pub fn is_integer(self) -> bool {
        self.0 % 2 == 0
    }

    pub fn to_f64(self) -> f64 {
        self.0 as f64 / 2.0
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.0 / 2)
        } else {
            write!(f, "{}/2", self.0)
        }
    }
}

/// Accepts `3/2`, `1.5` or `2`.
impl std::str::FromStr for HalfInt {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Precondition(format!("'{s}' is not a non-negative half-integer"));
        let s = s.trim();
        if let Some(num) = s.strip_suffix("/2") {
            return num.parse::<u32>().map(HalfInt).map_err(|_| bad());
        }
        if let Ok(n) = s.parse::<u32>() {
            return n.checked_mul(2).map(HalfInt).ok_or_else(bad);
        }
        let x: f64 = s.parse().map_err(|_| bad())?;
        let twice = 2.0 * x;
        if x < 0.0 || twice.fract() != 0.0 || twice > u32::MAX as f64 {
            return Err(bad());
        }
        Ok(HalfInt(twice as u32))
    }
}

impl Serialize for HalfInt {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_f64(self.to_f64())
    }
}

/// Signed half-integer, stored as twice its value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedHalf(pub i64);

impl SignedHalf {
    pub fn to_f64(self) -> f64 {
        self.0 as f64 / 2.0
    }
}

impl fmt::Display for SignedHalf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 % 2 == 0 {
            write!(f, "{}", self.0 / 2)
        } else {
            write!(f, "{}/2", self.0)
        }
    }
}

impl Serialize for SignedHalf {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_f64(self.to_f64())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RepField {
    Real,
    Quaternionic,
}

impl RepField {
    /// Line of the walk a division ring belongs to; `None` for `C`.
    pub fn from_ring(ring: DivisionRing) -> Option<Self> {
        match ring {
            DivisionRing::R | DivisionRing::RR => Some(RepField::Real),
            DivisionRing::H | DivisionRing::HH => Some(RepField::Quaternionic),
            DivisionRing::C => None,
        }
    }

    pub fn superscript(self) -> char {
        match self {
            RepField::Real => 'r',
            RepField::Quaternionic => 'q',
        }
    }
}

/// `C2^{(x)k} (x) conj(C2)^{(x)r}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TensorAlgebraDescriptor {
    pub k: u32,
    pub r: u32,
}

impl TensorAlgebraDescriptor {
    /// `log2` of the spinspace dimension `2^(k+r)`.
    pub fn spinspace_log2(&self) -> u32 {
        self.k + self.r
    }

    pub fn spinspace_dim(&self) -> Option<u64> {
        1u64.checked_shl(self.spinspace_log2())
    }

    pub fn factor_count(&self) -> u32 {
        self.k + self.r
    }
}

impl fmt::Display for TensorAlgebraDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let plain = vec!["C2"; self.k as usize].join("⊗");
        let conj = vec!["C̄2"; self.r as usize].join("⊗");
        match (self.k, self.r) {
            (0, 0) => f.write_str("C"),
            (_, 0) => f.write_str(&plain),
            (0, _) => f.write_str(&conj),
            _ => write!(f, "{plain} ⊗ {conj}"),
        }
    }
}

/// `tau_{l,l'}` with its field label and quotient flag.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RepLabel {
    pub l: HalfInt,
    pub l_dot: HalfInt,
    pub field: RepField,
    pub quotient: bool,
}

impl RepLabel {
    pub fn k(&self) -> u32 {
        self.l.twice()
    }

    pub fn r(&self) -> u32 {
        self.l_dot.twice()
    }

    /// `s = |l - l'|`.
    pub fn spin(&self) -> HalfInt {
        HalfInt(self.k().abs_diff(self.r()))
    }

    /// `(k+1)(r+1)`.
    pub fn degree(&self) -> u64 {
        (self.k() as u64 + 1) * (self.r() as u64 + 1)
    }

    pub fn descriptor(&self) -> TensorAlgebraDescriptor {
        TensorAlgebraDescriptor {
            k: self.k(),
            r: self.r(),
        }
    }

    pub fn spinspace_dim(&self) -> Option<u64> {
        self.descriptor().spinspace_dim()
    }

    /// `-s, -s+1, ..., s`.
    pub fn spin_values(&self) -> Vec<SignedHalf> {
        let s = self.spin().twice() as i64;
        (-s..=s).step_by(2).map(SignedHalf).collect()
    }

    pub fn as_quotient(self) -> Self {
        RepLabel {
            quotient: true,
            ..self
        }
    }
}

impl fmt::Display for RepLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.quotient {
            f.write_str("ε")?;
        }
        write!(f, "τ^{}_{{{},{}}}", self.field.superscript(), self.l, self.l_dot)
    }
}

#[derive(Serialize)]
struct RepLabelRecord {
    l: HalfInt,
    l_dot: HalfInt,
    field: RepField,
    quotient: bool,
    spin: HalfInt,
    degree: u64,
}

impl Serialize for RepLabel {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        RepLabelRecord {
            l: self.l,
            l_dot: self.l_dot,
            field: self.field,
            quotient: self.quotient,
            spin: self.spin(),
            degree: self.degree(),
        }
        .serialize(s)
    }
}

/// Field of `tau_{l,l'}`: the division ring of `Cl(4l, 4l')`.
pub fn rep_field(l: HalfInt, l_dot: HalfInt) -> RepField {
    let ring = algebra_type(2 * l.twice(), 2 * l_dot.twice()).ring;
    RepField::from_ring(ring).expect("4l - 4l' is even, so the ring is R or H")
}

/// `tau_{k/2, r/2}`.
pub fn rep_label(k: u32, r: u32) -> RepLabel {
    let (l, l_dot) = (HalfInt(k), HalfInt(r));
    RepLabel {
        l,
        l_dot,
        field: rep_field(l, l_dot),
        quotient: false,
    }
}

/// One position of the walk together with the representation it induces.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct RepWalkStep {
    pub state: BWState,
    pub label: RepLabel,
}

/// Labels along `Cl(0,0) -> ... -> Cl(0,8n)`: even `q` gives `tau_{0,q/4}`
/// tagged by the ring of `Cl(0,q)`, odd `q` the quotient of the previous label.
pub fn bw_rep_walk(cycles: u32) -> Result<Vec<RepWalkStep>> {
    if cycles == 0 {
        return Err(Error::Precondition("at least one cycle is required".into()));
    }
    let mut out: Vec<RepWalkStep> = Vec::with_capacity(8 * cycles as usize + 1);
    for q in 0..=8 * cycles {
        let state = BWState::at(q);
        let label = if q % 2 == 0 {
            let field = RepField::from_ring(state.ring).ok_or_else(|| {
                Error::CertificateFailed(format!("Cl(0,{q}) has ring {}", state.ring))
            })?;
            RepLabel {
                l: HalfInt(0),
                l_dot: HalfInt(q / 2),
                field,
                quotient: false,
            }
        } else {
            out.last().expect("q = 0 comes first").label.as_quotient()
        };
        out.push(RepWalkStep { state, label });
    }
    Ok(out)
}

/// Central idempotents of `C (x) Cl(0,q)`, `q` odd, and the kernel of the
/// quotient map.
#[derive(Debug, Clone, PartialEq)]
pub struct QuotientStructure {
    pub q: u32,
    pub omega_sq: Sign,
    /// `lambda = (1 +- w)/2` with `w = omega` or `i omega`, whichever squares to `+1`.
    pub uses_imaginary_unit: bool,
    pub lambda_plus: GaussianMultivector,
    pub lambda_minus: GaussianMultivector,
    pub kernel_dim: usize,
    pub quotient_dim: usize,
}

pub fn quotient_structure(q: u32) -> Result<QuotientStructure> {
    if q % 2 == 0 {
        return Err(Error::Precondition(format!("q must be odd, got {q}")));
    }
    if q > 11 {
        return Err(Error::Precondition(format!("q = {q} exceeds the exact-check limit 11")));
    }
    let real = Signature::new(0, q);
    let sig = Signature::complexified(0, q);
    let omega_sq = omega_square(real);
    let mut w: GaussianMultivector = volume_element(sig);
    if omega_sq == Sign::Minus {
        w = w.scale(&Gaussian::i());
    }
    let one = GaussianMultivector::one(sig);
    let half = Gaussian::half();
    let lambda_plus = one.try_add(&w)?.scale(&half);
    let lambda_minus = one.try_sub(&w)?.scale(&half);

    let fail = |what: &str| Err(Error::CertificateFailed(format!("{what} in C⊗Cl(0,{q})")));
    if lambda_plus.square() != lambda_plus || lambda_minus.square() != lambda_minus {
        return fail("central idempotents are not idempotent");
    }
    if !lambda_plus.try_mul(&lambda_minus)?.is_zero() {
        return fail("central idempotents are not orthogonal");
    }
    for i in 1..=q {
        let e = GaussianMultivector::generator(sig, i);
        if !lambda_plus.commutes_with(&e) {
            return fail("lambda is not central");
        }
    }

    let mut kernel = SpanBasis::new();
    for b in sig.blades() {
        let x = GaussianMultivector::basis(sig, b.mask, Gaussian::from_i64(1));
        kernel.insert(x.try_sub(&w.try_mul(&x)?)?.to_sparse());
    }
    let kernel_dim = kernel.rank();
    Ok(QuotientStructure {
        q,
        omega_sq,
        uses_imaginary_unit: omega_sq == Sign::Minus,
        lambda_plus,
        lambda_minus,
        kernel_dim,
        quotient_dim: sig.dimension() - kernel_dim,
    })
}

/// Member of a spin chain with its signed spin `l - l'`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ChainMember {
    pub label: RepLabel,
    pub signed_spin: SignedHalf,
}

/// `tau_{l,l'}, tau_{l+1/2, l'-1/2}, ..., tau_{l',l}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpinChain {
    pub start: (HalfInt, HalfInt),
    pub members: Vec<ChainMember>,
}

impl SpinChain {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn spins(&self) -> Vec<SignedHalf> {
        self.members.iter().map(|m| m.signed_spin).collect()
    }
}

pub fn spin_chain(l: HalfInt, l_dot: HalfInt) -> Result<SpinChain> {
    if l > l_dot {
        return Err(Error::Precondition(format!("chain must start with l <= l', got ({l},{l_dot})")));
    }
    let steps = l_dot.twice() - l.twice();
    let members = (0..=steps)
        .map(|j| {
            let label = rep_label(l.twice() + j, l_dot.twice() - j);
            ChainMember {
                label,
                signed_spin: SignedHalf(label.k() as i64 - label.r() as i64),
            }
        })
        .collect();
    Ok(SpinChain {
        start: (l, l_dot),
        members,
    })
}

pub fn chain_algebra_sequence(chain: &SpinChain) -> Vec<TensorAlgebraDescriptor> {
    chain.members.iter().map(|m| m.label.descriptor()).collect()
}

/// Labels of a representation block, sorted by `(l, l')`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RepBlock {
    pub order: u32,
    pub nodes: Vec<RepLabel>,
}

impl RepBlock {
    pub fn get(&self, l: HalfInt, l_dot: HalfInt) -> Option<&RepLabel> {
        self.nodes
            .binary_search_by_key(&(l, l_dot), |n| (n.l, n.l_dot))
            .ok()
            .map(|i| &self.nodes[i])
    }
}

/// Order 1: `0 <= l, l' <= 2`. Order 2: the diagonal sub-blocks
/// `2c <= l, l' <= 2c + 2` for `c = 0..8`, one per cycle.
pub fn representation_block(order: u32) -> Result<RepBlock> {
    let ranges: Vec<u32> = match order {
        1 => vec![0],
        2 => (0..8).collect(),
        _ => return Err(Error::Precondition(format!("block order must be 1 or 2, got {order}"))),
    };
    let mut keys: Vec<(u32, u32)> = ranges
        .iter()
        .flat_map(|c| {
            let lo = 4 * c;
            (lo..=lo + 4).flat_map(move |k| (lo..=lo + 4).map(move |r| (k, r)))
        })
        .collect();
    keys.sort_unstable();
    keys.dedup();
    Ok(RepBlock {
        order,
        nodes: keys.into_iter().map(|(k, r)| rep_label(k, r)).collect(),
    })
}
