//! Floating-point 2-spinors: the Minkowski/Hermitian-matrix correspondence,
//! the SL(2,C) action, twistor incidence and qubit density matrices.

use nalgebra::{convert, ComplexField, Matrix2, Matrix4, RealField};
use num_complex::Complex;
use rand::Rng;
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Tolerance on `|det a - 1|` for SL(2,C) inputs.
pub const SL2C_DET_TOL: f64 = 1e-9;
/// Tolerance on `|a|^2 + |b|^2 - 1` for qubit amplitudes.
pub const NORMALIZATION_TOL: f64 = 1e-9;

fn c<T: RealField + Copy>(re: T, im: T) -> Complex<T> {
    Complex::new(re, im)
}

fn inv_sqrt2<T: RealField + Copy>() -> T {
    T::one() / convert::<f64, T>(2.0).sqrt()
}

fn tol<T: RealField + Copy>(x: f64) -> T {
    convert(x)
}

struct Pair<T>(Complex<T>);

impl<T: RealField + Serialize + Copy> Serialize for Pair<T> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        // adding +0 turns -0 into +0
        [self.0.re + T::zero(), self.0.im + T::zero()].serialize(s)
    }
}

fn serialize_matrix<T: RealField + Serialize + Copy, S: Serializer>(m: &Matrix2<Complex<T>>, s: S) -> std::result::Result<S::Ok, S::Error> {
    let mut seq = s.serialize_seq(Some(2))?;
    for i in 0..2 {
        seq.serialize_element(&[Pair(m[(i, 0)]), Pair(m[(i, 1)])])?;
    }
    seq.end()
}

/// Point `(x0, x1, x2, x3)` of Minkowski space.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(transparent)]
pub struct FourVector<T> {
    pub x: [T; 4],
}

impl<T: RealField + Copy> FourVector<T> {
    pub fn new(x0: T, x1: T, x2: T, x3: T) -> Self {
        FourVector { x: [x0, x1, x2, x3] }
    }

    /// `S^2(x) = x0^2 - x1^2 - x2^2 - x3^2`.
    pub fn lorentz_norm(&self) -> T {
        let [a, b, c, d] = self.x;
        a * a - b * b - c * c - d * d
    }

    pub fn euclidean_norm_sq(&self) -> T {
        self.x.iter().fold(T::zero(), |acc, v| acc + *v * *v)
    }

    pub fn max_abs_diff(&self, other: &Self) -> T {
        (0..4).fold(T::zero(), |m, i| m.max((self.x[i] - other.x[i]).abs()))
    }

    pub fn random<R: Rng + ?Sized>(rng: &mut R) -> Self
    where
        T: rand::distributions::uniform::SampleUniform,
    {
        let one = T::one();
        let mut g = || rng.gen_range(-one..=one);
        FourVector::new(g(), g(), g(), g())
    }
}

/// 2x2 Hermitian matrix.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Herm2<T: nalgebra::Scalar> {
    pub m: Matrix2<Complex<T>>,
}

impl<T: RealField + Copy> Herm2<T> {
    pub fn det(&self) -> Complex<T> {
        self.m[(0, 0)] * self.m[(1, 1)] - self.m[(0, 1)] * self.m[(1, 0)]
    }

    pub fn is_hermitian(&self, eps: T) -> bool {
        (self.m - self.m.adjoint()).iter().all(|z| z.modulus() <= eps)
    }

    pub fn max_abs_diff(&self, other: &Self) -> T {
        (self.m - other.m).iter().fold(T::zero(), |a, z| a.max(z.modulus()))
    }
}

impl<T: RealField + Serialize + Copy> Serialize for Herm2<T> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        serialize_matrix(&self.m, s)
    }
}

/// `X = [[x0 + x3, x1 - i x2], [x1 + i x2, x0 - x3]]`.
pub fn vector_to_herm<T: RealField + Copy>(v: &FourVector<T>) -> Herm2<T> {
    let [x0, x1, x2, x3] = v.x;
    let z = T::zero();
    Herm2 {
        m: Matrix2::new(c(x0 + x3, z), c(x1, -x2), c(x1, x2), c(x0 - x3, z)),
    }
}

/// Inverse of [`vector_to_herm`]; the anti-Hermitian part is discarded.
pub fn herm_to_vector<T: RealField + Copy>(h: &Herm2<T>) -> FourVector<T> {
    let two: T = convert(2.0);
    let m = &h.m;
    FourVector::new(
        (m[(0, 0)].re + m[(1, 1)].re) / two,
        (m[(1, 0)].re + m[(0, 1)].re) / two,
        (m[(1, 0)].im - m[(0, 1)].im) / two,
        (m[(0, 0)].re - m[(1, 1)].re) / two,
    )
}

pub type Sl2c<T> = Matrix2<Complex<T>>;

pub fn det2<T: RealField + Copy>(a: &Sl2c<T>) -> Complex<T> {
    a[(0, 0)] * a[(1, 1)] - a[(0, 1)] * a[(1, 0)]
}

/// `X' = a X a*`.
pub fn sl2c_act<T: RealField + Copy>(a: &Sl2c<T>, x: &Herm2<T>) -> Result<Herm2<T>> {
    let d = det2(a) - Complex::new(T::one(), T::zero());
    if d.modulus() > tol(SL2C_DET_TOL) {
        return Err(Error::Precondition(format!("det a deviates from 1 by {d}")));
    }
    Ok(Herm2 {
        m: a * x.m * a.adjoint(),
    })
}

/// Lorentz transformation `g_a` on four-vectors.
pub fn lorentz_map<T: RealField + Copy>(a: &Sl2c<T>, v: &FourVector<T>) -> Result<FourVector<T>> {
    Ok(herm_to_vector(&sl2c_act(a, &vector_to_herm(v))?))
}

/// Random element of SL(2,C) with `|a_11|` in `[1/2, 2]`.
pub fn random_sl2c<T, R>(rng: &mut R) -> Sl2c<T>
where
    T: RealField + Copy + rand::distributions::uniform::SampleUniform,
    R: Rng + ?Sized,
{
    let one = T::one();
    let half: T = convert(0.5);
    let two: T = convert(2.0);
    let tau = T::two_pi();
    let r = rng.gen_range(half..=two);
    let th = rng.gen_range(T::zero()..tau);
    let a = Complex::new(r * th.cos(), r * th.sin());
    let mut g = || Complex::new(rng.gen_range(-one..=one), rng.gen_range(-one..=one));
    let (b, cc) = (g(), g());
    let d = (Complex::new(one, T::zero()) + b * cc) / a;
    Matrix2::new(a, b, cc, d)
}

/// Spinor `(xi^1, xi^2)` or co-spinor `(xi^1', xi^2')`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TwoSpinor<T> {
    pub c: [Complex<T>; 2],
}

pub type CoSpinor<T> = TwoSpinor<T>;

impl<T: RealField + Copy> TwoSpinor<T> {
    pub fn new(a: Complex<T>, b: Complex<T>) -> Self {
        TwoSpinor { c: [a, b] }
    }

    pub fn conj(&self) -> Self {
        TwoSpinor::new(self.c[0].conj(), self.c[1].conj())
    }

    pub fn add(&self, o: &Self) -> Self {
        TwoSpinor::new(self.c[0] + o.c[0], self.c[1] + o.c[1])
    }

    pub fn max_abs_diff(&self, o: &Self) -> T {
        (self.c[0] - o.c[0]).modulus().max((self.c[1] - o.c[1]).modulus())
    }

    pub fn random<R: Rng + ?Sized>(rng: &mut R) -> Self
    where
        T: rand::distributions::uniform::SampleUniform,
    {
        let one = T::one();
        let mut g = || Complex::new(rng.gen_range(-one..=one), rng.gen_range(-one..=one));
        TwoSpinor::new(g(), g())
    }
}

impl<T: RealField + Serialize + Copy> Serialize for TwoSpinor<T> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        [Pair(self.c[0]), Pair(self.c[1])].serialize(s)
    }
}

/// Complex coordinates `x^mu` of the spintensor `xi^l xi^n'`.
pub fn spinor_outer<T: RealField + Copy>(xi: &TwoSpinor<T>, xi_dot: &CoSpinor<T>) -> [Complex<T>; 4] {
    let s = inv_sqrt2::<T>();
    let k = Complex::new(s, T::zero());
    let i_k = Complex::new(T::zero(), s);
    let [a, b] = xi.c;
    let [ad, bd] = xi_dot.c;
    [
        k * (a * ad + b * bd),
        k * (a * bd + b * ad),
        -i_k * (a * bd - b * ad),
        k * (a * ad - b * bd),
    ]
}

/// Real four-vector when every imaginary part is below `eps`.
pub fn real_four_vector<T: RealField + Copy>(x: &[Complex<T>; 4], eps: T) -> Option<FourVector<T>> {
    x.iter()
        .all(|z| z.im.abs() <= eps)
        .then(|| FourVector::new(x[0].re, x[1].re, x[2].re, x[3].re))
}

/// `omega = (i/sqrt 2) [[x0 + x3, x1 + i x2], [x1 + i x2, x0 - x3]] pi`.
pub fn twistor_incidence<T: RealField + Copy>(x: &FourVector<T>, pi: &CoSpinor<T>) -> TwoSpinor<T> {
    let [x0, x1, x2, x3] = x.x;
    let z = T::zero();
    let m = Matrix2::new(c(x0 + x3, z), c(x1, x2), c(x1, x2), c(x0 - x3, z));
    let k = Complex::new(z, inv_sqrt2::<T>());
    let w0 = k * (m[(0, 0)] * pi.c[0] + m[(0, 1)] * pi.c[1]);
    let w1 = k * (m[(1, 0)] * pi.c[0] + m[(1, 1)] * pi.c[1]);
    TwoSpinor::new(w0, w1)
}

/// `Z = (omega, pi)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(bound = "T: RealField + Serialize + Copy")]
pub struct Twistor<T> {
    pub omega: TwoSpinor<T>,
    pub pi: CoSpinor<T>,
}

impl<T: RealField + Copy> Twistor<T> {
    pub fn incident(x: &FourVector<T>, pi: CoSpinor<T>) -> Self {
        Twistor {
            omega: twistor_incidence(x, &pi),
            pi,
        }
    }

    /// `omega . conj(pi) + conj(omega) . pi`.
    pub fn norm(&self) -> T {
        (0..2).fold(T::zero(), |acc, s| {
            acc + (self.omega.c[s] * self.pi.c[s].conj() + self.omega.c[s].conj() * self.pi.c[s]).re
        })
    }

    pub fn components(&self) -> [Complex<T>; 4] {
        [self.omega.c[0], self.omega.c[1], self.pi.c[0], self.pi.c[1]]
    }
}

/// Gram matrix `H` of the twistor norm, `norm(Z) = Z^dagger H Z`.
pub fn twistor_form<T: RealField + Copy>() -> Matrix4<Complex<T>> {
    let one = Complex::new(T::one(), T::zero());
    let mut h = Matrix4::zeros();
    for s in 0..2 {
        h[(s, s + 2)] = one;
        h[(s + 2, s)] = one;
    }
    h
}

/// Number of positive and negative eigenvalues of the twistor form.
pub fn twistor_signature() -> (usize, usize) {
    let eig = nalgebra::SymmetricEigen::new(twistor_form::<f64>());
    let pos = eig.eigenvalues.iter().filter(|v| **v > 1e-12).count();
    let neg = eig.eigenvalues.iter().filter(|v| **v < -1e-12).count();
    (pos, neg)
}

/// Pure qubit `a|0> + b|1>`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QubitState<T> {
    pub a: Complex<T>,
    pub b: Complex<T>,
}

impl<T: RealField + Copy> QubitState<T> {
    pub fn new(a: Complex<T>, b: Complex<T>) -> Result<Self> {
        let n = a.norm_sqr() + b.norm_sqr() - T::one();
        if n.abs() > tol(NORMALIZATION_TOL) {
            return Err(Error::Precondition("qubit amplitudes are not normalized".into()));
        }
        Ok(QubitState { a, b })
    }

    pub fn random<R: Rng + ?Sized>(rng: &mut R) -> Self
    where
        T: rand::distributions::uniform::SampleUniform,
    {
        let s = TwoSpinor::<T>::random(rng);
        let n = (s.c[0].norm_sqr() + s.c[1].norm_sqr()).sqrt();
        QubitState {
            a: s.c[0] / Complex::new(n, T::zero()),
            b: s.c[1] / Complex::new(n, T::zero()),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DensityMatrix<T: nalgebra::Scalar> {
    pub m: Matrix2<Complex<T>>,
}

impl<T: RealField + Copy> DensityMatrix<T> {
    pub fn trace(&self) -> Complex<T> {
        self.m[(0, 0)] + self.m[(1, 1)]
    }

    /// `Tr rho^2`.
    pub fn purity(&self) -> T {
        let sq = self.m * self.m;
        (sq[(0, 0)] + sq[(1, 1)]).re
    }

    pub fn is_hermitian(&self, eps: T) -> bool {
        (self.m - self.m.adjoint()).iter().all(|z| z.modulus() <= eps)
    }

    pub fn max_abs_diff(&self, other: &Self) -> T {
        (self.m - other.m).iter().fold(T::zero(), |a, z| a.max(z.modulus()))
    }
}

impl<T: RealField + Serialize + Copy> Serialize for DensityMatrix<T> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        serialize_matrix(&self.m, s)
    }
}

/// `|psi><psi| = [[|a|^2, a b*], [b a*, |b|^2]]`.
pub fn qubit_density<T: RealField + Copy>(a: Complex<T>, b: Complex<T>) -> Result<DensityMatrix<T>> {
    let st = QubitState::new(a, b)?;
    Ok(pure_density(&st))
}

pub fn pure_density<T: RealField + Copy>(st: &QubitState<T>) -> DensityMatrix<T> {
    let (a, b) = (st.a, st.b);
    let z = T::zero();
    DensityMatrix {
        m: Matrix2::new(c(a.norm_sqr(), z), a * b.conj(), b * a.conj(), c(b.norm_sqr(), z)),
    }
}

/// Polarization vector `(P1, P2, P3)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(transparent)]
pub struct BlochVector<T> {
    pub p: [T; 3],
}

impl<T: RealField + Copy> BlochVector<T> {
    pub fn norm_sq(&self) -> T {
        self.p.iter().fold(T::zero(), |a, v| a + *v * *v)
    }

    pub fn norm(&self) -> T {
        self.norm_sq().sqrt()
    }

    pub fn is_pure(&self, eps: T) -> bool {
        (self.norm_sq() - T::one()).abs() <= eps
    }

    /// Uniform in the unit ball.
    pub fn random_in_ball<R: Rng + ?Sized>(rng: &mut R) -> Self
    where
        T: rand::distributions::uniform::SampleUniform,
    {
        let one = T::one();
        loop {
            let p = [
                rng.gen_range(-one..=one),
                rng.gen_range(-one..=one),
                rng.gen_range(-one..=one),
            ];
            let v = BlochVector { p };
            if v.norm_sq() <= one {
                return v;
            }
        }
    }
}

/// Pauli matrices `sigma_0 .. sigma_3`.
pub fn pauli<T: RealField + Copy>() -> [Matrix2<Complex<T>>; 4] {
    let (o, z) = (T::one(), T::zero());
    [
        Matrix2::new(c(o, z), c(z, z), c(z, z), c(o, z)),
        Matrix2::new(c(z, z), c(o, z), c(o, z), c(z, z)),
        Matrix2::new(c(z, z), c(z, -o), c(z, o), c(z, z)),
        Matrix2::new(c(o, z), c(z, z), c(z, z), c(-o, z)),
    ]
}

/// `P_j = Tr(rho sigma_j)`.
pub fn bloch_vector<T: RealField + Copy>(rho: &DensityMatrix<T>) -> BlochVector<T> {
    let s = pauli::<T>();
    let tr = |m: Matrix2<Complex<T>>| (m[(0, 0)] + m[(1, 1)]).re;
    BlochVector {
        p: [tr(rho.m * s[1]), tr(rho.m * s[2]), tr(rho.m * s[3])],
    }
}

/// `rho = (sigma_0 + P . sigma) / 2`.
pub fn density_from_bloch<T: RealField + Copy>(p: &BlochVector<T>) -> Result<DensityMatrix<T>> {
    if p.norm_sq() > T::one() + tol(1e-12) {
        return Err(Error::Precondition("Bloch vector longer than 1".into()));
    }
    let s = pauli::<T>();
    let half = Complex::new(convert::<f64, T>(0.5), T::zero());
    let re = |x: T| Complex::new(x, T::zero());
    let m = (s[0] + s[1] * re(p.p[0]) + s[2] * re(p.p[1]) + s[3] * re(p.p[2])) * half;
    Ok(DensityMatrix { m })
}

/// Outcome of sampling the properties of `a -> g_a`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DoubleCoverReport {
    pub samples: usize,
    pub identity_holds: bool,
    pub composition_failures: usize,
    pub sign_failures: usize,
    /// Pairs `a != +-a'` whose maps coincided on the probe vectors.
    pub collisions: usize,
    pub max_composition_error: f64,
}

impl DoubleCoverReport {
    pub fn passed(&self) -> bool {
        self.identity_holds && self.composition_failures == 0 && self.sign_failures == 0 && self.collisions == 0
    }
}

pub const DOUBLE_COVER_TOL: f64 = 1e-9;

/// Checks `g_I = e`, `g_a g_b = g_ab` and `g_a = g_-a` on random samples,
/// and that distinct `+-a` give distinct maps.
pub fn sl2c_double_cover_check<R: Rng + ?Sized>(samples: usize, rng: &mut R) -> Result<DoubleCoverReport> {
    if samples == 0 {
        return Err(Error::Precondition("at least one sample is required".into()));
    }
    let basis: Vec<FourVector<f64>> = (0..4)
        .map(|i| {
            let mut x = [0.0; 4];
            x[i] = 1.0;
            FourVector { x }
        })
        .collect();
    let id = Matrix2::identity();
    let mut identity_holds = true;
    for e in &basis {
        identity_holds &= lorentz_map(&id, e)?.max_abs_diff(e) <= DOUBLE_COVER_TOL;
    }
    let mut report = DoubleCoverReport {
        samples,
        identity_holds,
        composition_failures: 0,
        sign_failures: 0,
        collisions: 0,
        max_composition_error: 0.0,
    };
    for _ in 0..samples {
        let a = random_sl2c::<f64, _>(rng);
        let b = random_sl2c::<f64, _>(rng);
        let x = FourVector::<f64>::random(rng);
        let scale = 1.0 + x.euclidean_norm_sq().sqrt();
        let lhs = lorentz_map(&a, &lorentz_map(&b, &x)?)?;
        let rhs = lorentz_map(&(a * b), &x)?;
        let err = lhs.max_abs_diff(&rhs) / (scale * (1.0 + rhs.euclidean_norm_sq().sqrt()));
        report.max_composition_error = report.max_composition_error.max(err);
        if err > DOUBLE_COVER_TOL {
            report.composition_failures += 1;
        }
        if lorentz_map(&(-a), &x)?.max_abs_diff(&lorentz_map(&a, &x)?) > DOUBLE_COVER_TOL * (1.0 + rhs.euclidean_norm_sq().sqrt()) {
            report.sign_failures += 1;
        }
        let far = (a - b).norm().min((a + b).norm()) > 1e-3;
        if far {
            let same = basis.iter().all(|e| {
                let (ga, gb) = (lorentz_map(&a, e), lorentz_map(&b, e));
                matches!((ga, gb), (Ok(u), Ok(v)) if u.max_abs_diff(&v) <= DOUBLE_COVER_TOL)
            });
            if same {
                report.collisions += 1;
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    type V = FourVector<f64>;

    fn cx(re: f64, im: f64) -> Complex<f64> {
        Complex::new(re, im)
    }

    #[test]
    fn herm_examples() {
        let h = vector_to_herm(&V::new(1.0, 0.0, 0.0, 0.0));
        assert_eq!(h.m, Matrix2::identity());
        assert_eq!(h.det(), cx(1.0, 0.0));
        let h = vector_to_herm(&V::new(0.0, 1.0, 0.0, 0.0));
        assert_eq!(h.m, pauli::<f64>()[1]);
        assert_eq!(h.det(), cx(-1.0, 0.0));
    }

    #[test]
    fn herm_round_trip_and_det() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..100 {
            let x = V::random(&mut rng);
            let h = vector_to_herm(&x);
            assert!(h.is_hermitian(0.0));
            assert!(herm_to_vector(&h).max_abs_diff(&x) <= 1e-12);
            assert!((h.det().re - x.lorentz_norm()).abs() <= 1e-12 * (1.0 + x.lorentz_norm().abs()));
        }
    }

    #[test]
    fn action_examples() {
        let x = vector_to_herm(&V::new(0.3, -1.2, 0.5, 2.0));
        let id: Sl2c<f64> = Matrix2::identity();
        assert_eq!(sl2c_act(&id, &x).unwrap(), x);
        assert!(sl2c_act(&(-id), &x).unwrap().max_abs_diff(&x) <= 1e-15);
        let boost = Matrix2::new(cx(0.3f64.exp(), 0.0), cx(0.0, 0.0), cx(0.0, 0.0), cx((-0.3f64).exp(), 0.0));
        let y = sl2c_act(&boost, &x).unwrap();
        assert!((y.det() - x.det()).norm() <= 1e-12);
        let bad = id * cx(2.0, 0.0);
        assert!(sl2c_act(&bad, &x).is_err());
    }

    #[test]
    fn outer_examples() {
        let s = std::f64::consts::FRAC_1_SQRT_2;
        let up = TwoSpinor::new(cx(1.0, 0.0), cx(0.0, 0.0));
        let x = real_four_vector(&spinor_outer(&up, &up), 1e-15).unwrap();
        assert!(x.max_abs_diff(&V::new(s, 0.0, 0.0, s)) <= 1e-15);
        assert!(x.lorentz_norm().abs() <= 1e-15);
        let down = TwoSpinor::new(cx(0.0, 0.0), cx(1.0, 0.0));
        let x = real_four_vector(&spinor_outer(&down, &down), 1e-15).unwrap();
        assert!(x.max_abs_diff(&V::new(s, 0.0, 0.0, -s)) <= 1e-15);
    }

    #[test]
    fn incidence_examples() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let pi = TwoSpinor::<f64>::random(&mut rng);
        let zero = twistor_incidence(&V::new(0.0, 0.0, 0.0, 0.0), &pi);
        assert_eq!(zero.c, [cx(0.0, 0.0); 2]);
        let w = twistor_incidence(&V::new(2f64.sqrt(), 0.0, 0.0, 0.0), &pi);
        let ipi = TwoSpinor::new(pi.c[0] * cx(0.0, 1.0), pi.c[1] * cx(0.0, 1.0));
        assert!(w.max_abs_diff(&ipi) <= 1e-12);
        let x = V::random(&mut rng);
        let pi2 = TwoSpinor::random(&mut rng);
        let lhs = twistor_incidence(&x, &pi.add(&pi2));
        let rhs = twistor_incidence(&x, &pi).add(&twistor_incidence(&x, &pi2));
        assert!(lhs.max_abs_diff(&rhs) <= 1e-12);
    }

    #[test]
    fn twistor_norm_signature() {
        assert_eq!(twistor_signature(), (2, 2));
        let z = Twistor {
            omega: TwoSpinor::new(cx(1.0, 0.0), cx(0.0, 0.0)),
            pi: TwoSpinor::new(cx(1.0, 0.0), cx(0.0, 0.0)),
        };
        assert_eq!(z.norm(), 2.0);
    }

    #[test]
    fn density_examples() {
        let r = qubit_density(cx(1.0, 0.0), cx(0.0, 0.0)).unwrap();
        assert_eq!(r.m, Matrix2::new(cx(1.0, 0.0), cx(0.0, 0.0), cx(0.0, 0.0), cx(0.0, 0.0)));
        let s = std::f64::consts::FRAC_1_SQRT_2;
        let r = qubit_density(cx(s, 0.0), cx(s, 0.0)).unwrap();
        assert!(r.m.iter().all(|z| (z - cx(0.5, 0.0)).norm() <= 1e-15));
        let p = bloch_vector(&r);
        assert!((p.p[0] - 1.0).abs() <= 1e-15 && p.p[1].abs() <= 1e-15 && p.p[2].abs() <= 1e-15);
        assert!(qubit_density(cx(1.0, 0.0), cx(1.0, 0.0)).is_err());
    }

    #[test]
    fn bloch_examples() {
        let r = qubit_density(cx(1.0, 0.0), cx(0.0, 0.0)).unwrap();
        assert_eq!(bloch_vector(&r).p, [0.0, 0.0, 1.0]);
        let mixed = density_from_bloch(&BlochVector { p: [0.0; 3] }).unwrap();
        assert!((mixed.purity() - 0.5f64).abs() <= 1e-15);
        assert!(mixed.max_abs_diff(&DensityMatrix { m: Matrix2::identity() * cx(0.5, 0.0) }) <= 1e-15);
        assert!(density_from_bloch(&BlochVector { p: [1.0, 1.0, 0.0] }).is_err());
    }

    #[test]
    fn double_cover() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let r = sl2c_double_cover_check(100, &mut rng).unwrap();
        assert!(r.passed(), "{r:?}");
    }

    #[test]
    fn json_pairs() {
        let s = TwoSpinor::new(cx(1.0, -2.0), cx(0.5, 0.0));
        assert_eq!(serde_json::to_string(&s).unwrap(), "[[1.0,-2.0],[0.5,0.0]]");
        let h = vector_to_herm(&V::new(1.0, 0.0, 0.0, 0.0));
        assert_eq!(serde_json::to_string(&h).unwrap(), "[[[1.0,0.0],[0.0,0.0]],[[0.0,0.0],[1.0,0.0]]]");
    }
}
