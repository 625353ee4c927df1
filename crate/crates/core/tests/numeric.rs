use bott8::spinor::{
    bloch_vector, herm_to_vector, lorentz_map, pure_density, qubit_density, random_sl2c, sl2c_double_cover_check,
    twistor_form, twistor_signature, vector_to_herm, FourVector, QubitState, TwoSpinor, Twistor,
};
use nalgebra::Matrix2;
use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

#[test]
fn lorentz_norm_is_the_determinant() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..1000 {
        let x = FourVector::<f64>::random(&mut rng);
        let h = vector_to_herm(&x);
        let m = h.m;
        let det = (m[(0, 0)] * m[(1, 1)] - m[(0, 1)] * m[(1, 0)]).re;
        assert!((det - x.lorentz_norm()).abs() <= 1e-12);
        assert!(herm_to_vector(&h).max_abs_diff(&x) <= 1e-12);
    }
}

#[test]
fn lorentz_maps_preserve_the_interval() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for _ in 0..1000 {
        let a = random_sl2c::<f64, _>(&mut rng);
        let x = FourVector::<f64>::random(&mut rng);
        let y = lorentz_map(&a, &x).unwrap();
        let scale = 1.0 + y.euclidean_norm_sq();
        assert!((y.lorentz_norm() - x.lorentz_norm()).abs() <= 1e-9 * scale);
    }
}

#[test]
fn double_cover_properties() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    let r = sl2c_double_cover_check(100, &mut rng).unwrap();
    assert!(r.passed(), "{r:?}");
    assert_eq!(r.samples, 100);
}

#[test]
fn twistor_form_eigenvectors() {
    let h = twistor_form::<f64>();
    assert_eq!(h, h.adjoint());
    assert_eq!(twistor_signature(), (2, 2));
    let u = TwoSpinor::new(c(0.6, 0.1), c(-0.3, 0.7));
    let minus_u = TwoSpinor::new(-u.c[0], -u.c[1]);
    let plus = Twistor { omega: u, pi: u };
    let minus = Twistor { omega: u, pi: minus_u };
    let n2 = 2.0 * (u.c[0].norm_sqr() + u.c[1].norm_sqr());
    assert!((plus.norm() - n2).abs() <= 1e-12);
    assert!((minus.norm() + n2).abs() <= 1e-12);
}

#[test]
fn bloch_components_from_matrix_entries() {
    let mut rng = ChaCha8Rng::seed_from_u64(14);
    for _ in 0..1000 {
        let st = QubitState::<f64>::random(&mut rng);
        let rho = pure_density(&st);
        let p = bloch_vector(&rho);
        let off = rho.m[(0, 1)];
        let want = [2.0 * off.re, -2.0 * off.im, (rho.m[(0, 0)] - rho.m[(1, 1)]).re];
        for j in 0..3 {
            assert!((p.p[j] - want[j]).abs() <= 1e-12);
        }
        assert!(p.is_pure(1e-12));
        assert!((rho.purity() - 1.0).abs() <= 1e-12);
    }
}

#[test]
fn density_of_basis_and_superposition() {
    let rho = qubit_density(c(0.0, 0.0), c(0.0, 1.0)).unwrap();
    assert_eq!(rho.m, Matrix2::new(c(0.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(1.0, 0.0)));
    assert_eq!(bloch_vector(&rho).p, [0.0, 0.0, -1.0]);
    let s = std::f64::consts::FRAC_1_SQRT_2;
    let p = bloch_vector(&qubit_density(c(s, 0.0), c(0.0, s)).unwrap());
    assert!(p.p[0].abs() <= 1e-15 && (p.p[1] - 1.0).abs() <= 1e-15 && p.p[2].abs() <= 1e-15);
}
