mod common;

use common::*;
use coulomb_hankel::classify::{classify, dd_product_closed, hurwitz_counts};
use coulomb_hankel::exact::diag_scale;
use coulomb_hankel::hankel::{
    bernoulli_hankel_closed, bernoulli_hankel_det, build_coulomb_hankel, build_rayleigh_hankel, det_coulomb_closed,
    det_coulomb_via_moments, det_rayleigh, det_rayleigh_closed, det_rayleigh_dj, det_rayleigh_ell2, det_rayleigh_ell3,
    genocchi_hankel_closed, genocchi_hankel_det, parity_split_check, recurrence_coeffs, RayleighMethod,
};
use coulomb_hankel::zeta::{
    bernoulli_even, genocchi_even, genocchi_even_via_rayleigh, rayleigh, zeta_base, RayleighTable,
};
use coulomb_hankel::{det_exact, CoulombParams, Error, ExactMatrix, ExactRational, ZetaTable};
use num_rational::BigRational;
use num_traits::{One, Zero};

fn r(p: i64, d: i64) -> ExactRational {
    ExactRational::new(p, d)
}

fn params(l: ExactRational, eta: ExactRational) -> CoulombParams {
    CoulombParams::new(l, eta)
}

#[test]
fn det_exact_small_cases() {
    let m = ExactMatrix::from_rows(vec![vec![r(5, 3)]]).unwrap();
    assert_eq!(det_exact(&m), r(5, 3));
    let m = ExactMatrix::from_rows(vec![vec![r(1, 3), r(0, 1)], vec![r(0, 1), r(1, 45)]]).unwrap();
    assert_eq!(det_exact(&m), r(1, 135));
}

#[test]
fn diag_scale_cases() {
    let id = ExactMatrix::identity(2);
    let s = diag_scale(&id, &r(2, 1)).unwrap();
    assert_eq!((s.get(0, 0).clone(), s.get(1, 1).clone()), (r(4, 1), r(16, 1)));
    assert_eq!(det_exact(&s) / det_exact(&id), r(64, 1));
    let one = ExactMatrix::from_rows(vec![vec![r(7, 5)]]).unwrap();
    assert_eq!(diag_scale(&one, &r(-3, 2)).unwrap().get(0, 0), &(r(7, 5) * r(9, 4)));
    assert!(diag_scale(&id, &r(0, 1)).is_err());
}

#[test]
fn zeta_values() {
    assert_eq!(zeta_base(&params(r(0, 1), r(0, 1))).unwrap(), r(1, 3));
    assert_eq!(zeta_base(&params(r(0, 1), r(1, 1))).unwrap(), r(2, 3));
    assert_eq!(zeta_base(&params(r(1, 2), r(0, 1))).unwrap(), r(1, 4));
    assert_eq!(zeta_base(&params(r(1, 2), r(0, 1))).unwrap(), r(2, 1) * rayleigh(&r(1, 1), 1).unwrap());

    let t = ZetaTable::with_kmax(params(r(0, 1), r(1, 1)), 3).unwrap();
    assert_eq!(t.get(3), Some(&r(1, 3)));
    let t = ZetaTable::with_kmax(params(r(0, 1), r(0, 1)), 4).unwrap();
    assert_eq!((t.get(2), t.get(3), t.get(4)), (Some(&r(1, 3)), Some(&r(0, 1)), Some(&r(1, 45))));
}

#[test]
fn zeta_matches_test_recurrence() {
    for (l, eta) in [((1, 3), (1, 2)), ((-5, 4), (2, 1)), ((7, 2), (-3, 5)), ((-15, 4), (3, 2))] {
        let (lq, eq) = (q(l.0, l.1), q(eta.0, eta.1));
        let oracle = zeta_oracle(&lq, &eq, 16);
        let t = ZetaTable::with_kmax(params(ex(&lq), ex(&eq)), 16).unwrap();
        for (k, expected) in oracle.iter().enumerate().skip(2) {
            assert_eq!(&big(t.get(k).unwrap()), expected, "L={lq} eta={eq} k={k}");
        }
    }
}

#[test]
fn odd_zeta_vanish_at_eta_zero() {
    for l in [r(0, 1), r(-2, 1), r(-3, 1), r(5, 3), r(-7, 4)] {
        let t = ZetaTable::with_kmax(params(l.clone(), r(0, 1)), 15).unwrap();
        for k in (3..=15).step_by(2) {
            assert!(t.get(k).unwrap().is_zero(), "L={l} k={k}");
        }
    }
}

#[test]
fn rayleigh_values() {
    assert_eq!(rayleigh(&r(1, 1), 1).unwrap(), r(1, 8));
    // 1/(16 (nu+1)^2 (nu+2)) at nu = 1
    assert_eq!(rayleigh(&r(1, 1), 2).unwrap(), r(1, 192));
    assert_eq!(rayleigh(&r(1, 1), 3).unwrap(), r(1, 3072));
    for nu in [r(1, 2), r(3, 1), r(-1, 3), r(7, 4)] {
        let one = ExactRational::one();
        let s2 = one.checked_div(&(r(4, 1) * (&nu + r(1, 1)))).unwrap();
        let s4 = one.checked_div(&(r(16, 1) * (&nu + r(1, 1)).square() * (&nu + r(2, 1)))).unwrap();
        let s6 =
            one.checked_div(&(r(32, 1) * (&nu + r(1, 1)).pow(3).unwrap() * (&nu + r(2, 1)) * (&nu + r(3, 1)))).unwrap();
        let mut t = RayleighTable::new(nu.clone()).unwrap();
        assert_eq!(t.sigmas(3).unwrap(), vec![s2, s4, s6], "nu={nu}");
    }
}

#[test]
fn bernoulli_against_classical_recurrence() {
    let classical = bernoulli_classical(40);
    let via_sigma = bernoulli_even(20).unwrap();
    for (i, b) in via_sigma.iter().enumerate() {
        assert_eq!(big(b), classical[2 * (i + 1)], "B_{}", 2 * (i + 1));
    }
    let first: Vec<_> = via_sigma.iter().take(3).cloned().collect();
    assert_eq!(first, vec![r(1, 6), r(-1, 30), r(1, 42)]);
}

#[test]
fn genocchi_two_routes() {
    let g = genocchi_even(12).unwrap();
    assert_eq!(g, genocchi_even_via_rayleigh(12).unwrap());
    assert_eq!(&g[..3], &[r(-1, 1), r(1, 1), r(-3, 1)]);
    assert!(g.iter().all(|x| x.is_integer()));
}

#[test]
fn coulomb_hankel_examples() {
    let p = params(r(0, 1), r(0, 1));
    assert_eq!(build_coulomb_hankel(&p, 1).unwrap().matrix.get(0, 0), &r(1, 3));
    let m = build_coulomb_hankel(&p, 2).unwrap().matrix;
    assert_eq!(
        m.rows().map(|row| row.to_vec()).collect::<Vec<_>>(),
        vec![vec![r(1, 3), r(0, 1)], vec![r(0, 1), r(1, 45)]]
    );
    assert_eq!(det_coulomb_closed(&p, 2).unwrap(), r(1, 135));
    assert_eq!(det_coulomb_via_moments(&p, 2).unwrap(), r(1, 135));

    let p = params(r(0, 1), r(1, 1));
    assert_eq!(det_coulomb_closed(&p, 1).unwrap(), r(2, 3));
    assert_eq!(recurrence_coeffs(&p, 1).unwrap().a(1), Some(&r(1, 12)));
    assert_eq!(det_coulomb_via_moments(&p, 2).unwrap(), r(1, 27));
    assert_eq!(det_exact(&build_coulomb_hankel(&p, 2).unwrap().matrix), r(1, 27));
}

#[test]
fn recurrence_coefficient_formulas() {
    let p = params(r(1, 3), r(1, 2));
    let c = recurrence_coeffs(&p, 4).unwrap();
    let (l, eta) = (q(1, 3), q(1, 2));
    for n in 1..=4i64 {
        let x = &l + q(n + 1, 1);
        let a = (BigRational::one() + &eta * &eta / (&x * &x))
            / ((q(2 * n + 1, 1) + q(2, 1) * &l) * (q(2 * n + 3, 1) + q(2, 1) * &l));
        assert_eq!(big(c.a(n as usize).unwrap()), a, "a_{n}");
    }
    for n in 0..4i64 {
        let b = -&eta / ((&l + q(n + 1, 1)) * (&l + q(n + 2, 1)));
        assert_eq!(big(c.b(n as usize).unwrap()), b, "b_{n}");
    }
}

#[test]
fn rayleigh_hankel_examples() {
    let one = r(1, 1);
    assert_eq!(build_rayleigh_hankel(&one, 0, 1).unwrap().matrix.get(0, 0), &r(1, 8));
    assert_eq!(build_rayleigh_hankel(&one, 1, 1).unwrap().matrix.get(0, 0), &r(1, 192));
    assert_eq!(build_rayleigh_hankel(&one, 2, 1).unwrap().matrix.get(0, 0), &r(1, 3072));
    assert_eq!(det_rayleigh_closed(&one, 1, 1).unwrap(), r(1, 192));
    assert_eq!(det_rayleigh_closed(&one, 0, 2).unwrap(), r(1, 256 * 8 * 9 * 4));
    assert_eq!(det_rayleigh_ell2(&one, 1).unwrap(), r(1, 3072));
    assert_eq!(det_rayleigh_ell3(&one, 1).unwrap(), rayleigh(&one, 4).unwrap());
    for nu in [r(1, 2), r(3, 1)] {
        assert_eq!(det_rayleigh_ell3(&nu, 2).unwrap(), det_exact(&build_rayleigh_hankel(&nu, 3, 2).unwrap().matrix));
    }
    assert_eq!(det_rayleigh_dj(&one, 4, 2).unwrap(), det_exact(&build_rayleigh_hankel(&one, 4, 2).unwrap().matrix));
    assert!(matches!(det_rayleigh_closed(&one, 2, 2), Err(Error::UnsupportedEll(2))));
}

/// `e_n = d_n^(ell+2) / d_{n+1}^(ell)` satisfies
/// `e_n = e_{n-1} + (d_n^(ell+1))^2 / (d_n^(ell) d_{n+1}^(ell))` with `e_0 = 1 / sigma_{2 ell + 2}`,
/// so `d^(ell+2)` follows from `d^(ell)` and `d^(ell+1)` alone.
fn explicit_next(lower: &dyn Fn(i64) -> BigRational, mid: &dyn Fn(i64) -> BigRational, n: i64) -> BigRational {
    let mut e = lower(1).recip();
    for j in 1..=n {
        e += mid(j) * mid(j) / (lower(j) * lower(j + 1));
    }
    e * lower(n + 1)
}

#[test]
fn desnanot_jacobi_explicit_solution() {
    for nu in [q(1, 2), q(1, 1), q(5, 2), q(4, 1), q(-1, 3)] {
        let d0 = |n: i64| if n == 0 { BigRational::one() } else { rayleigh_product(&nu, 0, n) };
        let d1 = |n: i64| if n == 0 { BigRational::one() } else { rayleigh_product(&nu, 1, n) };
        let d2 = |n: i64| if n == 0 { BigRational::one() } else { explicit_next(&d0, &d1, n) };
        for n in 1..=5 {
            let lib2 = det_rayleigh(&ex(&nu), 2, n as usize, RayleighMethod::Dj).unwrap();
            assert_eq!(big(&lib2), d2(n), "nu={nu} ell=2 n={n}");
            assert_eq!(d2(n), rayleigh_ell2(&nu, n), "nu={nu} ell=2 n={n}");
        }
        for n in 1..=4 {
            let d3 = explicit_next(&d1, &d2, n);
            assert_eq!(d3, rayleigh_ell3(&nu, n), "nu={nu} ell=3 n={n}");
            assert_eq!(big(&det_rayleigh(&ex(&nu), 3, n as usize, RayleighMethod::Dj).unwrap()), d3);
        }
    }
}

#[test]
fn number_hankel_examples() {
    assert_eq!(bernoulli_hankel_det(0, 1).unwrap(), r(1, 12));
    assert_eq!(bernoulli_hankel_closed(0, 1).unwrap(), r(1, 12));
    assert_eq!(bernoulli_hankel_det(1, 1).unwrap(), r(-1, 720));
    assert_eq!(bernoulli_hankel_closed(1, 1).unwrap(), r(-1, 720));
    assert_eq!(genocchi_hankel_det(0, 1).unwrap(), r(-1, 2));
    assert_eq!(genocchi_hankel_closed(0, 1).unwrap(), r(-1, 2));
    // G_4 / 4! = 1/24, and the product formula gives the same value
    assert_eq!(genocchi_hankel_det(1, 1).unwrap(), r(1, 24));
    assert_eq!(genocchi_hankel_closed(1, 1).unwrap(), r(1, 24));

    let b = bernoulli_classical(6);
    let brute = leibniz(&hankel(&[&b[2] / factorial(2), &b[4] / factorial(4), &b[6] / factorial(6)], 2));
    assert_eq!(big(&bernoulli_hankel_det(0, 2).unwrap()), brute);
    assert!(matches!(bernoulli_hankel_closed(2, 1), Err(Error::UnsupportedEll(2))));
}

#[test]
fn parity_split() {
    for nu in [r(1, 2), r(1, 1), r(5, 2), r(-1, 3)] {
        for n in 1..=3 {
            let s = parity_split_check(&nu, n).unwrap();
            assert!(s.holds(), "nu={nu} n={n}: {s:?}");
        }
    }
}

#[test]
fn sign_product_examples() {
    let p = params(r(0, 1), r(0, 1));
    assert_eq!(dd_product_closed(&p, 0).unwrap(), r(1, 3));
    assert_eq!(dd_product_closed(&p, 1).unwrap(), r(1, 405));
    assert_eq!(dd_product_closed(&p, 1).unwrap(), r(1, 3) * r(1, 135));
    assert!(dd_product_closed(&params(r(-7, 4), r(3, 2)), 0).unwrap().is_negative());
}

#[test]
fn classification_examples() {
    let c = classify(&params(r(1, 2), r(2, 1)), None).unwrap();
    assert!(c.all_real && c.pair_count == 0);
    assert_eq!(classify(&params(r(-7, 4), r(3, 2)), None).unwrap().pair_count, 1);
    assert_eq!(classify(&params(r(-15, 4), r(3, 2)), None).unwrap().pair_count, 3);
    let h = hurwitz_counts(&r(-3, 2)).unwrap();
    assert!(h.complex_zeros == 2 && h.imaginary_pair);
    let h = hurwitz_counts(&r(-5, 2)).unwrap();
    assert!(h.complex_zeros == 4 && !h.imaginary_pair);
    assert_eq!(hurwitz_counts(&r(1, 2)).unwrap().complex_zeros, 0);
}

#[test]
fn leibniz_oracle_sanity() {
    let m = vec![vec![q(1, 1), q(2, 1)], vec![q(3, 1), q(4, 1)]];
    assert_eq!(leibniz(&m), q(-2, 1));
    assert!(leibniz(&[vec![q(1, 1), q(1, 1)], vec![q(1, 1), q(1, 1)]]).is_zero());
}
