//! Test-side oracles, written independently of the library's routes.
#![allow(dead_code)]

use coulomb_hankel::ExactRational;
use itertools::Itertools;
use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub fn q(p: i64, d: i64) -> BigRational {
    BigRational::new(p.into(), d.into())
}

pub fn big(x: &ExactRational) -> BigRational {
    x.as_big_rational().clone()
}

pub fn ex(x: &BigRational) -> ExactRational {
    ExactRational::from(x.clone())
}

pub fn powi(x: &BigRational, e: i64) -> BigRational {
    if e >= 0 {
        num_traits::pow(x.clone(), e as usize)
    } else {
        num_traits::pow(x.recip(), (-e) as usize)
    }
}

fn perm_sign(p: &[usize]) -> i32 {
    let mut inversions = 0;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                inversions += 1;
            }
        }
    }
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Leibniz expansion over all permutations.
pub fn leibniz(m: &[Vec<BigRational>]) -> BigRational {
    let n = m.len();
    if n == 0 {
        return BigRational::one();
    }
    let mut total = BigRational::zero();
    for p in (0..n).permutations(n) {
        let mut term = BigRational::one();
        for (i, &j) in p.iter().enumerate() {
            term *= &m[i][j];
        }
        if perm_sign(&p) < 0 {
            total -= term;
        } else {
            total += term;
        }
    }
    total
}

pub fn hankel(seq: &[BigRational], n: usize) -> Vec<Vec<BigRational>> {
    (0..n).map(|i| (0..n).map(|j| seq[i + j].clone()).collect()).collect()
}

fn binom(n: usize, k: usize) -> BigInt {
    let mut r = BigInt::one();
    for i in 0..k {
        r = r * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    r
}

/// `B_0..=B_n` from `sum_{k=0}^{m} C(m+1, k) B_k = 0`.
pub fn bernoulli_classical(n: usize) -> Vec<BigRational> {
    let mut b = vec![BigRational::one()];
    for m in 1..=n {
        let s: BigRational = (0..m).map(|k| BigRational::from(binom(m + 1, k)) * &b[k]).sum();
        b.push(-s / BigRational::from(BigInt::from(m + 1)));
    }
    b
}

pub fn factorial(n: usize) -> BigRational {
    (1..=n).fold(BigRational::one(), |acc, k| acc * BigRational::from(BigInt::from(k)))
}

/// `zeta_L(k)` for `k = 2..=kmax`, from the two-term recurrence written out afresh.
pub fn zeta_oracle(l: &BigRational, eta: &BigRational, kmax: usize) -> Vec<BigRational> {
    let one = BigRational::one();
    let two = q(2, 1);
    let l1 = l + &one;
    let mut z = vec![BigRational::zero(); kmax + 1];
    z[2] = (&one + eta * eta / (&l1 * &l1)) / (&two * l + q(3, 1));
    for k in 2..kmax {
        let mut num = &two * eta / &l1 * &z[k];
        for j in 1..=k.saturating_sub(2) {
            num += &z[j + 1] * &z[k - j];
        }
        z[k + 1] = num / (&two * l + BigRational::from(BigInt::from(k + 2)));
    }
    z
}

pub fn coulomb_closed(l: &BigRational, eta: &BigRational, n: usize) -> BigRational {
    let mut out = BigRational::one();
    for k in 0..n {
        let x = l + BigRational::from(BigInt::from(n - k));
        let f = BigRational::one() + eta * eta / (&x * &x);
        let lin = q(2, 1) * l + BigRational::from(BigInt::from(2 * (n - k) + 1));
        out *= powi(&f, (k + 1) as i64) / powi(&lin, (2 * k + 1) as i64);
    }
    out
}

/// `2^(-2n(n+ell)) prod_{k=1}^{2n+ell-1} (nu+k)^(k-2n-ell)`.
pub fn rayleigh_product(nu: &BigRational, ell: i64, n: i64) -> BigRational {
    let mut out = powi(&q(2, 1), -2 * n * (n + ell));
    for k in 1..=2 * n + ell - 1 {
        out *= powi(&(nu + q(k, 1)), k - 2 * n - ell);
    }
    out
}

pub fn rayleigh_ell2(nu: &BigRational, n: i64) -> BigRational {
    let mut out = powi(&q(2, 1), -2 * n * (n + 2)) * q(n + 1, 1) * (nu + q(n + 1, 1));
    for k in 1..=2 * n + 1 {
        out *= powi(&(nu + q(k, 1)), k - 2 * n - 2);
    }
    out
}

pub fn rayleigh_ell3(nu: &BigRational, n: i64) -> BigRational {
    let mut out = powi(&q(2, 1), -2 * n * (n + 3));
    for k in 1..=2 * n + 2 {
        out *= powi(&(nu + q(k, 1)), k - 2 * n - 3);
    }
    let bracket = q(2 * n * n + 6 * n + 3, 1) + nu * q(2 * n + 3, 1);
    out * q(1, 6) * q(n + 1, 1) * q(n + 2, 1) * (nu + q(n + 1, 1)) * (nu + q(n + 2, 1)) * bracket
}

pub fn bernoulli_closed(ell: i64, n: i64) -> BigRational {
    let sign = if (n * ell) % 2 == 0 { 1 } else { -1 };
    let mut out = q(sign, 1) * powi(&q(2, 1), -n * (4 * n + 4 * ell - 1));
    for k in 1..=2 * n + ell - 1 {
        out *= powi(&q(2 * k + 1, 2), k - 2 * n - ell);
    }
    out
}

pub fn genocchi_closed(ell: i64, n: i64) -> BigRational {
    let sign = if (n * (ell + 1)) % 2 == 0 { 1 } else { -1 };
    let mut out = q(sign, 1) * powi(&q(2, 1), -n * (4 * n + 4 * ell - 2));
    for k in 1..=2 * n + ell - 1 {
        out *= powi(&q(2 * k - 1, 2), k - 2 * n - ell);
    }
    out
}

pub fn is_unit_fraction(x: &BigRational) -> bool {
    x.numer().abs() == BigInt::one()
}

fn gamma(x: f64) -> f64 {
    statrs::function::gamma::gamma(x)
}

/// `Gamma(nu+1) (2/rho)^nu J_nu(rho)` with `J_nu` from its power series in `rho/2`.
pub fn bessel_phi(nu: f64, rho: Complex64) -> Complex64 {
    let half = rho / 2.0;
    let mut j = Complex64::new(0.0, 0.0);
    let w = -(half * half);
    let mut wk = Complex64::new(1.0, 0.0);
    let mut kfact = 1.0;
    for k in 0..200 {
        if k > 0 {
            wk *= w;
            kfact *= k as f64;
        }
        let term = wk / (kfact * gamma(nu + k as f64 + 1.0));
        j += term;
        if k > 10 && term.norm() < 1e-18 * j.norm().max(1e-300) {
            break;
        }
    }
    let j_nu = half.powf(nu) * j;
    gamma(nu + 1.0) * (Complex64::new(2.0, 0.0) / rho).powf(nu) * j_nu
}
