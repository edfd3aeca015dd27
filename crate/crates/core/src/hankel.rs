//! Hankel matrices of spectral zeta values and Rayleigh sums, their closed
//! determinant formulas, and cross-checks between the routes.
//!
//! Every closed formula here is a standalone evaluator. The public
//! determinant entry points always compute the direct determinant and only
//! compare against formulas when asked to.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{det_exact, diag_scale, factorial, ExactMatrix, ExactRational};
use crate::zeta::{bernoulli_even, eta_factor, genocchi_even, zeta_base, CoulombParams, RayleighTable, ZetaTable};

fn q(p: i64, d: i64) -> ExactRational {
    ExactRational::new(p, d)
}

fn int(n: i64) -> ExactRational {
    ExactRational::from_integer(n)
}

fn pow2(e: i64) -> ExactRational {
    int(2).pow(e).expect("nonzero base")
}

fn require_n(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidArgument("matrix order n must be >= 1".into()));
    }
    Ok(())
}

/// `H_n(L, eta)` with entry `(i, j) = zeta_L(i + j + 2)`, `0 <= i, j < n`.
#[derive(Clone, Debug)]
pub struct CoulombHankel {
    pub params: CoulombParams,
    pub n: usize,
    pub matrix: ExactMatrix,
}

pub fn build_coulomb_hankel(params: &CoulombParams, n: usize) -> Result<CoulombHankel> {
    require_n(n)?;
    let table = ZetaTable::with_kmax(params.clone(), 2 * n)?;
    Ok(coulomb_hankel_from_table(&table, n))
}

/// Builds `H_n` from an already extended table (needs `kmax >= 2n`).
pub fn coulomb_hankel_from_table(table: &ZetaTable, n: usize) -> CoulombHankel {
    CoulombHankel { params: table.params().clone(), n, matrix: ExactMatrix::hankel(n, &table.values()[..2 * n - 1]) }
}

/// Closed product for `det H_n(L, eta)`:
/// `prod_{k=0}^{n-1} (1 + eta^2/(L+n-k)^2)^(k+1) / (2L+2n-2k+1)^(2k+1)`.
pub fn det_coulomb_closed(params: &CoulombParams, n: usize) -> Result<ExactRational> {
    require_n(n)?;
    params.check()?;
    let l = &params.l;
    let mut out = ExactRational::one();
    for k in 0..n as i64 {
        let m = n as i64 - k;
        let lin = int(2) * l + int(2 * m + 1);
        if lin.is_zero() {
            return Err(Error::SingularParameter(format!("2L + {} = 0", 2 * m + 1)));
        }
        let factor = eta_factor(&params.eta, &(l + int(m)))?;
        out = out * factor.pow(k + 1)? * lin.pow(-(2 * k + 1))?;
    }
    Ok(out)
}

/// Three-term recurrence coefficients of the monic orthogonal polynomials
/// whose normalized moments are `zeta_L(k+2) / zeta_L(2)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RecurrenceCoeffs {
    // a[n-1] = a_n for n >= 1
    a: Vec<ExactRational>,
    // b[n] = b_n for n >= 0
    b: Vec<ExactRational>,
}

impl RecurrenceCoeffs {
    /// `a_n`, `n >= 1`.
    pub fn a(&self, n: usize) -> Option<&ExactRational> {
        n.checked_sub(1).and_then(|i| self.a.get(i))
    }

    /// `b_n`, `n >= 0`.
    pub fn b(&self, n: usize) -> Option<&ExactRational> {
        self.b.get(n)
    }

    pub fn nmax(&self) -> usize {
        self.a.len()
    }
}

/// `a_n = ((n+L+1)^2 + eta^2) / ((n+L+1)^2 (2n+2L+1)(2n+2L+3))`,
/// `b_n = -eta / ((n+L+1)(n+L+2))`.
pub fn recurrence_coeffs(params: &CoulombParams, nmax: usize) -> Result<RecurrenceCoeffs> {
    require_n(nmax)?;
    params.check()?;
    let l = &params.l;
    let a = (1..=nmax as i64)
        .map(|n| {
            let denom = (int(2 * n + 1) + int(2) * l) * (int(2 * n + 3) + int(2) * l);
            if denom.is_zero() {
                return Err(Error::SingularParameter(format!("a_{n} has a vanishing denominator")));
            }
            Ok(eta_factor(&params.eta, &(l + int(n + 1)))?.checked_div(&denom)?)
        })
        .collect::<Result<Vec<_>>>()?;
    let b = (0..=nmax as i64)
        .map(|n| {
            if params.eta.is_zero() {
                return Ok(ExactRational::zero());
            }
            let denom = (l + int(n + 1)) * (l + int(n + 2));
            (-&params.eta)
                .checked_div(&denom)
                .map_err(|_| Error::SingularParameter(format!("b_{n} has a vanishing denominator")))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(RecurrenceCoeffs { a, b })
}

/// Moment route: `det H_n = zeta_L(2)^n prod_{m=1}^{n-1} prod_{j=1}^{m} a_j`.
pub fn det_coulomb_via_moments(params: &CoulombParams, n: usize) -> Result<ExactRational> {
    require_n(n)?;
    let z2 = zeta_base(params)?;
    let mut out = z2.pow(n as i64)?;
    if n > 1 {
        let coeffs = recurrence_coeffs(params, n - 1)?;
        // a_j appears once for every m in j..=n-1
        for j in 1..n {
            out = out * coeffs.a(j).expect("in range").pow((n - j) as i64)?;
        }
    }
    Ok(out)
}

/// The three routes to `det H_n(L, eta)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoulombDeterminant {
    pub direct: ExactRational,
    pub closed: Option<ExactRational>,
    pub moments: Option<ExactRational>,
}

impl CoulombDeterminant {
    /// True when every computed route agrees with the direct value.
    pub fn consistent(&self) -> bool {
        [&self.closed, &self.moments].into_iter().flatten().all(|v| v == &self.direct)
    }
}

/// Direct determinant of `H_n(L, eta)`, optionally with both formula routes.
pub fn coulomb_hankel_det(params: &CoulombParams, n: usize, verify: bool) -> Result<CoulombDeterminant> {
    let direct = det_exact(&build_coulomb_hankel(params, n)?.matrix);
    let (closed, moments) = if verify {
        (Some(det_coulomb_closed(params, n)?), Some(det_coulomb_via_moments(params, n)?))
    } else {
        (None, None)
    };
    Ok(CoulombDeterminant { direct, closed, moments })
}

/// `H_n^(ell)(nu)` with entry `(i, j) = sigma_{2 ell + 2 + 2(i+j)}(nu)`.
#[derive(Clone, Debug)]
pub struct RayleighHankel {
    pub nu: ExactRational,
    pub ell: u32,
    pub n: usize,
    pub matrix: ExactMatrix,
}

fn rayleigh_hankel_from_table(table: &mut RayleighTable, ell: u32, n: usize) -> Result<RayleighHankel> {
    require_n(n)?;
    let first = ell as usize + 1;
    let seq = (0..2 * n - 1).map(|s| table.sigma(first + s)).collect::<Result<Vec<_>>>()?;
    Ok(RayleighHankel { nu: table.nu().clone(), ell, n, matrix: ExactMatrix::hankel(n, &seq) })
}

pub fn build_rayleigh_hankel(nu: &ExactRational, ell: u32, n: usize) -> Result<RayleighHankel> {
    let mut table = RayleighTable::new(nu.clone())?;
    rayleigh_hankel_from_table(&mut table, ell, n)
}

/// `2^(-2n(n+ell)) prod_{k=1}^{2n+ell-1} (nu+k)^(k-2n-ell)` for any `ell`.
///
/// This is the `ell in {0, 1}` formula evaluated without the range check;
/// it is exposed so callers can exhibit where it stops being a determinant.
pub fn rayleigh_product_formula(nu: &ExactRational, ell: u32, n: usize) -> Result<ExactRational> {
    require_n(n)?;
    let (n, ell) = (n as i64, ell as i64);
    let mut out = pow2(-2 * n * (n + ell));
    for k in 1..=(2 * n + ell - 1) {
        out = out * (nu + int(k)).pow(k - 2 * n - ell)?;
    }
    Ok(out)
}

fn check_rayleigh_nu(nu: &ExactRational) -> Result<()> {
    RayleighTable::new(nu.clone()).map(|_| ())
}

/// Closed form for `det H_n^(ell)(nu)`, `ell in {0, 1}`.
pub fn det_rayleigh_closed(nu: &ExactRational, ell: u32, n: usize) -> Result<ExactRational> {
    if ell > 1 {
        return Err(Error::UnsupportedEll(ell));
    }
    check_rayleigh_nu(nu)?;
    rayleigh_product_formula(nu, ell, n)
}

/// `det H_n^(2)(nu) = 2^(-2n(n+2)) (n+1)(n+nu+1) prod_{k=1}^{2n+1} (nu+k)^(k-2n-2)`.
pub fn det_rayleigh_ell2(nu: &ExactRational, n: usize) -> Result<ExactRational> {
    require_n(n)?;
    check_rayleigh_nu(nu)?;
    let n = n as i64;
    let mut out = pow2(-2 * n * (n + 2)) * int(n + 1) * (nu + int(n + 1));
    for k in 1..=(2 * n + 1) {
        out = out * (nu + int(k)).pow(k - 2 * n - 2)?;
    }
    Ok(out)
}

/// `det H_n^(3)(nu)`: `2^(-2n(n+3)) prod_{k=1}^{2n+2} (nu+k)^(k-2n-3)` times
/// `(n+1)(n+2)(n+nu+1)(n+nu+2)(2n^2+6n+3+nu(2n+3)) / 6`.
pub fn det_rayleigh_ell3(nu: &ExactRational, n: usize) -> Result<ExactRational> {
    require_n(n)?;
    check_rayleigh_nu(nu)?;
    let n = n as i64;
    let mut out = pow2(-2 * n * (n + 3));
    for k in 1..=(2 * n + 2) {
        out = out * (nu + int(k)).pow(k - 2 * n - 3)?;
    }
    let bracket = int(2 * n * n + 6 * n + 3) + nu * int(2 * n + 3);
    Ok(out * q(1, 6) * int((n + 1) * (n + 2)) * (nu + int(n + 1)) * (nu + int(n + 2)) * bracket)
}

/// `det H_n^(ell)(nu)` for any `ell` by stepping the Desnanot-Jacobi identity
///
/// `d_{n+1}^(l) d_{n-1}^(l+2) = d_n^(l+2) d_n^(l) - (d_n^(l+1))^2`
///
/// upward in `ell`, seeded by the `ell in {0, 1}` closed forms, `d_0 = 1` and
/// `d_1^(l) = sigma_{2l+2}`. Fails with `DegenerateRecursion` if a divisor
/// `d_n^(l-2)` vanishes.
pub fn det_rayleigh_dj(nu: &ExactRational, ell: u32, n: usize) -> Result<ExactRational> {
    require_n(n)?;
    let mut dj = DjTable { sigma: RayleighTable::new(nu.clone())?, memo: HashMap::new() };
    dj.det(ell, n)
}

struct DjTable {
    sigma: RayleighTable,
    memo: HashMap<(u32, usize), ExactRational>,
}

impl DjTable {
    fn det(&mut self, ell: u32, n: usize) -> Result<ExactRational> {
        if let Some(v) = self.memo.get(&(ell, n)) {
            return Ok(v.clone());
        }
        let value = match (ell, n) {
            (_, 0) => ExactRational::one(),
            (_, 1) => self.sigma.sigma(ell as usize + 1)?,
            (0 | 1, _) => rayleigh_product_formula(self.sigma.nu(), ell, n)?,
            _ => {
                let divisor = self.det(ell - 2, n)?;
                if divisor.is_zero() {
                    return Err(Error::DegenerateRecursion { ell: ell - 2, n: n as u32 });
                }
                let num = self.det(ell - 2, n + 1)? * self.det(ell, n - 1)? + self.det(ell - 1, n)?.square();
                num.checked_div(&divisor)?
            }
        };
        self.memo.insert((ell, n), value.clone());
        Ok(value)
    }
}

/// How to evaluate a Rayleigh Hankel determinant.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum RayleighMethod {
    Direct,
    Closed,
    Dj,
}

impl FromStr for RayleighMethod {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "direct" => Ok(Self::Direct),
            "closed" => Ok(Self::Closed),
            "dj" => Ok(Self::Dj),
            other => Err(Error::InvalidArgument(format!("unknown method {other:?} (expected direct, closed or dj)"))),
        }
    }
}

impl fmt::Display for RayleighMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Direct => "direct",
            Self::Closed => "closed",
            Self::Dj => "dj",
        })
    }
}

/// `det H_n^(ell)(nu)` by the chosen method.
///
/// `Closed` covers `ell <= 3`; `Dj` falls back to the direct determinant when
/// the recursion degenerates.
pub fn det_rayleigh(nu: &ExactRational, ell: u32, n: usize, method: RayleighMethod) -> Result<ExactRational> {
    match method {
        RayleighMethod::Direct => Ok(det_exact(&build_rayleigh_hankel(nu, ell, n)?.matrix)),
        RayleighMethod::Closed => match ell {
            0 | 1 => det_rayleigh_closed(nu, ell, n),
            2 => det_rayleigh_ell2(nu, n),
            3 => det_rayleigh_ell3(nu, n),
            _ => Err(Error::UnsupportedEll(ell)),
        },
        RayleighMethod::Dj => match det_rayleigh_dj(nu, ell, n) {
            Err(Error::DegenerateRecursion { .. }) => det_rayleigh(nu, ell, n, RayleighMethod::Direct),
            other => other,
        },
    }
}

/// Which even-indexed number sequence fills a factorial-normalized Hankel matrix.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum NumberFamily {
    Bernoulli,
    Genocchi,
}

/// `(X_{2m} / (2m)!)` Hankel matrix with `m = i + j + ell + 1` (0-based `i, j`).
fn normalized_number_hankel(family: NumberFamily, ell: u32, n: usize) -> Result<ExactMatrix> {
    require_n(n)?;
    let count = 2 * n + ell as usize - 1;
    let numbers = match family {
        NumberFamily::Bernoulli => bernoulli_even(count)?,
        NumberFamily::Genocchi => genocchi_even(count)?,
    };
    let seq: Vec<ExactRational> = numbers
        .iter()
        .enumerate()
        .skip(ell as usize)
        .map(|(i, x)| x / ExactRational::from_bigint(factorial(2 * (i as u32 + 1))))
        .collect();
    Ok(ExactMatrix::hankel(n, &seq))
}

pub fn bernoulli_hankel_matrix(ell: u32, n: usize) -> Result<ExactMatrix> {
    normalized_number_hankel(NumberFamily::Bernoulli, ell, n)
}

pub fn genocchi_hankel_matrix(ell: u32, n: usize) -> Result<ExactMatrix> {
    normalized_number_hankel(NumberFamily::Genocchi, ell, n)
}

/// `(-1)^(n ell) 2^(-n(4n+4ell-1)) prod_{k=1}^{2n+ell-1} (k+1/2)^(k-2n-ell)`.
pub fn bernoulli_hankel_closed(ell: u32, n: usize) -> Result<ExactRational> {
    if ell > 1 {
        return Err(Error::UnsupportedEll(ell));
    }
    require_n(n)?;
    let (n, ell) = (n as i64, ell as i64);
    let sign = int(if (n * ell) % 2 == 0 { 1 } else { -1 });
    let mut out = sign * pow2(-n * (4 * n + 4 * ell - 1));
    for k in 1..=(2 * n + ell - 1) {
        out = out * q(2 * k + 1, 2).pow(k - 2 * n - ell)?;
    }
    Ok(out)
}

/// `(-1)^(n(ell+1)) 2^(-n(4n+4ell-2)) prod_{k=1}^{2n+ell-1} (k-1/2)^(k-2n-ell)`.
pub fn genocchi_hankel_closed(ell: u32, n: usize) -> Result<ExactRational> {
    if ell > 1 {
        return Err(Error::UnsupportedEll(ell));
    }
    require_n(n)?;
    let (n, ell) = (n as i64, ell as i64);
    let sign = int(if (n * (ell + 1)) % 2 == 0 { 1 } else { -1 });
    let mut out = sign * pow2(-n * (4 * n + 4 * ell - 2));
    for k in 1..=(2 * n + ell - 1) {
        out = out * q(2 * k - 1, 2).pow(k - 2 * n - ell)?;
    }
    Ok(out)
}

fn checked_family_det(family: NumberFamily, ell: u32, n: usize) -> Result<ExactRational> {
    let (closed, identity) = match family {
        NumberFamily::Bernoulli => (bernoulli_hankel_closed(ell, n)?, "bernoulli-hankel"),
        NumberFamily::Genocchi => (genocchi_hankel_closed(ell, n)?, "genocchi-hankel"),
    };
    let direct = det_exact(&normalized_number_hankel(family, ell, n)?);
    if direct != closed {
        return Err(Error::IdentityMismatch { identity, direct: direct.to_string(), closed: closed.to_string() });
    }
    Ok(direct)
}

/// Direct determinant of `(B_{2i+2j+2ell-2} / (2i+2j+2ell-2)!)_{i,j=1}^n`,
/// checked against the closed form.
pub fn bernoulli_hankel_det(ell: u32, n: usize) -> Result<ExactRational> {
    checked_family_det(NumberFamily::Bernoulli, ell, n)
}

/// Genocchi analogue of [`bernoulli_hankel_det`].
pub fn genocchi_hankel_det(ell: u32, n: usize) -> Result<ExactRational> {
    checked_family_det(NumberFamily::Genocchi, ell, n)
}

/// The normalized Bernoulli (Genocchi) matrix is `c D(-1/4) H^(ell)(+-1/2) D(-1/4)`
/// with a constant `c`; returns `det` of that scaled Rayleigh matrix.
fn family_det_via_scaling(family: NumberFamily, ell: u32, n: usize) -> Result<ExactRational> {
    let (nu, c0) = match family {
        // B_2m/(2m)! = -2 (-1/4)^m sigma_2m(1/2)
        NumberFamily::Bernoulli => (q(1, 2), int(-2)),
        // G_2m/(2m)! = 4 (-1/4)^m sigma_2m(-1/2)
        NumberFamily::Genocchi => (q(-1, 2), int(4)),
    };
    let alpha = q(-1, 4);
    let h = build_rayleigh_hankel(&nu, ell, n)?;
    let c = c0 * alpha.pow(ell as i64 - 1)?;
    let scaled = diag_scale(&h.matrix, &alpha)?;
    Ok(c.pow(n as i64)? * det_exact(&scaled))
}

pub fn bernoulli_hankel_det_via_scaling(ell: u32, n: usize) -> Result<ExactRational> {
    family_det_via_scaling(NumberFamily::Bernoulli, ell, n)
}

pub fn genocchi_hankel_det_via_scaling(ell: u32, n: usize) -> Result<ExactRational> {
    family_det_via_scaling(NumberFamily::Genocchi, ell, n)
}

/// Both sides of the parity splitting identities at `L = nu - 1/2`, `eta = 0`:
///
/// `det H_{2n+1} = 2^(2n+1) det H_{n+1}^(0) det H_n^(1)` and
/// `det H_{2n} = 2^(2n) det H_n^(0) det H_n^(1)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ParitySplit {
    pub odd_lhs: ExactRational,
    pub odd_rhs: ExactRational,
    pub even_lhs: ExactRational,
    pub even_rhs: ExactRational,
}

impl ParitySplit {
    pub fn holds(&self) -> bool {
        self.odd_lhs == self.odd_rhs && self.even_lhs == self.even_rhs
    }
}

pub fn parity_split_check(nu: &ExactRational, n: usize) -> Result<ParitySplit> {
    require_n(n)?;
    let mut sigma = RayleighTable::new(nu.clone())?;
    let zeta = ZetaTable::with_kmax(CoulombParams::bessel(nu), 2 * (2 * n + 1))?;
    let coulomb = |m: usize| det_exact(&coulomb_hankel_from_table(&zeta, m).matrix);
    let mut rayleigh = |ell: u32, m: usize| -> Result<ExactRational> {
        Ok(det_exact(&rayleigh_hankel_from_table(&mut sigma, ell, m)?.matrix))
    };
    let h0_next = rayleigh(0, n + 1)?;
    let h0 = rayleigh(0, n)?;
    let h1 = rayleigh(1, n)?;
    let ni = n as i64;
    Ok(ParitySplit {
        odd_lhs: coulomb(2 * n + 1),
        odd_rhs: pow2(2 * ni + 1) * &h0_next * &h1,
        even_lhs: coulomb(2 * n),
        even_rhs: pow2(2 * ni) * h0 * h1,
    })
}
