//! Spectral zeta values of the regular Coulomb wave function.
//!
//! For parameters `(L, eta)` the sums `zeta_L(k)` of the `k`-th negative powers
//! of the zeros of `phi_L(eta, .)` are rational functions of `L` and
//! polynomials in `eta`. They are generated exactly from `zeta_L(2)` by a
//! quadratic convolution recurrence. At `eta = 0`, `L = nu - 1/2` the even
//! values are twice the Rayleigh sums `sigma_2k(nu)` over the Bessel zeros,
//! which in turn give the even Bernoulli and Genocchi numbers at
//! `nu = +-1/2`.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exact::{factorial, ExactRational};

/// Coulomb parameters `(L, eta)`, both exact rationals.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CoulombParams {
    pub l: ExactRational,
    pub eta: ExactRational,
}

impl Serialize for CoulombParams {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut s = serializer.serialize_struct("CoulombParams", 2)?;
        s.serialize_field("L", &self.l)?;
        s.serialize_field("eta", &self.eta)?;
        s.end()
    }
}

/// True when `x` is one of `-1, -3/2, -2, -5/2, ...`.
pub(crate) fn in_negative_half_lattice(x: &ExactRational) -> bool {
    let two_x = x * ExactRational::from_integer(2);
    two_x.is_integer() && two_x <= ExactRational::from_integer(-2)
}

/// True when `x` is one of `-3/2, -5/2, ...`.
pub(crate) fn in_negative_half_odd(x: &ExactRational) -> bool {
    let shifted = x + ExactRational::new(1, 2);
    shifted.is_integer() && shifted <= ExactRational::from_integer(-1)
}

/// True when `x` is a negative integer.
pub(crate) fn is_negative_integer(x: &ExactRational) -> bool {
    x.is_integer() && x.is_negative()
}

/// `1 + eta^2 / x^2`, taken as exactly 1 when `eta = 0` (so `x` may vanish there).
pub(crate) fn eta_factor(eta: &ExactRational, x: &ExactRational) -> Result<ExactRational> {
    if eta.is_zero() {
        return Ok(ExactRational::one());
    }
    if x.is_zero() {
        return Err(Error::SingularParameter(format!("factor 1 + eta^2/x^2 has x = 0 with eta = {eta}")));
    }
    Ok(ExactRational::one() + eta.square().checked_div(&x.square())?)
}

impl CoulombParams {
    pub fn new(l: ExactRational, eta: ExactRational) -> Self {
        Self { l, eta }
    }

    /// Bessel specialisation `L = nu - 1/2`, `eta = 0`.
    pub fn bessel(nu: &ExactRational) -> Self {
        Self::new(nu - ExactRational::new(1, 2), ExactRational::zero())
    }

    pub fn is_bessel(&self) -> bool {
        self.eta.is_zero()
    }

    /// `L` avoids the singular set `-(N+1)/2 = {-1, -3/2, -2, ...}`.
    pub fn valid_general(&self) -> bool {
        !in_negative_half_lattice(&self.l)
    }

    /// `eta = 0` branch: only `L in {-3/2, -5/2, ...}` is excluded; negative
    /// integers are allowed.
    pub fn valid_bessel(&self) -> bool {
        self.is_bessel() && !in_negative_half_odd(&self.l)
    }

    /// Validity gate for the zeta recurrence: `valid_bessel` at `eta = 0`,
    /// `valid_general` otherwise.
    pub fn check(&self) -> Result<()> {
        if self.is_bessel() {
            if self.valid_bessel() {
                Ok(())
            } else {
                Err(Error::SingularParameter(format!("L = {} on excluded set -N-1/2 (eta = 0)", self.l)))
            }
        } else if self.valid_general() {
            Ok(())
        } else {
            Err(Error::SingularParameter(format!("L = {} on excluded set -(N+1)/2", self.l)))
        }
    }
}

/// `zeta_L(2) = (1 + eta^2/(L+1)^2) / (2L+3)`.
pub fn zeta_base(params: &CoulombParams) -> Result<ExactRational> {
    params.check()?;
    let two = ExactRational::from_integer(2);
    let denom = &two * &params.l + ExactRational::from_integer(3);
    if denom.is_zero() {
        return Err(Error::SingularParameter("2L + 3 = 0".into()));
    }
    let factor = eta_factor(&params.eta, &(&params.l + ExactRational::one()))?;
    Ok(factor.checked_div(&denom)?)
}

/// Memoized `zeta_L(2), ..., zeta_L(K)` for fixed parameters.
///
/// The table only grows; earlier entries are never recomputed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZetaTable {
    params: CoulombParams,
    // values[i] = zeta_L(i + 2)
    values: Vec<ExactRational>,
}

impl ZetaTable {
    pub fn new(params: CoulombParams) -> Result<Self> {
        let base = zeta_base(&params)?;
        Ok(Self { params, values: vec![base] })
    }

    pub fn with_kmax(params: CoulombParams, kmax: usize) -> Result<Self> {
        let mut table = Self::new(params)?;
        table.extend_to(kmax)?;
        Ok(table)
    }

    pub fn params(&self) -> &CoulombParams {
        &self.params
    }

    /// Largest `k` currently stored.
    pub fn kmax(&self) -> usize {
        self.values.len() + 1
    }

    /// `zeta_L(k)` for `2 <= k <= kmax`.
    pub fn get(&self, k: usize) -> Option<&ExactRational> {
        k.checked_sub(2).and_then(|i| self.values.get(i))
    }

    /// `(k, zeta_L(k))` pairs for all stored `k`.
    pub fn iter(&self) -> impl Iterator<Item = (usize, &ExactRational)> {
        self.values.iter().enumerate().map(|(i, v)| (i + 2, v))
    }

    /// Slice `zeta_L(2), ..., zeta_L(kmax)`.
    pub fn values(&self) -> &[ExactRational] {
        &self.values
    }

    /// Extends the table through `zeta_L(kmax)`.
    ///
    /// `zeta_L(k+1) = (2 eta/(L+1) zeta_L(k) + sum_{l=1}^{k-2} zeta_L(l+1) zeta_L(k-l)) / (2L+k+2)`.
    /// At `eta = 0` odd-index values vanish identically and are set directly,
    /// which also covers negative integer `L` where `2L+k+2` can vanish at an
    /// odd index.
    pub fn extend_to(&mut self, kmax: usize) -> Result<()> {
        let bessel = self.params.is_bessel();
        let two = ExactRational::from_integer(2);
        let drift = if bessel {
            ExactRational::zero()
        } else {
            (&two * &self.params.eta).checked_div(&(&self.params.l + ExactRational::one()))?
        };
        while self.kmax() < kmax {
            let k = self.kmax();
            let next = k + 1;
            if bessel && next % 2 == 1 {
                self.values.push(ExactRational::zero());
                continue;
            }
            let denom = &two * &self.params.l + ExactRational::from_integer(k as i64 + 2);
            if denom.is_zero() {
                return Err(Error::SingularParameter(format!("2L + {} = 0 in zeta recurrence at k = {k}", k + 2)));
            }
            let z = |j: usize| &self.values[j - 2];
            let mut acc = &drift * z(k);
            for l in 1..=k.saturating_sub(2) {
                acc = acc + z(l + 1) * z(k - l);
            }
            self.values.push(acc.checked_div(&denom)?);
        }
        Ok(())
    }

    /// By-value form of [`extend_to`](Self::extend_to).
    pub fn extended(mut self, kmax: usize) -> Result<Self> {
        self.extend_to(kmax)?;
        Ok(self)
    }
}

/// Rayleigh sums `sigma_2k(nu)` backed by a zeta table at `L = nu - 1/2`, `eta = 0`.
#[derive(Clone, Debug)]
pub struct RayleighTable {
    nu: ExactRational,
    zeta: ZetaTable,
}

fn check_nu(nu: &ExactRational) -> Result<()> {
    if is_negative_integer(nu) {
        return Err(Error::SingularParameter(format!("nu = {nu} is a negative integer")));
    }
    Ok(())
}

impl RayleighTable {
    pub fn new(nu: ExactRational) -> Result<Self> {
        check_nu(&nu)?;
        let zeta = ZetaTable::new(CoulombParams::bessel(&nu))?;
        Ok(Self { nu, zeta })
    }

    pub fn nu(&self) -> &ExactRational {
        &self.nu
    }

    /// `sigma_2k(nu)` for `k >= 1`, extending the table on demand.
    pub fn sigma(&mut self, k: usize) -> Result<ExactRational> {
        if k == 0 {
            return Err(Error::InvalidArgument("Rayleigh order k must be >= 1".into()));
        }
        self.zeta.extend_to(2 * k)?;
        Ok(self.zeta.get(2 * k).expect("extended") / ExactRational::from_integer(2))
    }

    /// `sigma_2, sigma_4, ..., sigma_2kmax`.
    pub fn sigmas(&mut self, kmax: usize) -> Result<Vec<ExactRational>> {
        (1..=kmax).map(|k| self.sigma(k)).collect()
    }
}

/// `sigma_2k(nu) = zeta_{nu-1/2}(2k) / 2`.
pub fn rayleigh(nu: &ExactRational, k: usize) -> Result<ExactRational> {
    RayleighTable::new(nu.clone())?.sigma(k)
}

fn pow2(e: i64) -> ExactRational {
    ExactRational::from_integer(2).pow(e).expect("nonzero base")
}

fn sign(odd: bool) -> ExactRational {
    ExactRational::from_integer(if odd { -1 } else { 1 })
}

fn bernoulli_from_sigma(n: usize, sigma: &ExactRational) -> ExactRational {
    let n_i = n as i64;
    sign(n.is_multiple_of(2)) * ExactRational::from_bigint(factorial(2 * n as u32)) * pow2(1 - 2 * n_i) * sigma
}

fn genocchi_from_bernoulli(n: usize, b: &ExactRational) -> ExactRational {
    let two_pow: BigInt = BigInt::one() << (2 * n);
    ExactRational::from_integer(2) * ExactRational::from_bigint(BigInt::one() - two_pow) * b
}

/// `B_2, B_4, ..., B_2nmax` from `sigma_2n(1/2)`.
pub fn bernoulli_even(nmax: usize) -> Result<Vec<ExactRational>> {
    let mut table = RayleighTable::new(ExactRational::new(1, 2))?;
    let sigmas = table.sigmas(nmax)?;
    Ok(sigmas.iter().enumerate().map(|(i, s)| bernoulli_from_sigma(i + 1, s)).collect())
}

/// `B_2n` for `n >= 1`, via `B_2n = (-1)^(n+1) (2n)! 2^(1-2n) sigma_2n(1/2)`.
pub fn bernoulli(n: usize) -> Result<ExactRational> {
    if n == 0 {
        return Err(Error::InvalidArgument("bernoulli index n must be >= 1".into()));
    }
    Ok(bernoulli_even(n)?.pop().expect("n >= 1"))
}

/// `G_2, ..., G_2nmax` via `G_2n = 2 (1 - 2^(2n)) B_2n`.
pub fn genocchi_even(nmax: usize) -> Result<Vec<ExactRational>> {
    Ok(bernoulli_even(nmax)?.iter().enumerate().map(|(i, b)| genocchi_from_bernoulli(i + 1, b)).collect())
}

/// `G_2n` for `n >= 1`.
pub fn genocchi(n: usize) -> Result<ExactRational> {
    if n == 0 {
        return Err(Error::InvalidArgument("genocchi index n must be >= 1".into()));
    }
    Ok(genocchi_even(n)?.pop().expect("n >= 1"))
}

/// `G_2, ..., G_2nmax` through the second route
/// `G_2n = (-1)^n (2n)! 2^(2-2n) sigma_2n(-1/2)`.
pub fn genocchi_even_via_rayleigh(nmax: usize) -> Result<Vec<ExactRational>> {
    let mut table = RayleighTable::new(ExactRational::new(-1, 2))?;
    let sigmas = table.sigmas(nmax)?;
    Ok(sigmas
        .iter()
        .enumerate()
        .map(|(i, s)| {
            let n = i + 1;
            sign(n % 2 == 1) * ExactRational::from_bigint(factorial(2 * n as u32)) * pow2(2 - 2 * n as i64) * s
        })
        .collect())
}

/// `floor(x)` as an `i64`, for the small parameters used by the classifier.
pub(crate) fn floor_i64(x: &ExactRational) -> i64 {
    let f = x.floor();
    f.to_i64().unwrap_or(if f.is_negative() { i64::MIN } else { i64::MAX })
}
