//! Counting complex zeros of `F_L(eta, .)` from signs of Hankel determinants.
//!
//! Indexing follows the sign-counting criterion for real entire functions of
//! order one: `D_{-1} := 1` and `D_n := det H_{n+1}(L, eta)` for `n >= 0`, so
//! `D_0 = zeta_L(2)`. The number of negative terms in `{D_{n-1} D_n}_{n >= 0}`
//! equals the number of complex-conjugate zero pairs.
//!
//! Signs are read from the closed product for `D_{n-1} D_n`; determinants are
//! never expanded here.

use num_traits::ToPrimitive;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::ExactRational;
use crate::zeta::{
    eta_factor, floor_i64, in_negative_half_lattice, in_negative_half_odd, is_negative_integer, CoulombParams,
};

fn int(n: i64) -> ExactRational {
    ExactRational::from_integer(n)
}

/// Closed product for `D_{n-1} D_n`:
///
/// `(1 + eta^2/(L+n+1)^2) / (2L+2n+3) * prod_{k=0}^{n-1} (1 + eta^2/(L+n-k)^2)^(2k+3) / (2L+2n-2k+1)^(4k+4)`.
///
/// At `eta = 0` every `eta` factor is 1, which is the Bessel form and stays
/// valid for negative integer `L`. `n = 0` gives `D_{-1} D_0 = zeta_L(2)`.
pub fn dd_product_closed(params: &CoulombParams, n: usize) -> Result<ExactRational> {
    params.check()?;
    let l = &params.l;
    let n = n as i64;
    let lead = int(2) * l + int(2 * n + 3);
    if lead.is_zero() {
        return Err(Error::SingularParameter(format!("2L + {} = 0", 2 * n + 3)));
    }
    let mut out = eta_factor(&params.eta, &(l + int(n + 1)))?.checked_div(&lead)?;
    for k in 0..n {
        let lin = int(2) * l + int(2 * n - 2 * k + 1);
        if lin.is_zero() {
            return Err(Error::SingularParameter(format!("2L + {} = 0", 2 * n - 2 * k + 1)));
        }
        let factor = eta_factor(&params.eta, &(l + int(n - k)))?;
        out = out * factor.pow(2 * k + 3)? * lin.pow(-(4 * k + 4))?;
    }
    Ok(out)
}

/// Sign of `D_{n-1} D_n` at one index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct DdSign {
    pub n: usize,
    pub sign: i8,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ZeroClassification {
    pub params: CoulombParams,
    /// Number of complex-conjugate zero pairs, `m`.
    pub pair_count: usize,
    /// Signs of `D_{n-1} D_n` for `n = 0..=nmax`.
    pub sign_sequence: Vec<DdSign>,
    pub all_real: bool,
    pub nmax: usize,
    /// `floor(-L - 1/2)` for `L < -3/2`, else 0.
    pub predicted_pairs: usize,
}

/// Rejects parameters outside the classifier's domain.
///
/// `eta != 0`: `L` must avoid `-(N+1)/2`. `eta = 0`: `L` must avoid `-N-1/2`.
pub fn check_classifiable(params: &CoulombParams) -> Result<()> {
    if params.is_bessel() {
        if in_negative_half_odd(&params.l) {
            return Err(Error::ExcludedParameter(format!("L = {} on excluded set -N-1/2 (eta = 0)", params.l)));
        }
    } else if in_negative_half_lattice(&params.l) {
        return Err(Error::ExcludedParameter(format!("L = {} on excluded set -(N+1)/2", params.l)));
    }
    Ok(())
}

/// `floor(-L - 1/2)` when `L < -3/2`, otherwise 0.
pub fn predicted_pair_count(l: &ExactRational) -> usize {
    if *l < ExactRational::new(-3, 2) {
        floor_i64(&(-l - ExactRational::new(1, 2))).max(0) as usize
    } else {
        0
    }
}

/// Default sweep length: `max(ceil(-L) + 2, 3)`.
///
/// Negative terms only occur for `n < -L - 3/2`, so this leaves a margin of at
/// least two indices past the last one.
pub fn auto_nmax(l: &ExactRational) -> usize {
    let c = (-l).ceil().to_i64().unwrap_or(i64::MAX);
    (c.saturating_add(2)).max(3) as usize
}

/// Counts complex zero pairs of `F_L(eta, .)` from the signs of `D_{n-1} D_n`,
/// `n = 0..=nmax` (`None` selects [`auto_nmax`]).
///
/// When the sweep reaches a positive `2L + 2 nmax + 3`, every later term is
/// positive too, and the count is checked against `floor(-L - 1/2)`.
pub fn classify(params: &CoulombParams, nmax: Option<usize>) -> Result<ZeroClassification> {
    check_classifiable(params)?;
    let auto = nmax.is_none();
    let nmax = nmax.unwrap_or_else(|| auto_nmax(&params.l));
    let sign_sequence = (0..=nmax)
        .map(|n| Ok(DdSign { n, sign: dd_product_closed(params, n)?.signum() }))
        .collect::<Result<Vec<_>>>()?;
    let pair_count = sign_sequence.iter().filter(|s| s.sign < 0).count();
    let predicted_pairs = predicted_pair_count(&params.l);

    let tail_positive = (int(2) * &params.l + int(2 * nmax as i64 + 3)).is_positive();
    if auto && !tail_positive {
        return Err(Error::InvalidArgument(format!("automatic nmax = {nmax} does not clear the last negative index")));
    }
    if tail_positive && pair_count != predicted_pairs {
        return Err(Error::IdentityMismatch {
            identity: "pair-count",
            direct: pair_count.to_string(),
            closed: predicted_pairs.to_string(),
        });
    }
    Ok(ZeroClassification {
        params: params.clone(),
        pair_count,
        all_real: pair_count == 0,
        sign_sequence,
        nmax,
        predicted_pairs,
    })
}

/// Complex zero count of `J_nu`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct HurwitzCounts {
    pub complex_zeros: usize,
    /// Whether one of the complex pairs lies on the imaginary axis. Read off
    /// the classical trichotomy, not computed.
    pub imaginary_pair: bool,
}

/// Complex zero count of `J_nu` for real rational `nu`, cross-checked
/// against `2 m` from [`classify`] at `L = nu - 1/2`, `eta = 0`.
///
/// * `nu > -1`: no complex zeros.
/// * `-2s-2 < nu < -2s-1`: `4s+2` complex zeros, two of them purely imaginary.
/// * `-2s-1 < nu < -2s`, `s >= 1`: `4s` complex zeros, none purely imaginary.
pub fn hurwitz_counts(nu: &ExactRational) -> Result<HurwitzCounts> {
    if is_negative_integer(nu) {
        return Err(Error::BoundaryParameter(format!("nu = {nu} is a negative integer")));
    }
    let counts = if *nu > int(-1) {
        HurwitzCounts { complex_zeros: 0, imaginary_pair: false }
    } else {
        let f = floor_i64(nu);
        HurwitzCounts { complex_zeros: (-2 * f - 2) as usize, imaginary_pair: f % 2 == 0 }
    };
    let c = classify(&CoulombParams::bessel(nu), None)?;
    if 2 * c.pair_count != counts.complex_zeros {
        return Err(Error::IdentityMismatch {
            identity: "hurwitz",
            direct: (2 * c.pair_count).to_string(),
            closed: counts.complex_zeros.to_string(),
        });
    }
    Ok(counts)
}
