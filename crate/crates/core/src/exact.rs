//! Exact rational scalars and fraction-free determinants.
//!
//! Every value produced by the exact layer (zeta values, Rayleigh sums,
//! recurrence coefficients, determinants) is an [`ExactRational`]. Matrices
//! are immutable; operations return fresh values.

use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Pow, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ExactError {
    #[error("malformed rational {0:?}: expected \"p/q\" or an integer")]
    Parse(String),
    #[error("zero denominator in {0:?}")]
    ZeroDenominator(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("scaling factor must be nonzero")]
    ZeroScale,
    #[error("matrix must be square with dimension >= 1 (got {rows} rows, row lengths {cols:?})")]
    NotSquare { rows: usize, cols: Vec<usize> },
}

/// Arbitrary-precision rational, always stored in lowest terms with a
/// positive denominator.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct ExactRational(BigRational);

impl ExactRational {
    pub fn zero() -> Self {
        Self(BigRational::zero())
    }

    pub fn one() -> Self {
        Self(BigRational::one())
    }

    pub fn from_integer(n: i64) -> Self {
        Self(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_bigint(n: BigInt) -> Self {
        Self(BigRational::from_integer(n))
    }

    /// `p/q`, reduced. Panics when `q == 0`.
    pub fn new(p: i64, q: i64) -> Self {
        assert!(q != 0, "zero denominator");
        Self(BigRational::new(BigInt::from(p), BigInt::from(q)))
    }

    pub fn from_big(p: BigInt, q: BigInt) -> Result<Self, ExactError> {
        if q.is_zero() {
            return Err(ExactError::ZeroDenominator(format!("{p}/{q}")));
        }
        Ok(Self(BigRational::new(p, q)))
    }

    /// Exact value of a finite double (every finite `f64` is a dyadic rational).
    pub fn from_f64(x: f64) -> Option<Self> {
        BigRational::from_float(x).map(Self)
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    /// -1, 0 or 1.
    pub fn signum(&self) -> i8 {
        match self.0.numer().sign() {
            Sign::Minus => -1,
            Sign::NoSign => 0,
            Sign::Plus => 1,
        }
    }

    pub fn abs(&self) -> Self {
        Self(self.0.abs())
    }

    pub fn recip(&self) -> Result<Self, ExactError> {
        if self.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        Ok(Self(self.0.recip()))
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self, ExactError> {
        if rhs.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        Ok(Self(&self.0 / &rhs.0))
    }

    /// Integer power; negative exponents require a nonzero base.
    pub fn pow(&self, exp: i64) -> Result<Self, ExactError> {
        if exp < 0 && self.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        Ok(Self(Pow::pow(&self.0, exp)))
    }

    pub fn floor(&self) -> BigInt {
        self.0.floor().to_integer()
    }

    pub fn ceil(&self) -> BigInt {
        self.0.ceil().to_integer()
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }

    pub fn square(&self) -> Self {
        Self(&self.0 * &self.0)
    }

    pub fn as_big_rational(&self) -> &BigRational {
        &self.0
    }
}

/// `n!` as an exact integer.
pub fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

impl From<i64> for ExactRational {
    fn from(n: i64) -> Self {
        Self::from_integer(n)
    }
}

impl From<BigRational> for ExactRational {
    fn from(r: BigRational) -> Self {
        Self(r)
    }
}

impl From<BigInt> for ExactRational {
    fn from(n: BigInt) -> Self {
        Self::from_bigint(n)
    }
}

impl fmt::Display for ExactRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for ExactRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn parse_int(s: &str) -> Option<BigInt> {
    let digits = s.strip_prefix(['-', '+']).unwrap_or(s);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    s.parse().ok()
}

/// Accepts `p/q` or `p` with optional sign. Decimal notation is rejected so
/// that exact inputs are never silently rounded.
impl FromStr for ExactRational {
    type Err = ExactError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        let bad = || ExactError::Parse(s.to_string());
        match t.split_once('/') {
            None => parse_int(t).map(Self::from_bigint).ok_or_else(bad),
            Some((p, q)) => {
                let p = parse_int(p.trim()).ok_or_else(bad)?;
                let q = parse_int(q.trim()).ok_or_else(bad)?;
                Self::from_big(p, q)
            }
        }
    }
}

impl Serialize for ExactRational {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for ExactRational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<&ExactRational> for &ExactRational {
            type Output = ExactRational;
            fn $method(self, rhs: &ExactRational) -> ExactRational {
                ExactRational($trait::$method(&self.0, &rhs.0))
            }
        }
        impl $trait<ExactRational> for ExactRational {
            type Output = ExactRational;
            fn $method(self, rhs: ExactRational) -> ExactRational {
                ExactRational($trait::$method(self.0, rhs.0))
            }
        }
        impl $trait<&ExactRational> for ExactRational {
            type Output = ExactRational;
            fn $method(self, rhs: &ExactRational) -> ExactRational {
                ExactRational($trait::$method(self.0, &rhs.0))
            }
        }
        impl $trait<ExactRational> for &ExactRational {
            type Output = ExactRational;
            fn $method(self, rhs: ExactRational) -> ExactRational {
                ExactRational($trait::$method(&self.0, rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
// Panics on a zero divisor, like the underlying BigRational; use
// `checked_div` where the divisor may vanish.
forward_binop!(Div, div);

impl Neg for ExactRational {
    type Output = ExactRational;
    fn neg(self) -> ExactRational {
        ExactRational(-self.0)
    }
}

impl Neg for &ExactRational {
    type Output = ExactRational;
    fn neg(self) -> ExactRational {
        ExactRational(-&self.0)
    }
}

impl Sum for ExactRational {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |a, b| a + b)
    }
}

impl Product for ExactRational {
    fn product<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::one(), |a, b| a * b)
    }
}

impl<'a> Product<&'a ExactRational> for ExactRational {
    fn product<I: Iterator<Item = &'a Self>>(iter: I) -> Self {
        iter.fold(Self::one(), |a, b| a * b)
    }
}

/// Square matrix of exact rationals, row-major.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ExactMatrix {
    dim: usize,
    entries: Vec<ExactRational>,
}

impl ExactMatrix {
    pub fn from_rows(rows: Vec<Vec<ExactRational>>) -> Result<Self, ExactError> {
        let dim = rows.len();
        if dim == 0 || rows.iter().any(|r| r.len() != dim) {
            return Err(ExactError::NotSquare { rows: dim, cols: rows.iter().map(Vec::len).collect() });
        }
        Ok(Self { dim, entries: rows.into_iter().flatten().collect() })
    }

    /// Builds an `n x n` matrix from `f(i, j)`. Panics if `n == 0`.
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> ExactRational) -> Self {
        assert!(n >= 1, "matrix dimension must be >= 1");
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                entries.push(f(i, j));
            }
        }
        Self { dim: n, entries }
    }

    /// Hankel matrix with entry `(i, j) = seq[i + j]`; needs `seq.len() >= 2n - 1`.
    pub fn hankel(n: usize, seq: &[ExactRational]) -> Self {
        assert!(seq.len() + 1 >= 2 * n, "sequence too short for a {n}x{n} Hankel matrix");
        Self::from_fn(n, |i, j| seq[i + j].clone())
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, |i, j| if i == j { ExactRational::one() } else { ExactRational::zero() })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &ExactRational {
        &self.entries[i * self.dim + j]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[ExactRational]> {
        self.entries.chunks(self.dim)
    }

    pub fn is_hankel(&self) -> bool {
        (0..self.dim - 1).all(|i| (1..self.dim).all(|j| self.get(i, j) == self.get(i + 1, j - 1)))
    }
}

/// Exact determinant by fraction-free (Bareiss) elimination.
///
/// Each row is first multiplied by the lcm of its denominators, which turns
/// the matrix into an integer one; Bareiss then keeps every intermediate
/// value an exact integer minor. The result is divided back by the product of
/// the row scales.
pub fn det_exact(m: &ExactMatrix) -> ExactRational {
    let n = m.dim();
    let mut scale = BigInt::one();
    let mut a: Vec<Vec<BigInt>> = m
        .rows()
        .map(|row| {
            let l = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            scale *= &l;
            row.iter().map(|x| x.numer() * (&l / x.denom())).collect()
        })
        .collect();

    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    negate = !negate;
                }
                None => return ExactRational::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                // Sylvester's identity guarantees exact division.
                a[i][j] = v / &prev;
            }
            a[i][k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }

    let det = if negate { -prev } else { prev };
    ExactRational(BigRational::new(det, scale))
}

/// `D(alpha) * m * D(alpha)` with `D(alpha) = diag(alpha, alpha^2, ..., alpha^n)`.
///
/// For Hankel matrices this rescales the moment sequence: `h_k -> alpha^(k+2) h_k`
/// in 0-based indexing. The determinant picks up a factor `alpha^(n(n+1))`.
pub fn diag_scale(m: &ExactMatrix, alpha: &ExactRational) -> Result<ExactMatrix, ExactError> {
    if alpha.is_zero() {
        return Err(ExactError::ZeroScale);
    }
    let n = m.dim();
    let powers: Vec<ExactRational> = (1..=n as i64).map(|k| alpha.pow(k).expect("nonzero base")).collect();
    Ok(ExactMatrix::from_fn(n, |i, j| m.get(i, j) * &powers[i] * &powers[j]))
}
