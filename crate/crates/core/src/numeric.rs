//! Floating-point evaluation of `phi_L(eta, rho)` and localization of its zeros.
//!
//! `phi_L(eta, rho) = e^{-i rho} 1F1(L+1-i eta; 2L+2; 2i rho)` is entire with
//! real Taylor coefficients for real `(L, eta)`. Substituting
//! `u = rho^{L+1} phi` into the Coulomb equation gives
//!
//! `rho phi'' + 2(L+1) phi' + (rho - 2 eta) phi = 0`,
//!
//! so the coefficients obey `c_0 = 1`,
//! `c_{m+1} = (2 eta c_m - c_{m-1}) / ((m+1)(m+2L+2))`.
//! [`CoulombPhi`] sums that real series. The direct confluent series at
//! `2i rho` ([`hyp1f1`], [`phi_kummer`]) is kept as an independent route; it
//! cancels roughly twice as many digits on the real axis.
//!
//! Contour points are rejected with [`NumericError::PrecisionLoss`] when the
//! estimated rounding error reaches `|phi|`. In double precision the default
//! search region then works for `L > -43/4` with `|eta| <= 3`; more negative
//! `L` needs a larger radius and fails with that error instead of a wrong count.

use std::cmp::Ordering;
use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum NumericError {
    #[error("confluent series undefined: b = 2L + 2 = {0} is a non-positive integer")]
    SingularB(f64),
    #[error("series did not reach tolerance within {0} terms")]
    NoConvergence(usize),
    #[error("rounding error at {re} + {im}i is comparable to |phi|; the winding number is not reliable there")]
    PrecisionLoss { re: f64, im: f64 },
    #[error("contour passes too close to a zero near {re} + {im}i")]
    ContourTooClose { re: f64, im: f64 },
    #[error("Newton iteration diverged from {re} + {im}i")]
    NewtonDiverged { re: f64, im: f64 },
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, NumericError>;

pub const MAX_SERIES_TERMS: usize = 500;
/// Zeros with `|re|` below this after refinement are flagged purely imaginary.
pub const IMAGINARY_THRESHOLD: f64 = 1e-7;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ComplexPoint {
    pub re: f64,
    pub im: f64,
}

impl ComplexPoint {
    pub fn new(re: f64, im: f64) -> Self {
        Self { re, im }
    }

    pub fn conj(self) -> Self {
        Self::new(self.re, -self.im)
    }

    pub fn abs(self) -> f64 {
        Complex64::from(self).norm()
    }
}

impl From<Complex64> for ComplexPoint {
    fn from(z: Complex64) -> Self {
        Self::new(z.re, z.im)
    }
}

impl From<ComplexPoint> for Complex64 {
    fn from(p: ComplexPoint) -> Self {
        Complex64::new(p.re, p.im)
    }
}

/// Axis-aligned rectangle `[re_min, re_max] x [im_min, im_max]`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Rect {
    pub re_min: f64,
    pub re_max: f64,
    pub im_min: f64,
    pub im_max: f64,
}

impl Rect {
    pub fn new(re_min: f64, re_max: f64, im_min: f64, im_max: f64) -> Self {
        Self { re_min, re_max, im_min, im_max }
    }

    fn validate(&self) -> Result<()> {
        let finite = [self.re_min, self.re_max, self.im_min, self.im_max].iter().all(|v| v.is_finite());
        if !finite || self.re_min >= self.re_max || self.im_min >= self.im_max {
            return Err(NumericError::InvalidInput(format!("degenerate rectangle {self:?}")));
        }
        Ok(())
    }

    fn width(&self) -> f64 {
        self.re_max - self.re_min
    }

    fn height(&self) -> f64 {
        self.im_max - self.im_min
    }

    fn center(&self) -> Complex64 {
        Complex64::new(0.5 * (self.re_min + self.re_max), 0.5 * (self.im_min + self.im_max))
    }

    fn contains(&self, z: Complex64, slack: f64) -> bool {
        z.re >= self.re_min - slack
            && z.re <= self.re_max + slack
            && z.im >= self.im_min - slack
            && z.im <= self.im_max + slack
    }

    fn corners(&self) -> [Complex64; 4] {
        [
            Complex64::new(self.re_min, self.im_min),
            Complex64::new(self.re_max, self.im_min),
            Complex64::new(self.re_max, self.im_max),
            Complex64::new(self.re_min, self.im_max),
        ]
    }

    fn split(&self, frac: f64) -> (Rect, Rect) {
        if self.width() >= self.height() {
            let x = self.re_min + frac * self.width();
            (Rect::new(self.re_min, x, self.im_min, self.im_max), Rect::new(x, self.re_max, self.im_min, self.im_max))
        } else {
            let y = self.im_min + frac * self.height();
            (Rect::new(self.re_min, self.re_max, self.im_min, y), Rect::new(self.re_min, self.re_max, y, self.im_max))
        }
    }

    /// Moves every edge outward by `frac` times the larger side. A lower edge
    /// above the real axis moves in proportion to its height instead, so it
    /// never crosses the axis.
    fn grown(&self, frac: f64) -> Rect {
        let d = frac * self.width().max(self.height());
        let im_min = if self.im_min > 0.0 { self.im_min * (1.0 - 100.0 * frac) } else { self.im_min - d };
        Rect::new(self.re_min - d, self.re_max + d, im_min, self.im_max + d)
    }
}

/// `1F1(a; b; z) = sum (a)_k / (b)_k z^k / k!`, summed until a rigorous tail
/// bound drops below `tol * (1 + |sum|)`.
pub fn hyp1f1(a: Complex64, b: Complex64, z: Complex64, tol: f64) -> Result<Complex64> {
    if b.im == 0.0 && b.re <= 0.0 && b.re.fract() == 0.0 {
        return Err(NumericError::SingularB(b.re));
    }
    let a_bound = a.norm().max(1.0);
    let b_abs = b.norm();
    let z_abs = z.norm();
    let mut term = Complex64::new(1.0, 0.0);
    let mut sum = term;
    for k in 0..MAX_SERIES_TERMS {
        let kf = k as f64;
        term = term * (a + kf) / (b + kf) * z / (kf + 1.0);
        sum += term;
        // for j > |b| the term ratio is at most (max(|a|,1)+j)|z|/((j-|b|)(j+1)),
        // which decreases in j
        let j = kf + 1.0;
        if j > b_abs {
            let r = (a_bound + j) * z_abs / ((j - b_abs) * (j + 1.0));
            if r < 1.0 && term.norm() * r / (1.0 - r) <= tol * (1.0 + sum.norm()) {
                return Ok(sum);
            }
        }
    }
    Err(NumericError::NoConvergence(MAX_SERIES_TERMS))
}

/// `phi_L(eta, rho)` through the confluent series at `2i rho`.
pub fn phi_kummer(l: f64, eta: f64, rho: ComplexPoint, tol: f64) -> Result<ComplexPoint> {
    let rho = Complex64::from(rho);
    let a = Complex64::new(l + 1.0, -eta);
    let b = Complex64::new(2.0 * l + 2.0, 0.0);
    let m = hyp1f1(a, b, Complex64::new(0.0, 2.0) * rho, tol)?;
    Ok(((Complex64::new(0.0, -1.0) * rho).exp() * m).into())
}

/// `phi_L(eta, .)` for fixed real parameters, evaluated from its real Taylor series.
#[derive(Clone, Copy, Debug)]
pub struct CoulombPhi {
    l: f64,
    eta: f64,
    tol: f64,
}

impl CoulombPhi {
    /// Fails with `SingularB` when `2L+2` is a non-positive integer, except at
    /// `eta = 0` where only `L in {-3/2, -5/2, ...}` is singular (the Bessel
    /// reading `Gamma(nu+1) (2/rho)^nu J_nu(rho)`, `nu = L + 1/2`).
    pub fn new(l: f64, eta: f64, tol: f64) -> Result<Self> {
        if !(l.is_finite() && eta.is_finite()) {
            return Err(NumericError::InvalidInput("non-finite parameters".into()));
        }
        if !(tol > 0.0 && tol.is_finite()) {
            return Err(NumericError::InvalidInput(format!("tolerance must be positive, got {tol}")));
        }
        let b = 2.0 * l + 2.0;
        if b <= 0.0 && b.fract() == 0.0 {
            // at eta = 0 the even coefficients only see m + 2L + 2 at odd m
            let bessel_ok = eta == 0.0 && (b as i64) % 2 == 0;
            if !bessel_ok {
                return Err(NumericError::SingularB(b));
            }
        }
        Ok(Self { l, eta, tol })
    }

    pub fn l(&self) -> f64 {
        self.l
    }

    pub fn eta(&self) -> f64 {
        self.eta
    }

    pub fn tol(&self) -> f64 {
        self.tol
    }

    pub fn value(&self, rho: Complex64) -> Result<Complex64> {
        self.eval(rho).map(|(v, _)| v)
    }

    /// `(phi(rho), phi'(rho))`, both from the same power series.
    pub fn eval(&self, rho: Complex64) -> Result<(Complex64, Complex64)> {
        self.series(rho).map(|(v, dv, _)| (v, dv))
    }

    /// `phi(rho)` with an estimate of the floating-point rounding error in it.
    /// Term `m` carries a relative error of about `m` ulps from the recurrence.
    pub fn value_with_error(&self, rho: Complex64) -> Result<(Complex64, f64)> {
        self.series(rho).map(|(v, _, err)| (v, err))
    }

    fn series(&self, rho: Complex64) -> Result<(Complex64, Complex64, f64)> {
        let c1 = if self.eta == 0.0 { 0.0 } else { self.eta / (self.l + 1.0) };
        if rho == Complex64::new(0.0, 0.0) {
            return Ok((Complex64::new(1.0, 0.0), Complex64::new(c1, 0.0), 0.0));
        }
        let r = rho.norm();
        let two_eta_rho = 2.0 * self.eta * rho;
        let rho2 = rho * rho;
        let growth = 2.0 * self.eta.abs() * r + r * r;
        let shift = 2.0 * self.l + 2.0;

        // t_m = c_m rho^m
        let mut prev = Complex64::new(0.0, 0.0);
        let mut cur = Complex64::new(1.0, 0.0);
        let mut sum = cur;
        let mut abs_sum = 1.0;
        let mut dsum = Complex64::new(0.0, 0.0);
        for m in 0..MAX_SERIES_TERMS {
            let mf = m as f64;
            let denom = (mf + 1.0) * (mf + shift);
            let next = if self.eta == 0.0 && m % 2 == 0 {
                Complex64::new(0.0, 0.0)
            } else {
                (two_eta_rho * cur - rho2 * prev) / denom
            };
            sum += next;
            abs_sum += (mf + 2.0) * next.norm();
            dsum += next * (mf + 1.0) / rho;
            prev = cur;
            cur = next;

            // Past m + 2L + 2 > 0 the divisor grows, and with q = growth / D_m < 1
            // the terms after index m+1 are bounded by q^i max(|t_m|, |t_{m+1}|)
            // in pairs.
            let k = mf + 1.0;
            let d_next = (k + 1.0) * (k + shift);
            if k + shift > 0.0 && d_next > 0.0 {
                let q = growth / d_next;
                if q < 0.5 {
                    let big = cur.norm().max(prev.norm());
                    let tail = 2.0 * big * q / (1.0 - q);
                    let dtail = big / r * ((2.0 * k + 3.0) * q / (1.0 - q) + 4.0 * q / ((1.0 - q) * (1.0 - q)));
                    if tail <= self.tol * (1.0 + sum.norm()) && dtail <= self.tol * (1.0 + dsum.norm()) {
                        return Ok((sum, dsum, 2.0 * f64::EPSILON * abs_sum + tail));
                    }
                }
            }
        }
        Err(NumericError::NoConvergence(MAX_SERIES_TERMS))
    }
}

/// `phi_L(eta, rho)` to within `tol * (1 + |phi|)`.
pub fn phi(l: f64, eta: f64, rho: ComplexPoint, tol: f64) -> Result<ComplexPoint> {
    CoulombPhi::new(l, eta, tol)?.value(rho.into()).map(Into::into)
}

const PHASE_SPLIT: f64 = FRAC_PI_4;
const MAX_BISECT_DEPTH: u32 = 48;
const INITIAL_STEP: f64 = 0.05;

fn phase_step(f0: Complex64, f1: Complex64) -> f64 {
    (f1 / f0).arg()
}

fn too_close(z: Complex64) -> NumericError {
    NumericError::ContourTooClose { re: z.re, im: z.im }
}

/// Steps are kept below pi/4, so a phase error under 3 pi / 8 at each point
/// cannot change the rounded winding number.
const MAX_RELATIVE_ERROR: f64 = 0.9;

fn contour_value(f: &CoulombPhi, z: Complex64) -> Result<Complex64> {
    let (v, err) = f.value_with_error(z)?;
    if v.norm() == 0.0 {
        return Err(too_close(z));
    }
    if err >= MAX_RELATIVE_ERROR * v.norm() {
        return Err(NumericError::PrecisionLoss { re: z.re, im: z.im });
    }
    Ok(v)
}

fn retryable(e: &NumericError) -> bool {
    matches!(e, NumericError::ContourTooClose { .. } | NumericError::PrecisionLoss { .. })
}

fn track_segment(
    f: &CoulombPhi,
    z0: Complex64,
    f0: Complex64,
    z1: Complex64,
    f1: Complex64,
    depth: u32,
) -> Result<f64> {
    let d = phase_step(f0, f1);
    if d.abs() <= PHASE_SPLIT {
        return Ok(d);
    }
    if depth >= MAX_BISECT_DEPTH || (z1 - z0).norm() < 1e-14 * (1.0 + z0.norm()) {
        if d.abs() > FRAC_PI_2 {
            return Err(too_close(0.5 * (z0 + z1)));
        }
        return Ok(d);
    }
    let zm = 0.5 * (z0 + z1);
    let fm = contour_value(f, zm)?;
    Ok(track_segment(f, z0, f0, zm, fm, depth + 1)? + track_segment(f, zm, fm, z1, f1, depth + 1)?)
}

/// Net phase change of `phi` along the positively oriented boundary of `rect`,
/// divided by `2 pi`: the number of zeros inside, with multiplicity.
pub fn winding_number(f: &CoulombPhi, rect: &Rect) -> Result<usize> {
    rect.validate()?;
    let corners = rect.corners();
    let mut total = 0.0;
    for e in 0..4 {
        let (a, b) = (corners[e], corners[(e + 1) % 4]);
        let steps = (((b - a).norm() / INITIAL_STEP).ceil() as usize).max(8);
        let mut z_prev = a;
        let mut f_prev = contour_value(f, a)?;
        for s in 1..=steps {
            let z = a + (b - a) * (s as f64 / steps as f64);
            let fz = contour_value(f, z)?;
            total += track_segment(f, z_prev, f_prev, z, fz, 0)?;
            z_prev = z;
            f_prev = fz;
        }
    }
    let w = total / (2.0 * PI);
    let rounded = w.round();
    if (w - rounded).abs() > 0.1 || rounded < 0.0 {
        return Err(too_close(rect.center()));
    }
    Ok(rounded as usize)
}

const NUDGES: [f64; 5] = [0.0, 1.7e-3, -2.3e-3, 4.1e-3, -5.3e-3];

/// Counts zeros of `phi` inside `rect` by the argument principle, nudging the
/// contour outward or inward by a few thousandths of its size if it runs too
/// close to a zero.
pub fn count_zeros_region(l: f64, eta: f64, rect: Rect, tol: f64) -> Result<usize> {
    let f = CoulombPhi::new(l, eta, tol)?;
    count_with_nudging(&f, &rect).map(|(n, _)| n)
}

fn count_with_nudging(f: &CoulombPhi, rect: &Rect) -> Result<(usize, Rect)> {
    let mut last = None;
    for nudge in NUDGES {
        let r = rect.grown(nudge);
        match winding_number(f, &r) {
            Ok(n) => return Ok((n, r)),
            Err(e) if retryable(&e) => last = Some(e),
            Err(e) => return Err(e),
        }
    }
    Err(last.expect("at least one attempt"))
}

/// Outcome of a Newton refinement.
#[derive(Clone, Copy, Debug)]
struct Refined {
    z: Complex64,
    residual: f64,
}

fn newton(f: &CoulombPhi, start: Complex64) -> Result<Refined> {
    let mut z = start;
    for _ in 0..80 {
        let (v, dv) = f.eval(z)?;
        if v.norm() == 0.0 {
            return Ok(Refined { z, residual: 0.0 });
        }
        if dv.norm() == 0.0 || !dv.norm().is_finite() {
            break;
        }
        let step = v / dv;
        z -= step;
        if !z.re.is_finite() || !z.im.is_finite() || z.norm() > 1e6 {
            break;
        }
        if step.norm() <= 1e-15 * z.norm().max(1.0) {
            let residual = f.value(z)?.norm();
            return Ok(Refined { z, residual });
        }
    }
    Err(NumericError::NewtonDiverged { re: start.re, im: start.im })
}

/// Which part of the plane a zero sits in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ZeroKind {
    Real,
    Complex,
    Imaginary,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct FoundZero {
    pub point: ComplexPoint,
    pub multiplicity: usize,
    pub kind: ZeroKind,
    /// `|phi(point)|` after refinement.
    pub residual: f64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct ZeroCounts {
    pub real: usize,
    pub complex_pairs: usize,
    pub imaginary_pairs: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ZeroReport {
    /// Upper half-plane search rectangle (conjugates are mirrored). Real zeros
    /// are searched on `[re_min, re_max]`.
    pub region: Rect,
    pub zeros: Vec<FoundZero>,
    pub counts: ZeroCounts,
    /// Argument-principle count for `region`.
    pub winding_count: usize,
    /// Cells whose zeros could not be refined.
    pub unresolved: usize,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SearchOptions {
    pub tol: f64,
    /// Grid step for the real-axis sign scan.
    pub real_scan_step: f64,
    /// Cells smaller than this are not split further.
    pub min_cell: f64,
}

impl Default for SearchOptions {
    fn default() -> Self {
        Self { tol: 1e-13, real_scan_step: 0.02, min_cell: 1e-9 }
    }
}

/// Distance of the default search rectangle's lower edge from the real axis.
pub const DEFAULT_REAL_AXIS_GAP: f64 = 0.01;

/// `[-R, R] x [gap, R]` with `R = 6 + 2 max(floor(-L - 1/2), 0)`.
pub fn default_search_rect(l: f64) -> Rect {
    let pairs = (-l - 0.5).floor().max(0.0);
    let r = 6.0 + 2.0 * pairs;
    Rect::new(-r, r, DEFAULT_REAL_AXIS_GAP, r)
}

const SPLIT_FRACTIONS: [f64; 5] = [0.5137, 0.4419, 0.5861, 0.3727, 0.6291];

struct Localizer<'a> {
    f: &'a CoulombPhi,
    min_cell: f64,
    found: Vec<(Refined, usize)>,
    unresolved: usize,
}

impl Localizer<'_> {
    fn resolve(&mut self, cell: Rect, count: usize, depth: u32) -> Result<()> {
        if count == 0 {
            return Ok(());
        }
        let size = cell.width().max(cell.height());
        if count == 1 {
            if let Ok(r) = newton(self.f, cell.center()) {
                if cell.contains(r.z, 1e-9 * size.max(1.0)) {
                    self.found.push((r, 1));
                    return Ok(());
                }
            }
        }
        if size < self.min_cell || depth > 200 {
            match newton(self.f, cell.center()) {
                Ok(r) => self.found.push((r, count)),
                Err(_) => self.unresolved += 1,
            }
            return Ok(());
        }
        for frac in SPLIT_FRACTIONS {
            let (a, b) = cell.split(frac);
            let (na, nb) = match (winding_number(self.f, &a), winding_number(self.f, &b)) {
                (Ok(na), Ok(nb)) => (na, nb),
                (Err(e), _) | (_, Err(e)) if retryable(&e) => continue,
                (Err(e), _) | (_, Err(e)) => return Err(e),
            };
            if na + nb != count {
                continue;
            }
            self.resolve(a, na, depth + 1)?;
            self.resolve(b, nb, depth + 1)?;
            return Ok(());
        }
        self.unresolved += 1;
        Ok(())
    }
}

fn real_zeros(f: &CoulombPhi, lo: f64, hi: f64, step: f64) -> Result<Vec<Refined>> {
    let re = |x: f64| -> Result<f64> { Ok(f.value(Complex64::new(x, 0.0))?.re) };
    let n = ((hi - lo) / step).ceil().max(1.0) as usize;
    let mut out = Vec::new();
    let mut x0 = lo;
    let mut y0 = re(x0)?;
    for i in 1..=n {
        let x1 = lo + (hi - lo) * (i as f64 / n as f64);
        let y1 = re(x1)?;
        if y0 == 0.0 {
            out.push(x0);
        } else if y0.signum() != y1.signum() && y1 != 0.0 {
            let (mut a, mut b, mut ya) = (x0, x1, y0);
            while b - a > 1e-15 * a.abs().max(1.0) {
                let m = 0.5 * (a + b);
                let ym = re(m)?;
                if ym == 0.0 {
                    a = m;
                    b = m;
                    break;
                }
                if ym.signum() == ya.signum() {
                    a = m;
                    ya = ym;
                } else {
                    b = m;
                }
            }
            out.push(0.5 * (a + b));
        }
        x0 = x1;
        y0 = y1;
    }
    if y0 == 0.0 {
        out.push(x0);
    }
    out.into_iter()
        .map(|x| {
            let z = Complex64::new(x, 0.0);
            // one polishing step along the real axis
            let (v, dv) = f.eval(z)?;
            let polished = if dv.re != 0.0 { Complex64::new(x - v.re / dv.re, 0.0) } else { z };
            let pick = if f.value(polished)?.norm() < v.norm() { polished } else { z };
            Ok(Refined { z: pick, residual: f.value(pick)?.norm() })
        })
        .collect()
}

fn lex(a: &ComplexPoint, b: &ComplexPoint) -> Ordering {
    a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im))
}

/// Locates the zeros of `phi_L(eta, .)`: non-real zeros inside `search`
/// (which must lie in the open upper half-plane) by recursive subdivision
/// until each cell holds one zero and Newton refinement, plus real zeros on
/// `[search.re_min, search.re_max]` by sign changes. Non-real zeros are
/// reported together with their conjugates.
pub fn find_complex_zeros(l: f64, eta: f64, search: Rect, opts: SearchOptions) -> Result<ZeroReport> {
    search.validate()?;
    if search.im_min <= 0.0 {
        return Err(NumericError::InvalidInput(format!(
            "search rectangle must lie above the real axis (im_min = {})",
            search.im_min
        )));
    }
    let f = CoulombPhi::new(l, eta, opts.tol)?;
    let (winding_count, region) = count_with_nudging(&f, &search)?;
    let mut loc = Localizer { f: &f, min_cell: opts.min_cell, found: Vec::new(), unresolved: 0 };
    loc.resolve(region, winding_count, 0)?;

    let mut zeros = Vec::new();
    let mut counts = ZeroCounts::default();
    for (r, mult) in &loc.found {
        let kind = if r.z.re.abs() < IMAGINARY_THRESHOLD { ZeroKind::Imaginary } else { ZeroKind::Complex };
        counts.complex_pairs += mult;
        if kind == ZeroKind::Imaginary {
            counts.imaginary_pairs += mult;
        }
        let p = ComplexPoint::from(r.z);
        for point in [p, p.conj()] {
            zeros.push(FoundZero { point, multiplicity: *mult, kind, residual: r.residual });
        }
    }
    for r in real_zeros(&f, region.re_min, region.re_max, opts.real_scan_step)? {
        counts.real += 1;
        zeros.push(FoundZero {
            point: ComplexPoint::new(r.z.re, 0.0),
            multiplicity: 1,
            kind: ZeroKind::Real,
            residual: r.residual,
        });
    }
    zeros.sort_by(|a, b| lex(&a.point, &b.point));
    Ok(ZeroReport { region, zeros, counts, winding_count, unresolved: loc.unresolved })
}
