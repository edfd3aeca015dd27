//! Grid verification of every identity family, driven by a TOML config.

use serde::{Deserialize, Serialize};

use crate::classify::{classify, dd_product_closed, hurwitz_counts};
use crate::error::{Error, Result};
use crate::exact::{det_exact, ExactRational};
use crate::hankel::{
    bernoulli_hankel_closed, bernoulli_hankel_det_via_scaling, bernoulli_hankel_matrix, build_coulomb_hankel,
    det_coulomb_closed, det_coulomb_via_moments, det_rayleigh, genocchi_hankel_closed, genocchi_hankel_det_via_scaling,
    genocchi_hankel_matrix, parity_split_check, rayleigh_product_formula, RayleighMethod,
};
use crate::numeric::{default_search_rect, find_complex_zeros, SearchOptions};
use crate::zeta::{genocchi_even, genocchi_even_via_rayleigh, CoulombParams};

/// The config shipped with the crate.
pub const DEFAULT_CONFIG: &str = include_str!("../config/verify-grid.toml");

#[derive(Clone, Debug, Deserialize)]
pub struct SuiteConfig {
    pub version: u32,
    pub full: Grid,
    pub quick: Grid,
}

impl SuiteConfig {
    pub fn parse(src: &str) -> Result<Self> {
        toml::from_str(src).map_err(|e| Error::InvalidArgument(format!("grid config: {e}")))
    }

    pub fn builtin() -> Self {
        Self::parse(DEFAULT_CONFIG).expect("bundled grid config parses")
    }

    pub fn grid(&self, quick: bool) -> &Grid {
        if quick {
            &self.quick
        } else {
            &self.full
        }
    }
}

#[derive(Clone, Debug, Deserialize)]
pub struct ClassifyCase {
    pub l: ExactRational,
    pub eta: ExactRational,
    pub m: usize,
}

#[derive(Clone, Debug, Deserialize)]
pub struct ZeroCase {
    pub l: f64,
    pub eta: f64,
    /// Upper half-plane zeros `[re, im]`.
    pub zeros: Vec<[f64; 2]>,
}

#[derive(Clone, Debug, Deserialize)]
pub struct Grid {
    pub coulomb_l: Vec<ExactRational>,
    pub coulomb_eta: Vec<ExactRational>,
    pub coulomb_n: usize,
    pub sign_n: usize,
    pub rayleigh_nu: Vec<ExactRational>,
    pub rayleigh_n: usize,
    pub higher_ell_n: usize,
    pub dj_ell: u32,
    pub dj_n: usize,
    pub numbers_n: usize,
    pub parity_nu: Vec<ExactRational>,
    pub parity_n: usize,
    pub hurwitz_nu: Vec<ExactRational>,
    pub zero_tol: f64,
    pub classify: Vec<ClassifyCase>,
    pub zeros: Vec<ZeroCase>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FamilyReport {
    pub family: &'static str,
    pub checked: usize,
    pub failures: Vec<String>,
}

impl FamilyReport {
    fn new(family: &'static str) -> Self {
        Self { family, checked: 0, failures: Vec::new() }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    fn run(&mut self, what: impl Fn() -> String, f: impl FnOnce() -> Result<bool>) {
        match f() {
            Ok(ok) => self.check(ok, &what),
            Err(e) => self.check(false, || format!("{}: {e}", what())),
        }
    }
}

fn coulomb_family(g: &Grid) -> FamilyReport {
    let mut r = FamilyReport::new("coulomb-hankel");
    for l in &g.coulomb_l {
        for eta in &g.coulomb_eta {
            let p = CoulombParams::new(l.clone(), eta.clone());
            for n in 1..=g.coulomb_n {
                r.run(
                    || format!("L={l} eta={eta} n={n}"),
                    || {
                        let direct = det_exact(&build_coulomb_hankel(&p, n)?.matrix);
                        Ok(direct == det_coulomb_closed(&p, n)? && direct == det_coulomb_via_moments(&p, n)?)
                    },
                );
            }
        }
    }
    r
}

fn sign_family(g: &Grid) -> FamilyReport {
    let mut r = FamilyReport::new("sign-products");
    for l in &g.coulomb_l {
        for eta in &g.coulomb_eta {
            let p = CoulombParams::new(l.clone(), eta.clone());
            let mut prev = ExactRational::one();
            for n in 0..=g.sign_n {
                r.run(
                    || format!("L={l} eta={eta} n={n}"),
                    || {
                        let next = det_exact(&build_coulomb_hankel(&p, n + 1)?.matrix);
                        let dd = dd_product_closed(&p, n)?;
                        let lead = ExactRational::from_integer(2) * l + ExactRational::from_integer(2 * n as i64 + 3);
                        let ok = dd == &prev * &next && dd.signum() == lead.signum();
                        prev = next;
                        Ok(ok)
                    },
                );
            }
        }
    }
    r
}

fn rayleigh_family(g: &Grid) -> FamilyReport {
    let mut r = FamilyReport::new("rayleigh-closed");
    for nu in &g.rayleigh_nu {
        for ell in 0..=1 {
            for n in 1..=g.rayleigh_n {
                r.run(
                    || format!("nu={nu} ell={ell} n={n}"),
                    || {
                        Ok(det_rayleigh(nu, ell, n, RayleighMethod::Direct)?
                            == det_rayleigh(nu, ell, n, RayleighMethod::Closed)?)
                    },
                );
            }
        }
    }
    r
}

fn higher_ell_family(g: &Grid) -> FamilyReport {
    let mut r = FamilyReport::new("rayleigh-higher-ell");
    for nu in &g.rayleigh_nu {
        for ell in 2..=3 {
            for n in 1..=g.higher_ell_n {
                r.run(
                    || format!("nu={nu} ell={ell} n={n}"),
                    || {
                        Ok(det_rayleigh(nu, ell, n, RayleighMethod::Direct)?
                            == det_rayleigh(nu, ell, n, RayleighMethod::Closed)?)
                    },
                );
            }
        }
        // the ell in {0, 1} product must fail somewhere at ell = 2
        r.run(
            || format!("nu={nu} ell=2 product-formula witness"),
            || {
                for n in 1..=g.higher_ell_n.max(2) {
                    if det_rayleigh(nu, 2, n, RayleighMethod::Direct)? != rayleigh_product_formula(nu, 2, n)? {
                        return Ok(true);
                    }
                }
                Ok(false)
            },
        );
    }
    r
}

fn dj_family(g: &Grid) -> FamilyReport {
    let mut r = FamilyReport::new("desnanot-jacobi");
    for nu in &g.rayleigh_nu {
        for ell in 0..=g.dj_ell {
            for n in 1..=g.dj_n {
                r.run(
                    || format!("nu={nu} ell={ell} n={n}"),
                    || {
                        Ok(det_rayleigh(nu, ell, n, RayleighMethod::Direct)?
                            == det_rayleigh(nu, ell, n, RayleighMethod::Dj)?)
                    },
                );
            }
        }
    }
    r
}

fn is_unit_fraction(x: &ExactRational) -> bool {
    x.numer().magnitude() == &num_bigint::BigUint::from(1u32)
}

fn numbers_family(g: &Grid) -> FamilyReport {
    let mut r = FamilyReport::new("bernoulli-genocchi");
    for ell in 0..=1 {
        for n in 1..=g.numbers_n {
            r.run(
                || format!("bernoulli ell={ell} n={n}"),
                || {
                    let direct = det_exact(&bernoulli_hankel_matrix(ell, n)?);
                    Ok(direct == bernoulli_hankel_closed(ell, n)?
                        && direct == bernoulli_hankel_det_via_scaling(ell, n)?
                        && is_unit_fraction(&direct))
                },
            );
            r.run(
                || format!("genocchi ell={ell} n={n}"),
                || {
                    let direct = det_exact(&genocchi_hankel_matrix(ell, n)?);
                    Ok(direct == genocchi_hankel_closed(ell, n)?
                        && direct == genocchi_hankel_det_via_scaling(ell, n)?
                        && is_unit_fraction(&direct))
                },
            );
        }
    }
    r.run(
        || "genocchi numbers from sigma(1/2) and sigma(-1/2)".into(),
        || Ok(genocchi_even(2 * g.numbers_n)? == genocchi_even_via_rayleigh(2 * g.numbers_n)?),
    );
    r
}

fn parity_family(g: &Grid) -> FamilyReport {
    let mut r = FamilyReport::new("parity-split");
    for nu in &g.parity_nu {
        for n in 1..=g.parity_n {
            r.run(|| format!("nu={nu} n={n}"), || Ok(parity_split_check(nu, n)?.holds()));
        }
    }
    r
}

fn classify_family(g: &Grid) -> FamilyReport {
    let mut r = FamilyReport::new("classification");
    for case in &g.classify {
        r.run(
            || format!("L={} eta={} expected m={}", case.l, case.eta, case.m),
            || Ok(classify(&CoulombParams::new(case.l.clone(), case.eta.clone()), None)?.pair_count == case.m),
        );
    }
    r
}

fn zeros_family(g: &Grid) -> FamilyReport {
    let mut r = FamilyReport::new("numeric-zeros");
    for case in &g.zeros {
        r.run(
            || format!("L={} eta={}", case.l, case.eta),
            || {
                let report =
                    find_complex_zeros(case.l, case.eta, default_search_rect(case.l), SearchOptions::default())
                        .map_err(|e| Error::InvalidArgument(e.to_string()))?;
                let upper: Vec<_> = report.zeros.iter().filter(|z| z.point.im > 0.0).collect();
                let all_found = case.zeros.iter().all(|[re, im]| {
                    upper.iter().any(|z| (z.point.re - re).abs() <= g.zero_tol && (z.point.im - im).abs() <= g.zero_tol)
                });
                Ok(all_found && upper.len() == case.zeros.len() && report.unresolved == 0)
            },
        );
    }
    r
}

fn hurwitz_family(g: &Grid) -> FamilyReport {
    let mut r = FamilyReport::new("hurwitz");
    for nu in &g.hurwitz_nu {
        r.run(
            || format!("nu={nu}"),
            || {
                let counts = hurwitz_counts(nu)?;
                let l = nu.to_f64() - 0.5;
                let report = find_complex_zeros(l, 0.0, default_search_rect(l), SearchOptions::default())
                    .map_err(|e| Error::InvalidArgument(e.to_string()))?;
                let imaginary = report.counts.imaginary_pairs;
                Ok(2 * report.counts.complex_pairs == counts.complex_zeros
                    && imaginary == usize::from(counts.imaginary_pair))
            },
        );
    }
    r
}

/// Runs every family on the chosen grid, in a fixed order.
pub fn run_suite(config: &SuiteConfig, quick: bool) -> Vec<FamilyReport> {
    let g = config.grid(quick);
    vec![
        coulomb_family(g),
        rayleigh_family(g),
        higher_ell_family(g),
        dj_family(g),
        numbers_family(g),
        sign_family(g),
        parity_family(g),
        classify_family(g),
        zeros_family(g),
        hurwitz_family(g),
    ]
}
