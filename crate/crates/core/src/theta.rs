//! Jacobi theta functions of nome `p = exp(i*pi*tau)` evaluated by truncated q-series.
//!
//! ```text
//! theta1(z|p) = 2 sum_{n>=0} (-1)^n p^{(n+1/2)^2} sin((2n+1) z)
//! theta4(z|p) = 1 + 2 sum_{n>=1} (-1)^n p^{n^2} cos(2 n z)
//! ```
//!
//! `p^{1/4}` is taken as `exp(i*pi*tau/4)`, so the quarter power follows `tau`
//! rather than the principal logarithm of `p` when the two disagree.
//!
//! Ratios of `theta1` values are evaluated through [`theta1_reduced`], which drops
//! the common `2 p^{1/4}` prefactor and stays finite at `p = 0`.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::color::Color;
use crate::error::{Error, Result};

/// Absolute magnitude below which a denominator is treated as a pole.
pub const POLE_TOLERANCE: f64 = 1e-13;

const I: Complex64 = Complex64::new(0.0, 1.0);

/// Truncation control for the q-series.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SeriesConfig {
    pub term_tolerance: f64,
    pub max_terms: usize,
}

impl SeriesConfig {
    pub fn new(term_tolerance: f64, max_terms: usize) -> Result<Self> {
        if !(term_tolerance > 0.0) || !term_tolerance.is_finite() {
            return Err(Error::InvalidParameter(format!(
                "term_tolerance must be positive, got {term_tolerance}"
            )));
        }
        if max_terms < 1 {
            return Err(Error::InvalidParameter(
                "max_terms must be at least 1".into(),
            ));
        }
        Ok(SeriesConfig {
            term_tolerance,
            max_terms,
        })
    }
}

impl Default for SeriesConfig {
    fn default() -> Self {
        SeriesConfig {
            term_tolerance: 1e-16,
            max_terms: 64,
        }
    }
}

/// The elliptic context: nome `p`, half-period ratio `tau` and the fixed parameter `lambda`.
///
/// `tau` is `None` only for `p = 0`, where it sits at `i*infinity`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EllipticParams {
    nome: Complex64,
    tau: Option<Complex64>,
    lambda: Complex64,
}

impl EllipticParams {
    /// Builds the context from the nome, taking `tau = Log(p) / (i*pi)` on the principal branch.
    pub fn new(nome: Complex64, lambda: Complex64) -> Result<Self> {
        let modulus = nome.norm();
        if !(modulus < 1.0) {
            return Err(Error::Divergence { modulus });
        }
        let tau = if modulus == 0.0 {
            None
        } else {
            Some(nome.ln() / (I * PI))
        };
        Ok(EllipticParams { nome, tau, lambda })
    }

    /// Real nome and real `lambda`, the default verification domain.
    pub fn real(p: f64, lambda: f64) -> Result<Self> {
        Self::new(Complex64::new(p, 0.0), Complex64::new(lambda, 0.0))
    }

    pub fn from_tau(tau: Complex64, lambda: Complex64) -> Result<Self> {
        if !(tau.im > 0.0) {
            return Err(Error::Divergence {
                modulus: (I * PI * tau).exp().norm(),
            });
        }
        let nome = (I * PI * tau).exp();
        Ok(EllipticParams {
            nome,
            tau: Some(tau),
            lambda,
        })
    }

    pub fn nome(&self) -> Complex64 {
        self.nome
    }

    pub fn tau(&self) -> Option<Complex64> {
        self.tau
    }

    pub fn lambda(&self) -> Complex64 {
        self.lambda
    }

    pub fn with_lambda(&self, lambda: Complex64) -> Self {
        EllipticParams { lambda, ..*self }
    }

    /// Same `lambda`, nome `p^3` and half-period ratio `3 tau`.
    pub fn cubed(&self) -> Self {
        EllipticParams {
            nome: self.nome * self.nome * self.nome,
            tau: self.tau.map(|t| 3.0 * t),
            lambda: self.lambda,
        }
    }

    /// `pi * tau`, the quasi-period; undefined at `p = 0`.
    pub fn quasi_period(&self) -> Result<Complex64> {
        self.tau.map(|t| PI * t).ok_or_else(|| {
            Error::InvalidParameter("quasi-period pi*tau is undefined at p = 0".into())
        })
    }

    /// `p^{1/4}` on the branch fixed by `tau`.
    pub fn nome_quarter(&self) -> Complex64 {
        match self.tau {
            Some(t) => (I * PI * t / 4.0).exp(),
            None => Complex64::new(0.0, 0.0),
        }
    }
}

/// Runs a theta-type series. `term(n)` returns the n-th summand and its magnitude envelope,
/// `growth(n)` the log of the envelope ratio between terms n+1 and n (negative once decaying).
fn sum_series(
    cfg: &SeriesConfig,
    first: Complex64,
    mut term: impl FnMut(usize) -> (Complex64, f64),
    growth: impl Fn(usize) -> f64,
) -> Result<Complex64> {
    let mut sum = first;
    let mut last = f64::INFINITY;
    for n in 0..cfg.max_terms {
        let (t, envelope) = term(n);
        sum += t;
        last = envelope;
        let decaying = growth(n) < 0.0;
        if envelope == 0.0 || (decaying && envelope < cfg.term_tolerance * (1.0 + sum.norm())) {
            return Ok(sum);
        }
    }
    Err(Error::Truncation {
        max_terms: cfg.max_terms,
        last_term: last,
    })
}

/// `theta1(phi|p) / (2 p^{1/4}) = sum_{n>=0} (-1)^n p^{n(n+1)} sin((2n+1) phi)`.
pub fn theta1_reduced(
    phi: Complex64,
    params: &EllipticParams,
    cfg: &SeriesConfig,
) -> Result<Complex64> {
    let p = params.nome;
    let p2 = p * p;
    let log_p = p.norm().ln();
    let im = phi.im.abs();
    // q holds p^{n(n+1)}, step holds p^{2(n+1)}
    let mut q = Complex64::new(1.0, 0.0);
    let mut step = p2;
    sum_series(
        cfg,
        Complex64::new(0.0, 0.0),
        |n| {
            let k = (2 * n + 1) as f64;
            let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
            let t = sign * q * (k * phi).sin();
            let envelope = q.norm() * (k * im).exp();
            q *= step;
            step *= p2;
            (t, envelope)
        },
        |n| 2.0 * (n as f64 + 1.0) * log_p + 2.0 * im,
    )
}

/// Jacobi `theta1(phi|p)`.
pub fn theta1(phi: Complex64, params: &EllipticParams, cfg: &SeriesConfig) -> Result<Complex64> {
    Ok(2.0 * params.nome_quarter() * theta1_reduced(phi, params, cfg)?)
}

/// Jacobi `theta4(phi|p)`.
pub fn theta4(phi: Complex64, params: &EllipticParams, cfg: &SeriesConfig) -> Result<Complex64> {
    let p = params.nome;
    let p2 = p * p;
    let log_p = p.norm().ln();
    let im = phi.im.abs();
    // q holds p^{m^2} for m = n + 1, step holds p^{2m+1}
    let mut q = p;
    let mut step = p * p2;
    sum_series(
        cfg,
        Complex64::new(1.0, 0.0),
        |n| {
            let m = (n + 1) as f64;
            let sign = if n % 2 == 0 { -1.0 } else { 1.0 };
            let t = 2.0 * sign * q * (2.0 * m * phi).cos();
            let envelope = 2.0 * q.norm() * (2.0 * m * im).exp();
            q *= step;
            step *= p2;
            (t, envelope)
        },
        |n| (2.0 * (n as f64 + 1.0) + 1.0) * log_p + 2.0 * im,
    )
}

/// `theta1'(0|p) / (2 p^{1/4}) = sum_{n>=0} (-1)^n (2n+1) p^{n(n+1)}`.
pub fn theta1_prime_at_zero_reduced(
    params: &EllipticParams,
    cfg: &SeriesConfig,
) -> Result<Complex64> {
    let p = params.nome;
    let p2 = p * p;
    let log_p = p.norm().ln();
    let mut q = Complex64::new(1.0, 0.0);
    let mut step = p2;
    sum_series(
        cfg,
        Complex64::new(0.0, 0.0),
        |n| {
            let k = (2 * n + 1) as f64;
            let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
            let t = sign * k * q;
            let envelope = k * q.norm();
            q *= step;
            step *= p2;
            (t, envelope)
        },
        |n| 2.0 * (n as f64 + 1.0) * log_p + ((2 * n + 3) as f64 / (2 * n + 1) as f64).ln(),
    )
}

/// Term-wise derivative of the `theta1` series at zero.
pub fn theta1_prime_at_zero(params: &EllipticParams, cfg: &SeriesConfig) -> Result<Complex64> {
    Ok(2.0 * params.nome_quarter() * theta1_prime_at_zero_reduced(params, cfg)?)
}

/// `lambda + 2*pi*k/3` for an integer `k`.
pub fn color_shift(lambda: Complex64, k: i64) -> Complex64 {
    lambda + 2.0 * PI * k as f64 / 3.0
}

/// Errors with [`Error::Pole`] when `value` is numerically zero.
pub(crate) fn nonzero(value: Complex64, what: impl FnOnce() -> String) -> Result<Complex64> {
    if value.norm() < POLE_TOLERANCE {
        Err(Error::Pole {
            what: what(),
            magnitude: value.norm(),
        })
    } else {
        Ok(value)
    }
}

/// `zeta_r = theta4(lambda + 2pi(r-1)/3) theta4(lambda + 2pi(r+1)/3) / theta4(lambda + 2pi r/3)^2`.
pub fn zeta(r: Color, params: &EllipticParams, cfg: &SeriesConfig) -> Result<Complex64> {
    let lambda = params.lambda;
    let k = r.as_i64();
    let den = theta4(color_shift(lambda, k), params, cfg)?;
    let den = nonzero(den, || format!("theta4(lambda + 2pi*{k}/3)"))?;
    let a = theta4(color_shift(lambda, k - 1), params, cfg)?;
    let b = theta4(color_shift(lambda, k + 1), params, cfg)?;
    Ok(a * b / (den * den))
}

/// The same ratio built from `theta1` instead of `theta4`.
pub fn zeta_theta1(r: Color, params: &EllipticParams, cfg: &SeriesConfig) -> Result<Complex64> {
    let lambda = params.lambda;
    let k = r.as_i64();
    let den = theta1_reduced(color_shift(lambda, k), params, cfg)?;
    let den = nonzero(den, || format!("theta1(lambda + 2pi*{k}/3)"))?;
    let a = theta1_reduced(color_shift(lambda, k - 1), params, cfg)?;
    let b = theta1_reduced(color_shift(lambda, k + 1), params, cfg)?;
    Ok(a * b / (den * den))
}

/// The constant `D(p)` relating the triple product of `theta1` at thirds of a period
/// to `theta1(3 phi | p^3)`:
///
/// ```text
/// D(p) = theta1'(0|p) theta1(pi/3|p) theta1(2pi/3|p) / (3 theta1'(0|p^3))
/// ```
pub fn cubic_factor_d(params: &EllipticParams, cfg: &SeriesConfig) -> Result<Complex64> {
    let cubed = params.cubed();
    let den = nonzero(3.0 * theta1_prime_at_zero(&cubed, cfg)?, || {
        "theta1'(0|p^3)".into()
    })?;
    let a = theta1_prime_at_zero(params, cfg)?;
    let b = theta1(Complex64::new(PI / 3.0, 0.0), params, cfg)?;
    let c = theta1(Complex64::new(2.0 * PI / 3.0, 0.0), params, cfg)?;
    Ok(a * b * c / den)
}

/// Multiplier picked up by both `theta1` and `theta4` under `phi -> phi + pi*tau`:
/// `-p^{-1} exp(-2 i phi)`.
pub fn quasi_period_factor(phi: Complex64, params: &EllipticParams) -> Result<Complex64> {
    params.quasi_period()?;
    Ok(-(-2.0 * I * phi).exp() / params.nome)
}
