//! The elliptic face weights of the three-coloring model and their gauge-reduced form.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::color::Color;
use crate::error::{Error, Result};
use crate::numeric::residual;
use crate::sixvertex::VertexKind;
use crate::theta::{
    color_shift, nonzero, theta1_reduced, theta4, zeta, EllipticParams, SeriesConfig,
};

const I: Complex64 = Complex64::new(0.0, 1.0);

/// A vertex kind together with the base color `r` of its four surrounding faces.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ColoredVertexKind {
    pub kind: VertexKind,
    pub r: Color,
}

impl ColoredVertexKind {
    pub fn new(kind: VertexKind, r: Color) -> Self {
        ColoredVertexKind { kind, r }
    }

    /// Face colors relative to `r`, in the order top-left, top-right, bottom-right, bottom-left.
    pub fn offsets(kind: VertexKind) -> [i64; 4] {
        match kind {
            VertexKind::Alpha => [-1, 0, 1, 0],
            VertexKind::AlphaP => [1, 0, -1, 0],
            VertexKind::Beta => [0, -1, 0, 1],
            VertexKind::BetaP => [0, 1, 0, -1],
            VertexKind::Gamma => [0, 1, 0, 1],
            VertexKind::GammaP => [0, -1, 0, -1],
        }
    }

    /// Integer face heights `r + offset` with `r` in `{0, 1, 2}`; these may leave `{0, 1, 2}`.
    pub fn lifted_heights(self) -> [i64; 4] {
        Self::offsets(self.kind).map(|o| self.r.as_i64() + o)
    }

    pub fn face_colors(self) -> [Color; 4] {
        Self::offsets(self.kind).map(|o| self.r + o)
    }

    /// Recognises a four-face pattern; `None` when two neighbouring faces share a color.
    pub fn classify(tl: Color, tr: Color, br: Color, bl: Color) -> Option<Self> {
        Self::all().find(|v| v.face_colors() == [tl, tr, br, bl])
    }

    pub fn all() -> impl Iterator<Item = ColoredVertexKind> {
        VertexKind::ALL.into_iter().flat_map(|k| {
            Color::ALL
                .into_iter()
                .map(move |r| ColoredVertexKind::new(k, r))
        })
    }

    pub fn index(self) -> usize {
        self.kind.index() * 3 + self.r.index()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum WeightFamily3c {
    /// The weights with fractional powers of `zeta_r` in every kind.
    Raw,
    /// The gauge-reduced weights, where only `zeta_r^(1/2)` survives.
    Tilde,
}

/// A choice of `log zeta_r` for the three colors, which fixes every fractional power.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ZetaLogs(pub [Complex64; 3]);

impl ZetaLogs {
    /// Real logarithms; errors unless every `zeta_r` is positive real.
    pub fn principal(params: &EllipticParams, cfg: &SeriesConfig) -> Result<Self> {
        let mut logs = [Complex64::new(0.0, 0.0); 3];
        for r in Color::ALL {
            let z = zeta(r, params, cfg)?;
            if z.re <= 0.0 || z.im.abs() > 1e-12 * z.norm() {
                return Err(Error::BranchDomain(format!(
                    "zeta_{r} = {z} is not positive real"
                )));
            }
            logs[r.index()] = Complex64::new(z.re.ln(), 0.0);
        }
        Ok(ZetaLogs(logs))
    }

    pub fn log(&self, r: Color) -> Complex64 {
        self.0[r.index()]
    }

    /// `zeta_r^e` on this branch.
    pub fn power(&self, r: Color, e: Complex64) -> Complex64 {
        (e * self.log(r)).exp()
    }
}

/// Weight evaluator with the `phi`-independent theta values cached.
#[derive(Debug, Clone)]
pub struct ColoredWeights {
    family: WeightFamily3c,
    params: EllipticParams,
    cfg: SeriesConfig,
    logs: ZetaLogs,
    theta1_2pi3: Complex64,
    theta4_base: [Complex64; 3],
}

impl ColoredWeights {
    pub fn new(
        family: WeightFamily3c,
        params: &EllipticParams,
        cfg: &SeriesConfig,
    ) -> Result<Self> {
        Self::with_logs(family, params, cfg, ZetaLogs::principal(params, cfg)?)
    }

    /// Uses the supplied logarithms for every `zeta` power instead of the real ones.
    pub fn with_logs(
        family: WeightFamily3c,
        params: &EllipticParams,
        cfg: &SeriesConfig,
        logs: ZetaLogs,
    ) -> Result<Self> {
        let theta1_2pi3 = theta1_reduced(Complex64::new(2.0 * PI / 3.0, 0.0), params, cfg)?;
        let mut theta4_base = [Complex64::new(0.0, 0.0); 3];
        for r in Color::ALL {
            let v = theta4(color_shift(params.lambda(), r.as_i64()), params, cfg)?;
            theta4_base[r.index()] = nonzero(v, || format!("theta4(lambda + 2pi*{r}/3)"))?;
        }
        Ok(ColoredWeights {
            family,
            params: *params,
            cfg: *cfg,
            logs,
            theta1_2pi3,
            theta4_base,
        })
    }

    pub fn family(&self) -> WeightFamily3c {
        self.family
    }

    pub fn params(&self) -> &EllipticParams {
        &self.params
    }

    fn theta1_ratio(&self, x: Complex64) -> Result<Complex64> {
        Ok(theta1_reduced(x, &self.params, &self.cfg)? / self.theta1_2pi3)
    }

    /// `theta4(lambda + 2 pi (r + half) / 3 + sign * phi) / theta4(lambda + 2 pi r / 3)`.
    fn gamma_theta(&self, r: Color, half: f64, sign: f64, phi: Complex64) -> Result<Complex64> {
        let arg = self.params.lambda() + 2.0 * PI * (r.as_i64() as f64 + half) / 3.0 + sign * phi;
        Ok(theta4(arg, &self.params, &self.cfg)? / self.theta4_base[r.index()])
    }

    pub fn weight(&self, v: ColoredVertexKind, phi: Complex64) -> Result<Complex64> {
        let r = v.r;
        let third = Complex64::new(PI / 3.0, 0.0);
        let e_ab = 3.0 * phi / (4.0 * PI);
        let e_g = 1.0 / 6.0 + phi / (2.0 * PI);
        let half = Complex64::new(0.5, 0.0);
        Ok(match (self.family, v.kind) {
            (WeightFamily3c::Raw, VertexKind::Alpha | VertexKind::AlphaP) => {
                self.logs.power(r, 0.25 + e_ab) * self.theta1_ratio(third - phi)?
            }
            (WeightFamily3c::Raw, VertexKind::Beta | VertexKind::BetaP) => {
                self.logs.power(r, 0.25 - e_ab) * self.theta1_ratio(third + phi)?
            }
            (WeightFamily3c::Raw, VertexKind::Gamma) => {
                self.logs.power(r + 1, e_g) / self.logs.power(r, e_g)
                    * self.gamma_theta(r, 0.5, 1.0, phi)?
            }
            (WeightFamily3c::Raw, VertexKind::GammaP) => {
                self.logs.power(r - 1, e_g) / self.logs.power(r, e_g)
                    * self.gamma_theta(r, -0.5, -1.0, phi)?
            }
            (WeightFamily3c::Tilde, VertexKind::Alpha | VertexKind::AlphaP) => {
                self.theta1_ratio(third - phi)?
            }
            (WeightFamily3c::Tilde, VertexKind::Beta | VertexKind::BetaP) => {
                self.logs.power(r, half) * self.theta1_ratio(third + phi)?
            }
            (WeightFamily3c::Tilde, VertexKind::Gamma) => self.gamma_theta(r, 0.5, 1.0, phi)?,
            (WeightFamily3c::Tilde, VertexKind::GammaP) => self.gamma_theta(r, -0.5, -1.0, phi)?,
        })
    }
}

pub fn raw_weight(
    v: ColoredVertexKind,
    phi: Complex64,
    params: &EllipticParams,
    cfg: &SeriesConfig,
) -> Result<Complex64> {
    ColoredWeights::new(WeightFamily3c::Raw, params, cfg)?.weight(v, phi)
}

pub fn tilde_weight(
    v: ColoredVertexKind,
    phi: Complex64,
    params: &EllipticParams,
    cfg: &SeriesConfig,
) -> Result<Complex64> {
    ColoredWeights::new(WeightFamily3c::Tilde, params, cfg)?.weight(v, phi)
}

/// Residuals of the color-shift relations `W_{r+1}(phi | lambda) = W_r(phi | lambda + 2 pi / 3)`
/// for the raw weights, maximised over `r`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ShiftReadings {
    pub alpha: f64,
    pub alpha_p: f64,
    pub beta: f64,
    pub beta_p: f64,
    pub gamma: f64,
    pub gamma_p: f64,
    /// `beta_{r+1}(phi | lambda)` against `alpha_r(phi | lambda + 2 pi / 3)`.
    pub beta_against_alpha: f64,
}

pub fn shift_relation_residuals(
    phi: f64,
    params: &EllipticParams,
    cfg: &SeriesConfig,
) -> Result<ShiftReadings> {
    let here = ColoredWeights::new(WeightFamily3c::Raw, params, cfg)?;
    let moved = params.with_lambda(params.lambda() + 2.0 * PI / 3.0);
    let there = ColoredWeights::new(WeightFamily3c::Raw, &moved, cfg)?;
    let phi = Complex64::new(phi, 0.0);
    let worst = |left: VertexKind, right: VertexKind| -> Result<f64> {
        let mut w = 0.0f64;
        for r in Color::ALL {
            let a = here.weight(ColoredVertexKind::new(left, r + 1), phi)?;
            let b = there.weight(ColoredVertexKind::new(right, r), phi)?;
            w = w.max(residual(a, b, 0.0));
        }
        Ok(w)
    };
    use VertexKind::*;
    Ok(ShiftReadings {
        alpha: worst(Alpha, Alpha)?,
        alpha_p: worst(AlphaP, AlphaP)?,
        beta: worst(Beta, Beta)?,
        beta_p: worst(BetaP, BetaP)?,
        gamma: worst(Gamma, Gamma)?,
        gamma_p: worst(GammaP, GammaP)?,
        beta_against_alpha: worst(Beta, Alpha)?,
    })
}

/// How the `pi tau` multipliers `Psi_h` are evaluated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PsiConvention {
    /// `Psi_h = exp(i (h - 1)(pi (h + 1)/3 + lambda))` on lifted heights `r + offset`.
    Lifted,
    /// `Psi_h = exp(i (h - 1)(pi (h + 1)/3 + lambda) tau)` on representatives in `{0, 1, 2}`.
    Printed,
}

/// Residual of `W(phi + pi tau) = -p^{-1} e^{-2 i phi} Psi_tl Psi_br / (Psi_bl Psi_tr) W(phi)`
/// for one gauge-reduced weight.
pub fn psi_law_residual(
    v: ColoredVertexKind,
    phi: Complex64,
    params: &EllipticParams,
    cfg: &SeriesConfig,
    convention: PsiConvention,
) -> Result<f64> {
    let w = ColoredWeights::new(WeightFamily3c::Tilde, params, cfg)?;
    let period = params.quasi_period()?;
    let tau = period / PI;
    let lambda = params.lambda();
    let log_psi = |h: i64| -> Complex64 {
        let base = I * (h - 1) as f64 * (PI * (h + 1) as f64 / 3.0 + lambda);
        match convention {
            PsiConvention::Lifted => base,
            PsiConvention::Printed => base * tau,
        }
    };
    let heights = match convention {
        PsiConvention::Lifted => v.lifted_heights(),
        PsiConvention::Printed => v.face_colors().map(Color::as_i64),
    };
    let [tl, tr, br, bl] = heights.map(log_psi);
    let lhs = w.weight(v, phi + period)?;
    let rhs =
        -(-2.0 * I * phi).exp() / params.nome() * (tl + br - bl - tr).exp() * w.weight(v, phi)?;
    Ok(residual(lhs, rhs, 0.0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::theta::theta1;
    use approx::assert_relative_eq;

    fn c(x: f64) -> Complex64 {
        Complex64::new(x, 0.0)
    }

    fn cfg() -> SeriesConfig {
        SeriesConfig::default()
    }

    #[test]
    fn classify_roundtrip_and_rejects_bad_patterns() {
        let all: Vec<_> = ColoredVertexKind::all().collect();
        assert_eq!(all.len(), 18);
        for v in &all {
            let [a, b, d, e] = v.face_colors();
            assert_eq!(ColoredVertexKind::classify(a, b, d, e), Some(*v));
        }
        let z = Color::ZERO;
        assert_eq!(
            ColoredVertexKind::classify(z, z, Color::ONE, Color::ONE),
            None
        );
        // diagonal faces may differ by two
        assert_eq!(
            ColoredVertexKind::classify(z, Color::ONE, Color::TWO, Color::ONE).map(|v| v.kind),
            Some(VertexKind::Alpha)
        );
    }

    #[test]
    fn values_at_zero_angle() {
        let params = EllipticParams::real(0.2, 0.4).unwrap();
        let logs = ZetaLogs::principal(&params, &cfg()).unwrap();
        let zeta = |r: Color| logs.power(r, c(1.0));
        for r in Color::ALL {
            let w = |k| raw_weight(ColoredVertexKind::new(k, r), c(0.0), &params, &cfg()).unwrap();
            assert_relative_eq!(
                w(VertexKind::Alpha).re,
                zeta(r).re.powf(0.25),
                max_relative = 1e-13
            );
            assert_relative_eq!(
                w(VertexKind::BetaP).re,
                zeta(r).re.powf(0.25),
                max_relative = 1e-13
            );
            let g = (zeta(r + 1) * zeta(r)).sqrt();
            assert_relative_eq!(w(VertexKind::Gamma).re, g.re, max_relative = 1e-13);
            let gp = (zeta(r - 1) * zeta(r)).sqrt();
            assert_relative_eq!(w(VertexKind::GammaP).re, gp.re, max_relative = 1e-13);
            let tb = tilde_weight(
                ColoredVertexKind::new(VertexKind::Beta, r),
                c(0.0),
                &params,
                &cfg(),
            )
            .unwrap();
            let t13 = theta1(c(PI / 3.0), &params, &cfg()).unwrap()
                / theta1(c(2.0 * PI / 3.0), &params, &cfg()).unwrap();
            assert_relative_eq!(tb.re, zeta(r).re.sqrt() * t13.re, max_relative = 1e-13);
        }
    }

    #[test]
    fn small_nome_limit() {
        let phi = 0.45;
        let six = (PI / 3.0 - phi).sin() / (2.0 * PI / 3.0).sin();
        for p in [1e-3, 1e-4] {
            let params = EllipticParams::real(p, 0.4).unwrap();
            let a = raw_weight(
                ColoredVertexKind::new(VertexKind::Alpha, Color::ONE),
                c(phi),
                &params,
                &cfg(),
            )
            .unwrap();
            assert!((a.re / six - 1.0).abs() < 20.0 * p);
        }
        let params = EllipticParams::real(0.0, 0.4).unwrap();
        for v in ColoredVertexKind::all() {
            let t = tilde_weight(v, c(phi), &params, &cfg()).unwrap();
            let s = crate::sixvertex::weight6v(v.kind, c(phi), 2.0 * PI / 3.0).unwrap();
            assert!((t - s).norm() < 1e-14, "{v:?}");
        }
    }

    #[test]
    fn shift_relations() {
        let params = EllipticParams::real(0.2, 0.3).unwrap();
        let s = shift_relation_residuals(0.5, &params, &cfg()).unwrap();
        for v in [s.alpha, s.alpha_p, s.beta, s.beta_p, s.gamma, s.gamma_p] {
            assert!(v < 1e-12, "{s:?}");
        }
        assert!(s.beta_against_alpha > 1e-3);
    }

    #[test]
    fn psi_law_on_lifted_heights() {
        let params = EllipticParams::real(0.2, 0.4).unwrap();
        let mut printed_worst = 0.0f64;
        for v in ColoredVertexKind::all() {
            for phi in [0.5, -1.2] {
                let lifted =
                    psi_law_residual(v, c(phi), &params, &cfg(), PsiConvention::Lifted).unwrap();
                assert!(lifted < 1e-9, "{v:?} {lifted}");
                printed_worst = printed_worst.max(
                    psi_law_residual(v, c(phi), &params, &cfg(), PsiConvention::Printed).unwrap(),
                );
            }
        }
        assert!(printed_worst > 1e-3);
    }

    #[test]
    fn branch_error_off_the_real_domain() {
        let params = EllipticParams::new(c(0.2), Complex64::new(0.4, 0.8)).unwrap();
        let r = raw_weight(
            ColoredVertexKind::new(VertexKind::Alpha, Color::ZERO),
            c(0.1),
            &params,
            &cfg(),
        );
        assert!(matches!(r, Err(Error::BranchDomain(_))));
    }
}
