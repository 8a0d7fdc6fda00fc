//! Yang-Baxter checks for face weights, gauge transformations and the chain from the raw
//! weights to the theta1-only weights.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::Serialize;

use crate::color::Color;
use crate::coloring::{ColoredVertexKind, ColoredWeights, WeightFamily3c, ZetaLogs};
use crate::error::{Error, Result};
use crate::numeric::residual;
use crate::sixvertex::{weight6v, VertexKind};
use crate::theta::{
    color_shift, nonzero, theta1, theta1_reduced, zeta, EllipticParams, SeriesConfig,
};

const I: Complex64 = Complex64::new(0.0, 1.0);
const ZERO: Complex64 = Complex64::new(0.0, 0.0);

/// Third spectral argument of the Yang-Baxter equation: `phi - phi' - shift`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub enum YbeForm {
    Shifted(f64),
    Difference,
}

impl YbeForm {
    pub fn shift(self) -> f64 {
        match self {
            YbeForm::Shifted(s) => s,
            YbeForm::Difference => 0.0,
        }
    }
}

/// A face model: weights `W^{r' s'}_{r s}(phi)` with `r'` top-left, `s'` top-right,
/// `s` bottom-right and `r` bottom-left.
pub trait FaceWeights {
    fn vertex_weight(&self, v: ColoredVertexKind, phi: Complex64) -> Result<Complex64>;

    fn ybe_form(&self) -> YbeForm;

    /// Zero for patterns that are not proper colorings.
    fn face_weight(
        &self,
        tl: Color,
        tr: Color,
        br: Color,
        bl: Color,
        phi: Complex64,
    ) -> Result<Complex64> {
        match ColoredVertexKind::classify(tl, tr, br, bl) {
            Some(v) => self.vertex_weight(v, phi),
            None => Ok(ZERO),
        }
    }
}

impl<F: FaceWeights + ?Sized> FaceWeights for &F {
    fn vertex_weight(&self, v: ColoredVertexKind, phi: Complex64) -> Result<Complex64> {
        (**self).vertex_weight(v, phi)
    }

    fn ybe_form(&self) -> YbeForm {
        (**self).ybe_form()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct YbeResult {
    /// Largest normalised difference between the two sides.
    pub residual: f64,
    /// Boundary assignments where every triple product vanishes.
    pub skipped: usize,
    pub evaluated: usize,
}

/// Sweeps all `3^6` outer colorings of
///
/// ```text
/// sum_t W^{r''s''}_{r't}(phi) W^{r't}_{rs}(phi') W^{s''s'}_{ts}(phi3)
///   = sum_t W^{r''t}_{r'r}(phi3) W^{r''s''}_{ts'}(phi') W^{ts'}_{rs}(phi)
/// ```
///
/// with `phi3 = phi - phi' - shift`, normalising each difference by the largest triple product.
pub fn ybe_residual<F: FaceWeights + ?Sized>(fam: &F, phi: f64, phi_p: f64) -> Result<YbeResult> {
    let args = [phi, phi_p, phi - phi_p - fam.ybe_form().shift()];
    let mut table = [[ZERO; 18]; 3];
    for (a, row) in args.iter().zip(table.iter_mut()) {
        for v in ColoredVertexKind::all() {
            row[v.index()] = fam.vertex_weight(v, Complex64::new(*a, 0.0))?;
        }
    }
    // W^{r' s'}_{r s}(args[a])
    let w = |a: usize, rp: Color, sp: Color, r: Color, s: Color| -> Complex64 {
        ColoredVertexKind::classify(rp, sp, s, r).map_or(ZERO, |v| table[a][v.index()])
    };
    let mut out = YbeResult {
        residual: 0.0,
        skipped: 0,
        evaluated: 0,
    };
    for code in 0..729usize {
        let c = |k: u32| Color::from_int((code / 3usize.pow(k) % 3) as i64);
        let (r2, s2, r1, s1, r, s) = (c(0), c(1), c(2), c(3), c(4), c(5));
        let (mut lhs, mut rhs, mut scale) = (ZERO, ZERO, 0.0f64);
        for t in Color::ALL {
            let a = w(0, r2, s2, r1, t) * w(1, r1, t, r, s) * w(2, s2, s1, t, s);
            let b = w(2, r2, t, r1, r) * w(1, r2, s2, t, s1) * w(0, t, s1, r, s);
            lhs += a;
            rhs += b;
            scale = scale.max(a.norm()).max(b.norm());
        }
        if scale == 0.0 {
            out.skipped += 1;
            continue;
        }
        out.evaluated += 1;
        out.residual = out.residual.max((lhs - rhs).norm() / scale);
    }
    Ok(out)
}

/// The raw or gauge-reduced three-coloring weights.
#[derive(Debug, Clone)]
pub struct ThreeColoringFamily(pub ColoredWeights);

impl ThreeColoringFamily {
    pub fn new(
        family: WeightFamily3c,
        params: &EllipticParams,
        cfg: &SeriesConfig,
    ) -> Result<Self> {
        Ok(ThreeColoringFamily(ColoredWeights::new(
            family, params, cfg,
        )?))
    }
}

impl FaceWeights for ThreeColoringFamily {
    fn vertex_weight(&self, v: ColoredVertexKind, phi: Complex64) -> Result<Complex64> {
        self.0.weight(v, phi)
    }

    fn ybe_form(&self) -> YbeForm {
        YbeForm::Shifted(PI / 3.0)
    }
}

/// Trigonometric six-vertex weights read as a face model through the color differences.
#[derive(Debug, Clone, Copy)]
pub struct SixVertexTrig {
    pub eta: f64,
}

impl FaceWeights for SixVertexTrig {
    fn vertex_weight(&self, v: ColoredVertexKind, phi: Complex64) -> Result<Complex64> {
        weight6v(v.kind, phi, self.eta)
    }

    fn ybe_form(&self) -> YbeForm {
        YbeForm::Shifted(self.eta / 2.0)
    }
}

/// Logarithms of `zeta_r` continued along `lambda + t pi tau / 2`, `t` in `[0, 1]`, from the
/// real logarithms at `t = 0`. At `t = 1` they are logarithms of the theta1-based `zeta_r(lambda)`.
pub fn continuation_logs(params: &EllipticParams, cfg: &SeriesConfig) -> Result<ZetaLogs> {
    const STEPS: usize = 128;
    let start = ZetaLogs::principal(params, cfg)?;
    let half = params.quasi_period()? / 2.0;
    let mut logs = start.0;
    let mut prev = [ZERO; 3];
    for r in Color::ALL {
        prev[r.index()] = zeta(r, params, cfg)?;
    }
    for i in 1..=STEPS {
        let here = params.with_lambda(params.lambda() + half * (i as f64 / STEPS as f64));
        for r in Color::ALL {
            let z = zeta(r, &here, cfg)?;
            let step = (z / prev[r.index()]).ln();
            if step.im.abs() > PI / 4.0 {
                return Err(Error::BranchDomain(format!(
                    "zeta_{r} winds too fast along the continuation path"
                )));
            }
            logs[r.index()] += step;
            prev[r.index()] = z;
        }
    }
    Ok(ZetaLogs(logs))
}

/// The theta1-only weights obtained from the raw ones by `lambda -> lambda + pi tau / 2`,
/// `phi -> -phi - pi/3`, written out directly.
#[derive(Debug, Clone)]
pub struct HalfPeriodFamily {
    params: EllipticParams,
    cfg: SeriesConfig,
    logs: ZetaLogs,
    theta1_2pi3: Complex64,
    theta1_base: [Complex64; 3],
}

impl HalfPeriodFamily {
    pub fn new(params: &EllipticParams, cfg: &SeriesConfig) -> Result<Self> {
        Self::with_logs(params, cfg, continuation_logs(params, cfg)?)
    }

    pub fn with_logs(params: &EllipticParams, cfg: &SeriesConfig, logs: ZetaLogs) -> Result<Self> {
        let theta1_2pi3 = theta1_reduced(Complex64::new(2.0 * PI / 3.0, 0.0), params, cfg)?;
        let mut theta1_base = [ZERO; 3];
        for r in Color::ALL {
            let v = theta1_reduced(color_shift(params.lambda(), r.as_i64()), params, cfg)?;
            theta1_base[r.index()] = nonzero(v, || format!("theta1(lambda + 2pi*{r}/3)"))?;
        }
        Ok(HalfPeriodFamily {
            params: *params,
            cfg: *cfg,
            logs,
            theta1_2pi3,
            theta1_base,
        })
    }

    pub fn logs(&self) -> ZetaLogs {
        self.logs
    }

    fn t1(&self, x: Complex64) -> Result<Complex64> {
        theta1_reduced(x, &self.params, &self.cfg)
    }
}

impl FaceWeights for HalfPeriodFamily {
    fn vertex_weight(&self, v: ColoredVertexKind, phi: Complex64) -> Result<Complex64> {
        let r = v.r;
        let z = |c: Color, e: Complex64| self.logs.power(c, e);
        let two_thirds = Complex64::new(2.0 * PI / 3.0, 0.0);
        let x = color_shift(self.params.lambda(), r.as_i64());
        let base = self.theta1_base[r.index()];
        let e_g = phi / (2.0 * PI);
        Ok(match v.kind {
            VertexKind::Alpha | VertexKind::AlphaP => {
                z(r, -3.0 * phi / (4.0 * PI)) * self.t1(two_thirds + phi)? / self.theta1_2pi3
            }
            VertexKind::Beta | VertexKind::BetaP => {
                -z(r, 0.5 + 3.0 * phi / (4.0 * PI)) * self.t1(phi)? / self.theta1_2pi3
            }
            VertexKind::Gamma => {
                (I * phi).exp() * z(r, e_g) / z(r + 1, e_g) * self.t1(x - phi)? / base
            }
            VertexKind::GammaP => {
                (-I * phi).exp() * z(r, e_g) / z(r - 1, e_g) * self.t1(x + phi)? / base
            }
        })
    }

    fn ybe_form(&self) -> YbeForm {
        YbeForm::Difference
    }
}

/// Raw weights at `lambda + pi tau / 2` evaluated at `-phi - pi/3`, with continued logarithms.
#[derive(Debug, Clone)]
pub struct SubstitutedRaw(ColoredWeights);

impl FaceWeights for SubstitutedRaw {
    fn vertex_weight(&self, v: ColoredVertexKind, phi: Complex64) -> Result<Complex64> {
        self.0.weight(v, -phi - PI / 3.0)
    }

    fn ybe_form(&self) -> YbeForm {
        YbeForm::Difference
    }
}

pub fn half_period_substitution(
    params: &EllipticParams,
    cfg: &SeriesConfig,
) -> Result<SubstitutedRaw> {
    let logs = continuation_logs(params, cfg)?;
    let moved = params.with_lambda(params.lambda() + params.quasi_period()? / 2.0);
    Ok(SubstitutedRaw(ColoredWeights::with_logs(
        WeightFamily3c::Raw,
        &moved,
        cfg,
        logs,
    )?))
}

/// Largest residual between the substituted raw weights and the written-out theta1 weights.
pub fn half_period_substitution_residual(
    phi: f64,
    params: &EllipticParams,
    cfg: &SeriesConfig,
) -> Result<f64> {
    let sub = half_period_substitution(params, cfg)?;
    let app = HalfPeriodFamily::new(params, cfg)?;
    let phi = Complex64::new(phi, 0.0);
    let mut worst = 0.0f64;
    for v in ColoredVertexKind::all() {
        worst = worst.max(residual(
            sub.vertex_weight(v, phi)?,
            app.vertex_weight(v, phi)?,
            0.0,
        ));
    }
    Ok(worst)
}

/// Closed-form theta1 weights with `theta1(lambda + 2 pi r / 3)` ratios on the beta kinds.
#[derive(Debug, Clone)]
pub struct Theta1Family {
    params: EllipticParams,
    cfg: SeriesConfig,
    beta_sign: f64,
}

impl Theta1Family {
    pub fn new(params: &EllipticParams, cfg: &SeriesConfig) -> Self {
        Self::with_beta_sign(params, cfg, 1.0)
    }

    /// Multiplies both beta kinds by `beta_sign`.
    pub fn with_beta_sign(params: &EllipticParams, cfg: &SeriesConfig, beta_sign: f64) -> Self {
        Theta1Family {
            params: *params,
            cfg: *cfg,
            beta_sign,
        }
    }
}

impl FaceWeights for Theta1Family {
    fn vertex_weight(&self, v: ColoredVertexKind, phi: Complex64) -> Result<Complex64> {
        let t1 = |x: Complex64| theta1_reduced(x, &self.params, &self.cfg);
        let x = |k: i64| color_shift(self.params.lambda(), k);
        let arg = Complex64::new(2.0 * PI / 3.0, 0.0);
        let two_thirds = t1(arg)?;
        let r = v.r.as_i64();
        let base = nonzero(t1(x(r))?, || format!("theta1(lambda + 2pi*{r}/3)"))?;
        Ok(match v.kind {
            VertexKind::Alpha | VertexKind::AlphaP => t1(arg + phi)? / two_thirds,
            VertexKind::Beta => self.beta_sign * t1(x(r - 1))? / base * t1(phi)? / two_thirds,
            VertexKind::BetaP => self.beta_sign * t1(x(r + 1))? / base * t1(phi)? / two_thirds,
            VertexKind::Gamma => t1(x(r) - phi)? / base,
            VertexKind::GammaP => t1(x(r) + phi)? / base,
        })
    }

    fn ybe_form(&self) -> YbeForm {
        YbeForm::Difference
    }
}

/// `Phi_h(phi) = exp(log zeta_{h mod 3} (constant + linear phi) + i height_phase h phi)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PhiSpec {
    pub logs: ZetaLogs,
    pub constant: f64,
    pub linear: f64,
    pub height_phase: f64,
    /// Use the integer heights `r + offset` instead of representatives in `{0, 1, 2}`.
    pub lifted: bool,
}

impl PhiSpec {
    pub fn value(&self, h: i64, phi: Complex64) -> Complex64 {
        let log = self.logs.log(Color::from_int(h));
        (log * (self.constant + self.linear * phi) + I * self.height_phase * h as f64 * phi).exp()
    }
}

/// Constants `C_r` and functions `Phi_r` of a gauge transformation.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GaugeData {
    c: [Complex64; 3],
    phi: PhiSpec,
}

impl GaugeData {
    pub fn new(c: [Complex64; 3], phi: PhiSpec) -> Result<Self> {
        for r in Color::ALL {
            if c[r.index()].norm() == 0.0 {
                return Err(Error::ZeroGauge(r.value()));
            }
        }
        Ok(GaugeData { c, phi })
    }

    pub fn identity() -> Self {
        let phi = PhiSpec {
            logs: ZetaLogs([ZERO; 3]),
            constant: 0.0,
            linear: 0.0,
            height_phase: 0.0,
            lifted: false,
        };
        GaugeData {
            c: [Complex64::new(1.0, 0.0); 3],
            phi,
        }
    }

    /// `C_r = 1`, `Phi_r(phi) = zeta_r^(1/12 + phi/4pi)`: raw weights to the gauge-reduced ones.
    pub fn reducing(params: &EllipticParams, cfg: &SeriesConfig) -> Result<Self> {
        let phi = PhiSpec {
            logs: ZetaLogs::principal(params, cfg)?,
            constant: 1.0 / 12.0,
            linear: 1.0 / (4.0 * PI),
            height_phase: 0.0,
            lifted: false,
        };
        Ok(GaugeData {
            c: [Complex64::new(1.0, 0.0); 3],
            phi,
        })
    }

    /// `C_r = i / sqrt(theta1(lambda + 2 pi r / 3))`, `Phi_h(phi) = e^{i h phi / 2} zeta_h^(-phi/4pi)`
    /// on lifted heights, with the continued logarithms.
    pub fn theta1_reducing(params: &EllipticParams, cfg: &SeriesConfig) -> Result<Self> {
        let mut c = [ZERO; 3];
        for r in Color::ALL {
            let t = theta1(color_shift(params.lambda(), r.as_i64()), params, cfg)?;
            if t.im.abs() > 1e-12 * t.norm() {
                return Err(Error::BranchDomain(format!(
                    "theta1(lambda + 2pi*{r}/3) = {t} is not real"
                )));
            }
            c[r.index()] = I / nonzero(t, || format!("theta1(lambda + 2pi*{r}/3)"))?.sqrt();
        }
        let phi = PhiSpec {
            logs: continuation_logs(params, cfg)?,
            constant: 0.0,
            linear: -1.0 / (4.0 * PI),
            height_phase: 0.5,
            lifted: true,
        };
        GaugeData::new(c, phi)
    }

    pub fn c(&self, r: Color) -> Complex64 {
        self.c[r.index()]
    }

    pub fn phi_spec(&self) -> &PhiSpec {
        &self.phi
    }

    fn heights(&self, v: ColoredVertexKind) -> [i64; 4] {
        if self.phi.lifted {
            v.lifted_heights()
        } else {
            v.face_colors().map(Color::as_i64)
        }
    }

    /// `(C_bl / C_tr) Phi_tl Phi_br / (Phi_bl Phi_tr)`.
    pub fn factor(&self, v: ColoredVertexKind, phi: Complex64) -> Complex64 {
        let [tl, tr, br, bl] = self.heights(v);
        let f = |h: i64| self.phi.value(h, phi);
        let colors = v.face_colors();
        self.c(colors[3]) / self.c(colors[1]) * f(tl) * f(br) / (f(bl) * f(tr))
    }

    /// Residual of `Phi_h(phi - phi' - shift) = Phi_h(phi) / Phi_h(phi')` over heights `-1..=3`.
    pub fn constraint_residual(&self, form: YbeForm, phi: f64, phi_p: f64) -> f64 {
        let c = |x: f64| Complex64::new(x, 0.0);
        (-1..=3)
            .map(|h| {
                let lhs = self.phi.value(h, c(phi - phi_p - form.shift()));
                residual(
                    lhs,
                    self.phi.value(h, c(phi)) / self.phi.value(h, c(phi_p)),
                    0.0,
                )
            })
            .fold(0.0, f64::max)
    }
}

/// How the beta entries of the per-kind gauge formulas are read.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum BetaGaugeReading {
    /// `Phi_r^2 / (Phi_{r-1} Phi_{r+1})`, which is what the general rule gives.
    Consistent,
    /// `Phi_r^2 / (Phi_{r-1}^{-1} Phi_{r+1})`.
    Printed,
}

/// Per-kind gauge factors written out in terms of `Phi_{r-1}, Phi_r, Phi_{r+1}`.
pub fn explicit_gauge_factor(
    g: &GaugeData,
    v: ColoredVertexKind,
    phi: Complex64,
    reading: BetaGaugeReading,
) -> Complex64 {
    let r = v.r.as_i64();
    let f = |h: i64| {
        let h = if g.phi.lifted { h } else { h.rem_euclid(3) };
        g.phi.value(h, phi)
    };
    let (lo, mid, hi) = (f(r - 1), f(r), f(r + 1));
    let c = |k: i64| g.c(v.r + k);
    let beta_phi = match reading {
        BetaGaugeReading::Consistent => mid * mid / (lo * hi),
        BetaGaugeReading::Printed => mid * mid * lo / hi,
    };
    match v.kind {
        VertexKind::Alpha | VertexKind::AlphaP => lo * hi / (mid * mid),
        VertexKind::Beta => c(1) / c(-1) * beta_phi,
        VertexKind::BetaP => c(-1) / c(1) * beta_phi,
        VertexKind::Gamma => mid * mid / (hi * hi),
        VertexKind::GammaP => mid * mid / (lo * lo),
    }
}

/// A family multiplied by a gauge transformation.
#[derive(Debug, Clone)]
pub struct Gauged<F> {
    pub inner: F,
    pub gauge: GaugeData,
}

pub fn gauge_transform<F: FaceWeights>(inner: F, gauge: GaugeData) -> Gauged<F> {
    Gauged { inner, gauge }
}

impl<F: FaceWeights> FaceWeights for Gauged<F> {
    fn vertex_weight(&self, v: ColoredVertexKind, phi: Complex64) -> Result<Complex64> {
        Ok(self.gauge.factor(v, phi) * self.inner.vertex_weight(v, phi)?)
    }

    fn ybe_form(&self) -> YbeForm {
        self.inner.ybe_form()
    }
}

/// Largest residual between two families over all 18 colored kinds at one point.
pub fn family_residual<A: FaceWeights + ?Sized, B: FaceWeights + ?Sized>(
    a: &A,
    b: &B,
    phi: f64,
) -> Result<f64> {
    let phi = Complex64::new(phi, 0.0);
    let mut worst = 0.0f64;
    for v in ColoredVertexKind::all() {
        worst = worst.max(residual(
            a.vertex_weight(v, phi)?,
            b.vertex_weight(v, phi)?,
            0.0,
        ));
    }
    Ok(worst)
}

/// Comparison of the gauge-transformed theta1 weights with the closed-form target.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Theta1Match {
    /// All 18 colored kinds compared literally.
    pub literal: f64,
    /// Alpha and gamma kinds only.
    pub non_beta: f64,
    /// Beta kinds through `beta beta'` and `beta / beta'`, which are blind to a common sign.
    pub beta_sign_free: f64,
    /// `prod_r beta_r(gauged) / beta_r(target)`; every gauge leaves `prod_r beta_r` unchanged.
    pub beta_sign_product: Complex64,
}

pub fn theta1_match(phi: f64, params: &EllipticParams, cfg: &SeriesConfig) -> Result<Theta1Match> {
    let gauged = gauge_transform(
        HalfPeriodFamily::new(params, cfg)?,
        GaugeData::theta1_reducing(params, cfg)?,
    );
    let target = Theta1Family::new(params, cfg);
    let z = Complex64::new(phi, 0.0);
    let mut out = Theta1Match {
        literal: 0.0,
        non_beta: 0.0,
        beta_sign_free: 0.0,
        beta_sign_product: Complex64::new(1.0, 0.0),
    };
    for v in ColoredVertexKind::all() {
        let (g, t) = (gauged.vertex_weight(v, z)?, target.vertex_weight(v, z)?);
        let d = residual(g, t, 0.0);
        out.literal = out.literal.max(d);
        if !matches!(v.kind, VertexKind::Beta | VertexKind::BetaP) {
            out.non_beta = out.non_beta.max(d);
        }
    }
    for r in Color::ALL {
        let w =
            |f: &dyn FaceWeights, k: VertexKind| f.vertex_weight(ColoredVertexKind::new(k, r), z);
        let (gb, gp) = (
            w(&gauged, VertexKind::Beta)?,
            w(&gauged, VertexKind::BetaP)?,
        );
        let (tb, tp) = (
            w(&target, VertexKind::Beta)?,
            w(&target, VertexKind::BetaP)?,
        );
        out.beta_sign_free = out
            .beta_sign_free
            .max(residual(gb * gp, tb * tp, 0.0))
            .max(residual(gb / gp, tb / tp, 0.0));
        out.beta_sign_product *= gb / tb;
    }
    Ok(out)
}
