//! Domain-wall partition functions of the three-coloring model and their identities.

use std::f64::consts::PI;
use std::sync::{Arc, OnceLock};

use num_complex::Complex64;
use serde::Serialize;

use super::{
    enumerate_dwbc_colorings, ColoredVertexKind, ColoredWeights, WeightFamily3c, ZetaLogs,
    MAX_DWBC_COLORING_N,
};
use crate::color::Color;
use crate::error::{Error, Result};
use crate::numeric::{residual, sorted_sum, Accumulated};
use crate::sixvertex::{FunctionalSum, RecursionCheck};
use crate::spectral::{parity, Side, Sign, SpectralAssignment};
use crate::theta::{
    color_shift, cubic_factor_d, nonzero, theta1, theta4, EllipticParams, SeriesConfig,
};

const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// Vertex patterns of every DWBC coloring with a given corner color, row-major per coloring.
#[derive(Debug)]
pub struct DwbcVertexTable {
    pub n: usize,
    pub corner: Color,
    pub vertices: Vec<Vec<ColoredVertexKind>>,
}

impl DwbcVertexTable {
    /// Shared, lazily built table.
    pub fn get(n: usize, corner: Color) -> Result<Arc<DwbcVertexTable>> {
        type Slot = OnceLock<Arc<DwbcVertexTable>>;
        static CACHE: [[Slot; 3]; MAX_DWBC_COLORING_N + 1] =
            [const { [const { OnceLock::new() }; 3] }; MAX_DWBC_COLORING_N + 1];
        if n == 0 || n > MAX_DWBC_COLORING_N {
            // let the enumerator produce the guard error
            enumerate_dwbc_colorings(n, corner)?;
        }
        let slot = &CACHE[n][corner.index()];
        if let Some(t) = slot.get() {
            return Ok(t.clone());
        }
        let colorings = enumerate_dwbc_colorings(n, corner)?;
        let vertices = colorings
            .iter()
            .map(|g| {
                (0..n * n)
                    .map(|x| {
                        let (i, j) = (x / n, x % n);
                        ColoredVertexKind::classify(
                            g.get(i, j),
                            g.get(i, j + 1),
                            g.get(i + 1, j + 1),
                            g.get(i + 1, j),
                        )
                        .expect("valid coloring")
                    })
                    .collect()
            })
            .collect();
        Ok(slot
            .get_or_init(|| {
                Arc::new(DwbcVertexTable {
                    n,
                    corner,
                    vertices,
                })
            })
            .clone())
    }
}

/// Per-coloring products of vertex weights for corner color `r`; vertex `(i, j)` gets
/// `chi_i - psi_j`.
fn state_products<F>(r: Color, assign: &SpectralAssignment, mut weight: F) -> Result<Vec<Complex64>>
where
    F: FnMut(ColoredVertexKind, f64) -> Result<Complex64>,
{
    let n = assign.n();
    if n == 0 {
        return Ok(vec![ONE]);
    }
    let table = DwbcVertexTable::get(n, r)?;
    let mut cache: Vec<Option<Complex64>> = vec![None; n * n * 18];
    let mut out = Vec::with_capacity(table.vertices.len());
    for vertices in &table.vertices {
        let mut prod = ONE;
        for (x, &v) in vertices.iter().enumerate() {
            let slot = &mut cache[x * 18 + v.index()];
            let w = match slot {
                Some(w) => *w,
                None => {
                    let w = weight(v, assign.spectral(x / n, x % n))?;
                    *slot = Some(w);
                    w
                }
            };
            prod *= w;
        }
        out.push(prod);
    }
    Ok(out)
}

/// `Z^r_n` for an arbitrary weight function; `Z^r_0 = 1`.
pub fn partial_partition_with<F>(
    r: Color,
    assign: &SpectralAssignment,
    weight: F,
) -> Result<Complex64>
where
    F: FnMut(ColoredVertexKind, f64) -> Result<Complex64>,
{
    Ok(sorted_sum(&state_products(r, assign, weight)?).sum)
}

/// Sum over DWBC colorings whose top-left face has color `r`.
pub fn partial_partition_function(
    r: Color,
    assign: &SpectralAssignment,
    family: WeightFamily3c,
    params: &EllipticParams,
    cfg: &SeriesConfig,
) -> Result<Complex64> {
    Ok(partial_partition_accumulated(r, assign, family, params, cfg)?.sum)
}

/// [`partial_partition_function`] together with its largest coloring weight.
pub fn partial_partition_accumulated(
    r: Color,
    assign: &SpectralAssignment,
    family: WeightFamily3c,
    params: &EllipticParams,
    cfg: &SeriesConfig,
) -> Result<Accumulated> {
    let w = ColoredWeights::new(family, params, cfg)?;
    Ok(sorted_sum(&state_products(r, assign, |v, phi| {
        w.weight(v, Complex64::new(phi, 0.0))
    })?))
}

pub fn total_partition_function(
    assign: &SpectralAssignment,
    family: WeightFamily3c,
    params: &EllipticParams,
    cfg: &SeriesConfig,
) -> Result<Complex64> {
    let w = ColoredWeights::new(family, params, cfg)?;
    let mut parts = Vec::with_capacity(3);
    for r in Color::ALL {
        parts.push(partial_partition_with(r, assign, |v, phi| {
            w.weight(v, Complex64::new(phi, 0.0))
        })?);
    }
    Ok(sorted_sum(&parts).sum)
}

/// How the boundary gauge factor relating `tilde Z^r_n` to `Z^r_n` is evaluated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum PhiRatioForm {
    /// `prod_i [Phi_{r+i-1} / Phi_{r+i}](x_i + y_i)`; exact only when `n` is a multiple of three.
    Printed,
    /// `prod_i [Phi_{r+i-1}(x_i) Phi_{r+i-1}(y_i)] / [Phi_{r+i}(x_i) Phi_{r+i}(y_i)]`.
    Split,
}

/// Residual of `tilde Z^r_n = G * Z^r_n`, with `x_i = chi_i - psi_i`, `y_i = x_{n-i+1}` and
/// `Phi_h(phi) = zeta_h^(1/12 + phi/4pi)` entering `G` as selected by `form`.
pub fn phi_ratio_relation_check(
    r: Color,
    assign: &SpectralAssignment,
    form: PhiRatioForm,
    params: &EllipticParams,
    cfg: &SeriesConfig,
) -> Result<f64> {
    let logs = ZetaLogs::principal(params, cfg)?;
    let n = assign.n();
    let phi = |h: Color, x: f64| logs.power(h, Complex64::new(1.0 / 12.0 + x / (4.0 * PI), 0.0));
    let ratio = |i: usize, x: f64| phi(r + (i as i64 - 1), x) / phi(r + i as i64, x);
    let mut factor = ONE;
    for i in 1..=n {
        let (x, y) = (assign.spectral(i - 1, i - 1), assign.spectral(n - i, n - i));
        factor *= match form {
            PhiRatioForm::Printed => ratio(i, x + y),
            PhiRatioForm::Split => ratio(i, x) * ratio(i, y),
        };
    }
    let tilde = partial_partition_function(r, assign, WeightFamily3c::Tilde, params, cfg)?;
    let raw = partial_partition_function(r, assign, WeightFamily3c::Raw, params, cfg)?;
    Ok(residual(tilde, factor * raw, 0.0))
}

/// `prod_{i<j} theta1(chi_i - chi_j) prod_{i,j} theta1(chi_i - psi_j) prod_{i<j} theta1(psi_i - psi_j)`.
fn theta_prefactor(
    assign: &SpectralAssignment,
    params: &EllipticParams,
    cfg: &SeriesConfig,
) -> Result<Complex64> {
    let n = assign.n();
    let t1 = |x: f64| theta1(Complex64::new(x, 0.0), params, cfg);
    let mut v = ONE;
    for i in 0..n {
        for j in 0..n {
            v *= t1(assign.chi[i] - assign.psi[j])?;
            if i < j {
                v *= t1(assign.chi[i] - assign.chi[j])? * t1(assign.psi[i] - assign.psi[j])?;
            }
        }
    }
    Ok(v)
}

fn f_denominator(
    r: Color,
    n: usize,
    params: &EllipticParams,
    cfg: &SeriesConfig,
) -> Result<Complex64> {
    let k = r.as_i64() + n as i64;
    nonzero(
        theta4(color_shift(params.lambda(), k), params, cfg)?,
        || format!("theta4(lambda + 2pi*{k}/3)"),
    )
}

/// `F^r_n = theta_prefactor * tilde Z^r_n / theta4(lambda + 2 pi (r + n) / 3)`.
pub fn f_rn(
    r: Color,
    assign: &SpectralAssignment,
    params: &EllipticParams,
    cfg: &SeriesConfig,
) -> Result<Complex64> {
    Ok(f_rn_accumulated(r, assign, params, cfg)?.sum)
}

fn f_rn_accumulated(
    r: Color,
    assign: &SpectralAssignment,
    params: &EllipticParams,
    cfg: &SeriesConfig,
) -> Result<Accumulated> {
    let z = partial_partition_accumulated(r, assign, WeightFamily3c::Tilde, params, cfg)?;
    Ok(
        z.scaled(
            theta_prefactor(assign, params, cfg)? / f_denominator(r, assign.n(), params, cfg)?,
        ),
    )
}

/// Residual of `F^{r+1}_n(lambda) = F^r_n(lambda + 2 pi / 3)`.
pub fn f_shift_law_residual(
    r: Color,
    assign: &SpectralAssignment,
    params: &EllipticParams,
    cfg: &SeriesConfig,
) -> Result<f64> {
    let moved = params.with_lambda(params.lambda() + 2.0 * PI / 3.0);
    Ok(residual(
        f_rn(r + 1, assign, params, cfg)?,
        f_rn(r, assign, &moved, cfg)?,
        0.0,
    ))
}

/// Behaviour of the summands of `F^r_n` under `chi_i -> chi_i + pi`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PiShiftCheck {
    /// Ratio shifted/unshifted of the first non-vanishing summand.
    pub common_factor: Complex64,
    /// Largest deviation of any other summand ratio from `common_factor`.
    pub summand_spread: f64,
    /// Residual of `F(shifted) = common_factor * F`.
    pub total_residual: f64,
}

pub fn f_pi_shift_check(
    r: Color,
    assign: &SpectralAssignment,
    i: usize,
    params: &EllipticParams,
    cfg: &SeriesConfig,
) -> Result<PiShiftCheck> {
    assign.check_index(i, "chi")?;
    let w = ColoredWeights::new(WeightFamily3c::Tilde, params, cfg)?;
    let shifted = assign.with_chi(i, assign.chi[i] + PI);
    let terms = |a: &SpectralAssignment| -> Result<Vec<Complex64>> {
        let pre = theta_prefactor(a, params, cfg)?;
        Ok(
            state_products(r, a, |v, phi| w.weight(v, Complex64::new(phi, 0.0)))?
                .into_iter()
                .map(|t| pre * t)
                .collect(),
        )
    };
    let before = terms(assign)?;
    let after = terms(&shifted)?;
    let scale = before.iter().map(|t| t.norm()).fold(0.0, f64::max);
    let ratios: Vec<Complex64> = before
        .iter()
        .zip(&after)
        .filter(|(b, _)| b.norm() > 1e-12 * scale)
        .map(|(b, a)| a / b)
        .collect();
    let common = *ratios
        .first()
        .ok_or_else(|| Error::InvalidParameter("every summand vanishes at this point".into()))?;
    let spread = ratios
        .iter()
        .map(|q| (q - common).norm())
        .fold(0.0, f64::max);
    let total = residual(
        sorted_sum(&after).sum,
        common * sorted_sum(&before).sum,
        scale,
    );
    Ok(PiShiftCheck {
        common_factor: common,
        summand_spread: spread,
        total_residual: total,
    })
}

/// `S^r_{n,k} = sum_s F^{r+s}_n` with `chi_k + 2 pi s / 3` or `psi_k - 2 pi s / 3`.
pub fn functional_sum_3c(
    r: Color,
    k: usize,
    side: Side,
    assign: &SpectralAssignment,
    params: &EllipticParams,
    cfg: &SeriesConfig,
) -> Result<FunctionalSum> {
    assign.check_index(k, "shift")?;
    let step = match side {
        Side::Chi => 2.0 * PI / 3.0,
        Side::Psi => -2.0 * PI / 3.0,
    };
    let mut terms = [ONE; 3];
    for (s, t) in terms.iter_mut().enumerate() {
        let a = assign.shifted(side, k, step * s as f64);
        *t = f_rn(r + s as i64, &a, params, cfg)?;
    }
    Ok(FunctionalSum::from_terms(terms))
}

/// `F^r_1 = theta1(phi) theta4(lambda + phi + 2 pi (r + 1/2) / 3) / [theta4(lambda + 2 pi (r+1) / 3) theta4(lambda + 2 pi r / 3)]`.
pub fn f_one_closed_form(
    r: Color,
    phi: f64,
    params: &EllipticParams,
    cfg: &SeriesConfig,
) -> Result<Complex64> {
    let lambda = params.lambda();
    let phi = Complex64::new(phi, 0.0);
    let rr = r.as_i64() as f64;
    let num = theta1(phi, params, cfg)?
        * theta4(lambda + phi + 2.0 * PI * (rr + 0.5) / 3.0, params, cfg)?;
    let den = theta4(color_shift(lambda, r.as_i64() + 1), params, cfg)?
        * theta4(color_shift(lambda, r.as_i64()), params, cfg)?;
    Ok(num / nonzero(den, || "theta4 product".into())?)
}

/// The three terms of `S^0_{1,1}(phi)` written out with explicit theta arguments.
pub fn f_one_terms(
    phi: f64,
    params: &EllipticParams,
    cfg: &SeriesConfig,
) -> Result<[Complex64; 3]> {
    let lambda = params.lambda();
    let c = |x: f64| Complex64::new(x, 0.0);
    let t1 = |x: f64| theta1(c(x), params, cfg);
    let t4 = |x: f64| theta4(lambda + x, params, cfg);
    Ok([
        t1(phi)? * t4(phi + PI / 3.0)? / (t4(2.0 * PI / 3.0)? * t4(0.0)?),
        t1(phi + 2.0 * PI / 3.0)? * t4(phi + 5.0 * PI / 3.0)?
            / (t4(4.0 * PI / 3.0)? * t4(2.0 * PI / 3.0)?),
        t1(phi + 4.0 * PI / 3.0)? * t4(phi + 3.0 * PI)? / (t4(2.0 * PI)? * t4(4.0 * PI / 3.0)?),
    ])
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Recursion3c {
    /// `tilde Z^r_n` at `chi_k = psi_l + pi/3` (plus, same `r`) or `psi_l - pi/3` (minus, `r + 1`).
    Z,
    /// `F^r_n` at the same specialisations.
    F,
}

/// Specialises `chi_k` against `psi_l` and compares with the `(n-1)`-lattice.
///
/// The `F` form carries a factor `(-1)^(k+l)`, trivial on the diagonal.
pub fn check_recursion_3c(
    r: Color,
    k: usize,
    l: usize,
    sign: Sign,
    form: Recursion3c,
    assign: &SpectralAssignment,
    params: &EllipticParams,
    cfg: &SeriesConfig,
) -> Result<RecursionCheck> {
    assign.check_index(k, "chi")?;
    assign.check_index(l, "psi")?;
    let n = assign.n();
    let ni = n as i32;
    let s = sign.value();
    let at = assign.with_chi(k, assign.psi[l] + s * PI / 3.0);
    let reduced = at.without(k, l);
    let next_r = match sign {
        Sign::Plus => r,
        Sign::Minus => r + 1,
    };
    let c = |x: f64| Complex64::new(x, 0.0);
    let t1 = |x: f64| theta1(c(x), params, cfg);
    let t1_2pi3 = t1(2.0 * PI / 3.0)?;
    match form {
        Recursion3c::Z => {
            let lhs = partial_partition_accumulated(r, &at, WeightFamily3c::Tilde, params, cfg)?;
            let mut factor = t1_2pi3.powi(2 - 2 * ni);
            if sign == Sign::Plus {
                let lambda = params.lambda();
                let top = theta4(color_shift(lambda, r.as_i64() + n as i64), params, cfg)?;
                let bottom = theta4(color_shift(lambda, r.as_i64() + n as i64 - 1), params, cfg)?;
                factor *= top / nonzero(bottom, || "theta4(lambda + 2pi(r+n-1)/3)".into())?;
            }
            for i in (0..n).filter(|&i| i != k) {
                factor *= t1(at.chi[i] - at.psi[l] + s * PI / 3.0)?;
            }
            for i in (0..n).filter(|&i| i != l) {
                factor *= t1(at.psi[l] - at.psi[i] + s * 2.0 * PI / 3.0)?;
            }
            let rhs = partial_partition_accumulated(
                next_r,
                &reduced,
                WeightFamily3c::Tilde,
                params,
                cfg,
            )?
            .scaled(factor);
            Ok(RecursionCheck::new(lhs, rhs, 1.0))
        }
        Recursion3c::F => {
            let lhs = f_rn_accumulated(r, &at, params, cfg)?;
            let cubed = params.cubed();
            let t1c = |x: f64| theta1(c(3.0 * x), &cubed, cfg);
            let d = cubic_factor_d(params, cfg)?;
            let mut factor = s * parity(n - 1) * d.powi(2 * ni - 2) * t1_2pi3.powi(3 - 2 * ni);
            for i in (0..n).filter(|&i| i != k) {
                factor *= t1c(at.psi[l] - at.chi[i])?;
            }
            for i in (0..n).filter(|&i| i != l) {
                factor *= t1c(at.psi[l] - at.psi[i])?;
            }
            let printed = f_rn_accumulated(next_r, &reduced, params, cfg)?.scaled(factor);
            Ok(RecursionCheck::new(lhs, printed, parity(k + l)))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng;
    use crate::sixvertex::partition_function_6v;

    fn cfg() -> SeriesConfig {
        SeriesConfig::default()
    }

    fn point(seed: u64, n: usize) -> (SpectralAssignment, EllipticParams) {
        let mut g = rng::stream(seed, 3);
        let chi = rng::uniform_vec(&mut g, n, 0.0, PI);
        let psi = rng::uniform_vec(&mut g, n, 0.0, PI);
        let lambda = rng::uniform_vec(&mut g, 1, 0.05, PI / 3.0 - 0.05)[0];
        (
            SpectralAssignment::combinatorial(chi, psi).unwrap(),
            EllipticParams::real(0.2, lambda).unwrap(),
        )
    }

    #[test]
    fn n1_is_single_gamma() {
        let (a, params) = point(1, 1);
        let w = ColoredWeights::new(WeightFamily3c::Tilde, &params, &cfg()).unwrap();
        for r in Color::ALL {
            let z =
                partial_partition_function(r, &a, WeightFamily3c::Tilde, &params, &cfg()).unwrap();
            let g = w
                .weight(
                    ColoredVertexKind::new(crate::sixvertex::VertexKind::Gamma, r),
                    Complex64::new(a.spectral(0, 0), 0.0),
                )
                .unwrap();
            assert!((z - g).norm() < 1e-15);
        }
    }

    #[test]
    fn empty_lattice_conventions() {
        let a = SpectralAssignment::combinatorial(vec![], vec![]).unwrap();
        let params = EllipticParams::real(0.2, 0.3).unwrap();
        let z = partial_partition_function(Color::ONE, &a, WeightFamily3c::Tilde, &params, &cfg())
            .unwrap();
        assert_eq!(z, ONE);
        let f = f_rn(Color::ONE, &a, &params, &cfg()).unwrap();
        let expect =
            1.0 / theta4(Complex64::new(0.3 + 2.0 * PI / 3.0, 0.0), &params, &cfg()).unwrap();
        assert!((f - expect).norm() < 1e-15);
    }

    #[test]
    fn lambda_shift_of_partial_sums() {
        let (a, params) = point(2, 2);
        let moved = params.with_lambda(params.lambda() + 2.0 * PI / 3.0);
        for r in Color::ALL {
            let lhs = partial_partition_function(r + 1, &a, WeightFamily3c::Tilde, &params, &cfg())
                .unwrap();
            let rhs =
                partial_partition_function(r, &a, WeightFamily3c::Tilde, &moved, &cfg()).unwrap();
            assert!(residual(lhs, rhs, 0.0) < 1e-12);
        }
    }

    #[test]
    fn phi_ratio_relation() {
        for n in 1..=3 {
            let (a, params) = point(3 + n as u64, n);
            for r in Color::ALL {
                assert!(
                    phi_ratio_relation_check(r, &a, PhiRatioForm::Split, &params, &cfg()).unwrap()
                        < 1e-10
                );
                let printed =
                    phi_ratio_relation_check(r, &a, PhiRatioForm::Printed, &params, &cfg())
                        .unwrap();
                if n == 3 {
                    assert!(printed < 1e-10);
                } else {
                    assert!(printed > 1e-3);
                }
            }
        }
        let (a, _) = point(9, 2);
        let zero = EllipticParams::real(0.0, 0.3).unwrap();
        for form in [PhiRatioForm::Printed, PhiRatioForm::Split] {
            assert!(
                phi_ratio_relation_check(Color::ZERO, &a, form, &zero, &cfg()).unwrap() < 1e-14
            );
        }
    }

    #[test]
    fn phi_ratio_n1_is_gamma_gauge() {
        let (a, params) = point(10, 1);
        let logs = ZetaLogs::principal(&params, &cfg()).unwrap();
        let x = a.spectral(0, 0);
        for r in Color::ALL {
            let raw =
                partial_partition_function(r, &a, WeightFamily3c::Raw, &params, &cfg()).unwrap();
            let tilde =
                partial_partition_function(r, &a, WeightFamily3c::Tilde, &params, &cfg()).unwrap();
            let e = Complex64::new(1.0 / 6.0 + x / (2.0 * PI), 0.0);
            let g = logs.power(r, e) / logs.power(r + 1, e);
            assert!(residual(tilde, g * raw, 0.0) < 1e-13);
        }
    }

    #[test]
    fn symmetric_partial_sums() {
        let (a, params) = point(12, 3);
        let z = partial_partition_function(Color::TWO, &a, WeightFamily3c::Tilde, &params, &cfg())
            .unwrap();
        let mut b = a.clone();
        b.chi.swap(0, 1);
        b.psi.swap(0, 2);
        let zb = partial_partition_function(Color::TWO, &b, WeightFamily3c::Tilde, &params, &cfg())
            .unwrap();
        assert!(residual(z, zb, 0.0) < 1e-10);
    }

    #[test]
    fn f_one_and_shift_law() {
        let (a, params) = point(13, 1);
        for r in Color::ALL {
            let f = f_rn(r, &a, &params, &cfg()).unwrap();
            let closed = f_one_closed_form(r, a.spectral(0, 0), &params, &cfg()).unwrap();
            assert!(residual(f, closed, 0.0) < 1e-13);
        }
        let (a, params) = point(14, 2);
        for r in Color::ALL {
            assert!(f_shift_law_residual(r, &a, &params, &cfg()).unwrap() < 1e-10);
        }
        let mut b = a.clone();
        b.chi.swap(0, 1);
        let fa = f_rn(Color::ZERO, &a, &params, &cfg()).unwrap();
        let fb = f_rn(Color::ZERO, &b, &params, &cfg()).unwrap();
        assert!(residual(fa, -fb, 0.0) < 1e-12);
    }

    #[test]
    fn f_one_terms_match_definition() {
        let (a, params) = point(15, 1);
        let s = functional_sum_3c(Color::ZERO, 0, Side::Chi, &a, &params, &cfg()).unwrap();
        let terms = f_one_terms(a.spectral(0, 0), &params, &cfg()).unwrap();
        for (x, y) in s.terms.iter().zip(terms) {
            assert!(residual(*x, y, 0.0) < 1e-12);
        }
        assert!(s.residual < 1e-12);
    }

    #[test]
    fn pi_shift_factor() {
        for n in 1..=3 {
            let (a, params) = point(16 + n as u64, n);
            let c = f_pi_shift_check(Color::ONE, &a, n - 1, &params, &cfg()).unwrap();
            assert!(c.summand_spread < 1e-10);
            assert!(c.total_residual < 1e-10);
            assert!((c.common_factor - parity(n)).norm() < 1e-10);
        }
    }

    #[test]
    fn recursion_n1_collapse() {
        let (a, params) = point(20, 1);
        for r in Color::ALL {
            let c = check_recursion_3c(r, 0, 0, Sign::Plus, Recursion3c::Z, &a, &params, &cfg())
                .unwrap();
            let lambda = params.lambda();
            let expect = theta4(color_shift(lambda, r.as_i64() + 1), &params, &cfg()).unwrap()
                / theta4(color_shift(lambda, r.as_i64()), &params, &cfg()).unwrap();
            assert!(residual(c.lhs, expect, 0.0) < 1e-14);
            assert!(c.residual < 1e-14);
        }
    }

    #[test]
    fn recursions_n2() {
        let (a, params) = point(21, 2);
        for form in [Recursion3c::Z, Recursion3c::F] {
            for sign in Sign::BOTH {
                for k in 0..2 {
                    for l in 0..2 {
                        let c =
                            check_recursion_3c(Color::TWO, k, l, sign, form, &a, &params, &cfg())
                                .unwrap();
                        assert!(c.residual < 1e-10, "{form:?} {sign:?} {k} {l} {c:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn degenerates_to_six_vertex() {
        let (a, _) = point(22, 2);
        let params = EllipticParams::real(0.0, 0.3).unwrap();
        let six = partition_function_6v(&a).unwrap();
        for r in Color::ALL {
            let z =
                partial_partition_function(r, &a, WeightFamily3c::Tilde, &params, &cfg()).unwrap();
            assert!(residual(z, six, 0.0) < 1e-13);
        }
    }
}
