//! Weights, partition function and the identities of the trigonometric six-vertex model.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::Serialize;

use super::{dwbc_ensemble, VertexKind};
use crate::error::{Error, Result};
use crate::numeric::{residual, sorted_sum, vanishing_residual, Accumulated};
use crate::spectral::{parity, Side, Sign, SpectralAssignment};

const ONE: Complex64 = Complex64::new(1.0, 0.0);

fn check_eta(eta: f64) -> Result<f64> {
    let s = eta.sin();
    if s.abs() < 1e-12 {
        Err(Error::DegenerateCrossing(s.abs()))
    } else {
        Ok(s)
    }
}

fn require_combinatorial(eta: f64) -> Result<()> {
    if (eta - 2.0 * PI / 3.0).abs() > 1e-12 {
        Err(Error::CrossingGuard(eta))
    } else {
        Ok(())
    }
}

/// `alpha = sin(eta/2 - phi)/sin eta`, `beta = sin(eta/2 + phi)/sin eta`, `gamma = 1`.
pub fn weight6v(kind: VertexKind, phi: Complex64, eta: f64) -> Result<Complex64> {
    let s = check_eta(eta)?;
    Ok(match kind {
        VertexKind::Alpha | VertexKind::AlphaP => (eta / 2.0 - phi).sin() / s,
        VertexKind::Beta | VertexKind::BetaP => (eta / 2.0 + phi).sin() / s,
        VertexKind::Gamma | VertexKind::GammaP => ONE,
    })
}

/// Sum over DWBC states of the product of vertex weights; `Z_0 = 1`.
pub fn partition_function_6v(assign: &SpectralAssignment) -> Result<Complex64> {
    Ok(partition_function_6v_accumulated(assign)?.sum)
}

/// [`partition_function_6v`] together with its largest state weight.
pub fn partition_function_6v_accumulated(assign: &SpectralAssignment) -> Result<Accumulated> {
    let n = assign.n();
    if n == 0 {
        return Ok(Accumulated::exact(ONE));
    }
    let ensemble = dwbc_ensemble(n)?;
    let mut table = vec![[ONE; 6]; n * n];
    for i in 0..n {
        for j in 0..n {
            let phi = Complex64::new(assign.spectral(i, j), 0.0);
            for kind in VertexKind::ALL {
                table[i * n + j][kind.index()] = weight6v(kind, phi, assign.eta)?;
            }
        }
    }
    let terms: Vec<Complex64> = ensemble
        .kinds
        .iter()
        .map(|kinds| {
            kinds
                .iter()
                .enumerate()
                .map(|(x, k)| table[x][k.index()])
                .product()
        })
        .collect();
    Ok(sorted_sum(&terms))
}

fn sine_prefactor(assign: &SpectralAssignment) -> f64 {
    let n = assign.n();
    let mut v = 1.0;
    for i in 0..n {
        for j in 0..n {
            v *= (assign.chi[i] - assign.psi[j]).sin();
            if i < j {
                v *= (assign.chi[i] - assign.chi[j]).sin() * (assign.psi[i] - assign.psi[j]).sin();
            }
        }
    }
    v
}

/// `F_n = prod_{i<j} sin(chi_i - chi_j) prod_{i,j} sin(chi_i - psi_j) prod_{i<j} sin(psi_i - psi_j) Z_n`.
pub fn f_n_6v(assign: &SpectralAssignment) -> Result<Complex64> {
    Ok(f_n_6v_accumulated(assign)?.sum)
}

fn f_n_6v_accumulated(assign: &SpectralAssignment) -> Result<Accumulated> {
    Ok(partition_function_6v_accumulated(assign)?
        .scaled(Complex64::new(sine_prefactor(assign), 0.0)))
}

/// The three shifted copies of `F_n` and their sum.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct FunctionalSum {
    pub terms: [Complex64; 3],
    pub sum: Complex64,
    /// `|sum|` relative to the largest term.
    pub residual: f64,
}

impl FunctionalSum {
    pub fn from_terms(terms: [Complex64; 3]) -> Self {
        let acc = sorted_sum(&terms);
        FunctionalSum {
            terms,
            sum: acc.sum,
            residual: vanishing_residual(&acc),
        }
    }
}

/// `S_{n,k} = sum_s F_n` with `chi_k + 2 pi s / 3` (side `Chi`) or `psi_k - 2 pi s / 3` (side `Psi`).
pub fn functional_sum_6v(
    assign: &SpectralAssignment,
    k: usize,
    side: Side,
) -> Result<FunctionalSum> {
    let sign = match side {
        Side::Chi => Sign::Plus,
        Side::Psi => Sign::Minus,
    };
    functional_sum_6v_signed(assign, k, side, sign)
}

/// As [`functional_sum_6v`] with an explicit direction for the shift `sign * 2 pi s / 3`.
pub fn functional_sum_6v_signed(
    assign: &SpectralAssignment,
    k: usize,
    side: Side,
    sign: Sign,
) -> Result<FunctionalSum> {
    require_combinatorial(assign.eta)?;
    assign.check_index(k, "shift")?;
    let mut terms = [ONE; 3];
    for (s, t) in terms.iter_mut().enumerate() {
        let shifted = assign.shifted(side, k, sign.value() * 2.0 * PI * s as f64 / 3.0);
        *t = f_n_6v(&shifted)?;
    }
    Ok(FunctionalSum::from_terms(terms))
}

/// Which recursion to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Recursion6v {
    /// `Z_n` at `chi_k = psi_l + eta/2` (plus) or `psi_l - eta/2` (minus), any `eta`.
    Z,
    /// `F_n` at `chi_k = psi_l +- pi/3`, `eta = 2 pi / 3` only.
    F,
}

/// Both sides of a recursion relation after the specialisation.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RecursionCheck {
    pub lhs: Complex64,
    pub rhs: Complex64,
    /// Largest state weight on either side, after the prefactors.
    pub scale: f64,
    pub residual: f64,
    /// Right-hand side without the `(-1)^(k+l)` factor, for the forms where it is needed.
    pub rhs_without_index_sign: Option<Complex64>,
}

impl RecursionCheck {
    pub(crate) fn new(lhs: Accumulated, rhs: Accumulated, index_sign: f64) -> Self {
        let scale = lhs.max_term.max(rhs.max_term);
        let signed = rhs.sum * index_sign;
        RecursionCheck {
            lhs: lhs.sum,
            rhs: signed,
            scale,
            residual: residual(lhs.sum, signed, scale),
            rhs_without_index_sign: (index_sign != 1.0).then_some(rhs.sum),
        }
    }

    /// Residual of the relation without the `(-1)^(k+l)` factor; `None` when that factor is 1.
    pub fn residual_without_index_sign(&self) -> Option<f64> {
        self.rhs_without_index_sign
            .map(|r| residual(self.lhs, r, self.scale))
    }
}

/// Specialises `chi_k` against `psi_l` and compares `Z_n` (or `F_n`) with the reduced lattice.
///
/// The `F` form carries a factor `(-1)^(k+l)`; it is trivial on the diagonal `k = l`, and
/// off the diagonal it comes from moving line `k` and line `l` into the last position.
pub fn check_recursion_6v(
    assign: &SpectralAssignment,
    k: usize,
    l: usize,
    sign: Sign,
    form: Recursion6v,
) -> Result<RecursionCheck> {
    assign.check_index(k, "chi")?;
    assign.check_index(l, "psi")?;
    let n = assign.n();
    let eta = assign.eta;
    let s = sign.value();
    let sin_eta = check_eta(eta)?;
    match form {
        Recursion6v::Z => {
            let at = assign.with_chi(k, assign.psi[l] + s * eta / 2.0);
            let lhs = partition_function_6v_accumulated(&at)?;
            let mut factor = sin_eta.powi(2 - 2 * n as i32);
            for i in (0..n).filter(|&i| i != k) {
                factor *= (at.chi[i] - at.psi[l] + s * eta / 2.0).sin();
            }
            for i in (0..n).filter(|&i| i != l) {
                factor *= (at.psi[l] - at.psi[i] + s * eta).sin();
            }
            let rhs = partition_function_6v_accumulated(&at.without(k, l))?
                .scaled(Complex64::new(factor, 0.0));
            Ok(RecursionCheck::new(lhs, rhs, 1.0))
        }
        Recursion6v::F => {
            require_combinatorial(eta)?;
            let at = assign.with_chi(k, assign.psi[l] + s * PI / 3.0);
            let lhs = f_n_6v_accumulated(&at)?;
            let mut factor = s
                * parity(n - 1)
                * 4f64.powi(2 - 2 * n as i32)
                * (2.0 * PI / 3.0).sin().powi(3 - 2 * n as i32);
            for i in (0..n).filter(|&i| i != k) {
                factor *= (3.0 * (at.psi[l] - at.chi[i])).sin();
            }
            for i in (0..n).filter(|&i| i != l) {
                factor *= (3.0 * (at.psi[l] - at.psi[i])).sin();
            }
            let printed =
                f_n_6v_accumulated(&at.without(k, l))?.scaled(Complex64::new(factor, 0.0));
            Ok(RecursionCheck::new(lhs, printed, parity(k + l)))
        }
    }
}

/// Residual of `sin(phi) sin(phi + pi/3) sin(phi + 2pi/3) = sin(3 phi) / 4`.
pub fn trig_cubic_residual(phi: f64) -> f64 {
    let lhs = phi.sin() * (phi + PI / 3.0).sin() * (phi + 2.0 * PI / 3.0).sin();
    let rhs = (3.0 * phi).sin() / 4.0;
    residual(Complex64::new(lhs, 0.0), Complex64::new(rhs, 0.0), 0.25)
}
