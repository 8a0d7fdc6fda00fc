//! Spectral parameters of the inhomogeneous lattice and the index conventions shared by
//! the six-vertex and three-coloring identity checks. Line indices are 0-based.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Horizontal line labels `chi`, vertical line labels `psi` and the crossing parameter `eta`.
///
/// The vertex on horizontal line `i` and vertical line `j` carries `chi[i] - psi[j]`.
/// `eta` is ignored by the three-coloring model, which lives at `eta = 2 pi / 3`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpectralAssignment {
    pub chi: Vec<f64>,
    pub psi: Vec<f64>,
    pub eta: f64,
}

impl SpectralAssignment {
    pub fn new(chi: Vec<f64>, psi: Vec<f64>, eta: f64) -> Result<Self> {
        if chi.len() != psi.len() {
            return Err(Error::InvalidParameter(format!(
                "chi has {} entries but psi has {}",
                chi.len(),
                psi.len()
            )));
        }
        if chi.iter().chain(&psi).chain([&eta]).any(|x| !x.is_finite()) {
            return Err(Error::InvalidParameter(
                "spectral parameters must be finite".into(),
            ));
        }
        Ok(SpectralAssignment { chi, psi, eta })
    }

    /// Assignment at the combinatorial point `eta = 2 pi / 3`.
    pub fn combinatorial(chi: Vec<f64>, psi: Vec<f64>) -> Result<Self> {
        Self::new(chi, psi, 2.0 * PI / 3.0)
    }

    pub fn n(&self) -> usize {
        self.chi.len()
    }

    pub fn spectral(&self, i: usize, j: usize) -> f64 {
        self.chi[i] - self.psi[j]
    }

    pub fn check_index(&self, k: usize, what: &str) -> Result<()> {
        if k >= self.n() {
            Err(Error::IndexOutOfRange(format!(
                "{what} index {k} with n = {}",
                self.n()
            )))
        } else {
            Ok(())
        }
    }

    /// Removes horizontal line `k` and vertical line `l`.
    pub fn without(&self, k: usize, l: usize) -> Self {
        let mut chi = self.chi.clone();
        let mut psi = self.psi.clone();
        chi.remove(k);
        psi.remove(l);
        SpectralAssignment {
            chi,
            psi,
            eta: self.eta,
        }
    }

    pub fn with_chi(&self, k: usize, value: f64) -> Self {
        let mut out = self.clone();
        out.chi[k] = value;
        out
    }

    pub fn with_psi(&self, k: usize, value: f64) -> Self {
        let mut out = self.clone();
        out.psi[k] = value;
        out
    }

    /// Shifts one line label: `chi[k] += delta` or `psi[k] += delta`.
    pub fn shifted(&self, side: Side, k: usize, delta: f64) -> Self {
        match side {
            Side::Chi => self.with_chi(k, self.chi[k] + delta),
            Side::Psi => self.with_psi(k, self.psi[k] + delta),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Chi,
    Psi,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub const BOTH: [Sign; 2] = [Sign::Plus, Sign::Minus];

    pub fn value(self) -> f64 {
        match self {
            Sign::Plus => 1.0,
            Sign::Minus => -1.0,
        }
    }
}

/// `(-1)^k`.
pub fn parity(k: usize) -> f64 {
    if k % 2 == 0 {
        1.0
    } else {
        -1.0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_mismatched_lengths() {
        assert!(SpectralAssignment::new(vec![0.1], vec![], 1.0).is_err());
        assert!(SpectralAssignment::new(vec![f64::NAN], vec![0.0], 1.0).is_err());
    }

    #[test]
    fn without_and_shift() {
        let a = SpectralAssignment::new(vec![1.0, 2.0, 3.0], vec![4.0, 5.0, 6.0], 1.1).unwrap();
        let b = a.without(1, 2);
        assert_eq!(b.chi, vec![1.0, 3.0]);
        assert_eq!(b.psi, vec![4.0, 5.0]);
        assert_eq!(a.shifted(Side::Psi, 0, -1.0).psi[0], 3.0);
        assert_eq!(a.spectral(2, 0), -1.0);
        assert!(a.check_index(3, "chi").is_err());
    }
}
