//! Tolerances, parameter domains and series settings for verification runs.

use std::f64::consts::PI;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::theta::SeriesConfig;

/// Read from `key = value` lines; every key is optional.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct VerifyConfig {
    pub term_tolerance: f64,
    pub max_terms: usize,

    /// Nome range for the theta-function laws.
    pub theta_nome_min: f64,
    pub theta_nome_max: f64,
    /// Nome range for the lattice identities.
    pub nome_min: f64,
    pub nome_max: f64,
    pub lambda_min: f64,
    pub lambda_max: f64,
    pub spectral_min: f64,
    pub spectral_max: f64,
    /// Range for the generic crossing parameter.
    pub eta_min: f64,
    pub eta_max: f64,
    /// Nome used for the small-nome comparison with the six-vertex model.
    pub degeneration_nome: f64,

    pub max_n_sixvertex: usize,
    pub max_n_coloring: usize,

    pub tol_theta: f64,
    pub tol_ybe: f64,
    pub tol_recursion: f64,
    pub tol_functional6v: f64,
    pub tol_parity: f64,
    pub tol_functional3c: f64,
    pub tol_identity3c: f64,
    pub tol_degeneration: f64,
    pub tol_appendix: f64,
    pub tol_constraint: f64,

    /// Record wall-clock time in reports; off by default so reports are byte-stable.
    pub timing: bool,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            term_tolerance: 1e-16,
            max_terms: 64,
            theta_nome_min: 0.01,
            theta_nome_max: 0.5,
            nome_min: 0.05,
            nome_max: 0.3,
            lambda_min: 0.05,
            lambda_max: PI / 3.0 - 0.05,
            spectral_min: 0.0,
            spectral_max: PI,
            eta_min: 0.3,
            eta_max: 2.8,
            degeneration_nome: 1e-4,
            max_n_sixvertex: 4,
            max_n_coloring: 3,
            tol_theta: 1e-12,
            tol_ybe: 1e-9,
            tol_recursion: 1e-10,
            tol_functional6v: 1e-10,
            tol_parity: 1e-12,
            tol_functional3c: 1e-9,
            tol_identity3c: 1e-10,
            tol_degeneration: 1e-3,
            tol_appendix: 1e-9,
            tol_constraint: 1e-12,
            timing: false,
        }
    }
}

impl VerifyConfig {
    pub fn parse(text: &str) -> Result<Self> {
        let cfg: VerifyConfig =
            toml::from_str(text).map_err(|e| Error::Config(e.message().to_string()))?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Config(format!("cannot read {}: {e}", path.display())))?;
        Self::parse(&text)
    }

    pub fn series(&self) -> Result<SeriesConfig> {
        SeriesConfig::new(self.term_tolerance, self.max_terms)
    }

    pub fn validate(&self) -> Result<()> {
        self.series().map_err(|e| Error::Config(e.to_string()))?;
        let ranges = [
            ("theta_nome", self.theta_nome_min, self.theta_nome_max),
            ("nome", self.nome_min, self.nome_max),
            ("lambda", self.lambda_min, self.lambda_max),
            ("spectral", self.spectral_min, self.spectral_max),
            ("eta", self.eta_min, self.eta_max),
        ];
        for (name, lo, hi) in ranges {
            if !(lo.is_finite() && hi.is_finite() && lo < hi) {
                return Err(Error::Config(format!(
                    "{name}_min must be below {name}_max"
                )));
            }
        }
        for (name, lo, hi) in [
            ("theta_nome", self.theta_nome_min, self.theta_nome_max),
            ("nome", self.nome_min, self.nome_max),
        ] {
            if lo <= 0.0 || hi >= 1.0 {
                return Err(Error::Config(format!("{name} range must lie in (0, 1)")));
            }
        }
        if !(self.degeneration_nome > 0.0 && self.degeneration_nome < 1.0) {
            return Err(Error::Config("degeneration_nome must lie in (0, 1)".into()));
        }
        if self.max_n_sixvertex == 0 || self.max_n_sixvertex > crate::sixvertex::MAX_DWBC_N {
            return Err(Error::Config(format!(
                "max_n_sixvertex must be in 1..={}",
                crate::sixvertex::MAX_DWBC_N
            )));
        }
        if self.max_n_coloring == 0 || self.max_n_coloring > crate::coloring::MAX_DWBC_COLORING_N {
            return Err(Error::Config(format!(
                "max_n_coloring must be in 1..={}",
                crate::coloring::MAX_DWBC_COLORING_N
            )));
        }
        let tolerances = [
            self.tol_theta,
            self.tol_ybe,
            self.tol_recursion,
            self.tol_functional6v,
            self.tol_parity,
            self.tol_functional3c,
            self.tol_identity3c,
            self.tol_degeneration,
            self.tol_appendix,
            self.tol_constraint,
        ];
        if tolerances.iter().any(|t| !(*t > 0.0)) {
            return Err(Error::Config("tolerances must be positive".into()));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_text_gives_defaults() {
        assert_eq!(VerifyConfig::parse("").unwrap(), VerifyConfig::default());
        VerifyConfig::default().validate().unwrap();
    }

    #[test]
    fn key_value_lines() {
        let cfg = VerifyConfig::parse("# comment\ntol_ybe = 1e-8\nmax_terms = 40\ntiming = true\n")
            .unwrap();
        assert_eq!(cfg.tol_ybe, 1e-8);
        assert_eq!(cfg.max_terms, 40);
        assert!(cfg.timing);
    }

    #[test]
    fn rejects_bad_input() {
        for text in [
            "no_such_key = 1",
            "tol_ybe = -1.0",
            "nome_min = 0.4\nnome_max = 0.2",
            "max_terms = 0",
            "max_n_coloring = 9",
            "tol_ybe =",
        ] {
            assert!(
                matches!(VerifyConfig::parse(text), Err(Error::Config(_))),
                "{text}"
            );
        }
    }
}
