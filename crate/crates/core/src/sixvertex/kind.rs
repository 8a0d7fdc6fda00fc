use std::fmt;

use serde::{Deserialize, Serialize};

/// The six ice-rule vertex configurations.
///
/// Arrows on the left, right, top and bottom edges:
///
/// | kind      | left  | right | top  | bottom |
/// |-----------|-------|-------|------|--------|
/// | `Alpha`   | right | right | up   | up     |
/// | `AlphaP`  | left  | left  | down | down   |
/// | `Beta`    | right | right | down | down   |
/// | `BetaP`   | left  | left  | up   | up     |
/// | `Gamma`   | right | left  | up   | down   |
/// | `GammaP`  | left  | right | down | up     |
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum VertexKind {
    #[serde(rename = "ALPHA")]
    Alpha,
    #[serde(rename = "ALPHA_P")]
    AlphaP,
    #[serde(rename = "BETA")]
    Beta,
    #[serde(rename = "BETA_P")]
    BetaP,
    #[serde(rename = "GAMMA")]
    Gamma,
    #[serde(rename = "GAMMA_P")]
    GammaP,
}

impl VertexKind {
    pub const ALL: [VertexKind; 6] = [
        VertexKind::Alpha,
        VertexKind::AlphaP,
        VertexKind::Beta,
        VertexKind::BetaP,
        VertexKind::Gamma,
        VertexKind::GammaP,
    ];

    pub fn index(self) -> usize {
        self as usize
    }

    /// Arrows as `(left points right, right points right, top points up, bottom points up)`.
    pub fn arrows(self) -> (bool, bool, bool, bool) {
        match self {
            VertexKind::Alpha => (true, true, true, true),
            VertexKind::AlphaP => (false, false, false, false),
            VertexKind::Beta => (true, true, false, false),
            VertexKind::BetaP => (false, false, true, true),
            VertexKind::Gamma => (true, false, true, false),
            VertexKind::GammaP => (false, true, false, true),
        }
    }

    /// Inverse of [`VertexKind::arrows`]; `None` when the ice rule fails.
    pub fn from_arrows(left: bool, right: bool, top: bool, bottom: bool) -> Option<VertexKind> {
        VertexKind::ALL
            .into_iter()
            .find(|k| k.arrows() == (left, right, top, bottom))
    }

    pub fn is_gamma_type(self) -> bool {
        matches!(self, VertexKind::Gamma | VertexKind::GammaP)
    }

    pub fn name(self) -> &'static str {
        match self {
            VertexKind::Alpha => "ALPHA",
            VertexKind::AlphaP => "ALPHA_P",
            VertexKind::Beta => "BETA",
            VertexKind::BetaP => "BETA_P",
            VertexKind::Gamma => "GAMMA",
            VertexKind::GammaP => "GAMMA_P",
        }
    }
}

impl fmt::Display for VertexKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exactly_six_ice_configurations() {
        let mut found = 0;
        for bits in 0..16u8 {
            let (l, r, t, b) = (bits & 1 != 0, bits & 2 != 0, bits & 4 != 0, bits & 8 != 0);
            let inward = l as u8 + (!r) as u8 + (!t) as u8 + b as u8;
            let kind = VertexKind::from_arrows(l, r, t, b);
            assert_eq!(kind.is_some(), inward == 2);
            found += kind.is_some() as usize;
        }
        assert_eq!(found, 6);
    }

    #[test]
    fn serde_names() {
        assert_eq!(
            serde_json::to_string(&VertexKind::BetaP).unwrap(),
            "\"BETA_P\""
        );
        for k in VertexKind::ALL {
            let s = serde_json::to_string(&k).unwrap();
            assert_eq!(s, format!("\"{k}\""));
            assert_eq!(serde_json::from_str::<VertexKind>(&s).unwrap(), k);
        }
    }
}
