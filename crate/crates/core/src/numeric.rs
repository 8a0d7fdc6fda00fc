//! Deterministic summation and residual normalisation shared by all identity checks.

use num_complex::Complex64;

/// A sum together with the largest magnitude among its summands.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Accumulated {
    pub sum: Complex64,
    pub max_term: f64,
}

impl Accumulated {
    /// A single exact value.
    pub fn exact(value: Complex64) -> Self {
        Accumulated {
            sum: value,
            max_term: value.norm(),
        }
    }

    /// Multiplies the sum and every summand by `factor`.
    pub fn scaled(self, factor: Complex64) -> Self {
        Accumulated {
            sum: self.sum * factor,
            max_term: self.max_term * factor.norm(),
        }
    }
}

/// Adds the terms in ascending order of magnitude, ties broken by input position.
pub fn sorted_sum(terms: &[Complex64]) -> Accumulated {
    let mut order: Vec<usize> = (0..terms.len()).collect();
    order.sort_by(|&a, &b| terms[a].norm().total_cmp(&terms[b].norm()).then(a.cmp(&b)));
    let mut sum = Complex64::new(0.0, 0.0);
    let mut max_term = 0.0f64;
    for i in order {
        sum += terms[i];
        max_term = max_term.max(terms[i].norm());
    }
    Accumulated { sum, max_term }
}

/// `|lhs - rhs| / max(|lhs|, |rhs|, scale)`, or 0 when every quantity vanishes.
pub fn residual(lhs: Complex64, rhs: Complex64, scale: f64) -> f64 {
    let denom = lhs.norm().max(rhs.norm()).max(scale);
    if denom == 0.0 {
        0.0
    } else {
        (lhs - rhs).norm() / denom
    }
}

/// Residual of a sum that should vanish, measured against its largest summand.
pub fn vanishing_residual(acc: &Accumulated) -> f64 {
    residual(acc.sum, Complex64::new(0.0, 0.0), acc.max_term)
}
