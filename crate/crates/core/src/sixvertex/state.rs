use std::sync::{Arc, OnceLock};

use serde::{Deserialize, Serialize};

use super::VertexKind;
use crate::error::{Error, Result};

/// Largest lattice accepted by the DWBC enumerator.
pub const MAX_DWBC_N: usize = 7;

/// Edge orientations on a `rows x cols` vertex lattice, boundary edges included.
///
/// `h[i * (cols + 1) + b]` is the horizontal edge of row `i` left of vertex column `b`
/// (`b = cols` is the right boundary), `true` meaning it points right.
/// `v[a * cols + j]` is the vertical edge of column `j` above vertex row `a`
/// (`a = rows` is the bottom boundary), `true` meaning it points up.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SixVertexState {
    rows: usize,
    cols: usize,
    h: Vec<bool>,
    v: Vec<bool>,
}

impl SixVertexState {
    /// Builds a state from raw edges, rejecting ice-rule violations.
    pub fn from_edges(rows: usize, cols: usize, h: Vec<bool>, v: Vec<bool>) -> Result<Self> {
        if h.len() != rows * (cols + 1) || v.len() != (rows + 1) * cols {
            return Err(Error::InvalidParameter(format!(
                "edge arrays of length {}/{} do not fit a {rows}x{cols} lattice",
                h.len(),
                v.len()
            )));
        }
        let state = SixVertexState { rows, cols, h, v };
        for i in 0..rows {
            for j in 0..cols {
                if state.try_kind(i, j).is_none() {
                    return Err(Error::InvalidColoring(format!(
                        "ice rule fails at vertex ({i}, {j})"
                    )));
                }
            }
        }
        Ok(state)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Horizontal edge in vertex row `i` at position `b`, `true` if it points right.
    pub fn h(&self, i: usize, b: usize) -> bool {
        self.h[i * (self.cols + 1) + b]
    }

    /// Vertical edge in vertex column `j` at position `a`, `true` if it points up.
    pub fn v(&self, a: usize, j: usize) -> bool {
        self.v[a * self.cols + j]
    }

    fn try_kind(&self, i: usize, j: usize) -> Option<VertexKind> {
        VertexKind::from_arrows(
            self.h(i, j),
            self.h(i, j + 1),
            self.v(i, j),
            self.v(i + 1, j),
        )
    }

    pub fn kind(&self, i: usize, j: usize) -> VertexKind {
        self.try_kind(i, j)
            .expect("ice rule checked at construction")
    }

    pub fn kind_matrix(&self) -> Vec<Vec<VertexKind>> {
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.kind(i, j)).collect())
            .collect()
    }

    /// Horizontal boundary arrows point in, vertical boundary arrows point out.
    pub fn is_dwbc(&self) -> bool {
        (0..self.rows).all(|i| self.h(i, 0) && !self.h(i, self.cols))
            && (0..self.cols).all(|j| self.v(0, j) && !self.v(self.rows, j))
    }

    /// Every row and every column holds an odd number of gamma-type vertices.
    pub fn odd_gamma_rows_and_columns(&self) -> bool {
        let row_ok = (0..self.rows).all(|i| {
            (0..self.cols)
                .filter(|&j| self.kind(i, j).is_gamma_type())
                .count()
                % 2
                == 1
        });
        let col_ok = (0..self.cols).all(|j| {
            (0..self.rows)
                .filter(|&i| self.kind(i, j).is_gamma_type())
                .count()
                % 2
                == 1
        });
        row_ok && col_ok
    }
}

fn check_dwbc_size(n: usize) -> Result<()> {
    if n == 0 || n > MAX_DWBC_N {
        Err(Error::SizeGuard(format!(
            "DWBC enumeration needs 1 <= n <= {MAX_DWBC_N}, got {n}"
        )))
    } else {
        Ok(())
    }
}

/// All `n x n` six-vertex states with domain wall boundary conditions.
///
/// Vertices are filled row by row; at each vertex the right then the bottom edge is chosen,
/// `false` before `true`, which fixes a lexicographic order on the edge orientations.
pub fn enumerate_dwbc_states(n: usize) -> Result<Vec<SixVertexState>> {
    check_dwbc_size(n)?;
    let mut h = vec![false; n * (n + 1)];
    let mut v = vec![false; (n + 1) * n];
    for i in 0..n {
        h[i * (n + 1)] = true;
    }
    for j in 0..n {
        v[j] = true;
    }
    let mut out = Vec::new();
    fill(n, 0, &mut h, &mut v, &mut out);
    Ok(out)
}

fn fill(n: usize, pos: usize, h: &mut Vec<bool>, v: &mut Vec<bool>, out: &mut Vec<SixVertexState>) {
    if pos == n * n {
        out.push(SixVertexState {
            rows: n,
            cols: n,
            h: h.clone(),
            v: v.clone(),
        });
        return;
    }
    let (i, j) = (pos / n, pos % n);
    let left = h[i * (n + 1) + j];
    let top = v[i * n + j];
    let rights: &[bool] = if j + 1 == n { &[false] } else { &[false, true] };
    let bottoms: &[bool] = if i + 1 == n { &[false] } else { &[false, true] };
    for &right in rights {
        for &bottom in bottoms {
            if VertexKind::from_arrows(left, right, top, bottom).is_none() {
                continue;
            }
            h[i * (n + 1) + j + 1] = right;
            v[(i + 1) * n + j] = bottom;
            fill(n, pos + 1, h, v, out);
        }
    }
}

/// DWBC states of one size with their kind matrices laid out row-major.
#[derive(Debug)]
pub struct DwbcEnsemble {
    pub n: usize,
    pub states: Vec<SixVertexState>,
    pub kinds: Vec<Vec<VertexKind>>,
}

/// Shared, lazily built ensemble for size `n`.
pub fn dwbc_ensemble(n: usize) -> Result<Arc<DwbcEnsemble>> {
    check_dwbc_size(n)?;
    static CACHE: [OnceLock<Arc<DwbcEnsemble>>; MAX_DWBC_N + 1] =
        [const { OnceLock::new() }; MAX_DWBC_N + 1];
    Ok(CACHE[n]
        .get_or_init(|| {
            let states = enumerate_dwbc_states(n).expect("size checked");
            let kinds = states
                .iter()
                .map(|s| (0..n * n).map(|x| s.kind(x / n, x % n)).collect())
                .collect();
            Arc::new(DwbcEnsemble { n, states, kinds })
        })
        .clone())
}
