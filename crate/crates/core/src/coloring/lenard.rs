use super::GridColoring;
use crate::color::Color;
use crate::error::{Error, Result};
use crate::sixvertex::SixVertexState;

/// Arrow state of a coloring: crossing an edge anticlockwise around a vertex, a color step
/// of `+1` gives an inward arrow and `-1` an outward one.
///
/// On the face grid this reads: a vertical edge points up iff the right face exceeds the left
/// one by one, and a horizontal edge points right iff the lower face exceeds the upper one by one.
/// Boundary faces are kept, so every edge touching an internal vertex carries an arrow.
pub fn lenard_map(c: &GridColoring) -> Result<SixVertexState> {
    c.validate(super::BoundaryCondition::Free)?;
    let (rows, cols) = (c.rows(), c.cols());
    if rows < 2 || cols < 2 {
        return Err(Error::InvalidColoring(format!(
            "a {rows}x{cols} face grid has no internal vertex"
        )));
    }
    let mut h = Vec::with_capacity((rows - 1) * cols);
    for i in 0..rows - 1 {
        for b in 0..cols {
            h.push(c.get(i + 1, b) - c.get(i, b) == Color::ONE);
        }
    }
    let mut v = Vec::with_capacity(rows * (cols - 1));
    for a in 0..rows {
        for j in 0..cols - 1 {
            v.push(c.get(a, j + 1) - c.get(a, j) == Color::ONE);
        }
    }
    SixVertexState::from_edges(rows - 1, cols - 1, h, v)
}
