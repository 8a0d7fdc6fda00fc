use std::collections::BTreeMap;
use std::fmt;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::color::Color;
use crate::error::{Error, Result};

/// Face-count guard for free and toroidal enumeration.
pub const MAX_FACES: usize = 25;
/// Largest internal-vertex count accepted for DWBC colorings.
pub const MAX_DWBC_COLORING_N: usize = 5;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BoundaryCondition {
    Free,
    /// First and last face of every row and every column must differ.
    Toroidal,
    /// Domain wall boundary: `(n+1) x (n+1)` faces with a fixed boundary walk.
    Dwbc,
}

impl fmt::Display for BoundaryCondition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BoundaryCondition::Free => "free",
            BoundaryCondition::Toroidal => "toroidal",
            BoundaryCondition::Dwbc => "dwbc",
        })
    }
}

impl std::str::FromStr for BoundaryCondition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "free" => Ok(BoundaryCondition::Free),
            "toroidal" => Ok(BoundaryCondition::Toroidal),
            "dwbc" => Ok(BoundaryCondition::Dwbc),
            other => Err(Error::InvalidParameter(format!(
                "unknown boundary condition '{other}'"
            ))),
        }
    }
}

/// A `rows x cols` array of face colors, row 0 at the top.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GridColoring {
    rows: usize,
    cols: usize,
    faces: Vec<Color>,
}

impl GridColoring {
    /// Builds a coloring from rows of colors and checks that neighbouring faces differ.
    pub fn from_rows(rows: Vec<Vec<Color>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if r == 0 || c == 0 || rows.iter().any(|row| row.len() != c) {
            return Err(Error::InvalidColoring(
                "rows must be non-empty and of equal length".into(),
            ));
        }
        let g = GridColoring {
            rows: r,
            cols: c,
            faces: rows.into_iter().flatten().collect(),
        };
        g.validate(BoundaryCondition::Free)?;
        Ok(g)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> Color {
        self.faces[i * self.cols + j]
    }

    pub fn to_matrix(&self) -> Vec<Vec<u8>> {
        self.faces
            .chunks(self.cols)
            .map(|row| row.iter().map(|c| c.value()).collect())
            .collect()
    }

    /// The same coloring with every face shifted by `k`.
    pub fn shifted(&self, k: i64) -> Self {
        GridColoring {
            faces: self.faces.iter().map(|&c| c + k).collect(),
            ..self.clone()
        }
    }

    /// Number of faces of each color.
    pub fn color_counts(&self) -> [usize; 3] {
        let mut k = [0; 3];
        for c in &self.faces {
            k[c.index()] += 1;
        }
        k
    }

    pub fn validate(&self, bc: BoundaryCondition) -> Result<()> {
        for i in 0..self.rows {
            for j in 0..self.cols {
                let c = self.get(i, j);
                if j + 1 < self.cols && !c.adjacent_to(self.get(i, j + 1)) {
                    return Err(Error::InvalidColoring(format!(
                        "faces ({i},{j}) and ({i},{}) share a color",
                        j + 1
                    )));
                }
                if i + 1 < self.rows && !c.adjacent_to(self.get(i + 1, j)) {
                    return Err(Error::InvalidColoring(format!(
                        "faces ({i},{j}) and ({},{j}) share a color",
                        i + 1
                    )));
                }
            }
        }
        match bc {
            BoundaryCondition::Free => Ok(()),
            BoundaryCondition::Toroidal => {
                let rows_ok = (0..self.rows)
                    .all(|i| self.cols > 1 && self.get(i, 0) != self.get(i, self.cols - 1));
                let cols_ok = (0..self.cols)
                    .all(|j| self.rows > 1 && self.get(0, j) != self.get(self.rows - 1, j));
                if rows_ok && cols_ok {
                    Ok(())
                } else {
                    Err(Error::InvalidColoring(
                        "toroidal first/last rule violated".into(),
                    ))
                }
            }
            BoundaryCondition::Dwbc => {
                if self.rows != self.cols || self.rows < 2 {
                    return Err(Error::InvalidColoring(
                        "DWBC needs a square grid of at least 2x2 faces".into(),
                    ));
                }
                let n = self.rows - 1;
                let corner = self.get(0, 0);
                for i in 0..=n {
                    for j in 0..=n {
                        if let Some(c) = dwbc_boundary_color(n, corner, i, j) {
                            if c != self.get(i, j) {
                                return Err(Error::InvalidColoring(format!(
                                    "DWBC boundary violated at ({i},{j})"
                                )));
                            }
                        }
                    }
                }
                Ok(())
            }
        }
    }
}

/// Forced boundary color of face `(i, j)` on the `(n+1) x (n+1)` DWBC grid with top-left
/// color `corner`; `None` for interior faces.
///
/// Walking anticlockwise the color rises by one across vertical boundary edges and drops by
/// one across horizontal ones, so the top row reads `corner + j`, the left column
/// `corner + i`, the bottom row `corner + n - j` and the right column `corner + n - i`.
pub fn dwbc_boundary_color(n: usize, corner: Color, i: usize, j: usize) -> Option<Color> {
    let (i, j, n) = (i as i64, j as i64, n as i64);
    if i == 0 {
        Some(corner + j)
    } else if j == 0 {
        Some(corner + i)
    } else if i == n {
        Some(corner + (n - j))
    } else if j == n {
        Some(corner + (n - i))
    } else {
        None
    }
}

struct Search<'a, F: FnMut(&GridColoring)> {
    grid: GridColoring,
    fixed: Vec<bool>,
    bc: BoundaryCondition,
    visit: &'a mut F,
}

impl<F: FnMut(&GridColoring)> Search<'_, F> {
    fn allowed(&self, pos: usize, c: Color) -> bool {
        let (rows, cols) = (self.grid.rows, self.grid.cols);
        let (i, j) = (pos / cols, pos % cols);
        // neighbours already placed: left, up, and for fixed boundaries also right and down
        let placed = |p: usize| p < pos || self.fixed[p];
        if j > 0 && self.grid.faces[pos - 1] == c {
            return false;
        }
        if i > 0 && self.grid.faces[pos - cols] == c {
            return false;
        }
        if j + 1 < cols && placed(pos + 1) && self.grid.faces[pos + 1] == c {
            return false;
        }
        if i + 1 < rows && placed(pos + cols) && self.grid.faces[pos + cols] == c {
            return false;
        }
        if self.bc == BoundaryCondition::Toroidal {
            if j == cols - 1 && (cols == 1 || self.grid.faces[i * cols] == c) {
                return false;
            }
            if i == rows - 1 && (rows == 1 || self.grid.faces[j] == c) {
                return false;
            }
        }
        true
    }

    fn run(&mut self, pos: usize) {
        if pos == self.grid.faces.len() {
            (self.visit)(&self.grid);
            return;
        }
        if self.fixed[pos] {
            if self.allowed(pos, self.grid.faces[pos]) {
                self.run(pos + 1);
            }
            return;
        }
        for c in Color::ALL {
            if self.allowed(pos, c) {
                self.grid.faces[pos] = c;
                self.run(pos + 1);
            }
        }
    }
}

fn check_free_size(rows: usize, cols: usize) -> Result<()> {
    if rows == 0 || cols == 0 || rows * cols > MAX_FACES {
        Err(Error::SizeGuard(format!(
            "need 1 <= rows*cols <= {MAX_FACES}, got {rows}x{cols}"
        )))
    } else {
        Ok(())
    }
}

fn check_dwbc_size(n: usize) -> Result<()> {
    if n == 0 || n > MAX_DWBC_COLORING_N {
        Err(Error::SizeGuard(format!(
            "DWBC colorings need 1 <= n <= {MAX_DWBC_COLORING_N}, got {n}"
        )))
    } else {
        Ok(())
    }
}

fn dwbc_search<F: FnMut(&GridColoring)>(n: usize, corner: Color, visit: &mut F) {
    let m = n + 1;
    let mut faces = vec![Color::ZERO; m * m];
    let mut fixed = vec![false; m * m];
    for i in 0..m {
        for j in 0..m {
            if let Some(c) = dwbc_boundary_color(n, corner, i, j) {
                faces[i * m + j] = c;
                fixed[i * m + j] = true;
            }
        }
    }
    let grid = GridColoring {
        rows: m,
        cols: m,
        faces,
    };
    Search {
        grid,
        fixed,
        bc: BoundaryCondition::Dwbc,
        visit,
    }
    .run(0);
}

/// Visits every valid coloring in row-major, color-ascending backtracking order.
///
/// For DWBC the grid must be `(n+1) x (n+1)` and all three corner colors are visited in turn.
pub fn for_each_coloring<F: FnMut(&GridColoring)>(
    rows: usize,
    cols: usize,
    bc: BoundaryCondition,
    mut visit: F,
) -> Result<()> {
    match bc {
        BoundaryCondition::Dwbc => {
            if rows != cols || rows < 2 {
                return Err(Error::InvalidParameter(format!(
                    "DWBC needs a square grid of n+1 faces, got {rows}x{cols}"
                )));
            }
            check_dwbc_size(rows - 1)?;
            for corner in Color::ALL {
                dwbc_search(rows - 1, corner, &mut visit);
            }
        }
        _ => {
            check_free_size(rows, cols)?;
            let grid = GridColoring {
                rows,
                cols,
                faces: vec![Color::ZERO; rows * cols],
            };
            let fixed = vec![false; rows * cols];
            Search {
                grid,
                fixed,
                bc,
                visit: &mut visit,
            }
            .run(0);
        }
    }
    Ok(())
}

pub fn enumerate_colorings(
    rows: usize,
    cols: usize,
    bc: BoundaryCondition,
) -> Result<Vec<GridColoring>> {
    let mut out = Vec::new();
    for_each_coloring(rows, cols, bc, |g| out.push(g.clone()))?;
    Ok(out)
}

/// DWBC colorings with `n` internal vertices per row and top-left face color `corner`.
pub fn enumerate_dwbc_colorings(n: usize, corner: Color) -> Result<Vec<GridColoring>> {
    check_dwbc_size(n)?;
    let mut out = Vec::new();
    dwbc_search(n, corner, &mut |g: &GridColoring| out.push(g.clone()));
    Ok(out)
}

/// Face Boltzmann weights `z_0, z_1, z_2`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FaceWeightParams {
    pub z: [Complex64; 3],
}

impl FaceWeightParams {
    pub fn real(z0: f64, z1: f64, z2: f64) -> Self {
        FaceWeightParams {
            z: [z0, z1, z2].map(|x| Complex64::new(x, 0.0)),
        }
    }

    pub fn unit() -> Self {
        Self::real(1.0, 1.0, 1.0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusEntry {
    pub k0: usize,
    pub k1: usize,
    pub k2: usize,
    pub count: u64,
}

/// Number of colorings with a given number of faces of each color.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColoringCensus {
    pub rows: usize,
    pub cols: usize,
    pub bc: BoundaryCondition,
    pub counts: BTreeMap<[usize; 3], u64>,
}

impl ColoringCensus {
    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }

    pub fn entries(&self) -> Vec<CensusEntry> {
        self.counts
            .iter()
            .map(|(k, &count)| CensusEntry {
                k0: k[0],
                k1: k[1],
                k2: k[2],
                count,
            })
            .collect()
    }

    /// `sum C(k0,k1,k2) z0^k0 z1^k1 z2^k2`.
    pub fn generating_function(&self, z: &FaceWeightParams) -> Complex64 {
        self.counts
            .iter()
            .map(|(k, &count)| {
                count as f64
                    * z.z[0].powu(k[0] as u32)
                    * z.z[1].powu(k[1] as u32)
                    * z.z[2].powu(k[2] as u32)
            })
            .sum()
    }
}

pub fn census(rows: usize, cols: usize, bc: BoundaryCondition) -> Result<ColoringCensus> {
    let mut counts = BTreeMap::new();
    for_each_coloring(rows, cols, bc, |g| {
        *counts.entry(g.color_counts()).or_insert(0) += 1
    })?;
    Ok(ColoringCensus {
        rows,
        cols,
        bc,
        counts,
    })
}

/// Census of DWBC colorings restricted to one corner color.
pub fn census_dwbc(n: usize, corner: Color) -> Result<ColoringCensus> {
    check_dwbc_size(n)?;
    let mut counts = BTreeMap::new();
    dwbc_search(n, corner, &mut |g: &GridColoring| {
        *counts.entry(g.color_counts()).or_insert(0) += 1
    });
    Ok(ColoringCensus {
        rows: n + 1,
        cols: n + 1,
        bc: BoundaryCondition::Dwbc,
        counts,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Scan all 3^(rows*cols) arrays and keep the valid ones.
    fn exhaustive(rows: usize, cols: usize, bc: BoundaryCondition) -> usize {
        let cells = rows * cols;
        (0..3usize.pow(cells as u32))
            .filter(|&index| {
                let mut code = index;
                let faces: Vec<Color> = (0..cells)
                    .map(|_| {
                        let c = Color::from_int((code % 3) as i64);
                        code /= 3;
                        c
                    })
                    .collect();
                GridColoring { rows, cols, faces }.validate(bc).is_ok()
            })
            .count()
    }

    #[test]
    fn small_free_and_toroidal_counts() {
        assert_eq!(
            enumerate_colorings(1, 1, BoundaryCondition::Free)
                .unwrap()
                .len(),
            3
        );
        assert_eq!(
            enumerate_colorings(2, 2, BoundaryCondition::Toroidal)
                .unwrap()
                .len(),
            18
        );
        for (r, c) in [(1, 1), (1, 3), (2, 2), (2, 3), (3, 3), (3, 2)] {
            for bc in [BoundaryCondition::Free, BoundaryCondition::Toroidal] {
                assert_eq!(
                    enumerate_colorings(r, c, bc).unwrap().len(),
                    exhaustive(r, c, bc),
                    "{r}x{c} {bc}"
                );
            }
        }
    }

    #[test]
    fn degenerate_toroidal_rows_are_empty() {
        assert_eq!(
            enumerate_colorings(1, 4, BoundaryCondition::Toroidal)
                .unwrap()
                .len(),
            0
        );
        assert_eq!(
            enumerate_colorings(3, 1, BoundaryCondition::Toroidal)
                .unwrap()
                .len(),
            0
        );
    }

    #[test]
    fn dwbc_counts_match_exhaustive_scan() {
        for n in 1..=2 {
            let m = n + 1;
            let all = exhaustive(m, m, BoundaryCondition::Dwbc);
            let per_corner: Vec<usize> = Color::ALL
                .iter()
                .map(|&c| enumerate_dwbc_colorings(n, c).unwrap().len())
                .collect();
            assert_eq!(per_corner.iter().sum::<usize>(), all);
            assert!(per_corner.iter().all(|&k| k == per_corner[0]));
        }
        assert_eq!(enumerate_dwbc_colorings(3, Color::ZERO).unwrap().len(), 7);
    }

    #[test]
    fn dwbc_boundary_walk() {
        for g in enumerate_dwbc_colorings(3, Color::TWO).unwrap() {
            g.validate(BoundaryCondition::Dwbc).unwrap();
            assert_eq!(g.get(0, 0), Color::TWO);
            assert_eq!(g.get(3, 3), Color::TWO + 3);
        }
    }

    #[test]
    fn ordering_is_row_major_ascending() {
        let all = enumerate_colorings(2, 3, BoundaryCondition::Free).unwrap();
        for w in all.windows(2) {
            assert!(w[0].faces < w[1].faces);
        }
    }

    #[test]
    fn census_and_generating_function() {
        let c = census(1, 1, BoundaryCondition::Free).unwrap();
        assert_eq!(c.total(), 3);
        let z = c.generating_function(&FaceWeightParams::real(2.0, 3.0, 5.0));
        assert_eq!(z, Complex64::new(10.0, 0.0));
        let t = census(2, 2, BoundaryCondition::Toroidal).unwrap();
        assert_eq!(t.generating_function(&FaceWeightParams::unit()).re, 18.0);
        for entry in t.entries() {
            assert_eq!(entry.k0 + entry.k1 + entry.k2, 4);
        }
        let d = census_dwbc(2, Color::ZERO).unwrap();
        assert_eq!(d.total(), 2);
    }

    #[test]
    fn size_guards() {
        assert!(matches!(
            enumerate_colorings(5, 6, BoundaryCondition::Free),
            Err(Error::SizeGuard(_))
        ));
        assert!(matches!(
            enumerate_dwbc_colorings(6, Color::ZERO),
            Err(Error::SizeGuard(_))
        ));
        assert!(enumerate_colorings(3, 4, BoundaryCondition::Dwbc).is_err());
    }

    #[test]
    fn from_rows_validates() {
        let ok = GridColoring::from_rows(vec![
            vec![Color::ZERO, Color::ONE],
            vec![Color::ONE, Color::TWO],
        ]);
        assert!(ok.is_ok());
        let bad = GridColoring::from_rows(vec![vec![Color::ZERO, Color::ZERO]]);
        assert!(matches!(bad, Err(Error::InvalidColoring(_))));
    }
}
