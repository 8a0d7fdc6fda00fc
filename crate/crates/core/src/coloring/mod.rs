//! Proper three-colorings of the square lattice faces, the elliptic face weights and the
//! domain-wall partition functions built from them.

mod grid;
mod lenard;
mod partition;
mod weights;

pub use grid::{
    census, census_dwbc, dwbc_boundary_color, enumerate_colorings, enumerate_dwbc_colorings,
    for_each_coloring, BoundaryCondition, CensusEntry, ColoringCensus, FaceWeightParams,
    GridColoring, MAX_DWBC_COLORING_N, MAX_FACES,
};
pub use lenard::lenard_map;
pub use partition::{
    check_recursion_3c, f_one_closed_form, f_one_terms, f_pi_shift_check, f_rn,
    f_shift_law_residual, functional_sum_3c, partial_partition_accumulated,
    partial_partition_function, partial_partition_with, phi_ratio_relation_check,
    total_partition_function, DwbcVertexTable, PhiRatioForm, PiShiftCheck, Recursion3c,
};
pub use weights::{
    psi_law_residual, raw_weight, shift_relation_residuals, tilde_weight, ColoredVertexKind,
    ColoredWeights, PsiConvention, ShiftReadings, WeightFamily3c, ZetaLogs,
};
