//! The six-vertex model with domain wall boundary conditions and its trigonometric weights.

mod kind;
mod model;
mod state;

pub use kind::VertexKind;
pub use model::{
    check_recursion_6v, f_n_6v, functional_sum_6v, functional_sum_6v_signed, partition_function_6v,
    partition_function_6v_accumulated, trig_cubic_residual, weight6v, FunctionalSum, Recursion6v,
    RecursionCheck,
};
pub use state::{dwbc_ensemble, enumerate_dwbc_states, DwbcEnsemble, SixVertexState, MAX_DWBC_N};
