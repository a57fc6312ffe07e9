//! Fixed points for the special linear family.

pub mod chains;
pub mod euler;
pub mod intersection;
pub mod reps;
pub mod window;

pub use chains::{
    chain_of_sigma, enumerate_chains, enumerate_sigmas, gaps_of_levels,
    intersection_matrix_of_chain, intersection_matrix_of_sigma, is_valid_sigma, sigma_of_chain,
    sigma_of_matrix, ChainTuple, ParahoricTypeA, StepAssignment,
};
pub use euler::{
    default_springer_s, euler_sl, euler_sl_fiber_sum, euler_sl_full_flag_fibers, euler_sl_oracle,
    springer_base_window_sl, springer_euler_sl, springer_euler_sl_oracle,
};
pub use intersection::{
    count_intersection_matrices, enumerate_intersection_matrices, IntersectionMatrix,
};
pub use reps::{admissible_sl, companion_rep, nu_sl, standard_rep_sl};
pub use window::{
    enumerate_r, in_c_sm, in_window, jordan_type_of_window, phi, phi_inverse, psi, window_cells,
    WindowVector,
};
