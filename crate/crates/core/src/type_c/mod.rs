//! Fixed points for the symplectic family.

pub mod chains;
pub mod euler;
pub mod game;
pub mod graph;
pub mod reps;
pub mod window;

pub use chains::{
    check_sp_levels, enumerate_e, enumerate_e_from, enumerate_sp_chains, enumerate_sp_chains_from,
    PathTuple, SpChainTuple,
};
pub use euler::{
    compare_with_sl, default_springer_s_sp, euler_sp, euler_sp_fiber_sum, euler_sp_oracle,
    euler_sp_paths, hyperoctahedral_order, integer_partitions, sl_type_of, sp_gaps,
    springer_base_window, springer_euler_sp, springer_euler_sp_oracle, symplectic_partitions,
    SlComparison, SymplecticPartition,
};
pub use game::{
    alpha, beta, eta, eta0_inverse, eta_fiber, fiber_count, game_outcomes, gamma, gamma_brute,
    pooled_gamma, pooled_gamma_brute, tau, theta, wall_cells, zeta,
};
pub use graph::{
    count_g, delta_out_edges, enumerate_g, reachable_any, reachable_in, succession_counts,
    succession_counts_scan, successions, vertices,
};
pub use reps::{admissible_sp, nu_sp, standard_rep_sp, symplectic_rep_from_h, SpAdmissibility};
pub use window::{
    enumerate_r_sp, epsilon, marker_sum, psi_sp, psi_sp_inverse, q_coords, q_coords_inverse,
    vertex_of_window, window_of_vertex, SpQVector, SpVertex, SpWindowVector,
};
