//! Exact, exponential-time graph parameters for small graphs.

mod decomposition;
mod elimination;
mod epsilon;
mod fvs;
mod numbers;
mod splitness;

pub use decomposition::{
    alpha_of_decomposition, theta_of_decomposition, validate_decomposition, width_of_decomposition,
    TreeDecomposition, Violation,
};
pub use elimination::{
    tree_alpha, tree_alpha_within, tree_theta, tree_theta_within, treewidth, treewidth_decomposition,
    treewidth_within,
};
pub use epsilon::{c_kt, epsilon_table, parse_rational, EpsilonTable};
pub use fvs::fvs_min;
pub use numbers::{
    alpha, alpha_in, chi, chi_in, ibn, ibn_with_witness, max_clique_in, max_independent_set_in, omega,
    omega_in, theta, theta_in,
};
pub use splitness::{splitness, SplitPartition};

pub(crate) use elimination::from_elimination_order;
