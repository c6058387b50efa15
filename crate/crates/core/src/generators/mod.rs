//! Graph families, exhaustive enumeration of small graphs, and seeded
//! sampling from classes.

mod enumerate;
mod families;
mod random;
mod subdivision;

pub use enumerate::{enumerate_graphs, enumerate_graphs_within, enumerate_up_to, EnumerationStream};
pub use families::{families_up_to, make_family, obstruction_families, Family, FamilyParams};
pub use random::{random_in_class, random_in_class_with_budget, DEFAULT_BUDGET, RANDOM_MAX_VERTICES};
pub use subdivision::{
    bipartite_inequality_holds, subdivision_lower_bound_check, subdivision_lower_bound_check_within,
    SubdivisionReport,
};
