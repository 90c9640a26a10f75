//! Named code families and the explicit vectors that extend them.

mod cyclic;
mod deep_holes;
mod grs;
mod roth_lempel;
mod sets;

pub use cyclic::{
    cyclic_code, cyclic_extension_facts, cyclic_spec, CyclicExtensionFacts, CyclicSpec,
};
pub use deep_holes::{
    egrs_dual_code, egrs_dual_monomial, egrs_dual_pole, grs_deep_hole_family, in_orbit,
    rs_deep_hole_family, rs_pole_family, CandidateKind, DeepHoleCandidate, PoleFamily,
};
pub use grs::{egrs, grs, grs_dual_weights, grs_extension_vector, prs, GrsSpec};
pub use roth_lempel::{roth_lempel, roth_lempel_extension_vector, roth_lempel_generator};
pub use sets::{is_nk_delta_set, subset_sums, t_set};
