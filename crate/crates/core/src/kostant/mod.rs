//! `Spec Z^μ(g)`: components, rank-1 presentations, symmetries and
//! sampled membership in higher rank.

mod components;
pub mod membership;
mod presentation;
pub mod rank1;
pub mod symmetry;

pub use components::{center_components, CenterComponent, ComponentJson};
pub use membership::{interpolate_relations, membership_test, MembershipReport};
pub use presentation::{CenterPresentation, CoordSystem, PresentationJson};
pub use rank1::{
    center_ideal_rank1, change_presentation, graded_medium, restriction_surjection_check, rozhkovskaya_presentation,
};
pub use symmetry::{is_sign_invariant, is_swap_invariant, phi_involution, KleinAction, KleinElement};

use crate::error::Result;
use crate::liecore::{weight_system, Bounds, RootSystem, Weight};

/// `Σ_λ (m^μ_λ)²`, the rank of `R^μ(g)` over `Z(g)`.
pub fn fiber_dimension(rs: &RootSystem, mu: &Weight, bounds: &Bounds) -> Result<u64> {
    Ok(crate::liecore::fiber_dimension(&weight_system(rs, mu, bounds)?))
}
