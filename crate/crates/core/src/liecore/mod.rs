//! Root systems, Weyl groups and the dot-action, weight systems with
//! Freudenthal multiplicities, and W-orbits of weights.

mod rootsystem;
mod weight;
mod weightsys;
mod weyl;

pub use rootsystem::{Bounds, RootSystem, Series};
pub use weight::Weight;
pub use weightsys::{
    fiber_dimension, is_multiplicity_free, orbit_decomposition, weight_system, WeightEntryJson, WeightOrbit,
    WeightSystem,
};
pub use weyl::{dot_action, dot_orbit, weyl_group, WeylElement};
