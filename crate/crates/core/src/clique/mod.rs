//! Reducing-set inductions for non-bipartite blocks.
//!
//! Each solver repeatedly colors a reducing set (or, in one rule, a single
//! apex edge), deletes the used color from every list, and recomputes the
//! degrees, triangle sizes and demands of the smaller graph. Once no
//! reducing set is left the remaining lists are colored by distinct
//! representatives. Every bound the induction relies on is checked at every
//! level through [`Audit`](crate::audit::Audit).

mod apex;
mod center;
mod four;
mod profile;
mod state;

pub use apex::{apex_demand, solve_k11n_apex};
pub use center::{
    center_demand, classify_splitting, solve_k11n_center, weak_phase, SplitFrame, SplittingClass,
    WeakBounds,
};
pub use four::{four_vertex_demand, solve_k4};
pub use profile::{triangle_profile, TriangleProfile};
pub use state::DemandFunction;
