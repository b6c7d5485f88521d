use std::collections::BTreeMap;

use crate::audit::{Audit, Check, Step};
use crate::color::{Color, ColorLists, EdgeColoring};
use crate::error::{InvariantViolation, Result};
use crate::graph::{EdgeId, EdgeSet, Multigraph};
use crate::transversal::{solve_sdr, ReducingSet, SdrOutcome};

/// Required list size for every active edge.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct DemandFunction {
    pub required: BTreeMap<EdgeId, usize>,
}

impl DemandFunction {
    pub fn get(&self, e: EdgeId) -> usize {
        self.required.get(&e).copied().unwrap_or(0)
    }

    /// First edge whose list is smaller than its demand.
    pub fn first_shortfall(&self, lists: &ColorLists) -> Option<(EdgeId, usize, usize)> {
        self.required
            .iter()
            .map(|(&e, &need)| (e, lists.size(e), need))
            .find(|&(_, have, need)| have < need)
    }

    pub fn check(&self, lists: &ColorLists, audit: &mut Audit) -> Result<(), InvariantViolation> {
        let shortfall = self.first_shortfall(lists);
        audit.check(Check::Demand, shortfall.is_none(), || {
            let (e, have, need) = shortfall.unwrap();
            format!("edge {e} has {have} colors, demand is {need}")
        })
    }

    /// Trims every list to exactly its demand, keeping the smallest colors.
    pub fn trim(&self, lists: &mut ColorLists) {
        for (&e, &need) in &self.required {
            lists.trim(e, need);
        }
    }
}

/// Uncolored edges, their current lists, and the colors fixed so far.
pub(crate) struct Reduction<'g> {
    pub g: &'g Multigraph,
    pub active: EdgeSet,
    pub lists: ColorLists,
    pub coloring: EdgeColoring,
}

impl<'g> Reduction<'g> {
    pub fn new(g: &'g Multigraph, active: &EdgeSet, lists: &ColorLists) -> Self {
        Self {
            g,
            active: active.clone(),
            lists: lists.restrict(active),
            coloring: EdgeColoring::new(),
        }
    }

    pub fn color_edge(&mut self, e: EdgeId, c: Color) {
        self.coloring.assign(e, c);
        self.active.remove(e);
        self.lists.drop_edge(e);
        self.lists.remove_color(c);
    }

    pub fn apply(&mut self, r: ReducingSet) {
        self.coloring.assign(r.e, r.c);
        self.active.remove(r.e);
        self.lists.drop_edge(r.e);
        self.color_edge(r.q, r.c);
    }

    pub fn incident(&self, v: usize) -> EdgeSet {
        self.g.incident_in(&self.active, v)
    }

    pub fn between(&self, u: usize, v: usize) -> EdgeSet {
        self.g.between_in(&self.active, u, v)
    }

    /// Colors the transversal base case by distinct representatives.
    pub fn finish(mut self, audit: &mut Audit) -> Result<EdgeColoring> {
        let outcome = solve_sdr(self.g, &self.active, &self.lists)?;
        match outcome {
            SdrOutcome::Coloring(c) => {
                audit.check(Check::Hall, true, String::new)?;
                audit.step(Step::Transversal);
                self.coloring.merge(&c);
                Ok(self.coloring)
            }
            SdrOutcome::Violator(v) => Err(audit
                .check(Check::Hall, false, || {
                    format!(
                        "Hall violator {:?} sees only colors {:?}; lists {:?}",
                        v.edges, v.colors, self.lists
                    )
                })
                .unwrap_err()
                .into()),
        }
    }
}

impl Reduction<'_> {
    /// Colors a reducing set and checks the apex-degree drop and the
    /// big/great monotonicity against the previous profile.
    pub fn apply_tracked(
        &mut self,
        r: ReducingSet,
        profile: &mut super::TriangleProfile,
        centers: &[usize],
        audit: &mut Audit,
    ) -> Result<()> {
        self.apply(r);
        let next = super::profile::profile_of(
            self.g,
            &self.active,
            profile.apex_a,
            profile.apex_b,
            centers,
        )?;
        super::profile::check_pair_removal(profile, &next, audit)?;
        *profile = next;
        Ok(())
    }
}
