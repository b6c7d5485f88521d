use crate::audit::{Audit, Check, Step};
use crate::color::{ColorLists, EdgeColoring};
use crate::error::{Error, Result};
use crate::graph::{EdgeSet, Multigraph, VertexId};
use crate::structure::clique_bound;
use crate::transversal::find_reducing_sets;

use super::state::{DemandFunction, Reduction};

/// `d(v)` on `E(v)`, `χ'` elsewhere.
pub fn four_vertex_demand(g: &Multigraph, active: &EdgeSet, v: VertexId) -> DemandFunction {
    let chi = clique_bound(g, active);
    let dv = g.degree_in(active, v);
    DemandFunction {
        required: active
            .iter()
            .map(|e| (e, if g.is_incident(e, v) { dv } else { chi }))
            .collect(),
    }
}

/// List-colors a multigraph on at most four vertices from lists of size
/// `d(v)` on `E(v)` and `χ'` elsewhere.
///
/// Any two non-adjacent edges cover all four vertices, so coloring a
/// reducing set lowers every degree, every triangle and `χ'` by one and
/// keeps the demands satisfied.
pub fn solve_k4(
    g: &Multigraph,
    active: &EdgeSet,
    v: VertexId,
    lists: &ColorLists,
    audit: &mut Audit,
) -> Result<EdgeColoring> {
    let mut vertices = g.vertices_of(active);
    vertices.insert(v);
    if vertices.len() > 4 {
        return Err(Error::InvalidArgument(format!(
            "solve_k4 needs at most four vertices, got {vertices:?}"
        )));
    }
    let mut state = Reduction::new(g, active, lists);
    let demand = four_vertex_demand(g, &state.active, v);
    demand.check(&state.lists, audit)?;
    demand.trim(&mut state.lists);

    loop {
        let sets = find_reducing_sets(g, &state.active, &state.lists);
        let Some(&r) = sets.first() else {
            return state.finish(audit);
        };
        let chi_before = clique_bound(g, &state.active);
        state.apply(r);
        let chi_after = clique_bound(g, &state.active);
        audit.check(Check::ChiDrop, chi_after + 1 == chi_before, || {
            format!("chi' went from {chi_before} to {chi_after} after {r:?}")
        })?;
        four_vertex_demand(g, &state.active, v).check(&state.lists, audit)?;
        audit.step(Step::FourVertexReduce);
    }
}
