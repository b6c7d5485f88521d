use crate::audit::{Audit, Check, Step};
use crate::color::{ColorLists, EdgeColoring};
use crate::error::Result;
use crate::graph::{EdgeSet, Multigraph, VertexId};
use crate::transversal::find_reducing_sets;

use super::profile::{check_profile, profile_of, TriangleProfile};
use super::state::{DemandFunction, Reduction};

/// `d(a)` on `E(a)`, `max(d(a), d(b), t(v))` on `E(b, v)`.
pub fn apex_demand(g: &Multigraph, active: &EdgeSet, p: &TriangleProfile) -> DemandFunction {
    let (a, b) = (p.apex_a, p.apex_b);
    DemandFunction {
        required: active
            .iter()
            .map(|e| {
                let need = if g.is_incident(e, a) {
                    p.deg_a
                } else {
                    p.apex_max().max(p.t(g.other_end(e, b)))
                };
                (e, need)
            })
            .collect(),
    }
}

/// List-colors a graph on apexes `a`, `b` and independent centers, with the
/// distinguished vertex at apex `a`.
///
/// Each level prefers a reducing set that meets the center with the largest
/// triangle; any other choice then avoids that center's colors.
pub fn solve_k11n_apex(
    g: &Multigraph,
    active: &EdgeSet,
    a: VertexId,
    b: VertexId,
    lists: &ColorLists,
    audit: &mut Audit,
) -> Result<EdgeColoring> {
    let centers: Vec<VertexId> = g
        .vertices_of(active)
        .into_iter()
        .filter(|&v| v != a && v != b)
        .collect();
    solve_apex_with(g, active, a, b, &centers, lists, audit)
}

pub(crate) fn solve_apex_with(
    g: &Multigraph,
    active: &EdgeSet,
    a: VertexId,
    b: VertexId,
    centers: &[VertexId],
    lists: &ColorLists,
    audit: &mut Audit,
) -> Result<EdgeColoring> {
    let mut state = Reduction::new(g, active, lists);
    let mut profile = profile_of(g, &state.active, a, b, centers)?;
    let demand = apex_demand(g, &state.active, &profile);
    demand.check(&state.lists, audit)?;
    demand.trim(&mut state.lists);

    loop {
        check_profile(&profile, audit)?;
        let sets = find_reducing_sets(g, &state.active, &state.lists);
        if sets.is_empty() {
            return state.finish(audit);
        }
        let leader = profile.sorted_centers().first().copied();
        let near = leader.map(|v| state.incident(v)).unwrap_or_default();
        let chosen = match sets.iter().find(|r| r.touches(&near)) {
            Some(&r) => {
                audit.step(Step::ApexPreferV1);
                r
            }
            None => {
                let r = sets[0];
                let leader_colors = leader
                    .map(|v| state.lists.at_vertex(g, &state.active, v))
                    .unwrap_or_default();
                audit.check(Check::ReducingChoice, !leader_colors.contains(&r.c), || {
                    format!("{r:?} avoids E({leader:?}) but its color is in A({leader:?})")
                })?;
                audit.step(Step::ApexAny);
                r
            }
        };
        state.apply_tracked(chosen, &mut profile, centers, audit)?;
        apex_demand(g, &state.active, &profile).check(&state.lists, audit)?;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures::triangle;
    use crate::verify::verify_coloring;

    #[test]
    fn simple_k112_from_apex() {
        // a = 0, b = 1, centers 2, 3. d(a) = d(b) = 3, t = 3.
        let g = Multigraph::new(4, vec![(0, 1), (0, 2), (1, 2), (0, 3), (1, 3)]).unwrap();
        let lists = ColorLists::from_vecs(vec![vec![1, 2, 3]; 5]);
        let c = solve_k11n_apex(&g, &g.all_edges(), 0, 1, &lists, &mut Audit::new()).unwrap();
        verify_coloring(&g, &g.all_edges(), &lists, &c).unwrap();
    }

    #[test]
    fn single_triangle() {
        let g = triangle();
        // d(a) = 2 on E(a) = {0, 2}; max(d(b), t) = 3 on E(b, v) = {1}.
        let lists = ColorLists::from_vecs([vec![1, 2], vec![1, 2, 3], vec![1, 2]]);
        let c = solve_k11n_apex(&g, &g.all_edges(), 0, 1, &lists, &mut Audit::new()).unwrap();
        verify_coloring(&g, &g.all_edges(), &lists, &c).unwrap();
        assert_eq!(c.get(1), Some(3));
    }

    #[test]
    fn transversal_lists_go_straight_to_sdr() {
        let g = Multigraph::new(4, vec![(0, 1), (0, 2), (1, 2), (0, 3), (1, 3)]).unwrap();
        // Non-adjacent pairs: (1, 4) and (2, 3).
        let lists = ColorLists::from_vecs([
            vec![1, 2, 3],
            vec![1, 2, 3],
            vec![4, 5, 6],
            vec![7, 8, 9],
            vec![10, 11, 12],
        ]);
        let mut audit = Audit::new();
        let c = solve_k11n_apex(&g, &g.all_edges(), 0, 1, &lists, &mut audit).unwrap();
        verify_coloring(&g, &g.all_edges(), &lists, &c).unwrap();
        assert_eq!(audit.steps(Step::Transversal), 1);
        assert_eq!(audit.levels(), 1);
    }
}
