//! Independent checkers, brute-force oracles and random instance generators.
//!
//! Nothing here calls into the solvers; the oracles only share the graph
//! and list types with them.

mod gen;
mod oracle;

use thiserror::Error;

use crate::bipartite::LineOrientation;
use crate::color::{Color, ColorLists, EdgeColoring};
use crate::graph::{EdgeId, EdgeSet, Multigraph};

pub use gen::{
    gen_line_perfect, identical_lists, random_four_vertex, random_lists, random_transversal,
    BlockKind, GenParams, KindWeights,
};
pub use oracle::{brute_force_chi, brute_force_list_color, has_long_odd_cycle, DEFAULT_ORACLE_CAP};

/// First reason a coloring is rejected.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ColoringViolation {
    #[error("edge {edge} is uncolored")]
    Uncolored { edge: EdgeId },
    #[error("edge {edge} has color {color}, which is not in its list")]
    OutsideList { edge: EdgeId, color: Color },
    #[error("edges {first} and {second} share an endpoint and both have color {color}")]
    Clash {
        first: EdgeId,
        second: EdgeId,
        color: Color,
    },
}

/// Checks that every edge of `active` is colored from its list and that no
/// two edges sharing an endpoint get the same color.
pub fn verify_coloring(
    g: &Multigraph,
    active: &EdgeSet,
    lists: &ColorLists,
    coloring: &EdgeColoring,
) -> Result<(), ColoringViolation> {
    for e in active {
        let color = coloring
            .get(e)
            .ok_or(ColoringViolation::Uncolored { edge: e })?;
        if !lists.contains(e, color) {
            return Err(ColoringViolation::OutsideList { edge: e, color });
        }
    }
    for v in g.vertices_of(active) {
        let at_v = g.incident_in(active, v).to_vec();
        for (i, &e) in at_v.iter().enumerate() {
            for &q in &at_v[i + 1..] {
                let color = coloring.get(e).unwrap();
                if coloring.get(q) == Some(color) {
                    return Err(ColoringViolation::Clash {
                        first: e,
                        second: q,
                        color,
                    });
                }
            }
        }
    }
    Ok(())
}

/// `k ⊆ active` is independent in the orientation and every other edge of
/// `active` has an arc into it.
pub fn verify_kernel(d: &LineOrientation, active: &EdgeSet, k: &EdgeSet) -> bool {
    if !k.is_subset(active) {
        return false;
    }
    let independent = k
        .iter()
        .all(|e| k.iter().all(|q| e == q || !d.has_arc(e, q)));
    let absorbing = active
        .iter()
        .filter(|&e| !k.contains(e))
        .all(|e| d.out_neighbors(e).any(|q| k.contains(q)));
    independent && absorbing
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bipartite::{konig_color, orient, Bipartition};
    use crate::graph::fixtures::{double_edge, star};

    #[test]
    fn coloring_violations_name_the_culprit() {
        let g = double_edge();
        let all = g.all_edges();
        let lists = ColorLists::from_vecs([vec![1, 2], vec![1, 2]]);
        let same: EdgeColoring = [(0, 1), (1, 1)].into_iter().collect();
        assert_eq!(
            verify_coloring(&g, &all, &lists, &same),
            Err(ColoringViolation::Clash {
                first: 0,
                second: 1,
                color: 1
            })
        );
        let outside: EdgeColoring = [(0, 3), (1, 1)].into_iter().collect();
        assert_eq!(
            verify_coloring(&g, &all, &lists, &outside),
            Err(ColoringViolation::OutsideList { edge: 0, color: 3 })
        );
        let partial: EdgeColoring = [(0, 1)].into_iter().collect();
        assert_eq!(
            verify_coloring(&g, &all, &lists, &partial),
            Err(ColoringViolation::Uncolored { edge: 1 })
        );
        let good: EdgeColoring = [(0, 2), (1, 1)].into_iter().collect();
        assert!(verify_coloring(&g, &all, &lists, &good).is_ok());
    }

    #[test]
    fn kernel_examples() {
        // Star centered in X: arcs point from low to high colors.
        let g = star(3);
        let all = g.all_edges();
        let bip = Bipartition::of(&g, &all, 0).unwrap();
        let c = konig_color(&g, &all, &bip).unwrap();
        let d = orient(&g, &all, &bip, &c).unwrap();
        let top = all.iter().max_by_key(|&e| c.get(e)).unwrap();
        assert!(verify_kernel(&d, &all, &EdgeSet::from([top])));
        assert!(!verify_kernel(&d, &all, &EdgeSet::from([0, 1])));
        assert!(!verify_kernel(&d, &all, &EdgeSet::new()));
        assert!(verify_kernel(&d, &EdgeSet::new(), &EdgeSet::new()));
    }
}
