//! End-to-end pipeline: blocks in depth-first order, colors already used at
//! the entry vertex removed from the block's lists, and each block handed to
//! the solver for its shape.

use serde::{Deserialize, Serialize};

use crate::audit::{Audit, Check};
use crate::bipartite::solve_bipartite;
use crate::clique::{solve_k11n_apex, solve_k11n_center, solve_k4};
use crate::color::{Color, ColorLists, ColorSet, EdgeColoring};
use crate::error::{Error, Result};
use crate::graph::{EdgeSet, Multigraph, VertexId};
use crate::structure::{analyze, chromatic_index_of, full_order, BlockClass, BlockTask};
use crate::verify::{brute_force_list_color, verify_coloring};

/// Blocks larger than this are never handed to the brute-force fallback.
pub const FALLBACK_CAP: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    pub graph: Multigraph,
    pub lists: ColorLists,
}

/// One line of the per-block trace.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockTrace {
    pub block: usize,
    pub class: String,
    pub entry: Option<VertexId>,
    /// Number of colors removed from the lists at the entry vertex.
    pub forbidden: usize,
    /// Recursion levels the block's solver went through.
    pub depth: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolveReport {
    /// Color of edge `i` at position `i`.
    pub colors: Vec<Color>,
    pub trace: Vec<BlockTrace>,
    /// False if some block had to be colored by the brute-force fallback.
    pub conforming: bool,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub diagnostics: Vec<String>,
}

impl SolveReport {
    pub fn coloring(&self) -> EdgeColoring {
        EdgeColoring::from_dense(&self.colors)
    }
}

/// Colors already used on edges at `v`. Fails if an edge of `block` is
/// already colored.
pub fn forbidden_at_cut(
    partial: &EdgeColoring,
    g: &Multigraph,
    v: VertexId,
    block: &EdgeSet,
) -> Result<ColorSet> {
    if let Some(e) = block.iter().find(|&e| partial.get(e).is_some()) {
        return Err(Error::Contract(format!(
            "edge {e} of the block is already colored"
        )));
    }
    Ok(partial.colors_on(g.incident(v).iter().copied()))
}

/// Solves from the block containing edge 0.
pub fn solve(inst: &Instance) -> Result<SolveReport> {
    solve_with_root(inst, 0, &mut Audit::new())
}

/// Solves with the traversal rooted at block `root`; checks are tallied in
/// `audit`.
pub fn solve_with_root(inst: &Instance, root: usize, audit: &mut Audit) -> Result<SolveReport> {
    let g = &inst.graph;
    let analysis = analyze(g)?;
    let chi = chromatic_index_of(g, &analysis);
    for e in 0..g.edge_count() {
        let size = inst.lists.list(e)?.len();
        if size < chi {
            return Err(Error::ListTooSmall {
                edge: e,
                size,
                required: chi,
            });
        }
    }

    let tasks = full_order(&analysis.decomposition, root)?;
    let mut coloring = EdgeColoring::new();
    let mut report = SolveReport {
        colors: Vec::new(),
        trace: Vec::with_capacity(tasks.len()),
        conforming: true,
        diagnostics: Vec::new(),
    };
    for task in &tasks {
        let class = &analysis.classes[task.index];
        let mut local = Audit::new();
        let forbidden = match task.entry_vertex {
            Some(v) => forbidden_at_cut(&coloring, g, v, &task.block)?,
            None => ColorSet::new(),
        };
        let mut lists = inst.lists.restrict(&task.block);
        if let Some(v) = task.entry_vertex {
            lists.subtract(&g.incident_in(&task.block, v), &forbidden);
        }
        let outcome = solve_block(g, task, class, &coloring, &lists, &mut local);
        audit.absorb(&local);
        let block_coloring = match outcome {
            Ok(c) => c,
            Err(Error::Invariant(violation)) => {
                let fallback = brute_force_list_color(g, &task.block, &lists, FALLBACK_CAP)?
                    .ok_or_else(|| Error::Invariant(violation.clone()))?;
                report.conforming = false;
                report.diagnostics.push(format!(
                    "block {}: {violation}; colored by brute force",
                    task.index
                ));
                fallback
            }
            Err(e) => return Err(e),
        };
        coloring.merge(&block_coloring);
        report.trace.push(BlockTrace {
            block: task.index,
            class: class.kind().to_string(),
            entry: task.entry_vertex,
            forbidden: forbidden.len(),
            depth: local.levels(),
        });
    }
    report.colors = coloring
        .to_dense(g.edge_count())
        .ok_or_else(|| Error::Contract("some edge lies in no block and stayed uncolored".into()))?;
    Ok(report)
}

fn solve_block(
    g: &Multigraph,
    task: &BlockTask,
    class: &BlockClass,
    coloring: &EdgeColoring,
    lists: &ColorLists,
    audit: &mut Audit,
) -> Result<EdgeColoring> {
    let block = &task.block;
    let vertices = g.vertices_of(block);
    let touched: Vec<VertexId> = vertices
        .iter()
        .copied()
        .filter(|&v| g.incident(v).iter().any(|&e| coloring.get(e).is_some()))
        .collect();
    audit.check(
        Check::SingleEntry,
        touched.iter().all(|&v| Some(v) == task.entry_vertex),
        || format!("block {} meets colored edges at {touched:?}", task.index),
    )?;
    if let Some(v) = task.entry_vertex {
        let need = g.degree_in(block, v);
        let short = g
            .incident_in(block, v)
            .iter()
            .find(|&e| lists.size(e) < need);
        audit.check(Check::CutListSize, short.is_none(), || {
            format!("edge {short:?} at entry vertex {v} has fewer than {need} colors")
        })?;
    }

    let first = *vertices.first().expect("blocks are never empty");
    let c = match class {
        BlockClass::Bipartite(_) => {
            solve_bipartite(g, block, task.entry_vertex.unwrap_or(first), lists, audit)?
        }
        BlockClass::FourVertex => {
            solve_k4(g, block, task.entry_vertex.unwrap_or(first), lists, audit)?
        }
        &BlockClass::K11n { apex_a, apex_b, .. } => match task.entry_vertex {
            None => solve_k11n_apex(g, block, apex_a, apex_b, lists, audit)?,
            Some(v) if v == apex_a => solve_k11n_apex(g, block, apex_a, apex_b, lists, audit)?,
            Some(v) if v == apex_b => solve_k11n_apex(g, block, apex_b, apex_a, lists, audit)?,
            Some(v) => solve_k11n_center(g, block, apex_a, apex_b, v, lists, audit)?,
        },
    };
    let verdict = verify_coloring(g, block, lists, &c);
    audit.check(Check::BlockColoring, verdict.is_ok(), || {
        format!("block {}: {}", task.index, verdict.unwrap_err())
    })?;
    Ok(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures::triangle;
    use crate::verify::identical_lists;

    fn instance(g: Multigraph, lists: ColorLists) -> Instance {
        Instance { graph: g, lists }
    }

    #[test]
    fn triangle_with_three_colors() {
        let inst = instance(triangle(), identical_lists(3, 3));
        let r = solve(&inst).unwrap();
        assert!(r.conforming);
        verify_coloring(
            &inst.graph,
            &inst.graph.all_edges(),
            &inst.lists,
            &r.coloring(),
        )
        .unwrap();
    }

    #[test]
    fn two_triangles_share_a_vertex() {
        let g = Multigraph::new(5, vec![(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)]).unwrap();
        let inst = instance(g, identical_lists(6, 4));
        let r = solve(&inst).unwrap();
        assert!(r.conforming);
        assert_eq!(r.trace.len(), 2);
        assert_eq!(r.trace[1].entry, Some(2));
        assert_eq!(r.trace[1].forbidden, 2);
        verify_coloring(
            &inst.graph,
            &inst.graph.all_edges(),
            &inst.lists,
            &r.coloring(),
        )
        .unwrap();
    }

    #[test]
    fn empty_graph() {
        let inst = instance(Multigraph::new(3, vec![]).unwrap(), ColorLists::new());
        let r = solve(&inst).unwrap();
        assert!(r.colors.is_empty());
        assert!(r.trace.is_empty());
    }

    #[test]
    fn short_lists_are_rejected() {
        let inst = instance(triangle(), identical_lists(3, 2));
        assert!(matches!(
            solve(&inst),
            Err(Error::ListTooSmall {
                edge: 0,
                size: 2,
                required: 3
            })
        ));
    }

    #[test]
    fn long_odd_cycle_is_not_line_perfect() {
        let g = crate::graph::fixtures::cycle(5);
        let inst = instance(g, identical_lists(5, 3));
        assert!(matches!(solve(&inst), Err(Error::NotLinePerfect { .. })));
    }

    #[test]
    fn forbidden_colors_at_a_cut() {
        let g = Multigraph::new(5, vec![(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)]).unwrap();
        let second = EdgeSet::from([3, 4, 5]);
        assert!(forbidden_at_cut(&EdgeColoring::new(), &g, 2, &second)
            .unwrap()
            .is_empty());
        let partial: EdgeColoring = [(0, 2), (1, 1), (2, 3)].into_iter().collect();
        assert_eq!(
            forbidden_at_cut(&partial, &g, 2, &second).unwrap(),
            ColorSet::from([1, 3])
        );
        let clash: EdgeColoring = [(3, 1)].into_iter().collect();
        assert!(forbidden_at_cut(&clash, &g, 2, &second).is_err());
    }
}
