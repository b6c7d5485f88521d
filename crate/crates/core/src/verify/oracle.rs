use std::collections::BTreeSet;

use crate::color::{Color, ColorLists, EdgeColoring};
use crate::error::{Error, Result};
use crate::graph::{EdgeId, EdgeSet, Multigraph, VertexId};

pub const DEFAULT_ORACLE_CAP: usize = 14;

/// Exhaustive backtracking over list choices. `Ok(None)` means no proper
/// list coloring exists.
pub fn brute_force_list_color(
    g: &Multigraph,
    active: &EdgeSet,
    lists: &ColorLists,
    cap: usize,
) -> Result<Option<EdgeColoring>> {
    if active.len() > cap {
        return Err(Error::OracleTooLarge {
            edges: active.len(),
            cap,
        });
    }
    let order = search_order(g, active);
    let choices: Vec<Vec<Color>> = order
        .iter()
        .map(|&e| lists.list(e).map(|l| l.iter().copied().collect()))
        .collect::<Result<_>>()?;
    let mut assigned: Vec<Color> = Vec::with_capacity(order.len());
    let found = backtrack(g, &order, &choices, &mut assigned, None);
    Ok(found.then(|| order.iter().copied().zip(assigned).collect()))
}

/// Fewest colors `1..=k` admitting a proper edge coloring.
pub fn brute_force_chi(g: &Multigraph, cap: usize) -> Result<usize> {
    let all = g.all_edges();
    if all.len() > cap {
        return Err(Error::OracleTooLarge {
            edges: all.len(),
            cap,
        });
    }
    let order = search_order(g, &all);
    let mut k = g.max_degree_in(&all);
    loop {
        let palette: Vec<Color> = (1..=k as Color).collect();
        let choices = vec![palette; order.len()];
        // With identical palettes, colors can be introduced in increasing order.
        if backtrack(g, &order, &choices, &mut Vec::new(), Some(0)) {
            return Ok(k);
        }
        k += 1;
    }
}

/// Edges ordered so each one meets as many earlier edges as possible.
fn search_order(g: &Multigraph, active: &EdgeSet) -> Vec<EdgeId> {
    let mut order = Vec::with_capacity(active.len());
    let mut left: BTreeSet<EdgeId> = active.as_set().clone();
    let mut touched: BTreeSet<VertexId> = BTreeSet::new();
    while !left.is_empty() {
        let next = *left
            .iter()
            .max_by_key(|&&e| {
                let (u, v) = g.endpoints(e);
                (
                    touched.contains(&u) as u8 + touched.contains(&v) as u8,
                    std::cmp::Reverse(e),
                )
            })
            .unwrap();
        left.remove(&next);
        let (u, v) = g.endpoints(next);
        touched.insert(u);
        touched.insert(v);
        order.push(next);
    }
    order
}

fn backtrack(
    g: &Multigraph,
    order: &[EdgeId],
    choices: &[Vec<Color>],
    assigned: &mut Vec<Color>,
    max_used: Option<Color>,
) -> bool {
    let i = assigned.len();
    if i == order.len() {
        return true;
    }
    let e = order[i];
    for &c in &choices[i] {
        if let Some(m) = max_used {
            if c > m + 1 {
                break;
            }
        }
        let clash = (0..i).any(|j| assigned[j] == c && g.adjacent(order[j], e));
        if clash {
            continue;
        }
        assigned.push(c);
        if backtrack(g, order, choices, assigned, max_used.map(|m| m.max(c))) {
            return true;
        }
        assigned.pop();
    }
    false
}

/// Whether the underlying simple graph has a cycle of odd length at least 5.
/// Such a cycle is exactly what keeps a graph from being line perfect.
pub fn has_long_odd_cycle(g: &Multigraph) -> bool {
    let n = g.vertex_count();
    let mut nbrs: Vec<BTreeSet<VertexId>> = vec![BTreeSet::new(); n];
    for &(u, v) in g.edges() {
        nbrs[u].insert(v);
        nbrs[v].insert(u);
    }
    let mut on_path = vec![false; n];
    (0..n).any(|s| {
        on_path[s] = true;
        let hit = odd_cycle_from(&nbrs, s, s, 1, &mut on_path);
        on_path[s] = false;
        hit
    })
}

// Simple paths from `start` through vertices larger than `start`.
fn odd_cycle_from(
    nbrs: &[BTreeSet<VertexId>],
    start: VertexId,
    at: VertexId,
    len: usize,
    on_path: &mut [bool],
) -> bool {
    for &next in &nbrs[at] {
        if next == start && len >= 5 && len % 2 == 1 {
            return true;
        }
        if next <= start || on_path[next] {
            continue;
        }
        on_path[next] = true;
        let hit = odd_cycle_from(nbrs, start, next, len + 1, on_path);
        on_path[next] = false;
        if hit {
            return true;
        }
    }
    false
}
