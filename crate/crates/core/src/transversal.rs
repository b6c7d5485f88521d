//! Reducing sets and the transversal base case.
//!
//! When no two non-adjacent edges share a color, a proper list coloring
//! must use distinct colors everywhere, so it is a system of distinct
//! representatives of the lists and exists iff Hall's condition holds.

use std::collections::BTreeMap;

use crate::color::{Color, ColorLists, ColorSet, EdgeColoring};
use crate::error::{Error, Result};
use crate::graph::{EdgeId, EdgeSet, Multigraph};

/// Two non-adjacent edges `e < q` whose lists both contain `c`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ReducingSet {
    pub e: EdgeId,
    pub q: EdgeId,
    pub c: Color,
}

impl ReducingSet {
    pub fn touches(&self, edges: &EdgeSet) -> bool {
        edges.contains(self.e) || edges.contains(self.q)
    }

    /// One edge lies in `first` and the other in `second`.
    pub fn straddles(&self, first: &EdgeSet, second: &EdgeSet) -> bool {
        (first.contains(self.e) && second.contains(self.q))
            || (first.contains(self.q) && second.contains(self.e))
    }
}

/// Every reducing set among `active`, ordered by `e`, then `q`, then color.
pub fn find_reducing_sets(
    g: &Multigraph,
    active: &EdgeSet,
    lists: &ColorLists,
) -> Vec<ReducingSet> {
    let edges = active.to_vec();
    let empty = ColorSet::new();
    let mut out = Vec::new();
    for (i, &e) in edges.iter().enumerate() {
        let le = lists.get(e).unwrap_or(&empty);
        for &q in &edges[i + 1..] {
            if g.adjacent(e, q) {
                continue;
            }
            let lq = lists.get(q).unwrap_or(&empty);
            out.extend(le.intersection(lq).map(|&c| ReducingSet { e, q, c }));
        }
    }
    out
}

pub fn is_transversal_case(g: &Multigraph, active: &EdgeSet, lists: &ColorLists) -> bool {
    let edges = active.to_vec();
    edges.iter().enumerate().all(|(i, &e)| {
        edges[i + 1..].iter().all(|&q| {
            g.adjacent(e, q)
                || match (lists.get(e), lists.get(q)) {
                    (Some(a), Some(b)) => a.is_disjoint(b),
                    _ => true,
                }
        })
    })
}

/// A set `F` of edges with `|F| > |A_F|`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HallViolator {
    pub edges: EdgeSet,
    pub colors: ColorSet,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SdrOutcome {
    Coloring(EdgeColoring),
    Violator(HallViolator),
}

/// Distinct representatives for the lists of `active`, or a Hall violator.
///
/// Augmenting-path matching of edges against colors, edges in ascending
/// order and colors tried ascending. On failure, `F` is the set of edges
/// reachable from an unmatched edge along alternating paths; every color
/// those edges can see is matched inside `F`, so `|A_F| = |F| - 1`.
pub fn solve_sdr(g: &Multigraph, active: &EdgeSet, lists: &ColorLists) -> Result<SdrOutcome> {
    if !is_transversal_case(g, active, lists) {
        return Err(Error::Contract(
            "solve_sdr called while reducing sets exist".into(),
        ));
    }
    let mut owner: BTreeMap<Color, EdgeId> = BTreeMap::new();
    for e in active {
        let mut visited = ColorSet::new();
        if !augment(e, lists, &mut owner, &mut visited) {
            return Ok(SdrOutcome::Violator(hall_witness(e, lists, &owner)));
        }
    }
    Ok(SdrOutcome::Coloring(
        owner.into_iter().map(|(c, e)| (e, c)).collect(),
    ))
}

fn augment(
    e: EdgeId,
    lists: &ColorLists,
    owner: &mut BTreeMap<Color, EdgeId>,
    visited: &mut ColorSet,
) -> bool {
    let Some(list) = lists.get(e) else {
        return false;
    };
    for &c in list {
        if !visited.insert(c) {
            continue;
        }
        let free = match owner.get(&c) {
            None => true,
            Some(&holder) => augment(holder, lists, owner, visited),
        };
        if free {
            owner.insert(c, e);
            return true;
        }
    }
    false
}

fn hall_witness(
    start: EdgeId,
    lists: &ColorLists,
    owner: &BTreeMap<Color, EdgeId>,
) -> HallViolator {
    let mut edges = EdgeSet::from([start]);
    let mut colors = ColorSet::new();
    let mut frontier = vec![start];
    while let Some(e) = frontier.pop() {
        for &c in lists.get(e).into_iter().flatten() {
            if colors.insert(c) {
                let holder = owner[&c];
                if edges.insert(holder) {
                    frontier.push(holder);
                }
            }
        }
    }
    HallViolator { edges, colors }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures::*;

    #[test]
    fn reducing_set_examples() {
        let p = path(3);
        let lists = ColorLists::from_vecs([vec![1, 2], vec![5], vec![2, 3]]);
        let sets = find_reducing_sets(&p, &p.all_edges(), &lists);
        assert_eq!(sets, vec![ReducingSet { e: 0, q: 2, c: 2 }]);

        let t = triangle();
        let lists = ColorLists::from_vecs([vec![1], vec![1], vec![1]]);
        assert!(find_reducing_sets(&t, &t.all_edges(), &lists).is_empty());

        let two = Multigraph::new(4, vec![(0, 1), (2, 3)]).unwrap();
        let lists = ColorLists::from_vecs([vec![1], vec![2]]);
        assert!(find_reducing_sets(&two, &two.all_edges(), &lists).is_empty());
    }

    #[test]
    fn reducing_sets_are_sorted() {
        let g = Multigraph::new(6, vec![(0, 1), (2, 3), (4, 5)]).unwrap();
        let lists = ColorLists::from_vecs([vec![1, 2], vec![2, 1], vec![2]]);
        let sets = find_reducing_sets(&g, &g.all_edges(), &lists);
        let keys: Vec<_> = sets.iter().map(|r| (r.e, r.q, r.c)).collect();
        assert_eq!(keys, vec![(0, 1, 1), (0, 1, 2), (0, 2, 2), (1, 2, 2)]);
    }

    #[test]
    fn sdr_examples() {
        let t = triangle();
        let lists = ColorLists::from_vecs([vec![1, 2], vec![2, 3], vec![1, 3]]);
        let SdrOutcome::Coloring(c) = solve_sdr(&t, &t.all_edges(), &lists).unwrap() else {
            panic!("triangle lists have an SDR");
        };
        let used: ColorSet = c.iter().map(|(_, col)| col).collect();
        assert_eq!(used.len(), 3);
        for (e, col) in c.iter() {
            assert!(lists.contains(e, col));
        }

        let s = star(3);
        let lists = ColorLists::from_vecs([vec![1, 2], vec![1, 2], vec![1, 2]]);
        let SdrOutcome::Violator(v) = solve_sdr(&s, &s.all_edges(), &lists).unwrap() else {
            panic!("pigeonhole");
        };
        assert_eq!(v.edges.len(), 3);
        assert_eq!(v.colors, ColorSet::from([1, 2]));
        assert_eq!(lists.union_of(v.edges.iter()), v.colors);

        let one = path(1);
        let lists = ColorLists::from_vecs([vec![9]]);
        assert_eq!(
            solve_sdr(&one, &one.all_edges(), &lists).unwrap(),
            SdrOutcome::Coloring(EdgeColoring::from_dense(&[9]))
        );
    }

    #[test]
    fn sdr_rejects_non_transversal_input() {
        let p = path(3);
        let lists = ColorLists::from_vecs([vec![1], vec![2], vec![1]]);
        assert!(matches!(
            solve_sdr(&p, &p.all_edges(), &lists),
            Err(Error::Contract(_))
        ));
    }
}
