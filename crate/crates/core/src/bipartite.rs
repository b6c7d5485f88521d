//! Kernel-method list coloring of bipartite blocks.
//!
//! A proper coloring `c` of the block orients its line graph: at an
//! `X`-vertex edges point towards larger colors, at a `Y`-vertex towards
//! smaller ones. Every induced subdigraph then has a kernel, which is a
//! stable matching between `X` and `Y`, and the list-coloring loop colors
//! one kernel per color.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use crate::audit::{Audit, Check, Step};
use crate::color::{Color, ColorLists, EdgeColoring};
use crate::error::{Error, InvariantViolation, Result};
use crate::graph::{EdgeId, EdgeSet, Multigraph, VertexId};
use crate::verify::verify_kernel;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bipartition {
    pub x: BTreeSet<VertexId>,
    pub y: BTreeSet<VertexId>,
}

impl Bipartition {
    /// Two-colors the vertices of `active` with `start` on the `X` side, or
    /// returns `None` if `active` has an odd cycle.
    pub fn of(g: &Multigraph, active: &EdgeSet, start: VertexId) -> Option<Self> {
        let vertices = g.vertices_of(active);
        let mut side: BTreeMap<VertexId, bool> = BTreeMap::new();
        let roots = std::iter::once(start).chain(vertices.iter().copied());
        for root in roots {
            if side.contains_key(&root) {
                continue;
            }
            side.insert(root, true);
            let mut queue = VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                let su = side[&u];
                for e in g.incident_in(active, u) {
                    let w = g.other_end(e, u);
                    match side.get(&w) {
                        Some(&sw) if sw == su => return None,
                        Some(_) => {}
                        None => {
                            side.insert(w, !su);
                            queue.push_back(w);
                        }
                    }
                }
            }
        }
        let (x, y): (Vec<_>, Vec<_>) = side.into_iter().partition(|&(_, s)| s);
        Some(Self {
            x: x.into_iter().map(|(v, _)| v).collect(),
            y: y.into_iter().map(|(v, _)| v).collect(),
        })
    }

    pub fn swapped(&self) -> Self {
        Self {
            x: self.y.clone(),
            y: self.x.clone(),
        }
    }

    fn separates(&self, g: &Multigraph, active: &EdgeSet) -> bool {
        active.iter().all(|e| {
            let (u, v) = g.endpoints(e);
            (self.x.contains(&u) && self.y.contains(&v))
                || (self.x.contains(&v) && self.y.contains(&u))
        })
    }
}

/// Proper edge coloring of a bipartite block with colors `1..=Δ`.
///
/// Edges are inserted in id order; when no color is free at both ends, an
/// alternating two-color path from one end is flipped.
pub fn konig_color(g: &Multigraph, block: &EdgeSet, bip: &Bipartition) -> Result<EdgeColoring> {
    if !bip.separates(g, block) {
        return Err(Error::InvalidArgument(
            "konig_color needs a bipartition that every block edge crosses".into(),
        ));
    }
    let delta = g.max_degree_in(block) as Color;
    let mut at: BTreeMap<VertexId, BTreeMap<Color, EdgeId>> = BTreeMap::new();
    let mut coloring = EdgeColoring::new();

    let free = |at: &BTreeMap<VertexId, BTreeMap<Color, EdgeId>>, v: VertexId| -> Vec<Color> {
        let used = at.get(&v);
        (1..=delta)
            .filter(|c| used.is_none_or(|m| !m.contains_key(c)))
            .collect()
    };

    for e in block {
        let (u, v) = g.endpoints(e);
        let free_u = free(&at, u);
        let free_v = free(&at, v);
        let color = match free_u.iter().find(|c| free_v.contains(c)) {
            Some(&c) => c,
            None => {
                let alpha = free_u[0];
                let beta = free_v[0];
                // Walk alpha, beta, alpha, ... from v and flip the path.
                let mut path = Vec::new();
                let mut here = v;
                let mut want = alpha;
                while let Some(&next_edge) = at.get(&here).and_then(|m| m.get(&want)) {
                    path.push(next_edge);
                    here = g.other_end(next_edge, here);
                    want = if want == alpha { beta } else { alpha };
                }
                for &p in &path {
                    let (a, b) = g.endpoints(p);
                    let old = coloring.get(p).expect("path edges are colored");
                    at.get_mut(&a).unwrap().remove(&old);
                    at.get_mut(&b).unwrap().remove(&old);
                }
                for &p in &path {
                    let (a, b) = g.endpoints(p);
                    let old = coloring.get(p).unwrap();
                    let new = if old == alpha { beta } else { alpha };
                    coloring.assign(p, new);
                    at.entry(a).or_default().insert(new, p);
                    at.entry(b).or_default().insert(new, p);
                }
                alpha
            }
        };
        coloring.assign(e, color);
        at.entry(u).or_default().insert(color, e);
        at.entry(v).or_default().insert(color, e);
    }
    Ok(coloring)
}

/// Renames colors so that the edges at `v` carry exactly `1..=d(v)`, in
/// edge-id order. Other colors keep their relative order after that.
pub fn normalize_at(c: &EdgeColoring, g: &Multigraph, v: VertexId) -> EdgeColoring {
    let at_v: Vec<Color> = g.incident(v).iter().filter_map(|&e| c.get(e)).collect();
    let mut rename: BTreeMap<Color, Color> = BTreeMap::new();
    for (i, &old) in at_v.iter().enumerate() {
        rename.insert(old, i as Color + 1);
    }
    let others: BTreeSet<Color> = c
        .iter()
        .map(|(_, col)| col)
        .filter(|col| !rename.contains_key(col))
        .collect();
    rename.extend(others.into_iter().zip(at_v.len() as Color + 1..));
    c.iter().map(|(e, col)| (e, rename[&col])).collect()
}

/// Orientation of the line graph of a bipartite block, with the coloring
/// and sides it was built from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LineOrientation {
    out: BTreeMap<EdgeId, BTreeSet<EdgeId>>,
    color: BTreeMap<EdgeId, Color>,
    // (X endpoint, Y endpoint)
    ends: BTreeMap<EdgeId, (VertexId, VertexId)>,
}

impl LineOrientation {
    pub fn edges(&self) -> EdgeSet {
        self.out.keys().copied().collect()
    }

    pub fn has_arc(&self, e: EdgeId, q: EdgeId) -> bool {
        self.out.get(&e).is_some_and(|s| s.contains(&q))
    }

    pub fn out_neighbors(&self, e: EdgeId) -> impl Iterator<Item = EdgeId> + '_ {
        self.out.get(&e).into_iter().flat_map(|s| s.iter().copied())
    }

    pub fn out_degree(&self, e: EdgeId) -> usize {
        self.out.get(&e).map_or(0, BTreeSet::len)
    }

    /// Out-degree counting only arcs into `active`.
    pub fn out_degree_in(&self, e: EdgeId, active: &EdgeSet) -> usize {
        self.out_neighbors(e)
            .filter(|&q| active.contains(q))
            .count()
    }

    pub fn color(&self, e: EdgeId) -> Option<Color> {
        self.color.get(&e).copied()
    }
}

/// Builds the Galvin orientation: for edges meeting at `w`, `e → q` iff
/// `w ∈ X` and `c(e) < c(q)`, or `w ∈ Y` and `c(e) > c(q)`. Parallel edges
/// share one vertex on each side and so get arcs both ways.
pub fn orient(
    g: &Multigraph,
    block: &EdgeSet,
    bip: &Bipartition,
    c: &EdgeColoring,
) -> Result<LineOrientation> {
    if !bip.separates(g, block) {
        return Err(Error::InvalidArgument(
            "bipartition does not separate the block".into(),
        ));
    }
    let mut color = BTreeMap::new();
    let mut ends = BTreeMap::new();
    let mut out: BTreeMap<EdgeId, BTreeSet<EdgeId>> = BTreeMap::new();
    for e in block {
        let col = c
            .get(e)
            .ok_or_else(|| Error::InvalidArgument(format!("edge {e} is uncolored")))?;
        color.insert(e, col);
        let (u, v) = g.endpoints(e);
        ends.insert(e, if bip.x.contains(&u) { (u, v) } else { (v, u) });
        out.insert(e, BTreeSet::new());
    }
    for w in g.vertices_of(block) {
        let at_w = g.incident_in(block, w).to_vec();
        let in_x = bip.x.contains(&w);
        for &e in &at_w {
            for &q in &at_w {
                if e == q {
                    continue;
                }
                let (ce, cq) = (color[&e], color[&q]);
                if ce == cq {
                    return Err(Error::InvalidArgument(format!(
                        "coloring is not proper: edges {e} and {q} share color {ce} at vertex {w}"
                    )));
                }
                if (in_x && ce < cq) || (!in_x && ce > cq) {
                    out.get_mut(&e).unwrap().insert(q);
                }
            }
        }
    }
    Ok(LineOrientation { out, color, ends })
}

/// Kernel of the subdigraph induced by `active`, by deferred acceptance.
///
/// `X`-vertices propose their highest-colored edge not yet rejected;
/// `Y`-vertices hold the lowest-colored proposal. The held edges form a
/// stable matching, which is exactly a kernel of this orientation.
pub fn find_kernel(d: &LineOrientation, active: &EdgeSet) -> EdgeSet {
    let mut candidates: BTreeMap<VertexId, Vec<EdgeId>> = BTreeMap::new();
    for e in active {
        if let Some(&(x, _)) = d.ends.get(&e) {
            candidates.entry(x).or_default().push(e);
        }
    }
    for list in candidates.values_mut() {
        list.sort_by_key(|e| std::cmp::Reverse(d.color[e]));
    }
    let mut next: BTreeMap<VertexId, usize> = candidates.keys().map(|&x| (x, 0)).collect();
    let mut held: BTreeMap<VertexId, EdgeId> = BTreeMap::new();
    let mut queue: VecDeque<VertexId> = candidates.keys().copied().collect();

    while let Some(x) = queue.pop_front() {
        let idx = next[&x];
        let Some(&e) = candidates[&x].get(idx) else {
            continue;
        };
        *next.get_mut(&x).unwrap() += 1;
        let y = d.ends[&e].1;
        match held.get(&y).copied() {
            None => {
                held.insert(y, e);
            }
            Some(h) if d.color[&e] < d.color[&h] => {
                held.insert(y, e);
                queue.push_back(d.ends[&h].0);
            }
            Some(_) => queue.push_back(x),
        }
    }
    held.into_values().collect()
}

/// List-colors the edges of `d` from `lists`, provided `|A_e| > d_out(e)`
/// for every edge.
///
/// Colors are taken in ascending order; each one goes to a kernel of the
/// uncolored edges whose lists contain it.
pub fn kernel_list_color(
    d: &LineOrientation,
    lists: &ColorLists,
    audit: &mut Audit,
) -> Result<EdgeColoring> {
    let mut remaining = d.edges();
    let mut lists = lists.restrict(&remaining);
    let mut coloring = EdgeColoring::new();
    while !remaining.is_empty() {
        for e in &remaining {
            let (size, out) = (lists.size(e), d.out_degree_in(e, &remaining));
            audit.check(Check::Demand, size > out, || {
                format!("edge {e} has {size} colors left but out-degree {out}")
            })?;
        }
        let c = lists
            .union_of(remaining.iter())
            .first()
            .copied()
            .ok_or_else(|| InvariantViolation {
                check: Check::Demand,
                detail: "uncolored edges with empty lists".into(),
            })?;
        let holders: EdgeSet = remaining.iter().filter(|&e| lists.contains(e, c)).collect();
        let kernel = find_kernel(d, &holders);
        audit.check(Check::Kernel, verify_kernel(d, &holders, &kernel), || {
            format!("{kernel:?} is not a kernel of {holders:?}")
        })?;
        for e in &kernel {
            coloring.assign(e, c);
            remaining.remove(e);
            lists.drop_edge(e);
        }
        lists.remove_color(c);
        audit.step(Step::KernelColor);
    }
    Ok(coloring)
}

/// List-colors a bipartite block from lists of size `d(v)` on `E(v)` and
/// `χ'(block)` elsewhere. Larger lists are trimmed to those sizes.
pub fn solve_bipartite(
    g: &Multigraph,
    block: &EdgeSet,
    v: VertexId,
    lists: &ColorLists,
    audit: &mut Audit,
) -> Result<EdgeColoring> {
    let bip = Bipartition::of(g, block, v)
        .ok_or_else(|| Error::InvalidArgument("solve_bipartite needs a bipartite block".into()))?;
    let coloring = normalize_at(&konig_color(g, block, &bip)?, g, v);
    let d = orient(g, block, &bip, &coloring)?;

    let chi = g.max_degree_in(block);
    let dv = g.degree_in(block, v);
    let mut lists = lists.restrict(block);
    for e in block {
        let at_v = g.is_incident(e, v);
        let demand = if at_v { dv } else { chi };
        let size = lists.size(e);
        audit.check(Check::Demand, size >= demand, || {
            format!("edge {e} has {size} colors, bipartite demand is {demand}")
        })?;
        lists.trim(e, demand);

        let out = d.out_degree(e);
        audit.check(
            Check::OrientationBound,
            out < chi && (!at_v || out < dv),
            || format!("edge {e}: out-degree {out}, chi' {chi}, d(v) {dv}, at v: {at_v}"),
        )?;
    }
    kernel_list_color(&d, &lists, audit)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::color::ColorSet;
    use crate::graph::fixtures::*;
    use crate::verify::{verify_coloring, verify_kernel};

    fn proper(g: &Multigraph, c: &EdgeColoring) -> bool {
        (0..g.edge_count()).all(|e| {
            (0..g.edge_count()).all(|q| e == q || !g.adjacent(e, q) || c.get(e) != c.get(q))
        })
    }

    fn bip(g: &Multigraph, v: VertexId) -> Bipartition {
        Bipartition::of(g, &g.all_edges(), v).unwrap()
    }

    #[test]
    fn konig_examples() {
        let c4 = cycle(4);
        let c = konig_color(&c4, &c4.all_edges(), &bip(&c4, 0)).unwrap();
        assert!(proper(&c4, &c));
        assert_eq!(
            c.iter().map(|(_, col)| col).collect::<ColorSet>(),
            ColorSet::from([1, 2])
        );
        assert_eq!(c.get(0), c.get(2));

        let s = star(3);
        let c = konig_color(&s, &s.all_edges(), &bip(&s, 0)).unwrap();
        assert_eq!(c.to_dense(3).unwrap(), vec![1, 2, 3]);

        let d = double_edge();
        let c = konig_color(&d, &d.all_edges(), &bip(&d, 0)).unwrap();
        assert_eq!(c.to_dense(2).unwrap(), vec![1, 2]);

        let t = triangle();
        let fake = Bipartition {
            x: BTreeSet::from([0]),
            y: BTreeSet::from([1, 2]),
        };
        assert!(konig_color(&t, &t.all_edges(), &fake).is_err());
        assert!(Bipartition::of(&t, &t.all_edges(), 0).is_none());
    }

    #[test]
    fn konig_needs_path_flips() {
        // Order forces a conflict: edge 3 joins vertices whose free colors differ.
        let g = Multigraph::new(
            6,
            vec![(0, 1), (2, 3), (2, 1), (0, 3), (4, 1), (4, 5), (0, 5)],
        )
        .unwrap();
        let b = bip(&g, 0);
        let c = konig_color(&g, &g.all_edges(), &b).unwrap();
        assert!(proper(&g, &c));
        let delta = g.max_degree_in(&g.all_edges()) as Color;
        assert!(c.iter().all(|(_, col)| (1..=delta).contains(&col)));
    }

    #[test]
    fn normalize_examples() {
        let s = star(3);
        let c = EdgeColoring::from_dense(&[2, 3, 1]);
        assert_eq!(normalize_at(&c, &s, 0).to_dense(3).unwrap(), vec![1, 2, 3]);

        // Edge 0 at v carries color 5; it must land in 1..=d(v) = {1}.
        let p = path(2);
        let c = EdgeColoring::from_dense(&[5, 2]);
        let n = normalize_at(&c, &p, 0);
        assert_eq!(n.get(0), Some(1));
        assert!(proper(&p, &n));
    }

    #[test]
    fn orientation_examples() {
        let p = path(2);
        let b = Bipartition {
            x: BTreeSet::from([0, 2]),
            y: BTreeSet::from([1]),
        };
        let d = orient(&p, &p.all_edges(), &b, &EdgeColoring::from_dense(&[1, 2])).unwrap();
        assert!(d.has_arc(1, 0));
        assert!(!d.has_arc(0, 1));

        let s = star(2);
        let d = orient(
            &s,
            &s.all_edges(),
            &bip(&s, 0),
            &EdgeColoring::from_dense(&[1, 2]),
        )
        .unwrap();
        assert!(d.has_arc(0, 1));
        assert!(!d.has_arc(1, 0));

        let de = double_edge();
        let d = orient(
            &de,
            &de.all_edges(),
            &bip(&de, 0),
            &EdgeColoring::from_dense(&[1, 2]),
        )
        .unwrap();
        assert!(d.has_arc(0, 1) && d.has_arc(1, 0));

        assert!(orient(
            &s,
            &s.all_edges(),
            &bip(&s, 0),
            &EdgeColoring::from_dense(&[1, 1])
        )
        .is_err());
    }

    #[test]
    fn kernel_examples() {
        let p = path(2);
        let b = Bipartition {
            x: BTreeSet::from([0, 2]),
            y: BTreeSet::from([1]),
        };
        let d = orient(&p, &p.all_edges(), &b, &EdgeColoring::from_dense(&[1, 2])).unwrap();
        assert_eq!(find_kernel(&d, &p.all_edges()), EdgeSet::from([0]));
        assert_eq!(find_kernel(&d, &EdgeSet::from([1])), EdgeSet::from([1]));

        let s = star(3);
        let d = orient(
            &s,
            &s.all_edges(),
            &bip(&s, 0),
            &EdgeColoring::from_dense(&[1, 2, 3]),
        )
        .unwrap();
        let k = find_kernel(&d, &s.all_edges());
        assert_eq!(k, EdgeSet::from([2]));
        assert!(verify_kernel(&d, &s.all_edges(), &k));
    }

    #[test]
    fn kernel_list_color_examples() {
        let s = star(2);
        let d = orient(
            &s,
            &s.all_edges(),
            &bip(&s, 0),
            &EdgeColoring::from_dense(&[1, 2]),
        )
        .unwrap();
        let lists = ColorLists::from_vecs([vec![5, 7], vec![5, 9]]);
        let c = kernel_list_color(&d, &lists, &mut Audit::new()).unwrap();
        assert_eq!(c.to_dense(2).unwrap(), vec![7, 5]);

        let one = path(1);
        let d = orient(
            &one,
            &one.all_edges(),
            &bip(&one, 0),
            &EdgeColoring::from_dense(&[1]),
        )
        .unwrap();
        let c =
            kernel_list_color(&d, &ColorLists::from_vecs([vec![4]]), &mut Audit::new()).unwrap();
        assert_eq!(c.get(0), Some(4));

        let de = double_edge();
        let d = orient(
            &de,
            &de.all_edges(),
            &bip(&de, 0),
            &EdgeColoring::from_dense(&[1, 2]),
        )
        .unwrap();
        let c = kernel_list_color(
            &d,
            &ColorLists::from_vecs([vec![1, 2], vec![1, 2]]),
            &mut Audit::new(),
        )
        .unwrap();
        let used: ColorSet = c.iter().map(|(_, col)| col).collect();
        assert_eq!(used, ColorSet::from([1, 2]));

        // |A_e| must exceed the out-degree.
        let err = kernel_list_color(
            &d,
            &ColorLists::from_vecs([vec![1], vec![1]]),
            &mut Audit::new(),
        );
        assert!(matches!(err, Err(Error::Invariant(_))));
    }

    #[test]
    fn solve_bipartite_examples() {
        let c4 = cycle(4);
        for v in 0..4 {
            let lists = ColorLists::from_vecs([vec![1, 2], vec![2, 3], vec![1, 3], vec![3, 4]]);
            let c = solve_bipartite(&c4, &c4.all_edges(), v, &lists, &mut Audit::new()).unwrap();
            verify_coloring(&c4, &c4.all_edges(), &lists, &c).unwrap();
        }

        let s = star(3);
        let lists = ColorLists::from_vecs([vec![1, 2, 3], vec![1, 2, 3], vec![1, 2, 3]]);
        let c = solve_bipartite(&s, &s.all_edges(), 0, &lists, &mut Audit::new()).unwrap();
        verify_coloring(&s, &s.all_edges(), &lists, &c).unwrap();

        let de = double_edge();
        let lists = ColorLists::from_vecs([vec![1, 2], vec![2, 3]]);
        let c = solve_bipartite(&de, &de.all_edges(), 0, &lists, &mut Audit::new()).unwrap();
        verify_coloring(&de, &de.all_edges(), &lists, &c).unwrap();
    }

    #[test]
    fn orientation_bound_holds_on_even_cycles_with_chords() {
        // C6 plus a chord and a doubled edge.
        let g = Multigraph::new(
            6,
            vec![
                (0, 1),
                (1, 2),
                (2, 3),
                (3, 4),
                (4, 5),
                (5, 0),
                (0, 3),
                (1, 2),
            ],
        )
        .unwrap();
        let block = g.all_edges();
        let chi = g.max_degree_in(&block);
        for v in 0..6 {
            let b = Bipartition::of(&g, &block, v).unwrap();
            let c = normalize_at(&konig_color(&g, &block, &b).unwrap(), &g, v);
            let d = orient(&g, &block, &b, &c).unwrap();
            for e in &block {
                assert!(d.out_degree(e) < chi);
                if g.is_incident(e, v) {
                    assert!(d.out_degree(e) < g.degree_in(&block, v));
                }
            }
        }
    }
}
