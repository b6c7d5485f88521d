use std::collections::{BTreeMap, BTreeSet};

use crate::audit::{Audit, Check, Step};
use crate::color::{Color, ColorLists, ColorSet, EdgeColoring};
use crate::error::{Error, Result};
use crate::graph::{EdgeId, EdgeSet, Multigraph, VertexId};
use crate::transversal::{find_reducing_sets, ReducingSet};

use super::profile::{check_profile, profile_of, TriangleProfile};
use super::state::{DemandFunction, Reduction};

/// Apexes in their current roles, the distinguished center `v1` and the
/// big center `v2` of the splitting and weak-phase rules.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SplitFrame {
    pub apex_a: VertexId,
    pub apex_b: VertexId,
    pub v1: VertexId,
    pub v2: VertexId,
}

impl SplitFrame {
    pub fn swapped(self) -> Self {
        Self {
            apex_a: self.apex_b,
            apex_b: self.apex_a,
            ..self
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SplittingClass {
    /// `c ∉ A(b,v1) ∪ A(b,v2)` and `c ∈ A(a,v1) ∩ A(a,v2) ∩ A(b,vi)` for a third center `vi`.
    ASplitting,
    /// The mirror image with `a` and `b` exchanged.
    BSplitting,
    None,
}

/// Classifies a color of `A(v1) ∩ A(v2)` by where it appears around the apexes.
pub fn classify_splitting(
    g: &Multigraph,
    active: &EdgeSet,
    lists: &ColorLists,
    frame: &SplitFrame,
    c: Color,
) -> Result<SplittingClass> {
    let SplitFrame {
        apex_a: a,
        apex_b: b,
        v1,
        v2,
    } = *frame;
    if !lists.at_vertex(g, active, v1).contains(&c) || !lists.at_vertex(g, active, v2).contains(&c)
    {
        return Err(Error::InvalidArgument(format!(
            "color {c} is not in both A({v1}) and A({v2})"
        )));
    }
    let has = |x: VertexId, y: VertexId| lists.between(g, active, x, y).contains(&c);
    let far: Vec<VertexId> = g
        .vertices_of(active)
        .into_iter()
        .filter(|v| ![a, b, v1, v2].contains(v))
        .collect();
    let splits = |x: VertexId, y: VertexId| {
        !has(y, v1) && !has(y, v2) && has(x, v1) && has(x, v2) && far.iter().any(|&v| has(y, v))
    };
    Ok(if splits(a, b) {
        SplittingClass::ASplitting
    } else if splits(b, a) {
        SplittingClass::BSplitting
    } else {
        SplittingClass::None
    })
}

/// `d(v1)` on `E(v1)`, `max(d(a), d(b), t(v1))` on `E(a, b)`, and
/// `max(d(a), d(b), t(v))` on the edges of every other center `v`.
pub fn center_demand(
    g: &Multigraph,
    active: &EdgeSet,
    p: &TriangleProfile,
    v1: VertexId,
) -> DemandFunction {
    let (a, b) = (p.apex_a, p.apex_b);
    let d_v1 = g.degree_in(active, v1);
    DemandFunction {
        required: active
            .iter()
            .map(|e| {
                let (x, y) = g.endpoints(e);
                let need = if g.is_incident(e, v1) {
                    d_v1
                } else if (x == a && y == b) || (x == b && y == a) {
                    p.apex_max().max(p.t(v1))
                } else {
                    let center = if x == a || x == b { y } else { x };
                    p.apex_max().max(p.t(center))
                };
                (e, need)
            })
            .collect(),
    }
}

/// The relaxed bounds of the weak phase: the usual demands except
/// `max(d(a), d(b))` on `E(a, v2)`, plus `|A_r ∪ A_s| ≥ t(v2) + d(v1)` for
/// every `r ∈ E(b, v1)`, `s ∈ E(a, v2)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeakBounds {
    pub required: BTreeMap<EdgeId, usize>,
    pub pairs: Vec<(EdgeId, EdgeId)>,
    pub pair_bound: usize,
}

impl WeakBounds {
    pub fn compute(
        g: &Multigraph,
        active: &EdgeSet,
        p: &TriangleProfile,
        frame: &SplitFrame,
    ) -> Self {
        let SplitFrame {
            apex_a: a,
            apex_b: b,
            v1,
            v2,
        } = *frame;
        let d_v1 = g.degree_in(active, v1);
        let bar = p.apex_max();
        let required = active
            .iter()
            .map(|e| {
                let (x, y) = g.endpoints(e);
                let need = if g.is_incident(e, v1) {
                    d_v1
                } else if (x == a && y == b) || (x == b && y == a) {
                    bar.max(p.t(v1))
                } else {
                    let center = if x == a || x == b { y } else { x };
                    if center == v2 && g.is_incident(e, a) {
                        bar
                    } else {
                        bar.max(p.t(center))
                    }
                };
                (e, need)
            })
            .collect();
        let mut pairs = Vec::new();
        for r in g.between_in(active, b, v1) {
            for s in g.between_in(active, a, v2) {
                pairs.push((r, s));
            }
        }
        Self {
            required,
            pairs,
            pair_bound: p.t(v2) + d_v1,
        }
    }

    pub fn first_violation(&self, lists: &ColorLists) -> Option<String> {
        for (&e, &need) in &self.required {
            let have = lists.size(e);
            if have < need {
                return Some(format!("edge {e} has {have} colors, weak bound is {need}"));
            }
        }
        for &(r, s) in &self.pairs {
            let union = lists.union_of([r, s]).len();
            if union < self.pair_bound {
                return Some(format!(
                    "edges {r} and {s} see {union} colors together, weak bound is {}",
                    self.pair_bound
                ));
            }
        }
        None
    }
}

/// List-colors a graph on apexes `a`, `b` and independent centers, with the
/// distinguished vertex at the center `v1`.
///
/// Rules per level, first match wins:
/// 1. an `E(a, b)` color outside `A(v1)` is used on that edge alone;
/// 2. if no other center is big, a reducing set meeting `E(v1)` is preferred;
/// 3. otherwise (`v2` big) a reducing set between `E(v1)` and `E(v2)`;
/// 4. an a-splitting and a b-splitting color are used together;
/// 5. the rest is finished by [`weak_phase`].
pub fn solve_k11n_center(
    g: &Multigraph,
    active: &EdgeSet,
    a: VertexId,
    b: VertexId,
    v1: VertexId,
    lists: &ColorLists,
    audit: &mut Audit,
) -> Result<EdgeColoring> {
    if v1 == a || v1 == b {
        return Err(Error::InvalidArgument(format!(
            "v1 = {v1} must be a center, not an apex"
        )));
    }
    let mut centers: BTreeSet<VertexId> = g.vertices_of(active);
    centers.remove(&a);
    centers.remove(&b);
    centers.insert(v1);
    let centers: Vec<VertexId> = centers.into_iter().collect();

    let mut state = Reduction::new(g, active, lists);
    let mut profile = profile_of(g, &state.active, a, b, &centers)?;
    let demand = center_demand(g, &state.active, &profile, v1);
    demand.check(&state.lists, audit)?;
    demand.trim(&mut state.lists);

    loop {
        check_profile(&profile, audit)?;
        let colors_v1 = state.lists.at_vertex(g, &state.active, v1);

        let apex_edge = state.between(a, b).iter().find_map(|e| {
            state
                .lists
                .list(e)
                .ok()
                .and_then(|l| l.iter().find(|c| !colors_v1.contains(c)).map(|&c| (e, c)))
        });
        if let Some((e, c)) = apex_edge {
            state.color_edge(e, c);
            let next = profile_of(g, &state.active, a, b, &centers)?;
            let dropped = next.deg_a + 1 == profile.deg_a
                && next.deg_b + 1 == profile.deg_b
                && centers.iter().all(|&v| next.t(v) + 1 == profile.t(v));
            audit.check(Check::ApexDegreeDrop, dropped, || {
                format!("coloring apex edge {e} did not lower d(a), d(b) and every t by one")
            })?;
            profile = next;
            center_demand(g, &state.active, &profile, v1).check(&state.lists, audit)?;
            audit.step(Step::CenterApexEdge);
            continue;
        }

        let sets = find_reducing_sets(g, &state.active, &state.lists);
        if sets.is_empty() {
            return state.finish(audit);
        }
        let near = state.incident(v1);
        let v2 = profile.sorted_centers().into_iter().find(|&v| v != v1);
        let v2 = match v2 {
            Some(v) if profile.big.contains(&v) => v,
            _ => {
                let r = match sets.iter().find(|r| r.touches(&near)) {
                    Some(&r) => {
                        audit.step(Step::CenterPreferV1);
                        r
                    }
                    None => {
                        let r = sets[0];
                        audit.check(Check::ReducingChoice, !colors_v1.contains(&r.c), || {
                            format!("{r:?} avoids E({v1}) but its color is in A({v1})")
                        })?;
                        audit.step(Step::CenterAny);
                        r
                    }
                };
                state.apply_tracked(r, &mut profile, &centers, audit)?;
                center_demand(g, &state.active, &profile, v1).check(&state.lists, audit)?;
                continue;
            }
        };

        let second = state.incident(v2);
        if let Some(&r) = sets.iter().find(|r| r.straddles(&near, &second)) {
            audit.step(Step::CenterV1V2);
            state.apply_tracked(r, &mut profile, &centers, audit)?;
            center_demand(g, &state.active, &profile, v1).check(&state.lists, audit)?;
            continue;
        }

        let frame = SplitFrame {
            apex_a: a,
            apex_b: b,
            v1,
            v2,
        };
        let colors_v2 = state.lists.at_vertex(g, &state.active, v2);
        let shared: ColorSet = sets
            .iter()
            .map(|r| r.c)
            .filter(|c| colors_v1.contains(c) && colors_v2.contains(c))
            .collect();
        let mut a_split = ColorSet::new();
        let mut b_split = ColorSet::new();
        for &c in &shared {
            let class = classify_splitting(g, &state.active, &state.lists, &frame, c)?;
            audit.check(
                Check::SplittingClassified,
                class != SplittingClass::None,
                || {
                    format!(
                        "reducing color {c} in A({v1}) and A({v2}) is neither a- nor b-splitting"
                    )
                },
            )?;
            match class {
                SplittingClass::ASplitting => a_split.insert(c),
                SplittingClass::BSplitting => b_split.insert(c),
                SplittingClass::None => unreachable!(),
            };
        }

        if let (Some(&c1), Some(&c2)) = (a_split.first(), b_split.first()) {
            let (r1, r2) = double_step(&state, &frame, &centers, c1, c2, audit)?;
            state.apply_tracked(r1, &mut profile, &centers, audit)?;
            state.apply_tracked(r2, &mut profile, &centers, audit)?;
            center_demand(g, &state.active, &profile, v1).check(&state.lists, audit)?;
            audit.step(Step::CenterDouble);
            continue;
        }

        // Only one splitting kind is left; orient the apexes so it is `a`.
        let frame = if a_split.is_empty() && !b_split.is_empty() {
            frame.swapped()
        } else {
            frame
        };
        return weak_phase_with(state, frame, &centers, audit);
    }
}

/// Picks `e1 ∈ E(a, v1)`, `q1 ∈ E(b, vi)` for `c1` and `e2 ∈ E(b, v2)`,
/// `q2 ∈ E(a, vj)` for `c2`, with `vi`, `vj` third centers.
fn double_step(
    state: &Reduction<'_>,
    frame: &SplitFrame,
    centers: &[VertexId],
    c1: Color,
    c2: Color,
    audit: &mut Audit,
) -> Result<(ReducingSet, ReducingSet)> {
    let SplitFrame {
        apex_a: a,
        apex_b: b,
        v1,
        v2,
    } = *frame;
    let far: Vec<VertexId> = centers
        .iter()
        .copied()
        .filter(|&v| v != v1 && v != v2)
        .collect();
    let pick = |edges: EdgeSet, c: Color| edges.iter().find(|&e| state.lists.contains(e, c));
    let pick_far =
        |apex: VertexId, c: Color| far.iter().find_map(|&v| pick(state.between(apex, v), c));
    let e1 = pick(state.between(a, v1), c1);
    let q1 = pick_far(b, c1);
    let e2 = pick(state.between(b, v2), c2);
    let q2 = pick_far(a, c2);
    let chosen = match (e1, q1, e2, q2) {
        (Some(e1), Some(q1), Some(e2), Some(q2)) => Some((e1, q1, e2, q2)),
        _ => None,
    };
    let valid = chosen.is_some_and(|(e1, q1, e2, q2)| {
        let distinct: BTreeSet<EdgeId> = [e1, q1, e2, q2].into();
        distinct.len() == 4 && c1 != c2 && !state.g.adjacent(e1, q1) && !state.g.adjacent(e2, q2)
    });
    audit.check(Check::DoubleStep, valid, || {
        format!("double step with colors {c1}, {c2} picked {e1:?}, {q1:?}, {e2:?}, {q2:?}")
    })?;
    let (e1, q1, e2, q2) = chosen.unwrap();
    let set = |x: EdgeId, y: EdgeId, c: Color| ReducingSet {
        e: x.min(y),
        q: x.max(y),
        c,
    };
    Ok((set(e1, q1, c1), set(e2, q2, c2)))
}

/// Finishes a center-distinguished instance once `v2` is big and every
/// reducing color shared by `A(v1)` and `A(v2)` is a-splitting.
///
/// Only the weak bounds are maintained from here on. Per level: a reducing
/// set from `E(v1)` to a third center; else one at `E(v2)` with a color in
/// `A(v2) \ A(v1)`; else any (its color then avoids `A(v1) ∪ A(v2)`).
pub fn weak_phase(
    g: &Multigraph,
    active: &EdgeSet,
    frame: &SplitFrame,
    lists: &ColorLists,
    audit: &mut Audit,
) -> Result<EdgeColoring> {
    let mut centers: BTreeSet<VertexId> = g.vertices_of(active);
    centers.remove(&frame.apex_a);
    centers.remove(&frame.apex_b);
    centers.insert(frame.v1);
    centers.insert(frame.v2);
    let centers: Vec<VertexId> = centers.into_iter().collect();
    weak_phase_with(Reduction::new(g, active, lists), *frame, &centers, audit)
}

fn weak_phase_with(
    mut state: Reduction<'_>,
    frame: SplitFrame,
    centers: &[VertexId],
    audit: &mut Audit,
) -> Result<EdgeColoring> {
    let g = state.g;
    let SplitFrame {
        apex_a: a,
        apex_b: b,
        v1,
        v2,
    } = frame;
    let far_centers: Vec<VertexId> = centers
        .iter()
        .copied()
        .filter(|&v| v != v1 && v != v2)
        .collect();
    let mut profile = profile_of(g, &state.active, a, b, centers)?;

    loop {
        check_profile(&profile, audit)?;
        let bounds = WeakBounds::compute(g, &state.active, &profile, &frame);
        let violation = if profile.big.contains(&v2) {
            bounds.first_violation(&state.lists)
        } else {
            Some(format!("v2 = {v2} is no longer big"))
        };
        audit.check(Check::WeakInequalities, violation.is_none(), || {
            format!(
                "{}; frame {frame:?}; active {:?}; lists {:?}",
                violation.clone().unwrap_or_default(),
                state.active,
                state.lists
            )
        })?;

        let sets = find_reducing_sets(g, &state.active, &state.lists);
        let colors_v1 = state.lists.at_vertex(g, &state.active, v1);
        let colors_v2 = state.lists.at_vertex(g, &state.active, v2);
        let shared: ColorSet = sets
            .iter()
            .map(|r| r.c)
            .filter(|c| colors_v1.contains(c) && colors_v2.contains(c))
            .collect();
        for &c in &shared {
            let class = classify_splitting(g, &state.active, &state.lists, &frame, c)?;
            audit.check(
                Check::WeakSplitting,
                class == SplittingClass::ASplitting,
                || format!("shared reducing color {c} is {class:?} under frame {frame:?}"),
            )?;
        }
        if sets.is_empty() {
            return state.finish(audit);
        }

        let near = state.incident(v1);
        let far: EdgeSet = far_centers
            .iter()
            .flat_map(|&v| state.incident(v))
            .collect();
        let r = if let Some(&r) = sets.iter().find(|r| r.straddles(&near, &far)) {
            audit.step(Step::WeakV1Far);
            r
        } else {
            let stray = sets.iter().find(|r| colors_v1.contains(&r.c));
            audit.check(Check::ReducingChoice, stray.is_none(), || {
                format!("{stray:?} uses a color of A({v1}) without leaving E({v1})")
            })?;
            let second = state.incident(v2);
            if let Some(&r) = sets
                .iter()
                .find(|r| colors_v2.contains(&r.c) && r.touches(&second))
            {
                audit.step(Step::WeakV2Only);
                r
            } else {
                let r = sets[0];
                audit.check(Check::ReducingChoice, !colors_v2.contains(&r.c), || {
                    format!("{r:?} uses a color of A({v2}) without touching E({v2})")
                })?;
                audit.step(Step::WeakAny);
                r
            }
        };
        state.apply_tracked(r, &mut profile, centers, audit)?;
    }
}
