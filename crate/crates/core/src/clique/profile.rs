use std::collections::{BTreeMap, BTreeSet};

use crate::audit::{Audit, Check};
use crate::error::{Error, InvariantViolation, Result};
use crate::graph::{EdgeSet, Multigraph, VertexId};

/// Triangle sizes `t(v) = |E(a, b, v)|` of every center, with the big
/// (`t ≥ max(d(a), d(b))`) and great (`t > max(d(a), d(b))`) centers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TriangleProfile {
    pub apex_a: VertexId,
    pub apex_b: VertexId,
    pub deg_a: usize,
    pub deg_b: usize,
    pub t_of: BTreeMap<VertexId, usize>,
    pub big: BTreeSet<VertexId>,
    pub great: BTreeSet<VertexId>,
}

impl TriangleProfile {
    pub fn apex_max(&self) -> usize {
        self.deg_a.max(self.deg_b)
    }

    pub fn t(&self, v: VertexId) -> usize {
        self.t_of[&v]
    }

    /// Centers by decreasing `t`, ties by vertex id.
    pub fn sorted_centers(&self) -> Vec<VertexId> {
        let mut centers: Vec<VertexId> = self.t_of.keys().copied().collect();
        centers.sort_by_key(|&v| (std::cmp::Reverse(self.t_of[&v]), v));
        centers
    }
}

/// Profile of the centers of `active`, i.e. every touched vertex other than
/// `a` and `b`. Fails if two centers are adjacent.
pub fn triangle_profile(
    g: &Multigraph,
    active: &EdgeSet,
    a: VertexId,
    b: VertexId,
) -> Result<TriangleProfile> {
    let centers: Vec<VertexId> = g
        .vertices_of(active)
        .into_iter()
        .filter(|&v| v != a && v != b)
        .collect();
    profile_of(g, active, a, b, &centers)
}

/// Profile over an explicit center list, which may include centers that
/// have lost all their edges.
pub(crate) fn profile_of(
    g: &Multigraph,
    active: &EdgeSet,
    a: VertexId,
    b: VertexId,
    centers: &[VertexId],
) -> Result<TriangleProfile> {
    if a == b {
        return Err(Error::InvalidArgument("apexes must differ".into()));
    }
    if let Some(e) = active
        .iter()
        .find(|&e| !g.is_incident(e, a) && !g.is_incident(e, b))
    {
        let (u, v) = g.endpoints(e);
        return Err(Error::InvalidArgument(format!(
            "centers are not independent: edge {e} joins {u} and {v}"
        )));
    }
    let deg_a = g.degree_in(active, a);
    let deg_b = g.degree_in(active, b);
    let ab = g.between_in(active, a, b).len();
    let t_of: BTreeMap<VertexId, usize> = centers
        .iter()
        .map(|&v| (v, ab + g.degree_in(active, v)))
        .collect();
    let bar = deg_a.max(deg_b);
    let big = t_of
        .iter()
        .filter(|(_, &t)| t >= bar)
        .map(|(&v, _)| v)
        .collect();
    let great = t_of
        .iter()
        .filter(|(_, &t)| t > bar)
        .map(|(&v, _)| v)
        .collect();
    Ok(TriangleProfile {
        apex_a: a,
        apex_b: b,
        deg_a,
        deg_b,
        t_of,
        big,
        great,
    })
}

/// A great center leaves no other center big; a big center leaves no other
/// center great; after sorting by `t` only the first center can be great.
pub(crate) fn check_profile(
    p: &TriangleProfile,
    audit: &mut Audit,
) -> Result<(), InvariantViolation> {
    let exclusive = p.great.iter().all(|g| p.big.iter().all(|b| b == g));
    audit.check(Check::GreatExcludesBig, exclusive, || {
        format!(
            "big {:?} and great {:?} overlap across centers ({p:?})",
            p.big, p.great
        )
    })?;
    let sorted = p.sorted_centers();
    let only_first = sorted.iter().skip(1).all(|v| !p.great.contains(v));
    audit.check(Check::OnlyFirstGreat, only_first, || {
        format!("a center other than the first by t is great ({p:?})")
    })
}

/// Checks the effect of removing one pair of non-adjacent edges.
pub(crate) fn check_pair_removal(
    before: &TriangleProfile,
    after: &TriangleProfile,
    audit: &mut Audit,
) -> Result<(), InvariantViolation> {
    let drop = after.deg_a + 1 == before.deg_a && after.deg_b + 1 == before.deg_b;
    audit.check(Check::ApexDegreeDrop, drop, || {
        format!(
            "apex degrees went from ({}, {}) to ({}, {})",
            before.deg_a, before.deg_b, after.deg_a, after.deg_b
        )
    })?;
    for &v in before.t_of.keys() {
        let ok = (!before.big.contains(&v) || after.big.contains(&v))
            && (!before.great.contains(&v) || after.great.contains(&v))
            && (!after.great.contains(&v) || before.big.contains(&v));
        audit.check(Check::BigGreatMonotone, ok, || {
            format!("center {v} changed status badly: before {before:?}, after {after:?}")
        })?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures::triangle;

    #[test]
    fn profile_examples() {
        // Simple K_{1,1,3}: apexes 0, 1; centers 2, 3, 4.
        let g = Multigraph::new(
            5,
            vec![(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (0, 4), (1, 4)],
        )
        .unwrap();
        let p = triangle_profile(&g, &g.all_edges(), 0, 1).unwrap();
        assert_eq!((p.deg_a, p.deg_b), (4, 4));
        assert!(p.t_of.values().all(|&t| t == 3));
        assert!(p.big.is_empty() && p.great.is_empty());

        // K_{1,1,2} with E(a, v1) doubled.
        let g = Multigraph::new(4, vec![(0, 1), (0, 2), (0, 2), (1, 2), (0, 3), (1, 3)]).unwrap();
        let p = triangle_profile(&g, &g.all_edges(), 0, 1).unwrap();
        assert_eq!((p.deg_a, p.deg_b), (4, 3));
        assert_eq!(p.t(2), 4);
        assert_eq!(p.t(3), 3);
        assert_eq!(p.big, BTreeSet::from([2]));
        assert!(p.great.is_empty());

        let p = triangle_profile(&triangle(), &triangle().all_edges(), 0, 1).unwrap();
        assert_eq!(p.great, BTreeSet::from([2]));
    }

    #[test]
    fn rejects_adjacent_centers() {
        let g = Multigraph::new(4, vec![(0, 1), (2, 3)]).unwrap();
        assert!(triangle_profile(&g, &g.all_edges(), 0, 1).is_err());
    }
}
