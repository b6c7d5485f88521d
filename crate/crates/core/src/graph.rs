//! Loopless multigraphs with stable edge identifiers.
//!
//! Edge `i` is the `i`-th pair handed to [`Multigraph::new`]. Nothing ever
//! renumbers edges; subgraphs are expressed as an [`EdgeSet`] of active ids.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};

pub type VertexId = usize;
pub type EdgeId = usize;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Multigraph {
    vertex_count: usize,
    edges: Vec<(VertexId, VertexId)>,
    incidence: Vec<Vec<EdgeId>>,
}

impl Multigraph {
    pub fn new(vertex_count: usize, edges: Vec<(VertexId, VertexId)>) -> Result<Self> {
        let mut incidence = vec![Vec::new(); vertex_count];
        for (id, &(u, v)) in edges.iter().enumerate() {
            for w in [u, v] {
                if w >= vertex_count {
                    return Err(Error::VertexOutOfRange {
                        vertex: w,
                        vertex_count,
                    });
                }
            }
            if u == v {
                return Err(Error::Loop {
                    edge: id,
                    vertex: u,
                });
            }
            incidence[u].push(id);
            incidence[v].push(id);
        }
        Ok(Self {
            vertex_count,
            edges,
            incidence,
        })
    }

    pub fn empty() -> Self {
        Self {
            vertex_count: 0,
            edges: Vec::new(),
            incidence: Vec::new(),
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.edges
    }

    pub fn endpoints(&self, e: EdgeId) -> (VertexId, VertexId) {
        self.edges[e]
    }

    pub fn is_incident(&self, e: EdgeId, v: VertexId) -> bool {
        let (x, y) = self.edges[e];
        x == v || y == v
    }

    /// The endpoint of `e` that is not `v`.
    pub fn other_end(&self, e: EdgeId, v: VertexId) -> VertexId {
        let (x, y) = self.edges[e];
        if x == v {
            y
        } else {
            x
        }
    }

    /// Edge ids incident to `v`, ascending.
    pub fn incident(&self, v: VertexId) -> &[EdgeId] {
        &self.incidence[v]
    }

    pub fn all_edges(&self) -> EdgeSet {
        (0..self.edges.len()).collect()
    }

    fn check_vertex(&self, v: VertexId) -> Result<()> {
        if v < self.vertex_count {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                vertex_count: self.vertex_count,
            })
        }
    }

    fn check_edge(&self, e: EdgeId) -> Result<()> {
        if e < self.edges.len() {
            Ok(())
        } else {
            Err(Error::EdgeOutOfRange {
                edge: e,
                edge_count: self.edges.len(),
            })
        }
    }

    /// `d(v)`, counting parallel edges with multiplicity.
    pub fn degree(&self, v: VertexId) -> Result<usize> {
        self.check_vertex(v)?;
        Ok(self.incidence[v].len())
    }

    /// `E(a, b)`: every edge with endpoint set `{a, b}`.
    pub fn edges_between(&self, a: VertexId, b: VertexId) -> Result<EdgeSet> {
        self.check_vertex(a)?;
        self.check_vertex(b)?;
        if a == b {
            return Err(Error::InvalidArgument(format!(
                "edges_between needs distinct vertices, got {a} twice"
            )));
        }
        Ok(self.between_in(&self.all_edges(), a, b))
    }

    /// `E(a, b, c) = E(a, b) ∪ E(a, c) ∪ E(b, c)`.
    pub fn triangle_edges(&self, a: VertexId, b: VertexId, c: VertexId) -> Result<EdgeSet> {
        for v in [a, b, c] {
            self.check_vertex(v)?;
        }
        if a == b || a == c || b == c {
            return Err(Error::InvalidArgument(format!(
                "triangle_edges needs pairwise distinct vertices, got ({a}, {b}, {c})"
            )));
        }
        Ok(self.triangle_in(&self.all_edges(), a, b, c))
    }

    /// Adjacency in the line graph: the edges share at least one endpoint.
    pub fn line_adjacent(&self, e: EdgeId, q: EdgeId) -> Result<bool> {
        self.check_edge(e)?;
        self.check_edge(q)?;
        if e == q {
            return Err(Error::InvalidArgument(format!(
                "line_adjacent needs distinct edges, got {e} twice"
            )));
        }
        Ok(self.adjacent(e, q))
    }

    /// Unchecked line-graph adjacency for distinct valid ids.
    pub fn adjacent(&self, e: EdgeId, q: EdgeId) -> bool {
        let (a, b) = self.edges[e];
        let (c, d) = self.edges[q];
        a == c || a == d || b == c || b == d
    }

    pub fn is_parallel(&self, e: EdgeId, q: EdgeId) -> bool {
        let (a, b) = self.edges[e];
        let (c, d) = self.edges[q];
        (a == c && b == d) || (a == d && b == c)
    }

    // Queries restricted to an active subset. These skip validation and are
    // what the solvers use internally.

    pub fn degree_in(&self, active: &EdgeSet, v: VertexId) -> usize {
        self.incidence[v]
            .iter()
            .filter(|e| active.contains(**e))
            .count()
    }

    pub fn incident_in(&self, active: &EdgeSet, v: VertexId) -> EdgeSet {
        self.incidence[v]
            .iter()
            .copied()
            .filter(|&e| active.contains(e))
            .collect()
    }

    pub fn between_in(&self, active: &EdgeSet, a: VertexId, b: VertexId) -> EdgeSet {
        self.incidence[a]
            .iter()
            .copied()
            .filter(|&e| active.contains(e) && self.other_end(e, a) == b)
            .collect()
    }

    pub fn triangle_in(&self, active: &EdgeSet, a: VertexId, b: VertexId, c: VertexId) -> EdgeSet {
        let mut out = self.between_in(active, a, b);
        out.extend(self.between_in(active, a, c).iter());
        out.extend(self.between_in(active, b, c).iter());
        out
    }

    /// Vertices touched by at least one edge of `active`.
    pub fn vertices_of(&self, active: &EdgeSet) -> BTreeSet<VertexId> {
        active
            .iter()
            .flat_map(|e| {
                let (u, v) = self.edges[e];
                [u, v]
            })
            .collect()
    }

    pub fn max_degree_in(&self, active: &EdgeSet) -> usize {
        self.vertices_of(active)
            .into_iter()
            .map(|v| self.degree_in(active, v))
            .max()
            .unwrap_or(0)
    }
}

/// A set of edge ids, iterated in ascending order.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct EdgeSet(BTreeSet<EdgeId>);

impl EdgeSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn contains(&self, e: EdgeId) -> bool {
        self.0.contains(&e)
    }

    pub fn insert(&mut self, e: EdgeId) -> bool {
        self.0.insert(e)
    }

    pub fn remove(&mut self, e: EdgeId) -> bool {
        self.0.remove(&e)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl DoubleEndedIterator<Item = EdgeId> + '_ {
        self.0.iter().copied()
    }

    pub fn first(&self) -> Option<EdgeId> {
        self.0.first().copied()
    }

    pub fn is_subset(&self, other: &EdgeSet) -> bool {
        self.0.is_subset(&other.0)
    }

    pub fn intersection(&self, other: &EdgeSet) -> EdgeSet {
        self.0.intersection(&other.0).copied().collect()
    }

    pub fn difference(&self, other: &EdgeSet) -> EdgeSet {
        self.0.difference(&other.0).copied().collect()
    }

    pub fn as_set(&self) -> &BTreeSet<EdgeId> {
        &self.0
    }

    pub fn to_vec(&self) -> Vec<EdgeId> {
        self.0.iter().copied().collect()
    }
}

impl fmt::Debug for EdgeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.0.iter()).finish()
    }
}

impl FromIterator<EdgeId> for EdgeSet {
    fn from_iter<I: IntoIterator<Item = EdgeId>>(iter: I) -> Self {
        Self(iter.into_iter().collect())
    }
}

impl Extend<EdgeId> for EdgeSet {
    fn extend<I: IntoIterator<Item = EdgeId>>(&mut self, iter: I) {
        self.0.extend(iter)
    }
}

impl IntoIterator for EdgeSet {
    type Item = EdgeId;
    type IntoIter = std::collections::btree_set::IntoIter<EdgeId>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.into_iter()
    }
}

impl<'a> IntoIterator for &'a EdgeSet {
    type Item = EdgeId;
    type IntoIter = std::iter::Copied<std::collections::btree_set::Iter<'a, EdgeId>>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter().copied()
    }
}

impl<const N: usize> From<[EdgeId; N]> for EdgeSet {
    fn from(ids: [EdgeId; N]) -> Self {
        ids.into_iter().collect()
    }
}
