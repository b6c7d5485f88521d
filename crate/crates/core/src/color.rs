//! Per-edge color lists and (partial) edge colorings.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::graph::{EdgeId, EdgeSet, Multigraph, VertexId};

pub type Color = u32;
pub type ColorSet = BTreeSet<Color>;

/// `A_e` for every keyed edge.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ColorLists {
    lists: BTreeMap<EdgeId, ColorSet>,
}

impl ColorLists {
    pub fn new() -> Self {
        Self::default()
    }

    /// Lists keyed positionally: `lists[i]` belongs to edge `i`.
    pub fn from_vecs<I, L>(lists: I) -> Self
    where
        I: IntoIterator<Item = L>,
        L: IntoIterator<Item = Color>,
    {
        Self {
            lists: lists
                .into_iter()
                .enumerate()
                .map(|(e, l)| (e, l.into_iter().collect()))
                .collect(),
        }
    }

    /// Every edge of `edges` gets a copy of `colors`.
    pub fn uniform(edges: &EdgeSet, colors: &ColorSet) -> Self {
        Self {
            lists: edges.iter().map(|e| (e, colors.clone())).collect(),
        }
    }

    pub fn get(&self, e: EdgeId) -> Option<&ColorSet> {
        self.lists.get(&e)
    }

    pub fn list(&self, e: EdgeId) -> Result<&ColorSet> {
        self.lists.get(&e).ok_or(Error::MissingList { edge: e })
    }

    pub fn size(&self, e: EdgeId) -> usize {
        self.lists.get(&e).map_or(0, BTreeSet::len)
    }

    pub fn contains(&self, e: EdgeId, c: Color) -> bool {
        self.lists.get(&e).is_some_and(|l| l.contains(&c))
    }

    pub fn set(&mut self, e: EdgeId, colors: ColorSet) {
        self.lists.insert(e, colors);
    }

    pub fn edges(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.lists.keys().copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (EdgeId, &ColorSet)> {
        self.lists.iter().map(|(&e, l)| (e, l))
    }

    pub fn len(&self) -> usize {
        self.lists.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lists.is_empty()
    }

    /// `A_F`: the union of the lists of `edges`.
    pub fn union_of<I: IntoIterator<Item = EdgeId>>(&self, edges: I) -> ColorSet {
        let mut out = ColorSet::new();
        for e in edges {
            if let Some(l) = self.lists.get(&e) {
                out.extend(l.iter().copied());
            }
        }
        out
    }

    /// `A(v)` over the active edges at `v`.
    pub fn at_vertex(&self, g: &Multigraph, active: &EdgeSet, v: VertexId) -> ColorSet {
        self.union_of(g.incident_in(active, v))
    }

    /// `A(u, v)` over the active edges between `u` and `v`.
    pub fn between(&self, g: &Multigraph, active: &EdgeSet, u: VertexId, v: VertexId) -> ColorSet {
        self.union_of(g.between_in(active, u, v))
    }

    /// Removes `c` from every list.
    pub fn remove_color(&mut self, c: Color) {
        for l in self.lists.values_mut() {
            l.remove(&c);
        }
    }

    /// `A_e := A_e \ forbidden` for each `e` in `edges`.
    pub fn subtract(&mut self, edges: &EdgeSet, forbidden: &ColorSet) {
        for e in edges {
            if let Some(l) = self.lists.get_mut(&e) {
                l.retain(|c| !forbidden.contains(c));
            }
        }
    }

    /// Keeps only the `size` smallest colors of `A_e`.
    pub fn trim(&mut self, e: EdgeId, size: usize) {
        if let Some(l) = self.lists.get_mut(&e) {
            while l.len() > size {
                l.pop_last();
            }
        }
    }

    /// The lists of `edges` only.
    pub fn restrict(&self, edges: &EdgeSet) -> ColorLists {
        Self {
            lists: edges
                .iter()
                .filter_map(|e| self.lists.get(&e).map(|l| (e, l.clone())))
                .collect(),
        }
    }

    pub fn drop_edge(&mut self, e: EdgeId) {
        self.lists.remove(&e);
    }
}

/// A partial map from edges to colors.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct EdgeColoring {
    color_of: BTreeMap<EdgeId, Color>,
}

impl EdgeColoring {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&self, e: EdgeId) -> Option<Color> {
        self.color_of.get(&e).copied()
    }

    pub fn assign(&mut self, e: EdgeId, c: Color) {
        self.color_of.insert(e, c);
    }

    pub fn unassign(&mut self, e: EdgeId) -> Option<Color> {
        self.color_of.remove(&e)
    }

    pub fn len(&self) -> usize {
        self.color_of.len()
    }

    pub fn is_empty(&self) -> bool {
        self.color_of.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (EdgeId, Color)> + '_ {
        self.color_of.iter().map(|(&e, &c)| (e, c))
    }

    pub fn colored_edges(&self) -> EdgeSet {
        self.color_of.keys().copied().collect()
    }

    pub fn merge(&mut self, other: &EdgeColoring) {
        self.color_of.extend(other.color_of.iter());
    }

    /// Colors used on the edges of `edges` that are colored.
    pub fn colors_on<I: IntoIterator<Item = EdgeId>>(&self, edges: I) -> ColorSet {
        edges.into_iter().filter_map(|e| self.get(e)).collect()
    }

    /// Dense vector for a total coloring of `0..edge_count`.
    pub fn to_dense(&self, edge_count: usize) -> Option<Vec<Color>> {
        (0..edge_count).map(|e| self.get(e)).collect()
    }

    pub fn from_dense(colors: &[Color]) -> Self {
        Self {
            color_of: colors.iter().copied().enumerate().collect(),
        }
    }
}

impl FromIterator<(EdgeId, Color)> for EdgeColoring {
    fn from_iter<I: IntoIterator<Item = (EdgeId, Color)>>(iter: I) -> Self {
        Self {
            color_of: iter.into_iter().collect(),
        }
    }
}
