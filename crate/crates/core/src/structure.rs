//! Block decomposition, block-cut tree traversal, block classification and
//! the chromatic index of line perfect multigraphs.

use std::collections::{BTreeMap, BTreeSet};

use crate::bipartite::Bipartition;
use crate::error::{Error, Result};
use crate::graph::{EdgeId, EdgeSet, Multigraph, VertexId};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockDecomposition {
    /// Biconnected components, numbered by their smallest edge id.
    pub blocks: Vec<EdgeSet>,
    pub block_vertices: Vec<BTreeSet<VertexId>>,
    pub cut_vertices: BTreeSet<VertexId>,
    /// Block-cut tree, block side: the cut vertices of each block.
    pub block_cuts: Vec<Vec<VertexId>>,
    /// Block-cut tree, cut-vertex side: the blocks containing each cut vertex.
    pub cut_blocks: BTreeMap<VertexId, Vec<usize>>,
}

impl BlockDecomposition {
    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BlockClass {
    Bipartite(Bipartition),
    /// Exactly four vertices: `K_4`, `K_{1,1,2}` and their multigraph variants.
    FourVertex,
    /// Triangles on a common apex pair: centers are independent and each
    /// center is joined to both apexes.
    K11n {
        apex_a: VertexId,
        apex_b: VertexId,
        centers: Vec<VertexId>,
    },
}

impl BlockClass {
    pub fn kind(&self) -> &'static str {
        match self {
            BlockClass::Bipartite(_) => "bipartite",
            BlockClass::FourVertex => "four-vertex",
            BlockClass::K11n { .. } => "k11n",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockTask {
    pub index: usize,
    pub block: EdgeSet,
    /// The cut vertex through which the traversal entered, `None` for a root.
    pub entry_vertex: Option<VertexId>,
}

/// Biconnected components of `g` (every bridge is its own block).
///
/// Works on disconnected graphs too; isolated vertices belong to no block.
pub fn decompose_blocks(g: &Multigraph) -> BlockDecomposition {
    const UNSEEN: usize = usize::MAX;
    let n = g.vertex_count();
    let mut disc = vec![UNSEEN; n];
    let mut low = vec![0; n];
    let mut timer = 0;
    let mut edge_stack: Vec<EdgeId> = Vec::new();
    let mut raw_blocks: Vec<EdgeSet> = Vec::new();

    // (vertex, edge to parent, next incidence index)
    let mut frames: Vec<(VertexId, Option<EdgeId>, usize)> = Vec::new();
    for root in 0..n {
        if disc[root] != UNSEEN || g.incident(root).is_empty() {
            continue;
        }
        disc[root] = timer;
        low[root] = timer;
        timer += 1;
        frames.push((root, None, 0));
        while let Some(frame) = frames.last_mut() {
            let (v, parent_edge, idx) = *frame;
            if idx < g.incident(v).len() {
                frame.2 += 1;
                let e = g.incident(v)[idx];
                if Some(e) == parent_edge {
                    continue;
                }
                let w = g.other_end(e, v);
                if disc[w] == UNSEEN {
                    edge_stack.push(e);
                    disc[w] = timer;
                    low[w] = timer;
                    timer += 1;
                    frames.push((w, Some(e), 0));
                } else if disc[w] < disc[v] {
                    edge_stack.push(e);
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                frames.pop();
                if let Some(pe) = parent_edge {
                    let p = g.other_end(pe, v);
                    low[p] = low[p].min(low[v]);
                    if low[v] >= disc[p] {
                        let mut block = EdgeSet::new();
                        while let Some(e) = edge_stack.pop() {
                            block.insert(e);
                            if e == pe {
                                break;
                            }
                        }
                        raw_blocks.push(block);
                    }
                }
            }
        }
    }

    raw_blocks.sort_by_key(|b| b.first());
    let block_vertices: Vec<BTreeSet<VertexId>> =
        raw_blocks.iter().map(|b| g.vertices_of(b)).collect();
    let mut membership: BTreeMap<VertexId, Vec<usize>> = BTreeMap::new();
    for (i, verts) in block_vertices.iter().enumerate() {
        for &v in verts {
            membership.entry(v).or_default().push(i);
        }
    }
    let cut_blocks: BTreeMap<VertexId, Vec<usize>> = membership
        .into_iter()
        .filter(|(_, blocks)| blocks.len() > 1)
        .collect();
    let cut_vertices: BTreeSet<VertexId> = cut_blocks.keys().copied().collect();
    let block_cuts = block_vertices
        .iter()
        .map(|verts| verts.intersection(&cut_vertices).copied().collect())
        .collect();

    BlockDecomposition {
        blocks: raw_blocks,
        block_vertices,
        cut_vertices,
        block_cuts,
        cut_blocks,
    }
}

/// Depth-first pre-order of the blocks in `root`'s component.
pub fn block_order(dec: &BlockDecomposition, root: usize) -> Result<Vec<BlockTask>> {
    if root >= dec.blocks.len() {
        return Err(Error::InvalidArgument(format!(
            "root block {root} out of range ({} blocks)",
            dec.blocks.len()
        )));
    }
    let mut seen = vec![false; dec.blocks.len()];
    Ok(order_from(dec, root, &mut seen))
}

/// Traversal of every component: `root`'s component first, then each
/// remaining component rooted at its lowest-numbered block.
pub fn full_order(dec: &BlockDecomposition, root: usize) -> Result<Vec<BlockTask>> {
    if dec.blocks.is_empty() {
        return Ok(Vec::new());
    }
    let mut tasks = block_order(dec, root)?;
    let mut seen = vec![false; dec.blocks.len()];
    for t in &tasks {
        seen[t.index] = true;
    }
    for start in 0..dec.blocks.len() {
        if !seen[start] {
            tasks.extend(order_from(dec, start, &mut seen));
        }
    }
    Ok(tasks)
}

fn order_from(dec: &BlockDecomposition, root: usize, seen: &mut [bool]) -> Vec<BlockTask> {
    let mut tasks = Vec::new();
    let mut stack = vec![(root, None)];
    while let Some((b, entry)) = stack.pop() {
        if seen[b] {
            continue;
        }
        seen[b] = true;
        tasks.push(BlockTask {
            index: b,
            block: dec.blocks[b].clone(),
            entry_vertex: entry,
        });
        let mut children = Vec::new();
        for &c in &dec.block_cuts[b] {
            if Some(c) == entry {
                continue;
            }
            for &nb in &dec.cut_blocks[&c] {
                if nb != b && !seen[nb] {
                    children.push((nb, Some(c)));
                }
            }
        }
        stack.extend(children.into_iter().rev());
    }
    tasks
}

/// Sorts a block into one of the three line perfect shapes.
///
/// Priority is bipartite, then four vertices, then `K_{1,1,n}`.
pub fn classify_block(g: &Multigraph, block: &EdgeSet) -> Result<BlockClass> {
    let vertices = g.vertices_of(block);
    let Some(&first) = vertices.first() else {
        return Err(Error::InvalidArgument(
            "cannot classify an empty block".into(),
        ));
    };
    if let Some(bip) = Bipartition::of(g, block, first) {
        return Ok(BlockClass::Bipartite(bip));
    }
    if vertices.len() == 4 {
        return Ok(BlockClass::FourVertex);
    }
    if vertices.len() >= 3 {
        for &a in &vertices {
            for &b in vertices.range(a + 1..) {
                if g.between_in(block, a, b).is_empty() {
                    continue;
                }
                let centers: Vec<VertexId> = vertices
                    .iter()
                    .copied()
                    .filter(|&v| v != a && v != b)
                    .collect();
                let fits = centers.iter().all(|&c| {
                    let incident = g.incident_in(block, c);
                    let to_a = incident.iter().filter(|&e| g.other_end(e, c) == a).count();
                    let to_b = incident.iter().filter(|&e| g.other_end(e, c) == b).count();
                    to_a > 0 && to_b > 0 && to_a + to_b == incident.len()
                });
                if fits {
                    return Ok(BlockClass::K11n {
                        apex_a: a,
                        apex_b: b,
                        centers,
                    });
                }
            }
        }
    }
    Err(Error::NotLinePerfect {
        vertices: vertices.into_iter().collect(),
        reason: "not bipartite, not on four vertices, and not K_{1,1,n}".into(),
    })
}

/// Decomposition plus the class of every block.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Analysis {
    pub decomposition: BlockDecomposition,
    pub classes: Vec<BlockClass>,
}

pub fn analyze(g: &Multigraph) -> Result<Analysis> {
    let decomposition = decompose_blocks(g);
    let classes = decomposition
        .blocks
        .iter()
        .map(|b| classify_block(g, b))
        .collect::<Result<Vec<_>>>()?;
    Ok(Analysis {
        decomposition,
        classes,
    })
}

/// `χ'(g)` as the largest clique of the line graph: the maximum of the
/// vertex degrees and of `|E(a, b, c)|` over the triangles of `g`.
pub fn chromatic_index(g: &Multigraph) -> Result<usize> {
    let analysis = analyze(g)?;
    Ok(chromatic_index_of(g, &analysis))
}

pub fn chromatic_index_of(g: &Multigraph, analysis: &Analysis) -> usize {
    let mut best = (0..g.vertex_count())
        .map(|v| g.incident(v).len())
        .max()
        .unwrap_or(0);
    for (block, class) in analysis.decomposition.blocks.iter().zip(&analysis.classes) {
        match class {
            BlockClass::Bipartite(_) => {}
            BlockClass::FourVertex => best = best.max(max_triangle(g, block)),
            BlockClass::K11n {
                apex_a,
                apex_b,
                centers,
            } => {
                for &c in centers {
                    best = best.max(g.triangle_in(block, *apex_a, *apex_b, c).len());
                }
            }
        }
    }
    best
}

/// Largest `|E(a, b, c)|` over vertex triples of `active`. Cubic in the
/// number of vertices; meant for blocks on a handful of vertices.
pub fn max_triangle(g: &Multigraph, active: &EdgeSet) -> usize {
    let verts: Vec<VertexId> = g.vertices_of(active).into_iter().collect();
    let mut best = 0;
    for i in 0..verts.len() {
        for j in i + 1..verts.len() {
            for k in j + 1..verts.len() {
                best = best.max(g.triangle_in(active, verts[i], verts[j], verts[k]).len());
            }
        }
    }
    best
}

/// Clique bound `max(Δ, max |E(a, b, c)|)` of an arbitrary small subgraph.
/// Equals `χ'` whenever the subgraph is line perfect, e.g. on four vertices.
pub fn clique_bound(g: &Multigraph, active: &EdgeSet) -> usize {
    g.max_degree_in(active).max(max_triangle(g, active))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures::*;

    fn two_triangles() -> Multigraph {
        Multigraph::new(5, vec![(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]).unwrap()
    }

    #[test]
    fn decomposition_examples() {
        let dec = decompose_blocks(&two_triangles());
        assert_eq!(
            dec.blocks,
            vec![EdgeSet::from([0, 1, 2]), EdgeSet::from([3, 4, 5])]
        );
        assert_eq!(dec.cut_vertices, BTreeSet::from([2]));

        let dec = decompose_blocks(&path(1));
        assert_eq!(dec.len(), 1);
        assert!(dec.cut_vertices.is_empty());

        let dec = decompose_blocks(&path(3));
        assert_eq!(dec.len(), 3);
        assert_eq!(dec.cut_vertices, BTreeSet::from([1, 2]));

        assert!(decompose_blocks(&Multigraph::empty()).is_empty());
    }

    #[test]
    fn parallel_edges_stay_in_one_block() {
        let g = Multigraph::new(3, vec![(0, 1), (0, 1), (1, 2)]).unwrap();
        let dec = decompose_blocks(&g);
        assert_eq!(dec.blocks, vec![EdgeSet::from([0, 1]), EdgeSet::from([2])]);
        assert_eq!(dec.cut_vertices, BTreeSet::from([1]));
    }

    #[test]
    fn order_examples() {
        let dec = decompose_blocks(&two_triangles());
        let order = block_order(&dec, 0).unwrap();
        let summary: Vec<_> = order.iter().map(|t| (t.index, t.entry_vertex)).collect();
        assert_eq!(summary, vec![(0, None), (1, Some(2))]);

        let dec = decompose_blocks(&triangle());
        assert_eq!(block_order(&dec, 0).unwrap().len(), 1);
        assert!(block_order(&dec, 1).is_err());

        // Three bridges at center 0: rooted at the first, the others enter at 0.
        let dec = decompose_blocks(&star(3));
        let summary: Vec<_> = block_order(&dec, 0)
            .unwrap()
            .iter()
            .map(|t| (t.index, t.entry_vertex))
            .collect();
        assert_eq!(summary, vec![(0, None), (1, Some(0)), (2, Some(0))]);
    }

    #[test]
    fn every_root_gives_one_entry_per_block() {
        let g = Multigraph::new(
            8,
            vec![
                (0, 1),
                (1, 2),
                (2, 0),
                (2, 3),
                (3, 4),
                (4, 5),
                (5, 3),
                (3, 6),
                (6, 7),
            ],
        )
        .unwrap();
        let dec = decompose_blocks(&g);
        for root in 0..dec.len() {
            let order = block_order(&dec, root).unwrap();
            assert_eq!(order.len(), dec.len());
            assert_eq!(order[0].entry_vertex, None);
            for t in &order[1..] {
                let v = t.entry_vertex.unwrap();
                assert!(dec.cut_vertices.contains(&v));
                assert!(dec.block_vertices[t.index].contains(&v));
            }
        }
    }

    #[test]
    fn classification_examples() {
        assert!(matches!(
            classify_block(&cycle(4), &cycle(4).all_edges()).unwrap(),
            BlockClass::Bipartite(_)
        ));
        let k4_doubled = Multigraph::new(
            4,
            vec![(0, 1), (0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)],
        )
        .unwrap();
        assert_eq!(
            classify_block(&k4_doubled, &k4_doubled.all_edges()).unwrap(),
            BlockClass::FourVertex
        );
        assert!(matches!(
            classify_block(&cycle(5), &cycle(5).all_edges()),
            Err(Error::NotLinePerfect { .. })
        ));
    }

    #[test]
    fn k11n_apexes_are_found() {
        // Apexes 1 and 3, centers 0, 2, 4.
        let g = Multigraph::new(
            5,
            vec![
                (1, 3),
                (0, 1),
                (0, 3),
                (2, 1),
                (2, 3),
                (4, 1),
                (4, 3),
                (4, 3),
            ],
        )
        .unwrap();
        assert_eq!(
            classify_block(&g, &g.all_edges()).unwrap(),
            BlockClass::K11n {
                apex_a: 1,
                apex_b: 3,
                centers: vec![0, 2, 4]
            }
        );
        // A bare triangle is K_{1,1,1} with the two smallest vertices as apexes.
        assert_eq!(
            classify_block(&triangle(), &triangle().all_edges()).unwrap(),
            BlockClass::K11n {
                apex_a: 0,
                apex_b: 1,
                centers: vec![2]
            }
        );
    }

    #[test]
    fn chromatic_index_examples() {
        assert_eq!(chromatic_index(&triangle()).unwrap(), 3);
        assert_eq!(chromatic_index(&path(2)).unwrap(), 2);
        assert_eq!(chromatic_index(&k4()).unwrap(), 3);
        assert_eq!(chromatic_index(&two_triangles()).unwrap(), 4);
        assert_eq!(chromatic_index(&Multigraph::empty()).unwrap(), 0);
        assert!(chromatic_index(&cycle(5)).is_err());
        // Fat triangle: 2 + 2 + 1 parallel edges, every edge meets every other.
        let fat = Multigraph::new(3, vec![(0, 1), (0, 1), (1, 2), (1, 2), (0, 2)]).unwrap();
        assert_eq!(chromatic_index(&fat).unwrap(), 5);
    }
}
