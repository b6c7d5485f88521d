use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::color::{Color, ColorLists, ColorSet};
use crate::error::{Error, Result};
use crate::graph::{Multigraph, VertexId};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum BlockKind {
    Bipartite,
    FourVertex,
    K11n,
}

/// Relative odds of each block kind.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct KindWeights {
    pub bipartite: u32,
    pub four_vertex: u32,
    pub k11n: u32,
}

impl Default for KindWeights {
    fn default() -> Self {
        Self {
            bipartite: 2,
            four_vertex: 1,
            k11n: 2,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenParams {
    pub seed: u64,
    pub block_count: usize,
    pub max_multiplicity: usize,
    pub max_centers: usize,
    #[serde(default)]
    pub weights: KindWeights,
}

impl GenParams {
    pub fn new(seed: u64, block_count: usize, max_multiplicity: usize, max_centers: usize) -> Self {
        Self {
            seed,
            block_count,
            max_multiplicity,
            max_centers,
            weights: KindWeights::default(),
        }
    }

    pub fn validate(&self) -> Result<()> {
        let w = self.weights;
        let problem = if self.block_count == 0 {
            Some("block_count must be positive")
        } else if self.max_multiplicity == 0 {
            Some("max_multiplicity must be positive")
        } else if self.max_centers == 0 {
            Some("max_centers must be positive")
        } else if w.bipartite == 0 && w.four_vertex == 0 && w.k11n == 0 {
            Some("at least one block kind needs a positive weight")
        } else {
            None
        };
        match problem {
            Some(p) => Err(Error::InvalidArgument(p.into())),
            None => Ok(()),
        }
    }
}

/// A random tree of blocks glued at single vertices. Each block is a
/// bipartite multigraph, a `K_4` or `K_{1,1,2}` variant, or a `K_{1,1,n}`
/// with random multiplicities, so the result is line perfect.
pub fn gen_line_perfect(params: &GenParams) -> Result<Multigraph> {
    params.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    let mut vertex_count = 0;
    let mut edges: Vec<(VertexId, VertexId)> = Vec::new();
    for i in 0..params.block_count {
        let kind = pick_kind(&mut rng, &params.weights);
        let (size, local) = match kind {
            BlockKind::Bipartite => bipartite_block(&mut rng, params.max_multiplicity),
            BlockKind::FourVertex => four_vertex_block(&mut rng, params.max_multiplicity),
            BlockKind::K11n => k11n_block(&mut rng, params.max_multiplicity, params.max_centers),
        };
        // Local vertex `glue` becomes an existing vertex; the rest are new.
        let glue = rng.gen_range(0..size);
        let anchor = (i > 0).then(|| rng.gen_range(0..vertex_count));
        let mut map = Vec::with_capacity(size);
        for local_v in 0..size {
            match anchor {
                Some(a) if local_v == glue => map.push(a),
                _ => {
                    map.push(vertex_count);
                    vertex_count += 1;
                }
            }
        }
        edges.extend(local.into_iter().map(|(u, v)| (map[u], map[v])));
    }
    Multigraph::new(vertex_count, edges)
}

fn pick_kind(rng: &mut ChaCha8Rng, w: &KindWeights) -> BlockKind {
    let total = w.bipartite + w.four_vertex + w.k11n;
    let roll = rng.gen_range(0..total);
    if roll < w.bipartite {
        BlockKind::Bipartite
    } else if roll < w.bipartite + w.four_vertex {
        BlockKind::FourVertex
    } else {
        BlockKind::K11n
    }
}

/// Mostly simple edges, with an occasional multi-edge.
fn multiplicity(rng: &mut ChaCha8Rng, max: usize) -> usize {
    if max == 1 || rng.gen_bool(0.6) {
        1
    } else {
        rng.gen_range(2..=max)
    }
}

fn push_multi(
    rng: &mut ChaCha8Rng,
    max: usize,
    out: &mut Vec<(VertexId, VertexId)>,
    u: VertexId,
    v: VertexId,
) {
    for _ in 0..multiplicity(rng, max) {
        out.push((u, v));
    }
}

/// A bundle of parallel edges, or an even cycle with optional chords
/// between the two sides.
fn bipartite_block(rng: &mut ChaCha8Rng, max_mult: usize) -> (usize, Vec<(VertexId, VertexId)>) {
    let half = rng.gen_range(1..=3);
    let mut edges = Vec::new();
    if half == 1 {
        push_multi(rng, max_mult, &mut edges, 0, 1);
        return (2, edges);
    }
    // X side 0..half, Y side half..2*half; cycle x0 y0 x1 y1 ...
    let x = |i: usize| i;
    let y = |i: usize| half + i;
    for i in 0..half {
        push_multi(rng, max_mult, &mut edges, x(i), y(i));
        push_multi(rng, max_mult, &mut edges, y(i), x((i + 1) % half));
    }
    for i in 0..half {
        for j in 0..half {
            let on_cycle = j == i || (j + 1) % half == i;
            if !on_cycle && rng.gen_bool(0.3) {
                push_multi(rng, max_mult, &mut edges, x(i), y(j));
            }
        }
    }
    (2 * half, edges)
}

/// `K_4` or `K_{1,1,2}` with random multiplicities.
fn four_vertex_block(rng: &mut ChaCha8Rng, max_mult: usize) -> (usize, Vec<(VertexId, VertexId)>) {
    let mut pairs = vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
    if rng.gen_bool(0.5) {
        // Drop one pair to get K_{1,1,2}.
        let k = rng.gen_range(0..pairs.len());
        pairs.remove(k);
    }
    let mut edges = Vec::new();
    for (u, v) in pairs {
        push_multi(rng, max_mult, &mut edges, u, v);
    }
    (4, edges)
}

/// Apexes 0 and 1 joined to each other and to every center.
fn k11n_block(
    rng: &mut ChaCha8Rng,
    max_mult: usize,
    max_centers: usize,
) -> (usize, Vec<(VertexId, VertexId)>) {
    let n = rng.gen_range(1..=max_centers);
    let mut edges = Vec::new();
    push_multi(rng, max_mult, &mut edges, 0, 1);
    for c in 2..2 + n {
        push_multi(rng, max_mult, &mut edges, 0, c);
        push_multi(rng, max_mult, &mut edges, 1, c);
    }
    (n + 2, edges)
}

/// Lists of `size` distinct colors drawn uniformly from `1..=universe`.
pub fn random_lists<R: Rng>(
    rng: &mut R,
    edge_count: usize,
    size: usize,
    universe: u32,
) -> ColorLists {
    let palette: Vec<Color> = (1..=universe).collect();
    let size = size.min(palette.len());
    ColorLists::from_vecs(
        (0..edge_count)
            .map(|_| {
                palette
                    .choose_multiple(rng, size)
                    .copied()
                    .collect::<Vec<_>>()
            })
            .collect::<Vec<_>>(),
    )
}

/// Every edge gets `{1..=size}`.
pub fn identical_lists(edge_count: usize, size: usize) -> ColorLists {
    ColorLists::from_vecs(vec![(1..=size as Color).collect::<Vec<_>>(); edge_count])
}

/// A random multigraph on four vertices with between one and `max_edges` edges.
pub fn random_four_vertex<R: Rng>(rng: &mut R, max_edges: usize) -> Multigraph {
    const PAIRS: [(VertexId, VertexId); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
    let m = rng.gen_range(1..=max_edges.max(1));
    let edges = (0..m).map(|_| *PAIRS.choose(rng).unwrap()).collect();
    Multigraph::new(4, edges).unwrap()
}

/// A random small multigraph with lists in which no two non-adjacent edges
/// share a color. Some lists may be short or empty, so Hall's condition
/// fails on a good share of the output.
pub fn random_transversal<R: Rng>(rng: &mut R, max_edges: usize) -> (Multigraph, ColorLists) {
    let n = rng.gen_range(2..=5);
    let m = rng.gen_range(1..=max_edges.max(1));
    let edges: Vec<(VertexId, VertexId)> = (0..m)
        .map(|_| {
            let u = rng.gen_range(0..n);
            let mut v = rng.gen_range(0..n - 1);
            if v >= u {
                v += 1;
            }
            (u, v)
        })
        .collect();
    let g = Multigraph::new(n, edges).unwrap();
    let universe = rng.gen_range(1..=m as Color + 1);
    let mut lists: Vec<ColorSet> = Vec::with_capacity(m);
    for e in 0..m {
        let size = rng.gen_range(0..=3.min(universe as usize));
        let palette: Vec<Color> = (1..=universe).collect();
        let mut list: ColorSet = palette.choose_multiple(rng, size).copied().collect();
        for (q, earlier) in lists.iter().enumerate() {
            if !g.adjacent(e, q) {
                list.retain(|c| !earlier.contains(c));
            }
        }
        lists.push(list);
    }
    (
        g,
        ColorLists::from_vecs(lists.into_iter().map(|l| l.into_iter().collect::<Vec<_>>())),
    )
}
