//! Exhaustive exact solver for small instances.
//!
//! Blocks are independent in any selective subset, so the oracle enumerates
//! candidate sets per block (by increasing size, then lexicographically) and
//! unions the per-block optima. It is the ground truth the fast solvers are
//! tested against.

use itertools::Itertools;

use crate::boundary::boundary_partitions;
use crate::error::Error;
use crate::graph::{blocks, Block, ColoredGraph, Method, SelectiveSubset, Vertex};

/// Which candidate vertices the per-block enumeration may pick from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchSpace {
    /// All members of the block.
    FullBlock,
    /// Only the block's boundary `ball = b1 ∪ b2`.
    BoundaryOnly,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleConfig {
    /// Maximum number of candidate vertices enumerated within one block.
    pub max_block: usize,
    pub search: SearchSpace,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            max_block: 20,
            search: SearchSpace::FullBlock,
        }
    }
}

impl OracleConfig {
    pub fn boundary_only() -> Self {
        OracleConfig {
            search: SearchSpace::BoundaryOnly,
            ..OracleConfig::default()
        }
    }

    pub fn with_budget(max_block: usize) -> Self {
        OracleConfig {
            max_block,
            ..OracleConfig::default()
        }
    }
}

/// Distance from every vertex to the nearest vertex of a different color
/// than its own; `u32::MAX` on monochromatic graphs.
fn dists_to_other_colors(g: &ColoredGraph) -> Vec<u32> {
    let n = g.vertex_count();
    let mut out = vec![u32::MAX; n];
    for l in 1..=g.color_count() as u32 {
        let dist = g.bfs_multi(g.vertices().filter(|&v| g.color(v) != l));
        for v in g.vertices() {
            if g.color(v) == l {
                out[v as usize - 1] = dist[v as usize - 1];
            }
        }
    }
    out
}

/// True when `candidate` alone satisfies every member of the block: each
/// member must be at least as close to `candidate` as to any vertex of a
/// different color.
fn block_feasible(g: &ColoredGraph, members: &[Vertex], candidate: &[Vertex], dist_other: &[u32]) -> bool {
    let dist = g.bfs_multi(candidate.iter().copied());
    members.iter().all(|&v| {
        let d = dist[v as usize - 1];
        d != u32::MAX && d <= dist_other[v as usize - 1]
    })
}

fn candidate_space(g: &ColoredGraph, block: &Block, cfg: &OracleConfig) -> Vec<Vertex> {
    match cfg.search {
        SearchSpace::FullBlock => block.members.clone(),
        SearchSpace::BoundaryOnly => {
            // Monochromatic graphs have an empty boundary; fall back to the
            // whole block so a representative can still be chosen.
            let parts = boundary_partitions(g);
            let ball = &parts[block.id - 1].ball;
            if ball.is_empty() {
                block.members.clone()
            } else {
                ball.clone()
            }
        }
    }
}

fn exact_block_with(
    g: &ColoredGraph,
    block: &Block,
    space: &[Vertex],
    cfg: &OracleConfig,
    dist_other: &[u32],
) -> Result<Vec<Vertex>, Error> {
    if space.len() > cfg.max_block {
        return Err(Error::BlockTooLarge {
            smallest_member: block.members[0],
            size: space.len(),
            budget: cfg.max_block,
        });
    }
    for k in 1..=space.len() {
        for combo in space.iter().copied().combinations(k) {
            if block_feasible(g, &block.members, &combo, dist_other) {
                return Ok(combo);
            }
        }
    }
    unreachable!("the whole search space always satisfies its own block")
}

/// Minimum vertex set (within the configured search space) that satisfies
/// every member of `block`. Enumeration is by increasing size, ties broken
/// lexicographically by vertex id, so the result is deterministic.
pub fn exact_block(g: &ColoredGraph, block: &Block, cfg: &OracleConfig) -> Result<Vec<Vertex>, Error> {
    let dist_other = dists_to_other_colors(g);
    let space = candidate_space(g, block, cfg);
    exact_block_with(g, block, &space, cfg, &dist_other)
}

/// Exact minimum selective subset: the union of per-block optima.
pub fn exact_mss(g: &ColoredGraph, cfg: &OracleConfig) -> Result<SelectiveSubset, Error> {
    let dist_other = dists_to_other_colors(g);
    let mut members = Vec::new();
    for block in blocks(g) {
        let space = candidate_space(g, &block, cfg);
        members.extend(exact_block_with(g, &block, &space, cfg, &dist_other)?);
    }
    Ok(SelectiveSubset::new(members, Method::Brute))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{block_lower_bound, is_selective};

    fn p3() -> ColoredGraph {
        ColoredGraph::new(vec![1, 1, 2], &[(1, 2), (2, 3)]).unwrap()
    }

    #[test]
    fn p3_blocks_enumerate_to_known_optima() {
        let g = p3();
        let bs = blocks(&g);
        let cfg = OracleConfig::default();
        assert_eq!(exact_block(&g, &bs[0], &cfg).unwrap(), vec![1]);
        assert_eq!(exact_block(&g, &bs[1], &cfg).unwrap(), vec![3]);
        let m = exact_mss(&g, &cfg).unwrap();
        assert_eq!(m.size(), 2);
        assert!(is_selective(&g, &m.members).unwrap().is_selective());
    }

    #[test]
    fn path5_first_block_needs_a_central_vertex() {
        let g = ColoredGraph::new(vec![1, 1, 1, 2, 2], &[(1, 2), (2, 3), (3, 4), (4, 5)]).unwrap();
        let bs = blocks(&g);
        // {1} fails: vertex 3 is closer to the differently-colored vertex 4.
        assert_eq!(exact_block(&g, &bs[0], &OracleConfig::default()).unwrap(), vec![2]);
    }

    #[test]
    fn monochromatic_triangle_needs_one_vertex() {
        let g = ColoredGraph::new(vec![1, 1, 1], &[(1, 2), (2, 3), (1, 3)]).unwrap();
        let m = exact_mss(&g, &OracleConfig::default()).unwrap();
        assert_eq!(m.members, vec![1]);
        assert!(is_selective(&g, &m.members).unwrap().is_selective());
    }

    #[test]
    fn budget_is_enforced() {
        let g = p3();
        let bs = blocks(&g);
        let cfg = OracleConfig::with_budget(1);
        assert!(matches!(
            exact_block(&g, &bs[0], &cfg),
            Err(Error::BlockTooLarge { size: 2, budget: 1, .. })
        ));
    }

    #[test]
    fn boundary_only_matches_full_block_on_small_graphs() {
        let g = ColoredGraph::new(
            vec![1, 1, 2, 2, 1, 3],
            &[(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (1, 6)],
        )
        .unwrap();
        let full = exact_mss(&g, &OracleConfig::default()).unwrap();
        let boundary = exact_mss(&g, &OracleConfig::boundary_only()).unwrap();
        assert_eq!(full.size(), boundary.size());
        assert!(is_selective(&g, &boundary.members).unwrap().is_selective());
        assert!(block_lower_bound(&g) <= full.size());
    }
}
