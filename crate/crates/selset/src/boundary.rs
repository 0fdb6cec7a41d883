//! Per-block boundary sets: the shared preprocessing for the tree solver,
//! the unit-interval solver and the set-cover reduction.
//!
//! For a block `B`, `b1` holds the members adjacent to at least one vertex
//! of a different color, `b2` the remaining members adjacent to `b1`, and
//! `ball` their union.

use crate::error::Error;
use crate::graph::{blocks, Block, ColoredGraph, Vertex};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundaryPartition {
    pub block_id: usize,
    /// Members with a differently-colored neighbor, ascending.
    pub b1: Vec<Vertex>,
    /// Members outside `b1` with a neighbor in `b1`, ascending.
    pub b2: Vec<Vertex>,
    /// `b1 ∪ b2`, ascending.
    pub ball: Vec<Vertex>,
}

/// Per-vertex boundary classification shared by the solvers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum VState {
    /// Not in any block's boundary.
    Inner,
    B1,
    B2,
}

/// Classifies every vertex in O(n + m). Adjacency to a same-colored vertex
/// implies membership in the same block, so no block ids are needed.
pub(crate) fn boundary_states(g: &ColoredGraph) -> Vec<VState> {
    let n = g.vertex_count();
    let mut state = vec![VState::Inner; n];
    for v in g.vertices() {
        let col = g.color(v);
        if g.neighbors(v).iter().any(|&w| g.color(w) != col) {
            state[v as usize - 1] = VState::B1;
        }
    }
    for v in g.vertices() {
        if state[v as usize - 1] != VState::Inner {
            continue;
        }
        let col = g.color(v);
        let near_b1 = g
            .neighbors(v)
            .iter()
            .any(|&w| g.color(w) == col && state[w as usize - 1] == VState::B1);
        if near_b1 {
            state[v as usize - 1] = VState::B2;
        }
    }
    state
}

/// Computes the boundary partition of `block`, after checking that `block`
/// really is a block of `g` (connected, monochromatic, maximal).
pub fn boundary_partition(g: &ColoredGraph, block: &Block) -> Result<BoundaryPartition, Error> {
    if block.members.is_empty() {
        return Err(Error::NotABlock {
            detail: "empty member set".into(),
        });
    }
    for &v in &block.members {
        g.check_vertex(v)?;
    }
    let recomputed = blocks(g)
        .into_iter()
        .find(|b| b.members.contains(&block.members[0]))
        .expect("every vertex lies in a block");
    if recomputed.members != block.members {
        return Err(Error::NotABlock {
            detail: format!(
                "members do not form a maximal connected monochromatic set; expected {:?}",
                recomputed.members
            ),
        });
    }

    let mut b1 = Vec::new();
    let mut b2 = Vec::new();
    let col = g.color(block.members[0]);
    for &v in &block.members {
        if g.neighbors(v).iter().any(|&w| g.color(w) != col) {
            b1.push(v);
        }
    }
    let in_b1 = |v: Vertex| b1.binary_search(&v).is_ok();
    for &v in &block.members {
        if !in_b1(v) && g.neighbors(v).iter().any(|&w| g.color(w) == col && in_b1(w)) {
            b2.push(v);
        }
    }
    let mut ball: Vec<Vertex> = b1.iter().chain(b2.iter()).copied().collect();
    ball.sort_unstable();
    Ok(BoundaryPartition {
        block_id: block.id,
        b1,
        b2,
        ball,
    })
}

/// Boundary partitions of all blocks, in block order.
pub fn boundary_partitions(g: &ColoredGraph) -> Vec<BoundaryPartition> {
    let state = boundary_states(g);
    blocks(g)
        .into_iter()
        .map(|block| {
            let b1: Vec<Vertex> = block
                .members
                .iter()
                .copied()
                .filter(|&v| state[v as usize - 1] == VState::B1)
                .collect();
            let b2: Vec<Vertex> = block
                .members
                .iter()
                .copied()
                .filter(|&v| state[v as usize - 1] == VState::B2)
                .collect();
            let mut ball: Vec<Vertex> = b1.iter().chain(b2.iter()).copied().collect();
            ball.sort_unstable();
            BoundaryPartition {
                block_id: block.id,
                b1,
                b2,
                ball,
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::ColoredGraph;

    fn p3() -> ColoredGraph {
        ColoredGraph::new(vec![1, 1, 2], &[(1, 2), (2, 3)]).unwrap()
    }

    #[test]
    fn p3_boundaries() {
        let g = p3();
        let bs = blocks(&g);
        let part = boundary_partition(&g, &bs[0]).unwrap();
        assert_eq!(part.b1, vec![2]);
        assert_eq!(part.b2, vec![1]);
        assert_eq!(part.ball, vec![1, 2]);
        let part = boundary_partition(&g, &bs[1]).unwrap();
        assert_eq!(part.b1, vec![3]);
        assert!(part.b2.is_empty());
    }

    #[test]
    fn path5_boundaries() {
        let g = ColoredGraph::new(vec![1, 1, 1, 2, 2], &[(1, 2), (2, 3), (3, 4), (4, 5)]).unwrap();
        let bs = blocks(&g);
        let part = boundary_partition(&g, &bs[0]).unwrap();
        assert_eq!(part.b1, vec![3]);
        assert_eq!(part.b2, vec![2]);
        assert_eq!(part.ball, vec![2, 3]);
    }

    #[test]
    fn monochromatic_graph_has_empty_boundary() {
        let g = ColoredGraph::new(vec![1, 1, 1], &[(1, 2), (2, 3)]).unwrap();
        let bs = blocks(&g);
        let part = boundary_partition(&g, &bs[0]).unwrap();
        assert!(part.b1.is_empty());
        assert!(part.b2.is_empty());
        assert!(part.ball.is_empty());
    }

    #[test]
    fn rejects_non_block() {
        let g = p3();
        let fake = Block {
            id: 1,
            color: 1,
            members: vec![1],
        };
        assert!(matches!(
            boundary_partition(&g, &fake),
            Err(Error::NotABlock { .. })
        ));
    }

    #[test]
    fn partitions_match_per_block_computation() {
        let g = ColoredGraph::new(
            vec![1, 1, 2, 2, 1, 3],
            &[(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (1, 6)],
        )
        .unwrap();
        let all = boundary_partitions(&g);
        for (block, part) in blocks(&g).iter().zip(&all) {
            let direct = boundary_partition(&g, block).unwrap();
            assert_eq!(&direct, part);
        }
    }
}
