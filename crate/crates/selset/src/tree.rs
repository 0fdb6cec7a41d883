//! Exact linear-time solver for trees.
//!
//! Per block, the boundary vertices `ball = b1 ∪ b2` induce maximal
//! monochromatic subtrees. Each subtree is consumed bottom-up: the deepest
//! remaining vertex (ties by smallest id) is inspected; `b2` vertices are
//! discarded, while a `b1` vertex forces its subtree parent (or itself, at
//! the subtree root) into the solution. After a parent `v` is selected, `v`
//! and its remaining children leave the subtree and a grandparent in `b1`
//! is demoted to `b2`, since `v` already covers it.

use std::collections::BTreeMap;

use crate::boundary::{boundary_states, BoundaryPartition, VState};
use crate::error::Error;
use crate::graph::{ColoredGraph, Method, SelectiveSubset, Vertex};

/// A maximal monochromatic boundary subtree, rooted at its member nearest
/// the global root.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootedSubtree {
    pub root: Vertex,
    /// Ascending vertex ids.
    pub members: Vec<Vertex>,
    /// Parent within the subtree for every non-root member.
    pub parent: BTreeMap<Vertex, Vertex>,
    /// Depth relative to the global tree root.
    pub depth: BTreeMap<Vertex, u32>,
}

fn ensure_tree(g: &ColoredGraph) -> Result<(), Error> {
    if !g.is_tree() {
        return Err(Error::NotATree {
            vertices: g.vertex_count(),
            edges: g.edge_count(),
        });
    }
    Ok(())
}

/// Parent and depth arrays of the tree rooted at `root` (indexed by id - 1;
/// the root's parent entry is 0).
fn root_tree(g: &ColoredGraph, root: Vertex) -> (Vec<Vertex>, Vec<u32>) {
    let n = g.vertex_count();
    let mut parent = vec![0 as Vertex; n];
    let mut depth = vec![0u32; n];
    let mut seen = vec![false; n];
    seen[root as usize - 1] = true;
    let mut queue = std::collections::VecDeque::new();
    queue.push_back(root);
    while let Some(u) = queue.pop_front() {
        for &w in g.neighbors(u) {
            let i = w as usize - 1;
            if !seen[i] {
                seen[i] = true;
                parent[i] = u;
                depth[i] = depth[u as usize - 1] + 1;
                queue.push_back(w);
            }
        }
    }
    (parent, depth)
}

/// The maximal connected subtrees induced by one block's boundary set,
/// ordered by root id.
pub fn subtrees(
    g: &ColoredGraph,
    part: &BoundaryPartition,
    root: Vertex,
) -> Result<Vec<RootedSubtree>, Error> {
    ensure_tree(g)?;
    g.check_vertex(root)?;
    let (parent, depth) = root_tree(g, root);

    let n = g.vertex_count();
    let mut in_ball = vec![false; n];
    for &v in &part.ball {
        g.check_vertex(v)?;
        in_ball[v as usize - 1] = true;
    }

    let mut assigned = vec![false; n];
    let mut out = Vec::new();
    for &start in &part.ball {
        if assigned[start as usize - 1] {
            continue;
        }
        let mut members = vec![start];
        assigned[start as usize - 1] = true;
        let mut queue = std::collections::VecDeque::new();
        queue.push_back(start);
        while let Some(u) = queue.pop_front() {
            for &w in g.neighbors(u) {
                let i = w as usize - 1;
                if in_ball[i] && !assigned[i] {
                    assigned[i] = true;
                    members.push(w);
                    queue.push_back(w);
                }
            }
        }
        members.sort_unstable();
        // The member closest to the global root is unique in a tree.
        let subtree_root = *members
            .iter()
            .min_by_key(|&&v| depth[v as usize - 1])
            .unwrap();
        let mut pmap = BTreeMap::new();
        let mut dmap = BTreeMap::new();
        for &v in &members {
            dmap.insert(v, depth[v as usize - 1]);
            if v != subtree_root {
                pmap.insert(v, parent[v as usize - 1]);
            }
        }
        out.push(RootedSubtree {
            root: subtree_root,
            members,
            parent: pmap,
            depth: dmap,
        });
    }
    out.sort_by_key(|t| t.root);
    Ok(out)
}

/// Minimum selective subset of a tree, in O(n).
///
/// A monochromatic tree has an empty boundary everywhere; the root alone is
/// then a valid minimum answer.
pub fn solve_tree(g: &ColoredGraph, root: Vertex) -> Result<SelectiveSubset, Error> {
    ensure_tree(g)?;
    g.check_vertex(root)?;

    if g.color_count() == 1 {
        return Ok(SelectiveSubset::new(vec![root], Method::Tree));
    }

    let n = g.vertex_count();
    let (parent, depth) = root_tree(g, root);
    let mut state = boundary_states(g);

    let in_ball = |st: &[VState], v: Vertex| st[v as usize - 1] != VState::Inner;

    // Child lists restricted to same-block boundary vertices, in CSR form.
    // A boundary child of a boundary parent of the same color shares the
    // block, so no block ids are required.
    let mut child_count = vec![0usize; n];
    let mut ball_vertices = Vec::new();
    for v in g.vertices() {
        if !in_ball(&state, v) {
            continue;
        }
        ball_vertices.push(v);
        let p = parent[v as usize - 1];
        if p != 0 && in_ball(&state, p) && g.color(p) == g.color(v) {
            child_count[p as usize - 1] += 1;
        }
    }
    let mut child_off = vec![0usize; n + 1];
    for i in 0..n {
        child_off[i + 1] = child_off[i] + child_count[i];
    }
    let mut child_fill = child_off.clone();
    let mut child = vec![0 as Vertex; child_off[n]];
    for &v in &ball_vertices {
        let p = parent[v as usize - 1];
        if p != 0 && in_ball(&state, p) && g.color(p) == g.color(v) {
            child[child_fill[p as usize - 1]] = v;
            child_fill[p as usize - 1] += 1;
        }
    }

    // Bucket boundary vertices by depth; filling in ascending id order keeps
    // each bucket sorted, which realizes the smallest-id tie-break.
    let max_depth = ball_vertices
        .iter()
        .map(|&v| depth[v as usize - 1])
        .max()
        .unwrap_or(0) as usize;
    let mut bucket_count = vec![0usize; max_depth + 1];
    for &v in &ball_vertices {
        bucket_count[depth[v as usize - 1] as usize] += 1;
    }
    let mut bucket_off = vec![0usize; max_depth + 2];
    for d in 0..=max_depth {
        bucket_off[d + 1] = bucket_off[d] + bucket_count[d];
    }
    let mut bucket_fill = bucket_off.clone();
    let mut bucket = vec![0 as Vertex; ball_vertices.len()];
    for &v in &ball_vertices {
        let d = depth[v as usize - 1] as usize;
        bucket[bucket_fill[d]] = v;
        bucket_fill[d] += 1;
    }

    let mut alive = vec![false; n];
    for &v in &ball_vertices {
        alive[v as usize - 1] = true;
    }

    let mut chosen = Vec::new();
    for d in (0..=max_depth).rev() {
        for idx in bucket_off[d]..bucket_off[d + 1] {
            let u = bucket[idx];
            if !alive[u as usize - 1] {
                continue;
            }
            match state[u as usize - 1] {
                VState::Inner => unreachable!("only boundary vertices are bucketed"),
                VState::B2 => {
                    alive[u as usize - 1] = false;
                }
                VState::B1 => {
                    let p = parent[u as usize - 1];
                    let has_subtree_parent =
                        p != 0 && in_ball(&state, p) && g.color(p) == g.color(u);
                    if has_subtree_parent {
                        debug_assert!(alive[p as usize - 1]);
                        chosen.push(p);
                        alive[p as usize - 1] = false;
                        for &ch in &child[child_off[p as usize - 1]..child_off[p as usize]] {
                            alive[ch as usize - 1] = false;
                        }
                        let w = parent[p as usize - 1];
                        if w != 0
                            && in_ball(&state, w)
                            && g.color(w) == g.color(p)
                            && state[w as usize - 1] == VState::B1
                        {
                            state[w as usize - 1] = VState::B2;
                        }
                    } else {
                        chosen.push(u);
                        alive[u as usize - 1] = false;
                    }
                }
            }
        }
    }

    Ok(SelectiveSubset::new(chosen, Method::Tree))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::boundary::boundary_partitions;
    use crate::brute::{exact_mss, OracleConfig};
    use crate::graph::{block_lower_bound, is_selective};

    fn p3() -> ColoredGraph {
        ColoredGraph::new(vec![1, 1, 2], &[(1, 2), (2, 3)]).unwrap()
    }

    fn path5() -> ColoredGraph {
        ColoredGraph::new(vec![1, 1, 1, 2, 2], &[(1, 2), (2, 3), (3, 4), (4, 5)]).unwrap()
    }

    #[test]
    fn subtrees_of_path5_block() {
        let g = path5();
        let parts = boundary_partitions(&g);
        let ts = subtrees(&g, &parts[0], 1).unwrap();
        assert_eq!(ts.len(), 1);
        assert_eq!(ts[0].members, vec![2, 3]);
        assert_eq!(ts[0].root, 2);
        assert_eq!(ts[0].parent.get(&3), Some(&2));
        assert_eq!(ts[0].depth.get(&3), Some(&2));
    }

    #[test]
    fn subtrees_of_singleton_block() {
        let g = p3();
        let parts = boundary_partitions(&g);
        let ts = subtrees(&g, &parts[1], 1).unwrap();
        assert_eq!(ts.len(), 1);
        assert_eq!(ts[0].members, vec![3]);
        assert_eq!(ts[0].root, 3);
        assert!(ts[0].parent.is_empty());
    }

    #[test]
    fn subtrees_of_star_block() {
        // Center 1 and leaves 2, 3 share a color; leaf 4 differs.
        let g = ColoredGraph::new(vec![1, 1, 1, 2], &[(1, 2), (1, 3), (1, 4)]).unwrap();
        let parts = boundary_partitions(&g);
        assert_eq!(parts[0].b1, vec![1]);
        assert_eq!(parts[0].b2, vec![2, 3]);
        let ts = subtrees(&g, &parts[0], 1).unwrap();
        assert_eq!(ts.len(), 1);
        assert_eq!(ts[0].root, 1);
        assert_eq!(ts[0].members, vec![1, 2, 3]);
    }

    #[test]
    fn solves_p3() {
        let g = p3();
        let m = solve_tree(&g, 1).unwrap();
        assert_eq!(m.members, vec![1, 3]);
        assert!(is_selective(&g, &m.members).unwrap().is_selective());
    }

    #[test]
    fn solves_path5() {
        let g = path5();
        let m = solve_tree(&g, 1).unwrap();
        assert_eq!(m.members, vec![2, 4]);
        assert!(is_selective(&g, &m.members).unwrap().is_selective());
    }

    #[test]
    fn monochromatic_tree_yields_the_root() {
        let g = ColoredGraph::new(vec![1, 1, 1, 1], &[(1, 2), (2, 3), (2, 4)]).unwrap();
        assert_eq!(solve_tree(&g, 1).unwrap().members, vec![1]);
        assert_eq!(solve_tree(&g, 3).unwrap().members, vec![3]);
    }

    #[test]
    fn rejects_non_tree() {
        let g = ColoredGraph::new(vec![1, 1, 2], &[(1, 2), (2, 3), (1, 3)]).unwrap();
        assert!(matches!(solve_tree(&g, 1), Err(Error::NotATree { .. })));
    }

    #[test]
    fn matches_oracle_and_lower_bound_on_fixed_trees() {
        let cases: Vec<ColoredGraph> = vec![
            p3(),
            path5(),
            ColoredGraph::new(vec![1, 2, 1, 2, 1], &[(1, 2), (2, 3), (3, 4), (4, 5)]).unwrap(),
            ColoredGraph::new(
                vec![1, 1, 2, 2, 3, 1, 2],
                &[(1, 2), (2, 3), (3, 4), (2, 5), (5, 6), (5, 7)],
            )
            .unwrap(),
        ];
        for g in cases {
            let opt = exact_mss(&g, &OracleConfig::default()).unwrap();
            for root in g.vertices() {
                let m = solve_tree(&g, root).unwrap();
                assert!(is_selective(&g, &m.members).unwrap().is_selective());
                assert_eq!(m.size(), opt.size(), "root {root}");
                assert!(block_lower_bound(&g) <= m.size());
            }
        }
    }
}
