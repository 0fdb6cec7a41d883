//! Vertex-colored graphs, hop distances, nearest-neighbor sets, block
//! decomposition and the selective-subset verifier.
//!
//! A subset `S` of the vertices is *selective* if every vertex `v` of color
//! `l` has at least one vertex of color `l` among its nearest neighbors in
//! `S ∪ (V \ V_l)`, where `V_l` is the color class of `l`. The verifier
//! implemented here is the trust anchor that every solver in this crate is
//! tested against.

use std::collections::VecDeque;

use crate::error::Error;

/// External 1-based vertex id.
pub type Vertex = u32;

const INF: u32 = u32::MAX;

/// An undirected, connected, simple graph with a color per vertex.
///
/// Vertices are numbered `1..=n`. Colors are numbered `1..=c` and every
/// color in that range occurs on at least one vertex.
#[derive(Debug, Clone)]
pub struct ColoredGraph {
    n: usize,
    m: usize,
    c: usize,
    color: Vec<u32>,
    adj_off: Vec<usize>,
    adj: Vec<Vertex>,
}

impl ColoredGraph {
    /// Builds a graph from per-vertex colors (vertex `i+1` gets `colors[i]`)
    /// and an edge list. Rejects self-loops, duplicate edges, colors outside
    /// a contiguous `1..=c` range and disconnected inputs.
    pub fn new(colors: Vec<u32>, edges: &[(Vertex, Vertex)]) -> Result<Self, Error> {
        let n = colors.len();
        if n == 0 {
            return Err(Error::InfeasibleSpec {
                detail: "graph must have at least one vertex".into(),
            });
        }
        let c = *colors.iter().max().unwrap() as usize;
        let mut seen_color = vec![false; c + 1];
        for &col in &colors {
            if col == 0 {
                return Err(Error::InfeasibleSpec {
                    detail: "color ids are 1-based".into(),
                });
            }
            seen_color[col as usize] = true;
        }
        if let Some(missing) = (1..=c).find(|&l| !seen_color[l]) {
            return Err(Error::InfeasibleSpec {
                detail: format!("color {missing} is never used"),
            });
        }

        let mut normalized: Vec<(Vertex, Vertex)> = Vec::with_capacity(edges.len());
        for &(u, v) in edges {
            if u == 0 || u as usize > n {
                return Err(Error::VertexOutOfRange { vertex: u, n });
            }
            if v == 0 || v as usize > n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            if u == v {
                return Err(Error::InfeasibleSpec {
                    detail: format!("self-loop at vertex {u}"),
                });
            }
            normalized.push((u.min(v), u.max(v)));
        }
        normalized.sort_unstable();
        if let Some(w) = normalized.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InfeasibleSpec {
                detail: format!("duplicate edge {} {}", w[0].0, w[0].1),
            });
        }

        let m = normalized.len();
        let mut deg = vec![0usize; n];
        for &(u, v) in &normalized {
            deg[u as usize - 1] += 1;
            deg[v as usize - 1] += 1;
        }
        let mut adj_off = vec![0usize; n + 1];
        for i in 0..n {
            adj_off[i + 1] = adj_off[i] + deg[i];
        }
        let mut cursor = adj_off.clone();
        let mut adj = vec![0 as Vertex; 2 * m];
        for &(u, v) in &normalized {
            adj[cursor[u as usize - 1]] = v;
            cursor[u as usize - 1] += 1;
            adj[cursor[v as usize - 1]] = u;
            cursor[v as usize - 1] += 1;
        }
        for i in 0..n {
            adj[adj_off[i]..adj_off[i + 1]].sort_unstable();
        }

        let g = ColoredGraph {
            n,
            m,
            c,
            color: colors,
            adj_off,
            adj,
        };
        if !g.is_connected() {
            return Err(Error::Disconnected);
        }
        Ok(g)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.m
    }

    /// Number of colors in use; colors are `1..=color_count()`.
    pub fn color_count(&self) -> usize {
        self.c
    }

    pub fn color(&self, v: Vertex) -> u32 {
        self.color[v as usize - 1]
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> {
        1..=self.n as Vertex
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        let i = v as usize - 1;
        &self.adj[self.adj_off[i]..self.adj_off[i + 1]]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.neighbors(v).len()
    }

    /// True when the graph is a tree (connectivity holds by construction).
    pub fn is_tree(&self) -> bool {
        self.m == self.n - 1
    }

    pub fn check_vertex(&self, v: Vertex) -> Result<(), Error> {
        if v == 0 || v as usize > self.n {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        } else {
            Ok(())
        }
    }

    fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.n];
        let mut queue = VecDeque::new();
        seen[0] = true;
        queue.push_back(1 as Vertex);
        let mut count = 1;
        while let Some(u) = queue.pop_front() {
            for &w in self.neighbors(u) {
                let i = w as usize - 1;
                if !seen[i] {
                    seen[i] = true;
                    count += 1;
                    queue.push_back(w);
                }
            }
        }
        count == self.n
    }

    /// BFS distances from `root`; the graph is connected so all are finite.
    pub(crate) fn bfs_dists(&self, root: Vertex) -> Vec<u32> {
        let mut dist = vec![INF; self.n];
        dist[root as usize - 1] = 0;
        let mut queue = VecDeque::new();
        queue.push_back(root);
        while let Some(u) = queue.pop_front() {
            let du = dist[u as usize - 1];
            for &w in self.neighbors(u) {
                let i = w as usize - 1;
                if dist[i] == INF {
                    dist[i] = du + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Multi-source BFS; `dist[v-1] == u32::MAX` when `sources` is empty.
    pub(crate) fn bfs_multi(&self, sources: impl Iterator<Item = Vertex>) -> Vec<u32> {
        let mut dist = vec![INF; self.n];
        let mut queue = VecDeque::new();
        for s in sources {
            let i = s as usize - 1;
            if dist[i] != 0 {
                dist[i] = 0;
                queue.push_back(s);
            }
        }
        while let Some(u) = queue.pop_front() {
            let du = dist[u as usize - 1];
            for &w in self.neighbors(u) {
                let i = w as usize - 1;
                if dist[i] == INF {
                    dist[i] = du + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }
}

/// Number of edges on a shortest path between `u` and `v`.
pub fn hop_distance(g: &ColoredGraph, u: Vertex, v: Vertex) -> Result<u32, Error> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    if u == v {
        return Ok(0);
    }
    let mut dist = vec![INF; g.n];
    dist[u as usize - 1] = 0;
    let mut queue = VecDeque::new();
    queue.push_back(u);
    while let Some(x) = queue.pop_front() {
        let dx = dist[x as usize - 1];
        for &w in g.neighbors(x) {
            let i = w as usize - 1;
            if dist[i] == INF {
                if w == v {
                    return Ok(dx + 1);
                }
                dist[i] = dx + 1;
                queue.push_back(w);
            }
        }
    }
    unreachable!("graph is connected by construction")
}

/// All members of `candidates` at minimum hop-distance from `v`, ascending.
///
/// When `v` itself is a candidate the result is exactly `[v]`.
pub fn nearest_set(g: &ColoredGraph, v: Vertex, candidates: &[Vertex]) -> Result<Vec<Vertex>, Error> {
    g.check_vertex(v)?;
    if candidates.is_empty() {
        return Err(Error::EmptyCandidateSet);
    }
    let mut member = vec![false; g.n];
    for &u in candidates {
        g.check_vertex(u)?;
        member[u as usize - 1] = true;
    }
    if member[v as usize - 1] {
        return Ok(vec![v]);
    }

    let mut seen = vec![false; g.n];
    seen[v as usize - 1] = true;
    let mut level = vec![v];
    let mut next = Vec::new();
    while !level.is_empty() {
        next.clear();
        for &u in &level {
            for &w in g.neighbors(u) {
                let i = w as usize - 1;
                if !seen[i] {
                    seen[i] = true;
                    next.push(w);
                }
            }
        }
        let mut hits: Vec<Vertex> = next
            .iter()
            .copied()
            .filter(|&w| member[w as usize - 1])
            .collect();
        if !hits.is_empty() {
            hits.sort_unstable();
            return Ok(hits);
        }
        std::mem::swap(&mut level, &mut next);
    }
    unreachable!("graph is connected by construction")
}

/// A maximal connected monochromatic vertex set. Blocks partition the graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Block {
    /// 1-based position in the ordering by smallest member id.
    pub id: usize,
    pub color: u32,
    /// Ascending vertex ids.
    pub members: Vec<Vertex>,
}

/// Block decomposition, ordered by smallest member vertex id.
pub fn blocks(g: &ColoredGraph) -> Vec<Block> {
    let mut assigned = vec![false; g.n];
    let mut out = Vec::new();
    let mut queue = VecDeque::new();
    for v in g.vertices() {
        if assigned[v as usize - 1] {
            continue;
        }
        let col = g.color(v);
        let mut members = vec![v];
        assigned[v as usize - 1] = true;
        queue.push_back(v);
        while let Some(u) = queue.pop_front() {
            for &w in g.neighbors(u) {
                let i = w as usize - 1;
                if !assigned[i] && g.color(w) == col {
                    assigned[i] = true;
                    members.push(w);
                    queue.push_back(w);
                }
            }
        }
        members.sort_unstable();
        out.push(Block {
            id: out.len() + 1,
            color: col,
            members,
        });
    }
    out
}

/// Number of blocks: a lower bound on the size of any selective subset,
/// since each block must contribute at least one vertex.
pub fn block_lower_bound(g: &ColoredGraph) -> usize {
    blocks(g).len()
}

/// Outcome of a selective-subset check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Selective,
    /// The smallest vertex id whose nearest-neighbor condition fails.
    Violated { witness: Vertex },
}

impl Verdict {
    pub fn is_selective(&self) -> bool {
        matches!(self, Verdict::Selective)
    }
}

/// Checks whether `subset` is a selective subset of `g`.
///
/// For each vertex `v` of color `l` a BFS runs until the first level that
/// intersects `subset ∪ (V \ V_l)`; that level must contain a subset member
/// of color `l`. On failure the smallest violating vertex is reported.
pub fn is_selective(g: &ColoredGraph, subset: &[Vertex]) -> Result<Verdict, Error> {
    let mut in_s = vec![false; g.n];
    for &u in subset {
        g.check_vertex(u)?;
        in_s[u as usize - 1] = true;
    }

    // Versioned marks avoid clearing the visited array once per vertex.
    let mut mark = vec![0u32; g.n];
    let mut round = 0u32;
    let mut level: Vec<Vertex> = Vec::new();
    let mut next: Vec<Vertex> = Vec::new();

    'outer: for v in g.vertices() {
        if in_s[v as usize - 1] {
            continue;
        }
        let col = g.color(v);
        round += 1;
        mark[v as usize - 1] = round;
        level.clear();
        level.push(v);
        while !level.is_empty() {
            next.clear();
            for &u in &level {
                for &w in g.neighbors(u) {
                    let i = w as usize - 1;
                    if mark[i] != round {
                        mark[i] = round;
                        next.push(w);
                    }
                }
            }
            let mut terminal = false;
            let mut same_color_hit = false;
            for &w in &next {
                let i = w as usize - 1;
                if in_s[i] || g.color(w) != col {
                    terminal = true;
                    if in_s[i] && g.color(w) == col {
                        same_color_hit = true;
                        break;
                    }
                }
            }
            if terminal {
                if same_color_hit {
                    continue 'outer;
                }
                return Ok(Verdict::Violated { witness: v });
            }
            std::mem::swap(&mut level, &mut next);
        }
        // BFS exhausted without meeting the candidate set: monochromatic
        // graph with an empty subset.
        return Ok(Verdict::Violated { witness: v });
    }
    Ok(Verdict::Selective)
}

/// How a selective subset was produced.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Tree,
    Interval,
    Greedy,
    Brute,
    Manual,
}

impl Method {
    pub fn as_str(&self) -> &'static str {
        match self {
            Method::Tree => "tree",
            Method::Interval => "interval",
            Method::Greedy => "greedy",
            Method::Brute => "brute",
            Method::Manual => "manual",
        }
    }
}

/// A solver result: a vertex set plus the method that produced it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SelectiveSubset {
    /// Ascending vertex ids.
    pub members: Vec<Vertex>,
    pub method: Method,
}

impl SelectiveSubset {
    pub fn new(mut members: Vec<Vertex>, method: Method) -> Self {
        members.sort_unstable();
        members.dedup();
        SelectiveSubset { members, method }
    }

    pub fn size(&self) -> usize {
        self.members.len()
    }
}

fn split_fields(line: &str) -> Vec<&str> {
    line.split_whitespace().collect()
}

/// Parses the line-based graph format:
///
/// ```text
/// p mss <n> <m> <c>
/// v <id> <color>     (n lines, ids 1..n in any order)
/// e <u> <v>          (m lines)
/// ```
///
/// `#` starts a comment line. Every diagnostic names the offending line.
pub fn parse_graph(text: &str) -> Result<ColoredGraph, Error> {
    let mut header: Option<(usize, usize, usize, usize)> = None; // line, n, m, c
    let mut colors: Vec<u32> = Vec::new();
    let mut seen_vertex: Vec<bool> = Vec::new();
    let mut vertex_lines = 0usize;
    let mut edges: Vec<(Vertex, Vertex)> = Vec::new();
    let mut edge_seen: std::collections::HashSet<(Vertex, Vertex)> = std::collections::HashSet::new();

    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields = split_fields(line);
        match fields[0] {
            "p" => {
                if header.is_some() {
                    return Err(Error::Parse {
                        line: lineno,
                        message: "duplicate header line".into(),
                    });
                }
                if fields.len() != 5 || fields[1] != "mss" {
                    return Err(Error::Parse {
                        line: lineno,
                        message: "expected `p mss <n> <m> <c>`".into(),
                    });
                }
                let n: usize = parse_num(fields[2], lineno, "vertex count")?;
                let m: usize = parse_num(fields[3], lineno, "edge count")?;
                let c: usize = parse_num(fields[4], lineno, "color count")?;
                if n == 0 {
                    return Err(Error::Parse {
                        line: lineno,
                        message: "vertex count must be positive".into(),
                    });
                }
                colors = vec![0; n];
                seen_vertex = vec![false; n];
                header = Some((lineno, n, m, c));
            }
            "v" => {
                let (hline, n, _, c) = header.ok_or(Error::Parse {
                    line: lineno,
                    message: "vertex line before header".into(),
                })?;
                let _ = hline;
                if fields.len() != 3 {
                    return Err(Error::Parse {
                        line: lineno,
                        message: "expected `v <id> <color>`".into(),
                    });
                }
                let id: usize = parse_num(fields[1], lineno, "vertex id")?;
                let col: usize = parse_num(fields[2], lineno, "color")?;
                if id == 0 || id > n {
                    return Err(Error::Parse {
                        line: lineno,
                        message: format!("vertex id {id} out of range 1..={n}"),
                    });
                }
                if seen_vertex[id - 1] {
                    return Err(Error::Parse {
                        line: lineno,
                        message: format!("duplicate vertex {id}"),
                    });
                }
                if col == 0 || col > c {
                    return Err(Error::Parse {
                        line: lineno,
                        message: format!("color {col} outside 1..={c}"),
                    });
                }
                seen_vertex[id - 1] = true;
                colors[id - 1] = col as u32;
                vertex_lines += 1;
            }
            "e" => {
                let (_, n, _, _) = header.ok_or(Error::Parse {
                    line: lineno,
                    message: "edge line before header".into(),
                })?;
                if fields.len() != 3 {
                    return Err(Error::Parse {
                        line: lineno,
                        message: "expected `e <u> <v>`".into(),
                    });
                }
                let u: usize = parse_num(fields[1], lineno, "endpoint")?;
                let v: usize = parse_num(fields[2], lineno, "endpoint")?;
                if u == 0 || u > n {
                    return Err(Error::Parse {
                        line: lineno,
                        message: format!("vertex id {u} out of range 1..={n}"),
                    });
                }
                if v == 0 || v > n {
                    return Err(Error::Parse {
                        line: lineno,
                        message: format!("vertex id {v} out of range 1..={n}"),
                    });
                }
                if u == v {
                    return Err(Error::Parse {
                        line: lineno,
                        message: format!("self-loop at vertex {u}"),
                    });
                }
                let key = (u.min(v) as Vertex, u.max(v) as Vertex);
                if !edge_seen.insert(key) {
                    return Err(Error::Parse {
                        line: lineno,
                        message: format!("duplicate edge {u} {v}"),
                    });
                }
                edges.push(key);
            }
            other => {
                return Err(Error::Parse {
                    line: lineno,
                    message: format!("unknown line tag `{other}`"),
                });
            }
        }
    }

    let (hline, n, m, c) = header.ok_or(Error::Parse {
        line: 1,
        message: "missing `p mss` header".into(),
    })?;
    if vertex_lines != n {
        return Err(Error::Parse {
            line: hline,
            message: format!("declared {n} vertices but found {vertex_lines} `v` lines"),
        });
    }
    if edges.len() != m {
        return Err(Error::Parse {
            line: hline,
            message: format!("declared {m} edges but found {} `e` lines", edges.len()),
        });
    }
    let used = colors.iter().map(|&x| x as usize).max().unwrap_or(0);
    if used != c {
        return Err(Error::Parse {
            line: hline,
            message: format!("declared {c} colors but colors 1..={used} are used"),
        });
    }
    if let Some(missing) = (1..=c).find(|&l| !colors.iter().any(|&x| x as usize == l)) {
        return Err(Error::Parse {
            line: hline,
            message: format!("color {missing} is never used"),
        });
    }
    ColoredGraph::new(colors, &edges)
}

fn parse_num(token: &str, line: usize, what: &str) -> Result<usize, Error> {
    token.parse().map_err(|_| Error::Parse {
        line,
        message: format!("invalid {what} `{token}`"),
    })
}

/// Serializes a graph in the format accepted by [`parse_graph`].
pub fn write_graph(g: &ColoredGraph) -> String {
    let mut out = String::new();
    out.push_str(&format!("p mss {} {} {}\n", g.vertex_count(), g.edge_count(), g.color_count()));
    for v in g.vertices() {
        out.push_str(&format!("v {} {}\n", v, g.color(v)));
    }
    for u in g.vertices() {
        for &w in g.neighbors(u) {
            if u < w {
                out.push_str(&format!("e {u} {w}\n"));
            }
        }
    }
    out
}

/// Parses a subset file: whitespace-separated vertex ids, `#` comments.
/// Returns ascending, deduplicated ids (not validated against any graph).
pub fn parse_subset(text: &str) -> Result<Vec<Vertex>, Error> {
    let mut out = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        for token in line.split_whitespace() {
            let id: Vertex = token.parse().map_err(|_| Error::Parse {
                line: idx + 1,
                message: format!("invalid vertex id `{token}`"),
            })?;
            if id == 0 {
                return Err(Error::Parse {
                    line: idx + 1,
                    message: "vertex ids are 1-based".into(),
                });
            }
            out.push(id);
        }
    }
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

/// Serializes a subset as a single line of space-separated vertex ids.
pub fn write_subset(members: &[Vertex]) -> String {
    let mut out = String::new();
    for (i, v) in members.iter().enumerate() {
        if i > 0 {
            out.push(' ');
        }
        out.push_str(&v.to_string());
    }
    out.push('\n');
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn p3() -> ColoredGraph {
        ColoredGraph::new(vec![1, 1, 2], &[(1, 2), (2, 3)]).unwrap()
    }

    const P3_FILE: &str = "p mss 3 2 2\nv 1 1\nv 2 1\nv 3 2\ne 1 2\ne 2 3\n";

    #[test]
    fn parse_minimal_file() {
        let g = parse_graph(P3_FILE).unwrap();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edge_count(), 2);
        assert_eq!(g.color_count(), 2);
        assert_eq!(g.neighbors(2), &[1, 3]);
    }

    #[test]
    fn parse_rejects_self_loop() {
        let text = "p mss 3 3 2\nv 1 1\nv 2 1\nv 3 2\ne 1 2\ne 2 3\ne 1 1\n";
        match parse_graph(text) {
            Err(Error::Parse { line, message }) => {
                assert_eq!(line, 7);
                assert!(message.contains("self-loop"), "{message}");
            }
            other => panic!("expected self-loop error, got {other:?}"),
        }
    }

    #[test]
    fn parse_rejects_disconnected() {
        let text = "p mss 4 2 2\nv 1 1\nv 2 1\nv 3 2\nv 4 2\ne 1 2\ne 3 4\n";
        assert_eq!(parse_graph(text), Err(Error::Disconnected));
    }

    #[test]
    fn parse_rejects_duplicate_vertex_and_edge() {
        let dup_v = "p mss 3 2 2\nv 1 1\nv 1 1\nv 3 2\ne 1 2\ne 2 3\n";
        assert!(matches!(parse_graph(dup_v), Err(Error::Parse { line: 3, .. })));
        let dup_e = "p mss 3 2 2\nv 1 1\nv 2 1\nv 3 2\ne 1 2\ne 2 1\n";
        assert!(matches!(parse_graph(dup_e), Err(Error::Parse { line: 6, .. })));
    }

    #[test]
    fn parse_rejects_color_outside_range() {
        let text = "p mss 3 2 2\nv 1 1\nv 2 3\nv 3 2\ne 1 2\ne 2 3\n";
        assert!(matches!(parse_graph(text), Err(Error::Parse { line: 3, .. })));
    }

    #[test]
    fn parse_rejects_count_mismatch() {
        let text = "p mss 4 2 2\nv 1 1\nv 2 1\nv 3 2\ne 1 2\ne 2 3\n";
        assert!(matches!(parse_graph(text), Err(Error::Parse { line: 1, .. })));
    }

    #[test]
    fn write_then_parse_round_trips() {
        let g = p3();
        let text = write_graph(&g);
        assert_eq!(text, P3_FILE);
        let h = parse_graph(&text).unwrap();
        assert_eq!(h.vertex_count(), g.vertex_count());
        assert_eq!(h.edge_count(), g.edge_count());
    }

    #[test]
    fn hop_distance_on_path() {
        let g = p3();
        assert_eq!(hop_distance(&g, 1, 1).unwrap(), 0);
        assert_eq!(hop_distance(&g, 1, 3).unwrap(), 2);
        assert_eq!(hop_distance(&g, 1, 2).unwrap(), 1);
        assert_eq!(hop_distance(&g, 3, 1).unwrap(), 2);
        assert!(matches!(
            hop_distance(&g, 1, 4),
            Err(Error::VertexOutOfRange { vertex: 4, .. })
        ));
    }

    #[test]
    fn nearest_set_rules() {
        let g = p3();
        assert_eq!(nearest_set(&g, 2, &[1, 3]).unwrap(), vec![1, 3]);
        assert_eq!(nearest_set(&g, 1, &[1, 3]).unwrap(), vec![1]);
        assert_eq!(nearest_set(&g, 1, &[3]).unwrap(), vec![3]);
        assert_eq!(nearest_set(&g, 3, &[1, 2]).unwrap(), vec![2]);
        assert_eq!(nearest_set(&g, 1, &[]), Err(Error::EmptyCandidateSet));
    }

    #[test]
    fn blocks_on_small_graphs() {
        let g = p3();
        let bs = blocks(&g);
        assert_eq!(bs.len(), 2);
        assert_eq!(bs[0].members, vec![1, 2]);
        assert_eq!(bs[0].color, 1);
        assert_eq!(bs[1].members, vec![3]);
        assert_eq!(block_lower_bound(&g), 2);

        let tri = ColoredGraph::new(vec![1, 1, 1], &[(1, 2), (2, 3), (1, 3)]).unwrap();
        let bs = blocks(&tri);
        assert_eq!(bs.len(), 1);
        assert_eq!(bs[0].members, vec![1, 2, 3]);
        assert_eq!(block_lower_bound(&tri), 1);

        let path5 = ColoredGraph::new(vec![1, 1, 1, 2, 2], &[(1, 2), (2, 3), (3, 4), (4, 5)]).unwrap();
        let bs = blocks(&path5);
        assert_eq!(bs.len(), 2);
        assert_eq!(bs[0].members, vec![1, 2, 3]);
        assert_eq!(bs[1].members, vec![4, 5]);
    }

    #[test]
    fn selectivity_on_p3() {
        let g = p3();
        assert!(is_selective(&g, &[1, 2, 3]).unwrap().is_selective());
        assert_eq!(
            is_selective(&g, &[3]).unwrap(),
            Verdict::Violated { witness: 1 }
        );
        assert!(is_selective(&g, &[1, 3]).unwrap().is_selective());
        // Missing the color-2 class entirely.
        assert_eq!(
            is_selective(&g, &[1, 2]).unwrap(),
            Verdict::Violated { witness: 3 }
        );
        assert!(matches!(
            is_selective(&g, &[9]),
            Err(Error::VertexOutOfRange { vertex: 9, .. })
        ));
    }

    #[test]
    fn empty_subset_on_monochromatic_graph_is_rejected() {
        let tri = ColoredGraph::new(vec![1, 1, 1], &[(1, 2), (2, 3), (1, 3)]).unwrap();
        assert_eq!(
            is_selective(&tri, &[]).unwrap(),
            Verdict::Violated { witness: 1 }
        );
        assert!(is_selective(&tri, &[2]).unwrap().is_selective());
    }

    #[test]
    fn subset_file_round_trip() {
        let s = parse_subset("# comment\n3 1\n2\n").unwrap();
        assert_eq!(s, vec![1, 2, 3]);
        assert_eq!(write_subset(&s), "1 2 3\n");
        assert!(parse_subset("1 x").is_err());
    }
}
