//! Brute-force ground truth over generic edge-coloured graphs.
//!
//! Nothing here knows about `o`, `t`, `gamma` or any closed form: the only
//! hypercube-specific code is [`build_colored_hypercube`], which reads the
//! class of each dimension from the colouring and nothing else.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt::Write as _;

use num_bigint::BigUint;
use num_traits::Zero;
use thiserror::Error;

use crate::coloring::Coloring;
use crate::counting::PathCount;

/// Colour label of an edge.
pub type Color = u16;

/// Default cap on the number of paths materialised by [`oracle_count_shortest`].
pub const DEFAULT_BUDGET: u64 = 1_000_000;

/// Largest hypercube the oracle will build.
pub const MAX_ORACLE_DIMS: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("vertex id {id} out of range (graph has {vertex_count} vertices)")]
    InvalidVertex { id: usize, vertex_count: usize },
    #[error("vertex {1} is not reachable from {0} by a properly coloured walk")]
    Unreachable(usize, usize),
    #[error("path budget of {0} exceeded")]
    BudgetExceeded(u64),
    #[error("hypercube dimension {0} outside oracle range 2..={MAX_ORACLE_DIMS}")]
    DimensionOutOfRange(usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1} with colour {2}")]
    DuplicateEdge(usize, usize, Color),
    #[error("edge list line {line}: {reason}")]
    Format { line: usize, reason: String },
}

/// Finite undirected graph with colour-labelled edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoredGraph {
    vertex_count: usize,
    edges: Vec<(usize, usize, Color)>,
    adjacency: Vec<Vec<(usize, Color)>>,
}

impl ColoredGraph {
    pub fn new(vertex_count: usize) -> Self {
        ColoredGraph {
            vertex_count,
            edges: Vec::new(),
            adjacency: vec![Vec::new(); vertex_count],
        }
    }

    pub fn from_edges(
        vertex_count: usize,
        edges: impl IntoIterator<Item = (usize, usize, Color)>,
    ) -> Result<Self, OracleError> {
        let mut g = ColoredGraph::new(vertex_count);
        let mut seen = BTreeSet::new();
        for (a, b, color) in edges {
            g.check(a)?;
            g.check(b)?;
            if a == b {
                return Err(OracleError::SelfLoop(a));
            }
            if !seen.insert((a.min(b), a.max(b), color)) {
                return Err(OracleError::DuplicateEdge(a, b, color));
            }
            g.edges.push((a, b, color));
            g.adjacency[a].push((b, color));
            g.adjacency[b].push((a, color));
        }
        Ok(g)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edges(&self) -> &[(usize, usize, Color)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[(usize, Color)] {
        &self.adjacency[v]
    }

    /// Distinct colour labels, ascending.
    pub fn colors(&self) -> Vec<Color> {
        let set: BTreeSet<Color> = self.edges.iter().map(|e| e.2).collect();
        set.into_iter().collect()
    }

    fn check(&self, id: usize) -> Result<(), OracleError> {
        if id >= self.vertex_count {
            return Err(OracleError::InvalidVertex {
                id,
                vertex_count: self.vertex_count,
            });
        }
        Ok(())
    }

    /// Plain-text edge list: `n_vertices n_edges n_colors`, then `u v color`
    /// per edge in insertion order.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "{} {} {}",
            self.vertex_count,
            self.edges.len(),
            self.colors().len()
        );
        for (a, b, c) in &self.edges {
            let _ = writeln!(out, "{a} {b} {c}");
        }
        out
    }

    pub fn from_edge_list(text: &str) -> Result<Self, OracleError> {
        let fmt_err = |line: usize, reason: &str| OracleError::Format {
            line,
            reason: reason.to_string(),
        };
        let mut lines = text.lines().enumerate();
        let (_, header) = lines.next().ok_or_else(|| fmt_err(1, "missing header"))?;
        let head: Vec<usize> = header
            .split_whitespace()
            .map(|x| {
                x.parse::<usize>()
                    .map_err(|_| fmt_err(1, "header fields must be integers"))
            })
            .collect::<Result<_, _>>()?;
        let [vertex_count, edge_count, color_count] = head[..] else {
            return Err(fmt_err(1, "header needs n_vertices n_edges n_colors"));
        };
        let mut edges = Vec::with_capacity(edge_count);
        for (i, line) in lines {
            if line.trim().is_empty() {
                continue;
            }
            let parts: Vec<&str> = line.split_whitespace().collect();
            let [a, b, c] = parts[..] else {
                return Err(fmt_err(i + 1, "expected `u v color`"));
            };
            let parse = |s: &str| {
                s.parse::<usize>()
                    .map_err(|_| fmt_err(i + 1, "endpoint is not an integer"))
            };
            let color = c
                .parse::<Color>()
                .map_err(|_| fmt_err(i + 1, "colour is not a small integer"))?;
            edges.push((parse(a)?, parse(b)?, color));
        }
        if edges.len() != edge_count {
            return Err(fmt_err(1, "edge count does not match header"));
        }
        let g = ColoredGraph::from_edges(vertex_count, edges)?;
        if g.colors().len() != color_count {
            return Err(fmt_err(1, "colour count does not match header"));
        }
        Ok(g)
    }
}

/// `H_n` with vertex id bit `i - 1` holding dimension `i`; the edge across
/// dimension `i` carries the label of `i`'s colour class.
pub fn build_colored_hypercube(n: usize, c: &Coloring) -> Result<ColoredGraph, OracleError> {
    if !(2..=MAX_ORACLE_DIMS).contains(&n) || c.dims() != n {
        return Err(OracleError::DimensionOutOfRange(n));
    }
    let count = 1usize << n;
    let mut edges = Vec::with_capacity(n << (n - 1));
    for x in 0..count {
        for dim in 1..=n {
            let y = x ^ (1 << (dim - 1));
            if x < y {
                edges.push((x, y, c.class_of(dim).label()));
            }
        }
    }
    ColoredGraph::from_edges(count, edges)
}

/// Walk state: current vertex plus the index of the colour last used,
/// `colors.len()` meaning "no edge yet".
struct StateSpace {
    colors: Vec<Color>,
    slot: HashMap<Color, usize>,
}

impl StateSpace {
    fn new(g: &ColoredGraph) -> Self {
        let colors = g.colors();
        let slot = colors.iter().enumerate().map(|(i, &c)| (c, i)).collect();
        StateSpace { colors, slot }
    }

    fn width(&self) -> usize {
        self.colors.len() + 1
    }

    fn none(&self) -> usize {
        self.colors.len()
    }
}

/// Shortest proper walk length from every vertex to `target`, as a function
/// of the colour used to arrive there: `to_target[x * width + k]` is the
/// fewest edges from `x` to `target` whose first edge avoids colour slot `k`.
fn distances_to(g: &ColoredGraph, space: &StateSpace, target: usize) -> Vec<Option<usize>> {
    let width = space.width();
    let mut dist = vec![None; g.vertex_count * width];
    let mut queue = VecDeque::new();
    for k in 0..width {
        dist[target * width + k] = Some(0);
    }
    // Seed with real-colour states; the "none" slot never constrains a step.
    for k in 0..space.colors.len() {
        queue.push_back((target, k));
    }
    while let Some((y, k)) = queue.pop_front() {
        let d = dist[y * width + k].expect("queued states are labelled");
        let color = space.colors[k];
        // (x, k') steps to (y, k) across an edge of colour `color` when k' != k.
        for &(x, edge_color) in g.neighbors(y) {
            if edge_color != color {
                continue;
            }
            for k2 in 0..width {
                if k2 == k {
                    continue;
                }
                let idx = x * width + k2;
                if dist[idx].is_none() {
                    dist[idx] = Some(d + 1);
                    if k2 != space.none() {
                        queue.push_back((x, k2));
                    }
                }
            }
        }
    }
    dist
}

/// Minimum number of edges over properly coloured walks from `u` to `v`,
/// by breadth-first search over (vertex, last colour) states. `Ok(None)`
/// when `v` cannot be reached.
pub fn oracle_proper_distance(
    g: &ColoredGraph,
    u: usize,
    v: usize,
) -> Result<Option<usize>, OracleError> {
    g.check(u)?;
    g.check(v)?;
    Ok(oracle_distances_from(g, u)[v])
}

/// Proper distance from `u` to every vertex.
pub fn oracle_distances_from(g: &ColoredGraph, u: usize) -> Vec<Option<usize>> {
    let space = StateSpace::new(g);
    let width = space.width();
    let mut state_dist = vec![usize::MAX; g.vertex_count * width];
    let mut best = vec![None; g.vertex_count];
    let mut queue = VecDeque::new();
    state_dist[u * width + space.none()] = 0;
    best[u] = Some(0);
    queue.push_back((u, space.none()));
    while let Some((x, k)) = queue.pop_front() {
        let d = state_dist[x * width + k];
        for &(y, color) in g.neighbors(x) {
            let k2 = space.slot[&color];
            if k2 == k {
                continue;
            }
            let idx = y * width + k2;
            if state_dist[idx] == usize::MAX {
                state_dist[idx] = d + 1;
                if best[y].is_none() {
                    best[y] = Some(d + 1);
                }
                queue.push_back((y, k2));
            }
        }
    }
    best
}

/// Number of vertex-simple properly coloured paths from `u` to `v` whose
/// length equals the proper distance, by exhaustive depth-first search.
///
/// Branches that cannot reach `v` within the remaining length are cut using
/// exact walk distances to `v`. Fails once more than `budget` paths are found.
pub fn oracle_count_shortest(
    g: &ColoredGraph,
    u: usize,
    v: usize,
    budget: u64,
) -> Result<PathCount, OracleError> {
    g.check(u)?;
    g.check(v)?;
    let space = StateSpace::new(g);
    let to_target = distances_to(g, &space, v);
    let width = space.width();
    let Some(length) = to_target[u * width + space.none()] else {
        return Err(OracleError::Unreachable(u, v));
    };

    struct Search<'a> {
        g: &'a ColoredGraph,
        space: &'a StateSpace,
        to_target: &'a [Option<usize>],
        target: usize,
        on_path: Vec<bool>,
        found: u64,
        budget: u64,
    }

    impl Search<'_> {
        fn dfs(&mut self, x: usize, k: usize, left: usize) -> Result<(), OracleError> {
            if left == 0 {
                if x == self.target {
                    self.found += 1;
                    if self.found > self.budget {
                        return Err(OracleError::BudgetExceeded(self.budget));
                    }
                }
                return Ok(());
            }
            let width = self.space.width();
            for &(y, color) in self.g.neighbors(x) {
                let k2 = self.space.slot[&color];
                if k2 == k || self.on_path[y] {
                    continue;
                }
                match self.to_target[y * width + k2] {
                    Some(rest) if rest < left => {}
                    _ => continue,
                }
                self.on_path[y] = true;
                let r = self.dfs(y, k2, left - 1);
                self.on_path[y] = false;
                r?;
            }
            Ok(())
        }
    }

    let mut search = Search {
        g,
        space: &space,
        to_target: &to_target,
        target: v,
        on_path: vec![false; g.vertex_count],
        found: 0,
        budget,
    };
    search.on_path[u] = true;
    search.dfs(u, space.none(), length)?;
    Ok(PathCount::from(search.found))
}

/// Number of properly coloured walks (vertices may repeat) from `u` to `v`
/// of length exactly the proper distance, by dynamic programming over
/// (vertex, last colour, steps).
pub fn oracle_count_shortest_walks(
    g: &ColoredGraph,
    u: usize,
    v: usize,
) -> Result<PathCount, OracleError> {
    g.check(u)?;
    g.check(v)?;
    oracle_count_shortest_walks_from(g, u)?
        .swap_remove(v)
        .ok_or(OracleError::Unreachable(u, v))
}

/// [`oracle_count_shortest_walks`] from `u` to every vertex in one pass;
/// `None` for unreachable vertices.
pub fn oracle_count_shortest_walks_from(
    g: &ColoredGraph,
    u: usize,
) -> Result<Vec<Option<PathCount>>, OracleError> {
    g.check(u)?;
    let dist = oracle_distances_from(g, u);
    let horizon = dist.iter().flatten().copied().max().unwrap_or(0);
    let space = StateSpace::new(g);
    let width = space.width();
    let mut result: Vec<Option<PathCount>> = vec![None; g.vertex_count];
    let mut layer: Vec<BigUint> = vec![BigUint::zero(); g.vertex_count * width];
    layer[u * width + space.none()] = BigUint::from(1u8);
    for step in 0..=horizon {
        for (x, d) in dist.iter().enumerate() {
            if *d == Some(step) {
                let total = (0..width).fold(BigUint::zero(), |acc, k| acc + &layer[x * width + k]);
                result[x] = Some(PathCount::from(total));
            }
        }
        if step == horizon {
            break;
        }
        let mut next = vec![BigUint::zero(); layer.len()];
        for (idx, ways) in layer.iter().enumerate() {
            if ways.is_zero() {
                continue;
            }
            let (x, k) = (idx / width, idx % width);
            for &(y, color) in g.neighbors(x) {
                let k2 = space.slot[&color];
                if k2 != k {
                    next[y * width + k2] += ways;
                }
            }
        }
        layer = next;
    }
    Ok(result)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::vertex::Vertex;

    fn id(s: &str) -> usize {
        s.parse::<Vertex>().unwrap().index().unwrap() as usize
    }

    #[test]
    fn hypercube_sizes() {
        let g = build_colored_hypercube(2, &Coloring::prefix(2, 1).unwrap()).unwrap();
        assert_eq!((g.vertex_count(), g.edges().len()), (4, 4));
        assert_eq!(g.edges().iter().filter(|e| e.2 == 1).count(), 2);

        let g = build_colored_hypercube(3, &Coloring::prefix(3, 1).unwrap()).unwrap();
        assert_eq!(g.edges().len(), 12);
        assert_eq!(g.edges().iter().filter(|e| e.2 == 1).count(), 4);
        assert_eq!(g.edges().iter().filter(|e| e.2 == 2).count(), 8);

        let g = build_colored_hypercube(7, &Coloring::prefix(7, 4).unwrap()).unwrap();
        assert_eq!(g.edges().len(), 448);
    }

    #[test]
    fn hypercube_range_checked() {
        let c = Coloring::prefix(21, 3).unwrap();
        assert_eq!(
            build_colored_hypercube(21, &c),
            Err(OracleError::DimensionOutOfRange(21))
        );
        let c = Coloring::prefix(4, 3).unwrap();
        assert!(build_colored_hypercube(5, &c).is_err());
    }

    #[test]
    fn same_color_path_graph_is_unreachable() {
        let g = ColoredGraph::from_edges(3, [(0, 1, 1), (1, 2, 1)]).unwrap();
        assert_eq!(oracle_proper_distance(&g, 0, 2).unwrap(), None);
        assert_eq!(oracle_proper_distance(&g, 0, 1).unwrap(), Some(1));
        assert_eq!(oracle_proper_distance(&g, 2, 2).unwrap(), Some(0));
        assert_eq!(
            oracle_count_shortest(&g, 0, 2, 10),
            Err(OracleError::Unreachable(0, 2))
        );
        assert!(oracle_count_shortest_walks(&g, 0, 2).is_err());
        assert!(matches!(
            oracle_proper_distance(&g, 0, 3),
            Err(OracleError::InvalidVertex { id: 3, .. })
        ));
    }

    #[test]
    fn three_colours_allowed() {
        // Triangle with a pendant: 0-1 (1), 1-2 (2), 0-2 (3), 2-3 (3).
        let g = ColoredGraph::from_edges(4, [(0, 1, 1), (1, 2, 2), (0, 2, 3), (2, 3, 3)]).unwrap();
        assert_eq!(oracle_proper_distance(&g, 0, 3).unwrap(), Some(3));
        assert_eq!(oracle_count_shortest(&g, 0, 3, 10).unwrap(), 1);
    }

    #[test]
    fn rejects_bad_edges() {
        assert_eq!(
            ColoredGraph::from_edges(2, [(1, 1, 1)]),
            Err(OracleError::SelfLoop(1))
        );
        assert!(matches!(
            ColoredGraph::from_edges(2, [(0, 1, 1), (1, 0, 1)]),
            Err(OracleError::DuplicateEdge(..))
        ));
        assert!(ColoredGraph::from_edges(2, [(0, 1, 1), (1, 0, 2)]).is_ok());
    }

    #[test]
    fn hypercube_spot_counts() {
        let c = Coloring::prefix(7, 4).unwrap();
        let g = build_colored_hypercube(7, &c).unwrap();
        let (u, v) = (id("0101000"), id("0011111"));
        assert_eq!(oracle_proper_distance(&g, u, v).unwrap(), Some(5));
        assert_eq!(oracle_count_shortest(&g, u, v, DEFAULT_BUDGET).unwrap(), 12);
        assert_eq!(oracle_count_shortest_walks(&g, u, v).unwrap(), 12);
        assert_eq!(
            oracle_count_shortest(&g, u, v, 11),
            Err(OracleError::BudgetExceeded(11))
        );

        let g4 = build_colored_hypercube(4, &Coloring::prefix(4, 2).unwrap()).unwrap();
        assert_eq!(
            oracle_count_shortest(&g4, id("1111"), id("0000"), 100).unwrap(),
            8
        );
        assert_eq!(
            oracle_count_shortest_walks(&g4, id("1100"), id("0000")).unwrap(),
            8
        );
        assert_eq!(
            oracle_count_shortest(&g4, id("0100"), id("0000"), 100).unwrap(),
            1
        );
        assert_eq!(
            oracle_count_shortest_walks(&g4, id("0100"), id("0000")).unwrap(),
            1
        );
    }

    #[test]
    fn single_source_walks_match_pairwise() {
        let g = build_colored_hypercube(4, &Coloring::from_class1(4, [2, 3]).unwrap()).unwrap();
        for u in 0..16 {
            let all = oracle_count_shortest_walks_from(&g, u).unwrap();
            for (v, w) in all.iter().enumerate() {
                assert_eq!(
                    w.as_ref(),
                    Some(&oracle_count_shortest_walks(&g, u, v).unwrap())
                );
            }
        }
    }

    #[test]
    fn edge_list_roundtrip() {
        let g = build_colored_hypercube(3, &Coloring::from_class1(3, [2]).unwrap()).unwrap();
        let text = g.to_edge_list();
        assert!(text.starts_with("8 12 2\n"));
        let back = ColoredGraph::from_edge_list(&text).unwrap();
        assert_eq!(back, g);
        assert_eq!(back.to_edge_list(), text);
    }

    #[test]
    fn edge_list_errors() {
        assert!(ColoredGraph::from_edge_list("").is_err());
        assert!(ColoredGraph::from_edge_list("3 1 1\n0 1\n").is_err());
        assert!(ColoredGraph::from_edge_list("3 2 1\n0 1 1\n").is_err());
        assert!(ColoredGraph::from_edge_list("3 1 2\n0 1 1\n").is_err());
        assert!(matches!(
            ColoredGraph::from_edge_list("3 1 1\n0 5 1\n"),
            Err(OracleError::InvalidVertex { id: 5, .. })
        ));
    }
}
