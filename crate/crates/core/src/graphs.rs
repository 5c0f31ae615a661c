//! Chordal and strongly chordal graphs, and their clique complexes.

use std::fmt;

use crate::complex::{Face, SimplicialComplex, Vertex};
use crate::error::{Error, Result};

/// Vertex cap for [`is_strongly_chordal`], which enumerates cycles.
pub const MAX_CYCLE_VERTICES: usize = 12;
/// Vertex cap for [`clique_complex`].
pub const MAX_CLIQUE_VERTICES: usize = 25;

/// Simple undirected graph on vertices `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u == v {
                return Err(Error::InvalidGraph(format!("self-loop at {u}")));
            }
            if u == 0 || v == 0 || u > n || v > n {
                return Err(Error::InvalidGraph(format!("edge {u} {v} outside 1..={n}")));
            }
            if adj[u - 1].contains(&(v - 1)) {
                return Err(Error::InvalidGraph(format!("duplicate edge {u} {v}")));
            }
            adj[u - 1].push(v - 1);
            adj[v - 1].push(u - 1);
        }
        adj.iter_mut().for_each(|a| a.sort_unstable());
        Ok(Graph { n, adj })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    /// Edges `(u, v)` with `u < v`, 1-based, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (u, nbrs) in self.adj.iter().enumerate() {
            out.extend(nbrs.iter().filter(|&&v| v > u).map(|&v| (u + 1, v + 1)));
        }
        out
    }

    /// Adjacency test on 1-based labels.
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u >= 1 && v >= 1 && u <= self.n && self.adj[u - 1].binary_search(&(v - 1)).is_ok()
    }

    fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }
}

impl fmt::Display for Graph {
    /// The graph text format.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "n {}", self.n)?;
        for (u, v) in self.edges() {
            writeln!(f, "{u} {v}")?;
        }
        Ok(())
    }
}

/// Parses `n <count>` followed by `u v` lines with `1 <= u < v <= n`.
pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut n = None;
    let mut edges = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let err = |message: String| Error::Parse { line: lineno + 1, message };
        let tokens: Vec<&str> = line.split_whitespace().collect();
        match (n, tokens.as_slice()) {
            (None, ["n", count]) => {
                n = Some(count.parse::<usize>().map_err(|_| err(format!("bad vertex count {count:?}")))?);
            }
            (None, _) => return Err(err("expected `n <count>` first".to_string())),
            (Some(count), [u, v]) => {
                let u: usize = u.parse().map_err(|_| err(format!("bad vertex {u:?}")))?;
                let v: usize = v.parse().map_err(|_| err(format!("bad vertex {v:?}")))?;
                if !(1 <= u && u < v && v <= count) {
                    return Err(err(format!("edge {u} {v} must satisfy 1 <= u < v <= {count}")));
                }
                edges.push((u, v));
            }
            (Some(_), _) => return Err(err("expected an edge `u v`".to_string())),
        }
    }
    let n = n.ok_or(Error::EmptyInput("graph file has no `n <count>` line"))?;
    Graph::new(n, &edges)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChordalityReport {
    pub is_chordal: bool,
    /// Perfect elimination ordering (1-based) when chordal.
    pub elimination_order: Option<Vec<usize>>,
    /// Chordless cycle of length at least 4 (1-based) when not chordal.
    pub chordless_cycle: Option<Vec<usize>>,
}

/// Maximum cardinality search; returns vertices in visiting order (0-based).
fn maximum_cardinality_search(g: &Graph) -> Vec<usize> {
    let mut weight = vec![0usize; g.n];
    let mut visited = vec![false; g.n];
    let mut order = Vec::with_capacity(g.n);
    for _ in 0..g.n {
        let v = (0..g.n)
            .filter(|&v| !visited[v])
            .max_by(|&a, &b| weight[a].cmp(&weight[b]).then(b.cmp(&a)))
            .expect("unvisited vertex remains");
        visited[v] = true;
        order.push(v);
        for &w in &g.adj[v] {
            if !visited[w] {
                weight[w] += 1;
            }
        }
    }
    order
}

/// For each vertex, its neighbours later in `peo` must form a clique with the earliest of them.
fn is_perfect_elimination(g: &Graph, peo: &[usize]) -> bool {
    let mut pos = vec![0; g.n];
    for (i, &v) in peo.iter().enumerate() {
        pos[v] = i;
    }
    peo.iter().all(|&v| {
        let later: Vec<usize> = g.adj[v].iter().copied().filter(|&w| pos[w] > pos[v]).collect();
        match later.iter().min_by_key(|&&w| pos[w]) {
            None => true,
            Some(&u) => later.iter().all(|&w| w == u || g.adjacent(u, w)),
        }
    })
}

/// Some chordless cycle of length at least 4, if the graph has one.
///
/// For each induced path `a - mid - c`, a shortest `a`–`c` path avoiding the other
/// neighbours of `mid` closes a chordless cycle through `mid`.
fn find_chordless_cycle(g: &Graph) -> Option<Vec<usize>> {
    for mid in 0..g.n {
        for (i, &a) in g.adj[mid].iter().enumerate() {
            for &c in &g.adj[mid][i + 1..] {
                if g.adjacent(a, c) {
                    continue;
                }
                let blocked: Vec<bool> =
                    (0..g.n).map(|v| v == mid || (g.adjacent(mid, v) && v != a && v != c)).collect();
                if let Some(path) = shortest_path(g, a, c, &blocked) {
                    let mut cycle = vec![mid];
                    cycle.extend(path);
                    return Some(cycle);
                }
            }
        }
    }
    None
}

fn shortest_path(g: &Graph, from: usize, to: usize, blocked: &[bool]) -> Option<Vec<usize>> {
    let mut prev = vec![usize::MAX; g.n];
    let mut queue = std::collections::VecDeque::from([from]);
    prev[from] = from;
    while let Some(v) = queue.pop_front() {
        if v == to {
            let mut path = vec![to];
            let mut cur = to;
            while cur != from {
                cur = prev[cur];
                path.push(cur);
            }
            path.reverse();
            return Some(path);
        }
        for &w in &g.adj[v] {
            if !blocked[w] && prev[w] == usize::MAX {
                prev[w] = v;
                queue.push_back(w);
            }
        }
    }
    None
}

pub fn is_chordal(g: &Graph) -> ChordalityReport {
    let mut peo = maximum_cardinality_search(g);
    peo.reverse();
    if is_perfect_elimination(g, &peo) {
        return ChordalityReport {
            is_chordal: true,
            elimination_order: Some(peo.iter().map(|v| v + 1).collect()),
            chordless_cycle: None,
        };
    }
    let cycle = find_chordless_cycle(g).expect("graph without a perfect elimination ordering has a chordless cycle");
    ChordalityReport {
        is_chordal: false,
        elimination_order: None,
        chordless_cycle: Some(cycle.iter().map(|v| v + 1).collect()),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StrongChordalityReport {
    pub is_strongly_chordal: bool,
    /// A chordless cycle when the graph is not chordal; otherwise the lexicographically least
    /// even cycle of length at least 6 with no odd chord.
    pub violating_cycle: Option<Vec<usize>>,
}

/// Distance between two positions along a cycle of the given length, the shorter way round.
pub fn cycle_distance(len: usize, i: usize, j: usize) -> usize {
    let d = i.abs_diff(j);
    d.min(len - d)
}

/// Whether some chord of `cycle` joins two vertices at odd distance greater than 1.
fn has_odd_chord(g: &Graph, cycle: &[usize]) -> bool {
    let len = cycle.len();
    (0..len).any(|i| {
        (i + 2..len).any(|j| {
            let dist = cycle_distance(len, i, j);
            dist > 1 && dist % 2 == 1 && g.adjacent(cycle[i], cycle[j])
        })
    })
}

/// Checks the definition directly: chordal, and every even cycle of length at least 6 has an odd
/// chord. Cycles are enumerated once each, starting at their least vertex and oriented so that
/// the second vertex is smaller than the last.
pub fn is_strongly_chordal(g: &Graph) -> Result<StrongChordalityReport> {
    if g.n > MAX_CYCLE_VERTICES {
        return Err(Error::ResourceLimit { what: "vertex count", got: g.n, limit: MAX_CYCLE_VERTICES });
    }
    let chordal = is_chordal(g);
    if !chordal.is_chordal {
        return Ok(StrongChordalityReport { is_strongly_chordal: false, violating_cycle: chordal.chordless_cycle });
    }
    let mut path = Vec::with_capacity(g.n);
    let mut on_path = vec![false; g.n];
    for start in 0..g.n {
        path.push(start);
        on_path[start] = true;
        let found = search_cycles(g, start, &mut path, &mut on_path);
        path.pop();
        on_path[start] = false;
        if let Some(cycle) = found {
            return Ok(StrongChordalityReport {
                is_strongly_chordal: false,
                violating_cycle: Some(cycle.iter().map(|v| v + 1).collect()),
            });
        }
    }
    Ok(StrongChordalityReport { is_strongly_chordal: true, violating_cycle: None })
}

fn search_cycles(g: &Graph, start: usize, path: &mut Vec<usize>, on_path: &mut [bool]) -> Option<Vec<usize>> {
    let last = *path.last().expect("path starts at `start`");
    for &w in &g.adj[last] {
        if w <= start || on_path[w] {
            continue;
        }
        path.push(w);
        on_path[w] = true;
        let len = path.len();
        if len >= 6 && len.is_multiple_of(2) && g.adjacent(w, start) && path[1] < w && !has_odd_chord(g, path) {
            return Some(path.clone());
        }
        let found = search_cycles(g, start, path, on_path);
        path.pop();
        on_path[w] = false;
        if found.is_some() {
            return found;
        }
    }
    None
}

/// Maximal cliques, by Bron–Kerbosch with pivoting over bitmasks.
pub fn maximal_cliques(g: &Graph) -> Result<Vec<Vec<usize>>> {
    if g.n > MAX_CLIQUE_VERTICES {
        return Err(Error::ResourceLimit { what: "vertex count", got: g.n, limit: MAX_CLIQUE_VERTICES });
    }
    let nbr: Vec<u32> = g.adj.iter().map(|a| a.iter().fold(0u32, |m, &v| m | (1 << v))).collect();
    let mut out = Vec::new();
    let all = if g.n == 0 { 0 } else { (1u32 << g.n) - 1 };
    bron_kerbosch(&nbr, 0, all, 0, &mut out);
    let mut cliques: Vec<Vec<usize>> =
        out.into_iter().map(|m| (0..g.n).filter(|v| m & (1 << v) != 0).map(|v| v + 1).collect()).collect();
    cliques.sort();
    Ok(cliques)
}

fn bron_kerbosch(nbr: &[u32], r: u32, mut p: u32, mut x: u32, out: &mut Vec<u32>) {
    if p == 0 {
        if x == 0 && r != 0 {
            out.push(r);
        }
        return;
    }
    let px = p | x;
    let pivot = (0..nbr.len())
        .filter(|&u| px & (1 << u) != 0)
        .max_by_key(|&u| (p & nbr[u]).count_ones())
        .expect("p is nonempty");
    let mut candidates = p & !nbr[pivot];
    while candidates != 0 {
        let v = candidates.trailing_zeros() as usize;
        candidates &= candidates - 1;
        bron_kerbosch(nbr, r | (1 << v), p & nbr[v], x & nbr[v], out);
        p &= !(1 << v);
        x |= 1 << v;
    }
}

/// The complex whose facets are the maximal cliques; isolated vertices become singletons.
pub fn clique_complex(g: &Graph) -> Result<SimplicialComplex> {
    let cliques = maximal_cliques(g)?;
    let faces =
        cliques.into_iter().map(|c| Face::new(c.into_iter().map(|v| v as Vertex))).collect::<Result<Vec<_>>>()?;
    SimplicialComplex::from_facets(faces)
}
