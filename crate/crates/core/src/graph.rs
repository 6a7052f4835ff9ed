//! Explicit graphs and the burning-number machinery that runs on them.
//!
//! A burning schedule `x_0, ..., x_b` covers a graph when the balls
//! `Γ_{b-k}(x_k)` together contain every vertex. The burning number is the
//! shortest length of a covering schedule.

use std::collections::VecDeque;
use std::fmt;
use std::sync::atomic::{AtomicBool, AtomicUsize, Ordering};
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::bitset::VertexSet;
use crate::error::{Error, Result};

/// Undirected simple graph on vertices `0..vertex_count`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExplicitGraph {
    adjacency: Vec<Vec<usize>>,
}

impl ExplicitGraph {
    /// Builds a graph from an edge list. Duplicate edges are merged; self-loops
    /// and out-of-range endpoints are rejected.
    pub fn from_edges(vertex_count: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut adjacency = vec![Vec::new(); vertex_count];
        for &(u, v) in edges {
            if u >= vertex_count || v >= vertex_count {
                return Err(Error::Input(format!(
                    "edge ({u}, {v}) has an endpoint outside 0..{vertex_count}"
                )));
            }
            if u == v {
                return Err(Error::Input(format!("self-loop at vertex {u}")));
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for list in adjacency.iter_mut() {
            list.sort_unstable();
            list.dedup();
        }
        Ok(Self { adjacency })
    }

    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        Self::from_edges(n, &edges).expect("path edges are valid")
    }

    pub fn cycle(n: usize) -> Self {
        let mut edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        if n >= 3 {
            edges.push((n - 1, 0));
        }
        Self::from_edges(n, &edges).expect("cycle edges are valid")
    }

    pub fn complete(n: usize) -> Self {
        let edges: Vec<_> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        Self::from_edges(n, &edges).expect("complete graph edges are valid")
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
            .collect()
    }

    /// Returns a copy with the extra edge `{u, v}`.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Self> {
        let mut edges = self.edges();
        edges.push((u, v));
        Self::from_edges(self.vertex_count(), &edges)
    }

    pub fn is_connected(&self) -> bool {
        let n = self.vertex_count();
        if n == 0 {
            return true;
        }
        bfs_distances(self, 0, None)
            .iter()
            .all(|&d| d != UNREACHABLE)
    }

    /// Parses the edge-list text format: a header line `n m`, then `m` lines
    /// `u v`. Blank lines and `#` comments are ignored.
    pub fn parse_edge_list(text: &str) -> Result<Self> {
        let mut header: Option<(usize, usize)> = None;
        let mut edges = Vec::new();
        for (index, raw) in text.lines().enumerate() {
            let line_no = index + 1;
            let content = raw.split('#').next().unwrap_or("");
            if content.trim().is_empty() {
                continue;
            }
            let fields = tokens_with_columns(content);
            if fields.len() != 2 {
                let column = fields.get(2).map_or(1, |t| t.0);
                return Err(Error::Parse {
                    line: line_no,
                    column,
                    message: format!("expected two integers, found {} fields", fields.len()),
                });
            }
            let mut values = [0usize; 2];
            for (slot, (column, token)) in values.iter_mut().zip(&fields) {
                *slot = token.parse().map_err(|_| Error::Parse {
                    line: line_no,
                    column: *column,
                    message: format!("`{token}` is not a nonnegative integer"),
                })?;
            }
            match header {
                None => header = Some((values[0], values[1])),
                Some((n, _)) => {
                    let [u, v] = values;
                    if u >= n || v >= n {
                        return Err(Error::Parse {
                            line: line_no,
                            column: fields[if u >= n { 0 } else { 1 }].0,
                            message: format!("endpoint out of range 0..{n}"),
                        });
                    }
                    if u == v {
                        return Err(Error::Parse {
                            line: line_no,
                            column: fields[0].0,
                            message: format!("self-loop at vertex {u}"),
                        });
                    }
                    edges.push((u, v));
                }
            }
        }
        let (n, m) = header.ok_or(Error::Parse {
            line: 1,
            column: 1,
            message: "missing `n m` header".into(),
        })?;
        if edges.len() != m {
            return Err(Error::Parse {
                line: text.lines().count().max(1),
                column: 1,
                message: format!("header declares {m} edges but {} were listed", edges.len()),
            });
        }
        Self::from_edges(n, &edges)
    }

    /// Writes the graph in the edge-list format read by [`Self::parse_edge_list`].
    pub fn to_edge_list(&self) -> String {
        let edges = self.edges();
        let mut out = format!("{} {}\n", self.vertex_count(), edges.len());
        for (u, v) in edges {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }
}

fn tokens_with_columns(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in line.char_indices() {
        match (ch.is_whitespace(), start) {
            (false, None) => start = Some(i),
            (true, Some(s)) => {
                out.push((s + 1, &line[s..i]));
                start = None;
            }
            _ => {}
        }
    }
    if let Some(s) = start {
        out.push((s + 1, &line[s..]));
    }
    out
}

pub const UNREACHABLE: u32 = u32::MAX;

fn bfs_distances(g: &ExplicitGraph, source: usize, max_depth: Option<u32>) -> Vec<u32> {
    let mut dist = vec![UNREACHABLE; g.vertex_count()];
    let mut queue = VecDeque::new();
    dist[source] = 0;
    queue.push_back(source);
    while let Some(u) = queue.pop_front() {
        let d = dist[u];
        if max_depth.is_some_and(|m| d >= m) {
            continue;
        }
        for &v in g.neighbors(u) {
            if dist[v] == UNREACHABLE {
                dist[v] = d + 1;
                queue.push_back(v);
            }
        }
    }
    dist
}

/// Shortest-path distances between all vertex pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    dist: Vec<u32>,
}

impl DistanceMatrix {
    /// Distance from `u` to `v`, or [`UNREACHABLE`].
    pub fn get(&self, u: usize, v: usize) -> u32 {
        self.dist[u * self.n + v]
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn row(&self, u: usize) -> &[u32] {
        &self.dist[u * self.n..(u + 1) * self.n]
    }

    /// Largest finite distance from `u`.
    pub fn eccentricity(&self, u: usize) -> u32 {
        self.row(u)
            .iter()
            .copied()
            .filter(|&d| d != UNREACHABLE)
            .max()
            .unwrap_or(0)
    }
}

/// Breadth-first search from every vertex.
pub fn all_pairs_distances(g: &ExplicitGraph) -> DistanceMatrix {
    let n = g.vertex_count();
    let dist = (0..n).flat_map(|u| bfs_distances(g, u, None)).collect();
    DistanceMatrix { n, dist }
}

/// `Γ_k(x)`: every vertex within distance `k` of `x`.
pub fn ball(g: &ExplicitGraph, x: usize, k: u32) -> Result<VertexSet> {
    check_vertex(g, x)?;
    let mut set = VertexSet::new(g.vertex_count());
    for (v, d) in bfs_distances(g, x, Some(k)).into_iter().enumerate() {
        if d <= k {
            set.insert(v);
        }
    }
    Ok(set)
}

fn check_vertex(g: &ExplicitGraph, v: usize) -> Result<()> {
    if v < g.vertex_count() {
        Ok(())
    } else {
        Err(Error::Input(format!(
            "vertex {v} is outside 0..{}",
            g.vertex_count()
        )))
    }
}

/// Ordered sources `x_0, ..., x_b`; source `x_k` burns with radius `b - k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct BurningSchedule {
    sources: Vec<usize>,
}

impl BurningSchedule {
    pub fn new(sources: Vec<usize>) -> Result<Self> {
        if sources.is_empty() {
            return Err(Error::Input(
                "a burning schedule needs at least one source".into(),
            ));
        }
        Ok(Self { sources })
    }

    pub fn sources(&self) -> &[usize] {
        &self.sources
    }

    pub fn len(&self) -> usize {
        self.sources.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sources.is_empty()
    }

    /// `(source, radius)` pairs in schedule order.
    pub fn with_radii(&self) -> impl Iterator<Item = (usize, u32)> + '_ {
        let b = self.sources.len() - 1;
        self.sources
            .iter()
            .enumerate()
            .map(move |(k, &x)| (x, (b - k) as u32))
    }
}

impl fmt::Display for BurningSchedule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.sources.iter().map(|v| v.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// Outcome of [`verify_schedule`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coverage {
    pub burned: VertexSet,
}

impl Coverage {
    pub fn covers(&self) -> bool {
        self.burned.is_full()
    }

    pub fn uncovered(&self) -> Vec<usize> {
        self.burned.missing()
    }

    pub fn uncovered_count(&self) -> usize {
        self.burned.capacity() - self.burned.count()
    }
}

/// Unions the balls of a schedule.
pub fn verify_schedule(g: &ExplicitGraph, s: &BurningSchedule) -> Result<Coverage> {
    for &x in s.sources() {
        check_vertex(g, x)?;
    }
    let mut burned = VertexSet::new(g.vertex_count());
    for (x, radius) in s.with_radii() {
        burned.union_with(&ball(g, x, radius)?);
    }
    Ok(Coverage { burned })
}

/// Balls `Γ_r(v)` for every vertex and every radius `r < radii`.
struct BallTable {
    radii: usize,
    balls: Vec<VertexSet>,
    max_volume: Vec<usize>,
}

impl BallTable {
    fn new(dist: &DistanceMatrix, radii: usize) -> Self {
        let n = dist.vertex_count();
        let mut balls = Vec::with_capacity(n * radii);
        let mut max_volume = vec![0; radii];
        for v in 0..n {
            let row = dist.row(v);
            for (r, best) in max_volume.iter_mut().enumerate() {
                let mut set = VertexSet::new(n);
                for (u, &d) in row.iter().enumerate() {
                    if d <= r as u32 {
                        set.insert(u);
                    }
                }
                *best = (*best).max(set.count());
                balls.push(set);
            }
        }
        Self {
            radii,
            balls,
            max_volume,
        }
    }

    fn get(&self, v: usize, r: usize) -> &VertexSet {
        &self.balls[v * self.radii + r]
    }
}

fn greedy_with_table(n: usize, table: &BallTable, length: usize) -> (BurningSchedule, VertexSet) {
    let mut burned = VertexSet::new(n);
    let mut used = vec![false; n];
    let mut sources = Vec::with_capacity(length);
    for k in 0..length {
        let radius = length - 1 - k;
        let r = radius.min(table.radii - 1);
        let mut best: Option<(usize, bool, usize)> = None;
        for (v, &was_used) in used.iter().enumerate() {
            let key = (burned.gain(table.get(v, r)), !was_used);
            if best.is_none_or(|(g, u, _)| key > (g, u)) {
                best = Some((key.0, key.1, v));
            }
        }
        let v = best.map_or(0, |b| b.2);
        used[v] = true;
        burned.union_with(table.get(v, r));
        sources.push(v);
    }
    (BurningSchedule { sources }, burned)
}

fn diameter(dist: &DistanceMatrix) -> usize {
    (0..dist.vertex_count())
        .map(|v| dist.eccentricity(v) as usize)
        .max()
        .unwrap_or(0)
}

/// Greedy schedule of exactly `length` sources. Each source maximizes the
/// number of newly burned vertices for its radius; ties go to a vertex not
/// yet used, then to the smallest id. The result need not cover the graph.
pub fn greedy_schedule(g: &ExplicitGraph, length: usize) -> Result<BurningSchedule> {
    if length == 0 {
        return Err(Error::Input("schedule length must be at least 1".into()));
    }
    if g.vertex_count() == 0 {
        return Err(Error::Input("graph has no vertices".into()));
    }
    let dist = all_pairs_distances(g);
    // Radii beyond the diameter all give the whole component.
    let radii = length.min(diameter(&dist) + 1);
    let table = BallTable::new(&dist, radii);
    Ok(greedy_with_table(g.vertex_count(), &table, length).0)
}

/// Knobs for [`exact_burning_number_with`].
#[derive(Clone, Debug)]
pub struct SolverConfig {
    /// Graphs up to this size are always solved to completion.
    pub guaranteed_vertices: usize,
    /// Larger graphs are refused outright.
    pub max_vertices: usize,
    /// Time budget for graphs between the two sizes above.
    pub budget: Duration,
    /// Explore first-source branches on the rayon pool.
    pub parallel: bool,
}

impl Default for SolverConfig {
    fn default() -> Self {
        Self {
            guaranteed_vertices: 64,
            max_vertices: 4096,
            budget: Duration::from_secs(60),
            parallel: true,
        }
    }
}

/// Result of the exact solver.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Burning {
    /// The burning number together with a covering schedule of that length.
    Exact {
        number: usize,
        witness: BurningSchedule,
    },
    /// No schedule of length at most `limit` covers the graph.
    ExceedsLimit { limit: usize },
}

impl Burning {
    pub fn number(&self) -> Option<usize> {
        match self {
            Burning::Exact { number, .. } => Some(*number),
            Burning::ExceedsLimit { .. } => None,
        }
    }
}

/// Exact burning number with the default [`SolverConfig`].
pub fn exact_burning_number(g: &ExplicitGraph, limit: Option<usize>) -> Result<Burning> {
    exact_burning_number_with(g, limit, &SolverConfig::default())
}

struct Search<'a> {
    n: usize,
    table: &'a BallTable,
    deadline: Option<Instant>,
    aborted: &'a AtomicBool,
    nodes: AtomicUsize,
}

impl Search<'_> {
    fn out_of_time(&self) -> bool {
        if self.aborted.load(Ordering::Relaxed) {
            return true;
        }
        let Some(deadline) = self.deadline else {
            return false;
        };
        if self
            .nodes
            .fetch_add(1, Ordering::Relaxed)
            .is_multiple_of(1024)
            && Instant::now() > deadline
        {
            self.aborted.store(true, Ordering::Relaxed);
            return true;
        }
        false
    }

    /// Upper bound on what positions `pos..length` can still burn.
    fn reach(&self, pos: usize, length: usize) -> usize {
        (pos..length)
            .map(|p| self.table.max_volume[(length - 1 - p).min(self.table.radii - 1)])
            .sum()
    }

    /// Depth-first search over sources in increasing id order. Sources that
    /// burn nothing new are skipped: any covering schedule using one stays
    /// covering when that source is swapped for an unburned vertex.
    fn extend(
        &self,
        pos: usize,
        length: usize,
        burned: &VertexSet,
        sources: &mut Vec<usize>,
    ) -> Option<Vec<usize>> {
        if burned.is_full() {
            let mut done = sources.clone();
            done.resize(length, 0);
            return Some(done);
        }
        if pos == length || self.out_of_time() {
            return None;
        }
        if self.n - burned.count() > self.reach(pos, length) {
            return None;
        }
        let r = (length - 1 - pos).min(self.table.radii - 1);
        for v in 0..self.n {
            let ball = self.table.get(v, r);
            if burned.gain(ball) == 0 {
                continue;
            }
            let mut next = burned.clone();
            next.union_with(ball);
            sources.push(v);
            let found = self.extend(pos + 1, length, &next, sources);
            sources.pop();
            if found.is_some() {
                return found;
            }
        }
        None
    }

    fn first_covering(&self, length: usize, parallel: bool) -> Option<Vec<usize>> {
        let empty = VertexSet::new(self.n);
        if self.n > self.reach(0, length) {
            return None;
        }
        let r = (length - 1).min(self.table.radii - 1);
        let branch = |v: usize| {
            let mut burned = empty.clone();
            burned.union_with(self.table.get(v, r));
            let mut sources = vec![v];
            self.extend(1, length, &burned, &mut sources)
        };
        if parallel {
            (0..self.n).into_par_iter().find_map_first(branch)
        } else {
            (0..self.n).find_map(branch)
        }
    }
}

/// Exact burning number by iterative deepening on the schedule length.
///
/// Each candidate length is decided by a depth-first search over source
/// choices, pruned whenever the unburned vertices outnumber the largest
/// balls the remaining positions could add. The greedy schedule supplies the
/// initial incumbent. The returned witness is the same whether or not the
/// search runs in parallel.
pub fn exact_burning_number_with(
    g: &ExplicitGraph,
    limit: Option<usize>,
    config: &SolverConfig,
) -> Result<Burning> {
    let n = g.vertex_count();
    if n == 0 {
        return Err(Error::Input("graph has no vertices".into()));
    }
    if limit == Some(0) {
        return Err(Error::Input("limit must be positive".into()));
    }
    if n > config.max_vertices {
        return Err(Error::Resource(format!(
            "graph has {n} vertices; the exact solver accepts at most {}",
            config.max_vertices
        )));
    }
    if !g.is_connected() {
        return Err(Error::Input("graph is disconnected".into()));
    }
    let dist = all_pairs_distances(g);
    let diam = diameter(&dist);
    let table = BallTable::new(&dist, diam + 1);

    // One ball of radius diam covers everything, so diam + 1 always works.
    let (incumbent, witness) = (1..=diam + 1)
        .find_map(|len| {
            let (s, burned) = greedy_with_table(n, &table, len);
            burned.is_full().then_some((len, s))
        })
        .expect("a single central ball of radius diam covers the graph");

    let aborted = AtomicBool::new(false);
    let search = Search {
        n,
        table: &table,
        deadline: (n > config.guaranteed_vertices).then(|| Instant::now() + config.budget),
        aborted: &aborted,
        nodes: AtomicUsize::new(0),
    };
    let ceiling = limit.map_or(incumbent - 1, |l| l.min(incumbent - 1));
    for length in 1..=ceiling {
        if let Some(sources) = search.first_covering(length, config.parallel) {
            return Ok(Burning::Exact {
                number: length,
                witness: BurningSchedule { sources },
            });
        }
        if aborted.load(Ordering::Relaxed) {
            return Err(Error::Budget(config.budget));
        }
    }
    match limit {
        Some(l) if l < incumbent => Ok(Burning::ExceedsLimit { limit: l }),
        _ => Ok(Burning::Exact {
            number: incumbent,
            witness,
        }),
    }
}
