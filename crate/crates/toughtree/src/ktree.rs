//! Exact decision and certification of spanning trees with bounded maximum
//! degree (equivalently, connected [1,k]-factors).
//!
//! The search runs three stages. A degree-aware greedy spanning tree plus
//! local edge swaps usually finds a certificate outright on dense inputs.
//! For cap 2 on small orders, a Hamilton-path subset DP over vertex bitmasks
//! decides exactly. Everything else falls to a deterministic branch-and-bound
//! over tree edges whose "absent" answers are exact: while isolated vertices
//! remain it branches on the one with the fewest allowed edges (partitioning
//! by that vertex's first usable tree neighbor), then on the allowed
//! crossing edges of the component with the fewest of them, and prunes on
//! reachability under the remaining allowed edges, on the available degree
//! budget, and on components whose crossing edges all funnel into a single
//! vertex.

use crate::graph::Graph;
use crate::invariants::is_connected;
use std::time::{Duration, Instant};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum KTreeError {
    #[error("spanning-tree search needs a connected graph")]
    Disconnected,
    #[error("degree cap {0} too small; spanning trees need cap >= 2")]
    DegreeCapTooSmall(usize),
}

/// A spanning tree of the host graph in which every vertex has degree at
/// most `degree_cap`. Edges are normalized `(u, v)` with `u < v`, sorted.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct KTreeCertificate {
    pub degree_cap: usize,
    pub edges: Vec<(usize, usize)>,
}

impl KTreeCertificate {
    fn new(degree_cap: usize, mut edges: Vec<(usize, usize)>) -> Self {
        for e in edges.iter_mut() {
            if e.0 > e.1 {
                *e = (e.1, e.0);
            }
        }
        edges.sort_unstable();
        KTreeCertificate { degree_cap, edges }
    }

    /// Serializes the certificate in the edge-list text format.
    pub fn to_edge_list_text(&self, order: usize) -> String {
        let mut out = format!("{} {}\n", order, self.edges.len());
        for (u, v) in &self.edges {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }
}

/// Checks every certificate invariant against the host graph: the edges
/// exist in `g`, form a spanning tree, and respect the degree cap.
pub fn validate_ktree(g: &Graph, cap: usize, cert: &KTreeCertificate) -> bool {
    let n = g.order();
    if cert.edges.len() != n - 1 {
        return false;
    }
    let mut deg = vec![0usize; n];
    let mut uf = UnionFind::new(n);
    for &(u, v) in &cert.edges {
        if u >= n || v >= n || u == v || !g.has_edge(u, v) {
            return false;
        }
        deg[u] += 1;
        deg[v] += 1;
        if deg[u] > cap || deg[v] > cap {
            return false;
        }
        if !uf.union(u, v) {
            return false; // cycle
        }
    }
    uf.components == 1
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum KTreeAnswer {
    Found(KTreeCertificate),
    /// No spanning tree with the requested cap exists (exact).
    Absent,
    /// The search hit its deadline; the question is unresolved.
    Unknown,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SearchRoute {
    Heuristic,
    HamiltonPathDp,
    BranchAndBound,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KTreeReport {
    pub answer: KTreeAnswer,
    pub route: SearchRoute,
    /// Branch-and-bound nodes (or DP masks) visited.
    pub nodes: u64,
    /// FNV-1a hash of the search transcript; identical runs hash identically.
    pub transcript_hash: u64,
}

#[derive(Debug, Clone, Copy, Default)]
pub struct SearchOptions {
    /// Wall-clock budget; `None` means unlimited. On expiry the answer is
    /// `Unknown`, never guessed.
    pub timeout: Option<Duration>,
}

/// Convenience entry point without a deadline: `Some` certificate iff one
/// exists.
pub fn find_spanning_ktree(g: &Graph, cap: usize) -> Result<Option<KTreeCertificate>, KTreeError> {
    let report = search_spanning_ktree(g, cap, &SearchOptions::default())?;
    Ok(match report.answer {
        KTreeAnswer::Found(cert) => Some(cert),
        KTreeAnswer::Absent => None,
        KTreeAnswer::Unknown => unreachable!("no deadline was set"),
    })
}

const HAMILTON_DP_MAX_ORDER: usize = 20;

pub fn search_spanning_ktree(
    g: &Graph,
    cap: usize,
    opts: &SearchOptions,
) -> Result<KTreeReport, KTreeError> {
    if cap < 2 {
        return Err(KTreeError::DegreeCapTooSmall(cap));
    }
    if !is_connected(g) {
        return Err(KTreeError::Disconnected);
    }
    let n = g.order();
    let mut hash = Fnv::new();
    hash.write(&[1, n as u64, cap as u64]);
    if n == 1 {
        hash.write(&[2]);
        return Ok(KTreeReport {
            answer: KTreeAnswer::Found(KTreeCertificate::new(cap, Vec::new())),
            route: SearchRoute::Heuristic,
            nodes: 0,
            transcript_hash: hash.finish(),
        });
    }
    let deadline = opts.timeout.map(|t| Instant::now() + t);

    if cap == 2 && n <= HAMILTON_DP_MAX_ORDER {
        return Ok(hamilton_path_dp(g, deadline, hash));
    }

    if cap > 2 {
        if let Some(edges) = greedy_low_degree_tree(g, cap) {
            hash.write(&[3]);
            for &(u, v) in &edges {
                hash.write(&[u as u64, v as u64]);
            }
            let cert = KTreeCertificate::new(cap, edges);
            debug_assert!(validate_ktree(g, cap, &cert));
            return Ok(KTreeReport {
                answer: KTreeAnswer::Found(cert),
                route: SearchRoute::Heuristic,
                nodes: 0,
                transcript_hash: hash.finish(),
            });
        }
    }

    let mut bb = BranchAndBound::new(g, cap, deadline, hash);
    let answer = bb.run();
    Ok(KTreeReport {
        answer,
        route: SearchRoute::BranchAndBound,
        nodes: bb.nodes,
        transcript_hash: bb.hash.finish(),
    })
}

// --- heuristic pre-pass -----------------------------------------------------

/// Grows a spanning tree that attaches each new vertex to the host of lowest
/// tree degree, then applies degree-reducing edge swaps: adding a non-tree
/// edge (u, v) closes a cycle, and removing a cycle edge at a maximum-degree
/// vertex strictly lowers the sum of squared degrees whenever the degrees of
/// u and v are small enough. Returns the tree edges once the maximum degree
/// is within `cap`, otherwise `None` (the exact search takes over).
fn greedy_low_degree_tree(g: &Graph, cap: usize) -> Option<Vec<(usize, usize)>> {
    let n = g.order();
    let mut in_tree = vec![false; n];
    let mut deg = vec![0usize; n];
    let mut tree_adj = vec![Vec::<usize>::new(); n];
    in_tree[0] = true;
    let mut tree_size = 1;
    while tree_size < n {
        let mut best: Option<(usize, usize, usize)> = None; // (host_deg, host, new)
        for u in 0..n {
            if !in_tree[u] {
                continue;
            }
            for v in g.neighbors(u).iter() {
                if in_tree[v] {
                    continue;
                }
                let cand = (deg[u], u, v);
                if best.is_none_or(|b| cand < b) {
                    best = Some(cand);
                }
            }
        }
        let (_, u, v) = best.expect("graph is connected");
        in_tree[v] = true;
        deg[u] += 1;
        deg[v] += 1;
        tree_adj[u].push(v);
        tree_adj[v].push(u);
        tree_size += 1;
    }

    let swap_cap = 50 * n;
    for _ in 0..swap_cap {
        let max_deg = *deg.iter().max().unwrap();
        if max_deg <= cap {
            let mut edges = Vec::with_capacity(n - 1);
            for u in 0..n {
                for &v in &tree_adj[u] {
                    if u < v {
                        edges.push((u, v));
                    }
                }
            }
            return Some(edges);
        }
        let mut improved = false;
        'swap: for (u, v) in g.edges() {
            if tree_adj[u].contains(&v) {
                continue;
            }
            if deg[u] + 1 >= max_deg || deg[v] + 1 >= max_deg {
                continue;
            }
            // Walk the tree path between u and v looking for a max-degree vertex.
            let path = tree_path(&tree_adj, u, v);
            for w in 1..path.len() - 1 {
                if deg[path[w]] == max_deg {
                    let (a, b) = (path[w], path[w - 1]);
                    tree_adj[a].retain(|&x| x != b);
                    tree_adj[b].retain(|&x| x != a);
                    deg[a] -= 1;
                    deg[b] -= 1;
                    tree_adj[u].push(v);
                    tree_adj[v].push(u);
                    deg[u] += 1;
                    deg[v] += 1;
                    improved = true;
                    break 'swap;
                }
            }
        }
        if !improved {
            return None;
        }
    }
    None
}

/// Vertex sequence of the unique tree path from `u` to `v`.
fn tree_path(tree_adj: &[Vec<usize>], u: usize, v: usize) -> Vec<usize> {
    let n = tree_adj.len();
    let mut parent = vec![usize::MAX; n];
    parent[u] = u;
    let mut queue = std::collections::VecDeque::from([u]);
    while let Some(x) = queue.pop_front() {
        if x == v {
            break;
        }
        for &y in &tree_adj[x] {
            if parent[y] == usize::MAX {
                parent[y] = x;
                queue.push_back(y);
            }
        }
    }
    let mut path = vec![v];
    let mut x = v;
    while x != u {
        x = parent[x];
        path.push(x);
    }
    path.reverse();
    path
}

// --- Hamilton path DP -------------------------------------------------------

/// Subset DP: `reach[mask]` is the set of vertices `v` such that some path
/// covers exactly `mask` and ends at `v`.
fn hamilton_path_dp(g: &Graph, deadline: Option<Instant>, mut hash: Fnv) -> KTreeReport {
    let n = g.order();
    hash.write(&[4]);
    let adj: Vec<u32> = (0..n).map(|v| g.neighbors(v).word(0) as u32).collect();
    let full: u32 = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    let mut reach = vec![0u32; 1usize << n];
    for v in 0..n {
        reach[1usize << v] = 1 << v;
    }
    let mut nodes = 0u64;
    for mask in 1..=full {
        nodes += 1;
        if nodes % 65_536 == 0 && deadline.is_some_and(|d| Instant::now() > d) {
            hash.write(&[5]);
            return KTreeReport {
                answer: KTreeAnswer::Unknown,
                route: SearchRoute::HamiltonPathDp,
                nodes,
                transcript_hash: hash.finish(),
            };
        }
        let ends = reach[mask as usize];
        if ends == 0 {
            continue;
        }
        let mut bits = ends;
        while bits != 0 {
            let v = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            let mut ext = adj[v] & !mask;
            while ext != 0 {
                let u = ext.trailing_zeros() as usize;
                ext &= ext - 1;
                reach[(mask | 1 << u) as usize] |= 1 << u;
            }
        }
    }
    if reach[full as usize] == 0 {
        hash.write(&[6]);
        return KTreeReport {
            answer: KTreeAnswer::Absent,
            route: SearchRoute::HamiltonPathDp,
            nodes,
            transcript_hash: hash.finish(),
        };
    }
    // Reconstruct a path, lowest end vertex and lowest predecessor first.
    let mut path = Vec::with_capacity(n);
    let mut mask = full;
    let mut v = reach[full as usize].trailing_zeros() as usize;
    path.push(v);
    while mask.count_ones() > 1 {
        let prev_mask = mask & !(1 << v);
        let preds = reach[prev_mask as usize] & adj[v];
        let u = preds.trailing_zeros() as usize;
        path.push(u);
        mask = prev_mask;
        v = u;
    }
    let edges: Vec<(usize, usize)> = path.windows(2).map(|w| (w[0], w[1])).collect();
    hash.write(&[7]);
    for &(u, v) in &edges {
        hash.write(&[u as u64, v as u64]);
    }
    let cert = KTreeCertificate::new(2, edges);
    debug_assert!(validate_ktree(g, 2, &cert));
    KTreeReport {
        answer: KTreeAnswer::Found(cert),
        route: SearchRoute::HamiltonPathDp,
        nodes,
        transcript_hash: hash.finish(),
    }
}

// --- branch and bound -------------------------------------------------------

struct UnionFind {
    parent: Vec<u32>,
    size: Vec<u32>,
    components: usize,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n as u32).collect(),
            size: vec![1; n],
            components: n,
        }
    }

    /// Find without path compression so that unions can be rolled back.
    fn find(&self, mut v: u32) -> u32 {
        while self.parent[v as usize] != v {
            v = self.parent[v as usize];
        }
        v
    }

    /// Returns false if already joined. Records nothing; use `union_logged`
    /// when rollback is needed.
    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a as u32), self.find(b as u32));
        if ra == rb {
            return false;
        }
        let (child, parent) = if self.size[ra as usize] < self.size[rb as usize] {
            (ra, rb)
        } else {
            (rb, ra)
        };
        self.parent[child as usize] = parent;
        self.size[parent as usize] += self.size[child as usize];
        self.components -= 1;
        true
    }

    fn union_logged(&mut self, a: usize, b: usize) -> Option<(u32, u32)> {
        let (ra, rb) = (self.find(a as u32), self.find(b as u32));
        if ra == rb {
            return None;
        }
        let (child, parent) = if self.size[ra as usize] < self.size[rb as usize] {
            (ra, rb)
        } else {
            (rb, ra)
        };
        self.parent[child as usize] = parent;
        self.size[parent as usize] += self.size[child as usize];
        self.components -= 1;
        Some((child, parent))
    }

    fn undo(&mut self, log: (u32, u32)) {
        let (child, parent) = log;
        self.parent[child as usize] = child;
        self.size[parent as usize] -= self.size[child as usize];
        self.components += 1;
    }
}

enum Flow {
    Found,
    Exhausted,
    TimedOut,
}

struct BranchAndBound<'g> {
    g: &'g Graph,
    n: usize,
    cap: usize,
    edges: Vec<(usize, usize)>,
    /// Edge ids incident to each vertex, neighbors ascending.
    incident: Vec<Vec<usize>>,
    excluded: Vec<bool>,
    deg: Vec<usize>,
    uf: UnionFind,
    chosen: Vec<usize>,
    result: Option<Vec<(usize, usize)>>,
    nodes: u64,
    deadline: Option<Instant>,
    hash: Fnv,
}

impl<'g> BranchAndBound<'g> {
    fn new(g: &'g Graph, cap: usize, deadline: Option<Instant>, mut hash: Fnv) -> Self {
        let n = g.order();
        let edges: Vec<(usize, usize)> = g.edges().collect();
        let mut incident = vec![Vec::new(); n];
        for (id, &(u, v)) in edges.iter().enumerate() {
            incident[u].push(id);
            incident[v].push(id);
        }
        hash.write(&[8, edges.len() as u64]);
        BranchAndBound {
            g,
            n,
            cap,
            excluded: vec![false; edges.len()],
            edges,
            incident,
            deg: vec![0; n],
            uf: UnionFind::new(n),
            chosen: Vec::with_capacity(n - 1),
            result: None,
            nodes: 0,
            deadline,
            hash,
        }
    }

    fn run(&mut self) -> KTreeAnswer {
        match self.search() {
            Flow::Found => {
                let edges = self.result.take().expect("found implies a recorded tree");
                let cert = KTreeCertificate::new(self.cap, edges);
                debug_assert!(validate_ktree(self.g, self.cap, &cert));
                self.hash.write(&[9]);
                KTreeAnswer::Found(cert)
            }
            Flow::Exhausted => {
                self.hash.write(&[10]);
                KTreeAnswer::Absent
            }
            Flow::TimedOut => {
                self.hash.write(&[11]);
                KTreeAnswer::Unknown
            }
        }
    }

    fn edge_allowed(&self, id: usize) -> bool {
        if self.excluded[id] {
            return false;
        }
        let (u, v) = self.edges[id];
        self.deg[u] < self.cap
            && self.deg[v] < self.cap
            && self.uf.find(u as u32) != self.uf.find(v as u32)
    }

    /// Reachability, degree-budget and funnel prunes in one pass over the
    /// edges. The funnel prune: a component whose allowed crossing edges all
    /// land on one outside vertex must consume one of that vertex's budget
    /// slots, and distinct components need distinct slots.
    fn prune(&self) -> bool {
        let mut scratch = UnionFind::new(self.n);
        for v in 0..self.n {
            let r = self.uf.find(v as u32) as usize;
            scratch.union(v, r);
        }
        const NONE: usize = usize::MAX;
        const MANY: usize = usize::MAX - 1;
        let mut avail = vec![0usize; self.n];
        // Per component root: the unique outside endpoint of its crossing
        // edges, when there is one.
        let mut funnel = vec![NONE; self.n];
        let note = |root: usize, outside: usize, funnel: &mut Vec<usize>| {
            funnel[root] = match funnel[root] {
                NONE => outside,
                cur if cur == outside => cur,
                _ => MANY,
            };
        };
        for id in 0..self.edges.len() {
            if self.edge_allowed(id) {
                let (u, v) = self.edges[id];
                scratch.union(u, v);
                avail[u] += 1;
                avail[v] += 1;
                let (ru, rv) = (
                    self.uf.find(u as u32) as usize,
                    self.uf.find(v as u32) as usize,
                );
                note(ru, v, &mut funnel);
                note(rv, u, &mut funnel);
            }
        }
        if scratch.components > 1 {
            return true;
        }
        let needed = 2 * (self.n - 1 - self.chosen.len());
        let budget: usize = (0..self.n)
            .map(|v| (self.cap - self.deg[v]).min(avail[v]))
            .sum();
        if budget < needed {
            return true;
        }
        let mut funnel_load = vec![0usize; self.n];
        for v in 0..self.n {
            if self.uf.find(v as u32) as usize != v {
                continue; // component roots only
            }
            let target = funnel[v];
            if target != NONE && target != MANY {
                funnel_load[target] += 1;
                if funnel_load[target] > self.cap - self.deg[target] {
                    return true;
                }
            }
        }
        false
    }

    fn search(&mut self) -> Flow {
        self.nodes += 1;
        if self.deadline.is_some() && (self.nodes & 63 == 0 || self.nodes == 1) {
            if let Some(d) = self.deadline {
                if Instant::now() > d {
                    return Flow::TimedOut;
                }
            }
        }
        if self.chosen.len() == self.n - 1 {
            debug_assert_eq!(self.uf.components, 1);
            self.result = Some(self.chosen.iter().map(|&id| self.edges[id]).collect());
            return Flow::Found;
        }
        if self.prune() {
            return Flow::Exhausted;
        }

        // Branch vertex: the isolated vertex with the fewest allowed edges
        // (ties to the lowest label). Its branches partition spanning trees
        // by that vertex's first usable tree neighbor; the fail-first choice
        // attaches scarce vertices (e.g. independents that only reach hubs)
        // before their hosts' budgets are spent elsewhere. Once every vertex
        // is attached, branch on the allowed crossing edges of the component
        // with the fewest of them (ties to the component holding the lowest
        // vertex), partitioning by the first crossing edge the finished tree
        // uses.
        let mut isolated: Option<(usize, usize)> = None;
        for v in 0..self.n {
            if self.deg[v] == 0 {
                let count = self.incident[v]
                    .iter()
                    .filter(|&&id| self.edge_allowed(id))
                    .count();
                if isolated.is_none_or(|best| (count, v) < best) {
                    isolated = Some((count, v));
                }
            }
        }
        let candidates: Vec<usize> = if let Some((_, v)) = isolated {
            self.incident[v]
                .iter()
                .copied()
                .filter(|&id| self.edge_allowed(id))
                .collect()
        } else {
            let mut per_root: std::collections::BTreeMap<u32, (usize, usize)> =
                std::collections::BTreeMap::new();
            for v in 0..self.n {
                let r = self.uf.find(v as u32);
                let entry = per_root.entry(r).or_insert((0, v));
                entry.1 = entry.1.min(v);
            }
            for id in 0..self.edges.len() {
                if self.edge_allowed(id) {
                    let (u, v) = self.edges[id];
                    let (ru, rv) = (self.uf.find(u as u32), self.uf.find(v as u32));
                    per_root.get_mut(&ru).unwrap().0 += 1;
                    per_root.get_mut(&rv).unwrap().0 += 1;
                }
            }
            let (&root, _) = per_root
                .iter()
                .min_by_key(|(_, &(count, low))| (count, low))
                .expect("at least two components remain");
            (0..self.edges.len())
                .filter(|&id| {
                    if !self.edge_allowed(id) {
                        return false;
                    }
                    let (u, v) = self.edges[id];
                    (self.uf.find(u as u32) == root) != (self.uf.find(v as u32) == root)
                })
                .collect()
        };

        if candidates.is_empty() {
            return Flow::Exhausted;
        }
        let mut newly_excluded = Vec::new();
        let mut outcome = Flow::Exhausted;
        for &id in &candidates {
            if !self.edge_allowed(id) {
                continue;
            }
            let (u, v) = self.edges[id];
            self.hash.write(&[12, id as u64]);
            let log = self.uf.union_logged(u, v).expect("candidates cross components");
            self.deg[u] += 1;
            self.deg[v] += 1;
            self.chosen.push(id);
            let flow = self.search();
            match flow {
                Flow::Found => return Flow::Found,
                Flow::TimedOut => {
                    outcome = Flow::TimedOut;
                }
                Flow::Exhausted => {}
            }
            self.chosen.pop();
            self.deg[u] -= 1;
            self.deg[v] -= 1;
            self.uf.undo(log);
            if matches!(outcome, Flow::TimedOut) {
                return Flow::TimedOut;
            }
            self.excluded[id] = true;
            newly_excluded.push(id);
        }
        for id in newly_excluded {
            self.excluded[id] = false;
        }
        outcome
    }
}

// --- transcript hash ---------------------------------------------------------

/// FNV-1a over a stream of u64 events.
#[derive(Clone)]
struct Fnv(u64);

impl Fnv {
    fn new() -> Self {
        Fnv(0xcbf29ce484222325)
    }

    fn write(&mut self, words: &[u64]) {
        for w in words {
            for byte in w.to_le_bytes() {
                self.0 ^= byte as u64;
                self.0 = self.0.wrapping_mul(0x100000001b3);
            }
        }
    }

    fn finish(&self) -> u64 {
        self.0
    }
}
