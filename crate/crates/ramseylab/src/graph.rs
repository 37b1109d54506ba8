//! Simple undirected graphs over bit-vector adjacency rows, plus the
//! structural algorithms the rest of the crate leans on: degeneracy
//! peeling, components, exact cliques and chromatic number, subgraph
//! backtracking, and dense-host greedy embedding.

use std::fmt;

use thiserror::Error;

/// Default vertex cap for the exact maximum-clique search.
pub const DEFAULT_CLIQUE_LIMIT: usize = 64;
/// Default vertex cap for the exact chromatic-number search.
pub const DEFAULT_CHROMATIC_LIMIT: usize = 20;

#[derive(Debug, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("loop at vertex {0}")]
    Loop(usize),
}

#[derive(Debug, Error)]
#[error("graph on {n} vertices exceeds the search limit {limit}")]
pub struct LimitExceeded {
    pub n: usize,
    pub limit: usize,
}

#[derive(Debug, Error)]
pub enum GraphParseError {
    #[error("line 1 must be `GRAPH <n>`")]
    BadHeader,
    #[error("expected a line for vertex {0}")]
    MissingVertexLine(usize),
    #[error("line for vertex {expected} starts with `{found}:`")]
    WrongVertexIndex { expected: usize, found: String },
    #[error("vertex {vertex} line: bad neighbor token `{token}`")]
    BadNeighbor { vertex: usize, token: String },
    #[error("vertex {vertex} lists neighbor {neighbor} out of range (n = {n})")]
    NeighborOutOfRange {
        vertex: usize,
        neighbor: usize,
        n: usize,
    },
    #[error("vertex {vertex} lists neighbor {neighbor} \u{2264} {vertex}; rows carry only j > i")]
    NotForward { vertex: usize, neighbor: usize },
    #[error("vertex {vertex} neighbor list not strictly ascending at {neighbor}")]
    NotAscending { vertex: usize, neighbor: usize },
    #[error("trailing content after the last vertex line")]
    TrailingContent,
}

#[derive(Debug, Error)]
pub enum EmbedError {
    #[error("guest vertex {vertex} has {back_degree} earlier neighbors in the peel order; guest is not {d}-degenerate")]
    GuestNotDegenerate {
        vertex: usize,
        back_degree: usize,
        d: usize,
    },
    #[error("host vertex {vertex} has {non_neighbors} non-neighbors; the cap is (N-n)/d = {cap_num}/{cap_den}")]
    HostVertexTooSparse {
        vertex: usize,
        non_neighbors: usize,
        cap_num: usize,
        cap_den: usize,
    },
    #[error("host has {host} vertices, guest needs {guest}")]
    HostTooSmall { host: usize, guest: usize },
    #[error("guest has edges, so d = 0 is impossible")]
    ZeroDegenerateWithEdges,
    #[error("no host candidate for guest vertex {vertex}")]
    NoCandidate { vertex: usize },
}

/// Fixed-capacity set of vertex indices packed into 64-bit words.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    words: Vec<u64>,
    capacity: usize,
}

impl VertexSet {
    pub fn new(capacity: usize) -> Self {
        VertexSet {
            words: vec![0; capacity.div_ceil(64)],
            capacity,
        }
    }

    pub fn full(capacity: usize) -> Self {
        let mut s = VertexSet::new(capacity);
        for v in 0..capacity {
            s.insert(v);
        }
        s
    }

    pub fn capacity(&self) -> usize {
        self.capacity
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        debug_assert!(v < self.capacity);
        self.words[v >> 6] |= 1u64 << (v & 63);
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        debug_assert!(v < self.capacity);
        self.words[v >> 6] &= !(1u64 << (v & 63));
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        v < self.capacity && self.words[v >> 6] & (1u64 << (v & 63)) != 0
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Smallest member, if any.
    pub fn first(&self) -> Option<usize> {
        for (i, &w) in self.words.iter().enumerate() {
            if w != 0 {
                return Some(i * 64 + w.trailing_zeros() as usize);
            }
        }
        None
    }

    pub fn intersect(&self, other: &VertexSet) -> VertexSet {
        debug_assert_eq!(self.capacity, other.capacity);
        VertexSet {
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a & b)
                .collect(),
            capacity: self.capacity,
        }
    }

    pub fn intersect_count(&self, other: &VertexSet) -> usize {
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    pub fn intersect_in_place(&mut self, other: &VertexSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let b = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(i * 64 + b)
                }
            })
        })
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Simple undirected graph; vertices are `0..n`, adjacency is one bit row
/// per vertex.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, m={})", self.n, self.edge_count())
    }
}

/// Injective map from guest vertices to host vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Embedding {
    pub map: Vec<usize>,
}

impl Embedding {
    /// True when the map is injective and every guest edge lands on a host edge.
    pub fn is_valid(&self, guest: &Graph, host: &Graph) -> bool {
        if self.map.len() != guest.vertex_count() {
            return false;
        }
        let mut seen = VertexSet::new(host.vertex_count());
        for &h in &self.map {
            if h >= host.vertex_count() || seen.contains(h) {
                return false;
            }
            seen.insert(h);
        }
        for (u, v) in guest.edges() {
            if !host.has_edge(self.map[u], self.map[v]) {
                return false;
            }
        }
        true
    }
}

/// Vertex ordering in which every vertex has at most `degeneracy` earlier
/// neighbors; produced by reversing a minimum-degree peel.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegeneracyOrder {
    pub order: Vec<usize>,
    pub degeneracy: usize,
}

impl Graph {
    pub fn new(n: usize) -> Self {
        Graph {
            n,
            adj: (0..n).map(|_| VertexSet::new(n)).collect(),
        }
    }

    pub fn with_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v).unwrap();
            }
        }
        g
    }

    pub fn path(n: usize) -> Self {
        let mut g = Graph::new(n);
        for v in 1..n {
            g.add_edge(v - 1, v).unwrap();
        }
        g
    }

    pub fn cycle(n: usize) -> Self {
        let mut g = Graph::path(n);
        if n >= 3 {
            g.add_edge(n - 1, 0).unwrap();
        }
        g
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        if u >= self.n {
            return Err(GraphError::VertexOutOfRange { vertex: u, n: self.n });
        }
        if v >= self.n {
            return Err(GraphError::VertexOutOfRange { vertex: v, n: self.n });
        }
        if u == v {
            return Err(GraphError::Loop(u));
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(())
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|row| row.len()).sum::<usize>() / 2
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].contains(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| self.adj[u].iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn is_edgeless(&self) -> bool {
        self.adj.iter().all(|row| row.is_empty())
    }

    /// Subgraph induced on `verts` (ascending), relabeled by position.
    pub fn induced(&self, verts: &[usize]) -> Graph {
        let mut g = Graph::new(verts.len());
        for (i, &u) in verts.iter().enumerate() {
            for (j, &v) in verts.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j).unwrap();
                }
            }
        }
        g
    }

    /// Graph with vertex `v` removed; vertices above `v` shift down by one.
    pub fn delete_vertex(&self, v: usize) -> Graph {
        let keep: Vec<usize> = (0..self.n).filter(|&u| u != v).collect();
        self.induced(&keep)
    }

    /// Minimum-degree peel; ties go to the lowest vertex index. The returned
    /// order is the reversed peel sequence, so back-degrees are bounded by
    /// the graph's degeneracy.
    pub fn degeneracy_order(&self) -> DegeneracyOrder {
        let n = self.n;
        let mut deg: Vec<usize> = (0..n).map(|v| self.degree(v)).collect();
        let mut removed = vec![false; n];
        let mut peel = Vec::with_capacity(n);
        let mut degeneracy = 0;
        for _ in 0..n {
            let v = (0..n)
                .filter(|&v| !removed[v])
                .min_by_key(|&v| (deg[v], v))
                .unwrap();
            degeneracy = degeneracy.max(deg[v]);
            removed[v] = true;
            peel.push(v);
            for u in self.adj[v].iter() {
                if !removed[u] {
                    deg[u] -= 1;
                }
            }
        }
        peel.reverse();
        DegeneracyOrder {
            order: peel,
            degeneracy,
        }
    }

    pub fn degeneracy(&self) -> usize {
        self.degeneracy_order().degeneracy
    }

    /// Maximal connected vertex sets, each ascending, listed by smallest member.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut comps = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            let mut comp = Vec::new();
            let mut stack = vec![start];
            seen[start] = true;
            while let Some(v) = stack.pop() {
                comp.push(v);
                for u in self.adj[v].iter() {
                    if !seen[u] {
                        seen[u] = true;
                        stack.push(u);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    /// Exact maximum clique by branch and bound over bit rows.
    pub fn max_clique(&self, limit: usize) -> Result<Vec<usize>, LimitExceeded> {
        if self.n > limit {
            return Err(LimitExceeded { n: self.n, limit });
        }
        let mut best = Vec::new();
        let mut current = Vec::new();
        self.clique_expand(&mut current, VertexSet::full(self.n), &mut best);
        Ok(best)
    }

    fn clique_expand(&self, current: &mut Vec<usize>, mut cand: VertexSet, best: &mut Vec<usize>) {
        if current.len() + cand.len() <= best.len() {
            return;
        }
        if cand.is_empty() {
            *best = current.clone();
            return;
        }
        while let Some(v) = cand.first() {
            if current.len() + cand.len() <= best.len() {
                return;
            }
            cand.remove(v);
            current.push(v);
            self.clique_expand(current, cand.intersect(&self.adj[v]), best);
            current.pop();
        }
    }

    /// Exact chromatic number: clique lower bound, greedy upper bound, and a
    /// k-colorability backtracker between them. Zero vertices give 0.
    pub fn chromatic_number(&self, limit: usize) -> Result<usize, LimitExceeded> {
        if self.n > limit {
            return Err(LimitExceeded { n: self.n, limit });
        }
        if self.n == 0 {
            return Ok(0);
        }
        if self.is_edgeless() {
            return Ok(1);
        }
        let lower = self.max_clique(self.n)?.len();
        let order = {
            let mut o = self.degeneracy_order().order;
            o.reverse(); // color the peel-last (densest) vertices first
            o
        };
        let upper = self.greedy_color_count(&order);
        for k in lower..upper {
            if self.k_colorable(k, &order) {
                return Ok(k);
            }
        }
        Ok(upper)
    }

    fn greedy_color_count(&self, order: &[usize]) -> usize {
        let mut color = vec![usize::MAX; self.n];
        let mut used = 0;
        for &v in order {
            let mut taken = vec![false; used + 1];
            for u in self.adj[v].iter() {
                if color[u] != usize::MAX {
                    taken[color[u]] = true;
                }
            }
            let c = (0..=used).find(|&c| !taken[c]).unwrap();
            color[v] = c;
            used = used.max(c + 1);
        }
        used
    }

    fn k_colorable(&self, k: usize, order: &[usize]) -> bool {
        let mut color = vec![usize::MAX; self.n];
        self.color_backtrack(k, order, 0, 0, &mut color)
    }

    fn color_backtrack(
        &self,
        k: usize,
        order: &[usize],
        idx: usize,
        used: usize,
        color: &mut Vec<usize>,
    ) -> bool {
        if idx == order.len() {
            return true;
        }
        let v = order[idx];
        // trying one fresh color is enough; higher fresh colors are symmetric
        let tryable = (used + 1).min(k);
        for c in 0..tryable {
            if self.adj[v].iter().any(|u| color[u] == c) {
                continue;
            }
            color[v] = c;
            let next_used = used.max(c + 1);
            if self.color_backtrack(k, order, idx + 1, next_used, color) {
                return true;
            }
            color[v] = usize::MAX;
        }
        false
    }

    /// Serialize to the `GRAPH` text format: header, then one row per
    /// vertex listing its larger-indexed neighbors ascending.
    pub fn to_text(&self) -> String {
        let mut out = format!("GRAPH {}\n", self.n);
        for i in 0..self.n {
            out.push_str(&i.to_string());
            out.push(':');
            for j in self.adj[i].iter() {
                if j > i {
                    out.push(' ');
                    out.push_str(&j.to_string());
                }
            }
            out.push('\n');
        }
        out
    }

    /// Parse the `GRAPH` text format, rejecting loops, backward or repeated
    /// neighbor entries, and out-of-range indices.
    pub fn parse(text: &str) -> Result<Graph, GraphParseError> {
        let mut lines = text.lines();
        let header = lines.next().ok_or(GraphParseError::BadHeader)?;
        let n: usize = header
            .strip_prefix("GRAPH ")
            .and_then(|rest| rest.trim().parse().ok())
            .ok_or(GraphParseError::BadHeader)?;
        let mut g = Graph::new(n);
        for i in 0..n {
            let line = lines.next().ok_or(GraphParseError::MissingVertexLine(i))?;
            let (head, rest) = line
                .split_once(':')
                .ok_or(GraphParseError::MissingVertexLine(i))?;
            let idx: usize = head
                .trim()
                .parse()
                .map_err(|_| GraphParseError::WrongVertexIndex {
                    expected: i,
                    found: head.trim().to_string(),
                })?;
            if idx != i {
                return Err(GraphParseError::WrongVertexIndex {
                    expected: i,
                    found: head.trim().to_string(),
                });
            }
            let mut prev: Option<usize> = None;
            for token in rest.split_whitespace() {
                let j: usize = token.parse().map_err(|_| GraphParseError::BadNeighbor {
                    vertex: i,
                    token: token.to_string(),
                })?;
                if j >= n {
                    return Err(GraphParseError::NeighborOutOfRange {
                        vertex: i,
                        neighbor: j,
                        n,
                    });
                }
                if j <= i {
                    return Err(GraphParseError::NotForward {
                        vertex: i,
                        neighbor: j,
                    });
                }
                if let Some(p) = prev {
                    if j <= p {
                        return Err(GraphParseError::NotAscending {
                            vertex: i,
                            neighbor: j,
                        });
                    }
                }
                prev = Some(j);
                g.add_edge(i, j).unwrap();
            }
        }
        if lines.any(|l| !l.trim().is_empty()) {
            return Err(GraphParseError::TrailingContent);
        }
        Ok(g)
    }
}

/// Backtracking subgraph search: pattern vertices are tried in degeneracy
/// order, host candidates ascending. Returns the first embedding found, so
/// the result is deterministic. Edgeless patterns embed whenever the host
/// has enough vertices.
pub fn find_subgraph(host: &Graph, pattern: &Graph) -> Option<Embedding> {
    if pattern.vertex_count() > host.vertex_count() {
        return None;
    }
    let order = pattern.degeneracy_order().order;
    let mut map = vec![usize::MAX; pattern.vertex_count()];
    let mut used = VertexSet::new(host.vertex_count());
    if embed_step(host, pattern, &order, 0, &mut map, &mut used) {
        Some(Embedding { map })
    } else {
        None
    }
}

fn embed_step(
    host: &Graph,
    pattern: &Graph,
    order: &[usize],
    idx: usize,
    map: &mut Vec<usize>,
    used: &mut VertexSet,
) -> bool {
    if idx == order.len() {
        return true;
    }
    let gv = order[idx];
    let mut cand = VertexSet::full(host.vertex_count());
    for gu in pattern.neighbors(gv).iter() {
        if map[gu] != usize::MAX {
            cand.intersect_in_place(host.neighbors(map[gu]));
        }
    }
    for hv in cand.iter() {
        if used.contains(hv) {
            continue;
        }
        map[gv] = hv;
        used.insert(hv);
        if embed_step(host, pattern, order, idx + 1, map, used) {
            return true;
        }
        used.remove(hv);
        map[gv] = usize::MAX;
    }
    false
}

/// Greedy embedding of a d-degenerate guest into a host where every vertex
/// misses at most (N-n)/d others: walk the degeneracy order and take the
/// smallest host vertex adjacent to every already-placed neighbor.
pub fn greedy_embed(guest: &Graph, host: &Graph, d: usize) -> Result<Embedding, EmbedError> {
    let n = guest.vertex_count();
    let big_n = host.vertex_count();
    if big_n < n {
        return Err(EmbedError::HostTooSmall {
            host: big_n,
            guest: n,
        });
    }
    if d == 0 {
        if !guest.is_edgeless() {
            return Err(EmbedError::ZeroDegenerateWithEdges);
        }
        return Ok(Embedding {
            map: (0..n).collect(),
        });
    }
    let deg_order = guest.degeneracy_order();
    if deg_order.degeneracy > d {
        // point at the first order position whose back-degree overshoots
        let mut pos = vec![0usize; n];
        for (i, &v) in deg_order.order.iter().enumerate() {
            pos[v] = i;
        }
        for &v in &deg_order.order {
            let back = guest.neighbors(v).iter().filter(|&u| pos[u] < pos[v]).count();
            if back > d {
                return Err(EmbedError::GuestNotDegenerate {
                    vertex: v,
                    back_degree: back,
                    d,
                });
            }
        }
        unreachable!("degeneracy exceeds d, so some back-degree must too");
    }
    for v in 0..big_n {
        let non_neighbors = big_n - 1 - host.degree(v);
        if non_neighbors * d > big_n - n {
            return Err(EmbedError::HostVertexTooSparse {
                vertex: v,
                non_neighbors,
                cap_num: big_n - n,
                cap_den: d,
            });
        }
    }
    let mut map = vec![usize::MAX; n];
    let mut used = VertexSet::new(big_n);
    for &gv in &deg_order.order {
        let mut cand = VertexSet::full(big_n);
        for gu in guest.neighbors(gv).iter() {
            if map[gu] != usize::MAX {
                cand.intersect_in_place(host.neighbors(map[gu]));
            }
        }
        let choice = cand
            .iter()
            .find(|&hv| !used.contains(hv))
            .ok_or(EmbedError::NoCandidate { vertex: gv })?;
        map[gv] = choice;
        used.insert(choice);
    }
    Ok(Embedding { map })
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(p) {
                    g.add_edge(u, v).unwrap();
                }
            }
        }
        g
    }

    /// Degeneracy oracle: max over all vertex subsets of the induced minimum
    /// degree. Independent of the peel implementation.
    fn degeneracy_by_subsets(g: &Graph) -> usize {
        let n = g.vertex_count();
        assert!(n <= 16);
        let mut best = 0;
        for mask in 1u32..(1 << n) {
            let verts: Vec<usize> = (0..n).filter(|&v| mask & (1 << v) != 0).collect();
            let min_deg = verts
                .iter()
                .map(|&v| verts.iter().filter(|&&u| g.has_edge(v, u)).count())
                .min()
                .unwrap();
            best = best.max(min_deg);
        }
        best
    }

    /// Subgraph oracle: try every injective map.
    fn contains_by_enumeration(host: &Graph, pattern: &Graph) -> bool {
        let hn = host.vertex_count();
        let pn = pattern.vertex_count();
        if pn > hn {
            return false;
        }
        let mut map = vec![usize::MAX; pn];
        let mut used = vec![false; hn];
        fn rec(
            host: &Graph,
            pattern: &Graph,
            idx: usize,
            map: &mut Vec<usize>,
            used: &mut Vec<bool>,
        ) -> bool {
            if idx == map.len() {
                return true;
            }
            for hv in 0..host.vertex_count() {
                if used[hv] {
                    continue;
                }
                let ok = (0..idx).all(|prev| {
                    !pattern.has_edge(prev, idx) || host.has_edge(map[prev], hv)
                });
                if !ok {
                    continue;
                }
                map[idx] = hv;
                used[hv] = true;
                if rec(host, pattern, idx + 1, map, used) {
                    return true;
                }
                used[hv] = false;
                map[idx] = usize::MAX;
            }
            false
        }
        rec(host, pattern, 0, &mut map, &mut used)
    }

    fn hkn(k: usize, n: usize) -> Graph {
        let mut g = Graph::new(n);
        for u in 0..k {
            for v in u + 1..k {
                g.add_edge(u, v).unwrap();
            }
        }
        g
    }

    fn gkn(k: usize, n: usize) -> Graph {
        let mut g = Graph::new(n + 1);
        for u in 0..k {
            for v in u + 1..k {
                g.add_edge(u, v).unwrap();
            }
        }
        for v in 0..n {
            g.add_edge(v, n).unwrap();
        }
        g
    }

    fn complete_multipartite(parts: &[usize]) -> Graph {
        let n: usize = parts.iter().sum();
        let mut block = Vec::with_capacity(n);
        for (b, &size) in parts.iter().enumerate() {
            block.extend(std::iter::repeat(b).take(size));
        }
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                if block[u] != block[v] {
                    g.add_edge(u, v).unwrap();
                }
            }
        }
        g
    }

    #[test]
    fn degeneracy_examples() {
        assert_eq!(Graph::complete(4).degeneracy(), 3);
        assert_eq!(Graph::path(4).degeneracy(), 1);
        let g36 = gkn(3, 6);
        assert_eq!(g36.vertex_count(), 7);
        assert_eq!(g36.degeneracy(), 3);
        assert_eq!(g36.degeneracy(), degeneracy_by_subsets(&g36));
        assert_eq!(Graph::new(0).degeneracy(), 0);
    }

    #[test]
    fn degeneracy_order_back_degrees_bounded() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..100 {
            let n = rng.gen_range(0..=10);
            let g = random_graph(&mut rng, n, 0.4);
            let ord = g.degeneracy_order();
            let mut pos = vec![0; n];
            for (i, &v) in ord.order.iter().enumerate() {
                pos[v] = i;
            }
            let max_back = (0..n)
                .map(|v| g.neighbors(v).iter().filter(|&u| pos[u] < pos[v]).count())
                .max()
                .unwrap_or(0);
            assert_eq!(max_back, ord.degeneracy);
        }
    }

    #[test]
    fn degeneracy_matches_subset_oracle_on_random_graphs() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for trial in 0..500 {
            let n = rng.gen_range(0..=10);
            let p = rng.gen_range(0.1..0.9);
            let g = random_graph(&mut rng, n, p);
            if n == 0 {
                assert_eq!(g.degeneracy(), 0);
                continue;
            }
            assert_eq!(
                g.degeneracy(),
                degeneracy_by_subsets(&g),
                "trial {trial} on {n} vertices"
            );
        }
    }

    #[test]
    fn degeneracy_of_clique_plus_isolated() {
        for k in 1..=8 {
            for extra in [0, 1, 5] {
                let g = hkn(k, k + extra);
                assert_eq!(g.degeneracy(), k - 1, "k={k} extra={extra}");
            }
        }
    }

    #[test]
    fn components_examples() {
        let two_triangles =
            Graph::with_edges(6, &[(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5)]).unwrap();
        let comps = two_triangles.connected_components();
        assert_eq!(comps, vec![vec![0, 1, 2], vec![3, 4, 5]]);

        let g23 = gkn(2, 3);
        assert_eq!(g23.connected_components(), vec![vec![0, 1, 2, 3]]);

        let comps = Graph::new(5).connected_components();
        assert_eq!(comps.len(), 5);
        assert!(comps.iter().all(|c| c.len() == 1));
    }

    #[test]
    fn max_clique_examples() {
        assert_eq!(Graph::cycle(5).max_clique(64).unwrap().len(), 2);

        // K_6 minus a perfect matching; oracle: every subset
        let mut g = Graph::complete(6);
        let mut removed = Graph::new(6);
        for (u, v) in [(0, 1), (2, 3), (4, 5)] {
            g.adj[u].remove(v);
            g.adj[v].remove(u);
            removed.add_edge(u, v).unwrap();
        }
        let mut oracle_best = 0;
        for mask in 1u32..(1 << 6) {
            let verts: Vec<usize> = (0..6).filter(|&v| mask & (1 << v) != 0).collect();
            let is_clique = verts
                .iter()
                .enumerate()
                .all(|(i, &u)| verts[i + 1..].iter().all(|&v| g.has_edge(u, v)));
            if is_clique {
                oracle_best = oracle_best.max(verts.len());
            }
        }
        assert_eq!(oracle_best, 3);
        assert_eq!(g.max_clique(64).unwrap().len(), 3);

        assert_eq!(hkn(3, 6).max_clique(64).unwrap().len(), 3);

        assert!(Graph::new(70).max_clique(64).is_err());
    }

    #[test]
    fn max_clique_agrees_with_subgraph_search() {
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        for _ in 0..60 {
            let n = rng.gen_range(1..=9);
            let g = random_graph(&mut rng, n, 0.5);
            let omega = g.max_clique(64).unwrap().len();
            assert!(find_subgraph(&g, &Graph::complete(omega)).is_some());
            assert!(find_subgraph(&g, &Graph::complete(omega + 1)).is_none());
        }
    }

    #[test]
    fn chromatic_examples() {
        let blue = complete_multipartite(&[6, 6, 6]);
        assert_eq!(blue.chromatic_number(20).unwrap(), 3);

        assert_eq!(gkn(3, 6).chromatic_number(20).unwrap(), 4);

        assert_eq!(Graph::new(5).chromatic_number(20).unwrap(), 1);
        assert_eq!(Graph::new(0).chromatic_number(20).unwrap(), 0);
        assert_eq!(Graph::cycle(5).chromatic_number(20).unwrap(), 3);
        assert_eq!(Graph::complete(7).chromatic_number(20).unwrap(), 7);

        assert!(Graph::new(21).chromatic_number(20).is_err());
    }

    #[test]
    fn contains_subgraph_examples() {
        assert!(find_subgraph(&Graph::cycle(5), &Graph::complete(3)).is_none());

        let emb = find_subgraph(&Graph::complete(3), &Graph::path(3)).unwrap();
        assert!(emb.is_valid(&Graph::path(3), &Graph::complete(3)));

        // G_{2,3} has chromatic number 3, K_{3,3} only 2
        let host = complete_multipartite(&[3, 3]);
        assert!(find_subgraph(&host, &gkn(2, 3)).is_none());
        assert!(!contains_by_enumeration(&host, &gkn(2, 3)));
    }

    #[test]
    fn contains_subgraph_edgeless_convention() {
        let host = random_graph(&mut ChaCha8Rng::seed_from_u64(3), 5, 0.3);
        let pat = Graph::new(3);
        let emb = find_subgraph(&host, &pat).unwrap();
        assert!(emb.is_valid(&pat, &host));
        assert!(find_subgraph(&host, &Graph::new(6)).is_none());
    }

    #[test]
    fn contains_subgraph_matches_enumeration() {
        let mut rng = ChaCha8Rng::seed_from_u64(99);
        for trial in 0..300 {
            let hn = rng.gen_range(1..=8);
            let pn = rng.gen_range(1..=5);
            let hp = rng.gen_range(0.2..0.8);
            let pp = rng.gen_range(0.2..0.8);
            let host = random_graph(&mut rng, hn, hp);
            let pattern = random_graph(&mut rng, pn, pp);
            let got = find_subgraph(&host, &pattern);
            assert_eq!(
                got.is_some(),
                contains_by_enumeration(&host, &pattern),
                "trial {trial}"
            );
            if let Some(emb) = got {
                assert!(emb.is_valid(&pattern, &host));
            }
        }
    }

    #[test]
    fn greedy_embed_examples() {
        // P_3 into K_{3,3}: every host vertex has 2 <= (6-3)/1 non-neighbors
        let host = complete_multipartite(&[3, 3]);
        let emb = greedy_embed(&Graph::path(3), &host, 1).unwrap();
        assert!(emb.is_valid(&Graph::path(3), &host));

        // edgeless guest, d = 0
        let host5 = random_graph(&mut ChaCha8Rng::seed_from_u64(5), 5, 0.5);
        let emb = greedy_embed(&Graph::new(3), &host5, 0).unwrap();
        assert_eq!(emb.map, vec![0, 1, 2]);

        // K_3 into K_5 minus an edge, d = 2
        let mut host = Graph::complete(5);
        host.adj[0].remove(1);
        host.adj[1].remove(0);
        let emb = greedy_embed(&Graph::complete(3), &host, 2).unwrap();
        assert!(emb.is_valid(&Graph::complete(3), &host));
    }

    #[test]
    fn greedy_embed_rejects_violations() {
        // guest K_3 is 2-degenerate, not 1-degenerate
        let err = greedy_embed(&Graph::complete(3), &Graph::complete(9), 1).unwrap_err();
        assert!(matches!(err, EmbedError::GuestNotDegenerate { .. }));

        // sparse host vertex breaks the (N-n)/d cap: 4 * 1 > 6 - 3
        let mut host = Graph::complete(6);
        for v in 1..5 {
            host.adj[0].remove(v);
            host.adj[v].remove(0);
        }
        let err = greedy_embed(&Graph::path(3), &host, 1).unwrap_err();
        assert!(matches!(
            err,
            EmbedError::HostVertexTooSparse { vertex: 0, .. }
        ));

        let err = greedy_embed(&Graph::path(3), &Graph::complete(2), 1).unwrap_err();
        assert!(matches!(err, EmbedError::HostTooSmall { .. }));

        let err = greedy_embed(&Graph::path(2), &Graph::complete(4), 0).unwrap_err();
        assert!(matches!(err, EmbedError::ZeroDegenerateWithEdges));
    }

    #[test]
    fn graph_text_round_trip() {
        let mut rng = ChaCha8Rng::seed_from_u64(41);
        for _ in 0..50 {
            let n = rng.gen_range(0..=12);
            let g = random_graph(&mut rng, n, 0.4);
            let text = g.to_text();
            let back = Graph::parse(&text).unwrap();
            assert_eq!(g, back);
        }
    }

    #[test]
    fn graph_parse_rejects_bad_input() {
        assert!(matches!(
            Graph::parse("GRAF 3\n"),
            Err(GraphParseError::BadHeader)
        ));
        assert!(matches!(
            Graph::parse("GRAPH 2\n0: 1\n"),
            Err(GraphParseError::MissingVertexLine(1))
        ));
        assert!(matches!(
            Graph::parse("GRAPH 2\n0: 0\n1:\n"),
            Err(GraphParseError::NotForward { .. })
        ));
        assert!(matches!(
            Graph::parse("GRAPH 2\n0: 5\n1:\n"),
            Err(GraphParseError::NeighborOutOfRange { .. })
        ));
        assert!(matches!(
            Graph::parse("GRAPH 3\n0: 2 1\n1:\n2:\n"),
            Err(GraphParseError::NotAscending { .. })
        ));
        assert!(matches!(
            Graph::parse("GRAPH 3\n0: 1\n2:\n1:\n"),
            Err(GraphParseError::WrongVertexIndex { .. })
        ));
        assert!(matches!(
            Graph::parse("GRAPH 1\n0:\nleftover\n"),
            Err(GraphParseError::TrailingContent)
        ));
        // blank neighbor lists and trailing newlines are fine
        assert!(Graph::parse("GRAPH 2\n0:\n1:\n\n").is_ok());
    }
}
