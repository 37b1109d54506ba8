//! Edge colorings of complete graphs: the RCOL text format, the Turan and
//! product constructions, seeded random colorings, and monochromatic-copy
//! detection (generic backtracking plus family-aware fast paths).

use std::fmt::Write as _;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::graph::{find_subgraph, Embedding, Graph};
use crate::pattern::{PatternError, PatternSpec};

#[derive(Debug, Error)]
pub enum ColoringError {
    #[error("turan coloring needs k >= 2 blocks and block size n >= 1, got k={k} n={n}")]
    TuranParams { k: usize, n: usize },
    #[error("product coloring needs a nonempty base and block size n >= 1")]
    ProductParams,
    #[error("product coloring would use {0} colors; the cap is 255")]
    ProductTooManyColors(usize),
    #[error("colorings use 1 to 255 colors, got {0}")]
    ColorCountRange(usize),
    #[error("random colorings need q >= 2, got {0}")]
    RandomColorCount(u8),
    #[error("expected {expected} edge colors for {n} vertices, got {got}")]
    WrongLength {
        n: usize,
        expected: usize,
        got: usize,
    },
    #[error("edge color {color} out of range for {q} colors")]
    ColorOutOfRange { color: u8, q: u8 },
}

#[derive(Debug, Error)]
pub enum RcolParseError {
    #[error("line 1 must be `RCOL 1`")]
    BadMagic,
    #[error("line 2 must be `<N> <q>`")]
    BadHeader,
    #[error("color count must be 1 to 255, got {0}")]
    QOutOfRange(String),
    #[error("missing row for vertex {0}")]
    MissingRow(usize),
    #[error("row {row} has {got} entries, expected {expected}")]
    WrongRowLength {
        row: usize,
        got: usize,
        expected: usize,
    },
    #[error("row {row}: bad color token `{token}`")]
    BadColor { row: usize, token: String },
    #[error("row {row}: color {color} out of range for {q} colors")]
    ColorOutOfRange { row: usize, color: u8, q: u8 },
    #[error("trailing content after the last row")]
    TrailingContent,
}

fn pair_count(n: usize) -> usize {
    n * (n - 1) / 2
}

/// A q-coloring of the edges of K_n. Colors are stored row-major: row i
/// holds the colors of (i,i+1) .. (i,n-1), matching the RCOL layout.
/// Two-color reports call color 0 "red" and color 1 "blue". One-color
/// colorings are allowed so they can serve as product-construction bases.
#[derive(Clone, PartialEq, Eq)]
pub struct EdgeColoring {
    n: usize,
    q: u8,
    colors: Vec<u8>,
}

impl std::fmt::Debug for EdgeColoring {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "EdgeColoring(n={}, q={})", self.n, self.q)
    }
}

impl EdgeColoring {
    /// All-zero coloring of K_n with q colors available.
    pub fn new(n: usize, q: u8) -> Result<Self, ColoringError> {
        if q == 0 {
            return Err(ColoringError::ColorCountRange(0));
        }
        Ok(EdgeColoring {
            n,
            q,
            colors: vec![0; if n < 2 { 0 } else { pair_count(n) }],
        })
    }

    pub fn from_colors(n: usize, q: u8, colors: Vec<u8>) -> Result<Self, ColoringError> {
        if q == 0 {
            return Err(ColoringError::ColorCountRange(0));
        }
        let expected = if n < 2 { 0 } else { pair_count(n) };
        if colors.len() != expected {
            return Err(ColoringError::WrongLength {
                n,
                expected,
                got: colors.len(),
            });
        }
        if let Some(&c) = colors.iter().find(|&&c| c >= q) {
            return Err(ColoringError::ColorOutOfRange { color: c, q });
        }
        Ok(EdgeColoring { n, q, colors })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn color_count(&self) -> u8 {
        self.q
    }

    #[inline]
    fn index(&self, i: usize, j: usize) -> usize {
        debug_assert!(i < j && j < self.n);
        i * self.n - i * (i + 1) / 2 + (j - i - 1)
    }

    pub fn color(&self, u: usize, v: usize) -> u8 {
        assert!(u != v && u < self.n && v < self.n, "bad edge ({u},{v})");
        let (i, j) = if u < v { (u, v) } else { (v, u) };
        self.colors[self.index(i, j)]
    }

    pub fn set_color(&mut self, u: usize, v: usize, c: u8) {
        assert!(u != v && u < self.n && v < self.n, "bad edge ({u},{v})");
        assert!(c < self.q, "color {c} out of range for q={}", self.q);
        let (i, j) = if u < v { (u, v) } else { (v, u) };
        let idx = self.index(i, j);
        self.colors[idx] = c;
    }

    /// Graph whose edges are exactly the color-c edges.
    pub fn color_class(&self, c: u8) -> Graph {
        let mut g = Graph::new(self.n);
        for i in 0..self.n {
            for j in i + 1..self.n {
                if self.colors[self.index(i, j)] == c {
                    g.add_edge(i, j).unwrap();
                }
            }
        }
        g
    }

    /// Edge counts per color, indexed by color.
    pub fn color_counts(&self) -> Vec<usize> {
        let mut counts = vec![0usize; self.q as usize];
        for &c in &self.colors {
            counts[c as usize] += 1;
        }
        counts
    }

    /// Coloring induced on `verts` (ascending), relabeled by position.
    pub fn induced(&self, verts: &[usize]) -> EdgeColoring {
        let m = verts.len();
        let mut out = EdgeColoring::new(m, self.q).unwrap();
        for a in 0..m {
            for b in a + 1..m {
                out.set_color(a, b, self.color(verts[a], verts[b]));
            }
        }
        out
    }

    pub fn delete_vertex(&self, v: usize) -> EdgeColoring {
        let keep: Vec<usize> = (0..self.n).filter(|&u| u != v).collect();
        self.induced(&keep)
    }

    /// Relabel colors by `perm` (perm[c] is the new name of color c).
    pub fn permute_colors(&self, perm: &[u8]) -> EdgeColoring {
        assert_eq!(perm.len(), self.q as usize);
        EdgeColoring {
            n: self.n,
            q: self.q,
            colors: self.colors.iter().map(|&c| perm[c as usize]).collect(),
        }
    }

    /// Serialize to RCOL text: magic line, `N q` header, then one row per
    /// vertex i < N-1 holding the colors of (i,i+1) .. (i,N-1).
    pub fn to_text(&self) -> String {
        let mut out = String::from("RCOL 1\n");
        let _ = writeln!(out, "{} {}", self.n, self.q);
        for i in 0..self.n.saturating_sub(1) {
            for j in i + 1..self.n {
                if j > i + 1 {
                    out.push(' ');
                }
                let _ = write!(out, "{}", self.colors[self.index(i, j)]);
            }
            out.push('\n');
        }
        out
    }

    pub fn parse(text: &str) -> Result<EdgeColoring, RcolParseError> {
        let mut lines = text.lines();
        if lines.next().map(str::trim) != Some("RCOL 1") {
            return Err(RcolParseError::BadMagic);
        }
        let header = lines.next().ok_or(RcolParseError::BadHeader)?;
        let mut parts = header.split_whitespace();
        let n: usize = parts
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or(RcolParseError::BadHeader)?;
        let q_token = parts.next().ok_or(RcolParseError::BadHeader)?;
        if parts.next().is_some() {
            return Err(RcolParseError::BadHeader);
        }
        let q: u8 = q_token
            .parse::<usize>()
            .ok()
            .filter(|&q| (1..=255).contains(&q))
            .ok_or_else(|| RcolParseError::QOutOfRange(q_token.to_string()))?
            as u8;
        let mut coloring = EdgeColoring::new(n, q).unwrap();
        for i in 0..n.saturating_sub(1) {
            let line = lines.next().ok_or(RcolParseError::MissingRow(i))?;
            let tokens: Vec<&str> = line.split_whitespace().collect();
            let expected = n - 1 - i;
            if tokens.len() != expected {
                return Err(RcolParseError::WrongRowLength {
                    row: i,
                    got: tokens.len(),
                    expected,
                });
            }
            for (offset, token) in tokens.iter().enumerate() {
                let c: u8 = token.parse().map_err(|_| RcolParseError::BadColor {
                    row: i,
                    token: token.to_string(),
                })?;
                if c >= q {
                    return Err(RcolParseError::ColorOutOfRange { row: i, color: c, q });
                }
                let j = i + 1 + offset;
                let idx = coloring.index(i, j);
                coloring.colors[idx] = c;
            }
        }
        if lines.any(|l| !l.trim().is_empty()) {
            return Err(RcolParseError::TrailingContent);
        }
        Ok(coloring)
    }
}

/// Turan coloring of K_{nk}: k consecutive blocks of n vertices; edges
/// inside a block get color 0, edges across blocks color 1.
pub fn turan_coloring(k: usize, n: usize) -> Result<EdgeColoring, ColoringError> {
    if k < 2 || n < 1 {
        return Err(ColoringError::TuranParams { k, n });
    }
    let big_n = n * k;
    let mut c = EdgeColoring::new(big_n, 2)?;
    for u in 0..big_n {
        for v in u + 1..big_n {
            if u / n != v / n {
                c.set_color(u, v, 1);
            }
        }
    }
    Ok(c)
}

/// Product coloring: blow each base vertex up into a block of n vertices.
/// Cross-block edges inherit the base color of their block pair; edges
/// inside a block get the one new color, so q grows by one.
pub fn product_coloring(base: &EdgeColoring, n: usize) -> Result<EdgeColoring, ColoringError> {
    if base.vertex_count() == 0 || n < 1 {
        return Err(ColoringError::ProductParams);
    }
    let new_q = base.color_count() as usize + 1;
    if new_q > 255 {
        return Err(ColoringError::ProductTooManyColors(new_q));
    }
    let big_n = base.vertex_count() * n;
    let mut c = EdgeColoring::new(big_n, new_q as u8)?;
    let inner = base.color_count();
    for u in 0..big_n {
        for v in u + 1..big_n {
            let (bu, bv) = (u / n, v / n);
            let color = if bu == bv { inner } else { base.color(bu, bv) };
            c.set_color(u, v, color);
        }
    }
    Ok(c)
}

/// Draw one color uniformly from 0..q by rejection so every q is unbiased.
fn sample_color(rng: &mut ChaCha8Rng, q: u8) -> u8 {
    let bound = 256u16 - 256u16 % q as u16;
    loop {
        let b = rng.gen::<u8>();
        if (b as u16) < bound {
            return b % q;
        }
    }
}

/// Uniform random q-coloring of K_n, one byte draw per edge in row-major
/// pair order from seeded ChaCha8, so runs reproduce byte-for-byte.
pub fn random_coloring(n: usize, q: u8, seed: u64) -> Result<EdgeColoring, ColoringError> {
    if q < 2 {
        return Err(ColoringError::RandomColorCount(q));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut c = EdgeColoring::new(n, q)?;
    for slot in c.colors.iter_mut() {
        *slot = sample_color(&mut rng, q);
    }
    Ok(c)
}

/// The pentagon 2-coloring of K_5: cycle edges color 0, diagonals color 1.
/// Both classes are 5-cycles, so each color is triangle-free.
pub fn pentagon_coloring() -> EdgeColoring {
    let mut c = EdgeColoring::new(5, 2).unwrap();
    for u in 0..5 {
        for v in u + 1..5 {
            let cyclic = v == u + 1 || (u == 0 && v == 4);
            if !cyclic {
                c.set_color(u, v, 1);
            }
        }
    }
    c
}

/// A monochromatic embedded copy: `map[p]` is the host vertex carrying
/// pattern vertex p, and every pattern edge has color `color`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonoCopy {
    pub color: u8,
    pub map: Vec<usize>,
}

impl MonoCopy {
    pub fn is_valid(&self, coloring: &EdgeColoring, pattern: &Graph) -> bool {
        if self.map.len() != pattern.vertex_count() {
            return false;
        }
        let mut seen = vec![false; coloring.vertex_count()];
        for &h in &self.map {
            if h >= coloring.vertex_count() || seen[h] {
                return false;
            }
            seen[h] = true;
        }
        pattern
            .edges()
            .all(|(a, b)| coloring.color(self.map[a], self.map[b]) == self.color)
    }
}

/// Per-color verification record: the embedding found in each color class,
/// or None where the class is pattern-free.
#[derive(Clone, Debug)]
pub struct FreeTranscript {
    pub per_color: Vec<Option<Embedding>>,
}

impl FreeTranscript {
    /// Overall verdict: free means no color class contains the pattern.
    pub fn free(&self) -> bool {
        self.per_color.iter().all(|e| e.is_none())
    }

    pub fn first_copy(&self) -> Option<MonoCopy> {
        self.per_color.iter().enumerate().find_map(|(c, e)| {
            e.as_ref().map(|emb| MonoCopy {
                color: c as u8,
                map: emb.map.clone(),
            })
        })
    }
}

/// Search one color class for the pattern by generic backtracking.
pub fn find_mono_copy(coloring: &EdgeColoring, pattern: &Graph, color: u8) -> Option<Embedding> {
    find_subgraph(&coloring.color_class(color), pattern)
}

/// Family-aware copy search in one color class. The clique-plus-isolated,
/// apex, and disjoint-clique families get direct searches; everything else
/// builds the pattern graph and falls back to the generic routine.
pub fn find_mono_copy_in_family(
    coloring: &EdgeColoring,
    spec: &PatternSpec,
    color: u8,
) -> Result<Option<Embedding>, PatternError> {
    let pattern = spec.build()?;
    let class = coloring.color_class(color);
    Ok(match spec {
        PatternSpec::Hkn { k, n } => mono_hkn(&class, *k, *n),
        PatternSpec::Gkn { k, n } => mono_gkn(&class, *k, *n),
        PatternSpec::Hprime { k, n } => mono_hprime(&class, *k, *n),
        _ => find_subgraph(&class, &pattern),
    })
}

/// Check every color class; the transcript records one embedding per
/// non-free color.
pub fn verify_free(coloring: &EdgeColoring, pattern: &Graph) -> FreeTranscript {
    FreeTranscript {
        per_color: (0..coloring.color_count())
            .map(|c| find_mono_copy(coloring, pattern, c))
            .collect(),
    }
}

/// verify_free through the family fast paths.
pub fn verify_free_in_family(
    coloring: &EdgeColoring,
    spec: &PatternSpec,
) -> Result<FreeTranscript, PatternError> {
    let mut per_color = Vec::with_capacity(coloring.color_count() as usize);
    for c in 0..coloring.color_count() {
        per_color.push(find_mono_copy_in_family(coloring, spec, c)?);
    }
    Ok(FreeTranscript { per_color })
}

/// First monochromatic copy scanning colors ascending.
pub fn first_mono_copy(coloring: &EdgeColoring, pattern: &Graph) -> Option<MonoCopy> {
    (0..coloring.color_count()).find_map(|c| {
        find_mono_copy(coloring, pattern, c).map(|emb| MonoCopy {
            color: c,
            map: emb.map,
        })
    })
}

fn fill_free_slots(map: &mut Vec<usize>, extra: usize, n_host: usize) {
    let mut used = vec![false; n_host];
    for &v in map.iter() {
        used[v] = true;
    }
    let mut next = 0;
    for _ in 0..extra {
        while used[next] {
            next += 1;
        }
        used[next] = true;
        map.push(next);
    }
}

/// H_{k,n} copy: a monochromatic K_k plus any n-k spare vertices.
fn mono_hkn(class: &Graph, k: usize, n: usize) -> Option<Embedding> {
    if class.vertex_count() < n {
        return None;
    }
    let emb = find_subgraph(class, &Graph::complete(k))?;
    let mut map = emb.map;
    fill_free_slots(&mut map, n - k, class.vertex_count());
    Some(Embedding { map })
}

/// G_{k,n} copy: an apex vertex with at least n same-color neighbors whose
/// class-induced neighborhood contains K_k.
fn mono_gkn(class: &Graph, k: usize, n: usize) -> Option<Embedding> {
    if class.vertex_count() < n + 1 {
        return None;
    }
    let kk = Graph::complete(k);
    for apex in 0..class.vertex_count() {
        let nbrs = class.neighbors(apex).to_vec();
        if nbrs.len() < n {
            continue;
        }
        let sub = class.induced(&nbrs);
        if let Some(emb) = find_subgraph(&sub, &kk) {
            let mut map: Vec<usize> = emb.map.iter().map(|&i| nbrs[i]).collect();
            // spare H vertices must also come from the apex neighborhood
            let spare: Vec<usize> = nbrs
                .iter()
                .copied()
                .filter(|v| !map.contains(v))
                .take(n - k)
                .collect();
            map.extend(spare);
            map.push(apex);
            return Some(Embedding { map });
        }
    }
    None
}

/// H'_{k,n} copy: n/k vertex-disjoint monochromatic K_k's. Blocks are
/// interchangeable, so the search forces block minima to ascend.
fn mono_hprime(class: &Graph, k: usize, n: usize) -> Option<Embedding> {
    if class.vertex_count() < n {
        return None;
    }
    let blocks = n / k;
    let mut used = vec![false; class.vertex_count()];
    let mut acc = Vec::with_capacity(n);
    if hprime_blocks(class, k, blocks, 0, &mut used, &mut acc) {
        Some(Embedding { map: acc })
    } else {
        None
    }
}

fn hprime_blocks(
    class: &Graph,
    k: usize,
    blocks_left: usize,
    min_start: usize,
    used: &mut Vec<bool>,
    acc: &mut Vec<usize>,
) -> bool {
    if blocks_left == 0 {
        return true;
    }
    for v in min_start..class.vertex_count() {
        if used[v] {
            continue;
        }
        used[v] = true;
        acc.push(v);
        if hprime_grow(class, k, blocks_left, v, used, acc, 1) {
            return true;
        }
        acc.pop();
        used[v] = false;
    }
    false
}

fn hprime_grow(
    class: &Graph,
    k: usize,
    blocks_left: usize,
    block_min: usize,
    used: &mut Vec<bool>,
    acc: &mut Vec<usize>,
    have: usize,
) -> bool {
    if have == k {
        return hprime_blocks(class, k, blocks_left - 1, block_min + 1, used, acc);
    }
    let last = *acc.last().unwrap();
    let block_start = acc.len() - have;
    for u in last + 1..class.vertex_count() {
        if used[u] {
            continue;
        }
        if !acc[block_start..].iter().all(|&w| class.has_edge(w, u)) {
            continue;
        }
        used[u] = true;
        acc.push(u);
        if hprime_grow(class, k, blocks_left, block_min, used, acc, have + 1) {
            return true;
        }
        acc.pop();
        used[u] = false;
    }
    false
}
