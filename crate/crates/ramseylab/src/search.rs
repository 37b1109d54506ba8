//! Exact arrowing decisions and Ramsey numbers by symmetry-pruned DFS over
//! edge colorings, certificates tying values to witness colorings, the
//! exact expected-copy bound, and randomized lower-bound witnesses.

use std::collections::BTreeSet;
use std::path::Path;
use std::time::Instant;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use thiserror::Error;

use crate::coloring::{verify_free, EdgeColoring};
use crate::graph::Graph;

/// Default cap on instance size for arrowing searches.
pub const DEFAULT_MAX_N: usize = 16;
/// Default sample budget for random_lb_witness.
pub const DEFAULT_ATTEMPTS: usize = 10_000;

/// The search keeps one adjacency word per vertex, so instances are capped
/// at 64 vertices no matter how high max_n is raised.
const HARD_MAX_N: usize = 64;

#[derive(Debug, Error)]
pub enum SearchError {
    #[error("instance on {n} vertices exceeds the search limit {limit}")]
    LimitExceeded { n: usize, limit: usize },
    #[error("no arrowing found up to the search limit {limit}")]
    NoArrowingWithinLimit { limit: usize },
    #[error("pattern has no vertices")]
    EmptyPattern,
    #[error("need at least one color")]
    ZeroColors,
    #[error("expected-copy bound needs k >= 2 and d >= 1, got k={k} d={d}")]
    BoundParams { k: u64, d: u64 },
    #[error("pattern core has minimum degree {min_degree}, below the required d = {d} >= 1")]
    CoreDegree { min_degree: usize, d: usize },
}

#[derive(Debug, Error)]
pub enum CertError {
    #[error("certificate io: {0}")]
    Io(#[from] std::io::Error),
    #[error("cert.json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("cert.json missing or malformed field `{0}`")]
    Field(&'static str),
    #[error("witness file: {0}")]
    Witness(#[from] crate::coloring::RcolParseError),
    #[error("pattern file: {0}")]
    Pattern(#[from] crate::graph::GraphParseError),
}

/// Caps for the searches. `max_n` bounds instance sizes (hard ceiling 64);
/// `workers` > 1 lets the arrowing decision fan subtrees out to a thread
/// pool. Witnesses are always produced by a single-threaded canonical pass,
/// so results never depend on the worker count.
#[derive(Clone, Debug)]
pub struct SearchLimits {
    pub max_n: usize,
    pub workers: usize,
}

impl Default for SearchLimits {
    fn default() -> Self {
        SearchLimits {
            max_n: DEFAULT_MAX_N,
            workers: 1,
        }
    }
}

impl SearchLimits {
    fn effective_max_n(&self) -> usize {
        self.max_n.min(HARD_MAX_N)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ArrowsOutcome {
    /// Every q-coloring of K_n contains a monochromatic copy.
    Arrows,
    /// Some coloring avoids the pattern; this is the lexicographically
    /// least avoiding coloring under the symmetry-broken edge order.
    Avoidable(EdgeColoring),
}

impl ArrowsOutcome {
    pub fn arrows(&self) -> bool {
        matches!(self, ArrowsOutcome::Arrows)
    }

    pub fn witness(&self) -> Option<&EdgeColoring> {
        match self {
            ArrowsOutcome::Arrows => None,
            ArrowsOutcome::Avoidable(w) => Some(w),
        }
    }
}

fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Anchored embedding plan for one ordered core edge (a, b): the core
/// vertices listed connect-first starting from a, b, plus for each later
/// position the mask of earlier positions it must attach to.
#[derive(Clone, Debug)]
struct AnchorPlan {
    order: Vec<usize>,
    early_nbrs: Vec<u64>,
}

/// The pattern minus its isolated vertices, preprocessed for the
/// newest-edge copy check used while the DFS assigns colors.
#[derive(Clone, Debug)]
struct CorePattern {
    plans: Vec<AnchorPlan>,
}

impl CorePattern {
    /// None when the pattern has no edges.
    fn build(pattern: &Graph) -> Option<CorePattern> {
        let verts: Vec<usize> = (0..pattern.vertex_count())
            .filter(|&v| pattern.degree(v) > 0)
            .collect();
        if verts.is_empty() {
            return None;
        }
        let core = pattern.induced(&verts);
        let cn = core.vertex_count();
        assert!(cn <= 64, "pattern core too large");
        let mut plans = Vec::new();
        for (a, b) in core.edges().collect::<Vec<_>>() {
            for (x, y) in [(a, b), (b, a)] {
                plans.push(Self::plan(&core, x, y));
            }
        }
        Some(CorePattern { plans })
    }

    fn plan(core: &Graph, a: usize, b: usize) -> AnchorPlan {
        let cn = core.vertex_count();
        let mut order = vec![a, b];
        let mut placed = vec![false; cn];
        placed[a] = true;
        placed[b] = true;
        while order.len() < cn {
            // prefer a vertex attached to something already placed
            let next = (0..cn)
                .filter(|&v| !placed[v])
                .find(|&v| core.neighbors(v).iter().any(|u| placed[u]))
                .or_else(|| (0..cn).find(|&v| !placed[v]))
                .unwrap();
            placed[next] = true;
            order.push(next);
        }
        let mut pos = vec![0usize; cn];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        let early_nbrs = order
            .iter()
            .enumerate()
            .map(|(i, &v)| {
                let mut mask = 0u64;
                for u in core.neighbors(v).iter() {
                    if pos[u] < i {
                        mask |= 1u64 << pos[u];
                    }
                }
                mask
            })
            .collect();
        AnchorPlan { order, early_nbrs }
    }
}

/// DFS state: colors assigned to edges in lexicographic (i, j) order, with
/// one adjacency word per color per vertex.
#[derive(Clone)]
struct ArrowsSearch {
    n: usize,
    q: u8,
    edges: Vec<(usize, usize)>,
    colors: Vec<u8>,
    adj: Vec<Vec<u64>>,
    core: CorePattern,
    host_full: u64,
    capture: bool,
    witness: Option<Vec<u8>>,
}

impl ArrowsSearch {
    fn new(n: usize, q: u8, core: CorePattern) -> Self {
        let edges: Vec<(usize, usize)> = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .collect();
        let m = edges.len();
        ArrowsSearch {
            n,
            q,
            edges,
            colors: vec![0; m],
            adj: vec![vec![0u64; n]; q as usize],
            core,
            host_full: full_mask(n),
            capture: false,
            witness: None,
        }
    }

    #[inline]
    fn apply(&mut self, idx: usize, c: u8) {
        let (u, v) = self.edges[idx];
        self.adj[c as usize][u] |= 1u64 << v;
        self.adj[c as usize][v] |= 1u64 << u;
        self.colors[idx] = c;
    }

    #[inline]
    fn unapply(&mut self, idx: usize, c: u8) {
        let (u, v) = self.edges[idx];
        self.adj[c as usize][u] &= !(1u64 << v);
        self.adj[c as usize][v] &= !(1u64 << u);
    }

    /// Would coloring the edge (u, v) with c complete a monochromatic core
    /// copy? Any new copy must use the new edge, so the search anchors one
    /// core edge on (u, v) and extends over the already-colored c-edges.
    fn creates_mono(&self, c: u8, u: usize, v: usize) -> bool {
        let adjc = &self.adj[c as usize];
        let mut img = [0usize; 64];
        for plan in &self.core.plans {
            img[0] = u;
            img[1] = v;
            let used = (1u64 << u) | (1u64 << v);
            if self.extend(adjc, plan, 2, &mut img, used) {
                return true;
            }
        }
        false
    }

    fn extend(
        &self,
        adjc: &[u64],
        plan: &AnchorPlan,
        t: usize,
        img: &mut [usize; 64],
        used: u64,
    ) -> bool {
        if t == plan.order.len() {
            return true;
        }
        let mut cand = self.host_full;
        let mut bits = plan.early_nbrs[t];
        while bits != 0 {
            let s = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            cand &= adjc[img[s]];
        }
        cand &= !used;
        while cand != 0 {
            let w = cand.trailing_zeros() as usize;
            cand &= cand - 1;
            img[t] = w;
            if self.extend(adjc, plan, t + 1, img, used | (1u64 << w)) {
                return true;
            }
        }
        false
    }

    /// True when an avoiding completion exists below this node. Colors are
    /// tried ascending and a fresh color is allowed only right after all
    /// smaller colors have appeared, so the first completion found is the
    /// canonical lex-least witness.
    fn dfs(&mut self, idx: usize, used: u8) -> bool {
        if idx == self.edges.len() {
            if self.capture {
                self.witness = Some(self.colors.clone());
            }
            return true;
        }
        let (u, v) = self.edges[idx];
        let limit = (used + 1).min(self.q);
        for c in 0..limit {
            if self.creates_mono(c, u, v) {
                continue;
            }
            self.apply(idx, c);
            if self.dfs(idx + 1, used.max(c + 1)) {
                return true;
            }
            self.unapply(idx, c);
        }
        false
    }

    /// Enumerate surviving partial colorings of the first `depth` edges.
    fn collect_prefixes(
        &mut self,
        idx: usize,
        used: u8,
        depth: usize,
        out: &mut Vec<(Vec<u8>, u8)>,
    ) {
        if idx == depth {
            out.push((self.colors[..idx].to_vec(), used));
            return;
        }
        let (u, v) = self.edges[idx];
        let limit = (used + 1).min(self.q);
        for c in 0..limit {
            if self.creates_mono(c, u, v) {
                continue;
            }
            self.apply(idx, c);
            self.collect_prefixes(idx + 1, used.max(c + 1), depth, out);
            self.unapply(idx, c);
        }
    }
}

/// Does every q-coloring of the edges of K_n contain a monochromatic copy
/// of the pattern? When it does not, the canonical avoiding coloring comes
/// back as the witness.
pub fn arrows(
    n: usize,
    pattern: &Graph,
    q: u8,
    limits: &SearchLimits,
) -> Result<ArrowsOutcome, SearchError> {
    if q == 0 {
        return Err(SearchError::ZeroColors);
    }
    let limit = limits.effective_max_n();
    if n > limit {
        return Err(SearchError::LimitExceeded { n, limit });
    }
    Ok(arrows_unchecked(n, pattern, q, limits.workers))
}

fn arrows_unchecked(n: usize, pattern: &Graph, q: u8, workers: usize) -> ArrowsOutcome {
    let order = pattern.vertex_count();
    if n < order {
        // the pattern cannot fit; the all-zero coloring is the canonical witness
        return ArrowsOutcome::Avoidable(EdgeColoring::new(n, q).unwrap());
    }
    let core = match CorePattern::build(pattern) {
        // edgeless patterns sit inside every coloring once n >= order
        None => return ArrowsOutcome::Arrows,
        Some(core) => core,
    };
    let mut search = ArrowsSearch::new(n, q, core);
    let m = search.edges.len();

    let avoidable = if workers > 1 && m >= 14 {
        let depth = 10.min(m);
        let mut prefixes = Vec::new();
        search.collect_prefixes(0, 0, depth, &mut prefixes);
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(workers)
            .build()
            .expect("thread pool");
        let base = &search;
        pool.install(|| {
            prefixes.into_par_iter().any(|(prefix, used)| {
                let mut s = ArrowsSearch::new(base.n, base.q, base.core.clone());
                for (i, &c) in prefix.iter().enumerate() {
                    s.apply(i, c);
                }
                s.dfs(prefix.len(), used)
            })
        })
    } else {
        search.capture = true;
        search.dfs(0, 0)
    };

    if !avoidable {
        return ArrowsOutcome::Arrows;
    }
    let colors = match search.witness.take() {
        Some(w) => w,
        None => {
            // parallel decision; recompute the canonical witness sequentially
            let mut s = ArrowsSearch::new(search.n, search.q, search.core.clone());
            s.capture = true;
            let found = s.dfs(0, 0);
            debug_assert!(found);
            s.witness.take().expect("witness after avoidable decision")
        }
    };
    ArrowsOutcome::Avoidable(EdgeColoring::from_colors(n, q, colors).unwrap())
}

/// Transcript stored with a certificate: how the value was obtained and the
/// re-verification results.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CertTranscript {
    pub method: String,
    pub witness_free: bool,
    pub arrows_at_value: bool,
    pub decision_millis: Vec<(usize, u64)>,
}

/// An exact Ramsey value plus the witness coloring that certifies the
/// lower bound and the transcript of the search that certified the upper.
#[derive(Clone, Debug, PartialEq)]
pub struct RamseyCertificate {
    pub pattern: Graph,
    pub q: u8,
    pub value: usize,
    pub witness: EdgeColoring,
    pub transcript: CertTranscript,
}

impl RamseyCertificate {
    /// Re-check the cheap invariants: the witness lives on value-1 vertices
    /// and is pattern-free. (arrows(value) is the expensive half; rerun it
    /// through `arrows` when needed.)
    pub fn verify_witness(&self) -> bool {
        self.witness.vertex_count() + 1 == self.value
            && verify_free(&self.witness, &self.pattern).free()
    }

    /// Write cert.json, witness.rcol, and pattern.graph, all byte-stable
    /// for a given result, plus timings.json which varies run to run.
    pub fn write_dir(&self, dir: &Path) -> Result<(), CertError> {
        std::fs::create_dir_all(dir)?;
        std::fs::write(dir.join("witness.rcol"), self.witness.to_text())?;
        std::fs::write(dir.join("pattern.graph"), self.pattern.to_text())?;
        let doc = serde_json::json!({
            "format": "ramseylab-cert-1",
            "value": self.value,
            "q": self.q,
            "method": self.transcript.method,
            "witness_free": self.transcript.witness_free,
            "arrows_at_value": self.transcript.arrows_at_value,
            "witness_file": "witness.rcol",
            "pattern_file": "pattern.graph",
        });
        let text = serde_json::to_string_pretty(&doc)?;
        std::fs::write(dir.join("cert.json"), text + "\n")?;
        let millis: Vec<serde_json::Value> = self
            .transcript
            .decision_millis
            .iter()
            .map(|&(n, ms)| serde_json::json!([n, ms]))
            .collect();
        let timings = serde_json::json!({ "decision_millis": millis });
        let text = serde_json::to_string_pretty(&timings)?;
        std::fs::write(dir.join("timings.json"), text + "\n")?;
        Ok(())
    }

    pub fn read_dir(dir: &Path) -> Result<RamseyCertificate, CertError> {
        let doc: serde_json::Value =
            serde_json::from_str(&std::fs::read_to_string(dir.join("cert.json"))?)?;
        let value = doc["value"].as_u64().ok_or(CertError::Field("value"))? as usize;
        let q = doc["q"].as_u64().filter(|&q| q <= 255).ok_or(CertError::Field("q"))? as u8;
        let method = doc["method"]
            .as_str()
            .ok_or(CertError::Field("method"))?
            .to_string();
        let witness_free = doc["witness_free"]
            .as_bool()
            .ok_or(CertError::Field("witness_free"))?;
        let arrows_at_value = doc["arrows_at_value"]
            .as_bool()
            .ok_or(CertError::Field("arrows_at_value"))?;
        let decision_millis = match std::fs::read_to_string(dir.join("timings.json")) {
            Ok(text) => {
                let timings: serde_json::Value = serde_json::from_str(&text)?;
                timings["decision_millis"]
                    .as_array()
                    .ok_or(CertError::Field("decision_millis"))?
                    .iter()
                    .map(|entry| {
                        let pair = entry.as_array().filter(|a| a.len() == 2)?;
                        Some((pair[0].as_u64()? as usize, pair[1].as_u64()?))
                    })
                    .collect::<Option<Vec<_>>>()
                    .ok_or(CertError::Field("decision_millis"))?
            }
            Err(err) if err.kind() == std::io::ErrorKind::NotFound => Vec::new(),
            Err(err) => return Err(err.into()),
        };
        let witness_name = doc["witness_file"]
            .as_str()
            .ok_or(CertError::Field("witness_file"))?;
        let pattern_name = doc["pattern_file"]
            .as_str()
            .ok_or(CertError::Field("pattern_file"))?;
        let witness = EdgeColoring::parse(&std::fs::read_to_string(dir.join(witness_name))?)?;
        let pattern = Graph::parse(&std::fs::read_to_string(dir.join(pattern_name))?)?;
        Ok(RamseyCertificate {
            pattern,
            q,
            value,
            witness,
            transcript: CertTranscript {
                method,
                witness_free,
                arrows_at_value,
                decision_millis,
            },
        })
    }
}

/// Smallest N such that K_N arrows the pattern in q colors, scanning up
/// from N = pattern order, with the avoiding coloring found at N-1 kept as
/// the certificate witness.
pub fn ramsey_number(
    pattern: &Graph,
    q: u8,
    limits: &SearchLimits,
) -> Result<RamseyCertificate, SearchError> {
    if pattern.vertex_count() == 0 {
        return Err(SearchError::EmptyPattern);
    }
    if q == 0 {
        return Err(SearchError::ZeroColors);
    }
    let limit = limits.effective_max_n();
    let start = pattern.vertex_count();
    if start > limit {
        return Err(SearchError::LimitExceeded { n: start, limit });
    }
    let mut decision_millis = Vec::new();
    let mut prev_witness: Option<EdgeColoring> = None;
    for n in start..=limit {
        let t0 = Instant::now();
        let outcome = arrows_unchecked(n, pattern, q, limits.workers);
        decision_millis.push((n, t0.elapsed().as_millis() as u64));
        match outcome {
            ArrowsOutcome::Avoidable(w) => prev_witness = Some(w),
            ArrowsOutcome::Arrows => {
                let witness = match prev_witness {
                    Some(w) => w,
                    None => match arrows_unchecked(n - 1, pattern, q, limits.workers) {
                        ArrowsOutcome::Avoidable(w) => w,
                        ArrowsOutcome::Arrows => unreachable!("n-1 < pattern order"),
                    },
                };
                let witness_free = verify_free(&witness, pattern).free();
                debug_assert!(witness_free);
                return Ok(RamseyCertificate {
                    pattern: pattern.clone(),
                    q,
                    value: n,
                    witness,
                    transcript: CertTranscript {
                        method: "pruned".to_string(),
                        witness_free,
                        arrows_at_value: true,
                        decision_millis,
                    },
                });
            }
        }
    }
    Err(SearchError::NoArrowingWithinLimit { limit })
}

/// The bound k!·C(N,k)·2^(1-dk/2) in exact arithmetic. When dk is odd the
/// half power is kept as a rational coefficient times sqrt(2).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExpectedCopyBound {
    pub k: u64,
    pub d: u64,
    pub n: u64,
    /// Rational coefficient r; the bound is r when `sqrt2` is false and
    /// r·sqrt(2) when true.
    pub rational: BigRational,
    pub sqrt2: bool,
}

impl ExpectedCopyBound {
    pub fn value_f64(&self) -> f64 {
        let base = self.rational.to_f64().unwrap_or(f64::NAN);
        if self.sqrt2 {
            base * std::f64::consts::SQRT_2
        } else {
            base
        }
    }

    /// Exact comparison against a rational threshold; no floating point.
    pub fn less_than(&self, threshold: &BigRational) -> bool {
        if !self.sqrt2 {
            return self.rational < *threshold;
        }
        if threshold.is_negative() || threshold.is_zero() {
            return false; // the bound is never negative
        }
        // r·sqrt(2) < t  <=>  2r^2 < t^2 for r, t >= 0
        let two = BigRational::from_integer(BigInt::from(2));
        &self.rational * &self.rational * two < threshold * threshold
    }
}

impl std::fmt::Display for ExpectedCopyBound {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.sqrt2 {
            write!(f, "{}*sqrt(2)", self.rational)
        } else {
            write!(f, "{}", self.rational)
        }
    }
}

fn factorial(k: u64) -> BigInt {
    (1..=k).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..k {
        num *= BigInt::from(n - i);
        den *= BigInt::from(i + 1);
    }
    num / den
}

fn pow2_rational(exp: i64) -> BigRational {
    let mag = BigInt::one() << exp.unsigned_abs() as usize;
    if exp >= 0 {
        BigRational::from_integer(mag)
    } else {
        BigRational::new(BigInt::one(), mag)
    }
}

/// Expected number of labeled monochromatic copies of a k-vertex pattern
/// with minimum degree >= d in a random 2-coloring of K_N, bounded by
/// k!·C(N,k)·2^(1-dk/2), evaluated exactly. N < k is allowed and gives 0.
pub fn expected_mono_copies(k: u64, d: u64, n: u64) -> Result<ExpectedCopyBound, SearchError> {
    if k < 2 || d < 1 {
        return Err(SearchError::BoundParams { k, d });
    }
    let coeff = BigRational::from_integer(factorial(k) * binomial(n, k));
    // exponent of sqrt(2): 2 - dk
    let e = 2i64 - (d as i64) * (k as i64);
    let (pow, sqrt2) = if e % 2 == 0 {
        (pow2_rational(e / 2), false)
    } else {
        (pow2_rational((e - 1) / 2), true)
    };
    Ok(ExpectedCopyBound {
        k,
        d,
        n,
        rational: coeff * pow,
        sqrt2,
    })
}

fn isqrt_u64(x: u64) -> u64 {
    let mut r = (x as f64).sqrt() as u64;
    while r > 0 && r * r > x {
        r -= 1;
    }
    while (r + 1).checked_mul(r + 1).is_some_and(|sq| sq <= x) {
        r += 1;
    }
    r
}

/// ceil(2^(d/2)); exact for even d, floor(sqrt(2^d)) + 1 for odd d since
/// odd powers of two are never perfect squares.
fn ceil_pow2_half(d: usize) -> usize {
    if d % 2 == 0 {
        1usize << (d / 2)
    } else {
        (isqrt_u64(1u64 << d) + 1) as usize
    }
}

/// Count distinct monochromatic copies of the core (identified by image
/// edge set) across both colors, stopping at `cap`. Also returns the
/// lexicographically smallest image edge set seen.
fn count_mono_copies(
    coloring: &EdgeColoring,
    core: &Graph,
    cap: usize,
) -> (usize, Option<Vec<(usize, usize)>>) {
    let mut images: BTreeSet<Vec<(usize, usize)>> = BTreeSet::new();
    let order = core.degeneracy_order().order;
    for c in 0..coloring.color_count() {
        let class = coloring.color_class(c);
        if images.len() >= cap {
            break;
        }
        enumerate_images(&class, core, &order, 0, &mut vec![usize::MAX; core.vertex_count()],
            &mut vec![false; class.vertex_count()], &mut images, cap);
    }
    let count = images.len();
    let first = images.into_iter().next();
    (count, first)
}

#[allow(clippy::too_many_arguments)]
fn enumerate_images(
    class: &Graph,
    core: &Graph,
    order: &[usize],
    idx: usize,
    map: &mut Vec<usize>,
    used: &mut Vec<bool>,
    images: &mut BTreeSet<Vec<(usize, usize)>>,
    cap: usize,
) -> bool {
    if images.len() >= cap {
        return true;
    }
    if idx == order.len() {
        let mut edges: Vec<(usize, usize)> = core
            .edges()
            .map(|(a, b)| {
                let (x, y) = (map[a], map[b]);
                if x < y {
                    (x, y)
                } else {
                    (y, x)
                }
            })
            .collect();
        edges.sort_unstable();
        images.insert(edges);
        return images.len() >= cap;
    }
    let gv = order[idx];
    for hv in 0..class.vertex_count() {
        if used[hv] {
            continue;
        }
        let ok = core
            .neighbors(gv)
            .iter()
            .filter(|&gu| map[gu] != usize::MAX)
            .all(|gu| class.has_edge(map[gu], hv));
        if !ok {
            continue;
        }
        map[gv] = hv;
        used[hv] = true;
        let done = enumerate_images(class, core, order, idx + 1, map, used, images, cap);
        used[hv] = false;
        map[gv] = usize::MAX;
        if done {
            return true;
        }
    }
    false
}

/// Randomized lower-bound witness: sample 2-colorings of K_N, N = ceil(2^(d/2)),
/// until one has at most one monochromatic copy of the core; delete one
/// vertex of that copy (vertex 0 when there is none) and return the
/// copy-free coloring on N-1 vertices. None when the budget runs out.
pub fn random_lb_witness(
    core: &Graph,
    d: usize,
    attempts: usize,
    seed: u64,
    limits: &SearchLimits,
) -> Result<Option<EdgeColoring>, SearchError> {
    if d < 1 || core.min_degree() < d {
        return Err(SearchError::CoreDegree {
            min_degree: core.min_degree(),
            d,
        });
    }
    let n = ceil_pow2_half(d);
    let limit = limits.effective_max_n();
    if n > limit {
        return Err(SearchError::LimitExceeded { n, limit });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pairs = n * (n - 1) / 2;
    for _ in 0..attempts {
        let colors: Vec<u8> = (0..pairs).map(|_| rng.gen_range(0..2u8)).collect();
        let coloring = EdgeColoring::from_colors(n, 2, colors).unwrap();
        let (count, first) = count_mono_copies(&coloring, core, 2);
        if count >= 2 {
            continue;
        }
        let doomed = match first {
            Some(edges) => edges[0].0.min(edges[0].1),
            None => 0,
        };
        let reduced = coloring.delete_vertex(doomed);
        assert!(verify_free(&reduced, core).free());
        return Ok(Some(reduced));
    }
    Ok(None)
}
