//! Balance analytics for 2-colorings: exact color densities, bicolored
//! cherry counts, the common-neighborhood pair, reverse Jensen, the
//! sparse-clique order formula, and the neighborhood-chase traces.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::{One, ToPrimitive, Zero};
use thiserror::Error;

use crate::coloring::{find_mono_copy, EdgeColoring};
use crate::graph::{Embedding, Graph};

#[derive(Debug, Error)]
pub enum BalanceError {
    #[error("balance analysis needs exactly 2 colors, got {q}")]
    ColorCount { q: u8 },
    #[error("balance analysis needs at least 2 vertices, got {n}")]
    TooFewVertices { n: usize },
    #[error("reverse Jensen needs s > 0 and every sample in [0, s]")]
    JensenDomain,
    #[error("clique-order formula needs 0 < epsilon <= 1/2, N >= 2, a > 0")]
    EsDomain,
}

/// Render a non-negative rational to 6 decimal places, rounding half up.
pub fn render6(r: &BigRational) -> String {
    let scale = BigInt::from(1_000_000u32);
    let half = BigRational::new(BigInt::one(), BigInt::from(2u32));
    let scaled = (r * BigRational::from_integer(scale.clone()) + half)
        .floor()
        .to_integer();
    let int_part = &scaled / &scale;
    let frac_part = (&scaled % &scale).to_u64().unwrap();
    format!("{int_part}.{frac_part:06}")
}

/// Exact balance summary of a 2-coloring. `cherry_count` counts bicolored
/// cherries by centers, `cherry_pair_sum` recounts them as intersection
/// sizes over ordered pairs; the two must agree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BalanceReport {
    pub n: usize,
    pub densities: Vec<BigRational>,
    /// Largest epsilon for which the coloring is epsilon-balanced: the
    /// minimum color density, capped at 1/2.
    pub epsilon_star: BigRational,
    pub cherry_count: u64,
    pub cherry_pair_sum: u64,
    /// (v, w, |N_R(v) ∩ N_B(w)|), maximized over ordered pairs v != w,
    /// ties to the lexicographically smallest pair.
    pub best_pair: (usize, usize, usize),
}

impl BalanceReport {
    /// ceil(X / (N(N-1))): the averaging floor the best pair must meet.
    pub fn averaging_bound(&self) -> u64 {
        let pairs = (self.n as u64) * (self.n as u64 - 1);
        self.cherry_count.div_ceil(pairs)
    }

    /// (epsilon_star / 4)(N - 1): the common-neighborhood guarantee.
    pub fn common_nbhd_bound(&self) -> BigRational {
        let quarter = BigRational::new(BigInt::one(), BigInt::from(4u32));
        self.epsilon_star.clone() * quarter * BigRational::from_integer(BigInt::from(self.n - 1))
    }
}

impl std::fmt::Display for BalanceReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "N: {}", self.n)?;
        writeln!(f, "density_red: {}", render6(&self.densities[0]))?;
        writeln!(f, "density_blue: {}", render6(&self.densities[1]))?;
        writeln!(f, "epsilon_star: {}", render6(&self.epsilon_star))?;
        writeln!(f, "cherry_count: {}", self.cherry_count)?;
        writeln!(f, "cherry_pair_sum: {}", self.cherry_pair_sum)?;
        writeln!(f, "best_pair: ({}, {})", self.best_pair.0, self.best_pair.1)?;
        writeln!(f, "best_pair_size: {}", self.best_pair.2)?;
        writeln!(f, "averaging_bound: {}", self.averaging_bound())?;
        write!(f, "common_nbhd_bound: {}", render6(&self.common_nbhd_bound()))
    }
}

/// Compute the exact balance report of a 2-coloring on at least 2 vertices.
pub fn balance_report(coloring: &EdgeColoring) -> Result<BalanceReport, BalanceError> {
    if coloring.color_count() != 2 {
        return Err(BalanceError::ColorCount {
            q: coloring.color_count(),
        });
    }
    let n = coloring.vertex_count();
    if n < 2 {
        return Err(BalanceError::TooFewVertices { n });
    }
    let total = BigInt::from(n * (n - 1) / 2);
    let densities: Vec<BigRational> = coloring
        .color_counts()
        .iter()
        .map(|&c| BigRational::new(BigInt::from(c), total.clone()))
        .collect();
    let half = BigRational::new(BigInt::one(), BigInt::from(2u32));
    let epsilon_star = densities.iter().min().unwrap().clone().min(half);

    let red = coloring.color_class(0);
    let blue = coloring.color_class(1);
    let cherry_count: u64 = (0..n)
        .map(|u| {
            let r = red.degree(u) as u64;
            r * (n as u64 - 1 - r)
        })
        .sum();
    let mut cherry_pair_sum = 0u64;
    let mut best = (0usize, 1usize, 0usize);
    let mut first = true;
    for v in 0..n {
        for w in 0..n {
            if v == w {
                continue;
            }
            let size = red.neighbors(v).intersect_count(blue.neighbors(w));
            cherry_pair_sum += size as u64;
            if first || size > best.2 {
                best = (v, w, size);
                first = false;
            }
        }
    }
    Ok(BalanceReport {
        n,
        densities,
        epsilon_star,
        cherry_count,
        cherry_pair_sum,
        best_pair: best,
    })
}

/// Both sides of the reverse Jensen inequality
/// sum f(x_i) <= ((Ns - x)/s) f(0) + (x/s) f(s) for convex f on [0, s].
pub fn reverse_jensen_bound<F: Fn(f64) -> f64>(
    f: F,
    s: f64,
    xs: &[f64],
) -> Result<(f64, f64), BalanceError> {
    if !(s > 0.0) || xs.iter().any(|&x| !(0.0..=s).contains(&x)) {
        return Err(BalanceError::JensenDomain);
    }
    let n = xs.len() as f64;
    let x: f64 = xs.iter().sum();
    let lhs: f64 = xs.iter().map(|&xi| f(xi)).sum();
    let rhs = ((n * s - x) / s) * f(0.0) + (x / s) * f(s);
    Ok((lhs, rhs))
}

/// Monochromatic clique order promised in colorings whose sparser color has
/// density epsilon: (a / (epsilon log2(1/epsilon))) log2 N.
pub fn es_clique_order(epsilon: f64, n: usize, a: f64) -> Result<f64, BalanceError> {
    if !(epsilon > 0.0 && epsilon <= 0.5) || n < 2 || !(a > 0.0) {
        return Err(BalanceError::EsDomain);
    }
    Ok(a / (epsilon * (1.0 / epsilon).log2()) * (n as f64).log2())
}

/// Neighborhood chase from vertex 0: its majority-color neighborhood S,
/// the member w of S with the most opposite-color neighbors inside S, and
/// that opposite neighborhood T.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChaseTrace {
    pub v: usize,
    /// 0 when red is v's majority color (ties go to red), else 1.
    pub majority_color: u8,
    pub s: Vec<usize>,
    pub w: usize,
    pub t: Vec<usize>,
}

fn color_name(c: u8) -> &'static str {
    if c == 0 {
        "red"
    } else {
        "blue"
    }
}

fn index_list(xs: &[usize]) -> String {
    xs.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

impl std::fmt::Display for ChaseTrace {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "v: {}", self.v)?;
        writeln!(f, "majority_color: {}", color_name(self.majority_color))?;
        writeln!(f, "S_size: {}", self.s.len())?;
        writeln!(f, "S: {}", index_list(&self.s))?;
        writeln!(f, "w: {}", self.w)?;
        writeln!(f, "T_size: {}", self.t.len())?;
        write!(f, "T: {}", index_list(&self.t))
    }
}

pub fn chase_trace(coloring: &EdgeColoring) -> Result<ChaseTrace, BalanceError> {
    if coloring.color_count() != 2 {
        return Err(BalanceError::ColorCount {
            q: coloring.color_count(),
        });
    }
    let n = coloring.vertex_count();
    if n < 2 {
        return Err(BalanceError::TooFewVertices { n });
    }
    let red = coloring.color_class(0);
    let blue = coloring.color_class(1);
    let v = 0usize;
    let majority = if red.degree(v) >= blue.degree(v) { 0u8 } else { 1u8 };
    let (maj, opp) = if majority == 0 {
        (&red, &blue)
    } else {
        (&blue, &red)
    };
    let s_set = maj.neighbors(v).clone();
    let s = s_set.to_vec();
    let mut w = s[0];
    let mut wdeg = opp.neighbors(w).intersect_count(&s_set);
    for &cand in &s[1..] {
        let d = opp.neighbors(cand).intersect_count(&s_set);
        if d > wdeg {
            w = cand;
            wdeg = d;
        }
    }
    let t = opp.neighbors(w).intersect(&s_set).to_vec();
    Ok(ChaseTrace {
        v,
        majority_color: majority,
        s,
        w,
        t,
    })
}

/// The common-neighborhood trace: S = N_R(v) ∩ N_B(w) for the report's
/// best pair, searched for monochromatic copies of a pattern in both
/// colors, plus the arithmetic of the bound N + 1 <= (4/eps)|S| + 2.
#[derive(Clone, Debug)]
pub struct BalancedTrace {
    pub n: usize,
    pub v: usize,
    pub w: usize,
    pub s: Vec<usize>,
    /// Copies are reported in host-coloring vertex labels.
    pub red_copy: Option<Embedding>,
    pub blue_copy: Option<Embedding>,
    pub epsilon_star: BigRational,
}

impl BalancedTrace {
    pub fn free(&self) -> bool {
        self.red_copy.is_none() && self.blue_copy.is_none()
    }

    /// (4/epsilon_star)|S| + 2; None when epsilon_star = 0.
    pub fn bound_rhs(&self) -> Option<BigRational> {
        if self.epsilon_star.is_zero() {
            return None;
        }
        let four = BigRational::from_integer(BigInt::from(4u32));
        let two = BigRational::from_integer(BigInt::from(2u32));
        let size = BigRational::from_integer(BigInt::from(self.s.len()));
        Some(four / self.epsilon_star.clone() * size + two)
    }

    pub fn bound_holds(&self) -> Option<bool> {
        self.bound_rhs()
            .map(|rhs| BigRational::from_integer(BigInt::from(self.n + 1)) <= rhs)
    }
}

impl std::fmt::Display for BalancedTrace {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "v: {}", self.v)?;
        writeln!(f, "w: {}", self.w)?;
        writeln!(f, "S_size: {}", self.s.len())?;
        writeln!(f, "S: {}", index_list(&self.s))?;
        match &self.red_copy {
            Some(emb) => writeln!(f, "red_copy: {}", index_list(&emb.map))?,
            None => writeln!(f, "red_copy: none")?,
        }
        match &self.blue_copy {
            Some(emb) => writeln!(f, "blue_copy: {}", index_list(&emb.map))?,
            None => writeln!(f, "blue_copy: none")?,
        }
        writeln!(f, "verdict: {}", if self.free() { "free" } else { "copy" })?;
        writeln!(f, "bound_lhs: {}", self.n + 1)?;
        match self.bound_rhs() {
            Some(rhs) => {
                writeln!(f, "bound_rhs: {}", render6(&rhs))?;
                write!(f, "bound_holds: {}", self.bound_holds().unwrap())
            }
            None => {
                writeln!(f, "bound_rhs: n/a")?;
                write!(f, "bound_holds: n/a")
            }
        }
    }
}

fn remap(emb: Embedding, s: &[usize]) -> Embedding {
    Embedding {
        map: emb.map.iter().map(|&i| s[i]).collect(),
    }
}

pub fn balanced_trace(
    coloring: &EdgeColoring,
    pattern_h: &Graph,
) -> Result<BalancedTrace, BalanceError> {
    let report = balance_report(coloring)?;
    let (v, w, _) = report.best_pair;
    let red = coloring.color_class(0);
    let blue = coloring.color_class(1);
    let s = red.neighbors(v).intersect(blue.neighbors(w)).to_vec();
    let sub = coloring.induced(&s);
    let red_copy = find_mono_copy(&sub, pattern_h, 0).map(|e| remap(e, &s));
    let blue_copy = find_mono_copy(&sub, pattern_h, 1).map(|e| remap(e, &s));
    Ok(BalancedTrace {
        n: report.n,
        v,
        w,
        s,
        red_copy,
        blue_copy,
        epsilon_star: report.epsilon_star,
    })
}
