//! Pattern family mini-language: `clique:k`, `path:n`, `cycle:n`,
//! `hkn:k,n`, `gkn:k,n`, `hprime:k,n`, or `file:PATH` pointing at a
//! `GRAPH` text file.

use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use thiserror::Error;

use crate::graph::{Graph, GraphParseError};

#[derive(Debug, Error)]
pub enum PatternError {
    #[error("pattern must look like `kind:params`, got `{0}`")]
    BadShape(String),
    #[error("unknown pattern kind `{0}`")]
    UnknownKind(String),
    #[error("pattern `{kind}` expects {expected}, got `{params}`")]
    BadParams {
        kind: String,
        expected: &'static str,
        params: String,
    },
    #[error("hkn needs 1 <= k <= n, got k={k} n={n}")]
    HknRange { k: usize, n: usize },
    #[error("gkn needs 1 <= k <= n, got k={k} n={n}")]
    GknRange { k: usize, n: usize },
    #[error("hprime needs 1 <= k <= n and k | n, got k={k} n={n}")]
    HprimeRange { k: usize, n: usize },
    #[error("cycle needs at least 3 vertices, got {0}")]
    CycleTooShort(usize),
    #[error("failed to read pattern file {path}: {source}")]
    FileRead {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("failed to parse pattern file {path}: {source}")]
    FileParse {
        path: PathBuf,
        source: GraphParseError,
    },
}

/// A graph family plus its parameters; `build` instantiates the graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PatternSpec {
    /// K_k.
    Clique { k: usize },
    /// Path on n vertices.
    Path { n: usize },
    /// Cycle on n vertices (n >= 3).
    Cycle { n: usize },
    /// K_k on vertices 0..k plus n-k isolated vertices.
    Hkn { k: usize, n: usize },
    /// Hkn plus an apex (vertex n) joined to everything.
    Gkn { k: usize, n: usize },
    /// n/k disjoint copies of K_k on consecutive blocks.
    Hprime { k: usize, n: usize },
    /// Arbitrary graph loaded from a `GRAPH` file.
    File { path: PathBuf },
}

impl PatternSpec {
    pub fn build(&self) -> Result<Graph, PatternError> {
        match self {
            PatternSpec::Clique { k } => Ok(Graph::complete(*k)),
            PatternSpec::Path { n } => Ok(Graph::path(*n)),
            PatternSpec::Cycle { n } => {
                if *n < 3 {
                    return Err(PatternError::CycleTooShort(*n));
                }
                Ok(Graph::cycle(*n))
            }
            PatternSpec::Hkn { k, n } => {
                if *k < 1 || k > n {
                    return Err(PatternError::HknRange { k: *k, n: *n });
                }
                let mut g = Graph::new(*n);
                for u in 0..*k {
                    for v in u + 1..*k {
                        g.add_edge(u, v).unwrap();
                    }
                }
                Ok(g)
            }
            PatternSpec::Gkn { k, n } => {
                if *k < 1 || k > n {
                    return Err(PatternError::GknRange { k: *k, n: *n });
                }
                let mut g = Graph::new(n + 1);
                for u in 0..*k {
                    for v in u + 1..*k {
                        g.add_edge(u, v).unwrap();
                    }
                }
                for v in 0..*n {
                    g.add_edge(v, *n).unwrap();
                }
                Ok(g)
            }
            PatternSpec::Hprime { k, n } => {
                if *k < 1 || k > n || *n % *k != 0 {
                    return Err(PatternError::HprimeRange { k: *k, n: *n });
                }
                let mut g = Graph::new(*n);
                for block in 0..(n / k) {
                    let base = block * k;
                    for u in 0..*k {
                        for v in u + 1..*k {
                            g.add_edge(base + u, base + v).unwrap();
                        }
                    }
                }
                Ok(g)
            }
            PatternSpec::File { path } => {
                let text = std::fs::read_to_string(path).map_err(|source| {
                    PatternError::FileRead {
                        path: path.clone(),
                        source,
                    }
                })?;
                Graph::parse(&text).map_err(|source| PatternError::FileParse {
                    path: path.clone(),
                    source,
                })
            }
        }
    }
}

impl fmt::Display for PatternSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PatternSpec::Clique { k } => write!(f, "clique:{k}"),
            PatternSpec::Path { n } => write!(f, "path:{n}"),
            PatternSpec::Cycle { n } => write!(f, "cycle:{n}"),
            PatternSpec::Hkn { k, n } => write!(f, "hkn:{k},{n}"),
            PatternSpec::Gkn { k, n } => write!(f, "gkn:{k},{n}"),
            PatternSpec::Hprime { k, n } => write!(f, "hprime:{k},{n}"),
            PatternSpec::File { path } => write!(f, "file:{}", path.display()),
        }
    }
}

fn one_usize(kind: &str, params: &str) -> Result<usize, PatternError> {
    params.trim().parse().map_err(|_| PatternError::BadParams {
        kind: kind.to_string(),
        expected: "one integer",
        params: params.to_string(),
    })
}

fn two_usize(kind: &str, params: &str) -> Result<(usize, usize), PatternError> {
    let bad = || PatternError::BadParams {
        kind: kind.to_string(),
        expected: "two integers `k,n`",
        params: params.to_string(),
    };
    let (a, b) = params.split_once(',').ok_or_else(bad)?;
    let a = a.trim().parse().map_err(|_| bad())?;
    let b = b.trim().parse().map_err(|_| bad())?;
    Ok((a, b))
}

impl FromStr for PatternSpec {
    type Err = PatternError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (kind, params) = s
            .split_once(':')
            .ok_or_else(|| PatternError::BadShape(s.to_string()))?;
        let spec = match kind {
            "clique" => PatternSpec::Clique {
                k: one_usize(kind, params)?,
            },
            "path" => PatternSpec::Path {
                n: one_usize(kind, params)?,
            },
            "cycle" => PatternSpec::Cycle {
                n: one_usize(kind, params)?,
            },
            "hkn" => {
                let (k, n) = two_usize(kind, params)?;
                PatternSpec::Hkn { k, n }
            }
            "gkn" => {
                let (k, n) = two_usize(kind, params)?;
                PatternSpec::Gkn { k, n }
            }
            "hprime" => {
                let (k, n) = two_usize(kind, params)?;
                PatternSpec::Hprime { k, n }
            }
            "file" => PatternSpec::File {
                path: PathBuf::from(params),
            },
            other => return Err(PatternError::UnknownKind(other.to_string())),
        };
        // validate ranges eagerly so bad specs fail at parse time
        if !matches!(spec, PatternSpec::File { .. }) {
            spec.build()?;
        }
        Ok(spec)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_build_families() {
        let g: PatternSpec = "gkn:3,6".parse().unwrap();
        let graph = g.build().unwrap();
        assert_eq!(graph.vertex_count(), 7);
        assert_eq!(graph.edge_count(), 3 + 6);
        assert_eq!(graph.degree(6), 6);

        let h: PatternSpec = "hkn:3,6".parse().unwrap();
        let graph = h.build().unwrap();
        assert_eq!(graph.vertex_count(), 6);
        assert_eq!(graph.edge_count(), 3);
        assert_eq!(graph.degree(5), 0);

        let hp: PatternSpec = "hprime:3,6".parse().unwrap();
        let graph = hp.build().unwrap();
        assert_eq!(graph.vertex_count(), 6);
        assert_eq!(graph.edge_count(), 6);
        assert_eq!(graph.connected_components().len(), 2);

        let c: PatternSpec = "clique:4".parse().unwrap();
        assert_eq!(c.build().unwrap().edge_count(), 6);

        let p: PatternSpec = "path:5".parse().unwrap();
        assert_eq!(p.build().unwrap().edge_count(), 4);

        let cy: PatternSpec = "cycle:5".parse().unwrap();
        assert_eq!(cy.build().unwrap().edge_count(), 5);
    }

    #[test]
    fn parse_rejects_bad_specs() {
        assert!("clique".parse::<PatternSpec>().is_err());
        assert!("widget:3".parse::<PatternSpec>().is_err());
        assert!("clique:x".parse::<PatternSpec>().is_err());
        assert!("gkn:3".parse::<PatternSpec>().is_err());
        assert!("hkn:7,6".parse::<PatternSpec>().is_err());
        assert!("hprime:4,6".parse::<PatternSpec>().is_err());
        assert!("hprime:3,0".parse::<PatternSpec>().is_err());
        assert!("cycle:2".parse::<PatternSpec>().is_err());
        assert!("hkn:0,5".parse::<PatternSpec>().is_err());
    }

    #[test]
    fn display_round_trips() {
        for s in ["clique:4", "path:5", "cycle:6", "hkn:3,6", "gkn:2,3", "hprime:2,4"] {
            let spec: PatternSpec = s.parse().unwrap();
            assert_eq!(spec.to_string(), s);
            let again: PatternSpec = spec.to_string().parse().unwrap();
            assert_eq!(spec, again);
        }
    }

    #[test]
    fn file_pattern_round_trips() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("pat.graph");
        std::fs::write(&path, Graph::cycle(4).to_text()).unwrap();
        let spec: PatternSpec = format!("file:{}", path.display()).parse().unwrap();
        let g = spec.build().unwrap();
        assert_eq!(g, Graph::cycle(4));
    }
}
