//! Serializable output records. Field order is the emitted key order.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use wallgraph::{CensusTable, ColoredGraph, Elimination, Wall};

/// `chi` output: `{"n", "chi", "regions", "bounded", "census_size_rank",
/// "census_eps_nu"}`, coefficients ascending.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChiReport {
    pub n: usize,
    pub chi: Vec<i64>,
    pub regions: i64,
    pub bounded: i64,
    pub census_size_rank: Vec<[u64; 3]>,
    pub census_eps_nu: Vec<[u64; 3]>,
}

impl ChiReport {
    pub fn new(chi: &wallgraph::CharPoly, census: &CensusTable) -> Self {
        let n = census.n;
        let rc = wallgraph::region_counts(chi, n);
        ChiReport {
            n,
            chi: (0..=n).map(|k| chi.coeff(k)).collect(),
            regions: rc.regions,
            bounded: rc.bounded,
            census_size_rank: triples(census.by_size_rank()),
            census_eps_nu: triples(census.by_eps_nu()),
        }
    }
}

/// `census` output in JSON form.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusReport {
    pub n: usize,
    pub census_size_rank: Vec<[u64; 3]>,
    pub census_eps_nu: Vec<[u64; 3]>,
}

impl CensusReport {
    pub fn new(census: &CensusTable) -> Self {
        CensusReport {
            n: census.n,
            census_size_rank: triples(census.by_size_rank()),
            census_eps_nu: triples(census.by_eps_nu()),
        }
    }
}

fn triples(map: BTreeMap<(usize, usize), u64>) -> Vec<[u64; 3]> {
    map.into_iter().map(|((a, b), c)| [a as u64, b as u64, c]).collect()
}

/// `graph` output: uncolored vertices appear in `vertices` only.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphDump {
    pub vertices: Vec<usize>,
    pub edges: Vec<[usize; 2]>,
    pub colors: BTreeMap<usize, u8>,
}

impl From<&ColoredGraph> for GraphDump {
    fn from(g: &ColoredGraph) -> Self {
        GraphDump {
            vertices: g.vertices().iter().copied().collect(),
            edges: g.edges().iter().map(|&(a, b)| [a, b]).collect(),
            colors: g.colors().iter().map(|(&v, c)| (v, c.value())).collect(),
        }
    }
}

/// `rank` output; witness coordinates are written as `p/q` strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RankDump {
    #[serde(rename = "rank_A")]
    pub rank_a: usize,
    #[serde(rename = "rank_Ab")]
    pub rank_ab: usize,
    pub consistent: bool,
    pub witness: Option<Vec<String>>,
}

impl From<&Elimination> for RankDump {
    fn from(e: &Elimination) -> Self {
        RankDump {
            rank_a: e.rank_a,
            rank_ab: e.rank_ab,
            consistent: e.consistent,
            witness: e.witness.as_ref().map(|w| w.iter().map(|x| x.to_string()).collect()),
        }
    }
}

/// One line of `walls` output.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type")]
pub enum WallDump {
    I { alpha: usize, beta: usize },
    II { vertex: usize, level: u8 },
}

impl From<Wall> for WallDump {
    fn from(w: Wall) -> Self {
        match w {
            Wall::TypeI { alpha, beta } => WallDump::I { alpha, beta },
            Wall::TypeII { vertex, level } => WallDump::II { vertex, level: level.value() },
        }
    }
}

impl WallDump {
    pub fn fields(&self) -> [String; 3] {
        match *self {
            WallDump::I { alpha, beta } => ["I".into(), alpha.to_string(), beta.to_string()],
            WallDump::II { vertex, level } => ["II".into(), vertex.to_string(), level.to_string()],
        }
    }
}
