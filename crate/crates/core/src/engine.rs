//! Pruned depth-first enumeration of the central subarrangements of `J_n`.
//!
//! Walls are added in canonical order. Each DFS node owns a [`ParityDsu`]
//! snapshot implicitly: descending relates or pins one more wall, ascending
//! rolls it back. Centrality is closed under taking subsets, so a
//! non-central node cuts its whole subtree. A `{0_i, 1_i}` pair is cut
//! before it reaches the DSU.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::arrangement::{type_one_count, ArrangementSpace, Subarrangement, Wall};
use crate::dsu::ParityDsu;
use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::scalar::{from_i64, ExactInt};

/// Largest `n` for which exhaustive enumeration is supported.
pub const EXHAUSTIVE_CAP: usize = 6;

fn check_cap(space: &ArrangementSpace) -> Result<()> {
    if space.n() > EXHAUSTIVE_CAP {
        return Err(Error::DimensionCap { n: space.n(), cap: EXHAUSTIVE_CAP });
    }
    Ok(())
}

struct Walker<'a> {
    walls: &'a [Wall],
    pairs: usize,
    dsu: ParityDsu,
    current: Subarrangement,
}

impl<'a> Walker<'a> {
    fn new(space: &'a ArrangementSpace) -> Result<Self> {
        Ok(Walker { walls: space.walls(), pairs: type_one_count(space.n()), dsu: ParityDsu::new(space.n()), current: space.empty()? })
    }

    /// Adds wall `index`; returns false (leaving the DSU possibly dirty) if
    /// the result is not central.
    fn push(&mut self, index: usize) -> bool {
        match self.walls[index] {
            Wall::TypeI { alpha, beta } => {
                self.dsu.relate(alpha - 1, beta - 1, 1);
            }
            Wall::TypeII { vertex, level } => {
                // the opposite level sits at the neighbouring index
                let partner = self.pairs + ((index - self.pairs) ^ 1);
                debug_assert_eq!(self.walls[partner], Wall::TypeII { vertex, level: level.flip() });
                if self.current.contains_index(partner) {
                    return false;
                }
                self.dsu.pin(vertex - 1, level.value());
            }
        }
        self.current = self.current.with_index(index);
        self.dsu.ground_consistent()
    }

    fn dfs<F: FnMut(&Subarrangement, usize)>(&mut self, start: usize, visit: &mut F) {
        visit(&self.current, self.dsu.rank());
        for index in start..self.walls.len() {
            let mark = self.dsu.checkpoint();
            let saved = self.current;
            if self.push(index) {
                self.dfs(index + 1, visit);
            }
            self.dsu.rollback(mark);
            self.current = saved;
        }
    }
}

/// Calls `visit(B, rank(B))` exactly once for every central subarrangement
/// `B`, the empty one included.
pub fn enumerate_central<F>(space: &ArrangementSpace, mut visit: F) -> Result<()>
where
    F: FnMut(&Subarrangement, usize),
{
    check_cap(space)?;
    let mut walker = Walker::new(space)?;
    walker.dfs(0, &mut visit);
    Ok(())
}

/// Number of leading walls fixed per shard for `jobs` workers.
pub fn shard_depth(space: &ArrangementSpace, jobs: usize) -> usize {
    let jobs = jobs.max(1);
    let bits = usize::BITS - (jobs - 1).leading_zeros();
    (bits as usize).min(space.len())
}

/// Runs the enumeration restricted to one shard: `prefix` decides walls
/// `0..depth` (bit `k` set means wall `k` is in).
pub fn enumerate_shard<F>(space: &ArrangementSpace, depth: usize, prefix: u64, mut visit: F) -> Result<()>
where
    F: FnMut(&Subarrangement, usize),
{
    check_cap(space)?;
    let mut walker = Walker::new(space)?;
    for index in 0..depth {
        if prefix >> index & 1 == 1 && !walker.push(index) {
            return Ok(());
        }
    }
    walker.dfs(depth, &mut visit);
    Ok(())
}

/// Per-shard tallies folded in parallel on a pool of `jobs` threads.
fn sharded<A, Init, Step, Merge>(space: &ArrangementSpace, jobs: usize, init: Init, step: Step, merge: Merge) -> Result<A>
where
    A: Send,
    Init: Fn() -> A + Sync + Send,
    Step: Fn(&mut A, &Subarrangement, usize) + Sync + Send,
    Merge: Fn(A, A) -> A + Sync + Send,
{
    check_cap(space)?;
    if jobs <= 1 {
        let mut acc = init();
        enumerate_central(space, |b, r| step(&mut acc, b, r))?;
        return Ok(acc);
    }
    let depth = shard_depth(space, jobs);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .expect("failed to start worker pool");
    pool.install(|| {
        (0..1u64 << depth)
            .into_par_iter()
            .map(|prefix| {
                let mut acc = init();
                enumerate_shard(space, depth, prefix, |b, r| step(&mut acc, b, r))?;
                Ok(acc)
            })
            .try_reduce(&init, |a, b| Ok(merge(a, b)))
    })
}

/// Counts of central subarrangements keyed by `(eps, nu, rank)`, where
/// `eps` counts type I walls and `nu` type II walls.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CensusTable {
    pub n: usize,
    pub counts: BTreeMap<(usize, usize, usize), u64>,
}

impl CensusTable {
    pub fn new(n: usize) -> Self {
        CensusTable { n, counts: BTreeMap::new() }
    }

    pub fn record(&mut self, sub: &Subarrangement, rank: usize) {
        let (eps, nu) = sub.type_counts();
        *self.counts.entry((eps, nu, rank)).or_insert(0) += 1;
    }

    pub fn merge(mut self, other: CensusTable) -> CensusTable {
        for (k, v) in other.counts {
            *self.counts.entry(k).or_insert(0) += v;
        }
        self
    }

    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }

    /// `(|B|, rank) -> count`.
    pub fn by_size_rank(&self) -> BTreeMap<(usize, usize), u64> {
        let mut out = BTreeMap::new();
        for (&(eps, nu, rank), &c) in &self.counts {
            *out.entry((eps + nu, rank)).or_insert(0) += c;
        }
        out
    }

    /// `(eps, nu) -> r_{eps,nu}`.
    pub fn by_eps_nu(&self) -> BTreeMap<(usize, usize), u64> {
        let mut out = BTreeMap::new();
        for (&(eps, nu, _), &c) in &self.counts {
            *out.entry((eps, nu)).or_insert(0) += c;
        }
        out
    }

    pub fn r(&self, eps: usize, nu: usize) -> u64 {
        self.by_eps_nu().get(&(eps, nu)).copied().unwrap_or(0)
    }

    /// Rebuilds `Σ count · (-1)^size · t^(n - rank)` from the table.
    pub fn char_poly_in<T: ExactInt>(&self) -> Polynomial<T> {
        let mut coeffs = vec![T::zero(); self.n + 1];
        for (&(size, rank), &count) in &self.by_size_rank() {
            let count: T = from_i64(i64::try_from(count).expect("census count fits in i64"));
            let k = self.n - rank;
            coeffs[k] = if size % 2 == 0 { coeffs[k].clone() + count } else { coeffs[k].clone() - count };
        }
        Polynomial::new(coeffs)
    }

    pub fn char_poly(&self) -> Polynomial<i64> {
        self.char_poly_in()
    }
}

/// Census from one enumeration pass, optionally sharded over `jobs` threads.
pub fn census_with_jobs(space: &ArrangementSpace, jobs: usize) -> Result<CensusTable> {
    let n = space.n();
    sharded(space, jobs, || CensusTable::new(n), |t, b, r| t.record(b, r), CensusTable::merge)
}

pub fn census(space: &ArrangementSpace) -> Result<CensusTable> {
    census_with_jobs(space, 1)
}

/// `χ(t) = Σ_B (-1)^|B| t^(n - rank B)` over central `B`, accumulated
/// directly during the walk.
pub fn char_poly_with_jobs(space: &ArrangementSpace, jobs: usize) -> Result<Polynomial<i64>> {
    let n = space.n();
    let coeffs = sharded(
        space,
        jobs,
        || vec![0i64; n + 1],
        |acc, b, rank| {
            acc[n - rank] += if b.len() % 2 == 0 { 1 } else { -1 };
        },
        |mut a, b| {
            a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
            a
        },
    )?;
    Ok(Polynomial::new(coeffs))
}

pub fn char_poly(space: &ArrangementSpace) -> Result<Polynomial<i64>> {
    char_poly_with_jobs(space, 1)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RegionCounts<T> {
    pub regions: T,
    pub bounded: T,
}

/// Region counts of an essential arrangement in dimension `n` from its
/// characteristic polynomial: `(-1)^n χ(-1)` regions, `(-1)^n χ(1)` bounded.
pub fn region_counts<T: ExactInt>(chi: &Polynomial<T>, n: usize) -> RegionCounts<T> {
    let sign = |v: T| if n.is_multiple_of(2) { v } else { -v };
    RegionCounts { regions: sign(chi.eval(&-T::one())), bounded: sign(chi.eval(&T::one())) }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn space(n: usize) -> ArrangementSpace {
        ArrangementSpace::new(n).unwrap()
    }

    fn visits(n: usize) -> usize {
        let mut k = 0;
        enumerate_central(&space(n), |_, _| k += 1).unwrap();
        k
    }

    #[test]
    fn visit_counts() {
        assert_eq!(visits(1), 3);
        assert_eq!(visits(2), 1 + 5 + 8 + 2);
        assert_eq!(visits(3), 1 + 9 + 33 + 6 + 51 + 30 + 6);
    }

    #[test]
    fn n1_visits_empty_and_both_walls() {
        let s = space(1);
        let mut seen = Vec::new();
        enumerate_central(&s, |b, r| seen.push((b.bits(), r))).unwrap();
        seen.sort();
        assert_eq!(seen, vec![(0, 0), (1, 1), (2, 1)]);
    }

    #[test]
    fn polynomials_for_small_n() {
        assert_eq!(char_poly(&space(1)).unwrap().coeffs(), &[-2, 1]);
        assert_eq!(char_poly(&space(2)).unwrap().coeffs(), &[6, -5, 1]);
        assert_eq!(char_poly(&space(3)).unwrap().coeffs(), &[-27, 27, -9, 1]);
    }

    #[test]
    fn region_counts_small_n() {
        let rc = |n| {
            let chi = char_poly(&space(n)).unwrap();
            let r = region_counts(&chi, n);
            (r.regions, r.bounded)
        };
        assert_eq!(rc(1), (3, 1));
        assert_eq!(rc(2), (12, 2));
        assert_eq!(rc(3), (64, 8));
    }

    #[test]
    fn census_n2() {
        let c = census(&space(2)).unwrap().by_size_rank();
        assert_eq!(c.get(&(1, 1)), Some(&5));
        assert_eq!(c.get(&(2, 2)), Some(&8));
        assert_eq!(c.get(&(3, 2)), Some(&2));
    }

    #[test]
    fn census_n3_table() {
        let t = census(&space(3)).unwrap();
        let expected = BTreeMap::from([
            ((0, 0), 1),
            ((1, 1), 9),
            ((2, 2), 33),
            ((3, 2), 6),
            ((3, 3), 51),
            ((4, 3), 30),
            ((5, 3), 6),
        ]);
        assert_eq!(t.by_size_rank(), expected);
        assert_eq!(t.r(0, 2), 12);
        assert_eq!(t.r(2, 1), 18);
        assert_eq!(t.r(1, 3), 12);
        assert_eq!(t.r(2, 3), 6);
        assert_eq!(t.r(3, 2), 0);
        assert_eq!(t.char_poly(), char_poly(&space(3)).unwrap());
    }

    #[test]
    fn leading_coefficients() {
        for n in 1..=5 {
            let chi = char_poly(&space(n)).unwrap();
            assert_eq!(chi.degree(), Some(n));
            assert_eq!(chi.coeff(n), 1);
            assert_eq!(chi.coeff(n - 1), -((n * (n - 1) / 2 + 2 * n) as i64));
        }
    }

    #[test]
    fn sharding_matches_serial() {
        for n in 1..=4 {
            let s = space(n);
            let serial = census(&s).unwrap();
            for jobs in [2, 3, 8] {
                assert_eq!(census_with_jobs(&s, jobs).unwrap(), serial);
                assert_eq!(char_poly_with_jobs(&s, jobs).unwrap(), serial.char_poly());
            }
        }
    }

    #[test]
    fn shard_depth_is_ceil_log2() {
        let s = space(3);
        assert_eq!(shard_depth(&s, 1), 0);
        assert_eq!(shard_depth(&s, 2), 1);
        assert_eq!(shard_depth(&s, 3), 2);
        assert_eq!(shard_depth(&s, 8), 3);
        assert_eq!(shard_depth(&s, 9), 4);
        assert_eq!(shard_depth(&space(1), 64), 2);
    }

    #[test]
    fn cap_enforced() {
        let s = space(7);
        assert!(matches!(char_poly(&s), Err(Error::DimensionCap { n: 7, cap: 6 })));
        assert!(enumerate_central(&s, |_, _| {}).is_err());
    }
}
