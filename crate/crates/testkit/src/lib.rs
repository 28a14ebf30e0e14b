//! Brute-force oracles for the wallgraph test suites.
//!
//! Nothing here depends on the `wallgraph` crate: the wall list, the linear
//! algebra (plain Gaussian elimination over rationals) and the point counts
//! are written out independently so they can check the engine rather than
//! echo it.

use std::collections::{BTreeMap, BTreeSet};

use num_rational::Ratio;
use num_traits::{One, Zero};
use rand::Rng;

pub type Q = Ratio<i64>;

/// One wall as `(coefficients, rhs)` over `n` unknowns.
pub type Row = (Vec<i64>, i64);

/// Walls of `J_n` in canonical order: pairs lexicographically, then
/// `x_1 = 0, x_1 = 1, x_2 = 0, ...`.
pub fn walls(n: usize) -> Vec<Row> {
    let mut out = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            let mut r = vec![0; n];
            r[a] = 1;
            r[b] = 1;
            out.push((r, 1));
        }
    }
    for i in 0..n {
        for level in 0..2 {
            let mut r = vec![0; n];
            r[i] = 1;
            out.push((r, level));
        }
    }
    out
}

pub fn rows_of(n: usize, bits: u64) -> Vec<Row> {
    walls(n)
        .into_iter()
        .enumerate()
        .filter(|(k, _)| bits >> k & 1 == 1)
        .map(|(_, r)| r)
        .collect()
}

/// `(rank A, rank [A|b])` by Gauss-Jordan over `Q` with partial pivoting
/// on nonzero entries.
pub fn rational_ranks(n: usize, rows: &[Row]) -> (usize, usize) {
    let mut m: Vec<Vec<Q>> = rows
        .iter()
        .map(|(a, b)| a.iter().chain(std::iter::once(b)).map(|&v| Q::from_integer(v)).collect())
        .collect();
    let rank_of = |m: &mut Vec<Vec<Q>>, cols: usize| -> usize {
        let mut rank = 0;
        for c in 0..cols {
            let Some(p) = (rank..m.len()).find(|&i| !m[i][c].is_zero()) else { continue };
            m.swap(rank, p);
            let pivot = m[rank][c];
            for j in 0..m[rank].len() {
                m[rank][j] /= pivot;
            }
            for i in 0..m.len() {
                if i != rank && !m[i][c].is_zero() {
                    let f = m[i][c];
                    for j in 0..m[i].len() {
                        let v = m[rank][j];
                        m[i][j] -= f * v;
                    }
                }
            }
            rank += 1;
        }
        rank
    };
    let mut a_only = m.clone();
    let rank_a = rank_of(&mut a_only, n);
    let rank_ab = rank_of(&mut m, n + 1);
    (rank_a, rank_ab)
}

pub fn consistent(n: usize, bits: u64) -> bool {
    let (a, ab) = rational_ranks(n, &rows_of(n, bits));
    a == ab
}

/// Every central subset of `J_n` with its rank, by checking all `2^N`
/// subsets.
pub fn brute_central_sets(n: usize) -> BTreeMap<u64, usize> {
    let total = walls(n).len();
    (0..1u64 << total)
        .filter_map(|bits| {
            let (a, ab) = rational_ranks(n, &rows_of(n, bits));
            (a == ab).then_some((bits, a))
        })
        .collect()
}

/// Whitney sum `Σ (-1)^|B| t^(n - rank B)`, ascending coefficients.
pub fn brute_chi(n: usize) -> Vec<i64> {
    let mut c = vec![0i64; n + 1];
    for (bits, rank) in brute_central_sets(n) {
        c[n - rank] += if bits.count_ones() % 2 == 0 { 1 } else { -1 };
    }
    c
}

/// Points of `F_q^n` on no wall, scanning the whole box and testing every
/// wall equation directly.
pub fn brute_point_count(n: usize, q: i64) -> u64 {
    let ws = walls(n);
    let mut x = vec![0i64; n];
    let mut count = 0;
    loop {
        let on_wall = ws.iter().any(|(a, b)| {
            let lhs: i64 = a.iter().zip(&x).map(|(u, v)| u * v).sum();
            (lhs - b).rem_euclid(q) == 0
        });
        if !on_wall {
            count += 1;
        }
        let mut k = 0;
        loop {
            if k == n {
                return count;
            }
            x[k] += 1;
            if x[k] < q {
                break;
            }
            x[k] = 0;
            k += 1;
        }
    }
}

/// Evaluates ascending coefficients at `t`.
pub fn eval(coeffs: &[i64], t: i64) -> i64 {
    coeffs.iter().rev().fold(0, |acc, c| acc * t + c)
}

/// Parities of all simple paths from `from` to `to` (a path of length 0
/// when they coincide).
pub fn path_parities(adj: &BTreeMap<usize, Vec<usize>>, from: usize, to: usize) -> BTreeSet<usize> {
    fn walk(
        adj: &BTreeMap<usize, Vec<usize>>,
        at: usize,
        to: usize,
        len: usize,
        seen: &mut BTreeSet<usize>,
        out: &mut BTreeSet<usize>,
    ) {
        if at == to {
            out.insert(len % 2);
            return;
        }
        for &w in adj.get(&at).map(Vec::as_slice).unwrap_or(&[]) {
            if seen.insert(w) {
                walk(adj, w, to, len + 1, seen, out);
                seen.remove(&w);
            }
        }
    }
    let mut out = BTreeSet::new();
    let mut seen = BTreeSet::from([from]);
    walk(adj, from, to, 0, &mut seen, &mut out);
    out
}

/// Checks a claimed solution against rows exactly.
pub fn solves(rows: &[Row], point: &[Q]) -> bool {
    rows.iter().all(|(a, b)| {
        let lhs = a.iter().zip(point).fold(Q::zero(), |acc, (u, x)| acc + Q::from_integer(*u) * x);
        lhs == Q::from_integer(*b)
    })
}

/// Lagrange interpolation through `(x, y)` pairs over `Q`, written with
/// Newton divided differences so it shares no code path with the engine.
pub fn newton_interpolate(points: &[(i64, i64)]) -> Vec<Q> {
    let k = points.len();
    let xs: Vec<Q> = points.iter().map(|p| Q::from_integer(p.0)).collect();
    let mut dd: Vec<Q> = points.iter().map(|p| Q::from_integer(p.1)).collect();
    for level in 1..k {
        for i in (level..k).rev() {
            dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - level]);
        }
    }
    // expand Σ dd[i] Π_{j<i} (t - x_j)
    let mut coeffs = vec![Q::zero(); k];
    let mut basis = vec![Q::one()];
    for i in 0..k {
        for (c, b) in coeffs.iter_mut().zip(&basis) {
            *c += dd[i] * b;
        }
        let mut next = vec![Q::zero(); basis.len() + 1];
        for (j, b) in basis.iter().enumerate() {
            next[j + 1] += *b;
            next[j] -= xs[i] * b;
        }
        basis = next;
    }
    coeffs
}

/// A 3-colored graph as plain data: 1-based edges and `(vertex, color)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphSpec {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
    pub colors: Vec<(usize, u8)>,
}

/// Random graph on `[n]` that is central by construction: each vertex gets
/// a hidden value in {0, 1, 1/2}, edges join only a 0 with a 1 or two
/// halves, and colors are copied from 0/1 vertices. The hidden point lies
/// on every wall.
pub fn planted_central(rng: &mut impl Rng, n: usize) -> GraphSpec {
    let hidden: Vec<u8> = (0..n).map(|_| rng.gen_range(0..3)).collect();
    let mut g = GraphSpec { n, edges: Vec::new(), colors: Vec::new() };
    for a in 1..=n {
        for b in a + 1..=n {
            let (x, y) = (hidden[a - 1], hidden[b - 1]);
            let sums_to_one = (x == 2 && y == 2) || (x < 2 && y < 2 && x != y);
            if sums_to_one && rng.gen_bool(0.6) {
                g.edges.push((a, b));
            }
        }
        if hidden[a - 1] < 2 && rng.gen_bool(0.5) {
            g.colors.push((a, hidden[a - 1]));
        }
    }
    g
}
