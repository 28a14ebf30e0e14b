//! The walls of `J_n`, their canonical indexing, and subarrangements as bitsets.
//!
//! Walls live in `R^n` and come in two families:
//!
//! * type I: `x_a + x_b = 1` for `1 <= a < b <= n`;
//! * type II: `x_i = 0` and `x_i = 1` for `1 <= i <= n`.
//!
//! The canonical order lists every type I wall in lexicographic `(a, b)`
//! order, followed by `(1, 0), (1, 1), (2, 0), (2, 1), ...`. Bit `k` of a
//! [`Subarrangement`] is wall `k` in this order; the hex serialization and the
//! DFS both depend on it.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::{from_i64, ExactInt};

/// Number of walls a 64-bit subarrangement can address (`n <= 9`).
pub const MAX_BITSET_WALLS: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Level {
    Zero,
    One,
}

impl Level {
    pub fn value(self) -> u8 {
        match self {
            Level::Zero => 0,
            Level::One => 1,
        }
    }

    pub fn from_value(v: u8) -> Option<Level> {
        match v {
            0 => Some(Level::Zero),
            1 => Some(Level::One),
            _ => None,
        }
    }

    pub fn flip(self) -> Level {
        match self {
            Level::Zero => Level::One,
            Level::One => Level::Zero,
        }
    }
}

/// One hyperplane of `J_n`. Vertices are 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Wall {
    /// `x_alpha + x_beta = 1`, stored with `alpha < beta`.
    TypeI { alpha: usize, beta: usize },
    /// `x_vertex = level`.
    TypeII { vertex: usize, level: Level },
}

impl Wall {
    /// Type I wall through an unordered pair; `pair(3, 1) == pair(1, 3)`.
    pub fn pair(a: usize, b: usize) -> Result<Wall> {
        if a == b {
            return Err(Error::DegeneratePair(a, b));
        }
        Ok(Wall::TypeI { alpha: a.min(b), beta: a.max(b) })
    }

    pub fn zero(vertex: usize) -> Wall {
        Wall::TypeII { vertex, level: Level::Zero }
    }

    pub fn one(vertex: usize) -> Wall {
        Wall::TypeII { vertex, level: Level::One }
    }

    pub fn is_type_one(&self) -> bool {
        matches!(self, Wall::TypeI { .. })
    }

    /// Coordinates appearing in the wall's equation.
    pub fn support(&self) -> impl Iterator<Item = usize> {
        let (a, b) = match *self {
            Wall::TypeI { alpha, beta } => (alpha, Some(beta)),
            Wall::TypeII { vertex, .. } => (vertex, None),
        };
        std::iter::once(a).chain(b)
    }

    fn check(&self, n: usize) -> Result<()> {
        for v in self.support() {
            if v == 0 || v > n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
        }
        if let Wall::TypeI { alpha, beta } = *self {
            if alpha >= beta {
                return Err(Error::DegeneratePair(alpha, beta));
            }
        }
        Ok(())
    }
}

impl fmt::Display for Wall {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Wall::TypeI { alpha, beta } => write!(f, "H{alpha},{beta}"),
            Wall::TypeII { vertex, level } => write!(f, "{}_{vertex}", level.value()),
        }
    }
}

/// `C(n, 2)`.
pub fn type_one_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// `N = C(n, 2) + 2n`.
pub fn wall_count(n: usize) -> usize {
    type_one_count(n) + 2 * n
}

/// Canonical position of `wall` in `J_n`. The wall must be valid for `n`.
pub fn wall_index(n: usize, wall: Wall) -> usize {
    match wall {
        Wall::TypeI { alpha, beta } => {
            let a = alpha - 1;
            a * n - a * (a + 1) / 2 + (beta - alpha - 1)
        }
        Wall::TypeII { vertex, level } => {
            type_one_count(n) + 2 * (vertex - 1) + level.value() as usize
        }
    }
}

/// Inverse of [`wall_index`].
pub fn wall_at(n: usize, index: usize) -> Wall {
    let pairs = type_one_count(n);
    if index >= pairs {
        let k = index - pairs;
        let level = if k.is_multiple_of(2) { Level::Zero } else { Level::One };
        return Wall::TypeII { vertex: k / 2 + 1, level };
    }
    let mut rest = index;
    let mut alpha = 1;
    while rest >= n - alpha {
        rest -= n - alpha;
        alpha += 1;
    }
    Wall::TypeI { alpha, beta: alpha + 1 + rest }
}

/// `J_n` with its walls in canonical order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArrangementSpace {
    n: usize,
    walls: Vec<Wall>,
}

impl ArrangementSpace {
    /// Builds `J_n`. Any `n >= 1` is accepted; subarrangement bitsets need
    /// `n <= 9` and exhaustive enumeration needs `n <= 6`.
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroDimension);
        }
        let mut walls = Vec::with_capacity(wall_count(n));
        for alpha in 1..=n {
            for beta in alpha + 1..=n {
                walls.push(Wall::TypeI { alpha, beta });
            }
        }
        for vertex in 1..=n {
            walls.push(Wall::zero(vertex));
            walls.push(Wall::one(vertex));
        }
        Ok(ArrangementSpace { n, walls })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn walls(&self) -> &[Wall] {
        &self.walls
    }

    pub fn len(&self) -> usize {
        self.walls.len()
    }

    pub fn is_empty(&self) -> bool {
        self.walls.is_empty()
    }

    pub fn index_of(&self, wall: Wall) -> Result<usize> {
        wall.check(self.n)?;
        Ok(wall_index(self.n, wall))
    }

    pub fn wall(&self, index: usize) -> Option<Wall> {
        self.walls.get(index).copied()
    }

    fn bitset_capable(&self) -> Result<()> {
        if self.len() > MAX_BITSET_WALLS {
            return Err(Error::TooManyWalls { n: self.n, walls: self.len() });
        }
        Ok(())
    }

    pub fn empty(&self) -> Result<Subarrangement> {
        self.bitset_capable()?;
        Ok(Subarrangement { n: self.n, bits: 0 })
    }

    /// Every wall of the space as one subarrangement.
    pub fn full(&self) -> Result<Subarrangement> {
        self.bitset_capable()?;
        Ok(Subarrangement { n: self.n, bits: low_mask(self.len()) })
    }

    pub fn subarrangement<I>(&self, walls: I) -> Result<Subarrangement>
    where
        I: IntoIterator<Item = Wall>,
    {
        let mut sub = self.empty()?;
        for w in walls {
            sub.bits |= 1u64 << self.index_of(w)?;
        }
        Ok(sub)
    }

    pub fn from_bits(&self, bits: u64) -> Result<Subarrangement> {
        self.bitset_capable()?;
        if bits & !low_mask(self.len()) != 0 {
            return Err(Error::BitsOutOfRange { bits, walls: self.len() });
        }
        Ok(Subarrangement { n: self.n, bits })
    }

    /// Parses the lowercase hex form produced by [`Subarrangement::to_hex`].
    /// An optional `0x` prefix and uppercase digits are tolerated.
    pub fn from_hex(&self, text: &str) -> Result<Subarrangement> {
        let digits = text.trim();
        let digits = digits
            .strip_prefix("0x")
            .or_else(|| digits.strip_prefix("0X"))
            .unwrap_or(digits);
        if digits.is_empty() || !digits.chars().all(|c| c.is_ascii_hexdigit()) {
            return Err(Error::InvalidHex(text.to_string()));
        }
        let bits = u64::from_str_radix(digits, 16).map_err(|_| Error::InvalidHex(text.to_string()))?;
        self.from_bits(bits)
    }
}

fn low_mask(len: usize) -> u64 {
    if len >= 64 {
        u64::MAX
    } else {
        (1u64 << len) - 1
    }
}

/// A subset of the walls of `J_n`, bit `k` standing for canonical wall `k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subarrangement {
    n: usize,
    bits: u64,
}

impl Subarrangement {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn contains(&self, wall: Wall) -> bool {
        wall.check(self.n).is_ok() && self.bits >> wall_index(self.n, wall) & 1 == 1
    }

    pub fn contains_index(&self, index: usize) -> bool {
        index < 64 && self.bits >> index & 1 == 1
    }

    /// Returns a copy with `wall` added.
    pub fn with(self, wall: Wall) -> Result<Subarrangement> {
        wall.check(self.n)?;
        Ok(Subarrangement { n: self.n, bits: self.bits | 1u64 << wall_index(self.n, wall) })
    }

    pub fn with_index(self, index: usize) -> Subarrangement {
        debug_assert!(index < wall_count(self.n));
        Subarrangement { n: self.n, bits: self.bits | 1u64 << index }
    }

    pub fn without_index(self, index: usize) -> Subarrangement {
        Subarrangement { n: self.n, bits: self.bits & !(1u64 << index) }
    }

    pub fn union(self, other: Subarrangement) -> Subarrangement {
        debug_assert_eq!(self.n, other.n);
        Subarrangement { n: self.n, bits: self.bits | other.bits }
    }

    pub fn is_subset_of(&self, other: &Subarrangement) -> bool {
        self.bits & !other.bits == 0
    }

    /// Canonical indices of the member walls, ascending.
    pub fn indices(&self) -> impl Iterator<Item = usize> + '_ {
        let mut rest = self.bits;
        std::iter::from_fn(move || {
            if rest == 0 {
                return None;
            }
            let i = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            Some(i)
        })
    }

    /// Member walls in canonical order.
    pub fn walls(&self) -> impl Iterator<Item = Wall> + '_ {
        self.indices().map(move |i| wall_at(self.n, i))
    }

    /// `(eps, nu)`: number of type I and of type II members.
    pub fn type_counts(&self) -> (usize, usize) {
        let type_two_mask = low_mask(wall_count(self.n)) & !low_mask(type_one_count(self.n));
        let nu = (self.bits & type_two_mask).count_ones() as usize;
        (self.len() - nu, nu)
    }

    /// First vertex `i` with both `0_i` and `1_i` present, if any.
    pub fn double_colored(&self) -> Option<usize> {
        let base = type_one_count(self.n);
        (1..=self.n).find(|&i| {
            let k = base + 2 * (i - 1);
            self.bits >> k & 0b11 == 0b11
        })
    }

    /// The index set `I(B)`: every coordinate that appears in a member wall.
    pub fn index_set(&self) -> BTreeSet<usize> {
        self.walls().flat_map(|w| w.support()).collect()
    }

    /// Lowercase hex of the bitset, no padding. Pair it with `n` to decode.
    pub fn to_hex(&self) -> String {
        format!("{:x}", self.bits)
    }

    /// The associated matrix `[A | b]`, one row per member wall in canonical
    /// order.
    pub fn associated_matrix<T: ExactInt>(&self) -> AssociatedMatrix<T> {
        let rows = self
            .walls()
            .map(|w| {
                let mut row = vec![T::zero(); self.n + 1];
                match w {
                    Wall::TypeI { alpha, beta } => {
                        row[alpha - 1] = T::one();
                        row[beta - 1] = T::one();
                        row[self.n] = T::one();
                    }
                    Wall::TypeII { vertex, level } => {
                        row[vertex - 1] = T::one();
                        row[self.n] = from_i64(level.value() as i64);
                    }
                }
                row
            })
            .collect();
        AssociatedMatrix { cols: self.n, rows }
    }
}

impl fmt::Display for Subarrangement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, w) in self.walls().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{w}")?;
        }
        f.write_str("}")
    }
}

/// Augmented matrix `[A | b]` with `cols` unknowns; each row holds
/// `cols + 1` entries, the last being `b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AssociatedMatrix<T> {
    cols: usize,
    rows: Vec<Vec<T>>,
}

impl<T: ExactInt> AssociatedMatrix<T> {
    /// Builds a matrix from raw augmented rows. Panics if a row does not
    /// have `cols + 1` entries.
    pub fn from_rows(cols: usize, rows: Vec<Vec<T>>) -> Self {
        assert!(rows.iter().all(|r| r.len() == cols + 1), "augmented rows must have cols + 1 entries");
        AssociatedMatrix { cols, rows }
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn rows(&self) -> &[Vec<T>] {
        &self.rows
    }

    pub fn row_count(&self) -> usize {
        self.rows.len()
    }

    pub fn coefficients(&self, row: usize) -> &[T] {
        &self.rows[row][..self.cols]
    }

    pub fn rhs(&self, row: usize) -> &T {
        &self.rows[row][self.cols]
    }
}
