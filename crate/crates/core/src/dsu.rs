//! Union-find with parity, a ground node, and an undo log.
//!
//! Node `v` carries an unknown bit `x_v`; relations `x_a ^ x_b = p` are added
//! one at a time. The ground node is pinned to 0, so linking vertex `i` to
//! ground with parity `c` pins `x_i = c`. A relation that closes a cycle with
//! the wrong parity marks its component odd. Union by rank, no path
//! compression: every mutation is undone exactly by popping the log.

/// Result of [`ParityDsu::relate`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relate {
    /// Two components were merged.
    Merged,
    /// Same component, parity agrees; nothing changed.
    Redundant,
    /// Same component, parity disagrees; the component is (now) odd.
    OddCycle,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Undo {
    Link {
        child: usize,
        root: usize,
        rank_bumped: bool,
        root_was_odd: bool,
        odd_roots: usize,
    },
    Flag {
        root: usize,
        odd_roots: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParityDsu {
    parent: Vec<usize>,
    rank: Vec<u8>,
    parity: Vec<u8>,
    odd: Vec<bool>,
    tree_edges: usize,
    odd_roots: usize,
    history: Vec<Undo>,
}

impl ParityDsu {
    /// `vertices` free nodes `0..vertices` plus the ground node at index
    /// `vertices`.
    pub fn new(vertices: usize) -> Self {
        let len = vertices + 1;
        ParityDsu {
            parent: (0..len).collect(),
            rank: vec![0; len],
            parity: vec![0; len],
            odd: vec![false; len],
            tree_edges: 0,
            odd_roots: 0,
            history: Vec::new(),
        }
    }

    pub fn ground(&self) -> usize {
        self.parent.len() - 1
    }

    pub fn len(&self) -> usize {
        self.parent.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// `(representative, parity of v relative to the representative)`.
    pub fn find(&self, mut v: usize) -> (usize, u8) {
        let mut p = 0;
        while self.parent[v] != v {
            p ^= self.parity[v];
            v = self.parent[v];
        }
        (v, p)
    }

    pub fn same(&self, a: usize, b: usize) -> bool {
        self.find(a).0 == self.find(b).0
    }

    /// Parity `x_a ^ x_b` if both nodes share a component.
    pub fn relative_parity(&self, a: usize, b: usize) -> Option<u8> {
        let (ra, pa) = self.find(a);
        let (rb, pb) = self.find(b);
        (ra == rb).then_some(pa ^ pb)
    }

    pub fn is_odd(&self, v: usize) -> bool {
        self.odd[self.find(v).0]
    }

    /// Records `x_a ^ x_b = parity`.
    pub fn relate(&mut self, a: usize, b: usize, parity: u8) -> Relate {
        debug_assert!(parity <= 1);
        let (ra, pa) = self.find(a);
        let (rb, pb) = self.find(b);
        if ra == rb {
            if pa ^ pb == parity {
                return Relate::Redundant;
            }
            if !self.odd[ra] {
                self.history.push(Undo::Flag { root: ra, odd_roots: self.odd_roots });
                self.odd[ra] = true;
                self.odd_roots += 1;
            }
            return Relate::OddCycle;
        }
        let (root, child) = if self.rank[ra] >= self.rank[rb] { (ra, rb) } else { (rb, ra) };
        let rank_bumped = self.rank[root] == self.rank[child];
        self.history.push(Undo::Link {
            child,
            root,
            rank_bumped,
            root_was_odd: self.odd[root],
            odd_roots: self.odd_roots,
        });
        self.parent[child] = root;
        self.parity[child] = pa ^ pb ^ parity;
        if rank_bumped {
            self.rank[root] += 1;
        }
        if self.odd[root] && self.odd[child] {
            self.odd_roots -= 1;
        }
        self.odd[root] |= self.odd[child];
        self.tree_edges += 1;
        Relate::Merged
    }

    /// Pins node `v` to `level` by relating it to ground.
    pub fn pin(&mut self, v: usize, level: u8) -> Relate {
        let g = self.ground();
        self.relate(v, g, level)
    }

    /// True while the ground component holds no odd cycle, i.e. the pinned
    /// values are mutually compatible.
    pub fn ground_consistent(&self) -> bool {
        !self.is_odd(self.ground())
    }

    /// Spanning-forest edges plus one per odd component away from ground.
    /// For a consistent state this is the rank of the encoded linear system.
    pub fn rank(&self) -> usize {
        let ground_odd = self.is_odd(self.ground()) as usize;
        self.tree_edges + self.odd_roots - ground_odd
    }

    pub fn checkpoint(&self) -> usize {
        self.history.len()
    }

    /// Undoes every mutation recorded after `checkpoint`.
    pub fn rollback(&mut self, checkpoint: usize) {
        while self.history.len() > checkpoint {
            match self.history.pop().expect("history length checked") {
                Undo::Link { child, root, rank_bumped, root_was_odd, odd_roots } => {
                    self.parent[child] = child;
                    self.parity[child] = 0;
                    if rank_bumped {
                        self.rank[root] -= 1;
                    }
                    self.odd[root] = root_was_odd;
                    self.odd_roots = odd_roots;
                    self.tree_edges -= 1;
                }
                Undo::Flag { root, odd_roots } => {
                    self.odd[root] = false;
                    self.odd_roots = odd_roots;
                }
            }
        }
    }
}
