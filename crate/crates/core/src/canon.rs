//! Canonical labelings for graphs on at most 10 vertices.
//!
//! The canonical representative of an isomorphism class is the relabeling
//! whose upper-triangle edge bits, read in colex order x(0,1), x(0,2),
//! x(1,2), x(0,3), ..., form the lexicographically least bit string. That
//! order has a prefix property the enumerator leans on: dropping the last
//! vertex of a minimal labeling leaves a minimal labeling, so graphs can be
//! grown one vertex at a time and a child kept exactly when it is its own
//! canonical representative.
//!
//! The search assigns positions left to right, branching only on vertices
//! whose next column of bits is minimal, pruning branches that exceed the
//! best known string. Equal-string leaves reveal automorphisms; their orbits
//! (restricted to generators fixing the current prefix pointwise) prune
//! sibling branches, which keeps highly symmetric graphs cheap.

/// Vertex cap for canonical forms and enumeration.
pub const MAX_CANON_VERTICES: usize = 10;

/// Generator cap; beyond this new automorphisms are dropped, which only
/// costs pruning, never correctness.
const MAX_GENS: usize = 48;

struct Search<'a> {
    rows: &'a [u64],
    n: usize,
    /// Per-position columns of the best ordering found so far.
    best_cols: [u16; MAX_CANON_VERTICES],
    best_order: [u8; MAX_CANON_VERTICES],
    cur_order: [u8; MAX_CANON_VERTICES],
    gens: Vec<[u8; MAX_CANON_VERTICES]>,
    /// Test mode: stop as soon as any ordering beats the input labeling.
    test_only: bool,
    improved: bool,
}

impl<'a> Search<'a> {
    fn new(rows: &'a [u64], test_only: bool) -> Self {
        let n = rows.len();
        debug_assert!((1..=MAX_CANON_VERTICES).contains(&n));
        let mut s = Search {
            rows,
            n,
            best_cols: [0; MAX_CANON_VERTICES],
            best_order: [0; MAX_CANON_VERTICES],
            cur_order: [0; MAX_CANON_VERTICES],
            gens: Vec::new(),
            test_only,
            improved: false,
        };
        for p in 0..n {
            s.best_order[p] = p as u8;
            s.best_cols[p] = s.column_of_order(&s.best_order, p);
        }
        s
    }

    /// Column bits of `order[p]` against `order[0..p]`, earliest position
    /// most significant.
    fn column_of_order(&self, order: &[u8; MAX_CANON_VERTICES], p: usize) -> u16 {
        let mut col = 0u16;
        let row = self.rows[order[p] as usize];
        for &u in order.iter().take(p) {
            col = col << 1 | (row >> u & 1) as u16;
        }
        col
    }

    fn column_of(&self, v: usize, depth: usize) -> u16 {
        let mut col = 0u16;
        let row = self.rows[v];
        for &u in self.cur_order.iter().take(depth) {
            col = col << 1 | (row >> u & 1) as u16;
        }
        col
    }

    /// True if some recorded automorphism fixing the current prefix
    /// pointwise connects `v` to an already explored sibling.
    fn orbit_seen(&self, depth: usize, tried: &[u8], v: u8) -> bool {
        if self.gens.is_empty() || tried.is_empty() {
            return false;
        }
        let mut parent: [u8; MAX_CANON_VERTICES] = [0; MAX_CANON_VERTICES];
        for (w, p) in parent.iter_mut().enumerate().take(self.n) {
            *p = w as u8;
        }
        fn find(parent: &mut [u8; MAX_CANON_VERTICES], x: u8) -> u8 {
            let mut x = x;
            while parent[x as usize] != x {
                parent[x as usize] = parent[parent[x as usize] as usize];
                x = parent[x as usize];
            }
            x
        }
        for gen in &self.gens {
            if self.cur_order[..depth]
                .iter()
                .any(|&u| gen[u as usize] != u)
            {
                continue;
            }
            for w in 0..self.n as u8 {
                let (a, b) = (find(&mut parent, w), find(&mut parent, gen[w as usize]));
                if a != b {
                    parent[a as usize] = b;
                }
            }
        }
        let rv = find(&mut parent, v);
        tried.iter().any(|&u| find(&mut parent, u) == rv)
    }

    fn record_automorphism(&mut self) {
        if self.gens.len() >= MAX_GENS {
            return;
        }
        // Equal strings: mapping best_order[i] -> cur_order[i] is an
        // automorphism.
        let mut gen = [0u8; MAX_CANON_VERTICES];
        let mut identity = true;
        for i in 0..self.n {
            gen[self.best_order[i] as usize] = self.cur_order[i];
            identity &= self.best_order[i] == self.cur_order[i];
        }
        if !identity && !self.gens.contains(&gen) {
            self.gens.push(gen);
        }
    }

    /// Depth-first search; returns false to abort (test mode found a
    /// strictly smaller labeling).
    fn dfs(&mut self, depth: usize, used: u16, tight: bool) -> bool {
        if depth == self.n {
            if tight {
                self.record_automorphism();
            } else {
                self.best_order = self.cur_order;
                for p in 0..self.n {
                    self.best_cols[p] = self.column_of_order(&self.best_order, p);
                }
            }
            return true;
        }

        let mut cands: [(u16, u8); MAX_CANON_VERTICES] = [(0, 0); MAX_CANON_VERTICES];
        let mut len = 0;
        let mut min_col = u16::MAX;
        for v in 0..self.n as u8 {
            if used >> v & 1 == 1 {
                continue;
            }
            let col = self.column_of(v as usize, depth);
            cands[len] = (col, v);
            len += 1;
            min_col = min_col.min(col);
        }

        if tight && min_col > self.best_cols[depth] {
            return true;
        }
        let strictly_smaller = !tight || min_col < self.best_cols[depth];
        if strictly_smaller && self.test_only {
            self.improved = true;
            return false;
        }

        let mut tried: [u8; MAX_CANON_VERTICES] = [0; MAX_CANON_VERTICES];
        let mut tried_len = 0;
        let mut first = true;
        for &(col, v) in cands.iter().take(len) {
            if col != min_col {
                continue;
            }
            if self.orbit_seen(depth, &tried[..tried_len], v) {
                continue;
            }
            tried[tried_len] = v;
            tried_len += 1;
            self.cur_order[depth] = v;
            // In a strictly smaller region the first child resets the best
            // leaf; siblings then compare tight against it.
            let child_tight = if strictly_smaller { !first } else { true };
            if !self.dfs(depth + 1, used | 1 << v, child_tight) {
                return false;
            }
            first = false;
        }
        true
    }
}

/// Is this labeled graph the canonical representative of its class?
pub(crate) fn is_canonical(rows: &[u64]) -> bool {
    if rows.len() <= 1 {
        return true;
    }
    let mut search = Search::new(rows, true);
    search.dfs(0, 0, true);
    !search.improved
}

/// Minimal labeling as a permutation: `order[p]` is the input vertex placed
/// at position `p`.
pub(crate) fn canonical_order(rows: &[u64]) -> [u8; MAX_CANON_VERTICES] {
    let mut search = Search::new(rows, false);
    search.dfs(0, 0, true);
    search.best_order
}

/// Canonical key: the minimal colex bit string packed into a word, earlier
/// bits more significant. Equal keys certify isomorphism (n <= 10).
pub(crate) fn canonical_key(rows: &[u64]) -> u64 {
    let n = rows.len();
    let order = canonical_order(rows);
    let mut key = 0u64;
    for j in 1..n {
        for i in 0..j {
            key = key << 1 | (rows[order[j] as usize] >> order[i] & 1);
        }
    }
    key
}
