//! Simple undirected graphs on up to 64 vertices.
//!
//! Adjacency is stored as one `u64` bitset per vertex, so edge tests are a
//! single shift and edge counts are popcounts. Graphs are immutable in
//! practice: every operation here is a pure function returning a new value.

use crate::error::{Error, Result};

/// Hard cap on the vertex count: one adjacency row per machine word.
pub const MAX_VERTICES: usize = 64;

/// Simple undirected graph as per-vertex adjacency bitsets.
///
/// Invariants (maintained by every constructor):
/// - bit `j` of row `i` equals bit `i` of row `j`,
/// - bit `i` of row `i` is clear (no self-loops),
/// - bits at positions `>= n` are clear.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// Edgeless graph on `n` vertices, `1 <= n <= 64`.
    pub fn empty(n: usize) -> Result<Self> {
        if n == 0 || n > MAX_VERTICES {
            return Err(Error::OrderOutOfRange(n, "1..=64"));
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    /// Build from adjacency rows. Used internally by the enumerator.
    pub(crate) fn from_rows(n: usize, adj: Vec<u64>) -> Self {
        debug_assert_eq!(adj.len(), n);
        debug_assert!(adj.iter().enumerate().all(|(i, &row)| row & (1 << i) == 0));
        Graph { n, adj }
    }

    /// Build an `n`-vertex graph from edge bits in colex (graph6) order:
    /// bit t of `bits` is the pair x(0,1), x(0,2), x(1,2), x(0,3), ...
    ///
    /// Only defined while the upper triangle fits in a word (`n <= 11`).
    pub fn from_edge_bits(n: usize, bits: u64) -> Result<Self> {
        if n == 0 || n > 11 {
            return Err(Error::OrderOutOfRange(n, "1..=11"));
        }
        let mut g = Graph::empty(n)?;
        let mut t = 0;
        for j in 1..n {
            for i in 0..j {
                if bits >> t & 1 == 1 {
                    g.add_edge(i, j);
                }
                t += 1;
            }
        }
        Ok(g)
    }

    /// Edge bits in colex order, the inverse of [`Graph::from_edge_bits`].
    pub fn edge_bits(&self) -> u64 {
        debug_assert!(self.n <= 11);
        let mut bits = 0u64;
        let mut t = 0;
        for j in 1..self.n {
            for i in 0..j {
                if self.has_edge(i, j) {
                    bits |= 1 << t;
                }
                t += 1;
            }
        }
        bits
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    /// Number of edges m.
    pub fn edge_count(&self) -> usize {
        self.adj
            .iter()
            .map(|r| r.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.adj[i] >> j & 1 == 1
    }

    /// Insert edge `{i, j}`. Panics on a self-loop or an out-of-range vertex.
    pub fn add_edge(&mut self, i: usize, j: usize) {
        assert!(i != j && i < self.n && j < self.n, "bad edge ({i},{j})");
        self.adj[i] |= 1 << j;
        self.adj[j] |= 1 << i;
    }

    pub fn remove_edge(&mut self, i: usize, j: usize) {
        assert!(i != j && i < self.n && j < self.n, "bad edge ({i},{j})");
        self.adj[i] &= !(1 << j);
        self.adj[j] &= !(1 << i);
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    /// Neighbourhood of `v` as a bitset.
    pub fn neighbors(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub(crate) fn rows(&self) -> &[u64] {
        &self.adj
    }

    /// Iterate edges as `(i, j)` with `i < j`, in colex order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (1..self.n).flat_map(move |j| {
            (0..j)
                .filter(move |&i| self.has_edge(i, j))
                .map(move |i| (i, j))
        })
    }

    /// Complement on the same labels: `{i,j}` present iff absent here.
    pub fn complement(&self) -> Graph {
        let mask = if self.n == 64 {
            !0u64
        } else {
            (1u64 << self.n) - 1
        };
        let adj = self
            .adj
            .iter()
            .enumerate()
            .map(|(i, &row)| !row & mask & !(1u64 << i))
            .collect();
        Graph { n: self.n, adj }
    }

    /// True iff a traversal from vertex 0 reaches all `n` vertices.
    pub fn is_connected(&self) -> bool {
        let mut seen = 1u64;
        let mut frontier = 1u64;
        while frontier != 0 {
            let mut next = 0u64;
            let mut f = frontier;
            while f != 0 {
                let v = f.trailing_zeros() as usize;
                f &= f - 1;
                next |= self.adj[v];
            }
            frontier = next & !seen;
            seen |= next;
        }
        let all = if self.n == 64 {
            !0u64
        } else {
            (1u64 << self.n) - 1
        };
        seen == all
    }

    /// Proper 2-colouring by traversal; `true` iff one exists.
    ///
    /// This is the combinatorial oracle the spectral tests compare the least
    /// eigenvalue against, so it deliberately never touches the eigensolver.
    pub fn is_bipartite(&self) -> bool {
        let mut color = vec![2u8; self.n];
        for start in 0..self.n {
            if color[start] != 2 {
                continue;
            }
            color[start] = 0;
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                let mut nb = self.adj[v];
                while nb != 0 {
                    let u = nb.trailing_zeros() as usize;
                    nb &= nb - 1;
                    if color[u] == 2 {
                        color[u] = 1 - color[v];
                        stack.push(u);
                    } else if color[u] == color[v] {
                        return false;
                    }
                }
            }
        }
        true
    }

    pub fn degree_profile(&self) -> DegreeProfile {
        let degrees: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        let k = degrees.iter().filter(|&&d| d == self.n - 1).count();
        let near_full = if self.n >= 2 {
            degrees.iter().filter(|&&d| d == self.n - 2).count()
        } else {
            0
        };
        let min_degree = degrees.iter().copied().min().unwrap_or(0);
        let max_degree = degrees.iter().copied().max().unwrap_or(0);
        DegreeProfile {
            degrees,
            k,
            near_full,
            min_degree,
            max_degree,
        }
    }

    /// Complete graph K_n.
    pub fn complete(n: usize) -> Result<Self> {
        Ok(Graph::empty(n)?.complement())
    }

    /// K_n minus the edge `{0, 1}`.
    pub fn complete_minus_edge(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::OrderOutOfRange(n, "2..=64"));
        }
        let mut g = Graph::complete(n)?;
        g.remove_edge(0, 1);
        Ok(g)
    }

    /// The graph whose complement is the star K_{1,n-3} plus a disjoint edge.
    ///
    /// Labels are fixed: vertex 0 is the star centre, vertices 1 and 2 are
    /// the disjoint edge, vertices 3..n-1 are the star leaves. The returned
    /// graph is the complement itself, so vertex 0 has degree 2 and every
    /// other vertex has degree n-2.
    pub fn star_k2_complement(n: usize) -> Result<Self> {
        if !(5..=MAX_VERTICES).contains(&n) {
            return Err(Error::OrderOutOfRange(n, "5..=64"));
        }
        let mut co = Graph::empty(n)?;
        co.add_edge(1, 2);
        for leaf in 3..n {
            co.add_edge(0, leaf);
        }
        Ok(co.complement())
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "Graph(n={}, edges={:?})",
            self.n,
            self.edges().collect::<Vec<_>>()
        )
    }
}

/// Degree statistics of one graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeProfile {
    pub degrees: Vec<usize>,
    /// Number of vertices of full degree n-1.
    pub k: usize,
    /// Number of vertices of degree n-2.
    pub near_full: usize,
    pub min_degree: usize,
    pub max_degree: usize,
}
