//! Undirected simple graphs on up to 64 vertices, stored as row bitsets.
//!
//! A vertex's neighborhood is one `u64`, so adjacency queries, complements and
//! component sweeps are single word operations. Everything downstream (spectral
//! tests, enumeration, the census) works on this representation.

use std::fmt;

use rand_core::RngCore;

/// Maximum number of vertices: one bitset row per vertex must fit a `u64`.
pub const MAX_VERTICES: usize = 64;

/// Errors from graph construction and validation.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GraphError {
    #[error("graph must have between 2 and {MAX_VERTICES} vertices, got {0}")]
    BadVertexCount(usize),
    #[error("vertex {0} out of range for graph on {1} vertices")]
    VertexOutOfRange(usize, usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
}

/// Undirected simple graph on `n <= 64` vertices.
///
/// Invariants: the adjacency rows are symmetric (bit `j` of row `i` iff bit `i`
/// of row `j`) and the diagonal is zero. Both are enforced by construction;
/// `n` is fixed for the lifetime of the value.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        if !(2..=MAX_VERTICES).contains(&n) {
            return Err(GraphError::BadVertexCount(n));
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    /// Complete graph `K_n`.
    pub fn complete(n: usize) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n)?;
        let mask = row_mask(n);
        for i in 0..n {
            g.adj[i] = mask & !(1 << i);
        }
        Ok(g)
    }

    /// Cycle `C_n` with edges `{i, i+1 mod n}`.
    pub fn cycle(n: usize) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n)?;
        for i in 0..n {
            g.add_edge(i, (i + 1) % n)?;
        }
        Ok(g)
    }

    /// Path `P_n` with edges `{i, i+1}`.
    pub fn path(n: usize) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n)?;
        for i in 0..n - 1 {
            g.add_edge(i, i + 1)?;
        }
        Ok(g)
    }

    /// The Petersen graph: outer 5-cycle, inner pentagram, spokes.
    pub fn petersen() -> Self {
        let mut g = Graph::empty(10).unwrap();
        for i in 0..5 {
            g.add_edge(i, (i + 1) % 5).unwrap();
            g.add_edge(5 + i, 5 + (i + 2) % 5).unwrap();
            g.add_edge(i, 5 + i).unwrap();
        }
        g
    }

    /// Builds a graph from an edge list.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Inserts the edge `{u, v}`, keeping both rows in sync.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        if u >= self.n {
            return Err(GraphError::VertexOutOfRange(u, self.n));
        }
        if v >= self.n {
            return Err(GraphError::VertexOutOfRange(v, self.n));
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
        Ok(())
    }

    /// Number of vertices.
    #[inline]
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        debug_assert!(u < self.n && v < self.n);
        self.adj[u] & (1 << v) != 0
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        debug_assert!(v < self.n);
        self.adj[v].count_ones() as usize
    }

    /// Neighborhood of `v` as a bitset.
    #[inline]
    pub fn neighbors(&self, v: usize) -> u64 {
        debug_assert!(v < self.n);
        self.adj[v]
    }

    /// Edges as `(u, v)` pairs with `u < v`, in row-major order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            let mut row = self.adj[u] & !((1u64 << (u + 1)) - 1);
            while row != 0 {
                let v = row.trailing_zeros() as usize;
                row &= row - 1;
                out.push((u, v));
            }
        }
        out
    }

    /// Complement graph on the same vertex set.
    pub fn complement(&self) -> Graph {
        let mask = row_mask(self.n);
        let adj = (0..self.n)
            .map(|i| !self.adj[i] & mask & !(1u64 << i))
            .collect();
        Graph { n: self.n, adj }
    }

    /// Relabels vertices: vertex `i` of the result is vertex `perm[i]` of `self`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n, "permutation length must equal n");
        let mut g = Graph::empty(self.n).unwrap();
        for i in 0..self.n {
            for j in i + 1..self.n {
                if self.has_edge(perm[i], perm[j]) {
                    g.adj[i] |= 1 << j;
                    g.adj[j] |= 1 << i;
                }
            }
        }
        g
    }

    /// True iff every vertex has the same degree.
    pub fn is_regular(&self) -> bool {
        let d = self.degree(0);
        (1..self.n).all(|v| self.degree(v) == d)
    }

    /// True iff the graph is complete multipartite, i.e. its complement is a
    /// disjoint union of cliques. Edgeless and complete graphs qualify.
    ///
    /// These are exactly the graphs with no two-distance realization on
    /// `n` points in `R^{n-2}`.
    pub fn is_complete_multipartite(&self) -> bool {
        let comp = self.complement();
        let mut seen = 0u64;
        for start in 0..self.n {
            if seen & (1 << start) != 0 {
                continue;
            }
            // flood-fill the component of `start` in the complement
            let mut component = 1u64 << start;
            loop {
                let mut grown = component;
                let mut cur = component;
                while cur != 0 {
                    let v = cur.trailing_zeros() as usize;
                    cur &= cur - 1;
                    grown |= comp.adj[v];
                }
                if grown == component {
                    break;
                }
                component = grown;
            }
            // the component must induce a clique in the complement
            let mut cur = component;
            while cur != 0 {
                let v = cur.trailing_zeros() as usize;
                cur &= cur - 1;
                if comp.adj[v] & component != component & !(1u64 << v) {
                    return false;
                }
            }
            seen |= component;
        }
        true
    }

    /// Labeled Erdős–Rényi draw: each pair `{i, j}` with `i < j` is an edge
    /// independently with probability `p`, consuming one RNG word per pair in
    /// row-major order. Deterministic given the RNG state.
    pub fn random<R: RngCore>(n: usize, p: f64, rng: &mut R) -> Result<Self, GraphError> {
        assert!((0.0..=1.0).contains(&p), "edge probability must be in [0,1]");
        let mut g = Graph::empty(n)?;
        for i in 0..n {
            for j in i + 1..n {
                // uniform in [0,1) from the top 53 bits, stable across platforms
                let u = (rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64);
                if u < p {
                    g.adj[i] |= 1 << j;
                    g.adj[j] |= 1 << i;
                }
            }
        }
        Ok(g)
    }

}

/// Unranks the upper-triangle bit pattern `bits` (row-major pair order) into a
/// graph; test support for brute-force sweeps over all labeled graphs.
#[cfg(test)]
pub(crate) fn graph_from_bits(n: usize, bits: u64) -> Graph {
    let mut g = Graph::empty(n).unwrap();
    let mut idx = 0;
    for i in 0..n {
        for j in i + 1..n {
            if bits & (1 << idx) != 0 {
                g.add_edge(i, j).unwrap();
            }
            idx += 1;
        }
    }
    g
}

#[inline]
pub(crate) fn row_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}
