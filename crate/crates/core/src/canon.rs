//! Canonical forms and isomorph-free enumeration for small graphs.
//!
//! The canonical form of a graph is the lexicographically greatest packed
//! upper-triangle bitstring over all vertex relabelings, found by a pruned
//! permutation search. Enumeration builds each vertex count from the previous
//! one: every class on `m` vertices is extended by a new vertex with every
//! possible neighborhood, and the results are deduplicated by canonical form.

use rayon::prelude::*;

use crate::graph::{Graph, GraphError};

/// Canonical forms are supported up to this vertex count (the packed
/// triangle must fit in a `u128` and the search must stay cheap).
pub const MAX_CANON_VERTICES: usize = 12;

/// Enumeration is exercised up to this vertex count.
pub const MAX_ENUM_VERTICES: usize = 9;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CanonError {
    #[error("canonical form supports n <= {MAX_CANON_VERTICES}, got {0}")]
    TooLarge(usize),
    #[error("enumeration supports 2 <= n <= {MAX_ENUM_VERTICES}, got {0}")]
    EnumRange(usize),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Permutation-invariant fingerprint: the maximal upper-triangle bitstring,
/// packed MSB-first into a `u128`, together with the vertex count.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    pub n: u8,
    pub bits: u128,
}

struct Search<'a> {
    g: &'a Graph,
    n: usize,
    /// candidate order: high degree first, so the maximum is found early
    order: Vec<usize>,
    /// placed[i] = original vertex at canonical position i
    placed: Vec<usize>,
    best_chunks: Vec<u64>,
    has_best: bool,
    chunks: Vec<u64>,
    used: u64,
}

impl<'a> Search<'a> {
    fn run(g: &'a Graph) -> Vec<u64> {
        let n = g.vertex_count();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
        let mut s = Search {
            g,
            n,
            order,
            placed: vec![0; n],
            best_chunks: vec![0; n],
            has_best: false,
            chunks: vec![0; n],
            used: 0,
        };
        s.descend(0, false);
        s.best_chunks
    }

    /// DFS over partial placements. `ahead` means the current prefix already
    /// beats the best known string strictly, so comparisons are skipped until
    /// best is replaced. Returns whether best was replaced in this subtree;
    /// when that happens the new best extends the caller's prefix, so the
    /// caller drops back to prefix-equal comparisons for later siblings.
    fn descend(&mut self, pos: usize, ahead: bool) -> bool {
        if pos == self.n {
            if ahead || !self.has_best {
                self.best_chunks.copy_from_slice(&self.chunks);
                self.has_best = true;
                return true;
            }
            return false;
        }
        let mut ahead = ahead;
        let mut replaced = false;
        for oi in 0..self.n {
            let v = self.order[oi];
            if self.used & (1 << v) != 0 {
                continue;
            }
            // adjacency bits between v and the placed vertices, placed[0]
            // in the most significant position
            let mut chunk = 0u64;
            for i in 0..pos {
                chunk = (chunk << 1) | u64::from(self.g.has_edge(self.placed[i], v));
            }
            let child_ahead = if ahead || !self.has_best {
                true
            } else if chunk < self.best_chunks[pos] {
                continue;
            } else {
                chunk > self.best_chunks[pos]
            };
            self.placed[pos] = v;
            self.chunks[pos] = chunk;
            self.used |= 1 << v;
            if self.descend(pos + 1, child_ahead) {
                replaced = true;
                ahead = false; // best now shares our prefix chunks[0..pos]
            }
            self.used &= !(1 << v);
        }
        replaced
    }
}

/// Computes the canonical form of `g` (n <= 12).
pub fn canonical_form(g: &Graph) -> Result<CanonicalForm, CanonError> {
    let n = g.vertex_count();
    if n > MAX_CANON_VERTICES {
        return Err(CanonError::TooLarge(n));
    }
    let chunks = Search::run(g);
    let mut bits = 0u128;
    for (pos, &c) in chunks.iter().enumerate() {
        bits = (bits << pos) | c as u128;
    }
    Ok(CanonicalForm { n: n as u8, bits })
}

/// Rebuilds the canonical representative graph from a form.
pub fn graph_from_form(form: &CanonicalForm) -> Graph {
    let n = form.n as usize;
    let total = n * (n - 1) / 2;
    let mut g = Graph::empty(n).unwrap();
    let mut idx = 0;
    // bit order: per position p, bits adj(0..p, p), MSB = earliest
    for p in 1..n {
        for i in 0..p {
            let bit = (form.bits >> (total - 1 - idx)) & 1;
            if bit != 0 {
                g.add_edge(i, p).unwrap();
            }
            idx += 1;
        }
    }
    g
}

/// Calls `sink` once per isomorphism class on `n` vertices and returns the
/// class count. Classes are visited in ascending canonical-form order, so the
/// traversal is deterministic.
pub fn enumerate_nonisomorphic<F: FnMut(&Graph)>(
    n: usize,
    mut sink: F,
) -> Result<usize, CanonError> {
    let forms = enumerate_forms(n)?;
    for form in &forms {
        sink(&graph_from_form(form));
    }
    Ok(forms.len())
}

/// Canonical forms of every isomorphism class on `n` vertices, sorted.
pub fn enumerate_forms(n: usize) -> Result<Vec<CanonicalForm>, CanonError> {
    if !(2..=MAX_ENUM_VERTICES).contains(&n) {
        return Err(CanonError::EnumRange(n));
    }
    // level 2: the two graphs on two vertices
    let mut level: Vec<CanonicalForm> = vec![
        canonical_form(&Graph::empty(2)?)?,
        canonical_form(&Graph::complete(2)?)?,
    ];
    level.sort();
    for m in 2..n {
        // extend every class by one vertex with every neighborhood subset
        let mut next: Vec<CanonicalForm> = level
            .par_iter()
            .flat_map_iter(|form| {
                let parent = graph_from_form(form);
                (0u64..(1 << m)).map(move |subset| {
                    let mut child = Graph::empty(m + 1).unwrap();
                    for (u, v) in parent.edges() {
                        child.add_edge(u, v).unwrap();
                    }
                    let mut s = subset;
                    while s != 0 {
                        let v = s.trailing_zeros() as usize;
                        s &= s - 1;
                        child.add_edge(v, m).unwrap();
                    }
                    canonical_form(&child).expect("n+1 <= 9 fits the canon bound")
                })
            })
            .collect();
        next.par_sort_unstable();
        next.dedup();
        level = next;
    }
    Ok(level)
}
