//! Dense symmetric eigensolver and spectrum utilities.
//!
//! The kernel is a cyclic Jacobi sweep: rotations are applied in a fixed
//! (row, column) order until the off-diagonal mass is annihilated, which makes
//! the decomposition deterministic bit-for-bit for a given input. At the
//! dimensions used here (n <= 64) Jacobi is accurate to near machine epsilon
//! and its cubic cost is irrelevant.

use crate::graph::Graph;

/// Relative tolerance used for eigenvalue clustering and rank decisions,
/// scaled by `max(1, spectral radius)` of the matrix at hand.
pub const DEFAULT_REL_TOL: f64 = 1e-8;

/// Symmetric matrix stored as one (lower) triangle, so symmetry is exact by
/// construction.
#[derive(Debug, Clone, PartialEq)]
pub struct SymMatrix {
    n: usize,
    /// packed rows: entry (i, j) with j <= i lives at i*(i+1)/2 + j
    tri: Vec<f64>,
}

impl SymMatrix {
    pub fn zeros(n: usize) -> Self {
        assert!(n > 0 && n <= 64, "dimension must be in 1..=64");
        SymMatrix {
            n,
            tri: vec![0.0; n * (n + 1) / 2],
        }
    }

    /// Builds from an entry function; `f` is consulted only for `j <= i`.
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> f64) -> Self {
        let mut m = SymMatrix::zeros(n);
        for i in 0..n {
            for j in 0..=i {
                m.tri[i * (i + 1) / 2 + j] = f(i, j);
            }
        }
        m
    }

    /// Adjacency matrix of a graph.
    pub fn adjacency(g: &Graph) -> Self {
        SymMatrix::from_fn(g.vertex_count(), |i, j| {
            if i != j && g.has_edge(i, j) {
                1.0
            } else {
                0.0
            }
        })
    }

    /// All-ones matrix J.
    pub fn ones(n: usize) -> Self {
        SymMatrix::from_fn(n, |_, _| 1.0)
    }

    /// Identity scaled by `c`.
    pub fn scaled_identity(n: usize, c: f64) -> Self {
        SymMatrix::from_fn(n, |i, j| if i == j { c } else { 0.0 })
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        let (a, b) = if i >= j { (i, j) } else { (j, i) };
        self.tri[a * (a + 1) / 2 + b]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: f64) {
        let (a, b) = if i >= j { (i, j) } else { (j, i) };
        self.tri[a * (a + 1) / 2 + b] = v;
    }

    /// Entrywise linear combination `self + c * other`.
    pub fn axpy(&self, c: f64, other: &SymMatrix) -> SymMatrix {
        assert_eq!(self.n, other.n);
        let mut out = self.clone();
        for (a, b) in out.tri.iter_mut().zip(other.tri.iter()) {
            *a += c * b;
        }
        out
    }

    pub fn trace(&self) -> f64 {
        (0..self.n).map(|i| self.get(i, i)).sum()
    }

    /// Largest absolute entry.
    pub fn max_abs(&self) -> f64 {
        self.tri.iter().fold(0.0, |acc, v| acc.max(v.abs()))
    }

    /// Conjugation by the centering projector: returns `P * self * P` with
    /// `P = I - J/n`. The all-ones vector is in the result's nullspace.
    pub fn project_center(&self) -> SymMatrix {
        let n = self.n;
        let inv = 1.0 / n as f64;
        let mut rowsum = vec![0.0; n];
        let mut total = 0.0;
        for i in 0..n {
            for j in 0..n {
                rowsum[i] += self.get(i, j);
            }
            total += rowsum[i];
        }
        SymMatrix::from_fn(n, |i, j| {
            self.get(i, j) - inv * rowsum[i] - inv * rowsum[j] + inv * inv * total
        })
    }

    /// Matrix-vector product.
    pub fn mul_vec(&self, v: &[f64]) -> Vec<f64> {
        assert_eq!(v.len(), self.n);
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.get(i, j) * v[j]).sum())
            .collect()
    }
}

/// Eigenvalues sorted in descending order with tolerance-clustered groups.
#[derive(Debug, Clone)]
pub struct Spectrum {
    /// eigenvalues, descending
    pub values: Vec<f64>,
    /// (representative value, multiplicity) per cluster, descending
    pub groups: Vec<(f64, usize)>,
    /// absolute clustering tolerance that produced `groups`
    pub tol: f64,
}

impl Spectrum {
    /// Clusters sorted values: a new group starts when the gap to the previous
    /// value exceeds `tol`. The representative is the group mean.
    fn cluster(values: Vec<f64>, tol: f64) -> Spectrum {
        let mut groups: Vec<(f64, usize)> = Vec::new();
        let mut start = 0;
        for i in 0..values.len() {
            let last = i + 1 == values.len();
            if last || values[i] - values[i + 1] > tol {
                let count = i + 1 - start;
                let mean = values[start..=i].iter().sum::<f64>() / count as f64;
                groups.push((mean, count));
                start = i + 1;
            }
        }
        Spectrum { values, groups, tol }
    }

    /// Multiplicity of the tolerance group containing `target`, 0 when no
    /// group representative lies within `tol`.
    pub fn group_multiplicity(&self, target: f64) -> usize {
        self.groups
            .iter()
            .find(|(rep, _)| (rep - target).abs() <= self.tol)
            .map(|&(_, m)| m)
            .unwrap_or(0)
    }

    /// Largest eigenvalue.
    pub fn lambda_max(&self) -> f64 {
        self.values[0]
    }

    /// Spectral radius.
    pub fn radius(&self) -> f64 {
        self.values
            .iter()
            .fold(0.0f64, |acc, v| acc.max(v.abs()))
    }
}

/// Full eigendecomposition: spectrum plus the matching orthonormal basis.
#[derive(Debug, Clone)]
pub struct EigenDecomposition {
    pub spectrum: Spectrum,
    /// eigenvectors[k] corresponds to spectrum.values[k]
    pub vectors: Vec<Vec<f64>>,
}

/// Diagonalizes a symmetric matrix by cyclic Jacobi rotations.
///
/// `rel_tol` controls only the clustering of the returned spectrum; the
/// rotation loop always runs to machine-precision convergence.
pub fn eigendecompose(m: &SymMatrix, rel_tol: f64) -> EigenDecomposition {
    let n = m.dim();
    // working full copy
    let mut a = vec![vec![0.0f64; n]; n];
    for i in 0..n {
        for j in 0..n {
            a[i][j] = m.get(i, j);
        }
    }
    let mut v = vec![vec![0.0f64; n]; n];
    for (i, row) in v.iter_mut().enumerate() {
        row[i] = 1.0;
    }

    let scale = m.max_abs().max(1.0);
    let stop = f64::EPSILON * scale * 1e-2;
    for _sweep in 0..50 {
        let mut off = 0.0f64;
        for p in 0..n {
            for q in p + 1..n {
                off = off.max(a[p][q].abs());
            }
        }
        if off <= stop {
            break;
        }
        for p in 0..n - 1 {
            for q in p + 1..n {
                let apq = a[p][q];
                if apq.abs() <= stop * 1e-3 {
                    continue;
                }
                // rotation angle from the classic two-by-two reduction
                let theta = 0.5 * (a[q][q] - a[p][p]) / apq;
                let t = if theta >= 0.0 {
                    1.0 / (theta + (1.0 + theta * theta).sqrt())
                } else {
                    1.0 / (theta - (1.0 + theta * theta).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                let tau = s / (1.0 + c);

                let app = a[p][p];
                let aqq = a[q][q];
                a[p][p] = app - t * apq;
                a[q][q] = aqq + t * apq;
                a[p][q] = 0.0;
                a[q][p] = 0.0;
                for j in 0..n {
                    if j != p && j != q {
                        let ajp = a[j][p];
                        let ajq = a[j][q];
                        a[j][p] = ajp - s * (ajq + tau * ajp);
                        a[j][q] = ajq + s * (ajp - tau * ajq);
                        a[p][j] = a[j][p];
                        a[q][j] = a[j][q];
                    }
                }
                for row in v.iter_mut() {
                    let vp = row[p];
                    let vq = row[q];
                    row[p] = vp - s * (vq + tau * vp);
                    row[q] = vq + s * (vp - tau * vq);
                }
            }
        }
    }

    // extract, sort descending by eigenvalue (stable: ties keep sweep order)
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[j][j].partial_cmp(&a[i][i]).unwrap());
    let values: Vec<f64> = order.iter().map(|&i| a[i][i]).collect();
    let vectors: Vec<Vec<f64>> = order
        .iter()
        .map(|&k| (0..n).map(|i| v[i][k]).collect())
        .collect();

    let radius = values.iter().fold(0.0f64, |acc, x| acc.max(x.abs()));
    let tol = rel_tol * radius.max(1.0);
    EigenDecomposition {
        spectrum: Spectrum::cluster(values, tol),
        vectors,
    }
}

/// Eigenvalues only, with default clustering.
pub fn eigenvalues(m: &SymMatrix) -> Spectrum {
    eigendecompose(m, DEFAULT_REL_TOL).spectrum
}

/// True iff all eigenvalues of `P m P` are at least `-tol_abs`, i.e. the
/// quadratic form is nonnegative on the complement of the all-ones vector.
pub fn psd_on_complement(m: &SymMatrix, rel_tol: f64) -> bool {
    let spec = eigendecompose(&m.project_center(), rel_tol).spectrum;
    let tol = rel_tol * spec.radius().max(1.0);
    spec.values.iter().all(|&v| v >= -tol)
}

/// Numerical rank: eigenvalues with `|v| > rel_tol * max(1, radius)` count.
pub fn rank_with_tol(m: &SymMatrix, rel_tol: f64) -> usize {
    let spec = eigendecompose(m, rel_tol).spectrum;
    let tol = rel_tol * spec.radius().max(1.0);
    spec.values.iter().filter(|v| v.abs() > tol).count()
}
