//! Sphericality of graphs on `d+2` vertices.
//!
//! A graph G on n = d+2 vertices is spherical iff a two-distance set of n
//! points on a sphere in `R^d` has G as its associated graph (edges at the
//! longer distance). With A the adjacency matrix, eigenvalues
//! `lam_1 >= ... >= lam_n`, and P the projector onto the complement of the
//! all-ones vector, the decision reads off two spectra:
//!
//! - G must not be complete multipartite (otherwise no two-distance
//!   realization exists at all), and `lam_2 > 0`;
//! - the top eigenvalue of `P A P` must equal `lam_2`;
//! - `lam_2` must have the same multiplicity in A (discounting one copy when
//!   `lam_1 = lam_2`) and in `P A P` (discounting the zero carried by the
//!   all-ones eigenvector).
//!
//! When spherical, the distance ratio is `sqrt(1/lam_2 + 1)` and the minimum
//! embedding dimension is `(n-1) - mult(lam_2)`.

use serde::Serialize;

use crate::eigen::{self, EigenDecomposition, SymMatrix, DEFAULT_REL_TOL};
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum SphericalError {
    #[error("graph is not representable (complete multipartite)")]
    NotRepresentable,
    #[error("graph is not spherical")]
    NotSpherical,
    #[error("distance ratio must exceed 1, got {0}")]
    RatioOutOfRange(f64),
}

/// Verdict bundle for one graph.
#[derive(Debug, Clone, Serialize)]
pub struct SphericalReport {
    pub n: usize,
    pub d: usize,
    pub representable: bool,
    pub spherical: bool,
    pub lambda1: f64,
    pub lambda2: f64,
    /// multiplicity of lambda2 in A, one copy removed when lambda1 = lambda2
    #[serde(rename = "mult_lambda2_A")]
    pub mult_lambda2_a: usize,
    /// multiplicity of lambda2 among the d+1 eigenvalues of PAP that remain
    /// after discarding the zero of the all-ones eigenvector
    #[serde(rename = "mult_lambda2_PAP")]
    pub mult_lambda2_pap: usize,
    pub mu1: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ratio_k: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub min_dimension: Option<usize>,
    /// a decisive spectral gap fell near the tolerance; the exact oracle
    /// should confirm this verdict
    pub borderline: bool,
}

/// Spectral quantities shared by the test variants.
pub(crate) struct SpectralData {
    pub lam: Vec<f64>,
    /// index range [start, end] of lambda2's tolerance group within `lam`
    pub lam2_group: (usize, usize),
    pub mu: Vec<f64>,
    pub tol: f64,
}

impl SpectralData {
    pub(crate) fn compute(g: &Graph, rel_tol: f64) -> SpectralData {
        let n = g.vertex_count();
        assert!(n >= 3, "sphericality needs at least 3 vertices");
        let a = SymMatrix::adjacency(g);
        let da = eigen::eigendecompose(&a, rel_tol);
        let lam = da.spectrum.values.clone();
        let tol = rel_tol * da.spectrum.radius().max(1.0);

        // group of lam[1] by index
        let mut start = 1;
        while start > 0 && lam[start - 1] - lam[start] <= tol {
            start -= 1;
        }
        let mut end = 1;
        while end + 1 < n && lam[end] - lam[end + 1] <= tol {
            end += 1;
        }

        let dp = eigen::eigendecompose(&a.project_center(), rel_tol);
        let mu = drop_ones_zero(&dp);

        SpectralData {
            lam,
            lam2_group: (start, end),
            mu,
            tol,
        }
    }

    fn lambda2(&self) -> f64 {
        self.lam[1]
    }

    /// Multiplicity in A with the lambda1 exclusion rule applied.
    fn mult_a_excl(&self) -> usize {
        let (start, end) = self.lam2_group;
        (end - start + 1) - usize::from(start == 0)
    }

    fn mult_pap(&self) -> usize {
        let l2 = self.lambda2();
        self.mu.iter().filter(|m| (*m - l2).abs() <= self.tol).count()
    }

    /// Any decisive gap inside [tol/10, 10 tol] means the float verdict could
    /// flip with a slightly different tolerance.
    fn borderline(&self) -> bool {
        let l2 = self.lambda2();
        let band = |gap: f64| gap >= self.tol / 10.0 && gap <= self.tol * 10.0;
        self.lam.iter().any(|v| band((v - l2).abs()))
            || self.mu.iter().any(|m| band((m - l2).abs()))
            || band(l2.abs())
    }
}

/// Removes exactly one eigenvalue of PAP, the one nearest zero, which belongs
/// to the all-ones eigenvector; the remaining d+1 values are the mu's.
fn drop_ones_zero(dp: &EigenDecomposition) -> Vec<f64> {
    let values = &dp.spectrum.values;
    let (drop_idx, nearest) = values
        .iter()
        .enumerate()
        .min_by(|(_, x), (_, y)| x.abs().partial_cmp(&y.abs()).unwrap())
        .unwrap();
    debug_assert!(
        nearest.abs() <= 1e-9 * dp.spectrum.radius().max(1.0),
        "PAP must annihilate the all-ones vector"
    );
    values
        .iter()
        .enumerate()
        .filter(|(i, _)| *i != drop_idx)
        .map(|(_, v)| *v)
        .collect()
}

/// Decides sphericality of `g` (n >= 3) with the default tolerance.
pub fn test_spherical(g: &Graph) -> SphericalReport {
    test_spherical_with(g, DEFAULT_REL_TOL)
}

/// Decides sphericality with an explicit relative tolerance.
pub fn test_spherical_with(g: &Graph, rel_tol: f64) -> SphericalReport {
    let n = g.vertex_count();
    let s = SpectralData::compute(g, rel_tol);
    let lambda2 = s.lambda2();
    let mu1 = s.mu[0];
    let representable = !g.is_complete_multipartite();
    let mult_a = s.mult_a_excl();
    let mult_pap = s.mult_pap();

    let spherical = representable
        && lambda2 > s.tol
        && (mu1 - lambda2).abs() <= s.tol
        && mult_a == mult_pap;

    let ratio_k = spherical.then(|| (1.0 / lambda2 + 1.0).sqrt());
    let min_dimension = spherical.then(|| (n - 1) - mult_a);
    if spherical {
        debug_assert!(lambda2 > 0.0);
        debug_assert!(ratio_k.unwrap() > 1.0);
        debug_assert!(mult_pap >= 1);
    }

    SphericalReport {
        n,
        d: n - 2,
        representable,
        spherical,
        lambda1: s.lam[0],
        lambda2,
        mult_lambda2_a: mult_a,
        mult_lambda2_pap: mult_pap,
        mu1,
        ratio_k,
        min_dimension,
        borderline: s.borderline(),
    }
}

/// True iff `g` has any two-distance realization on n points in `R^{n-2}`:
/// exactly the non complete multipartite graphs.
pub fn is_representable(g: &Graph) -> bool {
    !g.is_complete_multipartite()
}

/// Distance ratio `sqrt(1/lam_2 + 1)` of a spherical graph.
pub fn distance_ratio(g: &Graph) -> Result<f64, SphericalError> {
    let report = test_spherical(g);
    report.ratio_k.ok_or(SphericalError::NotSpherical)
}

/// Minimum dimension admitting a spherical realization: `(n-1) - mult(lam_2)`.
pub fn min_dimension(g: &Graph) -> Result<usize, SphericalError> {
    let report = test_spherical(g);
    report.min_dimension.ok_or(SphericalError::NotSpherical)
}

/// The signed distance-square matrix: 0 on the diagonal, -1 for non-edges,
/// -k^2 for edges.
pub fn build_bg(g: &Graph, k: f64) -> Result<SymMatrix, SphericalError> {
    if k <= 1.0 {
        return Err(SphericalError::RatioOutOfRange(k));
    }
    let ksq = k * k;
    Ok(SymMatrix::from_fn(g.vertex_count(), |i, j| {
        if i == j {
            0.0
        } else if g.has_edge(i, j) {
            -ksq
        } else {
            -1.0
        }
    }))
}

/// The ratio-free normal form `lam_2 I - A`.
pub fn build_bg_bar(g: &Graph) -> SymMatrix {
    let a = SymMatrix::adjacency(g);
    let lam2 = eigen::eigenvalues(&a).values[1];
    SymMatrix::scaled_identity(g.vertex_count(), lam2).axpy(-1.0, &a)
}

/// The interlacing reformulation of the main test: with
/// `mu_1 >= ... >= mu_{d+1}` the eigenvalues of PAP (all-ones zero dropped),
/// G is spherical iff `mu_1 = lam_2` and `mu_k < lam_k`, where k is the last
/// index with `lam_k = lam_2`. Must agree with [`test_spherical`].
pub fn interlacing_test(g: &Graph) -> bool {
    interlacing_test_with(g, DEFAULT_REL_TOL)
}

pub fn interlacing_test_with(g: &Graph, rel_tol: f64) -> bool {
    if g.is_complete_multipartite() {
        return false;
    }
    let s = SpectralData::compute(g, rel_tol);
    let lambda2 = s.lambda2();
    if lambda2 <= s.tol {
        return false;
    }
    if (s.mu[0] - lambda2).abs() > s.tol {
        return false;
    }
    // k: 1-based index of the last eigenvalue in lambda2's group
    let k = s.lam2_group.1 + 1;
    if k > s.mu.len() {
        return false;
    }
    s.lam[k - 1] - s.mu[k - 1] > s.tol
}

/// Booleans of the condition system evaluated on `B = lam_2 I - A`, with the
/// witnesses backing them.
#[derive(Debug, Clone)]
pub struct ConditionTrace {
    pub representable: bool,
    pub lambda2: f64,
    /// false when lambda2 <= tol: no ratio exists and the conditions are
    /// reported failed without evaluation
    pub evaluated: bool,
    /// (1): w^T B w >= 0 for all w orthogonal to the all-ones vector
    pub cond1_psd: bool,
    /// (2): some nonzero w in the ones-complement has B w in span(1)
    pub cond2_null_witness: bool,
    /// (3): det(B) = 0
    pub cond3_singular: bool,
    /// (4): r J + B is PSD for all large r; by the reduction lemma this is
    /// equivalent to (1) and (5) together, which is how it is evaluated
    pub cond4_eventually_psd: bool,
    /// (5): 1^T A w = 0 for every w in the ones-complement with w^T B w = 0
    pub cond5_ones_orthogonal: bool,
    /// every such w is a genuine null vector of B (the final equivalence)
    pub null_equivalence: bool,
    /// witness for (2): unit vector in null(PBP) orthogonal to 1
    pub witness: Option<Vec<f64>>,
    /// basis of null(PBP) restricted to the ones-complement
    pub null_vectors: Vec<Vec<f64>>,
    /// representable and evaluated and (1) and the null equivalence;
    /// must match [`test_spherical`]
    pub verdict: bool,
}

/// Evaluates the condition system directly. The verdict must agree with
/// [`test_spherical`] on every graph.
pub fn condition_oracle(g: &Graph) -> ConditionTrace {
    condition_oracle_with(g, DEFAULT_REL_TOL)
}

pub fn condition_oracle_with(g: &Graph, rel_tol: f64) -> ConditionTrace {
    let n = g.vertex_count();
    assert!(n >= 3, "sphericality needs at least 3 vertices");
    let representable = !g.is_complete_multipartite();
    let a = SymMatrix::adjacency(g);
    let da = eigen::eigendecompose(&a, rel_tol);
    let lambda2 = da.spectrum.values[1];
    let tol = rel_tol * da.spectrum.radius().max(1.0);

    if lambda2 <= tol {
        return ConditionTrace {
            representable,
            lambda2,
            evaluated: false,
            cond1_psd: false,
            cond2_null_witness: false,
            cond3_singular: false,
            cond4_eventually_psd: false,
            cond5_ones_orthogonal: false,
            null_equivalence: false,
            witness: None,
            null_vectors: Vec::new(),
            verdict: false,
        };
    }

    let bbar = SymMatrix::scaled_identity(n, lambda2).axpy(-1.0, &a);
    let m = bbar.project_center();
    let dm = eigen::eigendecompose(&m, rel_tol);
    let mtol = rel_tol * dm.spectrum.radius().max(1.0);

    let cond1_psd = dm.spectrum.values.iter().all(|&v| v >= -mtol);
    let cond3_singular = da
        .spectrum
        .values
        .iter()
        .any(|&v| (lambda2 - v).abs() <= tol);

    // orthonormal basis of null(PBP) restricted to the ones-complement:
    // project out the all-ones direction, then Gram-Schmidt what remains
    let ones_unit = vec![1.0 / (n as f64).sqrt(); n];
    let mut null_vectors: Vec<Vec<f64>> = Vec::new();
    for (i, &val) in dm.spectrum.values.iter().enumerate() {
        if val.abs() > mtol {
            continue;
        }
        let mut w = dm.vectors[i].clone();
        let mut proj: f64 = w.iter().zip(&ones_unit).map(|(x, y)| x * y).sum();
        for (x, y) in w.iter_mut().zip(&ones_unit) {
            *x -= proj * y;
        }
        for b in &null_vectors {
            proj = w.iter().zip(b).map(|(x, y)| x * y).sum();
            for (x, y) in w.iter_mut().zip(b) {
                *x -= proj * y;
            }
        }
        let norm = w.iter().map(|x| x * x).sum::<f64>().sqrt();
        if norm > 1e-6 {
            for x in w.iter_mut() {
                *x /= norm;
            }
            null_vectors.push(w);
        }
    }

    let cond2_null_witness = !null_vectors.is_empty();
    let witness = null_vectors.first().cloned();

    let scale = bbar.max_abs().max(1.0);
    let null_equivalence = null_vectors.iter().all(|w| {
        let bw = bbar.mul_vec(w);
        bw.iter().map(|x| x * x).sum::<f64>().sqrt() <= tol * scale * 10.0
    });
    let cond5_ones_orthogonal = null_vectors.iter().all(|w| {
        let aw = a.mul_vec(w);
        let dot: f64 = aw.iter().sum();
        dot.abs() <= tol * scale * 10.0
    });
    let cond4_eventually_psd = cond1_psd && cond5_ones_orthogonal;

    let verdict = representable && cond1_psd && null_equivalence;

    ConditionTrace {
        representable,
        lambda2,
        evaluated: true,
        cond1_psd,
        cond2_null_witness,
        cond3_singular,
        cond4_eventually_psd,
        cond5_ones_orthogonal,
        null_equivalence,
        witness,
        null_vectors,
        verdict,
    }
}

/// Regular graphs that are not complete multipartite must be spherical.
/// Returns whether that implication held for `g` (vacuously true otherwise).
pub fn check_regular_corollary(g: &Graph) -> bool {
    if g.is_regular() && !g.is_complete_multipartite() {
        test_spherical(g).spherical
    } else {
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand_chacha::rand_core::{RngCore, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    const PHI: f64 = 1.618033988749895;

    #[test]
    fn two_k2_is_the_unit_square() {
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        let r = test_spherical(&g);
        assert!(r.representable && r.spherical);
        assert!((r.lambda2 - 1.0).abs() < 1e-10);
        assert!((r.ratio_k.unwrap() - 2.0f64.sqrt()).abs() < 1e-10);
        assert_eq!(r.min_dimension, Some(2));
        assert_eq!(r.mult_lambda2_a, 1); // lambda1 = lambda2 = 1, one copy excluded
        assert_eq!(r.mult_lambda2_pap, 1);
    }

    #[test]
    fn five_cycle_is_the_pentagon() {
        let r = test_spherical(&Graph::cycle(5).unwrap());
        assert!(r.spherical);
        assert!((r.ratio_k.unwrap() - PHI).abs() < 1e-9);
        assert_eq!(r.min_dimension, Some(2));
        assert!(!r.borderline);
    }

    #[test]
    fn four_cycle_is_complete_multipartite() {
        let r = test_spherical(&Graph::cycle(4).unwrap());
        assert!(!r.representable);
        assert!(!r.spherical);
        assert!(r.ratio_k.is_none());
        assert!(r.min_dimension.is_none());
    }

    #[test]
    fn petersen_needs_dimension_four() {
        let r = test_spherical(&Graph::petersen());
        assert!(r.spherical);
        assert!((r.lambda2 - 1.0).abs() < 1e-10);
        assert_eq!(r.mult_lambda2_a, 5);
        assert!((r.ratio_k.unwrap() - 2.0f64.sqrt()).abs() < 1e-10);
        assert_eq!(r.min_dimension, Some(9 - 5));
    }

    #[test]
    fn triangle_plus_isolated_vertex_has_zero_lambda2() {
        // lam = {2, 0, -1, -1}: representable but lambda2 = 0, so not spherical
        let g = Graph::from_edges(4, &[(0, 1), (0, 2), (1, 2)]).unwrap();
        let r = test_spherical(&g);
        assert!(r.representable);
        assert!(!r.spherical);
        assert!(r.lambda2.abs() < 1e-10);
        let trace = condition_oracle(&g);
        assert!(!trace.evaluated && !trace.verdict);
    }

    #[test]
    fn distance_ratio_and_min_dimension_errors() {
        let c4 = Graph::cycle(4).unwrap();
        assert_eq!(distance_ratio(&c4), Err(SphericalError::NotSpherical));
        assert_eq!(min_dimension(&c4), Err(SphericalError::NotSpherical));
    }

    #[test]
    fn bg_matrix_entries() {
        let g = Graph::empty(4).unwrap();
        let b = build_bg(&g, 2.0).unwrap();
        for i in 0..4 {
            for j in 0..4 {
                let want = if i == j { 0.0 } else { -1.0 };
                assert_eq!(b.get(i, j), want);
            }
        }
        let k = Graph::complete(4).unwrap();
        let b = build_bg(&k, 3.0).unwrap();
        for i in 0..4 {
            for j in 0..4 {
                let want = if i == j { 0.0 } else { -9.0 };
                assert_eq!(b.get(i, j), want);
            }
        }
        assert!(build_bg(&g, 1.0).is_err());
    }

    #[test]
    fn bg_of_c5_matches_lambda2_normal_form() {
        // with k = phi, B_G = I - A/lam2 - J entrywise
        let g = Graph::cycle(5).unwrap();
        let b = build_bg(&g, PHI).unwrap();
        let a = SymMatrix::adjacency(&g);
        let lam2 = eigen::eigenvalues(&a).values[1];
        for i in 0..5 {
            for j in 0..5 {
                let id = if i == j { 1.0 } else { 0.0 };
                let want = id - a.get(i, j) / lam2 - 1.0;
                assert!((b.get(i, j) - want).abs() < 1e-9, "entry ({i},{j})");
            }
        }
    }

    #[test]
    fn bg_bar_examples() {
        // K_n: lam2 = -1, so bar form is -I - A
        let k5 = Graph::complete(5).unwrap();
        let b = build_bg_bar(&k5);
        for i in 0..5 {
            for j in 0..5 {
                let want = if i == j { -1.0 } else { -1.0 };
                assert!((b.get(i, j) - want).abs() < 1e-9);
            }
        }
        // 2K2: lam2 = 1, bar form is I - A
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        let b = build_bg_bar(&g);
        let a = SymMatrix::adjacency(&g);
        for i in 0..4 {
            for j in 0..4 {
                let id = if i == j { 1.0 } else { 0.0 };
                assert!((b.get(i, j) - (id - a.get(i, j))).abs() < 1e-9);
            }
        }
    }

    #[test]
    fn interlacing_examples() {
        assert!(interlacing_test(&Graph::cycle(5).unwrap()));
        assert!(!interlacing_test(&Graph::cycle(4).unwrap()));
        // star K_{1,4}: complete multipartite, and lambda2 = 0 besides
        let star = Graph::from_edges(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        assert!(!interlacing_test(&star));
    }

    #[test]
    fn condition_oracle_examples() {
        let t = condition_oracle(&Graph::cycle(5).unwrap());
        assert!(t.evaluated && t.cond1_psd && t.cond2_null_witness && t.cond3_singular);
        assert!(t.cond4_eventually_psd && t.cond5_ones_orthogonal && t.null_equivalence);
        assert!(t.verdict);
        assert!(t.witness.is_some());

        let t = condition_oracle(&Graph::cycle(4).unwrap());
        assert!(!t.representable && !t.verdict);

        // triangle plus isolated vertex: verdict must match test_spherical
        let g = Graph::from_edges(4, &[(0, 1), (0, 2), (1, 2)]).unwrap();
        assert_eq!(condition_oracle(&g).verdict, test_spherical(&g).spherical);
    }

    #[test]
    fn regular_corollary_examples() {
        assert!(check_regular_corollary(&Graph::cycle(5).unwrap()));
        assert!(check_regular_corollary(&Graph::cycle(6).unwrap()));
        assert!(test_spherical(&Graph::cycle(6).unwrap()).spherical);
        // K_{3,3} is complete multipartite: vacuous
        let mut k33 = Graph::empty(6).unwrap();
        for i in 0..3 {
            for j in 3..6 {
                k33.add_edge(i, j).unwrap();
            }
        }
        assert!(check_regular_corollary(&k33));
        assert!(!test_spherical(&k33).spherical);
    }

    #[test]
    fn known_nonspherical_with_matching_top_eigenvalue() {
        // lambda2 appears once in A but twice among the mu's: the multiplicity
        // clause must reject even though mu1 = lambda2
        let g = Graph::from_edges(
            7,
            &[(0, 1), (1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (2, 6)],
        )
        .unwrap();
        let r = test_spherical(&g);
        assert!(r.representable);
        assert!((r.mu1 - r.lambda2).abs() < 1e-9);
        assert_eq!(r.mult_lambda2_a, 1);
        assert_eq!(r.mult_lambda2_pap, 2);
        assert!(!r.spherical);
        assert!(!interlacing_test(&g));
        assert!(!condition_oracle(&g).verdict);
    }

    #[test]
    fn path_with_two_isolated_vertices_is_spherical() {
        // four pentagon vertices plus two points on the orthogonal circle:
        // spherical in R^4 with ratio phi
        let g = Graph::from_edges(6, &[(0, 5), (4, 5), (3, 4)]).unwrap();
        let r = test_spherical(&g);
        assert!(r.spherical);
        assert!((r.ratio_k.unwrap() - PHI).abs() < 1e-9);
        assert_eq!(r.min_dimension, Some(4));
    }

    #[test]
    fn verdict_is_isomorphism_invariant() {
        let mut rng = ChaCha8Rng::seed_from_u64(71);
        for _ in 0..200 {
            let n = 5 + (rng.next_u64() % 4) as usize;
            let g = Graph::random(n, 0.5, &mut rng).unwrap();
            let base = test_spherical(&g);
            let mut perm: Vec<usize> = (0..n).collect();
            // Fisher-Yates with the same rng
            for i in (1..n).rev() {
                let j = (rng.next_u64() % (i as u64 + 1)) as usize;
                perm.swap(i, j);
            }
            let other = test_spherical(&g.permuted(&perm));
            assert_eq!(base.spherical, other.spherical);
            assert_eq!(base.min_dimension, other.min_dimension);
            if let (Some(a), Some(b)) = (base.ratio_k, other.ratio_k) {
                assert!((a - b).abs() < 1e-9);
            }
        }
    }

    #[test]
    fn three_tests_agree_on_random_graphs() {
        let mut rng = ChaCha8Rng::seed_from_u64(101);
        for _ in 0..500 {
            let n = 6 + (rng.next_u64() % 5) as usize;
            let g = Graph::random(n, 0.5, &mut rng).unwrap();
            let a = test_spherical(&g).spherical;
            let b = interlacing_test(&g);
            let c = condition_oracle(&g).verdict;
            assert_eq!(a, b, "spectral vs interlacing on {g:?}");
            assert_eq!(a, c, "spectral vs conditions on {g:?}");
        }
    }

    #[test]
    fn report_serializes_with_stable_field_names() {
        let r = test_spherical(&Graph::cycle(5).unwrap());
        let json = serde_json::to_string(&r).unwrap();
        for key in [
            "\"n\"",
            "\"d\"",
            "\"representable\"",
            "\"spherical\"",
            "\"lambda1\"",
            "\"lambda2\"",
            "\"mult_lambda2_A\"",
            "\"mult_lambda2_PAP\"",
            "\"mu1\"",
            "\"ratio_k\"",
            "\"min_dimension\"",
            "\"borderline\"",
        ] {
            assert!(json.contains(key), "missing {key} in {json}");
        }
    }
}
