//! Deterministic symmetric eigensolvers: a dense generalized solver for the
//! Galerkin pencil and Sturm-sequence bisection for the finite-difference
//! tridiagonal matrices. The two paths are independent and serve as mutual
//! oracles in the test suite.

#[derive(Debug, Clone, thiserror::Error)]
pub enum LinalgError {
    #[error("matrix is not positive definite (Cholesky pivot {pivot:e} at index {index}); assembly precision is exhausted")]
    NotPositiveDefinite { index: usize, pivot: f64 },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("eigenvalue residual {residual:e} exceeds bound {bound:e} at pair {index}")]
    ResidualCheck { index: usize, residual: f64, bound: f64 },
    #[error("invalid eigenvalue index range {lo}..{hi} for order {order}")]
    BadRange { lo: usize, hi: usize, order: usize },
}

/// Dense symmetric matrix, stored as the lower triangle in row-major order.
#[derive(Debug, Clone, PartialEq)]
pub struct SymMatrix {
    n: usize,
    a: Vec<f64>,
}

impl SymMatrix {
    pub fn zeros(n: usize) -> Self {
        SymMatrix { n, a: vec![0.0; n * (n + 1) / 2] }
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> f64) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            for j in 0..=i {
                m.set(i, j, f(i, j));
            }
        }
        m
    }

    pub fn diagonal(d: &[f64]) -> Self {
        let mut m = Self::zeros(d.len());
        for (i, &v) in d.iter().enumerate() {
            m.set(i, i, v);
        }
        m
    }

    pub fn identity(n: usize) -> Self {
        Self::diagonal(&vec![1.0; n])
    }

    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    fn idx(i: usize, j: usize) -> usize {
        debug_assert!(j <= i);
        i * (i + 1) / 2 + j
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        if j <= i {
            self.a[Self::idx(i, j)]
        } else {
            self.a[Self::idx(j, i)]
        }
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: f64) {
        if j <= i {
            self.a[Self::idx(i, j)] = v;
        } else {
            self.a[Self::idx(j, i)] = v;
        }
    }

    pub fn to_dense(&self) -> Vec<Vec<f64>> {
        (0..self.n).map(|i| (0..self.n).map(|j| self.get(i, j)).collect()).collect()
    }

    /// Frobenius norm.
    pub fn norm(&self) -> f64 {
        let mut s = 0.0;
        for i in 0..self.n {
            for j in 0..self.n {
                s += self.get(i, j).powi(2);
            }
        }
        s.sqrt()
    }

    pub fn mul_vec(&self, x: &[f64]) -> Vec<f64> {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.get(i, j) * x[j]).sum())
            .collect()
    }
}

/// Lower-triangular Cholesky factor of a symmetric positive-definite matrix.
fn cholesky(m: &SymMatrix) -> Result<Vec<Vec<f64>>, LinalgError> {
    let n = m.order();
    let mut l = vec![vec![0.0; n]; n];
    for i in 0..n {
        for j in 0..=i {
            let mut s = m.get(i, j);
            for k in 0..j {
                s -= l[i][k] * l[j][k];
            }
            if i == j {
                if s <= 0.0 || !s.is_finite() {
                    return Err(LinalgError::NotPositiveDefinite { index: i, pivot: s });
                }
                l[i][j] = s.sqrt();
            } else {
                l[i][j] = s / l[j][j];
            }
        }
    }
    Ok(l)
}

/// Cyclic Jacobi eigenvalue iteration on a dense symmetric matrix.
/// Returns eigenvalues ascending with the accumulated orthogonal vectors
/// (columns of the rotation product).
fn jacobi_eigen(a0: &[Vec<f64>]) -> (Vec<f64>, Vec<Vec<f64>>) {
    let n = a0.len();
    let mut a: Vec<Vec<f64>> = a0.to_vec();
    let mut v = vec![vec![0.0; n]; n];
    for (i, row) in v.iter_mut().enumerate() {
        row[i] = 1.0;
    }
    let off = |a: &Vec<Vec<f64>>| -> f64 {
        let mut s = 0.0;
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    s += a[i][j] * a[i][j];
                }
            }
        }
        s.sqrt()
    };
    let scale: f64 = a0.iter().flatten().map(|x| x * x).sum::<f64>().sqrt().max(f64::MIN_POSITIVE);
    for _sweep in 0..64 {
        if off(&a) <= 1e-15 * scale {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a[p][q];
                if apq.abs() <= 1e-300 {
                    continue;
                }
                let theta = (a[q][q] - a[p][p]) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let akp = a[k][p];
                    let akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[p][k];
                    let aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
                for row in v.iter_mut() {
                    let vp = row[p];
                    let vq = row[q];
                    row[p] = c * vp - s * vq;
                    row[q] = s * vp + c * vq;
                }
            }
        }
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[i][i].total_cmp(&a[j][j]));
    let values = order.iter().map(|&i| a[i][i]).collect();
    let vectors = order
        .iter()
        .map(|&col| (0..n).map(|row| v[row][col]).collect())
        .collect();
    (values, vectors)
}

/// Result of a generalized symmetric eigensolve `S x = λ M x`.
#[derive(Debug, Clone)]
pub struct GenEigen {
    /// Ascending eigenvalues (the `n_eigs` lowest).
    pub values: Vec<f64>,
    /// Eigenvectors in the original basis, `vectors[k]` paired with `values[k]`.
    pub vectors: Vec<Vec<f64>>,
}

/// Solve the symmetric-definite pencil `S x = λ M x` by Cholesky reduction of
/// `M` and Jacobi iteration, returning the `n_eigs` lowest eigenpairs.
/// Each returned pair satisfies `‖Sx - λMx‖ <= 1e-10 ‖S‖ ‖x‖`.
pub fn gen_sym_eig(s: &SymMatrix, m: &SymMatrix, n_eigs: usize) -> Result<GenEigen, LinalgError> {
    let n = s.order();
    if m.order() != n {
        return Err(LinalgError::DimensionMismatch(format!(
            "S is {}x{} but M is {}x{}",
            n,
            n,
            m.order(),
            m.order()
        )));
    }
    if n_eigs > n {
        return Err(LinalgError::BadRange { lo: 0, hi: n_eigs, order: n });
    }
    let l = cholesky(m)?;
    // A = L^{-1} S L^{-T}: first Y = L^{-1} S (forward solve per column),
    // then A = Y L^{-T} applied to rows.
    let dense = s.to_dense();
    let mut y = vec![vec![0.0; n]; n];
    for col in 0..n {
        for i in 0..n {
            let mut acc = dense[i][col];
            for k in 0..i {
                acc -= l[i][k] * y[k][col];
            }
            y[i][col] = acc / l[i][i];
        }
    }
    let mut a = vec![vec![0.0; n]; n];
    for row in 0..n {
        for j in 0..n {
            let mut acc = y[row][j];
            for k in 0..j {
                acc -= l[j][k] * a[row][k];
            }
            a[row][j] = acc / l[j][j];
        }
    }
    // symmetrize to scrub the roundoff skew
    for i in 0..n {
        for j in 0..i {
            let v = 0.5 * (a[i][j] + a[j][i]);
            a[i][j] = v;
            a[j][i] = v;
        }
    }
    let (values, yvecs) = jacobi_eigen(&a);
    // back-transform: x = L^{-T} y
    let mut vectors = Vec::with_capacity(n_eigs);
    for yv in yvecs.iter().take(n_eigs) {
        let mut x = yv.clone();
        for i in (0..n).rev() {
            let mut acc = x[i];
            for k in (i + 1)..n {
                acc -= l[k][i] * x[k];
            }
            x[i] = acc / l[i][i];
        }
        vectors.push(x);
    }
    let values: Vec<f64> = values.into_iter().take(n_eigs).collect();
    // residual guarantee
    let s_norm = s.norm();
    for (k, (lam, x)) in values.iter().zip(vectors.iter()).enumerate() {
        let sx = s.mul_vec(x);
        let mx = m.mul_vec(x);
        let resid: f64 = sx
            .iter()
            .zip(mx.iter())
            .map(|(a, b)| (a - lam * b).powi(2))
            .sum::<f64>()
            .sqrt();
        let xnorm: f64 = x.iter().map(|v| v * v).sum::<f64>().sqrt();
        let bound = 1e-10 * s_norm * xnorm;
        if resid > bound {
            return Err(LinalgError::ResidualCheck { index: k, residual: resid, bound });
        }
    }
    Ok(GenEigen { values, vectors })
}

/// Number of eigenvalues of the symmetric tridiagonal matrix strictly below
/// `x`, by counting negative pivots of the shifted LDLᵀ factorization.
pub fn sturm_count_below(diag: &[f64], offdiag: &[f64], x: f64) -> usize {
    let n = diag.len();
    if n == 0 {
        return 0;
    }
    debug_assert_eq!(offdiag.len(), n.saturating_sub(1));
    let guard = f64::MIN_POSITIVE * 4.0;
    let mut count = 0usize;
    let mut q = diag[0] - x;
    if q < 0.0 {
        count += 1;
    }
    for i in 1..n {
        let denom = if q.abs() < guard { if q >= 0.0 { guard } else { -guard } } else { q };
        q = (diag[i] - x) - offdiag[i - 1] * offdiag[i - 1] / denom;
        if q < 0.0 {
            count += 1;
        }
    }
    count
}

/// Eigenvalues with indices in `index_range` (0-based, ascending order) of a
/// symmetric tridiagonal matrix, by Sturm-sequence bisection, each to absolute
/// tolerance `1e-12 * ‖T‖` (or `abs_tol` if given).
pub fn tridiag_eig_bisect(
    diag: &[f64],
    offdiag: &[f64],
    index_range: std::ops::Range<usize>,
    abs_tol: Option<f64>,
) -> Result<Vec<f64>, LinalgError> {
    let n = diag.len();
    if index_range.end > n || index_range.start >= index_range.end {
        return Err(LinalgError::BadRange {
            lo: index_range.start,
            hi: index_range.end,
            order: n,
        });
    }
    if n == 1 {
        return Ok(vec![diag[0]]);
    }
    // Gershgorin bounds
    let mut lo = f64::INFINITY;
    let mut hi = f64::NEG_INFINITY;
    for i in 0..n {
        let e1 = if i > 0 { offdiag[i - 1].abs() } else { 0.0 };
        let e2 = if i + 1 < n { offdiag[i].abs() } else { 0.0 };
        lo = lo.min(diag[i] - e1 - e2);
        hi = hi.max(diag[i] + e1 + e2);
    }
    let norm = lo.abs().max(hi.abs()).max(f64::MIN_POSITIVE);
    let tol = abs_tol.unwrap_or(1e-12 * norm);
    let mut out = Vec::with_capacity(index_range.len());
    for k in index_range {
        let mut a = lo;
        let mut b = hi;
        for _ in 0..200 {
            let mid = 0.5 * (a + b);
            if b - a <= tol.max(4.0 * f64::EPSILON * mid.abs()) {
                break;
            }
            if sturm_count_below(diag, offdiag, mid) <= k {
                a = mid;
            } else {
                b = mid;
            }
        }
        out.push(0.5 * (a + b));
    }
    Ok(out)
}
