//! Dense complex Hermitian operators on small multipartite Hilbert spaces.
//!
//! Everything in the crate is carried by [`HermitianOperator`]: witnesses,
//! states, mixtures and reference operators. Operators are tagged with a
//! [`DimensionProfile`] listing the local dimension of each party; the matrix
//! lives in the computational product basis with **party 1 most significant**,
//! i.e. the basis vector `|a1 a2 .. ak>` sits at row `sum_i a_i * prod_{j>i} d_j`.
//!
//! Dimensions are capped at 4 parties and total dimension 64, which keeps
//! dense eigendecompositions unconditionally adequate.

use nalgebra::{Complex, DMatrix, DVector};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type C64 = Complex<f64>;

/// Largest total dimension accepted by [`DimensionProfile::new`].
pub const MAX_TOTAL_DIM: usize = 64;
/// Largest party count accepted by [`DimensionProfile::new`].
pub const MAX_PARTIES: usize = 4;

/// Asymmetry below this is silently symmetrized away at construction;
/// anything larger is rejected as genuinely non-Hermitian.
pub const HERMITICITY_REPAIR_TOL: f64 = 1e-9;

/// Default tolerance for positive-semidefiniteness checks.
pub const PSD_TOL: f64 = 1e-10;

/// Per-party local dimensions of a multipartite Hilbert space.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DimensionProfile {
    dims: Vec<usize>,
}

impl DimensionProfile {
    /// Builds a profile from local dimensions. Every dimension must be at
    /// least 2, and the desk-scale guard (k <= 4, D <= 64) applies.
    pub fn new(dims: &[usize]) -> Result<Self> {
        if dims.is_empty() {
            return Err(Error::EmptyProfile);
        }
        if let Some(&d) = dims.iter().find(|&&d| d < 2) {
            return Err(Error::BadLocalDimension(d));
        }
        let total: usize = dims.iter().product();
        if dims.len() > MAX_PARTIES || total > MAX_TOTAL_DIM {
            return Err(Error::ProfileTooLarge { dims: dims.to_vec() });
        }
        Ok(Self { dims: dims.to_vec() })
    }

    /// `k` qubits.
    pub fn qubits(k: usize) -> Result<Self> {
        Self::new(&vec![2; k])
    }

    /// Two parties of dimensions `d1` and `d2`.
    pub fn bipartite(d1: usize, d2: usize) -> Result<Self> {
        Self::new(&[d1, d2])
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn parties(&self) -> usize {
        self.dims.len()
    }

    /// Total dimension D = d1 * d2 * ... * dk.
    pub fn total(&self) -> usize {
        self.dims.iter().product()
    }

    /// Flat index of the basis vector with the given per-party digits
    /// (party 1 most significant).
    pub fn index_of(&self, digits: &[usize]) -> usize {
        debug_assert_eq!(digits.len(), self.dims.len());
        let mut idx = 0;
        for (a, d) in digits.iter().zip(&self.dims) {
            debug_assert!(a < d);
            idx = idx * d + a;
        }
        idx
    }

    /// Per-party digits of a flat basis index.
    pub fn digits_of(&self, mut index: usize) -> Vec<usize> {
        let mut digits = vec![0; self.dims.len()];
        for (slot, &d) in digits.iter_mut().zip(&self.dims).rev() {
            *slot = index % d;
            index /= d;
        }
        digits
    }

    /// Profile of `self` followed by the parties of `other`.
    pub fn concat(&self, other: &Self) -> Result<Self> {
        let mut dims = self.dims.clone();
        dims.extend_from_slice(&other.dims);
        Self::new(&dims)
    }
}

/// Eigendecomposition of a Hermitian operator: real eigenvalues in ascending
/// order with matching orthonormal eigenvector columns.
#[derive(Debug, Clone)]
pub struct Eigh {
    pub values: Vec<f64>,
    pub vectors: DMatrix<C64>,
}

impl Eigh {
    pub fn lambda_min(&self) -> f64 {
        self.values[0]
    }

    pub fn lambda_max(&self) -> f64 {
        *self.values.last().expect("non-empty spectrum")
    }

    /// Eigenvector column for the k-th (ascending) eigenvalue.
    pub fn vector(&self, k: usize) -> DVector<C64> {
        self.vectors.column(k).into_owned()
    }
}

/// Dense Hermitian matrix tagged with its multipartite dimension profile.
///
/// Hermiticity is enforced at construction: asymmetry up to 1e-9 (I/O
/// rounding) is repaired by `(M + M^dagger)/2`, anything above is rejected.
/// Values are immutable afterwards; all operations are pure functions.
#[derive(Debug, Clone, PartialEq)]
pub struct HermitianOperator {
    profile: DimensionProfile,
    mat: DMatrix<C64>,
}

impl HermitianOperator {
    pub fn new(profile: DimensionProfile, mat: DMatrix<C64>) -> Result<Self> {
        let dim = profile.total();
        if mat.nrows() != dim || mat.ncols() != dim {
            return Err(Error::ShapeMismatch { rows: mat.nrows(), cols: mat.ncols(), dim });
        }
        for i in 0..dim {
            for j in 0..dim {
                let z = mat[(i, j)];
                if !z.re.is_finite() || !z.im.is_finite() {
                    return Err(Error::NonFinite(i, j));
                }
            }
        }
        let mut asym = 0.0f64;
        for i in 0..dim {
            for j in i..dim {
                asym = asym.max((mat[(i, j)] - mat[(j, i)].conj()).norm());
            }
        }
        if asym > HERMITICITY_REPAIR_TOL {
            return Err(Error::NotHermitian(asym));
        }
        let mat = if asym == 0.0 {
            mat
        } else {
            let adj = mat.adjoint();
            (mat + adj) * C64::new(0.5, 0.0)
        };
        Ok(Self { profile, mat })
    }

    /// Builds the matrix entry-wise from a closure over (row, col).
    pub fn from_fn(profile: DimensionProfile, f: impl Fn(usize, usize) -> C64) -> Result<Self> {
        let dim = profile.total();
        let mat = DMatrix::from_fn(dim, dim, |i, j| f(i, j));
        Self::new(profile, mat)
    }

    /// Real matrix given as row-major rows.
    pub fn from_real_rows(profile: DimensionProfile, rows: &[&[f64]]) -> Result<Self> {
        let dim = profile.total();
        if rows.len() != dim || rows.iter().any(|r| r.len() != dim) {
            return Err(Error::ShapeMismatch {
                rows: rows.len(),
                cols: rows.first().map_or(0, |r| r.len()),
                dim,
            });
        }
        Self::from_fn(profile, |i, j| C64::new(rows[i][j], 0.0))
    }

    pub fn zero(profile: DimensionProfile) -> Self {
        let dim = profile.total();
        Self { profile, mat: DMatrix::from_element(dim, dim, C64::new(0.0, 0.0)) }
    }

    pub fn identity(profile: DimensionProfile) -> Self {
        let dim = profile.total();
        Self { profile, mat: DMatrix::identity(dim, dim) }
    }

    /// The maximally mixed state I/D.
    pub fn maximally_mixed(profile: DimensionProfile) -> Self {
        let dim = profile.total();
        let mut op = Self::identity(profile);
        op.mat /= C64::new(dim as f64, 0.0);
        op
    }

    pub fn profile(&self) -> &DimensionProfile {
        &self.profile
    }

    pub fn dim(&self) -> usize {
        self.profile.total()
    }

    pub fn matrix(&self) -> &DMatrix<C64> {
        &self.mat
    }

    pub fn entry(&self, i: usize, j: usize) -> C64 {
        self.mat[(i, j)]
    }

    pub fn trace(&self) -> f64 {
        // imaginary part vanishes by Hermiticity
        (0..self.dim()).map(|i| self.mat[(i, i)].re).sum()
    }

    pub fn scale(&self, s: f64) -> Self {
        Self { profile: self.profile.clone(), mat: &self.mat * C64::new(s, 0.0) }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_profile(other)?;
        Ok(Self { profile: self.profile.clone(), mat: &self.mat + &other.mat })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_profile(other)?;
        Ok(Self { profile: self.profile.clone(), mat: &self.mat - &other.mat })
    }

    /// `a*self + b*other`; the workhorse for SPA mixtures.
    pub fn affine(&self, a: f64, other: &Self, b: f64) -> Result<Self> {
        self.check_profile(other)?;
        Ok(Self {
            profile: self.profile.clone(),
            mat: &self.mat * C64::new(a, 0.0) + &other.mat * C64::new(b, 0.0),
        })
    }

    pub fn check_profile(&self, other: &Self) -> Result<()> {
        if self.profile != other.profile {
            return Err(Error::ProfileMismatch(
                self.profile.dims.clone(),
                other.profile.dims.clone(),
            ));
        }
        Ok(())
    }

    /// tr[self * other], real by Hermiticity of both factors.
    pub fn inner(&self, other: &Self) -> Result<f64> {
        self.check_profile(other)?;
        let mut acc = C64::new(0.0, 0.0);
        let n = self.dim();
        for i in 0..n {
            for j in 0..n {
                acc += self.mat[(i, j)] * other.mat[(j, i)];
            }
        }
        debug_assert!(acc.im.abs() <= 1e-10 * (1.0 + acc.re.abs()));
        Ok(acc.re)
    }

    /// `<psi| self |psi>` for an arbitrary (not necessarily normalized) vector.
    pub fn expectation(&self, psi: &DVector<C64>) -> f64 {
        let v = &self.mat * psi;
        let mut acc = C64::new(0.0, 0.0);
        for i in 0..psi.len() {
            acc += psi[i].conj() * v[i];
        }
        acc.re
    }

    /// Largest entry modulus.
    pub fn max_norm(&self) -> f64 {
        self.mat.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// Largest entry-wise difference to `other`.
    pub fn max_diff(&self, other: &Self) -> f64 {
        debug_assert_eq!(self.profile, other.profile);
        self.mat
            .iter()
            .zip(other.mat.iter())
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    /// Kronecker product with concatenated profile; party order is preserved,
    /// `self`'s parties come first (most significant).
    pub fn tensor(&self, other: &Self) -> Result<Self> {
        let profile = self.profile.concat(&other.profile)?;
        let (da, db) = (self.dim(), other.dim());
        let mat = DMatrix::from_fn(da * db, da * db, |i, j| {
            self.mat[(i / db, j / db)] * other.mat[(i % db, j % db)]
        });
        Ok(Self { profile, mat })
    }

    /// Transposition applied to one tensor factor. Involutive and
    /// trace-preserving; diagonal operators are left unchanged.
    pub fn partial_transpose(&self, party: usize) -> Result<Self> {
        let k = self.profile.parties();
        if party >= k {
            return Err(Error::InvalidParty { index: party, parties: k });
        }
        let dim = self.dim();
        let mut out = DMatrix::from_element(dim, dim, C64::new(0.0, 0.0));
        for i in 0..dim {
            let mut di = self.profile.digits_of(i);
            for j in 0..dim {
                let mut dj = self.profile.digits_of(j);
                std::mem::swap(&mut di[party], &mut dj[party]);
                let (ti, tj) = (self.profile.index_of(&di), self.profile.index_of(&dj));
                std::mem::swap(&mut di[party], &mut dj[party]);
                out[(ti, tj)] = self.mat[(i, j)];
            }
        }
        Ok(Self { profile: self.profile.clone(), mat: out })
    }

    /// Traces out one party, leaving the reduced operator on the rest.
    pub fn partial_trace(&self, party: usize) -> Result<Self> {
        let k = self.profile.parties();
        if party >= k {
            return Err(Error::InvalidParty { index: party, parties: k });
        }
        if k == 1 {
            return Err(Error::NothingLeft);
        }
        let mut kept = self.profile.dims.clone();
        let d_traced = kept.remove(party);
        let profile = DimensionProfile::new(&kept)?;
        let dim = profile.total();
        let mut out = DMatrix::from_element(dim, dim, C64::new(0.0, 0.0));
        for i in 0..dim {
            let di = profile.digits_of(i);
            for j in 0..dim {
                let dj = profile.digits_of(j);
                let mut acc = C64::new(0.0, 0.0);
                for a in 0..d_traced {
                    let mut fi = di.clone();
                    fi.insert(party, a);
                    let mut fj = dj.clone();
                    fj.insert(party, a);
                    acc += self.mat[(self.profile.index_of(&fi), self.profile.index_of(&fj))];
                }
                out[(i, j)] = acc;
            }
        }
        Ok(Self { profile, mat: out })
    }

    /// Full eigendecomposition, eigenvalues ascending. The reconstruction
    /// residual stays below 1e-10 for every profile the guard admits.
    pub fn eigh(&self) -> Eigh {
        let eig = nalgebra::linalg::SymmetricEigen::new(self.mat.clone());
        let n = self.dim();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&a, &b| eig.eigenvalues[a].total_cmp(&eig.eigenvalues[b]));
        let values: Vec<f64> = order.iter().map(|&k| eig.eigenvalues[k]).collect();
        let mut vectors = DMatrix::from_element(n, n, C64::new(0.0, 0.0));
        for (col, &k) in order.iter().enumerate() {
            vectors.set_column(col, &eig.eigenvectors.column(k));
        }
        Eigh { values, vectors }
    }

    pub fn lambda_min(&self) -> f64 {
        self.eigh().lambda_min()
    }

    pub fn lambda_max(&self) -> f64 {
        self.eigh().lambda_max()
    }

    /// True iff the minimum eigenvalue is at least `-tol`.
    pub fn is_psd(&self, tol: f64) -> bool {
        self.lambda_min() >= -tol
    }
}
