//! Optimization of functionals over separable-state classes.
//!
//! A linear functional over the convex separable set is extremized at pure
//! product states, so bounds like `U(A) = max tr[A sigma]` reduce to
//! optimization over per-party unit vectors. The workhorse is a cyclic
//! *see-saw*: fix all parties but one, contract the observable to a local
//! Hermitian operator on the free party, and jump to its extremal
//! eigenvector. Every step improves the objective monotonically, and the best
//! of many seeded restarts is kept. All results are **inner** bounds: a
//! reported maximum never exceeds the true maximum.
//!
//! Restart `r` of a run with seed `s` draws its start from an independent
//! substream seeded `s + r`; the merge over restarts is order-fixed, so
//! results are reproducible bit-for-bit for a given build, regardless of the
//! thread count.

pub mod grid;
pub mod nonlinear;
pub mod param;

use nalgebra::DVector;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::operators::{C64, HermitianOperator};
use crate::parallel;
use crate::states::{DensityMatrix, Partition, ProductVector, PureState, random_product_with};

pub use grid::grid_oracle;
pub use nonlinear::{StateClass, biseparable_min, nonlinear_extremum};

/// Knobs for every optimizer in the crate.
#[derive(Debug, Clone)]
pub struct OptimizerConfig {
    /// Independent seeded restarts (>= 1).
    pub restarts: usize,
    /// Relative-change stopping threshold.
    pub tol: f64,
    /// Per-restart sweep cap.
    pub max_iter: usize,
    /// Base seed; restart r uses substream seed + r.
    pub seed: u64,
    /// Grid points per angle (grid oracle only, >= 4).
    pub resolution: usize,
    /// Number of pure products in the mixed-state search (>= 1; 1 = pure).
    pub mixture_rank: usize,
}

impl Default for OptimizerConfig {
    fn default() -> Self {
        Self { restarts: 64, tol: 1e-10, max_iter: 500, seed: 0, resolution: 24, mixture_rank: 1 }
    }
}

impl OptimizerConfig {
    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn with_restarts(mut self, restarts: usize) -> Self {
        self.restarts = restarts;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.restarts < 1 {
            return Err(Error::BadArgument("restarts must be at least 1".into()));
        }
        if self.resolution < 4 {
            return Err(Error::BadArgument("resolution must be at least 4".into()));
        }
        if self.mixture_rank < 1 {
            return Err(Error::BadArgument("mixture_rank must be at least 1".into()));
        }
        if !(self.tol > 0.0) || self.max_iter == 0 {
            return Err(Error::BadArgument("tol must be positive and max_iter nonzero".into()));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExtremumMode {
    Min,
    Max,
}

impl ExtremumMode {
    fn better(self, candidate: f64, incumbent: f64) -> bool {
        match self {
            ExtremumMode::Min => candidate < incumbent,
            ExtremumMode::Max => candidate > incumbent,
        }
    }
}

/// Optimizing state: one pure product, or a weighted mixture of them.
#[derive(Debug, Clone)]
pub enum SeparableCertificate {
    Pure(ProductVector),
    Mixture(Vec<(f64, ProductVector)>),
}

impl SeparableCertificate {
    /// The density matrix the certificate describes.
    pub fn density(&self) -> DensityMatrix {
        match self {
            Self::Pure(pv) => pv.density(),
            Self::Mixture(parts) => {
                let pures: Vec<(f64, PureState)> =
                    parts.iter().map(|(w, pv)| (*w, pv.assemble())).collect();
                DensityMatrix::mixture(&pures).expect("certificate mixtures are valid")
            }
        }
    }

    /// Re-evaluates `tr[a rho_certificate]`.
    pub fn evaluate(&self, a: &HermitianOperator) -> f64 {
        match self {
            Self::Pure(pv) => a.expectation(pv.assemble().amplitudes()),
            Self::Mixture(parts) => parts
                .iter()
                .map(|(w, pv)| w * a.expectation(pv.assemble().amplitudes()))
                .sum(),
        }
    }
}

/// Solver bookkeeping attached to every bound.
#[derive(Debug, Clone)]
pub struct BoundMeta {
    /// Sweeps used by the winning restart.
    pub iterations: usize,
    /// Whether the winning restart met the relative-change criterion.
    pub converged: bool,
    /// Index of the winning restart.
    pub best_restart: usize,
    /// Per-restart objective traces (one value per sweep).
    pub traces: Vec<Vec<f64>>,
}

/// An inner bound with its optimizing state and solver metadata.
#[derive(Debug, Clone)]
pub struct Bound {
    pub value: f64,
    pub certificate: SeparableCertificate,
    pub meta: BoundMeta,
}

/// Lower/upper separability bounds `[L, U]` with certificates.
#[derive(Debug, Clone)]
pub struct SeparabilityWindow {
    pub lower: Bound,
    pub upper: Bound,
}

impl SeparabilityWindow {
    pub fn l(&self) -> f64 {
        self.lower.value
    }

    pub fn u(&self) -> f64 {
        self.upper.value
    }
}

pub(crate) struct RestartOutcome {
    pub(crate) value: f64,
    pub(crate) factors: Vec<PureState>,
    pub(crate) iterations: usize,
    pub(crate) converged: bool,
    pub(crate) trace: Vec<f64>,
}

impl RestartOutcome {
    pub(crate) fn into_bound(
        self,
        a: &HermitianOperator,
        partition: &Partition,
        best_restart: usize,
    ) -> Bound {
        let trace = vec![self.trace.clone()];
        let pv = ProductVector::new(a.profile().clone(), partition.clone(), self.factors)
            .expect("factors built from the partition");
        Bound {
            value: self.value,
            certificate: SeparableCertificate::Pure(pv),
            meta: BoundMeta {
                iterations: self.iterations,
                converged: self.converged,
                best_restart,
                traces: trace,
            },
        }
    }
}

/// One see-saw restart from a random product start.
fn seesaw_restart(
    a: &HermitianOperator,
    partition: &Partition,
    mode: ExtremumMode,
    tol: f64,
    max_iter: usize,
    rng: &mut ChaCha8Rng,
) -> RestartOutcome {
    let start = random_product_with(a.profile(), partition, rng);
    seesaw_from(a, partition, mode, tol, max_iter, &start)
}

/// See-saw iteration from a given product start. Each party update moves to
/// the extremal eigenvector of the contracted local operator, so the
/// objective improves monotonically sweep by sweep.
pub(crate) fn seesaw_from(
    a: &HermitianOperator,
    partition: &Partition,
    mode: ExtremumMode,
    tol: f64,
    max_iter: usize,
    start: &ProductVector,
) -> RestartOutcome {
    let profile = a.profile();
    let dim = profile.total();
    let groups = partition.groups().len();
    let tables: Vec<Vec<usize>> =
        (0..groups).map(|g| partition.group_index_table(g, profile)).collect();
    let group_dims = partition.group_dims(profile);

    let mut factors: Vec<DVector<C64>> =
        start.factors().iter().map(|f| f.amplitudes().clone()).collect();

    let mut value = {
        let pv = ProductVector::new(
            profile.clone(),
            partition.clone(),
            factors
                .iter()
                .enumerate()
                .map(|(g, f)| {
                    PureState::new(partition.group_profile(g, profile), f.clone()).unwrap()
                })
                .collect(),
        )
        .unwrap();
        a.expectation(pv.assemble().amplitudes())
    };

    let mut trace = Vec::new();
    let mut iterations = 0;
    let mut converged = false;
    let zero = C64::new(0.0, 0.0);

    let mut env = vec![zero; dim];
    for sweep in 0..max_iter {
        iterations = sweep + 1;
        for g in 0..groups {
            // env[m] = product of the other groups' amplitudes at m
            for (m, e) in env.iter_mut().enumerate() {
                let mut z = C64::new(1.0, 0.0);
                for (h, f) in factors.iter().enumerate() {
                    if h != g {
                        z *= f[tables[h][m]];
                        if z == zero {
                            break;
                        }
                    }
                }
                *e = z;
            }
            // local contraction M[s,t] = sum conj(env[m]) A[m,m'] env[m']
            // over m in class s, m' in class t
            let dg = group_dims[g];
            let mut local = nalgebra::DMatrix::from_element(dg, dg, zero);
            let mat = a.matrix();
            for m in 0..dim {
                if env[m] == zero {
                    continue;
                }
                let em = env[m].conj();
                let s = tables[g][m];
                for mp in 0..dim {
                    if env[mp] == zero {
                        continue;
                    }
                    local[(s, tables[g][mp])] += em * mat[(m, mp)] * env[mp];
                }
            }
            // numerical asymmetry of the contraction is at rounding level
            let adj = local.adjoint();
            local = (local + adj) * C64::new(0.5, 0.0);
            let eig = nalgebra::linalg::SymmetricEigen::new(local);
            let mut best_k = 0;
            for k in 1..dg {
                if mode.better(eig.eigenvalues[k], eig.eigenvalues[best_k]) {
                    best_k = k;
                }
            }
            let new_value = eig.eigenvalues[best_k];
            let slack = 1e-9 * (1.0 + new_value.abs());
            let worsened = match mode {
                ExtremumMode::Min => new_value > value + slack,
                ExtremumMode::Max => new_value < value - slack,
            };
            debug_assert!(!worsened, "see-saw must improve monotonically: {value} -> {new_value}");
            factors[g] = eig.eigenvectors.column(best_k).into_owned();
            value = new_value;
        }
        trace.push(value);
        if sweep > 0 {
            let prev = trace[sweep - 1];
            if (value - prev).abs() <= tol * (1.0 + value.abs()) {
                converged = true;
                break;
            }
        }
    }

    let states: Vec<PureState> = factors
        .into_iter()
        .enumerate()
        .map(|(g, f)| PureState::new(partition.group_profile(g, profile), f).unwrap())
        .collect();
    RestartOutcome { value, factors: states, iterations, converged, trace }
}

/// Multistart see-saw extremum of `tr[a sigma]` over pure states that are
/// product across the given partition.
pub fn seesaw_extremum_partitioned(
    a: &HermitianOperator,
    partition: &Partition,
    mode: ExtremumMode,
    cfg: &OptimizerConfig,
) -> Result<Bound> {
    cfg.validate()?;
    if partition.group_dims(a.profile()).iter().product::<usize>() != a.dim() {
        return Err(Error::BadPartition("partition does not match the profile".into()));
    }

    let outcomes: Vec<RestartOutcome> = parallel::install(|| {
        (0..cfg.restarts)
            .into_par_iter()
            .map(|r| {
                let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed.wrapping_add(r as u64));
                seesaw_restart(a, partition, mode, cfg.tol, cfg.max_iter, &mut rng)
            })
            .collect()
    });

    // order-fixed merge; ties (difference < 1e-12) keep the earlier restart
    let mut best = 0;
    for r in 1..outcomes.len() {
        if mode.better(outcomes[r].value, outcomes[best].value)
            && (outcomes[r].value - outcomes[best].value).abs() >= 1e-12
        {
            best = r;
        }
    }
    let traces = outcomes.iter().map(|o| o.trace.clone()).collect();
    let winner = &outcomes[best];
    let pv = ProductVector::new(a.profile().clone(), partition.clone(), winner.factors.clone())?;
    Ok(Bound {
        value: winner.value,
        certificate: SeparableCertificate::Pure(pv),
        meta: BoundMeta {
            iterations: winner.iterations,
            converged: winner.converged,
            best_restart: best,
            traces,
        },
    })
}

/// See-saw extremum over fully product states (the extreme points of the
/// separable set).
pub fn seesaw_extremum(
    a: &HermitianOperator,
    mode: ExtremumMode,
    cfg: &OptimizerConfig,
) -> Bound {
    let partition = Partition::fully_product(a.profile().parties());
    seesaw_extremum_partitioned(a, &partition, mode, cfg)
        .expect("fully-product partition always matches")
}

/// Both separability bounds `[L(a), U(a)]` of a linear observable.
pub fn separability_window(a: &HermitianOperator, cfg: &OptimizerConfig) -> SeparabilityWindow {
    SeparabilityWindow {
        lower: seesaw_extremum(a, ExtremumMode::Min, cfg),
        upper: seesaw_extremum(a, ExtremumMode::Max, cfg),
    }
}

/// Result of a linear-fractional optimization.
#[derive(Debug, Clone)]
pub struct RatioExtremum {
    /// Extremal value of `tr[a sigma] / tr[b sigma]` over product states.
    pub value: f64,
    pub certificate: SeparableCertificate,
    /// Outer (Dinkelbach) iterations used.
    pub iterations: usize,
    pub converged: bool,
}

/// Dinkelbach iteration for `tr[a sigma] / tr[b sigma]` over pure product
/// states; `b` must be positive definite. Each step solves the linearized
/// problem `extremum of tr[(a - t b) sigma]` by see-saw and updates `t` to
/// the certificate's ratio, stopping when the linearized extremum vanishes.
pub fn ratio_extremum(
    a: &HermitianOperator,
    b: &HermitianOperator,
    mode: ExtremumMode,
    cfg: &OptimizerConfig,
) -> Result<RatioExtremum> {
    cfg.validate()?;
    a.check_profile(b)?;
    let b_min = b.lambda_min();
    if b_min <= 1e-10 {
        return Err(Error::NotPositiveDefinite(b_min));
    }

    // start from the plain extremizer of a
    let start = seesaw_extremum(a, mode, cfg);
    let mut cert = start.certificate;
    let mut t = cert.evaluate(a) / cert.evaluate(b);
    let scale = a.max_norm().max(1.0);

    let mut iterations = 0;
    let mut converged = false;
    for k in 0..60 {
        iterations = k + 1;
        let shifted = a.affine(1.0, b, -t)?;
        let bound = seesaw_extremum(&shifted, mode, cfg);
        if bound.value.abs() <= 1e-10 * scale {
            converged = true;
            break;
        }
        cert = bound.certificate;
        let num = cert.evaluate(a);
        let den = cert.evaluate(b);
        debug_assert!(den > 0.0);
        let t_next = num / den;
        if (t_next - t).abs() <= 1e-14 * (1.0 + t.abs()) {
            t = t_next;
            converged = true;
            break;
        }
        t = t_next;
    }

    Ok(RatioExtremum { value: t, certificate: cert, iterations, converged })
}
