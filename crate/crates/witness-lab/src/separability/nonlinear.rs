//! Derivative-free optimization of nonlinear functionals over pure
//! (partition-)product states, with an optional mixed-state extension.
//!
//! The search runs coordinate-wise over the angle charts of the factors: a
//! coarse scan of each coordinate's range brackets the best sample, a
//! golden-section refinement polishes it, and passes repeat until a full pass
//! stops improving. Multistart works exactly as in the see-saw (substream
//! `seed + restart`, order-fixed merge).
//!
//! With `mixture_rank > 1` the candidate state is a convex combination of
//! that many pure products; the combination weights join the coordinate list
//! and are normalized onto the simplex. Nonlinear concave criteria can attain
//! their separable extrema at mixed states, so anything the mixture search
//! finds beyond the pure-product value is reported with a mixture
//! certificate.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::param;
use super::{Bound, BoundMeta, ExtremumMode, OptimizerConfig, SeparableCertificate};
use crate::error::{Error, Result};
use crate::operators::DimensionProfile;
use crate::parallel;
use crate::states::{DensityMatrix, Partition, ProductVector, PureState};

/// Which class of pure states spans the search space.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StateClass {
    /// Every party separate: extreme points of the fully separable set.
    FullyProduct,
    /// Party `i` separate from the rest grouped together.
    Bipartition(usize),
    /// All parties in one group: arbitrary pure states.
    AllPure,
}

impl StateClass {
    pub fn partition(&self, parties: usize) -> Result<Partition> {
        match *self {
            StateClass::FullyProduct => Ok(Partition::fully_product(parties)),
            StateClass::Bipartition(i) => Partition::bipartition(i, parties),
            StateClass::AllPure => Ok(Partition::single_group(parties)),
        }
    }
}

struct SearchSpace {
    profile: DimensionProfile,
    partition: Partition,
    group_dims: Vec<usize>,
    /// Angle parameters of one pure product.
    product_params: usize,
    rank: usize,
    ranges: Vec<(f64, f64)>,
}

impl SearchSpace {
    fn new(profile: &DimensionProfile, partition: Partition, rank: usize) -> Self {
        let group_dims = partition.group_dims(profile);
        let product_params: usize = group_dims.iter().map(|&d| param::param_count(d)).sum();
        let mut ranges = Vec::new();
        for _ in 0..rank {
            for &d in &group_dims {
                ranges.extend(param::param_ranges(d));
            }
        }
        if rank > 1 {
            ranges.extend(std::iter::repeat((0.0, 1.0)).take(rank));
        }
        Self { profile: profile.clone(), partition, group_dims, product_params, rank, ranges }
    }

    fn len(&self) -> usize {
        self.ranges.len()
    }

    fn product_at(&self, params: &[f64]) -> ProductVector {
        let mut offset = 0;
        let mut factors = Vec::with_capacity(self.group_dims.len());
        for (g, &d) in self.group_dims.iter().enumerate() {
            let count = param::param_count(d);
            let amps = param::amplitudes(d, &params[offset..offset + count]);
            offset += count;
            factors.push(
                PureState::new(self.partition.group_profile(g, &self.profile), amps)
                    .expect("chart amplitudes are unit vectors"),
            );
        }
        ProductVector::new(self.profile.clone(), self.partition.clone(), factors)
            .expect("factors built from the partition")
    }

    fn weights(&self, params: &[f64]) -> Vec<f64> {
        if self.rank == 1 {
            return vec![1.0];
        }
        let raw = &params[self.rank * self.product_params..];
        let mut w: Vec<f64> = raw.iter().map(|&x| x.max(0.0)).collect();
        let total: f64 = w.iter().sum();
        if total <= 1e-12 {
            w = vec![1.0 / self.rank as f64; self.rank];
        } else {
            for x in &mut w {
                *x /= total;
            }
        }
        w
    }

    fn density_at(&self, params: &[f64]) -> DensityMatrix {
        if self.rank == 1 {
            return self.product_at(params).density();
        }
        let weights = self.weights(params);
        let parts: Vec<(f64, PureState)> = (0..self.rank)
            .map(|k| {
                let block =
                    &params[k * self.product_params..(k + 1) * self.product_params];
                (weights[k], self.product_at(block).assemble())
            })
            .collect();
        DensityMatrix::mixture(&parts).expect("chart mixtures are valid")
    }

    fn certificate_at(&self, params: &[f64]) -> SeparableCertificate {
        if self.rank == 1 {
            SeparableCertificate::Pure(self.product_at(params))
        } else {
            let weights = self.weights(params);
            SeparableCertificate::Mixture(
                (0..self.rank)
                    .map(|k| {
                        let block =
                            &params[k * self.product_params..(k + 1) * self.product_params];
                        (weights[k], self.product_at(block))
                    })
                    .collect(),
            )
        }
    }
}

const COARSE_SAMPLES: usize = 13;
const GOLDEN_ITERS: usize = 40;

/// Golden-section refinement of `eval` restricted to one coordinate.
fn refine_coordinate(
    eval: &impl Fn(&[f64]) -> f64,
    params: &mut Vec<f64>,
    coord: usize,
    range: (f64, f64),
    mode: ExtremumMode,
    current: f64,
) -> f64 {
    let (lo, hi) = range;
    let start_x = params[coord];
    let mut probe = |x: f64| {
        params[coord] = x;
        eval(params)
    };

    // coarse scan, keeping the incumbent in the running
    let mut best_x = start_x;
    let mut best_v = current;
    let mut best_k = None;
    for k in 0..COARSE_SAMPLES {
        let x = lo + (hi - lo) * k as f64 / (COARSE_SAMPLES - 1) as f64;
        let v = probe(x);
        if mode.better(v, best_v) {
            best_v = v;
            best_x = x;
            best_k = Some(k);
        }
    }

    // bracket around the best sample and contract
    let step = (hi - lo) / (COARSE_SAMPLES - 1) as f64;
    let (mut a, mut b) = match best_k {
        Some(k) => {
            let x = lo + step * k as f64;
            ((x - step).max(lo), (x + step).min(hi))
        }
        None => ((best_x - step).max(lo), (best_x + step).min(hi)),
    };
    let inv_phi = 0.5 * (5.0f64.sqrt() - 1.0);
    let mut x1 = b - inv_phi * (b - a);
    let mut x2 = a + inv_phi * (b - a);
    let mut f1 = probe(x1);
    let mut f2 = probe(x2);
    for _ in 0..GOLDEN_ITERS {
        if mode.better(f1, f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - inv_phi * (b - a);
            f1 = probe(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + inv_phi * (b - a);
            f2 = probe(x2);
        }
    }
    for (x, v) in [(x1, f1), (x2, f2)] {
        if mode.better(v, best_v) {
            best_v = v;
            best_x = x;
        }
    }

    params[coord] = best_x;
    best_v
}

struct NonlinearOutcome {
    value: f64,
    params: Vec<f64>,
    iterations: usize,
    converged: bool,
    trace: Vec<f64>,
}

fn descend(
    eval: &(impl Fn(&[f64]) -> f64 + Sync),
    space: &SearchSpace,
    mode: ExtremumMode,
    cfg: &OptimizerConfig,
    rng: &mut ChaCha8Rng,
) -> NonlinearOutcome {
    let mut params: Vec<f64> =
        space.ranges.iter().map(|&(lo, hi)| rng.gen_range(lo..=hi)).collect();
    let mut value = eval(&params);
    let mut trace = vec![value];
    let mut iterations = 0;
    let mut converged = false;

    for pass in 0..cfg.max_iter {
        iterations = pass + 1;
        let before = value;
        for coord in 0..space.len() {
            value = refine_coordinate(eval, &mut params, coord, space.ranges[coord], mode, value);
        }
        trace.push(value);
        if (value - before).abs() <= cfg.tol * (1.0 + value.abs()) {
            converged = true;
            break;
        }
    }
    NonlinearOutcome { value, params, iterations, converged, trace }
}

/// Multistart coordinate-descent extremum of a nonlinear functional over the
/// given class of pure states (optionally extended to rank-`mixture_rank`
/// mixtures). Heuristic: the result is attained by the certificate, hence an
/// inner bound; convergence details land in the metadata.
pub fn nonlinear_extremum<F>(
    f: F,
    profile: &DimensionProfile,
    class: StateClass,
    mode: ExtremumMode,
    cfg: &OptimizerConfig,
) -> Result<Bound>
where
    F: Fn(&DensityMatrix) -> f64 + Sync,
{
    cfg.validate()?;
    let partition = class.partition(profile.parties())?;
    let space = SearchSpace::new(profile, partition, cfg.mixture_rank);
    let eval = |params: &[f64]| f(&space.density_at(params));

    let outcomes: Vec<NonlinearOutcome> = parallel::install(|| {
        (0..cfg.restarts)
            .into_par_iter()
            .map(|r| {
                let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed.wrapping_add(r as u64));
                descend(&eval, &space, mode, cfg, &mut rng)
            })
            .collect()
    });

    let mut best = 0;
    for r in 1..outcomes.len() {
        if mode.better(outcomes[r].value, outcomes[best].value)
            && (outcomes[r].value - outcomes[best].value).abs() >= 1e-12
        {
            best = r;
        }
    }
    let traces: Vec<Vec<f64>> = outcomes.iter().map(|o| o.trace.clone()).collect();
    let winner = &outcomes[best];
    Ok(Bound {
        value: winner.value,
        certificate: space.certificate_at(&winner.params),
        meta: BoundMeta {
            iterations: winner.iterations,
            converged: winner.converged,
            best_restart: best,
            traces,
        },
    })
}

/// Minimum of a functional over pure biseparable states of three qubits: the
/// least of the three bipartition classes 1|23, 2|13, 3|12. For concave
/// criteria this is the minimum over *all* biseparable states, because the
/// biseparable set is the convex hull of those pure classes and a concave
/// function is minimized at extreme points.
pub fn biseparable_min<F>(f: F, profile: &DimensionProfile, cfg: &OptimizerConfig) -> Result<Bound>
where
    F: Fn(&DensityMatrix) -> f64 + Sync,
{
    if profile.dims() != [2, 2, 2] {
        return Err(Error::NotThreeQubits(profile.dims().to_vec()));
    }
    let mut best: Option<Bound> = None;
    for i in 0..3 {
        let bound = nonlinear_extremum(&f, profile, StateClass::Bipartition(i), ExtremumMode::Min, cfg)?;
        best = match best {
            None => Some(bound),
            Some(b) if bound.value < b.value - 1e-12 => Some(bound),
            Some(b) => Some(b),
        };
    }
    Ok(best.expect("three classes searched"))
}
