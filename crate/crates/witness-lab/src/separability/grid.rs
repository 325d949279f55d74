//! Exhaustive angle-grid oracle.
//!
//! Independent verification for the see-saw: scan every product of per-party
//! chart angles at a fixed resolution, then polish the best grid point with a
//! single see-saw descent. The scan is exhaustive over the chart grid, so it
//! cannot be misled by a bad restart; it is limited to small parameter
//! budgets (at most 8 real angles in total).

use nalgebra::DVector;

use super::param;
use super::{Bound, ExtremumMode, OptimizerConfig, seesaw_from};
use crate::error::{Error, Result};
use crate::operators::{C64, HermitianOperator};
use crate::states::{Partition, ProductVector, PureState};

/// Total real-parameter budget the oracle accepts.
pub const GRID_PARAM_BUDGET: usize = 8;

/// Exhaustive scan of per-party chart angles followed by one see-saw
/// refinement from the best grid point. Theta coordinates take `resolution`
/// values across [0, pi] including both poles; phases take `resolution`
/// values across one period.
pub fn grid_oracle(
    a: &HermitianOperator,
    mode: ExtremumMode,
    cfg: &OptimizerConfig,
) -> Result<Bound> {
    cfg.validate()?;
    let profile = a.profile();
    let dims = profile.dims().to_vec();
    let param_counts: Vec<usize> = dims.iter().map(|&d| param::param_count(d)).collect();
    let total_params: usize = param_counts.iter().sum();
    if total_params > GRID_PARAM_BUDGET {
        return Err(Error::ParameterBudget(total_params));
    }

    let r = cfg.resolution;
    // per-coordinate grids: thetas close both poles, phases are periodic
    let mut grids: Vec<Vec<f64>> = Vec::with_capacity(total_params);
    for &d in &dims {
        for _ in 0..(d - 1) {
            grids.push(
                (0..r).map(|k| std::f64::consts::PI * k as f64 / (r - 1) as f64).collect(),
            );
        }
        for _ in 0..(d - 1) {
            grids.push(
                (0..r).map(|k| 2.0 * std::f64::consts::PI * k as f64 / r as f64).collect(),
            );
        }
    }

    let mut indices = vec![0usize; total_params];
    let mut params = vec![0.0f64; total_params];
    let mut best_params = params.clone();
    let mut best_value = match mode {
        ExtremumMode::Min => f64::INFINITY,
        ExtremumMode::Max => f64::NEG_INFINITY,
    };

    let assemble = |params: &[f64]| -> DVector<C64> {
        let mut offset = 0;
        let mut amps = DVector::from_element(1, C64::new(1.0, 0.0));
        for (&d, &count) in dims.iter().zip(&param_counts) {
            let local = param::amplitudes(d, &params[offset..offset + count]);
            offset += count;
            let merged = DVector::from_fn(amps.len() * d, |i, _| amps[i / d] * local[i % d]);
            amps = merged;
        }
        amps
    };

    loop {
        for (p, &i) in indices.iter().enumerate() {
            params[p] = grids[p][i];
        }
        let value = a.expectation(&assemble(&params));
        if mode.better(value, best_value) {
            best_value = value;
            best_params.copy_from_slice(&params);
        }
        // odometer
        let mut done = true;
        for p in (0..total_params).rev() {
            indices[p] += 1;
            if indices[p] < grids[p].len() {
                done = false;
                break;
            }
            indices[p] = 0;
        }
        if done {
            break;
        }
    }

    // single see-saw polish from the best grid point
    let partition = Partition::fully_product(dims.len());
    let mut offset = 0;
    let mut factors = Vec::with_capacity(dims.len());
    for (g, (&d, &count)) in dims.iter().zip(&param_counts).enumerate() {
        let amps = param::amplitudes(d, &best_params[offset..offset + count]);
        offset += count;
        factors.push(PureState::new(partition.group_profile(g, profile), amps)?);
    }
    let start = ProductVector::new(profile.clone(), partition.clone(), factors)?;
    let refined = seesaw_from(a, &partition, mode, cfg.tol, cfg.max_iter, &start);
    Ok(refined.into_bound(a, &partition, 0))
}
