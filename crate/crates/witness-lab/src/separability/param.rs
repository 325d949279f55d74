//! Angle charts for pure states.
//!
//! A d-dimensional pure state is parameterized by `2(d-1)` real angles: a
//! cascade of half-angle splittings fixes the moduli and one phase per
//! amplitude after the first. For a qubit this is the Bloch chart
//! `(cos(theta/2), e^{i phi} sin(theta/2))` with `theta in [0, pi]`,
//! `phi in [0, 2 pi)`; the global phase is fixed by keeping the first
//! amplitude real and nonnegative.

use nalgebra::DVector;

use crate::operators::C64;

/// Number of real parameters for a pure state of dimension `d`.
pub fn param_count(d: usize) -> usize {
    2 * (d - 1)
}

/// Parameter ranges: `(lo, hi)` per coordinate; thetas first, phases second.
pub fn param_ranges(d: usize) -> Vec<(f64, f64)> {
    let mut r = vec![(0.0, std::f64::consts::PI); d - 1];
    r.extend(std::iter::repeat((0.0, 2.0 * std::f64::consts::PI)).take(d - 1));
    r
}

/// Amplitudes for the chart point `params = [theta_1..theta_{d-1}, phi_1..phi_{d-1}]`.
pub fn amplitudes(d: usize, params: &[f64]) -> DVector<C64> {
    debug_assert_eq!(params.len(), param_count(d));
    let (thetas, phis) = params.split_at(d - 1);
    let mut moduli = vec![0.0f64; d];
    let mut rest = 1.0f64; // product of sin(theta_i / 2) so far
    for (j, &t) in thetas.iter().enumerate() {
        let half = 0.5 * t;
        moduli[j] = rest * half.cos();
        rest *= half.sin();
    }
    moduli[d - 1] = rest;
    DVector::from_fn(d, |i, _| {
        if i == 0 {
            C64::new(moduli[0], 0.0)
        } else {
            let phi = phis[i - 1];
            C64::new(moduli[i] * phi.cos(), moduli[i] * phi.sin())
        }
    })
}
