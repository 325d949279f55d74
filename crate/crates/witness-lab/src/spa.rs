//! Structural physical approximation and witness compression.
//!
//! Mixing a witness `W` with a full-rank reference state `X` produces the
//! family `(1-t) W + t X`. Its minimum eigenvalue is concave in `t`
//! (pointwise minimum of affine functions), which gives two distinguished
//! mixtures:
//!
//! * the **positive** approximation at the minimal `p in (0,1)` making the
//!   mixture PSD (for `X = I/D` the closed form is
//!   `p = D |lambda_min| / (1 + D |lambda_min|)`), and
//! * the **negative** approximation at the maximal `q > 1` keeping the
//!   mixture PSD (`q = D lambda_max / (D lambda_max - 1)` for `X = I/D`).
//!
//! Walking both constructions backwards from a single positive observable
//! yields a *mirror pair* of witnesses: the pair is compressed into one
//! operator whose separability window carries both detection bounds. The
//! weighted pair recombines to the reference:
//! `(1-p+) W(+) + (p- - 1) W(-) = (p- - p+) X`.

use crate::error::{Error, Result};
use crate::operators::{HermitianOperator, PSD_TOL};
use crate::separability::{
    ExtremumMode, OptimizerConfig, SeparabilityWindow, ratio_extremum, seesaw_extremum,
    separability_window,
};
use crate::witnesses::{NEGATIVITY_TOL, WITNESS_NONNEG_TOL, Witness, validate_witness};

/// How a mixing weight was determined.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SpaMethod {
    ClosedForm,
    Bisection,
}

/// An extremal mixing weight with the resulting PSD mixture.
#[derive(Debug, Clone)]
pub struct SpaResult {
    /// `p` (positive mode, in [0,1)) or `q` (negative mode, > 1).
    pub weight: f64,
    /// `(1-weight) W + weight X`, PSD with an eigenvalue at zero when the
    /// weight is nontrivial.
    pub mixed: HermitianOperator,
    pub method: SpaMethod,
}

/// Positive approximation against `X = I/D`, by closed form. PSD input needs
/// no mixing and returns weight 0.
pub fn spa_plus(w: &Witness) -> SpaResult {
    let d = w.op().dim() as f64;
    let lambda_min = w.lambda_min();
    if lambda_min >= -NEGATIVITY_TOL {
        return SpaResult { weight: 0.0, mixed: w.op().clone(), method: SpaMethod::ClosedForm };
    }
    let p = d * (-lambda_min) / (1.0 + d * (-lambda_min));
    let mixed = mix_with_identity(w.op(), p);
    SpaResult { weight: p, mixed, method: SpaMethod::ClosedForm }
}

/// Negative approximation against `X = I/D`, by closed form. Requires
/// `lambda_max > 1/D`; at or below that level no finite weight exists.
pub fn spa_minus(w: &Witness) -> Result<SpaResult> {
    let d = w.op().dim() as f64;
    let lambda_max = w.lambda_max();
    if lambda_max <= 1.0 / d + 1e-12 {
        return Err(Error::NoFiniteNegativeWeight { lambda_max, level: 1.0 / d });
    }
    let q = d * lambda_max / (d * lambda_max - 1.0);
    let mixed = mix_with_identity(w.op(), q);
    Ok(SpaResult { weight: q, mixed, method: SpaMethod::ClosedForm })
}

fn mix_with_identity(op: &HermitianOperator, t: f64) -> HermitianOperator {
    let x = HermitianOperator::maximally_mixed(op.profile().clone());
    op.affine(1.0 - t, &x, t).expect("same profile")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum XpaMode {
    Positive,
    Negative,
}

/// Checks that a reference operator is PSD, full rank, and unit trace.
pub fn check_reference(x: &HermitianOperator) -> Result<()> {
    let tr = x.trace();
    if (tr - 1.0).abs() > 1e-10 {
        return Err(Error::NotUnitTrace(tr));
    }
    let lambda_min = x.lambda_min();
    if lambda_min < -PSD_TOL {
        return Err(Error::NotPsd(lambda_min));
    }
    if lambda_min <= PSD_TOL {
        return Err(Error::RankDeficient(lambda_min));
    }
    Ok(())
}

/// Extremal mixing weight against an arbitrary full-rank reference, found by
/// bisection on `t -> lambda_min((1-t) W + t X)`. Concavity of that map makes
/// the feasible set an interval, so sign bisection is exact; the bracket is
/// `[0, 1)` for the positive mode and `(1, q]` with doubling for the negative
/// mode, stopping at weight-interval 1e-12.
pub fn xpa(w: &Witness, x: &HermitianOperator, mode: XpaMode) -> Result<SpaResult> {
    w.op().check_profile(x)?;
    check_reference(x)?;
    let feasible = |t: f64| -> bool {
        w.op().affine(1.0 - t, x, t).expect("same profile").lambda_min() >= -1e-13
    };
    let mix = |t: f64| w.op().affine(1.0 - t, x, t).expect("same profile");

    match mode {
        XpaMode::Positive => {
            if w.lambda_min() >= -NEGATIVITY_TOL {
                return Ok(SpaResult {
                    weight: 0.0,
                    mixed: w.op().clone(),
                    method: SpaMethod::Bisection,
                });
            }
            // lambda_min < 0 at t = 0, > 0 at t = 1 (X is full rank)
            let (mut lo, mut hi) = (0.0f64, 1.0f64);
            while hi - lo > 1e-12 {
                let mid = 0.5 * (lo + hi);
                if feasible(mid) {
                    hi = mid;
                } else {
                    lo = mid;
                }
            }
            Ok(SpaResult { weight: hi, mixed: mix(hi), method: SpaMethod::Bisection })
        }
        XpaMode::Negative => {
            // double until infeasible; if the reference dominates the witness
            // the mixture stays PSD forever and no finite weight exists
            let mut hi = 2.0f64;
            let mut doublings = 0;
            while feasible(hi) {
                hi *= 2.0;
                doublings += 1;
                if doublings > 50 {
                    return Err(Error::NoFiniteNegativeWeight {
                        lambda_max: w.lambda_max(),
                        level: x.lambda_min(),
                    });
                }
            }
            let mut lo = 1.0f64; // X itself is feasible
            while hi - lo > 1e-12 {
                let mid = 0.5 * (lo + hi);
                if feasible(mid) {
                    lo = mid;
                } else {
                    hi = mid;
                }
            }
            if lo <= 1.0 + 1e-9 {
                return Err(Error::NoFiniteNegativeWeight {
                    lambda_max: w.lambda_max(),
                    level: x.lambda_min(),
                });
            }
            Ok(SpaResult { weight: lo, mixed: mix(lo), method: SpaMethod::Bisection })
        }
    }
}

/// Options for [`compress_with`].
#[derive(Debug, Clone)]
pub struct CompressOptions {
    /// Shift the witness onto the separable border before compressing
    /// (applies when |L(W)| > 1e-6). On by default.
    pub border_shift: bool,
    /// Reference operator; `None` means the maximally mixed state I/D.
    pub x: Option<HermitianOperator>,
}

impl Default for CompressOptions {
    fn default() -> Self {
        Self { border_shift: true, x: None }
    }
}

/// A compressed observable with its two mirrored witnesses.
#[derive(Debug, Clone)]
pub struct MirrorPair {
    /// The (border-shifted) input witness, recovered from the positive
    /// approximation of `compressed`.
    pub w_plus: Witness,
    /// The partner witness, recovered from the negative approximation.
    pub w_minus: Witness,
    /// The compressed observable, PSD by construction.
    pub compressed: HermitianOperator,
    /// Reference operator (I/D unless overridden).
    pub x: HermitianOperator,
    /// Positive mixing weight.
    pub p_plus: f64,
    /// Negative mixing weight (> 1), the extremal product-state ratio
    /// `tr[compressed sigma] / tr[X sigma]`.
    pub p_minus: f64,
    /// Separability window of `compressed`; equals `[p+/D, p-/D]` for the
    /// identity reference.
    pub window: SeparabilityWindow,
    /// Set when the recovered partner has no negative eigenvalue, i.e. the
    /// upper bound detects nothing.
    pub trivial_upper_bound: bool,
    /// Separable minimum that was shifted away, when the border shift ran.
    pub border_shift_applied: Option<f64>,
}

/// Compresses a witness against the maximally mixed reference.
pub fn compress(w: &Witness, cfg: &OptimizerConfig) -> Result<MirrorPair> {
    compress_with(w, &CompressOptions::default(), cfg)
}

/// Full compression pipeline: validate the witness, optionally shift it onto
/// the separable border, form the positive approximation, invert the
/// negative approximation through the extremal product-state ratio, and
/// recover the mirror partner `(q X - compressed) / (q - 1)`.
pub fn compress_with(
    w: &Witness,
    opts: &CompressOptions,
    cfg: &OptimizerConfig,
) -> Result<MirrorPair> {
    let x = match &opts.x {
        Some(x) => {
            w.op().check_profile(x)?;
            check_reference(x)?;
            x.clone()
        }
        None => HermitianOperator::maximally_mixed(w.profile().clone()),
    };

    let cert = validate_witness(w, cfg)?;
    match cert.status {
        crate::witnesses::WitnessStatus::NonNegativityFails => {
            return Err(Error::NotAWitness(format!(
                "separable minimum {:.3e} is negative",
                cert.l_estimate.value
            )));
        }
        crate::witnesses::WitnessStatus::NothingDetected => {
            return Err(Error::NotAWitness(format!(
                "minimum eigenvalue {:.3e} is nonnegative, nothing is detected",
                cert.lambda_min
            )));
        }
        crate::witnesses::WitnessStatus::Valid => {}
    }

    // border shift: subtract the separable minimum so that L(w') = 0
    let l = cert.l_estimate.value;
    let (w_plus, border_shift_applied) = if opts.border_shift && l.abs() > WITNESS_NONNEG_TOL {
        let d = w.op().dim() as f64;
        let id = HermitianOperator::identity(w.profile().clone());
        let shifted = w.op().affine(1.0, &id, -l)?.scale(1.0 / (1.0 - d * l));
        (Witness::new(shifted)?, Some(l))
    } else {
        (w.clone(), None)
    };

    let positive = xpa(&w_plus, &x, XpaMode::Positive)?;
    let p_plus = positive.weight;
    let compressed = positive.mixed;

    // invert the negative approximation: q is the largest product-state ratio
    let ratio = ratio_extremum(&compressed, &x, ExtremumMode::Max, cfg)?;
    let q = ratio.value;
    if q <= 1.0 + 1e-9 {
        return Err(Error::NoFiniteNegativeWeight { lambda_max: q, level: 1.0 });
    }
    let minus_op = x.affine(q / (q - 1.0), &compressed, -1.0 / (q - 1.0))?;
    let w_minus = Witness::new(minus_op)?;
    let trivial_upper_bound = w_minus.lambda_min() >= -NEGATIVITY_TOL;

    let window = separability_window(&compressed, cfg);

    Ok(MirrorPair {
        w_plus,
        w_minus,
        compressed,
        x,
        p_plus,
        p_minus: q,
        window,
        trivial_upper_bound,
        border_shift_applied,
    })
}

/// Max-norm of `(1-p+) W(+) + (p- - 1) W(-) - (p- - p+) X`; zero exactly when
/// the pair is mirrored through the reference.
pub fn mirror_identity_residual(pair: &MirrorPair) -> f64 {
    mirror_residual(&pair.w_plus, &pair.w_minus, &pair.x, pair.p_plus, pair.p_minus)
}

/// The same residual for free-standing ingredients.
pub fn mirror_residual(
    w_plus: &Witness,
    w_minus: &Witness,
    x: &HermitianOperator,
    p_plus: f64,
    p_minus: f64,
) -> f64 {
    let combo = w_plus
        .op()
        .affine(1.0 - p_plus, w_minus.op(), p_minus - 1.0)
        .and_then(|lhs| lhs.affine(1.0, x, -(p_minus - p_plus)))
        .expect("profiles agree inside a pair");
    combo.max_norm()
}

/// Upper bounds of the mirrored witnesses, by the window formula and by
/// direct see-saw maximization.
#[derive(Debug, Clone)]
pub struct Prop2Bounds {
    /// `(U - L) / (1 - p+)`.
    pub u_plus: f64,
    /// `-(U - L) / (1 - p-)`.
    pub u_minus: f64,
    /// See-saw `max tr[W(+) sigma]` cross-check.
    pub u_plus_direct: f64,
    /// See-saw `max tr[W(-) sigma]` cross-check.
    pub u_minus_direct: f64,
}

/// Separable upper bounds of the pair from the compressed window:
/// `U(W(+-)) = +-(U - L) / (1 - p(+-))`. Stated for the identity reference
/// only; anything else is rejected.
pub fn prop2_bounds(pair: &MirrorPair, cfg: &OptimizerConfig) -> Result<Prop2Bounds> {
    let mixed = HermitianOperator::maximally_mixed(pair.compressed.profile().clone());
    if pair.x.max_diff(&mixed) > 1e-12 {
        return Err(Error::BadArgument(
            "window-formula bounds require the maximally mixed reference".into(),
        ));
    }
    let l = pair.window.l();
    let u = pair.window.u();
    let u_plus = (u - l) / (1.0 - pair.p_plus);
    let u_minus = -(u - l) / (1.0 - pair.p_minus);
    let u_plus_direct = seesaw_extremum(pair.w_plus.op(), ExtremumMode::Max, cfg).value;
    let u_minus_direct = seesaw_extremum(pair.w_minus.op(), ExtremumMode::Max, cfg).value;
    Ok(Prop2Bounds { u_plus, u_minus, u_plus_direct, u_minus_direct })
}

/// Report from [`is_compressed`].
#[derive(Debug, Clone)]
pub struct CompressionReport {
    pub compressed: bool,
    pub lambda_min: f64,
    pub lambda_max: f64,
    pub window: SeparabilityWindow,
}

/// Tests whether a positive observable is a compressed witness: both strict
/// inequalities `lambda_min < L` and `U < lambda_max` must hold beyond 1e-6,
/// so that each window bound is violated by some (necessarily entangled)
/// eigenstate.
pub fn is_compressed(wt: &HermitianOperator, cfg: &OptimizerConfig) -> Result<CompressionReport> {
    let eig = wt.eigh();
    if eig.lambda_min() < -PSD_TOL {
        return Err(Error::NotPsd(eig.lambda_min()));
    }
    let window = separability_window(wt, cfg);
    let compressed = eig.lambda_min() < window.l() - 1e-6 && window.u() < eig.lambda_max() - 1e-6;
    Ok(CompressionReport {
        compressed,
        lambda_min: eig.lambda_min(),
        lambda_max: eig.lambda_max(),
        window,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::operators::DimensionProfile;
    use crate::witnesses::{BuiltinWitness, builtin, choi3_compressed, two_qubit_compressed};
    use approx::assert_abs_diff_eq;

    fn cfg() -> OptimizerConfig {
        OptimizerConfig { seed: 17, ..Default::default() }
    }

    #[test]
    fn spa_plus_on_two_qubit_witness() {
        let r = spa_plus(&builtin(BuiltinWitness::Ew2qPlus));
        assert_abs_diff_eq!(r.weight, 0.6, epsilon = 1e-12);
        assert!(r.mixed.max_diff(&two_qubit_compressed()) <= 1e-12);
        assert!(r.mixed.is_psd(PSD_TOL));
        // extremality: one eigenvalue pinned at zero
        let min = r.mixed.lambda_min();
        assert!((-1e-10..=1e-8).contains(&min), "extremal eigenvalue {min}");
    }

    #[test]
    fn spa_on_choi_pair() {
        let r = spa_plus(&builtin(BuiltinWitness::Choi3));
        assert_abs_diff_eq!(r.weight, 0.6, epsilon = 1e-12);
        assert!(r.mixed.max_diff(&choi3_compressed()) <= 1e-12);

        let m = spa_minus(&builtin(BuiltinWitness::Choi3Mirror)).unwrap();
        assert_abs_diff_eq!(m.weight, 1.4, epsilon = 1e-9);
        assert!(m.mixed.max_diff(&choi3_compressed()) <= 1e-9);
    }

    #[test]
    fn spa_minus_on_two_qubit_witness() {
        let r = spa_minus(&builtin(BuiltinWitness::Ew2qMinus)).unwrap();
        assert_abs_diff_eq!(r.weight, 1.4, epsilon = 1e-12);
        assert!(r.mixed.max_diff(&two_qubit_compressed()) <= 1e-12);
        let min = r.mixed.lambda_min();
        assert!((-1e-10..=1e-8).contains(&min), "extremal eigenvalue {min}");
    }

    #[test]
    fn spa_degenerate_cases() {
        // PSD input: no mixing needed
        let psd = Witness::new(two_qubit_compressed()).unwrap();
        let r = spa_plus(&psd);
        assert_eq!(r.weight, 0.0);
        assert!(r.mixed.max_diff(&two_qubit_compressed()) <= 1e-15);

        // maximally mixed: lambda_max = 1/D, no finite negative weight
        let flat =
            Witness::new(HermitianOperator::maximally_mixed(DimensionProfile::qubits(2).unwrap()))
                .unwrap();
        assert!(matches!(spa_minus(&flat), Err(Error::NoFiniteNegativeWeight { .. })));
    }

    #[test]
    fn weight_extremality_under_perturbation() {
        // shrinking p (growing q) by 1e-6 breaks positivity
        for w in [builtin(BuiltinWitness::Ew2qPlus), builtin(BuiltinWitness::Choi3)] {
            let r = spa_plus(&w);
            let x = HermitianOperator::maximally_mixed(w.profile().clone());
            let under = w.op().affine(1.0 - (r.weight - 1e-6), &x, r.weight - 1e-6).unwrap();
            assert!(!under.is_psd(PSD_TOL), "p - 1e-6 must be infeasible");
        }
        let wm = builtin(BuiltinWitness::Ew2qMinus);
        let r = spa_minus(&wm).unwrap();
        let x = HermitianOperator::maximally_mixed(wm.profile().clone());
        let over = wm.op().affine(1.0 - (r.weight + 1e-6), &x, r.weight + 1e-6).unwrap();
        assert!(!over.is_psd(PSD_TOL), "q + 1e-6 must be infeasible");
    }

    #[test]
    fn xpa_reproduces_identity_closed_forms() {
        let x = HermitianOperator::maximally_mixed(DimensionProfile::qubits(2).unwrap());
        let wp = builtin(BuiltinWitness::Ew2qPlus);
        let b = xpa(&wp, &x, XpaMode::Positive).unwrap();
        assert_abs_diff_eq!(b.weight, spa_plus(&wp).weight, epsilon = 1e-9);
        assert_eq!(b.method, SpaMethod::Bisection);

        let wm = builtin(BuiltinWitness::Ew2qMinus);
        let b = xpa(&wm, &x, XpaMode::Negative).unwrap();
        assert_abs_diff_eq!(b.weight, spa_minus(&wm).unwrap().weight, epsilon = 1e-9);
    }

    #[test]
    fn xpa_with_diagonal_reference() {
        let p = DimensionProfile::qubits(2).unwrap();
        let x = HermitianOperator::from_real_rows(
            p.clone(),
            &[
                &[0.4, 0.0, 0.0, 0.0],
                &[0.0, 0.1, 0.0, 0.0],
                &[0.0, 0.0, 0.1, 0.0],
                &[0.0, 0.0, 0.0, 0.4],
            ],
        )
        .unwrap();
        let wp = builtin(BuiltinWitness::Ew2qPlus);
        let r = xpa(&wp, &x, XpaMode::Positive).unwrap();
        assert!((0.0..1.0).contains(&r.weight));
        let min = r.mixed.lambda_min();
        assert!((-1e-10..=1e-8).contains(&min), "extremal eigenvalue {min}");

        // rank-deficient reference is rejected
        let bad = HermitianOperator::from_real_rows(
            p,
            &[
                &[0.5, 0.0, 0.0, 0.0],
                &[0.0, 0.5, 0.0, 0.0],
                &[0.0, 0.0, 0.0, 0.0],
                &[0.0, 0.0, 0.0, 0.0],
            ],
        )
        .unwrap();
        assert!(matches!(xpa(&wp, &bad, XpaMode::Positive), Err(Error::RankDeficient(_))));
    }

    #[test]
    fn compress_two_qubit_pair() {
        let pair = compress(&builtin(BuiltinWitness::Ew2qPlus), &cfg()).unwrap();
        assert_abs_diff_eq!(pair.p_plus, 0.6, epsilon = 1e-9);
        assert_abs_diff_eq!(pair.p_minus, 1.4, epsilon = 1e-6);
        assert!(pair.compressed.max_diff(&two_qubit_compressed()) <= 1e-9);
        assert!(
            pair.w_minus.op().max_diff(builtin(BuiltinWitness::Ew2qMinus).op()) <= 1e-6,
            "mirror partner reproduces the printed witness"
        );
        assert_abs_diff_eq!(pair.window.l(), 0.15, epsilon = 1e-4);
        assert_abs_diff_eq!(pair.window.u(), 0.35, epsilon = 1e-4);
        assert!(!pair.trivial_upper_bound);
        assert!(pair.border_shift_applied.is_none(), "printed witness is already border");
        assert!(mirror_identity_residual(&pair) <= 1e-9);
    }

    #[test]
    fn compress_choi_pair() {
        let pair = compress(&builtin(BuiltinWitness::Choi3), &cfg()).unwrap();
        assert_abs_diff_eq!(pair.window.l(), 1.0 / 15.0, epsilon = 1e-4);
        assert_abs_diff_eq!(pair.window.u(), 7.0 / 45.0, epsilon = 1e-4);
        assert!(
            pair.w_minus.op().max_diff(builtin(BuiltinWitness::Choi3Mirror).op()) <= 1e-6,
            "mirror partner reproduces (2/9) I - choi3"
        );
        assert!(mirror_identity_residual(&pair) <= 1e-9);
    }

    #[test]
    fn compress_rejects_non_witness() {
        let psd = Witness::new(two_qubit_compressed()).unwrap();
        assert!(matches!(compress(&psd, &cfg()), Err(Error::NotAWitness(_))));
    }

    #[test]
    fn mirror_identity_example1_exact() {
        // (2/5) W(+) + (2/5) W(-) = I/5 at rational weights
        let wp = builtin(BuiltinWitness::Ew2qPlus);
        let wm = builtin(BuiltinWitness::Ew2qMinus);
        let x = HermitianOperator::maximally_mixed(wp.profile().clone());
        let resid = mirror_residual(&wp, &wm, &x, 0.6, 1.4);
        assert!(resid <= 1e-12, "residual {resid}");

        // sensitivity: a 0.01 diagonal bump must show up at the 0.004 level
        let raw = HermitianOperator::new(wm.profile().clone(), {
            let mut m = wm.op().matrix().clone();
            m[(1, 1)] += crate::operators::C64::new(0.01, 0.0);
            m
        })
        .unwrap();
        let combo = wp
            .op()
            .affine(1.0 - 0.6, &raw, 1.4 - 1.0)
            .and_then(|lhs| lhs.affine(1.0, &x, -(1.4 - 0.6)))
            .unwrap();
        assert!(combo.max_norm() >= 0.004 - 1e-12);
    }

    #[test]
    fn prop2_bounds_on_both_examples() {
        let pair = compress(&builtin(BuiltinWitness::Ew2qPlus), &cfg()).unwrap();
        let b = prop2_bounds(&pair, &cfg()).unwrap();
        assert_abs_diff_eq!(b.u_plus, 0.5, epsilon = 1e-9);
        assert_abs_diff_eq!(b.u_minus, 0.5, epsilon = 1e-9);
        assert_abs_diff_eq!(b.u_plus_direct, 0.5, epsilon = 1e-4);
        assert_abs_diff_eq!(b.u_minus_direct, 0.5, epsilon = 1e-4);

        let pair = compress(&builtin(BuiltinWitness::Choi3), &cfg()).unwrap();
        let b = prop2_bounds(&pair, &cfg()).unwrap();
        assert_abs_diff_eq!(b.u_plus, 2.0 / 9.0, epsilon = 1e-4);
        assert_abs_diff_eq!(b.u_minus, 2.0 / 9.0, epsilon = 1e-4);
        assert_abs_diff_eq!(b.u_plus_direct, 2.0 / 9.0, epsilon = 1e-4);
        assert_abs_diff_eq!(b.u_minus_direct, 2.0 / 9.0, epsilon = 1e-4);
    }

    #[test]
    fn compression_detection() {
        let r = is_compressed(&two_qubit_compressed(), &cfg()).unwrap();
        assert!(r.compressed);
        assert_abs_diff_eq!(r.lambda_min, 0.0, epsilon = 1e-12);
        assert_abs_diff_eq!(r.lambda_max, 0.4, epsilon = 1e-12);

        let flat = HermitianOperator::maximally_mixed(DimensionProfile::qubits(2).unwrap());
        assert!(!is_compressed(&flat, &cfg()).unwrap().compressed);

        let r = is_compressed(&choi3_compressed(), &cfg()).unwrap();
        assert!(r.compressed);
        assert_abs_diff_eq!(r.lambda_min, 0.0, epsilon = 1e-12);
        assert_abs_diff_eq!(r.lambda_max, 0.2, epsilon = 1e-12);
        assert_abs_diff_eq!(r.window.l(), 1.0 / 15.0, epsilon = 1e-4);
        assert_abs_diff_eq!(r.window.u(), 7.0 / 45.0, epsilon = 1e-4);

        assert!(matches!(
            is_compressed(builtin(BuiltinWitness::Ew2qPlus).op(), &cfg()),
            Err(Error::NotPsd(_))
        ));
    }

    #[test]
    fn compress_round_trip_through_positive_approximation() {
        // re-running the positive approximation on the recovered w_plus lands
        // on the same compressed operator
        let pair = compress(&builtin(BuiltinWitness::Ew2qPlus), &cfg()).unwrap();
        let again = xpa(&pair.w_plus, &pair.x, XpaMode::Positive).unwrap();
        assert!(again.mixed.max_diff(&pair.compressed) <= 1e-9);
    }
}
