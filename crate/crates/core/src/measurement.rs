//! Successive projective measurements: joint outcome distributions and
//! their relation to the three order truth values.
//!
//! Index convention: `P^{X,Y}(x, y)` is the probability of outcome `y`
//! from the first-measured observable `Y` followed by outcome `x` from
//! the second-measured `X`, i.e. the first-measured outcome is the
//! *second* coordinate. This follows the superscript order of the joint
//! distribution.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::lattice::ConditionalKind;
use crate::linalg::{vec_norm, StateVector, Tolerance};
use crate::reals::{order_truth_value, Observable};

/// Mass below which a tail is considered exactly zero; matches the
/// normalization tolerance of the distribution.
pub const MASS_TOLERANCE: f64 = 1e-9;

/// Joint outcome distribution of a successive measurement pair.
#[derive(Debug, Clone)]
pub struct JointDistribution {
    outcomes: Vec<(f64, f64)>,
    probabilities: Vec<f64>,
}

impl JointDistribution {
    fn new(outcomes: Vec<(f64, f64)>, probabilities: Vec<f64>) -> Result<Self> {
        let mut clamped = probabilities;
        for p in clamped.iter_mut() {
            if *p < -1e-12 {
                return Err(Error::InvalidInput(format!(
                    "negative joint probability {p}"
                )));
            }
            if *p < 0.0 {
                *p = 0.0;
            }
        }
        let total: f64 = clamped.iter().sum();
        if (total - 1.0).abs() > MASS_TOLERANCE {
            return Err(Error::InvalidInput(format!(
                "joint probabilities sum to {total}, not 1"
            )));
        }
        Ok(JointDistribution {
            outcomes,
            probabilities: clamped,
        })
    }

    /// Outcome pairs `(x, y)`: second-measured outcome first.
    pub fn outcomes(&self) -> &[(f64, f64)] {
        &self.outcomes
    }

    pub fn probabilities(&self) -> &[f64] {
        &self.probabilities
    }

    pub fn total_mass(&self) -> f64 {
        self.probabilities.iter().sum()
    }

    /// Total mass on pairs selected by the predicate.
    pub fn mass_where(&self, predicate: impl Fn(f64, f64) -> bool) -> f64 {
        self.outcomes
            .iter()
            .zip(self.probabilities.iter())
            .filter(|((x, y), _)| predicate(*x, *y))
            .map(|(_, p)| p)
            .sum()
    }

    /// Marginal over the second-measured outcome, indexed by the
    /// first-measured outcome `y`; equals the Born distribution of the
    /// first observable.
    pub fn first_marginal(&self) -> Vec<(f64, f64)> {
        let mut out: Vec<(f64, f64)> = Vec::new();
        for ((_, y), p) in self.outcomes.iter().zip(self.probabilities.iter()) {
            match out.iter_mut().find(|(value, _)| value == y) {
                Some((_, mass)) => *mass += p,
                None => out.push((*y, *p)),
            }
        }
        out
    }
}

/// Joint distribution of measuring `first`, then `second`, on `psi`:
/// the entry for `(x, y)` is `‖E^second({x}) E^first({y}) ψ‖²`.
pub fn successive_distribution(
    first: &Observable,
    second: &Observable,
    psi: &StateVector,
) -> Result<JointDistribution> {
    if first.dim() != second.dim() || psi.dim() != first.dim() {
        return Err(Error::DimMismatch {
            left: first.dim(),
            right: psi.dim(),
        });
    }
    let mut outcomes = Vec::new();
    let mut probabilities = Vec::new();
    for (y, proj_y) in first.spectrum().iter().zip(first.eigenprojections()) {
        let collapsed = proj_y.apply(psi.amplitudes());
        for (x, proj_x) in second.spectrum().iter().zip(second.eigenprojections()) {
            let amplitude = proj_x.apply(&collapsed);
            outcomes.push((*x, *y));
            probabilities.push(vec_norm(&amplitude).powi(2));
        }
    }
    JointDistribution::new(outcomes, probabilities)
}

/// Verdict for one conditional kind: membership of the state in the
/// range of the order truth value, against vanishing of the offending
/// tail mass of the matching successive measurement(s).
#[derive(Debug, Clone, Serialize)]
pub struct ConditionalVerdict {
    pub kind: ConditionalKind,
    pub membership: bool,
    pub membership_residual: f64,
    pub tail_mass: f64,
    pub tail_zero: bool,
    pub agrees: bool,
}

/// Per-conditional report of the order/measurement equivalence.
#[derive(Debug, Clone, Serialize)]
pub struct OrderMeasurementReport {
    pub verdicts: Vec<ConditionalVerdict>,
}

impl OrderMeasurementReport {
    pub fn all_agree(&self) -> bool {
        self.verdicts.iter().all(|v| v.agrees)
    }
}

/// Check, for each conditional kind, whether `ψ ∈ R([[X̃ ≤ Ỹ]]_j)` is
/// equivalent to the vanishing of all joint mass on outcome pairs with
/// `x > y`:
///
/// * Sasaki compares against measuring `Y` then `X`;
/// * contrapositive against measuring `X` then `Y`;
/// * relevance against both.
pub fn order_measurement_check(
    x: &Observable,
    y: &Observable,
    psi: &StateVector,
    tol: &Tolerance,
) -> Result<OrderMeasurementReport> {
    let y_then_x = successive_distribution(y, x, psi)?;
    let x_then_y = successive_distribution(x, y, psi)?;
    let tail_xy = y_then_x.mass_where(|out_x, out_y| out_x > out_y);
    // For the (X then Y) run the X outcome is the second coordinate.
    let tail_yx = x_then_y.mass_where(|out_y, out_x| out_x > out_y);

    let mut verdicts = Vec::with_capacity(3);
    for kind in ConditionalKind::ALL {
        let truth = order_truth_value(x, y, kind, tol)?;
        let membership_residual = truth.membership_residual(psi)?;
        let membership = membership_residual <= tol.eps_compare;
        let tail_mass = match kind {
            ConditionalKind::Sasaki => tail_xy,
            ConditionalKind::Contrapositive => tail_yx,
            ConditionalKind::Relevance => tail_xy.max(tail_yx),
        };
        let tail_zero = tail_mass <= MASS_TOLERANCE;
        verdicts.push(ConditionalVerdict {
            kind,
            membership,
            membership_residual,
            tail_mass,
            tail_zero,
            agrees: membership == tail_zero,
        });
    }
    Ok(OrderMeasurementReport { verdicts })
}
