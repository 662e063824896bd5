//! Condition-aware comparison of two floating evaluations of the same
//! quantity.
//!
//! Telescoping sums can cancel catastrophically for adversarial draws, and
//! the identities assert algebraic equality, not numerical stability. The
//! comparison therefore measures the defect against the larger side inflated
//! by a cancellation floor (`gross * 1e-3`, where `gross` is the total term
//! magnitude feeding both sides), and classifies instances whose condition
//! estimate `gross / result` exceeds a cap as ill-conditioned instead of
//! failed.

use crate::ComplexScalar;

/// Default condition cap above which an instance is skipped.
pub const CONDITION_CAP: f64 = 1e6;

/// Fraction of the gross term magnitude used as the comparison floor.
const GROSS_FLOOR: f64 = 1e-3;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Comparison {
    pub abs_err: f64,
    pub rel_err: f64,
    pub condition: f64,
    pub ill_conditioned: bool,
}

/// Compare `lhs` and `rhs` given the gross magnitude of all contributing
/// terms. Callers decide pass/fail by `rel_err <= tol && !ill_conditioned`.
pub fn compare(lhs: ComplexScalar, rhs: ComplexScalar, gross: f64, cap: f64) -> Comparison {
    let abs_err = (lhs - rhs).norm();
    let scale = lhs.norm().max(rhs.norm());
    let denom = scale.max(gross * GROSS_FLOOR);
    let rel_err = if denom == 0.0 { 0.0 } else { abs_err / denom };
    let condition = if scale == 0.0 {
        if gross == 0.0 {
            1.0
        } else {
            f64::INFINITY
        }
    } else {
        gross / scale
    };
    Comparison {
        abs_err,
        rel_err,
        condition,
        ill_conditioned: !condition.is_finite() || condition > cap,
    }
}

pub fn is_finite(z: ComplexScalar) -> bool {
    z.re.is_finite() && z.im.is_finite()
}
