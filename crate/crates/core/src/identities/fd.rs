//! Finite-difference verification of the derivative relations: a central
//! difference of the left-side function is compared against the analytic
//! right side at relative step 1e-6.

use super::{Assignment, FdKind};
use crate::check::Comparison;
use crate::specfun::{
    c64, gen_harmonic, log_binomial, ComplexScalar, SpecFunError, POLE_TOLERANCE,
};
use crate::sum::ComplexSum;

const REL_STEP: f64 = 1e-6;

/// Floor applied to the comparison scale, as a fraction of the difference
/// quotient's gross magnitude, so near-critical points do not divide by
/// noise.
const SCALE_FLOOR: f64 = 1e-6;

pub struct FdEval {
    /// central-difference estimate of d/dx
    pub fd: ComplexScalar,
    /// analytic right side
    pub analytic: ComplexScalar,
    /// second analytic form where the identity provides one
    pub analytic_alt: Option<ComplexScalar>,
    /// gross magnitude of the difference quotient
    pub scale: f64,
}

type Result<T> = std::result::Result<T, SpecFunError>;

fn h1(c: ComplexScalar, n: u64) -> Result<ComplexScalar> {
    gen_harmonic(c, n, c64(1.0, 0.0))
}

/// log of the factored product ∏_{k=a}^{b-1} (t-k)^w evaluated as
/// exp(w Σ Log(t-k)).
fn product_pow(t: ComplexScalar, a: i64, b: i64, w: ComplexScalar) -> Result<ComplexScalar> {
    let mut logsum = ComplexSum::new();
    for k in a..b {
        let factor = t - k as f64;
        if factor.norm() < POLE_TOLERANCE {
            return Err(SpecFunError::Domain("vanishing product factor".into()));
        }
        logsum.add(factor.ln());
    }
    Ok((w * logsum.total()).exp())
}

fn binomial_pow(t: ComplexScalar, n: i64, w: ComplexScalar) -> Result<ComplexScalar> {
    Ok((w * log_binomial(t, c64(n as f64, 0.0))?).exp())
}

pub fn evaluate(kind: FdKind, asg: &Assignment) -> Result<FdEval> {
    match kind {
        FdKind::ProductLog => {
            let (a, b) = (asg.i("a"), asg.i("b"));
            let (x, w) = (asg.c("x"), asg.c("w"));
            let f = |t: ComplexScalar| product_pow(t, a, b, w);
            let value = f(x)?;
            let n = (b - a) as u64;
            let analytic = w * h1(x - b as f64, n)? * value;
            let analytic_alt = -w * h1(c64(a as f64, 0.0) - x - 1.0, n)? * value;
            central(f, x, analytic, Some(analytic_alt))
        }
        FdKind::HarmonicOrder => {
            let (n, x, y, m) = (asg.i("n") as u64, asg.c("x"), asg.c("y"), asg.c("m"));
            let f = |t: ComplexScalar| gen_harmonic(t + y, n, m);
            let analytic = -m * gen_harmonic(x + y, n, m + 1.0)?;
            central(f, x, analytic, None)
        }
        FdKind::BinomialPower => {
            let (n, x, y, w) = (asg.i("n"), asg.c("x"), asg.c("y"), asg.c("w"));
            let f = |t: ComplexScalar| binomial_pow(t + y, n, w);
            let value = f(x)?;
            let analytic = w * h1(x + y - n as f64, n as u64)? * value;
            central(f, x, analytic, None)
        }
    }
}

fn central<F>(
    f: F,
    x: ComplexScalar,
    analytic: ComplexScalar,
    analytic_alt: Option<ComplexScalar>,
) -> Result<FdEval>
where
    F: Fn(ComplexScalar) -> Result<ComplexScalar>,
{
    let h = REL_STEP * (1.0 + x.norm());
    let fp = f(x + h)?;
    let fm = f(x - h)?;
    let fd = (fp - fm) / (2.0 * h);
    let scale = (fp.norm() + fm.norm()) / (2.0 * h);
    Ok(FdEval {
        fd,
        analytic,
        analytic_alt,
        scale,
    })
}

/// Condition cap for difference quotients. The quotient's gross magnitude
/// carries a factor 1/h ~ 1e6, so the cancellation budget differs from plain
/// sums: roundoff in the quotient is ~eps * condition, which stays two
/// orders below the 1e-5 tolerance up to 1e9.
const FD_CONDITION_CAP: f64 = 1e9;

pub fn compare(ev: &FdEval) -> Comparison {
    let abs_err = (ev.fd - ev.analytic).norm();
    let denom = ev
        .fd
        .norm()
        .max(ev.analytic.norm())
        .max(SCALE_FLOOR * ev.scale);
    let rel_err = if denom == 0.0 { 0.0 } else { abs_err / denom };
    let condition = if ev.fd.norm().max(ev.analytic.norm()) == 0.0 {
        1.0
    } else {
        ev.scale / ev.fd.norm().max(ev.analytic.norm())
    };
    Comparison {
        abs_err,
        rel_err,
        condition,
        ill_conditioned: !condition.is_finite() || condition > FD_CONDITION_CAP,
    }
}
