//! The product difference equation: a difference of two n-factor power
//! products equals a telescoping sum of single-factor differences,
//!
//! ```text
//! prod_k (x - z_k)^{w_k} - prod_k (y - z_k)^{w_k}
//!   = sum_k [ (x - z_k)^{w_k} - (y - z_k)^{w_k} ]
//!       * prod_{l<k} (x - z_l)^{w_l} * prod_{l>k} (y - z_l)^{w_l}
//! ```
//!
//! with empty products equal to one and the empty sum equal to zero. Each
//! power is evaluated exactly once and the stored value is reused everywhere
//! it appears, so the cancellation argument behind the identity holds for
//! any fixed power values, hence for all complex exponents under the
//! principal convention.

use crate::check::{self, Comparison};
use crate::exact::{ExactError, GaussianRational};
use crate::specfun::{complex_pow, ComplexScalar, SpecFunError};
use crate::sum::{ComplexSum, NeumaierSum};

/// One instance of the product difference equation: factors (x - z_k) and
/// (y - z_k) raised to w_k.
#[derive(Clone, Debug)]
pub struct FactorSystem {
    pub x: ComplexScalar,
    pub y: ComplexScalar,
    pub z: Vec<ComplexScalar>,
    pub w: Vec<ComplexScalar>,
}

impl FactorSystem {
    pub fn new(
        x: ComplexScalar,
        y: ComplexScalar,
        z: Vec<ComplexScalar>,
        w: Vec<ComplexScalar>,
    ) -> Result<Self, SpecFunError> {
        if z.len() != w.len() {
            return Err(SpecFunError::Domain(format!(
                "factor system needs |z| = |w|, got {} and {}",
                z.len(),
                w.len()
            )));
        }
        Ok(Self { x, y, z, w })
    }

    pub fn len(&self) -> usize {
        self.z.len()
    }

    pub fn is_empty(&self) -> bool {
        self.z.is_empty()
    }
}

/// Both sides of the product difference equation for one factor system,
/// plus the gross term magnitude used for conditioning.
#[derive(Clone, Debug)]
pub struct TelescopeEval {
    pub lhs: ComplexScalar,
    pub rhs: ComplexScalar,
    pub gross: f64,
}

impl TelescopeEval {
    pub fn comparison(&self, cap: f64) -> Comparison {
        check::compare(self.lhs, self.rhs, self.gross, cap)
    }
}

/// Evaluate both sides with shared cached powers.
pub fn evaluate(f: &FactorSystem) -> Result<TelescopeEval, SpecFunError> {
    let n = f.len();
    let mut alpha = Vec::with_capacity(n);
    let mut beta = Vec::with_capacity(n);
    for k in 0..n {
        alpha.push(complex_pow(f.x - f.z[k], f.w[k])?);
        beta.push(complex_pow(f.y - f.z[k], f.w[k])?);
    }

    // prefix[k] = prod_{l<k} alpha_l, suffix[k] = prod_{l>k} beta_l
    let one = ComplexScalar::new(1.0, 0.0);
    let mut prefix = vec![one; n + 1];
    for k in 0..n {
        prefix[k + 1] = prefix[k] * alpha[k];
    }
    let mut suffix = vec![one; n + 1];
    for k in (0..n).rev() {
        suffix[k] = suffix[k + 1] * beta[k];
    }

    let prod_alpha = prefix[n];
    let prod_beta = suffix[0];
    let lhs = prod_alpha - prod_beta;

    let mut sum = ComplexSum::new();
    let mut gross = NeumaierSum::new();
    for k in 0..n {
        let term = (alpha[k] - beta[k]) * prefix[k] * suffix[k + 1];
        sum.add(term);
        gross.add(term.norm());
    }
    gross.add(prod_alpha.norm());
    gross.add(prod_beta.norm());

    Ok(TelescopeEval {
        lhs,
        rhs: sum.total(),
        gross: gross.total(),
    })
}

/// Left side only: ∏(x−z_k)^{w_k} − ∏(y−z_k)^{w_k}.
pub fn product_difference_lhs(f: &FactorSystem) -> Result<ComplexScalar, SpecFunError> {
    Ok(evaluate(f)?.lhs)
}

/// Right side only: the telescoping sum.
pub fn product_difference_rhs(f: &FactorSystem) -> Result<ComplexScalar, SpecFunError> {
    Ok(evaluate(f)?.rhs)
}

/// Power difference equation x^n − y^n = (x−y) Σ_{k=1}^{n} x^{k−1} y^{n−k};
/// the all-zero-offsets, all-unit-exponents case of the factor system.
pub fn power_difference(
    x: ComplexScalar,
    y: ComplexScalar,
    n: u64,
) -> (ComplexScalar, ComplexScalar) {
    let lhs = crate::specfun::powi(x, n as i64) - crate::specfun::powi(y, n as i64);
    let mut sum = ComplexSum::new();
    // x^{k-1} y^{n-k}, built incrementally
    let mut xp = ComplexScalar::new(1.0, 0.0);
    let mut ypows = Vec::with_capacity(n as usize + 1);
    let mut yp = ComplexScalar::new(1.0, 0.0);
    for _ in 0..=n {
        ypows.push(yp);
        yp *= y;
    }
    for k in 1..=n {
        sum.add(xp * ypows[(n - k) as usize]);
        xp *= x;
    }
    (lhs, (x - y) * sum.total())
}

/// Exact-arithmetic factor system: Gaussian-rational points with integer
/// exponents.
#[derive(Clone, Debug)]
pub struct ExactFactorSystem {
    pub x: GaussianRational,
    pub y: GaussianRational,
    pub z: Vec<GaussianRational>,
    pub w: Vec<i64>,
}

/// Evaluate both sides exactly; equality is bit-true whenever the instance is
/// defined (no zero base under a nonpositive exponent).
pub fn evaluate_exact(
    f: &ExactFactorSystem,
) -> Result<(GaussianRational, GaussianRational), ExactError> {
    let n = f.z.len();
    if f.w.len() != n {
        return Err(ExactError::Domain("|z| != |w|".into()));
    }
    let mut alpha = Vec::with_capacity(n);
    let mut beta = Vec::with_capacity(n);
    for k in 0..n {
        alpha.push(f.x.sub(&f.z[k]).powi(f.w[k])?);
        beta.push(f.y.sub(&f.z[k]).powi(f.w[k])?);
    }
    let mut prefix = vec![GaussianRational::one(); n + 1];
    for k in 0..n {
        prefix[k + 1] = prefix[k].mul(&alpha[k]);
    }
    let mut suffix = vec![GaussianRational::one(); n + 1];
    for k in (0..n).rev() {
        suffix[k] = suffix[k + 1].mul(&beta[k]);
    }
    let lhs = prefix[n].sub(&suffix[0]);
    let mut rhs = GaussianRational::zero();
    for k in 0..n {
        let term = alpha[k].sub(&beta[k]).mul(&prefix[k]).mul(&suffix[k + 1]);
        rhs = rhs.add(&term);
    }
    Ok((lhs, rhs))
}
