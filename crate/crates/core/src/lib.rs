//! Verification toolkit for a family of combinatorial identities built on a
//! product difference equation.
//!
//! The crate has four layers:
//!
//! * [`specfun`] — double-precision complex special functions: log-gamma and
//!   gamma (Lanczos), complex-argument binomial coefficients, falling
//!   products, harmonic and generalized harmonic numbers, principal powers.
//! * [`exact`] — arbitrary-precision rational arithmetic (binomials, harmonic
//!   numbers, Gaussian rationals) providing bit-true ground truth on integer
//!   and rational instances.
//! * [`telescope`] — the product difference equation itself, evaluated as a
//!   left-side product difference and a right-side telescoping sum, in
//!   floating and exact arithmetic.
//! * [`identities`] — a registry of binomial-sum and harmonic-number
//!   identities as LHS/RHS evaluator pairs with sampling domains and
//!   singularity guards, plus the seeded sweep harness that produces
//!   machine-readable evaluation records.
//!
//! Sweeps run data-parallel via rayon when the default `parallel` feature is
//! enabled; [`identities::sweep_sequential`] is always available and is used
//! by the benchmark suite to compare both paths.

pub mod check;
pub mod exact;
pub mod identities;
pub mod rng;
pub mod specfun;
pub mod sum;
pub mod telescope;

pub use specfun::ComplexScalar;
