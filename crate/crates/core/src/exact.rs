//! Arbitrary-precision rational arithmetic: bit-true ground truth for every
//! identity instance whose parameters are integers (or rationals) and whose
//! terms are rational.

use num_bigint::{BigInt, Sign};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ExactError {
    #[error("domain: {0}")]
    Domain(String),
    #[error("singular term at k = {k}")]
    SingularTerm { k: i64 },
    #[error("division by zero: {0}")]
    DivisionByZero(String),
    #[error("not exactly evaluable: {0}")]
    NotExactlyEvaluable(String),
}

pub fn rat_i64(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn binom_nonneg(n: i64, k: i64) -> BigInt {
    debug_assert!(n >= 0 && k >= 0);
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Binomial coefficient n!/(k!(n−k)!) for 0 ≤ k ≤ n, 0 otherwise.
/// The general integer extension lives in [`binomial_general`].
pub fn binomial_exact(n: i64, k: i64) -> Result<BigRational, ExactError> {
    if n < 0 {
        return Err(ExactError::Domain(format!(
            "binomial_exact needs n >= 0, got n = {n}"
        )));
    }
    if k < 0 || k > n {
        return Ok(BigRational::zero());
    }
    Ok(BigRational::from_integer(binom_nonneg(n, k)))
}

/// Integer binomial coefficient extended to any integer upper argument:
/// zero for negative lower argument, otherwise the falling product
/// u(u−1)…(u−v+1)/v!. Negative upper arguments go through upper negation,
/// C(u,v) = (−1)^v C(v−u−1, v), keeping the arithmetic in nonnegative
/// integer binomials.
pub fn binomial_general(u: i64, v: i64) -> BigRational {
    if v < 0 {
        return BigRational::zero();
    }
    let value = if u >= 0 {
        binom_nonneg(u, v)
    } else {
        let base = binom_nonneg(v - u - 1, v);
        if v & 1 == 1 {
            -base
        } else {
            base
        }
    };
    BigRational::from_integer(value)
}

/// Exact harmonic number H_n.
pub fn harmonic_exact(n: u64) -> BigRational {
    let mut acc = BigRational::zero();
    for k in 1..=n {
        acc += BigRational::new(BigInt::one(), BigInt::from(k));
    }
    acc
}

/// Exact generalized harmonic number Σ_{k=1}^{n} (c+k)^{-m} for integer
/// offset and order. Negative m means positive integer powers.
pub fn gen_harmonic_exact(c: i64, n: u64, m: i64) -> Result<BigRational, ExactError> {
    let mut acc = BigRational::zero();
    for k in 1..=n as i64 {
        let base = c + k;
        if base == 0 && m > 0 {
            return Err(ExactError::SingularTerm { k });
        }
        acc += rational_pow(&rat_i64(base), -m)?;
    }
    Ok(acc)
}

/// q^e for integer e; zero base with negative exponent is a division by zero.
pub fn rational_pow(q: &BigRational, e: i64) -> Result<BigRational, ExactError> {
    if e == 0 {
        return Ok(BigRational::one());
    }
    if q.is_zero() {
        if e > 0 {
            return Ok(BigRational::zero());
        }
        return Err(ExactError::DivisionByZero(
            "zero raised to a negative power".into(),
        ));
    }
    let p = q.pow(e.unsigned_abs().min(i32::MAX as u64) as i32);
    if e > 0 {
        Ok(p)
    } else {
        Ok(p.recip())
    }
}

/// Rational-to-double conversion that survives numerators and denominators
/// far beyond the f64 range by scaling to a ~63-bit quotient first.
pub fn rational_to_f64(q: &BigRational) -> f64 {
    if q.is_zero() {
        return 0.0;
    }
    let negative = q.is_negative();
    let n = q.numer().abs();
    let d = q.denom().clone();
    let shift = 63i64 - (n.bits() as i64 - d.bits() as i64);
    let scaled = if shift >= 0 {
        (n << shift as u64) / d
    } else {
        n / (d << (-shift) as u64)
    };
    let mag = scaled.to_f64().unwrap_or(f64::INFINITY) * 2f64.powi(-shift as i32);
    if negative {
        -mag
    } else {
        mag
    }
}

/// Complex number with exact rational components. Ground truth for falling
/// products and telescoping sums at Gaussian-rational points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GaussianRational {
    pub re: BigRational,
    pub im: BigRational,
}

impl GaussianRational {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        Self { re, im }
    }

    pub fn from_i64(re: i64, im: i64) -> Self {
        Self::new(rat_i64(re), rat_i64(im))
    }

    /// re = p/q, im = r/s
    pub fn from_ratios(p: i64, q: i64, r: i64, s: i64) -> Self {
        Self::new(rat(p, q), rat(r, s))
    }

    pub fn zero() -> Self {
        Self::new(BigRational::zero(), BigRational::zero())
    }

    pub fn one() -> Self {
        Self::new(BigRational::one(), BigRational::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::new(&self.re + &other.re, &self.im + &other.im)
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self::new(&self.re - &other.re, &self.im - &other.im)
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::new(
            &self.re * &other.re - &self.im * &other.im,
            &self.re * &other.im + &self.im * &other.re,
        )
    }

    pub fn div(&self, other: &Self) -> Result<Self, ExactError> {
        let norm = &other.re * &other.re + &other.im * &other.im;
        if norm.is_zero() {
            return Err(ExactError::DivisionByZero("Gaussian-rational zero".into()));
        }
        Ok(Self::new(
            (&self.re * &other.re + &self.im * &other.im) / &norm,
            (&self.im * &other.re - &self.re * &other.im) / &norm,
        ))
    }

    pub fn powi(&self, e: i64) -> Result<Self, ExactError> {
        if e == 0 {
            return Ok(Self::one());
        }
        if self.is_zero() {
            if e > 0 {
                return Ok(Self::zero());
            }
            return Err(ExactError::DivisionByZero(
                "zero raised to a negative power".into(),
            ));
        }
        let mut result = Self::one();
        let mut b = self.clone();
        let mut k = e.unsigned_abs();
        while k > 0 {
            if k & 1 == 1 {
                result = result.mul(&b);
            }
            k >>= 1;
            if k > 0 {
                b = b.mul(&b);
            }
        }
        if e < 0 {
            Self::one().div(&result)
        } else {
            Ok(result)
        }
    }

    pub fn to_complex(&self) -> crate::ComplexScalar {
        crate::ComplexScalar::new(rational_to_f64(&self.re), rational_to_f64(&self.im))
    }
}

/// Render as "p/q" (or "p" for integers), the exact-value wire format.
pub fn format_rational(q: &BigRational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Parse "p/q" or "p".
pub fn parse_rational(s: &str) -> Option<BigRational> {
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let n: BigInt = num.parse().ok()?;
    let d: BigInt = den.parse().ok()?;
    if d.sign() == Sign::NoSign {
        return None;
    }
    Some(BigRational::new(n, d))
}
