//! Neumaier-compensated summation for real and complex accumulators.
//!
//! Harmonic sums can run to 10^4 terms and telescoping sums mix terms of very
//! different magnitude; plain accumulation would drift well above the sweep
//! tolerances. Compensation is applied independently to real and imaginary
//! parts.

use crate::ComplexScalar;

/// Kahan summation improved by Neumaier: the compensation also covers the
/// case where the incoming term is larger than the running sum.
#[derive(Clone, Copy, Debug, Default)]
pub struct NeumaierSum {
    s: f64,
    c: f64,
}

impl NeumaierSum {
    pub fn new() -> Self {
        Self::default()
    }

    #[inline]
    pub fn add(&mut self, x: f64) {
        let t = self.s + x;
        if self.s.abs() >= x.abs() {
            self.c += (self.s - t) + x;
        } else {
            self.c += (x - t) + self.s;
        }
        self.s = t;
    }

    #[inline]
    pub fn total(&self) -> f64 {
        self.s + self.c
    }
}

/// Compensated accumulator for complex terms.
#[derive(Clone, Copy, Debug, Default)]
pub struct ComplexSum {
    re: NeumaierSum,
    im: NeumaierSum,
}

impl ComplexSum {
    pub fn new() -> Self {
        Self::default()
    }

    #[inline]
    pub fn add(&mut self, z: ComplexScalar) {
        self.re.add(z.re);
        self.im.add(z.im);
    }

    #[inline]
    pub fn total(&self) -> ComplexScalar {
        ComplexScalar::new(self.re.total(), self.im.total())
    }
}

/// Compensated sum over a slice, front to back.
pub fn sum_complex(terms: &[ComplexScalar]) -> ComplexScalar {
    let mut acc = ComplexSum::new();
    for &t in terms {
        acc.add(t);
    }
    acc.total()
}
