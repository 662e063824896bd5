//! Floating-point evaluators for the registered identities.
//!
//! Binomial powers C(.,.)^w with complex w are evaluated FACTORED by default:
//! every power is exp(w * L) where L comes from a per-identity log ledger
//! anchored at a gamma-ratio log and advanced by principal logs of the same
//! linear factors the telescoping derivation multiplies through. Under this
//! convention the identities are value-level consequences of the product
//! difference equation and hold for all sampled complex exponents. The
//! `Principal` convention instead raises the binomial value itself to the
//! power; it is observational and only agrees with the factored value where
//! no accumulated argument leaves the principal strip.

use super::{Assignment, EvalKind, Family, FdKind, Variant, W1Sub};
use crate::specfun::{
    binomial, c64, complex_pow, gen_harmonic, log_binomial, pole_distance, ComplexScalar,
    SpecFunError, POLE_TOLERANCE,
};
use crate::sum::{ComplexSum, NeumaierSum};

/// How binomial powers are evaluated in numeric mode.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum PowerConvention {
    #[default]
    Factored,
    Principal,
}

/// One LHS-sum / RHS comparison: the summation terms, the right side, and
/// the gross magnitude of the right-side pieces.
#[derive(Clone, Debug)]
pub struct NumericParts {
    pub terms: Vec<ComplexScalar>,
    pub rhs: ComplexScalar,
    pub rhs_gross: f64,
}

impl NumericParts {
    pub fn lhs(&self) -> ComplexScalar {
        let mut acc = ComplexSum::new();
        for &t in &self.terms {
            acc.add(t);
        }
        acc.total()
    }

    pub fn lhs_reversed(&self) -> ComplexScalar {
        let mut acc = ComplexSum::new();
        for &t in self.terms.iter().rev() {
            acc.add(t);
        }
        acc.total()
    }

    /// Total term magnitude of both sides, the conditioning scale.
    pub fn gross(&self) -> f64 {
        let mut g = NeumaierSum::new();
        for t in &self.terms {
            g.add(t.norm());
        }
        g.add(self.rhs_gross);
        g.total()
    }
}

/// A single comparison or a pair sharing one sweep.
#[derive(Clone, Debug)]
pub struct NumericEvaluation(Vec<NumericParts>);

impl NumericEvaluation {
    pub fn parts(&self) -> &[NumericParts] {
        &self.0
    }
}

type Result<T> = std::result::Result<T, SpecFunError>;

// ---------------------------------------------------------------------------
// family parameters
// ---------------------------------------------------------------------------

struct FamilyArgs {
    a: i64,
    b: i64,
    x: ComplexScalar,
    y: ComplexScalar,
}

impl FamilyArgs {
    fn of(asg: &Assignment) -> Self {
        Self {
            a: asg.i("a"),
            b: asg.i("b"),
            x: asg.c("x"),
            y: asg.c("y"),
        }
    }

    fn n(&self) -> usize {
        (self.b - self.a) as usize
    }
}

fn factor_u(fam: Family, f: &FamilyArgs, k: i64) -> ComplexScalar {
    let kc = k as f64;
    match fam {
        Family::F1 => f.x + kc + 1.0,
        Family::F2 => f.y - f.x + kc,
        Family::F3 => -f.y - kc - 1.0,
        Family::F4 => f.x - kc,
    }
}

fn factor_v(fam: Family, f: &FamilyArgs, k: i64) -> ComplexScalar {
    let kc = k as f64;
    match fam {
        Family::F1 => f.x - f.y + kc,
        Family::F2 => f.y + kc,
        Family::F3 => f.x - f.y - kc + 1.0,
        Family::F4 => f.y - kc + 1.0,
    }
}

fn prefactor(fam: Family, f: &FamilyArgs) -> ComplexScalar {
    match fam {
        Family::F1 | Family::F4 => f.y + 1.0,
        Family::F2 => f.x,
        Family::F3 => f.x + 1.0,
    }
}

/// Harmonic offset for the A-variant (differentiation in x).
fn offset_a(fam: Family, f: &FamilyArgs) -> ComplexScalar {
    let a = f.a as f64;
    match fam {
        Family::F1 => f.x + a,
        Family::F2 => f.y - f.x + a - 1.0,
        Family::F3 => f.y + a,
        Family::F4 => a - f.x - 1.0,
    }
}

/// Harmonic offset for the B-variant (differentiation in y).
fn offset_b(fam: Family, f: &FamilyArgs) -> ComplexScalar {
    let b = f.b as f64;
    match fam {
        Family::F1 => f.y - f.x - b,
        Family::F2 => -f.y - b,
        Family::F3 => f.x - f.y - b + 1.0,
        Family::F4 => f.y - b + 1.0,
    }
}

const I_PI: ComplexScalar = ComplexScalar::new(0.0, std::f64::consts::PI);

/// Log ledger anchor for the summation weights at k = a.
fn weight_anchor(fam: Family, f: &FamilyArgs) -> Result<ComplexScalar> {
    let a = f.a as f64;
    Ok(match fam {
        Family::F1 => log_binomial(f.x + a, f.y)?,
        Family::F2 => I_PI * a + log_binomial(f.x, f.y + a)?,
        Family::F3 => I_PI * a - log_binomial(f.x, f.y + a)?,
        Family::F4 => log_binomial(f.x, c64(a, 0.0))? - log_binomial(f.y, c64(a, 0.0))?,
    })
}

/// Log ledger anchor for the boundary products at j = a.
fn boundary_anchor(fam: Family, f: &FamilyArgs) -> Result<ComplexScalar> {
    let a = f.a as f64;
    Ok(match fam {
        Family::F1 => log_binomial(f.x + a, f.y + 1.0)?,
        Family::F2 => I_PI * a + log_binomial(f.x - 1.0, f.y + a - 1.0)?,
        Family::F3 => I_PI * a - log_binomial(f.x + 1.0, f.y + a)?,
        Family::F4 => log_binomial(f.x, c64(a, 0.0))? - log_binomial(f.y + 1.0, c64(a, 0.0))?,
    })
}

struct Ledger {
    u: Vec<ComplexScalar>,
    v: Vec<ComplexScalar>,
    /// weight logs nu_k for k = a..b-1
    nu: Vec<ComplexScalar>,
    tau_a: ComplexScalar,
    tau_b: ComplexScalar,
}

fn build_ledger(fam: Family, f: &FamilyArgs) -> Result<Ledger> {
    let n = f.n();
    let mut u = Vec::with_capacity(n);
    let mut v = Vec::with_capacity(n);
    for j in 0..n {
        let k = f.a + j as i64;
        let uk = factor_u(fam, f, k);
        let vk = factor_v(fam, f, k);
        if uk.norm() < POLE_TOLERANCE || vk.norm() < POLE_TOLERANCE {
            return Err(SpecFunError::Domain("vanishing linear factor".into()));
        }
        u.push(uk);
        v.push(vk);
    }
    let lnu: Vec<_> = u.iter().map(|z| z.ln()).collect();
    let lnv: Vec<_> = v.iter().map(|z| z.ln()).collect();

    let mut nu = Vec::with_capacity(n);
    nu.push(weight_anchor(fam, f)?);
    for j in 1..n {
        let prev = nu[j - 1];
        nu.push(prev + lnu[j - 1] - lnv[j]);
    }

    let tau_a = boundary_anchor(fam, f)?;
    let mut delta = ComplexSum::new();
    for j in 0..n {
        delta.add(lnu[j] - lnv[j]);
    }
    let tau_b = tau_a + delta.total();

    Ok(Ledger {
        u,
        v,
        nu,
        tau_a,
        tau_b,
    })
}

/// Order-1 generalized harmonic prefixes H(c, 0..=n).
fn harmonic_prefixes(c: ComplexScalar, n: usize) -> Result<Vec<ComplexScalar>> {
    let mut out = Vec::with_capacity(n + 1);
    let mut acc = ComplexSum::new();
    out.push(c64(0.0, 0.0));
    for i in 1..=n {
        let base = c + i as f64;
        if base.norm() < POLE_TOLERANCE {
            return Err(SpecFunError::SingularTerm { k: i as i64 });
        }
        acc.add(1.0 / base);
        out.push(acc.total());
    }
    Ok(out)
}

fn family_parts(
    fam: Family,
    variant: Variant,
    f: &FamilyArgs,
    w: ComplexScalar,
    convention: PowerConvention,
) -> Result<NumericParts> {
    let n = f.n();
    if n == 0 {
        return Ok(NumericParts {
            terms: vec![],
            rhs: c64(0.0, 0.0),
            rhs_gross: 0.0,
        });
    }

    // weights W_k and boundary values B_a, B_b under the chosen convention
    let (weights, boundary_a, boundary_b, u, v): (
        Vec<ComplexScalar>,
        ComplexScalar,
        ComplexScalar,
        Vec<ComplexScalar>,
        Vec<ComplexScalar>,
    ) = match convention {
        PowerConvention::Factored => {
            let ledger = build_ledger(fam, f)?;
            let weights = ledger.nu.iter().map(|&l| (w * l).exp()).collect();
            let ba = (w * ledger.tau_a).exp();
            let bb = (w * ledger.tau_b).exp();
            (weights, ba, bb, ledger.u, ledger.v)
        }
        PowerConvention::Principal => {
            let mut weights = Vec::with_capacity(n);
            let mut u = Vec::with_capacity(n);
            let mut v = Vec::with_capacity(n);
            for j in 0..n {
                let k = f.a + j as i64;
                u.push(factor_u(fam, f, k));
                v.push(factor_v(fam, f, k));
                weights.push(principal_weight(fam, f, k, w)?);
            }
            let ba = principal_boundary(fam, f, f.a, w)?;
            let bb = principal_boundary(fam, f, f.b, w)?;
            (weights, ba, bb, u, v)
        }
    };

    let pref = complex_pow(prefactor(fam, f), w)?;

    let mut terms = Vec::with_capacity(n);
    match variant {
        Variant::General => {
            for j in 0..n {
                let up = complex_pow(u[j], w)?;
                let vp = complex_pow(v[j], w)?;
                terms.push((up - vp) * weights[j]);
            }
            let rhs = pref * (boundary_b - boundary_a);
            let rhs_gross = (pref * boundary_b).norm() + (pref * boundary_a).norm();
            Ok(NumericParts {
                terms,
                rhs,
                rhs_gross,
            })
        }
        Variant::HarmonicA => {
            let h = harmonic_prefixes(offset_a(fam, f), n)?;
            for j in 0..n {
                let up = complex_pow(u[j], w)?;
                let vp = complex_pow(v[j], w)?;
                terms.push((up * h[j + 1] - vp * h[j]) * weights[j]);
            }
            let rhs = pref * boundary_b * h[n];
            Ok(NumericParts {
                terms,
                rhs,
                rhs_gross: rhs.norm(),
            })
        }
        Variant::HarmonicB => {
            let h = harmonic_prefixes(offset_b(fam, f), n)?;
            for j in 0..n {
                let up = complex_pow(u[j], w)?;
                let vp = complex_pow(v[j], w)?;
                terms.push((up * h[n - j - 1] - vp * h[n - j]) * weights[j]);
            }
            let rhs = -pref * boundary_a * h[n];
            Ok(NumericParts {
                terms,
                rhs,
                rhs_gross: rhs.norm(),
            })
        }
    }
}

fn principal_weight(
    fam: Family,
    f: &FamilyArgs,
    k: i64,
    w: ComplexScalar,
) -> Result<ComplexScalar> {
    let kc = k as f64;
    let sign = |p: ComplexScalar| (p * I_PI).exp();
    Ok(match fam {
        Family::F1 => complex_pow(binomial(f.x + kc, f.y)?, w)?,
        Family::F2 => sign(w * kc) * complex_pow(binomial(f.x, f.y + kc)?, w)?,
        Family::F3 => sign(w * kc) * complex_pow(binomial(f.x, f.y + kc)?, -w)?,
        Family::F4 => {
            complex_pow(binomial(f.x, c64(kc, 0.0))?, w)?
                * complex_pow(binomial(f.y, c64(kc, 0.0))?, -w)?
        }
    })
}

fn principal_boundary(
    fam: Family,
    f: &FamilyArgs,
    j: i64,
    w: ComplexScalar,
) -> Result<ComplexScalar> {
    let jc = j as f64;
    let sign = |p: ComplexScalar| (p * I_PI).exp();
    Ok(match fam {
        Family::F1 => complex_pow(binomial(f.x + jc, f.y + 1.0)?, w)?,
        Family::F2 => sign(w * jc) * complex_pow(binomial(f.x - 1.0, f.y + jc - 1.0)?, w)?,
        Family::F3 => sign(w * jc) * complex_pow(binomial(f.x + 1.0, f.y + jc)?, -w)?,
        Family::F4 => {
            complex_pow(binomial(f.x, c64(jc, 0.0))?, w)?
                * complex_pow(binomial(f.y + 1.0, c64(jc, 0.0))?, -w)?
        }
    })
}

// ---------------------------------------------------------------------------
// unit-exponent reductions
// ---------------------------------------------------------------------------

fn parity(k: i64) -> f64 {
    if k & 1 == 0 {
        1.0
    } else {
        -1.0
    }
}

fn h1(c: ComplexScalar, n: u64) -> Result<ComplexScalar> {
    gen_harmonic(c, n, c64(1.0, 0.0))
}

/// The four unit-exponent binomial reductions, kept as evaluator pairs for
/// the parent-consistency checks: for each family the parent identity at
/// w = 1 is the reduction scaled by the bracket constant.
pub fn binomial_w1_parts(fam: Family, asg: &Assignment) -> Result<NumericParts> {
    let f = FamilyArgs::of(asg);
    let (a, b, x, y) = (f.a, f.b, f.x, f.y);
    let n = f.n();
    let mut terms = Vec::with_capacity(n);
    match fam {
        Family::F1 => {
            for k in a..b {
                terms.push(binomial(x + k as f64, y)?);
            }
            let rhs = binomial(x + b as f64, y + 1.0)? - binomial(x + a as f64, y + 1.0)?;
            let rhs_gross =
                binomial(x + b as f64, y + 1.0)?.norm() + binomial(x + a as f64, y + 1.0)?.norm();
            Ok(NumericParts {
                terms,
                rhs,
                rhs_gross,
            })
        }
        Family::F2 => {
            for k in a..b {
                terms.push(parity(k) * binomial(x, y + k as f64)?);
            }
            let ta = parity(a) * binomial(x - 1.0, y + a as f64 - 1.0)?;
            let tb = parity(b) * binomial(x - 1.0, y + b as f64 - 1.0)?;
            Ok(NumericParts {
                terms,
                rhs: ta - tb,
                rhs_gross: ta.norm() + tb.norm(),
            })
        }
        Family::F3 => {
            for k in a..b {
                terms.push(parity(k) / binomial(x, y + k as f64)?);
            }
            let scale = (x + 1.0) / (x + 2.0);
            let ta = parity(a) / binomial(x + 1.0, y + a as f64)?;
            let tb = parity(b) / binomial(x + 1.0, y + b as f64)?;
            Ok(NumericParts {
                terms,
                rhs: scale * (ta - tb),
                rhs_gross: (scale * ta).norm() + (scale * tb).norm(),
            })
        }
        Family::F4 => {
            for k in a..b {
                let kc = c64(k as f64, 0.0);
                terms.push(binomial(x, kc)? / binomial(y, kc)?);
            }
            let scale = (y + 1.0) / (x - y - 1.0);
            let ta = binomial(x, c64(a as f64, 0.0))? / binomial(y + 1.0, c64(a as f64, 0.0))?;
            let tb = binomial(x, c64(b as f64, 0.0))? / binomial(y + 1.0, c64(b as f64, 0.0))?;
            Ok(NumericParts {
                terms,
                rhs: scale * (tb - ta),
                rhs_gross: (scale * ta).norm() + (scale * tb).norm(),
            })
        }
    }
}

fn w1_parts(fam: Family, sub: W1Sub, asg: &Assignment) -> Result<NumericParts> {
    let f = FamilyArgs::of(asg);
    let (a, b, x, y) = (f.a, f.b, f.x, f.y);
    let n = (b - a) as u64;
    let ca = offset_a(fam, &f);
    let cb = offset_b(fam, &f);
    let mut terms = Vec::with_capacity(n as usize);
    match (fam, sub) {
        (Family::F1, W1Sub::A) => {
            for k in a..b {
                terms.push(binomial(x + k as f64, y)? * h1(ca, (k - a) as u64)?);
            }
            let big_b = binomial(x + b as f64, y + 1.0)?;
            let big_a = binomial(x + a as f64, y + 1.0)?;
            let inv = 1.0 / (y + 1.0);
            let p1 = big_b * (h1(ca, n)? - inv);
            let p2 = inv * big_a;
            Ok(NumericParts {
                terms,
                rhs: p1 + p2,
                rhs_gross: p1.norm() + p2.norm(),
            })
        }
        (Family::F1, W1Sub::B) => {
            for k in a..b {
                terms.push(binomial(x + k as f64, y)? * h1(cb, (b - k - 1) as u64)?);
            }
            let big_b = binomial(x + b as f64, y + 1.0)?;
            let big_a = binomial(x + a as f64, y + 1.0)?;
            let inv = 1.0 / (y + 1.0);
            let p1 = -big_a * (h1(cb, n)? - inv);
            let p2 = -inv * big_b;
            Ok(NumericParts {
                terms,
                rhs: p1 + p2,
                rhs_gross: p1.norm() + p2.norm(),
            })
        }
        (Family::F2, W1Sub::A) => {
            for k in a..b {
                terms.push(parity(k) * binomial(x, y + k as f64)? * h1(ca, (k - a) as u64)?);
            }
            let big_b = binomial(x - 1.0, y + b as f64 - 1.0)?;
            let big_a = binomial(x - 1.0, y + a as f64 - 1.0)?;
            let inv = 1.0 / x;
            let p1 = parity(b + 1) * big_b * (h1(ca, n)? + inv);
            let p2 = parity(a) * inv * big_a;
            Ok(NumericParts {
                terms,
                rhs: p1 + p2,
                rhs_gross: p1.norm() + p2.norm(),
            })
        }
        (Family::F2, W1Sub::B) => {
            for k in a..b {
                terms.push(parity(k) * binomial(x, y + k as f64)? * h1(cb, (b - k - 1) as u64)?);
            }
            let big_b = binomial(x - 1.0, y + b as f64 - 1.0)?;
            let big_a = binomial(x - 1.0, y + a as f64 - 1.0)?;
            let inv = 1.0 / x;
            let p1 = parity(a) * big_a * (h1(cb, n)? + inv);
            let p2 = -parity(b) * inv * big_b;
            Ok(NumericParts {
                terms,
                rhs: p1 + p2,
                rhs_gross: p1.norm() + p2.norm(),
            })
        }
        (Family::F3, W1Sub::A) => {
            for k in a..b {
                terms.push(parity(k) / binomial(x, y + k as f64)? * h1(ca, (k - a) as u64)?);
            }
            let scale = (x + 1.0) / (x + 2.0);
            let inv = 1.0 / (x + 2.0);
            let rb = parity(b + 1) / binomial(x + 1.0, y + b as f64)? * (h1(ca, n)? - inv);
            let ra = -parity(a) * inv / binomial(x + 1.0, y + a as f64)?;
            let p1 = scale * rb;
            let p2 = scale * ra;
            Ok(NumericParts {
                terms,
                rhs: p1 + p2,
                rhs_gross: p1.norm() + p2.norm(),
            })
        }
        (Family::F3, W1Sub::B) => {
            for k in a..b {
                terms.push(parity(k) / binomial(x, y + k as f64)? * h1(cb, (b - k - 1) as u64)?);
            }
            let scale = (x + 1.0) / (x + 2.0);
            let inv = 1.0 / (x + 2.0);
            let ra = parity(a) / binomial(x + 1.0, y + a as f64)? * (h1(cb, n)? - inv);
            let rb = parity(b) * inv / binomial(x + 1.0, y + b as f64)?;
            let p1 = scale * ra;
            let p2 = scale * rb;
            Ok(NumericParts {
                terms,
                rhs: p1 + p2,
                rhs_gross: p1.norm() + p2.norm(),
            })
        }
        (Family::F4, W1Sub::A) => {
            for k in a..b {
                let kc = c64(k as f64, 0.0);
                terms.push(binomial(x, kc)? / binomial(y, kc)? * h1(ca, (k - a) as u64)?);
            }
            let scale = (y + 1.0) / (x - y - 1.0);
            let inv = 1.0 / (x - y - 1.0);
            let bb = binomial(x, c64(b as f64, 0.0))? / binomial(y + 1.0, c64(b as f64, 0.0))?;
            let ba = binomial(x, c64(a as f64, 0.0))? / binomial(y + 1.0, c64(a as f64, 0.0))?;
            let p1 = scale * (bb * (h1(ca, n)? + inv));
            let p2 = -scale * inv * ba;
            Ok(NumericParts {
                terms,
                rhs: p1 + p2,
                rhs_gross: p1.norm() + p2.norm(),
            })
        }
        (Family::F4, W1Sub::B) => {
            for k in a..b {
                let kc = c64(k as f64, 0.0);
                terms.push(binomial(x, kc)? / binomial(y, kc)? * h1(cb, (b - k - 1) as u64)?);
            }
            let scale = (y + 1.0) / (y - x + 1.0);
            let inv = 1.0 / (y - x + 1.0);
            let bb = binomial(x, c64(b as f64, 0.0))? / binomial(y + 1.0, c64(b as f64, 0.0))?;
            let ba = binomial(x, c64(a as f64, 0.0))? / binomial(y + 1.0, c64(a as f64, 0.0))?;
            let p1 = scale * (ba * (h1(cb, n)? - inv));
            let p2 = scale * inv * bb;
            Ok(NumericParts {
                terms,
                rhs: p1 + p2,
                rhs_gross: p1.norm() + p2.norm(),
            })
        }
    }
}

// ---------------------------------------------------------------------------
// traditional-harmonic identities
// ---------------------------------------------------------------------------

fn trad_parts(which: u8, asg: &Assignment) -> Result<NumericParts> {
    let n = asg.i("n");
    let nn = n as u64;
    // harmonic prefixes H_0..H_{n+1}
    let mut hs = Vec::with_capacity(nn as usize + 2);
    let mut acc = NeumaierSum::new();
    hs.push(0.0);
    for k in 1..=nn + 1 {
        acc.add(1.0 / k as f64);
        hs.push(acc.total());
    }
    match which {
        1 => {
            let w = asg.c("w");
            let mut terms = vec![c64(0.0, 0.0)]; // k = 0 term vanishes with H_0
            for k in 1..=n {
                let kp =
                    complex_pow(c64(k as f64 + 1.0, 0.0), w)? - complex_pow(c64(k as f64, 0.0), w)?;
                terms.push(kp * hs[k as usize]);
            }
            let p1 = complex_pow(c64(n as f64 + 1.0, 0.0), w)? * hs[nn as usize + 1];
            let p2 = gen_harmonic(c64(0.0, 0.0), nn + 1, c64(1.0, 0.0) - w)?;
            Ok(NumericParts {
                terms,
                rhs: p1 - p2,
                rhs_gross: p1.norm() + p2.norm(),
            })
        }
        2 => {
            let m = asg.c("m");
            let mut terms = Vec::with_capacity(nn as usize + 1);
            for k in 0..=n {
                terms.push(binomial(c64(k as f64, 0.0), m)? * hs[k as usize]);
            }
            let inv = 1.0 / (m + 1.0);
            let p1 = binomial(c64(n as f64 + 1.0, 0.0), m + 1.0)? * (hs[nn as usize + 1] - inv);
            let p2 = inv * binomial(c64(0.0, 0.0), m + 1.0)?;
            Ok(NumericParts {
                terms,
                rhs: p1 + p2,
                rhs_gross: p1.norm() + p2.norm(),
            })
        }
        3 => {
            let m = asg.c("m");
            let nc = c64(n as f64, 0.0);
            let mut terms = Vec::with_capacity(nn as usize + 1);
            for k in 0..=n {
                let kc = c64(k as f64, 0.0);
                terms.push(binomial(m, nc - kc)? / binomial(nc, kc)? * hs[k as usize]);
            }
            let inv = 1.0 / (nc - m + 1.0);
            let scale = (nc + 1.0) * inv;
            let p1 = scale * hs[nn as usize + 1];
            let p2 = scale * inv * (binomial(m, nc + 1.0)? - 1.0);
            Ok(NumericParts {
                terms,
                rhs: p1 + p2,
                rhs_gross: p1.norm() + p2.norm(),
            })
        }
        4 => {
            let m = asg.c("m");
            let mut terms = Vec::with_capacity(nn as usize + 1);
            for k in 0..=n {
                terms.push(parity(k) / binomial(m, c64(k as f64, 0.0))? * hs[k as usize]);
            }
            let inv = 1.0 / (m + 2.0);
            let scale = (m + 1.0) * inv;
            let p1 = scale
                * (parity(n) / binomial(m + 1.0, c64(n as f64 + 1.0, 0.0))?
                    * (hs[nn as usize + 1] - inv));
            let p2 = -scale * inv;
            Ok(NumericParts {
                terms,
                rhs: p1 + p2,
                rhs_gross: p1.norm() + p2.norm(),
            })
        }
        _ => unreachable!("traditional identities are numbered 1..=4"),
    }
}

// ---------------------------------------------------------------------------
// fixed-instance pairs
// ---------------------------------------------------------------------------

fn pair_squares_parts(asg: &Assignment) -> Result<Vec<NumericParts>> {
    let n = asg.i("n");
    let nc = c64(n as f64, 0.0);
    let central = binomial(nc * 2.0, nc)?;
    let mut t1 = Vec::with_capacity(n as usize + 1);
    let mut t2 = Vec::with_capacity(n as usize + 1);
    for k in 0..=n {
        let b = binomial(nc, c64(k as f64, 0.0))?;
        t1.push(b * b);
        t2.push(k as f64 * b * b);
    }
    let rhs2 = nc / 2.0 * central;
    Ok(vec![
        NumericParts {
            terms: t1,
            rhs: central,
            rhs_gross: central.norm(),
        },
        NumericParts {
            terms: t2,
            rhs: rhs2,
            rhs_gross: rhs2.norm(),
        },
    ])
}

fn pair_dixon_parts(asg: &Assignment) -> Result<Vec<NumericParts>> {
    let n = asg.i("n");
    let n2 = c64(2.0 * n as f64, 0.0);
    let nc = c64(n as f64, 0.0);
    let base = binomial(n2, nc)? * binomial(nc * 3.0, nc)?;
    let mut t1 = Vec::with_capacity(2 * n as usize + 1);
    let mut t2 = Vec::with_capacity(2 * n as usize + 1);
    for k in 0..=2 * n {
        let b = binomial(n2, c64(k as f64, 0.0))?;
        let cube = b * b * b;
        t1.push(parity(k) * cube);
        t2.push(parity(k) * (k as f64) * (2 * n - k) as f64 * cube);
    }
    let rhs1 = parity(n) * base;
    let rhs2 = parity(n) * (4.0 / 3.0) * (n as f64) * (n as f64) * base;
    Ok(vec![
        NumericParts {
            terms: t1,
            rhs: rhs1,
            rhs_gross: rhs1.norm(),
        },
        NumericParts {
            terms: t2,
            rhs: rhs2,
            rhs_gross: rhs2.norm(),
        },
    ])
}

/// Evaluate an identity numerically. Finite-difference specs are evaluated
/// by [`super::fd`], not here.
pub fn evaluate(
    kind: EvalKind,
    asg: &Assignment,
    convention: PowerConvention,
) -> Result<NumericEvaluation> {
    let parts = match kind {
        EvalKind::Family(fam, variant) => {
            let f = FamilyArgs::of(asg);
            vec![family_parts(fam, variant, &f, asg.c("w"), convention)?]
        }
        EvalKind::W1(fam, sub) => vec![w1_parts(fam, sub, asg)?],
        EvalKind::Trad(t) => vec![trad_parts(t, asg)?],
        EvalKind::PairSquares => pair_squares_parts(asg)?,
        EvalKind::PairDixon => pair_dixon_parts(asg)?,
        EvalKind::Fd(_) => {
            return Err(SpecFunError::Domain(
                "finite-difference specs have no summation evaluator".into(),
            ))
        }
    };
    Ok(NumericEvaluation(parts))
}

// ---------------------------------------------------------------------------
// guards
// ---------------------------------------------------------------------------

struct GuardSet {
    min: f64,
    label: &'static str,
    at: i64,
}

impl GuardSet {
    fn new() -> Self {
        Self {
            min: f64::INFINITY,
            label: "",
            at: 0,
        }
    }

    fn mag(&mut self, label: &'static str, at: i64, value: ComplexScalar) {
        let m = value.norm();
        if m < self.min {
            self.min = m;
            self.label = label;
            self.at = at;
        }
    }

    fn pole(&mut self, label: &'static str, at: i64, arg: ComplexScalar) {
        let d = pole_distance(arg);
        if d < self.min {
            self.min = d;
            self.label = label;
            self.at = at;
        }
    }

    fn finish(self) -> Option<(String, f64)> {
        if self.min.is_finite() {
            Some((format!("{} (k = {})", self.label, self.at), self.min))
        } else {
            None
        }
    }
}

fn family_guards(g: &mut GuardSet, fam: Family, variant: Option<Variant>, f: &FamilyArgs) {
    let (a, b, x, y) = (f.a, f.b, f.x, f.y);
    let ac = a as f64;
    for k in a..b {
        g.mag("linear factor u", k, factor_u(fam, f, k));
        g.mag("linear factor v", k, factor_v(fam, f, k));
    }
    g.mag("prefactor", a, prefactor(fam, f));
    match fam {
        Family::F1 => {
            g.pole("gamma arg x+a+1", a, x + ac + 1.0);
            g.pole("gamma arg y+1", a, y + 1.0);
            g.pole("gamma arg y+2", a, y + 2.0);
            g.pole("gamma arg x+a-y+1", a, x + ac - y + 1.0);
            g.pole("gamma arg x+a-y", a, x + ac - y);
        }
        Family::F2 => {
            g.pole("gamma arg x+1", a, x + 1.0);
            g.pole("gamma arg x", a, x);
            g.pole("gamma arg y+a+1", a, y + ac + 1.0);
            g.pole("gamma arg y+a", a, y + ac);
            g.pole("gamma arg x-y-a+1", a, x - y - ac + 1.0);
        }
        Family::F3 => {
            g.pole("gamma arg x+1", a, x + 1.0);
            g.pole("gamma arg x+2", a, x + 2.0);
            g.pole("gamma arg y+a+1", a, y + ac + 1.0);
            g.pole("gamma arg x-y-a+1", a, x - y - ac + 1.0);
            g.pole("gamma arg x-y-a+2", a, x - y - ac + 2.0);
        }
        Family::F4 => {
            g.pole("gamma arg x+1", a, x + 1.0);
            g.pole("gamma arg a+1", a, c64(ac + 1.0, 0.0));
            g.pole("gamma arg x-a+1", a, x - ac + 1.0);
            g.pole("gamma arg y+1", a, y + 1.0);
            g.pole("gamma arg y+2", a, y + 2.0);
            g.pole("gamma arg y-a+1", a, y - ac + 1.0);
            g.pole("gamma arg y-a+2", a, y - ac + 2.0);
        }
    }
    let n = (b - a) as u64;
    match variant {
        Some(Variant::HarmonicA) => {
            let c = offset_a(fam, f);
            for j in 1..=n as i64 {
                g.mag("harmonic denominator", j, c + j as f64);
            }
        }
        Some(Variant::HarmonicB) => {
            let c = offset_b(fam, f);
            for j in 1..=n as i64 {
                g.mag("harmonic denominator", j, c + j as f64);
            }
        }
        _ => {}
    }
}

fn w1_guards(g: &mut GuardSet, fam: Family, sub: W1Sub, f: &FamilyArgs) {
    let variant = match sub {
        W1Sub::A => Variant::HarmonicA,
        W1Sub::B => Variant::HarmonicB,
    };
    family_guards(g, fam, Some(variant), f);
    let (a, b, x, y) = (f.a, f.b, f.x, f.y);
    // gamma arguments of exactly the binomials the reduced forms evaluate:
    // summation binomials at k = a..b-1, boundary binomials at a and b
    match fam {
        Family::F1 => {
            // C(x+k,y) and boundaries C(x+j,y+1)
            for k in a..=b {
                g.pole("gamma arg x+k+1", k, x + k as f64 + 1.0);
            }
            for k in a..b {
                g.pole("gamma arg x+k-y+1", k, x + k as f64 - y + 1.0);
            }
            for j in [a, b] {
                g.pole("gamma arg x+j-y", j, x + j as f64 - y);
            }
        }
        Family::F2 => {
            // C(x,y+k) and boundaries C(x-1,y+j-1)
            g.pole("gamma arg x+1", a, x + 1.0);
            g.pole("gamma arg x", a, x);
            for k in a..b {
                g.pole("gamma arg y+k+1", k, y + k as f64 + 1.0);
                g.pole("gamma arg x-y-k+1", k, x - y - k as f64 + 1.0);
            }
            for j in [a, b] {
                g.pole("gamma arg y+j", j, y + j as f64);
                g.pole("gamma arg x-y-j+1", j, x - y - j as f64 + 1.0);
            }
        }
        Family::F3 => {
            // inverted C(x,y+k) and boundaries C(x+1,y+j), all nonvanishing
            g.pole("gamma arg x+1", a, x + 1.0);
            g.pole("gamma arg x+2", a, x + 2.0);
            for k in a..b {
                g.pole("gamma arg y+k+1", k, y + k as f64 + 1.0);
                g.pole("gamma arg x-y-k+1", k, x - y - k as f64 + 1.0);
            }
            for j in [a, b] {
                g.pole("gamma arg y+j+1", j, y + j as f64 + 1.0);
                g.pole("gamma arg x-y-j+2", j, x - y - j as f64 + 2.0);
            }
            g.mag("denominator x+2", a, x + 2.0);
        }
        Family::F4 => {
            // C(x,k), inverted C(y,k), boundaries C(x,j) and inverted C(y+1,j)
            g.pole("gamma arg x+1", a, x + 1.0);
            g.pole("gamma arg y+1", a, y + 1.0);
            g.pole("gamma arg y+2", a, y + 2.0);
            for k in a..=b {
                g.pole("gamma arg k+1", k, c64(k as f64 + 1.0, 0.0));
                g.pole("gamma arg x-k+1", k, x - k as f64 + 1.0);
            }
            for k in a..b {
                g.pole("gamma arg y-k+1", k, y - k as f64 + 1.0);
            }
            for j in [a, b] {
                g.pole("gamma arg y-j+2", j, y - j as f64 + 2.0);
            }
            match sub {
                W1Sub::A => g.mag("denominator x-y-1", a, x - y - 1.0),
                W1Sub::B => g.mag("denominator y-x+1", a, y - x + 1.0),
            }
        }
    }
}

fn trad_guards(g: &mut GuardSet, which: u8, asg: &Assignment) {
    match which {
        1 => {}
        2 => {
            g.mag("denominator m+1", 0, asg.c("m") + 1.0);
        }
        3 => {
            let (n, m) = (asg.i("n"), asg.c("m"));
            g.pole("gamma arg m+1", 0, m + 1.0);
            g.mag("denominator n-m+1", n, c64(n as f64, 0.0) - m + 1.0);
        }
        4 => {
            let (n, m) = (asg.i("n"), asg.c("m"));
            g.mag("denominator m+2", 0, m + 2.0);
            g.pole("gamma arg m+1", 0, m + 1.0);
            g.pole("gamma arg m+2", 0, m + 2.0);
            for k in 0..=n {
                g.pole("gamma arg m-k+1", k, m - k as f64 + 1.0);
            }
        }
        _ => unreachable!(),
    }
}

fn fd_guards(g: &mut GuardSet, kind: FdKind, asg: &Assignment) {
    match kind {
        FdKind::ProductLog => {
            let (a, b, x) = (asg.i("a"), asg.i("b"), asg.c("x"));
            for k in a..b {
                g.mag("factor x-k", k, x - k as f64);
            }
        }
        FdKind::HarmonicOrder => {
            let (n, x, y) = (asg.i("n"), asg.c("x"), asg.c("y"));
            for k in 1..=n {
                g.mag("denominator x+y+k", k, x + y + k as f64);
            }
        }
        FdKind::BinomialPower => {
            let (n, x, y) = (asg.i("n"), asg.c("x"), asg.c("y"));
            g.pole("gamma arg x+y+1", 0, x + y + 1.0);
            g.pole("gamma arg x+y-n+1", n, x + y - n as f64 + 1.0);
            for j in 1..=n {
                g.mag("harmonic denominator", j, x + y - n as f64 + j as f64);
            }
        }
    }
}

/// The smallest guard magnitude for an assignment, with a description.
/// Singularity guards: explicit denominators, linear factors, gamma-argument
/// pole distances, and harmonic-term denominators.
pub fn worst_guard(kind: EvalKind, asg: &Assignment) -> Option<(String, f64)> {
    let mut g = GuardSet::new();
    match kind {
        EvalKind::Family(fam, variant) => {
            family_guards(&mut g, fam, Some(variant), &FamilyArgs::of(asg))
        }
        EvalKind::W1(fam, sub) => w1_guards(&mut g, fam, sub, &FamilyArgs::of(asg)),
        EvalKind::Trad(t) => trad_guards(&mut g, t, asg),
        EvalKind::PairSquares | EvalKind::PairDixon => {}
        EvalKind::Fd(kind) => fd_guards(&mut g, kind, asg),
    }
    g.finish()
}
