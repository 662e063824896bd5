//! Exact rational evaluation of identity instances at integer assignments.
//!
//! Exact capability is decided per instance: every exponent must be an
//! integer, every binomial must reduce to an integer-argument value (the
//! zero-for-negative-lower-index extension, with falling products covering
//! negative upper arguments), every sign factor must be an exact parity, and
//! no reciprocal may sit on a zero. Instances that fail these tests are
//! reported as not exact-capable, never guessed.

use super::{Assignment, EvalKind, Family, Value, Variant, W1Sub};
use crate::exact::{binomial_general, gen_harmonic_exact, rat, rat_i64, rational_pow, ExactError};
use num_rational::BigRational;
use num_traits::Zero;

/// Result of an exact evaluation: the value(s), or the reason the instance
/// has no exact value.
#[derive(Clone, Debug)]
pub enum ExactOutcome {
    /// One (lhs, rhs) pair per verified equality; pair specs carry two.
    Value(Vec<(BigRational, BigRational)>),
    NotCapable(String),
    Singular(String),
}

type EResult<T> = Result<T, ExactError>;

fn int_sym(asg: &Assignment, name: &str) -> EResult<i64> {
    match asg.get(name) {
        Some(Value::Int(i)) => Ok(i),
        Some(Value::Complex(_)) => Err(ExactError::NotExactlyEvaluable(format!(
            "symbol {name} is not integer-valued"
        ))),
        None => Err(ExactError::Domain(format!("missing symbol {name}"))),
    }
}

fn sign_pow(e: i64) -> BigRational {
    if e & 1 == 0 {
        rat_i64(1)
    } else {
        rat_i64(-1)
    }
}

/// Raise a binomial value to an integer power; zero under a nonpositive
/// exponent makes the instance non-exact-capable.
fn binom_pow(u: i64, v: i64, w: i64) -> EResult<BigRational> {
    let base = binomial_general(u, v);
    if base.is_zero() && w < 0 {
        return Err(ExactError::NotExactlyEvaluable(format!(
            "reciprocal of vanishing binomial C({u},{v})"
        )));
    }
    rational_pow(&base, w)
}

fn int_pow(value: i64, w: i64) -> EResult<BigRational> {
    rational_pow(&rat_i64(value), w)
}

/// H^{(1)}_{c,i} prefixes for i = 0..=n.
fn h1_prefixes(c: i64, n: u64) -> EResult<Vec<BigRational>> {
    let mut out = Vec::with_capacity(n as usize + 1);
    let mut acc = BigRational::zero();
    out.push(acc.clone());
    for i in 1..=n as i64 {
        if c + i == 0 {
            return Err(ExactError::SingularTerm { k: i });
        }
        acc += rat(1, 1) / rat_i64(c + i);
        out.push(acc.clone());
    }
    Ok(out)
}

struct FamilyInts {
    a: i64,
    b: i64,
    x: i64,
    y: i64,
    w: i64,
}

impl FamilyInts {
    fn of(asg: &Assignment, with_w: bool) -> EResult<Self> {
        Ok(Self {
            a: int_sym(asg, "a")?,
            b: int_sym(asg, "b")?,
            x: int_sym(asg, "x")?,
            y: int_sym(asg, "y")?,
            w: if with_w { int_sym(asg, "w")? } else { 1 },
        })
    }
}

fn factor_u(fam: Family, f: &FamilyInts, k: i64) -> i64 {
    match fam {
        Family::F1 => f.x + k + 1,
        Family::F2 => f.y - f.x + k,
        Family::F3 => -f.y - k - 1,
        Family::F4 => f.x - k,
    }
}

fn factor_v(fam: Family, f: &FamilyInts, k: i64) -> i64 {
    match fam {
        Family::F1 => f.x - f.y + k,
        Family::F2 => f.y + k,
        Family::F3 => f.x - f.y - k + 1,
        Family::F4 => f.y - k + 1,
    }
}

fn weight(fam: Family, f: &FamilyInts, k: i64) -> EResult<BigRational> {
    Ok(match fam {
        Family::F1 => binom_pow(f.x + k, f.y, f.w)?,
        Family::F2 => sign_pow(f.w * k) * binom_pow(f.x, f.y + k, f.w)?,
        Family::F3 => sign_pow(f.w * k) * binom_pow(f.x, f.y + k, -f.w)?,
        Family::F4 => binom_pow(f.x, k, f.w)? * binom_pow(f.y, k, -f.w)?,
    })
}

/// Boundary term of the right side at index j (without the prefactor).
fn boundary(fam: Family, f: &FamilyInts, j: i64) -> EResult<BigRational> {
    Ok(match fam {
        Family::F1 => binom_pow(f.x + j, f.y + 1, f.w)?,
        Family::F2 => sign_pow(f.w * j) * binom_pow(f.x - 1, f.y + j - 1, f.w)?,
        Family::F3 => sign_pow(f.w * j) * binom_pow(f.x + 1, f.y + j, -f.w)?,
        Family::F4 => binom_pow(f.x, j, f.w)? * binom_pow(f.y + 1, j, -f.w)?,
    })
}

fn prefactor_pow(fam: Family, f: &FamilyInts) -> EResult<BigRational> {
    let p = match fam {
        Family::F1 | Family::F4 => f.y + 1,
        Family::F2 => f.x,
        Family::F3 => f.x + 1,
    };
    int_pow(p, f.w)
}

fn offset_a(fam: Family, f: &FamilyInts) -> i64 {
    match fam {
        Family::F1 => f.x + f.a,
        Family::F2 => f.y - f.x + f.a - 1,
        Family::F3 => f.y + f.a,
        Family::F4 => f.a - f.x - 1,
    }
}

fn offset_b(fam: Family, f: &FamilyInts) -> i64 {
    match fam {
        Family::F1 => f.y - f.x - f.b,
        Family::F2 => -f.y - f.b,
        Family::F3 => f.x - f.y - f.b + 1,
        Family::F4 => f.y - f.b + 1,
    }
}

fn family_sides(
    fam: Family,
    variant: Variant,
    f: &FamilyInts,
) -> EResult<(BigRational, BigRational)> {
    let n = (f.b - f.a) as u64;
    let pref = prefactor_pow(fam, f)?;
    let mut lhs = BigRational::zero();
    match variant {
        Variant::General => {
            for k in f.a..f.b {
                let bracket =
                    int_pow(factor_u(fam, f, k), f.w)? - int_pow(factor_v(fam, f, k), f.w)?;
                lhs += bracket * weight(fam, f, k)?;
            }
            let rhs = pref * (boundary(fam, f, f.b)? - boundary(fam, f, f.a)?);
            Ok((lhs, rhs))
        }
        Variant::HarmonicA => {
            let h = h1_prefixes(offset_a(fam, f), n)?;
            for k in f.a..f.b {
                let j = (k - f.a) as usize;
                let bracket = int_pow(factor_u(fam, f, k), f.w)? * &h[j + 1]
                    - int_pow(factor_v(fam, f, k), f.w)? * &h[j];
                lhs += bracket * weight(fam, f, k)?;
            }
            let rhs = pref * boundary(fam, f, f.b)? * &h[n as usize];
            Ok((lhs, rhs))
        }
        Variant::HarmonicB => {
            let h = h1_prefixes(offset_b(fam, f), n)?;
            for k in f.a..f.b {
                let j = (k - f.a) as usize;
                let bracket = int_pow(factor_u(fam, f, k), f.w)? * &h[n as usize - j - 1]
                    - int_pow(factor_v(fam, f, k), f.w)? * &h[n as usize - j];
                lhs += bracket * weight(fam, f, k)?;
            }
            let rhs = -(pref * boundary(fam, f, f.a)? * &h[n as usize]);
            Ok((lhs, rhs))
        }
    }
}

fn nonzero(value: i64, what: &str) -> EResult<BigRational> {
    if value == 0 {
        return Err(ExactError::DivisionByZero(format!(
            "vanishing denominator {what}"
        )));
    }
    Ok(rat_i64(value))
}

fn w1_sides(fam: Family, sub: W1Sub, f: &FamilyInts) -> EResult<(BigRational, BigRational)> {
    let n = (f.b - f.a) as u64;
    let (a, b, x, y) = (f.a, f.b, f.x, f.y);
    let h = match sub {
        W1Sub::A => h1_prefixes(offset_a(fam, f), n)?,
        W1Sub::B => h1_prefixes(offset_b(fam, f), n)?,
    };
    let hn = &h[n as usize];
    let mut lhs = BigRational::zero();
    let weight_of = |k: i64| -> EResult<BigRational> {
        Ok(match fam {
            Family::F1 => binom_pow(x + k, y, 1)?,
            Family::F2 => sign_pow(k) * binom_pow(x, y + k, 1)?,
            Family::F3 => sign_pow(k) * binom_pow(x, y + k, -1)?,
            Family::F4 => binom_pow(x, k, 1)? * binom_pow(y, k, -1)?,
        })
    };
    for k in a..b {
        let j = (k - a) as usize;
        let hk = match sub {
            W1Sub::A => &h[j],
            W1Sub::B => &h[n as usize - j - 1],
        };
        lhs += weight_of(k)? * hk;
    }
    let rhs = match (fam, sub) {
        (Family::F1, W1Sub::A) => {
            let inv = nonzero(y + 1, "y+1")?.recip();
            binom_pow(x + b, y + 1, 1)? * (hn - &inv) + inv * binom_pow(x + a, y + 1, 1)?
        }
        (Family::F1, W1Sub::B) => {
            let inv = nonzero(y + 1, "y+1")?.recip();
            -(binom_pow(x + a, y + 1, 1)? * (hn - &inv)) - inv * binom_pow(x + b, y + 1, 1)?
        }
        (Family::F2, W1Sub::A) => {
            let inv = nonzero(x, "x")?.recip();
            sign_pow(b + 1) * binom_pow(x - 1, y + b - 1, 1)? * (hn + &inv)
                + sign_pow(a) * inv * binom_pow(x - 1, y + a - 1, 1)?
        }
        (Family::F2, W1Sub::B) => {
            let inv = nonzero(x, "x")?.recip();
            sign_pow(a) * binom_pow(x - 1, y + a - 1, 1)? * (hn + &inv)
                - sign_pow(b) * inv * binom_pow(x - 1, y + b - 1, 1)?
        }
        (Family::F3, W1Sub::A) => {
            let inv = nonzero(x + 2, "x+2")?.recip();
            let scale = rat_i64(x + 1) * &inv;
            scale.clone() * sign_pow(b + 1) * binom_pow(x + 1, y + b, -1)? * (hn - &inv)
                - scale * sign_pow(a) * inv * binom_pow(x + 1, y + a, -1)?
        }
        (Family::F3, W1Sub::B) => {
            let inv = nonzero(x + 2, "x+2")?.recip();
            let scale = rat_i64(x + 1) * &inv;
            scale.clone() * sign_pow(a) * binom_pow(x + 1, y + a, -1)? * (hn - &inv)
                + scale * sign_pow(b) * inv * binom_pow(x + 1, y + b, -1)?
        }
        (Family::F4, W1Sub::A) => {
            let inv = nonzero(x - y - 1, "x-y-1")?.recip();
            let scale = rat_i64(y + 1) * &inv;
            let bb = binom_pow(x, b, 1)? * binom_pow(y + 1, b, -1)?;
            let ba = binom_pow(x, a, 1)? * binom_pow(y + 1, a, -1)?;
            scale.clone() * bb * (hn + &inv) - scale * inv * ba
        }
        (Family::F4, W1Sub::B) => {
            let inv = nonzero(y - x + 1, "y-x+1")?.recip();
            let scale = rat_i64(y + 1) * &inv;
            let bb = binom_pow(x, b, 1)? * binom_pow(y + 1, b, -1)?;
            let ba = binom_pow(x, a, 1)? * binom_pow(y + 1, a, -1)?;
            scale.clone() * ba * (hn - &inv) + scale * inv * bb
        }
    };
    Ok((lhs, rhs))
}

fn trad_sides(which: u8, asg: &Assignment) -> EResult<(BigRational, BigRational)> {
    let n = int_sym(asg, "n")?;
    let nn = n as u64;
    let mut hs = Vec::with_capacity(nn as usize + 2);
    hs.push(BigRational::zero());
    let mut acc = BigRational::zero();
    for k in 1..=n + 1 {
        acc += rat(1, 1) / rat_i64(k);
        hs.push(acc.clone());
    }
    match which {
        1 => {
            let w = int_sym(asg, "w")?;
            let mut lhs = BigRational::zero();
            for k in 1..=n {
                lhs += (int_pow(k + 1, w)? - int_pow(k, w)?) * &hs[k as usize];
            }
            let rhs =
                int_pow(n + 1, w)? * &hs[n as usize + 1] - gen_harmonic_exact(0, nn + 1, 1 - w)?;
            Ok((lhs, rhs))
        }
        2 => {
            let m = int_sym(asg, "m")?;
            let mut lhs = BigRational::zero();
            for k in 0..=n {
                lhs += binomial_general(k, m) * &hs[k as usize];
            }
            let inv = nonzero(m + 1, "m+1")?.recip();
            let rhs = binomial_general(n + 1, m + 1) * (&hs[n as usize + 1] - &inv)
                + inv * binomial_general(0, m + 1);
            Ok((lhs, rhs))
        }
        3 => {
            let m = int_sym(asg, "m")?;
            let mut lhs = BigRational::zero();
            for k in 0..=n {
                lhs += binomial_general(m, n - k) * binom_pow(n, k, -1)? * &hs[k as usize];
            }
            let inv = nonzero(n - m + 1, "n-m+1")?.recip();
            let scale = rat_i64(n + 1) * &inv;
            let rhs = scale.clone() * &hs[n as usize + 1]
                + scale * inv * (binomial_general(m, n + 1) - rat_i64(1));
            Ok((lhs, rhs))
        }
        4 => {
            let m = int_sym(asg, "m")?;
            let mut lhs = BigRational::zero();
            for k in 0..=n {
                lhs += sign_pow(k) * binom_pow(m, k, -1)? * &hs[k as usize];
            }
            let inv = nonzero(m + 2, "m+2")?.recip();
            let scale = rat_i64(m + 1) * &inv;
            let rhs = scale.clone()
                * sign_pow(n)
                * binom_pow(m + 1, n + 1, -1)?
                * (&hs[n as usize + 1] - &inv)
                - scale * inv;
            Ok((lhs, rhs))
        }
        _ => unreachable!("traditional identities are numbered 1..=4"),
    }
}

fn pair_squares_sides(asg: &Assignment) -> EResult<Vec<(BigRational, BigRational)>> {
    let n = int_sym(asg, "n")?;
    let central = binomial_general(2 * n, n);
    let mut s1 = BigRational::zero();
    let mut s2 = BigRational::zero();
    for k in 0..=n {
        let b = binomial_general(n, k);
        let sq = &b * &b;
        s1 += &sq;
        s2 += rat_i64(k) * sq;
    }
    let rhs2 = rat(n, 2) * &central;
    Ok(vec![(s1, central), (s2, rhs2)])
}

fn pair_dixon_sides(asg: &Assignment) -> EResult<Vec<(BigRational, BigRational)>> {
    let n = int_sym(asg, "n")?;
    let base = binomial_general(2 * n, n) * binomial_general(3 * n, n);
    let mut s1 = BigRational::zero();
    let mut s2 = BigRational::zero();
    for k in 0..=2 * n {
        let b = binomial_general(2 * n, k);
        let cube = &b * &b * &b;
        s1 += sign_pow(k) * &cube;
        s2 += sign_pow(k) * rat_i64(k * (2 * n - k)) * cube;
    }
    let rhs1 = sign_pow(n) * &base;
    let rhs2 = sign_pow(n) * rat(4, 3) * rat_i64(n * n) * base;
    Ok(vec![(s1, rhs1), (s2, rhs2)])
}

/// Evaluate an identity exactly at an integer assignment.
pub fn evaluate(kind: EvalKind, asg: &Assignment) -> ExactOutcome {
    let result: EResult<Vec<(BigRational, BigRational)>> = match kind {
        EvalKind::Family(fam, variant) => FamilyInts::of(asg, true)
            .and_then(|f| family_sides(fam, variant, &f))
            .map(|p| vec![p]),
        EvalKind::W1(fam, sub) => FamilyInts::of(asg, false)
            .and_then(|f| w1_sides(fam, sub, &f))
            .map(|p| vec![p]),
        EvalKind::Trad(t) => trad_sides(t, asg).map(|p| vec![p]),
        EvalKind::PairSquares => pair_squares_sides(asg),
        EvalKind::PairDixon => pair_dixon_sides(asg),
        EvalKind::Fd(_) => Err(ExactError::NotExactlyEvaluable(
            "finite-difference specs have no exact mode".into(),
        )),
    };
    match result {
        Ok(sides) => ExactOutcome::Value(sides),
        Err(ExactError::SingularTerm { k }) => {
            ExactOutcome::Singular(format!("singular harmonic term at k = {k}"))
        }
        Err(ExactError::DivisionByZero(msg)) => ExactOutcome::Singular(msg),
        Err(ExactError::NotExactlyEvaluable(msg)) => ExactOutcome::NotCapable(msg),
        Err(ExactError::Domain(msg)) => ExactOutcome::NotCapable(msg),
    }
}
