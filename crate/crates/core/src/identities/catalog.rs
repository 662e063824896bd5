//! The identity registry: every verified equation as a spec with sampling
//! domains, guards, and supported modes.
//!
//! Naming: `H1(c,n)` is the order-1 offset harmonic number
//! `sum_{j=1..n} 1/(c+j)`; `H(m; c, n)` is the general-order form; `C(x,y)`
//! is the gamma-form binomial coefficient.

use super::{
    Bound, EvalKind, Family, FdKind, IdentitySpec, Mode, SymKind, SymbolSpec, Validity, Variant,
    W1Sub,
};

const XY: [f64; 4] = [-5.0, 5.0, -5.0, 5.0];
const MRECT: [f64; 4] = [-3.0, 3.0, -3.0, 3.0];
const WRECT: [f64; 4] = [-1.5, 1.5, -1.5, 1.5];

const NUMERIC_EXACT: &[Mode] = &[Mode::Numeric, Mode::Exact];
const FD_ONLY: &[Mode] = &[Mode::Fd];

const fn int_sym(name: &'static str, lo: i64, hi: i64) -> SymbolSpec {
    SymbolSpec {
        name,
        kind: SymKind::Integer,
        rect: None,
        int_lo: Bound::constant(lo),
        int_hi: Bound::constant(hi),
    }
}

const fn nonneg_sym(name: &'static str, lo: i64, hi: i64) -> SymbolSpec {
    SymbolSpec {
        name,
        kind: SymKind::NonNegInteger,
        rect: None,
        int_lo: Bound::constant(lo),
        int_hi: Bound::constant(hi),
    }
}

const fn complex_sym(
    name: &'static str,
    rect: [f64; 4],
    int_lo: Bound,
    int_hi: Bound,
) -> SymbolSpec {
    SymbolSpec {
        name,
        kind: SymKind::Complex,
        rect: Some(rect),
        int_lo,
        int_hi,
    }
}

const A_TERM: &[(&str, i64)] = &[("a", 1)];
const YA_TERM: &[(&str, i64)] = &[("y", 1), ("a", -1)];
const NEG_A: &[(&str, i64)] = &[("a", -1)];
const YB_TERM: &[(&str, i64)] = &[("y", 1), ("b", 1)];
const B_TERM: &[(&str, i64)] = &[("b", 1)];
const Y_TERM: &[(&str, i64)] = &[("y", 1)];
const N_TERM: &[(&str, i64)] = &[("n", 1)];

const fn b_after_a(lo: i64, hi: i64) -> SymbolSpec {
    SymbolSpec {
        name: "b",
        kind: SymKind::Integer,
        rect: None,
        int_lo: Bound {
            base: lo,
            terms: A_TERM,
        },
        int_hi: Bound {
            base: hi,
            terms: A_TERM,
        },
    }
}

const fn w_sym() -> SymbolSpec {
    complex_sym("w", WRECT, Bound::constant(1), Bound::constant(3))
}

const HRECT: [f64; 4] = [-1.0, 1.0, -1.0, 1.0];

const fn w_sym_narrow() -> SymbolSpec {
    complex_sym("w", HRECT, Bound::constant(1), Bound::constant(3))
}

// Draw order is declaration order; later bounds may reference earlier
// symbols. The integer bounds on complex symbols drive exact-mode draws and
// are chosen so the gamma-route evaluation stays off poles and inverted
// binomials stay nonzero on most draws.

const F1_GEN: &[SymbolSpec] = &[
    int_sym("a", -10, 10),
    b_after_a(0, 5),
    complex_sym("y", XY, Bound::constant(0), Bound::constant(5)),
    complex_sym(
        "x",
        XY,
        Bound {
            base: 1,
            terms: YA_TERM,
        },
        Bound {
            base: 8,
            terms: YA_TERM,
        },
    ),
    w_sym(),
];
const F1_HARM: &[SymbolSpec] = &[
    int_sym("a", -10, 10),
    b_after_a(0, 4),
    complex_sym("y", XY, Bound::constant(0), Bound::constant(5)),
    complex_sym(
        "x",
        XY,
        Bound {
            base: 1,
            terms: YA_TERM,
        },
        Bound {
            base: 8,
            terms: YA_TERM,
        },
    ),
    w_sym_narrow(),
];
const F1_W1: &[SymbolSpec] = &[
    int_sym("a", -10, 10),
    b_after_a(2, 7),
    complex_sym("y", XY, Bound::constant(0), Bound::constant(5)),
    complex_sym(
        "x",
        XY,
        Bound {
            base: 1,
            terms: YA_TERM,
        },
        Bound {
            base: 8,
            terms: YA_TERM,
        },
    ),
];

const F2_GEN: &[SymbolSpec] = &[
    int_sym("a", -10, 10),
    b_after_a(0, 5),
    complex_sym(
        "y",
        XY,
        Bound {
            base: 1,
            terms: NEG_A,
        },
        Bound {
            base: 7,
            terms: NEG_A,
        },
    ),
    complex_sym(
        "x",
        XY,
        Bound {
            base: 0,
            terms: YB_TERM,
        },
        Bound {
            base: 6,
            terms: YB_TERM,
        },
    ),
    w_sym(),
];
const F2_HARM: &[SymbolSpec] = &[
    int_sym("a", -10, 10),
    b_after_a(0, 4),
    complex_sym(
        "y",
        XY,
        Bound {
            base: 1,
            terms: NEG_A,
        },
        Bound {
            base: 7,
            terms: NEG_A,
        },
    ),
    complex_sym(
        "x",
        XY,
        Bound {
            base: 0,
            terms: YB_TERM,
        },
        Bound {
            base: 6,
            terms: YB_TERM,
        },
    ),
    w_sym_narrow(),
];
const F2_W1: &[SymbolSpec] = &[
    int_sym("a", -10, 10),
    b_after_a(2, 7),
    complex_sym(
        "y",
        XY,
        Bound {
            base: 1,
            terms: NEG_A,
        },
        Bound {
            base: 7,
            terms: NEG_A,
        },
    ),
    complex_sym(
        "x",
        XY,
        Bound {
            base: 0,
            terms: YB_TERM,
        },
        Bound {
            base: 6,
            terms: YB_TERM,
        },
    ),
];

const F3_GEN: &[SymbolSpec] = &[
    int_sym("a", -10, 10),
    b_after_a(0, 5),
    complex_sym(
        "y",
        XY,
        Bound {
            base: 0,
            terms: NEG_A,
        },
        Bound {
            base: 5,
            terms: NEG_A,
        },
    ),
    complex_sym(
        "x",
        XY,
        Bound {
            base: 0,
            terms: YB_TERM,
        },
        Bound {
            base: 6,
            terms: YB_TERM,
        },
    ),
    w_sym(),
];
const F3_HARM: &[SymbolSpec] = &[
    int_sym("a", -10, 10),
    b_after_a(0, 4),
    complex_sym(
        "y",
        XY,
        Bound {
            base: 0,
            terms: NEG_A,
        },
        Bound {
            base: 5,
            terms: NEG_A,
        },
    ),
    complex_sym(
        "x",
        XY,
        Bound {
            base: 0,
            terms: YB_TERM,
        },
        Bound {
            base: 6,
            terms: YB_TERM,
        },
    ),
    w_sym_narrow(),
];
const F3_W1: &[SymbolSpec] = &[
    int_sym("a", -10, 10),
    b_after_a(2, 7),
    complex_sym(
        "y",
        XY,
        Bound {
            base: 0,
            terms: NEG_A,
        },
        Bound {
            base: 5,
            terms: NEG_A,
        },
    ),
    complex_sym(
        "x",
        XY,
        Bound {
            base: 0,
            terms: YB_TERM,
        },
        Bound {
            base: 6,
            terms: YB_TERM,
        },
    ),
];

const F4_GEN: &[SymbolSpec] = &[
    int_sym("a", 0, 5),
    b_after_a(0, 5),
    complex_sym(
        "y",
        XY,
        Bound {
            base: -1,
            terms: B_TERM,
        },
        Bound {
            base: 5,
            terms: B_TERM,
        },
    ),
    complex_sym(
        "x",
        XY,
        Bound {
            base: 2,
            terms: Y_TERM,
        },
        Bound {
            base: 8,
            terms: Y_TERM,
        },
    ),
    w_sym(),
];
const F4_HARM: &[SymbolSpec] = &[
    int_sym("a", 0, 5),
    b_after_a(0, 4),
    complex_sym(
        "y",
        XY,
        Bound {
            base: -1,
            terms: B_TERM,
        },
        Bound {
            base: 5,
            terms: B_TERM,
        },
    ),
    complex_sym(
        "x",
        XY,
        Bound {
            base: 2,
            terms: Y_TERM,
        },
        Bound {
            base: 8,
            terms: Y_TERM,
        },
    ),
    w_sym_narrow(),
];
const F4_W1: &[SymbolSpec] = &[
    int_sym("a", 0, 5),
    b_after_a(2, 7),
    complex_sym(
        "y",
        XY,
        Bound {
            base: -1,
            terms: B_TERM,
        },
        Bound {
            base: 5,
            terms: B_TERM,
        },
    ),
    complex_sym(
        "x",
        XY,
        Bound {
            base: 2,
            terms: Y_TERM,
        },
        Bound {
            base: 8,
            terms: Y_TERM,
        },
    ),
];

const PAIR_SQUARES_SYMS: &[SymbolSpec] = &[nonneg_sym("n", 0, 30)];
const PAIR_DIXON_SYMS: &[SymbolSpec] = &[nonneg_sym("n", 0, 12)];

const TRAD1_SYMS: &[SymbolSpec] = &[nonneg_sym("n", 1, 30), w_sym()];
const TRAD2_SYMS: &[SymbolSpec] = &[
    nonneg_sym("n", 1, 30),
    complex_sym("m", XY, Bound::constant(0), Bound::constant(8)),
];
const TRAD3_SYMS: &[SymbolSpec] = &[
    nonneg_sym("n", 1, 30),
    complex_sym(
        "m",
        MRECT,
        Bound::constant(0),
        Bound {
            base: 0,
            terms: N_TERM,
        },
    ),
];
const TRAD4_SYMS: &[SymbolSpec] = &[
    nonneg_sym("n", 1, 30),
    complex_sym(
        "m",
        MRECT,
        Bound {
            base: 0,
            terms: N_TERM,
        },
        Bound {
            base: 8,
            terms: N_TERM,
        },
    ),
];

const FD_PRODUCT_SYMS: &[SymbolSpec] = &[
    int_sym("a", -5, 5),
    b_after_a(0, 5),
    complex_sym("x", XY, Bound::constant(0), Bound::constant(0)),
    w_sym(),
];
const FD_HARMONIC_SYMS: &[SymbolSpec] = &[
    nonneg_sym("n", 0, 20),
    complex_sym("x", XY, Bound::constant(0), Bound::constant(0)),
    complex_sym("y", XY, Bound::constant(0), Bound::constant(0)),
    complex_sym("m", WRECT, Bound::constant(1), Bound::constant(3)),
];
const FD_BINOMIAL_SYMS: &[SymbolSpec] = &[
    nonneg_sym("n", 0, 15),
    complex_sym("x", XY, Bound::constant(0), Bound::constant(0)),
    complex_sym("y", XY, Bound::constant(0), Bound::constant(0)),
    w_sym(),
];

const F1_GUARDS: &[&str] = &[
    "|y+1| >= 1e-6",
    "linear factors (x+k+1), (x-y+k) nonzero",
    "anchor gamma arguments off nonpositive integers",
];
const F2_GUARDS: &[&str] = &[
    "|x| >= 1e-6",
    "linear factors (y-x+k), (y+k) nonzero",
    "anchor gamma arguments off nonpositive integers",
];
const F3_GUARDS: &[&str] = &[
    "|x+1| >= 1e-6",
    "linear factors (-y-k-1), (x-y-k+1) nonzero",
    "anchor gamma arguments off nonpositive integers",
];
const F4_GUARDS: &[&str] = &[
    "|y+1| >= 1e-6",
    "linear factors (x-k), (y-k+1) nonzero",
    "anchor gamma arguments off nonpositive integers",
];
const H_GUARD: &str = "harmonic denominators c+j nonzero";
const F1_H_GUARDS: &[&str] = &[F1_GUARDS[0], F1_GUARDS[1], F1_GUARDS[2], H_GUARD];
const F2_H_GUARDS: &[&str] = &[F2_GUARDS[0], F2_GUARDS[1], F2_GUARDS[2], H_GUARD];
const F3_H_GUARDS: &[&str] = &[F3_GUARDS[0], F3_GUARDS[1], F3_GUARDS[2], H_GUARD];
const F4_H_GUARDS: &[&str] = &[F4_GUARDS[0], F4_GUARDS[1], F4_GUARDS[2], H_GUARD];

static REGISTRY: [IdentitySpec; 29] = [
    IdentitySpec {
        id: "eq08_binomial1",
        aliases: &["eq08", "binomial1"],
        summary: "binomial sum, family 1, complex exponent",
        formula: "sum_{k=a}^{b-1} [(x+k+1)^w - (x-y+k)^w] C(x+k,y)^w = (y+1)^w [C(x+b,y+1)^w - C(x+a,y+1)^w]",
        symbols: F1_GEN,
        guards: F1_GUARDS,
        modes: NUMERIC_EXACT,
        validity: Validity::ProvedGeneral,
        kind: EvalKind::Family(Family::F1, Variant::General),
    },
    IdentitySpec {
        id: "eq09_binomial2",
        aliases: &["eq09", "binomial2"],
        summary: "alternating binomial sum, family 2, complex exponent",
        formula: "sum_{k=a}^{b-1} [(y-x+k)^w - (y+k)^w] (-1)^{wk} C(x,y+k)^w = x^w [(-1)^{wb} C(x-1,y+b-1)^w - (-1)^{wa} C(x-1,y+a-1)^w]",
        symbols: F2_GEN,
        guards: F2_GUARDS,
        modes: NUMERIC_EXACT,
        validity: Validity::ProvedGeneral,
        kind: EvalKind::Family(Family::F2, Variant::General),
    },
    IdentitySpec {
        id: "eq10_binomial3",
        aliases: &["eq10", "binomial3"],
        summary: "alternating reciprocal-binomial sum, family 3, complex exponent",
        formula: "sum_{k=a}^{b-1} [(-y-k-1)^w - (x-y-k+1)^w] (-1)^{wk} C(x,y+k)^{-w} = (x+1)^w [(-1)^{wb} C(x+1,y+b)^{-w} - (-1)^{wa} C(x+1,y+a)^{-w}]",
        symbols: F3_GEN,
        guards: F3_GUARDS,
        modes: NUMERIC_EXACT,
        validity: Validity::ProvedGeneral,
        kind: EvalKind::Family(Family::F3, Variant::General),
    },
    IdentitySpec {
        id: "eq11_binomial4",
        aliases: &["eq11", "binomial4"],
        summary: "binomial-ratio sum, family 4, complex exponent",
        formula: "sum_{k=a}^{b-1} [(x-k)^w - (y-k+1)^w] C(x,k)^w C(y,k)^{-w} = (y+1)^w [C(x,b)^w C(y+1,b)^{-w} - C(x,a)^w C(y+1,a)^{-w}]",
        symbols: F4_GEN,
        guards: F4_GUARDS,
        modes: NUMERIC_EXACT,
        validity: Validity::ProvedGeneral,
        kind: EvalKind::Family(Family::F4, Variant::General),
    },
    IdentitySpec {
        id: "eq12_13_squares",
        aliases: &["eq12", "eq13"],
        summary: "squared-binomial sum and its first moment (one swept pair)",
        formula: "sum_k C(n,k)^2 = C(2n,n)  and  sum_k k C(n,k)^2 = (n/2) C(2n,n)",
        symbols: PAIR_SQUARES_SYMS,
        guards: &[],
        modes: NUMERIC_EXACT,
        validity: Validity::ProvedGeneral,
        kind: EvalKind::PairSquares,
    },
    IdentitySpec {
        id: "eq14_15_dixon",
        aliases: &["eq14", "eq15"],
        summary: "alternating cubed-binomial sum and its weighted companion (one swept pair)",
        formula: "sum_k (-1)^k C(2n,k)^3 = (-1)^n C(2n,n) C(3n,n)  and  sum_k (-1)^k k(2n-k) C(2n,k)^3 = (-1)^n (4/3) n^2 C(2n,n) C(3n,n)",
        symbols: PAIR_DIXON_SYMS,
        guards: &[],
        modes: NUMERIC_EXACT,
        validity: Validity::ProvedGeneral,
        kind: EvalKind::PairDixon,
    },
    IdentitySpec {
        id: "eq22_harmonic1a",
        aliases: &["eq22", "harmonic1a"],
        summary: "family 1 with offset-harmonic weights, x-derivative form",
        formula: "sum_{k=a}^{b-1} [(x+k+1)^w H1(x+a,k-a+1) - (x-y+k)^w H1(x+a,k-a)] C(x+k,y)^w = (y+1)^w C(x+b,y+1)^w H1(x+a,b-a)",
        symbols: F1_HARM,
        guards: F1_H_GUARDS,
        modes: NUMERIC_EXACT,
        validity: Validity::ProvedGeneral,
        kind: EvalKind::Family(Family::F1, Variant::HarmonicA),
    },
    IdentitySpec {
        id: "eq23_harmonic1b",
        aliases: &["eq23", "harmonic1b"],
        summary: "family 1 with offset-harmonic weights, y-derivative form",
        formula: "sum_{k=a}^{b-1} [(x+k+1)^w H1(y-x-b,b-k-1) - (x-y+k)^w H1(y-x-b,b-k)] C(x+k,y)^w = -(y+1)^w C(x+a,y+1)^w H1(y-x-b,b-a)",
        symbols: F1_HARM,
        guards: F1_H_GUARDS,
        modes: NUMERIC_EXACT,
        validity: Validity::ProvedGeneral,
        kind: EvalKind::Family(Family::F1, Variant::HarmonicB),
    },
    IdentitySpec {
        id: "eq24_harmonic2a",
        aliases: &["eq24", "harmonic2a"],
        summary: "family 2 with offset-harmonic weights, x-derivative form",
        formula: "sum_{k=a}^{b-1} [(y-x+k)^w H1(y-x+a-1,k-a+1) - (y+k)^w H1(y-x+a-1,k-a)] (-1)^{wk} C(x,y+k)^w = x^w (-1)^{wb} C(x-1,y+b-1)^w H1(y-x+a-1,b-a)",
        symbols: F2_HARM,
        guards: F2_H_GUARDS,
        modes: NUMERIC_EXACT,
        validity: Validity::ProvedGeneral,
        kind: EvalKind::Family(Family::F2, Variant::HarmonicA),
    },
    IdentitySpec {
        id: "eq25_harmonic2b",
        aliases: &["eq25", "harmonic2b"],
        summary: "family 2 with offset-harmonic weights, y-derivative form",
        formula: "sum_{k=a}^{b-1} [(y-x+k)^w H1(-y-b,b-k-1) - (y+k)^w H1(-y-b,b-k)] (-1)^{wk} C(x,y+k)^w = -x^w (-1)^{wa} C(x-1,y+a-1)^w H1(-y-b,b-a)",
        symbols: F2_HARM,
        guards: F2_H_GUARDS,
        modes: NUMERIC_EXACT,
        validity: Validity::ProvedGeneral,
        kind: EvalKind::Family(Family::F2, Variant::HarmonicB),
    },
    IdentitySpec {
        id: "eq26_harmonic3a",
        aliases: &["eq26", "harmonic3a"],
        summary: "family 3 with offset-harmonic weights, x-derivative form",
        formula: "sum_{k=a}^{b-1} [(-y-k-1)^w H1(y+a,k-a+1) - (x-y-k+1)^w H1(y+a,k-a)] (-1)^{wk} C(x,y+k)^{-w} = (x+1)^w (-1)^{wb} C(x+1,y+b)^{-w} H1(y+a,b-a)",
        symbols: F3_HARM,
        guards: F3_H_GUARDS,
        modes: NUMERIC_EXACT,
        validity: Validity::ProvedGeneral,
        kind: EvalKind::Family(Family::F3, Variant::HarmonicA),
    },
    IdentitySpec {
        id: "eq27_harmonic3b",
        aliases: &["eq27", "harmonic3b"],
        summary: "family 3 with offset-harmonic weights, y-derivative form",
        formula: "sum_{k=a}^{b-1} [(-y-k-1)^w H1(x-y-b+1,b-k-1) - (x-y-k+1)^w H1(x-y-b+1,b-k)] (-1)^{wk} C(x,y+k)^{-w} = -(x+1)^w (-1)^{wa} C(x+1,y+a)^{-w} H1(x-y-b+1,b-a)",
        symbols: F3_HARM,
        guards: F3_H_GUARDS,
        modes: NUMERIC_EXACT,
        validity: Validity::ProvedGeneral,
        kind: EvalKind::Family(Family::F3, Variant::HarmonicB),
    },
    IdentitySpec {
        id: "eq28_harmonic4a",
        aliases: &["eq28", "harmonic4a"],
        summary: "family 4 with offset-harmonic weights, x-derivative form",
        formula: "sum_{k=a}^{b-1} [(x-k)^w H1(a-x-1,k-a+1) - (y-k+1)^w H1(a-x-1,k-a)] C(x,k)^w C(y,k)^{-w} = (y+1)^w C(x,b)^w C(y+1,b)^{-w} H1(a-x-1,b-a)",
        symbols: F4_HARM,
        guards: F4_H_GUARDS,
        modes: NUMERIC_EXACT,
        validity: Validity::ProvedGeneral,
        kind: EvalKind::Family(Family::F4, Variant::HarmonicA),
    },
    IdentitySpec {
        id: "eq29_harmonic4b",
        aliases: &["eq29", "harmonic4b"],
        summary: "family 4 with offset-harmonic weights, y-derivative form",
        formula: "sum_{k=a}^{b-1} [(x-k)^w H1(y-b+1,b-k-1) - (y-k+1)^w H1(y-b+1,b-k)] C(x,k)^w C(y,k)^{-w} = -(y+1)^w C(x,a)^w C(y+1,a)^{-w} H1(y-b+1,b-a)",
        symbols: F4_HARM,
        guards: F4_H_GUARDS,
        modes: NUMERIC_EXACT,
        validity: Validity::ProvedGeneral,
        kind: EvalKind::Family(Family::F4, Variant::HarmonicB),
    },
    IdentitySpec {
        id: "eq30_harmonic1aw1",
        aliases: &["eq30", "harmonic1aw1"],
        summary: "unit-exponent reduction of the family 1 x-derivative form",
        formula: "sum_{k=a}^{b-1} C(x+k,y) H1(x+a,k-a) = C(x+b,y+1)(H1(x+a,b-a) - 1/(y+1)) + C(x+a,y+1)/(y+1)",
        symbols: F1_W1,
        guards: &["|y+1| >= 1e-6", "binomial gamma arguments off nonpositive integers", "harmonic denominators nonzero"],
        modes: NUMERIC_EXACT,
        validity: Validity::ProvedGeneral,
        kind: EvalKind::W1(Family::F1, W1Sub::A),
    },
    IdentitySpec {
        id: "eq31_harmonic1bw1",
        aliases: &["eq31", "harmonic1bw1"],
        summary: "unit-exponent reduction of the family 1 y-derivative form",
        formula: "sum_{k=a}^{b-1} C(x+k,y) H1(y-x-b,b-k-1) = -C(x+a,y+1)(H1(y-x-b,b-a) - 1/(y+1)) - C(x+b,y+1)/(y+1)",
        symbols: F1_W1,
        guards: &["|y+1| >= 1e-6", "binomial gamma arguments off nonpositive integers", "harmonic denominators nonzero"],
        modes: NUMERIC_EXACT,
        validity: Validity::ProvedGeneral,
        kind: EvalKind::W1(Family::F1, W1Sub::B),
    },
    IdentitySpec {
        id: "eq32_harmonic2aw1",
        aliases: &["eq32", "harmonic2aw1"],
        summary: "unit-exponent reduction of the family 2 x-derivative form",
        formula: "sum_{k=a}^{b-1} (-1)^k C(x,y+k) H1(y-x+a-1,k-a) = (-1)^{b+1} C(x-1,y+b-1)(H1(y-x+a-1,b-a) + 1/x) + (-1)^a C(x-1,y+a-1)/x",
        symbols: F2_W1,
        guards: &["|x| >= 1e-6", "binomial gamma arguments off nonpositive integers", "harmonic denominators nonzero"],
        modes: NUMERIC_EXACT,
        validity: Validity::ProvedGeneral,
        kind: EvalKind::W1(Family::F2, W1Sub::A),
    },
    IdentitySpec {
        id: "eq33_harmonic2bw1",
        aliases: &["eq33", "harmonic2bw1"],
        summary: "unit-exponent reduction of the family 2 y-derivative form",
        formula: "sum_{k=a}^{b-1} (-1)^k C(x,y+k) H1(-y-b,b-k-1) = (-1)^a C(x-1,y+a-1)(H1(-y-b,b-a) + 1/x) - (-1)^b C(x-1,y+b-1)/x",
        symbols: F2_W1,
        guards: &["|x| >= 1e-6", "binomial gamma arguments off nonpositive integers", "harmonic denominators nonzero"],
        modes: NUMERIC_EXACT,
        validity: Validity::ProvedGeneral,
        kind: EvalKind::W1(Family::F2, W1Sub::B),
    },
    IdentitySpec {
        id: "eq34_harmonic3aw1",
        aliases: &["eq34", "harmonic3aw1"],
        summary: "unit-exponent reduction of the family 3 x-derivative form",
        formula: "sum_{k=a}^{b-1} (-1)^k C(x,y+k)^{-1} H1(y+a,k-a) = (x+1)/(x+2) [(-1)^{b+1} C(x+1,y+b)^{-1}(H1(y+a,b-a) - 1/(x+2)) - (-1)^a C(x+1,y+a)^{-1}/(x+2)]",
        symbols: F3_W1,
        guards: &["|x+2| >= 1e-6", "inverted binomials nonzero", "harmonic denominators nonzero"],
        modes: NUMERIC_EXACT,
        validity: Validity::ProvedGeneral,
        kind: EvalKind::W1(Family::F3, W1Sub::A),
    },
    IdentitySpec {
        id: "eq35_harmonic3bw1",
        aliases: &["eq35", "harmonic3bw1"],
        summary: "unit-exponent reduction of the family 3 y-derivative form",
        formula: "sum_{k=a}^{b-1} (-1)^k C(x,y+k)^{-1} H1(x-y-b+1,b-k-1) = (x+1)/(x+2) [(-1)^a C(x+1,y+a)^{-1}(H1(x-y-b+1,b-a) - 1/(x+2)) + (-1)^b C(x+1,y+b)^{-1}/(x+2)]",
        symbols: F3_W1,
        guards: &["|x+2| >= 1e-6", "inverted binomials nonzero", "harmonic denominators nonzero"],
        modes: NUMERIC_EXACT,
        validity: Validity::ProvedGeneral,
        kind: EvalKind::W1(Family::F3, W1Sub::B),
    },
    IdentitySpec {
        id: "eq36_harmonic4aw1",
        aliases: &["eq36", "harmonic4aw1"],
        summary: "unit-exponent reduction of the family 4 x-derivative form",
        formula: "sum_{k=a}^{b-1} C(x,k) C(y,k)^{-1} H1(a-x-1,k-a) = (y+1)/(x-y-1) [C(x,b) C(y+1,b)^{-1}(H1(a-x-1,b-a) + 1/(x-y-1)) - C(x,a) C(y+1,a)^{-1}/(x-y-1)]",
        symbols: F4_W1,
        guards: &["|x-y-1| >= 1e-6", "inverted binomials nonzero", "harmonic denominators nonzero"],
        modes: NUMERIC_EXACT,
        validity: Validity::ProvedGeneral,
        kind: EvalKind::W1(Family::F4, W1Sub::A),
    },
    IdentitySpec {
        id: "eq37_harmonic4bw1",
        aliases: &["eq37", "harmonic4bw1"],
        summary: "unit-exponent reduction of the family 4 y-derivative form",
        formula: "sum_{k=a}^{b-1} C(x,k) C(y,k)^{-1} H1(y-b+1,b-k-1) = (y+1)/(y-x+1) [C(x,a) C(y+1,a)^{-1}(H1(y-b+1,b-a) - 1/(y-x+1)) + C(x,b) C(y+1,b)^{-1}/(y-x+1)]",
        symbols: F4_W1,
        guards: &["|y-x+1| >= 1e-6", "inverted binomials nonzero", "harmonic denominators nonzero"],
        modes: NUMERIC_EXACT,
        validity: Validity::ProvedGeneral,
        kind: EvalKind::W1(Family::F4, W1Sub::B),
    },
    IdentitySpec {
        id: "eq38_harmonictrad1",
        aliases: &["eq38", "harmonictrad1"],
        summary: "polynomial-weight harmonic sum with a general-order closure",
        formula: "sum_{k=0}^{n} [(k+1)^w - k^w] H_k = (n+1)^w H_{n+1} - H(1-w; 0, n+1)",
        symbols: TRAD1_SYMS,
        guards: &[],
        modes: NUMERIC_EXACT,
        validity: Validity::ProvedGeneral,
        kind: EvalKind::Trad(1),
    },
    IdentitySpec {
        id: "eq39_harmonictrad2",
        aliases: &["eq39", "harmonictrad2"],
        summary: "binomial-weighted harmonic sum, complex column index",
        formula: "sum_{k=0}^{n} C(k,m) H_k = C(n+1,m+1)(H_{n+1} - 1/(m+1)) + C(0,m+1)/(m+1)",
        symbols: TRAD2_SYMS,
        guards: &["|m+1| >= 1e-6"],
        modes: NUMERIC_EXACT,
        validity: Validity::ProvedGeneral,
        kind: EvalKind::Trad(2),
    },
    IdentitySpec {
        id: "eq40_harmonictrad3",
        aliases: &["eq40", "harmonictrad3"],
        summary: "reversed binomial ratio against harmonic weights",
        formula: "sum_{k=0}^{n} C(m,n-k) C(n,k)^{-1} H_k = (n+1)/(n-m+1) [H_{n+1} + (C(m,n+1)-1)/(n-m+1)]",
        symbols: TRAD3_SYMS,
        guards: &["|n-m+1| >= 1e-6", "gamma argument m+1 off nonpositive integers"],
        modes: NUMERIC_EXACT,
        validity: Validity::ProvedGeneral,
        kind: EvalKind::Trad(3),
    },
    IdentitySpec {
        id: "eq41_harmonictrad4",
        aliases: &["eq41", "harmonictrad4"],
        summary: "alternating reciprocal-binomial harmonic sum",
        formula: "sum_{k=0}^{n} (-1)^k C(m,k)^{-1} H_k = (m+1)/(m+2) [(-1)^n C(m+1,n+1)^{-1}(H_{n+1} - 1/(m+2)) - 1/(m+2)]",
        symbols: TRAD4_SYMS,
        guards: &["|m+2| >= 1e-6", "inverted binomials nonzero"],
        modes: NUMERIC_EXACT,
        validity: Validity::ProvedGeneral,
        kind: EvalKind::Trad(4),
    },
    IdentitySpec {
        id: "fd_eq21",
        aliases: &["eq21", "fd_product"],
        summary: "derivative of a falling-product power is harmonic-weighted (two equivalent right sides)",
        formula: "d/dx prod_{k=a}^{b-1} (x-k)^w = w H1(x-b,b-a) prod_{k=a}^{b-1} (x-k)^w = -w H1(a-x-1,b-a) prod_{k=a}^{b-1} (x-k)^w",
        symbols: FD_PRODUCT_SYMS,
        guards: &["|x-k| >= 1e-3 for k in a..b"],
        modes: FD_ONLY,
        validity: Validity::ProvedGeneral,
        kind: EvalKind::Fd(FdKind::ProductLog),
    },
    IdentitySpec {
        id: "fd_harmonic_order",
        aliases: &["fd_dh"],
        summary: "derivative of a generalized harmonic number raises the order",
        formula: "d/dx H(m; x+y, n) = -m H(m+1; x+y, n)",
        symbols: FD_HARMONIC_SYMS,
        guards: &["|x+y+k| >= 1e-3 for k in 1..=n"],
        modes: FD_ONLY,
        validity: Validity::ProvedGeneral,
        kind: EvalKind::Fd(FdKind::HarmonicOrder),
    },
    IdentitySpec {
        id: "fd_binomial_power",
        aliases: &["fd_dbinom"],
        summary: "derivative of a binomial power is harmonic-weighted",
        formula: "d/dx C(x+y,n)^w = w H1(x+y-n,n) C(x+y,n)^w",
        symbols: FD_BINOMIAL_SYMS,
        guards: &["gamma arguments off nonpositive integers", "|x+y-n+j| >= 1e-3"],
        modes: FD_ONLY,
        validity: Validity::ProvedGeneral,
        kind: EvalKind::Fd(FdKind::BinomialPower),
    },
];

/// The full registry: 4 general-exponent binomial identities, the two
/// fixed-instance pairs, 8 harmonic-weighted identities, their 8
/// unit-exponent reductions, 4 traditional-harmonic identities, and 3
/// finite-difference derivative relations.
pub fn build_registry() -> &'static [IdentitySpec] {
    &REGISTRY
}
