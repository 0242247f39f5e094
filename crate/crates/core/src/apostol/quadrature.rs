use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{PolyQ, Rat, RatFunc};

/// Gauss-Kronrod 7/15 abscissae on [-1, 1] (non-negative half, centre last).
const XGK: [f64; 8] = [
    0.991_455_371_120_812_6,
    0.949_107_912_342_758_5,
    0.864_864_423_359_769_1,
    0.741_531_185_599_394_4,
    0.586_087_235_467_691_1,
    0.405_845_151_377_397_2,
    0.207_784_955_007_898_5,
    0.0,
];
const WGK: [f64; 8] = [
    0.022_935_322_010_529_22,
    0.063_092_092_629_978_55,
    0.104_790_010_322_250_2,
    0.140_653_259_715_525_9,
    0.169_004_726_639_267_9,
    0.190_350_578_064_785_4,
    0.204_432_940_075_298_9,
    0.209_482_141_084_727_8,
];
/// Gauss 7-point weights for the odd-indexed Kronrod nodes (1, 3, 5) and the centre.
const WG: [f64; 4] = [
    0.129_484_966_168_869_7,
    0.279_705_391_489_276_7,
    0.381_830_050_505_118_9,
    0.417_959_183_673_469_4,
];

const MAX_DEPTH: u32 = 60;

/// Numerically integrates `f` over `(-inf, 0]`.
///
/// The substitution `λ = -t/(1-t)` maps `t ∈ [0, 1)` onto the half line and is
/// applied exactly, giving a rational integrand `g(t)` that stays bounded at
/// `t = 1` when `f` decays like `1/λ^2`. `g` is then integrated with adaptive
/// Gauss-Kronrod 7/15 until the summed error estimate is below `tol`.
pub fn improper_quadrature_oracle(f: &RatFunc, tol: f64) -> Result<f64> {
    if f.is_zero() {
        return Ok(0.0);
    }
    let num = f.numerator();
    let den = f.denominator();
    let dn = num.degree().expect("nonzero numerator");
    let dd = den.degree().expect("nonzero denominator");
    if dd < dn + 2 {
        return Err(Error::InsufficientDecay);
    }
    let p = compactify(num);
    let q = compactify(den);
    if has_root_in_unit_interval(&q) {
        return Err(Error::PoleOnDomain);
    }
    let one_minus_t = PolyQ::linear(-Rat::one(), Rat::one());
    let top = &p * &one_minus_t.pow((dd - dn - 2) as u32);
    let top = to_f64(&top);
    let bottom = to_f64(&q);
    let g = |t: f64| horner(&top, t) / horner(&bottom, t);

    let mut total = 0.0;
    let mut stack = vec![(0.0f64, 1.0f64, 0u32)];
    while let Some((a, b, depth)) = stack.pop() {
        let (kronrod, err) = gk15(&g, a, b);
        // local budget proportional to interval width
        if err <= 0.5 * tol * (b - a) || err < f64::EPSILON * kronrod.abs() {
            total += kronrod;
        } else if depth >= MAX_DEPTH {
            return Err(Error::NoConvergence(tol));
        } else {
            let mid = 0.5 * (a + b);
            stack.push((a, mid, depth + 1));
            stack.push((mid, b, depth + 1));
        }
    }
    Ok(total)
}

/// `(1-t)^d · p(-t/(1-t))` with `d = deg p`.
fn compactify(p: &PolyQ) -> PolyQ {
    let d = p.degree().unwrap_or(0);
    let minus_t = PolyQ::monomial(-Rat::one(), 1);
    let one_minus_t = PolyQ::linear(-Rat::one(), Rat::one());
    let mut out = PolyQ::zero();
    for (i, c) in p.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let term = &minus_t.pow(i as u32) * &one_minus_t.pow((d - i) as u32);
        out = &out + &term.scale(c);
    }
    out
}

/// Whether `q` vanishes somewhere in `[0, 1]`, by an exact Sturm sequence.
fn has_root_in_unit_interval(q: &PolyQ) -> bool {
    let (zero, one) = (Rat::zero(), Rat::one());
    if q.eval(&zero).is_zero() || q.eval(&one).is_zero() {
        return true;
    }
    if q.degree().unwrap_or(0) == 0 {
        return false;
    }
    let mut seq = vec![q.clone(), q.derivative()];
    loop {
        let n = seq.len();
        let (_, r) = seq[n - 2].div_rem(&seq[n - 1]).expect("nonzero divisor");
        if r.is_zero() {
            break;
        }
        seq.push(-&r);
    }
    let changes = |x: &Rat| {
        let signs: Vec<bool> = seq
            .iter()
            .map(|s| s.eval(x))
            .filter(|v| !v.is_zero())
            .map(|v| v.is_negative())
            .collect();
        signs.windows(2).filter(|w| w[0] != w[1]).count()
    };
    changes(&zero) != changes(&one)
}

fn to_f64(p: &PolyQ) -> Vec<f64> {
    p.coeffs().iter().map(Rat::to_f64).collect()
}

fn horner(cs: &[f64], t: f64) -> f64 {
    cs.iter().rev().fold(0.0, |acc, c| acc * t + c)
}

/// Kronrod 15-point estimate on `[a, b]` and `|K15 - G7|`.
fn gk15(f: &impl Fn(f64) -> f64, a: f64, b: f64) -> (f64, f64) {
    let centre = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let fc = f(centre);
    let mut kronrod = fc * WGK[7];
    let mut gauss = fc * WG[3];
    for j in 0..7 {
        let dx = half * XGK[j];
        let pair = f(centre - dx) + f(centre + dx);
        kronrod += WGK[j] * pair;
        if j % 2 == 1 {
            gauss += WG[j / 2] * pair;
        }
    }
    (kronrod * half, ((kronrod - gauss) * half).abs())
}
