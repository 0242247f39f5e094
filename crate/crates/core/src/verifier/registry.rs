use std::fmt::Display;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::grid::{lambda_grid, y_grid};
use super::{Anchor, Bounds, Case, Outcome, Params, RegistryEntry, Witness};
use crate::apostol::{
    apostol_bernoulli, apostol_explicit_guoqi, apostol_explicit_split, apostol_moment_integral,
    apostol_product_integral, apostol_sum_of_products, apostol_via_fubini, guoqi_expression,
    improper_quadrature_oracle, moment_integral_by_substitution, moment_integrand,
    pole_order_at_one, product_integral_by_substitution, product_integrand,
};
use crate::bernoulli::{
    bernoulli_via_integral, double_sum_identity, fubini_moment_integral, fubini_moment_parity,
    fubini_product_integral, p_bernoulli, p_bernoulli_even_explicit, p_bernoulli_odd_explicit,
    p_bernoulli_shifted_relation, product_integral_formula,
};
use crate::combinatorics::{
    binomial, factorial, lemma2_lhs, stirling2, stirling_cross_identity, stirling_cross_swapped,
    stirling_inverse_entry,
};
use crate::error::{Error, Result};
use crate::exact::{BiPolyZ, Poly, PolyQ, PolyZ, Rat};
use crate::fubini::{
    fubini_explicit_reflection, fubini_explicit_split, fubini_explicit_split_poly, fubini_number,
    fubini_number_bruteforce, fubini_number_split, fubini_number_split_neg2, fubini_poly,
    fubini_poly_recurrence, fubini_two_var, geometric_moment_limit, geometric_moment_partial_sum,
    ordered_partition_counts, DEFAULT_ENUMERATION_CAP,
};

/// Terms of the truncated series used by the registry's series entry.
pub(crate) const SERIES_TERMS: usize = 160;
pub(crate) const SERIES_TOLERANCE: f64 = 1e-12;
pub(crate) const QUADRATURE_TOLERANCE: f64 = 1e-9;

fn exact<T: Display + PartialEq>(lhs: T, rhs: T) -> Outcome {
    Outcome::Compared {
        pass: lhs == rhs,
        lhs: lhs.to_string(),
        rhs: rhs.to_string(),
    }
}

fn failed(e: Error) -> Outcome {
    Outcome::Compared {
        lhs: format!("error: {e}"),
        rhs: String::new(),
        pass: false,
    }
}

/// Both sides from a fallible pair; a precondition error means the point was
/// outside the identity's domain.
fn pair<T: Display + PartialEq>(r: Result<(T, T)>) -> Outcome {
    match r {
        Ok((l, r)) => exact(l, r),
        Err(Error::Precondition { .. }) => Outcome::Skipped,
        Err(e) => failed(e),
    }
}

fn both<T: Display + PartialEq>(l: Result<T>, r: Result<T>) -> Outcome {
    pair(l.and_then(|l| r.map(|r| (l, r))))
}

fn tolerance(t: f64) -> Rat {
    // decimal literal with a power-of-ten denominator, e.g. 1e-12
    let digits = (-t.log10()).round() as u32;
    Rat::new(1, BigInt::from(10u32).pow(digits)).expect("positive")
}

fn f(n: usize) -> PolyZ {
    fubini_poly(n).into_poly()
}

fn fz(n: usize) -> BigInt {
    fubini_number(n)
}

fn fy(n: usize, y: &Rat) -> Rat {
    fubini_poly(n).eval(y)
}

fn sign(k: usize) -> BigInt {
    if k.is_multiple_of(2) {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

fn x_pow(n: usize) -> BiPolyZ {
    let mut rows = vec![PolyZ::zero(); n + 1];
    rows[n] = PolyZ::one();
    BiPolyZ::from_rows(rows)
}

fn d_dx(p: &BiPolyZ) -> BiPolyZ {
    BiPolyZ::from_rows(
        p.rows()
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, r)| r.scale(&BigInt::from(i)))
            .collect(),
    )
}

fn one_plus_y() -> PolyZ {
    PolyZ::linear(BigInt::one(), BigInt::one())
}

/// `B_0..B_n` from `sum_{k=0}^{n} C(n+1,k) B_k = 0`, independent of the
/// Stirling construction.
fn bernoulli_recurrence(n: usize) -> Vec<Rat> {
    let mut b = vec![Rat::one()];
    for i in 1..=n {
        let s: Rat = (0..i).map(|k| Rat::from(binomial(i + 1, k)) * &b[k]).sum();
        b.push(-s.checked_div(&Rat::int(i as i64 + 1)).expect("nonzero"));
    }
    b
}

// ---------------------------------------------------------------- grids

fn over_n(
    from: usize,
    b: &Bounds,
    f: impl Fn(usize) -> Outcome + Send + Sync + Copy + 'static,
) -> Vec<Case> {
    (from..=b.n())
        .map(|n| Case::new(Params::new().with("n", n), move |_| f(n)))
        .collect()
}

fn over_n_y(
    from: usize,
    b: &Bounds,
    f: impl Fn(usize, &Rat) -> Outcome + Send + Sync + Copy + 'static,
) -> Vec<Case> {
    let ys = y_grid(b.samples());
    let mut out = Vec::new();
    for n in from..=b.n() {
        for y in &ys {
            let y2 = y.clone();
            out.push(Case::new(
                Params::new().with("n", n).with("y", y),
                move |_| f(n, &y2),
            ));
        }
    }
    out
}

fn over_n_lambda(
    from: usize,
    b: &Bounds,
    f: impl Fn(usize, &Rat) -> Outcome + Send + Sync + Copy + 'static,
) -> Vec<Case> {
    let ls = lambda_grid(b.samples());
    let mut out = Vec::new();
    for n in from..=b.n() {
        for l in &ls {
            let l2 = l.clone();
            out.push(Case::new(
                Params::new().with("n", n).with("lambda", l),
                move |_| f(n, &l2),
            ));
        }
    }
    out
}

fn over_pairs(
    a: (&'static str, usize, usize),
    b: (&'static str, usize, usize),
    f: impl Fn(usize, usize) -> Outcome + Send + Sync + Copy + 'static,
) -> Vec<Case> {
    let mut out = Vec::new();
    for i in a.1..=a.2 {
        for j in b.1..=b.2 {
            out.push(Case::new(
                Params::new().with(a.0, i).with(b.0, j),
                move |_| f(i, j),
            ));
        }
    }
    out
}

// ---------------------------------------------------------------- Fubini

fn eq1_series(b: &Bounds) -> Vec<Case> {
    let tol = tolerance(SERIES_TOLERANCE);
    (0..=b.n())
        .map(|n| {
            let tol = tol.clone();
            let params = Params::new().with("n", n).with("terms", SERIES_TERMS);
            Case::new(params, move |_| {
                let half = Rat::frac(1, 2);
                let partial = geometric_moment_partial_sum(n, &half, SERIES_TERMS);
                let limit = Ok(Rat::from(fz(n) * 2));
                match partial.and_then(|p| limit.map(|l| (p, l))) {
                    Ok((p, l)) => Outcome::Compared {
                        pass: (&p - &l).abs() <= tol,
                        lhs: p.to_string(),
                        rhs: l.to_string(),
                    },
                    Err(e) => failed(e),
                }
            })
        })
        .collect()
}

fn eq2_block_counts(b: &Bounds) -> Vec<Case> {
    over_n(0, b, |n| {
        match ordered_partition_counts(n, DEFAULT_ENUMERATION_CAP) {
            Ok(counts) => exact(
                f(n),
                PolyZ::from_coeffs(counts.into_iter().map(BigInt::from).collect()),
            ),
            Err(e) => failed(e),
        }
    })
}

fn eq11_recurrence(b: &Bounds) -> Vec<Case> {
    over_n(0, b, |n| exact(f(n), fubini_poly_recurrence(n).into_poly()))
}

fn eq14_ordered_partitions(b: &Bounds) -> Vec<Case> {
    over_n(0, b, |n| match fubini_number_bruteforce(n) {
        Ok(count) => exact(fz(n), count),
        Err(e) => failed(e),
    })
}

fn eq3_two_var(b: &Bounds) -> Vec<Case> {
    // Appell property in x: d/dx F_n(x;y) = n F_{n-1}(x;y)
    over_n(1, b, |n| {
        let lhs = d_dx(fubini_two_var(n).poly());
        let rhs = fubini_two_var(n - 1).poly().scale(&BigInt::from(n));
        exact(lhs, rhs)
    })
}

fn eq29_two_var_specialization(b: &Bounds) -> Vec<Case> {
    over_n(0, b, |n| {
        exact(fubini_two_var(n).poly().eval_x(&BigInt::zero()), f(n))
    })
}

fn eq4_shift(b: &Bounds) -> Vec<Case> {
    over_n(0, b, |n| {
        let p = fubini_two_var(n).poly().clone();
        let one = BigInt::one();
        let lhs = &BiPolyZ::y() * &p.substitute_x_linear(&one, &one);
        let rhs = &(&BiPolyZ::from_y(one_plus_y()) * &p) - &x_pow(n);
        exact(lhs, rhs)
    })
}

fn eq5_binomial(b: &Bounds) -> Vec<Case> {
    over_n(1, b, |n| {
        let lhs: BigInt = (0..=n).map(|k| binomial(n, k) * fz(k)).sum();
        exact(lhs, fz(n) * 2)
    })
}

fn eq6_alt_binomial(b: &Bounds) -> Vec<Case> {
    over_n(0, b, |n| {
        let lhs: BigInt = (0..=n)
            .map(|k| binomial(n, k) * sign(k) * fz(k))
            .sum::<BigInt>()
            * 2;
        exact(lhs, sign(n) * fz(n) + 1)
    })
}

fn eq7_x1(b: &Bounds) -> Vec<Case> {
    over_n(1, b, |n| {
        let at_one = fubini_two_var(n).poly().eval_x(&BigInt::one());
        exact(&PolyZ::var() * &at_one, &one_plus_y() * &f(n))
    })
}

fn eq9_xneg1(b: &Bounds) -> Vec<Case> {
    over_n(0, b, |n| {
        let at_minus_one = fubini_two_var(n).poly().eval_x(&-BigInt::one());
        let lhs = &one_plus_y() * &at_minus_one;
        let rhs = &(&PolyZ::var() * &f(n)) + &PolyZ::constant(sign(n));
        exact(lhs, rhs)
    })
}

fn eq12_products_numbers(b: &Bounds) -> Vec<Case> {
    over_n(0, b, |n| {
        let lhs: BigInt = (0..=n)
            .map(|k| binomial(n, k) * fz(k) * fz(n - k))
            .sum::<BigInt>()
            * 2;
        exact(lhs, fz(n + 1) + fz(n))
    })
}

fn eq13_products_poly(b: &Bounds) -> Vec<Case> {
    over_n(0, b, |n| {
        let sum = (0..=n).fold(PolyZ::zero(), |acc, k| {
            &acc + &(&f(k) * &f(n - k)).scale(&binomial(n, k))
        });
        exact(&one_plus_y() * &sum, &f(n + 1) + &f(n))
    })
}

fn eq13_general_xy(b: &Bounds) -> Vec<Case> {
    let g = y_grid(b.samples());
    let s = g.len();
    let mut out = Vec::new();
    for n in 0..=b.n() {
        for i in 0..s {
            let (x1, x2, y) = (
                g[i].clone(),
                g[(i + 5) % s].clone(),
                g[(i + 11) % s].clone(),
            );
            let params = Params::new()
                .with("n", n)
                .with("x1", &x1)
                .with("x2", &x2)
                .with("y", &y);
            out.push(Case::new(params, move |_| {
                let sum: Rat = (0..=n)
                    .map(|k| {
                        Rat::from(binomial(n, k))
                            * fubini_two_var(k).eval(&x1, &y)
                            * fubini_two_var(n - k).eval(&x2, &y)
                    })
                    .sum();
                let s = &x1 + &x2 - Rat::one();
                let rhs = fubini_two_var(n + 1).eval(&s, &y) - &s * fubini_two_var(n).eval(&s, &y);
                exact(&y * sum, rhs)
            }));
        }
    }
    out
}

fn eq15_special_values(b: &Bounds) -> Vec<Case> {
    let mut out = Vec::new();
    for n in 1..=b.n() {
        out.push(Case::new(
            Params::new().with("n", n).with("y", Rat::int(-2)),
            move |_| exact(fy(n, &Rat::int(-2)), Rat::from(sign(n) * fz(n) * 2)),
        ));
        if n >= 2 && n % 2 == 0 {
            out.push(Case::new(
                Params::new().with("n", n).with("y", Rat::frac(-1, 2)),
                move |_| exact(fy(n, &Rat::frac(-1, 2)), Rat::zero()),
            ));
        }
    }
    out
}

fn eq17_alt_products(b: &Bounds) -> Vec<Case> {
    over_n(1, b, |n| {
        let lhs: BigInt = (0..=n)
            .map(|k| binomial(n, k) * sign(k) * fz(k) * fz(n - k))
            .sum();
        let rhs = if n % 2 == 1 {
            Rat::zero()
        } else {
            Rat::frac(4, 3) * Rat::from(fz(n))
        };
        exact(Rat::from(lhs), rhs)
    })
}

fn eq18_two_var_reflection(b: &Bounds) -> Vec<Case> {
    over_n(0, b, |n| {
        let p = fubini_two_var(n).poly().clone();
        let one = BigInt::one();
        let lhs = p.substitute_y_linear(&one, &-&one);
        let rhs = p
            .substitute_x_linear(&-&one, &one)
            .substitute_y_linear(&-&one, &BigInt::zero())
            .scale(&sign(n));
        exact(lhs, rhs)
    })
}

fn eq19_reflection(b: &Bounds) -> Vec<Case> {
    over_n_y(1, b, |n, y| {
        if y.is_zero() || *y == -Rat::one() {
            return Outcome::Skipped;
        }
        let factor = y.checked_div(&(y + Rat::one())).expect("y != -1");
        let rhs = Rat::from(sign(n)) * factor * fy(n, &(-y - Rat::one()));
        exact(fy(n, y), rhs)
    })
}

fn eq21_explicit(b: &Bounds) -> Vec<Case> {
    over_n(1, b, |n| match fubini_explicit_reflection(n) {
        Ok(p) => exact(p.into_poly(), f(n)),
        Err(e) => failed(e),
    })
}

fn eq23_two_y(b: &Bounds) -> Vec<Case> {
    let g = y_grid(b.samples());
    let s = g.len();
    let mut out = Vec::new();
    // every unordered pair: both sides are symmetric, and the diagonal is trivial
    for n in 0..=b.n() {
        for (i, j) in (0..s).flat_map(|i| (i + 1..s).map(move |j| (i, j))) {
            let (y1, y2) = (g[i].clone(), g[j].clone());
            let params = Params::new().with("n", n).with("y1", &y1).with("y2", &y2);
            out.push(Case::new(params, move |_| {
                let lhs: Rat = (0..=n)
                    .map(|k| Rat::from(binomial(n, k)) * fy(k, &y1) * fy(n - k, &y2))
                    .sum();
                let num = &y2 * fy(n, &y2) - &y1 * fy(n, &y1);
                both(Ok(lhs), num.checked_div(&(&y2 - &y1)))
            }));
        }
    }
    out
}

fn eq23_two_var(b: &Bounds) -> Vec<Case> {
    let g = y_grid(b.samples());
    let s = g.len();
    let mut out = Vec::new();
    for n in 0..=b.n() {
        for i in 0..s {
            let pick = |o: usize| g[(i + o) % s].clone();
            let (x1, x2, y1, y2) = (pick(0), pick(5), pick(11), pick(17));
            let params = Params::new()
                .with("n", n)
                .with("x1", &x1)
                .with("x2", &x2)
                .with("y1", &y1)
                .with("y2", &y2);
            out.push(Case::new(params, move |_| {
                if y1 == y2 {
                    return Outcome::Skipped;
                }
                let lhs: Rat = (0..=n)
                    .map(|k| {
                        Rat::from(binomial(n, k))
                            * fubini_two_var(k).poly().eval(&x1, &y1)
                            * fubini_two_var(n - k).poly().eval(&x2, &y2)
                    })
                    .sum();
                let x = &x1 + &x2;
                let fx = fubini_two_var(n);
                let num = &y2 * fx.eval(&x, &y2) - &y1 * fx.eval(&x, &y1);
                both(Ok(lhs), num.checked_div(&(&y2 - &y1)))
            }));
        }
    }
    out
}

/// `2^{n+1}(1+y) F_n(y^2/(1+2y))` and `(1+2y) F_n(y) + F_n(-y/(1+2y))`.
fn corrected_split_sides(n: usize, y: &Rat) -> Result<(Rat, Rat)> {
    let d = Rat::one() + Rat::int(2) * y;
    let two_pow = Rat::from(BigInt::from(2u32).pow(n as u32 + 1));
    let lhs = two_pow * (Rat::one() + y) * fy(n, &(y * y).checked_div(&d)?);
    let rhs = &d * fy(n, y) + fy(n, &(-y).checked_div(&d)?);
    Ok((lhs, rhs))
}

fn eq24_corrected_split(b: &Bounds) -> Vec<Case> {
    over_n_y(0, b, |n, y| {
        if *y == Rat::frac(-1, 2) || *y == -Rat::one() {
            return Outcome::Skipped;
        }
        pair(corrected_split_sides(n, y))
    })
}

fn eq24_witness() -> Witness {
    // printed: F_n(y) = 2^{n+1}(1+y) F_n(y^2/(1+2y)) - (1+2y) F_n(-y)
    let (n, y) = (1usize, Rat::one());
    let d = Rat::one() + Rat::int(2) * &y;
    let two_pow = Rat::from(BigInt::from(2u32).pow(n as u32 + 1));
    let arg = (&y * &y).checked_div(&d).expect("nonzero");
    let printed_rhs = two_pow * (Rat::one() + &y) * fy(n, &arg) - &d * fy(n, &-&y);
    Witness::new(
        Params::new().with("n", n).with("y", &y),
        fy(n, &y),
        printed_rhs,
    )
}

fn eq84_split(b: &Bounds) -> Vec<Case> {
    over_n_y(0, b, |n, y| both(fubini_explicit_split(n, y), Ok(fy(n, y))))
}

fn eq84_symbolic_collapse(b: &Bounds) -> Vec<Case> {
    over_n(0, b, |n| {
        both(
            fubini_explicit_split_poly(n).map(|p| p.into_poly()),
            Ok(f(n)),
        )
    })
}

fn eq85_number_split(b: &Bounds) -> Vec<Case> {
    over_n(0, b, |n| exact(fubini_number_split(n), Rat::from(fz(n))))
}

fn eq86_number_split_neg2(b: &Bounds) -> Vec<Case> {
    over_n(1, b, |n| {
        both(fubini_number_split_neg2(n), Ok(Rat::from(fz(n))))
    })
}

fn geometric_limit(b: &Bounds) -> Vec<Case> {
    // the closed form at x = 1/2 against the Fubini number directly
    over_n(0, b, |n| {
        both(
            geometric_moment_limit(n, &Rat::frac(1, 2)),
            Ok(Rat::from(fz(n) * 2)),
        )
    })
}

// ---------------------------------------------------------------- Bernoulli

fn eq26_integral(b: &Bounds) -> Vec<Case> {
    (1..=b.n())
        .map(|n| {
            Case::new(Params::new().with("n", n), move |ctx| {
                both(bernoulli_via_integral(n), Ok(ctx.bernoulli(n)))
            })
        })
        .collect()
}

fn eq32_bernoulli(b: &Bounds) -> Vec<Case> {
    (0..=b.n())
        .map(|n| {
            Case::new(Params::new().with("n", n), move |ctx| {
                exact(
                    ctx.bernoulli(n),
                    bernoulli_recurrence(n).pop().expect("nonempty"),
                )
            })
        })
        .collect()
}

fn eq25_moment(b: &Bounds) -> Vec<Case> {
    over_pairs(("k", 0, b.k()), ("n", 1, b.n()), |k, n| {
        pair(fubini_moment_integral(k, n))
    })
}

fn eq28_parity(b: &Bounds) -> Vec<Case> {
    over_pairs(("p", 0, b.p()), ("n", 2, b.n()), |p, n| {
        pair(fubini_moment_parity(p, n))
    })
}

fn eq30_product_integral(b: &Bounds) -> Vec<Case> {
    over_pairs(("m", 0, b.m()), ("n", 1, b.n()), |m, n| {
        pair(fubini_product_integral(m, n))
    })
}

fn product_integral_symmetry(b: &Bounds) -> Vec<Case> {
    over_pairs(("m", 1, b.m()), ("n", 1, b.n()), |m, n| {
        exact(
            product_integral_formula(m, n),
            product_integral_formula(n, m),
        )
    })
}

fn double_sum(b: &Bounds) -> Vec<Case> {
    over_pairs(("m", 0, b.m()), ("n", 1, b.n()), |m, n| {
        pair(double_sum_identity(n, m))
    })
}

fn eq33_lemma2(b: &Bounds) -> Vec<Case> {
    let mut out = Vec::new();
    for m in 0..=b.m() {
        for j in 0..=m {
            out.push(Case::new(
                Params::new().with("m", m).with("j", j),
                move |_| both(lemma2_lhs(m, j), Ok(sign(m) * binomial(m, j))),
            ));
        }
    }
    out
}

fn stirling_inverse(b: &Bounds) -> Vec<Case> {
    over_pairs(("n", 0, b.n()), ("m", 0, b.m()), |n, m| {
        let delta = if n == m {
            BigInt::one()
        } else {
            BigInt::zero()
        };
        exact(stirling_inverse_entry(n, m), delta)
    })
}

fn stirling_cross(b: &Bounds) -> Vec<Case> {
    let mut out = Vec::new();
    for n in 0..=b.n() {
        for j in 0..=n {
            out.push(Case::new(
                Params::new().with("n", n).with("j", j),
                move |_| {
                    let (l, r) = stirling_cross_identity(n, j);
                    exact(l, r)
                },
            ));
        }
    }
    out
}

fn stirling_cross_witness() -> Witness {
    // printed: sum_k {i k} C(k, j) = {i+1 j+1}
    let (n, j) = (2usize, 0usize);
    Witness::new(
        Params::new().with("n", n).with("j", j),
        stirling_cross_swapped(n, j),
        stirling2(n + 1, j + 1),
    )
}

fn pb_relation(b: &Bounds) -> Vec<Case> {
    over_pairs(("n", 1, b.n()), ("p", 0, b.p()), |n, p| {
        pair(p_bernoulli_shifted_relation(n, p))
    })
}

fn pb_zero_column(b: &Bounds) -> Vec<Case> {
    (0..=b.n())
        .map(|n| {
            Case::new(Params::new().with("n", n), move |ctx| {
                exact(p_bernoulli(n, 0), ctx.bernoulli(n))
            })
        })
        .collect()
}

fn pb_odd_explicit(b: &Bounds) -> Vec<Case> {
    over_pairs(("n", 1, b.n()), ("p", 1, b.p()), |n, p| {
        both(
            p_bernoulli_odd_explicit(n, p),
            Ok(p_bernoulli(2 * n - 1, p)),
        )
    })
}

fn pb_even_explicit(b: &Bounds) -> Vec<Case> {
    over_pairs(("n", 1, b.n()), ("p", 1, b.p()), |n, p| {
        both(p_bernoulli_even_explicit(n, p), Ok(p_bernoulli(2 * n, p)))
    })
}

/// `((p+1)/p) sum_{k=0}^{terms} {upper k+1} (-1)^(k+shift) (k+1)!/(k+p+1)`
fn printed_p_bernoulli(upper: usize, terms: usize, p: usize, shift: usize) -> Rat {
    let sum: Rat = (0..=terms)
        .map(|k| {
            let num = stirling2(upper, k + 1) * factorial(k + 1);
            Rat::sign_pow(k + shift) * Rat::new(num, k + p + 1).expect("positive")
        })
        .sum();
    sum * Rat::frac(p as i64 + 1, p as i64)
}

fn pb_odd_witness() -> Witness {
    // printed: upper Stirling argument 2n-1 and sign (-1)^(k+1)
    let (n, p) = (1usize, 1usize);
    let printed = printed_p_bernoulli(2 * n - 1, 2 * n - 1, p, 1);
    Witness::new(
        Params::new().with("n", n).with("p", p),
        printed,
        p_bernoulli(2 * n - 1, p),
    )
}

fn pb_even_witness() -> Witness {
    // printed: sign (-1)^k
    let (n, p) = (1usize, 2usize);
    let printed = printed_p_bernoulli(2 * n + 1, 2 * n, p, 0);
    Witness::new(
        Params::new().with("n", n).with("p", p),
        printed,
        p_bernoulli(2 * n, p),
    )
}

// ---------------------------------------------------------------- Apostol

fn eq53_listed_values(b: &Bounds) -> Vec<Case> {
    over_n(0, b, |n| {
        let lm1 = || PolyQ::linear(Rat::one(), -Rat::one());
        let listed = match n {
            0 => crate::RatFunc::zero(),
            1 => crate::RatFunc::new(PolyQ::one(), lm1()).expect("nonzero"),
            2 => crate::RatFunc::new(PolyQ::monomial(Rat::int(-2), 1), lm1().pow(2))
                .expect("nonzero"),
            _ => return Outcome::Skipped,
        };
        exact(apostol_bernoulli(n).into_func(), listed)
    })
}

fn ab_routes(b: &Bounds) -> Vec<Case> {
    over_n(1, b, |n| {
        both(
            Ok(apostol_bernoulli(n).into_func()),
            apostol_via_fubini(n).map(|a| a.into_func()),
        )
    })
}

fn ab_guoqi(b: &Bounds) -> Vec<Case> {
    over_n(1, b, |n| {
        both(
            apostol_explicit_guoqi(n).map(|a| a.into_func()),
            Ok(apostol_bernoulli(n + 1).into_func()),
        )
    })
}

fn ab_guoqi_witness() -> Witness {
    Witness::new(
        Params::new().with("n", 0usize),
        guoqi_expression(0),
        apostol_bernoulli(1).func(),
    )
}

fn ab_split(b: &Bounds) -> Vec<Case> {
    over_n_lambda(0, b, |n, l| {
        let rhs = apostol_bernoulli(n + 1)
            .eval(l)
            .and_then(|v| v.checked_div(&Rat::int(n as i64 + 1)));
        both(apostol_explicit_split(n, l), rhs)
    })
}

fn ab_sum_products(b: &Bounds) -> Vec<Case> {
    over_n_lambda(0, b, |n, l| pair(apostol_sum_of_products(n, l)))
}

fn ab_moment_integral(b: &Bounds) -> Vec<Case> {
    over_pairs(("k", 0, b.k()), ("n", 1, b.n()), |k, n| {
        pair(apostol_moment_integral(k, n))
    })
}

fn ab_product_integral(b: &Bounds) -> Vec<Case> {
    over_pairs(("m", 0, b.m()), ("n", 1, b.n()), |m, n| {
        pair(apostol_product_integral(m, n))
    })
}

fn ab_product_witness() -> Witness {
    // printed: integral of B_m B_n with factor (-1)^m (m+1)(n+1)
    let (m, n) = (1usize, 1usize);
    let integral = product_integral_by_substitution(m - 1, n - 1);
    let printed = Rat::int((m as i64 + 1) * (n as i64 + 1)) * product_integral_formula(m, n);
    Witness::new(Params::new().with("m", m).with("n", n), integral, printed)
}

fn ab_pole_order(b: &Bounds) -> Vec<Case> {
    // The canonical denominator must be (λ-1)^d with d <= n.
    over_n(0, b, |n| {
        let func = apostol_bernoulli(n).into_func();
        let d = func.denominator().degree().unwrap_or(0).min(n);
        let expected = PolyQ::linear(Rat::one(), -Rat::one()).pow(d as u32);
        let ok = pole_order_at_one(&func).is_some_and(|o| o <= n);
        let expected = if ok { expected } else { Poly::zero() };
        exact(func.denominator().clone(), expected)
    })
}

fn quadrature_case(value: Result<f64>, exact_value: Rat) -> Outcome {
    match value {
        Ok(v) => Outcome::Compared {
            pass: (v - exact_value.to_f64()).abs() <= QUADRATURE_TOLERANCE,
            lhs: format!("{v:.15e}"),
            rhs: exact_value.to_string(),
        },
        Err(e) => failed(e),
    }
}

const INNER_TOLERANCE: f64 = 1e-12;

fn ab_quadrature_moment(b: &Bounds) -> Vec<Case> {
    over_pairs(("k", 0, b.k()), ("n", 1, b.n()), |k, n| {
        quadrature_case(
            improper_quadrature_oracle(&moment_integrand(k, n), INNER_TOLERANCE),
            moment_integral_by_substitution(k, n),
        )
    })
}

fn ab_quadrature_product(b: &Bounds) -> Vec<Case> {
    over_pairs(("m", 0, b.m()), ("n", 1, b.n()), |m, n| {
        quadrature_case(
            improper_quadrature_oracle(&product_integrand(m, n), INNER_TOLERANCE),
            product_integral_by_substitution(m, n),
        )
    })
}

// ---------------------------------------------------------------- table

fn bounds(
    n: Option<usize>,
    m: Option<usize>,
    k: Option<usize>,
    p: Option<usize>,
    samples: Option<usize>,
) -> Bounds {
    Bounds {
        n_max: n,
        m_max: m,
        k_max: k,
        p_max: p,
        samples,
    }
}

fn n_only(n: usize) -> Bounds {
    bounds(Some(n), None, None, None, None)
}

fn n_grid(n: usize, samples: usize) -> Bounds {
    bounds(Some(n), None, None, None, Some(samples))
}

fn entry(
    identity: &'static str,
    equation: &'static str,
    quote: &'static str,
    statement: &'static str,
    cases: fn(&Bounds) -> Vec<Case>,
    quick: Bounds,
    full: Bounds,
) -> RegistryEntry {
    RegistryEntry {
        identity,
        anchor: Anchor { equation, quote },
        statement,
        corrected: false,
        tolerance: None,
        quick,
        full,
        cases,
        witness: None,
    }
}

impl RegistryEntry {
    fn corrected(mut self, witness: fn() -> Witness) -> Self {
        self.corrected = true;
        self.witness = Some(witness);
        self
    }

    fn with_tolerance(mut self, t: f64) -> Self {
        self.tolerance = Some(t);
        self
    }
}

pub(crate) fn entries() -> &'static [RegistryEntry] {
    static ENTRIES: OnceLock<Vec<RegistryEntry>> = OnceLock::new();
    ENTRIES.get_or_init(build)
}

fn build() -> Vec<RegistryEntry> {
    let mut v = vec![
        // Fubini polynomials and numbers
        entry(
            "eq1_series",
            "Eq. (1)",
            "evaluation of the following series",
            "sum_{k<=N} k^n / 2^k is within 1e-12 of 2 F_n",
            eq1_series,
            n_only(6),
            n_only(10),
        )
        .with_tolerance(SERIES_TOLERANCE),
        entry(
            "geometric_limit",
            "§1",
            "are related to the geometric series",
            "F_n(x/(1-x))/(1-x) at x = 1/2 equals 2 F_n",
            geometric_limit,
            n_only(10),
            n_only(30),
        ),
        entry(
            "eq2_block_counts",
            "Eq. (2)",
            "Fubini polynomials are defined by",
            "[y^k] F_n(y) equals the number of ordered partitions of an n-set into k blocks",
            eq2_block_counts,
            n_only(6),
            n_only(8),
        ),
        entry(
            "eq11_recurrence",
            "Eq. (11)",
            "the following recurrence relation holds",
            "F_{n+1}(y) = y d/dy[(1+y) F_n(y)] reproduces the Stirling construction",
            eq11_recurrence,
            n_only(20),
            n_only(40),
        ),
        entry(
            "eq14_ordered_partitions",
            "Eq. (14)",
            "counts all the possible set partitions",
            "F_n equals the brute-force count of ordered set partitions",
            eq14_ordered_partitions,
            n_only(7),
            n_only(10),
        ),
        entry(
            "eq3_two_var",
            "Eq. (3)",
            "Comparing the coefficients of",
            "d/dx F_n(x;y) = n F_{n-1}(x;y)",
            eq3_two_var,
            n_only(10),
            n_only(20),
        ),
        entry(
            "eq29_two_var_specialization",
            "Eq. (29)",
            "For some special cases of",
            "F_n(0;y) = F_n(y)",
            eq29_two_var_specialization,
            n_only(10),
            n_only(20),
        ),
        entry(
            "eq4_shift",
            "Eq. (4)",
            "Comparing the coefficients of",
            "y F_n(x+1;y) = (1+y) F_n(x;y) - x^n",
            eq4_shift,
            n_only(8),
            n_only(20),
        ),
        entry(
            "eq5_binomial",
            "Eq. (5)",
            "generalize the binomial formulas",
            "sum_k C(n,k) F_k = 2 F_n, n >= 1",
            eq5_binomial,
            n_only(15),
            n_only(30),
        ),
        entry(
            "eq6_alt_binomial",
            "Eq. (6)",
            "generalize the binomial formulas",
            "2 sum_k C(n,k) (-1)^k F_k = (-1)^n F_n + 1",
            eq6_alt_binomial,
            n_only(15),
            n_only(30),
        ),
        entry(
            "eq7_x1",
            "Eq. (7)",
            "setting x=0 and x=−1",
            "y F_n(1;y) = (1+y) F_n(y), n >= 1",
            eq7_x1,
            n_only(8),
            n_only(20),
        ),
        entry(
            "eq9_xneg1",
            "Eq. (9)",
            "setting x=0 and x=−1",
            "(1+y) F_n(-1;y) = y F_n(y) + (-1)^n",
            eq9_xneg1,
            n_only(8),
            n_only(20),
        ),
        entry(
            "eq12_products_numbers",
            "Eq. (12)",
            "sums of products of the Fubini",
            "2 sum_k C(n,k) F_k F_{n-k} = F_{n+1} + F_n",
            eq12_products_numbers,
            n_only(15),
            n_only(30),
        ),
        entry(
            "eq13_products_poly",
            "Eq. (13)",
            "sums of products of the Fubini",
            "(y+1) sum_k C(n,k) F_k(y) F_{n-k}(y) = F_{n+1}(y) + F_n(y)",
            eq13_products_poly,
            n_only(10),
            n_only(20),
        ),
        entry(
            "eq13_general_xy",
            "Eq. (13)",
            "sums of products of the Fubini",
            "y sum_k C(n,k) F_k(x1;y) F_{n-k}(x2;y) = F_{n+1}(s;y) - s F_n(s;y), s = x1+x2-1",
            eq13_general_xy,
            n_grid(6, 10),
            n_grid(15, 25),
        ),
        entry(
            "eq15_special_values",
            "Eq. (15)",
            "we get two conclusion as",
            "F_{2k}(-1/2) = 0 and F_n(-2) = (-1)^n 2 F_n, n >= 1",
            eq15_special_values,
            n_only(10),
            n_only(15),
        ),
        entry(
            "eq17_alt_products",
            "Eq. (17)",
            "alternating sums of products of Fubini numbers",
            "sum_k C(n,k) (-1)^k F_k F_{n-k} is 0 for odd n and (4/3) F_n for even n",
            eq17_alt_products,
            n_only(10),
            n_only(15),
        ),
        entry(
            "eq18_two_var_reflection",
            "Eq. (18)",
            "take y−1 in place of y",
            "F_n(x;y-1) = (-1)^n F_n(1-x;-y)",
            eq18_two_var_reflection,
            n_only(8),
            n_only(15),
        ),
        entry(
            "eq19_reflection",
            "Eq. (19)",
            "the reflection formula",
            "F_n(y) = (-1)^n (y/(y+1)) F_n(-y-1), n >= 1, y not in {-1, 0}",
            eq19_reflection,
            n_grid(8, 12),
            n_grid(15, 25),
        ),
        entry(
            "eq21_explicit",
            "Eq. (21)",
            "a new explicit formula for Fubini polynomials",
            "F_n(y) = y sum_{k>=1} {n k} (-1)^(n+k) k! (y+1)^(k-1), n >= 1",
            eq21_explicit,
            n_only(12),
            n_only(25),
        ),
        entry(
            "eq23_two_y",
            "Eq. (23)",
            "for different y values",
            "sum_k C(n,k) F_k(y1) F_{n-k}(y2) = [y2 F_n(y2) - y1 F_n(y1)]/(y2 - y1)",
            eq23_two_y,
            n_grid(6, 10),
            n_grid(15, 25),
        ),
        entry(
            "eq23_two_var",
            "Eq. (69)",
            "products of (8) can be written",
            "sum_k C(n,k) F_k(x1;y1) F_{n-k}(x2;y2) = [y2 F_n(x1+x2;y2) - y1 F_n(x1+x2;y1)]/(y2 - y1)",
            eq23_two_var,
            n_grid(6, 10),
            n_grid(15, 25),
        ),
        entry(
            "eq24_corrected_split",
            "Eq. (24)",
            "By equating the coefficients of",
            "2^{n+1} (1+y) F_n(y^2/(1+2y)) = (1+2y) F_n(y) + F_n(-y/(1+2y)), y not in {-1/2, -1}",
            eq24_corrected_split,
            n_grid(8, 20),
            n_grid(15, 34),
        )
        .corrected(eq24_witness),
        entry(
            "eq84_split",
            "Eq. (84)",
            "For y ≠ −1/2",
            "sum_k {n k} k! y^k [2^{n+1}(y+1) y^k + (-1)^(k+1)]/(2y+1)^(k+1) = F_n(y)",
            eq84_split,
            n_grid(8, 19),
            n_grid(15, 33),
        ),
        entry(
            "eq84_symbolic_collapse",
            "Eq. (84)",
            "For y ≠ −1/2",
            "the split sum times (2y+1)^(n+1) divides exactly back to F_n(y)",
            eq84_symbolic_collapse,
            n_only(6),
            n_only(10),
        ),
        entry(
            "eq85_number_split",
            "Eq. (85)",
            "When y=1 this becomes",
            "sum_k {n k} k! [2^(n+2) + (-1)^(k+1)]/3^(k+1) = F_n",
            eq85_number_split,
            n_only(10),
            n_only(20),
        ),
        entry(
            "eq86_number_split_neg2",
            "Eq. (86)",
            "When y=−2 this becomes",
            "sum_k (-1)^(n-k) {n k} k! 2^(k-1) [2^(n+k+1) + 1]/3^(k+1) = F_n, n >= 1",
            eq86_number_split_neg2,
            n_only(10),
            n_only(20),
        ),
        // Bernoulli and p-Bernoulli numbers
        entry(
            "eq26_integral",
            "Eq. (26)",
            "the integral representation",
            "integral_{-1}^{0} F_n(y) dy = B_n, n >= 1",
            eq26_integral,
            n_only(15),
            n_only(30),
        ),
        entry(
            "eq32_bernoulli",
            "Eq. (32)",
            "defined by the explicit formula",
            "sum_k {n k} (-1)^k k!/(k+1) agrees with the recurrence sum_k C(n+1,k) B_k = 0",
            eq32_bernoulli,
            n_only(15),
            n_only(30),
        ),
        entry(
            "eq25_moment",
            "Eq. (25)",
            "We prove (25) by induction",
            "integral_{-1}^{0} y^k F_n(y) dy = ((-1)^k/k!) sum_j [k+1 j+1] B_{n+j}",
            eq25_moment,
            bounds(Some(8), None, Some(4), None, None),
            bounds(Some(20), None, Some(10), None, None),
        ),
        entry(
            "eq28_parity",
            "Eq. (28)",
            "can be written as",
            "integral y^p F_n = (-1)^p ((p+1)/(p+2)) B_{n-1,p+1} for odd n, (-1)^(p+1) (...) for even n",
            eq28_parity,
            bounds(Some(8), None, None, Some(4), None),
            bounds(Some(15), None, None, Some(8), None),
        ),
        entry(
            "eq30_product_integral",
            "Eq. (30)",
            "integrals of products of Fubini polynomials",
            "integral_{-1}^{0} F_m F_n dy = (-1)^m sum_j C(m,j) B_{n+j}, n >= 1",
            eq30_product_integral,
            bounds(Some(6), Some(6), None, None, None),
            bounds(Some(12), Some(12), None, None, None),
        ),
        entry(
            "product_integral_symmetry",
            "Eq. (30)",
            "we deal with an integral for a product",
            "(-1)^m sum_j C(m,j) B_{n+j} = (-1)^n sum_j C(n,j) B_{m+j}",
            product_integral_symmetry,
            bounds(Some(6), Some(6), None, None, None),
            bounds(Some(12), Some(12), None, None, None),
        ),
        entry(
            "double_sum",
            "§3",
            "This double sum identity extends",
            "sum_{k,j} {n k}{m j} (-1)^(k+j) k! j!/(k+j+1) = (-1)^m sum_j C(m,j) B_{n+j}",
            double_sum,
            bounds(Some(6), Some(6), None, None, None),
            bounds(Some(12), Some(12), None, None, None),
        ),
        entry(
            "eq33_lemma2",
            "Eq. (33)",
            "For any non-negative integer",
            "sum_{k=j}^{m} {m k} [k+1 j+1] (-1)^k = (-1)^m C(m,j)",
            eq33_lemma2,
            bounds(None, Some(15), None, None, None),
            bounds(None, Some(40), None, None, None),
        ),
        entry(
            "stirling_inverse",
            "Eq. (33)",
            "For any non-negative integer",
            "sum_k s(n,k) {k m} = [n = m] with signed first-kind numbers",
            stirling_inverse,
            bounds(Some(15), Some(15), None, None, None),
            bounds(Some(40), Some(40), None, None, None),
        ),
        entry(
            "stirling_cross",
            "Eq. (33)",
            "as it is known",
            "sum_k C(n,k) {k j} = {n+1 j+1}",
            stirling_cross,
            n_only(15),
            n_only(40),
        )
        .corrected(stirling_cross_witness),
        entry(
            "pb_relation",
            "Eq. (27)",
            "in terms Stirling numbers of the first kind",
            "sum_j (-1)^(j+1) [p+1 j+1] B_{n+j} = ((p+1)!/(p+2)) B_{n-1,p+1}",
            pb_relation,
            bounds(Some(8), None, None, Some(5), None),
            bounds(Some(20), None, None, Some(10), None),
        ),
        entry(
            "pb_zero_column",
            "§3",
            "defined p-Bernoulli numbers as",
            "B_{n,0} = B_n",
            pb_zero_column,
            n_only(10),
            n_only(20),
        ),
        entry(
            "pb_odd_explicit",
            "§3",
            "For n>1 and p>0",
            "B_{2n-1,p} = ((p+1)/p) sum_{k<=2n-1} {2n k+1} (-1)^k (k+1)!/(k+p+1)",
            pb_odd_explicit,
            bounds(Some(5), None, None, Some(5), None),
            bounds(Some(10), None, None, Some(10), None),
        )
        .corrected(pb_odd_witness),
        entry(
            "pb_even_explicit",
            "§3",
            "For n>1 and p>0",
            "B_{2n,p} = ((p+1)/p) sum_{k<=2n} {2n+1 k+1} (-1)^(k+1) (k+1)!/(k+p+1)",
            pb_even_explicit,
            bounds(Some(5), None, None, Some(5), None),
            bounds(Some(10), None, None, Some(10), None),
        )
        .corrected(pb_even_witness),
        // Apostol-Bernoulli functions
        entry(
            "eq53_listed_values",
            "Eq. (53)",
            "Thus for λ≠1",
            "B_0 = 0, B_1 = 1/(λ-1), B_2 = -2λ/(λ-1)^2",
            eq53_listed_values,
            n_only(2),
            n_only(2),
        ),
        entry(
            "ab_routes",
            "Eq. (22)",
            "expressed by Fubini polynomials as",
            "(n/(λ-1)) sum_k {n-1 k} k! (λ/(1-λ))^k = (n/(λ-1)) F_{n-1}(λ/(1-λ))",
            ab_routes,
            n_only(10),
            n_only(20),
        ),
        entry(
            "ab_guoqi",
            "§4",
            "which was obtained in",
            "B_{n+1}(λ) = (n+1) (-1)^n λ sum_k {n k} k! (1/(λ-1))^(k+1), n >= 1",
            ab_guoqi,
            n_only(9),
            n_only(19),
        )
        .corrected(ab_guoqi_witness),
        entry(
            "ab_split",
            "§4",
            "For λ≠±1 and n≥0",
            "B_{n+1}(λ)/(n+1) = sum_k {n k} k! (-λ)^k [2^(n+1) λ^k + (λ-1)^(k+1)]/(λ^2-1)^(k+1)",
            ab_split,
            n_grid(6, 14),
            n_grid(12, 26),
        ),
        entry(
            "ab_sum_products",
            "§4",
            "sums of products of Apostol-Bernoulli functions",
            "sum_k C(n,k) B_{k+1} B_{n-k+1}/((k+1)(n-k+1)) = -[B_{n+2}/(n+2) + B_{n+1}/(n+1)]",
            ab_sum_products,
            n_grid(5, 10),
            n_grid(10, 25),
        ),
        entry(
            "ab_moment_integral",
            "§4",
            "Replacing y with λ/(1−λ)",
            "integral_{-inf}^{0} λ^k/(λ-1)^(k+1) B_{n+1}(λ) dλ = ((n+1)/k!) sum_j [k+1 j+1] B_{n+j}",
            ab_moment_integral,
            bounds(Some(4), None, Some(3), None, None),
            bounds(Some(8), None, Some(6), None, None),
        ),
        entry(
            "ab_product_integral",
            "§4",
            "integrals of products of Apostol-Bernoulli functions",
            "integral_{-inf}^{0} B_{m+1} B_{n+1} dλ = (-1)^m (m+1)(n+1) sum_j C(m,j) B_{n+j}",
            ab_product_integral,
            bounds(Some(4), Some(4), None, None, None),
            bounds(Some(8), Some(8), None, None, None),
        )
        .corrected(ab_product_witness),
        entry(
            "ab_pole_order",
            "Eq. (53)",
            "have the following explicit expression",
            "the canonical denominator of B_n(λ) is (λ-1)^d with d <= n",
            ab_pole_order,
            n_only(10),
            n_only(20),
        ),
        entry(
            "ab_quadrature_moment",
            "§4",
            "Replacing y with λ/(1−λ)",
            "adaptive quadrature of the moment integrand agrees with the exact value",
            ab_quadrature_moment,
            bounds(Some(2), None, Some(1), None, None),
            bounds(Some(3), None, Some(2), None, None),
        )
        .with_tolerance(QUADRATURE_TOLERANCE),
        entry(
            "ab_quadrature_product",
            "§4",
            "integrals of products of Apostol-Bernoulli functions",
            "adaptive quadrature of B_{m+1} B_{n+1} agrees with the exact value",
            ab_quadrature_product,
            bounds(Some(2), Some(1), None, None, None),
            bounds(Some(3), Some(3), None, None, None),
        )
        .with_tolerance(QUADRATURE_TOLERANCE),
    ];
    v.sort_by_key(|e| e.identity);
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bernoulli::bernoulli;

    #[test]
    fn recurrence_oracle_matches_known_values() {
        let b = bernoulli_recurrence(12);
        assert_eq!(b[1], Rat::frac(-1, 2));
        assert_eq!(b[12], Rat::frac(-691, 2730));
        for (n, v) in b.iter().enumerate() {
            assert_eq!(&bernoulli(n), v);
        }
    }

    #[test]
    fn tolerance_literals() {
        assert_eq!(
            tolerance(1e-12),
            Rat::new(1, BigInt::from(10u64.pow(12))).unwrap()
        );
        assert_eq!(tolerance(1e-9), Rat::new(1, 1_000_000_000).unwrap());
    }

    #[test]
    fn ids_are_unique() {
        let ids: Vec<_> = entries().iter().map(|e| e.identity).collect();
        let mut d = ids.clone();
        d.dedup();
        assert_eq!(ids, d);
    }
}
