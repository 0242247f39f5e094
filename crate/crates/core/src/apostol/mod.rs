//! Apostol-Bernoulli functions `B_n(λ)` as canonical rational functions of `λ`.
//!
//! The integrals over `(-inf, 0]` are evaluated exactly by the substitution
//! `y = λ/(1-λ)`, which maps the half line onto `(-1, 0]` and turns
//! `B_{m+1}(λ)` into `-(m+1)(1+y) F_m(y)` with `dλ = dy/(1+y)^2`.
//! [`improper_quadrature_oracle`] integrates the same rational functions
//! numerically as an independent check.

mod quadrature;

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

pub use quadrature::improper_quadrature_oracle;

use crate::bernoulli::{
    moment_integral_exact, moment_integral_formula, product_integral_exact,
    product_integral_formula,
};
use crate::combinatorics::{binomial, factorial, stirling2};
use crate::error::{precondition, Result};
use crate::exact::{PolyQ, Rat, RatFunc};
use crate::fubini::fubini_poly;
use crate::memo::Memo;

/// `B_n(λ)` together with its index.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ApostolBernoulli {
    n: usize,
    #[serde(rename = "function")]
    func: RatFunc,
}

impl ApostolBernoulli {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn func(&self) -> &RatFunc {
        &self.func
    }

    pub fn into_func(self) -> RatFunc {
        self.func
    }

    pub fn eval(&self, lambda: &Rat) -> Result<Rat> {
        self.func.eval(lambda)
    }
}

impl fmt::Display for ApostolBernoulli {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.func.display_in("λ"))
    }
}

fn lambda_minus_one() -> RatFunc {
    RatFunc::from_poly(&PolyQ::linear(Rat::one(), -Rat::one()))
}

/// `λ / (1 - λ)`
fn fubini_argument() -> RatFunc {
    RatFunc::new(PolyQ::var(), PolyQ::linear(-Rat::one(), Rat::one())).expect("nonzero")
}

static APOSTOL: Memo<RatFunc> = Memo::new();

/// `B_n(λ) = (n/(λ-1)) sum_{k=0}^{n-1} {n-1 k} k! (λ/(1-λ))^k`, with `B_0 = 0`.
pub fn apostol_bernoulli(n: usize) -> ApostolBernoulli {
    let func = APOSTOL.get(n, |i, _| {
        if i == 0 {
            return RatFunc::zero();
        }
        let ratio = fubini_argument();
        let mut power = RatFunc::one();
        let mut sum = RatFunc::zero();
        for k in 0..i {
            let c = Rat::from(stirling2(i - 1, k) * factorial(k));
            sum = &sum + &power.scale(&c);
            power = &power * &ratio;
        }
        let prefactor = lambda_minus_one()
            .recip()
            .expect("nonzero")
            .scale(&Rat::int(i as i64));
        &prefactor * &sum
    });
    ApostolBernoulli {
        n,
        func: (*func).clone(),
    }
}

/// `B_n(λ) = (n/(λ-1)) F_{n-1}(λ/(1-λ))` by composing `F_{n-1}` with `λ/(1-λ)`.
/// Requires `n >= 1`.
pub fn apostol_via_fubini(n: usize) -> Result<ApostolBernoulli> {
    if n == 0 {
        return Err(precondition("apostol_via_fubini", "requires n >= 1"));
    }
    let composed = fubini_argument().substitute_into(fubini_poly(n - 1).poly());
    let prefactor = lambda_minus_one().recip()?.scale(&Rat::int(n as i64));
    Ok(ApostolBernoulli {
        n,
        func: &prefactor * &composed,
    })
}

/// `(n+1) (-1)^n λ sum_{k=0}^{n} {n k} k! (1/(λ-1))^(k+1)` as printed, with no
/// precondition. It equals `B_{n+1}(λ)` for `n >= 1` only; at `n = 0` it gives
/// `λ/(λ-1)` instead of `1/(λ-1)`.
pub fn guoqi_expression(n: usize) -> RatFunc {
    // sum_k c_k / (λ-1)^(k+1) over the common denominator (λ-1)^(n+1)
    let base = PolyQ::linear(Rat::one(), -Rat::one());
    let mut num = PolyQ::zero();
    let mut power = PolyQ::one();
    for k in (0..=n).rev() {
        let c = Rat::from(stirling2(n, k) * factorial(k));
        num = &num + &power.scale(&c);
        power = &power * &base;
    }
    let lead = Rat::sign_pow(n) * Rat::int(n as i64 + 1);
    let num = &PolyQ::monomial(lead, 1) * &num;
    RatFunc::new(num, power).expect("nonzero denominator")
}

/// `B_{n+1}(λ)` from the explicit `1/(λ-1)` power sum. Requires `n >= 1`.
pub fn apostol_explicit_guoqi(n: usize) -> Result<ApostolBernoulli> {
    if n == 0 {
        return Err(precondition(
            "apostol_explicit_guoqi",
            "requires n >= 1 (the n = 0 instance gives λ/(λ-1), not B_1)",
        ));
    }
    Ok(ApostolBernoulli {
        n: n + 1,
        func: guoqi_expression(n),
    })
}

fn check_not_unit(op: &'static str, lambda: &Rat, allow_minus_one: bool) -> Result<()> {
    let one = Rat::one();
    if lambda == &one || (!allow_minus_one && lambda == &-one) {
        let excluded = if allow_minus_one {
            "λ = 1"
        } else {
            "λ = ±1"
        };
        return Err(precondition(
            op,
            format!("{excluded} is excluded, got {lambda}"),
        ));
    }
    Ok(())
}

/// `sum_k {n k} k! (-λ)^k [2^(n+1) λ^k + (λ-1)^(k+1)] / (λ^2-1)^(k+1)`, which
/// equals `B_{n+1}(λ)/(n+1)` for `λ != ±1`.
pub fn apostol_explicit_split(n: usize, lambda: &Rat) -> Result<Rat> {
    check_not_unit("apostol_explicit_split", lambda, false)?;
    let two_pow = Rat::int(BigInt::from(2u32).pow(n as u32 + 1));
    let l_minus = lambda - Rat::one();
    let denom_base = lambda * lambda - Rat::one();
    let mut total = Rat::zero();
    for k in 0..=n {
        let s = stirling2(n, k);
        if s.is_zero() {
            continue;
        }
        let lk = lambda.pow(k as u32);
        let bracket = &two_pow * &lk + l_minus.pow(k as u32 + 1);
        let num = Rat::from(s * factorial(k)) * (-lambda).pow(k as u32) * bracket;
        total += num.checked_div(&denom_base.pow(k as u32 + 1))?;
    }
    Ok(total)
}

/// `(sum_k C(n,k) B_{k+1} B_{n-k+1} / ((k+1)(n-k+1)), -[B_{n+2}/(n+2) + B_{n+1}/(n+1)])`
/// evaluated at `λ != 1`.
pub fn apostol_sum_of_products(n: usize, lambda: &Rat) -> Result<(Rat, Rat)> {
    check_not_unit("apostol_sum_of_products", lambda, true)?;
    let scaled = |i: usize| -> Result<Rat> {
        apostol_bernoulli(i)
            .eval(lambda)?
            .checked_div(&Rat::int(i as i64))
    };
    let mut lhs = Rat::zero();
    for k in 0..=n {
        lhs += Rat::from(binomial(n, k)) * scaled(k + 1)? * scaled(n - k + 1)?;
    }
    let rhs = -(scaled(n + 2)? + scaled(n + 1)?);
    Ok((lhs, rhs))
}

/// `λ^k / (λ-1)^(k+1) · B_{n+1}(λ)`
pub fn moment_integrand(k: usize, n: usize) -> RatFunc {
    let lm1 = lambda_minus_one();
    let weight = RatFunc::var()
        .pow(k as u32)
        .checked_div(&lm1.pow(k as u32 + 1))
        .expect("nonzero");
    &weight * apostol_bernoulli(n + 1).func()
}

/// `B_{m+1}(λ) · B_{n+1}(λ)`
pub fn product_integrand(m: usize, n: usize) -> RatFunc {
    apostol_bernoulli(m + 1).func() * apostol_bernoulli(n + 1).func()
}

/// `integral_{-inf}^{0} λ^k/(λ-1)^(k+1) B_{n+1}(λ) dλ`, exactly, for any `k, n`.
pub fn moment_integral_by_substitution(k: usize, n: usize) -> Rat {
    Rat::sign_pow(k) * Rat::int(n as i64 + 1) * moment_integral_exact(k, n)
}

/// `integral_{-inf}^{0} B_{m+1}(λ) B_{n+1}(λ) dλ`, exactly, for any `m, n`.
pub fn product_integral_by_substitution(m: usize, n: usize) -> Rat {
    Rat::int((m as i64 + 1) * (n as i64 + 1)) * product_integral_exact(m, n)
}

/// `(substitution route, ((n+1)/k!) sum_j [k+1 j+1] B_{n+j})` for the moment
/// integral of `B_{n+1}`. Requires `n >= 1`.
pub fn apostol_moment_integral(k: usize, n: usize) -> Result<(Rat, Rat)> {
    if n == 0 {
        return Err(precondition("apostol_moment_integral", "requires n >= 1"));
    }
    // moment_integral_formula carries (-1)^k/k!; undo the sign.
    let formula = Rat::sign_pow(k) * Rat::int(n as i64 + 1) * moment_integral_formula(k, n);
    Ok((moment_integral_by_substitution(k, n), formula))
}

/// `(substitution route, (-1)^m (m+1)(n+1) sum_j C(m,j) B_{n+j})` for
/// `integral B_{m+1} B_{n+1}` over `(-inf, 0]`. Requires `n >= 1`.
pub fn apostol_product_integral(m: usize, n: usize) -> Result<(Rat, Rat)> {
    if n == 0 {
        return Err(precondition("apostol_product_integral", "requires n >= 1"));
    }
    let formula = Rat::int((m as i64 + 1) * (n as i64 + 1)) * product_integral_formula(m, n);
    Ok((product_integral_by_substitution(m, n), formula))
}

/// Pole order of `B_n` at `λ = 1` if its canonical denominator is exactly
/// `(λ-1)^d`; `Some(0)` for a polynomial.
pub fn pole_order_at_one(f: &RatFunc) -> Option<usize> {
    match f.denominator().degree() {
        Some(0) => Some(0),
        _ => match f.denominator_as_power() {
            Some((r, d)) if r == Rat::one() => Some(d),
            _ => None,
        },
    }
}
