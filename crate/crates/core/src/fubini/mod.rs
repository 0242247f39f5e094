//! Fubini (ordered Bell) polynomials and numbers.
//!
//! `F_n(y) = sum_k {n k} k! y^k` is built from the Stirling triangle and cached;
//! the recurrence `F_{n+1} = y d/dy[(1+y) F_n]` and the enumeration of ordered
//! set partitions are kept as independent routes. The two-variable polynomial
//! `F_n(x;y) = sum_k C(n,k) F_k(y) x^(n-k)` and the explicit formulas that
//! re-express `F_n` live here as well.

mod partitions;

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

pub use partitions::{ordered_partition_counts, DEFAULT_ENUMERATION_CAP};

use crate::combinatorics::{binomial, factorial, stirling2, stirling_row, StirlingKind};
use crate::error::{precondition, Error, Result};
use crate::exact::{BiPolyZ, PolyQ, PolyZ, Rat};
use crate::memo::Memo;

/// `F_n(y)` together with its index.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FubiniPoly {
    n: usize,
    poly: PolyZ,
}

impl FubiniPoly {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn poly(&self) -> &PolyZ {
        &self.poly
    }

    pub fn into_poly(self) -> PolyZ {
        self.poly
    }

    pub fn eval(&self, y: &Rat) -> Rat {
        self.poly.eval(y)
    }
}

impl fmt::Display for FubiniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.poly.display_in("y"))
    }
}

/// `F_n(x;y)` together with its index.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FubiniBiPoly {
    n: usize,
    poly: BiPolyZ,
}

impl FubiniBiPoly {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn poly(&self) -> &BiPolyZ {
        &self.poly
    }

    pub fn eval(&self, x: &Rat, y: &Rat) -> Rat {
        self.poly.eval(x, y)
    }
}

impl fmt::Display for FubiniBiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.poly.display())
    }
}

static FUBINI: Memo<PolyZ> = Memo::new();

fn fubini_cached(n: usize) -> PolyZ {
    let p = FUBINI.get(n, |i, _| {
        let row = stirling_row(StirlingKind::Second, i);
        PolyZ::from_coeffs(
            row.iter()
                .enumerate()
                .map(|(k, s)| s * factorial(k))
                .collect(),
        )
    });
    (*p).clone()
}

/// `F_n(y) = sum_k {n k} k! y^k`.
pub fn fubini_poly(n: usize) -> FubiniPoly {
    FubiniPoly {
        n,
        poly: fubini_cached(n),
    }
}

/// `F_n(y)` by iterating `F_{m+1} = y d/dy[(1+y) F_m]` from `F_0 = 1`.
pub fn fubini_poly_recurrence(n: usize) -> FubiniPoly {
    let y = PolyZ::var();
    let one_plus_y = PolyZ::linear(BigInt::one(), BigInt::one());
    let mut f = PolyZ::one();
    for _ in 0..n {
        f = &y * &(&one_plus_y * &f).derivative();
    }
    FubiniPoly { n, poly: f }
}

/// The Fubini (ordered Bell) number `F_n = F_n(1)`.
pub fn fubini_number(n: usize) -> BigInt {
    fubini_cached(n).coeffs().iter().sum()
}

/// Number of ordered set partitions of an `n`-set by direct enumeration,
/// limited to `n <= DEFAULT_ENUMERATION_CAP`.
pub fn fubini_number_bruteforce(n: usize) -> Result<BigInt> {
    fubini_number_bruteforce_capped(n, DEFAULT_ENUMERATION_CAP)
}

pub fn fubini_number_bruteforce_capped(n: usize, cap: usize) -> Result<BigInt> {
    Ok(ordered_partition_counts(n, cap)?
        .into_iter()
        .map(BigInt::from)
        .sum())
}

/// `F_n(x;y) = sum_k C(n,k) F_k(y) x^(n-k)`.
pub fn fubini_two_var(n: usize) -> FubiniBiPoly {
    // row i holds the x^i coefficient C(n, n-i) F_{n-i}(y)
    let rows = (0..=n)
        .map(|i| fubini_cached(n - i).scale(&binomial(n, n - i)))
        .collect();
    FubiniBiPoly {
        n,
        poly: BiPolyZ::from_rows(rows),
    }
}

/// `F_n(y) = y sum_{k=1}^{n} {n k} (-1)^(n+k) k! (y+1)^(k-1)`, expanded. Requires `n >= 1`.
pub fn fubini_explicit_reflection(n: usize) -> Result<FubiniPoly> {
    if n == 0 {
        return Err(precondition(
            "fubini_explicit_reflection",
            "requires n >= 1",
        ));
    }
    let y_plus_one = PolyZ::linear(BigInt::one(), BigInt::one());
    let mut power = PolyZ::one();
    let mut sum = PolyZ::zero();
    for k in 1..=n {
        let mut c = stirling2(n, k) * factorial(k);
        if (n + k) % 2 == 1 {
            c = -c;
        }
        sum = &sum + &power.scale(&c);
        power = &power * &y_plus_one;
    }
    Ok(FubiniPoly {
        n,
        poly: &PolyZ::var() * &sum,
    })
}

fn check_not_minus_half(op: &'static str, y: &Rat) -> Result<Rat> {
    let two_y_plus_one = Rat::int(2) * y + Rat::one();
    if two_y_plus_one.is_zero() {
        return Err(precondition(op, "y = -1/2 is excluded"));
    }
    Ok(two_y_plus_one)
}

/// `sum_k {n k} k! y^k [2^(n+1) (y+1) y^k + (-1)^(k+1)] / (2y+1)^(k+1)`, which
/// equals `F_n(y)` for every `y != -1/2`.
pub fn fubini_explicit_split(n: usize, y: &Rat) -> Result<Rat> {
    let denom_base = check_not_minus_half("fubini_explicit_split", y)?;
    let two_pow = Rat::int(BigInt::from(2u32).pow(n as u32 + 1));
    let y_plus_one = y + Rat::one();
    let mut total = Rat::zero();
    for k in 0..=n {
        let s = stirling2(n, k);
        if s.is_zero() {
            continue;
        }
        let yk = y.pow(k as u32);
        let bracket = &two_pow * &y_plus_one * &yk + Rat::sign_pow(k + 1);
        let num = Rat::from(s * factorial(k)) * yk * bracket;
        total += num.checked_div(&denom_base.pow(k as u32 + 1))?;
    }
    Ok(total)
}

/// Symbolic form of [`fubini_explicit_split`]: clears the common denominator
/// `(2y+1)^(n+1)` and divides it back out exactly, yielding a polynomial.
/// Errors with [`Error::InexactDivision`] if the sum did not collapse.
pub fn fubini_explicit_split_poly(n: usize) -> Result<FubiniPoly> {
    let two_pow = BigInt::from(2u32).pow(n as u32 + 1);
    let y = PolyZ::var();
    let y_plus_one = PolyZ::linear(BigInt::one(), BigInt::one());
    let two_y_plus_one = PolyZ::linear(BigInt::from(2), BigInt::one());
    let mut cleared = PolyZ::zero();
    for k in 0..=n {
        let s = stirling2(n, k);
        if s.is_zero() {
            continue;
        }
        let yk = y.pow(k as u32);
        let bracket = &(&y_plus_one * &yk).scale(&two_pow)
            + &PolyZ::constant(if k % 2 == 0 {
                -BigInt::one()
            } else {
                BigInt::one()
            });
        let term = &(&yk * &bracket) * &two_y_plus_one.pow((n - k) as u32);
        cleared = &cleared + &term.scale(&(s * factorial(k)));
    }
    let divisor: PolyQ = two_y_plus_one.pow(n as u32 + 1).to_q();
    let poly = cleared
        .to_q()
        .div_exact(&divisor)?
        .to_z()
        .ok_or(Error::InexactDivision)?;
    Ok(FubiniPoly { n, poly })
}

/// `sum_k {n k} k! [2^(n+2) + (-1)^(k+1)] / 3^(k+1)`, equal to `F_n`.
pub fn fubini_number_split(n: usize) -> Rat {
    let two_pow = BigInt::from(2u32).pow(n as u32 + 2);
    (0..=n)
        .map(|k| {
            let bracket = &two_pow + if k % 2 == 0 { -1 } else { 1 };
            let num = stirling2(n, k) * factorial(k) * bracket;
            Rat::new(num, BigInt::from(3u32).pow(k as u32 + 1)).expect("nonzero power of 3")
        })
        .sum()
}

/// `sum_k (-1)^(n-k) {n k} k! 2^(k-1) [2^(n+k+1) + 1] / 3^(k+1)`, equal to `F_n`
/// for `n >= 1`.
pub fn fubini_number_split_neg2(n: usize) -> Result<Rat> {
    if n == 0 {
        return Err(precondition("fubini_number_split_neg2", "requires n >= 1"));
    }
    Ok((0..=n)
        .map(|k| {
            let s = stirling2(n, k);
            if s.is_zero() {
                return Rat::zero();
            }
            let bracket = BigInt::from(2u32).pow((n + k + 1) as u32) + 1;
            // 2^(k-1) with k >= 1 here since {n 0} = 0 for n >= 1
            let num = s * factorial(k) * BigInt::from(2u32).pow(k as u32 - 1) * bracket;
            let term = Rat::new(num, BigInt::from(3u32).pow(k as u32 + 1)).expect("nonzero");
            if (n - k).is_multiple_of(2) {
                term
            } else {
                -term
            }
        })
        .sum())
}

fn check_unit_disc(op: &'static str, x: &Rat) -> Result<()> {
    if x.abs() >= Rat::one() {
        return Err(precondition(op, format!("requires |x| < 1, got {x}")));
    }
    Ok(())
}

/// Exact partial sum `sum_{k=0}^{terms} k^n x^k` (with `0^0 = 1`). Requires `|x| < 1`.
pub fn geometric_moment_partial_sum(n: usize, x: &Rat, terms: usize) -> Result<Rat> {
    check_unit_disc("geometric_moment_partial_sum", x)?;
    let mut x_pow = Rat::one();
    let mut total = Rat::zero();
    for k in 0..=terms {
        let kn = if n == 0 {
            BigInt::one()
        } else {
            BigInt::from(k).pow(n as u32)
        };
        total += Rat::from(kn) * &x_pow;
        x_pow *= x;
    }
    Ok(total)
}

/// Limit of [`geometric_moment_partial_sum`]: `F_n(x/(1-x)) / (1-x)`.
pub fn geometric_moment_limit(n: usize, x: &Rat) -> Result<Rat> {
    check_unit_disc("geometric_moment_limit", x)?;
    let one_minus = Rat::one() - x;
    let arg = x.checked_div(&one_minus)?;
    fubini_poly(n).eval(&arg).checked_div(&one_minus)
}
