//! Bernoulli numbers (convention `B_1 = -1/2`), p-Bernoulli numbers, and the
//! integrals of Fubini polynomials over `[-1, 0]` that they evaluate.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::combinatorics::{binomial, factorial, stirling1_unsigned, stirling2};
use crate::error::{precondition, Result};
use crate::exact::Rat;
use crate::fubini::fubini_poly;
use crate::memo::Memo;

/// `B_0..=B_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BernoulliSeq {
    values: Vec<Rat>,
}

impl BernoulliSeq {
    pub fn up_to(n: usize) -> Self {
        BernoulliSeq {
            values: (0..=n).map(bernoulli).collect(),
        }
    }

    pub fn values(&self) -> &[Rat] {
        &self.values
    }

    pub fn get(&self, n: usize) -> Option<&Rat> {
        self.values.get(n)
    }
}

/// `B_{n,p}` for `0 <= n <= n_max`, `0 <= p <= p_max`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PBernoulliTable {
    grid: Vec<Vec<Rat>>,
}

impl PBernoulliTable {
    pub fn build(n_max: usize, p_max: usize) -> Self {
        let grid = (0..=n_max)
            .map(|n| (0..=p_max).map(|p| p_bernoulli(n, p)).collect())
            .collect();
        PBernoulliTable { grid }
    }

    pub fn get(&self, n: usize, p: usize) -> Option<&Rat> {
        self.grid.get(n)?.get(p)
    }

    pub fn rows(&self) -> &[Vec<Rat>] {
        &self.grid
    }
}

static BERNOULLI: Memo<Rat> = Memo::new();

/// `B_n = sum_k {n k} (-1)^k k! / (k+1)`.
pub fn bernoulli(n: usize) -> Rat {
    let b = BERNOULLI.get(n, |i, _| {
        (0..=i)
            .map(|k| {
                let num = stirling2(i, k) * factorial(k);
                Rat::sign_pow(k) * Rat::new(num, k + 1).expect("k + 1 > 0")
            })
            .sum()
    });
    (*b).clone()
}

/// `B_n` as the integral of `F_n` over `[-1, 0]`. Requires `n >= 1`.
pub fn bernoulli_via_integral(n: usize) -> Result<Rat> {
    if n == 0 {
        return Err(precondition("bernoulli_via_integral", "requires n >= 1"));
    }
    Ok(fubini_poly(n).poly().integrate(&-Rat::one(), &Rat::zero()))
}

fn require_n_positive(op: &'static str, n: usize) -> Result<()> {
    if n == 0 {
        return Err(precondition(op, "requires n >= 1"));
    }
    Ok(())
}

/// `integral_{-1}^{0} y^k F_n(y) dy`.
pub fn moment_integral_exact(k: usize, n: usize) -> Rat {
    fubini_poly(n)
        .poly()
        .shift(k)
        .integrate(&-Rat::one(), &Rat::zero())
}

/// `((-1)^k / k!) sum_{j=0}^{k} [k+1 j+1] B_{n+j}`.
pub fn moment_integral_formula(k: usize, n: usize) -> Rat {
    let sum: Rat = (0..=k)
        .map(|j| Rat::from(stirling1_unsigned(k + 1, j + 1)) * bernoulli(n + j))
        .sum();
    Rat::sign_pow(k) * sum.checked_div(&Rat::from(factorial(k))).expect("k! > 0")
}

/// `(exact integral of y^k F_n over [-1,0], Stirling/Bernoulli sum)`. Requires `n >= 1`.
pub fn fubini_moment_integral(k: usize, n: usize) -> Result<(Rat, Rat)> {
    require_n_positive("fubini_moment_integral", n)?;
    Ok((moment_integral_exact(k, n), moment_integral_formula(k, n)))
}

/// `(-1)^m sum_{j=0}^{m} C(m,j) B_{n+j}`.
pub fn product_integral_formula(m: usize, n: usize) -> Rat {
    let sum: Rat = (0..=m)
        .map(|j| Rat::from(binomial(m, j)) * bernoulli(n + j))
        .sum();
    Rat::sign_pow(m) * sum
}

/// `integral_{-1}^{0} F_m(y) F_n(y) dy`, exactly.
pub fn product_integral_exact(m: usize, n: usize) -> Rat {
    (fubini_poly(m).poly() * fubini_poly(n).poly()).integrate(&-Rat::one(), &Rat::zero())
}

/// `(exact integral of F_m F_n over [-1,0], (-1)^m sum_j C(m,j) B_{n+j})`. Requires `n >= 1`.
pub fn fubini_product_integral(m: usize, n: usize) -> Result<(Rat, Rat)> {
    require_n_positive("fubini_product_integral", n)?;
    Ok((product_integral_exact(m, n), product_integral_formula(m, n)))
}

/// `(sum_{k,j} {n k}{m j} (-1)^(k+j) k! j! / (k+j+1), (-1)^m sum_j C(m,j) B_{n+j})`.
/// Requires `n >= 1`.
pub fn double_sum_identity(n: usize, m: usize) -> Result<(Rat, Rat)> {
    require_n_positive("double_sum_identity", n)?;
    let mut lhs = Rat::zero();
    for k in 0..=n {
        let a = stirling2(n, k) * factorial(k);
        if a.is_zero() {
            continue;
        }
        for j in 0..=m {
            let b = stirling2(m, j) * factorial(j);
            if b.is_zero() {
                continue;
            }
            let term = Rat::new(&a * b, k + j + 1).expect("positive denominator");
            lhs += Rat::sign_pow(k + j) * term;
        }
    }
    Ok((lhs, product_integral_formula(m, n)))
}

/// `B_{n,p} = ((p+1)/p!) sum_{j=0}^{p} (-1)^j [p j] B_{n+j}`; `B_{n,0} = B_n`.
pub fn p_bernoulli(n: usize, p: usize) -> Rat {
    let sum: Rat = (0..=p)
        .map(|j| Rat::sign_pow(j) * Rat::from(stirling1_unsigned(p, j)) * bernoulli(n + j))
        .sum();
    sum * Rat::new(BigInt::from(p + 1), factorial(p)).expect("p! > 0")
}

fn explicit_sum(upper_stirling: usize, terms: usize, p: usize, sign_shift: usize) -> Rat {
    let sum: Rat = (0..=terms)
        .map(|k| {
            let num = stirling2(upper_stirling, k + 1) * factorial(k + 1);
            let sign = Rat::sign_pow(k + sign_shift);
            sign * Rat::new(num, k + p + 1).expect("positive denominator")
        })
        .sum();
    sum * Rat::frac(p as i64 + 1, p as i64)
}

fn check_explicit(op: &'static str, n: usize, p: usize) -> Result<()> {
    if n == 0 {
        return Err(precondition(op, "requires n >= 1"));
    }
    if p == 0 {
        return Err(precondition(op, "requires p >= 1"));
    }
    Ok(())
}

/// `B_{2n-1,p} = ((p+1)/p) sum_{k=0}^{2n-1} {2n k+1} (-1)^k (k+1)! / (k+p+1)`
/// for `n >= 1`, `p >= 1`.
pub fn p_bernoulli_odd_explicit(n: usize, p: usize) -> Result<Rat> {
    check_explicit("p_bernoulli_odd_explicit", n, p)?;
    Ok(explicit_sum(2 * n, 2 * n - 1, p, 0))
}

/// `B_{2n,p} = ((p+1)/p) sum_{k=0}^{2n} {2n+1 k+1} (-1)^(k+1) (k+1)! / (k+p+1)`
/// for `n >= 1`, `p >= 1`.
pub fn p_bernoulli_even_explicit(n: usize, p: usize) -> Result<Rat> {
    check_explicit("p_bernoulli_even_explicit", n, p)?;
    Ok(explicit_sum(2 * n + 1, 2 * n, p, 1))
}

/// `(integral of y^p F_n over [-1,0], parity-branch p-Bernoulli expression)`:
/// the second entry is `(-1)^p ((p+1)/(p+2)) B_{n-1,p+1}` for odd `n` and
/// `(-1)^(p+1) ((p+1)/(p+2)) B_{n-1,p+1}` for even `n`. Requires `n >= 2`.
pub fn fubini_moment_parity(p: usize, n: usize) -> Result<(Rat, Rat)> {
    if n < 2 {
        return Err(precondition("fubini_moment_parity", "requires n >= 2"));
    }
    let sign = if n % 2 == 1 {
        Rat::sign_pow(p)
    } else {
        Rat::sign_pow(p + 1)
    };
    let rhs = sign * Rat::frac(p as i64 + 1, p as i64 + 2) * p_bernoulli(n - 1, p + 1);
    Ok((moment_integral_exact(p, n), rhs))
}

/// Both sides of the shifted p-Bernoulli relation
/// `sum_{j=0}^{p} (-1)^(j+1) [p+1 j+1] B_{n+j} = ((p+1)!/(p+2)) B_{n-1,p+1}`, `n >= 1`.
pub fn p_bernoulli_shifted_relation(n: usize, p: usize) -> Result<(Rat, Rat)> {
    require_n_positive("p_bernoulli_shifted_relation", n)?;
    let lhs: Rat = (0..=p)
        .map(|j| {
            Rat::sign_pow(j + 1) * Rat::from(stirling1_unsigned(p + 1, j + 1)) * bernoulli(n + j)
        })
        .sum();
    let rhs = Rat::new(factorial(p + 1), p + 2).expect("positive") * p_bernoulli(n - 1, p + 1);
    Ok((lhs, rhs))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(s: &str) -> Rat {
        s.parse().unwrap()
    }

    /// Independent route: `sum_{k=0}^{n} C(n+1, k) B_k = 0` for `n >= 1`.
    fn bernoulli_by_recurrence(n_max: usize) -> Vec<Rat> {
        let mut b = vec![Rat::one()];
        for n in 1..=n_max {
            let s: Rat = (0..n).map(|k| Rat::from(binomial(n + 1, k)) * &b[k]).sum();
            b.push(-s * Rat::frac(1, n as i64 + 1));
        }
        b
    }

    #[test]
    fn bernoulli_examples() {
        assert_eq!(bernoulli(0), Rat::one());
        assert_eq!(bernoulli(1), r("-1/2"));
        assert_eq!(bernoulli(2), r("1/6"));
        assert_eq!(bernoulli(4), r("-1/30"));
        assert_eq!(bernoulli(12), r("-691/2730"));
    }

    #[test]
    fn bernoulli_matches_recurrence_oracle() {
        let oracle = bernoulli_by_recurrence(40);
        assert_eq!(BernoulliSeq::up_to(40).values(), &oracle[..]);
        for k in 1..=15 {
            assert!(bernoulli(2 * k + 1).is_zero());
        }
    }

    #[test]
    fn integral_route() {
        assert_eq!(bernoulli_via_integral(1).unwrap(), r("-1/2"));
        assert_eq!(bernoulli_via_integral(2).unwrap(), r("1/6"));
        assert_eq!(bernoulli_via_integral(3).unwrap(), Rat::zero());
        assert!(bernoulli_via_integral(0).is_err());
        for n in 1..=30 {
            assert_eq!(bernoulli_via_integral(n).unwrap(), bernoulli(n));
        }
    }

    #[test]
    fn moment_integral_examples() {
        assert_eq!(fubini_moment_integral(0, 2).unwrap(), (r("1/6"), r("1/6")));
        assert_eq!(fubini_moment_integral(1, 1).unwrap(), (r("1/3"), r("1/3")));
        assert_eq!(
            fubini_moment_integral(2, 1).unwrap(),
            (r("-1/4"), r("-1/4"))
        );
        assert!(fubini_moment_integral(2, 0).is_err());
    }

    #[test]
    fn product_integral_examples() {
        assert_eq!(fubini_product_integral(0, 2).unwrap(), (r("1/6"), r("1/6")));
        assert_eq!(fubini_product_integral(1, 1).unwrap(), (r("1/3"), r("1/3")));
        assert_eq!(
            fubini_product_integral(2, 1).unwrap(),
            (r("-1/6"), r("-1/6"))
        );
        assert!(fubini_product_integral(1, 0).is_err());
    }

    #[test]
    fn double_sum_examples() {
        assert_eq!(double_sum_identity(1, 1).unwrap(), (r("1/3"), r("1/3")));
        assert_eq!(double_sum_identity(2, 0).unwrap(), (r("1/6"), r("1/6")));
        assert_eq!(double_sum_identity(1, 2).unwrap(), (r("-1/6"), r("-1/6")));
        assert!(double_sum_identity(0, 2).is_err());
    }

    #[test]
    fn p_bernoulli_examples() {
        for n in 0..=20 {
            assert_eq!(p_bernoulli(n, 0), bernoulli(n));
        }
        assert_eq!(p_bernoulli(1, 1), r("-1/3"));
        assert_eq!(p_bernoulli(2, 2), r("-1/20"));
        let t = PBernoulliTable::build(4, 3);
        assert_eq!(t.get(2, 2), Some(&r("-1/20")));
        assert_eq!(t.get(5, 0), None);
    }

    #[test]
    fn explicit_p_bernoulli_examples() {
        assert_eq!(p_bernoulli_odd_explicit(1, 1).unwrap(), r("-1/3"));
        assert_eq!(p_bernoulli_odd_explicit(1, 2).unwrap(), r("-1/4"));
        assert_eq!(p_bernoulli_odd_explicit(2, 1).unwrap(), r("1/15"));
        assert_eq!(p_bernoulli(3, 1), r("1/15"));
        assert_eq!(p_bernoulli_even_explicit(1, 1).unwrap(), Rat::zero());
        assert_eq!(p_bernoulli_even_explicit(1, 2).unwrap(), r("-1/20"));
        assert_eq!(p_bernoulli_even_explicit(2, 1).unwrap(), Rat::zero());
        assert!(p_bernoulli_odd_explicit(1, 0).is_err());
        assert!(p_bernoulli_even_explicit(0, 2).is_err());
    }

    #[test]
    fn parity_examples() {
        assert_eq!(
            fubini_moment_parity(0, 3).unwrap(),
            (Rat::zero(), Rat::zero())
        );
        assert_eq!(fubini_moment_parity(1, 2).unwrap(), (r("-1/6"), r("-1/6")));
        let (a, b) = fubini_moment_parity(2, 3).unwrap();
        assert_eq!(a, b);
        assert!(fubini_moment_parity(0, 1).is_err());
    }

    #[test]
    fn shifted_relation() {
        for n in 1..=12 {
            for p in 0..=6 {
                let (a, b) = p_bernoulli_shifted_relation(n, p).unwrap();
                assert_eq!(a, b, "n={n} p={p}");
            }
        }
    }
}
