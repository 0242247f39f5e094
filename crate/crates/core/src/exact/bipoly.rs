use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Serialize, Serializer};

use super::poly::{Coeff, Poly};
use super::Rat;
use crate::combinatorics::binomial;

/// Dense polynomial in `x` and `y`, stored as one `y`-polynomial per power of `x`.
/// Trailing zero rows are trimmed, so the zero polynomial has no rows.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BiPoly<T> {
    rows: Vec<Poly<T>>,
}

pub type BiPolyZ = BiPoly<BigInt>;

impl<T: Coeff> BiPoly<T> {
    /// `rows[i]` is the coefficient of `x^i`, a polynomial in `y`.
    pub fn from_rows(mut rows: Vec<Poly<T>>) -> Self {
        while rows.last().is_some_and(Poly::is_zero) {
            rows.pop();
        }
        BiPoly { rows }
    }

    /// From a grid `c[i][j]` = coefficient of `x^i y^j`.
    pub fn from_grid(grid: Vec<Vec<T>>) -> Self {
        Self::from_rows(grid.into_iter().map(Poly::from_coeffs).collect())
    }

    pub fn zero() -> Self {
        BiPoly { rows: Vec::new() }
    }

    pub fn x() -> Self {
        Self::from_rows(vec![Poly::zero(), Poly::one()])
    }

    pub fn y() -> Self {
        Self::from_y(Poly::var())
    }

    /// Embed a polynomial in `y` alone.
    pub fn from_y(p: Poly<T>) -> Self {
        Self::from_rows(vec![p])
    }

    pub fn rows(&self) -> &[Poly<T>] {
        &self.rows
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn coeff(&self, i: usize, j: usize) -> T {
        self.rows.get(i).map_or_else(T::zero, |r| r.coeff(j))
    }

    pub fn degree_x(&self) -> Option<usize> {
        self.rows.len().checked_sub(1)
    }

    pub fn degree_y(&self) -> Option<usize> {
        self.rows.iter().filter_map(Poly::degree).max()
    }

    pub fn total_degree(&self) -> Option<usize> {
        self.rows
            .iter()
            .enumerate()
            .filter_map(|(i, r)| r.degree().map(|d| i + d))
            .max()
    }

    /// Rectangular coefficient grid `c[i][j]`, zero padded.
    pub fn grid(&self) -> Vec<Vec<T>> {
        let width = self.degree_y().map_or(0, |d| d + 1);
        self.rows
            .iter()
            .map(|r| (0..width).map(|j| r.coeff(j)).collect())
            .collect()
    }

    pub fn eval(&self, x: &Rat, y: &Rat) -> Rat {
        self.rows
            .iter()
            .rev()
            .fold(Rat::zero(), |acc, row| acc * x + row.eval(y))
    }

    /// Substitute a ring constant for `x`, leaving a polynomial in `y`.
    pub fn eval_x(&self, x: &T) -> Poly<T> {
        self.rows
            .iter()
            .rev()
            .fold(Poly::zero(), |acc, row| &acc.scale(x) + row)
    }

    /// `p(a*x + b, y)`
    pub fn substitute_x_linear(&self, a: &T, b: &T) -> Self {
        let mut out = vec![Poly::zero(); self.rows.len()];
        for (i, row) in self.rows.iter().enumerate() {
            if row.is_zero() {
                continue;
            }
            for (j, slot) in out.iter_mut().enumerate().take(i + 1) {
                let c = T::from_int(binomial(i, j)) * pow(a, j) * pow(b, i - j);
                *slot = &*slot + &row.scale(&c);
            }
        }
        Self::from_rows(out)
    }

    /// `p(x, a*y + b)`
    pub fn substitute_y_linear(&self, a: &T, b: &T) -> Self {
        let inner = Poly::linear(a.clone(), b.clone());
        Self::from_rows(self.rows.iter().map(|r| r.compose(&inner)).collect())
    }

    pub fn scale(&self, c: &T) -> Self {
        Self::from_rows(self.rows.iter().map(|r| r.scale(c)).collect())
    }

    pub fn display(&self) -> String {
        let mut terms = Vec::new();
        for (i, row) in self.rows.iter().enumerate().rev() {
            for (j, c) in row.coeffs().iter().enumerate().rev() {
                if c.is_zero() {
                    continue;
                }
                let mut mono = String::new();
                for (var, e) in [("x", i), ("y", j)] {
                    match e {
                        0 => {}
                        1 => mono.push_str(var),
                        _ => mono.push_str(&format!("{var}^{e}")),
                    }
                }
                terms.push((c.clone(), mono));
            }
        }
        if terms.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (c, mono) in terms {
            let neg = c.is_negative_coeff();
            let mag = if neg { -c } else { c };
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            if mono.is_empty() || !mag.is_one() {
                out.push_str(&mag.to_string());
            }
            out.push_str(&mono);
        }
        out
    }
}

fn pow<T: Coeff>(base: &T, e: usize) -> T {
    (0..e).fold(T::one(), |acc, _| acc * base.clone())
}

impl<T: Coeff> fmt::Debug for BiPoly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BiPoly[{}]", self.display())
    }
}

/// Rectangular grid of rational strings; row `i` is the `x^i` coefficient.
impl<T: Coeff> fmt::Display for BiPoly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, row) in self.grid().iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            f.write_str("[")?;
            for (j, c) in row.iter().enumerate() {
                if j > 0 {
                    f.write_str(",")?;
                }
                write!(f, "\"{c}\"")?;
            }
            f.write_str("]")?;
        }
        f.write_str("]")
    }
}

impl<T: Coeff> Serialize for BiPoly<T> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let grid: Vec<Vec<String>> = self
            .grid()
            .into_iter()
            .map(|row| row.into_iter().map(|c| c.to_string()).collect())
            .collect();
        grid.serialize(serializer)
    }
}

impl<T: Coeff> Add for &BiPoly<T> {
    type Output = BiPoly<T>;
    fn add(self, rhs: &BiPoly<T>) -> BiPoly<T> {
        let n = self.rows.len().max(rhs.rows.len());
        let zero = Poly::zero();
        BiPoly::from_rows(
            (0..n)
                .map(|i| self.rows.get(i).unwrap_or(&zero) + rhs.rows.get(i).unwrap_or(&zero))
                .collect(),
        )
    }
}

impl<T: Coeff> Sub for &BiPoly<T> {
    type Output = BiPoly<T>;
    fn sub(self, rhs: &BiPoly<T>) -> BiPoly<T> {
        self + &(-rhs)
    }
}

impl<T: Coeff> Neg for &BiPoly<T> {
    type Output = BiPoly<T>;
    fn neg(self) -> BiPoly<T> {
        BiPoly {
            rows: self.rows.iter().map(|r| -r).collect(),
        }
    }
}

impl<T: Coeff> Mul for &BiPoly<T> {
    type Output = BiPoly<T>;
    fn mul(self, rhs: &BiPoly<T>) -> BiPoly<T> {
        if self.is_zero() || rhs.is_zero() {
            return BiPoly::zero();
        }
        let mut out = vec![Poly::zero(); self.rows.len() + rhs.rows.len() - 1];
        for (i, a) in self.rows.iter().enumerate() {
            for (j, b) in rhs.rows.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        BiPoly::from_rows(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;
    use proptest::prelude::*;

    fn bz(grid: &[&[i64]]) -> BiPolyZ {
        BiPoly::from_grid(
            grid.iter()
                .map(|r| r.iter().map(|&c| BigInt::from(c)).collect())
                .collect(),
        )
    }

    #[test]
    fn linear_evaluation() {
        let p = &BiPolyZ::x() + &BiPolyZ::y();
        assert_eq!(p.eval(&Rat::one(), &Rat::frac(3, 7)), Rat::frac(10, 7));
        assert_eq!(BiPolyZ::zero().eval(&Rat::one(), &Rat::one()), Rat::zero());
    }

    #[test]
    fn trimming_and_grid() {
        let p = bz(&[&[0, 1, 2], &[0, 2], &[1], &[], &[0, 0]]);
        assert_eq!(p.degree_x(), Some(2));
        assert_eq!(p.total_degree(), Some(2));
        assert_eq!(
            p.to_string(),
            r#"[["0","1","2"],["0","2","0"],["1","0","0"]]"#
        );
        assert_eq!(p.display(), "x^2 + 2xy + 2y^2 + y");
    }

    #[test]
    fn shift_in_x() {
        // (x + 1)^2 = x^2 + 2x + 1
        let sq = bz(&[&[], &[], &[1]]);
        let one = BigInt::one();
        assert_eq!(sq.substitute_x_linear(&one, &one), bz(&[&[1], &[2], &[1]]));
    }

    fn arb_bi() -> impl Strategy<Value = BiPolyZ> {
        prop::collection::vec(prop::collection::vec(-9i64..9, 0..4), 0..4).prop_map(|g| {
            BiPoly::from_grid(
                g.into_iter()
                    .map(|r| r.into_iter().map(BigInt::from).collect())
                    .collect(),
            )
        })
    }

    proptest! {
        #[test]
        fn substitution_agrees_with_evaluation(p in arb_bi(), a in -3i64..3, b in -3i64..3, xn in -5i64..5, yn in -5i64..5) {
            let (x, y) = (Rat::frac(xn, 3), Rat::frac(yn, 2));
            let (ab, bb) = (BigInt::from(a), BigInt::from(b));
            let sx = p.substitute_x_linear(&ab, &bb);
            prop_assert_eq!(sx.eval(&x, &y), p.eval(&(Rat::int(a) * &x + Rat::int(b)), &y));
            let sy = p.substitute_y_linear(&ab, &bb);
            prop_assert_eq!(sy.eval(&x, &y), p.eval(&x, &(Rat::int(a) * &y + Rat::int(b))));
            prop_assert_eq!(p.eval_x(&ab).eval(&y), p.eval(&Rat::int(a), &y));
        }

        #[test]
        fn product_evaluates_pointwise(p in arb_bi(), q in arb_bi(), xn in -5i64..5, yn in -5i64..5) {
            let (x, y) = (Rat::frac(xn, 2), Rat::frac(yn, 3));
            prop_assert_eq!((&p * &q).eval(&x, &y), p.eval(&x, &y) * q.eval(&x, &y));
        }
    }
}
