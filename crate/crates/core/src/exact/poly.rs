use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use super::Rat;
use crate::error::{Error, Result};

/// Coefficient ring of a dense polynomial: arbitrary-precision integers or rationals.
pub trait Coeff:
    Clone
    + PartialEq
    + Eq
    + fmt::Debug
    + fmt::Display
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Send
    + Sync
{
    fn from_int(v: BigInt) -> Self;
    fn to_rat(&self) -> Rat;
    fn is_negative_coeff(&self) -> bool;
}

impl Coeff for BigInt {
    fn from_int(v: BigInt) -> Self {
        v
    }
    fn to_rat(&self) -> Rat {
        Rat::from(self)
    }
    fn is_negative_coeff(&self) -> bool {
        self.is_negative()
    }
}

impl Coeff for Rat {
    fn from_int(v: BigInt) -> Self {
        Rat::from(v)
    }
    fn to_rat(&self) -> Rat {
        self.clone()
    }
    fn is_negative_coeff(&self) -> bool {
        self.is_negative()
    }
}

/// Dense univariate polynomial; `coeffs[i]` is the coefficient of the `i`-th power.
///
/// Canonical form: no trailing zero coefficients, so the zero polynomial is the
/// empty list and `degree()` is `None` for it.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly<T> {
    coeffs: Vec<T>,
}

pub type PolyZ = Poly<BigInt>;
pub type PolyQ = Poly<Rat>;

impl<T: Coeff> Poly<T> {
    pub fn from_coeffs(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(T::one())
    }

    pub fn constant(c: T) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `c * var^deg`
    pub fn monomial(c: T, deg: usize) -> Self {
        let mut coeffs = vec![T::zero(); deg];
        coeffs.push(c);
        Self::from_coeffs(coeffs)
    }

    /// The variable itself.
    pub fn var() -> Self {
        Self::monomial(T::one(), 1)
    }

    /// `a * var + b`
    pub fn linear(a: T, b: T) -> Self {
        Self::from_coeffs(vec![b, a])
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    pub fn coeff(&self, i: usize) -> T {
        self.coeffs.get(i).cloned().unwrap_or_else(T::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&T> {
        self.coeffs.last()
    }

    /// Exact Horner evaluation at a rational point.
    pub fn eval(&self, at: &Rat) -> Rat {
        self.coeffs
            .iter()
            .rev()
            .fold(Rat::zero(), |acc, c| acc * at + c.to_rat())
    }

    /// Horner evaluation inside the coefficient ring.
    pub fn eval_in(&self, at: &T) -> T {
        self.coeffs
            .iter()
            .rev()
            .fold(T::zero(), |acc, c| acc * at.clone() + c.clone())
    }

    pub fn scale(&self, c: &T) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self::from_coeffs(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    /// Multiply by `var^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![T::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { coeffs }
    }

    pub fn derivative(&self) -> Self {
        Self::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.clone() * T::from_int(BigInt::from(i)))
                .collect(),
        )
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// `self(inner(var))` by Horner's scheme.
    pub fn compose(&self, inner: &Poly<T>) -> Self {
        self.coeffs.iter().rev().fold(Self::zero(), |acc, c| {
            &(&acc * inner) + &Self::constant(c.clone())
        })
    }

    /// `self(a * var + b)`
    pub fn compose_linear(&self, a: T, b: T) -> Self {
        self.compose(&Self::linear(a, b))
    }

    pub fn to_q(&self) -> PolyQ {
        Poly {
            coeffs: self.coeffs.iter().map(Coeff::to_rat).collect(),
        }
    }

    /// Exact definite integral via the termwise antiderivative.
    pub fn integrate(&self, lower: &Rat, upper: &Rat) -> Rat {
        let mut up = upper.clone();
        let mut lo = lower.clone();
        let mut total = Rat::zero();
        for (i, c) in self.coeffs.iter().enumerate() {
            let width = &up - &lo;
            total += c.to_rat() * width * Rat::frac(1, i as i64 + 1);
            up *= upper;
            lo *= lower;
        }
        total
    }

    /// Human-readable form in the given variable name, highest power first.
    pub fn display_in(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative_coeff();
            let mag = if neg { -c.clone() } else { c.clone() };
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let unit = mag.is_one();
            if i == 0 || !unit {
                out.push_str(&mag.to_string());
            }
            match i {
                0 => {}
                1 => out.push_str(var),
                _ => out.push_str(&format!("{var}^{i}")),
            }
        }
        out
    }
}

impl PolyQ {
    pub fn antiderivative(&self) -> PolyQ {
        let mut coeffs = vec![Rat::zero()];
        coeffs.extend(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| c * Rat::frac(1, i as i64 + 1)),
        );
        PolyQ::from_coeffs(coeffs)
    }

    /// Euclidean division: `self = q * divisor + r` with `deg r < deg divisor`.
    pub fn div_rem(&self, divisor: &PolyQ) -> Result<(PolyQ, PolyQ)> {
        let dd = divisor.degree().ok_or(Error::DivisionByZero)?;
        let lead_inv = divisor.coeffs[dd].recip()?;
        let mut rem = self.coeffs.clone();
        let Some(nd) = self.degree() else {
            return Ok((PolyQ::zero(), PolyQ::zero()));
        };
        if nd < dd {
            return Ok((PolyQ::zero(), self.clone()));
        }
        let mut quot = vec![Rat::zero(); nd - dd + 1];
        for i in (0..=nd - dd).rev() {
            let c = &rem[i + dd] * &lead_inv;
            if c.is_zero() {
                continue;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[i + j] -= &c * d;
            }
            quot[i] = c;
        }
        Ok((PolyQ::from_coeffs(quot), PolyQ::from_coeffs(rem)))
    }

    /// Exact quotient; errors if the division leaves a remainder.
    pub fn div_exact(&self, divisor: &PolyQ) -> Result<PolyQ> {
        let (q, r) = self.div_rem(divisor)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::InexactDivision)
        }
    }

    pub fn monic(&self) -> PolyQ {
        match self.leading() {
            None => PolyQ::zero(),
            Some(lc) => {
                let inv = lc.recip().expect("leading coefficient is nonzero");
                self.scale(&inv)
            }
        }
    }

    /// Monic gcd via a primitive pseudo-remainder sequence over the integers;
    /// `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &PolyQ) -> PolyQ {
        let (mut a, mut b) = (primitive_z(self), primitive_z(other));
        if a.len() < b.len() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_empty() {
            let r = primitive_z(&PolyQ::from_int_coeffs(pseudo_rem(a, &b)));
            a = b;
            b = r;
        }
        PolyQ::from_int_coeffs(a).monic()
    }

    fn from_int_coeffs(c: Vec<BigInt>) -> PolyQ {
        PolyQ::from_coeffs(c.into_iter().map(Rat::from).collect())
    }

    /// Integer polynomial if every coefficient is integral.
    pub fn to_z(&self) -> Option<PolyZ> {
        self.coeffs
            .iter()
            .map(Rat::to_integer)
            .collect::<Option<Vec<_>>>()
            .map(PolyZ::from_coeffs)
    }
}

/// Integer multiple of `p` with coprime coefficients; empty for zero.
fn primitive_z(p: &PolyQ) -> Vec<BigInt> {
    use num_integer::Integer;
    let lcm = p
        .coeffs
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = p
        .coeffs
        .iter()
        .map(|c| c.numer() * (&lcm / c.denom()))
        .collect();
    let content = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if content.is_zero() {
        return Vec::new();
    }
    ints.into_iter().map(|c| c / &content).collect()
}

/// Pseudo-remainder of `a` by a nonzero `b`, both trimmed.
fn pseudo_rem(mut a: Vec<BigInt>, b: &[BigInt]) -> Vec<BigInt> {
    let db = b.len() - 1;
    let lb = &b[db];
    while a.len() > db {
        let top = a.pop().expect("nonempty");
        let shift = a.len() - db;
        for c in a.iter_mut() {
            *c *= lb;
        }
        for (j, d) in b[..db].iter().enumerate() {
            a[shift + j] -= &top * d;
        }
        while a.last().is_some_and(Zero::is_zero) {
            a.pop();
        }
    }
    a
}

impl<T: Coeff> fmt::Debug for Poly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly[{}]", self.display_in("y"))
    }
}

/// Serializes as a JSON array of rational strings, lowest power first.
impl<T: Coeff> Serialize for Poly<T> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.coeffs.iter().map(|c| c.to_string()))
    }
}

impl<T: Coeff> fmt::Display for Poly<T> {
    /// Coefficient array, lowest power first: `["0","1","2"]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "\"{c}\"")?;
        }
        f.write_str("]")
    }
}

fn zip_with<T: Coeff>(a: &[T], b: &[T], op: impl Fn(T, T) -> T) -> Vec<T> {
    (0..a.len().max(b.len()))
        .map(|i| {
            let x = a.get(i).cloned().unwrap_or_else(T::zero);
            let y = b.get(i).cloned().unwrap_or_else(T::zero);
            op(x, y)
        })
        .collect()
}

impl<T: Coeff> Add for &Poly<T> {
    type Output = Poly<T>;
    fn add(self, rhs: &Poly<T>) -> Poly<T> {
        Poly::from_coeffs(zip_with(&self.coeffs, &rhs.coeffs, |x, y| x + y))
    }
}

impl<T: Coeff> Sub for &Poly<T> {
    type Output = Poly<T>;
    fn sub(self, rhs: &Poly<T>) -> Poly<T> {
        Poly::from_coeffs(zip_with(&self.coeffs, &rhs.coeffs, |x, y| x - y))
    }
}

impl<T: Coeff> Mul for &Poly<T> {
    type Output = Poly<T>;
    fn mul(self, rhs: &Poly<T>) -> Poly<T> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                let prod = a.clone() * b.clone();
                let slot = std::mem::replace(&mut out[i + j], T::zero());
                out[i + j] = slot + prod;
            }
        }
        Poly::from_coeffs(out)
    }
}

impl<T: Coeff> Neg for &Poly<T> {
    type Output = Poly<T>;
    fn neg(self) -> Poly<T> {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }
}

macro_rules! owned_poly_ops {
    ($($trait:ident $method:ident),*) => {$(
        impl<T: Coeff> $trait for Poly<T> {
            type Output = Poly<T>;
            fn $method(self, rhs: Poly<T>) -> Poly<T> {
                (&self).$method(&rhs)
            }
        }
        impl<T: Coeff> $trait<&Poly<T>> for Poly<T> {
            type Output = Poly<T>;
            fn $method(self, rhs: &Poly<T>) -> Poly<T> {
                (&self).$method(rhs)
            }
        }
    )*};
}

owned_poly_ops!(Add add, Sub sub, Mul mul);

impl<T: Coeff> Neg for Poly<T> {
    type Output = Poly<T>;
    fn neg(self) -> Poly<T> {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn z(cs: &[i64]) -> PolyZ {
        PolyZ::from_coeffs(cs.iter().map(|&c| BigInt::from(c)).collect())
    }

    fn q(s: &str) -> Rat {
        s.parse().unwrap()
    }

    #[test]
    fn canonical_zero_is_empty() {
        assert!(z(&[0, 0, 0]).coeffs().is_empty());
        assert_eq!(z(&[0, 0]).degree(), None);
        assert_eq!(z(&[1, 2, 0]).degree(), Some(1));
    }

    #[test]
    fn evaluation_examples() {
        assert_eq!(PolyZ::zero().eval(&q("7/3")), Rat::zero());
        assert_eq!(z(&[0, 1, 2]).eval(&Rat::one()), Rat::int(3));
    }

    #[test]
    fn integration_examples() {
        let (lo, hi) = (q("-1"), Rat::zero());
        assert_eq!(PolyZ::one().integrate(&lo, &hi), Rat::one());
        assert_eq!(z(&[0, 1, 2]).integrate(&lo, &hi), q("1/6"));
        assert_eq!(z(&[0, 0, 0, 1]).integrate(&lo, &hi), q("-1/4"));
    }

    #[test]
    fn ring_identity_equality() {
        let y = PolyZ::var();
        assert_eq!(y, PolyZ::var());
        let factored = &y * &z(&[1, 2]);
        assert_eq!(factored, z(&[0, 1, 2]));
    }

    #[test]
    fn display_forms() {
        assert_eq!(z(&[0, 1, 6, -6]).display_in("y"), "-6y^3 + 6y^2 + y");
        assert_eq!(z(&[-1]).display_in("y"), "-1");
        assert_eq!(z(&[0, 1, 2]).to_string(), r#"["0","1","2"]"#);
        assert_eq!(
            serde_json::to_string(&z(&[0, 1, 2])).unwrap(),
            r#"["0","1","2"]"#
        );
    }

    #[test]
    fn division_and_gcd() {
        // (λ-1)(λ+1) and 2(λ-1)
        let a = z(&[-1, 0, 1]).to_q();
        let b = z(&[-2, 2]).to_q();
        assert_eq!(a.gcd(&b), z(&[-1, 1]).to_q());
        let (quot, rem) = a.div_rem(&b).unwrap();
        assert!(rem.is_zero());
        assert_eq!(quot, PolyQ::from_coeffs(vec![q("1/2"), q("1/2")]));
        assert_eq!(a.div_rem(&PolyQ::zero()), Err(Error::DivisionByZero));
        assert_eq!(
            z(&[1, 0, 1]).to_q().div_exact(&b),
            Err(Error::InexactDivision)
        );
    }

    #[test]
    fn composition() {
        // (y+1)^2 composed from y^2
        let sq = z(&[0, 0, 1]);
        assert_eq!(
            sq.compose_linear(BigInt::one(), BigInt::one()),
            z(&[1, 2, 1])
        );
        assert_eq!(z(&[1, 1]).pow(3), z(&[1, 3, 3, 1]));
    }

    fn arb_poly() -> impl Strategy<Value = PolyQ> {
        prop::collection::vec((-50i64..50, 1i64..9), 0..6).prop_map(|cs| {
            PolyQ::from_coeffs(cs.into_iter().map(|(n, d)| Rat::frac(n, d)).collect())
        })
    }

    fn arb_point() -> impl Strategy<Value = Rat> {
        (-20i64..20, 1i64..9).prop_map(|(n, d)| Rat::frac(n, d))
    }

    proptest! {
        #[test]
        fn eval_commutes_with_product(p in arb_poly(), r in arb_poly(), y in arb_point()) {
            prop_assert_eq!((&p * &r).eval(&y), p.eval(&y) * r.eval(&y));
            prop_assert_eq!((&p + &r).eval(&y), p.eval(&y) + r.eval(&y));
        }

        #[test]
        fn integral_is_additive(p in arb_poly(), a in arb_point(), b in arb_point(), c in arb_point()) {
            prop_assert_eq!(p.integrate(&a, &b) + p.integrate(&b, &c), p.integrate(&a, &c));
        }

        #[test]
        fn antiderivative_matches_integrate(p in arb_poly(), a in arb_point(), b in arb_point()) {
            let big = p.antiderivative();
            prop_assert_eq!(big.eval(&b) - big.eval(&a), p.integrate(&a, &b));
            prop_assert_eq!(big.derivative(), p);
        }

        #[test]
        fn div_rem_reconstructs(p in arb_poly(), d in arb_poly()) {
            prop_assume!(!d.is_zero());
            let (quot, rem) = p.div_rem(&d).unwrap();
            prop_assert_eq!(&(&quot * &d) + &rem, p);
            prop_assert!(rem.degree() < d.degree());
        }

        #[test]
        fn gcd_divides_and_keeps_common_factor(p in arb_poly(), r in arb_poly(), c in arb_poly()) {
            prop_assume!(!c.is_zero() && !(p.is_zero() && r.is_zero()));
            let (a, b) = (&p * &c, &r * &c);
            let g = a.gcd(&b);
            prop_assert_eq!(g.leading(), Some(&Rat::one()));
            prop_assert!(a.div_exact(&g).is_ok());
            prop_assert!(b.div_exact(&g).is_ok());
            prop_assert!(g.div_exact(&c).is_ok());
        }
    }
}
