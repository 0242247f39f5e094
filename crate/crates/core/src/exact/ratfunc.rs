use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use super::poly::{Coeff, Poly, PolyQ};
use super::Rat;
use crate::error::{Error, Result};

/// Quotient of two rational polynomials in canonical form: coprime numerator and
/// denominator, monic denominator. Canonical form makes `==` structural.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: PolyQ,
    den: PolyQ,
}

impl RatFunc {
    /// Canonicalize `num / den`.
    pub fn new(num: PolyQ, den: PolyQ) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let g = num.gcd(&den);
        let num = num.div_exact(&g)?;
        let den = den.div_exact(&g)?;
        let lc = den.leading().expect("nonzero denominator").recip()?;
        Ok(RatFunc {
            num: num.scale(&lc),
            den: den.scale(&lc),
        })
    }

    pub fn from_poly<T: Coeff>(p: &Poly<T>) -> Self {
        RatFunc {
            num: p.to_q(),
            den: PolyQ::one(),
        }
    }

    pub fn constant(c: Rat) -> Self {
        Self::from_poly(&PolyQ::constant(c))
    }

    pub fn zero() -> Self {
        RatFunc {
            num: PolyQ::zero(),
            den: PolyQ::one(),
        }
    }

    pub fn one() -> Self {
        Self::constant(Rat::one())
    }

    pub fn var() -> Self {
        Self::from_poly(&PolyQ::var())
    }

    pub fn numerator(&self) -> &PolyQ {
        &self.num
    }

    pub fn denominator(&self) -> &PolyQ {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Exact value at `at`; a root of the canonical denominator is a genuine pole.
    pub fn eval(&self, at: &Rat) -> Result<Rat> {
        let d = self.den.eval(at);
        if d.is_zero() {
            return Err(Error::Pole(at.clone()));
        }
        self.num.eval(at).checked_div(&d)
    }

    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        RatFunc::new(self.den.clone(), self.num.clone())
    }

    pub fn checked_div(&self, rhs: &RatFunc) -> Result<Self> {
        Ok(self * &rhs.recip()?)
    }

    pub fn scale(&self, c: &Rat) -> Self {
        self * &RatFunc::constant(c.clone())
    }

    pub fn pow(&self, exp: u32) -> Self {
        // Powers of coprime polynomials stay coprime.
        RatFunc {
            num: self.num.pow(exp),
            den: self.den.pow(exp),
        }
    }

    /// `p(self)`: with `self = a/b` and `d = deg p`, returns
    /// `sum_k c_k a^k b^(d-k) / b^d`, canonicalized.
    pub fn substitute_into<T: Coeff>(&self, p: &Poly<T>) -> RatFunc {
        let Some(d) = p.degree() else {
            return RatFunc::zero();
        };
        let mut num = PolyQ::zero();
        let mut a_pow = PolyQ::one();
        for (k, c) in p.coeffs().iter().enumerate() {
            if !c.is_zero() {
                let term = &a_pow * &self.den.pow((d - k) as u32);
                num = &num + &term.scale(&c.to_rat());
            }
            a_pow = &a_pow * &self.num;
        }
        RatFunc::new(num, self.den.pow(d as u32)).expect("power of a nonzero denominator")
    }

    /// When the denominator is `(var - r)^d` for a rational `r`, returns `(r, d)`.
    pub fn denominator_as_power(&self) -> Option<(Rat, usize)> {
        let d = self.den.degree()?;
        if d == 0 {
            return None;
        }
        let r = -(self.den.coeff(d - 1) * Rat::frac(1, d as i64));
        (PolyQ::linear(Rat::one(), -r.clone()).pow(d as u32) == self.den).then_some((r, d))
    }

    /// Plain-text form such as `(-2λ)/(λ - 1)^2`.
    pub fn display_in(&self, var: &str) -> String {
        let num = self.num.display_in(var);
        if self.den.degree() == Some(0) {
            return num;
        }
        let den = match self.denominator_as_power() {
            Some((r, d)) => {
                let base = PolyQ::linear(Rat::one(), -r).display_in(var);
                if d == 1 {
                    format!("({base})")
                } else {
                    format!("({base})^{d}")
                }
            }
            None => format!("({})", self.den.display_in(var)),
        };
        format!("({num})/{den}")
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFunc[{}]", self.display_in("λ"))
    }
}

/// `num/den` with both parts as coefficient arrays.
impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl Serialize for RatFunc {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("RatFunc", 2)?;
        s.serialize_field("numerator", &self.num)?;
        s.serialize_field("denominator", &self.den)?;
        s.end()
    }
}

impl Add for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        RatFunc::new(num, &self.den * &rhs.den).expect("product of nonzero denominators")
    }
}

impl Sub for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self + &(-rhs)
    }
}

impl Mul for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        RatFunc::new(&self.num * &rhs.num, &self.den * &rhs.den)
            .expect("product of nonzero denominators")
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}
