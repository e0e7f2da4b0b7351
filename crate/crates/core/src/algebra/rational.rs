use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::int::Int;
use super::{forward_ring_ops, Coeff};
use crate::error::{Error, Result};

/// Exact rational number; the coefficient field once (q,t) are fixed.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Rat(pub BigRational);

impl Rat {
    pub fn new(num: i64, den: i64) -> Result<Rat> {
        if den == 0 {
            return Err(Error::DivisionByZero(format!("{num}/0")));
        }
        Ok(Rat(BigRational::new(BigInt::from(num), BigInt::from(den))))
    }

    pub fn from_int_big(c: &Int) -> Rat {
        Rat(BigRational::from_integer(c.to_big()))
    }

    pub fn zero() -> Rat {
        Rat(BigRational::zero())
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn pow_u(&self, e: u32) -> Rat {
        let mut acc = BigRational::one();
        for _ in 0..e {
            acc *= &self.0;
        }
        Rat(acc)
    }

    fn add_ref(&self, o: &Rat) -> Rat {
        Rat(&self.0 + &o.0)
    }

    fn sub_ref(&self, o: &Rat) -> Rat {
        Rat(&self.0 - &o.0)
    }

    fn mul_ref(&self, o: &Rat) -> Rat {
        Rat(&self.0 * &o.0)
    }

    fn neg_ref(&self) -> Rat {
        Rat(-&self.0)
    }
}

forward_ring_ops!(Rat);

impl Coeff for Rat {
    fn zero() -> Self {
        Rat::zero()
    }
    fn one() -> Self {
        Rat(BigRational::one())
    }
    fn from_int(v: i64) -> Self {
        Rat(BigRational::from_integer(BigInt::from(v)))
    }
    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
    fn is_one(&self) -> bool {
        self.0.is_one()
    }
    fn try_inv(&self) -> Result<Self> {
        if self.0.is_zero() {
            return Err(Error::DivisionByZero("inverse of 0".into()));
        }
        Ok(Rat(self.0.recip()))
    }
    fn term_text(&self) -> (bool, String) {
        (self.0.is_negative(), Rat(self.0.abs()).to_string())
    }
    fn text_pair(&self) -> (String, String) {
        (self.0.numer().to_string(), self.0.denom().to_string())
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for Rat {
    type Err = Error;
    fn from_str(s: &str) -> Result<Rat> {
        let s = s.trim();
        let bad = || Error::Parse(format!("not a rational number: {s:?}"));
        let (n, d) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s, "1"),
        };
        let n: BigInt = n.parse().map_err(|_| bad())?;
        let d: BigInt = d.parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(Error::DivisionByZero(s.to_string()));
        }
        Ok(Rat(BigRational::new(n, d)))
    }
}
