use std::fmt;

use super::rational::Rat;
use super::scalar::ParamScalar;
use super::Coeff;
use crate::error::Result;

/// How the parameters (q,t) enter a computation.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ParamMode {
    Generic,
    Inverted,
    Specialized { q: Rat, t: Rat },
}

impl fmt::Display for ParamMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParamMode::Generic => write!(f, "generic"),
            ParamMode::Inverted => write!(f, "inverted"),
            ParamMode::Specialized { q, t } => write!(f, "q={q},t={t}"),
        }
    }
}

/// A choice of coefficient field together with the values of q and t in it.
pub trait Params: Clone + Send + Sync + fmt::Debug + 'static {
    type F: Coeff;

    fn q(&self) -> Self::F;
    fn t(&self) -> Self::F;

    /// `q^a t^b`; fails only if a specialized parameter is zero.
    fn monomial(&self, a: i64, b: i64) -> Result<Self::F> {
        Ok(self.q().powi(a)? * &self.t().powi(b)?)
    }

    /// The same field with (q,t) replaced by (1/q, 1/t).
    fn inverted(&self) -> Self;

    fn mode(&self) -> ParamMode;
}

/// Coefficients in Q(q,t); `inverted` substitutes q -> 1/q, t -> 1/t.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Symbolic {
    pub inverted: bool,
}

impl Symbolic {
    pub fn generic() -> Symbolic {
        Symbolic { inverted: false }
    }
}

impl Params for Symbolic {
    type F = ParamScalar;

    fn q(&self) -> ParamScalar {
        ParamScalar::monomial(if self.inverted { -1 } else { 1 }, 0)
    }

    fn t(&self) -> ParamScalar {
        ParamScalar::monomial(0, if self.inverted { -1 } else { 1 })
    }

    fn monomial(&self, a: i64, b: i64) -> Result<ParamScalar> {
        Ok(if self.inverted { ParamScalar::monomial(-a, -b) } else { ParamScalar::monomial(a, b) })
    }

    fn inverted(&self) -> Symbolic {
        Symbolic { inverted: !self.inverted }
    }

    fn mode(&self) -> ParamMode {
        if self.inverted {
            ParamMode::Inverted
        } else {
            ParamMode::Generic
        }
    }
}

/// Coefficients in Q after fixing (q,t) to rational values.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Specialized {
    pub q: Rat,
    pub t: Rat,
}

impl Params for Specialized {
    type F = Rat;

    fn q(&self) -> Rat {
        self.q.clone()
    }

    fn t(&self) -> Rat {
        self.t.clone()
    }

    fn inverted(&self) -> Specialized {
        Specialized {
            q: self.q.try_inv().expect("nonzero q"),
            t: self.t.try_inv().expect("nonzero t"),
        }
    }

    fn mode(&self) -> ParamMode {
        ParamMode::Specialized { q: self.q.clone(), t: self.t.clone() }
    }
}
