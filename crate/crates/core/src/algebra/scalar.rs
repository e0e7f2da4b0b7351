use std::fmt;

use super::bipoly::BiPoly;
use super::int::Int;
use super::rational::Rat;
use super::{forward_ring_ops, Coeff};
use crate::error::{Error, Result};

/// Element of Q(q,t) in canonical form: numerator and denominator are
/// coprime integer polynomials and the denominator's graded-lex leading
/// coefficient is positive. Canonical form makes `==` exact equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ParamScalar {
    num: BiPoly,
    den: BiPoly,
}

impl ParamScalar {
    /// Reduces `num/den` to canonical form.
    pub fn new(num: BiPoly, den: BiPoly) -> Result<ParamScalar> {
        if den.is_zero() {
            return Err(Error::DivisionByZero(format!("({num})/0")));
        }
        if num.is_zero() {
            return Ok(ParamScalar::zero_value());
        }
        let g = num.gcd(&den);
        let (mut n, mut d) = if g.is_one() {
            (num, den)
        } else {
            (num.div_exact(&g).expect("gcd divides"), den.div_exact(&g).expect("gcd divides"))
        };
        if d.leading().is_some_and(|(_, c)| c.is_negative()) {
            n = n.neg();
            d = d.neg();
        }
        Ok(ParamScalar { num: n, den: d })
    }

    pub fn from_poly(p: BiPoly) -> ParamScalar {
        ParamScalar { num: p, den: BiPoly::one() }
    }

    fn zero_value() -> ParamScalar {
        ParamScalar { num: BiPoly::zero(), den: BiPoly::one() }
    }

    pub fn num(&self) -> &BiPoly {
        &self.num
    }

    pub fn den(&self) -> &BiPoly {
        &self.den
    }

    pub fn q() -> ParamScalar {
        ParamScalar::from_poly(BiPoly::q())
    }

    pub fn t() -> ParamScalar {
        ParamScalar::from_poly(BiPoly::t())
    }

    /// `q^a t^b` for any integer exponents.
    pub fn monomial(a: i64, b: i64) -> ParamScalar {
        let up = BiPoly::monomial(a.max(0) as u32, b.max(0) as u32, Int::ONE);
        let down = BiPoly::monomial((-a).max(0) as u32, (-b).max(0) as u32, Int::ONE);
        ParamScalar { num: up, den: down }
    }

    /// Equality by cross-multiplication, independent of canonical form.
    pub fn eq_cross(&self, o: &ParamScalar) -> bool {
        self.num.mul(&o.den) == o.num.mul(&self.den)
    }

    fn add_ref(&self, o: &ParamScalar) -> ParamScalar {
        self.combine(o, false)
    }

    fn sub_ref(&self, o: &ParamScalar) -> ParamScalar {
        self.combine(o, true)
    }

    fn combine(&self, o: &ParamScalar, negate: bool) -> ParamScalar {
        let on = if negate { o.num.neg() } else { o.num.clone() };
        if o.num.is_zero() {
            return self.clone();
        }
        if self.num.is_zero() {
            return ParamScalar { num: on, den: o.den.clone() };
        }
        if self.den == o.den {
            let n = self.num.add(&on);
            if self.den.is_one() {
                return ParamScalar { num: n, den: BiPoly::one() };
            }
            return ParamScalar::new(n, self.den.clone()).expect("nonzero denominator");
        }
        if self.den.is_one() {
            return ParamScalar { num: self.num.mul(&o.den).add(&on), den: o.den.clone() };
        }
        if o.den.is_one() {
            return ParamScalar { num: self.num.add(&on.mul(&self.den)), den: self.den.clone() };
        }
        let g = self.den.gcd(&o.den);
        if g.is_one() {
            let n = self.num.mul(&o.den).add(&on.mul(&self.den));
            return ParamScalar { num: n, den: self.den.mul(&o.den) };
        }
        let d1 = self.den.div_exact(&g).expect("gcd divides");
        let d2 = o.den.div_exact(&g).expect("gcd divides");
        let n = self.num.mul(&d2).add(&on.mul(&d1));
        if n.is_zero() {
            return ParamScalar::zero_value();
        }
        let g2 = n.gcd(&g);
        if g2.is_one() {
            return ParamScalar { num: n, den: d1.mul(&o.den) };
        }
        ParamScalar {
            num: n.div_exact(&g2).expect("gcd divides"),
            den: d1.mul(&o.den.div_exact(&g2).expect("gcd divides")),
        }
    }

    fn mul_ref(&self, o: &ParamScalar) -> ParamScalar {
        if self.num.is_zero() || o.num.is_zero() {
            return ParamScalar::zero_value();
        }
        if self.den.is_one() && o.den.is_one() {
            return ParamScalar { num: self.num.mul(&o.num), den: BiPoly::one() };
        }
        let (n1, d2) = cancel(&self.num, &o.den);
        let (n2, d1) = cancel(&o.num, &self.den);
        ParamScalar { num: n1.mul(&n2), den: d1.mul(&d2) }
    }

    fn neg_ref(&self) -> ParamScalar {
        ParamScalar { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn inv(&self) -> Result<ParamScalar> {
        if self.num.is_zero() {
            return Err(Error::DivisionByZero("inverse of 0".into()));
        }
        let (mut n, mut d) = (self.den.clone(), self.num.clone());
        if d.leading().is_some_and(|(_, c)| c.is_negative()) {
            n = n.neg();
            d = d.neg();
        }
        Ok(ParamScalar { num: n, den: d })
    }

    /// `c(q,t) -> c(1/q, 1/t)`, re-canonicalized.
    pub fn invert_params(&self) -> ParamScalar {
        if self.num.is_zero() {
            return self.clone();
        }
        let (rn, nq, nt) = self.num.reversed();
        let (rd, dq, dt) = self.den.reversed();
        // num(1/q,1/t) = rn / (q^nq t^nt), likewise for den.
        let n = rn.shift(dq, dt);
        let d = rd.shift(nq, nt);
        let mq = n.monomial_content();
        let md = d.monomial_content();
        let (cq, ct) = (mq.0.min(md.0), mq.1.min(md.1));
        ParamScalar::new(n.div_monomial(cq, ct), d.div_monomial(cq, ct)).expect("nonzero denominator")
    }

    /// Substitutes `t = q^k`; fails when the denominator vanishes identically.
    pub fn specialize_t_power(&self, k: u32) -> Result<ParamScalar> {
        let d = self.den.substitute_t_power(k);
        if d.is_zero() {
            return Err(Error::DivisionByZero(format!("denominator {} at t=q^{k}", self.den)));
        }
        ParamScalar::new(self.num.substitute_t_power(k), d)
    }

    /// Exact value at a rational point.
    pub fn eval(&self, q: &Rat, t: &Rat) -> Result<Rat> {
        let n = eval_bipoly(&self.num, q, t);
        let d = eval_bipoly(&self.den, q, t);
        if d.is_zero() {
            return Err(Error::DivisionByZero(format!("denominator {} at q={q}, t={t}", self.den)));
        }
        n.try_div(&d)
    }

    fn is_single_term(p: &BiPoly) -> bool {
        p.len() == 1
    }

    fn wrap(p: &BiPoly) -> String {
        if p.len() > 1 {
            format!("({p})")
        } else {
            p.to_string()
        }
    }
}

fn cancel(n: &BiPoly, d: &BiPoly) -> (BiPoly, BiPoly) {
    if d.is_one() || n.is_one() {
        return (n.clone(), d.clone());
    }
    let g = n.gcd(d);
    if g.is_one() {
        (n.clone(), d.clone())
    } else {
        (n.div_exact(&g).expect("gcd divides"), d.div_exact(&g).expect("gcd divides"))
    }
}

pub(crate) fn eval_bipoly(p: &BiPoly, q: &Rat, t: &Rat) -> Rat {
    let mut acc = Rat::zero();
    for ((a, b), c) in p.terms() {
        let term = Rat::from_int_big(c) * &q.pow_u(*a) * &t.pow_u(*b);
        acc = acc + &term;
    }
    acc
}

forward_ring_ops!(ParamScalar);

impl Coeff for ParamScalar {
    fn zero() -> Self {
        ParamScalar::zero_value()
    }
    fn one() -> Self {
        ParamScalar::from_poly(BiPoly::one())
    }
    fn from_int(v: i64) -> Self {
        ParamScalar::from_poly(BiPoly::constant(Int::from(v)))
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }
    fn try_inv(&self) -> Result<Self> {
        self.inv()
    }
    fn size_hint(&self) -> usize {
        self.num.len() + self.den.len()
    }
    fn term_text(&self) -> (bool, String) {
        let single = ParamScalar::is_single_term(&self.num);
        let neg = single && self.num.leading().is_some_and(|(_, c)| c.is_negative());
        let num = if neg { self.num.neg() } else { self.num.clone() };
        let text = if self.den.is_one() {
            ParamScalar::wrap(&num)
        } else {
            format!("{}/{}", ParamScalar::wrap(&num), ParamScalar::wrap(&self.den))
        };
        (neg, text)
    }
    fn text_pair(&self) -> (String, String) {
        (self.num.to_string(), self.den.to_string())
    }
}

impl fmt::Display for ParamScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", ParamScalar::wrap(&self.num), ParamScalar::wrap(&self.den))
        }
    }
}

impl fmt::Debug for ParamScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
