//! Integer polynomials in the two parameters q and t.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use super::gcd::{self, modp, Dense, GcdDomain};
use super::int::Int;

/// Exponent pair `(q, t)`.
pub type Exp2 = (u32, u32);

/// Sparse polynomial in Z[q, t]. Terms are kept sorted by exponent pair with
/// no zero coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct BiPoly {
    terms: Vec<(Exp2, Int)>,
}

/// Graded lexicographic comparison with q before t.
pub fn grlex(a: &Exp2, b: &Exp2) -> Ordering {
    (a.0 + a.1).cmp(&(b.0 + b.1)).then(a.0.cmp(&b.0))
}

impl BiPoly {
    pub fn zero() -> BiPoly {
        BiPoly { terms: Vec::new() }
    }

    pub fn one() -> BiPoly {
        BiPoly::constant(Int::ONE)
    }

    pub fn constant(c: Int) -> BiPoly {
        BiPoly::monomial(0, 0, c)
    }

    pub fn monomial(q: u32, t: u32, c: Int) -> BiPoly {
        if c.is_zero() {
            BiPoly::zero()
        } else {
            BiPoly { terms: vec![((q, t), c)] }
        }
    }

    pub fn q() -> BiPoly {
        BiPoly::monomial(1, 0, Int::ONE)
    }

    pub fn t() -> BiPoly {
        BiPoly::monomial(0, 1, Int::ONE)
    }

    /// Builds from arbitrary `(exponent, coefficient)` pairs, combining
    /// duplicates.
    pub fn from_terms<I: IntoIterator<Item = (Exp2, Int)>>(it: I) -> BiPoly {
        let mut v: Vec<(Exp2, Int)> = it.into_iter().collect();
        v.sort_by(|a, b| a.0.cmp(&b.0));
        let mut out: Vec<(Exp2, Int)> = Vec::with_capacity(v.len());
        for (e, c) in v {
            match out.last_mut() {
                Some((le, lc)) if *le == e => *lc = &*lc + &c,
                _ => out.push((e, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        BiPoly { terms: out }
    }

    pub fn terms(&self) -> &[(Exp2, Int)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == (0, 0) && self.terms[0].1.is_one()
    }

    pub fn as_constant(&self) -> Option<&Int> {
        match self.terms.as_slice() {
            [] => None,
            [((0, 0), c)] => Some(c),
            _ => None,
        }
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || self.as_constant().is_some()
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree_q(&self) -> u32 {
        self.terms.iter().map(|(e, _)| e.0).max().unwrap_or(0)
    }

    pub fn degree_t(&self) -> u32 {
        self.terms.iter().map(|(e, _)| e.1).max().unwrap_or(0)
    }

    /// Leading term under graded lex, q before t.
    pub fn leading(&self) -> Option<&(Exp2, Int)> {
        self.terms.iter().max_by(|a, b| grlex(&a.0, &b.0))
    }

    pub fn neg(&self) -> BiPoly {
        BiPoly { terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect() }
    }

    pub fn add(&self, o: &BiPoly) -> BiPoly {
        self.merge(o, false)
    }

    pub fn sub(&self, o: &BiPoly) -> BiPoly {
        self.merge(o, true)
    }

    fn merge(&self, o: &BiPoly, negate: bool) -> BiPoly {
        let mut out = Vec::with_capacity(self.terms.len() + o.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &o.terms);
        while i < a.len() || j < b.len() {
            let ord = match (a.get(i), b.get(j)) {
                (Some(x), Some(y)) => x.0.cmp(&y.0),
                (Some(_), None) => Ordering::Less,
                _ => Ordering::Greater,
            };
            match ord {
                Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    let c = if negate { -&b[j].1 } else { b[j].1.clone() };
                    out.push((b[j].0, c));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                    if !c.is_zero() {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        BiPoly { terms: out }
    }

    pub fn mul(&self, o: &BiPoly) -> BiPoly {
        if self.is_zero() || o.is_zero() {
            return BiPoly::zero();
        }
        if let Some(c) = self.as_constant() {
            return o.scale(c);
        }
        if let Some(c) = o.as_constant() {
            return self.scale(c);
        }
        let mut acc: BTreeMap<Exp2, Int> = BTreeMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &o.terms {
                let e = (ea.0 + eb.0, ea.1 + eb.1);
                let p = ca * cb;
                acc.entry(e).and_modify(|c| *c = &*c + &p).or_insert(p);
            }
        }
        BiPoly { terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect() }
    }

    pub fn scale(&self, c: &Int) -> BiPoly {
        if c.is_zero() {
            return BiPoly::zero();
        }
        BiPoly { terms: self.terms.iter().map(|(e, x)| (*e, x * c)).collect() }
    }

    pub fn shift(&self, dq: u32, dt: u32) -> BiPoly {
        BiPoly { terms: self.terms.iter().map(|(e, c)| ((e.0 + dq, e.1 + dt), c.clone())).collect() }
    }

    pub fn pow(&self, e: u32) -> BiPoly {
        let mut acc = BiPoly::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Integer content, nonnegative.
    pub fn content(&self) -> Int {
        let mut g = Int::ZERO;
        for (_, c) in &self.terms {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Largest monomial `q^a t^b` dividing every term.
    pub fn monomial_content(&self) -> Exp2 {
        let a = self.terms.iter().map(|(e, _)| e.0).min().unwrap_or(0);
        let b = self.terms.iter().map(|(e, _)| e.1).min().unwrap_or(0);
        (a, b)
    }

    pub fn div_monomial(&self, dq: u32, dt: u32) -> BiPoly {
        BiPoly { terms: self.terms.iter().map(|(e, c)| ((e.0 - dq, e.1 - dt), c.clone())).collect() }
    }

    pub fn div_int(&self, c: &Int) -> BiPoly {
        BiPoly { terms: self.terms.iter().map(|(e, x)| (*e, x.div_exact(c))).collect() }
    }

    /// Exact division; `None` if `d` does not divide `self`.
    pub fn div_exact(&self, d: &BiPoly) -> Option<BiPoly> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(BiPoly::zero());
        }
        if let Some(c) = d.as_constant() {
            if self.terms.iter().all(|(_, x)| c.divides(x)) {
                return Some(self.div_int(c));
            }
            return None;
        }
        if d.is_monomial() {
            let ((dq, dt), c) = &d.terms[0];
            if self.terms.iter().all(|(e, x)| e.0 >= *dq && e.1 >= *dt && c.divides(x)) {
                return Some(BiPoly {
                    terms: self.terms.iter().map(|(e, x)| ((e.0 - dq, e.1 - dt), x.div_exact(c))).collect(),
                });
            }
            return None;
        }
        if self.degree_q() < d.degree_q() || self.degree_t() < d.degree_t() {
            return None;
        }
        let a = self.to_dense_t();
        let b = d.to_dense_t();
        gcd::poly_div_exact(&a, &b).map(|q| BiPoly::from_dense_t(&q))
    }

    /// View as a polynomial in t with coefficients in Z[q].
    fn to_dense_t(&self) -> Dense<Dense<Int>> {
        let dt = self.degree_t() as usize;
        let dq = self.degree_q() as usize;
        let mut out = vec![vec![Int::ZERO; dq + 1]; dt + 1];
        for ((a, b), c) in &self.terms {
            out[*b as usize][*a as usize] = c.clone();
        }
        for row in out.iter_mut() {
            gcd::trim(row);
        }
        gcd::trim(&mut out);
        out
    }

    fn from_dense_t(p: &Dense<Dense<Int>>) -> BiPoly {
        BiPoly::from_terms(
            p.iter()
                .enumerate()
                .flat_map(|(b, row)| row.iter().enumerate().map(move |(a, c)| ((a as u32, b as u32), c.clone()))),
        )
    }

    fn transpose(&self) -> BiPoly {
        BiPoly::from_terms(self.terms.iter().map(|((a, b), c)| ((*b, *a), c.clone())))
    }

    fn image_mod_p_in_t(&self, q0: u64) -> Vec<u64> {
        let dt = self.degree_t() as usize;
        let mut out = vec![0u64; dt + 1];
        for ((a, b), c) in &self.terms {
            let v = modp::mul(c.mod_u64(modp::P), modp::pow(q0, *a as u64));
            out[*b as usize] = modp::add(out[*b as usize], v);
        }
        out
    }

    /// Gcd with nonnegative leading coefficient in graded lex order.
    pub fn gcd(&self, o: &BiPoly) -> BiPoly {
        if self.is_zero() {
            return o.normalize_sign();
        }
        if o.is_zero() {
            return self.normalize_sign();
        }
        let (ma, mb) = (self.monomial_content(), o.monomial_content());
        let mono = (ma.0.min(mb.0), ma.1.min(mb.1));
        let g_int = self.content().gcd(&o.content());
        let a = self.div_monomial(ma.0, ma.1);
        let b = o.div_monomial(mb.0, mb.1);
        if a.is_constant() || b.is_constant() {
            return BiPoly::monomial(mono.0, mono.1, g_int);
        }
        let t_free = Self::gcd_deg_zero_in_t(&a, &b);
        let q_free = Self::gcd_deg_zero_in_t(&a.transpose(), &b.transpose());
        let core = match (t_free, q_free) {
            (true, true) => BiPoly::constant(g_int),
            (true, false) => {
                // gcd lives in Z[q]: gcd of all t-coefficients.
                let g = gcd::content(&a.to_dense_t()).gcd(&gcd::content(&b.to_dense_t()));
                BiPoly::from_dense_t(&vec![g])
            }
            (false, true) => {
                let (at, bt) = (a.transpose(), b.transpose());
                let g = gcd::content(&at.to_dense_t()).gcd(&gcd::content(&bt.to_dense_t()));
                BiPoly::from_dense_t(&vec![g]).transpose()
            }
            (false, false) => BiPoly::from_dense_t(&gcd::poly_gcd(&a.to_dense_t(), &b.to_dense_t())),
        };
        core.shift(mono.0, mono.1).normalize_sign()
    }

    /// Proves (one-sided) that the gcd has t-degree zero using a single
    /// modular image at an evaluation point for q.
    fn gcd_deg_zero_in_t(a: &BiPoly, b: &BiPoly) -> bool {
        if a.degree_t() == 0 || b.degree_t() == 0 {
            return true;
        }
        const POINTS: [u64; 3] = [1_234_567_891_011, 987_654_321_123, 555_555_555_557];
        for &q0 in &POINTS {
            let ia = a.image_mod_p_in_t(q0);
            let ib = b.image_mod_p_in_t(q0);
            if ia.last() == Some(&0) || ib.last() == Some(&0) {
                continue;
            }
            return modp::gcd_degree(&ia, &ib) == Some(0);
        }
        false
    }

    /// Flips the sign so that the graded-lex leading coefficient is positive.
    pub fn normalize_sign(&self) -> BiPoly {
        match self.leading() {
            Some((_, c)) if c.is_negative() => self.neg(),
            _ => self.clone(),
        }
    }

    /// `self(q, q^k)` as a polynomial in q alone.
    pub fn substitute_t_power(&self, k: u32) -> BiPoly {
        BiPoly::from_terms(self.terms.iter().map(|((a, b), c)| ((a + k * b, 0), c.clone())))
    }

    /// Returns `q^dq t^dt * self(1/q, 1/t)` with `(dq, dt)` the degrees, i.e. the
    /// reversed polynomial.
    pub fn reversed(&self) -> (BiPoly, u32, u32) {
        let (dq, dt) = (self.degree_q(), self.degree_t());
        let p = BiPoly::from_terms(self.terms.iter().map(|((a, b), c)| ((dq - a, dt - b), c.clone())));
        (p, dq, dt)
    }

    /// Terms in display order: graded lex, descending.
    pub fn display_order(&self) -> Vec<&(Exp2, Int)> {
        let mut v: Vec<&(Exp2, Int)> = self.terms.iter().collect();
        v.sort_by(|a, b| grlex(&b.0, &a.0));
        v
    }
}

impl GcdDomain for BiPoly {
    fn zero() -> Self {
        BiPoly::zero()
    }
    fn is_zero(&self) -> bool {
        BiPoly::is_zero(self)
    }
    fn mul(&self, o: &Self) -> Self {
        BiPoly::mul(self, o)
    }
    fn sub(&self, o: &Self) -> Self {
        BiPoly::sub(self, o)
    }
    fn gcd(&self, o: &Self) -> Self {
        BiPoly::gcd(self, o)
    }
    fn div_exact(&self, d: &Self) -> Self {
        BiPoly::div_exact(self, d).expect("inexact division")
    }
    fn is_negative(&self) -> bool {
        self.leading().is_some_and(|(_, c)| c.is_negative())
    }
    fn neg(&self) -> Self {
        BiPoly::neg(self)
    }
    fn is_unit(&self) -> bool {
        self.as_constant().is_some_and(|c| c.abs().is_one())
    }
}

fn write_monomial(f: &mut fmt::Formatter<'_>, e: &Exp2) -> fmt::Result {
    let mut first = true;
    for (name, k) in [("q", e.0), ("t", e.1)] {
        if k == 0 {
            continue;
        }
        if !first {
            write!(f, "*")?;
        }
        first = false;
        if k == 1 {
            write!(f, "{name}")?;
        } else {
            write!(f, "{name}^{k}")?;
        }
    }
    Ok(())
}

/// Canonical text form, e.g. `q^2*t - 3*q + 1`.
impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (e, c)) in self.display_order().into_iter().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if idx == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if *e == (0, 0) {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write_monomial(f, e)?;
            } else {
                write!(f, "{a}*")?;
                write_monomial(f, e)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
