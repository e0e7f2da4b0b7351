use std::collections::BTreeMap;
use std::fmt;

use smallvec::SmallVec;

use super::params::Params;
use super::Coeff;
use crate::error::{invalid, Error, Result};

/// Exponent vector of a monomial in z_1..z_n.
pub type Monomial = SmallVec<[i32; 6]>;

/// Sparse polynomial in z_1..z_n over `F`. In Laurent mode exponents may be
/// negative; otherwise constructors and arithmetic reject them.
#[derive(Clone)]
pub struct ZPolynomial<F> {
    nvars: usize,
    laurent: bool,
    terms: BTreeMap<Monomial, F>,
}

impl<F: PartialEq> PartialEq for ZPolynomial<F> {
    fn eq(&self, o: &Self) -> bool {
        self.nvars == o.nvars && self.terms == o.terms
    }
}

fn degree(m: &[i32]) -> i64 {
    m.iter().map(|&e| e as i64).sum()
}

/// Graded order with ties broken lexicographically (z_1 highest); used for
/// printing, largest first.
fn display_cmp(a: &Monomial, b: &Monomial) -> std::cmp::Ordering {
    degree(a).cmp(&degree(b)).then_with(|| a.cmp(b))
}

impl<F: Coeff> ZPolynomial<F> {
    pub fn zero(nvars: usize) -> Self {
        ZPolynomial { nvars, laurent: false, terms: BTreeMap::new() }
    }

    pub fn zero_laurent(nvars: usize) -> Self {
        ZPolynomial { nvars, laurent: true, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: F) -> Self {
        let mut p = Self::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(SmallVec::from_elem(0, nvars), c);
        }
        p
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, F::one())
    }

    /// The variable z_i for a 0-based position `i`.
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut m: Monomial = SmallVec::from_elem(0, nvars);
        m[i] = 1;
        Self::monomial(m, F::one())
    }

    /// `c * z^m`. Negative exponents switch on Laurent mode.
    pub fn monomial(m: Monomial, c: F) -> Self {
        let laurent = m.iter().any(|&e| e < 0);
        let mut p = ZPolynomial { nvars: m.len(), laurent, terms: BTreeMap::new() };
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    /// Builds from terms, combining duplicates; rejects negative exponents
    /// unless `laurent`.
    pub fn from_terms<I>(nvars: usize, laurent: bool, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Monomial, F)>,
    {
        let mut p = ZPolynomial { nvars, laurent, terms: BTreeMap::new() };
        for (m, c) in terms {
            if m.len() != nvars {
                return Err(Error::NvarsMismatch(nvars, m.len()));
            }
            if !laurent && m.iter().any(|&e| e < 0) {
                return Err(Error::NegativeExponent);
            }
            p.add_term(m, c);
        }
        Ok(p)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_laurent(&self) -> bool {
        self.laurent
    }

    /// Same polynomial, flagged as Laurent.
    pub fn into_laurent(mut self) -> Self {
        self.laurent = true;
        self
    }

    /// Clears the Laurent flag; fails if a negative exponent is present.
    pub fn into_polynomial(mut self) -> Result<Self> {
        if self.terms.keys().any(|m| m.iter().any(|&e| e < 0)) {
            return Err(Error::NegativeExponent);
        }
        self.laurent = false;
        Ok(self)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &F)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &[i32]) -> F {
        self.terms.get(m).cloned().unwrap_or_else(F::zero)
    }

    /// Maximal total degree; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<i64> {
        self.terms.keys().map(|m| degree(m)).max()
    }

    fn add_term(&mut self, m: Monomial, c: F) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(v) => {
                let s = v.clone() + &c;
                if s.is_zero() {
                    self.terms.remove(&m);
                } else {
                    *v = s;
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    fn check(&self, o: &Self) -> Result<()> {
        if self.nvars != o.nvars {
            return Err(Error::NvarsMismatch(self.nvars, o.nvars));
        }
        Ok(())
    }

    pub fn checked_add(&self, o: &Self) -> Result<Self> {
        self.check(o)?;
        let mut out = self.clone();
        out.laurent |= o.laurent;
        for (m, c) in &o.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, o: &Self) -> Result<Self> {
        self.check(o)?;
        let mut out = self.clone();
        out.laurent |= o.laurent;
        for (m, c) in &o.terms {
            out.add_term(m.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn checked_mul(&self, o: &Self) -> Result<Self> {
        self.check(o)?;
        let mut acc: BTreeMap<Monomial, F> = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &o.terms {
                let m: Monomial = ma.iter().zip(mb.iter()).map(|(x, y)| x + y).collect();
                let c = ca.clone() * cb;
                match acc.get_mut(&m) {
                    Some(v) => *v = v.clone() + &c,
                    None => {
                        acc.insert(m, c);
                    }
                }
            }
        }
        acc.retain(|_, c| !c.is_zero());
        Ok(ZPolynomial { nvars: self.nvars, laurent: self.laurent || o.laurent, terms: acc })
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return ZPolynomial { terms: BTreeMap::new(), ..self.clone() };
        }
        let terms = self.terms.iter().map(|(m, v)| (m.clone(), v.clone() * c)).collect();
        ZPolynomial { nvars: self.nvars, laurent: self.laurent, terms }
    }

    /// Multiplies by the monomial `z^shift`.
    pub fn shift(&self, shift: &[i32]) -> Result<Self> {
        if shift.len() != self.nvars {
            return Err(Error::NvarsMismatch(self.nvars, shift.len()));
        }
        let terms: BTreeMap<Monomial, F> = self
            .terms
            .iter()
            .map(|(m, c)| (m.iter().zip(shift).map(|(a, b)| a + b).collect(), c.clone()))
            .collect();
        let negative = terms.keys().any(|m: &Monomial| m.iter().any(|&e| e < 0));
        if negative && !self.laurent {
            return Err(Error::NegativeExponent);
        }
        Ok(ZPolynomial { nvars: self.nvars, laurent: self.laurent, terms })
    }

    /// Multiplies by z_i (0-based).
    pub fn mul_var(&self, i: usize) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut m = m.clone();
                m[i] += 1;
                (m, c.clone())
            })
            .collect();
        ZPolynomial { nvars: self.nvars, laurent: self.laurent, terms }
    }

    /// Applies an exponent-vector permutation `m -> f(m)` with coefficient
    /// factor `g(m)`; the caller guarantees `f` is injective.
    pub fn remap<M, G>(&self, f: M, g: G) -> Self
    where
        M: Fn(&Monomial) -> Monomial,
        G: Fn(&Monomial) -> Option<F>,
    {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let c = match g(m) {
                    Some(k) => c.clone() * &k,
                    None => c.clone(),
                };
                (f(m), c)
            })
            .collect();
        ZPolynomial { nvars: self.nvars, laurent: self.laurent, terms }
    }

    /// `s_i`: swaps z_i and z_{i+1} (0-based `i`).
    pub fn swap(&self, i: usize) -> Self {
        self.remap(
            |m| {
                let mut m = m.clone();
                m.swap(i, i + 1);
                m
            },
            |_| None,
        )
    }

    /// Divided difference `(p - s_i p)/(z_i - z_{i+1})` (0-based `i`),
    /// computed monomial by monomial so it is exact by construction.
    pub fn divided_difference(&self, i: usize) -> Self {
        let mut out = ZPolynomial { nvars: self.nvars, laurent: self.laurent, terms: BTreeMap::new() };
        for (m, c) in &self.terms {
            let (a, b) = (m[i], m[i + 1]);
            if a == b {
                continue;
            }
            // (x^a y^b - x^b y^a)/(x - y) = sign * (xy)^lo * h_{d-1}(x, y)
            let (lo, d, c) = if a > b { (b, a - b, c.clone()) } else { (a, b - a, -c.clone()) };
            for k in 0..d {
                let mut e = m.clone();
                e[i] = lo + k;
                e[i + 1] = lo + d - 1 - k;
                out.add_term(e, c.clone());
            }
        }
        out
    }

    /// `z^m -> z^{-m}`; the result is Laurent.
    pub fn invert_vars(&self) -> Self {
        let terms = self.terms.iter().map(|(m, c)| (m.iter().map(|e| -e).collect(), c.clone())).collect();
        ZPolynomial { nvars: self.nvars, laurent: true, terms }
    }

    /// The sum of terms of maximal total degree.
    pub fn top_homogeneous(&self) -> Result<Self> {
        let Some(d) = self.total_degree() else {
            return invalid("top homogeneous component of the zero polynomial");
        };
        let terms = self.terms.iter().filter(|(m, _)| degree(m) == d).map(|(m, c)| (m.clone(), c.clone())).collect();
        Ok(ZPolynomial { nvars: self.nvars, laurent: self.laurent, terms })
    }

    pub fn constant_term(&self) -> F {
        self.terms.get(&Monomial::from_elem(0, self.nvars)).cloned().unwrap_or_else(F::zero)
    }

    pub fn map_coeffs<G: Coeff, M: Fn(&F) -> G>(&self, f: M) -> ZPolynomial<G> {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (m.clone(), f(c)))
            .filter(|(_, c)| !c.is_zero())
            .collect();
        ZPolynomial { nvars: self.nvars, laurent: self.laurent, terms }
    }

    pub fn try_map_coeffs<G: Coeff, M: Fn(&F) -> Result<G>>(&self, f: M) -> Result<ZPolynomial<G>> {
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            let v = f(c)?;
            if !v.is_zero() {
                terms.insert(m.clone(), v);
            }
        }
        Ok(ZPolynomial { nvars: self.nvars, laurent: self.laurent, terms })
    }

    /// Exact value at a point of length `nvars`.
    pub fn eval(&self, point: &[F]) -> Result<F> {
        if point.len() != self.nvars {
            return Err(Error::NvarsMismatch(self.nvars, point.len()));
        }
        let mut cache: Vec<BTreeMap<i32, F>> = vec![BTreeMap::new(); self.nvars];
        let mut acc = F::zero();
        for (m, c) in &self.terms {
            let mut term = c.clone();
            for (j, &e) in m.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let p = match cache[j].get(&e) {
                    Some(p) => p.clone(),
                    None => {
                        let p = point[j].powi(e as i64)?;
                        cache[j].insert(e, p.clone());
                        p
                    }
                };
                term = term * &p;
            }
            acc = acc + &term;
        }
        Ok(acc)
    }

    /// Value at a point whose coordinates are `q^a t^b`, given as exponent
    /// pairs; each term then costs one monomial in (q,t).
    pub fn eval_monomial_point<P: Params<F = F>>(&self, params: &P, point: &[(i64, i64)]) -> Result<F> {
        if point.len() != self.nvars {
            return Err(Error::NvarsMismatch(self.nvars, point.len()));
        }
        let mut by_exp: BTreeMap<(i64, i64), F> = BTreeMap::new();
        for (m, c) in &self.terms {
            let mut a = 0i64;
            let mut b = 0i64;
            for (&e, &(x, y)) in m.iter().zip(point) {
                a += e as i64 * x;
                b += e as i64 * y;
            }
            match by_exp.get_mut(&(a, b)) {
                Some(v) => *v = v.clone() + c,
                None => {
                    by_exp.insert((a, b), c.clone());
                }
            }
        }
        let mut acc = F::zero();
        for ((a, b), c) in by_exp {
            if c.is_zero() {
                continue;
            }
            acc = acc + &(c * &params.monomial(a, b)?);
        }
        Ok(acc)
    }

    /// Terms in printing order (largest first).
    pub fn sorted_terms(&self) -> Vec<(&Monomial, &F)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| display_cmp(b.0, a.0));
        v
    }
}

/// The r-th elementary symmetric polynomial in n variables.
pub fn elementary_symmetric<F: Coeff>(n: usize, r: usize) -> Result<ZPolynomial<F>> {
    if r > n {
        return invalid(format!("elementary symmetric e_{r} needs r <= n = {n}"));
    }
    let mut terms = Vec::new();
    let mut m: Monomial = SmallVec::from_elem(0, n);
    subsets(n, r, 0, &mut m, &mut terms);
    ZPolynomial::from_terms(n, false, terms.into_iter().map(|m| (m, F::one())))
}

fn subsets(n: usize, r: usize, start: usize, cur: &mut Monomial, out: &mut Vec<Monomial>) {
    if r == 0 {
        out.push(cur.clone());
        return;
    }
    for i in start..=(n - r) {
        cur[i] = 1;
        subsets(n, r - 1, i + 1, cur, out);
        cur[i] = 0;
    }
}

impl<F: Coeff> std::ops::Add for &ZPolynomial<F> {
    type Output = ZPolynomial<F>;
    fn add(self, o: &ZPolynomial<F>) -> ZPolynomial<F> {
        self.checked_add(o).expect("variable count mismatch")
    }
}

impl<F: Coeff> std::ops::Sub for &ZPolynomial<F> {
    type Output = ZPolynomial<F>;
    fn sub(self, o: &ZPolynomial<F>) -> ZPolynomial<F> {
        self.checked_sub(o).expect("variable count mismatch")
    }
}

impl<F: Coeff> std::ops::Mul for &ZPolynomial<F> {
    type Output = ZPolynomial<F>;
    fn mul(self, o: &ZPolynomial<F>) -> ZPolynomial<F> {
        self.checked_mul(o).expect("variable count mismatch")
    }
}

impl<F: Coeff> std::ops::Neg for &ZPolynomial<F> {
    type Output = ZPolynomial<F>;
    fn neg(self) -> ZPolynomial<F> {
        self.scale(&-F::one())
    }
}

fn monomial_text(m: &[i32]) -> String {
    let mut parts = Vec::new();
    for (i, &e) in m.iter().enumerate() {
        match e {
            0 => {}
            1 => parts.push(format!("z{}", i + 1)),
            _ => parts.push(format!("z{}^{}", i + 1, e)),
        }
    }
    parts.join("*")
}

impl<F: Coeff> fmt::Display for ZPolynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.sorted_terms().into_iter().enumerate() {
            let (neg, mag) = c.term_text();
            let mono = monomial_text(m);
            let body = if mono.is_empty() {
                mag
            } else if mag == "1" {
                mono
            } else {
                format!("{mag}*{mono}")
            };
            match (k, neg) {
                (0, false) => write!(f, "{body}")?,
                (0, true) => write!(f, "-{body}")?,
                (_, false) => write!(f, " + {body}")?,
                (_, true) => write!(f, " - {body}")?,
            }
        }
        Ok(())
    }
}

impl<F: Coeff> fmt::Debug for ZPolynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
