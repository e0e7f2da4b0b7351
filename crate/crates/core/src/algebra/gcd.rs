//! Dense univariate polynomial gcd over gcd domains, used recursively to get
//! gcds in Z[q][t].
//!
//! The main path is the primitive pseudo-remainder sequence. Before falling
//! back to it, callers can ask for a cheap modular image to detect the
//! (overwhelmingly common) coprime case.

use super::int::Int;

/// Just enough ring structure to run a primitive PRS.
pub(crate) trait GcdDomain: Clone + PartialEq {
    fn zero() -> Self;
    fn is_zero(&self) -> bool;
    fn mul(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn gcd(&self, o: &Self) -> Self;
    fn div_exact(&self, d: &Self) -> Self;
    /// True when the leading unit is negative, so that results can be
    /// normalized to a positive leading coefficient.
    fn is_negative(&self) -> bool;
    fn neg(&self) -> Self;
    fn is_unit(&self) -> bool;
}

impl GcdDomain for Int {
    fn zero() -> Self {
        Int::ZERO
    }
    fn is_zero(&self) -> bool {
        Int::is_zero(self)
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn gcd(&self, o: &Self) -> Self {
        Int::gcd(self, o)
    }
    fn div_exact(&self, d: &Self) -> Self {
        Int::div_exact(self, d)
    }
    fn is_negative(&self) -> bool {
        Int::is_negative(self)
    }
    fn neg(&self) -> Self {
        -self
    }
    fn is_unit(&self) -> bool {
        self.abs().is_one()
    }
}

/// Dense univariate polynomial, index = exponent, no trailing zeros.
pub(crate) type Dense<R> = Vec<R>;

pub(crate) fn trim<R: GcdDomain>(p: &mut Dense<R>) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

pub(crate) fn content<R: GcdDomain>(p: &Dense<R>) -> R {
    let mut g = R::zero();
    for c in p {
        if c.is_zero() {
            continue;
        }
        g = if g.is_zero() { c.clone() } else { g.gcd(c) };
        if g.is_unit() {
            break;
        }
    }
    g
}

fn div_scalar<R: GcdDomain>(p: &Dense<R>, c: &R) -> Dense<R> {
    p.iter().map(|x| x.div_exact(c)).collect()
}

/// `lc(b)^(deg a - deg b + 1) * a mod b`.
fn pseudo_rem<R: GcdDomain>(a: &Dense<R>, b: &Dense<R>) -> Dense<R> {
    let mut r = a.clone();
    let db = b.len() - 1;
    let lb = b[db].clone();
    while r.len() > db {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        let shift = dr - db;
        for c in r.iter_mut() {
            *c = c.mul(&lb);
        }
        for (i, bc) in b.iter().enumerate() {
            r[i + shift] = r[i + shift].sub(&lr.mul(bc));
        }
        debug_assert!(r[dr].is_zero());
        trim(&mut r);
    }
    r
}

/// Gcd of two dense polynomials over `R`, normalized so the leading
/// coefficient is not negative.
pub(crate) fn poly_gcd<R: GcdDomain>(a: &Dense<R>, b: &Dense<R>) -> Dense<R> {
    if a.is_empty() {
        return normalize(b.clone());
    }
    if b.is_empty() {
        return normalize(a.clone());
    }
    let ca = content(a);
    let cb = content(b);
    let g = ca.gcd(&cb);
    let mut x = div_scalar(a, &ca);
    let mut y = div_scalar(b, &cb);
    if x.len() < y.len() {
        std::mem::swap(&mut x, &mut y);
    }
    while !y.is_empty() {
        if y.len() == 1 {
            return normalize(vec![g]);
        }
        let r = pseudo_rem(&x, &y);
        x = y;
        y = if r.is_empty() {
            r
        } else {
            let c = content(&r);
            div_scalar(&r, &c)
        };
    }
    let out: Dense<R> = x.iter().map(|c| c.mul(&g)).collect();
    normalize(out)
}

fn normalize<R: GcdDomain>(p: Dense<R>) -> Dense<R> {
    match p.last() {
        Some(l) if l.is_negative() => p.iter().map(|c| c.neg()).collect(),
        _ => p,
    }
}

/// Exact division of dense polynomials; `None` if not divisible.
pub(crate) fn poly_div_exact<R: GcdDomain>(a: &Dense<R>, d: &Dense<R>) -> Option<Dense<R>> {
    if d.is_empty() {
        return None;
    }
    if a.is_empty() {
        return Some(Vec::new());
    }
    if a.len() < d.len() {
        return None;
    }
    let dd = d.len() - 1;
    let ld = &d[dd];
    let mut r = a.clone();
    let mut q = vec![R::zero(); a.len() - dd];
    while r.len() > dd {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        let c = lr.div_exact(ld);
        if !c.mul(ld).eq(&lr) {
            return None;
        }
        let shift = dr - dd;
        for (i, dc) in d.iter().enumerate() {
            r[i + shift] = r[i + shift].sub(&c.mul(dc));
        }
        q[shift] = c;
        trim(&mut r);
    }
    if r.is_empty() {
        trim(&mut q);
        Some(q)
    } else {
        None
    }
}

/// Univariate integer polynomials form a gcd domain too, which gives
/// bivariate gcd by recursion.
impl GcdDomain for Dense<Int> {
    fn zero() -> Self {
        Vec::new()
    }
    fn is_zero(&self) -> bool {
        self.is_empty()
    }
    fn mul(&self, o: &Self) -> Self {
        if self.is_empty() || o.is_empty() {
            return Vec::new();
        }
        let mut out = vec![Int::ZERO; self.len() + o.len() - 1];
        for (i, a) in self.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        trim(&mut out);
        out
    }
    fn sub(&self, o: &Self) -> Self {
        let n = self.len().max(o.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.get(i).cloned().unwrap_or(Int::ZERO);
            let b = o.get(i).cloned().unwrap_or(Int::ZERO);
            out.push(&a - &b);
        }
        trim(&mut out);
        out
    }
    fn gcd(&self, o: &Self) -> Self {
        if self.len() > 1 && o.len() > 1 && modp::coprime_dense(self, o) {
            let g = content(self).gcd(&content(o));
            return vec![g];
        }
        poly_gcd(self, o)
    }
    fn div_exact(&self, d: &Self) -> Self {
        poly_div_exact(self, d).expect("inexact polynomial division")
    }
    fn is_negative(&self) -> bool {
        self.last().is_some_and(|c| c.is_negative())
    }
    fn neg(&self) -> Self {
        self.iter().map(|c| -c).collect()
    }
    fn is_unit(&self) -> bool {
        self.len() == 1 && self[0].abs().is_one()
    }
}

/// Arithmetic modulo the Mersenne prime 2^61 - 1.
pub(crate) mod modp {
    use super::super::int::Int;

    pub const P: u64 = (1u64 << 61) - 1;

    pub fn mul(a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % P as u128) as u64
    }

    pub fn add(a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= P {
            s - P
        } else {
            s
        }
    }

    pub fn sub(a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + P - b
        }
    }

    pub fn pow(mut a: u64, mut e: u64) -> u64 {
        let mut r = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                r = mul(r, a);
            }
            a = mul(a, a);
            e >>= 1;
        }
        r
    }

    pub fn inv(a: u64) -> u64 {
        pow(a, P - 2)
    }

    fn trim(p: &mut Vec<u64>) {
        while p.last() == Some(&0) {
            p.pop();
        }
    }

    /// Degree of gcd over F_p, or `None` for two zero inputs.
    pub fn gcd_degree(a: &[u64], b: &[u64]) -> Option<usize> {
        let mut x: Vec<u64> = a.to_vec();
        let mut y: Vec<u64> = b.to_vec();
        trim(&mut x);
        trim(&mut y);
        if x.len() < y.len() {
            std::mem::swap(&mut x, &mut y);
        }
        while !y.is_empty() {
            // x <- x mod y
            let dy = y.len() - 1;
            let linv = inv(y[dy]);
            while x.len() > dy {
                let dx = x.len() - 1;
                let c = mul(x[dx], linv);
                let shift = dx - dy;
                for (i, &yc) in y.iter().enumerate() {
                    x[i + shift] = sub(x[i + shift], mul(c, yc));
                }
                trim(&mut x);
            }
            std::mem::swap(&mut x, &mut y);
        }
        if x.is_empty() {
            None
        } else {
            Some(x.len() - 1)
        }
    }

    pub fn reduce(p: &[Int]) -> Vec<u64> {
        p.iter().map(|c| c.mod_u64(P)).collect()
    }

    /// One-sided coprimality test for univariate integer polynomials: a
    /// `true` answer is a proof (the image keeps both leading coefficients).
    pub fn coprime_dense(a: &[Int], b: &[Int]) -> bool {
        let (ra, rb) = (reduce(a), reduce(b));
        if ra.last() == Some(&0) || rb.last() == Some(&0) {
            return false;
        }
        gcd_degree(&ra, &rb) == Some(0)
    }
}
