//! The constant-term inner product at `t = q^k`, where the weight is the
//! finite Laurent polynomial `∏_{i<j} (z_i/z_j; q)_k (q z_j/z_i; q)_k`.

use crate::algebra::{Coeff, Monomial, ParamScalar, Symbolic, ZPolynomial};
use crate::comb::{compositions_up_to, Composition};
use crate::engine::Engine;
use crate::error::{invalid, Result};

/// The weight for `n` variables at `t = q^k`, with coefficients in `Q(q)`.
#[derive(Clone, Debug, PartialEq)]
pub struct SpecializedWeight {
    pub n: usize,
    pub k: u32,
    pub weight: ZPolynomial<ParamScalar>,
}

/// `(1 - c z^m)` as a Laurent polynomial.
fn one_minus(n: usize, m: Monomial, c: ParamScalar) -> Result<ZPolynomial<ParamScalar>> {
    ZPolynomial::one(n).into_laurent().checked_sub(&ZPolynomial::monomial(m, c).into_laurent())
}

pub fn specialized_weight(n: usize, k: u32) -> Result<SpecializedWeight> {
    if n < 2 {
        return invalid("the weight needs n >= 2");
    }
    let mut w = ZPolynomial::one(n).into_laurent();
    for i in 0..n {
        for j in i + 1..n {
            let mut up: Monomial = Monomial::from_elem(0, n);
            up[i] = 1;
            up[j] = -1;
            let down: Monomial = up.iter().map(|e| -e).collect();
            for s in 0..k as i64 {
                w = w.checked_mul(&one_minus(n, up.clone(), ParamScalar::monomial(s, 0))?)?;
                w = w.checked_mul(&one_minus(n, down.clone(), ParamScalar::monomial(s + 1, 0))?)?;
            }
        }
    }
    Ok(SpecializedWeight { n, k, weight: w })
}

/// `CT[f(z) g(z^{-1}; 1/q, 1/t) W(z)]` at `t = q^k`, for `f, g` over `Q(q,t)`.
pub fn ct_inner_product(
    f: &ZPolynomial<ParamScalar>,
    g: &ZPolynomial<ParamScalar>,
    w: &SpecializedWeight,
) -> Result<ParamScalar> {
    let k = w.k;
    let fs = f.try_map_coeffs(|c| c.specialize_t_power(k))?.into_laurent();
    let gs = g.map_coeffs(ParamScalar::invert_params).invert_vars().try_map_coeffs(|c| c.specialize_t_power(k))?;
    let h = fs.checked_mul(&gs)?;
    // CT[h W] = Σ_m h_m W_{-m}
    let mut acc = ParamScalar::zero();
    for (m, c) in h.terms() {
        let neg: Vec<i32> = m.iter().map(|e| -e).collect();
        let wc = w.weight.coeff(&neg);
        if !wc.is_zero() {
            acc = acc + &(c.clone() * &wc);
        }
    }
    Ok(acc)
}

/// One failed pair of an orthogonality check.
#[derive(Clone, Debug, PartialEq)]
pub struct NormWitness {
    pub eta: Composition,
    pub nu: Composition,
    pub expected: ParamScalar,
    pub got: ParamScalar,
}

#[derive(Clone, Debug, PartialEq)]
pub struct NormReport {
    pub n: usize,
    pub k: u32,
    pub one_one: ParamScalar,
    pub pairs: usize,
    pub failures: Vec<NormWitness>,
}

impl NormReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks `<E_η, E_ν> = δ_{ην} N_η <1,1>` for all `|η|, |ν| ≤ maxmod`.
pub fn verify_orthogonality_norms(n: usize, k: u32, maxmod: u32) -> Result<NormReport> {
    let w = specialized_weight(n, k)?;
    let engine = Engine::new(Symbolic::generic());
    let one = ZPolynomial::one(n);
    let one_one = ct_inner_product(&one, &one, &w)?;
    let labels = compositions_up_to(n, maxmod);
    let polys = labels.iter().map(|l| engine.generate_e(l)).collect::<Result<Vec<_>>>()?;
    let mut failures = Vec::new();
    let mut pairs = 0;
    for (a, pa) in labels.iter().zip(&polys) {
        let norm = engine.norm_n(a)?.specialize_t_power(k)? * &one_one;
        for (b, pb) in labels.iter().zip(&polys) {
            pairs += 1;
            let got = ct_inner_product(pa, pb, &w)?;
            let expected = if a == b { norm.clone() } else { ParamScalar::zero() };
            if got != expected {
                failures.push(NormWitness { eta: a.clone(), nu: b.clone(), expected, got });
            }
        }
    }
    Ok(NormReport { n, k, one_one, pairs, failures })
}
