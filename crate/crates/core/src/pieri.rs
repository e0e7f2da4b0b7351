//! Pieri-type coefficients `A^(r)_{ηλ}` of
//! `e_r(z) E_η(z; 1/q, 1/t) = Σ A^(r)_{ηλ}(q,t) E_λ(z; 1/q, 1/t)`,
//! computed from the interpolation expansion and cross-checked by closed
//! forms for `r = 1`, duality, and a brute-force expansion.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::algebra::{elementary_symmetric, Coeff, Params, ZPolynomial};
use crate::comb::{
    c_i_apply, hook_products, is_successor, maximal_sets, order_key, spectral_vector, successor_test,
    successors_layered, Composition, HookProduct,
};
use crate::engine::Engine;
use crate::error::{invalid, Error, Result};

/// Coefficients of `(e_r(z) - e_r(η̄)) E*_η = Σ A_{ηλ} E*_λ`, one map per
/// modulus layer `|λ| = |η| + i`, `i = 1..=r`.
#[derive(Clone, Debug, PartialEq)]
pub struct ExpansionTable<F> {
    pub base: Composition,
    pub r: usize,
    pub layers: Vec<BTreeMap<Composition, F>>,
}

impl<F: Coeff> ExpansionTable<F> {
    /// Layer `i`, 1-based.
    pub fn layer(&self, i: usize) -> &BTreeMap<Composition, F> {
        &self.layers[i - 1]
    }

    pub fn entries(&self) -> impl Iterator<Item = (&Composition, &F)> {
        self.layers.iter().flat_map(|l| l.iter())
    }
}

/// One `r = 1` coefficient with the ingredients of both closed forms.
#[derive(Clone, Debug, PartialEq)]
pub struct PieriProductForms<F> {
    pub set: Vec<usize>,
    pub lam: Composition,
    pub delta: F,
    pub beta: F,
    pub a_i: F,
    pub b_i: F,
    pub coeff: F,
    pub g0: Vec<usize>,
    pub g1: Vec<usize>,
    /// The `G₀/G₁` product as printed, `None` if one of its denominators vanishes.
    pub g_rewrite: Option<F>,
}

fn check_r(n: usize, r: usize) -> Result<()> {
    if r < 1 || r > n {
        return invalid(format!("r = {r} must lie in 1..={n}"));
    }
    Ok(())
}

impl<P: Params> Engine<P> {
    /// The layered recursion for the interpolation expansion. Layer `i`
    /// depends only on layers below it, and within a layer the targets are
    /// computed in parallel.
    pub fn interpolation_expansion(&self, eta: &Composition, r: usize) -> Result<ExpansionTable<P::F>> {
        check_r(eta.n(), r)?;
        let p = self.params();
        let er_eta = spectral_vector(eta).elementary(p, r)?;
        let mut layers: Vec<BTreeMap<Composition, P::F>> = Vec::with_capacity(r);
        for i in 1..=r {
            let targets = successors_layered(eta, i as u32)?;
            let computed: Vec<(Composition, P::F)> = targets
                .par_iter()
                .map(|lam| {
                    let er = spectral_vector(lam).elementary(p, r)?;
                    let mut v = (er - &er_eta) * &self.binomial_direct(eta, lam)?;
                    for layer in &layers {
                        for (mu, a) in layer {
                            if is_successor(mu, lam) {
                                v = v - &(a.clone() * &self.binomial_direct(mu, lam)?);
                            }
                        }
                    }
                    Ok((lam.clone(), v))
                })
                .collect::<Result<_>>()?;
            layers.push(computed.into_iter().filter(|(_, v)| !v.is_zero()).collect());
        }
        Ok(ExpansionTable { base: eta.clone(), r, layers })
    }

    /// `(e_r(z) - e_r(η̄)) E*_η - Σ A E*_λ`; zero when the table is right.
    pub fn interpolation_residual(&self, table: &ExpansionTable<P::F>) -> Result<ZPolynomial<P::F>> {
        let eta = &table.base;
        let n = eta.n();
        let er = elementary_symmetric::<P::F>(n, table.r)?;
        let shift = ZPolynomial::constant(n, spectral_vector(eta).elementary(self.params(), table.r)?);
        let mut acc = er.checked_sub(&shift)?.checked_mul(&*self.generate_estar(eta)?)?;
        for (lam, a) in table.entries() {
            acc = acc.checked_sub(&self.generate_estar(lam)?.scale(a))?;
        }
        Ok(acc)
    }

    /// `A^(r)_{ηλ}` for `|λ| = |η| + r`: the top layer, restricted to
    /// `λ ⪯′ η + (1^n)`.
    pub fn pieri_homogeneous(&self, eta: &Composition, r: usize) -> Result<BTreeMap<Composition, P::F>> {
        let mut table = self.interpolation_expansion(eta, r)?;
        let top = eta.plus_ones();
        let mut last = table.layers.pop().unwrap_or_default();
        last.retain(|lam, _| is_successor(lam, &top));
        Ok(last)
    }

    /// `e_r(z) E_η(z; 1/q, 1/t) - Σ A E_λ(z; 1/q, 1/t)`.
    pub fn homogeneous_residual(
        &self,
        eta: &Composition,
        r: usize,
        coeffs: &BTreeMap<Composition, P::F>,
    ) -> Result<ZPolynomial<P::F>> {
        let inv = self.twin();
        let er = elementary_symmetric::<P::F>(eta.n(), r)?;
        let mut acc = er.checked_mul(&*inv.generate_e(eta)?)?;
        for (lam, a) in coeffs {
            acc = acc.checked_sub(&inv.generate_e(lam)?.scale(a))?;
        }
        Ok(acc)
    }

    /// `A^(1)_{ηλ} = (|λ̄| - |η̄|) q^{-η_{t_1}} δ(η,I) β(η,I)/(1 - t)` over
    /// the maximal sets `I`, keyed by `λ = c_I(η)`.
    pub fn pieri_r1_closed(&self, eta: &Composition) -> Result<BTreeMap<Composition, P::F>> {
        let p = self.params();
        let e1 = spectral_vector(eta).elementary(p, 1)?;
        let mut out = BTreeMap::new();
        for set in maximal_sets(eta) {
            let lam = c_i_apply(eta, &set)?;
            let gap = spectral_vector(&lam).elementary(p, 1)? - &e1;
            let v = gap * &self.binomial_one_step(eta, &set)?;
            if !v.is_zero() {
                out.insert(lam, v);
            }
        }
        Ok(out)
    }

    /// `â(x,y) = (t-1)x/(x-y)`.
    fn a_hat(&self, x: &P::F, y: &P::F) -> Result<P::F> {
        ((self.t() - P::F::one()) * x).try_div(&(x.clone() - y))
    }

    /// `b̂(x,y) = (x-ty)/(x-y)`.
    fn b_hat(&self, x: &P::F, y: &P::F) -> Result<P::F> {
        (x.clone() - &(self.t() * y)).try_div(&(x.clone() - y))
    }

    /// `A_I(η̄)` and `B̃_I(η̄)`.
    pub fn a_b_factors(&self, eta: &Composition, set: &[usize]) -> Result<(P::F, P::F)> {
        let n = eta.n();
        let z = spectral_vector(eta).values(self.params())?;
        let zz = |i: usize| &z[i - 1];
        let (t1, ts) = (set[0], *set.last().expect("nonempty set"));
        let q = self.mono((1, 0))?;
        let mut a = self.a_hat(&zz(ts).try_div(&q)?, zz(t1))?;
        for w in set.windows(2) {
            a = a * &self.a_hat(zz(w[0]), zz(w[1]))?;
        }
        let mut b = P::F::one();
        let mut prev = 0;
        for &tu in set {
            for j in prev + 1..tu {
                b = b * &self.b_hat(zz(tu), zz(j))?;
            }
            prev = tu;
        }
        let qz1 = q * zz(t1);
        for j in ts + 1..=n {
            b = b * &self.b_hat(&qz1, zz(j))?;
        }
        b = b * &(qz1 - self.mono((0, 1 - n as i64))?);
        Ok((a, b))
    }

    /// The `r = 1` coefficients in the `â, b̂` product form
    /// `(1-q) d′_η(1/q,1/t) A_I B̃_I / (d′_λ(1/q,1/t) q^{η_{t_1}+1} (t-1))`,
    /// together with `δ`, `β` and the `G₀/G₁` rewrite for inspection.
    pub fn pieri_r1_product_form(&self, eta: &Composition) -> Result<Vec<PieriProductForms<P::F>>> {
        let inv = self.params().inverted();
        let dp = |c: &Composition| hook_products(c).product(&inv, HookProduct::DPrime);
        let d_eta = dp(eta)?;
        let mut out = Vec::new();
        for set in maximal_sets(eta) {
            let lam = c_i_apply(eta, &set)?;
            let (a_i, b_i) = self.a_b_factors(eta, &set)?;
            let (delta, beta) = self.delta_beta(eta, &set)?;
            let num = (P::F::one() - self.mono((1, 0))?) * &d_eta * &a_i * &b_i;
            let den = dp(&lam)? * &self.mono((eta.part(set[0]) as i64 + 1, 0))? * &(self.t() - P::F::one());
            let coeff = num.try_div(&den)?;
            let sigma = successor_test(eta, &lam)?
                .ok_or_else(|| Error::Singular(format!("{lam:?} is not a successor of {eta:?}")))?
                .sigma;
            let (mut g0, mut g1) = (Vec::new(), Vec::new());
            for i in 1..=eta.n() {
                let target = lam.part(sigma.apply(i));
                if target == eta.part(i) {
                    g0.push(i);
                } else if target == eta.part(i) + 1 {
                    g1.push(i);
                }
            }
            let g_rewrite = self.g_rewrite(eta, &sigma.0, &g0, &g1).ok();
            out.push(PieriProductForms { set, lam, delta, beta, a_i, b_i, coeff, g0, g1, g_rewrite });
        }
        Ok(out)
    }

    /// The printed `G₀/G₁` expression for `A_I(η̄) B̃_I(η̄)`.
    fn g_rewrite(&self, eta: &Composition, sigma: &[usize], g0: &[usize], g1: &[usize]) -> Result<P::F> {
        let n = eta.n();
        let z = spectral_vector(eta).values(self.params())?;
        let zz = |i: usize| z[i - 1].clone();
        let s = |j: usize| sigma[j - 1];
        let t = self.t();
        let q = self.mono((1, 0))?;
        let tm1 = t.clone() - P::F::one();
        let mut acc = P::F::one();
        for j in 1..=n {
            if s(j) < j {
                acc = acc * &(tm1.clone() * &zz(s(j))).try_div(&(zz(s(j)) - zz(j)))?;
            }
        }
        for &j in g1 {
            let f = (tm1.clone() * &zz(s(j))).try_div(&(zz(s(j)) - q.clone() * &zz(j)))?;
            acc = acc * &f * &(q.clone() * &zz(j) - self.mono((0, 1 - n as i64))?);
        }
        for j in 1..=n {
            for k in s(j) + 1..j {
                acc = acc * &(zz(j) - t.clone() * &zz(k)).try_div(&(zz(j) - zz(k)))?;
            }
        }
        for &j in g1 {
            for k in 1..j {
                let x = zz(j) - t.clone() * &zz(k);
                acc = acc * &x.try_div(&x)?;
            }
        }
        for &k in g0 {
            for &j in g1 {
                if s(j) < k {
                    let qj = q.clone() * &zz(j);
                    acc = acc * &(qj.clone() - t.clone() * &zz(k)).try_div(&(qj - zz(k)))?;
                }
            }
        }
        Ok(acc)
    }

    /// `A^(r)_{ηλ}(q,t)` from `A^(n-r)_{λ,η+(1^n)}(1/q,1/t) N_η/N_λ`.
    pub fn duality_transfer(&self, eta: &Composition, lam: &Composition, r: usize) -> Result<P::F> {
        let n = eta.n();
        if lam.n() != n {
            return Err(Error::NvarsMismatch(n, lam.n()));
        }
        if r < 1 || r >= n {
            return invalid(format!("duality needs 1 <= r <= n-1, got r = {r}"));
        }
        if lam.modulus() != eta.modulus() + r as u32 {
            return invalid(format!("|λ| must equal |η| + {r}"));
        }
        let top = eta.plus_ones();
        if !is_successor(eta, lam) || !is_successor(lam, &top) {
            return Ok(P::F::zero());
        }
        let dual = self.twin().pieri_homogeneous(lam, n - r)?;
        let a = dual.get(&top).cloned().unwrap_or_else(P::F::zero);
        Ok(a * &self.norm_n(eta)?.try_div(&self.norm_n(lam)?)?)
    }

    /// Ground truth: expands `e_r(z) E_η(z; 1/q, 1/t)` in the `E_λ(z; 1/q, 1/t)`
    /// by repeatedly removing the leading monomial.
    pub fn product_expand_oracle(&self, eta: &Composition, r: usize) -> Result<BTreeMap<Composition, P::F>> {
        check_r(eta.n(), r)?;
        let inv = self.twin();
        let mut rest = elementary_symmetric::<P::F>(eta.n(), r)?.checked_mul(&*inv.generate_e(eta)?)?;
        let mut out = BTreeMap::new();
        while !rest.is_zero() {
            let lead = rest
                .terms()
                .filter_map(|(m, _)| Composition::from_exponents(m))
                .max_by_key(order_key)
                .ok_or_else(|| Error::Singular("non-polynomial remainder".into()))?;
            let c = rest.coeff(&lead.to_exponents());
            rest = rest.checked_sub(&inv.generate_e(&lead)?.scale(&c))?;
            out.insert(lead, c);
        }
        Ok(out)
    }
}
