//! Interpolation Macdonald polynomials `E*_η`: generation by the Hecke
//! operators `H_i` and the raising operator `Φ`, evaluation at spectral
//! points, and the generalized q,t-binomial coefficients.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::sync::Arc;

use crate::algebra::linalg::solve_overdetermined;
use crate::algebra::{Coeff, Monomial, Params, ZPolynomial};
use crate::comb::{
    c_i_apply, compositions_up_to, hook_products, is_successor, maximal_sets, prec, spectral_vector, Composition,
    HookProduct,
};
use crate::emac::{check_index, delta_exp};
use crate::engine::{ratio, Engine};
use crate::error::{invalid, Error, Result};

/// A linear system for the coefficients of `E*_η` in the monomials
/// `unknowns`, one row per vanishing condition `E*_η(μ̄) = 0`.
pub struct VanishingSystem<F> {
    pub unknowns: Vec<Composition>,
    pub conditions: Vec<Composition>,
    pub rows: Vec<Vec<F>>,
    pub rhs: Vec<F>,
}

impl<P: Params> Engine<P> {
    /// `H_i p = t p + (z_i - t z_{i+1})/(z_i - z_{i+1}) (s_i p - p)`.
    pub fn apply_h(&self, i: usize, p: &ZPolynomial<P::F>) -> Result<ZPolynomial<P::F>> {
        let n = p.nvars();
        check_index(n, i)?;
        let dd = p.divided_difference(i - 1);
        let lin = ZPolynomial::var(n, i - 1).checked_sub(&ZPolynomial::var(n, i).scale(&self.t()))?;
        p.scale(&self.t()).checked_sub(&lin.checked_mul(&dd)?)
    }

    /// `Φ p = (z_n - t^{1-n}) p(z_n/q, z_1, …, z_{n-1})`.
    pub fn apply_phi_star(&self, p: &ZPolynomial<P::F>) -> Result<ZPolynomial<P::F>> {
        let n = p.nvars();
        let mut shifted = Vec::with_capacity(p.len());
        for (m, c) in p.terms() {
            let mut e: Monomial = m[1..].iter().copied().collect();
            e.push(m[0]);
            shifted.push((e, c.clone() * &self.mono((-(m[0] as i64), 0))?));
        }
        let delta = ZPolynomial::from_terms(n, p.is_laurent(), shifted)?;
        let lin = ZPolynomial::var(n, n - 1).checked_sub(&ZPolynomial::constant(n, self.mono((0, 1 - n as i64))?))?;
        lin.checked_mul(&delta)
    }

    /// `Φ E*_η = q^{-η_1} E*_{Φη}`: the scalar and the label.
    pub fn apply_phi_star_label(&self, eta: &Composition) -> Result<(P::F, Composition)> {
        Ok((self.mono((-(eta.part(1) as i64), 0))?, eta.raised()))
    }

    /// The expansion of `H_i E*_η` in the E* basis.
    pub fn act_h_basis(&self, i: usize, eta: &Composition) -> Result<Vec<(Composition, P::F)>> {
        check_index(eta.n(), i)?;
        let (a, b) = (eta.part(i), eta.part(i + 1));
        if a == b {
            return Ok(vec![(eta.clone(), self.t())]);
        }
        let d = delta_exp(eta, i);
        let own = (self.t() - P::F::one()).try_div(&self.one_minus((-d.0, -d.1))?)?;
        let other = if a < b {
            P::F::one()
        } else {
            // (1 - tδ)(t - δ)/(1 - δ)^2
            let num = self.one_minus((d.0, d.1 + 1))? * &(self.t() - self.mono(d)?);
            let den = self.one_minus(d)?;
            num.try_div(&(den.clone() * &den))?
        };
        Ok(vec![(eta.clone(), own), (eta.swapped(i), other)])
    }

    /// `H_i ⋯ H_{n-1} Φ H_1 ⋯ H_{i-1} p`, rightmost factor first.
    pub fn xi_word(&self, i: usize, p: &ZPolynomial<P::F>) -> Result<ZPolynomial<P::F>> {
        let n = p.nvars();
        if i < 1 || i > n {
            return invalid(format!("Ξ index {i} must lie in 1..={n}"));
        }
        let mut cur = p.clone();
        for j in (1..i).rev() {
            cur = self.apply_h(j, &cur)?;
        }
        cur = self.apply_phi_star(&cur)?;
        for j in (i..n).rev() {
            cur = self.apply_h(j, &cur)?;
        }
        Ok(cur)
    }

    /// `Ξ_i p = z_i^{-1}(p + H_i ⋯ H_{n-1} Φ H_1 ⋯ H_{i-1} p)`; Laurent unless
    /// the division by `z_i` is exact.
    pub fn xi_apply(&self, i: usize, p: &ZPolynomial<P::F>) -> Result<ZPolynomial<P::F>> {
        let n = p.nvars();
        let sum = p.checked_add(&self.xi_word(i, p)?)?;
        let mut shift = vec![0i32; n];
        shift[i - 1] = -1;
        let q = sum.into_laurent().shift(&shift)?;
        Ok(q.clone().into_polynomial().unwrap_or(q))
    }

    /// `E*_η` from `E*_0 = 1`, along the same path as [`Engine::generate_e`].
    pub fn generate_estar(&self, eta: &Composition) -> Result<Arc<ZPolynomial<P::F>>> {
        if let Some(p) = Self::cached(self.estar_cache(), eta) {
            return Ok(p);
        }
        let n = eta.n();
        let parts = eta.parts();
        let poly = if parts.iter().all(|&x| x == 0) {
            ZPolynomial::one(n)
        } else if parts[n - 1] >= 1 {
            let mut mu = vec![parts[n - 1] - 1];
            mu.extend_from_slice(&parts[..n - 1]);
            let mu = Composition::new(mu)?;
            let (scalar, _) = self.apply_phi_star_label(&mu)?;
            let e_mu = self.generate_estar(&mu)?;
            self.apply_phi_star(&e_mu)?.scale(&scalar.try_inv()?)
        } else {
            let i = (1..n).rev().find(|&i| eta.part(i) > eta.part(i + 1)).expect("a descent exists");
            let mu = eta.swapped(i);
            let e_mu = self.generate_estar(&mu)?;
            let table = self.act_h_basis(i, &mu)?;
            self.apply_h(i, &e_mu)?.checked_sub(&e_mu.scale(&table[0].1))?
        };
        Ok(Self::publish(self.estar_cache(), eta.clone(), poly))
    }

    /// `E*_η(η̄) = d′_η(1/q, 1/t) ∏ η̄_i^{η_i}`.
    pub fn principal_value(&self, eta: &Composition) -> Result<P::F> {
        let d = hook_products(eta).product(&self.params().inverted(), HookProduct::DPrime)?;
        let s = spectral_vector(eta);
        let (mut a, mut b) = (0i64, 0i64);
        for (i, &(x, y)) in s.exponents().iter().enumerate() {
            let e = eta.part(i + 1) as i64;
            a += e * x;
            b += e * y;
        }
        Ok(d * &self.mono((a, b))?)
    }

    /// `E*_η(μ̄)` by substitution.
    pub fn spectral_evaluate(&self, eta: &Composition, mu: &Composition) -> Result<P::F> {
        if eta.n() != mu.n() {
            return Err(Error::NvarsMismatch(eta.n(), mu.n()));
        }
        self.generate_estar(eta)?.eval_monomial_point(self.params(), spectral_vector(mu).exponents())
    }

    /// Whether `E*_η(λ̄) = 0`, decided combinatorially.
    pub fn extra_vanishing_test(&self, eta: &Composition, lam: &Composition) -> bool {
        !is_successor(eta, lam)
    }

    /// The vanishing conditions as a linear system: unknowns are all
    /// monomials of degree below `|η|` and those of degree `|η|` that are `≺ η`.
    pub fn vanishing_system(&self, eta: &Composition) -> Result<VanishingSystem<P::F>> {
        let n = eta.n();
        let m = eta.modulus();
        let all = compositions_up_to(n, m);
        let unknowns: Vec<Composition> =
            all.iter().filter(|mu| mu.modulus() < m || prec(mu, eta)).cloned().collect();
        let conditions: Vec<Composition> = all.iter().filter(|mu| *mu != eta).cloned().collect();
        let point_value = |mono: &Composition, at: &[(i64, i64)]| {
            let (mut a, mut b) = (0i64, 0i64);
            for (k, &(x, y)) in at.iter().enumerate() {
                let e = mono.part(k + 1) as i64;
                a += e * x;
                b += e * y;
            }
            self.mono((a, b))
        };
        let mut rows = Vec::with_capacity(conditions.len());
        let mut rhs = Vec::with_capacity(conditions.len());
        for mu in &conditions {
            let s = spectral_vector(mu);
            let row = unknowns.iter().map(|u| point_value(u, s.exponents())).collect::<Result<_>>()?;
            rows.push(row);
            rhs.push(-point_value(eta, s.exponents())?);
        }
        Ok(VanishingSystem { unknowns, conditions, rows, rhs })
    }

    /// `E*_η` as the unique monic solution of its vanishing conditions.
    pub fn vanishing_solve_oracle(&self, eta: &Composition) -> Result<ZPolynomial<P::F>> {
        let sys = self.vanishing_system(eta)?;
        let n = eta.n();
        let mut terms = vec![(eta.to_exponents(), P::F::one())];
        if !sys.unknowns.is_empty() {
            let x = solve_overdetermined(sys.rows, sys.rhs)?;
            terms.extend(sys.unknowns.iter().zip(x).map(|(u, c)| (u.to_exponents(), c)));
        }
        ZPolynomial::from_terms(n, false, terms)
    }

    /// `E*_η(ν̄) / E*_ν(ν̄)`.
    pub fn binomial_direct(&self, eta: &Composition, nu: &Composition) -> Result<P::F> {
        self.spectral_evaluate(eta, nu)?.try_div(&self.principal_value(nu)?)
    }

    /// `q^{-η_{t_1}} δ(η,I) β(η,I) / (1 - t)`, the binomial coefficient of
    /// `η` and `c_I(η)` for a maximal `I`.
    pub fn binomial_one_step(&self, eta: &Composition, set: &[usize]) -> Result<P::F> {
        let (delta, beta) = self.delta_beta(eta, set)?;
        let lead = self.mono((-(eta.part(set[0]) as i64), 0))?;
        (lead * &delta * &beta).try_div(&(P::F::one() - self.t()))
    }

    /// `δ(η,I)` and `β(η,I)`.
    pub fn delta_beta(&self, eta: &Composition, set: &[usize]) -> Result<(P::F, P::F)> {
        let lam = c_i_apply(eta, set)?;
        let (se, sl) = (spectral_vector(eta), spectral_vector(&lam));
        let mut delta = P::F::one();
        for &tu in set {
            let denom = self.one_minus(ratio(sl.exp(tu), se.exp(tu)))?;
            delta = delta * &(self.t() - P::F::one()).try_div(&denom)?;
        }
        let mut acc = P::F::one();
        let ts = *set.last().expect("nonempty set");
        for i in 1..=eta.n() {
            if set.contains(&i) {
                continue;
            }
            // the first element of I above i, or the raised entry past t_s
            let (value, x) = match set.iter().find(|&&tu| tu > i) {
                Some(&tu) => (eta.part(tu), ratio(se.exp(tu), se.exp(i))),
                None => {
                    debug_assert!(i > ts);
                    let e1 = se.exp(set[0]);
                    (eta.part(set[0]) + 1, ratio((e1.0 + 1, e1.1), se.exp(i)))
                }
            };
            if eta.part(i) <= value {
                continue;
            }
            let xv = self.mono(x)?;
            let num = (xv.clone() - self.t()) * &(self.t() * &xv - P::F::one());
            let den = xv - P::F::one();
            acc = acc * &num.try_div(&(den.clone() * &den))?;
        }
        Ok((delta, acc))
    }

    /// The expansion of `H_k ⋯ H_{n-1} Φ H_1 ⋯ H_{k-1} E*_η` and the set of
    /// labels met on the way, both branches kept at every unequal step.
    pub fn xi_word_expansion(
        &self,
        eta: &Composition,
        k: usize,
    ) -> Result<(BTreeMap<Composition, P::F>, BTreeSet<Composition>)> {
        let n = eta.n();
        if k < 1 || k > n {
            return invalid(format!("index {k} must lie in 1..={n}"));
        }
        let mut cur: BTreeMap<Composition, P::F> = BTreeMap::from([(eta.clone(), P::F::one())]);
        let mut labels: BTreeSet<Composition> = cur.keys().cloned().collect();
        let hecke = |j: usize, cur: BTreeMap<Composition, P::F>, labels: &mut BTreeSet<Composition>| {
            let mut next: BTreeMap<Composition, P::F> = BTreeMap::new();
            for (mu, c) in cur {
                for (nu, k) in self.act_h_basis(j, &mu)? {
                    labels.insert(nu.clone());
                    let v = next.remove(&nu).unwrap_or_else(P::F::zero) + &(c.clone() * &k);
                    next.insert(nu, v);
                }
            }
            Ok::<_, Error>(next)
        };
        for j in (1..k).rev() {
            cur = hecke(j, cur, &mut labels)?;
        }
        let mut raised = BTreeMap::new();
        labels.clear();
        for (mu, c) in cur {
            let (s, nu) = self.apply_phi_star_label(&mu)?;
            labels.insert(nu.clone());
            raised.insert(nu, c * &s);
        }
        cur = raised;
        for j in (k..n).rev() {
            cur = hecke(j, cur, &mut labels)?;
        }
        cur.retain(|_, v| !v.is_zero());
        Ok((cur, labels))
    }

    /// `D_k(η)`: labels of modulus `|η| + 1` produced by the word of `Ξ_k`.
    pub fn d_k(&self, eta: &Composition, k: usize) -> Result<BTreeSet<Composition>> {
        Ok(self.xi_word_expansion(eta, k)?.1)
    }

    /// The binomial coefficient through the recursion over `D_k`, where `k`
    /// defaults to the leftmost position of `η` whose value occurs with a
    /// different frequency in `ν`.
    pub fn binomial_recursive(&self, eta: &Composition, nu: &Composition, k: Option<usize>) -> Result<P::F> {
        if eta.n() != nu.n() {
            return Err(Error::NvarsMismatch(eta.n(), nu.n()));
        }
        if let Some(k) = k {
            check_position(eta.n(), k)?;
        }
        let mut memo = HashMap::new();
        self.binom_rec(eta, nu, k, &mut memo)
    }

    fn binom_rec(
        &self,
        eta: &Composition,
        lam: &Composition,
        k_override: Option<usize>,
        memo: &mut HashMap<(Composition, Composition), P::F>,
    ) -> Result<P::F> {
        let (a, b) = (eta.modulus(), lam.modulus());
        if b <= a {
            return Ok(if eta == lam { P::F::one() } else { P::F::zero() });
        }
        if !is_successor(eta, lam) {
            return Ok(P::F::zero());
        }
        if b == a + 1 {
            return self.one_step_to(eta, lam);
        }
        let key = (eta.clone(), lam.clone());
        if k_override.is_none() {
            if let Some(v) = memo.get(&key) {
                return Ok(v.clone());
            }
        }
        let (se, sl) = (spectral_vector(eta), spectral_vector(lam));
        let nonzero = |k: usize| sl.exp(k) != se.exp(k);
        let k = match k_override {
            Some(k) if nonzero(k) => Some(k),
            Some(k) => return Err(Error::Singular(format!("λ̄_{k} = η̄_{k}; choose another k"))),
            None => default_position(eta, lam).filter(|&k| nonzero(k)).or_else(|| (1..=eta.n()).find(|&k| nonzero(k))),
        }
        .ok_or_else(|| Error::Singular("no usable position k".into()))?;
        let denom = self.mono(ratio(sl.exp(k), se.exp(k)))? - P::F::one();
        let mut acc = P::F::zero();
        for nu in self.d_k(eta, k)? {
            if !is_successor(&nu, lam) {
                continue;
            }
            let step = self.binom_rec(eta, &nu, None, memo)?;
            if step.is_zero() {
                continue;
            }
            let sn = spectral_vector(&nu);
            let weight = (self.mono(ratio(sn.exp(k), se.exp(k)))? - P::F::one()).try_div(&denom)?;
            acc = acc + &(weight * &step * &self.binom_rec(&nu, lam, None, memo)?);
        }
        if k_override.is_none() {
            memo.insert(key, acc.clone());
        }
        Ok(acc)
    }

    /// The closed one-step value for `|λ| = |η| + 1`; zero if `λ` is not
    /// of the form `c_I(η)` with `I` maximal.
    pub fn one_step_to(&self, eta: &Composition, lam: &Composition) -> Result<P::F> {
        for set in maximal_sets(eta) {
            if c_i_apply(eta, &set)? == *lam {
                return self.binomial_one_step(eta, &set);
            }
        }
        Ok(P::F::zero())
    }
}

fn check_position(n: usize, k: usize) -> Result<()> {
    if k < 1 || k > n {
        return invalid(format!("position {k} must lie in 1..={n}"));
    }
    Ok(())
}

/// Leftmost `k` such that `η_k` occurs a different number of times in `λ`.
pub fn default_position(eta: &Composition, lam: &Composition) -> Option<usize> {
    let count = |c: &Composition, v: u32| c.parts().iter().filter(|&&x| x == v).count();
    (1..=eta.n()).find(|&k| count(eta, eta.part(k)) != count(lam, eta.part(k)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::text::parse_scalar;
    use crate::algebra::{ParamScalar, Rat, Specialized, Symbolic};
    use crate::comb::{compositions, successors_layered};
    use crate::emac::is_monic_triangular;

    type Poly = ZPolynomial<ParamScalar>;

    fn c(s: &str) -> Composition {
        s.parse().unwrap()
    }

    fn sc(n: &str, d: &str) -> ParamScalar {
        parse_scalar(n, d).unwrap()
    }

    fn eng() -> Engine<Symbolic> {
        Engine::new(Symbolic::generic())
    }

    fn z2_minus_tinv() -> Poly {
        Poly::var(2, 1).checked_sub(&Poly::constant(2, ParamScalar::monomial(0, -1))).unwrap()
    }

    #[test]
    fn h_operator_examples() {
        let e = eng();
        assert_eq!(e.apply_h(1, &Poly::one(2)).unwrap(), Poly::constant(2, ParamScalar::t()));
        assert_eq!(e.apply_h(1, &Poly::var(2, 1)).unwrap(), Poly::var(2, 0));
        let z1 = Poly::var(2, 0);
        let a = &e.apply_h(1, &z1).unwrap() - &z1.scale(&ParamScalar::t());
        assert!((&e.apply_h(1, &a).unwrap() + &a).is_zero());
    }

    #[test]
    fn phi_star_examples() {
        let e = eng();
        assert_eq!(e.apply_phi_star(&Poly::one(2)).unwrap(), z2_minus_tinv());
        let z1m = Poly::var(2, 0).checked_sub(&Poly::constant(2, ParamScalar::monomial(0, -1))).unwrap();
        assert_eq!(e.apply_phi_star(&z2_minus_tinv()).unwrap(), &z2_minus_tinv() * &z1m);
        assert_eq!(*e.generate_estar(&c("1,1")).unwrap(), &z2_minus_tinv() * &z1m);
    }

    #[test]
    fn xi_examples() {
        let e = eng();
        assert_eq!(e.xi_apply(1, &Poly::one(2)).unwrap(), Poly::one(2));
        let e01 = e.generate_estar(&c("0,1")).unwrap();
        assert_eq!(e.xi_apply(2, &e01).unwrap(), e01.scale(&ParamScalar::monomial(-1, 0)));
        for i in 1..=3 {
            let got = e.xi_apply(i, &Poly::one(3)).unwrap();
            assert_eq!(got, Poly::constant(3, ParamScalar::monomial(0, i as i64 - 1)));
        }
    }

    #[test]
    fn estar_examples() {
        let e = eng();
        assert_eq!(*e.generate_estar(&c("0,0")).unwrap(), Poly::one(2));
        assert_eq!(*e.generate_estar(&c("0,1")).unwrap(), z2_minus_tinv());
        let e10 = e.generate_estar(&c("1,0")).unwrap();
        assert!(e10.coeff(&[1, 0]).is_one());
        assert_eq!(e10.coeff(&[0, 1]), sc("t - 1", "q*t - 1"));
        assert_eq!(e10.coeff(&[0, 0]), sc("1 - q*t^2", "q*t^2 - t"));
        assert_eq!(e10.top_homogeneous().unwrap().len(), 2);
    }

    #[test]
    fn principal_values() {
        let e = eng();
        assert!(e.principal_value(&c("0,0,0")).unwrap().is_one());
        assert_eq!(e.principal_value(&c("0,1")).unwrap(), sc("q*t - 1", "t"));
        assert_eq!(e.principal_value(&c("1,1")).unwrap(), sc("q^2*t - q*t - q + 1", "t^2"));
        for eta in compositions_up_to(3, 3) {
            assert_eq!(e.principal_value(&eta).unwrap(), e.spectral_evaluate(&eta, &eta).unwrap(), "{eta:?}");
        }
    }

    #[test]
    fn spectral_evaluations() {
        let e = eng();
        assert!(e.spectral_evaluate(&c("0,1"), &c("0,0")).unwrap().is_zero());
        assert_eq!(e.spectral_evaluate(&c("0,1"), &c("1,1")).unwrap(), sc("q - 1", "t"));
        assert!(e.spectral_evaluate(&c("0,1"), &c("2,0")).unwrap().is_zero());
        assert!(e.extra_vanishing_test(&c("0,1"), &c("2,0")));
        assert!(!e.extra_vanishing_test(&c("1,2,1"), &c("1,2,2")));
        assert!(!e.extra_vanishing_test(&c("1,0"), &c("1,0")));
    }

    #[test]
    fn oracle_small() {
        let e = eng();
        assert_eq!(e.vanishing_solve_oracle(&c("0,0")).unwrap(), Poly::one(2));
        assert_eq!(e.vanishing_solve_oracle(&c("0,1")).unwrap(), z2_minus_tinv());
        for eta in compositions_up_to(2, 3).into_iter().chain(compositions_up_to(3, 2)) {
            assert_eq!(e.vanishing_solve_oracle(&eta).unwrap(), *e.generate_estar(&eta).unwrap(), "{eta:?}");
        }
    }

    #[test]
    fn oracle_specialized_n3() {
        let e = Engine::new(Specialized { q: Rat::new(3, 7).unwrap(), t: Rat::new(-5, 2).unwrap() });
        for eta in compositions(3, 3) {
            assert_eq!(e.vanishing_solve_oracle(&eta).unwrap(), *e.generate_estar(&eta).unwrap(), "{eta:?}");
        }
    }

    #[test]
    fn knop_bridge_and_triangularity() {
        let e = eng();
        let inv = e.inverted();
        for eta in compositions_up_to(3, 3) {
            let es = e.generate_estar(&eta).unwrap();
            assert!(is_monic_triangular(&es, &eta, true), "{eta:?}");
            let top = es.top_homogeneous().unwrap();
            assert_eq!(top, *inv.generate_e(&eta).unwrap(), "{eta:?}");
        }
    }

    #[test]
    fn eigenrelation_n2() {
        let e = eng();
        for eta in compositions_up_to(2, 3) {
            let es = e.generate_estar(&eta).unwrap();
            let s = spectral_vector(&eta);
            for i in 1..=2 {
                let (a, b) = s.exp(i);
                let expect = es.scale(&ParamScalar::monomial(-a, -b));
                assert_eq!(e.xi_apply(i, &es).unwrap(), expect, "{eta:?} Ξ{i}");
            }
        }
    }

    #[test]
    fn binomial_examples() {
        let e = eng();
        assert!(e.binomial_direct(&c("1,0"), &c("1,0")).unwrap().is_one());
        let v = sc("t", "q*t - 1");
        assert_eq!(e.binomial_direct(&c("0,1"), &c("1,1")).unwrap(), v);
        assert_eq!(e.binomial_direct(&c("0,0"), &c("0,1")).unwrap(), v);
        assert_eq!(e.binomial_one_step(&c("0,1"), &[1, 2]).unwrap(), v);
        assert_eq!(e.binomial_recursive(&c("0,1"), &c("1,1"), None).unwrap(), v);
        assert_eq!(
            e.binomial_recursive(&c("0,0"), &c("1,1"), None).unwrap(),
            e.binomial_direct(&c("0,0"), &c("1,1")).unwrap()
        );
    }

    #[test]
    fn one_step_matches_direct() {
        let e = eng();
        for eta in compositions_up_to(3, 3) {
            for set in maximal_sets(&eta) {
                let lam = c_i_apply(&eta, &set).unwrap();
                assert_eq!(
                    e.binomial_one_step(&eta, &set).unwrap(),
                    e.binomial_direct(&eta, &lam).unwrap(),
                    "{eta:?} {set:?}"
                );
            }
        }
    }

    #[test]
    fn word_expansion_coefficients() {
        // the coefficient of E*_ν is binom(η,ν)(ν̄_k/η̄_k - 1)
        let e = eng();
        for eta in compositions_up_to(3, 2) {
            let se = spectral_vector(&eta);
            for k in 1..=3 {
                let (table, labels) = e.xi_word_expansion(&eta, k).unwrap();
                for nu in successors_layered(&eta, 1).unwrap() {
                    let sn = spectral_vector(&nu);
                    let expect = e.binomial_direct(&eta, &nu).unwrap()
                        * &(ParamScalar::monomial(sn.exp(k).0 - se.exp(k).0, sn.exp(k).1 - se.exp(k).1)
                            - ParamScalar::one());
                    let got = table.get(&nu).cloned().unwrap_or_else(ParamScalar::zero);
                    assert_eq!(got, expect, "{eta:?} k={k} {nu:?}");
                    assert!(expect.is_zero() || labels.contains(&nu));
                }
            }
        }
    }

    #[test]
    fn recursive_matches_direct_n2() {
        let e = eng();
        for eta in compositions_up_to(2, 2) {
            for nu in compositions_up_to(2, eta.modulus() + 2) {
                if nu.modulus() <= eta.modulus() {
                    continue;
                }
                let direct = e.binomial_direct(&eta, &nu).unwrap();
                assert_eq!(e.binomial_recursive(&eta, &nu, None).unwrap(), direct, "{eta:?} {nu:?}");
            }
        }
    }
}
