//! Nonsymmetric Macdonald polynomials `E_η` generated by the Demazure–Lustig
//! operators `T_i` and the raising operator `Φ_q`, their norms, and the
//! symmetric polynomials `P_κ` obtained by Hecke symmetrization.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::algebra::{Coeff, Params, ZPolynomial};
use crate::comb::{
    hook_products, n_stat, order_key, prec, spectral_vector, Composition, HookProduct, Permutation,
};
use crate::engine::{ratio, Engine};
use crate::error::{invalid, Error, Result};

pub(crate) fn check_index(n: usize, i: usize) -> Result<()> {
    if i < 1 || i >= n {
        return invalid(format!("operator index {i} must lie in 1..={}", n.saturating_sub(1)));
    }
    Ok(())
}

/// `δ_{i,η} = η̄_i / η̄_{i+1}` as an exponent pair, 1-based `i`.
pub fn delta_exp(eta: &Composition, i: usize) -> (i64, i64) {
    let s = spectral_vector(eta);
    ratio(s.exp(i), s.exp(i + 1))
}

/// Whether `p` has coefficient 1 on `z^η` and every other monomial of
/// modulus `|η|` is `≺ η`. With `lower_degrees_allowed`, monomials of
/// smaller total degree are permitted too; higher ones never are.
pub fn is_monic_triangular<F: Coeff>(p: &ZPolynomial<F>, eta: &Composition, lower_degrees_allowed: bool) -> bool {
    if !p.coeff(&eta.to_exponents()).is_one() {
        return false;
    }
    let m = eta.modulus() as i64;
    p.terms().all(|(mono, _)| {
        let Some(mu) = Composition::from_exponents(mono) else {
            return false;
        };
        let d = mu.modulus() as i64;
        mu == *eta || (d == m && prec(&mu, eta)) || (lower_degrees_allowed && d < m)
    })
}

impl<P: Params> Engine<P> {
    /// `T_i p = t p + (t z_i - z_{i+1})/(z_i - z_{i+1}) (s_i p - p)`.
    pub fn apply_t(&self, i: usize, p: &ZPolynomial<P::F>) -> Result<ZPolynomial<P::F>> {
        let n = p.nvars();
        check_index(n, i)?;
        let dd = p.divided_difference(i - 1);
        let lin = ZPolynomial::var(n, i - 1).scale(&self.t()).checked_sub(&ZPolynomial::var(n, i))?;
        p.scale(&self.t()).checked_sub(&lin.checked_mul(&dd)?)
    }

    /// `T_i^{-1} = t^{-1} - 1 + t^{-1} T_i`.
    pub fn apply_t_inv(&self, i: usize, p: &ZPolynomial<P::F>) -> Result<ZPolynomial<P::F>> {
        let tinv = self.t().try_inv()?;
        let tp = self.apply_t(i, p)?;
        p.scale(&(tinv.clone() - P::F::one())).checked_add(&tp.scale(&tinv))
    }

    /// The expansion of `T_i E_η` in the E basis, keyed by label.
    pub fn act_t_basis(&self, i: usize, eta: &Composition) -> Result<Vec<(Composition, P::F)>> {
        check_index(eta.n(), i)?;
        let (a, b) = (eta.part(i), eta.part(i + 1));
        let t = self.t();
        if a == b {
            return Ok(vec![(eta.clone(), t)]);
        }
        let d = delta_exp(eta, i);
        let own = (t.clone() - P::F::one()).try_div(&self.one_minus((-d.0, -d.1))?)?;
        let other = if a < b {
            t
        } else {
            // (1 - tδ)(1 - t^{-1}δ)/(1 - δ)^2
            let num = self.one_minus((d.0, d.1 + 1))? * &self.one_minus((d.0, d.1 - 1))?;
            let den = self.one_minus(d)?;
            num.try_div(&(den.clone() * &den))?
        };
        Ok(vec![(eta.clone(), own), (eta.swapped(i), other)])
    }

    /// `Φ_q E_η = t^{-#{i>1: η_i ≤ η_1}} E_{Φη}`: the scalar and the label.
    pub fn apply_phi_q_label(&self, eta: &Composition) -> Result<(P::F, Composition)> {
        let first = eta.part(1);
        let count = eta.parts()[1..].iter().filter(|&&x| x <= first).count() as i64;
        Ok((self.mono((0, -count))?, eta.raised()))
    }

    /// `Φ_q = z_n T_{n-1}^{-1} ⋯ T_1^{-1}`, with `T_1^{-1}` acting first.
    pub fn apply_phi_q(&self, p: &ZPolynomial<P::F>) -> Result<ZPolynomial<P::F>> {
        let n = p.nvars();
        let mut cur = p.clone();
        for i in 1..n {
            cur = self.apply_t_inv(i, &cur)?;
        }
        Ok(cur.mul_var(n - 1))
    }

    /// `E_η`, generated from `E_0 = 1`. If `η_n ≥ 1` it comes from
    /// `E_{(η_n - 1, η_1, …, η_{n-1})}` by `Φ_q`; otherwise from `E_{s_i η}`
    /// at the last descent `i` by inverting the action of `T_i`.
    pub fn generate_e(&self, eta: &Composition) -> Result<Arc<ZPolynomial<P::F>>> {
        if let Some(p) = Self::cached(self.e_cache(), eta) {
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
            let (scalar, label) = self.apply_phi_q_label(&mu)?;
            debug_assert_eq!(&label, eta);
            let e_mu = self.generate_e(&mu)?;
            let raised = self.apply_phi_q(&e_mu)?;
            raised.scale(&scalar.try_inv()?)
        } else {
            let i = (1..n).rev().find(|&i| eta.part(i) > eta.part(i + 1)).expect("a descent exists");
            let mu = eta.swapped(i);
            let e_mu = self.generate_e(&mu)?;
            let table = self.act_t_basis(i, &mu)?;
            let (own, other) = (&table[0].1, &table[1].1);
            let lhs = self.apply_t(i, &e_mu)?.checked_sub(&e_mu.scale(own))?;
            lhs.scale(&other.try_inv()?)
        };
        Ok(Self::publish(self.e_cache(), eta.clone(), poly))
    }

    /// `N_η / <1,1> = d′_η e_η / (d_η e′_η)`.
    pub fn norm_n(&self, eta: &Composition) -> Result<P::F> {
        let h = hook_products(eta);
        let p = self.params();
        let num = h.product(p, HookProduct::DPrime)? * &h.product(p, HookProduct::E)?;
        let den = h.product(p, HookProduct::D)? * &h.product(p, HookProduct::EPrime)?;
        num.try_div(&den)
    }

    /// `P_κ`: the Hecke symmetrization `Σ_w T_w E_κ`, scaled so that the
    /// coefficient of `z^κ` is 1.
    pub fn symmetrize_p(&self, kappa: &Composition) -> Result<ZPolynomial<P::F>> {
        if !kappa.is_partition() {
            return invalid(format!("{kappa:?} is not a partition"));
        }
        let n = kappa.n();
        let base = self.generate_e(kappa)?;
        let mut level: BTreeMap<Permutation, ZPolynomial<P::F>> = BTreeMap::new();
        level.insert(Permutation::identity(n), (*base).clone());
        let mut total = (*base).clone();
        for _ in 0..n * (n - 1) / 2 {
            let mut next: BTreeMap<Permutation, ZPolynomial<P::F>> = BTreeMap::new();
            for (w, poly) in &level {
                for i in 1..n {
                    let mut img = w.0.clone();
                    // s_i ∘ w swaps the values i and i+1
                    for v in img.iter_mut() {
                        if *v == i {
                            *v = i + 1;
                        } else if *v == i + 1 {
                            *v = i;
                        }
                    }
                    let sw = Permutation(img);
                    if sw.length() == w.length() + 1 && !next.contains_key(&sw) {
                        next.insert(sw, self.apply_t(i, poly)?);
                    }
                }
            }
            for poly in next.values() {
                total = total.checked_add(poly)?;
            }
            level = next;
        }
        let lead = total.coeff(&kappa.to_exponents());
        if lead.is_zero() {
            return Err(Error::Singular(format!("symmetrization of E_{kappa:?} lost its leading term")));
        }
        Ok(total.scale(&lead.try_inv()?))
    }

    /// Expands a symmetric polynomial in the `P_λ` basis by repeatedly
    /// removing the leading monomial, which is always a partition.
    pub fn expand_in_p_basis(&self, p: &ZPolynomial<P::F>) -> Result<BTreeMap<Composition, P::F>> {
        let mut rest = p.clone();
        let mut out = BTreeMap::new();
        while !rest.is_zero() {
            let lead = rest
                .terms()
                .filter_map(|(m, _)| Composition::from_exponents(m))
                .max_by_key(order_key)
                .ok_or_else(|| Error::Singular("non-polynomial remainder".into()))?;
            if !lead.is_partition() {
                return Err(Error::Singular(format!("leading monomial {lead:?} is not a partition")));
            }
            let c = rest.coeff(&lead.to_exponents());
            rest = rest.checked_sub(&self.symmetrize_p(&lead)?.scale(&c))?;
            out.insert(lead, c);
        }
        Ok(out)
    }

    /// `P(t^{n-1}, …, t, 1)`.
    fn principal_specialization(&self, p: &ZPolynomial<P::F>) -> Result<P::F> {
        let n = p.nvars();
        let point: Vec<(i64, i64)> = (0..n).map(|i| (0, (n - 1 - i) as i64)).collect();
        p.eval_monomial_point(self.params(), &point)
    }

    /// `ψ_{λ/κ}` for a vertical strip `λ/κ`.
    pub fn psi_coefficient(&self, kappa: &Composition, lam: &Composition) -> Result<P::F> {
        let n = kappa.n();
        if lam.n() != n {
            return Err(Error::NvarsMismatch(n, lam.n()));
        }
        if !kappa.is_partition() || !lam.is_partition() {
            return invalid("psi needs two partitions");
        }
        let theta: Vec<i64> = (1..=n).map(|i| lam.part(i) as i64 - kappa.part(i) as i64).collect();
        if theta.iter().any(|&d| d != 0 && d != 1) {
            return invalid(format!("{lam:?}/{kappa:?} is not a vertical strip"));
        }
        let pk = self.principal_specialization(&self.symmetrize_p(kappa)?)?;
        let pl = self.principal_specialization(&self.symmetrize_p(lam)?)?;
        let shift = n_stat(lam) as i64 - n_stat(kappa) as i64;
        let mut acc = self.mono((0, shift))? * &pk.try_div(&pl)?;
        for i in 1..=n {
            for j in i + 1..=n {
                let a = kappa.part(i) as i64 - kappa.part(j) as i64;
                let gap = (j - i) as i64;
                let num = self.one_minus((a, gap + theta[i - 1] - theta[j - 1]))?;
                let den = self.one_minus((a, gap))?;
                acc = acc * &num.try_div(&den)?;
            }
        }
        Ok(acc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::text::parse_scalar;
    use crate::algebra::{ParamScalar, Symbolic};
    use crate::comb::compositions_up_to;

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

    #[test]
    fn t_operator_examples() {
        let e = eng();
        let one = Poly::one(2);
        assert_eq!(e.apply_t(1, &one).unwrap(), one.scale(&ParamScalar::t()));
        let z2 = Poly::var(2, 1);
        let expect = &Poly::var(2, 0).scale(&ParamScalar::t()) + &z2.scale(&sc("t - 1", "1"));
        assert_eq!(e.apply_t(1, &z2).unwrap(), expect);
        let z1 = Poly::var(2, 0);
        let tz = e.apply_t(1, &z1).unwrap();
        let a = &tz - &z1.scale(&ParamScalar::t());
        let quad = &e.apply_t(1, &a).unwrap() + &a;
        assert!(quad.is_zero());
        assert!(e.apply_t(2, &z1).is_err());
    }

    #[test]
    fn t_basis_examples() {
        let e = eng();
        let tab = e.act_t_basis(1, &c("0,1")).unwrap();
        assert_eq!(tab, vec![(c("0,1"), sc("t - 1", "1 - q*t")), (c("1,0"), ParamScalar::t())]);
        assert_eq!(e.act_t_basis(1, &c("1,1")).unwrap(), vec![(c("1,1"), ParamScalar::t())]);
        let tab = e.act_t_basis(1, &c("1,0")).unwrap();
        assert_eq!(tab[0].1, sc("q*t^2 - q*t", "q*t - 1"));
        assert_eq!(tab[1].1, e.norm_n(&c("1,0")).unwrap());
    }

    #[test]
    fn phi_q_labels() {
        let e = eng();
        assert_eq!(e.apply_phi_q_label(&c("0,0")).unwrap(), (ParamScalar::monomial(0, -1), c("0,1")));
        assert_eq!(e.apply_phi_q_label(&c("1,0")).unwrap(), (ParamScalar::monomial(0, -1), c("0,2")));
        assert_eq!(e.apply_phi_q_label(&c("0,1,2")).unwrap(), (ParamScalar::one(), c("1,2,1")));
    }

    #[test]
    fn e_examples() {
        let e = eng();
        assert_eq!(*e.generate_e(&c("0,0,0")).unwrap(), Poly::one(3));
        assert_eq!(*e.generate_e(&c("0,1")).unwrap(), Poly::var(2, 1));
        let e10 = e.generate_e(&c("1,0")).unwrap();
        assert_eq!(e10.to_string(), "z1 + (q*t - q)/(q*t - 1)*z2");
        let e02 = e.generate_e(&c("0,2")).unwrap();
        assert_eq!(e02.coeff(&[1, 1]), sc("1 - t", "1 - q*t"));
    }

    #[test]
    fn norm_examples() {
        let e = eng();
        assert!(e.norm_n(&c("0,0")).unwrap().is_one());
        assert!(e.norm_n(&c("0,1")).unwrap().is_one());
        assert_eq!(e.norm_n(&c("1,0")).unwrap(), sc("q^2*t^2 - q*t^2 - q + 1", "q^2*t^2 - 2*q*t + 1"));
    }

    #[test]
    fn symmetrization_examples() {
        let e = eng();
        assert_eq!(e.symmetrize_p(&c("0,0")).unwrap(), Poly::one(2));
        assert_eq!(e.symmetrize_p(&c("1,0")).unwrap(), &Poly::var(2, 0) + &Poly::var(2, 1));
        let p2 = e.symmetrize_p(&c("2,0")).unwrap();
        assert!(p2.coeff(&[2, 0]).is_one() && p2.coeff(&[0, 2]).is_one());
        assert_eq!(p2.coeff(&[1, 1]), sc("-q*t + q - t + 1", "1 - q*t"));
        assert!(e.symmetrize_p(&c("0,1")).is_err());
    }

    #[test]
    fn psi_examples() {
        let e = eng();
        assert!(e.psi_coefficient(&c("1,0"), &c("2,0")).unwrap().is_one());
        assert_eq!(e.psi_coefficient(&c("1,0"), &c("1,1")).unwrap(), sc("-q*t - q + t + 1", "1 - q*t"));
        assert!(e.psi_coefficient(&c("0"), &c("1")).unwrap().is_one());
        assert!(e.psi_coefficient(&c("0,0"), &c("2,0")).is_err());
    }

    #[test]
    fn triangular_and_path_independent() {
        let e = eng();
        for eta in compositions_up_to(3, 3) {
            let p = e.generate_e(&eta).unwrap();
            assert!(is_monic_triangular(&p, &eta, false), "{eta:?}: {p}");
        }
        // Φ_q acts on every generated E exactly as the label rule says
        for eta in compositions_up_to(3, 2) {
            let (s, label) = e.apply_phi_q_label(&eta).unwrap();
            let lhs = e.apply_phi_q(&e.generate_e(&eta).unwrap()).unwrap();
            assert_eq!(lhs, e.generate_e(&label).unwrap().scale(&s), "{eta:?}");
            for i in 1..3 {
                let mut rhs = Poly::zero(3);
                for (mu, k) in e.act_t_basis(i, &eta).unwrap() {
                    rhs = &rhs + &e.generate_e(&mu).unwrap().scale(&k);
                }
                assert_eq!(e.apply_t(i, &e.generate_e(&eta).unwrap()).unwrap(), rhs, "{eta:?} T{i}");
            }
        }
    }
}
