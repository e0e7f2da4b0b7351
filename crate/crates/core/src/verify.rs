//! Verification suites: every identity is checked exhaustively over a
//! bounded range, stopping at the first counterexample in enumeration
//! order (smallest modulus first).

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{elementary_symmetric, Coeff, Params, Rat, Specialized, ZPolynomial};
use crate::comb::{chi_r, compositions, compositions_up_to, partitions, spectral_vector, Composition};
use crate::ctnorm::verify_orthogonality_norms;
use crate::emac::is_monic_triangular;
use crate::engine::Engine;
use crate::error::{invalid, Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    OracleE,
    OracleEstar,
    Vanishing,
    PieriAgreement,
    Duality,
    Norms,
    SymmetricPieri,
    Binomials,
}

impl Suite {
    pub const ALL: [Suite; 8] = [
        Suite::OracleE,
        Suite::OracleEstar,
        Suite::Vanishing,
        Suite::PieriAgreement,
        Suite::Duality,
        Suite::Norms,
        Suite::SymmetricPieri,
        Suite::Binomials,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::OracleE => "oracle-e",
            Suite::OracleEstar => "oracle-estar",
            Suite::Vanishing => "vanishing",
            Suite::PieriAgreement => "pieri-agreement",
            Suite::Duality => "duality",
            Suite::Norms => "norms",
            Suite::SymmetricPieri => "symmetric-pieri",
            Suite::Binomials => "binomials",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Suite> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown suite {s:?}")))
    }
}

/// Size bounds for a run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bounds {
    pub max_n: usize,
    pub max_mod: u32,
    /// Specializations `t = q^k` used by the norm suite.
    pub ks: Vec<u32>,
    /// Seed for random specialization points.
    pub seed: u64,
}

impl Default for Bounds {
    fn default() -> Bounds {
        Bounds { max_n: 3, max_mod: 2, ks: vec![1, 2], seed: 7 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteReport {
    pub suite: Suite,
    pub checks: usize,
    pub counterexample: Option<String>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.counterexample {
            None => write!(f, "{}: pass ({} checks)", self.suite, self.checks),
            Some(c) => write!(f, "{}: FAIL after {} checks: {}", self.suite, self.checks, c),
        }
    }
}

/// Counts checks and keeps the first failure.
#[derive(Default)]
struct Tally {
    checks: usize,
    failure: Option<String>,
}

impl Tally {
    /// Records one check; returns false once something has failed.
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) -> bool {
        self.checks += 1;
        if !ok && self.failure.is_none() {
            self.failure = Some(what());
        }
        self.failure.is_none()
    }

    fn failed(&self) -> bool {
        self.failure.is_some()
    }
}

/// `n = 2..=max_n` together with all compositions of modulus `≤ max_mod`.
fn range(b: &Bounds) -> impl Iterator<Item = Composition> + '_ {
    (2..=b.max_n.max(2)).flat_map(move |n| compositions_up_to(n, b.max_mod))
}

/// A random rational in `±[2,9]/[1,7]`, never `0` or `±1`.
fn random_rat(rng: &mut ChaCha8Rng) -> Rat {
    loop {
        let num: i64 = rng.gen_range(-9..=9);
        let den: i64 = rng.gen_range(1..=7);
        if num.abs() > 1 && num % den != 0 {
            return Rat::new(num, den).expect("nonzero denominator");
        }
    }
}

/// Runs `f` at random specializations drawn from `rng`, redrawing when a
/// denominator vanishes at the chosen point.
pub fn at_random_point<T>(
    rng: &mut ChaCha8Rng,
    mut f: impl FnMut(&Engine<Specialized>) -> Result<T>,
) -> Result<(Specialized, T)> {
    for _ in 0..32 {
        let p = Specialized { q: random_rat(rng), t: random_rat(rng) };
        let engine = Engine::new(p.clone());
        match f(&engine) {
            Err(Error::DivisionByZero(_)) | Err(Error::Singular(_)) => continue,
            other => return other.map(|v| (p, v)),
        }
    }
    Err(Error::Singular("no usable random point after 32 draws".into()))
}

pub fn run_suite<P: Params>(engine: &Engine<P>, suite: Suite, b: &Bounds) -> Result<SuiteReport> {
    let mut t = Tally::default();
    match suite {
        Suite::OracleE => oracle_e(engine, b, &mut t)?,
        Suite::OracleEstar => oracle_estar(engine, b, &mut t)?,
        Suite::Vanishing => vanishing(engine, b, &mut t)?,
        Suite::PieriAgreement => pieri_agreement(engine, b, &mut t)?,
        Suite::Duality => duality(engine, b, &mut t)?,
        Suite::Norms => norms(b, &mut t)?,
        Suite::SymmetricPieri => symmetric_pieri(engine, b, &mut t)?,
        Suite::Binomials => binomials(engine, b, &mut t)?,
    }
    Ok(SuiteReport { suite, checks: t.checks, counterexample: t.failure })
}

/// Triangularity, the `T_i` action table and the top homogeneous part of `E*`.
fn oracle_e<P: Params>(e: &Engine<P>, b: &Bounds, t: &mut Tally) -> Result<()> {
    for eta in range(b) {
        let p = e.generate_e(&eta)?;
        if !t.check(is_monic_triangular(&p, &eta, false), || format!("E_{eta:?} is not monic triangular")) {
            return Ok(());
        }
        let top = e.twin().generate_estar(&eta)?.top_homogeneous()?;
        if !t.check(top == *p, || format!("top(E*_{eta:?})(1/q,1/t) != E_{eta:?}")) {
            return Ok(());
        }
        for i in 1..eta.n() {
            let mut rhs = ZPolynomial::zero(eta.n());
            for (mu, c) in e.act_t_basis(i, &eta)? {
                rhs = rhs.checked_add(&e.generate_e(&mu)?.scale(&c))?;
            }
            if !t.check(e.apply_t(i, &p)? == rhs, || format!("T_{i} E_{eta:?} disagrees with its table")) {
                return Ok(());
            }
        }
    }
    Ok(())
}

/// `E*` against the vanishing oracle (at random points from `n = 4`), and
/// the `Ξ_i` eigenrelations.
fn oracle_estar<P: Params>(e: &Engine<P>, b: &Bounds, t: &mut Tally) -> Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(b.seed);
    for n in 2..=b.max_n.max(2) {
        for eta in compositions_up_to(n, b.max_mod) {
            let ok = if n <= 3 {
                e.vanishing_solve_oracle(&eta)? == *e.generate_estar(&eta)?
            } else {
                let mut all = true;
                for _ in 0..3 {
                    let (_, same) =
                        at_random_point(&mut rng, |s| Ok(s.vanishing_solve_oracle(&eta)? == *s.generate_estar(&eta)?))?;
                    all &= same;
                }
                all
            };
            if !t.check(ok, || format!("E*_{eta:?} differs from the vanishing solution")) {
                return Ok(());
            }
        }
    }
    for eta in range(b) {
        let p = e.generate_estar(&eta)?;
        let s = spectral_vector(&eta);
        for i in 1..=eta.n() {
            let (a, c) = s.exp(i);
            let ok = e.xi_apply(i, &p)? == p.scale(&e.params().monomial(-a, -c)?);
            if !t.check(ok, || format!("Ξ_{i} E*_{eta:?} != η̄_{i}^(-1) E*_{eta:?}")) {
                return Ok(());
            }
        }
    }
    Ok(())
}

/// `E*_η(λ̄) = 0` exactly when `η ⪯′ λ` fails, for `|η| < |λ| ≤ |η| + 3`.
fn vanishing<P: Params>(e: &Engine<P>, b: &Bounds, t: &mut Tally) -> Result<()> {
    for eta in range(b) {
        for extra in 1..=3 {
            for lam in compositions(eta.n(), eta.modulus() + extra) {
                let zero = e.spectral_evaluate(&eta, &lam)?.is_zero();
                let predicted = e.extra_vanishing_test(&eta, &lam);
                if !t.check(zero == predicted, || {
                    format!("E*_{eta:?} at {lam:?}: vanishes = {zero}, successor test predicts {predicted}")
                }) {
                    return Ok(());
                }
            }
        }
    }
    Ok(())
}

/// All Pieri routes against the brute-force expansion, both residuals and
/// the unity coefficient.
fn pieri_agreement<P: Params>(e: &Engine<P>, b: &Bounds, t: &mut Tally) -> Result<()> {
    for eta in range(b) {
        let oracle1 = e.product_expand_oracle(&eta, 1)?;
        let closed = e.pieri_r1_closed(&eta)?;
        if !t.check(closed == oracle1, || format!("δβ closed form differs from the oracle at {eta:?}")) {
            return Ok(());
        }
        for f in e.pieri_r1_product_form(&eta)? {
            if !t.check(oracle1.get(&f.lam) == Some(&f.coeff), || {
                format!("A_I B_I form differs from the oracle at {eta:?} -> {:?}", f.lam)
            }) {
                return Ok(());
            }
        }
        for r in 1..=eta.n() {
            let table = e.interpolation_expansion(&eta, r)?;
            if !t.check(e.interpolation_residual(&table)?.is_zero(), || format!("E* residual at {eta:?}, r={r}")) {
                return Ok(());
            }
            let h = e.pieri_homogeneous(&eta, r)?;
            if !t.check(e.homogeneous_residual(&eta, r, &h)?.is_zero(), || format!("E residual at {eta:?}, r={r}")) {
                return Ok(());
            }
            let oracle = if r == 1 { oracle1.clone() } else { e.product_expand_oracle(&eta, r)? };
            if !t.check(h == oracle, || format!("recursion differs from the oracle at {eta:?}, r={r}")) {
                return Ok(());
            }
            let chi = chi_r(&eta, r)?;
            if !t.check(h.get(&chi).is_some_and(Coeff::is_one), || format!("A_({eta:?},{chi:?}) != 1")) {
                return Ok(());
            }
        }
        if t.failed() {
            return Ok(());
        }
    }
    Ok(())
}

fn duality<P: Params>(e: &Engine<P>, b: &Bounds, t: &mut Tally) -> Result<()> {
    for eta in range(b) {
        for r in 1..eta.n() {
            let direct = e.pieri_homogeneous(&eta, r)?;
            for lam in compositions(eta.n(), eta.modulus() + r as u32) {
                let lhs = direct.get(&lam).cloned().unwrap_or_else(P::F::zero);
                let rhs = e.duality_transfer(&eta, &lam, r)?;
                if !t.check(lhs == rhs, || format!("duality fails at {eta:?} -> {lam:?}, r={r}")) {
                    return Ok(());
                }
            }
        }
    }
    Ok(())
}

fn norms(b: &Bounds, t: &mut Tally) -> Result<()> {
    for n in 2..=b.max_n.max(2) {
        for &k in &b.ks {
            let rep = verify_orthogonality_norms(n, k, b.max_mod)?;
            t.checks += rep.pairs.saturating_sub(1);
            let first = rep.failures.first().cloned();
            if !t.check(rep.passed(), || {
                let w = first.expect("a failure exists");
                format!("<E_{:?},E_{:?}> = {} but expected {} (n={n}, k={k})", w.eta, w.nu, w.got, w.expected)
            }) {
                return Ok(());
            }
        }
    }
    Ok(())
}

/// `e_r P_κ = Σ ψ_{λ/κ} P_λ` over vertical strips.
fn symmetric_pieri<P: Params>(e: &Engine<P>, b: &Bounds, t: &mut Tally) -> Result<()> {
    for n in 1..=b.max_n {
        for m in 0..=b.max_mod {
            for kappa in partitions(n, m) {
                let pk = e.symmetrize_p(&kappa)?;
                for r in 1..=n {
                    let prod = elementary_symmetric::<P::F>(n, r)?.checked_mul(&pk)?;
                    let got = e.expand_in_p_basis(&prod)?;
                    for lam in partitions(n, m + r as u32) {
                        let strip = (1..=n).all(|i| lam.part(i) == kappa.part(i) || lam.part(i) == kappa.part(i) + 1);
                        let expect = if strip { e.psi_coefficient(&kappa, &lam)? } else { P::F::zero() };
                        let have = got.get(&lam).cloned().unwrap_or_else(P::F::zero);
                        if !t.check(have == expect, || format!("e_{r} P_{kappa:?}: coefficient of P_{lam:?}")) {
                            return Ok(());
                        }
                    }
                }
            }
        }
    }
    Ok(())
}

/// The recursive binomial coefficient against `E*_η(ν̄)/E*_ν(ν̄)`.
fn binomials<P: Params>(e: &Engine<P>, b: &Bounds, t: &mut Tally) -> Result<()> {
    for eta in range(b) {
        for extra in 1..=3 {
            for nu in compositions(eta.n(), eta.modulus() + extra) {
                let ok = e.binomial_recursive(&eta, &nu, None)? == e.binomial_direct(&eta, &nu)?;
                if !t.check(ok, || format!("binomial recursion fails at {eta:?}, {nu:?}")) {
                    return Ok(());
                }
            }
        }
    }
    Ok(())
}

/// Parses a list of suite names, expanding `all`.
pub fn parse_suites(name: &str) -> Result<Vec<Suite>> {
    if name == "all" {
        return Ok(Suite::ALL.to_vec());
    }
    match name.parse() {
        Ok(s) => Ok(vec![s]),
        Err(_) => invalid(format!("unknown suite {name:?}")),
    }
}
