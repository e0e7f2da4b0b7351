//! Acceptance criteria 1 to 12, one PASS/FAIL line each, all at exact equality.

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::Instant;

use macpieri::algebra::text::parse_scalar;
use macpieri::algebra::{elementary_symmetric, Coeff, ParamScalar, ZPolynomial};
use macpieri::comb::{
    apply_word_traced, c_i_apply, c_i_word, chi_r, compositions, compositions_up_to, partitions, spectral_vector,
    successor_test, Composition,
};
use macpieri::ctnorm::{ct_inner_product, specialized_weight, verify_orthogonality_norms};
use macpieri::verify::at_random_point;
use macpieri::{Engine, Result, Symbolic};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

type Outcome = Result<(bool, String)>;

fn c(s: &str) -> Composition {
    s.parse().expect("composition literal")
}

fn sc(num: &str, den: &str) -> ParamScalar {
    parse_scalar(num, den).expect("scalar literal")
}

fn upto(max_n: usize, max_mod: u32) -> Vec<Composition> {
    (1..=max_n).flat_map(|n| compositions_up_to(n, max_mod)).collect()
}

/// Collects the first failure while counting checks.
struct Run {
    checks: usize,
    first_failure: Option<String>,
}

impl Run {
    fn new() -> Run {
        Run { checks: 0, first_failure: None }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok && self.first_failure.is_none() {
            self.first_failure = Some(what());
        }
    }

    fn finish(self, note: &str) -> Outcome {
        Ok(match self.first_failure {
            None => (true, format!("{} checks{note}", self.checks)),
            Some(f) => (false, format!("first failure: {f}")),
        })
    }
}

fn criterion_1(e: &Engine<Symbolic>) -> Outcome {
    let mut run = Run::new();
    for eta in upto(3, 4) {
        let ok = e.vanishing_solve_oracle(&eta)? == *e.generate_estar(&eta)?;
        run.check(ok, || format!("symbolic {eta:?}"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(20_240_601);
    let mut points = Vec::new();
    for eta in compositions_up_to(4, 3) {
        for _ in 0..3 {
            let (p, ok) = at_random_point(&mut rng, |s| Ok(s.vanishing_solve_oracle(&eta)? == *s.generate_estar(&eta)?))?;
            points.push(p);
            run.check(ok, || format!("n=4 {eta:?} at q={}, t={}", points.last().unwrap().q, points.last().unwrap().t));
        }
    }
    run.finish(" (symbolic n<=3 |η|<=4; n=4 |η|<=3 at three random points each)")
}

fn criterion_2(e: &Engine<Symbolic>) -> Outcome {
    let mut run = Run::new();
    let inv = e.twin();
    for eta in upto(3, 4).into_iter().chain(compositions_up_to(4, 3)) {
        let top = inv.generate_estar(&eta)?.top_homogeneous()?;
        run.check(top == *e.generate_e(&eta)?, || format!("{eta:?}"));
    }
    run.finish("")
}

fn criterion_3(e: &Engine<Symbolic>) -> Outcome {
    let mut run = Run::new();
    for eta in upto(3, 3) {
        let p = e.generate_estar(&eta)?;
        let s = spectral_vector(&eta);
        for i in 1..=eta.n() {
            let (a, b) = s.exp(i);
            let ok = e.xi_apply(i, &p)? == p.scale(&ParamScalar::monomial(-a, -b));
            run.check(ok, || format!("Ξ_{i} on E*_{eta:?}"));
        }
    }
    run.finish("")
}

fn criterion_4(e: &Engine<Symbolic>) -> Outcome {
    let mut run = Run::new();
    let mut vanishing = 0;
    for eta in upto(3, 3) {
        for extra in 1..=3 {
            for lam in compositions(eta.n(), eta.modulus() + extra) {
                let zero = e.spectral_evaluate(&eta, &lam)?.is_zero();
                let absent = successor_test(&eta, &lam)?.is_none();
                vanishing += usize::from(zero);
                run.check(zero == absent, || format!("{eta:?} at {lam:?}: zero={zero}, no witness={absent}"));
            }
        }
    }
    run.finish(&format!(", {vanishing} of them vanishing"))
}

fn criterion_5(e: &Engine<Symbolic>) -> Outcome {
    let mut run = Run::new();
    for eta in upto(3, 3) {
        for r in 1..=eta.n() {
            let table = e.interpolation_expansion(&eta, r)?;
            run.check(e.interpolation_residual(&table)?.is_zero(), || format!("E* residual {eta:?} r={r}"));
            let h = e.pieri_homogeneous(&eta, r)?;
            run.check(e.homogeneous_residual(&eta, r, &h)?.is_zero(), || format!("E residual {eta:?} r={r}"));
        }
    }
    run.finish("")
}

fn criterion_6(e: &Engine<Symbolic>) -> Outcome {
    let mut run = Run::new();
    let hand = sc("q*t - t", "q*t - 1");
    run.check(e.pieri_r1_closed(&c("0,0"))?.get(&c("0,1")) == Some(&hand), || "A_((0,0),(0,1))".into());
    for eta in upto(4, 3) {
        let oracle = e.product_expand_oracle(&eta, 1)?;
        run.check(e.pieri_homogeneous(&eta, 1)? == oracle, || format!("recursion at {eta:?}"));
        run.check(e.pieri_r1_closed(&eta)? == oracle, || format!("δβ form at {eta:?}"));
        let forms = e.pieri_r1_product_form(&eta)?;
        let product: BTreeMap<Composition, ParamScalar> = forms.into_iter().map(|f| (f.lam, f.coeff)).collect();
        run.check(product == oracle, || format!("A_I B_I form at {eta:?}"));
    }
    run.finish("")
}

fn criterion_7(e: &Engine<Symbolic>) -> Outcome {
    let mut run = Run::new();
    for eta in upto(3, 3) {
        for r in 1..=eta.n() {
            let chi = chi_r(&eta, r)?;
            let h = e.pieri_homogeneous(&eta, r)?;
            run.check(h.get(&chi).is_some_and(Coeff::is_one), || format!("{eta:?} r={r} -> {chi:?}"));
        }
    }
    for eta in compositions_up_to(4, 3) {
        let chi = chi_r(&eta, 1)?;
        run.check(e.pieri_r1_closed(&eta)?.get(&chi).is_some_and(Coeff::is_one), || format!("n=4 {eta:?}"));
    }
    run.finish("")
}

fn criterion_8(e: &Engine<Symbolic>) -> Outcome {
    let mut run = Run::new();
    let ratio = e.norm_n(&c("0,0"))?.try_div(&e.norm_n(&c("0,1"))?)?;
    run.check(ratio.is_one(), || "N-ratio for (0,0),(0,1)".into());
    let inst = e.duality_transfer(&c("0,0"), &c("0,1"), 1)?;
    run.check(inst == sc("q*t - t", "q*t - 1"), || format!("hand instance gave {inst}"));
    for eta in upto(3, 2) {
        for r in 1..eta.n() {
            let direct = e.pieri_homogeneous(&eta, r)?;
            for lam in compositions(eta.n(), eta.modulus() + r as u32) {
                let lhs = direct.get(&lam).cloned().unwrap_or_else(ParamScalar::zero);
                run.check(lhs == e.duality_transfer(&eta, &lam, r)?, || format!("{eta:?} -> {lam:?}, r={r}"));
            }
        }
    }
    run.finish("")
}

fn criterion_9(e: &Engine<Symbolic>) -> Outcome {
    let mut run = Run::new();
    let v = e.binomial_recursive(&c("0,1"), &c("1,1"), None)?;
    run.check(v == sc("t", "q*t - 1"), || format!("binom((0,1),(1,1)) = {v}"));
    for eta in upto(3, 3) {
        for extra in 1..=3 {
            for nu in compositions(eta.n(), eta.modulus() + extra) {
                let ok = e.binomial_recursive(&eta, &nu, None)? == e.binomial_direct(&eta, &nu)?;
                run.check(ok, || format!("{eta:?}, {nu:?}"));
            }
        }
    }
    run.finish("")
}

fn criterion_10() -> Outcome {
    let mut run = Run::new();
    let one = ZPolynomial::<ParamScalar>::one(2);
    let w = specialized_weight(2, 1)?;
    let oo = ct_inner_product(&one, &one, &w)?;
    run.check(oo == sc("q + 1", "1"), || format!("<1,1> = {oo}"));
    for n in 2..=3 {
        for k in 1..=2 {
            let rep = verify_orthogonality_norms(n, k, 2)?;
            let first = rep.failures.first().map(|f| format!("n={n} k={k} {:?},{:?}", f.eta, f.nu));
            run.checks += rep.pairs - 1;
            run.check(rep.passed(), || first.unwrap_or_default());
        }
    }
    run.finish(" (pairs)")
}

fn criterion_11(e: &Engine<Symbolic>) -> Outcome {
    let mut run = Run::new();
    run.check(e.psi_coefficient(&c("1,0"), &c("2,0"))?.is_one(), || "ψ_(2,0)/(1,0)".into());
    let v = e.psi_coefficient(&c("1,0"), &c("1,1"))?;
    run.check(v == sc("-q*t - q + t + 1", "1 - q*t"), || format!("ψ_(1,1)/(1,0) = {v}"));
    for n in 1..=3 {
        for m in 0..=3 {
            for kappa in partitions(n, m) {
                let pk = e.symmetrize_p(&kappa)?;
                for r in 1..=n {
                    let got = e.expand_in_p_basis(&elementary_symmetric(n, r)?.checked_mul(&pk)?)?;
                    for lam in partitions(n, m + r as u32) {
                        let strip = (1..=n).all(|i| lam.part(i) == kappa.part(i) || lam.part(i) == kappa.part(i) + 1);
                        let expect = if strip { e.psi_coefficient(&kappa, &lam)? } else { ParamScalar::zero() };
                        let have = got.get(&lam).cloned().unwrap_or_else(ParamScalar::zero);
                        run.check(have == expect, || format!("e_{r} P_{kappa:?} at P_{lam:?}"));
                    }
                }
            }
        }
    }
    run.finish("")
}

fn criterion_12() -> Outcome {
    let mut run = Run::new();
    let eta = c("1,3,5,7,9,11,13,15");
    let set = [3, 4, 5, 7];
    let expect = c("1,3,7,9,13,11,6,15");
    run.check(c_i_apply(&eta, &set)? == expect, || "c_I value".into());
    let printed = [
        ("s2η", "1,5,3,7,9,11,13,15"),
        ("s1s2η", "5,1,3,7,9,11,13,15"),
        ("Φs1s2η", "1,3,7,9,11,13,15,6"),
        ("s7Φs1s2η", "1,3,7,9,11,13,6,15"),
        ("s5s7Φs1s2η", "1,3,7,9,13,11,6,15"),
    ];
    let trace = apply_word_traced(&eta, &c_i_word(8, &set)?);
    run.check(trace.len() == printed.len(), || format!("trace has {} lines", trace.len()));
    for ((label, value), (want_label, want)) in trace.iter().zip(printed) {
        run.check(label == want_label && *value == c(want), || format!("{label} = {value:?}"));
    }
    run.finish("")
}

fn main() -> ExitCode {
    let engine = Engine::new(Symbolic::generic());
    let e = &engine;
    let criteria: Vec<(&str, Box<dyn Fn() -> Outcome + '_>)> = vec![
        ("E* equals the vanishing-condition solution", Box::new(|| criterion_1(e))),
        ("top part of E* with inverted parameters equals E", Box::new(|| criterion_2(e))),
        ("Ξ_i eigenrelations", Box::new(|| criterion_3(e))),
        ("extra vanishing iff no successor witness", Box::new(|| criterion_4(e))),
        ("Pieri residuals vanish for E* and E", Box::new(|| criterion_5(e))),
        ("four-way r=1 agreement", Box::new(|| criterion_6(e))),
        ("unity coefficient at η+χ_r", Box::new(|| criterion_7(e))),
        ("duality between r and n-r", Box::new(|| criterion_8(e))),
        ("recursive binomials equal direct binomials", Box::new(|| criterion_9(e))),
        ("orthogonality and norms at t=q^k", Box::new(criterion_10)),
        ("symmetric Pieri rule with ψ", Box::new(|| criterion_11(e))),
        ("worked c_I example and operator word trace", Box::new(criterion_12)),
    ];
    let mut all = true;
    for (i, (what, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let (ok, detail) = match run() {
            Ok(v) => v,
            Err(err) => (false, format!("error: {err}")),
        };
        all &= ok;
        let verdict = if ok { "PASS" } else { "FAIL" };
        println!("criterion {:>2}: {verdict}  {what}: {detail} [{:.1?}]", i + 1, start.elapsed());
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
