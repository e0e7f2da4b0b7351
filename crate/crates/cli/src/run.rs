use std::collections::BTreeMap;
use std::fmt;
use std::io::Write;

use macpieri::algebra::{Coeff, ParamScalar, Params, Rat, Specialized, Symbolic, ZPolynomial};
use macpieri::comb::Composition;
use macpieri::ctnorm::{ct_inner_product, specialized_weight};
use macpieri::verify::{parse_suites, run_suite, Bounds};
use macpieri::{Engine, Error};
use serde::Serialize;

use crate::args::{Cli, Command, Format};
use crate::cache::Cache;
use crate::doc::{Header, Kind, Payload, ResultDocument, SCHEMA};

/// Why a command did not succeed; each variant owns an exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Failure {
    Usage(String),
    Verify(String),
}

impl Failure {
    pub fn exit_code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 1,
            Failure::Verify(_) => 2,
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Usage(m) => write!(f, "error: {m}"),
            Failure::Verify(m) => write!(f, "verification failed: {m}"),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        match e {
            Error::DivisionByZero(m) => Failure::Usage(format!("a denominator vanishes at the chosen point: {m}")),
            other => Failure::Usage(other.to_string()),
        }
    }
}

fn usage<T>(msg: impl Into<String>) -> Result<T, Failure> {
    Err(Failure::Usage(msg.into()))
}

/// Parses `q=NUM/DEN,t=NUM/DEN`; both parameters are required and nonzero.
pub fn parse_params(s: &str) -> Result<Specialized, Failure> {
    let (mut q, mut t) = (None, None);
    for part in s.split(',') {
        let Some((name, value)) = part.split_once('=') else {
            return usage(format!("expected name=value in --params, got {part:?}"));
        };
        let value: Rat = value.parse()?;
        if value.is_zero() {
            return usage(format!("parameter {} must be nonzero", name.trim()));
        }
        let slot = match name.trim() {
            "q" => &mut q,
            "t" => &mut t,
            other => return usage(format!("unknown parameter {other:?}")),
        };
        if slot.replace(value).is_some() {
            return usage(format!("parameter {} given twice", name.trim()));
        }
    }
    match (q, t) {
        (Some(q), Some(t)) => Ok(Specialized { q, t }),
        _ => usage("--params needs both q and t"),
    }
}

fn composition(s: &str) -> Result<Composition, Failure> {
    Ok(s.parse::<Composition>()?)
}

/// A validated compute request.
#[derive(Clone, Debug)]
struct Job {
    kind: Kind,
    comps: Vec<Composition>,
    r: Option<usize>,
    k: Option<u32>,
    recursive: bool,
}

impl Job {
    fn from_command(cmd: &Command) -> Result<Job, Failure> {
        let job = |kind, comps: Vec<&String>, r, k, recursive| -> Result<Job, Failure> {
            let comps = comps.into_iter().map(|s| composition(s)).collect::<Result<Vec<_>, _>>()?;
            if comps.iter().any(|c| c.n() != comps[0].n()) {
                return usage("compositions must have the same length");
            }
            Ok(Job { kind, comps, r, k, recursive })
        };
        match cmd {
            Command::E { eta } => job(Kind::E, vec![eta], None, None, false),
            Command::Estar { eta } => job(Kind::Estar, vec![eta], None, None, false),
            Command::Pieri { eta, r } => {
                let j = job(Kind::Pieri, vec![eta], Some(*r), None, false)?;
                let n = j.comps[0].n();
                if *r > n {
                    return usage(format!("r = {r} is out of range 0..={n}"));
                }
                Ok(j)
            }
            Command::Binom { eta, nu, recursive, k } => {
                let j = job(Kind::Binom, vec![eta, nu], None, *k, *recursive)?;
                if let Some(k) = k {
                    let n = j.comps[0].n();
                    if *k < 1 || *k as usize > n {
                        return usage(format!("position k = {k} is out of range 1..={n}"));
                    }
                }
                Ok(j)
            }
            Command::Norm { eta } => job(Kind::Norm, vec![eta], None, None, false),
            Command::Psi { eta, nu } => job(Kind::Psi, vec![eta, nu], None, None, false),
            Command::Innerprod { eta, nu, k } => {
                let j = job(Kind::Innerprod, vec![eta, nu], None, Some(*k), false)?;
                if j.comps[0].n() < 2 {
                    return usage("innerprod needs n >= 2");
                }
                Ok(j)
            }
            Command::Verify { .. } => unreachable!("verify is not a compute job"),
        }
    }

    fn header(&self, mode: String) -> Header {
        Header {
            schema: SCHEMA.into(),
            kind: self.kind,
            n: self.comps[0].n(),
            input: self.comps.iter().map(|c| c.to_string()).collect(),
            r: self.r,
            k: self.k,
            mode,
        }
    }
}

enum Value<F> {
    Poly(ZPolynomial<F>),
    Scalar(F),
    Table(BTreeMap<Composition, F>),
}

impl<F: Coeff> Value<F> {
    fn payload(&self) -> Payload {
        match self {
            Value::Poly(p) => Payload::polynomial(p),
            Value::Scalar(c) => Payload::Scalar(crate::doc::Fraction::of(c)),
            Value::Table(t) => Payload::table(t.iter()),
        }
    }
}

impl Value<ParamScalar> {
    fn eval(&self, q: &Rat, t: &Rat) -> macpieri::Result<Value<Rat>> {
        Ok(match self {
            Value::Poly(p) => Value::Poly(p.try_map_coeffs(|c| c.eval(q, t))?),
            Value::Scalar(c) => Value::Scalar(c.eval(q, t)?),
            Value::Table(tab) => {
                Value::Table(tab.iter().map(|(l, c)| Ok((l.clone(), c.eval(q, t)?))).collect::<macpieri::Result<_>>()?)
            }
        })
    }
}

fn evaluate<P: Params>(engine: &Engine<P>, job: &Job) -> macpieri::Result<Value<P::F>> {
    let c = &job.comps;
    Ok(match job.kind {
        Kind::E => Value::Poly((*engine.generate_e(&c[0])?).clone()),
        Kind::Estar => Value::Poly((*engine.generate_estar(&c[0])?).clone()),
        Kind::Pieri => Value::Table(engine.pieri_homogeneous(&c[0], job.r.unwrap_or(0))?),
        Kind::Binom if job.recursive => {
            Value::Scalar(engine.binomial_recursive(&c[0], &c[1], job.k.map(|k| k as usize))?)
        }
        Kind::Binom => Value::Scalar(engine.binomial_direct(&c[0], &c[1])?),
        Kind::Norm => Value::Scalar(engine.norm_n(&c[0])?),
        Kind::Psi => Value::Scalar(engine.psi_coefficient(&c[0], &c[1])?),
        Kind::Innerprod => unreachable!("inner products are evaluated symbolically"),
    })
}

fn symbolic_params(cli: &Cli) -> Symbolic {
    Symbolic { inverted: cli.inverted }
}

fn compute(cli: &Cli, job: &Job) -> Result<(String, Payload), Failure> {
    if job.kind == Kind::Innerprod {
        let k = job.k.unwrap_or(0);
        let engine = Engine::new(Symbolic::generic());
        let w = specialized_weight(job.comps[0].n(), k)?;
        let v = ct_inner_product(&*engine.generate_e(&job.comps[0])?, &*engine.generate_e(&job.comps[1])?, &w)?;
        return Ok((Symbolic::generic().mode().to_string(), Value::Scalar(v).payload()));
    }
    match &cli.params {
        None => {
            let p = symbolic_params(cli);
            Ok((p.mode().to_string(), evaluate(&Engine::new(p), job)?.payload()))
        }
        Some(s) => {
            let point = parse_params(s)?;
            let p = if cli.inverted { point.inverted() } else { point.clone() };
            let mode = p.mode().to_string();
            match evaluate(&Engine::new(p), job) {
                Ok(v) => Ok((mode, v.payload())),
                // an intermediate pole: redo it over Q(q,t), which either
                // gives the value or names the vanishing denominator
                Err(Error::DivisionByZero(_)) => {
                    let v = evaluate(&Engine::new(symbolic_params(cli)), job)?.eval(&point.q, &point.t)?;
                    Ok((mode, v.payload()))
                }
                Err(e) => Err(e.into()),
            }
        }
    }
}

fn mode_of(cli: &Cli, job: &Job) -> Result<String, Failure> {
    if job.kind == Kind::Innerprod {
        if cli.params.is_some() || cli.inverted {
            return usage("innerprod works over Q(q) at t = q^k; drop --params/--inverted");
        }
        return Ok(Symbolic::generic().mode().to_string());
    }
    Ok(match &cli.params {
        None => symbolic_params(cli).mode().to_string(),
        Some(s) => {
            let point = parse_params(s)?;
            if cli.inverted { point.inverted() } else { point }.mode().to_string()
        }
    })
}

/// Computes (or loads) the document for a compute subcommand.
pub fn document(cli: &Cli) -> Result<ResultDocument, Failure> {
    let job = Job::from_command(&cli.command)?;
    let header = job.header(mode_of(cli, &job)?);
    let cache = match &cli.cache_dir {
        Some(dir) => Some(Cache::open(dir).map_err(|e| Failure::Usage(format!("cache directory {dir:?}: {e}")))?),
        None => None,
    };
    if let Some(doc) = cache.as_ref().and_then(|c| c.load(&header)) {
        return Ok(doc);
    }
    let (mode, payload) = compute(cli, &job)?;
    debug_assert_eq!(mode, header.mode);
    let doc = ResultDocument { header, payload };
    if let Some(c) = &cache {
        if let Err(e) = c.store(&doc) {
            eprintln!("warning: could not store cache entry in {:?}: {e}", c.dir());
        }
    }
    Ok(doc)
}

#[derive(Serialize)]
struct SuiteLine {
    suite: String,
    checks: usize,
    passed: bool,
    counterexample: Option<String>,
}

fn verify(cli: &Cli, out: &mut dyn Write) -> Result<(), Failure> {
    let Command::Verify { suite, max_n, max_mod, k, seed } = &cli.command else {
        unreachable!()
    };
    let suites = parse_suites(suite)?;
    let bounds = Bounds { max_n: *max_n, max_mod: *max_mod, ks: k.clone(), seed: *seed };
    let mut lines = Vec::new();
    for s in suites {
        let report = match &cli.params {
            None => run_suite(&Engine::new(symbolic_params(cli)), s, &bounds)?,
            Some(p) => {
                let point = parse_params(p)?;
                let point = if cli.inverted { point.inverted() } else { point };
                run_suite(&Engine::new(point), s, &bounds)?
            }
        };
        if cli.format == Format::Text {
            writeln!(out, "{report}").map_err(io_failure)?;
        }
        lines.push(SuiteLine {
            suite: s.name().into(),
            checks: report.checks,
            passed: report.passed(),
            counterexample: report.counterexample.clone(),
        });
    }
    if cli.format == Format::Json {
        let s = serde_json::to_string_pretty(&lines).expect("reports always serialize");
        writeln!(out, "{s}").map_err(io_failure)?;
    }
    match lines.iter().find(|l| !l.passed) {
        Some(l) => Err(Failure::Verify(format!(
            "{}: {}",
            l.suite,
            l.counterexample.as_deref().unwrap_or("no counterexample recorded")
        ))),
        None => Ok(()),
    }
}

fn io_failure(e: std::io::Error) -> Failure {
    Failure::Usage(format!("writing output: {e}"))
}

/// Runs one invocation, writing its result to `out`.
pub fn run(cli: &Cli, out: &mut dyn Write) -> Result<(), Failure> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cli.workers as usize)
        .build()
        .map_err(|e| Failure::Usage(format!("thread pool: {e}")))?;
    // the pool's threads cannot borrow `out`, so output is buffered
    let mut buf = Vec::new();
    let result = pool.install(|| {
        if let Command::Verify { .. } = cli.command {
            return verify(cli, &mut buf);
        }
        let doc = document(cli)?;
        buf = match cli.format {
            Format::Json => doc.to_json() + "\n",
            Format::Text => doc.to_text(),
        }
        .into_bytes();
        Ok(())
    });
    out.write_all(&buf).map_err(io_failure)?;
    result
}

#[cfg(test)]
mod tests {
    use super::*;
    use clap::Parser;

    fn doc(args: &str) -> Result<ResultDocument, Failure> {
        let cli = Cli::try_parse_from(std::iter::once("macpieri").chain(args.split_whitespace())).unwrap();
        document(&cli)
    }

    fn payload(args: &str) -> Payload {
        doc(args).unwrap().payload
    }

    #[test]
    fn params_parse() {
        let p = parse_params("q=3/7,t=2").unwrap();
        assert_eq!(p.q, Rat::new(3, 7).unwrap());
        assert_eq!(p.t, Rat::new(2, 1).unwrap());
        for bad in ["q=1", "q=1,t=0", "q=1,t=2,q=3", "x=1,t=2", "q=a,t=1", "q=1/0,t=1"] {
            assert_eq!(parse_params(bad).unwrap_err().exit_code(), 1, "{bad}");
        }
    }

    #[test]
    fn compute_examples() {
        assert_eq!(payload("e --eta 0,0"), Payload::Polynomial("1".into()));
        assert_eq!(payload("estar --eta 0,1"), Payload::Polynomial("z2 - 1/t".into()));
        let Payload::Table(t) = payload("pieri --eta 0,0 --r 1") else { panic!() };
        let got: Vec<_> = t.iter().map(|e| (e.label.as_str(), e.coeff.num.as_str(), e.coeff.den.as_str())).collect();
        assert_eq!(got, vec![("1,0", "1", "1"), ("0,1", "q*t - t", "q*t - 1")]);
    }

    #[test]
    fn specialized_agrees_with_symbolic_evaluation() {
        let Payload::Table(sym) = payload("pieri --eta 1,0 --r 1") else { panic!() };
        let Payload::Table(num) = payload("pieri --eta 1,0 --r 1 --params q=3/7,t=2") else { panic!() };
        let (q, t) = (Rat::new(3, 7).unwrap(), Rat::new(2, 1).unwrap());
        assert_eq!(sym.len(), num.len());
        for (a, b) in sym.iter().zip(&num) {
            assert_eq!(a.label, b.label);
            let v = macpieri::algebra::text::parse_scalar(&a.coeff.num, &a.coeff.den).unwrap().eval(&q, &t).unwrap();
            assert_eq!(crate::doc::Fraction::of(&v), b.coeff);
        }
    }

    #[test]
    fn vanishing_denominators_are_usage_errors() {
        // N_{(1,0)} has the factor (1 - q t)^2 in its denominator
        let err = doc("norm --eta 1,0 --params q=2,t=1/2").unwrap_err();
        assert_eq!(err.exit_code(), 1);
        assert!(err.to_string().contains("denominator"), "{err}");
    }

    #[test]
    fn usage_errors() {
        for args in ["e --eta 1,x", "pieri --eta 0,0 --r 3", "binom --eta 1,0 --nu 1,0,0", "innerprod --eta 1 --nu 1 --k 1"] {
            assert_eq!(doc(args).unwrap_err().exit_code(), 1, "{args}");
        }
    }

    #[test]
    fn exit_codes() {
        assert_eq!(Failure::Usage("x".into()).exit_code(), 1);
        assert_eq!(Failure::Verify("x".into()).exit_code(), 2);
        assert_eq!(Failure::from(Error::DivisionByZero("d".into())).exit_code(), 1);
    }
}
