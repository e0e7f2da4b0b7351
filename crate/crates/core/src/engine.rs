use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use crate::algebra::{Coeff, Params, ZPolynomial};
use crate::comb::Composition;
use crate::error::Result;

type Cache<F> = RwLock<HashMap<Composition, Arc<ZPolynomial<F>>>>;

/// Computation context for one choice of parameters. Holds the caches of
/// generated `E_η` and `E*_η`; entries are published once and never mutated,
/// so an engine can be shared freely between threads.
#[derive(Debug)]
pub struct Engine<P: Params> {
    params: P,
    e_cache: Cache<P::F>,
    estar_cache: Cache<P::F>,
    twin: OnceLock<Box<Engine<P>>>,
}

impl<P: Params> Engine<P> {
    pub fn new(params: P) -> Engine<P> {
        Engine { params, e_cache: RwLock::default(), estar_cache: RwLock::default(), twin: OnceLock::new() }
    }

    pub fn params(&self) -> &P {
        &self.params
    }

    /// A fresh engine for `(1/q, 1/t)`.
    pub fn inverted(&self) -> Engine<P> {
        Engine::new(self.params.inverted())
    }

    /// The engine for `(1/q, 1/t)`, built once and kept with its caches.
    pub fn twin(&self) -> &Engine<P> {
        self.twin.get_or_init(|| Box::new(self.inverted()))
    }

    pub(crate) fn t(&self) -> P::F {
        self.params.t()
    }

    /// `q^a t^b`.
    pub(crate) fn mono(&self, e: (i64, i64)) -> Result<P::F> {
        self.params.monomial(e.0, e.1)
    }

    /// `1 - q^a t^b`.
    pub(crate) fn one_minus(&self, e: (i64, i64)) -> Result<P::F> {
        Ok(P::F::one() - self.mono(e)?)
    }

    pub(crate) fn cached(which: &Cache<P::F>, key: &Composition) -> Option<Arc<ZPolynomial<P::F>>> {
        which.read().expect("cache lock").get(key).cloned()
    }

    pub(crate) fn publish(which: &Cache<P::F>, key: Composition, value: ZPolynomial<P::F>) -> Arc<ZPolynomial<P::F>> {
        let mut guard = which.write().expect("cache lock");
        guard.entry(key).or_insert_with(|| Arc::new(value)).clone()
    }

    pub(crate) fn e_cache(&self) -> &Cache<P::F> {
        &self.e_cache
    }

    pub(crate) fn estar_cache(&self) -> &Cache<P::F> {
        &self.estar_cache
    }

    /// Number of cached `(E, E*)` entries.
    pub fn cache_sizes(&self) -> (usize, usize) {
        (self.e_cache.read().expect("cache lock").len(), self.estar_cache.read().expect("cache lock").len())
    }
}

/// Exponent pair of `x / y` for monomials `x = q^a t^b`, `y = q^c t^d`.
pub(crate) fn ratio(x: (i64, i64), y: (i64, i64)) -> (i64, i64) {
    (x.0 - y.0, x.1 - y.1)
}
