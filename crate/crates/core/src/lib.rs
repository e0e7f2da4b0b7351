//! Exact computation of nonsymmetric Macdonald polynomials `E_η`, interpolation
//! Macdonald polynomials `E*_η`, generalized q,t-binomial coefficients and the
//! Pieri-type coefficients `A^(r)_{ηλ}` in the expansion of `e_r(z) E_η`.

pub mod algebra;
pub mod comb;
pub mod ctnorm;
pub mod emac;
pub mod engine;
pub mod error;
pub mod istar;
pub mod pieri;
pub mod verify;

pub use algebra::{Coeff, ParamScalar, Params, Rat, Specialized, Symbolic, ZPolynomial};
pub use engine::Engine;
pub use error::{Error, Result};
