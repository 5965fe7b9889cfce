//! Exact-arithmetic kernel: rational and prime-field scalars, multivariate
//! polynomials, a Groebner engine, truncated power series, integer-matrix
//! Smith normal form, and univariate factorization.

pub mod factor;
pub mod grobner;
pub(crate) mod linalg;
pub mod matrix;
pub mod poly;
pub mod scalar;
pub mod series;
pub(crate) mod solve;

pub use factor::{factor_univariate, rational_roots, squarefree_decomposition, Factorization};
pub use grobner::{groebner_basis, ideal_contains, quotient_dimension, reduce, QuotientDim};
pub use matrix::{smith_normal_form, AbelianGroup, IntMatrix, SmithForm};
pub use poly::{Exponents, MonomialOrder, MultiPoly, MAX_VARS};
pub use scalar::{Field, Scalar};
pub use series::{eval_poly_at_series, series_solve_system, TruncSeries, DEFAULT_SERIES_ORDER};
