//! Exact univariate polynomial algebra.

mod chebyshev;
mod dense;
mod laurent;
mod ratfunc;
mod resultant;
pub mod roots;

pub use chebyshev::{chebyshev_t, chebyshev_t_complex, chebyshev_t_integer, chebyshev_table};
pub use dense::{IntPoly, RatPoly};
pub use laurent::IntLaurentPoly;
pub use ratfunc::{rational_reconstruct, RationalFunction, SPARE_TERMS};
pub use resultant::{
    companion_power_det, resultant, resultant_x_pow_minus_one, sylvester_resultant,
};
