//! Spanning-tree counts of cyclic coverings of voltage graphs.
//!
//! A connected multigraph `H` with integer voltages on its edges determines
//! an `n`-fold cyclic covering `H_n` for every `n`. This crate computes
//! `τ(n)`, the number of spanning trees of `H_n`, exactly through the voltage
//! polynomial `P(z) = det L(z)`, numerically through Chebyshev polynomials,
//! and by Kirchhoff's theorem on `H_n` itself. It also finds the generating
//! function `Σ τ(n) x^n` and the Mahler-measure growth rate of `τ(n)`.
//!
//! ```
//! use covtree::{corpus, tau};
//!
//! let theta = corpus::builtin("haar-theta", &[]).unwrap();
//! let t = tau::tau_exact(&theta, 4).unwrap();
//! assert_eq!(t.value, 384u32.into());
//! ```

pub mod asympt;
pub mod corpus;
pub mod error;
pub mod format;
pub mod genfunc;
pub mod graph;
pub mod linalg;
pub mod poly;
pub mod tau;
pub mod verify;
pub mod voltpoly;

pub use asympt::{asymptotic_estimate, convergence_report, mahler_measure, AsymptoticProfile};
pub use error::{Error, Result};
pub use genfunc::{generating_function, series_expand, GenFuncResult};
pub use graph::{matrix_tree_count, BigCount, MultiGraph, VoltageEdge, VoltageGraph};
pub use tau::{tau_bruteforce, tau_chebyshev, tau_exact, tau_table, TauFamily, TauResult, TauRoute};
pub use verify::{verify, VerifyOptions, VerifyReport};
pub use voltpoly::{voltage_polynomial, VoltagePolyBundle};
