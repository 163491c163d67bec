//! Exact restricted partition functions `p_A(n, k)`, their quasi-polynomial
//! form and asymptotic head, and decision procedures for log-concavity,
//! strong and scaled log-concavity, and r-log-concavity.

pub mod asymptotic;
pub mod cnt;
pub mod criteria;
pub mod error;
pub mod exact;
pub mod logconcavity;
pub mod partition;
pub mod poly;
pub mod puiseux;
pub mod quasipoly;
pub mod threshold;

pub use asymptotic::{almkvist_head, bell_bound_f, sigma_coeffs, AsymptoticHead};
pub use cnt::{qp_from_cnt, CntOptions};
pub use error::{Error, Result};
pub use exact::{parse_rat, rat_to_string, BigRat};
pub use partition::{p_restricted, p_series, PartSpec, PartitionFunction};
pub use poly::Poly;
pub use quasipoly::{lhat_qp, QuasiPolynomial};
pub use threshold::qp_positivity_threshold;
