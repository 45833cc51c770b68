//! Exact-integer algebra of graded pure Hodge structures at the level of
//! Hodge numbers.
//!
//! The crate computes Hodge diamonds of Hilbert schemes of points on
//! surfaces, symmetric and Schur powers of graded Hodge structures, and the
//! Hodge numbers of the ten-dimensional hyper-Kähler manifolds of OG10 type
//! together with their Schur-functor decomposition.

pub mod diamond;
pub mod diamond_file;
pub mod engine;
pub mod error;
pub mod ledger;
pub mod partition;
pub mod pipeline;
pub mod series;
pub mod symfunc;
pub mod validators;

pub use diamond::{Bidegree, HodgeDiamond, VirtualDiamond};
pub use error::{HodgeError, Result};
pub use partition::{partitions_of, schur_dim_oracle, Partition};
pub use series::{goettsche, macdonald_sym, DiamondSeries};
pub use symfunc::{e_series, ext_power, h_series, schur, sym_power};
