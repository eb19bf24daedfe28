//! Exact Bernoulli and Euler partitions.
//!
//! The even-index Bernoulli numbers `|B_{2n}|` and Euler midpoint values
//! `|E_{2n}(1/2)|` are decomposed as finite sums of positive rationals by
//! inverting two lower-triangular integer matrices. The same entries are
//! recomputed from Salié and Faulhaber generating functions and from closed
//! forms in reduced zeta values, and the identities and inequalities tying
//! them together are checked exactly.
//!
//! Nothing in this crate uses floating point.

pub mod classical;
pub mod coefficients;
pub mod error;
pub mod exact;
pub mod identities;
pub mod matrices;
pub mod poly;
pub mod series;

pub use classical::{
    bernoulli, bernoulli_new_recursion, euler_half, reduced_zeta, Family, SignedValueTable,
};
pub use coefficients::{
    alt_power_sum_check, b_closed, b_from_faulhaber, faulhaber_closed, faulhaber_table_gf,
    faulhaber_table_knuth, power_sum_check, salie_table, CoefficientKind, CoefficientTable,
};
pub use error::{Error, Result};
pub use exact::{binomial, double_factorial_odd, factorial, parse_rational, rat, Rational};
pub use identities::{
    asymptotic_ratio, distribution_row, ordering_check, p1_polynomial, p1_sum_check,
    p2_integral_check, p2_polynomial, q_factor_check, tail_check, zeta_recursion_check,
    DistributionRow, QFactor, ReducedZetaIdentityReport,
};
pub use matrices::{
    build_mb, build_me, closed_form_band, invert_lower_triangular, partition_table, Band,
    LowerTriangularMatrix, PartitionRow, PartitionTable,
};
pub use poly::RationalPolynomial;
pub use series::ExpSeries;
