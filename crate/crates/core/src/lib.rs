//! Exact truncated q-series for a family of weighted-partition double
//! series: series arithmetic, q-Pochhammer products, basic hypergeometric
//! sums and transformations, closed forms, a brute-force partition oracle,
//! and a registry that checks every identity coefficient by coefficient.

pub mod cli;
pub mod closedforms;
pub mod doubleseries;
pub mod error;
pub mod hyperg;
pub mod partitions;
pub mod qproducts;
pub mod registry;
pub mod series;

pub use closedforms::{closed_form, theta, ClosedFormId};
pub use doubleseries::{double_series, family_series, Family, FamilyId, SeriesId};
pub use error::{Error, Result};
pub use hyperg::{lambert_theta, phi21_truncated, HeineKind, Phi21Params};
pub use partitions::{
    enumerate_representations, f1_partition_scan, representation_count, Representation,
    WeightedCount,
};
pub use qproducts::{poch_finite, poch_infinite, poch_quotient, Length, PochhammerSpec};
pub use registry::{
    Catalog, IdentityRecord, Relation, Severity, Status, Summary, VerificationReport,
};
pub use series::{Coeff, LaurentSeries};
