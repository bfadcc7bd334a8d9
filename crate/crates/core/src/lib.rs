//! Exact signature and characteristic-number formulas for the multiple-point
//! manifolds of a generic even-codimension immersion, computed from a finite
//! cohomological model of the immersion.

pub mod graded_ring;
pub mod partitions;
pub mod poly;
pub mod rational;
pub mod report;
pub mod immersion_model;
pub mod linalg;
pub mod multipoint;
pub mod partition_series;
pub mod oracle;
pub mod model_file;
pub mod bundled;
pub mod random;
pub mod cli;
