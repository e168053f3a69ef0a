//! Central numeric tolerances. Every comparison in the library and its test
//! suite goes through one of these constants so the accuracy contract lives
//! in a single place.

/// Agreement between two exact computation routes of the same quantity
/// (e.g. subset-weight Shapley vs quadrature of the influence polynomial).
pub const CROSS_METHOD: f64 = 1e-9;

/// Identities that hold exactly in real arithmetic and are evaluated by a
/// single floating-point route (efficiency, Parseval, round-trips).
pub const EXACT_IDENTITY: f64 = 1e-10;

/// Derivative-vs-influence agreement on bias grids.
pub const DERIVATIVE_MATCH: f64 = 1e-9;

/// Slack granted to proven inequalities before a violation is reported.
pub const INEQUALITY_SLACK: f64 = 1e-9;

/// Absolute tolerance (in the bias variable) for threshold-location bisection.
pub const BISECTION_P: f64 = 1e-12;

/// Coefficients below this magnitude are treated as zero by degree detection.
pub const DEGREE_DETECT: f64 = 1e-12;

/// Agreement between a report and its dualized counterpart.
pub const DUAL_GAP: f64 = 1e-10;

/// Tight agreement for small exactly-known rational values.
pub const RATIONAL_MATCH: f64 = 1e-12;
