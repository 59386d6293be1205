//! Certified decimal arithmetic, the ζ(3) reference and the error,
//! certificate, asymptotic and figure metrics built on it.

mod fixed;
mod functions;
mod metrics;

pub use fixed::FixedPrecisionValue;
pub use functions::{
    decay_constant, exp, ln, ln10, ln2, mu_constant, pi, sqrt2_minus_1_pow4, zeta3, zeta3_reference,
};
pub use metrics::{
    asymptotic_check, asymptotic_report, certificate, certificate_row, error, error_ratios,
    error_with, figure1_grid, figure1_sources, figure2_series, figure2_sources, figure_metric,
    linear_form, precision_cap, regression_slope, signed_error, AsymptoticReport, AsymptoticRow,
    CertificateRow, FigureGrid, FigureRow, DEFAULT_PRECISION_CAP, ERROR_RELATIVE_DIGITS, FIGURE_NS,
    PRECISION_CAP_ENV, SLOPE_WINDOW,
};
