//! The approximant families: perturbations `theta`, the rational functions
//! `R_{1,n}`, `R_{2,n}`, their partial fractions and the sequences `p_n`, `q_n`.

mod construct;
mod identities;
mod params;

pub use construct::{
    a_nn_closed_form, apery_r1, apery_sequence, approximant, approximant_unchecked, coefficients,
    counterexample2_constants, counterexample_r1, counterexample_sequence,
    counterexample_sequence_unchecked, phi, r1, r1_factored, r2, sequence, theta, Approximant,
    Source,
};
pub use identities::{
    a_closed_form_diagnostics, ab_identities, apery_orthogonality_check, integrality,
    is_apery_integral, orthogonality_check, polynomials_ab, r2_sum_form_check,
    r2_sum_form_corrected, r2_sum_form_printed, ClosedFormRow, IntegralityReport,
    OrthogonalityReport, MAX_PROBED_EXPONENT,
};
pub use params::{figure1_families, smoke_grid, FamilyParams, Perturbation, OMEGA};
