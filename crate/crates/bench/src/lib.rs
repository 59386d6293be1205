//! Shared fixtures for the criterion benchmarks.

use zeta3_core::{FamilyParams, Source};

/// Apéry and the three table families.
pub fn table_sources() -> Vec<(&'static str, Source)> {
    vec![
        ("apery", Source::Apery),
        ("rho2", Source::Family(FamilyParams::rho(1, 2).unwrap())),
        ("theta2", Source::Family(FamilyParams::theta(1, 2).unwrap())),
        (
            "affine111",
            Source::Family(FamilyParams::affine(1, 1, 1, 1).unwrap()),
        ),
    ]
}
