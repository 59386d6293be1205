#![allow(dead_code)]

use zeta3_core::{FamilyParams, Rational, Source};

pub fn apery() -> Source {
    Source::Apery
}

pub fn rho2() -> Source {
    Source::Family(FamilyParams::rho(1, 2).unwrap())
}

pub fn theta2() -> Source {
    Source::Family(FamilyParams::theta(1, 2).unwrap())
}

pub fn affine111() -> Source {
    Source::Family(FamilyParams::affine(1, 1, 1, 1).unwrap())
}

/// The four table columns: `(source, [(n, p/q)], error at n = 50)`.
pub fn table_rows() -> Vec<(Source, [(u64, &'static str); 3], &'static str)> {
    vec![
        (
            apery(),
            [(2, "351/292"), (3, "62531/52020"), (4, "11424695/9504288")],
            "2.795e-153",
        ),
        (
            rho2(),
            [
                (2, "1327/1104"),
                (3, "104377/86832"),
                (4, "58624219/48769920"),
            ],
            "9.250e-152",
        ),
        (
            theta2(),
            [(2, "1077/896"), (3, "1987/1653"), (4, "34774333/28929024")],
            "3.505e-152",
        ),
        (
            affine111(),
            [
                (2, "2231/1856"),
                (3, "783217/651564"),
                (4, "118221931/98349696"),
            ],
            "3.114e-153",
        ),
    ]
}

/// Small-n errors printed with four significant digits.
pub fn small_errors() -> Vec<(Source, u64, &'static str)> {
    vec![
        (apery(), 2, "2.109e-6"),
        (apery(), 3, "1.968e-9"),
        (apery(), 4, "1.778e-12"),
        (rho2(), 3, "5.776e-8"),
        (rho2(), 4, "5.211e-11"),
        (theta2(), 3, "3.686e-8"),
        (theta2(), 4, "3.006e-11"),
        (affine111(), 2, "9.489e-6"),
        (affine111(), 3, "6.216e-9"),
        (affine111(), 4, "4.550e-12"),
    ]
}

pub fn parse_fraction(s: &str) -> Rational {
    s.parse().expect("fraction literal")
}
