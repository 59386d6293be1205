use crate::error::{Error, Result};
use serde::Serialize;
use std::fmt;

/// The linear perturbation selected by the column index `j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Perturbation {
    /// `t + n + rho`, `rho >= 2`.
    Rho(i64),
    /// `t + theta*n + 1`, `|theta| >= 2`.
    Theta(i64),
    /// `upsilon*t - chi*n - psi`, `1 <= upsilon <= chi`, `psi >= 0`.
    Affine { upsilon: i64, chi: i64, psi: i64 },
}

impl Perturbation {
    pub fn j(&self) -> usize {
        match self {
            Perturbation::Rho(_) => 1,
            Perturbation::Theta(_) => 2,
            Perturbation::Affine { .. } => 3,
        }
    }
}

/// A validated family selector `(i, j)` with its parameters.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct FamilyParams {
    i: usize,
    perturbation: Perturbation,
}

pub const OMEGA: [[u32; 3]; 4] = [[1, 0, 1], [2, 0, 2], [1, 0, 1], [2, 1, 2]];

impl FamilyParams {
    pub fn new(i: usize, perturbation: Perturbation) -> Result<Self> {
        if !(1..=4).contains(&i) {
            return Err(Error::InvalidParams(format!(
                "row index i = {i} must be in 1..=4"
            )));
        }
        match perturbation {
            Perturbation::Rho(rho) if rho < 2 => {
                return Err(Error::InvalidParams(format!("rho = {rho} must be >= 2")));
            }
            Perturbation::Theta(th) if th.abs() < 2 => {
                return Err(Error::InvalidParams(format!(
                    "theta = {th} must satisfy |theta| >= 2"
                )));
            }
            Perturbation::Affine { upsilon, chi, psi } => {
                if upsilon < 1 || chi < upsilon || psi < 0 {
                    return Err(Error::InvalidParams(format!(
                        "need 1 <= upsilon <= chi and psi >= 0, got ({upsilon}, {chi}, {psi})"
                    )));
                }
            }
            _ => {}
        }
        Ok(Self { i, perturbation })
    }

    pub fn rho(i: usize, rho: i64) -> Result<Self> {
        Self::new(i, Perturbation::Rho(rho))
    }

    pub fn theta(i: usize, theta: i64) -> Result<Self> {
        Self::new(i, Perturbation::Theta(theta))
    }

    pub fn affine(i: usize, upsilon: i64, chi: i64, psi: i64) -> Result<Self> {
        Self::new(i, Perturbation::Affine { upsilon, chi, psi })
    }

    pub fn i(&self) -> usize {
        self.i
    }

    pub fn j(&self) -> usize {
        self.perturbation.j()
    }

    pub fn perturbation(&self) -> Perturbation {
        self.perturbation
    }

    /// Integrality exponent: `n^omega q_n` and `n^omega l_n^3 p_n` are integers.
    pub fn omega(&self) -> u32 {
        OMEGA[self.i - 1][self.j() - 1]
    }

    /// Asymptotic sign constant; `r_n` has the sign of `-eta`.
    pub fn eta(&self) -> i32 {
        let sgn = match self.perturbation {
            Perturbation::Theta(th) => th.signum() as i32,
            _ => 1,
        };
        let table = [[-1, -sgn, 1], [1, sgn, 1], [1, sgn, -1], [1, 1, -1]];
        table[self.i - 1][self.j() - 1]
    }

    /// The Wronskian and recurrence closed forms need `theta` a natural number.
    pub fn is_positive_theta(&self) -> bool {
        matches!(self.perturbation, Perturbation::Theta(th) if th >= 2)
    }

    pub fn delta_i3(&self) -> usize {
        usize::from(self.i == 3)
    }
}

impl fmt::Display for FamilyParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.perturbation {
            Perturbation::Rho(rho) => write!(f, "({},1) rho={rho}", self.i),
            Perturbation::Theta(th) => write!(f, "({},2) theta={th}", self.i),
            Perturbation::Affine { upsilon, chi, psi } => {
                write!(f, "({},3) upsilon={upsilon} chi={chi} psi={psi}", self.i)
            }
        }
    }
}

/// Parameter sets for the (i,j) rows of the integrality and asymptotics sweeps.
pub fn smoke_grid() -> Vec<FamilyParams> {
    let mut out = Vec::new();
    for i in 1..=4 {
        for rho in [2, 4, 23, 913] {
            out.push(FamilyParams::rho(i, rho).unwrap());
        }
        for th in [2, 57, 93, 784] {
            out.push(FamilyParams::theta(i, th).unwrap());
        }
        for (u, c, p) in [(1, 1, 1), (49, 891, 97), (413, 732, 231), (713, 3427, 231)] {
            out.push(FamilyParams::affine(i, u, c, p).unwrap());
        }
    }
    out
}

/// The twelve parameterized rows of the grayscale grid; Apéry's row comes first
/// in the figure and is not included here.
pub fn figure1_families() -> Vec<FamilyParams> {
    vec![
        FamilyParams::rho(1, 2).unwrap(),
        FamilyParams::rho(2, 4).unwrap(),
        FamilyParams::rho(3, 913).unwrap(),
        FamilyParams::rho(4, 23).unwrap(),
        FamilyParams::theta(1, 2).unwrap(),
        FamilyParams::theta(2, 784).unwrap(),
        FamilyParams::theta(3, 93).unwrap(),
        FamilyParams::theta(4, 57).unwrap(),
        FamilyParams::affine(1, 1, 1, 1).unwrap(),
        FamilyParams::affine(2, 49, 891, 97).unwrap(),
        FamilyParams::affine(3, 413, 732, 231).unwrap(),
        FamilyParams::affine(4, 713, 3427, 231).unwrap(),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation() {
        assert!(FamilyParams::rho(1, 1).is_err());
        assert!(FamilyParams::theta(1, -1).is_err());
        assert!(FamilyParams::theta(2, -3).is_ok());
        assert!(FamilyParams::affine(1, 2, 1, 0).is_err());
        assert!(FamilyParams::affine(1, 1, 1, -1).is_err());
        assert!(FamilyParams::rho(5, 2).is_err());
    }

    #[test]
    fn omega_and_eta_tables() {
        assert_eq!(FamilyParams::theta(4, 2).unwrap().omega(), 1);
        assert_eq!(FamilyParams::affine(2, 1, 1, 0).unwrap().omega(), 2);
        assert_eq!(FamilyParams::theta(1, -5).unwrap().eta(), 1);
        assert_eq!(FamilyParams::theta(1, 5).unwrap().eta(), -1);
        assert_eq!(FamilyParams::affine(3, 1, 1, 0).unwrap().eta(), -1);
    }

    #[test]
    fn grids() {
        assert_eq!(smoke_grid().len(), 48);
        assert_eq!(figure1_families().len(), 12);
    }
}
