use std::sync::OnceLock;

use super::tensor::Multivector;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum JacobiStatus {
    Unknown,
    Verified,
    Failed,
}

/// A bivector together with its cached Jacobi verdict.
///
/// Operations that need `[π,π] = 0` call [`PoissonStructure::require_verified`]
/// and refuse to run on an unknown or failed status.
#[derive(Debug, Clone)]
pub struct PoissonStructure {
    bivector: Multivector,
    verdict: OnceLock<bool>,
}

impl PoissonStructure {
    /// Wraps a bivector without checking it.
    pub fn unchecked(bivector: Multivector) -> Result<Self> {
        if bivector.grade() != 2 {
            return Err(Error::InvalidGrade(format!(
                "a Poisson structure is a bivector, got grade {}",
                bivector.grade()
            )));
        }
        Ok(PoissonStructure {
            bivector,
            verdict: OnceLock::new(),
        })
    }

    /// Wraps and verifies; fails with [`Error::NotPoisson`] if `[π,π] ≠ 0`.
    pub fn verified(bivector: Multivector) -> Result<Self> {
        let p = Self::unchecked(bivector)?;
        if p.check() {
            Ok(p)
        } else {
            Err(Error::NotPoisson)
        }
    }

    pub fn zero(dim: usize) -> Self {
        Self::verified(Multivector::zero(dim, 2)).expect("zero bivector is Poisson")
    }

    pub fn bivector(&self) -> &Multivector {
        &self.bivector
    }

    pub fn dim(&self) -> usize {
        self.bivector.dim()
    }

    pub fn status(&self) -> JacobiStatus {
        match self.verdict.get() {
            None => JacobiStatus::Unknown,
            Some(true) => JacobiStatus::Verified,
            Some(false) => JacobiStatus::Failed,
        }
    }

    /// Runs the Jacobi check once and caches the verdict.
    pub fn check(&self) -> bool {
        *self
            .verdict
            .get_or_init(|| crate::calculus::jacobi_check(&self.bivector))
    }

    pub fn require_verified(&self) -> Result<()> {
        match self.status() {
            JacobiStatus::Verified => Ok(()),
            JacobiStatus::Failed => Err(Error::NotPoisson),
            JacobiStatus::Unknown => Err(Error::NotVerified),
        }
    }
}

impl PartialEq for PoissonStructure {
    fn eq(&self, other: &Self) -> bool {
        self.bivector == other.bivector
    }
}

impl Eq for PoissonStructure {}
