use super::affine::AffineMap;
use super::transform::gauge_transform;
use crate::calculus::de_rham_d;
use crate::error::{check_dim, Error, Result};
use crate::polyalg::{Form, PoissonStructure};

/// A pair `(φ, B)` of an affine map and a closed 2-form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GaugeElement {
    phi: AffineMap,
    b: Form,
}

impl GaugeElement {
    pub fn new(phi: AffineMap, b: Form) -> Result<Self> {
        check_dim(phi.dim(), b.dim())?;
        if b.grade() != 2 {
            return Err(Error::InvalidGrade(format!("expected a 2-form, got grade {}", b.grade())));
        }
        if !de_rham_d(&b).is_zero() {
            return Err(Error::NotClosed);
        }
        Ok(GaugeElement { phi, b })
    }

    pub fn identity(n: usize) -> Self {
        GaugeElement {
            phi: AffineMap::identity(n),
            b: Form::zero(n, 2),
        }
    }

    pub fn phi(&self) -> &AffineMap {
        &self.phi
    }

    pub fn b(&self) -> &Form {
        &self.b
    }

    pub fn dim(&self) -> usize {
        self.phi.dim()
    }

    pub fn is_identity(&self) -> bool {
        self.phi.is_identity() && self.b.is_zero()
    }

    /// `g₁·g₂ = (φ₁∘φ₂, B₂ + φ₂*B₁)`.
    ///
    /// Membership `φ_*(π_B) = π` is preserved: pushing `π_{B₂+φ₂*B₁}` by
    /// `φ₂` gives `(π_{B₂})`'s image gauged by `B₁`, i.e. `π_{B₁}`, which
    /// `φ₁` sends to `π`.
    pub fn compose(&self, other: &GaugeElement) -> Result<GaugeElement> {
        let phi = self.phi.compose(&other.phi)?;
        let b = &other.b + &other.phi.pullback_form(&self.b)?;
        Ok(GaugeElement { phi, b })
    }

    /// `(φ, B)⁻¹ = (φ⁻¹, −(φ⁻¹)*B)`.
    pub fn inverse(&self) -> GaugeElement {
        let inv = self.phi.inverse();
        let b = -&inv.pullback_form(&self.b).expect("dimensions agree");
        GaugeElement { phi: inv, b }
    }

    /// `true` iff `π_B` exists and `φ_*(π_B) = π`.
    pub fn is_member(&self, pi: &PoissonStructure) -> bool {
        if pi.dim() != self.dim() {
            return false;
        }
        match gauge_transform(pi, &self.b) {
            Ok(pb) => self
                .phi
                .pushforward_multivector(pb.bivector())
                .is_ok_and(|pushed| &pushed == pi.bivector()),
            Err(_) => false,
        }
    }
}

/// Group product in `𝒢_π`, refusing non-members.
pub fn gauge_compose(
    g1: &GaugeElement,
    g2: &GaugeElement,
    pi: &PoissonStructure,
) -> Result<GaugeElement> {
    for (name, g) in [("first", g1), ("second", g2)] {
        if !g.is_member(pi) {
            return Err(Error::NotMember(format!("{name} argument")));
        }
    }
    g1.compose(g2)
}

/// `true` iff `(φ, B)` lies in `𝒢_π`.
pub fn is_member(g: &GaugeElement, pi: &PoissonStructure) -> bool {
    g.is_member(pi)
}
