//! The single record of sign conventions that every sign-sensitive formula
//! in the crate reads from.
//!
//! Fixed choices:
//!
//! * Schouten bracket in odd-coordinate form, `ξ_i = ∂_i`:
//!   `[P,Q] = Σ_i ∂ᵣP/∂ξ_i ∧ ∂Q/∂x_i − (−1)^{(p−1)(q−1)} ∂ᵣQ/∂ξ_i ∧ ∂P/∂x_i`
//!   with right odd derivatives. So `[X,f] = X(f)` and `[X,Y]` is the Lie
//!   bracket.
//! * Contraction inserts into the first slot.
//! * `π♯(dx_i) = Σ_j π^{ij} ∂_j`, i.e. `⟨β, π♯α⟩ = π(α,β)`, extended to
//!   k-forms multiplicatively. Then `X_f = π♯(df)` and `{f,g} = X_f(g)`.
//! * `d_π = [π, ·]`. With the choices above `π♯∘d = ε·d_π∘π♯` holds with
//!   `ε = −1`; in particular `d_π f = −X_f`.
//! * The mapping cone uses `Φ = ε^{j−1}·π♯` on `j`-forms, the unique
//!   sign twist that makes `Φ` a chain map while keeping `Φ = π♯` on
//!   1-forms. Its 1-cocycles are exactly the pairs with `L_Z π = π♯β`.
//! * `B♭(X) = i_X B`; gauge transforms use `(π_B)♯ = π♯∘(I + B♭∘π♯)⁻¹`,
//!   and the inverse of a nondegenerate bivector is the 2-form `ω` with
//!   `ω♭ = (π♯)⁻¹` (so `∂x∧∂y` inverts to `−dx∧dy`).
//! * Euler field `E = Σ x_i ∂_i`: `L_E π = (p − 2)·π` for coefficients
//!   homogeneous of degree `p`.

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SignConvention {
    pub schouten: &'static str,
    pub contraction: &'static str,
    pub sharp: &'static str,
    pub lichnerowicz: &'static str,
    /// `ε` in `π♯∘d = ε·d_π∘π♯`.
    pub chain_map_sign: i32,
    pub cone_map: &'static str,
    pub flat: &'static str,
    pub gauge: &'static str,
    pub euler: &'static str,
}

pub const CONVENTION: SignConvention = SignConvention {
    schouten: "[P,Q] = sum_i dP/dxi_i (right) ^ dQ/dx_i - (-1)^((p-1)(q-1)) dQ/dxi_i (right) ^ dP/dx_i; [X,f] = X(f)",
    contraction: "first slot: i_a(e_1^...^e_k) = sum_s (-1)^(s-1) <a,e_s> e_1^..^e_s-hat^..^e_k",
    sharp: "sharp(dx_i) = sum_j pi^{ij} d_j, <b, sharp a> = pi(a,b); multiplicative on k-forms; identity on functions",
    lichnerowicz: "d_pi = [pi, .]; d_pi f = -X_f",
    chain_map_sign: -1,
    cone_map: "Phi = eps^(j-1) * sharp on j-forms; d(a,b) = (da, Phi(a) - d_pi b)",
    flat: "B_flat(X) = i_X B",
    gauge: "sharp(pi_B) = sharp(pi) o (I + B_flat o sharp(pi))^-1; omega = pi^-1 means flat(omega) = sharp(pi)^-1",
    euler: "L_E pi = (p - 2) pi for coefficients homogeneous of degree p",
};

/// Sign of the cone map on `j`-forms: `ε^{j−1}`.
pub fn cone_map_sign(form_grade: usize) -> i32 {
    if CONVENTION.chain_map_sign == 1 || form_grade % 2 == 1 {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cone_sign_is_plus_on_one_forms() {
        assert_eq!(cone_map_sign(1), 1);
        assert_eq!(cone_map_sign(2), CONVENTION.chain_map_sign);
        assert_eq!(cone_map_sign(0), CONVENTION.chain_map_sign);
    }
}
