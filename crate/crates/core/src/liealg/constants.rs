use num_traits::Zero;

use crate::error::{Error, Result};
use crate::polyalg::{rational::int, Multivector, PoissonStructure, Polynomial, Rational};

/// `[e_i, e_j] = Σ_k c[i][j][k] e_k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureConstants {
    c: Vec<Vec<Vec<Rational>>>,
}

impl StructureConstants {
    /// Validates shape and antisymmetry (including `c[i][i][k] = 0`).
    pub fn new(c: Vec<Vec<Vec<Rational>>>) -> Result<Self> {
        let n = c.len();
        for (i, plane) in c.iter().enumerate() {
            crate::error::check_dim(n, plane.len())?;
            for (j, row) in plane.iter().enumerate() {
                crate::error::check_dim(n, row.len())?;
                for k in 0..n {
                    if row[k] != -c[j][i][k].clone() {
                        return Err(Error::NotAntisymmetric { i, j, k });
                    }
                }
            }
        }
        Ok(StructureConstants { c })
    }

    pub fn zero(n: usize) -> Self {
        StructureConstants {
            c: vec![vec![vec![Rational::zero(); n]; n]; n],
        }
    }

    /// Builds from `[e_i, e_j]` for `i < j` (0-based); the rest follows by
    /// antisymmetry.
    pub fn from_brackets<I>(n: usize, brackets: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, Vec<(usize, Rational)>)>,
    {
        let mut s = Self::zero(n);
        for (i, j, terms) in brackets {
            if i >= n || j >= n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: i.max(j) + 1,
                });
            }
            if i >= j {
                return Err(Error::NotAntisymmetric { i, j, k: 0 });
            }
            for (k, v) in terms {
                if k >= n {
                    return Err(Error::DimensionMismatch { expected: n, found: k + 1 });
                }
                s.c[i][j][k] += &v;
                s.c[j][i][k] -= &v;
            }
        }
        Ok(s)
    }

    pub fn dim(&self) -> usize {
        self.c.len()
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &Rational {
        &self.c[i][j][k]
    }

    /// Nonzero `[e_i, e_j]` for `i < j`.
    pub fn brackets(&self) -> Vec<(usize, usize, Vec<(usize, Rational)>)> {
        let n = self.dim();
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let terms: Vec<(usize, Rational)> = (0..n)
                    .filter(|&k| !self.c[i][j][k].is_zero())
                    .map(|k| (k, self.c[i][j][k].clone()))
                    .collect();
                if !terms.is_empty() {
                    out.push((i, j, terms));
                }
            }
        }
        out
    }

    /// `Σ_m c[i][j][m] c[m][k][l] + cyclic = 0` for all `i < j < k` and `l`.
    pub fn jacobi_holds(&self) -> bool {
        let n = self.dim();
        let c = &self.c;
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    for l in 0..n {
                        let mut s = Rational::zero();
                        for m in 0..n {
                            s += &c[i][j][m] * &c[m][k][l];
                            s += &c[j][k][m] * &c[m][i][l];
                            s += &c[k][i][m] * &c[m][j][l];
                        }
                        if !s.is_zero() {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    pub fn check_jacobi(&self) -> Result<()> {
        if self.jacobi_holds() {
            Ok(())
        } else {
            Err(Error::JacobiViolation)
        }
    }
}

/// `π = Σ_{i<j} (Σ_k c[i][j][k] x_k) ∂_i∧∂_j` on `𝔤*`, with its Jacobi
/// verdict already computed.
pub fn linear_poisson(c: &StructureConstants) -> PoissonStructure {
    let n = c.dim();
    let mut entries = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let mut f = Polynomial::zero(n);
            for k in 0..n {
                f += &Polynomial::var(n, k).scale(c.get(i, j, k));
            }
            entries.push((vec![i, j], f));
        }
    }
    let pi = PoissonStructure::unchecked(Multivector::from_entries(n, 2, entries))
        .expect("bivector");
    pi.check();
    pi
}

/// Names accepted by [`builtin`]; `abelian(n)` takes any `n ≥ 1`.
pub const BUILTIN_NAMES: [&str; 6] = ["abelian(n)", "heisenberg3", "aff1", "so3", "sl2", "se2"];

/// Standard structure constants:
///
/// * `abelian(n)`: all brackets zero
/// * `heisenberg3`: `[e1,e2] = e3`
/// * `aff1`: `[e1,e2] = e2`
/// * `so3`: `[e1,e2] = e3`, `[e2,e3] = e1`, `[e3,e1] = e2`
/// * `sl2` on `(h, e, f)`: `[h,e] = 2e`, `[h,f] = −2f`, `[e,f] = h`
/// * `se2` on `(P1, P2, J)`: `[J,P1] = P2`, `[J,P2] = −P1`
pub fn builtin(name: &str) -> Result<StructureConstants> {
    let unknown = || Error::UnknownLieAlgebra(name.to_string());
    let t = |k: usize, v: i64| (k, int(v));
    match name.trim() {
        "heisenberg3" => StructureConstants::from_brackets(3, [(0, 1, vec![t(2, 1)])]),
        "aff1" => StructureConstants::from_brackets(2, [(0, 1, vec![t(1, 1)])]),
        "so3" => StructureConstants::from_brackets(
            3,
            [(0, 1, vec![t(2, 1)]), (1, 2, vec![t(0, 1)]), (0, 2, vec![t(1, -1)])],
        ),
        "sl2" => StructureConstants::from_brackets(
            3,
            [(0, 1, vec![t(1, 2)]), (0, 2, vec![t(2, -2)]), (1, 2, vec![t(0, 1)])],
        ),
        "se2" => StructureConstants::from_brackets(
            3,
            // [J,P1] = P2 and [J,P2] = −P1, written with the smaller index first
            [(0, 2, vec![t(1, -1)]), (1, 2, vec![t(0, 1)])],
        ),
        other => {
            let n = other
                .strip_prefix("abelian(")
                .and_then(|r| r.strip_suffix(')'))
                .and_then(|d| d.trim().parse::<usize>().ok())
                .filter(|&n| n >= 1)
                .ok_or_else(unknown)?;
            Ok(StructureConstants::zero(n))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::calculus::{jacobi_check, jacobiator};
    use crate::polyalg::parse_poly;

    #[test]
    fn builtins_satisfy_jacobi() {
        for name in ["abelian(3)", "heisenberg3", "aff1", "so3", "sl2", "se2"] {
            let c = builtin(name).unwrap();
            assert!(c.jacobi_holds(), "{name}");
            assert!(jacobi_check(linear_poisson(&c).bivector()), "{name}");
        }
        assert!(matches!(builtin("su5"), Err(Error::UnknownLieAlgebra(_))));
        assert!(builtin("abelian(0)").is_err());
    }

    #[test]
    fn so3_bivector() {
        let pi = linear_poisson(&builtin("so3").unwrap());
        let p = |s: &str| parse_poly(s, 3, &["x", "y", "z"]).unwrap();
        let want = Multivector::from_entries(
            3,
            2,
            [(vec![0, 1], p("z")), (vec![1, 2], p("x")), (vec![2, 0], p("y"))],
        );
        assert_eq!(pi.bivector(), &want);
        assert!(linear_poisson(&builtin("abelian(4)").unwrap()).bivector().is_zero());
    }

    #[test]
    fn broken_constants() {
        // z ∂x∧∂y + x ∂x∧∂z
        let c = StructureConstants::from_brackets(3, [(0, 1, vec![(2, int(1))]), (0, 2, vec![(0, int(1))])])
            .unwrap();
        assert!(!c.jacobi_holds());
        let pi = linear_poisson(&c);
        assert!(!jacobi_check(pi.bivector()));
        assert!(!jacobiator(pi.bivector()).is_zero());
    }

    #[test]
    fn antisymmetry_enforced() {
        let mut raw = vec![vec![vec![int(0); 2]; 2]; 2];
        raw[0][1][0] = int(1);
        assert_eq!(
            StructureConstants::new(raw),
            Err(Error::NotAntisymmetric { i: 0, j: 1, k: 0 })
        );
    }
}
