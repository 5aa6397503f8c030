use std::cmp::Ordering;

/// Exponent multi-index `x_0^{e_0} ... x_{n-1}^{e_{n-1}}`.
///
/// Ordered graded-lexicographically: total degree first, then the exponent
/// vectors lexicographically, so `x^2 > x*y > y^2 > x > y > 1` for `n = 2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn one(n: usize) -> Self {
        Monomial(vec![0; n])
    }

    pub fn var(n: usize, i: usize) -> Self {
        let mut e = vec![0; n];
        e[i] = 1;
        Monomial(e)
    }

    pub fn from_exponents(e: Vec<u32>) -> Self {
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// Exponent of `x_i` lowered by one, or `None` when `x_i` is absent.
    pub fn lower(&self, i: usize) -> Option<(u32, Monomial)> {
        let e = self.0[i];
        if e == 0 {
            return None;
        }
        let mut out = self.0.clone();
        out[i] -= 1;
        Some((e, Monomial(out)))
    }

    /// All monomials in `n` variables of total degree `d`, in descending
    /// graded-lex order.
    pub fn all_of_degree(n: usize, d: u32) -> Vec<Monomial> {
        let mut out = Vec::new();
        let mut cur = vec![0u32; n];
        fn rec(pos: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
            let n = cur.len();
            if pos + 1 == n {
                cur[pos] = left;
                out.push(Monomial(cur.clone()));
                return;
            }
            for e in (0..=left).rev() {
                cur[pos] = e;
                rec(pos + 1, left - e, cur, out);
            }
        }
        if n == 0 {
            if d == 0 {
                out.push(Monomial(Vec::new()));
            }
            return out;
        }
        rec(0, d, &mut cur, &mut out);
        out
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Number of monomials of degree `d` in `n` variables, `C(d+n-1, n-1)`.
pub fn monomial_count(n: usize, d: u32) -> usize {
    if n == 0 {
        return usize::from(d == 0);
    }
    let (top, k) = (d as usize + n - 1, n - 1);
    (0..k).fold(1usize, |acc, i| acc * (top - i) / (i + 1))
}
