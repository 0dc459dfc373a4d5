//! Integer intersection theory on P2 x P2: the Chow ring truncated by
//! L^3 = h^3 = 0, Chern classes of the monad cohomology bundle, Euler
//! characteristics of twists, and the Hilbert-function shadow of the
//! minimal bigraded resolution.
//!
//! Cycle classes and chi are characteristic-free, so everything here is
//! ordinary integer arithmetic even though the geometry lives over GF(2).

use std::fmt;

/// An element of the Chow ring Z[L,h]/(L^3, h^3), stored as the coefficient
/// of L^i h^j for 0 <= i,j <= 2.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub struct ChowClass {
    coeff: [[i64; 3]; 3],
}

/// The display/JSON basis order {1, L, h, L^2, Lh, h^2, L^2h, Lh^2, L^2h^2}.
const BASIS: [(usize, usize, &str); 9] = [
    (0, 0, "1"),
    (1, 0, "L"),
    (0, 1, "h"),
    (2, 0, "L^2"),
    (1, 1, "Lh"),
    (0, 2, "h^2"),
    (2, 1, "L^2h"),
    (1, 2, "Lh^2"),
    (2, 2, "L^2h^2"),
];

impl ChowClass {
    #[must_use]
    pub fn zero() -> Self {
        Self::default()
    }

    #[must_use]
    pub fn one() -> Self {
        Self::term(1, 0, 0)
    }

    /// The class `n * L^i h^j`.
    ///
    /// # Panics
    /// Panics if `i > 2` or `j > 2`.
    #[must_use]
    pub fn term(n: i64, i: usize, j: usize) -> Self {
        assert!(i <= 2 && j <= 2, "exponent out of range");
        let mut c = Self::default();
        c.coeff[i][j] = n;
        c
    }

    #[must_use]
    pub fn l() -> Self {
        Self::term(1, 1, 0)
    }

    #[must_use]
    pub fn h() -> Self {
        Self::term(1, 0, 1)
    }

    /// A divisor class `p*L + q*h`.
    #[must_use]
    pub fn divisor(p: i64, q: i64) -> Self {
        Self::term(p, 1, 0).add(Self::term(q, 0, 1))
    }

    #[must_use]
    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.coeff[i][j]
    }

    /// The degree map: the coefficient of the point class L^2 h^2.
    #[must_use]
    pub fn degree(&self) -> i64 {
        self.coeff[2][2]
    }

    /// Coefficients in the basis order {1, L, h, L^2, Lh, h^2, L^2h, Lh^2, L^2h^2}.
    #[must_use]
    pub fn to_vec(&self) -> [i64; 9] {
        let mut out = [0; 9];
        for (k, &(i, j, _)) in BASIS.iter().enumerate() {
            out[k] = self.coeff[i][j];
        }
        out
    }

    #[must_use]
    pub fn add(self, other: Self) -> Self {
        let mut out = self;
        for i in 0..3 {
            for j in 0..3 {
                out.coeff[i][j] += other.coeff[i][j];
            }
        }
        out
    }

    #[must_use]
    pub fn sub(self, other: Self) -> Self {
        let mut out = self;
        for i in 0..3 {
            for j in 0..3 {
                out.coeff[i][j] -= other.coeff[i][j];
            }
        }
        out
    }

    #[must_use]
    pub fn scale(self, n: i64) -> Self {
        let mut out = self;
        for i in 0..3 {
            for j in 0..3 {
                out.coeff[i][j] *= n;
            }
        }
        out
    }

    /// Ring product with truncation L^3 = h^3 = 0.
    #[must_use]
    pub fn mul(self, other: Self) -> Self {
        let mut out = Self::default();
        for i in 0..3 {
            for j in 0..3 {
                if self.coeff[i][j] == 0 {
                    continue;
                }
                for k in 0..3 - i {
                    for l in 0..3 - j {
                        out.coeff[i + k][j + l] += self.coeff[i][j] * other.coeff[k][l];
                    }
                }
            }
        }
        out
    }

    /// Keeps only the total-degree-`d` part.
    #[must_use]
    pub fn graded_part(self, d: usize) -> Self {
        let mut out = Self::default();
        for i in 0..3 {
            for j in 0..3 {
                if i + j == d {
                    out.coeff[i][j] = self.coeff[i][j];
                }
            }
        }
        out
    }

    /// Inverse of a unit class with constant term 1, via the finite
    /// geometric series in the nilpotent part.
    ///
    /// # Panics
    /// Panics if the constant term is not 1.
    #[must_use]
    pub fn inverse(self) -> Self {
        assert_eq!(self.coeff[0][0], 1, "inverse requires constant term 1");
        let n = self.sub(Self::one());
        let mut acc = Self::one();
        let mut pow = Self::one();
        for k in 1..=4 {
            pow = pow.mul(n);
            let signed = if k % 2 == 1 { pow.scale(-1) } else { pow };
            acc = acc.add(signed);
        }
        acc
    }

    /// Swaps the two factors (L <-> h).
    #[must_use]
    pub fn swap_factors(self) -> Self {
        let mut out = Self::default();
        for i in 0..3 {
            for j in 0..3 {
                out.coeff[j][i] = self.coeff[i][j];
            }
        }
        out
    }
}

impl fmt::Display for ChowClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for &(i, j, name) in &BASIS {
            let n = self.coeff[i][j];
            if n == 0 {
                continue;
            }
            if wrote {
                write!(f, "{}", if n < 0 { "-" } else { "+" })?;
            } else if n < 0 {
                write!(f, "-")?;
            }
            wrote = true;
            let mag = n.abs();
            if mag != 1 || (i, j) == (0, 0) {
                write!(f, "{mag}")?;
            }
            if (i, j) != (0, 0) {
                write!(f, "{name}")?;
            }
        }
        if !wrote {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Quadratic extension of the Chow ring by two formal Chern roots r, s with
/// r^2 = L r - L^2 and s^2 = h s - h^2, i.e. the roots of c(Q_L) and c(Q_h).
/// Elements are stored on the module basis {1, r, s, rs}.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct RootExt {
    c: [ChowClass; 4],
}

impl RootExt {
    fn scalar(v: ChowClass) -> Self {
        Self {
            c: [v, ChowClass::zero(), ChowClass::zero(), ChowClass::zero()],
        }
    }

    fn root_r() -> Self {
        let mut e = Self::scalar(ChowClass::zero());
        e.c[1] = ChowClass::one();
        e
    }

    fn root_s() -> Self {
        let mut e = Self::scalar(ChowClass::zero());
        e.c[2] = ChowClass::one();
        e
    }

    fn add(self, other: Self) -> Self {
        let mut out = self;
        for k in 0..4 {
            out.c[k] = out.c[k].add(other.c[k]);
        }
        out
    }

    fn sub(self, other: Self) -> Self {
        let mut out = self;
        for k in 0..4 {
            out.c[k] = out.c[k].sub(other.c[k]);
        }
        out
    }

    fn mul(self, other: Self) -> Self {
        let l = ChowClass::l();
        let h = ChowClass::h();
        let l2 = ChowClass::term(1, 2, 0);
        let h2 = ChowClass::term(1, 0, 2);
        // Products of basis elements, expanded with the two quadratic
        // relations; entry [i][j] is the expansion of basis_i * basis_j.
        let rr = [l2.scale(-1), l, ChowClass::zero(), ChowClass::zero()];
        let ss = [h2.scale(-1), ChowClass::zero(), h, ChowClass::zero()];
        let r_rs = [ChowClass::zero(), ChowClass::zero(), l2.scale(-1), l];
        let s_rs = [ChowClass::zero(), h2.scale(-1), ChowClass::zero(), h];
        let rs_rs = [
            l2.mul(h2),
            l.mul(h2).scale(-1),
            h.mul(l2).scale(-1),
            l.mul(h),
        ];
        let table: [[[ChowClass; 4]; 4]; 4] = {
            let e = |k: usize| {
                let mut v = [ChowClass::zero(); 4];
                v[k] = ChowClass::one();
                v
            };
            [
                [e(0), e(1), e(2), e(3)],
                [e(1), rr, e(3), r_rs],
                [e(2), e(3), ss, s_rs],
                [e(3), r_rs, s_rs, rs_rs],
            ]
        };
        let mut out = Self::scalar(ChowClass::zero());
        for i in 0..4 {
            for j in 0..4 {
                let scale = self.c[i].mul(other.c[j]);
                for k in 0..4 {
                    out.c[k] = out.c[k].add(scale.mul(table[i][j][k]));
                }
            }
        }
        out
    }

    /// Extracts the scalar part, asserting the root components cancelled.
    fn into_scalar(self) -> ChowClass {
        assert!(
            self.c[1..].iter().all(|v| *v == ChowClass::zero()),
            "expression is not symmetric in the Chern roots"
        );
        self.c[0]
    }
}

/// Total Chern class of the monad cohomology bundle E0, computed as
/// c(Q_L (x) Q_h) / (c(O) * c(O(L+h))) by formal Chern-root arithmetic.
#[must_use]
pub fn chern_e0() -> ChowClass {
    let one = RootExt::scalar(ChowClass::one());
    let r1 = RootExt::root_r();
    let r2 = RootExt::scalar(ChowClass::l()).sub(r1);
    let s1 = RootExt::root_s();
    let s2 = RootExt::scalar(ChowClass::h()).sub(s1);
    let mut prod = one;
    for lam in [r1, r2] {
        for mu in [s1, s2] {
            prod = prod.mul(one.add(lam).add(mu));
        }
    }
    let tensor = prod.into_scalar();
    let denom = ChowClass::one().add(ChowClass::divisor(1, 1));
    tensor.mul(denom.inverse())
}

/// Chern data `(c1, c2)` of `E(m,n)` where `E = E0(L+h)`, so the twist by
/// `O(m,n)` contributes the divisor `(m+1)L + (n+1)h`.
#[must_use]
pub fn chern_twisted(m: i32, n: i32) -> (ChowClass, ChowClass) {
    let c = chern_e0();
    let c1_e0 = c.graded_part(1);
    let c2_e0 = c.graded_part(2);
    let d = ChowClass::divisor(i64::from(m) + 1, i64::from(n) + 1);
    let c1 = c1_e0.add(d.scale(2));
    let c2 = c2_e0.add(c1_e0.mul(d)).add(d.mul(d));
    (c1, c2)
}

/// chi of O(d) on P2 as a polynomial in d: (d+1)(d+2)/2 for every integer d.
#[must_use]
pub fn chi_p2(d: i64) -> i64 {
    (d + 1) * (d + 2) / 2
}

/// chi of the line bundle O(a,b) on P2 x P2 (Kunneth).
#[must_use]
pub fn chi_line(a: i64, b: i64) -> i64 {
    chi_p2(a) * chi_p2(b)
}

/// chi E(a,b) read off the three-term monad with line-bundle terms.
#[must_use]
pub fn chi_e_monad(a: i64, b: i64) -> i64 {
    3 * chi_line(a + 2, b + 1) + chi_line(a + 3, b) - chi_line(a + 2, b - 1)
        - chi_line(a + 4, b + 1)
}

/// chi E(a,b) from the closed formula in a' = a+3, b' = b+3.
#[must_use]
pub fn chi_e_closed(a: i64, b: i64) -> i64 {
    let (ap, bp) = (a + 3, b + 3);
    ap * bp * (ap * bp - 1) / 2 - ap * ap - bp * bp + 1
}

/// chi E(a,b); the monad route and the closed formula are both evaluated and
/// must agree.
///
/// # Panics
/// Panics if the two routes disagree, which would mean a transcription error.
#[must_use]
pub fn chi_e(a: i64, b: i64) -> i64 {
    let (m, c) = (chi_e_monad(a, b), chi_e_closed(a, b));
    assert_eq!(m, c, "chi routes disagree at ({a},{b})");
    m
}

/// Twists and multiplicities of the minimal bigraded resolution of the
/// section module of E, recorded as (sign, dL, dh, multiplicity).
const RESOLUTION_TERMS: [(i64, i64, i64, i64); 13] = [
    // F0: generators in module degrees (0,-1)^3, (0,0), (-1,0)^3.
    (1, 0, 1, 3),
    (1, 0, 0, 1),
    (1, 1, 0, 3),
    // F1
    (-1, -2, 1, 1),
    (-1, -1, 0, 6),
    (-1, 0, -1, 6),
    (-1, 1, -2, 1),
    // F2
    (1, -2, 0, 3),
    (1, -1, -1, 8),
    (1, 0, -2, 3),
    // F3
    (-1, -2, -1, 3),
    (-1, -1, -2, 3),
    // F4
    (1, -2, -2, 1),
];

/// The Hilbert function of the section module of E in degree `(m,n)`,
/// as the alternating binomial sum over the resolution twists. Agrees with
/// h^0 E(m,n) in every degree because the section module is saturated.
#[must_use]
pub fn resolution_hf(m: i64, n: i64) -> i64 {
    let r = |p: i64, q: i64| {
        if p >= 0 && q >= 0 {
            chi_line(p, q)
        } else {
            0
        }
    };
    RESOLUTION_TERMS
        .iter()
        .map(|&(sign, dl, dh, mult)| sign * mult * r(m + dl, n + dh))
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn ring_basics() {
        let lh = ChowClass::divisor(1, 1);
        let sq = lh.mul(lh);
        assert_eq!(sq.get(2, 0), 1);
        assert_eq!(sq.get(1, 1), 2);
        assert_eq!(sq.get(0, 2), 1);
        assert_eq!(
            ChowClass::term(1, 2, 0).mul(ChowClass::term(1, 0, 2)).degree(),
            1
        );
        // L^3 = 0 by truncation.
        assert_eq!(
            ChowClass::l().mul(ChowClass::l()).mul(ChowClass::l()),
            ChowClass::zero()
        );
    }

    #[test]
    fn chern_e0_matches_reference_class() {
        let c = chern_e0();
        let expected = ChowClass::one()
            .add(ChowClass::divisor(1, 1))
            .add(ChowClass::term(2, 2, 0))
            .add(ChowClass::term(2, 0, 2))
            .add(ChowClass::term(1, 1, 1));
        assert_eq!(c, expected);
        assert_eq!(c.to_string(), "1+L+h+2L^2+Lh+2h^2");
        assert_eq!(c.graded_part(1), ChowClass::divisor(1, 1));
        // Terms above the rank vanish: a rank-2 bundle (4 - 1 - 1 from the
        // monad) has no Chern classes past c2.
        assert_eq!(c.graded_part(3), ChowClass::zero());
        assert_eq!(c.graded_part(4), ChowClass::zero());
    }

    #[test]
    fn chern_of_e_is_enriques_class() {
        let (c1, c2) = chern_twisted(0, 0);
        assert_eq!(c1, ChowClass::divisor(3, 3));
        assert_eq!(c2.to_string(), "4L^2+5Lh+4h^2");
    }

    #[test]
    fn chern_of_minimal_twist() {
        let (_, c2) = chern_twisted(-1, 0);
        assert_eq!(c2.to_string(), "2L^2+2Lh+4h^2");
    }

    #[test]
    fn chi_spot_values() {
        assert_eq!(chi_e(0, 0), 19);
        assert_eq!(chi_e(-1, -1), -1);
        assert_eq!(chi_e(1, 1), 89);
    }

    #[test]
    fn chi_routes_agree_on_grid() {
        for a in -8..=8 {
            for b in -8..=8 {
                assert_eq!(chi_e_monad(a, b), chi_e_closed(a, b), "at ({a},{b})");
            }
        }
    }

    #[test]
    fn resolution_hf_spot_values() {
        assert_eq!(resolution_hf(0, 0), 19);
        assert_eq!(resolution_hf(-1, 0), 3);
        assert_eq!(resolution_hf(1, 1), 89);
        assert_eq!(resolution_hf(-1, -1), 0);
        assert_eq!(resolution_hf(-2, -2), 0);
    }

    #[test]
    fn inverse_is_inverse() {
        let u = ChowClass::one().add(ChowClass::divisor(1, 1));
        assert_eq!(u.mul(u.inverse()), ChowClass::one());
    }

    proptest! {
        #[test]
        fn mul_commutes(a in prop::array::uniform9(-4i64..4), b in prop::array::uniform9(-4i64..4)) {
            let build = |v: [i64; 9]| {
                let mut c = ChowClass::zero();
                let idx = [(0,0),(1,0),(0,1),(2,0),(1,1),(0,2),(2,1),(1,2),(2,2)];
                for (k, &(i, j)) in idx.iter().enumerate() {
                    c = c.add(ChowClass::term(v[k], i, j));
                }
                c
            };
            let (u, v) = (build(a), build(b));
            prop_assert_eq!(u.mul(v), v.mul(u));
        }

        #[test]
        fn c2_symmetric_under_swap(m in -3i32..4, n in -3i32..4) {
            let (_, c2) = chern_twisted(m, n);
            let (_, c2s) = chern_twisted(n, m);
            prop_assert_eq!(c2.swap_factors(), c2s);
        }

        #[test]
        fn chi_symmetric(a in -6i64..6, b in -6i64..6) {
            prop_assert_eq!(chi_e(a, b), chi_e(b, a));
        }
    }
}
