//! Bigraded Buchberger engine over GF(2) in six variables, with the ideal
//! operations the surface pipeline needs: normal forms, membership and
//! equality, colon and saturation, codimension, Hilbert functions, and the
//! multidegree (cycle class) of a codimension-2 subscheme.
//!
//! The term order is fixed globally: degree-reverse-lexicographic with
//! a > b > c > x > y > z (see [`crate::bipoly::Monomial`]). Colon ideals are
//! computed by a small Gröbner engine for submodules of a free module with a
//! position-over-term order, which keeps the ring fixed at six variables;
//! saturation is iterated colon with stabilization detection.

use std::cell::OnceCell;
use std::cmp::Ordering;
use std::collections::BinaryHeap;

use crate::bipoly::{graded_basis, BiDegree, BiPoly, Monomial};

/// Errors from ideal arithmetic.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum IdealError {
    #[error("colon by the zero polynomial (or an ideal with no nonzero generator)")]
    ZeroColon,
    #[error("operation requires codimension {expected}, ideal has {got:?}")]
    WrongCodim { expected: usize, got: Codim },
    #[error("Hilbert function is not polynomial on the fitting grid")]
    NotPolynomial,
}

/// Codimension of the vanishing locus in the six-variable affine cone;
/// the unit ideal carries the +infinity sentinel.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Codim {
    Finite(usize),
    Infinite,
}

// ---------------------------------------------------------------------------
// Polynomial reduction and Buchberger (ideal case)
// ---------------------------------------------------------------------------

/// Full normal form of `p` against `basis`: every term of the result is
/// reducible by no basis leading term.
fn reduce(p: &BiPoly, basis: &[BiPoly]) -> BiPoly {
    let lts: Vec<Monomial> = basis.iter().filter_map(BiPoly::leading_monomial).collect();
    let mut work = p.clone();
    let mut done: Vec<Monomial> = Vec::new();
    'outer: while let Some(lt) = work.leading_monomial() {
        for (k, g) in basis.iter().enumerate() {
            if lts[k].divides(lt) {
                work = work.add(&g.mul_monomial(lt.div(lts[k])));
                continue 'outer;
            }
        }
        done.push(lt);
        work = work.drop_leading();
    }
    // The irreducible terms came off in strictly decreasing order.
    BiPoly::from_terms(done)
}

fn s_poly(f: &BiPoly, g: &BiPoly) -> BiPoly {
    let (lf, lg) = (f.leading_monomial().unwrap(), g.leading_monomial().unwrap());
    let l = lf.lcm(lg);
    f.mul_monomial(l.div(lf)).add(&g.mul_monomial(l.div(lg)))
}

/// Pair queue entry, ordered so the smallest lcm pops first (normal
/// selection strategy).
#[derive(PartialEq, Eq)]
struct Pair {
    key: (u32, u64),
    i: usize,
    j: usize,
}

impl Ord for Pair {
    fn cmp(&self, other: &Self) -> Ordering {
        other
            .key
            .cmp(&self.key)
            .then_with(|| (other.i, other.j).cmp(&(self.i, self.j)))
    }
}

impl PartialOrd for Pair {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

fn pair_key(a: Monomial, b: Monomial) -> (u32, u64) {
    let l = a.lcm(b);
    (l.total_degree(), l.raw())
}

/// Buchberger's algorithm with the product criterion, returning the reduced
/// Gröbner basis (unique for the fixed order), sorted by leading monomial.
fn buchberger(gens: &[BiPoly]) -> Vec<BiPoly> {
    let mut basis: Vec<BiPoly> = Vec::new();
    for g in gens {
        if !g.is_zero() {
            basis.push(g.clone());
        }
    }
    basis.sort_by_key(|g| g.leading_monomial().unwrap());
    basis.dedup();
    if basis.is_empty() {
        return Vec::new();
    }

    let mut pairs = BinaryHeap::new();
    let push_pairs = |basis: &[BiPoly], pairs: &mut BinaryHeap<Pair>, j: usize| {
        let lj = basis[j].leading_monomial().unwrap();
        for i in 0..j {
            let li = basis[i].leading_monomial().unwrap();
            // Product criterion: coprime leading terms reduce to zero.
            if li.is_coprime(lj) {
                continue;
            }
            pairs.push(Pair {
                key: pair_key(li, lj),
                i,
                j,
            });
        }
    };
    for j in 0..basis.len() {
        push_pairs(&basis, &mut pairs, j);
    }

    while let Some(Pair { i, j, .. }) = pairs.pop() {
        let s = s_poly(&basis[i], &basis[j]);
        let r = reduce(&s, &basis);
        if r.is_zero() {
            continue;
        }
        if r.is_one() {
            return vec![BiPoly::one()];
        }
        basis.push(r);
        push_pairs(&basis, &mut pairs, basis.len() - 1);
    }

    // Minimalize: drop elements whose leading term another divides.
    let mut keep = vec![true; basis.len()];
    for i in 0..basis.len() {
        if !keep[i] {
            continue;
        }
        let li = basis[i].leading_monomial().unwrap();
        for j in 0..basis.len() {
            if i == j || !keep[j] {
                continue;
            }
            let lj = basis[j].leading_monomial().unwrap();
            if lj.divides(li) && (lj != li || j < i) {
                keep[i] = false;
                break;
            }
        }
    }
    let minimal: Vec<BiPoly> = basis
        .into_iter()
        .zip(keep)
        .filter_map(|(g, k)| k.then_some(g))
        .collect();

    // Autoreduce tails; leading terms are pairwise non-divisible so they
    // survive reduction by the others.
    let mut reduced = Vec::with_capacity(minimal.len());
    for i in 0..minimal.len() {
        let others: Vec<BiPoly> = minimal
            .iter()
            .enumerate()
            .filter_map(|(j, g)| (j != i).then(|| g.clone()))
            .collect();
        reduced.push(reduce(&minimal[i], &others));
    }
    reduced.sort_by_key(|g| g.leading_monomial().unwrap());
    reduced
}

// ---------------------------------------------------------------------------
// Module Gröbner basis (for colon and intersection)
// ---------------------------------------------------------------------------

/// A term of a free-module element: a monomial in a fixed component slot.
/// The order is position-over-term with lower components dominating, so
/// elements whose leading term sits in the last component are supported
/// entirely there — that is the elimination property colon rests on.
type ModTerm = (Monomial, u32);

fn mt_cmp(a: &ModTerm, b: &ModTerm) -> Ordering {
    b.1.cmp(&a.1).then_with(|| a.0.cmp(&b.0))
}

/// Element of a free module, terms sorted descending.
#[derive(Clone, PartialEq, Eq)]
struct ModVec(Vec<ModTerm>);

impl ModVec {
    fn add(&self, other: &Self) -> Self {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match mt_cmp(&a[i], &b[j]) {
                Ordering::Greater => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Less => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Self(out)
    }

    fn mul_monomial(&self, m: Monomial) -> Self {
        Self(self.0.iter().map(|&(t, c)| (t.mul(m), c)).collect())
    }

    fn leading(&self) -> Option<ModTerm> {
        self.0.first().copied()
    }

    fn is_zero(&self) -> bool {
        self.0.is_empty()
    }
}

fn mod_reduce(v: &ModVec, basis: &[ModVec]) -> ModVec {
    let lts: Vec<ModTerm> = basis.iter().map(|g| g.leading().unwrap()).collect();
    let mut work = v.clone();
    let mut done: Vec<ModTerm> = Vec::new();
    'outer: while let Some((lm, lc)) = work.leading() {
        for (k, g) in basis.iter().enumerate() {
            let (gm, gc) = lts[k];
            if gc == lc && gm.divides(lm) {
                work = work.add(&g.mul_monomial(lm.div(gm)));
                continue 'outer;
            }
        }
        done.push((lm, lc));
        work = ModVec(work.0[1..].to_vec());
    }
    ModVec(done)
}

fn module_gb(gens: Vec<ModVec>) -> Vec<ModVec> {
    let mut basis: Vec<ModVec> = gens.into_iter().filter(|v| !v.is_zero()).collect();
    let mut pairs = BinaryHeap::new();
    let push_pairs = |basis: &[ModVec], pairs: &mut BinaryHeap<Pair>, j: usize| {
        let (lj, cj) = basis[j].leading().unwrap();
        for i in 0..j {
            let (li, ci) = basis[i].leading().unwrap();
            if ci != cj {
                continue;
            }
            pairs.push(Pair {
                key: pair_key(li, lj),
                i,
                j,
            });
        }
    };
    for j in 0..basis.len() {
        push_pairs(&basis, &mut pairs, j);
    }
    while let Some(Pair { i, j, .. }) = pairs.pop() {
        let (li, _) = basis[i].leading().unwrap();
        let (lj, _) = basis[j].leading().unwrap();
        let l = li.lcm(lj);
        let s = basis[i]
            .mul_monomial(l.div(li))
            .add(&basis[j].mul_monomial(l.div(lj)));
        let r = mod_reduce(&s, &basis);
        if r.is_zero() {
            continue;
        }
        basis.push(r);
        push_pairs(&basis, &mut pairs, basis.len() - 1);
    }
    basis
}

/// Generators of `{p : p * g in span(ideal_gens)}` via the module
/// `[(g, 1)] + [(f, 0)]` in R^2: the second components of the Gröbner
/// elements supported in the last slot.
fn colon_by_poly(ideal_gens: &[BiPoly], g: &BiPoly) -> Vec<BiPoly> {
    let mut gens = Vec::with_capacity(ideal_gens.len() + 1);
    let mut v: Vec<ModTerm> = g.terms().iter().map(|&m| (m, 0)).collect();
    v.push((Monomial::one(), 1));
    v.sort_by(|a, b| mt_cmp(b, a));
    gens.push(ModVec(v));
    for f in ideal_gens {
        gens.push(ModVec(f.terms().iter().map(|&m| (m, 0)).collect()));
    }
    project_last(module_gb(gens))
}

/// Generators of the intersection of two ideals via the module
/// `[(f, f)] + [(g, 0)]` in R^2.
fn intersect_gens(a: &[BiPoly], b: &[BiPoly]) -> Vec<BiPoly> {
    let mut gens = Vec::with_capacity(a.len() + b.len());
    for f in a {
        let mut v: Vec<ModTerm> = f.terms().iter().map(|&m| (m, 0)).collect();
        v.extend(f.terms().iter().map(|&m| (m, 1)));
        v.sort_by(|x, y| mt_cmp(y, x));
        gens.push(ModVec(v));
    }
    for g in b {
        gens.push(ModVec(g.terms().iter().map(|&m| (m, 0)).collect()));
    }
    project_last(module_gb(gens))
}

fn project_last(gb: Vec<ModVec>) -> Vec<BiPoly> {
    gb.into_iter()
        .filter(|v| v.leading().is_some_and(|(_, c)| c == 1))
        .map(|v| {
            debug_assert!(v.0.iter().all(|&(_, c)| c == 1));
            BiPoly::from_terms(v.0.into_iter().map(|(m, _)| m).collect())
        })
        .collect()
}

// ---------------------------------------------------------------------------
// Ideal
// ---------------------------------------------------------------------------

/// A finitely generated ideal of GF(2)[a,b,c,x,y,z] with a cached reduced
/// Gröbner basis. Queries on one `Ideal` from several threads need external
/// synchronization; distinct ideals are independent.
pub struct Ideal {
    gens: Vec<BiPoly>,
    gb: OnceCell<Vec<BiPoly>>,
}

impl Clone for Ideal {
    fn clone(&self) -> Self {
        let cell = OnceCell::new();
        if let Some(gb) = self.gb.get() {
            let _ = cell.set(gb.clone());
        }
        Self {
            gens: self.gens.clone(),
            gb: cell,
        }
    }
}

impl std::fmt::Debug for Ideal {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Ideal(")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ")")
    }
}

impl Ideal {
    #[must_use]
    pub fn new(gens: Vec<BiPoly>) -> Self {
        Self {
            gens: gens.into_iter().filter(|g| !g.is_zero()).collect(),
            gb: OnceCell::new(),
        }
    }

    #[must_use]
    pub fn zero() -> Self {
        Self::new(Vec::new())
    }

    #[must_use]
    pub fn unit() -> Self {
        Self::new(vec![BiPoly::one()])
    }

    #[must_use]
    pub fn generators(&self) -> &[BiPoly] {
        &self.gens
    }

    /// The reduced Gröbner basis, computed on first use and cached.
    #[must_use]
    pub fn gb(&self) -> &[BiPoly] {
        self.gb.get_or_init(|| buchberger(&self.gens))
    }

    #[must_use]
    pub fn normal_form(&self, p: &BiPoly) -> BiPoly {
        reduce(p, self.gb())
    }

    #[must_use]
    pub fn member(&self, p: &BiPoly) -> bool {
        self.normal_form(p).is_zero()
    }

    #[must_use]
    pub fn is_unit(&self) -> bool {
        self.gb().first().is_some_and(BiPoly::is_one)
    }

    #[must_use]
    pub fn is_zero_ideal(&self) -> bool {
        self.gb().is_empty()
    }

    /// Ideal equality via mutual normal forms of the generators.
    #[must_use]
    pub fn ideal_equal(&self, other: &Ideal) -> bool {
        self.gens.iter().all(|g| other.member(g)) && other.gens.iter().all(|g| self.member(g))
    }

    /// The sum ideal I + J.
    #[must_use]
    pub fn sum(&self, other: &Ideal) -> Ideal {
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Ideal::new(gens)
    }

    /// The colon ideal `I : g = {p : p g in I}`.
    ///
    /// # Errors
    /// Colon by zero is rejected.
    pub fn colon_poly(&self, g: &BiPoly) -> Result<Ideal, IdealError> {
        if g.is_zero() {
            return Err(IdealError::ZeroColon);
        }
        Ok(Ideal::new(colon_by_poly(self.gb(), g)))
    }

    /// Intersection of two ideals.
    #[must_use]
    pub fn intersect(&self, other: &Ideal) -> Ideal {
        if self.is_zero_ideal() || other.is_zero_ideal() {
            return Ideal::zero();
        }
        Ideal::new(intersect_gens(self.gb(), other.gb()))
    }

    /// The colon ideal `I : J` for a finitely generated `J`, as the
    /// intersection of the single-divisor colons.
    ///
    /// # Errors
    /// `J` must have a nonzero generator.
    pub fn colon(&self, other: &Ideal) -> Result<Ideal, IdealError> {
        let gens: Vec<&BiPoly> = other.gens.iter().filter(|g| !g.is_zero()).collect();
        if gens.is_empty() {
            return Err(IdealError::ZeroColon);
        }
        let mut acc = self.colon_poly(gens[0])?;
        for g in &gens[1..] {
            acc = acc.intersect(&self.colon_poly(g)?);
        }
        Ok(acc)
    }

    /// Saturation `I : J^inf` by stabilized iterated colon.
    ///
    /// # Errors
    /// `J` must have a nonzero generator.
    pub fn saturate(&self, other: &Ideal) -> Result<Ideal, IdealError> {
        let mut current = self.clone();
        loop {
            let next = current.colon(other)?;
            if next.ideal_equal(&current) {
                return Ok(current);
            }
            current = next;
        }
    }

    /// Saturation by the two irrelevant ideals (a,b,c) then (x,y,z); the
    /// bigraded analogue of passing to the saturated homogeneous ideal.
    #[must_use]
    pub fn sat_irrelevant(&self) -> Ideal {
        use crate::bipoly::Var;
        let left = Ideal::new(Var::LEFT.iter().map(|&v| BiPoly::var(v)).collect());
        let right = Ideal::new(Var::RIGHT.iter().map(|&v| BiPoly::var(v)).collect());
        self.saturate(&left)
            .and_then(|i| i.saturate(&right))
            .expect("irrelevant ideals have nonzero generators")
    }

    /// The minimal leading-term monomials of the Gröbner basis.
    fn minimal_lts(&self) -> Vec<Monomial> {
        let lts: Vec<Monomial> = self.gb().iter().filter_map(BiPoly::leading_monomial).collect();
        lts.iter()
            .copied()
            .filter(|&m| !lts.iter().any(|&n| n != m && n.divides(m)))
            .collect()
    }

    /// Codimension: 6 minus the Krull dimension of the leading-term
    /// monomial ideal, by searching the 2^6 coordinate subspaces.
    #[must_use]
    pub fn codim(&self) -> Codim {
        if self.is_unit() {
            return Codim::Infinite;
        }
        let lts = self.minimal_lts();
        let supports: Vec<u8> = lts
            .iter()
            .map(|m| {
                let e = m.exponents();
                (0..6).fold(0u8, |s, k| s | (u8::from(e[k] > 0) << k))
            })
            .collect();
        let mut dim = 0usize;
        for subset in 0u8..64 {
            // The coordinate subspace on the variables in `subset` survives
            // iff no leading term is supported entirely inside it.
            if supports.iter().all(|&s| s & !subset != 0) {
                dim = dim.max(subset.count_ones() as usize);
            }
        }
        Codim::Finite(6 - dim)
    }

    /// Number of standard monomials of bidegree (a,b): the dimension of
    /// (R/I) in that bidegree.
    #[must_use]
    pub fn hilbert_function(&self, a: i32, b: i32) -> usize {
        let lts = self.minimal_lts();
        graded_basis(BiDegree::new(a, b))
            .into_iter()
            .filter(|&m| !lts.iter().any(|&l| l.divides(m)))
            .count()
    }

    /// Dimension of the bidegree-(a,b) piece of the ideal itself:
    /// the full graded piece minus the standard monomials.
    #[must_use]
    pub fn hilbert_function_ideal(&self, a: i32, b: i32) -> usize {
        graded_basis(BiDegree::new(a, b)).len() - self.hilbert_function(a, b)
    }

    /// An echelonized vector-space basis of the bidegree-(a,b) piece of the
    /// ideal. Requires a bihomogeneous ideal.
    #[must_use]
    pub fn degree_piece(&self, d: BiDegree) -> Vec<BiPoly> {
        let monomials = graded_basis(d);
        let col_of: std::collections::HashMap<Monomial, usize> =
            monomials.iter().enumerate().map(|(i, &m)| (m, i)).collect();
        // Span of all monomial multiples of the basis landing in degree d.
        let mut rows: Vec<Vec<Monomial>> = Vec::new();
        for g in self.gb() {
            let Some(gd) = g.bidegree() else {
                debug_assert!(g.is_zero(), "degree_piece needs a bihomogeneous ideal");
                continue;
            };
            let shift = d - gd;
            for m in graded_basis(shift) {
                rows.push(g.mul_monomial(m).terms().to_vec());
            }
        }
        // Echelonize over GF(2) on the monomial coordinates.
        let mut echelon: Vec<Vec<bool>> = Vec::new();
        for row in rows {
            let mut v = vec![false; monomials.len()];
            for m in row {
                v[col_of[&m]] = true;
            }
            for e in &echelon {
                let pivot = e.iter().position(|&x| x).unwrap();
                if v[pivot] {
                    for (dst, src) in v.iter_mut().zip(e) {
                        *dst ^= src;
                    }
                }
            }
            if v.iter().any(|&x| x) {
                echelon.push(v);
            }
        }
        echelon.sort_by_key(|r| r.iter().position(|&x| x).unwrap());
        // Back-substitute for the fully reduced (canonical) basis.
        for i in (0..echelon.len()).rev() {
            let pivot = echelon[i].iter().position(|&x| x).unwrap();
            let row = echelon[i].clone();
            for j in 0..i {
                if echelon[j][pivot] {
                    for (dst, src) in echelon[j].iter_mut().zip(&row) {
                        *dst ^= src;
                    }
                }
            }
        }
        echelon
            .into_iter()
            .map(|v| {
                BiPoly::from_terms(
                    v.into_iter()
                        .enumerate()
                        .filter_map(|(i, on)| on.then_some(monomials[i]))
                        .collect(),
                )
            })
            .collect()
    }

    /// Exact fit of the Hilbert function as a bidegree-(2,2) polynomial in
    /// (a,b): solved on the 3x3 grid [6..8]^2 and verified on all of
    /// [6..9]^2. Coefficients are returned as exact rationals (num, den)
    /// in the monomial order 1, a, b, a^2, ab, b^2, a^2 b, a b^2, a^2 b^2.
    fn fit_hilbert_polynomial(&self) -> Result<[(i128, i128); 9], IdealError> {
        let powers = |a: i128, b: i128| -> [i128; 9] {
            [
                1,
                a,
                b,
                a * a,
                a * b,
                b * b,
                a * a * b,
                a * b * b,
                a * a * b * b,
            ]
        };
        let mut matrix = Vec::new();
        let mut rhs = Vec::new();
        for a in 6..=8i64 {
            for b in 6..=8i64 {
                matrix.push(powers(i128::from(a), i128::from(b)));
                rhs.push(self.hilbert_function(a as i32, b as i32) as i128);
            }
        }
        let coeffs = solve_rational(&matrix, &rhs).ok_or(IdealError::NotPolynomial)?;
        // Verify on the full 4x4 grid: polynomiality onset is checked.
        for a in 6..=9i64 {
            for b in 6..=9i64 {
                let p = powers(i128::from(a), i128::from(b));
                let mut num = 0i128;
                let mut den = 1i128;
                for k in 0..9 {
                    // num/den += coeffs[k] * p[k]
                    let (cn, cd) = coeffs[k];
                    num = num * cd + cn * p[k] * den;
                    den *= cd;
                }
                let hf = self.hilbert_function(a as i32, b as i32) as i128;
                if num != hf * den {
                    return Err(IdealError::NotPolynomial);
                }
            }
        }
        Ok(coeffs)
    }

    /// Cycle class (alpha, beta, gamma) of a codimension-2 subscheme,
    /// meaning `alpha L^2 + beta Lh + gamma h^2`, read off the quadratic
    /// part of the bigraded Hilbert polynomial.
    ///
    /// # Errors
    /// The ideal must have codimension exactly 2 and a polynomial Hilbert
    /// function on the fitting grid with the right integrality.
    pub fn multidegree(&self) -> Result<(i64, i64, i64), IdealError> {
        match self.codim() {
            Codim::Finite(2) => {}
            other => {
                return Err(IdealError::WrongCodim {
                    expected: 2,
                    got: other,
                })
            }
        }
        let c = self.fit_hilbert_polynomial()?;
        // HF ~ (gamma/2) a^2 + beta ab + (alpha/2) b^2 + lower order.
        let ratio_to_int = |num: i128, den: i128, scale: i128| -> Result<i64, IdealError> {
            let n = num * scale;
            if n % den != 0 {
                return Err(IdealError::NotPolynomial);
            }
            Ok((n / den) as i64)
        };
        let gamma = ratio_to_int(c[3].0, c[3].1, 2)?;
        let beta = ratio_to_int(c[4].0, c[4].1, 1)?;
        let alpha = ratio_to_int(c[5].0, c[5].1, 2)?;
        // A genuine surface has no higher terms.
        for k in [6, 7, 8] {
            if c[k].0 != 0 {
                return Err(IdealError::NotPolynomial);
            }
        }
        Ok((alpha, beta, gamma))
    }

    /// Degrees (C.L, C.h) of a dimension-1 subscheme against the two
    /// rulings, read off the linear part of the Hilbert polynomial.
    ///
    /// # Errors
    /// The ideal must have codimension exactly 3 and an eventually linear
    /// Hilbert function.
    pub fn curve_degrees(&self) -> Result<(i64, i64), IdealError> {
        match self.codim() {
            Codim::Finite(3) => {}
            other => {
                return Err(IdealError::WrongCodim {
                    expected: 3,
                    got: other,
                })
            }
        }
        let c = self.fit_hilbert_polynomial()?;
        let to_int = |(num, den): (i128, i128)| -> Result<i64, IdealError> {
            if num % den != 0 {
                return Err(IdealError::NotPolynomial);
            }
            Ok((num / den) as i64)
        };
        for k in [3, 4, 5, 6, 7, 8] {
            if c[k].0 != 0 {
                return Err(IdealError::NotPolynomial);
            }
        }
        Ok((to_int(c[1])?, to_int(c[2])?))
    }
}

/// Solves a square integer system exactly, returning the solution as
/// reduced fractions. `None` when the system is singular.
fn solve_rational(matrix: &[[i128; 9]], rhs: &[i128]) -> Option<[(i128, i128); 9]> {
    let n = 9;
    // Fraction arithmetic on (num, den) pairs with den > 0.
    fn gcd(mut a: i128, mut b: i128) -> i128 {
        a = a.abs();
        b = b.abs();
        while b != 0 {
            (a, b) = (b, a % b);
        }
        a.max(1)
    }
    fn norm(num: i128, den: i128) -> (i128, i128) {
        let s = if den < 0 { -1 } else { 1 };
        let g = gcd(num, den);
        (s * num / g, s * den / g)
    }
    let sub = |a: (i128, i128), b: (i128, i128)| norm(a.0 * b.1 - b.0 * a.1, a.1 * b.1);
    let mul = |a: (i128, i128), b: (i128, i128)| norm(a.0 * b.0, a.1 * b.1);
    let div = |a: (i128, i128), b: (i128, i128)| norm(a.0 * b.1, a.1 * b.0);

    let mut aug: Vec<Vec<(i128, i128)>> = matrix
        .iter()
        .zip(rhs)
        .map(|(row, &r)| {
            row.iter()
                .map(|&v| (v, 1))
                .chain(std::iter::once((r, 1)))
                .collect()
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| aug[r][col].0 != 0)?;
        aug.swap(col, pivot);
        let p = aug[col][col];
        for c in col..=n {
            aug[col][c] = div(aug[col][c], p);
        }
        for r in 0..n {
            if r != col && aug[r][col].0 != 0 {
                let factor = aug[r][col];
                for c in col..=n {
                    let s = mul(factor, aug[col][c]);
                    aug[r][c] = sub(aug[r][c], s);
                }
            }
        }
    }
    let mut out = [(0, 1); 9];
    for (k, slot) in out.iter_mut().enumerate() {
        *slot = aug[k][n];
    }
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bipoly::{divisor_form, Var};

    fn p(s: &str) -> BiPoly {
        BiPoly::parse(s).unwrap()
    }

    fn ideal(gens: &[&str]) -> Ideal {
        Ideal::new(gens.iter().map(|s| p(s)).collect())
    }

    #[test]
    fn membership_with_linear_algebra_oracle() {
        // Oracle for b^3 in (a^2, ab + b^2): exhaustive linear algebra on
        // the bidegree-(3,0) multiples of the generators.
        let gens = [p("a^2"), p("a*b+b^2")];
        let lin = [p("a"), p("b"), p("c")];
        let mut span: Vec<BiPoly> = Vec::new();
        for g in &gens {
            for l in &lin {
                span.push(g.mul(l));
            }
        }
        // Echelon over the degree-(3,0) monomials.
        let basis = graded_basis(BiDegree::new(3, 0));
        let col: std::collections::HashMap<_, _> =
            basis.iter().enumerate().map(|(i, &m)| (m, i)).collect();
        let mut echelon: Vec<Vec<bool>> = Vec::new();
        let mut reduce_vec = |mut v: Vec<bool>, echelon: &mut Vec<Vec<bool>>, insert: bool| {
            for e in echelon.iter() {
                let piv = e.iter().position(|&x| x).unwrap();
                if v[piv] {
                    for (d, s) in v.iter_mut().zip(e) {
                        *d ^= s;
                    }
                }
            }
            let nonzero = v.iter().any(|&x| x);
            if nonzero && insert {
                echelon.push(v);
            }
            nonzero
        };
        for q in &span {
            let mut v = vec![false; basis.len()];
            for &t in q.terms() {
                v[col[&t]] = true;
            }
            reduce_vec(v, &mut echelon, true);
        }
        let mut target = vec![false; basis.len()];
        target[col[&Monomial::from_exponents([0, 3, 0, 0, 0, 0])]] = true;
        let in_span = !reduce_vec(target, &mut echelon, false);
        assert!(in_span, "oracle: b^3 is a linear combination of multiples");

        let i = Ideal::new(gens.to_vec());
        assert!(i.member(&p("b^3")));
        assert!(!i.member(&p("b^2")));
    }

    #[test]
    fn normal_form_mod_unit() {
        let one = Ideal::unit();
        assert!(one.normal_form(&p("a^3*x+b*y^2")).is_zero());
    }

    #[test]
    fn ideal_equality_is_symmetric() {
        assert!(ideal(&["a", "b"]).ideal_equal(&ideal(&["b", "a"])));
        assert!(ideal(&["a", "b"]).ideal_equal(&ideal(&["a+b", "b"])));
        assert!(!ideal(&["a"]).ideal_equal(&ideal(&["b"])));
    }

    #[test]
    fn buchberger_criterion_on_output() {
        let samples = [
            ideal(&["a^2", "a*b+b^2"]),
            ideal(&["a*x+b*y+c*z", "a^2", "x^2+y*z"]),
            ideal(&["a*b*c", "b^2+a*c", "x*y"]),
        ];
        for i in &samples {
            let gb = i.gb().to_vec();
            for s in 0..gb.len() {
                for t in s + 1..gb.len() {
                    let sp = s_poly(&gb[s], &gb[t]);
                    assert!(reduce(&sp, &gb).is_zero(), "S-poly fails to reduce");
                }
            }
        }
    }

    #[test]
    fn colon_principal() {
        let i = ideal(&["a^2*b"]);
        let c = i.colon_poly(&p("a")).unwrap();
        assert!(c.ideal_equal(&ideal(&["a*b"])));
        assert!(i.colon_poly(&BiPoly::zero()).is_err());
    }

    #[test]
    fn intersection_principal() {
        let i = ideal(&["a"]).intersect(&ideal(&["b"]));
        assert!(i.ideal_equal(&ideal(&["a*b"])));
    }

    #[test]
    fn saturate_by_single_variable_strips_its_factor() {
        let a = Ideal::new(vec![BiPoly::var(Var::A)]);
        let s = ideal(&["a*x"]).saturate(&a).unwrap();
        assert!(s.ideal_equal(&ideal(&["x"])));
    }

    #[test]
    fn saturate_keeps_honest_divisor_components() {
        // V(a) is a divisor of the product, not supported on the locus
        // a = b = c = 0, so saturating (a*x) by (a,b,c) must keep it:
        // x * b^N never lands in (a*x).
        let abc = Ideal::new(Var::LEFT.iter().map(|&v| BiPoly::var(v)).collect());
        let s = ideal(&["a*x"]).saturate(&abc).unwrap();
        assert!(s.ideal_equal(&ideal(&["a*x"])));
        assert!(!s.member(&p("x")));
    }

    #[test]
    fn sat_irrelevant_pattern() {
        let s = ideal(&["a*x", "a*y", "a*z"]).sat_irrelevant();
        assert!(s.ideal_equal(&ideal(&["a"])));
    }

    #[test]
    fn saturate_idempotent() {
        let abc = Ideal::new(Var::LEFT.iter().map(|&v| BiPoly::var(v)).collect());
        let i = ideal(&["a^2*x", "b*x*y", "a*b^2"]);
        let s1 = i.saturate(&abc).unwrap();
        let s2 = s1.saturate(&abc).unwrap();
        assert!(s1.ideal_equal(&s2));
    }

    #[test]
    fn codim_cases() {
        assert_eq!(ideal(&["a", "x"]).codim(), Codim::Finite(2));
        assert_eq!(Ideal::zero().codim(), Codim::Finite(0));
        assert_eq!(Ideal::unit().codim(), Codim::Infinite);
        assert_eq!(ideal(&["a", "b", "c"]).codim(), Codim::Finite(3));
    }

    #[test]
    fn hilbert_function_basics() {
        assert_eq!(Ideal::zero().hilbert_function(1, 1), 9);
        let f = Ideal::new(vec![divisor_form()]);
        assert_eq!(f.hilbert_function(1, 1), 8);
        assert_eq!(f.hilbert_function_ideal(1, 1), 1);
    }

    #[test]
    fn multidegree_complete_intersection() {
        // Two general (1,1) forms cut a surface of class (L+h)^2.
        let i = ideal(&["a*x+b*y+c*z", "a*y+b*z+c*x"]);
        assert_eq!(i.multidegree().unwrap(), (1, 2, 1));
    }

    #[test]
    fn multidegree_rejects_wrong_codim() {
        assert!(ideal(&["a"]).multidegree().is_err());
    }

    #[test]
    fn curve_degrees_of_line_pair() {
        // a = x = 0 is a (P1 in the second factor) x point... cut by (a, b, x, y):
        // the line {a=b=0} x {x=y=0} has degree 1 against L? No: it is the
        // product of two points, dimension... use a genuine curve: the
        // diagonal-like complete intersection of three (1,1) forms.
        let i = ideal(&["a", "b", "x"]);
        // {a=b=0} x {x=0}: P0 x line, degrees (0 against L, 1 against h).
        assert_eq!(i.curve_degrees().unwrap(), (0, 1));
        let j = ideal(&["a", "x", "y"]);
        assert_eq!(j.curve_degrees().unwrap(), (1, 0));
    }

    #[test]
    fn degree_piece_matches_hilbert_count() {
        let i = ideal(&["a*x+b*y+c*z", "a^2"]);
        for (da, db) in [(1, 1), (2, 0), (2, 1), (3, 2)] {
            let piece = i.degree_piece(BiDegree::new(da, db));
            assert_eq!(piece.len(), i.hilbert_function_ideal(da, db));
            for q in &piece {
                assert!(i.member(q));
                assert_eq!(q.bidegree(), Some(BiDegree::new(da, db)));
            }
        }
    }

    #[test]
    fn gb_is_deterministic() {
        let mk = || ideal(&["a*x+b*y+c*z", "a^2+b*c", "x^3"]);
        let g1: Vec<String> = mk().gb().iter().map(|g| g.to_string()).collect();
        let g2: Vec<String> = mk().gb().iter().map(|g| g.to_string()).collect();
        assert_eq!(g1, g2);
    }
}
