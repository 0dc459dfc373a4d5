//! The bigraded ring GF(2)[a,b,c,x,y,z] with deg a,b,c = (1,0) and
//! deg x,y,z = (0,1), i.e. the bihomogeneous coordinate ring of P2 x P2.
//!
//! Monomials are packed exponent tuples with the bidegree cached in the
//! upper byte lanes; the canonical term order is degree-reverse-lexicographic
//! with a > b > c > x > y > z, which is also the order used for printing.

use std::cmp::Ordering;
use std::fmt;

/// The six variables, in the fixed order a > b > c > x > y > z.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    A = 0,
    B = 1,
    C = 2,
    X = 3,
    Y = 4,
    Z = 5,
}

impl Var {
    pub const ALL: [Var; 6] = [Var::A, Var::B, Var::C, Var::X, Var::Y, Var::Z];
    /// The first-factor variables a, b, c.
    pub const LEFT: [Var; 3] = [Var::A, Var::B, Var::C];
    /// The second-factor variables x, y, z.
    pub const RIGHT: [Var; 3] = [Var::X, Var::Y, Var::Z];

    #[must_use]
    pub const fn symbol(self) -> char {
        match self {
            Var::A => 'a',
            Var::B => 'b',
            Var::C => 'c',
            Var::X => 'x',
            Var::Y => 'y',
            Var::Z => 'z',
        }
    }

    #[must_use]
    pub const fn from_symbol(c: char) -> Option<Var> {
        match c {
            'a' => Some(Var::A),
            'b' => Some(Var::B),
            'c' => Some(Var::C),
            'x' => Some(Var::X),
            'y' => Some(Var::Y),
            'z' => Some(Var::Z),
            _ => None,
        }
    }
}

/// A bidegree `(dL, dh)`: the twist `O(dL*L + dh*h)` is written `O(dL, dh)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct BiDegree {
    pub d_l: i32,
    pub d_h: i32,
}

impl BiDegree {
    #[must_use]
    pub const fn new(d_l: i32, d_h: i32) -> Self {
        Self { d_l, d_h }
    }
}

impl std::ops::Add for BiDegree {
    type Output = BiDegree;
    fn add(self, rhs: BiDegree) -> BiDegree {
        BiDegree::new(self.d_l + rhs.d_l, self.d_h + rhs.d_h)
    }
}

impl std::ops::Sub for BiDegree {
    type Output = BiDegree;
    fn sub(self, rhs: BiDegree) -> BiDegree {
        BiDegree::new(self.d_l - rhs.d_l, self.d_h - rhs.d_h)
    }
}

impl fmt::Display for BiDegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.d_l, self.d_h)
    }
}

/// High bits of each byte lane, for SWAR divisibility tests.
const LANE_HI: u64 = 0x8080_8080_8080_8080;

/// A monomial in a,b,c,x,y,z with coefficient 1 over GF(2).
///
/// Byte lanes 0..6 hold the exponents in variable order; lanes 6 and 7 cache
/// the partial degrees (dL, dh). Exponents must stay below 128 so the SWAR
/// tricks remain valid; the degrees in this crate never get close.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Monomial(u64);

impl Monomial {
    /// The constant monomial 1.
    #[must_use]
    pub const fn one() -> Self {
        Self(0)
    }

    #[must_use]
    pub fn var(v: Var) -> Self {
        Self::from_exponents([
            u8::from(v == Var::A),
            u8::from(v == Var::B),
            u8::from(v == Var::C),
            u8::from(v == Var::X),
            u8::from(v == Var::Y),
            u8::from(v == Var::Z),
        ])
    }

    #[must_use]
    pub fn from_exponents(e: [u8; 6]) -> Self {
        debug_assert!(e.iter().all(|&x| x < 128), "exponent out of range");
        let d_l = e[0].checked_add(e[1]).and_then(|s| s.checked_add(e[2]));
        let d_h = e[3].checked_add(e[4]).and_then(|s| s.checked_add(e[5]));
        let (d_l, d_h) = (d_l.expect("degree overflow"), d_h.expect("degree overflow"));
        let mut w = 0u64;
        for (i, &x) in e.iter().enumerate() {
            w |= u64::from(x) << (8 * i);
        }
        w |= u64::from(d_l) << 48;
        w |= u64::from(d_h) << 56;
        Self(w)
    }

    #[must_use]
    pub fn exponent(self, v: Var) -> u8 {
        ((self.0 >> (8 * v as u64)) & 0xff) as u8
    }

    #[must_use]
    pub fn exponents(self) -> [u8; 6] {
        let mut e = [0; 6];
        for (i, x) in e.iter_mut().enumerate() {
            *x = ((self.0 >> (8 * i)) & 0xff) as u8;
        }
        e
    }

    #[must_use]
    pub fn bidegree(self) -> BiDegree {
        BiDegree::new(((self.0 >> 48) & 0xff) as i32, ((self.0 >> 56) & 0xff) as i32)
    }

    #[must_use]
    pub fn total_degree(self) -> u32 {
        (((self.0 >> 48) & 0xff) + ((self.0 >> 56) & 0xff)) as u32
    }

    /// Product of monomials (exponents add; the cached degrees add too).
    #[must_use]
    pub fn mul(self, other: Self) -> Self {
        debug_assert!(
            self.exponents()
                .iter()
                .zip(other.exponents())
                .all(|(&x, y)| (x as u16 + y as u16) < 128),
            "exponent overflow"
        );
        Self(self.0 + other.0)
    }

    /// True when `self` divides `other` (every exponent is at most the other's).
    #[must_use]
    pub fn divides(self, other: Self) -> bool {
        ((other.0 | LANE_HI).wrapping_sub(self.0)) & LANE_HI == LANE_HI
    }

    /// Quotient monomial; caller must ensure divisibility.
    #[must_use]
    pub fn div(self, other: Self) -> Self {
        debug_assert!(other.divides(self));
        Self(self.0 - other.0)
    }

    /// Least common multiple (per-variable max).
    #[must_use]
    pub fn lcm(self, other: Self) -> Self {
        let (a, b) = (self.exponents(), other.exponents());
        let mut e = [0; 6];
        for i in 0..6 {
            e[i] = a[i].max(b[i]);
        }
        Self::from_exponents(e)
    }

    /// The packed representation; an arbitrary but deterministic key.
    #[must_use]
    pub(crate) fn raw(self) -> u64 {
        self.0
    }

    /// True when the two monomials share no variable.
    #[must_use]
    pub fn is_coprime(self, other: Self) -> bool {
        let (a, b) = (self.exponents(), other.exponents());
        (0..6).all(|i| a[i] == 0 || b[i] == 0)
    }
}

impl Ord for Monomial {
    /// Degree-reverse-lexicographic with a > b > c > x > y > z.
    fn cmp(&self, other: &Self) -> Ordering {
        match self.total_degree().cmp(&other.total_degree()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        // Reverse-lex tie break: scanning from z back to a, at the first
        // differing exponent the smaller one wins.
        let (a, b) = (self.exponents(), other.exponents());
        for i in (0..6).rev() {
            match a[i].cmp(&b[i]) {
                Ordering::Equal => {}
                ord => return ord.reverse(),
            }
        }
        Ordering::Equal
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.total_degree() == 0 {
            return write!(f, "1");
        }
        let mut first = true;
        for v in Var::ALL {
            let e = self.exponent(v);
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            write!(f, "{}", v.symbol())?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// A polynomial over GF(2): a set of monomials, stored sorted descending in
/// the term order (leading term first).
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct BiPoly {
    terms: Vec<Monomial>,
}

impl BiPoly {
    #[must_use]
    pub fn zero() -> Self {
        Self { terms: Vec::new() }
    }

    #[must_use]
    pub fn one() -> Self {
        Self {
            terms: vec![Monomial::one()],
        }
    }

    #[must_use]
    pub fn var(v: Var) -> Self {
        Self {
            terms: vec![Monomial::var(v)],
        }
    }

    #[must_use]
    pub fn monomial(m: Monomial) -> Self {
        Self { terms: vec![m] }
    }

    /// Builds a polynomial from an arbitrary term list, cancelling pairs mod 2.
    #[must_use]
    pub fn from_terms(mut terms: Vec<Monomial>) -> Self {
        terms.sort_unstable_by(|p, q| q.cmp(p));
        let mut out = Vec::with_capacity(terms.len());
        let mut i = 0;
        while i < terms.len() {
            let mut count = 1;
            while i + count < terms.len() && terms[i + count] == terms[i] {
                count += 1;
            }
            if count % 2 == 1 {
                out.push(terms[i]);
            }
            i += count;
        }
        Self { terms: out }
    }

    #[must_use]
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    #[must_use]
    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0] == Monomial::one()
    }

    #[must_use]
    pub fn terms(&self) -> &[Monomial] {
        &self.terms
    }

    #[must_use]
    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Leading monomial in the fixed term order, or `None` for the zero poly.
    #[must_use]
    pub fn leading_monomial(&self) -> Option<Monomial> {
        self.terms.first().copied()
    }

    /// The polynomial with its leading term removed.
    #[must_use]
    pub(crate) fn drop_leading(&self) -> Self {
        Self {
            terms: self.terms.get(1..).unwrap_or_default().to_vec(),
        }
    }

    /// The coefficient of `m`: 1 iff `m` appears.
    #[must_use]
    pub fn coefficient(&self, m: Monomial) -> bool {
        self.terms.binary_search_by(|t| m.cmp(t)).is_ok()
    }

    /// The common bidegree of all terms, when the polynomial is nonzero and
    /// bihomogeneous; `None` otherwise.
    #[must_use]
    pub fn bidegree(&self) -> Option<BiDegree> {
        let first = self.terms.first()?.bidegree();
        self.terms[1..]
            .iter()
            .all(|t| t.bidegree() == first)
            .then_some(first)
    }

    /// True for the zero polynomial or when every term has bidegree `d`.
    #[must_use]
    pub fn is_bihomogeneous_of(&self, d: BiDegree) -> bool {
        self.terms.iter().all(|t| t.bidegree() == d)
    }

    /// Sum over GF(2): symmetric difference of the term sets.
    #[must_use]
    pub fn add(&self, other: &Self) -> Self {
        let (a, b) = (&self.terms, &other.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
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
        Self { terms: out }
    }

    #[must_use]
    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut products = Vec::with_capacity(self.terms.len() * other.terms.len());
        for &s in &self.terms {
            for &t in &other.terms {
                products.push(s.mul(t));
            }
        }
        Self::from_terms(products)
    }

    /// Product with a single monomial (order-preserving shift).
    #[must_use]
    pub fn mul_monomial(&self, m: Monomial) -> Self {
        Self {
            terms: self.terms.iter().map(|t| t.mul(m)).collect(),
        }
    }

    /// Substitutes 1 for the given chart variables. Passing `None` on a side
    /// leaves that side homogeneous.
    #[must_use]
    pub fn dehomogenize(&self, left: Option<Var>, right: Option<Var>) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|t| {
                let mut e = t.exponents();
                if let Some(v) = left {
                    e[v as usize] = 0;
                }
                if let Some(v) = right {
                    e[v as usize] = 0;
                }
                Monomial::from_exponents(e)
            })
            .collect();
        Self::from_terms(terms)
    }

    /// Formal partial derivative; in characteristic 2 only odd exponents survive.
    #[must_use]
    pub fn derivative(&self, v: Var) -> Self {
        let terms = self
            .terms
            .iter()
            .filter(|t| t.exponent(v) % 2 == 1)
            .map(|t| {
                let mut e = t.exponents();
                e[v as usize] -= 1;
                Monomial::from_exponents(e)
            })
            .collect();
        Self::from_terms(terms)
    }

    /// The canonical text form of each term, leading term first.
    #[must_use]
    pub fn to_term_strings(&self) -> Vec<String> {
        self.terms.iter().map(|t| t.to_string()).collect()
    }

    /// Parses the text format: terms over a..z joined by `+`, factors joined
    /// by `*`, exponents written `^k`. Multiplication must be explicit.
    ///
    /// # Errors
    /// Returns a [`ParseError`] with the byte position of the offending token.
    pub fn parse(text: &str) -> Result<Self, ParseError> {
        Parser::new(text).parse()
    }
}

/// The fixed divisor equation f = a*x + b*y + c*z cutting the jumping divisor.
#[must_use]
pub fn divisor_form() -> BiPoly {
    BiPoly::from_terms(vec![
        Monomial::var(Var::A).mul(Monomial::var(Var::X)),
        Monomial::var(Var::B).mul(Monomial::var(Var::Y)),
        Monomial::var(Var::C).mul(Monomial::var(Var::Z)),
    ])
}

/// All monomials of bidegree `d`, in descending term order. Empty when either
/// component is negative; the count is C(dL+2,2) * C(dh+2,2) otherwise.
#[must_use]
pub fn graded_basis(d: BiDegree) -> Vec<Monomial> {
    if d.d_l < 0 || d.d_h < 0 {
        return Vec::new();
    }
    let (dl, dh) = (d.d_l as u8, d.d_h as u8);
    let mut out = Vec::new();
    for ea in 0..=dl {
        for eb in 0..=(dl - ea) {
            let ec = dl - ea - eb;
            for ex in 0..=dh {
                for ey in 0..=(dh - ex) {
                    let ez = dh - ex - ey;
                    out.push(Monomial::from_exponents([ea, eb, ec, ex, ey, ez]));
                }
            }
        }
    }
    out.sort_unstable_by(|p, q| q.cmp(p));
    out
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, t) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, "+")?;
            }
            write!(f, "{t}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// A malformed polynomial expression.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("parse error at byte {pos}: {msg}")]
pub struct ParseError {
    pub pos: usize,
    pub msg: String,
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> Self {
        Self {
            bytes: text.as_bytes(),
            pos: 0,
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn error(&self, msg: impl Into<String>) -> ParseError {
        ParseError {
            pos: self.pos,
            msg: msg.into(),
        }
    }

    fn number(&mut self) -> Result<u64, ParseError> {
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.error("expected a number"));
        }
        std::str::from_utf8(&self.bytes[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|_| self.error("number out of range"))
    }

    /// factor := var ('^' num)? | num
    fn factor(&mut self) -> Result<(Monomial, bool), ParseError> {
        match self.peek() {
            Some(ch) if ch.is_ascii_digit() => {
                let n = self.number()?;
                Ok((Monomial::one(), n % 2 == 1))
            }
            Some(ch) => {
                let Some(v) = Var::from_symbol(ch as char) else {
                    return Err(self.error(format!("unexpected character '{}'", ch as char)));
                };
                self.pos += 1;
                let mut exp = 1u64;
                if self.peek() == Some(b'^') {
                    self.pos += 1;
                    self.skip_ws();
                    exp = self.number()?;
                    if exp > 60 {
                        return Err(self.error("exponent too large"));
                    }
                }
                let mut e = [0u8; 6];
                e[v as usize] = exp as u8;
                Ok((Monomial::from_exponents(e), true))
            }
            None => Err(self.error("expected a factor")),
        }
    }

    /// term := factor ('*' factor)*
    fn term(&mut self) -> Result<(Monomial, bool), ParseError> {
        let (mut m, mut coeff) = self.factor()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    let (m2, c2) = self.factor()?;
                    m = m.mul(m2);
                    coeff &= c2;
                }
                Some(b'+') | None => return Ok((m, coeff)),
                Some(_) => return Err(self.error("expected '*', '+', or end of input")),
            }
        }
    }

    fn parse(&mut self) -> Result<BiPoly, ParseError> {
        if self.peek().is_none() {
            return Err(self.error("empty input"));
        }
        let mut terms = Vec::new();
        loop {
            let (m, coeff) = self.term()?;
            if coeff {
                terms.push(m);
            }
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                }
                None => break,
                Some(ch) => {
                    return Err(self.error(format!("unexpected character '{}'", ch as char)));
                }
            }
        }
        Ok(BiPoly::from_terms(terms))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(s: &str) -> BiPoly {
        BiPoly::parse(s).unwrap()
    }

    #[test]
    fn parse_divisor_form() {
        assert_eq!(p("a*x+b*y+c*z"), divisor_form());
    }

    #[test]
    fn parse_cancels_mod_2() {
        assert!(p("a + a").is_zero());
        assert_eq!(p("a^2*b + a^2*b + c^3").to_string(), "c^3");
    }

    #[test]
    fn parse_rejects_implicit_multiplication() {
        assert!(BiPoly::parse("a2b").is_err());
        assert!(BiPoly::parse("a b").is_err());
        assert!(BiPoly::parse("a^2b").is_err());
    }

    #[test]
    fn parse_reports_position() {
        let err = BiPoly::parse("a*x+q").unwrap_err();
        assert_eq!(err.pos, 4);
    }

    #[test]
    fn parse_constants() {
        assert!(p("0").is_zero());
        assert!(p("1").is_one());
        assert!(p("2").is_zero());
        assert_eq!(p("1*a"), BiPoly::var(Var::A));
    }

    #[test]
    fn frobenius_square() {
        let ab = p("a+b");
        assert_eq!(ab.mul(&ab), p("a^2+b^2"));
    }

    #[test]
    fn monad_composite_identity() {
        // f*f + a^2x^2 + b^2y^2 + c^2z^2 = 0 in characteristic 2.
        let f = divisor_form();
        let sum = f.mul(&f).add(&p("a^2*x^2+b^2*y^2+c^2*z^2"));
        assert!(sum.is_zero());
    }

    #[test]
    fn one_is_identity() {
        let q = p("a^2*b+c*x*y");
        assert_eq!(BiPoly::one().mul(&q), q);
    }

    #[test]
    fn coefficient_reads() {
        let d_l = p("a^2*b+b^3+a^2*c+a*b*c+b^2*c+a*c^2+c^3");
        let abc = Monomial::from_exponents([1, 1, 1, 0, 0, 0]);
        assert!(d_l.coefficient(abc));
        let d_h = p("y^3+x^2*z+x*y*z+x*z^2+z^3");
        let xyz = Monomial::from_exponents([0, 0, 0, 1, 1, 1]);
        assert!(d_h.coefficient(xyz));
        assert!(!p("a^3+b^3+c^3").coefficient(abc));
    }

    #[test]
    fn graded_basis_counts() {
        assert_eq!(graded_basis(BiDegree::new(1, 1)).len(), 9);
        assert_eq!(graded_basis(BiDegree::new(3, 0)).len(), 10);
        assert!(graded_basis(BiDegree::new(-1, 2)).is_empty());
        assert_eq!(graded_basis(BiDegree::new(4, 3)).len(), 15 * 10);
    }

    #[test]
    fn graded_basis_is_descending() {
        let basis = graded_basis(BiDegree::new(2, 1));
        assert!(basis.windows(2).all(|w| w[0] > w[1]));
    }

    #[test]
    fn dehomogenize_chart() {
        let f = divisor_form();
        assert_eq!(f.dehomogenize(Some(Var::A), Some(Var::X)), p("1+b*y+c*z"));
        assert_eq!(p("a^2").dehomogenize(Some(Var::A), None), BiPoly::one());
        assert_eq!(p("x^2*y").dehomogenize(None, Some(Var::Z)), p("x^2*y"));
    }

    #[test]
    fn derivative_char_2() {
        assert_eq!(p("a^2*b").derivative(Var::A), BiPoly::zero());
        assert_eq!(p("a^2*b").derivative(Var::B), p("a^2"));
        assert_eq!(divisor_form().derivative(Var::A), p("x"));
    }

    #[test]
    fn canonical_print_order_matches_tables() {
        // Degrevlex a>b>c>x>y>z reproduces the printed ordering of the
        // half-fiber cubics.
        let d_l = p("c^3+a*c^2+b^2*c+a*b*c+a^2*c+b^3+a^2*b");
        assert_eq!(d_l.to_string(), "a^2*b+b^3+a^2*c+a*b*c+b^2*c+a*c^2+c^3");
        let d_h = p("z^3+x*z^2+x*y*z+x^2*z+y^3");
        assert_eq!(d_h.to_string(), "y^3+x^2*z+x*y*z+x*z^2+z^3");
    }

    #[test]
    fn monomial_order_basics() {
        let a = Monomial::var(Var::A);
        let b = Monomial::var(Var::B);
        let z = Monomial::var(Var::Z);
        assert!(a > b);
        assert!(b > z);
        assert!(a.mul(a) > a);
    }

    #[test]
    fn divisibility_swar() {
        let m = Monomial::from_exponents([2, 1, 0, 3, 0, 0]);
        let n = Monomial::from_exponents([1, 1, 0, 0, 0, 0]);
        assert!(n.divides(m));
        assert!(!m.divides(n));
        assert_eq!(m.div(n), Monomial::from_exponents([1, 0, 0, 3, 0, 0]));
        assert_eq!(m.lcm(n), m);
    }

    fn arb_poly() -> impl Strategy<Value = BiPoly> {
        prop::collection::vec(prop::array::uniform6(0u8..3), 0..6)
            .prop_map(|v| BiPoly::from_terms(v.into_iter().map(Monomial::from_exponents).collect()))
    }

    proptest! {
        #[test]
        fn parse_format_round_trip(q in arb_poly()) {
            prop_assert_eq!(BiPoly::parse(&q.to_string()).unwrap(), q);
        }

        #[test]
        fn frobenius_linearity(q in arb_poly(), r in arb_poly()) {
            let s = q.add(&r);
            prop_assert_eq!(s.mul(&s), q.mul(&q).add(&r.mul(&r)));
        }

        #[test]
        fn mul_adds_bidegrees(da in 0i32..3, dha in 0i32..3, db in 0i32..3, dhb in 0i32..3, i in any::<u64>(), j in any::<u64>()) {
            let pick = |d: BiDegree, s: u64| {
                let basis = graded_basis(d);
                let mut terms = Vec::new();
                for (k, &m) in basis.iter().enumerate() {
                    if (s >> (k % 64)) & 1 == 1 {
                        terms.push(m);
                    }
                }
                if terms.is_empty() { terms.push(basis[0]); }
                BiPoly::from_terms(terms)
            };
            let qa = pick(BiDegree::new(da, dha), i);
            let qb = pick(BiDegree::new(db, dhb), j);
            let prod = qa.mul(&qb);
            if !prod.is_zero() {
                prop_assert_eq!(prod.bidegree(), Some(BiDegree::new(da + db, dha + dhb)));
            }
        }

        #[test]
        fn add_is_involution(q in arb_poly(), r in arb_poly()) {
            prop_assert_eq!(q.add(&r).add(&r), q);
        }
    }
}
