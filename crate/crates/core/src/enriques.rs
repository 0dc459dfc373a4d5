//! The surface pipeline: section parameters -> zero-scheme ideals (two
//! independent constructions), restriction to the jumping divisor,
//! F-singular / supersingular classification, chart-wise smoothness,
//! half-fibers, cycle classes, and the degenerate (minimal and reducible)
//! zero sets.
//!
//! A section of E(m,n) is parametrized by a seven-entry row vector
//! w = (f1, f2, g1, f3, g2, g3, h); the homogeneous ideal of its zero scheme
//! is generated by the entries of w * B for the fixed 7x7 polynomial matrix
//! below. All homogeneous ideal comparisons go through `sat_irrelevant`.

use std::sync::OnceLock;

use rand::Rng;
use serde::Serialize;

use crate::bipoly::{divisor_form, graded_basis, BiDegree, BiPoly, Monomial, Var};
use crate::gf2::BitMatrix;
use crate::groebner::{Codim, Ideal, IdealError};
use crate::sheafcoh::{CohError, SectionVec};

/// Errors from the surface pipeline.
#[derive(Debug, thiserror::Error)]
pub enum PipelineError {
    #[error("invalid section parameter: {0}")]
    BadWVector(String),
    #[error(transparent)]
    Ideal(#[from] IdealError),
    #[error(transparent)]
    Coh(#[from] CohError),
    #[error("no nonzero parameter vector reproduces the ideal: not a section zero scheme")]
    NotSectionZeroScheme,
    #[error("classification refused: {0}")]
    ClassifyRefused(String),
    #[error("expected a unique generator of bidegree {0} in the restriction ideal, found {1}")]
    PureGenerator(BiDegree, usize),
    #[error("model verification failed: {0}")]
    CheckFailed(String),
}

// ---------------------------------------------------------------------------
// The matrix B
// ---------------------------------------------------------------------------

/// Entries of the fixed 7x7 matrix B, rows and columns in printed order.
const MATRIX_B_TEXT: [[&str; 7]; 7] = [
    [
        "b^2*y^2+c^2*z^2",
        "a*x*y^2+b*y^3+c*y^2*z",
        "a^2*y^2",
        "0",
        "a*x*z^2+b*y*z^2+c*z^3",
        "a^2*z^2",
        "a*b*y^2*z+a*c*y*z^2",
    ],
    [
        "b^2*x^2",
        "a*x^3+b*x^2*y+c*x^2*z",
        "a^2*x^2+c^2*z^2",
        "a*x*z^2+b*y*z^2+c*z^3",
        "0",
        "b^2*z^2",
        "a*b*x^2*z+b*c*x*z^2",
    ],
    [
        "a*b^2*x+b^3*y+b^2*c*z",
        "a^2*x^2+b^2*y^2",
        "a^3*x+a^2*b*y+a^2*c*z",
        "a^2*z^2",
        "b^2*z^2",
        "0",
        "a^2*b*x*z+a*b^2*y*z",
    ],
    [
        "c^2*x^2",
        "0",
        "c^2*y^2",
        "a*x*y^2+b*y^3+c*y^2*z",
        "a*x^3+b*x^2*y+c*x^2*z",
        "a^2*x^2+b^2*y^2",
        "a*c*x^2*y+b*c*x*y^2",
    ],
    [
        "0",
        "c^2*x^2",
        "a*c^2*x+b*c^2*y+c^3*z",
        "b^2*y^2+c^2*z^2",
        "b^2*x^2",
        "a*b^2*x+b^3*y+b^2*c*z",
        "b^2*c*x*y+b*c^2*x*z",
    ],
    [
        "a*c^2*x+b*c^2*y+c^3*z",
        "c^2*y^2",
        "0",
        "a^2*y^2",
        "a^2*x^2+c^2*z^2",
        "a^3*x+a^2*b*y+a^2*c*z",
        "a^2*c*x*y+a*c^2*y*z",
    ],
    [
        "b^2*c*x*y+b*c^2*x*z",
        "a*c*x^2*y+b*c*x*y^2",
        "a^2*c*x*y+a*c^2*y*z",
        "a*b*y^2*z+a*c*y*z^2",
        "a*b*x^2*z+b*c*x*z^2",
        "a^2*b*x*z+a*b^2*y*z",
        "0",
    ],
];

/// Column indices of the three generator bidegree classes, at twist (m,n):
/// `COLS_32` give generators of bidegree (m+3,n+2), `COLS_23` of
/// (m+2,n+3), and column 6 the single (m+3,n+3) generator.
const COLS_32: [usize; 3] = [0, 2, 5];
const COLS_23: [usize; 3] = [1, 3, 4];

fn column_degree(col: usize, m: i32, n: i32) -> BiDegree {
    if COLS_32.contains(&col) {
        BiDegree::new(m + 3, n + 2)
    } else if COLS_23.contains(&col) {
        BiDegree::new(m + 2, n + 3)
    } else {
        BiDegree::new(m + 3, n + 3)
    }
}

/// The seven slot bidegrees of w at twist (m,n), in positional order
/// (f1, f2, g1, f3, g2, g3, h). The order is positional, not sorted by
/// bidegree.
#[must_use]
pub fn w_slot_degrees(m: i32, n: i32) -> [BiDegree; 7] {
    [
        BiDegree::new(m + 1, n),
        BiDegree::new(m + 1, n),
        BiDegree::new(m, n + 1),
        BiDegree::new(m + 1, n),
        BiDegree::new(m, n + 1),
        BiDegree::new(m, n + 1),
        BiDegree::new(m, n),
    ]
}

static MATRIX_B: OnceLock<[[BiPoly; 7]; 7]> = OnceLock::new();

/// The fixed matrix B, parsed once; the bidegree audit guards against
/// transcription slips and must pass before any pipeline run.
///
/// # Panics
/// Panics if any entry fails the audit.
#[must_use]
pub fn matrix_b() -> &'static [[BiPoly; 7]; 7] {
    MATRIX_B.get_or_init(|| {
        let slot = w_slot_degrees(0, 0);
        let parsed: [[BiPoly; 7]; 7] = std::array::from_fn(|r| {
            std::array::from_fn(|c| {
                BiPoly::parse(MATRIX_B_TEXT[r][c]).expect("matrix entry parses")
            })
        });
        for (r, row) in parsed.iter().enumerate() {
            for (c, entry) in row.iter().enumerate() {
                let expected = column_degree(c, 0, 0) - slot[r];
                assert!(
                    entry.is_bihomogeneous_of(expected),
                    "matrix entry ({r},{c}) fails the bidegree audit: {entry}"
                );
            }
        }
        parsed
    })
}

// ---------------------------------------------------------------------------
// WVector
// ---------------------------------------------------------------------------

/// The seven-polynomial section parameter of a twist E(m,n).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WVector {
    twist: (i32, i32),
    entries: [BiPoly; 7],
}

impl WVector {
    /// Validates slot bidegrees (zero entries are allowed in any slot) and
    /// rejects the all-zero vector.
    ///
    /// # Errors
    /// Reports the offending slot on bidegree mismatch.
    pub fn new(twist: (i32, i32), entries: [BiPoly; 7]) -> Result<Self, PipelineError> {
        let degrees = w_slot_degrees(twist.0, twist.1);
        for (k, e) in entries.iter().enumerate() {
            if !e.is_bihomogeneous_of(degrees[k]) {
                return Err(PipelineError::BadWVector(format!(
                    "slot {k} must be bihomogeneous of bidegree {} (got {e})",
                    degrees[k]
                )));
            }
        }
        if entries.iter().all(BiPoly::is_zero) {
            return Err(PipelineError::BadWVector("all seven entries are zero".into()));
        }
        Ok(Self { twist, entries })
    }

    /// Parses seven comma-separated polynomials.
    ///
    /// # Errors
    /// Propagates parse failures and slot validation.
    pub fn parse_csv(text: &str, twist: (i32, i32)) -> Result<Self, PipelineError> {
        let parts: Vec<&str> = text.split(',').collect();
        if parts.len() != 7 {
            return Err(PipelineError::BadWVector(format!(
                "expected 7 comma-separated entries, got {}",
                parts.len()
            )));
        }
        let mut entries: [BiPoly; 7] = std::array::from_fn(|_| BiPoly::zero());
        for (k, part) in parts.iter().enumerate() {
            entries[k] = BiPoly::parse(part)
                .map_err(|e| PipelineError::BadWVector(format!("entry {k}: {e}")))?;
        }
        Self::new(twist, entries)
    }

    #[must_use]
    pub fn twist(&self) -> (i32, i32) {
        self.twist
    }

    #[must_use]
    pub fn entries(&self) -> &[BiPoly; 7] {
        &self.entries
    }

    /// The scalar-slot entry h (position 7).
    #[must_use]
    pub fn h_entry(&self) -> &BiPoly {
        &self.entries[6]
    }

    #[must_use]
    pub fn to_strings(&self) -> Vec<String> {
        self.entries.iter().map(|e| e.to_string()).collect()
    }

    /// A pseudorandom parameter vector at twist (m,n); entries are uniform
    /// over each slot's graded piece, resampled if everything came out zero.
    pub fn sample<R: Rng>(m: i32, n: i32, rng: &mut R) -> Self {
        loop {
            let mut entries: [BiPoly; 7] = std::array::from_fn(|_| BiPoly::zero());
            for (k, d) in w_slot_degrees(m, n).iter().enumerate() {
                let terms = graded_basis(*d)
                    .into_iter()
                    .filter(|_| rng.gen::<bool>())
                    .collect();
                entries[k] = BiPoly::from_terms(terms);
            }
            if let Ok(w) = Self::new((m, n), entries) {
                return w;
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Ideal constructions
// ---------------------------------------------------------------------------

/// The seven generators w * B of the homogeneous ideal of the zero scheme
/// of the section with parameter w.
///
/// # Errors
/// The parameter vector is revalidated.
pub fn ideal_from_w(w: &WVector) -> Result<Ideal, PipelineError> {
    let b = matrix_b();
    let (m, n) = w.twist();
    let mut gens = Vec::with_capacity(7);
    for col in 0..7 {
        let mut entry = BiPoly::zero();
        for row in 0..7 {
            entry = entry.add(&w.entries()[row].mul(&b[row][col]));
        }
        debug_assert!(entry.is_bihomogeneous_of(column_degree(col, m, n)));
        gens.push(entry);
    }
    if gens.iter().all(BiPoly::is_zero) {
        return Err(PipelineError::BadWVector(
            "parameter vector generates the zero ideal".into(),
        ));
    }
    Ok(Ideal::new(gens))
}

/// The six 2x2 minors of the 4x2 matrix [phi2 | v]: they cut the zero
/// scheme of the section lifted by v, because the monad's column map is
/// nowhere zero. Homogeneous comparisons must go through `sat_irrelevant`.
///
/// # Errors
/// Rejects the zero lift.
pub fn ideal_from_section(v: &SectionVec) -> Result<Ideal, PipelineError> {
    if v.components.iter().all(BiPoly::is_zero) {
        return Err(PipelineError::BadWVector("zero section lift".into()));
    }
    let sq = |var: Var| {
        let p = BiPoly::var(var);
        p.mul(&p)
    };
    let phi2 = [sq(Var::X), sq(Var::Y), sq(Var::Z), divisor_form()];
    let mut gens = Vec::with_capacity(6);
    for i in 0..4 {
        for j in i + 1..4 {
            let minor = phi2[i]
                .mul(&v.components[j])
                .add(&phi2[j].mul(&v.components[i]));
            gens.push(minor);
        }
    }
    Ok(Ideal::new(gens))
}

/// Recovers a parameter vector from a saturated section zero-scheme ideal:
/// membership of every entry of w * B in the ideal is GF(2)-linear in the
/// coefficients of w, so the candidates form a kernel.
///
/// # Errors
/// Fails when no nonzero solution reproduces the ideal.
pub fn match_w(ideal: &Ideal, m: i32, n: i32) -> Result<WVector, PipelineError> {
    let b = matrix_b();
    let slot_degrees = w_slot_degrees(m, n);
    let bases: Vec<Vec<Monomial>> = slot_degrees.iter().map(|&d| graded_basis(d)).collect();
    let unknowns: usize = bases.iter().map(Vec::len).sum();
    if unknowns == 0 {
        return Err(PipelineError::NotSectionZeroScheme);
    }

    // Rows are (column of B, standard monomial of the normal form).
    let mut row_of: std::collections::HashMap<(usize, Monomial), usize> =
        std::collections::HashMap::new();
    let mut triplets: Vec<(usize, usize)> = Vec::new();
    let mut col = 0;
    for (slot, basis) in bases.iter().enumerate() {
        for &mono in basis {
            for (j, b_entry) in b[slot].iter().enumerate() {
                let nf = ideal.normal_form(&b_entry.mul_monomial(mono));
                for &t in nf.terms() {
                    let next = row_of.len();
                    let row = *row_of.entry((j, t)).or_insert(next);
                    triplets.push((row, col));
                }
            }
            col += 1;
        }
    }
    let mut mat = BitMatrix::zeros(row_of.len(), unknowns);
    for (r, c) in triplets {
        mat.set(r, c, true);
    }

    let target = ideal;
    for candidate in mat.kernel_basis() {
        let mut entries: [BiPoly; 7] = std::array::from_fn(|_| BiPoly::zero());
        let mut offset = 0;
        for (slot, basis) in bases.iter().enumerate() {
            let terms = basis
                .iter()
                .enumerate()
                .filter_map(|(k, &mono)| candidate[offset + k].then_some(mono))
                .collect();
            entries[slot] = BiPoly::from_terms(terms);
            offset += basis.len();
        }
        let Ok(w) = WVector::new((m, n), entries) else {
            continue;
        };
        let reconstructed = ideal_from_w(&w)?.sat_irrelevant();
        if reconstructed.ideal_equal(target) {
            return Ok(w);
        }
    }
    Err(PipelineError::NotSectionZeroScheme)
}

/// Restriction of the section to the jumping divisor, as the pair (p, q)
/// of polynomials of bidegrees (m+3,n) and (m,n+3):
/// p = f1 a^2 + f2 b^2 + f3 c^2 + h abc and
/// q = g1 z^2 + g2 x^2 + g3 y^2 + h xyz.
#[must_use]
pub fn restrict_to_a(w: &WVector) -> (BiPoly, BiPoly) {
    let e = w.entries();
    let sq = |v: Var| {
        let p = BiPoly::var(v);
        p.mul(&p)
    };
    let abc = BiPoly::monomial(Monomial::from_exponents([1, 1, 1, 0, 0, 0]));
    let xyz = BiPoly::monomial(Monomial::from_exponents([0, 0, 0, 1, 1, 1]));
    let p = e[0]
        .mul(&sq(Var::A))
        .add(&e[1].mul(&sq(Var::B)))
        .add(&e[3].mul(&sq(Var::C)))
        .add(&e[6].mul(&abc));
    let q = e[2]
        .mul(&sq(Var::Z))
        .add(&e[4].mul(&sq(Var::X)))
        .add(&e[5].mul(&sq(Var::Y)))
        .add(&e[6].mul(&xyz));
    (p, q)
}

// ---------------------------------------------------------------------------
// Classification and smoothness
// ---------------------------------------------------------------------------

/// Frobenius behaviour on H^1 of the zero scheme.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Classification {
    FSingular,
    Supersingular,
}

impl Classification {
    #[must_use]
    pub fn as_str(self) -> &'static str {
        match self {
            Classification::FSingular => "F-singular",
            Classification::Supersingular => "supersingular",
        }
    }
}

/// Classifies a twist-(0,0) parameter vector with a smooth codimension-2
/// zero scheme: supersingular exactly when the scalar slot h vanishes,
/// equivalently when the abc-coefficient of p and the xyz-coefficient of q
/// vanish.
///
/// # Errors
/// Refuses wrong twists, wrong codimension, and singular zero schemes (the
/// criterion is only stated for nonsingular ones).
pub fn classify(w: &WVector) -> Result<Classification, PipelineError> {
    if w.twist() != (0, 0) {
        return Err(PipelineError::ClassifyRefused(format!(
            "classification is defined at twist (0,0), got {:?}",
            w.twist()
        )));
    }
    let ideal = ideal_from_w(w)?.sat_irrelevant();
    if ideal.codim() != Codim::Finite(2) {
        return Err(PipelineError::ClassifyRefused(
            "zero scheme does not have codimension 2".into(),
        ));
    }
    if !smooth_check(&ideal)? {
        return Err(PipelineError::ClassifyRefused(
            "zero scheme is singular; the criterion presupposes smoothness".into(),
        ));
    }
    Ok(classification_of(w))
}

/// The classification read straight off the parameter vector; the caller is
/// responsible for having established smoothness.
#[must_use]
pub fn classification_of(w: &WVector) -> Classification {
    if w.h_entry().is_zero() {
        Classification::Supersingular
    } else {
        Classification::FSingular
    }
}

/// Chart-wise Jacobian smoothness test: on each of the nine affine charts,
/// the dehomogenized ideal plus the 2x2 minors of its Jacobian must be the
/// unit ideal. Equivalent over the algebraic closure by the
/// Nullstellensatz, since Gröbner bases are insensitive to field extension.
///
/// # Errors
/// The ideal must have codimension 2.
pub fn smooth_check(ideal: &Ideal) -> Result<bool, PipelineError> {
    if ideal.codim() != Codim::Finite(2) {
        return Err(IdealError::WrongCodim {
            expected: 2,
            got: ideal.codim(),
        }
        .into());
    }
    for left in Var::LEFT {
        for right in Var::RIGHT {
            if !chart_is_smooth(ideal.generators(), left, right) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn chart_is_smooth(gens: &[BiPoly], left: Var, right: Var) -> bool {
    let chart_gens: Vec<BiPoly> = gens
        .iter()
        .map(|g| g.dehomogenize(Some(left), Some(right)))
        .filter(|g| !g.is_zero())
        .collect();
    if chart_gens.iter().any(BiPoly::is_one) {
        // The surface misses this chart entirely.
        return true;
    }
    let vars: Vec<Var> = Var::ALL
        .into_iter()
        .filter(|&v| v != left && v != right)
        .collect();
    let jac: Vec<Vec<BiPoly>> = chart_gens
        .iter()
        .map(|g| vars.iter().map(|&v| g.derivative(v)).collect())
        .collect();
    let mut all = chart_gens.clone();
    for g1 in 0..jac.len() {
        for g2 in g1 + 1..jac.len() {
            for v1 in 0..vars.len() {
                for v2 in v1 + 1..vars.len() {
                    let minor = jac[g1][v1]
                        .mul(&jac[g2][v2])
                        .add(&jac[g1][v2].mul(&jac[g2][v1]));
                    if !minor.is_zero() {
                        all.push(minor);
                    }
                }
            }
        }
    }
    Ideal::new(all).is_unit()
}

// ---------------------------------------------------------------------------
// Half-fibers
// ---------------------------------------------------------------------------

/// The two cubics cutting the intersection with the jumping divisor, and the
/// residual half-fiber curves.
pub struct HalfFibers {
    pub d_l: BiPoly,
    pub d_h: BiPoly,
    pub c_l: Ideal,
    pub c_h: Ideal,
}

/// For a smooth twist-(0,0) zero scheme ideal: the intersection with the
/// jumping divisor is the complete intersection of unique cubics D_L, D_h
/// of bidegrees (3,0) and (0,3); the half-fibers are the residuals
/// `sat(D + I) : AS`.
///
/// # Errors
/// A missing (or non-unique) pure-bidegree generator signals a
/// non-conforming input and is reported rather than tie-broken.
pub fn half_fibers(ideal: &Ideal) -> Result<HalfFibers, PipelineError> {
    let f_ideal = Ideal::new(vec![divisor_form()]);
    let a_s = ideal.sum(&f_ideal).sat_irrelevant();
    let pure = |d: BiDegree| -> Result<BiPoly, PipelineError> {
        let piece = a_s.degree_piece(d);
        if piece.len() != 1 {
            return Err(PipelineError::PureGenerator(d, piece.len()));
        }
        Ok(piece.into_iter().next().unwrap())
    };
    let d_l = pure(BiDegree::new(3, 0))?;
    let d_h = pure(BiDegree::new(0, 3))?;
    let residual = |d: &BiPoly| -> Result<Ideal, PipelineError> {
        Ok(Ideal::new(vec![d.clone()])
            .sum(ideal)
            .sat_irrelevant()
            .colon(&a_s)?)
    };
    Ok(HalfFibers {
        c_l: residual(&d_l)?,
        c_h: residual(&d_h)?,
        d_l,
        d_h,
    })
}

// ---------------------------------------------------------------------------
// Reports
// ---------------------------------------------------------------------------

/// Classification output for one section parameter, serialized as the
/// machine-readable surface report.
#[derive(Debug, Serialize)]
pub struct SurfaceReport {
    pub w: Vec<String>,
    pub twist: (i32, i32),
    /// None encodes the unit ideal (+infinity).
    pub codim: Option<usize>,
    pub smooth: Option<bool>,
    pub cycle_class: Option<[i64; 3]>,
    pub classification: Option<String>,
    pub d_l: Option<String>,
    pub d_h: Option<String>,
    pub half_fibers: Option<HalfFiberReport>,
    pub notes: Vec<String>,
}

#[derive(Debug, Serialize)]
pub struct HalfFiberReport {
    /// Reduced Gröbner generators of the residual curves.
    pub c_l: Vec<String>,
    pub c_h: Vec<String>,
    /// Degrees of each curve against (L, h).
    pub c_l_degrees: (i64, i64),
    pub c_h_degrees: (i64, i64),
}

/// Runs the full pipeline on one parameter vector.
///
/// # Errors
/// Construction errors propagate; downstream anomalies are reported in the
/// `notes` field instead of failing.
pub fn surface_report(w: &WVector) -> Result<SurfaceReport, PipelineError> {
    let mut report = SurfaceReport {
        w: w.to_strings(),
        twist: w.twist(),
        codim: None,
        smooth: None,
        cycle_class: None,
        classification: None,
        d_l: None,
        d_h: None,
        half_fibers: None,
        notes: Vec::new(),
    };
    let ideal = ideal_from_w(w)?.sat_irrelevant();
    match ideal.codim() {
        Codim::Infinite => {
            report.notes.push("saturated ideal is the unit ideal".into());
            return Ok(report);
        }
        Codim::Finite(c) => {
            report.codim = Some(c);
            if c != 2 {
                report
                    .notes
                    .push(format!("zero scheme has codimension {c}, not 2"));
                return Ok(report);
            }
        }
    }
    match ideal.multidegree() {
        Ok((alpha, beta, gamma)) => report.cycle_class = Some([alpha, beta, gamma]),
        Err(e) => report.notes.push(format!("cycle class unavailable: {e}")),
    }
    let smooth = smooth_check(&ideal)?;
    report.smooth = Some(smooth);
    if w.twist() == (0, 0) {
        if smooth {
            report.classification = Some(classification_of(w).as_str().to_string());
        } else {
            report
                .notes
                .push("singular zero scheme: classification refused".into());
        }
        match half_fibers(&ideal) {
            Ok(hf) => {
                report.d_l = Some(hf.d_l.to_string());
                report.d_h = Some(hf.d_h.to_string());
                let degrees = |c: &Ideal| c.curve_degrees().ok();
                let (dl_deg, dh_deg) = (degrees(&hf.c_l), degrees(&hf.c_h));
                if let (Some(cl), Some(ch)) = (dl_deg, dh_deg) {
                    report.half_fibers = Some(HalfFiberReport {
                        c_l: hf.c_l.gb().iter().map(|g| g.to_string()).collect(),
                        c_h: hf.c_h.gb().iter().map(|g| g.to_string()).collect(),
                        c_l_degrees: cl,
                        c_h_degrees: ch,
                    });
                } else {
                    report
                        .notes
                        .push("half-fiber curve degrees unavailable".into());
                }
            }
            Err(e) => report.notes.push(format!("half-fibers unavailable: {e}")),
        }
    }
    Ok(report)
}

/// Report for the reducible model w = (f1, f2, 0, f3, 0, 0, 0) with linear
/// first-factor forms: the zero set splits off the component inside the
/// jumping divisor.
#[derive(Debug, Serialize)]
pub struct ReducibleReport {
    pub w: Vec<String>,
    /// Cycle classes of the two components, [Y1] then [Y2].
    pub component_classes: [[i64; 3]; 2],
    pub f_in_second_component: bool,
    pub classification: String,
}

/// Splits the special zero set into its plane component Y1 and the ruled
/// component Y2 inside the jumping divisor, verifying the expected cycle
/// classes (1,2,4) and (3,3,0) and that f vanishes on Y2.
///
/// # Errors
/// Degenerate form choices that collapse the decomposition are reported.
pub fn reducible_model(
    f1: &BiPoly,
    f2: &BiPoly,
    f3: &BiPoly,
) -> Result<ReducibleReport, PipelineError> {
    let lin = BiDegree::new(1, 0);
    for (k, f) in [f1, f2, f3].iter().enumerate() {
        if !f.is_bihomogeneous_of(lin) || f.is_zero() {
            return Err(PipelineError::BadWVector(format!(
                "form {} must be a nonzero (1,0)-form",
                k + 1
            )));
        }
    }
    let entries = [
        f1.clone(),
        f2.clone(),
        BiPoly::zero(),
        f3.clone(),
        BiPoly::zero(),
        BiPoly::zero(),
        BiPoly::zero(),
    ];
    let w = WVector::new((0, 0), entries)?;
    let ideal = ideal_from_w(&w)?.sat_irrelevant();
    let f_ideal = Ideal::new(vec![divisor_form()]);
    let y1 = ideal.saturate(&f_ideal)?;
    let y2 = ideal.colon(&y1)?;
    let c1 = y1.multidegree().map_err(|e| {
        PipelineError::CheckFailed(format!("first component is not a surface: {e}"))
    })?;
    let c2 = y2.multidegree().map_err(|e| {
        PipelineError::CheckFailed(format!("second component is not a surface: {e}"))
    })?;
    if c1 != (1, 2, 4) {
        return Err(PipelineError::CheckFailed(format!(
            "[Y1] = {c1:?}, expected (1,2,4)"
        )));
    }
    if c2 != (3, 3, 0) {
        return Err(PipelineError::CheckFailed(format!(
            "[Y2] = {c2:?}, expected (3,3,0)"
        )));
    }
    let f_in_y2 = y2.member(&divisor_form());
    if !f_in_y2 {
        return Err(PipelineError::CheckFailed(
            "second component does not lie in the jumping divisor".into(),
        ));
    }
    Ok(ReducibleReport {
        w: w.to_strings(),
        component_classes: [
            [c1.0, c1.1, c1.2],
            [c2.0, c2.1, c2.2],
        ],
        f_in_second_component: f_in_y2,
        classification: classification_of(&w).as_str().to_string(),
    })
}

/// Report for a minimal-twist zero scheme.
#[derive(Debug, Serialize)]
pub struct MinimalReport {
    pub w: Vec<String>,
    pub cycle_class: [i64; 3],
    pub smooth: bool,
    /// A polynomial g with g not in I but g^2 in I.
    pub nilpotent_witness: Option<String>,
}

/// The zero scheme of a section of the minimal twist E(-L): always
/// non-reduced, of cycle class (2,2,4), with a nilpotent witness found by
/// searching the linear forms and their mixed products.
///
/// # Errors
/// The three scalars must not all vanish; the expected class and
/// non-smoothness are verified.
pub fn minimal_zeroscheme(c1: u8, c2: u8, c3: u8) -> Result<MinimalReport, PipelineError> {
    let scalar = |v: u8| if v & 1 == 1 { BiPoly::one() } else { BiPoly::zero() };
    let entries = [
        scalar(c1),
        scalar(c2),
        BiPoly::zero(),
        scalar(c3),
        BiPoly::zero(),
        BiPoly::zero(),
        BiPoly::zero(),
    ];
    let w = WVector::new((-1, 0), entries)?;
    let ideal = ideal_from_w(&w)?.sat_irrelevant();
    let class = ideal.multidegree()?;
    if class != (2, 2, 4) {
        return Err(PipelineError::CheckFailed(format!(
            "cycle class {class:?}, expected (2,2,4)"
        )));
    }
    let smooth = smooth_check(&ideal)?;
    if smooth {
        return Err(PipelineError::CheckFailed(
            "minimal zero scheme cannot be smooth".into(),
        ));
    }

    // Candidates: the 7 linear forms on each side and their 49 products.
    let forms = |vars: [Var; 3]| -> Vec<BiPoly> {
        (1u8..8)
            .map(|bits| {
                BiPoly::from_terms(
                    (0..3)
                        .filter(|k| (bits >> k) & 1 == 1)
                        .map(|k| Monomial::var(vars[k]))
                        .collect(),
                )
            })
            .collect()
    };
    let left = forms(Var::LEFT);
    let right = forms(Var::RIGHT);
    let mut candidates: Vec<BiPoly> = Vec::new();
    candidates.extend(left.iter().cloned());
    candidates.extend(right.iter().cloned());
    for u in &left {
        for v in &right {
            candidates.push(u.mul(v));
        }
    }
    let witness = candidates
        .into_iter()
        .find(|g| !ideal.member(g) && ideal.member(&g.mul(g)));
    if witness.is_none() {
        return Err(PipelineError::CheckFailed(
            "no nilpotent witness among the linear-form candidates".into(),
        ));
    }
    Ok(MinimalReport {
        w: w.to_strings(),
        cycle_class: [class.0, class.1, class.2],
        smooth,
        nilpotent_witness: witness.map(|g| g.to_string()),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn p(s: &str) -> BiPoly {
        BiPoly::parse(s).unwrap()
    }

    /// The worked example: w = (b+c, b+c, x+z, a+c, z, y, 1).
    fn example_w() -> WVector {
        WVector::parse_csv("b+c,b+c,x+z,a+c,z,y,1", (0, 0)).unwrap()
    }

    #[test]
    fn matrix_b_passes_degree_audit() {
        let b = matrix_b();
        assert_eq!(b[0][3], BiPoly::zero());
        assert_eq!(b[6][6], BiPoly::zero());
    }

    #[test]
    fn w_validation() {
        assert!(WVector::parse_csv("a,b,x,c,y,z,1", (0, 0)).is_ok());
        // g-slot with a left-variable entry is rejected.
        assert!(WVector::parse_csv("a,b,c,c,y,z,1", (0, 0)).is_err());
        assert!(WVector::parse_csv("0,0,0,0,0,0,0", (0, 0)).is_err());
        assert!(WVector::parse_csv("a,b,x", (0, 0)).is_err());
    }

    #[test]
    fn ideal_from_w_generator_degrees() {
        let w = example_w();
        let ideal = ideal_from_w(&w).unwrap();
        let mut from32 = 0;
        let mut from23 = 0;
        let mut from33 = 0;
        for g in ideal.generators() {
            match g.bidegree() {
                Some(d) if d == BiDegree::new(3, 2) => from32 += 1,
                Some(d) if d == BiDegree::new(2, 3) => from23 += 1,
                Some(d) if d == BiDegree::new(3, 3) => from33 += 1,
                other => panic!("unexpected generator degree {other:?}"),
            }
        }
        assert_eq!((from32, from23, from33), (3, 3, 1));
    }

    #[test]
    fn restriction_formulas_on_example() {
        let (dp, dq) = restrict_to_a(&example_w());
        assert_eq!(dp, p("a^2*b+b^3+a^2*c+a*b*c+b^2*c+a*c^2+c^3"));
        assert_eq!(dq, p("y^3+x^2*z+x*y*z+x*z^2+z^3"));
    }

    #[test]
    fn h_slot_equals_restriction_coefficients() {
        // The abc-coefficient of p and the xyz-coefficient of q both read
        // the scalar slot, on any parameter vector.
        let abc = Monomial::from_exponents([1, 1, 1, 0, 0, 0]);
        let xyz = Monomial::from_exponents([0, 0, 0, 1, 1, 1]);
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for _ in 0..20 {
            let w = WVector::sample(0, 0, &mut rng);
            let (dp, dq) = restrict_to_a(&w);
            let h = !w.h_entry().is_zero();
            assert_eq!(dp.coefficient(abc), h);
            assert_eq!(dq.coefficient(xyz), h);
        }
    }

    #[test]
    fn classification_reads_h_slot() {
        assert_eq!(classification_of(&example_w()), Classification::FSingular);
        let w0 = WVector::parse_csv("b+c,b+c,x+z,a+c,z,y,0", (0, 0)).unwrap();
        assert_eq!(classification_of(&w0), Classification::Supersingular);
    }

    #[test]
    fn classify_rejects_wrong_twist() {
        let w = WVector::parse_csv("1,1,0,1,0,0,0", (-1, 0)).unwrap();
        assert!(matches!(
            classify(&w),
            Err(PipelineError::ClassifyRefused(_))
        ));
    }

    #[test]
    fn minors_route_generator_degrees() {
        let sections = crate::sheafcoh::section_space(0, 0);
        let v = &sections[0];
        let ideal = ideal_from_section(v).unwrap();
        for g in ideal.generators() {
            let d = g.bidegree().unwrap();
            assert!(
                d == BiDegree::new(2, 3) || d == BiDegree::new(3, 2),
                "minor of unexpected bidegree {d}"
            );
        }
    }

    #[test]
    fn sample_is_deterministic() {
        let mut r1 = ChaCha8Rng::seed_from_u64(7);
        let mut r2 = ChaCha8Rng::seed_from_u64(7);
        assert_eq!(WVector::sample(0, 0, &mut r1), WVector::sample(0, 0, &mut r2));
    }
}
