//! Analysis of presentations H = Q[x1..xk]/(u1..uk): ellipticity decision,
//! Hilbert data, formal dimension, Jacobian class, normal forms, pure-model
//! reduction, and adapted splittings.
//!
//! The ellipticity decision is a finite window check: with F the formal
//! dimension and W the largest generator weight, the quotient is finite
//! dimensional iff H^n = 0 for every n in (F, F+W]. Any monomial of degree
//! above F+W has a divisor whose degree lands in that window, so vanishing
//! there propagates upward; and for k homogeneous relations in k variables,
//! finite dimension is equivalent to the relations forming a regular
//! sequence.

use crate::linalg::Echelon;
use crate::ring::{GradedContext, Homogeneity, Monomial, Polynomial, Rational, RingError};
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, RwLock};

/// Errors from presentation validation and quotient analysis.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum QuotientError {
    #[error("expected {expected} relations (one per variable), got {got}")]
    RelationCount { expected: usize, got: usize },
    #[error("relation {index} is zero")]
    ZeroRelation { index: usize },
    #[error("relation {index} is not homogeneous")]
    NotHomogeneous { index: usize },
    #[error("relation {index} has degree {degree}; relations must have positive even degree")]
    BadDegree { index: usize, degree: u32 },
    #[error("inconsistent degree type: the Hilbert series division is not exact or goes negative")]
    InconsistentDegreeType,
    #[error("input must be homogeneous")]
    NotHomogeneousInput,
    #[error("degenerate presentation: {0}")]
    DegeneratePresentation(String),
    #[error("presentation is not positively elliptic")]
    NotElliptic,
    #[error("invalid degree type: {0}")]
    InvalidDegreeType(String),
    #[error(transparent)]
    Ring(#[from] RingError),
}

/// A candidate positively elliptic algebra: a graded context together with
/// one homogeneous relation per variable, sorted by degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    ctx: Arc<GradedContext>,
    relations: Vec<Polynomial>,
}

impl Presentation {
    /// Validate and normalize: the relation count must equal the variable
    /// count, every relation must be nonzero and homogeneous of positive even
    /// degree. Relations are sorted by degree.
    pub fn new(
        ctx: Arc<GradedContext>,
        relations: Vec<Polynomial>,
    ) -> Result<Self, QuotientError> {
        if relations.len() != ctx.nvars() {
            return Err(QuotientError::RelationCount {
                expected: ctx.nvars(),
                got: relations.len(),
            });
        }
        let mut tagged = Vec::with_capacity(relations.len());
        for (index, r) in relations.into_iter().enumerate() {
            match r.homogeneous_degree() {
                Homogeneity::Zero => return Err(QuotientError::ZeroRelation { index }),
                Homogeneity::Inhomogeneous => {
                    return Err(QuotientError::NotHomogeneous { index })
                }
                Homogeneity::Homogeneous(d) => {
                    if d == 0 || d % 2 != 0 {
                        return Err(QuotientError::BadDegree { index, degree: d });
                    }
                    tagged.push((d, r));
                }
            }
        }
        tagged.sort_by_key(|(d, _)| *d);
        Ok(Presentation {
            ctx,
            relations: tagged.into_iter().map(|(_, r)| r).collect(),
        })
    }

    pub fn context(&self) -> &Arc<GradedContext> {
        &self.ctx
    }

    pub fn relations(&self) -> &[Polynomial] {
        &self.relations
    }

    pub fn nvars(&self) -> usize {
        self.ctx.nvars()
    }

    pub fn relation_degree(&self, j: usize) -> u32 {
        self.relations[j]
            .homogeneous_degree()
            .degree()
            .expect("validated at construction")
    }

    pub fn degree_type(&self) -> DegreeType {
        degree_type_of(self)
    }

    /// True when every relation lies in the span of monomials with total
    /// exponent at least two.
    pub fn is_pure(&self) -> bool {
        self.relations
            .iter()
            .all(|r| r.terms().iter().all(|(m, _)| m.total_exponent() >= 2))
    }
}

/// The pair of degree sequences (generator weights; relation degrees).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DegreeType {
    #[serde(rename = "A")]
    gens: Vec<u32>,
    #[serde(rename = "B")]
    rels: Vec<u32>,
}

impl DegreeType {
    pub fn new(gens: Vec<u32>, rels: Vec<u32>) -> Result<Self, QuotientError> {
        if gens.len() != rels.len() {
            return Err(QuotientError::InvalidDegreeType(format!(
                "length mismatch: {} generator degrees vs {} relation degrees",
                gens.len(),
                rels.len()
            )));
        }
        if gens.is_empty() {
            return Err(QuotientError::InvalidDegreeType("empty degree type".into()));
        }
        for &d in gens.iter().chain(rels.iter()) {
            if d < 2 || d % 2 != 0 {
                return Err(QuotientError::InvalidDegreeType(format!(
                    "degrees must be even and at least 2, got {d}"
                )));
            }
        }
        if gens.windows(2).any(|p| p[0] > p[1]) || rels.windows(2).any(|p| p[0] > p[1]) {
            return Err(QuotientError::InvalidDegreeType(
                "degree sequences must be non-decreasing".into(),
            ));
        }
        Ok(DegreeType { gens, rels })
    }

    pub fn generator_degrees(&self) -> &[u32] {
        &self.gens
    }

    pub fn relation_degrees(&self) -> &[u32] {
        &self.rels
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn formal_dimension(&self) -> i64 {
        formal_dimension(self)
    }

    /// Sum of the two largest generator degrees; drives the case analysis.
    pub fn sector(&self) -> u32 {
        let k = self.gens.len();
        if k >= 2 {
            self.gens[k - 2] + self.gens[k - 1]
        } else {
            self.gens[k - 1]
        }
    }

    /// Total dimension of a realizing algebra: the product of B_i/A_i.
    pub fn total_dimension(&self) -> Rational {
        let mut acc = Rational::one();
        for (&a, &b) in self.gens.iter().zip(&self.rels) {
            acc *= Rational::new(b.into(), a.into());
        }
        acc
    }
}

/// The degree type of a presentation: generator weights and relation degrees.
pub fn degree_type_of(p: &Presentation) -> DegreeType {
    let gens = p.ctx.weights().to_vec();
    let rels = (0..p.relations.len())
        .map(|j| p.relation_degree(j))
        .collect();
    DegreeType { gens, rels }
}

/// Formal dimension (socle degree): the sum of relation degree minus
/// generator degree over all positions.
pub fn formal_dimension(dt: &DegreeType) -> i64 {
    dt.gens
        .iter()
        .zip(&dt.rels)
        .map(|(&a, &b)| b as i64 - a as i64)
        .sum()
}

/// Hilbert function values dims[n] for 0 <= n <= bound.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertData {
    pub dims: Vec<u64>,
    pub bound: u32,
}

/// Coefficients of the complete-intersection Hilbert series
/// prod (1 - t^{B_i}) / (1 - t^{A_i}) through the formal dimension.
///
/// Errors when the division is not exact or the quotient has a negative
/// coefficient; no complete intersection with these degrees exists then.
pub fn expected_hilbert(dt: &DegreeType) -> Result<Vec<u64>, QuotientError> {
    let fd = formal_dimension(dt);
    if fd < 0 {
        return Err(QuotientError::InconsistentDegreeType);
    }
    // numerator prod (1 - t^{B_i})
    let top: usize = dt.rels.iter().map(|&b| b as usize).sum();
    let mut num = vec![0i64; top + 1];
    num[0] = 1;
    for &b in &dt.rels {
        let b = b as usize;
        for i in (0..=top).rev() {
            if i >= b {
                num[i] -= num[i - b];
            }
        }
    }
    // divide by each (1 - t^a) via the forward recurrence r[i] = num[i] + r[i-a];
    // exact iff r vanishes on the top window of width a
    let mut cur = num;
    for &a in &dt.gens {
        let a = a as usize;
        let deg = cur.len() - 1;
        if deg < a {
            return Err(QuotientError::InconsistentDegreeType);
        }
        let mut r = vec![0i64; deg + 1];
        for i in 0..=deg {
            r[i] = cur[i] + if i >= a { r[i - a] } else { 0 };
        }
        if r[deg - a + 1..].iter().any(|&x| x != 0) {
            return Err(QuotientError::InconsistentDegreeType);
        }
        r.truncate(deg - a + 1);
        cur = r;
    }
    if cur.len() != fd as usize + 1 || cur.iter().any(|&x| x < 0) {
        return Err(QuotientError::InconsistentDegreeType);
    }
    Ok(cur.into_iter().map(|x| x as u64).collect())
}

/// Row-reduced span of { m * u_j : deg(m) + deg(u_j) = n } inside the degree
/// slice A^n, expressed over the canonical monomial basis.
pub struct IdealSlice {
    degree: u32,
    basis: Vec<Monomial>,
    index: HashMap<Monomial, u32>,
    ech: Echelon,
}

impl IdealSlice {
    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn basis(&self) -> &[Monomial] {
        &self.basis
    }

    pub fn ambient_dim(&self) -> usize {
        self.basis.len()
    }

    pub fn rank(&self) -> usize {
        self.ech.rank()
    }

    pub fn quotient_dim(&self) -> usize {
        self.basis.len() - self.ech.rank()
    }

    fn coordinates_sparse(&self, f: &Polynomial) -> Vec<(u32, Rational)> {
        f.terms()
            .into_iter()
            .map(|(m, c)| (self.index[m], c.clone()))
            .collect()
    }

    /// Residue of a homogeneous polynomial of this degree: the canonical
    /// normal form against the row-reduced slice, as a dense coordinate
    /// vector. The zero vector means membership in the ideal slice.
    pub fn reduce(&self, f: &Polynomial) -> Result<Vec<Rational>, QuotientError> {
        match f.homogeneous_degree() {
            Homogeneity::Zero => Ok(vec![Rational::zero(); self.basis.len()]),
            Homogeneity::Homogeneous(d) if d == self.degree => {
                let sparse = self.coordinates_sparse(f);
                let residue = self.ech.reduce(&sparse);
                let mut out = vec![Rational::zero(); self.basis.len()];
                for (c, v) in residue {
                    out[c as usize] = v;
                }
                Ok(out)
            }
            Homogeneity::Homogeneous(_) => Err(QuotientError::NotHomogeneousInput),
            Homogeneity::Inhomogeneous => Err(QuotientError::NotHomogeneousInput),
        }
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool, QuotientError> {
        Ok(self.reduce(f)?.iter().all(|x| x.is_zero()))
    }

    /// Rebuild a polynomial from a residue coordinate vector.
    pub fn polynomial_from_coordinates(
        &self,
        ctx: &Arc<GradedContext>,
        coords: &[Rational],
    ) -> Polynomial {
        let terms = coords
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (self.basis[i].clone(), c.clone()))
            .collect();
        Polynomial::from_terms(ctx, terms).expect("basis monomials match context")
    }
}

/// Multiply every term of `u` by the monomial `m` and emit sparse
/// coordinates over the canonical basis index of the target degree.
fn shifted_row(
    u_terms: &[(Monomial, Rational)],
    m: &Monomial,
    index: &HashMap<Monomial, u32>,
) -> Vec<(u32, Rational)> {
    u_terms
        .iter()
        .map(|(mu, c)| {
            let shifted = Monomial::from_exponents(
                mu.exponents()
                    .iter()
                    .zip(m.exponents())
                    .map(|(&a, &b)| a + b)
                    .collect(),
            );
            (index[&shifted], c.clone())
        })
        .collect()
}

/// The degree-n slice of the ideal generated by the relations.
pub fn ideal_slice(p: &Presentation, n: u32) -> IdealSlice {
    let ctx = p.context();
    let basis = ctx.monomial_basis(n);
    let index: HashMap<Monomial, u32> = basis
        .iter()
        .enumerate()
        .map(|(i, m)| (m.clone(), i as u32))
        .collect();
    let mut ech = Echelon::new(basis.len());
    for j in 0..p.relations.len() {
        let d = p.relation_degree(j);
        if d > n || (n - d) % 2 != 0 {
            continue;
        }
        let u_terms: Vec<(Monomial, Rational)> = p.relations[j]
            .terms()
            .into_iter()
            .map(|(m, c)| (m.clone(), c.clone()))
            .collect();
        for m in ctx.monomial_basis(n - d) {
            let row = shifted_row(&u_terms, &m, &index);
            ech.insert_rational(&row);
        }
    }
    IdealSlice {
        degree: n,
        basis,
        index,
        ech,
    }
}

/// Quotient dimension of the degree-n slice over F_p; `None` when a
/// coefficient denominator vanishes mod p. Never smaller than the exact
/// quotient dimension, since ranks can only drop modulo a prime.
fn modular_quotient_dim(p: &Presentation, n: u32) -> Option<usize> {
    use crate::linalg::modular::{rational_mod_p, ModEchelon};
    let ctx = p.context();
    let basis = ctx.monomial_basis(n);
    let index: HashMap<Monomial, u32> = basis
        .iter()
        .enumerate()
        .map(|(i, m)| (m.clone(), i as u32))
        .collect();
    let mut ech = ModEchelon::new(basis.len());
    'rels: for j in 0..p.relations.len() {
        let d = p.relation_degree(j);
        if d > n || (n - d) % 2 != 0 {
            continue;
        }
        let u_terms: Vec<(Monomial, u64)> = p.relations[j]
            .terms()
            .into_iter()
            .map(|(m, c)| rational_mod_p(c).map(|v| (m.clone(), v)))
            .collect::<Option<Vec<_>>>()?;
        let mut row = Vec::with_capacity(u_terms.len());
        for m in ctx.monomial_basis(n - d) {
            if ech.is_full_rank() {
                break 'rels;
            }
            row.clear();
            for (mu, v) in &u_terms {
                let shifted = Monomial::from_exponents(
                    mu.exponents()
                        .iter()
                        .zip(m.exponents())
                        .map(|(&a, &b)| a + b)
                        .collect(),
                );
                row.push((index[&shifted], *v));
            }
            ech.insert(&row);
        }
    }
    Some(basis.len() - ech.rank())
}

/// dims[n] = dim A^n - rank of the ideal slice, for each n <= bound.
pub fn hilbert_function(p: &Presentation, bound: u32) -> HilbertData {
    let even: Vec<u32> = (0..=bound).filter(|n| n % 2 == 0).collect();
    let computed: Vec<(u32, u64)> = even
        .par_iter()
        .map(|&n| (n, ideal_slice(p, n).quotient_dim() as u64))
        .collect();
    let mut dims = vec![0u64; bound as usize + 1];
    for (n, d) in computed {
        dims[n as usize] = d;
    }
    HilbertData { dims, bound }
}

/// Same values as [`hilbert_function`], but each slice is assembled from the
/// reduced rows of the previous slices shifted by one variable, plus the
/// relations entering at that degree. Used to cross-check the independent
/// per-degree computation.
pub fn hilbert_function_incremental(p: &Presentation, bound: u32) -> HilbertData {
    let ctx = p.context();
    let mut dims = vec![0u64; bound as usize + 1];
    let mut slices: BTreeMap<u32, IdealSlice> = BTreeMap::new();
    for n in (0..=bound).step_by(2) {
        let basis = ctx.monomial_basis(n);
        let index: HashMap<Monomial, u32> = basis
            .iter()
            .enumerate()
            .map(|(i, m)| (m.clone(), i as u32))
            .collect();
        let mut ech = Echelon::new(basis.len());
        for i in 0..ctx.nvars() {
            let w = ctx.weights()[i];
            if w > n {
                continue;
            }
            let Some(prev) = slices.get(&(n - w)) else {
                continue;
            };
            let xi = Monomial::var(ctx.nvars(), i);
            for row in prev.ech.stored_rows() {
                let shifted: Vec<(u32, Rational)> = row
                    .iter()
                    .map(|(c, v)| {
                        let m = &prev.basis[*c as usize];
                        let shifted = Monomial::from_exponents(
                            m.exponents()
                                .iter()
                                .zip(xi.exponents())
                                .map(|(&a, &b)| a + b)
                                .collect(),
                        );
                        (index[&shifted], v.clone())
                    })
                    .collect();
                ech.insert_rational(&shifted);
            }
        }
        for j in 0..p.relations.len() {
            if p.relation_degree(j) == n {
                let row: Vec<(u32, Rational)> = p.relations[j]
                    .terms()
                    .into_iter()
                    .map(|(m, c)| (index[m], c.clone()))
                    .collect();
                ech.insert_rational(&row);
            }
        }
        dims[n as usize] = (basis.len() - ech.rank()) as u64;
        slices.insert(
            n,
            IdealSlice {
                degree: n,
                basis,
                index,
                ech,
            },
        );
    }
    HilbertData { dims, bound }
}

/// Full outcome of the ellipticity decision.
#[derive(Debug, Clone, Serialize)]
pub struct EllipticityReport {
    pub elliptic: bool,
    pub degree_type: DegreeType,
    pub formal_dimension: i64,
    pub max_weight: u32,
    /// Hilbert data through F + W.
    pub hilbert: HilbertData,
    /// Expected complete-intersection coefficients, when the check ran.
    pub expected: Option<Vec<u64>>,
    /// Whether dims[0..=F] match the expected coefficients (elliptic only).
    pub hilbert_matches: Option<bool>,
}

/// Modular fast path: certify ellipticity and the full Hilbert ladder in one
/// pass. A modular quotient dimension bounds the exact one from above, so
/// zero on the whole window (F, F+W] proves ellipticity over Q; ellipticity
/// in turn forces the Hilbert function to equal the expected coefficients,
/// which the modular dims must then reproduce for the certificate to close.
/// Every number in the returned report is exactly correct. `None` means the
/// certificate did not close (non-elliptic input, inconsistent degree type,
/// or an unlucky prime) and the caller must take the exact path.
pub(crate) fn analyze_certified(p: &Presentation) -> Option<EllipticityReport> {
    let dt = degree_type_of(p);
    let fd = formal_dimension(&dt);
    if fd < 0 {
        return None;
    }
    let f = fd as u32;
    let w = p.context().max_weight();
    let bound = f + w;
    let exp = expected_hilbert(&dt).ok()?;
    let even: Vec<u32> = (0..=bound).filter(|n| n % 2 == 0).collect();
    let pairs: Vec<(u32, usize)> = even
        .par_iter()
        .map(|&n| modular_quotient_dim(p, n).map(|d| (n, d)))
        .collect::<Option<Vec<_>>>()?;
    let mut dims = vec![0u64; bound as usize + 1];
    for (n, d) in pairs {
        dims[n as usize] = d as u64;
    }
    let window_zero = ((f + 1)..=bound).all(|n| dims[n as usize] == 0);
    let matches = (0..=f as usize).all(|n| dims[n] == exp[n]);
    if !(window_zero && matches) {
        return None;
    }
    Some(EllipticityReport {
        elliptic: true,
        degree_type: dt,
        formal_dimension: fd,
        max_weight: w,
        hilbert: HilbertData { dims, bound },
        expected: Some(exp),
        hilbert_matches: Some(true),
    })
}

fn analyze(
    p: &Presentation,
) -> Result<(EllipticityReport, BTreeMap<u32, Arc<IdealSlice>>), QuotientError> {
    if let Some(report) = analyze_certified(p) {
        return Ok((report, BTreeMap::new()));
    }
    let dt = degree_type_of(p);
    let fd = formal_dimension(&dt);
    if fd < 0 {
        return Err(QuotientError::InconsistentDegreeType);
    }
    let f = fd as u32;
    let w = p.context().max_weight();
    let bound = f + w;
    let even: Vec<u32> = (0..=bound).filter(|n| n % 2 == 0).collect();
    let slices: BTreeMap<u32, Arc<IdealSlice>> = even
        .par_iter()
        .map(|&n| (n, Arc::new(ideal_slice(p, n))))
        .collect();
    let mut dims = vec![0u64; bound as usize + 1];
    for (&n, s) in &slices {
        dims[n as usize] = s.quotient_dim() as u64;
    }
    let elliptic = ((f + 1)..=bound).all(|n| dims[n as usize] == 0);
    let (expected, matches) = if elliptic {
        let exp = expected_hilbert(&dt)?;
        let ok = (0..=f as usize).all(|n| dims[n] == exp[n]);
        (Some(exp), Some(ok))
    } else {
        (None, None)
    };
    Ok((
        EllipticityReport {
            elliptic,
            degree_type: dt,
            formal_dimension: fd,
            max_weight: w,
            hilbert: HilbertData { dims, bound },
            expected,
            hilbert_matches: matches,
        },
        slices,
    ))
}

/// Decide positive ellipticity: H^n must vanish for all n in (F, F+W].
pub fn is_positively_elliptic(p: &Presentation) -> Result<EllipticityReport, QuotientError> {
    analyze(p).map(|(report, _)| report)
}

/// A presentation that passed the ellipticity decision, carrying its report
/// and a shared cache of ideal slices.
pub struct Elliptic {
    presentation: Presentation,
    report: EllipticityReport,
    slices: RwLock<BTreeMap<u32, Arc<IdealSlice>>>,
}

impl Elliptic {
    pub fn try_new(presentation: Presentation) -> Result<Self, QuotientError> {
        let (report, slices) = analyze(&presentation)?;
        if !report.elliptic {
            return Err(QuotientError::NotElliptic);
        }
        Ok(Elliptic {
            presentation,
            report,
            slices: RwLock::new(slices),
        })
    }

    pub fn presentation(&self) -> &Presentation {
        &self.presentation
    }

    pub fn context(&self) -> &Arc<GradedContext> {
        self.presentation.context()
    }

    pub fn report(&self) -> &EllipticityReport {
        &self.report
    }

    pub fn degree_type(&self) -> &DegreeType {
        &self.report.degree_type
    }

    pub fn formal_dimension(&self) -> u32 {
        self.report.formal_dimension as u32
    }

    pub fn hilbert(&self) -> &HilbertData {
        &self.report.hilbert
    }

    /// Ideal slice at degree n, computed once and shared.
    pub fn slice(&self, n: u32) -> Arc<IdealSlice> {
        if let Some(s) = self.slices.read().expect("poisoned").get(&n) {
            return Arc::clone(s);
        }
        let s = Arc::new(ideal_slice(&self.presentation, n));
        let mut guard = self.slices.write().expect("poisoned");
        Arc::clone(guard.entry(n).or_insert(s))
    }

    /// Jacobian class with a certified modular refutation of top-degree
    /// membership; falls back to the exact slice when the certificate does
    /// not close.
    pub fn jacobian_class(&self) -> JacobianClass {
        let det = jacobian_determinant(&self.presentation);
        match det.homogeneous_degree() {
            Homogeneity::Zero => JacobianClass {
                determinant: det,
                degree: None,
                nonzero_in_top: false,
            },
            Homogeneity::Homogeneous(d) => {
                let true_qdim = self.report.hilbert.dims[d as usize] as usize;
                let nonzero = match modular_nonmembership(&self.presentation, &det, d, true_qdim)
                {
                    Some(refuted) => refuted,
                    None => !self.slice(d).contains(&det).expect("degree matches"),
                };
                JacobianClass {
                    determinant: det,
                    degree: Some(d),
                    nonzero_in_top: nonzero,
                }
            }
            Homogeneity::Inhomogeneous => unreachable!("jacobian of homogeneous relations"),
        }
    }

    pub(crate) fn from_certified(presentation: Presentation, report: EllipticityReport) -> Self {
        debug_assert!(report.elliptic);
        Elliptic {
            presentation,
            report,
            slices: RwLock::new(BTreeMap::new()),
        }
    }
}

/// Residue of a homogeneous polynomial against the ideal slice of its
/// degree; the zero vector (or an empty one, for the zero polynomial) means
/// membership.
pub fn reduce_mod_ideal(p: &Presentation, f: &Polynomial) -> Result<Vec<Rational>, QuotientError> {
    match f.homogeneous_degree() {
        Homogeneity::Zero => Ok(Vec::new()),
        Homogeneity::Homogeneous(n) => ideal_slice(p, n).reduce(f),
        Homogeneity::Inhomogeneous => Err(QuotientError::NotHomogeneousInput),
    }
}

/// Poincare duality check on the Hilbert data of an elliptic presentation:
/// dims[F] = 1 and dims[i] = dims[F-i].
pub fn poincare_check(e: &Elliptic) -> bool {
    let f = e.formal_dimension() as usize;
    let dims = &e.report.hilbert.dims;
    dims[f] == 1 && (0..=f).all(|i| dims[i] == dims[f - i])
}

/// The Jacobian determinant det(du_i/dx_j) and whether it is nonzero in the
/// top degree slice.
#[derive(Debug, Clone)]
pub struct JacobianClass {
    pub determinant: Polynomial,
    pub degree: Option<u32>,
    pub nonzero_in_top: bool,
}

pub fn jacobian_class(p: &Presentation) -> JacobianClass {
    let det = jacobian_determinant(p);
    match det.homogeneous_degree() {
        Homogeneity::Zero => JacobianClass {
            determinant: det,
            degree: None,
            nonzero_in_top: false,
        },
        Homogeneity::Homogeneous(d) => {
            let nonzero = !ideal_slice(p, d).contains(&det).expect("degree matches");
            JacobianClass {
                determinant: det,
                degree: Some(d),
                nonzero_in_top: nonzero,
            }
        }
        Homogeneity::Inhomogeneous => unreachable!("jacobian of homogeneous relations"),
    }
}

fn jacobian_determinant(p: &Presentation) -> Polynomial {
    let ctx = p.context();
    let k = ctx.nvars();
    let mat: Vec<Vec<Polynomial>> = p
        .relations
        .iter()
        .map(|u| {
            (0..k)
                .map(|j| u.partial_derivative(j).expect("index in range"))
                .collect()
        })
        .collect();
    determinant(ctx, &mat)
}

/// Certified refutation of ideal membership at degree n, given the exact
/// quotient dimension there. When the modular rank reaches the exact rank
/// and the probe row still grows the span, the probe cannot lie in the
/// rational span either. `Some(true)` is a proof of non-membership; `None`
/// means the certificate did not close and the caller must go exact.
fn modular_nonmembership(
    p: &Presentation,
    probe: &Polynomial,
    n: u32,
    true_quotient_dim: usize,
) -> Option<bool> {
    use crate::linalg::modular::{rational_mod_p, ModEchelon};
    let ctx = p.context();
    let basis = ctx.monomial_basis(n);
    let index: HashMap<Monomial, u32> = basis
        .iter()
        .enumerate()
        .map(|(i, m)| (m.clone(), i as u32))
        .collect();
    let mut ech = ModEchelon::new(basis.len());
    for j in 0..p.relations.len() {
        let d = p.relation_degree(j);
        if d > n || (n - d) % 2 != 0 {
            continue;
        }
        let u_terms: Vec<(Monomial, u64)> = p.relations[j]
            .terms()
            .into_iter()
            .map(|(m, c)| rational_mod_p(c).map(|v| (m.clone(), v)))
            .collect::<Option<Vec<_>>>()?;
        let mut row = Vec::with_capacity(u_terms.len());
        for m in ctx.monomial_basis(n - d) {
            row.clear();
            for (mu, v) in &u_terms {
                let shifted = Monomial::from_exponents(
                    mu.exponents()
                        .iter()
                        .zip(m.exponents())
                        .map(|(&a, &b)| a + b)
                        .collect(),
                );
                row.push((index[&shifted], *v));
            }
            ech.insert(&row);
        }
    }
    if basis.len() - ech.rank() != true_quotient_dim {
        return None;
    }
    let probe_row: Vec<(u32, u64)> = probe
        .terms()
        .into_iter()
        .map(|(m, c)| rational_mod_p(c).map(|v| (index[&m.clone()], v)))
        .collect::<Option<Vec<_>>>()?;
    if ech.insert(&probe_row) {
        Some(true)
    } else {
        None
    }
}

/// Laplace expansion along rows with memoization on column subsets.
fn determinant(ctx: &Arc<GradedContext>, mat: &[Vec<Polynomial>]) -> Polynomial {
    fn rec(
        ctx: &Arc<GradedContext>,
        mat: &[Vec<Polynomial>],
        row: usize,
        mask: u32,
        memo: &mut HashMap<u32, Polynomial>,
    ) -> Polynomial {
        if row == mat.len() {
            return Polynomial::one(ctx);
        }
        if let Some(hit) = memo.get(&mask) {
            return hit.clone();
        }
        let mut acc = Polynomial::zero(ctx);
        let mut pos = 0;
        for c in 0..mat.len() {
            if mask & (1 << c) == 0 {
                continue;
            }
            let entry = &mat[row][c];
            if !entry.is_zero() {
                let sub = rec(ctx, mat, row + 1, mask & !(1 << c), memo);
                let term = entry.checked_mul(&sub).expect("same context");
                acc = if pos % 2 == 0 {
                    &acc + &term
                } else {
                    &acc - &term
                };
            }
            pos += 1;
        }
        memo.insert(mask, acc.clone());
        acc
    }
    let k = mat.len();
    let mut memo = HashMap::new();
    rec(ctx, mat, 0, (1u32 << k) - 1, &mut memo)
}

/// Eliminate generators that appear linearly in some relation until every
/// relation lies in the span of monomials with total exponent at least two.
///
/// Each step picks the first relation with a linear term (first such term in
/// canonical order), solves it for that variable, substitutes everywhere,
/// and drops the variable together with the relation.
pub fn reduce_to_pure_model(p: &Presentation) -> Result<Presentation, QuotientError> {
    let mut ctx = Arc::clone(p.context());
    let mut rels = p.relations.clone();
    loop {
        let mut pivot: Option<(usize, usize, Rational)> = None;
        'outer: for (j, r) in rels.iter().enumerate() {
            for (m, c) in r.terms() {
                if m.total_exponent() == 1 {
                    let i = m
                        .exponents()
                        .iter()
                        .position(|&e| e == 1)
                        .expect("total exponent one");
                    pivot = Some((j, i, c.clone()));
                    break 'outer;
                }
            }
        }
        let Some((j, i, lambda)) = pivot else { break };
        if ctx.nvars() == 1 {
            return Err(QuotientError::DegeneratePresentation(
                "eliminating the last generator leaves the trivial algebra".into(),
            ));
        }
        // solve u_j = 0 for x_i: by homogeneity no other term of u_j uses x_i
        let xi = Polynomial::var(&ctx, i)?;
        let rest = &rels[j] - &xi.scale(&lambda);
        let image = rest.scale(&(-Rational::one() / lambda));
        debug_assert!(image.terms().iter().all(|(m, _)| m.exponents()[i] == 0));

        let mut new_pairs: Vec<(String, u32)> = Vec::new();
        for v in 0..ctx.nvars() {
            if v != i {
                new_pairs.push((ctx.var_name(v).to_string(), ctx.weights()[v]));
            }
        }
        let new_ctx = GradedContext::new(new_pairs)?;
        let mut new_rels = Vec::with_capacity(rels.len() - 1);
        for (idx, r) in rels.iter().enumerate() {
            if idx == j {
                continue;
            }
            let substituted = r.substitute(i, &image)?;
            if substituted.is_zero() {
                return Err(QuotientError::DegeneratePresentation(format!(
                    "relation {idx} became zero after eliminating {}",
                    ctx.var_name(i)
                )));
            }
            new_rels.push(drop_variable(&substituted, i, &new_ctx));
        }
        ctx = new_ctx;
        rels = new_rels;
    }
    Presentation::new(ctx, rels)
}

fn drop_variable(p: &Polynomial, i: usize, new_ctx: &Arc<GradedContext>) -> Polynomial {
    let terms = p
        .terms()
        .into_iter()
        .map(|(m, c)| {
            let mut exps = m.exponents().to_vec();
            debug_assert_eq!(exps[i], 0, "variable still present after substitution");
            exps.remove(i);
            (Monomial::from_exponents(exps), c.clone())
        })
        .collect();
    Polynomial::from_terms(new_ctx, terms).expect("lengths match the reduced context")
}

/// A successful adapted splitting: a proper generator subset together with
/// recombined relations supported on it that form an elliptic presentation.
#[derive(Debug, Clone)]
pub struct SplittingWitness {
    pub generators: Vec<usize>,
    pub sub_presentation: Presentation,
}

/// Search all proper nonempty generator subsets for an adapted splitting:
/// linear recombinations of equal-degree relations that only involve the
/// chosen generators and form a positively elliptic presentation on them.
///
/// A negative answer means "none found (adapted search)"; nonlinear changes
/// of generator basis are out of scope here.
pub fn detect_adapted_splitting(e: &Elliptic) -> Option<SplittingWitness> {
    let p = e.presentation();
    let ctx = p.context();
    let k = ctx.nvars();
    if k < 2 {
        return None;
    }
    for size in 1..k {
        for subset in index_combinations(k, size) {
            if let Some(w) = try_subset(p, &subset) {
                return Some(w);
            }
        }
    }
    None
}

fn try_subset(p: &Presentation, subset: &[usize]) -> Option<SplittingWitness> {
    let ctx = p.context();
    let in_subset = |m: &Monomial| {
        m.exponents()
            .iter()
            .enumerate()
            .all(|(v, &e)| e == 0 || subset.contains(&v))
    };
    // group relations by degree and intersect each span with Q[S]
    let mut by_degree: BTreeMap<u32, Vec<usize>> = BTreeMap::new();
    for j in 0..p.relations().len() {
        by_degree.entry(p.relation_degree(j)).or_default().push(j);
    }
    let mut found: Vec<Polynomial> = Vec::new();
    for (&d, js) in &by_degree {
        let basis = ctx.monomial_basis(d);
        let outside: Vec<&Monomial> = basis.iter().filter(|m| !in_subset(m)).collect();
        // rows: one constraint per monomial outside Q[S]; unknowns: combo coefficients
        let mut ech = Echelon::new(js.len());
        for m in &outside {
            let row: Vec<(u32, Rational)> = js
                .iter()
                .enumerate()
                .map(|(col, &j)| (col as u32, p.relations()[j].coefficient(m)))
                .filter(|(_, c)| !c.is_zero())
                .collect();
            ech.insert_rational(&row);
        }
        for combo in ech.nullspace() {
            let mut poly = Polynomial::zero(ctx);
            for (pos, coef) in combo.iter().enumerate() {
                if !coef.is_zero() {
                    poly = &poly + &p.relations()[js[pos]].scale(coef);
                }
            }
            if !poly.is_zero() {
                found.push(poly);
            }
        }
    }
    if found.len() < subset.len() {
        return None;
    }
    let sub_pairs: Vec<(String, u32)> = subset
        .iter()
        .map(|&v| (ctx.var_name(v).to_string(), ctx.weights()[v]))
        .collect();
    let sub_ctx = GradedContext::new(sub_pairs).ok()?;
    for choice in index_combinations(found.len(), subset.len()) {
        let restricted: Vec<Polynomial> = choice
            .iter()
            .map(|&c| restrict_to_subset(&found[c], subset, &sub_ctx))
            .collect();
        let Ok(candidate) = Presentation::new(Arc::clone(&sub_ctx), restricted) else {
            continue;
        };
        if matches!(is_positively_elliptic(&candidate), Ok(r) if r.elliptic) {
            return Some(SplittingWitness {
                generators: subset.to_vec(),
                sub_presentation: candidate,
            });
        }
    }
    None
}

fn restrict_to_subset(
    p: &Polynomial,
    subset: &[usize],
    sub_ctx: &Arc<GradedContext>,
) -> Polynomial {
    let terms = p
        .terms()
        .into_iter()
        .map(|(m, c)| {
            let exps = subset.iter().map(|&v| m.exponents()[v]).collect();
            (Monomial::from_exponents(exps), c.clone())
        })
        .collect();
    Polynomial::from_terms(sub_ctx, terms).expect("support verified inside the subset")
}

/// All r-element index subsets of 0..n in lexicographic order.
pub(crate) fn index_combinations(n: usize, r: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(r);
    fn rec(n: usize, r: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == r {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(n, r, i + 1, cur, out);
            cur.pop();
        }
    }
    rec(n, r, 0, &mut cur, &mut out);
    out
}

/// Pure-model degree bounds B_i >= 2 A_i, reported as a presentation error
/// when violated; meaningful for pure elliptic presentations.
pub fn verify_pure_model_bounds(p: &Presentation) -> Result<(), QuotientError> {
    let dt = degree_type_of(p);
    for (i, (&a, &b)) in dt.gens.iter().zip(&dt.rels).enumerate() {
        if b < 2 * a {
            return Err(QuotientError::DegeneratePresentation(format!(
                "relation {i} has degree {b} below twice its generator degree {a}"
            )));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::naive;
    use crate::text::{parse_degree_type, parse_presentation};

    fn pres(src: &str) -> Presentation {
        parse_presentation(src).unwrap()
    }

    fn two_gen_elliptic() -> Presentation {
        pres("vars: x1:2 x2:2\nrels: x1^2 - x2^2 ; x1*x2")
    }

    fn two_gen_not_elliptic() -> Presentation {
        pres("vars: x1:2 x2:2\nrels: x1^2 ; x1*x2")
    }

    fn dt(s: &str) -> DegreeType {
        parse_degree_type(s).unwrap()
    }

    #[test]
    fn degree_type_examples() {
        assert_eq!(degree_type_of(&two_gen_elliptic()), dt("2,2:4,4"));
        assert_eq!(
            degree_type_of(&pres("vars: x:2\nrels: x^6")),
            dt("2:12")
        );
        assert_eq!(
            degree_type_of(&pres("vars: x1:2 x2:4\nrels: x1^2 - x2 ; x2^3")),
            dt("2,4:4,12")
        );
    }

    #[test]
    fn formal_dimension_examples() {
        assert_eq!(formal_dimension(&dt("2,2:4,4")), 4);
        assert_eq!(formal_dimension(&dt("2,2,4,4:4,6,8,12")), 18);
        assert_eq!(formal_dimension(&dt("2,2,2,4,6:4,4,6,10,12")), 20);
    }

    #[test]
    fn expected_hilbert_examples() {
        assert_eq!(expected_hilbert(&dt("2,2:4,4")).unwrap(), vec![1, 0, 2, 0, 1]);
        assert_eq!(
            expected_hilbert(&dt("2:12")).unwrap(),
            vec![1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1]
        );
        // no degree-6 form exists in a single weight-4 variable
        assert_eq!(
            expected_hilbert(&dt("4:6")),
            Err(QuotientError::InconsistentDegreeType)
        );
        assert_eq!(
            expected_hilbert(&dt("4:10")),
            Err(QuotientError::InconsistentDegreeType)
        );
        // the series division for (2,4:4,10) is exact even though the degree
        // type fails the realizability condition; the rejection lives there
        assert_eq!(
            expected_hilbert(&dt("2,4:4,10")).unwrap(),
            vec![1, 0, 1, 0, 1, 0, 1, 0, 1]
        );
    }

    /// Series oracle: expected * prod(1 - t^A) must equal prod(1 - t^B).
    fn series_product_check(d: &DegreeType, coeffs: &[u64]) -> bool {
        let top: usize = d.relation_degrees().iter().map(|&b| b as usize).sum();
        let mut lhs = vec![0i64; top + 1];
        for (i, &c) in coeffs.iter().enumerate() {
            lhs[i] = c as i64;
        }
        for &a in d.generator_degrees() {
            let a = a as usize;
            for i in (0..=top).rev() {
                if i >= a {
                    lhs[i] -= lhs[i - a];
                }
            }
        }
        let mut rhs = vec![0i64; top + 1];
        rhs[0] = 1;
        for &b in d.relation_degrees() {
            let b = b as usize;
            for i in (0..=top).rev() {
                if i >= b {
                    rhs[i] -= rhs[i - b];
                }
            }
        }
        lhs == rhs
    }

    #[test]
    fn expected_hilbert_satisfies_series_identity() {
        for s in ["2,2:4,4", "2:12", "2,4:4,10", "2,2,4,4:4,6,8,12", "2,4,6,6:6,8,12,12"] {
            let d = dt(s);
            let coeffs = expected_hilbert(&d).unwrap();
            assert!(series_product_check(&d, &coeffs), "{s}");
        }
    }

    fn dense_slice_rank_oracle(p: &Presentation, n: u32) -> usize {
        let ctx = p.context();
        let basis = ctx.monomial_basis(n);
        let mut rows = Vec::new();
        for j in 0..p.relations().len() {
            let d = p.relation_degree(j);
            if d > n {
                continue;
            }
            for m in ctx.monomial_basis(n - d) {
                let mono_poly =
                    Polynomial::from_terms(ctx, vec![(m, Rational::one())]).unwrap();
                let prod = &mono_poly * &p.relations()[j];
                rows.push(prod.coordinates(&basis));
            }
        }
        naive::rank(rows)
    }

    #[test]
    fn ideal_slice_examples() {
        let p = two_gen_elliptic();
        let s = ideal_slice(&p, 4);
        assert_eq!(s.rank(), 2);
        assert_eq!(s.ambient_dim(), 3);
        assert_eq!(ideal_slice(&p, 0).rank(), 0);

        let q = two_gen_not_elliptic();
        let s6 = ideal_slice(&q, 6);
        assert_eq!(s6.rank(), 3);
        assert_eq!(s6.ambient_dim(), 4);
        // x2^3 survives
        let x2cubed = crate::text::parse_polynomial(q.context(), "x2^3").unwrap();
        assert!(!s6.contains(&x2cubed).unwrap());
    }

    #[test]
    fn ideal_slice_matches_dense_oracle() {
        for p in [
            two_gen_elliptic(),
            two_gen_not_elliptic(),
            pres("vars: x1:2 x2:4\nrels: x1^2 - x2 ; x2^3"),
            pres("vars: x1:2 x2:2 x3:4\nrels: x1^2 + x2^2 ; x1*x2 - x3 ; x3^2 + x1^4"),
        ] {
            for n in (0..=14).step_by(2) {
                assert_eq!(
                    ideal_slice(&p, n).rank(),
                    dense_slice_rank_oracle(&p, n),
                    "degree {n}"
                );
            }
        }
    }

    #[test]
    fn hilbert_function_examples() {
        let h = hilbert_function(&two_gen_elliptic(), 6);
        assert_eq!(h.dims, vec![1, 0, 2, 0, 1, 0, 0]);
        let h2 = hilbert_function(&two_gen_not_elliptic(), 6);
        assert_eq!(h2.dims[6], 1);
        let h3 = hilbert_function(&pres("vars: x:2\nrels: x^6"), 12);
        assert_eq!(h3.dims, vec![1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 0]);
    }

    #[test]
    fn incremental_hilbert_agrees() {
        for p in [
            two_gen_elliptic(),
            two_gen_not_elliptic(),
            pres("vars: x1:2 x2:4\nrels: x1^2 - x2 ; x2^3"),
        ] {
            let bound = 14;
            assert_eq!(
                hilbert_function(&p, bound),
                hilbert_function_incremental(&p, bound)
            );
        }
    }

    #[test]
    fn ellipticity_examples() {
        let r = is_positively_elliptic(&two_gen_elliptic()).unwrap();
        assert!(r.elliptic);
        assert_eq!(r.formal_dimension, 4);
        assert_eq!(r.hilbert_matches, Some(true));

        let r2 = is_positively_elliptic(&two_gen_not_elliptic()).unwrap();
        assert!(!r2.elliptic);

        let p3 = pres("vars: x1:2 x2:4\nrels: x1^2 - x2 ; x2^3");
        let r3 = is_positively_elliptic(&p3).unwrap();
        assert!(r3.elliptic);
        let single = hilbert_function(&pres("vars: x:2\nrels: x^6"), 10);
        assert_eq!(&r3.hilbert.dims[..=10], &single.dims[..]);
    }

    #[test]
    fn poincare_examples() {
        let e = Elliptic::try_new(two_gen_elliptic()).unwrap();
        assert!(poincare_check(&e));
        let e2 = Elliptic::try_new(pres("vars: x:2\nrels: x^4")).unwrap();
        assert!(poincare_check(&e2));
    }

    #[test]
    fn jacobian_examples() {
        let single = pres("vars: x:2\nrels: x^6");
        let j = jacobian_class(&single);
        assert_eq!(j.determinant.to_string(), "6*x^5");
        assert!(j.nonzero_in_top);

        let j2 = jacobian_class(&two_gen_elliptic());
        assert_eq!(j2.determinant.to_string(), "2*x1^2 + 2*x2^2");
        assert_eq!(j2.degree, Some(4));
        assert!(j2.nonzero_in_top);

        let j3 = jacobian_class(&two_gen_not_elliptic());
        assert_eq!(j3.determinant.to_string(), "2*x1^2");
        assert!(!j3.nonzero_in_top);
    }

    #[test]
    fn reduce_mod_ideal_examples() {
        let p = two_gen_elliptic();
        let ctx = p.context();
        let x1x2 = crate::text::parse_polynomial(ctx, "x1*x2").unwrap();
        assert!(reduce_mod_ideal(&p, &x1x2)
            .unwrap()
            .iter()
            .all(|c| c.is_zero()));
        let x1sq = crate::text::parse_polynomial(ctx, "x1^2").unwrap();
        let res = reduce_mod_ideal(&p, &x1sq).unwrap();
        assert!(res.iter().any(|c| !c.is_zero()));
        // the residue is the x2^2 class
        let slice = ideal_slice(&p, 4);
        let back = slice.polynomial_from_coordinates(ctx, &res);
        assert_eq!(back.to_string(), "x2^2");
        assert!(reduce_mod_ideal(&p, &Polynomial::zero(ctx)).unwrap().is_empty());
        let inhom = crate::text::parse_polynomial(ctx, "x1 + x1^2").unwrap();
        assert!(reduce_mod_ideal(&p, &inhom).is_err());
    }

    #[test]
    fn pure_model_reduction_examples() {
        let p = pres("vars: x1:2 x2:4\nrels: x1^2 - x2 ; x2^3");
        let reduced = reduce_to_pure_model(&p).unwrap();
        assert_eq!(reduced.nvars(), 1);
        assert_eq!(reduced.degree_type(), dt("2:12"));
        assert_eq!(reduced.relations()[0].to_string(), "x1^6");
        // Hilbert data is preserved
        assert_eq!(
            hilbert_function(&p, 10).dims,
            hilbert_function(&reduced, 10).dims
        );

        // already pure input is a fixed point
        let pure = two_gen_elliptic();
        assert_eq!(reduce_to_pure_model(&pure).unwrap(), pure);

        // a linear relation in two weight-2 generators
        let p2 = pres("vars: x1:2 x2:2\nrels: x1 - x2 ; x2^4");
        let red2 = reduce_to_pure_model(&p2).unwrap();
        assert_eq!(red2.nvars(), 1);
        assert_eq!(red2.degree_type(), dt("2:8"));
        assert_eq!(
            hilbert_function(&p2, 8).dims,
            hilbert_function(&red2, 8).dims
        );
    }

    #[test]
    fn adapted_splitting_examples() {
        let split = Elliptic::try_new(pres("vars: x1:2 x2:2\nrels: x1^2 ; x2^2")).unwrap();
        let w = detect_adapted_splitting(&split).expect("splits");
        assert_eq!(w.generators, vec![0]);

        let no_split = Elliptic::try_new(two_gen_elliptic()).unwrap();
        assert!(detect_adapted_splitting(&no_split).is_none());
    }

    #[test]
    fn construction_rejects_degenerate_input() {
        let ctx = GradedContext::new(vec![("x1", 2), ("x2", 2)]).unwrap();
        let x1sq = crate::text::parse_polynomial(&ctx, "x1^2").unwrap();
        assert!(matches!(
            Presentation::new(Arc::clone(&ctx), vec![x1sq.clone()]),
            Err(QuotientError::RelationCount { .. })
        ));
        assert!(matches!(
            Presentation::new(
                Arc::clone(&ctx),
                vec![x1sq.clone(), Polynomial::zero(&ctx)]
            ),
            Err(QuotientError::ZeroRelation { index: 1 })
        ));
        let inhom = crate::text::parse_polynomial(&ctx, "x1 + x1^2").unwrap();
        assert!(matches!(
            Presentation::new(Arc::clone(&ctx), vec![x1sq, inhom]),
            Err(QuotientError::NotHomogeneous { index: 1 })
        ));
    }

    #[test]
    fn relations_are_sorted_by_degree() {
        let p = pres("vars: x1:2 x2:2\nrels: x1*x2^3 + x1^4 ; x1^2 + x2^2");
        assert_eq!(p.relation_degree(0), 4);
        assert_eq!(p.relation_degree(1), 8);
    }
}
