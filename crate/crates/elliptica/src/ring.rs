//! Sparse multivariate polynomial arithmetic over the rationals with a
//! positive even weighted grading.
//!
//! A [`GradedContext`] fixes the ambient polynomial algebra: an ordered list
//! of variables, each carrying a positive even weight. [`Polynomial`] values
//! are sparse maps from exponent vectors to nonzero exact rationals
//! ([`num_rational::BigRational`]), so every computation downstream is exact.
//!
//! The canonical term order is (weighted degree, then descending
//! lexicographic on exponent vectors): within one degree, powers of earlier
//! variables come first. All serialized output and all coordinate vectors
//! use this order.

use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

/// Exact rational scalar used throughout: arbitrary-precision numerator and
/// positive denominator, always in lowest terms.
pub type Rational = num_rational::BigRational;

/// Errors raised by ring-level operations.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RingError {
    #[error("monomial has {got} exponents but the context has {expected} variables")]
    LengthMismatch { expected: usize, got: usize },
    #[error("polynomials belong to different graded contexts")]
    ContextMismatch,
    #[error("variable index {index} out of range for {nvars} variables")]
    IndexOutOfRange { index: usize, nvars: usize },
    #[error("invalid context: {0}")]
    InvalidContext(String),
}

/// The ambient graded polynomial algebra: variable names plus their weights.
///
/// Weights must be positive, even, and non-decreasing.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GradedContext {
    vars: Vec<String>,
    weights: Vec<u32>,
}

impl GradedContext {
    pub fn new<S: Into<String>>(pairs: Vec<(S, u32)>) -> Result<Arc<Self>, RingError> {
        let mut vars = Vec::with_capacity(pairs.len());
        let mut weights = Vec::with_capacity(pairs.len());
        for (name, w) in pairs {
            vars.push(name.into());
            weights.push(w);
        }
        if vars.is_empty() {
            return Err(RingError::InvalidContext("no variables".into()));
        }
        for (i, &w) in weights.iter().enumerate() {
            if w < 2 || w % 2 != 0 {
                return Err(RingError::InvalidContext(format!(
                    "weight of {} must be a positive even integer, got {}",
                    vars[i], w
                )));
            }
        }
        if weights.windows(2).any(|p| p[0] > p[1]) {
            return Err(RingError::InvalidContext(
                "weights must be non-decreasing".into(),
            ));
        }
        let mut sorted = vars.clone();
        sorted.sort();
        sorted.dedup();
        if sorted.len() != vars.len() {
            return Err(RingError::InvalidContext("duplicate variable name".into()));
        }
        Ok(Arc::new(GradedContext { vars, weights }))
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn var_name(&self, i: usize) -> &str {
        &self.vars[i]
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn max_weight(&self) -> u32 {
        *self.weights.iter().max().expect("nonempty context")
    }

    /// Weighted degree of a monomial: sum of exponent times weight.
    pub fn weighted_degree(&self, m: &Monomial) -> Result<u32, RingError> {
        if m.0.len() != self.nvars() {
            return Err(RingError::LengthMismatch {
                expected: self.nvars(),
                got: m.0.len(),
            });
        }
        Ok(m.0
            .iter()
            .zip(&self.weights)
            .map(|(&e, &w)| e * w)
            .sum())
    }

    fn wdeg(&self, m: &Monomial) -> u32 {
        m.0.iter().zip(&self.weights).map(|(&e, &w)| e * w).sum()
    }

    /// Canonical order: weighted degree ascending, then descending
    /// lexicographic on exponent vectors (x1-heavy terms first).
    pub fn cmp_monomials(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.wdeg(a).cmp(&self.wdeg(b)).then_with(|| b.0.cmp(&a.0))
    }

    /// All monomials of weighted degree exactly `n`, in canonical order.
    /// Empty for odd `n`.
    pub fn monomial_basis(&self, n: u32) -> Vec<Monomial> {
        let mut out = Vec::new();
        let mut exps = vec![0u32; self.nvars()];
        self.basis_rec(0, n, &mut exps, &mut out);
        out
    }

    fn basis_rec(&self, i: usize, rem: u32, exps: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if i == self.nvars() {
            if rem == 0 {
                out.push(Monomial(exps.clone()));
            }
            return;
        }
        let w = self.weights[i];
        let mut e = rem / w;
        loop {
            exps[i] = e;
            self.basis_rec(i + 1, rem - e * w, exps, out);
            if e == 0 {
                break;
            }
            e -= 1;
        }
        exps[i] = 0;
    }

    /// Number of monomials of weighted degree `n`, without materializing them.
    pub fn basis_dim(&self, n: u32) -> usize {
        // coefficient of t^n in the product of 1/(1 - t^w) over all weights
        let n = n as usize;
        let mut coeffs = vec![0u64; n + 1];
        coeffs[0] = 1;
        for &w in &self.weights {
            let w = w as usize;
            for d in w..=n {
                coeffs[d] += coeffs[d - w];
            }
        }
        coeffs[n] as usize
    }
}

/// Exponent vector; its length always matches the context it is used with.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(pub(crate) Vec<u32>);

impl Monomial {
    pub fn unit(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Monomial(e)
    }

    pub fn from_exponents(exps: Vec<u32>) -> Self {
        Monomial(exps)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn total_exponent(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_unit(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(&a, &b)| a + b)
                .collect(),
        )
    }
}

/// Outcome of asking a polynomial for its homogeneous degree.
///
/// The zero polynomial is homogeneous of every degree, so it gets a
/// distinguished answer instead of an arbitrary integer.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Homogeneity {
    Zero,
    Homogeneous(u32),
    Inhomogeneous,
}

impl Homogeneity {
    pub fn degree(self) -> Option<u32> {
        match self {
            Homogeneity::Homogeneous(n) => Some(n),
            _ => None,
        }
    }
}

/// Sparse exact-rational polynomial in a fixed graded context.
///
/// Invariant: no zero coefficients are stored.
#[derive(Debug, Clone)]
pub struct Polynomial {
    ctx: Arc<GradedContext>,
    terms: BTreeMap<Monomial, Rational>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        *self.ctx == *other.ctx && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl Polynomial {
    pub fn zero(ctx: &Arc<GradedContext>) -> Self {
        Polynomial {
            ctx: Arc::clone(ctx),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(ctx: &Arc<GradedContext>) -> Self {
        Self::constant(ctx, Rational::one())
    }

    pub fn constant(ctx: &Arc<GradedContext>, c: Rational) -> Self {
        let mut p = Self::zero(ctx);
        if !c.is_zero() {
            p.terms.insert(Monomial::unit(ctx.nvars()), c);
        }
        p
    }

    pub fn var(ctx: &Arc<GradedContext>, i: usize) -> Result<Self, RingError> {
        if i >= ctx.nvars() {
            return Err(RingError::IndexOutOfRange {
                index: i,
                nvars: ctx.nvars(),
            });
        }
        let mut p = Self::zero(ctx);
        p.terms
            .insert(Monomial::var(ctx.nvars(), i), Rational::one());
        Ok(p)
    }

    pub fn from_terms(
        ctx: &Arc<GradedContext>,
        terms: Vec<(Monomial, Rational)>,
    ) -> Result<Self, RingError> {
        let mut p = Self::zero(ctx);
        for (m, c) in terms {
            if m.0.len() != ctx.nvars() {
                return Err(RingError::LengthMismatch {
                    expected: ctx.nvars(),
                    got: m.0.len(),
                });
            }
            p.add_term(m, c);
        }
        Ok(p)
    }

    pub fn context(&self) -> &Arc<GradedContext> {
        &self.ctx
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in canonical order.
    pub fn terms(&self) -> Vec<(&Monomial, &Rational)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| self.ctx.cmp_monomials(a.0, b.0));
        v
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let sum = e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    fn same_context(&self, other: &Polynomial) -> bool {
        Arc::ptr_eq(&self.ctx, &other.ctx) || *self.ctx == *other.ctx
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial, RingError> {
        if !self.same_context(other) {
            return Err(RingError::ContextMismatch);
        }
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial, RingError> {
        self.checked_add(&other.neg())
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial, RingError> {
        if !self.same_context(other) {
            return Err(RingError::ContextMismatch);
        }
        let mut out = Polynomial::zero(&self.ctx);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        Ok(out)
    }

    pub fn neg(&self) -> Polynomial {
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = -c.clone();
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ctx);
        }
        let mut out = self.clone();
        for v in out.terms.values_mut() {
            *v = v.clone() * c;
        }
        out
    }

    pub fn pow(&self, mut e: u32) -> Polynomial {
        let mut base = self.clone();
        let mut acc = Polynomial::one(&self.ctx);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Homogeneous degree of the polynomial, with the zero polynomial
    /// reported separately.
    pub fn homogeneous_degree(&self) -> Homogeneity {
        let mut iter = self.terms.keys();
        let first = match iter.next() {
            None => return Homogeneity::Zero,
            Some(m) => self.ctx.wdeg(m),
        };
        for m in iter {
            if self.ctx.wdeg(m) != first {
                return Homogeneity::Inhomogeneous;
            }
        }
        Homogeneity::Homogeneous(first)
    }

    /// Formal partial derivative with respect to variable `i`.
    pub fn partial_derivative(&self, i: usize) -> Result<Polynomial, RingError> {
        if i >= self.ctx.nvars() {
            return Err(RingError::IndexOutOfRange {
                index: i,
                nvars: self.ctx.nvars(),
            });
        }
        let mut out = Polynomial::zero(&self.ctx);
        for (m, c) in &self.terms {
            let e = m.0[i];
            if e == 0 {
                continue;
            }
            let mut exps = m.0.clone();
            exps[i] = e - 1;
            out.add_term(Monomial(exps), c * Rational::from_integer(e.into()));
        }
        Ok(out)
    }

    /// Replace every occurrence of variable `i` by `q`, fully expanded.
    pub fn substitute(&self, i: usize, q: &Polynomial) -> Result<Polynomial, RingError> {
        if i >= self.ctx.nvars() {
            return Err(RingError::IndexOutOfRange {
                index: i,
                nvars: self.ctx.nvars(),
            });
        }
        if !self.same_context(q) {
            return Err(RingError::ContextMismatch);
        }
        let mut out = Polynomial::zero(&self.ctx);
        let mut powers: Vec<Polynomial> = vec![Polynomial::one(&self.ctx)];
        for (m, c) in &self.terms {
            let e = m.0[i] as usize;
            while powers.len() <= e {
                let next = &powers[powers.len() - 1] * q;
                powers.push(next);
            }
            let mut exps = m.0.clone();
            exps[i] = 0;
            let rest = Polynomial::from_terms(&self.ctx, vec![(Monomial(exps), c.clone())])
                .expect("same context");
            out = &out + &rest.checked_mul(&powers[e])?;
        }
        Ok(out)
    }

    /// Coordinate vector of a homogeneous polynomial over the canonical
    /// monomial basis of its degree. `basis` must be `monomial_basis(n)`.
    pub fn coordinates(&self, basis: &[Monomial]) -> Vec<Rational> {
        basis.iter().map(|m| self.coefficient(m)).collect()
    }
}

impl std::ops::Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.checked_add(rhs).expect("context mismatch in add")
    }
}

impl std::ops::Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.checked_sub(rhs).expect("context mismatch in sub")
    }
}

impl std::ops::Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.checked_mul(rhs).expect("context mismatch in mul")
    }
}

impl std::ops::Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::neg(self)
    }
}

fn fmt_coefficient(c: &Rational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (m, c)) in self.terms().into_iter().enumerate() {
            let neg = c.is_negative();
            let mag = if neg { -c.clone() } else { c.clone() };
            if idx == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut factors: Vec<String> = Vec::new();
            if !mag.is_one() || m.is_unit() {
                factors.push(fmt_coefficient(&mag));
            }
            for (i, &e) in m.0.iter().enumerate() {
                if e == 1 {
                    factors.push(self.ctx.var_name(i).to_string());
                } else if e > 1 {
                    factors.push(format!("{}^{}", self.ctx.var_name(i), e));
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}
