//! Homogeneous symmetric functions over Q in the monomial, elementary,
//! complete, power-sum and Schur bases.
//!
//! Two independent routes are kept apart on purpose. Basis elements can be
//! realized as honest polynomials in `K >= n` variables ([`gen_basis_poly`]),
//! and change-of-basis matrices are read off those polynomials. Arithmetic on
//! [`SymFunc`] values then goes through the power-sum basis, where the product
//! is concatenation of index partitions and the Hall inner product is diagonal.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;
use std::sync::{Arc, OnceLock, RwLock};

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::partition::{partitions_of, Partition};
use crate::poly::{for_each_distinct_permutation, SymPolynomial};
use crate::skew::SkewShape;
use crate::tableau::for_each_bounded_ssyt;
use crate::transition::TransitionMatrix;
use crate::Rational;

pub const DEFAULT_DEGREE_CAP: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Basis {
    /// Monomial symmetric functions `m_λ`.
    M,
    /// Elementary `e_λ`.
    E,
    /// Complete homogeneous `h_λ`.
    H,
    /// Power sums `p_λ`.
    P,
    /// Schur functions `s_λ`.
    S,
}

impl Basis {
    pub const ALL: [Basis; 5] = [Basis::M, Basis::E, Basis::H, Basis::P, Basis::S];
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Basis::M => "m",
            Basis::E => "e",
            Basis::H => "h",
            Basis::P => "p",
            Basis::S => "s",
        })
    }
}

impl FromStr for Basis {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "m" => Ok(Basis::M),
            "e" => Ok(Basis::E),
            "h" => Ok(Basis::H),
            "p" => Ok(Basis::P),
            "s" => Ok(Basis::S),
            other => Err(Error::Parse(format!("unknown basis `{other}` (expected m, e, h, p or s)"))),
        }
    }
}

/// A homogeneous symmetric function of fixed degree, written in one basis.
#[derive(Clone, PartialEq, Eq)]
pub struct SymFunc {
    degree: usize,
    basis: Basis,
    coeffs: BTreeMap<Partition, Rational>,
}

impl SymFunc {
    pub fn zero(basis: Basis, degree: usize) -> Self {
        SymFunc { degree, basis, coeffs: BTreeMap::new() }
    }

    /// The constant `1`, degree zero.
    pub fn one(basis: Basis) -> Self {
        Self::basis_element(basis, Partition::empty())
    }

    pub fn basis_element(basis: Basis, index: Partition) -> Self {
        let degree = index.weight();
        let mut coeffs = BTreeMap::new();
        coeffs.insert(index, Rational::one());
        SymFunc { degree, basis, coeffs }
    }

    pub fn from_terms(basis: Basis, degree: usize, terms: impl IntoIterator<Item = (Partition, Rational)>) -> Result<Self> {
        let mut f = SymFunc::zero(basis, degree);
        for (p, c) in terms {
            if p.weight() != degree {
                return Err(Error::WeightMismatch(p.weight(), degree));
            }
            f.add_term(p, c);
        }
        Ok(f)
    }

    fn add_term(&mut self, p: Partition, c: Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(p.clone()).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.coeffs.remove(&p);
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn coeffs(&self) -> &BTreeMap<Partition, Rational> {
        &self.coeffs
    }

    pub fn coefficient(&self, p: &Partition) -> Rational {
        self.coeffs.get(p).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn scale(&self, factor: &Rational) -> SymFunc {
        let mut out = SymFunc::zero(self.basis, self.degree);
        for (p, c) in &self.coeffs {
            out.add_term(p.clone(), c * factor);
        }
        out
    }

    /// Sum of two elements in the same basis and degree.
    pub fn add(&self, other: &SymFunc) -> Result<SymFunc> {
        if self.basis != other.basis {
            return Err(Error::InvalidInput(format!(
                "cannot add elements written in bases {} and {}",
                self.basis, other.basis
            )));
        }
        if self.degree != other.degree && !self.is_zero() && !other.is_zero() {
            return Err(Error::WeightMismatch(self.degree, other.degree));
        }
        let mut out = if self.is_zero() { other.clone() } else { self.clone() };
        if !self.is_zero() {
            for (p, c) in &other.coeffs {
                out.add_term(p.clone(), c.clone());
            }
        }
        Ok(out)
    }
}

impl fmt::Display for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        for (k, (p, c)) in self.coeffs.iter().enumerate() {
            let negative = c.is_negative();
            if k > 0 {
                f.write_str(if negative { " - " } else { " + " })?;
            } else if negative {
                f.write_str("-")?;
            }
            let abs = c.abs();
            if !abs.is_one() {
                write!(f, "{abs}*")?;
            }
            write!(f, "{}[{}]", self.basis, if p.is_empty() { String::new() } else { p.to_string() })?;
        }
        Ok(())
    }
}

impl fmt::Debug for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SymFunc(deg {}: {self})", self.degree)
    }
}

/// Polynomial realization of a basis element in `vars` variables. Requires
/// `vars >= |λ|` so that distinct basis elements stay distinct.
pub fn gen_basis_poly(basis: Basis, shape: &Partition, vars: usize) -> Result<SymPolynomial> {
    if vars < shape.weight() {
        return Err(Error::InsufficientVariables { vars, degree: shape.weight() });
    }
    Ok(basis_poly_truncated(basis, shape, vars))
}

/// Same as [`gen_basis_poly`] without the faithfulness bound: the image under
/// setting every variable past `vars` to zero.
pub fn basis_poly_truncated(basis: Basis, shape: &Partition, vars: usize) -> SymPolynomial {
    match basis {
        Basis::M => monomial_poly(shape, vars),
        Basis::E => product_of(shape, vars, |k| monomial_poly(&Partition::column(k), vars)),
        Basis::H => product_of(shape, vars, |k| {
            partitions_of(k)
                .iter()
                .fold(SymPolynomial::zero(vars), |acc, mu| acc.add(&monomial_poly(mu, vars)))
        }),
        Basis::P => product_of(shape, vars, |k| monomial_poly(&Partition::row(k), vars)),
        Basis::S => skew_schur_poly_truncated(&SkewShape::straight(shape.clone()), vars),
    }
}

fn monomial_poly(shape: &Partition, vars: usize) -> SymPolynomial {
    let mut poly = SymPolynomial::zero(vars);
    if shape.length() > vars {
        return poly;
    }
    let exps: Vec<u32> = shape.padded(vars).into_iter().map(|x| x as u32).collect();
    for_each_distinct_permutation(&exps, |e| poly.add_term(e.to_vec(), Rational::one()));
    poly
}

fn product_of(shape: &Partition, vars: usize, factor: impl Fn(usize) -> SymPolynomial) -> SymPolynomial {
    let mut cache: HashMap<usize, SymPolynomial> = HashMap::new();
    let mut out = SymPolynomial::one(vars);
    for &k in shape.parts() {
        let f = cache.entry(k).or_insert_with(|| factor(k));
        out = out.mul(f);
    }
    out
}

/// `s_{λ/μ}` as the sum of `x^T` over semistandard tableaux with entries at
/// most `vars`. Requires `vars` to be at least the number of cells.
pub fn skew_schur_poly(shape: &SkewShape, vars: usize) -> Result<SymPolynomial> {
    if vars < shape.size() {
        return Err(Error::InsufficientVariables { vars, degree: shape.size() });
    }
    Ok(skew_schur_poly_truncated(shape, vars))
}

pub fn skew_schur_poly_truncated(shape: &SkewShape, vars: usize) -> SymPolynomial {
    let mut poly = SymPolynomial::zero(vars);
    if vars == 0 {
        if shape.size() == 0 {
            poly.add_term(Vec::new(), Rational::one());
        }
        return poly;
    }
    let mut exponent = vec![0u32; vars];
    for_each_bounded_ssyt(shape, vars, |flat| {
        exponent.iter_mut().for_each(|x| *x = 0);
        for &v in flat {
            exponent[v - 1] += 1;
        }
        poly.add_term(exponent.clone(), Rational::one());
    });
    poly
}

/// Reads the monomial-basis coefficients of a symmetric polynomial of the
/// given degree: the coefficient of `m_λ` is that of `x^λ`.
pub fn monomial_coefficients(poly: &SymPolynomial, degree: usize) -> BTreeMap<Partition, Rational> {
    partitions_of(degree)
        .into_iter()
        .filter(|p| p.length() <= poly.variable_count())
        .filter_map(|p| {
            let e: Vec<u32> = p.padded(poly.variable_count()).into_iter().map(|x| x as u32).collect();
            let c = poly.coefficient(&e);
            (!c.is_zero()).then_some((p, c))
        })
        .collect()
}

type CacheKey = (Basis, Basis, usize);

/// Cached change-of-basis machinery with a degree cap.
///
/// Matrices are computed lazily on first use and shared behind `Arc`. When a
/// cache directory is configured, matrices are read from and written to it.
#[derive(Debug)]
pub struct SymAlgebra {
    degree_cap: usize,
    cache: RwLock<HashMap<CacheKey, Arc<TransitionMatrix>>>,
    cache_dir: Option<PathBuf>,
}

impl Default for SymAlgebra {
    fn default() -> Self {
        SymAlgebra::new(DEFAULT_DEGREE_CAP)
    }
}

impl SymAlgebra {
    pub fn new(degree_cap: usize) -> Self {
        SymAlgebra { degree_cap, cache: RwLock::new(HashMap::new()), cache_dir: None }
    }

    pub fn with_cache_dir(mut self, dir: impl Into<PathBuf>) -> Self {
        self.cache_dir = Some(dir.into());
        self
    }

    /// Process-wide instance with the default cap.
    pub fn shared() -> Arc<SymAlgebra> {
        static SHARED: OnceLock<Arc<SymAlgebra>> = OnceLock::new();
        SHARED.get_or_init(|| Arc::new(SymAlgebra::default())).clone()
    }

    pub fn degree_cap(&self) -> usize {
        self.degree_cap
    }

    pub fn check_degree(&self, degree: usize) -> Result<()> {
        if degree > self.degree_cap {
            return Err(Error::DegreeCapExceeded { degree, cap: self.degree_cap });
        }
        Ok(())
    }

    pub fn transition(&self, from: Basis, to: Basis, degree: usize) -> Result<Arc<TransitionMatrix>> {
        self.check_degree(degree)?;
        let key = (from, to, degree);
        if let Some(m) = self.cache.read().expect("transition cache poisoned").get(&key) {
            return Ok(m.clone());
        }
        let computed = match self.load_cached(key)? {
            Some(m) => m,
            None => {
                let m = self.compute_transition(from, to, degree)?;
                if let Some(dir) = &self.cache_dir {
                    m.save(dir)?;
                }
                m
            }
        };
        let mut cache = self.cache.write().expect("transition cache poisoned");
        Ok(cache.entry(key).or_insert_with(|| Arc::new(computed)).clone())
    }

    fn load_cached(&self, (from, to, degree): CacheKey) -> Result<Option<TransitionMatrix>> {
        match &self.cache_dir {
            Some(dir) => TransitionMatrix::load(dir, from, to, degree),
            None => Ok(None),
        }
    }

    fn compute_transition(&self, from: Basis, to: Basis, degree: usize) -> Result<TransitionMatrix> {
        if from == to {
            return Ok(TransitionMatrix::identity(degree, from));
        }
        match (from, to) {
            (_, Basis::M) => Ok(to_monomial_matrix(from, degree)),
            (Basis::M, _) => self
                .transition(to, Basis::M, degree)?
                .inverse()
                .ok_or_else(|| Error::Internal(format!("{to}->m matrix at degree {degree} is singular"))),
            _ => {
                let a = self.transition(from, Basis::M, degree)?;
                let b = self.transition(Basis::M, to, degree)?;
                Ok(a.compose(&b))
            }
        }
    }

    pub fn to_basis(&self, f: &SymFunc, to: Basis) -> Result<SymFunc> {
        if f.basis == to {
            return Ok(f.clone());
        }
        let m = self.transition(f.basis, to, f.degree)?;
        Ok(SymFunc { degree: f.degree, basis: to, coeffs: m.apply(&f.coeffs) })
    }

    /// Product, computed in the power-sum basis and returned in the basis of
    /// `f`.
    pub fn multiply(&self, f: &SymFunc, g: &SymFunc) -> Result<SymFunc> {
        let fp = self.to_basis(f, Basis::P)?;
        let gp = self.to_basis(g, Basis::P)?;
        let degree = f.degree + g.degree;
        let mut out = SymFunc::zero(Basis::P, degree);
        for (a, ca) in &fp.coeffs {
            for (b, cb) in &gp.coeffs {
                out.add_term(a.union(b), ca * cb);
            }
        }
        self.to_basis(&out, f.basis)
    }

    /// Hall inner product, `<p_λ, p_μ> = δ_λμ z_λ`.
    pub fn hall_inner(&self, f: &SymFunc, g: &SymFunc) -> Result<Rational> {
        if f.degree != g.degree {
            return Ok(Rational::zero());
        }
        let fp = self.to_basis(f, Basis::P)?;
        let gp = self.to_basis(g, Basis::P)?;
        Ok(fp
            .coeffs
            .iter()
            .filter_map(|(p, c)| gp.coeffs.get(p).map(|d| c * d * Rational::from_integer(p.z_value())))
            .fold(Rational::zero(), |a, b| a + b))
    }

    /// Schur functions in the monomial basis, re-derived by Gram-Schmidt on
    /// `{m_λ}` under the Hall inner product, processing partitions from the
    /// bottom of the lexicographic order (a linear extension of dominance).
    pub fn gram_schmidt_schur(&self, degree: usize) -> Result<TransitionMatrix> {
        let m_to_p = self.transition(Basis::M, Basis::P, degree)?;
        let index = partitions_of(degree);
        let n = index.len();
        let z: Vec<Rational> = index.iter().map(|p| Rational::from_integer(p.z_value())).collect();
        // Work with vectors in both m- and p-coordinates.
        let inner = |a: &[Rational], b: &[Rational]| -> Rational {
            (0..n).map(|k| &a[k] * &b[k] * &z[k]).fold(Rational::zero(), |x, y| x + y)
        };
        let mut schur_m: Vec<Vec<Rational>> = vec![Vec::new(); n];
        let mut schur_p: Vec<Vec<Rational>> = vec![Vec::new(); n];
        for i in (0..n).rev() {
            let mut v_m = vec![Rational::zero(); n];
            v_m[i] = Rational::one();
            let mut v_p = m_to_p.rows()[i].clone();
            for j in i + 1..n {
                let num = inner(&v_p, &schur_p[j]);
                if num.is_zero() {
                    continue;
                }
                let coeff = num / inner(&schur_p[j], &schur_p[j]);
                for k in 0..n {
                    let (dm, dp) = (&schur_m[j][k] * &coeff, &schur_p[j][k] * &coeff);
                    v_m[k] -= dm;
                    v_p[k] -= dp;
                }
            }
            let norm = inner(&v_p, &v_p);
            if !norm.is_one() {
                return Err(Error::Internal(format!(
                    "Gram-Schmidt vector for {} has norm {norm}",
                    index[i]
                )));
            }
            schur_m[i] = v_m;
            schur_p[i] = v_p;
        }
        Ok(TransitionMatrix::from_rows(degree, Basis::S, Basis::M, schur_m))
    }
}

/// Row λ = monomial coefficients of the polynomial realization of `from_λ` in
/// `degree` variables.
fn to_monomial_matrix(from: Basis, degree: usize) -> TransitionMatrix {
    let index = partitions_of(degree);
    let rows = index
        .iter()
        .map(|lambda| {
            let poly = basis_poly_truncated(from, lambda, degree);
            let coeffs = monomial_coefficients(&poly, degree);
            index.iter().map(|mu| coeffs.get(mu).cloned().unwrap_or_else(Rational::zero)).collect()
        })
        .collect();
    TransitionMatrix::from_rows(degree, from, Basis::M, rows)
}
