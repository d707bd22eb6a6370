//! Littlewood-Richardson coefficients, skew Schur expansions and Pieri rules.

use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::partition::{partitions_of, ColoredPartition, Partition};
use crate::skew::SkewShape;
use crate::symfunc::{gen_basis_poly, monomial_coefficients, Basis, SymAlgebra, SymFunc};
use crate::tableau::{lattice_count, Content};
use crate::Rational;

/// `c^λ_{μν}`: tableaux of shape `λ/μ` and content `ν` whose reading word is
/// a lattice permutation.
pub fn lr_coeff(outer: &Partition, inner: &Partition, content: &Partition) -> u64 {
    if outer.weight() != inner.weight() + content.weight() || !outer.contains(inner) || !outer.contains(content) {
        return 0;
    }
    let shape = SkewShape::new(outer.clone(), inner.clone()).expect("containment checked");
    lattice_count(&shape, &Content::from(content)).expect("weights checked")
}

/// `s_μ · s_ν` expanded in the Schur basis by multiplying polynomial
/// realizations in `|μ| + |ν|` variables.
pub fn schur_product_oracle(alg: &SymAlgebra, left: &Partition, right: &Partition) -> Result<SymFunc> {
    let degree = left.weight() + right.weight();
    alg.check_degree(degree)?;
    let product = gen_basis_poly(Basis::S, left, degree)?.mul(&gen_basis_poly(Basis::S, right, degree)?);
    let in_m = SymFunc::from_terms(Basis::M, degree, monomial_coefficients(&product, degree))?;
    alg.to_basis(&in_m, Basis::S)
}

/// Coefficient of `s_λ` in `s_μ · s_ν`, computed through
/// [`schur_product_oracle`].
pub fn lr_coeff_oracle(alg: &SymAlgebra, outer: &Partition, inner: &Partition, content: &Partition) -> Result<u64> {
    let product = schur_product_oracle(alg, inner, content)?;
    if outer.weight() != product.degree() {
        return Ok(0);
    }
    rational_to_count(&product.coefficient(outer))
}

fn rational_to_count(x: &Rational) -> Result<u64> {
    if !x.is_integer() {
        return Err(Error::Internal(format!("structure constant {x} is not an integer")));
    }
    x.to_integer()
        .to_u64()
        .ok_or_else(|| Error::Internal(format!("structure constant {x} is negative or too large")))
}

/// `s_{λ/μ} = Σ_ν c^λ_{μν} s_ν`.
pub fn skew_schur_expand(shape: &SkewShape) -> SymFunc {
    let degree = shape.size();
    let terms = partitions_of(degree).into_iter().filter_map(|nu| {
        let c = lr_coeff(shape.outer(), shape.inner(), &nu);
        (c > 0).then(|| (nu, Rational::from_integer(c.into())))
    });
    SymFunc::from_terms(Basis::S, degree, terms).expect("indices have the right degree")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PieriMode {
    /// Horizontal strips (multiplication by `h_m`).
    Row,
    /// Vertical strips (multiplication by `e_m`).
    Column,
}

impl std::str::FromStr for PieriMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "row" => Ok(PieriMode::Row),
            "column" => Ok(PieriMode::Column),
            other => Err(Error::Parse(format!("unknown pieri mode `{other}` (expected row or column)"))),
        }
    }
}

/// Partitions `μ ⊇ λ` with `μ/λ` a horizontal (row mode) or vertical
/// (column mode) strip of `m` cells, in sorted order.
pub fn pieri_single(shape: &Partition, m: usize, mode: PieriMode) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut parts = shape.padded(shape.length() + m);
    extend_strip(shape, 0, m, mode, &mut parts, &mut out);
    out.sort();
    out
}

fn extend_strip(
    base: &Partition,
    row: usize,
    left: usize,
    mode: PieriMode,
    parts: &mut Vec<usize>,
    out: &mut Vec<Partition>,
) {
    if left == 0 {
        out.push(Partition::new(parts.clone()).expect("strip extension stays a partition"));
        return;
    }
    if row == parts.len() {
        return;
    }
    let original = base.part(row);
    // Horizontal strips interlace with the row above; vertical strips add at
    // most one cell per row and must stay weakly decreasing.
    let max_add = match mode {
        PieriMode::Row => match row {
            0 => left,
            _ => (base.part(row - 1) - original).min(left),
        },
        PieriMode::Column => {
            let room = if row == 0 { 1 } else { usize::from(parts[row - 1] > original) };
            room.min(left)
        }
    };
    for add in (0..=max_add).rev() {
        parts[row] = original + add;
        extend_strip(base, row + 1, left - add, mode, parts, out);
    }
    parts[row] = original;
}

/// Colored Pieri rule: every color receives its own strip of size `m[i]`.
pub fn pieri(shape: &ColoredPartition, m: &[usize], mode: PieriMode) -> Result<Vec<ColoredPartition>> {
    if m.len() != shape.colors() {
        return Err(Error::ColorCountMismatch { expected: shape.colors(), got: m.len() });
    }
    let per_color: Vec<Vec<Partition>> = shape
        .components()
        .iter()
        .zip(m)
        .map(|(p, &k)| pieri_single(p, k, mode))
        .collect();
    let mut out = vec![Vec::new()];
    for options in &per_color {
        let mut next = Vec::with_capacity(out.len() * options.len());
        for prefix in &out {
            for choice in options {
                let mut v: Vec<Partition> = Vec::clone(prefix);
                v.push(choice.clone());
                next.push(v);
            }
        }
        out = next;
    }
    let mut result: Vec<ColoredPartition> = out.into_iter().map(ColoredPartition::new).collect::<Result<_>>()?;
    result.sort();
    Ok(result)
}

/// `c^λ̲_{μ̲ν̲} = ∏_i c^{λ^(i)}_{μ^(i) ν^(i)}`.
pub fn colored_lr(outer: &ColoredPartition, inner: &ColoredPartition, content: &ColoredPartition) -> Result<u64> {
    let r = outer.colors();
    inner.check_colors(r)?;
    content.check_colors(r)?;
    Ok((0..r)
        .map(|i| lr_coeff(outer.component(i), inner.component(i), content.component(i)))
        .product())
}

/// The coefficient vector of a Schur expansion as integers, for callers that
/// know the expansion is integral.
pub fn integral_coefficients(f: &SymFunc) -> Result<Vec<(Partition, u64)>> {
    f.coeffs()
        .iter()
        .filter(|(_, c)| !c.is_zero())
        .map(|(p, c)| Ok((p.clone(), rational_to_count(c)?)))
        .collect()
}
