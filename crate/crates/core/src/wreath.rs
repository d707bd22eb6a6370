//! Symmetric functions attached to a wreath product `Γ ≀ S_n`, and its
//! character table.
//!
//! The ring is `Q[p_k(γ) : k >= 1, γ ∈ Γ*]`. Elements are stored in one of
//! three bases indexed by colored partitions:
//!
//! * [`WreathBasis::CharPower`]: `p_ρ̲ = ∏_i p_{ρ^(i)}(γ^(i))`, colors are
//!   irreducible characters. All arithmetic happens here; these power sums
//!   are fixed by complex conjugation, so the sesquilinear form is diagonal
//!   with rational weights `z_ρ̲ = ∏ z_{ρ^(i)}`.
//! * [`WreathBasis::ClassPower`]: `P_ρ̲ = ∏_j p_{ρ^(j)}(c_j)`, colors are
//!   conjugacy classes, with `p_k(c) = Σ_γ γ(c^{-1}) p_k(γ)`.
//! * [`WreathBasis::Schur`]: `S_λ̲ = ∏_i s_{λ^(i)}`, each factor a Schur
//!   function in the power sums of its own color.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::cyclotomic::{Cyclotomic, CyclotomicDoc};
use crate::error::{Error, Result};
use crate::group::GroupData;
use crate::lr::colored_lr;
use crate::partition::{colored_partitions_of, ColoredPartition, Partition};
use crate::symfunc::{Basis, SymAlgebra, SymFunc};
use crate::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum WreathBasis {
    CharPower,
    ClassPower,
    Schur,
}

impl fmt::Display for WreathBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            WreathBasis::CharPower => "p",
            WreathBasis::ClassPower => "P",
            WreathBasis::Schur => "S",
        })
    }
}

impl std::str::FromStr for WreathBasis {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "p" => Ok(WreathBasis::CharPower),
            "P" => Ok(WreathBasis::ClassPower),
            "S" => Ok(WreathBasis::Schur),
            other => Err(Error::Parse(format!("unknown wreath basis `{other}` (expected p, P or S)"))),
        }
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct WreathSymFunc {
    group: Arc<GroupData>,
    degree: usize,
    basis: WreathBasis,
    coeffs: BTreeMap<ColoredPartition, Cyclotomic>,
}

impl WreathSymFunc {
    pub fn zero(group: Arc<GroupData>, basis: WreathBasis, degree: usize) -> Self {
        WreathSymFunc { group, degree, basis, coeffs: BTreeMap::new() }
    }

    pub fn basis_element(group: Arc<GroupData>, basis: WreathBasis, index: ColoredPartition) -> Result<Self> {
        index.check_colors(group.rank())?;
        let mut f = WreathSymFunc::zero(group, basis, index.weight());
        f.coeffs.insert(index, Cyclotomic::one());
        Ok(f)
    }

    pub fn from_terms(
        group: Arc<GroupData>,
        basis: WreathBasis,
        degree: usize,
        terms: impl IntoIterator<Item = (ColoredPartition, Cyclotomic)>,
    ) -> Result<Self> {
        let r = group.rank();
        let mut f = WreathSymFunc::zero(group, basis, degree);
        for (cp, c) in terms {
            cp.check_colors(r)?;
            if cp.weight() != degree {
                return Err(Error::WeightMismatch(cp.weight(), degree));
            }
            f.add_term(cp, &c);
        }
        Ok(f)
    }

    fn add_term(&mut self, cp: ColoredPartition, c: &Cyclotomic) {
        if c.is_zero() {
            return;
        }
        match self.coeffs.get_mut(&cp) {
            Some(slot) => {
                *slot = &*slot + c;
                if slot.is_zero() {
                    self.coeffs.remove(&cp);
                }
            }
            None => {
                self.coeffs.insert(cp, c.clone());
            }
        }
    }

    pub fn group(&self) -> &GroupData {
        &self.group
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn basis(&self) -> WreathBasis {
        self.basis
    }

    pub fn coeffs(&self) -> &BTreeMap<ColoredPartition, Cyclotomic> {
        &self.coeffs
    }

    pub fn coefficient(&self, cp: &ColoredPartition) -> Cyclotomic {
        self.coeffs.get(cp).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn scale(&self, c: &Cyclotomic) -> Self {
        let mut out = WreathSymFunc::zero(self.group.clone(), self.basis, self.degree);
        for (cp, x) in &self.coeffs {
            out.add_term(cp.clone(), &(x * c));
        }
        out
    }

    pub fn add(&self, other: &WreathSymFunc) -> Result<Self> {
        if self.group != other.group {
            return Err(Error::GroupMismatch);
        }
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
            for (cp, c) in &other.coeffs {
                out.add_term(cp.clone(), c);
            }
        }
        Ok(out)
    }

    /// True when every coefficient is rational.
    pub fn is_rational(&self) -> bool {
        self.coeffs.values().all(|c| c.to_rational().is_some())
    }
}

impl fmt::Display for WreathSymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        let exponent = self.group.exponent();
        for (k, (cp, c)) in self.coeffs.iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            let text = c.render_at(exponent);
            if text != "1" {
                if c.to_rational().is_some() {
                    write!(f, "{text}*")?;
                } else {
                    write!(f, "({text})*")?;
                }
            }
            write!(f, "{}[{cp}]", self.basis)?;
        }
        Ok(())
    }
}

impl fmt::Debug for WreathSymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "WreathSymFunc({}, deg {}: {self})", self.group.name(), self.degree)
    }
}

/// A class function on `Γ ≀ S_n`, keyed by class-indexed colored partitions.
/// Classes missing from the map take the value zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassFunction {
    degree: usize,
    values: BTreeMap<ColoredPartition, Cyclotomic>,
}

impl ClassFunction {
    pub fn new(group: &GroupData, degree: usize, values: BTreeMap<ColoredPartition, Cyclotomic>) -> Result<Self> {
        for cp in values.keys() {
            cp.check_colors(group.rank())?;
            if cp.weight() != degree {
                return Err(Error::WeightMismatch(cp.weight(), degree));
            }
        }
        Ok(ClassFunction { degree, values })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn value(&self, class: &ColoredPartition) -> Cyclotomic {
        self.values.get(class).cloned().unwrap_or_default()
    }

    pub fn values(&self) -> &BTreeMap<ColoredPartition, Cyclotomic> {
        &self.values
    }
}

/// Character table of `Γ ≀ S_n`: rows are irreducibles indexed by colored
/// partitions over `Γ*`, columns are classes indexed by colored partitions
/// over `Γ_*`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterTable {
    pub group: String,
    pub n: usize,
    pub rows: Vec<ColoredPartition>,
    pub cols: Vec<ColoredPartition>,
    pub entries: Vec<Vec<Cyclotomic>>,
}

/// JSON form of a [`CharacterTable`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CharacterTableDoc {
    pub group: String,
    pub n: usize,
    pub rows: Vec<String>,
    pub cols: Vec<String>,
    pub entries: Vec<Vec<CyclotomicDoc>>,
}

impl CharacterTable {
    pub fn to_doc(&self) -> Result<CharacterTableDoc> {
        Ok(CharacterTableDoc {
            group: self.group.clone(),
            n: self.n,
            rows: self.rows.iter().map(ToString::to_string).collect(),
            cols: self.cols.iter().map(ToString::to_string).collect(),
            entries: self
                .entries
                .iter()
                .map(|row| row.iter().map(Cyclotomic::to_doc).collect::<Result<_>>())
                .collect::<Result<_>>()?,
        })
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string(&self.to_doc()?)?)
    }

    /// Aligned plain-text table, column headers are class labels.
    pub fn render_text(&self, exponent: u32) -> String {
        let cells: Vec<Vec<String>> = self
            .entries
            .iter()
            .map(|row| row.iter().map(|c| c.render_at(exponent)).collect())
            .collect();
        let label_width = self.rows.iter().map(|r| r.to_string().len()).max().unwrap_or(0);
        let widths: Vec<usize> = (0..self.cols.len())
            .map(|j| {
                cells
                    .iter()
                    .map(|row| row[j].chars().count())
                    .chain(std::iter::once(self.cols[j].to_string().len()))
                    .max()
                    .unwrap_or(0)
            })
            .collect();
        let mut out = format!("{:label_width$}", "");
        for (j, col) in self.cols.iter().enumerate() {
            out.push_str(&format!("  {:>w$}", col.to_string(), w = widths[j]));
        }
        out.push('\n');
        for (i, row) in self.rows.iter().enumerate() {
            out.push_str(&format!("{:label_width$}", row.to_string()));
            for (j, cell) in cells[i].iter().enumerate() {
                let pad = widths[j] - cell.chars().count();
                out.push_str(&format!("  {}{cell}", " ".repeat(pad)));
            }
            out.push('\n');
        }
        out
    }

    /// Row `i` as a class function.
    pub fn character(&self, i: usize) -> ClassFunction {
        ClassFunction {
            degree: self.n,
            values: self.cols.iter().cloned().zip(self.entries[i].iter().cloned()).collect(),
        }
    }
}

/// The wreath-product ring over a fixed group.
#[derive(Clone, Debug)]
pub struct WreathRing {
    group: Arc<GroupData>,
    sym: Arc<SymAlgebra>,
}

impl WreathRing {
    pub fn new(group: GroupData) -> Self {
        Self::with_algebra(group, SymAlgebra::shared())
    }

    pub fn with_algebra(group: GroupData, sym: Arc<SymAlgebra>) -> Self {
        WreathRing { group: Arc::new(group), sym }
    }

    pub fn group(&self) -> &GroupData {
        &self.group
    }

    pub fn group_arc(&self) -> Arc<GroupData> {
        self.group.clone()
    }

    pub fn rank(&self) -> usize {
        self.group.rank()
    }

    pub fn colored_partitions(&self, n: usize) -> Vec<ColoredPartition> {
        colored_partitions_of(n, self.rank()).expect("group rank is positive")
    }

    fn check_group(&self, f: &WreathSymFunc) -> Result<()> {
        if !Arc::ptr_eq(&self.group, &f.group) && *self.group != *f.group {
            return Err(Error::GroupMismatch);
        }
        Ok(())
    }

    /// `z_ρ̲ = ∏_i z_{ρ^(i)}`, the weight of `p_ρ̲` in the inner product.
    pub fn small_z(&self, cp: &ColoredPartition) -> BigInt {
        cp.components().iter().map(Partition::z_value).product()
    }

    /// `Z_ρ̲ = ∏_j z_{ρ^(j)} ζ_{c_j}^{l(ρ^(j))}`, the centralizer order of the
    /// class of type `ρ̲`.
    pub fn big_z(&self, class_type: &ColoredPartition) -> Result<BigInt> {
        class_type.check_colors(self.rank())?;
        let mut z = BigInt::one();
        for (j, part) in class_type.components().iter().enumerate() {
            let zeta = BigInt::from(self.group.zeta(j)?);
            z *= part.z_value() * num_traits::pow(zeta, part.length());
        }
        Ok(z)
    }

    pub fn power_char(&self, index: ColoredPartition) -> Result<WreathSymFunc> {
        WreathSymFunc::basis_element(self.group.clone(), WreathBasis::CharPower, index)
    }

    pub fn power_class(&self, index: ColoredPartition) -> Result<WreathSymFunc> {
        WreathSymFunc::basis_element(self.group.clone(), WreathBasis::ClassPower, index)
    }

    pub fn schur_element(&self, index: ColoredPartition) -> Result<WreathSymFunc> {
        WreathSymFunc::basis_element(self.group.clone(), WreathBasis::Schur, index)
    }

    /// Replaces each factor `p_k(color j)` by the linear form `Σ_i a_{ji} p_k(color i)`
    /// and expands.
    fn substitute(
        &self,
        f: &WreathSymFunc,
        target: WreathBasis,
        linear: &[Vec<(usize, Cyclotomic)>],
    ) -> WreathSymFunc {
        let r = self.rank();
        let mut out = WreathSymFunc::zero(self.group.clone(), target, f.degree);
        for (cp, coeff) in &f.coeffs {
            let mut acc: BTreeMap<ColoredPartition, Cyclotomic> = BTreeMap::new();
            acc.insert(ColoredPartition::empty(r), coeff.clone());
            for (j, part) in cp.components().iter().enumerate() {
                for &k in part.parts() {
                    let mut next: BTreeMap<ColoredPartition, Cyclotomic> = BTreeMap::new();
                    for (partial, c) in &acc {
                        for (i, a) in &linear[j] {
                            let mut grown = partial.clone();
                            let slot = &mut grown.components_mut()[*i];
                            *slot = slot.union(&Partition::row(k));
                            let value = c * a;
                            let entry = next.entry(grown).or_default();
                            *entry = &*entry + &value;
                        }
                    }
                    next.retain(|_, c| !c.is_zero());
                    acc = next;
                }
            }
            for (cp, c) in acc {
                out.add_term(cp, &c);
            }
        }
        out
    }

    /// `p_k(c_j) = Σ_i γ^(i)(c_j^{-1}) p_k(γ^(i))`, applied to an element of
    /// the class power-sum basis.
    pub fn class_to_char_basis(&self, f: &WreathSymFunc) -> Result<WreathSymFunc> {
        self.check_group(f)?;
        if f.basis != WreathBasis::ClassPower {
            return Err(Error::InvalidInput(format!("expected the P basis, got {}", f.basis)));
        }
        let r = self.rank();
        let linear: Vec<Vec<(usize, Cyclotomic)>> = (0..r)
            .map(|j| {
                let inv = self.group.inverse_class(j);
                (0..r)
                    .map(|i| (i, self.group.character_value(i, inv).clone()))
                    .filter(|(_, a)| !a.is_zero())
                    .collect()
            })
            .collect();
        Ok(self.substitute(f, WreathBasis::CharPower, &linear))
    }

    /// Inverse of [`Self::class_to_char_basis`]:
    /// `p_k(γ) = Σ_c ζ_c^{-1} γ(c) p_k(c)`.
    pub fn char_to_class_basis(&self, f: &WreathSymFunc) -> Result<WreathSymFunc> {
        self.check_group(f)?;
        if f.basis != WreathBasis::CharPower {
            return Err(Error::InvalidInput(format!("expected the p basis, got {}", f.basis)));
        }
        let r = self.rank();
        let zeta_inv: Vec<Rational> = (0..r)
            .map(|s| self.group.zeta(s).map(|z| Rational::new(1.into(), z.into())))
            .collect::<Result<_>>()?;
        let linear: Vec<Vec<(usize, Cyclotomic)>> = (0..r)
            .map(|i| {
                (0..r)
                    .map(|s| (s, self.group.character_value(i, s).scale(&zeta_inv[s])))
                    .filter(|(_, a)| !a.is_zero())
                    .collect()
            })
            .collect();
        Ok(self.substitute(f, WreathBasis::ClassPower, &linear))
    }

    /// `S_λ̲` written in the character power-sum basis.
    pub fn wreath_schur(&self, shape: &ColoredPartition) -> Result<WreathSymFunc> {
        shape.check_colors(self.rank())?;
        let mut acc: Vec<(Vec<Partition>, Rational)> = vec![(Vec::new(), Rational::one())];
        for part in shape.components() {
            let s = SymFunc::basis_element(Basis::S, part.clone());
            let in_p = self.sym.to_basis(&s, Basis::P)?;
            let mut next = Vec::with_capacity(acc.len() * in_p.coeffs().len());
            for (prefix, c) in &acc {
                for (mu, d) in in_p.coeffs() {
                    let mut v = prefix.clone();
                    v.push(mu.clone());
                    next.push((v, c * d));
                }
            }
            acc = next;
        }
        let terms = acc
            .into_iter()
            .map(|(parts, c)| Ok((ColoredPartition::new(parts)?, Cyclotomic::from_rational(c))))
            .collect::<Result<Vec<_>>>()?;
        WreathSymFunc::from_terms(self.group.clone(), WreathBasis::CharPower, shape.weight(), terms)
    }

    /// `S_{λ̲/μ̲} = Σ_ν̲ c^λ̲_{μ̲ν̲} S_ν̲`, in the character power-sum basis.
    pub fn wreath_skew_schur(&self, outer: &ColoredPartition, inner: &ColoredPartition) -> Result<WreathSymFunc> {
        outer.check_colors(self.rank())?;
        inner.check_colors(self.rank())?;
        if !outer.contains(inner)? {
            return Err(Error::ContainmentViolated { outer: outer.to_string(), inner: inner.to_string() });
        }
        let degree = outer.weight() - inner.weight();
        let mut out = WreathSymFunc::zero(self.group.clone(), WreathBasis::CharPower, degree);
        for nu in self.colored_partitions(degree) {
            let c = colored_lr(outer, inner, &nu)?;
            if c == 0 {
                continue;
            }
            let s = self.wreath_schur(&nu)?.scale(&Cyclotomic::from_int(c as i64));
            out = out.add(&s)?;
        }
        Ok(out)
    }

    /// Any basis to the character power-sum basis.
    pub fn to_char_basis(&self, f: &WreathSymFunc) -> Result<WreathSymFunc> {
        self.check_group(f)?;
        match f.basis {
            WreathBasis::CharPower => Ok(f.clone()),
            WreathBasis::ClassPower => self.class_to_char_basis(f),
            WreathBasis::Schur => {
                let mut out = WreathSymFunc::zero(self.group.clone(), WreathBasis::CharPower, f.degree);
                for (cp, c) in &f.coeffs {
                    out = out.add(&self.wreath_schur(cp)?.scale(c))?;
                }
                Ok(out)
            }
        }
    }

    pub fn to_basis(&self, f: &WreathSymFunc, target: WreathBasis) -> Result<WreathSymFunc> {
        if f.basis == target {
            self.check_group(f)?;
            return Ok(f.clone());
        }
        let p = self.to_char_basis(f)?;
        match target {
            WreathBasis::CharPower => Ok(p),
            WreathBasis::ClassPower => self.char_to_class_basis(&p),
            WreathBasis::Schur => {
                // The S basis is orthonormal, so coefficients are inner products.
                let mut out = WreathSymFunc::zero(self.group.clone(), WreathBasis::Schur, f.degree);
                for cp in self.colored_partitions(f.degree) {
                    let c = self.sesqui_inner(&p, &self.wreath_schur(&cp)?)?;
                    out.add_term(cp, &c);
                }
                Ok(out)
            }
        }
    }

    /// `<f, g> = Σ_λ̲ c_λ̲ conj(d_λ̲) z_λ̲` over the character power-sum basis;
    /// linear in `f`, conjugate-linear in `g`.
    pub fn sesqui_inner(&self, f: &WreathSymFunc, g: &WreathSymFunc) -> Result<Cyclotomic> {
        self.check_group(f)?;
        self.check_group(g)?;
        if f.degree != g.degree {
            return Ok(Cyclotomic::zero());
        }
        let fp = self.to_char_basis(f)?;
        let gp = self.to_char_basis(g)?;
        Ok(inner_char_basis(self, &fp, &gp))
    }

    /// Product, returned in the character power-sum basis.
    pub fn multiply(&self, f: &WreathSymFunc, g: &WreathSymFunc) -> Result<WreathSymFunc> {
        let fp = self.to_char_basis(f)?;
        let gp = self.to_char_basis(g)?;
        let mut out = WreathSymFunc::zero(self.group.clone(), WreathBasis::CharPower, f.degree + g.degree);
        for (a, ca) in &fp.coeffs {
            for (b, cb) in &gp.coeffs {
                let parts = a.components().iter().zip(b.components()).map(|(x, y)| x.union(y)).collect();
                out.add_term(ColoredPartition::new(parts)?, &(ca * cb));
            }
        }
        Ok(out)
    }

    /// `χ^λ̲(ρ̲) = <S_λ̲, P_ρ̲>`: `irrep` is indexed by characters of `Γ`,
    /// `class_type` by its conjugacy classes.
    pub fn character(&self, irrep: &ColoredPartition, class_type: &ColoredPartition) -> Result<Cyclotomic> {
        if irrep.weight() != class_type.weight() {
            return Err(Error::WeightMismatch(irrep.weight(), class_type.weight()));
        }
        let s = self.wreath_schur(irrep)?;
        let p = self.class_to_char_basis(&self.power_class(class_type.clone())?)?;
        self.sesqui_inner(&s, &p)
    }

    pub fn character_table(&self, n: usize) -> Result<CharacterTable> {
        let labels = self.colored_partitions(n);
        let schur: Vec<WreathSymFunc> = labels.iter().map(|l| self.wreath_schur(l)).collect::<Result<_>>()?;
        let power: Vec<WreathSymFunc> = labels
            .iter()
            .map(|l| self.class_to_char_basis(&self.power_class(l.clone())?))
            .collect::<Result<_>>()?;
        let exponent = self.group.exponent();
        let entries: Vec<Vec<Cyclotomic>> = schur
            .par_iter()
            .map(|s| {
                power
                    .iter()
                    .map(|p| {
                        let value = inner_char_basis(self, s, p);
                        value.lift(exponent).unwrap_or(value)
                    })
                    .collect()
            })
            .collect();
        Ok(CharacterTable {
            group: self.group.name().to_string(),
            n,
            rows: labels.clone(),
            cols: labels,
            entries,
        })
    }

    /// `n! ∏_i d_i^{|λ^(i)|} / h(λ^(i))`.
    pub fn dimension(&self, irrep: &ColoredPartition) -> Result<BigInt> {
        irrep.check_colors(self.rank())?;
        let degrees = self.group.degrees();
        let n = irrep.weight();
        let mut num: BigInt = (1..=n).map(BigInt::from).product();
        let mut den = BigInt::one();
        for (i, part) in irrep.components().iter().enumerate() {
            num *= num_traits::pow(BigInt::from(degrees[i]), part.weight());
            den *= part.hook_product();
        }
        if !(&num % &den).is_zero() {
            return Err(Error::Internal(format!("dimension of {irrep} is {num}/{den}, not an integer")));
        }
        Ok(num / den)
    }

    /// Identity class of `Γ ≀ S_n`: `(1^n)` on the identity class of `Γ`.
    pub fn identity_class(&self, n: usize) -> ColoredPartition {
        ColoredPartition::single(self.rank(), 0, Partition::column(n))
    }

    /// `ch(f) = Σ_ρ̲ f(ρ̲) Z_ρ̲^{-1} P_ρ̲`, returned in the character power-sum
    /// basis.
    pub fn frobenius_ch(&self, f: &ClassFunction) -> Result<WreathSymFunc> {
        let mut out = WreathSymFunc::zero(self.group.clone(), WreathBasis::ClassPower, f.degree);
        for (class_type, value) in &f.values {
            class_type.check_colors(self.rank())?;
            let z = Rational::from_integer(self.big_z(class_type)?);
            out.add_term(class_type.clone(), &value.scale(&z.recip()));
        }
        self.class_to_char_basis(&out)
    }

    /// `Σ_ρ̲ Z_ρ̲^{-1} f(ρ̲) conj(g(ρ̲))`.
    pub fn class_inner(&self, f: &ClassFunction, g: &ClassFunction) -> Result<Cyclotomic> {
        if f.degree != g.degree {
            return Ok(Cyclotomic::zero());
        }
        let mut total = Cyclotomic::zero();
        for (class_type, a) in &f.values {
            if let Some(b) = g.values.get(class_type) {
                let z = Rational::from_integer(self.big_z(class_type)?);
                total = total + (a * &b.conj()).scale(&z.recip());
            }
        }
        Ok(total)
    }
}

fn inner_char_basis(ring: &WreathRing, f: &WreathSymFunc, g: &WreathSymFunc) -> Cyclotomic {
    let mut total = Cyclotomic::zero();
    for (cp, c) in &f.coeffs {
        if let Some(d) = g.coeffs.get(cp) {
            let z = Rational::from_integer(ring.small_z(cp));
            total = total + (c * &d.conj()).scale(&z);
        }
    }
    total
}
