//! Finite groups given by class data and an exact character table.
//!
//! Rows of the table are the irreducible characters `γ^(0..r-1)` with
//! `γ^(0)` trivial; columns are the conjugacy classes `c_0..c_{r-1}` with
//! `c_0` the identity class.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::cyclotomic::{Cyclotomic, CyclotomicDoc};
use crate::error::{Error, Result};
use crate::Rational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassInfo {
    pub label: String,
    pub size: u64,
    /// Index of the class of inverses.
    pub inverse: usize,
}

/// Unvalidated group data. [`GroupData`] is only built from a `RawGroup`
/// that passes [`RawGroup::validate`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RawGroup {
    pub name: String,
    pub order: u64,
    pub exponent: u32,
    pub classes: Vec<ClassInfo>,
    pub table: Vec<Vec<Cyclotomic>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    NoClasses,
    TableShape { rows: usize, expected: usize },
    InverseOutOfRange { class: usize },
    ClassSizeSum { sum: u64, order: u64 },
    IdentityClass { size: u64 },
    InverseNotInvolution { class: usize },
    IdentityNotSelfInverse,
    SizeDoesNotDivideOrder { class: usize },
    TrivialCharacter { class: usize },
    Degree { character: usize },
    InverseNotConjugate { character: usize, class: usize },
    RowOrthogonality { i: usize, j: usize },
    ColumnOrthogonality { s: usize, t: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::NoClasses => write!(f, "no conjugacy classes"),
            Violation::TableShape { rows, expected } => {
                write!(f, "character table has {rows} rows or a ragged row, expected {expected}x{expected}")
            }
            Violation::InverseOutOfRange { class } => write!(f, "inverse of class {class} is out of range"),
            Violation::ClassSizeSum { sum, order } => write!(f, "class sizes sum to {sum}, order is {order}"),
            Violation::IdentityClass { size } => write!(f, "class 0 must be the identity (size 1), has size {size}"),
            Violation::InverseNotInvolution { class } => write!(f, "inverse map is not an involution at class {class}"),
            Violation::IdentityNotSelfInverse => write!(f, "identity class is not self-inverse"),
            Violation::SizeDoesNotDivideOrder { class } => write!(f, "size of class {class} does not divide the order"),
            Violation::TrivialCharacter { class } => write!(f, "row 0 is not the trivial character at class {class}"),
            Violation::Degree { character } => write!(f, "degree of character {character} is not a positive integer"),
            Violation::InverseNotConjugate { character, class } => write!(
                f,
                "character {character} at the inverse of class {class} is not the complex conjugate"
            ),
            Violation::RowOrthogonality { i, j } => write!(f, "row orthogonality fails for ({i},{j})"),
            Violation::ColumnOrthogonality { s, t } => write!(f, "column orthogonality fails for ({s},{t})"),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.violations.is_empty() {
            return f.write_str("valid");
        }
        for (k, v) in self.violations.iter().enumerate() {
            if k > 0 {
                f.write_str("; ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl RawGroup {
    pub fn rank(&self) -> usize {
        self.classes.len()
    }

    /// Checks the class data and both orthogonality relations exactly.
    pub fn validate(&self) -> ValidationReport {
        let mut v = Vec::new();
        let r = self.classes.len();
        if r == 0 {
            v.push(Violation::NoClasses);
            return ValidationReport { violations: v };
        }
        if self.table.len() != r || self.table.iter().any(|row| row.len() != r) {
            v.push(Violation::TableShape { rows: self.table.len(), expected: r });
            return ValidationReport { violations: v };
        }
        for (j, c) in self.classes.iter().enumerate() {
            if c.inverse >= r {
                v.push(Violation::InverseOutOfRange { class: j });
            }
        }
        if !v.is_empty() {
            return ValidationReport { violations: v };
        }

        let sum: u64 = self.classes.iter().map(|c| c.size).sum();
        if sum != self.order {
            v.push(Violation::ClassSizeSum { sum, order: self.order });
        }
        if self.classes[0].size != 1 {
            v.push(Violation::IdentityClass { size: self.classes[0].size });
        }
        if self.classes[0].inverse != 0 {
            v.push(Violation::IdentityNotSelfInverse);
        }
        for (j, c) in self.classes.iter().enumerate() {
            if self.classes[c.inverse].inverse != j {
                v.push(Violation::InverseNotInvolution { class: j });
            }
            if c.size == 0 || !self.order.is_multiple_of(c.size) {
                v.push(Violation::SizeDoesNotDivideOrder { class: j });
            }
        }
        let one = Cyclotomic::one();
        for (s, x) in self.table[0].iter().enumerate() {
            if *x != one {
                v.push(Violation::TrivialCharacter { class: s });
            }
        }
        for (i, row) in self.table.iter().enumerate() {
            let positive = row[0].to_integer().is_some_and(|d| d > 0.into());
            if !positive {
                v.push(Violation::Degree { character: i });
            }
        }
        for (i, row) in self.table.iter().enumerate() {
            for (s, c) in self.classes.iter().enumerate() {
                if row[c.inverse] != row[s].conj() {
                    v.push(Violation::InverseNotConjugate { character: i, class: s });
                }
            }
        }

        // ζ_s = |G| / |c_s|, kept rational so that malformed sizes still
        // produce a report rather than a panic.
        let zeta: Vec<Rational> = self
            .classes
            .iter()
            .map(|c| Rational::new(self.order.into(), c.size.max(1).into()))
            .collect();
        let star = |i: usize, s: usize| &self.table[i][self.classes[s].inverse];
        for i in 0..r {
            for j in 0..r {
                let total: Cyclotomic = (0..r)
                    .map(|s| (&self.table[i][s] * star(j, s)).scale(&zeta[s].recip()))
                    .sum();
                let expected = if i == j { Cyclotomic::one() } else { Cyclotomic::zero() };
                if total != expected {
                    v.push(Violation::RowOrthogonality { i, j });
                }
            }
        }
        for (s, zeta_s) in zeta.iter().enumerate() {
            for t in 0..r {
                let total: Cyclotomic = (0..r).map(|i| &self.table[i][s] * star(i, t)).sum();
                let expected = if s == t { Cyclotomic::from_rational(zeta_s.clone()) } else { Cyclotomic::zero() };
                if total != expected {
                    v.push(Violation::ColumnOrthogonality { s, t });
                }
            }
        }
        ValidationReport { violations: v }
    }
}

/// Validated group data, immutable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupData {
    raw: RawGroup,
}

impl GroupData {
    pub fn new(raw: RawGroup) -> Result<Self> {
        let report = raw.validate();
        if !report.is_valid() {
            return Err(Error::ValidationFailed(report));
        }
        Ok(GroupData { raw })
    }

    pub fn to_raw(&self) -> RawGroup {
        self.raw.clone()
    }

    pub fn name(&self) -> &str {
        &self.raw.name
    }

    pub fn order(&self) -> u64 {
        self.raw.order
    }

    pub fn exponent(&self) -> u32 {
        self.raw.exponent
    }

    /// Number of classes, equal to the number of irreducible characters.
    pub fn rank(&self) -> usize {
        self.raw.classes.len()
    }

    pub fn classes(&self) -> &[ClassInfo] {
        &self.raw.classes
    }

    pub fn inverse_class(&self, s: usize) -> usize {
        self.raw.classes[s].inverse
    }

    /// `γ^(i)(c_s)`.
    pub fn character_value(&self, i: usize, s: usize) -> &Cyclotomic {
        &self.raw.table[i][s]
    }

    pub fn table(&self) -> &[Vec<Cyclotomic>] {
        &self.raw.table
    }

    /// Degrees `d_i = γ^(i)(c_0)`.
    pub fn degrees(&self) -> Vec<u64> {
        use num_traits::ToPrimitive;
        self.raw
            .table
            .iter()
            .map(|row| row[0].to_integer().and_then(|d| d.to_u64()).expect("validated degree"))
            .collect()
    }

    /// Centralizer order `ζ_s = |G| / |c_s|`.
    pub fn zeta(&self, s: usize) -> Result<u64> {
        let size = self
            .raw
            .classes
            .get(s)
            .ok_or_else(|| Error::InvalidInput(format!("class index {s} out of range")))?
            .size;
        if size == 0 || !self.raw.order.is_multiple_of(size) {
            return Err(Error::MalformedGroup(format!(
                "class size {size} does not divide the order {}",
                self.raw.order
            )));
        }
        Ok(self.raw.order / size)
    }

    pub fn to_doc(&self) -> Result<GroupDoc> {
        Ok(GroupDoc {
            name: self.raw.name.clone(),
            order: self.raw.order,
            exponent: self.raw.exponent,
            classes: self
                .raw
                .classes
                .iter()
                .map(|c| ClassDoc { label: c.label.clone(), size: c.size, inverse: Some(c.inverse) })
                .collect(),
            table: self
                .raw
                .table
                .iter()
                .map(|row| row.iter().map(Cyclotomic::to_doc).collect::<Result<_>>())
                .collect::<Result<_>>()?,
        })
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string(&self.to_doc()?)?)
    }
}

/// Standalone validation entry point.
pub fn validate(group: &RawGroup) -> ValidationReport {
    group.validate()
}

/// JSON description of a group: class data plus character table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupDoc {
    pub name: String,
    pub order: u64,
    pub exponent: u32,
    pub classes: Vec<ClassDoc>,
    pub table: Vec<Vec<CyclotomicDoc>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ClassDoc {
    pub label: String,
    pub size: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub inverse: Option<usize>,
}

/// Parses and validates a JSON group description. Missing inverse-class entries
/// are inferred: `c_{j*}` is the unique class whose column is the complex
/// conjugate of column `j`.
pub fn load_group(text: &str) -> Result<GroupData> {
    let doc: GroupDoc = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    group_from_doc(&doc)
}

pub fn group_from_doc(doc: &GroupDoc) -> Result<GroupData> {
    let r = doc.classes.len();
    let table: Vec<Vec<Cyclotomic>> = doc
        .table
        .iter()
        .map(|row| row.iter().map(Cyclotomic::from_doc).collect::<Result<_>>())
        .collect::<Result<_>>()?;
    let needs_inference = doc.classes.iter().any(|c| c.inverse.is_none());
    if needs_inference && (table.len() != r || table.iter().any(|row| row.len() != r)) {
        return Err(Error::Parse(format!("character table must be {r}x{r} to infer inverse classes")));
    }
    let mut classes = Vec::with_capacity(r);
    for (j, c) in doc.classes.iter().enumerate() {
        let inverse = match c.inverse {
            Some(k) => k,
            None => infer_inverse(&table, j)?,
        };
        classes.push(ClassInfo { label: c.label.clone(), size: c.size, inverse });
    }
    GroupData::new(RawGroup {
        name: doc.name.clone(),
        order: doc.order,
        exponent: doc.exponent,
        classes,
        table,
    })
}

fn infer_inverse(table: &[Vec<Cyclotomic>], j: usize) -> Result<usize> {
    let r = table.len();
    let conj: Vec<Cyclotomic> = table.iter().map(|row| row[j].conj()).collect();
    let matches: Vec<usize> = (0..r).filter(|&k| (0..r).all(|i| table[i][k] == conj[i])).collect();
    match matches.as_slice() {
        [k] => Ok(*k),
        [] => Err(Error::Parse(format!("no class has the conjugate column of class {j}"))),
        _ => Err(Error::Parse(format!("inverse of class {j} is ambiguous: candidates {matches:?}"))),
    }
}

/// The cyclic group of order `r`, classes `g^0..g^{r-1}`, `γ^(i)(g^j) = ζ_r^{ij}`.
pub fn cyclic(r: u32) -> Result<GroupData> {
    if r == 0 {
        return Err(Error::InvalidInput("cyclic group order must be positive".into()));
    }
    let n = r as usize;
    let classes = (0..n)
        .map(|j| ClassInfo { label: format!("g^{j}"), size: 1, inverse: (n - j) % n })
        .collect();
    let table = (0..n)
        .map(|i| (0..n).map(|j| Cyclotomic::root_of_unity(r, (i * j) as i64)).collect())
        .collect();
    GroupData::new(RawGroup {
        name: if r == 1 { "trivial".into() } else { format!("z{r}") },
        order: r as u64,
        exponent: r,
        classes,
        table,
    })
}

fn symmetric3() -> Result<GroupData> {
    let c = |label: &str, size| ClassInfo { label: label.into(), size, inverse: 0 };
    let mut classes = vec![c("1", 1), c("(12)", 3), c("(123)", 2)];
    classes[1].inverse = 1;
    classes[2].inverse = 2;
    let row = |xs: [i64; 3]| xs.iter().map(|&x| Cyclotomic::from_int(x)).collect();
    GroupData::new(RawGroup {
        name: "s3".into(),
        order: 6,
        exponent: 6,
        classes,
        table: vec![row([1, 1, 1]), row([1, -1, 1]), row([2, 0, -1])],
    })
}

pub const BUILTIN_NAMES: [&str; 5] = ["trivial", "z2", "z3", "z4", "s3"];

pub fn builtin(name: &str) -> Result<GroupData> {
    match name {
        "trivial" => cyclic(1),
        "z2" => cyclic(2),
        "z3" => cyclic(3),
        "z4" => cyclic(4),
        "s3" => symmetric3(),
        other => Err(Error::UnknownGroup(other.to_string())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zeta_values() {
        let z2 = builtin("z2").unwrap();
        assert_eq!(z2.zeta(0).unwrap(), 2);
        assert_eq!(z2.zeta(1).unwrap(), 2);
        let s3 = builtin("s3").unwrap();
        assert_eq!(s3.zeta(1).unwrap(), 2);
        assert_eq!(s3.zeta(0).unwrap(), 6);
    }

    #[test]
    fn builtins_are_valid() {
        for name in BUILTIN_NAMES {
            let g = builtin(name).unwrap();
            assert!(g.to_raw().validate().is_valid(), "{name}");
            let sum: u64 = g.degrees().iter().map(|d| d * d).sum();
            assert_eq!(sum, g.order(), "{name}");
        }
        assert_eq!(builtin("s3").unwrap().degrees(), vec![1, 1, 2]);
        assert_eq!(builtin("trivial").unwrap().table(), &[vec![Cyclotomic::one()]]);
        let z2 = builtin("z2").unwrap();
        assert_eq!(z2.table()[1], vec![Cyclotomic::one(), Cyclotomic::from_int(-1)]);
        assert!(matches!(builtin("a5"), Err(Error::UnknownGroup(_))));
    }

    #[test]
    fn sign_flip_is_reported() {
        let mut raw = builtin("z2").unwrap().to_raw();
        raw.table[1][1] = Cyclotomic::one();
        let report = raw.validate();
        assert!(!report.is_valid());
        assert!(report.violations.contains(&Violation::RowOrthogonality { i: 0, j: 1 }));
        assert!(matches!(GroupData::new(raw), Err(Error::ValidationFailed(_))));
    }

    #[test]
    fn json_document_round_trip() {
        let z2 = builtin("z2").unwrap();
        let json = z2.to_json().unwrap();
        assert_eq!(load_group(&json).unwrap(), z2);
        let z3 = builtin("z3").unwrap();
        assert_eq!(load_group(&z3.to_json().unwrap()).unwrap(), z3);
    }

    #[test]
    fn inverse_inference() {
        let text = r#"{"name":"z3","order":3,"exponent":3,
            "classes":[{"label":"1","size":1},{"label":"g","size":1},{"label":"g2","size":1}],
            "table":[[1,1,1],
                     [1,{"conductor":3,"coeffs":[[0,1],[1,1]]},{"conductor":3,"coeffs":[[-1,1],[-1,1]]}],
                     [1,{"conductor":3,"coeffs":[[-1,1],[-1,1]]},{"conductor":3,"coeffs":[[0,1],[1,1]]}]]}"#;
        let g = load_group(text).unwrap();
        assert_eq!(g.inverse_class(1), 2);
        let z3 = builtin("z3").unwrap();
        assert_eq!(g.table(), z3.table());
        assert!((0..3).all(|s| g.inverse_class(s) == z3.inverse_class(s)));

        let ambiguous = r#"{"name":"bad","order":2,"exponent":1,
            "classes":[{"label":"1","size":1},{"label":"g","size":1}],
            "table":[[1,1],[1,1]]}"#;
        assert!(matches!(load_group(ambiguous), Err(Error::Parse(_))));
    }

    #[test]
    fn wrong_order_fails_validation() {
        let mut doc = builtin("z2").unwrap().to_doc().unwrap();
        doc.order = 3;
        let err = group_from_doc(&doc).unwrap_err();
        let Error::ValidationFailed(report) = err else { panic!("expected validation failure") };
        assert!(report.violations.contains(&Violation::ClassSizeSum { sum: 2, order: 3 }));
    }

    #[test]
    fn malformed_documents() {
        assert!(matches!(load_group("{"), Err(Error::Parse(_))));
        assert!(matches!(load_group(r#"{"name":"x"}"#), Err(Error::Parse(_))));
    }
}
