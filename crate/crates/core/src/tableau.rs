//! Semistandard skew tableaux: validation, enumeration, Kostka numbers and
//! reading words.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::skew::{ColoredSkewShape, SkewShape};

/// Occurrence counts: `counts[i]` is the number of entries equal to `i + 1`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Content {
    counts: Vec<usize>,
}

impl Content {
    pub fn new(mut counts: Vec<usize>) -> Self {
        while counts.last() == Some(&0) {
            counts.pop();
        }
        Content { counts }
    }

    pub fn counts(&self) -> &[usize] {
        &self.counts
    }

    pub fn total(&self) -> usize {
        self.counts.iter().sum()
    }

    /// Largest entry value with a nonzero count.
    pub fn max_entry(&self) -> usize {
        self.counts.len()
    }
}

impl From<&Partition> for Content {
    fn from(p: &Partition) -> Self {
        Content { counts: p.parts().to_vec() }
    }
}

impl From<Vec<usize>> for Content {
    fn from(v: Vec<usize>) -> Self {
        Content::new(v)
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Word(pub Vec<usize>);

impl Word {
    pub fn symbols(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Every prefix has at least as many `i` as `i + 1`, for all `i >= 1`.
    pub fn is_lattice(&self) -> bool {
        is_lattice(&self.0)
    }
}

fn is_lattice(symbols: &[usize]) -> bool {
    let mut seen: Vec<usize> = Vec::new();
    for &s in symbols {
        if s == 0 {
            return false;
        }
        if seen.len() < s {
            seen.resize(s, 0);
        }
        seen[s - 1] += 1;
        if s > 1 && seen[s - 1] > seen[s - 2] {
            return false;
        }
    }
    true
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.0.iter().any(|&s| s > 9) { "," } else { "" };
        for (i, s) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(sep)?;
            }
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({self})")
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "TableauDoc", into = "TableauDoc")]
pub struct Tableau {
    shape: SkewShape,
    rows: Vec<Vec<usize>>,
}

/// JSON form: `{"outer":[...],"inner":[...],"rows":[[...],...]}`.
#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TableauDoc {
    outer: Vec<usize>,
    inner: Vec<usize>,
    rows: Vec<Vec<usize>>,
}

impl TryFrom<TableauDoc> for Tableau {
    type Error = Error;

    fn try_from(doc: TableauDoc) -> Result<Self> {
        let shape = SkewShape::new(Partition::new(doc.outer)?, Partition::new(doc.inner)?)?;
        Tableau::new(shape, doc.rows)
    }
}

impl From<Tableau> for TableauDoc {
    fn from(t: Tableau) -> Self {
        TableauDoc {
            outer: t.shape.outer().parts().to_vec(),
            inner: t.shape.inner().parts().to_vec(),
            rows: t.rows,
        }
    }
}

fn check_coverage(shape: &SkewShape, rows: &[Vec<usize>]) -> Result<()> {
    if rows.len() != shape.rows() {
        return Err(Error::MalformedFilling(format!(
            "{} rows supplied for a shape with {} rows",
            rows.len(),
            shape.rows()
        )));
    }
    for (i, row) in rows.iter().enumerate() {
        if row.len() != shape.row_len(i) {
            return Err(Error::MalformedFilling(format!(
                "row {i} has {} entries, shape {shape} needs {}",
                row.len(),
                shape.row_len(i)
            )));
        }
        if row.contains(&0) {
            return Err(Error::MalformedFilling(format!("row {i} contains a non-positive entry")));
        }
    }
    Ok(())
}

/// Checks the semistandard conditions for a filling given row by row (only
/// the cells of the skew shape, left to right).
pub fn validate_ssyt(shape: &SkewShape, rows: &[Vec<usize>]) -> Result<bool> {
    check_coverage(shape, rows)?;
    for (i, row) in rows.iter().enumerate() {
        if row.windows(2).any(|w| w[0] > w[1]) {
            return Ok(false);
        }
        if i == 0 {
            continue;
        }
        let (start, _) = shape.row_span(i);
        for (k, &value) in row.iter().enumerate() {
            let col = start + k;
            if shape.contains_cell(i - 1, col) {
                let above = rows[i - 1][col - shape.row_span(i - 1).0];
                if above >= value {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

impl Tableau {
    pub fn new(shape: SkewShape, rows: Vec<Vec<usize>>) -> Result<Self> {
        if !validate_ssyt(&shape, &rows)? {
            return Err(Error::MalformedFilling(format!("filling of {shape} is not semistandard")));
        }
        Ok(Tableau { shape, rows })
    }

    fn from_flat(shape: &SkewShape, flat: &[usize]) -> Self {
        let mut rows = Vec::with_capacity(shape.rows());
        let mut k = 0;
        for i in 0..shape.rows() {
            let len = shape.row_len(i);
            rows.push(flat[k..k + len].to_vec());
            k += len;
        }
        Tableau { shape: shape.clone(), rows }
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn entry(&self, row: usize, col: usize) -> Option<usize> {
        let (start, end) = self.shape.row_span(row);
        (start <= col && col < end).then(|| self.rows[row][col - start])
    }

    pub fn content(&self) -> Content {
        let mut counts = Vec::new();
        for &v in self.rows.iter().flatten() {
            if counts.len() < v {
                counts.resize(v, 0);
            }
            counts[v - 1] += 1;
        }
        Content::new(counts)
    }

    /// Rows read right to left, top row first.
    pub fn word(&self) -> Word {
        Word(self.rows.iter().flat_map(|r| r.iter().rev().copied()).collect())
    }
}

impl fmt::Debug for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Tableau({:?}, {:?})", self.shape, self.rows)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ColoredTableau {
    pub components: Vec<Tableau>,
}

impl ColoredTableau {
    /// True when the word of every color is a lattice permutation.
    pub fn is_lattice(&self) -> bool {
        self.components.iter().all(|t| t.word().is_lattice())
    }
}

/// Row-major backtracking over the cells of a skew shape.
struct Filler {
    left: Vec<Option<usize>>,
    above: Vec<Option<usize>>,
    max_entry: usize,
}

impl Filler {
    fn new(shape: &SkewShape, max_entry: usize) -> Self {
        let cells = shape.cells();
        let position = |r: usize, c: usize| cells.binary_search(&(r, c)).ok();
        let left = cells
            .iter()
            .map(|&(r, c)| if c > 0 { position(r, c - 1) } else { None })
            .collect();
        let above = cells
            .iter()
            .map(|&(r, c)| if r > 0 { position(r - 1, c) } else { None })
            .collect();
        Filler { left, above, max_entry }
    }

    fn lower_bound(&self, k: usize, flat: &[usize]) -> usize {
        let from_left = self.left[k].map_or(1, |l| flat[l]);
        let from_above = self.above[k].map_or(1, |a| flat[a] + 1);
        from_left.max(from_above)
    }

    /// Visits every filling in lexicographic order of the row-major entry
    /// sequence. `remaining`, when present, is consumed as a content budget.
    fn run(&self, k: usize, flat: &mut Vec<usize>, remaining: &mut Option<Vec<usize>>, visit: &mut dyn FnMut(&[usize])) {
        if k == self.left.len() {
            visit(flat);
            return;
        }
        for v in self.lower_bound(k, flat)..=self.max_entry {
            if let Some(budget) = remaining.as_mut() {
                if budget[v - 1] == 0 {
                    continue;
                }
                budget[v - 1] -= 1;
            }
            flat.push(v);
            self.run(k + 1, flat, remaining, visit);
            flat.pop();
            if let Some(budget) = remaining.as_mut() {
                budget[v - 1] += 1;
            }
        }
    }
}

fn check_content(shape: &SkewShape, content: &Content) -> Result<()> {
    if content.total() != shape.size() {
        return Err(Error::ContentSizeMismatch { content: content.total(), cells: shape.size() });
    }
    Ok(())
}

fn for_each_with_content(shape: &SkewShape, content: &Content, visit: &mut dyn FnMut(&[usize])) -> Result<()> {
    check_content(shape, content)?;
    let filler = Filler::new(shape, content.max_entry());
    let mut budget = Some(content.counts().to_vec());
    filler.run(0, &mut Vec::with_capacity(shape.size()), &mut budget, visit);
    Ok(())
}

/// All semistandard tableaux of `shape` with the given content.
pub fn enumerate_ssyt(shape: &SkewShape, content: &Content) -> Result<Vec<Tableau>> {
    let mut out = Vec::new();
    for_each_with_content(shape, content, &mut |flat| out.push(Tableau::from_flat(shape, flat)))?;
    Ok(out)
}

/// Calls `visit` with the flat row-major entries of every semistandard
/// filling of `shape` using entries in `1..=max_entry`.
pub fn for_each_bounded_ssyt(shape: &SkewShape, max_entry: usize, mut visit: impl FnMut(&[usize])) {
    let filler = Filler::new(shape, max_entry);
    filler.run(0, &mut Vec::with_capacity(shape.size()), &mut None, &mut visit);
}

pub fn kostka(shape: &SkewShape, content: &Content) -> Result<u64> {
    let mut count = 0u64;
    for_each_with_content(shape, content, &mut |_| count += 1)?;
    Ok(count)
}

/// Number of tableaux of `shape` with `content` whose reading word is a
/// lattice permutation.
pub fn lattice_count(shape: &SkewShape, content: &Content) -> Result<u64> {
    let mut count = 0u64;
    let row_lens: Vec<usize> = (0..shape.rows()).map(|i| shape.row_len(i)).collect();
    let mut word = Vec::with_capacity(shape.size());
    for_each_with_content(shape, content, &mut |flat| {
        word.clear();
        let mut k = 0;
        for &len in &row_lens {
            word.extend(flat[k..k + len].iter().rev());
            k += len;
        }
        if is_lattice(&word) {
            count += 1;
        }
    })?;
    Ok(count)
}

pub fn colored_kostka(shape: &ColoredSkewShape, contents: &[Content]) -> Result<u64> {
    if contents.len() != shape.colors() {
        return Err(Error::ColorCountMismatch { expected: shape.colors(), got: contents.len() });
    }
    let mut product = 1u64;
    for (i, content) in contents.iter().enumerate() {
        product *= kostka(&shape.component(i), content)?;
    }
    Ok(product)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn shape(outer: &str, inner: &str) -> SkewShape {
        SkewShape::new(outer.parse().unwrap(), inner.parse().unwrap()).unwrap()
    }

    fn table2() -> (SkewShape, Vec<Vec<usize>>) {
        let rows = vec![vec![1, 1, 1, 4], vec![2, 3, 3], vec![3, 4], vec![5, 5], vec![6]];
        (shape("4,3,2,2,1", "-"), rows)
    }

    #[test]
    fn table2_is_semistandard() {
        let (s, rows) = table2();
        assert!(validate_ssyt(&s, &rows).unwrap());
        let t = Tableau::new(s, rows).unwrap();
        assert_eq!(t.content(), Content::new(vec![3, 1, 3, 2, 2, 1]));
    }

    #[test]
    fn validate_edge_cases() {
        assert!(validate_ssyt(&shape("1", "-"), &[vec![1]]).unwrap());
        assert!(!validate_ssyt(&shape("1,1", "-"), &[vec![1], vec![1]]).unwrap());
        assert!(matches!(
            validate_ssyt(&shape("2", "-"), &[vec![1]]),
            Err(Error::MalformedFilling(_))
        ));
        assert!(matches!(
            validate_ssyt(&shape("1", "-"), &[vec![1], vec![2]]),
            Err(Error::MalformedFilling(_))
        ));
    }

    #[test]
    fn inner_cells_do_not_constrain() {
        // (2,2)/(1): the cell below the removed corner is unconstrained from above.
        assert!(validate_ssyt(&shape("2,2", "1"), &[vec![2], vec![1, 3]]).unwrap());
    }

    #[test]
    fn enumeration_examples() {
        let ts = enumerate_ssyt(&shape("2,1", "-"), &Content::new(vec![1, 1, 1])).unwrap();
        assert_eq!(ts.len(), 2);
        assert_eq!(ts[0].rows(), &[vec![1, 2], vec![3]]);
        assert_eq!(ts[1].rows(), &[vec![1, 3], vec![2]]);
        assert_eq!(enumerate_ssyt(&shape("4", "-"), &Content::new(vec![4])).unwrap().len(), 1);
        assert!(enumerate_ssyt(&shape("1,1", "-"), &Content::new(vec![2])).unwrap().is_empty());
        assert!(matches!(
            enumerate_ssyt(&shape("2", "-"), &Content::new(vec![1])),
            Err(Error::ContentSizeMismatch { .. })
        ));
    }

    #[test]
    fn kostka_examples() {
        assert_eq!(kostka(&shape("2,1", "-"), &Content::new(vec![1, 1, 1])).unwrap(), 2);
        assert_eq!(kostka(&shape("3,2", "-"), &Content::new(vec![3, 2])).unwrap(), 1);
        assert_eq!(kostka(&shape("1,1", "-"), &Content::new(vec![2])).unwrap(), 0);
        assert_eq!(kostka(&shape("2", "-"), &Content::new(vec![1, 1, 0, 0])).unwrap(), 1);
    }

    #[test]
    fn colored_kostka_examples() {
        let empty = ColoredSkewShape::new("-;-".parse().unwrap(), "-;-".parse().unwrap()).unwrap();
        assert_eq!(colored_kostka(&empty, &[Content::default(), Content::default()]).unwrap(), 1);
        let s = ColoredSkewShape::new("2,1;1".parse().unwrap(), "-;-".parse().unwrap()).unwrap();
        let contents = [Content::new(vec![1, 1, 1]), Content::new(vec![1])];
        assert_eq!(colored_kostka(&s, &contents).unwrap(), 2);
        let s = ColoredSkewShape::new("1,1;1".parse().unwrap(), "-;-".parse().unwrap()).unwrap();
        assert_eq!(colored_kostka(&s, &[Content::new(vec![2]), Content::new(vec![1])]).unwrap(), 0);
        assert!(matches!(colored_kostka(&s, &[Content::new(vec![2])]), Err(Error::ColorCountMismatch { .. })));
    }

    #[test]
    fn reading_words() {
        let s = shape("6,6,6,6", "4,2");
        let rows = vec![vec![5, 5], vec![1, 1, 6, 7], vec![2, 3, 3, 3, 7, 8], vec![4, 4, 6, 7, 8, 9]];
        let t = Tableau::new(s, rows).unwrap();
        assert_eq!(t.word().to_string(), "557611873332987644");

        let row = Tableau::new(shape("3", "-"), vec![vec![1, 2, 3]]).unwrap();
        assert_eq!(row.word().symbols(), &[3, 2, 1]);
        let col = Tableau::new(shape("1,1", "-"), vec![vec![1], vec![2]]).unwrap();
        assert_eq!(col.word().symbols(), &[1, 2]);
    }

    #[test]
    fn lattice_words() {
        assert!(Word(vec![1, 1, 2, 1]).is_lattice());
        assert!(!Word(vec![2, 1]).is_lattice());
        assert!(!Word(vec![1, 2, 2]).is_lattice());
        assert!(Word(vec![]).is_lattice());
        assert!(!Word(vec![1, 3]).is_lattice());
    }

    #[test]
    fn colored_lattice() {
        let column = |k: usize| {
            Tableau::new(SkewShape::straight(Partition::column(k)), (1..=k).map(|v| vec![v]).collect()).unwrap()
        };
        assert!(ColoredTableau { components: vec![] }.is_lattice());
        assert!(ColoredTableau { components: vec![column(3), column(2)] }.is_lattice());
        let bad = Tableau::new(shape("2", "-"), vec![vec![1, 2]]).unwrap();
        assert!(!ColoredTableau { components: vec![column(2), bad] }.is_lattice());
    }

    #[test]
    fn json_form() {
        let (s, rows) = table2();
        let t = Tableau::new(s, rows).unwrap();
        let json = serde_json::to_string(&t).unwrap();
        assert_eq!(json, r#"{"outer":[4,3,2,2,1],"inner":[],"rows":[[1,1,1,4],[2,3,3],[3,4],[5,5],[6]]}"#);
        let back: Tableau = serde_json::from_str(&json).unwrap();
        assert_eq!(back, t);
        let bad = r#"{"outer":[2],"inner":[],"rows":[[2,1]]}"#;
        assert!(serde_json::from_str::<Tableau>(bad).is_err());
    }
}
