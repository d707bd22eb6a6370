//! Integer partitions and colored partitions.
//!
//! A [`Partition`] stores its nonzero parts in weakly decreasing order. The
//! total order on partitions is reverse lexicographic, so sorting ascending
//! gives `(4) < (3,1) < (2,2) < (2,1,1) < (1,1,1,1)`, which is also the order
//! produced by [`partitions_of`].

use std::cmp::Ordering;
use std::fmt;
use std::ops::Index;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Builds a partition from parts that are already weakly decreasing.
    /// Trailing zeros are dropped.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "parts {parts:?} are not weakly decreasing"
            )));
        }
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!(
                "zero part inside {parts:?}"
            )));
        }
        Ok(Partition { parts })
    }

    /// Drops zeros and sorts the remaining entries in decreasing order.
    pub fn normalize(raw: &[i64]) -> Result<Self> {
        if let Some(bad) = raw.iter().find(|&&x| x < 0) {
            return Err(Error::InvalidPartition(format!("negative entry {bad}")));
        }
        let mut parts: Vec<usize> = raw.iter().filter(|&&x| x > 0).map(|&x| x as usize).collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition { parts })
    }

    /// Single row `(n)`; the empty partition when `n == 0`.
    pub fn row(n: usize) -> Self {
        if n == 0 {
            Partition::empty()
        } else {
            Partition { parts: vec![n] }
        }
    }

    /// Single column `(1^n)`.
    pub fn column(n: usize) -> Self {
        Partition { parts: vec![1; n] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn length(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Part `i` (0-based), zero past the length.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// `m_i`, the number of parts equal to `i`.
    pub fn multiplicity(&self, i: usize) -> usize {
        self.parts.iter().filter(|&&p| p == i).count()
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.part(0);
        let parts = (1..=width)
            .map(|k| self.parts.iter().take_while(|&&p| p >= k).count())
            .collect();
        Partition { parts }
    }

    /// Dominance `self ⊴ other`, defined only at equal weight.
    pub fn dominated_by(&self, other: &Partition) -> Result<bool> {
        let (a, b) = (self.weight(), other.weight());
        if a != b {
            return Err(Error::IncomparableWeights(a, b));
        }
        let len = self.length().max(other.length());
        let mut lhs = 0;
        let mut rhs = 0;
        for i in 0..len {
            lhs += self.part(i);
            rhs += other.part(i);
            if lhs > rhs {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Diagram containment: `self_i >= other_i` for every row.
    pub fn contains(&self, other: &Partition) -> bool {
        other.length() <= self.length() && (0..other.length()).all(|i| self.parts[i] >= other.parts[i])
    }

    /// `z_λ = ∏ i^{m_i} m_i!`, the centralizer order of cycle type λ.
    pub fn z_value(&self) -> BigInt {
        let mut z = BigInt::one();
        let mut i = 0;
        while i < self.parts.len() {
            let part = self.parts[i];
            let mut m = 0usize;
            while i < self.parts.len() && self.parts[i] == part {
                i += 1;
                m += 1;
                z *= BigInt::from(part) * BigInt::from(m);
            }
        }
        z
    }

    pub fn hook_length(&self, row: usize, col: usize) -> usize {
        let conj = self.conjugate();
        (self.parts[row] - col - 1) + (conj.parts[col] - row - 1) + 1
    }

    pub fn hook_product(&self) -> BigInt {
        let conj = self.conjugate();
        let mut h = BigInt::one();
        for (row, &len) in self.parts.iter().enumerate() {
            for col in 0..len {
                h *= BigInt::from((len - col - 1) + (conj.parts[col] - row - 1) + 1);
            }
        }
        h
    }

    /// Appends the parts of `other` and re-sorts.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts: Vec<usize> = self.parts.iter().chain(other.parts.iter()).copied().collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    /// Parts padded with zeros (or truncated) to exactly `len` entries.
    pub fn padded(&self, len: usize) -> Vec<usize> {
        (0..len).map(|i| self.part(i)).collect()
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        other.parts.cmp(&self.parts)
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Index<usize> for Partition {
    type Output = usize;

    fn index(&self, index: usize) -> &usize {
        self.parts.get(index).unwrap_or(&0)
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Vec<usize> {
        p.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return f.write_str("-");
        }
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Accepts `4,3,2,2,1`; the empty partition is `-` or the empty string.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "-" || s == "∅" {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad partition part `{t}` in `{s}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

/// All partitions of `n` in reverse lexicographic order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn go(remaining: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition { parts: prefix.clone() });
            return;
        }
        for part in (1..=remaining.min(max)).rev() {
            prefix.push(part);
            go(remaining - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// Checked variant of [`partitions_of`] for signed input.
pub fn partitions_of_checked(n: i64) -> Result<Vec<Partition>> {
    if n < 0 {
        return Err(Error::InvalidInput(format!("cannot partition {n}")));
    }
    Ok(partitions_of(n as usize))
}

/// A partition-valued function on a color set `{0, .., r-1}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<Partition>", into = "Vec<Partition>")]
pub struct ColoredPartition {
    components: Vec<Partition>,
}

impl ColoredPartition {
    pub fn new(components: Vec<Partition>) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::InvalidInput("a colored partition needs at least one color".into()));
        }
        Ok(ColoredPartition { components })
    }

    pub fn empty(r: usize) -> Self {
        assert!(r >= 1, "color count must be positive");
        ColoredPartition { components: vec![Partition::empty(); r] }
    }

    /// `part` in color `color`, empty elsewhere.
    pub fn single(r: usize, color: usize, part: Partition) -> Self {
        let mut cp = ColoredPartition::empty(r);
        cp.components[color] = part;
        cp
    }

    pub fn colors(&self) -> usize {
        self.components.len()
    }

    pub fn components(&self) -> &[Partition] {
        &self.components
    }

    pub fn component(&self, i: usize) -> &Partition {
        &self.components[i]
    }

    pub fn weight(&self) -> usize {
        self.components.iter().map(Partition::weight).sum()
    }

    pub fn contains(&self, other: &ColoredPartition) -> Result<bool> {
        self.check_colors(other.colors())?;
        Ok(self.components.iter().zip(&other.components).all(|(a, b)| a.contains(b)))
    }

    pub fn conjugate(&self) -> ColoredPartition {
        ColoredPartition { components: self.components.iter().map(Partition::conjugate).collect() }
    }

    pub(crate) fn check_colors(&self, r: usize) -> Result<()> {
        if self.colors() != r {
            return Err(Error::ColorCountMismatch { expected: r, got: self.colors() });
        }
        Ok(())
    }

    pub(crate) fn components_mut(&mut self) -> &mut [Partition] {
        &mut self.components
    }
}

impl TryFrom<Vec<Partition>> for ColoredPartition {
    type Error = Error;

    fn try_from(components: Vec<Partition>) -> Result<Self> {
        ColoredPartition::new(components)
    }
}

impl From<ColoredPartition> for Vec<Partition> {
    fn from(cp: ColoredPartition) -> Vec<Partition> {
        cp.components
    }
}

impl fmt::Display for ColoredPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.components.iter().enumerate() {
            if i > 0 {
                f.write_str(";")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for ColoredPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

impl FromStr for ColoredPartition {
    type Err = Error;

    /// Semicolon-separated components, `-` for an empty one: `2,1;-;1`.
    fn from_str(s: &str) -> Result<Self> {
        let components = s.split(';').map(str::parse).collect::<Result<Vec<_>>>()?;
        ColoredPartition::new(components)
    }
}

/// All `r`-tuples of partitions with total weight `n`, sorted.
pub fn colored_partitions_of(n: usize, r: usize) -> Result<Vec<ColoredPartition>> {
    if r == 0 {
        return Err(Error::InvalidInput("color count must be at least 1".into()));
    }
    let tables: Vec<Vec<Partition>> = (0..=n).map(partitions_of).collect();
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(r);
    fill_colors(n, r, &tables, &mut current, &mut out);
    out.sort();
    Ok(out)
}

fn fill_colors(
    remaining: usize,
    r: usize,
    tables: &[Vec<Partition>],
    current: &mut Vec<Partition>,
    out: &mut Vec<ColoredPartition>,
) {
    if current.len() + 1 == r {
        for p in &tables[remaining] {
            current.push(p.clone());
            out.push(ColoredPartition { components: current.clone() });
            current.pop();
        }
        return;
    }
    for w in 0..=remaining {
        for p in &tables[w] {
            current.push(p.clone());
            fill_colors(remaining - w, r, tables, current, out);
            current.pop();
        }
    }
}
