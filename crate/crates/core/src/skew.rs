//! Skew diagrams `λ/μ` and their colored versions.

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::{ColoredPartition, Partition};

#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StripType {
    Horizontal,
    Vertical,
    Both,
    Neither,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::ContainmentViolated { outer: outer.to_string(), inner: inner.to_string() });
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn straight(shape: Partition) -> Self {
        SkewShape { outer: shape, inner: Partition::empty() }
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn size(&self) -> usize {
        self.outer.weight() - self.inner.weight()
    }

    pub fn rows(&self) -> usize {
        self.outer.length()
    }

    /// Column range `[start, end)` of row `i`.
    pub fn row_span(&self, i: usize) -> (usize, usize) {
        (self.inner.part(i), self.outer.part(i))
    }

    pub fn row_len(&self, i: usize) -> usize {
        self.outer.part(i) - self.inner.part(i)
    }

    pub fn contains_cell(&self, row: usize, col: usize) -> bool {
        let (start, end) = self.row_span(row);
        start <= col && col < end
    }

    /// Cells `(row, col)` in row-major order, 0-based.
    pub fn cells(&self) -> Vec<(usize, usize)> {
        (0..self.rows())
            .flat_map(|i| {
                let (start, end) = self.row_span(i);
                (start..end).map(move |j| (i, j))
            })
            .collect()
    }

    pub fn conjugate(&self) -> SkewShape {
        SkewShape { outer: self.outer.conjugate(), inner: self.inner.conjugate() }
    }

    /// Maximal edge-connected pieces, each shifted to an independent skew
    /// shape, listed top to bottom.
    pub fn components(&self) -> Vec<SkewShape> {
        let cells = self.cells();
        let index_of = |r: usize, c: usize| cells.binary_search(&(r, c)).ok();
        let mut label = vec![usize::MAX; cells.len()];
        let mut groups: Vec<Vec<(usize, usize)>> = Vec::new();
        for start in 0..cells.len() {
            if label[start] != usize::MAX {
                continue;
            }
            let id = groups.len();
            let mut group = Vec::new();
            let mut queue = VecDeque::from([start]);
            label[start] = id;
            while let Some(k) = queue.pop_front() {
                let (r, c) = cells[k];
                group.push((r, c));
                let mut neighbours = vec![(r + 1, c), (r, c + 1)];
                if r > 0 {
                    neighbours.push((r - 1, c));
                }
                if c > 0 {
                    neighbours.push((r, c - 1));
                }
                for (nr, nc) in neighbours {
                    if let Some(nk) = index_of(nr, nc) {
                        if label[nk] == usize::MAX {
                            label[nk] = id;
                            queue.push_back(nk);
                        }
                    }
                }
            }
            group.sort_unstable();
            groups.push(group);
        }
        groups.iter().map(|g| Self::reroot(g)).collect()
    }

    fn reroot(cells: &[(usize, usize)]) -> SkewShape {
        let first_row = cells[0].0;
        let last_row = cells[cells.len() - 1].0;
        let mut outer = Vec::new();
        let mut inner = Vec::new();
        for row in first_row..=last_row {
            let cols = cells.iter().filter(|c| c.0 == row).map(|c| c.1);
            let lo = cols.clone().min().expect("component rows are contiguous");
            let hi = cols.max().unwrap();
            inner.push(lo);
            outer.push(hi + 1);
        }
        let shift = *inner.last().unwrap();
        let outer = outer.into_iter().map(|x| x - shift).collect();
        let inner = inner.into_iter().map(|x| x - shift).collect();
        SkewShape {
            outer: Partition::new(outer).expect("component outer shape"),
            inner: Partition::new(inner).expect("component inner shape"),
        }
    }

    pub fn strip_type(&self) -> StripType {
        let horizontal = {
            let (o, i) = (self.outer.conjugate(), self.inner.conjugate());
            (0..o.length()).all(|k| o.part(k) - i.part(k) <= 1)
        };
        let vertical = (0..self.rows()).all(|k| self.row_len(k) <= 1);
        match (horizontal, vertical) {
            (true, true) => StripType::Both,
            (true, false) => StripType::Horizontal,
            (false, true) => StripType::Vertical,
            (false, false) => StripType::Neither,
        }
    }

    pub fn is_horizontal_strip(&self) -> bool {
        matches!(self.strip_type(), StripType::Horizontal | StripType::Both)
    }

    pub fn is_vertical_strip(&self) -> bool {
        matches!(self.strip_type(), StripType::Vertical | StripType::Both)
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.outer, self.inner)
    }
}

impl fmt::Debug for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})/({})", self.outer, self.inner)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColoredSkewShape {
    outer: ColoredPartition,
    inner: ColoredPartition,
}

impl ColoredSkewShape {
    pub fn new(outer: ColoredPartition, inner: ColoredPartition) -> Result<Self> {
        if !outer.contains(&inner)? {
            return Err(Error::ContainmentViolated { outer: outer.to_string(), inner: inner.to_string() });
        }
        Ok(ColoredSkewShape { outer, inner })
    }

    pub fn outer(&self) -> &ColoredPartition {
        &self.outer
    }

    pub fn inner(&self) -> &ColoredPartition {
        &self.inner
    }

    pub fn colors(&self) -> usize {
        self.outer.colors()
    }

    pub fn component(&self, color: usize) -> SkewShape {
        SkewShape {
            outer: self.outer.component(color).clone(),
            inner: self.inner.component(color).clone(),
        }
    }

    pub fn per_color(&self) -> Vec<SkewShape> {
        (0..self.colors()).map(|i| self.component(i)).collect()
    }

    pub fn size(&self) -> usize {
        self.outer.weight() - self.inner.weight()
    }
}
