//! Sparse polynomials in a fixed number of commuting variables with exact
//! rational coefficients.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::Rational;

pub type Exponent = Vec<u32>;

#[derive(Clone, PartialEq, Eq)]
pub struct SymPolynomial {
    vars: usize,
    terms: BTreeMap<Exponent, Rational>,
}

impl SymPolynomial {
    pub fn zero(vars: usize) -> Self {
        SymPolynomial { vars, terms: BTreeMap::new() }
    }

    pub fn one(vars: usize) -> Self {
        Self::monomial(vec![0; vars], Rational::one())
    }

    pub fn monomial(exponent: Exponent, coeff: Rational) -> Self {
        let vars = exponent.len();
        let mut p = SymPolynomial::zero(vars);
        p.add_term(exponent, coeff);
        p
    }

    /// `x_i` (0-based).
    pub fn variable(vars: usize, i: usize) -> Self {
        let mut e = vec![0; vars];
        e[i] = 1;
        Self::monomial(e, Rational::one())
    }

    pub fn variable_count(&self) -> usize {
        self.vars
    }

    pub fn terms(&self) -> &BTreeMap<Exponent, Rational> {
        &self.terms
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, exponent: &[u32]) -> Rational {
        self.terms.get(exponent).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add_term(&mut self, exponent: Exponent, coeff: Rational) {
        assert_eq!(exponent.len(), self.vars, "exponent length must match variable count");
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(exponent) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &SymPolynomial) -> SymPolynomial {
        assert_eq!(self.vars, other.vars);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, factor: &Rational) -> SymPolynomial {
        if factor.is_zero() {
            return SymPolynomial::zero(self.vars);
        }
        SymPolynomial {
            vars: self.vars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c * factor)).collect(),
        }
    }

    pub fn mul(&self, other: &SymPolynomial) -> SymPolynomial {
        assert_eq!(self.vars, other.vars);
        let mut out = SymPolynomial::zero(self.vars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Exponent = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1 * c2);
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> SymPolynomial {
        (0..k).fold(SymPolynomial::one(self.vars), |acc, _| acc.mul(self))
    }

    /// Invariance under every transposition of adjacent variables, which
    /// generate the full symmetric group.
    pub fn is_symmetric(&self) -> bool {
        (0..self.vars.saturating_sub(1)).all(|i| {
            self.terms.iter().all(|(e, c)| {
                let mut swapped = e.clone();
                swapped.swap(i, i + 1);
                self.terms.get(&swapped) == Some(c)
            })
        })
    }

    /// Total degree when homogeneous.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut degrees = self.terms.keys().map(|e| e.iter().sum::<u32>());
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }
}

impl fmt::Display for SymPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        // Highest exponent vector first, matching the usual leading-term order.
        for (k, (e, c)) in self.terms.iter().rev().enumerate() {
            let negative = c < &Rational::zero();
            if k > 0 {
                f.write_str(if negative { " - " } else { " + " })?;
            } else if negative {
                f.write_str("-")?;
            }
            let abs = if negative { -c.clone() } else { c.clone() };
            let constant = e.iter().all(|&x| x == 0);
            if !abs.is_one() || constant {
                write!(f, "{abs}")?;
                if !constant {
                    f.write_str("*")?;
                }
            }
            let mut first = true;
            for (i, &x) in e.iter().enumerate() {
                if x == 0 {
                    continue;
                }
                if !first {
                    f.write_str("*")?;
                }
                first = false;
                write!(f, "x{}", i + 1)?;
                if x > 1 {
                    write!(f, "^{x}")?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for SymPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SymPolynomial[{}]({self})", self.vars)
    }
}

/// Calls `visit` with every distinct permutation of `items`, in
/// lexicographically increasing order.
pub(crate) fn for_each_distinct_permutation(items: &[u32], mut visit: impl FnMut(&[u32])) {
    let mut current = items.to_vec();
    current.sort_unstable();
    loop {
        visit(&current);
        // Standard next-permutation step.
        let Some(i) = (1..current.len()).rev().find(|&i| current[i - 1] < current[i]) else {
            return;
        };
        let pivot = i - 1;
        let j = (i..current.len()).rev().find(|&j| current[j] > current[pivot]).unwrap();
        current.swap(pivot, j);
        current[i..].reverse();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    #[test]
    fn binomial_square() {
        let s = SymPolynomial::variable(2, 0).add(&SymPolynomial::variable(2, 1));
        let sq = s.pow(2);
        assert_eq!(sq.coefficient(&[1, 1]), int(2));
        assert_eq!(sq.term_count(), 3);
        assert!(sq.is_symmetric());
        assert_eq!(sq.homogeneous_degree(), Some(2));
        assert_eq!(sq.to_string(), "x1^2 + 2*x1*x2 + x2^2");
    }

    #[test]
    fn cancellation_removes_terms() {
        let x = SymPolynomial::variable(2, 0);
        let d = x.add(&x.scale(&int(-1)));
        assert!(d.is_zero());
        assert!(!SymPolynomial::variable(2, 0).is_symmetric());
    }

    #[test]
    fn distinct_permutations() {
        let mut seen = Vec::new();
        for_each_distinct_permutation(&[2, 1, 1], |p| seen.push(p.to_vec()));
        assert_eq!(seen, vec![vec![1, 1, 2], vec![1, 2, 1], vec![2, 1, 1]]);
        let mut count = 0;
        for_each_distinct_permutation(&[], |_| count += 1);
        assert_eq!(count, 1);
    }
}
