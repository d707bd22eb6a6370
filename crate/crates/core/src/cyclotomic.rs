//! Exact arithmetic in cyclotomic fields `Q(ζ_N)`.
//!
//! An element of conductor `N` is stored as its coefficient vector in the
//! power basis `1, ζ_N, .., ζ_N^{φ(N)-1}`, i.e. as a polynomial reduced modulo
//! the `N`-th cyclotomic polynomial `Φ_N`. Operands of different conductors
//! are both lifted to the lcm before combining, so results live at the lcm.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::Rational;

/// Coefficients of `Φ_n`, lowest degree first.
pub fn cyclotomic_polynomial(n: u32) -> Arc<Vec<i64>> {
    assert!(n >= 1, "cyclotomic polynomials are indexed by positive integers");
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<Vec<i64>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(p) = cache.lock().expect("cyclotomic cache poisoned").get(&n) {
        return p.clone();
    }
    // x^n - 1 divided by Φ_d for every proper divisor d of n.
    let mut poly = vec![0i64; n as usize + 1];
    poly[0] = -1;
    poly[n as usize] = 1;
    for d in (1..n).filter(|d| n.is_multiple_of(*d)) {
        poly = divide_monic(&poly, &cyclotomic_polynomial(d));
    }
    let poly = Arc::new(poly);
    cache.lock().expect("cyclotomic cache poisoned").insert(n, poly.clone());
    poly
}

/// Exact quotient of `num` by a monic divisor.
fn divide_monic(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let mut quot = vec![0i64; rem.len() - dd];
    for k in (0..quot.len()).rev() {
        let c = rem[k + dd];
        quot[k] = c;
        if c != 0 {
            for (i, &d) in den.iter().enumerate() {
                rem[k + i] -= c * d;
            }
        }
    }
    debug_assert!(rem.iter().all(|&x| x == 0), "cyclotomic division left a remainder");
    quot
}

pub fn euler_phi(n: u32) -> usize {
    cyclotomic_polynomial(n).len() - 1
}

#[derive(Clone)]
pub struct Cyclotomic {
    conductor: u32,
    coeffs: Vec<Rational>,
}

impl Cyclotomic {
    /// Reduces `Σ raw[k] ζ_N^k` (any length) to canonical form.
    pub fn from_powers(conductor: u32, raw: &[Rational]) -> Self {
        Cyclotomic { conductor, coeffs: reduce(conductor, raw) }
    }

    pub fn from_rational(q: Rational) -> Self {
        Cyclotomic { conductor: 1, coeffs: vec![q] }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(Rational::from_integer(n.into()))
    }

    pub fn zero() -> Self {
        Self::from_int(0)
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    /// `ζ_n^k`.
    pub fn root_of_unity(n: u32, k: i64) -> Self {
        let mut raw = vec![Rational::zero(); n as usize];
        raw[k.rem_euclid(n as i64) as usize] = Rational::one();
        Self::from_powers(n, &raw)
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    /// Power-basis coefficients, length `φ(conductor)`.
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn to_rational(&self) -> Option<Rational> {
        self.coeffs[1..].iter().all(Zero::is_zero).then(|| self.coeffs[0].clone())
    }

    pub fn to_integer(&self) -> Option<BigInt> {
        self.to_rational().filter(|q| q.is_integer()).map(|q| q.to_integer())
    }

    /// Coefficients of `self` viewed at conductor `m`, a multiple of the
    /// current conductor, before reduction.
    fn raw_at(&self, m: u32) -> Vec<Rational> {
        debug_assert_eq!(m % self.conductor, 0);
        let step = (m / self.conductor) as usize;
        let mut raw = vec![Rational::zero(); m as usize];
        for (k, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                raw[(k * step) % m as usize] += c;
            }
        }
        raw
    }

    /// The same element written at conductor `m`.
    pub fn lift(&self, m: u32) -> Result<Cyclotomic> {
        if m == 0 || !m.is_multiple_of(self.conductor) {
            return Err(Error::InvalidInput(format!(
                "cannot lift conductor {} to {m}",
                self.conductor
            )));
        }
        Ok(Self::from_powers(m, &self.raw_at(m)))
    }

    fn common(&self, other: &Cyclotomic) -> u32 {
        self.conductor.lcm(&other.conductor)
    }

    /// Complex conjugate, `ζ^k -> ζ^{-k}`.
    pub fn conj(&self) -> Cyclotomic {
        let n = self.conductor as usize;
        let mut raw = vec![Rational::zero(); n];
        for (k, c) in self.coeffs.iter().enumerate() {
            raw[(n - k) % n] += c;
        }
        Self::from_powers(self.conductor, &raw)
    }

    pub fn scale(&self, q: &Rational) -> Cyclotomic {
        Cyclotomic { conductor: self.conductor, coeffs: self.coeffs.iter().map(|c| c * q).collect() }
    }

    fn zip_with(&self, other: &Cyclotomic, f: impl Fn(&Rational, &Rational) -> Rational) -> Cyclotomic {
        let m = self.common(other);
        let (a, b) = (self.raw_at(m), other.raw_at(m));
        let raw: Vec<Rational> = a.iter().zip(&b).map(|(x, y)| f(x, y)).collect();
        Self::from_powers(m, &raw)
    }

    fn product(&self, other: &Cyclotomic) -> Cyclotomic {
        if self.conductor == other.conductor {
            return Self::from_powers(self.conductor, &convolve(&self.coeffs, &other.coeffs));
        }
        let m = self.common(other);
        let a = reduce(m, &self.raw_at(m));
        let b = reduce(m, &other.raw_at(m));
        Self::from_powers(m, &convolve(&a, &b))
    }

    /// Plain-text rendering with `E(N)` for `ζ_N`, written at conductor `at`.
    pub fn render_at(&self, at: u32) -> String {
        let lifted = self.lift(at).unwrap_or_else(|_| self.clone());
        if let Some(q) = lifted.to_rational() {
            return q.to_string();
        }
        let mut out = String::new();
        for (k, c) in lifted.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let negative = c.is_negative();
            if out.is_empty() {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let abs = c.abs();
            if k == 0 {
                out.push_str(&abs.to_string());
                continue;
            }
            if !abs.is_one() {
                out.push_str(&format!("{abs}*"));
            }
            out.push_str(&format!("E({})", lifted.conductor));
            if k > 1 {
                out.push_str(&format!("^{k}"));
            }
        }
        out
    }

    pub fn to_doc(&self) -> Result<CyclotomicDoc> {
        if let Some(n) = self.to_integer() {
            let n = n.to_i64().ok_or_else(|| Error::InvalidInput(format!("integer {n} does not fit 64 bits")))?;
            return Ok(CyclotomicDoc::Integer(n));
        }
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| match (c.numer().to_i64(), c.denom().to_i64()) {
                (Some(n), Some(d)) => Ok([n, d]),
                _ => Err(Error::InvalidInput(format!("coefficient {c} does not fit 64 bits"))),
            })
            .collect::<Result<_>>()?;
        Ok(CyclotomicDoc::Element { conductor: self.conductor, coeffs })
    }

    pub fn from_doc(doc: &CyclotomicDoc) -> Result<Self> {
        match doc {
            CyclotomicDoc::Integer(n) => Ok(Self::from_int(*n)),
            CyclotomicDoc::Element { conductor, coeffs } => {
                if *conductor == 0 {
                    return Err(Error::Parse("conductor must be positive".into()));
                }
                let raw = coeffs
                    .iter()
                    .map(|&[n, d]| {
                        if d == 0 {
                            Err(Error::Parse("zero denominator in cyclotomic coefficient".into()))
                        } else {
                            Ok(Rational::new(n.into(), d.into()))
                        }
                    })
                    .collect::<Result<Vec<_>>>()?;
                if raw.len() > *conductor as usize {
                    return Err(Error::Parse(format!(
                        "{} coefficients given for conductor {conductor}",
                        raw.len()
                    )));
                }
                Ok(Self::from_powers(*conductor, &raw))
            }
        }
    }
}

/// Serialized form: a bare integer, or `{"conductor":N,"coeffs":[[num,den],..]}`
/// listing the coefficients of `ζ_N^0 .. ζ_N^{φ(N)-1}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum CyclotomicDoc {
    Integer(i64),
    Element { conductor: u32, coeffs: Vec<[i64; 2]> },
}

impl Serialize for Cyclotomic {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_doc().map_err(serde::ser::Error::custom)?.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Cyclotomic {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let doc = CyclotomicDoc::deserialize(deserializer)?;
        Cyclotomic::from_doc(&doc).map_err(serde::de::Error::custom)
    }
}

fn convolve(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    out
}

/// Folds exponents modulo `n`, then reduces modulo `Φ_n`.
fn reduce(n: u32, raw: &[Rational]) -> Vec<Rational> {
    let n_us = n as usize;
    let mut v = vec![Rational::zero(); n_us];
    for (k, c) in raw.iter().enumerate() {
        if !c.is_zero() {
            v[k % n_us] += c;
        }
    }
    let phi = cyclotomic_polynomial(n);
    let deg = phi.len() - 1;
    for top in (deg..n_us).rev() {
        if v[top].is_zero() {
            continue;
        }
        let c = std::mem::replace(&mut v[top], Rational::zero());
        for (i, &p) in phi[..deg].iter().enumerate() {
            if p != 0 {
                v[top - deg + i] -= &c * Rational::from_integer(p.into());
            }
        }
    }
    v.truncate(deg);
    v
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        if self.conductor == other.conductor {
            return self.coeffs == other.coeffs;
        }
        let m = self.common(other);
        reduce(m, &self.raw_at(m)) == reduce(m, &other.raw_at(m))
    }
}

impl Eq for Cyclotomic {}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render_at(self.conductor))
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cyclotomic[{}]({self})", self.conductor)
    }
}

impl Default for Cyclotomic {
    fn default() -> Self {
        Cyclotomic::zero()
    }
}

impl From<Rational> for Cyclotomic {
    fn from(q: Rational) -> Self {
        Cyclotomic::from_rational(q)
    }
}

impl From<i64> for Cyclotomic {
    fn from(n: i64) -> Self {
        Cyclotomic::from_int(n)
    }
}

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;

    fn neg(self) -> Cyclotomic {
        Cyclotomic { conductor: self.conductor, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Neg for Cyclotomic {
    type Output = Cyclotomic;

    fn neg(self) -> Cyclotomic {
        -&self
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $body:expr) => {
        impl $trait<&Cyclotomic> for &Cyclotomic {
            type Output = Cyclotomic;

            fn $method(self, rhs: &Cyclotomic) -> Cyclotomic {
                let f: fn(&Cyclotomic, &Cyclotomic) -> Cyclotomic = $body;
                f(self, rhs)
            }
        }

        impl $trait<Cyclotomic> for Cyclotomic {
            type Output = Cyclotomic;

            fn $method(self, rhs: Cyclotomic) -> Cyclotomic {
                (&self).$method(&rhs)
            }
        }

        impl $trait<&Cyclotomic> for Cyclotomic {
            type Output = Cyclotomic;

            fn $method(self, rhs: &Cyclotomic) -> Cyclotomic {
                (&self).$method(rhs)
            }
        }
    };
}

binop!(Add, add, |a, b| a.zip_with(b, |x, y| x + y));
binop!(Sub, sub, |a, b| a.zip_with(b, |x, y| x - y));
binop!(Mul, mul, |a, b| a.product(b));

impl std::iter::Sum for Cyclotomic {
    fn sum<I: Iterator<Item = Cyclotomic>>(iter: I) -> Self {
        iter.fold(Cyclotomic::zero(), |a, b| a + b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(n: u32, k: i64) -> Cyclotomic {
        Cyclotomic::root_of_unity(n, k)
    }

    #[test]
    fn cyclotomic_polynomials() {
        assert_eq!(*cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(*cyclotomic_polynomial(2), vec![1, 1]);
        assert_eq!(*cyclotomic_polynomial(3), vec![1, 1, 1]);
        assert_eq!(*cyclotomic_polynomial(4), vec![1, 0, 1]);
        assert_eq!(*cyclotomic_polynomial(6), vec![1, -1, 1]);
        assert_eq!(*cyclotomic_polynomial(12), vec![1, 0, -1, 0, 1]);
        assert_eq!(euler_phi(105), 48);
        assert_eq!(cyclotomic_polynomial(105)[7], -2);
    }

    #[test]
    fn roots_of_unity() {
        assert_eq!(z(2, 1), Cyclotomic::from_int(-1));
        assert_eq!(z(3, 3), Cyclotomic::one());
        assert_eq!(z(3, 0) + z(3, 1) + z(3, 2), Cyclotomic::zero());
        assert_eq!(z(4, 1) * z(4, 1), Cyclotomic::from_int(-1));
        assert_eq!(z(3, 1).conj(), z(3, 2));
        assert_eq!(z(6, 2), z(3, 1));
        assert_eq!(z(6, 1) * z(6, 1), z(3, 1));
        assert_ne!(z(4, 1), z(4, 3));
    }

    #[test]
    fn mixed_conductors() {
        // ζ_4 · ζ_3 = ζ_12^{3+4}
        assert_eq!(z(4, 1) * z(3, 1), z(12, 7));
        assert_eq!((z(4, 1) * z(3, 1)).conductor(), 12);
        assert!((z(3, 1) - z(6, 2)).is_zero());
    }

    #[test]
    fn rational_detection() {
        let x = z(3, 1) + z(3, 2);
        assert_eq!(x.to_integer(), Some(BigInt::from(-1)));
        assert_eq!(z(3, 1).to_rational(), None);
        let q = Cyclotomic::from_rational(Rational::new(1.into(), 2.into()));
        assert_eq!(q.to_integer(), None);
    }

    #[test]
    fn documents() {
        let x = z(3, 1);
        let json = serde_json::to_string(&x).unwrap();
        assert_eq!(json, r#"{"conductor":3,"coeffs":[[0,1],[1,1]]}"#);
        let back: Cyclotomic = serde_json::from_str(&json).unwrap();
        assert_eq!(back, x);
        assert_eq!(serde_json::to_string(&Cyclotomic::from_int(-2)).unwrap(), "-2");
        let padded: Cyclotomic = serde_json::from_str(r#"{"conductor":3,"coeffs":[[0,1],[0,1],[1,1]]}"#).unwrap();
        assert_eq!(padded, z(3, 2));
        assert!(serde_json::from_str::<Cyclotomic>(r#"{"conductor":0,"coeffs":[]}"#).is_err());
    }

    #[test]
    fn rendering() {
        assert_eq!(z(3, 1).to_string(), "E(3)");
        assert_eq!(z(3, 2).to_string(), "-1 - E(3)");
        assert_eq!((z(4, 1).scale(&Rational::new(3.into(), 2.into()))).to_string(), "3/2*E(4)");
        assert_eq!(Cyclotomic::from_int(7).render_at(3), "7");
    }
}
