//! Coefficient rings for truncated series: exact rationals and sparse
//! polynomials in two markers `q`, `t` with rational coefficients.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Operations a truncated series needs from its coefficients.
pub trait Coeff: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn scale(&self, r: &BigRational) -> Self;
    /// Multiplicative inverse when one exists in the ring.
    fn inverse(&self) -> Option<Self>;
    fn from_rational(r: BigRational) -> Self;

    fn from_i64(v: i64) -> Self {
        Self::from_rational(BigRational::from_integer(BigInt::from(v)))
    }

    fn is_one(&self) -> bool {
        *self == Self::one()
    }
}

impl Coeff for BigRational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn scale(&self, r: &BigRational) -> Self {
        self * r
    }
    fn inverse(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
    fn from_rational(r: BigRational) -> Self {
        r
    }
}

/// Integer value of a rational, if it is one.
pub fn as_integer(r: &BigRational) -> Option<BigInt> {
    r.is_integer().then(|| r.to_integer())
}

pub fn rational_to_f64(r: &BigRational) -> f64 {
    r.to_f64()
        .unwrap_or_else(|| r.numer().to_f64().unwrap_or(f64::NAN) / r.denom().to_f64().unwrap_or(f64::NAN))
}

pub fn int(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

/// Sparse polynomial in `q` and `t`. Keys are `(deg_q, deg_t)`; zero terms
/// are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct QtPoly {
    terms: BTreeMap<(u32, u32), BigRational>,
}

impl QtPoly {
    pub fn monomial(c: BigRational, q: u32, t: u32) -> Self {
        let mut terms = BTreeMap::new();
        if !Zero::is_zero(&c) {
            terms.insert((q, t), c);
        }
        Self { terms }
    }

    pub fn q() -> Self {
        Self::monomial(int(1), 1, 0)
    }

    pub fn t() -> Self {
        Self::monomial(int(1), 0, 1)
    }

    pub fn terms(&self) -> &BTreeMap<(u32, u32), BigRational> {
        &self.terms
    }

    pub fn coeff(&self, q: u32, t: u32) -> BigRational {
        self.terms.get(&(q, t)).cloned().unwrap_or_else(Zero::zero)
    }

    fn insert_add(&mut self, key: (u32, u32), c: BigRational) {
        let slot = self.terms.entry(key).or_insert_with(Zero::zero);
        *slot += c;
        if Zero::is_zero(slot) {
            self.terms.remove(&key);
        }
    }

    /// Exact division by `q^a t^b`, failing when some term is not divisible.
    pub fn div_monomial(&self, a: u32, b: u32) -> Option<Self> {
        let mut terms = BTreeMap::new();
        for (&(i, j), c) in &self.terms {
            if i < a || j < b {
                return None;
            }
            terms.insert((i - a, j - b), c.clone());
        }
        Some(Self { terms })
    }

    /// Builds from integer counts keyed by `(deg_q, deg_t)`.
    pub fn from_counts<I: IntoIterator<Item = ((u32, u32), u64)>>(counts: I) -> Self {
        let mut p = Self::default();
        for (k, c) in counts {
            p.insert_add(k, BigRational::from_integer(BigInt::from(c)));
        }
        p
    }

    pub fn eval_at_one(&self) -> BigRational {
        self.terms.values().fold(Zero::zero(), |acc: BigRational, c| acc + c)
    }
}

impl Coeff for QtPoly {
    fn zero() -> Self {
        Self::default()
    }
    fn one() -> Self {
        Self::monomial(int(1), 0, 0)
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.insert_add(*k, c.clone());
        }
        out
    }
    fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.insert_add(*k, -c.clone());
        }
        out
    }
    fn mul(&self, other: &Self) -> Self {
        let mut out = Self::default();
        for (&(a, b), c) in &self.terms {
            for (&(i, j), d) in &other.terms {
                out.insert_add((a + i, b + j), c * d);
            }
        }
        out
    }
    fn neg(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(k, c)| (*k, -c.clone())).collect(),
        }
    }
    fn scale(&self, r: &BigRational) -> Self {
        if Zero::is_zero(r) {
            return Self::default();
        }
        Self {
            terms: self.terms.iter().map(|(k, c)| (*k, c * r)).collect(),
        }
    }
    fn inverse(&self) -> Option<Self> {
        if self.terms.len() == 1 {
            if let Some(c) = self.terms.get(&(0, 0)) {
                return Some(Self::monomial(c.recip(), 0, 0));
            }
        }
        None
    }
    fn from_rational(r: BigRational) -> Self {
        Self::monomial(r, 0, 0)
    }
}

impl fmt::Display for QtPoly {
    /// Terms by total degree, then by `q`-degree descending: `1 + q`,
    /// `q + t^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut keys: Vec<_> = self.terms.keys().copied().collect();
        keys.sort_by_key(|&(a, b)| (a + b, std::cmp::Reverse(a)));
        for (idx, key) in keys.iter().enumerate() {
            let c = &self.terms[key];
            let negative = c.is_negative();
            let mag = c.abs();
            if idx == 0 {
                if negative {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if negative { " - " } else { " + " })?;
            }
            let mono = monomial_text(key.0, key.1);
            if mono.is_empty() {
                write!(f, "{mag}")?;
            } else if One::is_one(&mag) {
                f.write_str(&mono)?;
            } else {
                write!(f, "{mag}{mono}")?;
            }
        }
        Ok(())
    }
}

fn monomial_text(a: u32, b: u32) -> String {
    let part = |name: &str, e: u32| match e {
        0 => String::new(),
        1 => name.to_string(),
        _ => format!("{name}^{e}"),
    };
    format!("{}{}", part("q", a), part("t", b))
}
