//! Power series truncated at a fixed order, exact over a coefficient ring.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;

use super::ring::{as_integer, Coeff, QtPoly};
use crate::error::{precondition, Result};

/// `c_0 + c_1 x + ... + c_order x^order + O(x^(order+1))`.
#[derive(Debug, Clone, PartialEq)]
pub struct TruncatedSeries<C> {
    coeffs: Vec<C>,
}

pub type Series = TruncatedSeries<BigRational>;
pub type QtSeries = TruncatedSeries<QtPoly>;

impl<C: Coeff> TruncatedSeries<C> {
    /// Pads with zeros or truncates so that exactly `order + 1` terms remain.
    pub fn new(mut coeffs: Vec<C>, order: usize) -> Self {
        coeffs.resize(order + 1, C::zero());
        Self { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Self::new(Vec::new(), order)
    }

    pub fn one(order: usize) -> Self {
        Self::constant(C::one(), order)
    }

    pub fn constant(c: C, order: usize) -> Self {
        Self::new(vec![c], order)
    }

    /// `c x^k`.
    pub fn monomial(c: C, k: usize, order: usize) -> Self {
        let mut coeffs = vec![C::zero(); order + 1];
        if k <= order {
            coeffs[k] = c;
        }
        Self { coeffs }
    }

    pub fn x(order: usize) -> Self {
        Self::monomial(C::one(), 1, order)
    }

    pub fn from_i64s(values: &[i64], order: usize) -> Self {
        Self::new(values.iter().map(|&v| C::from_i64(v)).collect(), order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    /// `[x^n]` of the series.
    pub fn coeff(&self, n: usize) -> &C {
        &self.coeffs[n]
    }

    pub fn truncate(&self, order: usize) -> Self {
        assert!(order <= self.order(), "cannot extend a truncated series");
        Self::new(self.coeffs[..=order].to_vec(), order)
    }

    fn common(&self, other: &Self) -> usize {
        self.order().min(other.order())
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.common(other);
        Self::new((0..=n).map(|i| self.coeffs[i].add(&other.coeffs[i])).collect(), n)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.common(other);
        Self::new((0..=n).map(|i| self.coeffs[i].sub(&other.coeffs[i])).collect(), n)
    }

    pub fn neg(&self) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(C::neg).collect(),
        }
    }

    pub fn scale(&self, r: &BigRational) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|c| c.scale(r)).collect(),
        }
    }

    pub fn mul_coeff(&self, c: &C) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|a| a.mul(c)).collect(),
        }
    }

    pub fn add_constant(&self, c: &C) -> Self {
        let mut out = self.clone();
        out.coeffs[0] = out.coeffs[0].add(c);
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let n = self.common(other);
        let mut out = vec![C::zero(); n + 1];
        for (i, a) in self.coeffs[..=n].iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=n - i].iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] = out[i + j].add(&a.mul(b));
                }
            }
        }
        Self { coeffs: out }
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut out = Self::one(self.order());
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    /// Multiplication by `x^k`; the order is kept.
    pub fn shift_up(&self, k: usize) -> Self {
        let order = self.order();
        let mut coeffs = vec![C::zero(); k.min(order + 1)];
        coeffs.extend(self.coeffs.iter().take((order + 1).saturating_sub(k)).cloned());
        Self::new(coeffs, order)
    }

    /// Division by `x^k`, which requires the first `k` coefficients to be
    /// zero and lowers the order by `k`.
    pub fn shift_down(&self, k: usize) -> Result<Self> {
        if k > self.order() {
            return Err(precondition("shift_down", "not enough terms to divide by x^k"));
        }
        if self.coeffs[..k].iter().any(|c| !c.is_zero()) {
            return Err(precondition("shift_down", format!("series is not divisible by x^{k}")));
        }
        Ok(Self::new(self.coeffs[k..].to_vec(), self.order() - k))
    }

    /// `1 / self`; the constant term must be a unit of the ring.
    pub fn invert(&self) -> Result<Self> {
        let c0 = self.coeffs[0]
            .inverse()
            .ok_or_else(|| precondition("invert", "constant term is not invertible"))?;
        let n = self.order();
        let mut out: Vec<C> = Vec::with_capacity(n + 1);
        out.push(c0.clone());
        for k in 1..=n {
            let mut acc = C::zero();
            for j in 1..=k {
                if !self.coeffs[j].is_zero() {
                    acc = acc.add(&self.coeffs[j].mul(&out[k - j]));
                }
            }
            out.push(acc.neg().mul(&c0));
        }
        Ok(Self { coeffs: out })
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        Ok(self.mul(&other.invert().map_err(|_| precondition("div", "divisor has a non-invertible constant term"))?))
    }

    /// Square root of a series with constant term 1, solving
    /// `2 s_n = f_n - Σ_{0<k<n} s_k s_{n-k}` term by term.
    pub fn sqrt(&self) -> Result<Self> {
        if !self.coeffs[0].is_one() {
            return Err(precondition("sqrt", "constant term must be 1"));
        }
        let half = BigRational::new(BigInt::from(1), BigInt::from(2));
        let n = self.order();
        let mut s: Vec<C> = vec![C::one()];
        for k in 1..=n {
            let mut acc = self.coeffs[k].clone();
            for j in 1..k {
                acc = acc.sub(&s[j].mul(&s[k - j]));
            }
            s.push(acc.scale(&half));
        }
        Ok(Self { coeffs: s })
    }

    /// `self(inner)`; the inner series must have zero constant term.
    pub fn compose(&self, inner: &Self) -> Result<Self> {
        if !inner.coeffs[0].is_zero() {
            return Err(precondition("compose", "inner series must have zero constant term"));
        }
        let v = inner.coeffs.iter().position(|c| !c.is_zero());
        let order = match v {
            None => inner.order(),
            Some(v) => inner.order().min(v * (self.order() + 1) - 1),
        };
        let inner = inner.truncate(order);
        let mut out = Self::zero(order);
        // Horner evaluation from the top coefficient down.
        for c in self.coeffs.iter().take(order + 1).rev() {
            out = out.mul(&inner).add_constant(c);
        }
        Ok(out)
    }

    /// `self(x^k)`.
    pub fn substitute_power(&self, k: usize) -> Self {
        assert!(k >= 1);
        let order = self.order() * k + (k - 1);
        let mut coeffs = vec![C::zero(); order + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * k] = c.clone();
        }
        Self { coeffs }
    }

    pub fn map<D: Coeff>(&self, f: impl Fn(&C) -> D) -> TruncatedSeries<D> {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    /// Iterates `s <- step(s)` from zero `order + 1` times. Each step that is
    /// a contraction in the `x`-adic sense fixes one more coefficient.
    pub fn fixpoint(order: usize, step: impl Fn(&Self) -> Self) -> Self {
        let mut s = Self::zero(order);
        for _ in 0..=order {
            s = step(&s).truncate(order);
        }
        s
    }
}

impl Series {
    /// Coefficients as integers, or `None` if some coefficient is not one.
    pub fn integer_coeffs(&self) -> Option<Vec<BigInt>> {
        self.coeffs.iter().map(as_integer).collect()
    }

    /// Integer coefficients that are also nonnegative, as `u64`.
    pub fn counts(&self) -> Option<Vec<u64>> {
        self.coeffs
            .iter()
            .map(|c| as_integer(c).and_then(|i| u64::try_from(i).ok()))
            .collect()
    }

    /// Partial sum at a floating-point argument.
    pub fn eval_f64(&self, x: f64) -> f64 {
        let mut acc = 0.0;
        for c in self.coeffs.iter().rev() {
            acc = acc * x + super::ring::rational_to_f64(c);
        }
        acc
    }
}

impl<C: Coeff> fmt::Display for TruncatedSeries<C> {
    /// `c0, c1, ..., c_order`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(v: &[i64], order: usize) -> Series {
        Series::from_i64s(v, order)
    }

    #[test]
    fn sqrt_of_one_minus_four_x() {
        let r = s(&[1, -4], 4).sqrt().unwrap();
        assert_eq!(r, s(&[1, -2, -2, -4, -10], 4));
        assert!(s(&[2, 1], 3).sqrt().is_err());
    }

    #[test]
    fn geometric_series() {
        let g = s(&[1, -1], 6).invert().unwrap();
        assert_eq!(g, s(&[1; 7], 6));
        assert!(s(&[0, 1], 3).invert().is_err());
    }

    #[test]
    fn composition() {
        let cat = super::super::gf::catalan_series(4);
        let one_minus_x2 = s(&[1, 0, -1], 4);
        let u = s(&[0, 1], 4).div(&one_minus_x2.mul(&one_minus_x2)).unwrap();
        let c = cat.compose(&u).unwrap().truncate(1);
        assert_eq!(c, s(&[1, 1], 1));
        assert!(cat.compose(&s(&[1, 1], 4)).is_err());
    }

    #[test]
    fn shifts_and_display() {
        let a = s(&[1, 2, 3], 2);
        assert_eq!(a.shift_up(1), s(&[0, 1, 2], 2));
        assert_eq!(a.shift_up(1).shift_down(1).unwrap(), s(&[1, 2], 1));
        assert!(a.shift_down(1).is_err());
        assert_eq!(a.to_string(), "1, 2, 3");
        assert_eq!(s(&[1, 1], 2).substitute_power(2).order(), 5);
    }

    #[test]
    fn fixpoint_gives_catalan() {
        let c = Series::fixpoint(8, |c| c.mul(c).shift_up(1).add_constant(&super::super::ring::int(1)));
        assert_eq!(c.counts().unwrap(), vec![1, 1, 2, 5, 14, 42, 132, 429, 1430]);
    }
}
