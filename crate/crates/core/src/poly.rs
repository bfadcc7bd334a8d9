//! Exact univariate and bivariate polynomials, plus truncated power-series
//! helpers over `Q`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{One, Zero};

use crate::rational::{factorial_q, Q};

/// Coefficient ring for series whose coefficients are multiplied and summed
/// exactly (scalars, polynomials in the nilpotent symbol, bivariate polynomials).
pub trait SeriesCoeff: Clone + PartialEq + fmt::Debug {
    fn nil() -> Self;
    fn unit() -> Self;
    fn is_nil(&self) -> bool;
    fn plus(&self, other: &Self) -> Self;
    fn times(&self, other: &Self) -> Self;
    fn scale(&self, c: &Q) -> Self;
    /// Multiplicative inverse when `self` is an invertible constant.
    fn invert_constant(&self) -> Option<Self>;

    fn negated(&self) -> Self {
        self.scale(&-Q::one())
    }

    fn pow(&self, n: usize) -> Self {
        let mut acc = Self::unit();
        for _ in 0..n {
            acc = acc.times(self);
        }
        acc
    }
}

impl SeriesCoeff for Q {
    fn nil() -> Self {
        <Q as Zero>::zero()
    }
    fn unit() -> Self {
        <Q as One>::one()
    }
    fn is_nil(&self) -> bool {
        Zero::is_zero(self)
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn scale(&self, c: &Q) -> Self {
        self * c
    }
    fn invert_constant(&self) -> Option<Self> {
        (!Zero::is_zero(self)).then(|| <Q as One>::one() / self)
    }
}

/// Dense univariate polynomial `Σ c_i e^i` with trailing zeros trimmed.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct UPoly {
    coeffs: Vec<Q>,
}

impl UPoly {
    pub fn new(mut coeffs: Vec<Q>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UPoly { coeffs }
    }

    pub fn constant(c: Q) -> Self {
        Self::new(vec![c])
    }

    /// `c · e^n`.
    pub fn monomial(c: Q, n: usize) -> Self {
        let mut v = vec![Q::zero(); n + 1];
        v[n] = c;
        Self::new(v)
    }

    pub fn coeffs(&self) -> &[Q] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Q {
        self.coeffs.get(i).cloned().unwrap_or_else(Q::zero)
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, x: &Q) -> Q {
        self.coeffs
            .iter()
            .rev()
            .fold(Q::zero(), |acc, c| acc * x + c)
    }
}

impl fmt::Debug for UPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for UPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| match i {
                0 => format!("{c}"),
                1 => format!("{c}*e"),
                _ => format!("{c}*e^{i}"),
            })
            .collect();
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

impl SeriesCoeff for UPoly {
    fn nil() -> Self {
        UPoly::default()
    }
    fn unit() -> Self {
        UPoly::constant(Q::one())
    }
    fn is_nil(&self) -> bool {
        self.coeffs.is_empty()
    }
    fn plus(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        UPoly::new((0..n).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }
    fn times(&self, other: &Self) -> Self {
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return UPoly::default();
        }
        let mut v = vec![Q::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        UPoly::new(v)
    }
    fn scale(&self, c: &Q) -> Self {
        UPoly::new(self.coeffs.iter().map(|a| a * c).collect())
    }
    fn invert_constant(&self) -> Option<Self> {
        match self.degree() {
            Some(0) => Some(UPoly::constant(Q::one() / &self.coeffs[0])),
            _ => None,
        }
    }
}

/// Sparse polynomial in two variables `x, y`; keys are `(deg_x, deg_y)`.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct BiPoly {
    terms: BTreeMap<(usize, usize), Q>,
}

impl BiPoly {
    pub fn term(c: Q, dx: usize, dy: usize) -> Self {
        let mut p = BiPoly::default();
        if !c.is_zero() {
            p.terms.insert((dx, dy), c);
        }
        p
    }

    pub fn x() -> Self {
        Self::term(Q::one(), 1, 0)
    }

    pub fn y() -> Self {
        Self::term(Q::one(), 0, 1)
    }

    pub fn constant(c: Q) -> Self {
        Self::term(c, 0, 0)
    }

    pub fn coeff(&self, dx: usize, dy: usize) -> Q {
        self.terms.get(&(dx, dy)).cloned().unwrap_or_else(Q::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(usize, usize), &Q)> {
        self.terms.iter()
    }

    fn insert_add(&mut self, key: (usize, usize), c: Q) {
        let entry = self.terms.entry(key).or_insert_with(Q::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }
}

impl fmt::Debug for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let s: Vec<String> = self
            .terms
            .iter()
            .map(|(&(a, b), c)| {
                let mut t = format!("{c}");
                if a > 0 {
                    t.push_str(&format!("*x^{a}"));
                }
                if b > 0 {
                    t.push_str(&format!("*y^{b}"));
                }
                t
            })
            .collect();
        write!(f, "{}", s.join(" + "))
    }
}

impl SeriesCoeff for BiPoly {
    fn nil() -> Self {
        BiPoly::default()
    }
    fn unit() -> Self {
        BiPoly::constant(Q::one())
    }
    fn is_nil(&self) -> bool {
        self.terms.is_empty()
    }
    fn plus(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&k, c) in &other.terms {
            out.insert_add(k, c.clone());
        }
        out
    }
    fn times(&self, other: &Self) -> Self {
        let mut out = BiPoly::default();
        for (&(a, b), c) in &self.terms {
            for (&(p, q), d) in &other.terms {
                out.insert_add((a + p, b + q), c * d);
            }
        }
        out
    }
    fn scale(&self, c: &Q) -> Self {
        let mut out = BiPoly::default();
        for (&k, a) in &self.terms {
            out.insert_add(k, a * c);
        }
        out
    }
    fn invert_constant(&self) -> Option<Self> {
        if self.terms.len() == 1 {
            if let Some(c) = self.terms.get(&(0, 0)) {
                return Some(BiPoly::constant(Q::one() / c));
            }
        }
        None
    }
}

macro_rules! ring_ops {
    ($t:ty) => {
        impl Add for &$t {
            type Output = $t;
            fn add(self, rhs: &$t) -> $t {
                SeriesCoeff::plus(self, rhs)
            }
        }
        impl Sub for &$t {
            type Output = $t;
            fn sub(self, rhs: &$t) -> $t {
                SeriesCoeff::plus(self, &SeriesCoeff::negated(rhs))
            }
        }
        impl Mul for &$t {
            type Output = $t;
            fn mul(self, rhs: &$t) -> $t {
                SeriesCoeff::times(self, rhs)
            }
        }
        impl Neg for &$t {
            type Output = $t;
            fn neg(self) -> $t {
                SeriesCoeff::negated(self)
            }
        }
    };
}
ring_ops!(UPoly);
ring_ops!(BiPoly);

/// Truncated power series arithmetic on coefficient vectors `[c_0, c_1, …]`
/// keeping terms of degree `< n`.
pub mod truncated {
    use super::*;

    pub fn mul(a: &[Q], b: &[Q], n: usize) -> Vec<Q> {
        let mut out = vec![Q::zero(); n];
        for (i, x) in a.iter().enumerate().take(n) {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate().take(n - i) {
                out[i + j] += x * y;
            }
        }
        out
    }

    /// Reciprocal of a series with nonzero constant term.
    pub fn inverse(a: &[Q], n: usize) -> Vec<Q> {
        assert!(!a[0].is_zero(), "series not invertible");
        let mut out = vec![Q::zero(); n];
        if n == 0 {
            return out;
        }
        let inv0 = Q::one() / &a[0];
        out[0] = inv0.clone();
        for m in 1..n {
            let mut s = Q::zero();
            for i in 1..=m.min(a.len() - 1) {
                s += &a[i] * &out[m - i];
            }
            out[m] = -s * &inv0;
        }
        out
    }

    /// `log(a)` for a series with constant term 1.
    pub fn log(a: &[Q], n: usize) -> Vec<Q> {
        assert!(a[0].is_one(), "log needs constant term 1");
        // log(a)' = a'/a
        let deriv: Vec<Q> = (1..a.len().min(n + 1))
            .map(|i| &a[i] * Q::from_integer(i.into()))
            .collect();
        let q = mul(&deriv, &inverse(a, n), n);
        let mut out = vec![Q::zero(); n];
        for i in 1..n {
            out[i] = &q[i - 1] / Q::from_integer(i.into());
        }
        out
    }

    /// Taylor coefficients of `exp` up to degree `< n`.
    pub fn exp_coeffs(n: usize) -> Vec<Q> {
        (0..n).map(|i| Q::one() / factorial_q(i)).collect()
    }

    /// Taylor coefficients of `tanh` up to degree `< n`.
    pub fn tanh_coeffs(n: usize) -> Vec<Q> {
        // tanh = sinh / cosh
        let sinh: Vec<Q> = (0..n)
            .map(|i| if i % 2 == 1 { Q::one() / factorial_q(i) } else { Q::zero() })
            .collect();
        let cosh: Vec<Q> = (0..n)
            .map(|i| if i % 2 == 0 { Q::one() / factorial_q(i) } else { Q::zero() })
            .collect();
        mul(&sinh, &inverse(&cosh, n), n)
    }

    /// Coefficients of `√x / tanh √x` in `x`, degree `< n`.
    pub fn l_genus_coeffs(n: usize) -> Vec<Q> {
        // √x cosh √x / sinh √x = (Σ x^i/(2i)!) / (Σ x^i/(2i+1)!)
        let num: Vec<Q> = (0..n).map(|i| Q::one() / factorial_q(2 * i)).collect();
        let den: Vec<Q> = (0..n).map(|i| Q::one() / factorial_q(2 * i + 1)).collect();
        mul(&num, &inverse(&den, n), n)
    }
}

#[cfg(test)]
mod tests {
    use super::truncated::*;
    use super::*;
    use crate::rational::{int, ratio};

    #[test]
    fn upoly_arithmetic() {
        let a = UPoly::new(vec![int(1), int(1)]);
        let b = UPoly::new(vec![int(1), int(-1)]);
        assert_eq!(&a * &b, UPoly::new(vec![int(1), int(0), int(-1)]));
        assert_eq!(&a - &a, UPoly::default());
        assert_eq!(UPoly::new(vec![int(0), int(0)]).degree(), None);
        assert_eq!(UPoly::monomial(int(2), 3).eval(&int(2)), int(16));
        assert!(UPoly::monomial(int(1), 1).invert_constant().is_none());
    }

    #[test]
    fn bipoly_arithmetic() {
        let p = &BiPoly::y() - &BiPoly::x();
        let q = &p * &p;
        assert_eq!(q.coeff(1, 1), int(-2));
        assert_eq!(q.coeff(2, 0), int(1));
        assert!((&q - &q).is_nil());
    }

    #[test]
    fn known_series() {
        let t = tanh_coeffs(8);
        assert_eq!(t[1], int(1));
        assert_eq!(t[3], ratio(-1, 3));
        assert_eq!(t[5], ratio(2, 15));
        assert_eq!(t[7], ratio(-17, 315));
        let l = l_genus_coeffs(4);
        assert_eq!(l[0], int(1));
        assert_eq!(l[1], ratio(1, 3));
        assert_eq!(l[2], ratio(-1, 45));
        assert_eq!(l[3], ratio(2, 945));
        let lg = log(&exp_coeffs(6), 6);
        assert_eq!(lg, vec![int(0), int(1), int(0), int(0), int(0), int(0)]);
    }
}
