//! Special power series indexed by set partitions.
//!
//! A special series is a coefficient sequence `a_1, a_2, …`; it acts on a
//! partition `α` by the product `∏_{Θ∈α} a_{|Θ|}`. Composition sums over
//! partitions, which for such series is the Faà di Bruno rule for
//! exponential generating functions.

use thiserror::Error;

use crate::partitions::{count_by_type, type_vectors};
use crate::poly::{BiPoly, SeriesCoeff, UPoly};
use crate::rational::{alternating_factorial, Q};

pub const DEFAULT_ORDER: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("series orders differ ({left} vs {right})")]
    OrderMismatch { left: usize, right: usize },
    #[error("coefficient {k} requested from a series of order {order}")]
    OutOfRange { k: usize, order: usize },
    #[error("linear coefficient is not an invertible constant")]
    NotInvertible,
    #[error("a series needs at least one coefficient")]
    Empty,
}

/// Coefficients `a_1, …, a_K` (stored 0-based).
#[derive(Debug, Clone, PartialEq)]
pub struct SpecialSeries<C> {
    coeffs: Vec<C>,
}

impl<C: SeriesCoeff> SpecialSeries<C> {
    pub fn new(coeffs: Vec<C>) -> Result<Self, SeriesError> {
        if coeffs.is_empty() {
            return Err(SeriesError::Empty);
        }
        Ok(SpecialSeries { coeffs })
    }

    /// Series with `a_k = f(k)` for `k = 1..=order`.
    pub fn from_fn(order: usize, f: impl Fn(usize) -> C) -> Result<Self, SeriesError> {
        Self::new((1..=order).map(f).collect())
    }

    /// The unit `E`: `a_1 = 1`, all other coefficients zero.
    pub fn identity(order: usize) -> Result<Self, SeriesError> {
        Self::from_fn(order, |k| if k == 1 { C::unit() } else { C::nil() })
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    /// `a_k`, 1-based.
    pub fn coeff(&self, k: usize) -> Result<&C, SeriesError> {
        if k == 0 || k > self.order() {
            return Err(SeriesError::OutOfRange { k, order: self.order() });
        }
        Ok(&self.coeffs[k - 1])
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    /// `self ∘ inner`: `c_k = Σ_{α∈Eq(k)} b_{|α|} ∏_{Θ∈α} a_{|Θ|}`, evaluated
    /// per type vector with partition-count weights.
    pub fn compose(&self, inner: &Self) -> Result<Self, SeriesError> {
        if self.order() != inner.order() {
            return Err(SeriesError::OrderMismatch {
                left: self.order(),
                right: inner.order(),
            });
        }
        let out = (1..=self.order())
            .map(|k| {
                type_vectors(k).into_iter().fold(C::nil(), |acc, t| {
                    let weight = count_by_type(k, &t.0).expect("type vector of k");
                    let mut term = self.coeffs[t.parts() - 1].clone();
                    for (i, &l) in t.0.iter().enumerate() {
                        if l > 0 {
                            term = term.times(&inner.coeffs[i].pow(l));
                        }
                    }
                    acc.plus(&term.scale(&weight))
                })
            })
            .collect();
        Ok(SpecialSeries { coeffs: out })
    }

    /// Compositional inverse, by solving `G ∘ F = E` one order at a time.
    pub fn invert(&self) -> Result<Self, SeriesError> {
        let inv1 = self.coeffs[0].invert_constant().ok_or(SeriesError::NotInvertible)?;
        let n = self.order();
        let mut g: Vec<C> = vec![C::nil(); n];
        g[0] = inv1.clone();
        for k in 2..=n {
            // c_k = g_k a_1^k + Σ_{types with fewer than k parts} … = 0
            let mut rest = C::nil();
            for t in type_vectors(k) {
                if t.parts() == k {
                    continue;
                }
                let weight = count_by_type(k, &t.0).expect("type vector of k");
                let mut term = g[t.parts() - 1].clone();
                for (i, &l) in t.0.iter().enumerate() {
                    if l > 0 {
                        term = term.times(&self.coeffs[i].pow(l));
                    }
                }
                rest = rest.plus(&term.scale(&weight));
            }
            g[k - 1] = rest.negated().times(&inv1.pow(k));
        }
        Ok(SpecialSeries { coeffs: g })
    }
}

/// `H`: `a_k = e^{k-1}`, the series of `(exp(e y) - 1)/e`.
pub fn h_series(order: usize) -> SpecialSeries<UPoly> {
    SpecialSeries::from_fn(order, |k| UPoly::monomial(Q::from_integer(1.into()), k - 1))
        .expect("order >= 1")
}

/// Closed form of `H^{-1}`: `a_k = C_k e^{k-1}`, the series of `ln(1 + e y)/e`.
pub fn h_inverse(order: usize) -> SpecialSeries<UPoly> {
    SpecialSeries::from_fn(order, |k| UPoly::monomial(alternating_factorial(k), k - 1))
        .expect("order >= 1")
}

/// `∂_z^n q(x, y, 0)` for `q(x, y, z) = g(y, h(x, z))`, with
/// `g(y, z) = (exp(yz) - 1)/y` and `h(x, z) = ln(1 + xz)/x`, computed by
/// composing the two coefficient sequences.
pub fn q_partial(n: usize) -> BiPoly {
    assert!(n >= 1, "q_partial needs n >= 1");
    let g = SpecialSeries::from_fn(n, |m| BiPoly::term(Q::from_integer(1.into()), 0, m - 1))
        .expect("n >= 1");
    let h = SpecialSeries::from_fn(n, |i| BiPoly::term(alternating_factorial(i), i - 1, 0))
        .expect("n >= 1");
    g.compose(&h).expect("same order").coeffs[n - 1].clone()
}

/// `∏_{i=1}^{n-1} (y - i x)`.
pub fn falling_product(n: usize) -> BiPoly {
    (1..n).fold(BiPoly::unit(), |acc, i| {
        let f = &BiPoly::y() - &BiPoly::term(Q::from_integer((i as i64).into()), 1, 0);
        &acc * &f
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;
    use proptest::prelude::*;

    #[test]
    fn unit_composition() {
        let f = SpecialSeries::new(vec![int(2), int(3), int(-1), int(5)]).unwrap();
        let e = SpecialSeries::<Q>::identity(4).unwrap();
        assert_eq!(e.compose(&f).unwrap(), f);
        assert_eq!(f.compose(&e).unwrap(), f);
        assert_eq!(e.invert().unwrap(), e);
    }

    #[test]
    fn h_inverse_matches_closed_form() {
        let inv = h_series(8).invert().unwrap();
        assert_eq!(inv, h_inverse(8));
        let c: Vec<Q> = (1..=5).map(|k| inv.coeff(k).unwrap().coeff(k - 1)).collect();
        assert_eq!(c, vec![int(1), int(-1), int(2), int(-6), int(24)]);
        assert_eq!(h_series(8).compose(&inv).unwrap(), SpecialSeries::identity(8).unwrap());
    }

    #[test]
    fn exp_of_exp_minus_one_gives_bell_numbers() {
        let ones = SpecialSeries::from_fn(6, |_| int(1)).unwrap();
        let c = ones.compose(&ones).unwrap();
        assert_eq!(c.coeffs(), &[int(1), int(2), int(5), int(15), int(52), int(203)]);
    }

    #[test]
    fn faa_di_bruno_closed_form() {
        assert_eq!(q_partial(1), BiPoly::unit());
        assert_eq!(q_partial(2), &BiPoly::y() - &BiPoly::x());
        for n in 1..=6 {
            assert_eq!(q_partial(n), falling_product(n), "n={n}");
        }
    }

    #[test]
    fn errors() {
        let a = SpecialSeries::<Q>::identity(3).unwrap();
        let b = SpecialSeries::<Q>::identity(4).unwrap();
        assert_eq!(a.compose(&b), Err(SeriesError::OrderMismatch { left: 3, right: 4 }));
        assert_eq!(a.coeff(4), Err(SeriesError::OutOfRange { k: 4, order: 3 }));
        assert!(SpecialSeries::<Q>::new(vec![]).is_err());
        let z = SpecialSeries::new(vec![int(0), int(1)]).unwrap();
        assert_eq!(z.invert(), Err(SeriesError::NotInvertible));
        let nonconst = SpecialSeries::new(vec![UPoly::monomial(int(1), 1)]).unwrap();
        assert_eq!(nonconst.invert(), Err(SeriesError::NotInvertible));
    }

    fn series(v: Vec<i64>) -> SpecialSeries<Q> {
        let mut c: Vec<Q> = v.into_iter().map(int).collect();
        c[0] = int(1);
        SpecialSeries::new(c).unwrap()
    }

    proptest! {
        #[test]
        fn compose_is_associative(a in prop::collection::vec(-3i64..=3, 6),
                                  b in prop::collection::vec(-3i64..=3, 6),
                                  c in prop::collection::vec(-3i64..=3, 6)) {
            let (f, g, h) = (series(a), series(b), series(c));
            let left = f.compose(&g).unwrap().compose(&h).unwrap();
            let right = f.compose(&g.compose(&h).unwrap()).unwrap();
            prop_assert_eq!(left, right);
        }

        #[test]
        fn double_inverse(a in prop::collection::vec(-3i64..=3, 8)) {
            let f = series(a);
            let g = f.invert().unwrap();
            prop_assert_eq!(g.invert().unwrap(), f.clone());
            prop_assert_eq!(f.compose(&g).unwrap(), SpecialSeries::identity(8).unwrap());
        }
    }
}
