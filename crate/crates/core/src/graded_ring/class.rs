use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num::{One, Zero};

use super::{basis_vec, check_index, format_sparse, sparse_add, GradedRing, IndexSequence, RingError, SparseVec};
use crate::rational::Q;

/// An element of a [`GradedRing`], stored as sparse rational coordinates.
///
/// The arithmetic operators panic when the operands live in different rings;
/// the `try_*` methods report [`RingError::RingMismatch`] instead.
#[derive(Clone)]
pub struct GradedClass {
    ring: Arc<GradedRing>,
    coords: SparseVec,
}

pub(crate) fn same_ring(a: &Arc<GradedRing>, b: &Arc<GradedRing>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl GradedClass {
    pub fn zero(ring: &Arc<GradedRing>) -> Self {
        GradedClass {
            ring: ring.clone(),
            coords: SparseVec::new(),
        }
    }

    pub fn one(ring: &Arc<GradedRing>) -> Self {
        GradedClass {
            ring: ring.clone(),
            coords: ring.unit().clone(),
        }
    }

    pub fn scalar(ring: &Arc<GradedRing>, c: Q) -> Self {
        Self::one(ring).scale(&c)
    }

    pub fn basis(ring: &Arc<GradedRing>, i: usize) -> Result<Self, RingError> {
        check_index(i, ring.dim())?;
        Ok(GradedClass {
            ring: ring.clone(),
            coords: basis_vec(i),
        })
    }

    /// Looks up a basis element by label.
    pub fn named(ring: &Arc<GradedRing>, label: &str) -> Option<Self> {
        ring.index_of(label).map(|i| GradedClass {
            ring: ring.clone(),
            coords: basis_vec(i),
        })
    }

    pub fn from_coords(
        ring: &Arc<GradedRing>,
        coords: impl IntoIterator<Item = (usize, Q)>,
    ) -> Result<Self, RingError> {
        let mut v = SparseVec::new();
        for (i, c) in coords {
            check_index(i, ring.dim())?;
            sparse_add(&mut v, i, c);
        }
        Ok(GradedClass {
            ring: ring.clone(),
            coords: v,
        })
    }

    pub(crate) fn from_sparse_unchecked(ring: &Arc<GradedRing>, coords: SparseVec) -> Self {
        GradedClass {
            ring: ring.clone(),
            coords,
        }
    }

    pub fn ring(&self) -> &Arc<GradedRing> {
        &self.ring
    }

    pub fn coords(&self) -> &SparseVec {
        &self.coords
    }

    pub fn coeff(&self, i: usize) -> Q {
        self.coords.get(&i).cloned().unwrap_or_else(Q::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coords.is_empty()
    }

    fn check_same(&self, other: &Self) -> Result<(), RingError> {
        if same_ring(&self.ring, &other.ring) {
            Ok(())
        } else {
            Err(RingError::RingMismatch)
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, RingError> {
        self.check_same(other)?;
        let mut v = self.coords.clone();
        for (&i, c) in &other.coords {
            sparse_add(&mut v, i, c.clone());
        }
        Ok(Self::from_sparse_unchecked(&self.ring, v))
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, RingError> {
        self.check_same(other)?;
        Ok(Self::from_sparse_unchecked(
            &self.ring,
            self.ring.mul_sparse(&self.coords, &other.coords),
        ))
    }

    pub fn scale(&self, c: &Q) -> Self {
        if c.is_zero() {
            return Self::zero(&self.ring);
        }
        Self::from_sparse_unchecked(
            &self.ring,
            self.coords.iter().map(|(&i, x)| (i, x * c)).collect(),
        )
    }

    pub fn pow(&self, n: usize) -> Self {
        let mut acc = Self::one(&self.ring);
        for _ in 0..n {
            if acc.is_zero() {
                break;
            }
            acc = &acc * self;
        }
        acc
    }

    /// Homogeneous component of degree `d`.
    pub fn degree_part(&self, d: u32) -> Self {
        Self::from_sparse_unchecked(
            &self.ring,
            self.coords
                .iter()
                .filter(|(&i, _)| self.ring.degree(i) == d)
                .map(|(&i, c)| (i, c.clone()))
                .collect(),
        )
    }

    /// `a_J = a_{j_1} ⋯ a_{j_l}`.
    pub fn select(&self, j: &IndexSequence) -> Self {
        j.entries()
            .iter()
            .fold(Self::one(&self.ring), |acc, &d| &acc * &self.degree_part(d))
    }

    /// As [`Self::select`], from raw degrees (rejecting odd ones).
    pub fn select_degrees(&self, j: &[u32]) -> Result<Self, RingError> {
        Ok(self.select(&IndexSequence::new(j.to_vec())?))
    }

    /// Sorted list of degrees carrying nonzero coordinates.
    pub fn degrees(&self) -> Vec<u32> {
        let mut d: Vec<u32> = self.coords.keys().map(|&i| self.ring.degree(i)).collect();
        d.sort_unstable();
        d.dedup();
        d
    }

    pub fn is_homogeneous_of(&self, d: u32) -> bool {
        self.coords.keys().all(|&i| self.ring.degree(i) == d)
    }

    /// True iff the degree-0 part is exactly the unit.
    pub fn is_unital(&self) -> bool {
        self.degree_part(0).coords == *self.ring.unit()
    }

    /// Pairing with the fundamental class.
    pub fn integrate(&self) -> Q {
        self.ring
            .integral()
            .iter()
            .map(|(i, w)| w * self.coeff(*i))
            .fold(Q::zero(), |a, b| a + b)
    }

    /// Inverse of a class whose degree-0 part is the unit, by the terminating
    /// geometric series in the nilpotent `a - 1`.
    pub fn invert_unital(&self) -> Result<Self, RingError> {
        if !self.is_unital() {
            return Err(RingError::NonUnital);
        }
        let one = Self::one(&self.ring);
        let minus_nil = &one - self;
        let mut term = one.clone();
        let mut acc = one;
        loop {
            term = &term * &minus_nil;
            if term.is_zero() {
                break;
            }
            acc = &acc + &term;
        }
        Ok(acc)
    }

    /// `Σ coeffs[j] · a^j` for a class with vanishing degree-0 part; `coeffs[0]`
    /// multiplies the unit.
    pub fn eval_series(&self, coeffs: &[Q]) -> Result<Self, RingError> {
        if !self.degree_part(0).is_zero() {
            return Err(RingError::NotNilpotent);
        }
        let mut acc = Self::zero(&self.ring);
        let mut power = Self::one(&self.ring);
        for c in coeffs {
            if power.is_zero() {
                break;
            }
            acc = &acc + &power.scale(c);
            power = &power * self;
        }
        Ok(acc)
    }
}

impl PartialEq for GradedClass {
    fn eq(&self, other: &Self) -> bool {
        self.coords == other.coords && same_ring(&self.ring, &other.ring)
    }
}

impl fmt::Debug for GradedClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GradedClass({self})")
    }
}

impl fmt::Display for GradedClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", format_sparse(&self.coords, &self.ring))
    }
}

impl Add for &GradedClass {
    type Output = GradedClass;
    fn add(self, rhs: &GradedClass) -> GradedClass {
        self.try_add(rhs).expect("ring mismatch in addition")
    }
}

impl Sub for &GradedClass {
    type Output = GradedClass;
    fn sub(self, rhs: &GradedClass) -> GradedClass {
        self.try_add(&-rhs).expect("ring mismatch in subtraction")
    }
}

impl Mul for &GradedClass {
    type Output = GradedClass;
    fn mul(self, rhs: &GradedClass) -> GradedClass {
        self.try_mul(rhs).expect("ring mismatch in multiplication")
    }
}

impl Neg for &GradedClass {
    type Output = GradedClass;
    fn neg(self) -> GradedClass {
        self.scale(&-Q::one())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::truncated::tanh_coeffs;
    use crate::rational::{int, ratio};
    use proptest::prelude::*;

    fn p2() -> Arc<GradedRing> {
        GradedRing::truncated_polynomial("h", 2, 2, int(1)).unwrap()
    }

    fn poly(ring: &Arc<GradedRing>, c: &[i64]) -> GradedClass {
        GradedClass::from_coords(ring, c.iter().enumerate().map(|(i, &x)| (i, int(x)))).unwrap()
    }

    #[test]
    fn multiplication_and_truncation() {
        let r = p2();
        let h = GradedClass::named(&r, "h").unwrap();
        let h2 = GradedClass::named(&r, "h^2").unwrap();
        let one = GradedClass::one(&r);
        assert_eq!(&one * &h, h);
        assert_eq!(&h * &h, h2);
        assert!((&h2 * &h).is_zero());
        assert_eq!(&poly(&r, &[1, 1]) * &poly(&r, &[1, -1, 1]), one);
    }

    #[test]
    fn ring_mismatch_is_reported() {
        let a = GradedClass::one(&p2());
        let other = GradedRing::truncated_polynomial("t", 2, 1, int(1)).unwrap();
        let b = GradedClass::one(&other);
        assert_eq!(a.try_mul(&b), Err(RingError::RingMismatch));
    }

    #[test]
    fn inversion() {
        let r = p2();
        assert_eq!(GradedClass::one(&r).invert_unital().unwrap(), GradedClass::one(&r));
        assert_eq!(poly(&r, &[1, 1]).invert_unital().unwrap(), poly(&r, &[1, -1, 1]));
        assert_eq!(poly(&r, &[2, 1]).invert_unital(), Err(RingError::NonUnital));
    }

    #[test]
    fn series_evaluation() {
        let r = GradedRing::truncated_polynomial("h", 2, 3, int(1)).unwrap();
        let t = tanh_coeffs(8);
        // a^2 = 0
        let top = GradedClass::named(&r, "h^3").unwrap();
        assert_eq!(top.eval_series(&t).unwrap(), top);
        let d = int(5);
        let dh = GradedClass::named(&r, "h").unwrap().scale(&d);
        let want = GradedClass::from_coords(&r, [(1, d.clone()), (3, -&d * &d * &d / int(3))]).unwrap();
        assert_eq!(dh.eval_series(&t).unwrap(), want);
        let exp = crate::poly::truncated::exp_coeffs(5);
        assert_eq!(GradedClass::zero(&r).eval_series(&exp).unwrap(), GradedClass::one(&r));
        assert_eq!(GradedClass::one(&r).eval_series(&exp), Err(RingError::NotNilpotent));
    }

    #[test]
    fn integration_and_selection() {
        let r = p2();
        assert_eq!(GradedClass::one(&r).integrate(), int(0));
        assert_eq!(GradedClass::named(&r, "h^2").unwrap().integrate(), int(1));
        let a = poly(&r, &[1, 1, 1]);
        assert_eq!(a.select_degrees(&[0]).unwrap(), GradedClass::one(&r));
        assert_eq!(a.select_degrees(&[2, 2]).unwrap(), GradedClass::named(&r, "h^2").unwrap());
        assert!(a.select_degrees(&[2, 4]).unwrap().is_zero());
        assert_eq!(a.select_degrees(&[1]), Err(RingError::OddIndex(1)));
        assert_eq!(poly(&r, &[3, 0, 1]).scale(&ratio(1, 2)).integrate(), ratio(1, 2));
    }

    fn unital_p3() -> impl Strategy<Value = Vec<i64>> {
        proptest::collection::vec(-5i64..=5, 3)
    }

    proptest! {
        #[test]
        fn invert_round_trip(c in unital_p3()) {
            let r = GradedRing::truncated_polynomial("h", 2, 3, int(1)).unwrap();
            let a = GradedClass::from_coords(&r, [(0, int(1)), (1, int(c[0])), (2, int(c[1])), (3, int(c[2]))]).unwrap();
            let b = a.invert_unital().unwrap();
            prop_assert_eq!(&a * &b, GradedClass::one(&r));
            prop_assert_eq!(b.invert_unital().unwrap(), a);
        }

        #[test]
        fn integration_is_linear(x in unital_p3(), y in unital_p3(), s in -4i64..=4) {
            let r = GradedRing::truncated_polynomial("h", 2, 2, int(1)).unwrap();
            let a = poly(&r, &x);
            let b = poly(&r, &y);
            let lhs = (&a + &b.scale(&int(s))).integrate();
            prop_assert_eq!(lhs, a.integrate() + b.integrate() * int(s));
        }
    }

    #[test]
    fn one_is_unit_in_product_ring() {
        let a = GradedRing::truncated_polynomial("t", 2, 1, int(1)).unwrap();
        let b = GradedRing::truncated_polynomial("s", 2, 2, int(1)).unwrap();
        let p = GradedRing::product(&[a, b]).unwrap();
        let one = GradedClass::one(&p);
        for i in 0..p.dim() {
            let e = GradedClass::basis(&p, i).unwrap();
            assert_eq!(&one * &e, e);
        }
        assert!(one.is_unital());
        assert!(one.pow(3).is_unital());
        assert_eq!(one.invert_unital().unwrap(), one);
    }
}
