use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num::{One, Zero};

use super::class::same_ring;
use super::{check_index, GradedClass, GradedRing, IndexSequence, RingError};
use crate::partitions::Partition;
use crate::rational::{format, Q};

/// An element of the `k`-fold tensor power of a ring (cohomology of `X^{×k}`),
/// as a merged sum of elementary tensors of basis elements.
#[derive(Clone)]
pub struct TensorClass {
    ring: Arc<GradedRing>,
    k: usize,
    terms: BTreeMap<Vec<usize>, Q>,
}

impl TensorClass {
    pub fn zero(ring: &Arc<GradedRing>, k: usize) -> Self {
        TensorClass {
            ring: ring.clone(),
            k,
            terms: BTreeMap::new(),
        }
    }

    /// `c · e_{i_1} × ⋯ × e_{i_k}`.
    pub fn elementary(ring: &Arc<GradedRing>, indices: Vec<usize>, c: Q) -> Result<Self, RingError> {
        for &i in &indices {
            check_index(i, ring.dim())?;
        }
        let mut t = Self::zero(ring, indices.len());
        t.add_term(indices, c);
        Ok(t)
    }

    /// Cross product `a_1 × ⋯ × a_k`.
    pub fn cross(factors: &[GradedClass]) -> Result<Self, RingError> {
        let ring = factors
            .first()
            .ok_or(RingError::ArityMismatch { expected: 1, found: 0 })?
            .ring()
            .clone();
        for f in factors {
            if !same_ring(f.ring(), &ring) {
                return Err(RingError::RingMismatch);
            }
        }
        let mut terms: BTreeMap<Vec<usize>, Q> = BTreeMap::new();
        terms.insert(vec![], Q::one());
        for f in factors {
            let mut next = BTreeMap::new();
            for (idx, c) in &terms {
                for (&i, x) in f.coords() {
                    let mut idx2 = idx.clone();
                    idx2.push(i);
                    next.insert(idx2, c * x);
                }
            }
            terms = next;
        }
        let mut t = Self::zero(&ring, factors.len());
        for (idx, c) in terms {
            t.add_term(idx, c);
        }
        Ok(t)
    }

    fn add_term(&mut self, idx: Vec<usize>, c: Q) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(idx.clone()).or_insert_with(Q::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&idx);
        }
    }

    pub fn ring(&self) -> &Arc<GradedRing> {
        &self.ring
    }

    pub fn arity(&self) -> usize {
        self.k
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<usize>, &Q)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// The factors of an elementary term as basis classes.
    pub fn factors(&self, idx: &[usize]) -> Vec<GradedClass> {
        idx.iter()
            .map(|&i| GradedClass::basis(&self.ring, i).expect("index validated at construction"))
            .collect()
    }

    fn check_compatible(&self, other: &Self) -> Result<(), RingError> {
        if !same_ring(&self.ring, &other.ring) {
            return Err(RingError::RingMismatch);
        }
        if self.k != other.k {
            return Err(RingError::ArityMismatch {
                expected: self.k,
                found: other.k,
            });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, RingError> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (idx, c) in &other.terms {
            out.add_term(idx.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Q) -> Self {
        let mut out = Self::zero(&self.ring, self.k);
        for (idx, x) in &self.terms {
            out.add_term(idx.clone(), x * c);
        }
        out
    }

    /// Factorwise product in the tensor power ring (no signs: even degrees).
    pub fn try_mul(&self, other: &Self) -> Result<Self, RingError> {
        self.check_compatible(other)?;
        let mut out = Self::zero(&self.ring, self.k);
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                let mut partial: BTreeMap<Vec<usize>, Q> = BTreeMap::new();
                partial.insert(vec![], x * y);
                for (&i, &j) in a.iter().zip(b) {
                    let prod = self.ring.product_of(i, j);
                    let mut next = BTreeMap::new();
                    for (idx, c) in &partial {
                        for (&r, z) in prod {
                            let mut idx2 = idx.clone();
                            idx2.push(r);
                            next.insert(idx2, c * z);
                        }
                    }
                    partial = next;
                    if partial.is_empty() {
                        break;
                    }
                }
                for (idx, c) in partial {
                    out.add_term(idx, c);
                }
            }
        }
        Ok(out)
    }

    pub fn total_degree(&self, idx: &[usize]) -> u32 {
        idx.iter().map(|&i| self.ring.degree(i)).sum()
    }

    /// Part of total degree `d`.
    pub fn degree_part(&self, d: u32) -> Self {
        let mut out = Self::zero(&self.ring, self.k);
        for (idx, c) in &self.terms {
            if self.total_degree(idx) == d {
                out.add_term(idx.clone(), c.clone());
            }
        }
        out
    }

    /// `x_J = x_{j_1} ⋯ x_{j_l}` in the tensor power ring, by total degree.
    pub fn select(&self, j: &IndexSequence) -> Self {
        let one = TensorClass::cross(&vec![GradedClass::one(&self.ring); self.k])
            .expect("unit cross product");
        j.entries().iter().fold(one, |acc, &d| {
            acc.try_mul(&self.degree_part(d)).expect("same tensor power")
        })
    }

    /// Pullback along the partial diagonal `Δ^α : X^{×|α|} → X^{×k}`: within
    /// each class of `α` the corresponding factors are multiplied, and the
    /// resulting factors are ordered by the canonical class order.
    pub fn diagonal_pullback(&self, alpha: &Partition) -> Result<Self, RingError> {
        if alpha.k() != self.k {
            return Err(RingError::ArityMismatch {
                expected: self.k,
                found: alpha.k(),
            });
        }
        let mut out = Self::zero(&self.ring, alpha.len());
        for (idx, c) in &self.terms {
            let factors: Vec<GradedClass> = alpha
                .classes()
                .iter()
                .map(|class| {
                    class.iter().fold(GradedClass::one(&self.ring), |acc, &i| {
                        &acc * &GradedClass::basis(&self.ring, idx[i - 1]).expect("valid index")
                    })
                })
                .collect();
            let t = TensorClass::cross(&factors)?.scale(c);
            out = out.try_add(&t)?;
        }
        Ok(out)
    }

    /// The class itself when `k == 1`.
    pub fn to_class(&self) -> Result<GradedClass, RingError> {
        if self.k != 1 {
            return Err(RingError::ArityMismatch {
                expected: 1,
                found: self.k,
            });
        }
        GradedClass::from_coords(&self.ring, self.terms.iter().map(|(idx, c)| (idx[0], c.clone())))
    }
}

impl PartialEq for TensorClass {
    fn eq(&self, other: &Self) -> bool {
        self.k == other.k && self.terms == other.terms && same_ring(&self.ring, &other.ring)
    }
}

impl fmt::Debug for TensorClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TensorClass({self})")
    }
}

impl fmt::Display for TensorClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let s: Vec<String> = self
            .terms
            .iter()
            .map(|(idx, c)| {
                let labels: Vec<&str> = idx.iter().map(|&i| self.ring.label(i)).collect();
                format!("{}*({})", format(c), labels.join(" x "))
            })
            .collect();
        write!(f, "{}", s.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::{enumerate, quotient, refines};
    use crate::rational::int;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn p2() -> Arc<GradedRing> {
        GradedRing::truncated_polynomial("h", 2, 2, int(1)).unwrap()
    }

    #[test]
    fn cross_and_pullbacks() {
        let r = p2();
        let h = GradedClass::named(&r, "h").unwrap();
        let one = GradedClass::one(&r);
        let x = TensorClass::cross(&[h.clone(), one.clone(), h.clone()]).unwrap();
        let alpha = Partition::from_classes(3, &[vec![1, 3], vec![2]]).unwrap();
        let want = TensorClass::cross(&[&h * &h, one.clone()]).unwrap();
        assert_eq!(x.diagonal_pullback(&alpha).unwrap(), want);
        assert_eq!(x.diagonal_pullback(&Partition::finest(3).unwrap()).unwrap(), x);
        let full = x.diagonal_pullback(&Partition::coarsest(3).unwrap()).unwrap();
        assert_eq!(full.to_class().unwrap(), &h * &h);
        let cube = TensorClass::cross(&[h.clone(), h.clone(), h.clone()]).unwrap();
        let c = cube.diagonal_pullback(&Partition::coarsest(3).unwrap()).unwrap();
        assert!(c.to_class().unwrap().is_zero());
        assert!(x.diagonal_pullback(&Partition::finest(2).unwrap()).is_err());
    }

    #[test]
    fn tensor_product_and_selection() {
        let r = p2();
        let a = &GradedClass::one(&r) + &GradedClass::named(&r, "h").unwrap();
        let x = TensorClass::cross(&[a.clone(), a.clone()]).unwrap();
        let sq = x.try_mul(&x).unwrap();
        assert_eq!(sq, TensorClass::cross(&[&a * &a, &a * &a]).unwrap());
        // total degree 2 part of (1+h)x(1+h) is h x 1 + 1 x h
        let d2 = x.degree_part(2);
        assert_eq!(d2.len(), 2);
        let j = IndexSequence::new(vec![2, 2]).unwrap();
        // (h x 1 + 1 x h)^2 = 2 h x h  (h^2 x 1 and 1 x h^2 also appear)
        let sel = x.select(&j);
        assert_eq!(sel.len(), 3);
    }

    fn random_tensor(rng: &mut ChaCha8Rng, r: &Arc<GradedRing>, k: usize) -> TensorClass {
        let mut t = TensorClass::zero(r, k);
        for _ in 0..3 {
            let idx: Vec<usize> = (0..k).map(|_| rng.gen_range(0..r.dim())).collect();
            let c = int(rng.gen_range(-3..=3));
            t = t.try_add(&TensorClass::elementary(r, idx, c).unwrap()).unwrap();
        }
        t
    }

    #[test]
    fn pullback_is_functorial() {
        let r = GradedRing::truncated_monomials(&[("t", 2), ("u", 4)], 8, |_| int(1)).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for k in 1..=4 {
            let x = random_tensor(&mut rng, &r, k);
            let all: Vec<Partition> = enumerate(k).unwrap().collect();
            for alpha in &all {
                let direct = x.diagonal_pullback(alpha).unwrap();
                for beta in &all {
                    if refines(beta, alpha).unwrap() {
                        let q = quotient(alpha, beta).unwrap();
                        let two_step = x.diagonal_pullback(beta).unwrap().diagonal_pullback(&q).unwrap();
                        assert_eq!(two_step, direct, "k={k} alpha={alpha} beta={beta}");
                    }
                }
            }
        }
    }
}
