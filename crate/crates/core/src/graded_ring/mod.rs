//! Finite-dimensional, even-graded, commutative rational algebras given by an
//! explicit basis and multiplication table, together with an integration
//! functional (pairing with a fundamental class).
//!
//! A ring may have several *components* (a direct product of rings, modelling
//! the cohomology of a disjoint union); each component has its own top degree.

mod class;
mod multiplicative;
mod tensor;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::Range;
use std::sync::Arc;

use num::{One, Zero};
use thiserror::Error;

use crate::rational::{format, Q};
use crate::report::Check;

pub use class::GradedClass;
pub use multiplicative::{l_class, multiplicative_sequence, power_sums};
pub use tensor::TensorClass;

/// Sparse coordinate vector over a basis.
pub type SparseVec = BTreeMap<usize, Q>;

pub(crate) fn sparse_add(v: &mut SparseVec, i: usize, c: Q) {
    if c.is_zero() {
        return;
    }
    let e = v.entry(i).or_insert_with(Q::zero);
    *e += c;
    if e.is_zero() {
        v.remove(&i);
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RingError {
    #[error("basis element {label:?} has odd degree {degree}")]
    OddDegree { label: String, degree: u32 },
    #[error("degree {0} is odd; only even degrees are supported")]
    OddIndex(u32),
    #[error("basis index {index} out of range (ring has {len} basis elements)")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("unit basis element must have degree 0")]
    UnitNotDegreeZero,
    #[error("ring has no unique degree-0 basis element to serve as unit")]
    NoUnit,
    #[error("product {i}*{j} is not homogeneous of degree {expected}")]
    NonHomogeneousProduct { i: usize, j: usize, expected: u32 },
    #[error("product {i}*{j} of degree {degree} exceeds top degree {top} but is nonzero")]
    ProductAboveTop { i: usize, j: usize, degree: u32, top: u32 },
    #[error("integral is nonzero on basis element {label:?} of non-top degree {degree}")]
    IntegralOffTopDegree { label: String, degree: u32 },
    #[error("operands belong to different rings")]
    RingMismatch,
    #[error("class is not unital: its degree-0 part is not the unit")]
    NonUnital,
    #[error("class has a nonzero degree-0 part; series evaluation needs a nilpotent argument")]
    NotNilpotent,
    #[error("Pontrjagin-type class has a nonzero component in degree {0} (must be divisible by 4)")]
    NonPontrjaginDegree(u32),
    #[error("tensor arity mismatch: expected {expected}, found {found}")]
    ArityMismatch { expected: usize, found: usize },
    #[error("ring needs at least one basis element")]
    EmptyBasis,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BasisElement {
    pub label: String,
    pub degree: u32,
}

impl BasisElement {
    pub fn new(label: impl Into<String>, degree: u32) -> Self {
        BasisElement {
            label: label.into(),
            degree,
        }
    }
}

/// A block of consecutive basis elements forming one factor of a product ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Component {
    pub range: Range<usize>,
    pub top_degree: u32,
}

#[derive(Debug, Clone, PartialEq)]
pub struct GradedRing {
    basis: Vec<BasisElement>,
    unit: SparseVec,
    products: Vec<Vec<SparseVec>>,
    components: Vec<Component>,
    integral: SparseVec,
}

impl GradedRing {
    /// Builds a single-component ring.
    ///
    /// `products` lists structure constants for basis pairs; a missing `(j, i)`
    /// entry is filled from `(i, j)`, products with the unit default to the unit
    /// law, and all other missing pairs are zero. Table axioms (associativity,
    /// commutativity, unit law) are not enforced here; see [`Self::axiom_checks`].
    pub fn new(
        basis: Vec<BasisElement>,
        unit_index: Option<usize>,
        products: Vec<((usize, usize), SparseVec)>,
        top_degree: u32,
        integral: SparseVec,
    ) -> Result<Arc<Self>, RingError> {
        let n = basis.len();
        if n == 0 {
            return Err(RingError::EmptyBasis);
        }
        for b in &basis {
            if b.degree % 2 != 0 {
                return Err(RingError::OddDegree {
                    label: b.label.clone(),
                    degree: b.degree,
                });
            }
        }
        if !top_degree.is_multiple_of(2) {
            return Err(RingError::OddIndex(top_degree));
        }
        let unit_index = match unit_index {
            Some(u) => {
                check_index(u, n)?;
                if basis[u].degree != 0 {
                    return Err(RingError::UnitNotDegreeZero);
                }
                u
            }
            None => {
                let zeros: Vec<usize> = (0..n).filter(|&i| basis[i].degree == 0).collect();
                match zeros.as_slice() {
                    [u] => *u,
                    _ => return Err(RingError::NoUnit),
                }
            }
        };
        let mut table: Vec<Vec<Option<SparseVec>>> = vec![vec![None; n]; n];
        for ((i, j), v) in products {
            check_index(i, n)?;
            check_index(j, n)?;
            for &r in v.keys() {
                check_index(r, n)?;
            }
            let v: SparseVec = v.into_iter().filter(|(_, c)| !c.is_zero()).collect();
            table[i][j] = Some(v);
        }
        for i in 0..n {
            for j in 0..n {
                if table[i][j].is_none() {
                    table[i][j] = table[j][i].clone();
                }
            }
        }
        for i in 0..n {
            if table[unit_index][i].is_none() {
                let mut v = SparseVec::new();
                v.insert(i, Q::one());
                table[unit_index][i] = Some(v.clone());
                table[i][unit_index] = Some(v);
            }
        }
        let products: Vec<Vec<SparseVec>> = table
            .into_iter()
            .map(|row| row.into_iter().map(|v| v.unwrap_or_default()).collect())
            .collect();
        let mut unit = SparseVec::new();
        unit.insert(unit_index, Q::one());
        let ring = GradedRing {
            basis,
            unit,
            products,
            components: vec![Component {
                range: 0..n,
                top_degree,
            }],
            integral: integral.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        };
        ring.check_structure()?;
        Ok(Arc::new(ring))
    }

    fn check_structure(&self) -> Result<(), RingError> {
        let n = self.basis.len();
        for (i, row) in self.products.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                let expected = self.basis[i].degree + self.basis[j].degree;
                for &r in v.keys() {
                    check_index(r, n)?;
                    if self.basis[r].degree != expected {
                        return Err(RingError::NonHomogeneousProduct { i, j, expected });
                    }
                }
                let top = self.component_top_of(i).min(self.component_top_of(j));
                if expected > top && !v.is_empty() {
                    return Err(RingError::ProductAboveTop {
                        i,
                        j,
                        degree: expected,
                        top,
                    });
                }
            }
        }
        for &i in self.integral.keys() {
            check_index(i, n)?;
            if self.basis[i].degree != self.component_top_of(i) {
                return Err(RingError::IntegralOffTopDegree {
                    label: self.basis[i].label.clone(),
                    degree: self.basis[i].degree,
                });
            }
        }
        Ok(())
    }

    /// `Q[gen]/(gen^{top_power+1})` with `gen` in degree `gen_degree` and
    /// `⟨gen^{top_power}⟩ = top_integral`.
    pub fn truncated_polynomial(
        label: &str,
        gen_degree: u32,
        top_power: u32,
        top_integral: Q,
    ) -> Result<Arc<Self>, RingError> {
        Self::truncated_monomials(&[(label, gen_degree)], gen_degree * top_power, |e| {
            if e[0] == top_power as usize {
                top_integral.clone()
            } else {
                Q::zero()
            }
        })
    }

    /// Polynomial ring on the given generators truncated above `top_degree`.
    ///
    /// The basis is every monomial of degree `<= top_degree`, ordered by degree
    /// and then by exponent vector; `integral` assigns a value to each
    /// top-degree monomial (it is ignored below the top).
    pub fn truncated_monomials(
        generators: &[(&str, u32)],
        top_degree: u32,
        integral: impl Fn(&[usize]) -> Q,
    ) -> Result<Arc<Self>, RingError> {
        for &(label, d) in generators {
            if d == 0 || d % 2 != 0 {
                return Err(RingError::OddDegree {
                    label: label.to_string(),
                    degree: d,
                });
            }
        }
        let mut monomials: Vec<Vec<usize>> = vec![vec![]];
        for &(_, d) in generators {
            let mut next = Vec::new();
            for m in &monomials {
                let deg: u32 = monomial_degree(m, generators);
                let mut e = 0usize;
                while deg + d * e as u32 <= top_degree {
                    let mut m2 = m.clone();
                    m2.push(e);
                    next.push(m2);
                    e += 1;
                }
            }
            monomials = next;
        }
        monomials.sort_by_key(|m| (monomial_degree(m, generators), std::cmp::Reverse(m.clone())));
        let index: BTreeMap<Vec<usize>, usize> = monomials
            .iter()
            .enumerate()
            .map(|(i, m)| (m.clone(), i))
            .collect();
        let basis: Vec<BasisElement> = monomials
            .iter()
            .map(|m| BasisElement::new(monomial_label(m, generators), monomial_degree(m, generators)))
            .collect();
        let mut products = Vec::new();
        for (i, a) in monomials.iter().enumerate() {
            for (j, b) in monomials.iter().enumerate().skip(i) {
                let prod: Vec<usize> = a.iter().zip(b).map(|(x, y)| x + y).collect();
                let mut v = SparseVec::new();
                if let Some(&r) = index.get(&prod) {
                    v.insert(r, Q::one());
                }
                products.push(((i, j), v));
            }
        }
        let integral: SparseVec = monomials
            .iter()
            .enumerate()
            .filter(|(_, m)| monomial_degree(m, generators) == top_degree)
            .map(|(i, m)| (i, integral(m)))
            .collect();
        let unit = index[&vec![0; generators.len()]];
        Self::new(basis, Some(unit), products, top_degree, integral)
    }

    /// Direct product ring (cohomology of a disjoint union). Labels are
    /// prefixed with the component number; the unit is the sum of units and
    /// the integral is the sum of the component integrals.
    pub fn product(rings: &[Arc<GradedRing>]) -> Result<Arc<Self>, RingError> {
        if rings.len() == 1 {
            return Ok(rings[0].clone());
        }
        if rings.is_empty() {
            return Err(RingError::EmptyBasis);
        }
        let mut basis = Vec::new();
        let mut unit = SparseVec::new();
        let mut components = Vec::new();
        let mut integral = SparseVec::new();
        let mut offsets = Vec::new();
        for (c, r) in rings.iter().enumerate() {
            let off = basis.len();
            offsets.push(off);
            for b in &r.basis {
                basis.push(BasisElement::new(format!("{}:{}", c + 1, b.label), b.degree));
            }
            for (i, q) in &r.unit {
                unit.insert(off + i, q.clone());
            }
            for (i, q) in &r.integral {
                integral.insert(off + i, q.clone());
            }
            for comp in &r.components {
                components.push(Component {
                    range: comp.range.start + off..comp.range.end + off,
                    top_degree: comp.top_degree,
                });
            }
        }
        let n = basis.len();
        let mut products = vec![vec![SparseVec::new(); n]; n];
        for (r, &off) in rings.iter().zip(&offsets) {
            for (i, row) in r.products.iter().enumerate() {
                for (j, v) in row.iter().enumerate() {
                    products[off + i][off + j] = v.iter().map(|(x, q)| (off + x, q.clone())).collect();
                }
            }
        }
        let ring = GradedRing {
            basis,
            unit,
            products,
            components,
            integral,
        };
        ring.check_structure()?;
        Ok(Arc::new(ring))
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[BasisElement] {
        &self.basis
    }

    pub fn degree(&self, i: usize) -> u32 {
        self.basis[i].degree
    }

    pub fn label(&self, i: usize) -> &str {
        &self.basis[i].label
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.basis.iter().position(|b| b.label == label)
    }

    pub fn unit(&self) -> &SparseVec {
        &self.unit
    }

    /// The unit as a single basis index, when it is one.
    pub fn unit_index(&self) -> Option<usize> {
        match self.unit.iter().next() {
            Some((&i, q)) if self.unit.len() == 1 && q.is_one() => Some(i),
            _ => None,
        }
    }

    pub fn product_of(&self, i: usize, j: usize) -> &SparseVec {
        &self.products[i][j]
    }

    pub fn integral(&self) -> &SparseVec {
        &self.integral
    }

    pub fn components(&self) -> &[Component] {
        &self.components
    }

    /// Largest top degree over all components.
    pub fn top_degree(&self) -> u32 {
        self.components.iter().map(|c| c.top_degree).max().unwrap_or(0)
    }

    pub fn component_of(&self, i: usize) -> usize {
        self.components
            .iter()
            .position(|c| c.range.contains(&i))
            .expect("basis index outside every component")
    }

    pub fn component_top_of(&self, i: usize) -> u32 {
        self.components[self.component_of(i)].top_degree
    }

    /// Number of multiplications after which a class without degree-0 part
    /// is guaranteed to vanish (`a^j = 0` for `j >= series_order()`).
    pub fn series_order(&self) -> usize {
        (self.top_degree() / 2) as usize + 1
    }

    /// Bilinear extension of the multiplication table.
    pub fn mul_sparse(&self, a: &SparseVec, b: &SparseVec) -> SparseVec {
        let mut out = SparseVec::new();
        for (&i, x) in a {
            for (&j, y) in b {
                let xy = x * y;
                for (&r, c) in &self.products[i][j] {
                    sparse_add(&mut out, r, &xy * c);
                }
            }
        }
        out
    }

    /// Finite verification of the algebra axioms on the multiplication table.
    pub fn axiom_checks(&self, name: &str) -> Vec<Check> {
        let n = self.dim();
        let mut out = Vec::new();

        let mut witness = None;
        'comm: for i in 0..n {
            for j in 0..n {
                if self.products[i][j] != self.products[j][i] {
                    witness = Some(format!("{}*{} != {}*{}", self.label(i), self.label(j), self.label(j), self.label(i)));
                    break 'comm;
                }
            }
        }
        out.push(Check::from_witness(format!("{name}: commutativity"), witness));

        let mut witness = None;
        for i in 0..n {
            let b = basis_vec(i);
            if self.mul_sparse(&self.unit, &b) != b {
                witness = Some(format!("1*{} != {}", self.label(i), self.label(i)));
                break;
            }
        }
        out.push(Check::from_witness(format!("{name}: unit law"), witness));

        let mut witness = None;
        'assoc: for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let left = self.mul_sparse(&self.products[i][j], &basis_vec(k));
                    let right = self.mul_sparse(&basis_vec(i), &self.products[j][k]);
                    if left != right {
                        witness = Some(format!(
                            "({}*{})*{} != {}*({}*{})",
                            self.label(i), self.label(j), self.label(k),
                            self.label(i), self.label(j), self.label(k)
                        ));
                        break 'assoc;
                    }
                }
            }
        }
        out.push(Check::from_witness(format!("{name}: associativity"), witness));

        // degree additivity and truncation are enforced at construction
        out.push(Check::pass(format!("{name}: degree additivity and truncation")));

        let mut witness = None;
        for comp in &self.components {
            let has_top = comp
                .range
                .clone()
                .any(|i| self.integral.contains_key(&i));
            if !has_top && comp.top_degree > 0 {
                witness = Some(format!(
                    "integral vanishes on the component spanning basis {:?}",
                    comp.range
                ));
            }
        }
        out.push(Check::from_witness(format!("{name}: nondegenerate integral"), witness));
        out
    }
}

pub(crate) fn basis_vec(i: usize) -> SparseVec {
    let mut v = SparseVec::new();
    v.insert(i, Q::one());
    v
}

pub(crate) fn check_index(i: usize, len: usize) -> Result<(), RingError> {
    if i >= len {
        Err(RingError::IndexOutOfRange { index: i, len })
    } else {
        Ok(())
    }
}

fn monomial_degree(m: &[usize], generators: &[(&str, u32)]) -> u32 {
    m.iter().zip(generators).map(|(e, (_, d))| *e as u32 * d).sum()
}

fn monomial_label(m: &[usize], generators: &[(&str, u32)]) -> String {
    let parts: Vec<String> = m
        .iter()
        .zip(generators)
        .filter(|(e, _)| **e > 0)
        .map(|(e, (l, _))| if *e == 1 { l.to_string() } else { format!("{l}^{e}") })
        .collect();
    if parts.is_empty() {
        "1".to_string()
    } else {
        parts.join("*")
    }
}

/// A sequence `J = (j_1, …, j_l)` of even cohomological degrees selecting the
/// product `a_{j_1} ⋯ a_{j_l}` of homogeneous parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IndexSequence(Vec<u32>);

impl IndexSequence {
    pub fn new(entries: Vec<u32>) -> Result<Self, RingError> {
        if let Some(&d) = entries.iter().find(|d| *d % 2 != 0) {
            return Err(RingError::OddIndex(d));
        }
        Ok(IndexSequence(entries))
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn total(&self) -> u32 {
        self.0.iter().sum()
    }
}

impl fmt::Display for IndexSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|d| d.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

impl std::str::FromStr for IndexSequence {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let t = s.trim().trim_start_matches('(').trim_end_matches(')');
        let entries = t
            .split(',')
            .filter(|p| !p.trim().is_empty())
            .map(|p| p.trim().parse::<u32>().map_err(|e| format!("bad index {p:?}: {e}")))
            .collect::<Result<Vec<_>, _>>()?;
        IndexSequence::new(entries).map_err(|e| e.to_string())
    }
}

pub(crate) fn format_sparse(v: &SparseVec, ring: &GradedRing) -> String {
    if v.is_empty() {
        return "0".to_string();
    }
    let terms: Vec<String> = v
        .iter()
        .map(|(&i, c)| {
            let label = ring.label(i);
            if label == "1" {
                format(c)
            } else if c.is_one() {
                label.to_string()
            } else if *c == -Q::one() {
                format!("-{label}")
            } else {
                format!("{}*{label}", format(c))
            }
        })
        .collect();
    terms.join(" + ")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    #[test]
    fn truncated_polynomial_basis() {
        let r = GradedRing::truncated_polynomial("h", 2, 2, int(1)).unwrap();
        assert_eq!(r.dim(), 3);
        assert_eq!(r.label(0), "1");
        assert_eq!(r.label(2), "h^2");
        assert_eq!(r.top_degree(), 4);
        assert!(r.axiom_checks("P2").iter().all(|c| c.passed));
        assert_eq!(r.product_of(1, 2), &SparseVec::new());
    }

    #[test]
    fn monomial_ring_axioms() {
        let r = GradedRing::truncated_monomials(&[("t", 2), ("s", 2), ("u", 4)], 8, |_| int(1)).unwrap();
        assert!(r.axiom_checks("M").iter().all(|c| c.passed));
        assert_eq!(r.degree(r.dim() - 1), 8);
    }

    #[test]
    fn structural_errors() {
        let b = vec![BasisElement::new("1", 0), BasisElement::new("x", 3)];
        assert!(matches!(
            GradedRing::new(b, Some(0), vec![], 6, SparseVec::new()),
            Err(RingError::OddDegree { .. })
        ));
        let b = vec![BasisElement::new("1", 0), BasisElement::new("h", 2)];
        let mut v = SparseVec::new();
        v.insert(1, int(1));
        // h*h landing on h is not homogeneous
        assert!(matches!(
            GradedRing::new(b.clone(), Some(0), vec![((1, 1), v)], 2, SparseVec::new()),
            Err(RingError::NonHomogeneousProduct { .. })
        ));
        let mut integral = SparseVec::new();
        integral.insert(0, int(1));
        assert!(matches!(
            GradedRing::new(b, Some(0), vec![], 2, integral),
            Err(RingError::IntegralOffTopDegree { .. })
        ));
    }

    #[test]
    fn broken_table_fails_axioms() {
        // x*y = z but y*x = 0 violates commutativity
        let b = vec![
            BasisElement::new("1", 0),
            BasisElement::new("x", 2),
            BasisElement::new("y", 2),
            BasisElement::new("z", 4),
        ];
        let mut v = SparseVec::new();
        v.insert(3, int(1));
        let mut integral = SparseVec::new();
        integral.insert(3, int(1));
        let r = GradedRing::new(b, Some(0), vec![((1, 2), v), ((2, 1), SparseVec::new())], 4, integral).unwrap();
        let checks = r.axiom_checks("bad");
        assert!(!checks[0].passed);
    }

    #[test]
    fn product_ring_components() {
        let a = GradedRing::truncated_polynomial("t", 2, 1, int(1)).unwrap();
        let b = GradedRing::truncated_polynomial("s", 2, 2, int(1)).unwrap();
        let p = GradedRing::product(&[a, b]).unwrap();
        assert_eq!(p.dim(), 5);
        assert_eq!(p.components().len(), 2);
        assert_eq!(p.components()[0].top_degree, 2);
        assert_eq!(p.components()[1].top_degree, 4);
        assert_eq!(p.unit().len(), 2);
        assert_eq!(p.unit_index(), None);
        assert!(p.axiom_checks("union").iter().all(|c| c.passed));
    }

    #[test]
    fn index_sequence_parsing() {
        let j: IndexSequence = "4,4".parse().unwrap();
        assert_eq!(j.total(), 8);
        assert!("3".parse::<IndexSequence>().is_err());
        assert_eq!("(8)".parse::<IndexSequence>().unwrap().entries(), &[8]);
    }
}
