//! Equivalence relations on `{1, …, k}`.
//!
//! A [`Partition`] stores its classes in canonical order: every class is sorted
//! ascending and classes are ordered by their smallest element, so the first
//! class always contains `1`. Enumeration walks restricted growth strings in
//! lexicographic order, which produces exactly this canonical labelling.

use std::fmt;

use num::{BigInt, One};
use thiserror::Error;

use crate::rational::{factorial, Q};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PartitionError {
    #[error("ground set size must be positive")]
    EmptyGroundSet,
    #[error("partitions live on different ground sets ({0} vs {1})")]
    GroundSetMismatch(usize, usize),
    #[error("{beta} does not refine {alpha}")]
    NotRefinement { beta: String, alpha: String },
    #[error("classes do not partition {{1..{k}}}: {reason}")]
    InvalidClasses { k: usize, reason: String },
    #[error("type vector {types:?} does not describe a partition of {k}")]
    InvalidType { k: usize, types: Vec<usize> },
}

/// An equivalence relation on `{1, …, k}` with canonically ordered classes.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    k: usize,
    // labels[i] is the 0-based class index of element i+1 (a restricted growth string)
    labels: Vec<usize>,
    classes: Vec<Vec<usize>>,
}

impl Partition {
    /// Builds a partition from arbitrary class labels for the elements `1..=k`
    /// (`labels[i]` belongs to element `i + 1`); only equality of labels matters.
    pub fn from_labels<T: PartialEq>(labels: &[T]) -> Result<Self, PartitionError> {
        if labels.is_empty() {
            return Err(PartitionError::EmptyGroundSet);
        }
        let mut seen: Vec<&T> = Vec::new();
        let rgs: Vec<usize> = labels
            .iter()
            .map(|l| match seen.iter().position(|s| *s == l) {
                Some(p) => p,
                None => {
                    seen.push(l);
                    seen.len() - 1
                }
            })
            .collect();
        Ok(Self::from_rgs_unchecked(rgs))
    }

    /// Builds a partition from explicit 1-based classes in any order.
    pub fn from_classes(k: usize, classes: &[Vec<usize>]) -> Result<Self, PartitionError> {
        if k == 0 {
            return Err(PartitionError::EmptyGroundSet);
        }
        let invalid = |reason: String| PartitionError::InvalidClasses { k, reason };
        let mut owner = vec![usize::MAX; k];
        for (c, class) in classes.iter().enumerate() {
            if class.is_empty() {
                return Err(invalid("empty class".into()));
            }
            for &i in class {
                if i == 0 || i > k {
                    return Err(invalid(format!("element {i} out of range")));
                }
                if owner[i - 1] != usize::MAX {
                    return Err(invalid(format!("element {i} appears twice")));
                }
                owner[i - 1] = c;
            }
        }
        if let Some(i) = owner.iter().position(|&o| o == usize::MAX) {
            return Err(invalid(format!("element {} missing", i + 1)));
        }
        Self::from_labels(&owner)
    }

    fn from_rgs_unchecked(labels: Vec<usize>) -> Self {
        let n_classes = labels.iter().copied().max().map_or(0, |m| m + 1);
        let mut classes = vec![Vec::new(); n_classes];
        for (i, &l) in labels.iter().enumerate() {
            classes[l].push(i + 1);
        }
        Partition {
            k: labels.len(),
            labels,
            classes,
        }
    }

    /// The trivial relation `0(k)`: every element alone.
    pub fn finest(k: usize) -> Result<Self, PartitionError> {
        if k == 0 {
            return Err(PartitionError::EmptyGroundSet);
        }
        Ok(Self::from_rgs_unchecked((0..k).collect()))
    }

    /// The universal relation `1(k)`: one class.
    pub fn coarsest(k: usize) -> Result<Self, PartitionError> {
        if k == 0 {
            return Err(PartitionError::EmptyGroundSet);
        }
        Ok(Self::from_rgs_unchecked(vec![0; k]))
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Number of classes `|α|`.
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    /// The restricted growth string (0-based class index per element).
    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    /// 0-based index of the class containing the 1-based element `i`.
    pub fn class_index_of(&self, i: usize) -> usize {
        self.labels[i - 1]
    }

    /// The class `α[i]` containing the 1-based element `i`.
    pub fn class_of(&self, i: usize) -> &[usize] {
        &self.classes[self.labels[i - 1]]
    }

    /// Bitmask of each class (bit `i-1` for element `i`); requires `k <= 64`.
    pub fn class_masks(&self) -> Vec<u64> {
        assert!(self.k <= 64);
        self.classes
            .iter()
            .map(|c| c.iter().fold(0u64, |m, &i| m | (1 << (i - 1))))
            .collect()
    }

    pub fn is_finest(&self) -> bool {
        self.len() == self.k
    }

    pub fn is_coarsest(&self) -> bool {
        self.len() == 1
    }

    /// True iff every class of `alpha` is a union of classes of `self`.
    pub fn refines(&self, alpha: &Partition) -> Result<bool, PartitionError> {
        refines(self, alpha)
    }

    /// `l_i` = number of classes of size `i`, for `i = 1..=k`.
    pub fn type_vector(&self) -> TypeVector {
        let mut l = vec![0; self.k];
        for c in &self.classes {
            l[c.len() - 1] += 1;
        }
        TypeVector(l)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (n, c) in self.classes.iter().enumerate() {
            if n > 0 {
                write!(f, ",")?;
            }
            write!(f, "{{")?;
            for (m, i) in c.iter().enumerate() {
                if m > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{i}")?;
            }
            write!(f, "}}")?;
        }
        write!(f, "}}")
    }
}

/// Iterator over `Eq(k)` in restricted-growth-string lexicographic order.
#[derive(Debug, Clone)]
pub struct Partitions {
    rgs: Vec<usize>,
    // prefix_max[i] = max(rgs[0..=i])
    prefix_max: Vec<usize>,
    done: bool,
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        if self.done {
            return None;
        }
        let current = Partition::from_rgs_unchecked(self.rgs.clone());
        let k = self.rgs.len();
        let mut i = k;
        loop {
            if i <= 1 {
                self.done = true;
                break;
            }
            i -= 1;
            if self.rgs[i] <= self.prefix_max[i - 1] {
                self.rgs[i] += 1;
                self.prefix_max[i] = self.prefix_max[i - 1].max(self.rgs[i]);
                for j in i + 1..k {
                    self.rgs[j] = 0;
                    self.prefix_max[j] = self.prefix_max[i];
                }
                break;
            }
        }
        Some(current)
    }
}

/// Every partition of `{1..k}` exactly once.
pub fn enumerate(k: usize) -> Result<Partitions, PartitionError> {
    if k == 0 {
        return Err(PartitionError::EmptyGroundSet);
    }
    Ok(Partitions {
        rgs: vec![0; k],
        prefix_max: vec![0; k],
        done: false,
    })
}

/// `beta <= alpha` in the refinement order.
pub fn refines(beta: &Partition, alpha: &Partition) -> Result<bool, PartitionError> {
    if beta.k != alpha.k {
        return Err(PartitionError::GroundSetMismatch(beta.k, alpha.k));
    }
    // beta refines alpha iff beta-equivalent elements are alpha-equivalent
    Ok(beta
        .classes
        .iter()
        .all(|c| c.iter().all(|&i| alpha.labels[i - 1] == alpha.labels[c[0] - 1])))
}

/// The relation `α/β` on the classes of `β`, re-indexed `1..=|β|` by the
/// canonical class order of `β`.
pub fn quotient(alpha: &Partition, beta: &Partition) -> Result<Partition, PartitionError> {
    if !refines(beta, alpha)? {
        return Err(PartitionError::NotRefinement {
            beta: beta.to_string(),
            alpha: alpha.to_string(),
        });
    }
    let labels: Vec<usize> = beta
        .classes
        .iter()
        .map(|c| alpha.labels[c[0] - 1])
        .collect();
    Partition::from_labels(&labels)
}

/// Multiplicities `(l_1, …, l_k)` of class sizes.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TypeVector(pub Vec<usize>);

impl TypeVector {
    /// `Σ i·l_i`.
    pub fn weight(&self) -> usize {
        self.0.iter().enumerate().map(|(i, l)| (i + 1) * l).sum()
    }

    /// `Σ l_i`, the number of classes.
    pub fn parts(&self) -> usize {
        self.0.iter().sum()
    }

    /// `l_i` for a 1-based size `i` (zero beyond the stored length).
    pub fn count(&self, size: usize) -> usize {
        self.0.get(size - 1).copied().unwrap_or(0)
    }
}

/// All type vectors of length `k` with `Σ i·l_i = k` (integer partitions of `k`).
pub fn type_vectors(k: usize) -> Vec<TypeVector> {
    let mut out = Vec::new();
    let mut l = vec![0; k];
    fn rec(size: usize, remaining: usize, l: &mut Vec<usize>, out: &mut Vec<TypeVector>) {
        if remaining == 0 {
            out.push(TypeVector(l.clone()));
            return;
        }
        if size == 0 {
            return;
        }
        for mult in (0..=remaining / size).rev() {
            l[size - 1] = mult;
            rec(size - 1, remaining - mult * size, l, out);
        }
        l[size - 1] = 0;
    }
    if k > 0 {
        rec(k, k, &mut l, &mut out);
    }
    out
}

fn check_type(k: usize, types: &[usize], weight: usize) -> Result<(), PartitionError> {
    let w: usize = types.iter().enumerate().map(|(i, l)| (i + 1) * l).sum();
    if w != weight {
        return Err(PartitionError::InvalidType {
            k,
            types: types.to_vec(),
        });
    }
    Ok(())
}

/// Number of partitions of `{1..k}` with type `(l_1, …, l_k)`:
/// `k! / ∏ (i!^{l_i} · l_i!)`.
pub fn count_by_type(k: usize, types: &[usize]) -> Result<Q, PartitionError> {
    check_type(k, types, k)?;
    let mut denom = BigInt::one();
    for (i, &l) in types.iter().enumerate() {
        denom *= num::pow(factorial(i + 1), l) * factorial(l);
    }
    Ok(Q::new(factorial(k), denom))
}

/// Number of partitions of `{1..k}` whose class containing `1` has `l`
/// elements and whose other classes have type `(l_1, …, l_{k-1})`:
/// `(k-1)! / ((l-1)! · ∏ i!^{l_i} · l_i!)`.
pub fn count_by_type_marked(k: usize, l: usize, types: &[usize]) -> Result<Q, PartitionError> {
    if l == 0 || l > k {
        return Err(PartitionError::InvalidType {
            k,
            types: types.to_vec(),
        });
    }
    check_type(k, types, k - l)?;
    let mut denom = factorial(l - 1);
    for (i, &li) in types.iter().enumerate() {
        denom *= num::pow(factorial(i + 1), li) * factorial(li);
    }
    Ok(Q::new(factorial(k - 1), denom))
}
