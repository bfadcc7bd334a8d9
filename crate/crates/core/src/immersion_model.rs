//! Cohomological data of a generic immersion `f: M ↬ N` and its consistency
//! checks.

use std::sync::{Arc, OnceLock};

use num::Zero;
use thiserror::Error;

use crate::graded_ring::{l_class, GradedClass, GradedRing, RingError, SparseVec};
use crate::linalg::solve_in_span;
use crate::rational::{format, Q};
use crate::report::{Check, Report};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModelError {
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error("codimension must be a positive even integer, got {0}")]
    BadCodim(u32),
    #[error("{0}")]
    Shape(String),
    #[error("model has no Chern data")]
    MissingChern,
    #[error("components do not share the target ring")]
    TargetMismatch,
    #[error("multiplicity must be at least 1")]
    BadMultiplicity,
    #[error("precondition failed: {what} ({witness})")]
    Precondition { what: String, witness: String },
    #[error("{0}")]
    Cap(String),
}

/// Raw data for [`ImmersionModel::new`]. Linear maps are given column-wise:
/// `pullback[j]` is `f*` of the `j`-th basis element of `H*(N)`, and
/// `pushforward[i]` is `f_!` of the `i`-th basis element of `H*(M)`.
#[derive(Debug, Clone)]
pub struct ModelData {
    pub hm: Arc<GradedRing>,
    pub hn: Arc<GradedRing>,
    pub codim: u32,
    pub pullback: Vec<SparseVec>,
    pub pushforward: Vec<SparseVec>,
    pub euler: SparseVec,
    pub p_m: SparseVec,
    pub p_n: SparseVec,
    pub c_m: Option<SparseVec>,
    pub c_n: Option<SparseVec>,
}

#[derive(Default)]
struct Derived {
    l_m: OnceLock<Result<GradedClass, RingError>>,
    l_n: OnceLock<Result<GradedClass, RingError>>,
    l_nu_inv: OnceLock<Result<GradedClass, RingError>>,
    p_nu_inv: OnceLock<Result<GradedClass, RingError>>,
    c_nu_inv: OnceLock<Result<GradedClass, ModelError>>,
}

impl Clone for Derived {
    fn clone(&self) -> Self {
        Derived::default()
    }
}

#[derive(Clone)]
pub struct ImmersionModel {
    hm: Arc<GradedRing>,
    hn: Arc<GradedRing>,
    codim: u32,
    pullback: Vec<SparseVec>,
    pushforward: Vec<SparseVec>,
    euler: GradedClass,
    p_m: GradedClass,
    p_n: GradedClass,
    c_m: Option<GradedClass>,
    c_n: Option<GradedClass>,
    components: Vec<ImmersionModel>,
    derived: Derived,
}

fn check_vec(v: &SparseVec, dim: usize, what: &str) -> Result<(), ModelError> {
    if let Some((&i, _)) = v.iter().find(|(&i, _)| i >= dim) {
        return Err(ModelError::Shape(format!("{what}: index {i} out of range (dimension {dim})")));
    }
    Ok(())
}

fn apply(map: &[SparseVec], x: &GradedClass, target: &Arc<GradedRing>) -> GradedClass {
    let mut out = SparseVec::new();
    for (&i, c) in x.coords() {
        for (&j, y) in &map[i] {
            *out.entry(j).or_insert_with(Q::zero) += c * y;
        }
    }
    GradedClass::from_coords(target, out).expect("map image validated at construction")
}

impl ImmersionModel {
    pub fn new(data: ModelData) -> Result<Self, ModelError> {
        let ModelData {
            hm,
            hn,
            codim,
            pullback,
            pushforward,
            euler,
            p_m,
            p_n,
            c_m,
            c_n,
        } = data;
        if codim == 0 || codim % 2 != 0 {
            return Err(ModelError::BadCodim(codim));
        }
        if pullback.len() != hn.dim() {
            return Err(ModelError::Shape(format!(
                "pullback has {} columns, H*(N) has dimension {}",
                pullback.len(),
                hn.dim()
            )));
        }
        if pushforward.len() != hm.dim() {
            return Err(ModelError::Shape(format!(
                "pushforward has {} columns, H*(M) has dimension {}",
                pushforward.len(),
                hm.dim()
            )));
        }
        for v in &pullback {
            check_vec(v, hm.dim(), "pullback")?;
        }
        for v in &pushforward {
            check_vec(v, hn.dim(), "pushforward")?;
        }
        let mk = |v: SparseVec, r: &Arc<GradedRing>| GradedClass::from_coords(r, v);
        Ok(ImmersionModel {
            euler: mk(euler, &hm)?,
            p_m: mk(p_m, &hm)?,
            p_n: mk(p_n, &hn)?,
            c_m: c_m.map(|v| mk(v, &hm)).transpose()?,
            c_n: c_n.map(|v| mk(v, &hn)).transpose()?,
            hm,
            hn,
            codim,
            pullback,
            pushforward,
            components: Vec::new(),
            derived: Derived::default(),
        })
    }

    /// Raw data, for serialization.
    pub fn data(&self) -> ModelData {
        ModelData {
            hm: self.hm.clone(),
            hn: self.hn.clone(),
            codim: self.codim,
            pullback: self.pullback.clone(),
            pushforward: self.pushforward.clone(),
            euler: self.euler.coords().clone(),
            p_m: self.p_m.coords().clone(),
            p_n: self.p_n.coords().clone(),
            c_m: self.c_m.as_ref().map(|c| c.coords().clone()),
            c_n: self.c_n.as_ref().map(|c| c.coords().clone()),
        }
    }

    /// Disjoint union `M_1 ⊔ … ⊔ M_l ↬ N`: `H*(M)` is the product ring, `f*`
    /// is the tuple of pullbacks, `f_!` acts blockwise and the characteristic
    /// classes are block sums.
    pub fn disjoint_union(models: &[ImmersionModel]) -> Result<Self, ModelError> {
        let first = models.first().ok_or_else(|| ModelError::Shape("empty union".into()))?;
        if models.len() == 1 {
            return Ok(first.clone());
        }
        for m in models {
            if *m.hn != *first.hn {
                return Err(ModelError::TargetMismatch);
            }
            if m.codim != first.codim {
                return Err(ModelError::Shape("components have different codimensions".into()));
            }
        }
        let parts: Vec<ImmersionModel> = models.iter().flat_map(|m| m.parts()).cloned().collect();
        let rings: Vec<Arc<GradedRing>> = parts.iter().map(|m| m.hm.clone()).collect();
        let hm = GradedRing::product(&rings)?;
        let mut offsets = Vec::new();
        let mut off = 0;
        for r in &rings {
            offsets.push(off);
            off += r.dim();
        }
        let shift = |v: &SparseVec, o: usize| -> SparseVec { v.iter().map(|(&i, c)| (i + o, c.clone())).collect() };
        let block = |get: &dyn Fn(&ImmersionModel) -> SparseVec| -> SparseVec {
            let mut out = SparseVec::new();
            for (m, &o) in parts.iter().zip(&offsets) {
                out.extend(shift(&get(m), o));
            }
            out
        };
        let pullback: Vec<SparseVec> = (0..first.hn.dim())
            .map(|j| block(&|m: &ImmersionModel| m.pullback[j].clone()))
            .collect();
        let pushforward: Vec<SparseVec> = parts.iter().flat_map(|m| m.pushforward.iter().cloned()).collect();
        let all_chern = parts.iter().all(|m| m.c_m.is_some() && m.c_n.is_some());
        let data = ModelData {
            hm,
            hn: first.hn.clone(),
            codim: first.codim,
            pullback,
            pushforward,
            euler: block(&|m: &ImmersionModel| m.euler.coords().clone()),
            p_m: block(&|m: &ImmersionModel| m.p_m.coords().clone()),
            p_n: first.p_n.coords().clone(),
            c_m: all_chern.then(|| block(&|m: &ImmersionModel| m.c_m.as_ref().unwrap().coords().clone())),
            c_n: if all_chern { first.c_n.as_ref().map(|c| c.coords().clone()) } else { None },
        };
        let mut out = ImmersionModel::new(data)?;
        out.components = parts;
        Ok(out)
    }

    /// The connected pieces this model was assembled from (itself if it is
    /// not a union).
    pub fn parts(&self) -> &[ImmersionModel] {
        if self.components.is_empty() {
            std::slice::from_ref(self)
        } else {
            &self.components
        }
    }

    pub fn is_union(&self) -> bool {
        !self.components.is_empty()
    }

    pub fn hm(&self) -> &Arc<GradedRing> {
        &self.hm
    }

    pub fn hn(&self) -> &Arc<GradedRing> {
        &self.hn
    }

    pub fn codim(&self) -> u32 {
        self.codim
    }

    pub fn euler(&self) -> &GradedClass {
        &self.euler
    }

    pub fn p_m(&self) -> &GradedClass {
        &self.p_m
    }

    pub fn p_n(&self) -> &GradedClass {
        &self.p_n
    }

    pub fn c_m(&self) -> Option<&GradedClass> {
        self.c_m.as_ref()
    }

    pub fn c_n(&self) -> Option<&GradedClass> {
        self.c_n.as_ref()
    }

    pub fn has_chern(&self) -> bool {
        self.c_m.is_some() && self.c_n.is_some()
    }

    pub fn pullback_matrix(&self) -> &[SparseVec] {
        &self.pullback
    }

    pub fn pushforward_matrix(&self) -> &[SparseVec] {
        &self.pushforward
    }

    /// `f*`.
    pub fn pullback(&self, y: &GradedClass) -> GradedClass {
        assert!(**y.ring() == *self.hn, "pullback of a class not on N");
        apply(&self.pullback, y, &self.hm)
    }

    /// `f_!`.
    pub fn pushforward(&self, x: &GradedClass) -> GradedClass {
        assert!(**x.ring() == *self.hm, "pushforward of a class not on M");
        apply(&self.pushforward, x, &self.hn)
    }

    /// `f* f_!`.
    pub fn push_pull(&self, x: &GradedClass) -> GradedClass {
        self.pullback(&self.pushforward(x))
    }

    pub fn l_m(&self) -> Result<&GradedClass, RingError> {
        self.derived.l_m.get_or_init(|| l_class(&self.p_m)).as_ref().map_err(Clone::clone)
    }

    pub fn l_n(&self) -> Result<&GradedClass, RingError> {
        self.derived.l_n.get_or_init(|| l_class(&self.p_n)).as_ref().map_err(Clone::clone)
    }

    /// `L(ν)^{-1} = L(M) · f*(L(N))^{-1}`.
    pub fn l_nu_inv(&self) -> Result<&GradedClass, RingError> {
        self.derived
            .l_nu_inv
            .get_or_init(|| {
                let lm = self.l_m()?;
                let ln = self.l_n()?;
                Ok(lm * &self.pullback(ln).invert_unital()?)
            })
            .as_ref()
            .map_err(Clone::clone)
    }

    /// `L(ν) = f*(L(N)) · L(M)^{-1}`.
    pub fn l_nu(&self) -> Result<GradedClass, RingError> {
        self.l_nu_inv()?.invert_unital()
    }

    /// `P(ν)^{-1} = P(M) · f*(P(N))^{-1}`.
    pub fn p_nu_inv(&self) -> Result<&GradedClass, RingError> {
        self.derived
            .p_nu_inv
            .get_or_init(|| Ok(&self.p_m * &self.pullback(&self.p_n).invert_unital()?))
            .as_ref()
            .map_err(Clone::clone)
    }

    pub fn p_nu(&self) -> Result<GradedClass, RingError> {
        self.p_nu_inv()?.invert_unital()
    }

    /// `C(ν)^{-1} = C(M) · f*(C(N))^{-1}`.
    pub fn c_nu_inv(&self) -> Result<&GradedClass, ModelError> {
        self.derived
            .c_nu_inv
            .get_or_init(|| {
                let (cm, cn) = match (&self.c_m, &self.c_n) {
                    (Some(a), Some(b)) => (a, b),
                    _ => return Err(ModelError::MissingChern),
                };
                Ok(cm * &self.pullback(cn).invert_unital()?)
            })
            .as_ref()
            .map_err(Clone::clone)
    }

    /// `dim Δ_k(f)` for each component of `M`: `m_c - (k-1)·codim`.
    pub fn multiple_point_dimensions(&self, k: usize) -> Vec<i64> {
        self.hm
            .components()
            .iter()
            .map(|c| c.top_degree as i64 - (k as i64 - 1) * self.codim as i64)
            .collect()
    }

    /// Whether `x ∈ H*(M)` lies in the image of `f*`.
    pub fn pullback_preimage(&self, x: &GradedClass) -> Option<GradedClass> {
        let sol = solve_in_span(&self.pullback, x.coords(), self.hm.dim())?;
        Some(GradedClass::from_coords(&self.hn, sol.into_iter().enumerate()).expect("index in range"))
    }

    /// The self-intersection identity `f* f_!(x) = e · x` on every basis
    /// element, which holds for embeddings.
    pub fn embedding_consistent(&self) -> bool {
        (0..self.hm.dim()).all(|i| {
            let x = GradedClass::basis(&self.hm, i).expect("index in range");
            self.push_pull(&x) == &self.euler * &x
        })
    }

    /// `f* f_! = 0` on every basis element; returns a witness otherwise.
    pub fn push_pull_vanishes(&self) -> Option<String> {
        (0..self.hm.dim()).find_map(|i| {
            let x = GradedClass::basis(&self.hm, i).expect("index in range");
            let y = self.push_pull(&x);
            (!y.is_zero()).then(|| format!("f*f_!({}) = {y}", self.hm.label(i)))
        })
    }

    /// Runs every consistency check the multiple-point formulas rely on.
    pub fn validate(&self) -> Report {
        let mut r = Report::default();
        r.checks.extend(self.hm.axiom_checks("H*(M)"));
        r.checks.extend(self.hn.axiom_checks("H*(N)"));
        let basis_m = |i| GradedClass::basis(&self.hm, i).expect("index in range");
        let basis_n = |j| GradedClass::basis(&self.hn, j).expect("index in range");

        r.push(Check::from_witness(
            "f* is unital",
            (self.pullback(&GradedClass::one(&self.hn)) != GradedClass::one(&self.hm))
                .then(|| format!("f*(1) = {}", self.pullback(&GradedClass::one(&self.hn)))),
        ));
        r.push(Check::from_witness(
            "f* preserves degrees",
            (0..self.hn.dim()).find_map(|j| {
                let y = self.pullback(&basis_n(j));
                (!y.is_homogeneous_of(self.hn.degree(j)))
                    .then(|| format!("f*({}) = {y}", self.hn.label(j)))
            }),
        ));
        r.push(Check::from_witness(
            "f* is multiplicative",
            (0..self.hn.dim()).find_map(|a| {
                (a..self.hn.dim()).find_map(|b| {
                    let lhs = self.pullback(&(&basis_n(a) * &basis_n(b)));
                    let rhs = &self.pullback(&basis_n(a)) * &self.pullback(&basis_n(b));
                    (lhs != rhs).then(|| {
                        format!("f*({a}*{b}) = {lhs} but f*({a})*f*({b}) = {rhs}")
                    })
                })
            }),
        ));
        r.push(Check::from_witness(
            "f_! raises degree by the codimension",
            (0..self.hm.dim()).find_map(|i| {
                let y = self.pushforward(&basis_m(i));
                (!y.is_homogeneous_of(self.hm.degree(i) + self.codim))
                    .then(|| format!("f_!({}) = {y}", self.hm.label(i)))
            }),
        ));
        r.push(Check::from_witness(
            "projection formula f_!(x f*(y)) = f_!(x) y",
            (0..self.hm.dim()).find_map(|i| {
                (0..self.hn.dim()).find_map(|j| {
                    let x = basis_m(i);
                    let y = basis_n(j);
                    let lhs = self.pushforward(&(&x * &self.pullback(&y)));
                    let rhs = &self.pushforward(&x) * &y;
                    (lhs != rhs).then(|| {
                        format!(
                            "x = {}, y = {}: {lhs} vs {rhs}",
                            self.hm.label(i),
                            self.hn.label(j)
                        )
                    })
                })
            }),
        ));
        r.push(Check::from_witness(
            "integration compatibility <f_!(x),[N]> = <x,[M]>",
            (0..self.hm.dim()).find_map(|i| {
                let x = basis_m(i);
                let a = self.pushforward(&x).integrate();
                let b = x.integrate();
                (a != b).then(|| format!("x = {}: {} vs {}", self.hm.label(i), format(&a), format(&b)))
            }),
        ));
        r.push(Check::from_witness(
            "Euler class has degree equal to the codimension",
            (!self.euler.is_homogeneous_of(self.codim)).then(|| format!("e = {}", self.euler)),
        ));
        for (name, p) in [("P(M)", &self.p_m), ("P(N)", &self.p_n)] {
            let bad_degree = p.degrees().into_iter().find(|d| d % 4 != 0);
            let witness = if !p.is_unital() {
                Some(format!("{name} = {p} is not unital"))
            } else {
                bad_degree.map(|d| format!("{name} has a component in degree {d}"))
            };
            r.push(Check::from_witness(format!("{name} is a unital Pontrjagin class"), witness));
        }
        for (name, c) in [("C(M)", &self.c_m), ("C(N)", &self.c_n)] {
            if let Some(c) = c {
                r.push(Check::from_witness(
                    format!("{name} is unital"),
                    (!c.is_unital()).then(|| format!("{name} = {c}")),
                ));
            }
        }
        if self.c_m.is_some() != self.c_n.is_some() {
            r.warnings.push("Chern data given for only one of M, N; ignored".into());
        }
        r
    }
}

impl std::fmt::Debug for ImmersionModel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("ImmersionModel")
            .field("dim H*(M)", &self.hm.dim())
            .field("dim H*(N)", &self.hn.dim())
            .field("codim", &self.codim)
            .field("euler", &self.euler)
            .field("components", &self.components.len())
            .finish()
    }
}

impl PartialEq for ImmersionModel {
    fn eq(&self, other: &Self) -> bool {
        *self.hm == *other.hm
            && *self.hn == *other.hn
            && self.codim == other.codim
            && self.pullback == other.pullback
            && self.pushforward == other.pushforward
            && self.euler == other.euler
            && self.p_m == other.p_m
            && self.p_n == other.p_n
            && self.c_m == other.c_m
            && self.c_n == other.c_n
            && self.components == other.components
    }
}
