//! Brute-force evaluators: every partition sum is expanded over all of
//! `Eq(k)` and every series composition over all pairs `β ≤ α`. Nothing
//! here is shared with the collected or dynamic-programming code paths in
//! [`crate::multipoint`] and [`crate::partition_series`].

use num::One;
use rayon::prelude::*;

use crate::graded_ring::{GradedClass, IndexSequence, TensorClass};
use crate::immersion_model::{ImmersionModel, ModelError};
use crate::multipoint::CharKind;
use crate::partitions::{enumerate, quotient, refines, Partition};
use crate::poly::SeriesCoeff;
use crate::rational::Q;

pub const DEFAULT_CAP: usize = 7;

/// A value together with the number of partition terms summed.
#[derive(Debug, Clone, PartialEq)]
pub struct Enumerated<T> {
    pub value: T,
    pub terms: usize,
}

fn check_cap(k: usize, cap: usize) -> Result<(), ModelError> {
    if k == 0 {
        return Err(ModelError::BadMultiplicity);
    }
    if k > cap {
        return Err(ModelError::Cap(format!("k = {k} exceeds the enumeration cap {cap}")));
    }
    Ok(())
}

/// `(-1)^{n-1} (n-1)!`
fn c(n: usize) -> Q {
    let f: Q = (1..n).fold(Q::one(), |acc, i| acc * Q::from_integer((i as i64).into()));
    if n % 2 == 1 {
        f
    } else {
        -f
    }
}

fn all_partitions(k: usize) -> Vec<Partition> {
    enumerate(k).expect("k >= 1").collect()
}

/// `C_{|Θ|} e^{|Θ|-1} ∏_{i∈Θ} x_i`.
fn class_factor(model: &ImmersionModel, class: &[usize], xs: &[GradedClass]) -> GradedClass {
    let mut x = GradedClass::one(model.hm());
    for _ in 1..class.len() {
        x = &x * model.euler();
    }
    for &i in class {
        x = &x * &xs[i - 1];
    }
    x.scale(&c(class.len()))
}

/// The `α` summand of `j_{k!} i_k^*`: the class of `1` stays on `M`, every
/// other class goes through `f*f_!`.
fn jk_term(model: &ImmersionModel, alpha: &Partition, xs: &[GradedClass]) -> GradedClass {
    let mut acc = GradedClass::one(model.hm());
    for class in alpha.classes() {
        let x = class_factor(model, class, xs);
        let x = if class.contains(&1) { x } else { model.pullback(&model.pushforward(&x)) };
        acc = &acc * &x;
    }
    acc
}

/// The `α` summand of `f_! j_{k!} i_k^*` on `N`.
fn f_jk_term(model: &ImmersionModel, alpha: &Partition, xs: &[GradedClass]) -> GradedClass {
    let mut acc = GradedClass::one(model.hn());
    for class in alpha.classes() {
        acc = &acc * &model.pushforward(&class_factor(model, class, xs));
    }
    acc
}

fn sum_terms(zero: GradedClass, parts: &[Partition], f: impl Fn(&Partition) -> GradedClass + Sync) -> GradedClass {
    parts
        .par_iter()
        .map(&f)
        .reduce(|| zero.clone(), |a, b| &a + &b)
}

pub fn jk_ik_enumerated(model: &ImmersionModel, xs: &[GradedClass], cap: usize) -> Result<Enumerated<GradedClass>, ModelError> {
    check_cap(xs.len(), cap)?;
    let parts = all_partitions(xs.len());
    let value = sum_terms(GradedClass::zero(model.hm()), &parts, |a| jk_term(model, a, xs));
    Ok(Enumerated { value, terms: parts.len() })
}

pub fn f_jk_ik_enumerated(model: &ImmersionModel, xs: &[GradedClass], cap: usize) -> Result<Enumerated<GradedClass>, ModelError> {
    check_cap(xs.len(), cap)?;
    let parts = all_partitions(xs.len());
    let value = sum_terms(GradedClass::zero(model.hn()), &parts, |a| f_jk_term(model, a, xs));
    Ok(Enumerated { value, terms: parts.len() })
}

/// `j_{k!} i_k^*` of a tensor class, term by term.
pub fn jk_ik_tensor_enumerated(model: &ImmersionModel, x: &TensorClass, cap: usize) -> Result<Enumerated<GradedClass>, ModelError> {
    check_cap(x.arity(), cap)?;
    let parts = all_partitions(x.arity());
    let mut value = GradedClass::zero(model.hm());
    let mut terms = 0;
    for (idx, coeff) in x.terms() {
        let xs = x.factors(idx);
        let s = sum_terms(GradedClass::zero(model.hm()), &parts, |a| jk_term(model, a, &xs));
        value = &value + &s.scale(coeff);
        terms += parts.len();
    }
    Ok(Enumerated { value, terms })
}

fn repeated(first: &GradedClass, rest: &GradedClass, k: usize) -> Vec<GradedClass> {
    let mut v = vec![first.clone()];
    v.extend(std::iter::repeat_n(rest.clone(), k - 1));
    v
}

fn factorial(k: usize) -> Q {
    (1..=k).fold(Q::one(), |acc, i| acc * Q::from_integer((i as i64).into()))
}

/// `B_k(f)` as the literal sum over `Eq(k)` of `∏_Θ C_{|Θ|} f_!(e^{|Θ|-1} L(ν)^{-|Θ|})`.
pub fn bk_enumerated(model: &ImmersionModel, k: usize, cap: usize) -> Result<Enumerated<GradedClass>, ModelError> {
    check_cap(k, cap)?;
    let l = model.l_nu_inv()?.clone();
    f_jk_ik_enumerated(model, &vec![l; k], cap)
}

/// `σ(Δ_k f) = (1/k!) ⟨j_{k!} i_k^*(L(M) × L(ν)^{-1} × ⋯), [M]⟩`, enumerated.
pub fn sigma_enumerated(model: &ImmersionModel, k: usize, cap: usize) -> Result<Enumerated<Q>, ModelError> {
    check_cap(k, cap)?;
    let xs = repeated(model.l_m()?, model.l_nu_inv()?, k);
    let e = jk_ik_enumerated(model, &xs, cap)?;
    Ok(Enumerated {
        value: e.value.integrate() / factorial(k),
        terms: e.terms,
    })
}

fn char_pair(model: &ImmersionModel, kind: CharKind) -> Result<(GradedClass, GradedClass), ModelError> {
    Ok(match kind {
        CharKind::Pontrjagin => (model.p_m().clone(), model.p_nu_inv()?.clone()),
        CharKind::Chern => (
            model.c_m().ok_or(ModelError::MissingChern)?.clone(),
            model.c_nu_inv()?.clone(),
        ),
    })
}

/// `p_J` (or `c_J`) with the selection made on `M^{×k}` before the operator:
/// `(1/k!) ⟨j_{k!} i_k^*((A(M) × B × ⋯ × B)_J), [M]⟩`, the selection being
/// the product of homogeneous parts in the tensor ring.
pub fn characteristic_enumerated(
    model: &ImmersionModel,
    k: usize,
    kind: CharKind,
    j: &IndexSequence,
    cap: usize,
) -> Result<Enumerated<Q>, ModelError> {
    check_cap(k, cap)?;
    let (a, b) = char_pair(model, kind)?;
    let x = TensorClass::cross(&repeated(&a, &b, k))?.select(j);
    let e = jk_ik_tensor_enumerated(model, &x, cap)?;
    Ok(Enumerated {
        value: e.value.integrate() / factorial(k),
        terms: e.terms,
    })
}

/// The other order: apply the operator to the whole class and select the
/// `J`-part of the resulting class on `M`.
pub fn characteristic_selected_after(
    model: &ImmersionModel,
    k: usize,
    kind: CharKind,
    j: &IndexSequence,
    cap: usize,
) -> Result<Enumerated<Q>, ModelError> {
    check_cap(k, cap)?;
    let (a, b) = char_pair(model, kind)?;
    let e = jk_ik_enumerated(model, &repeated(&a, &b, k), cap)?;
    Ok(Enumerated {
        value: e.value.select(j).integrate() / factorial(k),
        terms: e.terms,
    })
}

/// `(G ∘ F)_α = Σ_{β ≤ α} G_{α/β} ∘ F_β` for special series given by their
/// coefficient lists (`g[n-1] = b_n`), with `F_β = ∏_{Θ∈β} a_{|Θ|}`.
pub fn compose_enumerated_at<C: SeriesCoeff>(g: &[C], f: &[C], alpha: &Partition) -> Enumerated<C> {
    let special = |s: &[C], p: &Partition| {
        p.classes()
            .iter()
            .fold(C::unit(), |acc, cl| acc.times(&s[cl.len() - 1]))
    };
    let mut value = C::nil();
    let mut terms = 0;
    for beta in enumerate(alpha.k()).expect("k >= 1") {
        if !refines(&beta, alpha).expect("same k") {
            continue;
        }
        let q = quotient(alpha, &beta).expect("beta refines alpha");
        value = value.plus(&special(g, &q).times(&special(f, &beta)));
        terms += 1;
    }
    Enumerated { value, terms }
}

/// The `k`-th coefficient of `G ∘ F`, i.e. its value on the one-class partition.
pub fn compose_enumerated<C: SeriesCoeff>(g: &[C], f: &[C], k: usize) -> Enumerated<C> {
    compose_enumerated_at(g, f, &Partition::coarsest(k).expect("k >= 1"))
}

/// Number of partitions of each type, by filtering the enumeration.
pub fn type_counts(k: usize) -> std::collections::BTreeMap<Vec<usize>, usize> {
    let mut out = std::collections::BTreeMap::new();
    for p in enumerate(k).expect("k >= 1") {
        *out.entry(p.type_vector().0).or_insert(0) += 1;
    }
    out
}

/// Number of partitions whose class containing `1` has `l` elements and
/// whose remaining classes have type `types`, by filtering the enumeration.
pub fn marked_count(k: usize, l: usize, types: &[usize]) -> usize {
    enumerate(k)
        .expect("k >= 1")
        .filter(|p| {
            let first = p.classes().iter().find(|c| c.contains(&1)).expect("1 is in a class");
            if first.len() != l {
                return false;
            }
            let mut t = vec![0usize; types.len()];
            for c in p.classes() {
                if c.contains(&1) {
                    continue;
                }
                if c.len() > t.len() {
                    return false;
                }
                t[c.len() - 1] += 1;
            }
            t == types
        })
        .count()
}

/// `|Eq(k)|` by enumeration.
pub fn bell(k: usize) -> usize {
    enumerate(k).map(|p| p.count()).unwrap_or(0)
}
