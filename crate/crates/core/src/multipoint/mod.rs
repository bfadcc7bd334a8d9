//! Multiple-point formulas: the operators `j_{k!} i_k^*` and
//! `f_! j_{k!} i_k^*`, signatures and characteristic numbers of the `k`-tuple
//! point manifold, the classes `B_k(f)` and their behaviour on disjoint unions.

mod special;

pub use special::{
    euler_zero_pontrjagin, euler_zero_signature, euler_zero_signature_via_n, hirzebruch_from_model,
    hirzebruch_virtual_signature, jk_of_one, pulled_from_n, pulled_from_n_characteristic,
    pulled_from_n_signature, pushpull_zero_characteristic, pushpull_zero_jk_ik,
    pushpull_zero_signature, szucs_pontrjagin, szucs_signature,
};

use std::fmt;

use num::{One, Zero};
use serde::Serialize;

use crate::graded_ring::{GradedClass, IndexSequence, TensorClass};
use crate::immersion_model::{ImmersionModel, ModelError};
use crate::partitions::{count_by_type, type_vectors, Partition, TypeVector};
use crate::rational::{alternating_factorial, factorial_q, format, is_integer, pow, Q};

/// Evaluation strategy for a signature or characteristic number.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Route {
    /// Partition sum on `M` with the distinguished first factor `L(M)`.
    General,
    /// Partition sum on `N`, integrated against `L(N)`.
    ViaN,
    /// Type-vector collected sum on `M`.
    Collected,
    /// Type-vector collected `B_k(f)` on `N`.
    CollectedViaN,
}

impl Route {
    pub const ALL: [Route; 4] = [Route::General, Route::ViaN, Route::Collected, Route::CollectedViaN];

    pub fn name(self) -> &'static str {
        match self {
            Route::General => "general",
            Route::ViaN => "via-N",
            Route::Collected => "collected",
            Route::CollectedViaN => "collected-via-N",
        }
    }
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Pontrjagin or Chern characteristic numbers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum CharKind {
    Pontrjagin,
    Chern,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Value {
    Rational(Q),
    Class(GradedClass),
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Rational(q) => f.write_str(&format(q)),
            Value::Class(c) => write!(f, "{c}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct MultipointResult {
    pub k: usize,
    pub quantity: String,
    pub route: Option<Route>,
    pub value: Value,
    /// `dim Δ_k(f)` per component of `M`.
    pub dimensions: Vec<i64>,
    pub warnings: Vec<String>,
}

impl MultipointResult {
    pub fn rational(&self) -> Option<&Q> {
        match &self.value {
            Value::Rational(q) => Some(q),
            Value::Class(_) => None,
        }
    }
}

pub(crate) fn check_k(k: usize) -> Result<(), ModelError> {
    if k == 0 {
        Err(ModelError::BadMultiplicity)
    } else {
        Ok(())
    }
}

fn check_factors(model: &ImmersionModel, factors: &[GradedClass], ring_is_m: bool) -> Result<(), ModelError> {
    check_k(factors.len())?;
    let ring = if ring_is_m { model.hm() } else { model.hn() };
    for x in factors {
        if **x.ring() != **ring {
            return Err(crate::graded_ring::RingError::RingMismatch.into());
        }
    }
    Ok(())
}

fn powers(x: &GradedClass, n: usize) -> Vec<GradedClass> {
    let mut out = vec![GradedClass::one(x.ring())];
    for i in 1..n {
        let next = &out[i - 1] * x;
        out.push(next);
    }
    out
}

/// Products `∏_{i∈S} x_i` over every subset mask `S` of `{0..k}`.
fn subset_products(factors: &[GradedClass]) -> Vec<GradedClass> {
    let k = factors.len();
    let ring = factors[0].ring();
    let mut prod = vec![GradedClass::one(ring); 1 << k];
    for mask in 1usize..(1 << k) {
        let low = mask.trailing_zeros() as usize;
        prod[mask] = &prod[mask & (mask - 1)] * &factors[low];
    }
    prod
}

/// `T(R) = Σ over set partitions of R of ∏ w(Θ)`, for every `R` inside `universe`.
fn partition_sums(universe: usize, weight: &[GradedClass], one: &GradedClass) -> Vec<GradedClass> {
    let mut t = vec![GradedClass::zero(one.ring()); weight.len()];
    t[0] = one.clone();
    // iterate submasks of universe in increasing order
    let mut r = universe;
    let mut subs = Vec::new();
    loop {
        subs.push(r);
        if r == 0 {
            break;
        }
        r = (r - 1) & universe;
    }
    subs.reverse();
    for &r in subs.iter().skip(1) {
        let low = r & r.wrapping_neg();
        let rest = r & !low;
        let mut acc = GradedClass::zero(one.ring());
        let mut s = rest;
        loop {
            let class = s | low;
            acc = &acc + &(&weight[class] * &t[r & !class]);
            if s == 0 {
                break;
            }
            s = (s - 1) & rest;
        }
        t[r] = acc;
    }
    t
}

/// `j_{k!} i_k^*(x_1 × ⋯ × x_k)`: the sum over `α ∈ Eq(k)` of
/// `C_{|α[1]|} e^{|α[1]|-1} ∏_{α[1]} x_i · ∏_{Θ≠α[1]} C_{|Θ|} f*f_!(e^{|Θ|-1} ∏_Θ x_i)`.
///
/// The partition sum is evaluated by recursion over the class containing the
/// smallest remaining index, which visits every partition exactly once.
pub fn jk_ik_elementary(model: &ImmersionModel, factors: &[GradedClass]) -> Result<GradedClass, ModelError> {
    check_factors(model, factors, true)?;
    let k = factors.len();
    let full = (1usize << k) - 1;
    let prod = subset_products(factors);
    let epow = powers(model.euler(), k);
    let mut first = vec![GradedClass::zero(model.hm()); 1 << k];
    let mut other = vec![GradedClass::zero(model.hm()); 1 << k];
    for mask in 1..=full {
        let s = mask.count_ones() as usize;
        let c = alternating_factorial(s);
        let base = &epow[s - 1] * &prod[mask];
        if mask & 1 == 1 {
            first[mask] = base.scale(&c);
        } else {
            other[mask] = model.push_pull(&base).scale(&c);
        }
    }
    let one = GradedClass::one(model.hm());
    let t = partition_sums(full & !1, &other, &one);
    let mut acc = GradedClass::zero(model.hm());
    let rest = full & !1;
    let mut s = rest;
    loop {
        acc = &acc + &(&first[s | 1] * &t[rest & !s]);
        if s == 0 {
            break;
        }
        s = (s - 1) & rest;
    }
    Ok(acc)
}

/// `f_! j_{k!} i_k^*(x_1 × ⋯ × x_k) = Σ_α ∏_Θ C_{|Θ|} f_!(e^{|Θ|-1} ∏_Θ x_i)`.
pub fn f_jk_ik_elementary(model: &ImmersionModel, factors: &[GradedClass]) -> Result<GradedClass, ModelError> {
    check_factors(model, factors, true)?;
    let k = factors.len();
    let full = (1usize << k) - 1;
    let prod = subset_products(factors);
    let epow = powers(model.euler(), k);
    let mut w = vec![GradedClass::zero(model.hn()); 1 << k];
    for mask in 1..=full {
        let s = mask.count_ones() as usize;
        w[mask] = model
            .pushforward(&(&epow[s - 1] * &prod[mask]))
            .scale(&alternating_factorial(s));
    }
    let t = partition_sums(full, &w, &GradedClass::one(model.hn()));
    Ok(t[full].clone())
}

fn basis_factors(x: &TensorClass, idx: &[usize]) -> Vec<GradedClass> {
    x.factors(idx)
}

/// Linear extension of [`jk_ik_elementary`] to a tensor class on `M^{×k}`.
pub fn jk_ik(model: &ImmersionModel, x: &TensorClass) -> Result<GradedClass, ModelError> {
    let mut acc = GradedClass::zero(model.hm());
    for (idx, c) in x.terms() {
        acc = &acc + &jk_ik_elementary(model, &basis_factors(x, idx))?.scale(c);
    }
    Ok(acc)
}

/// Linear extension of [`f_jk_ik_elementary`].
pub fn f_jk_ik(model: &ImmersionModel, x: &TensorClass) -> Result<GradedClass, ModelError> {
    let mut acc = GradedClass::zero(model.hn());
    for (idx, c) in x.terms() {
        acc = &acc + &f_jk_ik_elementary(model, &basis_factors(x, idx))?.scale(c);
    }
    Ok(acc)
}

/// The single summand of `j_{k!} i_k^*(x_1 × ⋯ × x_k)` belonging to `alpha`.
pub fn partition_term(model: &ImmersionModel, alpha: &Partition, factors: &[GradedClass]) -> Result<GradedClass, ModelError> {
    check_factors(model, factors, true)?;
    if alpha.k() != factors.len() {
        return Err(ModelError::Shape("partition and tensor arity differ".into()));
    }
    let mut acc = GradedClass::one(model.hm());
    for (n, class) in alpha.classes().iter().enumerate() {
        let s = class.len();
        let mut base = model.euler().pow(s - 1);
        for &i in class {
            base = &base * &factors[i - 1];
        }
        let term = if n == 0 { base } else { model.push_pull(&base) };
        acc = &acc * &term.scale(&alternating_factorial(s));
    }
    Ok(acc)
}

fn inv_factorial(k: usize) -> Q {
    Q::one() / factorial_q(k)
}

fn repeated(first: &GradedClass, rest: &GradedClass, k: usize) -> Vec<GradedClass> {
    std::iter::once(first.clone())
        .chain(std::iter::repeat_n(rest.clone(), k - 1))
        .collect()
}

/// All type vectors of `n`, including the empty one for `n = 0`.
fn types_of(n: usize) -> Vec<TypeVector> {
    if n == 0 {
        vec![TypeVector(vec![])]
    } else {
        type_vectors(n)
    }
}

/// `(-1)^{k - Σ l_i} k! / ∏ i^{l_i} l_i!`, the collected weight of a type.
pub fn collected_weight(k: usize, t: &TypeVector) -> Q {
    let mut denom = Q::one();
    for (i, &l) in t.0.iter().enumerate() {
        denom *= pow(&Q::from_integer(((i + 1) as i64).into()), l) * factorial_q(l);
    }
    let sign = if (k - t.parts()).is_multiple_of(2) { Q::one() } else { -Q::one() };
    sign * factorial_q(k) / denom
}

/// `f_!(e^{i-1} L(ν)^{-i})` for `i = 1..=k` (index 0 unused).
fn pushed_terms(model: &ImmersionModel, k: usize, on_n: bool) -> Result<Vec<GradedClass>, ModelError> {
    let lnu_inv = model.l_nu_inv()?;
    let ring = if on_n { model.hn() } else { model.hm() };
    let mut out = vec![GradedClass::zero(ring)];
    for i in 1..=k {
        let x = &model.euler().pow(i - 1) * &lnu_inv.pow(i);
        out.push(if on_n { model.pushforward(&x) } else { model.push_pull(&x) });
    }
    Ok(out)
}

/// `B_k(f)` from the type-vector collected sum.
pub fn b_k(model: &ImmersionModel, k: usize) -> Result<GradedClass, ModelError> {
    check_k(k)?;
    let pushed = pushed_terms(model, k, true)?;
    let mut acc = GradedClass::zero(model.hn());
    for t in type_vectors(k) {
        let mut term = GradedClass::scalar(model.hn(), collected_weight(k, &t));
        for (i, &l) in t.0.iter().enumerate() {
            if l > 0 {
                term = &term * &pushed[i + 1].pow(l);
            }
        }
        acc = &acc + &term;
    }
    Ok(acc)
}

/// `B_k(f) = f_! j_{k!} i_k^*(L(ν)^{-1} × ⋯ × L(ν)^{-1})` by the partition sum.
pub fn b_k_partition_sum(model: &ImmersionModel, k: usize) -> Result<GradedClass, ModelError> {
    check_k(k)?;
    let l = model.l_nu_inv()?.clone();
    f_jk_ik_elementary(model, &vec![l; k])
}

/// `B_k(f)` computed both ways; fails if the two disagree.
pub fn b_k_verified(model: &ImmersionModel, k: usize) -> Result<GradedClass, ModelError> {
    let a = b_k(model, k)?;
    let b = b_k_partition_sum(model, k)?;
    if a != b {
        return Err(ModelError::Precondition {
            what: "collected and partition-sum B_k agree".into(),
            witness: format!("{a} vs {b}"),
        });
    }
    Ok(a)
}

/// `B_k` of a disjoint union from the components: the multinomial
/// convolution `Σ k!/(k_1!⋯k_l!) ∏ B_{k_t}(f_t)` with `B_0 = 1`.
pub fn b_k_union(parts: &[ImmersionModel], k: usize) -> Result<GradedClass, ModelError> {
    check_k(k)?;
    let hn = parts.first().ok_or_else(|| ModelError::Shape("no components".into()))?.hn().clone();
    let mut acc: Vec<GradedClass> = (0..=k)
        .map(|n| if n == 0 { GradedClass::one(&hn) } else { GradedClass::zero(&hn) })
        .collect();
    for part in parts {
        if **part.hn() != *hn {
            return Err(ModelError::TargetMismatch);
        }
        let mut b = vec![GradedClass::one(&hn)];
        for n in 1..=k {
            b.push(b_k(part, n)?);
        }
        let next: Vec<GradedClass> = (0..=k)
            .map(|n| {
                (0..=n).fold(GradedClass::zero(&hn), |s, a| {
                    let binom = factorial_q(n) / (factorial_q(a) * factorial_q(n - a));
                    &s + &(&acc[a] * &b[n - a]).scale(&binom)
                })
            })
            .collect();
        acc = next;
    }
    Ok(acc.swap_remove(k))
}

/// Signature of `Δ_k(f)` by one route.
pub fn signature_value(model: &ImmersionModel, k: usize, route: Route) -> Result<Q, ModelError> {
    check_k(k)?;
    let lnu_inv = model.l_nu_inv()?;
    Ok(match route {
        Route::General => {
            let x = repeated(model.l_m()?, lnu_inv, k);
            jk_ik_elementary(model, &x)?.integrate() * inv_factorial(k)
        }
        Route::ViaN => {
            let b = f_jk_ik_elementary(model, &vec![lnu_inv.clone(); k])?;
            (model.l_n()? * &b).integrate() * inv_factorial(k)
        }
        Route::Collected => {
            let pushed = pushed_terms(model, k, false)?;
            let lm = model.l_m()?;
            let mut total = Q::zero();
            for l in 1..=k {
                let head = &(lm * &model.euler().pow(l - 1)) * &lnu_inv.pow(l - 1);
                for t in types_of(k - l) {
                    let mut term = head.clone();
                    for (i, &li) in t.0.iter().enumerate() {
                        if li > 0 {
                            term = &term * &pushed[i + 1].pow(li);
                        }
                    }
                    total += marked_weight(k, &t) * term.integrate();
                }
            }
            total
        }
        Route::CollectedViaN => (model.l_n()? * &b_k(model, k)?).integrate() * inv_factorial(k),
    })
}

/// `(-1)^{k-1-Σ l_i} / (k ∏ i^{l_i} l_i!)` for the marked collected sum.
pub fn marked_weight(k: usize, t: &TypeVector) -> Q {
    let mut denom = Q::from_integer((k as i64).into());
    for (i, &l) in t.0.iter().enumerate() {
        denom *= pow(&Q::from_integer(((i + 1) as i64).into()), l) * factorial_q(l);
    }
    let sign = if (k - 1 - t.parts()).is_multiple_of(2) { Q::one() } else { -Q::one() };
    sign / denom
}

/// Same weight from the marked partition count: `count · C_l ∏ C_i^{l_i} / k!`.
pub fn marked_weight_from_count(k: usize, l: usize, t: &TypeVector) -> Q {
    let count = crate::partitions::count_by_type_marked(k, l, &t.0).expect("valid marked type");
    let mut c = alternating_factorial(l);
    for (i, &li) in t.0.iter().enumerate() {
        c *= pow(&alternating_factorial(i + 1), li);
    }
    count * c / factorial_q(k)
}

fn signature_warnings(model: &ImmersionModel, k: usize, value: &Q) -> Vec<String> {
    let mut w = Vec::new();
    if !is_integer(value) {
        w.push(format!("signature {} is not an integer; the model is not geometric", format(value)));
    }
    if !value.is_zero() && model.multiple_point_dimensions(k).iter().all(|d| d % 4 != 0) {
        w.push(format!(
            "nonzero signature although dim Δ_{k} = {:?} is not divisible by 4",
            model.multiple_point_dimensions(k)
        ));
    }
    w
}

pub fn signature(model: &ImmersionModel, k: usize, route: Route) -> Result<MultipointResult, ModelError> {
    let v = signature_value(model, k, route)?;
    Ok(MultipointResult {
        k,
        quantity: "signature".into(),
        route: Some(route),
        warnings: signature_warnings(model, k, &v),
        dimensions: model.multiple_point_dimensions(k),
        value: Value::Rational(v),
    })
}

/// `B_k(f)` (collected form, cross-checked against the partition sum).
pub fn b_k_result(model: &ImmersionModel, k: usize) -> Result<MultipointResult, ModelError> {
    Ok(MultipointResult {
        k,
        quantity: "B_k".into(),
        route: None,
        value: Value::Class(b_k_verified(model, k)?),
        dimensions: model.multiple_point_dimensions(k),
        warnings: vec![],
    })
}

/// Compositions `(d_1, …, d_k)` of `j` with `d_i` drawn from `allowed[i]`.
fn compositions(j: u32, allowed: &[Vec<u32>]) -> Vec<Vec<u32>> {
    fn rec(j: u32, allowed: &[Vec<u32>], cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == allowed.len() {
            if j == 0 {
                out.push(cur.clone());
            }
            return;
        }
        for &d in &allowed[cur.len()] {
            if d <= j {
                cur.push(d);
                rec(j - d, allowed, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(j, allowed, &mut Vec::new(), &mut out);
    out
}

/// For `J = (j_1, …, j_l)` and slots with the given available degrees, every
/// way of splitting each `j_r` across the slots: entry `[term][slot]` lists
/// the degrees taken from that slot.
fn degree_splits(allowed: &[Vec<u32>], j: &IndexSequence) -> Vec<Vec<Vec<u32>>> {
    let mut terms: Vec<Vec<Vec<u32>>> = vec![vec![vec![]; allowed.len()]];
    for &d in j.entries() {
        let comps = compositions(d, allowed);
        let mut next = Vec::with_capacity(terms.len() * comps.len());
        for t in &terms {
            for c in &comps {
                let mut t2 = t.clone();
                for (slot, &di) in t2.iter_mut().zip(c) {
                    slot.push(di);
                }
                next.push(t2);
            }
        }
        terms = next;
    }
    terms
}

fn product_of_parts(x: &GradedClass, degrees: &[u32]) -> GradedClass {
    degrees
        .iter()
        .fold(GradedClass::one(x.ring()), |acc, &d| &acc * &x.degree_part(d))
}

/// `(x_1 × ⋯ × x_k)_J = ∏_{j∈J} (x_1 × ⋯ × x_k)_j` in `H*(M^{×k})`, as a sum
/// of elementary tensors whose factors are products of homogeneous parts.
pub fn select_elementary(factors: &[GradedClass], j: &IndexSequence) -> Vec<Vec<GradedClass>> {
    let allowed: Vec<Vec<u32>> = factors.iter().map(|x| x.degrees()).collect();
    degree_splits(&allowed, j)
        .into_iter()
        .map(|t| t.iter().zip(factors).map(|(d, x)| product_of_parts(x, d)).collect::<Vec<_>>())
        .filter(|t| t.iter().all(|p| !p.is_zero()))
        .collect()
}

fn char_classes(model: &ImmersionModel, kind: CharKind) -> Result<(GradedClass, GradedClass, GradedClass), ModelError> {
    match kind {
        CharKind::Pontrjagin => Ok((model.p_m().clone(), model.p_n().clone(), model.p_nu_inv()?.clone())),
        CharKind::Chern => {
            let inv = model.c_nu_inv()?.clone();
            Ok((
                model.c_m().ok_or(ModelError::MissingChern)?.clone(),
                model.c_n().ok_or(ModelError::MissingChern)?.clone(),
                inv,
            ))
        }
    }
}

/// `p_J` or `c_J` of `Δ_k(f)` without the degree check, by the `M`-side
/// partition sum (`General`) or by pushing the `f*`-part of the first factor
/// to `N` (`ViaN`).
pub fn characteristic_value(
    model: &ImmersionModel,
    k: usize,
    kind: CharKind,
    j: &IndexSequence,
    route: Route,
) -> Result<Q, ModelError> {
    check_k(k)?;
    let (a_m, a_n, b) = char_classes(model, kind)?;
    match route {
        Route::General => {
            let factors = repeated(&a_m, &b, k);
            let mut total = Q::zero();
            for t in select_elementary(&factors, j) {
                total += jk_ik_elementary(model, &t)?.integrate();
            }
            Ok(total * inv_factorial(k))
        }
        Route::ViaN => {
            // A(M) = f*(A(N)) · B: the first factor is split into an N-slot
            // and an M-slot, and the N-slot is moved across f_! by the
            // projection formula.
            let mut allowed = vec![a_n.degrees()];
            allowed.extend(std::iter::repeat_n(b.degrees(), k));
            let mut total = Q::zero();
            for t in degree_splits(&allowed, j) {
                let y = product_of_parts(&a_n, &t[0]);
                let rest: Vec<GradedClass> = t[1..].iter().map(|d| product_of_parts(&b, d)).collect();
                if y.is_zero() || rest.iter().any(|r| r.is_zero()) {
                    continue;
                }
                total += (&y * &f_jk_ik_elementary(model, &rest)?).integrate();
            }
            Ok(total * inv_factorial(k))
        }
        _ => Err(ModelError::Shape(format!(
            "route {route} is not available for characteristic numbers"
        ))),
    }
}

pub fn characteristic_number(
    model: &ImmersionModel,
    k: usize,
    kind: CharKind,
    j: &IndexSequence,
    route: Route,
) -> Result<MultipointResult, ModelError> {
    check_k(k)?;
    let dims = model.multiple_point_dimensions(k);
    let name = match kind {
        CharKind::Pontrjagin => format!("p_{j}"),
        CharKind::Chern => format!("c_{j}"),
    };
    let mut warnings = Vec::new();
    let value = if dims.iter().any(|&d| d == j.total() as i64) {
        characteristic_value(model, k, kind, j, route)?
    } else {
        if kind == CharKind::Chern {
            char_classes(model, kind)?;
        }
        warnings.push(format!(
            "degree of J is {} but dim Δ_{k} = {dims:?}; the number is 0",
            j.total()
        ));
        Q::zero()
    };
    Ok(MultipointResult {
        k,
        quantity: name,
        route: Some(route),
        value: Value::Rational(value),
        dimensions: dims,
        warnings,
    })
}

/// Both sides of the recursion
/// `x_1 · ∏_{i≥2} f*f_!(x_i) = Σ_α j_{|α|!} i_{|α|}^*(×_{Θ∈α} e^{|Θ|-1} ∏_Θ x_i)`.
pub fn recursion_sides(model: &ImmersionModel, factors: &[GradedClass]) -> Result<(GradedClass, GradedClass), ModelError> {
    check_factors(model, factors, true)?;
    let k = factors.len();
    let lhs = factors[1..]
        .iter()
        .fold(factors[0].clone(), |acc, x| &acc * &model.push_pull(x));
    let mut rhs = GradedClass::zero(model.hm());
    for alpha in crate::partitions::enumerate(k).expect("k >= 1") {
        let merged: Vec<GradedClass> = alpha
            .classes()
            .iter()
            .map(|class| {
                class
                    .iter()
                    .fold(model.euler().pow(class.len() - 1), |acc, &i| &acc * &factors[i - 1])
            })
            .collect();
        rhs = &rhs + &jk_ik_elementary(model, &merged)?;
    }
    Ok((lhs, rhs))
}

/// Whether the recursion holds on an elementary tensor.
pub fn recursion_check(model: &ImmersionModel, factors: &[GradedClass]) -> Result<bool, ModelError> {
    let (l, r) = recursion_sides(model, factors)?;
    Ok(l == r)
}

/// [`recursion_check`] extended linearly to a tensor class.
pub fn recursion_check_tensor(model: &ImmersionModel, x: &TensorClass) -> Result<bool, ModelError> {
    let mut lhs = GradedClass::zero(model.hm());
    let mut rhs = GradedClass::zero(model.hm());
    for (idx, c) in x.terms() {
        let (l, r) = recursion_sides(model, &x.factors(idx))?;
        lhs = &lhs + &l.scale(c);
        rhs = &rhs + &r.scale(c);
    }
    Ok(lhs == rhs)
}

/// Number of partitions of each type, used to sanity-check collected weights.
pub fn type_count(k: usize, t: &TypeVector) -> Q {
    count_by_type(k, &t.0).expect("type of k")
}
