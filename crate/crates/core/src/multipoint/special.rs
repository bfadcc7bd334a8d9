//! Closed forms valid under extra hypotheses on the immersion. Each
//! evaluator checks its hypothesis and reports a witness when it fails.

use num::{One, Zero};

use super::{check_k, select_elementary, CharKind};
use crate::graded_ring::{GradedClass, IndexSequence};
use crate::immersion_model::{ImmersionModel, ModelError};
use crate::poly::truncated;
use crate::rational::{alternating_factorial, factorial_q, Q};

fn precondition(what: &str, witness: impl Into<String>) -> ModelError {
    ModelError::Precondition {
        what: what.into(),
        witness: witness.into(),
    }
}

fn require_pulled_back(model: &ImmersionModel, x: &GradedClass, name: &str) -> Result<GradedClass, ModelError> {
    model
        .pullback_preimage(x)
        .ok_or_else(|| precondition(&format!("{name} lies in the image of f*"), format!("{name} = {x}")))
}

fn require_euler_zero(model: &ImmersionModel) -> Result<(), ModelError> {
    if model.euler().is_zero() {
        Ok(())
    } else {
        Err(precondition("e = 0", format!("e = {}", model.euler())))
    }
}

fn require_pushpull_zero(model: &ImmersionModel) -> Result<(), ModelError> {
    match model.push_pull_vanishes() {
        None => Ok(()),
        Some(w) => Err(precondition("f*f_! = 0", w)),
    }
}

fn sign_over_k(k: usize) -> Q {
    let s = if k % 2 == 1 { Q::one() } else { -Q::one() };
    s / Q::from_integer((k as i64).into())
}

fn char_data(model: &ImmersionModel, kind: CharKind) -> Result<(GradedClass, GradedClass, &'static str), ModelError> {
    Ok(match kind {
        CharKind::Pontrjagin => (model.p_m().clone(), model.p_nu_inv()?.clone(), "P(ν)^-1"),
        CharKind::Chern => (
            model.c_m().ok_or(ModelError::MissingChern)?.clone(),
            model.c_nu_inv()?.clone(),
            "C(ν)^-1",
        ),
    })
}

/// `j_{k!}(1) = ∏_{i=1}^{k-1} (f*f_!(1) - i e)`, valid when `e` is pulled
/// back from `N`.
pub fn jk_of_one(model: &ImmersionModel, k: usize) -> Result<GradedClass, ModelError> {
    check_k(k)?;
    require_pulled_back(model, model.euler(), "e")?;
    let ff1 = model.push_pull(&GradedClass::one(model.hm()));
    Ok((1..k).fold(GradedClass::one(model.hm()), |acc, i| {
        &acc * &(&ff1 - &model.euler().scale(&Q::from_integer((i as i64).into())))
    }))
}

/// `j_{k!} i_k^*(x_1 × f*y_2 × ⋯ × f*y_k) = x_1 · f*(y_2 ⋯ y_k) · j_{k!}(1)`
/// when `e` is pulled back from `N`.
pub fn pulled_from_n(model: &ImmersionModel, x1: &GradedClass, ys: &[GradedClass]) -> Result<GradedClass, ModelError> {
    let k = ys.len() + 1;
    let prod = ys.iter().fold(GradedClass::one(model.hn()), |acc, y| &acc * y);
    Ok(&(x1 * &model.pullback(&prod)) * &jk_of_one(model, k)?)
}

/// `σ = (1/k!) ⟨L(M) L(ν)^{-(k-1)} ∏ (f*f_!(1) - i e), [M]⟩` when `e` and
/// `L(ν)` come from `N`.
pub fn pulled_from_n_signature(model: &ImmersionModel, k: usize) -> Result<Q, ModelError> {
    let lnu_inv = model.l_nu_inv()?;
    require_pulled_back(model, lnu_inv, "L(ν)^-1")?;
    let j1 = jk_of_one(model, k)?;
    let x = &(model.l_m()? * &lnu_inv.pow(k - 1)) * &j1;
    Ok(x.integrate() / factorial_q(k))
}

/// `p_J` or `c_J = (1/k!) ⟨(A(M) B^{k-1})_J ∏ (f*f_!(1) - i e), [M]⟩` with
/// `B = P(ν)^{-1}` (resp. `C(ν)^{-1}`) pulled back from `N`.
pub fn pulled_from_n_characteristic(
    model: &ImmersionModel,
    k: usize,
    kind: CharKind,
    j: &IndexSequence,
) -> Result<Q, ModelError> {
    let (a, b, name) = char_data(model, kind)?;
    require_pulled_back(model, &b, name)?;
    let j1 = jk_of_one(model, k)?;
    let x = (&a * &b.pow(k - 1)).select(j);
    Ok((&x * &j1).integrate() / factorial_q(k))
}

/// `σ = (1/k!) ⟨L(M) (f*f_! L(ν)^{-1})^{k-1}, [M]⟩` when `e = 0`.
pub fn euler_zero_signature(model: &ImmersionModel, k: usize) -> Result<Q, ModelError> {
    check_k(k)?;
    require_euler_zero(model)?;
    let t = model.push_pull(model.l_nu_inv()?);
    Ok((model.l_m()? * &t.pow(k - 1)).integrate() / factorial_q(k))
}

/// `σ = (1/k!) ⟨L(N) (f_! L(ν)^{-1})^k, [N]⟩` when `e = 0`.
pub fn euler_zero_signature_via_n(model: &ImmersionModel, k: usize) -> Result<Q, ModelError> {
    check_k(k)?;
    require_euler_zero(model)?;
    let t = model.pushforward(model.l_nu_inv()?);
    Ok((model.l_n()? * &t.pow(k)).integrate() / factorial_q(k))
}

/// `(1/k!) ⟨Δ_k^* f^{×k}_!(A(M) × B × ⋯ × B)_J, [N]⟩` when `e = 0`.
pub fn euler_zero_pontrjagin(model: &ImmersionModel, k: usize, kind: CharKind, j: &IndexSequence) -> Result<Q, ModelError> {
    check_k(k)?;
    require_euler_zero(model)?;
    let (a, b, _) = char_data(model, kind)?;
    let factors: Vec<GradedClass> = std::iter::once(a).chain(std::iter::repeat_n(b, k - 1)).collect();
    let mut total = Q::zero();
    for t in select_elementary(&factors, j) {
        let prod = t
            .iter()
            .fold(GradedClass::one(model.hn()), |acc, x| &acc * &model.pushforward(x));
        total += prod.integrate();
    }
    Ok(total / factorial_q(k))
}

/// `j_{k!} i_k^*(x_1 × ⋯ × x_k) = C_k e^{k-1} x_1 ⋯ x_k` when `f*f_! = 0`.
pub fn pushpull_zero_jk_ik(model: &ImmersionModel, factors: &[GradedClass]) -> Result<GradedClass, ModelError> {
    let k = factors.len();
    check_k(k)?;
    require_pushpull_zero(model)?;
    let prod = factors.iter().fold(model.euler().pow(k - 1), |acc, x| &acc * x);
    Ok(prod.scale(&alternating_factorial(k)))
}

/// `σ = (-1)^{k-1}/k ⟨e^{k-1} L(M) L(ν)^{1-k}, [M]⟩` when `f*f_! = 0`.
pub fn pushpull_zero_signature(model: &ImmersionModel, k: usize) -> Result<Q, ModelError> {
    check_k(k)?;
    require_pushpull_zero(model)?;
    let x = &(&model.euler().pow(k - 1) * model.l_m()?) * &model.l_nu_inv()?.pow(k - 1);
    Ok(x.integrate() * sign_over_k(k))
}

/// `(-1)^{k-1}/k ⟨e^{k-1} (A(M) B^{k-1})_J, [M]⟩` when `f*f_! = 0`.
pub fn pushpull_zero_characteristic(
    model: &ImmersionModel,
    k: usize,
    kind: CharKind,
    j: &IndexSequence,
) -> Result<Q, ModelError> {
    check_k(k)?;
    require_pushpull_zero(model)?;
    let (a, b, _) = char_data(model, kind)?;
    let x = &model.euler().pow(k - 1) * &(&a * &b.pow(k - 1)).select(j);
    Ok(x.integrate() * sign_over_k(k))
}

/// `σ = (-1)^{k-1}/k ⟨e^{k-1} L(M)^k, [M]⟩` when `f*f_! = 0` and
/// `L(ν)^{-1} = L(M)` (as for a nullhomotopic immersion).
pub fn szucs_signature(model: &ImmersionModel, k: usize) -> Result<Q, ModelError> {
    check_k(k)?;
    require_pushpull_zero(model)?;
    let lm = model.l_m()?;
    let lnu_inv = model.l_nu_inv()?;
    if lnu_inv != lm {
        return Err(precondition("L(ν)^-1 = L(M)", format!("L(ν)^-1 = {lnu_inv}, L(M) = {lm}")));
    }
    Ok((&model.euler().pow(k - 1) * &lm.pow(k)).integrate() * sign_over_k(k))
}

/// `p_J = (-1)^{k-1}/k ⟨e^{k-1} (P(M)^k)_J, [M]⟩` when `f*f_! = 0` and
/// `P(ν)^{-1} = P(M)`.
pub fn szucs_pontrjagin(model: &ImmersionModel, k: usize, j: &IndexSequence) -> Result<Q, ModelError> {
    check_k(k)?;
    require_pushpull_zero(model)?;
    let pm = model.p_m();
    let inv = model.p_nu_inv()?;
    if inv != pm {
        return Err(precondition("P(ν)^-1 = P(M)", format!("P(ν)^-1 = {inv}, P(M) = {pm}")));
    }
    Ok((&model.euler().pow(k - 1) * &pm.pow(k).select(j)).integrate() * sign_over_k(k))
}

/// `⟨L(N) ∏ tanh(e_i), [N]⟩` for classes `e_i` of degree 2 on `N`.
pub fn hirzebruch_virtual_signature(l_n: &GradedClass, eulers: &[GradedClass]) -> Result<Q, ModelError> {
    let tanh = truncated::tanh_coeffs(l_n.ring().series_order() + 1);
    let mut acc = l_n.clone();
    for e in eulers {
        acc = &acc * &e.eval_series(&tanh)?;
    }
    Ok(acc.integrate())
}

/// The virtual-signature formula for a union of codimension-2 embedded
/// components `f_i`, with `V_i` the bundle whose Euler class is the dual
/// class `e_i = f_{i!}(1)`. Checks that each component is embedded and that
/// its normal bundle is the restriction of `V_i`, i.e.
/// `L(ν_i)^{-1} = f_i^*(tanh(e_i)/e_i)`.
pub fn hirzebruch_from_model(model: &ImmersionModel) -> Result<Q, ModelError> {
    if model.codim() != 2 {
        return Err(precondition("codimension 2", format!("codim = {}", model.codim())));
    }
    let mut eulers = Vec::new();
    for (i, part) in model.parts().iter().enumerate() {
        if !part.embedding_consistent() {
            return Err(precondition("every component is embedded", format!("component {}", i + 1)));
        }
        let e = part.pushforward(&GradedClass::one(part.hm()));
        let n = part.hn().series_order() + 2;
        let tanh_over_x: Vec<Q> = truncated::tanh_coeffs(n).into_iter().skip(1).collect();
        let restricted = part.pullback(&e.eval_series(&tanh_over_x)?);
        let lnu_inv = part.l_nu_inv()?;
        if &restricted != lnu_inv {
            return Err(precondition(
                "ν_i is the restriction of V_i",
                format!("component {}: L(ν)^-1 = {lnu_inv}, f*(tanh(e)/e) = {restricted}", i + 1),
            ));
        }
        eulers.push(e);
    }
    hirzebruch_virtual_signature(model.l_n()?, &eulers)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bundled::{by_name, hypersurface};
    use crate::multipoint::{characteristic_value, jk_ik_elementary, partition_term, signature_value, Route};
    use crate::partitions::Partition;
    use crate::random::{random_class, random_divisor_union, random_model, random_nullhomotopic, rng, EulerKind};
    use crate::rational::int;

    fn js() -> Vec<IndexSequence> {
        [vec![2], vec![4], vec![2, 2], vec![4, 2], vec![2, 2, 2], vec![8], vec![4, 4]]
            .into_iter()
            .map(|j| IndexSequence::new(j).unwrap())
            .collect()
    }

    #[test]
    fn pulled_from_n_agrees() {
        let mut g = rng(31);
        let mut models = vec![by_name("line-in-plane").unwrap(), hypersurface(2), hypersurface(3)];
        models.extend((0..6).map(|_| random_model(EulerKind::Embedded, &mut g)));
        let mut char_checked = 0;
        for m in &models {
            for k in 1..=4 {
                let x1 = random_class(m.hm(), 2, false, &mut g);
                let ys: Vec<GradedClass> = (1..k).map(|_| random_class(m.hn(), 2, false, &mut g)).collect();
                let mut factors = vec![x1.clone()];
                factors.extend(ys.iter().map(|y| m.pullback(y)));
                assert_eq!(pulled_from_n(m, &x1, &ys).unwrap(), jk_ik_elementary(m, &factors).unwrap());
                assert_eq!(
                    pulled_from_n_signature(m, k).unwrap(),
                    signature_value(m, k, Route::General).unwrap()
                );
                for j in js() {
                    if let Ok(v) = pulled_from_n_characteristic(m, k, CharKind::Pontrjagin, &j) {
                        assert_eq!(v, characteristic_value(m, k, CharKind::Pontrjagin, &j, Route::General).unwrap());
                        char_checked += 1;
                    }
                    let c = pulled_from_n_characteristic(m, k, CharKind::Chern, &j).unwrap();
                    assert_eq!(c, characteristic_value(m, k, CharKind::Chern, &j, Route::General).unwrap());
                }
            }
        }
        assert!(char_checked > 0);
    }

    #[test]
    fn pulled_from_n_rejects() {
        let m = by_name("nullhomotopic-cp2").unwrap();
        assert!(matches!(pulled_from_n_signature(&m, 2), Err(ModelError::Precondition { .. })));
        // two lines: e = f*(h) on both components
        let u = by_name("two-lines").unwrap();
        assert_eq!(pulled_from_n_signature(&u, 2).unwrap(), int(1));
    }

    #[test]
    fn euler_zero_agrees() {
        let mut g = rng(32);
        for _ in 0..8 {
            let m = random_model(EulerKind::Zero, &mut g);
            for k in 1..=4 {
                let v = signature_value(&m, k, Route::General).unwrap();
                assert_eq!(euler_zero_signature(&m, k).unwrap(), v);
                assert_eq!(euler_zero_signature_via_n(&m, k).unwrap(), v);
                for j in js() {
                    for kind in [CharKind::Pontrjagin, CharKind::Chern] {
                        assert_eq!(
                            euler_zero_pontrjagin(&m, k, kind, &j).unwrap(),
                            characteristic_value(&m, k, kind, &j, Route::General).unwrap()
                        );
                    }
                }
            }
        }
        assert!(euler_zero_signature(&by_name("line-in-plane").unwrap(), 2).is_err());
    }

    fn nullhomotopic_models() -> Vec<ImmersionModel> {
        let mut g = rng(33);
        let mut v = vec![by_name("nullhomotopic-cp2").unwrap()];
        v.extend((0..7).map(|_| random_nullhomotopic(&mut g)));
        v
    }

    #[test]
    fn pushpull_zero_agrees() {
        let mut g = rng(34);
        for m in nullhomotopic_models() {
            for k in 1..=4 {
                let xs: Vec<GradedClass> = (0..k).map(|_| random_class(m.hm(), 2, false, &mut g)).collect();
                let closed = pushpull_zero_jk_ik(&m, &xs).unwrap();
                assert_eq!(closed, jk_ik_elementary(&m, &xs).unwrap());
                // only the one-class partition survives
                assert_eq!(closed, partition_term(&m, &Partition::coarsest(k).unwrap(), &xs).unwrap());
                let v = signature_value(&m, k, Route::General).unwrap();
                assert_eq!(pushpull_zero_signature(&m, k).unwrap(), v);
                assert_eq!(szucs_signature(&m, k).unwrap(), v);
                for j in js() {
                    let p = characteristic_value(&m, k, CharKind::Pontrjagin, &j, Route::General).unwrap();
                    assert_eq!(pushpull_zero_characteristic(&m, k, CharKind::Pontrjagin, &j).unwrap(), p);
                    assert_eq!(szucs_pontrjagin(&m, k, &j).unwrap(), p);
                }
            }
        }
    }

    #[test]
    fn one_double_point_of_cp2_in_s8() {
        let m = by_name("nullhomotopic-cp2").unwrap();
        assert_eq!(szucs_signature(&m, 2).unwrap(), int(1));
        assert!(szucs_signature(&by_name("line-in-plane").unwrap(), 2).is_err());
        assert!(pushpull_zero_signature(&hypersurface(2), 2).is_err());
    }

    #[test]
    fn hirzebruch_virtual_signatures() {
        assert_eq!(hirzebruch_from_model(&by_name("two-lines").unwrap()).unwrap(), int(1));
        for d in 1..=4 {
            let m = hypersurface(d);
            assert_eq!(hirzebruch_from_model(&m).unwrap(), signature_value(&m, 1, Route::Collected).unwrap());
        }
        let mut g = rng(35);
        for parts in 1..=3 {
            let u = random_divisor_union(parts, &mut g);
            assert_eq!(
                hirzebruch_from_model(&u).unwrap(),
                signature_value(&u, parts, Route::General).unwrap(),
                "{parts} components"
            );
        }
        let bad = random_model(EulerKind::Generic, &mut g);
        assert!(hirzebruch_from_model(&bad).is_err());
        assert!(hirzebruch_from_model(&by_name("nullhomotopic-cp2").unwrap()).is_err());
    }
}
