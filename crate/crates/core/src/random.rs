//! Seeded random models for property tests.
//!
//! The target is always `Q[h]/h^{r+1}` (deg h = 2, `⟨h^r⟩ = 1`). The source
//! ring is a truncated polynomial ring on one or two generators with random
//! integrals on its top monomials; `f*` is fixed by a random `ξ = f*(h)` and
//! `f_!` by [`maps_from_generator`], so every model validates.

use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bundled::maps_from_generator;
use crate::graded_ring::{GradedClass, GradedRing, TensorClass};
use crate::immersion_model::{ImmersionModel, ModelData};
use crate::rational::{int, Q};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EulerKind {
    Generic,
    Zero,
    PulledBack,
    /// `e = f*f_!(1)` on a source generated by `ξ`, so the self-intersection
    /// identity holds.
    Embedded,
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn small<R: Rng + ?Sized>(rng: &mut R, bound: i64) -> Q {
    int(rng.gen_range(-bound..=bound))
}

/// Random class with small integer coefficients; the unit coefficient is 1
/// when `unital`, and only degrees divisible by `step` appear.
pub fn random_class<R: Rng + ?Sized>(ring: &Arc<GradedRing>, step: u32, unital: bool, rng: &mut R) -> GradedClass {
    let coords = (0..ring.dim()).filter_map(|i| {
        let d = ring.degree(i);
        if d == 0 {
            return unital.then(|| (i, int(1))).or_else(|| Some((i, small(rng, 2))));
        }
        d.is_multiple_of(step).then(|| (i, small(rng, 2)))
    });
    let coords: Vec<(usize, Q)> = coords.collect();
    GradedClass::from_coords(ring, coords).expect("indices in range")
}

/// Random homogeneous class of degree `d`.
pub fn random_homogeneous<R: Rng + ?Sized>(ring: &Arc<GradedRing>, d: u32, rng: &mut R) -> GradedClass {
    let coords: Vec<(usize, Q)> = (0..ring.dim())
        .filter(|&i| ring.degree(i) == d)
        .map(|i| (i, small(rng, 2)))
        .collect();
    GradedClass::from_coords(ring, coords).expect("indices in range")
}

/// Random tensor with a few basis terms of even total degree.
pub fn random_tensor<R: Rng + ?Sized>(ring: &Arc<GradedRing>, k: usize, terms: usize, rng: &mut R) -> TensorClass {
    let mut x = TensorClass::zero(ring, k);
    for _ in 0..terms {
        let idx: Vec<usize> = (0..k).map(|_| rng.gen_range(0..ring.dim())).collect();
        let c = int(rng.gen_range(1..=3) * if rng.gen_bool(0.5) { 1 } else { -1 });
        let t = TensorClass::elementary(ring, idx, c).expect("indices in range");
        x = x.try_add(&t).expect("same ring");
    }
    x
}

/// Target data shared by the parts of a union.
#[derive(Debug, Clone)]
pub struct Target {
    pub hn: Arc<GradedRing>,
    pub codim: u32,
    pub p_n: GradedClass,
    pub c_n: GradedClass,
}

pub fn random_target<R: Rng + ?Sized>(rng: &mut R) -> Target {
    let (r, codim) = *[(2u32, 2u32), (3, 2), (4, 2), (3, 4), (4, 4)].choose(rng).expect("nonempty");
    let hn = GradedRing::truncated_polynomial("h", 2, r, int(1)).expect("ring");
    Target {
        p_n: random_class(&hn, 4, true, rng),
        c_n: random_class(&hn, 2, true, rng),
        hn,
        codim,
    }
}

pub fn random_part<R: Rng + ?Sized>(target: &Target, kind: EulerKind, rng: &mut R) -> ImmersionModel {
    let m = target.hn.top_degree() - target.codim;
    let gens: Vec<(&str, u32)> = match (kind, rng.gen_range(0..3)) {
        (EulerKind::Embedded, _) | (_, 0) => vec![("t", 2)],
        (_, 1) => vec![("t", 2), ("s", 2)],
        _ if m >= 4 => vec![("t", 2), ("u", 4)],
        _ => vec![("t", 2), ("s", 2)],
    };
    let integrals: Vec<i64> = (0..16)
        .map(|_| *[-3i64, -2, -1, 1, 2, 3].choose(rng).expect("nonempty"))
        .collect();
    let hm = GradedRing::truncated_monomials(&gens, m, |e| {
        let key = e.iter().fold(0usize, |a, &x| a * 7 + x);
        int(integrals[key % integrals.len()])
    })
    .expect("ring");
    let t = GradedClass::named(&hm, "t").expect("t");
    let xi = if kind == EulerKind::Embedded {
        t.scale(&int(*[-2i64, -1, 1, 2].choose(rng).expect("nonempty")))
    } else {
        random_homogeneous(&hm, 2, rng)
    };
    let (pullback, pushforward) = maps_from_generator(&target.hn, &hm, &xi, target.codim);
    let mut data = ModelData {
        hm: hm.clone(),
        hn: target.hn.clone(),
        codim: target.codim,
        pullback,
        pushforward,
        euler: Default::default(),
        p_m: random_class(&hm, 4, true, rng).coords().clone(),
        p_n: target.p_n.coords().clone(),
        c_m: Some(random_class(&hm, 2, true, rng).coords().clone()),
        c_n: Some(target.c_n.coords().clone()),
    };
    let half = (target.codim / 2) as usize;
    data.euler = match kind {
        EulerKind::Generic => random_homogeneous(&hm, target.codim, rng).coords().clone(),
        EulerKind::Zero => Default::default(),
        EulerKind::PulledBack => xi.pow(half).scale(&small(rng, 2)).coords().clone(),
        EulerKind::Embedded => {
            let pre = ImmersionModel::new(data.clone()).expect("model");
            pre.push_pull(&GradedClass::one(&hm)).coords().clone()
        }
    };
    ImmersionModel::new(data).expect("model")
}

pub fn random_model<R: Rng + ?Sized>(kind: EulerKind, rng: &mut R) -> ImmersionModel {
    let target = random_target(rng);
    random_part(&target, kind, rng)
}

/// Union of `parts` random components over one target.
pub fn random_union<R: Rng + ?Sized>(parts: usize, kind: EulerKind, rng: &mut R) -> ImmersionModel {
    let target = random_target(rng);
    let parts: Vec<ImmersionModel> = (0..parts).map(|_| random_part(&target, kind, rng)).collect();
    ImmersionModel::disjoint_union(&parts).expect("union")
}

/// A reproducible mix: mostly single components with each Euler kind, and
/// every fifth model a union of two or three components.
pub fn random_models(seed: u64, count: usize) -> Vec<ImmersionModel> {
    let mut rng = rng(seed);
    let kinds = [EulerKind::Generic, EulerKind::PulledBack, EulerKind::Zero, EulerKind::Embedded];
    (0..count)
        .map(|i| {
            if i % 5 == 4 {
                let n = rng.gen_range(2..=3);
                random_union(n, EulerKind::Generic, &mut rng)
            } else {
                random_model(kinds[i % 5], &mut rng)
            }
        })
        .collect()
}

/// A source mapping every positive-degree class of `N` to zero (`ξ = 0`), so
/// that `f*f_! = 0` and `L(ν)^{-1} = L(M)`. Only top-degree classes of `M`
/// push forward nontrivially.
pub fn random_nullhomotopic<R: Rng + ?Sized>(rng: &mut R) -> ImmersionModel {
    let target = random_target(rng);
    let base = random_part(&target, EulerKind::Generic, rng);
    let mut d = base.data();
    let (pullback, pushforward) = maps_from_generator(&d.hn, &d.hm, &GradedClass::zero(&d.hm), d.codim);
    d.pullback = pullback;
    d.pushforward = pushforward;
    ImmersionModel::new(d).expect("model")
}

/// An embedded codimension-2 component whose normal bundle is the
/// restriction of a line bundle on `N` with Euler class `f_!(1)`:
/// `P(M) = f*P(N) / (1 + e²)` and `C(M) = f*C(N) / (1 + e)`.
pub fn random_divisor<R: Rng + ?Sized>(target: &Target, rng: &mut R) -> ImmersionModel {
    assert_eq!(target.codim, 2, "divisors have codimension 2");
    let base = random_part(target, EulerKind::Embedded, rng);
    let one = GradedClass::one(base.hm());
    let e = base.euler();
    let p_m = &base.pullback(base.p_n()) * &(&one + &e.pow(2)).invert_unital().expect("unital");
    let c_m = &base.pullback(base.c_n().expect("chern")) * &(&one + e).invert_unital().expect("unital");
    let mut d = base.data();
    d.p_m = p_m.coords().clone();
    d.c_m = Some(c_m.coords().clone());
    ImmersionModel::new(d).expect("model")
}

/// Union of `parts` random divisors in a common target of dimension 6 or 8.
pub fn random_divisor_union<R: Rng + ?Sized>(parts: usize, rng: &mut R) -> ImmersionModel {
    let r = rng.gen_range(3..=4);
    let hn = GradedRing::truncated_polynomial("h", 2, r, int(1)).expect("ring");
    let target = Target {
        p_n: random_class(&hn, 4, true, rng),
        c_n: random_class(&hn, 2, true, rng),
        hn,
        codim: 2,
    };
    let parts: Vec<ImmersionModel> = (0..parts).map(|_| random_divisor(&target, rng)).collect();
    ImmersionModel::disjoint_union(&parts).expect("union")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn random_models_validate() {
        for (i, m) in random_models(1, 40).iter().enumerate() {
            let r = m.validate();
            assert!(r.passed(), "model {i}:\n{r}");
        }
        let mut g = rng(3);
        for _ in 0..5 {
            let m = random_nullhomotopic(&mut g);
            assert!(m.validate().passed());
            assert_eq!(m.push_pull_vanishes(), None);
            let u = random_divisor_union(3, &mut g);
            assert!(u.validate().passed());
            assert!(u.parts().iter().all(|p| p.embedding_consistent()));
        }
    }

    #[test]
    fn kinds_have_their_shape() {
        let mut g = rng(4);
        for _ in 0..5 {
            assert!(random_model(EulerKind::Zero, &mut g).euler().is_zero());
            let m = random_model(EulerKind::PulledBack, &mut g);
            assert!(m.pullback_preimage(m.euler()).is_some());
            assert!(random_model(EulerKind::Embedded, &mut g).embedding_consistent());
        }
    }

    #[test]
    fn seeds_are_reproducible() {
        assert_eq!(random_models(9, 6), random_models(9, 6));
        assert_ne!(random_models(9, 6), random_models(10, 6));
    }
}
