//! Small immersions with known invariants.
//!
//! | name | immersion | known value |
//! |---|---|---|
//! | `line-in-plane` | `CP¹ ⊂ CP²` | embedded, `σ(Δ₂) = 0` |
//! | `two-lines` | `CP¹ ⊔ CP¹ → CP²`, two lines meeting once | `σ(Δ₂) = 1` |
//! | `hypersurface-dN` | degree-`N` surface in `CP³` | `σ = (4N - N³)/3` |
//! | `nullhomotopic-cp2` | `CP² ↬ S⁸`, codimension 4, one double point | `f*f_! = 0` |

use std::sync::Arc;

use num::Zero;

use crate::graded_ring::{GradedClass, GradedRing, SparseVec};
use crate::immersion_model::{ImmersionModel, ModelData};
use crate::rational::int;

pub const NAMES: [&str; 7] = [
    "line-in-plane",
    "two-lines",
    "hypersurface-d1",
    "hypersurface-d2",
    "hypersurface-d3",
    "hypersurface-d4",
    "nullhomotopic-cp2",
];

/// `f*` and `f_!` for a target `Q[g]/g^{r+1}` given `ξ = f*(g)`.
///
/// `hn` must come from [`GradedRing::truncated_polynomial`], so basis `j` is
/// `g^j`. The pushforward is forced by the projection formula and
/// integration: `f_!(x) = ⟨x ξ^{r-j}⟩/⟨g^r⟩ · g^j` with
/// `deg g^j = deg x + codim`.
pub fn maps_from_generator(
    hn: &Arc<GradedRing>,
    hm: &Arc<GradedRing>,
    xi: &GradedClass,
    codim: u32,
) -> (Vec<SparseVec>, Vec<SparseVec>) {
    let r = hn.dim() - 1;
    let g = hn.degree(1.min(r));
    let top = hn.integral()[&r].clone();
    let pullback: Vec<SparseVec> = (0..=r).map(|j| xi.pow(j).coords().clone()).collect();
    let pushforward = (0..hm.dim())
        .map(|i| {
            let mut v = SparseVec::new();
            let d = hm.degree(i) + codim;
            if r > 0 && d.is_multiple_of(g) && ((d / g) as usize) <= r {
                let j = (d / g) as usize;
                let x = GradedClass::basis(hm, i).expect("index in range");
                let c = (&x * &xi.pow(r - j)).integrate() / &top;
                if !c.is_zero() {
                    v.insert(j, c);
                }
            }
            v
        })
        .collect();
    (pullback, pushforward)
}

fn binomial_class(x: &GradedClass, n: usize) -> GradedClass {
    (&GradedClass::one(x.ring()) + x).pow(n)
}

fn line_in_plane() -> ImmersionModel {
    let hn = GradedRing::truncated_polynomial("h", 2, 2, int(1)).expect("ring");
    let hm = GradedRing::truncated_polynomial("t", 2, 1, int(1)).expect("ring");
    let t = GradedClass::named(&hm, "t").expect("t");
    let h = GradedClass::named(&hn, "h").expect("h");
    let (pullback, pushforward) = maps_from_generator(&hn, &hm, &t, 2);
    let one_m = GradedClass::one(&hm);
    ImmersionModel::new(ModelData {
        codim: 2,
        pullback,
        pushforward,
        euler: t.coords().clone(),
        p_m: one_m.coords().clone(),
        p_n: binomial_class(&h.pow(2), 3).coords().clone(),
        c_m: Some(binomial_class(&t, 2).coords().clone()),
        c_n: Some(binomial_class(&h, 3).coords().clone()),
        hm,
        hn,
    })
    .expect("line-in-plane")
}

/// Smooth degree-`d` surface in `CP³`: `P(M) = 1 + (4 - d²)t²`, `e = d t`.
pub fn hypersurface(d: i64) -> ImmersionModel {
    let hn = GradedRing::truncated_polynomial("h", 2, 3, int(1)).expect("ring");
    let hm = GradedRing::truncated_polynomial("t", 2, 2, int(d)).expect("ring");
    let t = GradedClass::named(&hm, "t").expect("t");
    let h = GradedClass::named(&hn, "h").expect("h");
    let (pullback, pushforward) = maps_from_generator(&hn, &hm, &t, 2);
    let e = t.scale(&int(d));
    let p_n = binomial_class(&h.pow(2), 4);
    let c_n = binomial_class(&h, 4);
    let model = |p_m: SparseVec, c_m: Option<SparseVec>| {
        ImmersionModel::new(ModelData {
            hm: hm.clone(),
            hn: hn.clone(),
            codim: 2,
            pullback: pullback.clone(),
            pushforward: pushforward.clone(),
            euler: e.coords().clone(),
            p_m,
            p_n: p_n.coords().clone(),
            c_m,
            c_n: Some(c_n.coords().clone()),
        })
        .expect("hypersurface")
    };
    // adjunction: the normal bundle is O(d)
    let pre = model(GradedClass::one(&hm).coords().clone(), None);
    let p_m = &pre.pullback(&p_n) * &binomial_class(&e.pow(2), 1).invert_unital().expect("unital");
    let c_m = &pre.pullback(&c_n) * &binomial_class(&e, 1).invert_unital().expect("unital");
    model(p_m.coords().clone(), Some(c_m.coords().clone()))
}

/// `CP² ↬ S⁸` with normal Euler number `-2`, a codimension-4 immersion with
/// a single double point. Every positive-degree class of `S⁸` restricts
/// to zero, so `f*f_! = 0` and `L(ν)^{-1} = L(M)`.
pub fn nullhomotopic_cp2() -> ImmersionModel {
    let hn = GradedRing::truncated_polynomial("s", 8, 1, int(1)).expect("ring");
    let hm = GradedRing::truncated_polynomial("h", 2, 2, int(1)).expect("ring");
    let h = GradedClass::named(&hm, "h").expect("h");
    let (pullback, pushforward) = maps_from_generator(&hn, &hm, &GradedClass::zero(&hm), 4);
    let h2 = h.pow(2);
    ImmersionModel::new(ModelData {
        codim: 4,
        pullback,
        pushforward,
        euler: h2.scale(&int(-2)).coords().clone(),
        p_m: (&GradedClass::one(&hm) + &h2.scale(&int(3))).coords().clone(),
        p_n: GradedClass::one(&hn).coords().clone(),
        c_m: None,
        c_n: None,
        hm,
        hn,
    })
    .expect("nullhomotopic-cp2")
}

pub fn by_name(name: &str) -> Option<ImmersionModel> {
    let name = name.strip_suffix(".json").unwrap_or(name);
    Some(match name {
        "line-in-plane" => line_in_plane(),
        "two-lines" => {
            let l = line_in_plane();
            ImmersionModel::disjoint_union(&[l.clone(), l]).expect("union")
        }
        "nullhomotopic-cp2" => nullhomotopic_cp2(),
        _ => {
            let d: i64 = name.strip_prefix("hypersurface-d")?.parse().ok()?;
            if d < 1 {
                return None;
            }
            hypersurface(d)
        }
    })
}

pub fn all() -> Vec<(&'static str, ImmersionModel)> {
    NAMES
        .iter()
        .map(|&n| (n, by_name(n).expect("bundled name")))
        .collect()
}

/// One-line description for listings.
pub fn describe(name: &str) -> &'static str {
    match name {
        "line-in-plane" => "a line embedded in the projective plane",
        "two-lines" => "two lines in the projective plane, meeting in one double point",
        "nullhomotopic-cp2" => "CP2 immersed in S8 with one double point (f*f_! = 0)",
        n if n.starts_with("hypersurface-d") => "smooth hypersurface of the given degree in CP3",
        _ => "",
    }
}
