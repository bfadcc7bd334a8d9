//! Multiplicative sequences of total Pontrjagin-type classes.
//!
//! A total class `P = 1 + p_1 + p_2 + …` (with `p_j` in degree `4j`) is
//! formally split as `∏ (1 + x_i)`. For a characteristic series
//! `Q(x) = 1 + q_1 x + …` the multiplicative sequence is `∏ Q(x_i)`, computed
//! as `exp(Σ_n λ_n s_n)` where `log Q = Σ λ_n x^n` and the power sums `s_n` of
//! the roots come from Newton's identities.

use num::Zero;

use super::{GradedClass, RingError};
use crate::poly::truncated;
use crate::rational::Q;

fn check_pontrjagin(p: &GradedClass) -> Result<usize, RingError> {
    if !p.is_unital() {
        return Err(RingError::NonUnital);
    }
    if let Some(&d) = p.degrees().iter().find(|&&d| d % 4 != 0) {
        return Err(RingError::NonPontrjaginDegree(d));
    }
    Ok((p.ring().top_degree() / 4) as usize)
}

/// Power sums `s_1, …, s_n` (index 0 unused, zero) of the formal roots of a
/// unital class with components in degrees `4j`.
pub fn power_sums(p: &GradedClass) -> Result<Vec<GradedClass>, RingError> {
    let n = check_pontrjagin(p)?;
    let ring = p.ring();
    let elem: Vec<GradedClass> = (0..=n).map(|j| p.degree_part(4 * j as u32)).collect();
    let mut s = vec![GradedClass::zero(ring); n + 1];
    for m in 1..=n {
        let mut acc = elem[m].scale(&Q::from_integer((m as i64).into()));
        if m % 2 == 0 {
            acc = -&acc;
        }
        for i in 1..m {
            let t = &elem[i] * &s[m - i];
            acc = if i % 2 == 1 { &acc + &t } else { &acc - &t };
        }
        s[m] = acc;
    }
    Ok(s)
}

/// `∏ Q(x_i)` for the characteristic series with coefficients `char_series`
/// (`char_series[0]` must be 1).
pub fn multiplicative_sequence(p: &GradedClass, char_series: &[Q]) -> Result<GradedClass, RingError> {
    let n = check_pontrjagin(p)?;
    let ring = p.ring();
    let mut q: Vec<Q> = char_series.iter().take(n + 1).cloned().collect();
    q.resize(n + 1, Q::zero());
    let log_q = truncated::log(&q, n + 1);
    let s = power_sums(p)?;
    let mut exponent = GradedClass::zero(ring);
    for m in 1..=n {
        exponent = &exponent + &s[m].scale(&log_q[m]);
    }
    exponent.eval_series(&truncated::exp_coeffs(ring.series_order()))
}

/// Total Hirzebruch class from the total Pontrjagin class (characteristic
/// series `√x / tanh √x`).
pub fn l_class(p: &GradedClass) -> Result<GradedClass, RingError> {
    let n = (p.ring().top_degree() / 4) as usize;
    multiplicative_sequence(p, &truncated::l_genus_coeffs(n + 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graded_ring::GradedRing;
    use crate::rational::{int, ratio};
    use proptest::prelude::*;
    use std::sync::Arc;

    fn pont_ring() -> Arc<GradedRing> {
        // p1 in degree 4, p2 in degree 8
        GradedRing::truncated_monomials(&[("p1", 4), ("p2", 8)], 8, |_| int(1)).unwrap()
    }

    #[test]
    fn l_of_one_is_one() {
        let r = pont_ring();
        assert_eq!(l_class(&GradedClass::one(&r)).unwrap(), GradedClass::one(&r));
    }

    /// Symmetrised expansion of Q(x1) Q(x2) with e1 = x1 + x2, e2 = x1 x2,
    /// done by hand from Q = 1 + x/3 - x^2/45:
    /// deg 4: (x1 + x2)/3 = p1/3
    /// deg 8: -(x1^2 + x2^2)/45 + x1 x2/9 = -(p1^2 - 2 p2)/45 + p2/9 = (7 p2 - p1^2)/45
    #[test]
    fn first_two_l_polynomials() {
        let r = pont_ring();
        let p1 = GradedClass::named(&r, "p1").unwrap();
        let p2 = GradedClass::named(&r, "p2").unwrap();
        let p = &(&GradedClass::one(&r) + &p1) + &p2;
        let l = l_class(&p).unwrap();
        assert_eq!(l.degree_part(4), p1.scale(&ratio(1, 3)));
        let l2 = &p2.scale(&int(7)) - &(&p1 * &p1);
        assert_eq!(l.degree_part(8), l2.scale(&ratio(1, 45)));
    }

    #[test]
    fn rejects_bad_input() {
        let r = GradedRing::truncated_polynomial("h", 2, 3, int(1)).unwrap();
        let h = GradedClass::named(&r, "h").unwrap();
        assert_eq!(l_class(&h), Err(RingError::NonUnital));
        let p = &GradedClass::one(&r) + &h;
        assert_eq!(l_class(&p), Err(RingError::NonPontrjaginDegree(2)));
    }

    #[test]
    fn newton_power_sums() {
        let r = pont_ring();
        let p1 = GradedClass::named(&r, "p1").unwrap();
        let p2 = GradedClass::named(&r, "p2").unwrap();
        let p = &(&GradedClass::one(&r) + &p1) + &p2;
        let s = power_sums(&p).unwrap();
        assert_eq!(s[1], p1);
        assert_eq!(s[2], &(&p1 * &p1) - &p2.scale(&int(2)));
    }

    proptest! {
        #[test]
        fn l_is_multiplicative(a in proptest::collection::vec(-4i64..=4, 6)) {
            let r = GradedRing::truncated_monomials(&[("x", 4), ("y", 4)], 12, |_| int(1)).unwrap();
            let deg4: Vec<usize> = (0..r.dim()).filter(|&i| r.degree(i) == 4).collect();
            let deg8: Vec<usize> = (0..r.dim()).filter(|&i| r.degree(i) == 8).collect();
            let mk = |c: &[i64]| {
                let mut v = vec![(0usize, int(1))];
                v.push((deg4[0], int(c[0])));
                v.push((deg4[1], int(c[1])));
                v.push((deg8[0], int(c[2])));
                GradedClass::from_coords(&r, v).unwrap()
            };
            let p = mk(&a[0..3]);
            let q = mk(&a[3..6]);
            prop_assert_eq!(l_class(&(&p * &q)).unwrap(), &l_class(&p).unwrap() * &l_class(&q).unwrap());
        }
    }
}
