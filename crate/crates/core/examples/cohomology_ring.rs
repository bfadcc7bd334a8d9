//! Truncated polynomial rings, unital inverses and the Hirzebruch L-class.

use multiple_points::graded_ring::{l_class, GradedClass, GradedRing, IndexSequence};
use multiple_points::rational::int;

fn main() {
    // H*(CP⁴) = Q[h]/h⁵
    let ring = GradedRing::truncated_polynomial("h", 2, 4, int(1)).unwrap();
    let h = GradedClass::named(&ring, "h").unwrap();
    let one = GradedClass::one(&ring);

    let p = (&one + &h.pow(2)).pow(5);
    let l = l_class(&p).unwrap();
    println!("P(CP4) = {p}");
    println!("L(CP4) = {l}");
    println!("signature = {}", l.integrate());

    let c = (&one + &h).pow(5);
    let inv = c.invert_unital().unwrap();
    println!("C(CP4)^-1 = {inv}");
    assert_eq!(&c * &inv, one);

    let j = IndexSequence::new(vec![4, 4]).unwrap();
    println!("p_(4,4)[CP4] = {}", p.select(&j).integrate());

    // two generators, integrals chosen per top monomial
    let hm = GradedRing::truncated_monomials(&[("a", 2), ("b", 2)], 4, |e| int(if e == [1, 1] { 1 } else { 0 })).unwrap();
    let a = GradedClass::named(&hm, "a").unwrap();
    let b = GradedClass::named(&hm, "b").unwrap();
    println!("<ab, [CP1 x CP1]> = {}", (&a * &b).integrate());
    for check in hm.axiom_checks("CP1 x CP1") {
        println!("{check}");
    }
}
