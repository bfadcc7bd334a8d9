//! Special equivalence-relation series: composition, inversion and the
//! derivative identity behind the closed form of j_{k!}(1).

use multiple_points::oracle;
use multiple_points::partition_series::{falling_product, h_inverse, h_series, q_partial, SpecialSeries};
use multiple_points::rational::{format, int, Q};

fn main() {
    let h = h_series(8);
    let inv = h.invert().unwrap();
    for k in 1..=8 {
        println!("invert(H)_{k} = {}", inv.coeff(k).unwrap());
    }
    assert_eq!(inv, h_inverse(8));
    assert_eq!(h.compose(&inv).unwrap(), SpecialSeries::identity(8).unwrap());

    // the same composite by summing over every partition
    for k in 1..=5 {
        let e = oracle::compose_enumerated(h.coeffs(), inv.coeffs(), k);
        println!("enumerated (H o H^-1)_{k} = {} over {} partitions", e.value, e.terms);
    }

    for n in 1..=5 {
        println!("d^{n} q(x,y,0) = {}", q_partial(n));
        assert_eq!(q_partial(n), falling_product(n));
    }

    let f = SpecialSeries::new(vec![int(1), int(2), int(-1), int(3)]).unwrap();
    let g = f.invert().unwrap();
    let show = |c: &[Q]| c.iter().map(format).collect::<Vec<_>>().join(", ");
    println!("F = [{}]\nF^-1 = [{}]", show(f.coeffs()), show(g.coeffs()));
}
