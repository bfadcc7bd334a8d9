//! Set partitions of {1..k} in restricted-growth order, their types, and the
//! collected counts used by the type-vector sums.

use multiple_points::partitions::{count_by_type, count_by_type_marked, enumerate, quotient, refines, type_vectors, Partition};

fn main() {
    for alpha in enumerate(4).unwrap() {
        println!("{alpha}  type {:?}", alpha.type_vector().0);
    }

    println!();
    for k in 1..=7 {
        let total: usize = enumerate(k).unwrap().count();
        let by_type: Vec<String> = type_vectors(k)
            .iter()
            .map(|t| format!("{:?}:{}", t.0, count_by_type(k, &t.0).unwrap()))
            .collect();
        println!("k={k} Bell={total}  {}", by_type.join(" "));
    }

    // marked: the class holding 1 has size 2, the rest are singletons
    println!("\nmarked count k=4, l=2, rest (2,0,0,0): {}", count_by_type_marked(4, 2, &[2, 0, 0, 0]).unwrap());

    let beta = Partition::from_classes(4, &[vec![1, 2], vec![3], vec![4]]).unwrap();
    let alpha = Partition::from_classes(4, &[vec![1, 2, 4], vec![3]]).unwrap();
    println!("{beta} refines {alpha}: {}", refines(&beta, &alpha).unwrap());
    println!("quotient {alpha} / {beta} = {}", quotient(&alpha, &beta).unwrap());
}
