//! Signatures of multiple-point manifolds by every route, and the class B_k.

use multiple_points::bundled;
use multiple_points::multipoint::{self, Route};

fn main() {
    for (name, m) in bundled::all() {
        for k in 1..=3 {
            let values: Vec<String> = Route::ALL
                .iter()
                .map(|&r| format!("{r}={}", multipoint::signature_value(&m, k, r).unwrap()))
                .collect();
            println!("{name:<18} k={k} dim {:?}  {}", m.multiple_point_dimensions(k), values.join(" "));
        }
        println!("{name:<18} B_2 = {}", multipoint::b_k(&m, 2).unwrap());
    }

    let two = bundled::by_name("two-lines").unwrap();
    let result = multipoint::signature(&two, 2, Route::General).unwrap();
    println!("\ntwo lines meet in sigma(Delta_2) = {} point", result.value);
}
