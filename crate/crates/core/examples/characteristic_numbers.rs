//! Pontrjagin and Chern numbers of multiple-point manifolds.

use multiple_points::bundled;
use multiple_points::graded_ring::IndexSequence;
use multiple_points::multipoint::{characteristic_number, CharKind, Route};

fn main() {
    let k3 = bundled::hypersurface(4);
    let j: IndexSequence = "4".parse().unwrap();
    let p1 = characteristic_number(&k3, 1, CharKind::Pontrjagin, &j, Route::General).unwrap();
    let c2 = characteristic_number(&k3, 1, CharKind::Chern, &j, Route::General).unwrap();
    println!("quartic surface: p_1 = {}, c_2 = {}", p1.value, c2.value);
    let c11: IndexSequence = "2,2".parse().unwrap();
    let v = characteristic_number(&k3, 1, CharKind::Chern, &c11, Route::ViaN).unwrap();
    println!("quartic surface: c_1^2 = {}", v.value);

    // a sequence of the wrong degree yields 0 and a warning
    let wrong: IndexSequence = "2".parse().unwrap();
    let r = characteristic_number(&k3, 1, CharKind::Chern, &wrong, Route::General).unwrap();
    println!("c_(2) = {} ({})", r.value, r.warnings.join("; "));

    let null = bundled::by_name("nullhomotopic-cp2").unwrap();
    for route in [Route::General, Route::ViaN] {
        let r = characteristic_number(&null, 1, CharKind::Pontrjagin, &j, route).unwrap();
        println!("CP2 in S8, {route}: p_1[Delta_1] = {}", r.value);
    }
}
