//! Closed forms under extra hypotheses, each checked before it is used.

use multiple_points::bundled;
use multiple_points::multipoint::{self, Route};
use multiple_points::random::{self, EulerKind};

fn main() {
    let mut g = random::rng(5);
    let null = bundled::by_name("nullhomotopic-cp2").unwrap();
    println!("nullhomotopic CP2: sigma(Delta_2) = {}", multipoint::szucs_signature(&null, 2).unwrap());
    println!("  f*f_! = 0 form: {}", multipoint::pushpull_zero_signature(&null, 2).unwrap());
    match multipoint::pulled_from_n_signature(&null, 2) {
        Ok(v) => println!("  pulled from N: {v}"),
        Err(e) => println!("  pulled from N refused: {e}"),
    }

    let two = bundled::by_name("two-lines").unwrap();
    println!("two lines: virtual signature {}", multipoint::hirzebruch_from_model(&two).unwrap());
    println!("two lines: pulled from N {}", multipoint::pulled_from_n_signature(&two, 2).unwrap());

    let m = random::random_model(EulerKind::Zero, &mut g);
    for k in 1..=4 {
        println!(
            "e = 0 model k={k}: closed {} general {}",
            multipoint::euler_zero_signature(&m, k).unwrap(),
            multipoint::signature_value(&m, k, Route::General).unwrap()
        );
    }

    let divisors = random::random_divisor_union(3, &mut g);
    println!(
        "three divisors: virtual signature {} triple points {}",
        multipoint::hirzebruch_from_model(&divisors).unwrap(),
        multipoint::signature_value(&divisors, 3, Route::General).unwrap()
    );
}
