//! Cross-checks the collected formulas against brute-force partition sums.

use std::time::Instant;

use multiple_points::bundled;
use multiple_points::multipoint::{self, Route};
use multiple_points::oracle;
use multiple_points::random;

fn main() {
    let mut models = bundled::all();
    let randoms = random::random_models(11, 10);
    models.extend(randoms.iter().map(|m| ("random", m.clone())));
    for (name, m) in &models {
        let start = Instant::now();
        let mut ok = true;
        for k in 1..=6 {
            let e = oracle::bk_enumerated(m, k, oracle::DEFAULT_CAP).unwrap();
            ok &= e.value == multipoint::b_k(m, k).unwrap();
            let s = oracle::sigma_enumerated(m, k, oracle::DEFAULT_CAP).unwrap();
            ok &= s.value == multipoint::signature_value(m, k, Route::Collected).unwrap();
        }
        println!("{name:<18} k <= 6 agree: {ok} ({:.0} ms)", start.elapsed().as_secs_f64() * 1e3);
    }
    println!("cap {}: {:?}", oracle::DEFAULT_CAP, oracle::bk_enumerated(&models[0].1, 8, oracle::DEFAULT_CAP).err());
}
