//! Seeded random models and the invariants they satisfy.

use multiple_points::multipoint::{self, Route};
use multiple_points::random;

fn main() {
    for (i, m) in random::random_models(3, 10).iter().enumerate() {
        let dims: Vec<u32> = m.hm().components().iter().map(|c| c.top_degree).collect();
        let s: Vec<String> = (1..=4)
            .map(|k| multipoint::signature_value(m, k, Route::General).unwrap().to_string())
            .collect();
        println!(
            "#{i} dim M {dims:?} dim N {} e = {}  valid {}  sigma_1..4 = {}",
            m.hn().top_degree(),
            m.euler(),
            m.validate().passed(),
            s.join(", ")
        );
    }
}
