//! Builds a model of a smooth cubic surface in CP³ from its rings and maps,
//! validates it, and prints the derived normal classes.

use multiple_points::bundled::maps_from_generator;
use multiple_points::graded_ring::{GradedClass, GradedRing};
use multiple_points::immersion_model::{ImmersionModel, ModelData};
use multiple_points::rational::int;

fn main() {
    let d = 3;
    let hn = GradedRing::truncated_polynomial("h", 2, 3, int(1)).unwrap();
    let hm = GradedRing::truncated_polynomial("t", 2, 2, int(d)).unwrap();
    let t = GradedClass::named(&hm, "t").unwrap();
    let h = GradedClass::named(&hn, "h").unwrap();
    let (pullback, pushforward) = maps_from_generator(&hn, &hm, &t, 2);

    let one_n = GradedClass::one(&hn);
    let one_m = GradedClass::one(&hm);
    let p_n = (&one_n + &h.pow(2)).pow(4);
    // P(M) = (1+t²)⁴ / (1 + 9t²)
    let p_m = &(&one_m + &t.pow(2)).pow(4) * &(&one_m + &t.pow(2).scale(&int(d * d))).invert_unital().unwrap();

    let model = ImmersionModel::new(ModelData {
        hm: hm.clone(),
        hn,
        codim: 2,
        pullback,
        pushforward,
        euler: t.scale(&int(d)).coords().clone(),
        p_m: p_m.coords().clone(),
        p_n: p_n.coords().clone(),
        c_m: None,
        c_n: None,
    })
    .unwrap();

    print!("{}", model.validate());
    println!("f_!(1) = {}", model.pushforward(&one_m));
    println!("f*f_!(1) = {}   e = {}", model.push_pull(&one_m), model.euler());
    println!("embedding consistent: {}", model.embedding_consistent());
    println!("P(nu) = {}", model.p_nu().unwrap());
    println!("L(nu)^-1 = {}", model.l_nu_inv().unwrap());
    println!("<L(M),[M]> = {}", model.l_m().unwrap().integrate());

    // a map that breaks integration compatibility is reported with a witness
    let mut bad = model.data();
    bad.pushforward[1] = bad.pushforward[1].iter().map(|(&i, c)| (i, c * int(2))).collect();
    let report = ImmersionModel::new(bad).unwrap().validate();
    for f in report.failures() {
        println!("{f}");
    }
}
