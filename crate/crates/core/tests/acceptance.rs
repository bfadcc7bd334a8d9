//! One PASS/FAIL line per acceptance criterion. Every comparison is exact.

use std::process::ExitCode;
use std::time::Instant;

use multiple_points::bundled::{self, hypersurface};
use multiple_points::graded_ring::{GradedClass, GradedRing, IndexSequence};
use multiple_points::immersion_model::{ImmersionModel, ModelError};
use multiple_points::multipoint::{self, CharKind, Route};
use multiple_points::oracle;
use multiple_points::partition_series::{falling_product, h_inverse, h_series, q_partial, SpecialSeries};
use multiple_points::partitions::{count_by_type, count_by_type_marked, enumerate, type_vectors, Partition};
use multiple_points::random::{self, EulerKind};
use multiple_points::rational::{int, ratio, Q};
use rayon::prelude::*;

type Outcome = Result<String, String>;

fn ensure(ok: bool, witness: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(witness())
    }
}

fn err(e: ModelError) -> String {
    e.to_string()
}

fn randomized(count: usize) -> Vec<ImmersionModel> {
    random::random_models(2024, count)
}

fn bundled_and_random(count: usize) -> Vec<(String, ImmersionModel)> {
    let mut v: Vec<(String, ImmersionModel)> = bundled::all().into_iter().map(|(n, m)| (n.to_string(), m)).collect();
    v.extend(randomized(count).into_iter().enumerate().map(|(i, m)| (format!("random #{i}"), m)));
    v
}

fn series_inversion() -> Outcome {
    let inv = h_series(8).invert().map_err(|e| e.to_string())?;
    ensure(inv == h_inverse(8), || "invert(H) differs from C_k e^(k-1)".into())?;
    let c: Vec<Q> = (1..=6).map(|k| inv.coeff(k).expect("order").coeff(k - 1)).collect();
    let want: Vec<Q> = [1, -1, 2, -6, 24, -120].into_iter().map(int).collect();
    ensure(c == want, || format!("C = {c:?}"))?;
    let e = SpecialSeries::identity(8).expect("order");
    ensure(h_series(8).compose(&inv).expect("order") == e, || "H o invert(H) != E".into())?;
    Ok("C_1..C_6 = 1,-1,2,-6,24,-120; H o invert(H) = E to order 8".into())
}

fn faa_di_bruno() -> Outcome {
    for n in 1..=6 {
        ensure(q_partial(n) == falling_product(n), || format!("n = {n}"))?;
    }
    Ok("n = 1..6".into())
}

fn partition_counts() -> Outcome {
    let want = [1usize, 2, 5, 15, 52, 203];
    for k in 1..=6 {
        let all: Vec<Partition> = enumerate(k).map_err(|e| e.to_string())?.collect();
        ensure(all.len() == want[k - 1], || format!("|Eq({k})| = {}", all.len()))?;
        let mut sum = Q::from_integer(0.into());
        for t in type_vectors(k) {
            let c = count_by_type(k, &t.0).map_err(|e| e.to_string())?;
            let n = all.iter().filter(|a| a.type_vector() == t).count();
            ensure(c == int(n as i64), || format!("k={k} type {:?}: {c} vs {n}", t.0))?;
            sum += c;
        }
        ensure(sum == int(want[k - 1] as i64), || format!("k={k}: sum {sum}"))?;
        for l in 1..=k {
            let rests: Vec<Vec<usize>> = if l == k {
                vec![vec![0; k]]
            } else {
                type_vectors(k - l)
                    .into_iter()
                    .map(|t| {
                        let mut v = t.0;
                        v.resize(k, 0);
                        v
                    })
                    .collect()
            };
            for rest in rests {
                let c = count_by_type_marked(k, l, &rest).map_err(|e| e.to_string())?;
                // filter: class of element 1 has size l, the others have type `rest`
                let n = all
                    .iter()
                    .filter(|a| {
                        let first = a.class_of(1).len();
                        let mut others = vec![0usize; k];
                        for class in a.classes().iter().filter(|cl| !cl.contains(&1)) {
                            others[class.len() - 1] += 1;
                        }
                        first == l && others == rest
                    })
                    .count();
                ensure(c == int(n as i64), || format!("k={k} l={l} {rest:?}: {c} vs {n}"))?;
            }
        }
    }
    Ok("sizes 1,2,5,15,52,203; type and marked counts match filtering".into())
}

fn route_agreement() -> Outcome {
    let models = bundled_and_random(60);
    let randoms = models.len() - bundled::NAMES.len();
    models.par_iter().try_for_each(|(name, m)| -> Result<(), String> {
        ensure(m.validate().passed(), || format!("{name} does not validate"))?;
        for k in 1..=5 {
            let vals: Vec<Q> = Route::ALL
                .iter()
                .map(|&r| multipoint::signature_value(m, k, r).map_err(err))
                .collect::<Result<_, _>>()?;
            ensure(vals.windows(2).all(|w| w[0] == w[1]), || format!("{name} k={k}: {vals:?}"))?;
        }
        for k in 1..=6 {
            let a = multipoint::b_k(m, k).map_err(err)?;
            let b = oracle::bk_enumerated(m, k, oracle::DEFAULT_CAP).map_err(err)?.value;
            ensure(a == b, || format!("{name} B_{k}: {a} vs {b}"))?;
        }
        Ok(())
    })?;
    Ok(format!("{} bundled + {randoms} random models; sigma k <= 5, B_k k <= 6", bundled::NAMES.len()))
}

fn recursion_identity() -> Outcome {
    let models = bundled_and_random(30);
    models.par_iter().enumerate().try_for_each(|(i, (name, m))| -> Result<(), String> {
        let mut g = random::rng(500 + i as u64);
        for k in 1..=4 {
            for _ in 0..3 {
                let x = random::random_tensor(m.hm(), k, 4, &mut g);
                ensure(multipoint::recursion_check_tensor(m, &x).map_err(err)?, || format!("{name} k={k}: {x}"))?;
            }
            let factors: Vec<GradedClass> = (0..k).map(|_| random::random_class(m.hm(), 2, false, &mut g)).collect();
            ensure(multipoint::recursion_check(m, &factors).map_err(err)?, || format!("{name} k={k}"))?;
        }
        Ok(())
    })?;
    Ok(format!("{} models, k <= 4", models.len()))
}

fn hirzebruch_recovery() -> Outcome {
    let two = bundled::by_name("two-lines").expect("bundled");
    let s = multipoint::signature_value(&two, 2, Route::General).map_err(err)?;
    ensure(s == int(1), || format!("two lines: sigma = {s}"))?;
    let s = multipoint::hirzebruch_from_model(&two).map_err(err)?;
    ensure(s == int(1), || format!("two lines, virtual signature = {s}"))?;

    let p3 = GradedRing::truncated_polynomial("h", 2, 3, int(1)).expect("ring");
    let h = GradedClass::named(&p3, "h").expect("h");
    // L(CP³) = (x/tanh x)^4 on h
    let one = GradedClass::one(&p3);
    let l_p3 = (&one + &h.pow(2).scale(&ratio(1, 3))).pow(4);
    let mut got = Vec::new();
    for d in 1..=4i64 {
        let want = ratio(4 * d - d * d * d, 3);
        let virt = multipoint::hirzebruch_virtual_signature(&l_p3, &[h.scale(&int(d))]).map_err(err)?;
        ensure(virt == want, || format!("d={d}: virtual signature {virt}"))?;
        let m = hypersurface(d);
        let own = multipoint::signature_value(&m, 1, Route::Collected).map_err(err)?;
        ensure(own == want, || format!("d={d}: own model gives {own}"))?;
        let from_model = multipoint::hirzebruch_from_model(&m).map_err(err)?;
        ensure(from_model == want, || format!("d={d}: {from_model}"))?;
        got.push(virt);
    }
    ensure(got == vec![int(1), int(0), int(-5), int(-16)], || format!("{got:?}"))?;
    Ok("two lines sigma = 1; hypersurfaces 1, 0, -5, -16".into())
}

fn union_convolution() -> Outcome {
    let mut g = random::rng(77);
    let mut unions = vec![bundled::by_name("two-lines").expect("bundled")];
    for parts in 1..=3 {
        for kind in [EulerKind::Generic, EulerKind::PulledBack, EulerKind::Embedded] {
            unions.push(random::random_union(parts, kind, &mut g));
        }
    }
    for (i, u) in unions.iter().enumerate() {
        for k in 1..=4 {
            let a = multipoint::b_k(u, k).map_err(err)?;
            let b = multipoint::b_k_union(u.parts(), k).map_err(err)?;
            ensure(a == b, || format!("union {i} k={k}: {a} vs {b}"))?;
        }
    }
    let mut embedded: Vec<ImmersionModel> = vec![bundled::by_name("line-in-plane").expect("bundled")];
    embedded.extend((1..=4).map(hypersurface));
    embedded.extend((0..10).map(|_| random::random_model(EulerKind::Embedded, &mut g)));
    for (i, m) in embedded.iter().enumerate() {
        ensure(m.embedding_consistent(), || format!("model {i} is not embedding consistent"))?;
        for k in 2..=3 {
            let b = multipoint::b_k(m, k).map_err(err)?;
            ensure(b.is_zero(), || format!("embedded model {i}: B_{k} = {b}"))?;
        }
    }
    Ok(format!("{} unions k <= 4; B_2 = B_3 = 0 on {} embedded models", unions.len(), embedded.len()))
}

fn index_sequences(max: u32) -> Vec<IndexSequence> {
    let mut out = Vec::new();
    for a in (0..=max).step_by(2) {
        for b in (0..=a).step_by(2) {
            out.push(IndexSequence::new(vec![a, b]).expect("even"));
        }
        out.push(IndexSequence::new(vec![a]).expect("even"));
    }
    out
}

fn special_cases() -> Outcome {
    let mut g = random::rng(88);
    let mut counts = [0usize; 5];

    let mut pulled: Vec<ImmersionModel> = vec![bundled::by_name("two-lines").expect("bundled")];
    pulled.extend((1..=4).map(hypersurface));
    pulled.extend((0..6).map(|_| random::random_model(EulerKind::Embedded, &mut g)));
    pulled.extend((0..6).map(|_| random::random_model(EulerKind::PulledBack, &mut g)));
    for (i, m) in pulled.iter().enumerate() {
        for k in 1..=4 {
            let general = multipoint::signature_value(m, k, Route::General).map_err(err)?;
            match multipoint::pulled_from_n_signature(m, k) {
                Ok(v) => {
                    ensure(v == general, || format!("pulled-from-N model {i} k={k}: {v} vs {general}"))?;
                    counts[0] += 1;
                }
                Err(ModelError::Precondition { .. }) => {}
                Err(e) => return Err(e.to_string()),
            }
            if m.is_union() {
                continue;
            }
            for j in index_sequences(8) {
                for kind in [CharKind::Pontrjagin, CharKind::Chern] {
                    match multipoint::pulled_from_n_characteristic(m, k, kind, &j) {
                        Ok(v) => {
                            let w = multipoint::characteristic_value(m, k, kind, &j, Route::General).map_err(err)?;
                            ensure(v == w, || format!("pulled-from-N model {i} k={k} {j}: {v} vs {w}"))?;
                        }
                        Err(ModelError::Precondition { .. }) => {}
                        Err(e) => return Err(e.to_string()),
                    }
                }
            }
        }
    }

    for i in 0..8 {
        let m = random::random_model(EulerKind::Zero, &mut g);
        for k in 1..=4 {
            let general = multipoint::signature_value(&m, k, Route::General).map_err(err)?;
            let a = multipoint::euler_zero_signature(&m, k).map_err(err)?;
            let b = multipoint::euler_zero_signature_via_n(&m, k).map_err(err)?;
            ensure(a == general && b == general, || format!("e = 0 model {i} k={k}: {a}, {b} vs {general}"))?;
            for j in index_sequences(8) {
                for kind in [CharKind::Pontrjagin, CharKind::Chern] {
                    let v = multipoint::euler_zero_pontrjagin(&m, k, kind, &j).map_err(err)?;
                    let w = multipoint::characteristic_value(&m, k, kind, &j, Route::General).map_err(err)?;
                    ensure(v == w, || format!("e = 0 model {i} k={k} {j}: {v} vs {w}"))?;
                }
            }
            counts[1] += 1;
        }
    }

    let mut null = vec![bundled::by_name("nullhomotopic-cp2").expect("bundled")];
    null.extend((0..8).map(|_| random::random_nullhomotopic(&mut g)));
    for (i, m) in null.iter().enumerate() {
        for k in 1..=4 {
            let xs: Vec<GradedClass> = (0..k).map(|_| random::random_class(m.hm(), 2, false, &mut g)).collect();
            let closed = multipoint::pushpull_zero_jk_ik(m, &xs).map_err(err)?;
            let full = multipoint::jk_ik_elementary(m, &xs).map_err(err)?;
            let single = multipoint::partition_term(m, &Partition::coarsest(k).expect("k"), &xs).map_err(err)?;
            ensure(closed == full && closed == single, || format!("f*f_! = 0 model {i} k={k}: {closed}, {full}, {single}"))?;
            let general = multipoint::signature_value(m, k, Route::General).map_err(err)?;
            let a = multipoint::pushpull_zero_signature(m, k).map_err(err)?;
            let b = multipoint::szucs_signature(m, k).map_err(err)?;
            ensure(a == general && b == general, || format!("f*f_! = 0 model {i} k={k}: {a}, {b} vs {general}"))?;
            for j in index_sequences(8) {
                let w = multipoint::characteristic_value(m, k, CharKind::Pontrjagin, &j, Route::General).map_err(err)?;
                let a = multipoint::pushpull_zero_characteristic(m, k, CharKind::Pontrjagin, &j).map_err(err)?;
                let b = multipoint::szucs_pontrjagin(m, k, &j).map_err(err)?;
                ensure(a == w && b == w, || format!("f*f_! = 0 model {i} k={k} {j}: {a}, {b} vs {w}"))?;
            }
            counts[2] += 1;
        }
    }

    for parts in 1..=3 {
        let u = random::random_divisor_union(parts, &mut g);
        let a = multipoint::hirzebruch_from_model(&u).map_err(err)?;
        let b = multipoint::signature_value(&u, parts, Route::General).map_err(err)?;
        ensure(a == b, || format!("{parts} divisors: {a} vs {b}"))?;
        counts[3] += 1;
    }

    // preconditions are checked, not assumed
    let generic = random::random_model(EulerKind::Generic, &mut g);
    ensure(multipoint::euler_zero_signature(&generic, 2).is_err() || generic.euler().is_zero(), || "e = 0 accepted".into())?;
    ensure(multipoint::szucs_signature(&hypersurface(2), 2).is_err(), || "f*f_! = 0 accepted".into())?;
    ensure(multipoint::pulled_from_n_signature(&null[0], 2).is_err(), || "pulled-from-N accepted".into())?;
    counts[4] = 3;

    ensure(counts[0] > 0, || "no model met the pulled-from-N hypothesis".into())?;
    Ok(format!(
        "pulled-from-N {}, e = 0 {}, f*f_! = 0 {}, divisor unions {}, rejections {}",
        counts[0], counts[1], counts[2], counts[3], counts[4]
    ))
}

fn k_equals_one() -> Outcome {
    let models = bundled_and_random(30);
    for (name, m) in &models {
        let s = multipoint::signature_value(m, 1, Route::General).map_err(err)?;
        let want = m.l_m().map_err(|e| e.to_string())?.integrate();
        ensure(s == want, || format!("{name}: sigma = {s}, <L(M),[M]> = {want}"))?;
        for j in index_sequences(8) {
            let p = multipoint::characteristic_value(m, 1, CharKind::Pontrjagin, &j, Route::General).map_err(err)?;
            let want = m.p_m().select(&j).integrate();
            ensure(p == want, || format!("{name} p_{j}: {p} vs {want}"))?;
            if let Some(c_m) = m.c_m() {
                let c = multipoint::characteristic_value(m, 1, CharKind::Chern, &j, Route::General).map_err(err)?;
                let want = c_m.select(&j).integrate();
                ensure(c == want, || format!("{name} c_{j}: {c} vs {want}"))?;
            }
        }
    }
    let k3 = hypersurface(4);
    let p1 = multipoint::characteristic_value(&k3, 1, CharKind::Pontrjagin, &IndexSequence::new(vec![4]).expect("J"), Route::General)
        .map_err(err)?;
    ensure(p1 == int(-48), || format!("K3 p_1 = {p1}"))?;
    Ok(format!("{} models", models.len()))
}

#[allow(clippy::type_complexity)]
fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 9] = [
        ("series inversion", series_inversion),
        ("Faa di Bruno identity", faa_di_bruno),
        ("partition counts", partition_counts),
        ("route agreement", route_agreement),
        ("recursion identity", recursion_identity),
        ("Hirzebruch recovery", hirzebruch_recovery),
        ("disjoint-union convolution", union_convolution),
        ("special cases", special_cases),
        ("k = 1 degenerations", k_equals_one),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(f).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS {} {name}: {detail} ({secs:.1}s)", i + 1),
            Err(w) => {
                failed += 1;
                println!("FAIL {} {name}: {w} ({secs:.1}s)", i + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
