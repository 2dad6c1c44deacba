//! Acceptance suite: nine criteria, one PASS/FAIL line each.
//!
//! Run with `cargo test -p hzbounds --test acceptance`. The process exits
//! nonzero when any criterion fails.

use std::sync::Arc;
use std::time::Instant;

use hzbounds::capacity::{
    closed_form_table, coweight_oscillation_bound, hz_bounds_for, lower_bound, sample, upper_bound, HzOptions,
    W0Decomposition, WeightLambda,
};
use hzbounds::graphs::{Degree, QuantumBruhatGraph, WeightedCayleyGraph};
use hzbounds::rational::{frac, int};
use hzbounds::verify::{all_shortest_degrees, catalogue};
use hzbounds::{Family, Rational, RationalVector, RootSystem, WeylGroup};
use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

fn rng(tag: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(0x5eed_0000 + tag)
}

fn build(f: Family, r: usize) -> (RootSystem, W0Decomposition) {
    let rs = RootSystem::build(f, r).expect("valid type");
    let dec = W0Decomposition::for_root_system(&rs).expect("decomposition validates");
    (rs, dec)
}

fn half_sum_of_gaps(l: &[Rational]) -> Rational {
    let n = l.len();
    (0..n).fold(Rational::zero(), |acc, k| acc + (&l[k] - &l[n - 1 - k]).abs()) / int(2)
}

fn sorted_ints(rng: &mut ChaCha8Rng, n: usize, lo: i64, hi: i64) -> Vec<i64> {
    let mut v: Vec<i64> = (0..n).map(|_| rng.gen_range(lo..=hi)).collect();
    v.sort_unstable_by(|a, b| b.cmp(a));
    v
}

fn c1_unitary_exactness() -> Outcome {
    let mut rng = rng(1);
    let mut count = 0;
    for n in 2..=6 {
        for _ in 0..100 {
            let v = sorted_ints(&mut rng, n, -25, 25);
            let lambda: Vec<Rational> = v.iter().map(|&x| int(x)).collect();
            let g = WeightedCayleyGraph::new(&lambda, 7).map_err(|e| e.to_string())?;
            let diameter = g.diameter();
            let formula = half_sum_of_gaps(&lambda);
            if diameter != formula {
                return Err(format!("n = {n}, lambda = {v:?}: diameter {diameter} vs {formula}"));
            }
            count += 1;
        }
    }
    Ok(format!("{count} weights, n = 2..6"))
}

fn c2_type_c_sharpness() -> Outcome {
    let mut rng = rng(2);
    let mut count = 0;
    for r in 2..=6 {
        let (rs, dec) = build(Family::C, r);
        for _ in 0..50 {
            let v = sorted_ints(&mut rng, r, 0, 30);
            let l = WeightLambda::new(&rs, RationalVector::from_ints(&v)).map_err(|e| e.to_string())?;
            let sum = int(v.iter().sum());
            let up = upper_bound(&rs, &l, &dec).map_err(|e| e.to_string())?;
            let lo = lower_bound(&rs, &l, &dec).map_err(|e| e.to_string())?.value;
            if lo != sum || up != sum {
                return Err(format!("C{r}, lambda = {v:?}: lower {lo}, upper {up}, sum {sum}"));
            }
            count += 1;
        }
    }
    Ok(format!("{count} weights, C2..C6"))
}

// directions orthogonal to every E6/E7 root, used to leave the root span
fn off_span_directions(rs: &RootSystem) -> Vec<RationalVector> {
    let dirs = match (rs.family(), rs.rank()) {
        (Family::E, 7) => vec![RationalVector::from_ints(&[0, 0, 0, 0, 0, 0, 1, 1])],
        (Family::E, 6) => vec![
            RationalVector::from_ints(&[0, 0, 0, 0, 0, 0, 1, 1]),
            RationalVector::from_ints(&[0, 0, 0, 0, 0, 1, 0, 1]),
        ],
        _ => vec![],
    };
    assert!(dirs.iter().all(|d| rs.roots().iter().all(|r| r.dot(d).is_zero())));
    dirs
}

fn c3_table_reproduction() -> Outcome {
    let mut rng = rng(3);
    let mut rows = 0;
    let mut count = 0;
    for (f, r) in catalogue() {
        let (rs, dec) = build(f, r);
        let dirs = off_span_directions(&rs);
        for i in 0..25 {
            let mut v = if i % 2 == 0 {
                sample::dominant(&rs, &mut rng, 0, 10)
            } else {
                sample::dominant_integral(&rs, &mut rng, 15)
            }
            .map_err(|e| e.to_string())?;
            for d in &dirs {
                v = &v + &d.scale(&frac(rng.gen_range(-9..=9), 2));
            }
            let l = WeightLambda::new(&rs, v).map_err(|e| e.to_string())?;
            let cf = closed_form_table(&rs, &l).map_err(|e| e.to_string())?;
            let up = upper_bound(&rs, &l, &dec).map_err(|e| e.to_string())?;
            let lo = lower_bound(&rs, &l, &dec).map_err(|e| e.to_string())?.value;
            if cf.lower != lo || cf.upper != up {
                return Err(format!(
                    "{}, lambda = {}: table ({}, {}) vs first principles ({lo}, {up})",
                    rs.label(),
                    l.coords(),
                    cf.lower,
                    cf.upper
                ));
            }
            count += 1;
        }
        rows += 1;
    }
    Ok(format!("{rows} rows, {count} weights"))
}

fn c4_height_lemma() -> Outcome {
    let mut types = vec![(Family::A, 1)];
    types.extend(catalogue());
    let mut roots = 0;
    let mut extremal = 0;
    for (f, r) in types {
        let rs = RootSystem::build(f, r).map_err(|e| e.to_string())?;
        for &a in rs.positive_roots() {
            let perm = rs.reflection_perm(a).map_err(|e| e.to_string())?;
            let inversions = rs.positive_roots().iter().filter(|&&b| !rs.is_positive(perm[b])).count() as i32;
            let bound = 2 * rs.coroot_height(a) - 1;
            if inversions > bound {
                return Err(format!("{}: l(s_a) = {inversions} > {bound} for {}", rs.label(), rs.root(a)));
            }
            roots += 1;
            extremal += usize::from(inversions == bound);
        }
    }
    Ok(format!("{roots} positive roots, {extremal} with equality"))
}

fn c5_decompositions() -> Outcome {
    let mut types = vec![(Family::A, 1)];
    types.extend(catalogue());
    let mut e8_time = None;
    for (f, r) in &types {
        let start = Instant::now();
        let rs = RootSystem::build(*f, *r).map_err(|e| e.to_string())?;
        let dec = W0Decomposition::for_root_system(&rs).map_err(|e| e.to_string())?;
        let report = dec.validate(&rs);
        if !report.passed() {
            return Err(format!("{}: {:?}", rs.label(), report.first_failure()));
        }
        if report.reflections != report.absolute_length_of_longest || report.height_sum != rs.positive_roots().len() as i64 {
            return Err(format!("{}: {report:?}", rs.label()));
        }
        if rs.label() == "E8" {
            e8_time = Some(start.elapsed());
        }
    }
    let e8 = e8_time.ok_or("E8 missing")?;
    if e8.as_secs_f64() >= 1.0 {
        return Err(format!("E8 took {e8:?}"));
    }
    Ok(format!("{} types, E8 in {:.0} ms", types.len(), e8.as_secs_f64() * 1e3))
}

fn c6_postnikov() -> Outcome {
    let mut rng = rng(6);
    let mut summary = Vec::new();
    for (f, r, order) in [(Family::A, 3, 24), (Family::B, 3, 48), (Family::G, 2, 12)] {
        let rs = Arc::new(RootSystem::build(f, r).map_err(|e| e.to_string())?);
        let g = WeylGroup::generate(Arc::clone(&rs), 100_000).map_err(|e| e.to_string())?;
        if g.order() != order {
            return Err(format!("{}: |W| = {}", rs.label(), g.order()));
        }
        let q = QuantumBruhatGraph::new(&g);
        let mut dmin: Vec<Vec<(Degree, usize)>> = Vec::new();
        for u in 0..order {
            let sets = all_shortest_degrees(&q, u);
            let bfs = q.shortest_path_degrees(u).map_err(|e| e.to_string())?;
            let mut row = Vec::new();
            for (v, set) in sets.iter().enumerate() {
                if set.len() != 1 {
                    return Err(format!("{}: {} degrees on shortest paths {u} -> {v}", rs.label(), set.len()));
                }
                let (d, len) = bfs[v].clone().ok_or("unreachable vertex")?;
                if !set.contains(&d) {
                    return Err(format!("{}: BFS degree disagrees at {u} -> {v}", rs.label()));
                }
                row.push((d, len));
            }
            dmin.push(row);
        }
        let mut sampled = 0;
        while sampled < 1000 {
            let u = rng.gen_range(0..order);
            let steps = rng.gen_range(2..=24);
            let (mut x, mut deg) = (u, Degree::zero(r));
            for _ in 0..steps {
                let es = q.edges_from(x);
                let e = es[rng.gen_range(0..es.len())];
                deg = &deg + &q.edge_degree(&e);
                x = e.to as usize;
            }
            let (d, len) = &dmin[u][x];
            if steps <= *len {
                continue;
            }
            if !d.le(&deg) {
                return Err(format!("{}: path {u} -> {x} of degree {deg} below d_min {d}", rs.label()));
            }
            sampled += 1;
        }
        summary.push(format!("{}: {} pairs, {sampled} longer paths", rs.label(), order * order));
    }
    Ok(summary.join("; "))
}

fn c7_triangle() -> Outcome {
    let mut rng = rng(7);
    let types = [
        (Family::A, 1),
        (Family::A, 2),
        (Family::A, 3),
        (Family::A, 4),
        (Family::B, 2),
        (Family::B, 3),
        (Family::B, 4),
        (Family::C, 2),
        (Family::C, 3),
        (Family::C, 4),
        (Family::D, 3),
        (Family::D, 4),
        (Family::F, 4),
        (Family::G, 2),
    ];
    let opts = HzOptions::default();
    let mut count = 0;
    for (f, r) in types {
        let rs = Arc::new(RootSystem::build(f, r).map_err(|e| e.to_string())?);
        for _ in 0..10 {
            let v = sample::dominant(&rs, &mut rng, 1, 12).map_err(|e| e.to_string())?;
            let b = hz_bounds_for(Arc::clone(&rs), v.clone(), &opts).map_err(|e| e.to_string())?;
            let (Some(dm), Some(area)) = (&b.d_min_area, &b.min_path_area) else {
                return Err(format!("{}: confirmations were not computed", rs.label()));
            };
            if *dm != b.upper || *area != b.upper {
                return Err(format!("{}, lambda = {v}: {} / {dm} / {area}", rs.label(), b.upper));
            }
            count += 1;
        }
    }
    Ok(format!("{count} regular weights in {} types", types.len()))
}

fn c8_sandwich() -> Outcome {
    let mut rng = rng(8);
    let mut count = 0;
    let mut tight = 0;
    for (f, r) in catalogue() {
        let (rs, dec) = build(f, r);
        for i in 0..200 {
            let lo_c = if i % 3 == 0 { 1 } else { 0 };
            let v = sample::dominant(&rs, &mut rng, lo_c, 20).map_err(|e| e.to_string())?;
            let l = WeightLambda::new(&rs, v).map_err(|e| e.to_string())?;
            let up = upper_bound(&rs, &l, &dec).map_err(|e| e.to_string())?;
            let lo = lower_bound(&rs, &l, &dec).map_err(|e| e.to_string())?.value;
            if lo.is_negative() || lo > up || frac(2, 3) * &up > lo {
                return Err(format!("{}, lambda = {}: lower {lo}, upper {up}", rs.label(), l.coords()));
            }
            tight += usize::from(frac(2, 3) * &up == lo && !up.is_zero());
            count += 1;
        }
    }
    Ok(format!("{count} weights, {tight} attaining the 2/3 ratio"))
}

fn c9_coweight_optimality() -> Outcome {
    let mut rng = rng(9);
    let mut count = 0;
    for (f, r) in catalogue() {
        let (rs, dec) = build(f, r);
        let l = WeightLambda::new(&rs, sample::dominant(&rs, &mut rng, 1, 10).map_err(|e| e.to_string())?)
            .map_err(|e| e.to_string())?;
        let lb = lower_bound(&rs, &l, &dec).map_err(|e| e.to_string())?;
        for _ in 0..100 {
            let xi = sample::positive_coweight(&rs, &mut rng, 50).map_err(|e| e.to_string())?;
            let v = coweight_oscillation_bound(&rs, &l, &xi).map_err(|e| e.to_string())?;
            if v > lb.value {
                return Err(format!("{}: xi = {xi} gives {v} > {}", rs.label(), lb.value));
            }
            count += 1;
        }
        let tau = rs.dual_basis_vector(lb.witness).map_err(|e| e.to_string())?;
        let at = coweight_oscillation_bound(&rs, &l, &tau).map_err(|e| e.to_string())?;
        if at != lb.value {
            return Err(format!("{}: vertex value {at} vs lower bound {}", rs.label(), lb.value));
        }
    }
    Ok(format!("{count} coweights in {} types", catalogue().len()))
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() {
    let criteria: [Criterion; 9] = [
        ("U(n) exactness: Cayley diameter = half sum of gaps", c1_unitary_exactness),
        ("type C sharpness: lower = upper = sum of lambda", c2_type_c_sharpness),
        ("closed-form table = first-principles bounds", c3_table_reproduction),
        ("height lemma l(s_a) <= 2 ht(a^) - 1", c4_height_lemma),
        ("decompositions of w0 validate, E8 under 1 s", c5_decompositions),
        ("shortest quantum paths: unique degree, d_min below longer paths", c6_postnikov),
        ("upper-bound triangle, ranks <= 4", c7_triangle),
        ("sandwich (2/3) upper <= lower <= upper", c8_sandwich),
        ("coweight bounds <= lower, equality at the dual vertex", c9_coweight_optimality),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(f).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS {} {name} [{secs:.2}s] {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL {} {name} [{secs:.2}s] {detail}", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
