//! Named property checks behind `hzbounds verify`.
//!
//! Every check is deterministic for a fixed seed and reports the first
//! counterexample it finds. Checks that range over types can be restricted
//! to one (family, rank) with [`VerifyConfig::only_type`].

use std::collections::{BTreeSet, VecDeque};
use std::sync::Arc;
use std::time::{Duration, Instant};

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::capacity::{
    closed_form_table, coweight_oscillation_bound, hz_bounds_for, lower_bound, sample, sandwich_holds,
    unitary_capacity, upper_bound, HzOptions, W0Decomposition, WeightLambda,
};
use crate::error::{Error, Result};
use crate::graphs::{closed_form_distance, Degree, QuantumBruhatGraph, WeightedCayleyGraph};
use crate::rational::{int, Rational, RationalVector};
use crate::rootsystem::{Family, RootSystem};
use crate::weyl::WeylGroup;

/// Groups up to this order are enumerated by the group-level checks.
pub const ENUMERATION_LIMIT: u128 = 60_000;

#[derive(Clone, Debug)]
pub struct VerifyConfig {
    pub seed: u64,
    pub only_type: Option<(Family, usize)>,
    pub group_cap: u128,
    pub cayley_samples: usize,
    pub sharpness_samples: usize,
    pub table_samples: usize,
    pub sandwich_samples: usize,
    pub coweight_samples: usize,
    pub triangle_samples: usize,
    pub postnikov_walks: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            seed: 0,
            only_type: None,
            group_cap: crate::weyl::DEFAULT_GROUP_CAP,
            cayley_samples: 100,
            sharpness_samples: 50,
            table_samples: 20,
            sandwich_samples: 200,
            coweight_samples: 100,
            triangle_samples: 5,
            postnikov_walks: 1000,
        }
    }
}

#[derive(Clone, Debug)]
pub struct CheckResult {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub elapsed: Duration,
}

type CheckFn = fn(&VerifyConfig) -> Result<String>;

pub struct Check {
    pub name: &'static str,
    pub summary: &'static str,
    run: CheckFn,
}

impl Check {
    pub fn run(&self, cfg: &VerifyConfig) -> CheckResult {
        let start = Instant::now();
        let outcome = (self.run)(cfg);
        let elapsed = start.elapsed();
        let (passed, detail) = match outcome {
            Ok(d) => (true, d),
            Err(e) => (false, e.to_string()),
        };
        CheckResult {
            name: self.name,
            passed,
            detail,
            elapsed,
        }
    }
}

pub const CHECKS: &[Check] = &[
    Check { name: "root-closure", summary: "root sets closed under reflections, integral pairings", run: root_closure },
    Check { name: "cartan", summary: "Cartan matrices: diagonal 2, symmetric zero pattern, known determinant", run: cartan },
    Check { name: "counts", summary: "|R+| and enumerated |W| against known values", run: counts },
    Check { name: "length-two-ways", summary: "BFS length = inversion count = reduced word length", run: length_two_ways },
    Check { name: "height-lemma", summary: "l(s_a) <= 2 ht(a^) - 1 for every positive root", run: height_lemma },
    Check { name: "decompositions", summary: "w0 = product of orthogonal reflections, r = l_T(w0), heights sum to |R+|", run: decompositions },
    Check { name: "postnikov", summary: "shortest quantum paths share one degree; d_min divides longer paths", run: postnikov },
    Check { name: "triangle", summary: "sum of pairings = <lambda, d_min(w0, e)> = Bruhat min path area", run: triangle },
    Check { name: "sandwich", summary: "(2/3) upper <= lower <= upper", run: sandwich },
    Check { name: "coweight", summary: "coweight oscillation bounds <= lower bound, equality at tau_(a*)", run: coweight },
    Check { name: "cayley", summary: "weighted Cayley diameter = U(n) capacity", run: cayley },
    Check { name: "sharpness-c", summary: "type C: lower = upper = sum of lambda", run: sharpness_c },
    Check { name: "table", summary: "closed forms = general lower and upper bounds", run: table },
    Check { name: "unitary", summary: "type A: both bounds equal the U(n) capacity", run: unitary },
];

pub fn find_check(name: &str) -> Option<&'static Check> {
    CHECKS.iter().find(|c| c.name == name)
}

/// Runs `names` (all checks when empty) in order.
pub fn run_checks(names: &[String], cfg: &VerifyConfig) -> Result<Vec<CheckResult>> {
    let selected: Vec<&Check> = if names.is_empty() {
        CHECKS.iter().collect()
    } else {
        names
            .iter()
            .map(|n| {
                find_check(n).ok_or_else(|| {
                    let known: Vec<&str> = CHECKS.iter().map(|c| c.name).collect();
                    Error::Unsupported(format!("unknown check '{n}'; known: {}", known.join(", ")))
                })
            })
            .collect::<Result<_>>()?
    };
    Ok(selected.into_iter().map(|c| c.run(cfg)).collect())
}

/// A2..A6, B2..B6, C2..C6, D3..D6, E6, E7, E8, F4, G2.
pub fn catalogue() -> Vec<(Family, usize)> {
    let mut v = Vec::new();
    v.extend((2..=6).map(|r| (Family::A, r)));
    v.extend((2..=6).map(|r| (Family::B, r)));
    v.extend((2..=6).map(|r| (Family::C, r)));
    v.extend((3..=6).map(|r| (Family::D, r)));
    v.extend([(Family::E, 6), (Family::E, 7), (Family::E, 8), (Family::F, 4), (Family::G, 2)]);
    v
}

fn types(cfg: &VerifyConfig, default: Vec<(Family, usize)>) -> Vec<(Family, usize)> {
    match cfg.only_type {
        Some(t) => vec![t],
        None => default,
    }
}

fn rng_for(cfg: &VerifyConfig, name: &str) -> ChaCha8Rng {
    let salt = name.bytes().fold(0xcbf2_9ce4_8422_2325u64, |h, b| (h ^ u64::from(b)).wrapping_mul(0x100_0000_01b3));
    ChaCha8Rng::seed_from_u64(cfg.seed ^ salt)
}

fn fail(msg: String) -> Error {
    Error::TheoremViolation(msg)
}

fn labels(ts: &[(Family, usize)]) -> String {
    ts.iter().map(|(f, r)| format!("{f}{r}")).collect::<Vec<_>>().join(",")
}

fn root_closure(cfg: &VerifyConfig) -> Result<String> {
    let ts = types(cfg, catalogue());
    for &(f, r) in &ts {
        let rs = RootSystem::build(f, r)?;
        let set: BTreeSet<&RationalVector> = rs.roots().iter().collect();
        for a in 0..rs.num_roots() {
            for b in 0..rs.num_roots() {
                let p = rs.pairing(rs.root(b), a)?;
                if !p.is_integer() {
                    return Err(fail(format!("{}: <{}, {}^> = {p} is not an integer", rs.label(), rs.root(b), rs.root(a))));
                }
                let image = rs.reflect(a, rs.root(b))?;
                if !set.contains(&image) {
                    return Err(fail(format!("{}: s_({}) {} = {image} is not a root", rs.label(), rs.root(a), rs.root(b))));
                }
            }
        }
    }
    Ok(format!("{} types", ts.len()))
}

fn known_cartan_det(f: Family, r: usize) -> i64 {
    match f {
        Family::A => r as i64 + 1,
        Family::B | Family::C => 2,
        Family::D => 4,
        Family::E => 9 - r as i64,
        Family::F | Family::G => 1,
    }
}

fn determinant(m: Vec<Vec<Rational>>) -> Rational {
    let n = m.len();
    let mut m = m;
    let mut det = int(1);
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !m[i][c].is_zero()) else {
            return Rational::zero();
        };
        if p != c {
            m.swap(p, c);
            det = -det;
        }
        let pivot = m[c][c].clone();
        det *= &pivot;
        let (top, rest) = m.split_at_mut(c + 1);
        for row in rest.iter_mut() {
            let f = &row[c] / &pivot;
            for (x, y) in row[c..n].iter_mut().zip(&top[c][c..n]) {
                *x -= &f * y;
            }
        }
    }
    det
}

fn cartan(cfg: &VerifyConfig) -> Result<String> {
    let ts = types(cfg, catalogue());
    for &(f, r) in &ts {
        let rs = RootSystem::build(f, r)?;
        let s = rs.simple();
        let mut m = vec![vec![Rational::zero(); r]; r];
        for i in 0..r {
            for j in 0..r {
                let a = rs.cartan(s[i], s[j]);
                if (i == j && a != 2) || (i != j && !(-3..=0).contains(&a)) {
                    return Err(fail(format!("{}: Cartan entry ({},{}) = {a}", rs.label(), i + 1, j + 1)));
                }
                if (a == 0) != (rs.cartan(s[j], s[i]) == 0) {
                    return Err(fail(format!("{}: zero pattern not symmetric at ({},{})", rs.label(), i + 1, j + 1)));
                }
                m[i][j] = int(i64::from(a));
            }
        }
        let det = determinant(m);
        if det != int(known_cartan_det(f, r)) {
            return Err(fail(format!("{}: det of Cartan matrix is {det}", rs.label())));
        }
    }
    Ok(format!("{} types", ts.len()))
}

fn enumerable(ts: &[(Family, usize)]) -> Vec<(Family, usize)> {
    ts.iter().copied().filter(|&(f, r)| f.weyl_order(r) <= ENUMERATION_LIMIT).collect()
}

fn counts(cfg: &VerifyConfig) -> Result<String> {
    let ts = types(cfg, catalogue());
    let mut enumerated = 0;
    for &(f, r) in &ts {
        let rs = Arc::new(RootSystem::build(f, r)?);
        if rs.positive_roots().len() != f.positive_root_count(r) || rs.num_roots() != 2 * f.positive_root_count(r) {
            return Err(fail(format!("{}: {} roots", rs.label(), rs.num_roots())));
        }
        if f.weyl_order(r) <= ENUMERATION_LIMIT {
            let g = WeylGroup::generate(Arc::clone(&rs), cfg.group_cap)?;
            if g.order() as u128 != f.weyl_order(r) {
                return Err(fail(format!("{}: enumerated {} elements", rs.label(), g.order())));
            }
            enumerated += 1;
        }
    }
    Ok(format!("{} types, {enumerated} groups enumerated", ts.len()))
}

fn length_two_ways(cfg: &VerifyConfig) -> Result<String> {
    let ts = enumerable(&types(cfg, catalogue()));
    let mut elements = 0;
    for &(f, r) in &ts {
        let rs = Arc::new(RootSystem::build(f, r)?);
        let g = WeylGroup::generate(Arc::clone(&rs), cfg.group_cap)?;
        for w in 0..g.order() {
            let l = g.length(w);
            if l != g.inversion_count(w) || l != g.reduced_word(w).len() {
                return Err(fail(format!("{}: element {} has inconsistent lengths", rs.label(), g.word_label(w))));
            }
        }
        if g.length(g.longest_index()) != rs.positive_roots().len() {
            return Err(fail(format!("{}: l(w0) != |R+|", rs.label())));
        }
        elements += g.order();
    }
    Ok(format!("{} groups, {elements} elements", ts.len()))
}

fn height_lemma(cfg: &VerifyConfig) -> Result<String> {
    let mut ts = types(cfg, catalogue());
    if cfg.only_type.is_none() {
        ts.insert(0, (Family::A, 1));
    }
    let mut roots = 0;
    for &(f, r) in &ts {
        let rs = RootSystem::build(f, r)?;
        for &a in rs.positive_roots() {
            let l = rs.reflection_length(a)? as i64;
            let bound = 2 * i64::from(rs.coroot_height(a)) - 1;
            if l > bound {
                return Err(fail(format!("{}: l(s_a) = {l} > {bound} for a = {}", rs.label(), rs.root(a))));
            }
            roots += 1;
        }
    }
    Ok(format!("{} types, {roots} positive roots", ts.len()))
}

fn decompositions(cfg: &VerifyConfig) -> Result<String> {
    let mut ts = types(cfg, catalogue());
    if cfg.only_type.is_none() {
        ts.insert(0, (Family::A, 1));
    }
    for &(f, r) in &ts {
        let rs = RootSystem::build(f, r)?;
        W0Decomposition::for_root_system(&rs)?;
    }
    Ok(format!("{} types: {}", ts.len(), labels(&ts)))
}

/// For each target vertex, the set of degrees over all shortest paths from `u`,
/// built layer by layer along the BFS distance DAG.
pub fn all_shortest_degrees(q: &QuantumBruhatGraph, u: usize) -> Vec<BTreeSet<Degree>> {
    let n = q.num_vertices();
    let rank = q.group().root_system().rank();
    let mut dist = vec![usize::MAX; n];
    let mut order = Vec::with_capacity(n);
    dist[u] = 0;
    let mut queue = VecDeque::from([u]);
    while let Some(x) = queue.pop_front() {
        order.push(x);
        for e in q.edges_from(x) {
            let y = e.to as usize;
            if dist[y] == usize::MAX {
                dist[y] = dist[x] + 1;
                queue.push_back(y);
            }
        }
    }
    let mut sets: Vec<BTreeSet<Degree>> = vec![BTreeSet::new(); n];
    sets[u].insert(Degree::zero(rank));
    for &x in &order {
        let here: Vec<Degree> = sets[x].iter().cloned().collect();
        for e in q.edges_from(x) {
            let y = e.to as usize;
            if dist[y] == dist[x] + 1 {
                let d = q.edge_degree(e);
                for h in &here {
                    sets[y].insert(h + &d);
                }
            }
        }
    }
    sets
}

fn postnikov(cfg: &VerifyConfig) -> Result<String> {
    let ts = types(cfg, vec![(Family::A, 3), (Family::B, 3), (Family::G, 2)]);
    let mut rng = rng_for(cfg, "postnikov");
    let mut pairs = 0;
    let mut walks = 0;
    for &(f, r) in &ts {
        let rs = Arc::new(RootSystem::build(f, r)?);
        let g = WeylGroup::generate(Arc::clone(&rs), cfg.group_cap.min(ENUMERATION_LIMIT))?;
        let q = QuantumBruhatGraph::new(&g);
        let n = g.order();
        let mut dmin = Vec::with_capacity(n);
        for u in 0..n {
            let sets = all_shortest_degrees(&q, u);
            let bfs = q.shortest_path_degrees(u)?;
            let mut row = Vec::with_capacity(n);
            for (v, set) in sets.into_iter().enumerate() {
                if set.len() != 1 {
                    return Err(fail(format!(
                        "{}: {} shortest-path degrees from {} to {}",
                        rs.label(),
                        set.len(),
                        g.word_label(u),
                        g.word_label(v)
                    )));
                }
                let d = set.into_iter().next().expect("one degree");
                let (bd, len) = bfs[v].clone().ok_or_else(|| fail(format!("{}: graph not strongly connected", rs.label())))?;
                if bd != d {
                    return Err(fail(format!("{}: BFS degree {bd} differs from {d}", rs.label())));
                }
                row.push((d, len));
                pairs += 1;
            }
            dmin.push(row);
        }
        // random walks strictly longer than the shortest distance
        let mut done = 0;
        let mut attempts = 0;
        while done < cfg.postnikov_walks {
            attempts += 1;
            if attempts > 100 * cfg.postnikov_walks {
                return Err(Error::Inconsistent(format!("{}: could not sample long paths", rs.label())));
            }
            let u = rng.gen_range(0..n);
            let steps = rng.gen_range(1..=2 * rs.positive_roots().len() + 2);
            let mut x = u;
            let mut deg = Degree::zero(rs.rank());
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
                return Err(fail(format!(
                    "{}: path {} -> {} of degree {deg} is not above d_min = {d}",
                    rs.label(),
                    g.word_label(u),
                    g.word_label(x)
                )));
            }
            done += 1;
        }
        walks += done;
    }
    Ok(format!("{}: {pairs} ordered pairs, {walks} longer paths", labels(&ts)))
}

fn triangle(cfg: &VerifyConfig) -> Result<String> {
    let default: Vec<(Family, usize)> = [
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
    ]
    .into();
    let ts = types(cfg, default);
    let mut rng = rng_for(cfg, "triangle");
    let opts = HzOptions {
        group_cap: cfg.group_cap,
        confirm_cap: ENUMERATION_LIMIT,
    };
    let mut n = 0;
    for &(f, r) in &ts {
        let rs = Arc::new(RootSystem::build(f, r)?);
        for _ in 0..cfg.triangle_samples {
            let lambda = sample::dominant(&rs, &mut rng, 1, 9)?;
            let b = hz_bounds_for(Arc::clone(&rs), lambda.clone(), &opts)?;
            if b.checks.dmin_consistent != Some(true) {
                return Err(fail(format!(
                    "{}: lambda = {lambda}: sum {} vs d_min pairing {:?} vs path area {:?}",
                    rs.label(),
                    b.upper,
                    b.d_min_area.map(|x| x.to_string()),
                    b.min_path_area.map(|x| x.to_string())
                )));
            }
            n += 1;
        }
    }
    Ok(format!("{}: {n} regular weights", labels(&ts)))
}

fn sample_mixed(rs: &RootSystem, rng: &mut ChaCha8Rng) -> Result<RationalVector> {
    match rng.gen_range(0..3) {
        0 => sample::dominant(rs, rng, 0, 9),
        1 => sample::dominant(rs, rng, 1, 9),
        _ => sample::dominant_integral(rs, rng, 12),
    }
}

fn sandwich(cfg: &VerifyConfig) -> Result<String> {
    let ts = types(cfg, catalogue());
    let mut rng = rng_for(cfg, "sandwich");
    let mut n = 0;
    for &(f, r) in &ts {
        let rs = RootSystem::build(f, r)?;
        let dec = W0Decomposition::for_root_system(&rs)?;
        for _ in 0..cfg.sandwich_samples {
            let l = WeightLambda::new(&rs, sample_mixed(&rs, &mut rng)?)?;
            let up = upper_bound(&rs, &l, &dec)?;
            let lo = lower_bound(&rs, &l, &dec)?.value;
            if !sandwich_holds(&lo, &up) {
                return Err(fail(format!("{}: lambda = {}: lower {lo}, upper {up}", rs.label(), l.coords())));
            }
            n += 1;
        }
    }
    Ok(format!("{} types, {n} weights", ts.len()))
}

fn coweight(cfg: &VerifyConfig) -> Result<String> {
    let ts = types(cfg, catalogue());
    let mut rng = rng_for(cfg, "coweight");
    let mut n = 0;
    for &(f, r) in &ts {
        let rs = RootSystem::build(f, r)?;
        let dec = W0Decomposition::for_root_system(&rs)?;
        let l = WeightLambda::new(&rs, sample::dominant(&rs, &mut rng, 1, 9)?)?;
        let lb = lower_bound(&rs, &l, &dec)?;
        for _ in 0..cfg.coweight_samples {
            let xi = sample::positive_coweight(&rs, &mut rng, 20)?;
            let v = coweight_oscillation_bound(&rs, &l, &xi)?;
            if v > lb.value {
                return Err(fail(format!("{}: xi = {xi} gives {v} > lower bound {}", rs.label(), lb.value)));
            }
            n += 1;
        }
        let tau = rs.dual_basis_vector(lb.witness)?;
        let at_vertex = coweight_oscillation_bound(&rs, &l, &tau)?;
        if at_vertex != lb.value {
            return Err(fail(format!(
                "{}: tau_{} gives {at_vertex}, lower bound is {}",
                rs.label(),
                lb.witness + 1,
                lb.value
            )));
        }
        for j in 0..rs.rank() {
            let v = coweight_oscillation_bound(&rs, &l, &rs.dual_basis_vector(j)?)?;
            if v != lb.candidates[j] {
                return Err(fail(format!("{}: tau_{} gives {v}, candidate is {}", rs.label(), j + 1, lb.candidates[j])));
            }
        }
    }
    Ok(format!("{} types, {n} coweights", ts.len()))
}

fn cayley(cfg: &VerifyConfig) -> Result<String> {
    let ns: Vec<usize> = match cfg.only_type {
        Some((Family::A, r)) => vec![r + 1],
        Some(_) => return Ok("skipped (type A only)".into()),
        None => (2..=6).collect(),
    };
    let mut rng = rng_for(cfg, "cayley");
    let mut n_checked = 0;
    for &n in &ns {
        for s in 0..cfg.cayley_samples {
            let mut v: Vec<i64> = (0..n).map(|_| rng.gen_range(-10..=10)).collect();
            v.sort_unstable_by(|a, b| b.cmp(a));
            let lambda: Vec<Rational> = v.iter().map(|&x| int(x)).collect();
            let graph = WeightedCayleyGraph::new(&lambda, n.max(crate::graphs::DEFAULT_CAYLEY_CAP))?;
            let dist = graph.distances_from_identity();
            let expected = unitary_capacity(&lambda)?;
            let diameter = dist.iter().max().cloned().unwrap_or_default();
            if diameter != expected {
                return Err(fail(format!("n = {n}, lambda = {v:?}: diameter {diameter}, formula {expected}")));
            }
            for (w, d) in dist.iter().enumerate() {
                let c = closed_form_distance(&lambda, graph.perm(w));
                if *d != c {
                    return Err(fail(format!("n = {n}, lambda = {v:?}: d(e, {:?}) = {d}, closed form {c}", graph.perm(w))));
                }
            }
            // eccentricities of other sources, for small n
            if n <= 4 && s < 5 {
                for src in 1..graph.num_vertices() {
                    let ecc = graph.distances_from(src).into_iter().max().unwrap_or_default();
                    if ecc != expected {
                        return Err(fail(format!("n = {n}: eccentricity of vertex {src} is {ecc}, expected {expected}")));
                    }
                }
            }
            n_checked += 1;
        }
    }
    Ok(format!("n in {ns:?}: {n_checked} weights"))
}

fn sharpness_c(cfg: &VerifyConfig) -> Result<String> {
    let ts = match cfg.only_type {
        Some((Family::C, r)) => vec![(Family::C, r)],
        Some(_) => return Ok("skipped (type C only)".into()),
        None => (2..=6).map(|r| (Family::C, r)).collect(),
    };
    let mut rng = rng_for(cfg, "sharpness-c");
    let mut n = 0;
    for &(f, r) in &ts {
        let rs = RootSystem::build(f, r)?;
        let dec = W0Decomposition::for_root_system(&rs)?;
        for _ in 0..cfg.sharpness_samples {
            let l = WeightLambda::new(&rs, sample_mixed(&rs, &mut rng)?)?;
            let sum = l.coords().coords().iter().fold(Rational::zero(), |a, x| a + x);
            let up = upper_bound(&rs, &l, &dec)?;
            let lo = lower_bound(&rs, &l, &dec)?.value;
            if up != sum || lo != sum {
                return Err(fail(format!("{}: lambda = {}: lower {lo}, upper {up}, sum {sum}", rs.label(), l.coords())));
            }
            n += 1;
        }
    }
    Ok(format!("{}: {n} weights", labels(&ts)))
}

fn table(cfg: &VerifyConfig) -> Result<String> {
    let ts = types(cfg, catalogue());
    let mut rng = rng_for(cfg, "table");
    let mut n = 0;
    for &(f, r) in &ts {
        let rs = RootSystem::build(f, r)?;
        let dec = W0Decomposition::for_root_system(&rs)?;
        for _ in 0..cfg.table_samples {
            let l = WeightLambda::new(&rs, sample_mixed(&rs, &mut rng)?)?;
            let cf = closed_form_table(&rs, &l)?;
            let up = upper_bound(&rs, &l, &dec)?;
            let lo = lower_bound(&rs, &l, &dec)?.value;
            if cf.lower != lo || cf.upper != up {
                return Err(fail(format!(
                    "{}: lambda = {}: closed form ({}, {}) vs ({lo}, {up})",
                    rs.label(),
                    l.coords(),
                    cf.lower,
                    cf.upper
                )));
            }
            n += 1;
        }
    }
    Ok(format!("{} rows, {n} weights", ts.len()))
}

fn unitary(cfg: &VerifyConfig) -> Result<String> {
    let ts = match cfg.only_type {
        Some((Family::A, r)) => vec![(Family::A, r)],
        Some(_) => return Ok("skipped (type A only)".into()),
        None => (1..=6).map(|r| (Family::A, r)).collect(),
    };
    let mut rng = rng_for(cfg, "unitary");
    let mut n = 0;
    for &(f, r) in &ts {
        let rs = RootSystem::build(f, r)?;
        let dec = W0Decomposition::for_root_system(&rs)?;
        for _ in 0..cfg.table_samples {
            let l = WeightLambda::new(&rs, sample_mixed(&rs, &mut rng)?)?;
            let exact = unitary_capacity(l.coords().coords())?;
            let up = upper_bound(&rs, &l, &dec)?;
            let lo = lower_bound(&rs, &l, &dec)?.value;
            if up != exact || lo != exact {
                return Err(fail(format!("{}: lambda = {}: lower {lo}, upper {up}, exact {exact}", rs.label(), l.coords())));
            }
            n += 1;
        }
    }
    Ok(format!("{}: {n} weights", labels(&ts)))
}
