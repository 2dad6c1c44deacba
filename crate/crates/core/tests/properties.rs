use std::sync::OnceLock;

use hzbounds::capacity::{
    coweight_oscillation_bound, lower_bound, oscillation_vector, sandwich_holds, unitary_capacity, upper_bound,
    W0Decomposition, WeightLambda,
};
use hzbounds::graphs::{closed_form_distance, WeightedCayleyGraph};
use hzbounds::rational::{frac, from_wire, int, parse_rational, to_wire};
use hzbounds::verify::catalogue;
use hzbounds::{Rational, RationalVector, RootSystem};
use num_traits::Zero;
use proptest::prelude::*;

struct Entry {
    rs: RootSystem,
    dec: W0Decomposition,
    omegas: Vec<RationalVector>,
    taus: Vec<RationalVector>,
}

fn entries() -> &'static [Entry] {
    static CELL: OnceLock<Vec<Entry>> = OnceLock::new();
    CELL.get_or_init(|| {
        catalogue()
            .into_iter()
            .map(|(f, r)| {
                let rs = RootSystem::build(f, r).unwrap();
                let dec = W0Decomposition::for_root_system(&rs).unwrap();
                let omegas = (0..r).map(|j| rs.fundamental_weight(j).unwrap()).collect();
                let taus = (0..r).map(|j| rs.dual_basis_vector(j).unwrap()).collect();
                Entry { rs, dec, omegas, taus }
            })
            .collect()
    })
}

fn combine(basis: &[RationalVector], coeffs: &[i64], dim: usize) -> RationalVector {
    basis
        .iter()
        .zip(coeffs)
        .fold(RationalVector::zeros(dim), |acc, (b, &c)| &acc + &b.scale(&int(c)))
}

fn weight(e: &Entry, coeffs: &[i64]) -> WeightLambda {
    let c = &coeffs[..e.rs.rank()];
    WeightLambda::new(&e.rs, combine(&e.omegas, c, e.rs.ambient_dim())).unwrap()
}

fn type_index() -> impl Strategy<Value = usize> {
    0..catalogue().len()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn sandwich(t in type_index(), coeffs in prop::collection::vec(0i64..12, 8)) {
        let e = &entries()[t];
        let l = weight(e, &coeffs);
        let up = upper_bound(&e.rs, &l, &e.dec).unwrap();
        let lo = lower_bound(&e.rs, &l, &e.dec).unwrap().value;
        prop_assert!(sandwich_holds(&lo, &up), "{}: lower {} upper {}", e.rs.label(), lo, up);
    }

    #[test]
    fn oscillation_identity(
        t in type_index(),
        coeffs in prop::collection::vec(0i64..9, 8),
        xi in prop::collection::vec(-9i64..10, 8),
    ) {
        let e = &entries()[t];
        let l = weight(e, &coeffs);
        let xi = RationalVector::from_ints(&xi[..e.rs.ambient_dim()]);
        let moved = e.rs.apply_longest(l.coords()).unwrap();
        let lhs = (l.coords() - &moved).dot(&xi);
        let rhs = e.dec.roots.iter().fold(Rational::zero(), |acc, &a| {
            acc + e.rs.pairing(l.coords(), a).unwrap() * e.rs.root(a).dot(&xi)
        });
        prop_assert_eq!(&lhs, &rhs);
        prop_assert_eq!(oscillation_vector(&e.rs, &l, &e.dec).unwrap().dot(&xi), rhs);
    }

    #[test]
    fn coweight_never_exceeds_lower_bound(
        t in type_index(),
        coeffs in prop::collection::vec(0i64..9, 8),
        xi in prop::collection::vec(1i64..30, 8),
    ) {
        let e = &entries()[t];
        let l = weight(e, &coeffs);
        let xi = combine(&e.taus, &xi[..e.rs.rank()], e.rs.ambient_dim());
        let v = coweight_oscillation_bound(&e.rs, &l, &xi).unwrap();
        let lb = lower_bound(&e.rs, &l, &e.dec).unwrap();
        prop_assert!(v <= lb.value);
        let best = e.taus.iter().map(|t| coweight_oscillation_bound(&e.rs, &l, t).unwrap()).max().unwrap();
        prop_assert_eq!(best, lb.value);
    }

    #[test]
    fn cayley_distance_formula(mut v in prop::collection::vec(-20i64..20, 2..=5)) {
        v.sort_unstable_by(|a, b| b.cmp(a));
        let lambda: Vec<Rational> = v.iter().map(|&x| int(x)).collect();
        let g = WeightedCayleyGraph::new(&lambda, 7).unwrap();
        let d = g.distances_from_identity();
        let diameter = d.iter().max().unwrap().clone();
        prop_assert_eq!(&diameter, &unitary_capacity(&lambda).unwrap());
        for (w, dw) in d.iter().enumerate() {
            let c = closed_form_distance(&lambda, g.perm(w));
            prop_assert!(*dw <= c);
            if v.windows(2).all(|p| p[0] > p[1]) {
                prop_assert_eq!(dw, &c);
            }
        }
    }

    #[test]
    fn type_a_bounds_are_exact(mut v in prop::collection::vec(-15i64..15, 2..=7)) {
        v.sort_unstable_by(|a, b| b.cmp(a));
        let rs = RootSystem::build(hzbounds::Family::A, v.len() - 1).unwrap();
        let dec = W0Decomposition::for_root_system(&rs).unwrap();
        let l = WeightLambda::new(&rs, RationalVector::from_ints(&v)).unwrap();
        let exact = unitary_capacity(l.coords().coords()).unwrap();
        prop_assert_eq!(upper_bound(&rs, &l, &dec).unwrap(), exact.clone());
        prop_assert_eq!(lower_bound(&rs, &l, &dec).unwrap().value, exact);
    }

    #[test]
    fn rational_wire_round_trip(n in -10_000i64..10_000, d in 1i64..500) {
        let x = frac(n, d);
        prop_assert_eq!(from_wire(&to_wire(&x)).unwrap(), x.clone());
        prop_assert_eq!(parse_rational(&format!("{n}/{d}")).unwrap(), x);
    }
}
