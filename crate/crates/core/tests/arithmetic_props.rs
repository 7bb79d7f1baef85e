use fibra_core::arith::primes_in;
use fibra_core::localglobal::good_primes;
use fibra_core::{
    build_progression, census, chowla_count, degree_divisor, find_residue, hilbert_certificate,
    BiPoly, CensusOptions, Cover, DegreeDivisor, Field,
};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use proptest::prelude::*;

fn square_root_cover() -> BiPoly {
    BiPoly::from_terms(&[(1, 0, 2), (-1, 1, 0)])
}

fn cubic() -> BiPoly {
    BiPoly::from_terms(&[(1, 0, 3), (1, 0, 1), (-1, 1, 0)])
}

fn covers() -> impl Strategy<Value = BiPoly> {
    // monic in Y of degree 2..=4, small coefficients in T
    (2usize..=4)
        .prop_flat_map(|n| prop::collection::vec((-3i64..=3, 0usize..=2, 0usize..n), 1..6).prop_map(move |t| (n, t)))
        .prop_map(|(n, mut terms)| {
            terms.push((1, 0, n));
            terms.push((-1, 1, 0));
            BiPoly::from_terms(&terms)
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn census_partitions_the_line(p in covers(), q in prop::sample::select(vec![5u64, 7, 9, 11, 16, 25, 31])) {
        let (ch, m) = fibra_core::arith::prime_power(q).unwrap();
        let field = Field::new(ch, m).unwrap();
        let Ok(rep) = census(&p, &field, &CensusOptions::default()) else {
            return Ok(());
        };
        prop_assert_eq!(rep.total(), q);
        let threaded = census(&p, &field, &CensusOptions { threads: 3, ..Default::default() }).unwrap();
        prop_assert_eq!(&rep.counts, &threaded.counts);
        prop_assert_eq!(rep.ramified, threaded.ramified);
    }
}

#[test]
fn square_root_cover_splits_evenly() {
    for q in [3u64, 5, 7, 9, 11, 13, 25, 27, 49, 101] {
        let (p, m) = fibra_core::arith::prime_power(q).unwrap();
        let rep = census(&square_root_cover(), &Field::new(p, m).unwrap(), &CensusOptions::default()).unwrap();
        let half = (q - 1) / 2;
        assert_eq!(rep.count(&"1^2".parse().unwrap()), half, "q = {q}");
        assert_eq!(rep.count(&"2^1".parse().unwrap()), half, "q = {q}");
        assert_eq!(rep.ramified, 1);
    }
}

#[test]
fn quadratic_trinomial_count_is_closed_form() {
    for p in primes_in(3, 600) {
        assert_eq!(chowla_count(2, p).unwrap().count, (p - 1) / 2, "p = {p}");
    }
}

fn plans_strategy() -> impl Strategy<Value = Vec<(u64, u64)>> {
    prop::sample::subsequence(primes_in(2, 200).collect::<Vec<_>>(), 1..6)
        .prop_flat_map(|ps| ps.into_iter().map(|p| (Just(p), 0..p)).collect::<Vec<_>>())
}

proptest! {
    #[test]
    fn crt_matches_every_plan(raw in plans_strategy()) {
        let cover = Cover::new(square_root_cover()).unwrap();
        // any valid plan shape will do; CRT only reads p and b
        let template = find_residue(&cover, 67, &"2^1".parse().unwrap()).unwrap();
        let plans: Vec<_> = raw
            .iter()
            .map(|&(p, b)| fibra_core::PrimePlan { p, b, ..template.clone() })
            .collect();
        let prog = build_progression(&plans, &[]).unwrap();
        let modulus: BigInt = raw.iter().map(|&(p, _)| BigInt::from(p)).product();
        prop_assert_eq!(&prog.a, &modulus);
        prop_assert!(prog.b >= BigInt::zero() && prog.b < modulus);
        for &(p, b) in &raw {
            prop_assert_eq!(prog.b.mod_floor(&BigInt::from(p)).to_u64().unwrap(), b);
        }
    }
}

#[test]
fn residue_class_determines_divisor() {
    let cover = Cover::new(cubic()).unwrap();
    let types = DegreeDivisor::partitions(3);
    for g in good_primes(&cover, 5, 400) {
        let field = Field::prime(g.p).unwrap();
        for t in &types {
            let Ok(plan) = find_residue(&cover, g.p, t) else {
                continue;
            };
            for k in 0..3u64 {
                let t0 = BigInt::from(plan.b + k * g.p);
                let f = cubic().specialize_int(&t0).reduce(&field);
                assert_eq!(&degree_divisor(&f).unwrap(), t, "p = {}, t0 = {t0}", g.p);
            }
        }
    }
}

fn eval(coeffs: &[BigInt], x: &BigInt) -> BigInt {
    coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
}

/// Searches for a monic factor of degree 1 or 2 with coefficients in
/// `[-bound, bound]`, by exact polynomial division over Z.
fn small_factor(coeffs: &[BigInt], bound: i64) -> bool {
    let n = coeffs.len() - 1;
    let divides = |d: &[i64]| {
        let mut r: Vec<BigInt> = coeffs.to_vec();
        let k = d.len() - 1;
        for i in (0..=n - k).rev() {
            let c = r[i + k].clone();
            for (j, &dj) in d.iter().enumerate() {
                r[i + j] -= &c * dj;
            }
        }
        r[..k].iter().all(Zero::is_zero)
    };
    for a in -bound..=bound {
        if eval(coeffs, &BigInt::from(a)).is_zero() {
            return true;
        }
        if n >= 4 {
            for b in -bound..=bound {
                if divides(&[b, a, 1]) {
                    return true;
                }
            }
        }
    }
    false
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn certificate_implies_no_small_factor(t0 in -2000i64..2000, which in 0usize..3) {
        let poly = [
            cubic(),
            BiPoly::from_terms(&[(1, 0, 4), (-1, 1, 1), (1, 0, 0)]),
            square_root_cover(),
        ][which].clone();
        let cover = Cover::new(poly.clone()).unwrap();
        let t0 = BigInt::from(t0);
        let Some(_) = hilbert_certificate(&cover, &t0, 10_000).unwrap() else {
            return Ok(());
        };
        let coeffs = poly.specialize_int(&t0).coeffs().to_vec();
        prop_assert!(!small_factor(&coeffs, 60));
    }
}

#[test]
fn squares_never_certify() {
    let cover = Cover::new(square_root_cover()).unwrap();
    for k in 0..40i64 {
        assert_eq!(hilbert_certificate(&cover, &BigInt::from(k * k), 2000).unwrap(), None);
    }
}
