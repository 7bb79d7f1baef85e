use fibra_core::{degree_divisor, distinct_degree, factor, is_irreducible, DegreeDivisor, Field, Poly};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn fields() -> impl Strategy<Value = Field> {
    prop::sample::select(vec![(2u64, 1usize), (2, 3), (3, 2), (5, 1), (5, 3), (7, 2), (101, 1), (11, 2)])
        .prop_map(|(p, m)| Field::new(p, m).unwrap())
}

fn field_and_nonzero() -> impl Strategy<Value = (Field, u64)> {
    fields().prop_flat_map(|f| {
        let q = f.order();
        (Just(f), 1..q)
    })
}

proptest! {
    #[test]
    fn inverse_and_frobenius((f, a) in field_and_nonzero()) {
        let inv = f.inv(a).unwrap();
        prop_assert_eq!(f.mul(a, inv), 1);
        // a^(p^m) = a
        let mut x = a;
        for _ in 0..f.degree() {
            x = f.pow(x, f.characteristic());
        }
        prop_assert_eq!(x, a);
        prop_assert_eq!(f.pow(a, f.order() - 1), 1);
    }

    #[test]
    fn distributive((f, a) in field_and_nonzero(), b in any::<u64>(), c in any::<u64>()) {
        let (b, c) = (b % f.order(), c % f.order());
        prop_assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
        prop_assert_eq!(f.sub(f.add(b, c), c), b);
    }
}

#[test]
fn field_of_four_elements() {
    let f = Field::new(2, 2).unwrap();
    // with modulus x^2 + x + 1 the elements are 0, 1, x, x + 1 packed as 0..4
    let mul = [[0, 0, 0, 0], [0, 1, 2, 3], [0, 2, 3, 1], [0, 3, 1, 2]];
    let add = [[0, 1, 2, 3], [1, 0, 3, 2], [2, 3, 0, 1], [3, 2, 1, 0]];
    for a in 0..4 {
        for b in 0..4 {
            assert_eq!(f.mul(a, b), mul[a as usize][b as usize]);
            assert_eq!(f.add(a, b), add[a as usize][b as usize]);
        }
    }
}

fn monic(field: Field, deg: usize) -> impl Strategy<Value = Poly> {
    let q = field.order();
    prop::collection::vec(0..q, deg).prop_map(move |mut c| {
        c.push(1);
        Poly::new(&field, c)
    })
}

fn random_monic() -> impl Strategy<Value = Poly> {
    (prop::sample::select(vec![2u64, 3, 5, 7, 101]), 1usize..=12)
        .prop_flat_map(|(p, d)| monic(Field::prime(p).unwrap(), d))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn factorization_reassembles(f in random_monic(), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (lead, facs) = factor(&f, &mut rng).unwrap();
        prop_assert_eq!(lead, 1);
        let mut prod = Poly::one(f.field());
        for (g, e) in &facs {
            prop_assert!(is_irreducible(g));
            prop_assert!(g.is_monic());
            prod = prod.mul(&g.pow(*e));
        }
        prop_assert_eq!(prod, f.clone());
        if f.is_squarefree() {
            let mut parts: Vec<usize> = facs.iter().map(|(g, _)| g.degree().unwrap()).collect();
            parts.sort();
            prop_assert_eq!(degree_divisor(&f).unwrap(), DegreeDivisor::new(parts).unwrap());
        }
    }

    #[test]
    fn distinct_degree_covers_input(f in random_monic()) {
        prop_assume!(f.is_squarefree());
        let parts = distinct_degree(&f).unwrap();
        let total: usize = parts.iter().map(|(_, h)| h.degree().unwrap()).sum();
        prop_assert_eq!(total, f.degree().unwrap());
        for (d, h) in &parts {
            prop_assert_eq!(h.degree().unwrap() % d, 0);
        }
        prop_assert_eq!(degree_divisor(&f).unwrap().total(), f.degree().unwrap());
    }

    #[test]
    fn divisor_of_product_of_irreducibles(seed in any::<u64>(), p in prop::sample::select(vec![3u64, 5, 7, 13])) {
        // build a squarefree product from distinct irreducibles of chosen degrees
        let field = Field::prime(p).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut chosen: Vec<Poly> = Vec::new();
        for d in [1usize, 1, 2, 3] {
            loop {
                let mut c: Vec<u64> = (0..d).map(|_| rand::Rng::gen_range(&mut rng, 0..p)).collect();
                c.push(1);
                let g = Poly::new(&field, c);
                if is_irreducible(&g) && !chosen.contains(&g) {
                    chosen.push(g);
                    break;
                }
            }
        }
        let f = chosen.iter().fold(Poly::one(&field), |acc, g| acc.mul(g));
        prop_assert_eq!(degree_divisor(&f).unwrap(), "1^2 2^1 3^1".parse::<DegreeDivisor>().unwrap());
    }
}
