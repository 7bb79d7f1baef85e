use fibra_core::perm::{centralizer_order_sn, class_size_sn};
use fibra_core::twist::random_datum;
use fibra_core::{
    check_ii2, conjugacy_classes, count_ii2, cycle_type, enumerate_isoms, gamma_representatives,
    generate, hom_from_images, simultaneous_conjugacy, twisted_fixed_points, ChiBar, GroupHom,
    Perm, PermGroup, TwistProblem,
};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn perm(n: usize) -> impl Strategy<Value = Perm> {
    Just((0..n as u32).collect::<Vec<_>>())
        .prop_shuffle()
        .prop_map(|v| Perm::from_images(v).unwrap())
}

fn two_perms() -> impl Strategy<Value = (Perm, Perm, Perm)> {
    (1usize..=8).prop_flat_map(|n| (perm(n), perm(n), perm(n)))
}

proptest! {
    #[test]
    fn composition_laws((a, b, c) in two_perms()) {
        let n = a.degree();
        prop_assert_eq!(a.compose(&b).compose(&c), a.compose(&b.compose(&c)));
        prop_assert!(a.compose(&a.inverse()).is_identity());
        // right to left: (a after b)(i) = a(b(i))
        for i in 0..n {
            prop_assert_eq!(a.compose(&b).apply(i), a.apply(b.apply(i)));
        }
        prop_assert_eq!(a.conj(&b.compose(&c)), a.conj(&b).compose(&a.conj(&c)));
        prop_assert!(a.pow(a.order() as u64).is_identity());
    }

    #[test]
    fn cycle_type_is_a_class_function((s, t, _) in two_perms()) {
        prop_assert_eq!(cycle_type(&t.conj(&s)), cycle_type(&s));
        prop_assert_eq!(cycle_type(&s).total(), s.degree());
    }

    #[test]
    fn cycle_text_round_trips((s, _, _) in two_perms()) {
        let text = s.to_string();
        prop_assert_eq!(Perm::parse(&text, s.degree()).unwrap(), s);
    }

    #[test]
    fn generated_group_is_closed((a, b, _) in two_perms()) {
        let n = a.degree();
        let g = generate(n, &[a.clone(), b.clone()]).unwrap();
        let fact: usize = (1..=n).product();
        prop_assert_eq!(fact % g.order(), 0);
        for x in g.elements().iter().take(20) {
            for y in g.elements().iter().take(20) {
                prop_assert!(g.contains(&x.compose(y)));
            }
        }
        let sizes: usize = conjugacy_classes(&g).iter().map(Vec::len).sum();
        prop_assert_eq!(sizes, g.order());
    }

    #[test]
    fn simultaneous_conjugacy_witness((a, b, s) in two_perms()) {
        let n = a.degree();
        prop_assume!(n <= 6);
        let h = generate(n, &[a.clone(), b.clone()]).unwrap();
        let f = GroupHom::inclusion(&h);
        let g = f.conjugated(&s);
        let sn = PermGroup::symmetric(n).unwrap();
        let w = simultaneous_conjugacy(&g, &f, &sn).unwrap().expect("s is a witness");
        for x in h.elements() {
            prop_assert_eq!(g.apply(x).unwrap(), &w.conj(f.apply(x).unwrap()));
        }
        // least witness: nothing smaller in canonical order works
        for cand in sn.elements().iter().take_while(|c| *c < &w) {
            prop_assert!(h.elements().iter().any(|x| g.apply(x).unwrap() != &cand.conj(f.apply(x).unwrap())));
        }
    }
}

#[test]
fn class_sizes_match_brute_force() {
    for n in 1..=7 {
        let sn = PermGroup::symmetric(n).unwrap();
        let fact: u128 = (1..=n as u128).product();
        for class in conjugacy_classes(&sn) {
            let t = cycle_type(&class[0]);
            assert_eq!(class_size_sn(&t), class.len() as u128, "n = {n}, type {t}");
            assert_eq!(centralizer_order_sn(&t) * class.len() as u128, fact);
            // prod i^{a_i} a_i!
            let formula: u128 = t
                .powers()
                .iter()
                .map(|&(i, a)| (i as u128).pow(a as u32) * (1..=a as u128).product::<u128>())
                .product();
            assert_eq!(formula, centralizer_order_sn(&t));
        }
    }
}

#[test]
fn failed_conjugacy_is_exhaustive() {
    let sn = PermGroup::symmetric(4).unwrap();
    let h = generate(4, &[Perm::parse("(1 2)", 4).unwrap()]).unwrap();
    let f = GroupHom::inclusion(&h);
    let g = hom_from_images(&h, &[Perm::parse("(1 2)(3 4)", 4).unwrap()], 4).unwrap();
    assert!(simultaneous_conjugacy(&g, &f, &sn).unwrap().is_none());
    let target = Perm::parse("(1 2)(3 4)", 4).unwrap();
    let gen = Perm::parse("(1 2)", 4).unwrap();
    assert!(sn.elements().iter().all(|s| s.conj(&gen) != target));
}

fn perms(n: usize, texts: &[&str]) -> Vec<Perm> {
    texts.iter().map(|t| Perm::parse(t, n).unwrap()).collect()
}

fn test_problems() -> Vec<TwistProblem> {
    let mut out = vec![
        TwistProblem::symmetric(3, &perms(3, &["(1 2 3)"])).unwrap(),
        TwistProblem::symmetric(3, &perms(3, &["(1 2)"])).unwrap(),
        TwistProblem::symmetric(4, &perms(4, &["(1 2 3 4)"])).unwrap(),
        TwistProblem::symmetric(4, &perms(4, &["(1 2)(3 4)", "(1 3)(2 4)"])).unwrap(),
    ];
    let g = generate(4, &perms(4, &["(1 2 3 4)", "(1 3)"])).unwrap();
    let gbar = generate(4, &perms(4, &["(1 2 3 4)"])).unwrap();
    let h = generate(4, &perms(4, &["(1 3)"])).unwrap();
    let mu = hom_from_images(&h, &perms(4, &["(1 3)"]), 4).unwrap();
    out.push(TwistProblem::new(4, g.clone(), gbar, h, GroupHom::inclusion(&g), mu, ChiBar::Identity).unwrap());
    out
}

#[test]
fn partition_law_and_orbit_sizes() {
    for prob in test_problems() {
        let isoms = enumerate_isoms(&prob).unwrap();
        assert!(!isoms.is_empty(), "identity chibar admits an isomorphism");
        let classes = gamma_representatives(&isoms, prob.gbar());
        let members: usize = classes.iter().map(|c| c.members.len()).sum();
        assert_eq!(members, isoms.len());
        for c in &classes {
            let cen = fibra_core::centralizer_order(prob.gbar(), &c.chi.generator_images()).unwrap();
            assert_eq!(c.members.len() * cen, prob.gbar().order());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn ii2_independent_of_representative(which in 0usize..5, pick in any::<prop::sample::Index>()) {
        let prob = &test_problems()[which];
        let base = count_ii2(prob).unwrap();
        for cl in &base.classes {
            let w = pick.get(prob.gbar().elements());
            let moved = cl.chi.conjugated(w);
            prop_assert_eq!(check_ii2(prob, &moved).unwrap().is_some(), check_ii2(prob, &cl.chi).unwrap().is_some());
        }
    }

    #[test]
    fn fixed_point_law(which in 0usize..5, seed in any::<u64>()) {
        let prob = &test_problems()[which];
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let datum = random_datum(prob, &mut rng).unwrap();
        let classes = gamma_representatives(&enumerate_isoms(prob).unwrap(), prob.gbar());
        let mut nonempty = 0;
        for cl in &classes {
            let fixed = twisted_fixed_points(prob, &cl.chi, &datum).unwrap();
            let cen = fibra_core::centralizer_order(prob.gbar(), &cl.chi.image()).unwrap();
            prop_assert!(fixed.is_empty() || fixed.len() == cen);
            nonempty += usize::from(!fixed.is_empty());
        }
        prop_assert!(nonempty <= 1);

        // psi(t) x (chi phi)(t)^-1 stays in Gbar
        let chi = &classes[0].chi;
        let chi_phi = chi.after(&datum.phi_n).unwrap();
        for t in datum.d.elements() {
            let (s, c) = (datum.psi.apply(t).unwrap(), chi_phi.apply(t).unwrap());
            for x in prob.gbar().elements() {
                prop_assert!(prob.gbar().contains(&s.compose(x).compose(&c.inverse())));
            }
        }
    }
}
