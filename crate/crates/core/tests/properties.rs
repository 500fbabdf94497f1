use critlink_core::affine::{self, rho, AffineRoot, AffineWeight, WeightOffset};
use critlink_core::cartan::{FiniteRoot, FiniteRootSystem, FiniteWeight};
use critlink_core::charalg::{
    partition_character, restricted_verma_character, verma_character, Truncation,
};
use critlink_core::linkage::{
    arrow_down, arrow_up, casimir_scalar, classify, critical_tests, kk_successors, WindowBounds,
};
use critlink_core::pbw::{build_pbw_module, AlgebraSpec, Gen, Vector};
use critlink_core::rational::{frac, q};
use critlink_core::Q;
use proptest::prelude::*;

fn system(label: &str) -> FiniteRootSystem {
    FiniteRootSystem::from_label(label).unwrap()
}

fn rational() -> impl Strategy<Value = Q> {
    (-8i64..=8, 1i64..=4).prop_map(|(n, d)| frac(n, d))
}

fn weight(rank: usize) -> impl Strategy<Value = AffineWeight> {
    (
        proptest::collection::vec(rational(), rank),
        rational(),
        rational(),
    )
        .prop_map(|(f, l, d)| AffineWeight::new(FiniteWeight(f), l, d))
}

fn critical_integral(rank: usize) -> impl Strategy<Value = AffineWeight> {
    let h = rank as i64 + 1;
    (proptest::collection::vec(-6i64..=6, rank), -3i64..=3)
        .prop_map(move |(f, d)| AffineWeight::new(FiniteWeight::from_ints(&f), q(-h), q(d)))
}

fn label_and_rank() -> impl Strategy<Value = (&'static str, usize)> {
    prop_oneof![Just(("A1", 1)), Just(("A2", 2))]
}

fn pick_root(rs: &FiniteRootSystem, i: usize) -> FiniteRoot {
    let roots = rs.roots();
    roots[i % roots.len()].clone()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn form_is_reflection_invariant(
        (label, l, m) in label_and_rank().prop_flat_map(|(s, r)| (Just(s), weight(r), weight(r))),
        seed in any::<(usize, i8)>(),
    ) {
        let rs = system(label);
        let beta = AffineRoot::real(pick_root(&rs, seed.0), i64::from(seed.1 % 4));
        let before = affine::affine_form(&rs, &l, &m).unwrap();
        let sl = affine::reflect(&rs, &l, &beta, false).unwrap();
        let sm = affine::reflect(&rs, &m, &beta, false).unwrap();
        prop_assert_eq!(affine::affine_form(&rs, &sl, &sm).unwrap(), before.clone());
        prop_assert_eq!(affine::affine_form(&rs, &m, &l).unwrap(), before);
    }

    #[test]
    fn reflections_are_involutions(
        (label, l) in label_and_rank().prop_flat_map(|(s, r)| (Just(s), weight(r))),
        i in any::<usize>(),
        n in -4i64..=4,
        dot in any::<bool>(),
    ) {
        let rs = system(label);
        let beta = AffineRoot::real(pick_root(&rs, i), n);
        let once = affine::reflect(&rs, &l, &beta, dot).unwrap();
        prop_assert_eq!(affine::reflect(&rs, &once, &beta, dot).unwrap(), l);
    }

    #[test]
    fn order_is_a_partial_order(
        a in proptest::collection::vec(0i64..=3, 3),
        b in proptest::collection::vec(-1i64..=3, 3),
        base in critical_integral(2),
    ) {
        let rs = system("A2");
        let x = affine::lower_by(&rs, &base, &WeightOffset(a));
        let y = affine::lower_by(&rs, &x, &WeightOffset(b));
        prop_assert!(affine::leq(&rs, &x, &x));
        prop_assert!(affine::leq(&rs, &x, &base));
        if affine::leq(&rs, &y, &x) {
            prop_assert!(affine::leq(&rs, &y, &base));
        }
        if affine::leq(&rs, &y, &x) && affine::leq(&rs, &x, &y) {
            prop_assert_eq!(x, y);
        }
    }

    #[test]
    fn arrows_are_mutually_inverse(
        (label, l) in label_and_rank().prop_flat_map(|(s, r)| (Just(s), critical_integral(r))),
        i in any::<usize>(),
    ) {
        let rs = system(label);
        let positives = rs.positive_roots();
        let alpha = &positives[i % positives.len()];
        let up = arrow_up(&rs, &l, alpha).unwrap();
        let down = arrow_down(&rs, &l, alpha).unwrap();
        prop_assert!(affine::leq(&rs, &l, &up));
        prop_assert!(affine::leq(&rs, &down, &l));
        prop_assert_eq!(arrow_down(&rs, &up, alpha).unwrap(), l.clone());
        prop_assert_eq!(arrow_up(&rs, &down, alpha).unwrap(), l);
    }

    #[test]
    fn casimir_is_constant_along_linkage(
        (label, l) in label_and_rank().prop_flat_map(|(s, r)| (Just(s), weight(r))),
        critical in any::<bool>(),
    ) {
        let rs = system(label);
        let l = if critical {
            AffineWeight::new(l.finite, q(-rs.dual_coxeter()), l.delta)
        } else {
            l
        };
        let c = casimir_scalar(&rs, &l);
        for (nu, _) in kk_successors(&rs, &l, WindowBounds::new(2, 4)) {
            prop_assert_eq!(casimir_scalar(&rs, &nu), c.clone());
        }
    }

    #[test]
    fn critical_pairing_ignores_delta_shift(
        (label, l) in label_and_rank().prop_flat_map(|(s, r)| (Just(s), critical_integral(r))),
        i in any::<usize>(),
        n in -5i64..=5,
    ) {
        let rs = system(label);
        let shifted = &l + &rho(&rs);
        let alpha = pick_root(&rs, i);
        let a = affine::pairing_coroot(&rs, &shifted, &AffineRoot::real(alpha.clone(), 0)).unwrap();
        let b = affine::pairing_coroot(&rs, &shifted, &AffineRoot::real(alpha, n)).unwrap();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn antidominant_is_smallest_in_its_image(
        (label, l) in label_and_rank().prop_flat_map(|(s, r)| (Just(s), weight(r))),
    ) {
        let rs = system(label);
        let l = AffineWeight::new(l.finite, q(-rs.dual_coxeter()), l.delta);
        let class = classify(&rs, &l);
        if class.is_antidominant {
            for w in &class.finite_image {
                let other = AffineWeight::new(w.clone(), l.level.clone(), l.delta.clone());
                prop_assert!(affine::leq(&rs, &l, &other));
            }
        }
        if class.subgeneric_root.is_some() {
            prop_assert_eq!(class.finite_image.len(), 2);
        }
        prop_assert!(critical_tests(&rs, &l).unwrap().all_agree());
    }

    #[test]
    fn criticality_criteria_agree(
        (label, l) in label_and_rank().prop_flat_map(|(s, r)| (Just(s), weight(r))),
    ) {
        let rs = system(label);
        let t = critical_tests(&rs, &l).unwrap();
        prop_assert!(t.all_agree());
        prop_assert_eq!(t.critical_level, l.level == q(-rs.dual_coxeter()));
    }

    #[test]
    fn verma_factorizes_through_restricted(
        (label, l) in label_and_rank().prop_flat_map(|(s, r)| (Just(s), weight(r))),
        d in 0u32..=3,
        h in 0u32..=5,
    ) {
        let rs = system(label);
        let l = AffineWeight::new(l.finite, q(-rs.dual_coxeter()), l.delta);
        let t = Truncation::new(d, h);
        let v = verma_character(&rs, &l, t).unwrap();
        let r = restricted_verma_character(&rs, &l, t).unwrap();
        let p = partition_character(&rs, t).unwrap();
        prop_assert_eq!(p.mul(&r).unwrap(), v);
    }
}

fn pbw_weight() -> impl Strategy<Value = AffineWeight> {
    (rational(), prop_oneof![Just(q(-2)), rational()], rational())
        .prop_map(|(a, k, d)| AffineWeight::new(FiniteWeight(vec![a]), k, d))
}

fn generator() -> impl Strategy<Value = Gen> {
    prop_oneof![
        (-2i64..=2).prop_map(Gen::E),
        (-2i64..=2).prop_map(Gen::H),
        (-2i64..=2).prop_map(Gen::F),
        Just(Gen::K),
        Just(Gen::D),
    ]
}

fn sub(a: &Vector, b: &Vector) -> Vector {
    let mut out = a.clone();
    for (m, c) in b {
        *out.entry(m.clone()).or_insert_with(|| q(0)) -= c;
    }
    out.retain(|_, c| *c != q(0));
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn module_action_respects_brackets(
        lam in pbw_weight(),
        x in generator(),
        y in generator(),
        pick in any::<usize>(),
    ) {
        let spec = AlgebraSpec::sl2();
        let m = build_pbw_module(&spec, &lam, Truncation::new(2, 2)).unwrap();
        let offsets: Vec<WeightOffset> = m.offsets().collect();
        let o = &offsets[pick % offsets.len()];
        let basis = m.basis(o).unwrap();
        let mono = basis[(pick / offsets.len()) % basis.len()].clone();
        let v: Vector = [(mono, q(1))].into_iter().collect();
        let xy = m.act_on(x, &m.act_on(y, &v));
        let yx = m.act_on(y, &m.act_on(x, &v));
        let mut rhs = Vector::new();
        for (g, c) in spec.bracket(x, y) {
            for (k, val) in m.act_on(g, &v) {
                *rhs.entry(k).or_insert_with(|| q(0)) += val * &c;
            }
        }
        rhs.retain(|_, c| *c != q(0));
        prop_assert_eq!(sub(&xy, &yx), rhs);
    }

    #[test]
    fn basis_vectors_are_weight_vectors(lam in pbw_weight()) {
        let m = build_pbw_module(&AlgebraSpec::sl2(), &lam, Truncation::new(2, 3)).unwrap();
        for o in m.offsets() {
            let (h, k, d) = m.eigenvalues(&o).unwrap();
            for mono in m.basis(&o).unwrap() {
                for (g, e) in [(Gen::H(0), &h), (Gen::K, &k), (Gen::D, &d)] {
                    let v = m.act(g, mono);
                    let expected: Vector = if *e == q(0) {
                        Vector::new()
                    } else {
                        [(mono.clone(), e.clone())].into_iter().collect()
                    };
                    prop_assert_eq!(v, expected);
                }
            }
        }
    }
}

#[test]
fn pbw_dimensions_match_kostant_counts() {
    let rs = system("A1");
    let lam = AffineWeight::new(FiniteWeight(vec![frac(1, 3)]), q(-2), q(0));
    let t = Truncation::new(4, 5);
    let m = build_pbw_module(&AlgebraSpec::sl2(), &lam, t).unwrap();
    let ch = verma_character(&rs, &lam, t).unwrap();
    for o in t.offsets(1) {
        assert_eq!(Some(m.dim(&o).unwrap() as i64), ch.coefficient(&o), "{o:?}");
    }
}
