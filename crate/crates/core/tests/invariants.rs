use comet_core::algebra::{rat_int, LaurentPoly2, RatFunc2, Vars};
use comet_core::charvar::hlv_h;
use comet_core::partitions::{multipartitions, MultiPartition, Partition};
use comet_core::quiver::a_mu;
use comet_core::symfunc::{Basis, SymSeries};
use proptest::prelude::*;

fn poly() -> impl Strategy<Value = LaurentPoly2> {
    prop::collection::vec(((-3i32..4, -3i32..4), -5i64..6), 0..5).prop_map(|t| LaurentPoly2::from_int_terms(Vars::ZW, &t))
}

fn nonzero_poly() -> impl Strategy<Value = LaurentPoly2> {
    poly().prop_filter("nonzero", |p| !p.is_zero())
}

fn partition() -> impl Strategy<Value = Partition> {
    prop::collection::vec(1u32..5, 0..5).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(v).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn laurent_ring_axioms(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert!(a.sub(&a).is_zero());
    }

    #[test]
    fn laurent_eval_is_a_homomorphism(a in poly(), b in poly(), x in 1i64..5, y in 1i64..5) {
        let (x, y) = (rat_int(x), rat_int(y));
        prop_assert_eq!(a.mul(&b).eval(&x, &y), a.eval(&x, &y) * b.eval(&x, &y));
    }

    #[test]
    fn ratfunc_field_axioms(a in poly(), b in nonzero_poly(), c in nonzero_poly()) {
        let fa = RatFunc2::from_poly(&a);
        let fb = RatFunc2::from_poly(&b);
        let fc = RatFunc2::from_poly(&c);
        let q = fa.div(&fb).unwrap();
        prop_assert_eq!(q.mul(&fb), fa.clone());
        let lhs = q.add(&fc.inv().unwrap());
        let rhs = fa.mul(&fc).add(&fb).div(&fb.mul(&fc)).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn partition_dual_is_involution(p in partition()) {
        prop_assert_eq!(p.dual().dual(), p.clone());
        prop_assert_eq!(p.dual().size(), p.size());
    }

    #[test]
    fn pleth_exp_inverts_log(seed in prop::collection::vec(-3i64..4, 7)) {
        let terms: Vec<(MultiPartition, RatFunc2)> = multipartitions(1, 1)
            .into_iter()
            .chain(multipartitions(2, 1))
            .chain(multipartitions(3, 1))
            .zip(&seed)
            .map(|(mu, &c)| (mu, RatFunc2::int(c).mul(&RatFunc2::x())))
            .collect();
        let f = SymSeries::from_terms(1, 3, Basis::M, terms).unwrap();
        let one = SymSeries::one(1, 3);
        let g = f.pleth_exp().unwrap();
        prop_assert_eq!(g.pleth_log().unwrap(), f.clone());
        prop_assert_eq!(one.add(&f).unwrap().pleth_log().unwrap().pleth_exp().unwrap(), one.add(&f).unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn hlv_structure_and_purity(idx in 0usize..64, g in 0u32..2) {
        let all: Vec<MultiPartition> = (1..=3).flat_map(|n| multipartitions(n, 2)).collect();
        let mu = &all[idx % all.len()];
        let h = hlv_h(mu, g).unwrap();
        prop_assert!(h.structure_violations().is_empty(), "{:?}", h.structure_violations());
        let pure = h.value.terms().filter(|((a, _), _)| *a == 0).map(|((_, b), c)| ((*b, 0), c.clone()));
        let pure = LaurentPoly2::from_terms(Vars::QT, pure);
        let halved = comet_core::algebra::ratfunc::halve_exponents(&pure, Vars::QT).unwrap();
        prop_assert_eq!(halved, a_mu(mu, g).unwrap());
    }
}
