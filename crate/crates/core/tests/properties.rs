use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use proptest::prelude::*;

use selberg_core::asymptotics::{dyck_peak_coefficients, is_palindrome};
use selberg_core::exactnum::{parse_scalar, rat, Bindings, ParamScalar, Var};
use selberg_core::oracle::{moment_integrate, DensePoly};
use selberg_core::partitions::{dominance_leq, partitions_of, Partition};
use selberg_core::selberg::{selberg_general, SelbergParams};
use selberg_core::symfunc::{m_to_p, power_sums_to_monomials, Basis, SymFn};

const VARS: [Var; 4] = [Var::A, Var::B, Var::Kappa, Var::N];

fn small_rat() -> impl Strategy<Value = BigRational> {
    (-6i64..=6, 1i64..=4).prop_map(|(n, d)| rat(n, d))
}

/// Products of small affine factors with exponents in ±1, ±2.
fn scalar() -> impl Strategy<Value = ParamScalar> {
    let affine = (small_rat(), prop::collection::vec((0usize..4, -3i64..=3), 1..3)).prop_map(|(c0, ts)| {
        let terms: Vec<(Var, BigRational)> = ts.into_iter().map(|(v, c)| (VARS[v], rat(c, 1))).collect();
        ParamScalar::affine(c0, &terms)
    });
    let exp = prop_oneof![Just(1), Just(2), Just(-1), Just(-2)];
    (small_rat(), prop::collection::vec((affine, exp), 0..4)).prop_map(|(unit, fs)| {
        let mut x = ParamScalar::constant(unit);
        for (f, e) in fs {
            if let Ok(p) = f.pow(e) {
                x = x.mul(&p);
            }
        }
        x
    })
}

fn point() -> impl Strategy<Value = Bindings> {
    prop::collection::vec((-20i64..=20, 1i64..=7), 4).prop_map(|v| {
        let mut b = Bindings::new();
        for (var, (n, d)) in VARS.iter().zip(v) {
            b.set(*var, rat(n, d));
        }
        b
    })
}

fn partition() -> impl Strategy<Value = Partition> {
    prop::collection::vec(1usize..=5, 0..5).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(v).unwrap()
    })
}

fn dense(nvars: usize) -> impl Strategy<Value = DensePoly> {
    prop::collection::vec((small_rat(), prop::collection::vec(0usize..=2, nvars)), 1..4)
        .prop_map(move |terms| DensePoly::from_terms(nvars, &terms).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn arithmetic_commutes_with_evaluation(x in scalar(), y in scalar(), at in point()) {
        let (Ok(ex), Ok(ey)) = (x.eval(&at), y.eval(&at)) else { return Ok(()) };
        prop_assert_eq!(x.add(&y).eval(&at).unwrap(), &ex + &ey);
        prop_assert_eq!(x.sub(&y).eval(&at).unwrap(), &ex - &ey);
        prop_assert_eq!(x.mul(&y).eval(&at).unwrap(), &ex * &ey);
        if !ey.is_zero() && !y.is_zero() {
            prop_assert_eq!(x.div(&y).unwrap().eval(&at).unwrap(), &ex / &ey);
        }
    }

    #[test]
    fn sums_have_no_order(xs in prop::collection::vec(scalar(), 0..5), at in point()) {
        let fold = xs.iter().fold(ParamScalar::zero(), |acc, x| acc.add(x));
        prop_assert_eq!(&ParamScalar::sum_many(&xs), &fold);
        let rev: Vec<ParamScalar> = xs.iter().rev().cloned().collect();
        prop_assert_eq!(ParamScalar::sum_many(&rev), fold.clone());
        if let Ok(v) = fold.eval(&at) {
            let parts: Option<BigRational> = xs.iter().map(|x| x.eval(&at).ok()).sum();
            if let Some(p) = parts {
                prop_assert_eq!(v, p);
            }
        }
    }

    #[test]
    fn factored_and_expanded_agree(x in scalar(), at in point()) {
        let (num, den) = x.expanded();
        let look = |v: Var| at.get(v).cloned();
        let (Some(n), Some(d)) = (num.eval_with(look), den.eval_with(look)) else { return Ok(()) };
        if d.is_zero() {
            prop_assert!(x.eval(&at).is_err());
        } else {
            prop_assert_eq!(x.eval(&at).unwrap(), n / d);
        }
    }

    #[test]
    fn cancel_is_idempotent_and_exact(x in scalar(), y in scalar()) {
        let once = x.mul(&y).cancel();
        prop_assert!(once.clone().cancel().same_repr(&once));
        prop_assert_eq!(once, x.mul(&y));
    }

    #[test]
    fn text_roundtrip(x in scalar()) {
        let s = x.to_string();
        let back = parse_scalar(&s).unwrap();
        prop_assert_eq!(&back, &x);
        prop_assert_eq!(back.to_string(), s);
    }

    #[test]
    fn conjugation_is_an_involution_reversing_dominance(l in partition(), m in partition()) {
        prop_assert_eq!(l.conjugate().conjugate(), l.clone());
        prop_assert_eq!(l.conjugate().weight(), l.weight());
        if l.weight() == m.weight() {
            let forward = dominance_leq(&m, &l).unwrap();
            prop_assert_eq!(forward, dominance_leq(&l.conjugate(), &m.conjugate()).unwrap());
        }
    }

    #[test]
    fn arm_and_leg_totals(l in partition()) {
        // Σ_s l(s) = n(λ) and Σ_s a(s) = n(λ').
        let (mut arms, mut legs) = (0, 0);
        for s in l.cells() {
            arms += l.arm(s).unwrap();
            legs += l.leg(s).unwrap();
        }
        prop_assert_eq!(legs, l.n());
        prop_assert_eq!(arms, l.conjugate().n());
    }

    #[test]
    fn basis_changes_invert(k in 1usize..=6, picks in prop::collection::vec((0usize..11, -3i64..=3), 1..4)) {
        let parts = partitions_of(k);
        let f = SymFn::from_terms(
            Basis::Monomial,
            picks.into_iter().map(|(i, c)| (parts[i % parts.len()].clone(), ParamScalar::integer(c))),
        );
        let back = power_sums_to_monomials(&m_to_p(&f).unwrap()).unwrap();
        prop_assert_eq!(back, f);
    }

    #[test]
    fn oracle_is_linear_and_symmetric(f in dense(3), g in dense(3), c in small_rat(), kappa in 0u32..=1) {
        let (a, b) = (ParamScalar::var(Var::A), ParamScalar::var(Var::B));
        let fi = moment_integrate(&f, &a, &b, kappa).unwrap();
        let gi = moment_integrate(&g, &a, &b, kappa).unwrap();
        let lhs = moment_integrate(&f.scale(&c).add(&g), &a, &b, kappa).unwrap();
        prop_assert_eq!(lhs, fi.scale(&c).add(&gi));
        for perm in [[1, 0, 2], [2, 0, 1]] {
            prop_assert_eq!(moment_integrate(&f.permute(&perm), &a, &b, kappa).unwrap(), fi.clone());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn integral_is_homogeneous(
        terms in prop::collection::vec((small_rat(), prop::collection::vec(0usize..=2, 1..3)), 1..3),
        c in small_rat(),
    ) {
        let params = SelbergParams::symbolic().with_n(3);
        let scaled: Vec<(BigRational, Vec<usize>)> = terms.iter().map(|(x, e)| (x * &c, e.clone())).collect();
        let base = selberg_general(&terms, &params).unwrap();
        let times = selberg_general(&scaled, &params).unwrap();
        prop_assert_eq!(times.value.value(), &base.value.value().scale(&c));
    }

    #[test]
    fn general_pipeline_matches_oracle(
        terms in prop::collection::vec((small_rat(), prop::collection::vec(0usize..=2, 2)), 1..3),
    ) {
        let params = SelbergParams::symbolic().with_n(2).with_kappa(1);
        let got = selberg_general(&terms, &params).unwrap();
        let (a, b) = (ParamScalar::var(Var::A), ParamScalar::var(Var::B));
        let want = moment_integrate(&DensePoly::from_terms(2, &terms).unwrap(), &a, &b, 1).unwrap();
        prop_assert_eq!(got.value.value(), &want);
    }
}

#[test]
fn peak_coefficients_are_palindromic() {
    for k in 1..=8 {
        let c = dyck_peak_coefficients(k);
        assert_eq!(c.len(), 2 * k - 1);
        assert!(is_palindrome(&c), "k={k}");
        // Summing over peaks counts all Dyck paths of the symmetric family: C(2k-1, k-1).
        let total: BigInt = c.iter().sum();
        let binom = (1..k).fold(BigInt::from(1), |acc, i| acc * (k + i) / i);
        assert_eq!(total, binom, "k={k}");
    }
}
