use cyclo::{rat, Cyclotomic};
use proptest::prelude::*;

fn arb_cyclotomic(max_order: u32) -> impl Strategy<Value = Cyclotomic> {
    (1..=max_order, proptest::collection::vec((-4i64..=4, 1i64..=3, 0i64..=60), 1..4)).prop_map(
        |(m, terms)| {
            let mut acc = Cyclotomic::zero();
            for (p, q, k) in terms {
                acc = acc + Cyclotomic::root(m, k).scale(&rat(p, q));
            }
            acc
        },
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(a in arb_cyclotomic(24), b in arb_cyclotomic(24), c in arb_cyclotomic(24)) {
        prop_assert_eq!((&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!((&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
    }

    #[test]
    fn conj_is_ring_automorphism(a in arb_cyclotomic(24), b in arb_cyclotomic(24)) {
        prop_assert_eq!((&a * &b).conj(), &a.conj() * &b.conj());
        prop_assert_eq!((&a + &b).conj(), &a.conj() + &b.conj());
        prop_assert_eq!(a.conj().conj(), a);
    }

    #[test]
    fn mul_by_one_is_identity(a in arb_cyclotomic(24)) {
        prop_assert_eq!(&a * &Cyclotomic::one(), a.clone());
    }

    #[test]
    fn embedding_round_trip(a in arb_cyclotomic(20)) {
        let up = a.embedded(a.order() * 2);
        prop_assert_eq!(up.clone(), a.clone());
        // reduced() lands in a subfield of the doubled order and still
        // compares equal
        let back = up.reduced();
        prop_assert!(a.order() * 2 % back.order() == 0);
        prop_assert_eq!(back, a);
    }
}

#[test]
fn root_power_and_sum_identities_up_to_60() {
    for m in 1..=60u32 {
        // zeta_m^m = 1 for a spread of exponents
        for k in [0i64, 1, 2, (m as i64) / 2, m as i64 - 1] {
            let z = Cyclotomic::root(m, k);
            assert_eq!(z.pow(m as u64), Cyclotomic::one(), "root({m},{k})^{m}");
        }
        // full sum of all m-th roots vanishes (m > 1)
        if m > 1 {
            let s: Cyclotomic = (0..m as i64).map(|j| Cyclotomic::root(m, j)).sum();
            assert!(s.is_zero(), "root sum of order {m}");
        }
    }
}
