//! Property tests for the order-theoretic core: the membership lattice and
//! the decompose/recompose round trip.

use cflie::cfuzzy::{decompose, recompose, Membership, MembershipOrder};
use cflie::harness::gen::{Gen, GenConfig};
use cflie::Rational;
use proptest::prelude::*;

fn membership_strategy() -> impl Strategy<Value = Membership> {
    ((0i64..=10, 1i64..=10), (0i64..=8, 1i64..=4)).prop_filter_map(
        "within the unit disc",
        |((rn, rd), (wn, wd))| {
            Membership::new(Rational::new(rn.min(rd), rd), Rational::new(wn.min(2 * wd), wd)).ok()
        },
    )
}

proptest! {
    #[test]
    fn meet_is_the_greatest_lower_bound(a in membership_strategy(), b in membership_strategy()) {
        let m = a.meet(&b);
        prop_assert!(m.le(&a) && m.le(&b));
        // any common lower bound on the componentwise grid is below the meet
        prop_assert_eq!(m.r(), a.r().min(b.r()));
        prop_assert_eq!(m.w_over_pi(), a.w_over_pi().min(b.w_over_pi()));
    }

    #[test]
    fn join_is_the_least_upper_bound(a in membership_strategy(), b in membership_strategy()) {
        let j = a.join(&b);
        prop_assert!(a.le(&j) && b.le(&j));
        prop_assert_eq!(j.r(), a.r().max(b.r()));
        prop_assert_eq!(j.w_over_pi(), a.w_over_pi().max(b.w_over_pi()));
    }

    #[test]
    fn lattice_laws(a in membership_strategy(), b in membership_strategy(), c in membership_strategy()) {
        // commutativity, associativity, absorption, idempotence
        prop_assert_eq!(a.meet(&b), b.meet(&a));
        prop_assert_eq!(a.join(&b), b.join(&a));
        prop_assert_eq!(a.meet(&b).meet(&c), a.meet(&b.meet(&c)));
        prop_assert_eq!(a.join(&b).join(&c), a.join(&b.join(&c)));
        prop_assert_eq!(a.meet(&a.join(&b)), a);
        prop_assert_eq!(a.join(&a.meet(&b)), a);
        prop_assert_eq!(a.meet(&a), a);
        prop_assert_eq!(a.join(&a), a);
    }

    #[test]
    fn partial_order_is_consistent_with_comparability(a in membership_strategy(), b in membership_strategy()) {
        match a.cmp_membership(&b) {
            MembershipOrder::Equal => prop_assert!(a.le(&b) && b.le(&a)),
            MembershipOrder::Less => {
                prop_assert!(a.le(&b) && a.lt(&b) && !b.le(&a));
            }
            MembershipOrder::Greater => {
                prop_assert!(b.le(&a) && b.lt(&a) && !a.le(&b));
            }
            MembershipOrder::Incomparable => {
                prop_assert!(!a.le(&b) && !b.le(&a));
            }
        }
        // the endpoint 2pi is distinct from 0: comparisons are on the exact
        // coefficient, never modulo 2
        let top = Membership::from_ints(0, 1, 2, 1).unwrap();
        let bottom = Membership::zero();
        prop_assert!(bottom.lt(&top));
    }

    #[test]
    fn decompose_recompose_round_trips(seed in 0u64..1000) {
        let mut g = Gen::new(GenConfig {
            max_prime: 3,
            ..GenConfig::with_seed_and_trials(seed, 1)
        });
        let algebra = g.algebra();
        let ladder = g.ladder(3);
        let set = g.homogeneous_set(&algebra, &ladder);
        let (r_part, w_part) = decompose(&set);
        let back = recompose(&r_part, &w_part).unwrap();
        prop_assert_eq!(back, set);
    }
}
