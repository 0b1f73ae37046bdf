use proptest::prelude::*;

use dcomplete::format::{parse_poset, write_poset};
use dcomplete::generators::{partitions, rooted_trees, shifted_young, strict_partitions, tree, young};
use dcomplete::poset::Poset;
use dcomplete::rational::{ratio, Rational};
use dcomplete::rsk::{inverse_rsk, rsk, toggle, Filling};
use dcomplete::Analysis;

/// A d-complete poset from one of the three families, at most 8 elements.
fn d_complete() -> impl Strategy<Value = Poset> {
    (0usize..3, 1usize..=8, any::<prop::sample::Index>()).prop_map(|(family, n, pick)| match family {
        0 => {
            let ps = partitions(n);
            young(&ps[pick.index(ps.len())]).unwrap()
        }
        1 => {
            let ps = strict_partitions(n);
            shifted_young(&ps[pick.index(ps.len())]).unwrap()
        }
        _ => {
            let ts = rooted_trees(n);
            tree(&ts[pick.index(ts.len())]).unwrap()
        }
    })
}

fn small_rational() -> impl Strategy<Value = Rational> {
    (0i64..=16, 1i64..=16).prop_map(|(a, b)| ratio(a, b))
}

fn with_filling() -> impl Strategy<Value = (Poset, Vec<Rational>)> {
    d_complete().prop_flat_map(|p| {
        let n = p.len();
        (Just(p), prop::collection::vec(small_rational(), n))
    })
}

/// Random DAG: each pair `(i, j)` with `i < j` is a relation with some
/// probability.
fn random_poset() -> impl Strategy<Value = Poset> {
    (1usize..9).prop_flat_map(|n| {
        prop::collection::vec(any::<bool>(), n * n).prop_map(move |bits| {
            let pairs: Vec<_> = (0..n)
                .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                .filter(|&(i, j)| bits[i * n + j])
                .collect();
            Poset::from_cover_relations(n, &pairs).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn rsk_round_trips_and_reverses_order((p, t) in with_filling()) {
        let an = Analysis::new(p).unwrap();
        let t = Filling::new(t);
        let s = rsk(&an, &t, None).unwrap();
        prop_assert!(s.is_order_reversing(an.poset()));
        prop_assert!(s.is_nonnegative());
        prop_assert_eq!(inverse_rsk(&an, &s, None).unwrap(), t.clone());
        prop_assert_eq!(s.total() == Rational::from_integer(0.into()), t.total() == Rational::from_integer(0.into()));
    }

    #[test]
    fn inverse_then_rsk_is_identity((p, steps) in with_filling()) {
        let an = Analysis::new(p).unwrap();
        // Build an order-reversing filling from the top down.
        let poset = an.poset();
        let mut s = vec![Rational::from_integer(0.into()); poset.len()];
        for q in poset.bottom_up_order().into_iter().rev() {
            let above = poset.upper_covers(q).iter().map(|&u| s[u].clone()).max();
            s[q] = above.unwrap_or_else(|| Rational::from_integer(0.into())) + &steps[q];
        }
        let s = Filling::new(s);
        let t = inverse_rsk(&an, &s, None).unwrap();
        prop_assert!(t.is_nonnegative());
        prop_assert_eq!(rsk(&an, &t, None).unwrap(), s);
    }

    #[test]
    fn toggle_is_an_involution((p, t) in with_filling(), pick in any::<prop::sample::Index>()) {
        let q = pick.index(p.len());
        let s = Filling::new(t);
        prop_assert_eq!(toggle(&toggle(&s, &p, q), &p, q), s);
    }

    #[test]
    fn order_relation_is_a_reduced_partial_order(p in random_poset()) {
        for a in p.elements() {
            prop_assert!(p.leq(a, a));
            for b in p.elements() {
                if a != b && p.leq(a, b) {
                    prop_assert!(!p.leq(b, a));
                }
                for c in p.elements() {
                    if p.leq(a, b) && p.leq(b, c) {
                        prop_assert!(p.leq(a, c));
                    }
                }
            }
        }
        for &(a, b) in p.cover_pairs() {
            prop_assert!(p.lt(a, b));
            prop_assert!(!p.elements().any(|c| p.lt(a, c) && p.lt(c, b)));
        }
    }

    #[test]
    fn poset_text_round_trips(p in random_poset()) {
        let text = write_poset(&p);
        let back = parse_poset(&text).unwrap();
        prop_assert_eq!(write_poset(&back), text);
        prop_assert_eq!(back, p);
    }
}
