use minvan::arith::gcd;
use minvan::cyclotomic::{is_vanishing, residue_at, residue_in};
use minvan::minimality::{is_minimal_vanishing, is_minimal_vanishing_bruteforce};
use minvan::typegen::partitions_into_parts;
use minvan::{Root, Sorou};
use num_bigint::BigInt;
use proptest::prelude::*;

/// Roots of order dividing 840, so every sum has a small order.
fn root() -> impl Strategy<Value = Root> {
    let orders: Vec<u64> = (1..=840).filter(|d| 840 % d == 0).collect();
    (prop::sample::select(orders), 0i64..840).prop_map(|(n, k)| Root::nu(n, k))
}

/// Roots of order dividing 210; sums of these have squarefree order.
fn sf_root() -> impl Strategy<Value = Root> {
    let orders: Vec<u64> = (1..=210).filter(|d| 210 % d == 0).collect();
    (prop::sample::select(orders), 0i64..210).prop_map(|(n, k)| Root::nu(n, k))
}

fn sf_sorou(max: usize) -> impl Strategy<Value = Sorou> {
    prop::collection::vec(sf_root(), 1..=max).prop_map(Sorou::from_roots)
}

fn sorou(max: usize) -> impl Strategy<Value = Sorou> {
    prop::collection::vec(root(), 1..=max).prop_map(Sorou::from_roots)
}

/// A vanishing sum built from rotated prime polygons.
fn vanishing() -> impl Strategy<Value = Sorou> {
    prop::collection::vec((prop::sample::select(vec![2u64, 3, 5, 7]), root()), 1..=3).prop_map(|parts| {
        parts
            .into_iter()
            .fold(Sorou::empty(), |acc, (p, z)| acc.concat(&Sorou::r_p(p).rotate(z)))
    })
}

proptest! {
    #[test]
    fn text_round_trip(s in sorou(10)) {
        let text = s.to_string();
        prop_assert_eq!(text.parse::<Sorou>().unwrap(), s);
    }

    #[test]
    fn canonical_form_is_a_rotation_invariant(s in sorou(8), z in root()) {
        let c = s.canonicalize();
        prop_assert_eq!(c.canonicalize(), c.clone());
        prop_assert_eq!(s.rotate(z).canonicalize(), c.clone());
        prop_assert!(c.contains(Root::ONE));
        prop_assert!(s.equivalent(&s.rotate(z)));
    }

    #[test]
    fn rotation_keeps_shape(s in sorou(8), z in root()) {
        let r = s.rotate(z);
        prop_assert_eq!(r.weight(), s.weight());
        prop_assert_eq!(r.height(), s.height());
        prop_assert_eq!(r.relative_order().unwrap(), s.relative_order().unwrap());
    }

    #[test]
    fn table_and_division_residues_agree(s in sorou(8)) {
        let n = s.order().unwrap();
        let fast = residue_at(&s, n);
        let slow = residue_in::<BigInt>(&s, n).unwrap();
        let fast: Vec<BigInt> = fast.coefficients().iter().map(|&c| c.into()).collect();
        prop_assert_eq!(fast.as_slice(), slow.coefficients());
    }

    #[test]
    fn vanishing_survives_rotation_and_galois(s in vanishing(), z in root(), k in 1i64..60) {
        prop_assert!(is_vanishing(&s).unwrap());
        prop_assert!(is_vanishing(&s.rotate(z)).unwrap());
        let n = s.order().unwrap() as i64;
        prop_assume!(gcd(k as u64, n as u64) == 1);
        prop_assert!(is_vanishing(&s.galois(k)).unwrap());
    }

    #[test]
    fn sums_of_polygons_are_not_minimal(s in vanishing()) {
        let v = is_minimal_vanishing(&s).unwrap();
        prop_assert!(v.vanishing);
        prop_assert_eq!(v.minimal, is_minimal_vanishing_bruteforce(&s).unwrap());
        let single = [2, 3, 5, 7].iter().any(|&p| s.weight() == p && s.equivalent(&Sorou::r_p(p as u64)));
        prop_assert_eq!(v.minimal, single);
    }

    #[test]
    fn subsidiary_decomposition_round_trips(s in sf_sorou(8)) {
        prop_assume!(s.relative_order().unwrap() > 1);
        let d = s.to_subsidiary().unwrap();
        prop_assert_eq!(d.parts.len() as u64, d.top_prime);
        prop_assert_eq!(d.parts.iter().map(Sorou::weight).sum::<usize>(), s.weight());
        prop_assert!(Sorou::from_subsidiary(&d).equivalent(&s));
    }

    #[test]
    fn minimal_verdicts_agree(s in sf_sorou(7)) {
        prop_assert_eq!(
            is_minimal_vanishing(&s).unwrap().minimal,
            is_minimal_vanishing_bruteforce(&s).unwrap()
        );
    }

    #[test]
    fn partitions_are_valid(n in 1usize..18, k in 1usize..10) {
        for p in partitions_into_parts(n, k) {
            prop_assert_eq!(p.len(), k);
            prop_assert_eq!(p.iter().sum::<usize>(), n);
            prop_assert!(p.windows(2).all(|w| w[0] >= w[1]) && p[k - 1] >= 1);
        }
    }

    #[test]
    fn parity_is_rotation_invariant(s in sf_sorou(8), z in root()) {
        prop_assert_eq!(s.parity().unwrap(), s.rotate(z).parity().unwrap());
    }
}
