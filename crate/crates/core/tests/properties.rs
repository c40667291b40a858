use num_bigint::BigUint;
use num_integer::Integer;
use proptest::prelude::*;

use rational_forest::trees::value_at;
use rational_forest::{
    address_to_path, locate, locate_by_walk, path_to_address, s_locate, s_path_to_cw_path,
    s_to_cw_index, sb_to_sc, sc_to_sb, BitPath, ContinuedFraction, Rational, TreeKind,
};

fn fraction(max: u64) -> impl Strategy<Value = Rational> {
    (1..=max, 1..=max)
        .prop_filter("reduced", |(n, d)| n.gcd(d) == 1)
        .prop_map(|(n, d)| Rational::new(n, d).unwrap())
}

fn tree() -> impl Strategy<Value = TreeKind> {
    prop::sample::select(TreeKind::ALL.to_vec())
}

fn path(max_len: usize) -> impl Strategy<Value = BitPath> {
    prop::collection::vec(any::<bool>(), 1..=max_len).prop_map(BitPath::from_bits)
}

proptest! {
    #[test]
    fn locate_agrees_with_walk(q in fraction(1_000_000), t in tree()) {
        prop_assume!(t != TreeKind::S || q.numer() < q.denom());
        let found = locate(t, &q).unwrap();
        prop_assert_eq!(&found.path, &locate_by_walk(t, &q).unwrap());
        prop_assert_eq!(value_at(t, &found.path), q);
        prop_assert_eq!(path_to_address(&found.path, t), found.address);
    }

    #[test]
    fn every_path_names_a_vertex(p in path(40), t in tree()) {
        let q = value_at(t, &p);
        prop_assert_eq!(locate(t, &q).unwrap().path, p);
    }

    #[test]
    fn sb_sc_are_inverse(p in path(64)) {
        prop_assert_eq!(sc_to_sb(&sb_to_sc(&p).unwrap()).unwrap(), p.clone());
        prop_assert_eq!(sb_to_sc(&sc_to_sb(&p).unwrap()).unwrap(), p.clone());
        prop_assert_eq!(value_at(TreeKind::Sc, &sb_to_sc(&p).unwrap()), value_at(TreeKind::Sb, &p));
    }

    #[test]
    fn s_to_cw_index_matches_cw_path(x in prop::collection::vec(any::<bool>(), 0..=80)) {
        let x = BitPath::from_bits(x);
        let addr = path_to_address(&x, TreeKind::S);
        let y = s_path_to_cw_path(&x);
        prop_assert_eq!(y.len(), x.len() + 1);
        prop_assert_eq!(y.value() + 1u32, s_to_cw_index(addr.level, &addr.index).unwrap());
        prop_assert_eq!(value_at(TreeKind::Cw, &y), value_at(TreeKind::S, &x));
    }

    #[test]
    fn s_level_is_term_sum_minus_one(q in fraction(1_000_000)) {
        prop_assume!(q.numer() < q.denom());
        let r = s_locate(&q).unwrap();
        let cf = ContinuedFraction::expand(&q).unwrap();
        prop_assert_eq!(BigUint::from(r.address.level + 1), cf.term_sum());
        prop_assert_eq!(address_to_path(&r.address).unwrap(), r.path);
    }

    #[test]
    fn sc_reciprocals_differ_in_first_digit(q in fraction(100_000)) {
        prop_assume!(!q.is_one());
        let a = locate(TreeKind::Sc, &q).unwrap().path;
        let b = locate(TreeKind::Sc, &q.recip()).unwrap().path;
        prop_assert_eq!(a.len(), b.len());
        prop_assert_ne!(a.bits()[0], b.bits()[0]);
        prop_assert_eq!(&a.bits()[1..], &b.bits()[1..]);
    }
}
