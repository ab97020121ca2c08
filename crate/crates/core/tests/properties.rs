use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use supersym::exact_linalg::{rank_exact, reduce_mod_p};
use supersym::superalgebra::normalize_monomial;
use supersym::{
    divided_power, star_action, superderive, Axis, BasicTableau, DerivationSpec, Expander,
    FormalSum, MultiIndex, Partition, Perm, Side, Signature, Straightener, Symbol, Variant,
};

fn signature() -> impl Strategy<Value = Signature> {
    (0usize..=3, 0usize..=2)
        .prop_filter("non-empty alphabet", |(m, n)| m + n > 0)
        .prop_map(|(m, n)| Signature::new(m, n).unwrap())
}

fn word(sig: Signature, r: usize) -> impl Strategy<Value = MultiIndex> {
    let k = sig.alphabet_len() as u16;
    prop::collection::vec(1..=k, r).prop_map(|w| MultiIndex::plain(&w))
}

fn perm(r: usize) -> impl Strategy<Value = Perm> {
    Just((0..r).collect::<Vec<usize>>())
        .prop_shuffle()
        .prop_map(|v| Perm::from_images(v).unwrap())
}

fn partition(max_size: usize) -> impl Strategy<Value = Partition> {
    prop::collection::vec(1usize..=max_size, 1..=max_size)
        .prop_map(|mut parts| {
            parts.sort_unstable_by(|a, b| b.cmp(a));
            parts
        })
        .prop_filter("size bound", move |p| p.iter().sum::<usize>() <= max_size)
        .prop_map(|p| Partition::new(p).unwrap())
}

/// A signature, a shape and two words fitting it.
fn pair_case(
    max_size: usize,
) -> impl Strategy<Value = (Signature, Partition, MultiIndex, MultiIndex)> {
    (signature(), partition(max_size)).prop_flat_map(|(sig, shape)| {
        let r = shape.size();
        (Just(sig), Just(shape), word(sig, r), word(sig, r))
    })
}

fn bump(s: &FormalSum<BigInt>, k: i64) -> FormalSum<BigInt> {
    s.scale(&BigInt::from(k))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn star_action_is_a_right_action((sig, j, pi, sigma) in signature().prop_flat_map(|sig| (1usize..=7).prop_flat_map(move |r| (Just(sig), word(sig, r), perm(r), perm(r))))) {
        let a = star_action(&j, &pi, &sig).unwrap();
        let b = star_action(&a.word, &sigma, &sig).unwrap();
        let c = star_action(&j, &pi.compose(&sigma), &sig).unwrap();
        prop_assert_eq!(&c.word, &b.word);
        prop_assert_eq!(c.sign, a.sign * b.sign);
    }

    #[test]
    fn chi_is_invariant_under_simultaneous_action((sig, i, j, pi) in signature().prop_flat_map(|sig| (1usize..=6).prop_flat_map(move |r| (Just(sig), word(sig, r), word(sig, r), perm(r))))) {
        let a = star_action(&i, &pi, &sig).unwrap();
        let b = star_action(&j, &pi, &sig).unwrap();
        let base = normalize_monomial(&i, &j, &sig).unwrap();
        let moved = normalize_monomial(&a.word, &b.word, &sig).unwrap();
        match (base, moved) {
            (None, None) => {}
            (Some((s, m)), Some((t, n))) => {
                prop_assert_eq!(m, n);
                prop_assert_eq!(s, t * a.sign * b.sign);
            }
            other => prop_assert!(false, "vanishing differs: {:?}", other),
        }
    }

    #[test]
    fn variants_agree((sig, shape, i, j) in pair_case(5)) {
        let e = Expander::new(BasicTableau::new(shape), sig);
        let base = e.expand(&i, &j, Variant::RowThenColumn).unwrap();
        for v in [Variant::RightComposed, Variant::LeftComposed] {
            prop_assert_eq!(&e.expand(&i, &j, v).unwrap(), &base);
        }
    }

    #[test]
    fn line_groups_act_by_signs((sig, shape, i, j) in pair_case(5), pick in any::<prop::sample::Index>()) {
        let t = BasicTableau::new(shape);
        let e = Expander::new(t.clone(), sig);
        let base = e.expand(&i, &j, Variant::default()).unwrap();
        let cols: Vec<(Perm, i8)> = t.iterate_group(Axis::Column).collect();
        let (g, sgn) = &cols[pick.index(cols.len())];
        let a = star_action(&j, g, &sig).unwrap();
        prop_assert_eq!(bump(&e.expand(&i, &a.word, Variant::default()).unwrap(), a.sign.into()), bump(&base, (*sgn).into()));
        let rows: Vec<(Perm, i8)> = t.iterate_group(Axis::Row).collect();
        let (g, _) = &rows[pick.index(rows.len())];
        let a = star_action(&i, g, &sig).unwrap();
        prop_assert_eq!(bump(&e.expand(&a.word, &j, Variant::default()).unwrap(), a.sign.into()), base);
    }

    #[test]
    fn straightening_reexpands((sig, shape, i, j) in pair_case(4).prop_filter("hook", |(s, p, _, _)| p.is_hook(s.m, s.n))) {
        let st = Straightener::<BigRational>::new(BasicTableau::new(shape.clone()), sig);
        let res = st.straighten_pair(&i, &j).unwrap();
        prop_assert!(res.all_semistandard(st.tableau(), &sig));
        prop_assert_eq!(st.reexpand(&res).unwrap(), st.expander().expand(&i, &j, Variant::default()).unwrap().to_rational());
        prop_assert!(st.triangularity_violations(&i, &j, &res).unwrap().is_empty());

        let zt = Straightener::<BigInt>::new(BasicTableau::new(shape), sig);
        let zres = zt.straighten_pair(&i, &j).unwrap();
        prop_assert_eq!(zt.reexpand(&zres).unwrap(), zt.expander().modified(&i, &j).unwrap());
    }

    #[test]
    fn odd_derivations_square_to_zero((sig, shape, i, j) in pair_case(4), p in 1u16..=5, q in 1u16..=5, left in any::<bool>()) {
        let k = sig.alphabet_len() as u16;
        let (p, q) = ((p - 1) % k + 1, (q - 1) % k + 1);
        let side = if left { Side::Left } else { Side::Right };
        let d = DerivationSpec::new(Symbol::Plain(p), Symbol::Plain(q), side, &sig).unwrap();
        let s = Expander::new(BasicTableau::new(shape), sig).expand(&i, &j, Variant::default()).unwrap();
        let once = superderive(&d, &s, &sig);
        if d.parity(&sig) == 1 {
            prop_assert!(superderive(&d, &once, &sig).is_zero());
        } else {
            // D^(1) D^(t) = (t+1) D^(t+1) for even D
            let sq = divided_power(&d, 2, &s.to_rational(), &sig).unwrap();
            let twice = superderive(&d, &once, &sig).to_rational();
            prop_assert_eq!(sq.scale(&BigRational::from_integer(2.into())), twice);
        }
    }

    #[test]
    fn derivations_are_linear((sig, shape, i, j) in pair_case(3), (a, b) in (-3i64..=3, -3i64..=3)) {
        let e = Expander::new(BasicTableau::new(shape), sig);
        let x = e.expand(&i, &j, Variant::default()).unwrap();
        let y = e.expand(&j, &i, Variant::default()).unwrap();
        let k = sig.alphabet_len() as u16;
        let d = DerivationSpec::new(Symbol::Plain(1), Symbol::Plain(k), Side::Left, &sig).unwrap();
        let lhs = superderive(&d, &bump(&x, a).add(&bump(&y, b)), &sig);
        let rhs = bump(&superderive(&d, &x, &sig), a).add(&bump(&superderive(&d, &y, &sig), b));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn ranks_agree_across_coefficient_rings((sig, shape, i, j) in pair_case(3), extra in prop::collection::vec(any::<prop::sample::Index>(), 0..6)) {
        let e = Expander::new(BasicTableau::new(shape), sig);
        let words = MultiIndex::all_plain(&sig, i.len());
        let mut rows = vec![e.expand(&i, &j, Variant::default()).unwrap()];
        for w in extra {
            rows.push(e.expand(&words[w.index(words.len())], &j, Variant::default()).unwrap());
        }
        let rational: Vec<FormalSum<BigRational>> = rows.iter().map(FormalSum::to_rational).collect();
        let big = rank_exact(&rows);
        prop_assert_eq!(big, rank_exact(&rational));
        for p in [3u64, 5, 1_000_003] {
            let reduced: Vec<_> = rows.iter().map(|s| reduce_mod_p(s, p).unwrap()).collect();
            prop_assert!(rank_exact(&reduced) <= big);
        }
        let large: Vec<_> = rows.iter().map(|s| reduce_mod_p(s, 1_000_003).unwrap()).collect();
        prop_assert_eq!(rank_exact(&large), big);
    }

    #[test]
    fn exact_division_round_trips((sig, shape, i, j) in pair_case(4), d in 1i64..50) {
        let s = Expander::new(BasicTableau::new(shape), sig).expand(&i, &j, Variant::default()).unwrap();
        let d = BigInt::from(d);
        prop_assert_eq!(s.scale(&d).exact_divide(&d).unwrap(), s);
    }

    #[test]
    fn partitions_round_trip(p in partition(8)) {
        prop_assert_eq!(p.conjugate().conjugate(), p.clone());
        prop_assert_eq!(p.conjugate().size(), p.size());
        prop_assert_eq!(p.to_string().parse::<Partition>().unwrap(), p);
    }

    #[test]
    fn words_round_trip(w in prop::collection::vec((0u8..3, 1u16..12), 1..8)) {
        let w = MultiIndex::new(w.into_iter().map(|(k, x)| match k {
            0 => Symbol::Plain(x),
            1 => Symbol::ColoredEven(x),
            _ => Symbol::ColoredOdd(x),
        }).collect());
        prop_assert_eq!(w.to_string().parse::<MultiIndex>().unwrap(), w);
    }
}
