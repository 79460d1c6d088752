use std::cmp::Ordering;
use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

use positroid_core::afflag::{flag_from_rows, schubert_dims};
use positroid_core::algebra::{strip_ring, Poly};
use positroid_core::complex::minimal_transversals;
use positroid_core::coxeter::{word_eval, AffinePermutation, Side, Word};
use positroid_core::diagrams::{cauchon_le, le_cauchon, CauchonDiagram};
use positroid_core::linalg::rank_of_columns;
use positroid_core::strip::strip_layout;

fn lambda_strategy() -> impl Strategy<Value = (Vec<usize>, usize, usize)> {
    (3usize..=7)
        .prop_flat_map(|n| (Just(n), 1..n))
        .prop_flat_map(|(n, k)| (Just(n), Just(k), proptest::sample::subsequence((1..=n).collect::<Vec<_>>(), k)))
        .prop_map(|(n, k, lam)| (lam, k, n))
}

/// Random valid Cauchon grid: a square turns black only when the rule allows.
fn cauchon_strategy() -> impl Strategy<Value = CauchonDiagram> {
    (1usize..=4, 1usize..=4).prop_flat_map(|(m, p)| {
        proptest::collection::vec(any::<bool>(), m * p).prop_map(move |bits| {
            let mut black = BTreeSet::new();
            for i in 1..=m {
                for j in 1..=p {
                    let left = (1..j).all(|jj| black.contains(&(i, jj)));
                    let above = (1..i).all(|ii| black.contains(&(ii, j)));
                    if bits[(i - 1) * p + j - 1] && (left || above) {
                        black.insert((i, j));
                    }
                }
            }
            CauchonDiagram::new(m, p, black).unwrap()
        })
    })
}

fn small_rational() -> impl Strategy<Value = BigRational> {
    (-9i64..=9, 1i64..=4).prop_map(|(a, b)| BigRational::new(BigInt::from(a), BigInt::from(b)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn strip_order_is_a_monomial_order(
        (lam, k, n) in lambda_strategy(),
        seeds in proptest::collection::vec(proptest::collection::vec(0u32..3, 32), 3),
    ) {
        let ring = strip_ring(&strip_layout(&lam, k, n).unwrap()).unwrap();
        let nv = ring.nvars();
        let [a, b, c] = [&seeds[0], &seeds[1], &seeds[2]].map(|s| s[..nv].to_vec());
        let ab = ring.cmp(&a, &b);
        let shifted = |x: &[u32]| x.iter().zip(&c).map(|(p, q)| p + q).collect::<Vec<u32>>();
        prop_assert_eq!(ring.cmp(&shifted(&a), &shifted(&b)), ab);
        let (da, db) = (a.iter().sum::<u32>(), b.iter().sum::<u32>());
        if da != db {
            prop_assert_eq!(ab, da.cmp(&db));
        }
        if c.iter().take(nv).any(|&e| e > 0) {
            prop_assert_eq!(ring.cmp(&shifted(&a), &a), Ordering::Greater);
        }
    }

    #[test]
    fn cauchon_le_round_trip(c in cauchon_strategy()) {
        prop_assert!(c.is_valid());
        let d = cauchon_le(&c);
        prop_assert!(d.is_valid());
        prop_assert_eq!(le_cauchon(&d).unwrap(), c);
    }

    #[test]
    fn word_length_bounds(letters in proptest::collection::vec(0usize..4, 0..12)) {
        let w = Word::affine(&letters, 4).unwrap();
        let (left, reduced) = word_eval(&w, Side::Left);
        let (right, _) = word_eval(&w, Side::Right);
        prop_assert!(left.length() <= letters.len());
        prop_assert_eq!(reduced, left.length() == letters.len());
        // the right product of a word is the left product of its reverse
        let rev: Vec<usize> = letters.iter().rev().copied().collect();
        prop_assert_eq!(word_eval(&Word::affine(&rev, 4).unwrap(), Side::Left).0, right);
    }

    #[test]
    fn affine_inverse(letters in proptest::collection::vec(0usize..5, 0..14)) {
        let (e, _) = word_eval(&Word::affine(&letters, 5).unwrap(), Side::Left);
        let a: AffinePermutation = e.as_affine().unwrap().clone();
        prop_assert!(a.compose(&a.inverse()).is_identity());
        prop_assert_eq!(a.inverse().length(), a.length());
        prop_assert_eq!(AffinePermutation::new(a.window().to_vec()).unwrap(), a);
    }

    #[test]
    fn transversal_duality(edges in proptest::collection::vec(proptest::collection::btree_set(0u8..6, 1..4), 1..5)) {
        let minimal: Vec<BTreeSet<u8>> = edges
            .iter()
            .filter(|e| !edges.iter().any(|f| f != *e && f.is_subset(e)))
            .cloned()
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        let mut back = minimal_transversals(&minimal_transversals(&edges));
        back.sort();
        prop_assert_eq!(back, minimal);
    }

    #[test]
    fn specialized_flags_validate((lam, k, n) in lambda_strategy(), entries in proptest::collection::vec(small_rational(), 49)) {
        let mut it = entries.into_iter();
        let m: Vec<Vec<BigRational>> = (1..=k)
            .map(|r| {
                (1..=n)
                    .map(|c| match lam.iter().position(|&l| l == c) {
                        Some(rr) => BigRational::from_integer(BigInt::from((rr + 1 == r) as i64)),
                        None => it.next().unwrap(),
                    })
                    .collect()
            })
            .collect();
        let flag = flag_from_rows(&m, &lam).unwrap();
        prop_assert_eq!(flag.validate(), Ok(()));
        for i in 1..=n {
            for len in 0..n {
                let cols: Vec<usize> = (0..len).map(|t| (i - 1 + t) % n).collect();
                let (_, down) = schubert_dims(&flag.lattices[i - 1], len as i64 + 1).unwrap();
                prop_assert_eq!(down, k - rank_of_columns(&m, &cols));
            }
        }
    }

    #[test]
    fn evaluation_is_multiplicative(
        a in proptest::collection::vec((proptest::collection::vec(0u32..3, 3), -5i64..5), 0..5),
        b in proptest::collection::vec((proptest::collection::vec(0u32..3, 3), -5i64..5), 0..5),
        point in proptest::collection::vec(small_rational(), 3),
    ) {
        let build = |terms: &[(Vec<u32>, i64)]| {
            terms.iter().fold(Poly::zero(3), |acc, (m, c)| &acc + &Poly::term(m.clone(), BigInt::from(*c)))
        };
        let (pa, pb) = (build(&a), build(&b));
        prop_assert_eq!((&pa * &pb).eval(&point), pa.eval(&point) * pb.eval(&point));
        prop_assert_eq!((&pa - &pa).is_zero(), true);
    }
}
