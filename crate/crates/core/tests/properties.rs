use std::collections::BTreeSet;

use pmtutte::basis::{enumerate_bases, is_basis, BasisVector};
use pmtutte::polyalg::rational;
use pmtutte::polycore::{dual_polymatroid, permute_rank, translate_rank, validate_rank_function, Polymatroid};
use pmtutte::tutte::{interior_polynomial, jp_polynomial};
use pmtutte::verify::{random_polymatroid, GeneratorKind, InstanceSpec};
use proptest::prelude::*;

fn kind() -> impl Strategy<Value = GeneratorKind> {
    proptest::sample::select(GeneratorKind::ALL.to_vec())
}

fn instance() -> impl Strategy<Value = Polymatroid> {
    (any::<u64>(), 1usize..=5, 1usize..=4, kind()).prop_map(|(seed, n, max_rank, kind)| {
        random_polymatroid(&InstanceSpec {
            seed,
            n,
            max_rank,
            kind,
            uniform_rank: None,
        })
        .expect("generator output is valid")
    })
}

fn basis_set(p: &Polymatroid) -> BTreeSet<Vec<i64>> {
    enumerate_bases(p).into_iter().map(|b| b.0).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn generated_instances_validate(seed in any::<u64>(), n in 1usize..=6, kind in kind()) {
        let spec = InstanceSpec { seed, n, max_rank: 5, kind, uniform_rank: None };
        let p = random_polymatroid(&spec).unwrap();
        prop_assert!(validate_rank_function(p.rank()).is_polymatroid());
        prop_assert_eq!(&p, &random_polymatroid(&spec).unwrap());
    }

    #[test]
    fn dual_bases_are_negated(p in instance()) {
        let negated: BTreeSet<Vec<i64>> =
            basis_set(&p).into_iter().map(|a| a.iter().map(|x| -x).collect()).collect();
        prop_assert_eq!(basis_set(&dual_polymatroid(&p)), negated);
    }

    #[test]
    fn translation_shifts_bases(p in instance(), shift in proptest::collection::vec(-4i64..=4, 5)) {
        let by = &shift[..p.n()];
        let shifted: BTreeSet<Vec<i64>> = basis_set(&p)
            .into_iter()
            .map(|a| a.iter().zip(by).map(|(x, v)| x + v).collect())
            .collect();
        prop_assert_eq!(basis_set(&translate_rank(&p, by).unwrap()), shifted);
    }

    #[test]
    fn permutation_relabels_bases(p in instance(), keys in proptest::collection::vec(any::<u32>(), 5)) {
        let n = p.n();
        let mut perm: Vec<usize> = (0..n).collect();
        perm.sort_by_key(|&i| (keys[i], i));
        let moved: BTreeSet<Vec<i64>> = basis_set(&p)
            .into_iter()
            .map(|a| {
                let mut b = vec![0; n];
                for i in 0..n {
                    b[perm[i]] = a[i];
                }
                b
            })
            .collect();
        let q = permute_rank(&p, &perm).unwrap();
        prop_assert_eq!(basis_set(&q), moved);
        prop_assert_eq!(jp_polynomial(&q).unwrap(), jp_polynomial(&p).unwrap());
    }

    #[test]
    fn enumeration_is_sorted_and_sound(p in instance()) {
        let bases = enumerate_bases(&p);
        prop_assert!(!bases.is_empty());
        prop_assert!(bases.windows(2).all(|w| w[0] < w[1]));
        for a in &bases {
            prop_assert!(is_basis(&p, a));
        }
    }

    #[test]
    fn jp_counts_bases(p in instance()) {
        let count = enumerate_bases(&p).len() as i64;
        let j = jp_polynomial(&p).unwrap();
        let one = rational(1, 1);
        prop_assert_eq!(j.evaluate(&one, &one), rational(count, 1));
        prop_assert_eq!(interior_polynomial(&p).unwrap().evaluate(&one), rational(count, 1));
        prop_assert_eq!(jp_polynomial(&dual_polymatroid(&p)).unwrap(), j.swap_xy());
    }
}

#[test]
fn basis_vector_display_is_one_line() {
    assert_eq!(BasisVector(vec![2, 1, 0]).to_string(), "(2,1,0)");
}
