use super::*;
use crate::chartab::{character_table_generic, DEFAULT_MAX_CLASSES};
use crate::groups::{cyclic, sl2, symmetric, Group, DEFAULT_MAX_ORDER as B};
use proptest::prelude::*;

fn table(g: &Group) -> CharacterTable {
    character_table_generic(g, DEFAULT_MAX_CLASSES).unwrap()
}

fn ints(chi: &ClassFunction) -> Vec<i64> {
    chi.values().iter().map(|v| v.to_rational().unwrap().to_i64().unwrap()).collect()
}

fn s3() -> (Group, CharacterTable) {
    let g = symmetric(3, B).unwrap();
    let t = table(&g);
    (g, t)
}

#[test]
fn s3_examples() {
    let (g, t) = s3();
    let std = t.irreducibles().iter().find(|c| c.dim() == Some(2)).unwrap().clone();
    // rows sort lexicographically, so the sign character precedes the trivial one
    let sign = t.irreducible(0).clone();
    assert_eq!(ints(&sign), vec![1, 1, -1]);
    assert_eq!(ints(&std), vec![2, -1, 0]);
    assert_eq!(ints(&cf_tensor(&std, &std).unwrap()), vec![4, 1, 0]);
    assert!(cf_sub(&std, &std).unwrap().is_zero());
    let triv = ClassFunction::trivial(&g);
    assert_eq!(cf_tensor(&triv, &std).unwrap(), std);
    assert_eq!(ints(&adams(&std, 2))[2], 2);
    assert_eq!(adams(&std, 0), ClassFunction::constant(&g, 2));
    assert_eq!(exterior_power(&std, 2), sign);
    assert!(exterior_power(&std, 3).is_zero());
    let sym2 = symmetric_power(&std, 2);
    assert_eq!(ints(&sym2), vec![3, 0, 1]);
    let parts = decompose(&sym2, &t).unwrap();
    assert_eq!(parts, vec![(1, 1), (2, 1)]);
    assert_eq!(symmetric_power(&std, 1), std);

    let three = eigen_multiset(&std, 1).unwrap();
    assert_eq!(three.order(), 3);
    assert_eq!(three.multiplicities().iter().map(|(&j, &m)| (j, m)).collect::<Vec<_>>(), vec![(1, 1), (2, 1)]);
    assert_eq!(eigen_multiset(&triv, 2).unwrap().multiplicities().get(&0), Some(&1));
}

#[test]
fn adams_minus_one_is_conjugation() {
    let g = cyclic(5, B).unwrap();
    for chi in table(&g).irreducibles() {
        let conj: Vec<CycNum> = chi.values().iter().map(CycNum::conj).collect();
        assert_eq!(adams(chi, -1).values(), conj.as_slice());
        assert_eq!(adams(chi, 2), cf_tensor(chi, chi).unwrap());
    }
}

#[test]
fn regular_character_of_c2() {
    let g = cyclic(2, B).unwrap();
    let e = eigen_multiset(&ClassFunction::regular(&g), 1).unwrap();
    assert_eq!(e.multiplicity(0), 1);
    assert_eq!(e.multiplicity(1), 1);
    let t = table(&g);
    let reg = decompose(&ClassFunction::regular(&g), &t).unwrap();
    assert_eq!(reg, vec![(0, 1), (1, 1)]);
}

#[test]
fn virtual_inputs_are_rejected() {
    let (g, t) = s3();
    let std = t.irreducible(2).clone();
    let virt = cf_sub(&ClassFunction::trivial(&g), &std).unwrap();
    assert_eq!(eigen_multiset(&virt, 1).unwrap_err(), LambdaError::BadMultiplicity { class: 1 });
    assert!(!is_genuine(&virt, &t).unwrap());
    assert_eq!(eigen_multiset_checked(&virt, 0, &t).unwrap_err(), LambdaError::NotGenuine);
    let half = cf_scale(&std, &Rational::new(1, 2));
    assert!(!is_genuine(&half, &t).unwrap());
}

#[test]
fn sl2_f5_symmetric_powers() {
    let g = sl2(5, B).unwrap();
    let t = table(&g);
    let two: Vec<usize> = (0..t.len()).filter(|&i| t.irreducible(i).dim() == Some(2)).collect();
    assert_eq!(two.len(), 2);
    for &i in &two {
        let sigma = t.irreducible(i);
        let s3 = symmetric_power(sigma, 3);
        let s5 = symmetric_power(sigma, 5);
        assert_eq!(decompose(&s3, &t).unwrap().len(), 1);
        let d5 = decompose(&s5, &t).unwrap();
        assert_eq!(d5.len(), 1);
        assert_eq!(t.irreducible(d5[0].0).dim(), Some(6));
        // Sym²(Sym²) = Sym⁴ + det²
        let lhs = symmetric_power(&symmetric_power(sigma, 2), 2);
        let det = determinant(sigma).unwrap();
        let rhs = cf_add(&symmetric_power(sigma, 4), &cf_tensor(&det, &det).unwrap()).unwrap();
        assert!(decompose(&cf_sub(&lhs, &rhs).unwrap(), &t).unwrap().is_empty());
    }
}

/// Elementary and complete symmetric functions of an explicit eigenvalue list.
fn brute_powers(eigs: &[CycNum], k: usize) -> (Vec<CycNum>, Vec<CycNum>) {
    let mut e = vec![CycNum::zero(); k + 1];
    let mut h = vec![CycNum::zero(); k + 1];
    e[0] = CycNum::one();
    h[0] = CycNum::one();
    for x in eigs {
        for i in (1..=k).rev() {
            e[i] = &e[i] + &(&e[i - 1] * x);
        }
        for i in 1..=k {
            h[i] = &h[i] + &(&h[i - 1] * x);
        }
    }
    (e, h)
}

#[test]
fn newton_matches_brute_force_small() {
    for g in [symmetric(4, B).unwrap(), sl2(3, B).unwrap()] {
        let t = table(&g);
        for chi in t.irreducibles() {
            let ext = exterior_powers(chi, 4);
            let sym = symmetric_powers(chi, 4);
            for c in 0..g.num_classes() {
                let ms = eigen_multiset(chi, c).unwrap();
                assert_eq!(ms.total() as i64, chi.dim().unwrap());
                assert_eq!(&ms.sum(), chi.value(c));
                assert_eq!(ms.product(), *determinant(chi).unwrap().value(c));
                let (e, h) = brute_powers(&ms.eigenvalues(), 4);
                for k in 0..=4 {
                    assert_eq!(ext[k].value(c), &e[k]);
                    assert_eq!(sym[k].value(c), &h[k]);
                }
            }
        }
    }
}

#[test]
fn normalized_comparison_across_orders() {
    let a = EigenMultiset::new(2, [(1, 1)].into_iter().collect());
    let b = EigenMultiset::new(4, [(2, 1), (1, 3)].into_iter().collect());
    assert!(a.is_submultiset_of(&b));
    assert!(!b.is_submultiset_of(&a));
    assert_eq!(b.deficit_against(&a), Some(Deficit { order: 4, exponent: 1, needed: 3, available: 0 }));
    assert_eq!(a.rotate(2, 1).multiplicity(0), 1);
}

fn genuine_sum(t: &CharacterTable, picks: &[usize]) -> ClassFunction {
    let mut acc = ClassFunction::constant(t.group(), 0);
    for &i in picks {
        acc = cf_add(&acc, t.irreducible(i % t.len())).unwrap();
    }
    acc
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn lemma_identity_random(w in proptest::collection::vec(0usize..64, 1..3), a1 in 0usize..64, a2 in 0usize..64) {
        let g = symmetric(4, B).unwrap();
        let t = table(&g);
        let ones: Vec<usize> = (0..t.len()).filter(|&i| t.irreducible(i).dim() == Some(1)).collect();
        let twos: Vec<usize> = (0..t.len()).filter(|&i| t.irreducible(i).dim() == Some(2)).collect();
        let a = if a1 % 2 == 0 {
            t.irreducible(twos[a2 % twos.len()]).clone()
        } else {
            cf_add(t.irreducible(ones[a1 % ones.len()]), t.irreducible(ones[a2 % ones.len()])).unwrap()
        };
        let w = genuine_sum(&t, &w);
        let v = cf_add(&w, &a).unwrap();
        let lhs = cf_add(&cf_tensor(&v, &w).unwrap(), &exterior_power(&a, 2)).unwrap();
        let rhs = cf_add(&exterior_power(&v, 2), &symmetric_power(&w, 2)).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn sum_rule_random(picks in proptest::collection::vec(0usize..64, 1..4)) {
        let g = sl2(3, B).unwrap();
        let t = table(&g);
        let chi = genuine_sum(&t, &picks);
        let d = chi.dim().unwrap() as usize;
        prop_assume!(d <= 6);
        let ext = exterior_powers(&chi, d + 1);
        prop_assert!(ext[d + 1].is_zero());
        for c in 0..g.num_classes() {
            let (e, _) = brute_powers(&eigen_multiset(&chi, c).unwrap().eigenvalues(), d);
            for k in 0..=d {
                prop_assert_eq!(ext[k].value(c), &e[k]);
            }
        }
    }
}
