use super::*;
use crate::groups::{alternating, cyclic, gl2, sl2, symmetric, DEFAULT_MAX_ORDER as B};
use alloc::vec;

fn sorted_dims(t: &CharacterTable) -> Vec<i64> {
    let mut d = t.dims();
    d.sort_unstable();
    d
}

#[test]
fn inner_product_examples() {
    let g = symmetric(3, B).unwrap();
    let t = character_table_generic(&g, DEFAULT_MAX_CLASSES).unwrap();
    let triv = ClassFunction::trivial(&g);
    assert_eq!(char_inner(&triv, &triv).unwrap(), CycNum::one());
    let sign = t.irreducibles().iter().find(|c| c.dim() == Some(1) && *c != &triv).unwrap();
    assert_eq!(char_inner(&triv, sign).unwrap(), CycNum::zero());
    assert_eq!(char_inner(&ClassFunction::regular(&g), &triv).unwrap(), CycNum::one());

    let other = symmetric(3, B).unwrap();
    assert_eq!(char_inner(&triv, &ClassFunction::trivial(&other)).unwrap_err(), ChartabError::GroupMismatch);
}

#[test]
fn generic_small_tables() {
    let a5 = alternating(5, B).unwrap();
    let t = character_table_generic(&a5, DEFAULT_MAX_CLASSES).unwrap();
    assert_eq!(sorted_dims(&t), vec![1, 3, 3, 4, 5]);
    t.verify().unwrap();
    t.verify_columns().unwrap();
    // golden ratio values on 5-cycles
    let phi = (1.0 + 5f64.sqrt()) / 2.0;
    let five = (0..a5.num_classes()).find(|&c| a5.rep_order(c) == 5).unwrap();
    let has_phi = t.irreducibles().iter().any(|chi| {
        let (re, im) = chi.value(five).eval_with(|n, k| {
            let a = 2.0 * core::f64::consts::PI * k as f64 / n as f64;
            (a.cos(), a.sin())
        });
        (re - phi).abs() < 1e-9 && im.abs() < 1e-9
    });
    assert!(has_phi);

    let s = sl2(5, B).unwrap();
    let t = character_table_generic(&s, DEFAULT_MAX_CLASSES).unwrap();
    assert_eq!(sorted_dims(&t), vec![1, 2, 2, 3, 3, 4, 4, 5, 6]);
    t.verify().unwrap();

    let c4 = cyclic(4, B).unwrap();
    let t = character_table_generic(&c4, DEFAULT_MAX_CLASSES).unwrap();
    assert_eq!(t.len(), 4);
    assert!(t.irreducibles().iter().all(|c| c.dim() == Some(1) && c.values().iter().all(|v| v.conductor() == 4)));
    t.verify().unwrap();
}

#[test]
fn class_bound_is_enforced() {
    let g = cyclic(12, B).unwrap();
    assert_eq!(
        character_table_generic(&g, 10).unwrap_err(),
        ChartabError::TooManyClasses { classes: 12, bound: 10 }
    );
}

#[test]
fn closed_form_gl2() {
    let t = character_table_gl2_closed_form(5).unwrap();
    let mut expect = vec![1; 4];
    expect.extend(vec![4; 10]);
    expect.extend(vec![5; 4]);
    expect.extend(vec![6; 6]);
    assert_eq!(sorted_dims(&t), expect);
    t.verify().unwrap();
    assert_eq!(character_table_gl2_closed_form(3).unwrap().len(), 8);
    assert_eq!(character_table_gl2_closed_form(6).unwrap_err(), ChartabError::NotPrimePower(6));
}

#[test]
fn closed_form_matches_generic() {
    for q in [2, 3, 4, 5] {
        let g = gl2(q, B).unwrap();
        let closed = character_table_gl2_on(&g).unwrap();
        let generic = character_table_generic(&g, DEFAULT_MAX_CLASSES).unwrap();
        closed.verify().unwrap();
        assert_eq!(closed.irreducibles(), generic.irreducibles(), "q = {q}");
    }
}

#[test]
fn central_characters_match_labels() {
    let q = 5u32;
    let g = gl2(q, B).unwrap();
    let t = character_table_gl2_on(&g).unwrap();
    let st = gl2_structure(&g).unwrap();
    for i in 0..t.len() {
        let a = t.central_character(i).unwrap() as i64;
        let chi = t.irreducible(i);
        let d = chi.dim().unwrap();
        for (c, fam) in st.families.iter().enumerate() {
            if let Gl2ClassFamily::Central(s) = fam {
                let expect = CycNum::from_exponents(q - 1, [(a * *s as i64, d)]).unwrap();
                assert_eq!(chi.value(c), &expect);
            }
        }
        match t.label(i) {
            IrrLabel::PrincipalSeries(x, y) => assert_eq!(a as u32, (x + y) % (q - 1)),
            IrrLabel::Cuspidal(k) => assert_eq!(a as u32, k % (q - 1)),
            _ => {}
        }
    }
}

#[test]
fn labels_round_trip() {
    let t = character_table_gl2_closed_form(3).unwrap();
    for (i, l) in t.labels().iter().enumerate() {
        assert_eq!(t.find_str(&alloc::format!("{l}")), Some(i));
    }
    assert_eq!(IrrLabel::parse("ps(3, 1)"), Some(IrrLabel::PrincipalSeries(1, 3)));
    assert_eq!(IrrLabel::parse("bogus"), None);
    assert_eq!(t.find_str("chi(2)"), Some(2));
}

#[test]
fn column_orthogonality_small() {
    for g in [symmetric(4, B).unwrap(), gl2(3, B).unwrap(), crate::groups::quaternion(B).unwrap()] {
        let t = character_table_generic(&g, DEFAULT_MAX_CLASSES).unwrap();
        t.verify().unwrap();
        t.verify_columns().unwrap();
    }
}
