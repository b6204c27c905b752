use std::collections::BTreeMap;
use std::sync::{Arc, OnceLock};

use doublealg::double::{d_antipode, d_coproduct, d_counit, d_mul, simples, DoubleBasisElt, DoubleElement};
use doublealg::fusion::{FusionTable, Verlinde};
use doublealg::group::{irreps, FiniteGroup};
use doublealg::{Cyclotomic, Rational};
use proptest::prelude::*;

fn cyclotomic() -> impl Strategy<Value = Cyclotomic> {
    prop::collection::vec((prop::sample::select(vec![1u32, 3, 4, 8, 5]), 0i64..8, -4i64..=4, 1i64..=3), 0..4).prop_map(
        |terms| {
            terms.into_iter().fold(Cyclotomic::zero(), |acc, (n, k, a, b)| {
                &acc + &Cyclotomic::root(n, k).unwrap().scale(&Rational::new(a, b))
            })
        },
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn field_axioms(a in cyclotomic(), b in cyclotomic(), c in cyclotomic()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &Cyclotomic::one(), a.clone());
        if !a.is_zero() {
            prop_assert!((&a * &a.inv().unwrap()).is_one());
            prop_assert_eq!(b.checked_div(&a).unwrap() * a.clone(), b.clone());
        } else {
            prop_assert!(a.inv().is_err());
        }
        prop_assert_eq!(a.to_string().parse::<Cyclotomic>().unwrap(), a);
    }
}

type Tensor = BTreeMap<(DoubleBasisElt, DoubleBasisElt), Cyclotomic>;

fn add(t: &mut Tensor, k: (DoubleBasisElt, DoubleBasisElt), c: Cyclotomic) {
    let e = t.entry(k).or_insert_with(Cyclotomic::zero);
    *e += &c;
    if e.is_zero() {
        t.remove(&k);
    }
}

fn coproduct(g: &FiniteGroup, x: &DoubleElement) -> Tensor {
    let mut out = Tensor::new();
    for (b, c) in x.terms() {
        for pair in d_coproduct(g, *b) {
            add(&mut out, pair, c.clone());
        }
    }
    out
}

fn mul_tensors(g: &FiniteGroup, a: &Tensor, b: &Tensor) -> Tensor {
    let mut out = Tensor::new();
    for ((a1, a2), c) in a {
        for ((b1, b2), d) in b {
            for (x, e) in d_mul(g, *a1, *b1).terms() {
                for (y, f) in d_mul(g, *a2, *b2).terms() {
                    add(&mut out, (*x, *y), &(&(c * d) * e) * f);
                }
            }
        }
    }
    out
}

fn check_hopf_axioms(g: &FiniteGroup, x: DoubleBasisElt, y: DoubleBasisElt, z: DoubleBasisElt) -> Result<(), TestCaseError> {
    let (bx, by, bz) = (DoubleElement::basis(x), DoubleElement::basis(y), DoubleElement::basis(z));
    let unit = DoubleElement::unit(g);
    prop_assert_eq!(bx.mul(&by, g).mul(&bz, g), bx.mul(&by.mul(&bz, g), g));
    prop_assert_eq!(unit.mul(&bx, g), bx.clone());
    prop_assert_eq!(bx.mul(&unit, g), bx.clone());

    let xy = bx.mul(&by, g);
    prop_assert_eq!(coproduct(g, &xy), mul_tensors(g, &coproduct(g, &bx), &coproduct(g, &by)));
    let eps = |e: &DoubleElement| e.terms().fold(Cyclotomic::zero(), |acc, (b, c)| &acc + &(c * &d_counit(g, *b)));
    prop_assert_eq!(eps(&xy), &d_counit(g, x) * &d_counit(g, y));

    let mut left: BTreeMap<(DoubleBasisElt, DoubleBasisElt, DoubleBasisElt), Cyclotomic> = BTreeMap::new();
    let mut right = left.clone();
    for (a, b) in d_coproduct(g, x) {
        for (a1, a2) in d_coproduct(g, a) {
            *left.entry((a1, a2, b)).or_insert_with(Cyclotomic::zero) += &Cyclotomic::one();
        }
        for (b1, b2) in d_coproduct(g, b) {
            *right.entry((a, b1, b2)).or_insert_with(Cyclotomic::zero) += &Cyclotomic::one();
        }
    }
    prop_assert_eq!(left, right);

    let mut counit_left = DoubleElement::zero();
    let mut antipode_left = DoubleElement::zero();
    let mut antipode_right = DoubleElement::zero();
    for (a, b) in d_coproduct(g, x) {
        counit_left.add_term(b, d_counit(g, a));
        for (t, c) in d_mul(g, d_antipode(g, a), b).terms() {
            antipode_left.add_term(*t, c.clone());
        }
        for (t, c) in d_mul(g, a, d_antipode(g, b)).terms() {
            antipode_right.add_term(*t, c.clone());
        }
    }
    prop_assert_eq!(counit_left, bx);
    let mut expected = DoubleElement::zero();
    for (t, c) in unit.terms() {
        expected.add_term(*t, c * &d_counit(g, x));
    }
    prop_assert_eq!(antipode_left, expected.clone());
    prop_assert_eq!(antipode_right, expected);
    Ok(())
}

fn quaternion() -> &'static FiniteGroup {
    static G: OnceLock<FiniteGroup> = OnceLock::new();
    G.get_or_init(|| FiniteGroup::dicyclic(2).unwrap())
}

fn symmetric() -> &'static FiniteGroup {
    static G: OnceLock<FiniteGroup> = OnceLock::new();
    G.get_or_init(FiniteGroup::symmetric3)
}

fn basis_elt(n: usize) -> impl Strategy<Value = DoubleBasisElt> {
    (0..n, 0..n).prop_map(|(g, h)| DoubleBasisElt::new(g, h))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn hopf_axioms_quaternion(x in basis_elt(8), y in basis_elt(8), z in basis_elt(8)) {
        check_hopf_axioms(quaternion(), x, y, z)?;
    }

    #[test]
    fn hopf_axioms_symmetric(x in basis_elt(6), y in basis_elt(6), z in basis_elt(6)) {
        check_hopf_axioms(symmetric(), x, y, z)?;
    }
}

fn groups() -> Vec<FiniteGroup> {
    vec![FiniteGroup::dicyclic(2).unwrap(), FiniteGroup::dicyclic(4).unwrap(), FiniteGroup::symmetric3()]
}

#[test]
fn group_character_orthogonality() {
    for g in groups() {
        let irr = irreps(&g).unwrap();
        let order = Cyclotomic::from_int(g.order() as i64);
        for (i, a) in irr.iter().enumerate() {
            for (j, b) in irr.iter().enumerate() {
                let s: Cyclotomic = g.elements().map(|x| &a.character(x) * &b.character(g.inv(x))).sum();
                let expected = if i == j { order.clone() } else { Cyclotomic::zero() };
                assert_eq!(s, expected, "{} {i} {j}", g.order());
            }
        }
        let squares: i64 = irr.iter().map(|r| r.character(g.identity()).to_i64().unwrap().pow(2)).sum();
        assert_eq!(squares, g.order() as i64);
    }
}

#[test]
fn double_character_orthogonality() {
    for g in groups() {
        let g = Arc::new(g);
        let sims = simples(&g).unwrap();
        for (i, v) in sims.iter().enumerate() {
            for (j, w) in sims.iter().enumerate() {
                let mut s = Cyclotomic::zero();
                for a in g.elements() {
                    for h in g.centralizer(a) {
                        let x = DoubleBasisElt::new(a, h);
                        let y = DoubleBasisElt::new(a, g.inv(h));
                        s += &(&v.character(x) * &w.character(y));
                    }
                }
                let expected = if i == j { g.order() as i64 } else { 0 };
                assert_eq!(s, Cyclotomic::from_int(expected), "{i} {j}");
            }
        }
    }
}

fn fusion(g: FiniteGroup) -> (usize, FusionTable) {
    let v = Verlinde::for_group(&Arc::new(g)).unwrap();
    (v.size(), FusionTable::from_verlinde(&v).unwrap())
}

fn quaternion_fusion() -> &'static (usize, FusionTable) {
    static F: OnceLock<(usize, FusionTable)> = OnceLock::new();
    F.get_or_init(|| fusion(FiniteGroup::dicyclic(2).unwrap()))
}

fn octic_fusion() -> &'static (usize, FusionTable) {
    static F: OnceLock<(usize, FusionTable)> = OnceLock::new();
    F.get_or_init(|| fusion(FiniteGroup::dicyclic(4).unwrap()))
}

fn associative(f: &(usize, FusionTable), a: usize, b: usize, c: usize) -> Result<(), TestCaseError> {
    let (n, t) = f;
    for d in 0..*n {
        let left: u32 = (0..*n).map(|e| t.get(a, b, e) * t.get(e, c, d)).sum();
        let right: u32 = (0..*n).map(|e| t.get(b, c, e) * t.get(a, e, d)).sum();
        prop_assert_eq!(left, right, "({} {} {}) -> {}", a, b, c, d);
    }
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn fusion_is_associative_and_commutative(a in 0usize..22, b in 0usize..22, c in 0usize..22) {
        let f = quaternion_fusion();
        associative(f, a, b, c)?;
        for d in 0..f.0 {
            prop_assert_eq!(f.1.get(a, b, d), f.1.get(b, a, d));
        }
        prop_assert_eq!(f.1.get(0, a, a), 1);
    }

    #[test]
    fn octic_fusion_is_associative(a in 0usize..46, b in 0usize..46, c in 0usize..46) {
        associative(octic_fusion(), a, b, c)?;
    }
}
