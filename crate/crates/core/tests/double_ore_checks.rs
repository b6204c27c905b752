mod common;

use doublealg::double_ore::{octic_tower, quaternion_data, same_quadratic_ideal, skew_poly, DOEData, SigmaShape, SkewMatrix};
use doublealg::ncalg::{build_paper_algebra, PaperFamily};
use doublealg::Cyclotomic;

#[test]
fn quaternion_data_at_sampled_parameters() {
    for p in common::generic_samples() {
        let d = quaternion_data(&p).unwrap();
        assert!(d.sigma_is_algebra_map().unwrap(), "{p:?}");
        assert!(d.sigma_invertible().unwrap(), "{p:?}");
        assert!(d.do_conditions(), "{p:?}");
        assert_eq!(d.shape(), Some(SigmaShape::SkewDiagonal));
        assert_eq!(d.shortcut_conditions(), Some(true));
        let built = d.build(["x1", "x2"], None).unwrap();
        let table = build_paper_algebra(&PaperFamily::D4(p)).unwrap();
        assert!(same_quadratic_ideal(&built, &table).unwrap());
    }
}

#[test]
fn reference_skew_matrix_is_accepted() {
    for p in common::generic_samples() {
        let q = SkewMatrix::quaternion_base(&p).unwrap();
        assert_eq!(q.size(), 4);
        assert_eq!(q.get(0, 1), &Cyclotomic::from_int(p.beta));
        assert_eq!(q.get(2, 0), &p.u[3]);
    }
}

#[test]
fn octic_tower_at_sampled_parameters() {
    for p in common::generic_samples().into_iter().step_by(3) {
        let tower = octic_tower(&p).unwrap();
        assert_eq!(tower.len(), 3);
        for (k, (d, _)) in tower.iter().enumerate() {
            assert!(d.sigma_is_algebra_map().unwrap(), "stage {} {p:?}", k + 1);
            assert!(d.sigma_invertible().unwrap(), "stage {} {p:?}", k + 1);
            assert!(d.do_conditions(), "stage {} {p:?}", k + 1);
        }
        assert_eq!(tower[2].0.shape(), None);
        let table = build_paper_algebra(&PaperFamily::D8(p)).unwrap();
        assert!(same_quadratic_ideal(&tower[2].1, &table).unwrap());
    }
}

#[test]
fn perturbed_sigma_is_not_an_algebra_map() {
    let p = common::generic_samples().remove(0);
    let d = quaternion_data(&p).unwrap();
    let mut bad = d.clone();
    bad.sigma[0] = DOEData::from_text(d.base.clone(), &[[["0", "y1"], ["2*y1", "0"]]; 4], d.p.clone()).unwrap().sigma[0].clone();
    assert!(!bad.sigma_is_algebra_map().unwrap());
}

#[test]
fn perturbed_p_breaks_the_conditions() {
    for p in common::generic_samples().into_iter().take(4) {
        let mut d = quaternion_data(&p).unwrap();
        d.p = &d.p * &Cyclotomic::from_int(2);
        assert!(!d.do_conditions());
    }
}

#[test]
fn extensions_multiply_hilbert_series() {
    let p = common::generic_samples().remove(5);
    let d = quaternion_data(&p).unwrap();
    let base = d.base.groebner(6).unwrap().hilbert_coeffs(6).unwrap();
    assert_eq!(base, common::polynomial_ring_series(4, 6));
    let ext = d.build(["x1", "x2"], None).unwrap().groebner(6).unwrap().hilbert_coeffs(6).unwrap();
    let conv: Vec<u128> = (0..=6).map(|k| (0..=k).map(|j| base[j] * (k - j + 1) as u128).sum()).collect();
    assert_eq!(ext, conv);
}

#[test]
fn identity_twist_gives_commutative_ring() {
    let c = Cyclotomic::from_int;
    let q = SkewMatrix::from_rows(vec![vec![c(1)]]).unwrap();
    let base = skew_poly(&q, &["t"], None).unwrap();
    let d = DOEData::from_text(base, &[[["t", "0"], ["0", "t"]]], c(1)).unwrap();
    assert!(d.do_conditions());
    assert_eq!(d.shape(), Some(SigmaShape::Diagonal));
    let b = d.build(["x1", "x2"], None).unwrap();
    assert_eq!(b.groebner(5).unwrap().hilbert_coeffs(5).unwrap(), common::polynomial_ring_series(3, 5));
}

#[test]
fn malformed_data_is_rejected() {
    let c = Cyclotomic::from_int;
    let q = SkewMatrix::from_rows(vec![vec![c(1), c(1)], vec![c(1), c(1)]]).unwrap();
    let base = skew_poly(&q, &["a", "b"], None).unwrap();
    assert!(DOEData::from_text(base.clone(), &[[["a", "0"], ["0", "a"]]], c(1)).is_err());
    assert!(DOEData::from_text(base.clone(), &[[["a*b", "0"], ["0", "a"]]; 2], c(1)).is_err());
    assert!(DOEData::from_text(base, &[[["a", "0"], ["0", "a"]]; 2], c(0)).is_err());
}
