//! Simple modules of the three featured doubles against hand-transcribed
//! action tables (grade, image under r, image under s for each basis vector).

use std::sync::Arc;

use doublealg::double::{simples, DoubleBasisElt, SimpleDoubleModule};
use doublealg::group::FiniteGroup;
use doublealg::Cyclotomic;

const LETTERS: [&str; 4] = ["u", "v", "p", "q"];

/// Parses `coef*letter`, `-letter` or `letter`.
fn image(text: &str, dim: usize) -> Vec<Cyclotomic> {
    let mut out = vec![Cyclotomic::zero(); dim];
    let (coef, letter) = match text.rsplit_once('*') {
        Some((c, l)) => (c.parse::<Cyclotomic>().unwrap(), l),
        None => match text.strip_prefix('-') {
            Some(l) => (Cyclotomic::from_int(-1), l),
            None => (Cyclotomic::one(), text),
        },
    };
    let idx = LETTERS.iter().position(|l| *l == letter).unwrap();
    out[idx] = coef;
    out
}

fn check(group: &Arc<FiniteGroup>, module: &SimpleDoubleModule, rows: &[(&str, &str, &str)]) {
    let r = group.generator("r").unwrap();
    let s = group.generator("s").unwrap();
    assert_eq!(module.dim(), rows.len(), "{}", module.label());
    for (b, (grade, ri, si)) in rows.iter().enumerate() {
        let g = group.parse_word(grade).unwrap();
        assert_eq!(module.grade(b), g, "{} grade of basis {b}", module.label());
        let got_r = module.act(b, DoubleBasisElt::new(g, r));
        assert_eq!(got_r, image(ri, rows.len()), "{} r-image of basis {b}", module.label());
        let got_s = module.act(b, DoubleBasisElt::new(g, s));
        assert_eq!(got_s, image(si, rows.len()), "{} s-image of basis {b}", module.label());
    }
}

type Rows = &'static [(&'static str, &'static str, &'static str)];

const Q8_TABLE: &[Rows] = &[
    &[("e", "u", "u")],
    &[("e", "u", "-u")],
    &[("e", "-u", "u")],
    &[("e", "-u", "-u")],
    &[("e", "v", "i*u"), ("e", "-u", "-i*v")],
    &[("r^2", "u", "u")],
    &[("r^2", "u", "-u")],
    &[("r^2", "-u", "u")],
    &[("r^2", "-u", "-u")],
    &[("r^2", "v", "i*u"), ("r^2", "-u", "-i*v")],
    &[("r", "u", "v"), ("r^3", "v", "u")],
    &[("r", "i*u", "v"), ("r^3", "-i*v", "-u")],
    &[("r", "-u", "v"), ("r^3", "-v", "u")],
    &[("r", "-i*u", "v"), ("r^3", "i*v", "-u")],
    &[("s", "v", "u"), ("s*r^2", "u", "v")],
    &[("s", "v", "i*u"), ("s*r^2", "-u", "-i*v")],
    &[("s", "v", "-u"), ("s*r^2", "u", "-v")],
    &[("s", "v", "-i*u"), ("s*r^2", "-u", "i*v")],
    &[("s*r", "v", "v"), ("s*r^3", "u", "u")],
    &[("s*r", "i*v", "v"), ("s*r^3", "i*u", "-u")],
    &[("s*r", "-v", "v"), ("s*r^3", "-u", "u")],
    &[("s*r", "-i*v", "v"), ("s*r^3", "-i*u", "-u")],
];

#[test]
fn quaternion_double_matches_table() {
    let g = Arc::new(FiniteGroup::dicyclic(2).unwrap());
    let s = simples(&g).unwrap();
    assert_eq!(s.len(), Q8_TABLE.len());
    for (m, rows) in s.iter().zip(Q8_TABLE) {
        check(&g, m, rows);
    }
}

fn cyclic_pair(grades: (&'static str, &'static str), j: i64) -> Vec<(String, String, String)> {
    // u.r = ω^j u, v.r = ω^{-j} v, u.s = v, v.s = (-1)^j u
    let w = |k: i64| format!("z(8)^{}", k.rem_euclid(8));
    let sign = if j % 2 == 0 { "u" } else { "-u" };
    vec![
        (grades.0.into(), format!("{}*u", w(j)), "v".into()),
        (grades.1.into(), format!("{}*v", w(-j)), sign.into()),
    ]
}

#[test]
fn order_sixteen_double_matches_table() {
    let g = Arc::new(FiniteGroup::dicyclic(4).unwrap());
    let s = simples(&g).unwrap();
    assert_eq!(s.len(), 46);
    let two_dim: [Rows; 3] = [
        &[("e", "z(8)^2*u", "v"), ("e", "z(8)^6*v", "u")],
        &[("e", "z(8)^3*u", "-v"), ("e", "z(8)^5*v", "u")],
        &[("e", "z(8)^1*u", "-v"), ("e", "z(8)^7*v", "u")],
    ];
    let one_dim: [(&str, &str); 4] = [("u", "u"), ("u", "-u"), ("-u", "u"), ("-u", "-u")];
    for (block, center) in [(0usize, "e"), (7, "r^4")] {
        for (k, (ri, si)) in one_dim.iter().enumerate() {
            check(&g, &s[block + k], &[(center, ri, si)]);
        }
        for (k, rows) in two_dim.iter().enumerate() {
            let rows: Vec<(&str, &str, &str)> = rows.iter().map(|(_, a, b)| (center, *a, *b)).collect();
            check(&g, &s[block + 4 + k], &rows);
        }
    }
    for (base, grades) in [(14usize, ("r", "r^7")), (22, ("r^2", "r^6")), (30, ("r^3", "r^5"))] {
        for j in 0..8 {
            let rows = cyclic_pair(grades, j);
            let rows: Vec<(&str, &str, &str)> = rows.iter().map(|(a, b, c)| (a.as_str(), b.as_str(), c.as_str())).collect();
            check(&g, &s[base + j as usize], &rows);
        }
    }
    // the grade of the first vector in V39..V41 is s; the last r-image in V44 is u
    let four_dim: [Rows; 8] = [
        &[("s", "v", "u"), ("s*r^2", "p", "q"), ("s*r^4", "q", "p"), ("s*r^6", "u", "v")],
        &[("s", "v", "i*u"), ("s*r^2", "p", "-i*q"), ("s*r^4", "q", "-i*p"), ("s*r^6", "-u", "-i*v")],
        &[("s", "v", "-u"), ("s*r^2", "p", "-q"), ("s*r^4", "q", "-p"), ("s*r^6", "u", "-v")],
        &[("s", "v", "-i*u"), ("s*r^2", "p", "i*q"), ("s*r^4", "q", "i*p"), ("s*r^6", "-u", "i*v")],
        &[("s*r", "v", "q"), ("s*r^3", "p", "p"), ("s*r^5", "q", "v"), ("s*r^7", "u", "u")],
        &[("s*r", "v", "-i*q"), ("s*r^3", "p", "-i*p"), ("s*r^5", "q", "-i*v"), ("s*r^7", "-u", "-i*u")],
        &[("s*r", "v", "-q"), ("s*r^3", "p", "-p"), ("s*r^5", "q", "-v"), ("s*r^7", "u", "-u")],
        &[("s*r", "v", "i*q"), ("s*r^3", "p", "i*p"), ("s*r^5", "q", "i*v"), ("s*r^7", "-u", "i*u")],
    ];
    for (k, rows) in four_dim.iter().enumerate() {
        check(&g, &s[38 + k], rows);
    }
}

#[test]
fn symmetric_double_matches_table() {
    let g = Arc::new(FiniteGroup::symmetric3());
    let s = simples(&g).unwrap();
    let table: [Rows; 8] = [
        &[("e", "u", "u")],
        &[("e", "u", "-u")],
        &[("e", "z(3)^1*u", "v"), ("e", "z(3)^2*v", "u")],
        &[("r", "u", "v"), ("r^2", "v", "u")],
        &[("r", "z(3)^1*u", "v"), ("r^2", "z(3)^2*v", "u")],
        &[("r", "z(3)^2*u", "v"), ("r^2", "z(3)^1*v", "u")],
        &[("s", "p", "u"), ("s*r", "u", "p"), ("s*r^2", "v", "v")],
        &[("s", "p", "-u"), ("s*r", "u", "-p"), ("s*r^2", "v", "-v")],
    ];
    assert_eq!(s.len(), table.len());
    for (m, rows) in s.iter().zip(table) {
        check(&g, m, rows);
    }
}
