//! Generator tables for tensor products of simples, transcribed by hand,
//! with checks against the computed decompositions.

use std::sync::Arc;

use doublealg::double::{simples, SimpleDoubleModule};
use doublealg::fusion::{decompose, tensor, Verlinde};
use doublealg::group::FiniteGroup;
use doublealg::linalg::{in_span, rank_of, Vector};
use doublealg::Cyclotomic;

/// Parses `c*x1y2 - x2^2 + ...` into a vector of `V_a ⊗ V_b`.
/// `letters` names the two factors; the coefficient may use `i`, `w` (a
/// primitive 8th root) and `zeta` (a primitive cube root).
fn parse_poly(text: &str, letters: [char; 2], dims: [usize; 2]) -> Vector {
    let mut out = vec![Cyclotomic::zero(); dims[0] * dims[1]];
    let text = text.replace(' ', "");
    let mut terms: Vec<String> = Vec::new();
    let mut cur = String::new();
    for ch in text.chars() {
        if (ch == '+' || ch == '-') && !cur.is_empty() && !cur.ends_with('*') {
            terms.push(std::mem::take(&mut cur));
        }
        cur.push(ch);
    }
    terms.push(cur);
    for term in terms {
        let (sign, body) = match term.strip_prefix('-') {
            Some(b) => (-1, b.to_string()),
            None => (1, term.trim_start_matches('+').to_string()),
        };
        let (coef, mono) = match body.rsplit_once('*') {
            Some((c, m)) => {
                let c = c.replace("zeta", "z(3)").replace('w', "z(8)");
                (c.parse::<Cyclotomic>().unwrap(), m.to_string())
            }
            None => (Cyclotomic::one(), body.clone()),
        };
        let mut idx = Vec::new();
        let chars: Vec<char> = mono.chars().collect();
        let mut k = 0;
        while k < chars.len() {
            let var = chars[k];
            let pos = chars[k + 1].to_digit(10).unwrap() as usize - 1;
            k += 2;
            let mut times = 1;
            if k < chars.len() && chars[k] == '^' {
                times = chars[k + 1].to_digit(10).unwrap();
                k += 2;
            }
            for _ in 0..times {
                idx.push((var, pos));
            }
        }
        assert_eq!(idx.len(), 2, "degree-two monomial expected in {text}");
        assert_eq!([idx[0].0, idx[1].0], letters, "factor letters in {text}");
        let slot = idx[0].1 * dims[1] + idx[1].1;
        out[slot] += &(&coef * &Cyclotomic::from_int(sign));
    }
    out
}

type Block = (usize, usize, &'static [(usize, &'static [&'static str])]);

fn letter_of(letters: &[(char, usize)], module: usize) -> char {
    letters.iter().find(|(_, m)| *m == module).unwrap().0
}

fn check_block(sims: &[SimpleDoubleModule], letters: &[(char, usize)], block: &Block) {
    let (a, b, rows) = block;
    let t = tensor(&sims[*a], &sims[*b]).unwrap();
    let dec = decompose(&t.data, sims);
    let expected: Vec<usize> = rows.iter().map(|(v, _)| *v).collect();
    let got: Vec<usize> = dec.components.iter().map(|c| c.simple).collect();
    assert_eq!(got, expected, "V{a}⊗V{b} summands");
    let dims = [sims[*a].dim(), sims[*b].dim()];
    let pair = [letter_of(letters, *a), letter_of(letters, *b)];
    for (v, gens) in rows.iter() {
        let comp = dec.component(*v).unwrap();
        let vecs: Vec<Vector> = gens.iter().map(|g| parse_poly(g, pair, dims)).collect();
        let label = format!("V{v} in V{a}⊗V{b}");
        assert_eq!(comp.multiplicity * sims[*v].dim(), vecs.len(), "{label}: generator count");
        assert_eq!(rank_of(&vecs), vecs.len(), "{label}: generators independent");
        let closure = t.data.generated_submodule(&vecs);
        assert_eq!(rank_of(&closure), vecs.len(), "{label}: span is a submodule");
        let isotypic: Vec<Vector> = comp.copies.iter().flatten().cloned().collect();
        for g in &vecs {
            assert!(in_span(&isotypic, g), "{label}: generator in the isotypic component");
        }
    }
}

const D4_LETTERS: [(char, usize); 3] = [('x', 17), ('y', 20), ('z', 21)];

const TABLE_D4: [Block; 9] = [
    (17, 17, &[(0, &["x1x2 - x2x1"]), (2, &["x1x2 + x2x1"]), (6, &["x1^2 + x2^2"]), (8, &["x1^2 - x2^2"])]),
    (20, 20, &[(0, &["y1y2 + y2y1"]), (3, &["y1y2 - y2y1"]), (5, &["y1^2 + y2^2"]), (8, &["y1^2 - y2^2"])]),
    (21, 21, &[(0, &["z1z2 - z2z1"]), (3, &["z1z2 + z2z1"]), (6, &["z1^2 - z2^2"]), (7, &["z1^2 + z2^2"])]),
    (17, 20, &[(11, &["x2y1 - i*x1y2", "i*x2y2 - x1y1"]), (13, &["x2y1 + i*x1y2", "i*x2y2 + x1y1"])]),
    (20, 17, &[(11, &["y1x1 + i*y2x2", "-i*y2x1 - y1x2"]), (13, &["y1x1 - i*y2x2", "-i*y2x1 + y1x2"])]),
    (17, 21, &[(10, &["x2z1 + i*x1z2", "i*x2z2 - x1z1"]), (12, &["x2z1 - i*x1z2", "i*x2z2 + x1z1"])]),
    (21, 17, &[(10, &["i*z1x1 + z2x2", "z2x1 - i*z1x2"]), (12, &["i*z1x1 - z2x2", "z2x1 + i*z1x2"])]),
    (20, 21, &[(4, &["y1z2 + i*y2z1", "i*y2z1 - y1z2"]), (9, &["y2z2 + i*y1z1", "i*y1z1 - y2z2"])]),
    (21, 20, &[(4, &["z2y1 + i*z1y2", "i*z1y2 - z2y1"]), (9, &["z2y2 + i*z1y1", "i*z1y1 - z2y2"])]),
];

const D8_LETTERS: [(char, usize); 3] = [('x', 45), ('y', 32), ('z', 37)];

const TABLE_D8: [Block; 9] = [
    (32, 32, &[(0, &["y1y2 + y2y1"]), (1, &["y1y2 - y2y1"]), (26, &["y2^2", "y1^2"])]),
    (37, 37, &[(0, &["z1z2 - z2z1"]), (1, &["z1z2 + z2z1"]), (24, &["z2^2", "z1^2"])]),
    (32, 37, &[(5, &["y2z1", "y1z2"]), (29, &["y1z1", "y2z2"])]),
    (37, 32, &[(5, &["z1y2", "z2y1"]), (29, &["z1y1", "z2y2"])]),
    (
        32,
        45,
        &[
            (39, &["y1x2 + y2x3", "i*y1x3 - i*y2x4", "-y1x4 + y2x1", "i*y1x1 - i*y2x2"]),
            (41, &["y1x2 - y2x3", "i*y1x3 + i*y2x4", "-y1x4 - y2x1", "i*y1x1 + i*y2x2"]),
        ],
    ),
    (
        45,
        32,
        &[
            (39, &["x2y2 + x3y1", "-i*x3y2 + i*x4y1", "-x4y2 + x1y1", "-i*x1y2 + i*x2y1"]),
            (41, &["x2y2 - x3y1", "-i*x3y2 - i*x4y1", "-x4y2 - x1y1", "-i*x1y2 - i*x2y1"]),
        ],
    ),
    (
        45,
        37,
        &[
            (38, &["x2z2 - w^2*x3z1", "w*x3z2 - w*x4z1", "w^2*x4z2 + x1z1", "-w^3*x1z2 - w^3*x2z1"]),
            (40, &["x2z2 + w^2*x3z1", "w*x3z2 + w*x4z1", "w^2*x4z2 - x1z1", "-w^3*x1z2 + w^3*x2z1"]),
        ],
    ),
    (
        37,
        45,
        &[
            (38, &["z1x2 + w^2*z2x3", "-w^3*z1x3 + w^3*z2x4", "-w^2*z1x4 + z2x1", "w*z1x1 + w*z2x2"]),
            (40, &["z1x2 - w^2*z2x3", "-w^3*z1x3 - w^3*z2x4", "-w^2*z1x4 - z2x1", "w*z1x1 - w*z2x2"]),
        ],
    ),
    (
        45,
        45,
        &[
            (0, &["x1x3 + x2x4 - x3x1 - x4x2"]),
            (3, &["x1x3 - x2x4 - x3x1 + x4x2"]),
            (4, &["x1x3 + w^6*x2x4 - w^4*x3x1 - w^2*x4x2", "-x4x2 - w^6*x3x1 + w^4*x2x4 + w^2*x1x3"]),
            (8, &["x1^2 + x2^2 + x3^2 + x4^2"]),
            (9, &["x1^2 - x2^2 + x3^2 - x4^2"]),
            (11, &["x1^2 + w^6*x2^2 + w^4*x3^2 + w^2*x4^2", "-x4^2 - w^6*x3^2 - w^4*x2^2 - w^2*x1^2"]),
            (22, &["x1x4 - x2x1 - x3x2 - x4x3", "x2x3 + x1x2 - x4x1 + x3x4"]),
            (24, &["x1x4 - w^6*x2x1 - w^4*x3x2 - w^2*x4x3", "-x4x1 + w^6*x3x4 + w^4*x2x3 + w^2*x1x2"]),
            (26, &["x1x4 + x2x1 - x3x2 + x4x3", "x2x3 - x1x2 - x4x1 - x3x4"]),
            (28, &["x1x4 + w^6*x2x1 - w^4*x3x2 + w^2*x4x3", "-x4x1 - w^6*x3x4 + w^4*x2x3 - w^2*x1x2"]),
        ],
    ),
];

const TABLE_S3: Block = (
    6,
    6,
    &[
        (0, &["x1^2 + x2^2 + x3^2"]),
        (2, &["x1^2 + zeta*x2^2 + zeta^2*x3^2", "x1^2 + zeta^2*x2^2 + zeta*x3^2"]),
        (3, &["x1x2 + x3x1 + x2x3", "x1x3 + x2x1 + x3x2"]),
        (4, &["x1x2 + zeta^2*x3x1 + zeta*x2x3", "x1x3 + zeta^2*x2x1 + zeta*x3x2"]),
        (5, &["x1x2 + zeta*x3x1 + zeta^2*x2x3", "x1x3 + zeta*x2x1 + zeta^2*x3x2"]),
    ],
);

fn double_of(g: FiniteGroup) -> (Arc<FiniteGroup>, Vec<SimpleDoubleModule>) {
    let g = Arc::new(g);
    let s = simples(&g).unwrap();
    (g, s)
}

fn summands(sims: &[SimpleDoubleModule], a: usize, b: usize) -> Vec<usize> {
    let t = tensor(&sims[a], &sims[b]).unwrap();
    decompose(&t.data, sims)
        .components
        .iter()
        .flat_map(|c| std::iter::repeat_n(c.simple, c.multiplicity))
        .collect()
}

pub fn order_eight_tensor_squares() {
    let (_, s) = double_of(FiniteGroup::dicyclic(2).unwrap());
    for block in &TABLE_D4 {
        check_block(&s, &D4_LETTERS, block);
    }
}

pub fn order_eight_extra_products() {
    let (_, s) = double_of(FiniteGroup::dicyclic(2).unwrap());
    assert_eq!(summands(&s, 4, 20), vec![19, 21]);
    assert_eq!(summands(&s, 11, 17), vec![18, 20]);
    assert_eq!(summands(&s, 3, 17), vec![15]);
    assert_eq!(summands(&s, 4, 17), vec![14, 16]);
    assert_eq!(summands(&s, 2, 3), vec![1]);
}

pub fn order_sixteen_tensor_squares() {
    let (_, s) = double_of(FiniteGroup::dicyclic(4).unwrap());
    for block in &TABLE_D8 {
        check_block(&s, &D8_LETTERS, block);
    }
}

pub fn order_sixteen_extra_products() {
    let (_, s) = double_of(FiniteGroup::dicyclic(4).unwrap());
    assert_eq!(summands(&s, 1, 45), vec![43]);
    assert_eq!(summands(&s, 5, 45), vec![42, 44]);
    assert_eq!(summands(&s, 39, 45), vec![14, 16, 18, 20, 30, 32, 34, 36]);
    assert_eq!(summands(&s, 40, 45), vec![15, 17, 19, 21, 31, 33, 35, 37]);
    assert_eq!(summands(&s, 42, 45), vec![5, 6, 12, 13, 23, 25, 27, 29]);
}

pub fn symmetric_tensor_square() {
    let (_, s) = double_of(FiniteGroup::symmetric3());
    check_block(&s, &[('x', 6)], &TABLE_S3);
    for i in [6, 7] {
        assert_eq!(summands(&s, i, i), vec![0, 2, 3, 4, 5]);
        assert_eq!(summands(&s, i, 2), vec![6, 7]);
    }
    assert_eq!(summands(&s, 2, 2), vec![0, 1, 2]);
}

/// Intertwiner-based multiplicities agree with the S-matrix on every pair.
pub fn verlinde_agrees_with_decomposition() {
    let (g, s) = double_of(FiniteGroup::dicyclic(2).unwrap());
    let v = Verlinde::for_group(&g).unwrap();
    for a in 0..s.len() {
        for b in 0..s.len() {
            let t = tensor(&s[a], &s[b]).unwrap();
            let dec = decompose(&t.data, &s);
            let row = v.row(a, b).unwrap();
            for c in 0..s.len() {
                assert_eq!(row[c] as usize, dec.multiplicity(c), "N_({a},{b})^{c}");
            }
        }
    }
}
