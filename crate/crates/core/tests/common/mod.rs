#![allow(dead_code)]

pub mod tables;

use doublealg::ncalg::PaperParams;
use doublealg::Cyclotomic;

pub fn signs(k: usize) -> (i64, i64, i64) {
    let s = |b: usize| if k >> b & 1 == 1 { -1 } else { 1 };
    (s(0), s(1), s(2))
}

/// Sixteen tuples: every sign pattern twice, with `u`'s drawn from `{1, i}`.
pub fn unit_samples() -> Vec<PaperParams> {
    (0..16)
        .map(|k| {
            let (a, b, g) = signs(k);
            let u = std::array::from_fn(|j| if (k / 8 + j + k) % 2 == 1 { Cyclotomic::i() } else { Cyclotomic::one() });
            PaperParams::new(a, b, g, u).unwrap()
        })
        .collect()
}

/// Eight tuples, one per sign pattern, with varied nonzero `u`'s.
pub fn generic_samples() -> Vec<PaperParams> {
    let pool = ["1", "i", "2", "-3", "1/2", "z(8)", "-i", "5"];
    (0..8)
        .map(|k| {
            let (a, b, g) = signs(k);
            let u = std::array::from_fn(|j| pool[(k + 3 * j) % pool.len()].parse::<Cyclotomic>().unwrap());
            PaperParams::new(a, b, g, u).unwrap()
        })
        .collect()
}

/// Coefficients of `(1 − t)^{−n}` through degree `d`.
pub fn polynomial_ring_series(n: u128, d: usize) -> Vec<u128> {
    let mut out = vec![1u128];
    for k in 1..=d as u128 {
        let prev = *out.last().unwrap();
        out.push(prev * (k + n - 1) / k);
    }
    out
}

use doublealg::linalg::Matrix;

fn pw(c: &Cyclotomic, e: i64) -> Cyclotomic {
    c.pow(e).unwrap()
}

fn block_diagonal(blocks: &[(Cyclotomic, usize)]) -> Matrix {
    let entries: Vec<Cyclotomic> = blocks.iter().flat_map(|(c, k)| std::iter::repeat_n(c.clone(), *k)).collect();
    let n = entries.len();
    Matrix::from_fn(n, n, |i, j| if i == j { entries[i].clone() } else { Cyclotomic::zero() })
}

fn product(fs: &[Cyclotomic]) -> Cyclotomic {
    fs.iter().fold(Cyclotomic::one(), |a, b| &a * b)
}

/// The reference Nakayama automorphism of the order-eight family.
pub fn reference_mu_d4(p: &PaperParams) -> Matrix {
    let c = Cyclotomic::from_int;
    let [u1, u2, u3, u4] = &p.u;
    block_diagonal(&[
        (product(&[c(-p.alpha), pw(u1, -2), pw(u2, -2)]), 2),
        (product(&[c(-p.alpha * p.beta), pw(u1, 2), pw(u3, -1), pw(u4, -1)]), 2),
        (product(&[c(p.alpha * p.gamma), pw(u2, 2), u3.clone(), u4.clone()]), 2),
    ])
}

/// The reference Nakayama automorphism of the order-sixteen family.
pub fn reference_mu_d8(p: &PaperParams) -> Matrix {
    let c = Cyclotomic::from_int;
    let [u1, u2, u3, u4] = &p.u;
    block_diagonal(&[
        (product(&[c(p.beta * p.gamma), pw(u3, 2), pw(u4, 2)]), 4),
        (product(&[c(p.beta), pw(u1, -1), pw(u2, -1), pw(u3, 4)]), 2),
        (product(&[c(-p.gamma), pw(u1, -1), pw(u2, -1), pw(u4, -4)]), 2),
    ])
}

/// The order-sixteen display with its `y` block inverted.
pub fn corrected_mu_d8(p: &PaperParams) -> Matrix {
    let c = Cyclotomic::from_int;
    let [u1, u2, u3, u4] = &p.u;
    block_diagonal(&[
        (product(&[c(p.beta * p.gamma), pw(u3, 2), pw(u4, 2)]), 4),
        (product(&[c(p.beta), u1.clone(), u2.clone(), pw(u3, -4)]), 2),
        (product(&[c(-p.gamma), pw(u1, -1), pw(u2, -1), pw(u4, -4)]), 2),
    ])
}
