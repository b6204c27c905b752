use std::collections::VecDeque;

use super::{ConjClass, Elem, Family, FiniteGroup};
use crate::error::{Error, Result};
use crate::exactnum::Cyclotomic;
use crate::linalg::Matrix;

/// An irreducible representation of a subgroup, acting on row vectors from
/// the right: `v.(gh) = (v.g).h`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Irrep {
    pub name: String,
    pub dim: usize,
    pub generators: Vec<(Elem, Matrix)>,
    matrices: Vec<Option<Matrix>>,
}

impl Irrep {
    /// Extends generator matrices to every element of the generated subgroup.
    pub fn from_generators(group: &FiniteGroup, name: impl Into<String>, generators: Vec<(Elem, Matrix)>) -> Self {
        let dim = generators.first().map_or(1, |(_, m)| m.rows());
        let mut matrices: Vec<Option<Matrix>> = vec![None; group.order()];
        matrices[group.identity()] = Some(Matrix::identity(dim));
        let mut queue = VecDeque::from([group.identity()]);
        while let Some(x) = queue.pop_front() {
            for (g, m) in &generators {
                let y = group.mul(x, *g);
                if matrices[y].is_none() {
                    matrices[y] = Some(matrices[x].as_ref().unwrap().mul(m));
                    queue.push_back(y);
                }
            }
        }
        Irrep { name: name.into(), dim, generators, matrices }
    }

    pub fn matrix(&self, g: Elem) -> &Matrix {
        self.matrices[g].as_ref().expect("element outside the represented subgroup")
    }

    pub fn is_defined_at(&self, g: Elem) -> bool {
        self.matrices.get(g).is_some_and(Option::is_some)
    }

    pub fn character(&self, g: Elem) -> Cyclotomic {
        self.matrix(g).trace()
    }

    pub fn domain(&self) -> Vec<Elem> {
        (0..self.matrices.len()).filter(|&g| self.matrices[g].is_some()).collect()
    }

    /// Checks `ρ(xy) = ρ(x)ρ(y)` on the whole domain.
    pub fn is_homomorphism(&self, group: &FiniteGroup) -> bool {
        let dom = self.domain();
        dom.iter().all(|&x| {
            dom.iter().all(|&y| {
                let xy = group.mul(x, y);
                self.is_defined_at(xy) && *self.matrix(xy) == self.matrix(x).mul(self.matrix(y))
            })
        })
    }
}

fn scalar(x: Cyclotomic) -> Matrix {
    Matrix::from_rows(vec![vec![x]])
}

fn int(n: i64) -> Cyclotomic {
    Cyclotomic::from_int(n)
}

fn mat2(a: Cyclotomic, b: Cyclotomic, c: Cyclotomic, d: Cyclotomic) -> Matrix {
    Matrix::from_rows(vec![vec![a, b], vec![c, d]])
}

fn cyclic_characters(group: &FiniteGroup, generator: Elem, prefix: &str) -> Vec<Irrep> {
    let m = group.element_order(generator) as u32;
    (0..m)
        .map(|j| {
            let z = Cyclotomic::root(m, j as i64).unwrap();
            Irrep::from_generators(group, format!("{prefix}{j}"), vec![(generator, scalar(z))])
        })
        .collect()
}

fn dicyclic_irreps(group: &FiniteGroup, n: u32) -> Vec<Irrep> {
    let r = group.generator("r").unwrap();
    let s = group.generator("s").unwrap();
    let iota = if n.is_multiple_of(2) { int(1) } else { Cyclotomic::i() };
    let one_dim = [
        ("psi0", int(1), int(1)),
        ("psi1", int(1), int(-1)),
        ("psi2", int(-1), iota.clone()),
        ("psi3", int(-1), -&iota),
    ];
    let mut out: Vec<Irrep> = one_dim
        .into_iter()
        .map(|(name, vr, vs)| Irrep::from_generators(group, name, vec![(r, scalar(vr)), (s, scalar(vs))]))
        .collect();
    for i in 1..n {
        let (mr, ms) = if n == 2 {
            // u.r = v, v.r = -u, u.s = i u, v.s = -i v
            let i = Cyclotomic::i();
            (mat2(int(0), int(1), int(-1), int(0)), mat2(i.clone(), int(0), int(0), -&i))
        } else {
            let z = Cyclotomic::root(2 * n, i as i64).unwrap();
            let sign = if i % 2 == 0 { int(1) } else { int(-1) };
            (
                mat2(z.clone(), int(0), int(0), z.conj()),
                mat2(int(0), sign, int(1), int(0)),
            )
        };
        out.push(Irrep::from_generators(group, format!("chi{i}"), vec![(r, mr), (s, ms)]));
    }
    out
}

fn symmetric3_irreps(group: &FiniteGroup) -> Vec<Irrep> {
    let r = group.generator("r").unwrap();
    let s = group.generator("s").unwrap();
    let z = Cyclotomic::root(3, 1).unwrap();
    vec![
        Irrep::from_generators(group, "psi0", vec![(r, scalar(int(1))), (s, scalar(int(1)))]),
        Irrep::from_generators(group, "psi1", vec![(r, scalar(int(1))), (s, scalar(int(-1)))]),
        Irrep::from_generators(
            group,
            "chi",
            vec![
                (r, mat2(z.clone(), int(0), int(0), &z * &z)),
                (s, mat2(int(0), int(1), int(1), int(0))),
            ],
        ),
    ]
}

/// Irreducible representations of the whole group.
pub fn irreps(group: &FiniteGroup) -> Result<Vec<Irrep>> {
    match group.family() {
        Family::Dicyclic(n) => Ok(dicyclic_irreps(group, *n)),
        Family::Symmetric3 => Ok(symmetric3_irreps(group)),
        Family::Cyclic(_) => Ok(cyclic_characters(group, group.generator("g").unwrap(), "chi")),
        Family::Generic => {
            let all: Vec<Elem> = group.elements().collect();
            match all.iter().copied().find(|&g| group.element_order(g) == group.order()) {
                Some(g) => Ok(cyclic_characters(group, g, "chi")),
                None => Err(Error::IrrepsUnavailable(group.to_string())),
            }
        }
    }
}

/// Irreducible representations of the centralizer of a class representative.
pub fn centralizer_irreps(group: &FiniteGroup, class: &ConjClass) -> Result<Vec<Irrep>> {
    if class.centralizer.order() == group.order() {
        return irreps(group);
    }
    let g = class
        .centralizer
        .generator
        .ok_or_else(|| Error::IrrepsUnavailable(format!("centralizer of {} in {group}", group.name(class.rep))))?;
    let prefix = match (group.family(), group.name(g)) {
        (Family::Dicyclic(_) | Family::Symmetric3, "r") => "alpha",
        (Family::Dicyclic(_) | Family::Symmetric3, "s") => "beta",
        (Family::Dicyclic(_), "s*r") => "gamma",
        _ => "chi",
    };
    Ok(cyclic_characters(group, g, prefix))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dimensions_and_relations() {
        for n in 2..6 {
            let g = FiniteGroup::dicyclic(n).unwrap();
            let irr = irreps(&g).unwrap();
            assert_eq!(irr.len(), n as usize + 3);
            let total: usize = irr.iter().map(|x| x.dim * x.dim).sum();
            assert_eq!(total, g.order());
            assert!(irr.iter().all(|x| x.is_homomorphism(&g)));
        }
    }

    #[test]
    fn chi2_of_r2_in_order_16() {
        let g = FiniteGroup::dicyclic(4).unwrap();
        let irr = irreps(&g).unwrap();
        let chi2 = irr.iter().find(|x| x.name == "chi2").unwrap();
        assert_eq!(chi2.character(g.parse_word("r^2").unwrap()), int(-2));
    }

    #[test]
    fn cyclic_four() {
        let g = FiniteGroup::cyclic(4).unwrap();
        let irr = irreps(&g).unwrap();
        let i = Cyclotomic::i();
        for (j, x) in irr.iter().enumerate() {
            for k in 0..4 {
                let e = g.pow(g.generator("g").unwrap(), k);
                assert_eq!(x.character(e), i.pow(j as i64 * k).unwrap());
            }
        }
    }

    #[test]
    fn generic_nonabelian_unavailable() {
        let d = FiniteGroup::symmetric3();
        let n = d.order();
        let table = (0..n * n).map(|t| d.mul(t / n, t % n)).collect();
        let names = d.elements().map(|x| d.name(x).to_string()).collect();
        let g = FiniteGroup::from_table(names, table, vec![]).unwrap();
        assert!(matches!(irreps(&g), Err(Error::IrrepsUnavailable(_))));
    }
}
