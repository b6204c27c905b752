//! Quadratic algebras over cyclotomic fields with a `D(G)`-action on the
//! generators: presentations, Gröbner bases, normal forms and Hilbert counts.

mod groebner;
mod poly;

use std::sync::Arc;

pub use groebner::{groebner_basis, GroebnerBasis};
pub use poly::{FreeMonomial, NcPoly};

use crate::double::{simples, DoubleBasisElt, ModuleData};
use crate::error::{Error, Result};
use crate::exactnum::Cyclotomic;
use crate::group::{Elem, FiniteGroup};
use crate::linalg::{row_basis, Matrix, Vector};

/// Generators (declared from smallest to largest in the term order),
/// relations, and optionally the module structure of the generator space.
#[derive(Clone, Debug)]
pub struct AlgebraPresentation {
    pub names: Vec<String>,
    pub relations: Vec<NcPoly>,
    pub action: Option<ModuleData>,
    pub expected_gkdim: usize,
}

impl AlgebraPresentation {
    pub fn new(names: Vec<String>, relations: Vec<NcPoly>, action: Option<ModuleData>, expected_gkdim: usize) -> Result<Self> {
        poly::check_names(&names)?;
        if let Some(a) = &action {
            if a.dim() != names.len() {
                return Err(Error::InvalidArgument(format!("action on {} vectors for {} generators", a.dim(), names.len())));
            }
        }
        for r in &relations {
            if r.terms().any(|(m, _)| m.letters().iter().any(|&l| l as usize >= names.len())) {
                return Err(Error::InvalidArgument("relation uses an unknown generator".into()));
            }
        }
        Ok(AlgebraPresentation { names, relations, action, expected_gkdim })
    }

    /// Parses relations written with the given generator names.
    pub fn from_text(names: &[&str], relations: &[&str], action: Option<ModuleData>, expected_gkdim: usize) -> Result<Self> {
        let names: Vec<String> = names.iter().map(|s| s.to_string()).collect();
        let rels = relations.iter().map(|r| NcPoly::parse(r, &names)).collect::<Result<Vec<_>>>()?;
        Self::new(names, rels, action, expected_gkdim)
    }

    pub fn num_generators(&self) -> usize {
        self.names.len()
    }

    pub fn generator(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn parse(&self, text: &str) -> Result<NcPoly> {
        NcPoly::parse(text, &self.names)
    }

    pub fn display(&self, p: &NcPoly) -> String {
        p.display(&self.names)
    }

    pub fn group(&self) -> Option<&Arc<FiniteGroup>> {
        self.action.as_ref().map(|a| &a.group)
    }

    fn require_action(&self) -> Result<&ModuleData> {
        self.action
            .as_ref()
            .ok_or_else(|| Error::InvalidArgument("presentation has no Hopf action".into()))
    }

    /// Group grade of a word: the product of its letters' grades.
    pub fn word_grade(&self, w: &FreeMonomial) -> Result<Elem> {
        let a = self.require_action()?;
        let g = &a.group;
        Ok(w.letters().iter().fold(g.identity(), |acc, &l| g.mul(acc, a.grades[l as usize])))
    }

    /// Grade of a nonzero homogeneous-in-grade polynomial.
    pub fn poly_grade(&self, p: &NcPoly) -> Result<Option<Elem>> {
        let mut grade = None;
        for (m, _) in p.terms() {
            let g = self.word_grade(m)?;
            match grade {
                None => grade = Some(g),
                Some(h) if h != g => return Ok(None),
                _ => {}
            }
        }
        Ok(grade)
    }

    /// Generators relabelled so that `order[k]` becomes generator `k`.
    pub fn reordered(&self, order: &[usize]) -> Result<Self> {
        let n = self.num_generators();
        let mut pos = vec![usize::MAX; n];
        for (k, &o) in order.iter().enumerate() {
            if o >= n || pos[o] != usize::MAX {
                return Err(Error::InvalidArgument("not a permutation of the generators".into()));
            }
            pos[o] = k;
        }
        if order.len() != n {
            return Err(Error::InvalidArgument("not a permutation of the generators".into()));
        }
        let relabel = |p: &NcPoly| {
            NcPoly::from_terms(p.terms().map(|(m, c)| {
                (FreeMonomial(m.letters().iter().map(|&l| pos[l as usize] as u8).collect()), c.clone())
            }))
        };
        let action = self.action.as_ref().map(|a| ModuleData {
            group: a.group.clone(),
            grades: order.iter().map(|&o| a.grades[o]).collect(),
            actions: a.actions.iter().map(|m| Matrix::from_fn(n, n, |i, j| m[(order[i], order[j])].clone())).collect(),
        });
        Ok(AlgebraPresentation {
            names: order.iter().map(|&o| self.names[o].clone()).collect(),
            relations: self.relations.iter().map(relabel).collect(),
            action,
            expected_gkdim: self.expected_gkdim,
        })
    }

    /// Quadratic relations as coordinate vectors on `V ⊗ V`, word `ij` at
    /// index `i·n + j`.
    pub fn relation_vectors(&self) -> Result<Vec<Vector>> {
        let n = self.num_generators();
        self.relations
            .iter()
            .map(|r| {
                let mut v = vec![Cyclotomic::zero(); n * n];
                for (m, c) in r.terms() {
                    match m.letters() {
                        [i, j] => v[*i as usize * n + *j as usize] = c.clone(),
                        _ => return Err(Error::InvalidArgument("relation is not quadratic".into())),
                    }
                }
                Ok(v)
            })
            .collect()
    }

    /// Degree-one polynomial of a vector in the generator basis.
    pub fn linear(&self, v: &[Cyclotomic]) -> NcPoly {
        NcPoly::from_terms(v.iter().enumerate().map(|(i, c)| (FreeMonomial::generator(i), c.clone())))
    }

    /// `p · (φ_x h)` in the free algebra: grade projection, then each letter
    /// is moved by `h`.
    pub fn act(&self, x: DoubleBasisElt, p: &NcPoly) -> Result<NcPoly> {
        let a = self.require_action()?;
        let images: Vec<NcPoly> = (0..self.num_generators()).map(|i| self.linear(a.actions[x.h].row(i))).collect();
        let mut out = NcPoly::zero();
        for (m, c) in p.terms() {
            if self.word_grade(m)? != x.g {
                continue;
            }
            let mut acc = NcPoly::constant(c.clone());
            for &l in m.letters() {
                acc = &acc * &images[l as usize];
            }
            for (w, c) in acc.into_terms() {
                out.add_term(w, c);
            }
        }
        Ok(out)
    }

    /// Action of a group element alone (sum over all grade projections).
    pub fn act_group(&self, h: Elem, p: &NcPoly) -> Result<NcPoly> {
        let a = self.require_action()?;
        let images: Vec<NcPoly> = (0..self.num_generators()).map(|i| self.linear(a.actions[h].row(i))).collect();
        let mut out = NcPoly::zero();
        for (m, c) in p.terms() {
            let mut acc = NcPoly::constant(c.clone());
            for &l in m.letters() {
                acc = &acc * &images[l as usize];
            }
            for (w, c) in acc.into_terms() {
                out.add_term(w, c);
            }
        }
        Ok(out)
    }

    /// Whether the span of the relations is a `D(G)`-submodule of `V ⊗ V`.
    pub fn relation_submodule_check(&self) -> Result<bool> {
        let a = self.require_action()?;
        let vv = a.tensor(a)?;
        let dim = vv.dim();
        let basis = row_basis(&self.relation_vectors()?, dim);
        let rank = basis.len();
        let mut grades: Vec<Elem> = vv.grades.clone();
        grades.sort_unstable();
        grades.dedup();
        let mut all = basis.clone();
        for v in &basis {
            for (_, h) in a.group.generators() {
                all.push(vv.actions[*h].apply(v));
            }
            for &g in &grades {
                all.push(vv.act_vector(v, DoubleBasisElt::new(g, a.group.identity())));
            }
        }
        Ok(row_basis(&all, dim).len() == rank)
    }

    pub fn groebner(&self, bound: usize) -> Result<GroebnerBasis> {
        groebner_basis(self.num_generators(), &self.relations, bound)
    }
}

/// The seven parameters of the dicyclic families.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PaperParams {
    pub alpha: i64,
    pub beta: i64,
    pub gamma: i64,
    pub u: [Cyclotomic; 4],
}

impl PaperParams {
    pub fn new(alpha: i64, beta: i64, gamma: i64, u: [Cyclotomic; 4]) -> Result<Self> {
        for (name, s) in [("alpha", alpha), ("beta", beta), ("gamma", gamma)] {
            if s != 1 && s != -1 {
                return Err(Error::InvalidArgument(format!("{name} must be 1 or -1")));
            }
        }
        if let Some(k) = u.iter().position(Cyclotomic::is_zero) {
            return Err(Error::InvalidArgument(format!("u{} must be nonzero", k + 1)));
        }
        Ok(PaperParams { alpha, beta, gamma, u })
    }

    /// `(α, β, γ, u₁, …, u₄)` with integer `u`'s.
    pub fn from_ints(p: [i64; 7]) -> Result<Self> {
        let c = Cyclotomic::from_int;
        Self::new(p[0], p[1], p[2], [c(p[3]), c(p[4]), c(p[5]), c(p[6])])
    }

    /// Parses `a,b,c,u1,u2,u3,u4` where the `u`'s are cyclotomic expressions.
    pub fn parse(text: &str) -> Result<Self> {
        let parts: Vec<&str> = text.split(',').map(str::trim).collect();
        if parts.len() != 7 {
            return Err(Error::Parse(format!("expected 7 comma-separated parameters, got {}", parts.len())));
        }
        let sign = |s: &str| s.parse::<i64>().map_err(|_| Error::Parse(format!("bad sign `{s}`")));
        let u = [parts[3].parse()?, parts[4].parse()?, parts[5].parse()?, parts[6].parse()?];
        Self::new(sign(parts[0])?, sign(parts[1])?, sign(parts[2])?, u)
    }
}

/// Which two summands of `V₆ ⊗ V₆` supply the relations of an `S₃` candidate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum S3Candidate {
    V0V2,
    V0V3,
    V0V4,
    V0V5,
}

impl std::str::FromStr for S3Candidate {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().replace(['(', ')', ',', ' '], "").as_str() {
            "v0v2" => Ok(S3Candidate::V0V2),
            "v0v3" => Ok(S3Candidate::V0V3),
            "v0v4" => Ok(S3Candidate::V0V4),
            "v0v5" => Ok(S3Candidate::V0V5),
            _ => Err(Error::Parse(format!("unknown S3 candidate `{s}`"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PaperFamily {
    D4(PaperParams),
    D8(PaperParams),
    S3(S3Candidate),
}

fn simple_sum(group: FiniteGroup, indices: &[usize]) -> Result<ModuleData> {
    let g = Arc::new(group);
    let s = simples(&g)?;
    let parts: Vec<&ModuleData> = indices.iter().map(|&i| &s[i].data).collect();
    ModuleData::direct_sum(&parts)
}

fn coef(c: &Cyclotomic) -> String {
    format!("({c})")
}

/// The algebras of the three featured families.
///
/// D4 generators are `x1 < x2 < y1 < y2 < z1 < z2` acting as
/// `V17 ⊕ V20 ⊕ V21`; D8 uses `x1 < x3 < x2 < x4 < y1 < y2 < z1 < z2` on
/// `V45 ⊕ V32 ⊕ V37`; the S3 candidates use `z < y < x` on `V6`.
pub fn build_paper_algebra(family: &PaperFamily) -> Result<AlgebraPresentation> {
    match family {
        PaperFamily::D4(p) => {
            let [u1, u2, u3, u4] = p.u.each_ref().map(coef);
            let (a, b, g) = (p.alpha, p.beta, p.gamma);
            let rels = [
                format!("x1*x2 - ({a})*x2*x1"),
                format!("y1*y2 - ({b})*y2*y1"),
                format!("z1*z2 - ({g})*z2*z1"),
                format!("x1*y1 - {u1}*y1*x2"),
                format!("x2*y1 - {u1}*y1*x1"),
                format!("x1*y2 + {u1}*y2*x2"),
                format!("x2*y2 + {u1}*y2*x1"),
                format!("x1*z1 - i*{u2}*z1*x2"),
                format!("x2*z1 - i*{u2}*z1*x1"),
                format!("i*x1*z2 - {u2}*z2*x2"),
                format!("i*x2*z2 - {u2}*z2*x1"),
                format!("y1*z2 - {u3}*z2*y1"),
                format!("y2*z1 - {u3}*z1*y2"),
                format!("y2*z2 - {u4}*z2*y2"),
                format!("y1*z1 - {u4}*z1*y1"),
            ];
            let rels: Vec<&str> = rels.iter().map(String::as_str).collect();
            let action = simple_sum(FiniteGroup::dicyclic(2)?, &[17, 20, 21])?;
            AlgebraPresentation::from_text(&["x1", "x2", "y1", "y2", "z1", "z2"], &rels, Some(action), 6)
        }
        PaperFamily::D8(p) => {
            let [u1, u2, u3, u4] = p.u.each_ref().map(coef);
            let (b, g) = (p.beta, p.gamma);
            // α/√2 with ω = z(8)
            let k = format!("({}*(1/2)*sqrt2)", p.alpha);
            let w = |e: u32| format!("z(8)^{e}");
            let rels = [
                format!("y1*y2 - ({b})*y2*y1"),
                format!("z1*z2 - ({g})*z2*z1"),
                format!("y1*x1 + {u3}*x1*y2"),
                format!("y2*x1 - {u3}*x1*y1"),
                format!("y1*x2 - {u3}*x2*y2"),
                format!("y2*x2 + {u3}*x2*y1"),
                format!("y1*x3 + {u3}*x3*y2"),
                format!("y2*x3 - {u3}*x3*y1"),
                format!("y1*x4 - {u3}*x4*y2"),
                format!("y2*x4 + {u3}*x4*y1"),
                format!("z1*x1 + {u4}*i*x1*z2"),
                format!("z2*x1 - {u4}*x1*z1"),
                format!("z1*x2 - {u4}*x2*z2"),
                format!("z2*x2 + {u4}*i*x2*z1"),
                format!("z1*x3 - {u4}*i*x3*z2"),
                format!("z2*x3 + {u4}*x3*z1"),
                format!("z1*x4 + {u4}*x4*z2"),
                format!("z2*x4 - {u4}*i*x4*z1"),
                format!("z1*y1 - {u2}*y1*z1"),
                format!("z2*y1 - {u1}*y1*z2"),
                format!("z1*y2 - {u1}*y2*z1"),
                format!("z2*y2 - {u2}*y2*z2"),
                "x1*x3 + x3*x1".to_string(),
                "x2*x4 + x4*x2".to_string(),
                format!("x2*x1 - {k}*({}*x3*x2 + {}*x1*x4)", w(3), w(1)),
                format!("x4*x1 - {k}*({}*x1*x2 + {}*x3*x4)", w(1), w(7)),
                format!("x2*x3 - {k}*({}*x1*x2 + {}*x3*x4)", w(3), w(5)),
                format!("x4*x3 - {k}*({}*x3*x2 + {}*x1*x4)", w(5), w(7)),
            ];
            let rels: Vec<&str> = rels.iter().map(String::as_str).collect();
            let action = simple_sum(FiniteGroup::dicyclic(4)?, &[45, 32, 37])?;
            let natural = AlgebraPresentation::from_text(
                &["x1", "x2", "x3", "x4", "y1", "y2", "z1", "z2"],
                &rels,
                Some(action),
                8,
            )?;
            natural.reordered(&[0, 2, 1, 3, 4, 5, 6, 7])
        }
        PaperFamily::S3(c) => {
            let zeta = |e: u32| format!("z(3)^{e}");
            let second: [String; 2] = match c {
                S3Candidate::V0V2 => [
                    format!("x^2 + {}*y^2 + {}*z^2", zeta(1), zeta(2)),
                    format!("x^2 + {}*y^2 + {}*z^2", zeta(2), zeta(1)),
                ],
                S3Candidate::V0V3 => ["x*y + z*x + y*z".into(), "x*z + y*x + z*y".into()],
                S3Candidate::V0V4 => [
                    format!("x*y + {}*z*x + {}*y*z", zeta(2), zeta(1)),
                    format!("x*z + {}*y*x + {}*z*y", zeta(2), zeta(1)),
                ],
                S3Candidate::V0V5 => [
                    format!("x*y + {}*z*x + {}*y*z", zeta(1), zeta(2)),
                    format!("x*z + {}*y*x + {}*z*y", zeta(1), zeta(2)),
                ],
            };
            let rels = ["x^2 + y^2 + z^2", second[0].as_str(), second[1].as_str()];
            let action = simple_sum(FiniteGroup::symmetric3(), &[6])?;
            let natural = AlgebraPresentation::from_text(&["x", "y", "z"], &rels, Some(action), 3)?;
            natural.reordered(&[2, 1, 0])
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d4(p: [i64; 7]) -> AlgebraPresentation {
        build_paper_algebra(&PaperFamily::D4(PaperParams::from_ints(p).unwrap())).unwrap()
    }

    #[test]
    fn params_are_validated() {
        assert!(PaperParams::from_ints([1, 1, 1, 0, 1, 1, 1]).is_err());
        assert!(PaperParams::from_ints([2, 1, 1, 1, 1, 1, 1]).is_err());
        let p = PaperParams::parse("1, -1, 1, 2, i, 1/2, z(8)").unwrap();
        assert_eq!(p.beta, -1);
        assert_eq!(p.u[1], Cyclotomic::i());
    }

    #[test]
    fn d4_relations_display() {
        let b = d4([1, 1, -1, 1, 1, 1, 1]);
        assert_eq!(b.relations.len(), 15);
        let shown: Vec<String> = b.relations.iter().map(|r| b.display(r)).collect();
        assert!(shown.contains(&"z2*z1 + z1*z2".to_string()), "{shown:?}");
        assert!(b.relation_submodule_check().unwrap());
    }

    #[test]
    fn dropping_a_relation_breaks_stability() {
        let mut b = d4([1, -1, 1, 2, 3, 1, 1]);
        let target = b.parse("x1*y2 + 2*y2*x2").unwrap();
        let before = b.relations.len();
        b.relations.retain(|r| *r != target);
        assert_eq!(b.relations.len(), before - 1);
        assert!(!b.relation_submodule_check().unwrap());
    }

    #[test]
    fn trivial_action_commutative() {
        let g = Arc::new(FiniteGroup::cyclic(2).unwrap());
        let triv = ModuleData {
            group: g.clone(),
            grades: vec![g.identity(); 2],
            actions: g.elements().map(|_| Matrix::identity(2)).collect(),
        };
        let b = AlgebraPresentation::from_text(&["x", "y"], &["y*x - x*y"], Some(triv), 2).unwrap();
        assert!(b.relation_submodule_check().unwrap());
    }

    #[test]
    fn d4_is_pbw() {
        let b = d4([1, 1, -1, 1, 1, 1, 1]);
        let gb = b.groebner(6).unwrap();
        assert_eq!(gb.elements().len(), 15);
        assert!(gb.is_complete());
        assert_eq!(gb.hilbert_coeffs(5).unwrap(), vec![1, 6, 21, 56, 126, 252]);
        assert_eq!(gb.pbw_monomials(2).unwrap().len(), 21);
        assert_eq!(gb.pbw_monomials(0).unwrap(), vec![FreeMonomial::one()]);
    }
}
