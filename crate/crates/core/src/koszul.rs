//! Quadratic duals, the top form of the dual, twisted superpotentials,
//! homological determinants and Nakayama automorphisms.

use std::fmt;

use crate::error::{Error, Result};
use crate::exactnum::Cyclotomic;
use crate::group::Elem;
use crate::linalg::{same_span, Matrix, Vector};
use crate::ncalg::{AlgebraPresentation, FreeMonomial, GroebnerBasis, NcPoly};

/// `T(V*) / ⟨I^⊥⟩`, pairing `x_i* x_j*` with `x_i x_j`.
#[derive(Clone, Debug)]
pub struct DualPresentation {
    pub pres: AlgebraPresentation,
}

fn dual_name(n: &str) -> String {
    format!("{n}_dual")
}

fn vector_to_quadratic(v: &[Cyclotomic], n: usize) -> NcPoly {
    NcPoly::from_terms(
        v.iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| (FreeMonomial(vec![(k / n) as u8, (k % n) as u8]), c.clone())),
    )
}

/// The annihilator of the relation span inside `V* ⊗ V*`.
pub fn quadratic_dual(pres: &AlgebraPresentation) -> Result<DualPresentation> {
    let n = pres.num_generators();
    let rels = pres.relation_vectors()?;
    let perp: Vec<Vector> = if rels.is_empty() {
        (0..n * n).map(|k| (0..n * n).map(|l| Cyclotomic::from_int((k == l) as i64)).collect()).collect()
    } else {
        Matrix::from_rows(rels).nullspace()
    };
    let names = pres.names.iter().map(|s| dual_name(s)).collect();
    let relations = perp.iter().map(|v| vector_to_quadratic(v, n)).collect();
    let pres = AlgebraPresentation::new(names, relations, None, 0)?;
    Ok(DualPresentation { pres })
}

impl DualPresentation {
    pub fn relation_count(&self) -> usize {
        self.pres.relations.len()
    }

    /// The dual of the dual, on the original names.
    pub fn dual(&self) -> Result<AlgebraPresentation> {
        let back = quadratic_dual(&self.pres)?;
        let names = self.pres.names.iter().map(|s| s.trim_end_matches("_dual").to_string()).collect();
        AlgebraPresentation::new(names, back.pres.relations, None, 0)
    }
}

/// Whether two presentations on the same generators share their quadratic
/// relation span.
pub fn same_relation_span(a: &AlgebraPresentation, b: &AlgebraPresentation) -> Result<bool> {
    let n = a.num_generators();
    Ok(n == b.num_generators() && same_span(&a.relation_vectors()?, &b.relation_vectors()?, n * n))
}

/// Normal-word bases of the dual in each degree up to `n`, with right
/// multiplication by each generator, so that any word's class is a product
/// of small matrices.
#[derive(Clone, Debug)]
pub struct TopForm {
    pub dual: DualPresentation,
    pub degree: usize,
    bases: Vec<Vec<FreeMonomial>>,
    /// `right[k][j]`: row `a` is the class of `basis[k][a]·x_j*` in degree `k + 1`.
    right: Vec<Vec<Matrix>>,
    pub theta: FreeMonomial,
    theta_coord: Vector,
}

impl TopForm {
    /// Dimension of the degree-`n` part of the dual.
    pub fn dimension(&self) -> usize {
        self.bases[self.degree].len()
    }

    pub fn dimensions(&self) -> Vec<usize> {
        self.bases.iter().map(Vec::len).collect()
    }

    pub fn basis(&self, k: usize) -> &[FreeMonomial] {
        &self.bases[k]
    }

    /// Coordinates of a word's class in the normal basis of its degree.
    pub fn class_of(&self, word: &[u8]) -> Vector {
        let mut v = vec![Cyclotomic::one()];
        for (k, &j) in word.iter().enumerate() {
            if v.iter().all(Cyclotomic::is_zero) {
                return vec![Cyclotomic::zero(); self.bases[word.len()].len()];
            }
            v = self.right[k][j as usize].apply(&v);
        }
        v
    }

    /// `c` with `word = c·ϑ` in the top degree.
    pub fn coefficient(&self, word: &[u8]) -> Result<Cyclotomic> {
        if word.len() != self.degree {
            return Err(Error::InvalidArgument("word is not of top degree".into()));
        }
        self.ratio(&self.class_of(word))
    }

    fn ratio(&self, v: &[Cyclotomic]) -> Result<Cyclotomic> {
        if self.dimension() != 1 {
            return Err(Error::CheckFailed(format!("top degree has dimension {}", self.dimension())));
        }
        Ok(&v[0] / &self.theta_coord[0])
    }

    fn theta_display(&self) -> String {
        self.theta.letters().iter().map(|&l| self.dual.pres.names[l as usize].as_str()).collect::<Vec<_>>().join("·")
    }
}

/// Builds the top form of the dual in degree `n`. `ϑ` is the product of
/// the generators in presentation order when nonzero, else the first normal
/// word.
pub fn dual_top(dual: &DualPresentation, n: usize) -> Result<TopForm> {
    let g = dual.pres.num_generators();
    let gb = dual.pres.groebner(n + 1)?;
    let bases: Vec<Vec<FreeMonomial>> = (0..=n).map(|k| gb.normal_words(k)).collect::<Result<_>>()?;
    let right = (0..n).map(|k| right_mult(&gb, &bases[k], &bases[k + 1], g)).collect::<Result<Vec<_>>>()?;
    let mut top = TopForm {
        dual: dual.clone(),
        degree: n,
        bases,
        right,
        theta: FreeMonomial::one(),
        theta_coord: Vec::new(),
    };
    let ordered: Vec<u8> = (0..g.min(n) as u8).collect();
    let candidate = top.class_of(&ordered);
    if ordered.len() == n && candidate.iter().any(|c| !c.is_zero()) {
        top.theta = FreeMonomial(ordered);
        top.theta_coord = candidate;
    } else if let Some(w) = top.bases[n].first().cloned() {
        top.theta_coord = top.class_of(w.letters());
        top.theta = w;
    }
    Ok(top)
}

fn right_mult(gb: &GroebnerBasis, from: &[FreeMonomial], to: &[FreeMonomial], g: usize) -> Result<Vec<Matrix>> {
    let index: std::collections::HashMap<&FreeMonomial, usize> = to.iter().enumerate().map(|(i, w)| (w, i)).collect();
    (0..g)
        .map(|j| {
            let mut m = Matrix::zeros(from.len(), to.len());
            for (a, w) in from.iter().enumerate() {
                let prod = NcPoly::monomial(w.mul(&FreeMonomial::generator(j)), Cyclotomic::one());
                for (word, c) in gb.normal_form(&prod)?.terms() {
                    let b = index.get(word).ok_or_else(|| Error::CheckFailed("normal form left the normal basis".into()))?;
                    m[(a, *b)] = c.clone();
                }
            }
            Ok(m)
        })
        .collect()
}

/// `w = Σ c_J x_J` over words of top degree, together with `ϑ`.
#[derive(Clone, Debug)]
pub struct Superpotential {
    pub w: NcPoly,
    pub theta: String,
    /// Whether every monomial has identity grade; `None` without an action.
    pub identity_grade: Option<bool>,
}

impl Superpotential {
    pub fn coefficient(&self, pres: &AlgebraPresentation, word: &str) -> Result<Cyclotomic> {
        let p = pres.parse(word)?;
        let (m, _) = p.terms().next().ok_or_else(|| Error::InvalidArgument("empty word".into()))?;
        Ok(self.w.coefficient(m))
    }

    /// Left derivatives by every word of length `deg − 2`.
    pub fn quadratic_derivatives(&self) -> Vec<NcPoly> {
        let mut by_prefix: std::collections::BTreeMap<Vec<u8>, NcPoly> = Default::default();
        for (m, c) in self.w.terms() {
            let l = m.letters();
            let (pre, rest) = l.split_at(l.len() - 2);
            by_prefix.entry(pre.to_vec()).or_insert_with(NcPoly::zero).add_term(FreeMonomial(rest.to_vec()), c.clone());
        }
        by_prefix.into_values().filter(|p| !p.is_zero()).collect()
    }
}

/// Reads `w` off the dual's top form; the expansion over words prunes any
/// prefix whose class vanishes.
pub fn superpotential(pres: &AlgebraPresentation) -> Result<(Superpotential, TopForm)> {
    let n = pres.num_generators();
    let top = dual_top(&quadratic_dual(pres)?, n)?;
    if top.dimension() != 1 {
        return Err(Error::CheckFailed(format!("dual has dimension {} in degree {n}", top.dimension())));
    }
    let mut terms = Vec::new();
    let mut stack: Vec<(Vec<u8>, Vector)> = vec![(Vec::new(), vec![Cyclotomic::one()])];
    while let Some((word, v)) = stack.pop() {
        if word.len() == n {
            terms.push((FreeMonomial(word), top.ratio(&v)?));
            continue;
        }
        for j in 0..n as u8 {
            let next = top.right[word.len()][j as usize].apply(&v);
            if next.iter().any(|c| !c.is_zero()) {
                let mut w = word.clone();
                w.push(j);
                stack.push((w, next));
            }
        }
    }
    let w = NcPoly::from_terms(terms);
    let identity_grade = match &pres.action {
        Some(a) => {
            let e = a.group.identity();
            let mut ok = true;
            for (m, _) in w.terms() {
                ok &= pres.word_grade(m)? == e;
            }
            Some(ok)
        }
        None => None,
    };
    let theta = top.theta_display();
    Ok((Superpotential { w, theta, identity_grade }, top))
}

/// Homological determinant read from the action on `w`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hdet {
    pub grade_trivial: bool,
    pub values: Vec<(String, Cyclotomic)>,
}

impl Hdet {
    pub fn value(&self, name: &str) -> Option<&Cyclotomic> {
        self.values.iter().find(|(n, _)| n == name).map(|(_, v)| v)
    }

    pub fn is_trivial(&self) -> bool {
        self.grade_trivial && self.values.iter().all(|(_, v)| v.is_one())
    }
}

/// Eigenvalue of a group element on `w`; fails when `w` is not an eigenvector.
pub fn eigenvalue_on(pres: &AlgebraPresentation, w: &NcPoly, h: Elem) -> Result<Cyclotomic> {
    let image = pres.act_group(h, w)?;
    let (m, c) = w.terms().next().ok_or_else(|| Error::InvalidArgument("zero superpotential".into()))?;
    let lambda = &image.coefficient(m) / c;
    if image != w.scale(&lambda) {
        return Err(Error::CheckFailed("superpotential is not an eigenvector".into()));
    }
    Ok(lambda)
}

pub fn hdet(pres: &AlgebraPresentation, sp: &Superpotential) -> Result<Hdet> {
    let group = pres.group().ok_or_else(|| Error::InvalidArgument("presentation has no Hopf action".into()))?.clone();
    let values = group
        .generators()
        .iter()
        .map(|(name, h)| Ok((name.clone(), eigenvalue_on(pres, &sp.w, *h)?)))
        .collect::<Result<Vec<_>>>()?;
    Ok(Hdet { grade_trivial: sp.identity_grade.unwrap_or(false), values })
}

/// `ν` on the dual's degree one, from `a·b = b·ν(a)` for `b` in degree
/// `n − 1`; row `i` is `ν(x_i*)`.
pub fn frobenius_nakayama(top: &TopForm) -> Result<Matrix> {
    let n = top.degree;
    let g = top.dual.pres.num_generators();
    let sub = top.basis(n - 1).to_vec();
    let left = Matrix::from_fn(g, sub.len(), |i, b| {
        let mut w = vec![i as u8];
        w.extend_from_slice(sub[b].letters());
        top.coefficient(&w).unwrap_or_else(|_| Cyclotomic::zero())
    });
    let right = Matrix::from_fn(sub.len(), g, |b, k| {
        let mut w = sub[b].letters().to_vec();
        w.push(k as u8);
        top.coefficient(&w).unwrap_or_else(|_| Cyclotomic::zero())
    });
    if sub.len() != g {
        return Err(Error::CheckFailed("degree n − 1 of the dual does not match degree one".into()));
    }
    let inv = right.transpose().inverse().ok_or_else(|| Error::CheckFailed("Frobenius form is degenerate".into()))?;
    Ok(left.mul(&inv))
}

/// Ways of moving `ν` from the dual to `B₁`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Transport {
    pub transpose: bool,
    pub inverse: bool,
    /// Scale by `(−1)^{n+1}`, `n` the number of generators.
    pub parity: bool,
}

impl Transport {
    pub const ALL: [Transport; 8] = {
        let mut all = [Transport { transpose: false, inverse: false, parity: false }; 8];
        let mut k = 0;
        while k < 8 {
            all[k] = Transport { inverse: k & 1 == 1, parity: k & 2 == 2, transpose: k & 4 == 4 };
            k += 1;
        }
        all
    };

    pub fn apply(&self, nu: &Matrix) -> Result<Matrix> {
        let mut m = nu.clone();
        if self.inverse {
            m = m.inverse().ok_or_else(|| Error::CheckFailed("ν is singular".into()))?;
        }
        if self.transpose {
            m = m.transpose();
        }
        if self.parity && m.rows().is_multiple_of(2) {
            m = m.scale(&Cyclotomic::from_int(-1));
        }
        Ok(m)
    }
}

impl fmt::Display for Transport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = String::from("ν");
        if self.inverse {
            s = format!("{s}⁻¹");
        }
        if self.transpose {
            s = format!("({s})ᵀ");
        }
        if self.parity {
            s = format!("(−1)^(n+1)·{s}");
        }
        f.write_str(&s)
    }
}

/// The transport fixed once by matching the order-eight family at all
/// parameters equal to one: `μ = (−1)^{n+1} ν`.
pub const CALIBRATED: Transport = Transport { transpose: false, inverse: false, parity: true };

/// Nakayama automorphism of `B₁` under the calibrated transport; row `i`
/// is `μ(x_i)`.
pub fn nakayama(pres: &AlgebraPresentation) -> Result<Matrix> {
    nakayama_with(pres, CALIBRATED)
}

pub fn nakayama_with(pres: &AlgebraPresentation, transport: Transport) -> Result<Matrix> {
    let n = pres.num_generators();
    let top = dual_top(&quadratic_dual(pres)?, n)?;
    transport.apply(&frobenius_nakayama(&top)?)
}

/// Whether the quadratic left derivatives of `w` span the relation space.
pub fn derivation_quotient_check(pres: &AlgebraPresentation, sp: &Superpotential) -> Result<bool> {
    let n = pres.num_generators();
    let derivs = sp
        .quadratic_derivatives()
        .iter()
        .map(|p| {
            let mut v = vec![Cyclotomic::zero(); n * n];
            for (m, c) in p.terms() {
                let l = m.letters();
                v[l[0] as usize * n + l[1] as usize] = c.clone();
            }
            v
        })
        .collect::<Vec<_>>();
    Ok(same_span(&derivs, &pres.relation_vectors()?, n * n))
}

/// The first transport (in `Transport::ALL` order) matching `expected`.
pub fn calibrate(nu: &Matrix, expected: &Matrix) -> Option<Transport> {
    Transport::ALL.into_iter().find(|t| t.apply(nu).ok().as_ref() == Some(expected))
}
