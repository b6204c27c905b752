//! Skew polynomial rings and graded trimmed double Ore extensions
//! `A_p[x₁, x₂; σ]` with `x₁x₂ = p x₂x₁` and `(x₁; x₂) r = σ(r) (x₁; x₂)`.

use crate::double::ModuleData;
use crate::error::{Error, Result};
use crate::exactnum::Cyclotomic;
use crate::linalg::Matrix;
use crate::ncalg::{AlgebraPresentation, FreeMonomial, NcPoly, PaperParams};

/// Multiplicatively skew-symmetric matrix: `q_ij q_ji = 1`, `q_ii = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkewMatrix {
    q: Matrix,
}

impl SkewMatrix {
    pub fn new(q: Matrix) -> Result<Self> {
        let n = q.rows();
        if q.cols() != n {
            return Err(Error::InvalidArgument("skew matrix must be square".into()));
        }
        for i in 0..n {
            if !q[(i, i)].is_one() {
                return Err(Error::InvalidArgument(format!("q[{i}][{i}] = {} is not 1", q[(i, i)])));
            }
            for j in 0..i {
                if !(&q[(i, j)] * &q[(j, i)]).is_one() {
                    return Err(Error::InvalidArgument(format!("q[{i}][{j}]·q[{j}][{i}] ≠ 1")));
                }
            }
        }
        Ok(SkewMatrix { q })
    }

    pub fn from_rows(rows: Vec<Vec<Cyclotomic>>) -> Result<Self> {
        Self::new(Matrix::from_rows(rows))
    }

    pub fn size(&self) -> usize {
        self.q.rows()
    }

    pub fn get(&self, i: usize, j: usize) -> &Cyclotomic {
        &self.q[(i, j)]
    }

    pub fn transpose(&self) -> SkewMatrix {
        SkewMatrix { q: self.q.transpose() }
    }

    /// The skewing matrix of the order-eight double:
    /// rows `(1, β, u₄⁻¹, u₃⁻¹; β, 1, u₃⁻¹, u₄⁻¹; u₄, u₃, 1, γ; u₃, u₄, γ, 1)`.
    pub fn quaternion_base(p: &PaperParams) -> Result<SkewMatrix> {
        let c = Cyclotomic::from_int;
        let [_, _, u3, u4] = &p.u;
        let (i3, i4) = (u3.inv()?, u4.inv()?);
        Self::from_rows(vec![
            vec![c(1), c(p.beta), i4.clone(), i3.clone()],
            vec![c(p.beta), c(1), i3, i4],
            vec![u4.clone(), u3.clone(), c(1), c(p.gamma)],
            vec![u3.clone(), u4.clone(), c(p.gamma), c(1)],
        ])
    }
}

/// `k_q[x₁, …, x_n]`: relations `x_j x_i − q_ji x_i x_j` for `i < j`.
pub fn skew_poly(q: &SkewMatrix, names: &[&str], action: Option<ModuleData>) -> Result<AlgebraPresentation> {
    let n = q.size();
    if names.len() != n {
        return Err(Error::InvalidArgument("one name per row of q".into()));
    }
    let mut rels = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let mut r = NcPoly::monomial(FreeMonomial(vec![j as u8, i as u8]), Cyclotomic::one());
            r.add_term(FreeMonomial(vec![i as u8, j as u8]), -q.get(j, i));
            rels.push(r);
        }
    }
    AlgebraPresentation::new(names.iter().map(|s| s.to_string()).collect(), rels, action, n)
}

/// A 2×2 matrix of degree-one elements of the base.
pub type SigmaMatrix = [[NcPoly; 2]; 2];

/// Data of a graded trimmed double Ore extension over `base`.
#[derive(Clone, Debug)]
pub struct DOEData {
    pub base: AlgebraPresentation,
    /// `σ(r)` for each generator `r` of the base, in generator order.
    pub sigma: Vec<SigmaMatrix>,
    pub p: Cyclotomic,
}

fn is_linear(p: &NcPoly) -> bool {
    p.terms().all(|(m, _)| m.degree() == 1)
}

impl DOEData {
    pub fn new(base: AlgebraPresentation, sigma: Vec<SigmaMatrix>, p: Cyclotomic) -> Result<Self> {
        if sigma.len() != base.num_generators() {
            return Err(Error::InvalidArgument(format!(
                "σ given on {} generators, base has {}",
                sigma.len(),
                base.num_generators()
            )));
        }
        if p.is_zero() {
            return Err(Error::InvalidArgument("p must be nonzero".into()));
        }
        if sigma.iter().flatten().flatten().any(|e| !is_linear(e)) {
            return Err(Error::InvalidArgument("σ entries must be linear forms".into()));
        }
        Ok(DOEData { base, sigma, p })
    }

    /// Parses `σ(r)` entries written with the base's generator names.
    pub fn from_text(base: AlgebraPresentation, sigma: &[[[&str; 2]; 2]], p: Cyclotomic) -> Result<Self> {
        let parse = |s: &str| base.parse(s);
        let sigma = sigma
            .iter()
            .map(|m| -> Result<SigmaMatrix> {
                Ok([[parse(m[0][0])?, parse(m[0][1])?], [parse(m[1][0])?, parse(m[1][1])?]])
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(base, sigma, p)
    }

    fn n(&self) -> usize {
        self.base.num_generators()
    }

    /// `σ_ij` on the degree-one part, acting on row vectors: row `k` holds
    /// the coordinates of `σ_ij(a_k)`.
    pub fn component(&self, i: usize, j: usize) -> Matrix {
        let n = self.n();
        Matrix::from_fn(n, n, |k, l| self.sigma[k][i][j].coefficient(&FreeMonomial::generator(l)))
    }

    /// Block matrix whose `(j, i)` block is `σ_ij`, so composition of
    /// matrices of endomorphisms becomes an ordinary product.
    fn block(&self) -> Matrix {
        let n = self.n();
        let comps = [[self.component(0, 0), self.component(0, 1)], [self.component(1, 0), self.component(1, 1)]];
        Matrix::from_fn(2 * n, 2 * n, |a, b| comps[b / n][a / n][(a % n, b % n)].clone())
    }

    fn from_block(&self, m: &Matrix) -> Vec<SigmaMatrix> {
        let n = self.n();
        (0..n)
            .map(|k| {
                let entry = |i: usize, j: usize| {
                    NcPoly::from_terms((0..n).map(|l| (FreeMonomial::generator(l), m[(j * n + k, i * n + l)].clone())))
                };
                [[entry(0, 0), entry(0, 1)], [entry(1, 0), entry(1, 1)]]
            })
            .collect()
    }

    /// Whether `σ` respects every relation of the base.
    pub fn sigma_is_algebra_map(&self) -> Result<bool> {
        respects_relations(&self.base, &self.sigma)
    }

    /// The inverse `φ` on degree one, if it exists and is an algebra map.
    pub fn sigma_inverse(&self) -> Result<Option<Vec<SigmaMatrix>>> {
        let Some(inv) = self.block().inverse() else {
            return Ok(None);
        };
        let phi = self.from_block(&inv);
        Ok(respects_relations(&self.base, &phi)?.then_some(phi))
    }

    pub fn sigma_invertible(&self) -> Result<bool> {
        Ok(self.sigma_inverse()?.is_some())
    }

    /// The three compatibility conditions on every generator, as identities
    /// of linear maps on the degree-one part.
    pub fn do_conditions(&self) -> bool {
        let s = |i, j| self.component(i, j);
        let (s11, s12, s21, s22) = (s(0, 0), s(0, 1), s(1, 0), s(1, 1));
        let p = &self.p;
        let p2 = p * p;
        // σ_a(σ_b(r)) is r·S_b·S_a in the row convention
        let c1 = s11.mul(&s21) == s21.mul(&s11).scale(p);
        let lhs = s12.mul(&s21).add(&s21.mul(&s12).scale(&-&p2));
        let rhs = s22.mul(&s11).add(&s11.mul(&s22).scale(&Cyclotomic::from_int(-1))).scale(p);
        let c2 = lhs == rhs;
        let c3 = s12.mul(&s22) == s22.mul(&s12).scale(p);
        c1 && c2 && c3
    }

    /// Shape of every `σ(r)`, when uniform.
    pub fn shape(&self) -> Option<SigmaShape> {
        let zero = |e: &NcPoly| e.is_zero();
        if self.sigma.iter().all(|m| zero(&m[0][1]) && zero(&m[1][0])) {
            Some(SigmaShape::Diagonal)
        } else if self.sigma.iter().all(|m| zero(&m[0][0]) && zero(&m[1][1])) {
            Some(SigmaShape::SkewDiagonal)
        } else {
            None
        }
    }

    /// The commuting criterion for uniformly diagonal or skew-diagonal data.
    /// For skew-diagonal data it is equivalent to the full conditions only
    /// when `p² = 1`, so it is not offered otherwise.
    pub fn shortcut_conditions(&self) -> Option<bool> {
        let commute = |a: &Matrix, b: &Matrix| a.mul(b) == b.mul(a);
        match self.shape()? {
            SigmaShape::Diagonal => Some(commute(&self.component(0, 0), &self.component(1, 1))),
            SigmaShape::SkewDiagonal if (&self.p * &self.p).is_one() => {
                Some(commute(&self.component(0, 1), &self.component(1, 0)))
            }
            SigmaShape::SkewDiagonal => None,
        }
    }

    /// Presentation of `A_p[x₁, x₂; σ]`, new generators appended after the
    /// base's so that normal words keep the base on the left.
    pub fn build(&self, new_names: [&str; 2], action: Option<ModuleData>) -> Result<AlgebraPresentation> {
        if !self.sigma_is_algebra_map()? {
            return Err(Error::CheckFailed("σ is not an algebra map".into()));
        }
        if !self.do_conditions() {
            return Err(Error::CheckFailed("double Ore conditions fail".into()));
        }
        let n = self.n();
        let mut names = self.base.names.clone();
        names.extend(new_names.iter().map(|s| s.to_string()));
        let x = [n as u8, n as u8 + 1];
        let mut rels = self.base.relations.clone();
        let mut r = NcPoly::monomial(FreeMonomial(vec![x[0], x[1]]), Cyclotomic::one());
        r.add_term(FreeMonomial(vec![x[1], x[0]]), -&self.p);
        rels.push(r);
        for (k, m) in self.sigma.iter().enumerate() {
            for i in 0..2 {
                let mut rel = NcPoly::monomial(FreeMonomial(vec![x[i], k as u8]), Cyclotomic::one());
                for (j, &xj) in x.iter().enumerate() {
                    let right = NcPoly::generator(xj as usize);
                    rel = &rel - &(&m[i][j] * &right);
                }
                rels.push(rel);
            }
        }
        AlgebraPresentation::new(names, rels, action, self.base.expected_gkdim + 2)
    }

    pub fn display_sigma(&self) -> Vec<String> {
        self.sigma
            .iter()
            .zip(&self.base.names)
            .map(|(m, r)| {
                let d = |e: &NcPoly| self.base.display(e);
                format!("σ({r}) = [[{}, {}], [{}, {}]]", d(&m[0][0]), d(&m[0][1]), d(&m[1][0]), d(&m[1][1]))
            })
            .collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SigmaShape {
    Diagonal,
    SkewDiagonal,
}

/// Substitutes `map` into each quadratic relation of `base` and reduces the
/// four entries modulo the base ideal.
fn respects_relations(base: &AlgebraPresentation, map: &[SigmaMatrix]) -> Result<bool> {
    let gb = base.groebner(3)?;
    for rel in &base.relations {
        let mut out: [[NcPoly; 2]; 2] = Default::default();
        for (m, c) in rel.terms() {
            let [a, b] = m.letters() else {
                return Err(Error::InvalidArgument("base relations must be quadratic".into()));
            };
            let (sa, sb) = (&map[*a as usize], &map[*b as usize]);
            for i in 0..2 {
                for j in 0..2 {
                    for k in 0..2 {
                        let t = (&sa[i][k] * &sb[k][j]).scale(c);
                        out[i][j] = &out[i][j] + &t;
                    }
                }
            }
        }
        for e in out.iter().flatten() {
            if !gb.normal_form(e)?.is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn base_of(q: &SkewMatrix, names: &[&str]) -> Result<AlgebraPresentation> {
    skew_poly(q, names, None)
}

fn text(c: &Cyclotomic) -> String {
    format!("({c})")
}

/// The order-eight data: base `k_q[y₁, y₂, z₁, z₂]` (with `q` transposed
/// relative to the reference matrix) and skew-diagonal `σ`, `p = α`.
pub fn quaternion_data(p: &PaperParams) -> Result<DOEData> {
    let q = SkewMatrix::quaternion_base(p)?.transpose();
    let base = base_of(&q, &["y1", "y2", "z1", "z2"])?;
    let (u1, u2) = (text(&p.u[0]), text(&p.u[1]));
    let anti = |e: String| [["0".to_string(), e.clone()], [e, "0".to_string()]];
    let sig = [
        anti(format!("{u1}*y1")),
        anti(format!("-{u1}*y2")),
        anti(format!("i*{u2}*z1")),
        anti(format!("-i*{u2}*z2")),
    ];
    let sig: Vec<[[&str; 2]; 2]> = sig
        .iter()
        .map(|m| [[m[0][0].as_str(), m[0][1].as_str()], [m[1][0].as_str(), m[1][1].as_str()]])
        .collect();
    DOEData::from_text(base, &sig, Cyclotomic::from_int(p.alpha))
}

/// The three stages of the order-sixteen construction. Stage `k` takes the
/// presentation built by stage `k − 1` as its base (stage 1 uses the
/// `(−1)`-skew plane on `x₁, x₃`).
pub fn octic_stage(p: &PaperParams, stage: usize, base: Option<AlgebraPresentation>) -> Result<DOEData> {
    let owned = |m: [[String; 2]; 2]| m;
    let z = |s: &str| s.to_string();
    match stage {
        1 => {
            let q = SkewMatrix::from_rows(vec![
                vec![Cyclotomic::one(), Cyclotomic::from_int(-1)],
                vec![Cyclotomic::from_int(-1), Cyclotomic::one()],
            ])?;
            let base = base_of(&q, &["x1", "x3"])?;
            let k = format!("({}*(1/2)*sqrt2)", p.alpha);
            let w = |e: u32, v: &str| format!("{k}*z(8)^{e}*{v}");
            let sig = [
                owned([[w(3, "x3"), w(1, "x1")], [w(1, "x1"), w(7, "x3")]]),
                owned([[w(3, "x1"), w(5, "x3")], [w(5, "x3"), w(7, "x1")]]),
            ];
            let sig: Vec<[[&str; 2]; 2]> = sig.iter().map(|m| m.each_ref().map(|r| r.each_ref().map(String::as_str))).collect();
            DOEData::from_text(base, &sig, Cyclotomic::from_int(-1))
        }
        2 => {
            let base = base.ok_or_else(|| Error::InvalidArgument("stage 2 needs the stage-1 extension".into()))?;
            let u3 = text(&p.u[2]);
            let row = |v: &str, sign: i64| {
                let s = if sign > 0 { "" } else { "-" };
                let t = if sign > 0 { "-" } else { "" };
                owned([[z("0"), format!("{t}{u3}*{v}")], [format!("{s}{u3}*{v}"), z("0")]])
            };
            // base order x1, x3, x2, x4
            let sig = [row("x1", 1), row("x3", 1), row("x2", -1), row("x4", -1)];
            let sig: Vec<[[&str; 2]; 2]> = sig.iter().map(|m| m.each_ref().map(|r| r.each_ref().map(String::as_str))).collect();
            DOEData::from_text(base, &sig, Cyclotomic::from_int(p.beta))
        }
        3 => {
            let base = base.ok_or_else(|| Error::InvalidArgument("stage 3 needs the stage-2 extension".into()))?;
            let (u1, u2, u4) = (text(&p.u[0]), text(&p.u[1]), text(&p.u[3]));
            let xs = |v: &str, a: &str, b: &str| owned([[z("0"), format!("{a}{u4}*{v}")], [format!("{b}{u4}*{v}"), z("0")]]);
            let sig = [
                xs("x1", "-i*", ""),
                xs("x3", "i*", "-"),
                xs("x2", "", "-i*"),
                xs("x4", "-", "i*"),
                owned([[format!("{u2}*y1"), z("0")], [z("0"), format!("{u1}*y1")]]),
                owned([[format!("{u1}*y2"), z("0")], [z("0"), format!("{u2}*y2")]]),
            ];
            let sig: Vec<[[&str; 2]; 2]> = sig.iter().map(|m| m.each_ref().map(|r| r.each_ref().map(String::as_str))).collect();
            DOEData::from_text(base, &sig, Cyclotomic::from_int(p.gamma))
        }
        _ => Err(Error::InvalidArgument(format!("no stage {stage}"))),
    }
}

/// Runs all three stages and returns each stage's data and extension.
pub fn octic_tower(p: &PaperParams) -> Result<Vec<(DOEData, AlgebraPresentation)>> {
    let names = [["x2", "x4"], ["y1", "y2"], ["z1", "z2"]];
    let mut out: Vec<(DOEData, AlgebraPresentation)> = Vec::new();
    for stage in 1..=3 {
        let base = out.last().map(|(_, b)| b.clone());
        let data = octic_stage(p, stage, base)?;
        let ext = data.build(names[stage - 1], None)?;
        out.push((data, ext));
    }
    Ok(out)
}

/// Whether two quadratic presentations on the same generator names define
/// the same degree-two relation space.
pub fn same_quadratic_ideal(a: &AlgebraPresentation, b: &AlgebraPresentation) -> Result<bool> {
    if a.num_generators() != b.num_generators() {
        return Ok(false);
    }
    let order: Option<Vec<usize>> = b.names.iter().map(|n| a.generator(n)).collect();
    let Some(order) = order else { return Ok(false) };
    let a = a.reordered(&order)?;
    let dim = a.num_generators().pow(2);
    Ok(crate::linalg::same_span(&a.relation_vectors()?, &b.relation_vectors()?, dim))
}
