//! Invariants of the `D(Q8)` action on the six-generator algebra: the
//! averaging engine, orbit sums over the set `X`, the Broer-type degree
//! bound, and a SAGBI-style generation certificate.

use std::sync::Mutex;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::exactnum::Cyclotomic;
use crate::group::{Elem, FiniteGroup};
use crate::linalg::Matrix;
use crate::ncalg::{AlgebraPresentation, FreeMonomial, GroebnerBasis, NcPoly, PaperParams};

/// `(a₁, a₂, b₁, b₂, c₁, c₂)`, the exponents of
/// `x₁^{a₁} x₂^{a₂} y₁^{b₁} y₂^{b₂} z₁^{c₁} z₂^{c₂}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExponentVector(pub [u32; 6]);

impl ExponentVector {
    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn word(&self) -> FreeMonomial {
        FreeMonomial::from_exponents(&self.0)
    }

    pub fn of_word(w: &FreeMonomial) -> Result<Self> {
        if !w.is_sorted() || w.letters().iter().any(|&l| l >= 6) {
            return Err(Error::InvalidArgument("not a PBW word on six generators".into()));
        }
        let e = w.exponents(6);
        Ok(ExponentVector([e[0], e[1], e[2], e[3], e[4], e[5]]))
    }

    pub fn add(&self, other: &Self) -> Self {
        ExponentVector(std::array::from_fn(|k| self.0[k] + other.0[k]))
    }

    /// `a·r`: every pair is swapped.
    pub fn act_r(&self) -> Self {
        let [a1, a2, b1, b2, c1, c2] = self.0;
        ExponentVector([a2, a1, b2, b1, c2, c1])
    }

    /// `a·s`: the `y` and `z` pairs are swapped.
    pub fn act_s(&self) -> Self {
        let [a1, a2, b1, b2, c1, c2] = self.0;
        ExponentVector([a1, a2, b2, b1, c2, c1])
    }

    pub fn act_rs(&self) -> Self {
        self.act_r().act_s()
    }

    pub fn all_of_degree(d: u32) -> Vec<ExponentVector> {
        let mut out = Vec::new();
        let mut cur = [0u32; 6];
        fn rec(k: usize, left: u32, cur: &mut [u32; 6], out: &mut Vec<ExponentVector>) {
            if k == 5 {
                cur[5] = left;
                out.push(ExponentVector(*cur));
                return;
            }
            for v in (0..=left).rev() {
                cur[k] = v;
                rec(k + 1, left - v, cur, out);
            }
        }
        rec(0, d, &mut cur, &mut out);
        out
    }
}

impl fmt::Display for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl FromStr for ExponentVector {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let parts = s
            .trim()
            .trim_start_matches('(')
            .trim_end_matches(')')
            .split(',')
            .map(|p| p.trim().parse::<u32>().map_err(|_| Error::Parse(format!("bad exponent `{p}`"))))
            .collect::<Result<Vec<_>>>()?;
        let arr: [u32; 6] = parts.try_into().map_err(|_| Error::Parse("exactly six exponents expected".into()))?;
        Ok(ExponentVector(arr))
    }
}

/// Grade `s^{a₁−a₂} (sr)^{b₁−b₂+c₁−c₂}` in `Q8`.
pub fn monomial_grade(group: &FiniteGroup, a: &ExponentVector) -> Result<Elem> {
    let [a1, a2, b1, b2, c1, c2] = a.0.map(i64::from);
    let s = group.parse_word("s")?;
    let sr = group.parse_word("s*r")?;
    Ok(group.mul(group.pow(s, a1 - a2), group.pow(sr, b1 - b2 + c1 - c2)))
}

/// Membership in `X`: `a₁ ≥ a₂`, `b₁ ≥ b₂`, the sums and differences of
/// each pair even, and `a₁ − a₂ ≡ b₁ − b₂ + c₁ − c₂ (mod 4)`.
pub fn in_x(a: &ExponentVector) -> bool {
    let [a1, a2, b1, b2, c1, c2] = a.0.map(i64::from);
    a1 >= a2
        && b1 >= b2
        && (a1 + a2) % 2 == 0
        && (b1 + b2) % 2 == 0
        && (c1 + c2) % 2 == 0
        && (a1 - a2 - (b1 - b2 + c1 - c2)).rem_euclid(4) == 0
}

/// Elements of `X` of total degree `d`.
pub fn x_of_degree(d: u32) -> Vec<ExponentVector> {
    ExponentVector::all_of_degree(d).into_iter().filter(in_x).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OrbitElement {
    R,
    S,
    Rs,
}

fn sign(k: u32) -> Cyclotomic {
    Cyclotomic::from_int(if k.is_multiple_of(2) { 1 } else { -1 })
}

fn ipow(k: u32) -> Cyclotomic {
    Cyclotomic::i().pow(i64::from(k % 4)).expect("i is invertible")
}

fn pm(x: i64, k: u32) -> Cyclotomic {
    sign(if x < 0 { k } else { 0 })
}

/// The closed forms of `λ(a, g)` for `g ∈ {r, s, rs}`, valid for exponent
/// vectors meeting the parity conditions.
pub fn lambda(a: &ExponentVector, g: OrbitElement, alpha: i64, beta: i64, gamma: i64) -> Cyclotomic {
    let [a1, a2, b1, _, c1, c2] = a.0;
    match g {
        OrbitElement::R => &(&(&sign(a1) * &ipow(c1 + c2)) * &pm(alpha, a1)) * &(&pm(beta, b1) * &pm(gamma, c1)),
        OrbitElement::S => &(&sign(a1 + c1) * &ipow(a1 + a2)) * &(&pm(beta, b1) * &pm(gamma, c1)),
        OrbitElement::Rs => &(&sign(c1) * &ipow(c1 + c2 + a1 + a2)) * &pm(alpha, a1),
    }
}

/// Normal forms, products and the group action on a PBW algebra with a
/// Hopf action. Monomial products are cached.
pub struct InvariantEngine {
    pub pres: AlgebraPresentation,
    gb: GroebnerBasis,
    group: std::sync::Arc<FiniteGroup>,
    products: Mutex<HashMap<(FreeMonomial, FreeMonomial), NcPoly>>,
}

impl fmt::Debug for InvariantEngine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("InvariantEngine").field("names", &self.pres.names).finish()
    }
}

impl InvariantEngine {
    pub fn new(pres: AlgebraPresentation) -> Result<Self> {
        let group = pres.group().ok_or_else(|| Error::InvalidArgument("presentation has no Hopf action".into()))?.clone();
        let gb = pres.groebner(3)?;
        if !gb.is_complete() {
            return Err(Error::CheckFailed("Gröbner basis is not finite in degree three".into()));
        }
        Ok(InvariantEngine { pres, gb, group, products: Mutex::new(HashMap::new()) })
    }

    /// The order-eight family at the given parameters.
    pub fn quaternion(p: PaperParams) -> Result<Self> {
        Self::new(crate::ncalg::build_paper_algebra(&crate::ncalg::PaperFamily::D4(p))?)
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn parse(&self, text: &str) -> Result<NcPoly> {
        self.nf(&self.pres.parse(text)?)
    }

    pub fn display(&self, p: &NcPoly) -> String {
        self.pres.display(p)
    }

    pub fn nf(&self, p: &NcPoly) -> Result<NcPoly> {
        self.gb.normal_form(p)
    }

    pub fn mul(&self, a: &NcPoly, b: &NcPoly) -> Result<NcPoly> {
        let mut out = NcPoly::zero();
        for (ma, ca) in a.terms() {
            for (mb, cb) in b.terms() {
                let key = (ma.clone(), mb.clone());
                let cached = self.products.lock().expect("cache lock").get(&key).cloned();
                let prod = match cached {
                    Some(p) => p,
                    None => {
                        let p = self.nf(&NcPoly::monomial(ma.mul(mb), Cyclotomic::one()))?;
                        self.products.lock().expect("cache lock").insert(key, p.clone());
                        p
                    }
                };
                let c = ca * cb;
                for (m, d) in prod.terms() {
                    out.add_term(m.clone(), &c * d);
                }
            }
        }
        Ok(out)
    }

    pub fn product(&self, factors: &[&NcPoly]) -> Result<NcPoly> {
        let mut acc = NcPoly::one();
        for f in factors {
            acc = self.mul(&acc, f)?;
        }
        Ok(acc)
    }

    pub fn power(&self, f: &NcPoly, k: u32) -> Result<NcPoly> {
        let mut acc = NcPoly::one();
        for _ in 0..k {
            acc = self.mul(&acc, f)?;
        }
        Ok(acc)
    }

    /// `p·h` reduced to normal form.
    pub fn act(&self, h: Elem, p: &NcPoly) -> Result<NcPoly> {
        self.nf(&self.pres.act_group(h, p)?)
    }

    pub fn element(&self, word: &str) -> Result<Elem> {
        self.group.parse_word(word)
    }

    /// Fixed by every group generator.
    pub fn is_group_invariant(&self, p: &NcPoly) -> Result<bool> {
        for (_, h) in self.group.generators() {
            if self.act(*h, p)? != *p {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Every monomial has identity grade.
    pub fn is_identity_graded(&self, p: &NcPoly) -> Result<bool> {
        let e = self.group.identity();
        for (m, _) in p.terms() {
            if self.pres.word_grade(m)? != e {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Invariant under the whole double: grade `e` and group invariant.
    pub fn is_invariant(&self, p: &NcPoly) -> Result<bool> {
        Ok(self.is_identity_graded(p)? && self.is_group_invariant(p)?)
    }

    /// `x^a · g = λ x^{a'}` when the image is a single monomial.
    pub fn monomial_action(&self, a: &ExponentVector, g: Elem) -> Result<Option<(Cyclotomic, ExponentVector)>> {
        let img = self.act(g, &NcPoly::monomial(a.word(), Cyclotomic::one()))?;
        if img.len() != 1 {
            return Ok(None);
        }
        let (m, c) = img.terms().next().expect("one term");
        Ok(Some((c.clone(), ExponentVector::of_word(m)?)))
    }

    fn monomial_words(&self, d: usize) -> Vec<FreeMonomial> {
        let n = self.pres.num_generators();
        let mut out = Vec::new();
        fn rec(start: u8, n: u8, left: usize, cur: &mut Vec<u8>, out: &mut Vec<FreeMonomial>) {
            if left == 0 {
                out.push(FreeMonomial(cur.clone()));
                return;
            }
            for l in start..n {
                cur.push(l);
                rec(l, n, left - 1, cur, out);
                cur.pop();
            }
        }
        rec(0, n as u8, d, &mut Vec::new(), &mut out);
        out
    }

    /// PBW monomials of degree `d` and identity grade.
    pub fn identity_monomials(&self, d: usize) -> Result<Vec<FreeMonomial>> {
        let e = self.group.identity();
        let mut out = Vec::new();
        for w in self.monomial_words(d) {
            if self.pres.word_grade(&w)? == e {
                out.push(w);
            }
        }
        Ok(out)
    }

    /// `(1/|G|) Σ_g p·g`.
    pub fn average(&self, p: &NcPoly) -> Result<NcPoly> {
        let n = Cyclotomic::from_int(self.group.order() as i64);
        let inv = Cyclotomic::one().checked_div(&n)?;
        let mut out = NcPoly::zero();
        for g in self.group.elements() {
            for (m, c) in self.act(g, p)?.into_terms() {
                out.add_term(m, &c * &inv);
            }
        }
        Ok(out)
    }

    /// Basis of the degree-`d` invariants from averaging identity-grade
    /// monomials, in echelon form for the lex order on exponents.
    pub fn invariant_space(&self, d: usize) -> Result<Vec<NcPoly>> {
        let words = self.identity_monomials(d)?;
        let averages: Vec<NcPoly> = words
            .par_iter()
            .map(|w| {
                let p = NcPoly::monomial(w.clone(), Cyclotomic::one());
                let n = Cyclotomic::from_int(self.group.order() as i64);
                let inv = Cyclotomic::one().checked_div(&n)?;
                let mut out = NcPoly::zero();
                for g in self.group.elements() {
                    for (m, c) in self.gb.normal_form(&self.pres.act_group(g, &p)?)?.into_terms() {
                        out.add_term(m, &c * &inv);
                    }
                }
                Ok(out)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(echelon_blocks(averages.into_iter().filter(|p| !p.is_zero()).collect()))
    }

    /// Orbit sum `f_a` with the closed-form scalars; invariance is checked.
    pub fn orbit_sum(&self, a: &ExponentVector, p: &PaperParams) -> Result<OrbitSum> {
        let (al, be, ga) = (p.alpha, p.beta, p.gamma);
        let lambdas = [
            lambda(a, OrbitElement::R, al, be, ga),
            lambda(a, OrbitElement::S, al, be, ga),
            lambda(a, OrbitElement::Rs, al, be, ga),
        ];
        let mut f = NcPoly::monomial(a.word(), Cyclotomic::one());
        for (l, b) in lambdas.iter().zip([a.act_r(), a.act_s(), a.act_rs()]) {
            f.add_term(b.word(), l.clone());
        }
        let invariant = self.is_invariant(&f)?;
        Ok(OrbitSum { base: *a, lambdas, f, invariant })
    }

    /// Basis of the span of the nonzero `f_a`, `a ∈ X`, `|a| = d`.
    pub fn orbit_sum_space(&self, d: u32, p: &PaperParams) -> Result<Vec<NcPoly>> {
        let sums = x_of_degree(d)
            .iter()
            .map(|a| Ok(self.orbit_sum(a, p)?.f))
            .collect::<Result<Vec<_>>>()?;
        Ok(echelon_blocks(sums.into_iter().filter(|f| !f.is_zero()).collect()))
    }

    /// `Σ_{x ∈ class} f_x` with its invariance.
    pub fn class_component(&self, f: &NcPoly, class: &[Elem]) -> Result<(NcPoly, bool)> {
        let mut out = NcPoly::zero();
        for (m, c) in f.terms() {
            if class.contains(&self.pres.word_grade(m)?) {
                out.add_term(m.clone(), c.clone());
            }
        }
        let inv = self.is_group_invariant(&out)?;
        Ok((out, inv))
    }

    /// Degree-`d` part of the subalgebra generated by `gens`, as an echelon
    /// basis.
    pub fn subalgebra_span(&self, gens: &[NcPoly], d: usize) -> Result<Vec<NcPoly>> {
        Ok(self.subalgebra_spans(gens, d)?.pop().expect("nonempty"))
    }

    /// Echelon bases of the subalgebra generated by `gens` in degrees
    /// `0..=d`. Every word in the generators is a generator times a shorter word.
    pub fn subalgebra_spans(&self, gens: &[NcPoly], d: usize) -> Result<Vec<Vec<NcPoly>>> {
        let degs: Vec<usize> = gens.iter().map(|g| g.degree().unwrap_or(0)).collect();
        if degs.contains(&0) {
            return Err(Error::InvalidArgument("generators must be homogeneous of positive degree".into()));
        }
        let mut spans: Vec<Vec<NcPoly>> = vec![vec![NcPoly::one()]];
        for k in 1..=d {
            let mut all = Vec::new();
            for (g, &dg) in gens.iter().zip(&degs) {
                if dg <= k {
                    for w in &spans[k - dg] {
                        all.push(self.mul(g, w)?);
                    }
                }
            }
            spans.push(echelon(all.into_iter().filter(|p| !p.is_zero()).collect()));
        }
        Ok(spans)
    }
}

/// Orbit sum `f_a = x^a + λ(a,r) x^{a·r} + λ(a,s) x^{a·s} + λ(a,rs) x^{a·rs}`.
#[derive(Clone, Debug)]
pub struct OrbitSum {
    pub base: ExponentVector,
    /// `λ(a, r)`, `λ(a, s)`, `λ(a, rs)`.
    pub lambdas: [Cyclotomic; 3],
    pub f: NcPoly,
    pub invariant: bool,
}

/// Exponent vector of a PBW word on six generators, or the raw letter
/// counts otherwise.
fn exps(m: &FreeMonomial, n: usize) -> Vec<u32> {
    m.exponents(n)
}

/// Leading exponent in graded lex with `x₁ > x₂ > … > z₂`.
pub fn lead_exponent(p: &NcPoly) -> Option<Vec<u32>> {
    let n = p.terms().flat_map(|(m, _)| m.letters().iter().map(|&l| l as usize + 1)).max().unwrap_or(0).max(6);
    p.terms().map(|(m, _)| (m.degree(), exps(m, n))).max().map(|(_, e)| e)
}

/// Row-reduced basis of a span; columns ordered by descending exponent, so
/// pivots are the leading exponents.
pub fn echelon(polys: Vec<NcPoly>) -> Vec<NcPoly> {
    if polys.is_empty() {
        return Vec::new();
    }
    let n = 6.max(polys.iter().flat_map(|p| p.terms().flat_map(|(m, _)| m.letters().iter().map(|&l| l as usize + 1))).max().unwrap_or(0));
    let mut cols: Vec<(usize, Vec<u32>, FreeMonomial)> = polys
        .iter()
        .flat_map(|p| p.terms().map(|(m, _)| (m.degree(), exps(m, n), m.clone())))
        .collect();
    cols.sort();
    cols.dedup();
    cols.reverse();
    let index: HashMap<&FreeMonomial, usize> = cols.iter().enumerate().map(|(i, c)| (&c.2, i)).collect();
    let mut m = Matrix::zeros(polys.len(), cols.len());
    for (r, p) in polys.iter().enumerate() {
        for (w, c) in p.terms() {
            m[(r, index[w])] = c.clone();
        }
    }
    let pivots = m.rref();
    (0..pivots.len())
        .map(|r| NcPoly::from_terms(m.row(r).iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(k, c)| (cols[k].2.clone(), c.clone()))))
        .collect()
}

/// `echelon` applied to the connected components of the support graph.
pub fn echelon_blocks(polys: Vec<NcPoly>) -> Vec<NcPoly> {
    let mut parent: Vec<usize> = (0..polys.len()).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        let mut y = x;
        while p[y] != r {
            let next = p[y];
            p[y] = r;
            y = next;
        }
        r
    }
    let mut owner: HashMap<FreeMonomial, usize> = HashMap::new();
    for (i, p) in polys.iter().enumerate() {
        for (m, _) in p.terms() {
            if let Some(&j) = owner.get(m) {
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                parent[a] = b;
            } else {
                owner.insert(m.clone(), i);
            }
        }
    }
    let mut blocks: BTreeMap<usize, Vec<NcPoly>> = BTreeMap::new();
    for (i, p) in polys.into_iter().enumerate() {
        let r = find(&mut parent, i);
        blocks.entry(r).or_default().push(p);
    }
    let mut out: Vec<NcPoly> = blocks.into_values().flat_map(echelon).collect();
    out.sort_by(|a, b| lead_exponent(b).cmp(&lead_exponent(a)));
    out
}

/// `f_a = sign · m · f_{a'}` with `m` a monomial in `g₁, g₂, g₃`.
#[derive(Clone, Debug)]
pub struct Factorization {
    /// Powers of `g₁ = y₁y₂`, `g₂ = z₁z₂`, `g₃ = x₁²x₂²`.
    pub powers: [u32; 3],
    pub m: NcPoly,
    pub reduced: ExponentVector,
    pub sign: i64,
}

/// Splits off `(x₁²x₂²)^{⌊a₂/2⌋} (y₁y₂)^{b₂} (z₁z₂)^{min(c₁,c₂)}` and checks
/// the identity by normal forms.
pub fn factor_orbit_sum(engine: &InvariantEngine, a: &ExponentVector, p: &PaperParams) -> Result<Factorization> {
    if !in_x(a) {
        return Err(Error::InvalidArgument(format!("{a} is not in X")));
    }
    let [a1, a2, b1, b2, c1, c2] = a.0;
    let k3 = a2 / 2;
    let k2 = c1.min(c2);
    let reduced = ExponentVector([a1 - 2 * k3, a2 - 2 * k3, b1 - b2, 0, c1 - k2, c2 - k2]);
    let g1 = engine.parse("y1*y2")?;
    let g2 = engine.parse("z1*z2")?;
    let g3 = engine.parse("x1^2*x2^2")?;
    let m = engine.product(&[&engine.power(&g3, k3)?, &engine.power(&g1, b2)?, &engine.power(&g2, k2)?])?;
    let fa = engine.orbit_sum(a, p)?.f;
    let fr = engine.orbit_sum(&reduced, p)?.f;
    let rhs = engine.mul(&m, &fr)?;
    let sign = if fa == rhs {
        1
    } else if fa == rhs.scale(&Cyclotomic::from_int(-1)) {
        -1
    } else {
        return Err(Error::CheckFailed(format!("f_{a} is not ± m·f_{reduced}")));
    };
    Ok(Factorization { powers: [b2, k2, k3], m, reduced, sign })
}

/// `Σ deg fᵢ − gkdim`, after checking `fᵢ fⱼ = α_ij fⱼ fᵢ` for `i < j`.
/// A failing pair is reported 1-based.
pub fn broer_bound(engine: &InvariantEngine, elems: &[NcPoly], gkdim: usize) -> Result<i64> {
    for i in 0..elems.len() {
        for j in i + 1..elems.len() {
            let a = engine.mul(&elems[i], &elems[j])?;
            let b = engine.mul(&elems[j], &elems[i])?;
            if !proportional(&a, &b) {
                return Err(Error::CheckFailed(format!("pair ({}, {}) does not skew-commute", i + 1, j + 1)));
            }
        }
    }
    let total: usize = elems.iter().map(|e| e.degree().unwrap_or(0)).sum();
    Ok(total as i64 - gkdim as i64)
}

fn proportional(a: &NcPoly, b: &NcPoly) -> bool {
    match (a.terms().next(), b.terms().next()) {
        (None, None) => true,
        (Some((m, ca)), Some(_)) => {
            let cb = b.coefficient(m);
            !cb.is_zero() && b.scale(&(ca / &cb)) == *a
        }
        _ => false,
    }
}

/// Coverage of one degree by the lead-exponent monoid.
#[derive(Clone, Debug)]
pub struct DegreeCoverage {
    pub degree: usize,
    pub dimension: usize,
    pub covered: usize,
    /// Lead exponents outside the monoid, each with its witness invariant.
    pub uncovered: Vec<(Vec<u32>, NcPoly)>,
    /// Covered exponents whose products failed lead additivity.
    pub non_additive: Vec<Vec<u32>>,
}

#[derive(Clone, Debug)]
pub struct SagbiCertificate {
    pub degrees: Vec<DegreeCoverage>,
}

impl SagbiCertificate {
    pub fn passes(&self) -> bool {
        self.degrees.iter().all(|d| d.uncovered.is_empty() && d.non_additive.is_empty())
    }

    pub fn first_uncovered(&self) -> Option<(usize, &Vec<u32>)> {
        self.degrees.iter().find_map(|d| d.uncovered.first().map(|(e, _)| (d.degree, e)))
    }
}

/// Multiplicity vectors `m` with `Σ mᵢ aᵢ = target`, in search order.
fn decompositions(leads: &[Vec<u32>], target: &[u32], limit: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut cur = vec![0u32; leads.len()];
    fn rec(k: usize, leads: &[Vec<u32>], rest: &mut Vec<u32>, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>, limit: usize) {
        if out.len() >= limit {
            return;
        }
        if rest.iter().all(|&x| x == 0) {
            out.push(cur.clone());
            return;
        }
        if k == leads.len() {
            return;
        }
        let l = &leads[k];
        let max = l.iter().zip(rest.iter()).filter(|(a, _)| **a > 0).map(|(a, r)| r / a).min().unwrap_or(0);
        for m in (0..=max).rev() {
            for (r, a) in rest.iter_mut().zip(l) {
                *r -= m * a;
            }
            cur[k] = m;
            rec(k + 1, leads, rest, cur, out, limit);
            for (r, a) in rest.iter_mut().zip(l) {
                *r += m * a;
            }
        }
        cur[k] = 0;
    }
    let mut rest = target.to_vec();
    rec(0, leads, &mut rest, &mut cur, &mut out, limit);
    out
}

/// For each degree up to `d_max`, checks that every lead exponent of the
/// invariants lies in the monoid of the generators' lead exponents, and
/// that the product realizing it has that lead exponent.
pub fn sagbi_check(engine: &InvariantEngine, gens: &[NcPoly], d_max: usize) -> Result<SagbiCertificate> {
    let leads: Vec<Vec<u32>> = gens
        .iter()
        .map(|g| lead_exponent(g).ok_or_else(|| Error::InvalidArgument("zero generator".into())))
        .collect::<Result<_>>()?;
    let mut products: HashMap<Vec<u32>, NcPoly> = HashMap::new();
    products.insert(vec![0; gens.len()], NcPoly::one());
    let mut degrees = Vec::new();
    for d in 1..=d_max {
        let basis = engine.invariant_space(d)?;
        let mut cov = DegreeCoverage { degree: d, dimension: basis.len(), covered: 0, uncovered: Vec::new(), non_additive: Vec::new() };
        for f in &basis {
            let e = lead_exponent(f).expect("nonzero basis element");
            let options = decompositions(&leads, &e, 16);
            if options.is_empty() {
                cov.uncovered.push((e, f.clone()));
                continue;
            }
            let mut ok = false;
            for mult in &options {
                let prod = monoid_product(engine, gens, mult, &mut products)?;
                if lead_exponent(&prod).as_ref() == Some(&e) {
                    ok = true;
                    break;
                }
            }
            if ok {
                cov.covered += 1;
            } else {
                cov.non_additive.push(e);
            }
        }
        degrees.push(cov);
    }
    Ok(SagbiCertificate { degrees })
}

/// Truncated SAGBI completion of a generating set.
#[derive(Clone, Debug)]
pub struct SagbiCompletion {
    /// Subalgebra elements appended to the generators, with degree and lead.
    pub added: Vec<(usize, Vec<u32>, NcPoly)>,
    /// Coverage of the invariants by the completed set.
    pub certificate: SagbiCertificate,
}

impl SagbiCompletion {
    pub fn passes(&self) -> bool {
        self.certificate.passes()
    }
}

/// Extends `gens` degree by degree with elements of the subalgebra they
/// generate whose lead exponent lies outside the current lead monoid, then
/// runs [`sagbi_check`] on the result.
pub fn sagbi_completion(engine: &InvariantEngine, gens: &[NcPoly], d_max: usize) -> Result<SagbiCompletion> {
    let spans = engine.subalgebra_spans(gens, d_max)?;
    let mut basis = gens.to_vec();
    let mut leads: Vec<Vec<u32>> = gens
        .iter()
        .map(|g| lead_exponent(g).ok_or_else(|| Error::InvalidArgument("zero generator".into())))
        .collect::<Result<_>>()?;
    let mut added = Vec::new();
    for (d, span) in spans.iter().enumerate().skip(1) {
        for f in span {
            let e = lead_exponent(f).expect("nonzero basis element");
            if decompositions(&leads, &e, 1).is_empty() {
                leads.push(e.clone());
                basis.push(f.clone());
                added.push((d, e, f.clone()));
            }
        }
    }
    let certificate = sagbi_check(engine, &basis, d_max)?;
    Ok(SagbiCompletion { added, certificate })
}

/// `g₁^{m₁} ⋯ g_r^{m_r}`, memoized on the multiplicity vector.
fn monoid_product(engine: &InvariantEngine, gens: &[NcPoly], mult: &[u32], memo: &mut HashMap<Vec<u32>, NcPoly>) -> Result<NcPoly> {
    if let Some(p) = memo.get(mult) {
        return Ok(p.clone());
    }
    let last = mult.iter().rposition(|&m| m > 0).expect("nonzero multiplicity");
    let mut prev = mult.to_vec();
    prev[last] -= 1;
    let head = monoid_product(engine, gens, &prev, memo)?;
    let p = engine.mul(&head, &gens[last])?;
    memo.insert(mult.to_vec(), p.clone());
    Ok(p)
}

/// The seventeen generators `g₁ … g₁₇` and the auxiliary `g₁₈ … g₂₄`.
pub const GENERATORS: [&str; 24] = [
    "y1*y2",
    "z1*z2",
    "x1^2*x2^2",
    "x1^4 + x2^4",
    "y1^4 + y2^4",
    "z1^4 + z2^4",
    "(x1^2 - x2^2)*(y1^2 - y2^2)",
    "(x1^2 + x2^2)*(z1^2 - z2^2)",
    "(x1*x2)*(x1^4 - x2^4)",
    "(x1*x2)*(x1^2 + x2^2)*(y1^2 - y2^2)",
    "(x1*x2)*(x1^2 - x2^2)*(z1^2 - z2^2)",
    "(x1*x2)*(y1^2*z1^2 + y2^2*z2^2)",
    "(x1*x2)*(y1^2*z2^2 + y2^2*z1^2)",
    "(x1^4 - x2^4)*(y1^2*z2^2 + y2^2*z1^2)",
    "(x1^2 + x2^2)*(y1^4*z2^2 - y2^4*z1^2)",
    "(x1^2 - x2^2)*(y1^2*z2^4 - y2^2*z1^4)",
    "y1^4*z2^4 + y2^4*z1^4",
    "y1^4*z2^8 + y2^4*z1^8",
    "(x1^4 - x2^4)*(y1^2*z2^6 + y2^2*z1^6)",
    "(x1^2 + x2^2)*(y1^4*z2^6 - y2^4*z1^6)",
    "(x1*x2)*(x1^2 + x2^2)*(y1^2*z2^4 - y2^2*z1^4)",
    "(x1*x2)*(y1^2*z2^6 + y2^2*z1^6)",
    "(x1*x2)*(x1^2 + x2^2)*(y1^2*z2^8 - y2^2*z1^8)",
    "(x1*x2)*(y1^2*z2^10 + y2^2*z1^10)",
];

/// Identities expressing `g₁₈ … g₂₄` through the generators, as
/// `(index, expression)` with `gk` naming `g_k`.
pub const IDENTITIES: [(usize, &str); 7] = [
    (18, "g17*g6 - g5*g2^4"),
    (19, "g14*g6 + g7*g8*g2^2 + g14*g2^2"),
    (20, "g15*g6 + g8*g5*g2^2 + g15*g2^2"),
    (21, "(1/2)*(g10*g6 - g8*g12 - g8*g13)"),
    (22, "g13*g6 + g12*g2^2"),
    (23, "g21*g6 - g10*g2^4"),
    (24, "g22*g6 - g13*g2^4"),
];

/// Evaluates an expression in `g1 … g24` inside the algebra.
pub fn eval_in_generators(engine: &InvariantEngine, gens: &[NcPoly], expr: &str) -> Result<NcPoly> {
    let names: Vec<String> = (1..=gens.len()).map(|k| format!("g{k}")).collect();
    let free = NcPoly::parse(expr, &names)?;
    let mut out = NcPoly::zero();
    for (m, c) in free.terms() {
        let factors: Vec<&NcPoly> = m.letters().iter().map(|&l| &gens[l as usize]).collect();
        for (w, d) in engine.product(&factors)?.into_terms() {
            out.add_term(w, c * &d);
        }
    }
    Ok(out)
}

/// Outcome of checking the generator theorem.
#[derive(Clone, Debug)]
pub struct GeneratorReport {
    /// Per generator: invariant and identity graded.
    pub invariant: Vec<bool>,
    /// Coverage by the lead monoid of the seventeen generators alone.
    pub sagbi: SagbiCertificate,
    /// Coverage after completing the generators inside their subalgebra.
    pub completion: SagbiCompletion,
    /// `(degree, subalgebra dimension, invariant dimension)`.
    pub dimensions: Vec<(usize, usize, usize)>,
    /// Per generator: the others miss part of its degree.
    pub minimal: Vec<bool>,
    /// Per identity `g₁₈ … g₂₄`.
    pub identities: Vec<(usize, bool)>,
    /// Highest degree at which a generator is needed.
    pub top_generator_degree: usize,
}

impl GeneratorReport {
    /// Every check, including coverage by the bare generator leads.
    pub fn passes(&self) -> bool {
        self.generation_certified() && self.sagbi.passes()
    }

    /// Generation through `d_max` by both the completed lead monoid and the
    /// dimension count, with the invariance, minimality and identity checks.
    pub fn generation_certified(&self) -> bool {
        self.invariant.iter().all(|&b| b)
            && self.completion.passes()
            && self.dimensions.iter().all(|(_, a, b)| a == b)
            && self.minimal.iter().all(|&b| b)
            && self.identities.iter().all(|(_, b)| *b)
    }
}

pub fn generator_polys(engine: &InvariantEngine) -> Result<Vec<NcPoly>> {
    GENERATORS.iter().map(|g| engine.parse(g)).collect()
}

/// All four checks of the generator theorem, with SAGBI coverage up to
/// `d_max`.
pub fn verify_generator_theorem(engine: &InvariantEngine, d_max: usize) -> Result<GeneratorReport> {
    let all = generator_polys(engine)?;
    let gens = &all[..17];
    let invariant = gens.iter().map(|g| engine.is_invariant(g)).collect::<Result<Vec<_>>>()?;
    let sagbi = sagbi_check(engine, gens, d_max)?;
    let completion = sagbi_completion(engine, gens, d_max)?;
    let mut dimensions = Vec::new();
    for (d, span) in engine.subalgebra_spans(gens, d_max)?.iter().enumerate() {
        dimensions.push((d, span.len(), engine.invariant_space(d)?.len()));
    }
    let mut minimal = Vec::new();
    let mut dims: HashMap<usize, usize> = HashMap::new();
    for i in 0..gens.len() {
        let d = gens[i].degree().unwrap_or(0);
        let full = match dims.get(&d) {
            Some(&k) => k,
            None => {
                let k = engine.invariant_space(d)?.len();
                dims.insert(d, k);
                k
            }
        };
        let others: Vec<NcPoly> = gens.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, g)| g.clone()).collect();
        minimal.push(engine.subalgebra_span(&others, d)?.len() < full);
    }
    let mut identities = Vec::new();
    for (k, expr) in IDENTITIES {
        let lhs = &all[k - 1];
        let rhs = eval_in_generators(engine, &all, expr)?;
        identities.push((k, *lhs == rhs));
    }
    let top_generator_degree = gens.iter().filter_map(NcPoly::degree).max().unwrap_or(0);
    Ok(GeneratorReport { invariant, sagbi, completion, dimensions, minimal, identities, top_generator_degree })
}
