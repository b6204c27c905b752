//! The Drinfeld double `D(G)` on the basis `{φ_g h}` and its simple right
//! modules `(a, χ)`.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exactnum::Cyclotomic;
use crate::group::{centralizer_irreps, conjugacy_classes, ConjClass, Elem, Family, FiniteGroup, Irrep};
use crate::linalg::{Matrix, Vector};

/// The basis element `φ_g h`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DoubleBasisElt {
    pub g: Elem,
    pub h: Elem,
}

impl DoubleBasisElt {
    pub fn new(g: Elem, h: Elem) -> Self {
        DoubleBasisElt { g, h }
    }

    pub fn display<'a>(&'a self, group: &'a FiniteGroup) -> impl fmt::Display + 'a {
        struct D<'a>(&'a DoubleBasisElt, &'a FiniteGroup);
        impl fmt::Display for D<'_> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "phi[{}]·{}", self.1.name(self.0.g), self.1.name(self.0.h))
            }
        }
        D(self, group)
    }
}

/// A linear combination of basis elements with no zero coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DoubleElement {
    terms: BTreeMap<DoubleBasisElt, Cyclotomic>,
}

impl DoubleElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(x: DoubleBasisElt) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(x, Cyclotomic::one());
        DoubleElement { terms }
    }

    /// The unit `Σ_g φ_g e`.
    pub fn unit(group: &FiniteGroup) -> Self {
        let mut out = Self::zero();
        for g in group.elements() {
            out.add_term(DoubleBasisElt::new(g, group.identity()), Cyclotomic::one());
        }
        out
    }

    /// The group element `h = Σ_g φ_g h`.
    pub fn group_element(group: &FiniteGroup, h: Elem) -> Self {
        let mut out = Self::zero();
        for g in group.elements() {
            out.add_term(DoubleBasisElt::new(g, h), Cyclotomic::one());
        }
        out
    }

    pub fn add_term(&mut self, x: DoubleBasisElt, c: Cyclotomic) {
        let entry = self.terms.entry(x).or_insert_with(Cyclotomic::zero);
        *entry += &c;
        if entry.is_zero() {
            self.terms.remove(&x);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&DoubleBasisElt, &Cyclotomic)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn mul(&self, other: &DoubleElement, group: &FiniteGroup) -> DoubleElement {
        let mut out = Self::zero();
        for (x, a) in &self.terms {
            for (y, b) in &other.terms {
                for (z, c) in d_mul(group, *x, *y).terms {
                    out.add_term(z, &(a * b) * &c);
                }
            }
        }
        out
    }

    pub fn display<'a>(&'a self, group: &'a FiniteGroup) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        self.terms
            .iter()
            .map(|(x, c)| {
                if c.is_one() {
                    x.display(group).to_string()
                } else {
                    format!("({c})*{}", x.display(group))
                }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

/// `(φ_g h)(φ_{g'} h') = φ_g hh'` when `g = h g' h^{-1}`, otherwise zero.
pub fn d_mul(group: &FiniteGroup, x: DoubleBasisElt, y: DoubleBasisElt) -> DoubleElement {
    let conj = group.mul(group.mul(x.h, y.g), group.inv(x.h));
    if x.g == conj {
        DoubleElement::basis(DoubleBasisElt::new(x.g, group.mul(x.h, y.h)))
    } else {
        DoubleElement::zero()
    }
}

/// `Δ(φ_g h) = Σ_x φ_x h ⊗ φ_{x^{-1}g} h`.
pub fn d_coproduct(group: &FiniteGroup, x: DoubleBasisElt) -> Vec<(DoubleBasisElt, DoubleBasisElt)> {
    group
        .elements()
        .map(|y| {
            (
                DoubleBasisElt::new(y, x.h),
                DoubleBasisElt::new(group.mul(group.inv(y), x.g), x.h),
            )
        })
        .collect()
}

pub fn d_counit(group: &FiniteGroup, x: DoubleBasisElt) -> Cyclotomic {
    if x.g == group.identity() {
        Cyclotomic::one()
    } else {
        Cyclotomic::zero()
    }
}

/// `S(φ_g h) = φ_{h^{-1} g^{-1} h} h^{-1}`.
pub fn d_antipode(group: &FiniteGroup, x: DoubleBasisElt) -> DoubleBasisElt {
    let hi = group.inv(x.h);
    DoubleBasisElt::new(group.mul(group.mul(hi, group.inv(x.g)), x.h), hi)
}

/// A finite-dimensional right `D(G)`-module whose basis vectors are
/// homogeneous: `φ_x` acts as the projection onto grade `x`, and each group
/// element acts by a matrix.
#[derive(Clone, Debug)]
pub struct ModuleData {
    pub group: Arc<FiniteGroup>,
    pub grades: Vec<Elem>,
    /// Action matrix of every group element, indexed by element.
    pub actions: Vec<Matrix>,
}

impl ModuleData {
    pub fn dim(&self) -> usize {
        self.grades.len()
    }

    /// Matrix of `φ_x h` acting on the right.
    pub fn matrix(&self, x: DoubleBasisElt) -> Matrix {
        let a = &self.actions[x.h];
        Matrix::from_fn(self.dim(), self.dim(), |i, j| {
            if self.grades[i] == x.g {
                a[(i, j)].clone()
            } else {
                Cyclotomic::zero()
            }
        })
    }

    pub fn act_vector(&self, v: &[Cyclotomic], x: DoubleBasisElt) -> Vector {
        let projected: Vector = v
            .iter()
            .zip(&self.grades)
            .map(|(c, g)| if *g == x.g { c.clone() } else { Cyclotomic::zero() })
            .collect();
        self.actions[x.h].apply(&projected)
    }

    pub fn act_element(&self, v: &[Cyclotomic], x: &DoubleElement) -> Vector {
        let mut out = vec![Cyclotomic::zero(); self.dim()];
        for (b, c) in x.terms() {
            for (o, w) in out.iter_mut().zip(self.act_vector(v, *b)) {
                *o += &(&w * c);
            }
        }
        out
    }

    /// `χ(φ_g h) = tr(φ_g h)`.
    pub fn character(&self, x: DoubleBasisElt) -> Cyclotomic {
        let a = &self.actions[x.h];
        (0..self.dim())
            .filter(|&i| self.grades[i] == x.g)
            .map(|i| a[(i, i)].clone())
            .sum()
    }

    pub fn tensor(&self, other: &ModuleData) -> Result<ModuleData> {
        if !self.group.same_group(&other.group) {
            return Err(Error::MixedGroups);
        }
        let g = &self.group;
        let (m, n) = (self.dim(), other.dim());
        let grades = (0..m * n).map(|t| g.mul(self.grades[t / n], other.grades[t % n])).collect();
        let actions = g
            .elements()
            .map(|h| kronecker(&self.actions[h], &other.actions[h]))
            .collect();
        Ok(ModuleData { group: self.group.clone(), grades, actions })
    }

    pub fn direct_sum(parts: &[&ModuleData]) -> Result<ModuleData> {
        let first = parts.first().ok_or_else(|| Error::InvalidArgument("empty direct sum".into()))?;
        if parts.iter().any(|p| !p.group.same_group(&first.group)) {
            return Err(Error::MixedGroups);
        }
        let dim: usize = parts.iter().map(|p| p.dim()).sum();
        let grades = parts.iter().flat_map(|p| p.grades.iter().copied()).collect();
        let actions = first
            .group
            .elements()
            .map(|h| {
                let mut out = Matrix::zeros(dim, dim);
                let mut off = 0;
                for p in parts {
                    let a = &p.actions[h];
                    for i in 0..p.dim() {
                        for j in 0..p.dim() {
                            out[(off + i, off + j)] = a[(i, j)].clone();
                        }
                    }
                    off += p.dim();
                }
                out
            })
            .collect();
        Ok(ModuleData { group: first.group.clone(), grades, actions })
    }

    /// Submodule generated by `vectors`: a basis of the smallest invariant
    /// subspace containing them.
    pub fn generated_submodule(&self, vectors: &[Vector]) -> Vec<Vector> {
        let dim = self.dim();
        let mut basis = crate::linalg::row_basis(vectors, dim);
        loop {
            let mut all = basis.clone();
            for v in &basis {
                for x in self.group.elements() {
                    all.push(self.act_vector(v, DoubleBasisElt::new(x, self.group.identity())));
                }
                for (_, h) in self.group.generators() {
                    all.push(self.actions[*h].apply(v));
                }
            }
            let next = crate::linalg::row_basis(&all, dim);
            if next.len() == basis.len() {
                return next;
            }
            basis = next;
        }
    }
}

pub fn kronecker(a: &Matrix, b: &Matrix) -> Matrix {
    let (n, m) = (b.rows(), b.cols());
    Matrix::from_fn(a.rows() * n, a.cols() * m, |i, j| {
        let x = &a[(i / n, j / m)];
        if x.is_zero() {
            return Cyclotomic::zero();
        }
        x * &b[(i % n, j % m)]
    })
}

/// A simple module `(a, χ)` with basis `v ⊗ g_i`, ordered transversal-major.
#[derive(Clone, Debug)]
pub struct SimpleDoubleModule {
    /// Position in [`simples`], i.e. the `V_k` number.
    pub index: usize,
    pub class_index: usize,
    pub class: ConjClass,
    pub irrep: Irrep,
    pub data: ModuleData,
}

impl SimpleDoubleModule {
    fn build(group: &Arc<FiniteGroup>, index: usize, class_index: usize, class: &ConjClass, irrep: &Irrep) -> Self {
        let g = group.as_ref();
        let d = irrep.dim;
        let t = class.transversal.len();
        let dim = d * t;
        let grades = (0..dim)
            .map(|b| g.conj(class.rep, class.transversal[b / d]))
            .collect();
        let actions = g
            .elements()
            .map(|h| {
                let mut m = Matrix::zeros(dim, dim);
                for i in 0..t {
                    let (c, j) = class.coset_split(g, g.mul(class.transversal[i], h));
                    let rho = irrep.matrix(c);
                    for v in 0..d {
                        for w in 0..d {
                            m[(i * d + v, j * d + w)] = rho[(v, w)].clone();
                        }
                    }
                }
                m
            })
            .collect();
        SimpleDoubleModule {
            index,
            class_index,
            class: class.clone(),
            irrep: irrep.clone(),
            data: ModuleData { group: group.clone(), grades, actions },
        }
    }

    pub fn dim(&self) -> usize {
        self.data.dim()
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.data.group
    }

    pub fn grade(&self, basis: usize) -> Elem {
        self.data.grades[basis]
    }

    pub fn label(&self) -> String {
        format!("V{}", self.index)
    }

    /// `(rep name, irrep name)`.
    pub fn key(&self) -> (String, String) {
        (self.group().name(self.class.rep).to_string(), self.irrep.name.clone())
    }

    pub fn act(&self, basis: usize, x: DoubleBasisElt) -> Vector {
        let mut v = vec![Cyclotomic::zero(); self.dim()];
        v[basis] = Cyclotomic::one();
        self.data.act_vector(&v, x)
    }

    pub fn character(&self, x: DoubleBasisElt) -> Cyclotomic {
        self.data.character(x)
    }

    pub fn summary(&self) -> ModuleSummary {
        ModuleSummary {
            label: self.label(),
            class_rep: self.key().0,
            irrep: self.irrep.name.clone(),
            dim: self.dim(),
            grades: self.data.grades.iter().map(|&g| self.group().name(g).to_string()).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleSummary {
    pub label: String,
    pub class_rep: String,
    pub irrep: String,
    pub dim: usize,
    pub grades: Vec<String>,
}

/// Order in which whole-group irreps enter the module list. The order-16
/// dicyclic group lists its two-dimensional irreps as `χ₂, χ₃, χ₁`.
fn full_centralizer_order(group: &FiniteGroup, count: usize) -> Vec<usize> {
    match group.family() {
        Family::Dicyclic(4) => vec![0, 1, 2, 3, 5, 6, 4],
        _ => (0..count).collect(),
    }
}

/// All simple modules: classes in order, then centralizer irreps in order.
pub fn simples(group: &Arc<FiniteGroup>) -> Result<Vec<SimpleDoubleModule>> {
    let mut out = Vec::new();
    for (ci, class) in conjugacy_classes(group).iter().enumerate() {
        let irr = centralizer_irreps(group, class)?;
        let order = if class.centralizer.order() == group.order() {
            full_centralizer_order(group, irr.len())
        } else {
            (0..irr.len()).collect()
        };
        for k in order {
            let index = out.len();
            out.push(SimpleDoubleModule::build(group, index, ci, class, &irr[k]));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q8() -> Arc<FiniteGroup> {
        Arc::new(FiniteGroup::dicyclic(2).unwrap())
    }

    #[test]
    fn product_example() {
        let g = q8();
        let w = |s: &str| g.parse_word(s).unwrap();
        let p = d_mul(&g, DoubleBasisElt::new(w("s"), w("r")), DoubleBasisElt::new(w("s*r^2"), w("r")));
        assert_eq!(p, DoubleElement::basis(DoubleBasisElt::new(w("s"), w("r^2"))));
        let z = d_mul(&g, DoubleBasisElt::new(w("s"), w("r")), DoubleBasisElt::new(w("s"), w("r")));
        assert!(z.is_zero());
    }

    #[test]
    fn counts() {
        for (grp, n) in [
            (FiniteGroup::dicyclic(2).unwrap(), 22),
            (FiniteGroup::dicyclic(4).unwrap(), 46),
            (FiniteGroup::symmetric3(), 8),
            (FiniteGroup::dicyclic(3).unwrap(), 32),
        ] {
            let g = Arc::new(grp);
            let s = simples(&g).unwrap();
            assert_eq!(s.len(), n);
            let total: usize = s.iter().map(|m| m.dim() * m.dim()).sum();
            assert_eq!(total, g.order() * g.order());
        }
    }

    #[test]
    fn v17_action() {
        let g = q8();
        let s = simples(&g).unwrap();
        let v17 = &s[17];
        let e = g.identity();
        let (r, sg) = (g.generator("r").unwrap(), g.generator("s").unwrap());
        let i = Cyclotomic::i();
        let x1r = v17.data.act_vector(&[Cyclotomic::one(), Cyclotomic::zero()], DoubleBasisElt::new(v17.grade(0), r));
        assert_eq!(x1r, vec![Cyclotomic::zero(), Cyclotomic::one()]);
        let x1s = v17.act(0, DoubleBasisElt::new(v17.grade(0), sg));
        assert_eq!(x1s, vec![-&i, Cyclotomic::zero()]);
        assert!(v17.act(0, DoubleBasisElt::new(e, sg)).iter().all(Cyclotomic::is_zero));
    }

    #[test]
    fn grades_of_v10() {
        let g = q8();
        let s = simples(&g).unwrap();
        assert_eq!(g.name(s[10].grade(0)), "r");
        assert_eq!(g.name(s[10].grade(1)), "r^3");
    }

    #[test]
    fn character_zero_off_commuting() {
        let g = q8();
        let s = simples(&g).unwrap();
        let r = g.generator("r").unwrap();
        assert!(s[4].character(DoubleBasisElt::new(g.identity(), r)).is_zero());
        for m in &s {
            for a in g.elements() {
                for h in g.elements() {
                    if !g.commute(a, h) {
                        assert!(m.character(DoubleBasisElt::new(a, h)).is_zero());
                    }
                }
            }
        }
    }

    #[test]
    fn printer() {
        let g = q8();
        let x = DoubleBasisElt::new(g.parse_word("s").unwrap(), g.parse_word("r").unwrap());
        assert_eq!(x.display(&g).to_string(), "phi[s]·r");
    }
}
