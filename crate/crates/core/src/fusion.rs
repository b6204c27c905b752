//! Tensor products of `D(G)`-modules, explicit decompositions into simples,
//! the S-matrix and Verlinde fusion coefficients.

use std::fmt::Write as _;
use std::sync::Arc;

use crate::double::{simples, DoubleBasisElt, ModuleData, SimpleDoubleModule};
use crate::error::{Error, Result};
use crate::exactnum::{Cyclotomic, Rational};
use crate::group::{centralizer_irreps, conjugacy_classes, FiniteGroup};
use crate::linalg::{Matrix, Vector};

/// A tensor product of simple modules, basis in lexicographic product order.
#[derive(Clone, Debug)]
pub struct TensorModule {
    pub factors: Vec<usize>,
    pub data: ModuleData,
}

pub fn tensor(m: &SimpleDoubleModule, n: &SimpleDoubleModule) -> Result<TensorModule> {
    Ok(TensorModule { factors: vec![m.index, n.index], data: m.data.tensor(&n.data)? })
}

/// Iterated tensor product of simples, left to right.
pub fn tensor_all(factors: &[&SimpleDoubleModule]) -> Result<TensorModule> {
    let (first, rest) = factors
        .split_first()
        .ok_or_else(|| Error::InvalidArgument("empty tensor product".into()))?;
    let mut data = first.data.clone();
    for f in rest {
        data = data.tensor(&f.data)?;
    }
    Ok(TensorModule { factors: factors.iter().map(|f| f.index).collect(), data })
}

/// One isotypic component: each copy is the tuple of images of the simple's
/// basis vectors under one intertwiner.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component {
    pub simple: usize,
    pub multiplicity: usize,
    pub copies: Vec<Vec<Vector>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub components: Vec<Component>,
}

impl Decomposition {
    pub fn multiplicity(&self, simple: usize) -> usize {
        self.components
            .iter()
            .find(|c| c.simple == simple)
            .map_or(0, |c| c.multiplicity)
    }

    /// `(simple, multiplicity)` pairs in simple order.
    pub fn multiplicities(&self) -> Vec<(usize, usize)> {
        self.components.iter().map(|c| (c.simple, c.multiplicity)).collect()
    }

    pub fn component(&self, simple: usize) -> Option<&Component> {
        self.components.iter().find(|c| c.simple == simple)
    }

    /// `V11 + 2 V13` style summary.
    pub fn summary(&self) -> String {
        let parts: Vec<String> = self
            .components
            .iter()
            .map(|c| {
                if c.multiplicity == 1 {
                    format!("V{}", c.simple)
                } else {
                    format!("{} V{}", c.multiplicity, c.simple)
                }
            })
            .collect();
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }

    /// Table with one line per generator: simple, copy, basis vector, image.
    pub fn render(&self, basis_names: &[String]) -> String {
        let mut out = String::new();
        for c in &self.components {
            for (k, copy) in c.copies.iter().enumerate() {
                for (b, v) in copy.iter().enumerate() {
                    let _ = writeln!(out, "V{}\t{}\t{}\t{}", c.simple, k, b, render_vector(v, basis_names));
                }
            }
        }
        out
    }
}

/// Writes a vector as a linear combination of named basis vectors.
pub fn render_vector(v: &[Cyclotomic], names: &[String]) -> String {
    let mut parts = Vec::new();
    for (c, n) in v.iter().zip(names) {
        if c.is_zero() {
            continue;
        }
        if c.is_one() {
            parts.push(n.clone());
        } else if (-c).is_one() {
            parts.push(format!("-{n}"));
        } else {
            parts.push(format!("({c})*{n}"));
        }
    }
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" + ").replace("+ -", "- ")
    }
}

/// Basis of `Hom_{D(G)}(S, M)`; each map is the `dim S × dim M` matrix `T`
/// with `s ↦ s·T`.
pub fn intertwiners(simple: &ModuleData, module: &ModuleData) -> Vec<Matrix> {
    let (d, m) = (simple.dim(), module.dim());
    // grade-preserving entries are the only unknowns
    let unknowns: Vec<(usize, usize)> = (0..d)
        .flat_map(|i| (0..m).map(move |j| (i, j)))
        .filter(|&(i, j)| simple.grades[i] == module.grades[j])
        .collect();
    if unknowns.is_empty() {
        return Vec::new();
    }
    let group = &simple.group;
    let mut rows: Vec<Vector> = Vec::new();
    for (_, h) in group.generators() {
        let a = &simple.actions[*h];
        let b = &module.actions[*h];
        // (A T - T B)[i][j] = Σ_k A[i][k] T[k][j] - Σ_k T[i][k] B[k][j]
        for i in 0..d {
            for j in 0..m {
                let mut row = vec![Cyclotomic::zero(); unknowns.len()];
                let mut any = false;
                for (u, &(k, l)) in unknowns.iter().enumerate() {
                    if l == j && !a[(i, k)].is_zero() {
                        row[u] += &a[(i, k)];
                        any = true;
                    }
                    if k == i && !b[(l, j)].is_zero() {
                        row[u] -= &b[(l, j)];
                        any = true;
                    }
                }
                if any {
                    rows.push(row);
                }
            }
        }
    }
    let ns = if rows.is_empty() {
        (0..unknowns.len())
            .map(|u| {
                let mut v = vec![Cyclotomic::zero(); unknowns.len()];
                v[u] = Cyclotomic::one();
                v
            })
            .collect()
    } else {
        Matrix::from_rows(rows).nullspace()
    };
    ns.into_iter()
        .map(|sol| {
            let mut t = Matrix::zeros(d, m);
            for (u, &(i, j)) in unknowns.iter().enumerate() {
                t[(i, j)] = sol[u].clone();
            }
            t
        })
        .collect()
}

/// Puts a basis of intertwiners in canonical form: flattened row-major, in
/// reduced echelon form, so the image of the first basis vector of each copy
/// has leading coordinate 1.
fn canonical_copies(maps: Vec<Matrix>) -> Vec<Vec<Vector>> {
    if maps.is_empty() {
        return Vec::new();
    }
    let (d, m) = (maps[0].rows(), maps[0].cols());
    let flat: Vec<Vector> = maps.iter().map(|t| t.to_rows().concat()).collect();
    crate::linalg::row_basis(&flat, d * m)
        .into_iter()
        .map(|f| f.chunks(m).map(|c| c.to_vec()).collect())
        .collect()
}

/// Decomposes `module` into the given simples by solving for intertwiners.
pub fn decompose(module: &ModuleData, simples: &[SimpleDoubleModule]) -> Decomposition {
    let mut components = Vec::new();
    for s in simples {
        let copies = canonical_copies(intertwiners(&s.data, module));
        if !copies.is_empty() {
            components.push(Component { simple: s.index, multiplicity: copies.len(), copies });
        }
    }
    Decomposition { components }
}

/// Multiplicity of every simple in `module` from characters alone:
/// the multiplicity of `(c, χ)` equals that of `χ` in the grade-`c` part of
/// the module as a representation of the centralizer of `c`.
pub fn character_multiplicities(module: &ModuleData, simples: &[SimpleDoubleModule]) -> Vec<usize> {
    simples
        .iter()
        .map(|s| {
            let c = s.class.rep;
            let cent = &s.class.centralizer;
            let mut acc = Cyclotomic::zero();
            for &h in &cent.elements {
                let t = module.character(DoubleBasisElt::new(c, h));
                if !t.is_zero() {
                    acc += &(&t * &s.irrep.character(h).conj());
                }
            }
            let m = acc.scale(&Rational::new(1, cent.order() as i64));
            m.to_i64().expect("multiplicity is an integer") as usize
        })
        .collect()
}

/// `S_{(a,χ),(b,χ')} = 1/(|C(a)||C(b)|) Σ conj(χ(g b g⁻¹)) conj(χ'(g⁻¹ a g))`
/// over `g` with `a` and `g b g⁻¹` commuting.
#[derive(Clone, Debug)]
pub struct SMatrix {
    pub entries: Vec<Vec<Cyclotomic>>,
}

impl SMatrix {
    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, a: usize, b: usize) -> &Cyclotomic {
        &self.entries[a][b]
    }

    pub fn is_symmetric(&self) -> bool {
        let n = self.size();
        (0..n).all(|a| (0..a).all(|b| self.entries[a][b] == self.entries[b][a]))
    }
}

pub fn s_matrix(group: &Arc<FiniteGroup>) -> Result<SMatrix> {
    let sims = simples(group)?;
    let g = group.as_ref();
    // character values of each simple's centralizer irrep, indexed by element
    let chars: Vec<Vec<Option<Cyclotomic>>> = sims
        .iter()
        .map(|s| {
            g.elements()
                .map(|x| s.irrep.is_defined_at(x).then(|| s.irrep.character(x)))
                .collect()
        })
        .collect();
    let n = sims.len();
    let mut entries = vec![vec![Cyclotomic::zero(); n]; n];
    for i in 0..n {
        for j in i..n {
            let (a, b) = (sims[i].class.rep, sims[j].class.rep);
            let mut acc = Cyclotomic::zero();
            for x in g.elements() {
                let gbg = g.mul(g.mul(x, b), g.inv(x));
                if !g.commute(a, gbg) {
                    continue;
                }
                let gag = g.conj(a, x);
                let v1 = chars[i][gbg].as_ref().expect("conjugate lies in the centralizer");
                let v2 = chars[j][gag].as_ref().expect("conjugate lies in the centralizer");
                acc += &(&v1.conj() * &v2.conj());
            }
            let denom = (sims[i].class.centralizer.order() * sims[j].class.centralizer.order()) as i64;
            let v = acc.scale(&Rational::new(1, denom));
            entries[j][i] = v.clone();
            entries[i][j] = v;
        }
    }
    Ok(SMatrix { entries })
}

/// Precomputed Verlinde data: `S` plus `1/S_{0i}`.
pub struct Verlinde {
    s: SMatrix,
    conj_s: Vec<Vec<Cyclotomic>>,
    inv_s0: Vec<Cyclotomic>,
}

impl Verlinde {
    pub fn new(s: SMatrix) -> Result<Self> {
        let inv_s0 = s.entries[0].iter().map(|x| x.inv()).collect::<Result<Vec<_>>>()?;
        let conj_s = s.entries.iter().map(|row| row.iter().map(Cyclotomic::conj).collect()).collect();
        Ok(Verlinde { s, conj_s, inv_s0 })
    }

    pub fn for_group(group: &Arc<FiniteGroup>) -> Result<Self> {
        Self::new(s_matrix(group)?)
    }

    pub fn size(&self) -> usize {
        self.s.size()
    }

    pub fn s_matrix(&self) -> &SMatrix {
        &self.s
    }

    fn to_count(&self, v: Cyclotomic, a: usize, b: usize, c: usize) -> Result<u32> {
        match v.to_i64() {
            Some(k) if k >= 0 => Ok(k as u32),
            _ => Err(Error::NonIntegralFusion(format!("N_({a},{b})^{c} = {v}"))),
        }
    }

    /// `N_{ab}^c = Σ_i S_{ai} S_{bi} conj(S_{ci}) / S_{0i}`.
    pub fn coefficient(&self, a: usize, b: usize, c: usize) -> Result<u32> {
        let w = self.weights(a, b);
        let v: Cyclotomic = (0..self.size())
            .map(|i| &w[i] * &self.conj_s[c][i])
            .sum();
        self.to_count(v, a, b, c)
    }

    fn weights(&self, a: usize, b: usize) -> Vec<Cyclotomic> {
        (0..self.size())
            .map(|i| &(&self.s.entries[a][i] * &self.s.entries[b][i]) * &self.inv_s0[i])
            .collect()
    }

    /// All `N_{ab}^c` for fixed `a, b`.
    pub fn row(&self, a: usize, b: usize) -> Result<Vec<u32>> {
        let w = self.weights(a, b);
        (0..self.size())
            .map(|c| {
                let v: Cyclotomic = (0..self.size())
                    .filter(|&i| !w[i].is_zero() && !self.conj_s[c][i].is_zero())
                    .map(|i| &w[i] * &self.conj_s[c][i])
                    .sum();
                self.to_count(v, a, b, c)
            })
            .collect()
    }
}

pub fn verlinde(v: &Verlinde, a: usize, b: usize, c: usize) -> Result<u32> {
    v.coefficient(a, b, c)
}

/// Full fusion table `N[a][b][c]`, symmetric in `a, b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FusionTable {
    pub n: usize,
    pub coeffs: Vec<u32>,
}

impl FusionTable {
    pub fn from_verlinde(v: &Verlinde) -> Result<Self> {
        let n = v.size();
        let mut coeffs = vec![0; n * n * n];
        for a in 0..n {
            for b in a..n {
                let row = v.row(a, b)?;
                for (c, k) in row.into_iter().enumerate() {
                    coeffs[(a * n + b) * n + c] = k;
                    coeffs[(b * n + a) * n + c] = k;
                }
            }
        }
        Ok(FusionTable { n, coeffs })
    }

    pub fn get(&self, a: usize, b: usize, c: usize) -> u32 {
        self.coeffs[(a * self.n + b) * self.n + c]
    }

    /// Simples occurring in `a ⊗ b`.
    pub fn support(&self, a: usize, b: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(move |&c| self.get(a, b, c) > 0)
    }
}

/// Embedding of `W` into `W^{⊕n}` with image spanned by `(a₁m, …, aₙm)`,
/// as a `dim × n·dim` matrix acting on rows.
pub fn copy_select(dim: usize, coords: &[Cyclotomic]) -> Result<Matrix> {
    if coords.iter().all(Cyclotomic::is_zero) {
        return Err(Error::InvalidArgument("copy selection coordinates are all zero".into()));
    }
    let n = coords.len();
    Ok(Matrix::from_fn(dim, n * dim, |i, j| {
        if j % dim == i {
            coords[j / dim].clone()
        } else {
            Cyclotomic::zero()
        }
    }))
}

/// Composes [`copy_select`] with the generator tuples of `n` copies sitting
/// in a common ambient module: returns `Σ_k a_k · copy_k`.
pub fn select_from_copies(copies: &[Vec<Vector>], coords: &[Cyclotomic]) -> Result<Vec<Vector>> {
    if copies.len() != coords.len() || copies.is_empty() {
        return Err(Error::InvalidArgument("one coordinate per copy is required".into()));
    }
    let dim = copies[0].len();
    let emb = copy_select(dim, coords)?;
    let amb = copies[0][0].len();
    // stacked copies: row k*dim + b is the image of basis b in copy k
    let stacked = Matrix::from_rows(copies.iter().flat_map(|c| c.iter().cloned()).collect());
    debug_assert_eq!(stacked.cols(), amb);
    Ok(emb.mul(&stacked).to_rows())
}

/// Simple modules of `group` and the D(G)-module `⊕ V_k` for the given indices.
pub fn direct_sum_of(simples: &[SimpleDoubleModule], indices: &[usize]) -> Result<ModuleData> {
    let parts: Vec<&ModuleData> = indices.iter().map(|&i| &simples[i].data).collect();
    ModuleData::direct_sum(&parts)
}

/// Builds the list of irreps used for each class; exposed for reports.
pub fn class_labels(group: &FiniteGroup) -> Result<Vec<(String, Vec<String>)>> {
    conjugacy_classes(group)
        .iter()
        .map(|c| {
            Ok((
                group.name(c.rep).to_string(),
                centralizer_irreps(group, c)?.into_iter().map(|i| i.name).collect(),
            ))
        })
        .collect()
}
