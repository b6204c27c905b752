use std::collections::{BTreeMap, HashMap, VecDeque};

use super::poly::{FreeMonomial, NcPoly};
use crate::error::{Error, Result};
use crate::exactnum::Cyclotomic;
use crate::linalg::Matrix;

/// Reduced Gröbner basis of a homogeneous ideal, computed through a degree
/// bound. `complete` records that no overlap could exceed the bound, so the
/// basis is valid in every degree.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    elements: Vec<NcPoly>,
    bound: usize,
    complete: bool,
    generators: usize,
    leads: HashMap<Vec<u8>, usize>,
    lead_lengths: Vec<usize>,
}

impl GroebnerBasis {
    pub fn elements(&self) -> &[NcPoly] {
        &self.elements
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    pub fn is_complete(&self) -> bool {
        self.complete
    }

    pub fn num_generators(&self) -> usize {
        self.generators
    }

    pub fn leading_words(&self) -> Vec<FreeMonomial> {
        self.elements.iter().map(|g| g.leading().unwrap().0.clone()).collect()
    }

    fn empty(generators: usize, bound: usize) -> Self {
        GroebnerBasis { elements: Vec::new(), bound, complete: false, generators, leads: HashMap::new(), lead_lengths: Vec::new() }
    }

    fn push(&mut self, g: NcPoly) {
        let lead = g.leading().unwrap().0 .0.clone();
        let len = lead.len();
        self.leads.insert(lead, self.elements.len());
        if !self.lead_lengths.contains(&len) {
            self.lead_lengths.push(len);
            self.lead_lengths.sort_unstable();
        }
        self.elements.push(g);
    }

    /// First `(position, element)` whose leading word occurs in `w`.
    fn find_reducer(&self, w: &[u8]) -> Option<(usize, usize)> {
        for &len in &self.lead_lengths {
            if len > w.len() {
                break;
            }
            for pos in 0..=w.len() - len {
                if let Some(&k) = self.leads.get(&w[pos..pos + len]) {
                    return Some((pos, k));
                }
            }
        }
        None
    }

    pub fn is_normal_word(&self, w: &FreeMonomial) -> bool {
        self.find_reducer(&w.0).is_none()
    }

    /// Full reduction without checking the degree bound.
    fn reduce(&self, p: &NcPoly) -> NcPoly {
        let mut work: BTreeMap<FreeMonomial, Cyclotomic> = p.clone().into_terms();
        let mut out = BTreeMap::new();
        while let Some((m, c)) = work.pop_last() {
            match self.find_reducer(&m.0) {
                None => {
                    out.insert(m, c);
                }
                Some((pos, k)) => {
                    let g = &self.elements[k];
                    let len = g.leading().unwrap().0.degree();
                    let (u, v) = (&m.0[..pos], &m.0[pos + len..]);
                    for (t, d) in g.terms().rev().skip(1) {
                        let mut w = Vec::with_capacity(m.0.len() - len + t.degree());
                        w.extend_from_slice(u);
                        w.extend_from_slice(&t.0);
                        w.extend_from_slice(v);
                        let w = FreeMonomial(w);
                        let delta = -(&c * d);
                        match work.entry(w) {
                            std::collections::btree_map::Entry::Vacant(e) => {
                                e.insert(delta);
                            }
                            std::collections::btree_map::Entry::Occupied(mut e) => {
                                *e.get_mut() += &delta;
                                if e.get().is_zero() {
                                    e.remove();
                                }
                            }
                        }
                    }
                }
            }
        }
        NcPoly::from_map(out)
    }

    fn check_degree(&self, d: usize) -> Result<()> {
        if d > self.bound && !self.complete {
            return Err(Error::DegreeBound { bound: self.bound, what: format!("degree {d} requested") });
        }
        Ok(())
    }

    /// Normal form modulo the ideal; fails when the input degree exceeds a
    /// bound the basis is not known to be valid beyond.
    pub fn normal_form(&self, p: &NcPoly) -> Result<NcPoly> {
        self.check_degree(p.degree().unwrap_or(0))?;
        Ok(self.reduce(p))
    }

    /// Whether `p, q` are nonzero modulo the ideal with zero product.
    pub fn zero_divisor_witness(&self, p: &NcPoly, q: &NcPoly) -> Result<bool> {
        let a = self.normal_form(p)?;
        let b = self.normal_form(q)?;
        if a.is_zero() || b.is_zero() {
            return Ok(false);
        }
        Ok(self.normal_form(&(&a * &b))?.is_zero())
    }

    fn automaton(&self) -> Automaton {
        Automaton::new(self.generators, self.leads.keys())
    }

    /// Dimensions of the graded pieces in degrees `0..=d`.
    pub fn hilbert_coeffs(&self, d: usize) -> Result<Vec<u128>> {
        self.check_degree(d)?;
        let a = self.automaton();
        let mut counts = vec![0u128; a.goto.len()];
        counts[0] = 1;
        let mut out = vec![1];
        for _ in 0..d {
            let mut next = vec![0u128; counts.len()];
            for (s, &c) in counts.iter().enumerate() {
                if c == 0 {
                    continue;
                }
                for &t in &a.goto[s] {
                    if !a.terminal[t] {
                        next[t] += c;
                    }
                }
            }
            counts = next;
            out.push(counts.iter().sum());
        }
        Ok(out)
    }

    /// Normal words of degree `d` in increasing order.
    pub fn normal_words(&self, d: usize) -> Result<Vec<FreeMonomial>> {
        self.check_degree(d)?;
        let a = self.automaton();
        let mut out = Vec::new();
        let mut word = Vec::with_capacity(d);
        fn walk(a: &Automaton, s: usize, d: usize, word: &mut Vec<u8>, out: &mut Vec<FreeMonomial>) {
            if word.len() == d {
                out.push(FreeMonomial(word.clone()));
                return;
            }
            for (l, &t) in a.goto[s].iter().enumerate() {
                if !a.terminal[t] {
                    word.push(l as u8);
                    walk(a, t, d, word, out);
                    word.pop();
                }
            }
        }
        walk(&a, 0, d, &mut word, &mut out);
        Ok(out)
    }

    /// The degree-`d` normal words, required to be exactly the sorted words.
    pub fn pbw_monomials(&self, d: usize) -> Result<Vec<FreeMonomial>> {
        let words = self.normal_words(d)?;
        if let Some(w) = words.iter().find(|w| !w.is_sorted()) {
            return Err(Error::NotPbw(format!("normal word {:?} is not sorted", w.0)));
        }
        let n = self.generators as u128;
        let expected = binomial(d as u128 + n - 1, n.saturating_sub(1));
        if words.len() as u128 != expected {
            return Err(Error::NotPbw(format!("{} normal words in degree {d}, expected {expected}", words.len())));
        }
        Ok(words)
    }
}

fn binomial(n: u128, k: u128) -> u128 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Aho–Corasick automaton recognizing words that contain a leading word.
struct Automaton {
    goto: Vec<Vec<usize>>,
    terminal: Vec<bool>,
}

impl Automaton {
    fn new<'a>(alphabet: usize, patterns: impl Iterator<Item = &'a Vec<u8>>) -> Self {
        let mut children: Vec<Vec<Option<usize>>> = vec![vec![None; alphabet]];
        let mut terminal = vec![false];
        for p in patterns {
            let mut s = 0;
            for &l in p {
                s = match children[s][l as usize] {
                    Some(t) => t,
                    None => {
                        children.push(vec![None; alphabet]);
                        terminal.push(false);
                        let t = children.len() - 1;
                        children[s][l as usize] = Some(t);
                        t
                    }
                };
            }
            terminal[s] = true;
        }
        let n = children.len();
        let mut goto = vec![vec![0; alphabet]; n];
        let mut fail = vec![0; n];
        let mut queue = VecDeque::new();
        for l in 0..alphabet {
            match children[0][l] {
                Some(t) => {
                    goto[0][l] = t;
                    queue.push_back(t);
                }
                None => goto[0][l] = 0,
            }
        }
        while let Some(s) = queue.pop_front() {
            terminal[s] = terminal[s] || terminal[fail[s]];
            for l in 0..alphabet {
                match children[s][l] {
                    Some(t) => {
                        fail[t] = goto[fail[s]][l];
                        goto[s][l] = t;
                        queue.push_back(t);
                    }
                    None => goto[s][l] = goto[fail[s]][l],
                }
            }
        }
        Automaton { goto, terminal }
    }
}

/// Reduced-echelon form of homogeneous polynomials of one degree, largest
/// monomial first; rows come back monic with distinct leading words.
fn echelon(polys: &[NcPoly]) -> Vec<NcPoly> {
    let mut monos: Vec<FreeMonomial> = polys.iter().flat_map(|p| p.terms().map(|(m, _)| m.clone())).collect();
    monos.sort_unstable_by(|a, b| b.cmp(a));
    monos.dedup();
    if monos.is_empty() {
        return Vec::new();
    }
    let index: HashMap<&FreeMonomial, usize> = monos.iter().enumerate().map(|(k, m)| (m, k)).collect();
    let mut m = Matrix::from_fn(polys.len(), monos.len(), |_, _| Cyclotomic::zero());
    for (i, p) in polys.iter().enumerate() {
        for (mono, c) in p.terms() {
            m[(i, index[mono])] = c.clone();
        }
    }
    let rank = m.rref().len();
    (0..rank)
        .map(|i| NcPoly::from_terms(m.row(i).iter().enumerate().map(|(k, c)| (monos[k].clone(), c.clone()))))
        .collect()
}

/// Degree-by-degree completion of homogeneous generators of a two-sided
/// ideal, through overlap degree `bound`.
pub fn groebner_basis(generators: usize, relations: &[NcPoly], bound: usize) -> Result<GroebnerBasis> {
    if bound < 2 {
        return Err(Error::InvalidArgument("degree bound must be at least 2".into()));
    }
    if let Some(p) = relations.iter().find(|p| !p.is_homogeneous()) {
        return Err(Error::InvalidArgument(format!("inhomogeneous relation with {} terms", p.len())));
    }
    let mut gb = GroebnerBasis::empty(generators, bound);
    let mut by_degree: BTreeMap<usize, Vec<NcPoly>> = BTreeMap::new();
    for p in relations.iter().filter(|p| !p.is_zero()) {
        by_degree.entry(p.degree().unwrap()).or_default().push(p.clone());
    }
    if by_degree.keys().next() == Some(&0) {
        return Err(Error::InvalidArgument("constant relation".into()));
    }
    for d in 1..=bound {
        let mut batch: Vec<NcPoly> = by_degree.remove(&d).unwrap_or_default();
        // S-polynomials of overlaps that land in degree d
        let leads = gb.leading_words();
        for (a, la) in leads.iter().enumerate() {
            for (b, lb) in leads.iter().enumerate() {
                let (la, lb) = (&la.0, &lb.0);
                for ov in 1..la.len().min(lb.len()) {
                    if la.len() + lb.len() - ov != d || la[la.len() - ov..] != lb[..ov] {
                        continue;
                    }
                    let right = NcPoly::monomial(FreeMonomial(lb[ov..].to_vec()), Cyclotomic::one());
                    let left = NcPoly::monomial(FreeMonomial(la[..la.len() - ov].to_vec()), Cyclotomic::one());
                    let s = &(&gb.elements[a] * &right) - &(&left * &gb.elements[b]);
                    batch.push(s);
                }
            }
        }
        let reduced: Vec<NcPoly> = batch.iter().map(|p| gb.reduce(p)).filter(|p| !p.is_zero()).collect();
        for g in echelon(&reduced) {
            gb.push(g);
        }
    }
    let max_lead = gb.elements.iter().map(|g| g.degree().unwrap()).max().unwrap_or(0);
    gb.complete = by_degree.is_empty() && 2 * max_lead <= bound + 1;
    Ok(gb)
}
