use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::exactnum::parse::{self, Cursor};
use crate::exactnum::Cyclotomic;

/// A word in the generators, compared by degree and then lexicographically
/// on generator indices (index 0 is the smallest letter).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct FreeMonomial(pub Vec<u8>);

impl FreeMonomial {
    pub fn one() -> Self {
        FreeMonomial(Vec::new())
    }

    pub fn generator(i: usize) -> Self {
        FreeMonomial(vec![i as u8])
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn letters(&self) -> &[u8] {
        &self.0
    }

    pub fn mul(&self, other: &FreeMonomial) -> FreeMonomial {
        let mut w = Vec::with_capacity(self.0.len() + other.0.len());
        w.extend_from_slice(&self.0);
        w.extend_from_slice(&other.0);
        FreeMonomial(w)
    }

    /// Letters in non-decreasing order.
    pub fn is_sorted(&self) -> bool {
        self.0.windows(2).all(|w| w[0] <= w[1])
    }

    /// Exponent vector of a sorted word.
    pub fn exponents(&self, n: usize) -> Vec<u32> {
        let mut e = vec![0; n];
        for &l in &self.0 {
            e[l as usize] += 1;
        }
        e
    }

    /// The sorted word with exponent vector `e`.
    pub fn from_exponents(e: &[u32]) -> Self {
        let mut w = Vec::new();
        for (i, &k) in e.iter().enumerate() {
            w.extend(std::iter::repeat_n(i as u8, k as usize));
        }
        FreeMonomial(w)
    }

    pub fn display(&self, names: &[String]) -> String {
        if self.0.is_empty() {
            return "1".into();
        }
        let mut parts: Vec<String> = Vec::new();
        let mut k = 0;
        while k < self.0.len() {
            let l = self.0[k];
            let mut run = 1;
            while k + run < self.0.len() && self.0[k + run] == l {
                run += 1;
            }
            let name = &names[l as usize];
            parts.push(if run == 1 { name.clone() } else { format!("{name}^{run}") });
            k += run;
        }
        parts.join("*")
    }
}

impl Ord for FreeMonomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for FreeMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// An element of the free algebra with no zero coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct NcPoly {
    terms: BTreeMap<FreeMonomial, Cyclotomic>,
}

impl NcPoly {
    pub fn zero() -> Self {
        NcPoly::default()
    }

    pub fn one() -> Self {
        Self::constant(Cyclotomic::one())
    }

    pub fn constant(c: Cyclotomic) -> Self {
        Self::monomial(FreeMonomial::one(), c)
    }

    pub fn generator(i: usize) -> Self {
        Self::monomial(FreeMonomial::generator(i), Cyclotomic::one())
    }

    pub fn monomial(m: FreeMonomial, c: Cyclotomic) -> Self {
        let mut p = NcPoly::zero();
        p.add_term(m, c);
        p
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (FreeMonomial, Cyclotomic)>) -> Self {
        let mut p = NcPoly::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn add_term(&mut self, m: FreeMonomial, c: Cyclotomic) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += &c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Terms in increasing term order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&FreeMonomial, &Cyclotomic)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &FreeMonomial) -> Cyclotomic {
        self.terms.get(m).cloned().unwrap_or_else(Cyclotomic::zero)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading(&self) -> Option<(&FreeMonomial, &Cyclotomic)> {
        self.terms.iter().next_back()
    }

    pub fn degree(&self) -> Option<usize> {
        self.leading().map(|(m, _)| m.degree())
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut it = self.terms.keys();
        match it.next() {
            None => true,
            Some(first) => it.all(|m| m.degree() == first.degree()),
        }
    }

    pub fn homogeneous_part(&self, d: usize) -> NcPoly {
        NcPoly { terms: self.terms.iter().filter(|(m, _)| m.degree() == d).map(|(m, c)| (m.clone(), c.clone())).collect() }
    }

    pub fn scale(&self, c: &Cyclotomic) -> NcPoly {
        if c.is_zero() {
            return NcPoly::zero();
        }
        NcPoly { terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect() }
    }

    /// Divides by the leading coefficient.
    pub fn monic(&self) -> NcPoly {
        match self.leading() {
            None => NcPoly::zero(),
            Some((_, c)) => self.scale(&c.inv().expect("nonzero leading coefficient")),
        }
    }

    pub fn into_terms(self) -> BTreeMap<FreeMonomial, Cyclotomic> {
        self.terms
    }

    pub(crate) fn from_map(terms: BTreeMap<FreeMonomial, Cyclotomic>) -> Self {
        debug_assert!(terms.values().all(|c| !c.is_zero()));
        NcPoly { terms }
    }

    /// Parses `x1*y2 - (1/2)*z(8)^1*y2*x1` against the given generator names.
    pub fn parse(text: &str, names: &[String]) -> Result<NcPoly> {
        let mut cur = Cursor::new(text);
        let p = poly_expr(&mut cur, names)?;
        if !cur.at_end() {
            return Err(cur.error("trailing input"));
        }
        Ok(p)
    }

    /// Terms from the largest down, coefficient `1` omitted.
    pub fn display(&self, names: &[String]) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let (neg, mag) = match c.to_rational() {
                Some(r) if r.is_negative() => (true, Cyclotomic::from_rational(-r)),
                _ => (false, c.clone()),
            };
            if k == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let coef = if mag.is_one() {
                None
            } else if let Some(r) = mag.to_rational() {
                Some(if r.is_integer() { r.to_string() } else { format!("({r})") })
            } else {
                Some(format!("({mag})"))
            };
            match (coef, m.degree()) {
                (None, 0) => out.push('1'),
                (None, _) => out.push_str(&m.display(names)),
                (Some(c), 0) => out.push_str(&c),
                (Some(c), _) => {
                    let _ = write!(out, "{c}*{}", m.display(names));
                }
            }
        }
        out
    }
}

fn poly_expr(cur: &mut Cursor<'_>, names: &[String]) -> Result<NcPoly> {
    let mut acc = if cur.eat('-') { -poly_term(cur, names)? } else { poly_term(cur, names)? };
    loop {
        if cur.eat('+') {
            acc = &acc + &poly_term(cur, names)?;
        } else if cur.eat('-') {
            acc = &acc - &poly_term(cur, names)?;
        } else {
            return Ok(acc);
        }
    }
}

fn poly_term(cur: &mut Cursor<'_>, names: &[String]) -> Result<NcPoly> {
    let mut acc = poly_factor(cur, names)?;
    while cur.eat('*') {
        acc = &acc * &poly_factor(cur, names)?;
    }
    Ok(acc)
}

fn poly_factor(cur: &mut Cursor<'_>, names: &[String]) -> Result<NcPoly> {
    let base = poly_atom(cur, names)?;
    if cur.eat('^') {
        let e = cur.small_integer()?;
        if e < 0 {
            return Err(cur.error("negative power of a polynomial"));
        }
        let mut acc = NcPoly::one();
        for _ in 0..e {
            acc = &acc * &base;
        }
        return Ok(acc);
    }
    Ok(base)
}

fn poly_atom(cur: &mut Cursor<'_>, names: &[String]) -> Result<NcPoly> {
    if cur.eat('-') {
        return Ok(-poly_factor(cur, names)?);
    }
    if cur.eat('(') {
        let p = poly_expr(cur, names)?;
        if !cur.eat(')') {
            return Err(cur.error("expected `)`"));
        }
        return Ok(p);
    }
    let save = cur.save();
    if let Some(id) = cur.identifier() {
        if let Some(i) = names.iter().position(|n| n == id) {
            // `z(8)` is a root of unity even when `z` names a generator
            if cur.peek() != Some('(') {
                return Ok(NcPoly::generator(i));
            }
        }
    }
    cur.restore(save);
    Ok(NcPoly::constant(parse::atom(cur)?))
}

impl Add for &NcPoly {
    type Output = NcPoly;
    fn add(self, rhs: &NcPoly) -> NcPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &NcPoly {
    type Output = NcPoly;
    fn sub(self, rhs: &NcPoly) -> NcPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl Mul for &NcPoly {
    type Output = NcPoly;
    fn mul(self, rhs: &NcPoly) -> NcPoly {
        let mut out = NcPoly::zero();
        for (a, x) in &self.terms {
            for (b, y) in &rhs.terms {
                out.add_term(a.mul(b), x * y);
            }
        }
        out
    }
}

impl Neg for NcPoly {
    type Output = NcPoly;
    fn neg(self) -> NcPoly {
        NcPoly { terms: self.terms.into_iter().map(|(m, c)| (m, -c)).collect() }
    }
}

impl Neg for &NcPoly {
    type Output = NcPoly;
    fn neg(self) -> NcPoly {
        -self.clone()
    }
}

impl Add for NcPoly {
    type Output = NcPoly;
    fn add(self, rhs: NcPoly) -> NcPoly {
        &self + &rhs
    }
}

impl Sub for NcPoly {
    type Output = NcPoly;
    fn sub(self, rhs: NcPoly) -> NcPoly {
        &self - &rhs
    }
}

impl Mul for NcPoly {
    type Output = NcPoly;
    fn mul(self, rhs: NcPoly) -> NcPoly {
        &self * &rhs
    }
}

/// Rejects unknown names early with a parse error.
pub(crate) fn check_names(names: &[String]) -> Result<()> {
    for (k, n) in names.iter().enumerate() {
        if n.is_empty() || !n.chars().next().unwrap().is_ascii_alphabetic() || !n.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') {
            return Err(Error::InvalidArgument(format!("bad generator name `{n}`")));
        }
        if n == "i" || n == "sqrt2" || names[..k].contains(n) {
            return Err(Error::InvalidArgument(format!("generator name `{n}` is reserved or repeated")));
        }
    }
    if names.len() > 255 {
        return Err(Error::InvalidArgument("at most 255 generators".into()));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names(xs: &[&str]) -> Vec<String> {
        xs.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn parse_and_print() {
        let n = names(&["x1", "y2", "z"]);
        let p = NcPoly::parse("x1*y2 - (1/2)*z(8)^1*y2*x1", &n).unwrap();
        assert_eq!(p.len(), 2);
        let back = NcPoly::parse(&p.display(&n), &n).unwrap();
        assert_eq!(back, p);
        let q = NcPoly::parse("(x1 + y2)^2 - 3", &n).unwrap();
        assert_eq!(q.len(), 5);
        assert_eq!(NcPoly::parse("z^2 - z*z", &n).unwrap(), NcPoly::zero());
        assert!(NcPoly::parse("x1 + w", &n).is_err());
        assert_eq!(NcPoly::parse("-x1^2", &n).unwrap().display(&n), "-x1^2");
    }

    #[test]
    fn order_is_degree_then_lex() {
        let a = FreeMonomial(vec![1, 0]);
        let b = FreeMonomial(vec![0, 1]);
        let c = FreeMonomial(vec![2]);
        assert!(b < a);
        assert!(c < b);
        assert!(b.is_sorted() && !a.is_sorted());
        assert_eq!(FreeMonomial::from_exponents(&b.exponents(3)), b);
    }
}
