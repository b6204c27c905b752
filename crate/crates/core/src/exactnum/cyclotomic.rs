use std::cell::RefCell;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::rc::Rc;
use std::str::FromStr;

use num_integer::Integer;

use super::Rational;
use crate::error::Error;

/// One prime-power factor `q = p^k` of a field order `N`.
#[derive(Debug)]
struct PrimePart {
    p: u32,
    q: u32,
    phi: u32,
    /// `N / q`, the exponent of `ζ_q` inside `Q(ζ_N)`.
    cofactor: u32,
    /// Inverse of `N / q` modulo `q`.
    cofactor_inv: u32,
}

#[derive(Debug)]
struct FieldData {
    n: u32,
    parts: Vec<PrimePart>,
}

impl FieldData {
    fn new(n: u32) -> Self {
        let mut parts = Vec::new();
        let mut m = n;
        let mut p = 2;
        while m > 1 {
            if p * p > m {
                p = m;
            }
            if m.is_multiple_of(p) {
                let mut q = 1;
                while m.is_multiple_of(p) {
                    m /= p;
                    q *= p;
                }
                let cofactor = n / q;
                let cofactor_inv = mod_inverse(cofactor % q, q);
                parts.push(PrimePart {
                    p,
                    q,
                    phi: q / p * (p - 1),
                    cofactor,
                    cofactor_inv,
                });
            }
            p += 1;
        }
        FieldData { n, parts }
    }

    fn component(&self, part: &PrimePart, e: u32) -> u32 {
        ((e as u64 * part.cofactor_inv as u64) % part.q as u64) as u32
    }

    fn in_basis(&self, e: u32) -> bool {
        self.parts.iter().all(|pp| self.component(pp, e) < pp.phi)
    }

    /// Rewrites a dense coefficient vector indexed by exponent into the
    /// canonical tensor basis of prime-power power bases.
    fn reduce(&self, dense: &mut [Rational]) {
        for pp in &self.parts {
            let step = (pp.q / pp.p) as u64 * pp.cofactor as u64;
            for e in 0..self.n {
                if dense[e as usize].is_zero() || self.component(pp, e) < pp.phi {
                    continue;
                }
                let c = std::mem::take(&mut dense[e as usize]);
                for s in 1..pp.p as u64 {
                    let shift = (s * step) % self.n as u64;
                    let target = ((e as u64 + self.n as u64 - shift) % self.n as u64) as usize;
                    dense[target] -= &c;
                }
            }
        }
    }
}

fn mod_inverse(a: u32, m: u32) -> u32 {
    if m == 1 {
        return 0;
    }
    let g = (a as i64).extended_gcd(&(m as i64));
    debug_assert_eq!(g.gcd, 1);
    g.x.rem_euclid(m as i64) as u32
}

thread_local! {
    static FIELDS: RefCell<HashMap<u32, Rc<FieldData>>> = RefCell::new(HashMap::new());
}

fn field(n: u32) -> Rc<FieldData> {
    FIELDS.with(|f| {
        f.borrow_mut()
            .entry(n)
            .or_insert_with(|| Rc::new(FieldData::new(n)))
            .clone()
    })
}

/// An exact element of a cyclotomic field `Q(ζ_N)`.
///
/// The element is stored over its conductor in a fixed basis: the tensor
/// product of the power bases `{ζ_q^f : f < φ(q)}` over the prime powers `q`
/// dividing the order. Zero is the empty term list at order 1.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Cyclotomic {
    order: u32,
    terms: Vec<(u32, Rational)>,
}

impl Cyclotomic {
    pub fn zero() -> Self {
        Cyclotomic { order: 1, terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::from_rational(Rational::one())
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(Rational::from_int(n))
    }

    pub fn from_rational(r: Rational) -> Self {
        if r.is_zero() {
            Self::zero()
        } else {
            Cyclotomic { order: 1, terms: vec![(0, r)] }
        }
    }

    /// `ζ_n^k`. Fails when `n == 0`.
    pub fn root(n: u32, k: i64) -> Result<Self, Error> {
        if n == 0 {
            return Err(Error::InvalidArgument("root of unity of order 0".into()));
        }
        let e = k.rem_euclid(n as i64) as usize;
        let mut dense = vec![Rational::zero(); n as usize];
        dense[e] = Rational::one();
        Ok(Self::from_dense(n, dense))
    }

    /// The imaginary unit `ζ_4`.
    pub fn i() -> Self {
        Self::root(4, 1).unwrap()
    }

    /// `ζ_8 + ζ_8^{-1}`.
    pub fn sqrt2() -> Self {
        &Self::root(8, 1).unwrap() + &Self::root(8, 7).unwrap()
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    /// Canonical `(exponent, coefficient)` pairs at the conductor.
    pub fn terms(&self) -> &[(u32, Rational)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.order == 1 && self.terms.len() == 1 && self.terms[0].1.is_one()
    }

    pub fn is_rational(&self) -> bool {
        self.order == 1
    }

    pub fn to_rational(&self) -> Option<Rational> {
        match (self.order, self.terms.as_slice()) {
            (1, []) => Some(Rational::zero()),
            (1, [(0, r)]) => Some(r.clone()),
            _ => None,
        }
    }

    pub fn to_i64(&self) -> Option<i64> {
        self.to_rational().and_then(|r| r.to_i64())
    }

    fn from_dense(n: u32, mut dense: Vec<Rational>) -> Self {
        let fd = field(n);
        fd.reduce(&mut dense);
        let terms = dense
            .into_iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(e, c)| (e as u32, c))
            .collect();
        Self::descend(n, terms)
    }

    /// Moves a canonical element of `Q(ζ_n)` down to its conductor.
    fn descend(mut n: u32, mut terms: Vec<(u32, Rational)>) -> Self {
        if terms.is_empty() {
            return Self::zero();
        }
        'outer: loop {
            if n == 1 {
                break;
            }
            let fd = field(n);
            for pp in &fd.parts {
                let comps: Vec<u32> = terms.iter().map(|(e, _)| fd.component(pp, *e)).collect();
                let fits = if pp.q == pp.p {
                    comps.iter().all(|&f| f == 0)
                } else {
                    comps.iter().all(|&f| f % pp.p == 0)
                };
                if !fits {
                    continue;
                }
                let m = n / pp.p;
                let small = field(m);
                let mut out: Vec<(u32, Rational)> = terms
                    .drain(..)
                    .map(|(e, c)| {
                        let mut e2: u64 = 0;
                        for sp in &small.parts {
                            let big = fd.parts.iter().find(|b| b.p == sp.p).unwrap();
                            let mut f = fd.component(big, e);
                            if sp.p == pp.p {
                                f /= pp.p;
                            }
                            e2 += f as u64 * sp.cofactor as u64;
                        }
                        ((e2 % m as u64) as u32, c)
                    })
                    .collect();
                out.sort_by_key(|(e, _)| *e);
                terms = out;
                n = m;
                continue 'outer;
            }
            break;
        }
        Cyclotomic { order: n, terms }
    }

    /// Dense exponent-indexed coefficients after embedding into `Q(ζ_m)`.
    fn lift_dense(&self, m: u32) -> Vec<Rational> {
        debug_assert_eq!(m % self.order, 0);
        let scale = m / self.order;
        let mut dense = vec![Rational::zero(); m as usize];
        for (e, c) in &self.terms {
            dense[(e * scale) as usize] = c.clone();
        }
        dense
    }

    fn lcm_order(&self, other: &Self) -> u32 {
        self.order.lcm(&other.order)
    }

    pub fn scale(&self, r: &Rational) -> Self {
        if r.is_zero() {
            return Self::zero();
        }
        Cyclotomic {
            order: self.order,
            terms: self.terms.iter().map(|(e, c)| (*e, c * r)).collect(),
        }
    }

    fn add_ref(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        if self.order == other.order {
            let mut terms = Vec::with_capacity(self.terms.len() + other.terms.len());
            let (mut i, mut j) = (0, 0);
            while i < self.terms.len() || j < other.terms.len() {
                let take_left = j >= other.terms.len()
                    || (i < self.terms.len() && self.terms[i].0 < other.terms[j].0);
                let take_right = i >= self.terms.len()
                    || (j < other.terms.len() && other.terms[j].0 < self.terms[i].0);
                if take_left {
                    terms.push(self.terms[i].clone());
                    i += 1;
                } else if take_right {
                    terms.push(other.terms[j].clone());
                    j += 1;
                } else {
                    let s = &self.terms[i].1 + &other.terms[j].1;
                    if !s.is_zero() {
                        terms.push((self.terms[i].0, s));
                    }
                    i += 1;
                    j += 1;
                }
            }
            return Self::descend(self.order, terms);
        }
        let m = self.lcm_order(other);
        let mut dense = self.lift_dense(m);
        let scale = m / other.order;
        for (e, c) in &other.terms {
            dense[(e * scale) as usize] += c;
        }
        let terms = dense
            .into_iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(e, c)| (e as u32, c))
            .collect();
        Self::descend(m, terms)
    }

    fn mul_ref(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if self.order == 1 {
            return other.scale(&self.terms[0].1);
        }
        if other.order == 1 {
            return self.scale(&other.terms[0].1);
        }
        let m = self.lcm_order(other);
        let (sa, sb) = (m / self.order, m / other.order);
        let mut dense = vec![Rational::zero(); m as usize];
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e = ((e1 * sa + e2 * sb) % m) as usize;
                dense[e] += &(c1 * c2);
            }
        }
        Self::from_dense(m, dense)
    }

    /// Applies the Galois automorphism `ζ_N ↦ ζ_N^a` with `gcd(a, N) = 1`.
    pub fn galois(&self, a: i64) -> Self {
        if self.order == 1 {
            return self.clone();
        }
        let n = self.order;
        let a = a.rem_euclid(n as i64) as u64;
        let mut dense = vec![Rational::zero(); n as usize];
        for (e, c) in &self.terms {
            dense[((*e as u64 * a) % n as u64) as usize] = c.clone();
        }
        Self::from_dense(n, dense)
    }

    /// Complex conjugation `ζ ↦ ζ^{-1}`.
    pub fn conj(&self) -> Self {
        self.galois(-1)
    }

    pub fn inv(&self) -> Result<Self, Error> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if let Some(r) = self.to_rational() {
            return Ok(Self::from_rational(r.inv()?));
        }
        if let [(e, c)] = self.terms.as_slice() {
            let n = self.order;
            let mut dense = vec![Rational::zero(); n as usize];
            dense[((n - e) % n) as usize] = c.inv()?;
            return Ok(Self::from_dense(n, dense));
        }
        // x^{-1} = (product of the other conjugates) / norm(x)
        let n = self.order as i64;
        let mut others = Self::one();
        for a in 2..n {
            if a.gcd(&n) == 1 {
                others = &others * &self.galois(a);
            }
        }
        let norm = (&others * self)
            .to_rational()
            .expect("norm of a cyclotomic is rational");
        Ok(others.scale(&norm.inv()?))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self, Error> {
        Ok(self * &other.inv()?)
    }

    pub fn pow(&self, e: i64) -> Result<Self, Error> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut k = e.unsigned_abs();
        let mut acc = Self::one();
        let mut sq = base;
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &sq;
            }
            k >>= 1;
            if k > 0 {
                sq = &sq * &sq;
            }
        }
        Ok(acc)
    }

    /// Coefficient of `ζ_m^e` when the element is written over `Q(ζ_m)`.
    /// `m` must be a multiple of the conductor.
    pub fn coefficient_at(&self, m: u32, e: u32) -> Option<Rational> {
        if !m.is_multiple_of(self.order) {
            return None;
        }
        let scale = m / self.order;
        if !e.is_multiple_of(scale) {
            return Some(Rational::zero());
        }
        let target = e / scale;
        Some(
            self.terms
                .iter()
                .find(|(x, _)| *x == target)
                .map(|(_, c)| c.clone())
                .unwrap_or_else(Rational::zero),
        )
    }

    /// Canonical exponents valid for order `n`; exposed for tests.
    pub fn basis_exponents(n: u32) -> Vec<u32> {
        let fd = field(n);
        (0..n).filter(|&e| fd.in_basis(e)).collect()
    }
}

impl Default for Cyclotomic {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<i64> for Cyclotomic {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

impl From<Rational> for Cyclotomic {
    fn from(r: Rational) -> Self {
        Self::from_rational(r)
    }
}

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic {
            order: self.order,
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        -&self
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $body:expr) => {
        impl $tr<&Cyclotomic> for &Cyclotomic {
            type Output = Cyclotomic;
            fn $method(self, rhs: &Cyclotomic) -> Cyclotomic {
                let f: fn(&Cyclotomic, &Cyclotomic) -> Cyclotomic = $body;
                f(self, rhs)
            }
        }
        impl $tr<Cyclotomic> for Cyclotomic {
            type Output = Cyclotomic;
            fn $method(self, rhs: Cyclotomic) -> Cyclotomic {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&Cyclotomic> for Cyclotomic {
            type Output = Cyclotomic;
            fn $method(self, rhs: &Cyclotomic) -> Cyclotomic {
                (&self).$method(rhs)
            }
        }
        impl $tr<Cyclotomic> for &Cyclotomic {
            type Output = Cyclotomic;
            fn $method(self, rhs: Cyclotomic) -> Cyclotomic {
                self.$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a, b| a.add_ref(b));
forward_binop!(Sub, sub, |a, b| a.add_ref(&-b));
forward_binop!(Mul, mul, |a, b| a.mul_ref(b));
forward_binop!(Div, div, |a, b| a.checked_div(b).expect("division by zero"));

impl AddAssign<&Cyclotomic> for Cyclotomic {
    fn add_assign(&mut self, rhs: &Cyclotomic) {
        *self = self.add_ref(rhs);
    }
}

impl SubAssign<&Cyclotomic> for Cyclotomic {
    fn sub_assign(&mut self, rhs: &Cyclotomic) {
        *self = self.add_ref(&-rhs);
    }
}

impl MulAssign<&Cyclotomic> for Cyclotomic {
    fn mul_assign(&mut self, rhs: &Cyclotomic) {
        *self = self.mul_ref(rhs);
    }
}

impl std::iter::Sum for Cyclotomic {
    fn sum<I: Iterator<Item = Cyclotomic>>(iter: I) -> Self {
        iter.fold(Cyclotomic::zero(), |a, b| a + b)
    }
}

fn write_coefficient(f: &mut fmt::Formatter<'_>, c: &Rational) -> fmt::Result {
    if c.is_integer() {
        write!(f, "{c}")
    } else {
        write!(f, "({c})")
    }
}

impl fmt::Display for Cyclotomic {
    /// Renders `a0 + a1*z(N)^1 + ...` over the conductor.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (e, c)) in self.terms.iter().enumerate() {
            let mag = if idx == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                c.abs()
            } else {
                write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
                c.abs()
            };
            if *e == 0 {
                write_coefficient(f, &mag)?;
            } else {
                if !mag.is_one() {
                    write_coefficient(f, &mag)?;
                    write!(f, "*")?;
                }
                write!(f, "z({})^{}", self.order, e)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Cyclotomic {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        super::parse::parse_cyclotomic(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(n: u32, k: i64) -> Cyclotomic {
        Cyclotomic::root(n, k).unwrap()
    }

    #[test]
    fn examples() {
        assert_eq!(z(8, 2), z(4, 1));
        assert_eq!(z(8, 2).order(), 4);
        assert_eq!(&z(3, 1) + &z(3, 2), Cyclotomic::from_int(-1));
        let s = &z(8, 1) + &z(8, 7);
        assert_eq!(&s * &s, Cyclotomic::from_int(2));
        let i = Cyclotomic::i();
        let one = Cyclotomic::one();
        assert_eq!(&(&one + &i) * &(&one - &i), Cyclotomic::from_int(2));
        assert_eq!(z(3, 1).inv().unwrap(), z(3, 2));
        assert_eq!(z(8, 3).conj(), z(8, 5));
        assert!(Cyclotomic::root(0, 1).is_err());
        assert!(Cyclotomic::zero().inv().is_err());
    }

    #[test]
    fn conductor_drops_factor_two() {
        // ζ_6 = -ζ_3^2
        let x = z(6, 1);
        assert_eq!(x.order(), 3);
        assert_eq!(x, -z(3, 2));
        assert_eq!(z(2, 1), Cyclotomic::from_int(-1));
        assert_eq!(z(12, 3), Cyclotomic::i());
    }

    #[test]
    fn basis_sizes_match_totient() {
        for (n, phi) in [(1, 1), (3, 2), (4, 2), (8, 4), (9, 6), (12, 4), (15, 8), (16, 8), (24, 8)] {
            assert_eq!(Cyclotomic::basis_exponents(n).len(), phi, "n = {n}");
        }
    }

    #[test]
    fn display_round_trip() {
        let x = &z(8, 1).scale(&Rational::new(-1, 2)) + &Cyclotomic::from_int(3);
        let text = x.to_string();
        assert_eq!(text, "3 - (1/2)*z(8)^1");
        assert_eq!(text.parse::<Cyclotomic>().unwrap(), x);
    }
}
