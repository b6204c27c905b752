//! Finite groups given by multiplication tables, with conjugacy data and
//! explicit irreducible representations for cyclic, dicyclic and `S_3`.

mod classes;
mod irreps;

use std::fmt;

pub use classes::{conjugacy_classes, ConjClass, Subgroup};
pub use irreps::{centralizer_irreps, irreps, Irrep};

use crate::error::{Error, Result};

/// Elements are indices into the multiplication table.
pub type Elem = usize;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    Cyclic(u32),
    /// The dicyclic group of order `4n`.
    Dicyclic(u32),
    Symmetric3,
    Generic,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Cyclic(n) => write!(f, "cyclic:{n}"),
            Family::Dicyclic(n) => write!(f, "dicyclic:{n}"),
            Family::Symmetric3 => write!(f, "s3"),
            Family::Generic => write!(f, "generic"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    family: Family,
    names: Vec<String>,
    table: Vec<Elem>,
    inverses: Vec<Elem>,
    identity: Elem,
    generators: Vec<(String, Elem)>,
}

fn power_word(base: &str, k: u32) -> String {
    match k {
        0 => String::new(),
        1 => base.to_string(),
        _ => format!("{base}^{k}"),
    }
}

/// Builds the table of a group whose elements are `s^ε r^k`, `0 ≤ k < m`,
/// with `r s = s r^{-1}` and `s² = r^{s_sq}`.
fn metacyclic(family: Family, m: u32, s_sq: u32) -> FiniteGroup {
    let order = 2 * m as usize;
    let idx = |eps: u32, k: u32| (eps * m + k) as usize;
    let mut table = vec![0; order * order];
    for e1 in 0..2 {
        for k1 in 0..m {
            for e2 in 0..2 {
                for k2 in 0..m {
                    // s^e1 r^k1 s^e2 r^k2 = s^(e1+e2) r^((-1)^e2 k1 + k2)
                    let k1s = if e2 == 1 { (m - k1) % m } else { k1 };
                    let extra = if e1 == 1 && e2 == 1 { s_sq } else { 0 };
                    let k = (k1s + k2 + extra) % m;
                    table[idx(e1, k1) * order + idx(e2, k2)] = idx(e1 ^ e2, k);
                }
            }
        }
    }
    let names = (0..2)
        .flat_map(|eps| (0..m).map(move |k| (eps, k)))
        .map(|(eps, k)| match (eps, k) {
            (0, 0) => "e".to_string(),
            (0, k) => power_word("r", k),
            (_, 0) => "s".to_string(),
            (_, k) => format!("s*{}", power_word("r", k)),
        })
        .collect();
    FiniteGroup::assemble(
        family,
        names,
        table,
        vec![("r".into(), idx(0, 1 % m)), ("s".into(), idx(1, 0))],
    )
}

impl FiniteGroup {
    fn assemble(family: Family, names: Vec<String>, table: Vec<Elem>, generators: Vec<(String, Elem)>) -> Self {
        let n = names.len();
        let identity = (0..n)
            .find(|&e| (0..n).all(|x| table[e * n + x] == x && table[x * n + e] == x))
            .expect("table has an identity");
        let inverses = (0..n)
            .map(|x| (0..n).find(|&y| table[x * n + y] == identity).expect("inverse exists"))
            .collect();
        FiniteGroup { family, names, table, inverses, identity, generators }
    }

    /// The dicyclic group `⟨r, s : r^{2n} = e, s² = r^n, r s r s^{-1} = e⟩`.
    pub fn dicyclic(n: u32) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidArgument(format!("dicyclic({n}) needs n >= 2")));
        }
        Ok(metacyclic(Family::Dicyclic(n), 2 * n, n))
    }

    pub fn cyclic(n: u32) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument("cyclic group of order 0".into()));
        }
        let order = n as usize;
        let table = (0..order * order).map(|t| (t / order + t % order) % order).collect();
        let names = (0..n).map(|k| if k == 0 { "e".to_string() } else { power_word("g", k) }).collect();
        Ok(Self::assemble(Family::Cyclic(n), names, table, vec![("g".into(), 1 % order)]))
    }

    /// `S_3` with `r` a 3-cycle and `s` a transposition.
    pub fn symmetric3() -> Self {
        metacyclic(Family::Symmetric3, 3, 0)
    }

    /// A group from an explicit multiplication table, validated against the
    /// group axioms.
    pub fn from_table(names: Vec<String>, table: Vec<Elem>, generators: Vec<(String, Elem)>) -> Result<Self> {
        let n = names.len();
        let bad = |m: &str| Err(Error::InvalidArgument(format!("not a group table: {m}")));
        if n == 0 || table.len() != n * n || table.iter().any(|&x| x >= n) {
            return bad("shape");
        }
        let Some(identity) = (0..n).find(|&e| (0..n).all(|x| table[e * n + x] == x && table[x * n + e] == x)) else {
            return bad("no identity");
        };
        for x in 0..n {
            if !(0..n).any(|y| table[x * n + y] == identity && table[y * n + x] == identity) {
                return bad("missing inverse");
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a * n + b] * n + c] != table[a * n + table[b * n + c]] {
                        return bad("not associative");
                    }
                }
            }
        }
        if generators.iter().any(|(_, g)| *g >= n) {
            return bad("generator out of range");
        }
        Ok(Self::assemble(Family::Generic, names, table, generators))
    }

    pub fn family(&self) -> &Family {
        &self.family
    }

    pub fn order(&self) -> usize {
        self.names.len()
    }

    pub fn elements(&self) -> std::ops::Range<Elem> {
        0..self.order()
    }

    pub fn identity(&self) -> Elem {
        self.identity
    }

    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        self.table[a * self.order() + b]
    }

    pub fn inv(&self, a: Elem) -> Elem {
        self.inverses[a]
    }

    /// `g^{-1} a g`, the right conjugate `a^g`.
    pub fn conj(&self, a: Elem, g: Elem) -> Elem {
        self.mul(self.mul(self.inv(g), a), g)
    }

    pub fn pow(&self, a: Elem, k: i64) -> Elem {
        let base = if k < 0 { self.inv(a) } else { a };
        (0..k.unsigned_abs()).fold(self.identity, |acc, _| self.mul(acc, base))
    }

    pub fn commute(&self, a: Elem, b: Elem) -> bool {
        self.mul(a, b) == self.mul(b, a)
    }

    pub fn element_order(&self, a: Elem) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != self.identity {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn generators(&self) -> &[(String, Elem)] {
        &self.generators
    }

    pub fn generator(&self, name: &str) -> Option<Elem> {
        self.generators.iter().find(|(n, _)| n == name).map(|(_, g)| *g)
    }

    pub fn name(&self, a: Elem) -> &str {
        &self.names[a]
    }

    /// Looks up an element by its normal-form name.
    pub fn by_name(&self, name: &str) -> Option<Elem> {
        self.names.iter().position(|n| n == name)
    }

    /// Parses a word such as `s*r^3`, `r^-1*s` or `e`.
    pub fn parse_word(&self, word: &str) -> Result<Elem> {
        let word = word.trim();
        if word.is_empty() {
            return Err(Error::Parse("empty group word".into()));
        }
        let mut acc = self.identity;
        for factor in word.split('*') {
            let factor = factor.trim();
            let (base, exp) = match factor.split_once('^') {
                Some((b, e)) => {
                    let e: i64 = e.trim().parse().map_err(|_| Error::Parse(format!("bad exponent in `{factor}`")))?;
                    (b.trim(), e)
                }
                None => (factor, 1),
            };
            let g = if base == "e" || base == "1" {
                self.identity
            } else if let Some(g) = self.generator(base) {
                g
            } else {
                return Err(Error::Parse(format!("unknown generator `{base}` in `{word}`")));
            };
            acc = self.mul(acc, self.pow(g, exp));
        }
        Ok(acc)
    }

    /// Subgroup generated by `gens`, sorted.
    pub fn generated_subgroup(&self, gens: &[Elem]) -> Vec<Elem> {
        let mut seen = vec![false; self.order()];
        let mut stack = vec![self.identity];
        seen[self.identity] = true;
        while let Some(x) = stack.pop() {
            for &g in gens {
                let y = self.mul(x, g);
                if !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        self.elements().filter(|&x| seen[x]).collect()
    }

    pub fn centralizer(&self, a: Elem) -> Vec<Elem> {
        self.elements().filter(|&g| self.commute(a, g)).collect()
    }

    pub fn same_group(&self, other: &FiniteGroup) -> bool {
        self.family == other.family && self.table == other.table
    }
}

impl fmt::Display for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (order {})", self.family, self.order())
    }
}

/// Parses `dicyclic:2`, `cyclic:4`, `s3`, or the aliases `q8`/`d4`, `d8`.
pub fn parse_group(spec: &str) -> Result<FiniteGroup> {
    let spec = spec.trim().to_ascii_lowercase();
    let (family, arg) = match spec.split_once(':') {
        Some((f, a)) => (f.to_string(), Some(a.to_string())),
        None => (spec.clone(), None),
    };
    let num = |a: Option<String>| -> Result<u32> {
        a.ok_or_else(|| Error::Parse(format!("group `{spec}` needs a parameter")))?
            .parse()
            .map_err(|_| Error::Parse(format!("bad group parameter in `{spec}`")))
    };
    match family.as_str() {
        "dicyclic" => FiniteGroup::dicyclic(num(arg)?),
        "cyclic" => FiniteGroup::cyclic(num(arg)?),
        "s3" | "symmetric3" | "sym3" => Ok(FiniteGroup::symmetric3()),
        "q8" | "d4" => FiniteGroup::dicyclic(2),
        "d8" => FiniteGroup::dicyclic(4),
        _ => Err(Error::Parse(format!("unknown group `{spec}`"))),
    }
}
