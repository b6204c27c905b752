//! Inner faithfulness through fusion-support closure, and the census of
//! smallest inner-faithful sums of simples.

use std::fmt;
use std::sync::Arc;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::fusion::{FusionTable, Verlinde};
use crate::group::FiniteGroup;

/// A nonempty multiset of simple indices, kept sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ModuleSum(Vec<usize>);

impl ModuleSum {
    pub fn new(mut summands: Vec<usize>) -> Result<Self> {
        if summands.is_empty() {
            return Err(Error::InvalidArgument("a module sum needs at least one summand".into()));
        }
        summands.sort_unstable();
        Ok(ModuleSum(summands))
    }

    pub fn summands(&self) -> &[usize] {
        &self.0
    }

    pub fn distinct(&self) -> Vec<usize> {
        let mut d = self.0.clone();
        d.dedup();
        d
    }

    pub fn has_repeats(&self) -> bool {
        self.0.windows(2).any(|w| w[0] == w[1])
    }
}

impl fmt::Display for ModuleSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|i| format!("V{i}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Which simples occur in each `V_a ⊗ V_b`, as bitsets.
#[derive(Clone, Debug)]
pub struct FusionSupport {
    n: usize,
    words: usize,
    bits: Vec<u64>,
}

impl FusionSupport {
    pub fn from_table(table: &FusionTable) -> Self {
        let n = table.n;
        let words = n.div_ceil(64);
        let mut bits = vec![0u64; n * n * words];
        for a in 0..n {
            for b in 0..n {
                for c in table.support(a, b) {
                    bits[(a * n + b) * words + c / 64] |= 1 << (c % 64);
                }
            }
        }
        FusionSupport { n, words, bits }
    }

    pub fn for_group(group: &Arc<FiniteGroup>) -> Result<Self> {
        let v = Verlinde::for_group(group)?;
        Ok(Self::from_table(&FusionTable::from_verlinde(&v)?))
    }

    pub fn size(&self) -> usize {
        self.n
    }

    fn row(&self, a: usize, b: usize) -> &[u64] {
        let start = (a * self.n + b) * self.words;
        &self.bits[start..start + self.words]
    }

    pub fn contains(&self, a: usize, b: usize, c: usize) -> bool {
        self.row(a, b)[c / 64] >> (c % 64) & 1 == 1
    }
}

/// The closure together with the tensor degree at which each simple first
/// appears (`None` for simples never reached).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Closure {
    pub members: Vec<usize>,
    pub depth: Vec<Option<usize>>,
}

impl Closure {
    pub fn max_depth(&self) -> usize {
        self.depth.iter().flatten().copied().max().unwrap_or(0)
    }

    pub fn is_everything(&self) -> bool {
        self.depth.iter().all(Option::is_some)
    }
}

/// Least set containing the summands of `v` and closed under `s ↦ s ⊗ w`
/// for every summand `w`; breadth-first, so depths are minimal tensor powers.
pub fn support_closure(fusion: &FusionSupport, v: &ModuleSum) -> Closure {
    let n = fusion.size();
    let gens = v.distinct();
    let mut depth: Vec<Option<usize>> = vec![None; n];
    let mut frontier = gens.clone();
    for &g in &gens {
        depth[g] = Some(1);
    }
    let mut level = 1;
    while !frontier.is_empty() {
        level += 1;
        let mut next = Vec::new();
        for &s in &frontier {
            for &w in &gens {
                for (k, &word) in fusion.row(s, w).iter().enumerate() {
                    let mut word = word;
                    while word != 0 {
                        let c = k * 64 + word.trailing_zeros() as usize;
                        word &= word - 1;
                        if depth[c].is_none() {
                            depth[c] = Some(level);
                            next.push(c);
                        }
                    }
                }
            }
        }
        frontier = next;
    }
    let members = (0..n).filter(|&c| depth[c].is_some()).collect();
    Closure { members, depth }
}

pub fn is_inner_faithful(fusion: &FusionSupport, v: &ModuleSum) -> bool {
    support_closure(fusion, v).is_everything()
}

/// Whether a census counts multisets (repeated summands allowed) or sets.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Convention {
    Multiset,
    Set,
}

impl fmt::Display for Convention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Convention::Multiset => "multiset",
            Convention::Set => "set",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Census {
    pub convention: Convention,
    pub k_min: usize,
    pub sums: Vec<ModuleSum>,
}

impl Census {
    pub fn count(&self) -> usize {
        self.sums.len()
    }
}

/// Size-`k` candidates in lexicographic order.
fn candidates(n: usize, k: usize, convention: Convention) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(n: usize, k: usize, start: usize, set: bool, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(n, k, if set { i + 1 } else { i }, set, cur, out);
            cur.pop();
        }
    }
    rec(n, k, 0, convention == Convention::Set, &mut cur, &mut out);
    out
}

/// All inner-faithful sums of the least possible size under `convention`.
/// Candidates are filtered in parallel; order is the lexicographic order of
/// the candidate list regardless of scheduling.
pub fn minimal_inner_faithful(fusion: &FusionSupport, convention: Convention) -> Census {
    let n = fusion.size();
    for k in 1..=n {
        let sums: Vec<ModuleSum> = candidates(n, k, convention)
            .into_par_iter()
            .filter_map(|c| {
                let m = ModuleSum(c);
                is_inner_faithful(fusion, &m).then_some(m)
            })
            .collect();
        if !sums.is_empty() {
            return Census { convention, k_min: k, sums };
        }
    }
    // the sum of all simples is always inner faithful
    unreachable!("the sum of every simple is inner faithful")
}

/// Census at a fixed size, for comparing conventions at the same `k`.
pub fn inner_faithful_of_size(fusion: &FusionSupport, k: usize, convention: Convention) -> Vec<ModuleSum> {
    candidates(fusion.size(), k, convention)
        .into_par_iter()
        .filter_map(|c| {
            let m = ModuleSum(c);
            is_inner_faithful(fusion, &m).then_some(m)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn support(g: FiniteGroup) -> FusionSupport {
        FusionSupport::for_group(&Arc::new(g)).unwrap()
    }

    #[test]
    fn symmetric_characterization() {
        let f = support(FiniteGroup::symmetric3());
        for mask in 1u32..256 {
            let sum = ModuleSum::new((0..8).filter(|i| mask >> i & 1 == 1).collect()).unwrap();
            let expected = mask & (1 << 6 | 1 << 7) != 0;
            assert_eq!(is_inner_faithful(&f, &sum), expected, "{sum}");
        }
        let census = minimal_inner_faithful(&f, Convention::Multiset);
        assert_eq!(census.k_min, 1);
        assert_eq!(census.sums, vec![ModuleSum(vec![6]), ModuleSum(vec![7])]);
    }

    #[test]
    fn unit_closure_is_trivial() {
        let f = support(FiniteGroup::dicyclic(2).unwrap());
        let c = support_closure(&f, &ModuleSum::new(vec![0]).unwrap());
        assert_eq!(c.members, vec![0]);
        let v = ModuleSum::new(vec![17, 20, 21]).unwrap();
        let c = support_closure(&f, &v);
        assert!(c.is_everything());
        assert!(c.max_depth() <= 4);
        assert!(ModuleSum::new(vec![]).is_err());
    }

    #[test]
    fn candidate_counts() {
        assert_eq!(candidates(5, 2, Convention::Multiset).len(), 15);
        assert_eq!(candidates(5, 2, Convention::Set).len(), 10);
    }
}
