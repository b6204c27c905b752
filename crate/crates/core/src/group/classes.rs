use super::{Elem, Family, FiniteGroup};

/// A subgroup given by its sorted element list and, when cyclic, a
/// designated generator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subgroup {
    pub elements: Vec<Elem>,
    pub generator: Option<Elem>,
}

impl Subgroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, g: Elem) -> bool {
        self.elements.binary_search(&g).is_ok()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjClass {
    pub rep: Elem,
    pub members: Vec<Elem>,
    pub centralizer: Subgroup,
    /// One element per right coset `C·g`.
    pub transversal: Vec<Elem>,
}

impl ConjClass {
    /// Splits `g = c·t` with `c` in the centralizer and `t` in the
    /// transversal; returns `(c, index of t)`.
    pub fn coset_split(&self, group: &FiniteGroup, g: Elem) -> (Elem, usize) {
        for (j, &t) in self.transversal.iter().enumerate() {
            let c = group.mul(g, group.inv(t));
            if self.centralizer.contains(c) {
                return (c, j);
            }
        }
        unreachable!("transversal covers every right coset")
    }

    pub fn size(&self) -> usize {
        self.members.len()
    }
}

fn class_of(group: &FiniteGroup, a: Elem) -> Vec<Elem> {
    let mut m: Vec<Elem> = group.elements().map(|g| group.conj(a, g)).collect();
    m.sort_unstable();
    m.dedup();
    m
}

/// Cyclic subgroup generated by `g` if it equals the centralizer of `a`.
fn cyclic_centralizer(group: &FiniteGroup, a: Elem, g: Elem) -> Subgroup {
    let elements = group.centralizer(a);
    let gen = group.generated_subgroup(&[g]);
    debug_assert_eq!(elements, gen);
    Subgroup { elements, generator: Some(g) }
}

fn full(group: &FiniteGroup) -> Subgroup {
    let generator = match group.family() {
        Family::Cyclic(_) => group.generator("g"),
        _ => None,
    };
    Subgroup { elements: group.elements().collect(), generator }
}

fn smallest_transversal(group: &FiniteGroup, c: &Subgroup) -> Vec<Elem> {
    let mut covered = vec![false; group.order()];
    let mut out = Vec::new();
    for g in group.elements() {
        if covered[g] {
            continue;
        }
        out.push(g);
        for &x in &c.elements {
            covered[group.mul(x, g)] = true;
        }
    }
    out
}

/// Conjugacy classes in a fixed order.
///
/// Dicyclic groups list `e, r^n, r, …, r^{n-1}, s, sr`; `S_3` lists `e, r, s`;
/// other groups use the first element of each class in table order.
pub fn conjugacy_classes(group: &FiniteGroup) -> Vec<ConjClass> {
    let word = |w: &str| group.parse_word(w).expect("built-in word");
    let make = |rep: Elem, centralizer: Subgroup, transversal: Vec<Elem>| ConjClass {
        rep,
        members: class_of(group, rep),
        centralizer,
        transversal,
    };
    match group.family() {
        Family::Dicyclic(n) => {
            let n = *n;
            let e = group.identity();
            let r = word("r");
            let s = word("s");
            let sr = word("s*r");
            let rpow = |k: u32| group.pow(r, k as i64);
            let powers_of_r: Vec<Elem> = (0..n).map(rpow).collect();
            let mut out = vec![make(e, full(group), vec![e]), make(rpow(n), full(group), vec![e])];
            for k in 1..n {
                out.push(make(rpow(k), cyclic_centralizer(group, rpow(k), r), vec![e, s]));
            }
            out.push(make(s, cyclic_centralizer(group, s, s), powers_of_r.clone()));
            let sr_transversal = if n == 2 { vec![e, s] } else { powers_of_r };
            out.push(make(sr, cyclic_centralizer(group, sr, sr), sr_transversal));
            out
        }
        Family::Symmetric3 => {
            let e = group.identity();
            let (r, s) = (word("r"), word("s"));
            vec![
                make(e, full(group), vec![e]),
                make(r, cyclic_centralizer(group, r, r), vec![e, s]),
                make(s, cyclic_centralizer(group, s, s), vec![e, word("r^2"), r]),
            ]
        }
        Family::Cyclic(_) => group.elements().map(|a| make(a, full(group), vec![group.identity()])).collect(),
        Family::Generic => {
            let mut seen = vec![false; group.order()];
            let mut out = Vec::new();
            for a in group.elements() {
                if seen[a] {
                    continue;
                }
                let members = class_of(group, a);
                for &m in &members {
                    seen[m] = true;
                }
                let elements = group.centralizer(a);
                let generator = elements
                    .iter()
                    .copied()
                    .find(|&g| group.element_order(g) == elements.len());
                let c = Subgroup { elements, generator };
                let transversal = smallest_transversal(group, &c);
                out.push(ConjClass { rep: a, members, centralizer: c, transversal });
            }
            out
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names(g: &FiniteGroup, xs: &[Elem]) -> Vec<String> {
        xs.iter().map(|&x| g.name(x).to_string()).collect()
    }

    #[test]
    fn quaternion_classes() {
        let g = FiniteGroup::dicyclic(2).unwrap();
        let cl = conjugacy_classes(&g);
        let got: Vec<Vec<String>> = cl.iter().map(|c| names(&g, &c.members)).collect();
        assert_eq!(
            got,
            vec![
                vec!["e"],
                vec!["r^2"],
                vec!["r", "r^3"],
                vec!["s", "s*r^2"],
                vec!["s*r", "s*r^3"],
            ]
        );
    }

    #[test]
    fn class_counts() {
        for n in 2..7 {
            let g = FiniteGroup::dicyclic(n).unwrap();
            assert_eq!(conjugacy_classes(&g).len(), n as usize + 3);
        }
        assert_eq!(conjugacy_classes(&FiniteGroup::cyclic(4).unwrap()).len(), 4);
        let s3 = FiniteGroup::symmetric3();
        let cl = conjugacy_classes(&s3);
        assert_eq!(names(&s3, &cl[1].members), vec!["r", "r^2"]);
        assert_eq!(names(&s3, &cl[2].members), vec!["s", "s*r", "s*r^2"]);
        assert_eq!(names(&s3, &cl[1].centralizer.elements), vec!["e", "r", "r^2"]);
    }

    #[test]
    fn generic_backend_matches_orbit_structure() {
        let d = FiniteGroup::dicyclic(3).unwrap();
        let n = d.order();
        let table = (0..n * n).map(|t| d.mul(t / n, t % n)).collect();
        let names = d.elements().map(|x| d.name(x).to_string()).collect();
        let g = FiniteGroup::from_table(names, table, d.generators().to_vec()).unwrap();
        let cl = conjugacy_classes(&g);
        assert_eq!(cl.len(), 6);
        for c in &cl {
            assert_eq!(c.size() * c.centralizer.order(), n);
            assert_eq!(c.transversal.len(), c.size());
        }
    }
}
