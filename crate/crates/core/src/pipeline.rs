//! Aggregated checks on the featured algebras, as run by the command line.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::double::{d_coproduct, DoubleBasisElt};
use crate::double_ore::{octic_tower, quaternion_data, same_quadratic_ideal, DOEData};
use crate::error::Result;
use crate::exactnum::Cyclotomic;
use crate::koszul::superpotential;
use crate::ncalg::{build_paper_algebra, AlgebraPresentation, NcPoly, PaperFamily};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckItem {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckReport {
    pub items: Vec<CheckItem>,
}

impl CheckReport {
    pub fn passes(&self) -> bool {
        self.items.iter().all(|i| i.passed)
    }
}

/// Coefficients of `(1 − t)^{−n}` through degree `d`.
pub fn polynomial_ring_series(n: usize, d: usize) -> Vec<u128> {
    let mut out = vec![1u128];
    for k in 1..=d as u128 {
        let prev = out[out.len() - 1];
        out.push(prev * (k + n as u128 - 1) / k);
    }
    out
}

/// Default Hilbert comparison degree per family.
pub fn default_degree(family: &PaperFamily) -> usize {
    match family {
        PaperFamily::D4(_) => 8,
        PaperFamily::D8(_) => 5,
        PaperFamily::S3(_) => 4,
    }
}

fn item(name: &'static str, r: Result<(bool, String)>) -> CheckItem {
    match r {
        Ok((passed, detail)) => CheckItem { name, passed, detail },
        Err(e) => CheckItem { name, passed: false, detail: e.to_string() },
    }
}

fn ore_stages(family: &PaperFamily, pres: &AlgebraPresentation) -> Result<(bool, String)> {
    let (stages, built): (Vec<DOEData>, AlgebraPresentation) = match family {
        PaperFamily::D4(p) => {
            let d = quaternion_data(p)?;
            let built = d.build(["x1", "x2"], None)?;
            (vec![d], built)
        }
        PaperFamily::D8(p) => {
            let mut tower = octic_tower(p)?;
            let built = tower.last().map(|t| t.1.clone()).expect("tower has three stages");
            (tower.drain(..).map(|t| t.0).collect(), built)
        }
        PaperFamily::S3(_) => return Ok((true, "not applicable".into())),
    };
    for (k, d) in stages.iter().enumerate() {
        let stage = k + 1;
        if !d.sigma_is_algebra_map()? {
            return Ok((false, format!("stage {stage}: σ is not an algebra map")));
        }
        if !d.sigma_invertible()? {
            return Ok((false, format!("stage {stage}: σ is not invertible")));
        }
        if !d.do_conditions() {
            return Ok((false, format!("stage {stage}: extension conditions fail")));
        }
    }
    if !same_quadratic_ideal(&built, pres)? {
        return Ok((false, "extension ideal differs from the presentation".into()));
    }
    Ok((true, format!("{} stage(s)", stages.len())))
}

fn hilbert(pres: &AlgebraPresentation, degree: usize) -> Result<(bool, String)> {
    let got = pres.groebner(degree + 1)?.hilbert_coeffs(degree)?;
    let want = polynomial_ring_series(pres.num_generators(), degree);
    let show = |v: &[u128]| v.iter().map(u128::to_string).collect::<Vec<_>>().join(",");
    if got == want {
        Ok((true, format!("{} through degree {degree}", show(&got))))
    } else {
        Ok((false, format!("got {} expected {}", show(&got), show(&want))))
    }
}

fn grade_law(pres: &AlgebraPresentation) -> Result<(bool, String)> {
    let (sp, _) = superpotential(pres)?;
    Ok(match sp.identity_grade {
        Some(true) => (true, format!("{} monomials", sp.w.len())),
        Some(false) => (false, "a monomial of w has non-identity grade".into()),
        None => (false, "no action".into()),
    })
}

fn random_linear(pres: &AlgebraPresentation, rng: &mut ChaCha8Rng) -> NcPoly {
    let v: Vec<Cyclotomic> = (0..pres.num_generators()).map(|_| Cyclotomic::from_int(rng.gen_range(-2..=2))).collect();
    pres.linear(&v)
}

/// `h·(fg) = Σ (h₁·f)(h₂·g)` on random basis elements and quadratic `f`, `g`.
pub fn module_algebra_law(pres: &AlgebraPresentation, seed: u64, samples: usize) -> Result<(bool, String)> {
    let group = pres.group().cloned().ok_or_else(|| crate::Error::InvalidArgument("presentation has no action".into()))?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = group.order();
    for _ in 0..samples {
        let x = DoubleBasisElt::new(rng.gen_range(0..n), rng.gen_range(0..n));
        let f = &random_linear(pres, &mut rng) * &random_linear(pres, &mut rng);
        let g = random_linear(pres, &mut rng);
        let lhs = pres.act(x, &(&f * &g))?;
        let mut rhs = NcPoly::zero();
        for (x1, x2) in d_coproduct(&group, x) {
            rhs = &rhs + &(&pres.act(x1, &f)? * &pres.act(x2, &g)?);
        }
        if lhs != rhs {
            return Ok((false, format!("fails at {}", x.display(&group))));
        }
    }
    Ok((true, format!("{samples} samples, seed {seed}")))
}

/// Relation submodule, extension data, Hilbert counts against a polynomial
/// ring, the superpotential grade law, and optionally the sampled
/// module-algebra law.
pub fn check_algebra(family: &PaperFamily, degree: usize, seed: Option<u64>) -> Result<CheckReport> {
    let pres = build_paper_algebra(family)?;
    let mut items = vec![
        item("relation_submodule", pres.relation_submodule_check().map(|b| (b, String::new()))),
        item("ore_conditions", ore_stages(family, &pres)),
        item("hilbert", hilbert(&pres, degree)),
        item("identity_grade", grade_law(&pres)),
    ];
    if let Some(seed) = seed {
        items.push(item("module_algebra", module_algebra_law(&pres, seed, 32)));
    }
    Ok(CheckReport { items })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ncalg::{PaperParams, S3Candidate};

    #[test]
    fn series_counts_monomials() {
        assert_eq!(polynomial_ring_series(3, 4), vec![1, 3, 6, 10, 15]);
        assert_eq!(polynomial_ring_series(6, 8)[8], 1287);
    }

    #[test]
    fn default_quaternion_algebra_passes() {
        let p = PaperParams::from_ints([1, 1, -1, 1, 1, 1, 1]).unwrap();
        let r = check_algebra(&PaperFamily::D4(p), 6, Some(7)).unwrap();
        assert!(r.passes(), "{r:?}");
        assert_eq!(r.items.len(), 5);
    }

    #[test]
    fn symmetric_candidate_fails_hilbert() {
        let r = check_algebra(&PaperFamily::S3(S3Candidate::V0V3), 4, None).unwrap();
        assert!(!r.passes());
        assert!(!r.items.iter().find(|i| i.name == "hilbert").unwrap().passed);
    }
}
