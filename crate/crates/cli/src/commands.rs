use std::sync::Arc;

use serde_json::{json, Value};

use doublealg::double::simples as double_simples;
use doublealg::faithful::{minimal_inner_faithful, support_closure, Convention, FusionSupport, ModuleSum};
use doublealg::fusion::{decompose, s_matrix, tensor};
use doublealg::group::{parse_group, FiniteGroup};
use doublealg::invariants::{generator_polys, in_x, verify_generator_theorem, ExponentVector, InvariantEngine};
use doublealg::koszul::{self, CALIBRATED};
use doublealg::linalg::Matrix;
use doublealg::ncalg::{build_paper_algebra, PaperFamily};
use doublealg::pipeline::{check_algebra, default_degree};

use crate::config::JobConfig;
use crate::output::Output;
use crate::{CliError, ConventionArg};

fn group(spec: &str) -> Result<Arc<FiniteGroup>, CliError> {
    Ok(Arc::new(parse_group(spec)?))
}

fn join<T: ToString>(xs: &[T], sep: &str) -> String {
    xs.iter().map(T::to_string).collect::<Vec<_>>().join(sep)
}

fn matrix_rows(m: &Matrix) -> Vec<Vec<String>> {
    (0..m.rows()).map(|i| m.row(i).iter().map(ToString::to_string).collect()).collect()
}

fn family_name(f: &PaperFamily) -> String {
    match f {
        PaperFamily::D4(_) => "d4".into(),
        PaperFamily::D8(_) => "d8".into(),
        PaperFamily::S3(c) => format!("s3:{c:?}").to_ascii_lowercase(),
    }
}

pub fn simples(spec: &str) -> Result<Output, CliError> {
    let g = group(spec)?;
    let sims = double_simples(&g)?;
    let mut out = Output::new("simples");
    let rows: Vec<Vec<String>> = sims
        .iter()
        .map(|s| {
            let m = s.summary();
            vec![m.label, m.class_rep, m.irrep, m.dim.to_string(), m.grades.join(",")]
        })
        .collect();
    out.line(format!("D({g}): {} simple modules", sims.len()));
    out.table(&["module", "class", "irrep", "dim", "grades"], &rows);
    let list: Vec<Value> = rows
        .iter()
        .map(|r| json!({"label": r[0], "class": r[1], "irrep": r[2], "dim": r[3].parse::<usize>().unwrap_or(0), "grades": r[4].split(',').collect::<Vec<_>>()}))
        .collect();
    out.field("group", g.family().to_string()).field("count", sims.len()).field("simples", list);
    Ok(out)
}

pub fn fuse(spec: &str, i: usize, j: usize) -> Result<Output, CliError> {
    let g = group(spec)?;
    let sims = double_simples(&g)?;
    for k in [i, j] {
        if k >= sims.len() {
            return Err(CliError::Usage(format!("no simple V{k}; D({g}) has {} simples", sims.len())));
        }
    }
    let d = decompose(&tensor(&sims[i], &sims[j])?.data, &sims);
    let mut out = Output::new("fuse");
    out.line(d.summary());
    let parts: Vec<Value> = d.multiplicities().iter().map(|(s, m)| json!({"simple": s, "multiplicity": m})).collect();
    out.field("group", g.family().to_string())
        .field("left", i)
        .field("right", j)
        .field("summary", d.summary())
        .field("summands", parts);
    Ok(out)
}

pub fn smatrix(spec: &str) -> Result<Output, CliError> {
    let g = group(spec)?;
    let s = s_matrix(&g)?;
    let n = s.size();
    let rows: Vec<Vec<String>> = (0..n).map(|a| (0..n).map(|b| s.get(a, b).to_string()).collect()).collect();
    let mut out = Output::new("smatrix");
    let header: Vec<String> = std::iter::once(String::new()).chain((0..n).map(|b| format!("V{b}"))).collect();
    let labelled: Vec<Vec<String>> =
        rows.iter().enumerate().map(|(a, r)| std::iter::once(format!("V{a}")).chain(r.iter().cloned()).collect()).collect();
    out.table(&header.iter().map(String::as_str).collect::<Vec<_>>(), &labelled);
    out.field("group", g.family().to_string()).field("size", n).field("s", rows);
    Ok(out)
}

fn parse_sum(text: &str) -> Result<ModuleSum, CliError> {
    let idx = text
        .split(',')
        .map(|t| t.trim().trim_start_matches(['V', 'v']).parse::<usize>().map_err(|_| CliError::Usage(format!("bad simple index `{t}`"))))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(ModuleSum::new(idx)?)
}

pub fn faithful_search(spec: &str, convention: ConventionArg, sum: Option<&str>) -> Result<Output, CliError> {
    let g = group(spec)?;
    let fusion = FusionSupport::for_group(&g)?;
    let mut out = Output::new("faithful-search");
    out.field("group", g.family().to_string());
    if let Some(text) = sum {
        let v = parse_sum(text)?;
        if let Some(&bad) = v.summands().iter().find(|&&k| k >= fusion.size()) {
            return Err(CliError::Usage(format!("no simple V{bad}")));
        }
        let cl = support_closure(&fusion, &v);
        let depth: Vec<Value> = cl.depth.iter().map(|d| d.map_or(Value::Null, Value::from)).collect();
        out.ok = cl.is_everything();
        out.line(format!("{v}: {}", if out.ok { "inner faithful" } else { "not inner faithful" }));
        out.line(format!("closure: {} of {} simples, depth {}", cl.members.len(), fusion.size(), cl.max_depth()));
        let rows: Vec<Vec<String>> = cl
            .depth
            .iter()
            .enumerate()
            .map(|(k, d)| vec![format!("V{k}"), d.map_or("-".into(), |d| d.to_string())])
            .collect();
        out.table(&["module", "depth"], &rows);
        let ok = out.ok;
        out.field("sum", v.to_string()).field("inner_faithful", ok).field("max_depth", cl.max_depth()).field("depth", depth);
        return Ok(out);
    }
    let conventions: &[Convention] = match convention {
        ConventionArg::Multiset => &[Convention::Multiset],
        ConventionArg::Set => &[Convention::Set],
        ConventionArg::Both => &[Convention::Multiset, Convention::Set],
    };
    let mut censuses = Vec::new();
    for &c in conventions {
        let census = minimal_inner_faithful(&fusion, c);
        out.line(format!("{c}: minimal size {}, {} sums", census.k_min, census.count()));
        censuses.push(json!({
            "convention": c.to_string(),
            "k_min": census.k_min,
            "count": census.count(),
            "sums": census.sums.iter().map(ToString::to_string).collect::<Vec<_>>(),
        }));
        for s in &census.sums {
            out.line(format!("  {s}"));
        }
    }
    out.field("censuses", censuses);
    Ok(out)
}

pub fn algebra_build(cfg: &JobConfig) -> Result<Output, CliError> {
    let family = cfg.family()?;
    let degree = cfg.degree()?.unwrap_or_else(|| default_degree(&family));
    let pres = build_paper_algebra(&family)?;
    let gb = pres.groebner(degree + 1)?;
    let hilbert = gb.hilbert_coeffs(degree)?;
    let relations: Vec<String> = pres.relations.iter().map(|r| pres.display(r)).collect();
    let mut out = Output::new("algebra build");
    out.line(format!("family: {}", family_name(&family)));
    out.line(format!("generators: {}", pres.names.join(" < ")));
    out.line(format!("relations ({}):", relations.len()));
    for r in &relations {
        out.line(format!("  {r}"));
    }
    out.line(format!("Gröbner basis: {} elements, {}", gb.elements().len(), if gb.is_complete() { "complete" } else { "truncated" }));
    out.line(format!("Hilbert coefficients through degree {degree}: {}", join(&hilbert, ", ")));
    out.field("family", family_name(&family))
        .field("generators", pres.names.clone())
        .field("relations", relations)
        .field("groebner_size", gb.elements().len())
        .field("groebner_complete", gb.is_complete())
        .field("degree", degree)
        .field("hilbert", hilbert.iter().map(|h| Value::from(*h as u64)).collect::<Vec<_>>());
    Ok(out)
}

pub fn algebra_check(cfg: &JobConfig, seed: Option<u64>) -> Result<Output, CliError> {
    let family = cfg.family()?;
    let degree = cfg.degree()?.unwrap_or_else(|| default_degree(&family));
    let report = check_algebra(&family, degree, seed)?;
    let mut out = Output::new("algebra check");
    out.ok = report.passes();
    let rows: Vec<Vec<String>> = report
        .items
        .iter()
        .map(|i| vec![i.name.to_string(), if i.passed { "pass".into() } else { "FAIL".into() }, i.detail.clone()])
        .collect();
    out.line(format!("family: {}, degree {degree}", family_name(&family)));
    out.table(&["check", "result", "detail"], &rows);
    out.line(if out.ok { "all checks pass" } else { "some checks failed" });
    let items: Vec<Value> =
        report.items.iter().map(|i| json!({"check": i.name, "passed": i.passed, "detail": i.detail})).collect();
    out.field("family", family_name(&family)).field("degree", degree).field("checks", items);
    Ok(out)
}

pub fn superpotential(cfg: &JobConfig) -> Result<Output, CliError> {
    let family = cfg.family()?;
    let pres = build_paper_algebra(&family)?;
    let (sp, top) = koszul::superpotential(&pres)?;
    let mut out = Output::new("superpotential");
    out.line(format!("family: {}", family_name(&family)));
    out.line(format!("dual top dimensions: {}", join(&top.dimensions(), ", ")));
    out.line(format!("θ = {}", sp.theta));
    out.line(format!("w = {}", pres.display(&sp.w)));
    out.line(format!("identity grade: {}", sp.identity_grade.map_or("n/a".into(), |b| b.to_string())));
    let terms: Vec<Value> = sp
        .w
        .terms()
        .map(|(m, c)| json!({"word": m.display(&pres.names), "coefficient": c.to_string()}))
        .collect();
    out.field("family", family_name(&family))
        .field("dual_top_dimensions", top.dimensions())
        .field("theta", sp.theta.clone())
        .field("terms", terms)
        .field("identity_grade", sp.identity_grade);
    Ok(out)
}

pub fn hdet(cfg: &JobConfig) -> Result<Output, CliError> {
    let family = cfg.family()?;
    let pres = build_paper_algebra(&family)?;
    let (sp, _) = koszul::superpotential(&pres)?;
    let h = koszul::hdet(&pres, &sp)?;
    let mut out = Output::new("hdet");
    out.line(format!("family: {}", family_name(&family)));
    let rows: Vec<Vec<String>> = h.values.iter().map(|(n, v)| vec![n.clone(), v.to_string()]).collect();
    out.table(&["generator", "hdet"], &rows);
    out.line(format!("trivial: {}", h.is_trivial()));
    let values: serde_json::Map<String, Value> = h.values.iter().map(|(n, v)| (n.clone(), Value::from(v.to_string()))).collect();
    out.field("family", family_name(&family))
        .field("values", values)
        .field("grade_trivial", h.grade_trivial)
        .field("trivial", h.is_trivial());
    Ok(out)
}

pub fn nakayama(cfg: &JobConfig) -> Result<Output, CliError> {
    let family = cfg.family()?;
    let pres = build_paper_algebra(&family)?;
    let mu = koszul::nakayama(&pres)?;
    let rows = matrix_rows(&mu);
    let mut out = Output::new("nakayama");
    out.line(format!("family: {}, μ = {CALIBRATED}", family_name(&family)));
    let labelled: Vec<Vec<String>> = rows
        .iter()
        .zip(&pres.names)
        .map(|(r, n)| std::iter::once(format!("μ({n})")).chain(r.iter().cloned()).collect())
        .collect();
    let header: Vec<&str> = std::iter::once("").chain(pres.names.iter().map(String::as_str)).collect();
    out.table(&header, &labelled);
    out.field("family", family_name(&family))
        .field("transport", CALIBRATED.to_string())
        .field("generators", pres.names.clone())
        .field("matrix", rows);
    Ok(out)
}

fn engine(cfg: &JobConfig) -> Result<InvariantEngine, CliError> {
    match cfg.family() {
        Ok(PaperFamily::D4(p)) => Ok(InvariantEngine::quaternion(p)?),
        Ok(other) => Err(CliError::Usage(format!("invariants are available for d4 only, not {}", family_name(&other)))),
        Err(_) => Ok(InvariantEngine::quaternion(cfg.params()?)?),
    }
}

pub fn invariant_basis(cfg: &JobConfig) -> Result<Output, CliError> {
    let e = engine(cfg)?;
    let d = cfg.degree()?.ok_or_else(|| CliError::Usage("invariants basis needs --degree".into()))?;
    let basis = e.invariant_space(d)?;
    let polys: Vec<String> = basis.iter().map(|p| e.display(p)).collect();
    let mut out = Output::new("invariants basis");
    out.line(format!("degree {d}: dimension {}", polys.len()));
    for p in &polys {
        out.line(format!("  {p}"));
    }
    out.field("degree", d).field("dimension", polys.len()).field("basis", polys);
    Ok(out)
}

pub fn invariant_generators(cfg: &JobConfig, verify: bool) -> Result<Output, CliError> {
    let e = engine(cfg)?;
    let gens = generator_polys(&e)?;
    let mut out = Output::new("invariants generators");
    let rows: Vec<Vec<String>> = gens[..17]
        .iter()
        .enumerate()
        .map(|(k, g)| vec![format!("g{}", k + 1), g.degree().unwrap_or(0).to_string(), e.display(g)])
        .collect();
    out.table(&["generator", "degree", "polynomial"], &rows);
    let list: Vec<Value> = rows.iter().map(|r| json!({"name": r[0], "degree": r[1].parse::<usize>().unwrap_or(0), "poly": r[2]})).collect();
    out.field("generators", list);
    if !verify {
        return Ok(out);
    }
    let d_max = cfg.degree()?.unwrap_or(14);
    let r = verify_generator_theorem(&e, d_max)?;
    let uncovered: usize = r.sagbi.degrees.iter().map(|d| d.uncovered.len()).sum();
    let added: Vec<String> = r.completion.added.iter().map(|(d, l, _)| format!("{l:?} (degree {d})")).collect();
    let dims_agree = r.dimensions.iter().all(|(_, a, b)| a == b);
    let checks = [
        ("invariant", r.invariant.iter().all(|&b| b), format!("{} generators", r.invariant.len())),
        ("minimal", r.minimal.iter().all(|&b| b), String::new()),
        ("identities", r.identities.iter().all(|(_, b)| *b), format!("{} identities", r.identities.len())),
        ("dimensions", dims_agree, format!("subalgebra = invariants through degree {d_max}")),
        ("completion", r.completion.passes(), format!("{} leads added", added.len())),
    ];
    out.ok = r.generation_certified();
    let mut rows: Vec<Vec<String>> =
        checks.iter().map(|(n, b, d)| vec![n.to_string(), if *b { "pass".into() } else { "FAIL".into() }, d.clone()]).collect();
    rows.push(vec![
        "strict_sagbi".into(),
        if r.sagbi.passes() { "pass".into() } else { "no".into() },
        format!("{uncovered} leads outside the 17-generator monoid"),
    ]);
    out.line(format!("verification through degree {d_max}:"));
    out.table(&["check", "result", "detail"], &rows);
    out.line(format!("top generator degree: {}", r.top_generator_degree));
    out.line(if out.ok { "generation certified" } else { "generation not certified" });
    let items: Vec<Value> = checks.iter().map(|(n, b, d)| json!({"check": n, "passed": b, "detail": d})).collect();
    out.field(
        "verification",
        json!({
            "degree": d_max,
            "checks": items,
            "strict_sagbi": r.sagbi.passes(),
            "strict_uncovered": uncovered,
            "completion_leads": added,
            "dimensions": r.dimensions.iter().map(|(d, a, b)| json!([d, a, b])).collect::<Vec<_>>(),
            "top_generator_degree": r.top_generator_degree,
            "certified": out.ok,
        }),
    );
    Ok(out)
}

pub fn orbit_sum(cfg: &JobConfig, exponent: &str) -> Result<Output, CliError> {
    let e = engine(cfg)?;
    let p = cfg.params()?;
    let a: ExponentVector = exponent.parse()?;
    let f = e.orbit_sum(&a, &p)?;
    let mut out = Output::new("invariants orbit-sum");
    let [lr, ls, lrs] = &f.lambdas;
    out.line(format!("a = {a}, in X: {}", in_x(&a)));
    out.line(format!("λ(a,r) = {lr}, λ(a,s) = {ls}, λ(a,rs) = {lrs}"));
    out.line(format!("f = {}", e.display(&f.f)));
    out.line(format!("invariant: {}", f.invariant));
    out.field("exponent", a.0.to_vec())
        .field("in_x", in_x(&a))
        .field("lambdas", f.lambdas.iter().map(ToString::to_string).collect::<Vec<_>>())
        .field("poly", e.display(&f.f))
        .field("invariant", f.invariant);
    Ok(out)
}

