use std::collections::BTreeMap;

use serde_json::{json, Value};

use noether_core::ext::{ext_modules, puma_containment, purity_check};
use noether_core::noetherian::{noetherian_membership, noetherian_operators, order_zero_membership};
use noether_core::residue::{hefer_matrix, jacobian_determinant, residue_functional};
use noether_core::resolution::{be_exactness, dualize, free_resolution, Complex, StepVerdict};
use noether_core::{
    rat, FreeResolution, GroebnerBasis, MonomialOrder, NoetherianSystem, PolyMatrix, Polynomial, Rational,
    RationalSection, Ring, VariableSplit,
};

use crate::error::CliError;
use crate::problem::{ProblemFile, SplitSpec};
use crate::xcheck;

pub const COMMANDS: &[&str] = &[
    "resolve",
    "dualize",
    "be-check",
    "ext",
    "purity",
    "cm-check",
    "noetherian",
    "membership",
    "residue",
    "bezoutian",
    "oracle-xcheck",
];

#[derive(Clone, Debug, Default)]
pub struct Options {
    pub phi: Option<String>,
    pub split: Option<String>,
    pub trials: Option<usize>,
    pub seed: Option<u64>,
}

/// Canonical text: terms in grevlex order whatever the working order.
pub fn show(p: &Polynomial) -> String {
    if *p.ring().order() == MonomialOrder::Grevlex {
        return p.to_string();
    }
    let g = Ring::new(p.ring().vars().to_vec(), MonomialOrder::Grevlex);
    p.with_ring(&g).to_string()
}

pub fn show_all(ps: &[Polynomial]) -> Value {
    Value::from(ps.iter().map(show).collect::<Vec<_>>())
}

pub fn show_matrix(m: &PolyMatrix) -> Value {
    Value::from(
        m.entries()
            .iter()
            .map(|r| r.iter().map(show).collect::<Vec<_>>())
            .collect::<Vec<_>>(),
    )
}

pub fn show_rational(q: &Rational) -> Value {
    Value::from(q.to_string())
}

fn show_rational_matrix(m: &[Vec<Rational>]) -> Value {
    Value::from(
        m.iter()
            .map(|r| r.iter().map(|q| q.to_string()).collect::<Vec<_>>())
            .collect::<Vec<_>>(),
    )
}

fn resolution(problem: &ProblemFile) -> Result<FreeResolution, CliError> {
    let pres = problem
        .presentation()
        .ok_or_else(|| CliError::MissingInput("command needs `ideal` or `column` lines".into()))?;
    Ok(free_resolution(&pres)?)
}

/// The given `map` lines when present, the resolution otherwise.
fn complex(problem: &ProblemFile) -> Result<(Complex, &'static str), CliError> {
    if problem.maps.is_empty() {
        Ok((resolution(problem)?.complex().clone(), "resolution"))
    } else {
        Ok((Complex::from_differentials(problem.maps.clone())?, "maps"))
    }
}

fn ideal(problem: &ProblemFile) -> Result<&[Polynomial], CliError> {
    problem
        .ideal
        .as_deref()
        .ok_or_else(|| CliError::MissingInput("command needs an `ideal` line".into()))
}

fn complex_json(c: &Complex) -> Value {
    json!({
        "ranks": c.ranks(),
        "differentials": c.differentials().iter().map(show_matrix).collect::<Vec<_>>(),
    })
}

fn cmd_resolve(problem: &ProblemFile) -> Result<Value, CliError> {
    let res = resolution(problem)?;
    Ok(json!({
        "betti": res.betti(),
        "length": res.length(),
        "minimal": res.is_minimal(),
        "differentials": res.differentials().iter().map(show_matrix).collect::<Vec<_>>(),
    }))
}

fn cmd_dualize(problem: &ProblemFile) -> Result<Value, CliError> {
    let (c, source) = complex(problem)?;
    c.check_complex()?;
    let mut out = complex_json(&dualize(&c));
    out["source"] = json!(source);
    Ok(out)
}

fn verdict_str(v: StepVerdict) -> &'static str {
    match v {
        StepVerdict::Exact => "exact",
        StepVerdict::FailsRank => "fails-rank",
        StepVerdict::FailsCodim => "fails-codim",
    }
}

fn cmd_be_check(problem: &ProblemFile) -> Result<Value, CliError> {
    let (c, source) = complex(problem)?;
    let steps = be_exactness(&c)?;
    let mut out = vec![];
    for s in &steps {
        out.push(json!({
            "k": s.k,
            "rank_fk": s.rank_fk,
            "rank_next": s.rank_next,
            "rank_ek": s.rank_ek,
            "codim": s.codim,
            "verdict": verdict_str(s.verdict),
        }));
    }
    let mut dual_exact = Value::Null;
    if source == "resolution" {
        let d = be_exactness(&dualize(&c))?;
        dual_exact = json!(d.iter().all(|s| s.verdict == StepVerdict::Exact));
    }
    Ok(json!({
        "source": source,
        "exact": steps.iter().all(|s| s.verdict == StepVerdict::Exact),
        "steps": out,
        "dual_exact": dual_exact,
    }))
}

fn cmd_ext(problem: &ProblemFile) -> Result<Value, CliError> {
    let res = resolution(problem)?;
    let mods = ext_modules(&res)?;
    let modules: Vec<Value> = mods
        .iter()
        .map(|e| {
            json!({
                "k": e.k,
                "zero": e.is_zero(),
                "support_codim": e.support_codim,
                "generators": show_matrix(&e.generators),
                "presentation": show_matrix(&e.presentation),
                "fitting_ideal": show_all(&e.fitting_ideal),
            })
        })
        .collect();
    let containment: Vec<Value> = puma_containment(&res)?
        .into_iter()
        .map(|(k, holds)| json!({"k": k, "holds": holds}))
        .collect();
    Ok(json!({"modules": modules, "containment": containment}))
}

fn cmd_purity(problem: &ProblemFile) -> Result<Value, CliError> {
    let res = resolution(problem)?;
    let rep = purity_check(&res)?;
    let per_k: Vec<Value> = rep
        .per_k
        .iter()
        .map(|e| json!({"k": e.k, "codim_Zk": e.codim_z, "codim_suppExt": e.codim_supp_ext}))
        .collect();
    Ok(json!({
        "p": rep.p,
        "verdict": rep.verdict.as_str(),
        "per_k": per_k,
        "routes_agree": rep.routes_agree,
        "route_a_pure": rep.pure_by_rank_loci,
        "route_b_pure": rep.pure_by_ext_support,
        "ext_vanishing_ok": rep.ext_vanishing_ok,
    }))
}

fn cmd_cm_check(problem: &ProblemFile) -> Result<Value, CliError> {
    let res = resolution(problem)?;
    let rep = purity_check(&res)?;
    let empty: Vec<usize> = rep
        .per_k
        .iter()
        .filter(|e| e.k > rep.p && e.codim_z <= rep.nvars)
        .map(|e| e.k)
        .collect();
    Ok(json!({
        "p": rep.p,
        "cohen_macaulay": empty.is_empty(),
        "nonempty_z_beyond_p": empty,
        "length": rep.length,
        "length_equals_p": rep.length == rep.p,
    }))
}

fn build_split(problem: &ProblemFile, opts: &Options) -> Result<VariableSplit, CliError> {
    let spec = match &opts.split {
        Some(s) => SplitSpec::parse(s)?,
        None => match &problem.split {
            Some(s) => s.clone(),
            // every variable dependent: the zero-dimensional case
            None => SplitSpec {
                free: Some(vec![]),
                dependent: problem.ring.vars().to_vec(),
            },
        },
    };
    let dep: Vec<&str> = spec.dependent.iter().map(String::as_str).collect();
    let split = match &spec.free {
        Some(free) => {
            let free: Vec<&str> = free.iter().map(String::as_str).collect();
            VariableSplit::from_names(&problem.ring, &free, &dep)?
        }
        None => VariableSplit::with_dependent(&problem.ring, &dep)?,
    };
    Ok(split)
}

fn build_section(problem: &ProblemFile, split: &VariableSplit) -> Result<Option<RationalSection>, CliError> {
    if problem.section.is_empty() {
        return Ok(None);
    }
    let mut values = Vec::new();
    for name in split.dependent_names(&problem.ring) {
        let g = problem
            .section
            .iter()
            .find(|(v, _)| *v == name)
            .map(|(_, g)| g.clone())
            .ok_or_else(|| noetherian_error(format!("section gives no value for {name}")))?;
        values.push(g);
    }
    Ok(Some(RationalSection { values }))
}

fn noetherian_error(msg: String) -> CliError {
    CliError::Analysis(noether_core::Error::NonGraphSection(msg))
}

pub fn noetherian_system(problem: &ProblemFile, opts: &Options) -> Result<NoetherianSystem, CliError> {
    let gens = ideal(problem)?;
    let split = build_split(problem, opts)?;
    let section = build_section(problem, &split)?;
    Ok(noetherian_operators(gens, &split, section.as_ref())?)
}

pub fn system_json(sys: &NoetherianSystem) -> Value {
    let operators: Vec<Value> = sys
        .operators
        .iter()
        .map(|op| {
            Value::from(
                op.terms()
                    .iter()
                    .map(|(beta, c)| json!({"coeff": show(c), "beta": beta}))
                    .collect::<Vec<_>>(),
            )
        })
        .collect();
    json!({
        "split": {
            "free": sys.split.free_names(&sys.ring),
            "dependent": sys.split.dependent_names(&sys.ring),
        },
        "variety_ideal": show_all(&sys.variety_ideal),
        "operators": operators,
        "operator_text": sys.operators.iter().map(|o| o.to_string()).collect::<Vec<_>>(),
        "nil_index": sys.nil_index,
        "dual_dims": sys.dims,
        "h": show(&sys.h),
        "h_power": sys.h_power,
    })
}

fn cmd_noetherian(problem: &ProblemFile, opts: &Options) -> Result<Value, CliError> {
    Ok(system_json(&noetherian_system(problem, opts)?))
}

fn cmd_membership(problem: &ProblemFile, opts: &Options) -> Result<Value, CliError> {
    let src = opts
        .phi
        .as_deref()
        .ok_or_else(|| CliError::MissingInput("membership needs --phi".into()))?;
    let phi = Polynomial::parse(&problem.ring, src).map_err(|e| CliError::parse(format!("--phi: {e}")))?;
    let gens = ideal(problem)?;
    let sys = noetherian_system(problem, opts)?;
    let gb = GroebnerBasis::ideal(&problem.ring, gens)?.contains_poly(&phi)?;
    let op = noetherian_membership(&phi, &sys)?;
    Ok(json!({
        "phi": show(&phi),
        "groebner": gb,
        "noetherian": op,
        "order_zero": order_zero_membership(&phi, &sys)?,
        "agree": gb == op,
    }))
}

fn cmd_residue(problem: &ProblemFile) -> Result<Value, CliError> {
    let gens = ideal(problem)?;
    let res = residue_functional(gens)?;
    let basis = res.algebra.basis_polynomials();
    let mut residues = BTreeMap::new();
    for (b, v) in basis.iter().zip(&res.values) {
        residues.insert(show(b), show_rational(v));
    }
    let gram = res.gram()?;
    let det = noether_core::algebra::linalg::determinant(&gram, &rat(0));
    let jac = jacobian_determinant(gens)?;
    Ok(json!({
        "dim": res.algebra.dim(),
        "basis": show_all(&basis),
        "residues": residues,
        "gram": show_rational_matrix(&gram),
        "gram_det": show_rational(&det),
        "bezoutian": res.bezoutian.to_string(),
        "sign": res.sign,
        "dual_basis": show_all(&res.dual_basis),
        "dual_basis_ok": res.dual_basis_holds()?,
        "jacobian": show(&jac),
        "jacobian_residue": show_rational(&res.residue(&jac)?),
        "trace_identity_ok": res.trace_identity_holds()?,
    }))
}

fn cmd_bezoutian(problem: &ProblemFile) -> Result<Value, CliError> {
    let gens = ideal(problem)?;
    let h = hefer_matrix(gens)?;
    let res = residue_functional(gens)?;
    let hefer: Vec<Vec<String>> = h
        .entries
        .iter()
        .map(|r| r.iter().map(|p| p.to_string()).collect())
        .collect();
    Ok(json!({
        "variables": h.doubled.ring.vars(),
        "hefer": hefer,
        "hefer_identity_ok": h.verify(gens),
        "determinant": h.determinant().to_string(),
        "sign": res.sign,
        "bezoutian": res.bezoutian.to_string(),
    }))
}

pub fn run(command: &str, problem: &ProblemFile, opts: &Options) -> Result<Value, CliError> {
    match command {
        "resolve" => cmd_resolve(problem),
        "dualize" => cmd_dualize(problem),
        "be-check" => cmd_be_check(problem),
        "ext" => cmd_ext(problem),
        "purity" => cmd_purity(problem),
        "cm-check" => cmd_cm_check(problem),
        "noetherian" => cmd_noetherian(problem, opts),
        "membership" => cmd_membership(problem, opts),
        "residue" => cmd_residue(problem),
        "bezoutian" => cmd_bezoutian(problem),
        "oracle-xcheck" => xcheck::run(problem, opts),
        other => Err(CliError::usage(format!("unknown command `{other}`"))),
    }
}
