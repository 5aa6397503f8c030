use rayon::prelude::*;
use serde_json::{json, Value};

use poisson_pic::calculus::{jacobi_check, jacobiator};
use poisson_pic::cohomology::{
    cohomology_dims, les_report, Cochain, ComplexKind, GradedPoisson, LesReport, SliceOptions,
};
use poisson_pic::gauge::{gauge_compose, gauge_determinant, gauge_transform, GaugeElement};
use poisson_pic::liealg::linear_graded;
use poisson_pic::Error;

use crate::error::{exit, CliError};
use crate::problem::Problem;

pub type Range = (i64, i64);

/// Result of one subcommand before rendering.
pub struct Outcome {
    pub results: Value,
    pub code: i32,
    /// Option values filled in from defaults, echoed into the report.
    pub resolved: Vec<(&'static str, Value)>,
}

fn ok(results: Value) -> Outcome {
    Outcome {
        results,
        code: exit::OK,
        resolved: Vec::new(),
    }
}

pub fn jacobi(problem: &Problem) -> Outcome {
    let pi = problem.poisson.bivector();
    let verdict = jacobi_check(pi);
    let mut results = json!({ "jacobi": verdict });
    if !verdict {
        results["obstruction"] = problem.tensor(&jacobiator(pi));
    }
    if let Some(c) = problem.constants() {
        results["constants_jacobi"] = json!(c.jacobi_holds());
    }
    let agree = problem.constants().is_none_or(|c| c.jacobi_holds() == verdict);
    Outcome {
        resolved: Vec::new(),
        results,
        code: if !agree {
            exit::INTERNAL
        } else if verdict {
            exit::OK
        } else {
            exit::CHECK_FAILED
        },
    }
}

/// Lie–Poisson problems are graded with `p = 1` even when the bracket
/// vanishes; anything else infers `p` from the coefficients.
pub fn graded(problem: &Problem) -> Result<GradedPoisson, CliError> {
    Ok(match problem.constants() {
        Some(c) => linear_graded(&c)?,
        None => GradedPoisson::new(problem.poisson.clone()),
    })
}

pub struct CohomologyArgs {
    pub complex: ComplexKind,
    pub k_range: Range,
    pub w_range: Option<Range>,
    pub max_degree: u32,
    pub witnesses: bool,
    pub max_slice_dim: usize,
}

fn form_grade(complex: ComplexKind, k: i64) -> Option<usize> {
    let g = match complex {
        ComplexKind::DeRham | ComplexKind::Basic => k,
        ComplexKind::Cone => k + 1,
        ComplexKind::Lichnerowicz => return None,
    };
    usize::try_from(g).ok()
}

fn vector_grade(complex: ComplexKind, k: i64) -> Option<usize> {
    match complex {
        ComplexKind::Lichnerowicz | ComplexKind::Cone => usize::try_from(k).ok(),
        _ => None,
    }
}

/// Coefficient degrees of the form and vector parts at `(k, w)`.
fn degrees(complex: ComplexKind, k: i64, w: i64, gp: &GradedPoisson) -> (Option<u32>, Option<u32>) {
    let fd = form_grade(complex, k).and_then(|g| u32::try_from(w - g as i64).ok());
    let vd = vector_grade(complex, k)
        .zip(gp.grading().ok())
        .and_then(|(g, gr)| gr.vector_degree(g, w));
    (fd, vd)
}

/// Weights whose leading part at the lowest `k` has coefficient degree
/// `0..=max_degree`.
pub fn default_weights(complex: ComplexKind, k: i64, max_degree: u32, gp: &GradedPoisson) -> Result<Range, CliError> {
    let d = i64::from(max_degree);
    if let Some(g) = vector_grade(complex, k) {
        let gr = gp.grading()?;
        let lo = gr.vector_weight(g, 0);
        return Ok((lo, lo + d));
    }
    let g = form_grade(complex, k).unwrap_or(0) as i64;
    Ok((g, g + d))
}

fn cochain_json(problem: &Problem, c: &Cochain) -> Value {
    json!({
        "form": c.form.as_ref().map(|f| problem.tensor(f)),
        "vector": c.vector.as_ref().map(|v| problem.tensor(v)),
    })
}

pub fn cohomology(problem: &Problem, args: &CohomologyArgs) -> Result<Outcome, CliError> {
    let gp = graded(problem)?;
    let (k0, k1) = args.k_range;
    let (w0, w1) = match args.w_range {
        Some(r) => r,
        None => default_weights(args.complex, k0, args.max_degree, &gp)?,
    };
    let opts = SliceOptions {
        witnesses: args.witnesses,
        max_slice_dim: args.max_slice_dim,
    };
    let report = cohomology_dims(args.complex, k0..=k1, w0..=w1, &gp, opts)?;
    let rows: Vec<Value> = report
        .entries
        .iter()
        .map(|e| {
            let (fd, vd) = degrees(e.complex, e.k, e.w, &gp);
            let mut row = json!({
                "complex": e.complex.name(),
                "k": e.k,
                "w": e.w,
                "dim": e.dim_h,
                "cochains": e.dim_cochains,
                "cocycles": e.dim_kernel,
                "coboundaries": e.dim_image,
                "form_degree": fd,
                "vector_degree": vd,
            });
            if let Some(reps) = &e.representatives {
                row["representatives"] = Value::Array(reps.iter().map(|c| cochain_json(problem, c)).collect());
            }
            row
        })
        .collect();
    Ok(Outcome {
        resolved: vec![("k_range", json!([k0, k1])), ("w_range", json!([w0, w1]))],
        ..ok(Value::Array(rows))
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GaugeMode {
    Transform,
    CheckMember,
    Compose,
}

impl GaugeMode {
    pub fn name(self) -> &'static str {
        match self {
            GaugeMode::Transform => "transform",
            GaugeMode::CheckMember => "check_member",
            GaugeMode::Compose => "compose",
        }
    }
}

fn require_poisson(problem: &Problem) -> Result<(), CliError> {
    if problem.poisson.check() {
        Ok(())
    } else {
        Err(Error::NotPoisson.into())
    }
}

fn elements(problem: &Problem) -> Result<Vec<GaugeElement>, CliError> {
    if problem.elements.is_empty() {
        return Err(CliError::Invalid("the problem file lists no elements".into()));
    }
    problem
        .elements
        .iter()
        .enumerate()
        .map(|(i, e)| {
            GaugeElement::new(e.phi.clone(), e.b.clone()).map_err(|source| CliError::Field {
                field: format!("elements[{i}].b"),
                source,
            })
        })
        .collect()
}

pub fn gauge(problem: &Problem, mode: GaugeMode) -> Result<Outcome, CliError> {
    require_poisson(problem)?;
    let pi = &problem.poisson;
    match mode {
        GaugeMode::Transform => {
            let b = problem
                .gauge
                .as_ref()
                .ok_or_else(|| CliError::Invalid("the problem file has no gauge.b".into()))?;
            let det = gauge_determinant(pi.bivector(), b)?;
            let out = gauge_transform(pi, b).map_err(|e| match e {
                // name the determinant in the file's variables
                Error::NotInvertible { .. } => Error::NotInvertible { det: problem.poly(&det) },
                other => other,
            })?;
            Ok(ok(json!({
                "determinant": problem.poly(&det),
                "transformed": problem.tensor(out.bivector()),
                "jacobi": out.check(),
            })))
        }
        GaugeMode::CheckMember => {
            let els = elements(problem)?;
            let verdicts: Vec<bool> = els.iter().map(|g| g.is_member(pi)).collect();
            let rows: Vec<Value> = verdicts
                .iter()
                .enumerate()
                .map(|(i, m)| json!({ "element": i + 1, "member": m }))
                .collect();
            Ok(Outcome {
                resolved: Vec::new(),
                results: Value::Array(rows),
                code: if verdicts.iter().all(|m| *m) { exit::OK } else { exit::NOT_MEMBER },
            })
        }
        GaugeMode::Compose => {
            let els = elements(problem)?;
            let mut acc = els[0].clone();
            if !acc.is_member(pi) {
                return Err(Error::NotMember("element 1".into()).into());
            }
            for (i, g) in els.iter().enumerate().skip(1) {
                acc = gauge_compose(&acc, g, pi).map_err(|e| match e {
                    Error::NotMember(_) => Error::NotMember(format!("element {}", i + 1)),
                    other => other,
                })?;
            }
            if !acc.is_member(pi) {
                return Err(Error::Internal("product left the gauge group".into()).into());
            }
            let mut results = problem.element(acc.phi(), acc.b());
            results["identity"] = json!(acc.is_identity());
            Ok(ok(results))
        }
    }
}

fn les_row(r: &LesReport) -> Value {
    json!({
        "w": r.w,
        "h1_derham": r.h1_derham,
        "h1_pi": r.h1_pi,
        "pic": r.pic,
        "h2_derham": r.h2_derham,
        "h2_pi": r.h2_pi,
        "rank_sharp1": r.rank_sharp1,
        "rank_include": r.rank_include,
        "rank_project": r.rank_project,
        "rank_sharp2": r.rank_sharp2,
        "exact_at_h1_pi": r.exact_at_h1_pi,
        "exact_at_pic": r.exact_at_pic,
        "exact_at_h2_derham": r.exact_at_h2_derham,
        "dimension_identity": r.dimension_identity,
        "quotient_formula": r.quotient_formula,
        "consistent": r.consistent(),
    })
}

/// A false verdict here means the engine contradicts a theorem, so it maps
/// to the internal-failure exit code.
pub fn les(problem: &Problem, w_range: Range) -> Result<Outcome, CliError> {
    let gp = graded(problem)?;
    let ws: Vec<i64> = (w_range.0..=w_range.1).collect();
    let reports = ws
        .par_iter()
        .map(|&w| les_report(&gp, w))
        .collect::<Result<Vec<_>, _>>()?;
    let all = reports.iter().all(LesReport::consistent);
    Ok(Outcome {
        resolved: Vec::new(),
        results: Value::Array(reports.iter().map(les_row).collect()),
        code: if all { exit::OK } else { exit::INTERNAL },
    })
}
