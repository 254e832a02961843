use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::Path;

use coalgebra_core::coradical::field_order;
use coalgebra_core::json::CoalgebraJson;
use coalgebra_core::{Exec, Mat, Scalar};
use comodule::{
    are_isomorphic, dimension_vector, indecomposability, socle_filtration, Comodule, HefuvComodules, Indecomposability,
};
use fusion::{tensor_decompose, verify_based_ring};
use hopf_presentations::{verify_hopf_axioms, Family, PresentedHopf, TruncationSpec};
use quiver_reptype::{
    classify_ade, discreteness_check_finite_coradical, is_basic_cycle_union, is_schurian, separated_quiver,
    trichotomy_classify, AdeClass, Discreteness, DiscretenessReport, Quiver, Trichotomy,
};
use serde::Serialize;
use serde_json::json;

use crate::instance::{self, parse_source, quiver_of, Instance, Source, DEFAULT_WINDOW};
use crate::{Cli, CliError, Command, ComoduleAction, ComoduleArgs, Format, EXIT_FAIL, EXIT_OK};

type Output = Result<(i32, String), CliError>;

pub fn dispatch(cli: &Cli) -> Output {
    let exec = if cli.sequential { Exec::Sequential } else { Exec::default() };
    let window = cli.window.unwrap_or(DEFAULT_WINDOW);
    match &cli.command {
        Command::VerifyHopf { descriptor } => verify_hopf(cli, descriptor, window, exec),
        Command::LinkQuiver { descriptor, n } => link_quiver(cli, descriptor, *n, window, exec),
        Command::Classify { input, n, infinite_coradical } => classify(cli, input, *n, *infinite_coradical, window, exec),
        Command::Fusion { descriptor, n } => fusion_cmd(cli, descriptor, *n, exec),
        Command::Comodule(args) => comodule_cmd(cli, args, exec),
        Command::Export { descriptor, n } => export(cli, descriptor, *n, window, exec),
    }
}

fn no_dot(cli: &Cli, what: &str) -> Result<(), CliError> {
    if cli.format == Format::Dot {
        Err(CliError(format!("--format dot is only available for quivers, not {what}")))
    } else {
        Ok(())
    }
}

fn json_string<T: Serialize>(v: &T) -> Result<String, CliError> {
    Ok(serde_json::to_string_pretty(v)? + "\n")
}

fn hopf(descriptor: &str) -> Result<PresentedHopf, CliError> {
    match parse_source(descriptor)? {
        Source::Hopf(h) => Ok(h),
        Source::Qmn { .. } => Err(CliError("Qmn names a quiver, not a Hopf algebra".into())),
    }
}

fn verify_hopf(cli: &Cli, descriptor: &str, window: i64, exec: Exec) -> Output {
    no_dot(cli, "Hopf reports")?;
    let h = hopf(descriptor)?;
    let report = verify_hopf_axioms(&h, window, exec);
    let code = if report.passed() { EXIT_OK } else { EXIT_FAIL };
    if cli.format == Format::Json {
        let checks: Vec<_> = report
            .checks
            .iter()
            .map(|c| json!({"step": c.step, "name": c.name, "passed": c.passed, "residual": c.residual}))
            .collect();
        return Ok((code, json_string(&json!({"family": h.name(), "passed": report.passed(), "checks": checks}))?));
    }
    let mut out = format!("{}\n", h.name());
    for step in 1..=4u8 {
        let verdict = if report.step_passed(step) { "pass" } else { "FAIL" };
        writeln!(out, "Step {step}: {verdict} ({} identities)", report.step_count(step)).unwrap();
    }
    for c in report.failures() {
        writeln!(out, "  failed: {}\n    residual: {}", c.name, c.residual).unwrap();
    }
    writeln!(out, "{}", if report.passed() { "all Hopf axioms hold" } else { "Hopf axioms fail" }).unwrap();
    Ok((code, out))
}

fn render_quiver(cli: &Cli, q: &Quiver) -> Result<String, CliError> {
    Ok(match cli.format {
        Format::Json => json_string(q)?,
        Format::Dot => q.to_dot(),
        Format::Text => {
            let mut out = String::new();
            let vs: Vec<String> = q.vertices().iter().map(|v| format!("{} ({})", v.label, v.weight)).collect();
            writeln!(out, "vertices: {}", vs.join(", ")).unwrap();
            for (s, d, m) in q.arrows() {
                writeln!(out, "{} -> {} x{m}", q.label(s), q.label(d)).unwrap();
            }
            out
        }
    })
}

fn link_quiver(cli: &Cli, descriptor: &str, n: Option<i64>, window: i64, exec: Exec) -> Output {
    let src = parse_source(descriptor)?;
    let (q, _) = quiver_of(&src, n, window, exec)?;
    let mut out = render_quiver(cli, &q)?;
    let mut code = EXIT_OK;
    if let Source::Hopf(h) = &src {
        let agrees = instance::cross_validate(h, &q, n, exec)?;
        if agrees == Some(false) {
            code = EXIT_FAIL;
        }
        if cli.format == Format::Text {
            let line = match agrees {
                Some(true) => "fusion route: agrees",
                Some(false) => "fusion route: DISAGREES",
                None => "fusion route: not available for a group window",
            };
            writeln!(out, "{line}").unwrap();
        }
    }
    Ok((code, out))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClassifyMode {
    /// The unit component has finitely many simple subcoalgebras.
    FiniteCoradical,
    /// The quiver is a finite piece of a link quiver with infinitely many vertices.
    InfiniteCoradical,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassifyReport {
    pub vertices: usize,
    pub arrows: usize,
    /// ADE class of each component of the separated quiver's underlying graph.
    pub separated: Vec<String>,
    pub basic_cycles: bool,
    pub schurian: bool,
    pub criterion: Option<DiscretenessReport>,
    pub trichotomy: Option<Trichotomy>,
    pub verdict: String,
}

/// Classification report for a link quiver; the unit is the vertex labelled `1`.
pub fn classify_quiver(q: &Quiver, mode: ClassifyMode) -> Result<ClassifyReport, CliError> {
    let classes = classify_ade(&separated_quiver(q).underlying_graph())?;
    let mut separated: Vec<AdeClass> = classes.clone();
    separated.sort();
    let unit = q.index("1").ok();
    let mut report = ClassifyReport {
        vertices: q.len(),
        arrows: q.arrow_count(),
        separated: separated.iter().map(ToString::to_string).collect(),
        basic_cycles: is_basic_cycle_union(q),
        schurian: is_schurian(q),
        criterion: None,
        trichotomy: None,
        verdict: String::new(),
    };
    let worst = if classes.contains(&AdeClass::BeyondEuclidean) {
        Some("beyond-Euclidean".to_string())
    } else {
        classes.iter().find(|c| c.is_euclidean()).map(|c| format!("Euclidean {c}"))
    };
    match mode {
        ClassifyMode::FiniteCoradical => {
            if let Some(u) = unit {
                report.criterion = Some(discreteness_check_finite_coradical(q, u)?);
            }
        }
        ClassifyMode::InfiniteCoradical => {
            if let Some(u) = unit {
                let preds = q.predecessors(u);
                let one_p: usize = preds.iter().map(|&v| q.multiplicity(v, u)).sum();
                let dims: Vec<usize> = preds.iter().map(|&v| q.vertices()[v].weight.pow(2)).collect();
                if one_p > 0 {
                    report.trichotomy = Some(trichotomy_classify(one_p, &dims)?);
                }
            }
        }
    }
    report.verdict = if let Some(w) = worst {
        format!("not discrete: separated quiver {w}")
    } else if q.arrow_count() == 0 {
        "cosemisimple: no arrows".into()
    } else if unit.is_none() {
        "separated quiver Dynkin; no vertex labelled 1 to test".into()
    } else if let Some(c) = &report.criterion {
        match &c.verdict {
            Discreteness::Discrete => "discrete (finite-coradical criterion: all three conditions hold)".into(),
            Discreteness::NotDiscrete { violated } => format!("not discrete: fails {}", violated.join("; ")),
            Discreteness::Inconsistent => "inconsistent: the structural conditions disagree".into(),
            Discreteness::Cosemisimple => "cosemisimple: no arrows".into(),
        }
    } else {
        match &report.trichotomy {
            Some(Trichotomy::Case1) => "candidate case 1 (trichotomy: one primitive, group-like)".into(),
            Some(Trichotomy::Case2) => "candidate case 2 (trichotomy: two primitives, group-likes)".into(),
            Some(Trichotomy::Case3) => "candidate case 3 (trichotomy: one primitive, dim C = 4)".into(),
            Some(Trichotomy::NotDiscrete { reason }) => format!("not discrete: {reason}"),
            None => "no arrow ends at 1".into(),
        }
    };
    Ok(report)
}

fn classify(cli: &Cli, input: &str, n: Option<i64>, infinite: bool, window: i64, exec: Exec) -> Output {
    no_dot(cli, "classification reports")?;
    let (q, mode) = if Path::new(input).is_file() {
        let text = std::fs::read_to_string(input)?;
        let q: Quiver = serde_json::from_str(&text)?;
        (q, if infinite { ClassifyMode::InfiniteCoradical } else { ClassifyMode::FiniteCoradical })
    } else {
        let src = parse_source(input)?;
        let mode = match &src {
            Source::Hopf(h) if h.family().is_finite() => ClassifyMode::FiniteCoradical,
            _ => ClassifyMode::InfiniteCoradical,
        };
        (quiver_of(&src, n, window, exec)?.0, mode)
    };
    let r = classify_quiver(&q, mode)?;
    let code = if r.verdict.starts_with("inconsistent") { EXIT_FAIL } else { EXIT_OK };
    if cli.format == Format::Json {
        return Ok((code, json_string(&r)?));
    }
    let yes = |b: bool| if b { "yes" } else { "no" };
    let mut out = String::new();
    writeln!(out, "vertices: {}, arrows: {}", r.vertices, r.arrows).unwrap();
    writeln!(out, "separated quiver: {}", r.separated.join(" + ")).unwrap();
    writeln!(out, "basic cycles: {}", yes(r.basic_cycles)).unwrap();
    writeln!(out, "schurian: {}", yes(r.schurian)).unwrap();
    writeln!(out, "verdict: {}", r.verdict).unwrap();
    Ok((code, out))
}

fn fusion_cmd(cli: &Cli, descriptor: &str, n: Option<i64>, exec: Exec) -> Output {
    no_dot(cli, "fusion rings")?;
    let h = hopf(descriptor)?;
    let window = cli.window.unwrap_or(4);
    let inst = Instance::new(&h, &instance::ring_spec(&h, window, n), exec)?;
    let ring = inst.ring(exec)?;
    let report = verify_based_ring(&ring);
    let code = if report.passed() { EXIT_OK } else { EXIT_FAIL };
    if cli.format == Format::Json {
        return Ok((code, json_string(&ring)?));
    }
    let mut out = format!("basis: {}\n", ring.basis.join(", "));
    for i in 0..ring.len() {
        for j in 0..ring.len() {
            let rhs = match ring.product(i, j) {
                Ok(c) => ring.format(&c),
                Err(_) => "outside the window".into(),
            };
            writeln!(out, "{}·{} = {rhs}", ring.basis[i], ring.basis[j]).unwrap();
        }
    }
    for c in &report.checks {
        let v = if c.passed { "pass" } else { "FAIL" };
        writeln!(out, "{}: {v} ({} skipped)", c.axiom, c.skipped).unwrap();
        for f in &c.failures {
            writeln!(out, "  {f}").unwrap();
        }
    }
    Ok((code, out))
}

fn export(cli: &Cli, descriptor: &str, n: Option<i64>, window: i64, exec: Exec) -> Output {
    no_dot(cli, "coalgebras")?;
    let _ = exec;
    let h = hopf(descriptor)?;
    let t = hopf_presentations::truncate_coalgebra(&h, &instance::default_spec(&h, n, window))?;
    Ok((EXIT_OK, json_string(&CoalgebraJson::from_coalgebra(&t.coalgebra, cli.field_order)?)?))
}

fn matrix_rows(m: &Mat, order: u32) -> Result<Vec<Vec<String>>, CliError> {
    (0..m.rows).map(|i| (0..m.cols).map(|j| Ok(m.get(i, j).to_z_string(order)?)).collect()).collect()
}

fn comodules(args: &ComoduleArgs, hc: &HefuvComodules) -> Result<Vec<(String, Comodule)>, CliError> {
    let mut out = Vec::new();
    for &i in &args.s {
        out.push((format!("S{i}"), hc.simple(i)?));
    }
    if args.trivial {
        out.push(("k1".into(), hc.trivial()?));
    }
    if args.sign {
        out.push(("kg".into(), hc.sign()?));
    }
    if args.u {
        out.push(("U".into(), hc.u()?));
    }
    if args.v {
        out.push(("V".into(), hc.v()?));
    }
    if args.v0 {
        out.push(("V0".into(), hc.v0()?));
    }
    for k in &args.w {
        out.push((format!("W({k})"), hc.w(&Scalar::parse(k)?)?));
    }
    Ok(out)
}

fn comodule_cmd(cli: &Cli, args: &ComoduleArgs, exec: Exec) -> Output {
    no_dot(cli, "comodule reports")?;
    let h = hopf(&args.family)?;
    if args.action == ComoduleAction::Decompose {
        return decompose(cli, args, &h, exec);
    }
    if *h.family() != Family::Hefuv {
        return Err(CliError("comodule builders exist for H(e±,f±,u,v) only".into()));
    }
    let hc = HefuvComodules::new(args.n)?;
    let mods = comodules(args, &hc)?;
    if mods.is_empty() {
        return Err(CliError("no comodule given; use --U, --V, --V0, --W k, --S i, --trivial or --sign".into()));
    }
    let order = cli.field_order.unwrap_or_else(|| field_order(&hc.coalgebra));
    let mut code = EXIT_OK;
    let mut text = String::new();
    let mut items = Vec::new();
    match args.action {
        ComoduleAction::Verify => {
            for (name, m) in &mods {
                let r = m.verify();
                if !r.passed() {
                    code = EXIT_FAIL;
                }
                writeln!(text, "{name}: {} ({} identities checked)", if r.passed() { "pass" } else { "FAIL" }, r.checked)
                    .unwrap();
                let failures: Vec<_> = r.failures.iter().map(|f| json!({"basis": f.basis, "identity": f.identity})).collect();
                items.push(json!({"comodule": name, "dim": m.dim(), "passed": r.passed(), "failures": failures}));
            }
        }
        ComoduleAction::Indec => {
            for (name, m) in &mods {
                let verdict = match indecomposability(m)? {
                    Indecomposability::Absolute => "absolutely indecomposable".to_string(),
                    Indecomposability::Decomposable { summands } => {
                        format!("decomposable: {} + {}", summands.0.dim(), summands.1.dim())
                    }
                    Indecomposability::OverBaseField => "End/rad exceeds the base field; no splitting found".into(),
                };
                writeln!(text, "{name}: {verdict}").unwrap();
                items.push(json!({"comodule": name, "verdict": verdict}));
            }
        }
        ComoduleAction::Iso => {
            let [(a, m), (b, n)] = mods.as_slice() else {
                return Err(CliError(format!("iso needs exactly two comodules, got {}", mods.len())));
            };
            match are_isomorphic(m, n)? {
                Some(f) => {
                    let rows = matrix_rows(&f, order)?;
                    writeln!(text, "{a} and {b}: isomorphic\nwitness:").unwrap();
                    for r in &rows {
                        writeln!(text, "  [{}]", r.join(", ")).unwrap();
                    }
                    items.push(json!({"left": a, "right": b, "isomorphic": true, "witness": rows}));
                }
                None => {
                    writeln!(text, "{a} and {b}: not isomorphic").unwrap();
                    items.push(json!({"left": a, "right": b, "isomorphic": false}));
                }
            }
        }
        ComoduleAction::Loewy => {
            for (name, m) in &mods {
                let s = socle_filtration(m, exec)?;
                writeln!(text, "{name}: Loewy length {}, socle layers {:?}", s.loewy_length(), s.layer_dims()).unwrap();
                items.push(json!({"comodule": name, "loewy_length": s.loewy_length(), "layers": s.layer_dims()}));
            }
        }
        ComoduleAction::Dimvec => {
            let inst = Instance::new(&h, &TruncationSpec::Hefuv(args.n), exec)?;
            for (name, m) in &mods {
                let d = dimension_vector(m, &inst.coradical)?;
                let parts = d.labels(|b| inst.labels[b].clone());
                writeln!(text, "{name}: {}", parts.join(" + ")).unwrap();
                items.push(json!({"comodule": name, "factors": parts}));
            }
        }
        ComoduleAction::Decompose => unreachable!("handled above"),
    }
    if cli.format == Format::Json {
        return Ok((code, json_string(&items)?));
    }
    Ok((code, text))
}

fn block_index(label: &str) -> i64 {
    label.strip_prefix('C').and_then(|s| s.parse().ok()).unwrap_or(0)
}

fn decompose(cli: &Cli, args: &ComoduleArgs, h: &PresentedHopf, exec: Exec) -> Output {
    let Some(pair) = &args.tensor else {
        return Err(CliError("decompose needs --tensor LEFT RIGHT".into()));
    };
    let (a, b) = (&pair[0], &pair[1]);
    let window = cli.window.unwrap_or(0).max(block_index(a) + block_index(b)).max(1);
    let spec = instance::ring_spec(h, window, None);
    let inst = Instance::new(h, &spec, exec)?;
    let find = |l: &str| {
        inst.labels.iter().position(|x| x == l).ok_or_else(|| CliError(format!("no simple block named {l}")))
    };
    let (i, j) = (find(a)?, find(b)?);
    let blocks = &inst.coradical.blocks;
    let d = tensor_decompose(&inst.coalgebra, &inst.coradical, &inst.truncation, &blocks[i].matrix, &blocks[j].matrix)?;
    let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
    for k in &d.blocks {
        *counts.entry(*k).or_default() += 1;
    }
    let terms: Vec<String> = counts
        .iter()
        .map(|(k, c)| if *c == 1 { inst.labels[*k].clone() } else { format!("{c}*{}", inst.labels[*k]) })
        .collect();
    let rhs = terms.join(" + ");
    if cli.format == Format::Json {
        let factors: Vec<&str> = d.blocks.iter().map(|k| inst.labels[*k].as_str()).collect();
        return Ok((EXIT_OK, json_string(&json!({"left": a, "right": b, "blocks": factors, "sum": rhs}))?));
    }
    Ok((EXIT_OK, format!("{a}·{b} = {rhs}\n")))
}
