//! Dispatch of the subcommands to the library.

use std::fmt;
use std::io::Write;

use braidlab::catalog::{
    closed_chen, closed_hilbert, cohomology_presentation, gr_presentation, group_presentation,
    GroupId,
};
use braidlab::chen::{
    chen_compare, chen_ranks_closed, chen_ranks_fox, chen_ranks_infinitesimal, formula_prediction,
    resonance_component_dims, ChenRanks,
};
use braidlab::lcs::{
    hilbert_cohomology, hilbert_enveloping, hilbert_quadratic_algebra, lcs_ranks, quadratic_dual,
    LcsMethod,
};
use braidlab::resonance::{component_basis, resonance_report};
use serde_json::{json, Map, Value};

use crate::emit::{emit, Format};
use crate::suite::{
    exit_code, run_verify, suite_groups, VerifySuiteConfig, DEFAULT_DEGREE, DEFAULT_KMAX,
    EXTENDED_DEGREE, EXTENDED_KMAX,
};
use crate::{CatalogKind, ChenChoice, Cli, Command, HilbertMethod, LcsChoice};

#[derive(Debug)]
pub enum CommandError {
    Usage(String),
    Compute(braidlab::Error),
    Internal(String),
}

impl fmt::Display for CommandError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CommandError::Usage(s) => write!(f, "usage: {s}"),
            CommandError::Compute(e) => write!(f, "{e}"),
            CommandError::Internal(s) => write!(f, "internal error: {s}"),
        }
    }
}

impl std::error::Error for CommandError {}

impl From<braidlab::Error> for CommandError {
    fn from(e: braidlab::Error) -> Self {
        CommandError::Compute(e)
    }
}

type Outcome<T> = Result<T, CommandError>;

fn group(s: &str) -> Outcome<GroupId> {
    s.parse()
        .map_err(|e: braidlab::Error| CommandError::Usage(e.to_string()))
}

fn check_cap(
    name: &str,
    value: usize,
    min: usize,
    default_cap: usize,
    extended_cap: usize,
    ext: bool,
) -> Outcome<()> {
    let cap = if ext { extended_cap } else { default_cap };
    if value < min || value > cap {
        let hint = if ext || value > extended_cap {
            ""
        } else {
            " (larger values need --include-extended)"
        };
        return Err(CommandError::Usage(format!(
            "--{name} must lie in {min}..={cap}{hint}"
        )));
    }
    Ok(())
}

/// Runs the parsed command and returns the process exit code.
pub fn run(cli: &Cli) -> Outcome<u8> {
    let g = &cli.global;
    let format = if g.json { Some(Format::Json) } else { g.format };
    let ext = g.include_extended;
    let (output, code) = match &cli.command {
        Command::Verify {
            groups,
            degree,
            kmax,
            trials,
        } => {
            let cfg = VerifySuiteConfig {
                groups: parse_filter(groups)?,
                degree: *degree,
                kmax: *kmax,
                trials: *trials,
                seed: g.seed,
                include_extended: ext,
                jobs: g.jobs,
            };
            cfg.validate().map_err(CommandError::Usage)?;
            let records = run_verify(&cfg).map_err(|e| CommandError::Internal(e.to_string()))?;
            (
                emit(format.unwrap_or(Format::Text), &records),
                exit_code(&records) as u8,
            )
        }
        other => {
            let value = compute(other, g.seed, ext)?;
            (render(format.unwrap_or(Format::Json), &value)?, 0)
        }
    };
    match &g.out {
        Some(path) => std::fs::write(path, output)
            .map_err(|e| CommandError::Internal(format!("{}: {e}", path.display())))?,
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(output.as_bytes())
                .and_then(|_| out.flush())
                .map_err(|e| CommandError::Internal(e.to_string()))?;
        }
    }
    Ok(code)
}

fn parse_filter(s: &str) -> Outcome<Option<Vec<GroupId>>> {
    match s.trim() {
        "all" => Ok(None),
        "none" | "" => Ok(Some(Vec::new())),
        list => {
            let gs = list.split(',').map(group).collect::<Outcome<Vec<_>>>()?;
            let known = suite_groups();
            if let Some(g) = gs.iter().find(|g| !known.contains(g)) {
                return Err(CommandError::Usage(format!(
                    "no verification checks for {g}"
                )));
            }
            Ok(Some(gs))
        }
    }
}

fn to_value<T: serde::Serialize>(v: &T) -> Outcome<Value> {
    serde_json::to_value(v).map_err(|e| CommandError::Internal(e.to_string()))
}

fn compute(cmd: &Command, seed: u64, ext: bool) -> Outcome<Value> {
    match cmd {
        Command::Catalog { group: s, kind } => {
            let g = group(s)?;
            match kind {
                CatalogKind::Cohomology => to_value(&cohomology_presentation(&g)?.dump()),
                CatalogKind::Gr => to_value(&gr_presentation(&g)?.dump()),
                CatalogKind::Group => {
                    let p = group_presentation(&g)?;
                    let word = |w: &Vec<i32>| -> String {
                        let letters: Vec<String> = w
                            .iter()
                            .map(|&l| {
                                let name = &p.generators[l.unsigned_abs() as usize - 1];
                                if l > 0 {
                                    name.clone()
                                } else {
                                    format!("{name}^-1")
                                }
                            })
                            .collect();
                        letters.join(" ")
                    };
                    Ok(json!({
                        "flavor": "group",
                        "generators": p.generators,
                        "relators": p.relators.iter().map(word).collect::<Vec<_>>(),
                    }))
                }
            }
        }
        Command::Hilbert {
            group: s,
            degree,
            method,
        } => {
            let g = group(s)?;
            check_cap("degree", *degree, 0, DEFAULT_DEGREE, EXTENDED_DEGREE, ext)?;
            let mut out = Map::new();
            let hilbert = match method {
                HilbertMethod::Cohomology => to_value(&hilbert_cohomology(&g, *degree)?)?,
                HilbertMethod::Enveloping => to_value(&hilbert_enveloping(&g, *degree)?)?,
                HilbertMethod::Dual => {
                    to_value(&hilbert_quadratic_algebra(&quadratic_dual(&g)?, *degree)?)?
                }
                HilbertMethod::Closed => {
                    let c = closed_hilbert(&g, *degree)?;
                    out.insert("provenance".into(), to_value(&c.provenance)?);
                    out.insert("source".into(), c.source.into());
                    to_value(&c.coeffs)?
                }
            };
            out.insert("group".into(), g.to_string().into());
            out.insert("method".into(), format!("{method:?}").to_lowercase().into());
            out.insert("degree".into(), (*degree).into());
            out.insert("hilbert".into(), hilbert);
            Ok(Value::Object(out))
        }
        Command::Lcs {
            group: s,
            degree,
            method,
        } => {
            let g = group(s)?;
            check_cap("degree", *degree, 1, DEFAULT_DEGREE, EXTENDED_DEGREE, ext)?;
            let m = match method {
                LcsChoice::Formula => LcsMethod::FormulaInversion,
                LcsChoice::Enveloping => LcsMethod::EnvelopingGb,
            };
            to_value(&lcs_ranks(&g, *degree, m)?)
        }
        Command::Chen {
            group: s,
            kmax,
            method,
        } => {
            let g = group(s)?;
            check_cap("kmax", *kmax, 1, DEFAULT_KMAX, EXTENDED_KMAX, ext)?;
            chen_report(&g, *kmax, *method)
        }
        Command::Resonance {
            group: s,
            verify,
            trials,
            samples,
        } => {
            let g = group(s)?;
            if *trials < 3 {
                return Err(CommandError::Usage("--trials must be at least 3".into()));
            }
            resonance_json(&g, *verify, *trials, *samples, seed)
        }
        Command::Verify { .. } => unreachable!("handled by run"),
    }
}

fn ranks_json(r: &ChenRanks) -> Value {
    json!({ "theta": r.theta.iter().map(|&t| t as i64).collect::<Vec<_>>(), "authoritative": r.authoritative })
}

fn chen_report(g: &GroupId, kmax: usize, method: ChenChoice) -> Outcome<Value> {
    let mut methods = Map::new();
    let mut verdicts = Map::new();
    let mut computed: Vec<(&str, ChenRanks)> = Vec::new();
    match method {
        ChenChoice::Infinitesimal => {
            computed.push(("infinitesimal", chen_ranks_infinitesimal(g, kmax)?))
        }
        ChenChoice::Fox => computed.push(("fox", chen_ranks_fox(g, kmax)?)),
        ChenChoice::Closed => {
            let r = chen_ranks_closed(g, kmax).ok_or_else(|| {
                CommandError::Compute(braidlab::Error::Unsupported(format!(
                    "{g}: no closed form for every k ≤ {kmax}"
                )))
            })?;
            computed.push(("closed_form", r));
        }
        ChenChoice::Compare => {
            let c = chen_compare(g, kmax)?;
            verdicts.insert("methods_agree".into(), to_value(&c.methods_agree)?);
            verdicts.insert("formula_matches".into(), to_value(&c.formula_matches)?);
            if let Some(r) = c.infinitesimal {
                computed.push(("infinitesimal", r));
            }
            match c.fox {
                Some(r) => computed.push(("fox", r)),
                None if g.has_group_presentation() => {
                    methods.insert(
                        "fox".into(),
                        json!({ "skipped": "large truncation; run with --method fox" }),
                    );
                }
                None => {}
            }
        }
    }
    let mut closed = Map::new();
    for k in 1..=kmax {
        if let Some(c) = closed_chen(g, k) {
            let mut v = to_value(&c)?;
            v["value"] = (c.value as i64).into();
            closed.insert(k.to_string(), v);
        }
    }
    for (name, r) in &computed {
        methods.insert((*name).into(), ranks_json(r));
        let agrees = closed.iter().all(|(k, c)| {
            let k: usize = k.parse().expect("numeric key");
            c["value"].as_i64() == Some(r.theta[k - 1] as i64)
        });
        if !closed.is_empty() {
            verdicts.insert(format!("{name}_matches_closed_form"), agrees.into());
        }
    }
    let prediction = match resonance_component_dims(g) {
        Ok(dims) => {
            let theta: Map<String, Value> = (4..=kmax)
                .map(|k| (k.to_string(), (formula_prediction(&dims, k) as i64).into()))
                .collect();
            json!({ "component_dims": dims, "theta": theta })
        }
        Err(_) => Value::Null,
    };
    Ok(json!({
        "group": g.to_string(),
        "kmax": kmax,
        "methods": methods,
        "closed_form": closed,
        "formula_prediction": prediction,
        "verdicts": verdicts,
    }))
}

fn resonance_json(
    g: &GroupId,
    verify: bool,
    trials: usize,
    samples: usize,
    seed: u64,
) -> Outcome<Value> {
    if verify {
        let r = resonance_report(g, trials, samples, seed)?;
        let mut v = to_value(&r)?;
        if samples == 0 {
            v["membership"] = Value::Null;
        }
        return Ok(v);
    }
    let components: Vec<Value> = component_basis(g)
        .unwrap_or_default()
        .iter()
        .map(|s| json!({ "label": s.label, "dim": s.dim(), "verified": null }))
        .collect();
    Ok(json!({
        "group": g.to_string(),
        "components": components,
        "membership": null,
        "ideal_check": null,
        "obstruction": null,
        "notes": [],
    }))
}

/// JSON is pretty-printed with sorted keys; text is an indented outline.
fn render(format: Format, v: &Value) -> Outcome<String> {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(v)
                .map_err(|e| CommandError::Internal(e.to_string()))?;
            s.push('\n');
            Ok(s)
        }
        Format::Text => {
            let mut out = String::new();
            outline(v, 0, &mut out);
            Ok(out)
        }
        Format::Csv => Err(CommandError::Usage(
            "csv output is only available for verify".into(),
        )),
    }
}

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("-".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        Value::Array(a)
            if a.iter()
                .all(|x| matches!(x, Value::Number(_) | Value::String(_) | Value::Bool(_))) =>
        {
            Some(
                a.iter()
                    .map(|x| scalar(x).unwrap_or_default())
                    .collect::<Vec<_>>()
                    .join(", "),
            )
        }
        _ => None,
    }
}

fn outline(v: &Value, depth: usize, out: &mut String) {
    let pad = "  ".repeat(depth);
    match v {
        Value::Object(m) => {
            for (k, x) in m {
                match scalar(x) {
                    Some(s) => out.push_str(&format!("{pad}{k}: {s}\n")),
                    None => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        outline(x, depth + 1, out);
                    }
                }
            }
        }
        Value::Array(a) => {
            for x in a {
                match scalar(x) {
                    Some(s) => out.push_str(&format!("{pad}- {s}\n")),
                    None => {
                        out.push_str(&format!("{pad}-\n"));
                        outline(x, depth + 1, out);
                    }
                }
            }
        }
        other => out.push_str(&format!("{pad}{}\n", scalar(other).unwrap_or_default())),
    }
}
