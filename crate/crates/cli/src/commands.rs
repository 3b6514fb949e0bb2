use clap::{Parser, Subcommand};
use field_arith::{Field, FieldElement};
use graded_algebra::{preset, preset_names, table, Algebra, AlgebraPresentation, Coefficients, IAlgebra, Mode};
use mw_symbols::{
    eval_gw, eval_witt, mw_compare, mw_normalize_with, parse_expr, project, Decision, NormalizeOptions, TwistedMWExpr,
};
use qf_gw::{gw_compare, invariants, parse_form, GWElement};
use residue::residue_at;
use serde_json::json;

use crate::error::{CliError, Result};
use crate::fixtures::builtin;
use crate::report::{Status, COMMUTATIVITY};
use crate::suites::{fixture_ids, residue_context, run_suite, VerifyOptions, SUITES};

/// Usage errors.
pub const EXIT_USAGE: i32 = 64;

#[derive(Parser, Debug)]
#[command(name = "chowwitt", version, about = "Quadratic forms, Milnor-Witt symbols, residues and Chow-Witt ring tables")]
pub struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Sort symbols with [a][b] = ε[b][a] during normalization.
    #[arg(long, global = true)]
    pub enable_eps_commute: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Elements of GW(F) written as sums of diagonal forms, e.g. "<1,-1> - <2>".
    Form {
        #[command(subcommand)]
        op: FormOp,
    },
    /// Milnor-Witt K-theory expressions, e.g. "2 + eta*[-1]".
    Mw {
        #[command(subcommand)]
        op: MwOp,
    },
    /// Twisted residue of an expression along a divisor of a function field.
    Residue {
        /// Function field, e.g. "Q(x,t)".
        #[arg(long, default_value = "Q(x,t)")]
        field: String,
        /// A variable (coordinate divisor) or an irreducible polynomial.
        #[arg(long)]
        divisor: String,
        /// Label of a polynomial divisor.
        #[arg(long)]
        label: Option<String>,
        /// Uniformizer, if not the divisor's equation.
        #[arg(long)]
        pi: Option<String>,
        /// Twist of the input as label=section; repeatable.
        #[arg(long)]
        twist: Vec<String>,
        /// Local generator of a twist near the divisor as label=generator; repeatable.
        #[arg(long)]
        generator: Vec<String>,
        expr: String,
    },
    /// Graded pieces of presented algebras.
    Ring {
        #[command(subcommand)]
        op: RingOp,
    },
    /// Run a verification suite against the fixtures.
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value = "C")]
        field: String,
        /// Use this n for Bmu(2n) instead of the fixture values.
        #[arg(long)]
        n: Option<u32>,
        #[arg(long, default_value_t = 6)]
        max_degree: u32,
        /// List the checks of each suite and exit.
        #[arg(long)]
        list: bool,
    },
}

#[derive(Subcommand, Debug)]
pub enum FormOp {
    Eval {
        #[arg(long, default_value = "Q")]
        field: String,
        form: String,
    },
    Equal {
        #[arg(long, default_value = "Q")]
        field: String,
        left: String,
        right: String,
    },
    Invariants {
        #[arg(long, default_value = "Q")]
        field: String,
        form: String,
    },
}

#[derive(Subcommand, Debug)]
pub enum MwOp {
    Eval {
        #[arg(long, default_value = "Q")]
        field: String,
        expr: String,
    },
    Equal {
        #[arg(long, default_value = "Q")]
        field: String,
        left: String,
        right: String,
    },
    Normalize {
        #[arg(long, default_value = "Q")]
        field: String,
        expr: String,
    },
}

#[derive(Subcommand, Debug)]
pub enum RingOp {
    Table {
        /// bgm, bmu, mbar, mcal, mbar-i, bgm-i or a preset name.
        #[arg(long, conflicts_with = "file")]
        preset: Option<String>,
        /// A presentation file in TOML.
        #[arg(long)]
        file: Option<std::path::PathBuf>,
        /// Base field: C, R or Fp; defaults to the presentation's own
        #[arg(long)]
        field: Option<String>,
        #[arg(long, default_value_t = 1)]
        n: u32,
        #[arg(long, default_value_t = 6)]
        max_degree: u32,
        /// Largest weight j shown for I*-presentations.
        #[arg(long, default_value_t = 6)]
        max_weight: i32,
    },
    Reduce {
        #[arg(long, conflicts_with = "file")]
        preset: Option<String>,
        #[arg(long)]
        file: Option<std::path::PathBuf>,
        /// Base field: C, R or Fp; defaults to the presentation's own
        #[arg(long)]
        field: Option<String>,
        #[arg(long, default_value_t = 1)]
        n: u32,
        expr: String,
    },
    PresetList,
}

/// Output of a command: what to print and the exit status.
pub struct Outcome {
    pub stdout: String,
    pub code: i32,
}

fn ok(stdout: String) -> Result<Outcome> {
    Ok(Outcome { stdout, code: 0 })
}

/// Parses arguments and runs; returns the exit code and what to print on
/// stdout and stderr.
pub fn run<I, T>(args: I) -> (i32, String, String)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let text = e.render().to_string();
            return if code == 0 { (0, text, String::new()) } else { (code, String::new(), text) };
        }
    };
    match execute(&cli) {
        Ok(o) => (o.code, o.stdout, String::new()),
        Err(e) => (EXIT_USAGE, String::new(), format!("error: {e}\n")),
    }
}

pub fn execute(cli: &Cli) -> Result<Outcome> {
    let opts = NormalizeOptions { eps_commute: cli.enable_eps_commute };
    match &cli.command {
        Command::Form { op } => form(op, cli.json),
        Command::Mw { op } => mw(op, cli.json, opts),
        Command::Residue { field, divisor, label, pi, twist, generator, expr } => {
            let k = Field::parse(field)?;
            let mut ctx = residue_context(&k, divisor, label.as_deref(), pi.as_deref())?;
            for (l, g) in pairs(&k, generator)? {
                ctx = ctx.with_generator(&l, g);
            }
            let x = TwistedMWExpr::new(parse_expr(&k, expr)?, pairs(&k, twist)?);
            let r = residue_at(&x, &ctx)?;
            let value = mw_normalize_with(&r.value, opts);
            if cli.json {
                ok(json!({"divisor": r.divisor, "value": value.to_string(), "twist": r.twist}).to_string() + "\n")
            } else {
                ok(format!("{r}\n"))
            }
        }
        Command::Ring { op } => ring(op, cli.json),
        Command::Verify { suite, field, n, max_degree, list } => {
            if *list {
                let ids = fixture_ids(&builtin());
                if cli.json {
                    return ok(serde_json::to_string(&ids).unwrap() + "\n");
                }
                let mut out = String::new();
                for (s, v) in ids {
                    out += &format!("{s}: {}\n", v.join(", "));
                }
                return ok(out);
            }
            if !SUITES.contains(&suite.as_str()) {
                return Err(CliError::Usage(format!("unknown suite {suite}; expected one of {}", SUITES.join(", "))));
            }
            let opts = VerifyOptions {
                field: field.clone(),
                n: *n,
                max_degree: *max_degree,
                eps_commute: cli.enable_eps_commute,
            };
            let report = run_suite(suite, &opts)?;
            let stdout = if cli.json { serde_json::to_string_pretty(&report).unwrap() + "\n" } else { report.render() };
            Ok(Outcome { stdout, code: report.status.exit_code() })
        }
    }
}

fn pairs(k: &field_arith::FieldRef, items: &[String]) -> Result<Vec<(String, FieldElement)>> {
    items
        .iter()
        .map(|s| {
            let (l, g) = s.split_once('=').ok_or_else(|| CliError::Usage(format!("expected label=element, got {s}")))?;
            Ok((l.trim().to_string(), FieldElement::parse(k, g)?))
        })
        .collect()
}

fn decision_status(d: Decision) -> Status {
    match d {
        Decision::Equal => Status::Pass,
        Decision::NotEqual => Status::Fail,
        Decision::Undecided => Status::Undecided,
    }
}

fn form(op: &FormOp, json: bool) -> Result<Outcome> {
    match op {
        FormOp::Eval { field, form } => {
            let x = parse_form(&Field::parse(field)?, form)?;
            if json {
                return ok(json!({"form": x.to_string(), "rank": x.rank()}).to_string() + "\n");
            }
            ok(format!("{}\n", named(&x)?))
        }
        FormOp::Equal { field, left, right } => {
            let k = Field::parse(field)?;
            let d = gw_compare(&parse_form(&k, left)?, &parse_form(&k, right)?)?;
            let stdout = if json { json!({"decision": d.to_string()}).to_string() + "\n" } else { format!("{d}\n") };
            Ok(Outcome { stdout, code: decision_status(d).exit_code() })
        }
        FormOp::Invariants { field, form } => {
            let p = invariants(&parse_form(&Field::parse(field)?, form)?);
            let hasse: Vec<(String, i32)> = p.hasse.iter().map(|(v, s)| (v.to_string(), *s)).collect();
            if json {
                return ok(json!({
                    "rank": p.rank,
                    "det": p.det.to_string(),
                    "disc": p.disc.to_string(),
                    "signature": p.signature,
                    "hasse": hasse.iter().map(|(v, s)| json!({"place": v, "value": s})).collect::<Vec<_>>(),
                })
                .to_string()
                    + "\n");
            }
            let mut out = format!("rank {}\ndet {}\ndisc {}\n", p.rank, p.det, p.disc);
            if let Some(s) = p.signature {
                out += &format!("signature {s}\n");
            }
            for (v, s) in hasse {
                out += &format!("hasse {v} {s}\n");
            }
            ok(out)
        }
    }
}

/// A GW element, prefixed by its name when it is 0, 1 or h.
fn named(x: &GWElement) -> Result<String> {
    let k = x.field();
    for (name, y) in [("0", GWElement::zero(k)), ("1", GWElement::one(k)), ("h", GWElement::hyperbolic(k))] {
        if gw_compare(x, &y)? == Decision::Equal {
            let form = if name == "0" { "0".to_string() } else { y.to_string() };
            return Ok(if name == "0" { form } else { format!("{name} = {form}") });
        }
    }
    Ok(x.to_string())
}

fn mw(op: &MwOp, json: bool, opts: NormalizeOptions) -> Result<Outcome> {
    match op {
        MwOp::Eval { field, expr } => {
            let k = Field::parse(field)?;
            let x = mw_normalize_with(&parse_expr(&k, expr)?, opts);
            let degree = x.degree()?.unwrap_or(0);
            let text = if degree == 0 {
                named(&eval_gw(&x)?)?
            } else if degree < 0 {
                format!("{} in W", eval_witt(&x)?.representative())
            } else {
                let p = project(&x)?;
                format!("{x}\nK^M: {}\nI^{degree}: {}", p.milnor, p.witt)
            };
            if json {
                return ok(json!({"degree": degree, "normalized": x.to_string(), "value": text}).to_string() + "\n");
            }
            ok(text + "\n")
        }
        MwOp::Equal { field, left, right } => {
            let k = Field::parse(field)?;
            let c = mw_compare(&parse_expr(&k, left)?, &parse_expr(&k, right)?)?;
            let stdout = if json {
                json!({"decision": c.decision.to_string(), "degree": c.degree}).to_string() + "\n"
            } else {
                format!("{}\n", c.decision)
            };
            Ok(Outcome { stdout, code: decision_status(c.decision).exit_code() })
        }
        MwOp::Normalize { field, expr } => {
            let x = mw_normalize_with(&parse_expr(&Field::parse(field)?, expr)?, opts);
            if json {
                return ok(json!({"normalized": x.to_string()}).to_string() + "\n");
            }
            ok(format!("{x}\n"))
        }
    }
}

/// Resolves the short suite names and `bmu` with n.
pub fn resolve_preset(name: &str, n: u32) -> Result<AlgebraPresentation> {
    let full = match name {
        "bgm" => "BGm".to_string(),
        "bmu" => format!("Bmu({})", 2 * n),
        "mbar" => "MbarEll".into(),
        "mcal" => "MEll".into(),
        "mbar-i" => "MbarEll_I".into(),
        "bgm-i" => "BGm_I".into(),
        other => other.into(),
    };
    Ok(preset(&full)?)
}

fn load(preset_name: &Option<String>, file: &Option<std::path::PathBuf>, n: u32) -> Result<AlgebraPresentation> {
    match (preset_name, file) {
        (Some(p), _) => resolve_preset(p, n),
        (None, Some(path)) => {
            let text = std::fs::read_to_string(path).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
            Ok(AlgebraPresentation::parse_toml(&text)?)
        }
        (None, None) => Err(CliError::Usage("give --preset or --file".into())),
    }
}

fn coefficients(p: &AlgebraPresentation, field: &Option<String>) -> Result<Coefficients> {
    if let Some(f) = field {
        return Ok(Coefficients::parse(f)?);
    }
    if p.mode == Mode::Chow {
        return Ok(Coefficients::Integers);
    }
    Ok(p.default_coefficients()?.unwrap_or(Coefficients::parse("C")?))
}

fn ring(op: &RingOp, json: bool) -> Result<Outcome> {
    match op {
        RingOp::PresetList => {
            let names: Vec<String> =
                preset_names().into_iter().map(|n| if n == "Bmu" { "Bmu(2n)".to_string() } else { n.to_string() }).collect();
            if json {
                return ok(serde_json::to_string(&names).unwrap() + "\n");
            }
            ok(names.join("\n") + "\n")
        }
        RingOp::Table { preset, file, field, n, max_degree, max_weight } => {
            let p = load(preset, file, *n)?;
            let c = coefficients(&p, field)?;
            if p.mode == Mode::I {
                let a = IAlgebra::new(&p, &c)?;
                let mut cells = vec![];
                for i in 0..=*max_degree {
                    for t in [0, 1] {
                        for j in 0..=*max_weight {
                            cells.push(a.piece(i, j, t));
                        }
                    }
                }
                if json {
                    let v = json!({"preset": p.name, "coefficients": c.name(), "assumptions": [COMMUTATIVITY], "cells": cells});
                    return ok(serde_json::to_string_pretty(&v).unwrap() + "\n");
                }
                let mut out = format!("{} over {}\n# {COMMUTATIVITY}\n", p.name, c.name());
                for x in cells {
                    out += &format!("({},{},{})  {}  {:?}\n", x.i, x.j, x.twist, x.group, x.basis);
                }
                return ok(out);
            }
            let a = Algebra::new(&p, &c)?;
            let cells = table(&a, *max_degree);
            if json {
                let v = json!({"preset": p.name, "coefficients": c.name(), "assumptions": [COMMUTATIVITY], "cells": cells});
                return ok(serde_json::to_string_pretty(&v).unwrap() + "\n");
            }
            let mut out = format!("{} over {}\n# {COMMUTATIVITY}\n", p.name, c.name());
            for x in cells {
                out += &format!("({},{})  {}  [{}]\n", x.i, x.twist, x.group, x.basis.join(", "));
            }
            ok(out)
        }
        RingOp::Reduce { preset, file, field, n, expr } => {
            let p = load(preset, file, *n)?;
            let a = Algebra::new(&p, &coefficients(&p, field)?)?;
            let e = a.parse(expr)?;
            let (i, t, coords) = a.coordinates(&e)?;
            let piece = a.graded_piece(i, t);
            let zero = coords.iter().all(|x| x == &0.into());
            let coords: Vec<String> = coords.iter().map(|x| x.to_string()).collect();
            if json {
                let v = json!({
                    "i": i, "twist": piece.twist, "group": piece.group.to_string(),
                    "coordinates": coords, "zero": zero, "normal_form": a.display(&e),
                });
                return ok(v.to_string() + "\n");
            }
            let tw = &piece.twist;
            if zero {
                ok(format!("{expr} = 0 in ({i},{tw})\n"))
            } else {
                ok(format!("{expr} = {} in ({i},{tw}) ≅ {}, coordinates [{}]\n", a.display(&e), piece.group, coords.join(", ")))
            }
        }
    }
}
