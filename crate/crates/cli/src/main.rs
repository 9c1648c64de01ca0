mod args;
mod commands;

use std::fs;
use std::process::ExitCode;

use clap::Parser;
use serde_json::{json, Value};

use args::{Cli, Command};
use commands::{Body, Done};

const SCHEMA: u32 = 1;

/// The run configuration, echoed at the top of every report.
fn config(cli: &Cli, caps: &itline::Caps) -> Value {
    let (name, params) = match &cli.command {
        Command::Analyze {
            input,
            k,
            st,
            hs,
            no_exact,
            dot,
        } => (
            "analyze",
            json!({ "input": input, "k": k, "st": st, "hs": hs, "exact": !no_exact, "dot": dot }),
        ),
        Command::Tower { input, depth } => ("tower", json!({ "input": input, "depth": depth })),
        Command::Dtilde {
            input,
            mode,
            audit,
            counterexamples,
        } => (
            "dtilde",
            json!({ "input": input, "mode": if *audit { json!("audit") } else { json!(mode) }, "counterexamples": counterexamples }),
        ),
        Command::Index { kind } => ("index", json!(kind)),
        Command::Oracle { name, input, s, t } => ("oracle", json!({ "oracle": name, "input": input, "s": s, "t": t })),
        Command::Verify {
            suite,
            corpus,
            format,
            seed,
            csv,
            counterexamples,
        } => (
            "verify",
            json!({ "suite": suite, "corpus": corpus, "format": format, "seed": seed, "csv": csv, "counterexamples": counterexamples }),
        ),
        Command::Gen { kind, format } => ("gen", json!({ "kind": kind, "format": format })),
    };
    json!({ "command": name, "params": params, "caps": caps, "output": cli.output })
}

fn run(cli: &Cli) -> itline::Result<Done> {
    let caps = cli.caps.resolve();
    caps.validate()?;
    match &cli.command {
        Command::Analyze {
            input,
            k,
            st,
            hs,
            no_exact,
            dot,
        } => commands::analyze_cmd(input, k, st, hs, *no_exact, dot.as_deref(), &caps),
        Command::Tower { input, depth } => commands::tower_cmd(input, *depth, &caps),
        Command::Dtilde {
            input,
            mode,
            audit,
            counterexamples,
        } => {
            let mode = if *audit { args::Mode::Audit } else { *mode };
            commands::dtilde_cmd(input, mode, counterexamples, &caps)
        }
        Command::Index { kind } => commands::index_cmd(kind, &caps),
        Command::Oracle { name, input, s, t } => commands::oracle_cmd(*name, input, *s, *t, &caps),
        Command::Verify {
            suite,
            corpus,
            format,
            seed,
            csv,
            counterexamples,
        } => commands::verify_cmd(suite, corpus, *format, *seed, csv.as_deref(), counterexamples, &caps),
        Command::Gen { kind, format } => commands::gen_cmd(kind, *format),
    }
}

fn render(cli: &Cli, done: Done) -> String {
    let header = || json!({ "schema": SCHEMA, "config": config(cli, &cli.caps.resolve()) });
    match done.body {
        Body::Json(body) => {
            let mut report = header();
            if let (Some(r), Value::Object(fields)) = (report.as_object_mut(), body) {
                r.extend(fields);
            }
            serde_json::to_string_pretty(&report).expect("report serializes") + "\n"
        }
        Body::Lines(lines) => std::iter::once(header())
            .chain(lines)
            .map(|l| serde_json::to_string(&l).expect("line serializes") + "\n")
            .collect(),
        Body::Text(text) => text,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let done = match run(&cli) {
        Ok(done) => done,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let exit = done.exit;
    let text = render(&cli, done);
    match &cli.output {
        Some(path) => {
            if let Err(e) = fs::write(path, text) {
                eprintln!("error: {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        None => print!("{text}"),
    }
    ExitCode::from(exit as u8)
}
