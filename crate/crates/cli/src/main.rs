mod args;
mod commands;

use std::io::Write;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;
use serde_json::json;

use args::{Cli, Format};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(3),
            };
        }
    };
    let (body, code) = match commands::run(&cli) {
        Ok(out) => {
            let body = match cli.format {
                Format::Text => out.text,
                Format::Json => render_json(&cli, json!({ "result": out.json, "exit_code": out.code })),
            };
            (body, out.code)
        }
        Err(e) => {
            let code = commands::error_code(&e);
            match cli.format {
                Format::Text => {
                    eprintln!("error: {e}");
                    (String::new(), code)
                }
                Format::Json => (
                    render_json(&cli, json!({ "error": e.to_string(), "exit_code": code })),
                    code,
                ),
            }
        }
    };
    let mut stdout = std::io::stdout().lock();
    let _ = stdout.write_all(body.as_bytes());
    let _ = stdout.flush();
    ExitCode::from(code as u8)
}

/// Wraps a payload with the tool version, seed, and the full invocation.
fn render_json(cli: &Cli, mut payload: serde_json::Value) -> String {
    let argv: Vec<String> = std::env::args().skip(1).collect();
    payload["version"] = json!(env!("CARGO_PKG_VERSION"));
    payload["seed"] = json!(cli.seed);
    payload["config"] = json!({
        "arguments": argv,
        "command": format!("{:?}", cli.command),
        "threads": cli.threads,
        "ceiling": cli.ceiling,
        "order": format!("{:?}", cli.order).to_lowercase(),
    });
    let mut s = serde_json::to_string_pretty(&payload).expect("json");
    s.push('\n');
    s
}
