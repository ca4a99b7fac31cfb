//! All fourteen acceptance criteria at their full sizes, one line each.

use std::io::Write;
use std::process::Command;

use nctoggle::verify::{run_one, Limits};

const SEED: u64 = 0x5eed;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_nctoggle"))
}

#[test]
fn acceptance() {
    let lim = Limits::full(SEED);
    let mut failed = Vec::new();
    writeln!(std::io::stderr()).unwrap();
    for id in 1..=14u8 {
        let mut check = run_one(id, &lim).expect("known criterion");
        if id == 11 {
            // The negative control must also surface as exit status 1.
            let out = bin()
                .args(["homomesy", "3", "--word", "1,3 2,3 1,2", "--stat", "chi:1,3"])
                .output()
                .expect("spawn nctoggle");
            let code = out.status.code();
            if code != Some(1) {
                check.passed = false;
                check.detail.push_str(&format!("; cli exit {code:?}, expected 1"));
            } else {
                check.detail.push_str("; cli exit 1");
            }
        }
        // Straight to stderr so the lines show up without --nocapture.
        writeln!(std::io::stderr(), "{}", check.line()).unwrap();
        if !check.passed {
            failed.push(id);
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
