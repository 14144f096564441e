//! The JSON envelope around every command result.

use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use noether_core::{MonomialOrder, ENGINE_VERSION};

use crate::commands::{self, Options};
use crate::error::CliError;
use crate::problem::ProblemFile;

pub fn digest(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

fn result_for(command: &str, bytes: &[u8], order: MonomialOrder, opts: &Options) -> Result<Value, CliError> {
    let src = std::str::from_utf8(bytes).map_err(|_| CliError::parse("input is not valid UTF-8"))?;
    let problem = ProblemFile::parse(src, order)?;
    commands::run(command, &problem, opts)
}

/// Runs `command` on the problem-file bytes; returns the exit code and the
/// pretty-printed report (keys sorted, trailing newline).
pub fn report(command: &str, bytes: &[u8], order: MonomialOrder, opts: &Options) -> (i32, String) {
    let mut out = json!({
        "command": command,
        "input_digest": digest(bytes),
        "engine_version": ENGINE_VERSION,
    });
    let code = match result_for(command, bytes, order, opts) {
        Ok(v) => {
            out["result"] = v;
            0
        }
        Err(e) => {
            out["error"] = json!({"kind": e.kind(), "message": e.to_string()});
            e.exit_code()
        }
    };
    let mut text = serde_json::to_string_pretty(&out).expect("serializable");
    text.push('\n');
    (code, text)
}
