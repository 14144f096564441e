#![allow(dead_code)]

use std::path::PathBuf;

use noether_cli::{report, Options};
use noether_core::MonomialOrder;
use serde_json::Value;

pub fn fixture_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures")
}

pub fn fixture_names() -> Vec<String> {
    let mut names: Vec<String> = std::fs::read_dir(fixture_dir())
        .expect("fixtures directory")
        .filter_map(|e| {
            let path = e.ok()?.path();
            (path.extension()? == "ring").then(|| path.file_stem()?.to_str().map(String::from))?
        })
        .collect();
    names.sort();
    names
}

pub fn read_fixture(name: &str) -> Vec<u8> {
    std::fs::read(fixture_dir().join(format!("{name}.ring"))).expect("fixture exists")
}

/// Exit code and parsed report for `command` on a fixture.
pub fn run_with(command: &str, name: &str, opts: &Options) -> (i32, Value) {
    let (code, text) = report(command, &read_fixture(name), MonomialOrder::Grevlex, opts);
    (code, serde_json::from_str(&text).expect("report is JSON"))
}

pub fn run(command: &str, name: &str) -> (i32, Value) {
    run_with(command, name, &Options::default())
}

pub fn result(command: &str, name: &str) -> Value {
    let (code, v) = run(command, name);
    assert_eq!(code, 0, "{command} {name}: {v}");
    v["result"].clone()
}
