//! Every fixture carries `<name>.expected.json`: command -> {exit, report}.
//! Set NOETHER_BLESS=1 to rewrite them.

mod common;

use std::collections::BTreeMap;

use common::{fixture_dir, fixture_names, run};
use noether_cli::COMMANDS;
use serde_json::{json, Value};

#[test]
fn fixtures_match_expected_reports() {
    let bless = std::env::var_os("NOETHER_BLESS").is_some();
    let mut mismatches = Vec::new();
    for name in fixture_names() {
        let mut got = BTreeMap::new();
        for &command in COMMANDS {
            let (code, report) = run(command, &name);
            got.insert(command.to_string(), json!({"exit": code, "report": report}));
        }
        let got = Value::from(serde_json::Map::from_iter(got));
        let path = fixture_dir().join(format!("{name}.expected.json"));
        if bless {
            let mut text = serde_json::to_string_pretty(&got).unwrap();
            text.push('\n');
            std::fs::write(&path, text).unwrap();
            continue;
        }
        let text = std::fs::read_to_string(&path).unwrap_or_else(|_| panic!("missing {}", path.display()));
        let want: Value = serde_json::from_str(&text).unwrap();
        for &command in COMMANDS {
            if got[command] != want[command] {
                mismatches.push(format!("{name} {command}"));
            }
        }
    }
    assert!(mismatches.is_empty(), "reports differ from expected: {mismatches:?}");
}
