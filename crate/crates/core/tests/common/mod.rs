//! The fixed CLI script behind the golden files.

#![allow(dead_code)]

use std::path::{Path, PathBuf};
use std::process::Command;

/// Name, arguments and expected exit code of every scripted invocation.
pub const SCRIPT: &[(&str, &[&str], i32)] = &[
    ("show", &["show", "3y^2 + y + 2", "--forest"], 0),
    ("eval", &["eval", "y^3 + y^2", "--at", "2"], 0),
    ("homcount", &["homcount", "y^3+y^2", "y+y^2"], 0),
    ("tensor", &["tensor", "lin(2)", "rep(3)"], 0),
    ("sub", &["sub", "y^2", "let p = y + 1 in p"], 0),
    ("close", &["close", "rep(3)", "y"], 0),
    ("coclose", &["coclose", "y", "y^2 + y"], 0),
    ("check-dual", &["check-dual", "--size", "2"], 0),
    ("search-duals", &["search-duals", "--max-pos", "2", "--max-dir", "2"], 0),
    ("core", &["core", "2y"], 0),
    (
        "check-bialgebra",
        &["check-bialgebra", "--monoid", "tests/data/z2.json", "--side", "left"],
        0,
    ),
    (
        "laws",
        &["laws", "--suite", "naturality", "--seed", "7", "--samples", "8"],
        0,
    ),
    ("parse-error", &["show", "y^"], 3),
];

pub fn manifest_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

pub fn golden_dir() -> PathBuf {
    manifest_dir().join("tests").join("golden")
}

pub struct Run {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

pub fn polyldc(args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_polyldc"))
        .args(args)
        .current_dir(manifest_dir())
        .env_remove("POLY_LDC_CAP")
        .output()
        .expect("the binary runs");
    Run {
        stdout: String::from_utf8(out.stdout).expect("utf-8 stdout"),
        stderr: String::from_utf8(out.stderr).expect("utf-8 stderr"),
        code: out.status.code().expect("exited normally"),
    }
}

/// The text transcript of the whole script: each command, its exit code,
/// and what it printed.
pub fn transcript() -> String {
    let mut out = String::new();
    for (_, args, _) in SCRIPT {
        let r = polyldc(args);
        out.push_str(&format!(
            "$ polyldc {}\n[exit {}]\n{}{}\n",
            quote(args),
            r.code,
            r.stdout,
            r.stderr
        ));
    }
    out
}

fn quote(args: &[&str]) -> String {
    args.iter()
        .map(|a| {
            if a.contains(' ') || a.contains('^') || a.contains('(') {
                format!("'{a}'")
            } else {
                a.to_string()
            }
        })
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn json_args<'a>(args: &[&'a str]) -> Vec<&'a str> {
    std::iter::once("--json").chain(args.iter().copied()).collect()
}

/// Compares `actual` with a golden file, or rewrites it when
/// `POLYLDC_BLESS` is set.
pub fn golden(name: &str, actual: &str) -> Result<(), String> {
    let path: PathBuf = golden_dir().join(name);
    if std::env::var_os("POLYLDC_BLESS").is_some() {
        std::fs::write(&path, actual).map_err(|e| e.to_string())?;
        return Ok(());
    }
    let expected = read(&path)?;
    if expected == actual {
        Ok(())
    } else {
        Err(format!("{} differs from the golden file", path.display()))
    }
}

fn read(path: &Path) -> Result<String, String> {
    std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
}

/// Runs every scripted command twice in both modes and checks them against
/// the golden files and against each other.
pub fn check_script() -> Result<usize, String> {
    let text = transcript();
    if text != transcript() {
        return Err("the text transcript differs between two runs".into());
    }
    golden("transcript.txt", &text)?;
    for (name, args, code) in SCRIPT {
        let args = json_args(args);
        let (a, b) = (polyldc(&args), polyldc(&args));
        if a.stdout != b.stdout || a.code != b.code {
            return Err(format!("{name}: two runs differ"));
        }
        if a.code != *code {
            return Err(format!("{name}: exit code {} instead of {code}", a.code));
        }
        golden(&format!("{name}.json"), &a.stdout)?;
    }
    Ok(SCRIPT.len())
}
