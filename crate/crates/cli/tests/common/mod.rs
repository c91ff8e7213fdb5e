#![allow(dead_code)]

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

pub fn golden_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

pub fn run_cli(args: &[&str], stdin: Option<&str>) -> Output {
    use std::io::Write;
    use std::process::Stdio;
    let mut child = Command::new(env!("CARGO_BIN_EXE_cp1moduli"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn cli");
    let mut pipe = child.stdin.take().expect("stdin");
    pipe.write_all(stdin.unwrap_or("").as_bytes()).expect("write stdin");
    drop(pipe);
    child.wait_with_output().expect("cli output")
}

/// `(case, matched, detail)` for every `*.args` file in the golden directory.
/// A sibling `.json` is passed with `--file`; stdout must equal the `.out`
/// file byte for byte.
pub fn check_goldens() -> Vec<(String, bool, String)> {
    let dir = golden_dir();
    let mut cases: Vec<PathBuf> = std::fs::read_dir(&dir)
        .expect("golden dir")
        .map(|e| e.expect("entry").path())
        .filter(|p| p.extension().is_some_and(|e| e == "args"))
        .collect();
    cases.sort();
    cases
        .into_iter()
        .map(|args_path| {
            let name = args_path.file_stem().unwrap().to_string_lossy().into_owned();
            let args_text = std::fs::read_to_string(&args_path).unwrap();
            let mut args: Vec<String> = args_text.split_whitespace().map(String::from).collect();
            let input = dir.join(format!("{name}.json"));
            if input.exists() {
                args.push("--file".into());
                args.push(input.to_string_lossy().into_owned());
            }
            let expected = std::fs::read(dir.join(format!("{name}.out"))).unwrap_or_default();
            let refs: Vec<&str> = args.iter().map(String::as_str).collect();
            let out = run_cli(&refs, None);
            let ok = out.status.success() && out.stdout == expected;
            let detail = if ok {
                String::new()
            } else {
                format!(
                    "status {:?}, got {:?}, stderr {:?}",
                    out.status.code(),
                    String::from_utf8_lossy(&out.stdout),
                    String::from_utf8_lossy(&out.stderr)
                )
            };
            (name, ok, detail)
        })
        .collect()
}
