// Every `console` block in the README is run in-process and must reproduce the
// output shown there exactly.

use std::path::{Path, PathBuf};

use nucleus_lab::cli;

struct Command {
    line: String,
    args: Vec<String>,
    expected: String,
}

fn workspace_root() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../..")
}

// Whitespace splitting with double quotes grouping a single argument.
fn split_args(line: &str) -> Vec<String> {
    let mut args = Vec::new();
    let mut cur = String::new();
    let (mut quoted, mut started) = (false, false);
    for ch in line.chars() {
        match ch {
            '"' => {
                quoted = !quoted;
                started = true;
            }
            c if c.is_whitespace() && !quoted => {
                if started {
                    args.push(std::mem::take(&mut cur));
                    started = false;
                }
            }
            c => {
                cur.push(c);
                started = true;
            }
        }
    }
    if started {
        args.push(cur);
    }
    args
}

fn commands(readme: &str) -> Vec<Command> {
    let mut out: Vec<Command> = Vec::new();
    let mut in_console = false;
    for line in readme.lines() {
        if !in_console {
            in_console = line.trim() == "```console";
            continue;
        }
        if line.trim() == "```" {
            in_console = false;
        } else if let Some(cmd) = line.strip_prefix("$ ") {
            out.push(Command { line: cmd.to_string(), args: split_args(cmd), expected: String::new() });
        } else {
            let last = out.last_mut().expect("output before any command");
            last.expected.push_str(line);
            last.expected.push('\n');
        }
    }
    out
}

#[test]
fn readme_commands_match_pinned_output() {
    let root = workspace_root();
    let readme = std::fs::read_to_string(root.join("README.md")).expect("README.md");
    let cmds = commands(&readme);
    assert!(cmds.len() >= 10, "only {} commands found", cmds.len());
    for cmd in cmds {
        assert_eq!(cmd.args[0], "nucleus-lab", "{}", cmd.line);
        // relative paths in the README are relative to the workspace root
        let args: Vec<String> = cmd
            .args
            .iter()
            .map(|a| {
                let p = root.join(a);
                if a.contains('/') && p.exists() { p.to_string_lossy().into_owned() } else { a.clone() }
            })
            .collect();
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = cli::run(args, &mut out, &mut err);
        assert_eq!(code, 0, "{}: {}", cmd.line, String::from_utf8_lossy(&err));
        assert_eq!(String::from_utf8_lossy(&out), cmd.expected, "{}", cmd.line);
    }
}

#[test]
fn quoted_arguments_stay_together() {
    assert_eq!(split_args(r#"els --graph "0 1;1 2" --k 2"#), ["els", "--graph", "0 1;1 2", "--k", "2"]);
}
