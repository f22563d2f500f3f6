//! Parses a JSON problem document and runs commands on it, as the `analyze`
//! binary does.

use skew_invariants::cli::{parse_spec, run_command, Command, Context, Problem};

const DOC: &str = r#"{
  "schema_version": 1,
  "field": {"root_of_unity_order": 4},
  "ring": {"kind": "skew", "n": 2, "default": "-1"},
  "generators": [
    {"type": "tau", "s": 1, "t": 2, "lambda": "1"},
    {"type": "tau", "s": 1, "t": 2, "lambda": {"zeta_exp": 1}}
  ]
}"#;

fn main() -> skew_invariants::Result<()> {
    let problem = Problem::from_spec(parse_spec(DOC)?, Some(8), None)?;
    let ctx = Context { max_degree: problem.max_degree, max_order: problem.max_order, problem: Some(problem) };
    for cmd in ["decide-stc", "hilbert", "invariants", "trace g=2"] {
        let report = run_command(&ctx, &cmd.parse::<Command>()?)?;
        println!("{}", report.to_text());
    }
    let json = run_command(&ctx, &Command::DecideStc)?.to_json();
    println!("{}", serde_json::to_string_pretty(&json).expect("serializable"));
    Ok(())
}
