use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use skew_invariants::cli::{self, Command, Context, Problem};
use skew_invariants::Error;

/// Analyze a finite group of graded automorphisms described by a JSON document.
#[derive(Parser, Debug)]
#[command(name = "analyze", version)]
struct Args {
    /// Problem document (JSON). Optional for `mgroup` and `compare-orders`
    /// without `input`.
    file: Option<PathBuf>,
    /// Command to run; repeatable. Defaults to the document's
    /// `options.commands`.
    #[arg(long = "cmd")]
    cmd: Vec<String>,
    /// Largest degree for series and generator checks.
    #[arg(long, env = "SKEWINV_MAX_DEGREE")]
    max_degree: Option<usize>,
    /// Largest group order allowed during closure.
    #[arg(long, env = "SKEWINV_MAX_ORDER")]
    max_order: Option<usize>,
    /// Print JSON instead of text.
    #[arg(long)]
    json: bool,
}

fn run(args: &Args) -> Result<String, Error> {
    let cmds: Vec<Command> = args.cmd.iter().map(|c| c.parse()).collect::<Result<_, _>>()?;
    let problem = match &args.file {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Error::invalid(format!("cannot read {}: {e}", path.display())))?;
            let spec = cli::parse_spec(&text)?;
            Some(Problem::from_spec(spec, args.max_degree, args.max_order)?)
        }
        None => None,
    };
    let cmds = if cmds.is_empty() {
        let listed = problem.as_ref().map(|p| p.spec.options.commands.clone()).unwrap_or_default();
        if listed.is_empty() {
            return Err(Error::invalid("no command given; pass --cmd or list options.commands"));
        }
        listed.iter().map(|c| c.parse()).collect::<Result<_, _>>()?
    } else {
        cmds
    };
    if problem.is_none() {
        if let Some(c) = cmds.iter().find(|c| c.needs_input()) {
            return Err(Error::invalid(format!("{c:?} needs an input document")));
        }
    }
    let ctx = Context {
        max_degree: problem
            .as_ref()
            .map(|p| p.max_degree)
            .or(args.max_degree)
            .unwrap_or(skew_invariants::series::DEFAULT_MAX_DEGREE),
        max_order: problem
            .as_ref()
            .map(|p| p.max_order)
            .or(args.max_order)
            .unwrap_or(skew_invariants::autgroup::DEFAULT_GROUP_CAP),
        problem,
    };
    let reports = cli::run_all(&ctx, &cmds)?;
    Ok(if args.json {
        let v: Vec<_> = reports.iter().map(|r| r.to_json()).collect();
        let out = if v.len() == 1 { v[0].clone() } else { v.into() };
        serde_json::to_string_pretty(&out).expect("reports serialize") + "\n"
    } else {
        reports.iter().map(|r| r.to_text()).collect::<Vec<_>>().join("\n")
    })
}

fn main() -> ExitCode {
    let args = Args::parse();
    match run(&args) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(cli::exit_code(&e) as u8)
        }
    }
}
