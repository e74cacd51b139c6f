use std::path::PathBuf;
use std::process::ExitCode;

use arbor::generate::{generate, Family, GenParams};
use arbor::harness::{self, bench, exit_code, solve, BenchRow, BenchTable, Engine, Problem, SolveOptions};
use arbor::instance::{Instance, InstanceKind};
use clap::{Args, Parser, Subcommand};

const USAGE: u8 = 64;

#[derive(Parser)]
#[command(name = "arbor", version, about = "Budgeted tree orienteering and directed network design")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Solve one instance file.
    Solve {
        file: PathBuf,
        #[command(flatten)]
        run: RunArgs,
        /// Write tree edges as `edge u v` lines.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Also print the report as one JSON line.
        #[arg(long)]
        json: bool,
    },
    /// Emit a seeded random instance.
    Gen {
        family: Family,
        #[arg(long, default_value_t = 6)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        cost_min: u64,
        #[arg(long, default_value_t = 20)]
        cost_max: u64,
        #[arg(long, default_value_t = 0)]
        length_min: u64,
        #[arg(long, default_value_t = 4)]
        length_max: u64,
        #[arg(long, default_value_t = 2)]
        levels: u32,
        /// Terminal count; 0 draws one.
        #[arg(long, default_value_t = 0)]
        terminals: usize,
        /// Label a two-cost instance as buy-at-bulk.
        #[arg(long)]
        bab: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print the exact optimum next to the engine result.
    Oracle {
        file: PathBuf,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Run every applicable engine on one instance against the oracle.
    Compare {
        file: PathBuf,
        #[arg(long)]
        no_time: bool,
    },
    /// Run a directory of instances against the oracle.
    Bench {
        dir: PathBuf,
        #[arg(long)]
        no_time: bool,
    },
}

#[derive(Args)]
struct RunArgs {
    #[arg(long)]
    engine: Option<Engine>,
    #[arg(long)]
    problem: Option<Problem>,
    #[arg(long)]
    depth: Option<usize>,
    #[arg(long, default_value_t = 1.0)]
    epsilon: f64,
    #[arg(long)]
    block: Option<usize>,
    #[arg(long, default_value_t = 1)]
    workers: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    oracle: bool,
    #[arg(long)]
    no_time: bool,
}

impl RunArgs {
    fn options(&self) -> SolveOptions {
        SolveOptions {
            engine: self.engine,
            problem: self.problem,
            depth: self.depth,
            epsilon: self.epsilon,
            block: self.block,
            workers: self.workers,
            seed: self.seed,
            oracle: self.oracle,
            no_time: self.no_time,
            ..SolveOptions::default()
        }
    }
}

fn fail(e: arbor::Error) -> ExitCode {
    eprintln!("error: {e}");
    ExitCode::from(exit_code(&e) as u8)
}

fn read_instance(path: &PathBuf) -> Result<Instance, ExitCode> {
    let text = std::fs::read_to_string(path).map_err(|e| {
        eprintln!("error: cannot read {}: {e}", path.display());
        ExitCode::from(1)
    })?;
    Instance::parse(&text).map_err(fail)
}

fn write_or_print(out: Option<&PathBuf>, text: &str) -> ExitCode {
    match out {
        Some(p) => match std::fs::write(p, text) {
            Ok(()) => ExitCode::SUCCESS,
            Err(e) => {
                eprintln!("error: cannot write {}: {e}", p.display());
                ExitCode::from(1)
            }
        },
        None => {
            print!("{text}");
            ExitCode::SUCCESS
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(USAGE) } else { ExitCode::SUCCESS };
        }
    };
    match cli.cmd {
        Cmd::Solve { file, run, out, json } => {
            let inst = match read_instance(&file) {
                Ok(i) => i,
                Err(c) => return c,
            };
            match solve(&inst, &run.options()) {
                Ok(r) => {
                    print!("{}", r.to_lines());
                    if json {
                        println!("{}", r.to_json());
                    }
                    match out {
                        Some(p) => write_or_print(Some(&p), &r.edge_lines()),
                        None => ExitCode::SUCCESS,
                    }
                }
                Err(e) => fail(e),
            }
        }
        Cmd::Gen { family, n, seed, cost_min, cost_max, length_min, length_max, levels, terminals, bab, out } => {
            if !(2..=64).contains(&n) || cost_min > cost_max || length_min > length_max {
                eprintln!("error: need 2 <= n <= 64 and min <= max for every range");
                return ExitCode::from(USAGE);
            }
            let p = GenParams { n, seed, cost: (cost_min, cost_max), length: (length_min, length_max), levels, terminals, ..GenParams::default() };
            let mut inst = generate(family, &p);
            if bab {
                inst.kind = InstanceKind::Bab;
            }
            write_or_print(out.as_ref(), &inst.emit())
        }
        Cmd::Oracle { file, run } => {
            let inst = match read_instance(&file) {
                Ok(i) => i,
                Err(c) => return c,
            };
            let opts = SolveOptions { oracle: true, ..run.options() };
            match solve(&inst, &opts) {
                Ok(r) => {
                    match (r.opt, &r.oracle_note) {
                        (Some(o), _) => println!("opt={o}"),
                        (None, Some(n)) => println!("oracle={n}"),
                        (None, None) => {}
                    }
                    print!("{}", r.to_lines());
                    ExitCode::SUCCESS
                }
                Err(e) => fail(e),
            }
        }
        Cmd::Compare { file, no_time } => {
            let inst = match read_instance(&file) {
                Ok(i) => i,
                Err(c) => return c,
            };
            let name = file.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
            let mut table = BenchTable::default();
            for engine in harness::bench_engines(&inst) {
                let o = SolveOptions { engine: Some(engine), oracle: true, no_time, ..SolveOptions::default() };
                let outcome = solve(&inst, &o).map_err(|e| e.to_string());
                table.rows.push(BenchRow { instance: name.clone(), engine, outcome });
            }
            print!("{}", table.render(!no_time));
            ExitCode::SUCCESS
        }
        Cmd::Bench { dir, no_time } => match bench(&dir, &SolveOptions { no_time, ..SolveOptions::default() }) {
            Ok(t) => {
                print!("{}", t.render(!no_time));
                ExitCode::SUCCESS
            }
            Err(e) => fail(e),
        },
    }
}
