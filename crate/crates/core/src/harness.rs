//! Running instances end to end: engine dispatch, optional exact comparison,
//! validation and the text report.

use std::fmt::{self, Write as _};
use std::path::Path;
use std::str::FromStr;
use std::time::Instant;

use serde::Serialize;

use crate::arborescence::Arborescence;
use crate::closure::{build_metric_closure, build_priority_closure, build_two_cost_closure};
use crate::constrained::{rg_dc_run, rg_dl_run, rg_pr_run, ConstrainedSubproblem};
use crate::error::{Error, Result};
use crate::exact::{brute_force_constrained, brute_force_min_cover, brute_force_sto, Constraint, CoverTarget, OracleBudget};
use crate::greedy::{solve_sto, EngineKind, MetricInstance, SolverConfig};
use crate::instance::{Instance, InstanceKind};
use crate::oracle::{gated_value, rank_oracle, Gate, RewardOracle};
use crate::reductions::{
    shortcut, solve_buy_at_bulk, solve_directed_steiner, solve_polymatroid, solve_priority_steiner, BuyAtBulkInstance,
    CoverSolution, DriverConfig,
};
use crate::validate::{validate, LengthBudget, Requirements};
use crate::VertexSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Problem {
    Sto,
    Dst,
    Polymatroid,
    Bab,
    Priority,
}

impl Problem {
    pub fn is_minimization(self) -> bool {
        self != Problem::Sto
    }
}

impl fmt::Display for Problem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Problem::Sto => "sto",
            Problem::Dst => "dst",
            Problem::Polymatroid => "polymatroid",
            Problem::Bab => "bab",
            Problem::Priority => "priority",
        })
    }
}

impl FromStr for Problem {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "sto" => Problem::Sto,
            "dst" => Problem::Dst,
            "polymatroid" => Problem::Polymatroid,
            "bab" => Problem::Bab,
            "priority" => Problem::Priority,
            _ => return Err(Error::Invalid(format!("unknown problem {s:?}"))),
        })
    }
}

/// Every engine name the harness accepts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Engine {
    Rg,
    RgQp,
    RgFast,
    RgDc,
    RgDl,
    RgPr,
}

impl Engine {
    fn plain(self) -> Option<EngineKind> {
        match self {
            Engine::Rg => Some(EngineKind::Rg),
            Engine::RgQp => Some(EngineKind::RgQp),
            Engine::RgFast => Some(EngineKind::RgFast),
            _ => None,
        }
    }
}

impl fmt::Display for Engine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Engine::Rg => "rg",
            Engine::RgQp => "rg-qp",
            Engine::RgFast => "rg-fast",
            Engine::RgDc => "rg-dc",
            Engine::RgDl => "rg-dl",
            Engine::RgPr => "rg-pr",
        })
    }
}

impl FromStr for Engine {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "rg" => Engine::Rg,
            "rg-qp" => Engine::RgQp,
            "rg-fast" => Engine::RgFast,
            "rg-dc" => Engine::RgDc,
            "rg-dl" => Engine::RgDl,
            "rg-pr" => Engine::RgPr,
            _ => return Err(Error::Invalid(format!("unknown engine {s:?}"))),
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SolveOptions {
    pub engine: Option<Engine>,
    pub problem: Option<Problem>,
    pub depth: Option<usize>,
    pub epsilon: f64,
    pub block: Option<usize>,
    pub workers: usize,
    /// Recorded in the report; the engines themselves are deterministic.
    pub seed: u64,
    pub oracle: bool,
    pub oracle_budget: OracleBudget,
    /// Leave wall time out of the report.
    pub no_time: bool,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            engine: None,
            problem: None,
            depth: None,
            epsilon: 1.0,
            block: None,
            workers: 1,
            seed: 0,
            oracle: false,
            oracle_budget: OracleBudget::from_env(),
            no_time: false,
        }
    }
}

/// Problem implied by the instance header.
pub fn default_problem(inst: &Instance) -> Problem {
    match inst.kind {
        InstanceKind::Bab => Problem::Bab,
        _ => Problem::Sto,
    }
}

/// Engine implied by the instance and problem.
pub fn default_engine(inst: &Instance, problem: Problem) -> Engine {
    match (problem, inst.kind) {
        (Problem::Sto, InstanceKind::Stolc) if inst.length_budget.is_some() => Engine::RgDc,
        (Problem::Sto, InstanceKind::Stolc) => Engine::RgDl,
        (Problem::Sto, InstanceKind::Prio) => Engine::RgPr,
        (Problem::Sto, _) => Engine::Rg,
        (Problem::Bab, _) => Engine::RgDc,
        (Problem::Priority, _) => Engine::RgPr,
        _ => Engine::RgQp,
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RunReport {
    pub problem: Problem,
    pub engine: Engine,
    pub depth: usize,
    pub block: Option<usize>,
    /// Reward collected (maximisation only).
    pub value: Option<u64>,
    pub cost: u64,
    /// Cost plus terminal path lengths (buy-at-bulk) or cost (other covers).
    pub objective: Option<u64>,
    pub opt: Option<u64>,
    pub ratio: Option<f64>,
    /// Why the oracle produced nothing, when it was asked to run.
    pub oracle_note: Option<String>,
    pub iterations: Option<usize>,
    pub rounds: Option<usize>,
    pub budget: u64,
    pub subproblems: u64,
    pub frames: u64,
    pub invariant_violations: u64,
    pub valid: bool,
    pub seed: u64,
    pub wall_ms: Option<u128>,
    #[serde(skip)]
    pub tree: Arborescence,
}

impl RunReport {
    /// `key=value` lines in a fixed order.
    pub fn to_lines(&self) -> String {
        let mut s = String::new();
        let mut kv = |k: &str, v: String| {
            let _ = writeln!(s, "{k}={v}");
        };
        kv("problem", self.problem.to_string());
        kv("engine", self.engine.to_string());
        kv("depth", self.depth.to_string());
        if let Some(b) = self.block {
            kv("block", b.to_string());
        }
        if let Some(v) = self.value {
            kv("value", v.to_string());
        }
        kv("cost", self.cost.to_string());
        if let Some(o) = self.objective {
            kv("objective", o.to_string());
        }
        kv("budget", self.budget.to_string());
        if let Some(o) = self.opt {
            kv("opt", o.to_string());
        }
        if let Some(r) = self.ratio {
            kv("ratio", format!("{r:.6}"));
        }
        if let Some(n) = &self.oracle_note {
            kv("oracle", n.clone());
        }
        if let Some(i) = self.iterations {
            kv("iterations", i.to_string());
        }
        if let Some(r) = self.rounds {
            kv("rounds", r.to_string());
        }
        kv("subproblems", self.subproblems.to_string());
        kv("frames", self.frames.to_string());
        kv("invariant_violations", self.invariant_violations.to_string());
        kv("valid", self.valid.to_string());
        kv("seed", self.seed.to_string());
        if let Some(w) = self.wall_ms {
            kv("wall_ms", w.to_string());
        }
        s
    }

    /// The same fields as one JSON object on a single line.
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serialises")
    }

    /// `edge u v` lines of the reported tree.
    pub fn edge_lines(&self) -> String {
        self.tree.edges().iter().map(|(c, e)| format!("edge {} {}\n", e.parent, c)).collect()
    }
}

/// `OPT / value` for maximisation and `objective / OPT` for minimisation.
pub fn ratio(problem: Problem, achieved: u64, opt: u64) -> f64 {
    let (num, den) = if problem.is_minimization() { (achieved, opt) } else { (opt, achieved) };
    match (num, den) {
        (0, _) => 1.0,
        (_, 0) => f64::INFINITY,
        (a, b) => a as f64 / b as f64,
    }
}

/// Process exit code for an error: 1 for malformed input, 2 for infeasible
/// or unreachable targets.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse { .. } | Error::Invalid(_) | Error::NotConcave(_) => 1,
        _ => 2,
    }
}

fn solver_config(opts: &SolveOptions, kind: EngineKind) -> SolverConfig {
    SolverConfig {
        engine: kind,
        epsilon: opts.epsilon,
        depth: opts.depth,
        block: opts.block,
        workers: opts.workers.max(1),
        ..SolverConfig::default()
    }
}

fn check_ids(inst: &Instance) -> Result<()> {
    if inst.n == 0 || inst.n > crate::set::MAX_VERTICES || inst.root >= inst.n {
        return Err(Error::Invalid("vertex count or root out of range".into()));
    }
    Ok(())
}

/// Longest simple path bound used as the closure length cap.
fn length_cap(inst: &Instance) -> u64 {
    inst.graph().total_length()
}

/// Solves one instance and returns the report (which carries the tree).
pub fn solve(inst: &Instance, opts: &SolveOptions) -> Result<RunReport> {
    check_ids(inst)?;
    let problem = opts.problem.unwrap_or_else(|| default_problem(inst));
    let engine = opts.engine.unwrap_or_else(|| default_engine(inst, problem));
    let start = Instant::now();
    let mut report = match problem {
        Problem::Sto => RunReport { budget: inst.budget, ..solve_max(inst, engine, opts)? },
        _ => solve_cover(inst, problem, engine, opts)?,
    };
    report.seed = opts.seed;
    report.wall_ms = (!opts.no_time).then(|| start.elapsed().as_millis());
    Ok(report)
}

fn blank(problem: Problem, engine: Engine, tree: Arborescence) -> RunReport {
    RunReport {
        problem,
        engine,
        depth: 0,
        block: None,
        value: None,
        cost: tree.cost(),
        objective: None,
        opt: None,
        ratio: None,
        oracle_note: None,
        iterations: None,
        rounds: None,
        budget: 0,
        subproblems: 0,
        frames: 0,
        invariant_violations: 0,
        valid: false,
        seed: 0,
        wall_ms: None,
        tree,
    }
}

fn record_oracle(report: &mut RunReport, achieved: u64, opt: Result<u64>) {
    match opt {
        Ok(o) => {
            report.opt = Some(o);
            report.ratio = Some(ratio(report.problem, achieved, o));
        }
        Err(e) => report.oracle_note = Some(e.to_string()),
    }
}

fn solve_max(inst: &Instance, engine: Engine, opts: &SolveOptions) -> Result<RunReport> {
    let g = inst.graph();
    let n = inst.n;
    let linear = inst.linear_rewards();
    let rank = inst.matroid.as_ref().map(|m| rank_oracle(&m.build(n, inst.root)));
    let f: &dyn RewardOracle = match &rank {
        Some(r) => r,
        None => &linear,
    };
    let base = solver_config(opts, engine.plain().unwrap_or(EngineKind::Rg));
    let d = base.depth_for(n);
    let ob = &opts.oracle_budget;
    let report = match engine {
        Engine::Rg | Engine::RgQp | Engine::RgFast => {
            let m = MetricInstance::from_graph(&g, inst.root, inst.budget)?;
            let (tree, sr) = solve_sto(&m, f, &base);
            let mut r = blank(Problem::Sto, engine, tree);
            r.depth = sr.depth;
            r.block = sr.block;
            r.value = Some(sr.value);
            r.subproblems = sr.stats.calls;
            r.frames = sr.stats.frames;
            r.invariant_violations = sr.stats.invariant_violations;
            let req = Requirements { root: inst.root, budget: Some(inst.budget), metric: Some(m.cost()), ..Default::default() };
            r.valid = validate(&r.tree, &req).is_ok();
            if opts.oracle {
                record_oracle(&mut r, sr.value, brute_force_sto(m.cost(), inst.root, f, inst.budget, ob).map(|x| x.0));
            }
            r
        }
        Engine::RgDc => {
            let l = inst.length_budget.unwrap_or(0);
            let tc = build_two_cost_closure(&g, l);
            let sub = ConstrainedSubproblem::top(inst.root, inst.budget, l, d);
            let run = rg_dc_run(&tc, f, &sub, &base);
            let tree = run.solution.into_tree().unwrap_or_else(|| Arborescence::single(inst.root));
            let value = f.eval(tree.vertices());
            let mut r = blank(Problem::Sto, engine, tree);
            r.depth = d;
            r.value = Some(value);
            r.subproblems = run.stats.calls;
            r.frames = run.stats.frames;
            r.invariant_violations = run.stats.invariant_violations;
            let req = Requirements {
                root: inst.root,
                budget: Some(inst.budget),
                two_cost: Some(&tc),
                length_budget: Some(LengthBudget { limit: l, offset: 0, charged: VertexSet::full(n) }),
                ..Default::default()
            };
            r.valid = validate(&r.tree, &req).is_ok();
            if opts.oracle {
                let c = Constraint::Length { closure: &tc, length_budget: l, charged: VertexSet::full(n) };
                record_oracle(&mut r, value, brute_force_constrained(&c, inst.root, f, inst.budget, ob).map(|x| x.0));
            }
            r
        }
        Engine::RgDl => {
            let deadlines = inst.deadline_table();
            let tc = build_two_cost_closure(&g, length_cap(inst));
            let sub = ConstrainedSubproblem::top(inst.root, inst.budget, 0, d);
            let run = rg_dl_run(&tc, f, &deadlines, &sub, &base);
            let tree = run.solution.into_tree().unwrap_or_else(|| Arborescence::single(inst.root));
            let value = gated_value(f, &tree, &Gate::deadlines(deadlines.clone()));
            let mut r = blank(Problem::Sto, engine, tree);
            r.depth = d;
            r.value = Some(value);
            r.subproblems = run.stats.calls;
            r.frames = run.stats.frames;
            r.invariant_violations = run.stats.invariant_violations;
            let req = Requirements { root: inst.root, budget: Some(inst.budget), two_cost: Some(&tc), ..Default::default() };
            r.valid = validate(&r.tree, &req).is_ok();
            if opts.oracle {
                let c = Constraint::Deadline { closure: &tc, deadlines: &deadlines };
                record_oracle(&mut r, value, brute_force_constrained(&c, inst.root, f, inst.budget, ob).map(|x| x.0));
            }
            r
        }
        Engine::RgPr => {
            let pc = build_priority_closure(&g, inst.max_priority());
            let requirement = inst.requirements();
            let sub = ConstrainedSubproblem::top(inst.root, inst.budget, 0, d);
            let run = rg_pr_run(&pc, f, &requirement, &sub, &base);
            let tree = run.solution.into_tree().unwrap_or_else(|| Arborescence::single(inst.root));
            let value = gated_value(f, &tree, &Gate::priorities(requirement.clone()));
            let mut r = blank(Problem::Sto, engine, tree);
            r.depth = d;
            r.value = Some(value);
            r.subproblems = run.stats.calls;
            r.frames = run.stats.frames;
            r.invariant_violations = run.stats.invariant_violations;
            let req =
                Requirements { root: inst.root, budget: Some(inst.budget), priority_levels: Some(&pc), ..Default::default() };
            r.valid = validate(&r.tree, &req).is_ok();
            if opts.oracle {
                let c = Constraint::Priority { closure: &pc, requirement: &requirement };
                record_oracle(&mut r, value, brute_force_constrained(&c, inst.root, f, inst.budget, ob).map(|x| x.0));
            }
            r
        }
    };
    Ok(report)
}

fn solve_cover(inst: &Instance, problem: Problem, engine: Engine, opts: &SolveOptions) -> Result<RunReport> {
    let g = inst.graph();
    let terminals = inst.terminal_set().without(inst.root);
    let ob = &opts.oracle_budget;
    let usage = || Error::Invalid(format!("engine {engine} cannot drive problem {problem}"));
    let plain_cfg = |e: Engine| -> Result<DriverConfig> {
        Ok(DriverConfig { solver: solver_config(opts, e.plain().ok_or_else(usage)?) })
    };
    let finish = |sol: CoverSolution, valid: bool| {
        let stats = sol.stats();
        let mut r = blank(problem, engine, sol.tree);
        r.depth = sol.depth;
        r.objective = Some(sol.objective);
        r.budget = sol.budget;
        r.iterations = Some(sol.iterations.len());
        r.rounds = Some(sol.rounds);
        r.subproblems = stats.calls;
        r.frames = stats.frames;
        r.invariant_violations = stats.invariant_violations;
        r.valid = valid;
        r
    };
    let mut r = match problem {
        Problem::Dst | Problem::Polymatroid => {
            let mc = build_metric_closure(&g);
            let cfg = plain_cfg(engine)?;
            let (sol, target_matroid) = if problem == Problem::Dst {
                (solve_directed_steiner(&mc.matrix, inst.root, terminals, &cfg)?, None)
            } else {
                let spec = inst.matroid.as_ref().ok_or_else(|| Error::Invalid("polymatroid problem needs a matroid line".into()))?;
                let m = spec.build(inst.n, inst.root);
                (solve_polymatroid(&mc.matrix, inst.root, &m, &cfg)?, Some(m))
            };
            let spans = if target_matroid.is_some() { VertexSet::EMPTY } else { terminals };
            let req = Requirements { root: inst.root, spans, metric: Some(&mc.matrix), ..Default::default() };
            let mut valid = validate(&sol.tree, &req).is_ok();
            if let Some(m) = &target_matroid {
                valid &= m.rank(sol.tree.vertices()) == m.full_rank();
            }
            let achieved = sol.objective;
            let mut r = finish(sol, valid);
            if opts.oracle {
                let target = match &target_matroid {
                    Some(m) => CoverTarget::Polymatroid { cost: &mc.matrix, matroid: m },
                    None => CoverTarget::Steiner { cost: &mc.matrix, terminals },
                };
                record_oracle(&mut r, achieved, cover_opt(&target, inst.root, ob));
            }
            r
        }
        Problem::Bab => {
            if engine != Engine::RgDc {
                return Err(usage());
            }
            let bi = BuyAtBulkInstance { graph: g.clone(), root: inst.root, terminals };
            let cfg = DriverConfig { solver: solver_config(opts, EngineKind::Rg) };
            let sol = solve_buy_at_bulk(&bi, &cfg)?;
            let req = Requirements { root: inst.root, spans: terminals, graph: Some(&g), ..Default::default() };
            let valid = validate(&sol.tree, &req).is_ok();
            let achieved = sol.objective;
            let mut r = finish(sol, valid);
            if opts.oracle {
                let tc = build_two_cost_closure(&g, length_cap(inst));
                record_oracle(&mut r, achieved, cover_opt(&CoverTarget::BuyAtBulk { closure: &tc, terminals }, inst.root, ob));
            }
            r
        }
        Problem::Priority => {
            if engine != Engine::RgPr {
                return Err(usage());
            }
            let pc = build_priority_closure(&g, inst.max_priority());
            let requirement = inst.requirements();
            let cfg = DriverConfig { solver: solver_config(opts, EngineKind::Rg) };
            let sol = solve_priority_steiner(&pc, inst.root, terminals, &requirement, &cfg)?;
            let req = Requirements {
                root: inst.root,
                spans: terminals,
                priority_levels: Some(&pc),
                priority_floors: terminals.iter().map(|t| (t, requirement[t])).collect(),
                ..Default::default()
            };
            let valid = validate(&sol.tree, &req).is_ok();
            let achieved = sol.objective;
            let mut r = finish(sol, valid);
            if opts.oracle {
                let target = CoverTarget::Priority { closure: &pc, terminals, requirement: &requirement };
                record_oracle(&mut r, achieved, cover_opt(&target, inst.root, ob));
            }
            r
        }
        Problem::Sto => unreachable!("maximisation handled separately"),
    };
    // reported edges skip pass-through non-terminals; lengths still add up
    if matches!(problem, Problem::Dst | Problem::Priority) {
        r.tree = shortcut(&r.tree, terminals);
    }
    Ok(r)
}

fn cover_opt(target: &CoverTarget, root: usize, ob: &OracleBudget) -> Result<u64> {
    brute_force_min_cover(target, root, ob)?.map(|x| x.0).ok_or_else(|| Error::Invalid("no covering tree exists".into()))
}

/// One row of a bench table.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BenchRow {
    pub instance: String,
    pub engine: Engine,
    pub outcome: std::result::Result<RunReport, String>,
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct BenchTable {
    pub rows: Vec<BenchRow>,
}

impl BenchTable {
    /// Geometric mean of the finite ratios; `None` without any.
    pub fn geometric_mean_ratio(&self) -> Option<f64> {
        let rs: Vec<f64> = self
            .rows
            .iter()
            .filter_map(|r| r.outcome.as_ref().ok().and_then(|x| x.ratio))
            .filter(|r| r.is_finite() && *r > 0.0)
            .collect();
        (!rs.is_empty()).then(|| (rs.iter().map(|r| r.ln()).sum::<f64>() / rs.len() as f64).exp())
    }

    /// Mean subproblem count per engine over successful rows.
    pub fn mean_subproblems(&self, engine: Engine) -> Option<f64> {
        let xs: Vec<u64> = self
            .rows
            .iter()
            .filter(|r| r.engine == engine)
            .filter_map(|r| r.outcome.as_ref().ok().map(|x| x.subproblems))
            .collect();
        (!xs.is_empty()).then(|| xs.iter().sum::<u64>() as f64 / xs.len() as f64)
    }

    pub fn render(&self, with_time: bool) -> String {
        let mut s = String::new();
        let _ = write!(s, "{:<28} {:<8} {:>8} {:>8} {:>8} {:>9} {:>6} {:>11}", "instance", "engine", "result", "opt", "ratio", "bound_d", "valid", "subproblems");
        if with_time {
            let _ = write!(s, " {:>8}", "wall_ms");
        }
        s.push('\n');
        for row in &self.rows {
            match &row.outcome {
                Ok(r) => {
                    let result = r.value.or(r.objective).unwrap_or(r.cost);
                    let _ = write!(
                        s,
                        "{:<28} {:<8} {:>8} {:>8} {:>8} {:>9} {:>6} {:>11}",
                        row.instance,
                        row.engine.to_string(),
                        result,
                        r.opt.map_or("-".into(), |o| o.to_string()),
                        r.ratio.map_or("-".into(), |x| format!("{x:.3}")),
                        r.depth,
                        r.valid,
                        r.subproblems
                    );
                    if with_time {
                        let _ = write!(s, " {:>8}", r.wall_ms.unwrap_or(0));
                    }
                }
                Err(e) => {
                    let _ = write!(s, "{:<28} {:<8} failed: {e}", row.instance, row.engine.to_string());
                }
            }
            s.push('\n');
        }
        match self.geometric_mean_ratio() {
            Some(g) => {
                let _ = writeln!(s, "geomean_ratio={g:.6}");
            }
            None => s.push_str("geomean_ratio=-\n"),
        }
        s
    }
}

/// Engines a bench run tries on an instance.
pub fn bench_engines(inst: &Instance) -> Vec<Engine> {
    match inst.kind {
        InstanceKind::Sto => vec![Engine::Rg, Engine::RgQp, Engine::RgFast],
        _ => vec![default_engine(inst, default_problem(inst))],
    }
}

/// Runs every `*.txt` instance in `dir` (sorted by file name) with the
/// exact oracle and every applicable engine.
pub fn bench(dir: &Path, opts: &SolveOptions) -> Result<BenchTable> {
    let mut files: Vec<_> = std::fs::read_dir(dir)
        .map_err(|e| Error::Invalid(format!("cannot read suite {}: {e}", dir.display())))?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "txt"))
        .collect();
    files.sort();
    let mut table = BenchTable::default();
    for path in files {
        let name = path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
        let parsed = std::fs::read_to_string(&path)
            .map_err(|e| Error::Invalid(e.to_string()))
            .and_then(|t| Instance::parse(&t));
        let inst = match parsed {
            Ok(i) => i,
            Err(e) => {
                table.rows.push(BenchRow { instance: name, engine: Engine::Rg, outcome: Err(e.to_string()) });
                continue;
            }
        };
        for engine in bench_engines(&inst) {
            let o = SolveOptions { engine: Some(engine), oracle: true, ..opts.clone() };
            let outcome = solve(&inst, &o).map_err(|e| e.to_string());
            table.rows.push(BenchRow { instance: name.clone(), engine, outcome });
        }
    }
    Ok(table)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_vertex_instance_reports_value() {
        let inst = Instance::parse("sto v1\nn 2\nroot 0\nbudget 3\nedge 0 1 2\nreward 1 5\n").unwrap();
        let r = solve(&inst, &SolveOptions { no_time: true, oracle: true, ..Default::default() }).unwrap();
        assert_eq!(r.value, Some(5));
        assert_eq!(r.ratio, Some(1.0));
        assert!(r.to_lines().contains("value=5\n"));
        assert!(!r.to_lines().contains("wall_ms"));
    }

    #[test]
    fn unreachable_terminal_exit_code() {
        let inst = Instance::parse("sto v1\nn 3\nroot 0\nbudget 3\nedge 0 1 2\nterminal 2\n").unwrap();
        let o = SolveOptions { problem: Some(Problem::Dst), ..Default::default() };
        let e = solve(&inst, &o).unwrap_err();
        assert_eq!(e, Error::UnreachableTerminal(2));
        assert_eq!(exit_code(&e), 2);
    }

    #[test]
    fn ratio_direction() {
        assert_eq!(ratio(Problem::Sto, 2, 4), 2.0);
        assert_eq!(ratio(Problem::Dst, 6, 4), 1.5);
    }
}
