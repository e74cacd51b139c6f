//! Line-oriented instance files.
//!
//! ```text
//! sto v1            # or stolc v1 | prio v1 | bab v1
//! n 4
//! root 0
//! budget 10
//! lbudget 12        # optional
//! edge 0 1 3        # edge <u> <v> <cost> [<length>] [<priority>]
//! reward 1 5
//! terminal 2        # terminal <v> [<priority>]
//! deadline 1 4      # deadline <v> <length>
//! matroid uniform 2 # or: matroid partition 1,2:1 3:1
//! ```
//!
//! In `prio` files a four-field edge carries a priority, elsewhere a length.

use std::fmt::{self, Write as _};
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{DirectedGraph, Edge};
use crate::oracle::{LinearRewards, Matroid};
use crate::set::VertexSet;
use crate::VertexId;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum InstanceKind {
    Sto,
    Stolc,
    Prio,
    Bab,
}

impl InstanceKind {
    pub fn header(self) -> &'static str {
        match self {
            InstanceKind::Sto => "sto",
            InstanceKind::Stolc => "stolc",
            InstanceKind::Prio => "prio",
            InstanceKind::Bab => "bab",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MatroidSpec {
    Uniform(usize),
    Partition(Vec<(Vec<VertexId>, usize)>),
}

impl MatroidSpec {
    /// The uniform ground set is every vertex except the root.
    pub fn build(&self, n: usize, root: VertexId) -> Matroid {
        match self {
            MatroidSpec::Uniform(k) => Matroid::Uniform { ground: VertexSet::full(n).without(root), k: *k },
            MatroidSpec::Partition(parts) => Matroid::Partition {
                parts: parts.iter().map(|(p, q)| (p.iter().copied().collect(), *q)).collect(),
            },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    pub kind: InstanceKind,
    pub n: usize,
    pub root: VertexId,
    pub budget: u64,
    pub length_budget: Option<u64>,
    pub edges: Vec<Edge>,
    pub rewards: Vec<(VertexId, u64)>,
    pub terminals: Vec<(VertexId, Option<u32>)>,
    pub deadlines: Vec<(VertexId, u64)>,
    pub matroid: Option<MatroidSpec>,
}

impl Instance {
    pub fn new(kind: InstanceKind, n: usize, root: VertexId) -> Self {
        Instance {
            kind,
            n,
            root,
            budget: 0,
            length_budget: None,
            edges: Vec::new(),
            rewards: Vec::new(),
            terminals: Vec::new(),
            deadlines: Vec::new(),
            matroid: None,
        }
    }

    pub fn graph(&self) -> DirectedGraph {
        DirectedGraph::from_edges(self.n, self.edges.iter().copied())
    }

    /// Additive rewards from the `reward` lines (later lines add up).
    pub fn linear_rewards(&self) -> LinearRewards {
        let mut w = vec![0u64; self.n];
        for &(v, p) in &self.rewards {
            w[v] += p;
        }
        LinearRewards::new(w)
    }

    pub fn terminal_set(&self) -> VertexSet {
        self.terminals.iter().map(|t| t.0).collect()
    }

    /// Required priority per vertex (1 for vertices without a terminal line).
    pub fn requirements(&self) -> Vec<u32> {
        let mut r = vec![1u32; self.n];
        for &(v, p) in &self.terminals {
            r[v] = p.unwrap_or(1);
        }
        r
    }

    /// Deadline per vertex (`u64::MAX` when none is given).
    pub fn deadline_table(&self) -> Vec<u64> {
        let mut d = vec![u64::MAX; self.n];
        for &(v, x) in &self.deadlines {
            d[v] = x;
        }
        d
    }

    pub fn max_priority(&self) -> u32 {
        self.edges
            .iter()
            .map(|e| e.priority_or_lowest())
            .chain(self.terminals.iter().map(|t| t.1.unwrap_or(1)))
            .max()
            .unwrap_or(1)
    }

    pub fn parse(text: &str) -> Result<Self> {
        text.parse()
    }

    pub fn emit(&self) -> String {
        self.to_string()
    }
}

fn perr(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

fn num<T: FromStr>(tok: &str, line: usize, what: &str) -> Result<T> {
    tok.parse().map_err(|_| perr(line, format!("bad {what} {tok:?}")))
}

impl FromStr for Instance {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let mut kind = None;
        let mut n: Option<usize> = None;
        let mut root: Option<VertexId> = None;
        let mut budget: Option<u64> = None;
        let mut inst = Instance::new(InstanceKind::Sto, 0, 0);
        // vertex checks wait until n is known
        let mut pending: Vec<(usize, VertexId)> = Vec::new();
        for (ix, raw) in text.lines().enumerate() {
            let line = ix + 1;
            let body = raw.split('#').next().unwrap_or("");
            let toks: Vec<&str> = body.split_whitespace().collect();
            if toks.is_empty() {
                continue;
            }
            if kind.is_none() {
                let k = match toks[0] {
                    "sto" => InstanceKind::Sto,
                    "stolc" => InstanceKind::Stolc,
                    "prio" => InstanceKind::Prio,
                    "bab" => InstanceKind::Bab,
                    other => return Err(perr(line, format!("unknown header {other:?}"))),
                };
                if toks.len() != 2 || toks[1] != "v1" {
                    return Err(perr(line, "unsupported format version"));
                }
                kind = Some(k);
                inst.kind = k;
                continue;
            }
            let want = |k: usize| -> Result<()> {
                if toks.len() == k {
                    Ok(())
                } else {
                    Err(perr(line, format!("{} expects {} fields", toks[0], k - 1)))
                }
            };
            match toks[0] {
                "n" => {
                    want(2)?;
                    if n.is_some() {
                        return Err(perr(line, "duplicate n"));
                    }
                    let v: usize = num(toks[1], line, "vertex count")?;
                    if v == 0 || v > crate::set::MAX_VERTICES {
                        return Err(perr(line, "vertex count must be in 1..=64"));
                    }
                    n = Some(v);
                }
                "root" => {
                    want(2)?;
                    if root.is_some() {
                        return Err(perr(line, "duplicate root"));
                    }
                    let v = num(toks[1], line, "root")?;
                    pending.push((line, v));
                    root = Some(v);
                }
                "budget" => {
                    want(2)?;
                    budget = Some(num(toks[1], line, "budget")?);
                }
                "lbudget" => {
                    want(2)?;
                    inst.length_budget = Some(num(toks[1], line, "length budget")?);
                }
                "edge" => {
                    if !(4..=6).contains(&toks.len()) {
                        return Err(perr(line, "edge expects 3 to 5 fields"));
                    }
                    let u = num(toks[1], line, "vertex")?;
                    let v = num(toks[2], line, "vertex")?;
                    pending.push((line, u));
                    pending.push((line, v));
                    let mut e = Edge::new(u, v, num(toks[3], line, "cost")?);
                    let prio_file = inst.kind == InstanceKind::Prio;
                    match (toks.len(), prio_file) {
                        (5, true) => e = e.with_priority(num(toks[4], line, "priority")?),
                        (5, false) => e = e.with_length(num(toks[4], line, "length")?),
                        (6, _) => {
                            e = e.with_length(num(toks[4], line, "length")?).with_priority(num(toks[5], line, "priority")?)
                        }
                        _ => {}
                    }
                    if e.priority == Some(0) {
                        return Err(perr(line, "priorities start at 1"));
                    }
                    inst.edges.push(e);
                }
                "reward" => {
                    want(3)?;
                    let v = num(toks[1], line, "vertex")?;
                    pending.push((line, v));
                    inst.rewards.push((v, num(toks[2], line, "reward")?));
                }
                "terminal" => {
                    if !(2..=3).contains(&toks.len()) {
                        return Err(perr(line, "terminal expects 1 or 2 fields"));
                    }
                    let v = num(toks[1], line, "vertex")?;
                    pending.push((line, v));
                    let p = match toks.get(2) {
                        Some(t) => {
                            let p: u32 = num(t, line, "priority")?;
                            if p == 0 {
                                return Err(perr(line, "priorities start at 1"));
                            }
                            Some(p)
                        }
                        None => None,
                    };
                    inst.terminals.push((v, p));
                }
                "deadline" => {
                    want(3)?;
                    let v = num(toks[1], line, "vertex")?;
                    pending.push((line, v));
                    inst.deadlines.push((v, num(toks[2], line, "deadline")?));
                }
                "matroid" => {
                    if toks.len() < 3 {
                        return Err(perr(line, "matroid expects a type and parameters"));
                    }
                    let spec = match toks[1] {
                        "uniform" => {
                            want(3)?;
                            MatroidSpec::Uniform(num(toks[2], line, "rank")?)
                        }
                        "partition" => {
                            let mut parts = Vec::new();
                            for part in &toks[2..] {
                                let (vs, q) =
                                    part.split_once(':').ok_or_else(|| perr(line, format!("bad part {part:?}")))?;
                                let mut members = Vec::new();
                                for v in vs.split(',') {
                                    let v = num(v, line, "vertex")?;
                                    pending.push((line, v));
                                    members.push(v);
                                }
                                parts.push((members, num(q, line, "quota")?));
                            }
                            MatroidSpec::Partition(parts)
                        }
                        other => return Err(perr(line, format!("unknown matroid {other:?}"))),
                    };
                    if inst.matroid.is_some() {
                        return Err(perr(line, "duplicate matroid"));
                    }
                    inst.matroid = Some(spec);
                }
                other => return Err(perr(line, format!("unknown keyword {other:?}"))),
            }
        }
        if kind.is_none() {
            return Err(perr(0, "missing header"));
        }
        inst.n = n.ok_or_else(|| perr(0, "missing n"))?;
        inst.root = root.ok_or_else(|| perr(0, "missing root"))?;
        inst.budget = budget.unwrap_or(0);
        for (line, v) in pending {
            if v >= inst.n {
                return Err(perr(line, format!("vertex {v} out of range for n={}", inst.n)));
            }
        }
        Ok(inst)
    }
}

impl fmt::Display for Instance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = String::new();
        writeln!(s, "{} v1", self.kind.header())?;
        writeln!(s, "n {}", self.n)?;
        writeln!(s, "root {}", self.root)?;
        writeln!(s, "budget {}", self.budget)?;
        if let Some(l) = self.length_budget {
            writeln!(s, "lbudget {l}")?;
        }
        let prio_file = self.kind == InstanceKind::Prio;
        for e in &self.edges {
            write!(s, "edge {} {} {}", e.from, e.to, e.cost)?;
            match (e.length, e.priority) {
                (Some(l), Some(p)) => write!(s, " {l} {p}")?,
                (Some(l), None) if !prio_file => write!(s, " {l}")?,
                (Some(l), None) => write!(s, " {l} 1")?,
                (None, Some(p)) if prio_file => write!(s, " {p}")?,
                (None, Some(p)) => write!(s, " 0 {p}")?,
                (None, None) => {}
            }
            writeln!(s)?;
        }
        for (v, p) in &self.rewards {
            writeln!(s, "reward {v} {p}")?;
        }
        for (v, p) in &self.terminals {
            match p {
                Some(p) => writeln!(s, "terminal {v} {p}")?,
                None => writeln!(s, "terminal {v}")?,
            }
        }
        for (v, d) in &self.deadlines {
            writeln!(s, "deadline {v} {d}")?;
        }
        match &self.matroid {
            Some(MatroidSpec::Uniform(k)) => writeln!(s, "matroid uniform {k}")?,
            Some(MatroidSpec::Partition(parts)) => {
                write!(s, "matroid partition")?;
                for (members, q) in parts {
                    let m: Vec<String> = members.iter().map(|v| v.to_string()).collect();
                    write!(s, " {}:{q}", m.join(","))?;
                }
                writeln!(s)?;
            }
            None => {}
        }
        f.write_str(&s)
    }
}
