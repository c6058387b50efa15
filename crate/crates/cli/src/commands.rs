use std::fmt::Write as _;
use std::fs;
use std::io::{self, BufWriter, Read, Write};
use std::path::Path;

use anyhow::{anyhow, bail, Context, Result};
use serde_json::{json, Value};
use treealpha::config::Config;
use treealpha::decomposers::{
    fvs_decomposition, fvs_witness, p3p1_decomposition, split_decomposition_within, star_decomposition, tags,
    tree_theta_3_decomposition_within, BoundKind, BoundedDecomposition,
};
use treealpha::generators::{
    enumerate_graphs_within, families_up_to, make_family, random_in_class_with_budget, Family, FamilyParams,
    DEFAULT_BUDGET,
};
use treealpha::io::{graph6, pace, read_graph_lines};
use treealpha::oracles::{
    alpha, alpha_in, alpha_of_decomposition, c_kt, chi, epsilon_table, fvs_min, ibn, max_independent_set_in, omega, omega_in,
    parse_rational, splitness, theta, theta_of_decomposition, tree_alpha_within, tree_theta_within,
    treewidth_within, width_of_decomposition,
};
use treealpha::patterns::{classify_within, ClassFilter, ClassParams};
use treealpha::sweep::{find_assertion, run_probe, run_sweep, SweepSpec, ASSERTIONS, PROBES};
use treealpha::{Error, Graph, VertexSet};

use crate::{Cli, Command, Format, Mode, Params};

/// A checked property failed; maps to exit code 4.
#[derive(Debug)]
struct Violated(String);

impl std::fmt::Display for Violated {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Violated {}

pub fn exit_code(err: &anyhow::Error) -> u8 {
    if err.downcast_ref::<Violated>().is_some() {
        return 4;
    }
    match err.downcast_ref::<Error>() {
        Some(Error::Parse { .. }) => 2,
        Some(Error::Precondition { .. }) => 3,
        Some(Error::BoundViolated(_)) => 4,
        _ => 1,
    }
}

struct Ctx {
    config: Config,
    format: Format,
    timestamp: bool,
}

impl Ctx {
    fn params(&self, p: &Params) -> ClassParams {
        let d = self.config.params;
        ClassParams { t: p.t.unwrap_or(d.t), k: p.k.unwrap_or(d.k), s: p.s.unwrap_or(d.s) }
    }
}

pub fn run(cli: Cli) -> Result<u8> {
    let config = match &cli.config {
        Some(path) => Config::parse(&read_file(path)?).with_context(|| format!("config {}", path.display()))?,
        None => Config::default(),
    };
    let ctx = Ctx { config, format: cli.format, timestamp: !cli.no_timestamp };
    match cli.command {
        Command::Classify { input, params, classes } => classify(&ctx, input.as_deref(), &params, &classes),
        Command::TreeAlpha { input, mode, params, cover, split, out } => {
            tree_alpha(&ctx, input.as_deref(), mode, &params, cover.as_deref(), split.as_deref(), out.as_deref())
        }
        Command::VerifyTd { graph, td } => verify_td(&ctx, &graph, &td),
        Command::Sweep { assertion, n, filter, params, out, list } => {
            sweep(&ctx, assertion.as_deref(), n, filter.as_deref(), &params, out.as_deref(), list)
        }
        Command::Probe { question, n, out } => probe(&ctx, &question, n, out.as_deref()),
        Command::Gen { family, params, n, filter, seed, list } => {
            gen(&ctx, family.as_deref(), &params, n, filter.as_deref(), seed, list)
        }
        Command::Enum { n, filter } => enumerate(&ctx, n, filter.as_deref()),
        Command::Measure { input } => measure(&ctx, input.as_deref()),
        Command::Epsilon { delta, t } => epsilon(&ctx, &delta, t),
    }
}

fn read_file(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

/// A path of `-` or no path means standard input.
fn read_input(path: Option<&Path>) -> Result<String> {
    match path {
        Some(p) if p != Path::new("-") => read_file(p),
        _ => {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s).context("reading standard input")?;
            Ok(s)
        }
    }
}

fn read_graphs(path: Option<&Path>) -> Result<Vec<Graph>> {
    let text = read_input(path)?;
    Ok(read_graph_lines(&text).collect::<treealpha::Result<Vec<_>>>()?)
}

fn read_one_graph(path: Option<&Path>) -> Result<Graph> {
    let mut graphs = read_graphs(path)?;
    match graphs.len() {
        1 => Ok(graphs.pop().expect("one graph")),
        0 => bail!("expected one graph, input is empty"),
        n => bail!("expected one graph, input has {n}"),
    }
}

fn emit(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            let mut stdout = io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
            Ok(stdout.flush()?)
        }
    }
}

fn json_line(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json values serialize");
    s.push('\n');
    s
}

fn parse_filter(text: Option<&str>) -> Result<Option<ClassFilter>> {
    text.map(|t| t.parse::<ClassFilter>()).transpose().map_err(Into::into)
}

fn parse_vertex_list(text: &str, g: &Graph) -> Result<VertexSet> {
    let mut set = VertexSet::EMPTY;
    for item in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let v: usize = item.parse().map_err(|_| anyhow!("`{item}` is not a vertex index"))?;
        if v >= g.n() {
            return Err(Error::VertexOutOfRange { vertex: v, n: g.n() }.into());
        }
        set.insert(v);
    }
    Ok(set)
}

fn classify(ctx: &Ctx, input: Option<&Path>, params: &Params, classes: &[String]) -> Result<u8> {
    let params = ctx.params(params);
    let mut out = BufWriter::new(io::stdout().lock());
    let mut docs = Vec::new();
    for g in read_graphs(input)? {
        let mut report = classify_within(&g, params, &ctx.config.limits)?;
        if !classes.is_empty() {
            for c in classes {
                if report.entry(c).is_none() {
                    return Err(Error::UnknownName(c.clone()).into());
                }
            }
            report.entries.retain(|e| classes.contains(&e.name));
        }
        match ctx.format {
            Format::Text => writeln!(out, "{}", report.to_line())?,
            Format::Json => docs.push(json!({ "graph6": graph6::encode(&g), "report": report })),
        }
    }
    if ctx.format == Format::Json {
        out.write_all(json_line(&Value::Array(docs)).as_bytes())?;
    }
    out.flush()?;
    Ok(0)
}

#[allow(clippy::too_many_arguments)]
fn tree_alpha(
    ctx: &Ctx,
    input: Option<&Path>,
    mode: Mode,
    params: &Params,
    cover: Option<&str>,
    split: Option<&str>,
    out: Option<&Path>,
) -> Result<u8> {
    let g = read_one_graph(input)?;
    let limits = &ctx.config.limits;
    let params = ctx.params(params);
    let bd = match mode {
        Mode::Exact => {
            let (value, td) = tree_alpha_within(&g, limits)?;
            BoundedDecomposition { td, kind: BoundKind::Alpha, bound_value: value, measured: value, provenance: tags::EXACT }
        }
        Mode::P3p1 => p3p1_decomposition(&g)?,
        Mode::Star => {
            let cover = match cover {
                Some(text) => parse_vertex_list(text, &g)?,
                None => g.vertices() - max_independent_set_in(&g, g.vertices()),
            };
            star_decomposition(&g, cover)?
        }
        Mode::Split => {
            let (_, mut part) = splitness(&g)?;
            if let Some(text) = split {
                part.a = parse_vertex_list(text, &g)?;
                part.b = g.vertices() - part.a;
                part.k = omega_alpha_k(&g, part.a);
            }
            split_decomposition_within(&g, &part, limits)?
        }
        Mode::Fvs => {
            let w = fvs_witness(&g, params.k, params.t)?;
            fvs_decomposition(&g, &w)?
        }
        Mode::Theta3 => tree_theta_3_decomposition_within(&g, limits)?,
    };
    let value_key = match bd.kind {
        BoundKind::Theta => "tree-theta",
        BoundKind::Width => "treewidth",
        BoundKind::Alpha => "tree-alpha",
    };
    let provenance = format!("# theorem={} bound={} paper_bound={}", bd.provenance, bd.measured, bd.bound_value);
    let value_line = format!("c {value_key}={}", bd.measured);
    let document = format!("{provenance}\n{value_line}\n{}", pace::write(&bd.td));
    match ctx.format {
        Format::Json => {
            let v = json!({
                "theorem": bd.provenance,
                "kind": bd.kind,
                "bound": bd.measured,
                "paper_bound": bd.bound_value,
                "td": pace::write(&bd.td),
            });
            if let Some(p) = out {
                emit(Some(p), &document)?;
            }
            emit(None, &json_line(&v))?;
        }
        Format::Text => match out {
            Some(p) => {
                emit(Some(p), &document)?;
                emit(None, &format!("{value_key}={}\n{provenance}\n", bd.measured))?;
            }
            None => emit(None, &document)?,
        },
    }
    Ok(0)
}

/// Smallest k for which `a` and its complement form a k-split partition.
fn omega_alpha_k(g: &Graph, a: VertexSet) -> usize {
    let b = g.vertices() - a;
    omega_in(g, a).max(alpha_in(g, b))
}

fn verify_td(ctx: &Ctx, graph: &Path, td_path: &Path) -> Result<u8> {
    let text = read_file(graph)?;
    let g = read_graph_lines(&text)
        .next()
        .ok_or_else(|| Error::Parse { line: 1, message: "graph file is empty".into() })??;
    let td = pace::parse(&read_file(td_path)?).with_context(|| format!("parsing {}", td_path.display()))?;
    match td.validate(&g) {
        Ok(()) => {
            let (a, t, w) = (alpha_of_decomposition(&g, &td), theta_of_decomposition(&g, &td), width_of_decomposition(&td));
            let body = match ctx.format {
                Format::Text => format!("valid=true alpha={a} theta={t} width={w}\n"),
                Format::Json => json_line(&json!({ "valid": true, "alpha": a, "theta": t, "width": w })),
            };
            emit(None, &body)?;
            Ok(0)
        }
        Err(v) => {
            let body = match ctx.format {
                Format::Text => format!("valid=false reason={v}\n"),
                Format::Json => json_line(&json!({ "valid": false, "reason": v.to_string() })),
            };
            emit(None, &body)?;
            Err(Violated(format!("invalid tree decomposition: {v}")).into())
        }
    }
}

fn sweep(
    ctx: &Ctx,
    assertion: Option<&str>,
    n: Option<usize>,
    filter: Option<&str>,
    params: &Params,
    out: Option<&Path>,
    list: bool,
) -> Result<u8> {
    if list {
        let mut text = String::new();
        for a in ASSERTIONS.iter() {
            writeln!(text, "{}\t{}", a.name, a.about)?;
        }
        emit(None, &text)?;
        return Ok(0);
    }
    let name = assertion.ok_or_else(|| anyhow!("sweep needs an assertion name (see --list)"))?;
    let n = n.ok_or_else(|| anyhow!("sweep needs --n"))?;
    find_assertion(name)?;
    let spec = SweepSpec {
        assertion: name.to_string(),
        n_max: n,
        filter: parse_filter(filter)?,
        params: ctx.params(params),
        limits: ctx.config.limits,
    };
    let report = run_sweep(&spec)?;
    let body = match ctx.format {
        Format::Text => report.to_text(ctx.timestamp),
        Format::Json => {
            let mut v = serde_json::to_value(&report)?;
            if ctx.timestamp {
                v["elapsed_ms"] = json!(report.elapsed.as_millis() as u64);
            }
            json_line(&v)
        }
    };
    emit(out, &body)?;
    if report.passed() {
        Ok(0)
    } else {
        Err(Violated(format!("{name}: {} violation(s)", report.violations.len())).into())
    }
}

fn probe(ctx: &Ctx, question: &str, n: usize, out: Option<&Path>) -> Result<u8> {
    // Short forms `q7.3` and `q7.4` are accepted.
    let name = PROBES
        .iter()
        .find(|p| **p == question || p.split('-').next() == Some(question))
        .ok_or_else(|| anyhow!("unknown probe `{question}`; known: {}", PROBES.join(", ")))?;
    let report = run_probe(name, n, &ctx.config.limits)?;
    let body = match ctx.format {
        Format::Text => report.to_text(ctx.timestamp),
        Format::Json => {
            let mut v = serde_json::to_value(&report)?;
            if ctx.timestamp {
                v["elapsed_ms"] = json!(report.elapsed.as_millis() as u64);
            }
            json_line(&v)
        }
    };
    emit(out, &body)?;
    Ok(0)
}

fn gen(
    ctx: &Ctx,
    family: Option<&str>,
    params: &[String],
    n: Option<usize>,
    filter: Option<&str>,
    seed: Option<u64>,
    list: bool,
) -> Result<u8> {
    if list {
        let n = n.ok_or_else(|| anyhow!("gen --list needs --n"))?;
        let mut text = String::new();
        for fp in families_up_to(n) {
            writeln!(text, "{fp}\t{}", graph6::encode(&make_family(&fp)?))?;
        }
        emit(None, &text)?;
        return Ok(0);
    }
    let family = family.ok_or_else(|| anyhow!("gen needs a family name (see --list)"))?;
    let g = if family == "random" {
        let n = n.ok_or_else(|| anyhow!("gen random needs --n"))?;
        let filter = parse_filter(filter)?.unwrap_or_else(|| "has-edge".parse().expect("static filter"));
        let seed = seed.unwrap_or(ctx.config.seed);
        random_in_class_with_budget(n, &filter, seed, DEFAULT_BUDGET, &ctx.config.limits)?
    } else {
        let fp: FamilyParams = if family.contains('(') {
            if !params.is_empty() {
                bail!("give parameters either inline or as arguments, not both");
            }
            family.parse()?
        } else {
            let fam: Family = family.parse()?;
            let values = params
                .iter()
                .map(|p| p.parse::<usize>().map_err(|_| anyhow!("`{p}` is not a nonnegative integer; usage: {}", fam.usage())))
                .collect::<Result<Vec<_>>>()?;
            FamilyParams::new(fam, &values)
        };
        make_family(&fp)?
    };
    emit(None, &format!("{}\n", graph6::encode(&g)))?;
    Ok(0)
}

fn enumerate(ctx: &Ctx, n: usize, filter: Option<&str>) -> Result<u8> {
    let stream = enumerate_graphs_within(n, parse_filter(filter)?, &ctx.config.limits)?;
    let mut out = BufWriter::new(io::stdout().lock());
    for g in stream {
        writeln!(out, "{}", graph6::encode(&g?))?;
    }
    out.flush()?;
    Ok(0)
}

fn measure(ctx: &Ctx, input: Option<&Path>) -> Result<u8> {
    let limits = &ctx.config.limits;
    let mut out = BufWriter::new(io::stdout().lock());
    let mut docs = Vec::new();
    for g in read_graphs(input)? {
        let fields: Vec<(&str, usize)> = vec![
            ("n", g.n()),
            ("m", g.edge_count()),
            ("alpha", alpha(&g)),
            ("omega", omega(&g)),
            ("chi", chi(&g)),
            ("theta", theta(&g)),
            ("ibn", ibn(&g)),
            ("tree-alpha", tree_alpha_within(&g, limits)?.0),
            ("tree-theta", tree_theta_within(&g, limits)?.0),
            ("treewidth", treewidth_within(&g, limits)?.0),
            ("splitness", splitness(&g)?.0),
            ("fvs", fvs_min(&g)?.0),
        ];
        match ctx.format {
            Format::Text => {
                let line: Vec<String> = fields.iter().map(|(k, v)| format!("{k}={v}")).collect();
                writeln!(out, "{}", line.join(" "))?;
            }
            Format::Json => {
                let mut obj = serde_json::Map::new();
                obj.insert("graph6".into(), json!(graph6::encode(&g)));
                for (k, v) in fields {
                    obj.insert(k.into(), json!(v));
                }
                docs.push(Value::Object(obj));
            }
        }
    }
    if ctx.format == Format::Json {
        out.write_all(json_line(&Value::Array(docs)).as_bytes())?;
    }
    out.flush()?;
    Ok(0)
}

fn epsilon(ctx: &Ctx, delta: &str, t: Option<usize>) -> Result<u8> {
    let delta = delta.split(',').map(parse_rational).collect::<treealpha::Result<Vec<_>>>()?;
    let table = epsilon_table(&delta)?;
    let mut rows = Vec::new();
    for (i, eps) in table.epsilon.iter().enumerate() {
        let k = i + 2;
        let c = t.map(|t| c_kt(eps, t)).transpose()?;
        rows.push((k, &table.delta[i], eps, c));
    }
    let body = match ctx.format {
        Format::Text => {
            let mut s = String::new();
            for (k, d, e, c) in &rows {
                write!(s, "k={k} delta={d} epsilon={e}")?;
                if let (Some(c), Some(t)) = (c, t) {
                    write!(s, " c_{k},{t}={c}")?;
                }
                s.push('\n');
            }
            s
        }
        Format::Json => json_line(&Value::Array(
            rows.iter()
                .map(|(k, d, e, c)| {
                    json!({ "k": k, "delta": d.to_string(), "epsilon": e.to_string(), "t": t, "c": c.as_ref().map(|c| c.to_string()) })
                })
                .collect(),
        )),
    };
    emit(None, &body)?;
    Ok(0)
}
