use std::fmt::Write as _;

use clap::{Args, Subcommand, ValueEnum};
use serde::Serialize;
use walklab::algebra::{hankel_rank, min_recurrence, rats, RecurrenceFit};
use walklab::enumeration::{
    ambivalent_vertex_census, census_records, cross_size_census, decisive_census, enumerate_connected_graphs,
    enumerate_trees, to_json_lines, walk_identifiability_census, CensusRecord, Mode,
};
use walklab::equivalence::classify_pair;
use walklab::graph::{fixture, fixture_description, fixture_names, to_graph6};
use walklab::lab::{
    random_tree_ambivalence_trial, random_triple_trial, rate_curve_csv, verify_krebs_verbitsky, verify_part3_bound,
    verify_pn_yn, BoundReport, TrialReport,
};
use walklab::walk::{closed_triple, decimal_strings, graph_char_poly, main_polynomial, walk_counts, walk_counts_between, ClosedTriple};
use walklab::{Error, Graph};

use crate::input::{resolve_vertex, GraphSource, OtherSource};
use crate::{CliError, Ctx, Format};

type Out = Result<String, CliError>;

fn json<T: Serialize>(value: &T) -> Out {
    Ok(serde_json::to_string_pretty(value)?)
}

fn no_csv(what: &str) -> CliError {
    CliError::Usage(format!("csv output is not available for {what}"))
}

// ---- invariants ----

#[derive(Args, Debug)]
pub struct InvariantsArgs {
    #[command(flatten)]
    source: GraphSource,
    /// Vertex (mark name or index); all vertices when omitted.
    #[arg(long)]
    vertex: Option<String>,
    /// Largest walk length listed [default: 2n - 1].
    #[arg(long)]
    k: Option<usize>,
}

#[derive(Serialize)]
struct Recurrence {
    order: usize,
    chi: String,
    hankel_rank: usize,
}

#[derive(Serialize)]
struct VertexInvariants {
    vertex: usize,
    walks: Vec<String>,
    closed: Vec<String>,
    triple: ClosedTriple,
    walk_recurrence: Recurrence,
    closed_recurrence: Recurrence,
}

#[derive(Serialize)]
struct Invariants {
    name: String,
    graph6: String,
    n: usize,
    edges: usize,
    char_poly: String,
    main_polynomial: String,
    max_k: usize,
    vertices: Vec<VertexInvariants>,
}

/// Minimal recurrence of a row, fitted on its first `2n` terms.
fn recurrence(g: &Graph, full: &[walklab::algebra::BigInt]) -> Result<Recurrence, CliError> {
    let n = g.n();
    let prefix = rats(&full[..2 * n]);
    let spec = match min_recurrence(&prefix, n)? {
        RecurrenceFit::Found(s) => s,
        RecurrenceFit::NotDetermined => {
            return Err(Error::Integrity("walk row has no recurrence of order <= n".into()).into())
        }
    };
    Ok(Recurrence {
        order: spec.order(),
        chi: spec.charpoly().to_string(),
        hankel_rank: hankel_rank(&prefix),
    })
}

pub fn invariants(a: &InvariantsArgs, ctx: &Ctx) -> Out {
    let f = a.source.load()?;
    let g = &f.graph;
    let n = g.n();
    let max_k = a.k.unwrap_or(2 * n - 1);
    let span = max_k.max(2 * n - 1);
    let vertices: Vec<usize> = match &a.vertex {
        Some(s) => vec![resolve_vertex(&f, s)?],
        None => (0..n).collect(),
    };
    let mut rows = Vec::new();
    for &v in &vertices {
        let w = walk_counts(g, v, span)?.counts;
        let r = walk_counts_between(g, v, v, span)?;
        rows.push(VertexInvariants {
            vertex: v,
            walks: decimal_strings(&w[..=max_k]),
            closed: decimal_strings(&r[..=max_k]),
            triple: closed_triple(g, v)?,
            walk_recurrence: recurrence(g, &w)?,
            closed_recurrence: recurrence(g, &r)?,
        });
    }
    let inv = Invariants {
        name: f.name.clone(),
        graph6: to_graph6(g)?,
        n,
        edges: g.edge_count(),
        char_poly: graph_char_poly(g).to_string(),
        main_polynomial: main_polynomial(g)?.to_string(),
        max_k,
        vertices: rows,
    };
    match ctx.format {
        Format::Json => json(&inv),
        Format::Csv => {
            let mut out = String::from("vertex,k,walks,closed\n");
            for v in &inv.vertices {
                for (k, (w, r)) in v.walks.iter().zip(&v.closed).enumerate() {
                    writeln!(out, "{},{k},{w},{r}", v.vertex).unwrap();
                }
            }
            Ok(out)
        }
        Format::Text => {
            let mut out = format!(
                "graph {} ({}) n={} m={}\nchar_poly {}\nmain_polynomial {}\n",
                inv.name, inv.graph6, inv.n, inv.edges, inv.char_poly, inv.main_polynomial
            );
            for v in &inv.vertices {
                let t = &v.triple;
                writeln!(out, "vertex {}", v.vertex).unwrap();
                writeln!(out, "  walks {}", v.walks.join(",")).unwrap();
                writeln!(out, "  closed {}", v.closed.join(",")).unwrap();
                writeln!(out, "  triple r2={} r3={} r4={}", t.r2, t.r3, t.r4).unwrap();
                for (label, r) in [("walk", &v.walk_recurrence), ("closed", &v.closed_recurrence)] {
                    writeln!(out, "  {label}_chi {} order={} hankel_rank={}", r.chi, r.order, r.hankel_rank).unwrap();
                }
            }
            Ok(out)
        }
    }
}

// ---- classify ----

#[derive(Args, Debug)]
pub struct ClassifyArgs {
    #[command(flatten)]
    source: GraphSource,
    #[command(flatten)]
    other: OtherSource,
    /// `x,y`: `x` in the first graph, `y` in the second (or the same) graph.
    #[arg(long)]
    pair: String,
}

#[derive(Serialize)]
struct Classification {
    left: String,
    x: usize,
    right: String,
    y: usize,
    walk_eq: bool,
    closed_walk_eq: bool,
    strongly_walk_eq: bool,
    removal_similar: bool,
    similar: bool,
    pseudosimilar: bool,
    cospectral: bool,
}

pub fn classify(a: &ClassifyArgs, ctx: &Ctx) -> Out {
    let (xs, ys) = a
        .pair
        .split_once(',')
        .ok_or_else(|| CliError::Usage("--pair expects `x,y`".into()))?;
    let left = a.source.load()?;
    let right = match a.other.as_source() {
        Some(s) => s.load()?,
        None => left.clone(),
    };
    let x = resolve_vertex(&left, xs.trim())?;
    let y = resolve_vertex(&right, ys.trim())?;
    let v = classify_pair(&left.graph, x, &right.graph, y)?;
    let c = Classification {
        left: left.name.clone(),
        x,
        right: right.name.clone(),
        y,
        walk_eq: v.walk_eq,
        closed_walk_eq: v.closed_walk_eq,
        strongly_walk_eq: v.strongly(),
        removal_similar: v.removal_similar,
        similar: v.similar,
        pseudosimilar: v.pseudosimilar(),
        cospectral: v.cospectral,
    };
    let flags = [
        ("walk_eq", c.walk_eq),
        ("closed_walk_eq", c.closed_walk_eq),
        ("strongly_walk_eq", c.strongly_walk_eq),
        ("removal_similar", c.removal_similar),
        ("similar", c.similar),
        ("pseudosimilar", c.pseudosimilar),
        ("cospectral", c.cospectral),
    ];
    match ctx.format {
        Format::Json => json(&c),
        Format::Csv => {
            let head: Vec<&str> = flags.iter().map(|f| f.0).collect();
            let vals: Vec<String> = flags.iter().map(|f| f.1.to_string()).collect();
            Ok(format!(
                "left,x,right,y,{}\n{},{},{},{},{}\n",
                head.join(","),
                c.left,
                c.x,
                c.right,
                c.y,
                vals.join(",")
            ))
        }
        Format::Text => {
            let parts: Vec<String> = flags.iter().map(|(k, v)| format!("{k}={v}")).collect();
            Ok(format!("{}:{} vs {}:{}\n{}\n", c.left, c.x, c.right, c.y, parts.join(" ")))
        }
    }
}

// ---- census ----

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum CensusClass {
    Trees,
    Graphs,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum CensusMode {
    Identifiability,
    Ambivalent,
    CrossSize,
    Decisive,
    Records,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Equivalence {
    Walk,
    Closed,
    Strong,
}

#[derive(Args, Debug)]
pub struct CensusArgs {
    class: CensusClass,
    /// identifiability, ambivalent and cross-size apply to trees; decisive to graphs.
    #[arg(long, value_enum)]
    mode: CensusMode,
    /// Order (largest order for identifiability and cross-size).
    #[arg(long)]
    n: usize,
    /// Equivalence used by the cross-size census.
    #[arg(long, value_enum, default_value = "walk")]
    equivalence: Equivalence,
}

fn records_csv(records: &[CensusRecord]) -> String {
    let mut out = String::from("class,n,index,graph6,profile_key\n");
    for r in records {
        writeln!(out, "{},{},{},{},{}", r.class, r.n, r.index, r.graph6, r.profile_key).unwrap();
    }
    out
}

pub fn census(a: &CensusArgs, ctx: &Ctx) -> Out {
    use CensusClass::*;
    use CensusMode::*;
    match (a.class, a.mode) {
        (Trees, Identifiability) => {
            let r = walk_identifiability_census(a.n)?;
            match ctx.format {
                Format::Json => json(&r),
                Format::Csv => {
                    let mut out = String::from("n,trees,collisions\n");
                    for l in &r.levels {
                        writeln!(out, "{},{},{}", l.n, l.trees, l.collisions.len()).unwrap();
                    }
                    Ok(out)
                }
                Format::Text => {
                    let mut out = String::new();
                    for l in &r.levels {
                        writeln!(out, "n={} trees={} collisions={}", l.n, l.trees, l.collisions.len()).unwrap();
                    }
                    writeln!(out, "all_identifiable={}", r.all_identifiable()).unwrap();
                    Ok(out)
                }
            }
        }
        (Trees, Ambivalent) => {
            let c = ambivalent_vertex_census(a.n)?;
            match ctx.format {
                Format::Json => json(&c),
                Format::Csv => {
                    let mut out = String::from("t,s,x,y,closed_eq\n");
                    for p in &c.cross_pairs {
                        for m in &p.matches {
                            writeln!(out, "{},{},{},{},{}", p.t, p.s, m.x, m.y, m.closed_eq).unwrap();
                        }
                    }
                    Ok(out)
                }
                Format::Text => {
                    let mut out = format!(
                        "n={} trees={} cross_pairs={} within={}\n",
                        c.n,
                        c.trees,
                        c.cross_pairs.len(),
                        c.within.len()
                    );
                    for p in &c.cross_pairs {
                        let ms: Vec<String> = p
                            .matches
                            .iter()
                            .map(|m| format!("{}~{}{}", m.x, m.y, if m.closed_eq { "" } else { " (walk only)" }))
                            .collect();
                        writeln!(out, "{} {} strongly={} {}", p.t, p.s, p.strongly(), ms.join(", ")).unwrap();
                    }
                    Ok(out)
                }
            }
        }
        (Trees, CrossSize) => {
            let mode = match a.equivalence {
                Equivalence::Walk => Mode::Walk,
                Equivalence::Closed => Mode::Closed,
                Equivalence::Strong => Mode::Strong,
            };
            let pairs = cross_size_census(a.n, mode)?;
            match ctx.format {
                Format::Json => json(&pairs),
                Format::Csv | Format::Text => {
                    let mut out = String::from(if ctx.format == Format::Csv {
                        "small_n,large_n,small,large,x,y\n"
                    } else {
                        ""
                    });
                    for p in &pairs {
                        for (x, y) in &p.matches {
                            if ctx.format == Format::Csv {
                                writeln!(out, "{},{},{},{},{x},{y}", p.small_n, p.large_n, p.small, p.large).unwrap();
                            } else {
                                writeln!(out, "{} ({}) ~ {} ({}) at {x}~{y}", p.small, p.small_n, p.large, p.large_n)
                                    .unwrap();
                            }
                        }
                    }
                    if ctx.format == Format::Text {
                        writeln!(out, "pairs={}", pairs.len()).unwrap();
                    }
                    Ok(out)
                }
            }
        }
        (Graphs, Decisive) => {
            let c = decisive_census(a.n)?;
            match ctx.format {
                Format::Json => json(&c),
                Format::Csv => Err(no_csv("the decisive census")),
                Format::Text => Ok(format!(
                    "n={} graphs={} determined_by_spectrum={} irreducible={} both={} vertices_checked={}\n",
                    c.n, c.graphs, c.ds, c.irreducible, c.both, c.vertices_checked
                )),
            }
        }
        (class, Records) => {
            let (label, graphs) = match class {
                Trees => ("tree", enumerate_trees(a.n).collect::<Vec<_>>()),
                Graphs => ("connected", enumerate_connected_graphs(a.n)?),
            };
            let records = census_records(label, &graphs)?;
            match ctx.format {
                Format::Json => Ok(to_json_lines(&records)?),
                Format::Csv => Ok(records_csv(&records)),
                Format::Text => Ok(records.iter().map(|r| format!("{}\n", r.graph6)).collect()),
            }
        }
        (class, mode) => Err(CliError::Usage(format!("mode {mode:?} does not apply to {class:?}"))),
    }
}

// ---- verify ----

#[derive(Subcommand, Debug)]
pub enum Family {
    /// Path versus the Y graph.
    PnYn {
        #[arg(long)]
        n: usize,
    },
    /// The Krebs-Verbitsky pair with parameters s and t.
    Kv {
        #[arg(long)]
        s: usize,
        #[arg(long)]
        t: usize,
    },
    /// The padded pair on exactly n vertices.
    Part3 {
        #[arg(long)]
        n: usize,
    },
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[command(subcommand)]
    family: Family,
}

fn opt(x: Option<usize>) -> String {
    x.map_or_else(|| "none".into(), |v| v.to_string())
}

pub fn verify(a: &VerifyArgs, ctx: &Ctx) -> Result<(String, Result<(), CliError>), CliError> {
    let r: BoundReport = match a.family {
        Family::PnYn { n } => verify_pn_yn(n)?,
        Family::Kv { s, t } => verify_krebs_verbitsky(s, t)?,
        Family::Part3 { n } => verify_part3_bound(n)?,
    };
    let text = match ctx.format {
        Format::Json => json(&r)?,
        Format::Csv => format!(
            "family,n,agree_through,first_difference,predicted_agree,predicted_differ,passed\n{},{},{},{},{},{},{}\n",
            r.family,
            r.n,
            r.agree_through,
            opt(r.first_difference),
            opt(r.predicted_agree),
            opt(r.predicted_differ),
            r.passed()
        ),
        Format::Text => {
            let mut out = format!(
                "family={} n={} agree_through={} first_difference={} predicted_agree={} predicted_differ={}\n",
                r.family,
                r.n,
                r.agree_through,
                opt(r.first_difference),
                opt(r.predicted_agree),
                opt(r.predicted_differ)
            );
            for c in &r.checks {
                writeln!(out, "{} {}: {}", if c.passed { "PASS" } else { "FAIL" }, c.name, c.detail).unwrap();
            }
            out
        }
    };
    let outcome = r.ensure().map(|_| ()).map_err(CliError::from);
    Ok((text, outcome))
}

// ---- trial ----

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Experiment {
    /// Closed-walk triple collisions in G(n, 1/2).
    Triples,
    /// Ambivalent vertices in uniform labeled trees.
    TreeAmbivalence,
}

#[derive(Args, Debug)]
pub struct TrialArgs {
    experiment: Experiment,
    /// Orders, comma separated.
    #[arg(long, value_delimiter = ',', required = true)]
    n: Vec<usize>,
    #[arg(long)]
    trials: Option<usize>,
    /// Mandatory, here or in the config file.
    #[arg(long)]
    seed: Option<u64>,
}

pub fn trial(a: &TrialArgs, ctx: &Ctx) -> Out {
    let seed = a
        .seed
        .or(ctx.config.seed)
        .ok_or_else(|| CliError::Usage("trial needs --seed".into()))?;
    let trials = a
        .trials
        .or(ctx.config.trials)
        .ok_or_else(|| CliError::Usage("trial needs --trials".into()))?;
    let reports: Vec<TrialReport> = a
        .n
        .iter()
        .map(|&n| match a.experiment {
            Experiment::Triples => random_triple_trial(n, trials, seed),
            Experiment::TreeAmbivalence => random_tree_ambivalence_trial(n, trials, seed),
        })
        .collect::<Result<_, _>>()?;
    match ctx.format {
        Format::Json => json(&reports),
        Format::Csv => Ok(rate_curve_csv(&reports)),
        Format::Text => Ok(reports
            .iter()
            .map(|r| format!("n={} trials={} seed={} collisions={} rate={}\n", r.n, r.trials, r.seed, r.collisions, r.rate))
            .collect()),
    }
}

// ---- fixtures ----

#[derive(Subcommand, Debug)]
pub enum FixturesCommand {
    /// Names, orders and descriptions.
    List,
    /// One fixture as JSON (marks included), graph6 text or an edge CSV.
    Emit { name: String },
}

#[derive(Args, Debug)]
pub struct FixturesArgs {
    #[command(subcommand)]
    command: FixturesCommand,
}

#[derive(Serialize)]
struct FixtureEntry {
    name: &'static str,
    n: usize,
    graph6: String,
    description: &'static str,
}

pub fn fixtures(a: &FixturesArgs, ctx: &Ctx) -> Out {
    match &a.command {
        FixturesCommand::List => {
            let entries: Vec<FixtureEntry> = fixture_names()
                .into_iter()
                .map(|name| {
                    let f = fixture(name)?;
                    Ok(FixtureEntry {
                        name,
                        n: f.graph.n(),
                        graph6: to_graph6(&f.graph)?,
                        description: fixture_description(name)?,
                    })
                })
                .collect::<Result<_, Error>>()?;
            match ctx.format {
                Format::Json => json(&entries),
                Format::Csv => {
                    let mut out = String::from("name,n,graph6\n");
                    for e in &entries {
                        writeln!(out, "{},{},{}", e.name, e.n, e.graph6).unwrap();
                    }
                    Ok(out)
                }
                Format::Text => Ok(entries
                    .iter()
                    .map(|e| format!("{:<16} n={:<3} {}\n", e.name, e.n, e.description))
                    .collect()),
            }
        }
        FixturesCommand::Emit { name } => {
            let f = fixture(name)?;
            match ctx.format {
                Format::Json => json(&f.to_json()),
                Format::Csv => {
                    let mut out = String::from("u,v\n");
                    for (u, v) in f.graph.edges() {
                        writeln!(out, "{u},{v}").unwrap();
                    }
                    Ok(out)
                }
                Format::Text => Ok(to_graph6(&f.graph)?),
            }
        }
    }
}
