use std::fs;
use std::io::{ErrorKind, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use derange::report::{join, Report};
use derange::{
    parse_digraph, parse_group, parse_perm_set, write_digraph, write_perm_set, ElementError,
    ParseError,
};
use derange_core::dad::{
    analyze, build_da, components, is_closed, is_self_inverse, search_valency_gap,
};
use derange_core::decompose::{digraph_to_derangements, graph_to_closed_set, perfect_matching};
use derange_core::iso::automorphism_group;
use derange_core::products::product_set;
use derange_core::twosided::{cayley_digraph, two_sided_digraph};
use derange_core::{
    DerangementSet, Error, Matching, PerfectMatching, ProductKind, RegularSubgroup, SimpleDigraph,
};

#[derive(Parser)]
#[command(name = "derange", version, about = "Derangement action digraphs")]
struct Cli {
    /// Drop repeated permutations in input sets instead of rejecting them.
    #[arg(long, global = true)]
    dedupe: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Structural report for DA(X, S).
    Analyze { permset: PathBuf },
    /// Write the action digraph of a set.
    Build {
        permset: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Connected components and the restricted sets.
    Components { permset: PathBuf },
    /// Split a regular digraph into derangements.
    Decompose {
        digraph: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Closed self-inverse set realizing a regular graph.
    Realize {
        digraph: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Perfect matching, or a maximum matching when none exists.
    Matching { digraph: PathBuf },
    /// Product of two action digraphs at the level of sets.
    Product {
        #[arg(long, value_enum)]
        kind: Kind,
        left: PathBuf,
        right: PathBuf,
        /// Regular subgroup for lexicographic products.
        #[arg(long, value_enum)]
        lex_group: Option<LexGroup>,
    },
    /// Automorphism group of DA(X, S).
    Aut {
        permset: PathBuf,
        #[arg(long)]
        vertex_transitive: bool,
    },
    /// Two-sided group digraph 2S(G; L, R).
    TwoSided {
        #[arg(long)]
        group: PathBuf,
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
    },
    /// Cayley digraph with arcs (g, sg).
    Cayley {
        #[arg(long)]
        group: PathBuf,
        #[arg(long)]
        conn: String,
    },
    /// Sets whose action digraph is a regular graph of valency below |S|.
    SearchGap {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        s: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Cartesian,
    Tensor,
    Strong,
    Lex,
}

impl From<Kind> for ProductKind {
    fn from(k: Kind) -> Self {
        match k {
            Kind::Cartesian => ProductKind::Cartesian,
            Kind::Tensor => ProductKind::Tensor,
            Kind::Strong => ProductKind::Strong,
            Kind::Lex => ProductKind::Lexicographic,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum LexGroup {
    Cyclic,
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("{}", path.display()))
}

fn read_set(path: &Path, dedupe: bool) -> Result<DerangementSet> {
    parse_perm_set(&read(path)?, dedupe).with_context(|| format!("{}", path.display()))
}

fn read_digraph(path: &Path) -> Result<SimpleDigraph> {
    parse_digraph(&read(path)?).with_context(|| format!("{}", path.display()))
}

/// Writes to stdout; a closed pipe ends output quietly.
fn print(text: &str) -> Result<()> {
    match std::io::stdout().lock().write_all(text.as_bytes()) {
        Err(e) if e.kind() != ErrorKind::BrokenPipe => Err(e.into()),
        _ => Ok(()),
    }
}

fn emit(text: &str, output: Option<&Path>) -> Result<()> {
    match output {
        Some(path) => fs::write(path, text).with_context(|| format!("{}", path.display())),
        None => print(text),
    }
}

fn matching_block(m: &Matching) -> String {
    m.pairs()
        .iter()
        .map(|(u, v)| format!("{u} {v}\n"))
        .collect()
}

fn run(cli: Cli) -> Result<()> {
    let dedupe = cli.dedupe;
    let mut report = Report::new();
    match cli.command {
        Command::Analyze { permset } => {
            report.analysis(&analyze(&read_set(&permset, dedupe)?));
        }
        Command::Build { permset, output } => {
            let set = read_set(&permset, dedupe)?;
            return emit(&write_digraph(&build_da(&set)), output.as_deref());
        }
        Command::Components { permset } => {
            let comps = components(&read_set(&permset, dedupe)?);
            report.field("component_count", comps.len());
            for (i, c) in comps.iter().enumerate() {
                report
                    .field(format!("component_{i}_vertices"), join(&c.vertices))
                    .block(format!("component_{i}_set"), &write_perm_set(&c.set));
            }
        }
        Command::Decompose { digraph, output } => {
            let set = digraph_to_derangements(&read_digraph(&digraph)?)?;
            return emit(&write_perm_set(&set), output.as_deref());
        }
        Command::Realize { digraph, output } => {
            match graph_to_closed_set(&read_digraph(&digraph)?) {
                Ok(set) => return emit(&write_perm_set(&set), output.as_deref()),
                Err(Error::NoPerfectMatching { maximum }) => {
                    report
                        .field("perfect_matching", "none")
                        .field("maximum_matching_size", maximum.len())
                        .block("maximum_matching", &matching_block(&maximum));
                    print(&report.to_string())?;
                    return Err(Error::NoPerfectMatching { maximum }.into());
                }
                Err(e) => return Err(e.into()),
            }
        }
        Command::Matching { digraph } => {
            let (perfect, m) = match perfect_matching(&read_digraph(&digraph)?)? {
                PerfectMatching::Found(m) => (true, m),
                PerfectMatching::Deficient { maximum } => (false, maximum),
            };
            report
                .field("perfect", perfect)
                .field("size", m.len())
                .block("matching", &matching_block(&m));
        }
        Command::Product {
            kind,
            left,
            right,
            lex_group,
        } => {
            let (s, t) = (read_set(&left, dedupe)?, read_set(&right, dedupe)?);
            let kind = ProductKind::from(kind);
            let u = match (kind, lex_group) {
                (ProductKind::Lexicographic, _) => Some(RegularSubgroup::cyclic(t.domain_size())),
                (_, Some(_)) => return Err(Error::UnexpectedSubgroup.into()),
                _ => None,
            };
            let p = product_set(&s, &t, kind, u.as_ref())?;
            report
                .field("kind", kind.name())
                .field("domain_size", p.domain_size())
                .field("set_size", p.len())
                .field("closed", is_closed(&p))
                .field("self_inverse", is_self_inverse(&p))
                .block("set", &write_perm_set(&p))
                .block("digraph", &write_digraph(&build_da(&p)));
        }
        Command::Aut {
            permset,
            vertex_transitive,
        } => {
            let aut = automorphism_group(&read_set(&permset, dedupe)?)?;
            let listing: String = aut.elements().iter().map(|g| format!("{g}\n")).collect();
            report
                .field("order", aut.order())
                .block("automorphisms", &listing);
            if vertex_transitive {
                report.field("vertex_transitive", aut.is_transitive());
            }
        }
        Command::TwoSided { group, left, right } => {
            let file =
                parse_group(&read(&group)?).with_context(|| format!("{}", group.display()))?;
            let g = file.group();
            let (l, r) = (file.parse_elements(&left)?, file.parse_elements(&right)?);
            report.field("group_order", g.order());
            match two_sided_digraph(g, &l, &r) {
                Ok(ts) => {
                    report
                        .field("loopless", true)
                        .field("raw_count", ts.raw_count)
                        .field("set_size", ts.set.len())
                        .valencies(&ts.digraph.valency_profile())
                        .block("set", &write_perm_set(&ts.set))
                        .block("digraph", &write_digraph(&ts.digraph));
                }
                Err(Error::NotLoopless { left, right }) => {
                    report
                        .field("loopless", false)
                        .field("conjugate_pair", format!("{left} {right}"));
                    print(&report.to_string())?;
                    return Err(Error::NotLoopless { left, right }.into());
                }
                Err(e) => return Err(e.into()),
            }
        }
        Command::Cayley { group, conn } => {
            let file =
                parse_group(&read(&group)?).with_context(|| format!("{}", group.display()))?;
            let (d, set) = cayley_digraph(file.group(), &file.parse_elements(&conn)?)?;
            report
                .field("group_order", file.group().order())
                .field("set_size", set.len())
                .valencies(&d.valency_profile())
                .block("set", &write_perm_set(&set))
                .block("digraph", &write_digraph(&d));
        }
        Command::SearchGap { n, s } => {
            let witnesses = search_valency_gap(n, s)?;
            report
                .field("n_max", n)
                .field("s_max", s)
                .field("witness_count", witnesses.len());
            for (i, w) in witnesses.iter().enumerate() {
                report.block(format!("witness_{i}"), &write_perm_set(w));
            }
        }
    }
    print(&report.to_string())?;
    Ok(())
}

fn code(err: &anyhow::Error) -> &'static str {
    if let Some(e) = err.downcast_ref::<Error>() {
        e.code()
    } else if let Some(e) = err.downcast_ref::<ParseError>() {
        e.code()
    } else if let Some(e) = err.downcast_ref::<ElementError>() {
        e.code()
    } else if err.downcast_ref::<std::io::Error>().is_some() {
        "io_error"
    } else {
        "error"
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            let message = format!("{err:#}").replace('\n', " ");
            eprintln!("error: {}: {message}", code(&err));
            ExitCode::FAILURE
        }
    }
}
