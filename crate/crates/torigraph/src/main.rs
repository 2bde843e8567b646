use std::fs;
use std::io::Write;
use std::path::PathBuf;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand};
use torigraph::{
    classify, family_check, from_jsonl, star_minimal_audit, table1, table_csv, to_jsonl, Budget,
    ClassifyConfig,
};
use torigraph_core::criterion::is_quadratically_generated;
use torigraph_core::{enumerate_connected, graph6_decode, graph6_encode, Graph};
use torigraph_toric::fan::interior_weight;
use torigraph_toric::{
    buchberger, four_cycle_generators, grobner_fan, has_quadratic_gb_certified, kn_circular_gb,
    satisfies_buchberger_criterion, toric_ideal, BinomialIdeal, Certification, ReducedGB,
    TermOrder,
};

#[derive(Parser)]
#[command(
    name = "torigraph",
    version,
    about = "Toric ideals of graphs: quadratic generation and quadratic Groebner bases"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Connected graphs on N vertices up to isomorphism, one graph6 per line.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Classify every connected graph on N vertices and write JSONL records.
    Classify {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 10_000)]
        iterations: usize,
        /// Draws in the second search stream for graphs surviving the first.
        #[arg(long, default_value_t = 200_000)]
        extended_iterations: usize,
        #[arg(long, default_value_t = 7)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        fan_cap: usize,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Record wall-clock milliseconds per graph (breaks byte-identical output).
        #[arg(long)]
        timings: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Summary counts per vertex count from JSONL record files, as CSV.
    Table1 {
        #[arg(long, required = true, num_args = 1..)]
        records: Vec<PathBuf>,
    },
    /// Cycle criterion report for one graph.
    Analyze {
        #[arg(long)]
        graph: String,
    },
    /// Decide quadratic Groebner basis existence by search, then the fan.
    Certify {
        #[arg(long)]
        graph: String,
        #[arg(long, default_value_t = 100_000)]
        fan_cap: usize,
        #[arg(long, default_value_t = 10_000)]
        iterations: usize,
        #[arg(long, default_value_t = 7)]
        seed: u64,
    },
    /// Minimality audit over proper connected induced subgraphs.
    Audit {
        #[arg(long)]
        graph: String,
        #[arg(long, default_value_t = 10_000)]
        iterations: usize,
        #[arg(long, default_value_t = 0)]
        extended_iterations: usize,
        #[arg(long, default_value_t = 1000)]
        fan_cap: usize,
        #[arg(long, default_value_t = 7)]
        seed: u64,
    },
    /// Checks on the suspension of the complement of the N-cycle.
    Family {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 10_000)]
        iterations: usize,
        #[arg(long, default_value_t = 1000)]
        fan_cap: usize,
        #[arg(long, default_value_t = 7)]
        seed: u64,
    },
    /// The circular quadratic basis of the complete graph's toric ideal.
    KnGb {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        verify: bool,
        /// Print the basis elements.
        #[arg(long)]
        print: bool,
    },
    /// Reduced Groebner basis under a weight order refined by grevlex.
    Gb {
        #[arg(long)]
        graph: String,
        /// Comma-separated positive integers, one per edge in sorted order.
        #[arg(long)]
        weights: Option<String>,
    },
    /// All reduced Groebner bases of the toric ideal.
    Fan {
        #[arg(long)]
        graph: String,
        #[arg(long, default_value_t = 100_000)]
        cap: usize,
    },
}

fn main() -> Result<()> {
    match Cli::parse().command {
        Command::Enumerate { n, out } => {
            let mut text = String::new();
            for g in enumerate_connected(n)? {
                text.push_str(&graph6_encode(&g));
                text.push('\n');
            }
            emit(out, &text)
        }
        Command::Classify {
            n,
            iterations,
            extended_iterations,
            seed,
            fan_cap,
            jobs,
            timings,
            out,
        } => {
            let cfg = ClassifyConfig {
                iterations,
                extended_iterations,
                seed,
                fan_cap,
                jobs,
                timings,
            };
            let records = classify(n, &cfg)?;
            emit(out, &to_jsonl(&records))
        }
        Command::Table1 { records } => {
            let mut all = Vec::new();
            for path in &records {
                let text = fs::read_to_string(path)
                    .with_context(|| format!("reading {}", path.display()))?;
                all.extend(
                    from_jsonl(&text).with_context(|| format!("parsing {}", path.display()))?,
                );
            }
            print!("{}", table_csv(&table1(&all)?));
            Ok(())
        }
        Command::Analyze { graph } => analyze(&parse_graph(&graph)?),
        Command::Certify {
            graph,
            fan_cap,
            iterations,
            seed,
        } => {
            let g = parse_graph(&graph)?;
            let ideal = candidate_ideal(&g)?;
            match has_quadratic_gb_certified(&ideal, iterations, seed, fan_cap)? {
                Certification::Yes { weights } => println!("YES weights={}", join(&weights)),
                Certification::No { fan_size } => {
                    println!("NO fan_size={fan_size} (no reduced Groebner basis is quadratic)")
                }
                Certification::Unknown { explored } => {
                    println!("UNKNOWN explored={explored} (fan cap reached, search exhausted)")
                }
            }
            Ok(())
        }
        Command::Audit {
            graph,
            iterations,
            extended_iterations,
            fan_cap,
            seed,
        } => {
            let budget = Budget {
                iterations,
                extended_iterations,
                fan_cap,
            };
            let report = star_minimal_audit(&parse_graph(&graph)?, &budget, seed)?;
            println!("graph {}", report.graph6);
            for (g6, ev) in &report.subgraphs {
                println!("  {g6}: {ev}");
            }
            let verdict = match report.minimal {
                Some(true) => "true",
                Some(false) => "false",
                None => "unknown",
            };
            println!("minimal: {verdict}");
            Ok(())
        }
        Command::Family {
            n,
            iterations,
            fan_cap,
            seed,
        } => {
            let budget = Budget {
                iterations,
                extended_iterations: 0,
                fan_cap,
            };
            let report = family_check(n, &budget, seed)?;
            println!("{report}");
            if !report.passed() {
                bail!("family check failed");
            }
            Ok(())
        }
        Command::KnGb { n, verify, print } => {
            let gb = kn_circular_gb(n)?;
            println!(
                "n={n} basis_size={} max_degree={}",
                gb.len(),
                gb.max_degree()
            );
            if print {
                let g = Graph::complete(n)?;
                print_basis(&g, &gb);
            }
            if verify {
                let ok = satisfies_buchberger_criterion(gb.elements());
                println!("buchberger_criterion={}", if ok { "PASS" } else { "FAIL" });
                if !ok {
                    bail!("verification failed");
                }
            }
            Ok(())
        }
        Command::Gb { graph, weights } => {
            let g = parse_graph(&graph)?;
            let ideal = candidate_ideal(&g)?;
            let ord = match weights {
                Some(w) => TermOrder::weighted(&parse_weights(&w, g.m())?)?,
                None => TermOrder::grevlex(g.m())?,
            };
            let gb = buchberger(&ideal, &ord)?;
            print_basis(&g, &gb);
            println!("max_degree={}", gb.max_degree());
            Ok(())
        }
        Command::Fan { graph, cap } => {
            let g = parse_graph(&graph)?;
            let ideal = candidate_ideal(&g)?;
            let fan = grobner_fan(&ideal, cap)?;
            println!(
                "reduced_bases={}{} min_degree={} max_degree={}",
                fan.len(),
                if fan.complete { "" } else { " (capped)" },
                fan.min_degree(),
                fan.max_degree()
            );
            for deg in fan.min_degree()..=fan.max_degree() {
                if let Some(gb) = fan.gbs.iter().find(|gb| gb.max_degree() == deg) {
                    let w = interior_weight(&ideal, gb)?;
                    println!("degree {deg}: weights={}", join(&w));
                }
            }
            Ok(())
        }
    }
}

fn emit(out: Option<PathBuf>, text: &str) -> Result<()> {
    match out {
        Some(path) => fs::write(&path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            std::io::stdout().write_all(text.as_bytes())?;
            Ok(())
        }
    }
}

fn parse_graph(s: &str) -> Result<Graph> {
    graph6_decode(s.trim()).with_context(|| format!("decoding graph6 {s:?}"))
}

fn parse_weights(s: &str, m: usize) -> Result<Vec<i64>> {
    let w: Vec<i64> = s
        .split(',')
        .map(|x| x.trim().parse::<i64>())
        .collect::<Result<_, _>>()
        .context("weights must be comma-separated integers")?;
    if w.len() != m {
        bail!("{} weights given for {m} edges", w.len());
    }
    Ok(w)
}

/// Four-cycle binomials when they generate the toric ideal, otherwise the
/// saturated toric ideal.
fn candidate_ideal(g: &Graph) -> Result<BinomialIdeal> {
    if g.is_connected() && is_quadratically_generated(g)?.quad_generated {
        Ok(four_cycle_generators(g)?.assume_prime())
    } else {
        Ok(toric_ideal(g)?)
    }
}

fn print_basis(g: &Graph, gb: &ReducedGB) {
    let edges = g.edges().to_vec();
    let name = |i: usize| format!("x[{},{}]", edges[i].0, edges[i].1);
    for f in gb.elements() {
        println!("+{}", f.display_with(name));
    }
}

fn analyze(g: &Graph) -> Result<()> {
    let r = is_quadratically_generated(g)?;
    let yes = |b: bool| if b { "yes" } else { "no" };
    println!("graph6: {}", graph6_encode(g));
    println!("vertices: {}  edges: {}", g.n(), g.m());
    println!("degrees: min {} max {}", g.min_degree(), g.max_degree());
    println!(
        "bipartite: {}  chordal: {}  co-chordal: {}  2K2-free: {}",
        yes(g.is_bipartite()),
        yes(g.is_chordal()),
        yes(g.is_co_chordal()),
        yes(g.is_2k2_free())
    );
    println!("zero ideal: {}", yes(r.zero_ideal));
    for (name, c) in [
        (
            "even cycles have an even-chord or crossing odd-chords",
            &r.cond_i,
        ),
        ("odd cycles sharing one vertex are joined", &r.cond_ii),
        ("disjoint odd cycles have two bridges", &r.cond_iii),
    ] {
        match &c.witness {
            None => println!("{name}: yes"),
            Some(w) => println!("{name}: no, {w}"),
        }
    }
    println!("quadratically generated: {}", yes(r.quad_generated));
    Ok(())
}

fn join(w: &[i64]) -> String {
    w.iter().map(i64::to_string).collect::<Vec<_>>().join(",")
}
