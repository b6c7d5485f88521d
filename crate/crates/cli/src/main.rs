use std::fs;
use std::io::{self, Read};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use lichor_core::structure::BlockClass;
use lichor_core::verify::{
    brute_force_list_color, gen_line_perfect, identical_lists, random_lists, verify_coloring,
    GenParams, DEFAULT_ORACLE_CAP,
};
use lichor_core::{
    analyze, chromatic_index, emit_instance, emit_report, parse_instance, parse_report,
    solve_with_root, Audit, Error, Instance,
};
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::json;

const EXIT_NOT_LINE_PERFECT: u8 = 2;
const EXIT_INVARIANT: u8 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "lichor",
    version,
    about = "List edge coloring of line perfect multigraphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Color an instance and print the report.
    Solve {
        /// Instance file, or `-` for stdin.
        file: PathBuf,
        /// Block the traversal starts from.
        #[arg(long, default_value_t = 0)]
        root: usize,
    },
    /// Print the chromatic index of the instance's graph.
    Chi { file: PathBuf },
    /// Print one JSON line per block of the instance's graph.
    Classify { file: PathBuf },
    /// Print a random line perfect instance.
    Gen {
        /// Overridden by LICHOR_SEED when that is set.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        blocks: usize,
        #[arg(long, default_value_t = 2)]
        max_mult: usize,
        #[arg(long, default_value_t = 3)]
        max_centers: usize,
        #[arg(long, value_enum, default_value_t = ListKind::Random)]
        lists: ListKind,
    },
    /// Check that a report colors an instance properly from its lists.
    Verify { instance: PathBuf, report: PathBuf },
    /// Color an instance by exhaustive search.
    Oracle {
        file: PathBuf,
        #[arg(long, default_value_t = DEFAULT_ORACLE_CAP)]
        cap: usize,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ListKind {
    /// `χ'` colors per edge, drawn from `1..=2χ'`.
    Random,
    /// `{1..=χ'}` on every edge.
    Identical,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(exit_code_for(&err))
        }
    }
}

fn exit_code_for(err: &anyhow::Error) -> u8 {
    match err.downcast_ref::<Error>() {
        Some(Error::NotLinePerfect { .. }) => EXIT_NOT_LINE_PERFECT,
        Some(Error::Invariant(_)) => EXIT_INVARIANT,
        _ => 1,
    }
}

fn read_input(path: &Path) -> Result<String> {
    if path == Path::new("-") {
        let mut text = String::new();
        io::stdin()
            .read_to_string(&mut text)
            .context("reading stdin")?;
        Ok(text)
    } else {
        fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
    }
}

fn read_instance(path: &Path) -> Result<Instance> {
    let text = read_input(path)?;
    Ok(parse_instance(&text)?)
}

fn run(command: Command) -> Result<ExitCode> {
    match command {
        Command::Solve { file, root } => {
            let inst = read_instance(&file)?;
            let report = solve_with_root(&inst, root, &mut Audit::new())?;
            println!("{}", emit_report(&report));
            if !report.conforming {
                for d in &report.diagnostics {
                    eprintln!("warning: {d}");
                }
                return Ok(ExitCode::from(EXIT_INVARIANT));
            }
        }
        Command::Chi { file } => {
            let inst = read_instance(&file)?;
            println!("{}", chromatic_index(&inst.graph)?);
        }
        Command::Classify { file } => {
            let inst = read_instance(&file)?;
            let g = &inst.graph;
            let analysis = analyze(g)?;
            let blocks = analysis
                .decomposition
                .blocks
                .iter()
                .zip(&analysis.classes)
                .enumerate()
                .map(|(i, (block, class))| {
                    let mut entry = json!({
                        "block": i,
                        "class": class.kind(),
                        "vertices": g.vertices_of(block),
                        "edges": block.to_vec(),
                    });
                    if let BlockClass::K11n { apex_a, apex_b, .. } = class {
                        entry["apexes"] = json!([apex_a, apex_b]);
                    }
                    entry
                });
            for b in blocks {
                println!("{b}");
            }
        }
        Command::Gen {
            seed,
            blocks,
            max_mult,
            max_centers,
            lists,
        } => {
            let seed = match std::env::var("LICHOR_SEED") {
                Ok(s) => s
                    .trim()
                    .parse()
                    .context("LICHOR_SEED is not an unsigned integer")?,
                Err(_) => seed,
            };
            let graph = gen_line_perfect(&GenParams::new(seed, blocks, max_mult, max_centers))?;
            let chi = chromatic_index(&graph)?;
            let lists = match lists {
                ListKind::Identical => identical_lists(graph.edge_count(), chi),
                ListKind::Random => {
                    let mut rng = ChaCha8Rng::seed_from_u64(seed);
                    random_lists(&mut rng, graph.edge_count(), chi, 2 * chi as u32)
                }
            };
            println!("{}", emit_instance(&Instance { graph, lists }));
        }
        Command::Verify { instance, report } => {
            let inst = read_instance(&instance)?;
            let report = parse_report(&read_input(&report)?)?;
            let g = &inst.graph;
            if report.colors.len() != g.edge_count() {
                anyhow::bail!(
                    "report colors {} edges, instance has {}",
                    report.colors.len(),
                    g.edge_count()
                );
            }
            verify_coloring(g, &g.all_edges(), &inst.lists, &report.coloring())?;
            println!("ok");
        }
        Command::Oracle { file, cap } => {
            let inst = read_instance(&file)?;
            let g = &inst.graph;
            let found = brute_force_list_color(g, &g.all_edges(), &inst.lists, cap)?;
            let colors = found.and_then(|c| c.to_dense(g.edge_count()));
            println!("{}", json!({ "colors": colors }));
        }
    }
    Ok(ExitCode::SUCCESS)
}
