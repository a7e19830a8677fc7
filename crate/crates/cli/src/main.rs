use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use atlas_core::branching::branch_adjoint;
use atlas_core::classify::{
    assemble_tables_2_3, minimal_orbit_table, reproduce_table1, reproduce_thm_ss_c2,
    ClassificationTable, SharedOrbitData,
};
use atlas_core::cohom::{cohom_adjoint, SampleConfig};
use atlas_core::flags::{flag_cohom, kostant_summands, PaintedDiagram};
use atlas_core::nilpotent::{catalog, hasse_diagram, label_representative, parse_label};
use atlas_core::sl2::{complete_triple, triple_report};
use atlas_core::{CartanType, ChevalleyAlgebra, RootSystem};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

/// Adjoint orbits of complex semi-simple Lie algebras and their
/// cohomogeneity under the compact real form.
#[derive(Parser)]
#[command(name = "atlas", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Root system summary.
    Roots { cartan_type: CartanType },
    /// Nilpotent orbits.
    Orbits {
        #[command(subcommand)]
        command: OrbitsCommand,
    },
    /// Cohomogeneity of an orbit under the compact form.
    Cohom {
        #[command(subcommand)]
        command: CohomCommand,
    },
    /// sl2 isotypic decomposition through a nilpotent orbit.
    Decomp {
        cartan_type: CartanType,
        #[arg(long)]
        label: String,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
    /// Branch the adjoint representation to a regular subalgebra.
    Branch {
        cartan_type: CartanType,
        /// Simple-root nodes spanning the subalgebra (`2,3`), or coweight
        /// marks whose centralizer is taken (`w:1,0,0`).
        #[arg(long)]
        sub: String,
    },
    /// Classification drivers; exit status 1 on any mismatch.
    Classify {
        #[command(subcommand)]
        command: ClassifyCommand,
    },
}

#[derive(Subcommand)]
enum OrbitsCommand {
    List {
        cartan_type: CartanType,
    },
    Hasse {
        cartan_type: CartanType,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Dot,
}

#[derive(clap::Args)]
struct Sampling {
    #[arg(long, default_value_t = 1)]
    seed: u64,
    #[arg(long, default_value_t = 5)]
    samples: usize,
}

impl Sampling {
    fn config(&self) -> SampleConfig {
        SampleConfig {
            num_samples: self.samples,
            ..SampleConfig::with_seed(self.seed)
        }
    }
}

#[derive(Subcommand)]
enum CohomCommand {
    /// Nilpotent orbit given by a partition or weighted Dynkin diagram.
    Orbit {
        cartan_type: CartanType,
        #[arg(long)]
        label: String,
        #[command(flatten)]
        sampling: Sampling,
    },
    /// Semi-simple orbit of a painted Dynkin diagram.
    Flag {
        cartan_type: CartanType,
        /// Crossed nodes, numbered from 1.
        #[arg(long, value_delimiter = ',', required = true)]
        cross: Vec<usize>,
        #[command(flatten)]
        sampling: Sampling,
    },
}

#[derive(Subcommand)]
enum ClassifyCommand {
    /// Minimal and next-to-minimal orbit tables.
    Table1 {
        #[command(flatten)]
        sampling: Sampling,
        #[arg(long)]
        json: bool,
    },
    /// Semi-simple orbits of cohomogeneity two.
    SsC2 {
        #[arg(long, default_value_t = 6)]
        max_rank: usize,
        #[command(flatten)]
        sampling: Sampling,
        #[arg(long)]
        json: bool,
    },
    /// Quaternionic Kähler and 3-Sasakian tables.
    Tables23 {
        /// Shared-orbit data file; the bundled copy by default.
        #[arg(long)]
        data: Option<PathBuf>,
        #[command(flatten)]
        sampling: Sampling,
        #[arg(long)]
        json: bool,
    },
}

fn emit(text: &str) -> Result<()> {
    let mut out = std::io::stdout().lock();
    match writeln!(out, "{text}") {
        Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => Ok(()),
        r => Ok(r?),
    }
}

fn print_json(v: &Value) -> Result<()> {
    emit(&serde_json::to_string_pretty(v)?)
}

fn roots(t: &CartanType) -> Result<Value> {
    let rs = RootSystem::new(t);
    Ok(json!({
        "type": t.to_string(),
        "rank": rs.rank(),
        "dimension": rs.dimension(),
        "num_positive_roots": rs.num_positive(),
        "cartan_matrix": rs.cartan_matrix(),
        "det_cartan": rs.det_cartan(),
        "highest_roots": rs.highest_roots(),
        "dual_coxeter_number": rs.dual_coxeter_number(),
        "positive_roots": rs.positive_roots(),
    }))
}

fn hasse(t: &CartanType, format: Format) -> Result<String> {
    let edges = hasse_diagram(t)?;
    Ok(match format {
        Format::Json => {
            let edges: Vec<Value> = edges
                .iter()
                .map(|(lo, hi)| json!({"lower": lo.to_string(), "upper": hi.to_string()}))
                .collect();
            serde_json::to_string_pretty(&json!({"type": t.to_string(), "covers": edges}))?
        }
        Format::Dot => {
            let mut s = format!("digraph \"{t}\" {{\n  rankdir=BT;\n");
            for (lo, hi) in &edges {
                s.push_str(&format!("  \"{lo}\" -> \"{hi}\";\n"));
            }
            s.push('}');
            s
        }
    })
}

fn cohom_orbit(t: &CartanType, label: &str, cfg: &SampleConfig) -> Result<Value> {
    let a = ChevalleyAlgebra::from_type(t);
    let label = parse_label(t, label)?;
    let rep = label_representative(&a, &label, cfg.seed)?;
    let report = cohom_adjoint(&a, &rep.x, cfg)?;
    Ok(json!({
        "type": t.to_string(),
        "label": label.to_string(),
        "diagram": rep.marks,
        "complex_orbit_dim": a.orbit_dim(&rep.x),
        "report": report,
    }))
}

fn cohom_flag(t: &CartanType, cross: &[usize], cfg: &SampleConfig) -> Result<Value> {
    let a = ChevalleyAlgebra::from_type(t);
    let pd = PaintedDiagram::new(t.clone(), cross.iter().copied())?;
    let summary = kostant_summands(a.root_system(), &pd);
    let report = flag_cohom(&a, &pd, cfg)?;
    Ok(json!({
        "diagram": pd.to_string(),
        "length": pd.length(),
        "num_summands": summary.num_summands,
        "report": report,
    }))
}

fn decomp(t: &CartanType, label: &str, seed: u64) -> Result<Value> {
    let a = ChevalleyAlgebra::from_type(t);
    let label = parse_label(t, label)?;
    let rep = label_representative(&a, &label, seed)?;
    let triple = complete_triple(&a, &rep.x, &rep.h_element(&a))?;
    let report = triple_report(&a, &triple, seed)?;
    Ok(json!({
        "type": t.to_string(),
        "label": label.to_string(),
        "diagram": rep.marks,
        "k_dim": report.decomposition.k_dim,
        "k_rank": report.k_rank,
        "multiplicities": report.decomposition.multiplicities,
        "w_dim": report.decomposition.w_dim,
        "w_commutant_dim": report.w_commutant_dim,
    }))
}

fn parse_list(s: &str) -> Result<Vec<i64>> {
    s.split(',')
        .map(|x| {
            x.trim()
                .parse::<i64>()
                .with_context(|| format!("bad entry {x:?}"))
        })
        .collect()
}

fn branch(t: &CartanType, sub: &str) -> Result<Value> {
    let rs = RootSystem::new(t);
    let (simple_roots, centralizer) = if let Some(marks) = sub.strip_prefix("w:") {
        let h = rs.coweight_element(&parse_list(marks)?)?;
        let sub = rs.root_centralizer_subsystem(&h);
        let a = ChevalleyAlgebra::new(rs.clone());
        let cdim = a.centralizer_dim(&a.cartan_element(&h.coroot));
        let info = json!({
            "type": sub.type_label(),
            "torus_dim": sub.torus_dim,
            "reductive_dim": sub.reductive_dimension(),
            "centralizer_dim": cdim,
        });
        (sub.simple_roots, Some(info))
    } else {
        let mut roots = Vec::new();
        for n in parse_list(sub)? {
            if n < 1 || n as usize > rs.rank() {
                bail!("node {n} out of range for {t}");
            }
            roots.push(rs.simple_root(n as usize - 1));
        }
        (roots, None)
    };
    let result = branch_adjoint(&rs, &simple_roots)?;
    Ok(json!({
        "type": t.to_string(),
        "simple_roots": simple_roots,
        "centralizer": centralizer,
        "total_dimension": result.total_dimension(),
        "dimensions": result.dimensions(),
        "components": result.components,
    }))
}

fn report_tables(tables: &[ClassificationTable], as_json: bool) -> Result<bool> {
    if as_json {
        print_json(&serde_json::to_value(tables)?)?;
    } else {
        for t in tables {
            emit(&t.to_string())?;
        }
    }
    Ok(tables.iter().all(|t| t.all_match()))
}

fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Roots { cartan_type } => print_json(&roots(&cartan_type)?)?,
        Command::Orbits { command } => match command {
            OrbitsCommand::List { cartan_type } => {
                print_json(&serde_json::to_value(catalog(&cartan_type)?)?)?
            }
            OrbitsCommand::Hasse {
                cartan_type,
                format,
            } => emit(&hasse(&cartan_type, format)?)?,
        },
        Command::Cohom { command } => match command {
            CohomCommand::Orbit {
                cartan_type,
                label,
                sampling,
            } => print_json(&cohom_orbit(&cartan_type, &label, &sampling.config())?)?,
            CohomCommand::Flag {
                cartan_type,
                cross,
                sampling,
            } => print_json(&cohom_flag(&cartan_type, &cross, &sampling.config())?)?,
        },
        Command::Decomp {
            cartan_type,
            label,
            seed,
        } => print_json(&decomp(&cartan_type, &label, seed)?)?,
        Command::Branch { cartan_type, sub } => print_json(&branch(&cartan_type, &sub)?)?,
        Command::Classify { command } => {
            return match command {
                ClassifyCommand::Table1 { sampling, json } => {
                    let cfg = sampling.config();
                    report_tables(&[minimal_orbit_table(&cfg)?, reproduce_table1(&cfg)?], json)
                }
                ClassifyCommand::SsC2 {
                    max_rank,
                    sampling,
                    json,
                } => report_tables(&[reproduce_thm_ss_c2(max_rank, &sampling.config())?], json),
                ClassifyCommand::Tables23 {
                    data,
                    sampling,
                    json,
                } => {
                    let data = match data {
                        Some(p) => SharedOrbitData::load(&p)?,
                        None => SharedOrbitData::bundled(),
                    };
                    let (t2, t3) = assemble_tables_2_3(&data, &sampling.config())?;
                    report_tables(&[t2, t3], json)
                }
            };
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
