use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use commute_spectra::error::{CliError, EXIT_MISMATCH};
use commute_spectra::json::{report_json, spectrum_json, TableJson};
use commute_spectra::{dot, limits_from_env, parse_group_spec, runner};
use commute_spectra_core::closed_forms::predicted_for;
use commute_spectra_core::graph::{build_commuting_graph, clique_decomposition, CommutingGraph};
use commute_spectra_core::group::{build_group_with, GroupTable};
use commute_spectra_core::spectrum::{clique_union_spectrum, graph_spectrum, Spectrum};
use commute_spectra_core::verify::default_suite;
use commute_spectra_core::Limits;
use serde_json::json;

const SPEC_HELP: &str = "\
Group spec grammar:
  Z:<n>  D:<order>  Q:<order>  QD:<order>  M16  Z4sZ4  D8cZ4  SG16_3
  A:<n>  S:<n>  SL2:<q>  GL2:<q>  PSL2:<q>  F20  HA:<n>  HB:<p>:<n>  PQ:<p>:<q>
  <spec> x <spec>   direct product, left-associative

D:<order> takes the group order: D:12 is the dihedral group of order 12
(D_{2m} with m = 6, written D_6 in some texts). Q and QD also take orders.

Exit codes: 0 ok, 1 mismatch, 2 usage error, 3 resource cap exceeded.
The group-order cap (default 4096) can be raised with COMMUTE_SPECTRA_MAX_ORDER.";

#[derive(Parser)]
#[command(name = "commute-spectra", version, about = "Commuting graphs of finite groups and their exact spectra", after_help = SPEC_HELP)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct GroupSource {
    /// Group spec, e.g. `D:12`, `GL2:3`, `F20 x Z:2`.
    #[arg(required_unless_present = "table", conflicts_with = "table")]
    spec: Option<String>,
    /// Read the group from a JSON table written by `export-table`.
    #[arg(long)]
    table: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    /// Clique decomposition when it exists, otherwise the characteristic polynomial.
    Auto,
    Charpoly,
    Clique,
    /// Closed-form prediction for the family.
    Formula,
    /// Clique and char-poly paths; exits 1 if they disagree.
    Both,
}

#[derive(Subcommand)]
enum Command {
    /// Print order, center, AC flag and centralizer sizes.
    #[command(after_help = SPEC_HELP)]
    Info {
        #[command(flatten)]
        group: GroupSource,
    },
    /// Compute the adjacency spectrum of the commuting graph.
    #[command(after_help = SPEC_HELP)]
    Spectrum {
        #[command(flatten)]
        group: GroupSource,
        #[arg(long, value_enum, default_value = "auto")]
        method: MethodArg,
        /// Print the JSON spectrum record.
        #[arg(long)]
        json: bool,
    },
    /// Run the verification suite; exits 1 unless every case matches.
    Verify {
        /// Only run cases whose group name contains this substring.
        #[arg(long)]
        filter: Option<String>,
        /// Worker threads (default: available parallelism).
        #[arg(long)]
        jobs: Option<usize>,
        /// Write the JSON report to this path (`-` for stdout).
        #[arg(long)]
        json: Option<PathBuf>,
        /// Include per-case runtimes in the JSON report.
        #[arg(long)]
        runtimes: bool,
    },
    /// Write the commuting graph as Graphviz DOT.
    #[command(after_help = SPEC_HELP)]
    ExportDot {
        #[command(flatten)]
        group: GroupSource,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Write the Cayley table as JSON.
    #[command(after_help = SPEC_HELP)]
    ExportTable {
        spec: String,
        #[arg(long)]
        out: PathBuf,
    },
}

fn load_group(src: &GroupSource, limits: &Limits) -> Result<GroupTable, CliError> {
    if let Some(path) = &src.table {
        let text = std::fs::read_to_string(path).map_err(|e| io_err(path, e))?;
        let table: TableJson =
            serde_json::from_str(&text).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
        if table.order > limits.max_group_order {
            return Err(commute_spectra_core::Error::OrderOverCap {
                order: table.order as u64,
                cap: limits.max_group_order as u64,
            }
            .into());
        }
        return Ok(table.into_table()?);
    }
    let text = src.spec.as_deref().unwrap_or_default();
    build(text, limits)
}

fn build(text: &str, limits: &Limits) -> Result<GroupTable, CliError> {
    let spec = parse_group_spec(text).map_err(|source| CliError::Parse { input: text.to_string(), source })?;
    Ok(build_group_with(&spec, limits)?)
}

fn io_err(path: &Path, source: std::io::Error) -> CliError {
    CliError::Io { path: path.display().to_string(), source }
}

fn write_out(path: Option<&Path>, text: &str) -> Result<(), CliError> {
    match path {
        Some(p) if p != Path::new("-") => std::fs::write(p, text).map_err(|e| io_err(p, e)),
        _ => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes()).map_err(|e| io_err(Path::new("<stdout>"), e))
        }
    }
}

fn join(xs: &[usize]) -> String {
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

fn info(g: &GroupTable) -> Result<String, CliError> {
    let mut s = String::new();
    let name = g.family().map_or_else(|| "(table)".to_string(), |f| f.to_string());
    s += &format!("group         {name}\n");
    s += &format!("order         {}\n", g.order());
    s += &format!("center        {}\n", g.center().len());
    if g.is_abelian() {
        s += "abelian       true\n";
        return Ok(s);
    }
    let family = g.centralizer_family()?;
    let mut sizes = family.sizes();
    sizes.sort_unstable_by(|a, b| b.cmp(a));
    s += "abelian       false\n";
    s += &format!("ac            {}\n", g.is_ac_group()?);
    s += &format!("centralizers  {}\n", join(&sizes));
    let cg = build_commuting_graph(g)?;
    s += &format!("vertices      {}\n", cg.vertex_count());
    s += &format!("edges         {}\n", cg.edge_count());
    if let Some(d) = clique_decomposition(cg.graph()) {
        let mut c = d.clique_sizes.clone();
        c.sort_unstable_by(|a, b| b.cmp(a));
        s += &format!("cliques       {}\n", join(&c));
    }
    if let Some(Ok(p)) = g.family().and_then(predicted_for) {
        s += &format!("closed form   {}\n", p.formula.name());
    }
    Ok(s)
}

fn spectrum_text(title: &str, sp: &Spectrum) -> String {
    let mut s = format!("{title}\n{:>8}  {:>12}\n", "value", "multiplicity");
    for &(v, k) in sp.eigenvalues() {
        s += &format!("{v:>8}  {k:>12}\n");
    }
    if !sp.is_integral() {
        s += &format!("residual  {}\n", sp.residual());
    }
    s += &format!("integral  {}\n", sp.is_integral());
    s
}

fn clique_path(cg: &CommutingGraph) -> Result<Spectrum, CliError> {
    let d = clique_decomposition(cg.graph())
        .ok_or_else(|| CliError::Usage("commuting graph is not a disjoint union of cliques".into()))?;
    Ok(clique_union_spectrum(&d)?)
}

/// Returns the text to print and whether the paths agreed.
fn spectrum(g: &GroupTable, method: MethodArg, as_json: bool, limits: &Limits) -> Result<(String, bool), CliError> {
    if method == MethodArg::Formula {
        let family = g
            .family()
            .ok_or_else(|| CliError::Usage("formula method needs a group spec, not a table".into()))?;
        let p = predicted_for(family)
            .ok_or_else(|| CliError::Usage(format!("no closed form for {family}")))??;
        let text = if as_json {
            let mut v = spectrum_json(&p.spectrum);
            v["formula"] = json!(p.formula.name());
            v["errata"] = json!(p.errata);
            v.to_string() + "\n"
        } else {
            spectrum_text(&format!("method  formula ({})", p.formula.name()), &p.spectrum)
        };
        return Ok((text, true));
    }
    let cg = build_commuting_graph(g)?;
    let single = |title: &str, sp: Spectrum| {
        if as_json {
            spectrum_json(&sp).to_string() + "\n"
        } else {
            spectrum_text(title, &sp)
        }
    };
    match method {
        MethodArg::Clique => Ok((single("method  clique", clique_path(&cg)?), true)),
        MethodArg::Charpoly => Ok((single("method  charpoly", graph_spectrum(cg.graph(), limits)?), true)),
        MethodArg::Auto => match clique_decomposition(cg.graph()) {
            Some(d) => Ok((single("method  clique", clique_union_spectrum(&d)?), true)),
            None => Ok((single("method  charpoly", graph_spectrum(cg.graph(), limits)?), true)),
        },
        MethodArg::Both => {
            let a = clique_path(&cg)?;
            let b = graph_spectrum(cg.graph(), limits)?;
            let agree = a == b;
            let text = if as_json {
                json!({"clique": spectrum_json(&a), "charpoly": spectrum_json(&b), "agree": agree}).to_string() + "\n"
            } else {
                format!(
                    "{}{}agree  {agree}\n",
                    spectrum_text("method  clique", &a),
                    spectrum_text("method  charpoly", &b)
                )
            };
            Ok((text, agree))
        }
        MethodArg::Formula => unreachable!(),
    }
}

fn verify(filter: Option<&str>, jobs: Option<usize>, json_path: Option<&Path>, runtimes: bool, limits: &Limits) -> Result<bool, CliError> {
    let cases: Vec<_> = default_suite()
        .into_iter()
        .filter(|c| filter.is_none_or(|f| c.spec.to_string().contains(f)))
        .collect();
    let jobs = jobs.unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()));
    let (report, times) = runner::run_suite(&cases, limits, jobs);

    let mut lines = String::new();
    for r in &report.records {
        let status = match (&r.error, r.matched) {
            (Some(_), _) => "ERROR",
            (None, true) => "PASS",
            (None, false) => "FAIL",
        };
        lines += &format!("{status:<5} {:>3} {:<14} {}", r.id, r.name, r.expected);
        if let Some(e) = &r.error {
            lines += &format!(": {e}");
        }
        lines.push('\n');
    }
    let s = report.summary;
    lines += &format!(
        "{} cases: {} matched, {} mismatched, {} errors\n",
        s.total, s.matched, s.mismatched, s.errors
    );

    let to_stdout = json_path.is_some_and(|p| p == Path::new("-"));
    if to_stdout {
        eprint!("{lines}");
    } else {
        print!("{lines}");
    }
    if let Some(p) = json_path {
        let v = report_json(&report, runtimes.then_some(times.as_slice()));
        write_out(Some(p), &(serde_json::to_string_pretty(&v).unwrap() + "\n"))?;
    }
    Ok(report.all_matched())
}

fn run(cli: Cli) -> Result<i32, CliError> {
    let limits = limits_from_env()?;
    match cli.command {
        Command::Info { group } => {
            let g = load_group(&group, &limits)?;
            write_out(None, &info(&g)?)?;
        }
        Command::Spectrum { group, method, json } => {
            let g = load_group(&group, &limits)?;
            let (text, agree) = spectrum(&g, method, json, &limits)?;
            write_out(None, &text)?;
            if !agree {
                return Ok(EXIT_MISMATCH);
            }
        }
        Command::Verify { filter, jobs, json, runtimes } => {
            if jobs == Some(0) {
                return Err(CliError::Usage("--jobs must be at least 1".into()));
            }
            if !verify(filter.as_deref(), jobs, json.as_deref(), runtimes, &limits)? {
                return Ok(EXIT_MISMATCH);
            }
        }
        Command::ExportDot { group, out } => {
            let g = load_group(&group, &limits)?;
            let cg = build_commuting_graph(&g)?;
            write_out(out.as_deref(), &dot::export_dot(&cg))?;
        }
        Command::ExportTable { spec, out } => {
            let g = build(&spec, &limits)?;
            let text = serde_json::to_string(&TableJson::from_table(&g)).unwrap() + "\n";
            write_out(Some(&out), &text)?;
        }
    }
    Ok(0)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
