//! Command-line front end for the Hurwitz-number engines.
//!
//! Exit codes: 0 on success, 1 when a cross-route verification
//! (`--route all`, `--basis both`, `verify`) finds a mismatch, 2 on usage or
//! validation errors. Output is deterministic byte for byte for a fixed
//! command line and seed.

mod verify;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use hurwitzkit::cayley::{combinatorial_f, multispecies_f, path_counts};
use hurwitzkit::character::{character_table_with_max, CharacterTable, DEFAULT_MAX_N};
use hurwitzkit::hurwitz::{
    brute_force_hurwitz, character_weighted, frobenius_schur, geometric_weighted,
    multispecies_weighted, MultiDegree,
};
use hurwitzkit::partition::Partition;
use hurwitzkit::rational::format_rational;
use hurwitzkit::tau::{degree_lattice, tau_power_sum_table, tau_schur_coeffs};
use hurwitzkit::weights::WeightSpec;
use hurwitzkit::Rational;

#[derive(Parser)]
#[command(
    name = "hurwitzkit",
    about = "Exact classical, weighted, multispecies and quantum Hurwitz numbers,\n\
             cross-verified by independent routes, with truncated tau-function tables.",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum WeightedRoute {
    Geometric,
    Character,
    Cayley,
    All,
}

#[derive(Clone, Copy, ValueEnum)]
enum HurwitzRoute {
    Character,
    Brute,
    Both,
}

#[derive(Clone, Copy, ValueEnum)]
enum MultispeciesRoute {
    Character,
    Cayley,
    All,
}

#[derive(Clone, Copy, ValueEnum)]
enum Basis {
    Schur,
    Powersum,
    Both,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum Scale {
    Small,
    Full,
}

#[derive(Subcommand)]
enum Command {
    /// Emit the exact character table of S_n.
    Chartable {
        /// Symmetric group size.
        n: u32,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Classical Hurwitz number for a list of profiles.
    Hurwitz {
        #[arg(long)]
        n: u32,
        /// Space-separated partition literals, e.g. "[2,1] [2,1]".
        #[arg(long)]
        profiles: String,
        #[arg(long, value_enum, default_value = "character")]
        route: HurwitzRoute,
    },
    /// Weighted double Hurwitz number at degree d.
    Weighted {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        d: u32,
        #[arg(long)]
        mu: String,
        #[arg(long)]
        nu: String,
        /// Path to a weight-spec JSON file.
        #[arg(long)]
        spec: PathBuf,
        #[arg(long, value_enum, default_value = "character")]
        route: WeightedRoute,
        /// Override the truncation order stored in quantum specs.
        #[arg(long)]
        truncation: Option<u32>,
    },
    /// Multispecies weighted Hurwitz number at a multi-degree.
    Multispecies {
        #[arg(long)]
        n: u32,
        /// Multi-degree "d1,d2;e1,e2" (class I left of the semicolon).
        #[arg(long)]
        deg: String,
        #[arg(long)]
        mu: String,
        #[arg(long)]
        nu: String,
        /// Path to a JSON file {"class_i": [specs], "class_ii": [specs]}.
        #[arg(long)]
        specs: PathBuf,
        #[arg(long, value_enum, default_value = "character")]
        route: MultispeciesRoute,
        #[arg(long)]
        truncation: Option<u32>,
    },
    /// Emit the block-ordered path-count table of S_n at degree d.
    Paths {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        d: u32,
        /// Write the table to this file instead of stdout.
        #[arg(long)]
        emit: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Emit truncated tau-function tables in one or both bases.
    Tau {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        specs: PathBuf,
        /// Rectangular degree bounds "d1,d2;e1" per species.
        #[arg(long)]
        dmax: String,
        #[arg(long, value_enum, default_value = "both")]
        basis: Basis,
        /// Sector shift N for the Schur basis (power-sum basis needs N = 0).
        #[arg(long, default_value = "0")]
        shift: i64,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[arg(long)]
        output: Option<PathBuf>,
        #[arg(long)]
        truncation: Option<u32>,
    },
    /// Run the cross-verification suites and print a report.
    Verify {
        #[arg(long, default_value = "1")]
        seed: u64,
        #[arg(long, value_enum, default_value = "small")]
        scale: Scale,
        /// Deliberately corrupt one character-table sign to prove the
        /// suites detect it (the run must then fail).
        #[arg(long)]
        inject_fault: bool,
    },
}

/// Errors that should surface as exit code 2.
struct UsageError(String);

impl From<hurwitzkit::Error> for UsageError {
    fn from(e: hurwitzkit::Error) -> Self {
        UsageError(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(UsageError(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn max_n_from_env() -> u32 {
    std::env::var("HURWITZKIT_MAX_N")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(DEFAULT_MAX_N)
}

fn build_table(n: u32) -> Result<CharacterTable, UsageError> {
    Ok(character_table_with_max(n, max_n_from_env())?)
}

fn parse_partition(s: &str) -> Result<Partition, UsageError> {
    Ok(Partition::parse(s)?)
}

fn parse_profiles(s: &str, n: u32) -> Result<Vec<Partition>, UsageError> {
    let mut out = Vec::new();
    for piece in s.split_whitespace() {
        let p = parse_partition(piece)?;
        if p.weight() != n {
            return Err(UsageError(format!("profile {p} is not a partition of {n}")));
        }
        out.push(p);
    }
    if out.is_empty() {
        return Err(UsageError("no profiles given".into()));
    }
    Ok(out)
}

/// "d1,d2;e1" → ([d1,d2], [e1]); either side may be empty.
fn parse_multidegree(s: &str) -> Result<MultiDegree, UsageError> {
    let (left, right) = match s.split_once(';') {
        Some((l, r)) => (l, r),
        None => (s, ""),
    };
    let parse_side = |side: &str| -> Result<Vec<u32>, UsageError> {
        if side.trim().is_empty() {
            return Ok(Vec::new());
        }
        side.split(',')
            .map(|x| {
                x.trim()
                    .parse::<u32>()
                    .map_err(|_| UsageError(format!("bad degree `{x}` in `{s}`")))
            })
            .collect()
    };
    Ok(MultiDegree::new(parse_side(left)?, parse_side(right)?))
}

fn load_spec(path: &PathBuf, truncation: Option<u32>) -> Result<WeightSpec, UsageError> {
    let text = fs::read_to_string(path)
        .map_err(|e| UsageError(format!("cannot read {}: {e}", path.display())))?;
    let mut spec: WeightSpec = serde_json::from_str(&text)
        .map_err(|e| UsageError(format!("bad weight spec in {}: {e}", path.display())))?;
    if let Some(m) = truncation {
        override_truncation(&mut spec, m);
    }
    Ok(spec)
}

#[derive(serde::Deserialize)]
struct SpecListFile {
    #[serde(default)]
    class_i: Vec<WeightSpec>,
    #[serde(default)]
    class_ii: Vec<WeightSpec>,
}

fn load_spec_lists(
    path: &PathBuf,
    truncation: Option<u32>,
) -> Result<(Vec<WeightSpec>, Vec<WeightSpec>), UsageError> {
    let text = fs::read_to_string(path)
        .map_err(|e| UsageError(format!("cannot read {}: {e}", path.display())))?;
    let mut lists: SpecListFile = serde_json::from_str(&text)
        .map_err(|e| UsageError(format!("bad spec list in {}: {e}", path.display())))?;
    if let Some(m) = truncation {
        for spec in lists.class_i.iter_mut().chain(lists.class_ii.iter_mut()) {
            override_truncation(spec, m);
        }
    }
    Ok((lists.class_i, lists.class_ii))
}

fn override_truncation(spec: &mut WeightSpec, m: u32) {
    match spec {
        WeightSpec::QuantumE { truncation, .. }
        | WeightSpec::QuantumEPrime { truncation, .. }
        | WeightSpec::QuantumH { truncation, .. }
        | WeightSpec::QuantumQ { truncation, .. } => *truncation = Some(m),
        _ => {}
    }
}

fn write_out(output: Option<&PathBuf>, text: &str) -> Result<(), UsageError> {
    match output {
        Some(path) => fs::write(path, text)
            .map_err(|e| UsageError(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(command: Command) -> Result<ExitCode, UsageError> {
    match command {
        Command::Chartable { n, format, output } => {
            let table = build_table(n)?;
            let text = match format {
                Format::Json => chartable_json(&table),
                Format::Csv => chartable_csv(&table),
            };
            write_out(output.as_ref(), &text)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Hurwitz { n, profiles, route } => {
            let profiles = parse_profiles(&profiles, n)?;
            let table = build_table(n)?;
            match route {
                HurwitzRoute::Character => {
                    println!("{}", format_rational(&frobenius_schur(&profiles, &table)?));
                    Ok(ExitCode::SUCCESS)
                }
                HurwitzRoute::Brute => {
                    println!("{}", format_rational(&brute_force_hurwitz(&profiles, n)?));
                    Ok(ExitCode::SUCCESS)
                }
                HurwitzRoute::Both => {
                    let fs_value = frobenius_schur(&profiles, &table)?;
                    let bf_value = brute_force_hurwitz(&profiles, n)?;
                    println!("character {}", format_rational(&fs_value));
                    println!("brute {}", format_rational(&bf_value));
                    if fs_value == bf_value {
                        Ok(ExitCode::SUCCESS)
                    } else {
                        eprintln!("error: routes disagree");
                        Ok(ExitCode::from(1))
                    }
                }
            }
        }
        Command::Weighted {
            n,
            d,
            mu,
            nu,
            spec,
            route,
            truncation,
        } => {
            let mu = parse_partition(&mu)?;
            let nu = parse_partition(&nu)?;
            let spec = load_spec(&spec, truncation)?;
            let table = build_table(n)?;
            match route {
                WeightedRoute::Character => {
                    println!(
                        "{}",
                        format_rational(&character_weighted(d, &mu, &nu, &spec, &table)?)
                    );
                    Ok(ExitCode::SUCCESS)
                }
                WeightedRoute::Geometric => {
                    println!(
                        "{}",
                        format_rational(&geometric_weighted(d, &mu, &nu, &spec, &table)?)
                    );
                    Ok(ExitCode::SUCCESS)
                }
                WeightedRoute::Cayley => {
                    let paths = path_counts(n, d)?;
                    println!(
                        "{}",
                        format_rational(&combinatorial_f(d, &mu, &nu, &spec, &paths)?)
                    );
                    Ok(ExitCode::SUCCESS)
                }
                WeightedRoute::All => {
                    let geometric = geometric_weighted(d, &mu, &nu, &spec, &table)?;
                    let character = character_weighted(d, &mu, &nu, &spec, &table)?;
                    let paths = path_counts(n, d)?;
                    let cayley = combinatorial_f(d, &mu, &nu, &spec, &paths)?;
                    println!("geometric {}", format_rational(&geometric));
                    println!("character {}", format_rational(&character));
                    println!("cayley {}", format_rational(&cayley));
                    if geometric == character && character == cayley {
                        Ok(ExitCode::SUCCESS)
                    } else {
                        eprintln!("error: routes disagree");
                        Ok(ExitCode::from(1))
                    }
                }
            }
        }
        Command::Multispecies {
            n,
            deg,
            mu,
            nu,
            specs,
            route,
            truncation,
        } => {
            let deg = parse_multidegree(&deg)?;
            let mu = parse_partition(&mu)?;
            let nu = parse_partition(&nu)?;
            let (specs_i, specs_ii) = load_spec_lists(&specs, truncation)?;
            let table = build_table(n)?;
            match route {
                MultispeciesRoute::Character => {
                    let value = multispecies_weighted(&deg, &mu, &nu, &specs_i, &specs_ii, &table)?;
                    println!("{}", format_rational(&value));
                    Ok(ExitCode::SUCCESS)
                }
                MultispeciesRoute::Cayley => {
                    let value = multispecies_f(&deg, &mu, &nu, &specs_i, &specs_ii, n)?;
                    println!("{}", format_rational(&value));
                    Ok(ExitCode::SUCCESS)
                }
                MultispeciesRoute::All => {
                    let eigen = multispecies_weighted(&deg, &mu, &nu, &specs_i, &specs_ii, &table)?;
                    let matrix = multispecies_f(&deg, &mu, &nu, &specs_i, &specs_ii, n)?;
                    println!("character {}", format_rational(&eigen));
                    println!("cayley {}", format_rational(&matrix));
                    if eigen == matrix {
                        Ok(ExitCode::SUCCESS)
                    } else {
                        eprintln!("error: routes disagree");
                        Ok(ExitCode::from(1))
                    }
                }
            }
        }
        Command::Paths { n, d, emit, format } => {
            let table = path_counts(n, d)?;
            let text = match format {
                Format::Json => paths_json(&table),
                Format::Csv => paths_csv(&table),
            };
            write_out(emit.as_ref(), &text)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Tau {
            n,
            specs,
            dmax,
            basis,
            shift,
            format,
            output,
            truncation,
        } => {
            let bounds = parse_multidegree(&dmax)?;
            let (specs_i, specs_ii) = load_spec_lists(&specs, truncation)?;
            match basis {
                Basis::Schur => {
                    let coeffs = tau_schur_coeffs(n, &specs_i, &specs_ii, shift, &bounds)?;
                    let text = match format {
                        Format::Json => schur_json(&coeffs),
                        Format::Csv => schur_csv(&coeffs),
                    };
                    write_out(output.as_ref(), &text)?;
                    Ok(ExitCode::SUCCESS)
                }
                Basis::Powersum => {
                    if shift != 0 {
                        return Err(UsageError(
                            "the power-sum basis is only defined at shift 0".into(),
                        ));
                    }
                    let table = tau_power_sum_table(n, &specs_i, &specs_ii, &bounds)?;
                    let text = match format {
                        Format::Json => powersum_json(&table),
                        Format::Csv => powersum_csv(&table),
                    };
                    write_out(output.as_ref(), &text)?;
                    Ok(ExitCode::SUCCESS)
                }
                Basis::Both => {
                    if shift != 0 {
                        return Err(UsageError("the basis bridge is asserted at shift 0".into()));
                    }
                    if matches!(format, Format::Csv) {
                        return Err(UsageError(
                            "--basis both emits a combined document; use --format json".into(),
                        ));
                    }
                    let coeffs = tau_schur_coeffs(n, &specs_i, &specs_ii, 0, &bounds)?;
                    let table = tau_power_sum_table(n, &specs_i, &specs_ii, &bounds)?;
                    let chars = build_table(n)?;
                    let mismatches = bridge_mismatches(&coeffs, &table, &bounds, &chars)?;
                    let doc = json!({
                        "n": n,
                        "schur": schur_value(&coeffs),
                        "powersum": powersum_value(&table),
                        "bridge_mismatches": mismatches,
                    });
                    let text = format!("{}\n", serde_json::to_string_pretty(&doc).unwrap());
                    write_out(output.as_ref(), &text)?;
                    if output.is_some() {
                        if mismatches == 0 {
                            println!("bridge ok");
                        } else {
                            println!("bridge mismatches {mismatches}");
                        }
                    }
                    if mismatches == 0 {
                        Ok(ExitCode::SUCCESS)
                    } else {
                        eprintln!("error: {mismatches} bridge mismatches");
                        Ok(ExitCode::from(1))
                    }
                }
            }
        }
        Command::Verify {
            seed,
            scale,
            inject_fault,
        } => {
            let full = matches!(scale, Scale::Full);
            let (report, ok) = verify::run_verify(seed, full, inject_fault);
            print!("{report}");
            if ok {
                Ok(ExitCode::SUCCESS)
            } else {
                Ok(ExitCode::from(1))
            }
        }
    }
}

/// Transforms the Schur-basis data into power-sum entries through the
/// character table and counts disagreements with the direct table.
fn bridge_mismatches(
    coeffs: &hurwitzkit::SchurCoeffs,
    table: &hurwitzkit::SeriesTable,
    bounds: &MultiDegree,
    chars: &CharacterTable,
) -> Result<usize, UsageError> {
    let mut mismatches = 0usize;
    for deg in degree_lattice(bounds) {
        for mu in chars.partitions() {
            for nu in chars.partitions() {
                let mut acc = Rational::from_integer(0.into());
                for (lambda, series) in &coeffs.entries {
                    let mut coeff = Rational::from_integer(1.into());
                    let degrees = deg.class_i.iter().chain(deg.class_ii.iter());
                    for (s, &d) in series.iter().zip(degrees) {
                        coeff *= s.coeff(d as usize).clone();
                    }
                    let cm = chars.value(lambda, mu)?;
                    let cn = chars.value(lambda, nu)?;
                    acc += coeff * Rational::from_integer((cm * cn).into());
                }
                acc = acc
                    / Rational::from_integer(mu.z_order())
                    / Rational::from_integer(nu.z_order());
                let direct = table
                    .get(&deg.class_i, &deg.class_ii, mu, nu)
                    .expect("lattice point in table");
                if &acc != direct {
                    mismatches += 1;
                }
            }
        }
    }
    Ok(mismatches)
}

fn chartable_json(table: &CharacterTable) -> String {
    let mut rows = Map::new();
    for (li, lambda) in table.partitions().iter().enumerate() {
        let mut row = Map::new();
        for (mi, mu) in table.partitions().iter().enumerate() {
            row.insert(mu.literal(), json!(table.value_by_index(li, mi)));
        }
        rows.insert(lambda.literal(), Value::Object(row));
    }
    let doc = json!({ "n": table.n(), "rows": rows });
    format!("{}\n", serde_json::to_string_pretty(&doc).unwrap())
}

fn chartable_csv(table: &CharacterTable) -> String {
    let mut out = String::from("lambda");
    for mu in table.partitions() {
        out.push_str(&format!(",{}", mu.literal()));
    }
    out.push('\n');
    for (li, lambda) in table.partitions().iter().enumerate() {
        out.push_str(&format!("\"{}\"", lambda.literal()));
        for mi in 0..table.partitions().len() {
            out.push_str(&format!(",{}", table.value_by_index(li, mi)));
        }
        out.push('\n');
    }
    out
}

fn paths_json(table: &hurwitzkit::cayley::PathCountTable) -> String {
    let mut by_signature = Map::new();
    for sig in table.signatures() {
        let mut by_mu = Map::new();
        for mu in table.classes() {
            let mut by_nu = Map::new();
            for nu in table.classes() {
                let count = table.count(sig, mu, nu);
                if count > 0 {
                    by_nu.insert(nu.literal(), json!(count));
                }
            }
            if !by_nu.is_empty() {
                by_mu.insert(mu.literal(), Value::Object(by_nu));
            }
        }
        by_signature.insert(sig.literal(), Value::Object(by_mu));
    }
    let doc = json!({ "n": table.n(), "d": table.d(), "counts": by_signature });
    format!("{}\n", serde_json::to_string_pretty(&doc).unwrap())
}

fn paths_csv(table: &hurwitzkit::cayley::PathCountTable) -> String {
    let mut out = String::from("signature,mu,nu,count\n");
    for sig in table.signatures() {
        for mu in table.classes() {
            for nu in table.classes() {
                let count = table.count(sig, mu, nu);
                if count > 0 {
                    out.push_str(&format!(
                        "\"{}\",\"{}\",\"{}\",{count}\n",
                        sig.literal(),
                        mu.literal(),
                        nu.literal()
                    ));
                }
            }
        }
    }
    out
}

fn schur_value(coeffs: &hurwitzkit::SchurCoeffs) -> Value {
    let mut entries = Map::new();
    for (lambda, series) in &coeffs.entries {
        let lists: Vec<Value> = series
            .iter()
            .map(|s| {
                Value::Array(
                    s.coeffs()
                        .iter()
                        .map(|c| Value::String(format_rational(c)))
                        .collect(),
                )
            })
            .collect();
        entries.insert(lambda.literal(), Value::Array(lists));
    }
    json!({
        "basis": "schur",
        "n": coeffs.n,
        "shift": coeffs.shift,
        "coefficients": entries,
    })
}

fn schur_json(coeffs: &hurwitzkit::SchurCoeffs) -> String {
    format!(
        "{}\n",
        serde_json::to_string_pretty(&schur_value(coeffs)).unwrap()
    )
}

fn schur_csv(coeffs: &hurwitzkit::SchurCoeffs) -> String {
    let mut out = String::from("lambda,species,degree,coefficient\n");
    for (lambda, series) in &coeffs.entries {
        for (k, s) in series.iter().enumerate() {
            for (degree, c) in s.coeffs().iter().enumerate() {
                out.push_str(&format!(
                    "\"{}\",{k},{degree},{}\n",
                    lambda.literal(),
                    format_rational(c)
                ));
            }
        }
    }
    out
}

fn degree_key(class_i: &[u32], class_ii: &[u32]) -> String {
    let left: Vec<String> = class_i.iter().map(u32::to_string).collect();
    let right: Vec<String> = class_ii.iter().map(u32::to_string).collect();
    format!("{};{}", left.join(","), right.join(","))
}

fn powersum_value(table: &hurwitzkit::SeriesTable) -> Value {
    let mut by_degree = Map::new();
    for ((deg_i, deg_ii, mu, nu), value) in &table.entries {
        let key = degree_key(deg_i, deg_ii);
        let slot = by_degree
            .entry(key)
            .or_insert_with(|| Value::Object(Map::new()));
        let by_mu = slot.as_object_mut().unwrap();
        let mu_slot = by_mu
            .entry(mu.literal())
            .or_insert_with(|| Value::Object(Map::new()));
        mu_slot
            .as_object_mut()
            .unwrap()
            .insert(nu.literal(), Value::String(format_rational(value)));
    }
    json!({ "basis": "powersum", "n": table.n, "entries": by_degree })
}

fn powersum_json(table: &hurwitzkit::SeriesTable) -> String {
    format!(
        "{}\n",
        serde_json::to_string_pretty(&powersum_value(table)).unwrap()
    )
}

fn powersum_csv(table: &hurwitzkit::SeriesTable) -> String {
    let mut out = String::from("deg,mu,nu,value\n");
    for ((deg_i, deg_ii, mu, nu), value) in &table.entries {
        out.push_str(&format!(
            "\"{}\",\"{}\",\"{}\",{}\n",
            degree_key(deg_i, deg_ii),
            mu.literal(),
            nu.literal(),
            format_rational(value)
        ));
    }
    out
}
