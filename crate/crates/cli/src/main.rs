use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use skewhad::catalog;
use skewhad::cosets::CosetSystem;
use skewhad::diffsets::{
    declared_parameters, families_equivalent, fingerprint, four_square_check, verify_sds,
    SdsFamily,
};
use skewhad::gsmatrix::{goethals_seidel, SignMatrix};
use skewhad::modring::{paley_set, Modulus};
use skewhad::searcher::{search, SearchOutcome, SearchSpec};
use skewhad_cli::familyfile::{self, FamilyRecord};
use skewhad_cli::matrixfile;

/// Exit codes: 0 pass, 1 verification failure, 2 input error, 3 search
/// budget exhausted.
#[derive(Parser)]
#[command(name = "skewhad", version, about = "Difference families on Z_n and the skew-Hadamard matrices they generate")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct FamilySource {
    /// Name of a shipped family (see `skewhad catalog`).
    #[arg(long, value_name = "NAME")]
    catalog: Option<String>,
    /// Path of a family file (.sds).
    #[arg(value_name = "FILE")]
    file: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Verify the defining difference-count condition of a family.
    Verify {
        #[command(flatten)]
        source: FamilySource,
    },
    /// Assemble the Goethals-Seidel matrix of a four-block family and write
    /// it to a matrix file.
    Build {
        #[command(flatten)]
        source: FamilySource,
        /// Prepend the quadratic-residue set as skew first block to a
        /// three-block family.
        #[arg(long)]
        paley_first: bool,
        /// Output matrix file.
        #[arg(short, long, value_name = "FILE")]
        output: Option<PathBuf>,
    },
    /// Check the Hadamard (and optionally skew-Hadamard) property of a
    /// matrix file.
    Check {
        #[arg(value_name = "FILE")]
        file: PathBuf,
        /// Also require the skew property for exit code 0.
        #[arg(long)]
        skew: bool,
    },
    /// Print the difference fingerprint of one block.
    Fingerprint {
        #[command(flatten)]
        source: FamilySource,
        /// Block index within the family.
        #[arg(long, default_value_t = 0)]
        block: usize,
    },
    /// Decide equivalence of two families under translations, one global
    /// automorphism, and block permutation.
    Equiv {
        #[command(flatten)]
        source: FamilySource,
        /// Name of the second shipped family.
        #[arg(long, value_name = "NAME")]
        catalog2: Option<String>,
        /// Path of the second family file.
        #[arg(value_name = "FILE2")]
        file2: Option<PathBuf>,
    },
    /// Search for a family with prescribed parameters.
    Search {
        /// Group order v.
        #[arg(long)]
        v: usize,
        /// Block cardinals, comma separated, e.g. 30,22,22.
        #[arg(long, value_name = "N0,N1,...")]
        sizes: String,
        /// Target lambda.
        #[arg(long)]
        lambda: u32,
        /// Index of a block forced to stay skew-type.
        #[arg(long, value_name = "K")]
        skew_block: Option<usize>,
        /// Restrict blocks to coset unions of <h> in Z_n*, e.g. 97,35.
        #[arg(long, value_name = "N,H")]
        cosets: Option<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 64)]
        restarts: u32,
        /// Step budget per restart.
        #[arg(long, default_value_t = 20_000)]
        max_steps: u64,
        /// Consecutive equal-cost moves tolerated before restarting.
        #[arg(long, default_value_t = 30)]
        sideways: u32,
        /// Write the found family to this file (stdout otherwise).
        #[arg(short, long, value_name = "FILE")]
        output: Option<PathBuf>,
    },
    /// List the shipped families.
    Catalog,
}

enum CliError {
    /// Bad input: exit 2.
    Input(String),
    /// Verification failed: exit 1.
    Failed,
    /// Search budgets expired: exit 3.
    Exhausted,
}

fn input_err<T>(message: impl Into<String>) -> Result<T, CliError> {
    Err(CliError::Input(message.into()))
}

fn load_source(source: &FamilySource) -> Result<(String, FamilyRecord), CliError> {
    match (&source.catalog, &source.file) {
        (Some(name), None) => {
            let entry = catalog::entry(name)
                .ok_or_else(|| CliError::Input(format!("unknown catalog family {name:?}")))?;
            Ok((
                entry.name.to_string(),
                FamilyRecord {
                    name: Some(entry.name.to_string()),
                    family: entry.family,
                    skew_block: Some(entry.skew_block),
                },
            ))
        }
        (None, Some(path)) => load_family_file(path),
        (Some(_), Some(_)) => input_err("give either --catalog or a file, not both"),
        (None, None) => input_err("give --catalog NAME or a family file"),
    }
}

fn load_family_file(path: &Path) -> Result<(String, FamilyRecord), CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))?;
    let record = familyfile::parse(&text)
        .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    let label = record
        .name
        .clone()
        .unwrap_or_else(|| path.display().to_string());
    Ok((label, record))
}

fn cmd_verify(source: &FamilySource) -> Result<(), CliError> {
    let (label, record) = load_source(source)?;
    let family = &record.family;
    println!("family {label}: {}", declared_parameters(family));

    let report = verify_sds(family);
    let v = family.modulus().get();
    let nonzero = report.residuals().iter().filter(|&&d| d != 0).count();
    if nonzero == 0 {
        println!("residuals: zero at all {} nonzero residues", v - 1);
    } else {
        let (r, dev) = report.worst_deviation();
        println!(
            "residuals: nonzero at {nonzero} of {} residues, worst at r={r} (deviation {dev:+})",
            v - 1
        );
    }

    if family.block_count() == 4 {
        let squares = four_square_check(family).expect("four blocks");
        println!(
            "four-square: {} vs 4*{} = {} -> {}",
            squares,
            v,
            squares.target(),
            if squares.pass() { "PASS" } else { "FAIL" }
        );
    }

    let skew_flags: Vec<String> = family
        .blocks()
        .iter()
        .enumerate()
        .map(|(k, b)| format!("{k}:{}", if b.is_skew_type() { "yes" } else { "no" }))
        .collect();
    println!("skew-type blocks: {}", skew_flags.join(" "));

    if report.pass() {
        println!("verdict: PASS");
        Ok(())
    } else {
        println!("verdict: FAIL");
        Err(CliError::Failed)
    }
}

fn assemble(family: &SdsFamily) -> Result<SignMatrix, CliError> {
    if family.block_count() != 4 {
        return input_err(format!(
            "need 4 blocks to assemble, got {} (use --paley-first for a triple)",
            family.block_count()
        ));
    }
    let blocks: Vec<SignMatrix> = family
        .blocks()
        .iter()
        .map(SignMatrix::circulant_of_set)
        .collect();
    goethals_seidel(&[
        blocks[0].clone(),
        blocks[1].clone(),
        blocks[2].clone(),
        blocks[3].clone(),
    ])
    .map_err(|e| CliError::Input(e.to_string()))
}

fn cmd_build(
    source: &FamilySource,
    paley_first: bool,
    output: Option<&Path>,
) -> Result<(), CliError> {
    let (label, record) = load_source(source)?;
    let mut family = record.family;
    if paley_first {
        if family.block_count() != 3 {
            return input_err(format!(
                "--paley-first expects a 3-block family, got {} blocks",
                family.block_count()
            ));
        }
        let paley = paley_set(family.modulus()).map_err(|e| CliError::Input(e.to_string()))?;
        let mut blocks = vec![paley];
        blocks.extend(family.blocks().iter().cloned());
        // The quadratic-residue set contributes (v-3)/4 to every difference.
        let lambda = family.lambda() + (family.modulus().get() as u32 - 3) / 4;
        family = SdsFamily::new(blocks, lambda).expect("same modulus");
    }
    let matrix = assemble(&family)?;
    println!("family {label}: order {}", matrix.order());
    println!(
        "Hadamard: {}",
        if matrix.is_hadamard() { "yes" } else { "no" }
    );
    println!(
        "skew-Hadamard: {}",
        if matrix.is_skew_hadamard() { "yes" } else { "no" }
    );
    if let Some(path) = output {
        std::fs::write(path, matrixfile::render(&matrix))
            .map_err(|e| CliError::Input(format!("cannot write {}: {e}", path.display())))?;
        println!("wrote {}", path.display());
    }
    Ok(())
}

fn cmd_check(file: &Path, want_skew: bool) -> Result<(), CliError> {
    let text = std::fs::read_to_string(file)
        .map_err(|e| CliError::Input(format!("cannot read {}: {e}", file.display())))?;
    let matrix = matrixfile::parse(&text)
        .map_err(|e| CliError::Input(format!("{}: {e}", file.display())))?;
    let hadamard = matrix.is_hadamard();
    let skew = hadamard && matrix.is_skew_hadamard();
    println!("order {}", matrix.order());
    println!("Hadamard: {}", if hadamard { "yes" } else { "no" });
    println!("skew-Hadamard: {}", if skew { "yes" } else { "no" });
    if hadamard && (!want_skew || skew) {
        Ok(())
    } else {
        Err(CliError::Failed)
    }
}

fn cmd_fingerprint(source: &FamilySource, block: usize) -> Result<(), CliError> {
    let (label, record) = load_source(source)?;
    if block >= record.family.block_count() {
        return input_err(format!(
            "block {block} out of range for {} blocks",
            record.family.block_count()
        ));
    }
    let fp = fingerprint(record.family.block(block));
    println!("family {label} block {block}: {fp}");
    Ok(())
}

fn cmd_equiv(
    source: &FamilySource,
    catalog2: Option<String>,
    file2: Option<PathBuf>,
) -> Result<(), CliError> {
    let (label_a, a) = load_source(source)?;
    let second = FamilySource {
        catalog: catalog2,
        file: file2,
    };
    let (label_b, b) = load_source(&second)?;
    if a.family.modulus() != b.family.modulus() {
        println!("{label_a} vs {label_b}: inequivalent (moduli differ)");
        return Ok(());
    }
    match families_equivalent(&a.family, &b.family) {
        Some(w) => {
            println!(
                "{label_a} vs {label_b}: equivalent (m={}, permutation={:?}, shifts={:?})",
                w.multiplier, w.permutation, w.shifts
            );
        }
        None => println!("{label_a} vs {label_b}: inequivalent"),
    }
    Ok(())
}

fn parse_sizes(text: &str) -> Result<Vec<usize>, CliError> {
    text.split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| CliError::Input(format!("bad size {t:?}")))
        })
        .collect()
}

#[allow(clippy::too_many_arguments)]
fn cmd_search(
    v: usize,
    sizes: &str,
    lambda: u32,
    skew_block: Option<usize>,
    cosets: Option<String>,
    seed: u64,
    restarts: u32,
    max_steps: u64,
    sideways: u32,
    output: Option<&Path>,
) -> Result<(), CliError> {
    let modulus = Modulus::new(v).map_err(|e| CliError::Input(e.to_string()))?;
    let cardinals = parse_sizes(sizes)?;
    let mut spec = SearchSpec::new(modulus, cardinals, lambda)
        .map_err(|e| CliError::Input(e.to_string()))?
        .with_seed(seed)
        .with_restarts(restarts)
        .with_max_steps(max_steps)
        .with_sideways_limit(sideways);
    if let Some(k) = skew_block {
        spec = spec
            .with_skew_block(k)
            .map_err(|e| CliError::Input(e.to_string()))?;
    }
    if let Some(text) = cosets {
        let (n, h) = text
            .split_once(',')
            .ok_or_else(|| CliError::Input(format!("--cosets expects N,H, got {text:?}")))?;
        let n: usize = n
            .trim()
            .parse()
            .map_err(|_| CliError::Input(format!("bad coset modulus {n:?}")))?;
        let h: usize = h
            .trim()
            .parse()
            .map_err(|_| CliError::Input(format!("bad coset generator {h:?}")))?;
        let system = CosetSystem::build(
            Modulus::new(n).map_err(|e| CliError::Input(e.to_string()))?,
            h,
        )
        .map_err(|e| CliError::Input(e.to_string()))?;
        spec = spec
            .with_cosets(system)
            .map_err(|e| CliError::Input(e.to_string()))?;
    }

    println!(
        "search: v={} sizes={:?} lambda={} skew_block={:?} cosets={} seed={} restarts={} max_steps={} sideways={}",
        spec.modulus(),
        spec.cardinals(),
        spec.lambda(),
        spec.skew_block(),
        spec.coset_system()
            .map(|s| format!("({},{})", s.modulus(), s.generator()))
            .unwrap_or_else(|| "none".into()),
        spec.seed(),
        spec.restarts(),
        spec.max_steps(),
        spec.sideways_limit(),
    );

    match search(&spec) {
        SearchOutcome::Found(result) => {
            println!(
                "found at restart {} after {} steps (cost {})",
                result.restart_index, result.steps_used, result.final_cost
            );
            let record = FamilyRecord {
                name: None,
                family: result.family,
                skew_block: spec.skew_block(),
            };
            let text = familyfile::render(&record);
            match output {
                Some(path) => {
                    std::fs::write(path, &text).map_err(|e| {
                        CliError::Input(format!("cannot write {}: {e}", path.display()))
                    })?;
                    println!("wrote {}", path.display());
                }
                None => print!("{text}"),
            }
            Ok(())
        }
        SearchOutcome::Exhausted {
            restarts,
            best_cost,
        } => {
            match best_cost {
                Some(best) => println!("exhausted {restarts} restarts; best cost {best}"),
                None => println!("exhausted: no restarts ran"),
            }
            Err(CliError::Exhausted)
        }
    }
}

fn cmd_catalog() {
    for entry in catalog::entries() {
        let squares: Vec<String> = entry
            .expected_squares
            .iter()
            .map(|r| format!("{r}^2"))
            .collect();
        println!(
            "{}  {}  squares {}  skew block {}  ({})",
            entry.name,
            declared_parameters(&entry.family),
            squares.join("+"),
            entry.skew_block,
            entry.provenance
        );
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Verify { source } => cmd_verify(&source),
        Command::Build {
            source,
            paley_first,
            output,
        } => cmd_build(&source, paley_first, output.as_deref()),
        Command::Check { file, skew } => cmd_check(&file, skew),
        Command::Fingerprint { source, block } => cmd_fingerprint(&source, block),
        Command::Equiv {
            source,
            catalog2,
            file2,
        } => cmd_equiv(&source, catalog2, file2),
        Command::Search {
            v,
            sizes,
            lambda,
            skew_block,
            cosets,
            seed,
            restarts,
            max_steps,
            sideways,
            output,
        } => cmd_search(
            v,
            &sizes,
            lambda,
            skew_block,
            cosets,
            seed,
            restarts,
            max_steps,
            sideways,
            output.as_deref(),
        ),
        Command::Catalog => {
            cmd_catalog();
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Failed) => ExitCode::from(1),
        Err(CliError::Input(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
        Err(CliError::Exhausted) => ExitCode::from(3),
    }
}
