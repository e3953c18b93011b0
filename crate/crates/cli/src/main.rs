mod output;

/// Appends a line to the output buffer; writing into a `String` cannot fail.
macro_rules! emit {
    ($out:expr, $($arg:tt)*) => {{
        use std::fmt::Write as _;
        let _ = writeln!($out, $($arg)*);
    }};
}

use std::io::Write as _;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use parity_descents::genocchi::{avoidance_count, dumont_count};
use parity_descents::pattern::count_consecutive_matches;
use parity_descents::verify::{
    run_all, run_identity_suite, Status, SuiteOptions, VerificationReport,
};
use parity_descents::{
    all_perms, bij_p_complement, bij_p_complement_inv, bij_r_split, bij_r_split_inv,
    bij_r_symmetry, bij_r_symmetry_inv, closed_form_poly, family_poly, genocchi_sequence,
    is_parity_k_tau_avoiding_classical, AvoidanceClass, Error, Family, Limits, ParityPattern,
    Permutation, RecursiveBijections,
};

use output::{BijectionDoc, PairDoc, ReportDoc, TableDoc};

#[derive(Parser)]
#[command(
    name = "parity-descents",
    version,
    about = "Parity-refined descent distributions over S_n"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum BijectionName {
    RSymmetry,
    RSplit,
    PComplement,
    Alpha,
    Beta,
}

#[derive(Subcommand)]
enum Command {
    /// Print the distribution polynomial of a family.
    Table {
        #[arg(long, value_parser = parse_family)]
        family: Family,
        #[arg(long)]
        n: usize,
        /// Evaluate coefficient formulas instead of running the operator recursion.
        #[arg(long)]
        closed_form: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Run an identity suite, or `all` of them.
    Verify {
        #[arg(long)]
        suite: String,
        #[arg(long)]
        max_n: Option<usize>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Print Genocchi numbers; `--check` recounts them by enumeration.
    Genocchi {
        #[arg(long)]
        count: usize,
        #[arg(long)]
        check: bool,
    },
    /// List a bijection, or apply it to one permutation.
    Bijection {
        #[arg(long, value_enum)]
        name: BijectionName,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        apply: Option<String>,
        /// Apply the inverse map instead.
        #[arg(long)]
        inverse: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Count consecutive matches of a parity pattern, or test classical parity-k avoidance.
    Pattern {
        #[arg(long)]
        perm: String,
        /// Pattern such as `2e1*` or `2%2:3 1%1:3`; a plain permutation with `--modulus`.
        #[arg(long)]
        pattern: String,
        /// Treat `--pattern` as a permutation and test classical avoidance modulo this k.
        #[arg(long)]
        modulus: Option<u32>,
    },
}

fn parse_family(s: &str) -> Result<Family, String> {
    s.parse::<Family>().map_err(|e| e.to_string())
}

/// Failure modes mapped onto exit codes.
enum Failure {
    Usage(String),
    Checks,
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Consistency(_) | Error::Domain { .. } => Failure::Internal(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = String::new();
    let result = run(cli.command, &mut out);
    // a closed pipe (e.g. `| head`) is not an error worth reporting
    let _ = std::io::stdout().lock().write_all(out.as_bytes());
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Checks) => ExitCode::from(1),
        Err(Failure::Internal(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command, out: &mut String) -> Result<(), Failure> {
    let limits = Limits::from_env();
    match command {
        Command::Table {
            family,
            n,
            closed_form,
            format,
        } => {
            if n == 0 {
                return Err(Failure::Usage("--n must be at least 1".into()));
            }
            let poly = if closed_form {
                closed_form_poly(family, n)?
            } else {
                family_poly(family, n)?
            };
            match format {
                Format::Text => emit!(out, "{poly}"),
                Format::Json => emit!(out, "{}", json(&TableDoc::new(family, n, &poly))),
                Format::Csv => out.push_str(&TableDoc::new(family, n, &poly).to_csv()),
            }
            Ok(())
        }
        Command::Verify {
            suite,
            max_n,
            format,
        } => {
            let opts = SuiteOptions { max_n, limits };
            let reports = if suite == "all" {
                run_all(&opts)?
            } else {
                vec![run_identity_suite(&suite, &opts)?]
            };
            match format {
                Format::Json => {
                    let docs: Vec<ReportDoc> = reports.iter().map(ReportDoc::from).collect();
                    if docs.len() == 1 {
                        emit!(out, "{}", json(&docs[0]));
                    } else {
                        emit!(out, "{}", json(&docs));
                    }
                }
                Format::Text | Format::Csv => reports.iter().for_each(|r| print_report(out, r)),
            }
            if reports.iter().all(VerificationReport::passed) {
                Ok(())
            } else {
                Err(Failure::Checks)
            }
        }
        Command::Genocchi { count, check } => genocchi(out, count, check, &limits),
        Command::Bijection {
            name,
            n,
            apply,
            inverse,
            format,
        } => bijection(out, name, n, apply.as_deref(), inverse, format, &limits),
        Command::Pattern {
            perm,
            pattern,
            modulus,
        } => {
            let sigma = parse_perm(&perm)?;
            match modulus {
                Some(k) => {
                    let tau = parse_perm(&pattern)?;
                    let avoids = is_parity_k_tau_avoiding_classical(&sigma, &tau, k)?;
                    emit!(out, "{}", if avoids { "avoids" } else { "contains" });
                }
                None => {
                    let pattern: ParityPattern = pattern.parse()?;
                    emit!(out, "{}", count_consecutive_matches(&sigma, &pattern));
                }
            }
            Ok(())
        }
    }
}

fn json<T: serde::Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("output documents serialize")
}

fn parse_perm(s: &str) -> Result<Permutation, Failure> {
    s.parse::<Permutation>().map_err(Failure::from)
}

fn print_report(out: &mut String, report: &VerificationReport) {
    emit!(
        out,
        "{} {}: {} checks, {} failed, {} expected deviations",
        if report.passed() { "PASS" } else { "FAIL" },
        report.suite,
        report.records.len(),
        report.count(Status::Fail),
        report.count(Status::ExpectedDeviation),
    );
    for r in report.records.iter().filter(|r| r.status != Status::Pass) {
        emit!(
            out,
            "  {} {}: {} vs {}",
            r.status,
            r.identity,
            r.left,
            r.right
        );
        if let Some(note) = &r.note {
            emit!(out, "    {note}");
        }
    }
}

fn genocchi(out: &mut String, count: usize, check: bool, limits: &Limits) -> Result<(), Failure> {
    let table = genocchi_sequence(count)?;
    let line: Vec<String> = table.values().iter().map(|v| v.to_string()).collect();
    emit!(out, "{}", line.join(" "));
    if !check {
        return Ok(());
    }
    let mut ok = true;
    for (i, g) in table.values().iter().enumerate() {
        let m = i + 1;
        // g_m counts Dumont permutations of S_{2m-1} and CONJ avoiders of S_{2m-2}
        let odd = 2 * m - 1;
        if odd > limits.enumeration {
            emit!(
                out,
                "g_{m} = {g}: S_{odd} is above the enumeration cap, not checked"
            );
            continue;
        }
        let dumont = dumont_count(odd, limits)?;
        let mut line = format!("g_{m} = {g}: Dumont S_{odd} = {dumont}");
        let mut agree = g == &dumont.into();
        if m >= 2 {
            let conj = avoidance_count(odd - 1, AvoidanceClass::Conj, limits)?;
            line.push_str(&format!(", CONJ S_{} = {conj}", odd - 1));
            agree &= g == &conj.into();
        }
        ok &= agree;
        emit!(out, "{line} {}", if agree { "ok" } else { "MISMATCH" });
    }
    if ok {
        Ok(())
    } else {
        Err(Failure::Checks)
    }
}

fn bijection(
    out: &mut String,
    name: BijectionName,
    n: usize,
    apply: Option<&str>,
    inverse: bool,
    format: Format,
    limits: &Limits,
) -> Result<(), Failure> {
    if n == 0 {
        return Err(Failure::Usage("--n must be at least 1".into()));
    }
    let needs_tables = matches!(
        name,
        BijectionName::PComplement | BijectionName::Alpha | BijectionName::Beta
    );
    let tables = if needs_tables {
        Some(RecursiveBijections::build(n, limits)?)
    } else {
        None
    };
    let map = |sigma: &Permutation| -> Result<PairDoc, Failure> {
        let (to, tag) = match (name, inverse) {
            (BijectionName::RSymmetry, false) => (bij_r_symmetry(sigma)?, None),
            (BijectionName::RSymmetry, true) => (bij_r_symmetry_inv(sigma)?, None),
            (BijectionName::RSplit, false) => {
                let (tag, image) = bij_r_split(sigma)?;
                (image, Some(format!("{tag:?}")))
            }
            (BijectionName::RSplit, true) => (bij_r_split_inv(sigma)?, None),
            (BijectionName::PComplement, false) => {
                (bij_p_complement(sigma, tables.as_ref().unwrap())?, None)
            }
            (BijectionName::PComplement, true) => {
                (bij_p_complement_inv(sigma, tables.as_ref().unwrap())?, None)
            }
            (BijectionName::Alpha, inv) | (BijectionName::Beta, inv) => {
                let t = tables.as_ref().unwrap();
                let table = if matches!(name, BijectionName::Alpha) {
                    t.alpha(n)?
                } else {
                    t.beta(n)?
                };
                let image = if inv {
                    table.invert(sigma)?
                } else {
                    table.apply(sigma)?
                };
                (image.clone(), None)
            }
        };
        Ok(PairDoc {
            from: sigma.to_string(),
            to: to.to_string(),
            tag,
        })
    };

    let pairs = match apply {
        Some(text) => {
            let sigma = parse_perm(text)?;
            if sigma.len() != n {
                return Err(Failure::Usage(format!(
                    "{sigma} has length {}, expected {n}",
                    sigma.len()
                )));
            }
            vec![map(&sigma)?]
        }
        None => {
            let mut pairs = Vec::new();
            for sigma in all_perms(n, limits)? {
                if in_domain(name, inverse, &sigma) {
                    pairs.push(map(&sigma)?);
                }
            }
            pairs
        }
    };

    match format {
        Format::Json => {
            let doc = BijectionDoc {
                name: bijection_label(name).to_string(),
                n,
                pairs,
            };
            emit!(out, "{}", json(&doc));
        }
        Format::Text | Format::Csv => {
            for p in pairs {
                match p.tag {
                    Some(tag) => emit!(out, "{} -> {} [{tag}]", p.from, p.to),
                    None => emit!(out, "{} -> {}", p.from, p.to),
                }
            }
        }
    }
    Ok(())
}

fn bijection_label(name: BijectionName) -> &'static str {
    match name {
        BijectionName::RSymmetry => "r-symmetry",
        BijectionName::RSplit => "r-split",
        BijectionName::PComplement => "p-complement",
        BijectionName::Alpha => "alpha",
        BijectionName::Beta => "beta",
    }
}

/// Whether a listing includes `sigma`; the parity of the first letter picks the domain.
fn in_domain(name: BijectionName, inverse: bool, sigma: &Permutation) -> bool {
    let odd_start = sigma.first() % 2 == 1;
    match name {
        BijectionName::RSymmetry | BijectionName::RSplit => true,
        BijectionName::PComplement => odd_start != inverse,
        BijectionName::Alpha => odd_start,
        BijectionName::Beta => !odd_start,
    }
}
