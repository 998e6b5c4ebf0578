use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use hookpoly::harness::{run_sweep, Jobs, OutputFormat, Selection, SweepConfig};
use hookpoly::poly::rational;
use hookpoly::shifted::{
    cancelled_corner_quotient, g_quotient_factors, partial_fraction_numerator, IdentityChecker,
};
use hookpoly::symfunc::{lhs_1_6, rhs_1_6, DEFAULT_THEOREM_BOUND};
use hookpoly::{g_poly, parse_partition, render_report, ExactPolynomial, IdentityId, Partition};

#[derive(Parser)]
#[command(
    name = "hookpoly",
    version,
    about = "Hook lengths, shifted-parts polynomials, and exact verification of their identities"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the hook-length grid and the hook product H.
    Hooks {
        #[arg(value_parser = parse_partition_arg)]
        partition: Partition,
    },
    /// Print g(x) = ∏ (x + λ_i - i) over i = 1..|λ|.
    Gpoly {
        #[arg(value_parser = parse_partition_arg)]
        partition: Partition,
    },
    /// Print the inner corner rows T, the outer corner rows B, and every corner removal.
    Corners {
        #[arg(value_parser = parse_partition_arg)]
        partition: Partition,
    },
    /// Print the number of standard Young tableaux.
    Syt {
        #[arg(value_parser = parse_partition_arg)]
        partition: Partition,
    },
    /// Schur expansion of Σ_k C(x+k-1, k) p_1^k e_{n-k} as JSON.
    SchurLhs {
        #[arg(value_parser = parse_degree)]
        n: usize,
    },
    /// Schur expansion of Σ_λ g(x+n)/H s_λ as JSON.
    SchurRhs {
        #[arg(value_parser = parse_degree)]
        n: usize,
    },
    /// Verify one identity on one partition.
    Check {
        /// Identity name, e.g. THM_1_1 or COR_4_4.
        identity: IdentityId,
        #[arg(value_parser = parse_partition_arg)]
        partition: Partition,
    },
    /// Verify the identity catalog over every partition up to a size bound.
    Sweep {
        #[arg(long, default_value_t = 25)]
        max_n: usize,
        /// Bound for the symmetric-function checks.
        #[arg(long, default_value_t = DEFAULT_THEOREM_BOUND)]
        max_n_schur: usize,
        /// Bound for the monomial-basis cross-check.
        #[arg(long)]
        max_n_oracles: Option<usize>,
        /// "all" or a comma-separated list of identity names.
        #[arg(long, default_value = "all")]
        identities: Selection,
        /// Worker threads, or "auto".
        #[arg(long, default_value = "auto")]
        jobs: Jobs,
        #[arg(long, default_value = "json")]
        format: OutputFormat,
        #[arg(long)]
        fail_fast: bool,
        /// Include both sides of passing outcomes in the report.
        #[arg(long)]
        witnesses: bool,
        /// Write the report here instead of stdout.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Walk through the worked example λ = 55331.
    #[command(name = "example-55331")]
    Example55331,
}

fn parse_partition_arg(s: &str) -> Result<Partition, String> {
    parse_partition(s).map_err(|e| e.to_string())
}

fn parse_degree(s: &str) -> Result<usize, String> {
    let n: usize = s.parse().map_err(|_| format!("not a non-negative integer: {s:?}"))?;
    if n > DEFAULT_THEOREM_BOUND + 3 {
        return Err(format!("degree {n} is above the supported bound {}", DEFAULT_THEOREM_BOUND + 3));
    }
    Ok(n)
}

enum Failure {
    Verification,
    Usage(String),
}

impl From<hookpoly::Error> for Failure {
    fn from(e: hookpoly::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<(), Failure> {
    match command {
        Command::Hooks { partition } => {
            print!("{}", hooks_text(&partition));
            Ok(())
        }
        Command::Gpoly { partition } => {
            let g = g_poly(&partition);
            println!("{g}");
            println!("{}", g.serialize());
            Ok(())
        }
        Command::Corners { partition } => {
            print!("{}", corners_text(&partition)?);
            Ok(())
        }
        Command::Syt { partition } => {
            println!("{}", partition.syt_count()?);
            Ok(())
        }
        Command::SchurLhs { n } => {
            println!("{}", lhs_1_6(n).to_json());
            Ok(())
        }
        Command::SchurRhs { n } => {
            println!("{}", rhs_1_6(n).to_json());
            Ok(())
        }
        Command::Check {
            identity,
            partition,
        } => {
            let outcomes = IdentityChecker::new().check(identity, &partition)?;
            for o in &outcomes {
                println!("{o}");
            }
            if outcomes.iter().all(|o| o.passed()) {
                Ok(())
            } else {
                Err(Failure::Verification)
            }
        }
        Command::Sweep {
            max_n,
            max_n_schur,
            max_n_oracles,
            identities,
            jobs,
            format,
            fail_fast,
            witnesses,
            output,
        } => {
            let mut config = SweepConfig {
                max_n_theorem_1_2: max_n_schur,
                identities,
                jobs,
                format,
                fail_fast,
                capture_witnesses: witnesses,
                ..SweepConfig::default()
            }
            .with_max_n(max_n);
            if let Some(m) = max_n_oracles {
                config.max_n_oracles = m;
            }
            let report = run_sweep(&config)?;
            let text = render_report(&report, format);
            match output {
                Some(path) => fs::write(&path, &text)
                    .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?,
                None => print!("{text}"),
            }
            if report.all_passed() {
                Ok(())
            } else {
                Err(Failure::Verification)
            }
        }
        Command::Example55331 => {
            print!("{}", example_55331()?);
            Ok(())
        }
    }
}

fn hooks_text(lambda: &Partition) -> String {
    let mut out = String::new();
    let grid = lambda.hook_grid();
    let width = grid
        .iter()
        .flatten()
        .map(|h| h.to_string().len())
        .max()
        .unwrap_or(1);
    for row in &grid {
        let cells: Vec<String> = row.iter().map(|h| format!("{h:>width$}")).collect();
        out.push_str(&cells.join(" "));
        out.push('\n');
    }
    out.push_str(&format!("H = {}\n", lambda.hook_product()));
    out
}

fn row_set(rows: &[usize]) -> String {
    let items: Vec<String> = rows.iter().map(|r| r.to_string()).collect();
    format!("{{{}}}", items.join(","))
}

fn corners_text(lambda: &Partition) -> Result<String, Failure> {
    let c = lambda.corners()?;
    let mut out = format!("T={}\nB={}\n", row_set(&c.in_corners), row_set(&c.out_corners));
    for (row, mu) in &c.removals {
        out.push_str(&format!("remove row {row}: {mu}\n"));
    }
    Ok(out)
}

fn factors(list: &[ExactPolynomial]) -> String {
    list.iter().map(|f| format!("({f})")).collect()
}

fn example_55331() -> Result<String, Failure> {
    let lambda = Partition::new(vec![5, 5, 3, 3, 1])?;
    let n = lambda.size();
    let mut out = format!("λ = {lambda}, n = {n}\n\nHook lengths:\n");
    out.push_str(&hooks_text(&lambda));

    out.push_str("\nCorners:\n");
    out.push_str(&corners_text(&lambda)?);

    let mu = lambda.remove_corner(4).expect("row 4 ends in a corner");
    let column = lambda.part(4);
    let changed = |p: &Partition| -> Vec<String> {
        p.cells()
            .filter(|c| (c.row == 4 || c.col == column) && mu.contains_cell(*c))
            .map(|c| p.hook_length(c).expect("cell lies in the diagram").to_string())
            .collect()
    };
    let removed = hookpoly::Cell::new(4, column);
    let ratio = IdentityChecker::new()
        .hook_ratios(&lambda)?
        .into_iter()
        .find(|(row, _)| *row == 4)
        .map(|(_, r)| r)
        .expect("row 4 is a corner");
    out.push_str(&format!(
        "\nRemoving the corner {removed} gives λ' = {mu}.\n\
         Only hooks in row 4 and column {column} change:\n\
         H_λ / H_λ' = ({}·{})/({}) = {ratio}\n",
        lambda.hook_length(removed)?,
        changed(&lambda).join("·"),
        changed(&mu).join("·"),
    ));

    let q = cancelled_corner_quotient(&lambda, 4)?;
    out.push_str(&format!(
        "\ng_λ(x+1) / g_λ'(x) = {} / {}\n",
        factors(&q.numerator),
        factors(&q.denominator)
    ));
    let one = rational(1);
    let num = q.numerator_product().eval(&one);
    let den = q.denominator_product().eval(&one);
    out.push_str(&format!(
        "at x = 1: g_λ(2) / g_λ'(1) = {num}/{den} = {}\n",
        &num / &den
    ));

    let full = g_quotient_factors(&lambda)?;
    out.push_str(&format!(
        "\ng_λ(x+1) / g_λ(x) = {} / {}\n",
        factors(&full.numerator),
        factors(&full.denominator)
    ));
    let c = lambda.corners()?;
    let t: Vec<ExactPolynomial> = c
        .in_corners
        .iter()
        .map(|&j| ExactPolynomial::linear(lambda.part(j) as i64 - j as i64))
        .collect();
    out.push_str(&format!(
        "\nx·∏_T(x+λ_j-j) - ∏_B(x+λ_i-i+1) = x{} - {}\n",
        factors(&t),
        factors(&full.numerator)
    ));
    let numerator = partial_fraction_numerator(&lambda)?;
    out.push_str(&format!("  = {numerator}\n"));

    let ratios = IdentityChecker::new().hook_ratios(&lambda)?;
    let terms: Vec<String> = ratios.iter().map(|(_, r)| r.to_string()).collect();
    let sum = ratios
        .iter()
        .fold(rational(0), |acc, (_, r)| acc + r);
    out.push_str(&format!(
        "\nΣ H_λ/H_λ' over corners = {} = {sum}\n",
        terms.join(" + ")
    ));
    Ok(out)
}
