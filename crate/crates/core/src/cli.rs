//! The `dyckstat` command line.
//!
//! Exit status: 0 on success, 1 when a verification fails (or the
//! involution hits an internal domain violation), 2 on usage and input
//! errors. Results go to `out`, diagnostics to `err`.

use std::io::Write;

use clap::{Parser, Subcommand};

use crate::enumerate::enumerate_dyck;
use crate::involution::{big_phi, big_phi_trace, phi, phi_inverse, PhiCase, PhiError};
use crate::perm::{from_dyck, to_dyck, Permutation};
use crate::render::render_ascii;
use crate::stats::compute_stats;
use crate::verify::{
    joint_distribution, run_checks, Check, VerifyOptions, DEFAULT_MAX_COUNTEREXAMPLES,
    DEFAULT_MAX_N,
};
use crate::word::{Alphabet, DyckWord};

#[derive(Debug, Parser)]
#[command(
    name = "dyckstat",
    version,
    about = "Dyck path statistics and the returns/ldr involution"
)]
struct Cli {
    /// Alphabet of word arguments (ne, ud, bits); detected when omitted.
    #[arg(long, global = true)]
    format: Option<Alphabet>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print every statistic of a word.
    Stats { word: String },
    /// Apply one step of phi.
    Phi { word: String },
    /// Apply one step of phi inverse.
    PhiInv { word: String },
    /// Apply the involution that swaps returns and n - ldr.
    Involution {
        word: String,
        /// Print every intermediate word.
        #[arg(long)]
        trace: bool,
    },
    /// Map a 321-avoiding permutation to its Dyck word.
    PermToPath { perm: String },
    /// Map a Dyck word to its 321-avoiding permutation.
    PathToPerm { word: String },
    /// List all words of a semilength.
    Enumerate {
        n: usize,
        /// Append tab-separated returns, ldr, fdf and rises.
        #[arg(long)]
        stats: bool,
    },
    /// Joint distribution of (rises, returns, n - ldr) as JSON.
    Table { n: usize },
    /// Run exhaustive checks and print a JSON report array.
    Verify {
        #[arg(long, default_value_t = DEFAULT_MAX_N)]
        max_n: usize,
        /// Comma-separated subset of switch,involution,phi,bijection,duality,enumeration.
        #[arg(long, value_delimiter = ',')]
        checks: Option<Vec<Check>>,
        /// Worker threads (0 = all cores).
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        #[arg(long, default_value_t = DEFAULT_MAX_COUNTEREXAMPLES)]
        max_counterexamples: usize,
    },
    /// Draw a word on its grid.
    Render { word: String },
}

enum Failure {
    Usage(String),
    Check(String),
}

type CmdResult = Result<(), Failure>;

fn io<E: std::fmt::Display>(e: E) -> Failure {
    Failure::Check(format!("write failed: {e}"))
}

fn read_word(text: &str, format: Option<Alphabet>) -> Result<DyckWord, Failure> {
    let alphabet = match format {
        Some(a) => a,
        None if text.is_empty() => Alphabet::NE,
        None => Alphabet::detect(text).ok_or_else(|| {
            Failure::Usage(format!(
                "cannot detect the alphabet of {text:?}; use N/E, U/D or 1/0 (or pass --format)"
            ))
        })?,
    };
    DyckWord::parse(text, alphabet)
        .map_err(|e| Failure::Usage(format!("invalid word {text:?}: {e}")))
}

fn case_line(case: PhiCase) -> String {
    format!("case: {case}")
}

fn domain_error(e: PhiError) -> Failure {
    Failure::Usage(format!("outside the domain: {e}"))
}

fn rises_text(rises: &[usize]) -> String {
    let parts: Vec<String> = rises.iter().map(|r| r.to_string()).collect();
    format!("{{{}}}", parts.join(","))
}

fn dispatch(cli: Cli, out: &mut dyn Write) -> CmdResult {
    let format = cli.format;
    match cli.command {
        Command::Stats { word } => {
            let w = read_word(&word, format)?;
            let s = compute_stats(&w);
            let comp: Vec<String> = s.rise_composition.iter().map(|c| c.to_string()).collect();
            writeln!(out, "word: {w}").map_err(io)?;
            writeln!(out, "semilength: {}", s.semilength).map_err(io)?;
            writeln!(out, "returns: {}", s.returns).map_err(io)?;
            writeln!(out, "ldr: {}", s.ldr).map_err(io)?;
            writeln!(out, "fdf: {}", s.fdf).map_err(io)?;
            writeln!(out, "rises: {}", rises_text(&s.rises)).map_err(io)?;
            writeln!(out, "rise_composition: ({})", comp.join(",")).map_err(io)?;
        }
        Command::Phi { word } => {
            let w = read_word(&word, format)?;
            let (image, case) = phi(&w).map_err(domain_error)?;
            writeln!(out, "{image}\n{}", case_line(case)).map_err(io)?;
        }
        Command::PhiInv { word } => {
            let w = read_word(&word, format)?;
            let (image, case) = phi_inverse(&w).map_err(domain_error)?;
            writeln!(out, "{image}\n{}", case_line(case)).map_err(io)?;
        }
        Command::Involution { word, trace } => {
            let w = read_word(&word, format)?;
            let violation = |e| Failure::Check(format!("{e}"));
            if trace {
                for entry in big_phi_trace(&w).map_err(violation)? {
                    writeln!(out, "{}\t{}", entry.word, entry.step).map_err(io)?;
                }
            } else {
                writeln!(out, "{}", big_phi(&w).map_err(violation)?).map_err(io)?;
            }
        }
        Command::PermToPath { perm } => {
            let p: Permutation = perm
                .parse()
                .map_err(|e| Failure::Usage(format!("invalid permutation {perm:?}: {e}")))?;
            let w = to_dyck(&p).map_err(|e| Failure::Usage(e.to_string()))?;
            writeln!(out, "{w}").map_err(io)?;
        }
        Command::PathToPerm { word } => {
            let w = read_word(&word, format)?;
            writeln!(out, "{}", from_dyck(&w)).map_err(io)?;
        }
        Command::Enumerate { n, stats } => {
            for w in enumerate_dyck(n) {
                if stats {
                    let s = compute_stats(&w);
                    writeln!(
                        out,
                        "{w}\t{}\t{}\t{}\t{}",
                        s.returns,
                        s.ldr,
                        s.fdf,
                        rises_text(&s.rises)
                    )
                    .map_err(io)?;
                } else {
                    writeln!(out, "{w}").map_err(io)?;
                }
            }
        }
        Command::Table { n } => {
            let json = serde_json::to_string_pretty(&joint_distribution(n)).map_err(io)?;
            writeln!(out, "{json}").map_err(io)?;
        }
        Command::Verify {
            max_n,
            checks,
            jobs,
            max_counterexamples,
        } => {
            let checks = checks.unwrap_or_else(|| Check::ALL.to_vec());
            let opts = VerifyOptions {
                max_n,
                jobs,
                max_counterexamples,
            };
            let reports = run_checks(&checks, &opts);
            let json = serde_json::to_string_pretty(&reports).map_err(io)?;
            writeln!(out, "{json}").map_err(io)?;
            let failed: Vec<&str> = reports
                .iter()
                .filter(|r| !r.passed)
                .map(|r| r.check_name.as_str())
                .collect();
            if !failed.is_empty() {
                return Err(Failure::Check(format!(
                    "failed checks: {}",
                    failed.join(", ")
                )));
            }
        }
        Command::Render { word } => {
            let w = read_word(&word, format)?;
            write!(out, "{}", render_ascii(&w)).map_err(io)?;
        }
    }
    Ok(())
}

/// Runs the CLI on `argv` (including the program name) and returns the exit
/// status.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    0
                }
                _ => {
                    let _ = write!(err, "{e}");
                    2
                }
            };
        }
    };
    match dispatch(cli, out) {
        Ok(()) => 0,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
        Err(Failure::Check(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            1
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("dyckstat").chain(args.iter().copied());
        let code = run(argv, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn phi_command() {
        let (code, out, _) = call(&["phi", "NNENEE"]);
        assert_eq!(code, 0);
        assert_eq!(out, "NENNEE\ncase: 2\n");
        let (code, out, _) = call(&["phi-inv", "UDUUDD"]);
        assert_eq!(code, 0);
        assert_eq!(out, "NNENEE\ncase: 2\n");
    }

    #[test]
    fn phi_domain_errors() {
        let (code, out, err) = call(&["phi", "NNNEEE"]);
        assert_eq!(code, 2);
        assert!(out.is_empty());
        assert!(err.contains("MaximalLdr"), "{err}");
        let (code, _, err) = call(&["phi-inv", "NNENEE"]);
        assert_eq!(code, 2);
        assert!(err.contains("FewerThanTwoReturns"), "{err}");
        let (code, _, err) = call(&["phi", "NNEENE"]);
        assert_eq!(code, 2);
        assert!(err.contains("EndsWithSingleEast"), "{err}");
    }

    #[test]
    fn stats_command() {
        let (code, out, _) = call(&["stats", "110100"]);
        assert_eq!(code, 0);
        assert!(out.contains("returns: 1\n"));
        assert!(out.contains("ldr: 1\n"));
        assert!(out.contains("fdf: 2\n"));
        assert!(out.contains("rises: {1,2}\n"));
        assert!(out.contains("rise_composition: (2,1)\n"));
    }

    #[test]
    fn bad_input_is_usage_error() {
        let (code, out, err) = call(&["stats", "NEEN"]);
        assert_eq!(code, 2);
        assert!(out.is_empty());
        assert!(!err.is_empty());
        assert_eq!(call(&["stats", "NUDE"]).0, 2);
        assert_eq!(call(&["frobnicate"]).0, 2);
        assert_eq!(call(&["verify", "--checks", "bogus"]).0, 2);
        assert_eq!(call(&["perm-to-path", "3 2 1"]).0, 2);
    }

    #[test]
    fn explicit_format() {
        let (code, out, _) = call(&["--format", "bits", "path-to-perm", "110100"]);
        assert_eq!(code, 0);
        assert_eq!(out, "2 3 1\n");
        assert_eq!(call(&["--format", "ne", "stats", "110100"]).0, 2);
    }

    #[test]
    fn trace_ends_with_image() {
        let (_, plain, _) = call(&["involution", "NNENEENE"]);
        let (code, traced, _) = call(&["involution", "NNENEENE", "--trace"]);
        assert_eq!(code, 0);
        assert_eq!(plain, "NENNEENE\n");
        let last = traced.lines().last().unwrap();
        assert_eq!(last.split('\t').next().unwrap(), plain.trim());
        assert_eq!(traced.lines().count(), 3);
    }

    #[test]
    fn permutation_commands() {
        assert_eq!(call(&["perm-to-path", "2 3 1"]).1, "NNENEE\n");
        assert_eq!(call(&["perm-to-path", "2,3,1"]).1, "NNENEE\n");
        assert_eq!(call(&["path-to-perm", "NNNEEE"]).1, "3 1 2\n");
    }

    #[test]
    fn enumerate_and_table() {
        let (_, out, _) = call(&["enumerate", "3"]);
        assert_eq!(out, "NNNEEE\nNNENEE\nNNEENE\nNENNEE\nNENENE\n");
        let (_, out, _) = call(&["enumerate", "2", "--stats"]);
        assert_eq!(out, "NNEE\t1\t1\t1\t{1}\nNENE\t2\t0\t2\t{1,2}\n");
        let (code, out, _) = call(&["table", "3"]);
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["semilength"], 3);
        assert_eq!(v["entries"].as_array().unwrap().len(), 5);
    }

    #[test]
    fn verify_small() {
        let (code, out, _) = call(&["verify", "--max-n", "3", "--checks", "switch"]);
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v[0]["check_name"], "switch");
        assert_eq!(v[0]["passed"], true);
        assert_eq!(v[0]["instances_checked"], 9);
    }

    #[test]
    fn render_command() {
        let (code, out, _) = call(&["render", "NE"]);
        assert_eq!(code, 0);
        assert_eq!(out, "|_.\n.  \n");
    }
}
