//! Thin command-line front end over the library: generate point sets,
//! compute statistics reports, run the structural audits, and sweep
//! families for exponent fits.
//!
//! Exit codes: 0 on success, 1 on usage or I/O errors, 2 when an audit
//! reports a violation.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use bisectors::generators::GeneratorSpec;
use bisectors::io::{parse_pointset, write_pointset};
use bisectors::report::{AuditSummary, HarnessReport, Violation};
use bisectors::scan::{fit_summaries, rows_to_csv, run_scan, ScanConfig, ScanFamily};
use bisectors::stats::{stats_report, StatsOptions};
use bisectors::surface::{
    k2m_audit, lemma32_audit, quadruple_invariant_audit, BICLIQUE_AUDIT_CAP, CURVE_AUDIT_CAP,
    QUADRUPLE_AUDIT_CAP,
};

#[derive(Parser)]
#[command(
    name = "bisectors",
    version,
    about = "Exact perpendicular-bisector statistics, audits and generators for planar point sets"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a benchmark point set
    Gen {
        /// Output file; stdout when omitted
        #[arg(long)]
        out: Option<PathBuf>,
        #[command(subcommand)]
        family: Family,
    },
    /// Compute the statistics report of a point-set file
    Stats {
        path: PathBuf,
        /// Emit the JSON report instead of the human table
        #[arg(long)]
        json: bool,
        /// Skip the cubic-time cocircularity maximum
        #[arg(long)]
        no_cocircular: bool,
        /// Rich-line thresholds to tabulate, e.g. --rich 3,4
        #[arg(long, value_delimiter = ',')]
        rich: Vec<u64>,
    },
    /// Run the structural audits; exits 2 on any violation
    Audit {
        path: PathBuf,
        /// Which audits to run
        #[arg(long, value_delimiter = ',', default_values_t = vec![AuditKind::All])]
        audits: Vec<AuditKind>,
        /// Override the per-audit point caps
        #[arg(long)]
        cap: Option<usize>,
        /// Emit the JSON report instead of the human summary
        #[arg(long)]
        json: bool,
    },
    /// Sweep a generated family over sizes, write CSV, print slope fits
    Scan {
        #[arg(long, value_enum)]
        family: FamilyName,
        /// Sizes to sweep (side length for grid, point count otherwise)
        #[arg(long, value_delimiter = ',', required = true)]
        sizes: Vec<u32>,
        /// Ellipse-train parameter M (required for that family)
        #[arg(long)]
        m: Option<u32>,
        /// Seed for the random family
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Coordinate range for the random family
        #[arg(long, default_value_t = 1000)]
        range: i64,
        /// Skip the cubic-time cocircularity maximum in every row
        #[arg(long)]
        no_cocircular: bool,
        /// CSV output path
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Subcommand)]
enum Family {
    /// k×k integer grid
    Grid {
        #[arg(long)]
        k: u32,
    },
    /// n equally spaced collinear points
    Line {
        #[arg(long)]
        n: u32,
    },
    /// n rational points on the unit circle
    Circle {
        #[arg(long)]
        n: u32,
    },
    /// Mirrored points on m/8 translated ellipses
    EllipseTrain {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        m: u32,
    },
    /// n seeded random integer points
    Random {
        #[arg(long)]
        n: u32,
        #[arg(long, default_value_t = 1000)]
        range: i64,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
}

impl Family {
    fn spec(&self) -> GeneratorSpec {
        match *self {
            Family::Grid { k } => GeneratorSpec::Grid { k },
            Family::Line { n } => GeneratorSpec::Line { n },
            Family::Circle { n } => GeneratorSpec::RationalCircle { n },
            Family::EllipseTrain { n, m } => GeneratorSpec::EllipseTrain { n, m },
            Family::Random { n, range, seed } => GeneratorSpec::Random { n, range, seed },
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FamilyName {
    Grid,
    Line,
    Circle,
    EllipseTrain,
    Random,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum AuditKind {
    Lemma32,
    Quadruple,
    K2m,
    All,
}

impl std::fmt::Display for AuditKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let name = match self {
            AuditKind::Lemma32 => "lemma32",
            AuditKind::Quadruple => "quadruple",
            AuditKind::K2m => "k2m",
            AuditKind::All => "all",
        };
        write!(f, "{name}")
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, Box<dyn std::error::Error>> {
    match cli.command {
        Command::Gen { out, family } => {
            let set = family.spec().generate()?;
            match out {
                Some(path) => write_pointset(&set, &path)?,
                None => print!("{}", bisectors::io::format_pointset(&set)),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Stats {
            path,
            json,
            no_cocircular,
            rich,
        } => {
            let set = parse_pointset(&path)?;
            let opts = StatsOptions {
                skip_cocircular: no_cocircular,
                rich_line_thresholds: rich,
            };
            let stats = stats_report(&set, &opts)?;
            if json {
                println!("{}", HarnessReport::stats_only(stats).to_json());
            } else {
                println!("{stats}");
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Audit {
            path,
            audits,
            cap,
            json,
        } => run_audits(&path, &audits, cap, json),
        Command::Scan {
            family,
            sizes,
            m,
            seed,
            range,
            no_cocircular,
            out,
        } => {
            let family = match family {
                FamilyName::Grid => ScanFamily::Grid,
                FamilyName::Line => ScanFamily::Line,
                FamilyName::Circle => ScanFamily::RationalCircle,
                FamilyName::EllipseTrain => ScanFamily::EllipseTrain {
                    m: m.ok_or("--m is required for the ellipse-train family")?,
                },
                FamilyName::Random => ScanFamily::Random { range, seed },
            };
            let config = ScanConfig {
                family,
                sizes,
                skip_cocircular: no_cocircular,
            };
            let rows = run_scan(&config)?;
            std::fs::write(&out, rows_to_csv(&rows))?;
            println!("wrote {} rows to {}", rows.len(), out.display());
            let fits = fit_summaries(&rows);
            if fits.is_empty() {
                println!("no slope fit (a fit needs at least 4 sizes per fixed-M family)");
            }
            for fit in fits {
                println!(
                    "fit family={} m={}: slope of log(energy) vs log(n) = {:.4} over {} sizes",
                    fit.family, fit.m, fit.slope, fit.sizes
                );
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn run_audits(
    path: &std::path::Path,
    which: &[AuditKind],
    cap: Option<usize>,
    json: bool,
) -> Result<ExitCode, Box<dyn std::error::Error>> {
    let set = parse_pointset(path)?;
    let all = which.contains(&AuditKind::All);
    let mut violations: Vec<Violation> = Vec::new();
    let mut summaries: Vec<AuditSummary> = Vec::new();

    if all || which.contains(&AuditKind::Lemma32) {
        let report = lemma32_audit(&set, cap.unwrap_or(CURVE_AUDIT_CAP))?;
        violations.extend(report.violations.iter().map(|m| Violation {
            audit: report.audit.clone(),
            message: m.clone(),
        }));
        summaries.push(AuditSummary::from(&report));
    }
    if all || which.contains(&AuditKind::Quadruple) {
        let report = quadruple_invariant_audit(&set, cap.unwrap_or(QUADRUPLE_AUDIT_CAP))?;
        violations.extend(report.violations.iter().map(|m| Violation {
            audit: report.audit.clone(),
            message: m.clone(),
        }));
        summaries.push(AuditSummary::from(&report));
    }
    let mut stats = stats_report(&set, &StatsOptions::default())?;
    if all || which.contains(&AuditKind::K2m) {
        let maxima = k2m_audit(&set, cap.unwrap_or(BICLIQUE_AUDIT_CAP))?;
        let bound = stats.max_on_line_or_circle();
        let worst = maxima
            .surface_pair_common_points
            .max(maxima.point_pair_common_surfaces);
        let passed = worst <= bound;
        if !passed {
            violations.push(Violation {
                audit: "k2m".to_string(),
                message: format!(
                    "biclique maxima ({}, {}) exceed the line/circle bound {}",
                    maxima.surface_pair_common_points, maxima.point_pair_common_surfaces, bound
                ),
            });
        }
        summaries.push(AuditSummary {
            audit: "k2m".to_string(),
            checked: 2,
            skipped_empty_intersection: 0,
            skipped_degenerate: 0,
            passed,
        });
    }

    let failed = !violations.is_empty();
    if json {
        let report = HarnessReport {
            stats,
            violations,
            audits: Some(summaries),
        };
        println!("{}", report.to_json());
    } else {
        stats.rich_lines = None;
        for s in &summaries {
            println!(
                "audit {:<9} {} (checked {}, skipped empty-intersection {}, degenerate {})",
                s.audit,
                if s.passed { "ok" } else { "FAILED" },
                s.checked,
                s.skipped_empty_intersection,
                s.skipped_degenerate
            );
        }
        for v in &violations {
            println!("violation [{}] {}", v.audit, v.message);
        }
    }
    Ok(if failed {
        ExitCode::from(2)
    } else {
        ExitCode::SUCCESS
    })
}
