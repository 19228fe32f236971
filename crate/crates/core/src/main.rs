//! Command-line frontend: plane dump, six-set census, Witt design export,
//! Steiner verification, and automorphism counting.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or parse error.
//! Output is fully deterministic for a given flag set.

use std::fmt::Write as _;
use std::io::Read as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use witt12::checker::{read_design, verify_steiner, write_design, VerificationReport};
use witt12::gf::SUPPORTED_PRIMES;
use witt12::{enumerate_automorphisms, Plane, WittDesign};

#[derive(Parser)]
#[command(
    name = "witt12",
    version,
    about = "The small Witt design S(5,6,12), built from the projective plane of order 3"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
enum Format {
    /// Human-readable report
    #[default]
    Text,
    /// One key=value pair per line
    Kv,
}

fn parse_q(s: &str) -> Result<u8, String> {
    let q: u8 = s.parse().map_err(|_| format!("`{s}` is not a plane order"))?;
    if SUPPORTED_PRIMES.contains(&q) {
        Ok(q)
    } else {
        Err("supported plane orders are 2, 3, 5, 7".into())
    }
}

#[derive(Subcommand)]
enum Command {
    /// Print the points, lines and incidence of the projective plane PG(2,q)
    Plane {
        /// Plane order (a prime up to 7)
        #[arg(long, default_value_t = 3, value_parser = parse_q)]
        q: u8,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
        /// Write the report to a file instead of standard output
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Classify all 1716 six-point subsets of PG(2,3) into their four types
    Census {
        /// Plane order; the census is defined for q=3 only
        #[arg(long, default_value_t = 3, value_parser = parse_q)]
        q: u8,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build S(5,6,12) and print it in the design file format
    Witt {
        /// Plane order; the construction is defined for q=3 only
        #[arg(long, default_value_t = 3, value_parser = parse_q)]
        q: u8,
        /// Plane point removed to form the 12-point set
        #[arg(long, default_value_t = 0, value_parser = clap::value_parser!(u8).range(0..=12))]
        u: u8,
        /// Print an annotated block listing instead of the design file
        #[arg(long)]
        blocks: bool,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check that a design is a Steiner system: every t-set in exactly one block
    Verify {
        /// Size of the point sets that must each lie in exactly one block
        #[arg(long)]
        t: usize,
        /// Design file to check; `-` reads standard input; omitted, the
        /// built-in S(5,6,12) is checked
        #[arg(long = "in")]
        input: Option<String>,
        /// Plane order of the built-in design (q=3 only)
        #[arg(long, default_value_t = 3, value_parser = parse_q)]
        q: u8,
        /// Distinguished point of the built-in design
        #[arg(long, default_value_t = 0, value_parser = clap::value_parser!(u8).range(0..=12))]
        u: u8,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Enumerate the automorphism group of the built-in S(5,6,12)
    Autgroup {
        /// Plane order of the built-in design (q=3 only)
        #[arg(long, default_value_t = 3, value_parser = parse_q)]
        q: u8,
        /// Distinguished point of the built-in design
        #[arg(long, default_value_t = 0, value_parser = clap::value_parser!(u8).range(0..=12))]
        u: u8,
        /// Also print every automorphism as a one-line image array
        #[arg(long)]
        dump: bool,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<ExitCode, Box<dyn std::error::Error>> {
    match command {
        Command::Plane { q, format, out } => {
            let plane = Plane::build(q)?;
            emit(&plane_report(&plane, format), out.as_deref())?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Census { q, format, out } => {
            let report = witt12::census(&Plane::build(q)?)?;
            let [t1, t2, t3, t4] = report.counts;
            let text = match format {
                Format::Text => {
                    format!("type1={t1} type2={t2} type3={t3} type4={t4} total={}\n", report.total)
                }
                Format::Kv => format!(
                    "type1={t1}\ntype2={t2}\ntype3={t3}\ntype4={t4}\ntotal={}\n",
                    report.total
                ),
            };
            emit(&text, out.as_deref())?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Witt { q, u, blocks, format, out } => {
            let w = WittDesign::build(&Plane::build(q)?, u)?;
            let text = if blocks { block_listing(&w, format) } else { design_export(&w) };
            emit(&text, out.as_deref())?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { t, input, q, u, format, out } => {
            let design = match input.as_deref() {
                None => WittDesign::build(&Plane::build(q)?, u)?.to_design(),
                Some("-") => {
                    let mut text = String::new();
                    std::io::stdin().read_to_string(&mut text)?;
                    read_design(&text)?
                }
                Some(path) => read_design(&std::fs::read_to_string(path)?)?,
            };
            let report = verify_steiner(&design, t)?;
            emit(&verify_report(&report, format), out.as_deref())?;
            Ok(if report.is_steiner { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        Command::Autgroup { q, u, dump, format, out } => {
            let design = WittDesign::build(&Plane::build(q)?, u)?.to_design();
            let e = enumerate_automorphisms(&design, [0, 1, 2, 3, 4])?;
            let summary = e.summary();
            let mut text = match format {
                Format::Text => format!(
                    "autgroup u={u} base={}\norder={}\nsharply_5_transitive={}\n",
                    join(&summary.base, ","),
                    summary.order,
                    summary.sharply_5_transitive
                ),
                Format::Kv => format!(
                    "u={u}\nbase={}\norder={}\nsharply_5_transitive={}\n",
                    join(&summary.base, ","),
                    summary.order,
                    summary.sharply_5_transitive
                ),
            };
            if dump {
                for p in &e.automorphisms {
                    writeln!(text, "{p}").unwrap();
                }
            }
            emit(&text, out.as_deref())?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn emit(text: &str, out: Option<&std::path::Path>) -> std::io::Result<()> {
    match out {
        Some(path) => std::fs::write(path, text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn join<T: std::fmt::Display>(items: &[T], sep: &str) -> String {
    items.iter().map(T::to_string).collect::<Vec<_>>().join(sep)
}

fn plane_report(plane: &Plane, format: Format) -> String {
    let n = plane.point_count();
    let mut s = String::new();
    match format {
        Format::Text => {
            writeln!(s, "plane q={} points={n} lines={n}", plane.order()).unwrap();
            writeln!(s, "points:").unwrap();
            for p in 0..n as u8 {
                let [x, y, z] = plane.point(p);
                writeln!(s, "  {p} ({x},{y},{z}) lines {}", join(plane.lines_through(p), " "))
                    .unwrap();
            }
            writeln!(s, "lines:").unwrap();
            for l in 0..n as u8 {
                let [x, y, z] = plane.line(l);
                writeln!(s, "  {l} ({x},{y},{z}) points {}", join(plane.points_on(l), " "))
                    .unwrap();
            }
        }
        Format::Kv => {
            writeln!(s, "q={}", plane.order()).unwrap();
            writeln!(s, "points={n}").unwrap();
            writeln!(s, "lines={n}").unwrap();
            for p in 0..n as u8 {
                let t = plane.point(p);
                writeln!(s, "point.{p}={}", join(&t, ",")).unwrap();
                writeln!(s, "point.{p}.lines={}", join(plane.lines_through(p), ",")).unwrap();
            }
            for l in 0..n as u8 {
                let t = plane.line(l);
                writeln!(s, "line.{l}={}", join(&t, ",")).unwrap();
                writeln!(s, "line.{l}.points={}", join(plane.points_on(l), ",")).unwrap();
            }
        }
    }
    s
}

/// The design file, with a comment header recording the construction:
/// q, u, the plane indices of the 12 points (dense order), and the
/// per-type block counts.
fn design_export(w: &WittDesign) -> String {
    let design = w.to_design();
    let text = write_design(&design);
    let (header, blocks) = text.split_once('\n').expect("write_design emits a header line");
    let [a, b, c] = w.block_counts();
    format!(
        "{header}\n# w12 q={} u={}\n# points {}\n# typeA={a} typeB={b} typeC={c}\n{blocks}",
        w.plane().order(),
        w.u(),
        join(w.points(), " "),
    )
}

/// One line per block with type and witness, in plane point indices.
fn block_listing(w: &WittDesign, format: Format) -> String {
    let [a, b, c] = w.block_counts();
    let mut s = String::new();
    match format {
        Format::Text => {
            writeln!(
                s,
                "w12 q={} u={} blocks={} typeA={a} typeB={b} typeC={c}",
                w.plane().order(),
                w.u(),
                w.blocks().len()
            )
            .unwrap();
            writeln!(s, "points {}", join(w.points(), " ")).unwrap();
            for (i, block) in w.blocks().iter().enumerate() {
                writeln!(
                    s,
                    "block {i} type={} members={} witness={}",
                    block.block_type,
                    join(&block.members, ","),
                    block.witness
                )
                .unwrap();
            }
        }
        Format::Kv => {
            writeln!(s, "q={}", w.plane().order()).unwrap();
            writeln!(s, "u={}", w.u()).unwrap();
            writeln!(s, "blocks={}", w.blocks().len()).unwrap();
            writeln!(s, "typeA={a}").unwrap();
            writeln!(s, "typeB={b}").unwrap();
            writeln!(s, "typeC={c}").unwrap();
            writeln!(s, "points={}", join(w.points(), ",")).unwrap();
            for (i, block) in w.blocks().iter().enumerate() {
                writeln!(s, "block.{i}.type={}", block.block_type).unwrap();
                writeln!(s, "block.{i}.members={}", join(&block.members, ",")).unwrap();
                writeln!(s, "block.{i}.witness={}", block.witness).unwrap();
            }
        }
    }
    s
}

fn verify_report(r: &VerificationReport, format: Format) -> String {
    let mut s = String::new();
    match format {
        Format::Text => {
            writeln!(s, "verify t={} v={} k={} b={}", r.t, r.v, r.k, r.block_count).unwrap();
            writeln!(s, "t_sets={}", r.t_set_count).unwrap();
            writeln!(s, "r_min={}", r.r_min).unwrap();
            writeln!(s, "r_max={}", r.r_max).unwrap();
            for (count, sets) in &r.histogram {
                writeln!(s, "histogram {count}:{sets}").unwrap();
            }
            writeln!(s, "sum_r={}", r.sum_r).unwrap();
            writeln!(s, "expected_sum={}", r.expected_sum).unwrap();
            if !r.failures.is_empty() {
                writeln!(s, "failures={}", r.failure_count).unwrap();
                for (set, count) in &r.failures {
                    writeln!(s, "fail r={count} set {}", join(set, " ")).unwrap();
                }
                if r.failure_count > r.failures.len() as u64 {
                    writeln!(s, "fail (and {} more)", r.failure_count - r.failures.len() as u64)
                        .unwrap();
                }
            }
            if let Some(lambdas) = &r.lambdas {
                writeln!(s, "lambdas {}", join(lambdas, " ")).unwrap();
            }
            writeln!(s, "is_steiner={}", r.is_steiner).unwrap();
        }
        Format::Kv => {
            writeln!(s, "t={}", r.t).unwrap();
            writeln!(s, "v={}", r.v).unwrap();
            writeln!(s, "k={}", r.k).unwrap();
            writeln!(s, "b={}", r.block_count).unwrap();
            writeln!(s, "t_sets={}", r.t_set_count).unwrap();
            writeln!(s, "r_min={}", r.r_min).unwrap();
            writeln!(s, "r_max={}", r.r_max).unwrap();
            for (count, sets) in &r.histogram {
                writeln!(s, "histogram.{count}={sets}").unwrap();
            }
            writeln!(s, "sum_r={}", r.sum_r).unwrap();
            writeln!(s, "expected_sum={}", r.expected_sum).unwrap();
            writeln!(s, "failures={}", r.failure_count).unwrap();
            for (i, (set, count)) in r.failures.iter().enumerate() {
                writeln!(s, "fail.{i}.r={count}").unwrap();
                writeln!(s, "fail.{i}.set={}", join(set, ",")).unwrap();
            }
            if let Some(lambdas) = &r.lambdas {
                for (i, l) in lambdas.iter().enumerate() {
                    writeln!(s, "lambda.{i}={l}").unwrap();
                }
            }
            writeln!(s, "is_steiner={}", r.is_steiner).unwrap();
        }
    }
    s
}
