//! Command-line front end. Results go to stdout, timings to stderr.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use num_traits::{One, Signed, Zero};

use crate::cyclotomic::cyclotomic_poly;
use crate::enumerate::{find_minimal_parts, sorou_of_minvan_type, type_statistics, SorouCache};
use crate::error::{Error, Result};
use crate::minimality::{is_minimal_vanishing, is_minimal_vanishing_bruteforce};
use crate::plot::PlotSpec;
use crate::sorou::Sorou;
use crate::store::{
    generate_next_weight, load_cache, load_db, render_csv_report, render_latex_report, save_cache,
    save_db, TypeDatabase,
};
use crate::reference::rows_through;
use crate::typegen::GenerationConfig;
use crate::types::{assemble, galois_class_rep, infer_type, parse_type, render_type_latex, TypeRecord};

const BOOTSTRAP_WEIGHT: usize = 12;
const BRUTEFORCE_MAX_WEIGHT: usize = 14;

#[derive(Parser, Debug)]
#[command(name = "minvan", version, about = "Minimal vanishing sums of roots of unity")]
pub struct Cli {
    /// Type database file.
    #[arg(long, global = true, env = "MINVAN_DB", default_value = "minvan.db")]
    pub db: PathBuf,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Build the database through weight 12 and check it against the reference table.
    Bootstrap {
        #[arg(long)]
        no_conjugate_collapse: bool,
    },
    /// Extend the database one weight at a time.
    Extend {
        #[arg(long)]
        to: usize,
        /// Worker threads; 0 uses all cores.
        #[arg(long, default_value_t = 0)]
        threads: usize,
        #[arg(long)]
        no_minvan_filter: bool,
        #[arg(long)]
        no_conjugate_collapse: bool,
    },
    /// Check a sorou, or with no argument every database record.
    Verify { sorou: Option<String> },
    /// List every minimal vanishing sorou of a type up to rotation.
    Enumerate { ty: String },
    /// Write the database as a table.
    Report {
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Coefficients of the n-th cyclotomic polynomial, lowest degree first.
    Phi { n: u64 },
    /// Draw a sorou as an SVG figure.
    Plot {
        sorou: String,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, default_value_t = 60.0)]
        radius: f64,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Latex,
}

/// Outcome of a command that ran to completion.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Ok,
    Failed,
}

pub fn run(cli: Cli, out: &mut dyn Write) -> Result<Status> {
    match cli.command {
        Command::Bootstrap {
            no_conjugate_collapse,
        } => cmd_bootstrap(&cli.db, !no_conjugate_collapse, out),
        Command::Extend {
            to,
            threads,
            no_minvan_filter,
            no_conjugate_collapse,
        } => {
            let mut cfg = GenerationConfig::new(to);
            cfg.threads = threads;
            cfg.enable_minvan_subtype_filter = !no_minvan_filter;
            cfg.enable_conjugate_collapse = !no_conjugate_collapse;
            cmd_extend(&cli.db, &cfg, out)
        }
        Command::Verify { sorou: Some(text) } => cmd_verify(&text, out),
        Command::Verify { sorou: None } => cmd_verify_db(&cli.db, out),
        Command::Enumerate { ty } => cmd_enumerate(&ty, out),
        Command::Report { format, out: path } => cmd_report(&cli.db, format, path.as_deref(), out),
        Command::Phi { n } => cmd_phi(n, out),
        Command::Plot { sorou, out: path, radius } => {
            let mut spec = PlotSpec::new(sorou.parse()?, path);
            spec.radius = radius;
            spec.write()?;
            Ok(Status::Ok)
        }
    }
}

fn cache_path(db: &Path) -> PathBuf {
    let mut name = db.as_os_str().to_owned();
    name.push(".cache");
    PathBuf::from(name)
}

fn load_cache_or_empty(db: &Path) -> Result<SorouCache> {
    let path = cache_path(db);
    if path.exists() {
        load_cache(&path)
    } else {
        Ok(SorouCache::new())
    }
}

fn extend_to(
    db: &mut TypeDatabase,
    cfg: &GenerationConfig,
    cache: &SorouCache,
    path: &Path,
    out: &mut dyn Write,
) -> Result<()> {
    while db.max_complete_weight < cfg.target_weight {
        let w = db.max_complete_weight + 1;
        let started = Instant::now();
        let step = GenerationConfig {
            target_weight: w,
            ..cfg.clone()
        };
        let new = generate_next_weight(db, &step, cache)?;
        save_db(db, path)?;
        save_cache(cache, &cache_path(path))?;
        writeln!(out, "weight {w}: {} types", new.len())?;
        eprintln!("weight {w}: {:.2?}", started.elapsed());
    }
    Ok(())
}

/// Compares the database with the reference rows through `w`, up to
/// Galois conjugation.
fn check_fixture(db: &TypeDatabase, w: usize) -> Result<()> {
    let mut have: Vec<(String, &TypeRecord)> = Vec::new();
    for r in db.records.iter().filter(|r| r.weight <= w) {
        let key = galois_class_rep(&r.ty).to_string();
        if have.iter().all(|(k, _)| *k != key) {
            have.push((key, r));
        }
    }
    let rows: Vec<_> = rows_through(w).collect();
    if have.len() != rows.len() {
        return Err(Error::FixtureMismatch(format!(
            "{} type classes through weight {w}, expected {}",
            have.len(),
            rows.len()
        )));
    }
    for row in rows {
        let key = row.minvan()?.to_string();
        let rec = have
            .iter()
            .find(|(k, _)| *k == key)
            .map(|(_, r)| *r)
            .ok_or_else(|| Error::FixtureMismatch(format!("missing type {}", row.ty)))?;
        let mut partition = rec.weight_partition.clone();
        partition.reverse();
        if rec.parities != row.parities
            || partition != row.partition
            || rec.top_prime != row.top_prime
            || rec.relative_orders.iter().max() != Some(&row.relative_order)
        {
            return Err(Error::FixtureMismatch(format!("statistics differ for {}", row.ty)));
        }
    }
    Ok(())
}

pub fn cmd_bootstrap(path: &Path, collapse: bool, out: &mut dyn Write) -> Result<Status> {
    if path.exists() {
        let db = load_db(path)?;
        if db.max_complete_weight >= BOOTSTRAP_WEIGHT {
            check_fixture(&db, BOOTSTRAP_WEIGHT)?;
            writeln!(out, "database already complete through weight {}", db.max_complete_weight)?;
            return Ok(Status::Ok);
        }
    }
    let mut db = TypeDatabase::empty(collapse);
    let cache = SorouCache::new();
    let mut cfg = GenerationConfig::new(BOOTSTRAP_WEIGHT);
    cfg.enable_conjugate_collapse = collapse;
    let started = Instant::now();
    extend_to(&mut db, &cfg, &cache, path, out)?;
    check_fixture(&db, BOOTSTRAP_WEIGHT)?;
    writeln!(out, "{} records through weight {BOOTSTRAP_WEIGHT}", db.records.len())?;
    eprintln!("bootstrap: {:.2?}", started.elapsed());
    Ok(Status::Ok)
}

pub fn cmd_extend(path: &Path, cfg: &GenerationConfig, out: &mut dyn Write) -> Result<Status> {
    let mut db = load_db(path)?;
    let cache = load_cache_or_empty(path)?;
    let started = Instant::now();
    extend_to(&mut db, cfg, &cache, path, out)?;
    writeln!(out, "{} records through weight {}", db.records.len(), db.max_complete_weight)?;
    eprintln!("extend: {:.2?}", started.elapsed());
    Ok(Status::Ok)
}

pub fn cmd_verify(text: &str, out: &mut dyn Write) -> Result<Status> {
    let s: Sorou = text.parse()?;
    let verdict = is_minimal_vanishing(&s)?;
    writeln!(out, "vanishing: {}", verdict.vanishing)?;
    match verdict.failing_condition {
        Some(c) => writeln!(out, "minimal: false ({})", c.tag())?,
        None => writeln!(out, "minimal: true")?,
    }
    writeln!(out, "weight: {}", s.weight())?;
    writeln!(out, "height: {}", s.height())?;
    writeln!(out, "order: {}", s.order()?)?;
    let relorder = s.relative_order()?;
    writeln!(out, "relative order: {relorder}")?;
    match s.top_prime() {
        Ok(p) => writeln!(out, "top prime: {p}")?,
        Err(_) => writeln!(out, "top prime: none")?,
    }
    match s.parity() {
        Ok((a, b)) => writeln!(out, "parity: ({a},{b})")?,
        Err(_) => writeln!(out, "parity: undefined")?,
    }
    if verdict.minimal {
        let t = infer_type(&s)?;
        writeln!(out, "type: {t}")?;
        writeln!(out, "notation: {}", render_type_latex(&t))?;
        Ok(Status::Ok)
    } else {
        Ok(Status::Failed)
    }
}

/// Rebuilds a realization of every record and recomputes its statistics.
pub fn cmd_verify_db(path: &Path, out: &mut dyn Write) -> Result<Status> {
    let db = load_db(path)?;
    let cache = load_cache_or_empty(path)?;
    let mut failures = 0;
    for r in &db.records {
        let t = r.minvan();
        let problem = match find_minimal_parts(t, &cache)? {
            None => Some("no minimal realization".to_string()),
            Some(parts) => {
                let h = assemble(t.p(), parts);
                let d = h.to_subsidiary()?;
                let mut partition: Vec<usize> = d.parts.iter().map(Sorou::weight).collect();
                partition.sort_unstable();
                if !is_minimal_vanishing(&h)?.minimal {
                    Some(format!("{h} fails the subsidiary criterion"))
                } else if h.weight() <= BRUTEFORCE_MAX_WEIGHT && !is_minimal_vanishing_bruteforce(&h)? {
                    Some(format!("{h} fails the subset search"))
                } else if h.weight() != r.weight || d.top_prime != r.top_prime || partition != r.weight_partition {
                    Some(format!("{h} has the wrong shape"))
                } else if type_statistics(t, &cache)? != *r {
                    Some("statistics differ".to_string())
                } else {
                    None
                }
            }
        };
        if let Some(p) = problem {
            failures += 1;
            writeln!(out, "FAIL {}: {p}", r.ty)?;
        }
    }
    writeln!(out, "{} records checked, {failures} failures", db.records.len())?;
    Ok(if failures == 0 { Status::Ok } else { Status::Failed })
}

pub fn cmd_enumerate(text: &str, out: &mut dyn Write) -> Result<Status> {
    let t = parse_type(text)?;
    let t = t.minimal().ok_or(Error::NotMinimal)?;
    let cache = SorouCache::new();
    let classes = sorou_of_minvan_type(t, &cache)?;
    for h in classes.iter() {
        let (a, b) = h.parity()?;
        writeln!(out, "{h}\tparity ({a},{b})\theight {}", h.height())?;
    }
    writeln!(out, "{} classes", classes.len())?;
    Ok(Status::Ok)
}

pub fn cmd_report(path: &Path, format: Format, dest: Option<&Path>, out: &mut dyn Write) -> Result<Status> {
    let db = load_db(path)?;
    let text = match format {
        Format::Csv => render_csv_report(&db)?,
        Format::Latex => render_latex_report(&db)?,
    };
    match dest {
        Some(p) => std::fs::write(p, text)?,
        None => out.write_all(text.as_bytes())?,
    }
    Ok(Status::Ok)
}

pub fn cmd_phi(n: u64, out: &mut dyn Write) -> Result<Status> {
    if n == 0 {
        return Err(Error::Parse {
            position: 0,
            message: "n must be positive".into(),
        });
    }
    let phi = cyclotomic_poly(n);
    let coeffs: Vec<String> = phi.coefficients().iter().map(|c| c.to_string()).collect();
    writeln!(out, "{}", coeffs.join(", "))?;
    for (d, c) in phi.coefficients().iter().enumerate() {
        if !(c.is_zero() || c.abs().is_one()) {
            writeln!(out, "degree {d}: {c}")?;
        }
    }
    Ok(Status::Ok)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn capture(f: impl FnOnce(&mut dyn Write) -> Result<Status>) -> (Status, String) {
        let mut buf = Vec::new();
        let status = f(&mut buf).unwrap();
        (status, String::from_utf8(buf).unwrap())
    }

    #[test]
    fn phi_output() {
        let (_, text) = capture(|o| cmd_phi(6, o));
        assert_eq!(text, "1, -1, 1\n");
        let (_, text) = capture(|o| cmd_phi(105, o));
        assert!(text.ends_with("degree 7: -2\ndegree 41: -2\n"));
    }

    #[test]
    fn verify_small() {
        let (status, text) = capture(|o| cmd_verify("1:0+2:1", o));
        assert_eq!(status, Status::Ok);
        assert!(text.contains("minimal: true") && text.contains("type: (R2;1:0)"));
        let (status, text) = capture(|o| cmd_verify("1:0+3:1", o));
        assert_eq!(status, Status::Failed);
        assert!(text.contains("vanishing: false"));
    }

    #[test]
    fn enumerate_parities() {
        let (_, text) = capture(|o| cmd_enumerate("(R5;1:0;(R3;1:0))", o));
        let rows: Vec<&str> = text.lines().filter(|l| l.contains('\t')).collect();
        assert!(!rows.is_empty());
        assert!(rows.iter().all(|l| l.contains("parity (4,2)")));
    }

    #[test]
    fn bootstrap_then_extend() {
        let dir = tempfile::tempdir().unwrap();
        let db = dir.path().join("types.db");
        let (_, text) = capture(|o| cmd_bootstrap(&db, true, o));
        assert!(text.contains("21 records through weight 12"));
        let before = std::fs::read(&db).unwrap();
        capture(|o| cmd_bootstrap(&db, true, o));
        assert_eq!(std::fs::read(&db).unwrap(), before);
        let (_, text) = capture(|o| cmd_extend(&db, &GenerationConfig::new(13), o));
        assert!(text.contains("weight 13: 8 types"));
        let (status, _) = capture(|o| cmd_verify_db(&db, o));
        assert_eq!(status, Status::Ok);
    }

    #[test]
    fn bootstrap_rejects_tampered_db() {
        let dir = tempfile::tempdir().unwrap();
        let db = dir.path().join("types.db");
        capture(|o| cmd_bootstrap(&db, true, o));
        let text = std::fs::read_to_string(&db).unwrap();
        let tampered = text.replace("\t4,2\t", "\t5,1\t");
        assert_ne!(tampered, text);
        std::fs::write(&db, tampered).unwrap();
        let mut sink = Vec::new();
        assert!(matches!(cmd_bootstrap(&db, true, &mut sink), Err(Error::FixtureMismatch(_))));
    }
}
