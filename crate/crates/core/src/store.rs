//! On-disk type database, realization cache and reports.

use std::fmt::Write as _;
use std::fs;
use std::io::Write as _;
use std::path::Path;

use crate::enumerate::{type_statistics, SorouCache};
use crate::error::{Error, Result};
use crate::sorou::Sorou;
use crate::typegen::{generate_weight, GenerationConfig};
use crate::types::{compare_types, parse_type, render_type_notation, MinVanType, Notation, TypeRecord};

const DB_MAGIC: &str = "minvan-db v1";

/// Every minimal type through `max_complete_weight`, with statistics.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TypeDatabase {
    pub max_complete_weight: usize,
    /// Whether types are stored one per Galois class.
    pub collapse: bool,
    /// Sorted by weight, then `compare_types`.
    pub records: Vec<TypeRecord>,
}

impl TypeDatabase {
    /// Complete through weight 1, which has no vanishing sorou.
    pub fn empty(collapse: bool) -> TypeDatabase {
        TypeDatabase {
            max_complete_weight: 1,
            collapse,
            records: Vec::new(),
        }
    }

    pub fn types(&self) -> Vec<MinVanType> {
        self.records.iter().map(|r| r.minvan().clone()).collect()
    }

    pub fn of_weight(&self, w: usize) -> impl Iterator<Item = &TypeRecord> {
        self.records.iter().filter(move |r| r.weight == w)
    }

    /// Appends a completed weight.
    pub fn commit(&mut self, weight: usize, mut records: Vec<TypeRecord>) -> Result<()> {
        if weight != self.max_complete_weight + 1 {
            return Err(Error::IncompleteDatabase {
                have: self.max_complete_weight as u32,
                need: weight as u32 - 1,
            });
        }
        records.sort_by(|a, b| compare_types(&a.ty, &b.ty));
        self.records.extend(records);
        self.max_complete_weight = weight;
        Ok(())
    }

    fn validate(&self) -> Result<()> {
        for (i, r) in self.records.iter().enumerate() {
            let line = i + 2;
            let bad = |message: String| Error::Database { line, message };
            let t = r
                .ty
                .minimal()
                .ok_or_else(|| bad("type is not minimal".into()))?;
            if t.weight() != r.weight || r.weight > self.max_complete_weight {
                return Err(bad(format!("weight {} out of place", r.weight)));
            }
            if t.weight_partition() != r.weight_partition {
                return Err(bad("weight partition disagrees with type".into()));
            }
            if r.parities.iter().any(|&(a, b)| a < b || a + b != r.weight) {
                return Err(bad("parity does not split the weight".into()));
            }
            if r.equisigned != r.parities.iter().any(|(a, b)| a == b) {
                return Err(bad("equisigned flag disagrees with parities".into()));
            }
            if i > 0 && compare_types(&self.records[i - 1].ty, &r.ty).is_ge() {
                return Err(bad("records out of order".into()));
            }
        }
        Ok(())
    }
}

/// Generates, measures and commits the next weight.
pub fn generate_next_weight(
    db: &mut TypeDatabase,
    cfg: &GenerationConfig,
    cache: &SorouCache,
) -> Result<Vec<MinVanType>> {
    if cfg.target_weight != db.max_complete_weight + 1 {
        return Err(Error::IncompleteDatabase {
            have: db.max_complete_weight as u32,
            need: cfg.target_weight as u32 - 1,
        });
    }
    if cfg.enable_conjugate_collapse != db.collapse {
        return Err(Error::Database {
            line: 1,
            message: "collapse setting differs from the database".into(),
        });
    }
    let new = generate_weight(&db.types(), cfg, cache)?;
    let records = new
        .iter()
        .map(|t| type_statistics(t, cache))
        .collect::<Result<Vec<_>>>()?;
    db.commit(cfg.target_weight, records)?;
    Ok(new)
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(T::to_string).collect::<Vec<_>>().join(";")
}

fn record_line(r: &TypeRecord) -> String {
    let parities: Vec<String> = r.parities.iter().map(|(a, b)| format!("{a},{b}")).collect();
    format!(
        "{}\t{}\t{}\t{}\t{}\t{}\t{}",
        r.weight,
        r.ty,
        join(&r.relative_orders),
        join(&r.weight_partition),
        parities.join(";"),
        join(&r.heights),
        r.equisigned
    )
}

fn parse_list<T: std::str::FromStr>(field: &str, line: usize) -> Result<Vec<T>> {
    if field.is_empty() {
        return Ok(Vec::new());
    }
    field
        .split(';')
        .map(|x| {
            x.parse().map_err(|_| Error::Database {
                line,
                message: format!("bad list entry '{x}'"),
            })
        })
        .collect()
}

fn parse_record(text: &str, line: usize) -> Result<TypeRecord> {
    let bad = |message: String| Error::Database { line, message };
    let fields: Vec<&str> = text.split('\t').collect();
    if fields.len() != 7 {
        return Err(bad(format!("expected 7 fields, found {}", fields.len())));
    }
    let ty = parse_type(fields[1]).map_err(|e| bad(e.to_string()))?;
    let parities = if fields[4].is_empty() {
        Vec::new()
    } else {
        fields[4]
            .split(';')
            .map(|p| {
                let (a, b) = p.split_once(',').ok_or_else(|| bad(format!("bad parity '{p}'")))?;
                let a = a.parse().map_err(|_| bad(format!("bad parity '{p}'")))?;
                let b = b.parse().map_err(|_| bad(format!("bad parity '{p}'")))?;
                Ok((a, b))
            })
            .collect::<Result<Vec<_>>>()?
    };
    let top_prime = ty.top_prime();
    Ok(TypeRecord {
        weight: fields[0].parse().map_err(|_| bad("bad weight".into()))?,
        ty,
        top_prime,
        relative_orders: parse_list(fields[2], line)?,
        weight_partition: parse_list(fields[3], line)?,
        parities,
        heights: parse_list(fields[5], line)?,
        equisigned: fields[6].parse().map_err(|_| bad("bad equisigned flag".into()))?,
    })
}

fn write_atomic(path: &Path, contents: &str) -> Result<()> {
    let dir = path.parent().filter(|d| !d.as_os_str().is_empty()).unwrap_or(Path::new("."));
    let name = path.file_name().and_then(|n| n.to_str()).unwrap_or("out");
    let tmp = dir.join(format!(".{name}.tmp{}", std::process::id()));
    {
        let mut f = fs::File::create(&tmp)?;
        f.write_all(contents.as_bytes())?;
        f.sync_all()?;
    }
    fs::rename(&tmp, path)?;
    Ok(())
}

pub fn render_db(db: &TypeDatabase) -> String {
    let mut out = format!(
        "{DB_MAGIC} maxweight={} collapse={}\n",
        db.max_complete_weight,
        if db.collapse { "on" } else { "off" }
    );
    for r in &db.records {
        out += &record_line(r);
        out.push('\n');
    }
    out
}

pub fn parse_db(text: &str) -> Result<TypeDatabase> {
    let mut lines = text.lines();
    let header = lines.next().ok_or(Error::Database {
        line: 1,
        message: "empty file".into(),
    })?;
    let bad_header = |message: &str| Error::Database {
        line: 1,
        message: message.into(),
    };
    let rest = header
        .strip_prefix(DB_MAGIC)
        .ok_or_else(|| bad_header("unknown format or version"))?;
    let mut max = None;
    let mut collapse = None;
    for field in rest.split_whitespace() {
        match field.split_once('=') {
            Some(("maxweight", v)) => max = v.parse::<usize>().ok(),
            Some(("collapse", "on")) => collapse = Some(true),
            Some(("collapse", "off")) => collapse = Some(false),
            _ => return Err(bad_header(&format!("unexpected header field '{field}'"))),
        }
    }
    let mut db = TypeDatabase {
        max_complete_weight: max.ok_or_else(|| bad_header("missing maxweight"))?,
        collapse: collapse.ok_or_else(|| bad_header("missing collapse"))?,
        records: Vec::new(),
    };
    for (i, line) in lines.enumerate() {
        db.records.push(parse_record(line, i + 2)?);
    }
    db.validate()?;
    Ok(db)
}

pub fn save_db(db: &TypeDatabase, path: &Path) -> Result<()> {
    write_atomic(path, &render_db(db))
}

pub fn load_db(path: &Path) -> Result<TypeDatabase> {
    parse_db(&fs::read_to_string(path)?)
}

pub fn render_cache(cache: &SorouCache) -> String {
    let mut out = String::new();
    for (key, sorou) in cache.entries() {
        let list: Vec<String> = sorou.iter().map(Sorou::to_string).collect();
        let _ = writeln!(out, "{key}\t{}", list.join(","));
    }
    out
}

/// Seeds `cache` from the text form.
pub fn parse_cache_into(text: &str, cache: &SorouCache) -> Result<()> {
    for (i, line) in text.lines().enumerate() {
        let bad = |message: String| Error::Cache {
            line: i + 1,
            message,
        };
        let (key, list) = line
            .split_once('\t')
            .ok_or_else(|| bad("missing tab".into()))?;
        let t = parse_type(key).map_err(|e| bad(e.to_string()))?;
        if t.to_string() != key {
            return Err(bad(format!("type '{key}' is not in canonical form")));
        }
        let sorou = if list.is_empty() {
            Vec::new()
        } else {
            list.split(',')
                .map(|s| s.parse::<Sorou>().map_err(|e| bad(e.to_string())))
                .collect::<Result<Vec<_>>>()?
        };
        cache.insert(key, sorou);
    }
    Ok(())
}

pub fn save_cache(cache: &SorouCache, path: &Path) -> Result<()> {
    write_atomic(path, &render_cache(cache))
}

pub fn load_cache(path: &Path) -> Result<SorouCache> {
    let cache = SorouCache::new();
    parse_cache_into(&fs::read_to_string(path)?, &cache)?;
    Ok(cache)
}

fn check_statistics(r: &TypeRecord) -> Result<()> {
    if r.parities.is_empty() || r.heights.is_empty() || r.relative_orders.is_empty() {
        return Err(Error::MissingStatistics(r.ty.to_string()));
    }
    Ok(())
}

pub const CSV_HEADER: &str =
    "Weight, Top Prime, Relative Order, Weight Partition, Type, Height, Parities, HasEquisigned";

pub fn csv_row(r: &TypeRecord) -> Result<String> {
    check_statistics(r)?;
    let mut partition = r.weight_partition.clone();
    partition.reverse();
    let parities: Vec<String> = r.parities.iter().map(|(a, b)| format!("({a};{b})")).collect();
    Ok(format!(
        "{}, {}, {}, ({}), {}, {}, {}, {}",
        r.weight,
        r.top_prime,
        r.relative_orders.iter().max().unwrap(),
        join(&partition),
        render_type_notation(&r.ty, Notation::Plain),
        join(&r.heights),
        parities.join(";"),
        if r.equisigned { "True" } else { "False" }
    ))
}

pub fn render_csv_report(db: &TypeDatabase) -> Result<String> {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for r in &db.records {
        out += &csv_row(r)?;
        out.push('\n');
    }
    Ok(out)
}

pub fn write_csv_report(db: &TypeDatabase, path: &Path) -> Result<()> {
    write_atomic(path, &render_csv_report(db)?)
}

fn latex_partition(r: &TypeRecord) -> String {
    let p = &r.weight_partition;
    let ones = p.iter().take_while(|&&x| x == 1).count();
    if r.top_prime >= 11 && ones >= 3 {
        let mut parts = vec!["1".to_string(), "\\ldots".into(), "1".into()];
        parts.extend(p[ones..].iter().map(usize::to_string));
        format!("({})", parts.join(","))
    } else {
        format!("({})", p.iter().map(usize::to_string).collect::<Vec<_>>().join(","))
    }
}

pub fn render_latex_report(db: &TypeDatabase) -> Result<String> {
    let mut out = String::new();
    out += "\\begin{longtable}{c|c|c|c|c|l}\n";
    out += "           & Top     & Relative & Weight   &          & Possible\\\\\n";
    out += "Weight & prime & order     & partition & Type & parities  \\\\ \\hline\\hline\n";
    out += "\\endhead\n";
    let mut weights: Vec<usize> = db.records.iter().map(|r| r.weight).collect();
    weights.dedup();
    for (wi, &w) in weights.iter().enumerate() {
        let rows: Vec<&TypeRecord> = db.of_weight(w).collect();
        for (i, r) in rows.iter().enumerate() {
            check_statistics(r)?;
            let weight = if i == 0 { format!("${w}$") } else { String::new() };
            let parities: Vec<String> = r.parities.iter().map(|(a, b)| format!("({a},{b})")).collect();
            let _ = write!(
                out,
                "{weight} & ${}$ & ${}$ & ${}$ & ${}$ & ${}$ \\\\ ",
                r.top_prime,
                r.relative_orders.iter().max().unwrap(),
                latex_partition(r),
                render_type_notation(&r.ty, Notation::Latex),
                parities.join(",\\,")
            );
            out += if i + 1 < rows.len() {
                "\\cline{2-6}\n"
            } else if wi + 1 < weights.len() {
                "\\hline\\hline\n"
            } else {
                "\\hline\n"
            };
        }
    }
    out += "\\end{longtable}\n";
    Ok(out)
}

pub fn write_latex_report(db: &TypeDatabase, path: &Path) -> Result<()> {
    write_atomic(path, &render_latex_report(db)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn db_through(w: usize) -> (TypeDatabase, SorouCache) {
        let cache = SorouCache::new();
        let mut db = TypeDatabase::empty(true);
        for target in 2..=w {
            generate_next_weight(&mut db, &GenerationConfig::new(target), &cache).unwrap();
        }
        (db, cache)
    }

    #[test]
    fn db_round_trip() {
        let (db, _) = db_through(12);
        assert_eq!(db.records.len(), 21);
        let text = render_db(&db);
        assert!(text.starts_with("minvan-db v1 maxweight=12 collapse=on\n"));
        assert_eq!(parse_db(&text).unwrap(), db);
    }

    #[test]
    fn db_errors_name_the_line() {
        let (db, _) = db_through(8);
        let text = render_db(&db);
        let cut = &text[..text.len() - 9];
        match parse_db(cut) {
            Err(Error::Database { line, .. }) => assert_eq!(line, text.lines().count()),
            other => panic!("{other:?}"),
        }
        assert!(parse_db("minvan-db v2 maxweight=1 collapse=on\n").is_err());
        assert!(parse_db("").is_err());
    }

    #[test]
    fn gap_is_rejected() {
        let cache = SorouCache::new();
        let mut db = TypeDatabase::empty(true);
        let err = generate_next_weight(&mut db, &GenerationConfig::new(4), &cache).unwrap_err();
        assert_eq!(err, Error::IncompleteDatabase { have: 1, need: 3 });
    }

    #[test]
    fn cache_round_trip() {
        let (_, cache) = db_through(9);
        let text = render_cache(&cache);
        let back = SorouCache::new();
        parse_cache_into(&text, &back).unwrap();
        assert_eq!(render_cache(&back), text);
        let empty = SorouCache::new();
        parse_cache_into("", &empty).unwrap();
        assert!(empty.is_empty());
        assert!(parse_cache_into("(R3;1:0)\t1:0+3:x", &SorouCache::new()).is_err());
    }

    #[test]
    fn csv_rows() {
        let (db, _) = db_through(6);
        let csv = render_csv_report(&db).unwrap();
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines[0], CSV_HEADER);
        assert_eq!(lines[1], "2, 2, 2, (1;1), R_2, 1, (1;1), True");
        assert_eq!(lines[4], "6, 5, 30, (2;1;1;1;1), (R_5:R_3), 1, (4;2), False");
    }

    #[test]
    fn latex_report_layout() {
        let (db, _) = db_through(12);
        let tex = render_latex_report(&db).unwrap();
        assert!(tex.contains("$6$ & $5$ & $30$ & $(1,1,1,1,2)$ & $(R_5:R_3)$ & $(4,2)$ \\\\ \\hline\\hline"));
        assert!(tex.contains("& $11$ & $66$ & $(1,\\ldots,1,2)$ & $(R_{11}:R_3)$ & $(10,2)$"));
        assert!(tex.contains("$(R_7:(R_5:R_3))$ & $(10,1),\\,(8,3)$"));
    }
}
