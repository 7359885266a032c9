//! Command-line front end: census rendering, b-file interchange, and the
//! oracle / reference-file checks.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, ValueEnum};
use num_bigint::{BigInt, BigUint};
use serde_json::{Map, Number, Value};

use crate::enumerator::{census, CensusRow, CensusTable};
use crate::error::{Error, Result};
use crate::oracle::{oracle_census_up_to, OracleCensus, FEASIBILITY_LIMIT};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SeriesSelector {
    Centered,
    Bicentered,
    Total,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Csv,
    Json,
    Bfile,
}

/// Count centered and bicentered k-valent trees (alkanes for k = 4).
#[derive(Debug, Clone, PartialEq, Eq, Parser)]
#[command(name = "kvalent", version)]
pub struct RunConfig {
    /// Maximum node degree.
    #[arg(long, default_value_t = 4)]
    pub k: usize,

    /// Largest node count to tabulate.
    #[arg(long = "max-n", default_value_t = 22)]
    pub max_n: usize,

    #[arg(long, value_enum, default_value_t = SeriesSelector::All)]
    pub series: SeriesSelector,

    #[arg(long, value_enum, default_value_t = Format::Table)]
    pub format: Format,

    /// Index printed for n = 1 in b-file output.
    #[arg(long, default_value_t = 1, allow_negative_numbers = true)]
    pub offset: i64,

    /// Add per-diameter counts to table, csv and json output.
    #[arg(long)]
    pub breakdown: bool,

    /// Cross-check rows 1..=N against brute-force generation.
    #[arg(long = "verify-oracle", value_name = "N")]
    pub verify_oracle: Option<usize>,

    /// Compare the selected series with a reference b-file.
    #[arg(long, value_name = "PATH")]
    pub compare: Option<PathBuf>,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            k: 4,
            max_n: 22,
            series: SeriesSelector::All,
            format: Format::Table,
            offset: 1,
            breakdown: false,
            verify_oracle: None,
            compare: None,
        }
    }
}

impl RunConfig {
    pub fn validate(&self) -> std::result::Result<(), String> {
        if self.k < 2 {
            return Err(format!("--k must be at least 2, got {}", self.k));
        }
        if self.max_n < 1 {
            return Err("--max-n must be at least 1".into());
        }
        if self.format == Format::Bfile && self.series == SeriesSelector::All {
            return Err("--format bfile needs a single --series (centered, bicentered or total)".into());
        }
        if self.compare.is_some() && self.series == SeriesSelector::All {
            return Err("--compare needs a single --series (centered, bicentered or total)".into());
        }
        if let Some(n) = self.verify_oracle {
            if n == 0 || n > FEASIBILITY_LIMIT {
                return Err(format!("--verify-oracle must be in 1..={FEASIBILITY_LIMIT}, got {n}"));
            }
            if n > self.max_n {
                return Err(format!("--verify-oracle {n} exceeds --max-n {}", self.max_n));
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExitStatus {
    Success = 0,
    Mismatch = 1,
    Usage = 2,
    Io = 3,
}

impl ExitStatus {
    pub fn code(self) -> i32 {
        self as i32
    }
}

/// What one invocation produced. `stdout` carries the rendered census only;
/// check reports and diagnostics go to `stderr`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunOutcome {
    pub status: ExitStatus,
    pub stdout: String,
    pub stderr: String,
}

impl RunOutcome {
    fn failed(status: ExitStatus, message: String) -> Self {
        RunOutcome {
            status,
            stdout: String::new(),
            stderr: message + "\n",
        }
    }
}

pub fn run(config: &RunConfig) -> RunOutcome {
    if let Err(msg) = config.validate() {
        return RunOutcome::failed(ExitStatus::Usage, format!("error: {msg}"));
    }

    let needs_breakdown = config.breakdown || config.verify_oracle.is_some();
    let full = match census(config.k, config.max_n, needs_breakdown) {
        Ok(t) => t,
        Err(e) => return RunOutcome::failed(ExitStatus::Mismatch, format!("error: {e}")),
    };
    let shown = if config.breakdown { full.clone() } else { full.without_breakdown() };
    let stdout = match render(&shown, config.format, config.series, config.offset) {
        Ok(s) => s,
        Err(e) => return RunOutcome::failed(ExitStatus::Usage, format!("error: {e}")),
    };

    let mut stderr = String::new();
    let mut status = ExitStatus::Success;

    if let Some(upto) = config.verify_oracle {
        match oracle_census_up_to(upto, Some(config.k)) {
            Ok(oracle) => {
                let report = verify_rows(&full, &oracle);
                stderr.push_str(&report.text);
                if report.status() != ExitStatus::Success {
                    status = report.status();
                }
            }
            Err(e) => return RunOutcome::failed(ExitStatus::Usage, format!("error: {e}")),
        }
    }

    if let Some(path) = &config.compare {
        let bytes = match std::fs::read(path) {
            Ok(b) => b,
            Err(e) => {
                return RunOutcome::failed(ExitStatus::Io, format!("error: {}: {e}", path.display()))
            }
        };
        let reference = match parse_bfile(&bytes) {
            Ok(b) => b,
            Err(e) => {
                return RunOutcome::failed(ExitStatus::Io, format!("error: {}: {e}", path.display()))
            }
        };
        let report = compare_bfile(&full, config.series, config.offset, &reference);
        stderr.push_str(&report.text);
        if report.status() != ExitStatus::Success {
            status = report.status();
        }
    }

    RunOutcome {
        status,
        stdout,
        stderr,
    }
}

/// Per-row outcome of a check, rendered as text.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckReport {
    pub text: String,
    pub checked: usize,
    pub failures: usize,
}

impl CheckReport {
    /// Any failed row makes the whole run fail.
    pub fn status(&self) -> ExitStatus {
        if self.failures == 0 {
            ExitStatus::Success
        } else {
            ExitStatus::Mismatch
        }
    }
}

/// Compares census rows `1..=oracle.len()` (including the diameter
/// breakdown, when the table has one) against brute-force counts.
pub fn verify_rows(table: &CensusTable, oracle: &[OracleCensus]) -> CheckReport {
    let mut text = String::new();
    let mut failures = 0;
    for (i, expected) in oracle.iter().enumerate() {
        let n = i + 1;
        let Some(row) = table.row(n) else {
            failures += 1;
            let _ = writeln!(text, "verify n={n}: FAIL row missing from census");
            continue;
        };
        let mut diffs = Vec::new();
        let field = |name: &str, got: &BigUint, want: u64, diffs: &mut Vec<String>| {
            if *got != BigUint::from(want) {
                diffs.push(format!("{name} enumerator={got} oracle={want}"));
            }
        };
        field("centered", &row.centered, expected.centered, &mut diffs);
        field("bicentered", &row.bicentered, expected.bicentered, &mut diffs);
        if let Some(map) = &row.by_diameter {
            let diameters: std::collections::BTreeSet<usize> =
                map.keys().chain(expected.per_diameter.keys()).copied().collect();
            for d in diameters {
                let got = map.get(&d).cloned().unwrap_or_default();
                let want = expected.per_diameter.get(&d).copied().unwrap_or(0);
                field(&format!("diameter {d}"), &got, want, &mut diffs);
            }
        }
        if diffs.is_empty() {
            let _ = writeln!(
                text,
                "verify n={n}: PASS centered={} bicentered={}",
                row.centered, row.bicentered
            );
        } else {
            failures += 1;
            let _ = writeln!(text, "verify n={n}: FAIL {}", diffs.join("; "));
        }
    }
    let _ = writeln!(
        text,
        "verify: {} of {} rows passed",
        oracle.len() - failures,
        oracle.len()
    );
    CheckReport {
        text,
        checked: oracle.len(),
        failures,
    }
}

/// Compares one census column against a reference b-file. Reference indices
/// outside the computed range are reported as skipped; a file that overlaps
/// the census nowhere counts as a failure.
pub fn compare_bfile(
    table: &CensusTable,
    series: SeriesSelector,
    offset: i64,
    reference: &BFile,
) -> CheckReport {
    let mut text = String::new();
    let mut checked = 0;
    let mut mismatched = 0;
    let mut skipped = 0;
    for (index, want) in &reference.entries {
        let row = usize::try_from(index - offset + 1).ok().and_then(|n| table.row(n));
        let Some(got) = row.and_then(|r| column(r, series)) else {
            skipped += 1;
            continue;
        };
        checked += 1;
        let got = BigInt::from(got.clone());
        if &got == want {
            let _ = writeln!(text, "compare {index}: match {got}");
        } else {
            mismatched += 1;
            let _ = writeln!(text, "compare {index}: MISMATCH computed={got} reference={want}");
        }
    }
    let _ = writeln!(
        text,
        "compare: {} matched, {mismatched} mismatched, {skipped} outside range",
        checked - mismatched
    );
    let mut failures = mismatched;
    if checked == 0 {
        failures += 1;
        let _ = writeln!(text, "compare: FAIL no reference index falls inside the computed range");
    }
    CheckReport {
        text,
        checked,
        failures,
    }
}

fn column(row: &CensusRow, series: SeriesSelector) -> Option<&BigUint> {
    match series {
        SeriesSelector::Centered => Some(&row.centered),
        SeriesSelector::Bicentered => Some(&row.bicentered),
        SeriesSelector::Total => Some(&row.total),
        SeriesSelector::All => None,
    }
}

/// An OEIS-style b-file: `(index, value)` pairs with consecutive indices.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct BFile {
    pub entries: Vec<(i64, BigInt)>,
}

impl BFile {
    pub fn from_column(table: &CensusTable, series: SeriesSelector, offset: i64) -> Result<Self> {
        let entries = table
            .rows()
            .iter()
            .enumerate()
            .map(|(i, row)| {
                let value = column(row, series).ok_or_else(|| {
                    Error::InvalidArgument("a b-file carries a single series".into())
                })?;
                Ok((offset + i as i64, BigInt::from(value.clone())))
            })
            .collect::<Result<_>>()?;
        Ok(BFile { entries })
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for (i, v) in &self.entries {
            let _ = writeln!(out, "{i} {v}");
        }
        out
    }
}

pub fn parse_bfile(text: &[u8]) -> Result<BFile> {
    let mut entries: Vec<(i64, BigInt)> = Vec::new();
    for (i, raw) in text.split(|&b| b == b'\n').enumerate() {
        let line_no = i + 1;
        let line = std::str::from_utf8(raw).map_err(|_| Error::Parse {
            line: line_no,
            message: "not valid text".into(),
        })?;
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut fields = line.split_whitespace();
        let (Some(index), Some(value), None) = (fields.next(), fields.next(), fields.next()) else {
            return Err(Error::Parse {
                line: line_no,
                message: format!("expected \"<index> <value>\", found {line:?}"),
            });
        };
        let index: i64 = index.parse().map_err(|_| Error::Parse {
            line: line_no,
            message: format!("bad index {index:?}"),
        })?;
        let value: BigInt = value.parse().map_err(|_| Error::Parse {
            line: line_no,
            message: format!("bad value {value:?}"),
        })?;
        if let Some((prev, _)) = entries.last() {
            if index != prev + 1 {
                return Err(Error::Structure {
                    line: line_no,
                    expected: (prev + 1).to_string(),
                    found: index.to_string(),
                });
            }
        }
        entries.push((index, value));
    }
    Ok(BFile { entries })
}

const COLUMNS: [&str; 4] = ["n", "centered", "bicentered", "total"];

/// Renders a census. Table, csv and json always carry all three count
/// columns; `series` picks the column for bfile output.
pub fn render(
    table: &CensusTable,
    format: Format,
    series: SeriesSelector,
    offset: i64,
) -> Result<String> {
    match format {
        Format::Table => Ok(render_delimited(table, " ")),
        Format::Csv => Ok(render_delimited(table, ",")),
        Format::Json => Ok(render_json(table)),
        Format::Bfile => Ok(BFile::from_column(table, series, offset)?.render()),
    }
}

fn render_delimited(table: &CensusTable, sep: &str) -> String {
    let diameters = 0..table.max_n();
    let mut header: Vec<String> = COLUMNS.iter().map(|c| c.to_string()).collect();
    if table.has_breakdown() {
        header.extend(diameters.clone().map(|d| format!("d{d}")));
    }
    let mut out = header.join(sep);
    out.push('\n');
    for row in table.rows() {
        let mut fields = vec![
            row.n.to_string(),
            row.centered.to_string(),
            row.bicentered.to_string(),
            row.total.to_string(),
        ];
        if let Some(map) = &row.by_diameter {
            fields.extend(
                diameters
                    .clone()
                    .map(|d| map.get(&d).map_or_else(|| "0".to_string(), ToString::to_string)),
            );
        }
        out.push_str(&fields.join(sep));
        out.push('\n');
    }
    out
}

fn number(v: &BigUint) -> Value {
    Value::Number(v.to_string().parse::<Number>().expect("decimal integers are JSON numbers"))
}

fn render_json(table: &CensusTable) -> String {
    let rows: Vec<Value> = table
        .rows()
        .iter()
        .map(|row| {
            let mut obj = Map::new();
            obj.insert("n".into(), Value::from(row.n));
            obj.insert("centered".into(), number(&row.centered));
            obj.insert("bicentered".into(), number(&row.bicentered));
            obj.insert("total".into(), number(&row.total));
            if let Some(map) = &row.by_diameter {
                let by_d: Map<String, Value> =
                    map.iter().map(|(d, c)| (d.to_string(), number(c))).collect();
                obj.insert("by_diameter".into(), Value::Object(by_d));
            }
            Value::Object(obj)
        })
        .collect();
    let mut out = serde_json::to_string_pretty(&Value::Array(rows)).expect("plain JSON values");
    out.push('\n');
    out
}

/// Reads back the json rendering of a census with valency `k`.
pub fn parse_json(text: &str, k: usize) -> Result<CensusTable> {
    let bad = |msg: String| Error::Parse { line: 0, message: msg };
    let value: Value = serde_json::from_str(text).map_err(|e| Error::Parse {
        line: e.line(),
        message: e.to_string(),
    })?;
    let Value::Array(items) = value else {
        return Err(bad("expected an array of rows".into()));
    };
    let count = |v: Option<&Value>, what: &str| -> Result<BigUint> {
        match v {
            Some(Value::Number(num)) => num
                .to_string()
                .parse()
                .map_err(|_| bad(format!("{what}: {num} is not a nonnegative integer"))),
            _ => Err(bad(format!("missing or non-numeric {what}"))),
        }
    };
    let rows = items
        .iter()
        .map(|item| {
            let Value::Object(obj) = item else {
                return Err(bad("row is not an object".into()));
            };
            let n = usize::try_from(count(obj.get("n"), "n")?)
                .map_err(|_| bad("n out of range".into()))?;
            let by_diameter = match obj.get("by_diameter") {
                None => None,
                Some(Value::Object(map)) => Some(
                    map.iter()
                        .map(|(d, c)| {
                            let d: usize =
                                d.parse().map_err(|_| bad(format!("bad diameter key {d:?}")))?;
                            Ok((d, count(Some(c), "diameter count")?))
                        })
                        .collect::<Result<BTreeMap<_, _>>>()?,
                ),
                Some(_) => return Err(bad("by_diameter is not an object".into())),
            };
            Ok(CensusRow {
                n,
                centered: count(obj.get("centered"), "centered")?,
                bicentered: count(obj.get("bicentered"), "bicentered")?,
                total: count(obj.get("total"), "total")?,
                by_diameter,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    CensusTable::from_rows(k, rows)
}
