//! Report envelope and output formats.

use std::io::Write;

use serde::Serialize;
use serde_json::Value;

pub const TOOL: &str = "fibra";
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    /// Pretty-printed JSON.
    Json,
    /// Tab-separated rows with a header line.
    Tabular,
}

/// Flat rows for `--format tabular`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Table {
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(header: &[&str]) -> Self {
        Table {
            header: header.iter().map(|s| s.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<String>) {
        debug_assert_eq!(row.len(), self.header.len());
        self.rows.push(row);
    }

    fn write(&self, out: &mut dyn Write) -> std::io::Result<()> {
        writeln!(out, "{}", self.header.join("\t"))?;
        for r in &self.rows {
            writeln!(out, "{}", r.join("\t"))?;
        }
        Ok(())
    }
}

/// What a command found, and how bad it is.
#[derive(Debug)]
pub struct Outcome {
    pub tag: &'static str,
    pub seed: Option<u64>,
    pub body: Value,
    pub table: Table,
    /// A guaranteed statement failed.
    pub falsified: bool,
    /// An estimate that rests on an unverified hypothesis failed.
    pub estimate_failed: bool,
    /// Something could not be decided.
    pub inconclusive: bool,
}

impl Outcome {
    pub fn new(tag: &'static str, body: impl Serialize, table: Table) -> Self {
        Outcome {
            tag,
            seed: None,
            body: serde_json::to_value(body).expect("report serializes"),
            table,
            falsified: false,
            estimate_failed: false,
            inconclusive: false,
        }
    }

    pub fn exit_code(&self, strict: bool) -> i32 {
        if self.falsified || (strict && self.estimate_failed) {
            2
        } else if strict && self.inconclusive {
            3
        } else {
            0
        }
    }
}

#[derive(Serialize)]
struct Envelope<'a> {
    tool: &'static str,
    version: &'static str,
    command_line: &'a [String],
    seed: Option<u64>,
    tag: &'static str,
    report: &'a Value,
}

pub fn emit(outcome: &Outcome, argv: &[String], format: Format, out: &mut dyn Write) -> std::io::Result<()> {
    match format {
        Format::Json => {
            let env = Envelope {
                tool: TOOL,
                version: VERSION,
                command_line: argv,
                seed: outcome.seed,
                tag: outcome.tag,
                report: &outcome.body,
            };
            serde_json::to_writer_pretty(&mut *out, &env)?;
            writeln!(out)
        }
        Format::Tabular => {
            writeln!(
                out,
                "# {TOOL} {VERSION} | {} | tag={} | seed={}",
                argv.join(" "),
                outcome.tag,
                outcome.seed.map_or("none".to_string(), |s| s.to_string())
            )?;
            outcome.table.write(out)
        }
    }
}
