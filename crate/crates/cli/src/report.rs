use std::io::Write;

use serde::Serialize;
use serde_json::{Map, Value};

use crate::error::{CliError, CliResult};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum Format {
    #[default]
    Tsv,
    Jsonl,
}

/// A result row with a fixed TSV layout and a JSON encoding of the same
/// fields.
pub trait Record: Serialize {
    fn header() -> &'static [&'static str];
    fn cells(&self) -> Vec<String>;
}

pub(crate) fn opt<T: ToString>(x: &Option<T>) -> String {
    x.as_ref().map_or_else(|| "-".to_string(), T::to_string)
}

/// Writes `rows` as a TSV table with header, or as one JSON object per line
/// tagged with the command name.
pub fn emit<R: Record, W: Write + ?Sized>(out: &mut W, format: Format, command: &str, rows: &[R]) -> CliResult<()> {
    match format {
        Format::Tsv => {
            writeln!(out, "{}", R::header().join("\t"))?;
            for r in rows {
                let cells = r.cells();
                debug_assert_eq!(cells.len(), R::header().len());
                writeln!(out, "{}", cells.join("\t"))?;
            }
        }
        Format::Jsonl => {
            for r in rows {
                let mut obj = Map::new();
                obj.insert("command".into(), Value::String(command.into()));
                match serde_json::to_value(r)? {
                    Value::Object(fields) => obj.extend(fields),
                    other => return Err(CliError::Usage(format!("record is not an object: {other}"))),
                }
                writeln!(out, "{}", Value::Object(obj))?;
            }
        }
    }
    Ok(())
}
