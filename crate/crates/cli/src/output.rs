//! Output sinks and number formatting.
//!
//! Floats are written with 17 significant digits in both CSV and JSON so
//! every value round-trips exactly.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};

use serde::{Serialize, Serializer};
use serde_json::value::RawValue;

use crate::error::{CliError, Result};

pub fn float(x: f64) -> String {
    if x == 0.0 {
        // no negative zero in output
        return format!("{:.16e}", 0.0);
    }
    format!("{x:.16e}")
}

/// A float that serializes as a JSON number with 17 significant digits.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Num(pub f64);

impl Serialize for Num {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        if !self.0.is_finite() {
            return serializer.serialize_none();
        }
        let raw = RawValue::from_string(float(self.0)).map_err(serde::ser::Error::custom)?;
        raw.serialize(serializer)
    }
}

pub struct Sink {
    path: Option<PathBuf>,
    out: Box<dyn Write>,
}

impl Sink {
    pub fn open(path: Option<&Path>) -> Result<Self> {
        let out: Box<dyn Write> = match path {
            Some(p) => Box::new(BufWriter::new(
                File::create(p).map_err(|e| CliError::io(p, e))?,
            )),
            None => Box::new(BufWriter::new(io::stdout().lock())),
        };
        Ok(Sink {
            path: path.map(Path::to_path_buf),
            out,
        })
    }

    fn err(&self, e: io::Error) -> CliError {
        CliError::io(self.path.clone().unwrap_or_else(|| "<stdout>".into()), e)
    }

    pub fn line(&mut self, text: &str) -> Result<()> {
        writeln!(self.out, "{text}").map_err(|e| self.err(e))
    }

    pub fn json<T: Serialize>(&mut self, value: &T) -> Result<()> {
        serde_json::to_writer_pretty(&mut self.out, value)
            .map_err(|e| self.err(io::Error::other(e)))?;
        writeln!(self.out).map_err(|e| self.err(e))
    }

    pub fn finish(mut self) -> Result<()> {
        self.out.flush().map_err(|e| self.err(e))
    }
}
