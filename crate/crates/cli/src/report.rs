use std::ffi::OsString;
use std::fmt;
use std::path::Path;

use hdx_core::{Complex2, HdxError, Verdict};
use serde::Serialize;
use serde_json::{Map, Value};
use sha2::{Digest, Sha256};

use crate::args::GlobalFlags;
use crate::{EXIT_CAPACITY, EXIT_USAGE};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    NotApplicable,
    Error,
}

impl From<Verdict> for Status {
    fn from(v: Verdict) -> Self {
        match v {
            Verdict::Pass => Status::Pass,
            Verdict::Fail => Status::Fail,
            Verdict::NotApplicable => Status::NotApplicable,
        }
    }
}

#[derive(Debug)]
pub enum CliError {
    Core(HdxError),
    Io { path: String, message: String },
    Usage(String),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Core(e) => e.fmt(f),
            CliError::Io { path, message } => write!(f, "{path}: {message}"),
            CliError::Usage(m) => f.write_str(m),
        }
    }
}

impl std::error::Error for CliError {}

impl From<HdxError> for CliError {
    fn from(e: HdxError) -> Self {
        CliError::Core(e)
    }
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(e) if e.is_capacity() => EXIT_CAPACITY,
            _ => EXIT_USAGE,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct InputDigest {
    pub path: String,
    pub sha256: String,
}

/// Reads and parses a complex file.
pub fn load(path: &Path) -> Result<(Complex2, InputDigest), CliError> {
    let shown = path.display().to_string();
    let bytes = std::fs::read(path).map_err(|e| CliError::Io {
        path: shown.clone(),
        message: e.to_string(),
    })?;
    let digest = InputDigest {
        path: shown.clone(),
        sha256: format!("{:x}", Sha256::digest(&bytes)),
    };
    let text = String::from_utf8(bytes).map_err(|_| CliError::Io {
        path: shown.clone(),
        message: "not valid UTF-8".into(),
    })?;
    let complex = Complex2::from_json(&text).map_err(|e| CliError::Io {
        path: shown,
        message: e.to_string(),
    })?;
    Ok((complex, digest))
}

#[derive(Serialize)]
struct CommandRecord<'a> {
    argv: &'a [String],
    #[serde(skip_serializing_if = "Option::is_none")]
    flags: Option<Value>,
}

#[derive(Serialize)]
struct Report<'a> {
    command: CommandRecord<'a>,
    inputs: Vec<InputDigest>,
    results: Value,
    status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    error: Option<String>,
}

/// What a command produced, ready to be written to standard output.
pub enum Output {
    Json { text: String, status: Status },
    Text { text: String, status: Status },
}

impl Output {
    pub fn status(&self) -> Status {
        match self {
            Output::Json { status, .. } | Output::Text { status, .. } => *status,
        }
    }

    pub fn render(&self) -> &str {
        match self {
            Output::Json { text, .. } | Output::Text { text, .. } => text,
        }
    }
}

/// The command line as invoked, with the program name normalized to `hdx`.
pub struct Invocation {
    argv: Vec<String>,
}

impl Invocation {
    pub fn new(argv: &[OsString]) -> Self {
        let mut argv: Vec<String> = argv
            .iter()
            .map(|a| a.to_string_lossy().into_owned())
            .collect();
        match argv.first_mut() {
            Some(first) => *first = "hdx".into(),
            None => argv.push("hdx".into()),
        }
        Self { argv }
    }

    pub fn command_line(&self) -> String {
        self.argv.join(" ")
    }

    pub fn report<A: Serialize, R: Serialize>(
        &self,
        global: &GlobalFlags,
        args: &A,
        inputs: Vec<InputDigest>,
        results: R,
        status: Status,
    ) -> Result<Output, CliError> {
        let mut flags = Map::new();
        for v in [to_value(global)?, to_value(args)?] {
            if let Value::Object(m) = v {
                flags.extend(m);
            }
        }
        let report = Report {
            command: CommandRecord {
                argv: &self.argv,
                flags: Some(Value::Object(flags)),
            },
            inputs,
            results: to_value(&results)?,
            status,
            error: None,
        };
        Ok(Output::Json {
            text: render_json(&report)?,
            status,
        })
    }

    pub fn error_report(&self, e: &CliError) -> String {
        let report = Report {
            command: CommandRecord {
                argv: &self.argv,
                flags: None,
            },
            inputs: Vec::new(),
            results: Value::Null,
            status: Status::Error,
            error: Some(e.to_string()),
        };
        render_json(&report).unwrap_or_default()
    }
}

fn to_value<T: Serialize + ?Sized>(v: &T) -> Result<Value, CliError> {
    serde_json::to_value(v).map_err(|e| CliError::Usage(format!("cannot encode report: {e}")))
}

fn render_json<T: Serialize>(v: &T) -> Result<String, CliError> {
    let mut text = serde_json::to_string_pretty(v)
        .map_err(|e| CliError::Usage(format!("cannot encode report: {e}")))?;
    text.push('\n');
    Ok(text)
}
