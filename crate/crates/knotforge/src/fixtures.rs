//! The bundled corpus of signed Gauss codes.

use std::path::{Path, PathBuf};

use crate::codec::{parse_gauss, CodecError, SignedGaussCode};

pub const FIXTURE_ENV: &str = "KNOTFORGE_FIXTURES";

#[derive(Debug, Clone)]
pub struct Fixture {
    pub name: String,
    /// Whether the knot is prime (metadata, not computed).
    pub prime: bool,
    pub code: SignedGaussCode,
}

#[derive(Debug, thiserror::Error)]
pub enum FixtureError {
    #[error("cannot read {path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{path}:{line}: {message}")]
    Format { path: PathBuf, line: usize, message: String },
    #[error("{path}:{line}: {source}")]
    Code { path: PathBuf, line: usize, source: CodecError },
}

/// `$KNOTFORGE_FIXTURES` if set, else the directory shipped with the crate.
pub fn fixture_dir() -> PathBuf {
    match std::env::var_os(FIXTURE_ENV) {
        Some(dir) => PathBuf::from(dir),
        None => PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures"),
    }
}

/// Parse `name;prime;code` lines; `#` starts a comment line.
pub fn parse_fixture_file(path: &Path, text: &str) -> Result<Vec<Fixture>, FixtureError> {
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split(';').collect();
        let format =
            |message: &str| FixtureError::Format { path: path.to_path_buf(), line: i + 1, message: message.into() };
        if fields.len() != 3 {
            return Err(format("expected name;prime;code"));
        }
        let prime = match fields[1].trim() {
            "true" => true,
            "false" => false,
            _ => return Err(format("prime must be true or false")),
        };
        let code = parse_gauss(fields[2]).map_err(|source| FixtureError::Code {
            path: path.to_path_buf(),
            line: i + 1,
            source,
        })?;
        out.push(Fixture { name: fields[0].trim().to_string(), prime, code });
    }
    Ok(out)
}

/// Every `*.txt` file of the directory, in file name order.
pub fn load_fixtures(dir: &Path) -> Result<Vec<Fixture>, FixtureError> {
    let io = |source| FixtureError::Io { path: dir.to_path_buf(), source };
    let mut files: Vec<PathBuf> = std::fs::read_dir(dir)
        .map_err(io)?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "txt"))
        .collect();
    files.sort();
    let mut out = Vec::new();
    for f in files {
        let text = std::fs::read_to_string(&f).map_err(|source| FixtureError::Io { path: f.clone(), source })?;
        out.extend(parse_fixture_file(&f, &text)?);
    }
    Ok(out)
}

/// The corpus from [`fixture_dir`].
pub fn default_fixtures() -> Result<Vec<Fixture>, FixtureError> {
    load_fixtures(&fixture_dir())
}
