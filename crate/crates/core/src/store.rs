//! Small persistence helpers shared by the stores.

use std::io::Write;
use std::path::Path;

use serde::de::DeserializeOwned;
use serde::Serialize;

/// Writes through a temporary file in the same directory, then renames.
pub fn write_atomic(path: &Path, bytes: &[u8]) -> std::io::Result<()> {
    let dir = match path.parent() {
        Some(d) if !d.as_os_str().is_empty() => d,
        _ => Path::new("."),
    };
    std::fs::create_dir_all(dir)?;
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    tmp.write_all(bytes)?;
    tmp.flush()?;
    tmp.persist(path).map_err(|e| e.error)?;
    Ok(())
}

pub fn to_jsonl<T: Serialize>(items: &[T]) -> String {
    let mut out = String::new();
    for it in items {
        out.push_str(&serde_json::to_string(it).expect("record serializes"));
        out.push('\n');
    }
    out
}

/// Parses one record per non-blank line; errors carry the 1-based line number.
pub fn from_jsonl<T: DeserializeOwned>(text: &str) -> Result<Vec<T>, (usize, serde_json::Error)> {
    let mut out = Vec::new();
    for (n, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        out.push(serde_json::from_str(line).map_err(|e| (n + 1, e))?);
    }
    Ok(out)
}

#[derive(Debug, thiserror::Error)]
pub enum StoreError {
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("{path}:{line}: {message}")]
    Format { path: String, line: usize, message: String },
    #[error("{path}: format version {found} is newer than supported version {supported}")]
    Version { path: String, found: u32, supported: u32 },
}

#[derive(Serialize, serde::Deserialize)]
struct Header {
    format_version: u32,
    kind: String,
}

/// JSONL with a leading `{"format_version", "kind"}` header line.
pub fn save_versioned<T: Serialize>(path: &Path, kind: &str, version: u32, items: &[T]) -> Result<(), StoreError> {
    let mut text = serde_json::to_string(&Header {
        format_version: version,
        kind: kind.to_string(),
    })
    .expect("header serializes");
    text.push('\n');
    text.push_str(&to_jsonl(items));
    write_atomic(path, text.as_bytes()).map_err(|source| StoreError::Io {
        path: path.display().to_string(),
        source,
    })
}

pub fn load_versioned<T: DeserializeOwned>(path: &Path, kind: &str, supported: u32) -> Result<Vec<T>, StoreError> {
    let p = path.display().to_string();
    let text = std::fs::read_to_string(path).map_err(|source| StoreError::Io { path: p.clone(), source })?;
    let mut lines = text.splitn(2, '\n');
    let first = lines.next().unwrap_or("");
    let header: Header = serde_json::from_str(first).map_err(|e| StoreError::Format {
        path: p.clone(),
        line: 1,
        message: format!("bad header: {}", e),
    })?;
    if header.kind != kind {
        return Err(StoreError::Format {
            path: p,
            line: 1,
            message: format!("expected a {} store, found {}", kind, header.kind),
        });
    }
    if header.format_version > supported {
        return Err(StoreError::Version {
            path: p,
            found: header.format_version,
            supported,
        });
    }
    from_jsonl(lines.next().unwrap_or("")).map_err(|(line, e)| StoreError::Format {
        path: p,
        line: line + 1,
        message: e.to_string(),
    })
}
