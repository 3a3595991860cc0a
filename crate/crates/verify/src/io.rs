//! graph6 corpus files.

use std::fs::File;
use std::io::{BufRead, BufReader, Read};
use std::path::Path;

use roman_core::enumeration::{InstanceStream, Source};
use roman_core::{graph6, Graph};

use crate::error::{Result, VerifyError};

/// Reads every graph in a graph6 file. Blank lines and lines starting with
/// `>` (headers) are skipped; any other malformed line is an error that
/// names the line.
pub fn read_graph6_stream(path: &Path) -> Result<InstanceStream> {
    let file = File::open(path).map_err(|source| VerifyError::Io { path: path.to_owned(), source })?;
    let graphs = read_graph6(file, &path.display().to_string())?;
    Ok(stream_of(graphs))
}

/// Like [`read_graph6_stream`] over any reader; `name` is used in errors.
pub fn read_graph6<R: Read>(reader: R, name: &str) -> Result<Vec<Graph>> {
    let mut graphs = Vec::new();
    for (i, line) in BufReader::new(reader).lines().enumerate() {
        let line = line.map_err(|source| VerifyError::Io { path: name.into(), source })?;
        let text = line.trim();
        if text.is_empty() || (text.starts_with('>') && !text.starts_with(graph6::HEADER)) {
            continue;
        }
        let g = graph6::parse(text).map_err(|source| VerifyError::Parse { name: name.to_owned(), line: i + 1, source })?;
        graphs.push(g);
    }
    Ok(graphs)
}

pub fn stream_of(graphs: Vec<Graph>) -> InstanceStream {
    let lo = graphs.iter().map(Graph::order).min().unwrap_or(0);
    let hi = graphs.iter().map(Graph::order).max().unwrap_or(0);
    InstanceStream::new(Source::File, lo..=hi, graphs)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn skips_headers_and_blanks() {
        let text = ">>graph6<<Bg\n\n> comment\nBw\n";
        let graphs = read_graph6(text.as_bytes(), "mem").unwrap();
        assert_eq!(graphs.len(), 2);
    }

    #[test]
    fn error_names_line() {
        let err = read_graph6("Bg\nB!\n".as_bytes(), "mem").unwrap_err();
        assert!(matches!(err, VerifyError::Parse { line: 2, .. }));
        assert!(err.to_string().starts_with("mem:2:"));
    }
}
