use std::io::BufRead;

use thiserror::Error;

use crate::graph::{parse_graph6, Graph, Graph6Error};

#[derive(Debug, Error)]
pub enum StreamError {
    #[error("line {line}: {source}")]
    Parse { line: u64, source: Graph6Error },
    #[error("line {line}: {source}")]
    Io { line: u64, source: std::io::Error },
}

impl StreamError {
    pub fn line(&self) -> u64 {
        match self {
            StreamError::Parse { line, .. } | StreamError::Io { line, .. } => *line,
        }
    }
}

/// What to do with a line that does not parse.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OnError {
    /// Yield the error and end the stream.
    #[default]
    FailFast,
    /// Count the line and carry on.
    Skip,
}

/// Newline-delimited graph6 reader; blank lines are ignored.
pub struct Graph6Stream<R> {
    reader: R,
    on_error: OnError,
    line: u64,
    skipped: u64,
    done: bool,
    buf: String,
}

pub fn read_graph6_stream<R: BufRead>(reader: R, on_error: OnError) -> Graph6Stream<R> {
    Graph6Stream {
        reader,
        on_error,
        line: 0,
        skipped: 0,
        done: false,
        buf: String::new(),
    }
}

impl<R> Graph6Stream<R> {
    /// Lines consumed so far, including blank and skipped ones.
    pub fn lines_read(&self) -> u64 {
        self.line
    }

    pub fn skipped(&self) -> u64 {
        self.skipped
    }
}

impl<R: BufRead> Iterator for Graph6Stream<R> {
    type Item = Result<Graph, StreamError>;

    fn next(&mut self) -> Option<Self::Item> {
        while !self.done {
            self.buf.clear();
            let read = self.reader.read_line(&mut self.buf);
            self.line += 1;
            match read {
                Ok(0) => {
                    self.line -= 1;
                    self.done = true;
                }
                Ok(_) => {
                    let text = self.buf.trim_end_matches(['\n', '\r']);
                    if text.is_empty() {
                        continue;
                    }
                    match parse_graph6(text) {
                        Ok(g) => return Some(Ok(g)),
                        Err(source) if self.on_error == OnError::FailFast => {
                            self.done = true;
                            return Some(Err(StreamError::Parse {
                                line: self.line,
                                source,
                            }));
                        }
                        Err(_) => self.skipped += 1,
                    }
                }
                Err(source) => {
                    self.done = true;
                    return Some(Err(StreamError::Io {
                        line: self.line,
                        source,
                    }));
                }
            }
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse_all(text: &str, on_error: OnError) -> Vec<Result<String, u64>> {
        read_graph6_stream(text.as_bytes(), on_error)
            .map(|r| r.map(|g| g.to_string()).map_err(|e| e.line()))
            .collect()
    }

    #[test]
    fn reads_in_order() {
        assert_eq!(
            parse_all("@\nA_\n", OnError::FailFast),
            vec![Ok("@".to_string()), Ok("A_".to_string())]
        );
        assert!(parse_all("", OnError::FailFast).is_empty());
        assert_eq!(
            parse_all("A_\r\n\n", OnError::FailFast),
            vec![Ok("A_".into())]
        );
    }

    #[test]
    fn errors_name_the_line() {
        assert_eq!(parse_all("A~\n@\n", OnError::FailFast), vec![Err(1)]);
        assert_eq!(
            parse_all("@\n\nA!\n@\n", OnError::FailFast),
            vec![Ok("@".into()), Err(3)]
        );
        let mut s = read_graph6_stream("A!\n@\nB\n".as_bytes(), OnError::Skip);
        assert_eq!(s.next().unwrap().unwrap().to_string(), "@");
        assert!(s.next().is_none());
        assert_eq!(s.skipped(), 2);
        assert_eq!(s.lines_read(), 3);
    }
}
