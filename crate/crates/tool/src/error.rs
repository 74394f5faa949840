use thiserror::Error;

#[derive(Debug, Error)]
pub enum ToolError {
    #[error("{file}:{line}: {message}")]
    Parse {
        file: String,
        line: usize,
        message: String,
    },
    #[error("{file}: missing section [{section}]")]
    MissingSection { file: String, section: &'static str },
    #[error("cannot read {file}: {source}")]
    Io {
        file: String,
        #[source]
        source: std::io::Error,
    },
    #[error("unknown example `{0}`; expected 3.1..3.5, 4.1..4.5 or appendix")]
    UnknownExample(String),
    #[error(transparent)]
    Core(#[from] jacobi_core::Error),
}
