use thiserror::Error;

#[derive(Debug, Error)]
pub enum ToolError {
    #[error(transparent)]
    Core(#[from] sbf_core::Error),

    #[error("io: {0}")]
    Io(#[from] std::io::Error),

    #[error("json: {0}")]
    Json(#[from] serde_json::Error),

    #[error("csv: {0}")]
    Csv(#[from] csv::Error),

    #[error("invalid {what}: {detail}")]
    Parse { what: &'static str, detail: String },

    #[error("{0}")]
    Usage(String),

    #[error("cannot plot an empty row list")]
    EmptyPlot,
}

impl ToolError {
    pub(crate) fn parse(what: &'static str, detail: impl Into<String>) -> Self {
        ToolError::Parse {
            what,
            detail: detail.into(),
        }
    }
}
