//! Progress-message sink for the series and generating-function drivers.
//!
//! All library values are immutable and the operations pure; the trace
//! sink is the one injected collaborator with observable effects, so it
//! must be `Sync` and do its own synchronization.

/// Receives one informational line per pipeline stage.
pub trait TraceSink: Sync {
    fn info(&self, line: &str);
}

/// Discards everything.
pub struct NoTrace;

impl TraceSink for NoTrace {
    fn info(&self, _line: &str) {}
}

/// Collects lines in memory (used by tests).
#[derive(Default)]
pub struct BufferTrace {
    lines: std::sync::Mutex<Vec<String>>,
}

impl BufferTrace {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn lines(&self) -> Vec<String> {
        self.lines.lock().unwrap().clone()
    }
}

impl TraceSink for BufferTrace {
    fn info(&self, line: &str) {
        self.lines.lock().unwrap().push(line.to_string());
    }
}
