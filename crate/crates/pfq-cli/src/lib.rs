//! Library side of the `pfq` command line tool: configuration, seeded
//! samplers, scanners and report serialization. The binary in `main.rs` is a
//! thin wrapper so the whole surface stays testable in-process.

pub mod cli;
pub mod config;
pub mod report;
pub mod sample;
pub mod scan;

/// Exit codes shared by the binary and the tests.
pub mod exit {
    pub const OK: i32 = 0;
    /// A violation was witnessed where a theorem predicted none.
    pub const VIOLATION: i32 = 1;
    /// Usage, configuration or hypothesis errors.
    pub const USAGE: i32 = 2;
    /// Numeric failure (non-convergence, truncation, domain, poles, NaN).
    pub const NUMERIC: i32 = 3;
}

pub fn exit_code_for(err: &pfq::Error) -> i32 {
    use pfq::Error::*;
    match err {
        Config(_) | Dimension(_) | Hypothesis(_) => exit::USAGE,
        Pole(_) | Domain(_) | Convergence { .. } | Truncation(_) | Numeric(_) => exit::NUMERIC,
    }
}
