//! Error type shared across the crate.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    #[error("bad magic bytes, expected {expected:?}")]
    BadMagic { expected: &'static str },

    #[error("unsupported container version {0}")]
    UnsupportedVersion(u8),

    #[error("truncated file: expected {expected} bytes of sample data, found {actual}")]
    Truncated { expected: u64, actual: u64 },

    #[error("format error: {0}")]
    Format(String),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("slice index {z} out of range for volume with Z={depth}")]
    SliceOutOfRange { z: usize, depth: usize },

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("frame too small: {0}")]
    FrameTooSmall(String),

    #[error("malformed bitstream: {0}")]
    MalformedStream(String),
}

pub type Result<T> = std::result::Result<T, Error>;
