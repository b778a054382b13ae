//! Crate-wide error type.

use std::path::PathBuf;

/// Errors produced by any stage of the pipeline.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// Lattice index outside the scan grid.
    #[error("index out of range: ring {ring}, col {col} (grid is {rings}x{columns})")]
    IndexOutOfRange {
        ring: usize,
        col: usize,
        rings: usize,
        columns: usize,
    },

    /// A hole (depth 0.0) has no 3-D point.
    #[error("depth {0} is not a valid range; holes have no point")]
    HoleDepth(f32),

    /// Grid-shaped inputs with mismatched dimensions.
    #[error("dimension mismatch: expected {expected_rings}x{expected_cols}, got {rings}x{cols}")]
    DimensionMismatch {
        expected_rings: usize,
        expected_cols: usize,
        rings: usize,
        cols: usize,
    },

    /// Direction vector with (near) zero length.
    #[error("zero-length direction vector")]
    ZeroDirection,

    /// Ray direction is not unit length.
    #[error("ray direction has norm {0}, expected 1 within 1e-9")]
    NonUnitDirection(f64),

    /// Invalid grid construction parameters.
    #[error("invalid scan grid: {0}")]
    InvalidGrid(String),

    /// Body parameters outside the validation bounds.
    #[error("body parameters out of bounds: height {height} mm, weight {weight} kg \
             (valid: 800..=2200 mm, 10..=150 kg)")]
    BodyParamsOutOfBounds { height: f64, weight: f64 },

    /// Mesh file failed to parse.
    #[error("{path}:{line}: mesh parse error: {message}")]
    MeshParse {
        path: PathBuf,
        line: usize,
        message: String,
    },

    /// A triangle with (near) zero area.
    #[error("degenerate (zero-area) triangle at face {face}")]
    DegenerateTriangle { face: usize },

    /// Mesh with no triangles.
    #[error("mesh has no triangles")]
    EmptyMesh,

    /// BVH build over an empty triangle soup.
    #[error("cannot build a BVH over an empty triangle soup")]
    EmptySoup,

    /// Scene sampling with no backgrounds to pick from.
    #[error("background pool is empty")]
    EmptyBackgroundPool,

    /// Invalid synthesis configuration.
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    /// Container file magic/version not recognized.
    #[error("{path}: bad magic/version: {message}")]
    BadMagic { path: PathBuf, message: String },

    /// Container file ends mid-record.
    #[error("{path}: truncated file: {message}")]
    Truncated { path: PathBuf, message: String },

    /// Stored tensor shapes disagree with the expectation.
    #[error("{path}: shape mismatch: {message}")]
    ShapeMismatch { path: PathBuf, message: String },

    /// A depth map violating its invariants (negative/non-finite values).
    #[error("{path}: invalid depth map: {message}")]
    InvalidDepthMap { path: PathBuf, message: String },

    /// XML metadata that does not parse.
    #[error("{path}: malformed XML at byte {position}: {message}")]
    MalformedXml {
        path: PathBuf,
        position: u64,
        message: String,
    },

    /// XML metadata whose declared count disagrees with its contents.
    #[error("{path}: inconsistent metadata: {message}")]
    InconsistentMetadata { path: PathBuf, message: String },

    /// Label map with a value other than 0 or 1.
    #[error("non-binary label value {value} at ring {ring}, col {col}")]
    NonBinaryLabel { value: u8, ring: usize, col: usize },

    /// Metrics requested over zero evaluated pixels.
    #[error("empty confusion: no pixels were evaluated")]
    EmptyConfusion,

    /// Sample list empty where at least one sample is required.
    #[error("empty input: {0}")]
    EmptyInput(String),

    /// Underlying HDF5 library error.
    #[error("hdf5: {0}")]
    Hdf5(#[from] hdf5::Error),

    /// Underlying I/O error with the path it occurred on.
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
