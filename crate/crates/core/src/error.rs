use thiserror::Error;

use crate::complex::{Edge, Vertex};

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Coarse grouping of errors, used by front ends to pick exit codes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ErrorClass {
    Parse,
    Validation,
    NotASurface,
}

#[derive(Clone, Debug, Error, PartialEq, Eq)]
#[non_exhaustive]
pub enum Error {
    #[error("triangle {triangle:?} has a repeated vertex mod {n}")]
    DegenerateTriangle { triangle: [i64; 3], n: u32 },

    #[error("a cyclic complex needs at least 4 vertices, got {0}")]
    TooFewVertices(u32),

    #[error("generators {first:?} and {second:?} generate the same orbit mod {n}")]
    Overlap {
        first: [Vertex; 3],
        second: [Vertex; 3],
        n: u32,
    },

    #[error("edge {edge:?} lies in {count} facets (expected 2)")]
    NotASurface { edge: Edge, count: usize },

    #[error("link of vertex {vertex} is not closed (open chain at {at})")]
    Boundary { vertex: Vertex, at: Vertex },

    #[error("vertex {vertex} out of range for n={n}")]
    VertexOutOfRange { vertex: Vertex, n: u32 },

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("{series}: n={n} is not admissible ({reason})")]
    Range {
        series: String,
        n: i64,
        reason: String,
    },

    #[error("unknown series `{0}`")]
    UnknownSeries(String),

    #[error("parameter out of range: {0}")]
    Parameter(String),

    #[error("seed vertices collide: {0}")]
    Collision(String),

    #[error("seed is not a tree of triangles: {0}")]
    MalformedSeed(String),

    #[error("complex does not contain the orbit of [0,1,2]")]
    NotInFamily,

    #[error("seed is not pathlike")]
    NotPathlike,

    #[error("seed has {triangles} triangles, not divisible by {group}")]
    Divisibility { triangles: usize, group: usize },

    #[error("cell {cell} is not a disk: {reason}")]
    NonDiskCell { cell: usize, reason: String },

    #[error("edge class {0} is not an interior seed edge")]
    NotInterior(u32),
}

impl Error {
    pub fn class(&self) -> ErrorClass {
        match self {
            Error::Parse { .. } | Error::UnknownSeries(_) => ErrorClass::Parse,
            Error::NotASurface { .. } | Error::Boundary { .. } | Error::NonDiskCell { .. } => {
                ErrorClass::NotASurface
            }
            _ => ErrorClass::Validation,
        }
    }
}
