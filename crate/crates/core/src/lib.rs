//! Cyclic (vertex-transitive under `i -> i + 1 mod n`) triangulations of
//! closed surfaces: orbit arithmetic, topology, enumeration, difference-seed
//! families and the polygonal maps obtained by deleting edge orbits.

pub mod canon;
pub mod classify;
pub mod complex;
pub mod enumerate;
pub mod error;
pub mod io;
pub mod seed;
pub mod series;
pub mod surface;
pub mod tessellation;

pub use canon::{canonical_form, isomorphic, CanonicalForm};
pub use classify::{admissible_triple, classify, orient, AdmissibleTriple, SurfaceReport};
pub use complex::{
    difference_class, orbit_of_triangle, orbit_representative, CyclicComplexSpec, Edge, Triangle,
    Vertex,
};
pub use enumerate::{
    census, census_totals, classify_q7, enumerate_specs, enumerate_specs_with, CensusRow,
    EnumerateOptions,
};
pub use error::{Error, ErrorClass, Result};
pub use surface::{expand, LinkCycle, SimplicialSurface};
