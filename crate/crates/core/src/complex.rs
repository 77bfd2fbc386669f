//! Orbit arithmetic under the cyclic shift `i -> i + 1 (mod n)` and the
//! compressed description of a cyclic complex by one generator per orbit.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Vertex = u32;
/// A triangle as a sorted triple of distinct vertices.
pub type Triangle = [Vertex; 3];
/// An edge as a sorted pair of distinct vertices.
pub type Edge = [Vertex; 2];

/// Reduces an arbitrary integer into `[0, n)`.
#[inline]
pub fn residue(x: i64, n: u32) -> Vertex {
    x.rem_euclid(n as i64) as Vertex
}

/// The unordered difference class `min(d, n - d)` of the edge `{a, b}`.
#[inline]
pub fn difference_class(n: u32, a: i64, b: i64) -> u32 {
    let d = residue(b - a, n);
    d.min(n - d)
}

#[inline]
pub fn sort3(mut t: [Vertex; 3]) -> Triangle {
    t.sort_unstable();
    t
}

/// Reduces `t` mod `n` and sorts it; fails on a repeated residue.
pub fn normalize_triangle(n: u32, t: [i64; 3]) -> Result<Triangle> {
    let r = sort3([residue(t[0], n), residue(t[1], n), residue(t[2], n)]);
    if r[0] == r[1] || r[1] == r[2] {
        return Err(Error::DegenerateTriangle { triangle: t, n });
    }
    Ok(r)
}

pub fn shift_triangle(n: u32, t: &Triangle, k: i64) -> Triangle {
    sort3(t.map(|v| residue(v as i64 + k, n)))
}

/// The lexicographically smallest triangle in the shift orbit of `t`.
pub fn orbit_representative(n: u32, t: [i64; 3]) -> Result<Triangle> {
    let t = normalize_triangle(n, t)?;
    Ok(t.iter()
        .map(|&a| shift_triangle(n, &t, -(a as i64)))
        .min()
        .expect("three candidates"))
}

/// True when `t` generates the orbit of `[0, n/3, 2n/3]`.
pub fn is_short_orbit(n: u32, t: &Triangle) -> bool {
    n.is_multiple_of(3) && {
        let third = n / 3;
        residue(t[1] as i64 - t[0] as i64, n) == third
            && residue(t[2] as i64 - t[1] as i64, n) == third
    }
}

/// All shifts `t + k (mod n)`, deduplicated; `n` triangles, or `n/3` for the
/// orbit of `[0, n/3, 2n/3]`.
pub fn orbit_of_triangle(n: u32, t: [i64; 3]) -> Result<Vec<Triangle>> {
    let t = normalize_triangle(n, t)?;
    let size = if is_short_orbit(n, &t) { n / 3 } else { n };
    let mut out: Vec<Triangle> = (0..size as i64).map(|k| shift_triangle(n, &t, k)).collect();
    out.sort_unstable();
    Ok(out)
}

/// Vertex count plus one lexicographically smallest generator per triangle orbit.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CyclicComplexSpec {
    n: u32,
    generators: Vec<Triangle>,
}

impl CyclicComplexSpec {
    /// Normalizes every generator to its orbit representative, sorts them and
    /// rejects repeated orbits.
    pub fn new<I>(n: u32, generators: I) -> Result<Self>
    where
        I: IntoIterator<Item = [i64; 3]>,
    {
        if n < 4 {
            return Err(Error::TooFewVertices(n));
        }
        let mut reps = Vec::new();
        for g in generators {
            reps.push(orbit_representative(n, g)?);
        }
        reps.sort_unstable();
        if let Some(w) = reps.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::Overlap {
                first: w[0],
                second: w[1],
                n,
            });
        }
        Ok(Self {
            n,
            generators: reps,
        })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn generators(&self) -> &[Triangle] {
        &self.generators
    }

    pub fn short_orbit(&self) -> Option<&Triangle> {
        self.generators.iter().find(|g| is_short_orbit(self.n, g))
    }

    /// Sizes of the generated orbits, in generator order.
    pub fn orbit_sizes(&self) -> Vec<u32> {
        self.generators
            .iter()
            .map(|g| {
                if is_short_orbit(self.n, g) {
                    self.n / 3
                } else {
                    self.n
                }
            })
            .collect()
    }

    /// Degree of every vertex when the spec defines a closed (pseudo)surface:
    /// three per full orbit and one for the short orbit.
    pub fn expected_degree(&self) -> u32 {
        self.orbit_sizes()
            .iter()
            .map(|&s| if s == self.n { 3 } else { 1 })
            .sum()
    }

    pub fn facet_count(&self) -> u32 {
        self.orbit_sizes().iter().sum()
    }

    /// Image of the complex under `i -> m * i + k`; only meaningful (and only
    /// orbit-preserving) for `gcd(m, n) = 1`.
    pub fn affine_image(&self, m: u32, k: i64) -> Result<Self> {
        let n = self.n;
        Self::new(
            n,
            self.generators
                .iter()
                .map(|g| g.map(|v| v as i64 * m as i64 + k)),
        )
    }

    pub fn contains_orbit(&self, t: [i64; 3]) -> bool {
        orbit_representative(self.n, t)
            .map(|r| self.generators.binary_search(&r).is_ok())
            .unwrap_or(false)
    }

    /// Every facet of the expanded complex, sorted.
    pub fn facets(&self) -> Vec<Triangle> {
        let mut out = Vec::with_capacity(self.facet_count() as usize);
        for g in &self.generators {
            out.extend(orbit_of_triangle(self.n, g.map(i64::from)).expect("normalized"));
        }
        out.sort_unstable();
        out
    }
}

impl fmt::Display for CyclicComplexSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={}", self.n)?;
        for g in &self.generators {
            write!(f, " [{},{},{}]", g[0], g[1], g[2])?;
        }
        Ok(())
    }
}

pub(crate) fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orbit_sizes_match_short_orbit_rule() {
        assert_eq!(orbit_of_triangle(8, [0, 1, 2]).unwrap().len(), 8);
        assert_eq!(orbit_of_triangle(12, [0, 4, 8]).unwrap().len(), 4);
        assert_eq!(orbit_of_triangle(51, [0, 17, 34]).unwrap().len(), 17);
        assert_eq!(orbit_of_triangle(51, [2, 19, 36]).unwrap().len(), 17);
    }

    #[test]
    fn degenerate_triangle_rejected() {
        assert!(matches!(
            orbit_of_triangle(8, [0, 8, 3]),
            Err(Error::DegenerateTriangle { .. })
        ));
    }

    #[test]
    fn representative_is_lex_smallest() {
        assert_eq!(orbit_representative(16, [2, 5, 10]).unwrap(), [0, 3, 8]);
        assert_eq!(orbit_representative(8, [0, 2, 5]).unwrap(), [0, 2, 5]);
        assert_eq!(orbit_representative(8, [7, 0, 1]).unwrap(), [0, 1, 2]);
        assert_eq!(orbit_representative(8, [0, 3, 5]).unwrap(), [0, 2, 5]);
        // mirror images, not shifts
        assert_ne!(
            orbit_representative(10, [0, 1, 4]).unwrap(),
            orbit_representative(10, [0, -1, -4]).unwrap()
        );
    }

    #[test]
    fn spec_rejects_repeated_orbits() {
        let err = CyclicComplexSpec::new(8, [[0, 1, 2], [3, 4, 5]]).unwrap_err();
        assert!(matches!(err, Error::Overlap { .. }));
        assert!(matches!(
            CyclicComplexSpec::new(3, [[0, 1, 2]]),
            Err(Error::TooFewVertices(3))
        ));
    }

    #[test]
    fn tetrahedron_facets() {
        let s = CyclicComplexSpec::new(4, [[0, 1, 2]]).unwrap();
        assert_eq!(s.facets(), vec![[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]]);
        assert_eq!(s.expected_degree(), 3);
    }

    #[test]
    fn difference_classes() {
        assert_eq!(difference_class(16, 2, 36), 2);
        assert_eq!(difference_class(68, 2, 36), 34);
        assert_eq!(difference_class(10, 7, 2), 5);
    }
}
