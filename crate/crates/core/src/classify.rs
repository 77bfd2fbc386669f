//! Topological invariants of a closed pseudo-surface.

use std::collections::{BTreeMap, VecDeque};

use serde::{Deserialize, Serialize};

use crate::complex::Triangle;
use crate::surface::{facet_edges, SimplicialSurface};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurfaceReport {
    pub f_vector: (u32, u32, u32),
    pub euler_characteristic: i64,
    /// Vertex degree -> number of vertices with that degree.
    pub degree_profile: BTreeMap<u32, u32>,
    pub orientable: bool,
    /// Orientable genus `g` or non-orientable genus `u`; absent for pinched
    /// or disconnected complexes.
    pub genus: Option<u32>,
    pub pinched: bool,
    pub connected: bool,
}

impl SurfaceReport {
    /// The common vertex degree, if all vertices have the same degree.
    pub fn equivelar_degree(&self) -> Option<u32> {
        match self.degree_profile.len() {
            1 => self.degree_profile.keys().next().copied(),
            _ => None,
        }
    }

    pub fn is_surface(&self) -> bool {
        self.connected && !self.pinched
    }
}

/// Sign of the edge `e` of sorted triangle `t` under the orientation
/// `t[0] -> t[1] -> t[2]`: `+1` when the orientation runs `e[0] -> e[1]`.
#[inline]
fn edge_sign(t: &Triangle, e: &[u32; 2]) -> i8 {
    if e[0] == t[0] && e[1] == t[2] {
        -1
    } else {
        1
    }
}

/// Propagates an orientation across shared edges in every facet component.
/// Returns one `±1` per facet, or `None` if some component is non-orientable.
pub fn orient(surface: &SimplicialSurface) -> Option<Vec<i8>> {
    let facets = surface.facets();
    let mut sign = vec![0i8; facets.len()];
    for start in 0..facets.len() {
        if sign[start] != 0 {
            continue;
        }
        sign[start] = 1;
        let mut queue = VecDeque::from([start as u32]);
        while let Some(f) = queue.pop_front() {
            let t = &facets[f as usize];
            for e in facet_edges(t) {
                let g = surface.across(f, e[0], e[1]);
                let u = &facets[g as usize];
                let want = -sign[f as usize] * edge_sign(t, &e) * edge_sign(u, &e);
                match sign[g as usize] {
                    0 => {
                        sign[g as usize] = want;
                        queue.push_back(g);
                    }
                    s if s != want => return None,
                    _ => {}
                }
            }
        }
    }
    Some(sign)
}

pub fn classify(surface: &SimplicialSurface) -> SurfaceReport {
    let f_vector = surface.f_vector();
    let chi = f_vector.0 as i64 - f_vector.1 as i64 + f_vector.2 as i64;
    let mut degree_profile = BTreeMap::new();
    for d in surface.vertex_degrees() {
        *degree_profile.entry(d).or_insert(0) += 1;
    }
    let orientable = orient(surface).is_some();
    let pinched =
        (0..surface.n()).any(|v| surface.vertex_link(v).map(|c| c.len() > 1).unwrap_or(false));
    let connected = surface.is_connected();
    let genus = if pinched || !connected {
        None
    } else if orientable {
        u32::try_from((2 - chi) / 2).ok()
    } else {
        u32::try_from(2 - chi).ok()
    };
    SurfaceReport {
        f_vector,
        euler_characteristic: chi,
        degree_profile,
        orientable,
        genus,
        pinched,
        connected,
    }
}

/// `(χ, q, n)` satisfying `q = 6 - 6χ/n`, Heawood's vertex bound and,
/// for `χ ≠ 0`, `n | 6|χ|`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AdmissibleTriple {
    pub chi: i64,
    pub q: i64,
    pub n: i64,
}

impl AdmissibleTriple {
    pub fn new(chi: i64, q: i64, n: i64) -> Option<Self> {
        (admissible_triple(chi, q, n) && q_bound_holds(chi, q)).then_some(Self { chi, q, n })
    }
}

/// `q <= floor((5 + sqrt(49 - 24χ)) / 2)`, in exact integer arithmetic.
pub fn q_bound_holds(chi: i64, q: i64) -> bool {
    let disc = 49 - 24 * chi;
    let lhs = 2 * q - 5;
    disc >= 0 && (lhs < 0 || lhs * lhs <= disc)
}

/// `n >= ceil((7 + sqrt(49 - 24χ)) / 2)`, in exact integer arithmetic.
pub fn heawood_bound_holds(chi: i64, n: i64) -> bool {
    let disc = 49 - 24 * chi;
    let lhs = 2 * n - 7;
    disc >= 0 && lhs >= 0 && lhs * lhs >= disc
}

pub fn admissible_triple(chi: i64, q: i64, n: i64) -> bool {
    if n <= 0 || q < 3 {
        return false;
    }
    if (6 * chi) % n != 0 || q != 6 - 6 * chi / n {
        return false;
    }
    if chi != 0 && (6 * chi.abs()) % n != 0 {
        return false;
    }
    heawood_bound_holds(chi, n)
}
