//! Polygonal maps obtained from cyclic triangulations by deleting whole
//! orbits of interior seed edges.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::canon::{canonical_form, CanonicalForm};
use crate::classify::classify;
use crate::complex::{difference_class, residue, Edge, Vertex};
use crate::error::{Error, Result};
use crate::seed::Seed;
use crate::surface::{edge, facet_edges, SimplicialSurface};

/// A cell decomposition whose cells are given by their boundary walks.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CellMap {
    pub n: u32,
    /// One normalized polygon per orbit under the shift, sorted.
    pub polygon_orbits: Vec<Vec<Vertex>>,
    /// Normalized polygons, sorted.
    pub polygons: Vec<Vec<Vertex>>,
    pub edges: Vec<Edge>,
    /// Common polygon size, if any.
    pub p: Option<u32>,
    /// Common vertex degree, if any.
    pub q: Option<u32>,
    pub regular: bool,
    pub strongly_regular: bool,
    pub orientable: bool,
    pub pinched: bool,
    pub euler_characteristic: i64,
}

/// Rotation and reflection minimal form of a cyclic vertex sequence.
pub fn normalize_polygon(poly: &[Vertex]) -> Vec<Vertex> {
    let len = poly.len();
    let mut best: Option<Vec<Vertex>> = None;
    for start in 0..len {
        for dir in [1, len - 1] {
            let cand: Vec<Vertex> = (0..len).map(|i| poly[(start + i * dir) % len]).collect();
            if best.as_ref().is_none_or(|b| cand < *b) {
                best = Some(cand);
            }
        }
    }
    best.unwrap_or_default()
}

/// Smallest normalized translate of `poly`.
pub fn polygon_orbit_representative(n: u32, poly: &[Vertex]) -> Vec<Vertex> {
    poly.iter()
        .map(|&v| {
            let shifted: Vec<Vertex> = poly
                .iter()
                .map(|&w| residue(w as i64 - v as i64, n))
                .collect();
            normalize_polygon(&shifted)
        })
        .min()
        .unwrap_or_default()
}

fn polygon_edges(poly: &[Vertex]) -> impl Iterator<Item = Edge> + '_ {
    (0..poly.len()).map(move |i| edge(poly[i], poly[(i + 1) % poly.len()]))
}

fn is_simple(poly: &[Vertex]) -> bool {
    poly.iter().collect::<BTreeSet<_>>().len() == poly.len()
}

/// Two polygons meeting in more than a vertex or an edge, with the shared
/// vertices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyhedralViolation {
    pub first: Vec<Vertex>,
    pub second: Vec<Vertex>,
    pub shared: Vec<Vertex>,
}

fn first_violation(polygons: &[Vec<Vertex>]) -> Option<PolyhedralViolation> {
    let mut at: HashMap<Vertex, Vec<usize>> = HashMap::new();
    for (i, p) in polygons.iter().enumerate() {
        for &v in p {
            at.entry(v).or_default().push(i);
        }
    }
    let mut shared: BTreeMap<(usize, usize), BTreeSet<Vertex>> = BTreeMap::new();
    for (&v, ps) in &at {
        for (x, &i) in ps.iter().enumerate() {
            for &j in &ps[x + 1..] {
                shared.entry((i, j)).or_default().insert(v);
            }
        }
    }
    shared.into_iter().find_map(|((i, j), s)| {
        let ok = match s.len() {
            1 => true,
            2 => {
                let mut it = s.iter();
                let e = edge(*it.next().unwrap(), *it.next().unwrap());
                polygon_edges(&polygons[i]).any(|f| f == e)
                    && polygon_edges(&polygons[j]).any(|f| f == e)
            }
            _ => false,
        };
        (!ok).then(|| PolyhedralViolation {
            first: polygons[i].clone(),
            second: polygons[j].clone(),
            shared: s.into_iter().collect(),
        })
    })
}

impl CellMap {
    /// Derives every field from the polygons; orientability and pinching
    /// are supplied by the caller.
    fn assemble(n: u32, polygons: Vec<Vec<Vertex>>, orientable: bool, pinched: bool) -> Self {
        let mut polygons: Vec<Vec<Vertex>> =
            polygons.iter().map(|p| normalize_polygon(p)).collect();
        polygons.sort();
        let orbits: BTreeSet<Vec<Vertex>> = polygons
            .iter()
            .map(|p| polygon_orbit_representative(n, p))
            .collect();
        let edges: BTreeSet<Edge> = polygons.iter().flat_map(|p| polygon_edges(p)).collect();
        let mut degree = vec![0u32; n as usize];
        for e in &edges {
            degree[e[0] as usize] += 1;
            degree[e[1] as usize] += 1;
        }
        let constant = |mut it: std::vec::IntoIter<u32>| {
            let first = it.next()?;
            it.all(|x| x == first).then_some(first)
        };
        let p = constant(
            polygons
                .iter()
                .map(|p| p.len() as u32)
                .collect::<Vec<_>>()
                .into_iter(),
        );
        let q = constant(degree.into_iter().collect::<Vec<_>>().into_iter());
        let regular = polygons.iter().all(|p| is_simple(p));
        let strongly_regular = regular && first_violation(&polygons).is_none();
        let euler_characteristic = n as i64 - edges.len() as i64 + polygons.len() as i64;
        Self {
            n,
            polygon_orbits: orbits.into_iter().collect(),
            polygons,
            edges: edges.into_iter().collect(),
            p,
            q,
            regular,
            strongly_regular,
            orientable,
            pinched,
            euler_characteristic,
        }
    }

    /// A map given by its polygons. Orientability is read off the cone over
    /// the polygons, so every polygon must be a simple cycle.
    pub fn from_polygons(n: u32, polygons: Vec<Vec<Vertex>>) -> Result<Self> {
        for (i, p) in polygons.iter().enumerate() {
            if p.len() < 3 || !is_simple(p) {
                return Err(Error::NonDiskCell {
                    cell: i,
                    reason: "boundary is not a simple cycle".into(),
                });
            }
            if let Some(&v) = p.iter().find(|&&v| v >= n) {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
        }
        let report = classify(&cone(n, &polygons)?);
        Ok(Self::assemble(
            n,
            polygons,
            report.orientable,
            report.pinched,
        ))
    }
}

/// The triangulation that cones every polygon from a new vertex `n + i`.
fn cone(n: u32, polygons: &[Vec<Vertex>]) -> Result<SimplicialSurface> {
    let facets = polygons.iter().enumerate().flat_map(|(i, p)| {
        let c = n + i as u32;
        polygon_edges(p).map(move |e| [c, e[0], e[1]])
    });
    SimplicialSurface::from_facets(n + polygons.len() as u32, facets.collect::<Vec<_>>())
}

/// Merges the facets of `surface` across every edge in `deleted`.
pub fn delete_edges(surface: &SimplicialSurface, deleted: &BTreeSet<Edge>) -> Result<CellMap> {
    let facets = surface.facets();
    let mut cell_of = vec![usize::MAX; facets.len()];
    let mut polygons = Vec::new();
    for f0 in 0..facets.len() {
        if cell_of[f0] != usize::MAX {
            continue;
        }
        let cell = polygons.len();
        let mut poly = facets[f0].to_vec();
        let mut crossed = 0usize;
        let mut size = 1usize;
        cell_of[f0] = cell;
        let mut queue = VecDeque::from([f0]);
        while let Some(f) = queue.pop_front() {
            for e in facet_edges(&facets[f]) {
                if !deleted.contains(&e) {
                    continue;
                }
                let [g, h] = surface.facets_of_edge(e[0], e[1]).expect("surface edge");
                let g = if g as usize == f { h } else { g } as usize;
                if cell_of[g] == cell {
                    crossed += 1;
                    continue;
                }
                cell_of[g] = cell;
                size += 1;
                let c = facets[g].iter().copied().find(|v| !e.contains(v)).unwrap();
                let len = poly.len();
                let at = (0..len)
                    .find(|&i| edge(poly[i], poly[(i + 1) % len]) == e)
                    .expect("deleted edge on the current boundary");
                poly.insert(at + 1, c);
                queue.push_back(g);
            }
        }
        // Each tree edge was seen once from each side except the crossing
        // that discovered it; any extra sighting closes a cycle.
        if crossed != size - 1 {
            return Err(Error::NonDiskCell {
                cell,
                reason: format!("{size} triangles glued along a cycle"),
            });
        }
        polygons.push(poly);
    }
    let report = classify(surface);
    Ok(CellMap::assemble(
        surface.n(),
        polygons,
        report.orientable,
        report.pinched,
    ))
}

/// All translates of `edges`.
pub fn edge_orbits(n: u32, edges: &[Edge]) -> BTreeSet<Edge> {
    edges
        .iter()
        .flat_map(|e| {
            (0..n).map(move |k| edge(residue((e[0] + k) as i64, n), residue((e[1] + k) as i64, n)))
        })
        .collect()
}

/// Deletes the orbits of the given interior edges of `seed`.
pub fn delete_edge_orbits(
    surface: &SimplicialSurface,
    seed: &Seed,
    edges: &[Edge],
) -> Result<CellMap> {
    let interior = seed.interior_edges();
    for e in edges {
        let e = edge(e[0], e[1]);
        if !interior.contains(&e) {
            return Err(Error::NotInterior(difference_class(
                seed.n(),
                e[0] as i64,
                e[1] as i64,
            )));
        }
    }
    delete_edges(surface, &edge_orbits(surface.n(), edges))
}

/// Deletes the orbits of every interior seed edge.
pub fn full_deletion(surface: &SimplicialSurface, seed: &Seed) -> Result<CellMap> {
    delete_edge_orbits(surface, seed, &seed.interior_edges())
}

/// Interior edges between consecutive seed triangles, in path order.
fn path_edges(seed: &Seed) -> Result<Vec<Edge>> {
    let tris = seed.reduced_triangles();
    tris.windows(2)
        .map(|w| {
            let shared: Vec<Vertex> = w[0].iter().copied().filter(|v| w[1].contains(v)).collect();
            match shared[..] {
                [a, b] => Ok(edge(a, b)),
                _ => Err(Error::NotPathlike),
            }
        })
        .collect()
}

/// Merges consecutive groups of `s` seed triangles into `(s+2)`-gons.
pub fn merge_groups(surface: &SimplicialSurface, seed: &Seed, s: usize) -> Result<CellMap> {
    let path = path_edges(seed)?;
    let t = path.len() + 1;
    if s == 0 || t % s != 0 {
        return Err(Error::Divisibility {
            triangles: t,
            group: s,
        });
    }
    let edges: Vec<Edge> = path
        .iter()
        .enumerate()
        .filter(|(i, _)| (i + 1) % s != 0)
        .map(|(_, e)| *e)
        .collect();
    delete_edge_orbits(surface, seed, &edges)
}

/// Outcome of the polyhedrality test.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum PolyhedralCheck {
    Polyhedral,
    /// Some polygon repeats a vertex.
    NotRegular(Vec<Vertex>),
    Violation(PolyhedralViolation),
}

impl PolyhedralCheck {
    pub fn is_polyhedral(&self) -> bool {
        matches!(self, PolyhedralCheck::Polyhedral)
    }
}

pub fn check_polyhedral(map: &CellMap) -> PolyhedralCheck {
    if let Some(p) = map.polygons.iter().find(|p| !is_simple(p)) {
        return PolyhedralCheck::NotRegular(p.clone());
    }
    match first_violation(&map.polygons) {
        Some(v) => PolyhedralCheck::Violation(v),
        None => PolyhedralCheck::Polyhedral,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MapSeries {
    /// `{5,5}` maps on `16 + 4r` vertices.
    Bdn,
    /// `{2k+1,2k+1}` maps on `2*3^k - 2 + 4r` vertices, `k >= 2`.
    DOdd,
    /// `{2k,2k}` maps on `3^k - 1 + 2r` vertices, `k >= 3`.
    DEven,
}

impl fmt::Display for MapSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MapSeries::Bdn => "BDN",
            MapSeries::DOdd => "D_odd",
            MapSeries::DEven => "D_even",
        })
    }
}

impl std::str::FromStr for MapSeries {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().replace(['-', '_'], "").as_str() {
            "bdn" => Ok(MapSeries::Bdn),
            "dodd" => Ok(MapSeries::DOdd),
            "deven" => Ok(MapSeries::DEven),
            _ => Err(Error::UnknownSeries(s.into())),
        }
    }
}

/// Vertex count and full difference list (summing to `2 mod n`).
pub fn map_series_differences(series: MapSeries, k: u32, r: u32) -> Result<(u32, Vec<i64>)> {
    let (k, r) = (k as i64, r as i64);
    let min_k = match series {
        MapSeries::Bdn => 2,
        MapSeries::DOdd => 2,
        MapSeries::DEven => 3,
    };
    if k < min_k || (series == MapSeries::Bdn && k != 2) || k > 12 {
        return Err(Error::Parameter(format!(
            "{series} is not defined for k={k}"
        )));
    }
    let pow = |e: i64| 3i64.pow(e as u32);
    let top = pow(k - 1) + r;
    let mut diffs = Vec::new();
    let n = match series {
        MapSeries::Bdn | MapSeries::DOdd => {
            diffs.push(pow(k) - 1 + 2 * r);
            2 * pow(k) - 2 + 4 * r
        }
        MapSeries::DEven => pow(k) - 1 + 2 * r,
    };
    diffs.extend([-top, -top]);
    for e in (1..=k - 2).rev() {
        diffs.extend([-pow(e), -pow(e)]);
    }
    let n = u32::try_from(n).map_err(|_| Error::Parameter(format!("n={n} too large")))?;
    Ok((n, diffs))
}

/// Seed, expanded triangulation and full-deletion map of a series member.
pub fn make_map_series(
    series: MapSeries,
    k: u32,
    r: u32,
) -> Result<(Seed, SimplicialSurface, CellMap)> {
    use crate::seed::{seed_from_differences, Closing, DifferenceSequence};
    let (n, diffs) = map_series_differences(series, k, r)?;
    let seed = seed_from_differences(n, &DifferenceSequence::new(diffs, Closing::Closed))?;
    let surface = crate::surface::expand(&seed.to_spec()?)?;
    let map = full_deletion(&surface, &seed)?;
    Ok((seed, surface, map))
}

/// Canonical form of the cone over the polygons. Vertices and cone points
/// must be told apart by degree, so no polygon size may equal twice a
/// vertex degree.
pub fn map_canonical_form(map: &CellMap) -> Result<CanonicalForm> {
    let sizes: BTreeSet<usize> = map.polygons.iter().map(Vec::len).collect();
    let mut degree = vec![0usize; map.n as usize];
    for e in &map.edges {
        degree[e[0] as usize] += 1;
        degree[e[1] as usize] += 1;
    }
    if let Some(d) = degree.iter().find(|&&d| sizes.contains(&(2 * d))) {
        return Err(Error::Parameter(format!(
            "vertex degree {d} is ambiguous against polygon size {}",
            2 * d
        )));
    }
    Ok(canonical_form(&cone(map.n, &map.polygons)?))
}

/// Map isomorphism: a vertex bijection carrying polygons onto polygons.
pub fn maps_isomorphic(a: &CellMap, b: &CellMap) -> Result<bool> {
    if (a.n, a.polygons.len(), a.edges.len()) != (b.n, b.polygons.len(), b.edges.len()) {
        return Ok(false);
    }
    Ok(map_canonical_form(a)? == map_canonical_form(b)?)
}

/// Image of the map under a vertex permutation.
pub fn relabel_map(map: &CellMap, perm: &[Vertex]) -> Vec<Vec<Vertex>> {
    let mut out: Vec<Vec<Vertex>> = map
        .polygons
        .iter()
        .map(|p| normalize_polygon(&p.iter().map(|&v| perm[v as usize]).collect::<Vec<_>>()))
        .collect();
    out.sort();
    out
}

/// Header `n=<int> p=<int> q=<int>` (0 when not constant), then one polygon
/// per line.
pub fn write_map(map: &CellMap) -> String {
    let mut out = format!(
        "n={} p={} q={}\n",
        map.n,
        map.p.unwrap_or(0),
        map.q.unwrap_or(0)
    );
    for p in &map.polygons {
        let line: Vec<String> = p.iter().map(|v| v.to_string()).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}

pub fn parse_map(text: &str) -> Result<CellMap> {
    use crate::io::{content_lines, parse_ints, parse_kv};
    let mut lines = content_lines(text);
    let (line, header) = lines.next().ok_or(Error::Parse {
        line: 1,
        msg: "empty map file".into(),
    })?;
    let mut fields = header.split_whitespace();
    let n = parse_kv(line, fields.next().unwrap_or(""), "n")?;
    let n = u32::try_from(n).map_err(|_| Error::Parse {
        line,
        msg: format!("n={n} out of range"),
    })?;
    let mut polygons = Vec::new();
    for (line, l) in lines {
        let vs = parse_ints(line, l)?;
        let vs = vs
            .into_iter()
            .map(|v| {
                u32::try_from(v).map_err(|_| Error::Parse {
                    line,
                    msg: format!("bad vertex {v}"),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        polygons.push(vs);
    }
    CellMap::from_polygons(n, polygons)
}
