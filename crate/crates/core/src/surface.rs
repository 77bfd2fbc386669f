//! Expanded facet lists with edge and vertex incidence.

use std::collections::HashMap;

use crate::complex::{sort3, CyclicComplexSpec, Edge, Triangle, Vertex};
use crate::error::{Error, Result};

/// A closed pseudo-surface: a pure 2-complex in which every edge lies in
/// exactly two facets. Vertices are `0..n`; some may be isolated.
#[derive(Clone, Debug)]
pub struct SimplicialSurface {
    n: u32,
    facets: Vec<Triangle>,
    edges: Vec<Edge>,
    edge_facets: Vec<[u32; 2]>,
    edge_index: HashMap<Edge, u32>,
    vertex_facets: Vec<Vec<u32>>,
}

impl PartialEq for SimplicialSurface {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.facets == other.facets
    }
}

impl Eq for SimplicialSurface {}

#[inline]
pub(crate) fn edge(a: Vertex, b: Vertex) -> Edge {
    if a < b {
        [a, b]
    } else {
        [b, a]
    }
}

#[inline]
pub(crate) fn facet_edges(t: &Triangle) -> [Edge; 3] {
    [[t[0], t[1]], [t[0], t[2]], [t[1], t[2]]]
}

impl SimplicialSurface {
    pub fn from_facets<I>(n: u32, facets: I) -> Result<Self>
    where
        I: IntoIterator<Item = [Vertex; 3]>,
    {
        let mut list = Vec::new();
        for t in facets {
            let s = sort3(t);
            if let Some(&v) = s.iter().find(|&&v| v >= n) {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            if s[0] == s[1] || s[1] == s[2] {
                return Err(Error::DegenerateTriangle {
                    triangle: s.map(i64::from),
                    n,
                });
            }
            list.push(s);
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::Overlap {
                first: w[0],
                second: w[1],
                n,
            });
        }

        let mut incidence: HashMap<Edge, Vec<u32>> = HashMap::with_capacity(list.len() * 3 / 2);
        for (i, t) in list.iter().enumerate() {
            for e in facet_edges(t) {
                let slot = incidence.entry(e).or_default();
                slot.push(i as u32);
                if slot.len() > 2 {
                    return Err(Error::NotASurface {
                        edge: e,
                        count: slot.len(),
                    });
                }
            }
        }
        let mut edges: Vec<Edge> = incidence.keys().copied().collect();
        edges.sort_unstable();
        if let Some(e) = edges.iter().find(|e| incidence[*e].len() != 2) {
            return Err(Error::NotASurface {
                edge: *e,
                count: incidence[e].len(),
            });
        }
        let edge_facets = edges
            .iter()
            .map(|e| {
                let f = &incidence[e];
                [f[0], f[1]]
            })
            .collect();
        let edge_index = edges
            .iter()
            .enumerate()
            .map(|(i, e)| (*e, i as u32))
            .collect();
        let mut vertex_facets = vec![Vec::new(); n as usize];
        for (i, t) in list.iter().enumerate() {
            for &v in t {
                vertex_facets[v as usize].push(i as u32);
            }
        }
        Ok(Self {
            n,
            facets: list,
            edges,
            edge_facets,
            edge_index,
            vertex_facets,
        })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn facets(&self) -> &[Triangle] {
        &self.facets
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn f_vector(&self) -> (u32, u32, u32) {
        (self.n, self.edges.len() as u32, self.facets.len() as u32)
    }

    /// The two facets containing `e`, if `e` is an edge.
    pub fn facets_of_edge(&self, a: Vertex, b: Vertex) -> Option<[u32; 2]> {
        self.edge_index
            .get(&edge(a, b))
            .map(|&i| self.edge_facets[i as usize])
    }

    pub fn facets_of_vertex(&self, v: Vertex) -> &[u32] {
        &self.vertex_facets[v as usize]
    }

    pub fn contains_facet(&self, t: &Triangle) -> bool {
        self.facets.binary_search(&sort3(*t)).is_ok()
    }

    /// Number of edges at each vertex.
    pub fn vertex_degrees(&self) -> Vec<u32> {
        let mut deg = vec![0u32; self.n as usize];
        for e in &self.edges {
            deg[e[0] as usize] += 1;
            deg[e[1] as usize] += 1;
        }
        deg
    }

    /// Applies the vertex bijection `v -> perm[v]`.
    pub fn relabel(&self, perm: &[Vertex]) -> Self {
        assert_eq!(perm.len(), self.n as usize, "permutation length");
        Self::from_facets(
            self.n,
            self.facets.iter().map(|t| t.map(|v| perm[v as usize])),
        )
        .expect("relabeling preserves the surface property")
    }

    /// Partitions the link of `v` into closed cycles, each given as its vertex
    /// sequence starting at the smallest vertex and continuing towards the
    /// smaller of its two neighbours. Cycles are sorted by first vertex.
    pub fn vertex_link(&self, v: Vertex) -> Result<Vec<LinkCycle>> {
        if v >= self.n {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n,
            });
        }
        link_cycles(
            v,
            self.vertex_facets[v as usize]
                .iter()
                .map(|&fi| self.facets[fi as usize]),
        )
    }

    /// Connected components of the facet adjacency graph (facets sharing an
    /// edge), each as a sorted list of facet indices.
    pub fn facet_components(&self) -> Vec<Vec<u32>> {
        let m = self.facets.len();
        let mut comp = vec![u32::MAX; m];
        let mut out = Vec::new();
        for s in 0..m {
            if comp[s] != u32::MAX {
                continue;
            }
            let id = out.len() as u32;
            let mut stack = vec![s as u32];
            comp[s] = id;
            let mut members = Vec::new();
            while let Some(f) = stack.pop() {
                members.push(f);
                for g in self.facet_neighbours(f) {
                    if comp[g as usize] == u32::MAX {
                        comp[g as usize] = id;
                        stack.push(g);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    /// The facets across the three edges of facet `f`, in edge order.
    pub fn facet_neighbours(&self, f: u32) -> [u32; 3] {
        let t = self.facets[f as usize];
        facet_edges(&t).map(|e| {
            let [a, b] = self.edge_facets[self.edge_index[&e] as usize];
            if a == f {
                b
            } else {
                a
            }
        })
    }

    /// The facet sharing edge `{a, b}` with facet `f`.
    pub(crate) fn across(&self, f: u32, a: Vertex, b: Vertex) -> u32 {
        let [x, y] = self.edge_facets[self.edge_index[&edge(a, b)] as usize];
        if x == f {
            y
        } else {
            x
        }
    }

    /// True when the 1-skeleton reaches every vertex.
    pub fn is_connected(&self) -> bool {
        let n = self.n as usize;
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for e in &self.edges {
            let (a, b) = (
                find(&mut parent, e[0] as usize),
                find(&mut parent, e[1] as usize),
            );
            parent[a] = b;
        }
        let root = find(&mut parent, 0);
        (0..n).all(|v| find(&mut parent, v) == root)
    }

    /// True when `i -> i + 1 (mod n)` is an automorphism.
    pub fn is_shift_invariant(&self) -> bool {
        let n = self.n;
        self.facets
            .iter()
            .all(|t| self.contains_facet(&t.map(|v| (v + 1) % n)))
    }
}

/// Splits the link of `v` inside `facets` (all containing `v`) into closed
/// cycles. See [`SimplicialSurface::vertex_link`] for the ordering.
pub fn link_cycles<I>(v: Vertex, facets: I) -> Result<Vec<LinkCycle>>
where
    I: IntoIterator<Item = Triangle>,
{
    let mut adj: HashMap<Vertex, Vec<Vertex>> = HashMap::new();
    for t in facets {
        let mut opp = t.iter().copied().filter(|&w| w != v);
        let (a, b) = (opp.next().unwrap(), opp.next().unwrap());
        adj.entry(a).or_default().push(b);
        adj.entry(b).or_default().push(a);
    }
    let mut keys: Vec<Vertex> = adj.keys().copied().collect();
    keys.sort_unstable();
    if let Some(&w) = keys.iter().find(|w| adj[*w].len() != 2) {
        return Err(Error::Boundary { vertex: v, at: w });
    }
    let mut seen = std::collections::HashSet::new();
    let mut cycles = Vec::new();
    for &start in &keys {
        if seen.contains(&start) {
            continue;
        }
        let nb = &adj[&start];
        let mut prev = start;
        let mut cur = nb[0].min(nb[1]);
        let mut cycle = vec![start];
        seen.insert(start);
        while cur != start {
            seen.insert(cur);
            cycle.push(cur);
            let nb = &adj[&cur];
            let next = if nb[0] == prev { nb[1] } else { nb[0] };
            prev = cur;
            cur = next;
        }
        cycles.push(LinkCycle(cycle));
    }
    Ok(cycles)
}

/// One closed cycle of a vertex link, as its vertex sequence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinkCycle(pub Vec<Vertex>);

impl LinkCycle {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The cycle's edges as sorted pairs, sorted.
    pub fn edges(&self) -> Vec<Edge> {
        let k = self.0.len();
        let mut out: Vec<Edge> = (0..k)
            .map(|i| edge(self.0[i], self.0[(i + 1) % k]))
            .collect();
        out.sort_unstable();
        out
    }
}

/// Expands every generator orbit and builds the incidence structure.
pub fn expand(spec: &CyclicComplexSpec) -> Result<SimplicialSurface> {
    SimplicialSurface::from_facets(spec.n(), spec.facets())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a6(n: i64) -> CyclicComplexSpec {
        CyclicComplexSpec::new(n as u32, [[0, 1, 2], [0, 2, (n + 2) / 2]]).unwrap()
    }

    #[test]
    fn tetrahedron() {
        let s = expand(&CyclicComplexSpec::new(4, [[0, 1, 2]]).unwrap()).unwrap();
        assert_eq!(s.f_vector(), (4, 6, 4));
        assert_eq!(s.facets(), &[[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]]);
    }

    #[test]
    fn a6_link_at_zero() {
        let s = expand(&a6(8)).unwrap();
        assert_eq!(s.f_vector(), (8, 24, 16));
        let link = s.vertex_link(0).unwrap();
        assert_eq!(link.len(), 1);
        assert_eq!(link[0].len(), 6);
        // [1,2],[2,(n+2)/2],[1,n-1],[(n-2)/2,n-2],[n-2,n-1],[(n-2)/2,(n+2)/2] at n=8
        let mut expected = vec![[1, 2], [2, 5], [1, 7], [3, 6], [6, 7], [3, 5]];
        expected.sort_unstable();
        assert_eq!(link[0].edges(), expected);
    }

    #[test]
    fn uncovered_edge_is_reported() {
        let spec = CyclicComplexSpec::new(8, [[0, 1, 2]]).unwrap();
        match expand(&spec) {
            Err(Error::NotASurface { edge, count }) => {
                assert_eq!(count, 1);
                assert_eq!(edge, [0, 2]);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn triple_edge_is_reported_eagerly() {
        let err = SimplicialSurface::from_facets(5, [[0, 1, 2], [0, 1, 3], [0, 1, 4]]).unwrap_err();
        assert_eq!(
            err,
            Error::NotASurface {
                edge: [0, 1],
                count: 3
            }
        );
    }

    #[test]
    fn open_link_is_a_boundary_error() {
        // star of 0 in a disk: link is the path 1-2-3
        let err = link_cycles(0, [[0, 1, 2], [0, 2, 3]]).unwrap_err();
        assert_eq!(err, Error::Boundary { vertex: 0, at: 1 });
        let s = expand(&a6(8)).unwrap();
        assert!(matches!(
            s.vertex_link(9),
            Err(Error::VertexOutOfRange { .. })
        ));
    }

    #[test]
    fn two_cones_give_two_cycles() {
        let star = [
            [0, 1, 2],
            [0, 2, 3],
            [0, 1, 3],
            [0, 4, 5],
            [0, 5, 6],
            [0, 4, 6],
        ];
        let cycles = link_cycles(0, star).unwrap();
        assert_eq!(
            cycles,
            vec![LinkCycle(vec![1, 2, 3]), LinkCycle(vec![4, 5, 6])]
        );
    }

    #[test]
    fn shift_invariance_and_connectivity() {
        let s = expand(&a6(10)).unwrap();
        assert!(s.is_shift_invariant());
        assert!(s.is_connected());
        assert_eq!(s.facet_components().len(), 1);
    }
}
