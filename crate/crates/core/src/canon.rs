//! Relabeling-invariant normal form of a closed pseudo-surface.
//!
//! A *flag* is a facet together with an ordering of its three vertices.
//! Starting from a flag, the vertices are numbered `0, 1, 2` and a
//! breadth-first walk over facets (crossing edges in order of their current
//! labels) numbers every further vertex at first sight. The walk depends only
//! on the combinatorics, so an isomorphism maps the labeling induced by a flag
//! to the labeling induced by the image flag. The canonical form is the
//! lexicographically smallest relabeled facet list over all starting flags.
//!
//! When the shift `i -> i + 1` is an automorphism, every flag is equivalent to
//! one whose first vertex is `0`, so only those `2 * deg(0)` flags are tried.

use serde::{Deserialize, Serialize};

use crate::classify::{classify, SurfaceReport};
use crate::complex::{sort3, Triangle, Vertex};
use crate::surface::SimplicialSurface;

const UNSET: u32 = u32::MAX;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct CanonicalForm {
    pub n: u32,
    pub facets: Vec<Triangle>,
}

struct Walk<'a> {
    surface: &'a SimplicialSurface,
    label: Vec<u32>,
    visited: Vec<bool>,
    next: u32,
    remaining: usize,
}

impl<'a> Walk<'a> {
    fn new(surface: &'a SimplicialSurface) -> Self {
        Self {
            surface,
            label: vec![UNSET; surface.n() as usize],
            visited: vec![false; surface.facets().len()],
            next: 0,
            remaining: surface.facets().len(),
        }
    }

    fn assign(&mut self, v: Vertex) {
        if self.label[v as usize] == UNSET {
            self.label[v as usize] = self.next;
            self.next += 1;
        }
    }

    /// Labels the facet component of `start`, entering through `order`.
    fn run(&mut self, start: u32, order: [Vertex; 3]) {
        for v in order {
            self.assign(v);
        }
        self.visited[start as usize] = true;
        self.remaining -= 1;
        let mut queue = std::collections::VecDeque::from([start]);
        let facets = self.surface.facets();
        while let Some(f) = queue.pop_front() {
            let t = facets[f as usize];
            let mut edges = [[t[0], t[1]], [t[0], t[2]], [t[1], t[2]]].map(|[a, b]| {
                let (la, lb) = (self.label[a as usize], self.label[b as usize]);
                if la < lb {
                    ([la, lb], [a, b])
                } else {
                    ([lb, la], [b, a])
                }
            });
            edges.sort_unstable();
            for (_, [a, b]) in edges {
                let g = self.surface.across(f, a, b);
                if self.visited[g as usize] {
                    continue;
                }
                self.visited[g as usize] = true;
                self.remaining -= 1;
                let u = facets[g as usize];
                let w = u.iter().copied().find(|&x| x != a && x != b).unwrap();
                self.assign(w);
                queue.push_back(g);
            }
        }
    }

    fn finish(mut self) -> Vec<Triangle> {
        for v in 0..self.surface.n() {
            self.assign(v);
        }
        let mut out: Vec<Triangle> = self
            .surface
            .facets()
            .iter()
            .map(|t| sort3(t.map(|v| self.label[v as usize])))
            .collect();
        out.sort_unstable();
        out
    }
}

fn flags_of(t: &Triangle) -> [[Vertex; 3]; 6] {
    let [a, b, c] = *t;
    [
        [a, b, c],
        [a, c, b],
        [b, a, c],
        [b, c, a],
        [c, a, b],
        [c, b, a],
    ]
}

/// Completes a partial walk, branching over every flag of every unvisited
/// facet whenever a facet component is exhausted.
fn complete(walk: Walk<'_>, best: &mut Option<Vec<Triangle>>) {
    if walk.remaining == 0 {
        let cand = walk.finish();
        if best.as_ref().is_none_or(|b| cand < *b) {
            *best = Some(cand);
        }
        return;
    }
    let facets = walk.surface.facets();
    for f in 0..facets.len() {
        if walk.visited[f] {
            continue;
        }
        for order in flags_of(&facets[f]) {
            let mut w = Walk {
                surface: walk.surface,
                label: walk.label.clone(),
                visited: walk.visited.clone(),
                next: walk.next,
                remaining: walk.remaining,
            };
            w.run(f as u32, order);
            complete(w, best);
        }
    }
}

pub fn canonical_form(surface: &SimplicialSurface) -> CanonicalForm {
    let n = surface.n();
    let facets = surface.facets();
    if facets.is_empty() {
        return CanonicalForm {
            n,
            facets: Vec::new(),
        };
    }
    let starts: Vec<(u32, [Vertex; 3])> = if surface.is_shift_invariant() {
        surface
            .facets_of_vertex(0)
            .iter()
            .flat_map(|&f| {
                let t = facets[f as usize];
                let mut rest = t.iter().copied().filter(|&v| v != 0);
                let (a, b) = (rest.next().unwrap(), rest.next().unwrap());
                [(f, [0, a, b]), (f, [0, b, a])]
            })
            .collect()
    } else {
        (0..facets.len() as u32)
            .flat_map(|f| flags_of(&facets[f as usize]).map(|o| (f, o)))
            .collect()
    };
    let mut best = None;
    for (f, order) in starts {
        let mut w = Walk::new(surface);
        w.run(f, order);
        complete(w, &mut best);
    }
    CanonicalForm {
        n,
        facets: best.expect("at least one flag"),
    }
}

/// Cheap invariants compared before canonical forms.
fn quick_invariants(r: &SurfaceReport) -> impl PartialEq + '_ {
    (
        r.f_vector,
        &r.degree_profile,
        r.orientable,
        r.euler_characteristic,
        r.pinched,
    )
}

pub fn isomorphic(a: &SimplicialSurface, b: &SimplicialSurface) -> bool {
    if a.n() != b.n() || a.f_vector() != b.f_vector() {
        return false;
    }
    let (ra, rb) = (classify(a), classify(b));
    if quick_invariants(&ra) != quick_invariants(&rb) {
        return false;
    }
    canonical_form(a) == canonical_form(b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::CyclicComplexSpec;
    use crate::surface::expand;

    fn surf(n: u32, gens: &[[i64; 3]]) -> SimplicialSurface {
        expand(&CyclicComplexSpec::new(n, gens.iter().copied()).unwrap()).unwrap()
    }

    #[test]
    fn tetrahedron_canonical() {
        let t = SimplicialSurface::from_facets(4, [[3, 1, 0], [2, 3, 1], [0, 2, 3], [1, 0, 2]])
            .unwrap();
        assert_eq!(
            canonical_form(&t).facets,
            vec![[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]]
        );
    }

    #[test]
    fn shift_is_an_automorphism() {
        let s = surf(8, &[[0, 1, 2], [0, 2, 5]]);
        let perm: Vec<u32> = (0..8).map(|i| (i + 3) % 8).collect();
        let r = s.relabel(&perm);
        assert_eq!(canonical_form(&s), canonical_form(&r));
        assert!(isomorphic(&s, &r));
    }

    #[test]
    fn fast_path_agrees_with_all_flags() {
        // a non-cyclic relabeling disables the fast path
        let s = surf(10, &[[0, 1, 2], [0, 2, 6]]);
        let perm = [3, 7, 0, 9, 1, 4, 8, 2, 6, 5];
        let r = s.relabel(&perm);
        assert!(!r.is_shift_invariant());
        assert_eq!(canonical_form(&s), canonical_form(&r));
    }

    #[test]
    fn q7_examples_are_distinct() {
        let a = surf(12, &[[0, 1, 2], [0, 2, 6], [0, 4, 8]]);
        let b = surf(12, &[[0, 1, 5], [0, 1, 6], [0, 4, 8]]);
        assert_ne!(canonical_form(&a), canonical_form(&b));
        assert!(!isomorphic(&a, &b));
    }

    #[test]
    fn disjoint_union_is_canonicalized() {
        let two = SimplicialSurface::from_facets(
            8,
            [
                [0, 1, 2],
                [0, 1, 3],
                [0, 2, 3],
                [1, 2, 3],
                [4, 5, 6],
                [4, 5, 7],
                [4, 6, 7],
                [5, 6, 7],
            ],
        )
        .unwrap();
        let perm = [7, 0, 5, 2, 1, 6, 3, 4];
        let r = two.relabel(&perm);
        assert_eq!(canonical_form(&two), canonical_form(&r));
        assert_eq!(canonical_form(&two).facets[0], [0, 1, 2]);
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn shuffled(n: u32) -> impl Strategy<Value = Vec<u32>> {
            Just((0..n).collect::<Vec<u32>>()).prop_shuffle()
        }

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(128))]

            #[test]
            fn relabeling_preserves_canonical_form(perm in shuffled(12)) {
                let s = surf(12, &[[0, 1, 2], [0, 2, 6], [0, 4, 8]]);
                let r = s.relabel(&perm);
                prop_assert_eq!(canonical_form(&s), canonical_form(&r));
            }

            #[test]
            fn relabeling_preserves_canonical_form_q9(perm in shuffled(16)) {
                let s = surf(16, &[[0, 1, 2], [0, 2, 5], [0, 3, 8]]);
                let r = s.relabel(&perm);
                prop_assert_eq!(canonical_form(&s), canonical_form(&r));
            }
        }
    }
}
