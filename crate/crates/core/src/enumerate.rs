//! Exhaustive search for cyclic triangulations with a given vertex count.
//!
//! A complex is a set of triangle orbits. Each full orbit covers every edge
//! of a difference class once per occurrence of that class among its three
//! differences, and the short orbit covers class `n/3` once. A closed
//! pseudo-surface therefore uses every class either zero times or exactly
//! twice, except `n/2`, which is used once. The search completes partially
//! covered classes smallest-first, so each orbit set is reached exactly once.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::canon::{canonical_form, CanonicalForm};
use crate::classify::{classify, SurfaceReport};
use crate::complex::{difference_class, gcd, orbit_representative, CyclicComplexSpec, Triangle};
use crate::surface::expand;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct EnumerateOptions {
    /// Keep only complexes with this vertex degree.
    pub degree: Option<u32>,
    /// Also emit complexes whose vertex links have several cycles.
    pub allow_pinched: bool,
    /// Also emit complexes whose 1-skeleton is disconnected.
    pub allow_disconnected: bool,
}

struct Orbit {
    rep: Triangle,
    /// `(class, multiplicity)` pairs.
    classes: Vec<(u32, u8)>,
    /// Edges of the link of vertex 0 contributed by this orbit.
    link: Vec<(u32, u32)>,
}

struct Problem {
    n: u32,
    opts: EnumerateOptions,
    orbits: Vec<Orbit>,
    by_class: Vec<Vec<usize>>,
}

struct State {
    count: Vec<u8>,
    chosen: Vec<usize>,
    /// Unused classes below `floor` may not be opened.
    floor: u32,
}

fn all_orbits(n: u32) -> Vec<Orbit> {
    let mut reps = BTreeSet::new();
    for a in 1..n - 1 {
        for b in a + 1..n {
            reps.insert(orbit_representative(n, [0, a as i64, b as i64]).expect("distinct"));
        }
    }
    reps.into_iter()
        .map(|rep| {
            let mut classes: BTreeMap<u32, u8> = BTreeMap::new();
            let short = n.is_multiple_of(3) && rep == [0, n / 3, 2 * n / 3];
            let pairs = [(rep[0], rep[1]), (rep[1], rep[2]), (rep[0], rep[2])];
            for (x, y) in if short { &pairs[..1] } else { &pairs[..] } {
                *classes
                    .entry(difference_class(n, *x as i64, *y as i64))
                    .or_default() += 1;
            }
            let [_, a, b] = rep;
            let link = if short {
                vec![(a, b)]
            } else {
                vec![(a, b), (n - a, b - a), (n - b, n + a - b)]
            };
            Orbit {
                rep,
                classes: classes.into_iter().collect(),
                link,
            }
        })
        .collect()
}

impl Problem {
    fn new(n: u32, opts: EnumerateOptions) -> Self {
        let orbits = all_orbits(n);
        let mut by_class = vec![Vec::new(); n as usize / 2 + 1];
        for (i, o) in orbits.iter().enumerate() {
            for &(c, _) in &o.classes {
                by_class[c as usize].push(i);
            }
        }
        Self {
            n,
            opts,
            orbits,
            by_class,
        }
    }

    fn target(&self, c: u32) -> u8 {
        if 2 * c == self.n {
            1
        } else {
            2
        }
    }

    fn fits(&self, st: &State, o: usize) -> bool {
        !st.chosen.contains(&o)
            && self.orbits[o].classes.iter().all(|&(c, m)| {
                let have = st.count[c as usize];
                (have > 0 || c >= st.floor) && have + m <= self.target(c)
            })
    }

    fn push(&self, st: &mut State, o: usize) {
        for &(c, m) in &self.orbits[o].classes {
            st.count[c as usize] += m;
        }
        st.chosen.push(o);
    }

    fn pop(&self, st: &mut State) {
        let o = st.chosen.pop().expect("nonempty");
        for &(c, m) in &self.orbits[o].classes {
            st.count[c as usize] -= m;
        }
    }

    /// Number of link vertices touched so far.
    fn link_size(&self, st: &State) -> u32 {
        (1..=self.n / 2)
            .filter(|&c| st.count[c as usize] > 0)
            .map(|c| if 2 * c == self.n { 1 } else { 2 })
            .sum()
    }

    /// Cycles of the partial link of vertex 0 that are already closed, and
    /// the number of its components.
    fn link_shape(&self, st: &State) -> (usize, usize) {
        let n = self.n as usize;
        let mut parent: Vec<usize> = (0..n).collect();
        let mut deg = vec![0u8; n];
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for &o in &st.chosen {
            for &(a, b) in &self.orbits[o].link {
                let (a, b) = (a as usize, b as usize);
                deg[a] += 1;
                deg[b] += 1;
                let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
                parent[ra] = rb;
            }
        }
        let mut open = vec![false; n];
        let mut roots = BTreeSet::new();
        for v in 1..n {
            if deg[v] > 0 {
                let r = find(&mut parent, v);
                roots.insert(r);
                if deg[v] < 2 {
                    open[r] = true;
                }
            }
        }
        let closed = roots.iter().filter(|&&r| !open[r]).count();
        (closed, roots.len())
    }

    fn pruned(&self, st: &State) -> bool {
        if let Some(q) = self.opts.degree {
            if self.link_size(st) > q {
                return true;
            }
        }
        if self.opts.allow_pinched {
            return false;
        }
        let (closed, components) = self.link_shape(st);
        closed > 0 && (components > 1 || self.partial(st).is_some())
    }

    fn partial(&self, st: &State) -> Option<u32> {
        (1..=self.n / 2).find(|&c| {
            let have = st.count[c as usize];
            have > 0 && have < self.target(c)
        })
    }

    fn accept(&self, st: &State) -> Option<CyclicComplexSpec> {
        if let Some(q) = self.opts.degree {
            if self.link_size(st) != q {
                return None;
            }
        }
        if !self.opts.allow_disconnected {
            let g = (1..=self.n / 2)
                .filter(|&c| st.count[c as usize] > 0)
                .fold(self.n, gcd);
            if g != 1 {
                return None;
            }
        }
        if !self.opts.allow_pinched && self.link_shape(st).1 != 1 {
            return None;
        }
        let gens = st.chosen.iter().map(|&o| self.orbits[o].rep.map(i64::from));
        Some(CyclicComplexSpec::new(self.n, gens).expect("distinct orbits"))
    }

    fn search(&self, st: &mut State, out: &mut Vec<CyclicComplexSpec>) {
        if self.pruned(st) {
            return;
        }
        match self.partial(st) {
            Some(c) => {
                for &o in &self.by_class[c as usize] {
                    if self.fits(st, o) {
                        self.push(st, o);
                        self.search(st, out);
                        self.pop(st);
                    }
                }
            }
            None => {
                out.extend(self.accept(st));
                if self.opts.allow_pinched {
                    self.open_new(st, out);
                }
            }
        }
    }

    /// Branches on the smallest class of a new link component.
    fn open_new(&self, st: &mut State, out: &mut Vec<CyclicComplexSpec>) {
        let saved = st.floor;
        for c in saved..=self.n / 2 {
            if st.count[c as usize] > 0 {
                continue;
            }
            st.floor = c;
            for &o in &self.by_class[c as usize] {
                if self.fits(st, o) {
                    self.push(st, o);
                    self.search(st, out);
                    self.pop(st);
                }
            }
        }
        st.floor = saved;
    }

    fn first_moves(&self) -> Vec<(u32, usize)> {
        let mut moves = Vec::new();
        for c in 1..=self.n / 2 {
            for &o in &self.by_class[c as usize] {
                if self.orbits[o].classes.iter().all(|&(d, _)| d >= c) {
                    moves.push((c, o));
                }
            }
        }
        moves
    }

    fn run_from(&self, c: u32, o: usize) -> Vec<CyclicComplexSpec> {
        let mut st = State {
            count: vec![0; self.n as usize / 2 + 1],
            chosen: Vec::new(),
            floor: c,
        };
        let mut out = Vec::new();
        if self.fits(&st, o) {
            self.push(&mut st, o);
            self.search(&mut st, &mut out);
        }
        out
    }
}

/// Every orbit set on `n` vertices forming a closed surface, each as a
/// normalized spec, in sorted order. Empty for `n < 4`.
pub fn enumerate_specs_with(n: u32, opts: EnumerateOptions) -> Vec<CyclicComplexSpec> {
    if n < 4 {
        return Vec::new();
    }
    let problem = Problem::new(n, opts);
    let mut out: Vec<CyclicComplexSpec> = problem
        .first_moves()
        .into_par_iter()
        .flat_map_iter(|(c, o)| problem.run_from(c, o))
        .collect();
    out.sort_unstable();
    out
}

/// Connected, unpinched cyclic triangulations on `n` vertices.
pub fn enumerate_specs(n: u32) -> Vec<CyclicComplexSpec> {
    enumerate_specs_with(n, EnumerateOptions::default())
}

/// True when no multiplier `i -> u i` with `gcd(u, n) = 1` maps `spec` to a
/// smaller spec. Every isomorphism class keeps at least one such spec.
pub fn is_multiplier_minimal(spec: &CyclicComplexSpec) -> bool {
    let n = spec.n();
    (2..n)
        .filter(|&u| gcd(u, n) == 1)
        .all(|u| spec.affine_image(u, 0).expect("unit multiplier") >= *spec)
}

/// One isomorphism class: its smallest enumerated spec and its topology.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct IsoClass {
    pub spec: CyclicComplexSpec,
    pub canonical: CanonicalForm,
    pub report: SurfaceReport,
}

/// Groups specs by canonical form.
pub fn isomorphism_classes<I>(specs: I) -> Vec<IsoClass>
where
    I: IntoParallelIterator<Item = CyclicComplexSpec>,
{
    let keyed: Vec<(CanonicalForm, CyclicComplexSpec, SurfaceReport)> = specs
        .into_par_iter()
        .map(|spec| {
            let s = expand(&spec).expect("enumerated specs are surfaces");
            (canonical_form(&s), spec, classify(&s))
        })
        .collect();
    let mut classes: HashMap<CanonicalForm, IsoClass> = HashMap::new();
    for (canonical, spec, report) in keyed {
        let entry = classes
            .entry(canonical.clone())
            .or_insert_with(|| IsoClass {
                spec: spec.clone(),
                canonical,
                report,
            });
        if spec < entry.spec {
            entry.spec = spec;
        }
    }
    let mut out: Vec<IsoClass> = classes.into_values().collect();
    out.sort_by(|a, b| a.spec.cmp(&b.spec));
    out
}

/// Isomorphism classes of connected cyclic triangulations on `n` vertices.
pub fn census_classes(n: u32) -> Vec<IsoClass> {
    isomorphism_classes(
        enumerate_specs(n)
            .into_par_iter()
            .filter(is_multiplier_minimal)
            .collect::<Vec<_>>(),
    )
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CensusRow {
    pub n: u32,
    pub orientable: bool,
    pub genus: u32,
    pub type_count: u32,
}

impl CensusRow {
    fn sort_key(&self) -> (u32, &'static str, u32) {
        (self.n, self.label(), self.genus)
    }

    fn label(&self) -> &'static str {
        if self.orientable {
            "orientable"
        } else {
            "nonorientable"
        }
    }
}

impl fmt::Display for CensusRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {} {} {}",
            self.n,
            self.label(),
            self.genus,
            self.type_count
        )
    }
}

/// Rows of `classes` aggregated by orientability and genus, sorted by
/// `(n, label, genus)` with the label compared as text.
pub fn census_rows(n: u32, classes: &[IsoClass]) -> Vec<CensusRow> {
    let mut counts: BTreeMap<(bool, u32), u32> = BTreeMap::new();
    for c in classes {
        let genus = c.report.genus.expect("connected surface");
        *counts.entry((c.report.orientable, genus)).or_default() += 1;
    }
    let mut rows: Vec<CensusRow> = counts
        .into_iter()
        .map(|((orientable, genus), type_count)| CensusRow {
            n,
            orientable,
            genus,
            type_count,
        })
        .collect();
    rows.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));
    rows
}

pub fn census(n: u32) -> Vec<CensusRow> {
    census_rows(n, &census_classes(n))
}

/// `(total, orientable, nonorientable)` over `4 <= n <= n_max`.
pub fn census_totals(n_max: u32) -> (u32, u32, u32) {
    let (mut or, mut non) = (0, 0);
    for n in 4..=n_max {
        for row in census(n) {
            if row.orientable {
                or += row.type_count;
            } else {
                non += row.type_count;
            }
        }
    }
    (or + non, or, non)
}

/// Isomorphism classes of cyclic 7-equivelar triangulations with
/// `4 <= n <= n_max`, as `(n, smallest spec)`.
pub fn classify_q7(n_max: u32) -> Vec<(u32, CyclicComplexSpec)> {
    let opts = EnumerateOptions {
        degree: Some(7),
        ..Default::default()
    };
    (4..=n_max)
        .flat_map(|n| {
            isomorphism_classes(enumerate_specs_with(n, opts))
                .into_iter()
                .map(move |c| (n, c.spec))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rows(n: u32) -> Vec<String> {
        census(n).iter().map(|r| r.to_string()).collect()
    }

    #[test]
    fn small_counts() {
        assert_eq!(enumerate_specs(4).len(), 1);
        assert!(enumerate_specs(5).is_empty());
        assert_eq!(rows(7), ["7 orientable 1 1"]);
        assert_eq!(rows(10), ["10 nonorientable 2 1", "10 orientable 1 1"]);
    }

    #[test]
    fn census_12() {
        assert_eq!(
            rows(12),
            [
                "12 nonorientable 8 5",
                "12 orientable 1 4",
                "12 orientable 2 2",
                "12 orientable 5 3"
            ]
        );
    }

    #[test]
    fn enumeration_is_shift_and_multiplier_closed() {
        let specs: BTreeSet<_> = enumerate_specs(13).into_iter().collect();
        for s in &specs {
            assert!(s.expected_degree() % 3 != 2, "{s}");
            for u in [2, 5, 12] {
                assert!(specs.contains(&s.affine_image(u, 3).unwrap()));
            }
        }
    }

    #[test]
    fn degree_filter() {
        let opts = EnumerateOptions {
            degree: Some(7),
            ..Default::default()
        };
        let q7 = enumerate_specs_with(12, opts);
        assert!(!q7.is_empty());
        assert!(q7.iter().all(|s| s.expected_degree() == 7));
        let all: Vec<_> = enumerate_specs(12)
            .into_iter()
            .filter(|s| s.expected_degree() == 7)
            .collect();
        assert_eq!(q7, all);
    }

    #[test]
    fn pinched_and_disconnected_flags_add_complexes() {
        let wide = EnumerateOptions {
            allow_pinched: true,
            allow_disconnected: true,
            ..Default::default()
        };
        let base = enumerate_specs(12);
        let more = enumerate_specs_with(12, wide);
        assert!(more.len() > base.len());
        assert!(base.iter().all(|s| more.contains(s)));
        for s in &more {
            let r = classify(&expand(s).unwrap());
            assert_eq!(base.contains(s), r.is_surface(), "{s}");
        }
    }

    #[test]
    fn deterministic() {
        assert_eq!(census(15), census(15));
    }
}
