//! Fundamental domains of the `[0,1,2]`-family.
//!
//! A seed is a tree of orbit generators glued edge to edge, rooted at the leaf
//! `[0,1,2]`. Its cyclic images, glued along the band `[0,1],[1,2],...`, give
//! the whole complex exactly when every edge orbit is hit twice.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::complex::{
    difference_class, is_short_orbit, normalize_triangle, orbit_representative, residue,
    CyclicComplexSpec, Edge, Triangle, Vertex,
};
use crate::error::{Error, Result};
use crate::surface::{edge, expand, facet_edges};

/// How the upper boundary path returns to vertex `2`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Closing {
    /// The differences already sum to `2`.
    Closed,
    /// Two equal differences `-(V-2)/2`, `V` the running sum.
    Paired,
    /// `-(V-2)/2 + n/2` then `-(V-2)/2 - n/2`.
    PairedHalfShift,
    /// One difference `2 - V`, a translate of `[0, n/2]` when admissible.
    HalfTurn,
    /// The fan covers every path edge; these triangles are appended verbatim.
    Triangles(Vec<[i64; 3]>),
}

/// The upper boundary path `0 -> d1 -> d1+d2 -> ...` of a pathlike seed, all
/// of whose non-root triangles contain vertex `2`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DifferenceSequence {
    pub diffs: Vec<i64>,
    pub closing: Closing,
}

impl DifferenceSequence {
    pub fn new(diffs: Vec<i64>, closing: Closing) -> Self {
        Self { diffs, closing }
    }

    /// The full difference list after applying the closing rule.
    pub fn closed_diffs(&self, n: u32) -> Result<Vec<i64>> {
        let mut d = self.diffs.clone();
        let v: i64 = d.iter().sum();
        let half = |w: i64| {
            if w % 2 == 0 {
                Ok(w / 2)
            } else {
                Err(Error::Parameter(format!(
                    "closing needs an even running sum, got {}",
                    w + 2
                )))
            }
        };
        match &self.closing {
            Closing::Closed | Closing::Triangles(_) => {}
            Closing::Paired => {
                let c = half(v - 2)?;
                d.extend([-c, -c]);
            }
            Closing::PairedHalfShift => {
                if !n.is_multiple_of(2) {
                    return Err(Error::Parameter(format!(
                        "half shift needs even n, got {n}"
                    )));
                }
                let c = half(v - 2)?;
                let h = n as i64 / 2;
                d.extend([-c + h, -c - h]);
            }
            Closing::HalfTurn => d.push(2 - v),
        }
        Ok(d)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Seed {
    n: u32,
    /// Sorted triangles; the first is `[0,1,2]`.
    triangles: Vec<Triangle>,
}

impl Seed {
    pub fn new(n: u32, triangles: impl IntoIterator<Item = [i64; 3]>) -> Result<Self> {
        let triangles = triangles
            .into_iter()
            .map(|t| {
                normalize_triangle(n, t)
                    .map_err(|_| Error::Collision(format!("triangle {t:?} degenerates mod {n}")))
            })
            .collect::<Result<Vec<_>>>()?;
        if triangles.first() != Some(&[0, 1, 2]) {
            return Err(Error::MalformedSeed(
                "the first triangle must be [0,1,2]".into(),
            ));
        }
        Ok(Self { n, triangles })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn triangles(&self) -> &[Triangle] {
        &self.triangles
    }

    /// Index of the translate of `[0, n/3, 2n/3]`, if any.
    pub fn short_triangle(&self) -> Option<usize> {
        self.triangles
            .iter()
            .position(|t| is_short_orbit(self.n, t))
    }

    pub fn reduced(&self) -> bool {
        self.short_triangle().is_some()
    }

    /// Triangles of the reduced seed (all triangles when there is no short one).
    pub fn reduced_triangles(&self) -> Vec<Triangle> {
        let short = self.short_triangle();
        self.triangles
            .iter()
            .enumerate()
            .filter(|(i, _)| Some(*i) != short)
            .map(|(_, t)| *t)
            .collect()
    }

    /// Interior edges of the reduced seed.
    pub fn interior_edges(&self) -> Vec<Edge> {
        edge_table(&self.reduced_triangles())
            .into_iter()
            .filter(|(_, fs)| fs.len() >= 2)
            .map(|(e, _)| e)
            .collect()
    }

    /// Boundary edges of the reduced seed, with the induced direction of a
    /// coherent orientation that runs `0 -> 1 -> 2` on the root.
    pub fn boundary_edges(&self) -> Vec<(Vertex, Vertex)> {
        let tris = self.reduced_triangles();
        let Some(oriented) = orient_tree(&tris) else {
            return Vec::new();
        };
        let table = edge_table(&tris);
        let mut out = Vec::new();
        for t in &oriented {
            for (a, b) in [(t[0], t[1]), (t[1], t[2]), (t[2], t[0])] {
                if table[&edge(a, b)].len() == 1 {
                    out.push((a, b));
                }
            }
        }
        out
    }

    pub fn to_spec(&self) -> Result<CyclicComplexSpec> {
        CyclicComplexSpec::new(self.n, self.triangles.iter().map(|t| t.map(i64::from)))
    }
}

fn edge_table(tris: &[Triangle]) -> BTreeMap<Edge, Vec<usize>> {
    let mut table: BTreeMap<Edge, Vec<usize>> = BTreeMap::new();
    for (i, t) in tris.iter().enumerate() {
        for e in facet_edges(t) {
            table.entry(e).or_default().push(i);
        }
    }
    table
}

/// Coherent cyclic orders for a tree of triangles, rooted at `tris[0]` in the
/// order `t[0] -> t[1] -> t[2]`. `None` if the gluing is not a tree.
fn orient_tree(tris: &[Triangle]) -> Option<Vec<[Vertex; 3]>> {
    if tris.is_empty() {
        return Some(Vec::new());
    }
    let table = edge_table(tris);
    if table.values().any(|fs| fs.len() > 2) {
        return None;
    }
    let glued = table.values().filter(|fs| fs.len() == 2).count();
    if glued + 1 != tris.len() {
        return None;
    }
    let mut out: Vec<Option<[Vertex; 3]>> = vec![None; tris.len()];
    out[0] = Some(tris[0]);
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        let t = out[i].unwrap();
        for (a, b) in [(t[0], t[1]), (t[1], t[2]), (t[2], t[0])] {
            for &j in &table[&edge(a, b)] {
                if out[j].is_none() {
                    let w = tris[j].iter().copied().find(|&x| x != a && x != b).unwrap();
                    out[j] = Some([b, a, w]);
                    queue.push_back(j);
                }
            }
        }
    }
    out.into_iter().collect()
}

/// Builds the fan seed around vertex `2` described by `seq`.
pub fn seed_from_differences(n: u32, seq: &DifferenceSequence) -> Result<Seed> {
    if n < 4 {
        return Err(Error::TooFewVertices(n));
    }
    let diffs = seq.closed_diffs(n)?;
    let mut path = vec![0i64];
    for d in &diffs {
        path.push(path.last().unwrap() + d);
    }
    let explicit = match &seq.closing {
        Closing::Triangles(t) => Some(t),
        _ => None,
    };
    let m = path.len() - 1;
    let fan_len = if explicit.is_some() {
        m
    } else {
        if residue(path[m], n) != 2 {
            return Err(Error::Parameter(format!(
                "differences end at {} mod {n}, not at 2",
                residue(path[m], n)
            )));
        }
        m.saturating_sub(1)
    };
    let mut seen: HashMap<Vertex, i64> = HashMap::from([(1, 1), (2, 2)]);
    for &v in path.iter().take(fan_len + 1) {
        if let Some(prev) = seen.insert(residue(v, n), v) {
            return Err(Error::Collision(format!(
                "path vertices {prev} and {v} agree mod {n}"
            )));
        }
    }
    let mut tris = vec![[0, 1, 2]];
    tris.extend((0..fan_len).map(|i| [2, path[i], path[i + 1]]));
    if let Some(extra) = explicit {
        tris.extend(extra.iter().copied());
    }
    Seed::new(n, tris)
}

/// Grows a seed from `[0,1,2]` by crossing boundary edges into new orbits,
/// preferring the newest edge through vertex `2` (so fans are reproduced).
pub fn seed_from_spec(spec: &CyclicComplexSpec) -> Result<Seed> {
    if !spec.contains_orbit([0, 1, 2]) {
        return Err(Error::NotInFamily);
    }
    let n = spec.n();
    let surface = expand(spec)?;
    let index: HashMap<Triangle, u32> = surface
        .facets()
        .iter()
        .enumerate()
        .map(|(i, t)| (*t, i as u32))
        .collect();
    let mut used = BTreeSet::from([[0, 1, 2]]);
    let mut tris: Vec<Triangle> = vec![[0, 1, 2]];
    let mut open: Vec<(Edge, u32)> = facet_edges(&[0, 1, 2])
        .into_iter()
        .map(|e| (e, index[&[0, 1, 2]]))
        .collect();
    while let Some(pos) = open
        .iter()
        .rposition(|(e, _)| e.contains(&2))
        .or_else(|| open.len().checked_sub(1))
    {
        let (e, f) = open.remove(pos);
        let g = surface.across(f, e[0], e[1]);
        let t = surface.facets()[g as usize];
        let rep = orbit_representative(n, t.map(i64::from))?;
        if used.insert(rep) {
            tris.push(t);
            open.extend(
                facet_edges(&t)
                    .into_iter()
                    .filter(|x| *x != e)
                    .map(|x| (x, g)),
            );
        }
    }
    if used.len() != spec.generators().len() {
        return Err(Error::MalformedSeed(format!(
            "reached {} of {} orbits",
            used.len(),
            spec.generators().len()
        )));
    }
    Seed::new(n, tris.into_iter().map(|t| t.map(i64::from)))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Rule {
    S0,
    S1,
    S2,
    S3,
    S4,
    S5,
    SThird,
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Rule::S0 => "S0",
            Rule::S1 => "S1",
            Rule::S2 => "S2",
            Rule::S3 => "S3",
            Rule::S4 => "S4",
            Rule::S5 => "S5",
            Rule::SThird => "S1/3",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RuleCheck {
    pub rule: Rule,
    pub passed: bool,
    /// The offending edge, when the failure is witnessed by one.
    pub witness: Option<Edge>,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeedReport {
    pub n: u32,
    pub reduced: bool,
    pub checks: Vec<RuleCheck>,
}

impl SeedReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn check(&self, rule: Rule) -> Option<&RuleCheck> {
        self.checks.iter().find(|c| c.rule == rule)
    }

    pub fn failed_rules(&self) -> Vec<Rule> {
        self.checks
            .iter()
            .filter(|c| !c.passed)
            .map(|c| c.rule)
            .collect()
    }
}

impl fmt::Display for SeedReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            write!(f, "{} {}", c.rule, if c.passed { "pass" } else { "fail" })?;
            if let Some(w) = c.witness {
                write!(f, " edge={},{}", w[0], w[1])?;
            }
            if !c.detail.is_empty() {
                write!(f, " ({})", c.detail)?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

fn check(rule: Rule, failure: Option<(Option<Edge>, String)>) -> RuleCheck {
    match failure {
        None => RuleCheck {
            rule,
            passed: true,
            witness: None,
            detail: String::new(),
        },
        Some((witness, detail)) => RuleCheck {
            rule,
            passed: false,
            witness,
            detail,
        },
    }
}

/// Checks S0 to S5, and S1/3 for a seed containing a short-orbit triangle.
/// The short triangle is split off first and its glue edge counted as a
/// boundary edge of the reduced seed.
pub fn validate_seed(seed: &Seed, n: u32) -> SeedReport {
    let seed = if seed.n == n {
        seed.clone()
    } else {
        match Seed::new(n, seed.triangles.iter().map(|t| t.map(i64::from))) {
            Ok(s) => s,
            Err(e) => {
                let mut checks = vec![check(Rule::S0, Some((None, e.to_string())))];
                for r in [Rule::S1, Rule::S2, Rule::S3, Rule::S4, Rule::S5] {
                    checks.push(check(r, Some((None, "not checked".into()))));
                }
                return SeedReport {
                    n,
                    reduced: false,
                    checks,
                };
            }
        }
    };
    let class = |e: &Edge| difference_class(n, e[0] as i64, e[1] as i64);
    let reduced = seed.reduced();
    let tris = seed.reduced_triangles();
    let table = edge_table(&tris);
    let boundary: Vec<Edge> = table
        .iter()
        .filter(|(_, f)| f.len() == 1)
        .map(|(e, _)| *e)
        .collect();
    let interior: Vec<Edge> = table
        .iter()
        .filter(|(_, f)| f.len() >= 2)
        .map(|(e, _)| *e)
        .collect();
    let mut checks = Vec::new();

    // S0
    let mut s0 = None;
    let mut orbits = BTreeMap::new();
    for t in seed.triangles() {
        let rep = orbit_representative(n, t.map(i64::from)).expect("normalized");
        if let Some(prev) = orbits.insert(rep, *t) {
            s0 = Some((None, format!("{prev:?} and {t:?} lie in one orbit")));
            break;
        }
    }
    if s0.is_none()
        && seed
            .triangles()
            .iter()
            .filter(|t| is_short_orbit(n, t))
            .count()
            > 1
    {
        s0 = Some((None, "more than one short-orbit triangle".into()));
    }
    if s0.is_none() && orient_tree(seed.triangles()).is_none() {
        s0 = Some((None, "triangles do not form a tree".into()));
    }
    if s0.is_none() {
        let root_glued = facet_edges(&[0, 1, 2])
            .iter()
            .filter(|e| table.get(*e).is_some_and(|f| f.len() == 2))
            .count();
        if root_glued != 1 {
            s0 = Some((None, "[0,1,2] is not a leaf".into()));
        }
    }
    if let Some(i) = seed.short_triangle() {
        let t = seed.triangles()[i];
        let glue = facet_edges(&t)
            .into_iter()
            .filter(|e| table.contains_key(e))
            .count();
        if s0.is_none() && glue != 1 {
            s0 = Some((None, "short-orbit triangle is not a leaf".into()));
        }
    }
    checks.push(check(Rule::S0, s0));

    let half = n.is_multiple_of(2).then_some(n / 2);
    let third = (reduced && n.is_multiple_of(3)).then_some(n / 3);
    let counted = boundary.len() - usize::from(third.is_some());
    let halves: Vec<Edge> = boundary
        .iter()
        .copied()
        .filter(|e| Some(class(e)) == half)
        .collect();

    // S1, S2
    let s1 = (counted.is_multiple_of(2) && !halves.is_empty()).then(|| {
        (
            Some(halves[0]),
            "even boundary with an edge of difference n/2".to_string(),
        )
    });
    checks.push(check(Rule::S1, s1));
    let s2 = if counted % 2 == 1 {
        match halves.len() {
            1 => None,
            0 if half.is_none() => Some((None, "odd boundary needs even n".to_string())),
            c => Some((
                halves.get(1).copied(),
                format!("odd boundary has {c} edges of difference n/2"),
            )),
        }
    } else {
        None
    };
    checks.push(check(Rule::S2, s2));

    // S3
    let mut by_class: BTreeMap<u32, Vec<Edge>> = BTreeMap::new();
    for e in &boundary {
        by_class.entry(class(e)).or_default().push(*e);
    }
    let interior_classes: BTreeSet<u32> = interior.iter().map(class).collect();
    let mut s3 = None;
    for (d, es) in &by_class {
        if Some(*d) == half || Some(*d) == third {
            continue;
        }
        if es.len() != 2 {
            s3 = Some((
                Some(es[0]),
                format!("difference {d} occurs {} times on the boundary", es.len()),
            ));
            break;
        }
    }
    if s3.is_none() {
        if let Some(e) = boundary
            .iter()
            .find(|e| interior_classes.contains(&class(e)))
        {
            s3 = Some((
                Some(*e),
                format!("difference {} is also interior", class(e)),
            ));
        }
    }
    checks.push(check(Rule::S3, s3));

    // S4
    let mut s4 = None;
    let mut seen: BTreeMap<u32, Edge> = BTreeMap::new();
    for e in &interior {
        let d = class(e);
        if Some(d) == half {
            s4 = Some((Some(*e), format!("interior edge of difference n/2 = {d}")));
            break;
        }
        if let Some(prev) = seen.insert(d, *e) {
            s4 = Some((
                Some(*e),
                format!("interior edges {prev:?} and {e:?} share difference {d}"),
            ));
            break;
        }
        if by_class.contains_key(&d) {
            s4 = Some((
                Some(*e),
                format!("interior difference {d} is also on the boundary"),
            ));
            break;
        }
    }
    checks.push(check(Rule::S4, s4));

    // S5
    let s5 = (boundary.len() % 2 != tris.len() % 2).then(|| {
        (
            None,
            format!(
                "{} boundary edges, {} triangles",
                boundary.len(),
                tris.len()
            ),
        )
    });
    checks.push(check(Rule::S5, s5));

    if reduced {
        let thirds = third.and_then(|d| by_class.get(&d)).map_or(0, Vec::len);
        let s = (thirds != 1).then(|| {
            (
                third
                    .and_then(|d| by_class.get(&d))
                    .and_then(|v| v.get(1).copied()),
                format!("{thirds} boundary translates of [0,n/3]"),
            )
        });
        checks.push(check(Rule::SThird, s));
    }
    SeedReport { n, reduced, checks }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum OrientabilityReason {
    OddN,
    /// A boundary pair whose translate lies in the same parity class of
    /// copies, i.e. glues a Möbius band.
    MobiusPair {
        first: Edge,
        second: Edge,
    },
    /// A translate of `[0, n/2]` with `n/2` odd.
    HalfEdge(Edge),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum PredictedOrientation {
    Orientable,
    NonOrientable(OrientabilityReason),
}

impl PredictedOrientation {
    pub fn is_orientable(&self) -> bool {
        matches!(self, PredictedOrientation::Orientable)
    }
}

impl fmt::Display for PredictedOrientation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use OrientabilityReason::*;
        match self {
            PredictedOrientation::Orientable => f.write_str("orientable"),
            PredictedOrientation::NonOrientable(OddN) => f.write_str("nonorientable odd-n"),
            PredictedOrientation::NonOrientable(MobiusPair { first, second }) => write!(
                f,
                "nonorientable mobius-pair {},{} {},{}",
                first[0], first[1], second[0], second[1]
            ),
            PredictedOrientation::NonOrientable(HalfEdge(e)) => {
                write!(f, "nonorientable half-edge {},{}", e[0], e[1])
            }
        }
    }
}

/// Parity argument on the copies `seed + j`: the band forces copy `j` to carry
/// sign `(-1)^j`, so each boundary pair fixes the parity of its translation.
pub fn predicted_orientability(seed: &Seed, n: u32) -> PredictedOrientation {
    use OrientabilityReason::*;
    if n % 2 == 1 {
        return PredictedOrientation::NonOrientable(OddN);
    }
    let nn = n as i64;
    let boundary = seed.boundary_edges();
    let mut by_class: BTreeMap<u32, Vec<(Vertex, Vertex)>> = BTreeMap::new();
    for &(a, b) in &boundary {
        by_class
            .entry(difference_class(n, a as i64, b as i64))
            .or_default()
            .push((a, b));
    }
    for (d, es) in by_class {
        if d == n / 2 {
            if (n / 2) % 2 == 1 {
                let (a, b) = es[0];
                return PredictedOrientation::NonOrientable(HalfEdge(edge(a, b)));
            }
            continue;
        }
        let [(x1, y1), (x2, y2)] = es[..] else {
            continue;
        };
        let (x1, y1, x2, y2) = (x1 as i64, y1 as i64, x2 as i64, y2 as i64);
        let same = (y1 - x1).rem_euclid(nn) == (y2 - x2).rem_euclid(nn);
        let j = if same { x2 - x1 } else { y2 - x1 }.rem_euclid(nn);
        let ok = if same { j % 2 == 1 } else { j % 2 == 0 };
        if !ok {
            return PredictedOrientation::NonOrientable(MobiusPair {
                first: edge(x1 as u32, y1 as u32),
                second: edge(x2 as u32, y2 as u32),
            });
        }
    }
    PredictedOrientation::Orientable
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::classify;

    fn s4() -> DifferenceSequence {
        DifferenceSequence::new(vec![5, 5, 6, 6, 7, 7], Closing::Paired)
    }

    #[test]
    fn s4_seed_shape() {
        let seed = seed_from_differences(69, &s4()).unwrap();
        assert_eq!(seed.triangles().len(), 8);
        assert_eq!(seed.triangles()[7], [2, 19, 36]);
        let interior: Vec<u32> = seed
            .interior_edges()
            .iter()
            .map(|e| difference_class(69, e[0] as i64, e[1] as i64))
            .collect();
        assert_eq!(
            interior.iter().copied().collect::<BTreeSet<_>>(),
            BTreeSet::from([2, 3, 8, 14, 20, 27, 34])
        );
        assert_eq!(seed.boundary_edges().len(), 10);
    }

    #[test]
    fn s4_rules() {
        let seed = seed_from_differences(69, &s4()).unwrap();
        assert!(validate_seed(&seed, 69).passed());
        let at = |n| validate_seed(&seed_from_differences(n, &s4()).unwrap(), n);
        assert_eq!(at(68).failed_rules(), vec![Rule::S4]);
        assert_eq!(at(54).failed_rules(), vec![Rule::S4]);
        assert_eq!(at(61).failed_rules(), vec![Rule::S4]);
        let r = at(51);
        assert!(r.reduced && r.passed(), "{r}");
    }

    #[test]
    fn closing_rules() {
        let b9 = DifferenceSequence::new(vec![5, 5], Closing::HalfTurn);
        assert_eq!(b9.closed_diffs(16).unwrap(), vec![5, 5, -8]);
        let seed = seed_from_differences(16, &b9).unwrap();
        assert_eq!(seed.triangles(), &[[0, 1, 2], [0, 2, 5], [2, 5, 10]]);
        let hs = DifferenceSequence::new(vec![], Closing::PairedHalfShift);
        assert_eq!(hs.closed_diffs(8).unwrap(), vec![5, -3]);
        assert!(matches!(
            DifferenceSequence::new(vec![5], Closing::Paired).closed_diffs(20),
            Err(Error::Parameter(_))
        ));
    }

    #[test]
    fn collisions_are_reported() {
        let seq = DifferenceSequence::new(vec![5, 5, 6, 6], Closing::Paired);
        assert!(matches!(
            seed_from_differences(10, &seq),
            Err(Error::Collision(_))
        ));
    }

    #[test]
    fn seed_round_trips_through_spec() {
        let spec = CyclicComplexSpec::new(16, [[0, 1, 2], [0, 2, 5], [0, 3, 8]]).unwrap();
        let seed = seed_from_spec(&spec).unwrap();
        assert_eq!(seed.to_spec().unwrap(), spec);
        assert!(validate_seed(&seed, 16).passed());
        let not = CyclicComplexSpec::new(13, [[0, 1, 3], [0, 1, 5]]);
        if let Ok(s) = not {
            assert!(matches!(seed_from_spec(&s), Err(Error::NotInFamily)));
        }
    }

    #[test]
    fn orientability_parity() {
        for (n, gens, want) in [
            (8u32, vec![[0, 1, 2], [0, 2, 5]], true),
            (10, vec![[0, 1, 2], [0, 2, 6]], false),
            (16, vec![[0, 1, 2], [0, 2, 5], [0, 3, 8]], true),
            (20, vec![[0, 1, 2], [0, 2, 6], [0, 4, 10]], false),
            (12, vec![[0, 1, 2], [0, 2, 6], [0, 4, 8]], true),
        ] {
            let spec = CyclicComplexSpec::new(n, gens).unwrap();
            let seed = seed_from_spec(&spec).unwrap();
            let got = predicted_orientability(&seed, n).is_orientable();
            assert_eq!(got, want, "n={n}");
            assert_eq!(classify(&expand(&spec).unwrap()).orientable, want, "n={n}");
        }
    }
}
