//! Named infinite series of cyclic triangulations.
//!
//! Descriptors follow `NAME[:k=<int>][:n=<int>][:t=<int>][:d=<int>,...]`.
//! For the one-parameter lines of `U`, `V`, `W`, `X`, `Xbar`, `Y`, `Z` the
//! offset `t` (called `r` or `s` for some series) and `n` determine each other.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::complex::CyclicComplexSpec;
use crate::error::{Error, Result};
use crate::seed::{seed_from_differences, validate_seed, Closing, DifferenceSequence, Seed};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum SeriesName {
    A6,
    B9,
    C10,
    C12,
    D10,
    D12,
    E10,
    E12,
    F12,
    G18,
    H18,
    I18,
    S,
    T,
    TBar,
    U,
    UBar1,
    V,
    W,
    X,
    XBar,
    Y,
    Z,
    P,
    GTilde,
}

use SeriesName::*;

impl SeriesName {
    pub const ALL: [SeriesName; 25] = [
        A6, B9, C10, C12, D10, D12, E10, E12, F12, G18, H18, I18, S, T, TBar, U, UBar1, V, W, X,
        XBar, Y, Z, P, GTilde,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            A6 => "A6",
            B9 => "B9",
            C10 => "C10",
            C12 => "C12",
            D10 => "D10",
            D12 => "D12",
            E10 => "E10",
            E12 => "E12",
            F12 => "F12",
            G18 => "G18",
            H18 => "H18",
            I18 => "I18",
            S => "S",
            T => "T",
            TBar => "Tbar",
            U => "U",
            UBar1 => "Ubar1",
            V => "V",
            W => "W",
            X => "X",
            XBar => "Xbar",
            Y => "Y",
            Z => "Z",
            P => "P",
            GTilde => "Gtilde",
        }
    }

    pub fn takes_k(self) -> bool {
        matches!(self, S | T | TBar | U | V | W | X | XBar | Y | Z | P)
    }

    /// `(base, step)` with `n = base + step * t` for the offset-driven series.
    fn line(self, k: i64) -> Option<(i64, i64)> {
        let a = 2 * k * k + 4 * k - 6;
        Some(match self {
            U => (2 * k * k + 18 * k - 4, 4),
            V => (4 * k * k + 16 * k - 4, 8),
            W => (3 * (k * k + 9 * k - 2) / 2, 3),
            X => (3 * (k * k + 4 * k - 1), 6),
            XBar => (3 * (a - 4), 12),
            Y => (6 * (k * k + 7 * k - 10), 12),
            Z => (6 * (2 * k * k + 4 * k - 8), 24),
            _ => return None,
        })
    }

    fn min_k(self) -> i64 {
        match self {
            Y | Z | XBar => 2,
            P => 3,
            _ => 1,
        }
    }
}

impl fmt::Display for SeriesName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for SeriesName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let alias = match s {
            "T̄" | "TBar" => "Tbar",
            "Ū1" | "UBar1" | "Ubar" => "Ubar1",
            "X̄" | "XBar" => "Xbar",
            "G̃" | "GTilde" | "G" => "Gtilde",
            other => other,
        };
        Self::ALL
            .iter()
            .copied()
            .find(|n| n.tag() == alias)
            .ok_or_else(|| Error::UnknownSeries(s.to_string()))
    }
}

/// A fully resolved series instance.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesParams {
    pub name: SeriesName,
    pub k: Option<i64>,
    pub n: i64,
    /// Offset `t` (`r` for `U`, `s` for `V`) of the offset-driven series.
    pub t: Option<i64>,
    /// Free differences of `Gtilde`.
    pub diffs: Vec<i64>,
}

impl SeriesParams {
    pub fn new(name: SeriesName, k: Option<i64>, n: i64) -> Self {
        Self {
            name,
            k,
            n,
            t: None,
            diffs: Vec::new(),
        }
    }

    /// Parses and resolves a descriptor; fails on unknown names, missing or
    /// inconsistent parameters and inadmissible `n`.
    pub fn parse(descriptor: &str) -> Result<Self> {
        let mut parts = descriptor.trim().split(':');
        let name: SeriesName = parts.next().unwrap_or("").parse()?;
        let (mut k, mut n, mut t, mut diffs) = (None, None, None, Vec::new());
        for part in parts {
            let (key, value) = part.split_once('=').ok_or_else(|| Error::Parse {
                line: 1,
                msg: format!("expected key=value, found `{part}`"),
            })?;
            let int = |v: &str| {
                v.parse::<i64>().map_err(|_| Error::Parse {
                    line: 1,
                    msg: format!("`{v}` is not an integer"),
                })
            };
            match key {
                "k" => k = Some(int(value)?),
                "n" => n = Some(int(value)?),
                "t" | "r" | "s" => t = Some(int(value)?),
                "d" => {
                    diffs = value.split(',').map(int).collect::<Result<_>>()?;
                }
                _ => {
                    return Err(Error::Parse {
                        line: 1,
                        msg: format!("unknown key `{key}`"),
                    })
                }
            }
        }
        resolve(name, k, n, t, diffs)
    }

    pub fn descriptor(&self) -> String {
        let mut s = self.name.tag().to_string();
        if let Some(k) = self.k {
            s += &format!(":k={k}");
        }
        s += &format!(":n={}", self.n);
        if let Some(t) = self.t {
            s += &format!(":t={t}");
        }
        if !self.diffs.is_empty() {
            let d: Vec<String> = self.diffs.iter().map(i64::to_string).collect();
            s += &format!(":d={}", d.join(","));
        }
        s
    }
}

impl fmt::Display for SeriesParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.descriptor())
    }
}

fn resolve(
    name: SeriesName,
    k: Option<i64>,
    n: Option<i64>,
    t: Option<i64>,
    diffs: Vec<i64>,
) -> Result<SeriesParams> {
    let missing = |what: &str| Error::Parameter(format!("{name} needs {what}"));
    if name.takes_k() {
        let k = k.ok_or_else(|| missing("k"))?;
        if k < name.min_k() {
            return Err(Error::Parameter(format!(
                "{name} needs k >= {}, got {k}",
                name.min_k()
            )));
        }
        if name == P && k % 2 == 0 {
            return Err(Error::Parameter(format!("P needs odd k, got {k}")));
        }
    } else if k.is_some() {
        return Err(Error::Parameter(format!("{name} takes no k")));
    }
    if name == GTilde && diffs.is_empty() {
        return Err(missing("d=<differences>"));
    }
    let line = k.and_then(|k| name.line(k));
    let (n, t) = match (line, n, t) {
        (Some((base, step)), Some(n), t) => {
            let off = n - base;
            if off < 0 || off % step != 0 {
                return Err(Error::Range {
                    series: name.to_string(),
                    n,
                    reason: format!("n must be {base} + {step}t with t >= 0"),
                });
            }
            if t.is_some_and(|t| t != off / step) {
                return Err(Error::Parameter(format!(
                    "t={} disagrees with n={n}",
                    t.unwrap()
                )));
            }
            (n, Some(off / step))
        }
        (Some((base, step)), None, Some(t)) => {
            if t < 0 {
                return Err(Error::Parameter(format!("t must be >= 0, got {t}")));
            }
            (base + step * t, Some(t))
        }
        (_, Some(n), None) => (n, None),
        (None, Some(_), Some(_)) => return Err(Error::Parameter(format!("{name} takes no t"))),
        (_, None, _) => return Err(missing("n")),
    };
    let params = SeriesParams {
        name,
        k,
        n,
        t,
        diffs,
    };
    Ok(params)
}

/// Admissible `n` of a series, as a rule plus explicit exceptions.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AdmissibleSet {
    pub lower: i64,
    pub upper: Option<i64>,
    /// `n ≡ residue (mod modulus)`; modulus 1 imposes nothing.
    pub modulus: i64,
    pub residue: i64,
    pub excluded: Vec<i64>,
    /// Admissible values outside the rule.
    pub extra: Vec<i64>,
    /// Admissible values at which a short triangle orbit appears.
    pub short: Vec<i64>,
    /// Set when no `n` is admissible.
    pub empty: Option<String>,
}

impl AdmissibleSet {
    fn from(lower: i64, modulus: i64, residue: i64) -> Self {
        Self {
            lower,
            upper: None,
            modulus,
            residue: residue.rem_euclid(modulus),
            excluded: Vec::new(),
            extra: Vec::new(),
            short: Vec::new(),
            empty: None,
        }
    }

    fn single(n: i64) -> Self {
        Self {
            upper: Some(n),
            ..Self::from(n, 1, 0)
        }
    }

    fn excluding(mut self, values: &[i64]) -> Self {
        self.excluded.extend_from_slice(values);
        self
    }

    pub fn contains(&self, n: i64) -> bool {
        self.violation(n).is_none()
    }

    pub fn is_short(&self, n: i64) -> bool {
        self.short.contains(&n)
    }

    /// The first violated rule, if any.
    pub fn violation(&self, n: i64) -> Option<String> {
        if let Some(reason) = &self.empty {
            return Some(reason.clone());
        }
        if self.extra.contains(&n) || self.short.contains(&n) {
            return None;
        }
        if n < self.lower {
            return Some(format!("below the lower bound {}", self.lower));
        }
        if let Some(u) = self.upper {
            if n > u {
                return Some(format!("above the upper bound {u}"));
            }
        }
        if n.rem_euclid(self.modulus) != self.residue {
            return Some(format!("n must be {} mod {}", self.residue, self.modulus));
        }
        if self.excluded.contains(&n) {
            return Some("forbidden value".to_string());
        }
        None
    }

    fn check(&self, name: SeriesName, n: i64) -> Result<()> {
        match self.violation(n) {
            None => Ok(()),
            Some(reason) => Err(Error::Range {
                series: name.to_string(),
                n,
                reason,
            }),
        }
    }

    /// All admissible values up to `max`.
    pub fn values_up_to(&self, max: i64) -> Vec<i64> {
        (4..=max).filter(|&n| self.contains(n)).collect()
    }
}

impl fmt::Display for AdmissibleSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(reason) = &self.empty {
            return write!(f, "empty ({reason})");
        }
        write!(f, "n >= {}", self.lower)?;
        if let Some(u) = self.upper {
            write!(f, ", n <= {u}")?;
        }
        if self.modulus > 1 {
            write!(f, ", n = {} mod {}", self.residue, self.modulus)?;
        }
        let list = |v: &[i64]| v.iter().map(i64::to_string).collect::<Vec<_>>().join(",");
        if !self.excluded.is_empty() {
            write!(f, ", excluded {{{}}}", list(&self.excluded))?;
        }
        if !self.extra.is_empty() {
            write!(f, ", extra {{{}}}", list(&self.extra))?;
        }
        if !self.short.is_empty() {
            write!(f, ", short orbit at {{{}}}", list(&self.short))?;
        }
        Ok(())
    }
}

/// `2 * sum_{i=2}^{k} (i + 3) = k^2 + 7k - 8`.
pub fn s_sum(k: i64) -> i64 {
    k * k + 7 * k - 8
}

/// `2 * sum_{i=2}^{k} (2i + 1) = 2k^2 + 4k - 6`.
pub fn t_sum(k: i64) -> i64 {
    2 * k * k + 4 * k - 6
}

fn pairs(values: impl IntoIterator<Item = i64>) -> Vec<i64> {
    values.into_iter().flat_map(|d| [d, d]).collect()
}

/// Integer differences `|x - y|` of every edge of a fan seed given by `diffs`
/// (before the closing differences are reduced mod `n`).
fn occurring_differences(closed: &[i64]) -> Vec<i64> {
    let mut path = vec![0i64];
    for d in closed {
        path.push(path.last().unwrap() + d);
    }
    let m = path.len() - 1;
    let mut out = vec![1, 2];
    for i in 0..m.saturating_sub(1) {
        for (a, b) in [(2, path[i]), (2, path[i + 1]), (path[i], path[i + 1])] {
            out.push((a - b).abs());
        }
    }
    out.sort_unstable();
    out.dedup();
    out
}

/// The admissible set of a Paired-closed seed of maximal difference `d`:
/// `n >= d + 4`, minus doubles and sums of two distinct occurring
/// differences below `2d + 1`; `3d/2` is kept as a short-orbit value.
fn paired_rule(closed: &[i64], lower: i64) -> AdmissibleSet {
    let occ = occurring_differences(closed);
    let d = *occ.last().unwrap();
    let mut set = AdmissibleSet::from(lower, 1, 0);
    for n in lower..=2 * d {
        let hit = occ
            .iter()
            .enumerate()
            .any(|(i, &x)| 2 * x == n || occ[i + 1..].iter().any(|&y| x + y == n));
        if hit {
            set.excluded.push(n);
        }
    }
    if d % 2 == 0 {
        let s = 3 * d / 2;
        set.excluded.retain(|&x| x != s);
        if s >= lower {
            set.short.push(s);
        } else {
            set.extra.push(s);
            set.short.push(s);
        }
    }
    set
}

fn s_diffs(k: i64) -> Vec<i64> {
    pairs(5..=k + 3)
}

fn odd_diffs(k: i64) -> Vec<i64> {
    pairs((2..=k).map(|i| 2 * i + 1))
}

pub fn valid_n(name: SeriesName, k: Option<i64>) -> Result<AdmissibleSet> {
    admissible_set(&SeriesParams::new(name, k, 0))
}

/// Admissible `n` for the series, `k` and differences of `p`; `p.n` is ignored.
pub fn admissible_set(p: &SeriesParams) -> Result<AdmissibleSet> {
    let mut set = rule_set(p)?;
    if difference_sequence(p).is_some() && !(p.k == Some(1) && matches!(p.name, S | T | TBar)) {
        refine_by_seed(p, &mut set);
    }
    Ok(set)
}

/// Number of rule-admissible values checked against the seed rules.
const SEED_SCAN: usize = 64;

/// Drops rule-admissible values whose seed violates S0 to S5 or S1/3. When
/// the last scanned values all fail, the failure is taken to be permanent.
fn refine_by_seed(p: &SeriesParams, set: &mut AdmissibleSet) {
    let line = p.k.and_then(|k| p.name.line(k));
    let mut failures = Vec::new();
    let mut scanned = Vec::new();
    let mut last_reason = String::new();
    let mut n = set
        .lower
        .min(set.short.iter().copied().min().unwrap_or(i64::MAX));
    while scanned.len() < SEED_SCAN && n < set.lower + 100_000 {
        if set.contains(n) && n >= 4 {
            let mut q = p.clone();
            q.n = n;
            q.t = line.map(|(base, step)| (n - base) / step);
            let report = series_seed(&q).map(|r| r.map(|seed| validate_seed(&seed, n as u32)));
            match report {
                Some(Ok(r)) if r.passed() => scanned.push(true),
                Some(Ok(r)) => {
                    let rules: Vec<String> =
                        r.failed_rules().iter().map(|x| x.to_string()).collect();
                    last_reason = format!("seed violates {}", rules.join(", "));
                    failures.push(n);
                    scanned.push(false);
                }
                _ => {
                    last_reason = "seed vertices collide".into();
                    failures.push(n);
                    scanned.push(false);
                }
            }
        }
        n += 1;
    }
    if scanned.len() >= 8 && scanned[scanned.len() - 8..].iter().all(|ok| !ok) {
        set.empty = Some(format!("{last_reason} for every n"));
        return;
    }
    set.short.retain(|x| !failures.contains(x));
    set.extra.retain(|x| !failures.contains(x));
    for f in failures {
        if !set.excluded.contains(&f) {
            set.excluded.push(f);
        }
    }
    set.excluded.sort_unstable();
}

fn rule_set(p: &SeriesParams) -> Result<AdmissibleSet> {
    let k = p.k.unwrap_or(0);
    if p.name.takes_k() {
        match p.k {
            None => return Err(Error::Parameter(format!("{} needs k", p.name))),
            Some(k) if k < p.name.min_k() => {
                return Err(Error::Parameter(format!(
                    "{} needs k >= {}, got {k}",
                    p.name,
                    p.name.min_k()
                )))
            }
            Some(k) if p.name == P && k % 2 == 0 => {
                return Err(Error::Parameter(format!("P needs odd k, got {k}")))
            }
            _ => {}
        }
    }
    Ok(match p.name {
        A6 => AdmissibleSet::from(8, 2, 0),
        B9 | UBar1 => AdmissibleSet::from(16, 4, 0),
        C10 => AdmissibleSet::single(12),
        C12 => AdmissibleSet::from(14, 1, 0).excluding(&[16]),
        D10 | E10 => AdmissibleSet::single(15),
        D12 => AdmissibleSet::from(13, 1, 0).excluding(&[14, 15, 16, 20]),
        E12 => AdmissibleSet::from(17, 2, 1),
        F12 => AdmissibleSet::from(14, 2, 0).excluding(&[16]),
        G18 | H18 => AdmissibleSet::from(19, 2, 1),
        I18 => AdmissibleSet::from(20, 2, 0).excluding(&[22]),
        S | T if k == 1 => AdmissibleSet::from(8, 2, 0),
        TBar if k == 1 => AdmissibleSet::from(8, 4, 0),
        S => {
            let d = s_sum(k) - 2;
            let closed = DifferenceSequence::new(s_diffs(k), Closing::Paired)
                .closed_diffs(0)
                .expect("even sum");
            paired_rule(&closed, d + 4)
        }
        T => {
            let d = t_sum(k) - 2;
            let mut set = AdmissibleSet::from(2 * d + 2, 2, 0);
            set.short.push(3 * d / 2);
            set
        }
        TBar => {
            let bound = 3 * (t_sum(k) - 2).abs() + 2;
            AdmissibleSet::from(bound, 4, if k % 2 == 1 { 0 } else { 2 })
        }
        U | V | W | X | XBar | Y | Z => {
            let (base, step) = p.name.line(k).expect("offset series");
            AdmissibleSet::from(base, step, base)
        }
        P => AdmissibleSet::from(2 * (s_sum(k) - 2) + 1, 1, 0),
        GTilde => {
            let sum: i64 = p.diffs.iter().sum();
            AdmissibleSet::from(2 * (sum - 2) + 1, 1, 0)
        }
    })
}

/// The difference sequence of a seed-defined instance, `None` for series
/// given by explicit generator lists.
pub fn difference_sequence(p: &SeriesParams) -> Option<DifferenceSequence> {
    let k = p.k.unwrap_or(0);
    let t = p.t.unwrap_or(0);
    let n = p.n;
    Some(match p.name {
        S | T | TBar if k == 1 => DifferenceSequence::new(vec![], Closing::PairedHalfShift),
        S => DifferenceSequence::new(s_diffs(k), Closing::Paired),
        T => DifferenceSequence::new(odd_diffs(k), Closing::Paired),
        TBar => DifferenceSequence::new(odd_diffs(k), Closing::PairedHalfShift),
        U => {
            let mut d = s_diffs(k);
            d.extend(pairs([k + 4 + t]));
            DifferenceSequence::new(d, Closing::HalfTurn)
        }
        UBar1 => DifferenceSequence::new(vec![n / 2], Closing::Paired),
        V => {
            let mut d = odd_diffs(k);
            d.extend(pairs([2 * k + 3 + 2 * t]));
            DifferenceSequence::new(d, Closing::HalfTurn)
        }
        W => {
            let mut d = s_diffs(k);
            d.extend(pairs([k + 4 + t]));
            DifferenceSequence::new(d, Closing::Paired)
        }
        X => {
            let mut d = odd_diffs(k);
            d.extend(pairs([2 * k + 3 + 2 * t]));
            DifferenceSequence::new(d, Closing::Paired)
        }
        XBar => {
            let mut d = odd_diffs(k - 1);
            d.extend(pairs([2 * k + 1 + 2 * t]));
            let v = t_sum(k) + 4 * t;
            let far = 2 * v - 4;
            DifferenceSequence::new(
                d,
                Closing::Triangles(vec![[2, v, far], [2, v - 1, far], [4, v, far]]),
            )
        }
        Y => {
            let mut d = pairs(5..=k + 2);
            d.extend(pairs([k + 3 + t]));
            d.push(n / 2);
            DifferenceSequence::new(d, Closing::Paired)
        }
        Z => {
            let mut d = odd_diffs(k - 1);
            d.extend(pairs([2 * k + 1 + 2 * t]));
            d.push(n / 2);
            DifferenceSequence::new(d, Closing::Paired)
        }
        P => {
            let d = (5..=k + 2)
                .step_by(2)
                .flat_map(|j| [j, j + 1, j, j + 1])
                .collect();
            DifferenceSequence::new(d, Closing::Paired)
        }
        GTilde => DifferenceSequence::new(p.diffs.clone(), Closing::Paired),
        _ => return None,
    })
}

fn explicit_generators(p: &SeriesParams) -> Option<Vec<[i64; 3]>> {
    let n = p.n;
    Some(match p.name {
        A6 => vec![[0, 1, 2], [0, 2, (n + 2) / 2]],
        B9 => vec![[0, 1, 2], [0, 2, (n + 4) / 4], [0, (n - 4) / 4, n / 2]],
        C10 | C12 => vec![[0, 1, 2], [0, 2, 5], [0, 3, 8], [0, 4, 8]],
        D10 | D12 => vec![[0, 1, 2], [0, 2, 6], [0, 4, 10], [0, 5, 10]],
        E10 | E12 => vec![
            [0, 1, 2],
            [0, 2, 5],
            [0, 3, (n + 3) / 2],
            [0, 5, (n + 5) / 2],
        ],
        F12 => vec![[0, 1, 2], [0, 2, 6], [0, 3, 6], [0, 4, (n + 4) / 2]],
        G18 => vec![
            [0, 1, 3],
            [0, 1, 5],
            [0, 2, (n - 1) / 2],
            [0, 3, (n - 1) / 2],
            [0, 4, (n + 3) / 2],
            [0, 5, (n + 7) / 2],
        ],
        H18 => vec![
            [0, 1, 2],
            [0, 2, 5],
            [0, 3, (n + 1) / 2],
            [0, 4, (n + 1) / 2],
            [0, 4, (n + 3) / 2],
            [0, 5, (n + 7) / 2],
        ],
        I18 => vec![
            [0, 1, 2],
            [0, 2, 7],
            [0, 3, 7],
            [0, 3, (n - 2) / 2],
            [0, 4, (n + 4) / 2],
            [0, 5, (n + 8) / 2],
        ],
        _ => return None,
    })
}

fn vertex_count(p: &SeriesParams) -> Result<u32> {
    u32::try_from(p.n).map_err(|_| Error::Range {
        series: p.name.to_string(),
        n: p.n,
        reason: "n out of range".into(),
    })
}

/// The seed of a difference-defined instance.
pub fn series_seed(p: &SeriesParams) -> Option<Result<Seed>> {
    let seq = difference_sequence(p)?;
    Some(vertex_count(p).and_then(|n| seed_from_differences(n, &seq)))
}

pub fn make_series(p: &SeriesParams) -> Result<CyclicComplexSpec> {
    if let Err(e) = admissible_set(p)?.check(p.name, p.n) {
        // Prefer naming the violated seed rule when the seed can be built.
        return Err(seed_violation(p).unwrap_or(e));
    }
    let n = vertex_count(p)?;
    if let Some(gens) = explicit_generators(p) {
        return CyclicComplexSpec::new(n, gens);
    }
    let seed = series_seed(p).expect("every series has generators")?;
    if let Some(e) = seed_violation(p) {
        return Err(e);
    }
    seed.to_spec()
}

fn seed_violation(p: &SeriesParams) -> Option<Error> {
    let n = u32::try_from(p.n).ok().filter(|&n| n >= 4)?;
    let seed = series_seed(p)?.ok()?;
    let report = validate_seed(&seed, n);
    if report.passed() {
        return None;
    }
    let rules: Vec<String> = report
        .failed_rules()
        .iter()
        .map(|r| r.to_string())
        .collect();
    Some(Error::Range {
        series: p.name.to_string(),
        n: p.n,
        reason: format!("seed violates {}", rules.join(", ")),
    })
}

/// Vertex degree of every member; a short orbit replaces three degrees by one.
pub fn expected_q(p: &SeriesParams) -> i64 {
    let k = p.k.unwrap_or(0);
    let short = matches!(p.name, S | T) && admissible_set(p).is_ok_and(|s| s.is_short(p.n));
    if short && k > 1 {
        return 6 * k - 2;
    }
    match p.name {
        A6 => 6,
        B9 | UBar1 => 9,
        C10 | D10 | E10 => 10,
        C12 | D12 | E12 | F12 => 12,
        G18 | H18 | I18 => 18,
        S | T | TBar | P => 6 * k,
        U | V => 6 * k + 3,
        W | X | XBar => 6 * k + 4,
        Y | Z => 6 * k + 1,
        GTilde => 3 * (p.diffs.len() as i64 + 2),
    }
}

/// `χ = n (6 - q) / 6`.
pub fn expected_chi(p: &SeriesParams) -> i64 {
    p.n * (6 - expected_q(p)) / 6
}

/// Orientability where a general law is known; `None` otherwise.
pub fn expected_orientable(p: &SeriesParams) -> Option<bool> {
    let (n, k, t) = (p.n, p.k.unwrap_or(0), p.t.unwrap_or(0));
    let short = admissible_set(p).is_ok_and(|s| s.is_short(n));
    match p.name {
        A6 => Some(n % 4 == 0),
        S | T | TBar if k == 1 => Some(n % 4 == 0),
        B9 | UBar1 => Some(n % 8 == 0),
        U if k == 1 => Some(n % 8 == 0),
        C10 => Some(true),
        C12 | D10 | D12 | E10 | E12 | H18 => Some(false),
        F12 => Some(n % 4 == 2),
        G18 => Some(true),
        I18 => Some(n % 4 == 2),
        S if short => Some(k == 2),
        S => Some(false),
        T if short => None,
        T => (k % 2 == 1).then_some(true),
        TBar | V | XBar | Z => Some(true),
        // k = 2 with odd r has only odd pair differences and an even n/2
        U if k == 2 => Some(t % 2 == 1),
        U => Some(false),
        W if k == 1 => Some(t % 2 == 0),
        W => Some(false),
        X => Some(k % 2 == 1),
        Y if k >= 4 => Some(false),
        Y if k == 2 && t % 2 == 1 => Some(false),
        Y if k == 3 && t % 2 == 0 => Some(false),
        Y => None,
        P => Some(n % 2 == 0 && (k / 2) % 2 == 0),
        GTilde => None,
    }
}
