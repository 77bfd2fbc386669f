use std::collections::BTreeSet;

use cyclotri::seed::{seed_from_differences, seed_from_spec, Closing, DifferenceSequence, Seed};
use cyclotri::series::{make_series, series_seed, SeriesParams};
use cyclotri::tessellation::{
    check_polyhedral, delete_edge_orbits, delete_edges, full_deletion, make_map_series,
    maps_isomorphic, merge_groups, parse_map, relabel_map, write_map, CellMap, MapSeries,
    PolyhedralCheck,
};
use cyclotri::{classify, expand, CyclicComplexSpec, Error, SimplicialSurface};

fn series(desc: &str) -> (Seed, SimplicialSurface) {
    let p = SeriesParams::parse(desc).unwrap();
    let spec = make_series(&p).unwrap();
    let seed = match series_seed(&p) {
        Some(s) => s.unwrap(),
        None => seed_from_spec(&spec).unwrap(),
    };
    (seed, expand(&spec).unwrap())
}

fn brehm() -> CellMap {
    let (seed, s) = series("B9:n=16");
    delete_edge_orbits(&s, &seed, &[[0, 2], [2, 5]]).unwrap()
}

#[test]
fn brehm_map() {
    let m = brehm();
    assert_eq!((m.p, m.q), (Some(5), Some(5)));
    assert_eq!((m.n, m.edges.len(), m.polygons.len()), (16, 40, 16));
    assert!(m.orientable && m.regular && m.strongly_regular);
    assert_eq!(m.euler_characteristic, -8);
    assert!(check_polyhedral(&m).is_polyhedral());
}

#[test]
fn brehm_map_is_bdn() {
    let (_, _, bdn) = make_map_series(MapSeries::Bdn, 2, 0).unwrap();
    let m = brehm();
    assert!(maps_isomorphic(&m, &bdn).unwrap());
    let times3: Vec<u32> = (0..16).map(|i| 3 * i % 16).collect();
    assert_eq!(relabel_map(&m, &times3), bdn.polygons);
}

#[test]
fn map_isomorphism_is_label_free_but_discriminating() {
    let (_, _, odd) = make_map_series(MapSeries::DOdd, 2, 1).unwrap();
    let perm: Vec<u32> = (0..20).map(|i| (7 * i + 3) % 20).rev().collect();
    let relabeled = CellMap::from_polygons(20, relabel_map(&odd, &perm)).unwrap();
    assert!(maps_isomorphic(&odd, &relabeled).unwrap());

    let seq = DifferenceSequence::new(vec![6, 6], Closing::HalfTurn);
    let seed = seed_from_differences(20, &seq).unwrap();
    let other = full_deletion(&expand(&seed.to_spec().unwrap()).unwrap(), &seed).unwrap();
    assert_eq!(
        (other.p, other.q, other.orientable),
        (odd.p, odd.q, odd.orientable)
    );
    assert_eq!(other.edges.len(), odd.edges.len());
    assert!(!maps_isomorphic(&odd, &other).unwrap());
}

#[test]
fn d_series_examples() {
    let (_, s, m) = make_map_series(MapSeries::DEven, 3, 0).unwrap();
    assert_eq!((m.n, m.p, m.q), (26, Some(6), Some(6)));
    assert!(m.orientable && m.strongly_regular);
    assert_eq!(m.euler_characteristic, -26);
    assert_eq!(classify(&s).euler_characteristic, -26);

    let (_, _, m) = make_map_series(MapSeries::DOdd, 2, 1).unwrap();
    assert_eq!((m.n, m.p, m.q), (20, Some(5), Some(5)));
    assert!(!m.orientable);
}

#[test]
fn d_series_orientability() {
    for (series, ks) in [(MapSeries::DOdd, 2..=4), (MapSeries::DEven, 3..=4)] {
        for k in ks {
            for r in 0..=3 {
                let (_, s, m) = make_map_series(series, k, r).unwrap();
                let report = classify(&s);
                assert_eq!(m.orientable, r % 2 == 0, "{series} k={k} r={r}");
                assert_eq!(report.orientable, m.orientable);
                assert_eq!(m.euler_characteristic, report.euler_characteristic);
                assert_eq!(
                    m.p,
                    Some(if series == MapSeries::DOdd {
                        2 * k + 1
                    } else {
                        2 * k
                    })
                );
                assert_eq!(m.p, m.q);
                assert!(m.strongly_regular, "{series} k={k} r={r}");
            }
        }
    }
}

#[test]
fn map_series_parameter_errors() {
    assert!(matches!(
        make_map_series(MapSeries::DEven, 2, 0),
        Err(Error::Parameter(_))
    ));
    assert!(matches!(
        make_map_series(MapSeries::Bdn, 3, 0),
        Err(Error::Parameter(_))
    ));
}

#[test]
fn s4_full_deletion_is_not_polyhedral() {
    let (seed, s) = series("S:k=4:n=69");
    let m = full_deletion(&s, &seed).unwrap();
    assert_eq!((m.p, m.q), (Some(10), Some(10)));
    assert!(m.regular && !m.strongly_regular);
    let PolyhedralCheck::Violation(v) = check_polyhedral(&m) else {
        panic!("expected a violation");
    };
    assert!(v.shared.len() >= 2);
    let seed_poly = m
        .polygons
        .iter()
        .find(|p| [0, 1, 2, 5, 16, 19].iter().all(|v| p.contains(v)));
    assert!(seed_poly.is_some());
    let shifted: BTreeSet<u32> = seed_poly.unwrap().iter().map(|v| (v + 14) % 69).collect();
    let other = m
        .polygons
        .iter()
        .find(|p| p.iter().copied().collect::<BTreeSet<_>>() == shifted);
    assert!(other.is_some());
}

#[test]
fn s4_merge_groups() {
    let (seed, s) = series("S:k=4:n=69");
    let quads = merge_groups(&s, &seed, 2).unwrap();
    let direct = delete_edge_orbits(&s, &seed, &[[0, 2], [2, 10], [2, 22], [2, 36]]).unwrap();
    assert_eq!(quads, direct);
    assert_eq!(quads.p, Some(4));
    assert_eq!(
        merge_groups(&s, &seed, 8).unwrap(),
        full_deletion(&s, &seed).unwrap()
    );
    let identity = merge_groups(&s, &seed, 1).unwrap();
    assert_eq!(identity.polygons.len(), s.facets().len());
    assert!(matches!(
        merge_groups(&s, &seed, 3),
        Err(Error::Divisibility { .. })
    ));
}

#[test]
fn deletion_rejects_exterior_edges_and_cycles() {
    let (seed, s) = series("B9:n=16");
    assert!(matches!(
        delete_edge_orbits(&s, &seed, &[[0, 1]]),
        Err(Error::NotInterior(1))
    ));
    let tet = expand(&CyclicComplexSpec::new(4, [[0, 1, 2]]).unwrap()).unwrap();
    let star: BTreeSet<_> = [[0, 1], [0, 2], [0, 3]].into_iter().collect();
    assert!(matches!(
        delete_edges(&tet, &star),
        Err(Error::NonDiskCell { .. })
    ));
    let as_map = delete_edges(&tet, &BTreeSet::new()).unwrap();
    assert!(check_polyhedral(&as_map).is_polyhedral());
}

#[test]
fn map_io_round_trip() {
    let m = brehm();
    let text = write_map(&m);
    assert!(text.starts_with("n=16 p=5 q=5\n"));
    assert_eq!(parse_map(&text).unwrap(), m);
    assert!(matches!(
        parse_map("n=4\n0 1 1\n"),
        Err(Error::NonDiskCell { .. })
    ));
    assert!(matches!(parse_map("m=4\n"), Err(Error::Parse { .. })));
}

/// Standard members with pathlike fan seeds: `q = 3t` for a seed of `t`
/// triangles.
fn gtilde_members() -> Vec<(u32, Seed)> {
    let mut out = Vec::new();
    for d in [5i64, 6, 7] {
        let n = (4 * d - 4) as u32;
        let seq = DifferenceSequence::new(vec![d, d], Closing::HalfTurn);
        out.push((n, seq));
    }
    for diffs in [
        vec![5],
        vec![6],
        vec![5, 6],
        vec![5, 7],
        vec![6, 8],
        vec![5, 6, 7],
        vec![5, 7, 9],
    ] {
        let sum: i64 = diffs.iter().sum();
        let doubled: Vec<i64> = diffs.iter().flat_map(|&d| [d, d]).collect();
        for n in [4 * sum - 1, 4 * sum + 3] {
            out.push((
                n as u32,
                DifferenceSequence::new(doubled.clone(), Closing::Paired),
            ));
        }
    }
    out.into_iter()
        .map(|(n, seq)| (n, seed_from_differences(n, &seq).unwrap()))
        .collect()
}

#[test]
fn tessellation_theorem() {
    let members = gtilde_members();
    let mut qs = BTreeSet::new();
    for (n, seed) in &members {
        let s = expand(&seed.to_spec().unwrap()).unwrap();
        let report = classify(&s);
        let q = report.equivelar_degree().unwrap();
        qs.insert(q);
        let m = full_deletion(&s, seed).unwrap();
        assert!(m.regular, "n={n}");
        assert_eq!(m.p, Some(q / 3 + 2), "n={n}");
        assert_eq!(m.q, Some(q / 3 + 2), "n={n}");
        assert_eq!(m.euler_characteristic, report.euler_characteristic);
        assert_eq!(m.orientable, report.orientable);
    }
    assert!(members.len() >= 10);
    assert_eq!(qs, BTreeSet::from([9, 12, 18, 24]));
}
