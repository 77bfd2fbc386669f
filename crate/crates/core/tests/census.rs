use cyclotri::{
    census, census_totals, classify, classify_q7, expand, isomorphic, CyclicComplexSpec,
};

fn golden(n: u32) -> String {
    let path = format!(
        "{}/tests/golden/census_{n:02}.txt",
        env!("CARGO_MANIFEST_DIR")
    );
    std::fs::read_to_string(path).unwrap()
}

fn rendered(n: u32) -> String {
    census(n).iter().map(|r| format!("{r}\n")).collect()
}

#[test]
fn census_matches_golden_up_to_14() {
    for n in 4..=14 {
        assert_eq!(rendered(n), golden(n), "n={n}");
    }
}

#[test]
fn census_matches_golden_15_to_21() {
    for n in 15..=21 {
        assert_eq!(rendered(n), golden(n), "n={n}");
    }
}

#[test]
fn totals() {
    assert_eq!(census_totals(4), (1, 1, 0));
    assert_eq!(census_totals(12), (22, 16, 6));
    assert_eq!(census_totals(21), (1570, 508, 1062));
}

#[test]
fn q7_up_to_30() {
    let found = classify_q7(30);
    let gens: Vec<String> = found.iter().map(|(_, s)| s.to_string()).collect();
    assert_eq!(found.len(), 2, "{gens:?}");
    assert!(found.iter().all(|(n, _)| *n == 12));
    let found: Vec<_> = found.iter().map(|(_, s)| expand(s).unwrap()).collect();
    for gens in [
        [[0, 1, 2], [0, 2, 6], [0, 4, 8]],
        [[0, 1, 5], [0, 1, 6], [0, 4, 8]],
    ] {
        let s = expand(&CyclicComplexSpec::new(12, gens).unwrap()).unwrap();
        let report = classify(&s);
        assert!(report.orientable && report.genus == Some(2));
        assert_eq!(found.iter().filter(|f| isomorphic(f, &s)).count(), 1);
    }
}
