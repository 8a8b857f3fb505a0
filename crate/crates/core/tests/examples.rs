//! Every example compiles as part of the test build and runs to completion.

#[allow(dead_code)]
mod word_properties {
    include!("../examples/word_properties.rs");
}
#[allow(dead_code)]
mod word_classes {
    include!("../examples/word_classes.rs");
}
#[allow(dead_code)]
mod bwt_clustering {
    include!("../examples/bwt_clustering.rs");
}
#[allow(dead_code)]
mod generate_sequences {
    include!("../examples/generate_sequences.rs");
}
#[allow(dead_code)]
mod census_formulas {
    include!("../examples/census_formulas.rs");
}
#[allow(dead_code)]
mod inventories {
    include!("../examples/inventories.rs");
}
#[allow(dead_code)]
mod extremal_search {
    include!("../examples/extremal_search.rs");
}
#[allow(dead_code)]
mod a374495 {
    include!("../examples/a374495.rs");
}

#[test]
fn word_properties_runs() {
    let lines = word_properties::run(&["121344312134", "102"]).unwrap();
    assert!(lines[0].ends_with("pp with p=121 s=3443"));
    assert!(lines[1].ends_with("not a palindromic periodicity"));
}

#[test]
fn word_classes_runs() {
    let t = word_classes::run(8).unwrap();
    assert_eq!(t.words, 256);
    assert_eq!(t.pp, 190);
    assert!(t.sturmian <= t.trapezoidal && t.trapezoidal <= t.rich);
}

#[test]
fn bwt_clustering_runs() {
    bwt_clustering::run().unwrap();
    assert!(bwt_clustering::clustered_words(3, 4).unwrap().contains(&"0102".to_string()));
}

#[test]
fn generate_sequences_runs() {
    let rows = generate_sequences::run(8).unwrap();
    assert_eq!(rows[0], ("thue_morse".to_string(), "01101001".to_string()));
    assert_eq!(rows.last().unwrap().1, "01121220");
}

#[test]
fn census_formulas_runs() {
    let mut buf = Vec::new();
    census_formulas::run(&mut buf).unwrap();
    let text = String::from_utf8(buf).unwrap();
    assert!(text.starts_with("n,factors,pp,formula,match\n3,6,6,6,true\n"));
}

#[test]
fn inventories_runs() {
    let rows = inventories::run().unwrap();
    let sizes: Vec<(usize, usize)> = rows.iter().map(|r| (r.1, r.2)).collect();
    assert_eq!(sizes, [(334, 24), (255, 21), (9, 3), (44, 9)]);
}

#[test]
fn extremal_search_runs() {
    extremal_search::run().unwrap();
}

#[test]
fn a374495_runs() {
    assert_eq!(a374495::run(8).unwrap(), [2, 4, 8, 16, 32, 58, 108, 190]);
}
