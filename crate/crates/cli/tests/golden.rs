mod common;

#[test]
fn fixtures_reproduce_their_transcripts() {
    let fixtures = common::fixtures();
    assert!(fixtures.len() >= 10, "expected at least 10 fixtures");
    let errors: Vec<String> = fixtures
        .iter()
        .filter_map(|f| common::check_fixture(f).err())
        .collect();
    assert!(errors.is_empty(), "{}", errors.join("\n"));
}

#[test]
fn worked_example_transcript() {
    let text = std::fs::read_to_string(common::fixtures_dir().join("principal.out")).unwrap();
    assert!(text.contains("module M_D in R_D^2 gens [(x, y), (0, (y - x)*y)];"));
    assert!(text.contains("> member M_D (x^2, y^2)\ntrue\n"));
    let text = std::fs::read_to_string(common::fixtures_dir().join("verify.out")).unwrap();
    assert!(text.contains("PROP P3.4-a trials=50 failures=0\n"));
}
