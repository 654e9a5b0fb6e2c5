mod tour;

/// Set `LEAVITT_BLESS=1` to regenerate the golden files after an intended
/// change in output.
#[test]
fn command_tour_matches_golden_files() {
    let dir = tempfile::tempdir().unwrap();
    let bless = std::env::var_os("LEAVITT_BLESS").is_some();
    let problems = tour::check(dir.path(), bless);
    assert!(problems.is_empty(), "{}", problems.join("\n"));
}

#[test]
fn tour_is_deterministic() {
    let a = tempfile::tempdir().unwrap();
    let b = tempfile::tempdir().unwrap();
    let first: Vec<String> = tour::run_tour(a.path()).iter().map(|r| tour::rendered(&r.outcome)).collect();
    let second: Vec<String> = tour::run_tour(b.path()).iter().map(|r| tour::rendered(&r.outcome)).collect();
    let strip = |s: &String, p: &std::path::Path| s.replace(&p.display().to_string(), "@work");
    for (x, y) in first.iter().zip(&second) {
        assert_eq!(strip(x, a.path()), strip(y, b.path()));
    }
}
