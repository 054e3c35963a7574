use std::process::Command;

fn fishburn(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_fishburn"))
        .args(args)
        .output()
        .expect("spawn")
}

fn stdout(out: &std::process::Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn sets_prints_both_residue_sets() {
    let out = fishburn(&["sets", "-p", "11"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "S(11) = {0,1,2,4,5,7}\nT(11) = {8,9,10}\n");
}

#[test]
fn xi_text_and_machine_agree() {
    let text = fishburn(&["xi", "--limit", "9"]);
    assert!(text.status.success());
    assert!(stdout(&text).contains("xi(9) = 31240"));

    let machine = fishburn(&["xi", "--limit", "9", "--format", "machine"]);
    assert!(machine.status.success());
    assert_eq!(
        stdout(&machine).trim_end(),
        "{\"table\":\"xi\",\"modulus\":null,\"limit\":9,\"values\":[\"1\",\"1\",\"2\",\"5\",\"15\",\"53\",\"217\",\"1014\",\"5335\",\"31240\"]}"
    );
}

#[test]
fn verified_claim_exits_zero() {
    let out = fishburn(&["verify", "theorem1", "-p", "7", "--n-max", "10"]);
    assert!(out.status.success());
    assert!(stdout(&out).starts_with("[VERIFIED] theorem1"));
}

#[test]
fn usage_errors_exit_two() {
    // clap-level: unknown subcommand
    let out = fishburn(&["no-such-command"]);
    assert_eq!(out.status.code(), Some(2));
    // semantic: composite where a prime is required
    let out = fishburn(&["sets", "-p", "6"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).starts_with("error:"));
    // semantic: prime-power scan needs j >= 2
    let out = fishburn(&["scan", "prime-power", "-p", "5", "-j", "1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn inconclusive_scan_exits_zero() {
    let out = fishburn(&["scan", "prime-power", "-p", "5", "-j", "2", "--n-max", "5"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).starts_with("[INCONCLUSIVE] conj-prime-power"));
}

#[test]
fn cache_round_trip_through_cli() {
    let dir = tempfile::tempdir().unwrap();
    let dir_arg = dir.path().to_str().unwrap();
    let first = fishburn(&["xi", "--limit", "30", "--modulus", "5", "--cache-dir", dir_arg]);
    assert!(first.status.success());
    assert!(dir.path().join("xi-Zmod5-30.tbl").exists());
    let second = fishburn(&["xi", "--limit", "30", "--modulus", "5", "--cache-dir", dir_arg]);
    assert_eq!(stdout(&first), stdout(&second));
    // same query without the cache must match too
    let uncached = fishburn(&["xi", "--limit", "30", "--modulus", "5"]);
    assert_eq!(stdout(&first), stdout(&uncached));
}

#[test]
fn partial_sum_matches_hand_expansion() {
    let out = fishburn(&["partial-sum", "-n", "2"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim_end(), "F(q,2) = 3 - 2*q - q^2 + q^3");
}
