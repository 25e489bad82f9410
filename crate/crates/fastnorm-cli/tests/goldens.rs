//! Byte-level regression pins for the fast-mode pipeline and the theory
//! curves. The checked-in CSVs were produced by this same binary; any drift
//! in the RNG stack, kernel evaluation order, reduction shape, or formatting
//! shows up here as a byte diff long before it shows up as a wrong number.

use std::process::Command;

fn stdout_of(args: &[&str]) -> Vec<u8> {
    let out = Command::new(env!("CARGO_BIN_EXE_fastnorm"))
        .args(args)
        .env_remove("FASTNORM_SEED")
        .output()
        .expect("spawn fastnorm");
    assert!(
        out.status.success(),
        "fastnorm {args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    out.stdout
}

fn assert_matches_golden(args: &[&str], golden: &str, name: &str) {
    let got = stdout_of(args);
    let got = String::from_utf8(got).expect("CSV output is UTF-8");
    if got != golden {
        let diff: Vec<String> = golden
            .lines()
            .zip(got.lines())
            .enumerate()
            .filter(|(_, (want, have))| want != have)
            .map(|(i, (want, have))| format!("  line {}: golden `{want}` vs run `{have}`", i + 1))
            .collect();
        panic!(
            "{name}: output drifted from the checked-in golden file\n{}",
            diff.join("\n")
        );
    }
}

#[test]
fn table2_fast_golden_is_byte_stable() {
    assert_matches_golden(
        &["table2", "--fast", "--dims", "2..4", "--seed", "42"],
        include_str!("golden/table2_fast_2_4.csv"),
        "table2 fast 2..4",
    );
}

#[test]
fn table3_fast_golden_is_byte_stable() {
    assert_matches_golden(
        &["table3", "--fast", "--dims", "2..4", "--seed", "42"],
        include_str!("golden/table3_fast_2_4.csv"),
        "table3 fast 2..4",
    );
}

#[test]
fn figure1_golden_is_byte_stable() {
    assert_matches_golden(
        &["figure1", "--n-max", "12"],
        include_str!("golden/figure1_n12.csv"),
        "figure1 n 2..12",
    );
}
