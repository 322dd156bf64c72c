//! The installed binary: exit codes and reproducible output.

use std::process::{Command, Output};

fn hamrel(args: &[&str], threads: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hamrel"))
        .args(args)
        .env("HAMREL_THREADS", threads)
        .output()
        .expect("binary runs")
}

fn scratch(name: &str, contents: &str) -> String {
    let path = std::env::temp_dir().join(format!("hamrel-it-{}-{name}", std::process::id()));
    std::fs::write(&path, contents).unwrap();
    path.to_string_lossy().into_owned()
}

#[test]
fn fcg_construction_line() {
    let out = hamrel(&["construct", "fcg", "--n", "16", "--c", "3", "--format", "graph6"], "1");
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().count(), 1);
    let g = hamrel::Multigraph::from_graph6(text.trim()).unwrap();
    assert!(g.has_edge(1, 9) && g.has_edge(4, 12) && g.has_edge(7, 15));
}

#[test]
fn same_bytes_for_any_thread_count() {
    for args in [
        &["enumerate", "hd", "--n", "14"][..],
        &["search-umr", "--hamiltonian", "10", "3", "--format", "json"][..],
        &["verify-table", "T3", "--max-n", "9"][..],
    ] {
        let one = hamrel(args, "1");
        let four = hamrel(args, "4");
        assert!(one.status.success(), "{args:?}");
        assert_eq!(one.stdout, four.stdout, "{args:?}");
    }
}

#[test]
fn compare_reports_crossing() {
    let g1 = hamrel(&["construct", "complement", "g1", "--n", "6"], "1");
    let g2 = hamrel(&["construct", "complement", "g2", "--n", "6"], "1");
    let a = scratch("g1.g6", &String::from_utf8(g1.stdout).unwrap());
    let b = scratch("g2.g6", &String::from_utf8(g2.stdout).unwrap());
    let out = hamrel(&["compare", "--a", &a, "--b", &b], "1");
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("CROSSING"), "{text}");
    assert!(text.contains('/'), "{text}");
}

#[test]
fn exit_codes() {
    assert_eq!(hamrel(&["frobnicate"], "1").status.code(), Some(1));
    assert_eq!(hamrel(&["relpoly", "/no/such/file"], "1").status.code(), Some(1));
    let bad = scratch("bad.g6", "not a graph\n");
    assert_eq!(hamrel(&["relpoly", &bad], "1").status.code(), Some(1));
    assert_eq!(hamrel(&["verify-nonexistence", "--n", "8"], "1").status.code(), Some(0));
    // too small for either family
    assert_eq!(hamrel(&["verify-nonexistence", "--n", "4"], "1").status.code(), Some(1));
}

#[test]
fn plot_samples_match_exact_values() {
    let path = scratch("w.txt", "4 5\n0 1\n1 2\n2 3\n3 0\n0 2\n");
    let out = hamrel(&["plot-data", &path, "--samples", "11", "--precision", "6"], "1");
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let g = hamrel::Multigraph::from_edge_list(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let poly = hamrel::rel_factoring(&g);
    for (k, line) in text.lines().enumerate() {
        let (p, rel) = line.split_once(',').unwrap();
        let exact = poly.evaluate(&num_rational::BigRational::new(k.into(), 10.into())).unwrap();
        assert_eq!(rel, hamrel::cli::decimal(&exact, 6), "p = {p}");
    }
}
