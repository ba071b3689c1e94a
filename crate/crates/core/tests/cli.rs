use std::io::Write;
use std::process::{Command, Stdio};

use hamlab_core::cli::{run, Outcome, EXIT_COUNTEREXAMPLE, EXIT_PASS, EXIT_USAGE};
use hamlab_core::constructions::{cycle, grotzsch};
use hamlab_core::graph6::{emit_graph6, parse_graph6};
use hamlab_core::iso::are_isomorphic;
use hamlab_core::report::{verify_report, Certificate, SuiteReport};
use hamlab_core::Graph;

fn hamlab(args: &[&str], stdin: &str) -> Outcome {
    let argv = std::iter::once("hamlab").chain(args.iter().copied());
    run(argv, &mut stdin.as_bytes())
}

fn report(o: &Outcome) -> SuiteReport {
    serde_json::from_str(&o.stdout).unwrap_or_else(|e| panic!("{e}: {}", o.stdout))
}

fn g6(g: &Graph) -> String {
    emit_graph6(g).unwrap()
}

fn bull() -> Graph {
    Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (1, 3), (3, 4)]).unwrap()
}

fn temp(name: &str, body: &str) -> std::path::PathBuf {
    let p = std::env::temp_dir().join(format!("hamlab_cli_{}_{name}", std::process::id()));
    std::fs::write(&p, body).unwrap();
    p
}

#[test]
fn construct_outputs_graph6() {
    let o = hamlab(&["construct", "iterated-mycielski", "3"], "");
    assert_eq!(o.code, EXIT_PASS);
    let g = parse_graph6(o.stdout.trim()).unwrap();
    assert!(are_isomorphic(&g, &cycle(5).unwrap()));

    let p4 = hamlab(&["construct", "standard", "path", "4"], "").stdout;
    let o = hamlab(&["construct", "power", p4.trim(), "2"], "");
    assert_eq!(parse_graph6(o.stdout.trim()).unwrap().size(), 5);

    let o = hamlab(&["construct", "mycielski-of", &g6(&cycle(5).unwrap())], "");
    assert!(are_isomorphic(&parse_graph6(o.stdout.trim()).unwrap(), &grotzsch()));

    let o = hamlab(&["construct", "complement", &g6(&bull())], "");
    assert!(are_isomorphic(&parse_graph6(o.stdout.trim()).unwrap(), &bull()));
    assert_eq!(hamlab(&["construct", "closure", "Dhc"], "").stdout.trim(), "Dhc");
}

#[test]
fn construct_errors_exit_two() {
    for args in [
        &["construct", "standard", "cycle", "2"][..],
        &["construct", "standard", "star", "4"],
        &["construct", "power", "Dhc", "4"],
        &["construct", "complement", "D?"],
        &["construct", "iterated-mycielski", "1"],
        &["construct"],
        &["frobnicate"],
    ] {
        let o = hamlab(args, "");
        assert_eq!(o.code, EXIT_USAGE, "{args:?}");
        assert!(o.stdout.is_empty() && !o.stderr.is_empty(), "{args:?}");
    }
    assert_eq!(hamlab(&["--help"], "").code, EXIT_PASS);
}

#[test]
fn certify_hamiltonian_connected_reports_bad_pair() {
    let o = hamlab(&["certify", "hamiltonian-connected", "--no-timestamp"], "Dhc\nC~\n");
    assert_eq!(o.code, EXIT_COUNTEREXAMPLE);
    let r = report(&o);
    assert_eq!(r.inputs.count, 2);
    assert_eq!(r.counterexamples.len(), 1);
    let bad = &r.counterexamples[0];
    assert_eq!(bad.graph6, "Dhc");
    let (u, v) = bad.pair.unwrap();
    assert!(u < v && !cycle(5).unwrap().has_edge(u, v));
    assert!(verify_report(&r).is_empty());
}

#[test]
fn certify_chromatic_and_critical() {
    let o = hamlab(&["certify", "chromatic"], &format!("{}\n", g6(&grotzsch())));
    assert_eq!(o.code, EXIT_PASS);
    let r = report(&o);
    match &r.instances[0].certificates[0] {
        Certificate::Coloring { k, .. } => assert_eq!(*k, 4),
        c => panic!("{c:?}"),
    }
    assert!(verify_report(&r).is_empty());

    let k4_minus = g6(&Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]).unwrap());
    let o = hamlab(&["certify", "k-critical"], &format!("Dhc\n{k4_minus}\n"));
    assert_eq!(o.code, EXIT_COUNTEREXAMPLE);
    let r = report(&o);
    assert_eq!(r.counterexamples.len(), 1);
    assert_eq!(r.counterexamples[0].graph6, k4_minus);
    // C5: base coloring plus five vertex and five edge deletions.
    assert_eq!(r.instances[0].certificates.len(), 11);
    assert!(verify_report(&r).is_empty());
}

#[test]
fn certify_self_complementary_and_paths() {
    let o = hamlab(&["certify", "self-complementary"], &format!("{}\nDhc\n", g6(&bull())));
    assert_eq!(o.code, EXIT_PASS);
    assert_eq!(report(&o).certificate_count(), 2);

    let c5 = parse_graph6("Dhc").unwrap();
    let (near, far) = ((1..5).find(|&v| c5.has_edge(0, v)).unwrap(), (1..5).find(|&v| !c5.has_edge(0, v)).unwrap());
    let o = hamlab(&["certify", "hamiltonian-path", "0", &near.to_string()], "Dhc\n");
    assert_eq!(o.code, EXIT_PASS);
    let o = hamlab(&["certify", "hamiltonian-path", "0", &far.to_string()], "Dhc\n");
    assert_eq!(o.code, EXIT_COUNTEREXAMPLE);
    assert_eq!(report(&o).counterexamples[0].pair, Some((0, far)));
    let o = hamlab(&["certify", "hamiltonian-path", "0", "7"], "Dhc\n");
    assert_eq!(o.code, EXIT_USAGE);
    assert_eq!(report(&o).input_errors.len(), 1);

    let o = hamlab(&["certify", "hamiltonian"], &format!("{}\n", g6(&bull())));
    assert_eq!(o.code, EXIT_COUNTEREXAMPLE);
}

#[test]
fn malformed_lines_are_reported_per_line() {
    let o = hamlab(&["certify", "hamiltonian"], "Dhc\n\nnot graph6\nC~\n");
    assert_eq!(o.code, EXIT_USAGE);
    let r = report(&o);
    assert_eq!(r.inputs.count, 2);
    assert_eq!(r.input_errors.len(), 1);
    assert_eq!(r.input_errors[0].line, 3);
    assert!(r.passed());
}

#[test]
fn certify_reads_corpus_files() {
    let p = temp("corpus.g6", "Dhc\nC~\n");
    let o = hamlab(&["certify", "hamiltonian", "--corpus", p.to_str().unwrap()], "ignored");
    assert_eq!(o.code, EXIT_PASS);
    assert_eq!(report(&o).inputs.source, p.display().to_string());
    let _ = std::fs::remove_file(p);
    let o = hamlab(&["certify", "hamiltonian", "--corpus", "/nonexistent/x.g6"], "");
    assert_eq!(o.code, EXIT_USAGE);
}

#[test]
fn suites_from_the_examples() {
    let o = hamlab(&["suite", "theorem9", "--max-k", "4"], "");
    assert_eq!(o.code, EXIT_PASS, "{}", o.stderr);
    let labels: Vec<String> = report(&o).instances.iter().map(|i| i.label.clone()).collect();
    assert!(labels.len() >= 3, "{labels:?}");

    let o = hamlab(&["suite", "prop7", "--max-n", "12"], "");
    assert_eq!(o.code, EXIT_PASS);
    assert_eq!(report(&o).instances.len(), 11);

    let o = hamlab(&["suite", "theorem5", "--n", "5"], "");
    assert_eq!(o.code, EXIT_PASS);
    let r = report(&o);
    assert_eq!(r.instances.len(), 2);
    let gs: Vec<Graph> = r.instances.iter().map(|i| parse_graph6(&i.graph6).unwrap()).collect();
    assert!(gs.iter().any(|g| are_isomorphic(g, &bull())));
    assert!(gs.iter().any(|g| are_isomorphic(g, &cycle(5).unwrap())));
}

#[test]
fn suite_option_errors() {
    for args in [
        &["suite", "prop7", "--max-n", "99"][..],
        &["suite", "theorem9", "--max-k", "9"],
        &["suite", "theorem11", "--max-n", "12"],
        &["suite", "theorem5", "--corpus", "/nonexistent/sc.g6"],
        &["suite", "theorem9", "--jobs", "0"],
        &["suite", "nope"],
    ] {
        assert_eq!(hamlab(args, "").code, EXIT_USAGE, "{args:?}");
    }
    let p = temp("bad.g6", "Dhc\n!!\n");
    let o = hamlab(&["suite", "theorem5", "--corpus", p.to_str().unwrap()], "");
    assert_eq!(o.code, EXIT_USAGE);
    assert!(o.stderr.contains(":2:"));
    let _ = std::fs::remove_file(p);
}

#[test]
fn user_corpus_drives_theorem5_and_theorem11() {
    let p = temp("sc.g6", &format!("{}\nDhc\n", g6(&bull())));
    let o = hamlab(&["suite", "theorem5", "--corpus", p.to_str().unwrap()], "");
    assert_eq!(o.code, EXIT_PASS, "{}", o.stdout);
    let _ = std::fs::remove_file(p);

    // A non-self-complementary input is a counterexample to the corpus claim.
    let p = temp("notsc.g6", "C~\n");
    assert_eq!(hamlab(&["suite", "theorem5", "--corpus", p.to_str().unwrap()], "").code, EXIT_COUNTEREXAMPLE);
    let _ = std::fs::remove_file(p);

    let p = temp("hc.g6", "C~\nDhc\n");
    let o = hamlab(&["suite", "theorem11", "--corpus", p.to_str().unwrap()], "");
    assert_eq!(o.code, EXIT_PASS);
    let r = report(&o);
    assert_eq!(r.instances.len(), 1);
    assert_eq!(r.summary["skipped_not_hamiltonian_connected"], 1);
    let _ = std::fs::remove_file(p);
}

#[test]
fn reports_are_byte_stable_and_reverify() {
    let args = ["suite", "theorem9", "--max-k", "4", "--no-timestamp"];
    let a = hamlab(&args, "");
    let b = hamlab(&args, "");
    assert_eq!(a.stdout, b.stdout);
    assert!(!a.stdout.contains("timestamp"));
    assert!(hamlab(&["suite", "theorem9", "--max-k", "3"], "").stdout.contains("\"timestamp\""));

    let p = temp("t9.json", &a.stdout);
    let v = hamlab(&["certify", "--verify", p.to_str().unwrap()], "");
    assert_eq!(v.code, EXIT_PASS, "{}", v.stdout);
    assert!(report(&v).summary["certificates_checked"].as_u64().unwrap() > 0);

    let mut tampered = report(&a);
    if let Certificate::Coloring { colors, .. } = &mut tampered.instances[0].certificates[0] {
        colors.iter_mut().for_each(|c| *c = 0);
    }
    std::fs::write(&p, tampered.to_json()).unwrap();
    let v = hamlab(&["certify", "--verify", p.to_str().unwrap()], "");
    assert_eq!(v.code, EXIT_COUNTEREXAMPLE);
    std::fs::write(&p, "{").unwrap();
    assert_eq!(hamlab(&["certify", "--verify", p.to_str().unwrap()], "").code, EXIT_USAGE);
    let _ = std::fs::remove_file(p);
}

#[test]
fn binary_honours_the_exit_code_contract() {
    let exe = env!("CARGO_BIN_EXE_hamlab");
    let mut child = Command::new(exe)
        .args(["certify", "hamiltonian-connected", "--no-timestamp"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(b"Dhc\n").unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(out.status.code(), Some(EXIT_COUNTEREXAMPLE));
    let r: SuiteReport = serde_json::from_slice(&out.stdout).unwrap();
    assert!(!r.passed());

    let out = Command::new(exe).args(["construct", "standard", "cycle", "2"]).output().unwrap();
    assert_eq!(out.status.code(), Some(EXIT_USAGE));
    assert!(out.stdout.is_empty() && !out.stderr.is_empty());

    let out = Command::new(exe).args(["construct", "standard", "complete", "4"]).output().unwrap();
    assert_eq!(out.status.code(), Some(EXIT_PASS));
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "C~\n");
}
