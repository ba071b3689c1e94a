use std::path::Path;
use std::process::Command;

const HEADER: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/include/hamlab.h");

#[test]
fn header_declares_the_api() {
    let h = std::fs::read_to_string(HEADER).unwrap();
    for sym in [
        "typedef struct HamlabGraph HamlabGraph;",
        "HAMLAB_STATUS_OK = 0",
        "hamlab_graph_from_graph6",
        "hamlab_graph_free",
        "hamlab_string_free",
        "hamlab_last_error",
        "hamlab_mycielski_hc_certificate_json",
    ] {
        assert!(h.contains(sym), "missing {sym}");
    }
}

#[test]
fn header_compiles_as_c() {
    let Some(cc) = ["cc", "gcc", "clang"].into_iter().find(|c| Command::new(c).arg("--version").output().is_ok())
    else {
        eprintln!("no C compiler; skipped");
        return;
    };
    let src = std::env::temp_dir().join(format!("hamlab_header_{}.c", std::process::id()));
    std::fs::write(
        &src,
        "#include \"hamlab.h\"\n\
         int use(void) { HamlabGraph *g = 0; bool f; size_t b[4];\n\
           if (hamlab_graph_new(4, &g) != HAMLAB_STATUS_OK) return 1;\n\
           hamlab_hamiltonian_cycle(g, b, 4, &f); hamlab_graph_free(g); return 0; }\n",
    )
    .unwrap();
    let inc = Path::new(HEADER).parent().unwrap();
    let status = Command::new(cc)
        .args(["-std=c99", "-Wall", "-Werror", "-fsyntax-only", "-I"])
        .arg(inc)
        .arg(&src)
        .status()
        .unwrap();
    let _ = std::fs::remove_file(&src);
    assert!(status.success());
}
