use std::ffi::{CStr, CString};
use std::ptr;

use hamlab_ffi::*;

fn from_g6(s: &str) -> *mut HamlabGraph {
    let c = CString::new(s).unwrap();
    let mut g = ptr::null_mut();
    assert_eq!(unsafe { hamlab_graph_from_graph6(c.as_ptr(), &mut g) }, HamlabStatus::Ok);
    g
}

fn to_g6(g: *const HamlabGraph) -> String {
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { hamlab_graph_to_graph6(g, &mut s) }, HamlabStatus::Ok);
    let out = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_string();
    unsafe { hamlab_string_free(s) };
    out
}

fn last_error() -> String {
    let p = hamlab_last_error();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned()
}

#[test]
fn graph6_round_trip_and_edges() {
    let g = from_g6("Dhc");
    assert_eq!(unsafe { hamlab_graph_order(g) }, 5);
    assert_eq!(unsafe { hamlab_graph_size(g) }, 5);
    assert_eq!(to_g6(g), "Dhc");
    let mut has = false;
    assert_eq!(unsafe { hamlab_graph_has_edge(g, 0, 2, &mut has) }, HamlabStatus::Ok);
    assert_eq!(unsafe { hamlab_graph_has_edge(g, 0, 9, &mut has) }, HamlabStatus::VertexOutOfRange);
    unsafe { hamlab_graph_free(g) };
}

#[test]
fn building_by_hand() {
    let mut g = ptr::null_mut();
    assert_eq!(unsafe { hamlab_graph_new(4, &mut g) }, HamlabStatus::Ok);
    for (u, v) in [(0, 1), (1, 2), (2, 3), (3, 0)] {
        assert_eq!(unsafe { hamlab_graph_add_edge(g, u, v) }, HamlabStatus::Ok);
    }
    assert_eq!(unsafe { hamlab_graph_add_edge(g, 2, 2) }, HamlabStatus::VertexOutOfRange);
    let mut c = ptr::null_mut();
    assert_eq!(unsafe { hamlab_graph_clone(g, &mut c) }, HamlabStatus::Ok);
    assert_eq!(to_g6(c), to_g6(g));
    unsafe {
        hamlab_graph_free(c);
        hamlab_graph_free(g);
    }
}

#[test]
fn errors_set_status_and_message() {
    let bad = CString::new("D?").unwrap();
    let mut g = ptr::null_mut();
    assert_eq!(unsafe { hamlab_graph_from_graph6(bad.as_ptr(), &mut g) }, HamlabStatus::Graph6);
    assert!(g.is_null());
    assert!(last_error().contains("graph6"));
    assert_eq!(unsafe { hamlab_graph_from_graph6(ptr::null(), &mut g) }, HamlabStatus::NullPointer);
    let mut k = 0;
    assert_eq!(unsafe { hamlab_chromatic_number(ptr::null(), &mut k, ptr::null_mut(), 0) }, HamlabStatus::NullPointer);
    assert_eq!(unsafe { hamlab_iterated_mycielski(1, &mut g) }, HamlabStatus::InvalidArgument);
    assert!(!last_error().is_empty());
    let ok = from_g6("A_");
    assert!(hamlab_last_error().is_null());
    unsafe { hamlab_graph_free(ok) };
    assert!(!hamlab_version().is_null());
}

#[test]
fn constructions() {
    let k2 = from_g6("A_");
    let mut c5 = ptr::null_mut();
    assert_eq!(unsafe { hamlab_mycielski(k2, &mut c5) }, HamlabStatus::Ok);
    assert_eq!(unsafe { (hamlab_graph_order(c5), hamlab_graph_size(c5)) }, (5, 5));
    let mut g4 = ptr::null_mut();
    assert_eq!(unsafe { hamlab_iterated_mycielski(4, &mut g4) }, HamlabStatus::Ok);
    assert_eq!(unsafe { (hamlab_graph_order(g4), hamlab_graph_size(g4)) }, (11, 20));
    let mut sq = ptr::null_mut();
    assert_eq!(unsafe { hamlab_power(c5, 2, &mut sq) }, HamlabStatus::Ok);
    assert_eq!(unsafe { hamlab_graph_size(sq) }, 10);
    let mut co = ptr::null_mut();
    assert_eq!(unsafe { hamlab_complement(c5, &mut co) }, HamlabStatus::Ok);
    assert_eq!(unsafe { hamlab_graph_size(co) }, 5);
    let mut cl = ptr::null_mut();
    assert_eq!(unsafe { hamlab_closure(c5, &mut cl) }, HamlabStatus::Ok);
    assert_eq!(unsafe { hamlab_graph_size(cl) }, 5);
    for g in [k2, c5, g4, sq, co, cl] {
        unsafe { hamlab_graph_free(g) };
    }
}

#[test]
fn solvers() {
    let c5 = from_g6("Dhc");
    let mut buf = [usize::MAX; 5];
    let mut found = false;
    assert_eq!(unsafe { hamlab_hamiltonian_cycle(c5, buf.as_mut_ptr(), 5, &mut found) }, HamlabStatus::Ok);
    assert!(found);
    let mut sorted = buf;
    sorted.sort();
    assert_eq!(sorted, [0, 1, 2, 3, 4]);
    assert_eq!(unsafe { hamlab_hamiltonian_cycle(c5, buf.as_mut_ptr(), 4, &mut found) }, HamlabStatus::BufferTooSmall);

    assert_eq!(unsafe { hamlab_hamiltonian_path(c5, 0, 1, buf.as_mut_ptr(), 5, &mut found) }, HamlabStatus::Ok);
    assert!(found);
    assert_eq!((buf[0], buf[4]), (0, 1));

    let (mut hc, mut bu, mut bv) = (true, 0, 0);
    assert_eq!(unsafe { hamlab_is_hamiltonian_connected(c5, &mut hc, &mut bu, &mut bv) }, HamlabStatus::Ok);
    assert!(!hc);
    assert_eq!(unsafe { hamlab_hamiltonian_path(c5, bu, bv, ptr::null_mut(), 0, &mut found) }, HamlabStatus::Ok);
    assert!(!found);

    let mut k = 0;
    let mut colors = [0usize; 5];
    assert_eq!(unsafe { hamlab_chromatic_number(c5, &mut k, colors.as_mut_ptr(), 5) }, HamlabStatus::Ok);
    assert_eq!(k, 3);
    let (mut crit, mut chi) = (false, 0);
    assert_eq!(unsafe { hamlab_is_critical(c5, &mut crit, &mut chi) }, HamlabStatus::Ok);
    assert!(crit && chi == 3);

    let mut sc = false;
    let mut perm = [0usize; 5];
    assert_eq!(unsafe { hamlab_is_self_complementary(c5, &mut sc, perm.as_mut_ptr(), 5) }, HamlabStatus::Ok);
    assert!(sc);
    unsafe { hamlab_graph_free(c5) };
}

#[test]
fn mycielski_certificate_json() {
    let k4 = from_g6("C~");
    let mut json = ptr::null_mut();
    assert_eq!(unsafe { hamlab_mycielski_hc_certificate_json(k4, &mut json) }, HamlabStatus::Ok);
    let text = unsafe { CStr::from_ptr(json) }.to_str().unwrap().to_string();
    unsafe { hamlab_string_free(json) };
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["lifts"].as_array().unwrap().len(), 36);

    let c5 = from_g6("Dhc");
    assert_eq!(unsafe { hamlab_mycielski_hc_certificate_json(c5, &mut json) }, HamlabStatus::Precondition);
    assert!(last_error().contains("Hamiltonian-connected"));
    unsafe {
        hamlab_graph_free(k4);
        hamlab_graph_free(c5);
    }
}
