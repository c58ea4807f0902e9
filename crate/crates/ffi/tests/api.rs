use std::ffi::{CStr, CString};
use std::ptr;
use turan_ffi::*;

fn pattern(s: &str) -> *mut TuranGraph {
    let spec = CString::new(s).unwrap();
    let mut g = ptr::null_mut();
    assert_eq!(unsafe { turan_graph_pattern(spec.as_ptr(), &mut g) }, TuranStatus::Ok);
    g
}

fn last_error() -> String {
    let p = turan_last_error();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned()
}

#[test]
fn parse_write_round_trip() {
    let text = CString::new("c square\np edge 4 4\ne 1 2\ne 2 3\ne 3 4\ne 4 1\n").unwrap();
    let mut g = ptr::null_mut();
    unsafe {
        assert_eq!(turan_graph_parse(text.as_ptr(), &mut g), TuranStatus::Ok);
        assert_eq!((turan_graph_vertex_count(g), turan_graph_edge_count(g)), (4, 4));
        let mut out = ptr::null_mut();
        assert_eq!(turan_graph_write(g, &mut out), TuranStatus::Ok);
        let written = CStr::from_ptr(out).to_str().unwrap().to_owned();
        assert_eq!(written, "p edge 4 4\ne 1 2\ne 1 4\ne 2 3\ne 3 4\n");
        turan_string_free(out);
        turan_graph_free(g);
    }
}

#[test]
fn parse_errors_carry_line_numbers() {
    let text = CString::new("p edge 3 1\ne 1 1\n").unwrap();
    let mut g = ptr::null_mut();
    assert_eq!(unsafe { turan_graph_parse(text.as_ptr(), &mut g) }, TuranStatus::ParseError);
    assert!(g.is_null());
    assert!(last_error().contains("line 2"));
}

#[test]
fn from_edges_validates() {
    let (us, vs) = ([0usize, 1], [1usize, 2]);
    let mut g = ptr::null_mut();
    unsafe {
        assert_eq!(turan_graph_from_edges(3, us.as_ptr(), vs.as_ptr(), 2, &mut g), TuranStatus::Ok);
        assert_eq!(turan_graph_edge_count(g), 2);
        turan_graph_free(g);
        let bad = [5usize, 1];
        let mut h = ptr::null_mut();
        assert_eq!(turan_graph_from_edges(3, bad.as_ptr(), vs.as_ptr(), 2, &mut h), TuranStatus::InvalidArgument);
        assert_eq!(turan_graph_from_edges(3, ptr::null(), ptr::null(), 0, &mut h), TuranStatus::Ok);
        assert_eq!(turan_graph_edge_count(h), 0);
        turan_graph_free(h);
    }
}

#[test]
fn null_pointers_are_rejected() {
    let mut out = 0u64;
    assert_eq!(unsafe { turan_count_copies(ptr::null(), ptr::null(), &mut out) }, TuranStatus::NullPointer);
    assert!(last_error().contains("null"));
    unsafe {
        turan_graph_free(ptr::null_mut());
        turan_string_free(ptr::null_mut());
    }
}

#[test]
fn counting_and_freeness() {
    let (k4, k3, k5) = (pattern("K4"), pattern("K3"), pattern("K5"));
    unsafe {
        let mut count = 0u64;
        assert_eq!(turan_count_copies(k4, k3, &mut count), TuranStatus::Ok);
        assert_eq!(count, 4);
        let fam = [k5 as *const TuranGraph];
        let mut free = false;
        assert_eq!(turan_is_family_free(k4, fam.as_ptr(), 1, &mut free), TuranStatus::Ok);
        assert!(free);
        let mut hom = false;
        assert_eq!(turan_hom_exists(k4, k3, &mut hom), TuranStatus::Ok);
        assert!(!hom);
        assert_eq!(turan_hom_exists(k3, k4, &mut hom), TuranStatus::Ok);
        assert!(hom);
        for g in [k4, k3, k5] {
            turan_graph_free(g);
        }
    }
}

#[test]
fn exact_and_matching_solvers() {
    let (k6, k2, k3) = (pattern("K6"), pattern("K2"), pattern("K3"));
    unsafe {
        let fam = [k3 as *const TuranGraph];
        let (mut value, mut witness) = (0u64, ptr::null_mut());
        assert_eq!(turan_exact_ex(k6, k2, fam.as_ptr(), 1, 0, 2, &mut value, &mut witness), TuranStatus::Ok);
        assert_eq!(value, 9);
        assert_eq!(turan_graph_edge_count(witness), 9);
        turan_graph_free(witness);
        assert_eq!(
            turan_exact_ex(k6, k2, fam.as_ptr(), 1, 2, 1, &mut value, ptr::null_mut()),
            TuranStatus::BudgetExhausted
        );
        assert!(last_error().contains("budget"));

        let mut nu = 0usize;
        assert_eq!(turan_max_matching(k6, &mut nu), TuranStatus::Ok);
        assert_eq!(nu, 3);
        assert_eq!(turan_max_edges_bounded_degree(k6, 2, &mut value, ptr::null_mut()), TuranStatus::Ok);
        assert_eq!(value, 6);
        assert_eq!(turan_max_edges_bounded_degree(k6, 0, &mut value, ptr::null_mut()), TuranStatus::InvalidArgument);
        for g in [k6, k2, k3] {
            turan_graph_free(g);
        }
    }
}

#[test]
fn approx_returns_json() {
    let (g, k2, k3) = (pattern("C5"), pattern("K2"), pattern("K3"));
    let eps = CString::new("1/2").unwrap();
    unsafe {
        let fam = [k3 as *const TuranGraph];
        let mut json = ptr::null_mut();
        assert_eq!(turan_approx_ex(g, k2, fam.as_ptr(), 1, eps.as_ptr(), &mut json), TuranStatus::Ok);
        let text = CStr::from_ptr(json).to_str().unwrap().to_owned();
        assert!(text.contains("\"lowerBoundCount\":5"), "{text}");
        turan_string_free(json);
        let bad = CString::new("2").unwrap();
        assert_eq!(turan_approx_ex(g, k2, fam.as_ptr(), 1, bad.as_ptr(), &mut json), TuranStatus::ComputeFailed);
        for h in [g, k2, k3] {
            turan_graph_free(h);
        }
    }
}

#[test]
fn header_declares_the_api() {
    let header = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/include/turan.h")).unwrap();
    for name in [
        "turan_graph_parse",
        "turan_graph_from_edges",
        "turan_graph_free",
        "turan_exact_ex",
        "turan_approx_ex",
        "turan_last_error",
        "TURAN_STATUS_BUDGET_EXHAUSTED",
    ] {
        assert!(header.contains(name), "{name} missing from header");
    }
}
