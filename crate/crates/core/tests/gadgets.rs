use turan_core::gadget::{build_blowup_gadget, build_np_gadget, choose_scale, gadget_bounds, recover_ex_from_gadget};
use turan_core::graph::{complete, cycle, path, random_graph, Graph};
use turan_core::oracle::ex_bar;
use turan_core::pattern::{count_copies, is_family_free, ForbiddenFamily, PatternSpec};
use turan_core::rational;

fn ex_bar_plus(host: &Graph, m: usize, k: usize) -> u64 {
    let t = PatternSpec::new(complete(m));
    let fam = ForbiddenFamily::single(complete(k)).unwrap();
    ex_bar(host, &t, &fam).unwrap()
}

#[test]
fn recovers_triangle_deletion_number() {
    let t = PatternSpec::new(complete(2));
    let tri = ForbiddenFamily::single(complete(3)).unwrap();
    for (g, m, k, s) in [(complete(4), 2, 4, 2), (complete(4), 2, 4, 3), (complete(4), 3, 5, 2), (cycle(4), 3, 5, 2)] {
        let gad = build_np_gadget(&g, m, k, s).unwrap();
        let heavy = gad.copies_with_inner_at_least(m, 3);
        let got = recover_ex_from_gadget(ex_bar_plus(&gad.host, m, k), heavy, m, k - 3, s);
        assert_eq!(got, rational::from_u64(ex_bar(&g, &t, &tri).unwrap()), "m={m} k={k} s={s}");
    }
}

#[test]
fn heavy_copies_for_triangles_are_the_triangles_of_g() {
    let g = random_graph(5, 0.6, 3);
    let gad = build_np_gadget(&g, 3, 5, 2).unwrap();
    assert_eq!(gad.copies_with_inner_at_least(3, 3), count_copies(&g, &PatternSpec::new(complete(3))));
}

#[test]
fn scale_grows_with_k() {
    // Larger k adds U-sets, which inflates the inner bound faster than the
    // outer ones, so the required scale never shrinks.
    for n in [3, 4, 6] {
        let g = complete(n);
        for m in 2..5 {
            let scales: Vec<usize> = (m + 2..m + 8).map(|k| choose_scale(&g, m, k).unwrap()).collect();
            assert!(scales.windows(2).all(|w| w[0] <= w[1]), "n={n} m={m} {scales:?}");
            for (k, &s) in (m + 2..).zip(&scales) {
                let b = gadget_bounds(&g, m, k, s, n).unwrap();
                assert!(b.inner < b.outer2.unwrap());
            }
        }
    }
}

#[test]
fn blowup_gadget_adds_no_forbidden_copies() {
    for (t, seed) in [(complete(4), 1), (complete(4), 2), (complete(5), 3)] {
        let g = random_graph(5, 0.5, seed);
        let fam = ForbiddenFamily::single(t.clone()).unwrap();
        for s in 1..3 {
            let gad = build_blowup_gadget(&g, &t, s).unwrap();
            assert_eq!(gad.host.n(), g.n() + g.edge_count() * (t.n() - 2) * s);
            assert!(g.is_subgraph_of(&gad.host.induced(&(0..g.n()).collect::<Vec<_>>())));
            assert!(is_family_free(&gad.outer_part(&g), &fam));
        }
    }
}

#[test]
fn blowup_gadget_on_a_path() {
    let g = path(3);
    let gad = build_blowup_gadget(&g, &complete(4), 2).unwrap();
    assert_eq!(gad.per_edge_sets.len(), 2);
    assert!(gad.attach_map.iter().all(|&(a, b)| a && b));
    assert_eq!(gad.external_copies(&g, &complete(4), 1), 4);
}
