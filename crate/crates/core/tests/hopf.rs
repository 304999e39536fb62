use hopfkit::catalog::build;
use hopfkit::hopf::{
    assoc_graded, center_contains_primitives, check_graded_truncated, commutator_filtration_check,
    free_basis_minrel, ladder_subcoalgebras, lemma_p_index_bound, locality_criterion, normal_series_cocomm,
    p_index, p_power_coproduct_in,
};
use hopfkit::linalg::tensor::kron_vec;
use hopfkit::{CatalogId, Error, FirstOrder, Gf, HopfPresentation, Subspace};

fn entry(p: u32, id: &str) -> HopfPresentation {
    build(p, id.parse::<CatalogId>().unwrap()).unwrap()
}

fn closure(h: &HopfPresentation, labels: &[&str]) -> Subspace {
    let vs: Vec<_> = labels.iter().map(|l| h.element(l)).collect();
    h.subalgebra_generated(&Subspace::span(h.field(), h.dim(), &vs).unwrap()).unwrap()
}

#[test]
fn axioms_and_perturbation() {
    assert!(entry(3, "D2-1").check_hopf().passed());
    assert!(HopfPresentation::ground(Gf::new(5).unwrap()).check_hopf().passed());

    // Dropping ω(x) from Δ(y) alone breaks compatibility with the stored Δ(y²).
    let bad = drop_omega_from_y(&entry(3, "D2-6"));
    let report = bad.check_hopf();
    let failed: Vec<_> = report.failures().map(|c| c.name.clone()).collect();
    assert!(failed.iter().any(|n| n.contains("bialgebra")), "{failed:?}");

    // At p = 2 the other stored coproducts stay multiplicative since x² = 0,
    // and the result is D2-1.
    let h = drop_omega_from_y(&entry(2, "D2-6"));
    assert!(h.check_hopf().passed());
    assert_eq!(h.primitives().dim(), 2);
}

fn drop_omega_from_y(h: &HopfPresentation) -> HopfPresentation {
    let (one, y) = (h.label_index("1").unwrap(), h.label_index("y").unwrap());
    let mut comult: Vec<Vec<(usize, usize, u32)>> = (0..h.dim()).map(|i| h.coterms(i).to_vec()).collect();
    comult[y].retain(|&(a, b, _)| a == one || b == one);
    HopfPresentation::new(h.algebra().clone(), comult, h.counit().to_vec(), None).unwrap()
}

#[test]
fn antipode_examples() {
    for p in [2, 3, 5] {
        let h = entry(p, "D1-1");
        let x = h.element("x");
        assert_eq!(h.apply_antipode(&x).unwrap(), h.field().neg_vec(&x));
    }
    let h = entry(2, "D2-6");
    assert_eq!(h.apply_antipode(&h.element("y")).unwrap(), h.element("y"));
    // S(y) = −y + Σ c_i x^i x^{p−i}-type correction; at p = 3 it is −y + 2x³ = −y.
    let h = entry(3, "D2-6");
    assert_eq!(h.apply_antipode(&h.element("y")).unwrap(), h.field().neg_vec(&h.element("y")));

    // ξ + 1 is group-like in L1-2 and its inverse is S(ξ + 1).
    let h = entry(3, "L1-2");
    let f = h.field();
    let g = f.add_vec(&h.element("ξ"), h.unit());
    let s = h.apply_antipode(&g).unwrap();
    assert_eq!(h.multiply(&g, &s).unwrap(), h.unit());
}

#[test]
fn duality() {
    let h = entry(3, "D1-1");
    let d = h.dual().unwrap();
    assert!(d.check_hopf().passed());
    assert!(d.is_local().unwrap());
    assert!(!d.is_connected().unwrap() || d.dim() == 1 || d.primitives().dim() == 1);

    let h = entry(3, "D2-3");
    let dd = h.dual().unwrap().dual().unwrap();
    assert_eq!(dd.algebra().mult_matrix(), h.algebra().mult_matrix());
    assert_eq!(dd.comult_matrix(), h.comult_matrix());
    assert_eq!(h.dual().unwrap().dim(), h.dim());

    for p in [2, 3] {
        for case in 1..=8 {
            let h = entry(p, &format!("D2-{case}"));
            assert_eq!(h.is_connected().unwrap(), h.dual().unwrap().is_local().unwrap());
            let l = entry(p, &format!("L2-{case}"));
            assert_eq!(l.is_local().unwrap(), l.dual().unwrap().is_connected().unwrap());
        }
    }
}

#[test]
fn primitives_and_filtrations() {
    assert_eq!(entry(3, "D2-1").primitives().dim(), 2);
    assert_eq!(entry(3, "D2-6").primitives().dim(), 1);
    assert_eq!(HopfPresentation::ground(Gf::new(3).unwrap()).primitives().dim(), 0);

    assert_eq!(entry(2, "D2-6").coradical_filtration().unwrap().dims(), vec![1, 2, 3, 4]);
    for p in [2usize, 3, 5] {
        let dims = entry(p as u32, "D1-1").coradical_filtration().unwrap().dims();
        assert_eq!(dims, (1..=p).collect::<Vec<_>>());
    }
    let d = entry(3, "D2-4").dual().unwrap();
    let filt = d.coradical_filtration().unwrap();
    assert!(!filt.exhausts);
    assert!(filt.dims().last().unwrap() < &d.dim());
}

#[test]
fn wedge_rejects_non_subcoalgebras() {
    let h = entry(2, "D2-6");
    let y = Subspace::span(h.field(), h.dim(), &[h.element("y")]).unwrap();
    assert!(h.wedge(&h.unit_line(), &y).is_err());
}

#[test]
fn commutator_filtration_on_catalog() {
    for p in [2, 3] {
        for case in 1..=8 {
            let h = entry(p, &format!("D2-{case}"));
            assert!(commutator_filtration_check(&h).unwrap().passed(), "D2-{case} p={p}");
        }
    }
}

#[test]
fn associated_graded() {
    for p in [2, 3] {
        let gr = assoc_graded(&entry(p, "D2-6")).unwrap();
        assert!(check_graded_truncated(&gr).passed());
        assert!(gr.hopf.is_commutative());
    }
    let h = entry(3, "D2-5");
    assert!(!h.is_commutative());
    let gr = assoc_graded(&h).unwrap();
    assert!(gr.hopf.is_commutative());
    assert!(check_graded_truncated(&gr).passed());
    let gr = assoc_graded(&HopfPresentation::ground(Gf::new(3).unwrap())).unwrap();
    assert_eq!(gr.hopf.dim(), 1);
}

#[test]
fn subalgebras_and_normality() {
    for p in [2usize, 3] {
        let h = entry(p as u32, "D2-6");
        let k = h.subalgebra_generated(&h.primitives()).unwrap();
        assert_eq!(k.dim(), p);
        assert!(h.is_hopf_subalgebra(&k).unwrap());
        assert!(h.is_normal(&k).unwrap());
        let ky = closure(&h, &["y"]);
        assert!(h.is_hopf_subalgebra(&ky).unwrap() == ky.is_full());
        let zero = h.subalgebra_generated(&Subspace::zero(h.field(), h.dim())).unwrap();
        assert_eq!(zero, h.unit_line());
    }
    let h = entry(3, "D2-5");
    assert!(h.is_normal(&closure(&h, &["y"])).unwrap());
    assert!(!h.is_normal(&closure(&h, &["x"])).unwrap());
    assert!(matches!(h.quotient_by(&closure(&h, &["x"])), Err(Error::NormalityViolation(_))));
}

#[test]
fn quotients() {
    for p in [2, 3] {
        let h = entry(p, "D2-6");
        let q = h.quotient_by(&closure(&h, &["x"])).unwrap();
        assert_eq!(q.hopf.dim(), p as usize);
        assert!(q.hopf.check_hopf().passed());
        assert_eq!(q.hopf.primitives().dim(), 1);
        let ybar = q.projection.mul_vec(&h.element("y")).unwrap();
        let f = q.hopf.field();
        let prim = f.add_vec(&kron_vec(f, &ybar, q.hopf.unit()), &kron_vec(f, q.hopf.unit(), &ybar));
        assert_eq!(q.hopf.comultiply(&ybar).unwrap(), prim);

        assert_eq!(h.quotient_by(&h.unit_line()).unwrap().hopf.dim(), h.dim());
        let full = Subspace::full(h.field(), h.dim());
        assert_eq!(h.quotient_by(&full).unwrap().hopf.dim(), 1);
    }
}

#[test]
fn indices_and_first_orders() {
    for p in [2usize, 3] {
        let h = entry(p as u32, "D2-6");
        let k = closure(&h, &["x"]);
        assert_eq!(p_index(&h, &k).unwrap(), 1);
        assert_eq!(h.first_order(&k).unwrap(), FirstOrder::Finite(p));
        assert!(lemma_p_index_bound(&h, &k).unwrap());
        let full = Subspace::full(h.field(), h.dim());
        assert_eq!(h.first_order(&full).unwrap(), FirstOrder::Infinite);
    }
    let h = entry(3, "D1-1");
    assert_eq!(p_index(&h, &h.unit_line()).unwrap(), 1);
    assert_eq!(h.first_order(&h.unit_line()).unwrap(), FirstOrder::Finite(1));
}

#[test]
fn power_coproducts_and_ladders() {
    for p in [2, 3] {
        for case in [6, 7, 8] {
            let h = entry(p, &format!("D2-{case}"));
            let k = closure(&h, &["x"]);
            let y = h.element("y");
            assert!(p_power_coproduct_in(&h, &k, &y, 2).unwrap());
            assert!(ladder_subcoalgebras(&h, &k, &y).unwrap().passed());
        }
    }
}

#[test]
fn relations_over_primitive_subalgebra() {
    let h = entry(3, "D2-7");
    let f = h.field();
    let w = free_basis_minrel(&h, &closure(&h, &["x"]), &h.element("y")).unwrap();
    let r = w.relation.unwrap();
    assert_eq!((w.d, w.free, r.a.clone()), (1, true, vec![0]));
    assert_eq!(r.b, f.neg_vec(&h.element("x")));

    let h = entry(5, "D2-8");
    let r = free_basis_minrel(&h, &closure(&h, &["x"]), &h.element("y")).unwrap().relation.unwrap();
    assert_eq!(r.a, vec![4]);
    assert!(r.b.iter().all(|&c| c == 0));

    let h = entry(2, "D2-6");
    let r = free_basis_minrel(&h, &closure(&h, &["x"]), &h.element("y")).unwrap().relation.unwrap();
    assert_eq!(r.a, vec![0]);
    assert!(r.b.iter().all(|&c| c == 0));
}

#[test]
fn normal_series_examples() {
    for p in [2usize, 3] {
        let s = normal_series_cocomm(&entry(p as u32, "D2-6")).unwrap();
        assert_eq!(s.dims(), vec![1, p, p * p]);
        assert_eq!(s.step_p_indices, vec![1, 1]);
        assert!(s.report.passed());
        let s = normal_series_cocomm(&entry(p as u32, "D1-1")).unwrap();
        assert_eq!(s.dims(), vec![1, p]);
        let s = normal_series_cocomm(&entry(p as u32, "D2-1")).unwrap();
        assert_eq!(s.dims(), vec![1, p * p]);
    }
    assert!(normal_series_cocomm(&entry(2, "L2-5")).is_err());
}

#[test]
fn locality_examples() {
    for p in [2, 3] {
        let r = locality_criterion(&entry(p, "D2-1")).unwrap();
        assert!(r.local && r.primitive_subalgebra_local && r.primitives_nilpotent && r.exhaustive);
        let r = locality_criterion(&entry(p, "D2-4")).unwrap();
        assert!(!r.local && !r.primitive_subalgebra_local && !r.primitives_nilpotent);
        let r = locality_criterion(&entry(p, "D2-3")).unwrap();
        assert!(r.local && r.equivalent());
    }
}

#[test]
fn center_and_primitives() {
    for p in [2, 3, 5] {
        for case in [6, 7, 8] {
            assert!(center_contains_primitives(&entry(p, &format!("D2-{case}"))).unwrap());
        }
        assert!(center_contains_primitives(&entry(p, "D1-1")).unwrap());
    }
    assert!(matches!(center_contains_primitives(&entry(3, "D2-5")), Err(Error::Unsupported(_))));
}

#[test]
fn connected_dimensions_are_prime_powers() {
    for p in [2u32, 3, 5] {
        for case in 1..=8 {
            let h = entry(p, &format!("D2-{case}"));
            let mut d = h.dim();
            while d % p as usize == 0 {
                d /= p as usize;
            }
            assert_eq!(d, 1);
        }
    }
}

#[test]
fn primitives_match_dual_generators() {
    // dim P(H) = dim J/J² with J the augmentation ideal of the local dual.
    for p in [2, 3] {
        for case in 1..=8 {
            let h = entry(p, &format!("D2-{case}"));
            let d = h.dual().unwrap();
            let j = d.augmentation_ideal();
            let j2 = d.algebra().subspace_product(&j, &j).unwrap();
            assert_eq!(h.primitives().dim(), j.dim() - j2.dim(), "D2-{case} p={p}");
        }
    }
}
