use hopfkit::catalog::{build, dual_match, dual_match_with, fingerprint, tabulated_functionals, verify_classification};
use hopfkit::{CatalogId, Family, PresentationDocument};

fn id(s: &str) -> CatalogId {
    s.parse().unwrap()
}

#[test]
fn ids_parse_and_display() {
    assert_eq!(CatalogId::all().len(), 20);
    assert_eq!(id("D2-6").to_string(), "D2-6");
    assert_eq!(id("L1-2").family, Family::L1);
    for bad in ["D2-9", "D1-0", "X1-1", "D2", "L2-x"] {
        assert!(bad.parse::<CatalogId>().is_err(), "{bad}");
    }
    assert_eq!(CatalogId::family_members(Family::D2).len(), 8);
}

#[test]
fn every_entry_is_hopf_with_expected_dimension() {
    for p in [2, 3, 5] {
        for cid in CatalogId::all() {
            let h = build(p, cid).unwrap();
            let expected = match cid.family {
                Family::D1 | Family::L1 => p as usize,
                Family::D2 | Family::L2 => (p * p) as usize,
            };
            assert_eq!(h.dim(), expected, "{cid} p={p}");
            assert!(h.check_hopf().passed(), "{cid} p={p}");
        }
    }
    assert!(build(4, id("D1-1")).is_err());
}

#[test]
fn documents_round_trip() {
    for p in [2, 3, 5] {
        for cid in CatalogId::all() {
            let h = build(p, cid).unwrap();
            let doc = PresentationDocument::from_presentation(&h);
            let text = doc.to_json_string();
            let back = PresentationDocument::parse(&text).unwrap().to_presentation().unwrap();
            assert_eq!(back.dim(), h.dim());
            assert_eq!(back.algebra().mult_matrix(), h.algebra().mult_matrix(), "{cid} p={p}");
            assert_eq!(back.comult_matrix(), h.comult_matrix(), "{cid} p={p}");
            assert_eq!(back.counit(), h.counit());
            assert_eq!(PresentationDocument::from_presentation(&back).to_json_string(), text);
        }
    }
}

#[test]
fn connected_families_have_primitive_generators() {
    for p in [2, 3] {
        for cid in CatalogId::all().into_iter().filter(|c| c.family.is_connected_family()) {
            assert!(build(p, cid).unwrap().is_connected().unwrap(), "{cid} p={p}");
        }
        let split: Vec<usize> = CatalogId::family_members(Family::D2)
            .into_iter()
            .map(|cid| build(p, cid).unwrap().primitives().dim())
            .collect();
        assert_eq!(split, [2, 2, 2, 2, 2, 1, 1, 1]);
    }
}

#[test]
fn fingerprints_separate_rank_one_primitive_entries() {
    let f6 = fingerprint(&build(2, id("D2-6")).unwrap()).unwrap();
    let f7 = fingerprint(&build(2, id("D2-7")).unwrap()).unwrap();
    let f8 = fingerprint(&build(2, id("D2-8")).unwrap()).unwrap();
    assert_eq!((f6.dim_p, f7.dim_p, f8.dim_p), (1, 1, 1));
    assert_eq!(f6.min_alg_generators, Some(2));
    assert_eq!(f7.min_alg_generators, Some(1));
    assert_eq!(f8.semisimple, Some(true));
    assert!(f6.local && f7.local && !f8.local);
}

#[test]
fn tabulated_duals_except_case_eight() {
    for p in [2, 3, 5] {
        for k in 1..=7 {
            let m = dual_match(p, k).unwrap();
            assert!(m.passed(), "k={k} p={p}: {:?}", m.report);
        }
    }
    assert!(dual_match(2, 8).unwrap().passed());
    assert!(!dual_match(3, 8).unwrap().passed());
}

#[test]
fn corrected_functional_for_case_eight() {
    for p in [2u32, 3, 5] {
        let pu = p as usize;
        let mut xi = vec![0; pu * pu];
        for i in 1..pu {
            xi[i * pu] = 1;
        }
        assert!(dual_match_with(p, 8, &[xi]).unwrap().passed(), "p={p}");
    }
    assert_eq!(tabulated_functionals(3, 8).unwrap().len(), 1);
    assert_eq!(tabulated_functionals(3, 1).unwrap().len(), 2);
}

#[test]
fn dual_fingerprints_match_local_family() {
    for p in [2, 3] {
        for k in 1..=8 {
            let d = build(p, CatalogId::new(Family::D2, k).unwrap()).unwrap().dual().unwrap();
            let l = build(p, CatalogId::new(Family::L2, k).unwrap()).unwrap();
            assert_eq!(fingerprint(&d).unwrap(), fingerprint(&l).unwrap(), "k={k} p={p}");
        }
    }
}

#[test]
fn classification_reports() {
    for p in [2, 3, 5] {
        let r = verify_classification(p).unwrap();
        assert!(r.passed(), "p={p}: {r:?}");
    }
}
