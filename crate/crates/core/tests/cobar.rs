use hopfkit::catalog::build;
use hopfkit::cobar::{
    adjoint_module_laws, adjoint_t, differential, differential_by_kron, extension_element, h2_basis_ug,
    induced_injection, omega, omega_defect, CochainComplex, DEFAULT_MAX_TENSOR,
};
use hopfkit::linalg::tensor::kron_vec;
use hopfkit::{AlgebraData, CatalogId, Error, Gf, HopfPresentation, RestrictedLie, Subspace, Vector};

fn entry(p: u32, id: &str) -> HopfPresentation {
    build(p, id.parse::<CatalogId>().unwrap()).unwrap()
}

fn closure(h: &HopfPresentation, labels: &[&str]) -> Subspace {
    let vs: Vec<_> = labels.iter().map(|l| h.element(l)).collect();
    h.subalgebra_generated(&Subspace::span(h.field(), h.dim(), &vs).unwrap()).unwrap()
}

/// `k[x1, x2, z] / (x1^p, x2^p, z^p)` with `x1, x2` primitive and
/// `Δ(z) = z⊗1 + 1⊗z + x1⊗x2`; basis `x1^a x2^b z^c` at `a·p² + b·p + c`.
fn mixed_term_extension(p: u32) -> HopfPresentation {
    let f = Gf::new(p).unwrap();
    let pu = p as usize;
    let dim = pu * pu * pu;
    let exps = |i: usize| [i / (pu * pu), (i / pu) % pu, i % pu];
    let index = |e: [usize; 3]| e[0] * pu * pu + e[1] * pu + e[2];
    let labels = (0..dim)
        .map(|i| {
            let e = exps(i);
            let mut s = String::new();
            for (name, k) in ["x1", "x2", "z"].iter().zip(e) {
                match k {
                    0 => {}
                    1 => s.push_str(name),
                    _ => s.push_str(&format!("{name}^{k}")),
                }
            }
            if s.is_empty() {
                "1".to_string()
            } else {
                s
            }
        })
        .collect();
    let alg = AlgebraData::from_fn(f, labels, f.basis_vec(dim, 0), |i, j| {
        let (a, b) = (exps(i), exps(j));
        let e = [a[0] + b[0], a[1] + b[1], a[2] + b[2]];
        if e.iter().any(|&k| k >= pu) {
            vec![0; dim]
        } else {
            f.basis_vec(dim, index(e))
        }
    })
    .unwrap();
    // Coproducts of monomials by multiplying generator coproducts in H⊗H.
    let scaffold = HopfPresentation::new(alg.clone(), vec![Vec::new(); dim], f.basis_vec(dim, 0), None).unwrap();
    let one = f.basis_vec(dim, 0);
    let e = |k: [usize; 3]| f.basis_vec(dim, index(k));
    let prim = |v: &Vector| f.add_vec(&kron_vec(f, v, &one), &kron_vec(f, &one, v));
    let (x1, x2, z) = (e([1, 0, 0]), e([0, 1, 0]), e([0, 0, 1]));
    let gens = [prim(&x1), prim(&x2), f.add_vec(&prim(&z), &kron_vec(f, &x1, &x2))];
    let coproducts: Vec<Vector> = (0..dim)
        .map(|i| {
            let mut t = kron_vec(f, &one, &one);
            for (g, k) in gens.iter().zip(exps(i)) {
                for _ in 0..k {
                    t = scaffold.tensor_multiply(&t, g);
                }
            }
            t
        })
        .collect();
    HopfPresentation::from_dense_coproducts(alg, &coproducts, f.basis_vec(dim, 0), None)
        .unwrap()
        .with_antipode()
        .unwrap()
}

#[test]
fn omega_small_primes() {
    let h = entry(2, "D1-1");
    let x = h.element("x");
    assert_eq!(omega(&h, &x).unwrap(), kron_vec(h.field(), &x, &x));
    let h = entry(3, "D1-1");
    let f = h.field();
    let (x, x2) = (h.element("x"), h.element("x^2"));
    assert_eq!(omega(&h, &x).unwrap(), f.add_vec(&kron_vec(f, &x, &x2), &kron_vec(f, &x2, &x)));
}

#[test]
fn differential_examples() {
    let h = entry(3, "D1-1");
    let f = h.field();
    let c = CochainComplex::build(&h, 3).unwrap();
    let one = h.unit().to_vec();
    assert_eq!(c.d(1).mul_vec(&one).unwrap(), kron_vec(f, &one, &one));
    assert!(c.d(1).mul_vec(&h.element("x")).unwrap().iter().all(|&v| v == 0));
    assert!(c.d(2).mul(c.d(1)).unwrap().is_zero());
    assert!(c.d(0).is_zero());
}

#[test]
fn differentials_square_to_zero_on_catalog() {
    for p in [2, 3] {
        for id in CatalogId::all() {
            let h = build(p, id).unwrap();
            let c = CochainComplex::build(&h, 3).unwrap();
            for n in 1..3 {
                assert!(c.d(n).mul(c.d(n - 1)).unwrap().is_zero(), "{id} p={p} n={n}");
            }
        }
    }
}

#[test]
fn direct_differential_matches_kronecker_assembly() {
    for id in ["D2-5", "D2-6", "L2-5", "L2-7"] {
        let h = entry(2, id);
        for n in 0..3 {
            assert_eq!(differential(&h, n).unwrap(), differential_by_kron(&h, n).unwrap(), "{id} n={n}");
        }
    }
    let h = entry(3, "D2-7");
    for n in 0..3 {
        assert_eq!(differential(&h, n).unwrap(), differential_by_kron(&h, n).unwrap());
    }
}

#[test]
fn first_cohomology_is_primitives() {
    for p in [2, 3] {
        for id in CatalogId::all() {
            let h = build(p, id).unwrap();
            let c = CochainComplex::build(&h, 2).unwrap();
            assert_eq!(c.cohomology(0).unwrap().dimension, 1, "{id}");
            assert_eq!(c.cohomology(1).unwrap().dimension, h.primitives().dim(), "{id} p={p}");
        }
    }
}

#[test]
fn second_cohomology_of_enveloping_algebras() {
    let g = RestrictedLie::one_dim(Gf::new(3).unwrap(), 0).unwrap();
    let r = h2_basis_ug(&g, DEFAULT_MAX_TENSOR).unwrap();
    assert!(r.passed());
    assert_eq!(r.classes.len(), 1);

    let g = RestrictedLie::dim2_catalog(2, 1).unwrap();
    let r = h2_basis_ug(&g, DEFAULT_MAX_TENSOR).unwrap();
    assert!(r.passed());
    let names: Vec<&str> = r.classes.iter().map(|(n, _)| n.as_str()).collect();
    assert_eq!(names, ["ω(x)", "ω(y)", "x⊗y"]);

    let g = RestrictedLie::dim2_catalog(2, 5).unwrap();
    assert_eq!(h2_basis_ug(&g, DEFAULT_MAX_TENSOR).unwrap().dimension, 3);

    let g = RestrictedLie::one_dim(Gf::new(5).unwrap(), 1).unwrap();
    assert!(h2_basis_ug(&g, DEFAULT_MAX_TENSOR).unwrap().passed());

    let g = RestrictedLie::dim2_catalog(5, 1).unwrap();
    assert!(matches!(h2_basis_ug(&g, 1000), Err(Error::Resource(_))));
}

#[test]
fn coboundary_solving() {
    let h = entry(3, "D1-1");
    let c = CochainComplex::build(&h, 3).unwrap();
    let theta = c.is_coboundary(&vec![0; 9]).unwrap().unwrap();
    assert!(c.d(1).mul_vec(&theta).unwrap().iter().all(|&v| v == 0));
    assert_eq!(c.is_coboundary(&omega(&h, &h.element("x")).unwrap()).unwrap(), None);
    let not_cocycle = kron_vec(h.field(), &h.element("x^2"), h.unit());
    assert!(matches!(c.is_coboundary(&not_cocycle), Err(Error::InvalidInput(_))));

    for p in [2u32, 3] {
        let u = RestrictedLie::dim2_catalog(p, 4).unwrap().enveloping().unwrap();
        let c = CochainComplex::build(&u, 3).unwrap();
        let xs = vec![u.element("x"), u.element("y")];
        for a in 0..p {
            for b in 0..p {
                let t = omega_defect(&u, &xs, &[a, b]).unwrap();
                assert!(c.is_coboundary(&t).unwrap().is_some(), "p={p} α=({a},{b})");
            }
        }
    }
}

#[test]
fn adjoint_maps() {
    let h = entry(3, "D2-1");
    let x = h.element("x");
    for n in 1..3 {
        assert!(adjoint_t(&h, &x, n).unwrap().is_zero());
    }
    assert!(matches!(adjoint_t(&h, &h.element("xy"), 1), Err(Error::InvalidInput(_))));

    let h = entry(2, "D2-5");
    let c = CochainComplex::build(&h, 3).unwrap();
    let (x, y) = (h.element("x"), h.element("y"));
    assert!(c.chain_map_check(&x).unwrap());
    assert!(c.chain_map_check(&y).unwrap());
    let tx = adjoint_t(&h, &x, 2).unwrap();
    let x2 = h.multiply(&x, &x).unwrap();
    assert_eq!(tx.pow(2).unwrap(), adjoint_t(&h, &x2, 2).unwrap());
    assert!(!adjoint_t(&h, &x, 2).unwrap().is_zero());
    assert!(adjoint_module_laws(&h, &x, &y, 2).unwrap());
}

#[test]
fn injection_into_second_cohomology() {
    let h = entry(2, "D2-6");
    let r = induced_injection(&h, &closure(&h, &["x"]), DEFAULT_MAX_TENSOR).unwrap();
    assert_eq!((r.first_order, r.quotient_dim), (2, 1));
    assert!(r.injective && r.equivariant);
    // The image of y is x⊗x in K⊗K coordinates (K basis 1, x).
    assert_eq!(r.images[0], vec![0, 0, 0, 1]);

    let h = entry(3, "D2-7");
    let r = induced_injection(&h, &closure(&h, &["x"]), DEFAULT_MAX_TENSOR).unwrap();
    assert_eq!(r.first_order, 3);
    assert!(r.injective && r.equivariant);
    assert!(r.images[0].iter().any(|&c| c != 0));

    let h = entry(3, "D2-1");
    assert!(matches!(
        induced_injection(&h, &closure(&h, &["x"]), DEFAULT_MAX_TENSOR),
        Err(Error::Unsupported(_))
    ));
}

#[test]
fn extension_elements() {
    for p in [2, 3] {
        let h = entry(p, "D2-6");
        let e = extension_element(&h, &closure(&h, &["x"])).unwrap();
        assert_eq!(e.first_order, p as usize);
        assert_eq!(e.alpha, vec![1]);
        assert!(e.alpha_jk.is_empty());
        assert!(e.verified);

        let h = entry(p, "D2-1");
        let k = closure(&h, &["x"]);
        let e = extension_element(&h, &k).unwrap();
        assert_eq!(e.first_order, 1);
        assert!(h.primitives().contains_vector(&e.x).unwrap());
        assert!(!k.contains_vector(&e.x).unwrap());

        let full = Subspace::full(h.field(), h.dim());
        assert!(matches!(extension_element(&h, &full), Err(Error::InvalidInput(_))));
    }
}

#[test]
fn mixed_term_gives_first_order_two() {
    let h = mixed_term_extension(3);
    assert!(h.check_hopf().passed());
    let k = closure(&h, &["x1", "x2"]);
    assert_eq!(k.dim(), 9);
    assert_eq!(h.first_order(&k).unwrap().finite(), Some(2));
    let e = extension_element(&h, &k).unwrap();
    assert_eq!(e.first_order, 2);
    assert!(e.verified);
    assert!(e.alpha.iter().all(|&a| a == 0));
    assert_eq!(e.alpha_jk.len(), 1);

    let r = induced_injection(&h, &k, DEFAULT_MAX_TENSOR).unwrap();
    assert!(r.injective && r.equivariant);
}
