use super::*;
use crate::category::shipped;
use crate::linalg::Field;

fn engine(name: &str) -> Engine {
    Engine::new(shipped::load(name).unwrap())
}

/// Centre of H by a direct commutant solve on structure constants.
fn centre_dim(cat: &Category) -> usize {
    let alg = &cat.hopf().unwrap().algebra;
    let d = alg.dim();
    let mut red = RowReducer::new(alg.field, d);
    for i in 0..d {
        let b = alg.basis_element(i);
        // z ↦ z·b − b·z, column j is the image of b_j.
        let cols: Vec<Vec<Scalar>> = (0..d)
            .map(|j| {
                let z = alg.basis_element(j);
                alg.sub(&alg.mul(&z, &b), &alg.mul(&b, &z))
            })
            .collect();
        let m = Matrix::from_columns(alg.field, d, &cols);
        for r in 0..d {
            red.push(m.row(r).to_vec());
        }
    }
    d - red.rank()
}

/// The character h ↦ χ(h) with Λ·h = χ(h)Λ for a nonzero left integral Λ.
fn modular_character(cat: &Category) -> Vec<Scalar> {
    let alg = &cat.hopf().unwrap().algebra;
    let d = alg.dim();
    let mut red = RowReducer::new(alg.field, d);
    for i in 0..d {
        let m = &alg.left_mult_matrix(&alg.basis_element(i))
            - &Matrix::identity(alg.field, d).scale(&alg.counit[i]);
        for r in 0..d {
            red.push(m.row(r).to_vec());
        }
    }
    let lam = red.kernel_basis().remove(0);
    let pivot = lam.iter().position(|x| !x.is_zero()).unwrap();
    (0..d)
        .map(|i| {
            let lh = alg.mul(&lam, &alg.basis_element(i));
            lh[pivot].try_div(&lam[pivot]).unwrap()
        })
        .collect()
}

#[test]
fn natural_endomorphisms_are_the_centre() {
    for (name, expected) in [("z2", 2), ("sweedler", 1), ("trivial", 1), ("z3_braided", 3)] {
        let cat = shipped::load(name).unwrap();
        let g = cat.projective_generator();
        let end = natural_endomorphisms_over(&cat, &g).unwrap();
        assert_eq!(end.dim(), centre_dim(&cat), "{name}");
        assert_eq!(end.dim(), expected, "{name}");
    }
}

#[test]
fn trivial_category_end_is_everything() {
    let cat = shipped::load("trivial").unwrap();
    let id = Matrix::identity(Field::Rational, 3);
    let p = BifunctorPresentation {
        dim: 3,
        left: vec![id.clone()],
        right: vec![id],
        object: None,
    };
    p.check().unwrap();
    assert_eq!(end_over_generator(&cat, &p).unwrap().dim(), 3);
    let q = coend_over_generator(&cat, &p).unwrap();
    assert!(q.projection.is_identity());
}

#[test]
fn canonical_end_dimensions() {
    for name in ["z2", "sweedler", "z3_braided", "trivial"] {
        let e = engine(name);
        let d = e.category().hopf().unwrap().algebra.dim();
        assert_eq!(e.canonical_end().unwrap().size(), d, "{name}");
    }
    let fusion = engine("vec_z2");
    assert_eq!(fusion.canonical_end().unwrap(), Obj::Fusion(vec![2, 0]));
    let fib = engine("fibonacci");
    assert_eq!(fib.canonical_end().unwrap(), Obj::Fusion(vec![2, 1]));
    let trivial = engine("trivial");
    assert!(trivial.category().is_unit(&trivial.canonical_end().unwrap()));
}

#[test]
fn canonical_end_agrees_across_backends() {
    let hopf = engine("z2");
    let a = hopf.canonical_end().unwrap();
    let fusion = engine("vec_z2");
    let f = fusion.category().fusion().unwrap();
    let oracle: usize = (0..f.rank())
        .map(|i| f.tensor(&f.simple(f.dual[i]), &f.simple(i)).iter().sum::<u64>() as usize)
        .sum();
    assert_eq!(a.size(), oracle);
    // On k[ℤ/2] the end is I ⊕ I: two copies of the trivial module.
    let cat = hopf.category();
    assert_eq!(cat.hom(&a, &cat.unit()).unwrap().dim(), 2);
}

#[test]
fn canonical_end_is_a_submodule_of_its_ambient() {
    let e = engine("sweedler");
    let cat = e.category();
    let inv = e.invariants().unwrap();
    let g = cat.projective_generator();
    let ambient = cat.tensor(&cat.dual(&g).unwrap(), &g).unwrap();
    let inc = inv.end_inclusion.clone().unwrap();
    cat.morphism(&inv.canonical_end, &ambient, inc).unwrap();
}

#[test]
fn alpha_matches_the_modular_character() {
    for name in ["z2", "sweedler", "z3_braided", "trivial"] {
        let e = engine(name);
        let cat = e.category();
        let alpha = e.alpha().unwrap();
        let m = alpha.module().unwrap();
        assert_eq!(m.dim, 1);
        let chi = modular_character(cat);
        let acts: Vec<Scalar> = m.action.iter().map(|a| a.get(0, 0).clone()).collect();
        let alg = &cat.hopf().unwrap().algebra;
        let inverse: Vec<Scalar> = (0..alg.dim())
            .map(|i| {
                let s = alg.antipode_of(&alg.basis_element(i));
                s.iter().zip(&chi).fold(Scalar::zero(alg.field), |acc, (x, c)| &acc + &(x * c))
            })
            .collect();
        assert!(acts == chi || acts == inverse, "{name}");
    }
    let sw = engine("sweedler");
    assert_eq!(sw.alpha().unwrap(), sw.category().object("sign").unwrap());
    assert_eq!(sw.category().describe(&sw.alpha().unwrap()), "sign");
    let z2 = engine("z2");
    assert!(z2.category().is_unit(&z2.alpha().unwrap()));
}

#[test]
fn nakayama_of_unit() {
    for name in ["z2", "sweedler", "z3_braided", "trivial"] {
        let e = engine(name);
        let cat = e.category();
        let unit = cat.unit();
        let nr = e.nakayama_right(&unit).unwrap();
        let nl = e.nakayama_left(&unit).unwrap();
        let (f, g) = cat.find_isomorphism(&nl, &e.alpha().unwrap()).unwrap().expect("N_l(I) ≅ α");
        assert!(cat.compose(&g, &f).unwrap().matrix.is_identity());
        let (f, g) = cat.find_isomorphism(&nr, &e.alpha_inv().unwrap()).unwrap().expect("N_r(I) ≅ α⁻¹");
        assert!(cat.compose(&f, &g).unwrap().matrix.is_identity());
    }
    let sw = engine("sweedler");
    let nr = sw.nakayama_right(&sw.category().unit()).unwrap();
    assert!(!sw.category().is_unit(&nr));
}

#[test]
fn nakayama_left_over_the_dual_cogenerator() {
    for name in ["z2", "sweedler"] {
        let e = engine(name);
        let cat = e.category();
        let cogen = cat.dual(&cat.projective_generator()).unwrap();
        let nl = nakayama_left_over(cat, &cat.unit(), &cogen).unwrap().object.unwrap();
        assert!(cat.find_isomorphism(&nl, &e.alpha().unwrap()).unwrap().is_some(), "{name}");
    }
}

#[test]
fn nakayama_on_the_trivial_category_is_identity() {
    let e = engine("trivial");
    let k = e.category().object("k").unwrap();
    assert_eq!(e.nakayama_right(&k).unwrap().size(), 1);
    assert_eq!(e.nakayama_left(&k).unwrap().size(), 1);
}

#[test]
fn nakayama_on_projectives() {
    // N_r(P) ≅ α⁻¹⊗P for projective P in a finite tensor category.
    let e = engine("sweedler");
    let cat = e.category();
    for name in ["P_plus", "P_minus", "H"] {
        let p = cat.object(name).unwrap();
        let nr = e.nakayama_right(&p).unwrap();
        let shifted = cat.tensor(&e.alpha_inv().unwrap(), &p).unwrap();
        assert!(cat.find_isomorphism(&nr, &shifted).unwrap().is_some(), "{name}");
    }
}

#[test]
fn unimodularity_dichotomy() {
    for (name, traces, integrals_pair) in [
        ("z2", 1, (1, 1)),
        ("sweedler", 0, (1, 0)),
        ("trivial", 1, (1, 1)),
        ("z3_braided", 1, (1, 1)),
    ] {
        let e = engine(name);
        assert_eq!(e.modified_trace_dim().unwrap(), traces, "{name}");
        assert_eq!(e.integrals().unwrap(), integrals_pair, "{name}");
        assert_eq!(e.is_unimodular().unwrap(), traces == 1);
    }
    for name in ["vec_z2", "fibonacci"] {
        let e = engine(name);
        assert_eq!(e.modified_trace_dim().unwrap(), 1);
        assert!(matches!(e.integrals(), Err(Error::UnsupportedForBackend { .. })));
    }
}

#[test]
fn explicit_integrals() {
    let z2 = shipped::load("z2").unwrap();
    let alg = &z2.hopf().unwrap().algebra;
    let lam = alg.add(&alg.basis_element(0), &alg.basis_element(1));
    for i in 0..2 {
        let lhs = alg.mul(&alg.basis_element(i), &lam);
        let rhs: Vec<Scalar> = lam.iter().map(|x| x * &alg.counit[i]).collect();
        assert_eq!(lhs, rhs);
    }
    let sw = shipped::load("sweedler").unwrap();
    let alg = &sw.hopf().unwrap().algebra;
    // Λ = (1 + g)x = x + gx.
    let lam = alg.add(&alg.basis_element(2), &alg.basis_element(3));
    for i in 0..4 {
        let lhs = alg.mul(&alg.basis_element(i), &lam);
        let rhs: Vec<Scalar> = lam.iter().map(|x| x * &alg.counit[i]).collect();
        assert_eq!(lhs, rhs);
    }
    // Λ·g = −Λ: the right character is the sign.
    let lg = alg.mul(&lam, &alg.basis_element(1));
    assert_eq!(lg, lam.iter().map(|x| -x).collect::<Vec<_>>());
}

#[test]
fn ball_pairing_coend() {
    for (name, expected) in [("z2", 1), ("sweedler", 0), ("trivial", 1)] {
        let cat = shipped::load(name).unwrap();
        let g = cat.projective_generator();
        let q = ball_pairing_over(&cat, &g).unwrap();
        assert_eq!(q.dim(), expected, "{name}");
    }
}

#[test]
fn ball_pairing_dinaturality() {
    let cat = shipped::load("z2").unwrap();
    let g = cat.projective_generator();
    let into = cat.hom(&cat.unit(), &g).unwrap();
    let out = cat.hom(&g, &cat.unit()).unwrap();
    let q = ball_pairing_over(&cat, &g).unwrap();
    let field = cat.field();
    for e in cat.hom(&g, &g).unwrap().basis {
        for f in &into.basis {
            for h in &out.basis {
                let ef = into.coordinates(&(&e.matrix * &f.matrix)).unwrap();
                let fc = into.coordinates(&f.matrix).unwrap();
                let he = out.coordinates(&(&h.matrix * &e.matrix)).unwrap();
                let hc = out.coordinates(&h.matrix).unwrap();
                let a = Matrix::column(field, ef).kron(&Matrix::column(field, hc));
                let b = Matrix::column(field, fc).kron(&Matrix::column(field, he));
                assert_eq!(&q.projection * &a, &q.projection * &b);
            }
        }
    }
}

#[test]
fn excision_ball_matches_modified_traces() {
    for name in ["z2", "sweedler", "z3_braided", "trivial"] {
        let e = engine(name);
        let cat = e.category();
        let q = excision_ball_over(cat, &cat.projective_generator()).unwrap();
        assert_eq!(q.dim(), e.modified_trace_dim().unwrap(), "{name}");
    }
}

#[test]
fn alpha_is_transparent() {
    for name in ["z2", "sweedler", "z3_braided", "trivial"] {
        let e = engine(name);
        let cat = e.category();
        let alpha = e.alpha().unwrap();
        assert!(cat.twist(&alpha).unwrap().matrix.is_identity(), "{name}");
        for (_, x) in cat.roster() {
            let dbl = cat
                .compose(&cat.braiding(&alpha, &x).unwrap(), &cat.braiding(&x, &alpha).unwrap())
                .unwrap();
            assert!(dbl.matrix.is_identity(), "{name}");
        }
    }
}

#[test]
fn presentations_commute() {
    let cat = shipped::load("sweedler").unwrap();
    let g = cat.projective_generator();
    let field = cat.field();
    let n = g.size();
    let id = Matrix::identity(field, n);
    let ends: Vec<Matrix> = cat.hom(&g, &g).unwrap().basis.into_iter().map(|m| m.matrix).collect();
    let p = BifunctorPresentation {
        dim: n * n,
        left: ends.iter().map(|e| e.transpose().kron(&id)).collect(),
        right: ends.iter().map(|e| id.kron(e)).collect(),
        object: None,
    };
    p.check().unwrap();
    let bad = BifunctorPresentation {
        dim: 2,
        left: vec![Matrix::from_ints(&[&[0, 1], &[0, 0]])],
        right: vec![Matrix::from_ints(&[&[0, 0], &[1, 0]])],
        object: None,
    };
    assert!(bad.check().is_err());
}

#[test]
fn invariants_report() {
    let e = engine("sweedler");
    let r = serde_json::to_value(e.report().unwrap()).unwrap();
    assert_eq!(r["unimodular"], false);
    assert_eq!(r["dim_modified_traces"], 0);
    assert_eq!(r["dim_A"], 4);
    assert_eq!(r["alpha"], "sign");
    assert_eq!(r["dim_left_integrals"], 1);
    assert_eq!(r["dim_integrals_tensor_k"], 0);
    for entry in r["background_charge"].as_array().unwrap() {
        assert_eq!(entry["holds"], true);
    }
    let f = engine("vec_z2");
    let r = serde_json::to_value(f.report().unwrap()).unwrap();
    assert_eq!(r["alpha"], "I");
    assert_eq!(r["dim_A"], 2);
    assert!(r["dim_left_integrals"].is_null());
}
