use super::*;
use crate::linalg::Rational;

fn hopf_examples() -> Vec<(&'static str, Category)> {
    ["z2", "sweedler", "z3_braided", "trivial"]
        .into_iter()
        .map(|n| (n, shipped::load(n).unwrap()))
        .collect()
}

fn modules(cat: &Category) -> Vec<Obj> {
    let mut out: Vec<Obj> = cat.roster().into_iter().map(|(_, o)| o).collect();
    out.push(cat.unit());
    out
}

#[test]
fn shipped_files_validate_without_warnings() {
    for name in shipped::NAMES {
        let data = CategoryData::from_json_str(shipped::source(name).unwrap()).unwrap();
        let report = validate(&data);
        assert!(report.ok(), "{name}: {:?}", report.first_failure());
        assert!(report.warnings.is_empty(), "{name}: {:?}", report.warnings);
    }
}

#[test]
fn sign_squared_is_trivial() {
    let cat = shipped::load("z2").unwrap();
    let sign = cat.object("sign").unwrap();
    let t = cat.tensor(&sign, &sign).unwrap();
    assert_eq!(t, cat.object("trivial").unwrap());
    assert!(cat.is_unit(&t));
}

#[test]
fn unit_is_absorbed() {
    for (_, cat) in hopf_examples() {
        for x in modules(&cat) {
            assert_eq!(cat.tensor(&cat.unit(), &x).unwrap(), x);
            assert_eq!(cat.tensor(&x, &cat.unit()).unwrap(), x);
        }
    }
}

#[test]
fn fibonacci_fusion() {
    let cat = shipped::load("fibonacci").unwrap();
    let tau = cat.object("tau").unwrap();
    let fib = cat.fusion().unwrap().clone();
    // Enumerate rank-two rings with a self-dual generator, t⊗t = a·1 + b·t,
    // keep those passing the ring axioms with multiplicities at most one.
    let mut found = Vec::new();
    for a in 0..=2u64 {
        for b in 0..=1u64 {
            let mut ring = fib.clone();
            ring.fusion[1][1] = vec![a, b];
            if ring.check().iter().all(|(_, fail)| fail.is_none()) && b > 0 {
                found.push(vec![a, b]);
            }
        }
    }
    assert_eq!(found, vec![vec![1, 1]]);
    assert_eq!(cat.tensor(&tau, &tau).unwrap(), Obj::Fusion(found[0].clone()));
}

#[test]
fn hom_dimensions() {
    for (_, cat) in hopf_examples() {
        assert_eq!(cat.hom(&cat.unit(), &cat.unit()).unwrap().dim(), 1);
    }
    let z2 = shipped::load("z2").unwrap();
    let (t, s) = (z2.object("trivial").unwrap(), z2.object("sign").unwrap());
    assert_eq!(z2.hom(&t, &s).unwrap().dim(), 0);
    let sw = shipped::load("sweedler").unwrap();
    let h = sw.object("H").unwrap();
    assert_eq!(sw.hom(&h, &h).unwrap().dim(), 4);
    let vec = shipped::load("vec_z2").unwrap();
    let g = vec.projective_generator();
    assert_eq!(g, Obj::Fusion(vec![1, 1]));
    assert_eq!(vec.hom(&g, &g).unwrap().dim(), 2);
}

#[test]
fn hom_basis_elements_intertwine() {
    let sw = shipped::load("sweedler").unwrap();
    let h = sw.object("H").unwrap();
    let p = sw.object("P_plus").unwrap();
    let alg = &sw.hopf().unwrap().algebra;
    let hom = sw.hom(&h, &p).unwrap();
    assert!(hom.dim() > 0);
    for f in &hom.basis {
        for i in 0..alg.dim() {
            let lhs = &p.module().unwrap().action[i] * &f.matrix;
            let rhs = &f.matrix * &h.module().unwrap().action[i];
            assert_eq!(lhs, rhs);
        }
    }
}

#[test]
fn dual_of_unit_and_its_evaluations() {
    for (_, cat) in hopf_examples() {
        let i = cat.unit();
        assert_eq!(cat.dual(&i).unwrap(), i);
        for m in [cat.ev(&i), cat.coev(&i), cat.ev_r(&i), cat.coev_r(&i)] {
            assert!(m.unwrap().matrix.is_identity());
        }
    }
}

#[test]
fn zigzag_identities() {
    for (name, cat) in hopf_examples() {
        for x in modules(&cat) {
            let xd = cat.dual(&x).unwrap();
            let id = cat.identity(&x);
            let idd = cat.identity(&xd);
            let left = cat
                .compose(
                    &cat.tensor_mor(&id, &cat.ev(&x).unwrap()).unwrap(),
                    &cat.tensor_mor(&cat.coev(&x).unwrap(), &id).unwrap(),
                )
                .unwrap();
            assert!(left.matrix.is_identity(), "{name}: left zigzag on X");
            let left_dual = cat
                .compose(
                    &cat.tensor_mor(&cat.ev(&x).unwrap(), &idd).unwrap(),
                    &cat.tensor_mor(&idd, &cat.coev(&x).unwrap()).unwrap(),
                )
                .unwrap();
            assert!(left_dual.matrix.is_identity(), "{name}: left zigzag on X^∨");
            let right = cat
                .compose(
                    &cat.tensor_mor(&cat.ev_r(&x).unwrap(), &id).unwrap(),
                    &cat.tensor_mor(&id, &cat.coev_r(&x).unwrap()).unwrap(),
                )
                .unwrap();
            assert!(right.matrix.is_identity(), "{name}: right zigzag on X");
            let right_dual = cat
                .compose(
                    &cat.tensor_mor(&idd, &cat.ev_r(&x).unwrap()).unwrap(),
                    &cat.tensor_mor(&cat.coev_r(&x).unwrap(), &idd).unwrap(),
                )
                .unwrap();
            assert!(right_dual.matrix.is_identity(), "{name}: right zigzag on X^∨");
        }
    }
}

#[test]
fn evaluations_are_intertwiners() {
    for (_, cat) in hopf_examples() {
        for x in modules(&cat) {
            for m in [cat.ev(&x), cat.coev(&x), cat.ev_r(&x), cat.coev_r(&x)] {
                let m = m.unwrap();
                cat.morphism(&m.dom, &m.cod, m.matrix.clone()).unwrap();
            }
        }
    }
}

#[test]
fn sweedler_pivotal_is_grouplike_generator() {
    let cat = shipped::load("sweedler").unwrap();
    let h = cat.hopf().unwrap();
    let g = h.algebra.basis_element(1);
    assert_eq!(h.derived.pivotal, g);
    assert_eq!(h.algebra.delta(&g), h.algebra.outer(&g, &g));
}

#[test]
fn braiding_with_unit_and_trivial_r() {
    for (_, cat) in hopf_examples() {
        for x in modules(&cat) {
            assert!(cat.braiding(&cat.unit(), &x).unwrap().matrix.is_identity());
        }
    }
    let z2 = shipped::load("z2").unwrap();
    let h = z2.object("H").unwrap();
    let c = z2.braiding(&h, &h).unwrap().matrix;
    let flip = Matrix::from_ints(&[&[1, 0, 0, 0], &[0, 0, 1, 0], &[0, 1, 0, 0], &[0, 0, 0, 1]]);
    assert_eq!(c, flip);
}

#[test]
fn twist_scalars_on_simples() {
    let sw = shipped::load("sweedler").unwrap();
    for name in ["trivial", "sign"] {
        let x = sw.object(name).unwrap();
        assert!(sw.twist(&x).unwrap().matrix.is_identity());
    }
    let z3 = shipped::load("z3_braided").unwrap();
    for i in 0..3i64 {
        let x = z3.object(&format!("chi{i}")).unwrap();
        let expected = Scalar::zeta_pow(3, -(i * i));
        assert_eq!(z3.twist(&x).unwrap().matrix, Matrix::scalar(expected));
    }
    let fib = shipped::load("fibonacci").unwrap();
    let tau = fib.object("tau").unwrap();
    assert_eq!(fib.twist(&tau).unwrap().matrix, Matrix::scalar(Scalar::zeta_pow(5, 2)));
}

#[test]
fn yang_baxter_and_ribbon_identities() {
    for (name, cat) in hopf_examples() {
        let objs = modules(&cat);
        for x in &objs {
            let c = cat.braiding(x, x).unwrap();
            let id = cat.identity(x);
            let c1 = cat.tensor_mor(&c, &id).unwrap();
            let c2 = cat.tensor_mor(&id, &c).unwrap();
            let lhs = cat.compose_chain(&[c1.clone(), c2.clone(), c1.clone()]).unwrap();
            let rhs = cat.compose_chain(&[c2.clone(), c1, c2]).unwrap();
            assert_eq!(lhs.matrix, rhs.matrix, "{name}: Yang-Baxter");

            let t = cat.twist(x).unwrap();
            let td = cat.twist(&cat.dual(x).unwrap()).unwrap();
            assert_eq!(td.matrix, t.matrix.transpose(), "{name}: twist of dual");
            for y in &objs {
                let xy = cat.tensor(x, y).unwrap();
                let lhs = cat.twist(&xy).unwrap();
                let tt = cat.tensor_mor(&cat.twist(x).unwrap(), &cat.twist(y).unwrap()).unwrap();
                let rhs = cat
                    .compose_chain(&[tt, cat.braiding(x, y).unwrap(), cat.braiding(y, x).unwrap()])
                    .unwrap();
                assert_eq!(lhs.matrix, rhs.matrix, "{name}: twist of tensor");
                let back = cat
                    .compose(&cat.braiding_inv(x, y).unwrap(), &cat.braiding(x, y).unwrap())
                    .unwrap();
                assert!(back.matrix.is_identity());
            }
        }
        assert!(cat.twist(&cat.unit()).unwrap().matrix.is_identity());
    }
}

#[test]
fn projective_generators() {
    let z2 = shipped::load("z2").unwrap();
    let g = z2.projective_generator();
    assert_eq!(g.size(), 2);
    assert_eq!(z2.hom(&g, &g).unwrap().dim(), 2);
    let sw = shipped::load("sweedler").unwrap();
    let g = sw.projective_generator();
    assert_eq!(g, sw.object("H").unwrap());
    assert_eq!(sw.hom(&g, &g).unwrap().dim(), 4);
}

#[test]
fn fusion_backend_refuses_braiding() {
    let vec = shipped::load("vec_z2").unwrap();
    let s = vec.object("s").unwrap();
    assert!(matches!(vec.braiding(&s, &s), Err(Error::UnsupportedForBackend { .. })));
    assert!(matches!(vec.ev(&s), Err(Error::UnsupportedForBackend { .. })));
}

#[test]
fn backend_mismatch() {
    let vec = shipped::load("vec_z2").unwrap();
    let z2 = shipped::load("z2").unwrap();
    let s = vec.object("s").unwrap();
    let h = z2.object("H").unwrap();
    assert_eq!(z2.tensor(&s, &h), Err(Error::BackendMismatch));
}

#[test]
fn corrupted_coassociativity_is_named() {
    let mut value: serde_json::Value = serde_json::from_str(shipped::SWEEDLER).unwrap();
    // Δ(x) = x⊗1 + x⊗g: (Δ⊗id)Δ(x) has four terms, (id⊗Δ)Δ(x) two.
    value["comult"][2] = serde_json::json!([
        ["0", "0", "0", "0"],
        ["0", "0", "0", "0"],
        ["1", "1", "0", "0"],
        ["0", "0", "0", "0"]
    ]);
    let err = Category::new(CategoryData::from_json(&value).unwrap()).unwrap_err();
    match err {
        Error::Axiom { axiom, .. } => assert_eq!(axiom, "coassociativity"),
        other => panic!("unexpected {other:?}"),
    }
}

#[test]
fn broken_module_is_named() {
    let mut value: serde_json::Value = serde_json::from_str(shipped::Z2).unwrap();
    value["modules"][1]["action"][1] = serde_json::json!([["2"]]);
    let err = Category::new(CategoryData::from_json(&value).unwrap()).unwrap_err();
    assert!(matches!(err, Error::Axiom { axiom, .. } if axiom == "module:sign"));
}

#[test]
fn schema_errors() {
    assert!(matches!(CategoryData::from_json_str("{}"), Err(Error::Schema(_))));
    assert!(matches!(CategoryData::from_json_str("not json"), Err(Error::Schema(_))));
    let mut value: serde_json::Value = serde_json::from_str(shipped::Z2).unwrap();
    value["mult"] = serde_json::json!([]);
    assert!(matches!(CategoryData::from_json(&value), Err(Error::Schema(_))));
}

#[test]
fn json_round_trip() {
    for name in shipped::NAMES {
        let data = CategoryData::from_json_str(shipped::source(name).unwrap()).unwrap();
        let again = CategoryData::from_json(&data.to_json()).unwrap();
        assert_eq!(data, again, "{name}");
    }
}

#[test]
fn isomorphism_search() {
    let sw = shipped::load("sweedler").unwrap();
    let h = sw.object("H").unwrap();
    let sign = sw.object("sign").unwrap();
    let hs = sw.tensor(&h, &sign).unwrap();
    let (f, g) = sw.find_isomorphism(&hs, &h).unwrap().expect("H⊗sign ≅ H");
    assert!(sw.compose(&g, &f).unwrap().matrix.is_identity());
    assert!(sw.compose(&f, &g).unwrap().matrix.is_identity());
    let pp = sw.object("P_plus").unwrap();
    let pm = sw.object("P_minus").unwrap();
    assert!(sw.find_isomorphism(&pp, &pm).unwrap().is_none());
    assert_eq!(sw.tensor(&pp, &sign).unwrap(), pm);
}

#[test]
fn dimension_cap() {
    let sw = shipped::load("sweedler").unwrap().with_max_dim(8);
    let h = sw.object("H").unwrap();
    assert_eq!(sw.tensor(&h, &h), Err(Error::DimensionCap { dim: 16, cap: 8 }));
}

#[test]
fn drinfeld_element_of_group_algebra_is_one() {
    let z2 = shipped::load("z2").unwrap();
    let h = z2.hopf().unwrap();
    assert_eq!(h.derived.drinfeld, h.algebra.unit);
    let half = Scalar::from_rational(Field::Rational, Rational::new(1.into(), 2.into()));
    assert!(!half.is_zero());
}
