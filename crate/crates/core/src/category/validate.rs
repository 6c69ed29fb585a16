//! Exact axiom checks for parsed category data.

use serde_json::{json, Value};

use super::data::{CategoryData, HopfData};
use super::fusion::FusionData;
use super::hopf::{Element, HopfAlgebra, Module};
use crate::linalg::{solve_sylvester_family, Matrix, Scalar};

#[derive(Clone, Debug, PartialEq)]
pub struct AxiomCheck {
    pub name: String,
    pub passed: bool,
    pub detail: Option<String>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ValidationReport {
    pub kind: &'static str,
    pub checks: Vec<AxiomCheck>,
    pub warnings: Vec<String>,
}

impl ValidationReport {
    pub fn ok(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn first_failure(&self) -> Option<&AxiomCheck> {
        self.checks.iter().find(|c| !c.passed)
    }

    fn push(&mut self, name: impl Into<String>, failure: Option<String>) {
        self.checks.push(AxiomCheck {
            name: name.into(),
            passed: failure.is_none(),
            detail: failure,
        });
    }

    pub fn to_json(&self) -> Value {
        json!({
            "kind": self.kind,
            "valid": self.ok(),
            "checks": self.checks.iter().map(|c| {
                let mut v = json!({"axiom": c.name, "passed": c.passed});
                if let Some(d) = &c.detail {
                    v["detail"] = json!(d);
                }
                v
            }).collect::<Vec<_>>(),
            "warnings": self.warnings,
        })
    }
}

pub fn validate(data: &CategoryData) -> ValidationReport {
    match data {
        CategoryData::Fusion(f) => validate_fusion(f),
        CategoryData::Hopf(h) => validate_hopf(h),
    }
}

fn validate_fusion(f: &FusionData) -> ValidationReport {
    let mut report = ValidationReport {
        kind: "fusion",
        checks: Vec::new(),
        warnings: Vec::new(),
    };
    for (name, failure) in f.check() {
        report.push(name, failure);
    }
    report
}

/// Elements of H⊗H⊗H as flat coefficient vectors, index (i·d + j)·d + k.
struct Triple<'a> {
    h: &'a HopfAlgebra,
}

impl Triple<'_> {
    fn d(&self) -> usize {
        self.h.dim()
    }

    fn zero(&self) -> Vec<Scalar> {
        vec![Scalar::zero(self.h.field); self.d().pow(3)]
    }

    fn nonzero(v: &[Scalar], d: usize) -> Vec<(usize, usize, usize, &Scalar)> {
        v.iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .map(|(n, x)| (n / (d * d), (n / d) % d, n % d, x))
            .collect()
    }

    fn mul(&self, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        let d = self.d();
        let mut out = self.zero();
        let nb = Self::nonzero(b, d);
        for (i, j, k, x) in Self::nonzero(a, d) {
            for &(l, m, n, y) in &nb {
                let xy = x * y;
                for (p, cp) in self.h.mult[i][l].iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                    let xyp = &xy * cp;
                    for (q, cq) in self.h.mult[j][m].iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                        let xypq = &xyp * cq;
                        for (r, cr) in self.h.mult[k][n].iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                            let idx = (p * d + q) * d + r;
                            out[idx] = &out[idx] + &(&xypq * cr);
                        }
                    }
                }
            }
        }
        out
    }

    /// Places a two-tensor into the legs `(first, second)` of three, with
    /// the unit in the remaining leg.
    fn embed(&self, t: &Matrix, first: usize, second: usize) -> Vec<Scalar> {
        let d = self.d();
        let mut out = self.zero();
        let unit = &self.h.unit;
        for i in 0..d {
            for j in 0..d {
                let x = t.get(i, j);
                if x.is_zero() {
                    continue;
                }
                for (u, cu) in unit.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                    let mut idx = [0usize; 3];
                    idx[first] = i;
                    idx[second] = j;
                    idx[3 - first - second] = u;
                    let n = (idx[0] * d + idx[1]) * d + idx[2];
                    out[n] = &out[n] + &(x * cu);
                }
            }
        }
        out
    }

    /// (Δ⊗id)(t) if `left`, else (id⊗Δ)(t).
    fn delta_leg(&self, t: &Matrix, left: bool) -> Vec<Scalar> {
        let d = self.d();
        let mut out = self.zero();
        for i in 0..d {
            for j in 0..d {
                let x = t.get(i, j);
                if x.is_zero() {
                    continue;
                }
                let split = self.h.delta(&self.h.basis_element(if left { i } else { j }));
                for p in 0..d {
                    for q in 0..d {
                        let c = split.get(p, q);
                        if c.is_zero() {
                            continue;
                        }
                        let n = if left { (p * d + q) * d + j } else { (i * d + p) * d + q };
                        out[n] = &out[n] + &(x * c);
                    }
                }
            }
        }
        out
    }
}

fn first_index<T>(d: usize, mut bad: impl FnMut(usize) -> Option<T>) -> Option<T> {
    (0..d).find_map(|i| bad(i))
}

fn validate_hopf(data: &HopfData) -> ValidationReport {
    let h = &data.algebra;
    let d = h.dim();
    let mut report = ValidationReport {
        kind: "hopf",
        checks: Vec::new(),
        warnings: Vec::new(),
    };
    let name = |i: usize| h.basis[i].clone();
    let b = |i: usize| h.basis_element(i);

    report.push(
        "associativity",
        (0..d * d * d).find_map(|n| {
            let (i, j, k) = (n / (d * d), (n / d) % d, n % d);
            let lhs = h.mul(&h.mul(&b(i), &b(j)), &b(k));
            let rhs = h.mul(&b(i), &h.mul(&b(j), &b(k)));
            (lhs != rhs).then(|| format!("({}·{})·{}", name(i), name(j), name(k)))
        }),
    );
    report.push(
        "unit",
        first_index(d, |i| {
            (h.mul(&h.unit, &b(i)) != b(i) || h.mul(&b(i), &h.unit) != b(i)).then(|| name(i))
        }),
    );

    let t = Triple { h };
    report.push(
        "coassociativity",
        first_index(d, |i| {
            let delta = h.delta(&b(i));
            (t.delta_leg(&delta, true) != t.delta_leg(&delta, false)).then(|| name(i))
        }),
    );
    report.push(
        "counit",
        first_index(d, |i| {
            let delta = h.delta(&b(i));
            let mut left = h.zero();
            let mut right = h.zero();
            for j in 0..d {
                for k in 0..d {
                    let c = delta.get(j, k);
                    left[k] = &left[k] + &(&h.counit[j] * c);
                    right[j] = &right[j] + &(&h.counit[k] * c);
                }
            }
            (left != b(i) || right != b(i)).then(|| name(i))
        }),
    );
    let delta_mult = (h.delta(&h.unit) != h.unit2()).then(|| "Δ(1) != 1⊗1".to_string()).or_else(|| {
        (0..d * d).find_map(|n| {
            let (i, j) = (n / d, n % d);
            let lhs = h.delta(&h.mul(&b(i), &b(j)));
            let rhs = h.mul2(&h.delta(&b(i)), &h.delta(&b(j)));
            (lhs != rhs).then(|| format!("Δ({}·{})", name(i), name(j)))
        })
    });
    report.push("comultiplication_multiplicative", delta_mult);
    let eps_mult = (!h.counit_of(&h.unit).is_one()).then(|| "ε(1) != 1".to_string()).or_else(|| {
        (0..d * d).find_map(|n| {
            let (i, j) = (n / d, n % d);
            (h.counit_of(&h.mul(&b(i), &b(j))) != &h.counit[i] * &h.counit[j])
                .then(|| format!("ε({}·{})", name(i), name(j)))
        })
    });
    report.push("counit_multiplicative", eps_mult);
    report.push(
        "antipode",
        first_index(d, |i| {
            let delta = h.delta(&b(i));
            let mut left = h.zero();
            let mut right = h.zero();
            for j in 0..d {
                for k in 0..d {
                    let c = delta.get(j, k);
                    if c.is_zero() {
                        continue;
                    }
                    let l = h.mul(&h.antipode_of(&b(j)), &b(k));
                    let r = h.mul(&b(j), &h.antipode_of(&b(k)));
                    left = h.add(&left, &l.iter().map(|x| x * c).collect::<Vec<_>>());
                    right = h.add(&right, &r.iter().map(|x| x * c).collect::<Vec<_>>());
                }
            }
            let expect: Element = h.unit.iter().map(|x| x * &h.counit[i]).collect();
            (left != expect || right != expect).then(|| name(i))
        }),
    );
    // The remaining axioms assume a Hopf algebra; stop early on failure so
    // a broken file reports its first structural defect.
    if !report.ok() {
        return report;
    }

    let r = &h.r_matrix;
    let r_inv = h.inverse2(r);
    report.push("r_invertible", r_inv.as_ref().err().map(|_| "R has no inverse in H⊗H".into()));
    report.push(
        "quasitriangular_delta_op",
        first_index(d, |i| {
            let delta = h.delta(&b(i));
            (h.mul2(&delta.transpose(), r) != h.mul2(r, &delta)).then(|| name(i))
        }),
    );
    let r13 = t.embed(r, 0, 2);
    let r23 = t.embed(r, 1, 2);
    let r12 = t.embed(r, 0, 1);
    report.push(
        "quasitriangular_delta_left",
        (t.delta_leg(r, true) != t.mul(&r13, &r23)).then(|| "(Δ⊗id)R != R13·R23".into()),
    );
    report.push(
        "quasitriangular_delta_right",
        (t.delta_leg(r, false) != t.mul(&r13, &r12)).then(|| "(id⊗Δ)R != R13·R12".into()),
    );

    let v = &h.ribbon;
    report.push(
        "ribbon_central",
        first_index(d, |i| (h.mul(v, &b(i)) != h.mul(&b(i), v)).then(|| name(i))),
    );
    report.push(
        "ribbon_invertible",
        h.inverse(v).err().map(|_| "v has no inverse".into()),
    );
    let u = h.drinfeld_element();
    report.push(
        "ribbon_square",
        (h.mul(v, v) != h.mul(&u, &h.antipode_of(&u))).then(|| "v² != u·S(u)".into()),
    );
    report.push(
        "ribbon_antipode",
        (h.antipode_of(v) != *v).then(|| "S(v) != v".into()),
    );
    report.push(
        "ribbon_counit",
        (!h.counit_of(v).is_one()).then(|| "ε(v) != 1".into()),
    );
    let monodromy = h.mul2(&r.transpose(), r);
    report.push(
        "ribbon_coproduct",
        (h.mul2(&monodromy, &h.delta(v)) != h.outer(v, v)).then(|| "R21·R·Δ(v) != v⊗v".into()),
    );

    for m in &data.modules {
        let label = m.name.clone().unwrap_or_default();
        report.push(format!("module:{label}"), m.check_relations(h).err());
    }
    if report.ok() {
        let regular = Module::regular(h);
        for m in data.modules.iter().filter(|m| m.projective) {
            let into = hom_dim(h, &regular, m);
            let out = hom_dim(h, m, &regular);
            if into * out == 0 {
                report.warnings.push(format!(
                    "module `{}` is flagged projective but Hom(H, P)·Hom(P, H) vanishes",
                    m.name.as_deref().unwrap_or("")
                ));
            }
        }
    }
    report
}

fn hom_dim(h: &HopfAlgebra, x: &Module, y: &Module) -> usize {
    let pairs: Vec<(Matrix, Matrix)> = (0..h.dim())
        .map(|i| (y.action[i].clone(), x.action[i].clone()))
        .collect();
    solve_sylvester_family(h.field, &pairs, y.dim, x.dim)
        .map(|m| m.cols())
        .unwrap_or(0)
}
