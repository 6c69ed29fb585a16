//! Skeletal fusion data: fusion ring plus twist scalars, no F or R symbols.

use crate::linalg::{Field, Scalar};

#[derive(Clone, Debug, PartialEq)]
pub struct FusionData {
    pub field: Field,
    pub simples: Vec<String>,
    pub unit: usize,
    pub dual: Vec<usize>,
    /// `fusion[i][j][k]` is the multiplicity of simple k in i⊗j.
    pub fusion: Vec<Vec<Vec<u64>>>,
    pub twists: Vec<Scalar>,
}

impl FusionData {
    pub fn rank(&self) -> usize {
        self.simples.len()
    }

    pub fn simple(&self, i: usize) -> Vec<u64> {
        let mut v = vec![0; self.rank()];
        v[i] = 1;
        v
    }

    pub fn tensor(&self, x: &[u64], y: &[u64]) -> Vec<u64> {
        let n = self.rank();
        let mut out = vec![0u64; n];
        for i in 0..n {
            if x[i] == 0 {
                continue;
            }
            for j in 0..n {
                if y[j] == 0 {
                    continue;
                }
                for (k, o) in out.iter_mut().enumerate() {
                    *o += x[i] * y[j] * self.fusion[i][j][k];
                }
            }
        }
        out
    }

    pub fn dual_of(&self, x: &[u64]) -> Vec<u64> {
        let mut out = vec![0u64; self.rank()];
        for (i, &m) in x.iter().enumerate() {
            out[self.dual[i]] += m;
        }
        out
    }

    pub fn hom_dim(&self, x: &[u64], y: &[u64]) -> usize {
        x.iter().zip(y).map(|(a, b)| (a * b) as usize).sum()
    }

    /// ⊕ᵢ Xᵢ^∨⊗Xᵢ.
    pub fn canonical_end(&self) -> Vec<u64> {
        let mut out = vec![0u64; self.rank()];
        for i in 0..self.rank() {
            let t = self.tensor(&self.simple(self.dual[i]), &self.simple(i));
            for (o, m) in out.iter_mut().zip(t) {
                *o += m;
            }
        }
        out
    }

    pub fn name_of(&self, x: &[u64]) -> String {
        let parts: Vec<String> = x
            .iter()
            .enumerate()
            .filter(|(_, &m)| m > 0)
            .map(|(i, &m)| {
                if m == 1 {
                    self.simples[i].clone()
                } else {
                    format!("{m}*{}", self.simples[i])
                }
            })
            .collect();
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }

    /// Checks the ring axioms; each entry is (axiom name, failure detail).
    pub fn check(&self) -> Vec<(&'static str, Option<String>)> {
        let n = self.rank();
        let mut out = Vec::new();
        let shape_ok = self.dual.len() == n
            && self.twists.len() == n
            && self.unit < n
            && self.fusion.len() == n
            && self.fusion.iter().all(|r| r.len() == n && r.iter().all(|c| c.len() == n));
        out.push(("shape", (!shape_ok).then(|| "array sizes disagree with the number of simples".to_string())));
        if !shape_ok {
            return out;
        }
        let u = self.unit;
        let mut unit_err = None;
        for j in 0..n {
            for k in 0..n {
                let d = u64::from(j == k);
                if self.fusion[u][j][k] != d || self.fusion[j][u][k] != d {
                    unit_err = Some(format!("unit law fails at ({j}, {k})"));
                }
            }
        }
        out.push(("unit", unit_err));

        let mut dual_err = None;
        for i in 0..n {
            if self.dual[i] >= n || self.dual[self.dual[i]] != i {
                dual_err = Some(format!("dual is not an involution at {i}"));
                break;
            }
            for j in 0..n {
                if self.fusion[i][j][u] != u64::from(j == self.dual[i]) {
                    dual_err = Some(format!("N[{i}][{j}][unit] disagrees with the dual"));
                }
            }
        }
        out.push(("duality", dual_err));

        let mut assoc_err = None;
        'a: for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let left = self.tensor(&self.tensor(&self.simple(i), &self.simple(j)), &self.simple(k));
                    let right = self.tensor(&self.simple(i), &self.tensor(&self.simple(j), &self.simple(k)));
                    if left != right {
                        assoc_err = Some(format!("({i}⊗{j})⊗{k} != {i}⊗({j}⊗{k})"));
                        break 'a;
                    }
                }
            }
        }
        out.push(("associativity", assoc_err));

        let mut twist_err = None;
        if !self.twists[u].is_one() {
            twist_err = Some("twist of the unit is not 1".into());
        }
        for i in 0..n {
            if self.twists[i].field() != self.field {
                twist_err = Some(format!("twist {i} lies in the wrong field"));
            } else if self.twists[self.dual[i]] != self.twists[i] {
                twist_err = Some(format!("twist of {i} differs from that of its dual"));
            }
        }
        out.push(("ribbon_twists", twist_err));
        out
    }
}
