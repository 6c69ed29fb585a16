//! Finite-dimensional ribbon Hopf algebras given by structure constants.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::linalg::{Field, Matrix, Scalar};

/// An element of H as its coefficient vector in the chosen basis.
pub type Element = Vec<Scalar>;

/// Structure constants of a Hopf algebra with an R-matrix and ribbon element.
///
/// Conventions: `mult[i][j][k]` is the coefficient of b_k in b_i·b_j,
/// `comult[i][j][k]` that of b_j⊗b_k in Δ(b_i), `antipode[(i, j)]` that of
/// b_j in S(b_i), and `r_matrix[(i, j)]` that of b_i⊗b_j in R.
#[derive(Clone, Debug, PartialEq)]
pub struct HopfAlgebra {
    pub field: Field,
    pub basis: Vec<String>,
    pub unit: Element,
    pub mult: Vec<Vec<Element>>,
    pub comult: Vec<Vec<Element>>,
    pub counit: Element,
    pub antipode: Matrix,
    pub r_matrix: Matrix,
    pub ribbon: Element,
}

impl HopfAlgebra {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn zero(&self) -> Element {
        vec![Scalar::zero(self.field); self.dim()]
    }

    pub fn basis_element(&self, i: usize) -> Element {
        let mut e = self.zero();
        e[i] = Scalar::one(self.field);
        e
    }

    pub fn add(&self, a: &[Scalar], b: &[Scalar]) -> Element {
        a.iter().zip(b).map(|(x, y)| x + y).collect()
    }

    pub fn sub(&self, a: &[Scalar], b: &[Scalar]) -> Element {
        a.iter().zip(b).map(|(x, y)| x - y).collect()
    }

    pub fn mul(&self, a: &[Scalar], b: &[Scalar]) -> Element {
        let mut out = self.zero();
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let xy = x * y;
                for (k, c) in self.mult[i][j].iter().enumerate() {
                    if !c.is_zero() {
                        out[k] = &out[k] + &(&xy * c);
                    }
                }
            }
        }
        out
    }

    pub fn counit_of(&self, a: &[Scalar]) -> Scalar {
        a.iter()
            .zip(&self.counit)
            .fold(Scalar::zero(self.field), |acc, (x, e)| &acc + &(x * e))
    }

    pub fn antipode_of(&self, a: &[Scalar]) -> Element {
        let mut out = self.zero();
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, out_j) in out.iter_mut().enumerate() {
                let s = self.antipode.get(i, j);
                if !s.is_zero() {
                    *out_j = &*out_j + &(x * s);
                }
            }
        }
        out
    }

    /// Δ(a) as a d×d coefficient matrix.
    pub fn delta(&self, a: &[Scalar]) -> Matrix {
        let d = self.dim();
        let mut out = Matrix::zeros(self.field, d, d);
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for j in 0..d {
                for k in 0..d {
                    let c = &self.comult[i][j][k];
                    if !c.is_zero() {
                        out.set(j, k, out.get(j, k) + &(x * c));
                    }
                }
            }
        }
        out
    }

    /// Product in H⊗H of two coefficient matrices.
    pub fn mul2(&self, a: &Matrix, b: &Matrix) -> Matrix {
        let d = self.dim();
        let mut out = Matrix::zeros(self.field, d, d);
        for i in 0..d {
            for j in 0..d {
                let x = a.get(i, j);
                if x.is_zero() {
                    continue;
                }
                for k in 0..d {
                    for l in 0..d {
                        let y = b.get(k, l);
                        if y.is_zero() {
                            continue;
                        }
                        let xy = x * y;
                        for (p, cp) in self.mult[i][k].iter().enumerate() {
                            if cp.is_zero() {
                                continue;
                            }
                            let xyc = &xy * cp;
                            for (q, cq) in self.mult[j][l].iter().enumerate() {
                                if !cq.is_zero() {
                                    out.set(p, q, out.get(p, q) + &(&xyc * cq));
                                }
                            }
                        }
                    }
                }
            }
        }
        out
    }

    /// Simple tensor a⊗b in H⊗H.
    pub fn outer(&self, a: &[Scalar], b: &[Scalar]) -> Matrix {
        let d = self.dim();
        Matrix::from_fn(self.field, d, d, |i, j| &a[i] * &b[j])
    }

    pub fn unit2(&self) -> Matrix {
        self.outer(&self.unit, &self.unit)
    }

    /// Left multiplication by `a` as a matrix on H (column j is a·b_j).
    pub fn left_mult_matrix(&self, a: &[Scalar]) -> Matrix {
        let d = self.dim();
        let cols: Vec<Element> = (0..d).map(|j| self.mul(a, &self.basis_element(j))).collect();
        Matrix::from_columns(self.field, d, &cols)
    }

    /// Two-sided inverse of an element, if it exists.
    pub fn inverse(&self, a: &[Scalar]) -> Result<Element> {
        let inv = self.left_mult_matrix(a).inverse()?;
        let w = (&inv * &Matrix::column(self.field, self.unit.clone())).col(0);
        if self.mul(&w, a) != self.unit {
            return Err(Error::Singular);
        }
        Ok(w)
    }

    /// Inverse in H⊗H.
    pub fn inverse2(&self, a: &Matrix) -> Result<Matrix> {
        let d = self.dim();
        let n = d * d;
        // Column (k, l) holds a·(b_k⊗b_l), flattened row-major.
        let mut cols = Vec::with_capacity(n);
        for k in 0..d {
            for l in 0..d {
                let e = self.outer(&self.basis_element(k), &self.basis_element(l));
                cols.push(self.mul2(a, &e).entries().to_vec());
            }
        }
        let op = Matrix::from_columns(self.field, n, &cols);
        let unit = Matrix::column(self.field, self.unit2().entries().to_vec());
        let sol = &op.inverse()? * &unit;
        let w = Matrix::from_fn(self.field, d, d, |i, j| sol.get(i * d + j, 0).clone());
        if self.mul2(&w, a) != self.unit2() {
            return Err(Error::Singular);
        }
        Ok(w)
    }

    /// Swaps the tensor factors of an element of H⊗H.
    pub fn flip2(&self, a: &Matrix) -> Matrix {
        a.transpose()
    }

    /// Drinfeld element u = Σ S(r₂) r₁.
    pub fn drinfeld_element(&self) -> Element {
        let d = self.dim();
        let mut u = self.zero();
        for i in 0..d {
            for j in 0..d {
                let c = self.r_matrix.get(i, j);
                if c.is_zero() {
                    continue;
                }
                let term = self.mul(&self.antipode_of(&self.basis_element(j)), &self.basis_element(i));
                u = self.add(&u, &term.iter().map(|t| t * c).collect::<Vec<_>>());
            }
        }
        u
    }

    /// A set of basis indices generating H as an algebra.
    pub fn generators(&self) -> Vec<usize> {
        let d = self.dim();
        let mut gens: Vec<usize> = Vec::new();
        let mut span = self.subalgebra_span(&gens);
        for i in 0..d {
            if span.len() == d {
                break;
            }
            let mut red = crate::linalg::RowReducer::new(self.field, d);
            for v in &span {
                red.push(v.clone());
            }
            if red.push(self.basis_element(i)) {
                gens.push(i);
                span = self.subalgebra_span(&gens);
            }
        }
        gens
    }

    fn subalgebra_span(&self, gens: &[usize]) -> Vec<Element> {
        let d = self.dim();
        let mut red = crate::linalg::RowReducer::new(self.field, d);
        let mut span = vec![self.unit.clone()];
        red.push(self.unit.clone());
        let mut frontier = span.clone();
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for v in &frontier {
                for &g in gens {
                    let w = self.mul(v, &self.basis_element(g));
                    if red.push(w.clone()) {
                        next.push(w);
                    }
                }
            }
            span.extend(next.iter().cloned());
            frontier = next;
        }
        span
    }
}

/// Elements derived once from validated structure constants.
#[derive(Clone, Debug)]
pub struct Derived {
    pub drinfeld: Element,
    pub ribbon_inv: Element,
    pub pivotal: Element,
    pub pivotal_inv: Element,
    pub r_inv: Matrix,
    pub generators: Vec<usize>,
}

impl Derived {
    pub fn compute(h: &HopfAlgebra) -> Result<Derived> {
        let drinfeld = h.drinfeld_element();
        let ribbon_inv = h.inverse(&h.ribbon)?;
        let pivotal = h.mul(&drinfeld, &ribbon_inv);
        let pivotal_inv = h.inverse(&pivotal)?;
        let r_inv = h.inverse2(&h.r_matrix)?;
        Ok(Derived {
            drinfeld,
            ribbon_inv,
            pivotal,
            pivotal_inv,
            r_inv,
            generators: h.generators(),
        })
    }
}

/// A finite-dimensional left module, one action matrix per basis element.
#[derive(Clone, Debug)]
pub struct Module {
    pub name: Option<String>,
    pub dim: usize,
    pub action: Vec<Matrix>,
    pub simple: bool,
    pub projective: bool,
}

impl PartialEq for Module {
    fn eq(&self, other: &Module) -> bool {
        self.dim == other.dim && self.action == other.action
    }
}

impl Eq for Module {}

impl Module {
    pub fn anonymous(dim: usize, action: Vec<Matrix>) -> Module {
        Module {
            name: None,
            dim,
            action,
            simple: false,
            projective: false,
        }
    }

    pub fn named(mut self, name: impl Into<String>) -> Module {
        self.name = Some(name.into());
        self
    }

    /// Action of an arbitrary element.
    pub fn act(&self, h: &HopfAlgebra, a: &[Scalar]) -> Matrix {
        let mut out = Matrix::zeros(h.field, self.dim, self.dim);
        for (x, m) in a.iter().zip(&self.action) {
            if !x.is_zero() {
                out = &out + &m.scale(x);
            }
        }
        out
    }

    /// Checks unit and multiplicativity of the action.
    pub fn check_relations(&self, h: &HopfAlgebra) -> std::result::Result<(), String> {
        if self.action.len() != h.dim() {
            return Err(format!("expected {} action matrices, got {}", h.dim(), self.action.len()));
        }
        for m in &self.action {
            if m.rows() != self.dim || m.cols() != self.dim {
                return Err("action matrix has the wrong size".into());
            }
        }
        if !self.act(h, &h.unit).is_identity() {
            return Err("unit does not act as the identity".into());
        }
        for i in 0..h.dim() {
            for j in 0..h.dim() {
                let lhs = &self.action[i] * &self.action[j];
                let rhs = self.act(h, &h.mult[i][j]);
                if lhs != rhs {
                    return Err(format!("rho({0})rho({1}) != rho({0}*{1})", h.basis[i], h.basis[j]));
                }
            }
        }
        Ok(())
    }

    pub fn regular(h: &HopfAlgebra) -> Module {
        let action = (0..h.dim()).map(|i| h.left_mult_matrix(&h.basis_element(i))).collect();
        Module {
            name: Some("regular".into()),
            dim: h.dim(),
            action,
            simple: false,
            projective: true,
        }
    }

    pub fn trivial(h: &HopfAlgebra) -> Module {
        let action = h.counit.iter().map(|e| Matrix::scalar(e.clone())).collect();
        Module {
            name: Some("unit".into()),
            dim: 1,
            action,
            simple: true,
            projective: false,
        }
    }

    pub fn into_arc(self) -> Arc<Module> {
        Arc::new(self)
    }
}
