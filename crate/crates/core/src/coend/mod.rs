//! Ends and coends reduced to a generator, and the invariants built on them.

use std::sync::{Arc, OnceLock};

use serde::Serialize;

use crate::category::{Category, HomSpace, Module, Obj};
use crate::error::{Error, Result};
use crate::linalg::{CoordinateSolver, Matrix, RowReducer, Scalar};

/// A bifunctor evaluated on a generator G, as the vector space F(G, G)
/// with the two End(G)-actions whose (co)equalizer is the (co)end.
#[derive(Clone, Debug)]
pub struct BifunctorPresentation {
    pub dim: usize,
    pub left: Vec<Matrix>,
    pub right: Vec<Matrix>,
    /// Module structure on F(G, G) when the (co)end is object-valued.
    pub object: Option<Obj>,
}

impl BifunctorPresentation {
    /// Checks sizes and that the two actions commute.
    pub fn check(&self) -> Result<()> {
        if self.left.len() != self.right.len() {
            return Err(Error::DimensionMismatch("left and right actions differ in number".into()));
        }
        for m in self.left.iter().chain(&self.right) {
            if m.rows() != self.dim || m.cols() != self.dim {
                return Err(Error::DimensionMismatch("action matrix has the wrong size".into()));
            }
        }
        for l in &self.left {
            for r in &self.right {
                if &(l * r) != &(r * l) {
                    return Err(Error::DimensionMismatch("left and right actions do not commute".into()));
                }
            }
        }
        Ok(())
    }

    fn differences(&self) -> Vec<Matrix> {
        self.left.iter().zip(&self.right).map(|(l, r)| l - r).collect()
    }
}

/// An end: a subspace of F(G, G) with its inclusion.
#[derive(Clone, Debug)]
pub struct EndResult {
    pub inclusion: Matrix,
    pub object: Option<Obj>,
}

impl EndResult {
    pub fn dim(&self) -> usize {
        self.inclusion.cols()
    }
}

/// A coend: a quotient of F(G, G) with its projection and a section.
#[derive(Clone, Debug)]
pub struct CoendResult {
    pub projection: Matrix,
    pub section: Matrix,
    pub object: Option<Obj>,
}

impl CoendResult {
    pub fn dim(&self) -> usize {
        self.projection.rows()
    }
}

fn action_of(obj: &Option<Obj>) -> Option<&Arc<Module>> {
    match obj {
        Some(Obj::Hopf(m)) => Some(m),
        _ => None,
    }
}

pub fn end_over_generator(cat: &Category, p: &BifunctorPresentation) -> Result<EndResult> {
    let field = cat.field();
    let mut red = RowReducer::new(field, p.dim);
    'rows: for d in p.differences() {
        for r in 0..p.dim {
            red.push(d.row(r).to_vec());
            if red.is_full() {
                break 'rows;
            }
        }
    }
    let inclusion = Matrix::from_columns(field, p.dim, &red.kernel_basis());
    let object = match action_of(&p.object) {
        Some(m) => {
            let solver = CoordinateSolver::new(inclusion.clone())?;
            let k = inclusion.cols();
            let action = m
                .action
                .iter()
                .map(|a| {
                    let image = a * &inclusion;
                    let cols = (0..k).map(|c| solver.coordinates(&image.col(c))).collect::<Result<Vec<_>>>()?;
                    Ok(Matrix::from_columns(field, k, &cols))
                })
                .collect::<Result<Vec<_>>>()
                .map_err(|e: Error| match e {
                    Error::NotInSpan => Error::DimensionMismatch("end is not a submodule".into()),
                    other => other,
                })?;
            Some(Obj::Hopf(Arc::new(Module::anonymous(k, action))))
        }
        None => p.object.clone(),
    };
    Ok(EndResult { inclusion, object })
}

pub fn coend_over_generator(cat: &Category, p: &BifunctorPresentation) -> Result<CoendResult> {
    let field = cat.field();
    // Left null space of the stacked differences: rows q with q·(L − R) = 0.
    let mut red = RowReducer::new(field, p.dim);
    'cols: for d in p.differences() {
        for c in 0..p.dim {
            red.push(d.col(c));
            if red.is_full() {
                break 'cols;
            }
        }
    }
    let rows = red.kernel_basis();
    let q = rows.len();
    let projection = Matrix::from_fn(field, q, p.dim, |r, c| rows[r][c].clone());
    let section = if q == 0 {
        Matrix::zeros(field, p.dim, 0)
    } else {
        let qt = projection.transpose();
        &qt * &(&projection * &qt).inverse()?
    };
    let object = match action_of(&p.object) {
        Some(m) => {
            let action = m.action.iter().map(|a| &(&projection * a) * &section).collect();
            let quotient = Module::anonymous(q, action);
            for d in p.differences() {
                // The relations must span a submodule for the quotient to
                // inherit the action; Q·A·(L − R) = 0 certifies it.
                for a in &m.action {
                    if !(&(&projection * a) * &d).is_zero() {
                        return Err(Error::DimensionMismatch("coend relations are not a submodule".into()));
                    }
                }
            }
            Some(Obj::Hopf(Arc::new(quotient)))
        }
        None => p.object.clone(),
    };
    Ok(CoendResult {
        projection,
        section,
        object,
    })
}

/// Matrix of f ↦ e∘f on a Hom space, in its basis.
pub fn post_compose_matrix(hom: &HomSpace, e: &Matrix) -> Result<Matrix> {
    let cols = hom
        .basis
        .iter()
        .map(|f| hom.coordinates(&(e * &f.matrix)))
        .collect::<Result<Vec<_>>>()?;
    Ok(Matrix::from_columns(e.field(), hom.dim(), &cols))
}

/// Matrix of f ↦ f∘e on a Hom space, in its basis.
pub fn pre_compose_matrix(hom: &HomSpace, e: &Matrix) -> Result<Matrix> {
    let cols = hom
        .basis
        .iter()
        .map(|f| hom.coordinates(&(&f.matrix * e)))
        .collect::<Result<Vec<_>>>()?;
    Ok(Matrix::from_columns(e.field(), hom.dim(), &cols))
}

fn end_basis(cat: &Category, g: &Obj) -> Result<Vec<Matrix>> {
    Ok(cat.hom(g, g)?.basis.into_iter().map(|m| m.matrix).collect())
}

/// ∫_X X^∨⊗X over the generator `g`: the equalizer of e^∨⊗id and id⊗e.
pub fn canonical_end_over(cat: &Category, g: &Obj) -> Result<EndResult> {
    let field = cat.field();
    let n = g.size();
    let id = Matrix::identity(field, n);
    let ends = end_basis(cat, g)?;
    let space = cat.tensor(&cat.dual(g)?, g)?;
    let p = BifunctorPresentation {
        dim: n * n,
        left: ends.iter().map(|e| e.transpose().kron(&id)).collect(),
        right: ends.iter().map(|e| id.kron(e)).collect(),
        object: Some(space),
    };
    end_over_generator(cat, &p)
}

/// ∫^Y Hom(X, Y)*⊗Y over the generator `g`.
pub fn nakayama_right_over(cat: &Category, x: &Obj, g: &Obj) -> Result<CoendResult> {
    let field = cat.field();
    let hom = cat.hom(x, g)?;
    let (k, n) = (hom.dim(), g.size());
    let ends = end_basis(cat, g)?;
    let gm = g.module()?;
    let action = gm.action.iter().map(|a| Matrix::identity(field, k).kron(a)).collect();
    let p = BifunctorPresentation {
        dim: k * n,
        left: ends
            .iter()
            .map(|e| Ok(post_compose_matrix(&hom, e)?.transpose().kron(&Matrix::identity(field, n))))
            .collect::<Result<_>>()?,
        right: ends.iter().map(|e| Matrix::identity(field, k).kron(e)).collect(),
        object: Some(Obj::Hopf(Arc::new(Module::anonymous(k * n, action)))),
    };
    coend_over_generator(cat, &p)
}

/// ∫_Y Hom(Y, X)⊗Y over the generator `g`.
pub fn nakayama_left_over(cat: &Category, x: &Obj, g: &Obj) -> Result<EndResult> {
    let field = cat.field();
    let hom = cat.hom(g, x)?;
    let (k, n) = (hom.dim(), g.size());
    let ends = end_basis(cat, g)?;
    let gm = g.module()?;
    let action = gm.action.iter().map(|a| Matrix::identity(field, k).kron(a)).collect();
    let p = BifunctorPresentation {
        dim: k * n,
        left: ends
            .iter()
            .map(|e| Ok(pre_compose_matrix(&hom, e)?.kron(&Matrix::identity(field, n))))
            .collect::<Result<_>>()?,
        right: ends.iter().map(|e| Matrix::identity(field, k).kron(e)).collect(),
        object: Some(Obj::Hopf(Arc::new(Module::anonymous(k * n, action)))),
    };
    end_over_generator(cat, &p)
}

/// ∫_X Hom(X, X) over `g`, i.e. the centre of End(g)^op.
pub fn natural_endomorphisms_over(cat: &Category, g: &Obj) -> Result<EndResult> {
    let hom = cat.hom(g, g)?;
    let ends: Vec<Matrix> = hom.basis.iter().map(|m| m.matrix.clone()).collect();
    let p = BifunctorPresentation {
        dim: hom.dim(),
        left: ends.iter().map(|e| pre_compose_matrix(&hom, e)).collect::<Result<_>>()?,
        right: ends.iter().map(|e| post_compose_matrix(&hom, e)).collect::<Result<_>>()?,
        object: None,
    };
    end_over_generator(cat, &p)
}

/// ∫^P Hom(I, P)⊗Hom(P, I) over `g`.
pub fn ball_pairing_over(cat: &Category, g: &Obj) -> Result<CoendResult> {
    let field = cat.field();
    let into = cat.hom(&cat.unit(), g)?;
    let out = cat.hom(g, &cat.unit())?;
    let ends = end_basis(cat, g)?;
    let (a, b) = (into.dim(), out.dim());
    let p = BifunctorPresentation {
        dim: a * b,
        left: ends
            .iter()
            .map(|e| Ok(post_compose_matrix(&into, e)?.kron(&Matrix::identity(field, b))))
            .collect::<Result<_>>()?,
        right: ends
            .iter()
            .map(|e| Ok(Matrix::identity(field, a).kron(&pre_compose_matrix(&out, e)?)))
            .collect::<Result<_>>()?,
        object: None,
    };
    coend_over_generator(cat, &p)
}

/// ∫^P Hom(I, P)⊗Hom(I, P^∨) over `g`: two balls glued along a disk.
pub fn excision_ball_over(cat: &Category, g: &Obj) -> Result<CoendResult> {
    let field = cat.field();
    let gd = cat.dual(g)?;
    let into = cat.hom(&cat.unit(), g)?;
    let into_dual = cat.hom(&cat.unit(), &gd)?;
    let ends = end_basis(cat, g)?;
    let (a, b) = (into.dim(), into_dual.dim());
    let p = BifunctorPresentation {
        dim: a * b,
        left: ends
            .iter()
            .map(|e| Ok(post_compose_matrix(&into, e)?.kron(&Matrix::identity(field, b))))
            .collect::<Result<_>>()?,
        right: ends
            .iter()
            .map(|e| Ok(Matrix::identity(field, a).kron(&post_compose_matrix(&into_dual, &e.transpose())?)))
            .collect::<Result<_>>()?,
        object: None,
    };
    coend_over_generator(cat, &p)
}

/// Left integrals of H and the dimension of 𝔍ₗ(H)⊗_H k.
pub fn integrals(cat: &Category) -> Result<(usize, usize)> {
    let h = cat.hopf()?;
    let alg = &h.algebra;
    let field = alg.field;
    let d = alg.dim();
    let mut red = RowReducer::new(field, d);
    for i in 0..d {
        let m = &alg.left_mult_matrix(&alg.basis_element(i)) - &Matrix::identity(field, d).scale(&alg.counit[i]);
        for r in 0..d {
            red.push(m.row(r).to_vec());
        }
    }
    let integrals = red.kernel_basis();
    // 𝔍ₗ is a right ideal; ⊗_H k divides out Λ·b − ε(b)Λ.
    let mut rel = RowReducer::new(field, d);
    for lam in &integrals {
        for i in 0..d {
            let lb = alg.mul(lam, &alg.basis_element(i));
            let v: Vec<Scalar> = lb.iter().zip(lam).map(|(x, y)| x - &(y * &alg.counit[i])).collect();
            rel.push(v);
        }
    }
    Ok((integrals.len(), integrals.len() - rel.rank()))
}

/// Cached invariants of a category.
#[derive(Clone, Debug)]
pub struct Invariants {
    /// The canonical end 𝔸.
    pub canonical_end: Obj,
    /// Inclusion 𝔸 ↪ G^∨⊗G (Hopf backend only).
    pub end_inclusion: Option<Matrix>,
    pub alpha: Obj,
    pub alpha_inv: Obj,
}

#[derive(Clone, Debug, Serialize)]
pub struct BackgroundChargeEntry {
    pub genus: usize,
    pub dim_shifted_dual: usize,
    pub dim_background_charge: usize,
    pub holds: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct InvariantsReport {
    pub backend: &'static str,
    pub alpha: String,
    pub alpha_inverse: String,
    #[serde(rename = "dim_A")]
    pub dim_a: usize,
    pub unimodular: bool,
    pub dim_modified_traces: usize,
    pub dim_left_integrals: Option<usize>,
    pub dim_integrals_tensor_k: Option<usize>,
    pub background_charge: Vec<BackgroundChargeEntry>,
}

/// A validated category together with its lazily computed invariants.
#[derive(Debug)]
pub struct Engine {
    cat: Category,
    invariants: OnceLock<Result<Invariants>>,
}

impl Engine {
    pub fn new(cat: Category) -> Engine {
        Engine {
            cat,
            invariants: OnceLock::new(),
        }
    }

    pub fn category(&self) -> &Category {
        &self.cat
    }

    pub fn invariants(&self) -> Result<&Invariants> {
        self.invariants
            .get_or_init(|| self.compute_invariants())
            .as_ref()
            .map_err(Clone::clone)
    }

    fn compute_invariants(&self) -> Result<Invariants> {
        let cat = &self.cat;
        if let Ok(f) = cat.fusion() {
            return Ok(Invariants {
                canonical_end: Obj::Fusion(f.canonical_end()),
                end_inclusion: None,
                alpha: cat.unit(),
                alpha_inv: cat.unit(),
            });
        }
        let g = cat.projective_generator();
        let end = canonical_end_over(cat, &g)?;
        let canonical_end = end.object.clone().expect("object-valued end");
        let n_r = nakayama_right_over(cat, &cat.unit(), &g)?;
        let alpha = cat.dual(n_r.object.as_ref().expect("object-valued coend"))?;
        let alpha = self.canonical_name(alpha, "alpha");
        let alpha_inv = self.canonical_name(cat.dual(&alpha)?, "alpha_inv");
        let pair = cat.tensor(&alpha, &alpha_inv)?;
        if cat.hom(&pair, &cat.unit())?.dim() != 1 || cat.find_isomorphism(&pair, &cat.unit())?.is_none() {
            return Err(Error::InvertibilityCheckFailed(format!(
                "α = {} is not invertible",
                cat.describe(&alpha)
            )));
        }
        Ok(Invariants {
            canonical_end: self.canonical_name(canonical_end, "A"),
            end_inclusion: Some(end.inclusion),
            alpha,
            alpha_inv,
        })
    }

    /// Replaces a computed module by an equal roster module or the unit,
    /// otherwise attaches `name`.
    fn canonical_name(&self, x: Obj, name: &str) -> Obj {
        if self.cat.is_unit(&x) {
            return self.cat.unit();
        }
        if let Some((_, r)) = self.cat.roster().into_iter().find(|(_, r)| *r == x) {
            return r;
        }
        match x {
            Obj::Hopf(m) => {
                let mut m = (*m).clone();
                m.name = Some(name.to_string());
                Obj::Hopf(Arc::new(m))
            }
            other => other,
        }
    }

    pub fn canonical_end(&self) -> Result<Obj> {
        Ok(self.invariants()?.canonical_end.clone())
    }

    pub fn alpha(&self) -> Result<Obj> {
        Ok(self.invariants()?.alpha.clone())
    }

    pub fn alpha_inv(&self) -> Result<Obj> {
        Ok(self.invariants()?.alpha_inv.clone())
    }

    /// N_r(X) = ∫^Y Hom(X, Y)*⊗Y; the identity on fusion data.
    pub fn nakayama_right(&self, x: &Obj) -> Result<Obj> {
        if !self.cat.is_hopf() {
            return Ok(x.clone());
        }
        let g = self.cat.projective_generator();
        Ok(nakayama_right_over(&self.cat, x, &g)?.object.expect("object-valued coend"))
    }

    /// N_l(X) = ∫_Y Hom(Y, X)⊗Y; the identity on fusion data.
    pub fn nakayama_left(&self, x: &Obj) -> Result<Obj> {
        if !self.cat.is_hopf() {
            return Ok(x.clone());
        }
        let g = self.cat.projective_generator();
        Ok(nakayama_left_over(&self.cat, x, &g)?.object.expect("object-valued end"))
    }

    pub fn modified_trace_dim(&self) -> Result<usize> {
        Ok(self.cat.hom(&self.alpha()?, &self.cat.unit())?.dim())
    }

    pub fn is_unimodular(&self) -> Result<bool> {
        Ok(self.modified_trace_dim()? == 1)
    }

    pub fn integrals(&self) -> Result<(usize, usize)> {
        integrals(&self.cat)
    }

    /// dim Hom(𝔸^⊗g, α⁻¹) and dim Hom(α⊗𝔸^⊗g, I).
    pub fn background_charge_dims(&self, labels: &[Obj], genus: usize) -> Result<(usize, usize)> {
        let cat = &self.cat;
        let mut word = labels.to_vec();
        word.extend(std::iter::repeat(self.canonical_end()?).take(genus));
        let x = cat.tensor_all(&word)?;
        let lhs = cat.hom(&x, &self.alpha_inv()?)?.dim();
        let rhs = cat.hom(&cat.tensor(&self.alpha()?, &x)?, &cat.unit())?.dim();
        Ok((lhs, rhs))
    }

    pub fn report(&self) -> Result<InvariantsReport> {
        let cat = &self.cat;
        let inv = self.invariants()?;
        let (left, tensor_k) = match self.integrals() {
            Ok((a, b)) => (Some(a), Some(b)),
            Err(Error::UnsupportedForBackend { .. }) => (None, None),
            Err(e) => return Err(e),
        };
        let background_charge = (0..=1)
            .map(|genus| {
                let (lhs, rhs) = self.background_charge_dims(&[], genus)?;
                Ok(BackgroundChargeEntry {
                    genus,
                    dim_shifted_dual: lhs,
                    dim_background_charge: rhs,
                    holds: lhs == rhs,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let dim_modified_traces = self.modified_trace_dim()?;
        Ok(InvariantsReport {
            backend: cat.backend_name(),
            alpha: cat.describe(&inv.alpha),
            alpha_inverse: cat.describe(&inv.alpha_inv),
            dim_a: inv.canonical_end.size(),
            unimodular: dim_modified_traces == 1,
            dim_modified_traces,
            dim_left_integrals: left,
            dim_integrals_tensor_k: tensor_k,
            background_charge,
        })
    }
}

#[cfg(test)]
mod tests;
