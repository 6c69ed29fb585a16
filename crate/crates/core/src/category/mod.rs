//! Presented finite ribbon categories: fusion data and Hopf modules.

pub mod data;
pub mod fusion;
pub mod hopf;
pub mod shipped;
pub mod validate;

use std::sync::{Arc, OnceLock};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub use data::{parse_morphisms, CategoryData, HopfData, MorphismDecl};
pub use fusion::FusionData;
pub use hopf::{Derived, HopfAlgebra, Module};
pub use validate::{validate, AxiomCheck, ValidationReport};

use crate::error::{Error, Result};
use crate::linalg::{solve_sylvester_family, CoordinateSolver, Field, Matrix, Scalar};

/// Default cap on the dimension of any tensor product built along the way.
pub const DEFAULT_MAX_DIM: usize = 4096;

/// An object: a multiplicity vector over simples, or an explicit module.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Obj {
    Fusion(Vec<u64>),
    Hopf(Arc<Module>),
}

impl Obj {
    /// Size of the matrices representing morphisms out of this object.
    pub fn size(&self) -> usize {
        match self {
            Obj::Fusion(v) => v.iter().sum::<u64>() as usize,
            Obj::Hopf(m) => m.dim,
        }
    }

    pub fn module(&self) -> Result<&Arc<Module>> {
        match self {
            Obj::Hopf(m) => Ok(m),
            Obj::Fusion(_) => Err(Error::BackendMismatch),
        }
    }
}

/// A morphism with typed domain and codomain.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mor {
    pub dom: Obj,
    pub cod: Obj,
    pub matrix: Matrix,
}

/// A Hom space with a fixed basis and coordinates with respect to it.
#[derive(Clone, Debug)]
pub struct HomSpace {
    pub dom: Obj,
    pub cod: Obj,
    pub basis: Vec<Mor>,
    solver: CoordinateSolver,
}

impl HomSpace {
    fn new(field: Field, dom: Obj, cod: Obj, vecs: Matrix) -> Result<HomSpace> {
        let (rows, cols) = (cod.size(), dom.size());
        let basis = (0..vecs.cols())
            .map(|c| Mor {
                dom: dom.clone(),
                cod: cod.clone(),
                matrix: Matrix::unvec(field, &vecs.col(c), rows, cols),
            })
            .collect();
        Ok(HomSpace {
            dom,
            cod,
            basis,
            solver: CoordinateSolver::new(vecs)?,
        })
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Basis vectors vec(T) as the columns of one matrix.
    pub fn basis_vectors(&self) -> &Matrix {
        self.solver.basis()
    }

    pub fn coordinates(&self, m: &Matrix) -> Result<Vec<Scalar>> {
        self.solver.coordinates(&m.vec())
    }

    pub fn combination(&self, coeffs: &[Scalar]) -> Result<Mor> {
        if coeffs.len() != self.dim() {
            return Err(Error::DimensionMismatch("coefficient count differs from Hom dimension".into()));
        }
        let field = self.solver.basis().field();
        let v = &*self.solver.basis() * &Matrix::column(field, coeffs.to_vec());
        Ok(Mor {
            dom: self.dom.clone(),
            cod: self.cod.clone(),
            matrix: Matrix::unvec(field, &v.col(0), self.cod.size(), self.dom.size()),
        })
    }
}

/// Hopf backend state: the algebra, derived elements and the roster.
#[derive(Debug)]
pub struct HopfCategory {
    pub algebra: HopfAlgebra,
    pub derived: Derived,
    pub unit: Arc<Module>,
    pub roster: Vec<Arc<Module>>,
    pub morphisms: Vec<MorphismDecl>,
    generator: OnceLock<Arc<Module>>,
}

#[derive(Debug)]
enum Backend {
    Fusion(FusionData),
    Hopf(HopfCategory),
}

/// A validated category, ready for computation.
#[derive(Debug)]
pub struct Category {
    data: CategoryData,
    report: ValidationReport,
    backend: Backend,
    max_dim: usize,
}

impl Category {
    /// Validates `data` and fails with the first violated axiom.
    pub fn new(data: CategoryData) -> Result<Category> {
        let report = validate(&data);
        if let Some(fail) = report.first_failure() {
            return Err(Error::Axiom {
                axiom: fail.name.clone(),
                detail: fail.detail.clone().unwrap_or_default(),
            });
        }
        let backend = match &data {
            CategoryData::Fusion(f) => Backend::Fusion(f.clone()),
            CategoryData::Hopf(h) => {
                let derived = Derived::compute(&h.algebra)?;
                let mut unit = Module::trivial(&h.algebra);
                unit.name = Some("I".into());
                Backend::Hopf(HopfCategory {
                    algebra: h.algebra.clone(),
                    derived,
                    unit: Arc::new(unit),
                    roster: h.modules.iter().cloned().map(Arc::new).collect(),
                    morphisms: h.morphisms.clone(),
                    generator: OnceLock::new(),
                })
            }
        };
        Ok(Category {
            data,
            report,
            backend,
            max_dim: DEFAULT_MAX_DIM,
        })
    }

    pub fn from_json_str(text: &str) -> Result<Category> {
        Category::new(CategoryData::from_json_str(text)?)
    }

    pub fn load(path: impl AsRef<std::path::Path>) -> Result<Category> {
        Category::new(CategoryData::load(path)?)
    }

    pub fn with_max_dim(mut self, cap: usize) -> Category {
        self.max_dim = cap;
        self
    }

    pub fn max_dim(&self) -> usize {
        self.max_dim
    }

    pub fn data(&self) -> &CategoryData {
        &self.data
    }

    pub fn report(&self) -> &ValidationReport {
        &self.report
    }

    pub fn field(&self) -> Field {
        self.data.field()
    }

    pub fn backend_name(&self) -> &'static str {
        match self.backend {
            Backend::Fusion(_) => "fusion",
            Backend::Hopf(_) => "hopf",
        }
    }

    pub fn is_hopf(&self) -> bool {
        matches!(self.backend, Backend::Hopf(_))
    }

    pub fn hopf(&self) -> Result<&HopfCategory> {
        match &self.backend {
            Backend::Hopf(h) => Ok(h),
            Backend::Fusion(_) => Err(self.unsupported("hopf structure")),
        }
    }

    pub fn fusion(&self) -> Result<&FusionData> {
        match &self.backend {
            Backend::Fusion(f) => Ok(f),
            Backend::Hopf(_) => Err(Error::UnsupportedForBackend {
                op: "fusion data",
                backend: "hopf",
            }),
        }
    }

    fn unsupported(&self, op: &'static str) -> Error {
        Error::UnsupportedForBackend {
            op,
            backend: self.backend_name(),
        }
    }

    pub fn unit(&self) -> Obj {
        match &self.backend {
            Backend::Fusion(f) => Obj::Fusion(f.simple(f.unit)),
            Backend::Hopf(h) => Obj::Hopf(h.unit.clone()),
        }
    }

    pub fn is_unit(&self, x: &Obj) -> bool {
        *x == self.unit()
    }

    /// Roster objects by name, in file order (simples for fusion data).
    pub fn roster(&self) -> Vec<(String, Obj)> {
        match &self.backend {
            Backend::Fusion(f) => (0..f.rank()).map(|i| (f.simples[i].clone(), Obj::Fusion(f.simple(i)))).collect(),
            Backend::Hopf(h) => h
                .roster
                .iter()
                .map(|m| (m.name.clone().unwrap_or_default(), Obj::Hopf(m.clone())))
                .collect(),
        }
    }

    /// Roster objects flagged projective; every simple for fusion data.
    pub fn projectives(&self) -> Vec<(String, Obj)> {
        match &self.backend {
            Backend::Fusion(_) => self.roster(),
            Backend::Hopf(h) => h
                .roster
                .iter()
                .filter(|m| m.projective)
                .map(|m| (m.name.clone().unwrap_or_default(), Obj::Hopf(m.clone())))
                .collect(),
        }
    }

    pub fn is_projective(&self, x: &Obj) -> bool {
        match (&self.backend, x) {
            (Backend::Fusion(_), _) => true,
            (Backend::Hopf(h), Obj::Hopf(m)) => {
                m.projective || h.roster.iter().any(|r| r.projective && **r == **m)
            }
            _ => false,
        }
    }

    /// Looks up a roster object; `I` always names the unit.
    pub fn object(&self, name: &str) -> Result<Obj> {
        if name == "I" {
            return Ok(self.unit());
        }
        self.roster()
            .into_iter()
            .find(|(n, _)| n == name)
            .map(|(_, o)| o)
            .ok_or_else(|| Error::UnknownObject(name.to_string()))
    }

    /// A short human-readable name: the roster name when one matches.
    pub fn describe(&self, x: &Obj) -> String {
        if self.is_unit(x) {
            return "I".into();
        }
        match (&self.backend, x) {
            (Backend::Fusion(f), Obj::Fusion(v)) => f.name_of(v),
            (Backend::Hopf(h), Obj::Hopf(m)) => {
                if let Some(r) = h.roster.iter().find(|r| ***r == **m) {
                    return r.name.clone().unwrap_or_default();
                }
                match &m.name {
                    Some(n) => n.clone(),
                    None => format!("module of dimension {}", m.dim),
                }
            }
            _ => "?".into(),
        }
    }

    pub(crate) fn check_cap(&self, dim: usize) -> Result<()> {
        if dim > self.max_dim {
            return Err(Error::DimensionCap { dim, cap: self.max_dim });
        }
        Ok(())
    }

    pub fn tensor(&self, x: &Obj, y: &Obj) -> Result<Obj> {
        match (&self.backend, x, y) {
            (Backend::Fusion(f), Obj::Fusion(a), Obj::Fusion(b)) => Ok(Obj::Fusion(f.tensor(a, b))),
            (Backend::Hopf(h), Obj::Hopf(a), Obj::Hopf(b)) => {
                if **a == *h.unit {
                    return Ok(y.clone());
                }
                if **b == *h.unit {
                    return Ok(x.clone());
                }
                self.check_cap(a.dim * b.dim)?;
                let alg = &h.algebra;
                let n = a.dim * b.dim;
                let action = (0..alg.dim())
                    .map(|i| {
                        let mut out = Matrix::zeros(alg.field, n, n);
                        for j in 0..alg.dim() {
                            for k in 0..alg.dim() {
                                let c = &alg.comult[i][j][k];
                                if !c.is_zero() {
                                    out = &out + &a.action[j].kron(&b.action[k]).scale(c);
                                }
                            }
                        }
                        out
                    })
                    .collect();
                let name = match (&a.name, &b.name) {
                    (Some(p), Some(q)) => Some(format!("{p}⊗{q}")),
                    _ => None,
                };
                Ok(Obj::Hopf(Arc::new(Module {
                    name,
                    dim: n,
                    action,
                    simple: false,
                    projective: a.projective || b.projective,
                })))
            }
            _ => Err(Error::BackendMismatch),
        }
    }

    /// Right-associated tensor product of a word; the unit for an empty one.
    pub fn tensor_all(&self, objs: &[Obj]) -> Result<Obj> {
        let mut iter = objs.iter().rev();
        let Some(last) = iter.next() else {
            return Ok(self.unit());
        };
        let mut acc = last.clone();
        for x in iter {
            acc = self.tensor(x, &acc)?;
        }
        Ok(acc)
    }

    pub fn tensor_mor(&self, f: &Mor, g: &Mor) -> Result<Mor> {
        if !self.is_hopf() {
            return Err(self.unsupported("tensor_mor"));
        }
        Ok(Mor {
            dom: self.tensor(&f.dom, &g.dom)?,
            cod: self.tensor(&f.cod, &g.cod)?,
            matrix: f.matrix.kron(&g.matrix),
        })
    }

    /// id_{left} ⊗ m ⊗ id_{right}.
    pub fn whisker(&self, left: &[Obj], m: &Mor, right: &[Obj]) -> Result<Mor> {
        let l = self.identity(&self.tensor_all(left)?);
        let r = self.identity(&self.tensor_all(right)?);
        self.tensor_mor(&self.tensor_mor(&l, m)?, &r)
    }

    pub fn identity(&self, x: &Obj) -> Mor {
        Mor {
            dom: x.clone(),
            cod: x.clone(),
            matrix: Matrix::identity(self.field(), x.size()),
        }
    }

    /// g ∘ f.
    pub fn compose(&self, g: &Mor, f: &Mor) -> Result<Mor> {
        if f.cod != g.dom {
            return Err(Error::DimensionMismatch(format!(
                "cannot compose: codomain `{}` differs from domain `{}`",
                self.describe(&f.cod),
                self.describe(&g.dom)
            )));
        }
        Ok(Mor {
            dom: f.dom.clone(),
            cod: g.cod.clone(),
            matrix: g.matrix.try_mul(&f.matrix)?,
        })
    }

    /// Composite of a chain, applied first to last.
    pub fn compose_chain(&self, chain: &[Mor]) -> Result<Mor> {
        let mut iter = chain.iter();
        let mut acc = iter
            .next()
            .ok_or_else(|| Error::DimensionMismatch("empty composition chain".into()))?
            .clone();
        for m in iter {
            acc = self.compose(m, &acc)?;
        }
        Ok(acc)
    }

    pub fn hom(&self, x: &Obj, y: &Obj) -> Result<HomSpace> {
        let field = self.field();
        match (&self.backend, x, y) {
            (Backend::Fusion(f), Obj::Fusion(a), Obj::Fusion(b)) => {
                let (rows, cols) = (y.size(), x.size());
                let mut vecs = Vec::new();
                let (mut ox, mut oy) = (0usize, 0usize);
                for i in 0..f.rank() {
                    let (mx, my) = (a[i] as usize, b[i] as usize);
                    for c in 0..mx {
                        for r in 0..my {
                            let mut v = vec![Scalar::zero(field); rows * cols];
                            v[(ox + c) * rows + oy + r] = Scalar::one(field);
                            vecs.push(v);
                        }
                    }
                    ox += mx;
                    oy += my;
                }
                HomSpace::new(field, x.clone(), y.clone(), Matrix::from_columns(field, rows * cols, &vecs))
            }
            (Backend::Hopf(h), Obj::Hopf(a), Obj::Hopf(b)) => {
                let pairs: Vec<(Matrix, Matrix)> = h
                    .derived
                    .generators
                    .iter()
                    .map(|&g| (b.action[g].clone(), a.action[g].clone()))
                    .collect();
                let vecs = solve_sylvester_family(field, &pairs, b.dim, a.dim)?;
                HomSpace::new(field, x.clone(), y.clone(), vecs)
            }
            _ => Err(Error::BackendMismatch),
        }
    }

    /// Checks that a matrix intertwines the actions of `dom` and `cod`.
    pub fn morphism(&self, dom: &Obj, cod: &Obj, matrix: Matrix) -> Result<Mor> {
        if matrix.rows() != cod.size() || matrix.cols() != dom.size() {
            return Err(Error::DimensionMismatch(format!(
                "matrix is {}×{}, expected {}×{}",
                matrix.rows(),
                matrix.cols(),
                cod.size(),
                dom.size()
            )));
        }
        let hom = self.hom(dom, cod)?;
        hom.coordinates(&matrix).map_err(|_| {
            Error::DimensionMismatch("matrix does not commute with the actions".into())
        })?;
        Ok(Mor {
            dom: dom.clone(),
            cod: cod.clone(),
            matrix,
        })
    }

    pub fn dual(&self, x: &Obj) -> Result<Obj> {
        match (&self.backend, x) {
            (Backend::Fusion(f), Obj::Fusion(a)) => Ok(Obj::Fusion(f.dual_of(a))),
            (Backend::Hopf(h), Obj::Hopf(m)) => {
                if **m == *h.unit {
                    return Ok(x.clone());
                }
                let alg = &h.algebra;
                let action = (0..alg.dim())
                    .map(|i| m.act(alg, &alg.antipode_of(&alg.basis_element(i))).transpose())
                    .collect();
                Ok(Obj::Hopf(Arc::new(Module {
                    name: m.name.as_ref().map(|n| format!("{n}^∨")),
                    dim: m.dim,
                    action,
                    simple: m.simple,
                    projective: m.projective,
                })))
            }
            _ => Err(Error::BackendMismatch),
        }
    }

    /// f^∨: Y^∨ → X^∨ for f: X → Y.
    pub fn dual_mor(&self, f: &Mor) -> Result<Mor> {
        if !self.is_hopf() {
            return Err(self.unsupported("dual_mor"));
        }
        Ok(Mor {
            dom: self.dual(&f.cod)?,
            cod: self.dual(&f.dom)?,
            matrix: f.matrix.transpose(),
        })
    }

    fn hopf_module<'a>(&self, op: &'static str, x: &'a Obj) -> Result<(&HopfCategory, &'a Arc<Module>)> {
        match (&self.backend, x) {
            (Backend::Hopf(h), Obj::Hopf(m)) => Ok((h, m)),
            (Backend::Fusion(_), _) => Err(self.unsupported(op)),
            _ => Err(Error::BackendMismatch),
        }
    }

    /// ev_X: X^∨⊗X → I.
    pub fn ev(&self, x: &Obj) -> Result<Mor> {
        let (_, m) = self.hopf_module("ev", x)?;
        let n = m.dim;
        let matrix = Matrix::from_fn(self.field(), 1, n * n, |_, c| {
            if c / n == c % n {
                Scalar::one(self.field())
            } else {
                Scalar::zero(self.field())
            }
        });
        Ok(Mor {
            dom: self.tensor(&self.dual(x)?, x)?,
            cod: self.unit(),
            matrix,
        })
    }

    /// coev_X: I → X⊗X^∨.
    pub fn coev(&self, x: &Obj) -> Result<Mor> {
        let (_, m) = self.hopf_module("coev", x)?;
        let n = m.dim;
        let matrix = Matrix::from_fn(self.field(), n * n, 1, |r, _| {
            if r / n == r % n {
                Scalar::one(self.field())
            } else {
                Scalar::zero(self.field())
            }
        });
        Ok(Mor {
            dom: self.unit(),
            cod: self.tensor(x, &self.dual(x)?)?,
            matrix,
        })
    }

    /// Pivotal evaluation X⊗X^∨ → I, x⊗f ↦ f(g·x).
    pub fn ev_r(&self, x: &Obj) -> Result<Mor> {
        let (h, m) = self.hopf_module("ev_r", x)?;
        let n = m.dim;
        let g = m.act(&h.algebra, &h.derived.pivotal);
        let matrix = Matrix::from_fn(self.field(), 1, n * n, |_, c| g.get(c % n, c / n).clone());
        Ok(Mor {
            dom: self.tensor(x, &self.dual(x)?)?,
            cod: self.unit(),
            matrix,
        })
    }

    /// Pivotal coevaluation I → X^∨⊗X, 1 ↦ Σ eᵃ⊗g⁻¹eₐ.
    pub fn coev_r(&self, x: &Obj) -> Result<Mor> {
        let (h, m) = self.hopf_module("coev_r", x)?;
        let n = m.dim;
        let gi = m.act(&h.algebra, &h.derived.pivotal_inv);
        let matrix = Matrix::from_fn(self.field(), n * n, 1, |r, _| gi.get(r % n, r / n).clone());
        Ok(Mor {
            dom: self.unit(),
            cod: self.tensor(&self.dual(x)?, x)?,
            matrix,
        })
    }

    /// The swap X⊗Y → Y⊗X of underlying vector spaces.
    fn flip(&self, n: usize, m: usize) -> Matrix {
        let field = self.field();
        let mut p = Matrix::zeros(field, n * m, n * m);
        for a in 0..n {
            for b in 0..m {
                p.set(b * n + a, a * m + b, Scalar::one(field));
            }
        }
        p
    }

    fn r_action(&self, h: &HopfCategory, r: &Matrix, a: &Module, b: &Module) -> Matrix {
        let alg = &h.algebra;
        let mut out = Matrix::zeros(alg.field, a.dim * b.dim, a.dim * b.dim);
        for i in 0..alg.dim() {
            for j in 0..alg.dim() {
                let c = r.get(i, j);
                if !c.is_zero() {
                    out = &out + &a.action[i].kron(&b.action[j]).scale(c);
                }
            }
        }
        out
    }

    /// c_{X,Y}: X⊗Y → Y⊗X.
    pub fn braiding(&self, x: &Obj, y: &Obj) -> Result<Mor> {
        let (h, a) = self.hopf_module("braiding", x)?;
        let (_, b) = self.hopf_module("braiding", y)?;
        let r = self.r_action(h, &h.algebra.r_matrix, a, b);
        Ok(Mor {
            dom: self.tensor(x, y)?,
            cod: self.tensor(y, x)?,
            matrix: &self.flip(a.dim, b.dim) * &r,
        })
    }

    /// c_{X,Y}⁻¹: Y⊗X → X⊗Y.
    pub fn braiding_inv(&self, x: &Obj, y: &Obj) -> Result<Mor> {
        let (h, a) = self.hopf_module("braiding_inv", x)?;
        let (_, b) = self.hopf_module("braiding_inv", y)?;
        let r = self.r_action(h, &h.derived.r_inv, a, b);
        Ok(Mor {
            dom: self.tensor(y, x)?,
            cod: self.tensor(x, y)?,
            matrix: &r * &self.flip(b.dim, a.dim),
        })
    }

    fn twist_by(&self, x: &Obj, inverse: bool) -> Result<Mor> {
        let matrix = match (&self.backend, x) {
            (Backend::Fusion(f), Obj::Fusion(a)) => {
                let mut diag = Vec::new();
                for (i, &m) in a.iter().enumerate() {
                    let t = if inverse { f.twists[i].inv()? } else { f.twists[i].clone() };
                    diag.extend(std::iter::repeat(t).take(m as usize));
                }
                let n = diag.len();
                Matrix::from_fn(self.field(), n, n, |r, c| {
                    if r == c {
                        diag[r].clone()
                    } else {
                        Scalar::zero(self.field())
                    }
                })
            }
            (Backend::Hopf(h), Obj::Hopf(m)) => {
                let elt = if inverse { &h.algebra.ribbon } else { &h.derived.ribbon_inv };
                m.act(&h.algebra, elt)
            }
            _ => return Err(Error::BackendMismatch),
        };
        Ok(Mor {
            dom: x.clone(),
            cod: x.clone(),
            matrix,
        })
    }

    /// θ_X, the action of v⁻¹ on modules.
    pub fn twist(&self, x: &Obj) -> Result<Mor> {
        self.twist_by(x, false)
    }

    pub fn twist_inv(&self, x: &Obj) -> Result<Mor> {
        self.twist_by(x, true)
    }

    /// The regular module (Hopf) or the sum of all simples (fusion).
    pub fn projective_generator(&self) -> Obj {
        match &self.backend {
            Backend::Fusion(f) => Obj::Fusion(vec![1; f.rank()]),
            Backend::Hopf(h) => Obj::Hopf(
                h.generator
                    .get_or_init(|| {
                        let mut g = Module::regular(&h.algebra);
                        g.name = Some("H".into());
                        Arc::new(g)
                    })
                    .clone(),
            ),
        }
    }

    /// Finds mutually inverse isomorphisms X → Y and Y → X, if any.
    ///
    /// Tries basis elements, then small integer combinations, then seeded
    /// random combinations of a Hom basis, accepting the first invertible one.
    pub fn find_isomorphism(&self, x: &Obj, y: &Obj) -> Result<Option<(Mor, Mor)>> {
        if x.size() != y.size() {
            return Ok(None);
        }
        if let (Obj::Fusion(a), Obj::Fusion(b)) = (x, y) {
            if a != b {
                return Ok(None);
            }
            let id = self.identity(x);
            return Ok(Some((id.clone(), id)));
        }
        let hom = self.hom(x, y)?;
        let k = hom.dim();
        if k == 0 {
            return Ok(None);
        }
        let field = self.field();
        let attempt = |coeffs: Vec<Scalar>| -> Result<Option<(Mor, Mor)>> {
            let f = hom.combination(&coeffs)?;
            match f.matrix.inverse() {
                Ok(inv) => Ok(Some((
                    f,
                    Mor {
                        dom: y.clone(),
                        cod: x.clone(),
                        matrix: inv,
                    },
                ))),
                Err(Error::Singular) => Ok(None),
                Err(e) => Err(e),
            }
        };
        for i in 0..k {
            let mut c = vec![Scalar::zero(field); k];
            c[i] = Scalar::one(field);
            if let Some(found) = attempt(c)? {
                return Ok(Some(found));
            }
        }
        if k <= 4 {
            let digits = [0i64, 1, -1, 2];
            for code in 1..4usize.pow(k as u32) {
                let mut c = Vec::with_capacity(k);
                let mut rest = code;
                for _ in 0..k {
                    c.push(Scalar::from_int(field, digits[rest % 4]));
                    rest /= 4;
                }
                if let Some(found) = attempt(c)? {
                    return Ok(Some(found));
                }
            }
        }
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
        for _ in 0..64 {
            let c = (0..k).map(|_| Scalar::from_int(field, rng.gen_range(-7..=7))).collect();
            if let Some(found) = attempt(c)? {
                return Ok(Some(found));
            }
        }
        Ok(None)
    }
}

#[cfg(test)]
mod tests;
