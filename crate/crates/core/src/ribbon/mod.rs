//! Layered ribbon diagrams and their evaluation to morphisms.

mod parse;

use std::collections::BTreeMap;
use std::fmt;

use serde_json::Value;

use crate::category::{parse_morphisms, Category, MorphismDecl, Mor, Obj};
use crate::error::{Error, Result};
use crate::linalg::Matrix;

pub use parse::parse_strand;

/// An oriented strand label; `dual` strands carry X^∨.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Strand {
    pub name: String,
    pub dual: bool,
}

impl Strand {
    pub fn up(name: &str) -> Strand {
        Strand {
            name: name.to_string(),
            dual: false,
        }
    }

    pub fn down(name: &str) -> Strand {
        Strand {
            name: name.to_string(),
            dual: true,
        }
    }

    pub fn flipped(&self) -> Strand {
        Strand {
            name: self.name.clone(),
            dual: !self.dual,
        }
    }
}

impl fmt::Display for Strand {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.name, if self.dual { "-" } else { "+" })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GenKind {
    Id,
    Braid,
    BraidInv,
    /// X^∨⊗X → I
    Ev,
    /// I → X⊗X^∨
    Coev,
    /// X⊗X^∨ → I
    EvR,
    /// I → X^∨⊗X
    CoevR,
    Twist,
    TwistInv,
    Coupon(String),
}

/// A generator; `args` are the strand labels it is written with.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Gen {
    pub kind: GenKind,
    pub args: Vec<Strand>,
    /// 1-based source column, 0 for generated diagrams.
    pub col: usize,
}

impl Gen {
    pub fn new(kind: GenKind, args: &[Strand]) -> Gen {
        Gen {
            kind,
            args: args.to_vec(),
            col: 0,
        }
    }
}

impl fmt::Display for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match &self.kind {
            GenKind::Coupon(n) => return write!(f, "coupon({n})"),
            GenKind::Id => "id",
            GenKind::Braid => "braid",
            GenKind::BraidInv => "braid_inv",
            GenKind::Ev => "ev",
            GenKind::Coev => "coev",
            GenKind::EvR => "ev_r",
            GenKind::CoevR => "coev_r",
            GenKind::Twist => "twist",
            GenKind::TwistInv => "twist_inv",
        };
        let args: Vec<String> = self.args.iter().map(Strand::to_string).collect();
        write!(f, "{name}({})", args.join(","))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Layer {
    /// Source line, 0 for generated diagrams.
    pub line: usize,
    pub gens: Vec<Gen>,
}

/// A diagram whose slot bookkeeping has been checked.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Diagram {
    pub input: Vec<Strand>,
    pub layers: Vec<Layer>,
    pub output: Vec<Strand>,
}

/// A coupon: a named morphism between strand words.
#[derive(Clone, Debug)]
pub struct Coupon {
    pub domain: Vec<Strand>,
    pub codomain: Vec<Strand>,
    pub matrix: Matrix,
}

/// Evaluates diagrams in a Hopf-backed category.
pub struct Evaluator<'a> {
    cat: &'a Category,
    coupons: BTreeMap<String, Coupon>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Move {
    R2,
    R3,
    ZigzagL,
    ZigzagR,
    TwistNat,
    TwistTensor,
    TwistDual,
}

impl Move {
    pub const ALL: [Move; 7] = [
        Move::R2,
        Move::R3,
        Move::ZigzagL,
        Move::ZigzagR,
        Move::TwistNat,
        Move::TwistTensor,
        Move::TwistDual,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Move::R2 => "R2",
            Move::R3 => "R3",
            Move::ZigzagL => "zigzag_l",
            Move::ZigzagR => "zigzag_r",
            Move::TwistNat => "twist_nat",
            Move::TwistTensor => "twist_tensor",
            Move::TwistDual => "twist_dual",
        }
    }

    /// Number of object arguments the move takes.
    pub fn arity(self) -> usize {
        match self {
            Move::ZigzagL | Move::ZigzagR | Move::TwistDual => 1,
            Move::R2 | Move::TwistNat | Move::TwistTensor => 2,
            Move::R3 => 3,
        }
    }
}

fn mismatch(layer: usize, line: usize, msg: String) -> Error {
    let at = if line > 0 { format!(" (line {line})") } else { String::new() };
    Error::TypeMismatch {
        layer,
        msg: format!("layer {layer}{at}: {msg}"),
    }
}

fn show(word: &[Strand]) -> String {
    if word.is_empty() {
        return "(empty)".into();
    }
    word.iter().map(Strand::to_string).collect::<Vec<_>>().join(" ")
}

impl<'a> Evaluator<'a> {
    /// Coupons start as the morphisms declared in the category file.
    pub fn new(cat: &'a Category) -> Result<Evaluator<'a>> {
        let mut ev = Evaluator {
            cat,
            coupons: BTreeMap::new(),
        };
        if let Ok(h) = cat.hopf() {
            for decl in h.morphisms.clone() {
                ev.add_decl(&decl)?;
            }
        }
        Ok(ev)
    }

    pub fn category(&self) -> &Category {
        self.cat
    }

    /// Adds coupons from a sidecar map `name -> {domain, codomain, matrix}`.
    pub fn add_sidecar(&mut self, value: &Value) -> Result<()> {
        for decl in parse_morphisms(value, self.cat.field())? {
            self.add_decl(&decl)?;
        }
        Ok(())
    }

    fn add_decl(&mut self, decl: &MorphismDecl) -> Result<()> {
        let word = |names: &[String]| names.iter().map(|n| parse_strand(n)).collect::<Result<Vec<_>>>();
        let domain = word(&decl.domain)?;
        let codomain = word(&decl.codomain)?;
        self.add_coupon(&decl.name, domain, codomain, decl.matrix.clone())
    }

    /// Registers a coupon after checking it intertwines the actions.
    pub fn add_coupon(&mut self, name: &str, domain: Vec<Strand>, codomain: Vec<Strand>, matrix: Matrix) -> Result<()> {
        if domain.is_empty() && codomain.is_empty() {
            return Err(Error::Schema(format!("coupon `{name}` must have at least one attached strand")));
        }
        let dom = self.word_object(&domain)?;
        let cod = self.word_object(&codomain)?;
        self.cat.morphism(&dom, &cod, matrix.clone()).map_err(|e| match e {
            Error::DimensionMismatch(m) => Error::DimensionMismatch(format!("coupon `{name}`: {m}")),
            other => other,
        })?;
        self.coupons.insert(
            name.to_string(),
            Coupon {
                domain,
                codomain,
                matrix,
            },
        );
        Ok(())
    }

    pub fn coupon(&self, name: &str) -> Result<&Coupon> {
        self.coupons
            .get(name)
            .ok_or_else(|| Error::UnknownCoupon(name.to_string()))
    }

    pub fn strand_object(&self, s: &Strand) -> Result<Obj> {
        let x = self.cat.object(&s.name)?;
        if s.dual {
            self.cat.dual(&x)
        } else {
            Ok(x)
        }
    }

    pub fn word_object(&self, word: &[Strand]) -> Result<Obj> {
        let objs = word.iter().map(|s| self.strand_object(s)).collect::<Result<Vec<_>>>()?;
        self.cat.tensor_all(&objs)
    }

    /// Input and output words of a generator.
    fn boundary(&self, g: &Gen) -> Result<(Vec<Strand>, Vec<Strand>)> {
        let a = |i: usize| g.args[i].clone();
        Ok(match &g.kind {
            GenKind::Id | GenKind::Twist | GenKind::TwistInv => (vec![a(0)], vec![a(0)]),
            GenKind::Braid | GenKind::BraidInv => (vec![a(0), a(1)], vec![a(1), a(0)]),
            GenKind::Ev => (vec![a(0).flipped(), a(0)], vec![]),
            GenKind::EvR => (vec![a(0), a(0).flipped()], vec![]),
            GenKind::Coev => (vec![], vec![a(0), a(0).flipped()]),
            GenKind::CoevR => (vec![], vec![a(0).flipped(), a(0)]),
            GenKind::Coupon(name) => {
                let c = self.coupon(name)?;
                (c.domain.clone(), c.codomain.clone())
            }
        })
    }

    /// Checks slot bookkeeping, returning the output word.
    fn check(&self, input: &[Strand], layers: &[Layer]) -> Result<Vec<Strand>> {
        let mut word = input.to_vec();
        for (k, layer) in layers.iter().enumerate() {
            let n = k + 1;
            if layer.gens.is_empty() {
                return Err(mismatch(n, layer.line, "empty layer".into()));
            }
            for s in layer.gens.iter().flat_map(|g| &g.args) {
                self.cat.object(&s.name)?;
            }
            let mut next = Vec::new();
            let mut pos = 0;
            for g in &layer.gens {
                let (ins, outs) = self.boundary(g)?;
                let end = pos + ins.len();
                if end > word.len() {
                    return Err(mismatch(
                        n,
                        layer.line,
                        format!("`{g}` needs {} strand(s) at slot {}, but the word is {}", ins.len(), pos + 1, show(&word)),
                    ));
                }
                if word[pos..end] != ins[..] {
                    return Err(mismatch(
                        n,
                        layer.line,
                        format!("`{g}` expects {} at slot {}, found {}", show(&ins), pos + 1, show(&word[pos..end])),
                    ));
                }
                next.extend(outs);
                pos = end;
            }
            next.extend_from_slice(&word[pos..]);
            word = next;
        }
        Ok(word)
    }

    pub fn parse(&self, text: &str) -> Result<Diagram> {
        let (input, layers) = parse::parse_text(text)?;
        for s in &input {
            self.cat.object(&s.name)?;
        }
        self.build(input, layers)
    }

    /// Assembles a diagram from parts, checking bookkeeping.
    pub fn build(&self, input: Vec<Strand>, layers: Vec<Layer>) -> Result<Diagram> {
        let output = self.check(&input, &layers)?;
        Ok(Diagram { input, layers, output })
    }

    /// Convenience: a generated diagram from layers of generators.
    pub fn diagram(&self, input: &[Strand], layers: Vec<Vec<Gen>>) -> Result<Diagram> {
        self.build(
            input.to_vec(),
            layers.into_iter().map(|gens| Layer { line: 0, gens }).collect(),
        )
    }

    /// `first` followed by `second`.
    pub fn concat(&self, first: &Diagram, second: &Diagram) -> Result<Diagram> {
        if first.output != second.input {
            return Err(mismatch(
                first.layers.len() + 1,
                0,
                format!("cannot stack: {} meets {}", show(&first.output), show(&second.input)),
            ));
        }
        let mut layers = first.layers.clone();
        layers.extend(second.layers.iter().cloned());
        self.build(first.input.clone(), layers)
    }

    fn gen_matrix(&self, g: &Gen) -> Result<Matrix> {
        let cat = self.cat;
        let obj = |i: usize| self.strand_object(&g.args[i]);
        let m = match &g.kind {
            GenKind::Id => cat.identity(&obj(0)?),
            GenKind::Braid => cat.braiding(&obj(0)?, &obj(1)?)?,
            // Written by its input strands: c⁻¹_{Y,X} on X⊗Y.
            GenKind::BraidInv => cat.braiding_inv(&obj(1)?, &obj(0)?)?,
            GenKind::Ev => cat.ev(&obj(0)?)?,
            GenKind::Coev => cat.coev(&obj(0)?)?,
            GenKind::EvR => cat.ev_r(&obj(0)?)?,
            GenKind::CoevR => cat.coev_r(&obj(0)?)?,
            GenKind::Twist => cat.twist(&obj(0)?)?,
            GenKind::TwistInv => cat.twist_inv(&obj(0)?)?,
            GenKind::Coupon(name) => return Ok(self.coupon(name)?.matrix.clone()),
        };
        Ok(m.matrix)
    }

    /// The morphism a diagram denotes; closed diagrams give a 1×1 matrix.
    pub fn evaluate(&self, d: &Diagram) -> Result<Mor> {
        let cat = self.cat;
        if !cat.is_hopf() {
            return Err(Error::UnsupportedForBackend {
                op: "evaluate",
                backend: cat.backend_name(),
            });
        }
        let field = cat.field();
        let dom = self.word_object(&d.input)?;
        let mut acc = Matrix::identity(field, dom.size());
        let mut word = d.input.clone();
        for layer in &d.layers {
            let mut m = Matrix::identity(field, 1);
            let mut pos = 0;
            let mut next = Vec::new();
            for g in &layer.gens {
                let (ins, outs) = self.boundary(g)?;
                m = m.kron(&self.gen_matrix(g)?);
                pos += ins.len();
                next.extend(outs);
            }
            let rest = self.word_object(&word[pos..])?;
            m = m.kron(&Matrix::identity(field, rest.size()));
            next.extend_from_slice(&word[pos..]);
            cat.check_cap(m.rows().max(m.cols()))?;
            acc = m.try_mul(&acc)?;
            word = next;
        }
        Ok(Mor {
            dom,
            cod: self.word_object(&word)?,
            matrix: acc,
        })
    }

    pub fn evaluate_text(&self, text: &str) -> Result<Mor> {
        self.evaluate(&self.parse(text)?)
    }

    /// Evaluates both sides of a local move on the given labels.
    pub fn move_check(&mut self, mv: Move, labels: &[&str]) -> Result<bool> {
        if labels.len() != mv.arity() {
            return Err(Error::Index(format!(
                "move {} takes {} label(s), got {}",
                mv.name(),
                mv.arity(),
                labels.len()
            )));
        }
        for l in labels {
            self.cat.object(l)?;
        }
        let up = |i: usize| Strand::up(labels[i]);
        let g = |k: GenKind, args: &[Strand]| Gen::new(k, args);
        let id = |s: Strand| Gen::new(GenKind::Id, &[s]);
        let same = |this: &Self, lhs: Diagram, rhs: Diagram| -> Result<bool> {
            let (l, r) = (this.evaluate(&lhs)?, this.evaluate(&rhs)?);
            Ok(l.matrix == r.matrix && l.dom == r.dom && l.cod == r.cod)
        };
        match mv {
            Move::R2 => {
                let (x, y) = (up(0), up(1));
                let ident = self.diagram(&[x.clone(), y.clone()], vec![vec![id(x.clone()), id(y.clone())]])?;
                let a = self.diagram(
                    &[x.clone(), y.clone()],
                    vec![
                        vec![g(GenKind::Braid, &[x.clone(), y.clone()])],
                        vec![g(GenKind::BraidInv, &[y.clone(), x.clone()])],
                    ],
                )?;
                let b = self.diagram(
                    &[x.clone(), y.clone()],
                    vec![
                        vec![g(GenKind::BraidInv, &[x.clone(), y.clone()])],
                        vec![g(GenKind::Braid, &[y.clone(), x.clone()])],
                    ],
                )?;
                Ok(same(self, a, ident.clone())? && same(self, b, ident)?)
            }
            Move::R3 => {
                let (x, y, z) = (up(0), up(1), up(2));
                let braid = |a: &Strand, b: &Strand| g(GenKind::Braid, &[a.clone(), b.clone()]);
                let w = [x.clone(), y.clone(), z.clone()];
                let lhs = self.diagram(
                    &w,
                    vec![
                        vec![braid(&x, &y), id(z.clone())],
                        vec![id(y.clone()), braid(&x, &z)],
                        vec![braid(&y, &z), id(x.clone())],
                    ],
                )?;
                let rhs = self.diagram(
                    &w,
                    vec![
                        vec![id(x.clone()), braid(&y, &z)],
                        vec![braid(&x, &z), id(y.clone())],
                        vec![id(z.clone()), braid(&x, &y)],
                    ],
                )?;
                Ok(same(self, lhs, rhs)?)
            }
            Move::ZigzagL | Move::ZigzagR => {
                let (x, xd) = (up(0), up(0).flipped());
                let (cup, cap) = if mv == Move::ZigzagL {
                    (GenKind::Coev, GenKind::Ev)
                } else {
                    (GenKind::CoevR, GenKind::EvR)
                };
                // For ZigzagL the snake on X is (id⊗ev)(coev⊗id); on X^∨ it is
                // (ev⊗id)(id⊗coev). ZigzagR mirrors both.
                let (s1, s2) = if mv == Move::ZigzagL {
                    (
                        self.diagram(&[x.clone()], vec![vec![g(cup.clone(), &[x.clone()]), id(x.clone())], vec![id(x.clone()), g(cap.clone(), &[x.clone()])]])?,
                        self.diagram(&[xd.clone()], vec![vec![id(xd.clone()), g(cup, &[x.clone()])], vec![g(cap, &[x.clone()]), id(xd.clone())]])?,
                    )
                } else {
                    (
                        self.diagram(&[x.clone()], vec![vec![id(x.clone()), g(cup.clone(), &[x.clone()])], vec![g(cap.clone(), &[x.clone()]), id(x.clone())]])?,
                        self.diagram(&[xd.clone()], vec![vec![g(cup, &[x.clone()]), id(xd.clone())], vec![id(xd.clone()), g(cap, &[x.clone()])]])?,
                    )
                };
                let i1 = self.diagram(&[x.clone()], vec![vec![id(x)]])?;
                let i2 = self.diagram(&[xd.clone()], vec![vec![id(xd)]])?;
                Ok(same(self, s1, i1)? && same(self, s2, i2)?)
            }
            Move::TwistNat => {
                let (x, y) = (up(0), up(1));
                let hom = self.cat.hom(&self.strand_object(&x)?, &self.strand_object(&y)?)?;
                let saved = self.coupons.clone();
                let mut ok = true;
                for (k, f) in hom.basis.iter().enumerate() {
                    let name = format!("__twist_nat_{k}");
                    self.add_coupon(&name, vec![x.clone()], vec![y.clone()], f.matrix.clone())?;
                    let c = || g(GenKind::Coupon(name.clone()), &[]);
                    let lhs = self.diagram(&[x.clone()], vec![vec![c()], vec![g(GenKind::Twist, &[y.clone()])]])?;
                    let rhs = self.diagram(&[x.clone()], vec![vec![g(GenKind::Twist, &[x.clone()])], vec![c()]])?;
                    ok &= same(self, lhs, rhs)?;
                }
                self.coupons = saved;
                Ok(ok)
            }
            Move::TwistTensor => {
                let (x, y) = (up(0), up(1));
                let rhs = self.diagram(
                    &[x.clone(), y.clone()],
                    vec![
                        vec![g(GenKind::Twist, &[x.clone()]), g(GenKind::Twist, &[y.clone()])],
                        vec![g(GenKind::Braid, &[x.clone(), y.clone()])],
                        vec![g(GenKind::Braid, &[y.clone(), x.clone()])],
                    ],
                )?;
                // The left side is the twist on the fused strand X⊗Y.
                let fused = self.word_object(&[x, y])?;
                let lhs = self.cat.twist(&fused)?;
                Ok(self.evaluate(&rhs)?.matrix == lhs.matrix)
            }
            Move::TwistDual => {
                let (x, xd) = (up(0), up(0).flipped());
                let lhs = self.diagram(&[xd.clone()], vec![vec![g(GenKind::Twist, &[xd.clone()])]])?;
                // (θ_X)^∨ drawn with a cup and a cap.
                let rhs = self.diagram(
                    &[xd.clone()],
                    vec![
                        vec![id(xd.clone()), g(GenKind::Coev, &[x.clone()])],
                        vec![id(xd.clone()), g(GenKind::Twist, &[x.clone()]), id(xd.clone())],
                        vec![g(GenKind::Ev, &[x]), id(xd)],
                    ],
                )?;
                Ok(same(self, lhs, rhs)?)
            }
        }
    }
}
