//! Handlebody block spaces, their gluing, and the mapping-class action.

use std::fmt;

use serde::Serialize;
use serde_json::{json, Value};

use crate::category::{HomSpace, Mor, Obj};
use crate::coend::{coend_over_generator, pre_compose_matrix, BifunctorPresentation, CoendResult, Engine};
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Scalar};

/// A boundary label: an object, or a fresh slot awaiting gluing.
#[derive(Clone, Debug, PartialEq)]
pub enum Label {
    Object { name: String, obj: Obj },
    Slot,
}

impl Label {
    pub fn name(&self) -> &str {
        match self {
            Label::Object { name, .. } => name,
            Label::Slot => "_",
        }
    }
}

/// A handlebody of genus `genus` with labelled disks on its boundary.
#[derive(Clone, Debug, PartialEq)]
pub struct HandlebodySig {
    pub genus: usize,
    pub labels: Vec<Label>,
}

impl HandlebodySig {
    pub fn new(genus: usize, labels: Vec<Label>) -> HandlebodySig {
        HandlebodySig { genus, labels }
    }

    pub fn closed(genus: usize) -> HandlebodySig {
        HandlebodySig::new(genus, Vec::new())
    }

    /// Label objects, failing on unlabelled slots.
    pub fn objects(&self) -> Result<Vec<Obj>> {
        self.labels
            .iter()
            .enumerate()
            .map(|(i, l)| match l {
                Label::Object { obj, .. } => Ok(obj.clone()),
                Label::Slot => Err(Error::Slot(format!("slot {} is unlabelled", i + 1))),
            })
            .collect()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "genus": self.genus,
            "labels": self.labels.iter().map(Label::name).collect::<Vec<_>>(),
        })
    }
}

impl fmt::Display for HandlebodySig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let labels: Vec<&str> = self.labels.iter().map(Label::name).collect();
        write!(f, "g={} labels=({})", self.genus, labels.join(","))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Provenance {
    Direct,
    GluedCoend,
    Ball,
}

/// A block space, stored un-dualized as a Hom space.
#[derive(Clone, Debug)]
pub struct BlockSpace {
    pub sig: HandlebodySig,
    pub dim: usize,
    pub hom: Option<HomSpace>,
    pub provenance: Provenance,
    pub warnings: Vec<String>,
}

/// Result of gluing slot pairs by a coend over the projective generator.
#[derive(Clone, Debug)]
pub struct GlueResult {
    pub glued: BlockSpace,
    pub coend: CoendResult,
    /// The space F(G, G) the coend is a quotient of (Hopf backend).
    pub ambient: Option<HomSpace>,
    /// Blocks of the sewn signature computed by the direct formula.
    pub direct: BlockSpace,
    /// Matrix from coend coordinates to direct-block coordinates.
    pub map: Option<Matrix>,
    /// The map and its inverse, when the map is invertible.
    pub iso: Option<(Matrix, Matrix)>,
    /// The composite X'⊗𝔸^{g+p} → F-word realising the map (Hopf backend).
    pub insertion: Option<Mor>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CompareReport {
    pub sig: Value,
    pub dim_direct: usize,
    pub dim_glued: Option<usize>,
    pub dim_ball: Option<usize>,
    pub agree: bool,
    pub iso: Option<Value>,
}

/// A mapping-class generator; indices are 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum McgGen {
    Braid(usize),
    BraidInv(usize),
    Twist(usize),
    TwistInv(usize),
    MeridianTwist(usize),
}

impl McgGen {
    pub fn parse(text: &str) -> Result<McgGen> {
        let text = text.trim();
        let bad = || Error::Index(format!("malformed generator `{text}`"));
        let (head, rest) = text.split_once('(').ok_or_else(bad)?;
        let arg = rest.strip_suffix(')').ok_or_else(bad)?;
        let k: usize = arg.trim().parse().map_err(|_| bad())?;
        if k == 0 {
            return Err(Error::Index("generator indices are 1-based".into()));
        }
        Ok(match head.trim() {
            "braid" => McgGen::Braid(k),
            "braid_inv" => McgGen::BraidInv(k),
            "twist" => McgGen::Twist(k),
            "twist_inv" => McgGen::TwistInv(k),
            "meridian_twist" => McgGen::MeridianTwist(k),
            _ => return Err(bad()),
        })
    }

    /// Parses a comma-separated word such as `braid(1),twist(2)`.
    pub fn parse_word(text: &str) -> Result<Vec<McgGen>> {
        let mut out = Vec::new();
        let mut depth = 0usize;
        let mut start = 0;
        for (i, ch) in text.char_indices() {
            match ch {
                '(' => depth += 1,
                ')' => depth = depth.saturating_sub(1),
                ',' if depth == 0 => {
                    out.push(McgGen::parse(&text[start..i])?);
                    start = i + 1;
                }
                _ => {}
            }
        }
        if !text[start..].trim().is_empty() {
            out.push(McgGen::parse(&text[start..])?);
        }
        Ok(out)
    }
}

impl fmt::Display for McgGen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            McgGen::Braid(k) => write!(f, "braid({k})"),
            McgGen::BraidInv(k) => write!(f, "braid_inv({k})"),
            McgGen::Twist(k) => write!(f, "twist({k})"),
            McgGen::TwistInv(k) => write!(f, "twist_inv({k})"),
            McgGen::MeridianTwist(k) => write!(f, "meridian_twist({k})"),
        }
    }
}

/// Action of a word on block spaces, from the first signature to the last.
#[derive(Clone, Debug)]
pub struct McgAction {
    pub source: HandlebodySig,
    pub target: HandlebodySig,
    pub matrix: Matrix,
}

fn sizes(objs: &[Obj]) -> usize {
    objs.iter().map(Obj::size).product()
}

/// I_left ⊗ m ⊗ I_right on underlying spaces.
fn whisker_matrix(left: usize, m: &Matrix, right: usize) -> Matrix {
    let field = m.field();
    Matrix::identity(field, left).kron(m).kron(&Matrix::identity(field, right))
}

/// Coordinates of T ↦ T∘m from `src` to `tgt`, where m: tgt.dom → src.dom.
fn transport(src: &HomSpace, tgt: &HomSpace, m: &Matrix) -> Result<Matrix> {
    let cols = src
        .basis
        .iter()
        .map(|t| tgt.coordinates(&(&t.matrix * m)))
        .collect::<Result<Vec<_>>>()?;
    Ok(Matrix::from_columns(m.field(), tgt.dim(), &cols))
}

impl Engine {
    /// Resolves a label name: roster names, `I`, `A` (canonical end),
    /// `alpha`, `alpha_inv`, `G` (projective generator), `_` (slot).
    pub fn label(&self, name: &str) -> Result<Label> {
        let cat = self.category();
        let obj = match name {
            "_" => return Ok(Label::Slot),
            "A" => self.canonical_end()?,
            "alpha" => self.alpha()?,
            "alpha_inv" => self.alpha_inv()?,
            "G" => cat.projective_generator(),
            other => cat.object(other)?,
        };
        Ok(Label::Object {
            name: name.to_string(),
            obj,
        })
    }

    pub fn sig(&self, genus: usize, labels: &[&str]) -> Result<HandlebodySig> {
        Ok(HandlebodySig::new(
            genus,
            labels.iter().map(|l| self.label(l)).collect::<Result<_>>()?,
        ))
    }

    /// The word X₁…Xₙ 𝔸…𝔸 of a fully labelled signature.
    pub fn block_word(&self, sig: &HandlebodySig) -> Result<Vec<Obj>> {
        let mut word = sig.objects()?;
        word.extend(std::iter::repeat(self.canonical_end()?).take(sig.genus));
        Ok(word)
    }

    /// Hom(X₁⊗…⊗Xₙ⊗𝔸^⊗g, α⁻¹).
    pub fn blocks(&self, sig: &HandlebodySig) -> Result<BlockSpace> {
        let cat = self.category();
        let x = cat.tensor_all(&self.block_word(sig)?)?;
        let hom = cat.hom(&x, &self.alpha_inv()?)?;
        Ok(BlockSpace {
            sig: sig.clone(),
            dim: hom.dim(),
            hom: Some(hom),
            provenance: Provenance::Direct,
            warnings: Vec::new(),
        })
    }

    /// Hom(I, P₁⊗…⊗Pₙ); non-projective labels only produce warnings.
    pub fn ball_skein(&self, labels: &[Label]) -> Result<BlockSpace> {
        if labels.is_empty() {
            return Err(Error::Index("ball_skein needs at least one label; see empty_ball_skein".into()));
        }
        let cat = self.category();
        let sig = HandlebodySig::new(0, labels.to_vec());
        let objs = sig.objects()?;
        let warnings = labels
            .iter()
            .zip(&objs)
            .filter(|(_, o)| !cat.is_projective(o))
            .map(|(l, _)| format!("label `{}` is not flagged projective", l.name()))
            .collect();
        let hom = cat.hom(&cat.unit(), &cat.tensor_all(&objs)?)?;
        Ok(BlockSpace {
            sig,
            dim: hom.dim(),
            hom: Some(hom),
            provenance: Provenance::Ball,
            warnings,
        })
    }

    /// The skein module of an empty ball, of dimension dim Hom(α, I).
    pub fn empty_ball_skein(&self) -> Result<BlockSpace> {
        Ok(BlockSpace {
            sig: HandlebodySig::closed(0),
            dim: self.modified_trace_dim()?,
            hom: None,
            provenance: Provenance::Ball,
            warnings: Vec::new(),
        })
    }

    /// Glues slots `i` and `j` (0-based) by inserting P^∨ and P and taking
    /// the coend over projectives.
    pub fn glue(&self, sig: &HandlebodySig, i: usize, j: usize) -> Result<GlueResult> {
        self.glue_pairs(sig, &[(i, j)])
    }

    /// Glues several slot pairs at once; every slot must be in one pair.
    pub fn glue_pairs(&self, sig: &HandlebodySig, pairs: &[(usize, usize)]) -> Result<GlueResult> {
        let n = sig.labels.len();
        let mut used = vec![false; n];
        let mut norm = Vec::with_capacity(pairs.len());
        for &(a, b) in pairs {
            if a >= n || b >= n {
                return Err(Error::Slot(format!("slot index out of range (have {n} labels)")));
            }
            if a == b {
                return Err(Error::Slot("cannot sew a slot to itself".into()));
            }
            for s in [a, b] {
                if sig.labels[s] != Label::Slot {
                    return Err(Error::Slot(format!("position {} is labelled, not a fresh slot", s + 1)));
                }
                if used[s] {
                    return Err(Error::Slot(format!("slot {} is sewn twice", s + 1)));
                }
                used[s] = true;
            }
            norm.push((a.min(b), a.max(b)));
        }
        if let Some(s) = (0..n).find(|&s| sig.labels[s] == Label::Slot && !used[s]) {
            return Err(Error::Slot(format!("slot {} is left unsewn", s + 1)));
        }
        let remaining: Vec<Label> = sig
            .labels
            .iter()
            .filter(|l| **l != Label::Slot)
            .cloned()
            .collect();
        let sewn = HandlebodySig::new(sig.genus + norm.len(), remaining);
        let direct = self.blocks(&sewn)?;
        if self.category().is_hopf() {
            self.glue_hopf(sig, &norm, sewn, direct)
        } else {
            self.glue_fusion(sig, &norm, sewn, direct)
        }
    }

    fn glue_hopf(
        &self,
        sig: &HandlebodySig,
        pairs: &[(usize, usize)],
        sewn: HandlebodySig,
        direct: BlockSpace,
    ) -> Result<GlueResult> {
        let cat = self.category();
        let field = cat.field();
        let g = cat.projective_generator();
        let gd = cat.dual(&g)?;
        let a = self.canonical_end()?;
        let k = self.alpha_inv()?;
        let n = sig.labels.len();

        let mut word: Vec<Obj> = Vec::with_capacity(n + sig.genus);
        for (pos, label) in sig.labels.iter().enumerate() {
            word.push(match label {
                Label::Object { obj, .. } => obj.clone(),
                Label::Slot if pairs.iter().any(|&(i, _)| i == pos) => gd.clone(),
                Label::Slot => g.clone(),
            });
        }
        word.extend(std::iter::repeat(a.clone()).take(sig.genus));
        let ambient = cat.hom(&cat.tensor_all(&word)?, &k)?;

        let ends: Vec<Mor> = cat.hom(&g, &g)?.basis;
        let mut left = Vec::new();
        let mut right = Vec::new();
        for &(i, j) in pairs {
            for e in &ends {
                let at_j = whisker_matrix(sizes(&word[..j]), &e.matrix, sizes(&word[j + 1..]));
                let at_i = whisker_matrix(sizes(&word[..i]), &e.matrix.transpose(), sizes(&word[i + 1..]));
                left.push(pre_compose_matrix(&ambient, &at_j)?);
                right.push(pre_compose_matrix(&ambient, &at_i)?);
            }
        }
        let p = BifunctorPresentation {
            dim: ambient.dim(),
            left,
            right,
            object: None,
        };
        let coend = coend_over_generator(cat, &p)?;

        // Insertion: X'⊗(𝔸)^p⊗𝔸^g → X'⊗(G^∨⊗G)^p⊗𝔸^g → word, the last map
        // braiding each G^∨, G into its slot.
        let inclusion = Mor {
            dom: a.clone(),
            cod: cat.tensor(&gd, &g)?,
            matrix: self
                .invariants()?
                .end_inclusion
                .clone()
                .expect("hopf backend keeps the end inclusion"),
        };
        let kept: Vec<usize> = (0..n).filter(|&s| sig.labels[s] != Label::Slot).collect();
        let mut unsorted: Vec<(usize, Obj)> = kept.iter().map(|&s| (s, word[s].clone())).collect();
        for &(i, j) in pairs {
            unsorted.push((i, gd.clone()));
            unsorted.push((j, g.clone()));
        }
        for t in 0..sig.genus {
            unsorted.push((n + t, a.clone()));
        }
        let sort = self.braid_sort(&unsorted)?;
        let mut stage: Vec<Mor> = kept.iter().map(|&s| cat.identity(&word[s])).collect();
        stage.extend(std::iter::repeat(inclusion).take(pairs.len()));
        stage.extend(std::iter::repeat(cat.identity(&a)).take(sig.genus));
        let mut insert = cat.identity(&cat.unit());
        for m in stage.iter().rev() {
            insert = cat.tensor_mor(m, &insert)?;
        }
        let insertion = cat.compose(&sort, &insert)?;

        let target = direct.hom.as_ref().expect("direct blocks carry a Hom space");
        let cols = (0..coend.dim())
            .map(|c| {
                let t = ambient.combination(&coend.section.col(c))?;
                target.coordinates(&(&t.matrix * &insertion.matrix))
            })
            .collect::<Result<Vec<_>>>()?;
        let map = Matrix::from_columns(field, target.dim(), &cols);
        let iso = if map.is_square() {
            map.inverse().ok().map(|inv| (map.clone(), inv))
        } else {
            None
        };
        let mut warnings = Vec::new();
        if iso.is_none() {
            warnings.push(format!(
                "𝔸-insertion has rank {} on a {}-dimensional coend (direct dimension {}); no isomorphism reported",
                map.rank(),
                coend.dim(),
                target.dim()
            ));
        }
        Ok(GlueResult {
            glued: BlockSpace {
                sig: sig.clone(),
                dim: coend.dim(),
                hom: None,
                provenance: Provenance::GluedCoend,
                warnings,
            },
            coend,
            ambient: Some(ambient),
            direct: BlockSpace { sig: sewn, ..direct },
            map: Some(map),
            iso,
            insertion: Some(insertion),
        })
    }

    /// Braids a word into the order given by the keys, returning a
    /// morphism from the word as given to the sorted word.
    fn braid_sort(&self, items: &[(usize, Obj)]) -> Result<Mor> {
        let cat = self.category();
        let mut items = items.to_vec();
        let objs: Vec<Obj> = items.iter().map(|(_, o)| o.clone()).collect();
        let mut acc = cat.identity(&cat.tensor_all(&objs)?);
        loop {
            let Some(p) = (0..items.len().saturating_sub(1)).find(|&p| items[p].0 > items[p + 1].0) else {
                break;
            };
            let objs: Vec<Obj> = items.iter().map(|(_, o)| o.clone()).collect();
            let c = cat.braiding(&objs[p], &objs[p + 1])?;
            let step = cat.whisker(&objs[..p], &c, &objs[p + 2..])?;
            acc = cat.compose(&step, &acc)?;
            items.swap(p, p + 1);
        }
        Ok(acc)
    }

    fn glue_fusion(
        &self,
        sig: &HandlebodySig,
        pairs: &[(usize, usize)],
        sewn: HandlebodySig,
        direct: BlockSpace,
    ) -> Result<GlueResult> {
        let cat = self.category();
        let f = cat.fusion()?;
        let field = cat.field();
        let r = f.rank();
        let p = pairs.len();
        let a = self.canonical_end()?;
        // Each choice of simples (s_k, t_k) at the slots contributes a
        // summand of F(G, G); End(G) acts by the idempotents of the simples.
        let combos: Vec<Vec<usize>> = (0..r.pow(2 * p as u32))
            .map(|mut code| {
                (0..2 * p)
                    .map(|_| {
                        let d = code % r;
                        code /= r;
                        d
                    })
                    .collect()
            })
            .collect();
        let mut dims = Vec::with_capacity(combos.len());
        for combo in &combos {
            let mut word = Vec::new();
            for (pos, label) in sig.labels.iter().enumerate() {
                word.push(match label {
                    Label::Object { obj, .. } => obj.clone(),
                    Label::Slot => {
                        let k = pairs.iter().position(|&(i, j)| i == pos || j == pos).expect("validated");
                        if pairs[k].0 == pos {
                            Obj::Fusion(f.dual_of(&f.simple(combo[2 * k])))
                        } else {
                            Obj::Fusion(f.simple(combo[2 * k + 1]))
                        }
                    }
                });
            }
            word.extend(std::iter::repeat(a.clone()).take(sig.genus));
            dims.push(cat.hom(&cat.tensor_all(&word)?, &self.alpha_inv()?)?.dim());
        }
        let total: usize = dims.iter().sum();
        let diag = |pick: &dyn Fn(&[usize]) -> bool| {
            let mut entries = Vec::with_capacity(total);
            for (combo, &d) in combos.iter().zip(&dims) {
                let v = if pick(combo) { Scalar::one(field) } else { Scalar::zero(field) };
                entries.extend(std::iter::repeat(v).take(d));
            }
            Matrix::from_fn(field, total, total, |i, j| {
                if i == j {
                    entries[i].clone()
                } else {
                    Scalar::zero(field)
                }
            })
        };
        let mut left = Vec::new();
        let mut right = Vec::new();
        for k in 0..p {
            for u in 0..r {
                left.push(diag(&|c: &[usize]| c[2 * k + 1] == u));
                right.push(diag(&|c: &[usize]| c[2 * k] == u));
            }
        }
        let pres = BifunctorPresentation {
            dim: total,
            left,
            right,
            object: None,
        };
        let coend = coend_over_generator(cat, &pres)?;
        let (map, iso) = if coend.dim() == direct.dim {
            let id = Matrix::identity(field, direct.dim);
            (Some(id.clone()), Some((id.clone(), id)))
        } else {
            (None, None)
        };
        Ok(GlueResult {
            glued: BlockSpace {
                sig: sig.clone(),
                dim: coend.dim(),
                hom: None,
                provenance: Provenance::GluedCoend,
                warnings: Vec::new(),
            },
            coend,
            ambient: None,
            direct: BlockSpace { sig: sewn, ..direct },
            map,
            iso,
            insertion: None,
        })
    }

    /// Computes a fully labelled signature by every available route.
    pub fn compare(&self, sig: &HandlebodySig) -> Result<CompareReport> {
        let cat = self.category();
        let direct = self.blocks(sig)?;
        let mut agree = true;
        let mut iso = None;
        let dim_glued = if sig.genus > 0 {
            let mut labels = sig.labels.clone();
            let n = labels.len();
            labels.extend(std::iter::repeat(Label::Slot).take(2 * sig.genus));
            let open = HandlebodySig::new(0, labels);
            let pairs: Vec<(usize, usize)> = (0..sig.genus).map(|k| (n + 2 * k, n + 2 * k + 1)).collect();
            let glued = self.glue_pairs(&open, &pairs)?;
            agree &= glued.glued.dim == direct.dim;
            iso = glued.iso.as_ref().map(|(m, _)| m.to_json());
            Some(glued.glued.dim)
        } else {
            None
        };
        let objs = sig.objects()?;
        let dim_ball = if sig.genus == 0 && !objs.is_empty() && objs.iter().all(|o| cat.is_projective(o)) {
            let ball = self.ball_skein(&sig.labels)?;
            agree &= ball.dim == direct.dim;
            Some(ball.dim)
        } else {
            None
        };
        Ok(CompareReport {
            sig: sig.to_json(),
            dim_direct: direct.dim,
            dim_glued,
            dim_ball,
            agree,
            iso,
        })
    }

    /// dim Hom(X⊗𝔸^g, α⁻¹) = dim Hom(α⊗X⊗𝔸^g, I).
    pub fn background_charge_check(&self, sig: &HandlebodySig) -> Result<bool> {
        let (lhs, rhs) = self.background_charge_dims(&sig.objects()?, sig.genus)?;
        Ok(lhs == rhs)
    }

    /// Matrix of a generator word acting on block spaces. Braids change
    /// the signature; the result maps blocks of `sig` to blocks of the
    /// permuted signature.
    pub fn mcg_action(&self, sig: &HandlebodySig, word: &[McgGen]) -> Result<McgAction> {
        let cat = self.category();
        if !cat.is_hopf() {
            return Err(Error::UnsupportedForBackend {
                op: "mcg_action",
                backend: cat.backend_name(),
            });
        }
        let field = cat.field();
        let mut current = sig.clone();
        let mut space = self.blocks(&current)?;
        let mut acc = Matrix::identity(field, space.dim);
        for &gen in word {
            let (next, m) = self.generator_morphism(&current, gen)?;
            let next_space = if next == current { space.clone() } else { self.blocks(&next)? };
            let step = transport(
                space.hom.as_ref().expect("direct blocks"),
                next_space.hom.as_ref().expect("direct blocks"),
                &m,
            )?;
            acc = &step * &acc;
            current = next;
            space = next_space;
        }
        Ok(McgAction {
            source: sig.clone(),
            target: current,
            matrix: acc,
        })
    }

    /// The new signature and the morphism m: word(new) → word(old) by
    /// which blocks are precomposed.
    fn generator_morphism(&self, sig: &HandlebodySig, gen: McgGen) -> Result<(HandlebodySig, Matrix)> {
        let cat = self.category();
        let word = self.block_word(sig)?;
        let n = sig.labels.len();
        let slot = |k: usize, width: usize| -> Result<usize> {
            if k == 0 || k + width - 1 > n {
                return Err(Error::Index(format!("{gen} needs label positions 1..={n}")));
            }
            Ok(k - 1)
        };
        let at = |pos: usize, width: usize, m: &Matrix| {
            whisker_matrix(sizes(&word[..pos]), m, sizes(&word[pos + width..]))
        };
        match gen {
            McgGen::Braid(k) | McgGen::BraidInv(k) => {
                let p = slot(k, 2)?;
                let mut next = sig.clone();
                next.labels.swap(p, p + 1);
                // Precompose with a map from the swapped word to the old one.
                let (x, y) = (&word[p], &word[p + 1]);
                let m = if matches!(gen, McgGen::Braid(_)) {
                    cat.braiding(y, x)?
                } else {
                    cat.braiding_inv(x, y)?
                };
                Ok((next, at(p, 2, &m.matrix)))
            }
            McgGen::Twist(k) | McgGen::TwistInv(k) => {
                let p = slot(k, 1)?;
                let m = if matches!(gen, McgGen::Twist(_)) {
                    cat.twist(&word[p])?
                } else {
                    cat.twist_inv(&word[p])?
                };
                Ok((sig.clone(), at(p, 1, &m.matrix)))
            }
            McgGen::MeridianTwist(k) => {
                if k == 0 || k > sig.genus {
                    return Err(Error::Index(format!("{gen} needs a handle index in 1..={}", sig.genus)));
                }
                let p = n + k - 1;
                let m = cat.twist(&word[p])?;
                Ok((sig.clone(), at(p, 1, &m.matrix)))
            }
        }
    }
}
