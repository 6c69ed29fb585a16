//! Test-side oracles. Everything here works from the raw JSON and its own
//! elimination routine, without going through the library's category code.
#![allow(dead_code)]

use std::str::FromStr;

use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

use skeinlab::category::{shipped, Obj};
use skeinlab::linalg::Matrix;
use skeinlab::ribbon::{Diagram, Evaluator, Gen, GenKind, Strand};

pub type Q = BigRational;
pub type M = Vec<Vec<Q>>;

pub fn q(s: &str) -> Q {
    Q::from_str(s.trim()).unwrap()
}

fn qi(n: i64) -> Q {
    Q::from_integer(n.into())
}

fn parse_vec(v: &Value) -> Vec<Q> {
    v.as_array().unwrap().iter().map(|x| q(x.as_str().unwrap())).collect()
}

fn parse_mat(v: &Value) -> M {
    v.as_array().unwrap().iter().map(parse_vec).collect()
}

pub fn zeros(r: usize, c: usize) -> M {
    vec![vec![Q::zero(); c]; r]
}

pub fn eye(n: usize) -> M {
    let mut m = zeros(n, n);
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = Q::one();
    }
    m
}

pub fn mul(a: &M, b: &M) -> M {
    let (r, k, c) = (a.len(), b.len(), b.first().map_or(0, Vec::len));
    let mut out = zeros(r, c);
    for i in 0..r {
        for m in 0..k {
            if a[i][m].is_zero() {
                continue;
            }
            for j in 0..c {
                let t = &a[i][m] * &b[m][j];
                out[i][j] += t;
            }
        }
    }
    out
}

pub fn kron(a: &M, b: &M) -> M {
    let (ar, ac) = (a.len(), a[0].len());
    let (br, bc) = (b.len(), b[0].len());
    let mut out = zeros(ar * br, ac * bc);
    for i in 0..ar {
        for j in 0..ac {
            if a[i][j].is_zero() {
                continue;
            }
            for k in 0..br {
                for l in 0..bc {
                    out[i * br + k][j * bc + l] = &a[i][j] * &b[k][l];
                }
            }
        }
    }
    out
}

pub fn transpose(a: &M) -> M {
    let (r, c) = (a.len(), a[0].len());
    (0..c).map(|j| (0..r).map(|i| a[i][j].clone()).collect()).collect()
}

fn add_scaled(acc: &mut M, s: &Q, m: &M) {
    if s.is_zero() {
        return;
    }
    for (ra, rm) in acc.iter_mut().zip(m) {
        for (x, y) in ra.iter_mut().zip(rm) {
            *x += s * y;
        }
    }
}

/// Rank by plain Gaussian elimination.
pub fn rank(rows: &[Vec<Q>]) -> usize {
    let mut a: Vec<Vec<Q>> = rows.to_vec();
    let ncols = a.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..a.len()).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let piv = a[r][c].clone();
        let prow: Vec<Q> = a[r].iter().map(|x| x / &piv).collect();
        for (i, row) in a.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, y) in row.iter_mut().zip(&prow) {
                    *x -= &f * y;
                }
            }
        }
        a[r] = prow;
        r += 1;
    }
    r
}

/// Null space of `rows` as a list of vectors.
pub fn kernel(rows: &[Vec<Q>], ncols: usize) -> Vec<Vec<Q>> {
    let mut a: Vec<Vec<Q>> = rows.to_vec();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..a.len()).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let piv = a[r][c].clone();
        let prow: Vec<Q> = a[r].iter().map(|x| x / &piv).collect();
        for (i, row) in a.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, y) in row.iter_mut().zip(&prow) {
                    *x -= &f * y;
                }
            }
        }
        a[r] = prow;
        pivots.push(c);
        r += 1;
    }
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Q::zero(); ncols];
            v[f] = Q::one();
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = -a[i][f].clone();
            }
            v
        })
        .collect()
}

/// A module as the list of matrices ρ(b_i).
pub type Rep = Vec<M>;

pub struct RawHopf {
    pub dim: usize,
    pub mult: Vec<Vec<Vec<Q>>>,
    pub comult: Vec<Vec<Vec<Q>>>,
    pub counit: Vec<Q>,
    pub antipode: M,
    pub r: M,
    pub ribbon: Vec<Q>,
    pub modules: Vec<(String, Rep, bool)>,
}

impl RawHopf {
    pub fn shipped(name: &str) -> RawHopf {
        let v: Value = serde_json::from_str(shipped::source(name).unwrap()).unwrap();
        let cube = |k: &str| v[k].as_array().unwrap().iter().map(parse_mat).collect::<Vec<_>>();
        let modules = v["modules"]
            .as_array()
            .unwrap()
            .iter()
            .map(|m| {
                let flags: Vec<&str> = m["flags"].as_array().unwrap().iter().map(|f| f.as_str().unwrap()).collect();
                (
                    m["name"].as_str().unwrap().to_string(),
                    m["action"].as_array().unwrap().iter().map(parse_mat).collect(),
                    flags.contains(&"projective"),
                )
            })
            .collect();
        RawHopf {
            dim: v["dim"].as_u64().unwrap() as usize,
            mult: cube("mult"),
            comult: cube("comult"),
            counit: parse_vec(&v["counit"]),
            antipode: parse_mat(&v["antipode"]),
            r: parse_mat(&v["r_matrix"]),
            ribbon: parse_vec(&v["ribbon"]),
            modules,
        }
    }

    pub fn module(&self, name: &str) -> Rep {
        self.modules.iter().find(|m| m.0 == name).unwrap().1.clone()
    }

    pub fn projectives(&self) -> Vec<String> {
        self.modules.iter().filter(|m| m.2).map(|m| m.0.clone()).collect()
    }

    pub fn character(&self, chi: &[Q]) -> Rep {
        chi.iter().map(|c| vec![vec![c.clone()]]).collect()
    }

    pub fn trivial(&self) -> Rep {
        self.character(&self.counit)
    }

    pub fn product(&self, a: &[Q], b: &[Q]) -> Vec<Q> {
        let mut out = vec![Q::zero(); self.dim];
        for i in 0..self.dim {
            for j in 0..self.dim {
                let s = &a[i] * &b[j];
                if s.is_zero() {
                    continue;
                }
                for k in 0..self.dim {
                    out[k] += &s * &self.mult[i][j][k];
                }
            }
        }
        out
    }

    fn basis(&self, i: usize) -> Vec<Q> {
        let mut v = vec![Q::zero(); self.dim];
        v[i] = Q::one();
        v
    }

    /// ρ(h) for an element h given by coordinates.
    pub fn act(&self, x: &Rep, h: &[Q]) -> M {
        let n = x[0].len();
        let mut out = zeros(n, n);
        for (c, m) in h.iter().zip(x) {
            add_scaled(&mut out, c, m);
        }
        out
    }

    pub fn tensor(&self, x: &Rep, y: &Rep) -> Rep {
        (0..self.dim)
            .map(|i| {
                let n = x[0].len() * y[0].len();
                let mut out = zeros(n, n);
                for j in 0..self.dim {
                    for k in 0..self.dim {
                        let c = &self.comult[i][j][k];
                        if !c.is_zero() {
                            add_scaled(&mut out, c, &kron(&x[j], &y[k]));
                        }
                    }
                }
                out
            })
            .collect()
    }

    pub fn tensor_all(&self, xs: &[Rep]) -> Rep {
        let mut acc = self.trivial();
        for x in xs {
            acc = self.tensor(&acc, x);
        }
        acc
    }

    /// h ▷ a = h′ a S(h″) on H itself.
    pub fn adjoint(&self) -> Rep {
        (0..self.dim)
            .map(|i| {
                let mut cols = Vec::new();
                for m in 0..self.dim {
                    let mut v = vec![Q::zero(); self.dim];
                    for j in 0..self.dim {
                        for k in 0..self.dim {
                            let c = &self.comult[i][j][k];
                            if c.is_zero() {
                                continue;
                            }
                            let t = self.product(&self.product(&self.basis(j), &self.basis(m)), &self.antipode[k]);
                            for (a, b) in v.iter_mut().zip(t) {
                                *a += c * &b;
                            }
                        }
                    }
                    cols.push(v);
                }
                transpose(&cols)
            })
            .collect()
    }

    /// dim Hom_H(X, Y) from the linear system T ρ_X = ρ_Y T.
    pub fn hom_dim(&self, x: &Rep, y: &Rep) -> usize {
        let (nx, ny) = (x[0].len(), y[0].len());
        let mut rows = Vec::new();
        for (xa, ya) in x.iter().zip(y) {
            for r in 0..ny {
                for c in 0..nx {
                    let mut eq = vec![Q::zero(); nx * ny];
                    for m in 0..nx {
                        eq[r * nx + m] += &xa[m][c];
                    }
                    for m in 0..ny {
                        eq[m * nx + c] -= &ya[r][m];
                    }
                    rows.push(eq);
                }
            }
        }
        nx * ny - rank(&rows)
    }

    pub fn intertwines(&self, x: &Rep, y: &Rep, t: &M) -> bool {
        x.iter().zip(y).all(|(a, b)| mul(t, a) == mul(b, t))
    }

    /// Left integrals Λ with hΛ = ε(h)Λ.
    pub fn left_integrals(&self) -> Vec<Vec<Q>> {
        let mut rows = Vec::new();
        for i in 0..self.dim {
            for k in 0..self.dim {
                let mut eq = vec![Q::zero(); self.dim];
                for m in 0..self.dim {
                    eq[m] += &self.mult[i][m][k];
                }
                eq[k] -= &self.counit[i];
                rows.push(eq);
            }
        }
        kernel(&rows, self.dim)
    }

    /// The character χ with Λh = χ(h)Λ.
    pub fn modular_character(&self) -> Vec<Q> {
        let ints = self.left_integrals();
        assert_eq!(ints.len(), 1);
        let lam = &ints[0];
        let p = lam.iter().position(|x| !x.is_zero()).unwrap();
        (0..self.dim)
            .map(|i| {
                let lb = self.product(lam, &self.basis(i));
                let chi = &lb[p] / &lam[p];
                assert!(lb.iter().zip(lam).all(|(a, b)| *a == &chi * b));
                chi
            })
            .collect()
    }

    /// dim of 𝔍ₗ⊗_H k: integrals modulo Λb − ε(b)Λ.
    pub fn integrals_tensor_k(&self) -> usize {
        let ints = self.left_integrals();
        let mut rel = Vec::new();
        for lam in &ints {
            for i in 0..self.dim {
                let lb = self.product(lam, &self.basis(i));
                rel.push(lb.iter().zip(lam).map(|(a, b)| a - &(b * &self.counit[i])).collect::<Vec<_>>());
            }
        }
        ints.len() - if rel.is_empty() { 0 } else { rank(&rel) }
    }

    /// c_{X,Y} = τ ∘ (ρ_X ⊗ ρ_Y)(R).
    pub fn braiding(&self, x: &Rep, y: &Rep) -> M {
        let (nx, ny) = (x[0].len(), y[0].len());
        let mut rr = zeros(nx * ny, nx * ny);
        for i in 0..self.dim {
            for j in 0..self.dim {
                if !self.r[i][j].is_zero() {
                    add_scaled(&mut rr, &self.r[i][j], &kron(&x[i], &y[j]));
                }
            }
        }
        let mut tau = zeros(nx * ny, nx * ny);
        for a in 0..nx {
            for b in 0..ny {
                tau[b * nx + a][a * ny + b] = Q::one();
            }
        }
        mul(&tau, &rr)
    }
}

pub fn to_q(m: &Matrix) -> M {
    (0..m.rows())
        .map(|r| m.row(r).iter().map(|s| s.as_rational().expect("rational field")).collect())
        .collect()
}

pub fn rep_of(obj: &Obj) -> Rep {
    obj.module().unwrap().action.iter().map(to_q).collect()
}

pub fn is_identity(m: &M) -> bool {
    *m == eye(m.len())
}

pub fn from_int(n: i64) -> Q {
    qi(n)
}

/// Raw fusion data: multiplicities N_{ij}^k and duals.
pub struct RawFusion {
    pub rank: usize,
    pub unit: usize,
    pub dual: Vec<usize>,
    pub n: Vec<Vec<Vec<u64>>>,
}

impl RawFusion {
    pub fn shipped(name: &str) -> RawFusion {
        let v: Value = serde_json::from_str(shipped::source(name).unwrap()).unwrap();
        let n: Vec<Vec<Vec<u64>>> = serde_json::from_value(v["fusion"].clone()).unwrap();
        RawFusion {
            rank: n.len(),
            unit: v["unit"].as_u64().unwrap() as usize,
            dual: serde_json::from_value(v["dual"].clone()).unwrap(),
            n,
        }
    }

    /// Multiplicity of the unit in 𝔸^⊗g, 𝔸 = ⊕ X_i^∨⊗X_i, by enumerating
    /// every sequence of summands.
    pub fn closed_blocks(&self, genus: usize) -> u64 {
        let mut summands = Vec::new();
        for i in 0..self.rank {
            for k in 0..self.rank {
                for _ in 0..self.n[self.dual[i]][i][k] {
                    summands.push(k);
                }
            }
        }
        let mut total = 0;
        let mut idx = vec![0usize; genus];
        loop {
            let mut v = vec![0u64; self.rank];
            v[self.unit] = 1;
            for &s in &idx {
                let k = summands[s];
                let mut w = vec![0u64; self.rank];
                for (a, &ca) in v.iter().enumerate() {
                    for (b, wb) in w.iter_mut().enumerate() {
                        *wb += ca * self.n[a][k][b];
                    }
                }
                v = w;
            }
            total += v[self.unit];
            let mut p = 0;
            loop {
                if p == genus {
                    return total;
                }
                idx[p] += 1;
                if idx[p] < summands.len() {
                    break;
                }
                idx[p] = 0;
                p += 1;
            }
        }
    }
}

fn random_layer(rng: &mut ChaCha8Rng, word: &[Strand], pool: &[&str]) -> Vec<Gen> {
    let mut gens = Vec::new();
    let mut pos = 0;
    let mut width = word.len();
    while pos < word.len() {
        let s = &word[pos];
        let next = word.get(pos + 1);
        let choice = rng.gen_range(0..6);
        if let (0, Some(t)) = (choice, next) {
            let k = if rng.gen_bool(0.5) { GenKind::Braid } else { GenKind::BraidInv };
            gens.push(Gen::new(k, &[s.clone(), t.clone()]));
            pos += 2;
            continue;
        }
        if choice == 1 && next.is_some_and(|t| t.name == s.name && t.dual != s.dual) {
            let k = if s.dual { GenKind::Ev } else { GenKind::EvR };
            gens.push(Gen::new(k, &[Strand::up(&s.name)]));
            pos += 2;
            width -= 2;
            continue;
        }
        if choice == 2 && width < 4 {
            let n = pool[rng.gen_range(0..pool.len())];
            let k = if rng.gen_bool(0.5) { GenKind::Coev } else { GenKind::CoevR };
            gens.push(Gen::new(k, &[Strand::up(n)]));
            width += 2;
            continue;
        }
        let k = match choice {
            3 => GenKind::Twist,
            4 => GenKind::TwistInv,
            _ => GenKind::Id,
        };
        gens.push(Gen::new(k, &[s.clone()]));
        pos += 1;
    }
    if gens.is_empty() {
        gens.push(Gen::new(GenKind::Coev, &[Strand::up(pool[rng.gen_range(0..pool.len())])]));
    }
    gens
}

/// A random diagram with the given input word and at most four strands.
pub fn random_diagram(ev: &Evaluator, rng: &mut ChaCha8Rng, input: Vec<Strand>, pool: &[&str]) -> Diagram {
    let mut layers: Vec<Vec<Gen>> = Vec::new();
    let mut word = input.clone();
    for _ in 0..rng.gen_range(1..4) {
        layers.push(random_layer(rng, &word, pool));
        word = ev.diagram(&input, layers.clone()).unwrap().output;
    }
    ev.diagram(&input, layers).unwrap()
}

pub fn random_word(rng: &mut ChaCha8Rng, pool: &[&str]) -> Vec<Strand> {
    (0..rng.gen_range(0..3))
        .map(|_| Strand {
            name: pool[rng.gen_range(0..pool.len())].to_string(),
            dual: rng.gen_bool(0.5),
        })
        .collect()
}
