//! Line-based diagram syntax.
//!
//! ```text
//! # comments run to end of line
//! input X+ Y-
//! layer braid(X,Y-) | twist(Z)
//! ```

use super::{Diagram, Gen, GenKind, Layer, Strand};
use crate::error::{Error, Result};

struct Cursor {
    line: usize,
    chars: Vec<(usize, char)>,
    pos: usize,
}

impl Cursor {
    fn new(line: usize, src: &str) -> Cursor {
        Cursor {
            line,
            chars: src.chars().enumerate().collect(),
            pos: 0,
        }
    }

    fn col(&self) -> usize {
        self.chars.get(self.pos).map_or(self.chars.len(), |&(c, _)| c) + 1
    }

    fn err(&self, msg: impl Into<String>) -> Error {
        Error::Syntax {
            line: self.line,
            col: self.col(),
            msg: msg.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    fn at_end(&mut self) -> bool {
        self.skip_ws();
        self.peek().is_none()
    }

    fn eat(&mut self, ch: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(ch) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, ch: char) -> Result<()> {
        if self.eat(ch) {
            Ok(())
        } else {
            Err(self.err(match self.peek() {
                Some(c) => format!("expected `{ch}`, found `{c}`"),
                None => format!("expected `{ch}`, found end of line"),
            }))
        }
    }

    fn ident(&mut self) -> Result<String> {
        self.skip_ws();
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_alphanumeric() || c == '_' || c == '.') {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err(match self.peek() {
                Some(c) => format!("expected a name, found `{c}`"),
                None => "expected a name, found end of line".to_string(),
            }));
        }
        Ok(self.chars[start..self.pos].iter().map(|&(_, c)| c).collect())
    }

    fn strand(&mut self) -> Result<Strand> {
        let name = self.ident()?;
        let dual = match self.peek() {
            Some('+') => {
                self.pos += 1;
                false
            }
            Some('-') => {
                self.pos += 1;
                true
            }
            _ => false,
        };
        Ok(Strand { name, dual })
    }
}

/// Parses a strand label such as `X`, `X+` or `X-`.
pub fn parse_strand(text: &str) -> Result<Strand> {
    let mut c = Cursor::new(1, text);
    let s = c.strand()?;
    if !c.at_end() {
        return Err(c.err("trailing characters after label"));
    }
    Ok(s)
}

fn generator(c: &mut Cursor) -> Result<Gen> {
    c.skip_ws();
    let col = c.col();
    let name = c.ident()?;
    let arity = match name.as_str() {
        "id" | "ev" | "coev" | "ev_r" | "coev_r" | "twist" | "twist_inv" | "coupon" => 1,
        "braid" | "braid_inv" => 2,
        other => {
            return Err(Error::Syntax {
                line: c.line,
                col,
                msg: format!("unknown generator `{other}`"),
            })
        }
    };
    c.expect('(')?;
    let mut args = Vec::new();
    if name == "coupon" {
        let n = c.ident()?;
        args.push(Strand { name: n, dual: false });
    } else {
        args.push(c.strand()?);
        while c.eat(',') {
            args.push(c.strand()?);
        }
    }
    if args.len() != arity {
        return Err(c.err(format!("`{name}` takes {arity} argument(s), got {}", args.len())));
    }
    c.expect(')')?;
    let x = args[0].clone();
    let kind = match (name.as_str(), x.dual) {
        ("id", _) => GenKind::Id,
        ("braid", _) => GenKind::Braid,
        ("braid_inv", _) => GenKind::BraidInv,
        ("twist", _) => GenKind::Twist,
        ("twist_inv", _) => GenKind::TwistInv,
        ("coupon", _) => GenKind::Coupon(x.name.clone()),
        // Cups and caps on a dual strand are the other-sided ones on X.
        ("ev", false) | ("ev_r", true) => GenKind::Ev,
        ("ev_r", false) | ("ev", true) => GenKind::EvR,
        ("coev", false) | ("coev_r", true) => GenKind::Coev,
        ("coev_r", false) | ("coev", true) => GenKind::CoevR,
        _ => unreachable!(),
    };
    let args = match kind {
        GenKind::Ev | GenKind::EvR | GenKind::Coev | GenKind::CoevR => vec![Strand {
            name: x.name,
            dual: false,
        }],
        GenKind::Coupon(_) => Vec::new(),
        _ => args,
    };
    Ok(Gen { kind, args, col })
}

/// Parses text into layers; slot bookkeeping happens in `Evaluator::parse`.
pub(crate) fn parse_text(text: &str) -> Result<(Vec<Strand>, Vec<Layer>)> {
    let mut input: Option<Vec<Strand>> = None;
    let mut layers = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let body = raw.split('#').next().unwrap_or("");
        let mut c = Cursor::new(line, body);
        if c.at_end() {
            continue;
        }
        let kw = c.ident()?;
        match kw.as_str() {
            "input" => {
                if input.is_some() {
                    return Err(Error::Syntax {
                        line,
                        col: 1,
                        msg: "duplicate `input` header".into(),
                    });
                }
                if !layers.is_empty() {
                    return Err(Error::Syntax {
                        line,
                        col: 1,
                        msg: "`input` must precede all layers".into(),
                    });
                }
                let mut word = Vec::new();
                while !c.at_end() {
                    word.push(c.strand()?);
                }
                input = Some(word);
            }
            "layer" => {
                if input.is_none() {
                    return Err(Error::Syntax {
                        line,
                        col: 1,
                        msg: "missing `input` header before first layer".into(),
                    });
                }
                let mut gens = vec![generator(&mut c)?];
                while c.eat('|') {
                    gens.push(generator(&mut c)?);
                }
                if !c.at_end() {
                    return Err(c.err("expected `|` or end of line"));
                }
                layers.push(Layer { line, gens });
            }
            other => {
                return Err(Error::Syntax {
                    line,
                    col: 1,
                    msg: format!("expected `input` or `layer`, found `{other}`"),
                })
            }
        }
    }
    let input = input.ok_or(Error::Syntax {
        line: 1,
        col: 1,
        msg: "missing `input` header".into(),
    })?;
    Ok((input, layers))
}

impl Diagram {
    /// Renders the diagram back into the line syntax.
    pub fn to_text(&self) -> String {
        let mut out = String::from("input");
        for s in &self.input {
            out.push(' ');
            out.push_str(&s.to_string());
        }
        out.push('\n');
        for layer in &self.layers {
            let gens: Vec<String> = layer.gens.iter().map(Gen::to_string).collect();
            out.push_str("layer ");
            out.push_str(&gens.join(" | "));
            out.push('\n');
        }
        out
    }
}
