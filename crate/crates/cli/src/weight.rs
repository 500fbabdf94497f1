//! Reading and writing affine weights.
//!
//! Two input forms are accepted:
//!
//! - JSON: `{"finite": ["1/3"], "level": "-2", "delta": "0"}`; numbers may
//!   also be given as JSON integers.
//! - Shorthand: a linear expression over `w1..wl` (or `w` in rank 1),
//!   `a0..al`, `L0`, `d` and `rho`, with rational numbers, `+ - * /` and
//!   parentheses, e.g. `w - 2*L0` or `1/3*w1 + a2 - 2*L0 + d`. A product
//!   may omit the `*` (`2L0`). The symbols
//!   `ω ω₁… α₁… Λ₀ δ ρ −` are accepted as synonyms.

use std::str::FromStr;

use critlink_core::affine::AffineWeight;
use critlink_core::cartan::{FiniteRootSystem, FiniteWeight};
use critlink_core::Q;
use serde_json::{json, Value};

pub fn format_q(x: &Q) -> String {
    x.to_string()
}

pub fn parse_q(s: &str) -> Result<Q, String> {
    Q::from_str(s.trim()).map_err(|_| format!("not a rational number: {s:?}"))
}

pub fn weight_to_json(w: &AffineWeight) -> Value {
    json!({
        "finite": w.finite.coords().iter().map(format_q).collect::<Vec<_>>(),
        "level": format_q(&w.level),
        "delta": format_q(&w.delta),
    })
}

fn json_q(v: &Value, field: &str) -> Result<Q, String> {
    match v {
        Value::String(s) => parse_q(s),
        Value::Number(n) if n.is_i64() => Ok(Q::from_integer(n.as_i64().unwrap().into())),
        _ => Err(format!("{field}: expected a rational string or an integer")),
    }
}

pub fn weight_from_json(rs: &FiniteRootSystem, v: &Value) -> Result<AffineWeight, String> {
    let obj = v.as_object().ok_or("weight JSON must be an object")?;
    let finite = obj
        .get("finite")
        .and_then(Value::as_array)
        .ok_or("weight JSON needs a \"finite\" array")?
        .iter()
        .map(|x| json_q(x, "finite"))
        .collect::<Result<Vec<_>, _>>()?;
    if finite.len() != rs.rank() {
        return Err(format!(
            "finite part has {} coordinates, {} needs {}",
            finite.len(),
            rs.cartan_type(),
            rs.rank()
        ));
    }
    let level = obj.get("level").map_or(Ok(Q::from_integer(0.into())), |x| json_q(x, "level"))?;
    let delta = obj.get("delta").map_or(Ok(Q::from_integer(0.into())), |x| json_q(x, "delta"))?;
    Ok(AffineWeight::new(FiniteWeight(finite), level, delta))
}

/// Parses either input form.
pub fn parse_weight(rs: &FiniteRootSystem, input: &str) -> Result<AffineWeight, String> {
    let t = input.trim();
    if t.starts_with('{') {
        let v: Value = serde_json::from_str(t).map_err(|e| format!("malformed weight JSON: {e}"))?;
        weight_from_json(rs, &v)
    } else {
        Parser::new(rs, t)?.parse()
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(Q),
    Ident(String),
    Op(char),
}

fn normalize(s: &str) -> String {
    s.replace('−', "-")
        .replace('·', "*")
        .replace('ω', "w")
        .replace('α', "a")
        .replace('Λ', "L")
        .replace('δ', "d")
        .replace('ρ', "rho")
        .chars()
        .map(|c| match c {
            '₀'..='₉' => char::from_digit(c as u32 - '₀' as u32, 10).unwrap(),
            c => c,
        })
        .collect()
}

fn tokenize(s: &str) -> Result<Vec<Tok>, String> {
    let chars: Vec<char> = normalize(s).chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            out.push(Tok::Num(parse_q(&s)?));
        } else if c.is_ascii_alphabetic() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_alphanumeric() {
                i += 1;
            }
            out.push(Tok::Ident(chars[start..i].iter().collect()));
        } else if "+-*/()".contains(c) {
            out.push(Tok::Op(c));
            i += 1;
        } else {
            return Err(format!("unexpected character {c:?} in weight"));
        }
    }
    Ok(out)
}

/// A value of the shorthand language: a scalar or a weight.
#[derive(Debug, Clone)]
enum Val {
    Scalar(Q),
    Weight(AffineWeight),
}

struct Parser<'a> {
    rs: &'a FiniteRootSystem,
    toks: Vec<Tok>,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(rs: &'a FiniteRootSystem, s: &str) -> Result<Self, String> {
        let toks = tokenize(s)?;
        if toks.is_empty() {
            return Err("empty weight".into());
        }
        Ok(Parser { rs, toks, pos: 0 })
    }

    fn parse(mut self) -> Result<AffineWeight, String> {
        let v = self.expr()?;
        if self.pos != self.toks.len() {
            return Err(format!("unexpected {:?} in weight", self.toks[self.pos]));
        }
        match v {
            Val::Weight(w) => Ok(w),
            Val::Scalar(s) if s == Q::from_integer(0.into()) => Ok(AffineWeight::zero(self.rs.rank())),
            Val::Scalar(_) => Err("a weight expression cannot be a bare number".into()),
        }
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Op(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Val, String> {
        let mut acc = self.term()?;
        loop {
            let negate = if self.eat('+') {
                false
            } else if self.eat('-') {
                true
            } else {
                return Ok(acc);
            };
            let rhs = self.term()?;
            acc = add(acc, rhs, negate)?;
        }
    }

    fn term(&mut self) -> Result<Val, String> {
        let mut acc = self.factor()?;
        loop {
            if self.eat('*') {
                let rhs = self.factor()?;
                acc = mul(acc, rhs)?;
            } else if self.eat('/') {
                let rhs = self.factor()?;
                acc = match rhs {
                    Val::Scalar(s) if s != Q::from_integer(0.into()) => {
                        mul(acc, Val::Scalar(Q::from_integer(1.into()) / s))?
                    }
                    Val::Scalar(_) => return Err("division by zero in weight".into()),
                    Val::Weight(_) => return Err("cannot divide by a weight".into()),
                };
            } else if matches!(self.peek(), Some(Tok::Num(_) | Tok::Ident(_)) | Some(Tok::Op('('))) {
                let rhs = self.factor()?;
                acc = mul(acc, rhs)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn factor(&mut self) -> Result<Val, String> {
        if self.eat('-') {
            return mul(Val::Scalar(Q::from_integer((-1).into())), self.factor()?);
        }
        if self.eat('(') {
            let v = self.expr()?;
            if !self.eat(')') {
                return Err("missing ')' in weight".into());
            }
            return Ok(v);
        }
        match self.toks.get(self.pos).cloned() {
            Some(Tok::Num(q)) => {
                self.pos += 1;
                Ok(Val::Scalar(q))
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                self.ident(&name).map(Val::Weight)
            }
            Some(t) => Err(format!("unexpected {t:?} in weight")),
            None => Err("weight expression ends too early".into()),
        }
    }

    fn ident(&self, name: &str) -> Result<AffineWeight, String> {
        let rs = self.rs;
        let r = rs.rank();
        let index = |prefix: &str| -> Option<usize> {
            let rest = name.strip_prefix(prefix)?;
            if rest.is_empty() && r == 1 && prefix == "w" {
                return Some(1);
            }
            rest.parse::<usize>().ok()
        };
        match name {
            "L0" => return Ok(AffineWeight::lambda0(r)),
            "d" => return Ok(AffineWeight::delta(r)),
            "rho" => return Ok(critlink_core::affine::rho(rs)),
            "a0" => {
                let theta = AffineWeight::from_finite(rs.highest_root().weight().clone());
                return Ok(&AffineWeight::delta(r) - &theta);
            }
            _ => {}
        }
        if let Some(i) = index("w") {
            if (1..=r).contains(&i) {
                return Ok(AffineWeight::from_finite(FiniteWeight::fundamental(r, i - 1)));
            }
        }
        if let Some(i) = index("a") {
            if (1..=r).contains(&i) {
                return Ok(AffineWeight::from_finite(rs.simple_root(i - 1).weight().clone()));
            }
        }
        Err(format!(
            "unknown symbol {name:?}; use w1..w{r}, a0..a{r}, L0, d, rho"
        ))
    }
}

fn add(a: Val, b: Val, negate: bool) -> Result<Val, String> {
    let b = if negate {
        mul(Val::Scalar(Q::from_integer((-1).into())), b)?
    } else {
        b
    };
    match (a, b) {
        (Val::Scalar(x), Val::Scalar(y)) => Ok(Val::Scalar(x + y)),
        (Val::Weight(x), Val::Weight(y)) => Ok(Val::Weight(&x + &y)),
        (Val::Weight(w), Val::Scalar(s)) | (Val::Scalar(s), Val::Weight(w))
            if s == Q::from_integer(0.into()) =>
        {
            Ok(Val::Weight(w))
        }
        _ => Err("cannot add a number to a weight".into()),
    }
}

fn mul(a: Val, b: Val) -> Result<Val, String> {
    match (a, b) {
        (Val::Scalar(x), Val::Scalar(y)) => Ok(Val::Scalar(x * y)),
        (Val::Scalar(s), Val::Weight(w)) | (Val::Weight(w), Val::Scalar(s)) => Ok(Val::Weight(w.scale(&s))),
        (Val::Weight(_), Val::Weight(_)) => Err("cannot multiply two weights".into()),
    }
}
