//! Polytope expressions: `perm:n | asso:n | anti:n | point:n | para:n | zono:<graph> | (A x B) | (A + B) | (A sh B)`.
//!
//! Graphs may also be written bare (`K4`, `E3`, `P5`, `K(2,3)`).

use std::fmt;

use defperm::geometry::SubmodularPolytope;
use defperm::graphs::Graph;
use defperm::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Op {
    Product,
    Sum,
    Shuffle,
}

impl Op {
    fn symbol(self) -> &'static str {
        match self {
            Op::Product => "x",
            Op::Sum => "+",
            Op::Shuffle => "sh",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PolytopeSpec {
    Perm(usize),
    Asso(usize),
    Anti(usize),
    Point(usize),
    Para(usize),
    Zono(Graph),
    Binary(Op, Box<PolytopeSpec>, Box<PolytopeSpec>),
}

impl PolytopeSpec {
    pub fn parse(text: &str) -> Result<PolytopeSpec> {
        let tokens = tokenize(text)?;
        let mut pos = 0;
        let spec = parse_chain(&tokens, &mut pos)?;
        if pos != tokens.len() {
            return Err(Error::Parse(format!("unexpected `{}`", tokens[pos])));
        }
        spec.check()?;
        Ok(spec)
    }

    /// Ambient dimension.
    pub fn n(&self) -> usize {
        match self {
            PolytopeSpec::Perm(n)
            | PolytopeSpec::Asso(n)
            | PolytopeSpec::Anti(n)
            | PolytopeSpec::Point(n)
            | PolytopeSpec::Para(n) => *n,
            PolytopeSpec::Zono(g) => g.n(),
            PolytopeSpec::Binary(Op::Sum, a, _) => a.n(),
            PolytopeSpec::Binary(_, a, b) => a.n() + b.n(),
        }
    }

    fn check(&self) -> Result<()> {
        if let PolytopeSpec::Binary(op, a, b) = self {
            a.check()?;
            b.check()?;
            if *op == Op::Sum && a.n() != b.n() {
                return Err(Error::DimensionMismatch(a.n(), b.n()));
            }
        }
        Ok(())
    }

    pub fn build(&self) -> Result<SubmodularPolytope> {
        Ok(match self {
            PolytopeSpec::Perm(n) => SubmodularPolytope::perm(*n),
            PolytopeSpec::Asso(n) => SubmodularPolytope::asso(*n),
            PolytopeSpec::Anti(n) => SubmodularPolytope::anti_asso(*n),
            PolytopeSpec::Point(n) => SubmodularPolytope::point(*n),
            PolytopeSpec::Para(n) => SubmodularPolytope::para(*n),
            PolytopeSpec::Zono(g) => SubmodularPolytope::zono(g),
            PolytopeSpec::Binary(op, a, b) => {
                let (a, b) = (a.build()?, b.build()?);
                match op {
                    Op::Product => a.product(&b),
                    Op::Sum => a.minkowski(&b)?,
                    Op::Shuffle => a.shuffle(&b),
                }
            }
        })
    }
}

impl fmt::Display for PolytopeSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PolytopeSpec::Perm(n) => write!(f, "perm:{n}"),
            PolytopeSpec::Asso(n) => write!(f, "asso:{n}"),
            PolytopeSpec::Anti(n) => write!(f, "anti:{n}"),
            PolytopeSpec::Point(n) => write!(f, "point:{n}"),
            PolytopeSpec::Para(n) => write!(f, "para:{n}"),
            PolytopeSpec::Zono(g) => write!(f, "zono:{g}"),
            PolytopeSpec::Binary(op, a, b) => write!(f, "({a} {} {b})", op.symbol()),
        }
    }
}

fn tokenize(text: &str) -> Result<Vec<String>> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c == '(' || c == ')' || c == '+' {
            out.push(c.to_string());
            i += 1;
        } else {
            // an atom may carry its own parentheses, as in `K(2,3)`
            let start = i;
            let mut depth = 0usize;
            while i < chars.len() {
                let c = chars[i];
                if c.is_whitespace() || (c == ')' && depth == 0) || (c == '+' && depth == 0) {
                    break;
                }
                if c == '(' {
                    depth += 1;
                } else if c == ')' {
                    depth -= 1;
                }
                i += 1;
            }
            if depth != 0 {
                return Err(Error::Parse("unbalanced parentheses".into()));
            }
            out.push(chars[start..i].iter().collect());
        }
    }
    if out.is_empty() {
        return Err(Error::Parse("empty polytope expression".into()));
    }
    Ok(out)
}

fn parse_chain(tokens: &[String], pos: &mut usize) -> Result<PolytopeSpec> {
    let mut left = parse_operand(tokens, pos)?;
    while let Some(t) = tokens.get(*pos) {
        let op = match t.as_str() {
            "x" => Op::Product,
            "+" => Op::Sum,
            "sh" => Op::Shuffle,
            _ => break,
        };
        *pos += 1;
        let right = parse_operand(tokens, pos)?;
        left = PolytopeSpec::Binary(op, Box::new(left), Box::new(right));
    }
    Ok(left)
}

fn parse_operand(tokens: &[String], pos: &mut usize) -> Result<PolytopeSpec> {
    let t = tokens.get(*pos).ok_or_else(|| Error::Parse("expression ends early".into()))?;
    *pos += 1;
    if t == "(" {
        let inner = parse_chain(tokens, pos)?;
        if tokens.get(*pos).map(String::as_str) != Some(")") {
            return Err(Error::Parse("missing `)`".into()));
        }
        *pos += 1;
        return Ok(inner);
    }
    parse_atom(t)
}

fn parse_atom(t: &str) -> Result<PolytopeSpec> {
    let size = |s: &str| s.parse::<usize>().map_err(|_| Error::Parse(format!("bad size in `{t}`")));
    if let Some((name, arg)) = t.split_once(':') {
        return match name {
            "perm" => Ok(PolytopeSpec::Perm(size(arg)?)),
            "asso" => Ok(PolytopeSpec::Asso(size(arg)?)),
            "anti" => Ok(PolytopeSpec::Anti(size(arg)?)),
            "point" => Ok(PolytopeSpec::Point(size(arg)?)),
            "para" => Ok(PolytopeSpec::Para(size(arg)?)),
            "zono" => Ok(PolytopeSpec::Zono(Graph::parse(arg)?)),
            _ if name.chars().all(|c| c.is_ascii_digit()) => Ok(PolytopeSpec::Zono(Graph::parse(t)?)),
            _ => Err(Error::Parse(format!("unknown builder `{name}`"))),
        };
    }
    if t.starts_with(['K', 'E', 'P']) {
        return Ok(PolytopeSpec::Zono(Graph::parse(t)?));
    }
    Err(Error::Parse(format!("cannot read `{t}`")))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_builders_and_operators() {
        let s = PolytopeSpec::parse("(perm:2 sh asso:3)").unwrap();
        assert_eq!(s.n(), 5);
        assert_eq!(s.to_string(), "(perm:2 sh asso:3)");
        let s = PolytopeSpec::parse("((K3 x zono:2:1-2) + perm:5)").unwrap();
        assert_eq!(s.n(), 5);
        assert_eq!(PolytopeSpec::parse("zono:K(2,3)").unwrap().n(), 5);
        assert_eq!(PolytopeSpec::parse("point:2 sh point:2").unwrap().n(), 4);
    }

    #[test]
    fn rejects_bad_input() {
        for bad in ["", "(perm:2", "perm:2)", "cube:3", "perm:x", "(perm:2 + perm:3)", "perm:2 sh"] {
            assert!(PolytopeSpec::parse(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn shuffle_matches_join_of_graphs() {
        // equal up to a translation, i.e. the difference of the z arrays is modular
        let a = PolytopeSpec::parse("(perm:2 sh point:3)").unwrap().build().unwrap();
        let b = PolytopeSpec::parse("zono:K(1,1,3)").unwrap().build().unwrap();
        let diff = |s: usize| a.z()[s].clone() - &b.z()[s];
        for s in 0..a.z().len() {
            let sum = (0..a.n()).filter(|i| s >> i & 1 == 1).fold(diff(0), |acc, i| acc + diff(1 << i));
            assert_eq!(diff(s), sum);
        }
    }
}
