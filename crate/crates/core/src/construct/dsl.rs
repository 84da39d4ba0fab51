//! The group-expression language: `name`, `name(arg, ...)` with integer, string, action
//! and nested-expression arguments.

use std::fmt;

use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::perm::Permutation;

use super::actions;
use super::families::{self, BinaryKind};
use super::products;

/// Built-in actions accepted as the third argument of `semidirect`.
pub const ACTIONS: &[&str] = &["deleted_perm", "natural_sl24", "coordinate_perm", "dihedral_inv"];

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupExpr {
    /// A name with only integer arguments, e.g. `q8` or `milnor_Q(5,3,1)`.
    Atom { name: String, args: Vec<i64>, pos: usize },
    /// A constructor taking groups, actions or strings.
    Call { name: String, args: Vec<Arg>, pos: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Arg {
    Expr(GroupExpr),
    Int(i64, usize),
    Str(String, usize),
    Action(String, usize),
}

impl GroupExpr {
    pub fn name(&self) -> &str {
        match self {
            GroupExpr::Atom { name, .. } | GroupExpr::Call { name, .. } => name,
        }
    }

    pub fn pos(&self) -> usize {
        match self {
            GroupExpr::Atom { pos, .. } | GroupExpr::Call { pos, .. } => *pos,
        }
    }
}

impl fmt::Display for GroupExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupExpr::Atom { name, args, .. } => {
                write!(f, "{name}")?;
                if !args.is_empty() {
                    let a: Vec<String> = args.iter().map(i64::to_string).collect();
                    write!(f, "({})", a.join(", "))?;
                }
                Ok(())
            }
            GroupExpr::Call { name, args, .. } => {
                let a: Vec<String> = args.iter().map(Arg::to_string).collect();
                write!(f, "{name}({})", a.join(", "))
            }
        }
    }
}

impl fmt::Display for Arg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Arg::Expr(e) => write!(f, "{e}"),
            Arg::Int(v, _) => write!(f, "{v}"),
            Arg::Str(s, _) => write!(f, "\"{s}\""),
            Arg::Action(a, _) => write!(f, "{a}"),
        }
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.ws();
        self.src.get(self.pos).copied()
    }

    fn err<T>(&self, expected: &str) -> Result<T> {
        let found = match self.src.get(self.pos) {
            Some(&c) => format!("{:?}", c as char),
            None => "end of input".to_string(),
        };
        Err(Error::Parse {
            pos: self.pos,
            msg: format!("expected {expected}, found {found}"),
        })
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            self.err(&format!("{:?}", c as char))
        }
    }

    fn name(&mut self) -> Result<(String, usize)> {
        self.ws();
        let start = self.pos;
        match self.src.get(self.pos) {
            Some(c) if c.is_ascii_alphabetic() || *c == b'_' => {}
            _ => return self.err("a name"),
        }
        while self.pos < self.src.len()
            && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
        {
            self.pos += 1;
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
        Ok((s.to_string(), start))
    }

    fn expr(&mut self) -> Result<GroupExpr> {
        let (name, pos) = self.name()?;
        if self.peek() != Some(b'(') {
            return Ok(GroupExpr::Atom {
                name,
                args: vec![],
                pos,
            });
        }
        self.pos += 1;
        let mut args = vec![self.arg()?];
        while self.peek() == Some(b',') {
            self.pos += 1;
            args.push(self.arg()?);
        }
        self.expect(b')')?;
        if args.iter().all(|a| matches!(a, Arg::Int(..))) {
            let ints = args
                .iter()
                .map(|a| match a {
                    Arg::Int(v, _) => *v,
                    _ => unreachable!(),
                })
                .collect();
            return Ok(GroupExpr::Atom {
                name,
                args: ints,
                pos,
            });
        }
        Ok(GroupExpr::Call { name, args, pos })
    }

    fn arg(&mut self) -> Result<Arg> {
        match self.peek() {
            Some(c) if c.is_ascii_digit() || c == b'-' => {
                let start = self.pos;
                self.pos += 1;
                while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                let s = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
                s.parse().map(|v| Arg::Int(v, start)).map_err(|_| Error::Parse {
                    pos: start,
                    msg: format!("bad integer {s:?}"),
                })
            }
            Some(b'"') => {
                let start = self.pos;
                self.pos += 1;
                let body = self.pos;
                while self.pos < self.src.len() && self.src[self.pos] != b'"' {
                    self.pos += 1;
                }
                if self.pos >= self.src.len() {
                    self.pos = start;
                    return self.err("a closed string");
                }
                let s = std::str::from_utf8(&self.src[body..self.pos])
                    .map_err(|_| Error::Parse {
                        pos: body,
                        msg: "string is not UTF-8".into(),
                    })?
                    .to_string();
                self.pos += 1;
                Ok(Arg::Str(s, start))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let save = self.pos;
                let (name, pos) = self.name()?;
                if ACTIONS.contains(&name.as_str()) && self.peek() != Some(b'(') {
                    return Ok(Arg::Action(name, pos));
                }
                self.pos = save;
                Ok(Arg::Expr(self.expr()?))
            }
            _ => self.err("an integer, string, action or expression"),
        }
    }
}

pub fn parse(src: &str) -> Result<GroupExpr> {
    let mut p = Parser {
        src: src.as_bytes(),
        pos: 0,
    };
    let e = p.expr()?;
    if p.peek().is_some() {
        return p.err("end of input");
    }
    Ok(e)
}

fn sem<T>(pos: usize, msg: impl Into<String>) -> Result<T> {
    Err(Error::Semantic {
        pos,
        msg: msg.into(),
    })
}

/// Attaches a source position to errors coming out of constructors.
fn at<T>(pos: usize, r: Result<T>) -> Result<T> {
    r.map_err(|e| match e {
        Error::InvalidArgument(msg) => Error::Semantic { pos, msg },
        other => other,
    })
}

const MAX_PARAM: i64 = 10_000;

fn ints(name: &str, args: &[i64], arity: usize, pos: usize) -> Result<Vec<usize>> {
    if args.len() != arity {
        return sem(
            pos,
            format!("{name} takes {arity} integer argument(s), got {}", args.len()),
        );
    }
    args.iter()
        .map(|&v| {
            if (0..=MAX_PARAM).contains(&v) {
                Ok(v as usize)
            } else {
                sem(pos, format!("{name}: argument {v} out of range 0..={MAX_PARAM}"))
            }
        })
        .collect()
}

pub fn eval(e: &GroupExpr) -> Result<PermGroup> {
    match e {
        GroupExpr::Atom { name, args, pos } => eval_atom(name, args, *pos),
        GroupExpr::Call { name, args, pos } => eval_call(name, args, *pos),
    }
}

/// Parse and evaluate in one step.
pub fn build(src: &str) -> Result<PermGroup> {
    eval(&parse(src)?)
}

fn eval_atom(name: &str, args: &[i64], pos: usize) -> Result<PermGroup> {
    let r = match name {
        "cyclic" => families::cyclic(ints(name, args, 1, pos)?[0]),
        "dihedral" => families::dihedral_2n(ints(name, args, 1, pos)?[0]),
        "sym" | "alt" => {
            let n = ints(name, args, 1, pos)?[0];
            if n > 64 {
                return sem(pos, format!("{name}: degree {n} exceeds 64"));
            }
            if name == "sym" {
                families::sym(n)
            } else {
                families::alt(n)
            }
        }
        "q8" => {
            ints(name, args, 0, pos)?;
            families::q8()
        }
        "binary_dihedral" => families::binary_dihedral(ints(name, args, 1, pos)?[0]),
        "binary_tetrahedral" | "binary_octahedral" | "binary_icosahedral" => {
            ints(name, args, 0, pos)?;
            families::binary_polyhedral(match name {
                "binary_tetrahedral" => BinaryKind::Tetrahedral,
                "binary_octahedral" => BinaryKind::Octahedral,
                _ => BinaryKind::Icosahedral,
            })
        }
        "elem_ab" => {
            let v = ints(name, args, 2, pos)?;
            families::elem_ab(v[0], v[1])
        }
        "psl2" => families::psl2(ints(name, args, 1, pos)?[0]),
        "psl27_presented" => {
            ints(name, args, 0, pos)?;
            families::psl27_from_presentation()
        }
        "wreath_z2" => products::wreath_z2(ints(name, args, 1, pos)?[0]),
        "weyl_w" | "weyl_wtilde" | "weyl_w0" => {
            ints(name, args, 0, pos)?;
            let rep = match name {
                "weyl_w" => crate::orthomodels::build_w(),
                "weyl_wtilde" => crate::orthomodels::build_wtilde(),
                _ => crate::orthomodels::build_w0(),
            };
            Ok(rep.group().clone())
        }
        "simplex_s6" => {
            let twisted = match ints(name, args, args.len().min(1), pos)?.as_slice() {
                [] | [0] => false,
                [1] => true,
                _ => return sem(pos, "simplex_s6 takes an optional flag 0 or 1"),
            };
            Ok(crate::orthomodels::simplex_s6(twisted).group().clone())
        }
        "milnor_Q" => {
            let v = ints(name, args, 3, pos)?;
            products::milnor_q(v[0], v[1], v[2])
        }
        "question_group" => {
            let v = ints(name, args, 2, pos)?;
            products::question_group(v[0], v[1])
        }
        "product" | "semidirect" | "central_product" | "from_perms" => {
            return sem(pos, format!("{name} needs group or string arguments"))
        }
        _ => return sem(pos, format!("unknown group {name:?}")),
    };
    at(pos, r)
}

fn group_arg(a: &Arg) -> Result<PermGroup> {
    match a {
        Arg::Expr(e) => eval(e),
        Arg::Int(_, p) | Arg::Str(_, p) | Arg::Action(_, p) => sem(*p, "expected a group expression"),
    }
}

fn eval_call(name: &str, args: &[Arg], pos: usize) -> Result<PermGroup> {
    match name {
        "product" => {
            if args.len() < 2 {
                return sem(pos, "product takes at least two groups");
            }
            let mut g = group_arg(&args[0])?;
            for a in &args[1..] {
                g = products::direct_product(&g, &group_arg(a)?)?;
            }
            Ok(g)
        }
        "central_product" => {
            if args.len() != 2 {
                return sem(pos, "central_product takes two groups");
            }
            let a = group_arg(&args[0])?;
            let b = group_arg(&args[1])?;
            at(pos, products::central_product(&a, &b).map(|c| c.group))
        }
        "semidirect" => {
            let [n, h, Arg::Action(action, apos)] = args else {
                return sem(pos, "semidirect takes (group, group, action)");
            };
            let n = group_arg(n)?;
            let h = group_arg(h)?;
            let auts = at(*apos, actions::named_action(action, &n, &h))?;
            at(pos, products::semidirect_product(&n, &h, &auts))
        }
        "from_perms" => {
            let mut strs = Vec::new();
            for a in args {
                match a {
                    Arg::Str(s, p) => strs.push((s.clone(), *p)),
                    other => return sem(arg_pos(other), "from_perms takes cycle strings"),
                }
            }
            let degree = strs
                .iter()
                .map(|(s, p)| at(*p, max_point(s, *p)))
                .collect::<Result<Vec<_>>>()?
                .into_iter()
                .max()
                .unwrap_or(1)
                .max(1);
            let gens = strs
                .iter()
                .map(|(s, p)| {
                    Permutation::parse_cycles(s, Some(degree)).map_err(|e| Error::Semantic {
                        pos: *p,
                        msg: e.to_string(),
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            PermGroup::new(degree, gens)
        }
        _ => {
            if let Some(bad) = args.iter().find(|a| !matches!(a, Arg::Int(..))) {
                return sem(arg_pos(bad), format!("{name} takes only integer arguments"));
            }
            sem(pos, format!("unknown group {name:?}"))
        }
    }
}

fn arg_pos(a: &Arg) -> usize {
    match a {
        Arg::Expr(e) => e.pos(),
        Arg::Int(_, p) | Arg::Str(_, p) | Arg::Action(_, p) => *p,
    }
}

fn max_point(s: &str, pos: usize) -> Result<usize> {
    let mut m = 0;
    for tok in s.split(|c: char| !c.is_ascii_digit()).filter(|t| !t.is_empty()) {
        let v: usize = tok.parse().map_err(|_| Error::Semantic {
            pos,
            msg: format!("bad point {tok:?}"),
        })?;
        m = m.max(v);
    }
    Ok(m)
}
