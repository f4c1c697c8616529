//! Text syntax for terms.
//!
//! ```text
//! term  := (cell WORD atom*) | (paste WORD slice+) | (id (cell WORD atom*))
//! slice := (slice atom*)
//! atom  := NAME@POS | NAME^-1@POS
//! ```
//!
//! `WORD` is a string over `T`, `S` ending in one of `A`, `B`, `C`. Names are
//! `mu_T eta_T mu_S eta_S lambda`, algebra actions `a_t a_s a_ts` (likewise
//! `b_*`, `c_*` for `B`, `C`), 1-cells `f g h k`, and 2-cells `sigma_x tau_x
//! zeta_x theta phi` for a 1-cell `x`. Only 2-cells take `^-1`.

use std::fmt;

use super::twocell::TwoCellTerm;
use super::{
    at, show_atom, show_word, Atom, Gen, Kind, Letter, MonadTermError, Obj, OneCell, OneCellTerm, TwoGen, Word,
};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Term {
    One(OneCellTerm),
    Two(TwoCellTerm),
}

fn err(msg: impl Into<String>) -> MonadTermError {
    MonadTermError::Parse(msg.into())
}

pub fn parse_word(s: &str) -> Result<Word, MonadTermError> {
    s.chars()
        .map(|c| match c {
            'T' => Ok(Letter::T),
            'S' => Ok(Letter::S),
            'A' => Ok(Letter::Obj(Obj::A)),
            'B' => Ok(Letter::Obj(Obj::B)),
            'C' => Ok(Letter::Obj(Obj::C)),
            _ => Err(err(format!("bad letter {c:?} in word {s:?}"))),
        })
        .collect()
}

fn cell_name(c: OneCell) -> &'static str {
    match c {
        OneCell::F => "f",
        OneCell::G => "g",
        OneCell::H => "h",
        OneCell::K => "k",
    }
}

pub fn gen_name(g: Gen) -> String {
    match g {
        Gen::MuT => "mu_T".into(),
        Gen::EtaT => "eta_T".into(),
        Gen::MuS => "mu_S".into(),
        Gen::EtaS => "eta_S".into(),
        Gen::Lambda => "lambda".into(),
        Gen::Alg(x, k) => {
            let k = match k {
                Kind::T => "t",
                Kind::S => "s",
                Kind::TS => "ts",
            };
            format!("{}_{k}", format!("{x:?}").to_lowercase())
        }
        Gen::Cell(c) => cell_name(c).into(),
        Gen::Hole(c, inv) => {
            let base = match c {
                TwoGen::Sigma(x) => format!("sigma_{}", cell_name(x)),
                TwoGen::Tau(x) => format!("tau_{}", cell_name(x)),
                TwoGen::Zeta(x) => format!("zeta_{}", cell_name(x)),
                TwoGen::Theta => "theta".into(),
                TwoGen::Phi => "phi".into(),
            };
            if inv {
                format!("{base}^-1")
            } else {
                base
            }
        }
        Gen::Box(i, o) => format!("box{i}_{o}"),
    }
}

fn parse_cell(s: &str) -> Option<OneCell> {
    Some(match s {
        "f" => OneCell::F,
        "g" => OneCell::G,
        "h" => OneCell::H,
        "k" => OneCell::K,
        _ => return None,
    })
}

fn parse_gen(name: &str) -> Result<Gen, MonadTermError> {
    let (name, inv) = match name.strip_suffix("^-1") {
        Some(n) => (n, true),
        None => (name, false),
    };
    let two = |c: TwoGen| Ok(Gen::Hole(c, inv));
    if let Some(c) = name.strip_prefix("sigma_").and_then(parse_cell) {
        return two(TwoGen::Sigma(c));
    }
    if let Some(c) = name.strip_prefix("tau_").and_then(parse_cell) {
        return two(TwoGen::Tau(c));
    }
    if let Some(c) = name.strip_prefix("zeta_").and_then(parse_cell) {
        return two(TwoGen::Zeta(c));
    }
    match name {
        "theta" => return two(TwoGen::Theta),
        "phi" => return two(TwoGen::Phi),
        _ => {}
    }
    if inv {
        return Err(err(format!("only 2-cells have inverses: {name}^-1")));
    }
    let g = match name {
        "mu_T" => Gen::MuT,
        "eta_T" => Gen::EtaT,
        "mu_S" => Gen::MuS,
        "eta_S" => Gen::EtaS,
        "lambda" => Gen::Lambda,
        _ => {
            if let Some(c) = parse_cell(name) {
                return Ok(Gen::Cell(c));
            }
            let (x, k) = name
                .split_once('_')
                .ok_or_else(|| err(format!("unknown generator {name:?}")))?;
            let x = match x {
                "a" => Obj::A,
                "b" => Obj::B,
                "c" => Obj::C,
                _ => return Err(err(format!("unknown generator {name:?}"))),
            };
            let k = match k {
                "t" => Kind::T,
                "s" => Kind::S,
                "ts" => Kind::TS,
                _ => return Err(err(format!("unknown generator {name:?}"))),
            };
            Gen::Alg(x, k)
        }
    };
    Ok(g)
}

pub fn parse_atom(tok: &str) -> Result<Atom, MonadTermError> {
    let (name, pos) = tok
        .rsplit_once('@')
        .ok_or_else(|| err(format!("atom {tok:?} lacks @position")))?;
    let pos: u8 = pos.parse().map_err(|_| err(format!("bad position in {tok:?}")))?;
    Ok(at(parse_gen(name)?, pos))
}

#[derive(Debug)]
enum Sexp {
    Atom(String),
    List(Vec<Sexp>),
}

fn tokens(s: &str) -> Vec<String> {
    s.replace('(', " ( ")
        .replace(')', " ) ")
        .split_whitespace()
        .map(str::to_string)
        .collect()
}

fn read(toks: &[String], i: &mut usize) -> Result<Sexp, MonadTermError> {
    let t = toks.get(*i).ok_or_else(|| err("unexpected end of input"))?;
    *i += 1;
    match t.as_str() {
        "(" => {
            let mut items = Vec::new();
            loop {
                match toks.get(*i).map(String::as_str) {
                    None => return Err(err("unclosed parenthesis")),
                    Some(")") => {
                        *i += 1;
                        return Ok(Sexp::List(items));
                    }
                    _ => items.push(read(toks, i)?),
                }
            }
        }
        ")" => Err(err("unexpected )")),
        _ => Ok(Sexp::Atom(t.clone())),
    }
}

fn head(items: &[Sexp]) -> Option<&str> {
    match items.first() {
        Some(Sexp::Atom(h)) => Some(h),
        _ => None,
    }
}

fn atoms_of(items: &[Sexp]) -> Result<Vec<Atom>, MonadTermError> {
    items
        .iter()
        .map(|x| match x {
            Sexp::Atom(t) => parse_atom(t),
            Sexp::List(_) => Err(err("expected an atom")),
        })
        .collect()
}

fn word_of(items: &[Sexp]) -> Result<Word, MonadTermError> {
    match items.get(1) {
        Some(Sexp::Atom(w)) => parse_word(w),
        _ => Err(err("expected a word after the head")),
    }
}

fn term_of(x: &Sexp) -> Result<Term, MonadTermError> {
    let Sexp::List(items) = x else {
        return Err(err("expected a parenthesised term"));
    };
    match head(items) {
        Some("cell") => Ok(Term::One(OneCellTerm::new(word_of(items)?, atoms_of(&items[2..])?)?)),
        Some("paste") => {
            let dom = word_of(items)?;
            let slices = items[2..]
                .iter()
                .map(|s| match s {
                    Sexp::List(sl) if head(sl) == Some("slice") => atoms_of(&sl[1..]),
                    _ => Err(err("expected (slice ...)")),
                })
                .collect::<Result<Vec<_>, _>>()?;
            Ok(Term::Two(TwoCellTerm::new(dom, slices)?))
        }
        Some("id") => match items.get(1).map(term_of) {
            Some(Ok(Term::One(c))) if items.len() == 2 => Ok(Term::Two(TwoCellTerm::identity(&c))),
            _ => Err(err("expected (id (cell ...))")),
        },
        _ => Err(err("expected cell, paste or id")),
    }
}

pub fn parse_term(s: &str) -> Result<Term, MonadTermError> {
    let toks = tokens(s);
    let mut i = 0;
    let x = read(&toks, &mut i)?;
    if i != toks.len() {
        return Err(err("trailing input after term"));
    }
    term_of(&x)
}

pub fn parse_one(s: &str) -> Result<OneCellTerm, MonadTermError> {
    match parse_term(s)? {
        Term::One(t) => Ok(t),
        Term::Two(_) => Err(err("expected a 1-cell term")),
    }
}

pub fn parse_two(s: &str) -> Result<TwoCellTerm, MonadTermError> {
    match parse_term(s)? {
        Term::Two(t) => Ok(t),
        Term::One(_) => Err(err("expected a 2-cell term")),
    }
}

impl fmt::Display for TwoCellTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.slices.is_empty() {
            return write!(f, "(id {})", self.src());
        }
        write!(f, "(paste {}", show_word(&self.dom))?;
        for s in &self.slices {
            write!(f, " (slice")?;
            for a in s {
                write!(f, " {}", show_atom(*a))?;
            }
            write!(f, ")")?;
        }
        write!(f, ")")
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::One(t) => t.fmt(f),
            Term::Two(t) => t.fmt(f),
        }
    }
}
