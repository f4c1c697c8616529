//! String-diagram terms for two monads `T`, `S` with a distributive law
//! `λ : ST -> TS`, their algebras and weak maps, and a bounded prover.
//!
//! A 1-cell is a word such as `TSA`: letters applied outermost first, ending
//! in an object. A 1-cell term is a sequence of atoms in application order;
//! an atom at position `p` rewrites the letters starting at index `p`.
//! Atoms whose footprints are disjoint commute (exchange), so terms are
//! compared through [`canonical`], the least linearisation of the diagram.
//!
//! 2-cells are pastings: vertical lists of slices, each a 1-cell term
//! containing exactly one hole atom standing for a generator 2-cell.

pub mod model;
pub mod obligations;
pub mod rules;
pub mod search;
pub mod syntax;
pub mod twocell;

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MonadTermError {
    #[error("ill-typed term: {0}")]
    IllTyped(String),
    #[error("boundary mismatch: {0}")]
    BoundaryMismatch(String),
    #[error("parse error: {0}")]
    Parse(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Obj {
    A,
    B,
    C,
}

impl Obj {
    pub const ALL: [Obj; 3] = [Obj::A, Obj::B, Obj::C];

    pub fn index(self) -> usize {
        self as usize
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Letter {
    T,
    S,
    Obj(Obj),
}

pub type Word = Vec<Letter>;

/// Which action of an algebra: `TX -> X`, `SX -> X` or `TSX -> X`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Kind {
    T,
    S,
    TS,
}

/// The 1-cell generators `f, g : A -> B` and `h, k : B -> C`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum OneCell {
    F,
    G,
    H,
    K,
}

impl OneCell {
    pub fn dom(self) -> Obj {
        match self {
            OneCell::F | OneCell::G => Obj::A,
            OneCell::H | OneCell::K => Obj::B,
        }
    }

    pub fn cod(self) -> Obj {
        match self {
            OneCell::F | OneCell::G => Obj::B,
            OneCell::H | OneCell::K => Obj::C,
        }
    }
}

/// Generator 2-cells. For a 1-cell `x : X -> Y`:
/// `σ_x : y_s ∘ Sx ⟹ x ∘ x_s`, `τ_x : y_t ∘ Tx ⟹ x ∘ x_t` and
/// `ζ_x : y_ts ∘ TSx ⟹ x ∘ x_ts`; `θ : f ⟹ g` and `φ : h ⟹ k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum TwoGen {
    Sigma(OneCell),
    Tau(OneCell),
    Zeta(OneCell),
    Theta,
    Phi,
}

impl TwoGen {
    fn weak(self) -> Option<(Kind, OneCell)> {
        match self {
            TwoGen::Sigma(x) => Some((Kind::S, x)),
            TwoGen::Tau(x) => Some((Kind::T, x)),
            TwoGen::Zeta(x) => Some((Kind::TS, x)),
            TwoGen::Theta | TwoGen::Phi => None,
        }
    }

    /// Source 1-cell, as atoms on the generator's input word.
    pub fn dom_atoms(self) -> Vec<Atom> {
        match self.weak() {
            Some((kind, x)) => {
                let n = kind.letters().len() as u8;
                vec![at(Gen::Cell(x), n), at(Gen::Alg(x.cod(), kind), 0)]
            }
            None => vec![at(Gen::Cell(self.endpoints().0), 0)],
        }
    }

    /// Target 1-cell, as atoms on the generator's input word.
    pub fn cod_atoms(self) -> Vec<Atom> {
        match self.weak() {
            Some((kind, x)) => vec![at(Gen::Alg(x.dom(), kind), 0), at(Gen::Cell(x), 0)],
            None => vec![at(Gen::Cell(self.endpoints().1), 0)],
        }
    }

    fn endpoints(self) -> (OneCell, OneCell) {
        match self {
            TwoGen::Phi => (OneCell::H, OneCell::K),
            _ => (OneCell::F, OneCell::G),
        }
    }

    fn words(self) -> (Word, Word) {
        match self.weak() {
            Some((kind, x)) => {
                let mut w = kind.letters();
                w.push(Letter::Obj(x.dom()));
                (w, vec![Letter::Obj(x.cod())])
            }
            None => {
                let c = self.endpoints().0;
                (vec![Letter::Obj(c.dom())], vec![Letter::Obj(c.cod())])
            }
        }
    }
}

impl Kind {
    pub fn letters(self) -> Word {
        match self {
            Kind::T => vec![Letter::T],
            Kind::S => vec![Letter::S],
            Kind::TS => vec![Letter::T, Letter::S],
        }
    }
}

/// Atom generators. `Hole(c, true)` is the formal inverse of `c`. `Box` is
/// an opaque placeholder with the given input and output lengths, used when
/// matching 2-cell axioms in context.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Gen {
    MuT,
    EtaT,
    MuS,
    EtaS,
    Lambda,
    Alg(Obj, Kind),
    Cell(OneCell),
    Hole(TwoGen, bool),
    Box(u8, u8),
}

impl Gen {
    /// Input and output letter counts.
    pub fn arity(self) -> (usize, usize) {
        match self {
            Gen::MuT | Gen::MuS => (2, 1),
            Gen::EtaT | Gen::EtaS => (0, 1),
            Gen::Lambda => (2, 2),
            Gen::Alg(_, k) => (k.letters().len() + 1, 1),
            Gen::Cell(_) => (1, 1),
            Gen::Hole(c, _) => (c.words().0.len(), 1),
            Gen::Box(i, o) => (i as usize, o as usize),
        }
    }

    /// Input and output letters; `None` for boxes, which are typed by arity.
    pub fn boundary(self) -> Option<(Word, Word)> {
        use Letter::{S, T};
        Some(match self {
            Gen::MuT => (vec![T, T], vec![T]),
            Gen::EtaT => (vec![], vec![T]),
            Gen::MuS => (vec![S, S], vec![S]),
            Gen::EtaS => (vec![], vec![S]),
            Gen::Lambda => (vec![S, T], vec![T, S]),
            Gen::Alg(x, k) => {
                let mut w = k.letters();
                w.push(Letter::Obj(x));
                (w, vec![Letter::Obj(x)])
            }
            Gen::Cell(c) => (vec![Letter::Obj(c.dom())], vec![Letter::Obj(c.cod())]),
            Gen::Hole(c, _) => c.words(),
            Gen::Box(..) => return None,
        })
    }

    pub fn is_hole(self) -> bool {
        matches!(self, Gen::Hole(..))
    }
}

/// A generator whiskered by the first `pos` letters of the current word.
/// Field order makes the derived ordering compare positions first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Atom {
    pub pos: u8,
    pub gen: Gen,
}

pub fn at(gen: Gen, pos: u8) -> Atom {
    Atom { pos, gen }
}

/// `atoms` with every position raised by `by`.
pub fn shifted(atoms: &[Atom], by: u8) -> Vec<Atom> {
    atoms.iter().map(|a| at(a.gen, a.pos + by)).collect()
}

/// Applies `atoms` to `dom`, returning the final word.
pub fn typecheck(dom: &[Letter], atoms: &[Atom]) -> Result<Word, MonadTermError> {
    if !matches!(dom.last(), Some(Letter::Obj(_))) || dom[..dom.len() - 1].iter().any(|l| matches!(l, Letter::Obj(_))) {
        return Err(MonadTermError::IllTyped(format!(
            "word {} must end in exactly one object",
            show_word(dom)
        )));
    }
    let mut word = dom.to_vec();
    for (i, a) in atoms.iter().enumerate() {
        let p = a.pos as usize;
        let (n_in, n_out) = a.gen.arity();
        let fits = if n_in == 0 {
            p < word.len()
        } else {
            p + n_in <= word.len()
        };
        let bad = || {
            MonadTermError::IllTyped(format!(
                "atom {i} ({}) does not apply to {}",
                show_atom(*a),
                show_word(&word)
            ))
        };
        if !fits {
            return Err(bad());
        }
        match a.gen.boundary() {
            Some((input, output)) => {
                if word[p..p + n_in] != input[..] {
                    return Err(bad());
                }
                word.splice(p..p + n_in, output);
            }
            None => {
                if p + n_in != word.len() {
                    return Err(bad());
                }
                let obj = *word.last().expect("nonempty");
                let mut out = vec![Letter::T; n_out.saturating_sub(1)];
                out.push(obj);
                word.splice(p..p + n_in, out);
            }
        }
    }
    Ok(word)
}

/// A well-typed 1-cell term.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct OneCellTerm {
    pub dom: Word,
    pub atoms: Vec<Atom>,
}

impl OneCellTerm {
    pub fn new(dom: Word, atoms: Vec<Atom>) -> Result<Self, MonadTermError> {
        typecheck(&dom, &atoms)?;
        Ok(OneCellTerm { dom, atoms })
    }

    pub fn identity(dom: Word) -> Result<Self, MonadTermError> {
        OneCellTerm::new(dom, Vec::new())
    }

    pub fn cod(&self) -> Word {
        typecheck(&self.dom, &self.atoms).expect("checked at construction")
    }

    /// The same 1-cell in canonical atom order.
    pub fn canonical(&self) -> OneCellTerm {
        OneCellTerm {
            dom: self.dom.clone(),
            atoms: canonical(&self.atoms),
        }
    }
}

/// Whether `y`, applied right after `x`, may be applied right before it.
pub fn commutes(x: Atom, y: Atom) -> bool {
    let (_, xo) = x.gen.arity();
    let (yi, _) = y.gen.arity();
    let (p, q) = (x.pos as usize, y.pos as usize);
    q + yi <= p || q >= p + xo
}

/// For commuting `x` then `y`, the equal pair `y'` then `x'`.
pub fn swap(x: Atom, y: Atom) -> (Atom, Atom) {
    let (xi, xo) = x.gen.arity();
    let (yi, yo) = y.gen.arity();
    let (p, q) = (x.pos as usize, y.pos as usize);
    if q + yi <= p {
        (y, at(x.gen, (p + yo - yi) as u8))
    } else {
        (at(y.gen, (q - xo + xi) as u8), x)
    }
}

/// Transitive ancestor sets (bitmasks over atom indices) of the diagram.
/// Besides consuming another atom's letters, a unit depends on the atom
/// owning the gap it is inserted into: gaps strictly inside an output belong
/// to that atom and keep their owner while neighbouring letters are rewritten.
pub(crate) fn ancestors(dom_len: usize, atoms: &[Atom]) -> Vec<u64> {
    debug_assert!(atoms.len() <= 64);
    let mut producer: Vec<Option<usize>> = vec![None; dom_len];
    // gap[g] lies between letters g - 1 and g.
    let mut gap: Vec<Option<usize>> = vec![None; dom_len + 1];
    let mut anc = vec![0u64; atoms.len()];
    for (j, a) in atoms.iter().enumerate() {
        let p = a.pos as usize;
        let (n_in, n_out) = a.gen.arity();
        let preds: Vec<usize> = if n_in == 0 {
            gap[p].into_iter().collect()
        } else {
            producer[p..p + n_in]
                .iter()
                .chain(&gap[p + 1..p + n_in])
                .flatten()
                .copied()
                .collect()
        };
        for x in preds {
            anc[j] |= anc[x] | 1 << x;
        }
        producer.splice(p..p + n_in, std::iter::repeat_n(Some(j), n_out));
        if n_in == 0 {
            gap.insert(p, gap[p]);
        } else {
            gap.splice(p + 1..p + n_in, std::iter::repeat_n(Some(j), n_out - 1));
        }
    }
    anc
}

/// Reorders `atoms` by adjacent exchanges so that `rank` increases. The
/// ranking must be a linear extension of the diagram.
fn realize(atoms: &[Atom], rank: &[usize]) -> Vec<Atom> {
    let mut seq: Vec<(usize, Atom)> = rank.iter().copied().zip(atoms.iter().copied()).collect();
    let mut sorted = false;
    while !sorted {
        sorted = true;
        for k in 0..seq.len().saturating_sub(1) {
            if seq[k].0 > seq[k + 1].0 {
                debug_assert!(commutes(seq[k].1, seq[k + 1].1));
                let (y, x) = swap(seq[k].1, seq[k + 1].1);
                let (rx, ry) = (seq[k].0, seq[k + 1].0);
                seq[k] = (ry, y);
                seq[k + 1] = (rx, x);
                sorted = false;
            }
        }
    }
    seq.into_iter().map(|(_, a)| a).collect()
}

/// Brings the atoms at indices `picks` (increasing) together as one
/// contiguous block, keeping their order. Returns the reordered term and the
/// block's first index, or `None` if another atom is wedged between them.
pub(crate) fn gather(dom_len: usize, atoms: &[Atom], picks: &[usize]) -> Option<(Vec<Atom>, usize)> {
    let (first, last) = (picks[0], *picks.last()?);
    if last - first + 1 == picks.len() {
        return Some((atoms.to_vec(), first));
    }
    let anc = ancestors(dom_len, atoms);
    let mut before = Vec::new();
    let mut after = Vec::new();
    for m in first + 1..last {
        if picks.contains(&m) {
            continue;
        }
        let below = picks.iter().any(|&b| b < m && anc[m] >> b & 1 == 1);
        let above = picks.iter().any(|&b| b > m && anc[b] >> m & 1 == 1);
        match (below, above) {
            (true, true) => return None,
            (false, true) => before.push(m),
            _ => after.push(m),
        }
    }
    let order: Vec<usize> = (0..first)
        .chain(before.iter().copied())
        .chain(picks.iter().copied())
        .chain(after)
        .chain(last + 1..atoms.len())
        .collect();
    let mut rank = vec![0; atoms.len()];
    for (r, &i) in order.iter().enumerate() {
        rank[i] = r;
    }
    Some((realize(atoms, &rank), first + before.len()))
}

/// The least linearisation of the diagram: repeatedly emit, among atoms that
/// can be exchanged to the front, the one that is smallest there. Only two
/// units inserted into the same gap can tie; ties are settled by comparing
/// the canonical remainders, so the result is the lexicographic minimum over
/// all linearisations.
pub fn canonical(atoms: &[Atom]) -> Vec<Atom> {
    let mut rest = atoms.to_vec();
    let mut out = Vec::with_capacity(rest.len());
    while !rest.is_empty() {
        let mut best = rest[0];
        let mut tied = vec![0];
        for i in 1..rest.len() {
            let Some(a) = front_form(&rest, i) else { continue };
            if a < best {
                best = a;
                tied = vec![i];
            } else if a == best {
                tied.push(i);
            }
        }
        if tied.len() > 1 {
            let tail = tied
                .into_iter()
                .map(|i| canonical(&bring_to_front(&rest, i)[1..]))
                .min()
                .expect("nonempty");
            out.push(best);
            out.extend(tail);
            return out;
        }
        rest = bring_to_front(&rest, tied[0]);
        out.push(rest.remove(0));
    }
    out
}

/// The atom at index `i` as it would read after exchanging it to the front.
fn front_form(rest: &[Atom], i: usize) -> Option<Atom> {
    let mut a = rest[i];
    for j in (0..i).rev() {
        if !commutes(rest[j], a) {
            return None;
        }
        a = swap(rest[j], a).0;
    }
    Some(a)
}

fn bring_to_front(rest: &[Atom], i: usize) -> Vec<Atom> {
    let mut rest = rest.to_vec();
    for j in (0..i).rev() {
        let (y, x) = swap(rest[j], rest[j + 1]);
        rest[j] = y;
        rest[j + 1] = x;
    }
    rest
}

/// Every way to find `pattern` (positions relative to a common shift) as a
/// block of `atoms`: the reordered term, block start and shift.
pub(crate) fn find_blocks(dom_len: usize, atoms: &[Atom], pattern: &[Atom]) -> Vec<(Vec<Atom>, usize, u8)> {
    let mut found = Vec::new();
    if pattern.is_empty() {
        return found;
    }
    let mut picks = Vec::with_capacity(pattern.len());
    pick(atoms, pattern, 0, &mut picks, &mut |picks| {
        let shift = atoms[picks[0]].pos as i32 - pattern[0].pos as i32;
        if shift < 0 {
            return;
        }
        if let Some((seq, b)) = gather(dom_len, atoms, picks) {
            let ok = pattern
                .iter()
                .enumerate()
                .all(|(k, p)| seq[b + k].pos as i32 == p.pos as i32 + shift);
            if ok {
                found.push((seq, b, shift as u8));
            }
        }
    });
    found
}

fn pick(atoms: &[Atom], pattern: &[Atom], from: usize, picks: &mut Vec<usize>, visit: &mut dyn FnMut(&[usize])) {
    let k = picks.len();
    if k == pattern.len() {
        visit(picks);
        return;
    }
    for i in from..atoms.len() {
        if atoms[i].gen == pattern[k].gen {
            picks.push(i);
            pick(atoms, pattern, i + 1, picks, visit);
            picks.pop();
        }
    }
}

/// Replaces the block `seq[b..b + len]` by `with` shifted by `shift`.
pub(crate) fn splice(seq: &[Atom], b: usize, len: usize, with: &[Atom], shift: u8) -> Vec<Atom> {
    let mut out = seq[..b].to_vec();
    out.extend(shifted(with, shift));
    out.extend_from_slice(&seq[b + len..]);
    out
}

pub fn show_word(w: &[Letter]) -> String {
    w.iter()
        .map(|l| match l {
            Letter::T => "T".to_string(),
            Letter::S => "S".to_string(),
            Letter::Obj(o) => format!("{o:?}"),
        })
        .collect()
}

pub fn show_atom(a: Atom) -> String {
    format!("{}@{}", syntax::gen_name(a.gen), a.pos)
}

impl fmt::Display for OneCellTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(cell {}", show_word(&self.dom))?;
        for a in &self.atoms {
            write!(f, " {}", show_atom(*a))?;
        }
        write!(f, ")")
    }
}
