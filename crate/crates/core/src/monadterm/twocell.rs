//! Pastings of generator 2-cells and the bounded 2-cell prover.
//!
//! A slice is a 1-cell term with exactly one hole atom. Its source replaces
//! the hole by the generator's source 1-cell and its target by the target
//! 1-cell. Consecutive slices compose when the target of one equals the
//! source of the next as 1-cells.

use serde::{Deserialize, Serialize};

use super::rules::RuleSet;
use super::search::{check_equal_1cells, meet, neighbours, Outcome, DEFAULT_DEPTH};
use super::{
    at, canonical, find_blocks, shifted, show_word, splice, typecheck, Atom, Gen, Kind, Letter, MonadTermError,
    OneCellTerm, Word,
};

/// Slices may grow this many atoms past the longest input slice.
const SLACK: usize = 4;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TwoCellTerm {
    pub dom: Word,
    /// Source 1-cell; determines the boundary of an empty pasting.
    pub source: Vec<Atom>,
    pub slices: Vec<Vec<Atom>>,
}

fn hole_index(slice: &[Atom]) -> Option<usize> {
    let mut holes = slice.iter().enumerate().filter(|(_, a)| a.gen.is_hole());
    match (holes.next(), holes.next()) {
        (Some((i, _)), None) => Some(i),
        _ => None,
    }
}

/// The generator's source (or target, if `cod`) atoms at the hole's place.
fn hole_side(hole: Atom, cod: bool) -> Vec<Atom> {
    let Gen::Hole(c, inv) = hole.gen else {
        unreachable!("not a hole")
    };
    let side = if cod != inv { c.cod_atoms() } else { c.dom_atoms() };
    shifted(&side, hole.pos)
}

/// Replaces the hole at index `i` by its source or target.
fn expand(slice: &[Atom], i: usize, cod: bool) -> Vec<Atom> {
    let mut out = slice[..i].to_vec();
    out.extend(hole_side(slice[i], cod));
    out.extend_from_slice(&slice[i + 1..]);
    out
}

fn expand_hole(slice: &[Atom], cod: bool) -> Vec<Atom> {
    expand(slice, hole_index(slice).expect("slice has one hole"), cod)
}

/// How an object's T- and S-actions are written: as primitives `x_t`, `x_s`
/// or through `x_ts` and the units.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Presentation {
    Pair,
    Ts,
}

/// The action `kind` of `x` on the word `kind · x`.
pub fn action(x: super::Obj, kind: Kind, p: Presentation) -> Vec<Atom> {
    match (p, kind) {
        (Presentation::Ts, Kind::T) => vec![at(Gen::EtaS, 1), at(Gen::Alg(x, Kind::TS), 0)],
        (Presentation::Ts, Kind::S) => vec![at(Gen::EtaT, 0), at(Gen::Alg(x, Kind::TS), 0)],
        (Presentation::Pair, Kind::TS) => vec![at(Gen::Alg(x, Kind::S), 1), at(Gen::Alg(x, Kind::T), 0)],
        _ => vec![at(Gen::Alg(x, kind), 0)],
    }
}

impl TwoCellTerm {
    pub fn new(dom: Word, slices: Vec<Vec<Atom>>) -> Result<Self, MonadTermError> {
        let first = slices
            .first()
            .ok_or_else(|| MonadTermError::IllTyped("empty pasting needs a source".into()))?;
        let mut cod: Option<Word> = None;
        for (k, s) in slices.iter().enumerate() {
            if hole_index(s).is_none() {
                return Err(MonadTermError::IllTyped(format!(
                    "slice {k} must contain exactly one 2-cell"
                )));
            }
            let w = typecheck(&dom, s)?;
            if cod.as_ref().is_some_and(|c| *c != w) {
                return Err(MonadTermError::IllTyped(format!("slice {k} ends in {}", show_word(&w))));
            }
            cod = Some(w);
        }
        let source = expand_hole(first, false);
        Ok(TwoCellTerm { dom, source, slices })
    }

    pub fn identity(source: &OneCellTerm) -> Self {
        TwoCellTerm {
            dom: source.dom.clone(),
            source: source.atoms.clone(),
            slices: Vec::new(),
        }
    }

    pub fn src(&self) -> OneCellTerm {
        OneCellTerm {
            dom: self.dom.clone(),
            atoms: self.source.clone(),
        }
    }

    pub fn tgt(&self) -> OneCellTerm {
        match self.slices.last() {
            Some(s) => OneCellTerm {
                dom: self.dom.clone(),
                atoms: expand_hole(s, true),
            },
            None => self.src(),
        }
    }

    /// `pre`, then this pasting whiskered by `shift` letters, then `post`,
    /// on the new source word `dom`.
    pub fn whisker(&self, dom: Word, pre: &[Atom], shift: u8, post: &[Atom]) -> Result<Self, MonadTermError> {
        let wrap = |s: &[Atom]| -> Vec<Atom> {
            let mut out = pre.to_vec();
            out.extend(shifted(s, shift));
            out.extend_from_slice(post);
            out
        };
        let source = wrap(&self.source);
        typecheck(&dom, &source)?;
        let slices: Vec<Vec<Atom>> = self.slices.iter().map(|s| wrap(s)).collect();
        for s in &slices {
            typecheck(&dom, s)?;
        }
        Ok(TwoCellTerm { dom, source, slices })
    }

    /// Vertical composite: `self` first.
    pub fn then(&self, other: &TwoCellTerm) -> Result<Self, MonadTermError> {
        if self.dom != other.dom {
            return Err(MonadTermError::BoundaryMismatch(
                "pastings start from different words".into(),
            ));
        }
        let mut slices = self.slices.clone();
        slices.extend(other.slices.iter().cloned());
        Ok(TwoCellTerm {
            dom: self.dom.clone(),
            source: self.source.clone(),
            slices,
        })
    }

    /// Checks that each slice's target equals the next slice's source.
    pub fn check_composable(&self, rules: &RuleSet, depth: usize) -> Result<(), MonadTermError> {
        for (k, pair) in self.slices.windows(2).enumerate() {
            let a = OneCellTerm {
                dom: self.dom.clone(),
                atoms: expand_hole(&pair[0], true),
            };
            let b = OneCellTerm {
                dom: self.dom.clone(),
                atoms: expand_hole(&pair[1], false),
            };
            if !check_equal_1cells(&a, &b, rules, depth)?.is_proven() {
                return Err(MonadTermError::IllTyped(format!(
                    "target of slice {k} ({a}) is not shown equal to the source of slice {} ({b})",
                    k + 1
                )));
            }
        }
        Ok(())
    }
}

type State = Vec<Vec<Atom>>;

/// Rebuilds the two slices of an interchange from a term with both holes:
/// `first` is applied first in the result.
fn interchange_from(d: &[Atom], first: usize, second: usize) -> (Vec<Atom>, Vec<Atom>) {
    // Each expansion removes one hole; indices of the other shift only when
    // it lies after the expanded one, which `expand` handles by construction.
    (canonical(&expand(d, second, false)), canonical(&expand(d, first, true)))
}

fn holes(d: &[Atom]) -> Vec<usize> {
    d.iter()
        .enumerate()
        .filter(|(_, a)| a.gen.is_hole())
        .map(|(i, _)| i)
        .collect()
}

/// Both orders of the slices `p1` then `p2` when their 2-cells are
/// independent.
fn interchanges(n: usize, p1: &[Atom], p2: &[Atom]) -> Vec<(Vec<Atom>, Vec<Atom>)> {
    let mut out = Vec::new();
    let h1 = p1[hole_index(p1).expect("one hole")];
    let h2 = p2[hole_index(p2).expect("one hole")];
    // Find h1's target inside p2 and put h1 back there.
    let cod1 = hole_side(at(h1.gen, 0), true);
    for (seq, b, shift) in find_blocks(n, p2, &cod1) {
        let d = splice(&seq, b, cod1.len(), &[at(h1.gen, 0)], shift);
        let other = *holes(&d).iter().find(|&&i| i != b).expect("two holes");
        if canonical(&expand(&d, other, false)) == p1 {
            out.push(interchange_from(&d, other, b));
        }
    }
    // Find h2's source inside p1 and put h2 there.
    let dom2 = hole_side(at(h2.gen, 0), false);
    for (seq, b, shift) in find_blocks(n, p1, &dom2) {
        let d = splice(&seq, b, dom2.len(), &[at(h2.gen, 0)], shift);
        let other = *holes(&d).iter().find(|&&i| i != b).expect("two holes");
        if canonical(&expand(&d, other, true)) == p2 {
            out.push(interchange_from(&d, b, other));
        }
    }
    out
}

/// Applications of one side of an axiom to consecutive slices from `k`.
fn axiom_instances(
    dom: &[Letter],
    state: &State,
    k: usize,
    from: &[Vec<Atom>],
    to: &[Vec<Atom>],
    boxed: Gen,
) -> Vec<State> {
    let mut out = Vec::new();
    if from.is_empty() || k + from.len() > state.len() {
        return out;
    }
    let context =
        |seq: &[Atom], b: usize, len: usize, shift: u8| canonical(&splice(seq, b, len, &[at(boxed, 0)], shift));
    for (seq, b, shift) in find_blocks(dom.len(), &state[k], &from[0]) {
        let ctx = context(&seq, b, from[0].len(), shift);
        let consistent = from.iter().enumerate().skip(1).all(|(j, pat)| {
            find_blocks(dom.len(), &state[k + j], pat)
                .into_iter()
                .any(|(s, bj, sh)| sh == shift && context(&s, bj, pat.len(), sh) == ctx)
        });
        if !consistent {
            continue;
        }
        let i = ctx.iter().position(|a| a.gen == boxed).expect("context holds the box");
        let new: State = to.iter().map(|sl| canonical(&splice(&ctx, i, 1, sl, shift))).collect();
        if new.iter().any(|sl| typecheck(dom, sl).is_err()) {
            continue;
        }
        let mut next: State = state[..k].to_vec();
        next.extend(new);
        next.extend_from_slice(&state[k + from.len()..]);
        out.push(next);
    }
    out
}

fn moves(dom: &[Letter], state: &State, rules: &RuleSet, slice_cap: usize, count_cap: usize) -> Vec<State> {
    let mut out = Vec::new();
    for (k, slice) in state.iter().enumerate() {
        for s in neighbours(dom, slice, rules, true) {
            if s.len() <= slice_cap {
                let mut next = state.clone();
                next[k] = s;
                out.push(next);
            }
        }
    }
    for k in 0..state.len().saturating_sub(1) {
        let (p1, p2) = (&state[k], &state[k + 1]);
        let i = hole_index(p1).expect("one hole");
        let mut flipped = p1.clone();
        if let Gen::Hole(c, inv) = flipped[i].gen {
            flipped[i].gen = Gen::Hole(c, !inv);
        }
        if canonical(&flipped) == *p2 {
            let mut next = state[..k].to_vec();
            next.extend_from_slice(&state[k + 2..]);
            out.push(next);
        }
        for (a, b) in interchanges(dom.len(), p1, p2) {
            let mut next = state.clone();
            next[k] = a;
            next[k + 1] = b;
            out.push(next);
        }
    }
    for ax in &rules.axioms {
        let boxed = Gen::Box(ax.in_len, ax.out_len);
        for k in 0..state.len() {
            for (from, to) in [(&ax.lhs, &ax.rhs), (&ax.rhs, &ax.lhs)] {
                for next in axiom_instances(dom, state, k, from, to, boxed) {
                    if next.len() <= count_cap {
                        out.push(next);
                    }
                }
            }
        }
    }
    out
}

/// Searches for a chain of at most `depth` moves joining two pastings.
/// Moves are one axiom application, one interchange of adjacent slices, one
/// cancellation of a 2-cell against its inverse, or one 1-cell rule inside a
/// slice; exchange of 1-cell atoms is free.
pub fn check_equal_2cells(
    lhs: &TwoCellTerm,
    rhs: &TwoCellTerm,
    rules: &RuleSet,
    depth: usize,
) -> Result<Outcome, MonadTermError> {
    if lhs.dom != rhs.dom {
        return Err(MonadTermError::BoundaryMismatch(format!(
            "pastings start from {} and {}",
            show_word(&lhs.dom),
            show_word(&rhs.dom)
        )));
    }
    // Well-typedness is not part of the search budget.
    let typing = depth.max(DEFAULT_DEPTH);
    for (which, a, b) in [("sources", lhs.src(), rhs.src()), ("targets", lhs.tgt(), rhs.tgt())] {
        if a.cod() != b.cod() || !check_equal_1cells(&a, &b, rules, typing)?.is_proven() {
            return Err(MonadTermError::BoundaryMismatch(format!(
                "{which} {a} and {b} are not shown equal"
            )));
        }
    }
    lhs.check_composable(rules, typing)?;
    rhs.check_composable(rules, typing)?;
    let canon = |t: &TwoCellTerm| -> State { t.slices.iter().map(|s| canonical(s)).collect() };
    let (l, r) = (canon(lhs), canon(rhs));
    let slice_cap = l.iter().chain(&r).map(Vec::len).max().unwrap_or(0) + SLACK;
    let count_cap = l.len().max(r.len()) + 2;
    Ok(meet(l, r, depth, |s| moves(&lhs.dom, s, rules, slice_cap, count_cap)))
}

/// `σ := ζ ∘ η^T S` and `τ := ζ ∘ T η^S` from a pasting `ζ` on `TSX`.
pub fn derive_sigma_tau(zeta: &TwoCellTerm) -> Result<(TwoCellTerm, TwoCellTerm), MonadTermError> {
    let x = match zeta.dom[..] {
        [Letter::T, Letter::S, Letter::Obj(x)] => x,
        _ => {
            return Err(MonadTermError::IllTyped(format!(
                "ζ must start from TSX, not {}",
                show_word(&zeta.dom)
            )))
        }
    };
    let sigma = zeta.whisker(vec![Letter::S, Letter::Obj(x)], &[at(Gen::EtaT, 0)], 0, &[])?;
    let tau = zeta.whisker(vec![Letter::T, Letter::Obj(x)], &[at(Gen::EtaS, 1)], 0, &[])?;
    Ok((sigma, tau))
}

/// `ζ := τ ∘ Tσ`: `Tσ` followed by `y_t`, then `τ` after `T x_s`, with the
/// actions written in presentation `p`.
pub fn derive_zeta(sigma: &TwoCellTerm, tau: &TwoCellTerm, p: Presentation) -> Result<TwoCellTerm, MonadTermError> {
    let cod = sigma.tgt().cod();
    let (x, y) = match (&sigma.dom[..], &tau.dom[..], &cod[..]) {
        ([Letter::S, Letter::Obj(x)], [Letter::T, Letter::Obj(x2)], [Letter::Obj(y)]) if x == x2 => (*x, *y),
        _ => return Err(MonadTermError::IllTyped("σ must start from SX and τ from TX".into())),
    };
    let dom = vec![Letter::T, Letter::S, Letter::Obj(x)];
    let upper = sigma.whisker(dom.clone(), &[], 1, &action(y, Kind::T, p))?;
    let lower = tau.whisker(dom, &shifted(&action(x, Kind::S, p), 1), 0, &[])?;
    upper.then(&lower)
}
