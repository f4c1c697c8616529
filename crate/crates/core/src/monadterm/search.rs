//! Normalisation and bounded bidirectional search on 1-cell terms.

use std::collections::{HashMap, HashSet};
use std::hash::Hash;

use serde::{Deserialize, Serialize};

use super::rules::RuleSet;
use super::{canonical, find_blocks, show_word, splice, typecheck, Atom, Letter, MonadTermError, OneCellTerm};

pub const DEFAULT_DEPTH: usize = 16;

/// Terms may grow this many atoms past the larger endpoint during search.
const SLACK: usize = 6;

/// Search gives up after visiting this many states.
const STATE_BUDGET: usize = 400_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "outcome", rename_all = "kebab-case")]
pub enum Outcome {
    Proven { steps: usize },
    NotFound,
}

impl Outcome {
    pub fn is_proven(self) -> bool {
        matches!(self, Outcome::Proven { .. })
    }
}

/// Canonical terms reachable from `atoms` by one application of `from ->
/// to` anywhere. Matches are by generator, so a side made of units alone can
/// land in the wrong context; those results are dropped by typechecking.
pub fn rewrite_once(dom: &[Letter], atoms: &[Atom], from: &[Atom], to: &[Atom]) -> Vec<Vec<Atom>> {
    find_blocks(dom.len(), atoms, from)
        .into_iter()
        .map(|(seq, b, shift)| canonical(&splice(&seq, b, from.len(), to, shift)))
        .filter(|t| typecheck(dom, t).is_ok())
        .collect()
}

/// One-step neighbours of `atoms` under `rules`, in both directions when
/// `both_ways`.
pub fn neighbours(dom: &[Letter], atoms: &[Atom], rules: &RuleSet, both_ways: bool) -> Vec<Vec<Atom>> {
    let mut out = Vec::new();
    for r in &rules.rules {
        out.extend(rewrite_once(dom, atoms, &r.lhs, &r.rhs));
        if both_ways && !r.rhs.is_empty() {
            out.extend(rewrite_once(dom, atoms, &r.rhs, &r.lhs));
        }
    }
    out
}

/// Rewrites with the rules left to right until none applies, taking the
/// least result at each step. Terms built from μ, η and λ alone reach a
/// unique normal form.
pub fn normalize_boundary(t: &OneCellTerm, rules: &RuleSet) -> OneCellTerm {
    let mut atoms = canonical(&t.atoms);
    for _ in 0..10_000 {
        match neighbours(&t.dom, &atoms, rules, false).into_iter().min() {
            Some(next) => atoms = next,
            None => break,
        }
    }
    OneCellTerm {
        dom: t.dom.clone(),
        atoms,
    }
}

/// Bidirectional breadth-first search between two states. `expand` lists
/// the neighbours of a state; each counts as one step. `expand` need not be
/// symmetric, so a proof is a pair of chains meeting in a common state; every
/// such pair of total length at most `depth` is found unless the state budget
/// runs out first.
pub(crate) fn meet<S: Clone + Eq + Hash>(
    lhs: S,
    rhs: S,
    depth: usize,
    mut expand: impl FnMut(&S) -> Vec<S>,
) -> Outcome {
    if lhs == rhs {
        return Outcome::Proven { steps: 0 };
    }
    let mut seen = [
        HashMap::from([(lhs.clone(), 0usize)]),
        HashMap::from([(rhs.clone(), 0usize)]),
    ];
    let mut frontier = [vec![lhs], vec![rhs]];
    let mut radius = [0usize, 0usize];
    loop {
        // Balanced growth while the radii fit the bound, then each side alone
        // up to the bound so that lopsided meetings are not missed.
        let open = |k: usize| !frontier[k].is_empty() && radius[k] < depth;
        let side = match (open(0), open(1)) {
            (false, false) => break,
            (true, false) => 0,
            (false, true) => 1,
            _ if radius[0] + radius[1] >= depth => usize::from(radius[1] < radius[0]),
            _ => usize::from(frontier[1].len() < frontier[0].len()),
        };
        let mut next = Vec::new();
        let mut fresh = HashSet::new();
        for s in &frontier[side] {
            for n in expand(s) {
                if let Some(&d) = seen[1 - side].get(&n) {
                    if radius[side] + 1 + d <= depth {
                        return Outcome::Proven {
                            steps: radius[side] + 1 + d,
                        };
                    }
                }
                if !seen[side].contains_key(&n) && fresh.insert(n.clone()) {
                    next.push(n);
                }
            }
        }
        radius[side] += 1;
        for n in &next {
            seen[side].insert(n.clone(), radius[side]);
        }
        frontier[side] = next;
        if seen[0].len() + seen[1].len() > STATE_BUDGET {
            break;
        }
    }
    Outcome::NotFound
}

/// Searches for a chain of at most `depth` rule applications (in either
/// direction, exchange free) joining `lhs` and `rhs`.
pub fn check_equal_1cells(
    lhs: &OneCellTerm,
    rhs: &OneCellTerm,
    rules: &RuleSet,
    depth: usize,
) -> Result<Outcome, MonadTermError> {
    let (lc, rc) = (lhs.cod(), rhs.cod());
    if lhs.dom != rhs.dom || lc != rc {
        return Err(MonadTermError::BoundaryMismatch(format!(
            "{} -> {} versus {} -> {}",
            show_word(&lhs.dom),
            show_word(&lc),
            show_word(&rhs.dom),
            show_word(&rc)
        )));
    }
    let cap = lhs.atoms.len().max(rhs.atoms.len()) + SLACK;
    Ok(meet(canonical(&lhs.atoms), canonical(&rhs.atoms), depth, |s| {
        neighbours(&lhs.dom, s, rules, true)
            .into_iter()
            .filter(|t| t.len() <= cap)
            .collect()
    }))
}
