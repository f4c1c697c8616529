//! Rewrite rules on 1-cells and axioms on 2-cells.
//!
//! Positions in a rule are relative to a shift `p`; a rule applies to any
//! block of a term that equals its left side whiskered by `p` letters.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::{at, Atom, Gen, Kind, MonadTermError, Obj, OneCell, TwoGen};

/// An oriented equation between 1-cell terms. The prover uses it both ways,
/// except that an empty side is never matched.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rule {
    pub name: String,
    pub lhs: Vec<Atom>,
    pub rhs: Vec<Atom>,
}

/// An equation between pastings whose slices all run from a word of length
/// `in_len` to one of length `out_len`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoAxiom {
    pub name: String,
    pub in_len: u8,
    pub out_len: u8,
    pub lhs: Vec<Vec<Atom>>,
    pub rhs: Vec<Vec<Atom>>,
}

/// Assumable hypotheses.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Hyp {
    /// `x_ts` is a TS-algebra.
    Ts(Obj),
    /// `x_t`, `x_s` are a T-algebra and an S-algebra satisfying the
    /// interaction axiom.
    Pair(Obj),
    /// `ζ_x` makes `x` a weak map of TS-algebras.
    WeakTs(OneCell),
    /// `σ_x`, `τ_x` make `x` a weak S-map and a weak T-map satisfying the
    /// interaction axiom.
    WeakPair(OneCell),
    /// `θ : f ⟹ g` is a transformation of S-algebras and of T-algebras.
    Cylinder,
}

impl fmt::Display for Hyp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cell = |c: &OneCell| format!("{c:?}").to_lowercase();
        match self {
            Hyp::Ts(o) => write!(f, "ts:{o:?}"),
            Hyp::Pair(o) => write!(f, "pair:{o:?}"),
            Hyp::WeakTs(c) => write!(f, "weak-ts:{}", cell(c)),
            Hyp::WeakPair(c) => write!(f, "weak-pair:{}", cell(c)),
            Hyp::Cylinder => write!(f, "cylinder:theta"),
        }
    }
}

impl std::str::FromStr for Hyp {
    type Err = MonadTermError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || MonadTermError::Parse(format!("unknown hypothesis {s:?}"));
        let (kind, arg) = s.split_once(':').ok_or_else(bad)?;
        let obj = || match arg {
            "A" => Ok(Obj::A),
            "B" => Ok(Obj::B),
            "C" => Ok(Obj::C),
            _ => Err(bad()),
        };
        let cell = || match arg {
            "f" => Ok(OneCell::F),
            "g" => Ok(OneCell::G),
            "h" => Ok(OneCell::H),
            "k" => Ok(OneCell::K),
            _ => Err(bad()),
        };
        match kind {
            "ts" => Ok(Hyp::Ts(obj()?)),
            "pair" => Ok(Hyp::Pair(obj()?)),
            "weak-ts" => Ok(Hyp::WeakTs(cell()?)),
            "weak-pair" => Ok(Hyp::WeakPair(cell()?)),
            "cylinder" if arg == "theta" => Ok(Hyp::Cylinder),
            _ => Err(bad()),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RuleSet {
    pub rules: Vec<Rule>,
    pub axioms: Vec<TwoAxiom>,
}

fn rule(name: impl Into<String>, lhs: Vec<Atom>, rhs: Vec<Atom>) -> Rule {
    Rule {
        name: name.into(),
        lhs,
        rhs,
    }
}

fn alg(x: Obj, k: Kind) -> Gen {
    Gen::Alg(x, k)
}

fn hole(c: TwoGen) -> Gen {
    Gen::Hole(c, false)
}

impl RuleSet {
    /// Monad laws for `T` and `S` and Beck's four diagrams for `λ`.
    pub fn base() -> Self {
        use Gen::*;
        let mut rules = Vec::new();
        for (m, mu, eta) in [("T", MuT, EtaT), ("S", MuS, EtaS)] {
            rules.push(rule(format!("{m} left unit"), vec![at(eta, 0), at(mu, 0)], vec![]));
            rules.push(rule(format!("{m} right unit"), vec![at(eta, 1), at(mu, 0)], vec![]));
            rules.push(rule(
                format!("{m} associativity"),
                vec![at(mu, 1), at(mu, 0)],
                vec![at(mu, 0), at(mu, 0)],
            ));
        }
        rules.push(rule("beck eta-S", vec![at(EtaS, 0), at(Lambda, 0)], vec![at(EtaS, 1)]));
        rules.push(rule(
            "beck mu-S",
            vec![at(MuS, 0), at(Lambda, 0)],
            vec![at(Lambda, 1), at(Lambda, 0), at(MuS, 1)],
        ));
        rules.push(rule("beck eta-T", vec![at(EtaT, 1), at(Lambda, 0)], vec![at(EtaT, 0)]));
        rules.push(rule(
            "beck mu-T",
            vec![at(MuT, 1), at(Lambda, 0)],
            vec![at(Lambda, 0), at(Lambda, 1), at(MuT, 0)],
        ));
        RuleSet {
            rules,
            axioms: Vec::new(),
        }
    }

    pub fn with(hyps: &[Hyp]) -> Self {
        let mut set = RuleSet::base();
        for &h in hyps {
            set.assume(h);
        }
        set
    }

    pub fn assume(&mut self, h: Hyp) {
        use Gen::*;
        match h {
            Hyp::Ts(x) => {
                let a = alg(x, Kind::TS);
                self.rules.push(rule(
                    format!("{x:?} ts associativity"),
                    vec![at(a, 2), at(a, 0)],
                    vec![at(Lambda, 1), at(MuT, 0), at(MuS, 1), at(a, 0)],
                ));
                self.rules.push(rule(
                    format!("{x:?} ts unit"),
                    vec![at(EtaS, 0), at(EtaT, 0), at(a, 0)],
                    vec![],
                ));
            }
            Hyp::Pair(x) => {
                for (k, mu, eta) in [(Kind::T, MuT, EtaT), (Kind::S, MuS, EtaS)] {
                    let a = alg(x, k);
                    self.rules.push(rule(
                        format!("{x:?} {k:?} associativity"),
                        vec![at(a, 1), at(a, 0)],
                        vec![at(mu, 0), at(a, 0)],
                    ));
                    self.rules
                        .push(rule(format!("{x:?} {k:?} unit"), vec![at(eta, 0), at(a, 0)], vec![]));
                }
                let (t, s) = (alg(x, Kind::T), alg(x, Kind::S));
                self.rules.push(rule(
                    format!("{x:?} interaction"),
                    vec![at(t, 1), at(s, 0)],
                    vec![at(Lambda, 0), at(s, 1), at(t, 0)],
                ));
            }
            Hyp::WeakTs(c) => self.axioms.extend(weak_ts_axioms(c)),
            Hyp::WeakPair(c) => self.axioms.extend(weak_pair_axioms(c)),
            Hyp::Cylinder => self.axioms.extend(cylinder_axioms()),
        }
    }

    pub fn rule(&self, name: &str) -> Option<&Rule> {
        self.rules.iter().find(|r| r.name == name)
    }

    /// Replaces `cell` by its inverse on the right side of `axiom`. Returns
    /// whether anything changed.
    pub fn invert_in_axiom(&mut self, axiom: &str, cell: TwoGen) -> bool {
        let mut changed = false;
        for ax in self.axioms.iter_mut().filter(|a| a.name == axiom) {
            for a in ax.rhs.iter_mut().flatten() {
                if let Gen::Hole(c, inv) = a.gen {
                    if c == cell {
                        a.gen = Gen::Hole(c, !inv);
                        changed = true;
                    }
                }
            }
        }
        changed
    }
}

/// Multiplication and unit axioms of a weak map for a monad `M` with `n`
/// letters, multiplication atoms `mult` on `MM` and unit atoms `unit`.
fn weak_map_axioms(name: &str, c: TwoGen, n: u8, mult: Vec<Atom>, unit: Vec<Atom>) -> [TwoAxiom; 2] {
    let g = c.dom_atoms()[1].gen;
    let a = c.cod_atoms()[0].gen;
    let h = hole(c);
    let mut rhs = mult;
    rhs.push(at(h, 0));
    let mut unit_slice = unit;
    unit_slice.push(at(h, 0));
    [
        TwoAxiom {
            name: format!("{name} multiplication"),
            in_len: 2 * n + 1,
            out_len: 1,
            lhs: vec![vec![at(h, n), at(g, 0)], vec![at(a, n), at(h, 0)]],
            rhs: vec![rhs],
        },
        TwoAxiom {
            name: format!("{name} unit"),
            in_len: 1,
            out_len: 1,
            lhs: vec![unit_slice],
            rhs: vec![],
        },
    ]
}

fn weak_ts_axioms(c: OneCell) -> [TwoAxiom; 2] {
    use Gen::*;
    weak_map_axioms(
        &format!("zeta_{c:?}").to_lowercase(),
        TwoGen::Zeta(c),
        2,
        vec![at(Lambda, 1), at(MuT, 0), at(MuS, 1)],
        vec![at(EtaS, 0), at(EtaT, 0)],
    )
}

fn weak_pair_axioms(c: OneCell) -> Vec<TwoAxiom> {
    use Gen::*;
    let mut out: Vec<TwoAxiom> = Vec::new();
    let lower = format!("{c:?}").to_lowercase();
    out.extend(weak_map_axioms(
        &format!("sigma_{lower}"),
        TwoGen::Sigma(c),
        1,
        vec![at(MuS, 0)],
        vec![at(EtaS, 0)],
    ));
    out.extend(weak_map_axioms(
        &format!("tau_{lower}"),
        TwoGen::Tau(c),
        1,
        vec![at(MuT, 0)],
        vec![at(EtaT, 0)],
    ));
    let (x, y) = (c.dom(), c.cod());
    let (sig, tau) = (hole(TwoGen::Sigma(c)), hole(TwoGen::Tau(c)));
    out.push(TwoAxiom {
        name: format!("interaction {lower}"),
        in_len: 3,
        out_len: 1,
        lhs: vec![
            vec![at(Lambda, 0), at(sig, 1), at(alg(y, Kind::T), 0)],
            vec![at(Lambda, 0), at(alg(x, Kind::S), 1), at(tau, 0)],
        ],
        rhs: vec![
            vec![at(tau, 1), at(alg(y, Kind::S), 0)],
            vec![at(alg(x, Kind::T), 1), at(sig, 0)],
        ],
    });
    out
}

fn cylinder_axioms() -> Vec<TwoAxiom> {
    let theta = hole(TwoGen::Theta);
    [
        (Kind::T, TwoGen::Tau as fn(OneCell) -> TwoGen, "cylinder T"),
        (Kind::S, TwoGen::Sigma, "cylinder S"),
    ]
    .into_iter()
    .map(|(k, cell, name)| TwoAxiom {
        name: name.into(),
        in_len: 2,
        out_len: 1,
        lhs: vec![
            vec![at(theta, 1), at(alg(Obj::B, k), 0)],
            vec![at(hole(cell(OneCell::G)), 0)],
        ],
        rhs: vec![
            vec![at(hole(cell(OneCell::F)), 0)],
            vec![at(alg(Obj::A, k), 0), at(theta, 0)],
        ],
    })
    .collect()
}
