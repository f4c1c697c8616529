//! Bundled proof obligations.
//!
//! Each obligation fixes every whisker explicitly. Two presentations of
//! algebras occur: with a primitive `x_ts` (then `x_s := x_ts ∘ η^T S` and
//! `x_t := x_ts ∘ T η^S` are spelled out with units) or with primitives
//! `x_t`, `x_s` (then `x_ts := x_t ∘ T x_s`).

use serde::{Deserialize, Serialize};

use super::rules::{Hyp, RuleSet};
use super::search::{check_equal_1cells, Outcome};
use super::syntax::{parse_term, Term};
use super::twocell::check_equal_2cells;
use super::{MonadTermError, OneCell, TwoGen};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Expect {
    Proven,
    NotFound,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Obligation {
    pub name: String,
    /// How the statement was transcribed.
    pub note: String,
    pub hypotheses: Vec<Hyp>,
    pub lhs: Term,
    pub rhs: Term,
    pub expect: Expect,
    /// Rule-set damage applied before searching: the named axiom gets this
    /// 2-cell inverted on its right side.
    pub mutation: Option<(String, TwoGen)>,
}

impl Obligation {
    pub fn parse(
        name: &str,
        note: &str,
        hypotheses: &[&str],
        lhs: &str,
        rhs: &str,
        expect: Expect,
    ) -> Result<Self, MonadTermError> {
        Ok(Obligation {
            name: name.into(),
            note: note.into(),
            hypotheses: hypotheses.iter().map(|h| h.parse()).collect::<Result<_, _>>()?,
            lhs: parse_term(lhs)?,
            rhs: parse_term(rhs)?,
            expect,
            mutation: None,
        })
    }

    pub fn rules(&self) -> RuleSet {
        let mut set = RuleSet::with(&self.hypotheses);
        if let Some((axiom, cell)) = &self.mutation {
            assert!(
                set.invert_in_axiom(axiom, *cell),
                "mutation {axiom} does not mention {cell:?}"
            );
        }
        set
    }

    /// Runs the matching prover under this obligation's hypotheses.
    pub fn check(&self, depth: usize) -> Result<Outcome, MonadTermError> {
        self.check_with(&self.rules(), depth)
    }

    pub fn check_with(&self, rules: &RuleSet, depth: usize) -> Result<Outcome, MonadTermError> {
        match (&self.lhs, &self.rhs) {
            (Term::One(l), Term::One(r)) => check_equal_1cells(l, r, rules, depth),
            (Term::Two(l), Term::Two(r)) => check_equal_2cells(l, r, rules, depth),
            _ => Err(MonadTermError::BoundaryMismatch(
                "a 1-cell compared with a 2-cell".into(),
            )),
        }
    }

    /// Whether the outcome is the expected one.
    pub fn met_by(&self, out: Outcome) -> bool {
        out.is_proven() == (self.expect == Expect::Proven)
    }
}

const TS_A: &[&str] = &["ts:A"];
const PAIR_A: &[&str] = &["pair:A"];
const WEAK_TS: &[&str] = &["ts:A", "ts:B", "weak-ts:f"];
const WEAK_PAIR: &[&str] = &["pair:A", "pair:B", "weak-pair:f"];
const CYLINDERS: &[&str] = &["pair:A", "pair:B", "cylinder:theta"];

type Row = (
    &'static str,
    &'static str,
    &'static [&'static str],
    &'static str,
    &'static str,
    Expect,
);

const ROWS: &[Row] = &[
    (
        "distpair-ts-round-trip",
        "a_t ∘ T a_s = a_ts for the actions extracted from a_ts",
        TS_A,
        "(cell TSA eta_T@1 a_ts@1 eta_S@1 a_ts@0)",
        "(cell TSA a_ts@0)",
        Expect::Proven,
    ),
    (
        "distpair-interaction",
        "the extracted pair satisfies a_s ∘ S a_t = a_t ∘ T a_s ∘ λ",
        TS_A,
        "(cell STA eta_S@2 a_ts@1 eta_T@0 a_ts@0)",
        "(cell STA lambda@0 eta_T@1 a_ts@1 eta_S@1 a_ts@0)",
        Expect::Proven,
    ),
    (
        "distpair-pair-t-round-trip",
        "a_ts := a_t ∘ T a_s restricted along T η^S gives back a_t",
        PAIR_A,
        "(cell TA eta_S@1 a_s@1 a_t@0)",
        "(cell TA a_t@0)",
        Expect::Proven,
    ),
    (
        "distpair-pair-s-round-trip",
        "a_ts := a_t ∘ T a_s restricted along η^T S gives back a_s",
        PAIR_A,
        "(cell SA eta_T@0 a_s@1 a_t@0)",
        "(cell SA a_s@0)",
        Expect::Proven,
    ),
    (
        "distpair-pair-associativity",
        "a_t ∘ T a_s is associative for the composite multiplication T μ^S ∘ μ^T SS ∘ T λ S",
        PAIR_A,
        "(cell TSTSA a_s@3 a_t@2 a_s@1 a_t@0)",
        "(cell TSTSA lambda@1 mu_T@0 mu_S@1 a_s@1 a_t@0)",
        Expect::Proven,
    ),
    (
        "distpair-pair-unit",
        "a_t ∘ T a_s is unital for the composite unit T η^S ∘ η^T",
        PAIR_A,
        "(cell A eta_S@0 eta_T@0 a_s@1 a_t@0)",
        "(cell A)",
        Expect::Proven,
    ),
    (
        "weakts-interaction",
        "σ := ζ η^T S and τ := ζ T η^S satisfy the interaction axiom; both sides are read from STA, \
         with b_t, b_s, a_t, a_s spelled through the units",
        WEAK_TS,
        "(paste STA (slice lambda@0 eta_T@1 zeta_f@1 eta_S@1 b_ts@0) (slice lambda@0 eta_T@1 a_ts@1 eta_S@1 zeta_f@0))",
        "(paste STA (slice eta_S@2 zeta_f@1 eta_T@0 b_ts@0) (slice eta_S@2 a_ts@1 eta_T@0 zeta_f@0))",
        Expect::Proven,
    ),
    (
        "zeta-multiplication",
        "ζ := τ ∘ Tσ satisfies the multiplication axiom for TS, whose multiplication is T μ^S ∘ μ^T SS ∘ T λ S",
        WEAK_PAIR,
        "(paste TSTSA (slice sigma_f@3 b_t@2 b_s@1 b_t@0) (slice a_s@3 tau_f@2 b_s@1 b_t@0) \
         (slice a_s@3 a_t@2 sigma_f@1 b_t@0) (slice a_s@3 a_t@2 a_s@1 tau_f@0))",
        "(paste TSTSA (slice lambda@1 mu_T@0 mu_S@1 sigma_f@1 b_t@0) (slice lambda@1 mu_T@0 mu_S@1 a_s@1 tau_f@0))",
        Expect::Proven,
    ),
    (
        "zeta-unit",
        "ζ := τ ∘ Tσ restricted along the unit T η^S ∘ η^T is the identity on f",
        WEAK_PAIR,
        "(paste A (slice eta_S@0 eta_T@0 sigma_f@1 b_t@0) (slice eta_S@0 eta_T@0 a_s@1 tau_f@0))",
        "(id (cell A f@0))",
        Expect::Proven,
    ),
    (
        "zeta-round-trip",
        "ζ ↦ (σ, τ) ↦ τ ∘ Tσ gives back ζ",
        WEAK_TS,
        "(paste TSA (slice eta_T@1 zeta_f@1 eta_S@1 b_ts@0) (slice eta_T@1 a_ts@1 eta_S@1 zeta_f@0))",
        "(paste TSA (slice zeta_f@0))",
        Expect::Proven,
    ),
    (
        "sigma-round-trip",
        "(σ, τ) ↦ ζ ↦ ζ η^T S gives back σ",
        WEAK_PAIR,
        "(paste SA (slice eta_T@0 sigma_f@1 b_t@0) (slice eta_T@0 a_s@1 tau_f@0))",
        "(paste SA (slice sigma_f@0))",
        Expect::Proven,
    ),
    (
        "tau-round-trip",
        "(σ, τ) ↦ ζ ↦ ζ T η^S gives back τ",
        WEAK_PAIR,
        "(paste TA (slice eta_S@1 sigma_f@1 b_t@0) (slice eta_S@1 a_s@1 tau_f@0))",
        "(paste TA (slice tau_f@0))",
        Expect::Proven,
    ),
    (
        "tstrans",
        "the S- and T-cylinders for θ : f ⟹ g give the TS-cylinder with ζ_x := τ_x ∘ Tσ_x",
        CYLINDERS,
        "(paste TSA (slice theta@2 b_s@1 b_t@0) (slice sigma_g@1 b_t@0) (slice a_s@1 tau_g@0))",
        "(paste TSA (slice sigma_f@1 b_t@0) (slice a_s@1 tau_f@0) (slice a_s@1 a_t@0 theta@0))",
        Expect::Proven,
    ),
    (
        "exchange",
        "θ : f ⟹ g and φ : h ⟹ k pasted side by side in either order",
        &[],
        "(paste A (slice theta@0 h@0) (slice g@0 phi@0))",
        "(paste A (slice f@0 phi@0) (slice theta@0 k@0))",
        Expect::Proven,
    ),
];

/// Every bundled obligation, in a fixed order, ending with the mutated
/// cylinder that must not be proven.
pub fn bundled() -> Vec<Obligation> {
    let mut out: Vec<Obligation> = ROWS
        .iter()
        .map(|&(name, note, hyps, lhs, rhs, expect)| {
            Obligation::parse(name, note, hyps, lhs, rhs, expect).expect("bundled obligations parse")
        })
        .collect();
    let tstrans = out.iter().find(|o| o.name == "tstrans").expect("bundled").clone();
    out.push(Obligation {
        name: "tstrans-sigma-inverted".into(),
        note: "mutation: the S-cylinder hypothesis with σ_f replaced by its inverse".into(),
        expect: Expect::NotFound,
        mutation: Some(("cylinder S".into(), TwoGen::Sigma(OneCell::F))),
        ..tstrans
    });
    out
}

/// The 2-cell whose cylinders are checked.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Transformation {
    /// A formal `θ : f ⟹ g` with both cylinder axioms assumed.
    Formal,
    /// The identity on `f`; every slice holding `θ` disappears.
    Identity,
}

/// The TS-cylinder for `θ`, given the T- and S-cylinders.
pub fn check_transformation_cylinder(theta: Transformation, depth: usize) -> Result<Outcome, MonadTermError> {
    let o = match theta {
        Transformation::Formal => find("tstrans").expect("bundled"),
        Transformation::Identity => {
            let pasting = "(paste TSA (slice sigma_f@1 b_t@0) (slice a_s@1 tau_f@0))";
            Obligation::parse(
                "tstrans-identity",
                "θ = id_f",
                WEAK_PAIR,
                pasting,
                pasting,
                Expect::Proven,
            )?
        }
    };
    o.check(depth)
}

pub fn find(name: &str) -> Option<Obligation> {
    bundled().into_iter().find(|o| o.name == name)
}

#[cfg(test)]
mod tests {
    use super::super::search::DEFAULT_DEPTH;
    use super::*;

    #[test]
    fn bundled_obligations_meet_expectations() {
        for o in bundled() {
            let out = o.check(DEFAULT_DEPTH).unwrap();
            assert!(o.met_by(out), "{}: {out:?}", o.name);
        }
    }

    #[test]
    fn identity_cylinder_is_immediate() {
        let out = check_transformation_cylinder(Transformation::Identity, 0).unwrap();
        assert_eq!(out, Outcome::Proven { steps: 0 });
        assert!(check_transformation_cylinder(Transformation::Formal, DEFAULT_DEPTH)
            .unwrap()
            .is_proven());
    }
}
