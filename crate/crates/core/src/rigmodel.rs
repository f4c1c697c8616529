//! Writer monads induced by a finite rig and their distributive law.
//!
//! `T X = R × X` writes to `(R, +, 0)` and `S X = R × X` writes to
//! `(R, ·, 1)`. The law `λ : ST -> TS` is `(m, (a, x)) ↦ (m·a, (m, x))`. Sets
//! are `{0, .., k-1}`; every check is pointwise enumeration.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::fincat::advance;
use crate::report::Report;

pub type Elem = usize;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RigError {
    #[error("malformed rig: {0}")]
    Malformed(String),
    #[error("interaction fails at (m, a, x) = ({m}, {a}, {x})")]
    InteractionViolation { m: Elem, a: Elem, x: Elem },
}

/// Finite addition and multiplication tables. Nothing beyond table shape is
/// enforced at construction so that mutants can be represented.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Rig {
    pub name: String,
    pub size: usize,
    /// `add[a * size + b]`.
    pub add: Vec<Elem>,
    /// `mul[a * size + b]`.
    pub mul: Vec<Elem>,
    pub zero: Elem,
    pub one: Elem,
}

impl Rig {
    pub fn new(
        name: impl Into<String>,
        size: usize,
        add: Vec<Elem>,
        mul: Vec<Elem>,
        zero: Elem,
        one: Elem,
    ) -> Result<Self, RigError> {
        let name = name.into();
        if size == 0 {
            return Err(RigError::Malformed(format!("{name}: empty carrier")));
        }
        if add.len() != size * size || mul.len() != size * size {
            return Err(RigError::Malformed(format!(
                "{name}: tables must have {} entries",
                size * size
            )));
        }
        if add.iter().chain(&mul).chain([&zero, &one]).any(|&e| e >= size) {
            return Err(RigError::Malformed(format!("{name}: entry out of range")));
        }
        Ok(Rig {
            name,
            size,
            add,
            mul,
            zero,
            one,
        })
    }

    fn from_fns(name: &str, size: usize, add: impl Fn(Elem, Elem) -> Elem, mul: impl Fn(Elem, Elem) -> Elem) -> Self {
        let table = |f: &dyn Fn(Elem, Elem) -> Elem| (0..size * size).map(|i| f(i / size, i % size)).collect();
        Rig::new(name, size, table(&add), table(&mul), 0, 1).expect("built-in tables are well formed")
    }

    /// `({0,1}, OR, AND)`.
    pub fn boolean() -> Self {
        Rig::from_fns("boolean", 2, |a, b| a | b, |a, b| a & b)
    }

    /// Integers modulo `n`.
    pub fn zmod(n: usize) -> Self {
        Rig::from_fns(&format!("z{n}"), n, |a, b| (a + b) % n, |a, b| (a * b) % n)
    }

    pub fn plus(&self, a: Elem, b: Elem) -> Elem {
        self.add[a * self.size + b]
    }

    pub fn times(&self, a: Elem, b: Elem) -> Elem {
        self.mul[a * self.size + b]
    }

    pub fn elements(&self) -> std::ops::Range<Elem> {
        0..self.size
    }
}

/// The rig axioms themselves, independent of any monad.
pub fn check_rig(r: &Rig) -> Report {
    let mut report = Report::new(format!("rig {}", r.name));
    let (z, o) = (r.zero, r.one);
    for a in r.elements() {
        report.require(r.plus(z, a) == a && r.plus(a, z) == a, "additive unit", || {
            format!("a = {a}")
        });
        report.require(r.times(o, a) == a && r.times(a, o) == a, "multiplicative unit", || {
            format!("a = {a}")
        });
        report.require(r.times(a, z) == z && r.times(z, a) == z, "absorption", || {
            format!("a = {a}")
        });
        for b in r.elements() {
            report.require(r.plus(a, b) == r.plus(b, a), "additive commutativity", || {
                format!("(a,b) = ({a},{b})")
            });
            for c in r.elements() {
                let w = || format!("(a,b,c) = ({a},{b},{c})");
                report.require(
                    r.plus(r.plus(a, b), c) == r.plus(a, r.plus(b, c)),
                    "additive associativity",
                    w,
                );
                report.require(
                    r.times(r.times(a, b), c) == r.times(a, r.times(b, c)),
                    "multiplicative associativity",
                    w,
                );
                report.require(
                    r.times(a, r.plus(b, c)) == r.plus(r.times(a, b), r.times(a, c)),
                    "left distributivity",
                    w,
                );
                report.require(
                    r.times(r.plus(a, b), c) == r.plus(r.times(a, c), r.times(b, c)),
                    "right distributivity",
                    w,
                );
            }
        }
    }
    report
}

pub const ETA_S: &str = "eta-S compatibility";
pub const MU_S: &str = "mu-S compatibility";
pub const ETA_T: &str = "eta-T compatibility";
pub const MU_T: &str = "mu-T compatibility";

/// `λ_X (m, (a, x)) = (m·a, (m, x))`.
pub fn lambda(r: &Rig, m: Elem, (a, x): (Elem, Elem)) -> (Elem, (Elem, Elem)) {
    (r.times(m, a), (m, x))
}

/// Beck's four diagrams, pointwise on every set of size `1..=max_set`:
///
/// - `λ ∘ η^S T = T η^S`
/// - `λ ∘ μ^S T = T μ^S ∘ λ S ∘ S λ`
/// - `λ ∘ S η^T = η^T S`
/// - `λ ∘ S μ^T = μ^T S ∘ T λ ∘ λ T`
pub fn verify_beck(r: &Rig, max_set: usize) -> Report {
    let mut report = Report::new(format!("beck {}", r.name));
    let lam = |m, ax| lambda(r, m, ax);
    for k in 1..=max_set {
        for x in 0..k {
            for m in r.elements() {
                report.require(lam(m, (r.zero, x)) == (r.zero, (m, x)), ETA_T, || {
                    format!("|X|={k}, (m, x) = ({m}, {x})")
                });
                for a in r.elements() {
                    if m == r.one {
                        report.require(lam(r.one, (a, x)) == (a, (r.one, x)), ETA_S, || {
                            format!("|X|={k}, (a, x) = ({a}, {x})")
                        });
                    }
                    for n in r.elements() {
                        // (m, (n, (a, x))) in SSTX.
                        let lhs = lam(r.times(m, n), (a, x));
                        let (na, (n2, x2)) = lam(n, (a, x));
                        let (mna, (m2, (n3, x3))) = (r.times(m, na), (m, (n2, x2)));
                        let rhs = (mna, (r.times(m2, n3), x3));
                        report.require(lhs == rhs, MU_S, || {
                            format!("|X|={k}, (m, n, a, x) = ({m}, {n}, {a}, {x})")
                        });

                        // (m, (a, (n, x))) in STTX, reusing n as the inner T label.
                        let b = n;
                        let lhs = lam(m, (r.plus(a, b), x));
                        let (ma, (m2, (b2, x2))) = (r.times(m, a), (m, (b, x)));
                        let (mb, (m3, x3)) = lam(m2, (b2, x2));
                        let rhs = (r.plus(ma, mb), (m3, x3));
                        report.require(lhs == rhs, MU_T, || {
                            format!("|X|={k}, (m, a, b, x) = ({m}, {a}, {b}, {x})")
                        });
                    }
                }
            }
        }
    }
    report
}

/// Name, unit and product of a monoid on the rig's carrier.
type Monoid<'a> = (&'a str, Elem, &'a dyn Fn(Elem, Elem) -> Elem);

/// Monad laws of both writer monads on sets of size `1..=max_set`.
pub fn verify_writer_monads(r: &Rig, max_set: usize) -> Report {
    let mut report = Report::new(format!("writer monads {}", r.name));
    let monoids: [Monoid; 2] = [("T", r.zero, &|a, b| r.plus(a, b)), ("S", r.one, &|a, b| r.times(a, b))];
    for (name, e, op) in monoids {
        for k in 1..=max_set {
            for x in 0..k {
                for a in r.elements() {
                    // μ ∘ η_M = 1 = μ ∘ M η on (a, x).
                    report.require(op(e, a) == a && op(a, e) == a, &format!("{name} unit law"), || {
                        format!("|X|={k}, (a, x) = ({a}, {x})")
                    });
                    for b in r.elements() {
                        for c in r.elements() {
                            report.require(
                                op(op(a, b), c) == op(a, op(b, c)),
                                &format!("{name} associativity law"),
                                || format!("|X|={k}, (a, b, c, x) = ({a}, {b}, {c}, {x})"),
                            );
                        }
                    }
                }
            }
        }
    }
    report
}

/// An action `R × X -> X` for one writer monad, `table[r * card + x]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Action {
    pub card: usize,
    pub table: Vec<Elem>,
}

impl Action {
    pub fn act(&self, r: Elem, x: Elem) -> Elem {
        self.table[r * self.card + x]
    }
}

/// A `TS`-algebra `θ : R × R × X -> X`, `table[(a * |R| + m) * card + x]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct TsAlgebra {
    pub card: usize,
    pub table: Vec<Elem>,
}

impl TsAlgebra {
    pub fn act(&self, rig: &Rig, a: Elem, m: Elem, x: Elem) -> Elem {
        self.table[(a * rig.size + m) * self.card + x]
    }
}

fn check_action(r: &Rig, act: &Action, unit: Elem, op: impl Fn(Elem, Elem) -> Elem, name: &str) -> Report {
    let mut report = Report::new(format!("{name}-algebra"));
    for x in 0..act.card {
        report.require(act.act(unit, x) == x, "unit", || format!("x = {x}"));
        for a in r.elements() {
            for b in r.elements() {
                report.require(
                    act.act(a, act.act(b, x)) == act.act(op(a, b), x),
                    "multiplication",
                    || format!("({a}, {b}, {x})"),
                );
            }
        }
    }
    report
}

pub fn check_t_algebra(r: &Rig, a_t: &Action) -> Report {
    check_action(r, a_t, r.zero, |a, b| r.plus(a, b), "T")
}

pub fn check_s_algebra(r: &Rig, a_s: &Action) -> Report {
    check_action(r, a_s, r.one, |a, b| r.times(a, b), "S")
}

fn interaction_failures<'a>(
    r: &'a Rig,
    a_t: &'a Action,
    a_s: &'a Action,
) -> impl Iterator<Item = (Elem, Elem, Elem)> + 'a {
    r.elements()
        .flat_map(move |m| r.elements().flat_map(move |a| (0..a_t.card).map(move |x| (m, a, x))))
        .filter(move |&(m, a, x)| a_s.act(m, a_t.act(a, x)) != a_t.act(r.times(m, a), a_s.act(m, x)))
}

/// `s ∘ S t = t ∘ T s ∘ λ`, i.e. `a_s(m, a_t(a, x)) = a_t(m·a, a_s(m, x))`.
pub fn check_interaction(r: &Rig, a_t: &Action, a_s: &Action) -> Report {
    let mut report = Report::new("s/t interaction");
    for (m, a, x) in interaction_failures(r, a_t, a_s) {
        report.push("interaction", format!("(m, a, x) = ({m}, {a}, {x})"));
    }
    report
}

/// Unit `θ(0, 1, x) = x` and multiplication
/// `θ(a + m·b, m·n, x) = θ(a, m, θ(b, n, x))`.
pub fn check_ts_algebra(r: &Rig, theta: &TsAlgebra) -> Report {
    let mut report = Report::new("TS-algebra");
    for x in 0..theta.card {
        report.require(theta.act(r, r.zero, r.one, x) == x, "unit", || format!("x = {x}"));
        for a in r.elements() {
            for m in r.elements() {
                for b in r.elements() {
                    for n in r.elements() {
                        let lhs = theta.act(r, r.plus(a, r.times(m, b)), r.times(m, n), x);
                        let rhs = theta.act(r, a, m, theta.act(r, b, n, x));
                        report.require(lhs == rhs, "multiplication", || {
                            format!("(a, m, b, n, x) = ({a}, {m}, {b}, {n}, {x})")
                        });
                    }
                }
            }
        }
    }
    report
}

/// `a_t = θ ∘ η^T S` restricted along `η^S`, i.e. `a_t(a, x) = θ(a, 1, x)`,
/// and `a_s = θ ∘ η^T S`, i.e. `a_s(m, x) = θ(0, m, x)`.
pub fn split_algebra(r: &Rig, theta: &TsAlgebra) -> (Action, Action) {
    let card = theta.card;
    let a_t = (0..r.size * card)
        .map(|i| theta.act(r, i / card, r.one, i % card))
        .collect();
    let a_s = (0..r.size * card)
        .map(|i| theta.act(r, r.zero, i / card, i % card))
        .collect();
    (Action { card, table: a_t }, Action { card, table: a_s })
}

/// `θ = a_t ∘ T a_s`, provided the pair satisfies interaction.
pub fn combine_pair(r: &Rig, a_t: &Action, a_s: &Action) -> Result<TsAlgebra, RigError> {
    if let Some((m, a, x)) = interaction_failures(r, a_t, a_s).next() {
        return Err(RigError::InteractionViolation { m, a, x });
    }
    let card = a_t.card;
    let table = (0..r.size * r.size * card)
        .map(|i| {
            let (a, m, x) = (i / (r.size * card), (i / card) % r.size, i % card);
            a_t.act(a, a_s.act(m, x))
        })
        .collect();
    Ok(TsAlgebra { card, table })
}

fn all_tables(len: usize, card: usize) -> impl Iterator<Item = Vec<Elem>> {
    let mut digits = Some(vec![0; len]);
    std::iter::from_fn(move || {
        let current = digits.take()?;
        let mut next = current.clone();
        if advance(&mut next, |_| card) {
            digits = Some(next);
        }
        Some(current)
    })
}

/// Every `TS`-algebra on a set of size `card`, by filtering all tables.
pub fn enumerate_ts_algebras(r: &Rig, card: usize) -> Vec<TsAlgebra> {
    all_tables(r.size * r.size * card, card)
        .map(|table| TsAlgebra { card, table })
        .filter(|t| check_ts_algebra(r, t).passed())
        .collect()
}

/// Every λ-distributive pair `(a_t, a_s)` on a set of size `card`.
pub fn enumerate_distributive_pairs(r: &Rig, card: usize) -> Vec<(Action, Action)> {
    let ts: Vec<Action> = all_tables(r.size * card, card)
        .map(|table| Action { card, table })
        .filter(|a| check_t_algebra(r, a).passed())
        .collect();
    let ss: Vec<Action> = all_tables(r.size * card, card)
        .map(|table| Action { card, table })
        .filter(|a| check_s_algebra(r, a).passed())
        .collect();
    let mut out = Vec::new();
    for a_t in &ts {
        for a_s in &ss {
            if check_interaction(r, a_t, a_s).passed() {
                out.push((a_t.clone(), a_s.clone()));
            }
        }
    }
    out
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusRow {
    pub card: usize,
    pub ts_algebras: usize,
    pub distributive_pairs: usize,
}

/// Census of the correspondence on carriers `1..=max_set`. The report fails
/// unless split and combine are mutually inverse bijections.
pub fn distpair_census(r: &Rig, max_set: usize) -> (Vec<CensusRow>, Report) {
    let mut rows = Vec::new();
    let mut report = Report::new(format!("distpair census {}", r.name));
    for card in 1..=max_set {
        let algebras = enumerate_ts_algebras(r, card);
        let pairs = enumerate_distributive_pairs(r, card);
        for theta in &algebras {
            let (a_t, a_s) = split_algebra(r, theta);
            report.require(
                pairs.contains(&(a_t.clone(), a_s.clone())),
                "split lands in pairs",
                || format!("|X|={card}, θ = {:?}", theta.table),
            );
            report.require(
                combine_pair(r, &a_t, &a_s).as_ref() == Ok(theta),
                "combine after split",
                || format!("|X|={card}, θ = {:?}", theta.table),
            );
        }
        for (a_t, a_s) in &pairs {
            match combine_pair(r, a_t, a_s) {
                Ok(theta) => {
                    report.require(algebras.contains(&theta), "combine lands in algebras", || {
                        format!("|X|={card}, a_t = {:?}, a_s = {:?}", a_t.table, a_s.table)
                    });
                    report.require(
                        split_algebra(r, &theta) == (a_t.clone(), a_s.clone()),
                        "split after combine",
                        || format!("|X|={card}, a_t = {:?}, a_s = {:?}", a_t.table, a_s.table),
                    );
                }
                Err(e) => report.push("combine lands in algebras", e.to_string()),
            }
        }
        report.require(algebras.len() == pairs.len(), "cardinality", || {
            format!("|X|={card}: {} algebras, {} pairs", algebras.len(), pairs.len())
        });
        rows.push(CensusRow {
            card,
            ts_algebras: algebras.len(),
            distributive_pairs: pairs.len(),
        });
    }
    (rows, report)
}

fn is_ts_map(r: &Rig, f: &[Elem], a: &TsAlgebra, b: &TsAlgebra) -> bool {
    (0..a.card).all(|x| {
        r.elements()
            .all(|s| r.elements().all(|m| f[a.act(r, s, m, x)] == b.act(r, s, m, f[x])))
    })
}

fn is_action_map(r: &Rig, f: &[Elem], a: &Action, b: &Action) -> bool {
    (0..a.card).all(|x| r.elements().all(|s| f[a.act(s, x)] == b.act(s, f[x])))
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct StrictMapCounts {
    pub algebra_pairs: usize,
    pub functions: usize,
    pub ts_maps: usize,
}

/// For every pair of `TS`-algebras on carriers `1..=max_set`, the `TS`-maps
/// are exactly the functions that are both `T`-maps and `S`-maps.
pub fn verify_strict_map_theorem(r: &Rig, max_set: usize) -> (StrictMapCounts, Report) {
    let mut report = Report::new(format!("strict maps {}", r.name));
    let mut counts = StrictMapCounts::default();
    let algebras: Vec<TsAlgebra> = (1..=max_set).flat_map(|k| enumerate_ts_algebras(r, k)).collect();
    for a in &algebras {
        let (at, as_) = split_algebra(r, a);
        for b in &algebras {
            counts.algebra_pairs += 1;
            let (bt, bs) = split_algebra(r, b);
            for f in all_tables(a.card, b.card) {
                counts.functions += 1;
                let ts = is_ts_map(r, &f, a, b);
                let both = is_action_map(r, &f, &at, &bt) && is_action_map(r, &f, &as_, &bs);
                counts.ts_maps += usize::from(ts);
                report.require(ts == both, "map sets differ", || {
                    format!(
                        "A = {:?}, B = {:?}, f = {f:?}: TS-map {ts}, T-and-S-map {both}",
                        a.table, b.table
                    )
                });
            }
        }
    }
    (counts, report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn genuine_rigs_pass() {
        for r in [Rig::boolean(), Rig::zmod(2), Rig::zmod(4)] {
            assert!(check_rig(&r).passed(), "{}", r.name);
            assert!(verify_beck(&r, 3).passed(), "{}", r.name);
            assert!(verify_writer_monads(&r, 3).passed(), "{}", r.name);
        }
    }

    #[test]
    fn trivial_algebra_round_trips() {
        let r = Rig::boolean();
        let theta = TsAlgebra {
            card: 1,
            table: vec![0; 4],
        };
        assert!(check_ts_algebra(&r, &theta).passed());
        let (a_t, a_s) = split_algebra(&r, &theta);
        assert_eq!(combine_pair(&r, &a_t, &a_s).unwrap(), theta);
    }

    #[test]
    fn broken_pair_reports_interaction_witness() {
        let r = Rig::boolean();
        // a_t: 1 swaps the two points; a_s trivial. 0·1 = 0, so at (m, a) = (0, 1):
        // a_s(0, a_t(1, x)) = swap x, a_t(0, a_s(0, x)) = x.
        let a_t = Action {
            card: 2,
            table: vec![0, 1, 1, 0],
        };
        let a_s = Action {
            card: 2,
            table: vec![0, 1, 0, 1],
        };
        assert!(check_t_algebra(&r, &a_t).has_axiom("multiplication"));
        let err = combine_pair(&r, &a_t, &a_s).unwrap_err();
        assert!(matches!(err, RigError::InteractionViolation { m: 0, a: 1, .. }));
    }

    #[test]
    fn malformed_tables_are_rejected() {
        assert!(Rig::new("bad", 2, vec![0; 3], vec![0; 4], 0, 1).is_err());
        assert!(Rig::new("bad", 2, vec![0; 4], vec![0, 0, 0, 2], 0, 1).is_err());
    }
}
