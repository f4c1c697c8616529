//! Doubly-degenerate structures: one category with a weak vertical tensor `a/b`
//! and a strict horizontal tensor `a∥b` sharing a unit and interchanging
//! strictly. Provides grid evaluation, the Eckmann–Hilton maps α and ᾱ, and
//! the standard braiding.
//!
//! The vertical `left_unit` is τ : 1/a -> a and `right_unit` is β : a/1 -> a.

use std::sync::Arc;

use thiserror::Error;

use crate::fincat::{check_category, FinCategory, MorId, ObjId};
use crate::monoidal::{check_braided, check_monoidal, BraidedStructure, MonoidalError, MonoidalStructure};
use crate::report::Report;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DdError {
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("not invertible: {0}")]
    NotInvertible(String),
    #[error("grid evaluation orders disagree: rows first gives {rows}, columns first gives {columns}")]
    OrderDisagreement { rows: usize, columns: usize },
    #[error(transparent)]
    Monoidal(#[from] MonoidalError),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DDStructure {
    pub vertical: MonoidalStructure,
    pub horizontal: MonoidalStructure,
}

impl DDStructure {
    pub fn new(vertical: MonoidalStructure, horizontal: MonoidalStructure) -> Result<Self, DdError> {
        if vertical.carrier != horizontal.carrier {
            return Err(DdError::ShapeMismatch("vertical and horizontal carriers differ".into()));
        }
        Ok(DDStructure { vertical, horizontal })
    }

    pub fn carrier(&self) -> &Arc<FinCategory> {
        &self.vertical.carrier
    }

    pub fn unit(&self) -> ObjId {
        self.vertical.unit
    }

    /// `a/b` on objects.
    pub fn v(&self, a: ObjId, b: ObjId) -> ObjId {
        self.vertical.obj(a, b)
    }

    /// `a∥b` on objects.
    pub fn h(&self, a: ObjId, b: ObjId) -> ObjId {
        self.horizontal.obj(a, b)
    }

    /// `f/g` on morphisms.
    pub fn vm(&self, f: MorId, g: MorId) -> MorId {
        self.vertical.mor(f, g)
    }

    /// `f∥g` on morphisms.
    pub fn hm(&self, f: MorId, g: MorId) -> MorId {
        self.horizontal.mor(f, g)
    }

    pub fn tau(&self, a: ObjId) -> MorId {
        self.vertical.lunit(a)
    }

    pub fn beta(&self, a: ObjId) -> MorId {
        self.vertical.runit(a)
    }

    fn invert(&self, f: MorId, what: impl FnOnce() -> String) -> Result<MorId, DdError> {
        self.carrier().inverse(f).ok_or_else(|| DdError::NotInvertible(what()))
    }

    /// `α_{a,b} : a∥b -> a/b`, the inverse of `β_a ∥ τ_b`.
    pub fn alpha(&self, a: ObjId, b: ObjId) -> Result<MorId, DdError> {
        self.invert(self.hm(self.beta(a), self.tau(b)), || format!("β_{a} ∥ τ_{b}"))
    }

    /// `ᾱ_{a,b} : a∥b -> b/a`, the inverse of `τ_a ∥ β_b`.
    pub fn alpha_bar(&self, a: ObjId, b: ObjId) -> Result<MorId, DdError> {
        self.invert(self.hm(self.tau(a), self.beta(b)), || format!("τ_{a} ∥ β_{b}"))
    }

    /// `γ_{a,b} = α_{b,a} ∘ ᾱ_{b,a}⁻¹ : a/b -> b∥a -> b/a`.
    pub fn gamma(&self, a: ObjId, b: ObjId) -> Result<MorId, DdError> {
        let c = self.carrier();
        c.compose(self.alpha(b, a)?, self.hm(self.tau(b), self.beta(a)))
            .ok_or_else(|| DdError::ShapeMismatch(format!("γ({a},{b}) is ill-typed")))
    }

    pub fn standard_braiding(&self) -> Result<BraidedStructure, DdError> {
        let n = self.carrier().object_count();
        let braiding = (0..n * n)
            .map(|i| self.gamma(i / n, i % n))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(BraidedStructure::new(self.vertical.clone(), braiding)?)
    }

    /// U on 0-cells: the vertical structure with the standard braiding.
    pub fn to_braided(&self) -> Result<BraidedStructure, DdError> {
        self.standard_braiding()
    }
}

/// Both monoidal structures, horizontal strictness, shared unit, strict
/// interchange and enrichment strictness of the vertical constraints.
pub fn check_dd(x: &DDStructure) -> Report {
    let mut report = Report::new("dd structure");
    let c = &**x.carrier();
    report.absorb("carrier", check_category(c));
    if !report.passed() {
        return report;
    }
    report.absorb("vertical", check_monoidal(&x.vertical));
    report.absorb("horizontal", check_monoidal(&x.horizontal));
    if !report.passed() {
        return report;
    }
    let hs = &x.horizontal;
    for a in c.objects() {
        for b in c.objects() {
            for d in c.objects() {
                let f = hs.assoc(a, b, d);
                report.require(c.is_identity(f), "horizontal strictness", || {
                    format!("horizontal associator ({a},{b},{d}) = {}", c.describe(f))
                });
            }
        }
        report.require(c.is_identity(hs.lunit(a)), "horizontal strictness", || {
            format!("horizontal left unit at {a}")
        });
        report.require(c.is_identity(hs.runit(a)), "horizontal strictness", || {
            format!("horizontal right unit at {a}")
        });
    }
    report.require(x.vertical.unit == x.horizontal.unit, "shared unit", || {
        format!(
            "vertical unit {} != horizontal unit {}",
            x.vertical.unit, x.horizontal.unit
        )
    });
    for a in c.objects() {
        for b in c.objects() {
            for p in c.objects() {
                for q in c.objects() {
                    let lhs = x.v(x.h(a, b), x.h(p, q));
                    let rhs = x.h(x.v(a, p), x.v(b, q));
                    report.require(lhs == rhs, "interchange on objects", || {
                        format!("(a,b,c,d) = ({a},{b},{p},{q})")
                    });
                }
            }
        }
    }
    let ms: Vec<MorId> = c.morphism_ids().collect();
    for &f in &ms {
        for &g in &ms {
            for &k in &ms {
                for &l in &ms {
                    let lhs = x.vm(x.hm(f, g), x.hm(k, l));
                    let rhs = x.hm(x.vm(f, k), x.vm(g, l));
                    report.require(lhs == rhs, "interchange on morphisms", || {
                        format!("(f,g,k,l) = ({f},{g},{k},{l})")
                    });
                }
            }
        }
    }
    let vs = &x.vertical;
    for a in c.objects() {
        for a2 in c.objects() {
            report.require(
                x.tau(x.h(a, a2)) == x.hm(x.tau(a), x.tau(a2)),
                "enrichment strictness",
                || format!("τ at ({a} ∥ {a2})"),
            );
            report.require(
                x.beta(x.h(a, a2)) == x.hm(x.beta(a), x.beta(a2)),
                "enrichment strictness",
                || format!("β at ({a} ∥ {a2})"),
            );
            for b in c.objects() {
                for b2 in c.objects() {
                    for d in c.objects() {
                        for d2 in c.objects() {
                            let lhs = vs.assoc(x.h(a, a2), x.h(b, b2), x.h(d, d2));
                            let rhs = x.hm(vs.assoc(a, b, d), vs.assoc(a2, b2, d2));
                            report.require(lhs == rhs, "enrichment strictness", || {
                                format!("associator at ({a}∥{a2}, {b}∥{b2}, {d}∥{d2})")
                            });
                        }
                    }
                }
            }
        }
    }
    report
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GridKind {
    Objects,
    Morphisms,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GridOrder {
    /// Tensor each row horizontally, then stack the rows vertically.
    RowsFirst,
    /// Stack each column vertically, then tensor the columns horizontally.
    ColumnsFirst,
}

/// A rectangular grid; row `i` sits above row `i + 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GridExpr {
    pub kind: GridKind,
    pub cells: Vec<Vec<usize>>,
}

type BinOp<'a> = &'a dyn Fn(usize, usize) -> usize;

fn eval_in_order(x: &DDStructure, g: &GridExpr, order: GridOrder) -> usize {
    let (v, h): (BinOp, BinOp) = match g.kind {
        GridKind::Objects => (&|a, b| x.v(a, b), &|a, b| x.h(a, b)),
        GridKind::Morphisms => (&|a, b| x.vm(a, b), &|a, b| x.hm(a, b)),
    };
    let fold = |items: &mut dyn Iterator<Item = usize>, op: &dyn Fn(usize, usize) -> usize| {
        let first = items.next().expect("grid is non-empty");
        items.fold(first, op)
    };
    let cols = g.cells[0].len();
    match order {
        GridOrder::RowsFirst => {
            let mut rows = g.cells.iter().map(|row| fold(&mut row.iter().copied(), h));
            fold(&mut rows, v)
        }
        GridOrder::ColumnsFirst => {
            let mut columns = (0..cols).map(|j| fold(&mut g.cells.iter().map(|row| row[j]), v));
            fold(&mut columns, h)
        }
    }
}

/// Evaluates a grid in the requested order, left-nesting both tensors, and
/// confirms the other order gives the same cell.
pub fn eval_grid(x: &DDStructure, g: &GridExpr, order: GridOrder) -> Result<usize, DdError> {
    let cols = g.cells.first().map_or(0, Vec::len);
    if cols == 0 || g.cells.iter().any(|row| row.len() != cols) {
        return Err(DdError::ShapeMismatch("grid must be a non-empty rectangle".into()));
    }
    let bound = match g.kind {
        GridKind::Objects => x.carrier().object_count(),
        GridKind::Morphisms => x.carrier().morphism_count(),
    };
    if let Some(&bad) = g.cells.iter().flatten().find(|&&i| i >= bound) {
        return Err(DdError::ShapeMismatch(format!("grid entry {bad} out of range")));
    }
    let rows = eval_in_order(x, g, GridOrder::RowsFirst);
    let columns = eval_in_order(x, g, GridOrder::ColumnsFirst);
    if rows != columns {
        return Err(DdError::OrderDisagreement { rows, columns });
    }
    Ok(match order {
        GridOrder::RowsFirst => rows,
        GridOrder::ColumnsFirst => columns,
    })
}

/// For all a, b, c, d: `R ∘ (α_{ab} / α_{cd}) = α_{a/c, b/d}` where `R` is
/// `1_a / γ_{bc} / 1_d` with associators inserted along the canonical path
/// `(a/b)/(c/d) -> ((a/b)/c)/d -> (a/(b/c))/d -> (a/(c/b))/d -> ((a/c)/b)/d -> (a/c)/(b/d)`.
pub fn check_alphakey(x: &DDStructure) -> Report {
    check_alphakey_with(x, |a, b| x.gamma(a, b).ok())
}

/// [`check_alphakey`] against an arbitrary braiding table, for localizing a
/// corrupted γ.
pub fn check_alphakey_with(x: &DDStructure, gamma: impl Fn(ObjId, ObjId) -> Option<MorId>) -> Report {
    let c = &**x.carrier();
    let vs = &x.vertical;
    let mut report = Report::new("alphakey");
    let id = |o| c.id(o);
    let obj: Vec<ObjId> = c.objects().collect();
    for &a in &obj {
        for &b in &obj {
            for &p in &obj {
                for &d in &obj {
                    let leg = || -> Option<(MorId, MorId)> {
                        let top = x.vm(x.alpha(a, b).ok()?, x.alpha(p, d).ok()?);
                        let path = [
                            vs.assoc(x.v(a, p), b, d),
                            x.vm(vs.assoc_inv(a, p, b)?, id(d)),
                            x.vm(x.vm(id(a), gamma(b, p)?), id(d)),
                            x.vm(vs.assoc(a, b, p), id(d)),
                            vs.assoc_inv(x.v(a, b), p, d)?,
                            top,
                        ];
                        Some((c.compose_all(&path)?, x.alpha(x.v(a, p), x.v(b, d)).ok()?))
                    };
                    let ok = matches!(leg(), Some((l, r)) if l == r);
                    report.require(ok, "alphakey", || format!("(a,b,c,d) = ({a},{b},{p},{d})"));
                }
            }
        }
    }
    report
}

/// Naturality of α and ᾱ in both arguments.
pub fn check_alpha_naturality(x: &DDStructure) -> Report {
    let c = &**x.carrier();
    let mut report = Report::new("alpha naturality");
    for f in c.morphism_ids() {
        for g in c.morphism_ids() {
            let (fd, fc, gd, gc) = (c.dom(f), c.cod(f), c.dom(g), c.cod(g));
            let sq = |to: Result<MorId, DdError>, from: Result<MorId, DdError>, tensored: MorId| match (to, from) {
                (Ok(t), Ok(s)) => {
                    c.compose(t, x.hm(f, g)).is_some() && c.compose(t, x.hm(f, g)) == c.compose(tensored, s)
                }
                _ => false,
            };
            report.require(
                sq(x.alpha(fc, gc), x.alpha(fd, gd), x.vm(f, g)),
                "α naturality",
                || format!("at (f,g) = ({f},{g})"),
            );
            report.require(
                sq(x.alpha_bar(fc, gc), x.alpha_bar(fd, gd), x.vm(g, f)),
                "ᾱ naturality",
                || format!("at (f,g) = ({f},{g})"),
            );
        }
    }
    report
}

/// `check_dd` followed by `check_braided` on the standard braiding.
pub fn check_dd_braided(x: &DDStructure) -> Report {
    let mut report = check_dd(x);
    if !report.passed() {
        return report;
    }
    match x.standard_braiding() {
        Ok(b) => report.absorb("standard braiding", check_braided(&b)),
        Err(e) => report.push("standard braiding", e.to_string()),
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    fn strict_discrete_z2() -> DDStructure {
        let c = Arc::new(FinCategory::discrete(2));
        let add = vec![0, 1, 1, 0];
        let v = MonoidalStructure::strict(c.clone(), add.clone(), add.clone(), 0).unwrap();
        let h = MonoidalStructure::strict(c, add.clone(), add, 0).unwrap();
        DDStructure::new(v, h).unwrap()
    }

    #[test]
    fn strict_discrete_passes_everything() {
        let x = strict_discrete_z2();
        assert!(check_dd(&x).passed());
        assert!(check_alphakey(&x).passed());
        assert!(check_alpha_naturality(&x).passed());
        let b = x.to_braided().unwrap();
        assert!(b.braiding.iter().all(|&g| x.carrier().is_identity(g)));
        assert!(check_braided(&b).passed());
    }

    #[test]
    fn alpha_is_identity_when_strict() {
        let x = strict_discrete_z2();
        for a in 0..2 {
            for b in 0..2 {
                assert!(x.carrier().is_identity(x.alpha(a, b).unwrap()));
            }
        }
    }

    #[test]
    fn altered_tau_on_discrete_is_rejected() {
        let x = strict_discrete_z2();
        let mut v = x.vertical.clone();
        v.left_unit[0] = 1;
        let report = check_dd(&DDStructure::new(v, x.horizontal.clone()).unwrap());
        assert!(report.has_axiom("vertical: left unit typing"));
    }

    #[test]
    fn grid_with_units_reads_as_vertical_tensor() {
        let x = strict_discrete_z2();
        for a in 0..2 {
            for b in 0..2 {
                let g = GridExpr {
                    kind: GridKind::Objects,
                    cells: vec![vec![a, 0], vec![0, b]],
                };
                assert_eq!(eval_grid(&x, &g, GridOrder::RowsFirst).unwrap(), x.v(a, b));
                assert_eq!(eval_grid(&x, &g, GridOrder::ColumnsFirst).unwrap(), x.v(a, b));
            }
        }
    }

    #[test]
    fn ragged_grid_is_shape_mismatch() {
        let g = GridExpr {
            kind: GridKind::Objects,
            cells: vec![vec![0, 1], vec![0]],
        };
        assert!(matches!(
            eval_grid(&strict_discrete_z2(), &g, GridOrder::RowsFirst),
            Err(DdError::ShapeMismatch(_))
        ));
    }
}
