//! Monoidal and braided structures with fully tabulated constraints, monoidal
//! functors and monoidal transformations.
//!
//! Iterated tensors are left-nested. The unit constraints are called
//! `left_unit` and `right_unit`; the name λ is kept for distributive laws.

use std::sync::Arc;

use thiserror::Error;

use crate::fincat::{
    check_category, check_functor, check_nat_transform, compose_functors, product_category, FinCatError, FinCategory,
    Functor, MorId, NatTransform, ObjId,
};
use crate::report::Report;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MonoidalError {
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error(transparent)]
    Category(#[from] FinCatError),
}

fn shape(msg: impl Into<String>) -> MonoidalError {
    MonoidalError::ShapeMismatch(msg.into())
}

fn check_len(what: &str, got: usize, want: usize) -> Result<(), MonoidalError> {
    if got != want {
        return Err(shape(format!("{what} has {got} entries, expected {want}")));
    }
    Ok(())
}

fn check_range(what: &str, ids: &[usize], bound: usize) -> Result<(), MonoidalError> {
    match ids.iter().find(|&&i| i >= bound) {
        Some(i) => Err(shape(format!("{what} references {i}, only {bound} available"))),
        None => Ok(()),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonoidalStructure {
    pub carrier: Arc<FinCategory>,
    /// Functor out of `product_category(carrier, carrier)`.
    pub tensor: Functor,
    pub unit: ObjId,
    /// `(x⊗y)⊗z -> x⊗(y⊗z)`, indexed `(x * n + y) * n + z`.
    pub associator: Vec<MorId>,
    /// `1⊗x -> x`.
    pub left_unit: Vec<MorId>,
    /// `x⊗1 -> x`.
    pub right_unit: Vec<MorId>,
}

impl MonoidalStructure {
    /// `tensor_objects[x * n + y]` is `x⊗y`, `tensor_morphisms[f * m + g]` is `f⊗g`.
    pub fn new(
        carrier: Arc<FinCategory>,
        tensor_objects: Vec<ObjId>,
        tensor_morphisms: Vec<MorId>,
        unit: ObjId,
        associator: Vec<MorId>,
        left_unit: Vec<MorId>,
        right_unit: Vec<MorId>,
    ) -> Result<Self, MonoidalError> {
        let n = carrier.object_count();
        let m = carrier.morphism_count();
        check_len("associator", associator.len(), n * n * n)?;
        check_len("left_unit", left_unit.len(), n)?;
        check_len("right_unit", right_unit.len(), n)?;
        check_range("associator", &associator, m)?;
        check_range("left_unit", &left_unit, m)?;
        check_range("right_unit", &right_unit, m)?;
        if unit >= n {
            return Err(shape(format!("unit object {unit} out of range")));
        }
        let product = Arc::new(product_category(&carrier, &carrier));
        let tensor = Functor::new(product, carrier.clone(), tensor_objects, tensor_morphisms)?;
        Ok(MonoidalStructure {
            carrier,
            tensor,
            unit,
            associator,
            left_unit,
            right_unit,
        })
    }

    /// All constraints are identities.
    pub fn strict(
        carrier: Arc<FinCategory>,
        tensor_objects: Vec<ObjId>,
        tensor_morphisms: Vec<MorId>,
        unit: ObjId,
    ) -> Result<Self, MonoidalError> {
        let n = carrier.object_count();
        let mut associator = Vec::with_capacity(n * n * n);
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let i = tensor_objects.get(x * n + y).copied();
                    let xyz = i.and_then(|xy| tensor_objects.get(xy * n + z).copied());
                    associator.push(carrier.id(xyz.ok_or_else(|| shape("tensor_objects too short"))?));
                }
            }
        }
        let left_unit = (0..n).map(|x| carrier.id(x)).collect::<Vec<_>>();
        let right_unit = left_unit.clone();
        Self::new(
            carrier,
            tensor_objects,
            tensor_morphisms,
            unit,
            associator,
            left_unit,
            right_unit,
        )
    }

    pub fn n(&self) -> usize {
        self.carrier.object_count()
    }

    pub fn obj(&self, x: ObjId, y: ObjId) -> ObjId {
        self.tensor.obj(x * self.n() + y)
    }

    pub fn mor(&self, f: MorId, g: MorId) -> MorId {
        self.tensor.mor(f * self.carrier.morphism_count() + g)
    }

    pub fn assoc(&self, x: ObjId, y: ObjId, z: ObjId) -> MorId {
        let n = self.n();
        self.associator[(x * n + y) * n + z]
    }

    pub fn lunit(&self, x: ObjId) -> MorId {
        self.left_unit[x]
    }

    pub fn runit(&self, x: ObjId) -> MorId {
        self.right_unit[x]
    }

    /// `1_x ⊗ f`.
    pub fn lwhisker(&self, x: ObjId, f: MorId) -> MorId {
        self.mor(self.carrier.id(x), f)
    }

    /// `f ⊗ 1_x`.
    pub fn rwhisker(&self, f: MorId, x: ObjId) -> MorId {
        self.mor(f, self.carrier.id(x))
    }

    /// Inverse of `assoc(x, y, z)`; `None` when the component is not an iso.
    pub fn assoc_inv(&self, x: ObjId, y: ObjId, z: ObjId) -> Option<MorId> {
        self.carrier.inverse(self.assoc(x, y, z))
    }

    pub fn is_strict(&self) -> bool {
        let c = &self.carrier;
        self.associator
            .iter()
            .chain(&self.left_unit)
            .chain(&self.right_unit)
            .all(|&f| c.is_identity(f))
    }
}

/// Composite of a chain in mathematical order; `None` if ill-typed.
fn chain(c: &FinCategory, parts: &[MorId]) -> Option<MorId> {
    c.compose_all(parts)
}

fn typed(c: &FinCategory, f: MorId, dom: ObjId, cod: ObjId) -> bool {
    c.dom(f) == dom && c.cod(f) == cod
}

/// Component typing, invertibility, naturality, pentagon and triangle.
pub fn check_monoidal(s: &MonoidalStructure) -> Report {
    let c = &*s.carrier;
    let mut report = Report::new("monoidal structure");
    report.absorb("carrier", check_category(c));
    report.absorb("tensor", check_functor(&s.tensor));
    if !report.passed() {
        return report;
    }
    let t = |x, y| s.obj(x, y);
    let one = s.unit;
    for x in c.objects() {
        for y in c.objects() {
            for z in c.objects() {
                let a = s.assoc(x, y, z);
                report.require(typed(c, a, t(t(x, y), z), t(x, t(y, z))), "associator typing", || {
                    format!("a({x},{y},{z}) = {}", c.describe(a))
                });
                report.require(c.is_iso(a), "associator invertibility", || format!("a({x},{y},{z})"));
            }
        }
        let l = s.lunit(x);
        report.require(typed(c, l, t(one, x), x), "left unit typing", || {
            format!("l({x}) = {}", c.describe(l))
        });
        report.require(c.is_iso(l), "left unit invertibility", || format!("l({x})"));
        let r = s.runit(x);
        report.require(typed(c, r, t(x, one), x), "right unit typing", || {
            format!("r({x}) = {}", c.describe(r))
        });
        report.require(c.is_iso(r), "right unit invertibility", || format!("r({x})"));
    }
    if !report.passed() {
        return report;
    }
    let m = |f, g| s.mor(f, g);
    for f in c.morphism_ids() {
        let (fd, fc) = (c.dom(f), c.cod(f));
        report.require(
            c.compose(s.lunit(fc), s.lwhisker(one, f)) == c.compose(f, s.lunit(fd)),
            "left unit naturality",
            || format!("at {}", c.describe(f)),
        );
        report.require(
            c.compose(s.runit(fc), s.rwhisker(f, one)) == c.compose(f, s.runit(fd)),
            "right unit naturality",
            || format!("at {}", c.describe(f)),
        );
        for g in c.morphism_ids() {
            for h in c.morphism_ids() {
                let lhs = c.compose(s.assoc(fc, c.cod(g), c.cod(h)), m(m(f, g), h));
                let rhs = c.compose(m(f, m(g, h)), s.assoc(fd, c.dom(g), c.dom(h)));
                report.require(lhs == rhs, "associator naturality", || {
                    format!("at (f,g,h) = ({f},{g},{h})")
                });
            }
        }
    }
    for w in c.objects() {
        for x in c.objects() {
            for y in c.objects() {
                for z in c.objects() {
                    let lhs = chain(c, &[s.assoc(w, x, t(y, z)), s.assoc(t(w, x), y, z)]);
                    let rhs = chain(
                        c,
                        &[
                            s.lwhisker(w, s.assoc(x, y, z)),
                            s.assoc(w, t(x, y), z),
                            s.rwhisker(s.assoc(w, x, y), z),
                        ],
                    );
                    report.require(lhs.is_some() && lhs == rhs, "pentagon", || {
                        format!("(w,x,y,z) = ({w},{x},{y},{z})")
                    });
                }
            }
        }
    }
    for x in c.objects() {
        for y in c.objects() {
            let lhs = chain(c, &[s.lwhisker(x, s.lunit(y)), s.assoc(x, one, y)]);
            let rhs = s.rwhisker(s.runit(x), y);
            report.require(lhs == Some(rhs), "triangle", || format!("(x,y) = ({x},{y})"));
        }
    }
    report
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BraidedStructure {
    pub base: MonoidalStructure,
    /// `x⊗y -> y⊗x`, indexed `x * n + y`.
    pub braiding: Vec<MorId>,
}

impl BraidedStructure {
    pub fn new(base: MonoidalStructure, braiding: Vec<MorId>) -> Result<Self, MonoidalError> {
        let n = base.n();
        check_len("braiding", braiding.len(), n * n)?;
        check_range("braiding", &braiding, base.carrier.morphism_count())?;
        Ok(BraidedStructure { base, braiding })
    }

    pub fn gamma(&self, x: ObjId, y: ObjId) -> MorId {
        self.braiding[x * self.base.n() + y]
    }

    /// `γ'_{x,y} = γ_{y,x}⁻¹`; `None` if some component is not invertible.
    pub fn reverse(&self) -> Option<BraidedStructure> {
        let n = self.base.n();
        let c = &self.base.carrier;
        let braiding = (0..n * n)
            .map(|i| c.inverse(self.gamma(i % n, i / n)))
            .collect::<Option<Vec<_>>>()?;
        Some(BraidedStructure {
            base: self.base.clone(),
            braiding,
        })
    }
}

/// Typing, invertibility, naturality and both hexagons of the braiding. The
/// base structure is checked first.
pub fn check_braided(b: &BraidedStructure) -> Report {
    let s = &b.base;
    let c = &*s.carrier;
    let mut report = Report::new("braided structure");
    report.absorb("base", check_monoidal(s));
    if !report.passed() {
        return report;
    }
    let t = |x, y| s.obj(x, y);
    for x in c.objects() {
        for y in c.objects() {
            let g = b.gamma(x, y);
            report.require(typed(c, g, t(x, y), t(y, x)), "braiding typing", || {
                format!("γ({x},{y}) = {}", c.describe(g))
            });
            report.require(c.is_iso(g), "braiding invertibility", || format!("γ({x},{y})"));
        }
    }
    if !report.passed() {
        return report;
    }
    for f in c.morphism_ids() {
        for g in c.morphism_ids() {
            let lhs = c.compose(b.gamma(c.cod(f), c.cod(g)), s.mor(f, g));
            let rhs = c.compose(s.mor(g, f), b.gamma(c.dom(f), c.dom(g)));
            report.require(lhs == rhs, "braiding naturality", || format!("at (f,g) = ({f},{g})"));
        }
    }
    let inv = |f: Option<MorId>| f.and_then(|f| c.inverse(f));
    for x in c.objects() {
        for y in c.objects() {
            for z in c.objects() {
                let lhs = chain(c, &[s.assoc(y, z, x), b.gamma(x, t(y, z)), s.assoc(x, y, z)]);
                let rhs = chain(
                    c,
                    &[
                        s.lwhisker(y, b.gamma(x, z)),
                        s.assoc(y, x, z),
                        s.rwhisker(b.gamma(x, y), z),
                    ],
                );
                report.require(lhs.is_some() && lhs == rhs, "hexagon 1", || {
                    format!("(x,y,z) = ({x},{y},{z})")
                });

                let (a_zxy, a_xyz, a_xzy) = (
                    inv(Some(s.assoc(z, x, y))),
                    inv(Some(s.assoc(x, y, z))),
                    inv(Some(s.assoc(x, z, y))),
                );
                let lhs = a_zxy
                    .zip(a_xyz)
                    .and_then(|(p, q)| chain(c, &[p, b.gamma(t(x, y), z), q]));
                let rhs =
                    a_xzy.and_then(|p| chain(c, &[s.rwhisker(b.gamma(x, z), y), p, s.lwhisker(x, b.gamma(y, z))]));
                report.require(lhs.is_some() && lhs == rhs, "hexagon 2", || {
                    format!("(x,y,z) = ({x},{y},{z})")
                });
            }
        }
    }
    report
}

/// A weak monoidal functor `(F, v, e)` with `v_{x,y} : Fx⊗Fy -> F(x⊗y)` and
/// `e : 1 -> F1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonoidalFunctorData {
    pub source: Arc<MonoidalStructure>,
    pub target: Arc<MonoidalStructure>,
    pub functor: Functor,
    /// Indexed `x * n + y` over source objects.
    pub tensor_constraint: Vec<MorId>,
    pub unit_constraint: MorId,
}

impl MonoidalFunctorData {
    pub fn new(
        source: Arc<MonoidalStructure>,
        target: Arc<MonoidalStructure>,
        functor: Functor,
        tensor_constraint: Vec<MorId>,
        unit_constraint: MorId,
    ) -> Result<Self, MonoidalError> {
        if functor.source != source.carrier || functor.target != target.carrier {
            return Err(shape("functor endpoints differ from the monoidal carriers"));
        }
        let n = source.n();
        check_len("tensor_constraint", tensor_constraint.len(), n * n)?;
        check_range("tensor_constraint", &tensor_constraint, target.carrier.morphism_count())?;
        check_range("unit_constraint", &[unit_constraint], target.carrier.morphism_count())?;
        Ok(MonoidalFunctorData {
            source,
            target,
            functor,
            tensor_constraint,
            unit_constraint,
        })
    }

    pub fn identity(s: Arc<MonoidalStructure>) -> Self {
        let c = &s.carrier;
        let n = s.n();
        let tensor_constraint = (0..n * n).map(|i| c.id(s.obj(i / n, i % n))).collect();
        MonoidalFunctorData {
            functor: Functor::identity(c.clone()),
            unit_constraint: c.id(s.unit),
            tensor_constraint,
            source: s.clone(),
            target: s,
        }
    }

    pub fn v(&self, x: ObjId, y: ObjId) -> MorId {
        self.tensor_constraint[x * self.source.n() + y]
    }
}

/// Functoriality, typing, invertibility, naturality of `v`, and the
/// associativity and unit coherence axioms.
pub fn check_monoidal_functor(d: &MonoidalFunctorData) -> Report {
    let mut report = Report::new("monoidal functor");
    report.absorb("functor", check_functor(&d.functor));
    monoidal_functor_axioms(d, report)
}

/// Pass/fail form of [`check_monoidal_functor`] that assumes the underlying
/// functor has already been checked.
pub fn is_monoidal_constraint(d: &MonoidalFunctorData) -> bool {
    monoidal_functor_axioms(d, Report::first_only("monoidal functor")).passed()
}

fn monoidal_functor_axioms(d: &MonoidalFunctorData, mut report: Report) -> Report {
    let (s, t) = (&*d.source, &*d.target);
    let (c, e) = (&*s.carrier, &*t.carrier);
    let f = &d.functor;
    if !report.passed() {
        return report;
    }
    let fo = |x| f.obj(x);
    for x in c.objects() {
        for y in c.objects() {
            let v = d.v(x, y);
            report.require(
                typed(e, v, t.obj(fo(x), fo(y)), fo(s.obj(x, y))),
                "tensor constraint typing",
                || format!("v({x},{y}) = {}", e.describe(v)),
            );
            report.require(e.is_iso(v), "tensor constraint invertibility", || format!("v({x},{y})"));
        }
    }
    let u = d.unit_constraint;
    report.require(typed(e, u, t.unit, fo(s.unit)), "unit constraint typing", || {
        format!("e = {}", e.describe(u))
    });
    report.require(e.is_iso(u), "unit constraint invertibility", || "e".to_string());
    if !report.passed() {
        return report;
    }
    for g in c.morphism_ids() {
        for h in c.morphism_ids() {
            let lhs = e.compose(f.mor(s.mor(g, h)), d.v(c.dom(g), c.dom(h)));
            let rhs = e.compose(d.v(c.cod(g), c.cod(h)), t.mor(f.mor(g), f.mor(h)));
            report.require(lhs == rhs, "tensor constraint naturality", || {
                format!("at (f,g) = ({g},{h})")
            });
        }
    }
    for x in c.objects() {
        for y in c.objects() {
            for z in c.objects() {
                let lhs = chain(
                    e,
                    &[
                        f.mor(s.assoc(x, y, z)),
                        d.v(s.obj(x, y), z),
                        t.rwhisker(d.v(x, y), fo(z)),
                    ],
                );
                let rhs = chain(
                    e,
                    &[
                        d.v(x, s.obj(y, z)),
                        t.lwhisker(fo(x), d.v(y, z)),
                        t.assoc(fo(x), fo(y), fo(z)),
                    ],
                );
                report.require(lhs.is_some() && lhs == rhs, "functor associativity", || {
                    format!("(x,y,z) = ({x},{y},{z})")
                });
            }
        }
        let lhs = chain(e, &[f.mor(s.lunit(x)), d.v(s.unit, x), t.rwhisker(u, fo(x))]);
        report.require(lhs == Some(t.lunit(fo(x))), "functor left unit", || format!("x = {x}"));
        let lhs = chain(e, &[f.mor(s.runit(x)), d.v(x, s.unit), t.lwhisker(fo(x), u)]);
        report.require(lhs == Some(t.runit(fo(x))), "functor right unit", || format!("x = {x}"));
    }
    report
}

/// `F(γ_{x,y}) ∘ v_{x,y} = v_{y,x} ∘ γ'_{Fx,Fy}` for every pair.
pub fn check_braided_functor(d: &MonoidalFunctorData, src: &BraidedStructure, tgt: &BraidedStructure) -> Report {
    let mut report = Report::new("braided functor");
    if src.base != *d.source || tgt.base != *d.target {
        report.push(
            "shape",
            "braided structures do not sit over the functor's monoidal structures",
        );
        return report;
    }
    let (c, e) = (&*d.source.carrier, &*d.target.carrier);
    let f = &d.functor;
    for x in c.objects() {
        for y in c.objects() {
            let lhs = e.compose(f.mor(src.gamma(x, y)), d.v(x, y));
            let rhs = e.compose(d.v(y, x), tgt.gamma(f.obj(x), f.obj(y)));
            report.require(lhs.is_some() && lhs == rhs, "braided square", || {
                format!("(x,y) = ({x},{y})")
            });
        }
    }
    report
}

/// `G ∘ F` with `v''_{x,y} = G(v^F_{x,y}) ∘ v^G_{Fx,Fy}` and `e'' = G(e^F) ∘ e^G`.
pub fn compose_monoidal_functors(
    g: &MonoidalFunctorData,
    f: &MonoidalFunctorData,
) -> Result<MonoidalFunctorData, MonoidalError> {
    if f.target != g.source {
        return Err(shape("compose_monoidal_functors: F's target is not G's source"));
    }
    let functor = compose_functors(&g.functor, &f.functor)?;
    let e = &g.target.carrier;
    let n = f.source.n();
    let gm = |m| g.functor.mor(m);
    let tensor_constraint = (0..n * n)
        .map(|i| {
            let (x, y) = (i / n, i % n);
            e.compose(gm(f.v(x, y)), g.v(f.functor.obj(x), f.functor.obj(y)))
                .ok_or_else(|| shape(format!("composite constraint at ({x},{y}) is ill-typed")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    let unit_constraint = e
        .compose(gm(f.unit_constraint), g.unit_constraint)
        .ok_or_else(|| shape("composite unit constraint is ill-typed"))?;
    Ok(MonoidalFunctorData {
        source: f.source.clone(),
        target: g.target.clone(),
        functor,
        tensor_constraint,
        unit_constraint,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonoidalTransformationData {
    pub source: MonoidalFunctorData,
    pub target: MonoidalFunctorData,
    pub components: NatTransform,
}

impl MonoidalTransformationData {
    pub fn new(
        source: MonoidalFunctorData,
        target: MonoidalFunctorData,
        components: Vec<MorId>,
    ) -> Result<Self, MonoidalError> {
        if source.source != target.source || source.target != target.target {
            return Err(shape("monoidal functors have different endpoints"));
        }
        let components = NatTransform::new(source.functor.clone(), target.functor.clone(), components)?;
        Ok(MonoidalTransformationData {
            source,
            target,
            components,
        })
    }

    pub fn identity(f: &MonoidalFunctorData) -> Self {
        MonoidalTransformationData {
            source: f.clone(),
            target: f.clone(),
            components: NatTransform::identity(&f.functor),
        }
    }

    pub fn at(&self, x: ObjId) -> MorId {
        self.components.at(x)
    }
}

/// Naturality, `θ_{x⊗y} ∘ v^F = v^G ∘ (θ_x ⊗ θ_y)` and `θ_1 ∘ e^F = e^G`.
pub fn check_monoidal_transformation(t: &MonoidalTransformationData) -> Report {
    let s = &*t.source.source;
    let tt = &*t.source.target;
    let (c, e) = (&*s.carrier, &*tt.carrier);
    let mut report = Report::new("monoidal transformation");
    report.absorb("transformation", check_nat_transform(&t.components));
    if !report.passed() {
        return report;
    }
    for x in c.objects() {
        for y in c.objects() {
            let lhs = e.compose(t.at(s.obj(x, y)), t.source.v(x, y));
            let rhs = e.compose(t.target.v(x, y), tt.mor(t.at(x), t.at(y)));
            report.require(lhs.is_some() && lhs == rhs, "tensor compatibility", || {
                format!("(x,y) = ({x},{y})")
            });
        }
    }
    let lhs = e.compose(t.at(s.unit), t.source.unit_constraint);
    report.require(lhs == Some(t.target.unit_constraint), "unit compatibility", || {
        format!("θ_1 = {}", e.describe(t.at(s.unit)))
    });
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    /// One object, endomorphisms Z/n, tensor = addition.
    fn cyclic(n: usize, assoc: MorId, lunit: MorId, runit: MorId) -> MonoidalStructure {
        let c = Arc::new(FinCategory::cyclic_group(n));
        let tm = (0..n * n).map(|i| (i / n + i % n) % n).collect();
        MonoidalStructure::new(c, vec![0], tm, 0, vec![assoc], vec![lunit], vec![runit]).unwrap()
    }

    fn discrete_z2() -> MonoidalStructure {
        let c = Arc::new(FinCategory::discrete(2));
        MonoidalStructure::strict(c, vec![0, 1, 1, 0], vec![0, 1, 1, 0], 0).unwrap()
    }

    #[test]
    fn strict_discrete_z2_passes() {
        assert!(check_monoidal(&discrete_z2()).passed());
    }

    #[test]
    fn nonzero_associator_on_z2_fails_pentagon() {
        let report = check_monoidal(&cyclic(2, 1, 0, 0));
        assert!(report.has_axiom("pentagon"));
    }

    #[test]
    fn zero_constraints_on_z2_pass() {
        assert!(check_monoidal(&cyclic(2, 0, 0, 0)).passed());
    }

    /// In this abelian one-object setting the pentagon reads a = 0 and the
    /// triangle reads l = r, so exactly the tables (0, u, u) pass.
    #[test]
    fn z3_constraint_enumeration_matches_oracle() {
        for a in 0..3 {
            for l in 0..3 {
                for r in 0..3 {
                    let expected = a == 0 && l == r;
                    assert_eq!(
                        check_monoidal(&cyclic(3, a, l, r)).passed(),
                        expected,
                        "a={a} l={l} r={r}"
                    );
                }
            }
        }
    }

    #[test]
    fn identity_braiding_on_strict_structure_passes() {
        let b = BraidedStructure::new(discrete_z2(), vec![0, 1, 1, 0]).unwrap();
        assert!(check_braided(&b).passed());
        assert!(check_braided(&b.reverse().unwrap()).passed());
    }

    #[test]
    fn identity_monoidal_functor_and_transformation_pass() {
        let s = Arc::new(discrete_z2());
        let f = MonoidalFunctorData::identity(s.clone());
        assert!(check_monoidal_functor(&f).passed());
        assert!(check_monoidal_transformation(&MonoidalTransformationData::identity(&f)).passed());
        let b = BraidedStructure::new((*s).clone(), vec![0, 1, 1, 0]).unwrap();
        assert!(check_braided_functor(&f, &b, &b).passed());
        let ff = compose_monoidal_functors(&f, &f).unwrap();
        assert_eq!(ff, f);
    }

    #[test]
    fn altered_theta_unit_fails_unit_compatibility() {
        let s = Arc::new(cyclic(2, 0, 0, 0));
        let f = MonoidalFunctorData::identity(s);
        let t = MonoidalTransformationData::new(f.clone(), f, vec![1]).unwrap();
        let report = check_monoidal_transformation(&t);
        assert!(report.has_axiom("unit compatibility"));
        // θ⊗θ = 0 in Z/2 so tensor compatibility also breaks: 1 + 0 != 0 + 0.
        assert!(report.has_axiom("tensor compatibility"));
    }

    #[test]
    fn strict_structure_reports_strict() {
        assert!(discrete_z2().is_strict());
        assert!(!cyclic(2, 0, 1, 1).is_strict());
    }
}
