//! Weak maps `(F, v, h, η)` between DD structures, their transformations, the
//! reconstruction of `h` from `v`, and U on 1- and 2-cells.

use std::sync::Arc;

use thiserror::Error;

use crate::ddcat::{DDStructure, DdError};
use crate::fincat::{advance, check_functor, enumerate_functors, Functor, MorId, ObjId};
use crate::monoidal::{
    check_braided_functor, check_monoidal_functor, check_monoidal_transformation, compose_monoidal_functors,
    is_monoidal_constraint, MonoidalError, MonoidalFunctorData, MonoidalStructure, MonoidalTransformationData,
};
use crate::report::Report;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WeakMapError {
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("not invertible: {0}")]
    NotInvertible(String),
    #[error("braid axiom fails at ({x}, {y})")]
    BraidAxiomViolation { x: ObjId, y: ObjId },
    #[error("precondition unmet: {0}")]
    Precondition(String),
    #[error(transparent)]
    Dd(#[from] DdError),
    #[error(transparent)]
    Monoidal(#[from] MonoidalError),
}

/// The vertical and horizontal monoidal structures of both endpoints, shared
/// between every map of a hom.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hom {
    pub source: Arc<DDStructure>,
    pub target: Arc<DDStructure>,
    pub source_v: Arc<MonoidalStructure>,
    pub source_h: Arc<MonoidalStructure>,
    pub target_v: Arc<MonoidalStructure>,
    pub target_h: Arc<MonoidalStructure>,
}

impl Hom {
    pub fn new(source: Arc<DDStructure>, target: Arc<DDStructure>) -> Self {
        Hom {
            source_v: Arc::new(source.vertical.clone()),
            source_h: Arc::new(source.horizontal.clone()),
            target_v: Arc::new(target.vertical.clone()),
            target_h: Arc::new(target.horizontal.clone()),
            source,
            target,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DDWeakMap {
    pub hom: Arc<Hom>,
    pub functor: Functor,
    /// `v_{a,b} : Fa/Fb -> F(a/b)`, indexed `a * n + b`.
    pub v: Vec<MorId>,
    /// `h_{a,b} : Fa∥Fb -> F(a∥b)`, indexed `a * n + b`.
    pub h: Vec<MorId>,
    pub eta: MorId,
}

impl DDWeakMap {
    pub fn new(
        hom: Arc<Hom>,
        functor: Functor,
        v: Vec<MorId>,
        h: Vec<MorId>,
        eta: MorId,
    ) -> Result<Self, WeakMapError> {
        let n = hom.source.carrier().object_count();
        if functor.source != *hom.source.carrier() || functor.target != *hom.target.carrier() {
            return Err(WeakMapError::ShapeMismatch(
                "functor endpoints differ from the DD carriers".into(),
            ));
        }
        if v.len() != n * n || h.len() != n * n {
            return Err(WeakMapError::ShapeMismatch(format!("v and h need {} entries", n * n)));
        }
        let m = hom.target.carrier().morphism_count();
        if v.iter().chain(&h).chain([&eta]).any(|&f| f >= m) {
            return Err(WeakMapError::ShapeMismatch(
                "constraint references a missing morphism".into(),
            ));
        }
        Ok(DDWeakMap {
            hom,
            functor,
            v,
            h,
            eta,
        })
    }

    pub fn vertical(&self) -> MonoidalFunctorData {
        MonoidalFunctorData {
            source: self.hom.source_v.clone(),
            target: self.hom.target_v.clone(),
            functor: self.functor.clone(),
            tensor_constraint: self.v.clone(),
            unit_constraint: self.eta,
        }
    }

    pub fn horizontal(&self) -> MonoidalFunctorData {
        MonoidalFunctorData {
            source: self.hom.source_h.clone(),
            target: self.hom.target_h.clone(),
            functor: self.functor.clone(),
            tensor_constraint: self.h.clone(),
            unit_constraint: self.eta,
        }
    }

    fn n(&self) -> usize {
        self.hom.source.carrier().object_count()
    }

    pub fn v_at(&self, a: ObjId, b: ObjId) -> MorId {
        self.v[a * self.n() + b]
    }

    pub fn h_at(&self, a: ObjId, b: ObjId) -> MorId {
        self.h[a * self.n() + b]
    }
}

/// `v_{a∥b, c∥d} ∘ (h_{ab} / h_{cd}) = h_{a/c, b/d} ∘ (v_{ac} ∥ v_{bd})`.
pub fn check_interaction(m: &DDWeakMap) -> Report {
    let (x, y) = (&*m.hom.source, &*m.hom.target);
    let e = &**y.carrier();
    let mut report = Report::new("interaction");
    let objs: Vec<ObjId> = x.carrier().objects().collect();
    for &a in &objs {
        for &b in &objs {
            for &c in &objs {
                for &d in &objs {
                    let lhs = e.compose(m.v_at(x.h(a, b), x.h(c, d)), y.vm(m.h_at(a, b), m.h_at(c, d)));
                    let rhs = e.compose(m.h_at(x.v(a, c), x.v(b, d)), y.hm(m.v_at(a, c), m.v_at(b, d)));
                    report.require(lhs.is_some() && lhs == rhs, "interaction", || {
                        format!("(a,b,c,d) = ({a},{b},{c},{d})")
                    });
                }
            }
        }
    }
    report
}

/// Vertical and horizontal monoidal-functor axioms with the shared η, plus the
/// interaction axiom.
pub fn check_weak_map(m: &DDWeakMap) -> Report {
    let mut report = Report::new("weak map");
    report.absorb("vertical", check_monoidal_functor(&m.vertical()));
    report.absorb("horizontal", check_monoidal_functor(&m.horizontal()));
    if report.passed() {
        report.extend(check_interaction(m));
    }
    report
}

/// The braided-functor square for `(F, v)` with respect to the standard
/// braidings. Reports an unmet precondition when `m` is not a weak map.
pub fn check_map_braided(m: &DDWeakMap) -> Report {
    let mut report = Report::new("braided weak map");
    let pre = check_weak_map(m);
    if !pre.passed() {
        report.push(
            "precondition",
            format!("not a weak map: {}", pre.failed_axioms().join(", ")),
        );
        return report;
    }
    match (m.hom.source.to_braided(), m.hom.target.to_braided()) {
        (Ok(src), Ok(tgt)) => report.extend(check_braided_functor(&m.vertical(), &src, &tgt)),
        (Err(e), _) | (_, Err(e)) => report.push("precondition", e.to_string()),
    }
    report
}

fn reconstruct_with(hom: &Hom, functor: &Functor, v: &[MorId], bar: bool) -> Result<Vec<MorId>, WeakMapError> {
    let (x, y) = (&*hom.source, &*hom.target);
    let e = &**y.carrier();
    let n = x.carrier().object_count();
    let mut h = Vec::with_capacity(n * n);
    for a in 0..n {
        for b in 0..n {
            let (fa, fb) = (functor.obj(a), functor.obj(b));
            let (src_leg, vv, tgt_leg) = if bar {
                (x.alpha_bar(a, b)?, v[b * n + a], y.alpha_bar(fa, fb)?)
            } else {
                (x.alpha(a, b)?, v[a * n + b], y.alpha(fa, fb)?)
            };
            let inv = e.inverse(functor.mor(src_leg)).ok_or_else(|| {
                WeakMapError::NotInvertible(format!("F applied to the Eckmann–Hilton map at ({a},{b})"))
            })?;
            let hab = e
                .compose_all(&[inv, vv, tgt_leg])
                .ok_or_else(|| WeakMapError::ShapeMismatch(format!("reconstructed h({a},{b}) is ill-typed")))?;
            h.push(hab);
        }
    }
    Ok(h)
}

/// `h_{ab} = (Fα_{ab})⁻¹ ∘ v_{ab} ∘ α_{Fa,Fb}`.
pub fn reconstruct_h(hom: &Hom, functor: &Functor, v: &[MorId]) -> Result<Vec<MorId>, WeakMapError> {
    reconstruct_with(hom, functor, v, false)
}

/// `h_{ab} = (Fᾱ_{ab})⁻¹ ∘ v_{ba} ∘ ᾱ_{Fa,Fb}`.
pub fn reconstruct_h_bar(hom: &Hom, functor: &Functor, v: &[MorId]) -> Result<Vec<MorId>, WeakMapError> {
    reconstruct_with(hom, functor, v, true)
}

/// Builds `h` from `v` and certifies the result, or returns the first pair
/// failing the braid axiom.
pub fn promote_to_weak_map(hom: Arc<Hom>, d: &MonoidalFunctorData) -> Result<DDWeakMap, WeakMapError> {
    let pre = check_monoidal_functor(d);
    if !pre.passed() {
        return Err(WeakMapError::Precondition(format!(
            "not vertically monoidal: {}",
            pre.failed_axioms().join(", ")
        )));
    }
    let src = hom.source.to_braided()?;
    let tgt = hom.target.to_braided()?;
    let square = check_braided_functor(d, &src, &tgt);
    if let Some(first) = square.violations.first() {
        let (x, y) = parse_pair(&first.witness).unwrap_or((0, 0));
        return Err(WeakMapError::BraidAxiomViolation { x, y });
    }
    let h = reconstruct_h(&hom, &d.functor, &d.tensor_constraint)?;
    let m = DDWeakMap::new(
        hom,
        d.functor.clone(),
        d.tensor_constraint.clone(),
        h,
        d.unit_constraint,
    )?;
    let cert = check_weak_map(&m);
    if !cert.passed() {
        return Err(WeakMapError::Precondition(format!("promotion did not certify: {cert}")));
    }
    Ok(m)
}

/// Reads `(x,y) = (i,j)` witnesses produced by the braided square check.
fn parse_pair(witness: &str) -> Option<(ObjId, ObjId)> {
    let inner = witness.rsplit_once('(')?.1.trim_end_matches(')');
    let (a, b) = inner.split_once(',')?;
    Some((a.trim().parse().ok()?, b.trim().parse().ok()?))
}

/// U on 1-cells: the underlying vertical monoidal functor.
pub fn u_on_map(m: &DDWeakMap) -> MonoidalFunctorData {
    m.vertical()
}

pub fn identity_weak_map(x: Arc<DDStructure>) -> DDWeakMap {
    let hom = Arc::new(Hom::new(x.clone(), x));
    let v = MonoidalFunctorData::identity(hom.source_v.clone());
    let h = MonoidalFunctorData::identity(hom.source_h.clone());
    DDWeakMap {
        functor: v.functor,
        v: v.tensor_constraint,
        h: h.tensor_constraint,
        eta: v.unit_constraint,
        hom,
    }
}

/// `n ∘ m`, composing `v`, `h` and `η` as monoidal functors.
pub fn compose_weak_maps(n: &DDWeakMap, m: &DDWeakMap) -> Result<DDWeakMap, WeakMapError> {
    if m.hom.target != n.hom.source {
        return Err(WeakMapError::ShapeMismatch(
            "compose_weak_maps: endpoints do not meet".into(),
        ));
    }
    let v = compose_monoidal_functors(&n.vertical(), &m.vertical())?;
    let h = compose_monoidal_functors(&n.horizontal(), &m.horizontal())?;
    let hom = Arc::new(Hom::new(m.hom.source.clone(), n.hom.target.clone()));
    DDWeakMap::new(
        hom,
        v.functor,
        v.tensor_constraint,
        h.tensor_constraint,
        v.unit_constraint,
    )
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DDTransformation {
    pub source: DDWeakMap,
    pub target: DDWeakMap,
    pub components: Vec<MorId>,
}

impl DDTransformation {
    pub fn new(source: DDWeakMap, target: DDWeakMap, components: Vec<MorId>) -> Result<Self, WeakMapError> {
        if source.hom != target.hom {
            return Err(WeakMapError::ShapeMismatch(
                "transformation between maps of different homs".into(),
            ));
        }
        if components.len() != source.hom.source.carrier().object_count() {
            return Err(WeakMapError::ShapeMismatch("one component per source object".into()));
        }
        Ok(DDTransformation {
            source,
            target,
            components,
        })
    }

    pub fn identity(m: &DDWeakMap) -> Self {
        let e = m.hom.target.carrier();
        let components = m
            .hom
            .source
            .carrier()
            .objects()
            .map(|x| e.id(m.functor.obj(x)))
            .collect();
        DDTransformation {
            source: m.clone(),
            target: m.clone(),
            components,
        }
    }
}

fn as_monoidal(
    source: MonoidalFunctorData,
    target: MonoidalFunctorData,
    components: &[MorId],
) -> Result<MonoidalTransformationData, Report> {
    MonoidalTransformationData::new(source, target, components.to_vec()).map_err(|e| {
        let mut r = Report::new("monoidal transformation");
        r.push("shape", e.to_string());
        r
    })
}

/// U on 2-cells: the transformation with respect to the vertical structure.
pub fn u_on_transformation(t: &DDTransformation) -> MonoidalTransformationData {
    as_monoidal(t.source.vertical(), t.target.vertical(), &t.components).expect("validated at construction")
}

/// Passes iff θ is vertically monoidal.
pub fn check_transformation(t: &DDTransformation) -> Report {
    match as_monoidal(t.source.vertical(), t.target.vertical(), &t.components) {
        Ok(d) => check_monoidal_transformation(&d),
        Err(r) => r,
    }
}

/// The horizontal monoidality squares `θ_{a∥b} ∘ h^F = h^G ∘ (θ_a ∥ θ_b)` and
/// `θ_1 ∘ η^F = η^G`.
pub fn derive_horizontal(t: &DDTransformation) -> Report {
    match as_monoidal(t.source.horizontal(), t.target.horizontal(), &t.components) {
        Ok(d) => {
            let mut r = check_monoidal_transformation(&d);
            r.subject = "horizontal monoidal transformation".into();
            r
        }
        Err(r) => r,
    }
}

/// Every monoidal functor between two monoidal structures: each functor, each
/// typed `v` table and each typed `η`, filtered by the axioms.
pub fn enumerate_monoidal_functors(
    source: &Arc<MonoidalStructure>,
    target: &Arc<MonoidalStructure>,
) -> Vec<MonoidalFunctorData> {
    enumerate_functors(&source.carrier, &target.carrier)
        .into_iter()
        .flat_map(|f| enumerate_monoidal_constraints(source, target, &f))
        .collect()
}

/// Every `(v, η)` making a fixed functor monoidal.
pub fn enumerate_monoidal_constraints(
    source: &Arc<MonoidalStructure>,
    target: &Arc<MonoidalStructure>,
    functor: &Functor,
) -> Vec<MonoidalFunctorData> {
    let e = &target.carrier;
    let n = source.n();
    let slots: Vec<Vec<MorId>> = (0..n * n)
        .map(|i| {
            let (x, y) = (i / n, i % n);
            e.hom(
                target.obj(functor.obj(x), functor.obj(y)),
                functor.obj(source.obj(x, y)),
            )
        })
        .chain(std::iter::once(e.hom(target.unit, functor.obj(source.unit))))
        .collect();
    let mut out = Vec::new();
    if slots.iter().any(Vec::is_empty) {
        return out;
    }
    if !check_functor(functor).passed() {
        return out;
    }
    let mut pick = vec![0usize; slots.len()];
    let mut d = MonoidalFunctorData {
        source: source.clone(),
        target: target.clone(),
        functor: functor.clone(),
        tensor_constraint: vec![0; n * n],
        unit_constraint: 0,
    };
    loop {
        for (i, (&p, s)) in pick.iter().zip(&slots).enumerate() {
            if i < n * n {
                d.tensor_constraint[i] = s[p];
            } else {
                d.unit_constraint = s[p];
            }
        }
        if is_monoidal_constraint(&d) {
            out.push(d.clone());
        }
        if !advance(&mut pick, |i| slots[i].len()) {
            break;
        }
    }
    out
}

/// Vertical monoidal functors satisfying the braided square for the standard
/// braidings.
pub fn enumerate_braided_functors(hom: &Hom) -> Result<Vec<MonoidalFunctorData>, WeakMapError> {
    let src = hom.source.to_braided()?;
    let tgt = hom.target.to_braided()?;
    Ok(enumerate_monoidal_functors(&hom.source_v, &hom.target_v)
        .into_iter()
        .filter(|d| check_braided_functor(d, &src, &tgt).passed())
        .collect())
}

/// Every weak map of a hom: pairs of a vertical and a horizontal monoidal
/// functor with the same `F` and `η`, filtered by the interaction axiom.
pub fn enumerate_weak_maps(hom: &Arc<Hom>) -> Vec<DDWeakMap> {
    let vs = enumerate_monoidal_functors(&hom.source_v, &hom.target_v);
    let hs = enumerate_monoidal_functors(&hom.source_h, &hom.target_h);
    let mut out = Vec::new();
    for v in &vs {
        for h in hs
            .iter()
            .filter(|h| h.functor == v.functor && h.unit_constraint == v.unit_constraint)
        {
            let m = DDWeakMap {
                hom: hom.clone(),
                functor: v.functor.clone(),
                v: v.tensor_constraint.clone(),
                h: h.tensor_constraint.clone(),
                eta: v.unit_constraint,
            };
            if check_interaction(&m).passed() {
                out.push(m);
            }
        }
    }
    out
}

/// Natural transformations `F ⇒ G`, by enumeration of typed component tables.
pub fn enumerate_components(f: &Functor, g: &Functor) -> Vec<Vec<MorId>> {
    let (c, e) = (&f.source, &f.target);
    let slots: Vec<Vec<MorId>> = c.objects().map(|x| e.hom(f.obj(x), g.obj(x))).collect();
    if slots.iter().any(Vec::is_empty) {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut pick = vec![0usize; slots.len()];
    loop {
        let comps: Vec<MorId> = pick.iter().zip(&slots).map(|(&i, s)| s[i]).collect();
        let natural = c
            .morphism_ids()
            .all(|k| e.compose(comps[c.cod(k)], f.mor(k)) == e.compose(g.mor(k), comps[c.dom(k)]));
        if natural {
            out.push(comps);
        }
        if !advance(&mut pick, |i| slots[i].len()) {
            break;
        }
    }
    out
}

/// Component tables of the vertically monoidal transformations `m ⇒ n`.
pub fn enumerate_vertical_transformations(m: &DDWeakMap, n: &DDWeakMap) -> Vec<DDTransformation> {
    enumerate_components(&m.functor, &n.functor)
        .into_iter()
        .map(|c| DDTransformation {
            source: m.clone(),
            target: n.clone(),
            components: c,
        })
        .filter(|t| check_transformation(t).passed())
        .collect()
}

/// Component tables that are both vertically and horizontally monoidal.
pub fn enumerate_dd_transformations(m: &DDWeakMap, n: &DDWeakMap) -> Vec<DDTransformation> {
    enumerate_components(&m.functor, &n.functor)
        .into_iter()
        .map(|c| DDTransformation {
            source: m.clone(),
            target: n.clone(),
            components: c,
        })
        .filter(|t| check_transformation(t).passed() && derive_horizontal(t).passed())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::Pointed;

    fn pointed(p: usize, q: usize) -> Arc<DDStructure> {
        Arc::new(Pointed::cyclic(2, 2).member(&[p], &[q]).unwrap())
    }

    #[test]
    fn identity_weak_map_passes_everything() {
        let m = identity_weak_map(pointed(1, 0));
        assert!(check_weak_map(&m).passed());
        assert!(check_map_braided(&m).passed());
        assert_eq!(reconstruct_h(&m.hom, &m.functor, &m.v).unwrap(), m.h);
        let t = DDTransformation::identity(&m);
        assert!(check_transformation(&t).passed());
        assert!(derive_horizontal(&t).passed());
    }

    #[test]
    fn identity_promotes_to_identity() {
        let m = identity_weak_map(pointed(0, 1));
        assert_eq!(promote_to_weak_map(m.hom.clone(), &u_on_map(&m)).unwrap(), m);
    }

    #[test]
    fn composite_with_identity_is_original() {
        let m = identity_weak_map(pointed(1, 1));
        let maps = enumerate_weak_maps(&m.hom);
        assert!(maps.len() >= 2);
        for w in &maps {
            assert_eq!(&compose_weak_maps(&m, w).unwrap(), w);
            assert_eq!(&compose_weak_maps(w, &m).unwrap(), w);
        }
    }

    #[test]
    fn mutated_v_breaks_the_weak_map() {
        let mut m = identity_weak_map(pointed(1, 0));
        m.v[3] ^= 1;
        let report = check_weak_map(&m);
        assert!(!report.passed());
        assert!(check_map_braided(&m).has_axiom("precondition"));
    }

    #[test]
    fn parse_pair_reads_square_witnesses() {
        assert_eq!(parse_pair("(x,y) = (3,1)"), Some((3, 1)));
    }
}
