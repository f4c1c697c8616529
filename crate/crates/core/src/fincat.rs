//! Finite categories, functors and natural transformations stored as lookup
//! tables. Every law is checked by exhaustive enumeration in ascending index
//! order, so violation reports are reproducible.

use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::report::Report;

pub type ObjId = usize;
pub type MorId = usize;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FinCatError {
    #[error("malformed table: {0}")]
    MalformedTable(String),
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Morphism {
    pub dom: ObjId,
    pub cod: ObjId,
}

/// A finite category with a composition table stored per composable pair.
///
/// `after[f][slot[g]]` holds `g ∘ f`; it exists exactly when `cod f = dom g`,
/// and `slot[g]` is the position of `g` in `out_of[dom g]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinCategory {
    object_count: usize,
    morphisms: Vec<Morphism>,
    identity: Vec<MorId>,
    out_of: Vec<Vec<MorId>>,
    slot: Vec<usize>,
    after: Vec<Vec<MorId>>,
    inverse: Vec<Option<MorId>>,
}

impl FinCategory {
    /// Builds a category from `(g, f, g∘f)` triples.
    ///
    /// Structural problems (dangling ids, entries for non-composable pairs,
    /// missing entries for composable pairs) are rejected here; the category
    /// laws themselves are left to [`check_category`].
    pub fn new(
        object_count: usize,
        morphisms: Vec<Morphism>,
        identity: Vec<MorId>,
        compose: impl IntoIterator<Item = (MorId, MorId, MorId)>,
    ) -> Result<Self, FinCatError> {
        let m = morphisms.len();
        for (i, mor) in morphisms.iter().enumerate() {
            if mor.dom >= object_count || mor.cod >= object_count {
                return Err(FinCatError::MalformedTable(format!(
                    "morphism {i} has dangling endpoint ({} -> {})",
                    mor.dom, mor.cod
                )));
            }
        }
        if identity.len() != object_count {
            return Err(FinCatError::MalformedTable(format!(
                "identity map has {} entries for {} objects",
                identity.len(),
                object_count
            )));
        }
        for (x, &id) in identity.iter().enumerate() {
            if id >= m || morphisms[id].dom != x || morphisms[id].cod != x {
                return Err(FinCatError::MalformedTable(format!(
                    "identity of object {x} is not an endomorphism of {x}"
                )));
            }
        }
        let mut out_of = vec![Vec::new(); object_count];
        let mut slot = vec![0; m];
        for (g, mor) in morphisms.iter().enumerate() {
            slot[g] = out_of[mor.dom].len();
            out_of[mor.dom].push(g);
        }
        let mut table: Vec<Vec<Option<MorId>>> = morphisms.iter().map(|f| vec![None; out_of[f.cod].len()]).collect();
        for (g, f, h) in compose {
            if g >= m || f >= m || h >= m {
                return Err(FinCatError::MalformedTable(format!(
                    "compose entry ({g}, {f}) -> {h} references a missing morphism"
                )));
            }
            if morphisms[f].cod != morphisms[g].dom {
                return Err(FinCatError::MalformedTable(format!(
                    "compose({g}, {f}) declared but cod({f}) != dom({g})"
                )));
            }
            if table[f][slot[g]].replace(h).is_some_and(|old| old != h) {
                return Err(FinCatError::MalformedTable(format!(
                    "compose({g}, {f}) declared twice with different results"
                )));
            }
        }
        let mut after = Vec::with_capacity(m);
        for (f, row) in table.into_iter().enumerate() {
            let row = row
                .into_iter()
                .enumerate()
                .map(|(i, h)| {
                    h.ok_or_else(|| {
                        let g = out_of[morphisms[f].cod][i];
                        FinCatError::MalformedTable(format!("compose({g}, {f}) missing for a composable pair"))
                    })
                })
                .collect::<Result<Vec<_>, _>>()?;
            after.push(row);
        }
        let mut c = FinCategory {
            object_count,
            morphisms,
            identity,
            out_of,
            slot,
            after,
            inverse: Vec::new(),
        };
        c.inverse = c.morphism_ids().map(|f| c.find_inverse(f)).collect();
        Ok(c)
    }

    /// The terminal category: one object, one morphism.
    pub fn terminal() -> Self {
        FinCategory::new(1, vec![Morphism { dom: 0, cod: 0 }], vec![0], [(0, 0, 0)])
            .expect("terminal category is well formed")
    }

    /// One object whose endomorphisms form the cyclic group of order `n`.
    pub fn cyclic_group(n: usize) -> Self {
        FinCategory::from_group_homs(1, n, |a, b| (a + b) % n)
    }

    /// A category with `objects` objects, each carrying its own copy of a
    /// finite group `(0..order, op)` as endomorphisms and no other arrows.
    /// Morphism `(x, k)` has id `x * order + k`; element `0` must be the
    /// group identity.
    pub fn from_group_homs(objects: usize, order: usize, op: impl Fn(usize, usize) -> usize) -> Self {
        let morphisms = (0..objects)
            .flat_map(|x| (0..order).map(move |_| Morphism { dom: x, cod: x }))
            .collect();
        let identity = (0..objects).map(|x| x * order).collect();
        let mut compose = Vec::new();
        for x in 0..objects {
            for a in 0..order {
                for b in 0..order {
                    compose.push((x * order + a, x * order + b, x * order + op(a, b)));
                }
            }
        }
        FinCategory::new(objects, morphisms, identity, compose).expect("group category is well formed")
    }

    /// Exactly one morphism between every ordered pair of objects.
    /// Morphism `x -> y` has id `x * n + y`.
    pub fn codiscrete(n: usize) -> Self {
        let morphisms = (0..n)
            .flat_map(|x| (0..n).map(move |y| Morphism { dom: x, cod: y }))
            .collect();
        let identity = (0..n).map(|x| x * n + x).collect();
        let mut compose = Vec::new();
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    compose.push((y * n + z, x * n + y, x * n + z));
                }
            }
        }
        FinCategory::new(n, morphisms, identity, compose).expect("codiscrete category is well formed")
    }

    /// Only identity morphisms.
    pub fn discrete(n: usize) -> Self {
        let morphisms = (0..n).map(|x| Morphism { dom: x, cod: x }).collect();
        FinCategory::new(n, morphisms, (0..n).collect(), (0..n).map(|x| (x, x, x)))
            .expect("discrete category is well formed")
    }

    pub fn object_count(&self) -> usize {
        self.object_count
    }

    pub fn morphism_count(&self) -> usize {
        self.morphisms.len()
    }

    pub fn morphisms(&self) -> &[Morphism] {
        &self.morphisms
    }

    pub fn identities(&self) -> &[MorId] {
        &self.identity
    }

    pub fn objects(&self) -> std::ops::Range<ObjId> {
        0..self.object_count
    }

    pub fn morphism_ids(&self) -> std::ops::Range<MorId> {
        0..self.morphisms.len()
    }

    pub fn dom(&self, f: MorId) -> ObjId {
        self.morphisms[f].dom
    }

    pub fn cod(&self, f: MorId) -> ObjId {
        self.morphisms[f].cod
    }

    pub fn id(&self, x: ObjId) -> MorId {
        self.identity[x]
    }

    pub fn is_identity(&self, f: MorId) -> bool {
        self.identity[self.dom(f)] == f
    }

    /// `g ∘ f`, if composable.
    pub fn compose(&self, g: MorId, f: MorId) -> Option<MorId> {
        let m = self.morphisms.len();
        if g >= m || f >= m || self.cod(f) != self.dom(g) {
            return None;
        }
        Some(self.after[f][self.slot[g]])
    }

    /// Composite of a chain written in mathematical order: `[h, g, f]` is `h ∘ g ∘ f`.
    pub fn compose_all(&self, chain: &[MorId]) -> Option<MorId> {
        let (&last, rest) = chain.split_last()?;
        rest.iter().rev().try_fold(last, |acc, &g| self.compose(g, acc))
    }

    /// Composable (g, f) pairs, ascending in `f` then `g`.
    pub fn composable_pairs(&self) -> impl Iterator<Item = (MorId, MorId)> + '_ {
        self.morphism_ids()
            .flat_map(move |f| self.out_of[self.cod(f)].iter().map(move |&g| (g, f)))
    }

    /// Morphisms with domain `x`, ascending.
    pub fn out_of(&self, x: ObjId) -> &[MorId] {
        &self.out_of[x]
    }

    pub fn hom(&self, x: ObjId, y: ObjId) -> Vec<MorId> {
        self.out_of[x].iter().copied().filter(|&f| self.cod(f) == y).collect()
    }

    /// Two-sided inverse, if any. Tabulated at construction.
    pub fn inverse(&self, f: MorId) -> Option<MorId> {
        self.inverse[f]
    }

    fn find_inverse(&self, f: MorId) -> Option<MorId> {
        let (x, y) = (self.dom(f), self.cod(f));
        self.hom(y, x)
            .into_iter()
            .find(|&g| self.compose(g, f) == Some(self.id(x)) && self.compose(f, g) == Some(self.id(y)))
    }

    pub fn is_iso(&self, f: MorId) -> bool {
        self.inverse(f).is_some()
    }

    pub fn describe(&self, f: MorId) -> String {
        format!("#{f}:{}->{}", self.dom(f), self.cod(f))
    }
}

/// Checks identity laws, typing of composites and associativity.
pub fn check_category(c: &FinCategory) -> Report {
    let mut report = Report::new("category");
    for (g, f) in c.composable_pairs() {
        let h = c.compose(g, f).expect("table is total on composable pairs");
        report.require(c.dom(h) == c.dom(f) && c.cod(h) == c.cod(g), "composite typing", || {
            format!("compose({g}, {f}) = {} has the wrong endpoints", c.describe(h))
        });
    }
    for f in c.morphism_ids() {
        report.require(c.compose(c.id(c.cod(f)), f) == Some(f), "left identity", || {
            format!("id ∘ {} != {}", c.describe(f), f)
        });
        report.require(c.compose(f, c.id(c.dom(f))) == Some(f), "right identity", || {
            format!("{} ∘ id != {}", c.describe(f), f)
        });
    }
    for (g, f) in c.composable_pairs() {
        let gf = c.compose(g, f).unwrap();
        for &h in c.out_of(c.cod(g)) {
            let lhs = c.compose(h, gf);
            let rhs = c.compose(h, g).and_then(|hg| c.compose(hg, f));
            report.require(lhs == rhs, "associativity", || format!("(h, g, f) = ({h}, {g}, {f})"));
        }
    }
    report
}

/// Binary product. Object `(x, y)` has id `x * |obj d| + y`, morphism `(f, g)`
/// has id `f * |mor d| + g`.
pub fn product_category(c: &FinCategory, d: &FinCategory) -> FinCategory {
    let (nd, md) = (d.object_count(), d.morphism_count());
    let morphisms = c
        .morphisms()
        .iter()
        .flat_map(|fc| {
            d.morphisms().iter().map(move |fd| Morphism {
                dom: fc.dom * nd + fd.dom,
                cod: fc.cod * nd + fd.cod,
            })
        })
        .collect();
    let identity = c
        .objects()
        .flat_map(|x| d.objects().map(move |y| c.id(x) * md + d.id(y)))
        .collect();
    let mut compose = Vec::new();
    for (g1, f1) in c.composable_pairs() {
        let h1 = c.compose(g1, f1).unwrap();
        for (g2, f2) in d.composable_pairs() {
            let h2 = d.compose(g2, f2).unwrap();
            compose.push((g1 * md + g2, f1 * md + f2, h1 * md + h2));
        }
    }
    FinCategory::new(c.object_count() * nd, morphisms, identity, compose)
        .expect("product of well-formed categories is well formed")
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Functor {
    pub source: Arc<FinCategory>,
    pub target: Arc<FinCategory>,
    pub object_map: Vec<ObjId>,
    pub morphism_map: Vec<MorId>,
}

impl Functor {
    pub fn new(
        source: Arc<FinCategory>,
        target: Arc<FinCategory>,
        object_map: Vec<ObjId>,
        morphism_map: Vec<MorId>,
    ) -> Result<Self, FinCatError> {
        if object_map.len() != source.object_count() || morphism_map.len() != source.morphism_count() {
            return Err(FinCatError::ShapeMismatch(format!(
                "functor maps have lengths ({}, {}), source has ({}, {})",
                object_map.len(),
                morphism_map.len(),
                source.object_count(),
                source.morphism_count()
            )));
        }
        if let Some(x) = object_map.iter().find(|&&x| x >= target.object_count()) {
            return Err(FinCatError::ShapeMismatch(format!("object image {x} out of range")));
        }
        if let Some(f) = morphism_map.iter().find(|&&f| f >= target.morphism_count()) {
            return Err(FinCatError::ShapeMismatch(format!("morphism image {f} out of range")));
        }
        Ok(Functor {
            source,
            target,
            object_map,
            morphism_map,
        })
    }

    pub fn identity(c: Arc<FinCategory>) -> Self {
        let object_map = c.objects().collect();
        let morphism_map = c.morphism_ids().collect();
        Functor {
            source: c.clone(),
            target: c,
            object_map,
            morphism_map,
        }
    }

    /// Sends everything to the identity of `object`.
    pub fn constant(source: Arc<FinCategory>, target: Arc<FinCategory>, object: ObjId) -> Self {
        let id = target.id(object);
        Functor {
            object_map: vec![object; source.object_count()],
            morphism_map: vec![id; source.morphism_count()],
            source,
            target,
        }
    }

    pub fn obj(&self, x: ObjId) -> ObjId {
        self.object_map[x]
    }

    pub fn mor(&self, f: MorId) -> MorId {
        self.morphism_map[f]
    }
}

/// Checks that the functor preserves endpoints, identities and composition.
pub fn check_functor(functor: &Functor) -> Report {
    let (c, d) = (&functor.source, &functor.target);
    let mut report = Report::new("functor");
    for f in c.morphism_ids() {
        let ff = functor.mor(f);
        report.require(
            d.dom(ff) == functor.obj(c.dom(f)) && d.cod(ff) == functor.obj(c.cod(f)),
            "endpoints",
            || format!("F({}) = {}", c.describe(f), d.describe(ff)),
        );
    }
    for x in c.objects() {
        report.require(functor.mor(c.id(x)) == d.id(functor.obj(x)), "identity", || {
            format!("F(id_{x}) = #{} is not id_{}", functor.mor(c.id(x)), functor.obj(x))
        });
    }
    for (g, f) in c.composable_pairs() {
        let lhs = functor.mor(c.compose(g, f).unwrap());
        let rhs = d.compose(functor.mor(g), functor.mor(f));
        report.require(rhs == Some(lhs), "composition", || format!("(g, f) = ({g}, {f})"));
    }
    report
}

/// `G ∘ F`.
pub fn compose_functors(g: &Functor, f: &Functor) -> Result<Functor, FinCatError> {
    if f.target != g.source {
        return Err(FinCatError::ShapeMismatch(
            "compose_functors: F's target is not G's source".into(),
        ));
    }
    Ok(Functor {
        source: f.source.clone(),
        target: g.target.clone(),
        object_map: f.object_map.iter().map(|&x| g.obj(x)).collect(),
        morphism_map: f.morphism_map.iter().map(|&m| g.mor(m)).collect(),
    })
}

/// Every functor between two small categories, in lexicographic order of
/// `(object_map, morphism_map)`. Exponential; intended for corpus-sized inputs.
pub fn enumerate_functors(c: &Arc<FinCategory>, d: &Arc<FinCategory>) -> Vec<Functor> {
    let mut out = Vec::new();
    let mut objects = vec![0; c.object_count()];
    loop {
        // Candidate images per morphism given the object assignment.
        let candidates: Vec<Vec<MorId>> = c
            .morphism_ids()
            .map(|f| d.hom(objects[c.dom(f)], objects[c.cod(f)]))
            .collect();
        if candidates.iter().all(|cs| !cs.is_empty()) {
            let mut pick = vec![0usize; candidates.len()];
            loop {
                let morphism_map: Vec<MorId> = pick.iter().zip(&candidates).map(|(&i, cs)| cs[i]).collect();
                let candidate = Functor {
                    source: c.clone(),
                    target: d.clone(),
                    object_map: objects.clone(),
                    morphism_map,
                };
                if check_functor(&candidate).passed() {
                    out.push(candidate);
                }
                if !advance(&mut pick, |i| candidates[i].len()) {
                    break;
                }
            }
        }
        if !advance(&mut objects, |_| d.object_count()) {
            break;
        }
    }
    out
}

/// Odometer increment over mixed radices; returns false on wrap-around.
pub(crate) fn advance(digits: &mut [usize], radix: impl Fn(usize) -> usize) -> bool {
    for i in (0..digits.len()).rev() {
        digits[i] += 1;
        if digits[i] < radix(i) {
            return true;
        }
        digits[i] = 0;
    }
    false
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NatTransform {
    pub source: Functor,
    pub target: Functor,
    pub components: Vec<MorId>,
}

impl NatTransform {
    pub fn new(source: Functor, target: Functor, components: Vec<MorId>) -> Result<Self, FinCatError> {
        if source.source != target.source || source.target != target.target {
            return Err(FinCatError::ShapeMismatch(
                "natural transformation between functors with different endpoints".into(),
            ));
        }
        if components.len() != source.source.object_count() {
            return Err(FinCatError::ShapeMismatch(format!(
                "{} components for {} objects",
                components.len(),
                source.source.object_count()
            )));
        }
        if let Some(&c) = components.iter().find(|&&c| c >= source.target.morphism_count()) {
            return Err(FinCatError::ShapeMismatch(format!("component {c} out of range")));
        }
        Ok(NatTransform {
            source,
            target,
            components,
        })
    }

    pub fn identity(f: &Functor) -> Self {
        let components = f.source.objects().map(|x| f.target.id(f.obj(x))).collect();
        NatTransform {
            source: f.clone(),
            target: f.clone(),
            components,
        }
    }

    pub fn at(&self, x: ObjId) -> MorId {
        self.components[x]
    }
}

/// Component typing and every naturality square.
pub fn check_nat_transform(t: &NatTransform) -> Report {
    let (c, d) = (&t.source.source, &t.source.target);
    let mut report = Report::new("natural transformation");
    for x in c.objects() {
        let k = t.at(x);
        report.require(
            d.dom(k) == t.source.obj(x) && d.cod(k) == t.target.obj(x),
            "component typing",
            || format!("component at {x} is {}", d.describe(k)),
        );
    }
    if !report.passed() {
        return report;
    }
    for f in c.morphism_ids() {
        let lhs = d.compose(t.at(c.cod(f)), t.source.mor(f));
        let rhs = d.compose(t.target.mor(f), t.at(c.dom(f)));
        report.require(lhs.is_some() && lhs == rhs, "naturality", || {
            format!("square at {}", c.describe(f))
        });
    }
    report
}

/// `β · α` (vertical composite).
pub fn vertical_compose(beta: &NatTransform, alpha: &NatTransform) -> Result<NatTransform, FinCatError> {
    if alpha.target != beta.source {
        return Err(FinCatError::ShapeMismatch(
            "vertical composite: boundaries do not meet".into(),
        ));
    }
    let d = &alpha.source.target;
    let components = alpha
        .components
        .iter()
        .zip(&beta.components)
        .map(|(&a, &b)| {
            d.compose(b, a)
                .ok_or_else(|| FinCatError::ShapeMismatch("vertical composite: components do not compose".into()))
        })
        .collect::<Result<_, _>>()?;
    Ok(NatTransform {
        source: alpha.source.clone(),
        target: beta.target.clone(),
        components,
    })
}

/// `β * α : G∘F ⇒ G'∘F'` for `α : F ⇒ F'` and `β : G ⇒ G'`, with component
/// `β_{F'x} ∘ G(α_x)`.
pub fn horizontal_compose(beta: &NatTransform, alpha: &NatTransform) -> Result<NatTransform, FinCatError> {
    if alpha.source.target != beta.source.source {
        return Err(FinCatError::ShapeMismatch(
            "horizontal composite: middle categories differ".into(),
        ));
    }
    let e = &beta.source.target;
    let components = alpha
        .source
        .source
        .objects()
        .map(|x| {
            e.compose(beta.at(alpha.target.obj(x)), beta.source.mor(alpha.at(x)))
                .ok_or_else(|| FinCatError::ShapeMismatch("horizontal composite: ill-typed component".into()))
        })
        .collect::<Result<_, _>>()?;
    Ok(NatTransform {
        source: compose_functors(&beta.source, &alpha.source)?,
        target: compose_functors(&beta.target, &alpha.target)?,
        components,
    })
}

/// `H α` for a functor `H` out of the target of `α`.
pub fn whisker_left(h: &Functor, alpha: &NatTransform) -> Result<NatTransform, FinCatError> {
    horizontal_compose(&NatTransform::identity(h), alpha)
}

/// `α K` for a functor `K` into the source of `α`.
pub fn whisker_right(alpha: &NatTransform, k: &Functor) -> Result<NatTransform, FinCatError> {
    horizontal_compose(alpha, &NatTransform::identity(k))
}
