//! The JSON structure document: loading and export.
//!
//! Every section is optional; each loader names the section it needs when
//! it is missing. Ids are indices into the explicit tables. See the README
//! for the field reference.

use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::ddcat::{DDStructure, DdError};
use crate::fincat::{FinCatError, FinCategory, Functor, MorId, Morphism, ObjId};
use crate::monadterm::obligations::{Expect, Obligation};
use crate::monadterm::MonadTermError;
use crate::monoidal::{BraidedStructure, MonoidalError, MonoidalStructure};
use crate::rigmodel::{Rig, RigError};
use crate::weakmap::{DDTransformation, DDWeakMap, Hom, WeakMapError};

#[derive(Debug, Error)]
pub enum DocumentError {
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("missing section {0:?}")]
    Missing(&'static str),
    #[error("no monoidal section named {0:?}")]
    UnknownMonoidal(String),
    #[error(transparent)]
    Category(#[from] FinCatError),
    #[error(transparent)]
    Monoidal(#[from] MonoidalError),
    #[error(transparent)]
    Dd(#[from] DdError),
    #[error(transparent)]
    WeakMap(#[from] WeakMapError),
    #[error(transparent)]
    Rig(#[from] RigError),
    #[error(transparent)]
    Term(#[from] MonadTermError),
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Document {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub category: Option<CategorySection>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub monoidal: Vec<MonoidalSection>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub braiding: Option<BraidingSection>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dd: Option<DdSection>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub map: Option<MapSection>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub transformation: Option<TransformationSection>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rig: Option<RigSection>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub obligation: Option<ObligationSection>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CategorySection {
    pub objects: usize,
    /// `[dom, cod]` per morphism.
    pub morphisms: Vec<[ObjId; 2]>,
    pub identities: Vec<MorId>,
    /// `[g, f, g∘f]` for every composable pair.
    pub compose: Vec<[MorId; 3]>,
}

/// Tables indexed as in [`MonoidalStructure::new`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MonoidalSection {
    pub name: String,
    pub tensor_objects: Vec<ObjId>,
    pub tensor_morphisms: Vec<MorId>,
    pub unit: ObjId,
    pub associator: Vec<MorId>,
    pub left_unit: Vec<MorId>,
    pub right_unit: Vec<MorId>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BraidingSection {
    /// Name of the monoidal section being braided.
    pub monoidal: String,
    /// `γ_{x,y}` at `x * n + y`.
    pub gamma: Vec<MorId>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DdSection {
    pub vertical: String,
    pub horizontal: String,
}

/// The data of a weak map out of the document's DD structure.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MapData {
    pub objects: Vec<ObjId>,
    pub morphisms: Vec<MorId>,
    pub v: Vec<MorId>,
    /// May be omitted for `promote-map`, which reconstructs it.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub h: Option<Vec<MorId>>,
    pub eta: MorId,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MapSection {
    /// A document holding the target DD structure; the source itself when
    /// absent.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub target: Option<Box<Document>>,
    pub objects: Vec<ObjId>,
    pub morphisms: Vec<MorId>,
    pub v: Vec<MorId>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub h: Option<Vec<MorId>>,
    pub eta: MorId,
}

impl MapSection {
    pub fn data(&self) -> MapData {
        MapData {
            objects: self.objects.clone(),
            morphisms: self.morphisms.clone(),
            v: self.v.clone(),
            h: self.h.clone(),
            eta: self.eta,
        }
    }
}

/// A transformation from the document's map to `target_map`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TransformationSection {
    pub target_map: MapData,
    pub components: Vec<MorId>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RigSection {
    pub name: String,
    pub size: usize,
    pub add: Vec<usize>,
    pub mul: Vec<usize>,
    pub zero: usize,
    pub one: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ObligationSection {
    pub name: String,
    #[serde(default)]
    pub note: String,
    /// Such as `"ts:A"`, `"pair:B"`, `"weak-pair:f"`, `"cylinder:theta"`.
    #[serde(default)]
    pub hypotheses: Vec<String>,
    pub lhs: String,
    pub rhs: String,
    pub expect: Expect,
}

impl Document {
    pub fn parse(text: &str) -> Result<Self, DocumentError> {
        Ok(serde_json::from_str(text)?)
    }

    /// Pretty JSON with arrays of numbers kept on one line.
    pub fn to_json(&self) -> String {
        inline_number_arrays(&serde_json::to_string_pretty(self).expect("documents serialize"))
    }

    pub fn category(&self) -> Result<Arc<FinCategory>, DocumentError> {
        let c = self.category.as_ref().ok_or(DocumentError::Missing("category"))?;
        let morphisms = c.morphisms.iter().map(|&[dom, cod]| Morphism { dom, cod }).collect();
        let compose = c.compose.iter().map(|&[g, f, h]| (g, f, h));
        Ok(Arc::new(FinCategory::new(
            c.objects,
            morphisms,
            c.identities.clone(),
            compose,
        )?))
    }

    fn monoidal_on(&self, carrier: &Arc<FinCategory>, name: &str) -> Result<MonoidalStructure, DocumentError> {
        let m = self
            .monoidal
            .iter()
            .find(|m| m.name == name)
            .ok_or_else(|| DocumentError::UnknownMonoidal(name.into()))?;
        Ok(MonoidalStructure::new(
            carrier.clone(),
            m.tensor_objects.clone(),
            m.tensor_morphisms.clone(),
            m.unit,
            m.associator.clone(),
            m.left_unit.clone(),
            m.right_unit.clone(),
        )?)
    }

    /// Every monoidal section, in document order, over one shared carrier.
    pub fn monoidals(&self) -> Result<Vec<(String, MonoidalStructure)>, DocumentError> {
        if self.monoidal.is_empty() {
            return Err(DocumentError::Missing("monoidal"));
        }
        let c = self.category()?;
        self.monoidal
            .iter()
            .map(|m| Ok((m.name.clone(), self.monoidal_on(&c, &m.name)?)))
            .collect()
    }

    pub fn braided(&self) -> Result<BraidedStructure, DocumentError> {
        let b = self.braiding.as_ref().ok_or(DocumentError::Missing("braiding"))?;
        let base = self.monoidal_on(&self.category()?, &b.monoidal)?;
        Ok(BraidedStructure::new(base, b.gamma.clone())?)
    }

    pub fn dd(&self) -> Result<DDStructure, DocumentError> {
        let d = self.dd.as_ref().ok_or(DocumentError::Missing("dd"))?;
        let c = self.category()?;
        Ok(DDStructure::new(
            self.monoidal_on(&c, &d.vertical)?,
            self.monoidal_on(&c, &d.horizontal)?,
        )?)
    }

    pub fn hom(&self) -> Result<Arc<Hom>, DocumentError> {
        let m = self.map.as_ref().ok_or(DocumentError::Missing("map"))?;
        let source = Arc::new(self.dd()?);
        let target = match &m.target {
            Some(t) => Arc::new(t.dd()?),
            None => source.clone(),
        };
        Ok(Arc::new(Hom::new(source, target)))
    }

    pub fn map_functor(hom: &Hom, data: &MapData) -> Result<Functor, DocumentError> {
        Ok(Functor::new(
            hom.source.carrier().clone(),
            hom.target.carrier().clone(),
            data.objects.clone(),
            data.morphisms.clone(),
        )?)
    }

    fn build_map(hom: &Arc<Hom>, data: &MapData) -> Result<DDWeakMap, DocumentError> {
        let h = data.h.clone().ok_or(DocumentError::Missing("map.h"))?;
        let f = Self::map_functor(hom, data)?;
        Ok(DDWeakMap::new(hom.clone(), f, data.v.clone(), h, data.eta)?)
    }

    pub fn weak_map(&self) -> Result<DDWeakMap, DocumentError> {
        let m = self.map.as_ref().ok_or(DocumentError::Missing("map"))?;
        Self::build_map(&self.hom()?, &m.data())
    }

    pub fn transformation(&self) -> Result<DDTransformation, DocumentError> {
        let t = self
            .transformation
            .as_ref()
            .ok_or(DocumentError::Missing("transformation"))?;
        let source = self.weak_map()?;
        let target = Self::build_map(&source.hom, &t.target_map)?;
        Ok(DDTransformation::new(source, target, t.components.clone())?)
    }

    pub fn rig(&self) -> Result<Rig, DocumentError> {
        let r = self.rig.as_ref().ok_or(DocumentError::Missing("rig"))?;
        Ok(Rig::new(
            r.name.clone(),
            r.size,
            r.add.clone(),
            r.mul.clone(),
            r.zero,
            r.one,
        )?)
    }

    pub fn obligation(&self) -> Result<Obligation, DocumentError> {
        let o = self.obligation.as_ref().ok_or(DocumentError::Missing("obligation"))?;
        let hyps: Vec<&str> = o.hypotheses.iter().map(String::as_str).collect();
        Ok(Obligation::parse(&o.name, &o.note, &hyps, &o.lhs, &o.rhs, o.expect)?)
    }

    pub fn from_category(c: &FinCategory) -> Self {
        let compose = c
            .composable_pairs()
            .map(|(g, f)| [g, f, c.compose(g, f).expect("composable")])
            .collect();
        Document {
            category: Some(CategorySection {
                objects: c.object_count(),
                morphisms: c.morphisms().iter().map(|m| [m.dom, m.cod]).collect(),
                identities: c.identities().to_vec(),
                compose,
            }),
            ..Document::default()
        }
    }

    pub fn monoidal_section(name: &str, s: &MonoidalStructure) -> MonoidalSection {
        MonoidalSection {
            name: name.into(),
            tensor_objects: s.tensor.object_map.clone(),
            tensor_morphisms: s.tensor.morphism_map.clone(),
            unit: s.unit,
            associator: s.associator.clone(),
            left_unit: s.left_unit.clone(),
            right_unit: s.right_unit.clone(),
        }
    }

    /// The category, both tensors (named `vertical` and `horizontal`) and a
    /// `dd` section.
    pub fn from_dd(x: &DDStructure) -> Self {
        Document {
            monoidal: vec![
                Self::monoidal_section("vertical", &x.vertical),
                Self::monoidal_section("horizontal", &x.horizontal),
            ],
            dd: Some(DdSection {
                vertical: "vertical".into(),
                horizontal: "horizontal".into(),
            }),
            ..Self::from_category(x.carrier())
        }
    }

    pub fn map_data(m: &DDWeakMap) -> MapData {
        MapData {
            objects: m.functor.object_map.clone(),
            morphisms: m.functor.morphism_map.clone(),
            v: m.v.clone(),
            h: Some(m.h.clone()),
            eta: m.eta,
        }
    }

    /// The source DD structure with a `map` section; the target is embedded
    /// unless it is the source itself.
    pub fn from_weak_map(m: &DDWeakMap) -> Self {
        let target = (m.hom.target != m.hom.source).then(|| Box::new(Self::from_dd(&m.hom.target)));
        let d = Self::map_data(m);
        let map = MapSection {
            target,
            objects: d.objects,
            morphisms: d.morphisms,
            v: d.v,
            h: d.h,
            eta: d.eta,
        };
        Document {
            map: Some(map),
            ..Self::from_dd(&m.hom.source)
        }
    }

    pub fn from_transformation(t: &DDTransformation) -> Self {
        Document {
            transformation: Some(TransformationSection {
                target_map: Self::map_data(&t.target),
                components: t.components.clone(),
            }),
            ..Self::from_weak_map(&t.source)
        }
    }

    pub fn from_rig(r: &Rig) -> Self {
        Document {
            rig: Some(RigSection {
                name: r.name.clone(),
                size: r.size,
                add: r.add.clone(),
                mul: r.mul.clone(),
                zero: r.zero,
                one: r.one,
            }),
            ..Document::default()
        }
    }

    pub fn from_obligation(o: &Obligation) -> Self {
        Document {
            obligation: Some(ObligationSection {
                name: o.name.clone(),
                note: o.note.clone(),
                hypotheses: o.hypotheses.iter().map(ToString::to_string).collect(),
                lhs: o.lhs.to_string(),
                rhs: o.rhs.to_string(),
                expect: o.expect,
            }),
            ..Document::default()
        }
    }
}

fn inline_number_arrays(pretty: &str) -> String {
    let lines: Vec<&str> = pretty.lines().collect();
    let mut out = String::new();
    let mut i = 0;
    while i < lines.len() {
        let line = lines[i];
        if line.ends_with('[') {
            let items: Vec<&str> = lines[i + 1..]
                .iter()
                .map(|l| l.trim())
                .take_while(|l| l.trim_end_matches(',').parse::<u64>().is_ok())
                .collect();
            let close = lines.get(i + 1 + items.len()).map(|l| l.trim());
            if !items.is_empty() && close.is_some_and(|c| c.starts_with(']')) {
                let close = close.expect("checked");
                let body: Vec<&str> = items.iter().map(|l| l.trim_end_matches(',')).collect();
                out.push_str(&format!("{line}{}{close}\n", body.join(", ")));
                i += items.len() + 2;
                continue;
            }
        }
        out.push_str(line);
        out.push('\n');
        i += 1;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    #[test]
    fn dd_documents_round_trip() {
        for e in corpus::dd_structures() {
            let doc = Document::from_dd(&e.dd);
            let back = Document::parse(&doc.to_json()).unwrap();
            assert_eq!(back, doc);
            assert_eq!(back.dd().unwrap(), e.dd, "{}", e.name);
        }
    }

    #[test]
    fn missing_sections_are_named() {
        let doc = Document::parse("{}").unwrap();
        assert!(matches!(doc.dd(), Err(DocumentError::Missing("dd"))));
        assert!(matches!(Document::parse(r#"{"dd": 3}"#), Err(DocumentError::Json(_))));
        assert!(matches!(
            Document::parse(r#"{"extra": {}}"#),
            Err(DocumentError::Json(_))
        ));
    }

    #[test]
    fn obligations_round_trip_through_documents() {
        for o in crate::monadterm::obligations::bundled()
            .into_iter()
            .filter(|o| o.mutation.is_none())
        {
            let back = Document::parse(&Document::from_obligation(&o).to_json())
                .unwrap()
                .obligation()
                .unwrap();
            assert_eq!(back, o);
        }
    }
}
