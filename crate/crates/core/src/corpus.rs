//! Bundled example structures.
//!
//! Most entries belong to the pointed family: objects are a finite abelian
//! group A = Z/n1 × ... × Z/nr, every object has the endomorphism group Z/nk
//! and no other arrows, and both tensors are addition. Objects are encoded in
//! mixed radix (last factor fastest); morphism `(a, k)` has id `a * nk + k`.
//! With a strict horizontal tensor, the DD axioms force the vertical
//! constraints to be `assoc(x,y,z) = P(x) + Q(z)`, `β = P`, `τ = -Q` for
//! homomorphisms `P, Q : A -> Z/nk`; [`search_pointed`] recovers this by
//! brute force on the smallest carrier.

use std::sync::Arc;

use crate::ddcat::{check_dd, DDStructure};
use crate::document::{BraidingSection, Document};
use crate::fincat::{advance, FinCategory, MorId, ObjId};
use crate::monadterm::obligations::bundled;
use crate::monoidal::MonoidalStructure;
use crate::rigmodel::{Rig, ETA_S, ETA_T, MU_S, MU_T};
use crate::weakmap::{
    enumerate_dd_transformations, enumerate_weak_maps, identity_weak_map, DDTransformation, DDWeakMap, Hom,
};

/// Carrier of the pointed family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pointed {
    pub orders: Vec<usize>,
    pub nk: usize,
}

impl Pointed {
    pub fn cyclic(na: usize, nk: usize) -> Self {
        Pointed { orders: vec![na], nk }
    }

    pub fn na(&self) -> usize {
        self.orders.iter().product()
    }

    /// Coordinates of an object, one per cyclic factor.
    pub fn coords(&self, mut a: ObjId) -> Vec<usize> {
        let mut out = vec![0; self.orders.len()];
        for (i, &n) in self.orders.iter().enumerate().rev() {
            out[i] = a % n;
            a /= n;
        }
        out
    }

    pub fn add(&self, a: ObjId, b: ObjId) -> ObjId {
        let (ca, cb) = (self.coords(a), self.coords(b));
        self.orders
            .iter()
            .zip(ca.iter().zip(&cb))
            .fold(0, |acc, (&n, (&x, &y))| acc * n + (x + y) % n)
    }

    pub fn category(&self) -> FinCategory {
        let nk = self.nk;
        FinCategory::from_group_homs(self.na(), nk, |a, b| (a + b) % nk)
    }

    pub fn mor(&self, a: ObjId, k: usize) -> MorId {
        a * self.nk + k % self.nk
    }

    /// Scalar part of a morphism id.
    pub fn scalar(&self, f: MorId) -> usize {
        f % self.nk
    }

    fn tensor_tables(&self) -> (Vec<usize>, Vec<usize>) {
        let (na, nk) = (self.na(), self.nk);
        let objects = (0..na * na).map(|i| self.add(i / na, i % na)).collect();
        let m = na * nk;
        let morphisms = (0..m * m)
            .map(|i| {
                let (f, g) = (i / m, i % m);
                self.mor(self.add(f / nk, g / nk), f % nk + g % nk)
            })
            .collect();
        (objects, morphisms)
    }

    /// The vertical structure from scalar constraint tables: associator
    /// indexed `(x * na + y) * na + z`, τ and β indexed by object.
    pub fn vertical(&self, assoc: &[usize], tau: &[usize], beta: &[usize]) -> MonoidalStructure {
        let na = self.na();
        let c = Arc::new(self.category());
        let (to, tm) = self.tensor_tables();
        let associator = (0..na * na * na)
            .map(|i| {
                let xyz = self.add(self.add(i / (na * na), (i / na) % na), i % na);
                self.mor(xyz, assoc[i])
            })
            .collect();
        let left_unit = (0..na).map(|a| self.mor(a, tau[a])).collect();
        let right_unit = (0..na).map(|a| self.mor(a, beta[a])).collect();
        MonoidalStructure::new(c, to, tm, 0, associator, left_unit, right_unit)
            .expect("pointed tables have the right shape")
    }

    pub fn horizontal(&self) -> MonoidalStructure {
        let (to, tm) = self.tensor_tables();
        MonoidalStructure::strict(Arc::new(self.category()), to, tm, 0).expect("pointed tables have the right shape")
    }

    pub fn dd(&self, assoc: &[usize], tau: &[usize], beta: &[usize]) -> DDStructure {
        DDStructure::new(self.vertical(assoc, tau, beta), self.horizontal()).expect("shared carrier")
    }

    /// The homomorphism `A -> Z/nk` sending generator `i` to `images[i]`, or
    /// `None` if some image has the wrong order.
    pub fn hom(&self, images: &[usize]) -> Option<Vec<usize>> {
        let nk = self.nk;
        if images.len() != self.orders.len() || self.orders.iter().zip(images).any(|(&n, &g)| (n * g) % nk != 0) {
            return None;
        }
        Some(
            (0..self.na())
                .map(|a| self.coords(a).iter().zip(images).map(|(&x, &g)| x * g).sum::<usize>() % nk)
                .collect(),
        )
    }

    /// The member with `P` and `Q` given by generator images.
    pub fn member(&self, p: &[usize], q: &[usize]) -> Option<DDStructure> {
        let (na, nk) = (self.na(), self.nk);
        let (pf, qf) = (self.hom(p)?, self.hom(q)?);
        let assoc: Vec<usize> = (0..na * na * na)
            .map(|i| (pf[i / (na * na)] + qf[i % na]) % nk)
            .collect();
        let tau: Vec<usize> = qf.iter().map(|&x| (nk - x) % nk).collect();
        Some(self.dd(&assoc, &tau, &pf))
    }
}

/// Every assignment of vertical constraint scalars on a pointed carrier that
/// passes `check_dd`, in lexicographic order of `(assoc, tau, beta)`.
///
/// The search space has `nk^(na³ + 2·na)` points; callers keep it small.
pub fn search_pointed(p: &Pointed) -> Vec<DDStructure> {
    let na = p.na();
    let len = na * na * na + 2 * na;
    let mut digits = vec![0usize; len];
    let mut found = Vec::new();
    loop {
        let (assoc, rest) = digits.split_at(na * na * na);
        let (tau, beta) = rest.split_at(na);
        let x = p.dd(assoc, tau, beta);
        if check_dd(&x).passed() {
            found.push(x);
        }
        if !advance(&mut digits, |_| p.nk) {
            break;
        }
    }
    found
}

/// Strict DD structure on the codiscrete category over Z/n: one arrow between
/// any two objects, both tensors addition.
pub fn codiscrete(n: usize) -> DDStructure {
    let c = Arc::new(FinCategory::codiscrete(n));
    let objects: Vec<usize> = (0..n * n).map(|i| (i / n + i % n) % n).collect();
    let m = n * n;
    // Morphism x -> y has id x * n + y.
    let morphisms: Vec<usize> = (0..m * m)
        .map(|i| {
            let (f, g) = (i / m, i % m);
            let dom = (f / n + g / n) % n;
            let cod = (f % n + g % n) % n;
            dom * n + cod
        })
        .collect();
    let v = MonoidalStructure::strict(c.clone(), objects.clone(), morphisms.clone(), 0).expect("codiscrete tables");
    let h = MonoidalStructure::strict(c, objects, morphisms, 0).expect("codiscrete tables");
    DDStructure::new(v, h).expect("shared carrier")
}

/// A named corpus DD structure.
#[derive(Clone, Debug)]
pub struct DdEntry {
    pub name: String,
    pub dd: DDStructure,
}

/// The bundled DD structures, in a fixed order.
pub fn dd_structures() -> Vec<DdEntry> {
    let mut out = Vec::new();
    let mut push = |name: String, dd: DDStructure| out.push(DdEntry { name, dd });
    push(
        "strict-discrete-z2".into(),
        Pointed::cyclic(2, 1).member(&[0], &[0]).unwrap(),
    );
    for (p, q) in [(0, 0), (0, 1), (1, 0), (1, 1)] {
        push(
            format!("pointed-z2-z2-p{p}-q{q}"),
            Pointed::cyclic(2, 2).member(&[p], &[q]).unwrap(),
        );
    }
    push(
        "pointed-z2-z4-p2-q0".into(),
        Pointed::cyclic(2, 4).member(&[2], &[0]).unwrap(),
    );
    push(
        "pointed-z3-z3-p1-q1".into(),
        Pointed::cyclic(3, 3).member(&[1], &[1]).unwrap(),
    );
    push(
        "pointed-z2xz2-z2-p10-q00".into(),
        Pointed {
            orders: vec![2, 2],
            nk: 2,
        }
        .member(&[1, 0], &[0, 0])
        .unwrap(),
    );
    push("codiscrete-z3".into(), codiscrete(3));
    out
}

/// The genuine rigs of the corpus.
pub fn rigs() -> Vec<Rig> {
    vec![Rig::boolean(), Rig::zmod(2), Rig::zmod(4)]
}

/// A table pair that is not a rig, with the Beck diagrams it breaks.
#[derive(Clone, Debug)]
pub struct RigMutant {
    pub rig: Rig,
    /// Sorted.
    pub failing: Vec<&'static str>,
}

/// Bundled non-rigs. `1·a = a` feeds η^S, associativity of `·` feeds μ^S,
/// `m·0 = 0` feeds η^T and left distributivity feeds μ^T.
pub fn rig_mutants() -> Vec<RigMutant> {
    let or = vec![0, 1, 1, 1];
    let z3: Vec<usize> = (0..9).map(|i| (i / 3 + i % 3) % 3).collect();
    let max: Vec<usize> = (0..9).map(|i| (i / 3).max(i % 3)).collect();
    let mk = |name: &str, size, add: &Vec<usize>, mul: Vec<usize>, mut failing: Vec<&'static str>| {
        failing.sort();
        RigMutant {
            rig: Rig::new(name, size, add.clone(), mul, 0, 1).expect("mutant tables are well formed"),
            failing,
        }
    };
    vec![
        // XOR has no absorbing zero and 1 is not its unit.
        mk("or-xor", 2, &or, vec![0, 1, 1, 0], vec![ETA_S, ETA_T, MU_T]),
        mk("or-zero", 2, &or, vec![0, 0, 0, 0], vec![ETA_S]),
        // 0·1 = 2 and 0·2 = 1 break associativity only.
        mk("z3-nonassoc", 3, &z3, vec![0, 2, 1, 0, 1, 2, 0, 0, 0], vec![MU_S]),
        // 2·2 = 0 but 2·(1+1) = 2·2 ≠ 2·1 + 2·1 = 1.
        mk(
            "z3-nondistributive",
            3,
            &z3,
            vec![0, 0, 0, 0, 1, 2, 0, 2, 0],
            vec![MU_T],
        ),
        // 2·0 = 2.
        mk(
            "max-nonabsorbing",
            3,
            &max,
            vec![0, 0, 0, 0, 1, 2, 2, 2, 2],
            vec![ETA_T],
        ),
    ]
}

/// The homs enumerated by the map-level checks: every pair among the
/// two-object entries, and the codiscrete endo-hom. Homs into or out of the
/// larger entries take seconds each and are left out.
pub fn homs() -> Vec<(String, Arc<Hom>)> {
    let dds = dd_structures();
    let small: Vec<&DdEntry> = dds.iter().filter(|e| e.dd.carrier().object_count() == 2).collect();
    let mut out = Vec::new();
    for a in &small {
        for b in &small {
            out.push((
                format!("{} -> {}", a.name, b.name),
                Arc::new(Hom::new(Arc::new(a.dd.clone()), Arc::new(b.dd.clone()))),
            ));
        }
    }
    let c = Arc::new(codiscrete(3));
    out.push((
        "codiscrete-z3 -> codiscrete-z3".into(),
        Arc::new(Hom::new(c.clone(), c)),
    ));
    out
}

fn entry(name: &str) -> Arc<DDStructure> {
    Arc::new(
        dd_structures()
            .into_iter()
            .find(|e| e.name == name)
            .expect("named entry")
            .dd,
    )
}

/// Bundled weak maps: an identity and a map between different structures.
pub fn weak_maps() -> Vec<(String, DDWeakMap)> {
    let id = identity_weak_map(entry("pointed-z2-z2-p1-q1"));
    let hom = Arc::new(Hom::new(entry("pointed-z2-z2-p0-q0"), entry("pointed-z2-z2-p1-q0")));
    let last = enumerate_weak_maps(&hom).pop().expect("the hom is inhabited");
    vec![
        ("identity-pointed-z2-z2-p1-q1".into(), id),
        ("pointed-z2-z2-p0-q0-to-p1-q0".into(), last),
    ]
}

/// A DD transformation between two different weak maps.
pub fn transformation() -> (String, DDTransformation) {
    let x = entry("pointed-z2-z2-p1-q1");
    let maps = enumerate_weak_maps(&Arc::new(Hom::new(x.clone(), x)));
    let t = maps
        .iter()
        .flat_map(|m| {
            maps.iter()
                .filter(move |n| *n != m)
                .flat_map(move |n| enumerate_dd_transformations(m, n))
        })
        .next()
        .expect("some pair of distinct maps is related");
    ("pointed-z2-z2-p1-q1-nonidentity".into(), t)
}

/// The bundled document tree, keyed by relative path. Every document in it
/// passes the check its directory names.
pub fn documents() -> Vec<(String, Document)> {
    let mut out = Vec::new();
    for e in dd_structures() {
        let mut doc = Document::from_dd(&e.dd);
        let b = e.dd.to_braided().expect("corpus entries braid");
        doc.braiding = Some(BraidingSection {
            monoidal: "vertical".into(),
            gamma: b.braiding,
        });
        out.push((format!("dd/{}.json", e.name), doc));
    }
    for (name, m) in weak_maps() {
        out.push((format!("map/{name}.json"), Document::from_weak_map(&m)));
    }
    let (name, t) = transformation();
    out.push((format!("transformation/{name}.json"), Document::from_transformation(&t)));
    for r in rigs() {
        out.push((format!("rig/{}.json", r.name), Document::from_rig(&r)));
    }
    for o in bundled().into_iter().filter(|o| o.mutation.is_none()) {
        out.push((format!("obligation/{}.json", o.name), Document::from_obligation(&o)));
    }
    out
}

macro_rules! files {
    ($($path:literal),* $(,)?) => {
        &[$(($path, include_str!(concat!("../corpus/", $path)))),*]
    };
}

/// The bundled document tree as shipped in the crate's `corpus` directory.
pub const FILES: &[(&str, &str)] = files![
    "dd/strict-discrete-z2.json",
    "dd/pointed-z2-z2-p0-q0.json",
    "dd/pointed-z2-z2-p0-q1.json",
    "dd/pointed-z2-z2-p1-q0.json",
    "dd/pointed-z2-z2-p1-q1.json",
    "dd/pointed-z2-z4-p2-q0.json",
    "dd/pointed-z3-z3-p1-q1.json",
    "dd/pointed-z2xz2-z2-p10-q00.json",
    "dd/codiscrete-z3.json",
    "map/identity-pointed-z2-z2-p1-q1.json",
    "map/pointed-z2-z2-p0-q0-to-p1-q0.json",
    "transformation/pointed-z2-z2-p1-q1-nonidentity.json",
    "rig/boolean.json",
    "rig/z2.json",
    "rig/z4.json",
    "obligation/distpair-ts-round-trip.json",
    "obligation/distpair-interaction.json",
    "obligation/distpair-pair-t-round-trip.json",
    "obligation/distpair-pair-s-round-trip.json",
    "obligation/distpair-pair-associativity.json",
    "obligation/distpair-pair-unit.json",
    "obligation/weakts-interaction.json",
    "obligation/zeta-multiplication.json",
    "obligation/zeta-unit.json",
    "obligation/zeta-round-trip.json",
    "obligation/sigma-round-trip.json",
    "obligation/tau-round-trip.json",
    "obligation/tstrans.json",
    "obligation/exchange.json",
];

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ddcat::{check_alphakey, check_dd_braided};
    use crate::rigmodel::{check_rig, verify_beck};

    #[test]
    fn members_pass_and_non_homomorphisms_are_rejected() {
        let p = Pointed::cyclic(2, 4);
        assert!(p.member(&[1], &[0]).is_none());
        assert!(check_dd(&p.member(&[2], &[2]).unwrap()).passed());
    }

    #[test]
    fn search_on_z2_z2_finds_exactly_the_homomorphism_members() {
        let p = Pointed::cyclic(2, 2);
        let found = search_pointed(&p);
        let expected: Vec<_> = [(0, 0), (0, 1), (1, 0), (1, 1)]
            .iter()
            .map(|&(a, b)| p.member(&[a], &[b]).unwrap())
            .collect();
        assert_eq!(found.len(), expected.len());
        for x in &expected {
            assert!(found.contains(x));
        }
    }

    #[test]
    fn rigs_pass_and_mutants_fail_exactly_their_diagrams() {
        for r in rigs() {
            assert!(check_rig(&r).passed(), "{}", r.name);
            assert!(verify_beck(&r, 3).passed(), "{}", r.name);
        }
        for m in rig_mutants() {
            assert!(!check_rig(&m.rig).passed(), "{}", m.rig.name);
            let report = verify_beck(&m.rig, 3);
            let mut failed = report.failed_axioms();
            failed.sort();
            assert_eq!(failed, m.failing, "{}", m.rig.name);
        }
    }

    #[test]
    fn shipped_files_match_the_builders() {
        let built = documents();
        assert_eq!(built.len(), FILES.len());
        for ((path, doc), (file, text)) in built.iter().zip(FILES) {
            assert_eq!(path, file);
            assert_eq!(&doc.to_json(), text, "{path} is stale");
        }
    }

    #[test]
    fn every_entry_passes_dd_braided_and_alphakey() {
        for e in dd_structures() {
            assert!(check_dd_braided(&e.dd).passed(), "{}", e.name);
            assert!(check_alphakey(&e.dd).passed(), "{}", e.name);
        }
    }
}
