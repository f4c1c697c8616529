//! Interpretation of 1-cell terms in the writer-monad model of a rig.
//!
//! `T` and `S` are the writer monads of `(R, +, 0)` and `(R, ·, 1)`, `λ` is
//! `(m, (a, x)) ↦ (m·a, (m, x))`, each object is a finite TS-algebra and
//! each 1-cell generator an arbitrary function. An element of `T S ... X` is
//! a list of labels, one per letter, and a point of `X`.

use rand::seq::SliceRandom;
use rand::Rng;

use super::rules::{Hyp, RuleSet};
use super::search::{check_equal_1cells, neighbours, Outcome};
use super::{canonical, typecheck, Atom, Gen, Kind, Letter, Obj, OneCell, OneCellTerm, Word};
use crate::report::Report;
use crate::rigmodel::{combine_pair, enumerate_distributive_pairs, split_algebra, Action, Elem, Rig, TsAlgebra};

#[derive(Clone, Debug)]
pub struct ObjModel {
    pub theta: TsAlgebra,
    pub t: Action,
    pub s: Action,
}

#[derive(Clone, Debug)]
pub struct WriterModel {
    pub rig: Rig,
    /// Indexed by [`Obj::index`].
    pub objects: Vec<ObjModel>,
    /// Function tables of `f, g, h, k`.
    pub cells: [Vec<Elem>; 4],
}

pub type Point = (Vec<Elem>, Elem);

impl WriterModel {
    pub fn new(rig: Rig, algebras: [TsAlgebra; 3], cells: [Vec<Elem>; 4]) -> Self {
        let objects = algebras
            .into_iter()
            .map(|theta| {
                let (t, s) = split_algebra(&rig, &theta);
                ObjModel { theta, t, s }
            })
            .collect();
        let m = WriterModel { rig, objects, cells };
        for c in [OneCell::F, OneCell::G, OneCell::H, OneCell::K] {
            let table = &m.cells[c as usize];
            assert_eq!(table.len(), m.card(c.dom()), "{c:?} table length");
            assert!(
                table.iter().all(|&y| y < m.card(c.cod())),
                "{c:?} lands outside its codomain"
            );
        }
        m
    }

    pub fn card(&self, x: Obj) -> usize {
        self.objects[x.index()].theta.card
    }

    /// A model with random TS-algebras on sets of size `1..=max_card` and
    /// random functions.
    pub fn random(rig: &Rig, max_card: usize, rng: &mut impl Rng) -> Self {
        ModelSampler::new(rig, max_card).sample(rng)
    }

    /// Applies one atom; `None` for 2-cell holes and boxes.
    pub fn step(&self, a: Atom, (labels, x): &mut Point) -> Option<()> {
        let r = &self.rig;
        let p = a.pos as usize;
        match a.gen {
            Gen::MuT => {
                let b = labels.remove(p + 1);
                labels[p] = r.plus(labels[p], b);
            }
            Gen::MuS => {
                let b = labels.remove(p + 1);
                labels[p] = r.times(labels[p], b);
            }
            Gen::EtaT => labels.insert(p, r.zero),
            Gen::EtaS => labels.insert(p, r.one),
            Gen::Lambda => {
                let (m, b) = (labels[p], labels[p + 1]);
                labels[p] = r.times(m, b);
                labels[p + 1] = m;
            }
            Gen::Alg(o, Kind::T) => *x = self.objects[o.index()].t.act(labels.remove(p), *x),
            Gen::Alg(o, Kind::S) => *x = self.objects[o.index()].s.act(labels.remove(p), *x),
            Gen::Alg(o, Kind::TS) => {
                let m = labels.remove(p + 1);
                let b = labels.remove(p);
                *x = self.objects[o.index()].theta.act(r, b, m, *x);
            }
            Gen::Cell(c) => *x = self.cells[c as usize][*x],
            Gen::Hole(..) | Gen::Box(..) => return None,
        }
        Some(())
    }

    /// Every point of the set named by `w`.
    pub fn points(&self, w: &[Letter]) -> Vec<Point> {
        let Some(Letter::Obj(o)) = w.last() else {
            return Vec::new();
        };
        let n = w.len() - 1;
        let mut out = Vec::new();
        let mut labels = vec![0; n];
        loop {
            for x in 0..self.card(*o) {
                out.push((labels.clone(), x));
            }
            if !crate::fincat::advance(&mut labels, |_| self.rig.size) {
                break;
            }
        }
        out
    }

    /// The function a 1-cell term denotes, as its graph over [`points`].
    ///
    /// [`points`]: WriterModel::points
    pub fn function(&self, t: &OneCellTerm) -> Option<Vec<Point>> {
        self.points(&t.dom)
            .into_iter()
            .map(|mut pt| {
                for &a in &t.atoms {
                    self.step(a, &mut pt)?;
                }
                Some(pt)
            })
            .collect()
    }
}

/// Draws random writer models. The TS-algebras on each carrier size are
/// enumerated once, as combined distributive pairs, which is far cheaper
/// than filtering all `R × R × X → X` tables.
pub struct ModelSampler {
    rig: Rig,
    pools: Vec<Vec<TsAlgebra>>,
}

impl ModelSampler {
    pub fn new(rig: &Rig, max_card: usize) -> Self {
        let pools = (1..=max_card)
            .map(|k| {
                enumerate_distributive_pairs(rig, k)
                    .iter()
                    .map(|(t, s)| combine_pair(rig, t, s).expect("enumerated pairs interact"))
                    .collect()
            })
            .collect();
        ModelSampler {
            rig: rig.clone(),
            pools,
        }
    }

    pub fn sample(&self, rng: &mut impl Rng) -> WriterModel {
        let algebras = [(); 3].map(|_| {
            let pool = &self.pools[rng.gen_range(0..self.pools.len())];
            pool.choose(rng).expect("the trivial action always exists").clone()
        });
        let cards = algebras.each_ref().map(|a| a.card);
        let cells = [OneCell::F, OneCell::G, OneCell::H, OneCell::K].map(|c| {
            (0..cards[c.dom().index()])
                .map(|_| rng.gen_range(0..cards[c.cod().index()]))
                .collect()
        });
        WriterModel::new(self.rig.clone(), algebras, cells)
    }
}

/// Checks every rule of `rules` on small whiskerings: both sides must have
/// the same boundary, and they must denote the same function in `models`
/// random writer models over `rig` with carriers of size at most 2.
pub fn check_rules(rules: &RuleSet, rig: &Rig, models: usize, rng: &mut impl Rng) -> Report {
    let mut report = Report::new("rewrite rules");
    let sampler = ModelSampler::new(rig, 2);
    let samples: Vec<WriterModel> = (0..models).map(|_| sampler.sample(rng)).collect();
    for r in &rules.rules {
        'words: for prefix in [
            "", "T", "S", "TT", "ST", "TS", "SS", "STT", "SST", "TST", "TTS", "TSTS", "STST",
        ] {
            for base in ["A", "B", "C"] {
                let dom = super::syntax::parse_word(&format!("{prefix}{base}")).expect("literal word");
                let Ok(lhs) = OneCellTerm::new(dom.clone(), r.lhs.clone()) else {
                    continue;
                };
                let rhs = match OneCellTerm::new(dom, r.rhs.clone()) {
                    Ok(rhs) if rhs.cod() == lhs.cod() => rhs,
                    _ => {
                        report.push(
                            r.name.clone(),
                            format!("sides have different boundaries from {prefix}{base}"),
                        );
                        break 'words;
                    }
                };
                for m in &samples {
                    let (Some(fl), Some(fr)) = (m.function(&lhs), m.function(&rhs)) else {
                        continue;
                    };
                    if let Some(((pt, a), b)) = m
                        .points(&lhs.dom)
                        .into_iter()
                        .zip(fl)
                        .zip(fr)
                        .find(|((_, a), b)| a != b)
                    {
                        report.push(
                            r.name.clone(),
                            format!("{lhs} and {rhs} differ at {pt:?}: {a:?} versus {b:?}"),
                        );
                        break 'words;
                    }
                }
            }
        }
    }
    report
}

/// Objects given algebra structure by `hyps`, with the actions usable on them.
fn algebra_gens(hyps: &[Hyp]) -> Vec<Gen> {
    let mut out = Vec::new();
    for h in hyps {
        match *h {
            Hyp::Ts(x) => out.push(Gen::Alg(x, Kind::TS)),
            Hyp::Pair(x) => out.extend([Gen::Alg(x, Kind::T), Gen::Alg(x, Kind::S)]),
            _ => {}
        }
    }
    out
}

/// A random well-typed term built from the monad structure, `λ`, the algebra
/// actions named in `hyps` and the 1-cells `f`, `h`.
pub fn random_term(hyps: &[Hyp], max_atoms: usize, rng: &mut impl Rng) -> OneCellTerm {
    let algs = algebra_gens(hyps);
    let obj = *[Obj::A, Obj::B].choose(rng).expect("nonempty");
    let mut dom: Word = (0..rng.gen_range(0..=2))
        .map(|_| *[Letter::T, Letter::S].choose(rng).expect("nonempty"))
        .collect();
    dom.push(Letter::Obj(obj));
    let mut atoms = Vec::new();
    let mut word = dom.clone();
    for _ in 0..rng.gen_range(1..=max_atoms) {
        let mut options = Vec::new();
        let gens = [
            Gen::MuT,
            Gen::MuS,
            Gen::EtaT,
            Gen::EtaS,
            Gen::Lambda,
            Gen::Cell(OneCell::F),
            Gen::Cell(OneCell::H),
        ];
        for g in gens.iter().chain(&algs) {
            for p in 0..word.len() {
                let a = super::at(*g, p as u8);
                if typecheck(&word, &[a]).is_ok() {
                    options.push(a);
                }
            }
        }
        let Some(&a) = options.choose(rng) else { break };
        word = typecheck(&word, &[a]).expect("chosen from typed options");
        atoms.push(a);
    }
    OneCellTerm::new(dom, atoms).expect("built from typed steps")
}

/// A random chain of `steps` rule applications from `t`, kept within `cap`
/// atoms.
pub fn random_walk(t: &OneCellTerm, rules: &RuleSet, steps: usize, cap: usize, rng: &mut impl Rng) -> OneCellTerm {
    let mut atoms = canonical(&t.atoms);
    for _ in 0..steps {
        let next: Vec<Vec<Atom>> = neighbours(&t.dom, &atoms, rules, true)
            .into_iter()
            .filter(|n| n.len() <= cap)
            .collect();
        match next.choose(rng) {
            Some(n) => atoms = n.clone(),
            None => break,
        }
    }
    OneCellTerm {
        dom: t.dom.clone(),
        atoms,
    }
}

/// An equality `(lhs, rhs)` found by a random walk and then proven by the
/// prover within `depth`, or `None` if the prover did not confirm it.
pub fn sample_proven_equality(
    hyps: &[Hyp],
    rules: &RuleSet,
    depth: usize,
    rng: &mut impl Rng,
) -> Option<(OneCellTerm, OneCellTerm, Outcome)> {
    let lhs = random_term(hyps, 5, rng);
    let steps = rng.gen_range(1..=4);
    let rhs = random_walk(&lhs, rules, steps, lhs.atoms.len() + 4, rng);
    let out = check_equal_1cells(&lhs, &rhs, rules, depth).ok()?;
    out.is_proven().then_some((lhs, rhs, out))
}
