//! One PASS/FAIL line per acceptance criterion; exits non-zero if any fails.

use std::collections::BTreeSet;
use std::time::Instant;

use dd_coherence::corpus::{self, RigMutant};
use dd_coherence::ddcat::{check_alphakey, check_dd};
use dd_coherence::document::Document;
use dd_coherence::fincat::{check_category, check_functor, Functor};
use dd_coherence::monadterm::model::{check_rules, sample_proven_equality, ModelSampler};
use dd_coherence::monadterm::obligations::{self, Expect};
use dd_coherence::monadterm::rules::{Hyp, RuleSet};
use dd_coherence::monadterm::search::DEFAULT_DEPTH;
use dd_coherence::monadterm::{at, Gen, Obj};
use dd_coherence::monoidal::{
    check_braided, check_monoidal, check_monoidal_functor, check_monoidal_transformation, MonoidalTransformationData,
};
use dd_coherence::report::Report;
use dd_coherence::rigmodel::{distpair_census, verify_beck, verify_strict_map_theorem, Rig, ETA_S, ETA_T, MU_S, MU_T};
use dd_coherence::weakmap::{
    check_interaction, check_map_braided, check_transformation, check_weak_map, enumerate_braided_functors,
    enumerate_dd_transformations, enumerate_vertical_transformations, enumerate_weak_maps, promote_to_weak_map,
    reconstruct_h, reconstruct_h_bar, u_on_map, u_on_transformation, DDTransformation,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

type Verdict = Result<String, String>;

/// Failing checkers with their first violation, or a setup error.
type Criterion = fn() -> Verdict;

type Failures = Result<Vec<(String, String)>, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn passes(r: &Report) -> Result<(), String> {
    ensure(r.passed(), || r.to_string())
}

/// Beck diagrams a table pair breaks, read off the rig laws directly:
/// `1·a = a`, `(mn)a = m(na)`, `m·0 = 0` and `m(a+b) = ma + mb`.
fn broken_laws(r: &Rig) -> Vec<&'static str> {
    let es: Vec<usize> = r.elements().collect();
    let mut out = Vec::new();
    if es.iter().any(|&a| r.times(r.one, a) != a) {
        out.push(ETA_S);
    }
    if es.iter().any(|&m| {
        es.iter().any(|&n| {
            es.iter()
                .any(|&a| r.times(r.times(m, n), a) != r.times(m, r.times(n, a)))
        })
    }) {
        out.push(MU_S);
    }
    if es.iter().any(|&m| r.times(m, r.zero) != r.zero) {
        out.push(ETA_T);
    }
    if es.iter().any(|&m| {
        es.iter().any(|&a| {
            es.iter()
                .any(|&b| r.times(m, r.plus(a, b)) != r.plus(r.times(m, a), r.times(m, b)))
        })
    }) {
        out.push(MU_T);
    }
    out.sort();
    out
}

fn beck_axioms() -> Verdict {
    let mut names = Vec::new();
    for r in corpus::rigs() {
        passes(&verify_beck(&r, 3))?;
        ensure(broken_laws(&r).is_empty(), || format!("{} breaks a rig law", r.name))?;
        names.push(r.name.clone());
    }
    let mutants: Vec<RigMutant> = corpus::rig_mutants();
    ensure(mutants.len() >= 2, || "fewer than two mutants".into())?;
    for m in &mutants {
        let report = verify_beck(&m.rig, 3);
        let failed: Vec<&str> = report
            .failed_axioms()
            .into_iter()
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        ensure(failed == m.failing, || {
            format!("{}: failed {failed:?}, documented {:?}", m.rig.name, m.failing)
        })?;
        let oracle = broken_laws(&m.rig);
        ensure(oracle == m.failing, || {
            format!("{}: laws predict {oracle:?}", m.rig.name)
        })?;
    }
    Ok(format!(
        "{} pass at max_set 3; {} mutants fail exactly their predicted diagrams",
        names.join(", "),
        mutants.len()
    ))
}

fn distpair() -> Verdict {
    let (rows, report) = distpair_census(&Rig::boolean(), 3);
    passes(&report)?;
    let cells: Vec<String> = rows
        .iter()
        .map(|r| {
            format!(
                "|X|={}: {} algebras, {} pairs",
                r.card, r.ts_algebras, r.distributive_pairs
            )
        })
        .collect();
    ensure(
        rows.iter()
            .all(|r| r.ts_algebras == r.distributive_pairs && r.ts_algebras > 0),
        || cells.join("; "),
    )?;
    Ok(cells.join("; "))
}

fn strict_maps() -> Verdict {
    let mut out = Vec::new();
    for r in [Rig::boolean(), Rig::zmod(2)] {
        let (counts, report) = verify_strict_map_theorem(&r, 3);
        passes(&report)?;
        out.push(format!(
            "{}: {} algebra pairs, {} functions, {} TS-maps",
            r.name, counts.algebra_pairs, counts.functions, counts.ts_maps
        ));
    }
    Ok(out.join("; "))
}

fn prover_corpus() -> Verdict {
    let mut steps = Vec::new();
    for o in obligations::bundled()
        .into_iter()
        .filter(|o| o.expect == Expect::Proven)
    {
        let out = o.check(DEFAULT_DEPTH).map_err(|e| format!("{}: {e}", o.name))?;
        match out {
            dd_coherence::monadterm::search::Outcome::Proven { steps: n } => steps.push(format!("{} {n}", o.name)),
            _ => return Err(format!("{}: not found within depth {DEFAULT_DEPTH}", o.name)),
        }
    }
    Ok(format!(
        "{} obligations proven (steps: {})",
        steps.len(),
        steps.join(", ")
    ))
}

fn cross_model() -> Verdict {
    let hyps = [Hyp::Ts(Obj::A), Hyp::Pair(Obj::B)];
    let rules = RuleSet::with(&hyps);
    let sampler = ModelSampler::new(&Rig::boolean(), 3);
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let (mut samples, mut mismatches, mut tries) = (0, 0, 0);
    while samples < 100 {
        tries += 1;
        ensure(tries < 10_000, || format!("only {samples} proven samples"))?;
        let Some((lhs, rhs, _)) = sample_proven_equality(&hyps, &rules, DEFAULT_DEPTH, &mut rng) else {
            continue;
        };
        let model = sampler.sample(&mut rng);
        if model.function(&lhs) != model.function(&rhs) {
            mismatches += 1;
        }
        samples += 1;
    }
    ensure(mismatches == 0, || {
        format!("{mismatches} mismatches in {samples} samples")
    })?;
    Ok(format!("{samples} proven equalities, 0 mismatches"))
}

fn dd_axioms() -> Verdict {
    let entries = corpus::dd_structures();
    for e in &entries {
        passes(&check_dd(&e.dd))?;
        passes(&check_braided(
            &e.dd.to_braided().map_err(|err| format!("{}: {err}", e.name))?,
        ))?;
        passes(&check_alphakey(&e.dd))?;
    }
    Ok(format!(
        "{} structures pass check_dd, the braided axioms and alphakey",
        entries.len()
    ))
}

fn weak_map_theorems() -> Verdict {
    let mut total = 0;
    let mut richest = (0, String::new());
    for (name, hom) in corpus::homs() {
        let maps = enumerate_weak_maps(&hom);
        for m in &maps {
            passes(&check_map_braided(m))?;
            let h = reconstruct_h(&hom, &m.functor, &m.v).map_err(|e| e.to_string())?;
            ensure(h == m.h, || format!("{name}: reconstruct_h differs"))?;
            let hb = reconstruct_h_bar(&hom, &m.functor, &m.v).map_err(|e| e.to_string())?;
            ensure(hb == m.h, || format!("{name}: reconstruct_h_bar differs"))?;
            let back = promote_to_weak_map(hom.clone(), &u_on_map(m)).map_err(|e| format!("{name}: {e}"))?;
            ensure(back == *m, || format!("{name}: promote after u is not the identity"))?;
        }
        for d in enumerate_braided_functors(&hom).map_err(|e| e.to_string())? {
            let m = promote_to_weak_map(hom.clone(), &d).map_err(|e| format!("{name}: {e}"))?;
            ensure(u_on_map(&m) == d, || {
                format!("{name}: u after promote is not the identity")
            })?;
        }
        total += maps.len();
        if maps.len() > richest.0 {
            richest = (maps.len(), name);
        }
    }
    for (name, m) in corpus::weak_maps() {
        passes(&check_map_braided(&m)).map_err(|e| format!("{name}: {e}"))?;
    }
    ensure(richest.0 >= 2, || "no hom has two weak maps".into())?;
    Ok(format!(
        "{total} weak maps over {} homs; largest hom {} has {} maps",
        corpus::homs().len(),
        richest.1,
        richest.0
    ))
}

fn transformation_transfer() -> Verdict {
    let (mut pairs, mut transformations, mut distinct_nonempty) = (0, 0, 0);
    for (name, hom) in corpus::homs() {
        let maps = enumerate_weak_maps(&hom);
        for m in &maps {
            for n in &maps {
                let vertical = enumerate_vertical_transformations(m, n);
                let dd = enumerate_dd_transformations(m, n);
                ensure(vertical == dd, || {
                    format!("{name}: {} vertical, {} DD", vertical.len(), dd.len())
                })?;
                pairs += 1;
                transformations += dd.len();
                distinct_nonempty += usize::from(m != n && !dd.is_empty());
            }
        }
    }
    ensure(distinct_nonempty > 0, || {
        "no transformation between distinct maps".into()
    })?;
    Ok(format!(
        "{pairs} map pairs, {transformations} transformations, sets equal ({distinct_nonempty} pairs of distinct maps related)"
    ))
}

fn biequivalence() -> Verdict {
    let (mut functors, mut maps_total, mut cells) = (0, 0, 0);
    for (name, hom) in corpus::homs() {
        let maps = enumerate_weak_maps(&hom);
        let braided: BTreeSet<String> = enumerate_braided_functors(&hom)
            .map_err(|e| e.to_string())?
            .iter()
            .map(|d| format!("{d:?}"))
            .collect();
        let image: BTreeSet<String> = maps.iter().map(|m| format!("{:?}", u_on_map(m))).collect();
        ensure(image == braided, || {
            format!(
                "{name}: {} braided functors, {} in the image",
                braided.len(),
                image.len()
            )
        })?;
        for m in &maps {
            for n in &maps {
                let (um, un) = (u_on_map(m), u_on_map(n));
                let monoidal: BTreeSet<Vec<usize>> = all_component_tables(&um.functor, &un.functor)
                    .into_iter()
                    .filter(|c| {
                        MonoidalTransformationData::new(um.clone(), un.clone(), c.clone())
                            .is_ok_and(|t| check_monoidal_transformation(&t).passed())
                    })
                    .collect();
                let dd: Vec<DDTransformation> = enumerate_dd_transformations(m, n);
                let image: BTreeSet<Vec<usize>> = dd
                    .iter()
                    .map(|t| u_on_transformation(t).components.components)
                    .collect();
                ensure(image.len() == dd.len(), || {
                    format!("{name}: u is not injective on 2-cells")
                })?;
                ensure(image == monoidal, || {
                    format!("{name}: {} monoidal, {} in the image", monoidal.len(), image.len())
                })?;
                cells += dd.len();
            }
        }
        functors += braided.len();
        maps_total += maps.len();
    }
    Ok(format!(
        "{} homs: {maps_total} weak maps onto {functors} braided functors, {cells} 2-cells in bijection",
        corpus::homs().len()
    ))
}

/// Every typed component table `F ⇒ G`, natural or not.
fn all_component_tables(f: &Functor, g: &Functor) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for x in f.source.objects() {
        let choices = f.target.hom(f.obj(x), g.obj(x));
        out = out
            .iter()
            .flat_map(|t| choices.iter().map(move |&c| [t.clone(), vec![c]].concat()))
            .collect();
    }
    out
}

/// Names of the failing checkers in `battery`, with their first witness.
fn failing(battery: Vec<(&'static str, Report)>) -> Vec<(String, String)> {
    battery
        .into_iter()
        .filter(|(_, r)| !r.passed())
        .map(|(n, r)| {
            (
                n.to_string(),
                format!("{}: {}", r.violations[0].axiom, r.violations[0].witness),
            )
        })
        .collect()
}

fn dd_doc() -> Document {
    corpus::documents()
        .into_iter()
        .find(|(p, _)| p == "dd/pointed-z2-z2-p1-q1.json")
        .expect("bundled")
        .1
}

fn doc_battery(doc: &Document) -> Result<Vec<(&'static str, Report)>, String> {
    let c = doc.category().map_err(|e| e.to_string())?;
    let mut out = vec![("category", check_category(&c))];
    if out[0].1.passed() {
        let ms = doc.monoidals().map_err(|e| e.to_string())?;
        out.push(("monoidal vertical", check_monoidal(&ms[0].1)));
        out.push(("monoidal horizontal", check_monoidal(&ms[1].1)));
        if out.iter().all(|(_, r)| r.passed()) {
            out.push(("braided", check_braided(&doc.braided().map_err(|e| e.to_string())?)));
        }
    }
    Ok(out)
}

fn map_battery(m: &dd_coherence::weakmap::DDWeakMap) -> Vec<(&'static str, Report)> {
    vec![
        ("functor", check_functor(&m.functor)),
        ("vertical monoidal functor", check_monoidal_functor(&m.vertical())),
        ("horizontal monoidal functor", check_monoidal_functor(&m.horizontal())),
        ("interaction", check_interaction(m)),
    ]
}

struct Mutation {
    name: &'static str,
    intended: &'static str,
    /// Axiom the intended checker must report first, and a fragment of its
    /// witness locating the damage.
    axiom: &'static str,
    witness: &'static str,
    run: fn() -> Failures,
}

fn mutations() -> Vec<Mutation> {
    vec![
        Mutation {
            name: "composite t∘id at object 0 set to id",
            intended: "category",
            axiom: "right identity",
            witness: "#1:0->0",
            run: || {
                let mut doc = dd_doc();
                let cat = doc.category.as_mut().unwrap();
                let k = cat.compose.iter().position(|e| e[0] == 1 && e[1] == 0).unwrap();
                cat.compose[k][2] = 0;
                Ok(failing(doc_battery(&doc)?))
            },
        },
        Mutation {
            name: "vertical tensor of t0 and id1 set to id1",
            intended: "monoidal vertical",
            axiom: "tensor: composition",
            witness: "",
            run: || {
                let mut doc = dd_doc();
                doc.monoidal[0].tensor_morphisms[4 + 2] = 2;
                Ok(failing(doc_battery(&doc)?))
            },
        },
        Mutation {
            name: "vertical associator at (0,0,1) set to id1",
            intended: "monoidal vertical",
            axiom: "pentagon",
            witness: "(0,0,1,1)",
            run: || {
                let mut doc = dd_doc();
                doc.monoidal[0].associator[1] = 2;
                Ok(failing(doc_battery(&doc)?))
            },
        },
        Mutation {
            name: "braiding at (0,0) set to t0",
            intended: "braided",
            axiom: "hexagon",
            witness: "(0,0,0)",
            run: || {
                let mut doc = dd_doc();
                doc.braiding.as_mut().unwrap().gamma[0] = 1;
                Ok(failing(doc_battery(&doc)?))
            },
        },
        Mutation {
            name: "weak map v at (1,1) flipped",
            intended: "interaction",
            axiom: "interaction",
            witness: "(0,1,1,0)",
            run: || {
                let (_, mut m) = corpus::weak_maps().remove(1);
                m.v[3] ^= 1;
                Ok(failing(map_battery(&m)))
            },
        },
        Mutation {
            name: "vertical left unitor at 1 set to id1",
            intended: "monoidal vertical",
            axiom: "triangle",
            witness: "(0,1)",
            run: || {
                let mut doc = dd_doc();
                doc.monoidal[0].left_unit[1] = 2;
                Ok(failing(doc_battery(&doc)?))
            },
        },
        Mutation {
            name: "transformation component at the unit flipped",
            intended: "transformation",
            axiom: "tensor compatibility",
            witness: "(0,0)",
            run: || {
                let (_, mut t) = corpus::transformation();
                t.components[0] ^= 1;
                Ok(failing(vec![
                    ("source map", check_weak_map(&t.source)),
                    ("target map", check_weak_map(&t.target)),
                    ("transformation", check_transformation(&t)),
                ]))
            },
        },
        Mutation {
            name: "beck eta-S transcribed without the whisker",
            intended: "beck eta-S",
            axiom: "beck eta-S",
            witness: "different boundaries",
            run: || rule_mutation("beck eta-S", vec![at(Gen::EtaS, 0)]),
        },
        Mutation {
            name: "beck mu-T with the two λ swapped",
            intended: "beck mu-T",
            axiom: "beck mu-T",
            witness: "different boundaries",
            run: || {
                rule_mutation(
                    "beck mu-T",
                    vec![at(Gen::Lambda, 1), at(Gen::Lambda, 0), at(Gen::MuT, 0)],
                )
            },
        },
        Mutation {
            name: "S-cylinder hypothesis with σ inverted",
            intended: "tstrans",
            axiom: "not found",
            witness: "tstrans-sigma-inverted",
            run: || {
                let mut out = Vec::new();
                for o in obligations::bundled() {
                    let got = o.check(DEFAULT_DEPTH).map_err(|e| e.to_string())?;
                    if !got.is_proven() {
                        let name = if o.mutation.is_some() {
                            "tstrans"
                        } else {
                            "unmutated obligation"
                        };
                        out.push((
                            name.to_string(),
                            format!("not found: {} within depth {DEFAULT_DEPTH}", o.name),
                        ));
                    }
                }
                Ok(out)
            },
        },
    ]
}

fn rule_mutation(name: &str, rhs: Vec<dd_coherence::monadterm::Atom>) -> Failures {
    let mut rules = RuleSet::base();
    let r = rules.rules.iter_mut().find(|r| r.name == name).ok_or("no such rule")?;
    r.rhs = rhs;
    let report = check_rules(&rules, &Rig::boolean(), 2, &mut ChaCha8Rng::seed_from_u64(5));
    let names: BTreeSet<&str> = report.failed_axioms().into_iter().collect();
    Ok(names
        .into_iter()
        .map(|n| {
            let v = report
                .violations
                .iter()
                .find(|v| v.axiom == n)
                .expect("named by a violation");
            (n.to_string(), format!("{}: {}", v.axiom, v.witness))
        })
        .collect())
}

fn mutation_robustness() -> Verdict {
    let ms = mutations();
    ensure(ms.len() == 10, || format!("{} mutations", ms.len()))?;
    let mut lines = Vec::new();
    for m in &ms {
        let failed = (m.run)()?;
        let names: Vec<&str> = failed.iter().map(|(n, _)| n.as_str()).collect();
        ensure(names == [m.intended], || {
            format!("{}: failing checkers {failed:?}, intended {}", m.name, m.intended)
        })?;
        let witness = &failed[0].1;
        ensure(witness.starts_with(m.axiom) && witness.contains(m.witness), || {
            format!("{}: witness {witness:?} does not locate the damage", m.name)
        })?;
        lines.push(format!("{} -> {witness}", m.name));
    }
    Ok(lines.join("; "))
}

fn main() {
    let criteria: [(&str, Criterion); 10] = [
        ("Beck axioms", beck_axioms),
        ("distpair correspondence", distpair),
        ("strict-map theorem", strict_maps),
        ("prover corpus", prover_corpus),
        ("cross-model soundness", cross_model),
        ("DD axioms and braiding", dd_axioms),
        ("weak-map theorems", weak_map_theorems),
        ("transformation transfer", transformation_transfer),
        ("biequivalence hypotheses", biequivalence),
        ("mutation robustness", mutation_robustness),
    ];
    let start = Instant::now();
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let verdict = f();
        let ms = t.elapsed().as_millis();
        match verdict {
            Ok(detail) => println!("PASS {:>2} {name} ({ms} ms): {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {name} ({ms} ms): {why}", i + 1);
            }
        }
    }
    println!(
        "acceptance: {} of 10 criteria pass in {:.1} s",
        10 - failed,
        start.elapsed().as_secs_f64()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
