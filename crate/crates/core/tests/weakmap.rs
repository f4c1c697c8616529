use std::collections::BTreeSet;
use std::sync::Arc;

use dd_coherence::corpus::{self, Pointed};
use dd_coherence::fincat::{enumerate_functors, FinCategory, Functor, MorId};
use dd_coherence::monoidal::{check_monoidal_functor, compose_monoidal_functors};
use dd_coherence::weakmap::{
    check_interaction, check_map_braided, check_weak_map, compose_weak_maps, enumerate_monoidal_functors,
    enumerate_weak_maps, identity_weak_map, promote_to_weak_map, u_on_map, DDWeakMap, Hom, WeakMapError,
};

/// Every table whose entry `i` is drawn from `choices[i]`.
fn products(choices: &[Vec<MorId>]) -> Vec<Vec<MorId>> {
    let mut out = vec![Vec::new()];
    for c in choices {
        out = out
            .iter()
            .flat_map(|t: &Vec<MorId>| c.iter().map(move |&m| [t.clone(), vec![m]].concat()))
            .collect();
    }
    out
}

/// The interaction square read directly off the tables.
fn interaction_holds(m: &DDWeakMap) -> bool {
    let (x, y) = (&*m.hom.source, &*m.hom.target);
    let e: &FinCategory = y.carrier();
    let n = x.carrier().object_count();
    let (v, h) = (|a: usize, b: usize| m.v[a * n + b], |a: usize, b: usize| m.h[a * n + b]);
    (0..n).all(|a| {
        (0..n).all(|b| {
            (0..n).all(|c| {
                (0..n).all(|d| {
                    let lhs = e.compose(v(x.h(a, b), x.h(c, d)), y.vm(h(a, b), h(c, d)));
                    let rhs = e.compose(h(x.v(a, c), x.v(b, d)), y.hm(v(a, c), v(b, d)));
                    lhs.is_some() && lhs == rhs
                })
            })
        })
    })
}

type Key = (Vec<usize>, Vec<MorId>, Vec<MorId>, Vec<MorId>, MorId);

fn key(m: &DDWeakMap) -> Key {
    (
        m.functor.object_map.clone(),
        m.functor.morphism_map.clone(),
        m.v.clone(),
        m.h.clone(),
        m.eta,
    )
}

#[test]
fn enumeration_matches_a_brute_force_search() {
    let p = Pointed::cyclic(2, 2);
    for (src, tgt) in [
        (([0], [0]), ([1], [1])),
        (([1], [0]), ([0], [1])),
        (([1], [1]), ([1], [1])),
    ] {
        let x = Arc::new(p.member(&src.0, &src.1).unwrap());
        let y = Arc::new(p.member(&tgt.0, &tgt.1).unwrap());
        let hom = Arc::new(Hom::new(x.clone(), y.clone()));
        let (c, e) = (x.carrier(), y.carrier());
        let n = c.object_count();
        let mut oracle = BTreeSet::new();
        for f in enumerate_functors(c, e) {
            let slots = |t: &dyn Fn(usize, usize) -> usize, s: &dyn Fn(usize, usize) -> usize| {
                (0..n * n)
                    .map(|i| e.hom(t(f.obj(i / n), f.obj(i % n)), f.obj(s(i / n, i % n))))
                    .collect::<Vec<_>>()
            };
            let vs = products(&slots(&|a, b| y.v(a, b), &|a, b| x.v(a, b)));
            let hs = products(&slots(&|a, b| y.h(a, b), &|a, b| x.h(a, b)));
            for v in &vs {
                for h in &hs {
                    for eta in e.hom(y.unit(), f.obj(x.unit())) {
                        let m = DDWeakMap::new(hom.clone(), f.clone(), v.clone(), h.clone(), eta).unwrap();
                        let monoidal = check_monoidal_functor(&m.vertical()).passed()
                            && check_monoidal_functor(&m.horizontal()).passed();
                        if monoidal {
                            assert_eq!(check_interaction(&m).passed(), interaction_holds(&m));
                            if interaction_holds(&m) {
                                oracle.insert(key(&m));
                            }
                        }
                    }
                }
            }
        }
        let found: BTreeSet<Key> = enumerate_weak_maps(&hom).iter().map(key).collect();
        assert!(!oracle.is_empty());
        assert_eq!(found, oracle, "{src:?} -> {tgt:?}");
    }
}

#[test]
fn promotion_agrees_with_the_braid_square() {
    let p = Pointed::cyclic(2, 4);
    let members: Vec<_> = [0, 2]
        .into_iter()
        .flat_map(|a| [0, 2].into_iter().map(move |b| (a, b)))
        .collect();
    let mut promoted = 0;
    for &(sp, sq) in &members {
        for &(tp, tq) in &members {
            let hom = Arc::new(Hom::new(
                Arc::new(p.member(&[sp], &[sq]).unwrap()),
                Arc::new(p.member(&[tp], &[tq]).unwrap()),
            ));
            let (src, tgt) = (hom.source.to_braided().unwrap(), hom.target.to_braided().unwrap());
            for d in enumerate_monoidal_functors(&hom.source_v, &hom.target_v) {
                let e: &FinCategory = hom.target.carrier();
                let n = 2;
                let first = (0..n * n).map(|i| (i / n, i % n)).find(|&(a, b)| {
                    e.compose(d.functor.mor(src.braiding[a * n + b]), d.tensor_constraint[a * n + b])
                        != e.compose(
                            d.tensor_constraint[b * n + a],
                            tgt.braiding[d.functor.obj(a) * n + d.functor.obj(b)],
                        )
                });
                match (promote_to_weak_map(hom.clone(), &d), first) {
                    (Ok(m), None) => {
                        assert!(check_weak_map(&m).passed());
                        assert!(check_map_braided(&m).passed());
                        assert_eq!(u_on_map(&m), d);
                        promoted += 1;
                    }
                    (Err(WeakMapError::BraidAxiomViolation { x, y }), Some(pair)) => {
                        assert_eq!((x, y), pair);
                    }
                    (other, first) => panic!("{other:?} against square oracle {first:?}"),
                }
            }
        }
    }
    assert!(promoted > 0);
}

#[test]
fn promotion_rejects_a_non_monoidal_constraint() {
    let homs = corpus::homs();
    let (_, hom) = homs
        .into_iter()
        .find(|(_, h)| h.target.carrier().morphism_count() > 2)
        .unwrap();
    let mut d = u_on_map(&enumerate_weak_maps(&hom)[0]);
    let e: &FinCategory = hom.target.carrier();
    d.unit_constraint = e
        .hom(e.dom(d.unit_constraint), e.cod(d.unit_constraint))
        .into_iter()
        .find(|&u| u != d.unit_constraint)
        .unwrap();
    assert!(matches!(
        promote_to_weak_map(hom, &d),
        Err(WeakMapError::Precondition(_))
    ));
}

#[test]
fn composites_of_corpus_maps_are_weak_maps() {
    let homs = corpus::homs();
    let mut composed = 0;
    let maps: Vec<Vec<DDWeakMap>> = homs
        .iter()
        .map(|(_, h)| enumerate_weak_maps(h).into_iter().take(2).collect())
        .collect();
    for (i, (_, ab)) in homs.iter().enumerate() {
        for (j, _) in homs.iter().enumerate().filter(|(_, (_, bc))| bc.source == ab.target) {
            let (ms, ns) = (&maps[i], &maps[j]);
            for m in ms {
                for n in ns {
                    let k = compose_weak_maps(n, m).unwrap();
                    assert!(check_weak_map(&k).passed());
                    let direct = compose_monoidal_functors(&u_on_map(n), &u_on_map(m)).unwrap();
                    assert_eq!(u_on_map(&k), direct);
                    composed += 1;
                }
            }
        }
    }
    assert!(composed > 30, "{composed}");
}

#[test]
fn identity_maps_are_units_for_composition() {
    for e in corpus::dd_structures()
        .into_iter()
        .filter(|e| e.dd.carrier().object_count() == 2)
    {
        let x = Arc::new(e.dd);
        let id = identity_weak_map(x.clone());
        assert!(check_weak_map(&id).passed());
        for m in enumerate_weak_maps(&Arc::new(Hom::new(x.clone(), x.clone())))
            .iter()
            .take(8)
        {
            assert_eq!(key(&compose_weak_maps(&id, m).unwrap()), key(m));
            assert_eq!(key(&compose_weak_maps(m, &id).unwrap()), key(m));
        }
    }
}

#[test]
fn mismatched_endpoints_do_not_compose() {
    let homs = corpus::homs();
    let (_, ab) = homs.iter().find(|(_, h)| h.source != h.target).unwrap();
    let m = &enumerate_weak_maps(ab)[0];
    assert!(compose_weak_maps(m, m).is_err());
}

#[test]
fn a_wrong_sized_functor_is_rejected() {
    let hom = &corpus::homs()[0].1;
    let f = Functor::identity(hom.source.carrier().clone());
    assert!(DDWeakMap::new(hom.clone(), f, vec![0], vec![0], 0).is_err());
}
