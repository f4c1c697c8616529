use std::collections::BTreeSet;

use dd_coherence::corpus;
use dd_coherence::rigmodel::{
    check_rig, combine_pair, enumerate_distributive_pairs, enumerate_ts_algebras, lambda, split_algebra, verify_beck,
    verify_strict_map_theorem, verify_writer_monads, Action, Rig, RigError, TsAlgebra,
};

/// Every function `{0..k} -> {0..k}`.
fn endos(k: usize) -> Vec<Vec<usize>> {
    (0..k.pow(k as u32))
        .map(|i| (0..k).map(|x| (i / k.pow(x as u32)) % k).collect())
        .collect()
}

fn after(g: &[usize], f: &[usize]) -> Vec<usize> {
    f.iter().map(|&x| g[x]).collect()
}

/// Monoid homomorphisms `M -> End(k)` for a monoid on `0..size` with the
/// given product and unit, as one function per element.
fn monoid_actions(size: usize, unit: usize, product: impl Fn(usize, usize) -> usize, k: usize) -> Vec<Vec<Vec<usize>>> {
    let fs = endos(k);
    let mut out = Vec::new();
    for i in 0..fs.len().pow(size as u32) {
        let rho: Vec<Vec<usize>> = (0..size)
            .map(|e| fs[(i / fs.len().pow(e as u32)) % fs.len()].clone())
            .collect();
        let unital = rho[unit] == (0..k).collect::<Vec<_>>();
        if unital && (0..size).all(|a| (0..size).all(|b| rho[product(a, b)] == after(&rho[a], &rho[b]))) {
            out.push(rho);
        }
    }
    out
}

/// `TS`-algebras are actions of `R × R` under `(a, m)(b, n) = (a + m·b, m·n)`.
fn oracle_ts_algebras(r: &Rig, k: usize) -> BTreeSet<Vec<usize>> {
    let n = r.size;
    let product = |p: usize, q: usize| {
        let ((a, m), (b, nn)) = ((p / n, p % n), (q / n, q % n));
        r.plus(a, r.times(m, b)) * n + r.times(m, nn)
    };
    monoid_actions(n * n, r.zero * n + r.one, product, k)
        .into_iter()
        .map(|rho| (0..n * n * k).map(|i| rho[i / k][i % k]).collect())
        .collect()
}

fn to_action(rho: &[Vec<usize>], k: usize) -> Action {
    Action {
        card: k,
        table: rho.iter().flatten().copied().collect(),
    }
}

fn oracle_pairs(r: &Rig, k: usize) -> BTreeSet<(Action, Action)> {
    let ts = monoid_actions(r.size, r.zero, |a, b| r.plus(a, b), k);
    let ss = monoid_actions(r.size, r.one, |a, b| r.times(a, b), k);
    let mut out = BTreeSet::new();
    for t in &ts {
        for s in &ss {
            // s_m ∘ t_a = t_{m·a} ∘ s_m
            let ok = r.elements().all(|m| {
                r.elements()
                    .all(|a| after(&s[m], &t[a]) == after(&t[r.times(m, a)], &s[m]))
            });
            if ok {
                out.insert((to_action(t, k), to_action(s, k)));
            }
        }
    }
    out
}

fn small_rigs() -> Vec<Rig> {
    vec![Rig::boolean(), Rig::zmod(2), Rig::zmod(3)]
}

#[test]
fn algebra_enumeration_matches_monoid_actions() {
    for r in small_rigs() {
        for k in 1..=2 {
            let found: BTreeSet<Vec<usize>> = enumerate_ts_algebras(&r, k).into_iter().map(|t| t.table).collect();
            assert_eq!(found, oracle_ts_algebras(&r, k), "{} |X|={k}", r.name);
        }
    }
}

#[test]
fn pair_enumeration_matches_commuting_actions() {
    for r in small_rigs() {
        for k in 1..=2 {
            let found: BTreeSet<(Action, Action)> = enumerate_distributive_pairs(&r, k).into_iter().collect();
            let oracle = oracle_pairs(&r, k);
            assert_eq!(found, oracle, "{} |X|={k}", r.name);
            assert_eq!(oracle.len(), oracle_ts_algebras(&r, k).len());
        }
    }
}

#[test]
fn split_and_combine_are_inverse() {
    for r in small_rigs() {
        for k in 1..=2 {
            for theta in enumerate_ts_algebras(&r, k) {
                let (t, s) = split_algebra(&r, &theta);
                assert_eq!(combine_pair(&r, &t, &s).unwrap(), theta);
            }
            for (t, s) in enumerate_distributive_pairs(&r, k) {
                assert_eq!(split_algebra(&r, &combine_pair(&r, &t, &s).unwrap()), (t, s));
            }
        }
    }
}

#[test]
fn strict_map_counts_match_a_direct_count() {
    let r = Rig::boolean();
    let (counts, report) = verify_strict_map_theorem(&r, 2);
    assert!(report.passed(), "{report}");
    let algebras: Vec<TsAlgebra> = (1..=2).flat_map(|k| enumerate_ts_algebras(&r, k)).collect();
    let (mut pairs, mut functions, mut maps) = (0, 0, 0);
    for a in &algebras {
        for b in &algebras {
            pairs += 1;
            for i in 0..b.card.pow(a.card as u32) {
                let f: Vec<usize> = (0..a.card).map(|x| (i / b.card.pow(x as u32)) % b.card).collect();
                functions += 1;
                let equivariant = (0..a.card).all(|x| {
                    r.elements()
                        .all(|s| r.elements().all(|m| f[a.act(&r, s, m, x)] == b.act(&r, s, m, f[x])))
                });
                maps += usize::from(equivariant);
            }
        }
    }
    assert_eq!(
        (counts.algebra_pairs, counts.functions, counts.ts_maps),
        (pairs, functions, maps)
    );
}

#[test]
fn combine_names_the_first_interaction_failure() {
    let r = Rig::zmod(2);
    // t_1 swaps and every s_m is constant at 0, so s_1 ∘ t_1 ≠ t_1 ∘ s_1 first
    // fails at (m, a, x) = (1, 1, 0) in enumeration order.
    let t = Action {
        card: 2,
        table: vec![0, 1, 1, 0],
    };
    let s = Action {
        card: 2,
        table: vec![0, 0, 0, 0],
    };
    assert!(matches!(
        combine_pair(&r, &t, &s),
        Err(RigError::InteractionViolation { m: 1, a: 1, x: 0 })
    ));
}

#[test]
fn the_law_multiplies_the_written_element() {
    for r in corpus::rigs() {
        for m in r.elements() {
            for a in r.elements() {
                for x in 0..3 {
                    assert_eq!(lambda(&r, m, (a, x)), (r.times(m, a), (m, x)));
                }
            }
        }
    }
}

#[test]
fn corpus_rigs_satisfy_every_law() {
    for r in corpus::rigs() {
        assert!(check_rig(&r).passed(), "{}", r.name);
        assert!(verify_writer_monads(&r, 2).passed(), "{}", r.name);
        assert!(verify_beck(&r, 2).passed(), "{}", r.name);
    }
}

#[test]
fn malformed_tables_are_rejected() {
    assert!(Rig::new("short", 2, vec![0; 3], vec![0; 4], 0, 1).is_err());
    assert!(Rig::new("range", 2, vec![0, 1, 1, 2], vec![0; 4], 0, 1).is_err());
    assert!(Rig::new("empty", 0, vec![], vec![], 0, 0).is_err());
}
