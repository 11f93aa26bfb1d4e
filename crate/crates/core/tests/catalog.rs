use gsb_core::catalog::{
    adyan_thurston_group, adyan_thurston_pos, bs_normal_forms, partially_commutative, perm_length,
    perp, plactic3_basis, plactic_rows, plactic_standard, symmetric_group, AtGenerators,
    CommutationGraph, Permutation,
};
use gsb_core::{
    complete, is_gsb, CompletionBudget, Kind, NcPolynomial, Parallelism, Presentation, Word,
};

fn names(s: &[&str]) -> Vec<String> {
    s.iter().map(|x| x.to_string()).collect()
}

#[test]
fn presets_round_trip() {
    let gens = names(&["x", "y", "z"]);
    let graph = CommutationGraph::new([("x", "y"), ("y", "z")]).unwrap();
    let mut all = vec![
        symmetric_group(1).unwrap(),
        symmetric_group(3).unwrap(),
        plactic_standard(4).unwrap(),
        plactic3_basis(),
        plactic_rows(3, 2).unwrap().presentation,
        adyan_thurston_pos(2).unwrap(),
        adyan_thurston_group(2).unwrap(),
    ];
    for kind in [Kind::Monoid, Kind::Group, Kind::Lie] {
        let pc = partially_commutative(&gens, &graph, kind, 5).unwrap();
        all.push(pc.defining);
        all.push(pc.family);
    }
    for p in all {
        let text = p.emit();
        assert_eq!(Presentation::parse(&text).unwrap(), p, "{text}");
    }
}

#[test]
fn s2_has_two_elements() {
    let p = symmetric_group(1).unwrap();
    let res = complete(
        &p.alphabet,
        &p.associative_relations().unwrap(),
        CompletionBudget::default(),
    )
    .unwrap();
    assert_eq!(res.system.irr_words(4).unwrap().len(), 2);
}

fn reduced_words(p: &Permutation) -> Vec<Vec<usize>> {
    let n = p.size() - 1;
    let len = perm_length(p);
    let mut layer = vec![vec![]];
    for _ in 0..len {
        layer = layer
            .into_iter()
            .flat_map(|w: Vec<usize>| {
                (1..=n).map(move |i| {
                    let mut v = w.clone();
                    v.push(i);
                    v
                })
            })
            .filter(|w| perm_length(&Permutation::from_generators(n + 1, w).unwrap()) == w.len())
            .collect();
    }
    layer.retain(|w| &Permutation::from_generators(n + 1, w).unwrap() == p);
    layer
}

#[test]
fn perp_agrees_with_reduced_words() {
    for n in 1..=3 {
        let perms: Vec<Permutation> = bs_normal_forms(n).into_keys().collect();
        for a in &perms {
            let ra = reduced_words(a);
            for b in &perms {
                let rb = reduced_words(b);
                let all_reduced = ra.iter().all(|u| {
                    rb.iter().all(|v| {
                        let w: Vec<usize> = u.iter().chain(v).copied().collect();
                        perm_length(&Permutation::from_generators(n + 1, &w).unwrap()) == w.len()
                    })
                });
                assert_eq!(perp(a, b).unwrap(), all_reduced, "{a:?} {b:?}");
            }
        }
    }
}

fn braid_relations(n: usize) -> Vec<(Vec<usize>, Vec<usize>)> {
    let mut out = Vec::new();
    for i in 1..=n {
        for j in i + 2..=n {
            out.push((vec![i, j], vec![j, i]));
        }
        if i < n {
            out.push((vec![i, i + 1, i], vec![i + 1, i, i + 1]));
        }
    }
    out
}

#[test]
fn braid_relations_hold_in_adyan_thurston_generators() {
    for n in 1..=3 {
        let g = AtGenerators::new(n).unwrap();
        for p in [
            adyan_thurston_pos(n).unwrap(),
            adyan_thurston_group(n).unwrap(),
        ] {
            let s = p.rewrite_system().unwrap();
            assert!(is_gsb(&s, None).0, "n = {n}");
            let lift = |sigmas: &[usize]| -> NcPolynomial {
                let w: Word = g
                    .braid_word(sigmas)
                    .unwrap()
                    .letters()
                    .iter()
                    .map(|&l| p.alphabet.letter(g.alphabet.name(l)).unwrap())
                    .collect();
                NcPolynomial::from_word(w)
            };
            for (u, v) in braid_relations(n) {
                assert_eq!(
                    s.reduce(&lift(&u)),
                    s.reduce(&lift(&v)),
                    "n = {n}: {u:?} = {v:?}"
                );
            }
        }
    }
}

#[test]
fn adyan_thurston_generator_counts() {
    for (n, count) in [(1, 1), (2, 5), (3, 23)] {
        assert_eq!(AtGenerators::new(n).unwrap().names.len(), count);
    }
    let g = adyan_thurston_group(2).unwrap();
    assert_eq!(g.alphabet.names().last().unwrap(), "r121-1");
}

#[test]
fn row_presentation_certificate() {
    let rows = plactic_rows(3, 3).unwrap();
    assert_eq!(rows.rows.len(), 19);
    let cert = rows.bounded_certificate(&Parallelism::threads(2)).unwrap();
    assert!(cert.holds());
    assert!(cert.skipped > 0);
}

#[test]
fn plactic4_keeps_growing() {
    let p = plactic_standard(4).unwrap();
    let s = p.rewrite_system().unwrap();
    assert!(!is_gsb(&s, Some(4)).0);
    let res = complete(
        &p.alphabet,
        &p.associative_relations().unwrap(),
        CompletionBudget::with_max_deg(6),
    )
    .unwrap();
    assert!(!res.is_complete());
}
