//! The acceptance suite: one line per criterion, each with its wall-clock
//! bound.

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::time::{Duration, Instant};

use gsb_core::catalog::{
    adyan_thurston_group, adyan_thurston_pos, coxeter_indices, matches_bs_pattern,
    partially_commutative, plactic3_basis, plactic_digits, plactic_standard, plactic_word,
    row_associativity_trials, symmetric_group, AtGenerators, CommutationGraph, Tableau,
};
use gsb_core::completion::Origin;
use gsb_core::lie::{lie_is_gsb, LieMonomial};
use gsb_core::poly::rat;
use gsb_core::{
    complete, complete_with, is_gsb, lie_expand, nlsw_enumerate, to_nlsw_basis, Alphabet,
    CompletionBudget, CompletionStatus, Kind, Letter, NcPolynomial, Order, Parallelism,
    RewriteSystem, Word,
};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

type Verdict = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn timed(bound: Duration, f: impl FnOnce() -> Verdict) -> Verdict {
    let start = Instant::now();
    let out = f();
    let took = start.elapsed();
    let detail = out?;
    ensure(took < bound, || format!("took {took:.2?}, bound {bound:?}"))?;
    Ok(format!("{detail} [{took:.2?}]"))
}

fn completed_plactic3() -> RewriteSystem {
    let p = plactic_standard(3).unwrap();
    complete(
        &p.alphabet,
        &p.associative_relations().unwrap(),
        CompletionBudget::default(),
    )
    .unwrap()
    .system
}

fn plactic3_verification() -> Verdict {
    let s = plactic3_basis()
        .rewrite_system()
        .map_err(|e| e.to_string())?;
    let (ok, fails) = is_gsb(&s, None);
    ensure(ok && fails.is_empty() && s.len() == 11, || {
        format!("{} failing compositions", fails.len())
    })?;
    Ok("11 relations, 0 failures".into())
}

fn plactic3_completion() -> Verdict {
    let p = plactic_standard(3).unwrap();
    let res = complete(
        &p.alphabet,
        &p.associative_relations().unwrap(),
        CompletionBudget::default(),
    )
    .map_err(|e| e.to_string())?;
    ensure(res.is_complete(), || format!("status {:?}", res.status))?;
    let got: HashSet<NcPolynomial> = res.system.polynomials().into_iter().collect();
    let want: HashSet<NcPolynomial> = plactic3_basis()
        .associative_relations()
        .unwrap()
        .iter()
        .map(|f| f.make_monic(Order::DegLex).unwrap())
        .collect();
    ensure(got == want, || {
        format!("{} relations, differs from the basis", got.len())
    })?;
    Ok(format!(
        "complete, {} relations equal to the basis",
        got.len()
    ))
}

fn plactic4_infinitude() -> Verdict {
    let p = plactic_standard(4).unwrap();
    let res = complete_with(
        &p.alphabet,
        &p.associative_relations().unwrap(),
        CompletionBudget::with_max_deg(7),
        &Parallelism::threads(0),
    )
    .map_err(|e| e.to_string())?;
    ensure(!res.is_complete(), || "reached status complete".into())?;
    let long = res
        .added
        .iter()
        .filter(|r| !matches!(r.origin, Origin::Input { .. }))
        .filter(|r| r.relation.leading_word(Order::DegLex).map_or(0, Word::len) >= 5)
        .count();
    ensure(long > 0, || "no new relation of degree >= 5".into())?;
    Ok(format!(
        "{:?}, {long} new relations of degree >= 5",
        res.status
    ))
}

/// `S_{n+1}` by breadth-first closure under adjacent transpositions.
fn permutation_oracle(n: usize) -> HashSet<Vec<usize>> {
    let id: Vec<usize> = (1..=n + 1).collect();
    let mut seen = HashSet::from([id.clone()]);
    let mut queue = VecDeque::from([id]);
    while let Some(p) = queue.pop_front() {
        for i in 0..n {
            let mut q = p.clone();
            q.swap(i, i + 1);
            if seen.insert(q.clone()) {
                queue.push_back(q);
            }
        }
    }
    seen
}

fn apply_word(n: usize, word: &[usize]) -> Vec<usize> {
    let mut p: Vec<usize> = (1..=n + 1).collect();
    for &i in word {
        p.swap(i - 1, i);
    }
    p
}

fn symmetric_groups() -> Verdict {
    let mut sizes = Vec::new();
    for n in [2, 3] {
        let p = symmetric_group(n).unwrap();
        let res = complete(
            &p.alphabet,
            &p.associative_relations().unwrap(),
            CompletionBudget::default(),
        )
        .map_err(|e| e.to_string())?;
        ensure(res.is_complete(), || {
            format!("n={n}: status {:?}", res.status)
        })?;
        let group = permutation_oracle(n);
        let irr = res
            .system
            .irr_words(n * (n + 1) / 2 + 2)
            .map_err(|e| e.to_string())?;
        ensure(irr.len() == group.len(), || {
            format!(
                "n={n}: {} irreducible words, |S| = {}",
                irr.len(),
                group.len()
            )
        })?;
        let mut images = HashSet::new();
        for w in &irr {
            let idx = coxeter_indices(&p.alphabet, w).unwrap();
            ensure(matches_bs_pattern(&idx, n), || {
                format!("n={n}: {idx:?} breaks the pattern")
            })?;
            images.insert(apply_word(n, &idx));
        }
        ensure(images == group, || {
            format!("n={n}: normal forms do not biject onto the group")
        })?;
        sizes.push(irr.len());
    }
    Ok(format!("|Irr| = {sizes:?}"))
}

fn adyan_thurston() -> Verdict {
    let pos = adyan_thurston_pos(2)
        .unwrap()
        .rewrite_system()
        .map_err(|e| e.to_string())?;
    let (ok, fails) = is_gsb(&pos, None);
    ensure(ok, || format!("positive monoid: {} failures", fails.len()))?;
    let group = adyan_thurston_group(2).unwrap();
    let s = group.rewrite_system().map_err(|e| e.to_string())?;
    let g = AtGenerators::new(2).unwrap();
    let lift = |sigmas: &[usize]| -> NcPolynomial {
        let w = g.braid_word(sigmas).unwrap();
        NcPolynomial::from_word(
            w.letters()
                .iter()
                .map(|&l| group.alphabet.letter(g.alphabet.name(l)).unwrap())
                .collect(),
        )
    };
    let a = s.reduce(&lift(&[1, 2, 1]));
    let b = s.reduce(&lift(&[2, 1, 2]));
    ensure(a == b, || {
        format!(
            "{} vs {}",
            a.render(&group.alphabet),
            b.render(&group.alphabet)
        )
    })?;
    Ok(format!(
        "{} positive relations; both braid words reduce to {}",
        pos.len(),
        a.render(&group.alphabet)
    ))
}

fn row_associativity() -> Verdict {
    let rep = row_associativity_trials(4, 4, 200, 2024, &Parallelism::threads(0))
        .map_err(|e| e.to_string())?;
    ensure(rep.failures.is_empty(), || {
        format!("{} failing triples", rep.failures.len())
    })?;
    Ok("200 triples agree".into())
}

fn words_over(k: usize, max_len: u32) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for len in 1..=max_len {
        for code in 0..k.pow(len) {
            let mut c = code;
            out.push(
                (0..len)
                    .map(|_| {
                        let d = c % k + 1;
                        c /= k;
                        d
                    })
                    .collect(),
            );
        }
    }
    out
}

fn schensted_equivalence() -> Verdict {
    let s = completed_plactic3();
    let x = s.alphabet().clone();
    let words = words_over(3, 6);
    let mut mismatches = Vec::new();
    for w in &words {
        let nf = s.reduce_word(&plactic_word(&x, w).unwrap());
        let nf = plactic_digits(&x, nf.terms().next().unwrap().0);
        let t = Tableau::from_word(w);
        if t.row_reading() != nf {
            mismatches.push((w.clone(), nf, t.row_reading()));
        }
    }
    let digits = |v: &[usize]| v.iter().map(|d| d.to_string()).collect::<String>();
    ensure(mismatches.is_empty(), || {
        let (w, nf, row) = &mismatches[0];
        format!(
            "{} of {} words differ; e.g. nf({}) = {}, row reading {}",
            mismatches.len(),
            words.len(),
            digits(w),
            digits(nf),
            digits(row)
        )
    })?;
    Ok(format!("{} words", words.len()))
}

fn mobius(n: usize) -> i64 {
    let (mut m, mut k, mut sign) = (n, 2, 1);
    while k * k <= m {
        if m % k == 0 {
            m /= k;
            if m % k == 0 {
                return 0;
            }
            sign = -sign;
        }
        k += 1;
    }
    if m > 1 {
        sign = -sign;
    }
    sign
}

fn necklaces(k: usize, n: usize) -> usize {
    let total: i64 = (1..=n)
        .filter(|&d| n.is_multiple_of(d))
        .map(|d| mobius(d) * (k as i64).pow((n / d) as u32))
        .sum();
    (total / n as i64) as usize
}

fn witt_counts() -> Verdict {
    let two = Alphabet::new(["b", "a"]).unwrap();
    let three = Alphabet::new(["c", "b", "a"]).unwrap();
    let got2: Vec<usize> = (1..=6).map(|d| nlsw_enumerate(&two, d).len()).collect();
    let got3: Vec<usize> = (1..=4).map(|d| nlsw_enumerate(&three, d).len()).collect();
    let want2: Vec<usize> = (1..=6).map(|d| necklaces(2, d)).collect();
    let want3: Vec<usize> = (1..=4).map(|d| necklaces(3, d)).collect();
    ensure(
        want2 == [2, 1, 2, 3, 6, 9] && want3 == [3, 3, 8, 18],
        || "necklace oracle disagrees".into(),
    )?;
    ensure(got2 == want2 && got3 == want3, || {
        format!("{got2:?} / {got3:?}")
    })?;
    Ok(format!("{got2:?} and {got3:?}"))
}

fn random_monomial(rng: &mut StdRng, letters: u16, degree: usize) -> LieMonomial {
    if degree == 1 {
        return LieMonomial::Leaf(Letter(rng.gen_range(0..letters)));
    }
    let left = rng.gen_range(1..degree);
    LieMonomial::bracket(
        random_monomial(rng, letters, left),
        random_monomial(rng, letters, degree - left),
    )
}

fn lie_expansion() -> Verdict {
    let mut rng = StdRng::seed_from_u64(9);
    for i in 0..500 {
        let deg = rng.gen_range(1..=6);
        let m = random_monomial(&mut rng, 3, deg);
        let basis = to_nlsw_basis(&m);
        ensure(basis.expand() == lie_expand(&m), || {
            format!("trial {i}: basis expansion differs")
        })?;
        let da = rng.gen_range(1..=2);
        let a = random_monomial(&mut rng, 3, da);
        let db = rng.gen_range(1..=2);
        let b = random_monomial(&mut rng, 3, db);
        let dc = rng.gen_range(1..=2);
        let c = random_monomial(&mut rng, 3, dc);
        let br = |x: &LieMonomial, y: &LieMonomial| LieMonomial::bracket(x.clone(), y.clone());
        let mut anti = lie_expand(&br(&a, &b));
        anti = anti.add(&lie_expand(&br(&b, &a)));
        ensure(anti.is_zero(), || format!("trial {i}: anti-symmetry"))?;
        let jacobi = lie_expand(&br(&br(&a, &b), &c))
            .add(&lie_expand(&br(&br(&b, &c), &a)))
            .add(&lie_expand(&br(&br(&c, &a), &b)));
        ensure(jacobi.is_zero(), || format!("trial {i}: Jacobi"))?;
    }
    Ok("500 bracketings".into())
}

trait Add {
    fn add(&self, other: &Self) -> Self;
}

impl Add for NcPolynomial {
    fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in other.terms() {
            out.add_term(w.clone(), c.clone());
        }
        out
    }
}

fn partially_commutative_theorems() -> Verdict {
    let gens: Vec<String> = ["a", "b", "c", "d"].iter().map(|s| s.to_string()).collect();
    let mut sizes = Vec::new();
    for seed in 0..5u64 {
        let k = 3 + (seed as usize % 2);
        let g = CommutationGraph::random(&gens[..k], 0.6, seed);
        let pc =
            partially_commutative(&gens[..k], &g, Kind::Monoid, 6).map_err(|e| e.to_string())?;
        let s = pc.family.rewrite_system().map_err(|e| e.to_string())?;
        let (ok, fails) = is_gsb(&s, Some(6));
        ensure(ok, || format!("seed {seed}: {} failures", fails.len()))?;
        sizes.push(s.len());
    }
    let xyz: Vec<String> = ["x", "y", "z"].iter().map(|s| s.to_string()).collect();
    let pc = partially_commutative(&xyz, &CommutationGraph::complete(&xyz), Kind::Lie, 4)
        .map_err(|e| e.to_string())?;
    let lie = pc.family.lie_system().map_err(|e| e.to_string())?;
    let (ok, fails) = lie_is_gsb(&lie, Some(4));
    ensure(ok, || format!("Lie family: {} failures", fails.len()))?;
    Ok(format!(
        "family sizes {sizes:?}; Lie family of {} relations",
        lie.len()
    ))
}

fn random_word(rng: &mut StdRng, letters: u16, max_len: usize) -> Word {
    let len = rng.gen_range(0..=max_len);
    (0..len)
        .map(|_| Letter(rng.gen_range(0..letters)))
        .collect()
}

fn property_suite() -> Verdict {
    let mut rng = StdRng::seed_from_u64(11);
    for _ in 0..10_000 {
        let (u, v) = (random_word(&mut rng, 3, 6), random_word(&mut rng, 3, 6));
        let (a, b) = (random_word(&mut rng, 3, 4), random_word(&mut rng, 3, 4));
        let (su, sv) = (u.sandwich(&a, &b), v.sandwich(&a, &b));
        ensure(u.cmp(&v) == su.cmp(&sv), || "order is not monomial".into())?;
    }
    let s = completed_plactic3();
    for i in 0..1000 {
        let mut f = NcPolynomial::zero();
        for _ in 0..rng.gen_range(1..=5) {
            let w = random_word(&mut rng, 3, 6);
            f.add_term(w, rat(rng.gen_range(-9..=9), rng.gen_range(1..=4)));
        }
        let (nf, trace) = s.normal_form(&f);
        ensure(s.reduce(&nf) == nf, || {
            format!("polynomial {i}: nf not idempotent")
        })?;
        ensure(nf.terms().all(|(w, _)| !s.is_reducible(w)), || {
            format!("polynomial {i}: reducible nf")
        })?;
        ensure(trace.replay(&nf, &s) == f, || {
            format!("polynomial {i}: trace does not replay")
        })?;
    }
    let p = plactic_standard(4).unwrap();
    let inputs = p.associative_relations().unwrap();
    let budget = CompletionBudget::with_max_deg(6);
    let one = complete_with(&p.alphabet, &inputs, budget, &Parallelism::sequential())
        .map_err(|e| e.to_string())?;
    let four = complete_with(&p.alphabet, &inputs, budget, &Parallelism::threads(4))
        .map_err(|e| e.to_string())?;
    let (j1, j4) = (one.to_json().to_string(), four.to_json().to_string());
    ensure(j1 == j4, || "1 and 4 workers disagree".into())?;
    ensure(one.status == CompletionStatus::TruncatedAtDegree(6), || {
        format!("{:?}", one.status)
    })?;
    Ok(format!(
        "10^4 triples, 10^3 polynomials, {} byte JSON identical",
        j1.len()
    ))
}

struct Criterion {
    id: u8,
    name: &'static str,
    bound: Duration,
    run: fn() -> Verdict,
    /// Fails as stated; reported, not required.
    known_conflict: bool,
}

fn criteria() -> Vec<Criterion> {
    let s = Duration::from_secs;
    vec![
        Criterion {
            id: 1,
            name: "plactic-3 GSB verification",
            bound: s(1),
            run: plactic3_verification,
            known_conflict: false,
        },
        Criterion {
            id: 2,
            name: "plactic-3 completion",
            bound: s(10),
            run: plactic3_completion,
            known_conflict: false,
        },
        Criterion {
            id: 3,
            name: "plactic-4 infinitude signal",
            bound: s(300),
            run: plactic4_infinitude,
            known_conflict: false,
        },
        Criterion {
            id: 4,
            name: "symmetric groups",
            bound: s(30),
            run: symmetric_groups,
            known_conflict: false,
        },
        Criterion {
            id: 5,
            name: "Adyan-Thurston",
            bound: s(60),
            run: adyan_thurston,
            known_conflict: false,
        },
        Criterion {
            id: 6,
            name: "row associativity n=4",
            bound: s(30),
            run: row_associativity,
            known_conflict: false,
        },
        Criterion {
            id: 7,
            name: "Schensted/GSB row reading",
            bound: s(60),
            run: schensted_equivalence,
            known_conflict: true,
        },
        Criterion {
            id: 8,
            name: "Witt counts",
            bound: s(60),
            run: witt_counts,
            known_conflict: false,
        },
        Criterion {
            id: 9,
            name: "Lie expansion",
            bound: s(60),
            run: lie_expansion,
            known_conflict: false,
        },
        Criterion {
            id: 10,
            name: "partially commutative",
            bound: s(60),
            run: partially_commutative_theorems,
            known_conflict: false,
        },
        Criterion {
            id: 11,
            name: "property suite",
            bound: s(120),
            run: property_suite,
            known_conflict: false,
        },
    ]
}

#[test]
fn acceptance() {
    let mut required_failures = BTreeSet::new();
    for c in criteria() {
        match timed(c.bound, c.run) {
            Ok(detail) => println!("criterion {:>2} PASS  {}: {detail}", c.id, c.name),
            Err(why) => {
                let tag = if c.known_conflict {
                    "  (known conflict)"
                } else {
                    ""
                };
                println!("criterion {:>2} FAIL  {}: {why}{tag}", c.id, c.name);
                if !c.known_conflict {
                    required_failures.insert(c.id);
                }
            }
        }
    }
    assert!(
        required_failures.is_empty(),
        "failing criteria: {required_failures:?}"
    );
}

/// The literal row-reading claim. Under `3 > 2 > 1` the relation
/// `3212 → 2321` rewrites the row reading `3212` of its own class, so this
/// cannot hold; run with `--ignored` to see the counterexample.
#[test]
#[ignore = "row reading is not the deg-lex normal form; see acceptance output"]
fn schensted_row_reading_literal() {
    if let Err(why) = schensted_equivalence() {
        panic!("{why}");
    }
}

#[test]
fn normal_forms_share_the_tableau() {
    let s = completed_plactic3();
    let x = s.alphabet().clone();
    for w in words_over(3, 6) {
        let nf = s.reduce_word(&plactic_word(&x, &w).unwrap());
        let nf = plactic_digits(&x, nf.terms().next().unwrap().0);
        assert_eq!(Tableau::from_word(&nf), Tableau::from_word(&w), "{w:?}");
    }
}
