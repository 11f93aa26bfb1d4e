use gsb_core::catalog::{
    perm_length, perm_mul, perp, plactic3_basis, row_product, Permutation, Row, RowProduct, Tableau,
};
use gsb_core::lie::{alsw_factorization, is_alsw, LieMonomial};
use gsb_core::poly::rat;
use gsb_core::presentation::{parse_polynomial, render_assoc};
use gsb_core::{lie_expand, to_nlsw_basis, Letter, NcPolynomial, RewriteSystem, Word};
use proptest::prelude::*;

fn word(max_len: usize) -> impl Strategy<Value = Word> {
    proptest::collection::vec(0u16..3, 0..=max_len)
        .prop_map(|v| v.into_iter().map(Letter).collect())
}

fn poly() -> impl Strategy<Value = NcPolynomial> {
    proptest::collection::vec((word(6), -9i64..=9, 1i64..=5), 1..6)
        .prop_map(|ts| NcPolynomial::from_terms(ts.into_iter().map(|(w, p, q)| (w, rat(p, q)))))
}

fn monomial() -> impl Strategy<Value = LieMonomial> {
    let leaf = (0u16..3).prop_map(|l| LieMonomial::Leaf(Letter(l)));
    leaf.prop_recursive(5, 6, 2, |inner| {
        (inner.clone(), inner).prop_map(|(a, b)| LieMonomial::bracket(a, b))
    })
}

fn row() -> impl Strategy<Value = Row> {
    proptest::collection::vec(1usize..=4, 1..=4).prop_map(|mut v| {
        v.sort_unstable();
        Row::new(v).unwrap()
    })
}

fn plactic3() -> RewriteSystem {
    plactic3_basis().rewrite_system().unwrap()
}

proptest! {
    #[test]
    fn deglex_is_monomial(u in word(6), v in word(6), a in word(4), b in word(4)) {
        prop_assert_eq!(u.cmp(&v), u.sandwich(&a, &b).cmp(&v.sandwich(&a, &b)));
    }

    #[test]
    fn normal_form_is_idempotent_and_traced(f in poly()) {
        let s = plactic3();
        let (nf, trace) = s.normal_form(&f);
        prop_assert_eq!(s.reduce(&nf), nf.clone());
        prop_assert!(nf.terms().all(|(w, _)| !s.is_reducible(w)));
        prop_assert_eq!(trace.replay(&nf, &s), f);
    }

    #[test]
    fn normal_form_is_linear(f in poly(), g in poly()) {
        let s = plactic3();
        let mut sum = f.clone();
        for (w, c) in g.terms() {
            sum.add_term(w.clone(), c.clone());
        }
        let mut parts = s.reduce(&f);
        for (w, c) in s.reduce(&g).terms() {
            parts.add_term(w.clone(), c.clone());
        }
        prop_assert_eq!(s.reduce(&sum), parts);
    }

    #[test]
    fn polynomials_render_and_parse(f in poly()) {
        let x = plactic3_basis().alphabet;
        let text = render_assoc(&f, &x);
        prop_assert_eq!(parse_polynomial(&x, &text).unwrap(), f);
    }

    #[test]
    fn basis_expansion_preserves_the_element(m in monomial()) {
        let basis = to_nlsw_basis(&m);
        prop_assert_eq!(basis.expand(), lie_expand(&m));
        for (w, _) in basis.terms() {
            prop_assert!(is_alsw(w).unwrap());
        }
    }

    #[test]
    fn factorization_reassembles(u in word(10)) {
        let parts = alsw_factorization(u.letters());
        let joined: Vec<Letter> = parts.iter().flat_map(|p| p.letters().to_vec()).collect();
        prop_assert_eq!(joined.as_slice(), u.letters());
        prop_assert!(parts.iter().all(|p| is_alsw(p).unwrap()));
    }

    #[test]
    fn row_product_dominates(r in row(), s in row()) {
        let p = row_product(&r, &s);
        let letters: Vec<usize> = r.letters().iter().chain(s.letters()).copied().collect();
        prop_assert_eq!(p.rows(), Tableau::from_word(&letters).row_word());
        if let RowProduct::Pair { upper, lower } = p {
            prop_assert!(upper.dominates(&lower));
        }
    }

    #[test]
    fn perp_means_lengths_add(a in proptest::collection::vec(1usize..=3, 0..6), b in proptest::collection::vec(1usize..=3, 0..6)) {
        let pa = Permutation::from_generators(4, &a).unwrap();
        let pb = Permutation::from_generators(4, &b).unwrap();
        let ab = perm_mul(&pa, &pb).unwrap();
        prop_assert_eq!(perp(&pa, &pb).unwrap(), perm_length(&ab) == perm_length(&pa) + perm_length(&pb));
        prop_assert!(perm_length(&ab) <= perm_length(&pa) + perm_length(&pb));
    }
}
