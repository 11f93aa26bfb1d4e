//! Associative and nonassociative Lyndon–Shirshov words.
//!
//! A word is an ALSW when it is strictly lex-greater (prefix-greater
//! convention) than each of its proper rotations. Its NLSW is the Shirshov
//! bracketing `[[v][w]]`, where `w` is the longest proper suffix that is
//! itself an ALSW.

use std::cmp::Ordering;

use crate::word::{lex_cmp, Alphabet, Letter, Word};

use super::tree::LieMonomial;
use super::LieError;

pub fn is_alsw_letters(u: &[Letter]) -> bool {
    let n = u.len();
    if n == 0 {
        return false;
    }
    (1..n).all(|k| {
        // compare u with its rotation u[k..] u[..k], letter by letter
        let rot = u[k..].iter().chain(&u[..k]);
        matches!(
            u.iter().zip(rot).map(|(x, y)| x.cmp(y)).find(|o| o.is_ne()),
            Some(Ordering::Greater)
        )
    })
}

/// Whether `u` is an associative Lyndon–Shirshov word.
pub fn is_alsw(u: &Word) -> Result<bool, LieError> {
    if u.is_empty() {
        return Err(LieError::EmptyWord);
    }
    Ok(is_alsw_letters(u.letters()))
}

/// Split point `k` of the Shirshov factorization `u = u[..k] · u[k..]`,
/// where `u[k..]` is the longest proper ALSW suffix. `None` for letters.
pub fn standard_split(u: &[Letter]) -> Option<usize> {
    (1..u.len()).find(|&k| is_alsw_letters(&u[k..]))
}

/// The Shirshov bracketing of an ALSW.
pub fn shirshov_bracket(u: &Word) -> Result<LieMonomial, LieError> {
    if !is_alsw(u)? {
        return Err(LieError::NotAlsw(u.clone()));
    }
    Ok(bracket_letters(u.letters()))
}

pub(crate) fn bracket_letters(u: &[Letter]) -> LieMonomial {
    match standard_split(u) {
        None => LieMonomial::Leaf(u[0]),
        Some(k) => LieMonomial::bracket(bracket_letters(&u[..k]), bracket_letters(&u[k..])),
    }
}

/// Factorization `c = c1 c2 … cn` into ALSWs with `c1 ≤ c2 ≤ … ≤ cn`
/// in the lex order. Empty input gives no factors.
pub fn alsw_factorization(c: &[Letter]) -> Vec<Word> {
    // Duval's algorithm; "small" letters in Duval's sense are our great ones.
    let le = |x: Letter, y: Letter| x >= y;
    let lt = |x: Letter, y: Letter| x > y;
    let n = c.len();
    let mut out = Vec::new();
    let mut i = 0;
    while i < n {
        let mut j = i + 1;
        let mut k = i;
        while j < n && le(c[k], c[j]) {
            if lt(c[k], c[j]) {
                k = i;
            } else {
                k += 1;
            }
            j += 1;
        }
        while i <= k {
            out.push(Word::from(&c[i..i + j - k]));
            i += j - k;
        }
    }
    out
}

/// All ALSWs of length `n`, ascending in the lex order.
pub fn alsw_enumerate(alphabet: &Alphabet, n: usize) -> Vec<Word> {
    let k = alphabet.len();
    if n == 0 || k == 0 {
        return Vec::new();
    }
    // Fredricksen–Kessler–Maiorana over digits, digit 0 being the greatest
    // letter.
    let to_letter = |d: usize| Letter((k - 1 - d) as u16);
    let mut out = Vec::new();
    let mut w: Vec<usize> = vec![0];
    loop {
        if w.len() == n {
            out.push(w.iter().map(|&d| to_letter(d)).collect::<Word>());
        }
        let m = w.len();
        while w.len() < n {
            let d = w[w.len() - m];
            w.push(d);
        }
        while let Some(&last) = w.last() {
            if last == k - 1 {
                w.pop();
            } else {
                break;
            }
        }
        match w.last_mut() {
            Some(last) => *last += 1,
            None => break,
        }
    }
    out.sort_by(|u, v| lex_cmp(u.letters(), v.letters()));
    out
}

/// All NLSWs of degree `n`, ascending by underlying word in the lex order.
pub fn nlsw_enumerate(alphabet: &Alphabet, n: usize) -> Vec<super::Nlsw> {
    alsw_enumerate(alphabet, n)
        .into_iter()
        .map(|w| super::Nlsw::from_alsw(&w).expect("enumerated words are ALSW"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn alpha() -> Alphabet {
        Alphabet::new(["a", "b"]).unwrap()
    }

    fn w(x: &Alphabet, s: &str) -> Word {
        s.chars()
            .map(|c| x.letter(&c.to_string()).unwrap())
            .collect()
    }

    #[test]
    fn alsw_examples() {
        let x = alpha();
        assert!(is_alsw(&w(&x, "ab")).unwrap());
        assert!(!is_alsw(&w(&x, "aa")).unwrap());
        assert!(is_alsw(&w(&x, "aab")).unwrap());
        assert!(!is_alsw(&w(&x, "ba")).unwrap());
        assert!(is_alsw(&w(&x, "b")).unwrap());
        assert_eq!(is_alsw(&Word::empty()), Err(LieError::EmptyWord));
    }

    #[test]
    fn bracket_examples() {
        let x = alpha();
        assert_eq!(shirshov_bracket(&w(&x, "a")).unwrap().render(&x), "a");
        assert_eq!(
            shirshov_bracket(&w(&x, "aab")).unwrap().render(&x),
            "[a,[a,b]]"
        );
        assert_eq!(
            shirshov_bracket(&w(&x, "aabb")).unwrap().render(&x),
            "[a,[[a,b],b]]"
        );
        assert!(matches!(
            shirshov_bracket(&w(&x, "ba")),
            Err(LieError::NotAlsw(_))
        ));
    }

    #[test]
    fn factorization_is_nondecreasing() {
        let x = alpha();
        let c = w(&x, "babaab");
        let f = alsw_factorization(c.letters());
        let joined: Vec<Letter> = f.iter().flat_map(|p| p.letters().to_vec()).collect();
        assert_eq!(joined, c.letters());
        assert!(f.iter().all(|p| is_alsw(p).unwrap()));
        assert!(f
            .windows(2)
            .all(|p| lex_cmp(p[0].letters(), p[1].letters()) != Ordering::Greater));
        // b · ab · aab
        assert_eq!(f, vec![w(&x, "b"), w(&x, "ab"), w(&x, "aab")]);
    }

    #[test]
    fn enumeration_matches_filter() {
        let x = Alphabet::new(["a", "b", "c"]).unwrap();
        for n in 1..=5 {
            let fast = alsw_enumerate(&x, n);
            let mut slow = Vec::new();
            let mut stack = vec![Vec::<Letter>::new()];
            while let Some(v) = stack.pop() {
                if v.len() == n {
                    if is_alsw_letters(&v) {
                        slow.push(Word::from(v));
                    }
                    continue;
                }
                for l in x.letters() {
                    let mut u = v.clone();
                    u.push(l);
                    stack.push(u);
                }
            }
            slow.sort_by(|u, v| lex_cmp(u.letters(), v.letters()));
            assert_eq!(fast, slow, "n={n}");
        }
    }
}
