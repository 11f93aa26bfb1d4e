//! Permutations of `{1, …, m}` and the Bokut–Shiao normal forms of `S_m`
//! in the Coxeter generators `s_i = (i, i+1)`.

use std::collections::HashMap;
use std::fmt;

use super::CatalogError;

/// One-line notation: `images[i-1]` is the image of `i`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.images)
    }
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self, CatalogError> {
        let m = images.len();
        let mut seen = vec![false; m + 1];
        for &i in &images {
            if i == 0 || i > m || seen[i] {
                return Err(CatalogError::NotAPermutation(images.clone()));
            }
            seen[i] = true;
        }
        Ok(Permutation { images })
    }

    pub fn identity(m: usize) -> Self {
        Permutation {
            images: (1..=m).collect(),
        }
    }

    /// The Coxeter generator `s_i` of `S_m`, `1 <= i < m`.
    pub fn transposition(m: usize, i: usize) -> Result<Self, CatalogError> {
        if i == 0 || i >= m {
            return Err(CatalogError::BadParameter(format!(
                "s_{i} does not exist in S_{m}"
            )));
        }
        let mut images: Vec<usize> = (1..=m).collect();
        images.swap(i - 1, i);
        Ok(Permutation { images })
    }

    /// `s_{a1} s_{a2} …` in `S_m`.
    pub fn from_generators(m: usize, word: &[usize]) -> Result<Self, CatalogError> {
        word.iter().try_fold(Permutation::identity(m), |acc, &i| {
            perm_mul(&acc, &Permutation::transposition(m, i)?)
        })
    }

    /// Longest element `i ↦ m + 1 - i`.
    pub fn longest(m: usize) -> Self {
        Permutation {
            images: (1..=m).rev().collect(),
        }
    }

    pub fn size(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(k, &i)| i == k + 1)
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![0; self.size()];
        for (k, &i) in self.images.iter().enumerate() {
            images[i - 1] = k + 1;
        }
        Permutation { images }
    }
}

/// Coxeter length: the number of inversions.
pub fn perm_length(a: &Permutation) -> usize {
    let v = &a.images;
    (0..v.len())
        .map(|i| (i + 1..v.len()).filter(|&j| v[i] > v[j]).count())
        .sum()
}

/// `(ab)(i) = a(b(i))`.
pub fn perm_mul(a: &Permutation, b: &Permutation) -> Result<Permutation, CatalogError> {
    if a.size() != b.size() {
        return Err(CatalogError::SizeMismatch(a.size(), b.size()));
    }
    Ok(Permutation {
        images: b.images.iter().map(|&i| a.images[i - 1]).collect(),
    })
}

/// Whether lengths add: `|ab| = |a| + |b|`.
pub fn perp(a: &Permutation, b: &Permutation) -> Result<bool, CatalogError> {
    let ab = perm_mul(a, b)?;
    Ok(perm_length(&ab) == perm_length(a) + perm_length(b))
}

/// The word `s_{1 i1} s_{2 i2} … s_{n in}` as generator indices, where
/// `s_{ji} = s_j s_{j-1} … s_i` and `i_j = j + 1` stands for the empty block.
pub fn bs_word(blocks: &[usize]) -> Vec<usize> {
    let mut out = Vec::new();
    for (k, &i) in blocks.iter().enumerate() {
        let j = k + 1;
        if i <= j {
            out.extend((i..=j).rev());
        }
    }
    out
}

/// Normal form of every element of `S_{n+1}`, keyed by permutation.
pub fn bs_normal_forms(n: usize) -> HashMap<Permutation, Vec<usize>> {
    let m = n + 1;
    let mut out = HashMap::new();
    let mut blocks = vec![1usize; n];
    loop {
        let w = bs_word(&blocks);
        let p = Permutation::from_generators(m, &w).expect("indices below m");
        out.insert(p, w);
        // odometer over i_j in 1..=j+1
        let mut k = 0;
        loop {
            if k == n {
                return out;
            }
            if blocks[k] < k + 2 {
                blocks[k] += 1;
                break;
            }
            blocks[k] = 1;
            k += 1;
        }
    }
}

/// Whether `word` (generator indices) has the shape `s_{1 i1} … s_{n in}`.
pub fn matches_bs_pattern(word: &[usize], n: usize) -> bool {
    let mut pos = 0;
    for j in 1..=n {
        if word.get(pos) == Some(&j) {
            let mut cur = j;
            pos += 1;
            while cur > 1 && word.get(pos) == Some(&(cur - 1)) {
                cur -= 1;
                pos += 1;
            }
        }
    }
    pos == word.len()
}
