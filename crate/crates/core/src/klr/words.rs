//! Permutations of positions and canonical reduced words.
//!
//! Elements are stored over a fixed reduced word per permutation (the
//! lexicographically smallest one), which makes the basis
//! `tau_w x^t 1_i` deterministic.

use std::collections::{BTreeMap, HashMap};

use crate::cartan::Index;

/// A permutation of `{0, .., d-1}`, stored as its image vector.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Perm {
    images: Vec<usize>,
}

impl Perm {
    pub fn identity(d: usize) -> Self {
        Perm { images: (0..d).collect() }
    }

    /// The adjacent transposition `r_{t+1}` swapping positions `t` and
    /// `t + 1` (0-based `t`).
    pub fn transposition(d: usize, t: usize) -> Self {
        assert!(t + 1 < d);
        let mut images: Vec<usize> = (0..d).collect();
        images.swap(t, t + 1);
        Perm { images }
    }

    pub fn from_images(images: Vec<usize>) -> Self {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            assert!(i < images.len() && !seen[i], "not a permutation");
            seen[i] = true;
        }
        Perm { images }
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn image(&self, k: usize) -> usize {
        self.images[k]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(k, &v)| k == v)
    }

    /// Composition `self . other` (apply `other` first).
    pub fn compose(&self, other: &Perm) -> Perm {
        assert_eq!(self.len(), other.len());
        Perm { images: other.images.iter().map(|&k| self.images[k]).collect() }
    }

    pub fn inverse(&self) -> Perm {
        let mut images = vec![0; self.images.len()];
        for (k, &v) in self.images.iter().enumerate() {
            images[v] = k;
        }
        Perm { images }
    }

    /// Coxeter length: the number of inversions.
    pub fn coxeter_length(&self) -> usize {
        let mut count = 0;
        for a in 0..self.images.len() {
            for b in a + 1..self.images.len() {
                if self.images[a] > self.images[b] {
                    count += 1;
                }
            }
        }
        count
    }

    /// Pairs `(p, p')` with `p < p'` and `w(p) > w(p')`.
    pub fn inversions(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for a in 0..self.images.len() {
            for b in a + 1..self.images.len() {
                if self.images[a] > self.images[b] {
                    out.push((a, b));
                }
            }
        }
        out
    }

    /// Move the entry at source position `p` to position `w(p)`.
    pub fn apply_to_seq(&self, seq: &[Index]) -> Vec<Index> {
        assert_eq!(seq.len(), self.len());
        let mut out = vec![0; seq.len()];
        for (p, &entry) in seq.iter().enumerate() {
            out[self.images[p]] = entry;
        }
        out
    }
}

/// Fixed lexicographically-smallest reduced word for every permutation of
/// a given degree.  Built once per degree and shared read-only.
#[derive(Debug, Clone)]
pub struct ReducedWordTable {
    d: usize,
    /// Permutation -> reduced word (0-based generator positions).
    words: HashMap<Perm, Vec<usize>>,
}

impl ReducedWordTable {
    pub fn new(d: usize) -> Self {
        let mut words: HashMap<Perm, Vec<usize>> = HashMap::new();
        let id = Perm::identity(d);
        words.insert(id.clone(), Vec::new());
        // Lex-ordered BFS: extending words in (length, lex) order and taking
        // first discovery yields the lex-smallest reduced word per element.
        let mut frontier: BTreeMap<Vec<usize>, Perm> = BTreeMap::new();
        frontier.insert(Vec::new(), id);
        while !frontier.is_empty() {
            let mut next: BTreeMap<Vec<usize>, Perm> = BTreeMap::new();
            for (word, w) in &frontier {
                for t in 0..d.saturating_sub(1) {
                    // Appending r_t on the right is reduced iff w(t) < w(t+1).
                    if w.image(t) < w.image(t + 1) {
                        let extended = w.compose(&Perm::transposition(d, t));
                        if !words.contains_key(&extended) {
                            let mut new_word = word.clone();
                            new_word.push(t);
                            words.insert(extended.clone(), new_word.clone());
                            next.insert(new_word, extended);
                        }
                    }
                }
            }
            frontier = next;
        }
        ReducedWordTable { d, words }
    }

    pub fn degree(&self) -> usize {
        self.d
    }

    /// The canonical reduced word of `w` (0-based generator positions).
    pub fn word(&self, w: &Perm) -> &[usize] {
        &self.words[w]
    }

    pub fn all(&self) -> impl Iterator<Item = (&Perm, &Vec<usize>)> {
        self.words.iter()
    }

    pub fn longest(&self) -> Perm {
        Perm { images: (0..self.d).rev().collect() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn composition_and_word_length_agree() {
        let table = ReducedWordTable::new(4);
        assert_eq!(table.all().count(), 24);
        for (w, word) in table.all() {
            assert_eq!(w.coxeter_length(), word.len(), "word {:?} for {:?}", word, w);
            // The word really multiplies out to w (rightmost letter first).
            let mut acc = Perm::identity(4);
            for &t in word {
                acc = acc.compose(&Perm::transposition(4, t));
            }
            assert_eq!(&acc, w);
        }
    }

    #[test]
    fn longest_element_word_is_lex_smallest() {
        let table = ReducedWordTable::new(3);
        // w_0 in S_3 has reduced words 010 and 101; lex-smallest is 010.
        assert_eq!(table.word(&table.longest()), &[0, 1, 0]);
    }

    #[test]
    fn sequence_action_moves_entries() {
        // w = r_0: swaps the first two entries.
        let w = Perm::transposition(3, 0);
        assert_eq!(w.apply_to_seq(&[7, 8, 9]), vec![8, 7, 9]);
        let table = ReducedWordTable::new(3);
        let w0 = table.longest();
        assert_eq!(w0.apply_to_seq(&[1, 2, 3]), vec![3, 2, 1]);
    }

    #[test]
    fn inversions_count_matches_length() {
        let table = ReducedWordTable::new(5);
        for (w, _) in table.all() {
            assert_eq!(w.inversions().len(), w.coxeter_length());
        }
    }
}
