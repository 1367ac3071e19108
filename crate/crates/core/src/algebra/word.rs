use std::cmp::Ordering;
use std::fmt::Write as _;

use super::{Alphabet, Letter};

/// A monomial of the free associative algebra: a finite sequence of letters.
///
/// Words are ordered degree-lexicographically: shorter words first, then
/// letter by letter in alphabet order.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Word(Vec<Letter>);

impl Word {
    /// The empty word, i.e. the unit of the algebra.
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn from_letters(letters: Vec<Letter>) -> Self {
        Word(letters)
    }

    pub fn letter(letter: Letter) -> Self {
        Word(vec![letter])
    }

    /// `letter` repeated `k` times.
    pub fn power(letter: Letter, k: usize) -> Self {
        Word(vec![letter; k])
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn first(&self) -> Option<Letter> {
        self.0.first().copied()
    }

    pub fn last(&self) -> Option<Letter> {
        self.0.last().copied()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = Vec::with_capacity(self.0.len() + other.0.len());
        letters.extend_from_slice(&self.0);
        letters.extend_from_slice(&other.0);
        Word(letters)
    }

    pub fn push(&mut self, letter: Letter) {
        self.0.push(letter);
    }

    pub fn prepend(&self, letter: Letter) -> Word {
        let mut letters = Vec::with_capacity(self.0.len() + 1);
        letters.push(letter);
        letters.extend_from_slice(&self.0);
        Word(letters)
    }

    pub fn append(&self, letter: Letter) -> Word {
        let mut w = self.clone();
        w.0.push(letter);
        w
    }

    /// The word without its first letter. The empty word stays empty.
    pub fn tail(&self) -> Word {
        Word(self.0.get(1..).unwrap_or_default().to_vec())
    }

    /// Moves the first letter to the end.
    pub fn rotate_left(&self) -> Word {
        let mut w = self.clone();
        if !w.0.is_empty() {
            w.0.rotate_left(1);
        }
        w
    }

    /// Returns `k` if the word is `letter^k` (including `k = 0`).
    pub fn pure_power_of(&self, letter: Letter) -> Option<usize> {
        self.0
            .iter()
            .all(|&l| l == letter)
            .then_some(self.0.len())
    }

    /// Number of leading occurrences of `letter`.
    pub fn leading(&self, letter: Letter) -> usize {
        self.0.iter().take_while(|&&l| l == letter).count()
    }

    /// Number of trailing occurrences of `letter`.
    pub fn trailing(&self, letter: Letter) -> usize {
        self.0.iter().rev().take_while(|&&l| l == letter).count()
    }

    /// Applies a letter substitution.
    pub fn map_letters(&self, f: impl Fn(Letter) -> Letter) -> Word {
        Word(self.0.iter().map(|&l| f(l)).collect())
    }

    /// Concatenated letter names; the empty word renders as `1`.
    pub fn render(&self, alphabet: &Alphabet) -> String {
        if self.0.is_empty() {
            return "1".to_owned();
        }
        self.0.iter().map(|&l| alphabet.name(l)).collect()
    }

    /// Right-normed bracket string `[w1,[w2,[...,wn]]]`; a single letter
    /// renders bare.
    pub fn render_bracket(&self, alphabet: &Alphabet) -> String {
        let n = self.0.len();
        if n == 0 {
            return "1".to_owned();
        }
        let mut out = String::new();
        for &l in &self.0[..n - 1] {
            let _ = write!(out, "[{},", alphabet.name(l));
        }
        out.push_str(alphabet.name(self.0[n - 1]));
        out.extend(std::iter::repeat_n(']', n - 1));
        out
    }

    /// Parses a concatenation of letter names (greedy, longest name first).
    pub fn parse(s: &str, alphabet: &Alphabet) -> Option<Word> {
        if s.is_empty() || (s == "1" && alphabet.letter("1").is_none()) {
            return Some(Word::empty());
        }
        let mut names: Vec<(Letter, &str)> = alphabet
            .letters()
            .map(|l| (l, alphabet.name(l)))
            .collect();
        names.sort_by_key(|(_, n)| std::cmp::Reverse(n.len()));
        let mut rest = s;
        let mut letters = Vec::new();
        while !rest.is_empty() {
            let (l, n) = names.iter().find(|(_, n)| rest.starts_with(n))?;
            letters.push(*l);
            rest = &rest[n.len()..];
        }
        Some(Word(letters))
    }

    /// Parses the right-normed bracket notation produced by
    /// [`Word::render_bracket`].
    pub fn parse_bracket(s: &str, alphabet: &Alphabet) -> Option<Word> {
        let mut letters = Vec::new();
        let mut rest = s;
        let mut depth = 0;
        while let Some(inner) = rest.strip_prefix('[') {
            let comma = inner.find(',')?;
            letters.push(alphabet.letter(&inner[..comma])?);
            rest = &inner[comma + 1..];
            depth += 1;
        }
        let close = rest.len() - rest.trim_end_matches(']').len();
        if close != depth {
            return None;
        }
        letters.push(alphabet.letter(&rest[..rest.len() - close])?);
        Some(Word(letters))
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl From<Vec<Letter>> for Word {
    fn from(letters: Vec<Letter>) -> Self {
        Word(letters)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const A: Letter = Letter(0);
    const B: Letter = Letter(1);

    fn w(letters: &[Letter]) -> Word {
        Word::from_letters(letters.to_vec())
    }

    #[test]
    fn deglex_order() {
        let mut words = vec![w(&[B, A]), w(&[B]), w(&[A, B]), w(&[]), w(&[A]), w(&[A, A, A])];
        words.sort();
        assert_eq!(
            words,
            vec![w(&[]), w(&[A]), w(&[B]), w(&[A, B]), w(&[B, A]), w(&[A, A, A])]
        );
    }

    #[test]
    fn structure_queries() {
        let v = w(&[B, B, A, B]);
        assert_eq!(v.leading(B), 2);
        assert_eq!(v.trailing(B), 1);
        assert_eq!(v.rotate_left(), w(&[B, A, B, B]));
        assert_eq!(v.tail(), w(&[B, A, B]));
        assert_eq!(w(&[A, A]).pure_power_of(A), Some(2));
        assert_eq!(w(&[]).pure_power_of(A), Some(0));
        assert_eq!(v.pure_power_of(B), None);
    }

    #[test]
    fn rendering_and_parsing() {
        let ab = Alphabet::ab();
        let v = w(&[A, A, B]);
        assert_eq!(v.render(&ab), "AAB");
        assert_eq!(v.render_bracket(&ab), "[A,[A,B]]");
        assert_eq!(w(&[B]).render_bracket(&ab), "B");
        assert_eq!(Word::parse("AAB", &ab), Some(v.clone()));
        assert_eq!(Word::parse_bracket("[A,[A,B]]", &ab), Some(v));
        assert_eq!(Word::parse_bracket("B", &ab), Some(w(&[B])));
        assert_eq!(Word::parse_bracket("[A,[A,B]", &ab), None);
        assert_eq!(Word::parse("AXB", &ab), None);
        assert_eq!(Word::parse("1", &ab), Some(Word::empty()));
    }

    #[test]
    fn multichar_names() {
        let al = Alphabet::new(["x1", "x2", "y"]).unwrap();
        let v = Word::from_letters(vec![Letter(1), Letter(2), Letter(0)]);
        assert_eq!(v.render(&al), "x2yx1");
        assert_eq!(Word::parse("x2yx1", &al), Some(v.clone()));
        assert_eq!(Word::parse_bracket(&v.render_bracket(&al), &al), Some(v));
    }
}
