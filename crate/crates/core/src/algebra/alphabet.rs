use std::fmt;
use std::sync::Arc;

use super::AlgebraError;

/// Index of a letter inside its [`Alphabet`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter(pub u8);

impl Letter {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// A finite, ordered set of at least two noncommuting letters.
///
/// The order of `names` fixes the monomial order used for every
/// polynomial built over this alphabet.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Alphabet {
    names: Vec<String>,
}

const RESERVED: &[char] = &['[', ']', ',', '*', '+', '-', '/'];

impl Alphabet {
    pub fn new<I, S>(names: I) -> Result<Arc<Self>, AlgebraError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.len() < 2 {
            return Err(AlgebraError::InvalidAlphabet(format!(
                "need at least two letters, got {}",
                names.len()
            )));
        }
        if names.len() > u8::MAX as usize {
            return Err(AlgebraError::InvalidAlphabet(format!(
                "at most {} letters supported",
                u8::MAX
            )));
        }
        for (i, name) in names.iter().enumerate() {
            if name.is_empty()
                || name.chars().any(|c| c.is_whitespace() || RESERVED.contains(&c))
            {
                return Err(AlgebraError::InvalidAlphabet(format!(
                    "invalid letter name {name:?}"
                )));
            }
            if names[..i].contains(name) {
                return Err(AlgebraError::InvalidAlphabet(format!(
                    "duplicate letter name {name:?}"
                )));
            }
        }
        Ok(Arc::new(Alphabet { names }))
    }

    /// The two-letter alphabet `{A, B}` with `A < B`.
    pub fn ab() -> Arc<Self> {
        Self::new(["A", "B"]).expect("static alphabet")
    }

    /// `A, B, C, ...` with `size` letters (2 ≤ size ≤ 26).
    pub fn latin(size: usize) -> Result<Arc<Self>, AlgebraError> {
        if size > 26 {
            return Err(AlgebraError::InvalidAlphabet(format!(
                "latin alphabet has 26 letters, asked for {size}"
            )));
        }
        Self::new((0..size).map(|i| char::from(b'A' + i as u8).to_string()))
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn letters(&self) -> impl Iterator<Item = Letter> + '_ {
        (0..self.names.len()).map(|i| Letter(i as u8))
    }

    pub fn letter(&self, name: &str) -> Option<Letter> {
        self.names
            .iter()
            .position(|n| n == name)
            .map(|i| Letter(i as u8))
    }

    pub fn name(&self, letter: Letter) -> &str {
        &self.names[letter.index()]
    }

    pub fn contains(&self, letter: Letter) -> bool {
        letter.index() < self.names.len()
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.names.join(","))
    }
}
