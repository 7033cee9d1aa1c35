use std::cmp::{Ordering, Reverse};
use std::fmt;
use std::hash::Hash;

/// A letter of a graded free monoid.
pub trait Letter: Copy + Eq + Ord + Hash + fmt::Debug + Send + Sync + 'static {
    const ALPHABET: &'static [Self];

    fn degree(self) -> usize;
    fn symbol(self) -> char;

    fn from_symbol(c: char) -> Option<Self> {
        Self::ALPHABET.iter().copied().find(|l| l.symbol() == c)
    }

    /// Position used by the canonical word order.
    fn order_index(self) -> usize;
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Ab {
    A,
    B,
}

impl Letter for Ab {
    const ALPHABET: &'static [Self] = &[Ab::A, Ab::B];

    fn degree(self) -> usize {
        1
    }

    fn symbol(self) -> char {
        match self {
            Ab::A => 'a',
            Ab::B => 'b',
        }
    }

    fn order_index(self) -> usize {
        match self {
            Ab::A => 0,
            Ab::B => 1,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Cd {
    C,
    D,
}

impl Letter for Cd {
    const ALPHABET: &'static [Self] = &[Cd::C, Cd::D];

    fn degree(self) -> usize {
        match self {
            Cd::C => 1,
            Cd::D => 2,
        }
    }

    fn symbol(self) -> char {
        match self {
            Cd::C => 'c',
            Cd::D => 'd',
        }
    }

    // d sorts before c, so `dc` precedes `cd` in printed output.
    fn order_index(self) -> usize {
        match self {
            Cd::D => 0,
            Cd::C => 1,
        }
    }
}

/// A word in the free monoid on `L`; the empty word is the identity.
///
/// Words are ordered by degree, then by length descending, then
/// lexicographically by [`Letter::order_index`]. On ab-words this is plain
/// length-then-lex with `a < b`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Word<L: Letter>(Vec<L>);

pub type AbWord = Word<Ab>;
pub type CdWord = Word<Cd>;

impl<L: Letter> Word<L> {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn new(letters: Vec<L>) -> Self {
        Word(letters)
    }

    pub fn letters(&self) -> &[L] {
        &self.0
    }

    pub fn into_letters(self) -> Vec<L> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.0.iter().map(|l| l.degree()).sum()
    }

    pub fn concat(&self, other: &Self) -> Self {
        let mut v = Vec::with_capacity(self.len() + other.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn reversed(&self) -> Self {
        Word(self.0.iter().rev().copied().collect())
    }

    pub fn slice(&self, range: std::ops::Range<usize>) -> Self {
        Word(self.0[range].to_vec())
    }

    pub fn first(&self) -> Option<L> {
        self.0.first().copied()
    }

    pub fn last(&self) -> Option<L> {
        self.0.last().copied()
    }

    pub fn count(&self, letter: L) -> usize {
        self.0.iter().filter(|&&l| l == letter).count()
    }

    /// Parses a run of letter symbols with optional `^k` exponents,
    /// e.g. `a^2b` or `dc`.
    pub fn parse(s: &str) -> Option<Self> {
        let mut letters = Vec::new();
        let mut chars = s.chars().filter(|c| !c.is_whitespace()).peekable();
        while let Some(c) = chars.next() {
            let letter = L::from_symbol(c)?;
            let mut reps = 1usize;
            if chars.peek() == Some(&'^') {
                chars.next();
                let mut digits = String::new();
                while let Some(d) = chars.peek().filter(|d| d.is_ascii_digit()) {
                    digits.push(*d);
                    chars.next();
                }
                reps = digits.parse().ok()?;
            }
            letters.extend(std::iter::repeat_n(letter, reps));
        }
        Some(Word(letters))
    }

    fn sort_key(&self) -> (usize, Reverse<usize>, impl Iterator<Item = usize> + '_) {
        (self.degree(), Reverse(self.len()), self.0.iter().map(|l| l.order_index()))
    }
}

impl<L: Letter> FromIterator<L> for Word<L> {
    fn from_iter<I: IntoIterator<Item = L>>(iter: I) -> Self {
        Word(iter.into_iter().collect())
    }
}

impl<L: Letter> Ord for Word<L> {
    fn cmp(&self, other: &Self) -> Ordering {
        let (d1, l1, k1) = self.sort_key();
        let (d2, l2, k2) = other.sort_key();
        d1.cmp(&d2).then(l1.cmp(&l2)).then_with(|| k1.cmp(k2))
    }
}

impl<L: Letter> PartialOrd for Word<L> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<L: Letter> fmt::Display for Word<L> {
    /// Compressed form with exponents on runs, e.g. `a^2b`; the empty word
    /// prints as `1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let mut i = 0;
        while i < self.0.len() {
            let l = self.0[i];
            let mut j = i;
            while j < self.0.len() && self.0[j] == l {
                j += 1;
            }
            write!(f, "{}", l.symbol())?;
            if j - i > 1 {
                write!(f, "^{}", j - i)?;
            }
            i = j;
        }
        Ok(())
    }
}

impl<L: Letter> fmt::Debug for Word<L> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = self.0.iter().map(|l| l.symbol()).collect();
        if s.is_empty() {
            write!(f, "Word(1)")
        } else {
            write!(f, "Word({s})")
        }
    }
}

/// All words of exactly the given degree, in canonical order.
pub fn words_of_degree<L: Letter>(degree: usize) -> Vec<Word<L>> {
    let mut table: Vec<Vec<Vec<L>>> = vec![vec![Vec::new()]];
    for d in 1..=degree {
        let mut here = Vec::new();
        for &l in L::ALPHABET {
            if l.degree() <= d {
                for prefix in &table[d - l.degree()] {
                    let mut w = prefix.clone();
                    w.push(l);
                    here.push(w);
                }
            }
        }
        table.push(here);
    }
    let mut out: Vec<Word<L>> = table.swap_remove(degree).into_iter().map(Word).collect();
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ab_order_is_length_then_lex() {
        let mut ws: Vec<AbWord> =
            ["ba", "b", "aa", "", "ab", "a", "bb"].iter().map(|s| Word::parse(s).unwrap()).collect();
        ws.sort();
        let shown: Vec<String> = ws.iter().map(|w| format!("{w:?}")).collect();
        assert_eq!(shown, ["Word(1)", "Word(a)", "Word(b)", "Word(aa)", "Word(ab)", "Word(ba)", "Word(bb)"]);
    }

    #[test]
    fn cd_order_puts_dc_before_cd() {
        let words = words_of_degree::<Cd>(3);
        let shown: Vec<String> = words.iter().map(|w| w.to_string()).collect();
        assert_eq!(shown, ["c^3", "dc", "cd"]);
    }

    #[test]
    fn cd_word_counts_are_fibonacci() {
        let counts: Vec<usize> = (0..9).map(|d| words_of_degree::<Cd>(d).len()).collect();
        assert_eq!(counts, [1, 1, 2, 3, 5, 8, 13, 21, 34]);
    }

    #[test]
    fn parse_and_display_exponents() {
        let w: AbWord = Word::parse("a^2b").unwrap();
        assert_eq!(w.len(), 3);
        assert_eq!(w.to_string(), "a^2b");
        assert!(Word::<Ab>::parse("ac").is_none());
    }
}
