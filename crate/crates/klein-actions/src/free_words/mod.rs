//! Freely reduced words over small alphabets.
//!
//! Words are stored run-length-compressed as `(generator, exponent)` pairs and
//! kept freely reduced at all times: adjacent runs have distinct generators and
//! no run has exponent zero. The empty word is the identity.
//!
//! Besides the group operations this module carries the two maps the rank-2
//! alphabet needs downstream: [`sigma`], the morphism summing the exponents of
//! the first generator, and [`phi_power`], the automorphism that inverts the
//! second generator. The [`magnus`] submodule expands words into truncated
//! integer series over two noncommuting indeterminates, which yields a
//! left-invariant total order on the free group of rank 2.

use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use crate::error::{Error, Result};

pub mod magnus;

pub use magnus::{magnus_expand, Monomial, TruncatedSeries};

#[derive(Debug)]
struct AlphabetInner {
    /// Primary (serialized) generator names.
    names: Vec<String>,
    /// Accepted aliases per generator, e.g. Greek letters.
    aliases: Vec<Vec<String>>,
}

/// A declared generating set. Cheap to clone; equality is by name list.
#[derive(Clone, Debug)]
pub struct Alphabet {
    inner: Arc<AlphabetInner>,
}

impl Alphabet {
    pub fn new(names: &[&str]) -> Self {
        let aliases = vec![Vec::new(); names.len()];
        Self::build(names, aliases)
    }

    fn build(names: &[&str], aliases: Vec<Vec<String>>) -> Self {
        assert!(!names.is_empty() && names.len() <= u8::MAX as usize);
        Alphabet {
            inner: Arc::new(AlphabetInner {
                names: names.iter().map(|s| s.to_string()).collect(),
                aliases,
            }),
        }
    }

    /// Rank-2 free alphabet `{a, g}` used for the letters written α and γ.
    pub fn f2() -> Self {
        Self::build(
            &["a", "g"],
            vec![vec!["α".into()], vec!["γ".into(), "y".into()]],
        )
    }

    /// The `{a, b}` alphabet of the one-relator group.
    pub fn bs() -> Self {
        Self::build(&["a", "b"], vec![vec!["α".into()], vec!["β".into()]])
    }

    /// Raw three-letter alphabet `{a, b, g}` (α, β, γ) before normal forms.
    pub fn g2_raw() -> Self {
        Self::build(
            &["a", "b", "g"],
            vec![
                vec!["α".into()],
                vec!["β".into()],
                vec!["γ".into(), "y".into()],
            ],
        )
    }

    /// The `{a, b}` alphabet for words in the crystallographic generators.
    pub fn g1_raw() -> Self {
        Self::bs()
    }

    pub fn rank(&self) -> usize {
        self.inner.names.len()
    }

    pub fn name(&self, gen: usize) -> &str {
        &self.inner.names[gen]
    }

    /// Longest generator name (or alias) that prefixes `s`, with its length in bytes.
    fn match_prefix(&self, s: &str) -> Option<(u8, usize)> {
        let mut best: Option<(u8, usize)> = None;
        for (idx, name) in self.inner.names.iter().enumerate() {
            let mut candidates = vec![name.as_str()];
            candidates.extend(self.inner.aliases[idx].iter().map(|a| a.as_str()));
            for cand in candidates {
                if s.starts_with(cand) && best.is_none_or(|(_, l)| cand.len() > l) {
                    best = Some((idx as u8, cand.len()));
                }
            }
        }
        best
    }

    fn describe(&self) -> String {
        self.inner.names.join(",")
    }
}

impl PartialEq for Alphabet {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner) || self.inner.names == other.inner.names
    }
}

impl Eq for Alphabet {}

impl Hash for Alphabet {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.inner.names.hash(state);
    }
}

/// A freely reduced word over an [`Alphabet`].
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ReducedWord {
    alphabet: Alphabet,
    runs: Vec<(u8, i64)>,
}

impl ReducedWord {
    /// The empty word.
    pub fn identity(alphabet: Alphabet) -> Self {
        ReducedWord {
            alphabet,
            runs: Vec::new(),
        }
    }

    /// The word `gen^exp`; exponent 0 gives the identity.
    pub fn generator(alphabet: Alphabet, gen: usize, exp: i64) -> Result<Self> {
        if gen >= alphabet.rank() {
            return Err(Error::InvalidArgument(format!(
                "generator index {gen} out of range for {{{}}}",
                alphabet.describe()
            )));
        }
        let mut w = Self::identity(alphabet);
        w.push_run(gen as u8, exp)?;
        Ok(w)
    }

    /// Builds a word from runs, reducing as it goes.
    pub fn from_runs(alphabet: Alphabet, runs: &[(usize, i64)]) -> Result<Self> {
        let mut w = Self::identity(alphabet);
        for &(gen, exp) in runs {
            if gen >= w.alphabet.rank() {
                return Err(Error::InvalidArgument(format!(
                    "generator index {gen} out of range"
                )));
            }
            w.push_run(gen as u8, exp)?;
        }
        Ok(w)
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn runs(&self) -> &[(u8, i64)] {
        &self.runs
    }

    pub fn is_identity(&self) -> bool {
        self.runs.is_empty()
    }

    /// Number of letters, counting multiplicity: Σ |exponent|.
    pub fn letter_len(&self) -> u64 {
        self.runs.iter().map(|&(_, e)| e.unsigned_abs()).sum()
    }

    /// Flattens into single letters `(generator, ±1)`.
    pub fn letters(&self) -> impl Iterator<Item = (u8, i8)> + '_ {
        self.runs.iter().flat_map(|&(g, e)| {
            let sign: i8 = if e > 0 { 1 } else { -1 };
            std::iter::repeat_n((g, sign), e.unsigned_abs() as usize)
        })
    }

    /// Appends `gen^exp` on the right, merging and cancelling with the tail.
    fn push_run(&mut self, gen: u8, exp: i64) -> Result<()> {
        if exp == 0 {
            return Ok(());
        }
        match self.runs.last_mut() {
            Some(&mut (g, ref mut e)) if g == gen => {
                *e = e.checked_add(exp).ok_or(Error::Overflow("word exponent"))?;
                if *e == 0 {
                    self.runs.pop();
                }
            }
            _ => self.runs.push((gen, exp)),
        }
        Ok(())
    }

    /// The freely reduced product `self · other`.
    pub fn concat(&self, other: &Self) -> Result<Self> {
        if self.alphabet != other.alphabet {
            return Err(Error::AlphabetMismatch {
                left: self.alphabet.describe(),
                right: other.alphabet.describe(),
            });
        }
        let mut out = self.clone();
        for &(g, e) in &other.runs {
            out.push_run(g, e)?;
        }
        Ok(out)
    }

    pub fn inverse(&self) -> Self {
        ReducedWord {
            alphabet: self.alphabet.clone(),
            runs: self.runs.iter().rev().map(|&(g, e)| (g, -e)).collect(),
        }
    }

    /// Sum of the exponents of `gen` across the word.
    pub fn exponent_sum(&self, gen: usize) -> i64 {
        let total: i128 = self
            .runs
            .iter()
            .filter(|&&(g, _)| g as usize == gen)
            .map(|&(_, e)| e as i128)
            .sum();
        i64::try_from(total).expect("exponent sum exceeds i64")
    }

    /// Parses the string syntax produced by [`fmt::Display`]; `"e"` is the
    /// identity. Tokens may be juxtaposed (`"bab"`) or spaced (`"a^2 g^-1"`).
    pub fn parse(alphabet: &Alphabet, s: &str) -> Result<Self> {
        let trimmed = s.trim();
        if trimmed.is_empty() || trimmed == "e" || trimmed == "1" {
            return Ok(Self::identity(alphabet.clone()));
        }
        let mut w = Self::identity(alphabet.clone());
        for token in trimmed.split_whitespace() {
            let mut rest = token;
            while !rest.is_empty() {
                let (gen, used) = alphabet.match_prefix(rest).ok_or_else(|| {
                    Error::Parse(format!(
                        "unknown generator at \"{rest}\" (alphabet {{{}}})",
                        alphabet.describe()
                    ))
                })?;
                rest = &rest[used..];
                let mut exp: i64 = 1;
                if let Some(tail) = rest.strip_prefix('^') {
                    let end = tail
                        .char_indices()
                        .take_while(|&(i, c)| c.is_ascii_digit() || (i == 0 && c == '-'))
                        .map(|(i, c)| i + c.len_utf8())
                        .last()
                        .ok_or_else(|| Error::Parse(format!("missing exponent in \"{token}\"")))?;
                    exp = tail[..end]
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad exponent in \"{token}\"")))?;
                    rest = &tail[end..];
                }
                w.push_run(gen, exp)?;
            }
        }
        Ok(w)
    }
}

impl fmt::Display for ReducedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.runs.is_empty() {
            return write!(f, "e");
        }
        let mut first = true;
        for &(g, e) in &self.runs {
            if !first {
                write!(f, " ")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{}", self.alphabet.name(g as usize))?;
            } else {
                write!(f, "{}^{}", self.alphabet.name(g as usize), e)?;
            }
        }
        Ok(())
    }
}

/// The freely reduced product of two words over the same alphabet.
pub fn concat_reduce(u: &ReducedWord, v: &ReducedWord) -> Result<ReducedWord> {
    u.concat(v)
}

/// Exponent-sum morphism of the first generator (α for the rank-2 alphabet).
pub fn sigma(w: &ReducedWord) -> i64 {
    w.exponent_sum(0)
}

/// The `n`-th power of the automorphism fixing the first generator and
/// inverting the second. Even `n` is the identity; odd `n` negates every
/// exponent of the second generator.
pub fn phi_power(w: &ReducedWord, n: i64) -> ReducedWord {
    if n.rem_euclid(2) == 0 {
        return w.clone();
    }
    ReducedWord {
        alphabet: w.alphabet.clone(),
        runs: w
            .runs
            .iter()
            .map(|&(g, e)| if g == 1 { (g, -e) } else { (g, e) })
            .collect(),
    }
}

/// All freely reduced words of letter length exactly `len` over `alphabet`.
/// Intended for exhaustive desk-scale test enumeration.
pub fn reduced_words_of_len(alphabet: &Alphabet, len: usize) -> Vec<ReducedWord> {
    let rank = alphabet.rank();
    let mut words = vec![ReducedWord::identity(alphabet.clone())];
    for _ in 0..len {
        let mut next = Vec::with_capacity(words.len() * rank * 2);
        for w in &words {
            for g in 0..rank as u8 {
                for s in [1i64, -1] {
                    // skip extensions that would cancel the last letter
                    if let Some(&(lg, le)) = w.runs.last() {
                        if lg == g && (le > 0) != (s > 0) {
                            continue;
                        }
                    }
                    let mut v = w.clone();
                    v.push_run(g, s).expect("no overflow at desk scale");
                    next.push(v);
                }
            }
        }
        words = next;
    }
    words
}

/// All freely reduced words of letter length ≤ `max_len`.
pub fn reduced_words_up_to(alphabet: &Alphabet, max_len: usize) -> Vec<ReducedWord> {
    (0..=max_len)
        .flat_map(|l| reduced_words_of_len(alphabet, l))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn f2_word(s: &str) -> ReducedWord {
        ReducedWord::parse(&Alphabet::f2(), s).unwrap()
    }

    #[test]
    fn cancellation() {
        let a = f2_word("a");
        let a_inv = f2_word("a^-1");
        assert!(a.concat(&a_inv).unwrap().is_identity());
    }

    #[test]
    fn forced_reduction() {
        // (αγ)·(γ⁻¹α) = α²
        assert_eq!(
            f2_word("a g").concat(&f2_word("g^-1 a")).unwrap(),
            f2_word("a^2")
        );
        // (αγα⁻¹)·(αγ) = αγ²
        assert_eq!(
            f2_word("a g a^-1").concat(&f2_word("a g")).unwrap(),
            f2_word("a g^2")
        );
    }

    #[test]
    fn alphabet_mismatch_is_an_error() {
        let u = f2_word("a");
        let v = ReducedWord::parse(&Alphabet::g2_raw(), "b").unwrap();
        assert!(matches!(u.concat(&v), Err(Error::AlphabetMismatch { .. })));
    }

    #[test]
    fn sigma_examples() {
        assert_eq!(sigma(&f2_word("e")), 0);
        assert_eq!(sigma(&f2_word("a^2 g a^-1")), 1);
        assert_eq!(sigma(&f2_word("g^5")), 0);
    }

    #[test]
    fn phi_examples() {
        let w = f2_word("a g");
        assert_eq!(phi_power(&w, 2), w);
        assert_eq!(phi_power(&w, 1), f2_word("a g^-1"));
        assert_eq!(
            phi_power(&f2_word("g^3 a^-1 g^-1"), -1),
            f2_word("g^-3 a^-1 g")
        );
    }

    #[test]
    fn reduction_is_idempotent() {
        for w in reduced_words_up_to(&Alphabet::f2(), 4) {
            let again = ReducedWord::from_runs(w.alphabet.clone(), &runs_usize(&w)).unwrap();
            assert_eq!(again, w);
        }
    }

    fn runs_usize(w: &ReducedWord) -> Vec<(usize, i64)> {
        w.runs().iter().map(|&(g, e)| (g as usize, e)).collect()
    }

    #[test]
    fn group_axioms_identity_and_inverse_exhaustive() {
        let e = ReducedWord::identity(Alphabet::f2());
        for w in reduced_words_up_to(&Alphabet::f2(), 5) {
            assert_eq!(w.concat(&e).unwrap(), w);
            assert_eq!(e.concat(&w).unwrap(), w);
            assert!(w.concat(&w.inverse()).unwrap().is_identity());
            assert!(w.inverse().concat(&w).unwrap().is_identity());
        }
    }

    #[test]
    fn associativity_exhaustive_short() {
        let words = reduced_words_up_to(&Alphabet::f2(), 3);
        for u in &words {
            for v in &words {
                let uv = u.concat(v).unwrap();
                for w in &words {
                    let vw = v.concat(w).unwrap();
                    assert_eq!(uv.concat(w).unwrap(), u.concat(&vw).unwrap());
                }
            }
        }
    }

    #[test]
    fn sigma_is_a_homomorphism_exhaustive() {
        let words = reduced_words_up_to(&Alphabet::f2(), 4);
        for u in &words {
            for v in &words {
                assert_eq!(sigma(&u.concat(v).unwrap()), sigma(u) + sigma(v));
            }
        }
    }

    #[test]
    fn phi_power_composes() {
        let words = reduced_words_up_to(&Alphabet::f2(), 4);
        for w in &words {
            for m in -3i64..=3 {
                for n in -3i64..=3 {
                    assert_eq!(
                        phi_power(w, m + n),
                        phi_power(&phi_power(w, n), m),
                        "w={w} m={m} n={n}"
                    );
                }
            }
        }
    }

    #[test]
    fn phi_is_an_automorphism() {
        let words = reduced_words_up_to(&Alphabet::f2(), 3);
        for u in &words {
            for v in &words {
                assert_eq!(
                    phi_power(&u.concat(v).unwrap(), 1),
                    phi_power(u, 1).concat(&phi_power(v, 1)).unwrap()
                );
            }
        }
    }

    #[test]
    fn concat_matches_a_letter_stack_oracle() {
        // push single letters onto a stack, cancelling inverse tops; the
        // implementation merges runs instead, so this is an independent route
        fn stack_reduce(letters: impl Iterator<Item = (u8, i8)>) -> Vec<(u8, i8)> {
            let mut stack: Vec<(u8, i8)> = Vec::new();
            for l in letters {
                match stack.last() {
                    Some(&(g, s)) if g == l.0 && s == -l.1 => {
                        stack.pop();
                    }
                    _ => stack.push(l),
                }
            }
            stack
        }
        let words = reduced_words_up_to(&Alphabet::f2(), 3);
        for u in &words {
            for v in &words {
                let merged: Vec<(u8, i8)> = u.concat(v).unwrap().letters().collect();
                let stacked = stack_reduce(u.letters().chain(v.letters()));
                assert_eq!(merged, stacked, "u={u} v={v}");
            }
        }
    }

    #[test]
    fn display_parse_round_trip() {
        for w in reduced_words_up_to(&Alphabet::g2_raw(), 4) {
            let s = w.to_string();
            assert_eq!(ReducedWord::parse(w.alphabet(), &s).unwrap(), w, "{s}");
        }
    }

    #[test]
    fn parse_compact_and_aliases() {
        assert_eq!(f2_word("ag^-1a"), f2_word("a g^-1 a"));
        assert_eq!(f2_word("αγ"), f2_word("a g"));
        let bs = Alphabet::bs();
        assert_eq!(ReducedWord::parse(&bs, "bab").unwrap().letter_len(), 3);
    }

    proptest! {
        #[test]
        fn associativity_random(seed in proptest::collection::vec((0usize..2, -3i64..=3), 0..12)) {
            let alphabet = Alphabet::f2();
            let w = ReducedWord::from_runs(alphabet.clone(), &seed).unwrap();
            let (u, v) = (w.inverse(), w.concat(&w).unwrap());
            let left = u.concat(&v).unwrap().concat(&w).unwrap();
            let right = u.concat(&v.concat(&w).unwrap()).unwrap();
            prop_assert_eq!(left, right);
        }

        #[test]
        fn inverse_reverses(seed in proptest::collection::vec((0usize..2, -4i64..=4), 0..10)) {
            let w = ReducedWord::from_runs(Alphabet::f2(), &seed).unwrap();
            prop_assert!(w.concat(&w.inverse()).unwrap().is_identity());
        }
    }
}
