//! Truncated integer series over two noncommuting indeterminates, and the
//! word order they induce on the free group of rank 2.
//!
//! The expansion substitutes the first generator by `1 + X`, the second by
//! `1 + Y`, and an inverse generator by the alternating geometric series
//! `1 - X + X^2 - ...` truncated at the requested degree. Coefficients stay
//! integral. A nontrivial word of letter length `L` expands to something other
//! than `1` already at truncation degree `L`, so comparing two words at degree
//! `|u| + |v|` always exposes the leading coefficient of `u^-1 v`; its sign
//! orders the words. The order is total and invariant under left translation.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use super::ReducedWord;

/// A word in the indeterminates, `0` for X and `1` for Y. Ordered by degree
/// first and lexicographically within a degree, so that map iteration visits
/// the lowest term first.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Monomial(pub Vec<u8>);

impl Monomial {
    pub fn degree(&self) -> usize {
        self.0.len()
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for &v in &self.0 {
            write!(f, "{}", if v == 0 { 'X' } else { 'Y' })?;
        }
        Ok(())
    }
}

/// An integer polynomial in X, Y with all monomials of degree ≤ `max_degree`.
/// Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TruncatedSeries {
    max_degree: usize,
    coeffs: BTreeMap<Monomial, i64>,
}

impl TruncatedSeries {
    /// The constant series `1`.
    pub fn one(max_degree: usize) -> Self {
        let mut coeffs = BTreeMap::new();
        coeffs.insert(Monomial(Vec::new()), 1);
        TruncatedSeries { max_degree, coeffs }
    }

    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    pub fn coeff(&self, monomial: &[u8]) -> i64 {
        self.coeffs
            .get(&Monomial(monomial.to_vec()))
            .copied()
            .unwrap_or(0)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeff(&[]) == 1
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, i64)> {
        self.coeffs.iter().map(|(m, &c)| (m, c))
    }

    /// Lowest term of degree ≥ 1, in degree-lexicographic order.
    pub fn leading_nonconstant(&self) -> Option<(&Monomial, i64)> {
        self.coeffs
            .iter()
            .find(|(m, _)| m.degree() >= 1)
            .map(|(m, &c)| (m, c))
    }

    fn insert(&mut self, m: Monomial, c: i64) {
        if c != 0 && m.degree() <= self.max_degree {
            self.coeffs.insert(m, c);
        }
    }

    /// Product, truncating at the smaller of the two degrees.
    pub fn mul(&self, other: &Self) -> Self {
        let max_degree = self.max_degree.min(other.max_degree);
        let mut coeffs: BTreeMap<Monomial, i64> = BTreeMap::new();
        for (ma, &ca) in &self.coeffs {
            if ma.degree() > max_degree {
                continue;
            }
            for (mb, &cb) in &other.coeffs {
                if ma.degree() + mb.degree() > max_degree {
                    continue;
                }
                let mut word = ma.0.clone();
                word.extend_from_slice(&mb.0);
                let c = ca
                    .checked_mul(cb)
                    .expect("series coefficient overflow at desk scale");
                let entry = coeffs.entry(Monomial(word)).or_insert(0);
                *entry = entry
                    .checked_add(c)
                    .expect("series coefficient overflow at desk scale");
            }
        }
        coeffs.retain(|_, c| *c != 0);
        TruncatedSeries { max_degree, coeffs }
    }

    /// Expansion of `(1 + v)^exp` for a single indeterminate `v`, any integer
    /// exponent, truncated at `max_degree`.
    fn generator_power(var: u8, exp: i64, max_degree: usize) -> Self {
        let mut s = TruncatedSeries::one(max_degree);
        if exp == 0 {
            return s;
        }
        for degree in 1..=max_degree {
            let c = binomial_signed(exp, degree);
            s.insert(Monomial(vec![var; degree]), c);
        }
        s
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in &self.coeffs {
            if first {
                write!(f, "{c}·{m}")?;
                first = false;
            } else if *c >= 0 {
                write!(f, " + {c}·{m}")?;
            } else {
                write!(f, " - {}·{m}", -c)?;
            }
        }
        Ok(())
    }
}

/// Generalized binomial coefficient `C(exp, k)` valid for negative `exp`:
/// the k-th coefficient of `(1 + t)^exp`.
fn binomial_signed(exp: i64, k: usize) -> i64 {
    let mut num: i128 = 1;
    let mut den: i128 = 1;
    for j in 0..k as i128 {
        num = num
            .checked_mul(exp as i128 - j)
            .expect("binomial overflow at desk scale");
        den *= j + 1;
    }
    i64::try_from(num / den).expect("binomial coefficient exceeds i64")
}

/// Truncated expansion of a reduced word over a rank-2 alphabet.
pub fn magnus_expand(w: &ReducedWord, max_degree: usize) -> TruncatedSeries {
    debug_assert!(w.alphabet().rank() == 2, "expansion needs a rank-2 word");
    let mut acc = TruncatedSeries::one(max_degree);
    for &(g, e) in w.runs() {
        acc = acc.mul(&TruncatedSeries::generator_power(g, e, max_degree));
    }
    acc
}

/// Sign of a reduced word in the series order: `Greater` when the word is
/// positive (leading coefficient of its expansion minus 1 is positive).
pub fn word_sign(w: &ReducedWord) -> Ordering {
    if w.is_identity() {
        return Ordering::Equal;
    }
    let degree = (w.letter_len() as usize).max(1);
    let series = magnus_expand(w, degree);
    match series.leading_nonconstant() {
        Some((_, c)) if c > 0 => Ordering::Greater,
        Some((_, c)) if c < 0 => Ordering::Less,
        _ => unreachable!("nontrivial word expands nontrivially at its own length"),
    }
}

/// Left-invariant total order on reduced rank-2 words: compares `u` and `v`
/// by the sign of `u^-1 v`, expanded at degree `max(1, |u| + |v|)`.
pub fn compare_words(u: &ReducedWord, v: &ReducedWord) -> Ordering {
    let q = u.inverse().concat(v).expect("same alphabet");
    if q.is_identity() {
        return Ordering::Equal;
    }
    let degree = ((u.letter_len() + v.letter_len()) as usize).max(1);
    let series = magnus_expand(&q, degree);
    match series.leading_nonconstant() {
        // u^-1 v > e means u < v
        Some((_, c)) if c > 0 => Ordering::Less,
        Some((_, c)) if c < 0 => Ordering::Greater,
        _ => unreachable!("nontrivial quotient expands nontrivially"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::free_words::{reduced_words_up_to, Alphabet, ReducedWord};

    fn w(s: &str) -> ReducedWord {
        ReducedWord::parse(&Alphabet::f2(), s).unwrap()
    }

    #[test]
    fn identity_expands_to_one() {
        assert!(magnus_expand(&w("e"), 3).is_one());
    }

    #[test]
    fn single_generator() {
        let s = magnus_expand(&w("a"), 2);
        assert_eq!(s.coeff(&[]), 1);
        assert_eq!(s.coeff(&[0]), 1);
        assert_eq!(s.coeff(&[1]), 0);
        assert_eq!(s.coeff(&[0, 0]), 0);
    }

    #[test]
    fn commutator_lowest_term_is_xy_minus_yx() {
        let s = magnus_expand(&w("a g a^-1 g^-1"), 2);
        assert_eq!(s.coeff(&[]), 1);
        assert_eq!(s.coeff(&[0]), 0);
        assert_eq!(s.coeff(&[1]), 0);
        assert_eq!(s.coeff(&[0, 1]), 1);
        assert_eq!(s.coeff(&[1, 0]), -1);
        assert_eq!(s.coeff(&[0, 0]), 0);
        assert_eq!(s.coeff(&[1, 1]), 0);
    }

    #[test]
    fn inverse_generator_series() {
        // (1+X)^{-1} = 1 - X + X² - X³ ...
        let s = magnus_expand(&w("a^-1"), 3);
        assert_eq!(s.coeff(&[0]), -1);
        assert_eq!(s.coeff(&[0, 0]), 1);
        assert_eq!(s.coeff(&[0, 0, 0]), -1);
    }

    #[test]
    fn expansion_is_multiplicative_exhaustive() {
        let words = reduced_words_up_to(&Alphabet::f2(), 3);
        for d in 1..=4usize {
            for u in &words {
                for v in &words {
                    let uv = u.concat(v).unwrap();
                    assert_eq!(
                        magnus_expand(&uv, d),
                        magnus_expand(u, d).mul(&magnus_expand(v, d)),
                        "u={u} v={v} d={d}"
                    );
                }
            }
        }
    }

    #[test]
    fn injectivity_at_own_length() {
        for word in reduced_words_up_to(&Alphabet::f2(), 5) {
            if word.is_identity() {
                continue;
            }
            let s = magnus_expand(&word, word.letter_len() as usize);
            assert!(!s.is_one(), "{word} expanded to 1");
        }
    }

    #[test]
    fn order_is_total_and_left_invariant_on_short_words() {
        let words = reduced_words_up_to(&Alphabet::f2(), 3);
        for u in &words {
            for v in &words {
                let c = compare_words(u, v);
                assert_eq!(compare_words(v, u), c.reverse());
                assert_eq!(c == Ordering::Equal, u == v);
                for z in words.iter().take(12) {
                    let zu = z.concat(u).unwrap();
                    let zv = z.concat(v).unwrap();
                    assert_eq!(compare_words(&zu, &zv), c, "z={z} u={u} v={v}");
                }
            }
        }
    }

    #[test]
    fn positive_words_form_a_semigroup_on_short_words() {
        let words = reduced_words_up_to(&Alphabet::f2(), 3);
        let positives: Vec<_> = words
            .iter()
            .filter(|w| word_sign(w) == Ordering::Greater)
            .collect();
        for u in &positives {
            for v in &positives {
                let uv = u.concat(v).unwrap();
                assert_eq!(word_sign(&uv), Ordering::Greater, "u={u} v={v}");
            }
        }
    }

    #[test]
    fn deg_lex_monomial_order() {
        let x = Monomial(vec![0]);
        let y = Monomial(vec![1]);
        let xx = Monomial(vec![0, 0]);
        let xy = Monomial(vec![0, 1]);
        assert!(x < y);
        assert!(y < xx);
        assert!(xx < xy);
    }
}
