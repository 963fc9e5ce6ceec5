//! Normal forms, products and the left-invariant order on
//! `G2 = ⟨α, β, γ | αβα⁻¹ = β⁻¹, βγβ⁻¹ = γ⁻¹⟩`.
//!
//! Every element is uniquely `w · βⁿ` with `w` a reduced word in the free
//! subgroup generated by α and γ. The relations let a β-letter cross its
//! neighbours to the right:
//!
//! ```text
//! β^ε α^δ → α^δ β^{-ε}        (the β flips)
//! β^ε γ^δ → γ^{-δ} β^ε        (the γ flips)
//! ```
//!
//! Pushing all β-letters to the right end and freely reducing yields the
//! normal form; [`g2_rewrite`] does exactly that, letter by letter, and is the
//! arbiter for the closed product law in [`g2_multiply`]:
//!
//! ```text
//! (w, n) · (w', n') = (w · Φⁿ(w'),  (-1)^{σ(w')} n + n')
//! ```
//!
//! where Φ inverts γ and σ sums the α-exponents. Note the sign exponent takes
//! σ of the *second* factor's word: a β-power crossing `w'` flips its sign
//! once per α-letter of `w'`, and γ-letters leave it alone. The rewriting
//! oracle confirms this convention on every tested input.

use std::cmp::Ordering;
use std::fmt;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::free_words::{concat_reduce, magnus, phi_power, sigma, Alphabet, ReducedWord};
use crate::klein_group::free_reduce;

/// Normal form `w · βⁿ` with `w` reduced over the rank-2 alphabet.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct G2Element {
    w: ReducedWord,
    n: i64,
}

impl G2Element {
    pub fn identity() -> Self {
        G2Element {
            w: ReducedWord::identity(Alphabet::f2()),
            n: 0,
        }
    }

    /// Wraps a reduced word and β-exponent; the word must be over a rank-2
    /// alphabet.
    pub fn new(w: ReducedWord, n: i64) -> Result<Self> {
        if w.alphabet().rank() != 2 {
            return Err(Error::InvalidArgument(
                "G2 normal form needs a rank-2 word part".into(),
            ));
        }
        Ok(G2Element { w, n })
    }

    pub fn word(&self) -> &ReducedWord {
        &self.w
    }

    pub fn beta_exponent(&self) -> i64 {
        self.n
    }

    pub fn is_identity(&self) -> bool {
        self.w.is_identity() && self.n == 0
    }

    /// σ extended to the whole group: the α-exponent sum of the word part.
    pub fn sigma(&self) -> i64 {
        sigma(&self.w)
    }

    /// η: the β-exponent of the normal form.
    pub fn eta(&self) -> i64 {
        self.n
    }
}

impl fmt::Display for G2Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let beta = |n: i64| {
            if n == 1 {
                "b".to_string()
            } else {
                format!("b^{n}")
            }
        };
        match (self.w.is_identity(), self.n) {
            (true, 0) => write!(f, "e"),
            (true, n) => write!(f, "{}", beta(n)),
            (false, 0) => write!(f, "{}", self.w),
            (false, n) => write!(f, "{} {}", self.w, beta(n)),
        }
    }
}

impl Serialize for G2Element {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut s = serializer.serialize_struct("G2Element", 2)?;
        s.serialize_field("w", &self.w.to_string())?;
        s.serialize_field("n", &self.n)?;
        s.end()
    }
}

impl<'de> Deserialize<'de> for G2Element {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            w: String,
            n: i64,
        }
        let raw = Raw::deserialize(deserializer)?;
        let w = ReducedWord::parse(&Alphabet::f2(), &raw.w)
            .map_err(|e| D::Error::custom(format!("field \"w\": {e}")))?;
        Ok(G2Element { w, n: raw.n })
    }
}

/// Closed product law `(w·Φⁿ(w'), (-1)^{σ(w')}·n + n')`.
pub fn g2_multiply(x: &G2Element, y: &G2Element) -> Result<G2Element> {
    let w = concat_reduce(&x.w, &phi_power(&y.w, x.n))?;
    let sign = if sigma(&y.w).rem_euclid(2) == 0 {
        1
    } else {
        -1
    };
    let n =
        x.n.checked_mul(sign)
            .and_then(|t| t.checked_add(y.n))
            .ok_or(Error::Overflow("g2_multiply beta exponent"))?;
    Ok(G2Element { w, n })
}

/// Inverse `(Φ^{-n}(w⁻¹), -(-1)^{σ(w)} n)`, forced by the product law.
pub fn g2_inverse(x: &G2Element) -> Result<G2Element> {
    let w = phi_power(&x.w.inverse(), -x.n);
    let sign = if x.sigma().rem_euclid(2) == 0 { 1 } else { -1 };
    let n =
        x.n.checked_mul(-sign)
            .ok_or(Error::Overflow("g2_inverse beta exponent"))?;
    Ok(G2Element { w, n })
}

// raw alphabet indices
const RAW_ALPHA: u8 = 0;
const RAW_BETA: u8 = 1;
const RAW_GAMMA: u8 = 2;

/// Reduces a raw word over `{α, β, γ}` to its normal form by letter
/// rewriting: every β-letter is pushed to the right end, flipping itself when
/// crossing α and flipping the γ when crossing γ, with free reduction in
/// between. Each swap strictly decreases the number of (β, non-β) inversions,
/// so the loop terminates.
pub fn g2_rewrite(word: &ReducedWord) -> Result<G2Element> {
    if word.alphabet().rank() != 3 {
        return Err(Error::InvalidArgument(
            "g2_rewrite needs a word over the raw rank-3 alphabet {a, b, g}".into(),
        ));
    }
    let mut letters: Vec<(u8, i8)> = word.letters().collect();
    loop {
        free_reduce(&mut letters);
        let Some(i) = (0..letters.len().saturating_sub(1))
            .find(|&i| letters[i].0 == RAW_BETA && letters[i + 1].0 != RAW_BETA)
        else {
            break;
        };
        let (beta_sign, neighbour) = (letters[i].1, letters[i + 1]);
        match neighbour.0 {
            RAW_ALPHA => {
                letters[i] = neighbour;
                letters[i + 1] = (RAW_BETA, -beta_sign);
            }
            _ => {
                letters[i] = (RAW_GAMMA, -neighbour.1);
                letters[i + 1] = (RAW_BETA, beta_sign);
            }
        }
    }
    let f2 = Alphabet::f2();
    let mut w = ReducedWord::identity(f2.clone());
    let mut n: i64 = 0;
    for (g, s) in letters {
        match g {
            RAW_ALPHA => w = w.concat(&ReducedWord::generator(f2.clone(), 0, s as i64)?)?,
            RAW_GAMMA => w = w.concat(&ReducedWord::generator(f2.clone(), 1, s as i64)?)?,
            _ => n += s as i64,
        }
    }
    Ok(G2Element { w, n })
}

/// The literal invariant-word recipe applied to a raw word: each α-letter
/// whose left-hand β-count is odd is inverted, β-letters are deleted, γ-letters
/// are kept untouched, and the result is freely reduced.
///
/// This is a cross-check oracle, not the normal-form word part: the recipe
/// transforms α-letters only, while the rewriting rules flip γ-letters (and
/// leave α-letters alone) when a β crosses them. The two consequently disagree
/// on any word where a β-letter precedes an α or a γ; see the tests for the
/// minimal disagreements and for the exact regime of agreement (β-free words,
/// and more generally words with all β-letters already rightmost).
pub fn g2_omega(word: &ReducedWord) -> Result<ReducedWord> {
    if word.alphabet().rank() != 3 {
        return Err(Error::InvalidArgument(
            "g2_omega needs a word over the raw rank-3 alphabet {a, b, g}".into(),
        ));
    }
    let f2 = Alphabet::f2();
    let mut out = ReducedWord::identity(f2.clone());
    let mut beta_count_is_odd = false;
    for (g, s) in word.letters() {
        match g {
            RAW_BETA => beta_count_is_odd = !beta_count_is_odd,
            RAW_ALPHA => {
                let exp = if beta_count_is_odd { -s } else { s };
                out = out.concat(&ReducedWord::generator(f2.clone(), 0, exp as i64)?)?;
            }
            _ => {
                out = out.concat(&ReducedWord::generator(f2.clone(), 1, s as i64)?)?;
            }
        }
    }
    Ok(out)
}

/// Comparison context for the left-invariant order. The free-group tier uses
/// the series order with truncation degree `max(min_degree, |u| + |v|)`.
#[derive(Clone, Copy, Debug)]
pub struct G2Order {
    pub min_degree: usize,
}

impl Default for G2Order {
    fn default() -> Self {
        G2Order { min_degree: 1 }
    }
}

impl G2Order {
    fn word_sign(&self, w: &ReducedWord) -> Ordering {
        if w.is_identity() {
            return Ordering::Equal;
        }
        let degree = (w.letter_len() as usize).max(self.min_degree).max(1);
        let series = magnus::magnus_expand(w, degree);
        match series.leading_nonconstant() {
            Some((_, c)) if c > 0 => Ordering::Greater,
            Some((_, c)) if c < 0 => Ordering::Less,
            _ => unreachable!("nontrivial word expands nontrivially at its own length"),
        }
    }

    /// Sign of a single element against the identity: positive iff
    /// `σ > 0`, or `σ = 0 ∧ η > 0`, or `σ = η = 0 ∧ w > e` in the word order.
    pub fn sign(&self, g: &G2Element) -> Ordering {
        match g.sigma().cmp(&0) {
            Ordering::Equal => match g.eta().cmp(&0) {
                Ordering::Equal => self.word_sign(&g.w),
                other => other,
            },
            other => other,
        }
    }
}

/// Strict total order on normal forms: compares `x⁻¹y` against the identity
/// by the three tiers (σ, then η, then the word order). Left-invariant by
/// construction.
pub fn g2_compare(x: &G2Element, y: &G2Element, ord: &G2Order) -> Ordering {
    let q = g2_multiply(&g2_inverse(x).expect("inverse"), y).expect("product");
    // q = x⁻¹y positive means x < y
    match ord.sign(&q) {
        Ordering::Greater => Ordering::Less,
        Ordering::Less => Ordering::Greater,
        Ordering::Equal => Ordering::Equal,
    }
}
