//! Exact arithmetic in the one-relator group `⟨a, b | a b a⁻¹ = b⁻¹⟩`.
//!
//! Every element has a unique normal form `a^p b^q`, so an element is just a
//! pair of integers and the product law is closed-form:
//!
//! ```text
//! (p, q) · (p', q') = (p + p', (-1)^{p'} q + q')
//! ```
//!
//! [`bs_reduce`] computes the same normal form by literal letter rewriting
//! (pushing `b`-letters to the right of `a`-letters) and is kept as an
//! independent oracle for the product law. All arithmetic is checked; exponent
//! overflow is reported rather than wrapped, since a wrapped exponent would be
//! a silently wrong group element.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::free_words::ReducedWord;

/// Normal form `a^p b^q`. Any pair of integers is a valid element;
/// `(0, 0)` is the identity.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct BsElement {
    pub p: i64,
    pub q: i64,
}

impl BsElement {
    pub const IDENTITY: BsElement = BsElement { p: 0, q: 0 };

    pub fn new(p: i64, q: i64) -> Self {
        BsElement { p, q }
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::IDENTITY
    }
}

impl std::fmt::Display for BsElement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let power = |name: &str, e: i64| {
            if e == 1 {
                name.to_string()
            } else {
                format!("{name}^{e}")
            }
        };
        match (self.p, self.q) {
            (0, 0) => write!(f, "e"),
            (p, 0) => write!(f, "{}", power("a", p)),
            (0, q) => write!(f, "{}", power("b", q)),
            (p, q) => write!(f, "{} {}", power("a", p), power("b", q)),
        }
    }
}

fn parity_sign(p: i64) -> i64 {
    if p.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// Product in normal form: `(p + p', (-1)^{p'} q + q')`.
pub fn bs_multiply(x: BsElement, y: BsElement) -> Result<BsElement> {
    let p =
        x.p.checked_add(y.p)
            .ok_or(Error::Overflow("bs_multiply p"))?;
    let q =
        x.q.checked_mul(parity_sign(y.p))
            .and_then(|t| t.checked_add(y.q))
            .ok_or(Error::Overflow("bs_multiply q"))?;
    Ok(BsElement { p, q })
}

/// Inverse: `(-p, -(-1)^p q)`.
pub fn bs_inverse(x: BsElement) -> BsElement {
    BsElement {
        p: -x.p,
        q: -(parity_sign(x.p) * x.q),
    }
}

/// `x^n` for any integer `n`, by repeated checked multiplication.
pub fn bs_pow(x: BsElement, n: i64) -> Result<BsElement> {
    let base = if n < 0 { bs_inverse(x) } else { x };
    let mut acc = BsElement::IDENTITY;
    for _ in 0..n.unsigned_abs() {
        acc = bs_multiply(acc, base)?;
    }
    Ok(acc)
}

/// Reduces a raw word over `{a, b}` to its normal form by letter rewriting.
///
/// The rewriting pushes every `b^{±1}` to the right across `a^{±1}` letters,
/// flipping its sign at each crossing (`b^ε a^δ → a^δ b^{-ε}`), interleaved
/// with free reduction. Each swap strictly decreases the number of
/// (b-letter, a-letter) inversions, so the loop terminates.
pub fn bs_reduce(word: &ReducedWord) -> Result<BsElement> {
    if word.alphabet().rank() != 2 {
        return Err(Error::InvalidArgument(
            "bs_reduce needs a word over a rank-2 alphabet {a, b}".into(),
        ));
    }
    // letters: (generator, sign) with generator 0 = a, 1 = b
    let mut letters: Vec<(u8, i8)> = word.letters().collect();
    loop {
        free_reduce(&mut letters);
        let Some(i) = (0..letters.len().saturating_sub(1))
            .find(|&i| letters[i].0 == 1 && letters[i + 1].0 == 0)
        else {
            break;
        };
        let (b_sign, a_letter) = (letters[i].1, letters[i + 1]);
        letters[i] = a_letter;
        letters[i + 1] = (1, -b_sign);
    }
    let mut p: i64 = 0;
    let mut q: i64 = 0;
    for (g, s) in letters {
        match g {
            0 => p += s as i64,
            _ => q += s as i64,
        }
    }
    Ok(BsElement { p, q })
}

/// Cancels adjacent inverse letters in place.
pub(crate) fn free_reduce(letters: &mut Vec<(u8, i8)>) {
    let mut out: Vec<(u8, i8)> = Vec::with_capacity(letters.len());
    for &l in letters.iter() {
        match out.last() {
            Some(&(g, s)) if g == l.0 && s == -l.1 => {
                out.pop();
            }
            _ => out.push(l),
        }
    }
    *letters = out;
}

/// The two index-2 subgroups with decidable membership in normal form.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum BsSubgroup {
    /// `⟨a², b⟩`, free abelian of rank 2: membership is `p` even.
    EvenAAndB,
    /// `⟨a, b²⟩`, isomorphic to the whole group: membership is `q` even.
    AAndEvenB,
}

pub fn bs_subgroup_membership(x: BsElement, subgroup: BsSubgroup) -> bool {
    match subgroup {
        BsSubgroup::EvenAAndB => x.p.rem_euclid(2) == 0,
        BsSubgroup::AAndEvenB => x.q.rem_euclid(2) == 0,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::free_words::{reduced_words_up_to, Alphabet};
    use proptest::prelude::*;

    fn bw(s: &str) -> ReducedWord {
        ReducedWord::parse(&Alphabet::bs(), s).unwrap()
    }

    #[test]
    fn multiply_examples() {
        // ba = ab⁻¹
        assert_eq!(
            bs_multiply(BsElement::new(0, 1), BsElement::new(1, 0)).unwrap(),
            BsElement::new(1, -1)
        );
        // ⟨b⟩ is abelian
        assert_eq!(
            bs_multiply(BsElement::new(0, 3), BsElement::new(0, -5)).unwrap(),
            BsElement::new(0, -2)
        );
        // (a^p b^q)² = a^{2p} for odd p
        for p in [-7i64, -3, 1, 5] {
            for q in -7..=7 {
                let x = BsElement::new(p, q);
                assert_eq!(bs_multiply(x, x).unwrap(), BsElement::new(2 * p, 0));
            }
        }
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(bs_inverse(BsElement::IDENTITY), BsElement::IDENTITY);
        assert_eq!(bs_inverse(BsElement::new(1, 1)), BsElement::new(-1, 1));
        assert_eq!(bs_inverse(BsElement::new(2, 3)), BsElement::new(-2, -3));
        for p in -6..=6 {
            for q in -6..=6 {
                let x = BsElement::new(p, q);
                assert_eq!(bs_multiply(x, bs_inverse(x)).unwrap(), BsElement::IDENTITY);
                assert_eq!(bs_multiply(bs_inverse(x), x).unwrap(), BsElement::IDENTITY);
            }
        }
    }

    #[test]
    fn reduce_examples() {
        assert_eq!(bs_reduce(&bw("bab")).unwrap(), BsElement::new(1, 0));
        assert_eq!(bs_reduce(&bw("aba^-1b")).unwrap(), BsElement::IDENTITY);
        assert_eq!(bs_reduce(&bw("e")).unwrap(), BsElement::IDENTITY);
        assert_eq!(bs_reduce(&bw("b^2a^-1")).unwrap(), BsElement::new(-1, -2));
    }

    #[test]
    fn reduce_is_a_homomorphism_exhaustive() {
        let words = reduced_words_up_to(&Alphabet::bs(), 4);
        for u in &words {
            for v in &words {
                let uv = u.concat(v).unwrap();
                assert_eq!(
                    bs_reduce(&uv).unwrap(),
                    bs_multiply(bs_reduce(u).unwrap(), bs_reduce(v).unwrap()).unwrap(),
                    "u={u} v={v}"
                );
            }
        }
    }

    #[test]
    fn subgroup_membership() {
        assert!(bs_subgroup_membership(
            BsElement::new(2, 5),
            BsSubgroup::EvenAAndB
        ));
        assert!(!bs_subgroup_membership(
            BsElement::new(1, 0),
            BsSubgroup::EvenAAndB
        ));
        assert!(bs_subgroup_membership(
            BsElement::new(3, 2),
            BsSubgroup::AAndEvenB
        ));
    }

    #[test]
    fn a_and_even_b_membership_agrees_with_generation() {
        // Enumerate products of the generators a^{±1}, b^{±2} up to length 6
        // and confirm that everything generated has even q, and that (3, 2)
        // appears.
        let gens = [
            BsElement::new(1, 0),
            BsElement::new(-1, 0),
            BsElement::new(0, 2),
            BsElement::new(0, -2),
        ];
        let mut layer = vec![BsElement::IDENTITY];
        let mut seen = std::collections::HashSet::new();
        seen.insert(BsElement::IDENTITY);
        for _ in 0..6 {
            let mut next = Vec::new();
            for x in &layer {
                for g in &gens {
                    let y = bs_multiply(*x, *g).unwrap();
                    if seen.insert(y) {
                        next.push(y);
                    }
                }
            }
            layer = next;
        }
        assert!(seen.contains(&BsElement::new(3, 2)));
        for x in &seen {
            assert!(bs_subgroup_membership(*x, BsSubgroup::AAndEvenB));
        }
    }

    #[test]
    fn torsion_free_at_desk_scale() {
        for p in -6i64..=6 {
            for q in -6i64..=6 {
                let x = BsElement::new(p, q);
                if x.is_identity() {
                    continue;
                }
                for n in 1..=12 {
                    assert!(
                        !bs_pow(x, n).unwrap().is_identity(),
                        "({p},{q})^{n} collapsed"
                    );
                }
            }
        }
    }

    #[test]
    fn even_a_subgroup_is_abelian() {
        for p1 in (-4i64..=4).map(|k| 2 * k) {
            for q1 in -5i64..=5 {
                for p2 in (-4i64..=4).map(|k| 2 * k) {
                    for q2 in -5i64..=5 {
                        let x = BsElement::new(p1, q1);
                        let y = BsElement::new(p2, q2);
                        assert_eq!(bs_multiply(x, y).unwrap(), bs_multiply(y, x).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn overflow_is_reported() {
        let big = BsElement::new(i64::MAX, 0);
        assert!(matches!(
            bs_multiply(big, BsElement::new(1, 0)),
            Err(Error::Overflow(_))
        ));
    }

    proptest! {
        #[test]
        fn associativity(p1 in -50i64..50, q1 in -50i64..50,
                         p2 in -50i64..50, q2 in -50i64..50,
                         p3 in -50i64..50, q3 in -50i64..50) {
            let (x, y, z) = (BsElement::new(p1, q1), BsElement::new(p2, q2), BsElement::new(p3, q3));
            let left = bs_multiply(bs_multiply(x, y).unwrap(), z).unwrap();
            let right = bs_multiply(x, bs_multiply(y, z).unwrap()).unwrap();
            prop_assert_eq!(left, right);
        }
    }
}
