//! Exact affine-isometry model of the crystallographic group
//! `G1 = ⟨α, β | βα²β⁻¹ = α⁻², αβ²α⁻¹ = β⁻²⟩`.
//!
//! The group has no convenient normal form, so elements are carried as
//! concrete isometries of 3-space with sign-diagonal linear part and exact
//! rational translation. Equality, relations and torsion questions then
//! reduce to bit-exact rational arithmetic. The generator choice
//!
//! ```text
//! α = diag(+,-,-) ∘ shift(1/2, 0, 0)
//! β = diag(-,+,-) ∘ shift(0, 1/2, 1/2)
//! ```
//!
//! satisfies both defining relations exactly (checked in the tests, along
//! with absence of torsion on a generator ball); squares of the generators
//! are the unit translations along the first two axes.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::free_words::ReducedWord;

pub type Rational = BigRational;

fn rat(n: i64) -> Rational {
    BigRational::from_integer(BigInt::from(n))
}

fn rat2(num: i64, den: i64) -> Rational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Diagonal sign matrix with determinant +1: one of `(+,+,+)`, `(+,-,-)`,
/// `(-,+,-)`, `(-,-,+)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct SignDiag([i8; 3]);

impl SignDiag {
    pub const IDENTITY: SignDiag = SignDiag([1, 1, 1]);

    pub fn new(signs: [i8; 3]) -> Result<Self> {
        let ok = signs.iter().all(|&s| s == 1 || s == -1)
            && signs.iter().map(|&s| s as i32).product::<i32>() == 1;
        if ok {
            Ok(SignDiag(signs))
        } else {
            Err(Error::InvalidArgument(
                "linear part must be a sign diagonal of determinant +1".into(),
            ))
        }
    }

    pub fn signs(&self) -> [i8; 3] {
        self.0
    }

    pub fn mul(&self, other: &SignDiag) -> SignDiag {
        SignDiag([
            self.0[0] * other.0[0],
            self.0[1] * other.0[1],
            self.0[2] * other.0[2],
        ])
    }

    fn apply(&self, v: &[Rational; 3]) -> [Rational; 3] {
        let flip = |s: i8, x: &Rational| if s > 0 { x.clone() } else { -x.clone() };
        [
            flip(self.0[0], &v[0]),
            flip(self.0[1], &v[1]),
            flip(self.0[2], &v[2]),
        ]
    }

    pub fn is_identity(&self) -> bool {
        self.0 == [1, 1, 1]
    }
}

impl fmt::Display for SignDiag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{},{},{}]",
            if self.0[0] > 0 { '+' } else { '-' },
            if self.0[1] > 0 { '+' } else { '-' },
            if self.0[2] > 0 { '+' } else { '-' },
        )
    }
}

/// Exact affine isometry `x ↦ L x + t` with sign-diagonal `L` and rational `t`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct AffineIso3 {
    linear: SignDiag,
    translation: [Rational; 3],
}

impl AffineIso3 {
    pub fn identity() -> Self {
        AffineIso3 {
            linear: SignDiag::IDENTITY,
            translation: [Rational::zero(), Rational::zero(), Rational::zero()],
        }
    }

    pub fn new(linear: SignDiag, translation: [Rational; 3]) -> Self {
        AffineIso3 {
            linear,
            translation,
        }
    }

    pub fn linear(&self) -> SignDiag {
        self.linear
    }

    pub fn translation(&self) -> &[Rational; 3] {
        &self.translation
    }

    pub fn is_identity(&self) -> bool {
        self.linear.is_identity() && self.translation.iter().all(|t| t.is_zero())
    }

    pub fn is_pure_translation(&self) -> bool {
        self.linear.is_identity()
    }

    /// `(L_f, t_f) ∘ (L_g, t_g) = (L_f L_g, L_f t_g + t_f)`.
    pub fn compose(&self, g: &AffineIso3) -> AffineIso3 {
        let rotated = self.linear.apply(&g.translation);
        AffineIso3 {
            linear: self.linear.mul(&g.linear),
            translation: [
                &rotated[0] + &self.translation[0],
                &rotated[1] + &self.translation[1],
                &rotated[2] + &self.translation[2],
            ],
        }
    }

    pub fn inverse(&self) -> AffineIso3 {
        // L⁻¹ = L for sign diagonals
        let back = self.linear.apply(&self.translation);
        AffineIso3 {
            linear: self.linear,
            translation: [-back[0].clone(), -back[1].clone(), -back[2].clone()],
        }
    }

    pub fn apply(&self, v: &[Rational; 3]) -> [Rational; 3] {
        let rotated = self.linear.apply(v);
        [
            &rotated[0] + &self.translation[0],
            &rotated[1] + &self.translation[1],
            &rotated[2] + &self.translation[2],
        ]
    }

    pub fn pow(&self, n: u32) -> AffineIso3 {
        let mut acc = AffineIso3::identity();
        for _ in 0..n {
            acc = acc.compose(self);
        }
        acc
    }
}

impl fmt::Display for AffineIso3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} + ({}, {}, {})",
            self.linear, self.translation[0], self.translation[1], self.translation[2]
        )
    }
}

impl Serialize for AffineIso3 {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut s = serializer.serialize_struct("AffineIso3", 2)?;
        s.serialize_field("linear", &self.linear.to_string())?;
        let t: Vec<String> = self.translation.iter().map(|r| r.to_string()).collect();
        s.serialize_field("t", &t)?;
        s.end()
    }
}

impl<'de> Deserialize<'de> for AffineIso3 {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            linear: String,
            t: Vec<String>,
        }
        let raw = Raw::deserialize(deserializer)?;
        let body = raw
            .linear
            .trim()
            .strip_prefix('[')
            .and_then(|s| s.strip_suffix(']'))
            .ok_or_else(|| D::Error::custom("field \"linear\": expected \"[+,-,-]\" syntax"))?;
        let mut signs = [0i8; 3];
        let parts: Vec<&str> = body.split(',').map(str::trim).collect();
        if parts.len() != 3 {
            return Err(D::Error::custom("field \"linear\": expected three signs"));
        }
        for (i, p) in parts.iter().enumerate() {
            signs[i] = match *p {
                "+" | "+1" | "1" => 1,
                "-" | "-1" => -1,
                other => {
                    return Err(D::Error::custom(format!(
                        "field \"linear\": bad sign \"{other}\""
                    )))
                }
            };
        }
        let linear =
            SignDiag::new(signs).map_err(|e| D::Error::custom(format!("field \"linear\": {e}")))?;
        if raw.t.len() != 3 {
            return Err(D::Error::custom("field \"t\": expected three rationals"));
        }
        let mut translation = [Rational::zero(), Rational::zero(), Rational::zero()];
        for (i, s) in raw.t.iter().enumerate() {
            translation[i] = parse_rational(s)
                .map_err(|e| D::Error::custom(format!("field \"t\"[{i}]: {e}")))?;
        }
        Ok(AffineIso3 {
            linear,
            translation,
        })
    }
}

pub(crate) fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = num
        .parse()
        .map_err(|_| Error::Parse(format!("bad rational numerator \"{num}\"")))?;
    let d: BigInt = den
        .parse()
        .map_err(|_| Error::Parse(format!("bad rational denominator \"{den}\"")))?;
    if d.is_zero() {
        return Err(Error::Parse("zero denominator".into()));
    }
    Ok(BigRational::new(n, d))
}

/// The two generators of the crystallographic group.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum G1Generator {
    Alpha,
    Beta,
}

pub fn g1_generator(which: G1Generator) -> AffineIso3 {
    match which {
        G1Generator::Alpha => AffineIso3::new(
            SignDiag::new([1, -1, -1]).expect("det +1"),
            [rat2(1, 2), rat(0), rat(0)],
        ),
        G1Generator::Beta => AffineIso3::new(
            SignDiag::new([-1, 1, -1]).expect("det +1"),
            [rat(0), rat2(1, 2), rat2(1, 2)],
        ),
    }
}

/// Free-function alias for [`AffineIso3::compose`].
pub fn affine_compose(f: &AffineIso3, g: &AffineIso3) -> AffineIso3 {
    f.compose(g)
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ElementOrder {
    Finite(u32),
    Infinite,
}

/// Order of an element of the generated group: the identity has order 1 and
/// everything else is torsion-free. For sign-diagonal linear parts a torsion
/// element would have order dividing 4; powers up to 6 are checked anyway.
pub fn g1_element_order(f: &AffineIso3) -> ElementOrder {
    if f.is_identity() {
        return ElementOrder::Finite(1);
    }
    let mut acc = f.clone();
    for m in 2..=6u32 {
        acc = acc.compose(f);
        if acc.is_identity() {
            return ElementOrder::Finite(m);
        }
    }
    ElementOrder::Infinite
}

/// Evaluates a word over `{a, b}` (α, β) into the affine representation.
pub fn g1_eval(word: &ReducedWord) -> Result<AffineIso3> {
    if word.alphabet().rank() != 2 {
        return Err(Error::InvalidArgument(
            "g1_eval needs a word over the rank-2 alphabet {a, b}".into(),
        ));
    }
    let alpha = g1_generator(G1Generator::Alpha);
    let beta = g1_generator(G1Generator::Beta);
    let mut acc = AffineIso3::identity();
    for (g, s) in word.letters() {
        let gen = match g {
            0 => &alpha,
            _ => &beta,
        };
        let step = if s > 0 { gen.clone() } else { gen.inverse() };
        acc = acc.compose(&step);
    }
    Ok(acc)
}

/// Enumerates the closed ball of the given radius in the generators
/// `α^{±1}, β^{±1}` (distinct elements only).
pub fn g1_ball(radius: u32) -> Vec<AffineIso3> {
    let alpha = g1_generator(G1Generator::Alpha);
    let beta = g1_generator(G1Generator::Beta);
    let gens = [alpha.clone(), alpha.inverse(), beta.clone(), beta.inverse()];
    let mut seen = std::collections::HashSet::new();
    let mut frontier = vec![AffineIso3::identity()];
    seen.insert(AffineIso3::identity());
    for _ in 0..radius {
        let mut next = Vec::new();
        for f in &frontier {
            for g in &gens {
                let fg = f.compose(g);
                if seen.insert(fg.clone()) {
                    next.push(fg);
                }
            }
        }
        frontier = next;
    }
    seen.into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::free_words::Alphabet;

    fn alpha() -> AffineIso3 {
        g1_generator(G1Generator::Alpha)
    }

    fn beta() -> AffineIso3 {
        g1_generator(G1Generator::Beta)
    }

    fn translation(x: i64, y: i64, z: i64) -> AffineIso3 {
        AffineIso3::new(SignDiag::IDENTITY, [rat(x), rat(y), rat(z)])
    }

    #[test]
    fn alpha_squared_is_a_unit_translation() {
        assert_eq!(alpha().pow(2), translation(1, 0, 0));
        assert_eq!(beta().pow(2), translation(0, 1, 0));
    }

    #[test]
    fn defining_relations_hold_exactly() {
        let a2 = alpha().pow(2);
        let b2 = beta().pow(2);
        let conj_a2 = beta().compose(&a2).compose(&beta().inverse());
        assert_eq!(conj_a2, a2.inverse());
        let conj_b2 = alpha().compose(&b2).compose(&alpha().inverse());
        assert_eq!(conj_b2, b2.inverse());
    }

    #[test]
    fn alpha_beta_composition() {
        let ab = alpha().compose(&beta());
        assert_eq!(ab.linear(), SignDiag::new([-1, -1, 1]).unwrap());
        assert_eq!(ab.translation(), &[rat2(1, 2), rat2(-1, 2), rat2(-1, 2)]);
        assert_eq!(ab.pow(2), translation(0, 0, -1));
    }

    #[test]
    fn compose_identity_and_inverse() {
        let f = alpha().compose(&beta()).compose(&alpha());
        assert_eq!(f.compose(&AffineIso3::identity()), f);
        assert!(f.compose(&f.inverse()).is_identity());
        assert!(f.inverse().compose(&f).is_identity());
    }

    #[test]
    fn element_orders() {
        assert_eq!(
            g1_element_order(&AffineIso3::identity()),
            ElementOrder::Finite(1)
        );
        assert_eq!(g1_element_order(&alpha()), ElementOrder::Infinite);
        assert_eq!(g1_element_order(&beta()), ElementOrder::Infinite);
    }

    #[test]
    fn ball_has_no_torsion_and_half_integer_translations() {
        let two = BigInt::from(2);
        for f in g1_ball(6) {
            if !f.is_identity() {
                assert_eq!(g1_element_order(&f), ElementOrder::Infinite, "{f}");
            }
            for t in f.translation() {
                // reduced denominators divide 2
                assert!(
                    t.denom() == &BigInt::from(1) || t.denom() == &two,
                    "translation {t} is off the half-integer lattice"
                );
            }
        }
    }

    #[test]
    fn index_four_translation_subgroup_is_free_abelian_rank_3() {
        // generated by α², β², (αβ)²
        let gens = [
            alpha().pow(2),
            beta().pow(2),
            alpha().compose(&beta()).pow(2),
        ];
        let mut seen = std::collections::HashMap::new();
        let mut frontier = vec![(AffineIso3::identity(), [0i64; 3])];
        seen.insert(AffineIso3::identity(), [0i64; 3]);
        for _ in 0..6 {
            let mut next = Vec::new();
            for (f, exps) in &frontier {
                for (i, g) in gens.iter().enumerate() {
                    for (h, step) in [(f.compose(g), 1i64), (f.compose(&g.inverse()), -1)] {
                        let mut e = *exps;
                        e[i] += step;
                        assert!(h.is_pure_translation(), "{h}");
                        match seen.get(&h) {
                            // injectivity: same isometry must mean same exponents
                            Some(prev) => assert_eq!(prev, &e),
                            None => {
                                seen.insert(h.clone(), e);
                                next.push((h, e));
                            }
                        }
                    }
                }
            }
            frontier = next;
        }
        // commutativity on the sample
        for g in &gens {
            for h in &gens {
                assert_eq!(g.compose(h), h.compose(g));
            }
        }
    }

    #[test]
    fn eval_words() {
        let word = ReducedWord::parse(&Alphabet::g1_raw(), "ba^2b^-1").unwrap();
        assert_eq!(g1_eval(&word).unwrap(), translation(-1, 0, 0));
    }

    #[test]
    fn serde_round_trip() {
        let f = alpha().compose(&beta());
        let json = serde_json::to_string(&f).unwrap();
        assert_eq!(json, r#"{"linear":"[-,-,+]","t":["1/2","-1/2","-1/2"]}"#);
        let back: AffineIso3 = serde_json::from_str(&json).unwrap();
        assert_eq!(back, f);
    }
}
