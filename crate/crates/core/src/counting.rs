//! Exact counts of shortest properly coloured paths.
//!
//! A shortest proper path flips every differing dimension of the surplus
//! class exactly once, in any order, and spends the remaining `m` flips of the
//! other colour on the deficit class. The deficit flips form a word over the
//! `l` deficit dimensions in which the `d` differing ones occur an odd number
//! of times and every other dimension an even number of times. Hence
//!
//! ```text
//! pp(u, v) = (2 - gamma) * max(o, t)! * a(l, d, m),   m = max(o, t) - gamma
//! ```
//!
//! where `a` is the parity-constrained word count and `2 - gamma` counts the
//! colours a path may start with. All arithmetic is exact.

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::coloring::Coloring;
use crate::error::{Error, Result};
use crate::metrics::{pair_profile, PairProfile};
use crate::vertex::Vertex;

/// An exact nonnegative count. Serialized as a decimal string.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct PathCount(BigUint);

impl PathCount {
    pub fn zero() -> Self {
        PathCount(BigUint::zero())
    }

    pub fn one() -> Self {
        PathCount(BigUint::one())
    }

    pub fn value(&self) -> &BigUint {
        &self.0
    }

    pub fn into_inner(self) -> BigUint {
        self.0
    }

    pub fn to_u64(&self) -> Option<u64> {
        self.0.to_u64()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
}

impl From<BigUint> for PathCount {
    fn from(v: BigUint) -> Self {
        PathCount(v)
    }
}

impl From<u64> for PathCount {
    fn from(v: u64) -> Self {
        PathCount(BigUint::from(v))
    }
}

impl PartialEq<u64> for PathCount {
    fn eq(&self, other: &u64) -> bool {
        self.0 == BigUint::from(*other)
    }
}

impl PartialOrd<u64> for PathCount {
    fn partial_cmp(&self, other: &u64) -> Option<std::cmp::Ordering> {
        Some(self.0.cmp(&BigUint::from(*other)))
    }
}

impl fmt::Display for PathCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl FromStr for PathCount {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if let Some(pos) = s.find(|c: char| !c.is_ascii_digit()) {
            return Err(Error::parse(s, pos, "expected a decimal digit"));
        }
        s.parse::<BigUint>()
            .map(PathCount)
            .map_err(|e| Error::parse(s, 0, e.to_string()))
    }
}

impl Serialize for PathCount {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(&self.0)
    }
}

impl<'de> Deserialize<'de> for PathCount {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Length-`m` words over an `l`-letter alphabet in which the first `d`
/// letters occur an odd number of times and the rest an even number of times.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct WordConstraint {
    l: usize,
    d: usize,
    m: usize,
}

impl WordConstraint {
    pub fn new(l: usize, d: usize, m: usize) -> Result<Self> {
        if d > l {
            return Err(Error::InvalidWordConstraint(format!(
                "{d} odd letters cannot fit an alphabet of {l}"
            )));
        }
        Ok(WordConstraint { l, d, m })
    }

    pub fn alphabet(&self) -> usize {
        self.l
    }

    pub fn odd_letters(&self) -> usize {
        self.d
    }

    pub fn len(&self) -> usize {
        self.m
    }

    pub fn is_empty(&self) -> bool {
        self.m == 0
    }

    /// Some word exists iff `m >= d` and `m - d` is even (and, for `l = 0`,
    /// `m = 0`).
    pub fn is_satisfiable(&self) -> bool {
        self.m >= self.d && (self.m - self.d).is_multiple_of(2) && (self.l > 0 || self.m == 0)
    }
}

/// `a(l, d, m)` as the sum of multinomials `m! / (k_1! ... k_l!)` over
/// compositions `k_1 + ... + k_l = m` with `k_i` odd for `i <= d` and even
/// otherwise.
pub fn word_count_sum(w: &WordConstraint) -> PathCount {
    // Multinomial built letter by letter as a product of binomials.
    fn go(letter: usize, remaining: usize, w: &WordConstraint, binom: &[Vec<BigUint>]) -> BigUint {
        if letter == w.l {
            return if remaining == 0 {
                BigUint::one()
            } else {
                BigUint::zero()
            };
        }
        let parity = usize::from(letter < w.d);
        let mut total = BigUint::zero();
        let mut k = parity;
        while k <= remaining {
            let rest = go(letter + 1, remaining - k, w, binom);
            if !rest.is_zero() {
                total += &binom[remaining][k] * rest;
            }
            k += 2;
        }
        total
    }
    let binom = pascal(w.m);
    PathCount(go(0, w.m, w, &binom))
}

/// `a(l, d, m)` from the closed form
/// `2^-l * sum_{i<=d} sum_{j<=l-d} (-1)^(d-i) C(d,i) C(l-d,j) (2i+2j-l)^m`.
///
/// # Panics
/// If the double sum is not divisible by `2^l`, which would be a bug here.
pub fn word_count_closed(w: &WordConstraint) -> PathCount {
    let raw = closed_form_numerator(w);
    let divisor = BigInt::one() << w.l;
    let remainder = &raw % &divisor;
    assert!(
        remainder.is_zero(),
        "closed-form sum {raw} not divisible by 2^{} for {w:?}",
        w.l
    );
    let quotient = raw / divisor;
    match quotient.to_biguint() {
        Some(q) => PathCount(q),
        None => panic!("closed-form count is negative for {w:?}"),
    }
}

/// The undivided double sum of the closed form.
pub fn closed_form_numerator(w: &WordConstraint) -> BigInt {
    let (l, d, m) = (w.l, w.d, w.m);
    let row_d = binomial_row(d);
    let row_rest = binomial_row(l - d);
    let exp = u32::try_from(m).expect("word length fits in u32");
    let mut total = BigInt::zero();
    for (i, ci) in row_d.iter().enumerate() {
        for (j, cj) in row_rest.iter().enumerate() {
            let base = 2 * (i + j) as i64 - l as i64;
            let mut term = BigInt::from(base).pow(exp) * BigInt::from_biguint(Sign::Plus, ci * cj);
            if (d - i) % 2 == 1 {
                term = -term;
            }
            total += term;
        }
    }
    total
}

/// How many flips the deficit side receives.
///
/// `SurplusMinusGamma` is the count realised by actual shortest proper paths.
/// `HalfDistanceCeil` sets it to `ceil(pd / 2)`, which yields zero whenever
/// `gamma = 1` and is kept only as a negative control for the verifier.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum DeficitLength {
    #[default]
    SurplusMinusGamma,
    HalfDistanceCeil,
}

impl DeficitLength {
    pub fn flips(self, profile: &PairProfile) -> usize {
        match self {
            DeficitLength::SurplusMinusGamma => profile.m,
            DeficitLength::HalfDistanceCeil => profile.pd.div_ceil(2),
        }
    }
}

/// Shortest proper path count determined by a pair profile alone.
pub fn count_for_profile(profile: &PairProfile) -> PathCount {
    count_for_profile_with(profile, DeficitLength::default())
}

pub fn count_for_profile_with(profile: &PairProfile, deficit: DeficitLength) -> PathCount {
    if profile.o + profile.t == 0 {
        return PathCount::one();
    }
    let w = WordConstraint::new(profile.deficit_l, profile.deficit_d, deficit.flips(profile))
        .expect("deficit differences never exceed the deficit class size");
    let words = word_count_closed(&w).into_inner();
    let starts = BigUint::from((2 - profile.gamma) as u64);
    PathCount(starts * factorial(profile.surplus) * words)
}

/// Number of distinct shortest properly coloured paths from `u` to `v`.
/// The empty path makes this 1 when `u == v`.
pub fn count_shortest_proper_paths(u: &Vertex, v: &Vertex, c: &Coloring) -> Result<PathCount> {
    Ok(count_for_profile(&pair_profile(u, v, c)?))
}

/// `(2 - gamma) t!` for the `(1)`-colouring (1 for adjacent pairs).
/// Computed independently of the word count; used as a regression reference.
pub fn j1_reference_count(u: &Vertex, v: &Vertex, c: &Coloring) -> Result<PathCount> {
    if c.class1() != [1] {
        return Err(Error::InvalidColoring(format!(
            "the reference count needs class 1 = {{1}}, got {c}"
        )));
    }
    u.same_dims(v)?;
    c.check_vertex(u)?;
    let first = usize::from(u.bit(1) != v.bit(1));
    let t = (2..=u.dims()).filter(|&d| u.bit(d) != v.bit(d)).count();
    if t == 0 {
        return Ok(PathCount::one());
    }
    let gamma = (first + t) % 2;
    Ok(PathCount(BigUint::from((2 - gamma) as u64) * factorial(t)))
}

pub fn factorial(n: usize) -> BigUint {
    (1..=n as u64).fold(BigUint::one(), |acc, k| acc * k)
}

fn binomial_row(n: usize) -> Vec<BigUint> {
    let mut row = vec![BigUint::one()];
    for k in 0..n {
        let next = &row[k] * (n - k) / (k + 1);
        row.push(next);
    }
    row
}

fn pascal(n: usize) -> Vec<Vec<BigUint>> {
    (0..=n).map(binomial_row).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn wc(l: usize, d: usize, m: usize) -> WordConstraint {
        WordConstraint::new(l, d, m).unwrap()
    }

    /// Counts words directly, one letter sequence at a time.
    fn brute_words(l: usize, d: usize, m: usize) -> u64 {
        let total = (l as u64).pow(m as u32);
        (0..total)
            .filter(|&code| {
                let mut counts = vec![0usize; l];
                let mut c = code;
                for _ in 0..m {
                    counts[(c % l as u64) as usize] += 1;
                    c /= l as u64;
                }
                counts
                    .iter()
                    .enumerate()
                    .all(|(i, k)| (k % 2 == 1) == (i < d))
            })
            .count() as u64
    }

    #[test]
    fn frozen_word_counts() {
        // Values below were produced by `brute_words`.
        assert_eq!(brute_words(3, 1, 3), 7);
        assert_eq!(brute_words(2, 0, 2), 2);
        assert_eq!(brute_words(4, 2, 2), 2);
        for (l, d, m, expect) in [(3, 1, 3, 7u64), (2, 0, 2, 2), (4, 2, 2, 2), (1, 0, 0, 1)] {
            assert_eq!(word_count_sum(&wc(l, d, m)), expect, "sum ({l},{d},{m})");
            assert_eq!(
                word_count_closed(&wc(l, d, m)),
                expect,
                "closed ({l},{d},{m})"
            );
        }
    }

    #[test]
    fn both_forms_match_brute_force_on_small_grid() {
        for l in 1..=4 {
            for d in 0..=l {
                for m in 0..=7 {
                    let expect = brute_words(l, d, m);
                    assert_eq!(word_count_sum(&wc(l, d, m)), expect);
                    assert_eq!(word_count_closed(&wc(l, d, m)), expect);
                }
            }
        }
    }

    #[test]
    fn parity_obstruction() {
        assert!(word_count_sum(&wc(4, 1, 2)).is_zero());
        assert!(word_count_closed(&wc(4, 1, 2)).is_zero());
        assert!(word_count_sum(&wc(4, 3, 1)).is_zero());
        assert!(!wc(4, 3, 1).is_satisfiable());
    }

    #[test]
    fn empty_alphabet() {
        assert_eq!(word_count_sum(&wc(0, 0, 0)), 1);
        assert_eq!(word_count_closed(&wc(0, 0, 0)), 1);
        assert!(word_count_sum(&wc(0, 0, 2)).is_zero());
        assert!(word_count_closed(&wc(0, 0, 2)).is_zero());
    }

    #[test]
    fn rejects_too_many_odd_letters() {
        assert!(matches!(
            WordConstraint::new(2, 3, 3),
            Err(Error::InvalidWordConstraint(_))
        ));
    }

    fn vx(s: &str) -> Vertex {
        s.parse().unwrap()
    }

    #[test]
    fn path_count_examples() {
        let cases = [
            (7, vec![1, 2, 3, 4], "0101000", "0011111", 12u64),
            (3, vec![1], "111", "000", 2),
            (4, vec![1, 2], "1111", "0000", 8),
            (5, vec![1, 2], "11100", "00000", 2),
            (6, vec![1, 2, 3], "111100", "000000", 84),
            (5, vec![1, 2], "01000", "00000", 1),
            (5, vec![1, 2], "00001", "00000", 1),
        ];
        for (n, class1, a, b, expect) in cases {
            let c = Coloring::from_class1(n, class1).unwrap();
            assert_eq!(
                count_shortest_proper_paths(&vx(a), &vx(b), &c).unwrap(),
                expect,
                "{a}->{b}"
            );
        }
    }

    #[test]
    fn identical_pair_counts_the_empty_path() {
        let c = Coloring::prefix(4, 2).unwrap();
        assert_eq!(
            count_shortest_proper_paths(&vx("1010"), &vx("1010"), &c).unwrap(),
            1
        );
    }

    #[test]
    fn j1_reference() {
        let c = Coloring::prefix(3, 1).unwrap();
        assert_eq!(j1_reference_count(&vx("111"), &vx("000"), &c).unwrap(), 2);
        assert_eq!(j1_reference_count(&vx("100"), &vx("000"), &c).unwrap(), 1);
        let c4 = Coloring::prefix(4, 1).unwrap();
        assert_eq!(
            j1_reference_count(&vx("0110"), &vx("0000"), &c4).unwrap(),
            4
        );
        assert!(
            j1_reference_count(&vx("0110"), &vx("0000"), &Coloring::prefix(4, 2).unwrap()).is_err()
        );
    }

    #[test]
    fn half_distance_reading_undercounts() {
        let c = Coloring::prefix(3, 1).unwrap();
        let p = pair_profile(&vx("111"), &vx("000"), &c).unwrap();
        assert_eq!(
            count_for_profile_with(&p, DeficitLength::SurplusMinusGamma),
            2
        );
        assert!(count_for_profile_with(&p, DeficitLength::HalfDistanceCeil).is_zero());
    }

    #[test]
    fn path_count_serializes_as_string() {
        let big = PathCount::from(factorial(30));
        let json = serde_json::to_string(&big).unwrap();
        assert_eq!(json, "\"265252859812191058636308480000000\"");
        let back: PathCount = serde_json::from_str(&json).unwrap();
        assert_eq!(back, big);
        assert!(serde_json::from_str::<PathCount>("\"-1\"").is_err());
    }
}
