//! Two-torsion points, tropes and Weber hexads of a Kummer surface, in the
//! model where the branch points are the letters `a..f`.
//!
//! A two-torsion point is an even subset of the letters up to complement,
//! a trope an odd subset up to complement. A point lies on a trope iff the
//! symmetric difference of representatives has one or five letters.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;
use std::sync::LazyLock;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const LETTERS: [char; 6] = ['a', 'b', 'c', 'd', 'e', 'f'];
const ALL: u8 = 0b11_1111;

fn letter_bit(c: char) -> Option<u8> {
    LETTERS.iter().position(|&l| l == c).map(|i| 1 << i)
}

fn mask_string(mask: u8) -> String {
    LETTERS
        .iter()
        .enumerate()
        .filter(|(i, _)| mask & (1 << i) != 0)
        .map(|(_, &c)| c)
        .collect()
}

fn parse_letters(text: &str) -> Option<u8> {
    let mut mask = 0u8;
    for c in text.chars() {
        let bit = letter_bit(c)?;
        if mask & bit != 0 {
            return None;
        }
        mask |= bit;
    }
    Some(mask)
}

/// Applies a permutation of the letters (`perm[i]` is the image of letter `i`).
fn permute_mask(mask: u8, perm: &[usize]) -> u8 {
    (0..6)
        .filter(|i| mask & (1 << i) != 0)
        .fold(0, |acc, i| acc | (1 << perm[i]))
}

/// A point of order dividing two, stored as the smaller of the two
/// complementary even subsets (the empty set is the origin).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct TwoTorsionLabel(u8);

impl TwoTorsionLabel {
    pub const ZERO: TwoTorsionLabel = TwoTorsionLabel(0);

    pub fn from_mask(mask: u8) -> Result<Self> {
        if mask & !ALL != 0 || !mask.count_ones().is_multiple_of(2) {
            return Err(Error::InvalidLabel(mask_string(mask & ALL)));
        }
        Ok(Self::canonical(mask))
    }

    fn canonical(mask: u8) -> Self {
        if mask.count_ones() > 3 {
            TwoTorsionLabel(!mask & ALL)
        } else {
            TwoTorsionLabel(mask)
        }
    }

    pub fn mask(&self) -> u8 {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0 == 0
    }

    pub fn all() -> Vec<TwoTorsionLabel> {
        (0..=ALL)
            .filter(|m| m.count_ones() % 2 == 0)
            .map(Self::canonical)
            .unique()
            .sorted()
            .collect()
    }

    pub fn permute_letters(&self, perm: &[usize]) -> Self {
        Self::canonical(permute_mask(self.0, perm))
    }
}

/// Group law: symmetric difference.
pub fn tt_add(p: TwoTorsionLabel, q: TwoTorsionLabel) -> TwoTorsionLabel {
    TwoTorsionLabel::canonical(p.0 ^ q.0)
}

impl std::ops::Add for TwoTorsionLabel {
    type Output = TwoTorsionLabel;
    fn add(self, rhs: Self) -> Self {
        tt_add(self, rhs)
    }
}

impl fmt::Display for TwoTorsionLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 == 0 {
            f.write_str("0")
        } else {
            f.write_str(&mask_string(self.0))
        }
    }
}

impl FromStr for TwoTorsionLabel {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "0" {
            return Ok(Self::ZERO);
        }
        parse_letters(s)
            .filter(|m| *m != 0)
            .ok_or_else(|| Error::InvalidLabel(s.to_string()))
            .and_then(|m| Self::from_mask(m).map_err(|_| Error::InvalidLabel(s.to_string())))
    }
}

impl TryFrom<String> for TwoTorsionLabel {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<TwoTorsionLabel> for String {
    fn from(p: TwoTorsionLabel) -> String {
        p.to_string()
    }
}

/// A trope, stored as a single letter or a three-letter set without `f`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct TropeLabel(u8);

impl TropeLabel {
    pub fn from_mask(mask: u8) -> Result<Self> {
        if mask & !ALL != 0 || mask.count_ones() % 2 != 1 {
            return Err(Error::InvalidLabel(mask_string(mask & ALL)));
        }
        Ok(Self::canonical(mask))
    }

    fn canonical(mask: u8) -> Self {
        let f_bit = 1 << 5;
        match mask.count_ones() {
            5 => TropeLabel(!mask & ALL),
            3 if mask & f_bit != 0 => TropeLabel(!mask & ALL),
            _ => TropeLabel(mask),
        }
    }

    pub fn mask(&self) -> u8 {
        self.0
    }

    pub fn all() -> Vec<TropeLabel> {
        (0..=ALL)
            .filter(|m| m.count_ones() % 2 == 1)
            .map(Self::canonical)
            .unique()
            .sorted()
            .collect()
    }

    pub fn letter(c: char) -> Result<Self> {
        letter_bit(c)
            .map(TropeLabel)
            .ok_or_else(|| Error::InvalidLabel(c.to_string()))
    }

    pub fn permute_letters(&self, perm: &[usize]) -> Self {
        Self::canonical(permute_mask(self.0, perm))
    }
}

impl fmt::Display for TropeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&mask_string(self.0))
    }
}

impl FromStr for TropeLabel {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_letters(s.trim())
            .and_then(|m| Self::from_mask(m).ok())
            .ok_or_else(|| Error::InvalidLabel(s.to_string()))
    }
}

impl TryFrom<String> for TropeLabel {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<TropeLabel> for String {
    fn from(t: TropeLabel) -> String {
        t.to_string()
    }
}

/// Parses an integer combination of letters such as `b+c-2a`, `b-a`, `0`
/// into letter multiplicities.
fn parse_divisor(expr: &str) -> Result<[i64; 6]> {
    let malformed = || Error::MalformedDivisor(expr.to_string());
    let text: String = expr
        .chars()
        .filter(|c| !c.is_whitespace())
        .map(|c| if c == '\u{2212}' { '-' } else { c })
        .collect();
    let mut coeffs = [0i64; 6];
    if text == "0" {
        return Ok(coeffs);
    }
    if text.is_empty() {
        return Err(malformed());
    }
    let mut rest = text.as_str();
    let mut first = true;
    while !rest.is_empty() {
        let sign = match rest.as_bytes()[0] {
            b'+' => {
                rest = &rest[1..];
                1
            }
            b'-' => {
                rest = &rest[1..];
                -1
            }
            _ if first => 1,
            _ => return Err(malformed()),
        };
        first = false;
        let digits = rest.chars().take_while(char::is_ascii_digit).count();
        let mult: i64 = if digits == 0 {
            1
        } else {
            rest[..digits].parse().map_err(|_| malformed())?
        };
        rest = &rest[digits..];
        let letter = rest.chars().next().ok_or_else(malformed)?;
        let idx = LETTERS.iter().position(|&l| l == letter).ok_or_else(malformed)?;
        coeffs[idx] += sign * mult;
        rest = &rest[letter.len_utf8()..];
    }
    Ok(coeffs)
}

fn odd_letters(coeffs: &[i64; 6]) -> u8 {
    (0..6).filter(|&i| coeffs[i] % 2 != 0).fold(0, |m, i| m | (1 << i))
}

/// `0 -> {}`, `x-a -> {x,a}`, `x+y-2a -> {x,y}`; any degree-zero
/// combination is accepted and reduced by parity.
pub fn divisor_to_label(expr: &str) -> Result<TwoTorsionLabel> {
    let coeffs = parse_divisor(expr)?;
    if coeffs.iter().sum::<i64>() != 0 {
        return Err(Error::MalformedDivisor(expr.to_string()));
    }
    TwoTorsionLabel::from_mask(odd_letters(&coeffs))
}

/// `w -> {w}`, `x+y-a -> {x,y,a}`; degree-one combinations.
pub fn divisor_to_trope(expr: &str) -> Result<TropeLabel> {
    let coeffs = parse_divisor(expr)?;
    if coeffs.iter().sum::<i64>() != 1 {
        return Err(Error::MalformedDivisor(expr.to_string()));
    }
    TropeLabel::from_mask(odd_letters(&coeffs))
}

pub fn incidence(p: TwoTorsionLabel, t: TropeLabel) -> bool {
    matches!((p.0 ^ t.0).count_ones(), 1 | 5)
}

/// The six points on a trope.
pub fn points_on(t: TropeLabel) -> Vec<TwoTorsionLabel> {
    TwoTorsionLabel::all().into_iter().filter(|&p| incidence(p, t)).collect()
}

/// Six distinct two-torsion points, kept sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<TwoTorsionLabel>", into = "Vec<TwoTorsionLabel>")]
pub struct Hexad([TwoTorsionLabel; 6]);

impl Hexad {
    pub fn new(points: impl IntoIterator<Item = TwoTorsionLabel>) -> Result<Self> {
        let set: BTreeSet<TwoTorsionLabel> = points.into_iter().collect();
        let v: Vec<TwoTorsionLabel> = set.into_iter().collect();
        let n = v.len();
        let arr: [TwoTorsionLabel; 6] = v
            .try_into()
            .map_err(|_| Error::InvalidLabel(format!("hexad needs 6 distinct points, got {n}")))?;
        Ok(Hexad(arr))
    }

    /// Parses a comma-separated list such as `0,bc,cd,de,ef,fb`.
    pub fn parse(text: &str) -> Result<Self> {
        let pts: Vec<TwoTorsionLabel> = text.split(',').map(str::parse).collect::<Result<_>>()?;
        if pts.len() != 6 {
            return Err(Error::InvalidLabel(format!("hexad needs 6 points, got {}", pts.len())));
        }
        Self::new(pts)
    }

    pub fn points(&self) -> &[TwoTorsionLabel; 6] {
        &self.0
    }

    pub fn contains(&self, p: TwoTorsionLabel) -> bool {
        self.0.contains(&p)
    }

    pub fn translate(&self, by: TwoTorsionLabel) -> Self {
        Self::new(self.0.iter().map(|&p| p + by)).expect("translation is injective")
    }

    pub fn permute_letters(&self, perm: &[usize]) -> Self {
        Self::new(self.0.iter().map(|p| p.permute_letters(perm))).expect("permutation is injective")
    }
}

impl TryFrom<Vec<TwoTorsionLabel>> for Hexad {
    type Error = Error;
    fn try_from(v: Vec<TwoTorsionLabel>) -> Result<Self> {
        if v.len() != 6 {
            return Err(Error::InvalidLabel(format!("hexad needs 6 points, got {}", v.len())));
        }
        Self::new(v)
    }
}

impl From<Hexad> for Vec<TwoTorsionLabel> {
    fn from(h: Hexad) -> Self {
        h.0.to_vec()
    }
}

impl fmt::Display for Hexad {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0.iter().join(","))
    }
}

/// `{0, bc, cd, de, ef, fb}`.
pub fn standard_hexad() -> Hexad {
    Hexad::parse("0,bc,cd,de,ef,fb").expect("valid")
}

/// Number of hexad points on each trope, in the order of [`TropeLabel::all`].
pub fn incidence_profile(h: &Hexad) -> Vec<(TropeLabel, usize)> {
    TropeLabel::all()
        .into_iter()
        .map(|t| (t, h.0.iter().filter(|&&p| incidence(p, t)).count()))
        .collect()
}

/// Ten tropes through three hexad points and six through one.
pub fn is_weber_hexad(h: &Hexad) -> bool {
    let profile = incidence_profile(h);
    let threes = profile.iter().filter(|(_, c)| *c == 3).count();
    let ones = profile.iter().filter(|(_, c)| *c == 1).count();
    threes == 10 && ones == 6
}

/// The tropes meeting the hexad in one point, with that point.
pub fn single_point_tropes(h: &Hexad) -> Vec<(TropeLabel, TwoTorsionLabel)> {
    TropeLabel::all()
        .into_iter()
        .filter_map(|t| {
            let on: Vec<TwoTorsionLabel> = h.0.iter().copied().filter(|&p| incidence(p, t)).collect();
            (on.len() == 1).then(|| (t, on[0]))
        })
        .collect()
}

static WEBER: LazyLock<Vec<Hexad>> = LazyLock::new(|| {
    TwoTorsionLabel::all()
        .into_iter()
        .combinations(6)
        .map(|c| Hexad::new(c).expect("distinct"))
        .filter(is_weber_hexad)
        .collect()
});

/// All Weber hexads among the `C(16, 6)` six-point subsets, sorted.
pub fn enumerate_weber_hexads() -> &'static [Hexad] {
    &WEBER
}

/// Orbit of `h` under translations and letter permutations, and the size
/// of its stabilizer in that group of order `16 * 720`.
pub fn translation_s6_orbit(h: &Hexad) -> (BTreeSet<Hexad>, usize) {
    let perms: Vec<Vec<usize>> = (0..6).permutations(6).collect();
    let mut orbit = BTreeSet::new();
    let mut stabilizer = 0;
    for t in TwoTorsionLabel::all() {
        for perm in &perms {
            let image = h.permute_letters(perm).translate(t);
            if image == *h {
                stabilizer += 1;
            }
            orbit.insert(image);
        }
    }
    (orbit, stabilizer)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> TwoTorsionLabel {
        s.parse().unwrap()
    }

    #[test]
    fn group_law_examples() {
        assert_eq!(p("ab") + p("ab"), TwoTorsionLabel::ZERO);
        assert_eq!(p("ab") + p("bc"), p("ac"));
        assert_eq!(p("ab") + p("cd"), p("ef"));
        assert_eq!(p("cdef"), p("ab"));
        assert_eq!(TwoTorsionLabel::all().len(), 16);
        assert_eq!(TropeLabel::all().len(), 16);
    }

    #[test]
    fn group_axioms_exhaustive() {
        let all = TwoTorsionLabel::all();
        for &x in &all {
            assert_eq!(x + TwoTorsionLabel::ZERO, x);
            assert_eq!(x + x, TwoTorsionLabel::ZERO);
            for &y in &all {
                assert_eq!(x + y, y + x);
                for &z in &all {
                    assert_eq!((x + y) + z, x + (y + z));
                }
            }
        }
    }

    #[test]
    fn labels_canonical() {
        for t in TwoTorsionLabel::all() {
            assert!(matches!(t.mask().count_ones(), 0 | 2));
        }
        for t in TropeLabel::all() {
            let n = t.mask().count_ones();
            assert!(n == 1 || (n == 3 && t.mask() & (1 << 5) == 0));
        }
        assert_eq!("bcdef".parse::<TropeLabel>().unwrap(), TropeLabel::letter('a').unwrap());
        assert!("abc".parse::<TwoTorsionLabel>().is_err());
        assert!("ab".parse::<TropeLabel>().is_err());
        assert!("gx".parse::<TwoTorsionLabel>().is_err());
    }

    #[test]
    fn divisors() {
        assert_eq!(divisor_to_label("0").unwrap(), TwoTorsionLabel::ZERO);
        assert_eq!(divisor_to_label("b+c−2a").unwrap(), p("bc"));
        assert_eq!(divisor_to_label("b-a").unwrap(), p("ab"));
        assert_eq!(divisor_to_label("f+b-2a").unwrap(), p("bf"));
        assert!(matches!(divisor_to_label("b+c"), Err(Error::MalformedDivisor(_))));
        assert!(matches!(divisor_to_label("b+-a"), Err(Error::MalformedDivisor(_))));
        assert!(matches!(divisor_to_label("q-a"), Err(Error::MalformedDivisor(_))));
        assert_eq!(divisor_to_trope("b+c-a").unwrap(), "abc".parse().unwrap());
        assert_eq!(divisor_to_trope("e").unwrap(), TropeLabel::letter('e').unwrap());
    }

    #[test]
    fn incidence_table() {
        assert!(incidence(TwoTorsionLabel::ZERO, TropeLabel::letter('a').unwrap()));
        for t in TropeLabel::all() {
            assert_eq!(points_on(t).len(), 6);
        }
        for q in TwoTorsionLabel::all() {
            assert_eq!(TropeLabel::all().into_iter().filter(|&t| incidence(q, t)).count(), 6);
        }
    }

    #[test]
    fn standard_hexad_profile() {
        let h = standard_hexad();
        assert!(is_weber_hexad(&h));
        let singles = single_point_tropes(&h);
        assert_eq!(singles.len(), 6);
        let theta_a = TropeLabel::letter('a').unwrap();
        assert!(singles.contains(&(theta_a, TwoTorsionLabel::ZERO)));
        let on_a = Hexad::new(points_on(theta_a)).unwrap();
        assert!(!is_weber_hexad(&on_a));
        assert!(is_weber_hexad(&h.translate(p("ab"))));
    }

    #[test]
    fn weber_count_and_closure() {
        let all = enumerate_weber_hexads();
        assert_eq!(all.len(), 192);
        let (orbit, stab) = translation_s6_orbit(&standard_hexad());
        assert_eq!(orbit.len(), 192);
        assert_eq!(stab, 16 * 720 / 192);
        assert!(orbit.iter().eq(all.iter()));
    }

    #[test]
    fn hexad_json() {
        let h = standard_hexad();
        let j = serde_json::to_string(&h).unwrap();
        assert_eq!(j, r#"["0","bc","cd","de","bf","ef"]"#);
        assert_eq!(serde_json::from_str::<Hexad>(&j).unwrap(), h);
        assert!(Hexad::parse("0,bc,bc,de,ef,fb").is_err());
    }
}
