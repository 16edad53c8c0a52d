//! Cyclic orders of `{0,1,2,3,4}` labelling the extra conics on a
//! Kummer-Hessian, and their incidences with the lines `l_ij` and nodes
//! `p_ijk` of the pentahedron.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hessian::{LineLabel, NodeLabel};
use crate::kummer::{standard_hexad, TwoTorsionLabel};

/// An oriented cyclic order, stored rotated so that it starts with `0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct CyclicOrder([usize; 5]);

impl CyclicOrder {
    pub fn new(seq: [usize; 5]) -> Result<Self> {
        let mut seen = [false; 5];
        for &i in &seq {
            if i > 4 || seen[i] {
                return Err(Error::InvalidCyclicOrder(seq.iter().join("")));
            }
            seen[i] = true;
        }
        let start = seq.iter().position(|&i| i == 0).expect("0 present");
        Ok(CyclicOrder(std::array::from_fn(|k| seq[(start + k) % 5])))
    }

    pub fn sequence(&self) -> [usize; 5] {
        self.0
    }

    /// All 24 oriented cyclic orders.
    pub fn all() -> Vec<CyclicOrder> {
        (1..5)
            .permutations(4)
            .map(|p| CyclicOrder([0, p[0], p[1], p[2], p[3]]))
            .collect()
    }

    pub fn reverse(&self) -> CyclicOrder {
        let s = self.0;
        CyclicOrder([s[0], s[4], s[3], s[2], s[1]])
    }

    /// The class of the order up to reversal, represented by the
    /// lexicographically smaller of the two.
    pub fn unoriented(&self) -> CyclicOrder {
        (*self).min(self.reverse())
    }

    /// `(ijklm) -> (ikmjl)`: every second element.
    pub fn residual(&self) -> CyclicOrder {
        let s = self.0;
        CyclicOrder([s[0], s[2], s[4], s[1], s[3]])
    }

    /// Image under a relabelling `i -> perm[i]`.
    pub fn relabel(&self, perm: &[usize]) -> CyclicOrder {
        CyclicOrder::new(self.0.map(|i| perm[i])).expect("permutation")
    }

    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        (0..5).any(|k| {
            let (x, y) = (self.0[k], self.0[(k + 1) % 5]);
            (x, y) == (i, j) || (x, y) == (j, i)
        })
    }

    /// The five lines `l_ij` with `i`, `j` adjacent.
    pub fn met_lines(&self) -> BTreeSet<LineLabel> {
        (0..5)
            .map(|k| LineLabel::new(self.0[k], self.0[(k + 1) % 5]).expect("distinct"))
            .collect()
    }
}

impl fmt::Display for CyclicOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.0.iter().join(""))
    }
}

impl FromStr for CyclicOrder {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidCyclicOrder(s.to_string());
        let body = s.trim().trim_start_matches('(').trim_end_matches(')');
        let digits: Vec<usize> = body
            .chars()
            .map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(bad))
            .collect::<Result<_>>()?;
        let seq: [usize; 5] = digits.try_into().map_err(|_| bad())?;
        CyclicOrder::new(seq).map_err(|_| bad())
    }
}

impl TryFrom<String> for CyclicOrder {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<CyclicOrder> for String {
    fn from(c: CyclicOrder) -> String {
        c.0.iter().join("")
    }
}

pub fn residual_order(c: CyclicOrder) -> CyclicOrder {
    c.residual()
}

pub fn conic_meets_line(c: CyclicOrder, l: LineLabel) -> bool {
    let [i, j] = l.indices();
    c.adjacent(i, j)
}

/// `2` if the three indices of the node are consecutive in `c`, else `1`:
/// the number of lines through the node met by the conic.
pub fn node_incidence_profile(c: CyclicOrder, n: NodeLabel) -> usize {
    let [i, j, k] = n.indices();
    let consecutive = (0..5).any(|s| {
        let window: BTreeSet<usize> = (0..3).map(|o| c.0[(s + o) % 5]).collect();
        window == BTreeSet::from([i, j, k])
    });
    if consecutive {
        2
    } else {
        1
    }
}

fn is_even(perm: &[usize]) -> bool {
    let inversions = (0..perm.len())
        .tuple_combinations()
        .filter(|&(a, b)| perm[a] > perm[b])
        .count();
    inversions % 2 == 0
}

/// Orbits of the alternating group on the given set of orders, after
/// mapping each image through `class` (e.g. [`CyclicOrder::unoriented`]).
fn a5_orbits_of(items: &[CyclicOrder], class: impl Fn(&CyclicOrder) -> CyclicOrder) -> Vec<BTreeSet<CyclicOrder>> {
    let evens: Vec<Vec<usize>> = (0..5).permutations(5).filter(|p| is_even(p)).collect();
    let mut remaining: BTreeSet<CyclicOrder> = items.iter().map(&class).collect();
    let mut orbits = Vec::new();
    while let Some(&seed) = remaining.iter().next() {
        let orbit: BTreeSet<CyclicOrder> = evens.iter().map(|p| class(&seed.relabel(p))).collect();
        remaining.retain(|c| !orbit.contains(c));
        orbits.push(orbit);
    }
    orbits
}

/// The two orbits of twelve oriented orders.
pub fn a5_orbits_oriented() -> Vec<BTreeSet<CyclicOrder>> {
    a5_orbits_of(&CyclicOrder::all(), |c| *c)
}

/// The two orbits of six orders up to reversal.
pub fn a5_orbits() -> Vec<BTreeSet<CyclicOrder>> {
    a5_orbits_of(&CyclicOrder::all(), CyclicOrder::unoriented)
}

/// The twelve orders up to reversal.
pub fn unoriented_orders() -> BTreeSet<CyclicOrder> {
    CyclicOrder::all().iter().map(CyclicOrder::unoriented).collect()
}

/// The conics through the points of the standard hexad and their labels.
pub fn conic_labels_standard() -> Vec<(TwoTorsionLabel, CyclicOrder)> {
    let table = [
        ("0", "02413"),
        ("bc", "03214"),
        ("cd", "01432"),
        ("de", "04312"),
        ("ef", "01324"),
        ("bf", "03421"),
    ];
    let labels: Vec<(TwoTorsionLabel, CyclicOrder)> = table
        .iter()
        .map(|(p, c)| (p.parse().expect("valid point"), c.parse().expect("valid order")))
        .collect();
    debug_assert!(labels.iter().all(|(p, _)| standard_hexad().contains(*p)));
    labels
}
